//! Finite digraph templates: structural predicates, strong components,
//! ergodicity thresholds, walk powers and the three-way template classification.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

/// On-disk form: `{"m": 2, "edges": [[0, 1], [1, 0]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DigraphFile {
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    Forward,
    Backward,
}

/// A nonempty pattern of forward and backward arrows, written as e.g. `"ffb"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbstractWalk(Vec<Step>);

impl AbstractWalk {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidWalk(String::new()));
        }
        Ok(Self(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }
}

impl FromStr for AbstractWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'f' | 'F' => Ok(Step::Forward),
                'b' | 'B' => Ok(Step::Backward),
                _ => Err(Error::InvalidWalk(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps).map_err(|_| Error::InvalidWalk(s.to_string()))
    }
}

impl std::fmt::Display for AbstractWalk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Step::Forward => "f",
                Step::Backward => "b",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TemplateClass {
    Loop,
    ErgodicNoLoop,
    NonErgodic,
}

/// A vertex with closed walks of every length `>= threshold`; the threshold
/// is the least one that works at that vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErgodicWitness {
    pub vertex: usize,
    pub threshold: usize,
}

/// Upper bound on the exponent of a primitive 0/1 matrix of order `m`.
pub fn wielandt_bound(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        m * m + 2 - 2 * m
    }
}

impl Digraph {
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = vec![Vec::new(); m];
        let mut inn = vec![Vec::new(); m];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= m {
                    return Err(Error::VertexOutOfRange { vertex: x, n: m });
                }
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0]));
            }
        }
        for list in &mut inn {
            list.sort_unstable();
        }
        Ok(Self { out, inn })
    }

    pub fn from_file(file: &DigraphFile) -> Result<Self> {
        Self::new(file.m, file.edges.iter().map(|e| (e[0], e[1])))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DigraphFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> DigraphFile {
        DigraphFile {
            m: self.len(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("digraph file serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph H {\n");
        for v in 0..self.len() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -> {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Least vertex carrying a loop.
    pub fn first_loop(&self) -> Option<usize> {
        (0..self.len()).find(|&v| self.has_edge(v, v))
    }

    pub fn has_loop(&self) -> bool {
        self.first_loop().is_some()
    }

    pub fn is_sinkless(&self) -> bool {
        self.out.iter().all(|o| !o.is_empty())
    }

    pub fn is_sourceless(&self) -> bool {
        self.inn.iter().all(|i| !i.is_empty())
    }

    pub fn ensure_sinkless(&self) -> Result<()> {
        match self.out.iter().position(Vec::is_empty) {
            None => Ok(()),
            Some(v) => Err(Error::NotSinkless(v)),
        }
    }

    /// Strong components (iterative Tarjan), ids canonical by least vertex.
    pub fn scc(&self) -> Partition {
        let m = self.len();
        const UNVISITED: usize = usize::MAX;
        let mut index = vec![UNVISITED; m];
        let mut low = vec![0; m];
        let mut on_stack = vec![false; m];
        let mut stack = Vec::new();
        let mut root_of = vec![0; m];
        let mut counter = 0;

        for start in 0..m {
            if index[start] != UNVISITED {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(start, 0)];
            index[start] = counter;
            low[start] = counter;
            counter += 1;
            stack.push(start);
            on_stack[start] = true;

            while let Some(&mut (v, ref mut next)) = call.last_mut() {
                if *next < self.out[v].len() {
                    let w = self.out[v][*next];
                    *next += 1;
                    if index[w] == UNVISITED {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut members = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            members.push(w);
                            if w == v {
                                break;
                            }
                        }
                        let least = *members.iter().min().expect("nonempty component");
                        for w in members {
                            root_of[w] = least;
                        }
                    }
                }
            }
        }
        Partition::from_keys(root_of.into_iter().map(Some))
    }

    pub fn is_strongly_connected(&self) -> bool {
        !self.is_empty() && self.scc().num_classes() == 1
    }

    /// Induced subdigraph on `vertices` (sorted); vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut local = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = vertices.iter().flat_map(|&u| {
            let local = &local;
            self.out[u]
                .iter()
                .filter(move |&&v| local[v] != usize::MAX)
                .map(move |&v| (local[u], local[v]))
        });
        Digraph::new(vertices.len(), edges.collect::<Vec<_>>()).expect("induced subgraph is valid")
    }

    fn out_bits(&self) -> Vec<BitSet> {
        self.out
            .iter()
            .map(|o| {
                let mut b = BitSet::new(self.len());
                for &v in o {
                    b.insert(v);
                }
                b
            })
            .collect()
    }

    fn in_bits(&self) -> Vec<BitSet> {
        self.inn
            .iter()
            .map(|i| {
                let mut b = BitSet::new(self.len());
                for &u in i {
                    b.insert(u);
                }
                b
            })
            .collect()
    }

    fn advance(rows: &[BitSet], set: &BitSet) -> BitSet {
        let mut next = BitSet::new(rows.len());
        for u in set.iter() {
            next.union_with(&rows[u]);
        }
        next
    }

    /// Sets `R_0, R_1, …, R_len` of vertices reachable from `start` by walks of exactly `k` steps.
    pub fn reachable_by_length(&self, start: usize, len: usize) -> Vec<BitSet> {
        let rows = self.out_bits();
        let mut out = Vec::with_capacity(len + 1);
        out.push(BitSet::singleton(self.len(), start));
        for k in 0..len {
            let next = Self::advance(&rows, &out[k]);
            out.push(next);
        }
        out
    }

    /// Least `k0` such that `v` has closed walks of every length `>= k0`.
    ///
    /// Closed-walk lengths at a vertex of an aperiodic strong component are
    /// all present from the Wielandt bound on; a periodic component misses a
    /// residue inside any window of `m + 1` consecutive lengths.
    pub fn closed_walk_threshold(&self, v: usize) -> Option<usize> {
        let bound = wielandt_bound(self.len());
        let reach = self.reachable_by_length(v, bound + self.len());
        if (bound..=bound + self.len()).any(|k| !reach[k].contains(v)) {
            return None;
        }
        Some(
            (0..bound)
                .rev()
                .find(|&k| !reach[k].contains(v))
                .map_or(0, |k| k + 1),
        )
    }

    /// Witness with the least threshold over all vertices, ties to the least vertex.
    pub fn is_ergodic(&self) -> Option<ErgodicWitness> {
        (0..self.len())
            .filter_map(|v| {
                self.closed_walk_threshold(v)
                    .map(|threshold| ErgodicWitness { vertex: v, threshold })
            })
            .min_by_key(|w| (w.threshold, w.vertex))
    }

    /// Least `l0` such that every vertex is reachable from `v0` by walks of every length `>= l0`.
    pub fn ell_0(&self, v0: usize) -> Result<usize> {
        if v0 >= self.len() {
            return Err(Error::VertexOutOfRange { vertex: v0, n: self.len() });
        }
        if !self.is_strongly_connected() {
            return Err(Error::NotStronglyConnected);
        }
        if self.closed_walk_threshold(v0).is_none() {
            return Err(Error::NotErgodic(v0));
        }
        // In a strongly connected digraph every vertex has an in-neighbor, so
        // once R_l is everything it stays everything.
        let bound = wielandt_bound(self.len()) + self.len();
        let rows = self.out_bits();
        let mut reach = BitSet::singleton(self.len(), v0);
        for l in 0..=bound {
            if reach.is_full() {
                return Ok(l);
            }
            reach = Self::advance(&rows, &reach);
        }
        Err(Error::NotErgodic(v0))
    }

    /// Digraph with an edge `x -> y` whenever the walk pattern can be realized from `x` to `y`.
    pub fn power_walk(&self, walk: &AbstractWalk) -> Digraph {
        let fwd = self.out_bits();
        let bwd = self.in_bits();
        let m = self.len();
        let mut rel: Vec<BitSet> = (0..m).map(|x| BitSet::singleton(m, x)).collect();
        for step in walk.steps() {
            let rows = match step {
                Step::Forward => &fwd,
                Step::Backward => &bwd,
            };
            rel = rel.iter().map(|r| Self::advance(rows, r)).collect();
        }
        let edges: Vec<(usize, usize)> = rel
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().map(move |y| (x, y)))
            .collect();
        Digraph::new(m, edges).expect("relation has no duplicates")
    }

    pub fn classify(&self) -> Result<TemplateClass> {
        self.ensure_sinkless()?;
        Ok(if self.has_loop() {
            TemplateClass::Loop
        } else if self.is_ergodic().is_some() {
            TemplateClass::ErgodicNoLoop
        } else {
            TemplateClass::NonErgodic
        })
    }

    /// Lexicographically least walk `u = p_0, …, p_len = w`, if one exists.
    pub fn path_of_length(&self, u: usize, w: usize, len: usize) -> Option<Vec<usize>> {
        let m = self.len();
        let inn = self.in_bits();
        // can[k]: vertices with a walk of exactly k steps ending at w.
        let mut can = Vec::with_capacity(len + 1);
        can.push(BitSet::singleton(m, w));
        for k in 0..len {
            let next = Self::advance(&inn, &can[k]);
            can.push(next);
        }
        if !can[len].contains(u) {
            return None;
        }
        let mut path = Vec::with_capacity(len + 1);
        path.push(u);
        let mut cur = u;
        for i in 1..=len {
            cur = *self.out[cur]
                .iter()
                .find(|&&v| can[len - i].contains(v))
                .expect("backward table guarantees a continuation");
            path.push(cur);
        }
        Some(path)
    }
}

/// The digraph on `{0..=size}` with edges `k -> k-1` for `k > 0` and `0 -> l` for `l >= r`.
pub fn d_r(r: usize, size: usize) -> Result<Digraph> {
    if r == 0 || size < r + 1 {
        return Err(Error::InvalidDr { r, size });
    }
    let down = (1..=size).map(|k| (k, k - 1));
    let jump = (r..=size).map(|l| (0, l));
    Digraph::new(size + 1, down.chain(jump).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(m: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::new(m, edges.iter().copied()).unwrap()
    }

    /// Vertices 0 (=v0), 1 (=a) on a 2-cycle; 0, 2 (=b), 3 (=c) on a 3-cycle.
    pub(crate) fn two_three() -> Digraph {
        dg(4, &[(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn d_r_examples() {
        let d = d_r(2, 4).unwrap();
        let mut edges: Vec<_> = d.edges().collect();
        edges.sort();
        let mut want = vec![(1, 0), (2, 1), (3, 2), (4, 3), (0, 2), (0, 3), (0, 4)];
        want.sort();
        assert_eq!(edges, want);

        let d1: Vec<_> = d_r(1, 2).unwrap().edges().collect();
        assert_eq!(d1, vec![(0, 1), (0, 2), (1, 0), (2, 1)]);
        assert!(d_r(3, 9).unwrap().is_sinkless());
        assert_eq!(d_r(2, 2).unwrap_err(), Error::InvalidDr { r: 2, size: 2 });
        assert!(d_r(0, 5).is_err());
    }

    #[test]
    fn predicates() {
        let lp = dg(1, &[(0, 0)]);
        assert!(lp.has_loop() && lp.is_sinkless() && lp.is_sourceless());
        let c2 = dg(2, &[(0, 1), (1, 0)]);
        assert!(!c2.has_loop() && c2.is_sinkless() && c2.is_sourceless());
        let e = dg(2, &[(0, 1)]);
        assert!(!e.is_sinkless());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Digraph::new(2, [(0, 1), (0, 1)]).unwrap_err(), Error::DuplicateEdge(0, 1));
        assert!(Digraph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn scc_examples() {
        let g = dg(3, &[(0, 1), (1, 0), (2, 0)]);
        assert_eq!(g.scc().classes(), vec![vec![0, 1], vec![2]]);
        let k3 = dg(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        assert_eq!(k3.scc().num_classes(), 1);
        assert_eq!(dg(3, &[]).scc().num_classes(), 3);
    }

    #[test]
    fn ergodicity() {
        assert_eq!(
            dg(3, &[(0, 1), (1, 2), (2, 2)]).is_ergodic(),
            Some(ErgodicWitness { vertex: 2, threshold: 0 })
        );
        assert_eq!(dg(2, &[(0, 1), (1, 0)]).is_ergodic(), None);
        assert_eq!(two_three().is_ergodic(), Some(ErgodicWitness { vertex: 0, threshold: 2 }));
    }

    #[test]
    fn ell_0_examples() {
        assert_eq!(dg(1, &[(0, 0)]).ell_0(0), Ok(0));
        assert_eq!(two_three().ell_0(0), Ok(4));
        assert_eq!(dg(2, &[(0, 1), (1, 0)]).ell_0(0), Err(Error::NotErgodic(0)));
        assert_eq!(dg(2, &[(0, 1), (1, 1)]).ell_0(1), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn power_walk_examples() {
        let c3 = dg(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(c3.power_walk(&"f".parse().unwrap()), c3);
        let ff: Vec<_> = c3.power_walk(&"ff".parse().unwrap()).edges().collect();
        assert_eq!(ff, vec![(0, 2), (1, 0), (2, 1)]);
        let fb: Vec<_> = c3.power_walk(&"fb".parse().unwrap()).edges().collect();
        assert_eq!(fb, vec![(0, 0), (1, 1), (2, 2)]);
        assert!("fxb".parse::<AbstractWalk>().is_err());
        assert!("".parse::<AbstractWalk>().is_err());
        assert_eq!("ffb".parse::<AbstractWalk>().unwrap().to_string(), "ffb");
    }

    #[test]
    fn classify_examples() {
        assert_eq!(dg(1, &[(0, 0)]).classify(), Ok(TemplateClass::Loop));
        assert_eq!(dg(2, &[(0, 1), (1, 0)]).classify(), Ok(TemplateClass::NonErgodic));
        assert_eq!(two_three().classify(), Ok(TemplateClass::ErgodicNoLoop));
        assert_eq!(dg(2, &[(0, 1)]).classify(), Err(Error::NotSinkless(1)));
    }

    #[test]
    fn paths_of_length() {
        let c2 = dg(2, &[(0, 1), (1, 0)]);
        assert_eq!(c2.path_of_length(1, 1, 0), Some(vec![1]));
        assert_eq!(c2.path_of_length(0, 0, 3), None);
        let h = two_three();
        assert_eq!(h.path_of_length(0, 0, 5), Some(vec![0, 1, 0, 2, 3, 0]));
    }

    #[test]
    fn json_round_trip() {
        let h = two_three();
        let text = h.to_json();
        assert_eq!(text, r#"{"m":4,"edges":[[0,1],[0,2],[1,0],[2,3],[3,0]]}"#);
        assert_eq!(Digraph::from_json(&text).unwrap(), h);
        assert!(h.to_dot().contains("2 -> 3;"));
    }
}
