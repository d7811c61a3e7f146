//! Graphs generated by a single partial successor function.
//!
//! A [`FunctionalGraph`] on vertices `0..n` stores at most one successor per
//! vertex; an absent successor marks a sink. Finite total functions always
//! have cycles, so acyclic instances are forests of in-trees draining into
//! sinks.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected graph distance in the generated graph; `None` when the two
/// vertices lie in different weak components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Distance(pub Option<usize>);

impl Distance {
    pub fn value(self) -> Option<usize> {
        self.0
    }

    pub fn is_within(self, radius: usize) -> bool {
        matches!(self.0, Some(d) if d <= radius)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalGraph {
    succ: Vec<Option<usize>>,
    pred_start: Vec<usize>,
    pred_list: Vec<usize>,
    // Number of defined forward iterates; `None` when the orbit reaches a cycle.
    forward_len: Vec<Option<usize>>,
    acyclic: bool,
}

/// On-disk form: `{"n": 3, "succ": [1, 2, -1]}` with `-1` marking a sink.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub succ: Vec<i64>,
}

impl FunctionalGraph {
    pub fn build(n: usize, succ: Vec<Option<usize>>) -> Result<Self> {
        if succ.len() != n {
            return Err(Error::Format(format!(
                "expected {n} successor entries, found {}",
                succ.len()
            )));
        }
        for (vertex, s) in succ.iter().enumerate() {
            if let Some(s) = *s {
                if s >= n {
                    return Err(Error::SuccessorOutOfRange { vertex, succ: s, n });
                }
            }
        }

        let mut pred_start = vec![0usize; n + 1];
        for s in succ.iter().flatten() {
            pred_start[s + 1] += 1;
        }
        for i in 0..n {
            pred_start[i + 1] += pred_start[i];
        }
        let mut fill = pred_start.clone();
        let mut pred_list = vec![0usize; pred_start[n]];
        for (x, s) in succ.iter().enumerate() {
            if let Some(s) = *s {
                pred_list[fill[s]] = x;
                fill[s] += 1;
            }
        }

        // Breadth-first search from the sinks along reversed edges reaches
        // exactly the vertices whose orbit ends in a sink.
        let mut forward_len = vec![None; n];
        let mut queue = VecDeque::new();
        for x in 0..n {
            if succ[x].is_none() {
                forward_len[x] = Some(0);
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            let len = forward_len[x].unwrap_or(0);
            for &p in &pred_list[pred_start[x]..pred_start[x + 1]] {
                if forward_len[p].is_none() {
                    forward_len[p] = Some(len + 1);
                    queue.push_back(p);
                }
            }
        }
        let acyclic = forward_len.iter().all(Option::is_some);

        Ok(Self {
            succ,
            pred_start,
            pred_list,
            forward_len,
            acyclic,
        })
    }

    pub fn from_file(file: &GraphFile) -> Result<Self> {
        let succ = file
            .succ
            .iter()
            .enumerate()
            .map(|(vertex, &s)| match s {
                -1 => Ok(None),
                s if s >= 0 => Ok(Some(s as usize)),
                s => Err(Error::Format(format!(
                    "successor {s} of vertex {vertex} is neither -1 nor a vertex index"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(file.n, succ)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            n: self.len(),
            succ: self
                .succ
                .iter()
                .map(|s| s.map_or(-1, |v| v as i64))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph file serializes")
    }

    /// Graphviz rendering with one edge `x -> f(x)` per non-sink vertex.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for x in 0..self.len() {
            match self.succ[x] {
                Some(y) => writeln!(out, "  {x} -> {y};").unwrap(),
                None => writeln!(out, "  {x};").unwrap(),
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn succ(&self, x: usize) -> Option<usize> {
        self.succ[x]
    }

    pub fn successors(&self) -> &[Option<usize>] {
        &self.succ
    }

    pub fn preds(&self, x: usize) -> &[usize] {
        &self.pred_list[self.pred_start[x]..self.pred_start[x + 1]]
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    pub fn is_total(&self) -> bool {
        self.succ.iter().all(Option::is_some)
    }

    pub fn ensure_acyclic(&self) -> Result<()> {
        match self.forward_len.iter().position(Option::is_none) {
            None => Ok(()),
            Some(x) => {
                // Report the least vertex of the cycle that x runs into.
                let cyc = self.least_on_cycle_of(x);
                Err(Error::Cyclic(cyc))
            }
        }
    }

    fn least_on_cycle_of(&self, x: usize) -> usize {
        let mut slow = x;
        let mut fast = x;
        loop {
            slow = self.succ[slow].expect("orbit reaches a cycle");
            fast = self.succ[self.succ[fast].expect("cycle")].expect("cycle");
            if slow == fast {
                break;
            }
        }
        let mut least = slow;
        let mut cur = self.succ[slow].expect("cycle");
        while cur != slow {
            least = least.min(cur);
            cur = self.succ[cur].expect("cycle");
        }
        least
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.len(),
            })
        }
    }

    /// Number of defined forward iterates of `x`, or `None` when the orbit is infinite.
    pub fn forward_len(&self, x: usize) -> Option<usize> {
        self.forward_len[x]
    }

    /// `f^k(x)`, if defined.
    pub fn iterate(&self, x: usize, k: usize) -> Option<usize> {
        let mut cur = x;
        for _ in 0..k {
            cur = self.succ[cur]?;
        }
        Some(cur)
    }

    /// Least `k >= 0` with `f^k(from) == target`.
    pub fn steps_to(&self, from: usize, target: usize) -> Option<usize> {
        match (self.forward_len[from], self.forward_len[target]) {
            (Some(a), Some(b)) => {
                if a < b {
                    return None;
                }
                let k = a - b;
                (self.iterate(from, k) == Some(target)).then_some(k)
            }
            (Some(_), None) => None,
            _ => {
                // Cyclic region: walk until the orbit repeats.
                let mut seen = BTreeSet::new();
                let mut cur = from;
                let mut k = 0;
                loop {
                    if cur == target {
                        return Some(k);
                    }
                    if !seen.insert(cur) {
                        return None;
                    }
                    cur = self.succ[cur]?;
                    k += 1;
                }
            }
        }
    }

    /// `x, f(x), f²(x), …`, stopping after `max_len` entries or at a sink.
    pub fn forward_orbit(&self, x: usize, max_len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(max_len.min(self.len() + 1));
        let mut cur = Some(x);
        while out.len() < max_len {
            match cur {
                Some(v) => {
                    out.push(v);
                    cur = self.succ[v];
                }
                None => break,
            }
        }
        out
    }

    fn neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[x]
            .into_iter()
            .chain(self.preds(x).iter().copied())
            .filter(move |&y| y != x)
    }

    pub fn graph_distance(&self, x: usize, y: usize) -> Distance {
        if x == y {
            return Distance(Some(0));
        }
        if let (Some(mut a), Some(mut b)) = (self.forward_len[x], self.forward_len[y]) {
            // Both orbits end in sinks, so the component is a tree and the
            // unique path runs through the first common iterate.
            let (mut u, mut v) = (x, y);
            let mut dist = 0;
            while a > b {
                u = self.succ[u].expect("forward length is consistent");
                a -= 1;
                dist += 1;
            }
            while b > a {
                v = self.succ[v].expect("forward length is consistent");
                b -= 1;
                dist += 1;
            }
            while u != v {
                match (self.succ[u], self.succ[v]) {
                    (Some(nu), Some(nv)) => {
                        u = nu;
                        v = nv;
                        dist += 2;
                    }
                    _ => return Distance(None),
                }
            }
            return Distance(Some(dist));
        }
        self.bfs_distance(x, y)
    }

    fn bfs_distance(&self, x: usize, y: usize) -> Distance {
        let mut dist = vec![usize::MAX; self.len()];
        let mut queue = VecDeque::from([x]);
        dist[x] = 0;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    if v == y {
                        return Distance(Some(dist[v]));
                    }
                    queue.push_back(v);
                }
            }
        }
        Distance(None)
    }

    /// All vertices within undirected distance `t` of `x`, sorted.
    pub fn ball(&self, x: usize, t: usize) -> Vec<usize> {
        let mut out = self.ball_with_distances(x, t).into_iter().map(|(v, _)| v).collect::<Vec<_>>();
        out.sort_unstable();
        out
    }

    /// Breadth-first ball listing `(vertex, distance)` in discovery order.
    pub fn ball_with_distances(&self, x: usize, t: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(x, 0)];
        let mut seen = BTreeSet::from([x]);
        let mut head = 0;
        while head < out.len() {
            let (u, d) = out[head];
            head += 1;
            if d == t {
                continue;
            }
            for v in self.neighbors(u) {
                if seen.insert(v) {
                    out.push((v, d + 1));
                }
            }
        }
        out
    }

    /// Vertices whose forward orbit eventually enters a directed cycle.
    pub fn cyclic_points(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.forward_len[x].is_none())
            .collect()
    }

    /// Directed cycles, each rotated to start at its least vertex, ordered by that vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.len();
        let mut walk_id = vec![UNSEEN; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if walk_id[start] != UNSEEN || self.forward_len[start].is_some() {
                continue;
            }
            let mut cur = start;
            while walk_id[cur] == UNSEEN {
                walk_id[cur] = start;
                cur = self.succ[cur].expect("cyclic region has no sinks");
            }
            if walk_id[cur] == start {
                let mut cycle = vec![cur];
                let mut v = self.succ[cur].expect("cycle");
                while v != cur {
                    cycle.push(v);
                    v = self.succ[v].expect("cycle");
                }
                let min_pos = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                cycle.rotate_left(min_pos);
                cycles.push(cycle);
            }
        }
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    /// Least vertex of every directed cycle.
    pub fn cycle_transversal(&self) -> Vec<usize> {
        self.cycles().into_iter().map(|c| c[0]).collect()
    }

    /// Length of the shortest directed cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        self.cycles().iter().map(Vec::len).min()
    }

    /// Vertices with at least `horizon` defined forward iterates.
    pub fn interior(&self, horizon: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.in_interior(x, horizon)).collect()
    }

    pub fn in_interior(&self, x: usize, horizon: usize) -> bool {
        self.forward_len[x].is_none_or(|len| len >= horizon)
    }

    /// Vertices listed so that every successor precedes its predecessors
    /// (sinks first). Vertices on or feeding into cycles are omitted.
    pub fn sink_first_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len())
            .filter(|&x| self.forward_len[x].is_some())
            .collect();
        order.sort_by_key(|&x| (self.forward_len[x], x));
        order
    }

    /// For every vertex, the least `k >= 0` with `f^k(x)` in `set`.
    pub fn steps_to_set(&self, set: &[bool]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        for (x, &member) in set.iter().enumerate() {
            if member {
                dist[x] = Some(0);
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &p in self.preds(x) {
                if dist[p].is_none() {
                    dist[p] = Some(d + 1);
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// For every vertex, the least `k >= 1` with `f^k(x)` in `set`.
    pub fn strict_steps_to_set(&self, set: &[bool]) -> Vec<Option<usize>> {
        let d0 = self.steps_to_set(set);
        (0..self.len())
            .map(|x| self.succ[x].and_then(|y| d0[y]).map(|d| d + 1))
            .collect()
    }
}

/// Membership vector for a vertex list.
pub fn membership(n: usize, members: &[usize]) -> Vec<bool> {
    let mut out = vec![false; n];
    for &m in members {
        out[m] = true;
    }
    out
}

pub fn gen_path(n: usize) -> FunctionalGraph {
    let succ = (0..n).map(|i| (i + 1 < n).then_some(i + 1)).collect();
    FunctionalGraph::build(n, succ).expect("path is well formed")
}

/// Random acyclic forest with long orbits and some branching.
///
/// Positions `0..n` jump forward by 1, 2 or 3; positions that would leave the
/// range become sinks, and about one position in 2500 is cut into an extra
/// sink. Vertex labels are a seeded random permutation of the positions.
pub fn gen_random_forest(n: usize, seed: u64) -> FunctionalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_pos: Vec<Option<usize>> = (0..n)
        .map(|p| {
            let q = p + rng.gen_range(1..=3);
            (q < n).then_some(q)
        })
        .collect();
    for _ in 0..n / 2500 {
        let p = rng.gen_range(0..n);
        by_pos[p] = None;
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let mut succ = vec![None; n];
    for p in 0..n {
        succ[label[p]] = by_pos[p].map(|q| label[q]);
    }
    FunctionalGraph::build(n, succ).expect("forest is well formed")
}

/// Uniformly random total function on `0..n`.
pub fn gen_random_total(n: usize, seed: u64) -> FunctionalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let succ = (0..n).map(|_| Some(rng.gen_range(0..n))).collect();
    FunctionalGraph::build(n, succ).expect("total function is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(succ: &[i64]) -> FunctionalGraph {
        FunctionalGraph::from_file(&GraphFile {
            n: succ.len(),
            succ: succ.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let path = graph(&[1, 2, -1]);
        assert!(path.is_acyclic());
        assert_eq!(path.succ(2), None);

        let lp = graph(&[0]);
        assert!(!lp.is_acyclic());

        let rho = graph(&[1, 2, 3, 1]);
        assert!(!rho.is_acyclic());
        assert_eq!(rho.ensure_acyclic().unwrap_err(), Error::Cyclic(1));
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = FunctionalGraph::build(2, vec![Some(2), None]).unwrap_err();
        assert_eq!(err, Error::SuccessorOutOfRange { vertex: 0, succ: 2, n: 2 });
        assert!(FunctionalGraph::from_json(r#"{"n":2,"succ":[1,-3]}"#).is_err());
        assert!(FunctionalGraph::from_json(r#"{"n":3,"succ":[1,-1]}"#).is_err());
    }

    #[test]
    fn orbits() {
        assert_eq!(gen_path(3).forward_orbit(0, 10), vec![0, 1, 2]);
        assert_eq!(graph(&[0]).forward_orbit(0, 3), vec![0, 0, 0]);
        assert_eq!(graph(&[1, 2, 3, 1]).forward_orbit(0, 6), vec![0, 1, 2, 3, 1, 2]);
    }

    #[test]
    fn distances() {
        let path = gen_path(3);
        assert_eq!(path.graph_distance(1, 1), Distance(Some(0)));
        assert_eq!(path.graph_distance(0, 2), Distance(Some(2)));
        let tree = graph(&[2, 2, -1]);
        assert_eq!(tree.graph_distance(0, 1), Distance(Some(2)));
        let two = graph(&[-1, -1]);
        assert_eq!(two.graph_distance(0, 1), Distance(None));
        // Unicyclic component: the short way round the cycle.
        let cyc = graph(&[1, 2, 3, 4, 0]);
        assert_eq!(cyc.graph_distance(0, 4), Distance(Some(1)));
        assert_eq!(cyc.graph_distance(0, 2), Distance(Some(2)));
    }

    #[test]
    fn balls() {
        assert_eq!(gen_path(4).ball(1, 1), vec![0, 1, 2]);
        assert_eq!(gen_path(4).ball(3, 0), vec![3]);
        let tree = graph(&[2, 2, 3, -1]);
        assert_eq!(tree.ball(2, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cyclic_structure() {
        assert!(gen_path(5).cyclic_points().is_empty());
        assert_eq!(graph(&[1, 2, 3, 1]).cyclic_points(), vec![0, 1, 2, 3]);
        assert_eq!(graph(&[0, 2, -1]).cyclic_points(), vec![0]);

        assert_eq!(graph(&[1, 2, 3, 1]).cycle_transversal(), vec![1]);
        assert_eq!(graph(&[0, 1]).cycle_transversal(), vec![0, 1]);
        assert!(gen_path(4).cycle_transversal().is_empty());
        assert_eq!(graph(&[1, 2, 3, 1]).cycles(), vec![vec![1, 2, 3]]);
        assert_eq!(graph(&[1, 2, 3, 1]).girth(), Some(3));
    }

    #[test]
    fn interiors() {
        assert_eq!(gen_path(4).interior(2), vec![0, 1]);
        assert_eq!(graph(&[1, 0, 0]).interior(50), vec![0, 1, 2]);
        assert_eq!(graph(&[2, 2, 3, -1]).interior(1), vec![0, 1, 2]);
        assert_eq!(gen_path(4).interior(0), vec![0, 1, 2, 3]);
    }

    #[test]
    fn generators() {
        let p = gen_path(3);
        assert_eq!(p.successors(), &[Some(1), Some(2), None]);
        assert_eq!(gen_random_forest(10, 7), gen_random_forest(10, 7));
        assert!(gen_random_forest(1000, 3).is_acyclic());
        assert!(!gen_random_forest(1000, 3).is_total());
        let total = gen_random_total(10, 7);
        assert!(total.is_total());
        assert!(!total.is_acyclic());
    }

    #[test]
    fn json_and_dot() {
        let g = graph(&[1, 2, -1]);
        assert_eq!(g.to_json(), r#"{"n":3,"succ":[1,2,-1]}"#);
        assert_eq!(FunctionalGraph::from_json(&g.to_json()).unwrap(), g);
        let dot = g.to_dot();
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("  2;"));
    }

    #[test]
    fn steps() {
        let g = graph(&[1, 2, -1, 2]);
        assert_eq!(g.steps_to(0, 2), Some(2));
        assert_eq!(g.steps_to(3, 0), None);
        let d = g.steps_to_set(&[false, false, true, false]);
        assert_eq!(d, vec![Some(2), Some(1), Some(0), Some(1)]);
        let strict = g.strict_steps_to_set(&[false, false, true, false]);
        assert_eq!(strict, vec![Some(2), Some(1), None, Some(1)]);
        let cyc = graph(&[1, 2, 0]);
        assert_eq!(cyc.steps_to(0, 2), Some(2));
        assert_eq!(cyc.strict_steps_to_set(&[true, false, false]), vec![Some(3), Some(2), Some(1)]);
    }
}
