//! Homomorphisms from functional graphs into finite digraph templates.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::{membership, FunctionalGraph};
use crate::hitting::{forward_independence_violation, HittingSet, Violation};

/// Template vertex per graph vertex; `None` marks vertices left unlabeled
/// near the truncation boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Homomorphism(pub Vec<Option<usize>>);

impl Homomorphism {
    pub fn total(labels: Vec<usize>) -> Self {
        Self(labels.into_iter().map(Some).collect())
    }

    pub fn is_total(&self) -> bool {
        self.0.iter().all(Option::is_some)
    }

    pub fn labeled(&self) -> usize {
        self.0.iter().flatten().count()
    }
}

/// Edges `x -> f(x)` with both endpoints labeled whose image is not an edge of `h`.
pub fn hom_violations(g: &FunctionalGraph, psi: &Homomorphism, h: &Digraph) -> Vec<(usize, usize)> {
    (0..g.len())
        .filter_map(|x| {
            let y = g.succ(x)?;
            let (a, b) = (psi.0[x]?, psi.0[y]?);
            let ok = a < h.len() && b < h.len() && h.has_edge(a, b);
            (!ok).then_some((x, y))
        })
        .collect()
}

/// Total map that respects every edge.
pub fn verify_hom(g: &FunctionalGraph, psi: &Homomorphism, h: &Digraph) -> bool {
    psi.0.len() == g.len() && psi.is_total() && hom_violations(g, psi, h).is_empty()
}

/// Constant map onto the least loop vertex.
pub fn solve_loop(g: &FunctionalGraph, h: &Digraph) -> Result<Homomorphism> {
    let v = h.first_loop().ok_or(Error::NoLoop)?;
    Ok(Homomorphism::total(vec![v; g.len()]))
}

/// Template data fixed once per ergodic template: the aperiodic strong
/// component used, `ℓ0`, a closed walk `C` at `v0`, and for every target `w`
/// a walk `D_w` of length `ℓ0` from `v0` to `w`. Vertices are template ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErgodicPlan {
    pub v0: usize,
    pub component: Vec<usize>,
    pub ell0: usize,
    /// `C` as `c_0 = v0, …, c_{|C|} = v0`.
    pub cycle: Vec<usize>,
    /// `paths[i]` ends at `component[i]`.
    pub paths: Vec<Vec<usize>>,
}

impl ErgodicPlan {
    pub fn new(h: &Digraph) -> Result<Self> {
        h.ensure_sinkless()?;
        if let Some(v) = h.first_loop() {
            return Err(Error::HasLoop(v));
        }
        let witness = h.is_ergodic().ok_or(Error::NotErgodic(0))?;
        let scc = h.scc();
        let class = scc.class_of(witness.vertex).expect("every vertex has a component");
        let component = scc.classes().swap_remove(class);
        let sub = h.induced(&component);
        let v0_local = component.binary_search(&witness.vertex).expect("v0 is in its component");
        let ell0 = sub.ell_0(v0_local)?;
        let to_global = |p: Vec<usize>| p.into_iter().map(|v| component[v]).collect::<Vec<_>>();
        let cycle = (1..=sub.len())
            .find_map(|len| sub.path_of_length(v0_local, v0_local, len))
            .map(to_global)
            .ok_or(Error::NotErgodic(witness.vertex))?;
        let paths = (0..sub.len())
            .map(|w| {
                sub.path_of_length(v0_local, w, ell0)
                    .map(to_global)
                    .ok_or(Error::NotErgodic(witness.vertex))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            v0: witness.vertex,
            component,
            ell0,
            cycle,
            paths,
        })
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len() - 1
    }

    /// Label of a vertex `k >= 1` steps before the first vertex of `Z`.
    pub fn outside_label(&self, k: usize) -> usize {
        let len = self.cycle_len();
        self.cycle[(len - k % len) % len]
    }

    /// Label of a vertex `j` steps before the member it hangs from, given
    /// that member's label `target`.
    pub fn approach_label(&self, target: usize, j: usize) -> usize {
        let i = self.component.binary_search(&target).expect("labels stay in the component");
        self.paths[i][self.ell0 - j]
    }
}

/// Labels from an `ℓ0`-forward-independent hitting set `a`.
///
/// `Z` collects the vertices `1..=ℓ0` steps before a member of `a`. Outside
/// `Z` a vertex `k` steps before `Z` follows `C` backwards from `v0`; inside,
/// a vertex `j` steps before member `z` follows `D_{ψ(z)}`. Vertices whose
/// orbit never reaches `Z` stay unlabeled.
pub fn solve_ergodic(g: &FunctionalGraph, h: &Digraph, a: &HittingSet) -> Result<Homomorphism> {
    let plan = ErgodicPlan::new(h)?;
    solve_with_plan(g, &plan, &a.members)
}

pub fn solve_with_plan(g: &FunctionalGraph, plan: &ErgodicPlan, members: &[usize]) -> Result<Homomorphism> {
    g.ensure_acyclic()?;
    if let Some(Violation::ForwardIndependence { from, to, steps }) =
        forward_independence_violation(g, members, plan.ell0)
    {
        return Err(Error::NotForwardIndependent { r: plan.ell0, from, to, steps });
    }
    let (owner, depth) = approach_zone(g, members, plan.ell0);
    let in_z: Vec<bool> = owner.iter().map(Option::is_some).collect();
    let k = g.strict_steps_to_set(&in_z);
    let mut psi: Vec<Option<usize>> = (0..g.len())
        .map(|x| if in_z[x] { None } else { k[x].map(|k| plan.outside_label(k)) })
        .collect();
    for y in 0..g.len() {
        if let Some(z) = owner[y] {
            psi[y] = psi[z].map(|target| plan.approach_label(target, depth[y]));
        }
    }
    Ok(Homomorphism(psi))
}

/// For each vertex within `1..=depth` steps before a member: that member and the step count.
pub fn approach_zone(
    g: &FunctionalGraph,
    members: &[usize],
    depth: usize,
) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut owner = vec![None; g.len()];
    let mut steps = vec![0; g.len()];
    for &z in members {
        let mut frontier = vec![z];
        for j in 1..=depth {
            frontier = frontier.iter().flat_map(|&v| g.preds(v).iter().copied()).collect();
            for &y in &frontier {
                owner[y] = Some(z);
                steps[y] = j;
            }
        }
    }
    (owner, steps)
}

fn bits_of(h: &Digraph, adj: impl Fn(usize) -> Vec<usize>) -> Vec<BitSet> {
    (0..h.len())
        .map(|v| {
            let mut b = BitSet::new(h.len());
            for u in adj(v) {
                b.insert(u);
            }
            b
        })
        .collect()
}

/// Exact decision on a finite functional graph; the returned labeling is
/// canonical, built by taking least feasible template vertices from sinks
/// and cycles outwards.
pub fn decide_hom_finite(g: &FunctionalGraph, h: &Digraph) -> Option<Homomorphism> {
    let n = g.len();
    let m = h.len();
    let out_bits = bits_of(h, |v| h.out_neighbors(v).to_vec());
    let in_bits = bits_of(h, |v| h.in_neighbors(v).to_vec());

    // support[x]: template vertices at x that extend to every in-tree above x.
    let mut support: Vec<BitSet> = vec![BitSet::full(m); n];
    let mut pending: Vec<usize> = (0..n).map(|x| g.preds(x).len()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&x| pending[x] == 0).collect();
    let mut done = vec![false; n];
    let restrict = |x: usize, p: usize, support: &mut Vec<BitSet>| {
        let mut reach = BitSet::new(m);
        for u in support[p].iter() {
            reach.union_with(&out_bits[u]);
        }
        let cur = &support[x];
        let mut next = BitSet::new(m);
        for v in cur.iter() {
            if reach.contains(v) {
                next.insert(v);
            }
        }
        support[x] = next;
    };
    while let Some(x) = stack.pop() {
        done[x] = true;
        if let Some(y) = g.succ(x) {
            restrict(y, x, &mut support);
            pending[y] -= 1;
            if pending[y] == 0 {
                stack.push(y);
            }
        }
    }
    // Cycle vertices never became ready; their tree predecessors are done.
    for x in 0..n {
        if !done[x] {
            for &p in g.preds(x) {
                if done[p] {
                    restrict(x, p, &mut support);
                }
            }
        }
    }

    let mut psi = vec![None; n];
    for cycle in g.cycles() {
        let labels = label_cycle(&cycle, &support, &out_bits, &in_bits, m)?;
        for (x, v) in cycle.into_iter().zip(labels) {
            psi[x] = Some(v);
        }
    }
    // Roots of in-trees: sinks. Then push labels up the trees.
    let mut queue: Vec<usize> = Vec::new();
    for x in 0..n {
        if g.succ(x).is_none() {
            psi[x] = Some(support[x].iter().next()?);
        }
        if psi[x].is_some() {
            queue.push(x);
        }
    }
    while let Some(y) = queue.pop() {
        let v = psi[y].expect("queued vertices are labeled");
        for &p in g.preds(y) {
            if psi[p].is_none() {
                let u = support[p].iter().find(|&u| out_bits[u].contains(v))?;
                psi[p] = Some(u);
                queue.push(p);
            }
        }
    }
    Some(Homomorphism(psi))
}

/// Closed walk labeling of `cycle` inside the supports, least first label then greedy.
fn label_cycle(
    cycle: &[usize],
    support: &[BitSet],
    out_bits: &[BitSet],
    in_bits: &[BitSet],
    m: usize,
) -> Option<Vec<usize>> {
    let len = cycle.len();
    for start in support[cycle[0]].iter() {
        // back[i]: labels at position i that can still close the walk at `start`.
        let mut back = vec![BitSet::new(m); len + 1];
        back[len] = BitSet::singleton(m, start);
        for i in (0..len).rev() {
            let mut pre = BitSet::new(m);
            for v in back[i + 1].iter() {
                pre.union_with(&in_bits[v]);
            }
            for v in pre.iter() {
                if support[cycle[i]].contains(v) {
                    back[i].insert(v);
                }
            }
        }
        if !back[0].contains(start) {
            continue;
        }
        let mut labels = vec![start];
        for i in 1..len {
            let prev = labels[i - 1];
            let next = back[i]
                .iter()
                .find(|&v| out_bits[prev].contains(v))
                .expect("backward table guarantees a continuation");
            labels.push(next);
        }
        return Some(labels);
    }
    None
}

/// Relabels a valid homomorphism so every image lies in the strong component
/// that absorbs each orbit's tail, following backward chains inside it.
pub fn restrict_to_scc_union(
    g: &FunctionalGraph,
    psi: &Homomorphism,
    h: &Digraph,
) -> Result<Homomorphism> {
    if psi.0.len() != g.len() || !psi.is_total() {
        return Err(Error::InvalidParameter("homomorphism must label every vertex".into()));
    }
    if let Some(&(from, to)) = hom_violations(g, psi, h).first() {
        return Err(Error::NotHomomorphism { from, to });
    }
    let label = |x: usize| psi.0[x].expect("checked total");
    let scc = h.scc();
    // The absorbing component of each weak component: that of a cycle or sink image.
    let mut target = vec![None; g.len()];
    for cycle in g.cycles() {
        for &x in &cycle {
            target[x] = scc.class_of(label(x));
        }
    }
    for x in 0..g.len() {
        if g.succ(x).is_none() {
            target[x] = scc.class_of(label(x));
        }
    }
    for x in g.sink_first_order() {
        if let Some(y) = g.succ(x) {
            target[x] = target[y];
        }
    }
    // Vertices feeding into cycles get their target from the cycle.
    let order = feed_order(g);
    for &x in &order {
        if target[x].is_none() {
            target[x] = target[g.succ(x).expect("feeding vertices have successors")];
        }
    }

    // k(x): least k >= 0 with ψ(f^k(x)) in the target component, and that image.
    let in_target: Vec<bool> = (0..g.len()).map(|x| scc.class_of(label(x)) == target[x]).collect();
    let k = g.steps_to_set(&in_target);
    let mut out = Vec::with_capacity(g.len());
    for x in 0..g.len() {
        let steps = k[x].expect("every orbit reaches its absorbing component");
        let v = label(g.iterate(x, steps).expect("steps stay on the orbit"));
        let class = scc.class_of(v);
        let mut w = v;
        for _ in 0..steps {
            w = *h
                .in_neighbors(w)
                .iter()
                .find(|&&u| scc.class_of(u) == class)
                .ok_or(Error::NoBackwardChain(v))?;
        }
        out.push(Some(w));
    }
    Ok(Homomorphism(out))
}

/// Non-cyclic vertices of cyclic components, ordered so successors come first.
fn feed_order(g: &FunctionalGraph) -> Vec<usize> {
    let on_cycle = membership(g.len(), &g.cycles().concat());
    let mut order = Vec::new();
    let mut stack: Vec<usize> = (0..g.len()).filter(|&x| on_cycle[x]).collect();
    while let Some(y) = stack.pop() {
        for &p in g.preds(y) {
            if !on_cycle[p] {
                order.push(p);
                stack.push(p);
            }
        }
    }
    order
}
