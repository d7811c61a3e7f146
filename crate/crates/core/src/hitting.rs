//! Forward-independent hitting sets, their labelings into `D_r`, and the two
//! extractions of hitting sets from asymptotic-dimension witnesses.

use serde::{Deserialize, Serialize};

use crate::asdim::{class_diameters, f_r_classes};
use crate::error::{Error, Result};
use crate::graph::{membership, FunctionalGraph};
use crate::partition::Partition;

/// An `r`-forward-independent set together with the horizon `L` such that
/// every vertex of `interior(G, L)` has a strict forward iterate in the set.
/// A `None` horizon means some cyclic vertex is never hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSet {
    pub r: usize,
    pub horizon: Option<usize>,
    pub members: Vec<usize>,
}

impl HittingSet {
    pub fn new(r: usize, horizon: Option<usize>, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { r, horizon, members }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// Per-vertex label in `D_r`, `None` where the orbit never reaches the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DrLabeling(pub Vec<Option<usize>>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ForwardIndependence { from: usize, to: usize, steps: usize },
    NotHit { vertex: usize },
    LabelEdge { from: usize, to: usize },
    Hypothesis { vertex: usize, classes: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// First pair of members at forward distance `1..=r`, scanning members in order.
pub fn forward_independence_violation(
    g: &FunctionalGraph,
    members: &[usize],
    r: usize,
) -> Option<Violation> {
    let inside = membership(g.len(), members);
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    for &x in &sorted {
        let mut cur = x;
        for steps in 1..=r {
            match g.succ(cur) {
                Some(y) => cur = y,
                None => break,
            }
            if inside[cur] {
                return Some(Violation::ForwardIndependence { from: x, to: cur, steps });
            }
        }
    }
    None
}

pub fn is_forward_independent(g: &FunctionalGraph, members: &[usize], r: usize) -> bool {
    forward_independence_violation(g, members, r).is_none()
}

/// Vertices of `interior(G, horizon)` with no strict forward iterate in `members`.
pub fn unhit_vertices(g: &FunctionalGraph, members: &[usize], horizon: usize) -> Vec<usize> {
    let k = g.strict_steps_to_set(&membership(g.len(), members));
    (0..g.len())
        .filter(|&x| k[x].is_none() && g.in_interior(x, horizon))
        .collect()
}

pub fn is_hitting(g: &FunctionalGraph, members: &[usize], horizon: usize) -> bool {
    unhit_vertices(g, members, horizon).is_empty()
}

/// Least `L` with `members` hitting on `interior(G, L)`; `None` when an
/// unhit vertex has an infinite orbit.
pub fn certified_horizon(g: &FunctionalGraph, members: &[usize]) -> Option<usize> {
    let k = g.strict_steps_to_set(&membership(g.len(), members));
    let mut horizon = 0;
    for x in 0..g.len() {
        if k[x].is_none() {
            horizon = horizon.max(g.forward_len(x)? + 1);
        }
    }
    Some(horizon)
}

pub fn verify_hitting_set(g: &FunctionalGraph, h: &HittingSet) -> VerificationReport {
    let mut violations: Vec<Violation> = forward_independence_violation(g, &h.members, h.r)
        .into_iter()
        .collect();
    if let Some(horizon) = h.horizon {
        violations.extend(
            unhit_vertices(g, &h.members, horizon)
                .into_iter()
                .map(|vertex| Violation::NotHit { vertex }),
        );
    }
    VerificationReport::from_violations(violations)
}

/// Adds vertices sinks-first: every sink, and every vertex whose nearest
/// forward member is exactly `r + 1` steps away. Consecutive members along an
/// orbit are then exactly `r + 1` apart.
pub fn greedy_hitting(g: &FunctionalGraph, r: usize) -> Result<HittingSet> {
    g.ensure_acyclic()?;
    let mut dist = vec![0usize; g.len()];
    let mut members = Vec::new();
    for x in g.sink_first_order() {
        let d = g.succ(x).map_or(0, |y| dist[y] + 1);
        dist[x] = if d == r + 1 { 0 } else { d };
        if dist[x] == 0 {
            members.push(x);
        }
    }
    Ok(HittingSet::new(r, Some(r + 1), members))
}

/// `φ(x)`: least `k >= 0` with `f^k(x)` in the set.
pub fn hom_from_hitting(g: &FunctionalGraph, h: &HittingSet) -> DrLabeling {
    DrLabeling(g.steps_to_set(&membership(g.len(), &h.members)))
}

/// Edges `x -> f(x)`, both labeled, that are not edges of `D_r`.
pub fn dr_edge_violations(g: &FunctionalGraph, phi: &DrLabeling, r: usize) -> Vec<(usize, usize)> {
    (0..g.len())
        .filter_map(|x| {
            let y = g.succ(x)?;
            let (a, b) = (phi.0[x]?, phi.0[y]?);
            let ok = if a > 0 { b + 1 == a } else { b >= r };
            (!ok).then_some((x, y))
        })
        .collect()
}

pub fn hitting_from_hom(g: &FunctionalGraph, phi: &DrLabeling, r: usize) -> Result<HittingSet> {
    if phi.0.len() != g.len() {
        return Err(Error::InvalidParameter(format!(
            "labeling has {} entries for {} vertices",
            phi.0.len(),
            g.len()
        )));
    }
    if let Some(&(from, to)) = dr_edge_violations(g, phi, r).first() {
        return Err(Error::LabelingInvariant { r, from, to });
    }
    let members: Vec<usize> = (0..g.len()).filter(|&x| phi.0[x] == Some(0)).collect();
    let horizon = certified_horizon(g, &members);
    Ok(HittingSet::new(r, horizon, members))
}

/// `A` minus every `f^{-j}(A)` for `1 <= j <= r`; undefined iterates count as outside `A`.
fn thin_out(g: &FunctionalGraph, a: &[bool], r: usize) -> Vec<usize> {
    (0..g.len())
        .filter(|&x| a[x])
        .filter(|&x| {
            let mut cur = x;
            for _ in 0..r {
                match g.succ(cur) {
                    Some(y) if a[y] => return false,
                    Some(y) => cur = y,
                    None => break,
                }
            }
            true
        })
        .collect()
}

/// Hitting set from a set `A` hitting on `interior(G, a_horizon)`.
///
/// The result hits every vertex `A` hits; the reported horizon is the
/// larger of `a_horizon` and `D + r`, where `D` bounds the `F_r(A)` class diameters.
pub fn hitting_from_cover(
    g: &FunctionalGraph,
    a: &[usize],
    r: usize,
    a_horizon: usize,
) -> Result<HittingSet> {
    g.ensure_acyclic()?;
    let inside = membership(g.len(), a);
    let members = thin_out(g, &inside, r);
    let diam = class_diameters(g, &f_r_classes(g, a, r))
        .into_iter()
        .map(|d| d.expect("classes of F_r(A) are connected"))
        .max()
        .unwrap_or(0);
    Ok(HittingSet::new(r, Some(a_horizon.max(diam + r)), members))
}

/// Classes met by the radius-`radius` ball around each vertex of `centers`.
pub fn ball_class_counts(
    g: &FunctionalGraph,
    e: &Partition,
    centers: &[usize],
    radius: usize,
) -> Vec<usize> {
    centers
        .iter()
        .map(|&x| {
            let mut classes: Vec<usize> = g
                .ball(x, radius)
                .into_iter()
                .filter_map(|y| e.class_of(y))
                .collect();
            classes.sort_unstable();
            classes.dedup();
            classes.len()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqRelHitting {
    pub hitting: HittingSet,
    /// Centers whose `B_{2t(d+1)}` ball meets more than `d + 1` classes.
    pub hypothesis: VerificationReport,
}

/// Hitting set from an equivalence relation `E` on part of the vertex set.
///
/// `A` holds the vertices of `E`'s domain never related to a strict forward
/// iterate, and the result is `A` thinned by `t`. Any vertex whose successor
/// lies in `E`'s domain is hit, so if the domain contains
/// `interior(G, e_horizon)` the result hits `interior(G, e_horizon + 1)`.
/// The ball hypothesis is checked on `centers` and reported, never enforced.
pub fn hitting_from_eqrel(
    g: &FunctionalGraph,
    e: &Partition,
    t: usize,
    d: usize,
    e_horizon: usize,
    centers: &[usize],
) -> Result<EqRelHitting> {
    g.ensure_acyclic()?;
    if e.len() != g.len() {
        return Err(Error::InvalidParameter(format!(
            "relation covers {} entries for {} vertices",
            e.len(),
            g.len()
        )));
    }
    let a = eqrel_exit_set(g, e);
    let members = thin_out(g, &a, t);
    let radius = 2 * t * (d + 1);
    let violations = centers
        .iter()
        .zip(ball_class_counts(g, e, centers, radius))
        .filter(|&(_, c)| c > d + 1)
        .map(|(&vertex, classes)| Violation::Hypothesis { vertex, classes })
        .collect();
    Ok(EqRelHitting {
        hitting: HittingSet::new(t, Some(e_horizon + 1), members),
        hypothesis: VerificationReport::from_violations(violations),
    })
}

/// Domain vertices whose class contains no strict forward iterate.
pub fn eqrel_exit_set(g: &FunctionalGraph, e: &Partition) -> Vec<bool> {
    // In a forest f^k(x) is at distance k from x, so a related iterate lies
    // within the class diameter.
    let diam = class_diameters(g, e);
    (0..g.len())
        .map(|x| {
            let Some(c) = e.class_of(x) else { return false };
            let bound = diam[c].unwrap_or(g.len());
            !g.forward_orbit(x, bound + 1)
                .into_iter()
                .skip(1)
                .any(|y| e.class_of(y) == Some(c))
        })
        .collect()
}
