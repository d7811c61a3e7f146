//! Two-colorings built from a sparse hitting set, and the covering and
//! equivalence-relation witnesses for asymptotic dimension one.
//!
//! Everything is evaluated on a finite truncation. A vertex is labeled only
//! when every quantity its color depends on is available and it has at least
//! `r + r/2 + s` forward iterates; verification is restricted to vertices
//! whose lookahead is labeled as well.

use std::collections::BTreeMap;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{membership, Distance, FunctionalGraph};
use crate::hitting::{
    ball_class_counts, greedy_hitting, hitting_from_cover, hitting_from_eqrel, verify_hitting_set, HittingSet, VerificationReport,
};
use crate::partition::{DisjointSets, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsdimParams {
    pub t: usize,
    pub s: usize,
    pub r: usize,
    pub intervals: Vec<Range<usize>>,
}

impl AsdimParams {
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter("t must be positive".into()));
        }
        let s = 6 * t;
        assert_eq!(s % 3, 0);
        Ok(Self {
            t,
            s,
            r: 4 * s * s,
            intervals: interval_decomposition(s),
        })
    }

    /// Forward room needed before a vertex can be colored.
    pub fn label_horizon(&self) -> usize {
        self.r + self.r / 2 + self.s
    }

    /// Upper bound on the number of steps before the color changes.
    pub fn max_change(&self) -> usize {
        2 * self.s + 2
    }

    pub fn cover_bound(&self) -> usize {
        28 * self.t + 7
    }

    /// `2s/3 + 2(2s + 2)`, the bound the argument actually delivers.
    pub fn sharp_cover_bound(&self) -> usize {
        28 * self.t + 4
    }

    /// `2(t + 2s + 2)`.
    pub fn eqrel_bound(&self) -> usize {
        26 * self.t + 4
    }

    fn interval_index(&self, k: usize) -> usize {
        self.intervals
            .iter()
            .position(|iv| iv.contains(&k))
            .expect("k lies below r/2")
    }
}

/// `{0, …, 2s² - 1}` as `s - 1` intervals of size `s` followed by `s` of size `s + 1`.
pub fn interval_decomposition(s: usize) -> Vec<Range<usize>> {
    let sizes = std::iter::repeat_n(s, s.saturating_sub(1))
        .chain(std::iter::repeat_n(s + 1, s));
    let mut start = 0;
    sizes
        .map(|len| {
            let iv = start..start + len;
            start += len;
            iv
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CHLabeling {
    pub color: Vec<Option<u8>>,
    /// Least `k >= 1` with `f^k(x)` in the hitting set.
    pub k: Vec<Option<usize>>,
}

pub fn c_h(g: &FunctionalGraph, h: &HittingSet, t: usize) -> Result<CHLabeling> {
    let params = AsdimParams::new(t)?;
    g.ensure_acyclic()?;
    if let Some(v) = crate::hitting::forward_independence_violation(g, &h.members, params.r) {
        let crate::hitting::Violation::ForwardIndependence { from, to, steps } = v else {
            unreachable!()
        };
        return Err(Error::NotForwardIndependent { r: params.r, from, to, steps });
    }
    let k = g.strict_steps_to_set(&membership(g.len(), &h.members));
    let half = params.r / 2;
    let floor_color = |k: usize| ((k / params.s) % 2) as u8;
    let color = (0..g.len())
        .map(|x| {
            if !g.in_interior(x, params.label_horizon()) {
                return None;
            }
            let kx = k[x]?;
            if kx >= half {
                return Some(floor_color(kx));
            }
            let z = g.iterate(x, kx).expect("k(x) is a defined iterate");
            match floor_color(k[z]?) {
                0 => Some(floor_color(kx)),
                _ => Some(((params.interval_index(kx) + 1) % 2) as u8),
            }
        })
        .collect();
    Ok(CHLabeling { color, k })
}

/// The coloring plus the derived quantities `ℓ(x)` and `e(x) = f^{s/3 + ℓ(x)}(x)`.
#[derive(Debug, Clone)]
pub struct Coloring {
    pub params: AsdimParams,
    pub labels: CHLabeling,
    /// Least `ℓ >= 1` with `f^ℓ(x)` colored differently from `x`.
    pub ell: Vec<Option<usize>>,
    pub e: Vec<Option<usize>>,
    /// Colored vertices with `ℓ(x)` defined and `e(x)` colored.
    pub core: Vec<usize>,
}

impl Coloring {
    pub fn build(g: &FunctionalGraph, h: &HittingSet, t: usize) -> Result<Self> {
        let params = AsdimParams::new(t)?;
        let labels = c_h(g, h, t)?;
        let color = &labels.color;
        let ell: Vec<Option<usize>> = (0..g.len())
            .map(|x| {
                let c = color[x]?;
                let mut cur = x;
                let mut steps = 0;
                loop {
                    cur = g.succ(cur)?;
                    steps += 1;
                    match color[cur] {
                        None => return None,
                        Some(d) if d != c => return Some(steps),
                        Some(_) => {}
                    }
                }
            })
            .collect();
        let e: Vec<Option<usize>> = (0..g.len())
            .map(|x| g.iterate(x, params.s / 3 + ell[x]?))
            .collect();
        let core = (0..g.len())
            .filter(|&x| e[x].is_some_and(|y| color[y].is_some()))
            .collect();
        Ok(Self { params, labels, ell, e, core })
    }

    pub fn color(&self, x: usize) -> Option<u8> {
        self.labels.color[x]
    }

    /// `L(x) = f^{ℓ(x)}(x)`.
    pub fn change_point(&self, g: &FunctionalGraph, x: usize) -> Option<usize> {
        g.iterate(x, self.ell[x]?)
    }

    pub fn part(&self, i: u8) -> Vec<usize> {
        (0..self.labels.color.len())
            .filter(|&x| self.labels.color[x] == Some(i))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverWitness {
    pub t: usize,
    /// `c_H(x)`; vertex `x` lies in `U_i` when `bits[x] == Some(i)`.
    pub bits: Vec<Option<u8>>,
    /// Vertices whose classes are subject to verification.
    pub interior: Vec<usize>,
}

impl CoverWitness {
    pub fn part(&self, i: u8) -> Vec<usize> {
        (0..self.bits.len()).filter(|&x| self.bits[x] == Some(i)).collect()
    }
}

pub fn cover_from_coloring(c: &Coloring) -> CoverWitness {
    CoverWitness {
        t: c.params.t,
        bits: c.labels.color.clone(),
        interior: c.core.clone(),
    }
}

pub fn cover_from_hitting(g: &FunctionalGraph, h: &HittingSet, t: usize) -> Result<CoverWitness> {
    Ok(cover_from_coloring(&Coloring::build(g, h, t)?))
}

/// Components of the graph on `u` joining members at distance at most `r`.
pub fn f_r_classes(g: &FunctionalGraph, u: &[usize], r: usize) -> Partition {
    let inside = membership(g.len(), u);
    let mut dsu = DisjointSets::new(g.len());
    for &x in u {
        for y in g.ball(x, r) {
            if inside[y] {
                dsu.union(x, y);
            }
        }
    }
    Partition::from_keys((0..g.len()).map(|x| inside[x].then(|| dsu.find(x))))
}

fn pairwise_diameter(g: &FunctionalGraph, members: &[usize]) -> Option<usize> {
    let mut best = 0;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            best = best.max(g.graph_distance(a, b).value()?);
        }
    }
    Some(best)
}

fn farthest(g: &FunctionalGraph, from: usize, members: &[usize]) -> Option<(usize, usize)> {
    let mut best = (from, 0);
    for &b in members {
        let d = g.graph_distance(from, b).value()?;
        if d > best.1 {
            best = (b, d);
        }
    }
    Some(best)
}

/// Diameter of each class; `None` when a class spans two components.
///
/// In a forest the metric is a tree metric, where a double sweep is exact
/// for any subset; otherwise distances are compared pairwise.
pub fn class_diameters(g: &FunctionalGraph, p: &Partition) -> Vec<Option<usize>> {
    p.classes()
        .iter()
        .map(|members| {
            if members.len() <= 16 || !g.is_acyclic() {
                return pairwise_diameter(g, members);
            }
            let (b, _) = farthest(g, members[0], members)?;
            farthest(g, b, members).map(|(_, d)| d)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassViolation {
    pub part: u8,
    pub representative: usize,
    pub diameter: Distance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub t: usize,
    pub bound: usize,
    pub max_diameter: [usize; 2],
    pub checked_classes: [usize; 2],
    pub excluded_vertices: usize,
    pub violations: Vec<ClassViolation>,
    pub passed: bool,
}

/// Checks the `F_t(U_i)` classes that meet the witness interior against `bound`.
pub fn verify_cover_witness_with_bound(
    g: &FunctionalGraph,
    w: &CoverWitness,
    t: usize,
    bound: usize,
) -> CoverReport {
    let mut report = CoverReport {
        t,
        bound,
        max_diameter: [0, 0],
        checked_classes: [0, 0],
        excluded_vertices: w.bits.iter().filter(|b| b.is_some()).count() - w.interior.len(),
        violations: Vec::new(),
        passed: true,
    };
    for i in 0..2u8 {
        let classes = f_r_classes(g, &w.part(i), t);
        let diam = class_diameters(g, &classes);
        let mut checked = vec![false; classes.num_classes()];
        for &x in &w.interior {
            if let Some(c) = classes.class_of(x) {
                checked[c] = true;
            }
        }
        for (c, members) in classes.classes().iter().enumerate() {
            if !checked[c] {
                continue;
            }
            report.checked_classes[i as usize] += 1;
            match diam[c] {
                Some(d) if d <= bound => {
                    let slot = &mut report.max_diameter[i as usize];
                    *slot = (*slot).max(d);
                }
                d => {
                    if let Some(d) = d {
                        let slot = &mut report.max_diameter[i as usize];
                        *slot = (*slot).max(d);
                    }
                    report.violations.push(ClassViolation {
                        part: i,
                        representative: members[0],
                        diameter: Distance(d),
                    });
                }
            }
        }
    }
    report.passed = report.violations.is_empty();
    report
}

pub fn verify_cover_witness(g: &FunctionalGraph, w: &CoverWitness, t: usize) -> CoverReport {
    verify_cover_witness_with_bound(g, w, t, 28 * t + 7)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqRelWitness {
    pub t: usize,
    pub s: usize,
    pub partition: Partition,
    /// Vertices whose radius-`t` balls are subject to verification.
    pub interior: Vec<usize>,
}

/// Classes are the fibers of `x ↦ L(f^t(x))` over colored vertices.
pub fn eqrel_from_coloring(g: &FunctionalGraph, c: &Coloring) -> EqRelWitness {
    let t = c.params.t;
    let key: Vec<Option<usize>> = (0..g.len())
        .map(|x| {
            c.color(x)?;
            c.change_point(g, g.iterate(x, t)?)
        })
        .collect();
    let interior = c
        .core
        .iter()
        .copied()
        .filter(|&x| g.ball(x, t).iter().all(|&y| key[y].is_some()))
        .collect();
    EqRelWitness {
        t,
        s: c.params.s,
        partition: Partition::from_keys(key),
        interior,
    }
}

pub fn eqrel_from_hitting(g: &FunctionalGraph, h: &HittingSet, t: usize) -> Result<EqRelWitness> {
    Ok(eqrel_from_coloring(g, &Coloring::build(g, h, t)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqRelReport {
    pub radius: usize,
    pub max_classes: usize,
    pub diameter_bound: usize,
    pub max_diameter: Distance,
    pub oversized_classes: Vec<usize>,
    pub crowded_balls: Vec<usize>,
    pub passed: bool,
}

/// Diameter of every class against `diameter_bound`, and classes met by
/// `B_radius(x)` for interior `x` against `max_classes`.
pub fn verify_eqrel_with(
    g: &FunctionalGraph,
    w: &EqRelWitness,
    radius: usize,
    max_classes: usize,
    diameter_bound: usize,
) -> EqRelReport {
    let diam = class_diameters(g, &w.partition);
    let classes = w.partition.classes();
    let oversized: Vec<usize> = (0..diam.len())
        .filter(|&c| diam[c].is_none_or(|d| d > diameter_bound))
        .map(|c| classes[c][0])
        .collect();
    let max_diameter = if diam.iter().any(Option::is_none) {
        Distance(None)
    } else {
        Distance(Some(diam.iter().flatten().copied().max().unwrap_or(0)))
    };
    let counts = ball_class_counts(g, &w.partition, &w.interior, radius);
    let crowded: Vec<usize> = w
        .interior
        .iter()
        .zip(&counts)
        .filter(|&(_, &c)| c > max_classes)
        .map(|(&x, _)| x)
        .collect();
    EqRelReport {
        radius,
        max_classes,
        diameter_bound,
        max_diameter,
        passed: oversized.is_empty() && crowded.is_empty(),
        oversized_classes: oversized,
        crowded_balls: crowded,
    }
}

/// Balls of radius `t` meet at most `d + 1` classes; classes have diameter at most `28t + 7`.
pub fn verify_eqrel_witness(g: &FunctionalGraph, w: &EqRelWitness, d: usize) -> EqRelReport {
    verify_eqrel_with(g, w, w.t, d + 1, 28 * w.t + 7)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub checked: usize,
    pub max_ell: usize,
    /// Vertices whose color does not change within `2s + 2` steps of colored room.
    pub slow_changes: Vec<usize>,
    /// Vertices `x` whose short backward tree at `e(x)` carries `x`'s own color.
    pub chain_failures: Vec<usize>,
    /// Class members that never pass through `e(x)` for a class mate `x`.
    pub reach_failures: Vec<(usize, usize)>,
    /// Class pairs farther apart than `2s/3 + ℓ(x) + ℓ(y)`.
    pub pair_bound_failures: Vec<(usize, usize)>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.slow_changes.is_empty()
            && self.chain_failures.is_empty()
            && self.reach_failures.is_empty()
            && self.pair_bound_failures.is_empty()
    }
}

/// Exhaustive check of the structural facts behind the cover bound.
pub fn check_structure(g: &FunctionalGraph, c: &Coloring) -> StructureReport {
    let p = &c.params;
    let mut report = StructureReport::default();
    for x in 0..g.len() {
        if c.color(x).is_none() {
            continue;
        }
        match c.ell[x] {
            Some(l) => {
                report.max_ell = report.max_ell.max(l);
                if l > p.max_change() {
                    report.slow_changes.push(x);
                }
            }
            None => {
                if g.iterate(x, p.max_change())
                    .is_some_and(|y| c.color(y).is_some())
                {
                    report.slow_changes.push(x);
                }
            }
        }
    }

    let depth = p.s / 3;
    for &x in &c.core {
        report.checked += 1;
        let i = c.color(x).expect("core vertices are colored");
        let ex = c.e[x].expect("core vertices have e(x)");
        let mut frontier = vec![ex];
        let mut ok = true;
        for level in 0..=depth {
            if frontier.iter().any(|&z| c.color(z) == Some(i)) {
                ok = false;
                break;
            }
            if level < depth {
                frontier = frontier.iter().flat_map(|&z| g.preds(z).iter().copied()).collect();
            }
        }
        if !ok {
            report.chain_failures.push(x);
        }
    }

    for i in 0..2u8 {
        let classes = f_r_classes(g, &c.part(i), p.t);
        let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &x in &c.core {
            if let Some(k) = classes.class_of(x) {
                by_class.entry(k).or_default().push(x);
            }
        }
        let members = classes.classes();
        for (k, core_members) in by_class {
            for &x in &core_members {
                let ex = c.e[x].expect("core vertices have e(x)");
                for &y in &members[k] {
                    if g.steps_to(y, ex).is_none() {
                        report.reach_failures.push((x, y));
                    }
                }
            }
            for (a, &x) in core_members.iter().enumerate() {
                for &y in &core_members[a + 1..] {
                    let bound = 2 * p.s / 3 + c.ell[x].unwrap() + c.ell[y].unwrap();
                    if !g.graph_distance(x, y).is_within(bound) {
                        report.pair_bound_failures.push((x, y));
                    }
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub members: usize,
    pub horizon: Option<usize>,
    pub report: VerificationReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqRelClosure {
    /// Least `d` for which every fully colored `B_{2t(d+1)}` ball meets at
    /// most `d + 1` classes, if any up to the search cap.
    pub d: Option<usize>,
    pub d_tried: usize,
    pub closure: ClosureReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineStep {
    pub t: usize,
    pub r: usize,
    pub hitting_members: usize,
    pub colored: usize,
    pub core: usize,
    pub cover: CoverReport,
    pub sharp_cover: CoverReport,
    pub structure: StructureReport,
    pub eqrel: EqRelReport,
    pub cover_closure: [ClosureReport; 2],
    pub eqrel_closure: EqRelClosure,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub n: usize,
    pub steps: Vec<PipelineStep>,
    pub passed: bool,
}

/// Largest `d` tried when searching for a `d` meeting the ball hypothesis.
pub const HYPOTHESIS_CAP: usize = 8;

fn closure_of(g: &FunctionalGraph, h: HittingSet) -> ClosureReport {
    ClosureReport {
        members: h.members.len(),
        horizon: h.horizon,
        report: verify_hitting_set(g, &h),
    }
}

/// Runs hitting set → cover → hitting set and hitting set → relation →
/// hitting set for each `t`, verifying every intermediate witness.
pub fn asdim_leq_one_pipeline(g: &FunctionalGraph, t_list: &[usize]) -> Result<PipelineReport> {
    g.ensure_acyclic()?;
    let mut steps = Vec::new();
    for &t in t_list {
        let params = AsdimParams::new(t)?;
        let h = greedy_hitting(g, params.r)?;
        let coloring = Coloring::build(g, &h, t)?;
        let cover = cover_from_coloring(&coloring);
        let cover_report = verify_cover_witness(g, &cover, t);
        let sharp_cover = verify_cover_witness_with_bound(g, &cover, t, params.sharp_cover_bound());
        let structure = check_structure(g, &coloring);
        let eqrel = eqrel_from_coloring(g, &coloring);
        let eqrel_report = verify_eqrel_with(g, &eqrel, t, 2, params.eqrel_bound());

        // Both colors recur within two color changes, so each part hits
        // every vertex with that much colored room ahead.
        let part_horizon = params.label_horizon() + 2 * params.max_change();
        let cover_closure = [0u8, 1].map(|i| {
            let part = cover.part(i);
            let hs = hitting_from_cover(g, &part, t, part_horizon).expect("graph is acyclic");
            closure_of(g, hs)
        });

        // A vertex is related to something once t + 2s + 2 steps ahead are colored.
        let e_horizon = params.label_horizon() + t + params.max_change();
        let mut eqrel_closure = None;
        for d in 1..=HYPOTHESIS_CAP {
            let radius = 2 * t * (d + 1);
            let centers: Vec<usize> = (0..g.len())
                .filter(|&x| g.ball(x, radius).iter().all(|&y| eqrel.partition.class_of(y).is_some()))
                .collect();
            let out = hitting_from_eqrel(g, &eqrel.partition, t, d, e_horizon, &centers)
                .expect("graph is acyclic");
            if out.hypothesis.valid || d == HYPOTHESIS_CAP {
                eqrel_closure = Some(EqRelClosure {
                    d: out.hypothesis.valid.then_some(d),
                    d_tried: d,
                    closure: closure_of(g, out.hitting),
                });
                break;
            }
        }
        let eqrel_closure = eqrel_closure.expect("cap is at least one");

        let passed = cover_report.passed
            && sharp_cover.passed
            && structure.passed()
            && eqrel_report.passed
            && cover_closure.iter().all(|c| c.report.valid)
            && eqrel_closure.closure.report.valid;
        steps.push(PipelineStep {
            t,
            r: params.r,
            hitting_members: h.members.len(),
            colored: coloring.labels.color.iter().flatten().count(),
            core: coloring.core.len(),
            cover: cover_report,
            sharp_cover,
            structure,
            eqrel: eqrel_report,
            cover_closure,
            eqrel_closure,
            passed,
        });
    }
    let passed = steps.iter().all(|s| s.passed);
    Ok(PipelineReport { n: g.len(), steps, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_path;

    #[test]
    fn intervals() {
        let iv = interval_decomposition(6);
        assert_eq!(iv.len(), 11);
        assert!(iv[..5].iter().all(|r| r.len() == 6));
        assert!(iv[5..].iter().all(|r| r.len() == 7));
        assert_eq!(iv.last().unwrap().end, 72);
        assert_eq!(interval_decomposition(1), vec![0..2]);
        for s in 1..20 {
            let iv = interval_decomposition(s);
            assert_eq!(iv.iter().map(Range::len).sum::<usize>(), s * (s + 1) + (s - 1) * s);
            assert_eq!(iv.len() % 2, 1);
        }
    }

    #[test]
    fn params() {
        let p = AsdimParams::new(1).unwrap();
        assert_eq!((p.s, p.r, p.label_horizon()), (6, 144, 222));
        assert_eq!(p.cover_bound(), 35);
        assert!(AsdimParams::new(0).is_err());
    }

    #[test]
    fn coloring_formula_on_a_path() {
        let g = gen_path(2000);
        let h = greedy_hitting(&g, 144).unwrap();
        let c = c_h(&g, &h, 1).unwrap();
        for x in 0..g.len() {
            if let (Some(col), Some(k)) = (c.color[x], c.k[x]) {
                if k >= 72 {
                    assert_eq!(col as usize, (k / 6) % 2);
                }
                if k == 72 {
                    assert_eq!(col, 0);
                }
            }
        }
        assert!(c.color.iter().flatten().count() > 1500);
    }

    #[test]
    fn f_r_class_examples() {
        let g = gen_path(12);
        assert_eq!(f_r_classes(&g, &[2, 5], 3).num_classes(), 1);
        assert_eq!(f_r_classes(&g, &[2, 6], 3).num_classes(), 2);
        let thirds: Vec<usize> = (0..12).step_by(3).collect();
        assert_eq!(f_r_classes(&g, &thirds, 3).num_classes(), 1);
        assert_eq!(f_r_classes(&g, &thirds, 3).class_of(1), None);
    }

    #[test]
    fn diameter_examples() {
        let g = gen_path(40);
        let p = Partition::from_keys((0..40).map(|x| Some(if x < 3 { 0 } else { x })));
        let d = class_diameters(&g, &p);
        assert_eq!(d[0], Some(2));
        assert_eq!(d[1], Some(0));
        let all = Partition::single_class(40);
        assert_eq!(class_diameters(&g, &all), vec![Some(39)]);
    }

    #[test]
    fn singleton_relation_passes() {
        let g = gen_path(60);
        let w = EqRelWitness {
            t: 1,
            s: 6,
            partition: Partition::singletons(60),
            interior: (0..60).collect(),
        };
        let rep = verify_eqrel_with(&g, &w, 1, 3, 0);
        assert!(rep.passed);
        assert_eq!(rep.max_diameter, Distance(Some(0)));
        let one = EqRelWitness {
            partition: Partition::single_class(60),
            ..w
        };
        assert!(!verify_eqrel_witness(&g, &one, 1).passed);
    }

    #[test]
    fn empty_interior_is_vacuous() {
        let g = gen_path(10);
        let w = CoverWitness { t: 1, bits: vec![None; 10], interior: vec![] };
        assert!(verify_cover_witness(&g, &w, 1).passed);
    }

    #[test]
    fn rejects_cycles() {
        let g = FunctionalGraph::build(2, vec![Some(1), Some(0)]).unwrap();
        assert_eq!(asdim_leq_one_pipeline(&g, &[1]).unwrap_err(), Error::Cyclic(0));
    }
}
