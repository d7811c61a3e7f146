//! Finite windows of infinite increasing sequences under the shift, and the
//! parity relation `H_r` used to label them into `D_r`.
//!
//! For an increasing `x` (with `x(-j) = 0`) the intervals
//! `J_n = [x(2rn - r), x(2rn + r))` partition the naturals. `y` is related to
//! `x` when `|J_n ∩ y|` is divisible by `2r` for the first `n` meeting `y`.
//! Answers are three-valued: `None` means the window is too short to decide.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteSeq(Vec<u64>);

impl TryFrom<Vec<u64>> for FiniteSeq {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<FiniteSeq> for Vec<u64> {
    fn from(s: FiniteSeq) -> Self {
        s.0
    }
}

impl FiniteSeq {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = values.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(i + 1));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> u64 {
        *self.0.last().expect("sequences are nonempty")
    }

    /// `x(i)` with `x(i) = 0` for negative `i`; `None` past the window.
    pub fn at(&self, i: i64) -> Option<u64> {
        if i < 0 {
            Some(0)
        } else {
            self.0.get(i as usize).copied()
        }
    }

    /// Entries in `[lo, hi)`.
    fn count_in(&self, lo: u64, hi: u64) -> usize {
        let a = self.0.partition_point(|&v| v < lo);
        let b = self.0.partition_point(|&v| v < hi);
        b - a
    }

    /// Pointwise `y(i) <= x(i)` on the common window.
    pub fn dominated_by(&self, x: &FiniteSeq) -> bool {
        self.0.iter().zip(&x.0).all(|(a, b)| a <= b)
    }
}

/// Drops the first entry; `None` once nothing would remain.
pub fn shift(y: &FiniteSeq) -> Option<FiniteSeq> {
    (y.len() > 1).then(|| FiniteSeq(y.0[1..].to_vec()))
}

/// Endpoints of `J_n`, when both lie in the window of `x`.
fn interval(x: &FiniteSeq, r: usize, n: usize) -> Option<(u64, u64)> {
    let (n, r) = (n as i64, r as i64);
    Some((x.at(2 * r * n - r)?, x.at(2 * r * n + r)?))
}

/// Index of the interval containing `v`, if its right end is in the window.
fn interval_of(x: &FiniteSeq, r: usize, v: u64) -> Option<usize> {
    (0..).map_while(|n| interval(x, r, n)).position(|(_, hi)| v < hi)
}

/// `|J_n ∩ y|` when `J_n` lies in the window and `y` certainly has no more entries there.
fn certified_count(x: &FiniteSeq, y: &FiniteSeq, r: usize, n: usize) -> Option<usize> {
    let (lo, hi) = interval(x, r, n)?;
    (y.last() + 1 >= hi).then(|| y.count_in(lo, hi))
}

pub fn h_r_member(x: &FiniteSeq, y: &FiniteSeq, r: usize) -> Option<bool> {
    let n = interval_of(x, r, y.values()[0])?;
    Some(certified_count(x, y, r, n)? % (2 * r) == 0)
}

/// Least `k` with `S^k(y)` related to `x`; every earlier shift must be decided.
pub fn phi_r(x: &FiniteSeq, y: &FiniteSeq, r: usize) -> Option<usize> {
    let mut cur = y.clone();
    let mut k = 0;
    loop {
        if h_r_member(x, &cur, r)? {
            return Some(k);
        }
        cur = shift(&cur)?;
        k += 1;
    }
}

/// Least `n` with `|J_n ∩ y| >= 2r`, each earlier interval certified smaller.
pub fn dense_interval_witness(x: &FiniteSeq, y: &FiniteSeq, r: usize) -> Option<usize> {
    for n in 0.. {
        let lo = x.at(2 * (r * n) as i64 - r as i64)?;
        let hi = x.at((2 * r * n + r) as i64);
        match hi {
            Some(hi) => {
                let known = y.count_in(lo, hi);
                if known >= 2 * r {
                    return Some(n);
                }
                if y.last() + 1 < hi {
                    return None;
                }
            }
            None => {
                // J_n runs past the window, so entries up to x's last lie inside it.
                let known = y.count_in(lo, x.last() + 1);
                return (known >= 2 * r).then_some(n);
            }
        }
    }
    unreachable!()
}

/// Random increasing sequence with gaps in `1..=max_gap`.
pub fn gen_increasing(len: usize, max_gap: u64, seed: u64) -> Result<FiniteSeq> {
    if len == 0 || max_gap == 0 {
        return Err(Error::InvalidParameter("need len >= 1 and max_gap >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = rng.gen_range(0..max_gap);
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(cur);
        cur += rng.gen_range(1..=max_gap);
    }
    FiniteSeq::new(v)
}

/// Deterministic sample of sequences with `y(i) <= x(i)` on the full window of `x`.
/// The first sample is `x` itself.
pub fn dominated_window_pairs(x: &FiniteSeq, count: usize, seed: u64) -> Vec<FiniteSeq> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if count > 0 {
        out.push(x.clone());
    }
    while out.len() < count {
        // Mix a tight follower of x with a dense early run; `lag` caps the distance.
        let lag = rng.gen_range(0..=8u64);
        let dense = rng.gen_bool(0.3);
        let mut y = Vec::with_capacity(x.len());
        for (i, &xi) in x.values().iter().enumerate() {
            let floor = if i == 0 { 0 } else { y[i - 1] + 1 };
            let v = if dense && rng.gen_bool(0.7) {
                floor
            } else {
                rng.gen_range(floor.max(xi.saturating_sub(lag))..=xi)
            };
            y.push(v);
        }
        out.push(FiniteSeq(y));
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub r: usize,
    pub pairs: usize,
    /// Pairs where both `φ(y)` and `φ(S(y))` were decided.
    pub checked: usize,
    pub decrement_checked: usize,
    pub zero_checked: usize,
    pub skipped: usize,
    /// Indices into the input with a broken `D_r` edge.
    pub violations: Vec<usize>,
}

/// Checks that `y ↦ φ_r(x, y)` sends each shift edge to an edge of `D_r`.
pub fn verify_phi_hom(x: &FiniteSeq, ys: &[FiniteSeq], r: usize) -> PhiReport {
    let mut rep = PhiReport {
        r,
        pairs: ys.len(),
        ..PhiReport::default()
    };
    for (i, y) in ys.iter().enumerate() {
        let a = phi_r(x, y, r);
        let b = shift(y).and_then(|sy| phi_r(x, &sy, r));
        let (Some(a), Some(b)) = (a, b) else {
            rep.skipped += 1;
            continue;
        };
        rep.checked += 1;
        let ok = if a > 0 {
            rep.decrement_checked += 1;
            b + 1 == a
        } else {
            rep.zero_checked += 1;
            b >= r
        };
        if !ok {
            rep.violations.push(i);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u64]) -> FiniteSeq {
        FiniteSeq::new(v.to_vec()).unwrap()
    }

    fn odds(len: u64) -> FiniteSeq {
        FiniteSeq::new((0..len).map(|i| 2 * i + 1).collect()).unwrap()
    }

    #[test]
    fn construction_and_shift() {
        assert_eq!(FiniteSeq::new(vec![]).unwrap_err(), Error::EmptySequence);
        assert_eq!(FiniteSeq::new(vec![1, 1]).unwrap_err(), Error::NotIncreasing(1));
        assert_eq!(shift(&seq(&[0, 2, 5])), Some(seq(&[2, 5])));
        assert_eq!(shift(&seq(&[7])), None);
        let s: FiniteSeq = serde_json::from_str("[1,4,9]").unwrap();
        assert_eq!(s.len(), 3);
        assert!(serde_json::from_str::<FiniteSeq>("[3,2]").is_err());
    }

    #[test]
    fn membership_examples() {
        let x = odds(10);
        assert_eq!(h_r_member(&x, &seq(&[0, 1, 2]), 1), Some(false));
        assert_eq!(h_r_member(&x, &seq(&[1, 2]), 1), Some(true));
        assert_eq!(h_r_member(&seq(&[1]), &seq(&[0, 1]), 1), None);
        assert_eq!(h_r_member(&x, &seq(&[1]), 1), None);
    }

    #[test]
    fn phi_examples() {
        let x = seq(&[1, 3, 5, 7, 9, 11, 13]);
        assert_eq!(phi_r(&x, &seq(&[0, 1, 2, 4]), 1), Some(1));
        assert_eq!(phi_r(&x, &seq(&[1, 2, 4]), 1), Some(0));
        assert_eq!(phi_r(&seq(&[1]), &seq(&[0, 1]), 1), None);
    }

    #[test]
    fn witness_examples() {
        let x = FiniteSeq::new((0..=20).collect()).unwrap();
        assert_eq!(dense_interval_witness(&x, &x, 1), Some(1));
        let all = FiniteSeq::new((0..40).collect()).unwrap();
        let evens = FiniteSeq::new((0..40).map(|i| 2 * i).collect()).unwrap();
        // Every J_n of the naturals holds exactly one even number.
        assert_eq!(dense_interval_witness(&all, &evens, 1), None);
        assert_eq!(dense_interval_witness(&evens, &all, 1), Some(0));
        assert_eq!(dense_interval_witness(&seq(&[0, 1]), &seq(&[0]), 2), None);
    }

    #[test]
    fn samples_are_dominated() {
        let x = odds(50);
        let ys = dominated_window_pairs(&x, 40, 3);
        assert_eq!(ys[0], x);
        assert!(ys.iter().all(|y| y.dominated_by(&x) && y.len() == x.len()));
        let above = FiniteSeq::new(x.values().iter().map(|v| v + 1).collect()).unwrap();
        assert!(!above.dominated_by(&x));
    }

    #[test]
    fn phi_is_a_homomorphism_on_samples() {
        for r in 1..=3 {
            let x = odds(20 * (r * r) as u64 + 5);
            let rep = verify_phi_hom(&x, &dominated_window_pairs(&x, 50, r as u64), r);
            assert!(rep.violations.is_empty());
            assert!(rep.checked > 0);
        }
    }
}
