//! Bounded enumeration of zero pairs `f g = 0` with `deg f, deg g <= dmax`.
//!
//! Polynomials are handled as padded coefficient tuples `(a_0, ..., a_dmax)`
//! ordered lexicographically with `a_0` most significant. For a fixed `f`
//! with lowest nonzero coefficient `a = a_s`, the coefficient of `x^{s+j}`
//! in `f g` forces `a g_j = -Σ_{i>s} a_i g_{s+j-i}`, so `g_j` ranges over a
//! fibre of left multiplication by `a`. The remaining high coefficients are
//! checked once `g` is complete.

use std::ops::{ControlFlow, Range};

use crate::error::{Error, Result};
use crate::poly::{Poly, ZeroPair};
use crate::ring::{Elem, Radix, Ring};

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Preimage lists are cached for every leading coefficient up to this order.
const ROW_CACHE_LIMIT: u64 = 2048;
const EXACT_ANNIHILATOR_LIMIT: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Ceiling on the estimated number of partial products.
    pub budget: u128,
    /// Worker threads; results never depend on this.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

/// Upper estimate of the partial products needed to enumerate every zero
/// pair up to `dmax`.
pub fn estimate_cost(ring: &Ring, dmax: usize) -> u128 {
    let n = ring.order() as u128;
    let ann: Vec<u128> = if ring.order() <= EXACT_ANNIHILATOR_LIMIT {
        ring.elements()
            .skip(1)
            .map(|a| ring.elements().filter(|&b| ring.mul(a, b).is_zero()).count() as u128)
            .collect()
    } else {
        // A proper additive subgroup has index at least 2.
        vec![n / 2; (n - 1) as usize]
    };
    let mut total = n.saturating_mul(n);
    total = total.saturating_add(sat_pow(n, dmax + 1));
    let leaves: u128 = ann
        .iter()
        .fold(0u128, |acc, &c| acc.saturating_add(sat_pow(c, dmax + 1)));
    for s in 0..=dmax {
        total = total.saturating_add(sat_pow(n, dmax - s).saturating_mul(leaves));
    }
    total
}

fn sat_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

pub(crate) fn check_budget(ring: &Ring, dmax: usize, budget: u128) -> Result<u128> {
    ring.require_scannable("zero-pair search")?;
    let estimate = estimate_cost(ring, dmax);
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    Ok(estimate)
}

/// Elements `b` grouped by the value of `a b`, ascending within each group.
struct PreimageRow {
    offsets: Vec<u32>,
    bs: Vec<u32>,
}

impl PreimageRow {
    fn new(ring: &Ring, a: Elem) -> PreimageRow {
        let n = ring.order() as usize;
        let prods: Vec<u32> = ring.elements().map(|b| ring.mul(a, b).0 as u32).collect();
        let mut offsets = vec![0u32; n + 1];
        for &p in &prods {
            offsets[p as usize + 1] += 1;
        }
        for t in 0..n {
            offsets[t + 1] += offsets[t];
        }
        let mut fill = offsets.clone();
        let mut bs = vec![0u32; n];
        for (b, &p) in prods.iter().enumerate() {
            bs[fill[p as usize] as usize] = b as u32;
            fill[p as usize] += 1;
        }
        PreimageRow { offsets, bs }
    }

    #[inline]
    fn fibre(&self, t: Elem) -> &[u32] {
        let (lo, hi) = (self.offsets[t.0 as usize], self.offsets[t.0 as usize + 1]);
        &self.bs[lo as usize..hi as usize]
    }
}

/// The pruned enumeration engine for one ring and degree bound.
pub(crate) struct Enumerator {
    ring: Ring,
    dmax: usize,
    radix: Radix,
    rows: Option<Vec<PreimageRow>>,
}

impl Enumerator {
    pub fn new(ring: &Ring, dmax: usize) -> Enumerator {
        let rows = (ring.order() <= ROW_CACHE_LIMIT)
            .then(|| ring.elements().map(|a| PreimageRow::new(ring, a)).collect());
        Enumerator {
            ring: ring.clone(),
            dmax,
            radix: Radix::new(vec![ring.order(); dmax + 1]),
            rows,
        }
    }

    /// Number of padded tuples; index 0 is the zero polynomial.
    pub fn f_count(&self) -> u64 {
        self.radix.order() as u64
    }

    pub fn decode(&self, idx: u64) -> Vec<Elem> {
        self.radix.decode(idx).into_iter().map(Elem).collect()
    }

    /// Calls `visit` with every nonzero `g` such that `f g = 0`, in
    /// lexicographic order, until it breaks. Returns whether it broke.
    pub fn partners(&self, f: &[Elem], mut visit: impl FnMut(&[Elem]) -> ControlFlow<()>) -> bool {
        let Some(s) = f.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let owned;
        let row = match &self.rows {
            Some(rows) => &rows[f[s].0 as usize],
            None => {
                owned = PreimageRow::new(&self.ring, f[s]);
                &owned
            }
        };
        let mut g = vec![Elem::ZERO; self.dmax + 1];
        self.descend(f, s, row, 0, &mut g, &mut visit).is_break()
    }

    fn descend(
        &self,
        f: &[Elem],
        s: usize,
        row: &PreimageRow,
        j: usize,
        g: &mut Vec<Elem>,
        visit: &mut impl FnMut(&[Elem]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let ring = &self.ring;
        let d = self.dmax;
        if j > d {
            if g.iter().all(|b| b.is_zero()) {
                return ControlFlow::Continue(());
            }
            for k in (s + d + 1)..=(2 * d) {
                let mut acc = Elem::ZERO;
                for i in (k - d)..=d {
                    acc = ring.add(acc, ring.mul(f[i], g[k - i]));
                }
                if !acc.is_zero() {
                    return ControlFlow::Continue(());
                }
            }
            return visit(g);
        }
        let mut acc = Elem::ZERO;
        for i in (s + 1)..=d.min(s + j) {
            acc = ring.add(acc, ring.mul(f[i], g[s + j - i]));
        }
        let target = ring.neg(acc);
        for &b in row.fibre(target) {
            g[j] = Elem(b as u64);
            self.descend(f, s, row, j + 1, g, visit)?;
        }
        g[j] = Elem::ZERO;
        ControlFlow::Continue(())
    }

    pub fn f_range(&self) -> Range<u64> {
        1..self.f_count()
    }
}

/// Every zero pair up to `dmax`, in lexicographic order of `(f, g)`.
pub struct ZeroPairs {
    engine: Enumerator,
    next_f: u64,
    buffer: std::collections::VecDeque<ZeroPair>,
}

impl Iterator for ZeroPairs {
    type Item = ZeroPair;

    fn next(&mut self) -> Option<ZeroPair> {
        while self.buffer.is_empty() {
            if self.next_f >= self.engine.f_count() {
                return None;
            }
            let f = self.engine.decode(self.next_f);
            self.next_f += 1;
            let ring = self.engine.ring.clone();
            let fp = Poly::from_trusted(&ring, f.clone());
            let mut found = Vec::new();
            self.engine.partners(&f, |g| {
                found.push(ZeroPair {
                    f: fp.clone(),
                    g: Poly::from_trusted(&ring, g.to_vec()),
                });
                ControlFlow::Continue(())
            });
            self.buffer.extend(found);
        }
        self.buffer.pop_front()
    }
}

/// Streams all zero pairs with both degrees at most `dmax`; refused when
/// the cost estimate exceeds `budget`.
pub fn enumerate_zero_pairs(ring: &Ring, dmax: usize, budget: u128) -> Result<ZeroPairs> {
    check_budget(ring, dmax, budget)?;
    Ok(ZeroPairs {
        engine: Enumerator::new(ring, dmax),
        next_f: 1,
        buffer: Default::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::convolve;
    use crate::ring::{make_matrix, make_tri, make_zmod, Config};

    /// Unpruned double loop over padded tuples.
    pub(crate) fn naive_pairs(ring: &Ring, dmax: usize) -> Vec<(Vec<Elem>, Vec<Elem>)> {
        let radix = Radix::new(vec![ring.order(); dmax + 1]);
        let all: Vec<Vec<Elem>> = (1..radix.order() as u64)
            .map(|i| radix.decode(i).into_iter().map(Elem).collect())
            .collect();
        let mut out = Vec::new();
        for f in &all {
            for g in &all {
                if convolve(ring, f, g).iter().all(|c| c.is_zero()) {
                    out.push((f.clone(), g.clone()));
                }
            }
        }
        out
    }

    fn pruned(ring: &Ring, dmax: usize) -> Vec<(Vec<Elem>, Vec<Elem>)> {
        let e = Enumerator::new(ring, dmax);
        let mut out = Vec::new();
        for i in e.f_range() {
            let f = e.decode(i);
            e.partners(&f, |g| {
                out.push((f.clone(), g.to_vec()));
                ControlFlow::Continue(())
            });
        }
        out
    }

    #[test]
    fn field_has_no_zero_pairs() {
        let r = make_zmod(5, &Config::default()).unwrap();
        assert_eq!(enumerate_zero_pairs(&r, 2, DEFAULT_BUDGET).unwrap().count(), 0);
    }

    #[test]
    fn z4_constants() {
        let r = make_zmod(4, &Config::default()).unwrap();
        let pairs: Vec<ZeroPair> = enumerate_zero_pairs(&r, 0, DEFAULT_BUDGET).unwrap().collect();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].f.coeffs(), &[Elem(2)]);
        assert_eq!(pairs[0].g.coeffs(), &[Elem(2)]);
    }

    #[test]
    fn t2_matches_naive_in_order() {
        let z2 = make_zmod(2, &Config::default()).unwrap();
        let t = make_tri(&z2, 2, &Config::default()).unwrap();
        for d in 0..=1 {
            assert_eq!(pruned(&t, d), naive_pairs(&t, d));
        }
    }

    #[test]
    fn unbuffered_cache_path_agrees() {
        // Order above the row cache limit is exercised through a small
        // ring by comparing cached and uncached rows directly.
        let z2 = make_zmod(2, &Config::default()).unwrap();
        let m = make_matrix(&z2, 2, &Config::default()).unwrap();
        let mut e = Enumerator::new(&m, 1);
        let cached = pruned(&m, 1);
        e.rows = None;
        let mut out = Vec::new();
        for i in e.f_range() {
            let f = e.decode(i);
            e.partners(&f, |g| {
                out.push((f.clone(), g.to_vec()));
                ControlFlow::Continue(())
            });
        }
        assert_eq!(out, cached);
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let z2 = make_zmod(2, &Config::default()).unwrap();
        let m = make_matrix(&z2, 2, &Config::default()).unwrap();
        match enumerate_zero_pairs(&m, 3, 1000) {
            Err(Error::BudgetExceeded { estimate, budget }) => {
                assert!(estimate > budget);
                assert_eq!(budget, 1000);
            }
            other => panic!("expected refusal, got {:?}", other.map(|_| ())),
        }
        assert!(estimate_cost(&m, 3) < DEFAULT_BUDGET);
    }
}
