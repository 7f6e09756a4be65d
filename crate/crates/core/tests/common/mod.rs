//! Brute-force oracles that use nothing but ring arithmetic.
#![allow(dead_code)]

use std::collections::BTreeSet;

use jmccoy::mccoy::{Side, Variant};
use jmccoy::ring::{Elem, Ring};

pub type Pair = (Vec<Elem>, Vec<Elem>);

/// Nonzero polynomials of degree at most `d`, trailing zeros stripped.
pub fn polys(ring: &Ring, d: usize) -> Vec<Vec<Elem>> {
    let n = ring.order();
    let total = n.pow(d as u32 + 1);
    (1..total)
        .map(|mut k| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..=d {
                c.push(Elem(k % n));
                k /= n;
            }
            while c.last().is_some_and(|e| e.is_zero()) {
                c.pop();
            }
            c
        })
        .collect()
}

pub fn mul(ring: &Ring, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem(0); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(a, b));
        }
    }
    out
}

pub fn zero_pairs(ring: &Ring, d: usize) -> BTreeSet<Pair> {
    let ps = polys(ring, d);
    let mut out = BTreeSet::new();
    for f in &ps {
        for g in &ps {
            if mul(ring, f, g).iter().all(|e| e.is_zero()) {
                out.insert((f.clone(), g.clone()));
            }
        }
    }
    out
}

pub fn nilpotent(ring: &Ring, x: Elem) -> bool {
    let mut p = x;
    for _ in 0..=ring.order() {
        if p.is_zero() {
            return true;
        }
        p = ring.mul(p, x);
    }
    false
}

/// `x` is in J(R) iff the right ideal `xR` is nil, for a finite ring.
pub fn jacobson(ring: &Ring) -> Vec<Elem> {
    ring.elements()
        .filter(|&x| ring.elements().all(|r| nilpotent(ring, ring.mul(x, r))))
        .collect()
}

pub struct Oracle {
    ring: Ring,
    in_j: Vec<bool>,
    nil: Vec<bool>,
}

impl Oracle {
    pub fn new(ring: &Ring) -> Oracle {
        let mut in_j = vec![false; ring.order() as usize];
        for x in jacobson(ring) {
            in_j[x.0 as usize] = true;
        }
        let nil = ring.elements().map(|x| nilpotent(ring, x)).collect();
        Oracle { ring: ring.clone(), in_j, nil }
    }

    fn target(&self, v: Variant, x: Elem) -> bool {
        match v {
            Variant::McCoy => x.is_zero(),
            Variant::NcMcCoy => self.nil[x.0 as usize],
            Variant::JMcCoy => self.in_j[x.0 as usize],
        }
    }

    /// Some nonzero `r` with `a r` (right) or `r b` (left) in the target for
    /// every coefficient.
    pub fn has_witness(&self, v: Variant, side: Side, coeffs: &[Elem]) -> bool {
        let r = &self.ring;
        r.elements().skip(1).any(|w| {
            coeffs.iter().all(|&a| {
                let p = match side {
                    Side::Right => r.mul(a, w),
                    Side::Left => r.mul(w, a),
                };
                self.target(v, p)
            })
        })
    }

    /// The least zero pair (in `(f, g)` order for the right side, `(g, f)`
    /// for the left) whose relevant factor has no witness.
    pub fn counterexample(&self, v: Variant, side: Side, d: usize) -> Option<Pair> {
        let pairs = zero_pairs(&self.ring, d);
        match side {
            Side::Right => pairs.into_iter().find(|(f, _)| !self.has_witness(v, side, f)),
            Side::Left => pairs.into_iter().find(|(_, g)| !self.has_witness(v, side, g)),
        }
    }
}
