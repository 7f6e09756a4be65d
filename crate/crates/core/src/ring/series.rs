//! Truncated power series `B[t]/(t^m)` over a commutative base.

use std::sync::Arc;

use super::{check_order, Config, Elem, Radix, Ring, Structure};
use crate::error::{invalid, Result};

pub(crate) struct TruncSeries {
    base: Ring,
    m: usize,
    radix: Radix,
    one: u64,
}

impl TruncSeries {
    fn coeffs(&self, a: u64) -> Vec<Elem> {
        self.radix.decode(a).into_iter().map(Elem).collect()
    }

    fn encode(&self, c: &[Elem]) -> u64 {
        self.radix.encode(&c.iter().map(|e| e.0).collect::<Vec<_>>())
    }
}

impl Structure for TruncSeries {
    fn order(&self) -> u64 {
        self.radix.order() as u64
    }

    fn one(&self) -> u64 {
        self.one
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<Elem> = x.iter().zip(&y).map(|(&p, &q)| self.base.add(p, q)).collect();
        self.encode(&s)
    }

    fn neg(&self, a: u64) -> u64 {
        let s: Vec<Elem> = self.coeffs(a).into_iter().map(|p| self.base.neg(p)).collect();
        self.encode(&s)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let mut out = vec![Elem::ZERO; self.m];
        for (i, &p) in x.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, &q) in y.iter().enumerate().take(self.m - i) {
                out[i + j] = self.base.add(out[i + j], self.base.mul(p, q));
            }
        }
        self.encode(&out)
    }

    fn label(&self, a: u64) -> String {
        let c = self.coeffs(a);
        let mut terms = Vec::new();
        for (k, &x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let coeff = self.base.label_of(x);
            let coeff = if coeff.contains(['+', '-']) && k > 0 {
                format!("({coeff})")
            } else {
                coeff
            };
            let term = match (k, x == self.base.one()) {
                (0, _) => coeff,
                (1, true) => "t".to_string(),
                (1, false) => format!("{coeff}t"),
                (_, true) => format!("t^{k}"),
                (_, false) => format!("{coeff}t^{k}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        self.base.unit_hint(Elem(self.radix.digit(a, 0)))
    }
}

/// `base[t]/(t^m)`; elements are coefficient tuples `(c_0, ..., c_{m-1})`.
pub fn make_trunc_series(base: &Ring, m: usize, config: &Config) -> Result<Ring> {
    if m == 0 {
        return Err(invalid("truncation order must be at least 1"));
    }
    if !base.is_commutative() {
        return Err(invalid(format!(
            "truncated series need a commutative base; {} is not",
            base.label()
        )));
    }
    let radix = Radix::new(vec![base.order(); m]);
    let label = format!("Trunc({},{m})", base.label());
    check_order(&label, radix.order(), config)?;
    let mut one = vec![0; m];
    one[0] = base.one().0;
    let one = radix.encode(&one);
    let s = TruncSeries {
        base: base.clone(),
        m,
        radix,
        one,
    };
    Ring::from_structure(label, Arc::new(s), config)
}

/// The series with the given coefficients (missing ones are zero).
pub fn series_elem(base: &Ring, m: usize, coeffs: &[Elem]) -> Elem {
    let radix = Radix::new(vec![base.order(); m]);
    let mut d = vec![0; m];
    for (i, c) in coeffs.iter().enumerate().take(m) {
        d[i] = c.0;
    }
    Elem(radix.encode(&d))
}
