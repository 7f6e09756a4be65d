//! Finite direct products with componentwise operations.

use std::sync::Arc;

use super::{check_order, Config, Elem, Radix, Ring, Structure};
use crate::error::{invalid, Result};

pub(crate) struct Product {
    factors: Vec<Ring>,
    radix: Radix,
    one: u64,
}

impl Product {
    fn zip(&self, a: u64, b: u64, op: impl Fn(&Ring, Elem, Elem) -> Elem) -> u64 {
        let mut da = self.radix.decode(a);
        for (i, f) in self.factors.iter().enumerate() {
            let db = self.radix.digit(b, i);
            da[i] = op(f, Elem(da[i]), Elem(db)).0;
        }
        self.radix.encode(&da)
    }
}

impl Structure for Product {
    fn order(&self) -> u64 {
        self.radix.order() as u64
    }

    fn one(&self) -> u64 {
        self.one
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, Ring::add)
    }

    fn neg(&self, a: u64) -> u64 {
        let mut d = self.radix.decode(a);
        for (i, f) in self.factors.iter().enumerate() {
            d[i] = f.neg(Elem(d[i])).0;
        }
        self.radix.encode(&d)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.zip(a, b, Ring::mul)
    }

    fn label(&self, a: u64) -> String {
        let d = self.radix.decode(a);
        let parts: Vec<String> = self
            .factors
            .iter()
            .zip(d)
            .map(|(f, x)| f.label_of(Elem(x)))
            .collect();
        format!("({})", parts.join(","))
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        let d = self.radix.decode(a);
        let mut all = true;
        for (f, x) in self.factors.iter().zip(d) {
            all &= f.unit_hint(Elem(x))?;
        }
        Some(all)
    }
}

/// Direct product of `factors`; elements are tuples ordered
/// lexicographically.
pub fn make_product(factors: &[Ring], config: &Config) -> Result<Ring> {
    if factors.is_empty() {
        return Err(invalid("product of an empty list of rings"));
    }
    let radix = Radix::new(factors.iter().map(Ring::order).collect());
    let label = format!(
        "Prod({})",
        factors.iter().map(|f| f.label().to_string()).collect::<Vec<_>>().join(",")
    );
    check_order(&label, radix.order(), config)?;
    let one = radix.encode(&factors.iter().map(|f| f.one().0).collect::<Vec<_>>());
    let s = Product {
        factors: factors.to_vec(),
        radix,
        one,
    };
    Ring::from_structure(label, Arc::new(s), config)
}

/// Coordinates of a product element.
pub fn components(ring: &Ring, factors: &[Ring], e: Elem) -> Vec<Elem> {
    debug_assert_eq!(
        ring.order() as u128,
        factors.iter().map(|f| f.order() as u128).product::<u128>()
    );
    Radix::new(factors.iter().map(Ring::order).collect())
        .decode(e.0)
        .into_iter()
        .map(Elem)
        .collect()
}

/// Product element with the given coordinates.
pub fn from_components(factors: &[Ring], parts: &[Elem]) -> Elem {
    let radix = Radix::new(factors.iter().map(Ring::order).collect());
    Elem(radix.encode(&parts.iter().map(|e| e.0).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;
    use crate::ring::predicates::idempotents;

    fn z(n: u64) -> Ring {
        make_zmod(n, &Config::default()).unwrap()
    }

    #[test]
    fn empty_product_rejected() {
        assert!(make_product(&[], &Config::default()).is_err());
    }

    #[test]
    fn z2_times_z2() {
        let p = make_product(&[z(2), z(2)], &Config::default()).unwrap();
        assert_eq!(p.order(), 4);
        assert_eq!(idempotents(&p).unwrap().len(), 4);
        assert_eq!(p.label_of(p.one()), "(1,1)");
    }

    #[test]
    fn coordinates_round_trip() {
        let fs = [z(2), z(4)];
        let p = make_product(&fs, &Config::default()).unwrap();
        for e in p.elements() {
            let c = components(&p, &fs, e);
            assert_eq!(from_components(&fs, &c), e);
        }
    }
}
