//! Opposite rings: same additive group, reversed multiplication.

use std::sync::Arc;

use super::{Config, Elem, Ring, Structure};
use crate::error::Result;

pub(crate) struct Opposite {
    base: Ring,
}

impl Structure for Opposite {
    fn order(&self) -> u64 {
        self.base.order()
    }

    fn one(&self) -> u64 {
        self.base.one().0
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        self.base.add(Elem(a), Elem(b)).0
    }

    fn neg(&self, a: u64) -> u64 {
        self.base.neg(Elem(a)).0
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.base.mul(Elem(b), Elem(a)).0
    }

    fn label(&self, a: u64) -> String {
        self.base.label_of(Elem(a))
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        self.base.unit_hint(Elem(a))
    }
}

/// `R^op` on the same element indices.
pub fn make_opposite(ring: &Ring, config: &Config) -> Result<Ring> {
    let label = format!("Opp({})", ring.label());
    Ring::from_structure(label, Arc::new(Opposite { base: ring.clone() }), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::axioms::tables_equal;
    use crate::ring::{make_matrix, make_zmod};

    #[test]
    fn involution_on_tables() {
        let cfg = Config::default();
        let m = make_matrix(&make_zmod(2, &cfg).unwrap(), 2, &cfg).unwrap();
        let oo = make_opposite(&make_opposite(&m, &cfg).unwrap(), &cfg).unwrap();
        assert!(tables_equal(&m, &oo));
        assert!(!tables_equal(&m, &make_opposite(&m, &cfg).unwrap()));
    }

    #[test]
    fn commutative_ring_is_its_own_opposite() {
        let cfg = Config::default();
        let z6 = make_zmod(6, &cfg).unwrap();
        assert!(tables_equal(&z6, &make_opposite(&z6, &cfg).unwrap()));
    }
}
