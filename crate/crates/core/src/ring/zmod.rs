//! Residue rings Z/nZ.

use std::sync::Arc;

use super::{Config, Ring, Structure};
use crate::error::{invalid, Result};

pub(crate) struct Zmod {
    n: u64,
}

impl Structure for Zmod {
    fn order(&self) -> u64 {
        self.n
    }

    fn one(&self) -> u64 {
        1 % self.n
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.n as u128) as u64
    }

    fn neg(&self, a: u64) -> u64 {
        (self.n - a) % self.n
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    fn label(&self, a: u64) -> String {
        a.to_string()
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        Some(gcd(a, self.n) == 1 && self.n > 1 || self.n == 1)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Z/nZ with representatives `0..n`.
pub fn make_zmod(n: u64, config: &Config) -> Result<Ring> {
    if n == 0 {
        return Err(invalid("modulus must be positive"));
    }
    Ring::from_structure(format!("Z{n}"), Arc::new(Zmod { n }), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Elem;

    #[test]
    fn zero_modulus_rejected() {
        assert!(make_zmod(0, &Config::default()).is_err());
    }

    #[test]
    fn z2_is_a_field() {
        let r = make_zmod(2, &Config::default()).unwrap();
        assert!(r.is_unit(Elem(1)).unwrap());
        assert!(!r.is_unit(Elem(0)).unwrap());
    }

    #[test]
    fn z4_two_squared_is_zero() {
        let r = make_zmod(4, &Config::default()).unwrap();
        assert_eq!(r.mul(Elem(2), Elem(2)), Elem(0));
    }

    #[test]
    fn z6_units_by_scan() {
        let r = make_zmod(6, &Config::default()).unwrap();
        let units: Vec<u64> = r
            .elements()
            .filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one()))
            .map(|e| e.0)
            .collect();
        assert_eq!(units, vec![1, 5]);
        for a in r.elements() {
            assert_eq!(r.is_unit(a).unwrap(), units.contains(&a.0));
        }
    }

    #[test]
    fn trivial_ring() {
        let r = make_zmod(1, &Config::default()).unwrap();
        assert_eq!(r.order(), 1);
        assert_eq!(r.one(), r.zero());
    }
}
