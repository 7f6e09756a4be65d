//! Unital ring homomorphisms given by explicit tables.

use super::{additive_generators, Elem, Ring};
use crate::error::{Error, Result};

/// A unital ring homomorphism `source -> target`.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    table: Vec<Elem>,
}

impl RingMap {
    /// Validates that `table` preserves addition, multiplication and the
    /// identity. Checks run over an additive generating set of the source,
    /// which suffices by bilinearity once additivity holds everywhere.
    pub fn new(source: &Ring, target: &Ring, table: Vec<Elem>) -> Result<RingMap> {
        source.require_scannable("ring map")?;
        if table.len() as u64 != source.order() {
            return Err(Error::NotEndomorphism(format!(
                "table has {} entries, source has {}",
                table.len(),
                source.order()
            )));
        }
        if let Some(bad) = table.iter().find(|e| e.0 >= target.order()) {
            return Err(Error::NotEndomorphism(format!("image {bad} outside target")));
        }
        let m = RingMap {
            source: source.clone(),
            target: target.clone(),
            table,
        };
        if m.apply(source.one()) != target.one() {
            return Err(Error::NotEndomorphism("one is not mapped to one".into()));
        }
        let gens = additive_generators(source, source.elements());
        for &a in &gens {
            for b in source.elements() {
                if m.apply(source.add(a, b)) != target.add(m.apply(a), m.apply(b)) {
                    return Err(Error::NotEndomorphism(format!(
                        "addition not preserved at ({}, {})",
                        source.label_of(a),
                        source.label_of(b)
                    )));
                }
            }
        }
        for &a in &gens {
            for &b in &gens {
                if m.apply(source.mul(a, b)) != target.mul(m.apply(a), m.apply(b)) {
                    return Err(Error::NotEndomorphism(format!(
                        "multiplication not preserved at ({}, {})",
                        source.label_of(a),
                        source.label_of(b)
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(source: &Ring, target: &Ring, f: impl Fn(Elem) -> Elem) -> Result<RingMap> {
        source.require_scannable("ring map")?;
        let table = source.elements().map(f).collect();
        RingMap::new(source, target, table)
    }

    pub fn identity(ring: &Ring) -> Result<RingMap> {
        RingMap::from_fn(ring, ring, |x| x)
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x.0 as usize]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.same(&self.target)
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.table.iter().enumerate().all(|(i, e)| e.0 == i as u64)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut hit = vec![false; self.target.order() as usize];
        for e in &self.table {
            if std::mem::replace(&mut hit[e.0 as usize], true) {
                return false;
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order() as usize];
        for e in &self.table {
            hit[e.0 as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn kernel(&self) -> Vec<Elem> {
        self.source
            .elements()
            .filter(|&x| self.apply(x).is_zero())
            .collect()
    }

    /// `k`-fold composite of an endomorphism with itself.
    pub fn power(&self, k: usize) -> Result<RingMap> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism("powers need an endomorphism".into()));
        }
        let table = self
            .source
            .elements()
            .map(|x| (0..k).fold(x, |acc, _| self.apply(acc)))
            .collect();
        Ok(RingMap {
            source: self.source.clone(),
            target: self.target.clone(),
            table,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zmod, Config};

    #[test]
    fn swap_on_a_square_is_an_automorphism() {
        let cfg = Config::default();
        let z2 = make_zmod(2, &cfg).unwrap();
        let p = make_product(&[z2.clone(), z2.clone()], &cfg).unwrap();
        let swap = RingMap::from_fn(&p, &p, |x| {
            let (a, b) = (x.0 / 2, x.0 % 2);
            Elem(b * 2 + a)
        })
        .unwrap();
        assert!(swap.is_bijective());
        assert!(swap.power(2).unwrap().is_identity());
    }

    #[test]
    fn non_unital_map_rejected() {
        let cfg = Config::default();
        let z4 = make_zmod(4, &cfg).unwrap();
        assert!(RingMap::from_fn(&z4, &z4, |_| Elem(0)).is_err());
    }

    #[test]
    fn frobenius_on_z4_is_not_additive_when_squaring() {
        let cfg = Config::default();
        let z4 = make_zmod(4, &cfg).unwrap();
        let sq = RingMap::from_fn(&z4, &z4, |x| z4.mul(x, x));
        assert!(matches!(sq, Err(Error::NotEndomorphism(_))));
    }
}
