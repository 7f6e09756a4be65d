//! Quotient rings `R/I` with least-index coset representatives.

use std::sync::Arc;

use super::{Config, Elem, Ideal, Ring, RingMap, Structure};
use crate::error::{Error, Result};

pub(crate) struct Quotient {
    parent: Ring,
    reps: Vec<Elem>,
    class: Vec<u32>,
}

impl Quotient {
    #[inline]
    fn lift(&self, a: u64) -> Elem {
        self.reps[a as usize]
    }

    #[inline]
    fn project(&self, x: Elem) -> u64 {
        self.class[x.0 as usize] as u64
    }
}

impl Structure for Quotient {
    fn order(&self) -> u64 {
        self.reps.len() as u64
    }

    fn one(&self) -> u64 {
        self.project(self.parent.one())
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        self.project(self.parent.add(self.lift(a), self.lift(b)))
    }

    fn neg(&self, a: u64) -> u64 {
        self.project(self.parent.neg(self.lift(a)))
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        self.project(self.parent.mul(self.lift(a), self.lift(b)))
    }

    fn label(&self, a: u64) -> String {
        format!("[{}]", self.parent.label_of(self.lift(a)))
    }
}

/// `R/I` together with the canonical projection.
pub fn make_quotient(ideal: &Ideal, config: &Config) -> Result<(Ring, RingMap)> {
    let parent = ideal.ring().clone();
    parent.require_scannable("quotient")?;
    let n = parent.order() as usize;
    let mut class = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in parent.elements() {
        if class[x.0 as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &i in ideal.members() {
            let y = parent.add(x, i);
            if class[y.0 as usize] != u32::MAX {
                return Err(Error::NotIdeal("cosets overlap; not an additive subgroup".into()));
            }
            class[y.0 as usize] = c;
        }
    }
    let label = format!("Quot({},{})", parent.label(), ideal.describe());
    let s = Quotient {
        parent: parent.clone(),
        reps,
        class: class.clone(),
    };
    let q = Ring::from_structure(label, Arc::new(s), config)?;
    let table = class.into_iter().map(|c| Elem(c as u64)).collect();
    let proj = RingMap::new(&parent, &q, table)?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::axioms::tables_equal;
    use crate::ring::{make_tri, make_zmod};

    #[test]
    fn z4_mod_two_is_z2() {
        let cfg = Config::default();
        let z4 = make_zmod(4, &cfg).unwrap();
        let i = Ideal::generated(&z4, &[Elem(2)]).unwrap();
        let (q, proj) = make_quotient(&i, &cfg).unwrap();
        assert!(tables_equal(&q, &make_zmod(2, &cfg).unwrap()));
        assert!(proj.is_surjective());
        assert_eq!(proj.kernel(), vec![Elem(0), Elem(2)]);
    }

    #[test]
    fn quotient_by_zero_is_the_ring() {
        let cfg = Config::default();
        let t2 = make_tri(&make_zmod(2, &cfg).unwrap(), 2, &cfg).unwrap();
        let (q, proj) = make_quotient(&Ideal::zero(&t2), &cfg).unwrap();
        assert!(tables_equal(&q, &t2));
        assert!(proj.is_bijective());
    }
}
