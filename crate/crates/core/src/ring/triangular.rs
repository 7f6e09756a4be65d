//! Formal triangular rings `[[R, M], [0, S]]` over an `(R, S)`-bimodule.

use std::sync::Arc;

use super::product::make_product;
use super::{check_order, make_matrix, Config, Elem, Radix, Ring, Structure};
use crate::error::{invalid, Error, Result};

/// An `(R, S)`-bimodule with explicit action tables. The additive group of
/// `M` is borrowed from a ring whose multiplication is ignored.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left_ring: Ring,
    right_ring: Ring,
    module: Ring,
    left: Vec<Elem>,
    right: Vec<Elem>,
}

impl Bimodule {
    /// Materializes both actions and checks every module and balance
    /// axiom exhaustively; the first failure names the offending triple.
    pub fn from_fn(
        left_ring: &Ring,
        right_ring: &Ring,
        module: &Ring,
        left: impl Fn(Elem, Elem) -> Elem,
        right: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Bimodule> {
        for r in [left_ring, right_ring, module] {
            r.require_scannable("bimodule tables")?;
        }
        let mut lt = Vec::with_capacity((left_ring.order() * module.order()) as usize);
        for r in left_ring.elements() {
            for m in module.elements() {
                lt.push(left(r, m));
            }
        }
        let mut rt = Vec::with_capacity((module.order() * right_ring.order()) as usize);
        for m in module.elements() {
            for s in right_ring.elements() {
                rt.push(right(m, s));
            }
        }
        Bimodule::from_tables(left_ring, right_ring, module, lt, rt)
    }

    pub fn from_tables(
        left_ring: &Ring,
        right_ring: &Ring,
        module: &Ring,
        left: Vec<Elem>,
        right: Vec<Elem>,
    ) -> Result<Bimodule> {
        if left.len() as u64 != left_ring.order() * module.order()
            || right.len() as u64 != module.order() * right_ring.order()
        {
            return Err(Error::BimoduleAxiom("action table has the wrong size".into()));
        }
        if left.iter().chain(&right).any(|e| e.0 >= module.order()) {
            return Err(Error::BimoduleAxiom("action value outside the module".into()));
        }
        let b = Bimodule {
            left_ring: left_ring.clone(),
            right_ring: right_ring.clone(),
            module: module.clone(),
            left,
            right,
        };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        let (r_ring, s_ring, m_ring) = (&self.left_ring, &self.right_ring, &self.module);
        let fail = |law: &str, parts: String| Err(Error::BimoduleAxiom(format!("{law} at {parts}")));
        for m in m_ring.elements() {
            if self.act_left(r_ring.one(), m) != m {
                return fail("1m = m", m_ring.label_of(m));
            }
            if self.act_right(m, s_ring.one()) != m {
                return fail("m1 = m", m_ring.label_of(m));
            }
            for r in r_ring.elements() {
                for m2 in m_ring.elements() {
                    if self.act_left(r, m_ring.add(m, m2))
                        != m_ring.add(self.act_left(r, m), self.act_left(r, m2))
                    {
                        return fail("r(m+m') = rm + rm'", format!("r={}, m={}", r_ring.label_of(r), m_ring.label_of(m)));
                    }
                }
                for r2 in r_ring.elements() {
                    if self.act_left(r_ring.add(r, r2), m)
                        != m_ring.add(self.act_left(r, m), self.act_left(r2, m))
                    {
                        return fail("(r+r')m = rm + r'm", format!("r={}, r'={}, m={}", r_ring.label_of(r), r_ring.label_of(r2), m_ring.label_of(m)));
                    }
                    if self.act_left(r_ring.mul(r, r2), m) != self.act_left(r, self.act_left(r2, m)) {
                        return fail("(rr')m = r(r'm)", format!("r={}, r'={}, m={}", r_ring.label_of(r), r_ring.label_of(r2), m_ring.label_of(m)));
                    }
                }
                for s in s_ring.elements() {
                    if self.act_right(self.act_left(r, m), s) != self.act_left(r, self.act_right(m, s)) {
                        return fail(
                            "(rm)s = r(ms)",
                            format!("r={}, m={}, s={}", r_ring.label_of(r), m_ring.label_of(m), s_ring.label_of(s)),
                        );
                    }
                }
            }
            for s in s_ring.elements() {
                for m2 in m_ring.elements() {
                    if self.act_right(m_ring.add(m, m2), s)
                        != m_ring.add(self.act_right(m, s), self.act_right(m2, s))
                    {
                        return fail("(m+m')s = ms + m's", format!("m={}, s={}", m_ring.label_of(m), s_ring.label_of(s)));
                    }
                }
                for s2 in s_ring.elements() {
                    if self.act_right(m, s_ring.add(s, s2))
                        != m_ring.add(self.act_right(m, s), self.act_right(m, s2))
                    {
                        return fail("m(s+s') = ms + ms'", format!("m={}, s={}, s'={}", m_ring.label_of(m), s_ring.label_of(s), s_ring.label_of(s2)));
                    }
                    if self.act_right(m, s_ring.mul(s, s2)) != self.act_right(self.act_right(m, s), s2) {
                        return fail("m(ss') = (ms)s'", format!("m={}, s={}, s'={}", m_ring.label_of(m), s_ring.label_of(s), s_ring.label_of(s2)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `R` acting on itself from both sides.
    pub fn regular(ring: &Ring) -> Result<Bimodule> {
        Bimodule::from_fn(ring, ring, ring, |r, m| ring.mul(r, m), |m, s| ring.mul(m, s))
    }

    /// `M = S` with `Z/n` acting on the left through `k ↦ k·1_S` and `S`
    /// acting on the right by multiplication.
    pub fn reduction(cyclic: &Ring, target: &Ring) -> Result<Bimodule> {
        let n = cyclic.order();
        if cyclic.times(n, cyclic.one()) != cyclic.zero()
            || (1..n).any(|k| cyclic.times(k, cyclic.one()).0 != k)
        {
            return Err(invalid(format!("{} is not a residue ring Z/n", cyclic.label())));
        }
        Bimodule::from_fn(
            cyclic,
            target,
            target,
            |k, m| target.times(k.0, m),
            |m, s| target.mul(m, s),
        )
    }

    /// Column vectors `B^n` as an `(M_n(B), B)`-bimodule.
    pub fn columns(base: &Ring, n: usize, config: &Config) -> Result<Bimodule> {
        let mats = make_matrix(base, n, config)?;
        let cols = make_product(&vec![base.clone(); n], config)?;
        let mat_r = Radix::new(vec![base.order(); n * n]);
        let col_r = Radix::new(vec![base.order(); n]);
        Bimodule::from_fn(
            &mats,
            base,
            &cols,
            |a, v| {
                let (a, v) = (mat_r.decode(a.0), col_r.decode(v.0));
                let out: Vec<u64> = (0..n)
                    .map(|i| {
                        (0..n).fold(Elem::ZERO, |acc, k| {
                            base.add(acc, base.mul(Elem(a[i * n + k]), Elem(v[k])))
                        })
                        .0
                    })
                    .collect();
                Elem(col_r.encode(&out))
            },
            |v, s| {
                let out: Vec<u64> = col_r
                    .decode(v.0)
                    .into_iter()
                    .map(|x| base.mul(Elem(x), s).0)
                    .collect();
                Elem(col_r.encode(&out))
            },
        )
    }

    pub fn left_ring(&self) -> &Ring {
        &self.left_ring
    }

    pub fn right_ring(&self) -> &Ring {
        &self.right_ring
    }

    pub fn module(&self) -> &Ring {
        &self.module
    }

    #[inline]
    pub fn act_left(&self, r: Elem, m: Elem) -> Elem {
        self.left[(r.0 * self.module.order() + m.0) as usize]
    }

    #[inline]
    pub fn act_right(&self, m: Elem, s: Elem) -> Elem {
        self.right[(m.0 * self.right_ring.order() + s.0) as usize]
    }
}

pub(crate) struct Triangular {
    bimodule: Bimodule,
    radix: Radix,
    one: u64,
}

impl Triangular {
    fn parts(&self, a: u64) -> (Elem, Elem, Elem) {
        let d = self.radix.decode(a);
        (Elem(d[0]), Elem(d[1]), Elem(d[2]))
    }

    fn pack(&self, r: Elem, m: Elem, s: Elem) -> u64 {
        self.radix.encode(&[r.0, m.0, s.0])
    }
}

impl Structure for Triangular {
    fn order(&self) -> u64 {
        self.radix.order() as u64
    }

    fn one(&self) -> u64 {
        self.one
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let bm = &self.bimodule;
        let ((r, m, s), (r2, m2, s2)) = (self.parts(a), self.parts(b));
        self.pack(
            bm.left_ring.add(r, r2),
            bm.module.add(m, m2),
            bm.right_ring.add(s, s2),
        )
    }

    fn neg(&self, a: u64) -> u64 {
        let bm = &self.bimodule;
        let (r, m, s) = self.parts(a);
        self.pack(bm.left_ring.neg(r), bm.module.neg(m), bm.right_ring.neg(s))
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let bm = &self.bimodule;
        let ((r, m, s), (r2, m2, s2)) = (self.parts(a), self.parts(b));
        self.pack(
            bm.left_ring.mul(r, r2),
            bm.module.add(bm.act_left(r, m2), bm.act_right(m, s2)),
            bm.right_ring.mul(s, s2),
        )
    }

    fn label(&self, a: u64) -> String {
        let bm = &self.bimodule;
        let (r, m, s) = self.parts(a);
        format!(
            "[[{},{}],[0,{}]]",
            bm.left_ring.label_of(r),
            bm.module.label_of(m),
            bm.right_ring.label_of(s)
        )
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        let (r, _, s) = self.parts(a);
        Some(self.bimodule.left_ring.unit_hint(r)? && self.bimodule.right_ring.unit_hint(s)?)
    }
}

/// `[[R, M], [0, S]]`; elements are triples `(r, m, s)`.
pub fn make_triangular(bimodule: &Bimodule, name: &str, config: &Config) -> Result<Ring> {
    let radix = Radix::new(vec![
        bimodule.left_ring.order(),
        bimodule.module.order(),
        bimodule.right_ring.order(),
    ]);
    let label = format!(
        "Triangular({},{},{name})",
        bimodule.left_ring.label(),
        bimodule.right_ring.label()
    );
    check_order(&label, radix.order(), config)?;
    let one = radix.encode(&[bimodule.left_ring.one().0, 0, bimodule.right_ring.one().0]);
    let s = Triangular {
        bimodule: bimodule.clone(),
        radix,
        one,
    };
    Ring::from_structure(label, Arc::new(s), config)
}

/// The element `(r, m, s)` of a triangular ring built from `bimodule`.
pub fn triangular_elem(bimodule: &Bimodule, r: Elem, m: Elem, s: Elem) -> Elem {
    let radix = Radix::new(vec![
        bimodule.left_ring.order(),
        bimodule.module.order(),
        bimodule.right_ring.order(),
    ]);
    Elem(radix.encode(&[r.0, m.0, s.0]))
}

/// Coordinates `(r, m, s)` of a triangular-ring element.
pub fn triangular_parts(bimodule: &Bimodule, e: Elem) -> (Elem, Elem, Elem) {
    let radix = Radix::new(vec![
        bimodule.left_ring.order(),
        bimodule.module.order(),
        bimodule.right_ring.order(),
    ]);
    let d = radix.decode(e.0);
    (Elem(d[0]), Elem(d[1]), Elem(d[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_tri, make_zmod, RingMap};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn regular_z2_is_t2() {
        let z2 = make_zmod(2, &cfg()).unwrap();
        let bm = Bimodule::regular(&z2).unwrap();
        let t = make_triangular(&bm, "regular", &cfg()).unwrap();
        assert_eq!(t.order(), 8);
        // (r, m, s) has the same coordinates as [[r, m], [0, s]] in T_2.
        let t2 = make_tri(&z2, 2, &cfg()).unwrap();
        let iso = RingMap::from_fn(&t, &t2, |e| e).unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn strictly_upper_block_squares_to_zero() {
        let z4 = make_zmod(4, &cfg()).unwrap();
        let z2 = make_zmod(2, &cfg()).unwrap();
        let bm = Bimodule::reduction(&z4, &z2).unwrap();
        let t = make_triangular(&bm, "reduce", &cfg()).unwrap();
        crate::ring::axioms::verify(&t).unwrap();
        for m in bm.module().elements() {
            for m2 in bm.module().elements() {
                let a = triangular_elem(&bm, Elem(0), m, Elem(0));
                let b = triangular_elem(&bm, Elem(0), m2, Elem(0));
                assert_eq!(t.mul(a, b), t.zero());
            }
        }
    }

    #[test]
    fn unbalanced_actions_rejected() {
        let z2 = make_zmod(2, &cfg()).unwrap();
        let z3 = make_zmod(3, &cfg()).unwrap();
        // Z3 cannot act unitally on Z2 through k -> k*1.
        assert!(Bimodule::reduction(&z3, &z2).is_err());
        let bad = Bimodule::from_fn(&z2, &z2, &z2, |_, m| m, |_, _| Elem(0));
        assert!(matches!(bad, Err(Error::BimoduleAxiom(_))));
    }

    #[test]
    fn column_bimodule() {
        let z2 = make_zmod(2, &cfg()).unwrap();
        let bm = Bimodule::columns(&z2, 2, &cfg()).unwrap();
        let t = make_triangular(&bm, "columns", &cfg()).unwrap();
        assert_eq!(t.order(), 16 * 4 * 2);
        crate::ring::axioms::verify(&t).unwrap();
    }
}
