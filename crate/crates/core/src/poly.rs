//! Polynomials in a central indeterminate over a finite ring.

use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::ring::{Elem, Ring};

/// A polynomial `a_0 + a_1 x + ...`; normalized so the last stored
/// coefficient is nonzero (the zero polynomial stores nothing).
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.ring.same(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(ring: &Ring, coeffs: Vec<Elem>) -> Result<Poly> {
        if let Some(bad) = coeffs.iter().find(|c| c.0 >= ring.order()) {
            return Err(invalid(format!(
                "coefficient {bad} does not belong to {}",
                ring.label()
            )));
        }
        Ok(Poly::from_trusted(ring, coeffs))
    }

    pub(crate) fn from_trusted(ring: &Ring, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            ring: ring.clone(),
            coeffs,
        }
    }

    pub fn zero(ring: &Ring) -> Poly {
        Poly::from_trusted(ring, Vec::new())
    }

    pub fn constant(ring: &Ring, c: Elem) -> Poly {
        Poly::from_trusted(ring, vec![c])
    }

    /// Parses `a0 + a1*x + a2*x^2` where each coefficient is an element
    /// label of `ring`. Terms are separated by `" + "` with spaces, so
    /// labels containing a bare `+` stay intact; missing powers are zero.
    pub fn parse(ring: &Ring, text: &str) -> Result<Poly> {
        let mut coeffs: Vec<Elem> = Vec::new();
        for term in text.split(" + ") {
            let term = term.trim();
            let (label, power) = match term.rsplit_once('*') {
                Some((l, p)) if p.trim() == "x" => (l, 1),
                Some((l, p)) if p.trim().starts_with("x^") => {
                    let k = p.trim()[2..]
                        .parse::<usize>()
                        .map_err(|_| invalid(format!("bad exponent in `{term}`")))?;
                    (l, k)
                }
                _ => (term, 0),
            };
            let c = ring.find_label(label)?;
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Elem::ZERO);
            }
            coeffs[power] = ring.add(coeffs[power], c);
        }
        Ok(Poly::from_trusted(ring, coeffs))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Poly::from_trusted(&self.ring, coeffs))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(Poly::from_trusted(
            &self.ring,
            convolve(&self.ring, &self.coeffs, &other.coeffs),
        ))
    }

    /// `f(x) r`, coefficientwise on the right.
    pub fn mul_elem_right(&self, r: Elem) -> Poly {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(a, r)).collect();
        Poly::from_trusted(&self.ring, coeffs)
    }

    pub fn labels(&self) -> Vec<String> {
        self.ring.labels_of(&self.coeffs)
    }
}

/// Coefficients of the product of two coefficient vectors (not normalized).
pub(crate) fn convolve(ring: &Ring, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(a, b));
        }
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let l = self.ring.label_of(c);
            match i {
                0 => write!(f, "{l}")?,
                1 => write!(f, "{l}*x")?,
                _ => write!(f, "{l}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Poly", 3)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("coefficients", &self.labels())?;
        st.serialize_field("indices", &self.coeffs)?;
        st.end()
    }
}

/// Two nonzero polynomials with `f g = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroPair {
    pub f: Poly,
    pub g: Poly,
}

impl ZeroPair {
    pub fn new(f: Poly, g: Poly) -> Result<ZeroPair> {
        if f.is_zero() || g.is_zero() {
            return Err(invalid("zero pairs need nonzero polynomials"));
        }
        if !f.mul(&g)?.is_zero() {
            return Err(invalid(format!("({f})({g}) is not zero")));
        }
        Ok(ZeroPair { f, g })
    }
}

/// Substitutes `y = x^k` into `f_0 + f_1 y + ... + f_{m-1} y^{m-1}`, giving
/// `Σ_i f_i(x) x^{ik}`.
///
/// With `k` above every degree the blocks do not overlap, so the
/// coefficients of the result are exactly those of the `f_i` plus zeros.
pub fn pack_coefficients(fs: &[Poly], k: usize) -> Result<Poly> {
    let Some(first) = fs.first() else {
        return Err(invalid("nothing to pack"));
    };
    let ring = first.ring().clone();
    let mut coeffs = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        if !f.ring().same(&ring) {
            return Err(Error::RingMismatch);
        }
        if f.degree().is_some_and(|d| d >= k) && fs.len() > 1 {
            return Err(invalid(format!(
                "k = {k} does not exceed the degree {} of polynomial {i}",
                f.degree().unwrap_or(0)
            )));
        }
        for (j, &c) in f.coeffs().iter().enumerate() {
            let pos = i * k + j;
            if coeffs.len() <= pos {
                coeffs.resize(pos + 1, Elem::ZERO);
            }
            coeffs[pos] = ring.add(coeffs[pos], c);
        }
    }
    Ok(Poly::from_trusted(&ring, coeffs))
}

/// `f(x^k)`.
pub fn substitute_power(f: &Poly, k: usize) -> Result<Poly> {
    if k == 0 {
        return Err(invalid("k must be positive"));
    }
    let mut coeffs = vec![Elem::ZERO; f.coeffs().len().saturating_sub(1) * k + 1];
    for (j, &c) in f.coeffs().iter().enumerate() {
        coeffs[j * k] = c;
    }
    Ok(Poly::from_trusted(f.ring(), coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_matrix, make_zmod, Config};
    use proptest::prelude::*;

    fn z(n: u64) -> Ring {
        make_zmod(n, &Config::default()).unwrap()
    }

    fn p(r: &Ring, c: &[u64]) -> Poly {
        Poly::new(r, c.iter().map(|&i| Elem(i)).collect()).unwrap()
    }

    #[test]
    fn normalization_and_display() {
        let r = z(4);
        let f = p(&r, &[1, 0, 3, 0, 0]);
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.to_string(), "1 + 3*x^2");
        assert_eq!(Poly::parse(&r, "1 + 3*x^2").unwrap(), f);
        assert!(p(&r, &[0, 0]).is_zero());
        assert_eq!(p(&r, &[]).to_string(), "0");
    }

    #[test]
    fn products() {
        let r = z(2);
        let f = p(&r, &[1, 1]);
        assert_eq!(f.mul(&f).unwrap(), p(&r, &[1, 0, 1]));
        assert!(f.mul(&Poly::zero(&r)).unwrap().is_zero());
        let other = z(2);
        assert_eq!(f.mul(&p(&other, &[1])), Err(Error::RingMismatch));
    }

    #[test]
    fn matrix_zero_pair() {
        let b = z(2);
        let m = make_matrix(&b, 2, &Config::default()).unwrap();
        let f = Poly::parse(&m, "[[1,0],[0,0]] + [[0,1],[0,0]]*x").unwrap();
        let g = Poly::parse(&m, "[[0,0],[1,0]] + [[1,0],[0,0]]*x").unwrap();
        assert!(ZeroPair::new(f.clone(), g.clone()).is_ok());
        assert!(ZeroPair::new(g, f).is_err());
    }

    #[test]
    fn packing() {
        let r = z(4);
        let a = p(&r, &[2, 3]);
        assert_eq!(
            pack_coefficients(&[p(&r, &[2]), p(&r, &[3])], 2).unwrap(),
            p(&r, &[2, 0, 3])
        );
        assert_eq!(pack_coefficients(&[a.clone()], 2).unwrap(), a);
        assert_eq!(
            pack_coefficients(&[a.clone(), a.clone()], 2).unwrap(),
            p(&r, &[2, 3, 2, 3])
        );
        let c = p(&r, &[3]);
        assert_eq!(pack_coefficients(&[c.clone()], 5).unwrap(), c);
        assert!(pack_coefficients(&[a.clone(), c], 1).is_err());
        assert_eq!(substitute_power(&a, 3).unwrap(), p(&r, &[2, 0, 0, 3]));
    }

    fn multiset(v: impl IntoIterator<Item = Elem>) -> Vec<Elem> {
        let mut v: Vec<Elem> = v.into_iter().filter(|e| !e.is_zero()).collect();
        v.sort();
        v
    }

    proptest! {
        #[test]
        fn packing_preserves_coefficients(
            polys in prop::collection::vec(prop::collection::vec(0u64..4, 0..3), 1..4),
            extra in 0usize..3,
        ) {
            let r = z(4);
            let fs: Vec<Poly> = polys.iter().map(|c| p(&r, c)).collect();
            let k = fs.iter().filter_map(|f| f.degree()).max().unwrap_or(0) + 1 + extra;
            let packed = pack_coefficients(&fs, k).unwrap();
            let expect = multiset(fs.iter().flat_map(|f| f.coeffs().to_vec()));
            prop_assert_eq!(multiset(packed.coeffs().to_vec()), expect);
        }

        #[test]
        fn ring_laws_over_m2(
            a in prop::collection::vec(0u64..16, 0..3),
            b in prop::collection::vec(0u64..16, 0..3),
            c in prop::collection::vec(0u64..16, 0..3),
        ) {
            let m = make_matrix(&z(2), 2, &Config::default()).unwrap();
            let (a, b, c) = (p(&m, &a), p(&m, &b), p(&m, &c));
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                let prod = a.mul(&b).unwrap();
                prop_assert!(prod.degree().is_none_or(|d| d <= da + db));
                if !m.mul(a.coeff(da), b.coeff(db)).is_zero() {
                    prop_assert_eq!(prod.degree(), Some(da + db));
                }
            }
        }

        #[test]
        fn commutative_products_commute(
            a in prop::collection::vec(0u64..6, 0..4),
            b in prop::collection::vec(0u64..6, 0..4),
        ) {
            let r = z(6);
            let (a, b) = (p(&r, &a), p(&r, &b));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }
    }
}
