//! Full matrix rings `M_n(B)`, entries stored row-major.

use std::sync::Arc;

use super::{check_order, Config, Elem, Radix, Ring, Structure};
use crate::error::{invalid, Result};

/// Largest supported matrix dimension; keeps entry buffers on the stack.
pub const MAX_DIM: usize = 8;

pub(crate) struct Matrix {
    base: Ring,
    n: usize,
    radix: Radix,
    one: u64,
    commutative_base: bool,
}

impl Matrix {
    #[inline]
    fn decode(&self, a: u64, out: &mut [u64; MAX_DIM * MAX_DIM]) {
        self.radix.decode_into(a, &mut out[..self.n * self.n]);
    }

    fn det(&self, m: &[u64]) -> Elem {
        let n = self.n;
        let b = &self.base;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Elem::ZERO;
        permute(&mut perm, 0, &mut |p, odd| {
            let mut term = b.one();
            for (i, &j) in p.iter().enumerate() {
                term = b.mul(term, Elem(m[i * n + j]));
            }
            total = if odd { b.sub(total, term) } else { b.add(total, term) };
        });
        total
    }
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize], bool)) {
    fn parity(p: &[usize]) -> bool {
        let mut odd = false;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    odd = !odd;
                }
            }
        }
        odd
    }
    if k == p.len() {
        visit(p, parity(p));
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

impl Structure for Matrix {
    fn order(&self) -> u64 {
        self.radix.order() as u64
    }

    fn one(&self) -> u64 {
        self.one
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (mut x, mut y) = ([0u64; MAX_DIM * MAX_DIM], [0u64; MAX_DIM * MAX_DIM]);
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        for i in 0..self.n * self.n {
            x[i] = self.base.add(Elem(x[i]), Elem(y[i])).0;
        }
        self.radix.encode(&x[..self.n * self.n])
    }

    fn neg(&self, a: u64) -> u64 {
        let mut x = [0u64; MAX_DIM * MAX_DIM];
        self.decode(a, &mut x);
        for v in x.iter_mut().take(self.n * self.n) {
            *v = self.base.neg(Elem(*v)).0;
        }
        self.radix.encode(&x[..self.n * self.n])
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let n = self.n;
        let (mut x, mut y, mut z) = (
            [0u64; MAX_DIM * MAX_DIM],
            [0u64; MAX_DIM * MAX_DIM],
            [0u64; MAX_DIM * MAX_DIM],
        );
        self.decode(a, &mut x);
        self.decode(b, &mut y);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Elem::ZERO;
                for k in 0..n {
                    let (p, q) = (x[i * n + k], y[k * n + j]);
                    if p != 0 && q != 0 {
                        acc = self.base.add(acc, self.base.mul(Elem(p), Elem(q)));
                    }
                }
                z[i * n + j] = acc.0;
            }
        }
        self.radix.encode(&z[..n * n])
    }

    fn label(&self, a: u64) -> String {
        let d = self.radix.decode(a);
        let rows: Vec<String> = d
            .chunks(self.n)
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|&x| self.base.label_of(Elem(x))).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    fn unit_hint(&self, a: u64) -> Option<bool> {
        if !self.commutative_base || self.n > 5 {
            return None;
        }
        let d = self.radix.decode(a);
        self.base.unit_hint(self.det(&d))
    }
}

/// `M_n(base)`; refused when `|base|^(n^2)` exceeds the configured cap.
pub fn make_matrix(base: &Ring, n: usize, config: &Config) -> Result<Ring> {
    if n == 0 || n > MAX_DIM {
        return Err(invalid(format!("matrix dimension must be in 1..={MAX_DIM}, got {n}")));
    }
    let radix = Radix::new(vec![base.order(); n * n]);
    let label = format!("Mat({},{n})", base.label());
    check_order(&label, radix.order(), config)?;
    let mut one = vec![0; n * n];
    for i in 0..n {
        one[i * n + i] = base.one().0;
    }
    let one = radix.encode(&one);
    let commutative_base = base.order() <= config.scan_cap && base.is_commutative();
    let s = Matrix {
        base: base.clone(),
        n,
        radix,
        one,
        commutative_base,
    };
    Ring::from_structure(label, Arc::new(s), config)
}

/// Matrix with the given row-major entries.
pub fn matrix_elem(base: &Ring, n: usize, entries: &[Elem]) -> Elem {
    assert_eq!(entries.len(), n * n);
    let radix = Radix::new(vec![base.order(); n * n]);
    Elem(radix.encode(&entries.iter().map(|e| e.0).collect::<Vec<_>>()))
}

/// Row-major entries of a matrix element.
pub fn matrix_entries(base: &Ring, n: usize, e: Elem) -> Vec<Elem> {
    Radix::new(vec![base.order(); n * n])
        .decode(e.0)
        .into_iter()
        .map(Elem)
        .collect()
}

/// `c * E_ij` (1-based positions) in `M_n(base)`.
pub fn unit_matrix(base: &Ring, n: usize, i: usize, j: usize, c: Elem) -> Elem {
    let mut e = vec![Elem::ZERO; n * n];
    e[(i - 1) * n + (j - 1)] = c;
    matrix_elem(base, n, &e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zmod;

    fn z2() -> Ring {
        make_zmod(2, &Config::default()).unwrap()
    }

    #[test]
    fn m1_is_the_base() {
        let b = make_zmod(6, &Config::default()).unwrap();
        let m = make_matrix(&b, 1, &Config::default()).unwrap();
        assert!(crate::ring::axioms::tables_equal(&b, &m));
    }

    #[test]
    fn unit_matrix_products() {
        let b = z2();
        let m = make_matrix(&b, 2, &Config::default()).unwrap();
        assert_eq!(m.order(), 16);
        let e = |i, j| unit_matrix(&b, 2, i, j, Elem(1));
        assert_eq!(m.mul(e(1, 2), e(2, 1)), e(1, 1));
        assert_eq!(m.mul(e(2, 1), e(1, 2)), e(2, 2));
        assert_eq!(m.label_of(e(1, 2)), "[[0,1],[0,0]]");
    }

    #[test]
    fn cap_refusal_reports_size() {
        let cfg = Config {
            order_cap: 1 << 16,
            ..Config::default()
        };
        let b = make_zmod(4, &cfg).unwrap();
        match make_matrix(&b, 3, &cfg) {
            Err(crate::Error::CapExceeded { order, .. }) => assert_eq!(order, 1 << 18),
            other => panic!("{other:?}"),
        }
        match make_matrix(&b, 4, &cfg) {
            Err(crate::Error::CapExceeded { order, .. }) => assert_eq!(order, 1 << 32),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn m3_z4_constructible_on_demand() {
        let b = make_zmod(4, &Config::default()).unwrap();
        let m = make_matrix(&b, 3, &Config::default()).unwrap();
        assert_eq!(m.order(), 1 << 18);
        assert!(!m.is_materialized());
        let e12 = unit_matrix(&b, 3, 1, 2, Elem(1));
        assert_eq!(m.mul(e12, e12), m.zero());
    }

    #[test]
    fn determinant_hint_matches_scan() {
        let b = z2();
        let m = make_matrix(&b, 2, &Config::default()).unwrap();
        let scanned = m
            .elements()
            .filter(|&a| m.elements().any(|x| m.mul(a, x) == m.one() && m.mul(x, a) == m.one()))
            .count();
        assert_eq!(scanned, 6);
        let hinted = m.elements().filter(|&a| m.unit_hint(a).unwrap()).count();
        assert_eq!(hinted, 6);
    }
}
