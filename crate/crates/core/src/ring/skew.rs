//! Skew upper-triangular matrix rings `T_n(R, σ)` and their constant-pattern
//! subrings.
//!
//! Moving a scalar past position `(i, j)` twists it by `σ^(j-i)`, so the
//! product entry is `c_ij = Σ_{i<=k<=j} a_ik σ^(k-i)(b_kj)`.

use std::sync::Arc;

use super::subring::{LabelFn, SubringSpec};
use super::{check_order, make_subring, Config, Elem, Radix, Ring, RingMap, Structure};
use crate::error::{invalid, Error, Result};

/// A named unital endomorphism of a base ring.
#[derive(Clone, Debug)]
pub struct Twist {
    name: String,
    map: RingMap,
}

impl Twist {
    pub fn new(name: impl Into<String>, map: RingMap) -> Result<Twist> {
        if !map.is_endomorphism() {
            return Err(Error::NotEndomorphism("source and target differ".into()));
        }
        Ok(Twist {
            name: name.into(),
            map,
        })
    }

    pub fn identity(base: &Ring) -> Result<Twist> {
        Twist::new("id", RingMap::identity(base)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }
}

pub(crate) struct SkewTri {
    base: Ring,
    n: usize,
    pos: Vec<Vec<usize>>,
    sigma_pows: Vec<Vec<Elem>>,
    radix: Radix,
    one: u64,
}

impl SkewTri {
    fn entry(&self, d: &[u64], i: usize, j: usize) -> Elem {
        Elem(d[self.pos[i][j]])
    }
}

impl Structure for SkewTri {
    fn order(&self) -> u64 {
        self.radix.order() as u64
    }

    fn one(&self) -> u64 {
        self.one
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.radix.decode(a), self.radix.decode(b));
        let s: Vec<u64> = x
            .iter()
            .zip(&y)
            .map(|(&p, &q)| self.base.add(Elem(p), Elem(q)).0)
            .collect();
        self.radix.encode(&s)
    }

    fn neg(&self, a: u64) -> u64 {
        let s: Vec<u64> = self
            .radix
            .decode(a)
            .into_iter()
            .map(|p| self.base.neg(Elem(p)).0)
            .collect();
        self.radix.encode(&s)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.radix.decode(a), self.radix.decode(b));
        let mut z = vec![0u64; self.radix.len()];
        for i in 0..self.n {
            for j in i..self.n {
                let mut acc = Elem::ZERO;
                for k in i..=j {
                    let p = self.entry(&x, i, k);
                    if p.is_zero() {
                        continue;
                    }
                    let q = self.sigma_pows[k - i][self.entry(&y, k, j).0 as usize];
                    acc = self.base.add(acc, self.base.mul(p, q));
                }
                z[self.pos[i][j]] = acc.0;
            }
        }
        self.radix.encode(&z)
    }

    fn label(&self, a: u64) -> String {
        let d = self.radix.decode(a);
        let zero = self.base.label_of(Elem::ZERO);
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cells: Vec<String> = (0..self.n)
                    .map(|j| {
                        if j < i {
                            zero.clone()
                        } else {
                            self.base.label_of(self.entry(&d, i, j))
                        }
                    })
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    // The diagonal map onto R^n is a ring map with nilpotent kernel.
    fn unit_hint(&self, a: u64) -> Option<bool> {
        let d = self.radix.decode(a);
        let mut all = true;
        for i in 0..self.n {
            all &= self.base.unit_hint(self.entry(&d, i, i))?;
        }
        Some(all)
    }
}

/// Upper-triangular positions in row-major order.
fn positions(n: usize) -> (Vec<(usize, usize)>, Vec<Vec<usize>>) {
    let mut list = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i..n {
            index[i][j] = list.len();
            list.push((i, j));
        }
    }
    (list, index)
}

fn twist_suffix(sigma: &Twist) -> String {
    if sigma.is_identity() {
        String::new()
    } else {
        format!(",{}", sigma.name())
    }
}

/// `T_n(base, σ)`.
pub fn make_skew_tri(base: &Ring, n: usize, sigma: &Twist, config: &Config) -> Result<Ring> {
    let label = format!("SkewTri({},{n},{})", base.label(), sigma.name());
    skew_tri(base, n, sigma, label, config)
}

/// Ordinary upper-triangular matrices `T_n(base)`.
pub fn make_tri(base: &Ring, n: usize, config: &Config) -> Result<Ring> {
    let label = format!("Tri({},{n})", base.label());
    skew_tri(base, n, &Twist::identity(base)?, label, config)
}

fn skew_tri(base: &Ring, n: usize, sigma: &Twist, label: String, config: &Config) -> Result<Ring> {
    if n == 0 {
        return Err(invalid("triangular dimension must be at least 1"));
    }
    if !sigma.map().source().same(base) {
        return Err(Error::NotEndomorphism(format!(
            "twist `{}` is not defined on {}",
            sigma.name(),
            base.label()
        )));
    }
    let (list, pos) = positions(n);
    let radix = Radix::new(vec![base.order(); list.len()]);
    check_order(&label, radix.order(), config)?;
    let mut one = vec![0; list.len()];
    for i in 0..n {
        one[pos[i][i]] = base.one().0;
    }
    let one = radix.encode(&one);
    let sigma_pows = (0..n)
        .map(|k| Ok(sigma.map().power(k)?.table().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let s = SkewTri {
        base: base.clone(),
        n,
        pos,
        sigma_pows,
        radix,
        one,
    };
    Ring::from_structure(label, Arc::new(s), config)
}

/// Constant-pattern subrings of `T_n(R, σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    /// Constant main diagonal.
    S,
    /// Every diagonal constant; isomorphic to `R[x;σ]/(x^n)`.
    T,
    /// Diagonals of offset below `⌊n/2⌋` constant, the rest free.
    A,
    /// `A` with the `(1, n/2)` entry freed; needs even `n >= 4`.
    B,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::T => "T",
            Family::A => "A",
            Family::B => "B",
        }
    }

    pub fn all() -> [Family; 4] {
        [Family::S, Family::T, Family::A, Family::B]
    }

    pub fn admits(self, n: usize) -> bool {
        match self {
            Family::B => n >= 4 && n.is_multiple_of(2),
            _ => n >= 1,
        }
    }

    /// Parameter slot of every position, and the number of slots.
    fn pattern(self, n: usize) -> (Vec<usize>, usize) {
        let (list, _) = positions(n);
        let half = n / 2;
        let mut slots = Vec::with_capacity(list.len());
        let mut next = n; // slots 0..n reserved for whole diagonals
        for &(i, j) in &list {
            let d = j - i;
            let tied = match self {
                Family::S => d == 0,
                Family::T => true,
                Family::A => d < half,
                Family::B => d < half && !(i == 0 && j + 1 == half),
            };
            if tied {
                slots.push(d);
            } else {
                slots.push(next);
                next += 1;
            }
        }
        // Compact the slot ids to 0..count in order of first appearance.
        let mut remap = vec![usize::MAX; next];
        let mut count = 0;
        for s in slots.iter_mut() {
            if remap[*s] == usize::MAX {
                remap[*s] = count;
                count += 1;
            }
            *s = remap[*s];
        }
        (slots, count)
    }
}

/// `S`, `T`, `A` or `B` over `(base, n, σ)`, carved out of `T_n(base, σ)`
/// by enumerating the free parameters; closure is verified.
pub fn make_family(
    family: Family,
    base: &Ring,
    n: usize,
    sigma: &Twist,
    config: &Config,
) -> Result<Ring> {
    if !family.admits(n) {
        return Err(invalid(format!(
            "{}(R,n) is not defined for n = {n}",
            family.name()
        )));
    }
    let label = format!(
        "{}({},{n}{})",
        family.name(),
        base.label(),
        twist_suffix(sigma)
    );
    let (slots, count) = family.pattern(n);
    let params = Radix::new(vec![base.order(); count]);
    let order = check_order(&label, params.order(), config)?;
    let parent_cfg = Config {
        table_cap: 0,
        ..config.clone()
    };
    let parent = skew_tri(
        base,
        n,
        sigma,
        format!("SkewTri({},{n},{})", base.label(), sigma.name()),
        &parent_cfg,
    )?;
    let entries = Radix::new(vec![base.order(); slots.len()]);
    let mut members = Vec::with_capacity(order as usize);
    let mut digits = vec![0u64; slots.len()];
    for p in 0..order {
        let values = params.decode(p);
        for (d, &s) in digits.iter_mut().zip(&slots) {
            *d = values[s];
        }
        members.push(Elem(entries.encode(&digits)));
    }
    let element_label: Option<LabelFn> = match family {
        Family::T => {
            let first_row: Vec<usize> = (0..n).collect();
            let base = base.clone();
            Some(Arc::new(move |e: Elem| {
                let d = entries.decode(e.0);
                let cells: Vec<String> =
                    first_row.iter().map(|&j| base.label_of(Elem(d[j]))).collect();
                format!("({})", cells.join(","))
            }))
        }
        _ => None,
    };
    make_subring(
        &parent,
        members,
        SubringSpec {
            label,
            identity: parent.one(),
            verify: true,
            element_label,
        },
        config,
    )
}

/// Element of a triangular-type ring from its upper-triangular entries,
/// given as `(row, col, value)` with 1-based positions.
pub fn tri_elem(base: &Ring, n: usize, entries: &[(usize, usize, Elem)]) -> Elem {
    let (list, pos) = positions(n);
    let mut d = vec![0u64; list.len()];
    for &(i, j, v) in entries {
        d[pos[i - 1][j - 1]] = v.0;
    }
    Elem(Radix::new(vec![base.order(); list.len()]).encode(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_product, make_zmod};

    fn cfg() -> Config {
        Config::default()
    }

    fn z2() -> Ring {
        make_zmod(2, &cfg()).unwrap()
    }

    fn swap_twist(p: &Ring) -> Twist {
        let map = RingMap::from_fn(p, p, |x| Elem((x.0 % 2) * 2 + x.0 / 2)).unwrap();
        Twist::new("swap", map).unwrap()
    }

    #[test]
    fn identity_twist_gives_t2() {
        let b = z2();
        let t = make_skew_tri(&b, 2, &Twist::identity(&b).unwrap(), &cfg()).unwrap();
        assert_eq!(t.order(), 8);
        assert!(crate::ring::axioms::tables_equal(&t, &make_tri(&b, 2, &cfg()).unwrap()));
    }

    #[test]
    fn skew_rule_on_unit_matrix() {
        let b = z2();
        let p = make_product(&[b.clone(), b.clone()], &cfg()).unwrap();
        let sw = swap_twist(&p);
        let t = make_skew_tri(&p, 2, &sw, &cfg()).unwrap();
        crate::ring::axioms::verify(&t).unwrap();
        let e12 = tri_elem(&p, 2, &[(1, 2, p.one())]);
        for a in p.elements() {
            for c in p.elements() {
                let d = tri_elem(&p, 2, &[(1, 1, a), (2, 2, c)]);
                // diag(a, c) E12 = a E12 ; E12 diag(a, c) = σ(c) E12
                assert_eq!(t.mul(d, e12), tri_elem(&p, 2, &[(1, 2, a)]));
                assert_eq!(t.mul(e12, d), tri_elem(&p, 2, &[(1, 2, sw.map().apply(c))]));
            }
        }
        let xy = p.find_label("(1,0)").unwrap();
        let scalar = tri_elem(&p, 2, &[(1, 1, xy), (2, 2, xy)]);
        let prod = t.mul(e12, scalar);
        assert_eq!(t.label_of(prod), "[[(0,0),(0,1)],[(0,0),(0,0)]]");
    }

    #[test]
    fn t_family_is_truncated_polynomials() {
        let b = z2();
        let id = Twist::identity(&b).unwrap();
        let t = make_family(Family::T, &b, 3, &id, &cfg()).unwrap();
        assert_eq!(t.order(), 8);
        let x = t.find_label("(0,1,0)").unwrap();
        assert_eq!(t.label_of(t.mul(x, x)), "(0,0,1)");
        assert_eq!(t.pow(x, 3), t.zero());
        let t2 = make_family(Family::T, &b, 2, &id, &cfg()).unwrap();
        for a in t2.elements() {
            for c in t2.elements() {
                let (a0, a1) = (a.0 / 2, a.0 % 2);
                let (b0, b1) = (c.0 / 2, c.0 % 2);
                let want = format!("({},{})", (a0 * b0) % 2, (a0 * b1 + a1 * b0) % 2);
                assert_eq!(t2.label_of(t2.mul(a, c)), want);
            }
        }
    }

    #[test]
    fn family_orders() {
        let b = z2();
        let id = Twist::identity(&b).unwrap();
        assert_eq!(make_family(Family::S, &b, 2, &id, &cfg()).unwrap().order(), 4);
        assert_eq!(make_family(Family::S, &b, 3, &id, &cfg()).unwrap().order(), 16);
        assert_eq!(make_family(Family::A, &b, 4, &id, &cfg()).unwrap().order(), 32);
        assert_eq!(make_family(Family::B, &b, 4, &id, &cfg()).unwrap().order(), 64);
        assert!(make_family(Family::B, &b, 3, &id, &cfg()).is_err());
        assert!(make_family(Family::B, &b, 2, &id, &cfg()).is_err());
    }

    #[test]
    fn twisted_families_are_closed() {
        let b = z2();
        let p = make_product(&[b.clone(), b], &cfg()).unwrap();
        let sw = swap_twist(&p);
        for fam in [Family::S, Family::T, Family::A] {
            for n in 2..=3 {
                let r = make_family(fam, &p, n, &sw, &cfg()).unwrap();
                crate::ring::axioms::verify(&r).unwrap();
            }
        }
        let lazy = Config {
            table_cap: 256,
            ..cfg()
        };
        let r = make_family(Family::B, &p, 4, &sw, &lazy);
        assert!(r.is_ok(), "{r:?}");
    }
}
