//! Finite rings as indexed element universes.
//!
//! Every ring is described by a [`Structure`] that evaluates the operations
//! on canonical element indices. Rings small enough are materialized into
//! Cayley tables at construction time; larger ones evaluate on demand.
//!
//! Index `0` is always the zero element: all constructions encode elements
//! lexicographically in their natural coordinates, and the all-zero
//! coordinate tuple comes first.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

pub mod axioms;
pub mod map;
pub mod matrix;
pub mod opposite;
pub mod predicates;
pub mod product;
pub mod quotient;
pub mod series;
pub mod skew;
pub mod subring;
pub mod triangular;
pub mod zmod;

pub use map::RingMap;
pub use subring::Ideal;

/// Canonical element handle. Only meaningful together with its owning ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    #[inline]
    pub fn index(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Operation evaluator behind a [`Ring`].
///
/// Implementations must keep index `0` as the additive identity.
pub trait Structure: Send + Sync {
    fn order(&self) -> u64;
    fn one(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn neg(&self, a: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn label(&self, a: u64) -> String;

    /// Cheap structural unit test, when the construction knows one.
    fn unit_hint(&self, _a: u64) -> Option<bool> {
        None
    }
}

/// Size limits applied while constructing and scanning rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Rings up to this order get full Cayley tables.
    pub table_cap: u64,
    /// Constructions whose universe exceeds this are refused.
    pub order_cap: u128,
    /// Largest order for which whole-universe scans (units, radical,
    /// quotients, label lookup) are attempted.
    pub scan_cap: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            table_cap: 4096,
            order_cap: 1 << 40,
            scan_cap: 1 << 22,
        }
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

pub(crate) struct RadicalSets {
    pub jacobson: Vec<Elem>,
    pub in_jacobson: Vec<bool>,
    pub nilpotent: Vec<bool>,
}

struct RingInner {
    id: u64,
    label: String,
    order: u64,
    one: u64,
    config: Config,
    structure: Arc<dyn Structure>,
    tables: Option<Tables>,
    commutative: OnceLock<bool>,
    units: OnceLock<Result<Arc<Vec<bool>>>>,
    radical: OnceLock<Result<Arc<RadicalSets>>>,
}

/// A finite ring with identity. Cheap to clone; immutable once built.
#[derive(Clone)]
pub struct Ring(Arc<RingInner>);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("label", &self.0.label)
            .field("order", &self.0.order)
            .finish()
    }
}

impl Ring {
    /// Wraps a structure, materializing tables when the order is within
    /// `config.table_cap`.
    pub fn from_structure(
        label: impl Into<String>,
        structure: Arc<dyn Structure>,
        config: &Config,
    ) -> Result<Ring> {
        let label = label.into();
        let order = structure.order();
        if order == 0 {
            return Err(Error::InvalidArgument(format!("{label}: empty universe")));
        }
        if order as u128 > config.order_cap {
            return Err(Error::CapExceeded {
                what: label,
                order: order as u128,
                cap: config.order_cap,
            });
        }
        let one = structure.one();
        if order > 1 && one == 0 {
            return Err(Error::AxiomFailure(format!("{label}: one equals zero")));
        }
        let tables = (order <= config.table_cap).then(|| materialize(structure.as_ref()));
        Ok(Ring(Arc::new(RingInner {
            id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
            label,
            order,
            one,
            config: config.clone(),
            structure,
            tables,
            commutative: OnceLock::new(),
            units: OnceLock::new(),
            radical: OnceLock::new(),
        })))
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn config(&self) -> &Config {
        &self.0.config
    }

    pub fn is_materialized(&self) -> bool {
        self.0.tables.is_some()
    }

    pub fn structure(&self) -> &Arc<dyn Structure> {
        &self.0.structure
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem(self.0.one)
    }

    pub fn same(&self, other: &Ring) -> bool {
        self.0.id == other.0.id
    }

    /// Checked conversion from a raw index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.0.order {
            Ok(Elem(index))
        } else {
            Err(Error::InvalidArgument(format!(
                "index {index} out of range for {} (order {})",
                self.0.label, self.0.order
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.order).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[(a.0 * self.0.order + b.0) as usize] as u64),
            None => Elem(self.0.structure.add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.neg[a.0 as usize] as u64),
            None => Elem(self.0.structure.neg(a.0)),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[(a.0 * self.0.order + b.0) as usize] as u64),
            None => Elem(self.0.structure.mul(a.0, b.0)),
        }
    }

    /// `a` added to itself `k` times.
    pub fn times(&self, k: u64, a: Elem) -> Elem {
        let mut acc = Elem::ZERO;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn label_of(&self, a: Elem) -> String {
        self.0.structure.label(a.0)
    }

    pub fn labels_of(&self, elems: &[Elem]) -> Vec<String> {
        elems.iter().map(|&e| self.label_of(e)).collect()
    }

    /// Structural unit test without falling back to a scan.
    pub fn unit_hint(&self, a: Elem) -> Option<bool> {
        self.0.structure.unit_hint(a.0)
    }

    /// Unit test, using the structural hint when available and the cached
    /// unit scan otherwise.
    pub fn is_unit(&self, a: Elem) -> Result<bool> {
        if let Some(u) = self.unit_hint(a) {
            return Ok(u);
        }
        Ok(self.unit_mask()?[a.0 as usize])
    }

    pub(crate) fn unit_mask(&self) -> Result<Arc<Vec<bool>>> {
        self.0
            .units
            .get_or_init(|| crate::radical::compute_unit_mask(self).map(Arc::new))
            .clone()
    }

    pub(crate) fn radical_sets(&self) -> Result<Arc<RadicalSets>> {
        self.0
            .radical
            .get_or_init(|| crate::radical::compute_radical_sets(self).map(Arc::new))
            .clone()
    }

    /// Fails with [`Error::CapExceeded`] when the universe is too large to
    /// enumerate.
    pub fn require_scannable(&self, what: &str) -> Result<()> {
        if self.0.order > self.0.config.scan_cap {
            return Err(Error::CapExceeded {
                what: format!("{what} over {}", self.0.label),
                order: self.0.order as u128,
                cap: self.0.config.scan_cap as u128,
            });
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        *self.0.commutative.get_or_init(|| {
            if self.0.order > self.0.config.scan_cap {
                return axioms::sampled_pairs(self, 20_000)
                    .all(|(a, b)| self.mul(a, b) == self.mul(b, a));
            }
            let gens = additive_generators(self, self.elements());
            gens.iter()
                .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
        })
    }

    /// Resolves a printed element label (whitespace-insensitive) or a raw
    /// index written as `#17`.
    pub fn find_label(&self, text: &str) -> Result<Elem> {
        let wanted: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(idx) = wanted.strip_prefix('#') {
            let idx: u64 = idx
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad element index `{text}`")))?;
            return self.elem(idx);
        }
        self.require_scannable("label lookup")?;
        self.elements()
            .find(|&e| {
                let l: String = self.label_of(e).chars().filter(|c| !c.is_whitespace()).collect();
                l == wanted
            })
            .ok_or_else(|| {
                Error::InvalidArgument(format!("no element labelled `{text}` in {}", self.label()))
            })
    }
}

fn materialize(s: &dyn Structure) -> Tables {
    let n = s.order();
    let mut add = Vec::with_capacity((n * n) as usize);
    let mut mul = Vec::with_capacity((n * n) as usize);
    for a in 0..n {
        for b in 0..n {
            add.push(s.add(a, b) as u32);
            mul.push(s.mul(a, b) as u32);
        }
    }
    let neg = (0..n).map(|a| s.neg(a) as u32).collect();
    Tables { add, mul, neg }
}

/// Greedy additive generating set of the subgroup spanned by `elems`.
///
/// Walks `elems` in order and keeps every element not already in the span
/// of the ones kept so far.
pub fn additive_generators(ring: &Ring, elems: impl IntoIterator<Item = Elem>) -> Vec<Elem> {
    let mut span = SpanTracker::new(ring);
    let mut gens = Vec::new();
    for e in elems {
        if span.insert(e) {
            gens.push(e);
        }
    }
    gens
}

/// Incrementally maintained additive subgroup of a ring.
pub(crate) struct SpanTracker<'a> {
    ring: &'a Ring,
    members: Vec<Elem>,
    seen: std::collections::HashSet<Elem>,
}

impl<'a> SpanTracker<'a> {
    pub fn new(ring: &'a Ring) -> Self {
        let mut seen = std::collections::HashSet::new();
        seen.insert(Elem::ZERO);
        SpanTracker {
            ring,
            members: vec![Elem::ZERO],
            seen,
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.seen.contains(&e)
    }

    /// Extends the span by `e`; returns whether the span grew.
    pub fn insert(&mut self, e: Elem) -> bool {
        if self.seen.contains(&e) {
            return false;
        }
        // New span = union over k of (old span + k*e); stop once a multiple
        // of e falls back into the old span.
        let old = self.members.clone();
        let mut shift = e;
        while !self.seen.contains(&shift) {
            for &m in &old {
                let s = self.ring.add(m, shift);
                if self.seen.insert(s) {
                    self.members.push(s);
                }
            }
            shift = self.ring.add(shift, e);
        }
        true
    }

    pub fn into_sorted(self) -> Vec<Elem> {
        let mut v = self.members;
        v.sort_unstable();
        v
    }
}

/// Mixed-radix encoding; digit 0 is most significant so that index order
/// is lexicographic in the coordinates.
#[derive(Clone, Debug)]
pub(crate) struct Radix {
    bases: Vec<u64>,
    weights: Vec<u64>,
    order: u128,
}

impl Radix {
    pub fn new(bases: Vec<u64>) -> Self {
        let mut weights = vec![1u64; bases.len()];
        let mut order: u128 = 1;
        for i in (0..bases.len()).rev() {
            weights[i] = order.min(u64::MAX as u128) as u64;
            order = order.saturating_mul(bases[i] as u128);
        }
        Radix {
            bases,
            weights,
            order,
        }
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    #[inline]
    pub fn decode_into(&self, mut idx: u64, out: &mut [u64]) {
        for i in (0..self.bases.len()).rev() {
            out[i] = idx % self.bases[i];
            idx /= self.bases[i];
        }
    }

    pub fn decode(&self, idx: u64) -> Vec<u64> {
        let mut v = vec![0; self.bases.len()];
        self.decode_into(idx, &mut v);
        v
    }

    #[inline]
    pub fn digit(&self, idx: u64, i: usize) -> u64 {
        (idx / self.weights[i]) % self.bases[i]
    }

    #[inline]
    pub fn encode(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .zip(&self.weights)
            .map(|(d, w)| d * w)
            .sum()
    }
}

/// Refuses constructions whose universe would exceed the configured cap.
pub(crate) fn check_order(what: &str, order: u128, config: &Config) -> Result<u64> {
    if order > config.order_cap || order > u64::MAX as u128 {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            order,
            cap: config.order_cap,
        });
    }
    Ok(order as u64)
}

pub use matrix::make_matrix;
pub use opposite::make_opposite;
pub use product::make_product;
pub use quotient::make_quotient;
pub use series::make_trunc_series;
pub use skew::{make_family, make_skew_tri, make_tri, tri_elem, Family, Twist};
pub use subring::{ideal_closure, make_corner, make_sub, make_subring, subring_closure};
pub use triangular::{make_triangular, triangular_elem, triangular_parts, Bimodule};
pub use zmod::make_zmod;
