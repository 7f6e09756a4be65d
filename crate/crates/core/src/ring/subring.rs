//! Subrings, corner rings, and two-sided ideals.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{additive_generators, Config, Elem, Ring, SpanTracker, Structure};
use crate::error::{Error, Result};

pub(crate) type LabelFn = Arc<dyn Fn(Elem) -> String + Send + Sync>;

pub(crate) struct Subring {
    parent: Ring,
    members: Vec<Elem>,
    lookup: HashMap<Elem, u64>,
    one: u64,
    same_identity: bool,
    label: Option<LabelFn>,
}

impl Subring {
    #[inline]
    fn lift(&self, a: u64) -> Elem {
        self.members[a as usize]
    }

    #[inline]
    fn project(&self, x: Elem) -> u64 {
        match self.lookup.get(&x) {
            Some(&i) => i,
            None => panic!(
                "operation left the subring of {}: {}",
                self.parent.label(),
                self.parent.label_of(x)
            ),
        }
    }
}

impl Structure for Subring {
    fn order(&self) -> u64 {
        self.members.len() as u64
    }

    fn one(&self) -> u64 {
        self.one
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
        match &self.label {
            Some(f) => f(self.lift(a)),
            None => self.parent.label_of(self.lift(a)),
        }
    }

    // A finite subring sharing the identity contains the inverse of each of
    // its elements that is invertible in the parent: the inverse is a power.
    fn unit_hint(&self, a: u64) -> Option<bool> {
        if self.same_identity {
            self.parent.unit_hint(self.lift(a))
        } else {
            None
        }
    }
}

/// Options for [`make_subring`].
pub struct SubringSpec {
    pub label: String,
    /// Parent element acting as the identity of the subring.
    pub identity: Elem,
    /// Exhaustively re-verify closure (up to `verify_limit` elements;
    /// sampled beyond).
    pub verify: bool,
    pub element_label: Option<LabelFn>,
}

const VERIFY_LIMIT: usize = 1024;

/// Wraps a subset of `parent` (closed under the operations) as a ring.
/// Members are sorted, so the subring inherits the parent's canonical order.
pub fn make_subring(
    parent: &Ring,
    members: Vec<Elem>,
    spec: SubringSpec,
    config: &Config,
) -> Result<Ring> {
    let mut members = members;
    members.sort_unstable();
    members.dedup();
    if members.first() != Some(&Elem::ZERO) {
        return Err(Error::NotSubring("zero is missing".into()));
    }
    let lookup: HashMap<Elem, u64> = members
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u64))
        .collect();
    let Some(&one) = lookup.get(&spec.identity) else {
        return Err(Error::NotSubring(format!(
            "identity {} is not a member",
            parent.label_of(spec.identity)
        )));
    };
    if spec.verify {
        verify_closed(parent, &members, &lookup, spec.identity)?;
    }
    let s = Subring {
        parent: parent.clone(),
        members,
        lookup,
        one,
        same_identity: spec.identity == parent.one(),
        label: spec.element_label,
    };
    Ring::from_structure(spec.label, Arc::new(s), config)
}

fn verify_closed(
    parent: &Ring,
    members: &[Elem],
    lookup: &HashMap<Elem, u64>,
    identity: Elem,
) -> Result<()> {
    let check = |x: Elem, what: &str| {
        if lookup.contains_key(&x) {
            Ok(())
        } else {
            Err(Error::NotSubring(format!("{what} {} not a member", parent.label_of(x))))
        }
    };
    let probe: Vec<Elem> = if members.len() <= VERIFY_LIMIT {
        members.to_vec()
    } else {
        members.iter().step_by(members.len() / VERIFY_LIMIT + 1).copied().collect()
    };
    for &a in &probe {
        check(parent.neg(a), "negation")?;
        if parent.mul(identity, a) != a || parent.mul(a, identity) != a {
            return Err(Error::NotSubring(format!(
                "{} does not act as identity on {}",
                parent.label_of(identity),
                parent.label_of(a)
            )));
        }
        for &b in &probe {
            check(parent.add(a, b), "sum")?;
            check(parent.mul(a, b), "product")?;
        }
    }
    Ok(())
}

/// Least subset containing `gens`, zero and one that is closed under the
/// ring operations.
///
/// Computed as the additive span of the multiplicative monoid generated by
/// `gens ∪ {1}`: the monoid is saturated by a worklist that multiplies each
/// new word on the left by every generator, then its span is grown one
/// cyclic subgroup at a time.
pub fn subring_closure(ring: &Ring, gens: &[Elem]) -> Vec<Elem> {
    let mut words: HashSet<Elem> = HashSet::new();
    let mut queue = vec![ring.one()];
    words.insert(ring.one());
    while let Some(w) = queue.pop() {
        for &g in gens {
            let p = ring.mul(g, w);
            if words.insert(p) {
                queue.push(p);
            }
        }
    }
    let mut words: Vec<Elem> = words.into_iter().collect();
    words.sort_unstable();
    let mut span = SpanTracker::new(ring);
    for w in words {
        span.insert(w);
    }
    span.into_sorted()
}

/// Additive span of `{r g s : r, s in R, g in gens}`.
pub fn ideal_closure(ring: &Ring, gens: &[Elem]) -> Result<Vec<Elem>> {
    ring.require_scannable("ideal closure")?;
    let ring_gens = additive_generators(ring, ring.elements());
    let mut span = SpanTracker::new(ring);
    let mut queue: Vec<Elem> = gens.to_vec();
    while let Some(x) = queue.pop() {
        if !span.insert(x) {
            continue;
        }
        for &r in &ring_gens {
            queue.push(ring.mul(r, x));
            queue.push(ring.mul(x, r));
        }
    }
    // Multiplying each generator by additive generators is enough: the span
    // is then closed under multiplication by sums of them.
    let members = span.into_sorted();
    Ok(members)
}

/// A two-sided ideal, validated on construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    members: Vec<Elem>,
    description: String,
}

impl Ideal {
    pub fn new(ring: &Ring, members: Vec<Elem>) -> Result<Ideal> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        let set: HashSet<Elem> = members.iter().copied().collect();
        if !set.contains(&Elem::ZERO) {
            return Err(Error::NotIdeal("zero is missing".into()));
        }
        let gens = additive_generators(ring, members.iter().copied());
        let ring_gens = additive_generators(ring, ring.elements());
        for &x in &members {
            if !set.contains(&ring.neg(x)) {
                return Err(Error::NotIdeal(format!("-{} missing", ring.label_of(x))));
            }
            for &g in &gens {
                if !set.contains(&ring.add(x, g)) {
                    return Err(Error::NotIdeal(format!(
                        "{} + {} missing",
                        ring.label_of(x),
                        ring.label_of(g)
                    )));
                }
            }
            for &r in &ring_gens {
                for p in [ring.mul(r, x), ring.mul(x, r)] {
                    if !set.contains(&p) {
                        return Err(Error::NotIdeal(format!(
                            "not absorbing: {} times {} gives {}",
                            ring.label_of(r),
                            ring.label_of(x),
                            ring.label_of(p)
                        )));
                    }
                }
            }
        }
        let description = format!(
            "{{{}}}",
            gens.iter().map(|&g| ring.label_of(g)).collect::<Vec<_>>().join(";")
        );
        Ok(Ideal {
            ring: ring.clone(),
            members,
            description,
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            members: vec![Elem::ZERO],
            description: "{}".into(),
        }
    }

    /// Two-sided ideal generated by `gens`.
    pub fn generated(ring: &Ring, gens: &[Elem]) -> Result<Ideal> {
        let members = ideal_closure(ring, gens)?;
        let mut i = Ideal::new(ring, members)?;
        i.description = format!(
            "{{{}}}",
            gens.iter().map(|&g| ring.label_of(g)).collect::<Vec<_>>().join(";")
        );
        Ok(i)
    }

    /// The Jacobson radical as an ideal.
    pub fn jacobson(ring: &Ring) -> Result<Ideal> {
        let members = crate::radical::jacobson_radical(ring)?;
        let mut i = Ideal::new(ring, members)?;
        i.description = "J".into();
        Ok(i)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn describe(&self) -> &str {
        &self.description
    }
}

/// Subring generated by `gens` (identity adjoined).
pub fn make_sub(ring: &Ring, gens: &[Elem], config: &Config) -> Result<Ring> {
    let members = subring_closure(ring, gens);
    let label = format!(
        "Sub({},{{{}}})",
        ring.label(),
        gens.iter().map(|&g| ring.label_of(g)).collect::<Vec<_>>().join(";")
    );
    make_subring(
        ring,
        members,
        SubringSpec {
            label,
            identity: ring.one(),
            verify: false,
            element_label: None,
        },
        config,
    )
}

/// The corner ring `eRe` with identity `e`.
pub fn make_corner(ring: &Ring, e: Elem, config: &Config) -> Result<Ring> {
    if ring.mul(e, e) != e {
        return Err(Error::NotIdempotent(ring.label_of(e)));
    }
    ring.require_scannable("corner ring")?;
    let members: HashSet<Elem> = ring.elements().map(|r| ring.mul(ring.mul(e, r), e)).collect();
    make_subring(
        ring,
        members.into_iter().collect(),
        SubringSpec {
            label: format!("Corner({},e={})", ring.label(), ring.label_of(e)),
            identity: e,
            verify: false,
            element_label: None,
        },
        config,
    )
}
