//! Exhaustive (small rings) or sampled (large rings) verification of the
//! ring axioms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Elem, Ring};
use crate::error::{Error, Result};

/// Rings up to this order are checked on every triple.
pub const EXHAUSTIVE_LIMIT: u64 = 256;

const SAMPLE_SEED: u64 = 0x6d63_636f_7921;
const SAMPLE_TRIPLES: usize = 200_000;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub ring: String,
    pub order: u64,
    pub exhaustive: bool,
    pub triples_checked: u64,
    pub commutative: bool,
}

/// Checks associativity, distributivity, additive commutativity, inverses,
/// and both identities. The first violated law is returned as an error
/// naming the offending elements.
pub fn verify(ring: &Ring) -> Result<AxiomReport> {
    let n = ring.order();
    if n > 1 && ring.one() == ring.zero() {
        return Err(Error::AxiomFailure("one equals zero".into()));
    }
    for a in ring.elements().take(if n <= EXHAUSTIVE_LIMIT { n as usize } else { 4096 }) {
        check_unary(ring, a)?;
    }
    let exhaustive = n <= EXHAUSTIVE_LIMIT;
    let mut checked = 0u64;
    if exhaustive {
        for a in ring.elements() {
            for b in ring.elements() {
                for c in ring.elements() {
                    check_triple(ring, a, b, c)?;
                    checked += 1;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..SAMPLE_TRIPLES {
            let a = Elem(rng.gen_range(0..n));
            let b = Elem(rng.gen_range(0..n));
            let c = Elem(rng.gen_range(0..n));
            check_unary(ring, a)?;
            check_triple(ring, a, b, c)?;
            checked += 1;
        }
    }
    Ok(AxiomReport {
        ring: ring.label().to_string(),
        order: n,
        exhaustive,
        triples_checked: checked,
        commutative: ring.is_commutative(),
    })
}

fn check_unary(r: &Ring, a: Elem) -> Result<()> {
    let fail = |law: &str| {
        Err(Error::AxiomFailure(format!("{law} fails at a={}", r.label_of(a))))
    };
    if r.add(a, r.zero()) != a {
        return fail("additive identity");
    }
    if r.add(a, r.neg(a)) != r.zero() {
        return fail("additive inverse");
    }
    if r.mul(a, r.one()) != a || r.mul(r.one(), a) != a {
        return fail("multiplicative identity");
    }
    Ok(())
}

fn check_triple(r: &Ring, a: Elem, b: Elem, c: Elem) -> Result<()> {
    let fail = |law: &str| {
        Err(Error::AxiomFailure(format!(
            "{law} fails at (a, b, c) = ({}, {}, {})",
            r.label_of(a),
            r.label_of(b),
            r.label_of(c)
        )))
    };
    if r.add(a, b) != r.add(b, a) {
        return fail("additive commutativity");
    }
    if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
        return fail("additive associativity");
    }
    if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) {
        return fail("multiplicative associativity");
    }
    if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
        return fail("left distributivity");
    }
    if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
        return fail("right distributivity");
    }
    Ok(())
}

/// Deterministic pseudo-random element pairs, for checks on rings too large
/// to scan.
pub(crate) fn sampled_pairs(ring: &Ring, count: usize) -> impl Iterator<Item = (Elem, Elem)> {
    let n = ring.order();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ n);
    (0..count).map(move |_| (Elem(rng.gen_range(0..n)), Elem(rng.gen_range(0..n))))
}

/// Compares two rings operation by operation on the shared index set.
pub fn tables_equal(a: &Ring, b: &Ring) -> bool {
    if a.order() != b.order() || a.one() != b.one() {
        return false;
    }
    a.elements().all(|x| {
        a.neg(x) == b.neg(x)
            && a
                .elements()
                .all(|y| a.add(x, y) == b.add(x, y) && a.mul(x, y) == b.mul(x, y))
    })
}
