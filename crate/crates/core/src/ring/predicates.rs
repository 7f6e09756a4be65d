//! Element-level predicates: idempotents, centrality, locality.

use std::collections::HashSet;

use super::{additive_generators, Elem, Ring};
use crate::error::Result;

pub fn idempotents(ring: &Ring) -> Result<Vec<Elem>> {
    ring.require_scannable("idempotent scan")?;
    Ok(ring.elements().filter(|&e| ring.mul(e, e) == e).collect())
}

pub fn is_central(ring: &Ring, x: Elem) -> bool {
    additive_generators(ring, ring.elements())
        .into_iter()
        .all(|g| ring.mul(x, g) == ring.mul(g, x))
}

pub fn center(ring: &Ring) -> Result<Vec<Elem>> {
    ring.require_scannable("center")?;
    let gens = additive_generators(ring, ring.elements());
    Ok(ring
        .elements()
        .filter(|&x| gens.iter().all(|&g| ring.mul(x, g) == ring.mul(g, x)))
        .collect())
}

/// Every idempotent commutes with every element.
pub fn is_abelian(ring: &Ring) -> Result<bool> {
    let gens = additive_generators(ring, ring.elements());
    Ok(idempotents(ring)?
        .into_iter()
        .all(|e| gens.iter().all(|&g| ring.mul(e, g) == ring.mul(g, e))))
}

/// The non-units form a two-sided ideal.
pub fn is_local(ring: &Ring) -> Result<bool> {
    ring.require_scannable("locality check")?;
    if ring.order() == 1 {
        return Ok(false);
    }
    let mut non_units = Vec::new();
    for x in ring.elements() {
        if !ring.is_unit(x)? {
            non_units.push(x);
        }
    }
    let set: HashSet<Elem> = non_units.iter().copied().collect();
    let gens = additive_generators(ring, ring.elements());
    for &x in &non_units {
        for &y in &non_units {
            if !set.contains(&ring.add(x, y)) {
                return Ok(false);
            }
        }
        for &g in &gens {
            if !set.contains(&ring.mul(g, x)) || !set.contains(&ring.mul(x, g)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x` is neither a left nor a right zero divisor.
pub fn is_regular(ring: &Ring, x: Elem) -> bool {
    ring.elements()
        .skip(1)
        .all(|y| !ring.mul(x, y).is_zero() && !ring.mul(y, x).is_zero())
}
