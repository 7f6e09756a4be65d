//! Units, nilpotent elements and the Jacobson radical of a finite ring.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{additive_generators, Elem, RadicalSets, Ring, SpanTracker};

pub(crate) fn compute_unit_mask(ring: &Ring) -> Result<Vec<bool>> {
    ring.require_scannable("unit scan")?;
    let n = ring.order() as usize;
    let hinted: Option<Vec<bool>> = ring.elements().map(|a| ring.unit_hint(a)).collect();
    if let Some(mask) = hinted {
        return Ok(mask);
    }
    let mut mask = vec![false; n];
    for a in ring.elements() {
        if mask[a.0 as usize] {
            continue;
        }
        if let Some(b) = ring.elements().find(|&b| ring.mul(a, b) == ring.one()) {
            mask[a.0 as usize] = true;
            mask[b.0 as usize] = true;
        }
    }
    Ok(mask)
}

fn nilpotent_mask(ring: &Ring) -> Vec<bool> {
    // Nilpotency index never exceeds the order.
    let mut steps = 0;
    while (1u64 << steps) < ring.order() {
        steps += 1;
    }
    ring.elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&x| {
            let mut y = x;
            for _ in 0..steps {
                if y.is_zero() {
                    break;
                }
                y = ring.mul(y, y);
            }
            y.is_zero()
        })
        .collect()
}

pub(crate) fn compute_radical_sets(ring: &Ring) -> Result<RadicalSets> {
    ring.require_scannable("radical scan")?;
    let nilpotent = nilpotent_mask(ring);
    let units = ring.unit_mask()?;
    let all: Vec<Elem> = ring.elements().collect();
    let one = ring.one();
    let quasi_regular = |x: Elem| {
        units[ring.sub(one, x).0 as usize]
            && all
                .par_iter()
                .all(|&r| units[ring.sub(one, ring.mul(r, x)).0 as usize])
    };
    // J consists of nilpotents in a finite ring, and it is additively
    // closed, so confirmed members take their whole span with them.
    let mut span = SpanTracker::new(ring);
    for x in ring.elements() {
        if !nilpotent[x.0 as usize] || span.contains(x) {
            continue;
        }
        if quasi_regular(x) {
            span.insert(x);
        }
    }
    let jacobson = span.into_sorted();
    let mut in_jacobson = vec![false; ring.order() as usize];
    for &x in &jacobson {
        in_jacobson[x.0 as usize] = true;
    }
    let gens = additive_generators(ring, jacobson.iter().copied());
    let ring_gens = additive_generators(ring, ring.elements());
    for &g in &gens {
        for &r in &ring_gens {
            for p in [ring.mul(g, r), ring.mul(r, g)] {
                if !in_jacobson[p.0 as usize] {
                    return Err(Error::Consistency(format!(
                        "radical scan of {} is not an ideal: {} escapes",
                        ring.label(),
                        ring.label_of(p)
                    )));
                }
            }
        }
    }
    Ok(RadicalSets {
        jacobson,
        in_jacobson,
        nilpotent,
    })
}

/// All units, in canonical order.
pub fn units(ring: &Ring) -> Result<Vec<Elem>> {
    let mask = ring.unit_mask()?;
    Ok(ring.elements().filter(|e| mask[e.0 as usize]).collect())
}

/// Members of `J(R)` in canonical order. Cached on the ring.
pub fn jacobson_radical(ring: &Ring) -> Result<Vec<Elem>> {
    Ok(ring.radical_sets()?.jacobson.clone())
}

pub fn in_jacobson(ring: &Ring, x: Elem) -> Result<bool> {
    Ok(ring.radical_sets()?.in_jacobson[x.0 as usize])
}

/// Nilpotent elements in canonical order.
pub fn nilpotents(ring: &Ring) -> Result<Vec<Elem>> {
    let sets = ring.radical_sets()?;
    Ok(ring.elements().filter(|e| sets.nilpotent[e.0 as usize]).collect())
}

pub fn is_nilpotent(ring: &Ring, x: Elem) -> Result<bool> {
    Ok(ring.radical_sets()?.nilpotent[x.0 as usize])
}

/// `1 - r x` is a unit for every `r`. Scans the ring once per call and
/// does not populate the radical cache.
pub fn quasi_regular_member(ring: &Ring, x: Elem) -> Result<bool> {
    ring.require_scannable("quasi-regularity test")?;
    for r in std::iter::once(ring.one()).chain(ring.elements()) {
        if !ring.is_unit(ring.sub(ring.one(), ring.mul(r, x)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Element sets are given by label, in canonical order.
#[derive(Clone, Debug, Serialize)]
pub struct RadicalReport {
    pub ring: String,
    pub order: u64,
    pub units: Vec<String>,
    pub jacobson: Vec<String>,
    pub nilpotents: Vec<String>,
    pub is_j_semisimple: bool,
    /// `N(R)` is contained in `J(R)`.
    pub nil_in_jacobson: bool,
}

impl RadicalReport {
    pub fn of(ring: &Ring) -> Result<RadicalReport> {
        let sets = ring.radical_sets()?;
        let nil = nilpotents(ring)?;
        let nil_in_jacobson = nil.iter().all(|e| sets.in_jacobson[e.0 as usize]);
        Ok(RadicalReport {
            ring: ring.label().to_string(),
            order: ring.order(),
            units: ring.labels_of(&units(ring)?),
            jacobson: ring.labels_of(&sets.jacobson),
            nilpotents: ring.labels_of(&nil),
            is_j_semisimple: sets.jacobson.len() == 1,
            nil_in_jacobson,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::matrix::unit_matrix;
    use crate::ring::{
        make_corner, make_matrix, make_opposite, make_product, make_tri, make_zmod, Config,
    };

    fn cfg() -> Config {
        Config::default()
    }

    /// Independent description: in a finite ring J is the largest nil right
    /// ideal, so x is in J iff x r is nilpotent for every r.
    fn oracle_j(ring: &Ring) -> Vec<Elem> {
        let nil = |y: Elem| (1..=ring.order()).any(|k| ring.pow(y, k).is_zero());
        ring.elements()
            .filter(|&x| ring.elements().all(|r| nil(ring.mul(x, r))))
            .collect()
    }

    #[test]
    fn small_radicals() {
        let z4 = make_zmod(4, &cfg()).unwrap();
        assert_eq!(jacobson_radical(&z4).unwrap(), vec![Elem(0), Elem(2)]);
        let z6 = make_zmod(6, &cfg()).unwrap();
        assert_eq!(jacobson_radical(&z6).unwrap(), vec![Elem(0)]);
        assert_eq!(nilpotents(&z6).unwrap(), vec![Elem(0)]);
        let z2 = make_zmod(2, &cfg()).unwrap();
        let m2 = make_matrix(&z2, 2, &cfg()).unwrap();
        assert_eq!(jacobson_radical(&m2).unwrap(), vec![Elem(0)]);
        assert_eq!(units(&m2).unwrap().len(), 6);
        let t2 = make_tri(&z2, 2, &cfg()).unwrap();
        let e12 = unit_matrix(&z2, 2, 1, 2, z2.one());
        let j = jacobson_radical(&t2).unwrap();
        assert_eq!(j.len(), 2);
        assert_eq!(t2.label_of(j[1]), m2.label_of(e12));
    }

    #[test]
    fn scan_agrees_with_oracle() {
        let z2 = make_zmod(2, &cfg()).unwrap();
        let z4 = make_zmod(4, &cfg()).unwrap();
        let rings = vec![
            make_product(&[z2.clone(), z4.clone()], &cfg()).unwrap(),
            make_tri(&z2, 3, &cfg()).unwrap(),
            make_opposite(&make_tri(&z2, 3, &cfg()).unwrap(), &cfg()).unwrap(),
            make_tri(&z4, 2, &cfg()).unwrap(),
            make_matrix(&z2, 2, &cfg()).unwrap(),
        ];
        for r in rings {
            assert_eq!(jacobson_radical(&r).unwrap(), oracle_j(&r), "{}", r.label());
            for x in r.elements() {
                assert_eq!(quasi_regular_member(&r, x).unwrap(), in_jacobson(&r, x).unwrap());
            }
        }
    }

    #[test]
    fn radical_of_product_and_corner() {
        let z4 = make_zmod(4, &cfg()).unwrap();
        let z2 = make_zmod(2, &cfg()).unwrap();
        let t = make_tri(&z2, 2, &cfg()).unwrap();
        let p = make_product(&[z4.clone(), t.clone()], &cfg()).unwrap();
        assert_eq!(jacobson_radical(&p).unwrap().len(), 4);
        let m = make_matrix(&z4, 2, &cfg()).unwrap();
        let e = unit_matrix(&z4, 2, 1, 1, z4.one());
        let c = make_corner(&m, e, &cfg()).unwrap();
        assert_eq!(jacobson_radical(&c).unwrap().len(), 2);
    }

    #[test]
    fn unit_scan_matches_hints() {
        let z2 = make_zmod(2, &cfg()).unwrap();
        let m = make_matrix(&z2, 2, &cfg()).unwrap();
        let e = unit_matrix(&z2, 2, 1, 1, z2.one());
        let c = make_corner(&m, e, &cfg()).unwrap();
        // Corners carry no hint, so this exercises the scan.
        assert_eq!(units(&c).unwrap().len(), 1);
        let report = RadicalReport::of(&m).unwrap();
        assert_eq!(report.units.len(), 6);
        assert!(report.is_j_semisimple);
        assert!(!report.nil_in_jacobson);
    }
}
