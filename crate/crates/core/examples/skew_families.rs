//! Skew triangular matrix rings and the S, T, A, B families.
//!
//!     cargo run --example skew_families

use jmccoy::mccoy::{check_property, is_admissible_right, PropertyKind, Variant};
use jmccoy::ring::product::{components, from_components};
use jmccoy::ring::{make_family, make_product, make_skew_tri, make_zmod, Config, Family, RingMap, Twist};
use jmccoy::search::SearchOptions;

fn main() -> jmccoy::Result<()> {
    let cfg = Config::default();
    let z2 = make_zmod(2, &cfg)?;
    let factors = [z2.clone(), z2.clone()];
    let base = make_product(&factors, &cfg)?;
    let swap = RingMap::from_fn(&base, &base, |x| {
        let c = components(&base, &factors, x);
        from_components(&factors, &[c[1], c[0]])
    })?;
    let sigma = Twist::new("swap", swap)?;

    let skew = make_skew_tri(&base, 2, &sigma, &cfg)?;
    let a = skew.find_label("[[(1,0),(0,0)],[(0,0),(0,0)]]")?;
    let e12 = skew.find_label("[[(0,0),(1,1)],[(0,0),(0,0)]]")?;
    println!("in {}: E12 a = {}, a E12 = {}", skew.label(), skew.label_of(skew.mul(e12, a)), skew.label_of(skew.mul(a, e12)));

    for fam in Family::all() {
        for n in 2..=4 {
            if !fam.admits(n) {
                continue;
            }
            let r = make_family(fam, &base, n, &sigma, &cfg)?;
            let v = check_property(&r, PropertyKind::right(Variant::JMcCoy), 1, &SearchOptions::default());
            let text = match v {
                Ok(v) if v.holds() => {
                    // Elements admissible for every polynomial at once; E_1n is one of them.
                    let common = r.elements().filter(|&x| {
                        v.witness_log.iter().all(|e| is_admissible_right(&e.poly, Variant::JMcCoy, x).unwrap())
                    });
                    format!("holds to degree 1; {} elements are witnesses for all {} polynomials", common.count(), v.witness_log.len())
                }
                Ok(v) => format!("counterexample {:?}", v.counterexample()),
                Err(e) => format!("skipped: {e}"),
            };
            println!("{:<36} order {:>6}  {text}", r.label(), r.order());
        }
    }
    Ok(())
}
