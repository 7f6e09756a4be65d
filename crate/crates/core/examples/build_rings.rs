//! Structural constructions and the ring axioms.
//!
//!     cargo run --example build_rings

use jmccoy::ring::axioms::verify;
use jmccoy::ring::predicates::{idempotents, is_abelian, is_local};
use jmccoy::ring::product::from_components;
use jmccoy::ring::{
    make_corner, make_matrix, make_opposite, make_product, make_quotient, make_trunc_series,
    make_zmod, Config, Ideal,
};

fn main() -> jmccoy::Result<()> {
    let cfg = Config::default();
    let z2 = make_zmod(2, &cfg)?;
    let z4 = make_zmod(4, &cfg)?;
    let series = make_trunc_series(&z2, 4, &cfg)?;
    let m2 = make_matrix(&z2, 2, &cfg)?;
    let prod = make_product(&[z2.clone(), z4.clone()], &cfg)?;
    let opp = make_opposite(&m2, &cfg)?;

    for r in [&z4, &series, &m2, &prod, &opp] {
        let ax = verify(r)?;
        println!(
            "{:<18} order {:>3}  commutative {:<5}  local {:<5}  abelian {:<5}  idempotents {}",
            r.label(),
            r.order(),
            ax.commutative,
            is_local(r)?,
            is_abelian(r)?,
            idempotents(r)?.len()
        );
    }

    let t = series.find_label("t")?;
    println!("t^4 in {} is {}", series.label(), series.label_of(series.pow(t, 4)));

    let e = from_components(&[z2.clone(), z4.clone()], &[z2.one(), z4.zero()]);
    let corner = make_corner(&prod, e, &cfg)?;
    println!("{} has {} elements", corner.label(), corner.order());

    let ideal = Ideal::new(&z4, vec![z4.find_label("0")?, z4.find_label("2")?])?;
    let (q, proj) = make_quotient(&ideal, &cfg)?;
    println!("{} has {} elements; kernel of the projection {:?}", q.label(), q.order(), z4.labels_of(&proj.kernel()));
    Ok(())
}
