//! Formal triangular rings [[R, M], [0, S]] over a bimodule.
//!
//!     cargo run --example triangular_bimodule

use jmccoy::mccoy::{check_property, PropertyKind, Variant};
use jmccoy::radical::jacobson_radical;
use jmccoy::ring::{make_triangular, make_zmod, triangular_parts, Bimodule, Config};
use jmccoy::search::SearchOptions;

fn main() -> jmccoy::Result<()> {
    let cfg = Config::default();
    let z2 = make_zmod(2, &cfg)?;
    let z4 = make_zmod(4, &cfg)?;
    let bimodules = [
        ("regular", Bimodule::regular(&z2)?),
        ("reduce", Bimodule::reduction(&z4, &z2)?),
        ("columns", Bimodule::columns(&z2, 2, &cfg)?),
    ];
    for (name, bm) in &bimodules {
        let t = make_triangular(bm, name, &cfg)?;
        let j = jacobson_radical(&t)?;
        let in_block = j.iter().all(|&x| {
            let (r, _, s) = triangular_parts(bm, x);
            jacobson_radical(bm.left_ring()).unwrap().contains(&r) && jacobson_radical(bm.right_ring()).unwrap().contains(&s)
        });
        let kind = PropertyKind::right(Variant::JMcCoy);
        let opts = SearchOptions::default();
        let holds = |r| check_property(r, kind, 1, &opts).map(|v| v.holds());
        println!(
            "{}: order {}, |J| = {}, J in block shape: {}, J-McCoy to degree 1: T {}, R {}, S {}",
            t.label(),
            t.order(),
            j.len(),
            in_block,
            holds(&t)?,
            holds(bm.left_ring())?,
            holds(bm.right_ring())?
        );
    }
    Ok(())
}
