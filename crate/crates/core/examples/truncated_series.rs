//! The subring of M_3(F[t]/(t^m)) carrying the zero pair
//! f = te11 + te12 x + te21 x^2 + te22 x^3, g = -t(e21 + e22) + t(e11 + e12) x.
//!
//!     cargo run --release --example truncated_series -- 4

use jmccoy::mccoy::{is_admissible_right, witness_right, PropertyKind, Variant};
use jmccoy::radical::in_jacobson;
use jmccoy::ring::Config;
use jmccoy::suite::truncated::TruncatedExample;

fn main() -> jmccoy::Result<()> {
    let m = std::env::args().nth(1).map_or(4, |s| s.parse().expect("truncation order"));
    let ex = TruncatedExample::build(m, &Config::default())?;
    let r = &ex.ring;
    println!("{} has {} elements ({} predicted by the normal form)", r.label(), r.order(), ex.normal_form_count());
    println!("f   = {}", ex.f);
    println!("g   = {}", ex.g);
    println!("f g = {}", ex.f.mul(&ex.g)?);
    for &mi in ex.f.coeffs() {
        let p = r.mul(mi, ex.c);
        println!("{} * te11 = {}  in J: {}", r.label_of(mi), r.label_of(p), in_jacobson(r, p)?);
    }
    println!("te11 is a J-witness for f: {}", is_admissible_right(&ex.f, Variant::JMcCoy, ex.c)?);
    if let Some(w) = witness_right(&ex.f, PropertyKind::right(Variant::NcMcCoy))? {
        println!("truncation also gives an NC-witness: {}", r.label_of(w));
    }
    Ok(())
}
