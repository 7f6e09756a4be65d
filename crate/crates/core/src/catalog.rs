//! A fixed list of small rings reachable through the expression language.

/// Every ring of order at most 8 that the constructions produce, up to the
/// obvious duplicates. Includes the noncommutative ring `T_2(Z2)` and its
/// opposite, the field with four elements, and `Z2[t]/(t^2)` in two guises.
pub const SMALL_RINGS: &[&str] = &[
    "Z2",
    "Z3",
    "Z4",
    "Z5",
    "Z6",
    "Z7",
    "Z8",
    "Prod(Z2,Z2)",
    "Prod(Z2,Z3)",
    "Prod(Z2,Z4)",
    "Prod(Z2,Z2,Z2)",
    "Prod(Z2,Trunc(Z2,2))",
    "Trunc(Z2,2)",
    "Trunc(Z2,3)",
    "Sub(Mat(Z2,2),{[[0,1],[1,1]]})",
    "Sub(Mat(Z2,2),{[[0,1],[0,0]]})",
    "S(Z2,2)",
    "T(Z2,3)",
    "Tri(Z2,2)",
    "Opp(Tri(Z2,2))",
    "Quot(Tri(Z2,2),J)",
    "Corner(Tri(Z2,2),e=[[1,0],[0,0]])",
];

/// The default list for `hunt`: the small catalog plus a few larger rings
/// where counterexamples live.
pub const HUNT_RINGS: &[&str] = &["Mat(Z2,2)", "Prod(Z2,Mat(Z2,2))", "Triangular(Z4,Z2,reduce)"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::Evaluator;
    use crate::ring::axioms::verify;

    #[test]
    fn catalog_builds() {
        let ev = Evaluator::default();
        for text in SMALL_RINGS.iter().chain(HUNT_RINGS) {
            let r = ev.eval_str(text).unwrap();
            verify(&r).unwrap();
            if SMALL_RINGS.contains(text) {
                assert!(r.order() <= 8, "{text}");
            }
        }
    }
}
