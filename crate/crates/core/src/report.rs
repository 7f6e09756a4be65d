//! Serializable summaries shared by the suite, the examples and the binary.

use std::hash::{DefaultHasher, Hash, Hasher};

use serde::Serialize;

use crate::mccoy::{Outcome, Verdict};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSample {
    pub poly: String,
    pub partners: u64,
    pub witness: String,
}

/// A verdict flattened for output. `witness_digest` fingerprints the whole
/// witness log so runs can be compared without printing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictSummary {
    pub ring: String,
    pub property: String,
    pub side: String,
    pub max_degree: usize,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<Poly>,
    pub pairs_examined: u64,
    pub cost_estimate: String,
    pub witnessed_polynomials: usize,
    pub witness_digest: String,
    pub witness_sample: Vec<WitnessSample>,
}

impl VerdictSummary {
    pub fn new(v: &Verdict, sample: usize) -> VerdictSummary {
        let (outcome, f, g) = match &v.outcome {
            Outcome::HoldsUpToDegree(_) => ("holds_up_to_degree", None, None),
            Outcome::Counterexample(p) => ("counterexample", Some(p.f.clone()), Some(p.g.clone())),
        };
        VerdictSummary {
            ring: v.ring.label().to_string(),
            property: v.property.variant.name().to_string(),
            side: v.property.side.name().to_string(),
            max_degree: v.dmax,
            outcome: outcome.to_string(),
            f,
            g,
            pairs_examined: v.pairs_examined,
            cost_estimate: v.estimate.to_string(),
            witnessed_polynomials: v.witness_log.len(),
            witness_digest: witness_digest(v),
            witness_sample: v
                .witness_log
                .iter()
                .take(sample)
                .map(|e| WitnessSample {
                    poly: e.poly.to_string(),
                    partners: e.partners,
                    witness: v.ring.label_of(e.witness),
                })
                .collect(),
        }
    }
}

pub fn witness_digest(v: &Verdict) -> String {
    let mut h = DefaultHasher::new();
    for e in &v.witness_log {
        e.poly.coeffs().hash(&mut h);
        e.partners.hash(&mut h);
        e.witness.hash(&mut h);
    }
    format!("{:016x}", h.finish())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
