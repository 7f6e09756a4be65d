//! McCoy, NC-McCoy and J-McCoy checks up to a degree bound.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::poly::{Poly, ZeroPair};
use crate::ring::{make_opposite, Elem, Ring};
use crate::search::{check_budget, Enumerator, SearchOptions};

/// f-indices handed to a worker at a time.
const CHUNK: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    #[serde(rename = "mccoy")]
    McCoy,
    #[serde(rename = "nc-mccoy")]
    NcMcCoy,
    #[serde(rename = "j-mccoy")]
    JMcCoy,
}

impl Variant {
    pub fn all() -> [Variant; 3] {
        [Variant::McCoy, Variant::NcMcCoy, Variant::JMcCoy]
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::McCoy => "mccoy",
            Variant::NcMcCoy => "nc-mccoy",
            Variant::JMcCoy => "j-mccoy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PropertyKind {
    pub variant: Variant,
    pub side: Side,
}

impl PropertyKind {
    pub fn new(variant: Variant, side: Side) -> Self {
        PropertyKind { variant, side }
    }

    pub fn right(variant: Variant) -> Self {
        PropertyKind::new(variant, Side::Right)
    }

    pub fn left(variant: Variant) -> Self {
        PropertyKind::new(variant, Side::Left)
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.side.name(), self.variant.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "mccoy" => Ok(Variant::McCoy),
            "nc-mccoy" | "nc" => Ok(Variant::NcMcCoy),
            "j-mccoy" | "j" => Ok(Variant::JMcCoy),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s.to_ascii_lowercase().as_str() {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// Membership test for `a r` behind each variant: zero, nilpotent, or in
/// the Jacobson radical.
#[derive(Clone)]
pub(crate) struct Target {
    mask: Option<Arc<Vec<bool>>>,
}

impl Target {
    pub fn new(ring: &Ring, variant: Variant) -> Result<Target> {
        let mask = match variant {
            Variant::McCoy => None,
            Variant::NcMcCoy => Some(Arc::new(ring.radical_sets()?.nilpotent.clone())),
            Variant::JMcCoy => Some(Arc::new(ring.radical_sets()?.in_jacobson.clone())),
        };
        Ok(Target { mask })
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        match &self.mask {
            None => x.is_zero(),
            Some(m) => m[x.0 as usize],
        }
    }

    pub fn admits(&self, ring: &Ring, coeffs: &[Elem], r: Elem) -> bool {
        !r.is_zero() && coeffs.iter().all(|&a| self.contains(ring.mul(a, r)))
    }

    pub fn least_witness(&self, ring: &Ring, coeffs: &[Elem]) -> Option<Elem> {
        let nonzero: Vec<Elem> = coeffs.iter().copied().filter(|a| !a.is_zero()).collect();
        ring.elements()
            .skip(1)
            .find(|&r| nonzero.iter().all(|&a| self.contains(ring.mul(a, r))))
    }

    pub fn admissible_set(&self, ring: &Ring, coeffs: &[Elem]) -> Vec<Elem> {
        ring.elements()
            .skip(1)
            .filter(|&r| self.admits(ring, coeffs, r))
            .collect()
    }
}

/// Least nonzero `r` with every `a_i r` zero, nilpotent or in `J(R)`
/// according to `kind.variant`.
pub fn witness_right(f: &Poly, kind: PropertyKind) -> Result<Option<Elem>> {
    if kind.side != Side::Right {
        return Err(invalid("witness_right needs a right-sided property"));
    }
    if f.is_zero() {
        return Err(invalid("witnesses are only defined for nonzero polynomials"));
    }
    let target = Target::new(f.ring(), kind.variant)?;
    Ok(target.least_witness(f.ring(), f.coeffs()))
}

/// Whether `r` is a nonzero element with every `a_i r` in the target set.
pub fn is_admissible_right(f: &Poly, variant: Variant, r: Elem) -> Result<bool> {
    let target = Target::new(f.ring(), variant)?;
    Ok(target.admits(f.ring(), f.coeffs(), r))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    HoldsUpToDegree(usize),
    /// The lexicographically least zero pair whose witness search failed.
    Counterexample(ZeroPair),
}

/// One polynomial that occurs in a zero pair, with its chosen witness. On
/// the right side `poly` is the left factor `f`; on the left side it is the
/// right factor `g` and the witness multiplies from the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEntry {
    pub poly: Poly,
    pub partners: u64,
    pub witness: Elem,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub ring: Ring,
    pub property: PropertyKind,
    pub dmax: usize,
    pub outcome: Outcome,
    pub pairs_examined: u64,
    pub estimate: u128,
    pub witness_log: Vec<WitnessEntry>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self.outcome, Outcome::HoldsUpToDegree(_))
    }

    pub fn counterexample(&self) -> Option<&ZeroPair> {
        match &self.outcome {
            Outcome::Counterexample(p) => Some(p),
            Outcome::HoldsUpToDegree(_) => None,
        }
    }
}

struct Chunk {
    log: Vec<(Vec<Elem>, u64, Elem)>,
    pairs: u64,
    failure: Option<(Vec<Elem>, Vec<Elem>)>,
}

fn scan_chunk(engine: &Enumerator, ring: &Ring, target: &Target, lo: u64, hi: u64) -> Chunk {
    let mut out = Chunk {
        log: Vec::new(),
        pairs: 0,
        failure: None,
    };
    for idx in lo..hi {
        let f = engine.decode(idx);
        let mut witness: Option<Option<Elem>> = None;
        let mut count = 0u64;
        engine.partners(&f, |g| {
            let w = *witness.get_or_insert_with(|| target.least_witness(ring, &f));
            count += 1;
            if w.is_none() {
                out.failure = Some((f.clone(), g.to_vec()));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        out.pairs += count;
        if out.failure.is_some() {
            return out;
        }
        if let Some(Some(w)) = witness {
            out.log.push((f, count, w));
        }
    }
    out
}

struct Scan {
    log: Vec<(Vec<Elem>, u64, Elem)>,
    pairs: u64,
    failure: Option<(Vec<Elem>, Vec<Elem>)>,
}

fn scan(ring: &Ring, target: &Target, dmax: usize, workers: usize) -> Result<Scan> {
    if workers == 0 {
        return Err(invalid("at least one worker is required"));
    }
    let engine = Enumerator::new(ring, dmax);
    let range = engine.f_range();
    let starts: Vec<u64> = (range.start..range.end).step_by(CHUNK as usize).collect();
    let mut result = Scan {
        log: Vec::new(),
        pairs: 0,
        failure: None,
    };
    let run = |lo: u64| scan_chunk(&engine, ring, target, lo, (lo + CHUNK).min(range.end));
    let pool = if workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| Error::Consistency(format!("worker pool: {e}")))?,
        )
    } else {
        None
    };
    for wave in starts.chunks(workers) {
        let chunks: Vec<Chunk> = match &pool {
            Some(p) => p.install(|| wave.par_iter().map(|&lo| run(lo)).collect()),
            None => wave.iter().map(|&lo| run(lo)).collect(),
        };
        // Chunks come back in index order; stop at the first failure.
        for c in chunks {
            result.pairs += c.pairs;
            result.log.extend(c.log);
            if c.failure.is_some() {
                result.failure = c.failure;
                return Ok(result);
            }
        }
    }
    Ok(result)
}

/// Searches every zero pair up to `dmax` for one without a witness.
///
/// Left-sided properties are checked as right-sided ones on the opposite
/// ring; a pair `(f', g')` found there is reported as `(g', f')`.
pub fn check_property(
    ring: &Ring,
    kind: PropertyKind,
    dmax: usize,
    options: &SearchOptions,
) -> Result<Verdict> {
    let estimate = check_budget(ring, dmax, options.budget)?;
    let search_ring = match kind.side {
        Side::Right => ring.clone(),
        Side::Left => make_opposite(ring, ring.config())?,
    };
    let target = Target::new(&search_ring, kind.variant)?;
    let s = scan(&search_ring, &target, dmax, options.workers)?;
    let wrap = |c: Vec<Elem>| Poly::from_trusted(ring, c);
    let outcome = match s.failure {
        None => Outcome::HoldsUpToDegree(dmax),
        Some((f, g)) => {
            let (f, g) = match kind.side {
                Side::Right => (wrap(f), wrap(g)),
                Side::Left => (wrap(g), wrap(f)),
            };
            let pair = ZeroPair::new(f, g)
                .map_err(|e| Error::Consistency(format!("reported pair is not a zero pair: {e}")))?;
            Outcome::Counterexample(pair)
        }
    };
    let verdict = Verdict {
        ring: ring.clone(),
        property: kind,
        dmax,
        outcome,
        pairs_examined: s.pairs,
        estimate,
        witness_log: s
            .log
            .into_iter()
            .map(|(p, partners, witness)| WitnessEntry {
                poly: wrap(p),
                partners,
                witness,
            })
            .collect(),
    };
    recheck(&verdict)?;
    Ok(verdict)
}

/// Re-verifies a verdict directly in `R`, independent of the search path.
pub fn recheck(v: &Verdict) -> Result<()> {
    let ring = &v.ring;
    let target = Target::new(ring, v.property.variant)?;
    let fault = |msg: String| Err(Error::Consistency(msg));
    let ok = |coeffs: &[Elem], r: Elem| match v.property.side {
        Side::Right => target.admits(ring, coeffs, r),
        Side::Left => !r.is_zero() && coeffs.iter().all(|&b| target.contains(ring.mul(r, b))),
    };
    for e in &v.witness_log {
        if !ok(e.poly.coeffs(), e.witness) {
            return fault(format!("witness {} fails for {}", ring.label_of(e.witness), e.poly));
        }
    }
    if let Some(pair) = v.counterexample() {
        let side = match v.property.side {
            Side::Right => &pair.f,
            Side::Left => &pair.g,
        };
        if let Some(r) = ring.elements().skip(1).find(|&r| ok(side.coeffs(), r)) {
            return fault(format!(
                "counterexample {} has witness {}",
                side,
                ring.label_of(r)
            ));
        }
    }
    Ok(())
}

/// Containments between the admissible witness sets of the three variants,
/// audited for every polynomial that occurs as a left factor.
#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub ring: String,
    pub dmax: usize,
    pub polynomials_audited: u64,
    pub j_semisimple: bool,
    /// `N(R) ⊆ J(R)`; the NC-in-J containment is only asserted then.
    pub nil_in_jacobson: bool,
    /// Polynomials whose NC-admissible set is not inside the J-admissible
    /// set. Always zero when `nil_in_jacobson` holds.
    pub nc_not_in_j: u64,
    pub first_nc_not_in_j: Option<(String, String)>,
    /// Least polynomial without an admissible witness, per variant.
    pub first_failure: Vec<(Variant, Option<String>)>,
}

/// Checks McCoy ⊆ NC ⊆ J for the admissible witness sets, and equality of
/// the McCoy and J sets when `J(R) = 0`. Violations of an asserted
/// containment are consistency faults.
pub fn implication_audit(ring: &Ring, dmax: usize, options: &SearchOptions) -> Result<AuditReport> {
    check_budget(ring, dmax, options.budget)?;
    let targets: Vec<Target> = Variant::all()
        .iter()
        .map(|&v| Target::new(ring, v))
        .collect::<Result<_>>()?;
    let sets = ring.radical_sets()?;
    let j_semisimple = sets.jacobson.len() == 1;
    let nil_in_jacobson = ring
        .elements()
        .all(|e| !sets.nilpotent[e.0 as usize] || sets.in_jacobson[e.0 as usize]);
    let engine = Enumerator::new(ring, dmax);
    let mut report = AuditReport {
        ring: ring.label().to_string(),
        dmax,
        polynomials_audited: 0,
        j_semisimple,
        nil_in_jacobson,
        nc_not_in_j: 0,
        first_nc_not_in_j: None,
        first_failure: Variant::all().iter().map(|&v| (v, None)).collect(),
    };
    for idx in engine.f_range() {
        let f = engine.decode(idx);
        if !engine.partners(&f, |_| ControlFlow::Break(())) {
            continue;
        }
        report.polynomials_audited += 1;
        let adm: Vec<Vec<Elem>> = targets.iter().map(|t| t.admissible_set(ring, &f)).collect();
        let subset = |a: &[Elem], b: &[Elem]| a.iter().all(|x| b.binary_search(x).is_ok());
        let fp = Poly::from_trusted(ring, f.clone());
        if !subset(&adm[0], &adm[1]) || !subset(&adm[0], &adm[2]) {
            return Err(Error::Consistency(format!(
                "a McCoy witness of {fp} is not NC- or J-admissible"
            )));
        }
        if !subset(&adm[1], &adm[2]) {
            if nil_in_jacobson {
                return Err(Error::Consistency(format!(
                    "an NC witness of {fp} is not J-admissible although N(R) is inside J(R)"
                )));
            }
            report.nc_not_in_j += 1;
            if report.first_nc_not_in_j.is_none() {
                let r = adm[1].iter().find(|x| adm[2].binary_search(x).is_err()).copied();
                report.first_nc_not_in_j =
                    r.map(|r| (fp.to_string(), ring.label_of(r)));
            }
        }
        if j_semisimple && adm[0] != adm[2] {
            return Err(Error::Consistency(format!(
                "J(R) = 0 but the McCoy and J witness sets of {fp} differ"
            )));
        }
        for (k, a) in adm.iter().enumerate() {
            if a.is_empty() && report.first_failure[k].1.is_none() {
                report.first_failure[k].1 = Some(fp.to_string());
            }
        }
    }
    Ok(report)
}
