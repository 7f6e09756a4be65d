//! Evaluation of ring expressions, with named twists and bimodules.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{invalid, Error, Result};
use crate::expr::{parse_ring_expr, IdealSpec, RingExpr};
use crate::ring::product::{components, from_components};
use crate::ring::{
    make_corner, make_family, make_matrix, make_opposite, make_product, make_quotient,
    make_skew_tri, make_sub, make_tri, make_triangular, make_trunc_series, make_zmod, Bimodule,
    Config, Elem, Ideal, Ring, RingMap, Twist,
};

/// A twist given as a label table on one base ring.
#[derive(Clone, Debug, Deserialize)]
pub struct SigmaDef {
    pub ring: String,
    pub map: BTreeMap<String, String>,
}

/// A bimodule given by its module ring and complete action tables, each
/// row `[a, b, a*b]` in labels.
#[derive(Clone, Debug, Deserialize)]
pub struct BimoduleDef {
    pub left: String,
    pub right: String,
    pub module: String,
    pub left_action: Vec<[String; 3]>,
    pub right_action: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Default, Deserialize)]
pub struct Defs {
    #[serde(default)]
    pub sigma: BTreeMap<String, SigmaDef>,
    #[serde(default)]
    pub bimodule: BTreeMap<String, BimoduleDef>,
}

impl Defs {
    pub fn from_toml(text: &str) -> Result<Defs> {
        let defs: Defs = toml::from_str(text).map_err(|e| invalid(format!("definitions file: {e}")))?;
        for name in defs.sigma.keys().chain(defs.bimodule.keys()) {
            if BUILTIN.contains(&name.as_str()) {
                return Err(invalid(format!("`{name}` shadows a built-in name")));
            }
        }
        Ok(defs)
    }
}

const BUILTIN: [&str; 6] = ["id", "identity", "swap", "regular", "reduce", "columns"];

/// Evaluates expressions against the built-in registry plus user
/// definitions.
///
/// Built-in twists: `id`, and `swap` on a product of two equal factors.
/// Built-in bimodules: `regular` (`R` over itself), `reduce` (`Z/n` acting
/// on `S` through reduction) and `columns` (`Mat(B,n)` and `B` acting on
/// `B^n`).
#[derive(Clone, Debug, Default)]
pub struct Evaluator {
    pub config: Config,
    pub defs: Defs,
}

impl Evaluator {
    pub fn new(config: Config, defs: Defs) -> Evaluator {
        Evaluator { config, defs }
    }

    pub fn eval_str(&self, text: &str) -> Result<Ring> {
        self.eval(&parse_ring_expr(text)?)
    }

    pub fn eval(&self, e: &RingExpr) -> Result<Ring> {
        let cfg = &self.config;
        match e {
            RingExpr::Zmod(n) => make_zmod(*n, cfg),
            RingExpr::Trunc(r, m) => make_trunc_series(&self.eval(r)?, *m, cfg),
            RingExpr::Prod(fs) => {
                let rings: Vec<Ring> = fs.iter().map(|f| self.eval(f)).collect::<Result<_>>()?;
                make_product(&rings, cfg)
            }
            RingExpr::Mat(r, n) => make_matrix(&self.eval(r)?, *n, cfg),
            RingExpr::Tri(r, n) => make_tri(&self.eval(r)?, *n, cfg),
            RingExpr::SkewTri(r, n, s) => {
                let base = self.eval(r)?;
                make_skew_tri(&base, *n, &self.twist(r, &base, s)?, cfg)
            }
            RingExpr::Family(fam, r, n, s) => {
                let base = self.eval(r)?;
                let sigma = match s {
                    None => Twist::identity(&base)?,
                    Some(s) => self.twist(r, &base, s)?,
                };
                make_family(*fam, &base, *n, &sigma, cfg)
            }
            RingExpr::Triangular(r, s, name) => {
                let bm = self.bimodule(r, s, name)?;
                make_triangular(&bm, name, cfg)
            }
            RingExpr::Corner(r, e) => {
                let ring = self.eval(r)?;
                let e = ring.find_label(e)?;
                make_corner(&ring, e, cfg)
            }
            RingExpr::Quot(r, spec) => {
                let ring = self.eval(r)?;
                let ideal = match spec {
                    IdealSpec::Jacobson => Ideal::jacobson(&ring)?,
                    IdealSpec::Generated(gens) => Ideal::generated(&ring, &find_all(&ring, gens)?)?,
                };
                Ok(make_quotient(&ideal, cfg)?.0)
            }
            RingExpr::Opp(r) => make_opposite(&self.eval(r)?, cfg),
            RingExpr::Sub(r, gens) => {
                let ring = self.eval(r)?;
                make_sub(&ring, &find_all(&ring, gens)?, cfg)
            }
        }
    }

    fn twist(&self, base_expr: &RingExpr, base: &Ring, name: &str) -> Result<Twist> {
        match name {
            "id" | "identity" => Twist::identity(base),
            "swap" => match base_expr {
                RingExpr::Prod(fs) if fs.len() == 2 && fs[0] == fs[1] => {
                    let factor = self.eval(&fs[0])?;
                    let factors = [factor.clone(), factor];
                    let map = RingMap::from_fn(base, base, |x| {
                        let c = components(base, &factors, x);
                        from_components(&factors, &[c[1], c[0]])
                    })?;
                    Twist::new("swap", map)
                }
                _ => Err(invalid("`swap` needs a base of the form Prod(R,R)")),
            },
            _ => {
                let def = self.defs.sigma.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
                let declared = parse_ring_expr(&def.ring)?;
                if &declared != base_expr {
                    return Err(invalid(format!("sigma `{name}` is defined on {declared}, not {base_expr}")));
                }
                let mut table = vec![None; base.order() as usize];
                for (a, b) in &def.map {
                    table[base.find_label(a)?.0 as usize] = Some(base.find_label(b)?);
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| t.ok_or_else(|| invalid(format!("sigma `{name}` misses {}", base.label_of(Elem(i as u64))))))
                    .collect::<Result<Vec<_>>>()?;
                Twist::new(name, RingMap::new(base, base, table)?)
            }
        }
    }

    fn bimodule(&self, r: &RingExpr, s: &RingExpr, name: &str) -> Result<Bimodule> {
        match name {
            "regular" => {
                if r != s {
                    return Err(invalid("`regular` needs equal rings, Triangular(R,R,regular)"));
                }
                Bimodule::regular(&self.eval(r)?)
            }
            "reduce" => Bimodule::reduction(&self.eval(r)?, &self.eval(s)?),
            "columns" => match r {
                RingExpr::Mat(b, n) if **b == *s => Bimodule::columns(&self.eval(s)?, *n, &self.config),
                _ => Err(invalid("`columns` needs Triangular(Mat(B,n),B,columns)")),
            },
            _ => {
                let def = self.defs.bimodule.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
                let (dl, dr) = (parse_ring_expr(&def.left)?, parse_ring_expr(&def.right)?);
                if &dl != r || &dr != s {
                    return Err(invalid(format!("bimodule `{name}` is defined over {dl} and {dr}")));
                }
                let (lr, rr, m) = (self.eval(r)?, self.eval(s)?, self.eval_str(&def.module)?);
                let left = action_table(&lr, &m, &def.left_action, true)?;
                let right = action_table(&m, &rr, &def.right_action, false)?;
                Bimodule::from_tables(&lr, &rr, &m, left, right)
            }
        }
    }
}

/// Row-major table over `(a, b)`; the product always lands in the module,
/// which is `b`'s ring for a left action and `a`'s ring for a right one.
fn action_table(a: &Ring, b: &Ring, rows: &[[String; 3]], left: bool) -> Result<Vec<Elem>> {
    let module = if left { b } else { a };
    let mut table = vec![None; (a.order() * b.order()) as usize];
    for [x, y, z] in rows {
        let (x, y) = (a.find_label(x)?, b.find_label(y)?);
        table[(x.0 * b.order() + y.0) as usize] = Some(module.find_label(z)?);
    }
    table
        .into_iter()
        .map(|t| t.ok_or_else(|| Error::BimoduleAxiom("action table is incomplete".into())))
        .collect()
}

fn find_all(ring: &Ring, labels: &[String]) -> Result<Vec<Elem>> {
    labels.iter().map(|l| ring.find_label(l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::jacobson_radical;

    #[test]
    fn builds_and_labels_agree() {
        let ev = Evaluator::default();
        for text in [
            "Z4",
            "Trunc(Z2,3)",
            "Prod(Z2,Z4)",
            "Mat(Z2,2)",
            "Tri(Z2,2)",
            "T(Z2,3)",
            "SkewTri(Prod(Z2,Z2),2,swap)",
            "Triangular(Z4,Z2,reduce)",
            "Corner(Prod(Z2,Z4),e=(1,0))",
            "Quot(Tri(Z2,2),J)",
            "Opp(Tri(Z2,2))",
        ] {
            let r = ev.eval_str(text).unwrap();
            assert_eq!(r.label(), parse_ring_expr(text).unwrap().to_string());
        }
        assert_eq!(ev.eval_str("Quot(Z4,{2})").unwrap().order(), 2);
        assert_eq!(ev.eval_str("Sub(Mat(Z2,2),{[[0,1],[0,0]]})").unwrap().order(), 4);
        assert_eq!(ev.eval_str("Triangular(Mat(Z2,2),Z2,columns)").unwrap().order(), 128);
        let t = ev.eval_str("T(Z2,2)").unwrap();
        let j = jacobson_radical(&t).unwrap();
        assert_eq!(t.labels_of(&j), ["(0,0)", "(0,1)"]);
    }

    #[test]
    fn semantic_errors() {
        let ev = Evaluator::default();
        assert!(matches!(ev.eval_str("Corner(Z4,2)"), Err(Error::NotIdempotent(_))));
        assert!(matches!(ev.eval_str("SkewTri(Z2,2,frob)"), Err(Error::UnknownName(_))));
        assert!(ev.eval_str("SkewTri(Z2,2,swap)").is_err());
        assert!(ev.eval_str("Triangular(Z2,Z4,regular)").is_err());
        assert!(ev.eval_str("Corner(Z4,7)").is_err());
    }

    #[test]
    fn user_definitions() {
        let defs = Defs::from_toml(
            r#"
            [sigma.flip]
            ring = "Prod(Z2, Z2)"
            map = { "(0,0)" = "(0,0)", "(0,1)" = "(1,0)", "(1,0)" = "(0,1)", "(1,1)" = "(1,1)" }

            [bimodule.half]
            left = "Z4"
            right = "Z2"
            module = "Z2"
            left_action = [["0","0","0"],["0","1","0"],["1","0","0"],["1","1","1"],
                           ["2","0","0"],["2","1","0"],["3","0","0"],["3","1","1"]]
            right_action = [["0","0","0"],["0","1","0"],["1","0","0"],["1","1","1"]]
            "#,
        )
        .unwrap();
        let ev = Evaluator::new(Config::default(), defs);
        let a = ev.eval_str("SkewTri(Prod(Z2,Z2),2,flip)").unwrap();
        let b = ev.eval_str("SkewTri(Prod(Z2,Z2),2,swap)").unwrap();
        assert!(crate::ring::axioms::tables_equal(&a, &b));
        let t = ev.eval_str("Triangular(Z4,Z2,half)").unwrap();
        let u = ev.eval_str("Triangular(Z4,Z2,reduce)").unwrap();
        assert!(crate::ring::axioms::tables_equal(&t, &u));
        assert!(Defs::from_toml("[sigma.swap]\nring=\"Z2\"\nmap={}").is_err());
    }
}
