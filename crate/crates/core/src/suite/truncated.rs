//! The subring of `M_3(F[t]/(t^m))` generated by `t M_2`-blocks and scalars.

use crate::error::{invalid, Error, Result};
use crate::poly::Poly;
use crate::ring::matrix::{matrix_elem, matrix_entries};
use crate::ring::series::series_elem;
use crate::ring::subring::{make_subring, SubringSpec};
use crate::ring::{make_matrix, make_trunc_series, make_zmod, subring_closure, Config, Elem, Ring};

pub struct TruncatedExample {
    pub m: usize,
    pub field: Ring,
    pub series: Ring,
    pub ambient: Ring,
    pub ring: Ring,
    /// Sorted ambient images of the elements of `ring`.
    pub members: Vec<Elem>,
    pub f: Poly,
    pub g: Poly,
    /// `t e_11`.
    pub c: Elem,
}

impl TruncatedExample {
    pub fn build(m: usize, config: &Config) -> Result<TruncatedExample> {
        if m < 2 {
            return Err(invalid("the truncation order must be at least 2"));
        }
        let field = make_zmod(2, config)?;
        let series = make_trunc_series(&field, m, config)?;
        let ambient = make_matrix(&series, 3, config)?;
        let t_pow = |k: usize| {
            let mut c = vec![Elem::ZERO; m];
            c[k] = field.one();
            series_elem(&field, m, &c)
        };
        let unit = |i: usize, j: usize, x: Elem| {
            let mut e = vec![Elem::ZERO; 9];
            e[(i - 1) * 3 + (j - 1)] = x;
            matrix_elem(&series, 3, &e)
        };
        // Scalars F·I are adjoined with the identity.
        let mut gens = Vec::new();
        for k in 1..m {
            for i in 1..=2 {
                for j in 1..=2 {
                    gens.push(unit(i, j, t_pow(k)));
                }
            }
        }
        let members = subring_closure(&ambient, &gens);
        let ring = make_subring(
            &ambient,
            members.clone(),
            SubringSpec {
                label: format!("SeriesSub(Z2,t^{m})"),
                identity: ambient.one(),
                verify: false,
                element_label: None,
            },
            config,
        )?;
        let local = |x: Elem| -> Result<Elem> {
            members
                .binary_search(&x)
                .map(|i| Elem(i as u64))
                .map_err(|_| Error::Consistency(format!("{} is outside R", ambient.label_of(x))))
        };
        let t = t_pow(1);
        let f = Poly::new(
            &ring,
            vec![
                local(unit(1, 1, t))?,
                local(unit(1, 2, t))?,
                local(unit(2, 1, t))?,
                local(unit(2, 2, t))?,
            ],
        )?;
        let neg_t = series.neg(t);
        let g = Poly::new(
            &ring,
            vec![
                local(ambient.add(unit(2, 1, neg_t), unit(2, 2, neg_t)))?,
                local(ambient.add(unit(1, 1, t), unit(1, 2, t)))?,
            ],
        )?;
        let c = local(unit(1, 1, t))?;
        Ok(TruncatedExample {
            m,
            field,
            series,
            ambient,
            ring,
            members,
            f,
            g,
            c,
        })
    }

    /// Entries of a ring element as a 3×3 array of series elements.
    pub fn entries(&self, x: Elem) -> Vec<Elem> {
        matrix_entries(&self.series, 3, self.members[x.0 as usize])
    }

    /// Constant coefficient, as a field element.
    fn constant_term(&self, s: Elem) -> Elem {
        let d = self.series.order() / self.field.order();
        Elem(s.0 / d)
    }

    fn is_constant(&self, s: Elem) -> bool {
        let d = self.series.order() / self.field.order();
        s.0.is_multiple_of(d)
    }

    /// `(a, f_1, f_2, f_3, f_4)` when `x` has the normal form
    /// `(a+f_1)e_11 + f_2 e_12 + f_3 e_21 + (a+f_4)e_22 + a e_33`.
    pub fn normal_form(&self, x: Elem) -> Option<(Elem, [Elem; 4])> {
        self.normal_form_of_entries(&self.entries(x))
    }

    fn normal_form_of_entries(&self, e: &[Elem]) -> Option<(Elem, [Elem; 4])> {
        let s = &self.series;
        let a = e[8];
        if !self.is_constant(a) {
            return None;
        }
        if [e[2], e[5], e[6], e[7]].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let parts = [s.sub(e[0], a), e[1], e[3], s.sub(e[4], a)];
        if parts.iter().any(|&p| !self.constant_term(p).is_zero()) {
            return None;
        }
        Some((self.constant_term(a), parts))
    }

    /// Size of the normal-form set: `|F| · |tF[t]/(t^m)|^4`.
    pub fn normal_form_count(&self) -> u64 {
        let q = self.field.order();
        let tf = self.series.order() / q;
        q * tf.pow(4)
    }

    /// `(a + f_1) t e_11 + f_3 t e_21` for a coefficient in normal form.
    pub fn predicted_times_c(&self, x: Elem) -> Option<Vec<Elem>> {
        let (a, f) = self.normal_form(x)?;
        let s = &self.series;
        let mut t_coeffs = vec![Elem::ZERO; self.m];
        t_coeffs[1] = self.field.one();
        let t = series_elem(&self.field, self.m, &t_coeffs);
        let a = series_elem(&self.field, self.m, &[a]);
        let mut out = vec![Elem::ZERO; 9];
        out[0] = s.mul(s.add(a, f[0]), t);
        out[3] = s.mul(f[2], t);
        Some(out)
    }
}
