//! The ring description language.
//!
//! ```text
//! expr  := ATOM | NAME '(' args ')'
//! ATOM  := 'Z' digits
//! args  := arg (',' arg)*
//! arg   := expr | integer | name | 'e=' label | '{' label (';'|',' label)* '}' | 'J'
//! ```
//!
//! Element labels are the strings printed by `build`; they may contain
//! brackets and commas as long as the brackets balance. Whitespace is
//! ignored everywhere.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingExpr {
    Zmod(u64),
    Trunc(Box<RingExpr>, usize),
    Prod(Vec<RingExpr>),
    Mat(Box<RingExpr>, usize),
    Tri(Box<RingExpr>, usize),
    SkewTri(Box<RingExpr>, usize, String),
    /// `S`, `T`, `A` or `B`; no sigma means the identity.
    Family(Family, Box<RingExpr>, usize, Option<String>),
    Triangular(Box<RingExpr>, Box<RingExpr>, String),
    Corner(Box<RingExpr>, String),
    Quot(Box<RingExpr>, IdealSpec),
    Opp(Box<RingExpr>),
    Sub(Box<RingExpr>, Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec {
    Jacobson,
    /// Two-sided ideal generated by these labels.
    Generated(Vec<String>),
}

impl std::str::FromStr for RingExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<RingExpr> {
        parse_ring_expr(s)
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos < p.src.len() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            expected: expected.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || !self.src[start].is_ascii_alphabetic() {
            self.pos = start;
            return Err(self.error("ring name"));
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }

    fn integer(&mut self, what: &str) -> Result<u64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.error(what)
            })
    }

    fn positive(&mut self, what: &str) -> Result<usize> {
        let start = {
            self.ws();
            self.pos
        };
        let n = self.integer(what)?;
        if n == 0 {
            return Err(Error::Parse {
                offset: start,
                expected: format!("{what} (at least 1)"),
            });
        }
        Ok(n as usize)
    }

    /// A label: text up to a top-level `,`, `;`, `)` or `}`.
    fn label(&mut self) -> Result<String> {
        self.ws();
        let start = self.pos;
        let mut depth = 0i32;
        let mut out = String::new();
        while let Some(&c) = self.src.get(self.pos) {
            match c {
                b'(' | b'[' | b'{' => depth += 1,
                b')' | b']' | b'}' if depth == 0 => break,
                b')' | b']' | b'}' => depth -= 1,
                b',' | b';' if depth == 0 => break,
                _ => {}
            }
            if !c.is_ascii_whitespace() {
                out.push(c as char);
            }
            self.pos += 1;
        }
        if out.is_empty() {
            self.pos = start;
            return Err(self.error("element label"));
        }
        Ok(out)
    }

    fn label_set(&mut self) -> Result<Vec<String>> {
        self.expect(b'{')?;
        let mut out = Vec::new();
        if self.eat(b'}') {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            if self.eat(b'}') {
                return Ok(out);
            }
            if !(self.eat(b',') || self.eat(b';')) {
                return Err(self.error("`;`, `,` or `}`"));
            }
        }
    }

    fn comma(&mut self) -> Result<()> {
        self.expect(b',')
    }

    fn close(&mut self) -> Result<()> {
        self.expect(b')')
    }

    fn expr(&mut self) -> Result<RingExpr> {
        let (start, name) = self.ident()?;
        if self.peek() != Some(b'(') {
            if let Some(n) = name.strip_prefix('Z').and_then(|d| d.parse::<u64>().ok()) {
                if n == 0 {
                    self.pos = start;
                    return Err(self.error("modulus of at least 1"));
                }
                return Ok(RingExpr::Zmod(n));
            }
            self.pos = start;
            return Err(self.error("atom `Z<n>` or `NAME(`"));
        }
        self.expect(b'(')?;
        let b = |e: RingExpr| Box::new(e);
        let e = match name.as_str() {
            "Zmod" | "Z" => {
                self.ws();
                let at = self.pos;
                let n = self.integer("modulus")?;
                if n == 0 {
                    self.pos = at;
                    return Err(self.error("modulus of at least 1"));
                }
                RingExpr::Zmod(n)
            }
            "Trunc" | "TruncSeries" => {
                let r = self.expr()?;
                self.comma()?;
                RingExpr::Trunc(b(r), self.positive("truncation order")?)
            }
            "Prod" => {
                let mut fs = vec![self.expr()?];
                while self.eat(b',') {
                    fs.push(self.expr()?);
                }
                RingExpr::Prod(fs)
            }
            "Mat" | "Tri" => {
                let r = self.expr()?;
                self.comma()?;
                let n = self.positive("matrix size")?;
                if name == "Mat" {
                    RingExpr::Mat(b(r), n)
                } else {
                    RingExpr::Tri(b(r), n)
                }
            }
            "SkewTri" => {
                let r = self.expr()?;
                self.comma()?;
                let n = self.positive("matrix size")?;
                self.comma()?;
                RingExpr::SkewTri(b(r), n, self.ident()?.1)
            }
            "S" | "T" | "A" | "B" => {
                let fam = match name.as_str() {
                    "S" => Family::S,
                    "T" => Family::T,
                    "A" => Family::A,
                    _ => Family::B,
                };
                let r = self.expr()?;
                self.comma()?;
                let at = {
                    self.ws();
                    self.pos
                };
                let n = self.positive("matrix size")?;
                if !fam.admits(n) {
                    self.pos = at;
                    return Err(self.error("even size of at least 4"));
                }
                let sigma = if self.eat(b',') { Some(self.ident()?.1) } else { None };
                RingExpr::Family(fam, b(r), n, sigma)
            }
            "Triangular" => {
                let r = self.expr()?;
                self.comma()?;
                let s = self.expr()?;
                self.comma()?;
                RingExpr::Triangular(b(r), b(s), self.ident()?.1)
            }
            "Corner" => {
                let r = self.expr()?;
                self.comma()?;
                self.ws();
                if self.src[self.pos..].starts_with(b"e") {
                    let save = self.pos;
                    self.pos += 1;
                    if !self.eat(b'=') {
                        self.pos = save;
                    }
                }
                RingExpr::Corner(b(r), self.label()?)
            }
            "Quot" => {
                let r = self.expr()?;
                self.comma()?;
                let spec = if self.peek() == Some(b'{') {
                    IdealSpec::Generated(self.label_set()?)
                } else {
                    let (at, id) = self.ident()?;
                    if id != "J" {
                        self.pos = at;
                        return Err(self.error("`J` or `{`"));
                    }
                    IdealSpec::Jacobson
                };
                RingExpr::Quot(b(r), spec)
            }
            "Opp" => RingExpr::Opp(b(self.expr()?)),
            "Sub" => {
                let r = self.expr()?;
                self.comma()?;
                RingExpr::Sub(b(r), self.label_set()?)
            }
            _ => {
                self.pos = start;
                return Err(self.error(
                    "one of Z, Zmod, Trunc, Prod, Mat, Tri, SkewTri, S, T, A, B, Triangular, Corner, Quot, Opp, Sub",
                ));
            }
        };
        self.close()?;
        Ok(e)
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z{n}"),
            RingExpr::Trunc(r, m) => write!(f, "Trunc({r},{m})"),
            RingExpr::Prod(fs) => {
                write!(f, "Prod(")?;
                for (i, r) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
            RingExpr::Mat(r, n) => write!(f, "Mat({r},{n})"),
            RingExpr::Tri(r, n) => write!(f, "Tri({r},{n})"),
            RingExpr::SkewTri(r, n, s) => write!(f, "SkewTri({r},{n},{s})"),
            RingExpr::Family(fam, r, n, None) => write!(f, "{}({r},{n})", fam.name()),
            RingExpr::Family(fam, r, n, Some(s)) => write!(f, "{}({r},{n},{s})", fam.name()),
            RingExpr::Triangular(r, s, m) => write!(f, "Triangular({r},{s},{m})"),
            RingExpr::Corner(r, e) => write!(f, "Corner({r},e={e})"),
            RingExpr::Quot(r, IdealSpec::Jacobson) => write!(f, "Quot({r},J)"),
            RingExpr::Quot(r, IdealSpec::Generated(g)) => write!(f, "Quot({r},{{{}}})", g.join(";")),
            RingExpr::Opp(r) => write!(f, "Opp({r})"),
            RingExpr::Sub(r, g) => write!(f, "Sub({r},{{{}}})", g.join(";")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_spec_forms() {
        assert_eq!(parse_ring_expr("Z4").unwrap(), RingExpr::Zmod(4));
        assert_eq!(parse_ring_expr(" Zmod ( 6 ) ").unwrap(), RingExpr::Zmod(6));
        assert_eq!(
            parse_ring_expr("T(Z2,3)").unwrap(),
            RingExpr::Family(Family::T, Box::new(RingExpr::Zmod(2)), 3, None)
        );
        let c = parse_ring_expr("Corner(Prod(Z2,Z4), e=(1,0))").unwrap();
        assert_eq!(c.to_string(), "Corner(Prod(Z2,Z4),e=(1,0))");
        let q = parse_ring_expr("Quot(Mat(Z2,2), {[[0,1],[0,0]] ; [[1,0],[0,0]]})").unwrap();
        assert_eq!(q.to_string(), "Quot(Mat(Z2,2),{[[0,1],[0,0]];[[1,0],[0,0]]})");
        assert_eq!(parse_ring_expr("Quot(Tri(Z2,2),J)").unwrap().to_string(), "Quot(Tri(Z2,2),J)");
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &str| match parse_ring_expr(s) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(err("Mat(Z2,0)"), 7);
        assert_eq!(err("Mat(Z2 2)"), 7);
        assert_eq!(err("Foo(Z2)"), 0);
        assert_eq!(err("Z2 x"), 3);
        assert_eq!(err("B(Z2,3)"), 5);
        assert_eq!(err("Z0"), 0);
        assert_eq!(err("Corner(Z2,)"), 10);
    }

    fn label() -> impl Strategy<Value = String> {
        prop_oneof![
            "[a-z0-9^+]{1,4}",
            "[0-9]{1,2}".prop_map(|s| format!("({s},{s})")),
            "[01]".prop_map(|s| format!("[[{s},0],[0,{s}]]")),
        ]
    }

    fn name() -> impl Strategy<Value = String> {
        "[a-z][a-z0-9_]{0,5}"
    }

    fn expr() -> impl Strategy<Value = RingExpr> {
        let leaf = (1u64..50).prop_map(RingExpr::Zmod);
        leaf.prop_recursive(4, 24, 3, |inner| {
            let fam = prop_oneof![Just(Family::S), Just(Family::T), Just(Family::A)];
            prop_oneof![
                (inner.clone(), 1usize..5).prop_map(|(r, m)| RingExpr::Trunc(Box::new(r), m)),
                prop::collection::vec(inner.clone(), 1..4).prop_map(RingExpr::Prod),
                (inner.clone(), 1usize..4).prop_map(|(r, n)| RingExpr::Mat(Box::new(r), n)),
                (inner.clone(), 1usize..4).prop_map(|(r, n)| RingExpr::Tri(Box::new(r), n)),
                (inner.clone(), 1usize..4, name()).prop_map(|(r, n, s)| RingExpr::SkewTri(Box::new(r), n, s)),
                (fam, inner.clone(), 1usize..5, prop::option::of(name()))
                    .prop_map(|(f, r, n, s)| RingExpr::Family(f, Box::new(r), n, s)),
                (inner.clone(), inner.clone(), name())
                    .prop_map(|(r, s, m)| RingExpr::Triangular(Box::new(r), Box::new(s), m)),
                (inner.clone(), label()).prop_map(|(r, e)| RingExpr::Corner(Box::new(r), e)),
                (inner.clone(), prop::option::of(prop::collection::vec(label(), 0..3))).prop_map(|(r, g)| {
                    RingExpr::Quot(Box::new(r), g.map_or(IdealSpec::Jacobson, IdealSpec::Generated))
                }),
                inner.clone().prop_map(|r| RingExpr::Opp(Box::new(r))),
                (inner, prop::collection::vec(label(), 0..3)).prop_map(|(r, g)| RingExpr::Sub(Box::new(r), g)),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_round_trips(e in expr()) {
            let text = e.to_string();
            prop_assert_eq!(parse_ring_expr(&text).unwrap(), e.clone());
            let spaced = text.replace(',', " , ").replace('(', " ( ");
            prop_assert_eq!(parse_ring_expr(&spaced).unwrap(), e);
        }
    }
}
