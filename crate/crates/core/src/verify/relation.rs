//! Linear combinations of generator words, parsed from text.
//!
//! Grammar, with whitespace ignored:
//!
//! ```text
//! relation := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := number | 'q' | 'q^' int | 'Aij' | 'Aij^+' | '[' diag ']' ['^2']
//! diag     := linear combination of A11, A22, A33 and constants
//! ```
//!
//! Numbers are integers, `a/b` or decimals. `Aij^+` is the adjoint and
//! `[x]` the diagonal operator with entries `[x]` evaluated on each weight.
//! A relation states that the combination vanishes.

use std::fmt;

use rug::ops::Pow;
use rug::{Float, Rational};

use super::truncated::{axpy, SparseVec, TruncatedRep};
use crate::error::{Error, Result};
use crate::generators::{Gen, TableLabel};
use crate::qarith::{qnum_half_sq, EvalContext};
use crate::repspace::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Gen(Gen),
    Adjoint(Gen),
    /// `[x]` or `[x]^2` with `2x = c1 m1 + c2 m2 + c3 m3 + c0`.
    Diag { twice: [i64; 4], squared: bool },
}

#[derive(Clone, Debug, PartialEq)]
struct Term {
    number: Rational,
    qpower: i64,
    /// Leftmost operator first; applied right to left.
    ops: Vec<Op>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub source: String,
    terms: Vec<Term>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = 0", self.name, self.source)
    }
}

fn bad(src: &str, why: &str) -> Error {
    Error::InvalidParameter(format!("cannot parse relation {src:?}: {why}"))
}

/// Splits at top-level occurrences of the given separators, keeping them.
fn split_top(s: &str, seps: &[char]) -> Vec<(Option<char>, String)> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut lead = None;
    let chars: Vec<char> = s.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        // A sign right after '^' is an exponent, not a separator.
        let after_caret = i > 0 && chars[i - 1] == '^';
        if depth == 0 && seps.contains(&c) && !after_caret {
            if !cur.is_empty() || lead.is_some() {
                out.push((lead, std::mem::take(&mut cur)));
            }
            lead = Some(c);
        } else {
            cur.push(c);
        }
    }
    out.push((lead, cur));
    out
}

fn parse_number(tok: &str) -> Option<Rational> {
    if let Ok(r) = tok.parse::<Rational>() {
        return Some(r);
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if int.chars().all(|c| c.is_ascii_digit()) && frac.chars().all(|c| c.is_ascii_digit()) {
            let den = Rational::from(rug::Integer::from(10).pow(frac.len() as u32));
            let num: Rational = format!("{int}{frac}").parse().ok()?;
            return Some(num / den);
        }
    }
    None
}

fn parse_diag(body: &str, src: &str) -> Result<[i64; 4]> {
    let mut twice = [0i64; 4];
    for (sign, part) in split_top(body, &['+', '-']) {
        if part.is_empty() {
            if sign.is_some() {
                return Err(bad(src, "dangling sign in diagonal term"));
            }
            continue;
        }
        let s = if sign == Some('-') { -1 } else { 1 };
        let (coef, var) = match part.split_once('*') {
            Some((c, v)) => (parse_number(c).ok_or_else(|| bad(src, "bad coefficient"))?, Some(v)),
            None => match part.as_str() {
                "A11" | "A22" | "A33" => (Rational::from(1), Some(part.as_str())),
                _ => (parse_number(&part).ok_or_else(|| bad(src, "bad constant"))?, None),
            },
        };
        let two = Rational::from(&coef * 2);
        if *two.denom() != 1 {
            return Err(bad(src, "diagonal coefficients must be half-integers"));
        }
        let c = two.numer().to_i64().ok_or_else(|| bad(src, "coefficient too large"))? * s;
        let slot = match var {
            Some("A11") => 0,
            Some("A22") => 1,
            Some("A33") => 2,
            None => 3,
            Some(_) => return Err(bad(src, "only A11, A22, A33 may appear inside [..]")),
        };
        twice[slot] += c;
    }
    Ok(twice)
}

fn parse_term(text: &str, negative: bool, src: &str) -> Result<Term> {
    let mut term = Term { number: Rational::from(if negative { -1 } else { 1 }), qpower: 0, ops: Vec::new() };
    for (_, factor) in split_top(text, &['*']) {
        let f = factor.as_str();
        if f.is_empty() {
            return Err(bad(src, "empty factor"));
        }
        if f == "q" {
            term.qpower += 1;
        } else if let Some(e) = f.strip_prefix("q^") {
            term.qpower += e.parse::<i64>().map_err(|_| bad(src, "bad power of q"))?;
        } else if let Some(rest) = f.strip_prefix('[') {
            let (body, tail) = rest.split_once(']').ok_or_else(|| bad(src, "unclosed ["))?;
            let squared = match tail {
                "" => false,
                "^2" => true,
                _ => return Err(bad(src, "only ^2 may follow [..]")),
            };
            term.ops.push(Op::Diag { twice: parse_diag(body, src)?, squared });
        } else if f.starts_with('A') || f.starts_with('a') {
            let (name, adj) = match f.strip_suffix("^+") {
                Some(n) => (n, true),
                None => (f, false),
            };
            let g: Gen = name.parse().map_err(|_| bad(src, &format!("unknown generator {name}")))?;
            term.ops.push(if adj { Op::Adjoint(g) } else { Op::Gen(g) });
        } else {
            let r = parse_number(f).ok_or_else(|| bad(src, &format!("unknown factor {f:?}")))?;
            term.number *= r;
        }
    }
    Ok(term)
}

impl Relation {
    /// Parses a relation; words may contain at most two generators, the
    /// depth covered by interior columns.
    pub fn parse(name: impl Into<String>, src: &str) -> Result<Self> {
        let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad(src, "empty"));
        }
        let mut terms = Vec::new();
        for (sign, text) in split_top(&compact, &['+', '-']) {
            if text.is_empty() {
                if sign.is_none() {
                    continue;
                }
                return Err(bad(src, "dangling sign"));
            }
            let term = parse_term(&text, sign == Some('-'), src)?;
            let len = term.ops.iter().filter(|o| !matches!(o, Op::Diag { .. })).count();
            if len > 2 {
                return Err(bad(src, "words longer than two generators are not supported"));
            }
            terms.push(term);
        }
        Ok(Relation { name: name.into(), source: src.trim().to_string(), terms })
    }

    /// Parses `name: expression` lines; blank lines and `#` comments are
    /// skipped.
    pub fn parse_list(text: &str) -> Result<Vec<Relation>> {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .enumerate()
            .map(|(i, line)| match line.split_once(':') {
                Some((n, e)) => Relation::parse(n.trim(), e),
                None => Relation::parse(format!("relation {}", i + 1), line),
            })
            .collect()
    }

    /// Each term applied to `v`, paired with its coefficient.
    fn term_vectors<L: TableLabel>(&self, rep: &TruncatedRep<L>, v: &SparseVec) -> Vec<(Float, SparseVec)> {
        let ctx = rep.ctx();
        self.terms
            .iter()
            .map(|t| {
                let c = Float::with_val(ctx.prec(), &t.number) * ctx.qpow(t.qpower).to_float(ctx.prec());
                let mut x = v.clone();
                for op in t.ops.iter().rev() {
                    x = match op {
                        Op::Gen(g) => rep.apply(*g, &x),
                        Op::Adjoint(g) => rep.apply_adjoint(*g, &x),
                        Op::Diag { twice, squared } => {
                            rep.apply_diag(&x, |_, w| diag_value(twice, *squared, w, ctx))
                        }
                    };
                }
                (c, x)
            })
            .collect()
    }

    /// The combination applied to `v`, and the largest entry among its
    /// individual terms (the natural scale of the residual).
    pub fn apply<L: TableLabel>(&self, rep: &TruncatedRep<L>, v: &SparseVec) -> (SparseVec, f64) {
        let mut out = SparseVec::new();
        let mut scale = 0.0f64;
        for (c, x) in self.term_vectors(rep, v) {
            for y in x.values() {
                scale = scale.max(Float::with_val(c.prec(), &c * y).to_f64().abs());
            }
            axpy(&mut out, &c, &x);
        }
        (out, scale)
    }
}

fn diag_value(twice: &[i64; 4], squared: bool, w: &Weight, ctx: &EvalContext) -> Float {
    let t = twice[0] * w.m1 + twice[1] * w.m2 + twice[2] * w.m3 + twice[3];
    if squared {
        qnum_half_sq(t, ctx).to_float(ctx.prec())
    } else {
        qnum_half(t, ctx)
    }
}

/// `[x]` at half-integer `x = twice/2`, in floating point.
pub(crate) fn qnum_half(twice: i64, ctx: &EvalContext) -> Float {
    let prec = ctx.prec();
    if ctx.is_classical() {
        return Float::with_val(prec, twice) / 2;
    }
    let root = Float::with_val(prec, ctx.q_float().sqrt_ref());
    let up = Float::with_val(prec, rug::ops::Pow::pow(&root, twice as i32));
    let down = Float::with_val(prec, up.recip_ref());
    let den = Float::with_val(prec, ctx.q_float() - Float::with_val(prec, ctx.q_float().recip_ref()));
    Float::with_val(prec, &up - &down) / den
}
