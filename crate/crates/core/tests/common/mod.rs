//! Independent oracles shared by the integration tests and the acceptance
//! run. Nothing here calls into the library's Racah or Weyl code.

#![allow(dead_code)]

use std::collections::HashMap;

use rug::ops::Pow;
use rug::{Float, Rational};

pub const PREC: u32 = 320;

pub fn sig(f1: i64, f2: i64, f3: i64) -> uq21::repspace::Signature {
    uq21::repspace::Signature::new(f1, f2, f3).unwrap()
}

pub fn exact(n: i64, d: i64) -> uq21::EvalContext {
    uq21::EvalContext::exact(Rational::from((n, d))).unwrap()
}

/// `[x]` for `x = twice / 2`, straight from the definition.
fn qn(twice: i64, q: &Float) -> Float {
    let h: Float = Float::with_val(PREC, twice) / 2i32;
    if *q == 1 {
        return h;
    }
    let a = Float::with_val(PREC, q.pow(&h));
    let b = Float::with_val(PREC, q.pow(-h));
    let d = Float::with_val(PREC, q - q.clone().recip());
    (a - b) / d
}

/// `q^(twice/2)`.
fn qpow(twice: i64, q: &Float) -> Float {
    let h: Float = Float::with_val(PREC, twice) / 2i32;
    Float::with_val(PREC, q.pow(&h))
}

fn sqrt(x: Float) -> Float {
    x.sqrt()
}

/// Coupled vectors of `V_a (x) V_b -> V_c` with the coproduct
/// `J+- -> J+- (x) q^J0 + q^-J0 (x) J+-`, all spins doubled.
///
/// The highest vector solves `Delta(J+) v = 0` with a positive
/// `|a a> |b c-a>` component; lower ones follow from `Delta(J-)`.
/// Returns `(m_a, m_b, m_c) -> coefficient`.
pub fn q_clebsch(a: i64, b: i64, c: i64, q: &Float) -> HashMap<(i64, i64, i64), Float> {
    let mut out = HashMap::new();
    if c > a + b || c < (a - b).abs() || (a + b + c) % 2 != 0 {
        return out;
    }
    let mut v: Vec<(i64, i64, Float)> = Vec::new();
    let mut x = Float::with_val(PREC, 1);
    let mut alpha = a;
    loop {
        let beta = c - alpha;
        if beta > b || alpha < -a {
            break;
        }
        v.push((alpha, beta, x.clone()));
        // Step to alpha - 2 with beta + 2.
        let (na, nb) = (alpha - 2, beta + 2);
        if na < -a || nb > b {
            break;
        }
        // x_{na} [a-na][a+na+2] q^{nb} + x_alpha q^{-alpha} [b-nb+2][b+nb] = 0 (halves)
        let num = sqrt(qn(b - nb + 2, q) * qn(b + nb, q));
        let den = sqrt(qn(a - na, q) * qn(a + na + 2, q));
        x = -x * qpow(-alpha - nb, q) * num / den;
        alpha = na;
    }
    let norm = sqrt(v.iter().fold(Float::with_val(PREC, 0), |acc, (_, _, y)| acc + Float::with_val(PREC, y * y)));
    let mut cur: HashMap<(i64, i64), Float> = v.into_iter().map(|(al, be, y)| ((al, be), y / &norm)).collect();
    let mut m = c;
    loop {
        for ((al, be), y) in &cur {
            out.insert((*al, *be, m), y.clone());
        }
        if m == -c {
            break;
        }
        let mut next: HashMap<(i64, i64), Float> = HashMap::new();
        for ((al, be), y) in &cur {
            if *al > -a {
                let c1 = sqrt(qn(a + al, q) * qn(a - al + 2, q)) * qpow(*be, q);
                *next.entry((al - 2, *be)).or_insert_with(|| Float::with_val(PREC, 0)) += c1 * y;
            }
            if *be > -b {
                let c2 = sqrt(qn(b + be, q) * qn(b - be + 2, q)) * qpow(-al, q);
                *next.entry((*al, be - 2)).or_insert_with(|| Float::with_val(PREC, 0)) += c2 * y;
            }
        }
        let scale = sqrt(qn(c + m, q) * qn(c - m + 2, q));
        cur = next.into_iter().map(|(k, y)| (k, y / &scale)).collect();
        m -= 2;
    }
    out
}

/// Recoupling coefficient `<(ab)c, d; e | a, (bd)f; e>` by explicit
/// Clebsch-Gordan summation over the top weight of `e`. Doubled spins.
pub fn recoupling(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64, q: &Float) -> Float {
    let ab = q_clebsch(a, b, c, q);
    let cd = q_clebsch(c, d, e, q);
    let bd = q_clebsch(b, d, f, q);
    let af = q_clebsch(a, f, e, q);
    overlap(&ab, &cd, &bd, &af, e)
}

/// Doubled arguments `[a, b, c, d, e, f]` with every spin at most `max`,
/// in lexicographic order.
pub fn racah_grid(max_twice: i64) -> Vec<[i64; 6]> {
    let r: Vec<i64> = (0..=max_twice).collect();
    let mut out = Vec::new();
    for &a in &r {
        for &b in &r {
            for &c in &r {
                for &d in &r {
                    for &e in &r {
                        for &f in &r {
                            out.push([a, b, c, d, e, f]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Weights of the U basis by brute force over Gel'fand-Graev patterns with
/// top row `(f1-1, f2-1, f3+2)`, betweenness `m23+1 <= m22 <= m13+1`,
/// `m22 <= m11 <= m12`, and `m13+1 <= m12 <= f1 + l_max`.
pub fn brute_force_u_weights(s: &uq21::repspace::Signature, l_max: i64) -> Vec<(i64, i64, i64)> {
    let (m13, m23) = (s.f1() - 1, s.f2() - 1);
    let total = s.f1() + s.f2() + s.f3();
    let mut out = Vec::new();
    for m12 in (m13 + 1)..=(s.f1() + l_max) {
        for m22 in (m23 + 1)..=(m13 + 1) {
            for m11 in m22..=m12 {
                out.push((m11, m12 + m22 - m11, total - m12 - m22));
            }
        }
    }
    out.sort();
    out
}

/// [`recoupling`] with the Clebsch-Gordan tables cached for one `q`.
pub struct Recoupler {
    q: Float,
    cache: HashMap<(i64, i64, i64), HashMap<(i64, i64, i64), Float>>,
}

impl Recoupler {
    pub fn new(q: Float) -> Self {
        Recoupler { q, cache: HashMap::new() }
    }

    fn cg(&mut self, a: i64, b: i64, c: i64) -> HashMap<(i64, i64, i64), Float> {
        let q = self.q.clone();
        self.cache.entry((a, b, c)).or_insert_with(|| q_clebsch(a, b, c, &q)).clone()
    }

    pub fn value(&mut self, [a, b, c, d, e, f]: [i64; 6]) -> Float {
        let ab = self.cg(a, b, c);
        let cd = self.cg(c, d, e);
        let bd = self.cg(b, d, f);
        let af = self.cg(a, f, e);
        overlap(&ab, &cd, &bd, &af, e)
    }
}

type Cg = HashMap<(i64, i64, i64), Float>;

fn overlap(ab: &Cg, cd: &Cg, bd: &Cg, af: &Cg, e: i64) -> Float {
    let mut left: HashMap<(i64, i64, i64), Float> = HashMap::new();
    for ((g, dd, m), x) in cd {
        if *m != e {
            continue;
        }
        for ((al, be, gg), y) in ab {
            if gg == g {
                *left.entry((*al, *be, *dd)).or_insert_with(|| Float::with_val(PREC, 0)) += Float::with_val(PREC, x * y);
            }
        }
    }
    let mut acc = Float::with_val(PREC, 0);
    for ((al, ph, m), x) in af {
        if *m != e {
            continue;
        }
        for ((be, dd, pp), y) in bd {
            if pp == ph {
                if let Some(l) = left.get(&(*al, *be, *dd)) {
                    acc += Float::with_val(PREC, x * y) * l;
                }
            }
        }
    }
    acc
}
