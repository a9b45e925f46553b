//! Weyl transformation brackets `<U|T>_q` between the two reductions, and
//! q-Racah coefficients.
//!
//! Both are a square root times a finite alternating sum. Sum bounds are
//! never written down: every integer index is visited over a generous window
//! and summands with a negative factorial in a denominator drop out through
//! [`qfact_inv`].

use std::fmt;
use std::str::FromStr;

use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::qarith::{factorial_ratio, qfact, qfact_inv, qnum, EvalContext, Scalar, SignedRadical};
use crate::repspace::{t_weight_space, u_weight_space, BasisLabel, Signature, TBasisLabel, UBasisLabel, Weight};

/// `sqrt(pref) * sum` as a signed radical.
fn radical_times_sum(sign: i8, pref: Scalar, sum: &Scalar) -> Result<SignedRadical> {
    SignedRadical::new(sign * sum.signum(), 0, &pref * &sum.square())
}

/// Sum of `sign(n) * prod [num_i(n)]! * prod 1/[den_j(n)]!` over a window of
/// integers, denominators evaluated first so pruned terms never touch a
/// negative numerator factorial.
fn pruned_sum<FN, FD, FS>(window: i64, ctx: &EvalContext, num: FN, den: FD, sign: FS) -> Result<Scalar>
where
    FN: Fn(i64) -> Vec<i64>,
    FD: Fn(i64) -> Vec<i64>,
    FS: Fn(i64) -> bool,
{
    let mut acc = ctx.zero();
    for n in -window..=window {
        let mut term = ctx.one();
        let mut pruned = false;
        for d in den(n) {
            let inv = qfact_inv(d, ctx);
            if inv.is_zero() {
                pruned = true;
                break;
            }
            term = term * inv;
        }
        if pruned {
            continue;
        }
        for a in num(n) {
            term = term * qfact(a, ctx)?;
        }
        acc = if sign(n) { acc - term } else { acc + term };
    }
    Ok(acc)
}

fn int(h: HalfInt) -> i64 {
    h.to_int().expect("integral combination of labels")
}

fn check_pair(sig: &Signature, u: &UBasisLabel, t: &TBasisLabel) -> Result<()> {
    let wu = u.weight(sig)?;
    let wt = t.weight(sig)?;
    if wu != wt {
        return Err(Error::WeightMismatch { u: format!("{u} {wu}"), t: format!("{t} {wt}") });
    }
    Ok(())
}

fn weyl_prefactor(sig: &Signature, u: &UBasisLabel, t: &TBasisLabel, ctx: &EvalContext) -> Result<Scalar> {
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    let (k, l, s, p) = (u.k, u.l, t.s, t.p);
    let (uu, mu, tt, m) = (u.u, u.m, t.t, t.m);
    let facts = factorial_ratio(
        &[
            k,
            int(m - tt) - 1,
            int(uu + mu),
            int(tt + m),
            f1 - f2 - k,
            f1 - f2 + l + 1,
            f2 - f3 + s - 2,
            f2 - f3 + p - 2,
        ],
        &[
            s,
            p,
            l,
            int(uu - mu),
            f1 - f3 + s - 1,
            f1 - f2 - p,
            f2 - f3 + k - 2,
            f1 - f3 + l - 1,
        ],
        ctx,
    )?;
    Ok(qnum(uu.twice() + 1, ctx) * qnum(tt.twice() + 1, ctx) * facts)
}

fn window(sig: &Signature, u: &UBasisLabel, t: &TBasisLabel) -> i64 {
    [sig.f1(), sig.f2(), sig.f3(), u.k, u.l, u.u.twice(), t.s, t.p, t.t.twice()]
        .iter()
        .map(|x| x.abs())
        .sum::<i64>()
        + 2
}

/// Weyl coefficient `<k ℓ U M_U | s p T M>_q` between two labels of the same
/// weight, summed over `n`.
pub fn weyl_coefficient(
    sig: &Signature,
    u: &UBasisLabel,
    t: &TBasisLabel,
    ctx: &EvalContext,
) -> Result<SignedRadical> {
    check_pair(sig, u, t)?;
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    let (k, l, s, p) = (u.k, u.l, t.s, t.p);
    let d = int(u.u - u.m);
    let two_u = u.u.twice();
    let pref = weyl_prefactor(sig, u, t, ctx)?;
    let sum = pruned_sum(
        window(sig, u, t),
        ctx,
        |n| vec![d + k - n, l + k - n, f1 - f3 + l + k - n - 1],
        |n| vec![n, k - n, two_u + 1 + k - n, l - s + k - n, f2 - f3 + p + l + k - n - 1],
        |n| (k + n) % 2 != 0,
    )?;
    radical_times_sum(1, pref, &sum)
}

/// The same coefficient summed over `r = k - n`.
pub fn weyl_coefficient_r_sum(
    sig: &Signature,
    u: &UBasisLabel,
    t: &TBasisLabel,
    ctx: &EvalContext,
) -> Result<SignedRadical> {
    check_pair(sig, u, t)?;
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    let (k, l, s, p) = (u.k, u.l, t.s, t.p);
    let d = int(u.u - u.m);
    let two_u = u.u.twice();
    let pref = weyl_prefactor(sig, u, t, ctx)?;
    let sum = pruned_sum(
        window(sig, u, t),
        ctx,
        |r| vec![d + r, l + r, f1 - f3 + l + r - 1],
        |r| vec![k - r, r, two_u + 1 + r, l - s + r, f2 - f3 + p + l + r - 1],
        |r| r % 2 != 0,
    )?;
    radical_times_sum(1, pref, &sum)
}

/// Transformation matrix between the two bases on one weight space.
/// Rows are U-basis labels, columns T-basis labels, both in canonical order.
#[derive(Clone, Debug)]
pub struct WeylBlock {
    pub sig: Signature,
    pub weight: Weight,
    pub rows: Vec<UBasisLabel>,
    pub cols: Vec<TBasisLabel>,
    pub entries: Vec<Vec<SignedRadical>>,
}

impl WeylBlock {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn to_float(&self, ctx: &EvalContext) -> Vec<Vec<Float>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_float(ctx)).collect())
            .collect()
    }

    /// Largest entry of `|B^T B - I|` and `|B B^T - I|`.
    pub fn orthogonality_residual(&self, ctx: &EvalContext) -> f64 {
        let b = self.to_float(ctx);
        let n = b.len();
        let prec = ctx.prec();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut btb = Float::new(prec);
                let mut bbt = Float::new(prec);
                for r in 0..n {
                    btb += Float::with_val(prec, &b[r][i] * &b[r][j]);
                    bbt += Float::with_val(prec, &b[i][r] * &b[j][r]);
                }
                if i == j {
                    btb -= 1;
                    bbt -= 1;
                }
                worst = worst.max(btb.abs().to_f64()).max(bbt.abs().to_f64());
            }
        }
        worst
    }
}

/// The full Weyl block of a weight. Weight spaces are finite, so the block
/// is always complete.
pub fn weyl_block(sig: &Signature, weight: &Weight, ctx: &EvalContext) -> Result<WeylBlock> {
    let rows = u_weight_space(sig, weight);
    let cols = t_weight_space(sig, weight);
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::EmptyWeightSpace(weight.to_string()));
    }
    let entries = rows
        .iter()
        .map(|u| cols.iter().map(|t| weyl_coefficient(sig, u, t, ctx)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(WeylBlock { sig: *sig, weight: *weight, rows, cols, entries })
}

/// Arguments of `U_q(a b e d; c f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RacahArgs {
    pub a: HalfInt,
    pub b: HalfInt,
    pub c: HalfInt,
    pub d: HalfInt,
    pub e: HalfInt,
    pub f: HalfInt,
}

impl RacahArgs {
    pub fn new(a: HalfInt, b: HalfInt, c: HalfInt, d: HalfInt, e: HalfInt, f: HalfInt) -> Self {
        RacahArgs { a, b, c, d, e, f }
    }

    /// Convenience constructor from doubled values.
    pub fn from_twice(v: [i64; 6]) -> Self {
        let h = HalfInt::from_twice;
        RacahArgs::new(h(v[0]), h(v[1]), h(v[2]), h(v[3]), h(v[4]), h(v[5]))
    }

    /// The sixteen factorial arguments of the prefactor, in half units.
    fn twice_triangle_args(&self) -> [i64; 16] {
        let RacahArgs { a, b, c, d, e, f } = *self;
        let t = |h: HalfInt| h.twice();
        let one = 2;
        [
            t(a) + t(b) + t(c) + one,
            t(b) + t(d) + t(f) + one,
            t(a) - t(b) + t(c),
            -t(a) + t(b) + t(c),
            t(a) + t(e) - t(f),
            t(b) - t(d) + t(f),
            -t(b) + t(d) + t(f),
            -t(c) + t(d) + t(e),
            t(a) + t(e) + t(f) + one,
            t(c) + t(d) + t(e) + one,
            t(a) + t(b) - t(c),
            t(a) - t(e) + t(f),
            t(b) + t(d) - t(f),
            t(c) + t(d) - t(e),
            t(c) - t(d) + t(e),
            -t(a) + t(e) + t(f),
        ]
    }

    /// Triads `(a b c)`, `(c d e)`, `(a e f)` and `(b d f)` all admissible.
    pub fn is_admissible(&self) -> bool {
        self.twice_triangle_args().iter().all(|x| *x >= 0 && x % 2 == 0)
    }
}

impl fmt::Display for RacahArgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "U(a={} b={} e={} d={}; c={} f={})",
            self.a, self.b, self.e, self.d, self.c, self.f
        )
    }
}

/// Accepts six half-integers `a,b,c,d,e,f` separated by commas.
impl FromStr for RacahArgs {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<HalfInt> = s.split(',').map(|x| x.parse()).collect::<Result<_>>()?;
        match v[..] {
            [a, b, c, d, e, f] => Ok(RacahArgs::new(a, b, c, d, e, f)),
            _ => Err(Error::InvalidParameter(format!("need six values a,b,c,d,e,f; got {s:?}"))),
        }
    }
}

/// q-Racah coefficient `U_q(a b e d; c f)`; zero outside the triangle
/// conditions.
pub fn qracah(args: &RacahArgs, ctx: &EvalContext) -> SignedRadical {
    if !args.is_admissible() {
        return SignedRadical::zero(ctx);
    }
    let RacahArgs { a, b, c, d, e, f } = *args;
    let tri: Vec<i64> = args.twice_triangle_args().iter().map(|x| x / 2).collect();
    let pref = factorial_ratio(&[tri[0], tri[1], tri[2], tri[3], tri[4], tri[5], tri[6], tri[7]], &tri[8..], ctx)
        .expect("admissible arguments are nonnegative")
        * qnum(c.twice() + 1, ctx)
        * qnum(f.twice() + 1, ctx);
    let phase = int(a + d - c - f);
    let two_b = b.twice();
    let bcef = int(b + c - e + f);
    let bcef1 = int(b + c + e + f) + 1;
    let abc = int(-a + b + c);
    let bdf = int(b - d + f);
    let abc1 = int(a + b + c) + 1;
    let bdf1 = int(b + d + f) + 1;
    let window = [a, b, c, d, e, f].iter().map(|h| h.twice().abs()).sum::<i64>() + 2;
    let sum = pruned_sum(
        window,
        ctx,
        |n| vec![two_b - n, bcef - n, bcef1 - n],
        |n| vec![n, abc - n, bdf - n, abc1 - n, bdf1 - n],
        |n| n % 2 != 0,
    )
    .expect("pruned numerators are nonnegative");
    let sign = if phase % 2 == 0 { 1 } else { -1 };
    radical_times_sum(sign, pref, &sum).expect("radicand is a square times a positive prefactor")
}

/// Racah arguments attached to a pair of labels `(k, ℓ)` and `(s, p)` of the
/// same weight.
pub fn racah_args_from_rep(sig: &Signature, k: i64, l: i64, s: i64, p: i64) -> Result<RacahArgs> {
    let bad = |what: &str| Error::InconsistentLabels(format!("k={k} l={l} s={s} p={p}: {what}"));
    if k < 0 || k > sig.width() || p < 0 || p > sig.width() {
        return Err(bad("k and p must lie in 0..=f1-f2"));
    }
    if l < 0 || s < 0 {
        return Err(bad("l and s must be nonnegative"));
    }
    if s > l + k {
        return Err(bad("s <= k + l"));
    }
    let two_u = sig.width() - k + l;
    if !(0..=two_u).contains(&(p - s + l)) {
        return Err(bad("0 <= p - s + l <= 2U"));
    }
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    Ok(RacahArgs::from_twice([
        f2 - f3 + p + s - 2,
        l + k,
        f2 - f3 + p - s + l + k - 2,
        two_u,
        f1 - f3 - p + s - 2,
        f1 - f2,
    ]))
}

/// Both expressions of a Weyl coefficient through q-Racah coefficients.
#[derive(Clone, Debug)]
pub struct WeylViaRacah {
    pub args: RacahArgs,
    /// `(-1)^k U_q(e c f b; d a)`.
    pub first: SignedRadical,
    /// `(-1)^s sqrt([2U+1][2T+1]/([2c+1][2f+1])) U_q(a b e d; c f)`.
    pub second: SignedRadical,
}

pub fn weyl_via_racah(
    sig: &Signature,
    u: &UBasisLabel,
    t: &TBasisLabel,
    ctx: &EvalContext,
) -> Result<WeylViaRacah> {
    check_pair(sig, u, t)?;
    let args = racah_args_from_rep(sig, u.k, u.l, t.s, t.p)?;
    let RacahArgs { a, b, c, d, e, f } = args;

    let swapped = RacahArgs::new(e, c, d, b, f, a);
    let mut first = qracah(&swapped, ctx);
    if u.k % 2 != 0 {
        first = first.neg();
    }

    let ratio = (qnum(u.u.twice() + 1, ctx) * qnum(t.t.twice() + 1, ctx))
        .checked_div(&(qnum(c.twice() + 1, ctx) * qnum(f.twice() + 1, ctx)))?;
    let scale = SignedRadical::new(if t.s % 2 == 0 { 1 } else { -1 }, 0, ratio)?;
    let second = &scale * &qracah(&args, ctx);
    Ok(WeylViaRacah { args, first, second })
}
