//! q-numbers, q-factorials and the scalar types they live in.
//!
//! Two backends share one API. [`Mode::Exact`] keeps every value as a
//! rational number, which requires a rational deformation parameter `q`.
//! [`Mode::Float`] works with MPFR floats at a fixed working precision.
//! Square roots never appear in [`Scalar`]; matrix elements that need one are
//! carried as a [`SignedRadical`] whose radicand stays exact as long as the
//! context allows.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};

/// Working precision of float contexts unless told otherwise.
pub const DEFAULT_DIGITS: u32 = 50;

/// Binary precision used for `digits` significant decimal digits, with a
/// small guard.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

/// Deformation parameter plus evaluation backend.
///
/// Every context carries a float precision as well: exact results are
/// converted at that precision whenever a square root has to be taken.
#[derive(Clone, Debug)]
pub struct EvalContext {
    mode: Mode,
    q_exact: Option<Rational>,
    q: Float,
    digits: u32,
}

impl EvalContext {
    /// Exact rational arithmetic at rational `q > 0`.
    pub fn exact(q: Rational) -> Result<Self> {
        Self::exact_with_digits(q, DEFAULT_DIGITS)
    }

    pub fn exact_with_digits(q: Rational, digits: u32) -> Result<Self> {
        if q.cmp0() != Ordering::Greater {
            return Err(Error::InvalidParameter(format!("q must be positive, got {q}")));
        }
        check_digits(digits)?;
        let qf = Float::with_val(digits_to_bits(digits), &q);
        Ok(EvalContext {
            mode: Mode::Exact,
            q_exact: Some(q),
            q: qf,
            digits,
        })
    }

    /// Float arithmetic at `digits` significant digits.
    pub fn float(q: &Float, digits: u32) -> Result<Self> {
        check_digits(digits)?;
        if q.cmp0() != Some(Ordering::Greater) {
            return Err(Error::InvalidParameter(format!("q must be positive, got {q}")));
        }
        let q = Float::with_val(digits_to_bits(digits), q);
        let q_exact = q.to_rational().filter(|r| *r == 1);
        Ok(EvalContext {
            mode: Mode::Float,
            q_exact,
            q,
            digits,
        })
    }

    pub fn float_from_rational(q: &Rational, digits: u32) -> Result<Self> {
        check_digits(digits)?;
        Self::float(&Float::with_val(digits_to_bits(digits), q), digits)
    }

    /// Parses `q` as `a/b`, an integer, or a decimal. Decimals imply float
    /// mode; `a/b` and integers honor the requested mode.
    pub fn parse(q: &str, mode: Mode, digits: u32) -> Result<Self> {
        let q = q.trim();
        let bad = || Error::InvalidParameter(format!("cannot parse q = {q:?}"));
        let is_decimal = q.contains(['.', 'e', 'E']);
        if is_decimal {
            let parsed = Float::parse(q).map_err(|_| bad())?;
            let value = Float::with_val(digits_to_bits(digits.max(1)), parsed);
            return Self::float(&value, digits);
        }
        let r: Rational = q.parse().map_err(|_| bad())?;
        match mode {
            Mode::Exact => Self::exact_with_digits(r, digits),
            Mode::Float => Self::float_from_rational(&r, digits),
        }
    }

    /// The same `q` and precision, evaluated in float mode.
    pub fn to_float_mode(&self) -> EvalContext {
        EvalContext {
            mode: Mode::Float,
            q_exact: self.q_exact.clone().filter(|r| *r == 1),
            q: self.q.clone(),
            digits: self.digits,
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == Mode::Exact
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn prec(&self) -> u32 {
        digits_to_bits(self.digits)
    }

    pub fn q_float(&self) -> &Float {
        &self.q
    }

    pub fn q_rational(&self) -> Option<&Rational> {
        self.q_exact.as_ref()
    }

    /// True when `q` is exactly one, the classical limit.
    pub fn is_classical(&self) -> bool {
        match &self.q_exact {
            Some(r) => *r == 1,
            None => self.q == 1,
        }
    }

    /// `q` rendered for reports: exact value when known, else the float.
    pub fn q_display(&self) -> String {
        match (&self.mode, &self.q_exact) {
            (Mode::Exact, Some(r)) => r.to_string(),
            _ => format_float(&self.q, self.digits),
        }
    }

    fn int(&self, n: i64) -> Scalar {
        match self.mode {
            Mode::Exact => Scalar::Exact(Rational::from(n)),
            Mode::Float => Scalar::Float(Float::with_val(self.prec(), n)),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.int(n)
    }

    /// `q^w`.
    pub fn qpow(&self, w: i64) -> Scalar {
        let w = i32::try_from(w).expect("q exponent out of range");
        match (self.mode, &self.q_exact) {
            (Mode::Exact, Some(q)) => Scalar::Exact(Rational::from(q.pow(w))),
            _ => Scalar::Float(Float::with_val(self.prec(), (&self.q).pow(w))),
        }
    }
}

fn check_digits(digits: u32) -> Result<()> {
    if (5..=10_000).contains(&digits) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "precision must be between 5 and 10000 digits, got {digits}"
        )))
    }
}

/// Renders `x` with `digits` significant digits, rounded to nearest.
pub fn format_float(x: &Float, digits: u32) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits as usize))
}

/// A value of a q-expression: exact rational or high-precision float.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(Float),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.cmp0() == Ordering::Equal,
            Scalar::Float(f) => f.is_zero(),
        }
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        let ord = match self {
            Scalar::Exact(r) => r.cmp0(),
            Scalar::Float(f) => f.cmp0().unwrap_or(Ordering::Equal),
        };
        match ord {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_float(&self, prec: u32) -> Float {
        match self {
            Scalar::Exact(r) => Float::with_val(prec, r),
            Scalar::Float(f) => Float::with_val(prec, f),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64(),
            Scalar::Float(f) => f.to_f64(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(Rational::from(r.abs_ref())),
            Scalar::Float(f) => Scalar::Float(Float::with_val(f.prec(), f.abs_ref())),
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// Float square root; negative input yields NaN.
    pub fn sqrt(&self, prec: u32) -> Float {
        let x = self.to_float(prec);
        Float::with_val(prec, x.sqrt_ref())
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ConstraintViolation("division by zero".into()));
        }
        Ok(match self {
            Scalar::Exact(r) => Scalar::Exact(Rational::from(r.recip_ref())),
            Scalar::Float(f) => Scalar::Float(Float::with_val(f.prec(), f.recip_ref())),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.recip()?)
    }

    pub fn render(&self, digits: u32) -> String {
        match self {
            Scalar::Exact(r) => r.to_string(),
            Scalar::Float(f) => format_float(f, digits),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{}", format_float(x, DEFAULT_DIGITS)),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(Rational::from(a $op b)),
                    (Scalar::Float(a), Scalar::Float(b)) => {
                        Scalar::Float(Float::with_val(a.prec().max(b.prec()), a $op b))
                    }
                    (Scalar::Exact(a), Scalar::Float(b)) => {
                        let a = Float::with_val(b.prec(), a);
                        Scalar::Float(Float::with_val(b.prec(), &a $op b))
                    }
                    (Scalar::Float(a), Scalar::Exact(b)) => {
                        let b = Float::with_val(a.prec(), b);
                        Scalar::Float(Float::with_val(a.prec(), a $op &b))
                    }
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

/// Panics on a zero divisor; use [`Scalar::checked_div`] when that can happen.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(Rational::from(-r)),
            Scalar::Float(f) => Scalar::Float(Float::with_val(f.prec(), -f)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// `[n] = (q^n - q^-n) / (q - q^-1)`, and `n` itself at `q = 1`.
pub fn qnum(n: i64, ctx: &EvalContext) -> Scalar {
    if n == 0 {
        return ctx.zero();
    }
    if ctx.is_classical() {
        return ctx.scalar(n);
    }
    let num = ctx.qpow(n) - ctx.qpow(-n);
    let den = ctx.qpow(1) - ctx.qpow(-1);
    &num / &den
}

/// `[n]! = [n][n-1]...[1]`, `[0]! = 1`.
pub fn qfact(n: i64, ctx: &EvalContext) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(ctx.one(), |acc, i| acc * qnum(i, ctx)))
}

/// `1/[n]!`, and exactly zero for negative `n`.
///
/// Summands with a negative factorial in a denominator vanish through this
/// convention, which is what bounds every finite sum in the crate.
pub fn qfact_inv(n: i64, ctx: &EvalContext) -> Scalar {
    match qfact(n, ctx) {
        Ok(f) => f.recip().expect("q-factorial of a nonnegative integer is nonzero for q > 0"),
        Err(_) => ctx.zero(),
    }
}

/// `[x]^2` for half-integer `x = twice/2`.
///
/// Written as `(q^{2x} + q^{-2x} - 2) / (q - q^-1)^2`, so it stays rational
/// at rational `q` even when `x` is not an integer.
pub fn qnum_half_sq(twice: i64, ctx: &EvalContext) -> Scalar {
    if ctx.is_classical() {
        return match ctx.mode() {
            Mode::Exact => Scalar::Exact(Rational::from((twice * twice, 4))),
            Mode::Float => Scalar::Float(Float::with_val(ctx.prec(), twice * twice) / 4),
        };
    }
    let num = ctx.qpow(twice) + ctx.qpow(-twice) - ctx.scalar(2);
    let den = (ctx.qpow(1) - ctx.qpow(-1)).square();
    &num / &den
}

/// Product of q-factorials `prod [num_i]! / prod [den_j]!`.
///
/// Any negative argument is a [`Error::ConstraintViolation`] naming the
/// offending factor: in closed-form norms it means the label does not exist.
pub fn factorial_ratio(num: &[i64], den: &[i64], ctx: &EvalContext) -> Result<Scalar> {
    let mut acc = ctx.one();
    for &n in num {
        acc = acc * qfact(n, ctx).map_err(|_| negative_arg(n))?;
    }
    for &n in den {
        let f = qfact(n, ctx).map_err(|_| negative_arg(n))?;
        acc = acc.checked_div(&f)?;
    }
    Ok(acc)
}

fn negative_arg(n: i64) -> Error {
    Error::ConstraintViolation(format!("q-factorial argument {n} is negative"))
}

/// `sign * q^qpower * sqrt(radicand)` with a nonnegative radicand.
///
/// The natural value class for generator matrix elements and for Weyl and
/// Racah coefficients. Closed under multiplication and division; sums need a
/// float conversion first.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedRadical {
    sign: i8,
    qpower: i64,
    radicand: Scalar,
}

impl SignedRadical {
    pub fn new(sign: i8, qpower: i64, radicand: Scalar) -> Result<Self> {
        if radicand.signum() < 0 {
            return Err(Error::ConstraintViolation(format!(
                "negative radicand {radicand}"
            )));
        }
        if radicand.is_zero() || sign == 0 {
            return Ok(SignedRadical {
                sign: 0,
                qpower: 0,
                radicand: &radicand - &radicand,
            });
        }
        Ok(SignedRadical {
            sign: sign.signum(),
            qpower,
            radicand,
        })
    }

    pub fn zero(ctx: &EvalContext) -> Self {
        SignedRadical {
            sign: 0,
            qpower: 0,
            radicand: ctx.zero(),
        }
    }

    pub fn one(ctx: &EvalContext) -> Self {
        SignedRadical {
            sign: 1,
            qpower: 0,
            radicand: ctx.one(),
        }
    }

    /// `x` written as `sign(x) * sqrt(x^2)`.
    pub fn from_scalar(x: &Scalar) -> Self {
        SignedRadical {
            sign: x.signum(),
            qpower: 0,
            radicand: x.square(),
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn qpower(&self) -> i64 {
        self.qpower
    }

    pub fn radicand(&self) -> &Scalar {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_exact(&self) -> bool {
        self.radicand.is_exact()
    }

    /// `sign * q^{qpower} * sqrt(radicand)` at the context precision.
    pub fn to_float(&self, ctx: &EvalContext) -> Float {
        let prec = ctx.prec();
        if self.sign == 0 {
            return Float::new(prec);
        }
        let root = self.radicand.sqrt(prec);
        let scaled = Float::with_val(prec, &root * &ctx.qpow(self.qpower).to_float(prec));
        if self.sign < 0 {
            -scaled
        } else {
            scaled
        }
    }

    pub fn value(&self, ctx: &EvalContext) -> Scalar {
        Scalar::Float(self.to_float(ctx))
    }

    /// The square `q^{2 qpower} * radicand`, exact whenever the radicand is.
    pub fn squared(&self, ctx: &EvalContext) -> Scalar {
        &ctx.qpow(2 * self.qpower) * &self.radicand
    }

    /// Signed square `sign * |value|^2`; a faithful exact fingerprint.
    pub fn signed_square(&self, ctx: &EvalContext) -> Scalar {
        let sq = self.squared(ctx);
        if self.sign < 0 {
            -sq
        } else {
            sq
        }
    }

    pub fn neg(&self) -> Self {
        SignedRadical {
            sign: -self.sign,
            ..self.clone()
        }
    }

    pub fn checked_div(&self, rhs: &SignedRadical) -> Result<SignedRadical> {
        if rhs.is_zero() {
            return Err(Error::ConstraintViolation("division by zero radical".into()));
        }
        SignedRadical::new(
            self.sign * rhs.sign,
            self.qpower - rhs.qpower,
            self.radicand.checked_div(&rhs.radicand)?,
        )
    }

    /// Exact equality of values, comparing signed squares.
    pub fn same_value(&self, other: &SignedRadical, ctx: &EvalContext) -> bool {
        self.signed_square(ctx) == other.signed_square(ctx)
    }
}

impl Mul<&SignedRadical> for &SignedRadical {
    type Output = SignedRadical;
    fn mul(self, rhs: &SignedRadical) -> SignedRadical {
        if self.is_zero() || rhs.is_zero() {
            return SignedRadical {
                sign: 0,
                qpower: 0,
                radicand: &self.radicand * &rhs.radicand,
            };
        }
        SignedRadical {
            sign: self.sign * rhs.sign,
            qpower: self.qpower + rhs.qpower,
            radicand: &self.radicand * &rhs.radicand,
        }
    }
}

impl fmt::Display for SignedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        if self.qpower != 0 {
            write!(f, "q^{}*", self.qpower)?;
        }
        write!(f, "sqrt({})", self.radicand)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(q: (i64, i64)) -> EvalContext {
        EvalContext::exact(Rational::from(q)).unwrap()
    }

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::Exact(Rational::from((n, d)))
    }

    #[test]
    fn qnum_values() {
        assert_eq!(qnum(0, &exact((2, 1))), rat(0, 1));
        assert_eq!(qnum(0, &exact((1, 1))), rat(0, 1));
        assert_eq!(qnum(7, &exact((1, 1))), rat(7, 1));
        assert_eq!(qnum(3, &exact((2, 1))), rat(21, 4));
        assert_eq!(qnum(-3, &exact((2, 1))), rat(-21, 4));
    }

    #[test]
    fn qfact_values() {
        let ctx = exact((2, 1));
        assert_eq!(qfact(0, &ctx).unwrap(), rat(1, 1));
        assert_eq!(qfact(2, &ctx).unwrap(), rat(5, 2));
        assert_eq!(qfact(3, &exact((1, 1))).unwrap(), rat(6, 1));
        assert_eq!(qfact(-1, &ctx), Err(Error::NegativeFactorial(-1)));
    }

    #[test]
    fn qfact_inv_values() {
        let ctx = exact((1, 1));
        assert_eq!(qfact_inv(-1, &ctx), rat(0, 1));
        assert_eq!(qfact_inv(0, &ctx), rat(1, 1));
        assert_eq!(qfact_inv(3, &ctx), rat(1, 6));
    }

    #[test]
    fn half_square_matches_integer_square() {
        let ctx = exact((3, 2));
        for n in -4..=6 {
            assert_eq!(qnum_half_sq(2 * n, &ctx), qnum(n, &ctx).square());
        }
        assert_eq!(qnum_half_sq(1, &exact((1, 1))), rat(1, 4));
    }

    #[test]
    fn factorial_ratio_names_negative_argument() {
        let ctx = exact((2, 1));
        let err = factorial_ratio(&[3], &[-2], &ctx).unwrap_err();
        assert!(err.to_string().contains("-2"));
    }

    #[test]
    fn radical_invariants() {
        let ctx = exact((2, 1));
        assert!(SignedRadical::new(1, 0, rat(-1, 2)).is_err());
        let z = SignedRadical::new(-1, 3, rat(0, 1)).unwrap();
        assert_eq!(z.sign(), 0);
        let a = SignedRadical::new(-1, 2, rat(9, 4)).unwrap();
        assert_eq!(a.to_float(&ctx), -6.0);
        let b = SignedRadical::new(1, -1, rat(4, 1)).unwrap();
        let ab = &a * &b;
        assert_eq!(ab.to_float(&ctx), -6.0);
        assert!(ab.checked_div(&b).unwrap().same_value(&a, &ctx));
    }

    #[test]
    fn parse_contexts() {
        let c = EvalContext::parse("13/10", Mode::Exact, 50).unwrap();
        assert!(c.is_exact());
        let c = EvalContext::parse("1.3", Mode::Exact, 30).unwrap();
        assert_eq!(c.mode(), Mode::Float);
        assert!(EvalContext::parse("-2", Mode::Exact, 50).is_err());
        assert!(EvalContext::parse("0", Mode::Float, 50).is_err());
        assert!(EvalContext::parse("1", Mode::Float, 50).unwrap().is_classical());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn q_strategy() -> impl Strategy<Value = Rational> {
            (1i64..40, 1i64..40).prop_map(|(a, b)| Rational::from((a, b)))
        }

        proptest! {
            #[test]
            fn qnum_is_odd(n in -30i64..30, q in q_strategy()) {
                let ctx = EvalContext::exact(q).unwrap();
                prop_assert_eq!(qnum(-n, &ctx), -qnum(n, &ctx));
            }

            #[test]
            fn qnum_inverts_q(n in -30i64..30, q in q_strategy()) {
                let inv = Rational::from(q.recip_ref());
                let a = qnum(n, &EvalContext::exact(q).unwrap());
                let b = qnum(n, &EvalContext::exact(inv).unwrap());
                prop_assert_eq!(a, b);
            }

            #[test]
            fn exact_and_float_agree(n in -25i64..25, q in q_strategy()) {
                let ex = EvalContext::exact(q.clone()).unwrap();
                let fl = EvalContext::float_from_rational(&q, 50).unwrap();
                let a = qnum(n, &ex).to_float(ex.prec());
                let b = qnum(n, &fl).to_float(ex.prec());
                let scale = Float::with_val(ex.prec(), a.abs_ref()).max(&Float::with_val(ex.prec(), 1));
                let rel = Float::with_val(ex.prec(), &a - &b) / scale;
                prop_assert!(rel.abs().to_f64() < 1e-45);
                let fa = qfact(n.abs() % 12, &ex).unwrap().to_float(ex.prec());
                let fb = qfact(n.abs() % 12, &fl).unwrap().to_float(ex.prec());
                let rel = Float::with_val(ex.prec(), &fa - &fb) / fa;
                prop_assert!(rel.abs().to_f64() < 1e-45);
            }

            #[test]
            fn radical_product_matches_float_product(
                s1 in prop::sample::select(vec![-1i8, 1]),
                s2 in prop::sample::select(vec![-1i8, 1]),
                w1 in -4i64..4, w2 in -4i64..4,
                r1 in 1i64..500, r2 in 1i64..500,
                q in q_strategy(),
            ) {
                let ctx = EvalContext::exact(q).unwrap();
                let a = SignedRadical::new(s1, w1, Scalar::Exact(Rational::from((r1, 7)))).unwrap();
                let b = SignedRadical::new(s2, w2, Scalar::Exact(Rational::from((r2, 3)))).unwrap();
                let prod = (&a * &b).to_float(&ctx);
                let direct = Float::with_val(ctx.prec(), &a.to_float(&ctx) * &b.to_float(&ctx));
                let rel = Float::with_val(ctx.prec(), &prod - &direct) / direct;
                prop_assert!(rel.abs().to_f64() < 1e-45);
            }
        }
    }
}
