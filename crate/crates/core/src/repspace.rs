//! Signatures, basis labels in both reductions, weights and Gel'fand-Graev
//! patterns.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Lowest weight `(f1, f2, f3)` of a positive discrete series representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    f1: i64,
    f2: i64,
    f3: i64,
}

impl Signature {
    pub fn new(f1: i64, f2: i64, f3: i64) -> Result<Self> {
        let bad = |violated| Error::InvalidSignature { f1, f2, f3, violated };
        if f1 < f2 {
            return Err(bad("f1 >= f2"));
        }
        if f1 - f3 < 1 {
            return Err(bad("f1 - f3 >= 1"));
        }
        if f2 - f3 < 2 {
            return Err(bad("f2 - f3 >= 2"));
        }
        Ok(Signature { f1, f2, f3 })
    }

    pub fn f1(&self) -> i64 {
        self.f1
    }

    pub fn f2(&self) -> i64 {
        self.f2
    }

    pub fn f3(&self) -> i64 {
        self.f3
    }

    /// `f1 - f2`, the range of `k` and `p`.
    pub fn width(&self) -> i64 {
        self.f1 - self.f2
    }

    pub fn lowest_weight(&self) -> Weight {
        Weight::new(self.f1, self.f2, self.f3)
    }

    pub fn series(&self) -> SeriesClass {
        classify(self)
    }

    /// U-spin of the lowest vector, `(f1 - f2)/2`.
    pub fn lowest_u(&self) -> HalfInt {
        HalfInt::from_twice(self.width())
    }

    /// T-spin of the lowest vector, `(f2 - f3 - 2)/2`.
    pub fn lowest_t(&self) -> HalfInt {
        HalfInt::from_twice(self.f2 - self.f3 - 2)
    }

    pub fn lowest_u_label(&self) -> UBasisLabel {
        let u = self.lowest_u();
        UBasisLabel { l: 0, k: 0, m: u, u }
    }

    pub fn lowest_t_label(&self) -> TBasisLabel {
        let t = self.lowest_t();
        TBasisLabel { s: 0, p: 0, m: t + HalfInt::ONE, t }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.f1, self.f2, self.f3)
    }
}

/// Accepts `f1,f2,f3`, optionally parenthesized.
impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("signature must be f1,f2,f3; got {s:?}"));
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> = body
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match parts[..] {
            [f1, f2, f3] => Signature::new(f1, f2, f3),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesClass {
    Standard,
    /// Gel'fand-Graev top row `{m13, m33 - 1, m33}`.
    NonstandardEdge,
    /// `f1 = f2`, top row `{m23 - 2, m23 - 2, m23}` up to a common shift.
    NonstandardEqual,
}

impl fmt::Display for SeriesClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesClass::Standard => "standard",
            SeriesClass::NonstandardEdge => "nonstandard-edge",
            SeriesClass::NonstandardEqual => "nonstandard-equal",
        };
        f.write_str(s)
    }
}

/// Series of a valid signature.
///
/// `f1 = f2` takes precedence; otherwise the edge series is `f2 - f3 = 2`
/// (`m23 = m33 - 1`). The `m33 >= 0` bound of the standard pattern rules is
/// not used: it moves with the central shift of all three `f_i`.
pub fn classify(sig: &Signature) -> SeriesClass {
    if sig.f1 == sig.f2 {
        SeriesClass::NonstandardEqual
    } else if sig.f2 - sig.f3 == 2 {
        SeriesClass::NonstandardEdge
    } else {
        SeriesClass::Standard
    }
}

/// Validates `(f1, f2, f3)` and classifies it.
pub fn classify_raw(f1: i64, f2: i64, f3: i64) -> Result<SeriesClass> {
    Signature::new(f1, f2, f3).map(|s| classify(&s))
}

/// Eigenvalues `(m1, m2, m3)` of the diagonal generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight {
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
}

impl Weight {
    pub fn new(m1: i64, m2: i64, m3: i64) -> Self {
        Weight { m1, m2, m3 }
    }

    /// Number of raising steps above the lowest weight, `f3 - m3`.
    pub fn level(&self, sig: &Signature) -> i64 {
        sig.f3 - self.m3
    }

    pub fn component(&self, i: usize) -> i64 {
        match i {
            1 => self.m1,
            2 => self.m2,
            3 => self.m3,
            _ => panic!("weight component {i} out of range"),
        }
    }

    /// The weight moved by `+1` on component `i` and `-1` on `j`.
    pub fn shifted(&self, i: usize, j: usize) -> Weight {
        let mut m = [self.m1, self.m2, self.m3];
        m[i - 1] += 1;
        m[j - 1] -= 1;
        Weight::new(m[0], m[1], m[2])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m1, self.m2, self.m3)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("weight must be m1,m2,m3; got {s:?}"));
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> = body
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match parts[..] {
            [m1, m2, m3] => Ok(Weight::new(m1, m2, m3)),
            _ => Err(bad()),
        }
    }
}

/// Explicit window onto the infinite-dimensional representation.
///
/// The U basis is cut at `ℓ <= l_max`; the T basis at `s <= s_max` and
/// `M - T - 1 <= depth`. Negative bounds give empty bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Truncation {
    pub l_max: i64,
    pub s_max: i64,
    pub depth: i64,
}

impl Truncation {
    pub fn new(l_max: i64, s_max: i64, depth: i64) -> Self {
        Truncation { l_max, s_max, depth }
    }

    pub fn uniform(n: i64) -> Self {
        Truncation::new(n, n, n)
    }

    /// Highest level whose weight spaces are complete in both bases.
    pub fn complete_level(&self) -> i64 {
        self.l_max.min(self.s_max).min(self.depth)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisKind {
    U,
    T,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::U => "u",
            BasisKind::T => "t",
        })
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "u" => Ok(BasisKind::U),
            "t" => Ok(BasisKind::T),
            _ => Err(Error::InvalidParameter(format!("basis must be u or t, got {s:?}"))),
        }
    }
}

/// Vector `(k, ℓ, U, M_U)` of the U-spin reduction.
///
/// Field order gives the canonical ordering `(ℓ, k, M_U)`; `U` is fixed by
/// `k` and `ℓ` for a given signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UBasisLabel {
    pub l: i64,
    pub k: i64,
    pub m: HalfInt,
    pub u: HalfInt,
}

impl UBasisLabel {
    /// Builds the label with `U = (f1 - f2 - k + ℓ)/2` and validates it.
    pub fn new(sig: &Signature, k: i64, l: i64, m: HalfInt) -> Result<Self> {
        let u = HalfInt::from_twice(sig.width() - k + l);
        let label = UBasisLabel { l, k, m, u };
        label.validate(sig)?;
        Ok(label)
    }

    /// Unchecked constructor; see [`UBasisLabel::validate`].
    pub fn from_parts(k: i64, l: i64, u: HalfInt, m: HalfInt) -> Self {
        UBasisLabel { l, k, m, u }
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        let out = |violated: &str| Error::LabelOutOfDomain {
            label: self.to_string(),
            violated: violated.to_string(),
        };
        if self.k < 0 || self.k > sig.width() {
            return Err(out("0 <= k <= f1 - f2"));
        }
        if self.l < 0 {
            return Err(out("l >= 0"));
        }
        if self.u.twice() != sig.width() - self.k + self.l {
            return Err(out("U = (f1 - f2 - k + l)/2"));
        }
        if self.m.twice().abs() > self.u.twice() {
            return Err(out("-U <= M_U <= U"));
        }
        if !(self.u - self.m).is_integer() {
            return Err(out("U - M_U integer"));
        }
        Ok(())
    }

    /// `U - M_U`.
    pub fn depth(&self) -> i64 {
        (self.u - self.m).twice() / 2
    }

    pub fn level(&self) -> i64 {
        self.k + self.l
    }
}

impl fmt::Display for UBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[k={} l={} U={} M={}]", self.k, self.l, self.u, self.m)
    }
}

/// Vector `(s, p, T, M)` of the T-spin reduction.
///
/// Field order gives the canonical ordering `(s, p, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TBasisLabel {
    pub s: i64,
    pub p: i64,
    pub m: HalfInt,
    pub t: HalfInt,
}

impl TBasisLabel {
    /// Builds the label with `T = (f2 - f3 + p + s - 2)/2` and validates it.
    pub fn new(sig: &Signature, s: i64, p: i64, m: HalfInt) -> Result<Self> {
        let t = HalfInt::from_twice(sig.f2 - sig.f3 + p + s - 2);
        let label = TBasisLabel { s, p, m, t };
        label.validate(sig)?;
        Ok(label)
    }

    /// Builds the label from the depth `x = M - T - 1`.
    pub fn with_depth(sig: &Signature, s: i64, p: i64, x: i64) -> Result<Self> {
        let t = HalfInt::from_twice(sig.f2 - sig.f3 + p + s - 2);
        Self::new(sig, s, p, t + HalfInt::from_int(x + 1))
    }

    pub fn from_parts(s: i64, p: i64, t: HalfInt, m: HalfInt) -> Self {
        TBasisLabel { s, p, m, t }
    }

    pub fn validate(&self, sig: &Signature) -> Result<()> {
        let out = |violated: &str| Error::LabelOutOfDomain {
            label: self.to_string(),
            violated: violated.to_string(),
        };
        if self.p < 0 || self.p > sig.width() {
            return Err(out("0 <= p <= f1 - f2"));
        }
        if self.s < 0 {
            return Err(out("s >= 0"));
        }
        if self.t.twice() != sig.f2 - sig.f3 + self.p + self.s - 2 {
            return Err(out("T = (f2 - f3 + p + s - 2)/2"));
        }
        if !(self.m - self.t).is_integer() {
            return Err(out("M - T integer"));
        }
        if self.m.twice() < self.t.twice() + 2 {
            return Err(out("M >= T + 1"));
        }
        Ok(())
    }

    /// `x = M - T - 1`.
    pub fn depth(&self) -> i64 {
        (self.m - self.t).twice() / 2 - 1
    }

    pub fn level(&self) -> i64 {
        self.s + self.depth()
    }
}

impl fmt::Display for TBasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[s={} p={} T={} M={}]", self.s, self.p, self.t, self.m)
    }
}

/// Operations shared by both kinds of basis label.
pub trait BasisLabel: Copy + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    const KIND: BasisKind;

    fn validate(&self, sig: &Signature) -> Result<()>;

    /// Weight of a label already known to be valid.
    fn weight_unchecked(&self, sig: &Signature) -> Weight;

    fn weight(&self, sig: &Signature) -> Result<Weight> {
        self.validate(sig)?;
        Ok(self.weight_unchecked(sig))
    }

    fn within(&self, trunc: &Truncation) -> bool;

    fn enumerate(sig: &Signature, trunc: &Truncation) -> Vec<Self>;

    /// All labels of the given weight, without truncation.
    fn weight_space(sig: &Signature, w: &Weight) -> Vec<Self>;

    /// Spin of the subalgebra multiplet, `U` or `T`.
    fn spin(&self) -> HalfInt;

    /// Projection `M_U` or `M_T`.
    fn projection(&self) -> HalfInt;

    /// Column headers and values for tabular output.
    fn fields(&self) -> Vec<(&'static str, String)>;
}

impl BasisLabel for UBasisLabel {
    const KIND: BasisKind = BasisKind::U;

    fn validate(&self, sig: &Signature) -> Result<()> {
        UBasisLabel::validate(self, sig)
    }

    fn weight_unchecked(&self, sig: &Signature) -> Weight {
        let d = self.depth();
        Weight::new(sig.f1 + self.l - d, sig.f2 + self.k + d, sig.f3 - self.k - self.l)
    }

    fn within(&self, trunc: &Truncation) -> bool {
        self.l <= trunc.l_max
    }

    fn enumerate(sig: &Signature, trunc: &Truncation) -> Vec<Self> {
        enumerate_u_basis(sig, trunc.l_max)
    }

    fn weight_space(sig: &Signature, w: &Weight) -> Vec<Self> {
        u_weight_space(sig, w)
    }

    fn spin(&self) -> HalfInt {
        self.u
    }

    fn projection(&self) -> HalfInt {
        self.m
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("k", self.k.to_string()),
            ("l", self.l.to_string()),
            ("U", self.u.to_string()),
            ("M_U", self.m.to_string()),
        ]
    }
}

impl BasisLabel for TBasisLabel {
    const KIND: BasisKind = BasisKind::T;

    fn validate(&self, sig: &Signature) -> Result<()> {
        TBasisLabel::validate(self, sig)
    }

    fn weight_unchecked(&self, sig: &Signature) -> Weight {
        let x = self.depth();
        Weight::new(sig.f1 - self.p + self.s, sig.f2 + self.p + x, sig.f3 - self.s - x)
    }

    fn within(&self, trunc: &Truncation) -> bool {
        self.s <= trunc.s_max && self.depth() <= trunc.depth
    }

    fn enumerate(sig: &Signature, trunc: &Truncation) -> Vec<Self> {
        enumerate_t_basis(sig, trunc.s_max, trunc.depth)
    }

    fn weight_space(sig: &Signature, w: &Weight) -> Vec<Self> {
        t_weight_space(sig, w)
    }

    fn spin(&self) -> HalfInt {
        self.t
    }

    fn projection(&self) -> HalfInt {
        self.m
    }

    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("s", self.s.to_string()),
            ("p", self.p.to_string()),
            ("T", self.t.to_string()),
            ("M", self.m.to_string()),
        ]
    }
}

/// All U-basis labels with `ℓ <= l_max`, in `(ℓ, k, M_U)` order.
pub fn enumerate_u_basis(sig: &Signature, l_max: i64) -> Vec<UBasisLabel> {
    let mut out = Vec::new();
    for l in 0..=l_max {
        for k in 0..=sig.width() {
            let u = HalfInt::from_twice(sig.width() - k + l);
            for twice_m in (-u.twice()..=u.twice()).step_by(2) {
                out.push(UBasisLabel { l, k, m: HalfInt::from_twice(twice_m), u });
            }
        }
    }
    out
}

/// All T-basis labels with `s <= s_max` and `M - T - 1 <= depth`, in
/// `(s, p, M)` order.
pub fn enumerate_t_basis(sig: &Signature, s_max: i64, depth: i64) -> Vec<TBasisLabel> {
    let mut out = Vec::new();
    for s in 0..=s_max {
        for p in 0..=sig.width() {
            let t = HalfInt::from_twice(sig.f2 - sig.f3 + p + s - 2);
            for x in 0..=depth {
                out.push(TBasisLabel { s, p, m: t + HalfInt::from_int(x + 1), t });
            }
        }
    }
    out
}

pub fn weight_of_u(sig: &Signature, label: &UBasisLabel) -> Result<Weight> {
    label.weight(sig)
}

pub fn weight_of_t(sig: &Signature, label: &TBasisLabel) -> Result<Weight> {
    label.weight(sig)
}

/// U-basis labels of weight `w`, in canonical order.
pub fn u_weight_space(sig: &Signature, w: &Weight) -> Vec<UBasisLabel> {
    let n = w.level(sig);
    if n < 0 || w.m1 + w.m2 + w.m3 != sig.f1 + sig.f2 + sig.f3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for k in 0..=sig.width().min(n) {
        let l = n - k;
        let u = HalfInt::from_twice(sig.width() - k + l);
        let d = sig.f1 + l - w.m1;
        if (0..=u.twice()).contains(&d) {
            out.push(UBasisLabel { l, k, m: u - HalfInt::from_int(d), u });
        }
    }
    out.sort();
    out
}

/// T-basis labels of weight `w`, in canonical order.
pub fn t_weight_space(sig: &Signature, w: &Weight) -> Vec<TBasisLabel> {
    let n = w.level(sig);
    if n < 0 || w.m1 + w.m2 + w.m3 != sig.f1 + sig.f2 + sig.f3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for s in 0..=n {
        let p = sig.f1 + s - w.m1;
        if (0..=sig.width()).contains(&p) {
            let t = HalfInt::from_twice(sig.f2 - sig.f3 + p + s - 2);
            out.push(TBasisLabel { s, p, m: t + HalfInt::from_int(n - s + 1), t });
        }
    }
    out.sort();
    out
}

/// Every T-basis label sharing the weight of `u`, ordered by `T`.
pub fn match_labels(sig: &Signature, u: &UBasisLabel) -> Result<Vec<TBasisLabel>> {
    let w = u.weight(sig)?;
    let mut out = t_weight_space(sig, &w);
    out.sort_by_key(|t| (t.t, t.s));
    Ok(out)
}

/// Distinct weights reached by labels of the truncated U basis, sorted.
pub fn weights_up_to_level(sig: &Signature, level: i64) -> Vec<Weight> {
    let mut out: Vec<Weight> = enumerate_u_basis(sig, level)
        .into_iter()
        .filter(|l| l.level() <= level)
        .map(|l| l.weight_unchecked(sig))
        .collect();
    out.sort_by(|a, b| match (a.level(sig)).cmp(&b.level(sig)) {
        Ordering::Equal => b.m1.cmp(&a.m1),
        o => o,
    });
    out.dedup();
    out
}

/// Gel'fand-Graev scheme
/// `(m13 m23 m33 / m12 m22 / m11)` of a U-basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GGPattern {
    pub m13: i64,
    pub m23: i64,
    pub m33: i64,
    pub m12: i64,
    pub m22: i64,
    pub m11: i64,
}

impl GGPattern {
    /// Betweenness conditions, with the top row allowed to reach
    /// `m23 = m33 - 1`.
    pub fn validate(&self) -> Result<()> {
        let fail = |violated| Err(Error::PatternViolation { violated });
        if self.m13 < self.m23 {
            return fail("m13 >= m23");
        }
        if self.m23 < self.m33 - 1 {
            return fail("m23 >= m33 - 1");
        }
        if self.m12 < self.m13 + 1 {
            return fail("m12 >= m13 + 1");
        }
        if self.m13 + 1 < self.m22 {
            return fail("m13 + 1 >= m22");
        }
        if self.m22 < self.m23 + 1 {
            return fail("m22 >= m23 + 1");
        }
        if self.m12 < self.m11 {
            return fail("m12 >= m11");
        }
        if self.m11 < self.m22 {
            return fail("m11 >= m22");
        }
        Ok(())
    }

    pub fn signature(&self) -> Result<Signature> {
        Signature::new(self.m13 + 1, self.m23 + 1, self.m33 - 2)
    }

    pub fn rows(&self) -> [Vec<i64>; 3] {
        [
            vec![self.m13, self.m23, self.m33],
            vec![self.m12, self.m22],
            vec![self.m11],
        ]
    }
}

impl fmt::Display for GGPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} / {} {} / {}",
            self.m13, self.m23, self.m33, self.m12, self.m22, self.m11
        )
    }
}

pub fn gg_from_label(sig: &Signature, label: &UBasisLabel) -> Result<GGPattern> {
    label.validate(sig)?;
    let m22 = sig.f2 + label.k;
    let pattern = GGPattern {
        m13: sig.f1 - 1,
        m23: sig.f2 - 1,
        m33: sig.f3 + 2,
        m12: sig.f1 + label.l,
        m22,
        m11: (label.u + label.m).to_int().expect("U + M_U is an integer") + m22,
    };
    pattern.validate()?;
    Ok(pattern)
}

/// Inverse of [`gg_from_label`], returning the signature as well.
pub fn label_from_gg(pattern: &GGPattern) -> Result<(Signature, UBasisLabel)> {
    pattern.validate()?;
    let sig = pattern.signature()?;
    let l = pattern.m12 - pattern.m13 - 1;
    let k = pattern.m22 - pattern.m23 - 1;
    let u = HalfInt::from_twice(pattern.m12 - pattern.m22);
    let m = HalfInt::from_int(pattern.m11 - pattern.m22) - u;
    let label = UBasisLabel::from_parts(k, l, u, m);
    label.validate(&sig)?;
    Ok((sig, label))
}
