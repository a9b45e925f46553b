//! Generator actions in both bases, closed-form norms, projector
//! coefficients and the su_q(1,1) Casimir.
//!
//! The matrix elements of the off-diagonal generators are stored as data:
//! one row per (generator, target shift) with a sign, a power of `q` and a
//! radicand written as a ratio of q-number products. Everything that
//! evaluates a matrix element goes through [`Tables`].

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::qarith::{factorial_ratio, qfact_inv, qnum, qnum_half_sq, EvalContext, Scalar, SignedRadical};
use crate::repspace::{BasisKind, BasisLabel, Signature, TBasisLabel, UBasisLabel};

/// One of the nine generators `A_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    i: u8,
    j: u8,
}

impl Gen {
    pub fn new(i: u8, j: u8) -> Result<Self> {
        if (1..=3).contains(&i) && (1..=3).contains(&j) {
            Ok(Gen { i, j })
        } else {
            Err(Error::InvalidParameter(format!("no generator A{i}{j}")))
        }
    }

    pub const A11: Gen = Gen { i: 1, j: 1 };
    pub const A12: Gen = Gen { i: 1, j: 2 };
    pub const A13: Gen = Gen { i: 1, j: 3 };
    pub const A21: Gen = Gen { i: 2, j: 1 };
    pub const A22: Gen = Gen { i: 2, j: 2 };
    pub const A23: Gen = Gen { i: 2, j: 3 };
    pub const A31: Gen = Gen { i: 3, j: 1 };
    pub const A32: Gen = Gen { i: 3, j: 2 };
    pub const A33: Gen = Gen { i: 3, j: 3 };

    pub fn all() -> [Gen; 9] {
        [
            Gen::A11,
            Gen::A12,
            Gen::A13,
            Gen::A21,
            Gen::A22,
            Gen::A23,
            Gen::A31,
            Gen::A32,
            Gen::A33,
        ]
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    pub fn transposed(&self) -> Gen {
        Gen { i: self.j, j: self.i }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}{}", self.i, self.j)
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("generator must be A11..A33, got {s:?}"));
        let b = s.trim().as_bytes();
        if b.len() != 3 || !(b[0] == b'A' || b[0] == b'a') {
            return Err(bad());
        }
        let d = |c: u8| c.checked_sub(b'0').filter(|x| (1..=3).contains(x));
        match (d(b[1]), d(b[2])) {
            (Some(i), Some(j)) => Ok(Gen { i, j }),
            _ => Err(bad()),
        }
    }
}

/// One nonzero term `coeff * |target>` of a generator action.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionTerm<L> {
    pub target: L,
    pub coeff: SignedRadical,
    /// Name of the table entry that produced the term; `None` for diagonal
    /// generators.
    pub entry: Option<&'static str>,
}

const N_VARS: usize = 7;

/// Integer-coefficient linear form over the four label variables and
/// `f1, f2, f3`, evaluated in units of one half.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Linear {
    coeff: [i64; N_VARS],
    twice_const: i64,
}

impl Linear {
    fn parse(src: &str, names: &[&str; 4]) -> Linear {
        let mut all: Vec<(&str, usize)> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        all.extend([("f1", 4), ("f2", 5), ("f3", 6)]);
        all.sort_by_key(|(n, _)| std::cmp::Reverse(n.len()));

        let mut out = Linear { coeff: [0; N_VARS], twice_const: 0 };
        let s: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        while pos < s.len() {
            let mut sign = 1;
            if s[pos] == '+' || s[pos] == '-' {
                if s[pos] == '-' {
                    sign = -1;
                }
                pos += 1;
            }
            let start = pos;
            while pos < s.len() && s[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = s[start..pos].iter().collect();
            let rest: String = s[pos..].iter().collect();
            if let Some((name, idx)) = all.iter().find(|(n, _)| rest.starts_with(n)) {
                let c = if digits.is_empty() { 1 } else { digits.parse::<i64>().unwrap() };
                out.coeff[*idx] += sign * c;
                pos += name.len();
            } else {
                let n: i64 = digits.parse().unwrap_or_else(|_| panic!("bad linear form {src:?}"));
                if rest.starts_with("/2") {
                    out.twice_const += sign * n;
                    pos += 2;
                } else {
                    out.twice_const += 2 * sign * n;
                }
            }
        }
        out
    }

    fn eval_twice(&self, vars: &[i64; N_VARS]) -> i64 {
        self.coeff.iter().zip(vars).map(|(c, v)| c * v).sum::<i64>() + self.twice_const
    }

    fn eval_int(&self, vars: &[i64; N_VARS]) -> i64 {
        let t = self.eval_twice(vars);
        assert!(t % 2 == 0, "linear form evaluated to a half-integer");
        t / 2
    }
}

/// A row of a generator table.
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub name: &'static str,
    pub gen: Gen,
    pub sign: i8,
    target: [Linear; 4],
    qpower: Linear,
    num: Vec<Linear>,
    den: Vec<Linear>,
    /// Source text of the row, for reports.
    pub source: &'static str,
}

// Columns: name | target (4 forms) | sign | q-power | radicand.
// Label variables are k l U M in the U basis and s p T M in the T basis.
const U_TABLE: &str = "
u.A12       | k   l   U     M+1   | + | 0      | [U-M][U+M+1]
u.A21       | k   l   U     M-1   | + | 0      | [U+M][U-M+1]
u.A13(l+1)  | k   l+1 U+1/2 M+1/2 | + | -U+M   | [l+1][f1-f3+l][2U+k+2][U+M+1] / [2U+1][2U+2]
u.A13(k+1)  | k+1 l   U-1/2 M+1/2 | - | U+M+1  | [k+1][f2-f3+k-1][2U-l][U-M] / [2U][2U+1]
u.A23(l+1)  | k   l+1 U+1/2 M-1/2 | + | 0      | [l+1][f1-f3+l][2U+k+2][U-M+1] / [2U+1][2U+2]
u.A23(k+1)  | k+1 l   U-1/2 M-1/2 | + | 0      | [k+1][f2-f3+k-1][2U-l][U+M] / [2U][2U+1]
u.A31(l-1)  | k   l-1 U-1/2 M-1/2 | - | U-M    | [l][f1-f3+l-1][2U+k+1][U+M] / [2U][2U+1]
u.A31(k-1)  | k-1 l   U+1/2 M-1/2 | + | -U-M-1 | [k][f2-f3+k-2][2U-l+1][U-M+1] / [2U+1][2U+2]
u.A32(l-1)  | k   l-1 U-1/2 M+1/2 | - | 0      | [l][f1-f3+l-1][2U+k+1][U-M] / [2U][2U+1]
u.A32(k-1)  | k-1 l   U+1/2 M+1/2 | - | 0      | [k][f2-f3+k-2][2U-l+1][U+M+1] / [2U+1][2U+2]
";

const T_TABLE: &str = "
t.A23       | s   p   T     M+1   | + | 0      | [M-T][T+M+1]
t.A32       | s   p   T     M-1   | - | 0      | [T+M][M-T-1]
t.A12(s+1)  | s+1 p   T+1/2 M-1/2 | + | 0      | [s+1][f1-f3+s][2T-p+1][-T+M-1] / [2T+1][2T+2]
t.A12(p-1)  | s   p-1 T-1/2 M-1/2 | + | 0      | [p][f1-f2-p+1][2T-s][T+M] / [2T][2T+1]
t.A13(s+1)  | s+1 p   T+1/2 M+1/2 | + | T-M+1  | [s+1][f1-f3+s][2T-p+1][T+M+1] / [2T+1][2T+2]
t.A13(p-1)  | s   p-1 T-1/2 M+1/2 | + | -T-M   | [p][f1-f2-p+1][2T-s][-T+M] / [2T][2T+1]
t.A21(s-1)  | s-1 p   T-1/2 M+1/2 | + | 0      | [s][f1-f3+s-1][2T-p][-T+M] / [2T][2T+1]
t.A21(p+1)  | s   p+1 T+1/2 M+1/2 | + | 0      | [p+1][f1-f2-p][2T-s+1][T+M+1] / [2T+1][2T+2]
t.A31(s-1)  | s-1 p   T-1/2 M-1/2 | - | -T+M-1 | [s][f1-f3+s-1][2T-p][T+M] / [2T][2T+1]
t.A31(p+1)  | s   p+1 T+1/2 M-1/2 | - | T+M    | [p+1][f1-f2-p][2T-s+1][-T+M-1] / [2T+1][2T+2]
";

fn parse_brackets(src: &str, names: &[&str; 4]) -> Vec<Linear> {
    src.split(']')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| Linear::parse(t.trim_start_matches('['), names))
        .collect()
}

fn parse_table(src: &'static str, names: &[&str; 4]) -> Vec<TableEntry> {
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let cols: Vec<&'static str> = line.split('|').map(str::trim).collect();
            assert_eq!(cols.len(), 5, "malformed table row {line:?}");
            let name = cols[0];
            let gen: Gen = name[2..5].parse().expect("table row names a generator");
            let forms: Vec<Linear> =
                cols[1].split_whitespace().map(|f| Linear::parse(f, names)).collect();
            let target: [Linear; 4] = forms.try_into().expect("four target forms");
            let sign = match cols[2] {
                "+" => 1,
                "-" => -1,
                other => panic!("bad sign {other:?}"),
            };
            let (num, den) = match cols[4].split_once('/') {
                Some((n, d)) => (parse_brackets(n, names), parse_brackets(d, names)),
                None => (parse_brackets(cols[4], names), Vec::new()),
            };
            TableEntry {
                name,
                gen,
                sign,
                target,
                qpower: Linear::parse(cols[3], names),
                num,
                den,
                source: line,
            }
        })
        .collect()
}

/// Labels whose matrix elements are described by a table.
pub trait TableLabel: BasisLabel {
    const VAR_NAMES: [&'static str; 4];

    /// Label variables in half units, in `VAR_NAMES` order.
    fn twice_vars(&self) -> [i64; 4];

    fn from_twice_vars(v: [i64; 4]) -> Option<Self>;
}

impl TableLabel for UBasisLabel {
    const VAR_NAMES: [&'static str; 4] = ["k", "l", "U", "M"];

    fn twice_vars(&self) -> [i64; 4] {
        [2 * self.k, 2 * self.l, self.u.twice(), self.m.twice()]
    }

    fn from_twice_vars(v: [i64; 4]) -> Option<Self> {
        if v[0] % 2 != 0 || v[1] % 2 != 0 {
            return None;
        }
        Some(UBasisLabel::from_parts(
            v[0] / 2,
            v[1] / 2,
            HalfInt::from_twice(v[2]),
            HalfInt::from_twice(v[3]),
        ))
    }
}

impl TableLabel for TBasisLabel {
    const VAR_NAMES: [&'static str; 4] = ["s", "p", "T", "M"];

    fn twice_vars(&self) -> [i64; 4] {
        [2 * self.s, 2 * self.p, self.t.twice(), self.m.twice()]
    }

    fn from_twice_vars(v: [i64; 4]) -> Option<Self> {
        if v[0] % 2 != 0 || v[1] % 2 != 0 {
            return None;
        }
        Some(TBasisLabel::from_parts(
            v[0] / 2,
            v[1] / 2,
            HalfInt::from_twice(v[2]),
            HalfInt::from_twice(v[3]),
        ))
    }
}

fn all_vars<L: TableLabel>(sig: &Signature, label: &L) -> [i64; N_VARS] {
    let v = label.twice_vars();
    [v[0], v[1], v[2], v[3], 2 * sig.f1(), 2 * sig.f2(), 2 * sig.f3()]
}

/// Matrix-element tables for both bases.
#[derive(Clone, Debug)]
pub struct Tables {
    u: Vec<TableEntry>,
    t: Vec<TableEntry>,
}

impl Tables {
    /// The shared, unmodified tables.
    pub fn standard() -> &'static Tables {
        static TABLES: OnceLock<Tables> = OnceLock::new();
        TABLES.get_or_init(|| Tables {
            u: parse_table(U_TABLE, &UBasisLabel::VAR_NAMES),
            t: parse_table(T_TABLE, &TBasisLabel::VAR_NAMES),
        })
    }

    pub fn entries(&self, kind: BasisKind) -> &[TableEntry] {
        match kind {
            BasisKind::U => &self.u,
            BasisKind::T => &self.t,
        }
    }

    pub fn entry_names(&self, kind: BasisKind) -> Vec<&'static str> {
        self.entries(kind).iter().map(|e| e.name).collect()
    }

    /// A copy with the sign of one entry reversed, for fault injection.
    pub fn with_flipped_sign(&self, kind: BasisKind, name: &str) -> Result<Tables> {
        let mut out = self.clone();
        let entries = match kind {
            BasisKind::U => &mut out.u,
            BasisKind::T => &mut out.t,
        };
        let e = entries
            .iter_mut()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::InvalidParameter(format!("no table entry {name:?}")))?;
        e.sign = -e.sign;
        Ok(out)
    }

    /// Targets every entry of `gen` would reach from `label`, whether or not
    /// the coefficient vanishes.
    pub fn structural_targets<L: TableLabel>(&self, sig: &Signature, gen: Gen, label: &L) -> Vec<L> {
        if gen.is_diagonal() {
            return vec![*label];
        }
        let vars = all_vars(sig, label);
        self.entries(L::KIND)
            .iter()
            .filter(|e| e.gen == gen)
            .filter_map(|e| L::from_twice_vars(e.target.map(|f| f.eval_twice(&vars))))
            .collect()
    }
}

/// Action of `gen` on a basis vector, with the standard tables.
pub fn basis_action<L: TableLabel>(
    sig: &Signature,
    gen: Gen,
    label: &L,
    ctx: &EvalContext,
) -> Result<Vec<ActionTerm<L>>> {
    basis_action_with(Tables::standard(), sig, gen, label, ctx)
}

/// Action of `gen` on a basis vector, evaluated from `tables`.
///
/// Terms whose radicand has a vanishing numerator factor are dropped. A
/// vanishing denominator, a negative radicand or an invalid target label on a
/// surviving term are reported as [`Error::TableContract`].
pub fn basis_action_with<L: TableLabel>(
    tables: &Tables,
    sig: &Signature,
    gen: Gen,
    label: &L,
    ctx: &EvalContext,
) -> Result<Vec<ActionTerm<L>>> {
    label.validate(sig)?;
    if gen.is_diagonal() {
        let m = label.weight_unchecked(sig).component(gen.i());
        if m == 0 {
            return Ok(Vec::new());
        }
        return Ok(vec![ActionTerm {
            target: *label,
            coeff: SignedRadical::from_scalar(&ctx.scalar(m)),
            entry: None,
        }]);
    }
    let vars = all_vars(sig, label);
    let mut out = Vec::new();
    for e in tables.entries(L::KIND).iter().filter(|e| e.gen == gen) {
        let num: Vec<i64> = e.num.iter().map(|f| f.eval_int(&vars)).collect();
        if num.contains(&0) {
            continue;
        }
        let den: Vec<i64> = e.den.iter().map(|f| f.eval_int(&vars)).collect();
        let broken = |what: String| Error::TableContract(format!("{} at {label}: {what}", e.name));
        if den.contains(&0) {
            return Err(broken("zero denominator".into()));
        }
        let mut rad = ctx.one();
        for n in num {
            rad = rad * qnum(n, ctx);
        }
        for d in den {
            rad = rad / qnum(d, ctx);
        }
        if rad.signum() < 0 {
            return Err(broken(format!("negative radicand {}", rad.render(ctx.digits()))));
        }
        let target = L::from_twice_vars(e.target.map(|f| f.eval_twice(&vars)))
            .ok_or_else(|| broken("non-integral target".into()))?;
        target
            .validate(sig)
            .map_err(|err| broken(format!("target {target} invalid ({err})")))?;
        let coeff = SignedRadical::new(e.sign, e.qpower.eval_int(&vars), rad)?;
        out.push(ActionTerm { target, coeff, entry: Some(e.name) });
    }
    Ok(out)
}

pub fn u_basis_action(
    sig: &Signature,
    gen: Gen,
    label: &UBasisLabel,
    ctx: &EvalContext,
) -> Result<Vec<ActionTerm<UBasisLabel>>> {
    basis_action(sig, gen, label, ctx)
}

pub fn t_basis_action(
    sig: &Signature,
    gen: Gen,
    label: &TBasisLabel,
    ctx: &EvalContext,
) -> Result<Vec<ActionTerm<TBasisLabel>>> {
    basis_action(sig, gen, label, ctx)
}

fn out_of_range(what: &str) -> Error {
    Error::ConstraintViolation(what.to_string())
}

/// Squared norm of `A23^k A13^ℓ |L>` after U-spin projection, closed form.
pub fn norm_u_sq(sig: &Signature, k: i64, l: i64, ctx: &EvalContext) -> Result<Scalar> {
    if k < 0 || k > sig.width() {
        return Err(out_of_range("0 <= k <= f1 - f2"));
    }
    if l < 0 {
        return Err(out_of_range("l >= 0"));
    }
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    factorial_ratio(
        &[k, l, f1 - f2 - k + l + 1, f1 - f2, f2 - f3 + k - 2, f1 - f3 + l - 1],
        &[f1 - f2 - k, f1 - f2 + l + 1, f1 - f3 - 1, f2 - f3 - 2],
        ctx,
    )
}

/// The same norm built up from `N²(0,0) = 1` by the two recursions in `ℓ`
/// (at `k = 0`) and then in `k`.
pub fn norm_u_sq_recursive(sig: &Signature, k: i64, l: i64, ctx: &EvalContext) -> Result<Scalar> {
    if k < 0 || k > sig.width() {
        return Err(out_of_range("0 <= k <= f1 - f2"));
    }
    if l < 0 {
        return Err(out_of_range("l >= 0"));
    }
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    let mut n = ctx.one();
    for j in 1..=l {
        n = n * qnum(j, ctx) * qnum(f1 - f3 + j - 1, ctx);
    }
    for i in 1..=k {
        let step = qnum(i, ctx) * qnum(f1 - f2 - i + 1, ctx) * qnum(f2 - f3 + i - 2, ctx);
        n = (n * step).checked_div(&qnum(f1 - f2 - i + l + 2, ctx))?;
    }
    Ok(n)
}

/// Squared norm of `A13^s A21^p |L>` after T-spin projection.
pub fn norm_t_sq(sig: &Signature, s: i64, p: i64, ctx: &EvalContext) -> Result<Scalar> {
    if p < 0 || p > sig.width() {
        return Err(out_of_range("0 <= p <= f1 - f2"));
    }
    if s < 0 {
        return Err(out_of_range("s >= 0"));
    }
    let (f1, f2, f3) = (sig.f1(), sig.f2(), sig.f3());
    factorial_ratio(
        &[s, p, f1 - f2, f1 - f3 + s - 1, f2 - f3 + s - 2, f2 - f3 + p - 2],
        &[f1 - f2 - p, f1 - f3 - 1, f2 - f3 - 2, f2 - f3 + p + s - 2],
        ctx,
    )
}

/// `[2U]! [U-M]! / [U+M]!`.
pub fn norm_su2_sq(u: HalfInt, m: HalfInt, ctx: &EvalContext) -> Result<Scalar> {
    if m.twice().abs() > u.twice() || !(u - m).is_integer() {
        return Err(out_of_range("-U <= M_U <= U"));
    }
    let int = |h: HalfInt| h.to_int().expect("integral");
    factorial_ratio(&[u.twice(), int(u - m)], &[int(u + m)], ctx)
}

/// `[M-T-1]! [T+M]! / [2T+1]!`, the squared norm of `T+^x` on the bottom of
/// an su_q(1,1) multiplet.
pub fn norm_su11_sq(t: HalfInt, m: HalfInt, ctx: &EvalContext) -> Result<Scalar> {
    if m.twice() < t.twice() + 2 || !(m - t).is_integer() {
        return Err(out_of_range("M >= T + 1"));
    }
    if t.twice() < -1 {
        return Err(out_of_range("T >= -1/2"));
    }
    let int = |h: HalfInt| h.to_int().expect("integral");
    factorial_ratio(&[int(m - t) - 1, int(t + m)], &[t.twice() + 1], ctx)
}

/// The su_q(1,1) norm by `N²(T,M) = [x][2T+x+1] N²(T,M-1)`, `x = M-T-1`.
pub fn norm_su11_sq_recursive(t: HalfInt, m: HalfInt, ctx: &EvalContext) -> Result<Scalar> {
    if m.twice() < t.twice() + 2 || !(m - t).is_integer() {
        return Err(out_of_range("M >= T + 1"));
    }
    let depth = (m - t).to_int().expect("integral") - 1;
    let mut n = ctx.one();
    for x in 1..=depth {
        n = n * qnum(x, ctx) * qnum(t.twice() + x + 1, ctx);
    }
    Ok(n)
}

/// Coefficient `(-1)^r [2U+1]! / ([r]! [2U+r+1]!)` of the su_q(2) extremal
/// projector.
pub fn projector_u_coeff(u: HalfInt, r: i64, ctx: &EvalContext) -> Scalar {
    if r < 0 {
        return ctx.zero();
    }
    let c = qfact_inv(r, ctx) * qfact_inv(u.twice() + r + 1, ctx);
    let c = match crate::qarith::qfact(u.twice() + 1, ctx) {
        Ok(f) => c * f,
        Err(_) => return ctx.zero(),
    };
    if r % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Coefficient `C_r = [2T-r]! / ([r]! [2T]!)` of the su_q(1,1) projector;
/// zero outside `0 <= r <= 2T`.
pub fn projector_t_coeff(t: HalfInt, r: i64, ctx: &EvalContext) -> Scalar {
    let two_t = t.twice();
    if r < 0 || r > two_t {
        return if r == 0 { ctx.one() } else { ctx.zero() };
    }
    let num = crate::qarith::qfact(two_t - r, ctx).expect("nonnegative");
    num * qfact_inv(r, ctx) * qfact_inv(two_t, ctx)
}

/// Casimir eigenvalue `[T+1/2]^2` on an su_q(1,1) multiplet of spin `T`.
pub fn casimir_su11_eigenvalue(t: HalfInt, ctx: &EvalContext) -> Scalar {
    qnum_half_sq(t.twice() + 1, ctx)
}

/// Radicand of a table entry as a string of q-numbers, for reports.
impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name, self.source)
    }
}

/// Serializable view of an action term.
#[derive(Clone, Debug, Serialize)]
pub struct TermRecord {
    pub sign: i8,
    pub qpower: i64,
    pub radicand: String,
    pub value: String,
}

impl TermRecord {
    pub fn new(c: &SignedRadical, ctx: &EvalContext) -> Self {
        TermRecord {
            sign: c.sign(),
            qpower: c.qpower(),
            radicand: c.radicand().render(ctx.digits()),
            value: crate::qarith::format_float(&c.to_float(ctx), ctx.digits()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repspace::{enumerate_t_basis, enumerate_u_basis, Truncation, Weight};
    use rug::Rational;

    fn sig(f1: i64, f2: i64, f3: i64) -> Signature {
        Signature::new(f1, f2, f3).unwrap()
    }

    fn exact(n: i64, d: i64) -> EvalContext {
        EvalContext::exact(Rational::from((n, d))).unwrap()
    }

    #[test]
    fn gen_parse() {
        assert_eq!("A23".parse::<Gen>().unwrap(), Gen::A23);
        assert!("A24".parse::<Gen>().is_err());
        assert!("B12".parse::<Gen>().is_err());
        assert_eq!(Gen::A13.to_string(), "A13");
    }

    #[test]
    fn linear_forms() {
        let names = ["k", "l", "U", "M"];
        let f = Linear::parse("2U+k-2", &names);
        // k = 1, U = 3/2
        assert_eq!(f.eval_int(&[2, 0, 3, 1, 0, 0, 0]), 2);
        let g = Linear::parse("U+1/2", &names);
        assert_eq!(g.eval_twice(&[0, 0, 3, 0, 0, 0, 0]), 4);
        let h = Linear::parse("f1-f3+l-1", &names);
        assert_eq!(h.eval_int(&[0, 4, 0, 0, 8, 4, -4]), 7);
    }

    #[test]
    fn tables_parse() {
        let t = Tables::standard();
        assert_eq!(t.entries(BasisKind::U).len(), 10);
        assert_eq!(t.entries(BasisKind::T).len(), 10);
    }

    #[test]
    fn lowest_vector_is_annihilated() {
        let ctx = exact(13, 10);
        for s in [sig(4, 2, -2), sig(3, 1, -1), sig(2, 2, -1)] {
            let l = s.lowest_u_label();
            for g in [Gen::A31, Gen::A32, Gen::A12] {
                assert!(u_basis_action(&s, g, &l, &ctx).unwrap().is_empty(), "{g}");
            }
            let t = s.lowest_t_label();
            for g in [Gen::A31, Gen::A32, Gen::A12] {
                assert!(t_basis_action(&s, g, &t, &ctx).unwrap().is_empty(), "{g}");
            }
        }
    }

    #[test]
    fn a13_on_lowest() {
        let ctx = exact(3, 2);
        let s = sig(4, 2, -2);
        let terms = u_basis_action(&s, Gen::A13, &s.lowest_u_label(), &ctx).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].entry, Some("u.A13(l+1)"));
        assert_eq!(terms[0].coeff.radicand(), &qnum(6, &ctx));
        // q^{-U+M} = 1 on the lowest vector.
        assert_eq!(terms[0].coeff.qpower(), 0);
    }

    #[test]
    fn su11_ladders() {
        let ctx = exact(3, 2);
        let s = sig(4, 2, -2);
        let l = TBasisLabel::with_depth(&s, 1, 1, 2).unwrap();
        let up = t_basis_action(&s, Gen::A23, &l, &ctx).unwrap();
        assert_eq!(up.len(), 1);
        let (t, m) = (l.t, l.m);
        let want = qnum((m - t).to_int().unwrap(), &ctx)
            * qnum((t + m).to_int().unwrap() + 1, &ctx);
        assert_eq!(up[0].coeff.radicand(), &want);
        assert_eq!(up[0].coeff.sign(), 1);
        let down = t_basis_action(&s, Gen::A32, &l, &ctx).unwrap();
        assert_eq!(down[0].coeff.sign(), -1);
        let want = qnum((t + m).to_int().unwrap(), &ctx) * qnum((m - t).to_int().unwrap() - 1, &ctx);
        assert_eq!(down[0].coeff.radicand(), &want);
        let bottom = TBasisLabel::with_depth(&s, 1, 1, 0).unwrap();
        assert!(t_basis_action(&s, Gen::A32, &bottom, &ctx).unwrap().is_empty());
    }

    #[test]
    fn weight_grading_and_contracts() {
        let ctx = exact(7, 5);
        let tables = Tables::standard();
        for s in [sig(4, 2, -2), sig(3, 1, -1), sig(5, 2, -1), sig(2, 2, -1)] {
            for l in enumerate_u_basis(&s, 4) {
                for g in Gen::all() {
                    for term in u_basis_action(&s, g, &l, &ctx).unwrap() {
                        let w = l.weight_unchecked(&s);
                        let expect = if g.is_diagonal() { w } else { w.shifted(g.i(), g.j()) };
                        assert_eq!(term.target.weight_unchecked(&s), expect);
                        assert!(!term.coeff.is_zero());
                    }
                    assert!(tables.structural_targets(&s, g, &l).len() <= 2);
                }
            }
            for l in enumerate_t_basis(&s, 4, 4) {
                for g in Gen::all() {
                    for term in t_basis_action(&s, g, &l, &ctx).unwrap() {
                        let w = l.weight_unchecked(&s);
                        let expect = if g.is_diagonal() { w } else { w.shifted(g.i(), g.j()) };
                        assert_eq!(term.target.weight_unchecked(&s), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_generators() {
        let ctx = exact(1, 1);
        let s = sig(4, 2, -2);
        let l = s.lowest_u_label();
        let w: Weight = s.lowest_weight();
        let a11 = u_basis_action(&s, Gen::A11, &l, &ctx).unwrap();
        assert_eq!(a11[0].coeff.signed_square(&ctx), ctx.scalar(w.m1 * w.m1));
        let a33 = u_basis_action(&s, Gen::A33, &l, &ctx).unwrap();
        assert_eq!(a33[0].coeff.sign(), -1);
    }

    #[test]
    fn flipped_sign_is_local() {
        let ctx = exact(3, 2);
        let s = sig(4, 2, -2);
        let flipped = Tables::standard().with_flipped_sign(BasisKind::T, "t.A13(s+1)").unwrap();
        let l = s.lowest_t_label();
        let a = basis_action_with(&flipped, &s, Gen::A13, &l, &ctx).unwrap();
        let b = t_basis_action(&s, Gen::A13, &l, &ctx).unwrap();
        assert_eq!(a[0].coeff.sign(), -b[0].coeff.sign());
        assert!(Tables::standard().with_flipped_sign(BasisKind::T, "t.A99").is_err());
    }

    #[test]
    fn norm_examples() {
        let ctx = exact(3, 2);
        let s = sig(4, 2, -2);
        assert_eq!(norm_u_sq(&s, 0, 0, &ctx).unwrap(), ctx.one());
        assert_eq!(norm_u_sq(&s, 0, 1, &ctx).unwrap(), qnum(6, &ctx));
        assert_eq!(norm_u_sq(&s, 1, 0, &ctx).unwrap(), norm_u_sq_recursive(&s, 1, 0, &ctx).unwrap());
        assert!(norm_u_sq(&s, 3, 0, &ctx).is_err());
        assert!(norm_u_sq_recursive(&s, 3, 0, &ctx).is_err());
        assert_eq!(norm_t_sq(&s, 0, 0, &ctx).unwrap(), ctx.one());
        assert_eq!(norm_t_sq(&s, 1, 0, &ctx).unwrap(), qnum(6, &ctx));
        assert!(norm_t_sq(&s, 0, 3, &ctx).is_err());
    }

    #[test]
    fn norm_recursions_agree() {
        let ctx = exact(5, 3);
        for s in [sig(4, 2, -2), sig(5, 2, -1), sig(3, 1, -1), sig(2, 2, -1)] {
            for k in 0..=s.width() {
                for l in 0..=8 {
                    assert_eq!(
                        norm_u_sq(&s, k, l, &ctx).unwrap(),
                        norm_u_sq_recursive(&s, k, l, &ctx).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn subalgebra_norms() {
        let ctx = exact(2, 1);
        let h = HalfInt::from_twice;
        assert_eq!(norm_su2_sq(h(3), h(3), &ctx).unwrap(), ctx.one());
        assert_eq!(norm_su11_sq(h(3), h(5), &ctx).unwrap(), ctx.one());
        assert_eq!(norm_su11_sq(h(3), h(7), &ctx).unwrap(), qnum(1, &ctx) * qnum(5, &ctx));
        for t in -1..6 {
            for x in 0..5 {
                let m = h(t) + HalfInt::from_int(x + 1);
                assert_eq!(
                    norm_su11_sq(h(t), m, &ctx).unwrap(),
                    norm_su11_sq_recursive(h(t), m, &ctx).unwrap()
                );
            }
        }
        assert!(norm_su11_sq(h(3), h(3), &ctx).is_err());
    }

    #[test]
    fn projector_coefficients() {
        let ctx = exact(7, 4);
        let h = HalfInt::from_twice;
        assert_eq!(projector_t_coeff(h(5), 0, &ctx), ctx.one());
        assert_eq!(projector_t_coeff(HalfInt::ONE, 1, &exact(1, 1)), Scalar::Exact(Rational::from((1, 2))));
        for two_t in 0..8 {
            let t = h(two_t);
            for r in 1..=two_t {
                let rec = projector_t_coeff(t, r - 1, &ctx)
                    + qnum(r, &ctx) * qnum(-two_t + r - 1, &ctx) * projector_t_coeff(t, r, &ctx);
                assert!(rec.is_zero(), "T={t} r={r}");
            }
        }
        assert_eq!(projector_u_coeff(h(2), 0, &ctx), ctx.one());
        assert_eq!(projector_u_coeff(h(2), 1, &exact(1, 1)), Scalar::Exact(Rational::from((-1, 4))));
    }

    #[test]
    fn casimir_values() {
        let h = HalfInt::from_twice;
        assert!(casimir_su11_eigenvalue(h(-1), &exact(3, 2)).is_zero());
        assert_eq!(casimir_su11_eigenvalue(h(1), &exact(1, 1)), exact(1, 1).one());
    }

    #[test]
    fn radicands_nonnegative_on_truncation() {
        let ctx = exact(1, 2);
        let s = sig(5, 2, -1);
        let tr = Truncation::uniform(5);
        for l in TBasisLabel::enumerate(&s, &tr) {
            for g in Gen::all() {
                t_basis_action(&s, g, &l, &ctx).unwrap();
            }
        }
    }
}
