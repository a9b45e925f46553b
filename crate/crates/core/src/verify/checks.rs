use rug::Float;

use super::relation::Relation;
use super::truncated::{argmax_abs, axpy, max_abs, SparseVec, TruncatedRep};
use super::CheckReport;
use crate::generators::{
    casimir_su11_eigenvalue, norm_t_sq, norm_u_sq, norm_u_sq_recursive, projector_t_coeff, projector_u_coeff, Gen,
    TableLabel,
};
use crate::halfint::HalfInt;
use crate::qarith::{qnum, EvalContext};
use crate::repspace::{weights_up_to_level, BasisLabel, Signature, TBasisLabel, Truncation, UBasisLabel};
use crate::weylracah::weyl_block;

fn rel(name: &str, src: &str) -> Relation {
    Relation::parse(name, src).expect("built-in relation parses")
}

/// Conjugation relations in an orthonormal basis.
///
/// `A13^+` is given in two equivalent forms, together with the identity that
/// makes them equivalent and the matching form of `A31^+`.
pub fn hermiticity_relations() -> Vec<Relation> {
    vec![
        rel("A12^+ = A21", "A12^+ - A21"),
        rel("A21^+ = A12", "A21^+ - A12"),
        rel("A23^+ = -A32", "A23^+ + A32"),
        rel("A32^+ = -A23", "A32^+ + A23"),
        rel("A13^+ = -A31 + (q-q^-1) A21 A32", "A13^+ + A31 - q*A21*A32 + q^-1*A21*A32"),
        rel("A13^+ = -q^2 A31 + (q^2-1) A32 A21", "A13^+ + q^2*A31 - q^2*A32*A21 + A32*A21"),
        rel(
            "both A13^+ forms agree",
            "-A31 + q*A21*A32 - q^-1*A21*A32 + q^2*A31 - q^2*A32*A21 + A32*A21",
        ),
        rel("A31^+ = -(A12 A23 - q^-1 A23 A12)", "A31^+ + A12*A23 - q^-1*A23*A12"),
    ]
}

/// Commutation relations of the su_q(1,1) subalgebra `T+ = A23`,
/// `T- = A32`, `T0 = (A22 - A33)/2`.
pub fn su11_relations() -> Vec<Relation> {
    vec![
        rel("[T0,T+] = T+", "1/2*A22*A23 - 1/2*A23*A22 - 1/2*A33*A23 + 1/2*A23*A33 - A23"),
        rel("[T0,T-] = -T-", "1/2*A22*A32 - 1/2*A32*A22 - 1/2*A33*A32 + 1/2*A32*A33 + A32"),
        rel("[T+,T-] = [2T0]", "A23*A32 - A32*A23 - [A22-A33]"),
    ]
}

/// Commutation relations of the su_q(2) subalgebra `U+ = A12`,
/// `U- = A21`, `U0 = (A11 - A22)/2`.
pub fn su2_relations() -> Vec<Relation> {
    vec![
        rel("[U0,U+] = U+", "1/2*A11*A12 - 1/2*A12*A11 - 1/2*A22*A12 + 1/2*A12*A22 - A12"),
        rel("[U0,U-] = -U-", "1/2*A11*A21 - 1/2*A21*A11 - 1/2*A22*A21 + 1/2*A21*A22 + A21"),
        rel("[U+,U-] = [2U0]", "A12*A21 - A21*A12 - [A11-A22]"),
    ]
}

/// Residual of `rel` on every interior column.
pub fn check_relation<L: TableLabel>(rep: &TruncatedRep<L>, relation: &Relation, tol: f64) -> CheckReport {
    let name = format!("{} [{} basis]", relation.name, L::KIND);
    let mut report = CheckReport::new(name, tol);
    for col in rep.interior_indices() {
        let (v, scale) = relation.apply(rep, &rep.unit(col));
        let r = max_abs(&v) / scale.max(1.0);
        report.observe(r, || {
            let row = argmax_abs(&v).map(|(i, _)| rep.basis[i].to_string()).unwrap_or_default();
            format!("column {} row {}", rep.basis[col], row)
        });
    }
    report
}

pub fn check_su11_relations(rep: &TruncatedRep<TBasisLabel>, tol: f64) -> Vec<CheckReport> {
    su11_relations().iter().map(|r| check_relation(rep, r, tol)).collect()
}

pub fn check_su2_relations(rep: &TruncatedRep<UBasisLabel>, tol: f64) -> Vec<CheckReport> {
    su2_relations().iter().map(|r| check_relation(rep, r, tol)).collect()
}

pub fn check_hermiticity<L: TableLabel>(rep: &TruncatedRep<L>, tol: f64) -> Vec<CheckReport> {
    hermiticity_relations().iter().map(|r| check_relation(rep, r, tol)).collect()
}

/// `C2 = T- T+ + [T0 + 1/2]^2` is diagonal with entry `[T + 1/2]^2`.
///
/// The note lists the smallest gap between eigenvalues of different `T`
/// sharing a weight space; a zero gap is reported, not asserted through.
pub fn check_casimir(rep: &TruncatedRep<TBasisLabel>, tol: f64) -> CheckReport {
    let ctx = rep.ctx();
    let c2 = casimir_operator();
    let mut report = CheckReport::new("C2 = [T+1/2]^2 [t basis]", tol);
    for col in rep.interior_indices() {
        let label = rep.basis[col];
        let lambda = casimir_su11_eigenvalue(label.t, ctx).to_float(ctx.prec());
        let (mut v, scale) = c2.apply(rep, &rep.unit(col));
        let mut e = SparseVec::new();
        e.insert(col, lambda.clone());
        axpy(&mut v, &Float::with_val(ctx.prec(), -1), &e);
        let r = max_abs(&v) / scale.max(lambda.to_f64().abs()).max(1.0);
        report.observe(r, || format!("column {label}"));
    }
    let mut min_gap = f64::INFINITY;
    let mut degenerate = Vec::new();
    for w in weights_up_to_level(&rep.sig, rep.trunc.complete_level()) {
        let space = TBasisLabel::weight_space(&rep.sig, &w);
        for (i, a) in space.iter().enumerate() {
            for b in &space[i + 1..] {
                if a.t == b.t {
                    continue;
                }
                let la = casimir_su11_eigenvalue(a.t, ctx);
                let lb = casimir_su11_eigenvalue(b.t, ctx);
                let gap = (la - lb).abs().to_f64() / la_scale(a.t, ctx);
                if gap < min_gap {
                    min_gap = gap;
                }
                if gap <= tol {
                    degenerate.push(format!("T={} and T={} at {w}", a.t, b.t));
                }
            }
        }
    }
    let note = if degenerate.is_empty() {
        if min_gap.is_finite() {
            format!("distinct T eigenvalues separated by at least {min_gap:.3e}")
        } else {
            "no weight space holds two T values".to_string()
        }
    } else {
        format!("degenerate eigenvalues: {}", degenerate.join("; "))
    };
    report.with_note(note)
}

fn la_scale(t: HalfInt, ctx: &EvalContext) -> f64 {
    casimir_su11_eigenvalue(t, ctx).to_f64().abs().max(1.0)
}

fn casimir_operator() -> Relation {
    rel("C2", "A32*A23 + [1/2*A22-1/2*A33+1/2]^2")
}

/// `P^T = sum_r C_r T+^r T-^r` applied to `v`.
fn apply_pt(rep: &TruncatedRep<TBasisLabel>, t: HalfInt, v: &SparseVec) -> SparseVec {
    let ctx = rep.ctx();
    let mut out = SparseVec::new();
    let mut lowered = v.clone();
    for r in 0..=t.twice().max(0) {
        if r > 0 {
            lowered = rep.apply(Gen::A32, &lowered);
        }
        if lowered.is_empty() {
            break;
        }
        let mut x = lowered.clone();
        for _ in 0..r {
            x = rep.apply(Gen::A23, &x);
        }
        axpy(&mut out, &projector_t_coeff(t, r, ctx).to_float(ctx.prec()), &x);
    }
    out
}

fn sub(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = a.clone();
    let minus = Float::with_val(a.values().chain(b.values()).map(|x| x.prec()).max().unwrap_or(64), -1);
    axpy(&mut out, &minus, b);
    out
}

/// Extremal projector on the weight-`(T+1)` subspaces that contain a vector
/// of spin `T`.
///
/// In each such subspace: `T- P = 0`, `P^2 = P`, `P` fixes `|T, T+1>`,
/// `P T-^x T+^x P = (-1)^x N^2(T, T+1+x) P` for every `x` inside the window,
/// and `P` equals the spectral projector of `C2` onto `[T+1/2]^2`, built by
/// Lagrange interpolation over the `C2` spectrum present in the subspace.
/// The coefficient recursion `C_{r-1} + [r][r-2T-1] C_r = 0` and `C_0 = 1`
/// are checked as well.
pub fn check_projector(rep: &TruncatedRep<TBasisLabel>, t: HalfInt, tol: f64) -> CheckReport {
    let ctx = rep.ctx();
    let prec = ctx.prec();
    let mut report = CheckReport::new(format!("projector P^T, T={t} [t basis]"), tol);

    let c0 = projector_t_coeff(t, 0, ctx);
    report.observe((c0.to_f64() - 1.0).abs(), || "C_0".into());
    for r in 1..=t.twice() {
        let lhs = projector_t_coeff(t, r - 1, ctx)
            + qnum(r, ctx) * qnum(r - t.twice() - 1, ctx) * projector_t_coeff(t, r, ctx);
        let scale = projector_t_coeff(t, r - 1, ctx).to_f64().abs().max(1.0);
        report.observe(lhs.to_f64().abs() / scale, || format!("recursion at r={r}"));
    }

    let bottoms: Vec<usize> = (0..rep.dim()).filter(|&i| rep.basis[i].t == t && rep.basis[i].depth() == 0).collect();
    let mut degenerate = Vec::new();
    for &b in &bottoms {
        let w = *rep.weight(b);
        let space: Vec<TBasisLabel> =
            TBasisLabel::weight_space(&rep.sig, &w).into_iter().filter(|l| l.m == t + HalfInt::ONE).collect();
        let Some(idx) = space.iter().map(|l| rep.index_of(l)).collect::<Option<Vec<usize>>>() else {
            continue;
        };
        let sector = |what: &str, col: usize| format!("{what} at {w}, column {}", rep.basis[col]);

        let images: Vec<SparseVec> = idx.iter().map(|&i| apply_pt(rep, t, &rep.unit(i))).collect();
        for (&i, pv) in idx.iter().zip(&images) {
            let lowered = rep.apply(Gen::A32, pv);
            report.observe(max_abs(&lowered) / max_abs(pv).max(1.0), || sector("T- P", i));
            let twice = apply_pt(rep, t, pv);
            report.observe(max_abs(&sub(&twice, pv)) / max_abs(pv).max(1.0), || sector("P^2 - P", i));
        }
        let fixed = sub(&images[idx.iter().position(|&i| i == b).expect("bottom in sector")], &rep.unit(b));
        report.observe(max_abs(&fixed), || sector("P|T,T+1> - |T,T+1>", b));

        for x in 1..=rep.trunc.depth {
            let top = TBasisLabel::from_parts(rep.basis[b].s, rep.basis[b].p, t, t + HalfInt::from_int(x + 1));
            if rep.index_of(&top).is_none() {
                break;
            }
            let n2 = crate::generators::norm_su11_sq(t, top.m, ctx).expect("valid su11 label").to_float(prec);
            let sign = if x % 2 == 0 { 1 } else { -1 };
            for (&i, pv) in idx.iter().zip(&images) {
                let mut y = pv.clone();
                for _ in 0..x {
                    y = rep.apply(Gen::A23, &y);
                }
                for _ in 0..x {
                    y = rep.apply(Gen::A32, &y);
                }
                let lhs = apply_pt(rep, t, &y);
                let mut rhs = SparseVec::new();
                axpy(&mut rhs, &Float::with_val(prec, &n2 * sign), pv);
                let scale = n2.to_f64().abs().max(1.0);
                report.observe(max_abs(&sub(&lhs, &rhs)) / scale, || sector(&format!("P T-^{x} T+^{x} P, x={x}"), i));
            }
        }

        // Spectral projector of C2 onto [T+1/2]^2, needs one step of depth.
        let spins: Vec<HalfInt> = {
            let mut s: Vec<HalfInt> = space.iter().map(|l| l.t).collect();
            s.sort();
            s.dedup();
            s
        };
        let raised_ok = space
            .iter()
            .all(|l| rep.index_of(&TBasisLabel::from_parts(l.s, l.p, l.t, l.m + HalfInt::ONE)).is_some());
        if !raised_ok {
            continue;
        }
        let lambda_t = casimir_su11_eigenvalue(t, ctx);
        let mut usable = true;
        for s in spins.iter().filter(|s| **s != t) {
            let gap = (lambda_t.clone() - casimir_su11_eigenvalue(*s, ctx)).abs().to_f64();
            if gap <= tol * la_scale(t, ctx) {
                degenerate.push(format!("T={t} and T={s} at {w}"));
                usable = false;
            }
        }
        if !usable {
            continue;
        }
        let c2 = casimir_operator();
        for (&i, pv) in idx.iter().zip(&images) {
            let mut e = rep.unit(i);
            for s in spins.iter().filter(|s| **s != t) {
                let ls = casimir_su11_eigenvalue(*s, ctx);
                let denom = (lambda_t.clone() - ls.clone()).to_float(prec);
                let (ce, _) = c2.apply(rep, &e);
                let mut next = ce;
                axpy(&mut next, &Float::with_val(prec, -ls.to_float(prec)), &e);
                e = next.into_iter().map(|(k, v)| (k, Float::with_val(prec, v / &denom))).collect();
            }
            report.observe(max_abs(&sub(&e, pv)), || sector("P - spectral projector of C2", i));
        }
    }
    if bottoms.is_empty() {
        report.no_coverage = report.checked == 0;
    }
    if !degenerate.is_empty() {
        report = report.with_note(format!("C2 degenerate: {}", degenerate.join("; ")));
    }
    report
}

/// Weyl blocks carry every generator matrix of the U basis into the one of
/// the T basis: `W(w')^T M_U(g) W(w) = M_T(g)` for each weight `w` with both
/// `w` and `w' = w + e_i - e_j` complete inside the window.
pub fn check_intertwiner(
    rep_u: &TruncatedRep<UBasisLabel>,
    rep_t: &TruncatedRep<TBasisLabel>,
    tol: f64,
) -> CheckReport {
    let sig = rep_u.sig;
    let ctx = rep_u.ctx();
    let prec = ctx.prec();
    let level = rep_u.trunc.complete_level().min(rep_t.trunc.complete_level());
    let mut report = CheckReport::new("W^T M_U W = M_T", tol);
    let weights = weights_up_to_level(&sig, level);
    let blocks: std::collections::HashMap<_, _> = weights
        .iter()
        .map(|w| (*w, weyl_block(&sig, w, ctx).expect("nonempty weight").to_float(ctx)))
        .collect();
    for w in &weights {
        let b = &blocks[w];
        let rows_u = UBasisLabel::weight_space(&sig, w);
        let cols_t = TBasisLabel::weight_space(&sig, w);
        for g in Gen::all() {
            let w2 = if g.is_diagonal() { *w } else { w.shifted(g.i(), g.j()) };
            let Some(b2) = blocks.get(&w2) else { continue };
            let rows_u2 = UBasisLabel::weight_space(&sig, &w2);
            let cols_t2 = TBasisLabel::weight_space(&sig, &w2);
            let mu = rep_u.matrix(g);
            let mt = rep_t.matrix(g);
            for (j, tj) in cols_t.iter().enumerate() {
                let tj_idx = rep_t.index_of(tj).expect("complete weight inside window");
                // M_U W e_j, expressed on the U labels of w2.
                let mut mw = vec![Float::new(prec); rows_u2.len()];
                for (a, ua) in rows_u.iter().enumerate() {
                    let ua_idx = rep_u.index_of(ua).expect("complete weight inside window");
                    for (row, val) in mu.column(ua_idx) {
                        if let Some(pos) = rows_u2.iter().position(|x| x == &rep_u.basis[*row]) {
                            mw[pos] += Float::with_val(prec, val * &b[a][j]);
                        }
                    }
                }
                for (i, ti) in cols_t2.iter().enumerate() {
                    let mut lhs = Float::new(prec);
                    for (a, x) in mw.iter().enumerate() {
                        lhs += Float::with_val(prec, &b2[a][i] * x);
                    }
                    let ti_idx = rep_t.index_of(ti).expect("complete weight inside window");
                    let rhs = mt.get(ti_idx, tj_idx).cloned().unwrap_or_else(|| Float::new(prec));
                    let scale = rhs.to_f64().abs().max(lhs.to_f64().abs()).max(1.0);
                    let r = Float::with_val(prec, &lhs - &rhs).abs().to_f64() / scale;
                    report.observe(r, || {
                        let entry = mt.entry(ti_idx, tj_idx).unwrap_or("no T-basis entry");
                        format!("{g} weight {w} row {ti} col {tj} (entry {entry})")
                    });
                }
            }
        }
    }
    report
}

/// Closed form of `N²(kℓ)` against the recursions in `ℓ` and `k`, over
/// `k <= f1 - f2`, `ℓ <= l_max`. Exact contexts compare exactly: any
/// difference is a failure regardless of tolerance.
pub fn check_norm_recursions(sig: &Signature, l_max: i64, ctx: &EvalContext, tol: f64) -> CheckReport {
    let exact = ctx.is_exact();
    let name = if exact { "N^2(kl) closed form = recursions (exact)" } else { "N^2(kl) closed form = recursions" };
    let mut report = CheckReport::new(name, if exact { 0.0 } else { tol });
    for k in 0..=sig.width() {
        for l in 0..=l_max {
            let loc = || format!("k={k} l={l}");
            match (norm_u_sq(sig, k, l, ctx), norm_u_sq_recursive(sig, k, l, ctx)) {
                (Ok(a), Ok(b)) => {
                    let r = if exact {
                        if a == b {
                            0.0
                        } else {
                            ((a.clone() - b) / a).abs().to_f64().max(f64::MIN_POSITIVE)
                        }
                    } else {
                        ((a.clone() - b) / a).abs().to_f64()
                    };
                    report.observe(r, loc);
                }
                _ => report.observe(f64::INFINITY, loc),
            }
        }
    }
    report
}

/// Every complete Weyl block is orthogonal: `B^T B = B B^T = I`.
pub fn check_weyl_orthogonality(sig: &Signature, trunc: &Truncation, ctx: &EvalContext, tol: f64) -> CheckReport {
    let mut report = CheckReport::new("Weyl blocks orthogonal", tol);
    for w in weights_up_to_level(sig, trunc.complete_level()) {
        match weyl_block(sig, &w, ctx) {
            Ok(b) => {
                let r = b.orthogonality_residual(ctx);
                report.observe(r, || format!("weight {w} ({}x{})", b.dim(), b.dim()));
            }
            Err(e) => report.observe(f64::INFINITY, || format!("weight {w}: {e}")),
        }
    }
    report
}

fn norm_sq(v: &SparseVec, prec: u32) -> Float {
    let mut acc = Float::new(prec);
    for x in v.values() {
        acc += Float::with_val(prec, x * x);
    }
    acc
}

fn power(rep_apply: impl Fn(&SparseVec) -> SparseVec, v: SparseVec, n: i64) -> SparseVec {
    (0..n).fold(v, |x, _| rep_apply(&x))
}

/// The closed-form norms of each basis recomputed in the other basis:
/// `N²(sp) = |P^T A13^s A21^p |L>|²` with U-basis matrices and
/// `N²(kℓ) = |P^U A23^k A13^ℓ |L>|²` with T-basis matrices.
pub fn check_cross_basis_norms(
    rep_u: &TruncatedRep<UBasisLabel>,
    rep_t: &TruncatedRep<TBasisLabel>,
    tol: f64,
) -> Vec<CheckReport> {
    let sig = rep_u.sig;
    let ctx = rep_u.ctx();
    let prec = ctx.prec();
    let mut ts = CheckReport::new("N^2(sp) from U-basis matrices", tol);
    let level = rep_u.trunc.complete_level().min(rep_t.trunc.complete_level());
    let lu = rep_u.index_of(&sig.lowest_u_label()).expect("lowest label in window");
    for p in 0..=sig.width() {
        for s in 0..=level {
            let v = power(|x| rep_u.apply(Gen::A21, x), rep_u.unit(lu), p);
            let v = power(|x| rep_u.apply(Gen::A13, x), v, s);
            let t = HalfInt::from_twice(sig.f2() - sig.f3() + p + s - 2);
            let pv = {
                let mut out = SparseVec::new();
                let mut lowered = v.clone();
                for r in 0..=t.twice() {
                    if r > 0 {
                        lowered = rep_u.apply(Gen::A32, &lowered);
                    }
                    if lowered.is_empty() {
                        break;
                    }
                    let x = power(|y| rep_u.apply(Gen::A23, y), lowered.clone(), r);
                    axpy(&mut out, &projector_t_coeff(t, r, ctx).to_float(prec), &x);
                }
                out
            };
            let got = norm_sq(&pv, prec);
            let want = norm_t_sq(&sig, s, p, ctx).expect("valid s, p").to_float(prec);
            let r = Float::with_val(prec, &got - &want).abs().to_f64() / want.to_f64().abs().max(1.0);
            ts.observe(r, || format!("s={s} p={p}"));
        }
    }

    let mut us = CheckReport::new("N^2(kl) from T-basis matrices", tol);
    let lt = rep_t.index_of(&sig.lowest_t_label()).expect("lowest label in window");
    for k in 0..=sig.width() {
        for l in 0..=(level - k) {
            let v = power(|x| rep_t.apply(Gen::A13, x), rep_t.unit(lt), l);
            let v = power(|x| rep_t.apply(Gen::A23, x), v, k);
            let u = HalfInt::from_twice(sig.width() - k + l);
            // P^U = sum_r c_r U-^r U+^r. Higher U-spins are present too, so
            // raise until the vector dies rather than stopping at 2U.
            let mut pv = SparseVec::new();
            let mut raised = v.clone();
            for r in 0..=rep_t.dim() as i64 {
                if r > 0 {
                    raised = rep_t.apply(Gen::A12, &raised);
                }
                if raised.is_empty() {
                    break;
                }
                let x = power(|y| rep_t.apply(Gen::A21, y), raised.clone(), r);
                axpy(&mut pv, &projector_u_coeff(u, r, ctx).to_float(prec), &x);
            }
            let got = norm_sq(&pv, prec);
            let want = norm_u_sq(&sig, k, l, ctx).expect("valid k, l").to_float(prec);
            let r = Float::with_val(prec, &got - &want).abs().to_f64() / want.to_f64().abs().max(1.0);
            us.observe(r, || format!("k={k} l={l}"));
        }
    }
    vec![ts, us]
}
