use super::checks::{
    check_casimir, check_cross_basis_norms, check_hermiticity, check_intertwiner, check_norm_recursions,
    check_projector, check_relation, check_su11_relations, check_su2_relations, check_weyl_orthogonality,
};
use super::relation::Relation;
use super::truncated::TruncatedRep;
use super::{CheckReport, DEFAULT_TOLERANCE};
use crate::error::Result;
use crate::generators::Tables;
use crate::halfint::HalfInt;
use crate::qarith::EvalContext;
use crate::repspace::{BasisKind, Signature, TBasisLabel, Truncation, UBasisLabel};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub sig: Signature,
    pub trunc: Truncation,
    pub ctx: EvalContext,
    pub tolerance: f64,
    /// Checked in both bases besides the built-in ones.
    pub relations: Vec<Relation>,
    /// Flip the sign of one table entry before building the matrices.
    pub fault: Option<(BasisKind, String)>,
}

impl SuiteConfig {
    pub fn new(sig: Signature, trunc: Truncation, ctx: EvalContext) -> Self {
        SuiteConfig { sig, trunc, ctx, tolerance: DEFAULT_TOLERANCE, relations: Vec::new(), fault: None }
    }
}

/// Spins `T` of the extremal vectors that sit inside the complete levels.
fn projector_spins(rep: &TruncatedRep<TBasisLabel>) -> Vec<HalfInt> {
    let level = rep.trunc.complete_level();
    let mut spins: Vec<HalfInt> =
        rep.basis.iter().filter(|l| l.depth() == 0 && l.level() <= level).map(|l| l.t).collect();
    spins.sort();
    spins.dedup();
    spins
}

/// Runs every check on one signature, truncation and deformation parameter.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let tables = match &cfg.fault {
        Some((kind, name)) => Tables::standard().with_flipped_sign(*kind, name)?,
        None => Tables::standard().clone(),
    };
    let tol = cfg.tolerance;
    let rep_u = TruncatedRep::<UBasisLabel>::build_with(&tables, &cfg.sig, &cfg.trunc, &cfg.ctx)?;
    let rep_t = TruncatedRep::<TBasisLabel>::build_with(&tables, &cfg.sig, &cfg.trunc, &cfg.ctx)?;

    let mut out = vec![
        check_weyl_orthogonality(&cfg.sig, &cfg.trunc, &cfg.ctx, tol),
        check_norm_recursions(&cfg.sig, cfg.trunc.l_max, &cfg.ctx, tol),
    ];
    out.extend(check_hermiticity(&rep_u, tol));
    out.extend(check_hermiticity(&rep_t, tol));
    out.extend(check_su2_relations(&rep_u, tol));
    out.extend(check_su11_relations(&rep_t, tol));
    out.push(check_casimir(&rep_t, tol));
    for t in projector_spins(&rep_t) {
        out.push(check_projector(&rep_t, t, tol));
    }
    out.push(check_intertwiner(&rep_u, &rep_t, tol));
    out.extend(check_cross_basis_norms(&rep_u, &rep_t, tol));
    for r in &cfg.relations {
        out.push(check_relation(&rep_u, r, tol));
        out.push(check_relation(&rep_t, r, tol));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn config(sig: (i64, i64, i64), q: (i64, i64), n: i64) -> SuiteConfig {
        let sig = Signature::new(sig.0, sig.1, sig.2).unwrap();
        let ctx = EvalContext::exact(Rational::from(q)).unwrap();
        SuiteConfig::new(sig, Truncation::uniform(n), ctx)
    }

    #[test]
    fn suite_passes() {
        for (sig, q) in [((4, 2, -2), (13, 10)), ((3, 1, -1), (1, 2)), ((2, 2, -1), (1, 1))] {
            let reports = run_suite(&config(sig, q, 4)).unwrap();
            for r in &reports {
                eprintln!("{r}");
            }
            assert!(reports.iter().all(|r| r.passed), "{sig:?} {q:?}");
        }
    }

    #[test]
    fn flipped_sign_is_caught() {
        let mut cfg = config((4, 2, -2), (13, 10), 3);
        cfg.fault = Some((BasisKind::T, "t.A13(s+1)".into()));
        let reports = run_suite(&cfg).unwrap();
        let w = reports.iter().find(|r| r.name.starts_with("W^T")).unwrap();
        assert!(!w.passed);
        assert!(w.location.as_deref().unwrap().contains("t.A13(s+1)"), "{w}");
    }
}
