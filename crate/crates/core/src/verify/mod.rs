//! Verification harness: truncated matrix representations and executable
//! checks of the algebraic identities they must satisfy.

mod checks;
mod relation;
mod suite;
mod truncated;

use std::fmt;

use serde::Serialize;

pub use checks::{
    check_casimir, check_cross_basis_norms, check_hermiticity, check_intertwiner, check_norm_recursions,
    check_projector, check_relation, check_su11_relations, check_su2_relations, check_weyl_orthogonality,
    hermiticity_relations, su11_relations, su2_relations,
};
pub use relation::{Op, Relation};
pub use suite::{run_suite, SuiteConfig};
pub use truncated::{SparseMatrix, SparseVec, TruncatedRep};

/// Relative tolerance used unless configured otherwise.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Outcome of one check. Residuals are relative: each is divided by the
/// larger of one and the magnitude of the quantities being compared.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub max_residual: f64,
    /// Where the largest residual occurred.
    pub location: Option<String>,
    pub tolerance: f64,
    /// Number of columns, blocks or grid points examined.
    pub checked: usize,
    pub passed: bool,
    /// Set when nothing was examined; such a check passes vacuously.
    pub no_coverage: bool,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, tolerance: f64) -> Self {
        CheckReport {
            name: name.into(),
            max_residual: 0.0,
            location: None,
            tolerance,
            checked: 0,
            passed: true,
            no_coverage: true,
            note: None,
        }
    }

    /// Records one examined item with its residual.
    pub fn observe(&mut self, residual: f64, location: impl FnOnce() -> String) {
        self.checked += 1;
        self.no_coverage = false;
        // NaN must count as a failure.
        if !(residual <= self.max_residual) {
            self.max_residual = residual;
            self.location = Some(location());
        }
        self.passed = self.max_residual <= self.tolerance;
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Folds `other` into this report, keeping the worst residual.
    pub fn absorb(&mut self, other: &CheckReport) {
        if other.no_coverage {
            return;
        }
        self.checked += other.checked;
        self.no_coverage = false;
        if !(other.max_residual <= self.max_residual) {
            self.max_residual = other.max_residual;
            self.location = other.location.clone();
        }
        self.passed = self.passed && other.passed && self.max_residual <= self.tolerance;
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed, self.no_coverage) {
            (true, true) => "PASS (no coverage)",
            (true, false) => "PASS",
            (false, _) => "FAIL",
        };
        write!(
            f,
            "{status:<5} {} max_residual={:.3e} tol={:.0e} checked={}",
            self.name, self.max_residual, self.tolerance, self.checked
        )?;
        if let Some(loc) = &self.location {
            if !self.passed {
                write!(f, " at {loc}")?;
            }
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}
