// Run every check on a truncated representation, with one extra relation.

use rug::Rational;
use uq21::repspace::{Signature, Truncation};
use uq21::verify::{run_suite, Relation, SuiteConfig};
use uq21::{EvalContext, Result};

/// Returns true when all checks pass.
pub fn run_example() -> Result<bool> {
    let sig = Signature::new(3, 1, -1)?;
    let ctx = EvalContext::exact(Rational::from((9, 10)))?;
    let mut cfg = SuiteConfig::new(sig, Truncation::uniform(3), ctx);
    // Extra relations use the same text syntax as a --relations file.
    cfg.relations.push(Relation::parse("A11 A22 commute", "A11*A22 - A22*A11")?);

    let reports = run_suite(&cfg)?;
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn main() {
    let ok = run_example().expect("verification example");
    std::process::exit(if ok { 0 } else { 1 });
}
