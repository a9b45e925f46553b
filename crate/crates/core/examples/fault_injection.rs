// Corrupt one sign in the T-basis table and watch the intertwining check
// point at it.

use rug::Rational;
use uq21::repspace::{BasisKind, Signature, Truncation};
use uq21::verify::{run_suite, SuiteConfig};
use uq21::{EvalContext, Result};

/// Returns the location reported by the failing intertwining check.
pub fn run_example() -> Result<Option<String>> {
    let sig = Signature::new(4, 2, -2)?;
    let ctx = EvalContext::exact(Rational::from((13, 10)))?;
    let mut cfg = SuiteConfig::new(sig, Truncation::uniform(3), ctx);
    cfg.fault = Some((BasisKind::T, "t.A21(p+1)".to_string()));

    let reports = run_suite(&cfg)?;
    for r in reports.iter().filter(|r| !r.passed) {
        println!("{r}");
    }
    Ok(reports.iter().find(|r| r.name.starts_with("W^T") && !r.passed).and_then(|r| r.location.clone()))
}

fn main() {
    match run_example().expect("fault example") {
        Some(loc) => println!("intertwining failed at {loc}"),
        None => println!("fault went unnoticed"),
    }
}
