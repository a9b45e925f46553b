// Apply generators to basis vectors in both reductions.

use rug::Rational;
use uq21::generators::{t_basis_action, u_basis_action, Gen};
use uq21::repspace::{Signature, TBasisLabel};
use uq21::{EvalContext, Result};

pub fn run_example() -> Result<()> {
    let sig = Signature::new(4, 2, -2)?;
    let ctx = EvalContext::exact(Rational::from((13, 10)))?;

    let lowest = sig.lowest_u_label();
    for g in [Gen::A13, Gen::A23, Gen::A31, Gen::A11] {
        println!("{g} {lowest}:");
        for term in u_basis_action(&sig, g, &lowest, &ctx)? {
            println!("  {} {}  ~ {}", term.coeff, term.target, term.coeff.to_float(&ctx).to_f64());
        }
    }

    let t = TBasisLabel::with_depth(&sig, 1, 1, 0)?;
    for term in t_basis_action(&sig, Gen::A12, &t, &ctx)? {
        println!("A12 {t} -> {} {}", term.coeff, term.target);
    }
    Ok(())
}

fn main() {
    run_example().expect("generator example");
}
