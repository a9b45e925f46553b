// q-Racah coefficients, alone and as the source of a Weyl coefficient.

use rug::Rational;
use uq21::repspace::{u_weight_space, t_weight_space, Signature, Weight};
use uq21::weylracah::{qracah, weyl_coefficient, weyl_via_racah, RacahArgs};
use uq21::{EvalContext, Result};

pub fn run_example() -> Result<()> {
    let ctx = EvalContext::exact(Rational::from((3, 2)))?;
    let args: RacahArgs = "1,1,1,1,1,1".parse()?;
    println!("{args} = {}", qracah(&args, &ctx));

    let sig = Signature::new(5, 2, -1)?;
    let w = Weight::new(5, 3, -2);
    for u in u_weight_space(&sig, &w) {
        for t in t_weight_space(&sig, &w) {
            let direct = weyl_coefficient(&sig, &u, &t, &ctx)?;
            let via = weyl_via_racah(&sig, &u, &t, &ctx)?;
            println!("<{u}|{t}> = {}", direct.to_float(&ctx).to_f64());
            println!("    from {}: {} and {}", via.args, via.first.to_float(&ctx).to_f64(), via.second.to_float(&ctx).to_f64());
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("Racah example");
}
