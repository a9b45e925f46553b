// q-numbers and q-factorials, exactly at rational q and in float mode.

use rug::Rational;
use uq21::qarith::{qnum_half_sq, EvalContext};
use uq21::{qfact, qnum, Result};

pub fn run_example() -> Result<()> {
    let exact = EvalContext::exact(Rational::from((13, 10)))?;
    let float = EvalContext::parse("1.3", uq21::Mode::Float, 30)?;

    for n in 0..=5 {
        println!("[{n}] = {}  ~ {}", qnum(n, &exact), qnum(n, &float).render(float.digits()));
    }
    println!("[4]! = {}", qfact(4, &exact)?);

    // [x]^2 for half-integer x stays rational even though [x] does not.
    println!("[5/2]^2 = {}", qnum_half_sq(5, &exact));

    let classical = EvalContext::exact(Rational::from(1))?;
    println!("at q = 1: [7] = {}, [5]! = {}", qnum(7, &classical), qfact(5, &classical)?);
    Ok(())
}

fn main() {
    run_example().expect("q-number example");
}
