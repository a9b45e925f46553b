// Enumerate both bases of a truncated representation and compare weights.

use uq21::repspace::{
    classify, gg_from_label, weights_up_to_level, BasisLabel, Signature, TBasisLabel, Truncation, UBasisLabel,
};
use uq21::Result;

/// Returns the number of U-basis and T-basis labels found.
pub fn run_example() -> Result<(usize, usize)> {
    let sig: Signature = "4,2,-2".parse()?;
    println!("{sig} belongs to the {} series", classify(&sig));

    let trunc = Truncation::uniform(1);
    let u = UBasisLabel::enumerate(&sig, &trunc);
    for l in &u {
        println!("{l}  weight {}  pattern {}", l.weight(&sig)?, gg_from_label(&sig, l)?);
    }
    let t = TBasisLabel::enumerate(&sig, &trunc);

    // Complete weight spaces have the same dimension in both bases.
    for w in weights_up_to_level(&sig, trunc.complete_level()) {
        let du = UBasisLabel::weight_space(&sig, &w).len();
        let dt = TBasisLabel::weight_space(&sig, &w).len();
        println!("weight {w}: dim {du} (U) = {dt} (T)");
    }
    Ok((u.len(), t.len()))
}

fn main() {
    let (u, t) = run_example().expect("basis example");
    println!("{u} U-basis labels, {t} T-basis labels");
}
