// Transformation brackets between the U and T bases on one weight space.

use rug::Rational;
use uq21::repspace::{Signature, Weight};
use uq21::weylracah::weyl_block;
use uq21::{EvalContext, Result};

/// Returns the orthogonality residual of the block.
pub fn run_example() -> Result<f64> {
    let sig = Signature::new(4, 2, -2)?;
    let ctx = EvalContext::exact(Rational::from((13, 10)))?;
    let w = Weight::new(4, 3, -3);

    let block = weyl_block(&sig, &w, &ctx)?;
    println!("weight {w}, {}x{} block", block.dim(), block.dim());
    for (u, row) in block.rows.iter().zip(&block.entries) {
        let cells: Vec<String> = row.iter().map(|e| format!("{:+.6}", e.to_float(&ctx).to_f64())).collect();
        println!("{u}  {}", cells.join("  "));
    }
    let residual = block.orthogonality_residual(&ctx);
    println!("max |B^T B - I| = {residual:.2e}");
    Ok(residual)
}

fn main() {
    run_example().expect("Weyl block example");
}
