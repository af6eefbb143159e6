//! Integrality decisions: exact integer-root extraction on the closed-form
//! polynomial agrees with the structural route through factor spectra and
//! quadratic discriminants, with reconstructible certificates either way.
//!
//! Run with: cargo run --example integrality_verdicts

use num_bigint::BigInt;
use starprod::graph::Graph;
use starprod::integrality::{is_integral, product_is_integral};
use starprod::spectra::MatrixKind;

fn main() -> starprod::Result<()> {
    // Single graphs first.
    for (name, g) in [
        ("K4", Graph::complete(4)?),
        ("C5", Graph::cycle(5)?),
        ("petersen", Graph::petersen()),
    ] {
        let verdict = is_integral(&g, MatrixKind::Laplacian)?;
        println!(
            "{name}: L-integral = {} (integer roots {:?})",
            verdict.integral,
            verdict
                .integer_roots
                .iter()
                .map(|(r, m)| format!("{r}^{m}"))
                .collect::<Vec<_>>()
        );
    }
    println!();

    // The smallest product is not Laplacian integral; the witness quadratic
    // has discriminant 32, which is not a perfect square.
    let k2 = Graph::complete(2)?;
    let report = product_is_integral(&k2, &k2, MatrixKind::Laplacian)?;
    println!("K2 * K2: L-integral = {}", report.direct.integral);
    if let Some(witness) = &report.structural_witness {
        let b = witness.coeff(1).to_integer();
        let c = witness.coeff(0).to_integer();
        println!(
            "  witness {witness} with discriminant {}",
            &b * &b - BigInt::from(4) * &c
        );
    }
    println!("  routes agree: {}", report.agree);
    println!();

    // A product that is integral: the one-vertex first factor contributes
    // only the zero eigenvalue, whose quadratic always splits.
    let k1 = Graph::complete(1)?;
    let report = product_is_integral(&k1, &k2, MatrixKind::Laplacian)?;
    println!(
        "K1 * K2: L-integral = {} (roots {:?})",
        report.direct.integral,
        report
            .direct
            .integer_roots
            .iter()
            .map(|(r, m)| format!("{r}^{m}"))
            .collect::<Vec<_>>()
    );
    println!();

    // An irrational second-factor spectrum poisons every product.
    let c5 = Graph::cycle(5)?;
    for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
        let report = product_is_integral(&k2, &c5, kind)?;
        println!(
            "K2 * C5: {}-integral = {} (second factor fails)",
            kind.letter(),
            report.direct.integral
        );
    }
    Ok(())
}
