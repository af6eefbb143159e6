//! The central check: the closed-form Laplacian and signless-Laplacian
//! characteristic polynomials of the star product equal the directly
//! computed ones, coefficient for coefficient, in exact integer arithmetic.
//!
//! Run with: cargo run --example closed_form_vs_direct

use starprod::graph::Graph;
use starprod::product::star_product;
use starprod::spectra::{product_charpoly_closed_factors, MatrixKind};

fn main() -> starprod::Result<()> {
    let pairs = [
        ("K2", Graph::complete(2)?, "K2", Graph::complete(2)?),
        ("K2", Graph::complete(2)?, "K3", Graph::complete(3)?),
        ("C4", Graph::cycle(4)?, "K3", Graph::complete(3)?),
        ("C5", Graph::cycle(5)?, "K2", Graph::complete(2)?),
        ("Q3", Graph::hypercube(3)?, "K2", Graph::complete(2)?),
    ];
    for (name1, g1, name2, g2) in pairs {
        println!("{name1} * {name2}:");
        for kind in [MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let factors = product_charpoly_closed_factors(&g1, &g2, kind)?;
            let closed = factors.expand();
            let direct = kind
                .matrix(&star_product(&g1, &g2).graph)
                .char_poly()?;
            println!(
                "  {}: degree {}, closed == direct: {}",
                kind.letter(),
                closed.degree(),
                closed == direct
            );
            if g1.order() * g2.order() <= 4 {
                println!("     linear    = {}", factors.linear);
                println!("     shifted   = {}", factors.shifted);
                println!("     quadratic = {}", factors.quadratic);
                println!("     expanded  = {closed}");
            }
        }
    }
    Ok(())
}
