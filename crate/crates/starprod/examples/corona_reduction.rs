//! With a one-vertex second factor the star product degenerates to the
//! corona with single pendant vertices: the graphs coincide under the
//! canonical labeling and the closed-form polynomial equals the corona's.
//!
//! Run with: cargo run --example corona_reduction

use starprod::graph::Graph;
use starprod::product::{corona, star_product};
use starprod::spectra::{product_charpoly_closed, MatrixKind};

fn main() -> starprod::Result<()> {
    let single = Graph::complete(1)?;
    for (name, g1) in [
        ("K2", Graph::complete(2)?),
        ("C4", Graph::cycle(4)?),
        ("K3,3", Graph::complete_bipartite(3, 3)?),
    ] {
        let product = star_product(&g1, &single);
        let pendant = corona(&g1, &single);
        println!("{name} * K1 vs {name} with pendants:");
        println!("  identical graphs: {}", product.graph == pendant);

        let closed = product_charpoly_closed(&g1, &single, MatrixKind::Laplacian)?;
        let direct = pendant.laplacian_matrix().char_poly()?;
        println!("  closed L form == corona polynomial: {}", closed == direct);
        println!("  f(x) = {closed}");
        println!();
    }

    // The two-vertex corona is the path on four vertices.
    let path = corona(&Graph::complete(2)?, &single);
    println!(
        "K2 with pendants: order {}, diameter {:?} (the 4-path)",
        path.order(),
        path.diameter()
    );
    Ok(())
}
