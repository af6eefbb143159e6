//! The Wiener index of the product in all evaluated closed-form variants:
//! the face-value form (exact only while the second factor has diameter at
//! most 2), the distance-capped form (exact always), and the rejected
//! low-order coefficient variant, each against the BFS oracle.
//!
//! Run with: cargo run --example wiener_variants

use starprod::graph::Graph;
use starprod::invariants::{wiener_bfs, wiener_product_closed};
use starprod::product::star_product;

fn main() -> starprod::Result<()> {
    for (name1, g1, name2, g2) in [
        ("K2", Graph::complete(2)?, "K3", Graph::complete(3)?),
        ("K2", Graph::complete(2)?, "P3", Graph::path(3)?),
        ("K2", Graph::complete(2)?, "P4", Graph::path(4)?),
        ("K3", Graph::complete(3)?, "Q3", Graph::hypercube(3)?),
    ] {
        let closed = wiener_product_closed(&g1, &g2)?;
        let oracle = wiener_bfs(&star_product(&g1, &g2).graph)?;
        println!("{name1} * {name2}:");
        println!("  BFS oracle            = {oracle}");
        println!(
            "  capped closed form    = {} ({})",
            closed.capped,
            verdict(closed.capped == oracle)
        );
        match &closed.uncapped {
            Some(v) => println!(
                "  face-value form       = {v} ({}, diam(G2) <= 2: {})",
                verdict(*v == oracle),
                closed.uncapped_applicable
            ),
            None => println!("  face-value form       = undefined"),
        }
        match &closed.low_order_variant {
            Some(v) => println!(
                "  low-order coefficient = {v} ({})",
                verdict(*v == oracle)
            ),
            None => println!("  low-order coefficient = undefined"),
        }
        println!();
    }
    Ok(())
}

fn verdict(matches: bool) -> &'static str {
    if matches {
        "matches oracle"
    } else {
        "rejected by oracle"
    }
}
