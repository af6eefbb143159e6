//! Construct star products, inspect the canonical labeling and export the
//! result as graph6 and edge-list text.
//!
//! Run with: cargo run --example build_product

use starprod::graph::Graph;
use starprod::graph6;
use starprod::product::{star_product, VertexClass};

fn main() -> starprod::Result<()> {
    for (name1, g1, name2, g2) in [
        ("K2", Graph::complete(2)?, "K3", Graph::complete(3)?),
        ("K3", Graph::complete(3)?, "K2", Graph::complete(2)?),
    ] {
        let product = star_product(&g1, &g2);
        println!("{name1} * {name2}:");
        println!("  order {}", product.graph.order());
        println!(
            "  edges {} (formula n2^2 (n1 + e1) + n1 e2 = {})",
            product.graph.size(),
            product.expected_edge_count()
        );
        println!("  graph6 {}", graph6::to_graph6(&product.graph));
        println!();
    }

    // The labeling maps indices back to (class, i, k) coordinates.
    let g1 = Graph::complete(2)?;
    let g2 = Graph::complete(2)?;
    let product = star_product(&g1, &g2);
    println!("K2 * K2 labeling:");
    for index in 0..product.labeling.len() {
        let label = product.labeling.label(index);
        let class = match label.class {
            VertexClass::A => 'a',
            VertexClass::B => 'b',
        };
        println!("  vertex {index} = {class}[i={}, k={}]", label.i, label.k);
    }

    // Degrees follow the two closed forms: a-vertices n2 (d1 + 1),
    // b-vertices d2 + n2.
    let degrees = product.graph.degree_profile().degrees;
    println!("  degrees: {degrees:?}");

    // Edge-list text round-trips through the parser.
    let text = product.graph.to_edge_list();
    assert_eq!(Graph::from_edge_list(&text)?, product.graph);
    println!("  edge-list export parses back identically");
    Ok(())
}
