//! Run the verification sweep programmatically: every ordered pair of test
//! graphs within the order bound, with all closed-vs-direct, oracle and
//! route-agreement checks.
//!
//! Run with: cargo run --example verification_sweep

use starprod::eigen::DEFAULT_TOLERANCE;
use starprod::sweep::run_verification;

fn main() -> starprod::Result<()> {
    // Keep the example quick with a reduced order bound; the binary's
    // `verify` subcommand runs the full bound of 60 by default.
    let run = run_verification(24, None, DEFAULT_TOLERANCE)?;
    for pair in &run.pairs {
        println!(
            "{:>5} * {:<5} order {:>2}  pass={} {}",
            pair.name1,
            pair.name2,
            pair.order,
            pair.pass(),
            if pair.numeric_spectrum { "(numeric spectrum)" } else { "" }
        );
    }
    println!(
        "corona reductions ok: {}/{}",
        run.corona.iter().filter(|c| c.ok).count(),
        run.corona.len()
    );
    println!("all checks passed: {}", run.all_pass());
    Ok(())
}
