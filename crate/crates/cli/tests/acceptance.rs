//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

fn main() {
    let start = Instant::now();
    let outcomes = deltamat_cli::acceptance::run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed ({:.1}s)",
        outcomes.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
