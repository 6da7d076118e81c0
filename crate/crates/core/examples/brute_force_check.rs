//! Cross-check the enumerator against exhaustive search on random
//! hypergraphs.
//!
//! cargo run --example brute_force_check -- 500

use lexhit::cli::verify_against;
use lexhit::reference::BruteForce;
use lexhit::OrderedHypergraph;
use rand::{Rng, SeedableRng};

fn main() {
    let count: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let bf = BruteForce::from_env();
    let mut failed = 0;
    for i in 0..count {
        let n = rng.gen_range(1..=10);
        let m = rng.gen_range(0..=12);
        let edges: Vec<Vec<usize>> = (0..m)
            .map(|_| (0..n).filter(|_| rng.gen_bool(0.3)).collect())
            .collect();
        let h = OrderedHypergraph::from_edge_lists(n, edges).expect("indices in range");
        let expected = bf.all_minimal_transversals(&h).expect("n within cap");
        let report = verify_against(&h, &expected);
        if !report.passed() {
            failed += 1;
            println!("instance {i} failed:\n{}{report}", h.to_text());
        }
    }
    println!("{} of {count} instances verified", count - failed);
    std::process::exit(i32::from(failed > 0));
}
