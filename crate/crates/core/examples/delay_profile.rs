//! Measure the gap between consecutive outputs, in traversal nodes and in
//! wall time, on disjoint triples (3^t minimal transversals).
//!
//! cargo run --release --example delay_profile -- 8

use std::time::Instant;

use lexhit::OrderedHypergraph;

fn main() -> lexhit::Result<()> {
    let t: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let h = OrderedHypergraph::from_edge_lists(
        3 * t,
        (0..t).map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2]),
    )?;

    let mut it = lexhit::enumerate(&h);
    let mut gaps = Vec::new();
    let mut last = Instant::now();
    while it.next().is_some() {
        gaps.push(last.elapsed());
        last = Instant::now();
    }
    gaps.sort();
    let stats = it.finish();
    println!("n = {}, outputs = {}", h.vertex_count(), stats.outputs);
    println!(
        "node gap: max {} (bound {}), before first {}",
        stats.max_delay_nodes.unwrap_or(0),
        stats.delay_bound(),
        stats.nodes_before_first_output.unwrap_or(0)
    );
    println!(
        "oracle calls: {}, tuples examined: {}",
        stats.oracle_calls, stats.tuples_examined
    );
    if !gaps.is_empty() {
        println!(
            "wall gap: min {:?}, median {:?}, max {:?}",
            gaps[0],
            gaps[gaps.len() / 2],
            gaps[gaps.len() - 1]
        );
    }
    stats.check_bounds().expect("instrumented bounds hold");
    Ok(())
}
