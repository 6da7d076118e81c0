//! Stream the minimal transversals of a hypergraph file in lexicographic order.
//!
//! cargo run --example enumerate_lex -- data/keys.hg

use lexhit::OrderedHypergraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/keys.hg").to_string());
    let h = OrderedHypergraph::parse(&std::fs::read_to_string(&path)?)?;
    println!(
        "{} vertices, {} edges, rank {}",
        h.vertex_count(),
        h.edge_count(),
        h.rank()
    );

    let mut it = lexhit::enumerate(&h);
    for (i, s) in it.by_ref().enumerate() {
        println!("{:>3}: {{{}}}", i + 1, h.labels(&s).join(", "));
    }
    let stats = it.stats();
    println!(
        "{} transversals, {} oracle calls, largest gap {} nodes (bound {})",
        stats.outputs,
        stats.oracle_calls,
        stats.max_delay_nodes.unwrap_or(0),
        stats.delay_bound()
    );
    Ok(())
}
