//! The lexicographically first and last minimal transversals, and why
//! asking for the first one under a custom order is hard.

use lexhit::enumerate::enumerate_under_order;
use lexhit::oracle::lex_smallest_contains;
use lexhit::{lex_largest_greedy, lex_smallest, OrderedHypergraph, VertexId};

fn main() -> lexhit::Result<()> {
    let h = OrderedHypergraph::from_named(
        &["a", "b", "c", "d", "e"],
        &[&["a", "b"], &["b", "c", "d"], &["d", "e"], &["a", "e"]],
    )?;
    let show =
        |s: Option<lexhit::VertexSet>| s.map_or("none".to_string(), |s| h.labels(&s).join(" "));
    println!("lexmin:         {}", show(lex_smallest(&h)));
    println!("lexmax:         {}", show(lex_largest_greedy(&h)));

    // d first, then everything else
    let order: Vec<VertexId> = [3, 0, 1, 2, 4].map(VertexId).to_vec();
    let first = enumerate_under_order(&h, &order)?.next();
    println!("first, d first: {}", show(first));

    for x in [&["b", "e"][..], &["a", "c"], &["c", "e"]] {
        let x_set = h.set_of(x)?;
        println!(
            "some minimal transversal contains {x:?}: {}",
            lex_smallest_contains(&h, &x_set)
        );
    }
    Ok(())
}
