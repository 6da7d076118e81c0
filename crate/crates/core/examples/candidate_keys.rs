//! Candidate keys of a table are the minimal transversals of its
//! difference hypergraph: one edge per pair of rows, holding the columns
//! where the rows differ.

use lexhit::{OrderedHypergraph, VertexSet};

fn main() -> lexhit::Result<()> {
    let columns = ["id", "name", "city", "zip", "phone"];
    let rows = [
        ["1", "ann", "oslo", "0150", "555-1"],
        ["2", "bob", "oslo", "0150", "555-2"],
        ["3", "ann", "rome", "0010", "555-3"],
        ["4", "cy", "rome", "0010", "555-1"],
        ["5", "bob", "lima", "1500", "555-2"],
    ];
    let n = columns.len();
    let mut edges = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            edges.push(VertexSet::from_indices(
                n,
                (0..n).filter(|&c| rows[i][c] != rows[j][c]),
            ));
        }
    }
    let h = OrderedHypergraph::new(columns.iter().map(|c| c.to_string()).collect(), edges)?;
    let h = h.drop_superset_edges();
    println!(
        "{} difference sets after dropping supersets",
        h.edge_count()
    );
    for key in lexhit::enumerate(&h) {
        println!("key: {}", h.labels(&key).join(" + "));
    }
    Ok(())
}
