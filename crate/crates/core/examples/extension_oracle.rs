//! Ask the extension oracle whether a partial choice (X in, Y out) can be
//! completed to a minimal transversal, and look at what it searched.

use lexhit::oracle::build_witness_systems;
use lexhit::{extend_decide, ExtensionQuery, OrderedHypergraph};

fn main() -> lexhit::Result<()> {
    let h = OrderedHypergraph::from_named(
        &["a", "b", "c", "d"],
        &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]],
    )?;
    let queries: [(&[&str], &[&str]); 5] = [
        (&["a"], &[]),
        (&["a"], &["c"]),
        (&["a", "b"], &[]),
        (&["a", "c"], &["b", "d"]),
        (&[], &["a", "b"]),
    ];
    for (x, y) in queries {
        let q = ExtensionQuery::named(&h, x, y)?;
        let pre = build_witness_systems(&q);
        let d = extend_decide(&q);
        println!("X={x:?} Y={y:?} -> {}", d.answer);
        if let Some(v) = pre.verdict {
            println!("    decided early: {v:?}");
        }
        if let Some(sys) = pre.systems {
            for (x, s) in sys.members.iter().zip(&sys.systems) {
                let s: Vec<String> = s.iter().map(|e| h.labels(e).join("")).collect();
                println!("    witnesses for {}: {s:?}", h.name(*x));
            }
            let t: Vec<String> = sys.forbidden.iter().map(|e| h.labels(e).join("")).collect();
            println!("    must stay unhit: {t:?}");
        }
        println!(
            "    tuples examined {} of at most {}",
            d.stats.tuples_examined,
            d.stats.product_bound()
        );
    }
    Ok(())
}
