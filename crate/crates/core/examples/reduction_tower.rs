//! Turn an extension query into a multicoloured independent family
//! instance, then a single-coloured one, then a weft-3 circuit, and check
//! that every level gives the same answer.

use lexhit::family::circuit::Circuit;
use lexhit::family::dump;
use lexhit::oracle::reduce_to_mcif;
use lexhit::reference::BruteForce;
use lexhit::{extend_decide, ExtensionQuery, OrderedHypergraph, WitnessForm};

fn main() -> lexhit::Result<()> {
    let h = OrderedHypergraph::from_named(
        &["a", "b", "c", "d"],
        &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]],
    )?;
    let q = ExtensionQuery::named(&h, &["a", "c"], &["b"])?;
    let answer = extend_decide(&q).answer;
    println!("extension answer: {answer}\n");

    let red = reduce_to_mcif(&q, WitnessForm::Unpunctured);
    print!("{}", dump::write_multi(&red.instance));
    println!(
        "multicoloured answer: {}\n",
        red.instance.solve_bruteforce().is_some()
    );

    let single = red.instance.to_single_coloured();
    print!("{}", dump::write_single(&single));
    println!(
        "single-coloured answer: {}\n",
        single.solve_bruteforce().is_some()
    );

    let c = Circuit::from_instance(&single);
    print!("{}", dump::write_circuit(&c));
    let sat = BruteForce::default().weight_k_circuit(&c, single.k())?;
    println!("weft {:?}, layered: {}", c.weft(), c.is_weft3_layered());
    println!("weight-{} satisfiable: {sat}", single.k());
    assert_eq!(sat, answer);
    Ok(())
}
