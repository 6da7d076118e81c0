mod common;

use lexhit::family::circuit::{Circuit, GateKind};
use lexhit::family::dump::{self, InstanceDump};
use lexhit::family::formula::Antimonotone3NFormula;
use lexhit::oracle::{mcif_to_extension, reduce_to_mcif};
use lexhit::reference::BruteForce;
use lexhit::{
    extend_decide, ExtensionQuery, MultiColouredInstance, OrderedHypergraph,
    SingleColouredInstance, VertexSet, WitnessForm,
};

fn universe(names: &str) -> Vec<String> {
    names.split_whitespace().map(str::to_string).collect()
}

fn sets(universe: &[String], sets: &[&str]) -> Vec<VertexSet> {
    sets.iter()
        .map(|s| {
            VertexSet::from_indices(
                universe.len(),
                s.split_whitespace()
                    .map(|n| universe.iter().position(|u| u == n).unwrap()),
            )
        })
        .collect()
}

/// Seven elements, five candidates, four forbidden sets; only the first
/// three candidates together avoid every forbidden set.
fn circuit_example() -> SingleColouredInstance {
    let u = universe("a b c d e f g");
    let s = sets(&u, &["a c", "c e", "c g", "b c", "d f"]);
    let t = sets(&u, &["a b", "b e", "b g", "d f"]);
    SingleColouredInstance::new(u, s, t, 3).unwrap()
}

#[test]
fn circuit_example_has_a_unique_solution() {
    let inst = circuit_example();
    assert_eq!(inst.solve_bruteforce(), Some(vec![0, 1, 2]));
    let c = Circuit::from_instance(&inst);
    assert!(c.is_weft3_layered());
    assert_eq!(c.input_count(), 5);
    let count = |k: GateKind| c.gates().iter().filter(|g| g.kind == k).count();
    // 7 element gates plus the top gate; 4 forbidden-set gates
    assert_eq!(
        (
            count(GateKind::Or),
            count(GateKind::And),
            count(GateKind::Not)
        ),
        (8, 4, 1)
    );
    for picks in common::combinations(5, 3) {
        assert_eq!(c.evaluate(&picks), picks == [0, 1, 2], "{picks:?}");
    }
    assert!(BruteForce::default().weight_k_circuit(&c, 3).unwrap());
}

/// Eight variables; `{x4, x5, x7, x8}` is the only satisfying assignment of
/// weight 4 and nothing heavier satisfies.
fn formula_example() -> Antimonotone3NFormula {
    let t = |vs: &[usize]| vs.iter().map(|v| v - 1).collect::<Vec<_>>();
    Antimonotone3NFormula::with_numbered_variables(
        8,
        vec![
            vec![t(&[3, 5, 7]), t(&[1, 2, 3])],
            vec![t(&[4, 8]), t(&[1, 4, 7]), t(&[6])],
            vec![t(&[2, 6]), t(&[1, 4])],
        ],
    )
    .unwrap()
}

#[test]
fn formula_example_weight_four() {
    let f = formula_example();
    let bf = BruteForce::default();
    assert!(f.evaluate(&VertexSet::from_indices(8, [3, 4, 6, 7])));
    let inst = f.to_independent_family(4).unwrap();
    assert_eq!(inst.universe().len(), 7);
    assert_eq!(inst.solve_bruteforce(), Some(vec![3, 4, 6, 7]));
    for k in 5..=8 {
        assert!(!bf.weight_k_formula(&f, k).unwrap(), "weight {k}");
        assert!(f
            .to_independent_family(k)
            .unwrap()
            .solve_bruteforce()
            .is_none());
    }
    for k in 1..=8 {
        let sat = bf.weight_k_formula(&f, k).unwrap();
        let inst = f.to_independent_family(k).unwrap();
        assert_eq!(inst.solve_bruteforce().is_some(), sat, "k={k}");
        let c = Circuit::from_instance(&inst);
        assert_eq!(bf.weight_k_circuit(&c, k).unwrap(), sat, "k={k}");
    }
}

#[test]
fn tagging_single_colour() {
    let u = universe("u");
    let inst = MultiColouredInstance::new(u.clone(), vec![sets(&u, &["u"])], vec![]).unwrap();
    let single = inst.to_single_coloured();
    assert_eq!(
        single.universe(),
        &["u".to_string(), "x[1,1]".to_string()][..]
    );
    assert_eq!(
        single.candidates(),
        &sets(single.universe(), &["u x[1,1]"])[..]
    );
    assert!(single.forbidden().is_empty());
    assert_eq!(
        single.solve_bruteforce().is_some(),
        inst.solve_bruteforce().is_some()
    );
}

#[test]
fn tagging_adds_same_colour_pairs() {
    let u = universe("u v");
    let inst = MultiColouredInstance::new(u.clone(), vec![sets(&u, &["u", "v"])], vec![]).unwrap();
    let single = inst.to_single_coloured();
    assert_eq!(
        single.forbidden(),
        &sets(single.universe(), &["x[1,1] x[2,1]"])[..]
    );
    assert!(inst.solve_bruteforce().is_some());
    assert!(single.solve_bruteforce().is_some());

    let two = MultiColouredInstance::new(
        u.clone(),
        vec![sets(&u, &["u", "v"]); 2],
        sets(&u, &["u v"]),
    )
    .unwrap();
    assert_eq!(two.solve_bruteforce(), Some(vec![0, 0]));
    assert!(two.to_single_coloured().solve_bruteforce().is_some());
}

#[test]
fn copying_into_colours() {
    let u = universe("u v w");
    let k1 =
        SingleColouredInstance::new(u.clone(), sets(&u, &["u", "v"]), sets(&u, &["u"]), 1).unwrap();
    let m1 = k1.to_multi_coloured();
    assert_eq!(m1.k(), 1);
    assert_eq!(m1.forbidden().len(), 1, "k = 1 adds no cross-copy pairs");
    assert_eq!(
        m1.solve_bruteforce().is_some(),
        k1.solve_bruteforce().is_some()
    );

    // the only admissible picks reuse {w}; copies must not select it twice
    let k2 = SingleColouredInstance::new(
        u.clone(),
        sets(&u, &["w", "u", "v"]),
        sets(&u, &["u", "v"]),
        2,
    )
    .unwrap();
    assert!(k2.solve_bruteforce().is_none());
    assert!(k2.to_multi_coloured().solve_bruteforce().is_none());

    let k2 =
        SingleColouredInstance::new(u.clone(), sets(&u, &["w", "u", "v"]), sets(&u, &["u v"]), 2)
            .unwrap();
    assert!(k2.solve_bruteforce().is_some());
    assert!(k2.to_multi_coloured().solve_bruteforce().is_some());
}

fn path() -> OrderedHypergraph {
    OrderedHypergraph::parse("vertices: a b c\nedge: a b\nedge: b c\n").unwrap()
}

#[test]
fn extension_chain_to_circuit() {
    let bf = BruteForce::default();
    let cases: [(&str, &[&str], &[&str]); 5] = [
        ("vertices: a b c\nedge: a b\nedge: b c\n", &["a"], &["c"]),
        ("vertices: a b c\nedge: a b\nedge: b c\n", &["a"], &[]),
        (
            "vertices: a b c\nedge: a b\nedge: a c\nedge: b c\n",
            &["a", "b"],
            &[],
        ),
        (
            "vertices: a b c\nedge: a b\nedge: a c\nedge: b c\n",
            &["a", "b", "c"],
            &[],
        ),
        (
            "vertices: a b c d\nedge: a b\nedge: c d\nedge: a d\n",
            &["b", "d"],
            &["c"],
        ),
    ];
    for (text, x, y) in cases {
        let h = OrderedHypergraph::parse(text).unwrap();
        let q = ExtensionQuery::named(&h, x, y).unwrap();
        let want = extend_decide(&q).answer;
        for form in [WitnessForm::Unpunctured, WitnessForm::Punctured] {
            let red = reduce_to_mcif(&q, form);
            let single = red.instance.to_single_coloured();
            let c = Circuit::from_instance(&single);
            assert!(c.is_weft3_layered());
            assert_eq!(
                bf.weight_k_circuit(&c, single.k()).unwrap(),
                want,
                "{text} {x:?} {y:?}"
            );

            // through the text dumps and back
            let InstanceDump::Multi(m) =
                dump::parse_instance(&dump::write_multi(&red.instance)).unwrap()
            else {
                panic!("multicoloured dump");
            };
            assert_eq!(m.solve_bruteforce().is_some(), want);
            let InstanceDump::Single(s) =
                dump::parse_instance(&dump::write_single(&single)).unwrap()
            else {
                panic!("single-coloured dump");
            };
            assert_eq!(s.solve_bruteforce().is_some(), want);
            let c2 = dump::parse_circuit(&dump::write_circuit(&c)).unwrap();
            assert_eq!(bf.weight_k_circuit(&c2, single.k()).unwrap(), want);
        }
    }
}

#[test]
fn empty_include_gives_constant_instances() {
    let h = path();
    let q = ExtensionQuery::named::<&str>(&h, &[], &[]).unwrap();
    let red = reduce_to_mcif(&q, WitnessForm::Unpunctured);
    assert_eq!(red.constant, Some(true));
    assert_eq!(red.instance, MultiColouredInstance::constant(true));
    assert!(red.instance.solve_bruteforce().is_some());

    let q = ExtensionQuery::named(&h, &[], &["b", "c"]).unwrap();
    let red = reduce_to_mcif(&q, WitnessForm::Unpunctured);
    assert_eq!(red.constant, Some(false));
    assert!(red.instance.solve_bruteforce().is_none());
    let text = dump::write_multi(&red.instance);
    assert_eq!(
        dump::parse_instance(&text).unwrap(),
        InstanceDump::Multi(MultiColouredInstance::constant(false))
    );
}

#[test]
fn converse_embedding_recovers_selections() {
    let u = universe("p q r");
    let inst = MultiColouredInstance::new(
        u.clone(),
        vec![sets(&u, &["p", "q"]), sets(&u, &["q", "r"])],
        sets(&u, &["p q", "q r"]),
    )
    .unwrap();
    let (h, x) = mcif_to_extension(&inst);
    let q = ExtensionQuery::new(&h, x.clone(), h.empty_set()).unwrap();
    assert_eq!(extend_decide(&q).answer, inst.solve_bruteforce().is_some());
    assert!(inst.solve_bruteforce().is_some());
    // a minimal transversal containing X picks one witness per colour
    let bf = BruteForce::default();
    assert!(bf.extension(&h, &x, &h.empty_set()).unwrap());
}
