use proptest::prelude::*;
use walkgroup::{
    abelianize, pi12_presentation, tietze_simplify, todd_coxeter, AbelianInvariants, CosetVerdict, Graph,
    GroupPresentation, Mode, Word,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..9, prop::collection::vec(any::<bool>(), 36)).prop_map(|(n, bits)| {
        let mut edges: Vec<(String, String)> = (1..n).map(|v| ((v - 1).to_string(), v.to_string())).collect();
        let mut k = 0;
        for a in 0..n {
            for b in a + 2..n {
                if bits[k % bits.len()] {
                    edges.push((a.to_string(), b.to_string()));
                }
                k += 1;
            }
        }
        Graph::new((0..n).map(|i| i.to_string()), edges).unwrap()
    })
}

proptest! {
    #[test]
    fn simplification_preserves_invariants(g in small_graph(), mode_a1 in any::<bool>()) {
        let mode = if mode_a1 { Mode::A1 } else { Mode::Pi12 };
        let p = pi12_presentation(&g, "0", mode).unwrap();
        let s = tietze_simplify(&p, 50);
        prop_assert_eq!(abelianize(&s), abelianize(&p));
        prop_assert!(s.generator_count() <= p.generator_count());
        prop_assert_eq!(GroupPresentation::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn generator_count_is_cycle_rank(g in small_graph()) {
        let p = pi12_presentation(&g, "0", Mode::Pi12).unwrap();
        prop_assert_eq!(p.generator_count() + g.vertex_count(), g.edge_count() + 1);
        prop_assert_eq!(p.relator_count(), g.cycles(4).len());
    }
}

#[test]
fn cyclic_group_presentations() {
    for n in 1..12 {
        let p = GroupPresentation::new(vec!["a".into()], vec![Word::from_powers(&[(0, n)])]).unwrap();
        assert_eq!(todd_coxeter(&p, 1000), CosetVerdict::FiniteOrder { order: n as usize });
        let expected = if n == 1 { vec![] } else { vec![n as u64] };
        assert_eq!(abelianize(&p), AbelianInvariants { free_rank: 0, torsion: expected });
    }
}

#[test]
fn paths_and_cycles() {
    for n in 1..12 {
        assert!(pi12_presentation(&Graph::path(n), "0", Mode::Pi12).unwrap().is_trivial());
    }
    for n in [3, 5, 6, 7, 8, 9] {
        let s = tietze_simplify(&pi12_presentation(&Graph::cycle(n), "0", Mode::Pi12).unwrap(), 50);
        assert_eq!((s.generator_count(), s.relator_count()), (1, 0));
    }
    assert!(tietze_simplify(&pi12_presentation(&Graph::cycle(4), "0", Mode::Pi12).unwrap(), 50).is_trivial());
    assert!(tietze_simplify(&pi12_presentation(&Graph::cycle(3), "0", Mode::A1).unwrap(), 50).is_trivial());
}

#[test]
fn json_format() {
    let p = GroupPresentation::new(
        vec!["a".into(), "b".into()],
        vec![Word::from_powers(&[(0, 1), (1, -1)])],
    )
    .unwrap();
    let v: serde_json::Value = serde_json::from_str(&p.to_json()).unwrap();
    assert_eq!(v, serde_json::json!({"generators": ["a", "b"], "relators": [[["a", 1], ["b", -1]]]}));
}
