use std::collections::BTreeSet;

use proptest::prelude::*;
use shiftlab_core::analysis::{degree, right_closing_ae};
use shiftlab_core::codes::{apply_block, apply_code, compose, higher_block, recode_to_one_block};
use shiftlab_core::covers::{fischer_cover, is_right_resolving, subset_cover};
use shiftlab_core::graph::{is_irreducible, trim_to_essential};
use shiftlab_core::language::{blocks_of_length, count_blocks, image_set, is_admissible, same_language};
use shiftlab_core::{Alphabet, Block, BlockCode, Edge, FactorMap, LabeledGraph, Point, Symbol};

fn binary() -> Alphabet {
    Alphabet::new(["0", "1"]).unwrap()
}

fn graph_from(n: usize, edges: BTreeSet<(usize, usize, u32)>) -> LabeledGraph {
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let edges = edges
        .into_iter()
        .map(|(s, t, l)| Edge {
            source: s % n,
            target: t % n,
            label: Symbol(l),
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    LabeledGraph::new(binary(), names, edges).unwrap()
}

fn arb_graph() -> impl Strategy<Value = LabeledGraph> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::btree_set((0..n, 0..n, 0u32..2), 1..=8).prop_map(move |e| graph_from(n, e))
    })
}

fn arb_block(max: usize) -> impl Strategy<Value = Block> {
    proptest::collection::vec(0u32..2, 0..=max).prop_map(|v| Block(v.into_iter().map(Symbol).collect()))
}

fn nonempty_block(max: usize) -> impl Strategy<Value = Block> {
    proptest::collection::vec(0u32..2, 1..=max).prop_map(|v| Block(v.into_iter().map(Symbol).collect()))
}

fn full2() -> LabeledGraph {
    LabeledGraph::from_triples(&["0", "1"], &[("V", "V", "0"), ("V", "V", "1")]).unwrap()
}

fn golden() -> LabeledGraph {
    LabeledGraph::from_triples(&["0", "1"], &[("A", "A", "0"), ("A", "B", "1"), ("B", "A", "0")]).unwrap()
}

/// A random code on the full 2-shift with memory 1 and anticipation 1.
fn arb_code() -> impl Strategy<Value = BlockCode> {
    proptest::collection::vec(0u32..2, 8).prop_map(|table| {
        let a = binary();
        BlockCode::from_fn(a.clone(), a.clone(), 1, 1, a.all_blocks(3), |w| {
            let i = w.symbols().iter().fold(0, |acc, s| acc * 2 + s.0 as usize);
            Symbol(table[i])
        })
        .unwrap()
    })
}

proptest! {
    #[test]
    fn language_is_factorial(g in arb_graph(), n in 2usize..6) {
        let g = trim_to_essential(&g);
        let shorter: BTreeSet<Block> = blocks_of_length(&g, n - 1).into_iter().collect();
        for w in blocks_of_length(&g, n) {
            prop_assert!(is_admissible(&g, &w));
            prop_assert!(shorter.contains(&w.slice(0, n - 1)));
            prop_assert!(shorter.contains(&w.slice(1, n)));
        }
    }

    #[test]
    fn counts_match_enumeration(g in arb_graph(), n in 1usize..8) {
        let h = subset_cover(&g);
        prop_assert!(is_right_resolving(&h));
        prop_assert_eq!(count_blocks(&h, n).unwrap(), blocks_of_length(&h, n).len() as u128);
    }

    #[test]
    fn image_set_is_a_homomorphism(g in arb_graph(), u in arb_block(4), v in arb_block(4)) {
        let all = g.all_vertices();
        prop_assert_eq!(
            image_set(&g, &u.concat(&v), &all),
            image_set(&g, &v, &image_set(&g, &u, &all))
        );
    }

    #[test]
    fn trimming_is_idempotent(g in arb_graph(), w in arb_block(6)) {
        let t = trim_to_essential(&g);
        prop_assert_eq!(trim_to_essential(&t), t.clone());
        prop_assert_eq!(is_admissible(&t, &w), is_admissible(&g, &w));
    }

    #[test]
    fn fischer_cover_presents_the_same_shift(g in arb_graph()) {
        let t = trim_to_essential(&g);
        prop_assume!(!t.is_empty() && is_irreducible(&t));
        let f = fischer_cover(&t).unwrap();
        prop_assert!(is_right_resolving(&f));
        prop_assert!(same_language(&f, &t));
        prop_assert!(f.vertex_count() <= subset_cover(&t).vertex_count());
    }

    #[test]
    fn coding_commutes_with_shift(
        c in arb_code(),
        l in nonempty_block(3),
        m in arb_block(4),
        r in nonempty_block(3),
        k in -5i64..5,
    ) {
        let p = Point::new(l, m, r).unwrap();
        let a = apply_code(&c, &p.shift(k)).unwrap();
        let b = apply_code(&c, &p).unwrap().shift(k);
        prop_assert!(a.denotes_same(&b));
        for i in -6..6 {
            prop_assert_eq!(b.symbol_at(i), c.image_of(&p.window(i + k - 1, i + k + 1)).unwrap());
        }
    }

    #[test]
    fn composition_matches_sequential_coding(c1 in arb_code(), c2 in arb_code(), w in arb_block(9)) {
        prop_assume!(w.len() >= 5);
        let c = compose(&c2, &c1).unwrap();
        prop_assert_eq!(
            apply_block(&c, &w).unwrap(),
            apply_block(&c2, &apply_block(&c1, &w).unwrap()).unwrap()
        );
    }

    #[test]
    fn right_closing_is_monotone(c in arb_code(), b in 0usize..5) {
        let f = FactorMap::new(c, &full2(), &full2());
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        let r = right_closing_ae(&f, b).unwrap();
        if r.right_closing_ae {
            for b2 in b..b + 3 {
                prop_assert_eq!(right_closing_ae(&f, b2).unwrap().delay, r.delay);
            }
        }
    }
}

#[test]
fn golden_counts_are_fibonacci() {
    let g = golden();
    let mut c = vec![0u128, 2, 3];
    for n in 3..=20 {
        c.push(c[n - 1] + c[n - 2]);
    }
    for (n, &want) in c.iter().enumerate().skip(1) {
        assert_eq!(count_blocks(&g, n).unwrap(), want, "n = {n}");
    }
}

#[test]
fn degree_is_invariant_under_recoding() {
    let a = binary();
    let xor = BlockCode::from_fn(a.clone(), a.clone(), 0, 1, a.all_blocks(2), |w| {
        Symbol(w.symbols()[0].0 ^ w.symbols()[1].0)
    })
    .unwrap();
    let f = FactorMap::new(xor, &full2(), &full2()).unwrap();
    let d = degree(&f, 6).unwrap().degree;
    assert_eq!(degree(&recode_to_one_block(&f), 6).unwrap().degree, d);

    // Precomposing with the higher block conjugacy keeps the degree.
    let (g3, proj) = higher_block(&full2(), 3);
    let h = FactorMap::new(compose(f.code(), &proj).unwrap().restricted_to(&g3).unwrap(), &g3, &full2()).unwrap();
    assert_eq!(degree(&h, 10).unwrap().degree, d);
}
