//! Structure theory of factor maps between sofic shifts.
//!
//! Every analysis first recodes the map to a 1-block map and lifts it to the
//! Fischer cover of its domain, whose label map is one-to-one on doubly
//! transitive points. Properties of path pairs are then decided on the
//! finite pair automaton.

pub mod closing;
pub mod decoder;
pub mod degree;
pub mod fiber;
pub mod hyperbolic;
pub mod pair;
pub mod theorems;

pub use closing::{right_closing_ae, ClosingReport, ClosingWitness};
pub use decoder::{find_decoder_block, verify_decoder_block, DecoderCertificate};
pub use degree::{default_word_bound, degree, is_finite_to_one, is_one_to_one_ae, DegreeReport};
pub use fiber::{fiber_product, FiberComponent, FiberProduct};
pub use hyperbolic::{find_hyperbolic_certificate, HyperbolicCertificate};
pub use pair::{Lifted, PairAutomaton, PairMove};
pub use theorems::{
    check_theorem_3_3, check_theorem_3_4, check_theorem_4_2, find_half_synchronizing_block,
    render_hyperbolic, Bounds, CheckStatus, TheoremReport,
};

#[cfg(test)]
pub(crate) mod test_maps {
    use crate::alphabet::{Alphabet, Block, Symbol};
    use crate::codes::{BlockCode, FactorMap};
    use crate::graph::LabeledGraph;

    pub fn full2() -> LabeledGraph {
        LabeledGraph::from_triples(&["0", "1"], &[("V", "V", "0"), ("V", "V", "1")]).unwrap()
    }

    fn one_block(domain: &LabeledGraph, codomain: &LabeledGraph, pairs: &[(&str, &str)]) -> FactorMap {
        let (da, ca) = (domain.alphabet(), codomain.alphabet());
        let map = pairs
            .iter()
            .map(|(a, b)| (da.parse_block(a).unwrap(), ca.symbol(b).unwrap()))
            .collect();
        let code = BlockCode::new(da.clone(), ca.clone(), 0, 0, map).unwrap();
        FactorMap::new(code, domain, codomain).unwrap()
    }

    /// Edge shift of the even-shift cover, labeled into the even shift.
    pub fn even_map() -> FactorMap {
        let dom = LabeledGraph::from_triples(
            &["a", "b", "c"],
            &[("A", "A", "a"), ("A", "B", "b"), ("B", "A", "c")],
        )
        .unwrap();
        let cod = LabeledGraph::from_triples(
            &["0", "1"],
            &[("A", "A", "1"), ("A", "B", "0"), ("B", "A", "0")],
        )
        .unwrap();
        one_block(&dom, &cod, &[("a", "1"), ("b", "0"), ("c", "0")])
    }

    pub fn xor_map() -> FactorMap {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let code = BlockCode::from_fn(a.clone(), a.clone(), 0, 1, a.all_blocks(2), |w| {
            Symbol(w.0[0].0 ^ w.0[1].0)
        })
        .unwrap();
        FactorMap::new(code, &full2(), &full2()).unwrap()
    }

    pub fn golden_identity() -> FactorMap {
        let g = LabeledGraph::from_triples(
            &["0", "1"],
            &[("A", "A", "0"), ("A", "B", "1"), ("B", "A", "0")],
        )
        .unwrap();
        FactorMap::identity(&g).unwrap()
    }

    /// Full 2-shift onto the one-point shift.
    pub fn collapse_map() -> FactorMap {
        let one = LabeledGraph::from_triples(&["a"], &[("V", "V", "a")]).unwrap();
        one_block(&full2(), &one, &[("0", "a"), ("1", "a")])
    }

    /// Two branches that read alike until their 1-runs end: degree 1,
    /// not right-closing.
    pub fn fork_map() -> FactorMap {
        let dom = LabeledGraph::from_triples(
            &["p", "q", "r", "s", "t", "u"],
            &[
                ("A", "B", "p"),
                ("A", "C", "q"),
                ("B", "B", "r"),
                ("C", "C", "s"),
                ("B", "A", "t"),
                ("C", "A", "u"),
            ],
        )
        .unwrap();
        let cod = LabeledGraph::from_triples(
            &["0", "1", "2", "3"],
            &[
                ("A", "B", "0"),
                ("A", "C", "0"),
                ("B", "B", "1"),
                ("C", "C", "1"),
                ("B", "A", "2"),
                ("C", "A", "3"),
            ],
        )
        .unwrap();
        one_block(
            &dom,
            &cod,
            &[("p", "0"), ("q", "0"), ("r", "1"), ("s", "1"), ("t", "2"), ("u", "3")],
        )
    }

    /// Branches resolved one symbol later: right-closing with delay 1.
    pub fn delayed_map() -> FactorMap {
        let dom = LabeledGraph::from_triples(
            &["p", "q", "r", "s"],
            &[("A", "B", "p"), ("A", "C", "q"), ("B", "A", "r"), ("C", "A", "s")],
        )
        .unwrap();
        let cod = LabeledGraph::from_triples(
            &["0", "1", "2"],
            &[("A", "B", "0"), ("A", "C", "0"), ("B", "A", "1"), ("C", "A", "2")],
        )
        .unwrap();
        one_block(&dom, &cod, &[("p", "0"), ("q", "0"), ("r", "1"), ("s", "2")])
    }

    #[allow(dead_code)]
    pub fn block(a: &Alphabet, s: &str) -> Block {
        a.parse_block(s).unwrap()
    }
}
