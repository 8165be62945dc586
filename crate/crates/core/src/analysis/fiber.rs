//! Fiber product of two 1-block maps into a common codomain.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::codes::{recode_to_one_block, BlockCode, FactorMap};
use crate::error::{Error, Result};
use crate::graph::{irreducible_components, trim_to_essential, Edge, LabeledGraph};
use crate::language::same_language;

#[derive(Debug, Clone)]
pub struct FiberComponent {
    /// Vertex indices of the component in the fiber product presentation.
    pub vertices: Vec<usize>,
    pub graph: LabeledGraph,
    pub left_onto: bool,
    pub right_onto: bool,
}

impl FiberComponent {
    pub fn both_onto(&self) -> bool {
        self.left_onto && self.right_onto
    }
}

#[derive(Debug, Clone)]
pub struct FiberProduct {
    pub presentation: LabeledGraph,
    /// The two maps after recoding to 1-block form.
    pub left_map: FactorMap,
    pub right_map: FactorMap,
    pub left_projection: FactorMap,
    pub right_projection: FactorMap,
    pub components: Vec<FiberComponent>,
    /// Pair symbol index -> (left symbol, right symbol).
    pub pairs: Vec<(Symbol, Symbol)>,
}

/// Pairs of edges of the two (recoded) domains with equal images, labeled
/// `<a,b>` by their domain symbols.
pub fn fiber_product(f1: &FactorMap, f2: &FactorMap) -> Result<FiberProduct> {
    if f1.codomain().alphabet() != f2.codomain().alphabet()
        || !same_language(f1.codomain(), f2.codomain())
    {
        return Err(Error::CodomainMismatch);
    }
    let g1 = recode_to_one_block(f1);
    let g2 = recode_to_one_block(f2);
    let (d1, d2) = (g1.domain(), g2.domain());
    let img1 = |s: Symbol| g1.code().image_of(&Block(vec![s])).expect("mapped");
    let img2 = |s: Symbol| g2.code().image_of(&Block(vec![s])).expect("mapped");

    let mut pairs = Vec::new();
    for a in d1.alphabet().symbols() {
        for b in d2.alphabet().symbols() {
            if img1(a) == img2(b) {
                pairs.push((a, b));
            }
        }
    }
    let names: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| format!("<{},{}>", d1.alphabet().name(a), d2.alphabet().name(b)))
        .collect();
    let alphabet = Alphabet::new(names)?;
    let pair_index: HashMap<(Symbol, Symbol), Symbol> = pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, Symbol(i as u32)))
        .collect();

    let n2 = d2.vertex_count();
    let vertices: Vec<String> = (0..d1.vertex_count())
        .flat_map(|v| {
            (0..n2).map(move |w| format!("({},{})", d1.vertex_name(v), d2.vertex_name(w)))
        })
        .collect();
    let mut edges = Vec::new();
    for e1 in d1.edges() {
        for e2 in d2.edges() {
            if let Some(&label) = pair_index.get(&(e1.label, e2.label)) {
                edges.push(Edge {
                    source: e1.source * n2 + e2.source,
                    target: e1.target * n2 + e2.target,
                    label,
                });
            }
        }
    }
    let presentation = trim_to_essential(&LabeledGraph::new_dedup(alphabet.clone(), vertices, edges));

    let projection = |target: &Alphabet, pick: &dyn Fn((Symbol, Symbol)) -> Symbol| {
        BlockCode::from_fn(
            alphabet.clone(),
            target.clone(),
            0,
            0,
            alphabet.symbols().map(|s| Block(vec![s])),
            |w| pick(pairs[w.0[0].index()]),
        )
    };
    let left_code = projection(d1.alphabet(), &|(a, _)| a)?;
    let right_code = projection(d2.alphabet(), &|(_, b)| b)?;
    let left_projection = FactorMap::new(left_code.clone(), &presentation, d1)?;
    let right_projection = FactorMap::new(right_code.clone(), &presentation, d2)?;

    let components = irreducible_components(&presentation)
        .into_iter()
        .map(|vs| {
            let mut keep = vec![false; presentation.vertex_count()];
            for &v in &vs {
                keep[v] = true;
            }
            let graph = presentation.induced(&keep);
            let onto = |code: &BlockCode, target: &LabeledGraph| {
                code.restricted_to(&graph)
                    .and_then(|c| FactorMap::new(c, &graph, target))
                    .is_ok_and(|m| m.is_onto())
            };
            FiberComponent {
                left_onto: onto(&left_code, d1),
                right_onto: onto(&right_code, d2),
                vertices: vs,
                graph,
            }
        })
        .collect();

    Ok(FiberProduct {
        presentation,
        left_map: g1,
        right_map: g2,
        left_projection,
        right_projection,
        components,
        pairs,
    })
}

impl FiberProduct {
    /// First component on which both projections are onto.
    pub fn onto_component(&self) -> Option<&FiberComponent> {
        self.components.iter().find(|c| c.both_onto())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::test_maps::*;
    use crate::codes::apply_block;
    use crate::language::blocks_of_length;

    fn commutes(fp: &FiberProduct, max_len: usize) -> bool {
        (1..=max_len).all(|n| {
            blocks_of_length(&fp.presentation, n).iter().all(|w| {
                let a = apply_block(fp.left_map.code(), &apply_block(fp.left_projection.code(), w).unwrap());
                let b = apply_block(fp.right_map.code(), &apply_block(fp.right_projection.code(), w).unwrap());
                a.unwrap() == b.unwrap()
            })
        })
    }

    #[test]
    fn identity_fiber_is_diagonal() {
        let f = golden_identity();
        let fp = fiber_product(&f, &f).unwrap();
        assert_eq!(fp.components.len(), 1);
        let c = &fp.components[0];
        assert!(c.both_onto());
        assert_eq!(c.vertices.len(), 2);
        assert!(commutes(&fp, 8));
    }

    #[test]
    fn xor_fiber_components() {
        let f = xor_map();
        let fp = fiber_product(&f, &f).unwrap();
        assert_eq!(fp.components.len(), 2);
        assert!(fp.components.iter().all(FiberComponent::both_onto));
        assert!(commutes(&fp, 6));
    }

    #[test]
    fn even_fiber_has_onto_diagonal() {
        let f = even_map();
        let fp = fiber_product(&f, &f).unwrap();
        assert!(fp.onto_component().is_some());
        assert!(commutes(&fp, 8));
    }

    #[test]
    fn codomain_mismatch() {
        assert!(matches!(
            fiber_product(&even_map(), &xor_map()),
            Err(Error::CodomainMismatch)
        ));
    }
}
