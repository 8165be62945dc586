//! Lifting a factor map to its domain's Fischer cover, and the pair
//! automaton of equal-image path pairs.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::codes::{recode_to_one_block, FactorMap};
use crate::covers::fischer_cover;
use crate::error::Result;
use crate::graph::{LabeledGraph, VertexSet};

/// A factor map as a labeling of the edges of the domain's Fischer cover:
/// each edge carries its domain symbol (in the recoded 1-block alphabet)
/// and its image symbol.
#[derive(Debug, Clone)]
pub struct Lifted {
    pub map: FactorMap,
    pub cover: LabeledGraph,
    pub image: Vec<Symbol>,
}

impl Lifted {
    pub fn new(f: &FactorMap) -> Result<Self> {
        let map = recode_to_one_block(f);
        let cover = fischer_cover(map.domain())?;
        let image = cover
            .edges()
            .iter()
            .map(|e| {
                map.code()
                    .image_of(&Block(vec![e.label]))
                    .expect("every domain symbol is mapped")
            })
            .collect();
        Ok(Lifted { map, cover, image })
    }

    pub fn vertex_count(&self) -> usize {
        self.cover.vertex_count()
    }

    pub fn domain_alphabet(&self) -> &Alphabet {
        self.cover.alphabet()
    }

    pub fn codomain_alphabet(&self) -> &Alphabet {
        self.map.codomain().alphabet()
    }

    /// The cover relabeled by images; presents the image shift.
    pub fn image_graph(&self) -> LabeledGraph {
        let edges = self
            .cover
            .edges()
            .iter()
            .zip(&self.image)
            .map(|(e, &a)| crate::graph::Edge { label: a, ..*e })
            .collect();
        LabeledGraph::new_dedup(
            self.codomain_alphabet().clone(),
            self.cover.vertex_names().to_vec(),
            edges,
        )
    }

    /// Vertices ending a path with image `w`, starting anywhere in `from`.
    pub fn forward(&self, from: &VertexSet, a: Symbol) -> VertexSet {
        let mut out = Vec::new();
        for &v in from.members() {
            for &id in self.cover.out_edge_ids(v) {
                if self.image[id] == a {
                    out.push(self.cover.edge(id).target);
                }
            }
        }
        VertexSet::new(out)
    }

    /// Vertices starting an edge with image `a` that ends in `to`.
    pub fn backward(&self, to: &VertexSet, a: Symbol) -> VertexSet {
        let out = self
            .cover
            .edges()
            .iter()
            .zip(&self.image)
            .filter(|(e, &b)| b == a && to.contains(e.target))
            .map(|(e, _)| e.source)
            .collect();
        VertexSet::new(out)
    }

    pub fn forward_word(&self, from: &VertexSet, w: &Block) -> VertexSet {
        w.symbols()
            .iter()
            .fold(from.clone(), |s, &a| self.forward(&s, a))
    }

    /// Image sets `S(u)` of all image words `u`, each with a shortest
    /// (then least) `u`. Includes the full vertex set for the empty word.
    pub fn forward_subsets(&self) -> Vec<(VertexSet, Block)> {
        self.explore(|s, a| self.forward(s, a), false)
    }

    /// Sets `R(v)` of vertices starting a path with image `v`, each with a
    /// shortest such `v`.
    pub fn backward_subsets(&self) -> Vec<(VertexSet, Block)> {
        self.explore(|s, a| self.backward(s, a), true)
    }

    fn explore(
        &self,
        step: impl Fn(&VertexSet, Symbol) -> VertexSet,
        prepend: bool,
    ) -> Vec<(VertexSet, Block)> {
        let full = self.cover.all_vertices();
        let mut seen: HashMap<VertexSet, ()> = HashMap::from([(full.clone(), ())]);
        let mut out = vec![(full.clone(), Block::empty())];
        let mut queue = VecDeque::from([(full, Block::empty())]);
        while let Some((s, w)) = queue.pop_front() {
            for a in self.codomain_alphabet().symbols() {
                let t = step(&s, a);
                if t.is_empty() || seen.insert(t.clone(), ()).is_some() {
                    continue;
                }
                let w2 = if prepend {
                    Block(vec![a]).concat(&w)
                } else {
                    let mut c = w.clone();
                    c.push(a);
                    c
                };
                out.push((t.clone(), w2.clone()));
                queue.push_back((t, w2));
            }
        }
        out
    }

    /// A domain word whose image set in the cover is `{v}`, if one exists.
    pub fn focusing_context(&self, v: usize) -> Option<Block> {
        let full = self.cover.all_vertices();
        let mut seen: HashMap<VertexSet, ()> = HashMap::from([(full.clone(), ())]);
        let mut queue = VecDeque::from([(full, Block::empty())]);
        while let Some((s, w)) = queue.pop_front() {
            if s.members() == [v] {
                return Some(w);
            }
            for a in self.domain_alphabet().symbols() {
                let t = crate::language::step(&self.cover, &s, a);
                if !t.is_empty() && seen.insert(t.clone(), ()).is_none() {
                    let mut c = w.clone();
                    c.push(a);
                    queue.push_back((t, c));
                }
            }
        }
        None
    }
}

/// One step of a pair of cover paths with equal image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairMove {
    pub image: Symbol,
    pub left_edge: usize,
    pub right_edge: usize,
    pub target: usize,
    /// Whether both edges carry the same domain symbol.
    pub same_label: bool,
}

/// Product of the cover with itself, synchronized on image symbols.
/// State `(p, q)` has index `p * n + q`.
#[derive(Debug, Clone)]
pub struct PairAutomaton {
    n: usize,
    moves: Vec<Vec<PairMove>>,
}

impl PairAutomaton {
    pub fn new(l: &Lifted) -> Self {
        let n = l.vertex_count();
        let g = &l.cover;
        let mut moves = vec![Vec::new(); n * n];
        for p in 0..n {
            for q in 0..n {
                for &e1 in g.out_edge_ids(p) {
                    for &e2 in g.out_edge_ids(q) {
                        if l.image[e1] != l.image[e2] {
                            continue;
                        }
                        let (a, b) = (g.edge(e1), g.edge(e2));
                        moves[p * n + q].push(PairMove {
                            image: l.image[e1],
                            left_edge: e1,
                            right_edge: e2,
                            target: a.target * n + b.target,
                            same_label: a.label == b.label,
                        });
                    }
                }
            }
        }
        for m in &mut moves {
            m.sort_by_key(|m| (m.image, m.left_edge, m.right_edge));
        }
        PairAutomaton { n, moves }
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn state(&self, p: usize, q: usize) -> usize {
        p * self.n + q
    }

    pub fn components(&self, s: usize) -> (usize, usize) {
        (s / self.n, s % self.n)
    }

    pub fn is_diagonal(&self, s: usize) -> bool {
        let (p, q) = self.components(s);
        p == q
    }

    pub fn moves(&self, s: usize) -> &[PairMove] {
        &self.moves[s]
    }

    /// Moves from a diagonal state along two distinct edges.
    pub fn splits(&self) -> impl Iterator<Item = (usize, &PairMove)> + '_ {
        (0..self.n).flat_map(move |v| {
            let s = v * self.n + v;
            self.moves[s]
                .iter()
                .filter(|m| m.left_edge != m.right_edge)
                .map(move |m| (s, m))
        })
    }

    pub fn reachable(&self, starts: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut stack: Vec<usize> = starts.into_iter().collect();
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(s) = stack.pop() {
            for m in &self.moves[s] {
                if !seen[m.target] {
                    seen[m.target] = true;
                    stack.push(m.target);
                }
            }
        }
        seen
    }

    /// Length of the longest walk from each state; `None` when walks of
    /// every length exist (a cycle is reachable).
    pub fn longest_walks(&self) -> Vec<Option<usize>> {
        let len = self.len();
        let mut remaining: Vec<usize> = self.moves.iter().map(Vec::len).collect();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); len];
        for (s, ms) in self.moves.iter().enumerate() {
            for m in ms {
                preds[m.target].push(s);
            }
        }
        let mut value: Vec<Option<usize>> = vec![None; len];
        let mut queue: VecDeque<usize> = (0..len).filter(|&s| remaining[s] == 0).collect();
        for &s in &queue {
            value[s] = Some(0);
        }
        while let Some(t) = queue.pop_front() {
            let vt = value[t].expect("finalized");
            for &s in &preds[t] {
                value[s] = Some(value[s].map_or(vt + 1, |v| v.max(vt + 1)));
                remaining[s] -= 1;
                if remaining[s] == 0 {
                    queue.push_back(s);
                }
            }
        }
        // States never finalized reach a cycle.
        for s in 0..len {
            if remaining[s] != 0 {
                value[s] = None;
            }
        }
        value
    }

    /// Some walk of exactly `len` steps from `s`, as a list of moves.
    pub fn walk(&self, s: usize, len: usize, longest: &[Option<usize>]) -> Vec<PairMove> {
        let mut out = Vec::with_capacity(len);
        let mut cur = s;
        for i in 0..len {
            let need = len - i - 1;
            let m = *self.moves[cur]
                .iter()
                .find(|m| longest[m.target].is_none_or(|v| v >= need))
                .expect("walk of the requested length exists");
            out.push(m);
            cur = m.target;
        }
        out
    }
}
