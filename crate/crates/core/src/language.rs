//! Language-level queries on presentations: admissibility, image sets,
//! block enumeration and transfer-matrix counting.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::covers::is_right_resolving;
use crate::error::{Error, Result};
use crate::graph::{trim_to_essential, LabeledGraph, VertexSet};

/// Vertices reachable from `start` along a path labeled `w`.
pub fn image_set(g: &LabeledGraph, w: &Block, start: &VertexSet) -> VertexSet {
    let mut cur = start.clone();
    for &a in w.symbols() {
        if cur.is_empty() {
            break;
        }
        cur = step(g, &cur, a);
    }
    cur
}

pub(crate) fn step(g: &LabeledGraph, from: &VertexSet, a: Symbol) -> VertexSet {
    let mut next = Vec::new();
    for &v in from.members() {
        for e in g.out_edges(v) {
            if e.label == a {
                next.push(e.target);
            }
        }
    }
    VertexSet::new(next)
}

/// Vertices from which a path labeled `w` ends somewhere in `end`.
pub fn preimage_set(g: &LabeledGraph, w: &Block, end: &VertexSet) -> VertexSet {
    let mut cur = end.clone();
    for &a in w.symbols().iter().rev() {
        if cur.is_empty() {
            break;
        }
        cur = step_back(g, &cur, a);
    }
    cur
}

pub(crate) fn step_back(g: &LabeledGraph, to: &VertexSet, a: Symbol) -> VertexSet {
    let mut prev = Vec::new();
    for &v in to.members() {
        for e in g.in_edges(v) {
            if e.label == a {
                prev.push(e.source);
            }
        }
    }
    VertexSet::new(prev)
}

/// Whether `w` labels a path in the essential part of `g`.
pub fn is_admissible(g: &LabeledGraph, w: &Block) -> bool {
    let g = trim_to_essential(g);
    !g.is_empty() && !image_set(&g, w, &g.all_vertices()).is_empty()
}

/// Deterministic automaton over vertex subsets, started from the full vertex
/// set. It recognizes the language of the presented shift (for essential
/// presentations); missing transitions reject.
#[derive(Debug, Clone)]
pub struct SubsetAutomaton {
    pub states: Vec<VertexSet>,
    pub transitions: Vec<Vec<Option<usize>>>,
}

impl SubsetAutomaton {
    pub const START: usize = 0;

    pub fn build(g: &LabeledGraph) -> Self {
        Self::build_from(g, g.all_vertices())
    }

    pub fn build_from(g: &LabeledGraph, start: VertexSet) -> Self {
        let k = g.alphabet().len();
        let mut states = vec![start.clone()];
        let mut index: HashMap<VertexSet, usize> = HashMap::from([(start, 0)]);
        let mut transitions: Vec<Vec<Option<usize>>> = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let mut row = vec![None; k];
            if !states[i].is_empty() {
                for a in g.alphabet().symbols() {
                    let next = step(g, &states[i], a);
                    if next.is_empty() {
                        continue;
                    }
                    let id = *index.entry(next.clone()).or_insert_with(|| {
                        states.push(next);
                        states.len() - 1
                    });
                    row[a.index()] = Some(id);
                }
            }
            transitions.push(row);
            i += 1;
        }
        SubsetAutomaton {
            states,
            transitions,
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn run(&self, from: usize, w: &Block) -> Option<usize> {
        w.symbols()
            .iter()
            .try_fold(from, |s, &a| self.transitions[s][a.index()])
    }
}

/// All admissible blocks of length `n`, in lexicographic order.
pub fn blocks_of_length(g: &LabeledGraph, n: usize) -> Vec<Block> {
    let g = &trim_to_essential(g);
    if g.is_empty() {
        return Vec::new();
    }
    let dfa = SubsetAutomaton::build(g);
    let mut level: Vec<(Block, usize)> = vec![(Block::empty(), SubsetAutomaton::START)];
    for _ in 0..n {
        let mut next = Vec::new();
        for (b, s) in &level {
            for (ai, t) in dfa.transitions[*s].iter().enumerate() {
                if let Some(t) = t {
                    let mut c = b.clone();
                    c.push(Symbol(ai as u32));
                    next.push((c, *t));
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|(b, _)| b).collect()
}

/// `|B_n(X)|` by iterating the transfer matrix of the subset automaton.
/// Rejects presentations that are not right-resolving.
pub fn count_blocks(g: &LabeledGraph, n: usize) -> Result<u128> {
    if !is_right_resolving(g) {
        return Err(Error::NotRightResolving);
    }
    let g = &trim_to_essential(g);
    if g.is_empty() {
        return Ok(0);
    }
    let dfa = SubsetAutomaton::build(g);
    let mut vec = vec![0u128; dfa.len()];
    vec[SubsetAutomaton::START] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; dfa.len()];
        for (s, &c) in vec.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for t in dfa.transitions[s].iter().flatten() {
                next[*t] = next[*t].checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        vec = next;
    }
    vec.into_iter()
        .try_fold(0u128, |acc, c| acc.checked_add(c).ok_or(Error::Overflow))
}

/// Shortest (then least) block admissible in `a` but not in `b`, matching
/// symbols by name. `None` means `B(a) ⊆ B(b)`.
pub fn language_difference(a: &LabeledGraph, b: &LabeledGraph) -> Option<Block> {
    if a.is_empty() {
        return None;
    }
    let da = SubsetAutomaton::build(a);
    let db = SubsetAutomaton::build(b);
    let translate: Vec<Option<Symbol>> = a
        .alphabet()
        .symbols()
        .map(|s| b.alphabet().symbol(a.alphabet().name(s)).ok())
        .collect();
    let start_b = if b.is_empty() {
        None
    } else {
        Some(SubsetAutomaton::START)
    };
    let mut seen: HashMap<(usize, Option<usize>), ()> = HashMap::new();
    let mut queue = VecDeque::from([(SubsetAutomaton::START, start_b, Block::empty())]);
    seen.insert((SubsetAutomaton::START, start_b), ());
    while let Some((sa, sb, word)) = queue.pop_front() {
        if sb.is_none() {
            return Some(word);
        }
        for s in a.alphabet().symbols() {
            let Some(ta) = da.transitions[sa][s.index()] else {
                continue;
            };
            let tb = match (sb, translate[s.index()]) {
                (Some(sb), Some(tr)) => db.transitions[sb][tr.index()],
                _ => None,
            };
            if seen.insert((ta, tb), ()).is_none() {
                let mut w = word.clone();
                w.push(s);
                queue.push_back((ta, tb, w));
            }
        }
    }
    None
}

/// Whether two presentations present the same language (hence the same
/// shift, for essential presentations).
pub fn same_language(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    language_difference(a, b).is_none() && language_difference(b, a).is_none()
}

/// Translate a graph's labels into another alphabet by name.
pub fn relabel_into(g: &LabeledGraph, alphabet: &Alphabet) -> Result<LabeledGraph> {
    let map: Vec<Symbol> = g
        .alphabet()
        .symbols()
        .map(|s| alphabet.symbol(g.alphabet().name(s)))
        .collect::<Result<_>>()?;
    Ok(g.relabeled(alphabet.clone(), |s| map[s.index()]))
}
