//! Right-resolving covers and synchronization.
//!
//! `subset_cover` is the follower-set graph of a presentation: its vertices
//! are the image sets `image_set(g, w, V)` of admissible words. Merging
//! vertices with equal follower languages and keeping the irreducible
//! component that carries a synchronizing word gives the Fischer cover.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Block, Symbol};
use crate::error::{Error, Result};
use crate::graph::{
    is_irreducible, strongly_connected_components, trim_to_essential, Edge, LabeledGraph,
    VertexSet,
};
use crate::language::{image_set, SubsetAutomaton};
use crate::oracle::{sofic_state_set, OracleState, ShiftOracle};

/// True iff no vertex has two outgoing edges with the same label.
pub fn is_right_resolving(g: &LabeledGraph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut labels: Vec<Symbol> = g.out_edges(v).map(|e| e.label).collect();
        let n = labels.len();
        labels.sort_unstable();
        labels.dedup();
        labels.len() == n
    })
}

/// Coarsest partition of a right-resolving graph into classes of vertices
/// with equal follower languages. Classes are sorted and listed by their
/// least member.
pub fn follower_separation(g: &LabeledGraph) -> Result<Vec<Vec<usize>>> {
    if !is_right_resolving(g) {
        return Err(Error::NotRightResolving);
    }
    let n = g.vertex_count();
    let k = g.alphabet().len();
    let mut succ = vec![vec![None; k]; n];
    for e in g.edges() {
        succ[e.source][e.label.index()] = Some(e.target);
    }
    let mut class = vec![0usize; n];
    let mut count = usize::from(n > 0);
    // Moore refinement: at most n rounds.
    loop {
        let mut sigs: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for v in 0..n {
            let sig = (
                class[v],
                succ[v].iter().map(|t| t.map(|t| class[t])).collect(),
            );
            let len = sigs.len();
            next[v] = *sigs.entry(sig).or_insert(len);
        }
        let new_count = sigs.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (v, &c) in class.iter().enumerate() {
        classes[c].push(v);
    }
    classes.sort_by_key(|c| c[0]);
    Ok(classes)
}

/// Quotient of a right-resolving graph by a follower partition.
pub fn merge_classes(g: &LabeledGraph, classes: &[Vec<usize>]) -> LabeledGraph {
    let mut of = vec![0usize; g.vertex_count()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            of[v] = i;
        }
    }
    let names = classes
        .iter()
        .map(|c| {
            c.iter()
                .map(|&v| g.vertex_name(v))
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            source: of[e.source],
            target: of[e.target],
            label: e.label,
        })
        .collect();
    LabeledGraph::new_dedup(g.alphabet().clone(), names, edges)
}

fn set_name(g: &LabeledGraph, s: &VertexSet) -> String {
    let inner: Vec<&str> = s.members().iter().map(|&v| g.vertex_name(v)).collect();
    format!("{{{}}}", inner.join(","))
}

/// The follower-set graph reachable from the full vertex set, trimmed to its
/// essential part. Always right-resolving.
pub fn subset_cover(g: &LabeledGraph) -> LabeledGraph {
    if g.is_empty() {
        return g.clone();
    }
    let dfa = SubsetAutomaton::build(g);
    let names = dfa.states.iter().map(|s| set_name(g, s)).collect();
    let mut edges = Vec::new();
    for (s, row) in dfa.transitions.iter().enumerate() {
        for (a, t) in row.iter().enumerate() {
            if let Some(t) = t {
                edges.push(Edge {
                    source: s,
                    target: *t,
                    label: Symbol(a as u32),
                });
            }
        }
    }
    trim_to_essential(&LabeledGraph::new_dedup(g.alphabet().clone(), names, edges))
}

/// Least (length-lexicographic) non-empty block with a singleton image set
/// from all vertices of a right-resolving graph.
fn least_focusing_word(h: &LabeledGraph, max_len: usize) -> Option<(Block, usize)> {
    if h.is_empty() {
        return None;
    }
    let start = h.all_vertices();
    let mut seen: HashMap<VertexSet, ()> = HashMap::from([(start.clone(), ())]);
    let mut queue = VecDeque::from([(start, Block::empty())]);
    while let Some((set, w)) = queue.pop_front() {
        if w.len() >= max_len {
            continue;
        }
        for a in h.alphabet().symbols() {
            let next = crate::language::step(h, &set, a);
            if next.is_empty() {
                continue;
            }
            let mut c = w.clone();
            c.push(a);
            if next.len() == 1 {
                return Some((c, next.members()[0]));
            }
            if seen.insert(next.clone(), ()).is_none() {
                queue.push_back((next, c));
            }
        }
    }
    None
}

/// Length-lexicographically least admissible block whose image set in the
/// subset cover is a singleton, if one exists with length `≤ max_len`.
pub fn find_synchronizing_word(g: &LabeledGraph, max_len: usize) -> Option<Block> {
    least_focusing_word(&subset_cover(g), max_len).map(|(w, _)| w)
}

/// Fischer cover: minimal right-resolving presentation of an irreducible
/// sofic shift. Vertices are named `F0, F1, …` in breadth-first order from
/// the vertex hit by the least synchronizing word, so isomorphic covers come
/// out identical.
pub fn fischer_cover(g: &LabeledGraph) -> Result<LabeledGraph> {
    let g = trim_to_essential(g);
    if !is_irreducible(&g) {
        return Err(Error::NotIrreducible);
    }
    let sc = subset_cover(&g);
    let merged = merge_classes(&sc, &follower_separation(&sc)?);
    // The BFS over image sets is finite, so this only fails for inputs that
    // are not irreducible sofic presentations.
    let (_, v) = least_focusing_word(&merged, usize::MAX)
        .ok_or(Error::NoSynchronizingWord { bound: sc.vertex_count() })?;
    let comp = strongly_connected_components(&merged)
        .into_iter()
        .find(|c| c.contains(&v))
        .expect("vertex lies in some component");
    let mut keep = vec![false; merged.vertex_count()];
    for &u in &comp {
        keep[u] = true;
    }
    let core = merged.induced(&keep);
    let root = core
        .vertex(merged.vertex_name(v))
        .expect("component keeps its root");
    Ok(relabel_breadth_first(&core, root))
}

fn relabel_breadth_first(g: &LabeledGraph, root: usize) -> LabeledGraph {
    let n = g.vertex_count();
    let mut order = vec![usize::MAX; n];
    let mut seq = vec![root];
    order[root] = 0;
    let mut i = 0;
    while i < seq.len() {
        let v = seq[i];
        let mut outs: Vec<&Edge> = g.out_edges(v).collect();
        outs.sort_by_key(|e| (e.label, e.target));
        for e in outs {
            if order[e.target] == usize::MAX {
                order[e.target] = seq.len();
                seq.push(e.target);
            }
        }
        i += 1;
    }
    // Unreached vertices (only possible for reducible input) go last.
    for v in 0..n {
        if order[v] == usize::MAX {
            order[v] = seq.len();
            seq.push(v);
        }
    }
    let names = (0..n).map(|i| format!("F{i}")).collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|e| Edge {
            source: order[e.source],
            target: order[e.target],
            label: e.label,
        })
        .collect();
    edges.sort_by_key(|e| (e.source, e.label, e.target));
    LabeledGraph::new_dedup(g.alphabet().clone(), names, edges)
}

/// Canonical form of an irreducible right-resolving graph: breadth-first
/// renumbering from the vertex hit by the least focusing word.
pub fn canonical_form(g: &LabeledGraph) -> Result<LabeledGraph> {
    if !is_right_resolving(g) {
        return Err(Error::NotRightResolving);
    }
    if !is_irreducible(g) {
        return Err(Error::NotIrreducible);
    }
    let (_, v) = least_focusing_word(g, usize::MAX).ok_or(Error::NoSynchronizingWord {
        bound: g.vertex_count(),
    })?;
    Ok(relabel_breadth_first(g, v))
}

/// Isomorphism of irreducible right-resolving graphs via canonical forms.
/// Symbols are matched by name.
pub fn is_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> Result<bool> {
    if a.alphabet().len() != b.alphabet().len() {
        return Ok(false);
    }
    let Ok(b) = crate::language::relabel_into(b, a.alphabet()) else {
        return Ok(false);
    };
    Ok(canonical_form(a)? == canonical_form(&b)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyncStatus {
    Synchronizing,
    NotSynchronizing,
}

/// Outcome of a synchronizing-block check. The witness `(u, w)` has `uv`
/// and `vw` admissible but `uvw` not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncVerdict {
    pub status: SyncStatus,
    pub witness: Option<(Block, Block)>,
}

impl SyncVerdict {
    pub fn is_synchronizing(&self) -> bool {
        self.status == SyncStatus::Synchronizing
    }
}

/// Decide whether `v` is a synchronizing block of the irreducible sofic
/// shift presented by `g`.
///
/// The decision is exact: `v` is synchronizing iff its image set in the
/// Fischer cover is a singleton. Refutation witnesses are searched first
/// with `|u|, |w| ≤ context_bound`, then without a bound.
pub fn is_synchronizing(g: &LabeledGraph, v: &Block, context_bound: usize) -> Result<SyncVerdict> {
    let fischer = fischer_cover(g)?;
    let img = image_set(&fischer, v, &fischer.all_vertices());
    if img.is_empty() {
        return Err(Error::Inadmissible(g.alphabet().render(v)));
    }
    if img.len() == 1 {
        return Ok(SyncVerdict {
            status: SyncStatus::Synchronizing,
            witness: None,
        });
    }
    let dfa = SubsetAutomaton::build(&fischer);
    let witness = sync_witness(&dfa, v, Some(context_bound))
        .or_else(|| sync_witness(&dfa, v, None))
        .expect("a non-synchronizing block has a refutation");
    Ok(SyncVerdict {
        status: SyncStatus::NotSynchronizing,
        witness: Some(witness),
    })
}

/// Least `(u, w)` by total length, then `u`, then `w`.
fn sync_witness(dfa: &SubsetAutomaton, v: &Block, bound: Option<usize>) -> Option<(Block, Block)> {
    let sv = dfa.run(SubsetAutomaton::START, v)?;
    let k = dfa.transitions.first().map_or(0, Vec::len);
    let limit = bound.unwrap_or(usize::MAX);
    // Breadth-first over states after u; later u's reaching a seen state are
    // dominated.
    let mut seen: HashMap<usize, ()> = HashMap::from([(SubsetAutomaton::START, ())]);
    let mut queue = VecDeque::from([(SubsetAutomaton::START, Block::empty())]);
    let mut best: Option<(Block, Block)> = None;
    let mut w_cache: HashMap<usize, Option<Block>> = HashMap::new();
    while let Some((su, u)) = queue.pop_front() {
        if let Some((bu, bw)) = &best {
            if u.len() > bu.len() + bw.len() {
                break;
            }
        }
        if let Some(suv) = dfa.run(su, v) {
            let w = w_cache
                .entry(suv)
                .or_insert_with(|| distinguishing(dfa, sv, suv, limit))
                .clone();
            if let Some(w) = w {
                let better = match &best {
                    None => true,
                    Some((bu, bw)) => u.len() + w.len() < bu.len() + bw.len(),
                };
                if better {
                    best = Some((u.clone(), w));
                }
            }
        }
        if u.len() >= limit {
            continue;
        }
        for a in 0..k {
            if let Some(t) = dfa.transitions[su][a] {
                if seen.insert(t, ()).is_none() {
                    let mut c = u.clone();
                    c.push(Symbol(a as u32));
                    queue.push_back((t, c));
                }
            }
        }
    }
    best
}

/// Least `w` readable from `yes` but not from `no`.
fn distinguishing(dfa: &SubsetAutomaton, yes: usize, no: usize, limit: usize) -> Option<Block> {
    let k = dfa.transitions.first().map_or(0, Vec::len);
    let mut seen: HashMap<(usize, Option<usize>), ()> = HashMap::from([((yes, Some(no)), ())]);
    let mut queue = VecDeque::from([(yes, Some(no), Block::empty())]);
    while let Some((a, b, w)) = queue.pop_front() {
        if b.is_none() {
            return Some(w);
        }
        if w.len() >= limit {
            continue;
        }
        for s in 0..k {
            if let Some(ta) = dfa.transitions[a][s] {
                let tb = b.and_then(|b| dfa.transitions[b][s]);
                if seen.insert((ta, tb), ()).is_none() {
                    let mut c = w.clone();
                    c.push(Symbol(s as u32));
                    queue.push_back((ta, tb, c));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfSyncStatus {
    HoldsAtHorizon,
    Refuted,
}

/// Outcome of a bounded half-synchronization check for a candidate block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSyncVerdict {
    pub status: HalfSyncStatus,
    pub block: Block,
    pub horizon: usize,
    /// Left context ending in `block`, containing every admissible block up
    /// to the covered length. Present iff the check holds.
    pub transitive_ray_prefix: Option<Block>,
    /// Length of the blocks the context was built to contain.
    pub covered_length: usize,
    /// Continuation of `block` that the constructed context cannot follow.
    pub refutation: Option<Block>,
    /// True when the positive answer is exact rather than horizon-bounded
    /// (finite-state oracle, horizon at least its state count, and the
    /// context passes through a focusing state).
    pub exact: bool,
}

impl HalfSyncVerdict {
    pub fn holds(&self) -> bool {
        self.status == HalfSyncStatus::HoldsAtHorizon
    }
}

/// Bounded check that `m` is a half-synchronizing block.
///
/// Builds a left context `c` by concatenating every admissible block of
/// length `min(horizon, budget)` with connectors, then a final connector
/// and `m`, such that every `u` with `|u| ≤ horizon` following `m` also
/// follows `c`.
pub fn is_half_synchronizing(o: &ShiftOracle, m: &Block, horizon: usize) -> Result<HalfSyncVerdict> {
    let m_state = o
        .state_after(m)
        .ok_or_else(|| Error::Inadmissible(o.alphabet().render(m)))?;
    let covered = horizon.min(o.horizon_budget());
    let fallback = 2 * covered + m.len() + 2;

    let mut context = Block::empty();
    let mut state = o.start();
    let mut focused = false;
    let mut note_focus = |st: &OracleState| {
        if let Some(set) = sofic_state_set(o, st) {
            if set.len() == 1 {
                return true;
            }
        }
        false
    };

    let append = |context: &mut Block, state: &mut OracleState, w: &Block, focused: &mut bool, note: &mut dyn FnMut(&OracleState) -> bool| -> bool {
        for &a in w.symbols() {
            match o.step(state, a) {
                Some(t) => {
                    *state = t;
                    context.push(a);
                    if note(state) {
                        *focused = true;
                    }
                }
                None => return false,
            }
        }
        true
    };

    for b in o.blocks(covered) {
        let conn = o
            .connector(&state, |s| o.run(s, &b).is_some(), fallback)
            .ok_or_else(|| Error::Inadmissible(o.alphabet().render(&b)))?;
        let ok = append(&mut context, &mut state, &conn, &mut focused, &mut note_focus)
            && append(&mut context, &mut state, &b, &mut focused, &mut note_focus);
        debug_assert!(ok, "connector leads to a state reading the block");
    }

    let target = |s: &OracleState| {
        o.run(s, m)
            .is_some_and(|end| o.separating_word(&end, &m_state, horizon).is_none())
    };
    let exact_possible = o.state_count().is_some_and(|n| horizon >= n);
    match o.connector(&state, target, fallback) {
        Some(conn) => {
            append(&mut context, &mut state, &conn, &mut focused, &mut note_focus);
            append(&mut context, &mut state, m, &mut focused, &mut note_focus);
            Ok(HalfSyncVerdict {
                status: HalfSyncStatus::HoldsAtHorizon,
                block: m.clone(),
                horizon,
                transitive_ray_prefix: Some(context),
                covered_length: covered,
                refutation: None,
                exact: exact_possible && focused,
            })
        }
        None => {
            let conn = o
                .connector(&state, |s| o.run(s, m).is_some(), fallback)
                .ok_or_else(|| Error::Inadmissible(o.alphabet().render(m)))?;
            append(&mut context, &mut state, &conn, &mut focused, &mut note_focus);
            append(&mut context, &mut state, m, &mut focused, &mut note_focus);
            let u = o
                .separating_word(&m_state, &state, horizon)
                .expect("no connector means some continuation is lost");
            Ok(HalfSyncVerdict {
                status: HalfSyncStatus::Refuted,
                block: m.clone(),
                horizon,
                transitive_ray_prefix: None,
                covered_length: covered,
                refutation: Some(u),
                exact: false,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::{blocks_of_length, is_admissible};

    fn g(triples: &[(&str, &str, &str)]) -> LabeledGraph {
        LabeledGraph::from_triples(&["0", "1"], triples).unwrap()
    }

    fn golden() -> LabeledGraph {
        g(&[("A", "A", "0"), ("A", "B", "1"), ("B", "A", "0")])
    }

    fn even() -> LabeledGraph {
        g(&[("A", "A", "1"), ("A", "B", "0"), ("B", "A", "0")])
    }

    fn even4() -> LabeledGraph {
        g(&[
            ("A", "A", "1"),
            ("A", "B", "0"),
            ("B", "C", "0"),
            ("C", "C", "1"),
            ("C", "D", "0"),
            ("D", "A", "0"),
        ])
    }

    fn full2() -> LabeledGraph {
        g(&[("V", "V", "0"), ("V", "V", "1")])
    }

    fn b(s: &str) -> Block {
        golden().alphabet().parse_block(s).unwrap()
    }

    #[test]
    fn right_resolving_examples() {
        assert!(is_right_resolving(&golden()));
        let ab = LabeledGraph::from_triples(&["a", "b"], &[("V", "V", "a"), ("V", "V", "b")]).unwrap();
        assert!(is_right_resolving(&ab));
        let nrr = LabeledGraph::from_triples(
            &["a", "b"],
            &[("A", "B", "a"), ("A", "C", "a"), ("B", "A", "b"), ("C", "A", "b")],
        )
        .unwrap();
        assert!(!is_right_resolving(&nrr));
    }

    #[test]
    fn separation_examples() {
        assert_eq!(follower_separation(&golden()).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(
            follower_separation(&even4()).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert_eq!(follower_separation(&full2()).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn subset_cover_is_right_resolving_and_preserves_language() {
        let nrr = g(&[
            ("A", "A", "0"),
            ("A", "B", "1"),
            ("B", "A", "0"),
            ("A", "C", "0"),
            ("C", "A", "0"),
        ]);
        let sc = subset_cover(&nrr);
        assert!(is_right_resolving(&sc));
        for n in 0..=10 {
            assert_eq!(blocks_of_length(&sc, n), blocks_of_length(&golden(), n));
        }
        let sc = subset_cover(&golden());
        assert!(sc.vertex_names().iter().any(|v| v == "{A}" || v == "{B}"));
        assert_eq!(subset_cover(&full2()).vertex_count(), 1);
    }

    #[test]
    fn fischer_examples() {
        let f = fischer_cover(&golden()).unwrap();
        assert_eq!(f.vertex_count(), 2);
        assert!(is_isomorphic(&f, &golden()).unwrap());
        let f4 = fischer_cover(&even4()).unwrap();
        assert_eq!(f4.vertex_count(), 2);
        assert_eq!(f4, fischer_cover(&even()).unwrap());
        assert_eq!(fischer_cover(&f4).unwrap(), f4);
        assert_eq!(fischer_cover(&full2()).unwrap().vertex_count(), 1);
        let two = LabeledGraph::from_triples(&["a"], &[("A", "A", "a"), ("B", "B", "a")]).unwrap();
        assert_eq!(fischer_cover(&two), Err(Error::NotIrreducible));
    }

    #[test]
    fn synchronizing_words() {
        // "0" already has the singleton image {A} in the golden mean cover.
        assert_eq!(find_synchronizing_word(&golden(), 4), Some(b("0")));
        assert_eq!(find_synchronizing_word(&even(), 4), Some(b("1")));
        assert_eq!(find_synchronizing_word(&full2(), 4), Some(b("0")));
        assert_eq!(find_synchronizing_word(&even4(), 4), Some(b("1")));
    }

    #[test]
    fn sync_verdicts() {
        assert!(is_synchronizing(&golden(), &b("1"), 8).unwrap().is_synchronizing());
        let v = is_synchronizing(&even(), &b("0"), 8).unwrap();
        assert_eq!(v.status, SyncStatus::NotSynchronizing);
        let (u, w) = v.witness.unwrap();
        let e = even();
        assert!(is_admissible(&e, &u.concat(&b("0"))));
        assert!(is_admissible(&e, &b("0").concat(&w)));
        assert!(!is_admissible(&e, &u.concat(&b("0")).concat(&w)));
        assert_eq!((u, w), (b("1"), b("1")));
        assert!(is_synchronizing(&full2(), &b("01"), 4).unwrap().is_synchronizing());
        assert!(matches!(
            is_synchronizing(&golden(), &b("11"), 4),
            Err(Error::Inadmissible(_))
        ));
        // redundant presentation: "1" is still intrinsically synchronizing
        assert!(is_synchronizing(&even4(), &b("1"), 8).unwrap().is_synchronizing());
    }

    #[test]
    fn half_sync_sofic() {
        let o = ShiftOracle::sofic(&golden());
        let v = is_half_synchronizing(&o, &b("1"), 6).unwrap();
        assert!(v.holds());
        let c = v.transitive_ray_prefix.unwrap();
        assert!(c.ends_with(&b("1")));
        assert!(is_admissible(&golden(), &c));
        for w in blocks_of_length(&golden(), 6) {
            assert!(c.0.windows(6).any(|x| x == w.symbols()));
        }
        let o = ShiftOracle::sofic(&full2());
        assert!(is_half_synchronizing(&o, &b("0110"), 4).unwrap().holds());
    }

    #[test]
    fn half_sync_refutes_unreachable_follower_set() {
        // In the even shift, "0" alone leaves the parity open; no left context
        // containing a 1 keeps both continuations "1" and "01".
        let o = ShiftOracle::sofic(&even());
        let v = is_half_synchronizing(&o, &b("0"), 3).unwrap();
        assert_eq!(v.status, HalfSyncStatus::Refuted);
        assert!(v.refutation.is_some());
        assert!(is_half_synchronizing(&o, &b("1"), 3).unwrap().holds());
    }

    #[test]
    fn half_sync_dyck() {
        let o = ShiftOracle::dyck_with_pairs(&[("(", ")"), ("[", "]")]).unwrap();
        let m = o.alphabet().parse_block("()").unwrap();
        for h in 2..=4 {
            let v = is_half_synchronizing(&o, &m, h).unwrap();
            assert!(v.holds(), "horizon {h}");
            assert!(!v.exact);
            assert!(o.admits(v.transitive_ray_prefix.as_ref().unwrap()));
        }
    }
}
