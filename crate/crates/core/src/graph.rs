//! Finite labeled graphs presenting sofic shifts, and their text format.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: Symbol,
}

/// A finite directed multigraph with labeled edges.
///
/// Vertex order is declaration order. Two edges with identical source,
/// target and label are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    alphabet: Alphabet,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

/// A set of vertices of some graph, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl LabeledGraph {
    pub fn new(alphabet: Alphabet, vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut seen_names = HashSet::new();
        for v in &vertices {
            if v.is_empty() || v.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGraph(format!("bad vertex name `{v}`")));
            }
            if !seen_names.insert(v.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut seen = HashSet::new();
        for e in &edges {
            if e.source >= vertices.len() || e.target >= vertices.len() {
                return Err(Error::InvalidGraph("edge endpoint out of range".into()));
            }
            if e.label.index() >= alphabet.len() {
                return Err(Error::InvalidGraph("edge label out of range".into()));
            }
            if !seen.insert(*e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {} {}",
                    vertices[e.source],
                    vertices[e.target],
                    alphabet.name(e.label)
                )));
            }
        }
        Ok(Self::assemble(alphabet, vertices, edges))
    }

    /// Like [`LabeledGraph::new`] but silently drops duplicate edges.
    pub(crate) fn new_dedup(alphabet: Alphabet, vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut seen = HashSet::new();
        let edges: Vec<Edge> = edges.into_iter().filter(|e| seen.insert(*e)).collect();
        Self::assemble(alphabet, vertices, edges)
    }

    fn assemble(alphabet: Alphabet, vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut out = vec![Vec::new(); vertices.len()];
        let mut inc = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.source].push(i);
            inc[e.target].push(i);
        }
        LabeledGraph {
            alphabet,
            vertices,
            edges,
            out,
            inc,
        }
    }

    /// Build from name triples `(source, target, label)`; vertices are
    /// declared in order of first appearance.
    pub fn from_triples(alphabet: &[&str], triples: &[(&str, &str, &str)]) -> Result<Self> {
        let alphabet = Alphabet::new(alphabet.iter().copied())?;
        let mut vertices: Vec<String> = Vec::new();
        let mut index = HashMap::new();
        let mut vid = |name: &str, vertices: &mut Vec<String>| {
            *index.entry(name.to_string()).or_insert_with(|| {
                vertices.push(name.to_string());
                vertices.len() - 1
            })
        };
        let mut edges = Vec::new();
        for &(s, t, a) in triples {
            let source = vid(s, &mut vertices);
            let target = vid(t, &mut vertices);
            edges.push(Edge {
                source,
                target,
                label: alphabet.symbol(a)?,
            });
        }
        Self::new(alphabet, vertices, edges)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.out[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn out_edge_ids(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = &Edge> + '_ {
        self.inc[v].iter().map(move |&i| &self.edges[i])
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertices.len())
    }

    /// Induced subgraph on `keep` (vertex order preserved).
    pub fn induced(&self, keep: &[bool]) -> LabeledGraph {
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            if keep[v] {
                map[v] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.source] && keep[e.target])
            .map(|e| Edge {
                source: map[e.source],
                target: map[e.target],
                label: e.label,
            })
            .collect();
        Self::assemble(self.alphabet.clone(), vertices, edges)
    }

    /// Replace edge labels through `relabel`, over a new alphabet. Parallel
    /// edges that become identical are merged.
    pub fn relabeled(&self, alphabet: Alphabet, relabel: impl Fn(Symbol) -> Symbol) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                label: relabel(e.label),
                ..*e
            })
            .collect();
        Self::new_dedup(alphabet, self.vertices.clone(), edges)
    }

    /// Same graph with vertices renamed.
    pub fn with_vertex_names(&self, names: Vec<String>) -> Result<Self> {
        assert_eq!(names.len(), self.vertices.len());
        Self::new(self.alphabet.clone(), names, self.edges.clone())
    }

    /// Text form, accepted back by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "alphabet {}", self.alphabet);
        for v in &self.vertices {
            let _ = writeln!(s, "vertex {v}");
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "edge {} {} {}",
                self.vertices[e.source],
                self.vertices[e.target],
                self.alphabet.name(e.label)
            );
        }
        s
    }
}

/// Remove vertices until every remaining vertex has an incoming and an
/// outgoing edge. The result may be empty.
pub fn trim_to_essential(g: &LabeledGraph) -> LabeledGraph {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut indeg = vec![0usize; n];
    let mut outdeg = vec![0usize; n];
    for e in g.edges() {
        outdeg[e.source] += 1;
        indeg[e.target] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0 || outdeg[v] == 0).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for e in g.out_edges(v) {
            if alive[e.target] && e.target != v {
                indeg[e.target] -= 1;
                if indeg[e.target] == 0 {
                    stack.push(e.target);
                }
            }
        }
        for e in g.in_edges(v) {
            if alive[e.source] && e.source != v {
                outdeg[e.source] -= 1;
                if outdeg[e.source] == 0 {
                    stack.push(e.source);
                }
            }
        }
    }
    g.induced(&alive)
}

/// Strongly connected components (Tarjan), each sorted, listed in order of
/// their least vertex.
pub fn strongly_connected_components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next = 0usize;
    let mut comps = Vec::new();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        // (vertex, position in its out-list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(v, pos)) = call.last() {
            let outs = g.out_edge_ids(v);
            if pos < outs.len() {
                let w = g.edge(outs[pos]).target;
                call.last_mut().expect("non-empty").1 += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// Components that carry at least one edge (the irreducible pieces).
pub fn irreducible_components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    strongly_connected_components(g)
        .into_iter()
        .filter(|c| {
            let set: HashSet<usize> = c.iter().copied().collect();
            c.iter()
                .any(|&v| g.out_edges(v).any(|e| set.contains(&e.target)))
        })
        .collect()
}

/// True iff the graph is non-empty and strongly connected.
pub fn is_irreducible(g: &LabeledGraph) -> bool {
    !g.is_empty() && strongly_connected_components(g).len() == 1
}

/// Parse the line-oriented graph format.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut alphabet: Option<Alphabet> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut vindex: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut seen = HashSet::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let err = |message: String| Error::Parse { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err("alphabet declared twice".into()));
                }
                let a = Alphabet::new(toks[1..].iter().copied()).map_err(|e| err(e.to_string()))?;
                alphabet = Some(a);
            }
            "vertex" => {
                if toks.len() != 2 {
                    return Err(err("expected `vertex <name>`".into()));
                }
                if vindex.contains_key(toks[1]) {
                    return Err(err(format!("duplicate vertex `{}`", toks[1])));
                }
                vindex.insert(toks[1].to_string(), vertices.len());
                vertices.push(toks[1].to_string());
            }
            "edge" => {
                if toks.len() != 4 {
                    return Err(err("expected `edge <source> <target> <label>`".into()));
                }
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| err("edge before alphabet declaration".into()))?;
                let source = *vindex
                    .get(toks[1])
                    .ok_or_else(|| err(format!("undeclared vertex `{}`", toks[1])))?;
                let target = *vindex
                    .get(toks[2])
                    .ok_or_else(|| err(format!("undeclared vertex `{}`", toks[2])))?;
                let label = a
                    .symbol(toks[3])
                    .map_err(|_| err(format!("undeclared symbol `{}`", toks[3])))?;
                let e = Edge {
                    source,
                    target,
                    label,
                };
                if !seen.insert(e) {
                    return Err(err(format!(
                        "duplicate edge {} {} {}",
                        toks[1], toks[2], toks[3]
                    )));
                }
                edges.push(e);
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    let alphabet = alphabet.ok_or(Error::Parse {
        line: 0,
        message: "missing alphabet declaration".into(),
    })?;
    LabeledGraph::new(alphabet, vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> LabeledGraph {
        LabeledGraph::from_triples(&["0", "1"], &[("A", "A", "0"), ("A", "B", "1"), ("B", "A", "0")])
            .unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let text = "alphabet 0 1\n# comment\nvertex A\nvertex B\nedge A A 0\nedge A B 1\nedge B A 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, golden());
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "alphabet 0 1\nvertex A\nedge A B 0\n";
        assert_eq!(
            parse_graph(bad).unwrap_err(),
            Error::Parse {
                line: 3,
                message: "undeclared vertex `B`".into()
            }
        );
        let dup = "alphabet a\nvertex A\nedge A A a\nedge A A a\n";
        assert!(matches!(parse_graph(dup), Err(Error::Parse { line: 4, .. })));
        let kw = "alphabet a\nnode A\n";
        assert!(matches!(parse_graph(kw), Err(Error::Parse { line: 2, .. })));
        let sym = "alphabet a\nvertex A\nedge A A b\n";
        assert!(matches!(parse_graph(sym), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn trim_removes_dangling_parts() {
        let g = LabeledGraph::from_triples(&["x"], &[("A", "B", "x")]).unwrap();
        assert!(trim_to_essential(&g).is_empty());

        assert_eq!(trim_to_essential(&golden()), golden());

        let g = LabeledGraph::from_triples(
            &["x"],
            &[("A", "B", "x"), ("B", "A", "x"), ("C", "A", "x")],
        )
        .unwrap();
        let t = trim_to_essential(&g);
        assert_eq!(t.vertex_names(), ["A", "B"]);
        assert_eq!(t.edges().len(), 2);
        assert_eq!(trim_to_essential(&t), t);
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&golden()));
        let even = LabeledGraph::from_triples(
            &["0", "1"],
            &[("A", "A", "1"), ("A", "B", "0"), ("B", "A", "0")],
        )
        .unwrap();
        assert!(is_irreducible(&even));
        let two_loops =
            LabeledGraph::from_triples(&["a"], &[("A", "A", "a"), ("B", "B", "a")]).unwrap();
        assert!(!is_irreducible(&two_loops));
        assert_eq!(irreducible_components(&two_loops), vec![vec![0], vec![1]]);
    }

    #[test]
    fn scc_on_chain_with_cycles() {
        let g = LabeledGraph::from_triples(
            &["a"],
            &[("A", "B", "a"), ("B", "A", "a"), ("B", "C", "a"), ("C", "D", "a"), ("D", "C", "a")],
        )
        .unwrap();
        assert_eq!(strongly_connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
    }
}
