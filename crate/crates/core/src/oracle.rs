//! Bounded-horizon language oracles.
//!
//! Every oracle kind is driven through the same left-to-right state machine:
//! a block is admissible iff it can be read from the start state, and the
//! state reached after a block determines which continuations are legal. For
//! sofic and code-list oracles the machine is a finite subset automaton; for
//! the Dyck shift the state is the stack of unmatched openers.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexSet};
use crate::language::SubsetAutomaton;

pub const DEFAULT_HORIZON_BUDGET: usize = 8;

#[derive(Debug, Clone)]
pub enum OracleKind {
    Sofic(LabeledGraph),
    /// Bracket pairs `(open, close)` over the oracle alphabet.
    Dyck(Vec<(Symbol, Symbol)>),
    CodeList(Vec<Block>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleState {
    Finite(usize),
    /// Unmatched openers, bottom to top, as pair indices.
    Stack(Vec<u32>),
}

#[derive(Debug, Clone)]
pub struct ShiftOracle {
    alphabet: Alphabet,
    kind: OracleKind,
    horizon_budget: usize,
    machine: Option<SubsetAutomaton>,
    // Dyck only: symbol index -> (pair, is_open)
    roles: Vec<Option<(u32, bool)>>,
}

impl ShiftOracle {
    pub fn sofic(g: &LabeledGraph) -> Self {
        ShiftOracle {
            alphabet: g.alphabet().clone(),
            machine: Some(SubsetAutomaton::build(g)),
            kind: OracleKind::Sofic(g.clone()),
            horizon_budget: DEFAULT_HORIZON_BUDGET,
            roles: Vec::new(),
        }
    }

    /// Dyck shift on `r` bracket pairs, symbols `(1 )1 (2 )2 …`.
    pub fn dyck(r: usize) -> Result<Self> {
        let names: Vec<(String, String)> = (1..=r)
            .map(|i| (format!("({i}"), format!("){i}")))
            .collect();
        let refs: Vec<(&str, &str)> = names.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Self::dyck_with_pairs(&refs)
    }

    /// Dyck shift with explicitly named bracket pairs, e.g. `[("(", ")"), ("[", "]")]`.
    pub fn dyck_with_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidAlphabet("dyck shift needs a bracket pair".into()));
        }
        let alphabet = Alphabet::new(pairs.iter().flat_map(|&(o, c)| [o, c]))?;
        let mut roles = vec![None; alphabet.len()];
        let mut sym_pairs = Vec::new();
        for (i, &(o, c)) in pairs.iter().enumerate() {
            let (so, sc) = (alphabet.symbol(o)?, alphabet.symbol(c)?);
            roles[so.index()] = Some((i as u32, true));
            roles[sc.index()] = Some((i as u32, false));
            sym_pairs.push((so, sc));
        }
        Ok(ShiftOracle {
            alphabet,
            kind: OracleKind::Dyck(sym_pairs),
            horizon_budget: DEFAULT_HORIZON_BUDGET,
            machine: None,
            roles,
        })
    }

    /// Coded system freely generated by a finite list of blocks.
    pub fn code_list(alphabet: Alphabet, generators: Vec<Block>) -> Result<Self> {
        if generators.is_empty() || generators.iter().any(Block::is_empty) {
            return Err(Error::InvalidGraph(
                "code list needs non-empty generator blocks".into(),
            ));
        }
        // Loop automaton: one vertex per position inside each generator.
        let mut names = Vec::new();
        let mut starts = Vec::new();
        for (gi, gen) in generators.iter().enumerate() {
            starts.push(names.len());
            for p in 0..gen.len() {
                names.push(format!("g{gi}p{p}"));
            }
        }
        let mut edges = Vec::new();
        for (gi, gen) in generators.iter().enumerate() {
            for (p, &a) in gen.symbols().iter().enumerate() {
                let source = starts[gi] + p;
                if p + 1 < gen.len() {
                    edges.push(crate::graph::Edge {
                        source,
                        target: source + 1,
                        label: a,
                    });
                } else {
                    for &t in &starts {
                        edges.push(crate::graph::Edge {
                            source,
                            target: t,
                            label: a,
                        });
                    }
                }
            }
        }
        let g = LabeledGraph::new_dedup(alphabet.clone(), names, edges);
        Ok(ShiftOracle {
            alphabet,
            machine: Some(SubsetAutomaton::build(&g)),
            kind: OracleKind::CodeList(generators),
            horizon_budget: DEFAULT_HORIZON_BUDGET,
            roles: Vec::new(),
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.horizon_budget = budget;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> &OracleKind {
        &self.kind
    }

    pub fn horizon_budget(&self) -> usize {
        self.horizon_budget
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            OracleKind::Sofic(_) => "sofic",
            OracleKind::Dyck(_) => "dyck",
            OracleKind::CodeList(_) => "codelist",
        }
    }

    /// Whether answers are exact for every length (sofic and finite code
    /// lists) rather than only for the Dyck stack scan semantics.
    pub fn is_finite_state(&self) -> bool {
        self.machine.is_some()
    }

    /// Number of states of the finite machine, if any.
    pub fn state_count(&self) -> Option<usize> {
        self.machine.as_ref().map(SubsetAutomaton::len)
    }

    pub fn start(&self) -> OracleState {
        match self.machine {
            Some(_) => OracleState::Finite(SubsetAutomaton::START),
            None => OracleState::Stack(Vec::new()),
        }
    }

    pub fn step(&self, state: &OracleState, a: Symbol) -> Option<OracleState> {
        match (state, &self.machine) {
            (OracleState::Finite(s), Some(m)) => m.transitions[*s][a.index()].map(OracleState::Finite),
            (OracleState::Stack(stack), None) => {
                let (pair, open) = self.roles[a.index()]?;
                let mut stack = stack.clone();
                if open {
                    stack.push(pair);
                } else {
                    match stack.last() {
                        None => {}
                        Some(&top) if top == pair => {
                            stack.pop();
                        }
                        Some(_) => return None,
                    }
                }
                Some(OracleState::Stack(stack))
            }
            _ => None,
        }
    }

    pub fn run(&self, from: &OracleState, w: &Block) -> Option<OracleState> {
        let mut s = from.clone();
        for &a in w.symbols() {
            s = self.step(&s, a)?;
        }
        Some(s)
    }

    pub fn state_after(&self, w: &Block) -> Option<OracleState> {
        self.run(&self.start(), w)
    }

    /// Admissibility without the budget check; used internally for long
    /// constructed contexts.
    pub(crate) fn admits(&self, w: &Block) -> bool {
        self.state_after(w).is_some()
    }

    /// Whether every `t` with `|t| ≤ horizon` is followable from `a` iff it is
    /// followable from `b`; returns the least separating `t` otherwise.
    pub(crate) fn separating_word(
        &self,
        a: &OracleState,
        b: &OracleState,
        horizon: usize,
    ) -> Option<Block> {
        let mut level = vec![(Block::empty(), Some(a.clone()), Some(b.clone()))];
        for _ in 0..horizon {
            let mut next = Vec::new();
            for (t, sa, sb) in &level {
                for s in self.alphabet.symbols() {
                    let na = sa.as_ref().and_then(|x| self.step(x, s));
                    let nb = sb.as_ref().and_then(|x| self.step(x, s));
                    if na.is_some() != nb.is_some() {
                        let mut w = t.clone();
                        w.push(s);
                        return Some(w);
                    }
                    if na.is_some() {
                        let mut w = t.clone();
                        w.push(s);
                        next.push((w, na, nb));
                    }
                }
            }
            level = next;
        }
        None
    }

    /// All admissible blocks of length `n`, lexicographic.
    pub fn blocks(&self, n: usize) -> Vec<Block> {
        let mut level = vec![(Block::empty(), self.start())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (b, st) in &level {
                for s in self.alphabet.symbols() {
                    if let Some(t) = self.step(st, s) {
                        let mut c = b.clone();
                        c.push(s);
                        next.push((c, t));
                    }
                }
            }
            level = next;
        }
        level.into_iter().map(|(b, _)| b).collect()
    }

    /// Shortest block leading from `from` to a state accepted by `goal`.
    ///
    /// Finite machines are searched breadth-first (least such block). The
    /// Dyck oracle closes its whole stack, which reaches the empty stack;
    /// it falls back to a breadth-first search of depth `fallback_depth`.
    pub(crate) fn connector(
        &self,
        from: &OracleState,
        goal: impl Fn(&OracleState) -> bool,
        fallback_depth: usize,
    ) -> Option<Block> {
        if goal(from) {
            return Some(Block::empty());
        }
        if let (OracleState::Stack(stack), OracleKind::Dyck(pairs)) = (from, &self.kind) {
            let closing = Block(stack.iter().rev().map(|&p| pairs[p as usize].1).collect());
            if let Some(end) = self.run(from, &closing) {
                if goal(&end) {
                    return Some(closing);
                }
            }
        }
        let mut seen: HashMap<OracleState, ()> = HashMap::from([(from.clone(), ())]);
        let mut queue = VecDeque::from([(from.clone(), Block::empty())]);
        while let Some((st, w)) = queue.pop_front() {
            if !self.is_finite_state() && w.len() >= fallback_depth {
                continue;
            }
            for s in self.alphabet.symbols() {
                if let Some(t) = self.step(&st, s) {
                    if seen.insert(t.clone(), ()).is_none() {
                        let mut c = w.clone();
                        c.push(s);
                        if goal(&t) {
                            return Some(c);
                        }
                        queue.push_back((t, c));
                    }
                }
            }
        }
        None
    }

    fn check_budget(&self, len: usize) -> Result<()> {
        if len > self.horizon_budget {
            return Err(Error::BudgetExceeded {
                requested: len,
                budget: self.horizon_budget,
            });
        }
        Ok(())
    }
}

/// Block membership in the oracle's language.
///
/// Code-list oracles only answer within the horizon budget.
pub fn oracle_admissible(o: &ShiftOracle, w: &Block) -> Result<bool> {
    if matches!(o.kind, OracleKind::CodeList(_)) {
        o.check_budget(w.len())?;
    }
    Ok(o.admits(w))
}

/// True iff for every `t` with `|t| ≤ horizon`, `ut` is admissible exactly
/// when `vt` is.
pub fn oracle_follower_equal(o: &ShiftOracle, u: &Block, v: &Block, horizon: usize) -> Result<bool> {
    o.check_budget(horizon)?;
    let su = o
        .state_after(u)
        .ok_or_else(|| Error::Inadmissible(o.alphabet.render(u)))?;
    let sv = o
        .state_after(v)
        .ok_or_else(|| Error::Inadmissible(o.alphabet.render(v)))?;
    Ok(o.separating_word(&su, &sv, horizon).is_none())
}

/// The unmatched openers of `u`, bottom to top.
pub fn dyck_follower_signature(o: &ShiftOracle, u: &Block) -> Result<Block> {
    let OracleKind::Dyck(pairs) = &o.kind else {
        return Err(Error::KindMismatch { expected: "dyck" });
    };
    match o.state_after(u) {
        Some(OracleState::Stack(stack)) => {
            Ok(Block(stack.iter().map(|&p| pairs[p as usize].0).collect()))
        }
        _ => Err(Error::Inadmissible(o.alphabet.render(u))),
    }
}

/// The start vertex set of a sofic oracle's machine state, when finite.
pub fn sofic_state_set(o: &ShiftOracle, state: &OracleState) -> Option<VertexSet> {
    match (state, &o.machine, &o.kind) {
        (OracleState::Finite(s), Some(m), OracleKind::Sofic(_)) => Some(m.states[*s].clone()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dyck2() -> ShiftOracle {
        ShiftOracle::dyck_with_pairs(&[("(", ")"), ("[", "]")]).unwrap()
    }

    fn blk(o: &ShiftOracle, s: &str) -> Block {
        o.alphabet().parse_block(s).unwrap()
    }

    #[test]
    fn dyck_admissibility() {
        let o = dyck2();
        assert!(!oracle_admissible(&o, &blk(&o, "(]")).unwrap());
        assert!(oracle_admissible(&o, &blk(&o, ")(")).unwrap());
        assert!(oracle_admissible(&o, &blk(&o, "([])")).unwrap());
        assert!(!oracle_admissible(&o, &blk(&o, "([)")).unwrap());
        assert!(oracle_admissible(&o, &blk(&o, "])[(")).unwrap());
    }

    #[test]
    fn dyck_signatures() {
        let o = dyck2();
        let sig = |s: &str| o.alphabet().render(&dyck_follower_signature(&o, &blk(&o, s)).unwrap());
        assert_eq!(sig("("), "(");
        assert_eq!(sig("([])"), "-");
        assert_eq!(sig("(("), sig("()(("));
        assert!(oracle_follower_equal(&o, &blk(&o, "(("), &blk(&o, "()(("), 6).unwrap());
        assert!(!oracle_follower_equal(&o, &blk(&o, "("), &blk(&o, "["), 2).unwrap());
        assert!(dyck_follower_signature(&o, &blk(&o, "(]")).is_err());
        let sofic = ShiftOracle::sofic(
            &LabeledGraph::from_triples(&["a"], &[("A", "A", "a")]).unwrap(),
        );
        assert_eq!(
            dyck_follower_signature(&sofic, &Block::empty()),
            Err(Error::KindMismatch { expected: "dyck" })
        );
    }

    #[test]
    fn dyck_numbered_symbols() {
        let o = ShiftOracle::dyck(2).unwrap();
        assert_eq!(o.alphabet().names(), ["(1", ")1", "(2", ")2"]);
        assert!(!o.admits(&blk(&o, "(1.)2")));
    }

    #[test]
    fn code_list_membership() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let o = ShiftOracle::code_list(a.clone(), vec![a.parse_block("10").unwrap(), a.parse_block("0").unwrap()]).unwrap();
        assert!(oracle_admissible(&o, &a.parse_block("100").unwrap()).unwrap());
        assert!(!oracle_admissible(&o, &a.parse_block("11").unwrap()).unwrap());
        let o = ShiftOracle::code_list(a.clone(), vec![a.parse_block("10").unwrap()]).unwrap();
        assert!(!oracle_admissible(&o, &a.parse_block("00").unwrap()).unwrap());
        assert!(oracle_admissible(&o, &a.parse_block("0101").unwrap()).unwrap());
        let long = a.parse_block("101010101").unwrap();
        assert!(matches!(
            oracle_admissible(&o, &long),
            Err(Error::BudgetExceeded { requested: 9, budget: 8 })
        ));
    }

    #[test]
    fn sofic_follower_equality() {
        let even = LabeledGraph::from_triples(&["0", "1"], &[("A", "A", "1"), ("A", "B", "0"), ("B", "A", "0")]).unwrap();
        let o = ShiftOracle::sofic(&even);
        let b = |s: &str| even.alphabet().parse_block(s).unwrap();
        assert!(oracle_follower_equal(&o, &b("10"), &b("1000"), 6).unwrap());
        assert!(!oracle_follower_equal(&o, &b("10"), &b("100"), 6).unwrap());
        assert!(oracle_follower_equal(&o, &b("10"), &b("100"), 9).is_err());
    }
}
