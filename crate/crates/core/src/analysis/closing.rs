//! Right-closing almost everywhere.
//!
//! A delay of `D` means: two paths leaving the same cover vertex whose
//! images agree on `D + 1` symbols start with the same edge. Every cover
//! vertex is the end of a left-transitive ray, so this is the a.e. notion.

use crate::alphabet::Block;
use crate::codes::FactorMap;
use crate::error::Result;

use super::pair::{Lifted, PairAutomaton};

/// Two domain continuations after a common left context, with equal images
/// on `delay_bound + 1` symbols but different first symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosingWitness {
    pub context: Block,
    pub left: Block,
    pub right: Block,
    pub image: Block,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosingReport {
    pub right_closing_ae: bool,
    /// Least delay, present iff it is at most the bound.
    pub delay: Option<usize>,
    /// Least delay with no bound applied; `None` means not right-closing.
    pub minimal_delay: Option<usize>,
    pub delay_bound: usize,
    pub witness: Option<ClosingWitness>,
}

pub fn right_closing_ae(f: &FactorMap, delay_bound: usize) -> Result<ClosingReport> {
    let l = Lifted::new(f)?;
    Ok(closing_lifted(&l, delay_bound))
}

pub(crate) fn closing_lifted(l: &Lifted, delay_bound: usize) -> ClosingReport {
    let pa = PairAutomaton::new(l);
    let longest = pa.longest_walks();
    let mut minimal: Option<usize> = Some(0);
    for (_, m) in pa.splits() {
        minimal = match (minimal, longest[m.target]) {
            (Some(d), Some(w)) => Some(d.max(w + 1)),
            _ => None,
        };
    }
    if let Some(d) = minimal.filter(|&d| d <= delay_bound) {
        return ClosingReport {
            right_closing_ae: true,
            delay: Some(d),
            minimal_delay: Some(d),
            delay_bound,
            witness: None,
        };
    }
    // A split followed by a walk of `delay_bound` more steps.
    let (s, first) = pa
        .splits()
        .find(|(_, m)| longest[m.target].is_none_or(|w| w >= delay_bound))
        .expect("delay exceeds the bound");
    let rest = pa.walk(first.target, delay_bound, &longest);
    let (v, _) = pa.components(s);
    let g = &l.cover;
    let mut left = Block::empty();
    let mut right = Block::empty();
    let mut image = Block::empty();
    for m in std::iter::once(first).chain(rest.iter()) {
        left.push(g.edge(m.left_edge).label);
        right.push(g.edge(m.right_edge).label);
        image.push(m.image);
    }
    ClosingReport {
        right_closing_ae: false,
        delay: None,
        minimal_delay: minimal,
        delay_bound,
        witness: Some(ClosingWitness {
            context: l.focusing_context(v).unwrap_or_default(),
            left,
            right,
            image,
        }),
    }
}
