//! Finite-to-one test and degree.

use crate::alphabet::{length_lex, Block};
use crate::codes::FactorMap;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

use super::pair::{Lifted, PairAutomaton};

/// Finite-to-one iff no two distinct equal-image paths share both endpoints.
/// Such a "diamond" starts with a split (two edges out of one vertex with the
/// same image) whose pair of targets can return to the diagonal.
pub fn is_finite_to_one(f: &FactorMap) -> Result<bool> {
    let l = Lifted::new(f)?;
    Ok(finite_to_one_lifted(&l))
}

pub(crate) fn finite_to_one_lifted(l: &Lifted) -> bool {
    let pa = PairAutomaton::new(l);
    let starts: Vec<usize> = pa.splits().map(|(_, m)| m.target).collect();
    let seen = pa.reachable(starts);
    !(0..pa.len()).any(|s| seen[s] && pa.is_diagonal(s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub finite_to_one: bool,
    pub degree: Option<usize>,
    /// Image word `u·a·v` realizing the minimum, with the count taken at `a`.
    pub magic_word: Option<Block>,
    pub magic_coordinate: Option<usize>,
    /// Number of distinct cover edges at each coordinate of the magic word
    /// over all of its preimage paths.
    pub details: Vec<usize>,
    pub word_bound: usize,
    /// Word length beyond which the minimum cannot decrease.
    pub exactness_bound: usize,
    /// False when `word_bound < exactness_bound`: `degree` is then only an
    /// upper bound.
    pub exact: bool,
}

/// Default word bound: `|V|^2 + 1` for the subset cover `V` of the
/// (recoded) domain.
pub fn default_word_bound(f: &FactorMap) -> usize {
    let one = crate::codes::recode_to_one_block(f);
    let v = crate::covers::subset_cover(one.domain()).vertex_count();
    v * v + 1
}

/// Degree as the least number of cover edges seen at one coordinate by the
/// preimages of an image word `u·a·v` with `|uav| ≤ word_bound`.
pub fn degree(f: &FactorMap, word_bound: usize) -> Result<DegreeReport> {
    let l = Lifted::new(f)?;
    degree_lifted(&l, word_bound)
}

pub(crate) fn degree_lifted(l: &Lifted, word_bound: usize) -> Result<DegreeReport> {
    if !finite_to_one_lifted(l) {
        return Err(Error::NotFiniteToOne);
    }
    let fwd = l.forward_subsets();
    let bwd = l.backward_subsets();
    let max_u = fwd.iter().map(|(_, u)| u.len()).max().unwrap_or(0);
    let max_v = bwd.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let exactness_bound = max_u + 1 + max_v;

    let mut best: Option<(usize, Block, usize)> = None;
    for (s, u) in &fwd {
        for a in l.codomain_alphabet().symbols() {
            for (r, v) in &bwd {
                if u.len() + 1 + v.len() > word_bound {
                    continue;
                }
                let count = count_edges(l, s, a, r);
                if count == 0 {
                    continue;
                }
                let word = u.concat(&Block(vec![a])).concat(v);
                let better = match &best {
                    None => true,
                    Some((c, w, _)) => {
                        count < *c || (count == *c && length_lex(&word, w).is_lt())
                    }
                };
                if better {
                    best = Some((count, word, u.len()));
                }
            }
        }
    }
    let (degree, magic_word, magic_coordinate, details) = match best {
        Some((d, w, i)) => {
            let details = coordinate_counts(l, &w);
            (Some(d), Some(w), Some(i), details)
        }
        None => (None, None, None, Vec::new()),
    };
    Ok(DegreeReport {
        finite_to_one: true,
        degree,
        magic_word,
        magic_coordinate,
        details,
        word_bound,
        exactness_bound,
        exact: word_bound >= exactness_bound,
    })
}

fn count_edges(l: &Lifted, s: &VertexSet, a: crate::alphabet::Symbol, r: &VertexSet) -> usize {
    l.cover
        .edges()
        .iter()
        .zip(&l.image)
        .filter(|(e, &b)| b == a && s.contains(e.source) && r.contains(e.target))
        .count()
}

/// Distinct edges at each coordinate of the preimage paths of `w`.
pub(crate) fn coordinate_counts(l: &Lifted, w: &Block) -> Vec<usize> {
    let n = w.len();
    let mut fwd = vec![l.cover.all_vertices()];
    for &a in w.symbols() {
        let next = l.forward(fwd.last().expect("non-empty"), a);
        fwd.push(next);
    }
    let mut bwd = vec![l.cover.all_vertices(); n + 1];
    for i in (0..n).rev() {
        bwd[i] = l.backward(&bwd[i + 1], w.symbols()[i]);
    }
    (0..n)
        .map(|i| count_edges(l, &fwd[i], w.symbols()[i], &bwd[i + 1]))
        .collect()
}

/// Whether the degree is 1.
pub fn is_one_to_one_ae(f: &FactorMap, word_bound: usize) -> Result<bool> {
    Ok(degree(f, word_bound)?.degree == Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::test_maps::*;

    #[test]
    fn finite_to_one_examples() {
        assert!(is_finite_to_one(&even_map()).unwrap());
        assert!(is_finite_to_one(&xor_map()).unwrap());
        assert!(is_finite_to_one(&fork_map()).unwrap());
        assert!(!is_finite_to_one(&collapse_map()).unwrap());
    }

    #[test]
    fn degree_examples() {
        let r = degree(&even_map(), 10).unwrap();
        assert_eq!(r.degree, Some(1));
        assert!(r.exact);
        let r = degree(&xor_map(), 10).unwrap();
        assert_eq!(r.degree, Some(2));
        assert!(r.details.iter().all(|&c| c == 2));
        assert_eq!(degree(&golden_identity(), 10).unwrap().degree, Some(1));
        assert_eq!(degree(&fork_map(), 10).unwrap().degree, Some(1));
        assert_eq!(degree(&collapse_map(), 10), Err(Error::NotFiniteToOne));
        assert!(is_one_to_one_ae(&even_map(), 10).unwrap());
        assert!(!is_one_to_one_ae(&xor_map(), 10).unwrap());
    }

    #[test]
    fn tight_word_bound_is_flagged() {
        let r = degree(&even_map(), 1).unwrap();
        assert!(!r.exact);
        assert!(r.degree.unwrap() >= 1);
    }
}
