//! Hyperbolicity certificates.
//!
//! For an odd image word `w = y_{[−n,n]}` and `k ≤ n`:
//!
//! * condition (1): every point with `w` centered sees the same set of
//!   central `(2k+1)`-windows among its preimages. On the cover this is a
//!   statement about triples `(s, t, m)` from image-`w` paths (start, end,
//!   central labels) against every pair of reachable forward and backward
//!   image sets.
//! * condition (2): for every image word `w'` beginning and ending with `w`,
//!   preimages agreeing on the central window agree up to `k + p`. Checked
//!   exactly on a product of a matcher for `w` with the pair automaton, and
//!   by enumeration up to a length bound.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::codes::{FactorMap, Horizon};
use crate::error::Result;
use crate::language::blocks_of_length;

use super::pair::{Lifted, PairAutomaton};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicCertificate {
    pub word: Block,
    pub half_width_n: usize,
    pub d: usize,
    pub k: usize,
    /// The central windows, sorted, over the recoded 1-block domain alphabet.
    pub central_blocks: Vec<Block>,
    pub domain_alphabet: Alphabet,
    /// Longest `w'` enumerated for condition (2); `Unbounded` when the
    /// product fixpoint also proved it for every length.
    pub extension_horizon: Horizon,
    pub extension_bound: usize,
}

pub fn find_hyperbolic_certificate(
    f: &FactorMap,
    word_bound: usize,
    k_bound: usize,
    extension_bound: usize,
) -> Result<Option<HyperbolicCertificate>> {
    let l = Lifted::new(f)?;
    Ok(find_hyperbolic_lifted(&l, word_bound, k_bound, extension_bound))
}

pub(crate) fn find_hyperbolic_lifted(
    l: &Lifted,
    word_bound: usize,
    k_bound: usize,
    extension_bound: usize,
) -> Option<HyperbolicCertificate> {
    let pa = PairAutomaton::new(l);
    let fwd = l.forward_subsets();
    let bwd = l.backward_subsets();
    let image = l.image_graph();
    for len in (1..=word_bound).step_by(2) {
        let n = len / 2;
        for w in blocks_of_length(&image, len) {
            for k in 0..=n.min(k_bound) {
                let Some(central) = condition_one(l, &fwd, &bwd, &w, k) else {
                    continue;
                };
                if !condition_two_exact(l, &pa, &w, k) {
                    continue;
                }
                if !condition_two_bounded(l, &w, k, extension_bound) {
                    continue;
                }
                return Some(HyperbolicCertificate {
                    word: w,
                    half_width_n: n,
                    d: central.len(),
                    k,
                    central_blocks: central,
                    domain_alphabet: l.domain_alphabet().clone(),
                    extension_horizon: Horizon::Unbounded,
                    extension_bound,
                });
            }
        }
    }
    None
}

/// Paths of the cover with image `w`, as edge lists.
fn paths_with_image(l: &Lifted, w: &Block) -> Vec<Vec<usize>> {
    let g = &l.cover;
    let mut paths: Vec<Vec<usize>> = vec![];
    for v in 0..g.vertex_count() {
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(v, Vec::new())];
        while let Some((u, p)) = stack.pop() {
            if p.len() == w.len() {
                paths.push(p);
                continue;
            }
            let a = w.symbols()[p.len()];
            for &id in g.out_edge_ids(u) {
                if l.image[id] == a {
                    let mut q = p.clone();
                    q.push(id);
                    stack.push((g.edge(id).target, q));
                }
            }
        }
    }
    paths
}

fn labels(l: &Lifted, path: &[usize]) -> Block {
    Block(path.iter().map(|&e| l.cover.edge(e).label).collect())
}

/// The central window set if condition (1) holds.
fn condition_one(
    l: &Lifted,
    fwd: &[(crate::graph::VertexSet, Block)],
    bwd: &[(crate::graph::VertexSet, Block)],
    w: &Block,
    k: usize,
) -> Option<Vec<Block>> {
    let n = w.len() / 2;
    let g = &l.cover;
    let triples: BTreeSet<(usize, usize, Block)> = paths_with_image(l, w)
        .into_iter()
        .map(|p| {
            let s = g.edge(p[0]).source;
            let t = g.edge(*p.last().expect("non-empty")).target;
            (s, t, labels(l, &p[n - k..=n + k]))
        })
        .collect();
    let all: BTreeSet<&Block> = triples.iter().map(|(_, _, m)| m).collect();
    for (s_set, _) in fwd {
        for (r_set, _) in bwd {
            let seen: BTreeSet<&Block> = triples
                .iter()
                .filter(|(s, t, _)| s_set.contains(*s) && r_set.contains(*t))
                .map(|(_, _, m)| m)
                .collect();
            if !seen.is_empty() && seen != all {
                return None;
            }
        }
    }
    Some(all.into_iter().cloned().collect())
}

/// Transition table of the matcher for "the word read so far ends with `w`".
fn matcher(w: &Block, alphabet_len: usize) -> Vec<Vec<usize>> {
    let s = w.symbols();
    let mut fail = vec![0usize; s.len() + 1];
    for i in 1..s.len() {
        let mut j = fail[i];
        while j > 0 && s[i] != s[j] {
            j = fail[j];
        }
        fail[i + 1] = if s[i] == s[j] { j + 1 } else { 0 };
    }
    let mut delta = vec![vec![0usize; alphabet_len]; s.len() + 1];
    for q in 0..=s.len() {
        for a in 0..alphabet_len {
            delta[q][a] = if q < s.len() && s[q] == Symbol(a as u32) {
                q + 1
            } else if q == 0 {
                0
            } else {
                delta[fail[q]][a]
            };
        }
    }
    delta
}

/// Exact check of condition (2): search for two paths whose image begins and
/// ends with `w`, with equal labels on the central window and a first label
/// difference at coordinate `j > k` followed by at least `n − k` symbols.
fn condition_two_exact(l: &Lifted, pa: &PairAutomaton, w: &Block, k: usize) -> bool {
    let n = w.len() / 2;
    let need = n - k;
    let delta = matcher(w, l.codomain_alphabet().len());
    // (still reading the leading w, matcher state, pair state, steps since
    // first difference capped at `need`)
    type State = (bool, usize, usize, Option<usize>);
    let mut seen: HashSet<State> = HashSet::new();
    let mut queue: VecDeque<(State, usize)> = VecDeque::new();
    for s in 0..pa.len() {
        let st = (true, 0, s, None);
        seen.insert(st);
        queue.push_back((st, 0));
    }
    while let Some(((initial, q, s, diff), t)) = queue.pop_front() {
        if !initial && q == w.len() && diff.is_some_and(|c| c >= need) {
            return false;
        }
        for m in pa.moves(s) {
            if initial && m.image != w.symbols()[q] {
                continue;
            }
            let central = (n - k..=n + k).contains(&t);
            if central && !m.same_label {
                continue;
            }
            let bad = !m.same_label && t > n + k;
            let diff2 = match diff {
                Some(c) => Some((c + 1).min(need)),
                None if bad => Some(0),
                None => None,
            };
            let (initial2, q2) = if initial {
                (q + 1 < w.len(), q + 1)
            } else {
                (false, delta[q][m.image.index()])
            };
            let st = (initial2, q2, m.target, diff2);
            // Only the leading phase depends on the step count.
            let t2 = if initial2 { t + 1 } else { w.len() };
            if seen.insert(st) {
                queue.push_back((st, t2));
            }
        }
    }
    true
}

/// Condition (2) by enumerating all image words `w'` with
/// `|w| ≤ |w'| ≤ bound`.
fn condition_two_bounded(l: &Lifted, w: &Block, k: usize, bound: usize) -> bool {
    let n = w.len() / 2;
    let g = &l.cover;
    // Paths whose image begins with w, extended one edge at a time.
    let mut level: Vec<Vec<usize>> = paths_with_image(l, w);
    for len in w.len()..=bound {
        let p = len - w.len();
        let mut groups: HashMap<(Block, Block), Block> = HashMap::new();
        for path in &level {
            let img = Block(path.iter().map(|&e| l.image[e]).collect());
            if !img.ends_with(w) {
                continue;
            }
            let center = labels(l, &path[n - k..=n + k]);
            let tail = labels(l, &path[n - k..=n + k + p]);
            match groups.get(&(img.clone(), center.clone())) {
                Some(prev) if *prev != tail => return false,
                Some(_) => {}
                None => {
                    groups.insert((img, center), tail);
                }
            }
        }
        if len == bound {
            break;
        }
        let mut next = Vec::new();
        for path in &level {
            let v = g.edge(*path.last().expect("non-empty")).target;
            for &id in g.out_edge_ids(v) {
                let mut q = path.clone();
                q.push(id);
                next.push(q);
            }
        }
        level = next;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::test_maps::*;

    #[test]
    fn xor_certificate() {
        let c = find_hyperbolic_certificate(&xor_map(), 7, 3, 10).unwrap().unwrap();
        assert_eq!(c.d, 2);
        assert_eq!(c.k, 0);
        assert_eq!(c.word.len(), 1);
        let names: Vec<String> = c.central_blocks.iter().map(|b| c.domain_alphabet.render(b)).collect();
        assert_eq!(names, ["00", "11"]);
        assert_eq!(c.extension_horizon, Horizon::Unbounded);
    }

    #[test]
    fn even_map_certificate() {
        let f = even_map();
        let c = find_hyperbolic_certificate(&f, 7, 3, 10).unwrap().unwrap();
        assert_eq!(c.d, 1);
        assert_eq!(f.codomain().alphabet().render(&c.word), "1");
        assert_eq!(c.domain_alphabet.render(&c.central_blocks[0]), "a");
    }

    #[test]
    fn identity_certificate() {
        let c = find_hyperbolic_certificate(&golden_identity(), 5, 2, 10)
            .unwrap()
            .unwrap();
        assert_eq!(c.d, 1);
        assert_eq!(c.central_blocks, vec![c.word.clone()]);
    }

    #[test]
    fn fork_extensions() {
        // After image 2 the next branch is fixed by the symbol closing its
        // 1-run; after image 0 the final symbol of w' = 0 1 2 0 leaves the
        // branch open.
        let f = fork_map();
        let l = Lifted::new(&f).unwrap();
        let pa = PairAutomaton::new(&l);
        let blk = |s: &str| f.codomain().alphabet().parse_block(s).unwrap();
        assert!(condition_two_exact(&l, &pa, &blk("2"), 0));
        assert!(!condition_two_exact(&l, &pa, &blk("0"), 0));
        assert!(!condition_two_bounded(&l, &blk("0"), 0, 6));
        let c = find_hyperbolic_certificate(&f, 5, 2, 10).unwrap().unwrap();
        assert_eq!(c.word, blk("2"));
        assert_eq!(c.d, 1);
    }

    #[test]
    fn matcher_tracks_suffix() {
        let w = Block(vec![Symbol(0), Symbol(1), Symbol(0)]);
        let d = matcher(&w, 2);
        let mut q = 0;
        for a in [0, 1, 0, 1, 0] {
            q = d[q][a];
        }
        assert_eq!(q, 3);
    }
}
