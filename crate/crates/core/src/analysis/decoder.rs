//! Decoder blocks: search on the pair automaton and brute-force verification.

use std::collections::HashMap;

use crate::alphabet::Block;
use crate::codes::{apply_block, FactorMap, Horizon};
use crate::error::Result;
use crate::language::blocks_of_length;

use super::pair::{Lifted, PairAutomaton};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderCertificate {
    pub block: Block,
    pub anticipation: usize,
    pub verified_horizon: Horizon,
}

/// Least anticipation making `w` a decoder block, or `None` if none does.
///
/// Pairs of paths ending where an image-`w` path can end are run forward
/// with equal images. A step with different domain symbols at coordinate
/// `t ≤ n` is a violation for anticipation `k` exactly when `k` more
/// equal-image steps can follow it.
pub(crate) fn least_anticipation(l: &Lifted, pa: &PairAutomaton, longest: &[Option<usize>], w: &Block) -> Option<usize> {
    let ends = l.forward_word(&l.cover.all_vertices(), w);
    let starts: Vec<usize> = ends
        .members()
        .iter()
        .flat_map(|&p| ends.members().iter().map(move |&q| pa.state(p, q)))
        .collect();
    let seen = pa.reachable(starts);
    let mut k = 0usize;
    for s in (0..pa.len()).filter(|&s| seen[s]) {
        for m in pa.moves(s).iter().filter(|m| !m.same_label) {
            k = k.max(longest[m.target]? + 1);
        }
    }
    Some(k)
}

/// First image word (length-lexicographic, `|w| ≤ max_len`) that is a decoder
/// block with anticipation at most `max_anticipation`.
pub fn find_decoder_block(
    f: &FactorMap,
    max_len: usize,
    max_anticipation: usize,
) -> Result<Option<DecoderCertificate>> {
    let l = Lifted::new(f)?;
    Ok(find_decoder_lifted(&l, max_len, max_anticipation))
}

pub(crate) fn find_decoder_lifted(
    l: &Lifted,
    max_len: usize,
    max_anticipation: usize,
) -> Option<DecoderCertificate> {
    let pa = PairAutomaton::new(l);
    let longest = pa.longest_walks();
    let image = l.image_graph();
    for len in 1..=max_len {
        for w in blocks_of_length(&image, len) {
            if let Some(k) = least_anticipation(l, &pa, &longest, &w) {
                if k <= max_anticipation {
                    return Some(DecoderCertificate {
                        block: w,
                        anticipation: k,
                        verified_horizon: Horizon::Unbounded,
                    });
                }
            }
        }
    }
    None
}

/// Exhaustive check, on the original code and domain, that whenever two
/// domain blocks have images agreeing on `w` followed by `n + k` symbols
/// they agree on the `n` coordinates after `w`, for every `n ≤ horizon`.
pub fn verify_decoder_block(f: &FactorMap, w: &Block, k: usize, horizon: usize) -> Result<bool> {
    let code = f.code();
    let (m, a) = (code.memory(), code.anticipation());
    for n in 1..=horizon {
        // Domain coordinates −|w|+1−m ..= n+k+a; coordinate 1 sits at m + |w|.
        let len = m + w.len() + n + k + a;
        let first = m + w.len();
        let mut seen: HashMap<Block, Block> = HashMap::new();
        for x in blocks_of_length(f.domain(), len) {
            let y = apply_block(code, &x)?;
            if !y.starts_with(w) {
                continue;
            }
            let decoded = x.slice(first, first + n);
            match seen.get(&y) {
                Some(prev) if *prev != decoded => return Ok(false),
                Some(_) => {}
                None => {
                    seen.insert(y, decoded);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::test_maps::*;

    fn blk(f: &FactorMap, s: &str) -> Block {
        f.codomain().alphabet().parse_block(s).unwrap()
    }

    #[test]
    fn even_map_decoder() {
        let f = even_map();
        let c = find_decoder_block(&f, 4, 4).unwrap().unwrap();
        assert_eq!(c.block, blk(&f, "1"));
        assert_eq!(c.anticipation, 0);
        assert_eq!(c.verified_horizon, Horizon::Unbounded);
        assert!(verify_decoder_block(&f, &c.block, 0, 8).unwrap());
        assert!(!verify_decoder_block(&f, &blk(&f, "0"), 0, 8).unwrap());
    }

    #[test]
    fn xor_has_no_decoder() {
        assert_eq!(find_decoder_block(&xor_map(), 8, 4).unwrap(), None);
        let f = xor_map();
        for w in ["0", "1", "01", "0110"] {
            assert!(!verify_decoder_block(&f, &blk(&f, w), 2, 4).unwrap());
        }
    }

    #[test]
    fn identity_decoder_is_least_symbol() {
        let f = golden_identity();
        let c = find_decoder_block(&f, 3, 0).unwrap().unwrap();
        assert_eq!(c.block, blk(&f, "0"));
        assert!(verify_decoder_block(&f, &c.block, 0, 6).unwrap());
    }

    #[test]
    fn delayed_map_needs_anticipation() {
        let f = delayed_map();
        assert_eq!(find_decoder_block(&f, 4, 0).unwrap(), None);
        let c = find_decoder_block(&f, 4, 1).unwrap().unwrap();
        assert_eq!(c.anticipation, 1);
        assert!(verify_decoder_block(&f, &c.block, 1, 8).unwrap());
        assert!(!verify_decoder_block(&f, &c.block, 0, 8).unwrap());
    }
}
