//! The acceptance checks over the bundled corpus, as run by `corpus run-all`.

use std::collections::{BTreeMap, BTreeSet};

use shiftlab_core::analysis::{
    check_theorem_3_3, check_theorem_3_4, check_theorem_4_2, degree, fiber_product, find_decoder_block,
    find_hyperbolic_certificate, is_one_to_one_ae, right_closing_ae, verify_decoder_block, Bounds,
    CheckStatus,
};
use shiftlab_core::codes::{apply_block, recode_to_one_block};
use shiftlab_core::covers::{find_synchronizing_word, fischer_cover, is_half_synchronizing, is_isomorphic, is_synchronizing};
use shiftlab_core::language::{blocks_of_length, count_blocks};
use shiftlab_core::oracle::{dyck_follower_signature, oracle_admissible, oracle_follower_equal};
use shiftlab_core::report::Report;
use shiftlab_core::{Block, FactorMap, ShiftOracle};

use crate::input::Files;

pub const GRAPHS: [&str; 6] = [
    "golden.graph",
    "golden3.graph",
    "even.graph",
    "even4.graph",
    "full2.graph",
    "evenedge.graph",
];

pub const MAPS: [&str; 5] = [
    "evenmap.code",
    "xor.code",
    "id-golden.code",
    "id-full2.code",
    "id-evenedge.code",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub number: usize,
    pub passed: bool,
    pub detail: String,
}

type Check = (bool, String);

fn map(name: &str) -> FactorMap {
    Files::Corpus.map(name).expect("bundled code file")
}

fn graph(name: &str) -> shiftlab_core::LabeledGraph {
    Files::Corpus.graph(name).expect("bundled graph file")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("none".into(), |v| v.to_string())
}

fn render(f: &FactorMap, w: &Block) -> String {
    f.codomain().alphabet().render(w)
}

fn c1() -> Check {
    let g = graph("golden.graph");
    let counts: Vec<u128> = (1..=6).map(|n| count_blocks(&g, n).unwrap_or(0)).collect();
    let listed: Vec<u128> = (1..=6).map(|n| blocks_of_length(&g, n).len() as u128).collect();
    let ok = counts == [2, 3, 5, 8, 13, 21] && counts == listed;
    (ok, format!("counts {counts:?}"))
}

fn c2() -> Check {
    let Ok(f) = fischer_cover(&graph("even4.graph")) else {
        return (false, "even4 has no cover".into());
    };
    let idem = GRAPHS.iter().all(|name| {
        fischer_cover(&graph(name))
            .and_then(|c| Ok((fischer_cover(&c)?, c)))
            .and_then(|(cc, c)| is_isomorphic(&cc, &c))
            .unwrap_or(false)
    });
    (
        f.vertex_count() == 2 && idem,
        format!("even4 vertices {} idempotent {}", f.vertex_count(), if idem { "yes" } else { "no" }),
    )
}

fn c3() -> Check {
    let mut ok = true;
    let mut words = Vec::new();
    for name in ["golden.graph", "even.graph"] {
        let g = graph(name);
        let w = find_synchronizing_word(&g, 8);
        let shown = w.as_ref().map_or("none".into(), |w| g.alphabet().render(w));
        ok &= shown == "1";
        ok &= w.is_some_and(|w| is_synchronizing(&g, &w, 8).is_ok_and(|v| v.is_synchronizing()));
        words.push(format!("{} {shown}", name.trim_end_matches(".graph")));
    }
    let even = graph("even.graph");
    let zero = even.alphabet().parse_block("0").expect("symbol");
    let refuted = is_synchronizing(&even, &zero, 8).is_ok_and(|v| !v.is_synchronizing() && v.witness.is_some());
    ok &= refuted;
    (ok, format!("{} even-0-refuted {}", words.join(" "), if refuted { "yes" } else { "no" }))
}

fn c4() -> Check {
    let f = map("evenmap.code");
    let b = Bounds::default();
    let closing = right_closing_ae(&f, b.delay_bound).ok().and_then(|c| c.delay);
    let deg = degree(&f, b.word_bound_for(&f)).ok().and_then(|d| d.degree);
    let dec = find_decoder_block(&f, b.max_len, b.max_anticipation).ok().flatten();
    let dec_ok = dec.as_ref().is_some_and(|c| {
        render(&f, &c.block) == "1"
            && c.anticipation == 0
            && verify_decoder_block(&f, &c.block, 0, 10).unwrap_or(false)
    });
    let status = check_theorem_4_2(&f, &b).map(|t| t.status);
    let ok = closing == Some(0) && deg == Some(1) && dec_ok && status == Ok(CheckStatus::AgreePositive);
    (
        ok,
        format!(
            "delay {} degree {} decoder {} status {}",
            opt(closing),
            opt(deg),
            dec.map_or("none".into(), |c| format!("{} {}", render(&f, &c.block), c.anticipation)),
            status.map_or("error", |s| s.as_str())
        ),
    )
}

fn c5() -> Check {
    let f = map("xor.code");
    let b = Bounds::default();
    let d = degree(&f, b.word_bound_for(&f)).ok();
    let deg_ok = d.as_ref().is_some_and(|d| d.degree == Some(2) && d.exact);
    let one = is_one_to_one_ae(&f, b.word_bound_for(&f)).ok();
    let dec = find_decoder_block(&f, 8, 4).ok().flatten();
    let status = check_theorem_4_2(&f, &b).map(|t| t.status);
    let ok = deg_ok && one == Some(false) && dec.is_none() && status == Ok(CheckStatus::AgreeNegative);
    (
        ok,
        format!(
            "degree {} one-to-one {} decoder {} status {}",
            opt(d.and_then(|d| d.degree)),
            opt(one.map(|b| if b { "yes" } else { "no" })),
            if dec.is_none() { "none" } else { "found" },
            status.map_or("error", |s| s.as_str())
        ),
    )
}

/// Central windows of all recoded-domain blocks mapping onto `w`.
pub fn central_windows(f: &FactorMap, w: &Block, k: usize) -> Vec<Block> {
    let one = recode_to_one_block(f);
    let n = w.len() / 2;
    let set: BTreeSet<Block> = blocks_of_length(one.domain(), w.len())
        .into_iter()
        .filter(|x| apply_block(one.code(), x).is_ok_and(|y| &y == w))
        .map(|x| x.slice(n - k, n + k + 1))
        .collect();
    set.into_iter().collect()
}

fn c6() -> Check {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, d) in [("xor.code", 2), ("evenmap.code", 1)] {
        let f = map(name);
        match find_hyperbolic_certificate(&f, 8, 4, 10).ok().flatten() {
            Some(c) => {
                let mut blocks = c.central_blocks.clone();
                blocks.sort();
                ok &= c.d == d && blocks == central_windows(&f, &c.word, c.k);
                parts.push(format!("{} d {}", name.trim_end_matches(".code"), c.d));
            }
            None => {
                ok = false;
                parts.push(format!("{} none", name.trim_end_matches(".code")));
            }
        }
    }
    (ok, parts.join(" "))
}

fn c7() -> Check {
    let b = Bounds::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in MAPS {
        let status = check_theorem_3_3(&map(name), &b).map(|t| t.status);
        ok &= status == Ok(CheckStatus::AgreePositive);
        parts.push(format!("{} {}", name.trim_end_matches(".code"), status.map_or("error", |s| s.as_str())));
    }
    (ok, parts.join(" "))
}

fn c8() -> Check {
    let (id, xor) = (map("id-full2.code"), map("xor.code"));
    let status = check_theorem_3_4(&id, &xor, &xor, &id, &Bounds::default()).map(|t| t.status);
    let commutes = fiber_product(&xor, &xor).is_ok_and(|fp| {
        (1..=8).all(|n| {
            blocks_of_length(&fp.presentation, n).iter().all(|w| {
                let via = |proj: &FactorMap, g: &FactorMap| {
                    apply_block(proj.code(), w).and_then(|v| apply_block(g.code(), &v))
                };
                via(&fp.left_projection, &fp.left_map) == via(&fp.right_projection, &fp.right_map)
            })
        })
    });
    (
        status == Ok(CheckStatus::AgreePositive) && commutes,
        format!(
            "status {} commutes {}",
            status.map_or("error", |s| s.as_str()),
            if commutes { "yes" } else { "no" }
        ),
    )
}

fn c9() -> Check {
    let Ok(o) = ShiftOracle::dyck_with_pairs(&[("(", ")"), ("[", "]")]) else {
        return (false, "dyck oracle".into());
    };
    let a = o.alphabet().clone();
    let blk = |s: &str| a.parse_block(s).expect("dyck block");
    let rejects = oracle_admissible(&o, &blk("(]")) == Ok(false);
    let accepts = oracle_admissible(&o, &blk(")(")) == Ok(true);
    // Follower equality is an equivalence, so comparing each block with the
    // first block of its signature class is exhaustive.
    let mut classes: BTreeMap<Block, Block> = BTreeMap::new();
    let mut signatures_ok = true;
    'outer: for n in 0..=6 {
        let blocks = if n == 0 { vec![Block::empty()] } else { o.blocks(n) };
        for u in blocks {
            let Ok(sig) = dyck_follower_signature(&o, &u) else {
                signatures_ok = false;
                break 'outer;
            };
            match classes.get(&sig) {
                Some(rep) => {
                    if (1..=4).any(|h| oracle_follower_equal(&o, rep, &u, h) != Ok(true)) {
                        signatures_ok = false;
                        break 'outer;
                    }
                }
                None => {
                    classes.insert(sig, u);
                }
            }
        }
    }
    let half = is_half_synchronizing(&o, &blk("()"), 6).is_ok_and(|v| v.holds());
    let flag = |b: bool| if b { "yes" } else { "no" };
    (
        rejects && accepts && signatures_ok && half,
        format!(
            "rejects {} accepts {} signatures {} half-sync {}",
            flag(rejects),
            flag(accepts),
            flag(signatures_ok),
            flag(half)
        ),
    )
}

fn checks() -> Vec<Check> {
    vec![c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8(), c9()]
}

/// Runs criteria 1–9, then reruns them to compare outputs for criterion 10.
pub fn run_all() -> Vec<CriterionResult> {
    let first = checks();
    let second = checks();
    let mut out: Vec<CriterionResult> = first
        .iter()
        .enumerate()
        .map(|(i, (passed, detail))| CriterionResult {
            number: i + 1,
            passed: *passed,
            detail: detail.clone(),
        })
        .collect();
    let same = first == second;
    out.push(CriterionResult {
        number: 10,
        passed: same,
        detail: format!("repeat-identical {}", if same { "yes" } else { "no" }),
    });
    out
}

pub fn report(results: &[CriterionResult]) -> Report {
    let mut r = Report::new("corpus");
    for c in results {
        r.push(
            "criterion",
            format!("{} {} {}", c.number, if c.passed { "pass" } else { "fail" }, c.detail),
        );
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    r.push("summary", format!("passed {} failed {failed}", results.len() - failed));
    r
}
