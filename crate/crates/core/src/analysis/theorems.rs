//! Executable consistency checks for the structure theorems.

use std::fmt;

use crate::codes::{compose, higher_block_with, FactorMap};
use crate::covers::{is_half_synchronizing, HalfSyncVerdict};
use crate::error::Result;
use crate::oracle::ShiftOracle;

use super::closing::closing_lifted;
use super::decoder::{find_decoder_lifted, verify_decoder_block};
use super::degree::{default_word_bound, degree_lifted, finite_to_one_lifted};
use super::fiber::fiber_product;
use super::hyperbolic::{find_hyperbolic_lifted, HyperbolicCertificate};
use super::pair::Lifted;

/// Search bounds shared by the analyses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub max_len: usize,
    pub max_anticipation: usize,
    pub horizon: usize,
    /// `None` selects the default computed from the domain.
    pub word_bound: Option<usize>,
    pub delay_bound: usize,
    pub extension_bound: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_len: 8,
            max_anticipation: 4,
            horizon: 8,
            word_bound: None,
            delay_bound: 6,
            extension_bound: 10,
        }
    }
}

impl Bounds {
    pub fn word_bound_for(&self, f: &FactorMap) -> usize {
        self.word_bound.unwrap_or_else(|| default_word_bound(f))
    }

    /// Horizons at which half-synchronization is compared: even values from
    /// 4 up to `horizon`, always including `horizon` itself.
    pub fn half_sync_horizons(&self) -> Vec<usize> {
        let mut hs: Vec<usize> = (4..self.horizon).step_by(2).collect();
        hs.push(self.horizon);
        hs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    AgreePositive,
    AgreeNegative,
    Disagree,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::AgreePositive => "agree-positive",
            CheckStatus::AgreeNegative => "agree-negative",
            CheckStatus::Disagree => "disagree",
            CheckStatus::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a theorem check with its supporting evidence as key/value
/// lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub name: &'static str,
    pub status: CheckStatus,
    pub lines: Vec<(String, String)>,
}

impl TheoremReport {
    fn new(name: &'static str) -> Self {
        TheoremReport {
            name,
            status: CheckStatus::Inconclusive,
            lines: Vec::new(),
        }
    }

    fn push(&mut self, key: &str, value: impl Into<String>) {
        self.lines.push((key.to_string(), value.into()));
    }
}

/// The certificate as `word <w> d <d> k <k> blocks <m1> …`.
pub fn render_hyperbolic(f: &FactorMap, c: &HyperbolicCertificate) -> String {
    let blocks: Vec<String> = c
        .central_blocks
        .iter()
        .map(|b| c.domain_alphabet.render(b))
        .collect();
    format!(
        "word {} d {} k {} blocks {}",
        f.codomain().alphabet().render(&c.word),
        c.d,
        c.k,
        blocks.join(" ")
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Positive,
    Negative,
    Unknown,
}

/// Right-closing a.e. and 1-1 a.e. against the existence of a decoder block.
pub fn check_theorem_4_2(f: &FactorMap, bounds: &Bounds) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("t42");
    let l = Lifted::new(f)?;
    let closing = closing_lifted(&l, bounds.delay_bound);
    match closing.delay {
        Some(d) => r.push("right-closing", format!("yes delay {d}")),
        None => match closing.minimal_delay {
            Some(d) => r.push("right-closing", format!("beyond-bound delay {d}")),
            None => r.push("right-closing", "no"),
        },
    }
    let (degree, exact) = if finite_to_one_lifted(&l) {
        let d = degree_lifted(&l, bounds.word_bound_for(f))?;
        r.push(
            "degree",
            format!(
                "{} {}",
                d.degree.map_or("none".into(), |d| d.to_string()),
                if d.exact { "exact" } else { "upper-bound" }
            ),
        );
        (d.degree, d.exact)
    } else {
        r.push("degree", "infinite");
        (None, true)
    };
    // A bounded minimum of 1 is exact: the degree is at least 1.
    let lhs = if closing.right_closing_ae && degree == Some(1) {
        Side::Positive
    } else if closing.minimal_delay.is_none() || degree.is_none() || (exact && degree != Some(1)) {
        Side::Negative
    } else {
        Side::Unknown
    };
    let cert = find_decoder_lifted(&l, bounds.max_len, bounds.max_anticipation);
    let rhs = match &cert {
        Some(c) => {
            r.push(
                "decoder-block",
                format!(
                    "{} anticipation {}",
                    f.codomain().alphabet().render(&c.block),
                    c.anticipation
                ),
            );
            let ok = verify_decoder_block(f, &c.block, c.anticipation, bounds.horizon)?;
            r.push("decoder-verified", format!("{} horizon {}", if ok { "yes" } else { "no" }, bounds.horizon));
            if !ok {
                r.status = CheckStatus::Disagree;
                return Ok(r);
            }
            true
        }
        None => {
            r.push("decoder-block", "none");
            false
        }
    };
    r.status = match (lhs, rhs) {
        (Side::Positive, true) => CheckStatus::AgreePositive,
        (Side::Negative, false) => CheckStatus::AgreeNegative,
        (Side::Negative, true) => CheckStatus::Disagree,
        _ => CheckStatus::Inconclusive,
    };
    Ok(r)
}

/// First block (length-lexicographic, `|m| ≤ max_len`) passing the
/// half-synchronization check at `horizon`.
pub fn find_half_synchronizing_block(
    o: &ShiftOracle,
    max_len: usize,
    horizon: usize,
) -> Result<Option<HalfSyncVerdict>> {
    for len in 1..=max_len {
        for m in o.blocks(len) {
            let v = is_half_synchronizing(o, &m, horizon)?;
            if v.holds() {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

fn sofic_oracle(g: &crate::graph::LabeledGraph, horizon: usize) -> ShiftOracle {
    let o = ShiftOracle::sofic(g);
    let budget = o.horizon_budget().max(horizon);
    o.with_budget(budget)
}

/// Half-synchronization of domain and codomain under a hyperbolic map, plus
/// the lifting step: the certificate's first central block should be
/// half-synchronizing whenever its word is.
pub fn check_theorem_3_3(f: &FactorMap, bounds: &Bounds) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("t33");
    let l = Lifted::new(f)?;
    let Some(cert) = find_hyperbolic_lifted(&l, bounds.max_len, bounds.max_anticipation, bounds.extension_bound)
    else {
        r.push("hyperbolic", "none");
        return Ok(r);
    };
    r.push("hyperbolic", render_hyperbolic(f, &cert));
    let m1 = &cert.central_blocks[0];
    let mut all_positive = true;
    let mut all_negative = true;
    for h in bounds.half_sync_horizons() {
        let dom = find_half_synchronizing_block(&sofic_oracle(f.domain(), h), bounds.max_len, h)?;
        let cod = find_half_synchronizing_block(&sofic_oracle(f.codomain(), h), bounds.max_len, h)?;
        let show = |v: &Option<HalfSyncVerdict>, g: &crate::graph::LabeledGraph| {
            v.as_ref()
                .map_or("none".to_string(), |v| g.alphabet().render(&v.block))
        };
        r.push(
            "half-sync",
            format!(
                "horizon {h} domain {} codomain {}",
                show(&dom, f.domain()),
                show(&cod, f.codomain())
            ),
        );
        if dom.is_some() != cod.is_some() {
            r.status = CheckStatus::Disagree;
            return Ok(r);
        }
        all_positive &= dom.is_some();
        all_negative &= dom.is_none();

        let w_holds = is_half_synchronizing(&sofic_oracle(f.codomain(), h), &cert.word, h)?.holds();
        if w_holds {
            let m_holds =
                is_half_synchronizing(&sofic_oracle(l.map.domain(), h), m1, h)?.holds();
            r.push(
                "construction",
                format!(
                    "horizon {h} block {} {}",
                    cert.domain_alphabet.render(m1),
                    if m_holds { "holds" } else { "refuted" }
                ),
            );
            if !m_holds {
                r.status = CheckStatus::Disagree;
                return Ok(r);
            }
        } else {
            r.push("construction", format!("horizon {h} skipped"));
        }
    }
    r.status = if all_positive {
        CheckStatus::AgreePositive
    } else if all_negative {
        CheckStatus::AgreeNegative
    } else {
        CheckStatus::Inconclusive
    };
    Ok(r)
}

/// Keep only the windows admissible in `g`.
/// Transitivity instance: from `V → X, V → Y` and `W → Y, W → Z`, build the
/// fiber product over `Y`, pick a component onto both `V` and `W`, and look
/// for hyperbolic certificates of the composites into `X` and `Z`.
pub fn check_theorem_3_4(
    f_xv: &FactorMap,
    f_yv: &FactorMap,
    f_yw: &FactorMap,
    f_zw: &FactorMap,
    bounds: &Bounds,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("t34");
    let fp = fiber_product(f_yv, f_yw)?;
    let hyper = |f: &FactorMap| -> Result<Option<HyperbolicCertificate>> {
        let l = Lifted::new(f)?;
        Ok(find_hyperbolic_lifted(&l, bounds.max_len, bounds.max_anticipation, bounds.extension_bound))
    };
    let mut hypotheses = true;
    for (name, f) in [("xv", f_xv), ("yv", f_yv), ("yw", f_yw), ("zw", f_zw)] {
        match hyper(f)? {
            Some(c) => r.push(&format!("hyperbolic-{name}"), render_hyperbolic(f, &c)),
            None => {
                r.push(&format!("hyperbolic-{name}"), "none");
                hypotheses = false;
            }
        }
    }
    r.push(
        "fiber",
        format!(
            "vertices {} edges {} components {}",
            fp.presentation.vertex_count(),
            fp.presentation.edges().len(),
            fp.components.len()
        ),
    );
    for (i, c) in fp.components.iter().enumerate() {
        r.push(
            "component",
            format!(
                "{i} vertices {} onto {} {}",
                c.vertices.len(),
                if c.left_onto { "yes" } else { "no" },
                if c.right_onto { "yes" } else { "no" }
            ),
        );
    }
    if !hypotheses {
        return Ok(r);
    }
    let Some(gamma) = fp.onto_component() else {
        r.push("gamma", "none");
        return Ok(r);
    };
    let gi = fp.components.iter().position(|c| c.both_onto()).expect("found above");
    r.push("gamma", gi.to_string());

    let through = |f_outer: &FactorMap, inner: &FactorMap, projection: &FactorMap| -> Result<FactorMap> {
        let code = inner.code();
        let back = higher_block_with(inner.domain(), code.memory(), code.anticipation()).projection;
        let to_domain = compose(&back, projection.code())?;
        let full = compose(f_outer.code(), &to_domain)?;
        FactorMap::new(full.restricted_to(&gamma.graph)?, &gamma.graph, f_outer.codomain())
    };
    let left = through(f_xv, f_yv, &fp.left_projection)?;
    let right = through(f_zw, f_yw, &fp.right_projection)?;
    let mut ok = true;
    for (name, g) in [("composed-x", &left), ("composed-z", &right)] {
        match hyper(g)? {
            Some(c) => r.push(name, render_hyperbolic(g, &c)),
            None => {
                r.push(name, "none");
                ok = false;
            }
        }
        ok &= g.is_onto();
    }
    r.status = if ok {
        CheckStatus::AgreePositive
    } else {
        CheckStatus::Inconclusive
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::test_maps::*;

    #[test]
    fn t42_examples() {
        let b = Bounds::default();
        assert_eq!(check_theorem_4_2(&even_map(), &b).unwrap().status, CheckStatus::AgreePositive);
        assert_eq!(check_theorem_4_2(&xor_map(), &b).unwrap().status, CheckStatus::AgreeNegative);
        assert_eq!(check_theorem_4_2(&golden_identity(), &b).unwrap().status, CheckStatus::AgreePositive);
        assert_eq!(check_theorem_4_2(&fork_map(), &b).unwrap().status, CheckStatus::AgreeNegative);
        assert_eq!(check_theorem_4_2(&delayed_map(), &b).unwrap().status, CheckStatus::AgreePositive);
        assert_eq!(check_theorem_4_2(&collapse_map(), &b).unwrap().status, CheckStatus::AgreeNegative);
    }

    #[test]
    fn t33_examples() {
        let b = Bounds::default();
        assert_eq!(b.half_sync_horizons(), [4, 6, 8]);
        for f in [xor_map(), even_map(), golden_identity()] {
            let r = check_theorem_3_3(&f, &b).unwrap();
            assert_eq!(r.status, CheckStatus::AgreePositive, "{:?}", r.lines);
        }
    }

    #[test]
    fn t34_examples() {
        let b = Bounds::default();
        let id = FactorMap::identity(&full2()).unwrap();
        let x = xor_map();
        let r = check_theorem_3_4(&id, &x, &x, &id, &b).unwrap();
        assert_eq!(r.status, CheckStatus::AgreePositive, "{:?}", r.lines);
        let g = golden_identity();
        let r = check_theorem_3_4(&g, &g, &g, &g, &b).unwrap();
        assert_eq!(r.status, CheckStatus::AgreePositive, "{:?}", r.lines);
        let e = even_map();
        let ide = FactorMap::identity(e.domain()).unwrap();
        let r = check_theorem_3_4(&ide, &e, &e, &ide, &b).unwrap();
        assert_eq!(r.status, CheckStatus::AgreePositive, "{:?}", r.lines);
    }
}
