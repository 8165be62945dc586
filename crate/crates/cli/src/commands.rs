//! Subcommand execution.

use shiftlab_core::analysis::{
    check_theorem_3_3, check_theorem_3_4, check_theorem_4_2, degree, fiber_product, find_decoder_block,
    find_hyperbolic_certificate, is_finite_to_one, render_hyperbolic, right_closing_ae, Bounds,
    CheckStatus, TheoremReport,
};
use shiftlab_core::codes::{apply_code, compose, image_presentation, recode_to_one_block};
use shiftlab_core::covers::{
    find_synchronizing_word, fischer_cover, is_half_synchronizing, is_right_resolving, is_synchronizing,
    subset_cover,
};
use shiftlab_core::language::{blocks_of_length, count_blocks};
use shiftlab_core::report::{Format, Report};
use shiftlab_core::{FactorMap, LabeledGraph};

use crate::args::{CheckCmd, Cli, CodeCmd, Command, CorpusCmd, CoverCmd, FiberCmd, FormatArg, LangCmd, MapCmd, Options, SyncCmd};
use crate::input::{parse_block, parse_point, render_point, Files, InputError, InputResult};
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Resolved bounds, defaults applied where a flag is absent.
pub fn bounds(o: &Options) -> Bounds {
    let d = Bounds::default();
    let get = |v: Option<u64>, dflt: usize| v.map_or(dflt, |v| v as usize);
    Bounds {
        max_len: get(o.max_len, d.max_len),
        max_anticipation: get(o.anticipation, d.max_anticipation),
        horizon: get(o.horizon, d.horizon),
        word_bound: o.word_bound.map(|v| v as usize),
        delay_bound: get(o.delay, d.delay_bound),
        extension_bound: get(o.extension, d.extension_bound),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let format = match cli.options.format {
        FormatArg::Report => Format::Report,
        FormatArg::Tsv => Format::Tsv,
    };
    let b = bounds(&cli.options);
    match execute(&cli.command, &b) {
        Ok((reports, exit)) => Outcome {
            exit,
            stdout: reports.iter().map(|r| r.render(format)).collect(),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            exit: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn core(e: shiftlab_core::Error) -> InputError {
    InputError::new("", e)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Graph text as report entries keyed by the declaration keyword.
fn push_graph(r: &mut Report, prefix: &str, g: &LabeledGraph) {
    for line in g.to_text().lines() {
        let (k, v) = line.split_once(' ').unwrap_or((line, ""));
        r.push(format!("{prefix}{k}"), v);
    }
}

fn theorem(t: &TheoremReport) -> (Report, i32) {
    let exit = match t.status {
        CheckStatus::AgreePositive | CheckStatus::AgreeNegative => EXIT_OK,
        CheckStatus::Inconclusive => EXIT_INCONCLUSIVE,
        CheckStatus::Disagree => EXIT_DISAGREE,
    };
    (Report::from(t), exit)
}

fn execute(cmd: &Command, b: &Bounds) -> InputResult<(Vec<Report>, i32)> {
    let files = Files::Disk;
    let one = |r: Report| Ok((vec![r], EXIT_OK));
    match cmd {
        Command::Lang(LangCmd::Blocks { graph, n }) => {
            let g = files.graph(graph)?;
            let blocks = blocks_of_length(&g, *n);
            let mut r = Report::new("lang-blocks");
            r.push("length", n).push("count", blocks.len());
            for w in &blocks {
                r.push("block", g.alphabet().render(w));
            }
            one(r)
        }
        Command::Lang(LangCmd::Count { graph, n }) => {
            let g = files.graph(graph)?;
            let mut r = Report::new("lang-count");
            for len in 1..=*n {
                r.push("count", format!("{len} {}", count_blocks(&g, len).map_err(core)?));
            }
            one(r)
        }
        Command::Cover(c) => {
            let (name, g) = match c {
                CoverCmd::Subset { graph } => ("subset-cover", subset_cover(&files.graph(graph)?)),
                CoverCmd::Fischer { graph } => ("fischer-cover", fischer_cover(&files.graph(graph)?).map_err(core)?),
                CoverCmd::Resolving { graph } => {
                    let mut r = Report::new("right-resolving");
                    r.push("verdict", yes(is_right_resolving(&files.graph(graph)?)));
                    return one(r);
                }
            };
            let mut r = Report::new(name);
            push_graph(&mut r, "", &g);
            one(r)
        }
        Command::Sync(SyncCmd::Find { graph }) => {
            let g = files.graph(graph)?;
            let mut r = Report::new("sync-find");
            r.push("max-len", b.max_len);
            match find_synchronizing_word(&g, b.max_len) {
                Some(w) => r.push("word", g.alphabet().render(&w)),
                None => r.push("word", "none"),
            };
            one(r)
        }
        Command::Sync(SyncCmd::Check { graph, block }) => {
            let g = files.graph(graph)?;
            let v = parse_block(g.alphabet(), block)?;
            let verdict = is_synchronizing(&g, &v, b.max_len).map_err(core)?;
            let mut r = Report::new("sync-check");
            r.push("block", g.alphabet().render(&v));
            r.push(
                "verdict",
                if verdict.is_synchronizing() { "synchronizing" } else { "not-synchronizing" },
            );
            if let Some((u, w)) = &verdict.witness {
                r.push("witness", g.alphabet().render(u));
                r.push("witness", g.alphabet().render(w));
            }
            one(r)
        }
        Command::Sync(SyncCmd::Half { source, block }) => {
            let o = files.oracle(source)?;
            let m = parse_block(o.alphabet(), block)?;
            let v = is_half_synchronizing(&o, &m, b.horizon).map_err(core)?;
            let a = o.alphabet();
            let mut r = Report::new("sync-half");
            r.push("oracle", o.kind_name());
            r.push("block", a.render(&m));
            r.push("verdict", if v.holds() { "holds-at-horizon" } else { "refuted" });
            r.push("horizon", v.horizon);
            r.push("covered-length", v.covered_length);
            r.push("exact", yes(v.exact));
            if let Some(c) = &v.transitive_ray_prefix {
                r.push("context-length", c.len());
            }
            if let Some(w) = &v.refutation {
                r.push("witness", a.render(w));
            }
            one(r)
        }
        Command::Code(CodeCmd::Apply { code, point }) => {
            let f = files.map(code)?;
            let p = parse_point(f.domain().alphabet(), point)?;
            let q = apply_code(f.code(), &p).map_err(core)?;
            let mut r = Report::new("code-apply");
            r.push("point", render_point(f.codomain().alphabet(), &q));
            r.push("origin", q.origin());
            one(r)
        }
        Command::Code(CodeCmd::Compose { outer, inner }) => {
            let (f2, f1) = (files.map(outer)?, files.map(inner)?);
            let c = compose(f2.code(), f1.code()).map_err(core)?;
            let f = FactorMap::new(c, f1.domain(), f2.codomain()).map_err(core)?;
            let mut r = Report::new("code-compose");
            push_code(&mut r, &f);
            one(r)
        }
        Command::Code(CodeCmd::Recode { code }) => {
            let f = recode_to_one_block(&files.map(code)?);
            let mut r = Report::new("code-recode");
            push_code(&mut r, &f);
            push_graph(&mut r, "domain-", f.domain());
            one(r)
        }
        Command::Code(CodeCmd::Image { code }) => {
            let f = files.map(code)?;
            let mut r = Report::new("code-image");
            push_graph(&mut r, "", &image_presentation(&f));
            r.push("onto", yes(f.is_onto()));
            r.push("surjectivity-horizon", f.surjectivity());
            if let Some(w) = f.non_onto_witness() {
                r.push("witness", f.codomain().alphabet().render(w));
            }
            one(r)
        }
        Command::Map(m) => map_command(m, b),
        Command::Fiber(FiberCmd::Build { left, right }) => {
            let (f1, f2) = (files.map(left)?, files.map(right)?);
            let fp = fiber_product(&f1, &f2).map_err(core)?;
            let mut r = Report::new("fiber");
            push_graph(&mut r, "", &fp.presentation);
            for (i, c) in fp.components.iter().enumerate() {
                let names: Vec<&str> = c.vertices.iter().map(|&v| fp.presentation.vertex_name(v)).collect();
                r.push(
                    "component",
                    format!("{i} onto {} {} vertices {}", yes(c.left_onto), yes(c.right_onto), names.join(" ")),
                );
            }
            match fp.components.iter().position(|c| c.both_onto()) {
                Some(i) => r.push("onto-component", i),
                None => r.push("onto-component", "none"),
            };
            one(r)
        }
        Command::Check(c) => {
            let t = match c {
                CheckCmd::T33 { code } => check_theorem_3_3(&files.map(code)?, b),
                CheckCmd::T42 { code } => check_theorem_4_2(&files.map(code)?, b),
                CheckCmd::T34 { xv, yv, yw, zw } => check_theorem_3_4(
                    &files.map(xv)?,
                    &files.map(yv)?,
                    &files.map(yw)?,
                    &files.map(zw)?,
                    b,
                ),
            }
            .map_err(core)?;
            let (r, exit) = theorem(&t);
            Ok((vec![r], exit))
        }
        Command::Corpus(CorpusCmd::RunAll) => {
            let results = suite::run_all();
            let exit = if results.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_DISAGREE };
            Ok((vec![suite::report(&results)], exit))
        }
    }
}

fn push_code(r: &mut Report, f: &FactorMap) {
    for line in f.code().to_text().lines() {
        let (k, v) = line.split_once(' ').unwrap_or((line, ""));
        r.push(k, v);
    }
}

fn map_command(m: &MapCmd, b: &Bounds) -> InputResult<(Vec<Report>, i32)> {
    let files = Files::Disk;
    let code = match m {
        MapCmd::Degree { code }
        | MapCmd::Closing { code }
        | MapCmd::Onetoone { code }
        | MapCmd::Decoder { code }
        | MapCmd::Hyperbolic { code } => code,
    };
    let f = files.map(code)?;
    let cod = f.codomain().alphabet();
    let mut r;
    match m {
        MapCmd::Degree { .. } | MapCmd::Onetoone { .. } => {
            let one_to_one = matches!(m, MapCmd::Onetoone { .. });
            r = Report::new(if one_to_one { "one-to-one" } else { "degree" });
            if !is_finite_to_one(&f).map_err(core)? {
                r.push("finite-to-one", "no");
                if one_to_one {
                    r.push("verdict", "no");
                }
                return Ok((vec![r], EXIT_OK));
            }
            let d = degree(&f, b.word_bound_for(&f)).map_err(core)?;
            r.push("finite-to-one", "yes");
            let deg = d.degree.map_or("none".to_string(), |v| v.to_string());
            r.push("degree", &deg);
            r.push("exact", yes(d.exact));
            r.push("word-bound", d.word_bound);
            r.push("exactness-bound", d.exactness_bound);
            if let (Some(w), Some(i)) = (&d.magic_word, d.magic_coordinate) {
                r.push("magic-word", format!("{} coordinate {i}", cod.render(w)));
            }
            if one_to_one {
                let verdict = match d.degree {
                    Some(1) => "yes",
                    Some(_) if d.exact => "no",
                    _ => "unknown",
                };
                r.push("verdict", verdict);
            }
        }
        MapCmd::Closing { .. } => {
            let c = right_closing_ae(&f, b.delay_bound).map_err(core)?;
            r = Report::new("closing");
            r.push("right-closing", yes(c.right_closing_ae));
            r.push("delay-bound", c.delay_bound);
            match c.minimal_delay {
                Some(d) => r.push("minimal-delay", d),
                None => r.push("minimal-delay", "none"),
            };
            if let Some(w) = &c.witness {
                let l = recode_to_one_block(&f);
                let a = l.domain().alphabet();
                r.push("witness", format!("context {}", a.render(&w.context)));
                r.push("witness", format!("left {}", a.render(&w.left)));
                r.push("witness", format!("right {}", a.render(&w.right)));
                r.push("witness", format!("image {}", cod.render(&w.image)));
            }
        }
        MapCmd::Decoder { .. } => {
            r = Report::new("decoder");
            match find_decoder_block(&f, b.max_len, b.max_anticipation).map_err(core)? {
                Some(c) => {
                    r.push("decoder-block", format!("{} anticipation {}", cod.render(&c.block), c.anticipation));
                    r.push("verified-horizon", c.verified_horizon);
                }
                None => {
                    r.push("decoder-block", "none");
                    r.push("bounds", format!("max-len {} anticipation {}", b.max_len, b.max_anticipation));
                }
            }
        }
        MapCmd::Hyperbolic { .. } => {
            r = Report::new("hyperbolic");
            match find_hyperbolic_certificate(&f, b.max_len, b.max_anticipation, b.extension_bound)
                .map_err(core)?
            {
                Some(c) => {
                    r.push("hyperbolic", render_hyperbolic(&f, &c));
                    r.push("extension-horizon", c.extension_horizon);
                    r.push("extension-bound", c.extension_bound);
                }
                None => {
                    r.push("hyperbolic", "none");
                }
            }
        }
    }
    Ok((vec![r], EXIT_OK))
}
