//! Loading graph, code and oracle files from disk or from the bundled corpus.

use std::fmt;
use std::path::{Path, PathBuf};

use shiftlab_core::codes::{parse_code, parse_code_header};
use shiftlab_core::graph::parse_graph;
use shiftlab_core::{Alphabet, Block, FactorMap, LabeledGraph, Point, ShiftOracle};

/// An input error tied to the file it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub source: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.source.is_empty() {
            f.write_str(&self.message)
        } else {
            write!(f, "{}: {}", self.source, self.message)
        }
    }
}

impl std::error::Error for InputError {}

impl InputError {
    pub fn new(source: &str, message: impl fmt::Display) -> Self {
        InputError {
            source: source.to_string(),
            message: message.to_string(),
        }
    }
}

pub type InputResult<T> = std::result::Result<T, InputError>;

pub const CORPUS: &[(&str, &str)] = &[
    ("golden.graph", include_str!("../../../corpus/golden.graph")),
    ("golden3.graph", include_str!("../../../corpus/golden3.graph")),
    ("even.graph", include_str!("../../../corpus/even.graph")),
    ("even4.graph", include_str!("../../../corpus/even4.graph")),
    ("full2.graph", include_str!("../../../corpus/full2.graph")),
    ("evenedge.graph", include_str!("../../../corpus/evenedge.graph")),
    ("evenmap.code", include_str!("../../../corpus/evenmap.code")),
    ("xor.code", include_str!("../../../corpus/xor.code")),
    ("id-golden.code", include_str!("../../../corpus/id-golden.code")),
    ("id-full2.code", include_str!("../../../corpus/id-full2.code")),
    ("id-evenedge.code", include_str!("../../../corpus/id-evenedge.code")),
    ("dyck2.oracle", include_str!("../../../corpus/dyck2.oracle")),
    ("golden.oracle", include_str!("../../../corpus/golden.oracle")),
];

/// Where input files are read from.
#[derive(Debug, Clone, Copy)]
pub enum Files {
    Disk,
    Corpus,
}

impl Files {
    pub fn read(self, path: &str) -> InputResult<String> {
        match self {
            Files::Disk => std::fs::read_to_string(path).map_err(|e| InputError::new(path, e)),
            Files::Corpus => CORPUS
                .iter()
                .find(|(name, _)| *name == path)
                .map(|(_, text)| text.to_string())
                .ok_or_else(|| InputError::new(path, "not in the bundled corpus")),
        }
    }

    /// A path named inside `of`, resolved relative to it.
    fn sibling(self, of: &str, name: &str) -> String {
        match self {
            Files::Disk => {
                let base = Path::new(of).parent().map(Path::to_path_buf).unwrap_or_default();
                let p: PathBuf = base.join(name);
                p.to_string_lossy().into_owned()
            }
            Files::Corpus => name.to_string(),
        }
    }

    pub fn graph(self, path: &str) -> InputResult<LabeledGraph> {
        parse_graph(&self.read(path)?).map_err(|e| InputError::new(path, e))
    }

    pub fn map(self, path: &str) -> InputResult<FactorMap> {
        let text = self.read(path)?;
        let header = parse_code_header(&text).map_err(|e| InputError::new(path, e))?;
        let need = |slot: Option<String>, key: &str| {
            slot.ok_or_else(|| InputError::new(path, format!("missing `{key} <graph-file>` line")))
        };
        let domain = self.graph(&self.sibling(path, &need(header.domain, "domain")?))?;
        let codomain = self.graph(&self.sibling(path, &need(header.codomain, "codomain")?))?;
        let code = parse_code(&text, domain.alphabet(), codomain.alphabet())
            .map_err(|e| InputError::new(path, e))?;
        FactorMap::new(code, &domain, &codomain).map_err(|e| InputError::new(path, e))
    }

    /// A graph file is wrapped in a sofic oracle; an oracle file is read
    /// from its single `oracle …` line.
    pub fn oracle(self, path: &str) -> InputResult<ShiftOracle> {
        let text = self.read(path)?;
        let first = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let Some((line, decl)) = first.filter(|(_, l)| l.starts_with("oracle")) else {
            return Ok(ShiftOracle::sofic(&self.graph(path)?));
        };
        let at = |m: String| InputError::new(path, format!("line {line}: {m}"));
        let toks: Vec<&str> = decl.split_whitespace().collect();
        match toks.as_slice() {
            ["oracle", "sofic", file] => Ok(ShiftOracle::sofic(&self.graph(&self.sibling(path, file))?)),
            ["oracle", "dyck", r] => {
                let r: usize = r.parse().map_err(|_| at(format!("expected a count, found `{r}`")))?;
                ShiftOracle::dyck(r).map_err(|e| at(e.to_string()))
            }
            ["oracle", "codelist", blocks @ ..] if !blocks.is_empty() => {
                let mut names: Vec<String> = blocks
                    .iter()
                    .flat_map(|b| b.chars().map(String::from))
                    .collect();
                names.sort();
                names.dedup();
                let alphabet = Alphabet::new(names).map_err(|e| at(e.to_string()))?;
                let gens = blocks
                    .iter()
                    .map(|b| alphabet.parse_block(b))
                    .collect::<shiftlab_core::Result<Vec<Block>>>()
                    .map_err(|e| at(e.to_string()))?;
                ShiftOracle::code_list(alphabet, gens).map_err(|e| at(e.to_string()))
            }
            _ => Err(at(
                "expected `oracle sofic <graph-file>`, `oracle dyck <r>` or `oracle codelist <block>…`".into(),
            )),
        }
    }
}

pub fn parse_block(a: &Alphabet, text: &str) -> InputResult<Block> {
    if text == "-" {
        return Ok(Block::empty());
    }
    a.parse_block(text).map_err(|e| InputError::new("", e))
}

/// `left/center/right`: the point `left^∞ · center · right^∞`, with the
/// center starting at coordinate 0. An empty center is written `-` or left
/// blank.
pub fn parse_point(a: &Alphabet, text: &str) -> InputResult<Point> {
    let parts: Vec<&str> = text.split('/').collect();
    let [l, c, r] = parts.as_slice() else {
        return Err(InputError::new("", format!("point `{text}` is not of the form L/C/R")));
    };
    let center = if c.is_empty() { Block::empty() } else { parse_block(a, c)? };
    Point::new(parse_block(a, l)?, center, parse_block(a, r)?).map_err(|e| InputError::new("", e))
}

pub fn render_point(a: &Alphabet, p: &Point) -> String {
    format!(
        "{}/{}/{}",
        a.render(p.left_period()),
        a.render(p.center()),
        a.render(p.right_period())
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_files_load() {
        for (name, _) in CORPUS {
            match name.rsplit('.').next() {
                Some("graph") => assert!(Files::Corpus.graph(name).is_ok(), "{name}"),
                Some("code") => assert!(Files::Corpus.map(name).is_ok(), "{name}"),
                _ => assert!(Files::Corpus.oracle(name).is_ok(), "{name}"),
            }
        }
    }

    #[test]
    fn point_syntax() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let p = parse_point(&a, "0/1/0").unwrap();
        assert_eq!(render_point(&a, &p), "0/1/0");
        let q = parse_point(&a, "01//1").unwrap();
        assert!(q.center().is_empty());
        assert!(parse_point(&a, "0/1").is_err());
        assert!(parse_point(&a, "/1/0").is_err());
    }

    #[test]
    fn missing_domain_is_reported() {
        let dir = std::env::temp_dir().join("shiftlab-input-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.code");
        std::fs::write(&path, "code memory 0 anticipation 0\n").unwrap();
        let e = Files::Disk.map(path.to_str().unwrap()).unwrap_err();
        assert!(e.message.contains("domain"));
    }
}
