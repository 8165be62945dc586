//! Sliding block codes, higher-block recoding and factor maps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::alphabet::{Alphabet, Block, Symbol};
use crate::error::{Error, Result};
use crate::graph::{trim_to_essential, Edge, LabeledGraph};
use crate::language::{blocks_of_length, language_difference};
use crate::point::Point;

/// A verification horizon: either a finite length or a proof for all lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Horizon {
    Bounded(usize),
    Unbounded,
}

impl fmt::Display for Horizon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Horizon::Bounded(n) => write!(f, "{n}"),
            Horizon::Unbounded => f.write_str("inf"),
        }
    }
}

/// Sliding block code `y_i = φ(x_{[i−m, i+n]})`, stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCode {
    domain: Alphabet,
    codomain: Alphabet,
    memory: usize,
    anticipation: usize,
    map: BTreeMap<Block, Symbol>,
}

impl BlockCode {
    pub fn new(
        domain: Alphabet,
        codomain: Alphabet,
        memory: usize,
        anticipation: usize,
        map: BTreeMap<Block, Symbol>,
    ) -> Result<Self> {
        let window = memory + anticipation + 1;
        if let Some(bad) = map.keys().find(|w| w.len() != window) {
            return Err(Error::CodeDomainMismatch(format!(
                "window `{}` does not have length {window}",
                domain.render(bad)
            )));
        }
        if let Some(bad) = map.values().find(|s| s.index() >= codomain.len()) {
            return Err(Error::UnknownSymbol(format!("#{}", bad.0)));
        }
        Ok(BlockCode {
            domain,
            codomain,
            memory,
            anticipation,
            map,
        })
    }

    /// Code defined by `f` on each of the given windows.
    pub fn from_fn(
        domain: Alphabet,
        codomain: Alphabet,
        memory: usize,
        anticipation: usize,
        windows: impl IntoIterator<Item = Block>,
        f: impl Fn(&Block) -> Symbol,
    ) -> Result<Self> {
        let map = windows.into_iter().map(|w| (w.clone(), f(&w))).collect();
        Self::new(domain, codomain, memory, anticipation, map)
    }

    /// Identity 1-block code on an alphabet.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let map = alphabet.symbols().map(|s| (Block(vec![s]), s)).collect();
        BlockCode {
            domain: alphabet.clone(),
            codomain: alphabet.clone(),
            memory: 0,
            anticipation: 0,
            map,
        }
    }

    pub fn domain_alphabet(&self) -> &Alphabet {
        &self.domain
    }

    pub fn codomain_alphabet(&self) -> &Alphabet {
        &self.codomain
    }

    pub fn memory(&self) -> usize {
        self.memory
    }

    pub fn anticipation(&self) -> usize {
        self.anticipation
    }

    pub fn window_len(&self) -> usize {
        self.memory + self.anticipation + 1
    }

    /// `2·max(m, n) + 1`.
    pub fn coding_length(&self) -> usize {
        2 * self.memory.max(self.anticipation) + 1
    }

    pub fn is_one_block(&self) -> bool {
        self.memory == 0 && self.anticipation == 0
    }

    pub fn map(&self) -> &BTreeMap<Block, Symbol> {
        &self.map
    }

    pub fn image_of(&self, window: &Block) -> Option<Symbol> {
        self.map.get(window).copied()
    }

    /// The same code keeping only the windows admissible in `g`.
    pub fn restricted_to(&self, g: &LabeledGraph) -> Result<BlockCode> {
        let map = blocks_of_length(g, self.window_len())
            .into_iter()
            .filter_map(|w| self.image_of(&w).map(|a| (w, a)))
            .collect();
        BlockCode::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.memory,
            self.anticipation,
            map,
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "code memory {} anticipation {}\n",
            self.memory, self.anticipation
        );
        for (w, a) in &self.map {
            s.push_str(&format!(
                "map {} {}\n",
                self.domain.render(w),
                self.codomain.name(*a)
            ));
        }
        s
    }
}

/// `domain`/`codomain` references declared in a code file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CodeHeader {
    pub domain: Option<String>,
    pub codomain: Option<String>,
}

/// Reads the optional `domain <file>` and `codomain <file>` lines.
pub fn parse_code_header(text: &str) -> Result<CodeHeader> {
    let mut header = CodeHeader::default();
    for (i, line) in text.lines().enumerate() {
        let t: Vec<&str> = line.split_whitespace().collect();
        let slot = match t.first() {
            Some(&"domain") => &mut header.domain,
            Some(&"codomain") => &mut header.codomain,
            _ => continue,
        };
        if t.len() != 2 {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected `{} <file>`", t[0]),
            });
        }
        if slot.replace(t[1].to_string()).is_some() {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("duplicate `{}` line", t[0]),
            });
        }
    }
    Ok(header)
}

/// Parse the block-code text format. `domain`/`codomain` lines are accepted
/// and ignored here (see [`parse_code_header`]).
pub fn parse_code(text: &str, domain: &Alphabet, codomain: &Alphabet) -> Result<BlockCode> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let t: Vec<&str> = trimmed.split_whitespace().collect();
        match t[0] {
            "domain" | "codomain" => {}
            "code" => {
                if header.is_some() {
                    return Err(err(line, "duplicate `code` line".into()));
                }
                let num = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(line, format!("expected a count, found `{s}`")))
                };
                match t.as_slice() {
                    ["code", "memory", m, "anticipation", n] => header = Some((num(m)?, num(n)?)),
                    _ => {
                        return Err(err(
                            line,
                            "expected `code memory <m> anticipation <n>`".into(),
                        ))
                    }
                }
            }
            "map" => {
                let Some((m, n)) = header else {
                    return Err(err(line, "`map` before `code` line".into()));
                };
                if t.len() != 3 {
                    return Err(err(line, "expected `map <window> <symbol>`".into()));
                }
                let w = domain
                    .parse_block(t[1])
                    .map_err(|e| err(line, e.to_string()))?;
                if w.len() != m + n + 1 {
                    return Err(err(
                        line,
                        format!("window `{}` does not have length {}", t[1], m + n + 1),
                    ));
                }
                let a = codomain.symbol(t[2]).map_err(|e| err(line, e.to_string()))?;
                if map.insert(w, a).is_some() {
                    return Err(err(line, format!("window `{}` mapped twice", t[1])));
                }
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let (m, n) = header.ok_or_else(|| err(0, "missing `code` line".into()))?;
    BlockCode::new(domain.clone(), codomain.clone(), m, n, map)
}

/// Code a finite block: output has length `|w| − m − n`.
pub fn apply_block(c: &BlockCode, w: &Block) -> Result<Block> {
    let window = c.window_len();
    if w.len() < window {
        return Err(Error::BlockTooShort {
            len: w.len(),
            window,
        });
    }
    w.symbols()
        .windows(window)
        .enumerate()
        .map(|(i, win)| {
            let win = Block(win.to_vec());
            c.image_of(&win).ok_or_else(|| Error::UnmappedWindow {
                coordinate: i as i64,
                window: c.domain.render(&win),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Block)
}

/// Image of an eventually periodic point.
pub fn apply_code(c: &BlockCode, p: &Point) -> Result<Point> {
    let (m, n) = (c.memory as i64, c.anticipation as i64);
    let l = p.left_period().len() as i64;
    let r = p.right_period().len() as i64;
    // y_i only sees the left period for i + n < origin, and only the right
    // period for i − m ≥ right_start.
    let left_end = p.origin() - n;
    let right_begin = p.right_start() + m;
    let y = |i: i64| -> Result<Symbol> {
        let win = p.window(i - m, i + n);
        c.image_of(&win).ok_or_else(|| Error::UnmappedWindow {
            coordinate: i,
            window: c.domain.render(&win),
        })
    };
    let range = |a: i64, b: i64| (a..b).map(y).collect::<Result<Vec<_>>>().map(Block);
    Point::with_origin(
        range(left_end - l, left_end)?,
        range(left_end, right_begin)?,
        range(right_begin, right_begin + r)?,
        left_end,
    )
}

/// `c2 ∘ c1`, with memory `m1 + m2` and anticipation `n1 + n2`. Defined on
/// every window whose `c1`-image lies in `c2`'s domain.
pub fn compose(c2: &BlockCode, c1: &BlockCode) -> Result<BlockCode> {
    if c1.codomain != c2.domain {
        return Err(Error::AlphabetMismatch(format!(
            "codomain [{}] of the inner code is not the domain [{}] of the outer code",
            c1.codomain, c2.domain
        )));
    }
    let w1 = c1.window_len();
    let total = w1 + c2.window_len() - 1;
    // Extend c1's windows symbol by symbol while every suffix window is mapped.
    let mut level: Vec<Block> = c1.map.keys().cloned().collect();
    for _ in w1..total {
        let mut next = Vec::new();
        for b in &level {
            for s in c1.domain.symbols() {
                let mut e = b.clone();
                e.push(s);
                if c1.map.contains_key(&e.slice(e.len() - w1, e.len())) {
                    next.push(e);
                }
            }
        }
        level = next;
    }
    let mut map = BTreeMap::new();
    for w in level {
        let mid = apply_block(c1, &w)?;
        if let Some(a) = c2.image_of(&mid) {
            map.insert(w, a);
        }
    }
    BlockCode::new(
        c1.domain.clone(),
        c2.codomain.clone(),
        c1.memory + c2.memory,
        c1.anticipation + c2.anticipation,
        map,
    )
}

/// Higher-block presentation of a shift together with its coding maps.
#[derive(Debug, Clone)]
pub struct HigherBlock {
    /// Presentation over the alphabet of admissible `N`-blocks.
    pub graph: LabeledGraph,
    /// The `N`-blocks, indexed by the new symbols.
    pub blocks: Vec<Block>,
    /// 1-block code reading position `memory` of each `N`-block.
    pub projection: BlockCode,
    /// The conjugacy `x ↦ (x_{[i−m, i+n]})_i` onto the higher-block shift.
    pub recoding: BlockCode,
}

fn block_symbol_name(a: &Alphabet, b: &Block) -> String {
    if b.len() == 1 {
        a.name(b.0[0]).to_string()
    } else if a.is_single_char() {
        a.render(b)
    } else {
        let parts: Vec<&str> = b.symbols().iter().map(|&s| a.name(s)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Recode `g` by windows `x_{[i−memory, i+anticipation]}`.
pub fn higher_block_with(g: &LabeledGraph, memory: usize, anticipation: usize) -> HigherBlock {
    let g = trim_to_essential(g);
    let n = memory + anticipation + 1;
    let a = g.alphabet();
    let blocks = if g.is_empty() {
        a.all_blocks(n)
    } else {
        blocks_of_length(&g, n)
    };
    let names: Vec<String> = blocks.iter().map(|b| block_symbol_name(a, b)).collect();
    let alphabet = Alphabet::new(names).expect("distinct admissible blocks");
    let sym: HashMap<&Block, Symbol> = blocks
        .iter()
        .enumerate()
        .map(|(i, b)| (b, Symbol(i as u32)))
        .collect();

    let graph = if n == 1 {
        g.relabeled(alphabet.clone(), |s| sym[&Block(vec![s])])
    } else {
        // Vertices are (v, u): v reached by a path labeled u, |u| = N − 1.
        let mut index: HashMap<(usize, Block), usize> = HashMap::new();
        let mut names = Vec::new();
        let mut level: Vec<(usize, Block)> =
            (0..g.vertex_count()).map(|v| (v, Block::empty())).collect();
        for _ in 0..n - 1 {
            let mut next = Vec::new();
            for (v, u) in &level {
                for e in g.out_edges(*v) {
                    let mut u2 = u.clone();
                    u2.push(e.label);
                    next.push((e.target, u2));
                }
            }
            next.sort();
            next.dedup();
            level = next;
        }
        for key in &level {
            index.insert(key.clone(), names.len());
            names.push(format!("{}|{}", g.vertex_name(key.0), a.render(&key.1)));
        }
        let mut edges = Vec::new();
        for (v, u) in &level {
            for e in g.out_edges(*v) {
                let full = u.concat(&Block(vec![e.label]));
                let tail = full.slice(1, full.len());
                edges.push(Edge {
                    source: index[&(*v, u.clone())],
                    target: index[&(e.target, tail)],
                    label: sym[&full],
                });
            }
        }
        trim_to_essential(&LabeledGraph::new_dedup(alphabet.clone(), names, edges))
    };

    let projection = BlockCode::from_fn(
        alphabet.clone(),
        a.clone(),
        0,
        0,
        alphabet.symbols().map(|s| Block(vec![s])),
        |w| blocks[w.0[0].index()].0[memory],
    )
    .expect("1-block windows");
    let recoding = BlockCode::from_fn(
        a.clone(),
        alphabet.clone(),
        memory,
        anticipation,
        blocks.iter().cloned(),
        |w| sym[w],
    )
    .expect("windows of the right length");
    HigherBlock {
        graph,
        blocks,
        projection,
        recoding,
    }
}

/// `N`-block presentation and the 1-block code projecting each `N`-block
/// onto its first symbol.
pub fn higher_block(g: &LabeledGraph, n: usize) -> (LabeledGraph, BlockCode) {
    assert!(n >= 1, "block length must be positive");
    let h = higher_block_with(g, 0, n - 1);
    (h.graph, h.projection)
}

/// A sliding block code bundled with its domain and codomain presentations.
///
/// The image is always contained in the codomain. `surjectivity` is
/// [`Horizon::Unbounded`] when the image language equals the codomain's;
/// otherwise it is the longest length up to which they agree and
/// `non_onto_witness` is a shortest codomain block outside the image.
#[derive(Debug, Clone)]
pub struct FactorMap {
    code: BlockCode,
    domain: LabeledGraph,
    codomain: LabeledGraph,
    surjectivity: Horizon,
    non_onto_witness: Option<Block>,
}

impl FactorMap {
    pub fn new(code: BlockCode, domain: &LabeledGraph, codomain: &LabeledGraph) -> Result<Self> {
        let domain = trim_to_essential(domain);
        let codomain = trim_to_essential(codomain);
        if domain.alphabet() != code.domain_alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "code reads [{}] but the domain is over [{}]",
                code.domain_alphabet(),
                domain.alphabet()
            )));
        }
        if codomain.alphabet() != code.codomain_alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "code writes [{}] but the codomain is over [{}]",
                code.codomain_alphabet(),
                codomain.alphabet()
            )));
        }
        let windows = blocks_of_length(&domain, code.window_len());
        if let Some(w) = windows.iter().find(|w| !code.map.contains_key(*w)) {
            return Err(Error::CodeDomainMismatch(format!(
                "admissible window `{}` is not mapped",
                domain.alphabet().render(w)
            )));
        }
        if code.map.len() != windows.len() {
            let extra = code
                .map
                .keys()
                .find(|w| windows.binary_search(w).is_err())
                .expect("more windows than admissible ones");
            return Err(Error::CodeDomainMismatch(format!(
                "window `{}` is not admissible",
                domain.alphabet().render(extra)
            )));
        }
        let image = one_block_image(&code, &domain);
        if let Some(w) = language_difference(&image, &codomain) {
            return Err(Error::ImageNotInCodomain(codomain.alphabet().render(&w)));
        }
        let non_onto_witness = language_difference(&codomain, &image);
        let surjectivity = match &non_onto_witness {
            None => Horizon::Unbounded,
            Some(w) => Horizon::Bounded(w.len() - 1),
        };
        Ok(FactorMap {
            code,
            domain,
            codomain,
            surjectivity,
            non_onto_witness,
        })
    }

    /// Identity map on a presented shift.
    pub fn identity(g: &LabeledGraph) -> Result<Self> {
        Self::new(BlockCode::identity(g.alphabet()), g, g)
    }

    pub fn code(&self) -> &BlockCode {
        &self.code
    }

    pub fn domain(&self) -> &LabeledGraph {
        &self.domain
    }

    pub fn codomain(&self) -> &LabeledGraph {
        &self.codomain
    }

    pub fn surjectivity(&self) -> Horizon {
        self.surjectivity
    }

    pub fn is_onto(&self) -> bool {
        self.surjectivity == Horizon::Unbounded
    }

    pub fn non_onto_witness(&self) -> Option<&Block> {
        self.non_onto_witness.as_ref()
    }
}

/// Presentation of the image: the recoded domain relabeled through the map.
fn one_block_image(code: &BlockCode, domain: &LabeledGraph) -> LabeledGraph {
    let h = higher_block_with(domain, code.memory, code.anticipation);
    let blocks = h.blocks;
    h.graph.relabeled(code.codomain.clone(), |s| {
        code.image_of(&blocks[s.index()])
            .expect("every admissible window is mapped")
    })
}

/// Equivalent map with memory = anticipation = 0 on the
/// `(m+n+1)`-block presentation of the domain.
pub fn recode_to_one_block(f: &FactorMap) -> FactorMap {
    if f.code.is_one_block() {
        return f.clone();
    }
    let h = higher_block_with(&f.domain, f.code.memory, f.code.anticipation);
    let code = BlockCode::from_fn(
        h.graph.alphabet().clone(),
        f.code.codomain.clone(),
        0,
        0,
        h.graph.alphabet().symbols().map(|s| Block(vec![s])),
        |w| {
            f.code
                .image_of(&h.blocks[w.0[0].index()])
                .expect("every admissible window is mapped")
        },
    )
    .expect("1-block windows");
    FactorMap {
        code,
        domain: h.graph,
        codomain: f.codomain.clone(),
        surjectivity: f.surjectivity,
        non_onto_witness: f.non_onto_witness.clone(),
    }
}

/// The domain presentation with every label replaced by its image, which
/// presents the image shift. Maps with a wider window are recoded first.
pub fn image_presentation(f: &FactorMap) -> LabeledGraph {
    one_block_image(&f.code, &f.domain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::fischer_cover;
    use crate::language::same_language;

    fn bin() -> Alphabet {
        Alphabet::new(["0", "1"]).unwrap()
    }

    fn full2() -> LabeledGraph {
        LabeledGraph::from_triples(&["0", "1"], &[("V", "V", "0"), ("V", "V", "1")]).unwrap()
    }

    fn golden() -> LabeledGraph {
        LabeledGraph::from_triples(&["0", "1"], &[("A", "A", "0"), ("A", "B", "1"), ("B", "A", "0")])
            .unwrap()
    }

    fn b(s: &str) -> Block {
        bin().parse_block(s).unwrap()
    }

    fn xor() -> BlockCode {
        BlockCode::from_fn(bin(), bin(), 0, 1, bin().all_blocks(2), |w| {
            Symbol(w.0[0].0 ^ w.0[1].0)
        })
        .unwrap()
    }

    #[test]
    fn apply_block_examples() {
        let x = xor();
        assert_eq!(apply_block(&x, &b("0110")).unwrap(), b("101"));
        assert_eq!(apply_block(&x, &b("00")).unwrap(), b("0"));
        assert_eq!(
            apply_block(&x, &b("0")),
            Err(Error::BlockTooShort { len: 1, window: 2 })
        );
        let id = BlockCode::identity(&bin());
        assert_eq!(apply_block(&id, &b("0110")).unwrap(), b("0110"));
    }

    #[test]
    fn apply_code_xor_single_one() {
        let p = Point::new(b("0"), b("1"), b("0")).unwrap();
        let y = apply_code(&xor(), &p).unwrap();
        for i in -6..6 {
            let want = if i == -1 || i == 0 { 1 } else { 0 };
            assert_eq!(y.symbol_at(i), Symbol(want), "coordinate {i}");
        }
        let shifted = p.shift(3);
        assert!(apply_code(&xor(), &shifted).unwrap().denotes_same(&y.shift(3)));
    }

    #[test]
    fn apply_code_reports_coordinate() {
        let code = BlockCode::identity(&bin());
        let mut map = code.map().clone();
        map.remove(&b("1"));
        let partial = BlockCode::new(bin(), bin(), 0, 0, map).unwrap();
        let p = Point::new(b("0"), b("01"), b("0")).unwrap().shift(-5);
        assert_eq!(
            apply_code(&partial, &p),
            Err(Error::UnmappedWindow {
                coordinate: 6,
                window: "1".into()
            })
        );
    }

    #[test]
    fn compose_xor_twice() {
        let c = compose(&xor(), &xor()).unwrap();
        assert_eq!((c.memory(), c.anticipation()), (0, 2));
        for w in bin().all_blocks(3) {
            assert_eq!(c.image_of(&w), Some(Symbol(w.0[0].0 ^ w.0[2].0)));
        }
        let id = BlockCode::identity(&bin());
        assert_eq!(compose(&id, &xor()).unwrap(), xor());
        let other = BlockCode::identity(&Alphabet::new(["a", "b"]).unwrap());
        assert!(matches!(compose(&other, &xor()), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn higher_block_golden() {
        let (h, proj) = higher_block(&golden(), 2);
        assert_eq!(h.alphabet().names(), ["00", "01", "10"]);
        for n in 1..=8 {
            let mut img: Vec<Block> = blocks_of_length(&h, n)
                .iter()
                .map(|w| apply_block(&proj, w).unwrap())
                .collect();
            img.sort();
            img.dedup();
            assert_eq!(img, blocks_of_length(&golden(), n));
        }
        let (h1, p1) = higher_block(&golden(), 1);
        assert_eq!(h1.edges().len(), 3);
        assert!(p1.map().iter().all(|(w, s)| w.0[0] == *s));
    }

    #[test]
    fn parse_and_print_round_trip() {
        let text = "# xor\ncode memory 0 anticipation 1\nmap 00 0\nmap 01 1\nmap 10 1\nmap 11 0\n";
        let c = parse_code(text, &bin(), &bin()).unwrap();
        assert_eq!(c, xor());
        assert_eq!(parse_code(&c.to_text(), &bin(), &bin()).unwrap(), c);
        let dup = "code memory 0 anticipation 0\nmap 0 0\nmap 0 1\n";
        assert!(matches!(
            parse_code(dup, &bin(), &bin()),
            Err(Error::Parse { line: 3, .. })
        ));
        let bad = "code memory 0 anticipation 0\nmapp 0 0\n";
        assert!(matches!(
            parse_code(bad, &bin(), &bin()),
            Err(Error::Parse { line: 2, .. })
        ));
        let h = parse_code_header("domain a.graph\ncodomain b.graph\ncode memory 0 anticipation 0\n")
            .unwrap();
        assert_eq!(h.domain.as_deref(), Some("a.graph"));
        assert_eq!(h.codomain.as_deref(), Some("b.graph"));
    }

    #[test]
    fn factor_map_validation() {
        let f = FactorMap::new(xor(), &full2(), &full2()).unwrap();
        assert!(f.is_onto());
        let mut map = xor().map().clone();
        map.remove(&b("11"));
        let partial = BlockCode::new(bin(), bin(), 0, 1, map).unwrap();
        assert!(matches!(
            FactorMap::new(partial, &full2(), &full2()),
            Err(Error::CodeDomainMismatch(_))
        ));
        // 0 ↦ 1, 1 ↦ 1 on golden mean: image "11" is outside golden mean.
        let ones = BlockCode::from_fn(bin(), bin(), 0, 0, bin().all_blocks(1), |_| Symbol(1)).unwrap();
        assert_eq!(
            FactorMap::new(ones.clone(), &golden(), &golden()).unwrap_err(),
            Error::ImageNotInCodomain("11".into())
        );
        let not_onto = FactorMap::new(ones, &golden(), &full2()).unwrap();
        assert_eq!(not_onto.surjectivity(), Horizon::Bounded(0));
        assert_eq!(not_onto.non_onto_witness(), Some(&b("0")));
    }

    #[test]
    fn recoding_xor() {
        let f = FactorMap::new(xor(), &full2(), &full2()).unwrap();
        let r = recode_to_one_block(&f);
        assert!(r.code().is_one_block());
        assert_eq!(r.domain().alphabet().names(), ["00", "01", "10", "11"]);
        let images: Vec<u32> = (0..4).map(|i| r.code().image_of(&Block(vec![Symbol(i)])).unwrap().0).collect();
        assert_eq!(images, [0, 1, 1, 0]);
        let img = image_presentation(&r);
        assert!(same_language(&img, &full2()));
        assert_eq!(fischer_cover(&img).unwrap().vertex_count(), 1);

        let h = higher_block_with(&full2(), 0, 1);
        let p = Point::new(b("01"), b("1"), b("001")).unwrap();
        let via = apply_code(r.code(), &apply_code(&h.recoding, &p).unwrap()).unwrap();
        assert!(via.denotes_same(&apply_code(&xor(), &p).unwrap()));
    }
}
