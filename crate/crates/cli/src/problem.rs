//! Problem files: a line-oriented description of algebras, resolutions, an
//! optional bicharacter, cochains and tasks. The grammar is in
//! `docs/problem-format.md`; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use hochlift::algebra::{AlgebraElement, GradedAlgebra};
use hochlift::complexes::{
    cohomology_basis, format_complex, parse_complex, periodic_resolution, Cochain, ComplexError, FreeBimoduleComplex,
};
use hochlift::foundations::{Bicharacter, Degree, Field, GradingGroup, Scalar};
use hochlift::oracle::bar_resolution;

use crate::CliError;

/// A diagnostic pinned to a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for InputError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError { line, column, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutionSource {
    /// The periodic resolution of k[x]/(x^N), truncated at `length`.
    Truncated { n: usize, length: usize },
    Bar { length: usize },
    Inline(Arc<FreeBimoduleComplex>),
}

#[derive(Clone, Debug)]
pub struct AlgebraBlock {
    pub name: String,
    pub line: usize,
    pub group: Vec<u64>,
    pub basis: Vec<(String, Degree)>,
    pub unit: String,
    /// `(left, right, result, coefficient)`, in file order.
    pub products: Vec<(String, String, String, Scalar)>,
    pub algebra: Arc<GradedAlgebra>,
    pub resolution: Option<(ResolutionSource, usize)>,
}

impl AlgebraBlock {
    /// The resolution, lengthened to at least `min_length` when it is builtin.
    pub fn complex(&self, min_length: usize) -> Result<Arc<FreeBimoduleComplex>, CliError> {
        let (source, line) = self
            .resolution
            .as_ref()
            .ok_or_else(|| CliError::Input(err(self.line, 1, format!("algebra {} has no resolution", self.name))))?;
        let at_line = |e: String| CliError::Input(err(*line, 1, e));
        match source {
            ResolutionSource::Truncated { n, length } => {
                periodic_resolution(self.algebra.clone(), *n, (*length).max(min_length))
                    .map(Arc::new)
                    .map_err(|e| at_line(e.to_string()))
            }
            ResolutionSource::Bar { length } => bar_resolution(self.algebra.clone(), (*length).max(min_length))
                .map(|b| b.complex().clone())
                .map_err(|e| at_line(e.to_string())),
            ResolutionSource::Inline(p) if p.length() >= min_length => Ok(p.clone()),
            ResolutionSource::Inline(p) => Err(at_line(format!(
                "inline resolution has length {}, this command needs {min_length}",
                p.length()
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CochainSource {
    /// `generator -> element` lines; unlisted generators map to 0.
    Values(Vec<(String, Vec<(String, Scalar)>)>),
    /// The k-th representative of the cohomology basis in this degree.
    Class(usize),
}

#[derive(Clone, Debug)]
pub struct CochainBlock {
    pub name: String,
    pub line: usize,
    pub algebra: usize,
    pub degree: usize,
    pub source: CochainSource,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TaskKind {
    Cup(usize, usize),
    Bracket(usize, usize),
    Lift(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub kind: TaskKind,
    pub line: usize,
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub field: Field,
    pub algebras: Vec<AlgebraBlock>,
    pub bicharacter: Option<(Vec<Vec<Scalar>>, usize)>,
    pub cochains: Vec<CochainBlock>,
    pub tasks: Vec<Task>,
}

struct Tok<'a> {
    col: usize,
    text: &'a str,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    toks: Vec<Tok<'a>>,
}

impl<'a> Line<'a> {
    fn new(no: usize, raw: &'a str) -> Self {
        let text = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start: Option<usize> = None;
        for (i, ch) in text.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    toks.push(Tok { col: text[..s].chars().count() + 1, text: &text[s..i] });
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            toks.push(Tok { col: text[..s].chars().count() + 1, text: &text[s..] });
        }
        Line { no, text, toks }
    }

    /// Text from token `k` to the end of the line, with its column.
    fn rest(&self, k: usize) -> Option<(usize, &'a str)> {
        let t = self.toks.get(k)?;
        let byte = self.text.char_indices().nth(t.col - 1).map_or(0, |(b, _)| b);
        Some((t.col, self.text[byte..].trim_end()))
    }

    fn tok(&self, k: usize, what: &str) -> Result<&Tok<'a>, InputError> {
        self.toks.get(k).ok_or_else(|| {
            let col = self.text.trim_end().chars().count() + 1;
            err(self.no, col, format!("expected {what}"))
        })
    }

    fn end_of(&self, k: usize) -> Result<(), InputError> {
        match self.toks.get(k) {
            Some(t) => Err(err(self.no, t.col, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

fn parse_usize(t: &Tok, no: usize, what: &str) -> Result<usize, InputError> {
    t.text.parse().map_err(|_| err(no, t.col, format!("expected {what}, found `{}`", t.text)))
}

fn parse_field(t: &Tok, no: usize) -> Result<Field, InputError> {
    if t.text == "Q" {
        return Ok(Field::Rational);
    }
    let p = t
        .text
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.parse::<u64>().ok())
        .ok_or_else(|| err(no, t.col, format!("expected `Q` or `GF(p)`, found `{}`", t.text)))?;
    Field::prime(p).map_err(|e| err(no, t.col, e.to_string()))
}

fn field_text(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("GF({p})"),
    }
}

/// `truncated(N, L)` or `bar(L)`, whitespace allowed inside the parentheses.
fn parse_builtin(text: &str, col: usize, no: usize) -> Result<ResolutionSource, InputError> {
    let bad = || err(no, col, format!("expected `truncated(N, L)`, `bar(L)` or `inline`, found `{text}`"));
    let (head, args) = text.split_once('(').ok_or_else(bad)?;
    let args = args.strip_suffix(')').ok_or_else(bad)?;
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    match (head.trim(), nums.as_slice()) {
        ("truncated", &[n, length]) => Ok(ResolutionSource::Truncated { n, length }),
        ("bar", &[length]) => Ok(ResolutionSource::Bar { length }),
        _ => Err(bad()),
    }
}

/// `2·x + -1/3*y + z + -w`, or `0`.
fn parse_element(
    alg: &GradedAlgebra,
    text: &str,
    col: usize,
    no: usize,
) -> Result<Vec<(String, Scalar)>, InputError> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split('+') {
        let lead = part.len() - part.trim_start().len();
        let term = part.trim();
        let at = col + text[..offset + lead].chars().count();
        offset += part.len() + 1;
        if term.is_empty() {
            return Err(err(no, at, "empty term"));
        }
        let (coef, label) = match term.split_once(['·', '*']) {
            Some((c, l)) => (
                alg.field().parse(c.trim()).map_err(|e| err(no, at, e.to_string()))?,
                l.trim(),
            ),
            None => match term.strip_prefix('-') {
                Some(l) if alg.index_of(l).is_some() => (-alg.field().one(), l),
                _ => (alg.field().one(), term),
            },
        };
        if alg.index_of(label).is_none() {
            return Err(err(no, at, format!("unknown basis label `{label}`")));
        }
        out.push((label.to_string(), coef));
    }
    Ok(out)
}

fn element_text(terms: &[(String, Scalar)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(l, c)| if c.is_one() { l.clone() } else { format!("{c}·{l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile, InputError> {
        let lines: Vec<Line> = text.lines().enumerate().map(|(i, l)| Line::new(i + 1, l)).collect();
        let mut it = lines.iter().filter(|l| !l.toks.is_empty()).peekable();

        let first = it.next().ok_or_else(|| err(1, 1, "empty problem file; expected `field`"))?;
        if first.toks[0].text != "field" {
            return Err(err(first.no, first.toks[0].col, "the first line must be `field Q` or `field GF(p)`"));
        }
        let field = parse_field(first.tok(1, "a field")?, first.no)?;
        first.end_of(2)?;

        let mut file = ProblemFile { field, algebras: Vec::new(), bicharacter: None, cochains: Vec::new(), tasks: Vec::new() };
        while let Some(line) = it.next() {
            let head = &line.toks[0];
            match head.text {
                "algebra" => {
                    let block = file.parse_algebra(line, &mut it, &lines)?;
                    file.algebras.push(block);
                }
                "bicharacter" => {
                    if file.bicharacter.is_some() {
                        return Err(err(line.no, head.col, "only one bicharacter block is allowed"));
                    }
                    line.end_of(1)?;
                    let mut rows = Vec::new();
                    loop {
                        let l = it.next().ok_or_else(|| err(line.no, head.col, "unterminated bicharacter block"))?;
                        match l.toks[0].text {
                            "end" => break,
                            "row" => rows.push(
                                l.toks[1..]
                                    .iter()
                                    .map(|t| field.parse(t.text).map_err(|e| err(l.no, t.col, e.to_string())))
                                    .collect::<Result<Vec<_>, _>>()?,
                            ),
                            other => return Err(err(l.no, l.toks[0].col, format!("expected `row` or `end`, found `{other}`"))),
                        }
                    }
                    file.bicharacter = Some((rows, line.no));
                }
                "cochain" => {
                    let block = file.parse_cochain(line, &mut it)?;
                    file.cochains.push(block);
                }
                "task" => {
                    let kind = line.tok(1, "`cup`, `bracket` or `lift`")?;
                    let cochain = |k: usize| -> Result<usize, InputError> {
                        let t = line.tok(k, "a cochain name")?;
                        file.cochains
                            .iter()
                            .position(|c| c.name == t.text)
                            .ok_or_else(|| err(line.no, t.col, format!("unknown cochain `{}`", t.text)))
                    };
                    let task = match kind.text {
                        "cup" => TaskKind::Cup(cochain(2)?, cochain(3)?),
                        "bracket" => TaskKind::Bracket(cochain(2)?, cochain(3)?),
                        "lift" => TaskKind::Lift(cochain(2)?),
                        other => return Err(err(line.no, kind.col, format!("unknown task `{other}`"))),
                    };
                    line.end_of(if matches!(task, TaskKind::Lift(_)) { 3 } else { 4 })?;
                    file.tasks.push(Task { kind: task, line: line.no });
                }
                other => {
                    return Err(err(
                        line.no,
                        head.col,
                        format!("expected `algebra`, `bicharacter`, `cochain` or `task`, found `{other}`"),
                    ))
                }
            }
        }
        Ok(file)
    }

    fn parse_algebra<'a, 'b: 'a>(
        &self,
        header: &Line<'b>,
        it: &mut impl Iterator<Item = &'a Line<'b>>,
        lines: &[Line<'b>],
    ) -> Result<AlgebraBlock, InputError> {
        let name = header.tok(1, "an algebra name")?;
        header.end_of(2)?;
        if self.algebras.iter().any(|a| a.name == name.text) {
            return Err(err(header.no, name.col, format!("algebra `{}` is defined twice", name.text)));
        }
        let mut group: Option<GradingGroup> = None;
        let mut orders = Vec::new();
        let mut basis: Vec<(String, Degree)> = Vec::new();
        let mut unit: Option<(String, usize, usize)> = None;
        let mut products = Vec::new();
        let mut product_lines = Vec::new();
        let mut resolution: Option<(usize, usize, Result<ResolutionSource, (usize, usize)>)> = None;
        let end_line;
        loop {
            let l = it.next().ok_or_else(|| err(header.no, 1, "unterminated algebra block"))?;
            let head = &l.toks[0];
            match head.text {
                "end" => {
                    l.end_of(1)?;
                    end_line = l.no;
                    break;
                }
                "group" => {
                    if group.is_some() || !basis.is_empty() {
                        return Err(err(l.no, head.col, "`group` must come once, before `basis`"));
                    }
                    orders = l.toks[1..]
                        .iter()
                        .map(|t| t.text.parse::<u64>().map_err(|_| err(l.no, t.col, "expected a cyclic order (0 for Z)")))
                        .collect::<Result<Vec<_>, _>>()?;
                    group = Some(GradingGroup::from_orders(orders.clone()).map_err(|e| err(l.no, head.col, e.to_string()))?);
                }
                "basis" => {
                    let grp = group.get_or_insert_with(|| {
                        orders = vec![0];
                        GradingGroup::integers()
                    });
                    let label = l.tok(1, "a basis label")?;
                    if label.text.contains(['·', '*', '+']) || label.text == "0" {
                        return Err(err(l.no, label.col, format!("`{}` cannot be a basis label", label.text)));
                    }
                    if basis.iter().any(|(b, _)| b == label.text) {
                        return Err(err(l.no, label.col, format!("duplicate basis label `{}`", label.text)));
                    }
                    let (col, rest) = l.rest(2).ok_or_else(|| err(l.no, label.col, "expected a degree such as [1]"))?;
                    let d = Degree::parse(rest).map_err(|e| err(l.no, col, e.to_string()))?;
                    grp.check(&d).map_err(|e| err(l.no, col, e.to_string()))?;
                    basis.push((label.text.to_string(), d));
                }
                "unit" => {
                    let t = l.tok(1, "a basis label")?;
                    l.end_of(2)?;
                    unit = Some((t.text.to_string(), l.no, t.col));
                }
                "mul" => {
                    let find = |k: usize| -> Result<String, InputError> {
                        let t = l.tok(k, "a basis label")?;
                        if basis.iter().any(|(b, _)| b == t.text) {
                            Ok(t.text.to_string())
                        } else {
                            Err(err(l.no, t.col, format!("unknown basis label `{}`", t.text)))
                        }
                    };
                    let (a, b) = (find(1)?, find(2)?);
                    let arrow = l.tok(3, "`->`")?;
                    if arrow.text != "->" {
                        return Err(err(l.no, arrow.col, format!("expected `->`, found `{}`", arrow.text)));
                    }
                    let c = find(4)?;
                    let coef = l.tok(5, "a coefficient")?;
                    let coef = self.field.parse(coef.text).map_err(|e| err(l.no, coef.col, e.to_string()))?;
                    l.end_of(6)?;
                    if let Some((u, _, _)) = &unit {
                        if *u == a || *u == b {
                            return Err(err(l.no, head.col, "products with the unit are implied"));
                        }
                    }
                    products.push((a, b, c, coef));
                    product_lines.push(l.no);
                }
                "resolution" => {
                    if resolution.is_some() {
                        return Err(err(l.no, head.col, "only one resolution per algebra"));
                    }
                    let (col, rest) = l.rest(1).ok_or_else(|| err(l.no, head.col, "expected a resolution"))?;
                    if rest == "inline" {
                        let start = l.no + 1;
                        let mut last = None;
                        for inner in it.by_ref() {
                            if inner.toks.len() == 1 && inner.toks[0].text == "end" {
                                last = Some(inner.no);
                                break;
                            }
                        }
                        let last = last.ok_or_else(|| err(l.no, col, "unterminated inline resolution"))?;
                        resolution = Some((l.no, col, Err((start, last))));
                    } else {
                        resolution = Some((l.no, col, Ok(parse_builtin(rest, col, l.no)?)));
                    }
                }
                other => return Err(err(l.no, head.col, format!("unknown algebra entry `{other}`"))),
            }
        }

        if basis.is_empty() {
            return Err(err(header.no, 1, "algebra needs at least one basis element"));
        }
        let index: BTreeMap<&str, usize> = basis.iter().enumerate().map(|(i, (b, _))| (b.as_str(), i)).collect();
        let (unit, unit_idx) = match &unit {
            Some((u, no, col)) => match index.get(u.as_str()) {
                Some(&i) => (u.clone(), i),
                None => return Err(err(*no, *col, format!("unknown basis label `{u}`"))),
            },
            None => (basis[0].0.clone(), 0),
        };
        if let Some(k) = products.iter().position(|(a, b, _, _)| *a == unit || *b == unit) {
            return Err(err(product_lines[k], 3, format!("products with the unit `{unit}` are implied")));
        }
        let dim = basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            table[unit_idx][i].push((i, self.field.one()));
            if i != unit_idx {
                table[i][unit_idx].push((i, self.field.one()));
            }
        }
        for (a, b, c, k) in &products {
            table[index[a.as_str()]][index[b.as_str()]].push((index[c.as_str()], k.clone()));
        }
        let algebra = GradedAlgebra::new(
            self.field,
            group.unwrap_or_else(GradingGroup::integers),
            basis.iter().map(|(b, _)| b.clone()).collect(),
            basis.iter().map(|(_, d)| d.clone()).collect(),
            unit_idx,
            table,
        )
        .map_err(|e| err(end_line, 1, e.to_string()))?;
        let algebra = Arc::new(algebra);

        let resolution = match resolution {
            None => None,
            Some((no, _, Ok(source))) => Some((source, no)),
            Some((no, col, Err((start, last)))) => {
                let body: Vec<&str> = lines[start - 1..last].iter().map(|l| l.text).collect();
                let p = parse_complex(&body.join("\n"), algebra.clone()).map_err(|e| match e {
                    ComplexError::Parse { line, message } => err(start + line - 1, 1, message),
                    other => err(no, col, other.to_string()),
                })?;
                Some((ResolutionSource::Inline(Arc::new(p)), no))
            }
        };
        let block = AlgebraBlock {
            name: name.text.to_string(),
            line: header.no,
            group: orders,
            basis,
            unit,
            products,
            algebra,
            resolution,
        };
        if let Some((_, no)) = &block.resolution {
            block.complex(0).map_err(|e| match e {
                CliError::Input(i) => i,
                other => err(*no, 1, other.to_string()),
            })?;
        }
        Ok(block)
    }

    fn parse_cochain<'a, 'b: 'a>(
        &self,
        header: &Line<'b>,
        it: &mut impl Iterator<Item = &'a Line<'b>>,
    ) -> Result<CochainBlock, InputError> {
        let name = header.tok(1, "a cochain name")?;
        if self.cochains.iter().any(|c| c.name == name.text) {
            return Err(err(header.no, name.col, format!("cochain `{}` is defined twice", name.text)));
        }
        let on = header.tok(2, "`on`")?;
        if on.text != "on" {
            return Err(err(header.no, on.col, format!("expected `on`, found `{}`", on.text)));
        }
        let alg_tok = header.tok(3, "an algebra name")?;
        let algebra = self
            .algebras
            .iter()
            .position(|a| a.name == alg_tok.text)
            .ok_or_else(|| err(header.no, alg_tok.col, format!("unknown algebra `{}`", alg_tok.text)))?;
        let kw = header.tok(4, "`degree`")?;
        if kw.text != "degree" {
            return Err(err(header.no, kw.col, format!("expected `degree`, found `{}`", kw.text)));
        }
        let degree = parse_usize(header.tok(5, "a degree")?, header.no, "a degree")?;
        let block = &self.algebras[algebra];

        if let Some(t) = header.toks.get(6) {
            if t.text != "class" {
                return Err(err(header.no, t.col, format!("expected `class` or end of line, found `{}`", t.text)));
            }
            let k = parse_usize(header.tok(7, "a class index")?, header.no, "a class index")?;
            header.end_of(8)?;
            if block.resolution.is_none() {
                return Err(err(header.no, alg_tok.col, format!("algebra `{}` has no resolution", block.name)));
            }
            return Ok(CochainBlock { name: name.text.to_string(), line: header.no, algebra, degree, source: CochainSource::Class(k) });
        }

        let p = block.complex(0).map_err(|e| err(header.no, alg_tok.col, e.to_string()))?;
        if degree > p.length() {
            return Err(err(header.no, header.toks[5].col, format!("degree {degree} is beyond the resolution length {}", p.length())));
        }
        let mut values: Vec<(String, Vec<(String, Scalar)>)> = Vec::new();
        loop {
            let l = it.next().ok_or_else(|| err(header.no, 1, "unterminated cochain block"))?;
            if l.toks[0].text == "end" {
                l.end_of(1)?;
                break;
            }
            let g = &l.toks[0];
            if !p.names()[degree].iter().any(|n| n == g.text) {
                return Err(err(l.no, g.col, format!("no generator `{}` in degree {degree}", g.text)));
            }
            if values.iter().any(|(n, _)| n == g.text) {
                return Err(err(l.no, g.col, format!("generator `{}` given twice", g.text)));
            }
            let arrow = l.tok(1, "`->`")?;
            if arrow.text != "->" {
                return Err(err(l.no, arrow.col, format!("expected `->`, found `{}`", arrow.text)));
            }
            let (col, rest) = l.rest(2).ok_or_else(|| err(l.no, arrow.col + 2, "expected an algebra element"))?;
            values.push((g.text.to_string(), parse_element(&block.algebra, rest, col, l.no)?));
        }
        Ok(CochainBlock { name: name.text.to_string(), line: header.no, algebra, degree, source: CochainSource::Values(values) })
    }

    /// The cochain on `p` (a resolution of its algebra of any length).
    pub fn cochain(&self, k: usize, p: &FreeBimoduleComplex) -> Result<Cochain, CliError> {
        let c = &self.cochains[k];
        let alg = p.algebra();
        match &c.source {
            CochainSource::Values(values) => {
                let mut out: Vec<AlgebraElement> = vec![alg.zero(); p.rank(c.degree)];
                for (g, terms) in values {
                    let idx = p.names()[c.degree].iter().position(|n| n == g).expect("checked at parse time");
                    for (label, coef) in terms {
                        out[idx].add_scaled_basis(alg.index_of(label).expect("checked at parse time"), coef);
                    }
                }
                Ok(Cochain::new(c.degree, out))
            }
            CochainSource::Class(i) => {
                let basis = cohomology_basis(p, c.degree).map_err(|e| CliError::Input(err(c.line, 1, e.to_string())))?;
                basis.classes.get(*i).cloned().ok_or_else(|| {
                    CliError::Input(err(
                        c.line,
                        1,
                        format!("HH^{} has dimension {}, class {i} does not exist", c.degree, basis.dim()),
                    ))
                })
            }
        }
    }

    /// The file's bicharacter between the first two algebras, or t ≡ 1.
    pub fn bicharacter(&self, left: &GradedAlgebra, right: &GradedAlgebra) -> Result<Bicharacter, CliError> {
        match &self.bicharacter {
            None => Ok(Bicharacter::trivial(left.group().clone(), right.group().clone(), self.field)),
            Some((rows, line)) => Bicharacter::new(left.group().clone(), right.group().clone(), self.field, rows.clone())
                .map_err(|e| CliError::Input(err(*line, 1, e.to_string()))),
        }
    }

    /// The canonical text: parsing it gives back an equal problem.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", field_text(self.field));
        for a in &self.algebras {
            let _ = writeln!(out, "\nalgebra {}", a.name);
            let orders: Vec<String> = a.group.iter().map(|o| o.to_string()).collect();
            let _ = writeln!(out, "{}", format!("  group {}", orders.join(" ")).trim_end());
            for (b, d) in &a.basis {
                let _ = writeln!(out, "  basis {b} {d}");
            }
            let _ = writeln!(out, "  unit {}", a.unit);
            for (x, y, z, c) in &a.products {
                let _ = writeln!(out, "  mul {x} {y} -> {z} {c}");
            }
            match &a.resolution {
                None => {}
                Some((ResolutionSource::Truncated { n, length }, _)) => {
                    let _ = writeln!(out, "  resolution truncated({n}, {length})");
                }
                Some((ResolutionSource::Bar { length }, _)) => {
                    let _ = writeln!(out, "  resolution bar({length})");
                }
                Some((ResolutionSource::Inline(p), _)) => {
                    let _ = writeln!(out, "  resolution inline");
                    for l in format_complex(p).lines() {
                        let _ = writeln!(out, "    {l}");
                    }
                }
            }
            let _ = writeln!(out, "end");
        }
        if let Some((rows, _)) = &self.bicharacter {
            let _ = writeln!(out, "\nbicharacter");
            for r in rows {
                let vals: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "  row {}", vals.join(" "));
            }
            let _ = writeln!(out, "end");
        }
        for c in &self.cochains {
            let alg = &self.algebras[c.algebra].name;
            match &c.source {
                CochainSource::Class(k) => {
                    let _ = writeln!(out, "\ncochain {} on {alg} degree {} class {k}", c.name, c.degree);
                }
                CochainSource::Values(values) => {
                    let _ = writeln!(out, "\ncochain {} on {alg} degree {}", c.name, c.degree);
                    for (g, terms) in values {
                        let _ = writeln!(out, "  {g} -> {}", element_text(terms));
                    }
                    let _ = writeln!(out, "end");
                }
            }
        }
        if !self.tasks.is_empty() {
            out.push('\n');
        }
        for t in &self.tasks {
            let name = |k: usize| &self.cochains[k].name;
            let _ = match t.kind {
                TaskKind::Cup(a, b) => writeln!(out, "task cup {} {}", name(a), name(b)),
                TaskKind::Bracket(a, b) => writeln!(out, "task bracket {} {}", name(a), name(b)),
                TaskKind::Lift(a) => writeln!(out, "task lift {}", name(a)),
            };
        }
        out
    }
}
