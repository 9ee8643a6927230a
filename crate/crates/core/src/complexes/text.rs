//! Line-oriented text form of a complex.
//!
//! ```text
//! complex length 2
//! kind periodic 2
//! degree 0 rank 1
//! gen e0 [0]
//! mu (0) : 1·1
//! degree 1 rank 1
//! gen e1 [1]
//! d (0, 0) : -1·1⊗x + 1·x⊗1
//! ...
//! end
//! ```
//!
//! `d (row, col)` is the coefficient word of generator `row` of degree n−1 in
//! d(e_col). Every coefficient is written out, so printing is canonical.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{ComplexError, ComplexKind, FreeBimoduleComplex, FreeElement};
use crate::algebra::GradedAlgebra;
use crate::foundations::{Degree, Scalar};

pub fn format_complex(p: &FreeBimoduleComplex) -> String {
    let alg = p.algebra();
    let mut out = String::new();
    let _ = writeln!(out, "complex length {}", p.length());
    let kind = match p.kind() {
        ComplexKind::Periodic { n } => format!("periodic {n}"),
        ComplexKind::Bar => "bar".into(),
        ComplexKind::TwistedTotal => "twisted".into(),
        ComplexKind::TensorSquare => "tensor-square".into(),
        ComplexKind::Custom => "custom".into(),
    };
    let _ = writeln!(out, "kind {kind}");
    for n in 0..=p.length() {
        let _ = writeln!(out, "degree {n} rank {}", p.rank(n));
        for g in 0..p.rank(n) {
            let _ = writeln!(out, "gen {} {}", p.gen_name(n, g), p.gen_degree(n, g));
        }
        if n == 0 {
            for (g, a) in p.augmentation().iter().enumerate() {
                let terms: Vec<String> = a.support().map(|(s, c)| format!("{c}·{}", alg.label(s))).collect();
                if !terms.is_empty() {
                    let _ = writeln!(out, "mu ({g}) : {}", terms.join(" + "));
                }
            }
            continue;
        }
        for col in 0..p.rank(n) {
            let d = p.differential(n, col);
            for row in d.generators() {
                let terms: Vec<String> = d
                    .word(row)
                    .terms()
                    .map(|(l, r, c)| format!("{c}·{}⊗{}", alg.label(l), alg.label(r)))
                    .collect();
                let _ = writeln!(out, "d ({row}, {col}) : {}", terms.join(" + "));
            }
        }
    }
    out.push_str("end\n");
    out
}

fn err(line: usize, message: impl Into<String>) -> ComplexError {
    ComplexError::Parse { line, message: message.into() }
}

/// Inverse of [`format_complex`]; line numbers in errors are 1-based.
pub fn parse_complex(text: &str, algebra: Arc<GradedAlgebra>) -> Result<FreeBimoduleComplex, ComplexError> {
    let field = algebra.field();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, head) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let length: usize = head
        .strip_prefix("complex length ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| err(ln, "expected `complex length N`"))?;

    let mut kind = ComplexKind::Custom;
    let mut gen_degrees: Vec<Vec<Degree>> = Vec::new();
    let mut names: Vec<Vec<String>> = Vec::new();
    let mut ranks: Vec<usize> = Vec::new();
    let mut differential: Vec<Vec<FreeElement>> = Vec::new();
    let mut augmentation = Vec::new();
    let mut finished = false;

    for (ln, line) in lines.by_ref() {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("kind") => {
                let rest: Vec<&str> = words.collect();
                kind = match rest.as_slice() {
                    ["periodic", n] => ComplexKind::Periodic {
                        n: n.parse().map_err(|_| err(ln, "bad periodic order"))?,
                    },
                    ["bar"] => ComplexKind::Bar,
                    ["twisted"] => ComplexKind::TwistedTotal,
                    ["tensor-square"] => ComplexKind::TensorSquare,
                    ["custom"] => ComplexKind::Custom,
                    _ => return Err(err(ln, "unknown complex kind")),
                };
            }
            Some("degree") => {
                let rest: Vec<&str> = words.collect();
                let (n, r) = match rest.as_slice() {
                    [n, "rank", r] => (
                        n.parse::<usize>().map_err(|_| err(ln, "bad degree"))?,
                        r.parse::<usize>().map_err(|_| err(ln, "bad rank"))?,
                    ),
                    _ => return Err(err(ln, "expected `degree n rank r`")),
                };
                if n != gen_degrees.len() {
                    return Err(err(ln, format!("expected degree {}", gen_degrees.len())));
                }
                gen_degrees.push(Vec::new());
                names.push(Vec::new());
                ranks.push(r);
                differential.push(if n == 0 { Vec::new() } else { vec![FreeElement::new(); r] });
                if n == 0 {
                    augmentation = vec![algebra.zero(); r];
                }
            }
            Some("gen") => {
                let n = gen_degrees.len().checked_sub(1).ok_or_else(|| err(ln, "gen before degree"))?;
                let name = words.next().ok_or_else(|| err(ln, "missing generator name"))?;
                let deg_text: String = words.collect::<Vec<_>>().join("");
                let deg = Degree::parse(&deg_text).map_err(|e| err(ln, e.to_string()))?;
                algebra.group().check(&deg).map_err(|e| err(ln, e.to_string()))?;
                if gen_degrees[n].len() >= ranks[n] {
                    return Err(err(ln, "more generators than the declared rank"));
                }
                gen_degrees[n].push(deg);
                names[n].push(name.to_string());
            }
            Some("mu") => {
                if gen_degrees.len() != 1 {
                    return Err(err(ln, "mu lines belong to degree 0"));
                }
                let (pos, body) = line["mu".len()..].split_once(':').ok_or_else(|| err(ln, "missing `:`"))?;
                let g: usize = pos
                    .trim()
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .and_then(|s| s.trim().parse().ok())
                    .ok_or_else(|| err(ln, "expected `(g)`"))?;
                if g >= ranks[0] {
                    return Err(err(ln, "generator out of range"));
                }
                for term in body.split(" + ") {
                    let (c, label) = term.trim().split_once('·').ok_or_else(|| err(ln, "expected `coeff·label`"))?;
                    let c = field.parse(c).map_err(|e| err(ln, e.to_string()))?;
                    let s = algebra.index_of(label).ok_or_else(|| err(ln, format!("unknown label `{label}`")))?;
                    augmentation[g].add_scaled_basis(s, &c);
                }
            }
            Some("d") => {
                let n = gen_degrees.len().checked_sub(1).ok_or_else(|| err(ln, "d before degree"))?;
                if n == 0 {
                    return Err(err(ln, "degree 0 has no differential"));
                }
                let (pos, body) = line[1..].split_once(':').ok_or_else(|| err(ln, "missing `:`"))?;
                let pair = pos
                    .trim()
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| err(ln, "expected `(row, col)`"))?;
                let (row, col) = pair.split_once(',').ok_or_else(|| err(ln, "expected `(row, col)`"))?;
                let row: usize = row.trim().parse().map_err(|_| err(ln, "bad row"))?;
                let col: usize = col.trim().parse().map_err(|_| err(ln, "bad column"))?;
                if row >= ranks[n - 1] || col >= ranks[n] {
                    return Err(err(ln, "entry out of range"));
                }
                for term in body.split(" + ") {
                    let (c, rest) = term.trim().split_once('·').ok_or_else(|| err(ln, "expected `coeff·left⊗right`"))?;
                    let (l, r) = rest.split_once('⊗').ok_or_else(|| err(ln, "expected `left⊗right`"))?;
                    let c: Scalar = field.parse(c).map_err(|e| err(ln, e.to_string()))?;
                    let l = algebra.index_of(l).ok_or_else(|| err(ln, format!("unknown label `{l}`")))?;
                    let r = algebra.index_of(r).ok_or_else(|| err(ln, format!("unknown label `{r}`")))?;
                    differential[n][col].add_term(row, l, r, c);
                }
            }
            Some("end") => {
                finished = true;
                break;
            }
            _ => return Err(err(ln, format!("unexpected line `{line}`"))),
        }
    }
    if !finished {
        return Err(err(text.lines().count(), "missing `end`"));
    }
    if gen_degrees.len() != length + 1 {
        return Err(err(ln, "degree count differs from the declared length"));
    }
    for (n, degs) in gen_degrees.iter().enumerate() {
        if degs.len() != ranks[n] {
            return Err(err(ln, format!("degree {n}: fewer generators than the declared rank")));
        }
    }
    Ok(FreeBimoduleComplex::new(algebra, gen_degrees, differential, augmentation)?
        .with_kind(kind)
        .with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::periodic_truncated_resolution;
    use crate::foundations::Field;

    #[test]
    fn round_trip() {
        let p = periodic_truncated_resolution(Field::Rational, 3, 4).unwrap();
        let text = format_complex(&p);
        assert!(text.contains("d (0, 0) : -1·1⊗x + 1·x⊗1"));
        let q = parse_complex(&text, p.algebra().clone()).unwrap();
        assert_eq!(q, p);
        assert_eq!(format_complex(&q), text);
    }

    #[test]
    fn reports_line() {
        let p = periodic_truncated_resolution(Field::Rational, 2, 2).unwrap();
        let text = format_complex(&p).replace("1·x⊗1", "1·z⊗1");
        match parse_complex(&text, p.algebra().clone()) {
            Err(ComplexError::Parse { line, .. }) => assert_eq!(line, 8),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }
}
