//! The line-oriented `.palf` text format.
//!
//! ```text
//! # comment
//! surface 0 5
//! curve a convex 1 2
//! curve b from a apply +c(2,3) -h(1)
//! palf W a b
//! ```
//!
//! A `surface` line comes first. Names share one namespace and must be
//! declared before they are used. Cycles of a `palf` line are listed in
//! application order. Comment lines before the `surface` line form the
//! header and survive a round trip; other comments are dropped.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::curve::Curve;
use crate::palf::Palf;
use crate::surface::{Generator, Surface, TopologyError};

/// How a curve is declared in a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveDef {
    Convex { lo: usize, hi: usize },
    /// The image of an earlier curve under a word, applied left to right.
    From { base: String, apply: Vec<Generator> },
}

#[derive(Clone, Debug)]
pub struct CurveDecl {
    pub name: String,
    pub def: CurveDef,
    pub curve: Curve,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalfDecl {
    pub name: String,
    pub cycles: Vec<String>,
}

/// Errors from building a document, independent of any source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("`{0}` is already declared")]
    Duplicate(String),
    #[error("curve `{0}` is not declared before its use")]
    Undeclared(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("the first declaration must be `surface <genus> <boundaries>`")]
    MissingSurface,
    #[error(transparent)]
    Document(#[from] DocumentError),
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    /// Syntax errors are malformed text; everything else is well-formed text
    /// describing something invalid.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self.kind,
            ParseErrorKind::Syntax(_) | ParseErrorKind::MissingSurface
        )
    }
}

#[derive(Clone, Debug)]
pub struct PalfDocument {
    surface: Surface,
    header: Vec<String>,
    curves: Vec<CurveDecl>,
    palfs: Vec<PalfDecl>,
    index: HashMap<String, Entry>,
}

#[derive(Clone, Copy, Debug)]
enum Entry {
    Curve(usize),
    Palf(usize),
}

impl PalfDocument {
    pub fn new(surface: Surface) -> Self {
        PalfDocument {
            surface,
            header: Vec::new(),
            curves: Vec::new(),
            palfs: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn surface(&self) -> &Surface {
        &self.surface
    }

    /// Header comment lines, without the leading `#`.
    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn push_header(&mut self, line: impl Into<String>) {
        self.header.push(line.into());
    }

    pub fn curve_decls(&self) -> &[CurveDecl] {
        &self.curves
    }

    pub fn palf_decls(&self) -> &[PalfDecl] {
        &self.palfs
    }

    pub fn curve(&self, name: &str) -> Option<&Curve> {
        match self.index.get(name)? {
            Entry::Curve(i) => Some(&self.curves[*i].curve),
            Entry::Palf(_) => None,
        }
    }

    pub fn palf(&self, name: &str) -> Option<Palf> {
        let Entry::Palf(i) = self.index.get(name)? else {
            return None;
        };
        let decl = &self.palfs[*i];
        let cycles = decl
            .cycles
            .iter()
            .map(|c| self.curve(c).expect("checked on insertion").clone())
            .collect();
        Some(Palf::new(decl.name.clone(), self.surface, cycles))
    }

    /// All factorizations in declaration order.
    pub fn palfs(&self) -> Vec<Palf> {
        self.palfs
            .iter()
            .map(|d| self.palf(&d.name).expect("declared"))
            .collect()
    }

    fn claim(&mut self, name: &str, entry: Entry) -> Result<(), DocumentError> {
        if self.index.contains_key(name) {
            return Err(DocumentError::Duplicate(name.to_string()));
        }
        self.index.insert(name.to_string(), entry);
        Ok(())
    }

    pub fn add_curve(&mut self, name: impl Into<String>, def: CurveDef) -> Result<&Curve, DocumentError> {
        let name = name.into();
        let curve = match &def {
            CurveDef::Convex { lo, hi } => Curve::convex(&self.surface, *lo, *hi)?,
            CurveDef::From { base, apply } => self
                .curve(base)
                .ok_or_else(|| DocumentError::Undeclared(base.clone()))?
                .act_on_curve(apply)?,
        };
        self.claim(&name, Entry::Curve(self.curves.len()))?;
        self.curves.push(CurveDecl { name, def, curve });
        Ok(&self.curves.last().unwrap().curve)
    }

    pub fn add_palf(&mut self, name: impl Into<String>, cycles: Vec<String>) -> Result<(), DocumentError> {
        let name = name.into();
        if let Some(missing) = cycles.iter().find(|c| self.curve(c).is_none()) {
            return Err(DocumentError::Undeclared(missing.clone()));
        }
        self.claim(&name, Entry::Palf(self.palfs.len()))?;
        self.palfs.push(PalfDecl { name, cycles });
        Ok(())
    }

    /// Same surface, same curve names with isotopic curves, and the same
    /// factorizations. Header comments and declaration syntax are ignored.
    pub fn same_content(&self, other: &PalfDocument) -> bool {
        self.surface == other.surface
            && self.curves.len() == other.curves.len()
            && self
                .curves
                .iter()
                .all(|d| other.curve(&d.name) == Some(&d.curve))
            && self.palfs == other.palfs
    }

    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PalfDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.header {
            if line.is_empty() {
                writeln!(f, "#")?;
            } else {
                writeln!(f, "# {line}")?;
            }
        }
        writeln!(f, "surface {} {}", self.surface.genus(), self.surface.boundaries())?;
        if !self.curves.is_empty() {
            writeln!(f)?;
        }
        for d in &self.curves {
            match &d.def {
                CurveDef::Convex { lo, hi } => writeln!(f, "curve {} convex {lo} {hi}", d.name)?,
                CurveDef::From { base, apply } => {
                    write!(f, "curve {} from {base} apply", d.name)?;
                    for g in apply {
                        write!(f, " {g}")?;
                    }
                    writeln!(f)?;
                }
            }
        }
        if !self.palfs.is_empty() {
            writeln!(f)?;
        }
        for p in &self.palfs {
            write!(f, "palf {}", p.name)?;
            for c in &p.cycles {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A token with its 1-based column.
#[derive(Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    column: line[..s].chars().count() + 1,
                    text: &line[s..i],
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    out
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '\''))
}

struct LineParser<'a> {
    line: usize,
    toks: Vec<Token<'a>>,
    pos: usize,
    end_column: usize,
}

impl<'a> LineParser<'a> {
    fn err_at(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column,
            kind,
        }
    }

    fn syntax(&self, column: usize, msg: impl Into<String>) -> ParseError {
        self.err_at(column, ParseErrorKind::Syntax(msg.into()))
    }

    fn next(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        let t = self
            .toks
            .get(self.pos)
            .copied()
            .ok_or_else(|| self.syntax(self.end_column, format!("expected {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("`{kw}`"))?;
        if t.text != kw {
            return Err(self.syntax(t.column, format!("expected `{kw}`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn number(&mut self, what: &str) -> Result<(usize, Token<'a>), ParseError> {
        let t = self.next(what)?;
        let n = t
            .text
            .parse()
            .map_err(|_| self.syntax(t.column, format!("expected {what}, found `{}`", t.text)))?;
        Ok((n, t))
    }

    fn name(&mut self, what: &str) -> Result<Token<'a>, ParseError> {
        let t = self.next(what)?;
        if !is_name(t.text) {
            return Err(self.syntax(t.column, format!("invalid {what} `{}`", t.text)));
        }
        Ok(t)
    }

    fn rest(&mut self) -> &[Token<'a>] {
        let r = &self.toks[self.pos..];
        self.pos = self.toks.len();
        r
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            Some(t) => Err(self.syntax(t.column, format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

/// Splits the text after `apply` into generator tokens, allowing blanks
/// inside the parentheses, e.g. `+c(1, 2)`.
fn generators(p: &LineParser<'_>, toks: &[Token<'_>]) -> Result<Vec<Generator>, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < toks.len() {
        let column = toks[i].column;
        let mut text = toks[i].text.to_string();
        while !text.ends_with(')') && i + 1 < toks.len() && !toks[i + 1].text.starts_with(['+', '-']) {
            i += 1;
            text.push_str(toks[i].text);
        }
        i += 1;
        out.push(text.parse().map_err(|e: crate::surface::GeneratorSyntaxError| p.syntax(column, e.to_string()))?);
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<PalfDocument, ParseError> {
    let mut doc: Option<PalfDocument> = None;
    let mut header = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let (body, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(&raw[i + 1..])),
            None => (raw, None),
        };
        let toks = tokens(body);
        if toks.is_empty() {
            if doc.is_none() {
                if let Some(c) = comment {
                    header.push(c.strip_prefix(' ').unwrap_or(c).trim_end().to_string());
                }
            }
            continue;
        }
        let mut p = LineParser {
            line,
            toks,
            pos: 0,
            end_column: body.trim_end().chars().count() + 1,
        };
        let head = p.next("a declaration")?;
        let Some(d) = doc.as_mut() else {
            if head.text != "surface" {
                return Err(p.err_at(head.column, ParseErrorKind::MissingSurface));
            }
            let (genus, _) = p.number("a genus")?;
            let (boundaries, bt) = p.number("a boundary count")?;
            p.finish()?;
            let surface = Surface::new(genus, boundaries)
                .map_err(|e| p.err_at(bt.column, DocumentError::from(e).into()))?;
            let mut fresh = PalfDocument::new(surface);
            fresh.header = std::mem::take(&mut header);
            doc = Some(fresh);
            continue;
        };
        match head.text {
            "surface" => return Err(p.syntax(head.column, "duplicate `surface` declaration")),
            "curve" => {
                let name = p.name("curve name")?;
                let kind = p.next("`convex` or `from`")?;
                let def = match kind.text {
                    "convex" => {
                        let (lo, _) = p.number("a hole index")?;
                        let (hi, _) = p.number("a hole index")?;
                        p.finish()?;
                        CurveDef::Convex { lo, hi }
                    }
                    "from" => {
                        let base = p.name("curve name")?;
                        p.keyword("apply")?;
                        let rest = p.rest().to_vec();
                        CurveDef::From {
                            base: base.text.to_string(),
                            apply: generators(&p, &rest)?,
                        }
                    }
                    other => {
                        return Err(p.syntax(
                            kind.column,
                            format!("expected `convex` or `from`, found `{other}`"),
                        ))
                    }
                };
                let result = d.add_curve(name.text, def).map(|_| ());
                result.map_err(|e| {
                    let column = match e {
                        DocumentError::Duplicate(_) => name.column,
                        DocumentError::Undeclared(_) => p.toks[3].column,
                        DocumentError::Topology(_) => p.toks.get(5).unwrap_or(&p.toks[3]).column,
                    };
                    p.err_at(column, e.into())
                })?;
            }
            "palf" => {
                let name = p.name("factorization name")?;
                let mut cycles = Vec::new();
                for t in p.rest().to_vec() {
                    if !is_name(t.text) {
                        return Err(p.syntax(t.column, format!("invalid curve name `{}`", t.text)));
                    }
                    if d.curve(t.text).is_none() {
                        let e = DocumentError::Undeclared(t.text.to_string());
                        return Err(p.err_at(t.column, e.into()));
                    }
                    cycles.push(t.text.to_string());
                }
                d.add_palf(name.text, cycles)
                    .map_err(|e| p.err_at(name.column, e.into()))?;
            }
            other => {
                return Err(p.syntax(
                    head.column,
                    format!("expected `curve` or `palf`, found `{other}`"),
                ))
            }
        }
    }
    doc.ok_or(ParseError {
        line: text.lines().count().max(1),
        column: 1,
        kind: ParseErrorKind::MissingSurface,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::TwistGen;

    #[test]
    fn minimal_document() {
        let doc = parse("surface 0 5\ncurve a1 convex 1 1\npalf W a1\n").unwrap();
        assert_eq!(doc.surface().boundaries(), 5);
        assert_eq!(doc.curve_decls().len(), 1);
        let w = doc.palf("W").unwrap();
        assert_eq!(w.cycles().len(), 1);
        assert!(doc.palf("a1").is_none());
    }

    #[test]
    fn derived_curves_act_on_their_base() {
        let doc = parse(
            "surface 0 4\ncurve a convex 1 2\ncurve b from a apply +c(2, 3)\ncurve c from b apply -c(2,3)\n",
        )
        .unwrap();
        let a = doc.curve("a").unwrap();
        let b = doc.curve("b").unwrap();
        let expected = a
            .act_on_curve(&[Generator::Twist(TwistGen::positive(2, 3))])
            .unwrap();
        assert_eq!(b, &expected);
        assert_eq!(doc.curve("c").unwrap(), a);
    }

    fn error(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn undeclared_names_are_reported() {
        let e = error("surface 0 4\ncurve a convex 1 1\npalf P a zz\n");
        assert_eq!((e.line, e.column), (3, 10));
        assert_eq!(e.kind, ParseErrorKind::Document(DocumentError::Undeclared("zz".into())));
        assert!(e.to_string().contains("`zz`"));
        // forward reference
        let e = error("surface 0 4\ncurve b from a apply +c(1,2)\ncurve a convex 1 1\n");
        assert_eq!((e.line, e.column), (2, 14));
        assert!(!e.is_syntax());
    }

    #[test]
    fn duplicates_and_ranges() {
        let e = error("surface 0 4\ncurve a convex 1 1\ncurve a convex 2 2\n");
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::Document(DocumentError::Duplicate("a".into())));
        let e = error("surface 0 4\ncurve a convex 1 1\npalf a a\n");
        assert_eq!(e.kind, ParseErrorKind::Document(DocumentError::Duplicate("a".into())));
        let e = error("surface 0 4\ncurve a convex 2 4\n");
        assert!(matches!(
            e.kind,
            ParseErrorKind::Document(DocumentError::Topology(TopologyError::InvalidHoleRange { .. }))
        ));
        let e = error("surface 0 4\ncurve a convex 1 1\ncurve b from a apply +h(3)\n");
        assert!(matches!(
            e.kind,
            ParseErrorKind::Document(DocumentError::Topology(TopologyError::InvalidHalfTwist { .. }))
        ));
    }

    #[test]
    fn genus_is_rejected() {
        let e = error("surface 1 3\n");
        assert_eq!((e.line, e.column), (1, 11));
        assert!(matches!(
            e.kind,
            ParseErrorKind::Document(DocumentError::Topology(TopologyError::UnsupportedGenus(1)))
        ));
    }

    #[test]
    fn syntax_errors() {
        for (text, line, column) in [
            ("", 1, 1),
            ("curve a convex 1 1\n", 1, 1),
            ("surface 0\n", 1, 10),
            ("surface 0 x\n", 1, 11),
            ("surface 0 4\ncurve 1a convex 1 1\n", 2, 7),
            ("surface 0 4\ncurve a round 1 1\n", 2, 9),
            ("surface 0 4\ncurve a convex 1 1 7\n", 2, 20),
            ("surface 0 4\ncurve a convex 1 1\ncurve b from a twist +c(1,2)\n", 3, 16),
            ("surface 0 4\ncurve a convex 1 1\ncurve b from a apply c(1,2)\n", 3, 22),
            ("surface 0 4\nsurface 0 4\n", 2, 1),
            ("surface 0 4\nbraid x\n", 2, 1),
        ] {
            let e = error(text);
            assert!(e.is_syntax(), "{text:?}: {e}");
            assert_eq!((e.line, e.column), (line, column), "{text:?}: {e}");
        }
    }

    #[test]
    fn comments_and_header() {
        let text = "# first\n#\n#  indented\n\nsurface 0 3 # trailing\n# ignored\ncurve a convex 1 2\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.header(), &["first", "", " indented"]);
        let again = parse(&doc.serialize()).unwrap();
        assert_eq!(again.header(), doc.header());
        assert!(again.same_content(&doc));
    }

    #[test]
    fn round_trip_with_half_twists() {
        let text = "surface 0 5\ncurve a convex 1 2\ncurve c from a apply -h(2) +c(1,3)\npalf P a c\npalf E\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.serialize().replace("\n\n", "\n"), text);
        let again = parse(&doc.serialize()).unwrap();
        assert!(again.same_content(&doc));
        assert!(doc.palf("E").unwrap().cycles().is_empty());
        let c = doc.curve("c").unwrap();
        assert_eq!(c.homology_class(), vec![1, 0, 1, 0]);
    }
}
