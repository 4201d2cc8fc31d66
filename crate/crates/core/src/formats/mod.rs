//! Text formats: `flg` (flag graphs), `stg` (type graphs), `xstg` (extended
//! type graphs) and `map` (face walks). All are line-oriented ASCII with
//! `#` comments and 0-based indices.
//!
//! ```text
//! flg 1            stg 1            xstg 1           map 1
//! n 24             n 1              n 1              0 1 2
//! s0 1 0 ...       t0 0             t0 0             0 3 1
//! s1 ...           t1 0             t1 0             ...
//! s2 ...           t2 0             t2 0
//!                                   d 0
//! ```

pub mod builtin;
pub mod dot;
mod map;

pub use map::{FaceWalks, MapError};

use std::fmt::Write as _;

use thiserror::Error;

use crate::flagmap::{FlagError, FlagGraph};
use crate::typegraph::{ExtendedTypeGraph, TypeError, TypeGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A parsed file of any of the four kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Flg(FlagGraph),
    Stg(TypeGraph),
    Xstg(ExtendedTypeGraph),
    Map(FaceWalks),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Flg(_) => "flg",
            Document::Stg(_) => "stg",
            Document::Xstg(_) => "xstg",
            Document::Map(_) => "map",
        }
    }

    pub fn serialize(&self) -> String {
        match self {
            Document::Flg(g) => serialize_flg(g),
            Document::Stg(t) => serialize_stg(t),
            Document::Xstg(x) => serialize_xstg(x),
            Document::Map(w) => w.serialize(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments removed.
fn lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            if ch.is_ascii_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: s + 1,
                    });
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                tokens,
            });
        }
    }
    out
}

fn parse_index(line: usize, tok: Token<'_>) -> Result<usize, FormatError> {
    tok.text
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("expected a non-negative integer, got `{}`", tok.text)))
}

struct Reader<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Reader {
            lines: lines(text),
            pos: 0,
            last_line,
        }
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>, FormatError> {
        let line = self.lines.get(self.pos).ok_or_else(|| {
            syntax(self.last_line, 1, format!("unexpected end of input, expected {what}"))
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn header(&mut self, kind: &str) -> Result<(), FormatError> {
        let line = self.next("header")?;
        let t = &line.tokens;
        if t[0].text != kind {
            return Err(syntax(line.number, t[0].column, format!("expected `{kind} 1`")));
        }
        match t.get(1) {
            Some(v) if v.text == "1" && t.len() == 2 => Ok(()),
            Some(v) => Err(syntax(line.number, v.column, format!("unsupported version `{}`", v.text))),
            None => Err(syntax(line.number, t[0].column + kind.len(), "missing version")),
        }
    }

    fn count(&mut self) -> Result<usize, FormatError> {
        let line = self.next("`n <count>`")?;
        let t = &line.tokens;
        if t[0].text != "n" || t.len() != 2 {
            return Err(syntax(line.number, t[0].column, "expected `n <count>`"));
        }
        parse_index(line.number, t[1])
    }

    fn row(&mut self, name: &str, n: usize) -> Result<Vec<usize>, FormatError> {
        let line = self.next(&format!("`{name}` line"))?;
        let t = &line.tokens;
        if t[0].text != name {
            return Err(syntax(line.number, t[0].column, format!("expected `{name}`")));
        }
        if t.len() - 1 != n {
            let column = t.get(n + 1).map_or_else(
                || t.last().map_or(1, |l| l.column + l.text.len()),
                |x| x.column,
            );
            return Err(syntax(
                line.number,
                column,
                format!("`{name}` has {} entries, expected {n}", t.len() - 1),
            ));
        }
        t[1..].iter().map(|&tok| parse_index(line.number, tok)).collect()
    }

    fn finish(&self) -> Result<(), FormatError> {
        match self.lines.get(self.pos) {
            Some(line) => Err(syntax(line.number, line.tokens[0].column, "trailing content")),
            None => Ok(()),
        }
    }
}

fn write_row(out: &mut String, name: &str, row: &[usize]) {
    out.push_str(name);
    for x in row {
        write!(out, " {x}").unwrap();
    }
    out.push('\n');
}

pub fn parse_flg(text: &str) -> Result<FlagGraph, FormatError> {
    let mut r = Reader::new(text);
    r.header("flg")?;
    let n = r.count()?;
    let s0 = r.row("s0", n)?;
    let s1 = r.row("s1", n)?;
    let s2 = r.row("s2", n)?;
    r.finish()?;
    Ok(FlagGraph::new(s0, s1, s2)?)
}

pub fn serialize_flg(g: &FlagGraph) -> String {
    let mut out = format!("flg 1\nn {}\n", g.n());
    for i in 0..3 {
        write_row(&mut out, &format!("s{i}"), g.s(i));
    }
    out
}

fn parse_type_rows(r: &mut Reader<'_>) -> Result<[Vec<usize>; 3], FormatError> {
    let n = r.count()?;
    Ok([r.row("t0", n)?, r.row("t1", n)?, r.row("t2", n)?])
}

pub fn parse_stg(text: &str) -> Result<TypeGraph, FormatError> {
    let mut r = Reader::new(text);
    r.header("stg")?;
    let [t0, t1, t2] = parse_type_rows(&mut r)?;
    r.finish()?;
    Ok(TypeGraph::new(t0, t1, t2)?)
}

fn write_type_rows(out: &mut String, t: &TypeGraph) {
    writeln!(out, "n {}", t.k()).unwrap();
    for i in 0..3 {
        write_row(out, &format!("t{i}"), t.t(i));
    }
}

pub fn serialize_stg(t: &TypeGraph) -> String {
    let mut out = String::from("stg 1\n");
    write_type_rows(&mut out, t);
    out
}

pub fn parse_xstg(text: &str) -> Result<ExtendedTypeGraph, FormatError> {
    let mut r = Reader::new(text);
    r.header("xstg")?;
    let [t0, t1, t2] = parse_type_rows(&mut r)?;
    let d = r.row("d", t0.len())?;
    r.finish()?;
    Ok(ExtendedTypeGraph::new(TypeGraph::new(t0, t1, t2)?, d)?)
}

pub fn serialize_xstg(x: &ExtendedTypeGraph) -> String {
    let mut out = String::from("xstg 1\n");
    write_type_rows(&mut out, x.base());
    write_row(&mut out, "d", x.d());
    out
}

pub fn parse_map(text: &str) -> Result<FaceWalks, FormatError> {
    let mut r = Reader::new(text);
    r.header("map")?;
    let mut faces = Vec::new();
    while let Some(line) = r.lines.get(r.pos) {
        r.pos += 1;
        let face = line
            .tokens
            .iter()
            .map(|&tok| parse_index(line.number, tok))
            .collect::<Result<Vec<_>, _>>()?;
        faces.push(face);
    }
    if faces.is_empty() {
        return Err(syntax(r.last_line, 1, "map has no faces"));
    }
    Ok(FaceWalks::new(faces))
}

/// Parses any of the four formats, dispatching on the header keyword.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let first = lines(text).into_iter().next();
    let Some(first) = first else {
        return Err(syntax(1, 1, "empty input"));
    };
    match first.tokens[0].text {
        "flg" => parse_flg(text).map(Document::Flg),
        "stg" => parse_stg(text).map(Document::Stg),
        "xstg" => parse_xstg(text).map(Document::Xstg),
        "map" => parse_map(text).map(Document::Map),
        other => Err(syntax(
            first.number,
            first.tokens[0].column,
            format!("unknown format `{other}`, expected flg, stg, xstg or map"),
        )),
    }
}
