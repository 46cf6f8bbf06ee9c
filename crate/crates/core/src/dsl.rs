//! The text format shared with the command line.
//!
//! ```text
//! morphism := ("ifas" | "if") INT "->" INT "{" [item ("," item)*] "}"
//! item     := INT ":" "[" (INT SIGN)* "]"      fiber over a codomain element
//!           | INT "->" INT SIGN                 assignment (IF only)
//! span     := "span" "{" "left" ":" morphism "," "right" ":" morphism "}"
//! SIGN     := "+" | "-"                         label 1 / label t
//! ```
//!
//! Whitespace is insignificant. Fibers that are left out are empty. Printing is
//! canonical: every fiber `k:[]` is written out, IF morphisms are written as
//! assignment lists.

use std::fmt;

use thiserror::Error;

use crate::doublecat::Bimorphism;
use crate::morphism::{Entry, Fiber, IfMor, IfasMor, Morphism};
use crate::spans::{QFlavor, Span};
use crate::{Error, Label, Result};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at offset {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(usize),
    Arrow,
    Colon,
    Comma,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    Plus,
    Minus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::LBrack => f.write_str("`[`"),
            Tok::RBrack => f.write_str("`]`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b if b.is_ascii_whitespace() => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().map_err(|_| ParseError {
                    pos: start,
                    message: "integer too large".into(),
                })?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Word(text[start..i].to_string())));
                continue;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'-' => Tok::Minus,
            b'+' => Tok::Plus,
            b':' => Tok::Colon,
            b',' => Tok::Comma,
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            _ => {
                return Err(ParseError {
                    pos: start,
                    message: format!("unexpected character {:?}", text[start..].chars().next().unwrap()),
                })
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.next();
            Ok(())
        } else {
            self.fail(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn word(&mut self, want: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Word(w) if w == want => {
                self.next();
                Ok(())
            }
            t => self.fail(format!("expected `{want}`, found {t}")),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            &Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            t => self.fail(format!("expected an integer, found {t}")),
        }
    }

    /// A 1-based index in `1..=bound`, returned 0-based.
    fn index(&mut self, bound: usize, what: &str) -> Result<usize, ParseError> {
        let pos = self.pos();
        let n = self.int()?;
        if n == 0 || n > bound {
            return Err(ParseError {
                pos,
                message: format!("{what} {n} out of range 1..={bound}"),
            });
        }
        Ok(n - 1)
    }

    fn sign(&mut self) -> Result<Label, ParseError> {
        match self.peek() {
            Tok::Plus => {
                self.next();
                Ok(Label::One)
            }
            Tok::Minus => {
                self.next();
                Ok(Label::T)
            }
            t => self.fail(format!("expected `+` or `-`, found {t}")),
        }
    }

    fn morphism(&mut self) -> Result<Morphism> {
        let kind_pos = self.pos();
        let is_ifas = match self.next() {
            Tok::Word(w) if w == "ifas" => true,
            Tok::Word(w) if w == "if" => false,
            t => {
                return Err(ParseError {
                    pos: kind_pos,
                    message: format!("expected `ifas` or `if`, found {t}"),
                }
                .into())
            }
        };
        let dom = self.int()?;
        self.expect(Tok::Arrow)?;
        let cod = self.int()?;
        self.expect(Tok::LBrace)?;

        let mut fibers: Vec<Option<Fiber>> = vec![None; cod];
        let mut assign: Vec<Option<(usize, Label)>> = vec![None; dom];
        let mut form: Option<bool> = None; // Some(true) = fibers
        if *self.peek() != Tok::RBrace {
            loop {
                let item_pos = self.pos();
                let as_fiber = match self.peek2() {
                    Tok::Colon => true,
                    Tok::Arrow => false,
                    t => return Err(self.fail::<()>(format!("expected `:` or `->` after index, found {t}")).unwrap_err().into()),
                };
                if form.is_some_and(|f| f != as_fiber) {
                    return Err(ParseError {
                        pos: item_pos,
                        message: "cannot mix fibers and assignments".into(),
                    }
                    .into());
                }
                form = Some(as_fiber);
                if as_fiber {
                    let i = self.index(cod, "codomain element")?;
                    self.expect(Tok::Colon)?;
                    self.expect(Tok::LBrack)?;
                    let mut entries = Vec::new();
                    while *self.peek() != Tok::RBrack {
                        let x = self.index(dom, "domain element")?;
                        let a = self.sign()?;
                        entries.push(Entry::new(x, a));
                    }
                    self.expect(Tok::RBrack)?;
                    if fibers[i].replace(Fiber(entries)).is_some() {
                        return Err(ParseError {
                            pos: item_pos,
                            message: format!("fiber {} given twice", i + 1),
                        }
                        .into());
                    }
                } else {
                    if is_ifas {
                        return Err(ParseError {
                            pos: item_pos,
                            message: "ifas morphisms are written as fibers".into(),
                        }
                        .into());
                    }
                    let x = self.index(dom, "domain element")?;
                    self.expect(Tok::Arrow)?;
                    let y = self.index(cod, "codomain element")?;
                    let a = self.sign()?;
                    if assign[x].replace((y, a)).is_some() {
                        return Err(Error::InvalidMorphism(format!(
                            "element {} assigned twice",
                            x + 1
                        )));
                    }
                }
                if *self.peek() == Tok::Comma {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBrace)?;

        if form == Some(false) {
            let assign = assign
                .into_iter()
                .enumerate()
                .map(|(x, a)| {
                    a.ok_or_else(|| Error::InvalidMorphism(format!("element {} is not assigned", x + 1)))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(IfMor::new(cod, assign)?.into());
        }
        let f = IfasMor::new(dom, fibers.into_iter().map(Option::unwrap_or_default).collect())?;
        Ok(if is_ifas { f.into() } else { f.to_if().into() })
    }

    fn span(&mut self) -> Result<Span> {
        self.word("span")?;
        self.expect(Tok::LBrace)?;
        self.word("left")?;
        self.expect(Tok::Colon)?;
        let left = self.morphism()?;
        self.expect(Tok::Comma)?;
        self.word("right")?;
        self.expect(Tok::Colon)?;
        let right = self.morphism()?;
        self.expect(Tok::RBrace)?;
        let flavor = QFlavor::from_kinds(left.kind(), right.kind());
        Span::representative(flavor, left, right)
    }

    fn end(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(format!("trailing input: {}", self.peek()))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Morphism(Morphism),
    Span(Span),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Morphism(m) => m.fmt(f),
            Expr::Span(s) => s.fmt(f),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let e = if matches!(p.peek(), Tok::Word(w) if w == "span") {
        Expr::Span(p.span()?)
    } else {
        Expr::Morphism(p.morphism()?)
    };
    p.end()?;
    Ok(e)
}

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    match parse(text)? {
        Expr::Morphism(m) => Ok(m),
        Expr::Span(_) => Err(ParseError {
            pos: 0,
            message: "expected a morphism, found a span".into(),
        }
        .into()),
    }
}

/// Reads a span representative (not canonicalised); the flavor follows from
/// the leg kinds.
pub fn parse_span(text: &str) -> Result<Span> {
    match parse(text)? {
        Expr::Span(s) => Ok(s),
        Expr::Morphism(_) => Err(ParseError {
            pos: 0,
            message: "expected a span, found a morphism".into(),
        }
        .into()),
    }
}

fn sign(a: Label) -> char {
    match a {
        Label::One => '+',
        Label::T => '-',
    }
}

impl fmt::Display for IfasMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ifas {} -> {} {{", self.dom(), self.cod())?;
        if self.cod() == 0 {
            return f.write_str(" }");
        }
        for (i, fib) in self.fibers().iter().enumerate() {
            write!(f, "{}{}:[", if i == 0 { " " } else { ", " }, i + 1)?;
            for (k, e) in fib.entries().iter().enumerate() {
                write!(f, "{}{}{}", if k == 0 { "" } else { " " }, e.elem + 1, sign(e.label))?;
            }
            f.write_str("]")?;
        }
        f.write_str(" }")
    }
}

impl fmt::Display for IfMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "if {} -> {} {{", self.dom(), self.cod())?;
        if self.dom() == 0 {
            return f.write_str(" }");
        }
        for (x, &(y, a)) in self.assignments().iter().enumerate() {
            write!(f, "{}{}->{}{}", if x == 0 { " " } else { ", " }, x + 1, y + 1, sign(a))?;
        }
        f.write_str(" }")
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Morphism::Ifas(m) => m.fmt(f),
            Morphism::If(m) => m.fmt(f),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span {{ left: {}, right: {} }}", self.left(), self.right())
    }
}

impl fmt::Display for Bimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "flavor: {}", self.flavor)?;
        writeln!(f, "top: {}", self.top)?;
        writeln!(f, "left: {}", self.left)?;
        writeln!(f, "right: {}", self.right)?;
        write!(f, "bottom: {}", self.bottom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::{mult, unit};
    use Label::{One, T};

    #[test]
    fn worked_example() {
        let text = "ifas 5 -> 4 { 1:[2+], 2:[1-], 3:[4- 5+], 4:[3-] }";
        let f = parse_morphism(text).unwrap();
        let want = IfasMor::from_lists(
            5,
            &[&[(1, One)], &[(0, T)], &[(3, T), (4, One)], &[(2, T)]],
        )
        .unwrap();
        assert_eq!(f, want.into());
        assert_eq!(f.to_string(), text);
    }

    #[test]
    fn fundamental_morphisms() {
        assert_eq!(parse_morphism("ifas 2 -> 1 { 1:[1+ 2+] }").unwrap(), mult().into());
        assert_eq!(parse_morphism("ifas 0->1{}").unwrap(), unit().into());
        assert_eq!(unit().to_string(), "ifas 0 -> 1 { 1:[] }");
        assert_eq!(IfasMor::identity(0).to_string(), "ifas 0 -> 0 { }");
        assert_eq!(
            parse_morphism("ifas 1->1{1:[1-]}").unwrap().to_string(),
            "ifas 1 -> 1 { 1:[1-] }"
        );
    }

    #[test]
    fn omitted_fibers_printed() {
        let f = parse_morphism("ifas 1 -> 3 { 2:[1+] }").unwrap();
        assert_eq!(f.to_string(), "ifas 1 -> 3 { 1:[], 2:[1+], 3:[] }");
    }

    #[test]
    fn if_forms() {
        let a = parse_morphism("if 2 -> 1 { 1->1+, 2->1- }").unwrap();
        let b = parse_morphism("if 2 -> 1 { 1:[2- 1+] }").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "if 2 -> 1 { 1->1+, 2->1- }");
        assert_eq!(IfMor::identity(0).to_string(), "if 0 -> 0 { }");
    }

    #[test]
    fn semantic_errors() {
        match parse_morphism("ifas 1 -> 1 { 1:[1+ 1-] }") {
            Err(Error::InvalidMorphism(msg)) => assert!(msg.contains("element 1 appears twice")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_morphism("if 2 -> 1 { 1->1+ }"),
            Err(Error::InvalidMorphism(_))
        ));
        assert!(matches!(
            parse_morphism("ifas 2 -> 1 { 1:[1+] }"),
            Err(Error::InvalidMorphism(_))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let cases = [
            ("ifas 1 -> 1 { 1:[2+] }", 17),
            ("ifas 1 -> 1 { 1:[1*] }", 18),
            ("ifas 1 1", 7),
            ("ifas 1 -> 1 { 1:[1+] } x", 23),
            ("ifas 2 -> 1 { 1->1+ }", 14),
            ("set 1 -> 1 {}", 0),
        ];
        for (text, pos) in cases {
            match parse(text) {
                Err(Error::Parse(e)) => assert_eq!(e.pos, pos, "{text}: {e}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn spans() {
        let text = "span { left: ifas 2 -> 1 { 1:[1+ 2+] }, right: if 2 -> 2 { 1->2-, 2->1+ } }";
        let s = parse_span(text).unwrap();
        assert_eq!(s.flavor(), QFlavor::Qv);
        assert_eq!((s.src(), s.apex(), s.tgt()), (1, 2, 2));
        assert_eq!(s.to_string(), text);
        assert!(parse_span("span { left: ifas 1 -> 1 { 1:[1+] }, right: ifas 2 -> 1 { 1:[1+ 2+] } }").is_err());
    }
}
