//! Text formats: Lie expressions, commutation-graph files and rule files.
//!
//! Expression grammar (whitespace insensitive):
//!
//! ```text
//! expr     := "0" | sign? term (("+" | "-") term)*
//! term     := (rational "*"?)? factor
//! factor   := symbol | "(" factor factor ")" | "[" word "]"
//! rational := integer ("/" positive-integer)?
//! ```
//!
//! `[u]` is shorthand for the canonical bracketing of the ALSW `u`, which
//! makes every rendered [`LiePoly`] parseable again.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{bracket_alsw, expand, nlsw_decompose, AssocPoly, Coeff, LiePoly, LieTree};
use crate::pc::CommGraph;
use crate::special::Rule;
use crate::words::{alsw, Alphabet, Letter, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Factor {
    Symbol(Letter),
    Pair(Box<Factor>, Box<Factor>),
    /// `[u]` for an ALSW `u`.
    Basis(Word),
}

impl Factor {
    pub fn to_tree(&self) -> LieTree {
        match self {
            Factor::Symbol(l) => LieTree::Leaf(*l),
            Factor::Pair(a, b) => LieTree::pair(a.to_tree(), b.to_tree()),
            Factor::Basis(w) => bracket_alsw(w),
        }
    }
}

/// A sum of rational multiples of bracketed monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExprAst {
    pub terms: Vec<(Coeff, Factor)>,
}

impl ExprAst {
    pub fn to_assoc(&self) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (c, f) in &self.terms {
            out.add_scaled(&expand(&f.to_tree()), c);
        }
        out
    }

    pub fn to_lie(&self) -> Result<LiePoly> {
        nlsw_decompose(&self.to_assoc())
    }

    /// The single tree when the expression is one monomial with coefficient 1.
    pub fn as_tree(&self) -> Option<LieTree> {
        match self.terms.as_slice() {
            [(c, f)] if c.is_one() => Some(f.to_tree()),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Sym(Letter),
    Num(BigInt),
    Slash,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
    LBrack,
    RBrack,
}

fn lex(text: &str, alphabet: &Alphabet) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let n: BigInt = text[i..end].parse().expect("digits");
            out.push((Tok::Num(n), i));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let mut pos = i;
            for l in alphabet.split_symbols(&text[i..end], i)? {
                out.push((Tok::Sym(l), pos));
                pos += alphabet.symbol(l).len();
            }
            continue;
        }
        let t = match c {
            '/' => Tok::Slash,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            other => return Err(Error::parse(format!("unexpected character `{other}`"), i)),
        };
        out.push((t, i));
        chars.next();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let at = self.offset();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(_) => Err(Error::parse(format!("expected {what}"), at)),
            None => Err(Error::parse(
                format!("expected {what}, found end of input"),
                at,
            )),
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut terms = Vec::new();
        let mut sign = Coeff::one();
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                sign = -sign;
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (c, f) = self.term()?;
            terms.push((sign * c, f));
            match self.peek() {
                Some(Tok::Plus) => sign = Coeff::one(),
                Some(Tok::Minus) => sign = -Coeff::one(),
                None => break,
                Some(_) => {
                    return Err(Error::parse(
                        "expected `+`, `-` or end of input",
                        self.offset(),
                    ))
                }
            }
            self.bump();
        }
        Ok(ExprAst { terms })
    }

    fn term(&mut self) -> Result<(Coeff, Factor)> {
        let mut c = Coeff::one();
        if let Some(Tok::Num(_)) = self.peek() {
            c = self.rational()?;
            if let Some(Tok::Star) = self.peek() {
                self.bump();
            }
        }
        Ok((c, self.factor()?))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let Some(Tok::Num(n)) = self.bump() else {
            unreachable!("checked by caller")
        };
        if let Some(Tok::Slash) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump() {
                Some(Tok::Num(d)) if !d.is_zero() => Ok(Coeff::new(n, d)),
                Some(Tok::Num(_)) => Err(Error::parse("zero denominator", at)),
                _ => Err(Error::parse("malformed rational: expected denominator", at)),
            }
        } else {
            Ok(Coeff::from_integer(n))
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Sym(l)) => Ok(Factor::Symbol(l)),
            Some(Tok::LParen) => {
                let a = self.factor()?;
                let b = self.factor()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Factor::Pair(Box::new(a), Box::new(b)))
            }
            Some(Tok::LBrack) => {
                let mut letters = Vec::new();
                while let Some(Tok::Sym(l)) = self.peek() {
                    letters.push(*l);
                    self.bump();
                }
                self.expect(Tok::RBrack, "`]`")?;
                let w = Word(letters);
                if !alsw(&w) {
                    return Err(Error::parse("bracketed word is not an ALSW", at));
                }
                Ok(Factor::Basis(w))
            }
            Some(_) => Err(Error::parse("expected a symbol, `(` or `[`", at)),
            None => Err(Error::parse("unexpected end of input", at)),
        }
    }
}

pub fn parse_expr(text: &str, alphabet: &Alphabet) -> Result<ExprAst> {
    let toks = lex(text, alphabet)?;
    if let [(Tok::Num(n), _)] = toks.as_slice() {
        if n.is_zero() {
            return Ok(ExprAst::default());
        }
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    p.expr()
}

/// Meaningful lines of a file: comments after `#` and blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Commutation-graph file: the alphabet declaration, then one edge per line.
///
/// Parse errors report the 1-based line number as their position.
pub fn parse_theta(text: &str) -> Result<CommGraph> {
    let mut lines = content_lines(text);
    let (_, decl) = lines
        .next()
        .ok_or_else(|| Error::parse("missing alphabet declaration", 0))?;
    let alphabet = Alphabet::parse(decl)?;
    let mut edges = Vec::new();
    for (n, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts.as_slice() else {
            return Err(Error::parse("an edge is two symbols", n));
        };
        let find = |s: &str| {
            alphabet.letter(s).ok_or_else(|| Error::UnknownSymbol {
                symbol: s.to_string(),
                position: n,
            })
        };
        edges.push((find(a)?, find(b)?));
    }
    CommGraph::new(alphabet, edges)
}

/// Rule file: the alphabet declaration, then one Lie expression per line.
/// Each expression is scaled to be monic.
pub fn parse_rules(text: &str) -> Result<(Alphabet, Vec<Rule>)> {
    let mut lines = content_lines(text);
    let (_, decl) = lines
        .next()
        .ok_or_else(|| Error::parse("missing alphabet declaration", 0))?;
    let alphabet = Alphabet::parse(decl)?;
    let mut rules = Vec::new();
    for (n, line) in lines {
        let body = parse_expr(line, &alphabet)
            .and_then(|e| e.to_lie())
            .map_err(|e| Error::parse(format!("line {n}: {e}"), n))?;
        if body.is_zero() {
            return Err(Error::parse(format!("line {n}: rule is zero"), n));
        }
        rules.push(Rule::monic(body)?);
    }
    Ok((alphabet, rules))
}
