//! Letters, words and the associative Lyndon-Shirshov word calculus.
//!
//! Letters are interned ranks: a larger rank is a greater letter. An
//! [`Alphabet`] binds ranks to symbols and is only needed for parsing and
//! rendering; every word operation works on ranks directly.
//!
//! Two orders live here. The lexicographic order compares letter by letter
//! and treats a proper prefix as *greater* than its extensions, so `x > xy`.
//! The deg-lex order compares lengths first and falls back to the
//! lexicographic order; it is the [`Ord`] of [`Word`].
//!
//! A word `u` is an ALSW when `vw > wv` for every split `u = vw` into
//! nonempty parts, i.e. `u` is strictly greater than each of its proper
//! rotations.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(pub u16);

impl Letter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

/// A finite totally ordered set of named generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    /// Symbols indexed by rank, i.e. in ascending order.
    symbols: Vec<String>,
    lookup: HashMap<String, Letter>,
}

fn valid_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Builds an alphabet from symbols listed in descending order.
    pub fn from_descending<S: AsRef<str>>(symbols: &[S]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > u16::MAX as usize {
            return Err(Error::Precondition("too many letters".into()));
        }
        let mut ascending: Vec<String> = symbols.iter().map(|s| s.as_ref().to_string()).collect();
        ascending.reverse();
        let mut lookup = HashMap::new();
        for (rank, sym) in ascending.iter().enumerate() {
            if !valid_symbol(sym) {
                return Err(Error::InvalidSymbol(sym.clone()));
            }
            if lookup.insert(sym.clone(), Letter(rank as u16)).is_some() {
                return Err(Error::DuplicateSymbol(sym.clone()));
            }
        }
        Ok(Alphabet {
            symbols: ascending,
            lookup,
        })
    }

    /// Parses a declaration such as `"x > y > z"`.
    pub fn parse(decl: &str) -> Result<Self> {
        let parts: Vec<&str> = decl.split('>').map(str::trim).collect();
        if parts.len() == 1 && parts[0].is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Self::from_descending(&parts)
    }

    /// The standard test alphabets: `x > y`, `x > y > z`, `x > y > z > w`, and
    /// numbered symbols beyond that.
    pub fn standard(size: usize) -> Self {
        let names = ["x", "y", "z", "w", "v", "u", "t", "s"];
        let symbols: Vec<String> = (0..size)
            .map(|i| match names.get(i) {
                Some(n) => n.to_string(),
                None => format!("a{i}"),
            })
            .collect();
        Self::from_descending(&symbols).expect("standard alphabet is well formed")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Letters in ascending order.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.symbols.len() as u16).map(Letter)
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        self.lookup.get(symbol).copied()
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter.rank()]
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.rank() < self.symbols.len()
    }

    pub fn check_letter(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: letter.0,
                size: self.len(),
            })
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.iter().try_for_each(|l| self.check_letter(l))
    }

    fn single_char_symbols(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// The declaration string, e.g. `x > y > z`.
    pub fn declaration(&self) -> String {
        let mut desc: Vec<&str> = self.symbols.iter().map(String::as_str).collect();
        desc.reverse();
        desc.join(" > ")
    }

    /// Splits a run of identifier characters into symbols, longest match first.
    pub(crate) fn split_symbols(&self, run: &str, offset: usize) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        let mut rest = run;
        let mut pos = offset;
        while !rest.is_empty() {
            let found = rest
                .char_indices()
                .map(|(i, c)| i + c.len_utf8())
                .rev()
                .find_map(|end| self.letter(&rest[..end]).map(|l| (l, end)));
            match found {
                Some((l, end)) => {
                    out.push(l);
                    rest = &rest[end..];
                    pos += end;
                }
                None => {
                    let sym: String = rest
                        .chars()
                        .take_while(|c| c.is_alphanumeric() || *c == '_')
                        .collect();
                    return Err(Error::UnknownSymbol {
                        symbol: sym,
                        position: pos,
                    });
                }
            }
        }
        Ok(out)
    }

    /// Parses juxtaposed symbols, optionally separated by whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for chunk in text.split(char::is_whitespace) {
            if !chunk.is_empty() {
                letters.extend(self.split_symbols(chunk, offset)?);
            }
            offset += chunk.len() + 1;
        }
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    pub fn render_word(&self, word: &Word) -> String {
        let sep = if self.single_char_symbols() { "" } else { " " };
        word.iter()
            .map(|l| self.symbol(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Lexicographic comparison that rejects letters outside this alphabet.
    pub fn compare_lex(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(compare_lex(u, v))
    }

    pub fn compare_deglex(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(compare_deglex(u, v))
    }
}

/// A finite sequence of letters. Ordered deg-lex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", l.0)?;
        }
        write!(f, ")")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_deglex(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Builds a word from raw ranks.
    pub fn from_ranks(ranks: &[u16]) -> Self {
        ranks.iter().map(|&r| Letter(r)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn concat3(a: &Word, b: &Word, c: &Word) -> Word {
        let mut v = Vec::with_capacity(a.len() + b.len() + c.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&b.0);
        v.extend_from_slice(&c.0);
        Word(v)
    }

    /// The rotation starting at position `i`.
    pub fn rotation(&self, i: usize) -> Word {
        let mut v = self.0[i..].to_vec();
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    /// `supp(u)`: the set of letters occurring in `u`.
    pub fn supp(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    /// `|u|_x`: how many times `x` occurs.
    pub fn partial_degree(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&l| l == x).count()
    }

    /// `|u|_X`, indexed by letter rank. `size` must cover every letter.
    pub fn multidegree(&self, size: usize) -> Vec<usize> {
        let mut m = vec![0; size];
        for l in &self.0 {
            m[l.rank()] += 1;
        }
        m
    }

    pub fn is_subword_at(&self, sub: &Word, pos: usize) -> bool {
        pos + sub.len() <= self.len() && self.0[pos..pos + sub.len()] == sub.0[..]
    }

    /// Every start position of `sub` as a contiguous factor.
    pub fn occurrences(&self, sub: &Word) -> Vec<usize> {
        if sub.is_empty() || sub.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - sub.len())
            .filter(|&p| self.is_subword_at(sub, p))
            .collect()
    }

    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.is_empty() || sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&p| self.is_subword_at(sub, p))
    }
}

/// Letterwise comparison; a proper prefix is greater than its extensions.
pub fn compare_lex(u: &Word, v: &Word) -> Ordering {
    for (a, b) in u.0.iter().zip(v.0.iter()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    v.len().cmp(&u.len())
}

pub fn compare_deglex(u: &Word, v: &Word) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| compare_lex(u, v))
}

fn is_alsw_letters(u: &[Letter]) -> bool {
    let n = u.len();
    // u > rotation(i) for every 0 < i < n
    (1..n).all(|i| {
        let rotated = u[i..].iter().chain(u[..i].iter());
        for (a, b) in u.iter().zip(rotated) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Greater => return true,
                Ordering::Less => return false,
            }
        }
        false
    })
}

pub fn is_alsw(u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_alsw_letters(&u.0))
}

/// Shorthand for callers that already know `u` is nonempty.
pub(crate) fn alsw(u: &Word) -> bool {
    !u.is_empty() && is_alsw_letters(&u.0)
}

/// The unique factorization `u = u1 u2 ... uk` into ALSWs with
/// `u1 <= u2 <= ... <= uk`.
///
/// Duval's algorithm run against the reversed letter order.
pub fn lyndon_factorize(u: &Word) -> Result<Vec<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    let s = &u.0;
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] >= s[j] {
            if s[k] > s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            factors.push(Word(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    Ok(factors)
}

/// Splits an ALSW `u = vw` where `w` is its longest proper ALSW suffix.
pub fn standard_split(u: &Word) -> Result<(Word, Word)> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if u.len() == 1 {
        return Err(Error::SingleLetter);
    }
    if !alsw(u) {
        return Err(Error::NotAlsw(u.clone()));
    }
    let i = (1..u.len())
        .find(|&i| is_alsw_letters(&u.0[i..]))
        .expect("the last letter is always an ALSW suffix");
    Ok((u.prefix(i), u.suffix_from(i)))
}

/// All ALSWs of length at most `max_deg`, sorted deg-lex.
pub fn enumerate_alsw(alphabet: &Alphabet, max_deg: usize) -> Vec<Word> {
    let mut words = generate_alsw(alphabet.len(), max_deg);
    words.sort();
    words
}

/// Fredricksen-Kessler-Maiorana generation of Lyndon words up to length
/// `max_deg`, with symbol `s` standing for the letter of rank `k - 1 - s`.
pub(crate) fn generate_alsw(k: usize, max_deg: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || max_deg == 0 {
        return out;
    }
    let top = k as u16 - 1;
    let mut w: Vec<u16> = vec![0];
    loop {
        out.push(w.iter().map(|&s| Letter(top - s)).collect());
        let len = w.len();
        while w.len() < max_deg {
            let c = w[w.len() - len];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Brute-force enumeration through [`is_alsw`]; used to cross-check the
/// generator.
pub fn enumerate_alsw_brute(alphabet: &Alphabet, max_deg: usize) -> Vec<Word> {
    let k = alphabet.len() as u16;
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_deg {
        let mut next = Vec::with_capacity(layer.len() * k as usize);
        for w in &layer {
            for l in 0..k {
                let mut v = w.clone();
                v.push(Letter(l));
                if is_alsw_letters(&v) {
                    out.push(Word(v.clone()));
                }
                next.push(v);
            }
        }
        layer = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Alphabet {
        Alphabet::parse("x > y").unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn alphabet_declaration() {
        let a = Alphabet::parse("x > y > z").unwrap();
        assert_eq!(a.len(), 3);
        assert!(a.letter("x").unwrap() > a.letter("y").unwrap());
        assert!(a.letter("y").unwrap() > a.letter("z").unwrap());
        assert_eq!(a.declaration(), "x > y > z");
        assert_eq!(Alphabet::parse(""), Err(Error::EmptyAlphabet));
        assert_eq!(
            Alphabet::parse("x > y > x"),
            Err(Error::DuplicateSymbol("x".into()))
        );
        assert!(matches!(
            Alphabet::parse("x > > y"),
            Err(Error::InvalidSymbol(_))
        ));
    }

    #[test]
    fn multichar_symbols_render_spaced() {
        let a = Alphabet::parse("x1 > x > y").unwrap();
        let u = a.parse_word("x1 x y").unwrap();
        assert_eq!(u.len(), 3);
        assert_eq!(a.render_word(&u), "x1 x y");
        // longest match first
        assert_eq!(a.parse_word("x1xy").unwrap(), u);
    }

    #[test]
    fn unknown_symbol_position() {
        let a = xy();
        assert_eq!(
            a.parse_word("xy q"),
            Err(Error::UnknownSymbol {
                symbol: "q".into(),
                position: 3
            })
        );
    }

    #[test]
    fn lex_examples() {
        let a = xy();
        assert_eq!(compare_lex(&w(&a, "xy"), &w(&a, "yx")), Ordering::Greater);
        assert_eq!(compare_lex(&w(&a, "x"), &w(&a, "x")), Ordering::Equal);
        assert_eq!(compare_lex(&w(&a, "xy"), &w(&a, "x")), Ordering::Less);
    }

    #[test]
    fn deglex_examples() {
        let a = xy();
        assert_eq!(compare_deglex(&w(&a, "y"), &w(&a, "xy")), Ordering::Less);
        assert_eq!(
            compare_deglex(&w(&a, "xxy"), &w(&a, "xyx")),
            Ordering::Greater
        );
        assert_eq!(
            compare_deglex(&w(&a, "xy"), &w(&a, "yx")),
            Ordering::Greater
        );
    }

    #[test]
    fn mixed_alphabets_rejected() {
        let a = xy();
        let foreign = Word::from_ranks(&[5]);
        assert!(matches!(
            a.compare_lex(&w(&a, "x"), &foreign),
            Err(Error::LetterOutOfRange { letter: 5, size: 2 })
        ));
        assert!(a.compare_deglex(&w(&a, "x"), &foreign).is_err());
    }

    #[test]
    fn alsw_examples() {
        let a = xy();
        assert!(is_alsw(&w(&a, "x")).unwrap());
        assert!(!is_alsw(&w(&a, "yx")).unwrap());
        assert_eq!(is_alsw(&Word::empty()), Err(Error::EmptyWord));
        // deg-lex ascending: xyy < xxy because y < x at position 1
        let short: Vec<String> = enumerate_alsw(&a, 3)
            .iter()
            .map(|u| a.render_word(u))
            .collect();
        assert_eq!(short, ["y", "x", "xy", "xyy", "xxy"]);
    }

    #[test]
    fn factorize_examples() {
        let a = xy();
        let f = |s| {
            lyndon_factorize(&w(&a, s))
                .unwrap()
                .iter()
                .map(|u| a.render_word(u))
                .collect::<Vec<_>>()
        };
        assert_eq!(f("x"), ["x"]);
        assert_eq!(f("yxxy"), ["y", "xxy"]);
        assert_eq!(f("xyx"), ["xy", "x"]);
        assert_eq!(lyndon_factorize(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn split_examples() {
        let a = xy();
        assert_eq!(
            standard_split(&w(&a, "xyy")).unwrap(),
            (w(&a, "xy"), w(&a, "y"))
        );
        assert_eq!(
            standard_split(&w(&a, "xxy")).unwrap(),
            (w(&a, "x"), w(&a, "xy"))
        );
        assert_eq!(standard_split(&w(&a, "x")), Err(Error::SingleLetter));
        assert!(matches!(
            standard_split(&w(&a, "yx")),
            Err(Error::NotAlsw(_))
        ));
    }

    #[test]
    fn enumeration_examples() {
        let single = Alphabet::parse("x").unwrap();
        assert_eq!(enumerate_alsw(&single, 5).len(), 1);
        let a3 = Alphabet::parse("x > y > z").unwrap();
        let deg3 = enumerate_alsw(&a3, 3)
            .iter()
            .filter(|u| u.len() == 3)
            .count();
        assert_eq!(deg3, 8);
    }

    #[test]
    fn generator_matches_brute_force() {
        for k in 1..=3 {
            let a = Alphabet::standard(k);
            assert_eq!(
                enumerate_alsw(&a, 8),
                enumerate_alsw_brute(&a, 8),
                "k = {k}"
            );
        }
    }

    #[test]
    fn word_statistics() {
        let a = Alphabet::parse("x > y > z").unwrap();
        let u = w(&a, "xzxy");
        let x = a.letter("x").unwrap();
        assert_eq!(u.partial_degree(x), 2);
        assert_eq!(u.supp().len(), 3);
        // ranks: z=0, y=1, x=2
        assert_eq!(u.multidegree(3), vec![1, 1, 2]);
        assert_eq!(u.occurrences(&w(&a, "x")), vec![0, 2]);
    }
}
