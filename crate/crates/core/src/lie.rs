//! Non-associative words, the free associative algebra, and Lie polynomials
//! in Lyndon-Shirshov coordinates.
//!
//! A [`LiePoly`] stores coordinates in the NLSW basis keyed by the underlying
//! ALSW: the key `u` stands for the bracketing `[u]` from [`bracket`].
//! Arithmetic that is not linear goes through [`expand`] into an
//! [`AssocPoly`] and back through [`nlsw_decompose`].

use std::collections::btree_map::{self, Entry};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{alsw, compare_lex, lyndon_factorize, standard_split, Alphabet, Letter, Word};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// A fully bracketed non-associative word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum LieTree {
    Leaf(Letter),
    Node(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn leaf(l: Letter) -> Self {
        LieTree::Leaf(l)
    }

    pub fn pair(left: LieTree, right: LieTree) -> Self {
        LieTree::Node(Box::new(left), Box::new(right))
    }

    /// The underlying associative word (leaves left to right).
    pub fn word(&self) -> Word {
        let mut v = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut v);
        Word(v)
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            LieTree::Leaf(l) => out.push(*l),
            LieTree::Node(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Node(a, b) => a.degree() + b.degree(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
struct Terms(BTreeMap<Word, Coeff>);

impl Terms {
    fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &Terms, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.0 {
            self.add_term(w.clone(), d * c);
        }
    }

    fn scaled(&self, c: &Coeff) -> Terms {
        if c.is_zero() {
            return Terms::default();
        }
        Terms(self.0.iter().map(|(w, d)| (w.clone(), d * c)).collect())
    }

    fn leading(&self) -> Option<(&Word, &Coeff)> {
        self.0.last_key_value()
    }

    fn is_integral(&self) -> bool {
        self.0.values().all(|c| c.is_integer())
    }
}

macro_rules! linear_ops {
    ($t:ident) => {
        impl $t {
            pub fn zero() -> Self {
                Self(Terms::default())
            }

            pub fn is_zero(&self) -> bool {
                self.0 .0.is_empty()
            }

            pub fn len(&self) -> usize {
                self.0 .0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.is_zero()
            }

            /// Terms in ascending deg-lex order of their words.
            pub fn iter(&self) -> btree_map::Iter<'_, Word, Coeff> {
                self.0 .0.iter()
            }

            pub fn coefficient(&self, w: &Word) -> Coeff {
                self.0 .0.get(w).cloned().unwrap_or_else(Coeff::zero)
            }

            /// The deg-lex greatest word with its coefficient.
            pub fn leading(&self) -> Option<(&Word, &Coeff)> {
                self.0.leading()
            }

            pub fn scale(&self, c: &Coeff) -> Self {
                Self(self.0.scaled(c))
            }

            /// `self += c * other`.
            pub fn add_scaled(&mut self, other: &Self, c: &Coeff) {
                self.0.add_scaled(&other.0, c);
            }

            pub fn is_integral(&self) -> bool {
                self.0.is_integral()
            }

            /// Largest word length, 0 for the zero polynomial.
            pub fn degree(&self) -> usize {
                self.leading().map_or(0, |(w, _)| w.len())
            }
        }

        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out.add_scaled(rhs, &Coeff::one());
                out
            }
        }

        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }

        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                let mut out = self.clone();
                out.add_scaled(rhs, &-Coeff::one());
                out
            }
        }

        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }

        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&-Coeff::one())
            }
        }

        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }

        impl Mul<&$t> for &Coeff {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                rhs.scale(self)
            }
        }
    };
}

/// An element of the free associative algebra: word -> coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AssocPoly(Terms);

linear_ops!(AssocPoly);

impl AssocPoly {
    pub fn monomial(w: Word, c: Coeff) -> Self {
        let mut t = Terms::default();
        t.add_term(w, c);
        AssocPoly(t)
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, Coeff::one())
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        self.0.add_term(w, c);
    }

    /// Concatenation product.
    pub fn product(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = Terms::default();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                out.add_term(u.concat(v), a * b);
            }
        }
        AssocPoly(out)
    }

    /// `(ab) = ab - ba`.
    pub fn commutator(&self, other: &AssocPoly) -> AssocPoly {
        let mut out = Terms::default();
        for (u, a) in self.iter() {
            for (v, b) in other.iter() {
                let c = a * b;
                out.add_term(u.concat(v), c.clone());
                out.add_term(v.concat(u), -c);
            }
        }
        AssocPoly(out)
    }
}

impl fmt::Debug for AssocPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter().rev()).finish()
    }
}

/// A Lie polynomial in NLSW coordinates: ALSW -> coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LiePoly(Terms);

linear_ops!(LiePoly);

impl LiePoly {
    /// The basis element `[u]`.
    pub fn basis(u: Word) -> Result<Self> {
        Self::basis_scaled(u, Coeff::one())
    }

    pub fn basis_scaled(u: Word, c: Coeff) -> Result<Self> {
        if u.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !alsw(&u) {
            return Err(Error::NotAlsw(u));
        }
        let mut t = Terms::default();
        t.add_term(u, c);
        Ok(LiePoly(t))
    }

    pub fn letter(l: Letter) -> Self {
        let mut t = Terms::default();
        t.add_term(Word::letter(l), Coeff::one());
        LiePoly(t)
    }

    /// Adds `c [u]`; `u` must be an ALSW.
    pub fn add_basis(&mut self, u: Word, c: Coeff) -> Result<()> {
        if !alsw(&u) {
            return Err(Error::NotAlsw(u));
        }
        self.0.add_term(u, c);
        Ok(())
    }

    pub(crate) fn add_basis_unchecked(&mut self, u: Word, c: Coeff) {
        debug_assert!(alsw(&u));
        self.0.add_term(u, c);
    }

    /// Keys in deg-lex order.
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.0 .0.keys()
    }

    pub fn to_assoc(&self) -> AssocPoly {
        let mut out = AssocPoly::zero();
        for (u, c) in self.iter() {
            out.add_scaled(&expand_bracket(u), c);
        }
        out
    }
}

impl fmt::Debug for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter().rev()).finish()
    }
}

/// The canonical bracketing `[u]` of an ALSW.
pub fn bracket(u: &Word) -> Result<LieTree> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !alsw(u) {
        return Err(Error::NotAlsw(u.clone()));
    }
    Ok(bracket_alsw(u))
}

pub(crate) fn bracket_alsw(u: &Word) -> LieTree {
    if u.len() == 1 {
        return LieTree::Leaf(u.0[0]);
    }
    let (v, w) = standard_split(u).expect("caller checked the ALSW property");
    LieTree::pair(bracket_alsw(&v), bracket_alsw(&w))
}

pub fn is_nlsw(t: &LieTree) -> bool {
    match t {
        LieTree::Leaf(_) => true,
        LieTree::Node(v, w) => {
            if !alsw(&t.word()) || !is_nlsw(v) || !is_nlsw(w) {
                return false;
            }
            match v.as_ref() {
                LieTree::Leaf(_) => true,
                LieTree::Node(_, v2) => compare_lex(&v2.word(), &w.word()).is_le(),
            }
        }
    }
}

pub fn expand(t: &LieTree) -> AssocPoly {
    match t {
        LieTree::Leaf(l) => AssocPoly::word(Word::letter(*l)),
        LieTree::Node(a, b) => expand(a).commutator(&expand(b)),
    }
}

fn bracket_cache() -> &'static RwLock<HashMap<Word, Arc<AssocPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<Word, Arc<AssocPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `expand(bracket(u))`, memoized. `u` must be an ALSW.
pub(crate) fn expand_bracket(u: &Word) -> Arc<AssocPoly> {
    if let Some(p) = bracket_cache().read().unwrap().get(u) {
        return p.clone();
    }
    let p = if u.len() == 1 {
        AssocPoly::word(u.clone())
    } else {
        let (v, w) = standard_split(u).expect("ALSW");
        expand_bracket(&v).commutator(&expand_bracket(&w))
    };
    let p = Arc::new(p);
    bracket_cache()
        .write()
        .unwrap()
        .insert(u.clone(), p.clone());
    p
}

pub fn leading_word(p: &AssocPoly) -> Result<(Word, Coeff)> {
    p.leading()
        .map(|(w, c)| (w.clone(), c.clone()))
        .ok_or(Error::ZeroPolynomial)
}

/// Coordinates of a Lie element in the NLSW basis, by triangular extraction
/// of leading words.
pub fn nlsw_decompose(p: &AssocPoly) -> Result<LiePoly> {
    let mut rest = p.clone();
    let mut out = LiePoly::zero();
    let mut previous: Option<Word> = None;
    while let Some((u, c)) = rest.leading().map(|(u, c)| (u.clone(), c.clone())) {
        if let Some(prev) = &previous {
            if u >= *prev {
                return Err(Error::Internal(format!(
                    "extraction did not decrease the leading word at {u:?}"
                )));
            }
        }
        if !alsw(&u) {
            return Err(Error::NotLieElement(u));
        }
        rest.add_scaled(&expand_bracket(&u), &-&c);
        out.add_basis_unchecked(u.clone(), c);
        previous = Some(u);
    }
    Ok(out)
}

pub fn lie_bracket(p: &LiePoly, q: &LiePoly) -> Result<LiePoly> {
    nlsw_decompose(&p.to_assoc().commutator(&q.to_assoc()))
}

/// Rewrites `(x [u])`, with `x` above every letter of the ALSW `u`, as a
/// signed sum of trees `((x y_i) ...)` whose leaf words `x y_i u_i` are their
/// leading words. Follows the induction on the standard split of `u`.
pub fn left_pair_expansion(x: Letter, u: &Word) -> Result<Vec<(Coeff, LieTree)>> {
    if u.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !alsw(u) {
        return Err(Error::NotAlsw(u.clone()));
    }
    if u.iter().any(|l| l >= x) {
        return Err(Error::Precondition(
            "the left letter must exceed every letter of the word".into(),
        ));
    }
    Ok(left_pair_terms(x, u))
}

fn left_pair_terms(x: Letter, u: &Word) -> Vec<(Coeff, LieTree)> {
    if u.len() == 1 {
        return vec![(
            Coeff::one(),
            LieTree::pair(LieTree::Leaf(x), LieTree::Leaf(u.0[0])),
        )];
    }
    let (u1, u2) = standard_split(u).expect("ALSW");
    let b1 = bracket_alsw(&u1);
    let b2 = bracket_alsw(&u2);
    // (x([u1][u2])) = ((x[u1])[u2]) - ((x[u2])[u1])
    let mut out = Vec::new();
    for (c, t) in left_pair_terms(x, &u1) {
        out.push((c, LieTree::pair(t, b2.clone())));
    }
    for (c, t) in left_pair_terms(x, &u2) {
        out.push((-c, LieTree::pair(t, b1.clone())));
    }
    out
}

/// Rank over the rationals of a family of Lie polynomials.
pub fn rank(polys: &[LiePoly]) -> usize {
    let mut pivots: BTreeMap<Word, LiePoly> = BTreeMap::new();
    for p in polys {
        let mut v = p.clone();
        while let Some((u, c)) = v.leading().map(|(u, c)| (u.clone(), c.clone())) {
            match pivots.get(&u) {
                Some(pivot) => v.add_scaled(pivot, &-c),
                None => {
                    let inv = c.recip();
                    pivots.insert(u, v.scale(&inv));
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn render_terms<'a, I>(terms: I, mut unit: impl FnMut(&Word) -> String) -> String
where
    I: Iterator<Item = (&'a Word, &'a Coeff)>,
{
    let mut s = String::new();
    for (i, (w, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&abs.to_string());
            s.push(' ');
        }
        s.push_str(&unit(w));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl Alphabet {
    /// Fully parenthesized rendering, e.g. `((x y) z)`.
    pub fn render_tree(&self, t: &LieTree) -> String {
        match t {
            LieTree::Leaf(l) => self.symbol(*l).to_string(),
            LieTree::Node(a, b) => format!("({} {})", self.render_tree(a), self.render_tree(b)),
        }
    }

    /// Signed monomial sum, leading word first: `xyy - 2 yxy + yyx`.
    pub fn render_assoc(&self, p: &AssocPoly) -> String {
        render_terms(p.iter().rev(), |w| self.render_word(w))
    }

    /// Signed sum of compact basis elements, leading first: `[xyz] + [xzy]`.
    pub fn render_lie(&self, p: &LiePoly) -> String {
        render_terms(p.iter().rev(), |w| format!("[{}]", self.render_word(w)))
    }
}

/// The non-decreasing ALSW factors of a possibly empty word.
pub(crate) fn factors_or_empty(c: &Word) -> Vec<Word> {
    if c.is_empty() {
        Vec::new()
    } else {
        lyndon_factorize(c).expect("nonempty")
    }
}
