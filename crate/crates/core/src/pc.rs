//! Free partially commutative Lie algebras `Lie(X|θ)`.
//!
//! `θ` is a symmetric irreflexive relation on the generators. Write
//! `a ⊳ b` when `a > b` and `{a, b} ∈ θ`. The relation set is
//! `S_θ = { [x u y] : x ⊳ y, y ⊳ every letter of u }`; it is infinite, so
//! irreducibility is tested with the pattern predicate directly and
//! reduction builds only the rules whose leading words actually occur.

use std::borrow::Cow;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gsb::{reduce, RuleSource};
use crate::lie::{bracket_alsw, expand, nlsw_decompose, LiePoly, LieTree};
use crate::special::{normal_s_word, Rule};
use crate::words::{enumerate_alsw, Alphabet, Letter, Word};

/// The commutation graph `θ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommGraph {
    alphabet: Alphabet,
    adjacent: Vec<Vec<bool>>,
}

impl CommGraph {
    pub fn new(
        alphabet: Alphabet,
        edges: impl IntoIterator<Item = (Letter, Letter)>,
    ) -> Result<Self> {
        let n = alphabet.len();
        let mut adjacent = vec![vec![false; n]; n];
        for (a, b) in edges {
            alphabet.check_letter(a)?;
            alphabet.check_letter(b)?;
            if a == b {
                return Err(Error::SelfLoop(alphabet.symbol(a).to_string()));
            }
            adjacent[a.rank()][b.rank()] = true;
            adjacent[b.rank()][a.rank()] = true;
        }
        Ok(CommGraph { alphabet, adjacent })
    }

    /// Builds a graph from symbol pairs.
    pub fn from_symbols(alphabet: Alphabet, edges: &[(&str, &str)]) -> Result<Self> {
        let mut letters = Vec::with_capacity(edges.len());
        for (i, (a, b)) in edges.iter().enumerate() {
            let find = |s: &str| {
                alphabet.letter(s).ok_or_else(|| Error::UnknownSymbol {
                    symbol: s.to_string(),
                    position: i,
                })
            };
            letters.push((find(a)?, find(b)?));
        }
        Self::new(alphabet, letters)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self::new(alphabet, []).expect("no edges")
    }

    pub fn complete(alphabet: Alphabet) -> Self {
        let n = alphabet.len() as u16;
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (0..a).map(move |b| (Letter(a), Letter(b))))
            .collect();
        Self::new(alphabet, edges).expect("valid edges")
    }

    /// Every graph on `alphabet`, one per subset of unordered pairs.
    pub fn all(alphabet: &Alphabet) -> Vec<CommGraph> {
        let pairs = Self::pairs(alphabet);
        (0u64..1 << pairs.len())
            .map(|mask| {
                let chosen = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| *p);
                Self::new(alphabet.clone(), chosen).expect("valid edges")
            })
            .collect()
    }

    /// Graph whose edges are picked by the bits of `mask`, in the order of
    /// unordered pairs `(a, b)` with `a > b`, `a` ascending.
    pub fn from_mask(alphabet: &Alphabet, mask: u64) -> Self {
        let chosen: Vec<_> = Self::pairs(alphabet)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        Self::new(alphabet.clone(), chosen).expect("valid edges")
    }

    fn pairs(alphabet: &Alphabet) -> Vec<(Letter, Letter)> {
        let n = alphabet.len() as u16;
        (0..n)
            .flat_map(|a| (0..a).map(move |b| (Letter(a), Letter(b))))
            .collect()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        self.adjacent[a.rank()][b.rank()]
    }

    /// Edges as `(greater, smaller)`, sorted.
    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        Self::pairs(&self.alphabet)
            .into_iter()
            .filter(|&(a, b)| self.commute(a, b))
            .collect()
    }

    /// `a ⊳ b`.
    pub fn rhd(&self, a: Letter, b: Letter) -> Result<bool> {
        self.alphabet.check_letter(a)?;
        self.alphabet.check_letter(b)?;
        Ok(self.above(a, b))
    }

    fn above(&self, a: Letter, b: Letter) -> bool {
        a > b && self.adjacent[a.rank()][b.rank()]
    }

    /// Does `u[start..=end]` have the shape `x v y` with `x ⊳ y ⊳ supp(v)`?
    fn is_relation_span(&self, u: &[Letter], start: usize, end: usize) -> bool {
        let (x, y) = (u[start], u[end]);
        self.above(x, y) && u[start + 1..end].iter().all(|&l| self.above(y, l))
    }

    /// Whether `w` itself is a leading word of `S_θ`.
    pub fn is_relation_word(&self, w: &Word) -> bool {
        w.len() >= 2 && self.is_relation_span(w.letters(), 0, w.len() - 1)
    }

    /// All `(start, len)` such that the factor of `u` there is a leading word
    /// of `S_θ`.
    pub fn relation_factors(&self, u: &Word) -> Vec<(usize, usize)> {
        let s = u.letters();
        let mut out = Vec::new();
        for start in 0..s.len() {
            for end in start + 1..s.len() {
                if self.is_relation_span(s, start, end) {
                    out.push((start, end - start + 1));
                }
            }
        }
        out
    }

    /// Irr membership: `u` has no factor `x v y` with `x ⊳ y ⊳ supp(v)`.
    pub fn is_irreducible(&self, u: &Word) -> bool {
        let s = u.letters();
        (0..s.len())
            .all(|start| (start + 1..s.len()).all(|end| !self.is_relation_span(s, start, end)))
    }

    /// Cliques of `θ`, including the empty one, as sorted letter sets.
    pub fn cliques(&self) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        let n = self.alphabet.len();
        let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
        while let Some(c) = stack.pop() {
            let from = c.last().map_or(0, |l| l.rank() + 1);
            for r in from..n {
                let l = Letter(r as u16);
                if c.iter().all(|&m| self.commute(m, l)) {
                    let mut next = c.clone();
                    next.push(l);
                    out.push(next.clone());
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }
}

/// `S_θ` truncated to leading words of length at most `max_deg`, in deg-lex
/// order of leading words.
pub fn generate_relations(g: &CommGraph, max_deg: usize) -> Vec<Rule> {
    let mut words = Vec::new();
    if max_deg < 2 {
        return Vec::new();
    }
    for y in g.alphabet.letters() {
        let below: Vec<Letter> = g.alphabet.letters().filter(|&w| g.above(y, w)).collect();
        let tops: Vec<Letter> = g.alphabet.letters().filter(|&x| g.above(x, y)).collect();
        if tops.is_empty() {
            continue;
        }
        let mut middles: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..max_deg - 2 {
            let mut next = Vec::new();
            for m in &layer {
                for &l in &below {
                    let mut v = m.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            middles.extend(next.iter().cloned());
            layer = next;
        }
        for &x in &tops {
            for m in &middles {
                let mut v = Vec::with_capacity(m.len() + 2);
                v.push(x);
                v.extend_from_slice(m);
                v.push(y);
                words.push(Word(v));
            }
        }
    }
    words.sort();
    words
        .into_iter()
        .map(|w| Rule::from_alsw(w).expect("x u y with x maximal is an ALSW"))
        .collect()
}

/// `S_θ` as a lazily evaluated rule source.
///
/// Picks the deg-lex least matching leading word, then its leftmost
/// occurrence, which is what the materialized list from
/// [`generate_relations`] would pick.
#[derive(Clone, Copy, Debug)]
pub struct ThetaRules<'a>(pub &'a CommGraph);

impl RuleSource for ThetaRules<'_> {
    fn find_rule(&self, u: &Word) -> Option<(Cow<'_, Rule>, usize)> {
        self.0
            .relation_factors(u)
            .into_iter()
            .map(|(start, len)| (u.slice(start, start + len), start))
            .min_by(|(a, p), (b, q)| a.cmp(b).then(p.cmp(q)))
            .map(|(w, start)| {
                let rule = Rule::from_alsw(w).expect("relation words are ALSWs");
                (Cow::Owned(rule), start)
            })
    }
}

/// Irr(S_θ) up to a degree, graded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedBasis {
    pub max_deg: usize,
    /// `words[d - 1]` holds the degree-`d` words, deg-lex ascending.
    pub words: Vec<Vec<Word>>,
    /// Number of basis elements per multidegree (indexed by letter rank).
    pub multidegrees: BTreeMap<Vec<usize>, usize>,
}

impl GradedBasis {
    pub fn dimensions(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn trees(&self, degree: usize) -> Vec<LieTree> {
        self.words[degree - 1].iter().map(bracket_alsw).collect()
    }

    pub fn all_words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter().flatten()
    }
}

pub fn irr_basis(g: &CommGraph, max_deg: usize) -> GradedBasis {
    let n = g.alphabet.len();
    let mut words = vec![Vec::new(); max_deg];
    let mut multidegrees = BTreeMap::new();
    for u in enumerate_alsw(&g.alphabet, max_deg) {
        if g.is_irreducible(&u) {
            *multidegrees.entry(u.multidegree(n)).or_insert(0) += 1;
            words[u.len() - 1].push(u);
        }
    }
    GradedBasis {
        max_deg,
        words,
        multidegrees,
    }
}

pub fn graded_dimensions(g: &CommGraph, max_deg: usize) -> Vec<usize> {
    irr_basis(g, max_deg).dimensions()
}

/// The normal form of a Lie polynomial in `Lie(X|θ)`.
pub fn pc_normal_form(p: &LiePoly, g: &CommGraph) -> Result<LiePoly> {
    Ok(reduce(p, &ThetaRules(g), None)?.remainder)
}

pub fn pc_normal_form_tree(t: &LieTree, g: &CommGraph) -> Result<LiePoly> {
    pc_normal_form(&nlsw_decompose(&expand(t))?, g)
}

/// Coefficients `1 / Σ_C (-1)^|C| t^|C|` up to `t^max_deg`: the Hilbert
/// series of the partially commutative associative algebra.
pub fn clique_hilbert_series(g: &CommGraph, max_deg: usize) -> Vec<BigInt> {
    let p = clique_polynomial(g);
    let mut h = vec![BigInt::zero(); max_deg + 1];
    h[0] = BigInt::from(1);
    for n in 1..=max_deg {
        let mut acc = BigInt::zero();
        for (k, pk) in p.iter().enumerate().skip(1).take_while(|(k, _)| *k <= n) {
            acc -= pk * &h[n - k];
        }
        h[n] = acc;
    }
    h
}

fn clique_polynomial(g: &CommGraph) -> Vec<BigInt> {
    let cliques = g.cliques();
    let top = cliques.iter().map(Vec::len).max().unwrap_or(0);
    let mut p = vec![BigInt::zero(); top + 1];
    for c in cliques {
        if c.len() % 2 == 0 {
            p[c.len()] += 1;
        } else {
            p[c.len()] -= 1;
        }
    }
    p
}

/// Graded dimensions of `Lie(X|θ)` from the clique polynomial alone.
///
/// With `H = 1/P` and `H = Π (1 - t^n)^(-d_n)`, the series
/// `-t P'/P = t H'/H` has coefficients `b_m = Σ_{n|m} n d_n`, so
/// `n d_n = Σ_{m|n} μ(n/m) b_m`.
pub fn clique_series_dims(g: &CommGraph, max_deg: usize) -> Result<Vec<usize>> {
    let p = clique_polynomial(g);
    let h = clique_hilbert_series(g, max_deg);
    // b_m = -Σ_k k p_k h_{m-k}
    let b: Vec<BigInt> = (0..=max_deg)
        .map(|m| {
            let mut acc = BigInt::zero();
            for (k, pk) in p.iter().enumerate().skip(1).take_while(|(k, _)| *k <= m) {
                acc -= BigInt::from(k) * pk * &h[m - k];
            }
            acc
        })
        .collect();
    let mut dims = Vec::with_capacity(max_deg);
    for n in 1..=max_deg {
        let mut acc = BigInt::zero();
        for m in (1..=n).filter(|m| n % m == 0) {
            match mobius(n / m) {
                1 => acc += &b[m],
                -1 => acc -= &b[m],
                _ => {}
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return Err(Error::NonIntegralDimension(n));
        }
        dims.push(q.to_usize().ok_or(Error::NonIntegralDimension(n))?);
    }
    Ok(dims)
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Every normal `S_θ`-word `[a s b]` of the given degree.
pub fn normal_words_of_degree(g: &CommGraph, degree: usize) -> Result<Vec<LiePoly>> {
    let mut out = Vec::new();
    for u in enumerate_alsw(&g.alphabet, degree)
        .into_iter()
        .filter(|u| u.len() == degree)
    {
        for (start, len) in g.relation_factors(&u) {
            let s = Rule::from_alsw(u.slice(start, start + len))?;
            out.push(normal_s_word(
                &u.prefix(start),
                &s,
                &u.suffix_from(start + len),
            )?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::parse("x > y > z").unwrap()
    }

    fn graph(edges: &[(&str, &str)]) -> CommGraph {
        CommGraph::from_symbols(abc(), edges).unwrap()
    }

    #[test]
    fn rhd_examples() {
        let a = Alphabet::parse("x > y").unwrap();
        let (x, y) = (a.letter("x").unwrap(), a.letter("y").unwrap());
        let g = CommGraph::from_symbols(a.clone(), &[("x", "y")]).unwrap();
        assert!(g.rhd(x, y).unwrap());
        assert!(!g.rhd(y, x).unwrap());
        assert!(!CommGraph::empty(a).rhd(x, y).unwrap());
        assert!(g.rhd(x, Letter(9)).is_err());
    }

    #[test]
    fn self_loops_rejected() {
        assert!(matches!(
            CommGraph::from_symbols(abc(), &[("x", "x")]),
            Err(Error::SelfLoop(_))
        ));
    }

    #[test]
    fn relation_examples() {
        let a = Alphabet::parse("x > y").unwrap();
        let g = CommGraph::complete(a.clone());
        let r: Vec<String> = generate_relations(&g, 5)
            .iter()
            .map(|r| a.render_word(r.leading()))
            .collect();
        assert_eq!(r, ["xy"]);

        let a = abc();
        let g = CommGraph::complete(a.clone());
        let r: Vec<String> = generate_relations(&g, 3)
            .iter()
            .map(|r| a.render_word(r.leading()))
            .collect();
        assert_eq!(r, ["yz", "xz", "xy", "xzy"]);

        assert!(generate_relations(&CommGraph::empty(a), 6).is_empty());
    }

    #[test]
    fn relation_bodies_are_single_basis_elements() {
        let g = CommGraph::complete(Alphabet::standard(4));
        for r in generate_relations(&g, 5) {
            assert_eq!(r.body().len(), 1);
        }
    }

    #[test]
    fn basis_examples() {
        let a = Alphabet::parse("x > y").unwrap();
        let g = CommGraph::complete(a.clone());
        assert_eq!(graded_dimensions(&g, 5), [2, 0, 0, 0, 0]);
        assert_eq!(graded_dimensions(&CommGraph::empty(a), 5), [2, 1, 2, 3, 6]);
        let star = graph(&[("x", "y"), ("x", "z")]);
        assert_eq!(graded_dimensions(&star, 3), [3, 1, 2]);
        let basis = irr_basis(&star, 3);
        for d in 1..=3 {
            assert!(basis.trees(d).iter().all(crate::lie::is_nlsw));
        }
        assert_eq!(basis.multidegrees.values().sum::<usize>(), 6);
    }

    #[test]
    fn clique_series_examples() {
        let star = graph(&[("x", "y"), ("x", "z")]);
        let h: Vec<i64> = clique_hilbert_series(&star, 3)
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(h, [1, 3, 7, 15]);
        assert_eq!(clique_series_dims(&star, 5).unwrap(), [3, 1, 2, 3, 6]);
        let a = Alphabet::parse("x > y").unwrap();
        assert_eq!(
            clique_series_dims(&CommGraph::complete(a.clone()), 4).unwrap(),
            [2, 0, 0, 0]
        );
        assert_eq!(
            clique_series_dims(&CommGraph::empty(a), 8).unwrap(),
            [2, 1, 2, 3, 6, 9, 18, 30]
        );
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i32> = (1..=12).map(mobius).collect();
        assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn normal_form_examples() {
        let a = abc();
        let l = |s| LieTree::Leaf(a.letter(s).unwrap());
        let g = CommGraph::from_symbols(a.clone(), &[("x", "y")]).unwrap();
        assert!(pc_normal_form_tree(&LieTree::pair(l("x"), l("y")), &g)
            .unwrap()
            .is_zero());

        let g = graph(&[("x", "z")]);
        let t = LieTree::pair(LieTree::pair(l("x"), l("y")), l("z"));
        assert_eq!(a.render_lie(&pc_normal_form_tree(&t, &g).unwrap()), "[xyz]");

        let g = graph(&[("x", "y"), ("y", "z")]);
        let t = LieTree::pair(LieTree::pair(l("x"), l("z")), l("y"));
        assert!(pc_normal_form_tree(&t, &g).unwrap().is_zero());
    }

    #[test]
    fn lazy_rules_agree_with_materialized() {
        let a = abc();
        for g in CommGraph::all(&a) {
            let rules = generate_relations(&g, 5);
            for u in enumerate_alsw(&a, 5) {
                let lazy = ThetaRules(&g)
                    .find_rule(&u)
                    .map(|(r, p)| (r.leading().clone(), p));
                let list = rules.find_rule(&u).map(|(r, p)| (r.leading().clone(), p));
                assert_eq!(lazy, list);
            }
        }
    }
}
