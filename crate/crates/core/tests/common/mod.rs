//! Oracles and generators shared by the integration tests. Nothing here
//! calls the code paths it is used to check: factorizations are found by
//! exhaustive cutting, ideals are spanned by iterated brackets with letters,
//! and identities are evaluated in the associative algebra.

#![allow(dead_code)]

use std::cmp::Ordering;

use pclie::lie::{coeff, rank};
use pclie::{
    compare_lex, expand, is_alsw, lie_bracket, AssocPoly, Coeff, CommGraph, Letter, LiePoly,
    LieTree, Word,
};
use rand::rngs::StdRng;
use rand::Rng;

/// Every word of length exactly `n` over `k` letters.
pub fn all_words(k: u16, n: usize) -> Vec<Word> {
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                (0..k).map(move |l| {
                    let mut v = w.clone();
                    v.push(Letter(l));
                    v
                })
            })
            .collect();
    }
    layer.into_iter().map(Word).collect()
}

/// ALSW by the split definition `vw > wv`, written out with explicit
/// concatenation.
pub fn alsw_by_splits(u: &Word) -> bool {
    (1..u.len()).all(|i| {
        let (v, w) = (u.prefix(i), u.suffix_from(i));
        compare_lex(&v.concat(&w), &w.concat(&v)) == Ordering::Greater
    })
}

/// ALSW as "greater than every proper suffix" (uses the prefix convention).
pub fn alsw_by_suffixes(u: &Word) -> bool {
    (1..u.len()).all(|i| compare_lex(u, &u.suffix_from(i)) == Ordering::Greater)
}

/// All ways to cut `u` into non-decreasing ALSW factors.
pub fn all_nondecreasing_factorizations(u: &Word) -> Vec<Vec<Word>> {
    fn go(u: &Word, start: usize, acc: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if start == u.len() {
            out.push(acc.clone());
            return;
        }
        for end in start + 1..=u.len() {
            let f = u.slice(start, end);
            if !alsw_by_splits(&f) {
                continue;
            }
            if let Some(prev) = acc.last() {
                if compare_lex(prev, &f) == Ordering::Greater {
                    continue;
                }
            }
            acc.push(f);
            go(u, end, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(u, 0, &mut Vec::new(), &mut out);
    out
}

pub fn leaf(l: Letter) -> LieTree {
    LieTree::Leaf(l)
}

pub fn pair(a: LieTree, b: LieTree) -> LieTree {
    LieTree::pair(a, b)
}

/// The ideal generated by `gens` in degree `degree`, spanned by
/// `[...[[g, x1], x2], ..., xk]` over letters `xi`.
pub fn ideal_component(gens: &[LiePoly], letters: &[Letter], degree: usize) -> Vec<LiePoly> {
    let mut out = Vec::new();
    let mut frontier: Vec<LiePoly> = gens
        .iter()
        .filter(|g| g.degree() <= degree)
        .cloned()
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            if p.degree() == degree {
                out.push(p);
            } else {
                for &l in letters {
                    let q = lie_bracket(&p, &LiePoly::letter(l)).unwrap();
                    if !q.is_zero() {
                        next.push(q);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// Is `p` in the span of `family`?
pub fn in_span(p: &LiePoly, family: &[LiePoly]) -> bool {
    let mut with = family.to_vec();
    with.push(p.clone());
    rank(&with) == rank(family)
}

pub fn edge_generators(g: &CommGraph) -> Vec<LiePoly> {
    g.edges()
        .into_iter()
        .map(|(a, b)| LiePoly::basis(Word(vec![a, b])).unwrap())
        .collect()
}

pub fn random_word(rng: &mut StdRng, letters: &[Letter], len: usize) -> Word {
    (0..len)
        .map(|_| letters[rng.gen_range(0..letters.len())])
        .collect()
}

pub fn random_alsw(rng: &mut StdRng, letters: &[Letter], len: usize) -> Word {
    loop {
        let w = random_word(rng, letters, len);
        if is_alsw(&w).unwrap() {
            return w;
        }
    }
}

/// A random Lie polynomial with small integer coefficients and words of
/// length `1..=max_len`.
pub fn random_lie(rng: &mut StdRng, k: u16, max_len: usize, terms: usize) -> LiePoly {
    let letters: Vec<Letter> = (0..k).map(Letter).collect();
    let mut p = LiePoly::zero();
    for _ in 0..terms {
        let len = rng.gen_range(1..=max_len);
        if k == 1 && len > 1 {
            continue;
        }
        let w = random_alsw(rng, &letters, len);
        p.add_basis(w, coeff(rng.gen_range(-3..=3))).unwrap();
    }
    p
}

pub fn random_graph(rng: &mut StdRng, alphabet: &pclie::Alphabet) -> CommGraph {
    let n = alphabet.len();
    let pairs = n * (n - 1) / 2;
    CommGraph::from_mask(alphabet, rng.gen_range(0..1u64 << pairs))
}

/// Bracket of two associative Lie elements.
pub fn br(a: &AssocPoly, b: &AssocPoly) -> AssocPoly {
    a.commutator(b)
}

pub fn ex(t: &LieTree) -> AssocPoly {
    expand(t)
}

pub fn one() -> Coeff {
    coeff(1)
}
