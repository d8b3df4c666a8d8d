//! Special bracketings `[u]_v` and normal s-words.
//!
//! For ALSWs `u = a v b`, the bracketing `[u]` has a subtree `[v c]` starting
//! at the occurrence of `v`, with `b = c d`. Replacing that subtree by
//! `[[[v][c1]]...[ck]]`, where `c = c1...ck` is the non-decreasing ALSW
//! factorization, gives `[u]_v`, whose leading word is still `u`.
//! Substituting a rule body for the slot `[v]` gives the normal s-word used
//! by reduction and compositions.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{
    bracket_alsw, expand_bracket, factors_or_empty, nlsw_decompose, AssocPoly, Coeff, LiePoly,
    LieTree,
};
use crate::words::{alsw, standard_split, Alphabet, Word};

/// A monic Lie polynomial with its leading ALSW.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    body: LiePoly,
    leading: Word,
}

impl Rule {
    /// Accepts `body` only if its leading coefficient is exactly 1.
    pub fn new(body: LiePoly) -> Result<Self> {
        let (w, c) = body.leading().ok_or(Error::ZeroPolynomial)?;
        if !c.is_one() {
            return Err(Error::NotMonic(c.to_string()));
        }
        Ok(Rule {
            leading: w.clone(),
            body,
        })
    }

    /// Divides `body` by its leading coefficient.
    pub fn monic(body: LiePoly) -> Result<Self> {
        let (_, c) = body.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = c.recip();
        Rule::new(body.scale(&inv))
    }

    /// The rule `[u]` for an ALSW `u`.
    pub fn from_alsw(u: Word) -> Result<Self> {
        Rule::new(LiePoly::basis(u)?)
    }

    pub fn body(&self) -> &LiePoly {
        &self.body
    }

    pub fn leading(&self) -> &Word {
        &self.leading
    }
}

/// `u = a v b` with `v` starting at `position`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Occurrence {
    host: Word,
    sub: Word,
    position: usize,
}

impl Occurrence {
    pub fn new(host: Word, sub: Word, position: usize) -> Result<Self> {
        if host.is_empty() || sub.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !alsw(&host) {
            return Err(Error::NotAlsw(host));
        }
        if !alsw(&sub) {
            return Err(Error::NotAlsw(sub));
        }
        if !host.is_subword_at(&sub, position) {
            return Err(Error::InvalidOccurrence(format!(
                "{sub:?} does not occur in {host:?} at position {position}"
            )));
        }
        Ok(Occurrence {
            host,
            sub,
            position,
        })
    }

    pub fn host(&self) -> &Word {
        &self.host
    }

    pub fn sub(&self) -> &Word {
        &self.sub
    }

    pub fn position(&self) -> usize {
        self.position
    }

    /// Every valid occurrence of `sub` in `host`.
    pub fn all(host: &Word, sub: &Word) -> Vec<Occurrence> {
        if !alsw(host) || !alsw(sub) {
            return Vec::new();
        }
        host.occurrences(sub)
            .into_iter()
            .map(|p| Occurrence {
                host: host.clone(),
                sub: sub.clone(),
                position: p,
            })
            .collect()
    }
}

/// A bracketing with one marked slot standing for `[v]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SlotTree {
    /// The canonical bracketing of an ALSW.
    Bracket(Word),
    /// The marked subword `v`.
    Slot(Word),
    Node(Box<SlotTree>, Box<SlotTree>),
}

impl SlotTree {
    fn node(a: SlotTree, b: SlotTree) -> Self {
        SlotTree::Node(Box::new(a), Box::new(b))
    }

    pub fn word(&self) -> Word {
        match self {
            SlotTree::Bracket(w) | SlotTree::Slot(w) => w.clone(),
            SlotTree::Node(a, b) => a.word().concat(&b.word()),
        }
    }

    /// The plain tree with `[v]` in the slot.
    pub fn to_lie_tree(&self) -> LieTree {
        match self {
            SlotTree::Bracket(w) | SlotTree::Slot(w) => bracket_alsw(w),
            SlotTree::Node(a, b) => LieTree::pair(a.to_lie_tree(), b.to_lie_tree()),
        }
    }

    /// Associative expansion with `slot` substituted for `[v]`.
    pub fn evaluate(&self, slot: &AssocPoly) -> AssocPoly {
        match self {
            SlotTree::Bracket(w) => (*expand_bracket(w)).clone(),
            SlotTree::Slot(_) => slot.clone(),
            SlotTree::Node(a, b) => a.evaluate(slot).commutator(&b.evaluate(slot)),
        }
    }
}

impl Alphabet {
    /// Like [`Alphabet::render_tree`], with the slot shown as `{v}`.
    pub fn render_slot_tree(&self, t: &SlotTree) -> String {
        match t {
            SlotTree::Bracket(w) => self.render_tree(&bracket_alsw(w)),
            SlotTree::Slot(w) => format!("{{{}}}", self.render_tree(&bracket_alsw(w))),
            SlotTree::Node(a, b) => {
                format!(
                    "({} {})",
                    self.render_slot_tree(a),
                    self.render_slot_tree(b)
                )
            }
        }
    }
}

/// `[u]_v` for the given occurrence.
pub fn special_bracket(occ: &Occurrence) -> Result<SlotTree> {
    descend(&occ.host, 0, occ.position, occ.sub.len(), &occ.sub)
}

/// `node` is the ALSW spanning `[offset, offset + node.len())` of the host.
fn descend(node: &Word, offset: usize, pos: usize, vlen: usize, v: &Word) -> Result<SlotTree> {
    if offset == pos && node.len() >= vlen {
        // the minimal subtree starting at pos that covers v is down the left spine
        if node.len() > 1 {
            let (left, right) = standard_split(node)?;
            if left.len() >= vlen {
                return Ok(SlotTree::node(
                    descend(&left, offset, pos, vlen, v)?,
                    SlotTree::Bracket(right),
                ));
            }
        }
        let c = node.suffix_from(vlen);
        let mut t = SlotTree::Slot(v.clone());
        for ci in factors_or_empty(&c) {
            t = SlotTree::node(t, SlotTree::Bracket(ci));
        }
        return Ok(t);
    }
    if node.len() == 1 {
        return Err(Error::Internal("occurrence fell outside a leaf".into()));
    }
    let (left, right) = standard_split(node)?;
    let mid = offset + left.len();
    if pos >= mid {
        Ok(SlotTree::node(
            SlotTree::Bracket(left),
            descend(&right, mid, pos, vlen, v)?,
        ))
    } else if pos + vlen <= mid {
        Ok(SlotTree::node(
            descend(&left, offset, pos, vlen, v)?,
            SlotTree::Bracket(right),
        ))
    } else {
        Err(Error::Internal(format!(
            "no subtree of the bracketing starts at position {pos} and covers the occurrence"
        )))
    }
}

/// The normal s-word `[a s b]_s̄` in NLSW coordinates.
pub fn normal_s_word(a: &Word, s: &Rule, b: &Word) -> Result<LiePoly> {
    let host = Word::concat3(a, s.leading(), b);
    if !alsw(&host) {
        return Err(Error::NotAlsw(host));
    }
    if a.is_empty() && b.is_empty() {
        return Ok(s.body().clone());
    }
    let occ = Occurrence {
        host,
        sub: s.leading().clone(),
        position: a.len(),
    };
    let tree = special_bracket(&occ)?;
    let slot = s.body().to_assoc();
    let value = nlsw_decompose(&tree.evaluate(&slot))?;
    debug_assert_eq!(
        value.leading().map(|(w, c)| (w.clone(), c.clone())),
        Some((occ.host.clone(), Coeff::one()))
    );
    Ok(value)
}
