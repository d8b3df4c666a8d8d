//! Compositions, reduction modulo a rule set, bounded Gröbner-Shirshov
//! verification and bounded completion.
//!
//! All verification here is bounded: only ambiguities `w` with
//! `|w| <= max_deg` are examined, and reports say so.

use std::borrow::Cow;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lie::{Coeff, LiePoly};
use crate::special::{normal_s_word, Rule};
use crate::words::{alsw, Alphabet, Word};

/// Anything that can name a rule whose leading word occurs in a given word.
pub trait RuleSource {
    /// The rule to rewrite `u` with and the position of its leading word,
    /// or `None` when `u` is irreducible.
    fn find_rule(&self, u: &Word) -> Option<(Cow<'_, Rule>, usize)>;
}

/// Lowest index first, then leftmost occurrence.
impl RuleSource for [Rule] {
    fn find_rule(&self, u: &Word) -> Option<(Cow<'_, Rule>, usize)> {
        self.iter()
            .find_map(|r| u.find(r.leading()).map(|p| (Cow::Borrowed(r), p)))
    }
}

impl RuleSource for Vec<Rule> {
    fn find_rule(&self, u: &Word) -> Option<(Cow<'_, Rule>, usize)> {
        self.as_slice().find_rule(u)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum AmbiguityKind {
    Inclusion,
    Intersection,
}

impl fmt::Display for AmbiguityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbiguityKind::Inclusion => "inclusion",
            AmbiguityKind::Intersection => "intersection",
        })
    }
}

/// An overlap of two leading words.
///
/// Inclusion: `w = f̄ = a ḡ b`. Intersection: `w = f̄ b = a ḡ` with the two
/// leading words overlapping and `a`, `b` nonempty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub left_index: usize,
    pub right_index: usize,
    pub left: Rule,
    pub right: Rule,
    pub w: Word,
    pub a: Word,
    pub b: Word,
}

pub fn find_ambiguities(rules: &[Rule], max_deg: usize) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for (i, f) in rules.iter().enumerate() {
        let fw = f.leading();
        for (j, g) in rules.iter().enumerate() {
            let gw = g.leading();
            if fw.len() <= max_deg && gw.len() <= fw.len() {
                for p in fw.occurrences(gw) {
                    if i == j && p == 0 {
                        continue;
                    }
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Inclusion,
                        left_index: i,
                        right_index: j,
                        left: f.clone(),
                        right: g.clone(),
                        w: fw.clone(),
                        a: fw.prefix(p),
                        b: fw.suffix_from(p + gw.len()),
                    });
                }
            }
            let shorter = fw.len().min(gw.len());
            for k in 1..shorter {
                let wlen = fw.len() + gw.len() - k;
                if wlen > max_deg {
                    continue;
                }
                if fw.letters()[fw.len() - k..] != gw.letters()[..k] {
                    continue;
                }
                let w = fw.concat(&gw.suffix_from(k));
                if !alsw(&w) {
                    continue;
                }
                out.push(Ambiguity {
                    kind: AmbiguityKind::Intersection,
                    left_index: i,
                    right_index: j,
                    left: f.clone(),
                    right: g.clone(),
                    a: w.prefix(fw.len() - k),
                    b: gw.suffix_from(k),
                    w,
                });
            }
        }
    }
    out.sort_by(|x, y| {
        x.w.cmp(&y.w)
            .then(x.left_index.cmp(&y.left_index))
            .then(x.right_index.cmp(&y.right_index))
            .then(x.kind.cmp(&y.kind))
            .then(x.a.len().cmp(&y.a.len()))
    });
    out
}

/// `(f,g)_w`.
pub fn composition(amb: &Ambiguity) -> Result<LiePoly> {
    let empty = Word::empty();
    let value = match amb.kind {
        AmbiguityKind::Inclusion => {
            if Word::concat3(&amb.a, amb.right.leading(), &amb.b) != *amb.left.leading() {
                return Err(Error::Precondition("malformed inclusion ambiguity".into()));
            }
            amb.left.body() - &normal_s_word(&amb.a, &amb.right, &amb.b)?
        }
        AmbiguityKind::Intersection => {
            if amb.left.leading().concat(&amb.b) != amb.w
                || amb.a.concat(amb.right.leading()) != amb.w
            {
                return Err(Error::Precondition(
                    "malformed intersection ambiguity".into(),
                ));
            }
            normal_s_word(&empty, &amb.left, &amb.b)? - normal_s_word(&amb.a, &amb.right, &empty)?
        }
    };
    if let Some((lead, _)) = value.leading() {
        if *lead >= amb.w {
            return Err(Error::Internal(format!(
                "composition at {:?} has leading word {lead:?}",
                amb.w
            )));
        }
    }
    Ok(value)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionStep {
    pub rule: Rule,
    pub a: Word,
    pub b: Word,
    pub coefficient: Coeff,
}

impl ReductionStep {
    /// `a s̄ b`.
    pub fn word(&self) -> Word {
        Word::concat3(&self.a, self.rule.leading(), &self.b)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub remainder: LiePoly,
}

impl ReductionTrace {
    /// `Σ coefficient · (a s b)` over all steps.
    pub fn subtracted(&self) -> Result<LiePoly> {
        let mut total = LiePoly::zero();
        for s in &self.steps {
            total.add_scaled(&normal_s_word(&s.a, &s.rule, &s.b)?, &s.coefficient);
        }
        Ok(total)
    }
}

/// Rewrites the deg-lex greatest reducible word first until no word of the
/// remainder contains a leading word of `rules`.
pub fn reduce<S: RuleSource + ?Sized>(
    h: &LiePoly,
    rules: &S,
    bound: Option<&Word>,
) -> Result<ReductionTrace> {
    let mut current = h.clone();
    let mut remainder = LiePoly::zero();
    let mut steps = Vec::new();
    while let Some((u, c)) = current.leading().map(|(u, c)| (u.clone(), c.clone())) {
        match rules.find_rule(&u) {
            None => {
                current.add_scaled(&LiePoly::basis(u.clone())?, &-&c);
                remainder.add_basis(u, c)?;
            }
            Some((rule, pos)) => {
                if let Some(bound) = bound {
                    if u >= *bound {
                        return Err(Error::BoundViolated {
                            step: u,
                            bound: bound.clone(),
                        });
                    }
                }
                let a = u.prefix(pos);
                let b = u.suffix_from(pos + rule.leading().len());
                let nsw = normal_s_word(&a, &rule, &b)?;
                current.add_scaled(&nsw, &-&c);
                if let Some((next, _)) = current.leading() {
                    if *next >= u {
                        return Err(Error::Internal(format!(
                            "reduction step at {u:?} did not lower the leading word"
                        )));
                    }
                }
                steps.push(ReductionStep {
                    rule: rule.into_owned(),
                    a,
                    b,
                    coefficient: c,
                });
            }
        }
    }
    Ok(ReductionTrace { steps, remainder })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GsbFailure {
    pub ambiguity: Ambiguity,
    pub remainder: LiePoly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GsbReport {
    pub ok: bool,
    /// Ambiguities were checked only up to this length.
    pub max_deg: usize,
    pub rules: usize,
    pub ambiguities: usize,
    pub failures: Vec<GsbFailure>,
}

impl GsbReport {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        s.push_str(if self.ok {
            "ok\n"
        } else {
            "not a Groebner-Shirshov basis\n"
        });
        s.push_str(&format!(
            "bounded check: |w| <= {}, {} rules, {} ambiguities\n",
            self.max_deg, self.rules, self.ambiguities
        ));
        for f in &self.failures {
            s.push_str(&format!(
                "FAIL {} w={} remainder={}\n",
                f.ambiguity.kind,
                alphabet.render_word(&f.ambiguity.w),
                alphabet.render_lie(&f.remainder)
            ));
        }
        s
    }
}

/// Checks that every composition with `|w| <= max_deg` reduces to zero
/// using only steps below `w`.
pub fn is_gsb(rules: &[Rule], max_deg: usize) -> Result<GsbReport> {
    let ambiguities = find_ambiguities(rules, max_deg);
    let outcomes: Vec<Result<Option<GsbFailure>>> = ambiguities
        .par_iter()
        .map(|amb| {
            let h = composition(amb)?;
            let trace = reduce(&h, rules, Some(&amb.w))?;
            Ok((!trace.remainder.is_zero()).then(|| GsbFailure {
                ambiguity: amb.clone(),
                remainder: trace.remainder,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        if let Some(f) = o? {
            failures.push(f);
        }
    }
    Ok(GsbReport {
        ok: failures.is_empty(),
        max_deg,
        rules: rules.len(),
        ambiguities: ambiguities.len(),
        failures,
    })
}

/// Adds monic irreducible compositions until the set passes [`is_gsb`] at
/// `max_deg`.
pub fn complete(rules: &[Rule], max_deg: usize) -> Result<Vec<Rule>> {
    let mut current = rules.to_vec();
    loop {
        let report = is_gsb(&current, max_deg)?;
        if report.ok {
            return Ok(current);
        }
        let mut added = false;
        for f in report.failures {
            let r = reduce(&f.remainder, &current, None)?.remainder;
            if !r.is_zero() {
                current.push(Rule::monic(r)?);
                added = true;
            }
        }
        if !added {
            return Err(Error::Internal("completion made no progress".into()));
        }
    }
}
