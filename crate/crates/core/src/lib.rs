//! Lyndon-Shirshov words, Gröbner-Shirshov bases in free Lie algebras, and
//! normal forms for free partially commutative Lie algebras `Lie(X|θ)`.
//!
//! The layers build on each other:
//!
//! - [`words`]: letters, orders, ALSWs, factorization and standard splits.
//! - [`lie`]: bracketings, associative expansion, NLSW coordinates.
//! - [`special`]: special bracketings `[u]_v` and normal s-words.
//! - [`gsb`]: compositions, reduction, bounded verification and completion.
//! - [`pc`]: commutation graphs, the relation set `S_θ`, Irr bases and the
//!   clique-polynomial dimension oracle.
//! - [`parse`] and [`cli`]: the text front end.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod error;
pub mod gsb;
pub mod lie;
pub mod parse;
pub mod pc;
pub mod special;
pub mod words;

pub use error::{Error, Result};
pub use gsb::{
    complete, composition, find_ambiguities, is_gsb, reduce, Ambiguity, AmbiguityKind, GsbReport,
    ReductionTrace, RuleSource,
};
pub use lie::{
    bracket, expand, is_nlsw, leading_word, left_pair_expansion, lie_bracket, nlsw_decompose,
    AssocPoly, Coeff, LiePoly, LieTree,
};
pub use pc::{
    clique_series_dims, generate_relations, graded_dimensions, irr_basis, pc_normal_form,
    CommGraph, GradedBasis, ThetaRules,
};
pub use special::{normal_s_word, special_bracket, Occurrence, Rule, SlotTree};
pub use words::{
    compare_deglex, compare_lex, enumerate_alsw, is_alsw, lyndon_factorize, standard_split,
    Alphabet, Letter, Word,
};
