mod common;

use common::*;
use pclie::lie::coeff;
use pclie::parse::parse_expr;
use pclie::pc::pc_normal_form_tree;
use pclie::{
    enumerate_alsw, generate_relations, graded_dimensions, irr_basis, is_nlsw, pc_normal_form,
    Alphabet, CommGraph, Letter, LiePoly,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn graph(decl: &str, edges: &[(&str, &str)]) -> CommGraph {
    CommGraph::from_symbols(Alphabet::parse(decl).unwrap(), edges).unwrap()
}

fn nf_of(g: &CommGraph, expr: &str) -> String {
    let a = g.alphabet();
    let t = parse_expr(expr, a).unwrap().as_tree().unwrap();
    a.render_lie(&pc_normal_form_tree(&t, g).unwrap())
}

#[test]
fn normal_form_examples() {
    assert_eq!(nf_of(&graph("x > y", &[("x", "y")]), "(x y)"), "0");
    assert_eq!(
        nf_of(&graph("x > y > z", &[("x", "z")]), "((x y) z)"),
        "[xyz]"
    );
    let chain = graph("x > y > z", &[("x", "y"), ("y", "z")]);
    assert_eq!(nf_of(&chain, "((x z) y)"), "0");
}

#[test]
fn pattern_screening_matches_materialized_rules() {
    for n in 2..=4 {
        for g in CommGraph::all(&Alphabet::standard(n)) {
            let rules = generate_relations(&g, 6);
            for u in enumerate_alsw(g.alphabet(), 6) {
                let hit = rules.iter().any(|r| u.find(r.leading()).is_some());
                assert_eq!(g.is_irreducible(&u), !hit);
            }
        }
    }
}

#[test]
fn basis_trees_are_irreducible_nlsws() {
    for g in CommGraph::all(&Alphabet::standard(3)) {
        let basis = irr_basis(&g, 6);
        for d in 1..=6 {
            for t in basis.trees(d) {
                assert!(is_nlsw(&t));
                assert!(g.is_irreducible(&t.word()));
                assert_eq!(t.degree(), d);
            }
        }
        let total: usize = basis.multidegrees.values().sum();
        assert_eq!(total, basis.dimensions().iter().sum::<usize>());
    }
}

#[test]
fn degenerate_graphs() {
    for n in 1..=4 {
        let a = Alphabet::standard(n);
        let mut abelian = vec![0; 6];
        abelian[0] = n;
        assert_eq!(
            graded_dimensions(&CommGraph::complete(a.clone()), 6),
            abelian
        );
        // Free Lie algebra: one ALSW per aperiodic necklace.
        let free: Vec<usize> = (1..=6)
            .map(|d| {
                all_words(n as u16, d)
                    .iter()
                    .filter(|w| alsw_by_splits(w))
                    .count()
            })
            .collect();
        assert_eq!(graded_dimensions(&CommGraph::empty(a), 6), free);
    }
}

#[test]
fn normal_forms_are_congruent_to_their_inputs() {
    let mut rng = StdRng::seed_from_u64(5);
    let alphabet = Alphabet::standard(3);
    let letters: Vec<Letter> = alphabet.letters().collect();
    for _ in 0..40 {
        let g = random_graph(&mut rng, &alphabet);
        let d = rng.gen_range(2..=5);
        let mut h = LiePoly::zero();
        for w in enumerate_alsw(&alphabet, d)
            .into_iter()
            .filter(|w| w.len() == d)
        {
            h.add_basis(w, coeff(rng.gen_range(-2..=2))).unwrap();
        }
        let ideal = ideal_component(&edge_generators(&g), &letters, d);
        let nf = pc_normal_form(&h, &g).unwrap();
        assert!(in_span(&(&h - &nf), &ideal));
        // Adding an ideal element does not change the normal form.
        let mut shifted = h.clone();
        for p in &ideal {
            shifted.add_scaled(p, &coeff(rng.gen_range(-2..=2)));
        }
        assert_eq!(pc_normal_form(&shifted, &g).unwrap(), nf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_laws(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alphabet = Alphabet::standard(4);
        let g = random_graph(&mut rng, &alphabet);
        let p = random_lie(&mut rng, 4, 5, 5);
        let q = random_lie(&mut rng, 4, 5, 5);
        let np = pc_normal_form(&p, &g).unwrap();
        let nq = pc_normal_form(&q, &g).unwrap();
        prop_assert_eq!(pc_normal_form(&np, &g).unwrap(), np.clone());
        let (a, b) = (coeff(rng.gen_range(-3..=3)), coeff(rng.gen_range(-3..=3)));
        let lhs = pc_normal_form(&(&p.scale(&a) + &q.scale(&b)), &g).unwrap();
        prop_assert_eq!(lhs, &np.scale(&a) + &nq.scale(&b));
        prop_assert!(np.is_integral());
        prop_assert!(np.words().all(|w| g.is_irreducible(w)));
    }
}
