//! Irr bases, graded dimensions and normal forms in Lie(X|θ), with the
//! clique-polynomial dimensions alongside.
//!
//!     cargo run --example partially_commutative

use pclie::parse::parse_expr;
use pclie::pc::{clique_hilbert_series, pc_normal_form_tree};
use pclie::{clique_series_dims, generate_relations, irr_basis, Alphabet, CommGraph};

fn main() -> pclie::Result<()> {
    let a = Alphabet::parse("x > y > z > w")?;
    let path = CommGraph::from_symbols(a.clone(), &[("x", "y"), ("y", "z"), ("z", "w")])?;

    println!("relations of degree <= 4:");
    for r in generate_relations(&path, 4) {
        println!("  {}", a.render_lie(r.body()));
    }

    let basis = irr_basis(&path, 5);
    for d in 1..=3 {
        let trees: Vec<String> = basis.trees(d).iter().map(|t| a.render_tree(t)).collect();
        println!("degree {d}: {}", trees.join(", "));
    }
    println!("dimensions from Irr:     {:?}", basis.dimensions());
    println!(
        "dimensions from cliques: {:?}",
        clique_series_dims(&path, 5)?
    );
    let series: Vec<String> = clique_hilbert_series(&path, 5)
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("associative series: {}", series.join(", "));

    for text in [
        "((x z) y)",
        "((x w) z)",
        "(z (x w))",
        "((x (z w)) (y w))",
    ] {
        let t = parse_expr(text, &a)?
            .as_tree()
            .expect("a single bracketing");
        println!(
            "nf {text} = {}",
            a.render_lie(&pc_normal_form_tree(&t, &path)?)
        );
    }
    Ok(())
}
