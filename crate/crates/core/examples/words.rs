//! ALSWs, factorization into non-decreasing ALSWs and standard splits.
//!
//!     cargo run --example words

use pclie::{enumerate_alsw, lyndon_factorize, standard_split, Alphabet};

fn main() -> pclie::Result<()> {
    let a = Alphabet::parse("x > y > z")?;

    let alsws = enumerate_alsw(&a, 4);
    println!(
        "{} ALSWs of length <= 4 over {}:",
        alsws.len(),
        a.declaration()
    );
    for d in 1..=4 {
        let layer: Vec<String> = alsws
            .iter()
            .filter(|w| w.len() == d)
            .map(|w| a.render_word(w))
            .collect();
        println!("  {d}: {}", layer.join(" "));
    }

    for text in ["zyxzyx", "yxxzyx", "xzyzz"] {
        let w = a.parse_word(text)?;
        let factors: Vec<String> = lyndon_factorize(&w)?
            .iter()
            .map(|f| a.render_word(f))
            .collect();
        println!("{text} = {}", factors.join(" · "));
    }

    for text in ["xyy", "xzyzz", "xxyxy"] {
        let (v, w) = standard_split(&a.parse_word(text)?)?;
        println!(
            "standard split of {text}: ({}, {})",
            a.render_word(&v),
            a.render_word(&w)
        );
    }
    Ok(())
}
