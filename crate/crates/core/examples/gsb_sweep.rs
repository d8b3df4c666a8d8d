//! Bounded check that the relation set S_θ is a Gröbner-Shirshov basis for
//! every commutation graph on 2, 3 and 4 letters.
//!
//!     cargo run --release --example gsb_sweep [max_deg]

use std::time::Instant;

use pclie::{generate_relations, is_gsb, Alphabet, CommGraph};

fn main() -> pclie::Result<()> {
    let max_deg: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for n in 2..=4 {
        let alphabet = Alphabet::standard(n);
        let started = Instant::now();
        let graphs = CommGraph::all(&alphabet);
        let (mut rules, mut ambiguities, mut failed) = (0, 0, 0);
        for g in &graphs {
            let report = is_gsb(&generate_relations(g, max_deg), max_deg)?;
            rules += report.rules;
            ambiguities += report.ambiguities;
            if !report.ok {
                failed += 1;
                print!("{}", report.render(&alphabet));
            }
        }
        println!(
            "{n} letters: {} graphs, {rules} rules, {ambiguities} ambiguities, {failed} failures ({:.2?})",
            graphs.len(),
            started.elapsed()
        );
    }
    Ok(())
}
