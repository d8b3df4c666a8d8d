//! The negative control: {[xy], [yz]} is not a Gröbner-Shirshov basis.
//! The failing composition is reported with its witness, then a bounded
//! completion repairs the set.
//!
//!     cargo run --example completion

use pclie::{complete, composition, find_ambiguities, is_gsb, reduce, Alphabet, Rule};

fn main() -> pclie::Result<()> {
    let a = Alphabet::parse("x > y > z")?;
    let rules = vec![
        Rule::from_alsw(a.parse_word("xy")?)?,
        Rule::from_alsw(a.parse_word("yz")?)?,
    ];

    for amb in find_ambiguities(&rules, 4) {
        let h = composition(&amb)?;
        let trace = reduce(&h, &rules, Some(&amb.w))?;
        println!(
            "{} at w={}: composition {} reduces to {}",
            amb.kind,
            a.render_word(&amb.w),
            a.render_lie(&h),
            a.render_lie(&trace.remainder)
        );
    }
    print!("{}", is_gsb(&rules, 4)?.render(&a));

    let done = complete(&rules, 4)?;
    println!("completed at degree 4:");
    for r in &done {
        println!("  {}", a.render_lie(r.body()));
    }
    print!("{}", is_gsb(&done, 4)?.render(&a));
    Ok(())
}
