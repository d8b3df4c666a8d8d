//! Canonical bracketings, associative expansion and NLSW coordinates.
//!
//!     cargo run --example lie_basis

use pclie::parse::parse_expr;
use pclie::{bracket, expand, left_pair_expansion, lie_bracket, nlsw_decompose, Alphabet, LiePoly};

fn main() -> pclie::Result<()> {
    let a = Alphabet::parse("x > y > z")?;

    for text in ["xy", "xyz", "xzy", "xyzyz"] {
        let t = bracket(&a.parse_word(text)?)?;
        println!(
            "[{text}] = {} = {}",
            a.render_tree(&t),
            a.render_assoc(&expand(&t))
        );
    }

    // Any bracketing is a combination of NLSWs.
    for text in ["((x y) z)", "((y z) x)", "(((x z) y) (y z))"] {
        let p = parse_expr(text, &a)?.to_assoc();
        println!("{text} = {}", a.render_lie(&nlsw_decompose(&p)?));
    }

    let xy = LiePoly::basis(a.parse_word("xy")?)?;
    let xz = LiePoly::basis(a.parse_word("xz")?)?;
    println!("[[xy], [xz]] = {}", a.render_lie(&lie_bracket(&xy, &xz)?));

    // (x [u]) as a sum of trees ((x y_i) ...) with leading words x y_i u_i.
    let u = a.parse_word("yzz")?;
    println!("(x [yzz]) =");
    for (c, t) in left_pair_expansion(a.letter("x").unwrap(), &u)? {
        println!("  {c:>3} {}", a.render_tree(&t));
    }
    Ok(())
}
