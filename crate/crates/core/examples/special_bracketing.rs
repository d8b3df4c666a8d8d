//! Special bracketings [u]_v and normal s-words.
//!
//!     cargo run --example special_bracketing

use pclie::lie::coeff;
use pclie::{bracket, normal_s_word, special_bracket, Alphabet, LiePoly, Occurrence, Rule, Word};

fn main() -> pclie::Result<()> {
    let a = Alphabet::parse("x > y > z")?;
    let w = |s: &str| a.parse_word(s);

    for (u, v) in [
        ("xyz", "xy"),
        ("xyz", "yz"),
        ("xyzyz", "yz"),
        ("xxyzy", "xy"),
    ] {
        let (u, v) = (w(u)?, w(v)?);
        println!("[{}] = {}", a.render_word(&u), a.render_tree(&bracket(&u)?));
        for occ in Occurrence::all(&u, &v) {
            let t = special_bracket(&occ)?;
            println!(
                "  [{}]_{} at {}: {}",
                a.render_word(&u),
                a.render_word(&v),
                occ.position(),
                a.render_slot_tree(&t)
            );
        }
    }

    // s = [xz] - [yz]: each normal s-word has leading word a·xz·b.
    let mut body = LiePoly::basis(w("xz")?)?;
    body.add_basis(w("yz")?, coeff(-1))?;
    let s = Rule::new(body)?;
    let word = |t: &str| {
        if t.is_empty() {
            Ok(Word::empty())
        } else {
            w(t)
        }
    };
    for (pre, post) in [("x", ""), ("", "z"), ("x", "z")] {
        let (pre, post) = (word(pre)?, word(post)?);
        let p = normal_s_word(&pre, &s, &post)?;
        println!(
            "a={:?} b={:?}: {}",
            a.render_word(&pre),
            a.render_word(&post),
            a.render_lie(&p)
        );
    }
    Ok(())
}
