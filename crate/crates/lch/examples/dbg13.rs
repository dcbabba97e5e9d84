use lch::cobord::{filling_system, Move, PinchConventions, SignWord};
use lch::diagram::trefoil;

fn main() {
    let t = trefoil();
    let script = vec![
        Move::Pinch { chord: "b1".into() },
        Move::Pinch { chord: "b2".into() },
        Move::R2 { a: "a2".into(), b: "b3".into() },
        Move::Cap { basepoint: "t1".into() },
    ];
    for base in [
        (false, SignWord::W1, false),
        (true, SignWord::W2, true),
        (true, SignWord::None, true),
    ] {
        for swap in [false, true] {
            let conv = PinchConventions {
                swap_signs: swap,
                left_is_over_out: base.0,
                correction_sign: 1,
                sign_word: base.1,
                include_site_sign: base.2,
            };
            match filling_system(&t, &script, &conv) {
                Ok(sys) => {
                    println!("base={base:?} swap={swap}: OK");
                    for (g, v) in &sys.chord_values {
                        println!("  e({g}) = {v}");
                    }
                    for (s, v) in &sys.sym_values {
                        println!("  e({s}) = {v}");
                    }
                    match sys.is_restricted() {
                        Ok(r) => println!("  restricted={} relations={:?}", r.restricted, r.relations),
                        Err(e) => println!("  restricted check: {e}"),
                    }
                }
                Err(e) => println!("base={base:?} swap={swap}: {e}"),
            }
        }
    }
}
