use lch::cobord::{filling_system, Move, PinchConventions};
use lch::diagram::trefoil;

fn main() {
    let t = trefoil();
    let script = vec![
        Move::Pinch { chord: "b1".into() },
        Move::Pinch { chord: "b2".into() },
        Move::Pinch { chord: "b3".into() },
        Move::Cap { basepoint: "t1".into() },
        Move::Cap { basepoint: "s1".into() },
    ];
    for swap in [false, true] {
        for left in [false, true] {
            let conv = PinchConventions { swap_signs: swap, left_is_over_out: left, ..Default::default() };
            print!("swap={swap} left_over_out={left}: ");
            match filling_system(&t, &script, &conv) {
                Ok(sys) => {
                    println!("OK");
                    for (g, v) in &sys.chord_values {
                        println!("  e({g}) = {v}");
                    }
                    for (s, v) in &sys.sym_values {
                        println!("  e({s}) = {v}");
                    }
                }
                Err(e) => println!("FAIL: {e}"),
            }
        }
    }
}
