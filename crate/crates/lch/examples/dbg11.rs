use lch::cobord::{cap_map, pinch_map, PinchConventions, SignWord};
use lch::diagram::trefoil;

fn main() {
    let t = trefoil();
    for base in [
        (false, SignWord::W1, false),
        (true, SignWord::W2, true),
        (true, SignWord::None, true),
    ] {
        for sv in 0..8u8 {
            let sw = |i: u8| sv >> i & 1 == 1;
            let conv = |i: u8| PinchConventions {
                swap_signs: sw(i),
                left_is_over_out: base.0,
                correction_sign: 1,
                sign_word: base.1,
                include_site_sign: base.2,
            };
            let r = (|| -> Result<String, String> {
                let (d1, _) = pinch_map(&t, "b1", "s1", &conv(0)).map_err(|e| format!("p1: {e}"))?;
                let (d2, _) = pinch_map(&d1, "b2", "s2", &conv(1)).map_err(|e| format!("p2: {e}"))?;
                let (d3, _) = pinch_map(&d2, "b3", "s3", &conv(2)).map_err(|e| format!("p3: {e}"))?;
                let (d4, _) = cap_map(&d3, "t1").map_err(|e| format!("c1: {e}"))?;
                let (_, _) = cap_map(&d4, "s1").map_err(|e| format!("c2: {e}"))?;
                Ok("FULL OK".into())
            })();
            match r {
                Ok(m) => println!("base={base:?} swaps={sv:03b}: {m}"),
                Err(e) => {
                    if !e.starts_with("p1") && !e.starts_with("p2") {
                        println!("base={base:?} swaps={sv:03b}: {e}");
                    }
                }
            }
        }
    }
}
