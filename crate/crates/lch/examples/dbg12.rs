use lch::cobord::{cap_map, pinch_map, PinchConventions, SignWord};
use lch::diagram::trefoil;

fn main() {
    let t = trefoil();
    let orders: Vec<[&str; 3]> = vec![
        ["b1", "b2", "b3"], ["b1", "b3", "b2"], ["b2", "b1", "b3"],
        ["b2", "b3", "b1"], ["b3", "b1", "b2"], ["b3", "b2", "b1"],
    ];
    for base in [
        (false, SignWord::W1, false),
        (true, SignWord::W2, true),
        (true, SignWord::None, true),
    ] {
        for order in &orders {
            let conv = PinchConventions {
                swap_signs: false,
                left_is_over_out: base.0,
                correction_sign: 1,
                sign_word: base.1,
                include_site_sign: base.2,
            };
            let r = (|| -> Result<String, String> {
                let (d1, _) = pinch_map(&t, order[0], "s1", &conv).map_err(|e| format!("p1: {e}"))?;
                let (d2, _) = pinch_map(&d1, order[1], "s2", &conv).map_err(|e| format!("p2: {e}"))?;
                let (d3, _) = pinch_map(&d2, order[2], "s3", &conv).map_err(|e| format!("p3: {e}"))?;
                let (d4, _) = cap_map(&d3, "t1").map_err(|e| format!("c1: {e}"))?;
                let (_d5, _) = cap_map(&d4, "s1").map_err(|e| format!("c2: {e}"))?;
                Ok("FULL OK".into())
            })();
            let tag = match &r { Ok(_) => "FULL OK".to_string(), Err(e) => e.chars().take(60).collect() };
            println!("base={base:?} order={order:?}: {tag}");
        }
    }
}
