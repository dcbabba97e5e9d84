use lch::cobord::{pinch_map, PinchConventions, SignWord};
use lch::diagram::trefoil;
use lch::disks::{pinch_disks_capped, Letter};

fn main() {
    let t = trefoil();
    for root in ["a1", "a2", "b2", "b3"] {
        let ds = pinch_disks_capped(&t, root, "b1", "s1", false, 2).unwrap();
        eprintln!("disks ({root}; b1): {}", ds.len());
        for d in &ds {
            let w: Vec<String> = d.letters.iter().map(|l| match l {
                Letter::Chord(c) => c.clone(),
                Letter::Basepoint { sym, sign, exp } => format!("[{}{}^{}]", if *sign<0 {"-"} else {"+"}, sym, exp),
            }).collect();
            eprintln!("  split={:?} sq={:?} sign={} : {}", d.split, d.site_quadrant, d.corner_sign, w.join(" "));
        }
    }
    let conv = PinchConventions {
        swap_signs: false,
        left_is_over_out: false,
        correction_sign: 1,
        sign_word: SignWord::W1,
        include_site_sign: false,
    };
    match pinch_map(&t, "b1", "s1", &conv) {
        Ok(_) => eprintln!("pinch b1 OK"),
        Err(e) => eprintln!("pinch b1: {e}"),
    }
}
