use lch::cobord::{pinch_map, PinchConventions, SignWord};
use lch::dga::Dga;
use lch::diagram::trefoil;
use lch::disks::{pinch_disks_capped, Letter};

fn main() {
    let conv = PinchConventions {
        swap_signs: false,
        left_is_over_out: false,
        correction_sign: 1,
        sign_word: SignWord::W1,
        include_site_sign: false,
    };
    let t = trefoil();
    let (d1, _) = pinch_map(&t, "b1", "s1", &conv).unwrap();
    let (d2, _) = pinch_map(&d1, "b2", "s2", &conv).unwrap();
    let dga2 = Dga::differential(&d2).unwrap();
    eprintln!("after two pinches:\n{}", dga2.render());
    for root in ["a1", "a2"] {
      for m in 1..=3 {
        let ds = pinch_disks_capped(&d2, root, "b3", "s3", false, m).unwrap();
        eprintln!("pinch disks ({root}; b3) M={m}: {}", ds.len());
        for d in &ds {
            let w: Vec<String> = d.letters.iter().map(|l| match l {
                Letter::Chord(c) => c.clone(),
                Letter::Basepoint { sym, sign, exp } => format!("[{}{}^{}]", if *sign<0 {"-"} else {"+"}, sym, exp),
            }).collect();
            eprintln!("  split={:?} sign={} {}", d.split, d.corner_sign, w.join(" "));
        }
      }
    }
}
