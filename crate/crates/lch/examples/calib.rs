use lch::cobord::{filling_system, pinch_map, Move, PinchConventions, SignWord};
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
    let mut winners = Vec::new();
    for swap in [false, true] {
        for left in [false, true] {
            for corr in [1i8, -1] {
                for sw in [SignWord::W1, SignWord::W2, SignWord::None] {
                    for site in [true, false] {
                        let conv = PinchConventions {
                            swap_signs: swap,
                            left_is_over_out: left,
                            correction_sign: corr,
                            sign_word: sw,
                            include_site_sign: site,
                        };
                        if pinch_map(&t, "b1", "s1", &conv).is_ok() {
                            let full = filling_system(&t, &script, &conv);
                            eprintln!(
                                "PINCH-OK swap={swap} left={left} corr={corr} sw={sw:?} site={site} full={}",
                                match &full { Ok(_) => "OK".into(), Err(e) => format!("{e}") }
                            );
                            if full.is_ok() {
                                winners.push((swap, left, corr, sw, site));
                            }
                        }
                    }
                }
            }
        }
    }
    eprintln!("winners: {winners:?}");
    if let Some((swap, left, corr, sw, site)) = winners.first() {
        let conv = PinchConventions {
            swap_signs: *swap,
            left_is_over_out: *left,
            correction_sign: *corr,
            sign_word: *sw,
            include_site_sign: *site,
        };
        let sys = filling_system(&t, &script, &conv).unwrap();
        for (g, v) in &sys.chord_values {
            eprintln!("  e({g}) = {v}");
        }
        for (s, v) in &sys.sym_values {
            eprintln!("  e({s}) = {v}");
        }
    }
}
