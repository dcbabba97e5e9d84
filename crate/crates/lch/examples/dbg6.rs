use lch::cobord::{pinch_map, PinchConventions, SignWord};
use lch::dga::Dga;
use lch::diagram::{pinch_surgery, trefoil};

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
    let d3 = pinch_surgery(&d2, "b3", "s3", conv.swap_signs).unwrap();
    let dga3 = Dga::differential(&d3).unwrap();
    eprintln!("after three pinches:\n{}", dga3.render());
    eprintln!("d2 component count: {}", d2.components.len());
    eprintln!("d3 component count: {}", d3.components.len());
    for (i, b) in d3.basepoints.iter().enumerate() {
        eprintln!("bp {i}: {} sign={} exp={} comp={}", b.label, b.sign, b.exp, b.comp);
    }
}
