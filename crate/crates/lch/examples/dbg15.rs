use lch::cobord::{basepoint_move_map, pinch_map, PinchConventions, SignWord};
use lch::diagram::r2_surgery;
use lch::diagram::trefoil;

fn main() {
    let conv = PinchConventions {
        swap_signs: false,
        left_is_over_out: true,
        correction_sign: 1,
        sign_word: SignWord::W2,
        include_site_sign: true,
    };
    let t = trefoil();
    let (d1, _) = pinch_map(&t, "b1", "s1", &conv).unwrap();
    let (d2, _) = pinch_map(&d1, "b2", "s2", &conv).unwrap();
    let (d3, _) = basepoint_move_map(&d2, "s1'", false).unwrap();
    let (d4, _) = basepoint_move_map(&d3, "s2'", false).unwrap();
    eprintln!("before r2: {} crossings, arcs:", d4.crossings.len());
    for a in &d4.arcs {
        eprintln!("  arc {}: ({},{})->({},{}) pts={}", a.id, a.tail.0, a.tail.1, a.head.0, a.head.1, a.path.len());
    }
    for (i, c) in d4.crossings.iter().enumerate() {
        eprintln!("  crossing {i} = {} at {:?}", c.id, c.pos);
    }
    match r2_surgery(&d4, "a2", "b3") {
        Ok(nd) => eprintln!("r2 ok: {} crossings", nd.crossings.len()),
        Err(e) => eprintln!("r2 err: {e}"),
    }
}
