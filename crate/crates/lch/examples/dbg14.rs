use lch::cobord::{filling_system, pinch_map, Move, PinchConventions, SignWord};
use lch::diagram::trefoil;

fn main() {
    let t = trefoil();
    // find where the pinch anchors land to plan the basepoint moves
    let conv = PinchConventions {
        swap_signs: false,
        left_is_over_out: true,
        correction_sign: 1,
        sign_word: SignWord::W2,
        include_site_sign: true,
    };
    let (d1, _) = pinch_map(&t, "b1", "s1", &conv).unwrap();
    let (d2, _) = pinch_map(&d1, "b2", "s2", &conv).unwrap();
    for b in &d2.basepoints {
        println!("anchor {} (sym {}) sign={} exp={} arc {} (comp {})", b.label, b.sym, b.sign, b.exp, b.arc, b.comp);
    }
    for a in &d2.arcs {
        println!("arc {}: ({},{}) -> ({},{})  [{} bps]", a.id, a.tail.0, a.tail.1, a.head.0, a.head.1, a.basepoints.len());
    }
    for (i, c) in d2.crossings.iter().enumerate() {
        println!("crossing {i} = {}", c.id);
    }
    // try: move the anchors on the bigon arc across b3, then r2, then cap
    for moves in [
        vec![("s1'", true), ("s2'", true)],
        vec![("s1'", false), ("s2'", false)],
        vec![("s2'", true), ("s1'", true)],
        vec![("s2'", false), ("s1'", false)],
    ] {
        let mut script = vec![
            Move::Pinch { chord: "b1".into() },
            Move::Pinch { chord: "b2".into() },
        ];
        for (l, f) in &moves {
            script.push(Move::BasepointMove { label: l.to_string(), forward: *f });
        }
        script.push(Move::R2 { a: "a2".into(), b: "b3".into() });
        script.push(Move::Cap { basepoint: "t1".into() });
        match filling_system(&t, &script, &conv) {
            Ok(sys) => {
                println!("moves {moves:?}: OK");
                for (g, v) in &sys.chord_values {
                    println!("  e({g}) = {v}");
                }
                for (s, v) in &sys.sym_values {
                    println!("  e({s}) = {v}");
                }
                break;
            }
            Err(e) => println!("moves {moves:?}: {e}"),
        }
    }
}
