use lch::diagram::{pinch_surgery, trefoil};

fn main() {
    let t = trefoil();
    let d1 = pinch_surgery(&t, "b1", "s1", false).unwrap();
    let d2 = pinch_surgery(&d1, "b2", "s2", false).unwrap();
    for (i, c) in d2.crossings.iter().enumerate() {
        eprintln!("crossing {i} = {} over_parity={} smooth={}", c.id, c.over_parity, c.smooth_sign());
        for p in 0..4u8 {
            let pa = &c.ports[p as usize];
            eprintln!(
                "  port {p}: arc {} {:?} dir=({:.3},{:.3})  reeb(q{p})={}",
                pa.arc,
                pa.end,
                pa.dir.x.to_string(),
                pa.dir.y.to_string(),
                c.reeb_sign(p)
            );
        }
    }
    for (i, b) in d2.basepoints.iter().enumerate() {
        eprintln!("bp {i}: {} on arc {} comp {}", b.label, b.arc, b.comp);
    }
}
