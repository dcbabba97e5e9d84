use lch::dga::Dga;
use lch::diagram::{pinch_surgery, trefoil};
use lch::disks::pinch_disks_capped;

fn main() {
    let t = trefoil();
    let d1 = pinch_surgery(&t, "b1", "s1", false).unwrap();
    let d2 = pinch_surgery(&d1, "b2", "s2", false).unwrap();
    let dga2 = Dga::differential(&d2).unwrap();
    eprintln!("{}", dga2.render());
    for (i, c) in d2.crossings.iter().enumerate() {
        eprintln!("crossing {i}: {}", c.id);
    }
    for a in &d2.arcs {
        eprintln!("arc {}: ({},{}) -> ({},{})", a.id, a.tail.0, a.tail.1, a.head.0, a.head.1);
    }
    std::env::set_var("LCH_DISK_DEBUG_EMIT", "1");
    let ds = pinch_disks_capped(&d2, "a1", "b3", "s3", false, 2).unwrap();
    eprintln!("(a1; b3) cap=2: {} disks", ds.len());
}
