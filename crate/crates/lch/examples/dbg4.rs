use lch::disks::{Letter, Mode};
fn main() {
    let t = lch::diagram::trefoil();
    // call run_walks via a tiny reimplementation: use pinch_disks at fixed caps
    for m in 1..=4 {
        let ds = lch::disks::pinch_disks_capped(&t, "a1", "b1", "s1", false, m).unwrap();
        println!("M={m}: {} disks", ds.len());
        for d in &ds {
            let w: Vec<String> = d.letters.iter().map(|l| match l {
                Letter::Chord(c) => c.clone(),
                Letter::Basepoint { sym, sign, exp } => format!("{}{}^{}", if *sign<0 {"-"} else {""}, sym, exp),
            }).collect();
            println!("  root={:?} split={:?} sign={} [{}] windings={:?}", d.root, d.split, d.corner_sign, w.join(" "), d.windings);
        }
    }
    let _ = Mode::Differential;
}
