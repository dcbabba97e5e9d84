use lch::diagram::trefoil;
use lch::disks::{enumerate_disks, pinch_disks};
use std::time::Instant;

fn main() {
    let t = trefoil();
    for c in ["a1", "a2", "b1"] {
        let t0 = Instant::now();
        let ds = enumerate_disks(&t, c).unwrap();
        println!("differential disks at {c}: {} ({:?})", ds.len(), t0.elapsed());
    }
    for other in ["a1", "a2", "b2", "b3"] {
        let t0 = Instant::now();
        let ds = pinch_disks(&t, other, "b1", "s1", false).unwrap();
        println!("pinch disks ({other}; site b1): {} ({:?})", ds.len(), t0.elapsed());
    }
}
