fn main() {
    let t = lch::diagram::trefoil();
    for other in ["b2", "a1"] {
        eprintln!("pinch disks ({other}; site b1)...");
        let t0 = std::time::Instant::now();
        let ds = lch::disks::pinch_disks(&t, other, "b1", "s1", false).unwrap();
        eprintln!("  -> {} in {:?}", ds.len(), t0.elapsed());
    }
}
