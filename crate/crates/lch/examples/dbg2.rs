fn main() {
    eprintln!("building trefoil...");
    let t = lch::diagram::trefoil();
    eprintln!("built: {} crossings", t.crossings.len());
    eprintln!("enumerating at b1...");
    let ds = lch::disks::enumerate_disks(&t, "b1").unwrap();
    eprintln!("b1: {}", ds.len());
    eprintln!("enumerating at a1...");
    let ds = lch::disks::enumerate_disks(&t, "a1").unwrap();
    eprintln!("a1: {}", ds.len());
}
