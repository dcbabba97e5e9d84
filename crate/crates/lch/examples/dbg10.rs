use lch::dga::Dga;
use lch::diagram::{pinch_surgery, trefoil};

fn main() {
    let t = trefoil();
    eprintln!("source:\n{}", Dga::differential(&t).unwrap().render());
    let d1 = pinch_surgery(&t, "b1", "s1", false).unwrap();
    eprintln!("after pinch b1 (swap=false):\n{}", Dga::differential(&d1).unwrap().render());
    let d1s = pinch_surgery(&t, "b1", "s1", true).unwrap();
    eprintln!("after pinch b1 (swap=true):\n{}", Dga::differential(&d1s).unwrap().render());
}
