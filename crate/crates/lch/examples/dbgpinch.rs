use lch::diagram::{pinch_surgery, trefoil};

fn main() {
    let t = trefoil();
    for a in &t.arcs {
        println!("arc {} comp{}: {:?} -> {:?}  pts={}", a.id, a.comp, a.tail, a.head, a.path.len());
    }
    match pinch_surgery(&t, "b1", "s1", false) {
        Ok(nd) => println!("ok: {} crossings", nd.crossings.len()),
        Err(e) => println!("err: {e}"),
    }
}
