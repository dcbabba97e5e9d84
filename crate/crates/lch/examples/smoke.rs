use lch::dga::Dga;
use lch::diagram::{trefoil, unknot};

fn main() {
    let u = unknot();
    println!("unknot: V={} E={} F={} outer={}", u.crossings.len(), u.arcs.len(), u.faces.len(), u.outer_face);
    print!("{}", u.validate());
    println!("tb = {:?}", u.compute_tb());
    match Dga::differential(&u) {
        Ok(dga) => {
            print!("{}", dga.render());
            println!("degrees: {:?}", dga.check_degrees().err());
            println!("d2: {}", dga.check_d_squared().unwrap());
        }
        Err(e) => println!("dga error: {e}"),
    }
    println!("---- trefoil ----");
    let t = trefoil();
    println!("trefoil: V={} E={} F={}", t.crossings.len(), t.arcs.len(), t.faces.len());
    println!("tb = {:?}", t.compute_tb());
    match Dga::differential(&t) {
        Ok(dga) => {
            print!("{}", dga.render());
            println!("degrees: {:?}", dga.check_degrees().err());
            println!("d2: {}", dga.check_d_squared().unwrap());
        }
        Err(e) => println!("dga error: {e}"),
    }
}
