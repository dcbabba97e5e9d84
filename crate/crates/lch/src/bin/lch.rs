fn main() { println!("lch"); }
