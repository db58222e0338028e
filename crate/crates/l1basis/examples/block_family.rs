//! The flattening block family: for every n > 2 the basis
//! x_1 = (1/n, ..., 1/n), x_i = e_1 + e_i keeps its equivalence constants
//! pinned near (1/5, 2) while its first vector collapses in sup norm.
//!
//! ```bash
//! cargo run --example block_family
//! ```

use l1basis::prop1_block;

fn main() {
    println!("{:>4} {:>10} {:>4} {:>12}", "n", "k1", "k2", "max |x1(i)|");
    for n in 3..=16 {
        let block = prop1_block(n, false).unwrap();
        let ec = block.basis.equivalence_constants();
        let sup = block.basis.vector(0).linf_norm();
        println!(
            "{:>4} {:>10} {:>4} {:>12}",
            n,
            ec.k1.to_string(),
            ec.k2.to_string(),
            sup.to_string()
        );
    }
    println!();
    println!("k1 climbs from 1/5 toward 1/3; k2 stays 2; the sup norm dies off as 1/n.");
}
