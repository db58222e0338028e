//! Direct sums of blocks: the equivalence constants stay at the blockwise
//! extremes while the flattest vector's sup norm goes to zero with the
//! largest block. This is the finite shadow of a semi-normalized basis whose
//! vectors vanish in l-infinity.
//!
//! ```bash
//! cargo run --example direct_sums
//! ```

use l1basis::prop1_direct_sum;

fn main() {
    println!(
        "{:>10} {:>6} {:>8} {:>4} {:>14}",
        "blocks", "dim", "k1", "k2", "sup-norm witness"
    );
    for top in [3usize, 5, 8, 12, 20, 32] {
        let sizes: Vec<usize> = (3..=top).collect();
        let sum = prop1_direct_sum(&sizes).unwrap();
        println!(
            "{:>10} {:>6} {:>8} {:>4} {:>14}",
            format!("3..{top}"),
            sum.basis.dimension(),
            sum.k1.to_string(),
            sum.k2.to_string(),
            sum.sup_norm_witness.to_string()
        );
    }
}
