//! Kernel dimensions with their finiteness certificates.

use hsd::sphere::{dplus_kernel_formula, kernel_dimension, BlockKind, BlockStore};

fn main() {
    let store = BlockStore::new();
    for m in 0..=3 {
        let r = kernel_dimension(&store, BlockKind::Dplus, m, 6).expect("degree 6 suffices for m ≤ 3");
        println!("dim ker D+_{m} = {:?} (formula {})", r.dimension, dplus_kernel_formula(m));
        println!("  {}", r.certificate);
    }
    let r = kernel_dimension(&store, BlockKind::D0, 2, 3).unwrap();
    println!("dim ker D0_2 = {:?}: {}", r.dimension, r.certificate);
    match kernel_dimension(&store, BlockKind::Dplus, 4, 2) {
        Err(e) => println!("m = 4 with n_max = 2: {e}"),
        Ok(_) => unreachable!(),
    }
}
