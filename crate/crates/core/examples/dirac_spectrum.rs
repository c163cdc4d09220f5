//! Exact spectrum of the spin-m Dirac operator on the round 3-sphere,
//! degree by degree.

use hsd::sphere::{spectrum_block, BlockKind, BlockStore};

fn main() {
    let m: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let store = BlockStore::new();
    for n in 0..=4 {
        let r = spectrum_block(&store, BlockKind::D0, m, n).expect("block builds");
        let lines: Vec<String> = r.eigenvalues().map(|(v, k)| format!("{v} (x{k})")).collect();
        println!("n = {n}, dim {:>3}: {}  [{:?}]", r.dimension, lines.join(", "), r.status);
    }
}
