//! Decomposes V_m ⊗ V_2 and compares each Clifford map with the matching
//! Clebsch-Gordan projection.

use hsd::clifford::cg_oracle_compare;
use hsd::su2::{cg_decompose, tensor_gram};

fn main() {
    let m = 5;
    let gram = tensor_gram(m, 2);
    for c in cg_decompose(m, 2) {
        println!("V_{} inside V_{m} ⊗ V_2, isometry defect {}", c.j, c.isometry_defect(&gram));
    }
    for e in &cg_oracle_compare(m).entries {
        let sq = e.values.get("squared_constant").map(|v| v.to_string()).unwrap_or_default();
        println!("{:<10} {:?} squared constant {sq}", e.check, e.status);
    }
}
