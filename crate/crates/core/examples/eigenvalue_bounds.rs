//! First eigenvalues of the two Laplace-type operators against their lower
//! bounds, including where they are attained.

use hsd::sphere::{check_eigenvalue_bounds, BlockStore};

fn main() {
    let store = BlockStore::new();
    for m in 0..=4 {
        let r = check_eigenvalue_bounds(&store, m, 5).expect("blocks build");
        let mu = r.mu_bound.as_ref().map_or("undefined".to_string(), |b| b.to_string());
        println!(
            "m = {m}: lambda1 = {} >= {} (equal: {}), mu1 = {} >= {mu}  [{:?}]",
            r.lambda1, r.lambda_bound, r.lambda_equality, r.mu1, r.status
        );
        if let Some(c) = &r.minimizers {
            println!("  {} minimizers in degrees {:?}, all in ker {}: {}", c.vectors, c.degrees, c.operator, c.contained);
        }
    }
}
