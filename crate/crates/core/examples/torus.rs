//! Kernels of the higher spin operators on the flat torus.

use hsd::clifford::torus_kernel_dims;

fn main() {
    for m in 0..=6 {
        let t = torus_kernel_dims(m);
        let d0 = t.d0.map_or("-".to_string(), |d| d.to_string());
        println!("m = {m}: dim ker D0 = {d0:>2}, dim ker D+ = {}, certified {}", t.dplus, t.certified);
    }
}
