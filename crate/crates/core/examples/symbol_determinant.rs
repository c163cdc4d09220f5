//! Determinant of the principal symbol of D0 as a polynomial in ξ.

use hsd::clifford::{symbol_det, symbol_det_poly};
use hsd::su2::LieVector;
use hsd::Scalar;

fn main() {
    for m in 0..=4 {
        println!("m = {m}: det = {}", symbol_det_poly(m));
    }
    let xi = LieVector::new(Scalar::int(1), Scalar::int(2), Scalar::int(2));
    for m in [1, 3] {
        println!("|ξ| = 3, m = {m}: det = {}", symbol_det(m, &xi));
    }
}
