//! Checks the Clifford-type relations, adjointness and equivariance of the
//! three generalized Clifford maps for small spins.

use hsd::clifford::{clifford_matrix, verify_algebra, CliffordKind};
use hsd::su2::LieVector;

fn main() {
    let report = verify_algebra(6);
    for e in report.failures() {
        println!("FAIL {} {:?}", e.check, e.params);
    }
    let s = report.summary();
    println!("{} identity checks passed, {} failed", s.pass, s.fail);

    // spin 1/2: the zero-weight map is ordinary Clifford multiplication
    let e1 = clifford_matrix(CliffordKind::Zero, 1, &LieVector::e1());
    println!("rho^0_1(e1) =\n{e1}");
    println!("square = -1: {}", (&(&e1 * &e1) + &hsd::Matrix::identity(2)).is_zero());
}
