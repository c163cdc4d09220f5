use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::exact::{monomials_of_degree, Matrix, Poly4, Scalar, VectorField};

use super::SphereError;

/// Matrix coefficients `f_ab` of `ρ_n(h(x))`, where `h(x)` is the point of
/// `S³ ⊂ ℝ⁴` viewed in `SU(2)`:
///
/// ```text
/// h(x) = [[x₄ + i x₁,  x₂ + i x₃],
///         [-x₂ + i x₃, x₄ - i x₁]]
/// ```
///
/// Entry `(a, b)` sits at index `a(n+1) + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffBasis {
    pub n: u32,
    pub entries: Vec<Poly4>,
}

impl CoeffBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * (self.n as usize + 1) + b
    }

    /// Coefficients of `p` (homogeneous of degree `n`) in the monomial basis of
    /// [`monomials_of_degree`], as a column.
    pub fn monomial_column(&self, p: &Poly4) -> Matrix {
        let monos = monomials_of_degree(self.n);
        Matrix::column_vector(monos.iter().map(|e| p.coefficient(e)).collect())
    }

    /// Monomial-coefficient matrix with one column per `f_ab`.
    pub fn monomial_matrix(&self) -> Matrix {
        let cols: Vec<Matrix> = self.entries.iter().map(|p| self.monomial_column(p)).collect();
        Matrix::from_columns(monomials_of_degree(self.n).len(), &cols)
    }
}

fn coordinate_entries() -> [Poly4; 4] {
    let x = |i| Poly4::var(i);
    let ix = |i| Poly4::var(i).scale(&Scalar::i());
    [
        &x(3) + &ix(0),  // a
        &x(1) + &ix(2),  // b
        &-&x(1) + &ix(2), // c
        &x(3) - &ix(0),  // d
    ]
}

fn upoly_mul(p: &[Poly4], q: &[Poly4]) -> Vec<Poly4> {
    let mut out = vec![Poly4::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Expands `ρ_n(h(x))` symbolically: column `b` holds the `z`-coefficients of
/// `(b z + d)^{n-b} (a z + c)^b`.
///
/// Fails if the `(n+1)²` entries are linearly dependent.
pub fn coeff_basis(n: u32) -> Result<CoeffBasis, SphereError> {
    let [a, b, c, d] = coordinate_entries();
    let size = n as usize + 1;
    let mut columns = Vec::with_capacity(size);
    for k in 0..=n {
        let mut p = vec![Poly4::one()];
        for _ in 0..n - k {
            p = upoly_mul(&p, &[d.clone(), b.clone()]);
        }
        for _ in 0..k {
            p = upoly_mul(&p, &[c.clone(), a.clone()]);
        }
        columns.push(p);
    }
    let entries = (0..size).flat_map(|row| columns.iter().map(move |col| col[row].clone())).collect();
    let basis = CoeffBasis { n, entries };
    let rank = basis.monomial_matrix().rank();
    if rank != size * size {
        return Err(SphereError::Internal(format!("degree {n} matrix coefficients have rank {rank}, expected {}", size * size)));
    }
    Ok(basis)
}

/// Everything about degree `n` that does not depend on the spin: the basis and
/// the matrices of the three invariant vector fields on it.
#[derive(Debug)]
pub struct DegreeData {
    pub basis: CoeffBasis,
    /// `z[i]` has `Z_{i+1} f_c = Σ_r z[i][r, c] f_r`.
    pub z: [Matrix; 3],
    /// `Σ Z_i²` on the same basis.
    pub z_squared_sum: Matrix,
}

fn build_degree(n: u32) -> Result<DegreeData, SphereError> {
    let basis = coeff_basis(n)?;
    let mono = basis.monomial_matrix();
    let mut z = Vec::with_capacity(3);
    for i in 0..3 {
        let field = VectorField::sphere_field(i);
        let images: Vec<Matrix> = basis.entries.iter().map(|f| basis.monomial_column(&field.apply(f))).collect();
        let rhs = Matrix::from_columns(mono.rows(), &images);
        let zi = mono.solve(&rhs).map_err(|e| {
            SphereError::Internal(format!("Z{} does not preserve degree-{n} matrix coefficients: {e}", i + 1))
        })?;
        z.push(zi);
    }
    let z: [Matrix; 3] = z.try_into().expect("three fields");
    let z_squared_sum = z.iter().fold(Matrix::zeros(basis.len(), basis.len()), |acc, zi| &acc + &(zi * zi));
    Ok(DegreeData { basis, z, z_squared_sum })
}

/// Memoized [`DegreeData`]; safe to call from many threads.
pub fn degree_data(n: u32) -> Result<Arc<DegreeData>, SphereError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<DegreeData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().expect("degree cache poisoned").get(&n) {
        return Ok(Arc::clone(d));
    }
    let data = Arc::new(build_degree(n)?);
    let mut guard = cache.lock().expect("degree cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(data)))
}
