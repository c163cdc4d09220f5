use crate::exact::{Matrix, Rational, Scalar};

use super::rep::{gram_matrix, lowering, raising, tensor_action};

/// Irreducible summand `V_j ⊂ V_m ⊗ V_n`.
///
/// `embedding` has the images of `z_j^0 … z_j^j` as columns; `projection` is
/// its Gram-orthogonal left inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgComponent {
    pub j: u32,
    pub embedding: Matrix,
    pub projection: Matrix,
}

impl CgComponent {
    /// `α` with `E* G E = α G_j`; the embedding scaled by `1/√α` is an isometry.
    pub fn isometry_defect(&self, tensor_gram: &Matrix) -> Rational {
        let e = &self.embedding;
        let h = &(&e.conj_transpose() * tensor_gram) * e;
        let g = gram_matrix(self.j);
        (h.get(0, 0) / g.get(0, 0)).re
    }

    /// `E P`, the orthogonal projector onto this summand.
    pub fn projector(&self) -> Matrix {
        &self.embedding * &self.projection
    }
}

/// Gram matrix of `V_m ⊗ V_n` in the tensor `z`-basis.
pub fn tensor_gram(m: u32, n: u32) -> Matrix {
    gram_matrix(m).kron(&gram_matrix(n))
}

/// Decomposes `V_m ⊗ V_n = V_{m+n} ⊕ V_{m+n-2} ⊕ … ⊕ V_{|m-n|}`.
///
/// Each summand is built from its highest-weight vector (the kernel of the
/// total raising operator inside the weight-`j/2` subspace), scaled so its
/// first nonzero coordinate is `1`, and then lowered repeatedly so that the
/// columns correspond to `z_j^j, z_j^{j-1}, …` under the same lowering rule
/// as `V_j` itself. Components are returned in descending `j`.
pub fn cg_decompose(m: u32, n: u32) -> Vec<CgComponent> {
    let dim = (m as usize + 1) * (n as usize + 1);
    let raise = tensor_action(&raising(m), &raising(n));
    let lower = tensor_action(&lowering(m), &lowering(n));
    let gram = tensor_gram(m, n);
    let lo = m.abs_diff(n);
    (lo..=m + n)
        .rev()
        .step_by(2)
        .map(|j| {
            let weight = ((m + n + j) / 2) as usize;
            let idx: Vec<usize> = (0..=m as usize)
                .flat_map(|a| (0..=n as usize).map(move |b| (a, b)))
                .filter(|&(a, b)| a + b == weight)
                .map(|(a, b)| a * (n as usize + 1) + b)
                .collect();
            let restricted = Matrix::from_fn(dim, idx.len(), |r, c| raise.get(r, idx[c]).clone());
            let kernel = restricted.nullspace();
            assert_eq!(kernel.len(), 1, "highest weight space of V_{j} in V_{m}⊗V_{n} must be a line");
            let mut hw = vec![Scalar::zero(); dim];
            for (c, &i) in idx.iter().enumerate() {
                hw[i] = kernel[0].get(c, 0).clone();
            }
            let lead = hw.iter().find(|e| !e.is_zero()).expect("nonzero kernel vector").clone();
            let lead_inv = lead.inv().expect("nonzero lead");
            let hw = Matrix::column_vector(hw.iter().map(|e| e * &lead_inv).collect());

            let mut cols = vec![Matrix::zeros(dim, 1); j as usize + 1];
            cols[j as usize] = hw;
            for k in (1..=j as usize).rev() {
                // lowering on V_j sends z^k to -k z^{k-1}
                let factor = Scalar::int(-(k as i64)).inv().expect("k > 0");
                cols[k - 1] = (&lower * &cols[k]).scale(&factor);
            }
            let embedding = Matrix::from_columns(dim, &cols);
            let ge = &embedding.conj_transpose() * &gram;
            let projection = &(&ge * &embedding).inverse().expect("embedding has full rank") * &ge;
            CgComponent { j, embedding, projection }
        })
        .collect()
}
