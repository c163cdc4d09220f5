use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::clifford::{clifford_generator, CliffordKind};
use crate::exact::{Matrix, Rational, Scalar};
use crate::su2::rep_dim;

use super::cache::BlockCache;
use super::coeff::degree_data;
use super::SphereError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    D0,
    Dplus,
    Dminus,
    /// `D⁺_{m-2} D⁻_m`
    DplusDminus,
    /// `D⁻_{m+2} D⁺_m`
    DminusDplus,
    /// `Δ_m = D⁰D⁰ + D⁺_{m-2}D⁻_m`
    Lap,
    /// `Δ̃_m = D⁰D⁰ + D⁻_{m+2}D⁺_m`
    LapTilde,
    /// `Σ Z_i²` acting on the function factor.
    ZSquaredSum,
}

impl BlockKind {
    pub const ALL: [BlockKind; 8] = [
        BlockKind::D0,
        BlockKind::Dplus,
        BlockKind::Dminus,
        BlockKind::DplusDminus,
        BlockKind::DminusDplus,
        BlockKind::Lap,
        BlockKind::LapTilde,
        BlockKind::ZSquaredSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BlockKind::D0 => "d0",
            BlockKind::Dplus => "dplus",
            BlockKind::Dminus => "dminus",
            BlockKind::DplusDminus => "dplus-dminus",
            BlockKind::DminusDplus => "dminus-dplus",
            BlockKind::Lap => "lap",
            BlockKind::LapTilde => "lap-tilde",
            BlockKind::ZSquaredSum => "z-squared-sum",
        }
    }

    /// Spin of the codomain for domain spin `m`.
    pub fn target(self, m: i64) -> i64 {
        match self {
            BlockKind::Dplus => m + 2,
            BlockKind::Dminus => m - 2,
            _ => m,
        }
    }

    pub fn is_square(self) -> bool {
        !matches!(self, BlockKind::Dplus | BlockKind::Dminus)
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BlockKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BlockKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown operator `{s}`"))
    }
}

/// `W(n, m) = span{f_ab} ⊗ V_m`, basis `f_ab ⊗ z^j` at `(a(n+1)+b)(m+1)+j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SectionSpace {
    pub n: u32,
    pub m: i64,
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        let f = self.n as usize + 1;
        f * f * rep_dim(self.m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorBlock {
    pub kind: BlockKind,
    pub domain: SectionSpace,
    pub codomain: SectionSpace,
    pub matrix: Matrix,
}

impl OperatorBlock {
    pub fn m(&self) -> i64 {
        self.domain.m
    }

    pub fn n(&self) -> u32 {
        self.domain.n
    }
}

/// `Σ_i Z_i ⊗ ρ^kind_m(e_i)`: the first-order part of `D^kind_m` on `W(n, m)`.
///
/// `Z_i` preserves the span of the `f_ab`, so applying the operator to each
/// basis section and re-expressing the result collapses to this Kronecker sum
/// of the field matrices and the Clifford matrices.
fn first_order(kind: CliffordKind, m: i64, n: u32) -> Result<Matrix, SphereError> {
    let data = degree_data(n)?;
    let f = data.basis.len();
    let (rows, cols) = (f * rep_dim(kind.target(m)), f * rep_dim(m));
    Ok((0..3).fold(Matrix::zeros(rows, cols), |acc, i| {
        &acc + &data.z[i].kron(&clifford_generator(kind, m, i))
    }))
}

/// Assembles a block from scratch, composites included.
pub fn build_block(store: &BlockStore, kind: BlockKind, m: i64, n: u32) -> Result<Matrix, SphereError> {
    let get = |k, mm| store.get(k, mm, n);
    Ok(match kind {
        BlockKind::D0 => {
            let dim = SectionSpace { n, m }.dim();
            let scalar = Rational::from_integer(m * (m + 2)) * Rational::new(1, 2);
            &first_order(CliffordKind::Zero, m, n)? + &Matrix::scalar_identity(dim, &Scalar::real(scalar))
        }
        BlockKind::Dplus => first_order(CliffordKind::Plus, m, n)?,
        BlockKind::Dminus => first_order(CliffordKind::Minus, m, n)?,
        BlockKind::DplusDminus => &get(BlockKind::Dplus, m - 2)?.matrix * &get(BlockKind::Dminus, m)?.matrix,
        BlockKind::DminusDplus => &get(BlockKind::Dminus, m + 2)?.matrix * &get(BlockKind::Dplus, m)?.matrix,
        BlockKind::Lap | BlockKind::LapTilde => {
            let d0 = get(BlockKind::D0, m)?;
            let second = if kind == BlockKind::Lap { BlockKind::DplusDminus } else { BlockKind::DminusDplus };
            &(&d0.matrix * &d0.matrix) + &get(second, m)?.matrix
        }
        BlockKind::ZSquaredSum => degree_data(n)?.z_squared_sum.kron(&Matrix::identity(rep_dim(m))),
    })
}

/// Memoizing block source, optionally backed by an on-disk cache.
///
/// Blocks are immutable and shared through `Arc`, so one store can serve many
/// worker threads.
#[derive(Default)]
pub struct BlockStore {
    memo: Mutex<HashMap<(BlockKind, i64, u32), Arc<OperatorBlock>>>,
    disk: Option<BlockCache>,
}

impl BlockStore {
    pub fn new() -> Self {
        BlockStore::default()
    }

    pub fn with_cache(cache: BlockCache) -> Self {
        BlockStore { memo: Mutex::default(), disk: Some(cache) }
    }

    /// Process-wide store without a disk cache.
    pub fn global() -> &'static BlockStore {
        static STORE: OnceLock<BlockStore> = OnceLock::new();
        STORE.get_or_init(BlockStore::new)
    }

    /// Block of `kind` on `W(n, m)`; negative `m` gives zero-dimensional spaces.
    pub fn get(&self, kind: BlockKind, m: i64, n: u32) -> Result<Arc<OperatorBlock>, SphereError> {
        if let Some(b) = self.memo.lock().expect("block memo poisoned").get(&(kind, m, n)) {
            return Ok(Arc::clone(b));
        }
        let domain = SectionSpace { n, m };
        let codomain = SectionSpace { n, m: kind.target(m) };
        let shape = (codomain.dim(), domain.dim());
        let cached = match (&self.disk, m >= 0) {
            (Some(c), true) => c.load(kind, m as u32, n, shape)?,
            _ => None,
        };
        let matrix = match cached {
            Some(mat) => mat,
            None => {
                let mat = build_block(self, kind, m, n)?;
                if let (Some(c), true) = (&self.disk, m >= 0) {
                    c.store(kind, m as u32, n, &mat)?;
                }
                mat
            }
        };
        debug_assert_eq!(matrix.shape(), shape);
        let block = Arc::new(OperatorBlock { kind, domain, codomain, matrix });
        let mut memo = self.memo.lock().expect("block memo poisoned");
        Ok(Arc::clone(memo.entry((kind, m, n)).or_insert(block)))
    }
}

/// [`BlockStore::get`] on the process-wide store.
pub fn operator_block(kind: BlockKind, m: u32, n: u32) -> Result<Arc<OperatorBlock>, SphereError> {
    BlockStore::global().get(kind, m as i64, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn constants_only_at_degree_zero() {
        let b = operator_block(BlockKind::D0, 1, 0).unwrap();
        assert_eq!(b.matrix, Matrix::scalar_identity(2, &Scalar::real(q(3, 2))));
        let b = operator_block(BlockKind::D0, 2, 0).unwrap();
        assert_eq!(b.matrix, Matrix::scalar_identity(3, &Scalar::int(4)));
        let b = operator_block(BlockKind::Dminus, 2, 0).unwrap();
        assert_eq!(b.matrix.shape(), (1, 3));
        assert!(b.matrix.is_zero());
    }

    #[test]
    fn shapes_follow_spins() {
        let b = operator_block(BlockKind::Dplus, 1, 2).unwrap();
        assert_eq!(b.matrix.shape(), (9 * 4, 9 * 2));
        let b = operator_block(BlockKind::Dminus, 1, 1).unwrap();
        assert_eq!(b.matrix.shape(), (0, 8));
        let b = operator_block(BlockKind::Lap, 0, 2).unwrap();
        assert!(b.matrix.is_zero());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in BlockKind::ALL {
            assert_eq!(k.name().parse::<BlockKind>().unwrap(), k);
        }
    }
}
