use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LinAlgError, Rational, Scalar};

/// Dense row-major matrix over [`Scalar`].
///
/// Values are immutable once built; every operation returns a fresh matrix.
/// Zero-sized shapes are allowed and model maps into or out of the zero space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
///
/// Pivot rule: columns are scanned left to right and the pivot of a column is
/// the first row (lowest index, after previously fixed pivot rows) holding a
/// nonzero entry. This makes every derived quantity, nullspace bases included,
/// a deterministic function of the input.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Matrix::scalar_identity(n, &Scalar::one())
    }

    pub fn scalar_identity(n: usize, s: &Scalar) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { s.clone() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix whose columns are the given column vectors.
    pub fn from_columns(rows: usize, columns: &[Matrix]) -> Self {
        for c in columns {
            assert_eq!((c.rows, c.cols), (rows, 1), "from_columns expects column vectors");
        }
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j].data[i].clone())
    }

    pub fn column_vector(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        Matrix::new(n, 1, entries)
    }

    pub fn diag(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.data[k * n + k] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |i, _| self.get(i, j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        *e == Scalar::one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<((usize, usize), &Scalar)> {
        self.data
            .iter()
            .position(|e| !e.is_zero())
            .map(|p| ((p / self.cols, p % self.cols), &self.data[p]))
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        self.map(|e| if e.is_zero() { Scalar::zero() } else { e * s })
    }

    pub fn scale_rational(&self, r: &Rational) -> Matrix {
        self.map(|e| e.scale(r))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Kronecker product with `self` as the outer factor.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + k) * c + j * rhs.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `self - s·I`.
    pub fn shift(&self, s: &Scalar) -> Matrix {
        assert!(self.is_square(), "shift of non-square matrix");
        let mut out = self.clone();
        for i in 0..self.rows {
            let k = i * self.cols + i;
            out.data[k] = &out.data[k] - s;
        }
        out
    }

    /// The matrix restricted to the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Connected components of the graph on indices `0..n` with an edge `i - j`
    /// whenever any of the square matrices `mats` has a nonzero `(i, j)` entry.
    ///
    /// Each component is sorted; components are ordered by their least index.
    /// Every matrix is block diagonal with respect to this partition.
    pub fn joint_components(mats: &[&Matrix]) -> Vec<Vec<usize>> {
        let n = mats.first().map_or(0, |a| a.rows);
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in mats {
            assert!(a.rows == n && a.cols == n, "joint components need square matrices of one size");
            for i in 0..n {
                for j in 0..n {
                    if !a.get(i, j).is_zero() {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        if ri != rj {
                            parent[ri.max(rj)] = ri.min(rj);
                        }
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// Splits the matrix into independent pieces: connected components of the
    /// bipartite graph joining row `i` and column `j` when entry `(i, j)` is
    /// nonzero. Returns `(rows, cols)` per component, skipping row-only ones.
    pub fn bipartite_components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (r, c) = (self.rows, self.cols);
        let mut parent: Vec<usize> = (0..r + c).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..r {
            for j in 0..c {
                if !self.get(i, j).is_zero() {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, r + j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
        for x in 0..r + c {
            let root = find(&mut parent, x);
            let g = groups.entry(root).or_default();
            if x < r {
                g.0.push(x);
            } else {
                g.1.push(x - r);
            }
        }
        let mut out: Vec<_> = groups.into_values().filter(|g| !g.1.is_empty()).collect();
        out.sort_by_key(|g| g.1[0]);
        out
    }

    /// [`Matrix::nullity`] computed piecewise over [`Matrix::bipartite_components`].
    pub fn block_nullity(&self) -> usize {
        self.bipartite_components()
            .iter()
            .map(|(rows, cols)| cols.len() - self.submatrix(rows, cols).rank())
            .sum()
    }

    /// Kernel basis assembled from the kernels of the independent pieces.
    pub fn block_nullspace(&self) -> Vec<Matrix> {
        let mut out = Vec::new();
        for (rows, cols) in self.bipartite_components() {
            for v in self.submatrix(&rows, &cols).nullspace() {
                let mut full = vec![Scalar::zero(); self.cols];
                for (k, &j) in cols.iter().enumerate() {
                    full[j] = v.get(k, 0).clone();
                }
                out.push(Matrix::column_vector(full));
            }
        }
        out
    }

    fn to_row_vecs(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }

    /// Gauss–Jordan reduction to reduced row echelon form.
    pub fn row_echelon(&self) -> RowEchelon {
        let rows = if self.cols == 0 { vec![Vec::new(); self.rows] } else { self.to_row_vecs() };
        rref(rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel as column vectors, one per non-pivot column.
    ///
    /// The vector for free column `f` has a one at `f`, zeros at the other free
    /// columns and the negated reduced entries at the pivot columns.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let ech = self.row_echelon();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &ech.pivots {
                v[p] = true;
            }
            v
        };
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = -&ech.rows[r][f];
                }
                Matrix::column_vector(v)
            })
            .collect()
    }

    /// Determinant by pivoted elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut rows = self.to_row_vecs();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let pivot = rows[c][c].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            let nz: Vec<usize> = (c + 1..n).filter(|&j| !rows[c][j].is_zero()).collect();
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let factor = &rows[r][c] * &inv;
                for &j in &nz {
                    let t = &factor * &rows[c][j];
                    rows[r][j] -= &t;
                }
                rows[r][c] = Scalar::zero();
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Matrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::Shape(format!("cannot invert {}x{} matrix", self.rows, self.cols)));
        }
        if self.is_diagonal() {
            let mut d = Vec::with_capacity(self.rows);
            for i in 0..self.rows {
                d.push(self.get(i, i).inv().ok_or(LinAlgError::Singular)?);
            }
            return Ok(Matrix::diag(d));
        }
        self.solve(&Matrix::identity(self.rows)).map_err(|e| match e {
            LinAlgError::Underdetermined(_) | LinAlgError::Inconsistent => LinAlgError::Singular,
            other => other,
        })
    }

    /// Solves `self · X = rhs` exactly, requiring a unique solution.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, LinAlgError> {
        if rhs.rows != self.rows {
            return Err(LinAlgError::Shape(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let width = self.cols + rhs.cols;
        let rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(rhs.row(i)).cloned().collect())
            .collect();
        let ech = rref(rows, self.cols);
        let rank = ech.pivots.len();
        if ech.rows[rank..].iter().any(|row| row[self.cols..width].iter().any(|e| !e.is_zero())) {
            return Err(LinAlgError::Inconsistent);
        }
        if rank < self.cols {
            return Err(LinAlgError::Underdetermined(self.cols - rank));
        }
        let mut out = Matrix::zeros(self.cols, rhs.cols);
        for (r, &pc) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                out.data[pc * rhs.cols + j] = ech.rows[r][self.cols + j].clone();
            }
        }
        Ok(out)
    }

    fn check_same_shape(&self, rhs: &Matrix, op: &str) {
        assert_eq!(
            self.shape(),
            rhs.shape(),
            "shape mismatch in matrix {op}: {:?} vs {:?}",
            self.shape(),
            rhs.shape()
        );
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect())
    }

    fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch in matrix product: {:?} * {:?}",
            self.shape(),
            rhs.shape()
        );
        let c = rhs.cols;
        let rhs_nz: Vec<Vec<usize>> =
            (0..rhs.rows).map(|k| (0..c).filter(|&j| !rhs.data[k * c + j].is_zero()).collect()).collect();
        let mut data = vec![Scalar::zero(); self.rows * c];
        for i in 0..self.rows {
            let out = &mut data[i * c..(i + 1) * c];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &j in &rhs_nz[k] {
                    let t = a * &rhs.data[k * c + j];
                    out[j] += &t;
                }
            }
        }
        Matrix::new(self.rows, c, data)
    }
}

/// Reduces `rows` to RREF, choosing pivots only among the first `pivot_cols` columns.
fn rref(mut rows: Vec<Vec<Scalar>>, pivot_cols: usize) -> RowEchelon {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let nz: Vec<usize> = (c..rows[r].len()).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &nz {
            rows[r][j] = &rows[r][j] * &inv;
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nz {
                let t = &factor * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    RowEchelon { rows, pivots }
}

/// Adjoint of `a: V_src → V_dst` with respect to `⟨u, v⟩_G = v* G u`,
/// that is `G_src⁻¹ a* G_dst`.
pub fn gram_adjoint(a: &Matrix, g_src: &Matrix, g_dst: &Matrix) -> Result<Matrix, LinAlgError> {
    if g_src.rows != a.cols || g_dst.rows != a.rows {
        return Err(LinAlgError::Shape(format!(
            "gram shapes {:?}/{:?} do not fit map of shape {:?}",
            g_src.shape(),
            g_dst.shape(),
            a.shape()
        )));
    }
    let g_src_inv = g_src.inverse()?;
    Ok(&(&g_src_inv * &a.conj_transpose()) * g_dst)
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Mul<Matrix> for Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Matrix) -> Matrix {
        self.matmul(&rhs)
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs, "sum");
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add<Matrix> for Matrix {
    type Output = Matrix;
    fn add(self, rhs: Matrix) -> Matrix {
        &self + &rhs
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.check_same_shape(rhs, "difference");
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub<Matrix> for Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Matrix) -> Matrix {
        &self - &rhs
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|e| -e)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

/// Serialized as `{"rows": r, "cols": c, "entries": [[{"re", "im"}, ...], ...]}`.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixDoc {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows).map(|i| self.row(i).to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(deserializer)?;
        if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
            return Err(serde::de::Error::custom(format!(
                "matrix entries do not match declared shape {}x{}",
                doc.rows, doc.cols
            )));
        }
        Ok(Matrix::new(doc.rows, doc.cols, doc.entries.into_iter().flatten().collect()))
    }
}
