//! Exact rational and integer linear algebra.
//!
//! Everything downstream (cone duality, face lattices, Chow ring quotients,
//! lattice quotients) reduces to row reduction over `BigRational` or to the
//! Smith normal form of a `BigInt` matrix, both of which live here.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type QVec = Vec<Rational>;
pub type ZVec = Vec<BigInt>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(entries: &[i64]) -> QVec {
    entries.iter().map(|&e| int(e)).collect()
}

pub fn zvec(entries: &[i64]) -> ZVec {
    entries.iter().map(|&e| BigInt::from(e)).collect()
}

pub fn to_qvec(v: &[BigInt]) -> QVec {
    v.iter().map(|e| Rational::from_integer(e.clone())).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Least common multiple of the coordinate denominators; `1` for lattice points.
pub fn denominator_lcm(v: &[Rational]) -> BigInt {
    v.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// The primitive integer vector on the ray through `v` (zero maps to zero).
pub fn primitive(v: &[Rational]) -> ZVec {
    let scale = denominator_lcm(v);
    let ints: ZVec = v
        .iter()
        .map(|x| (x * Rational::from_integer(scale.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// How the eliminator picks a pivot inside a column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotStrategy {
    /// Nonzero entry with the fewest numerator plus denominator bits.
    #[default]
    MinBits,
    /// Topmost nonzero entry.
    FirstNonzero,
}

fn bit_size(x: &Rational) -> u64 {
    x.numer().bits() + x.denom().bits()
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "QMatrix{:?}", rows)
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[QVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
            data.extend(r.iter().cloned());
        }
        QMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let qrows: Vec<QVec> = rows.iter().map(|r| qvec(r)).collect();
        Self::from_rows(cols, &qrows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<QVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> QVec {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self, strategy: PivotStrategy) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let candidates = (r..m.rows).filter(|&i| !m.get(i, c).is_zero());
            let pick = match strategy {
                PivotStrategy::FirstNonzero => candidates.min(),
                PivotStrategy::MinBits => candidates.min_by_key(|&i| (bit_size(m.get(i, c)), i)),
            };
            let Some(p) = pick else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref(PivotStrategy::default()).1.len()
    }

    pub fn rank_and_kernel(&self) -> (usize, Vec<QVec>) {
        self.rank_and_kernel_with(PivotStrategy::default())
    }

    /// Rank together with a basis of the right kernel `{x : M x = 0}`.
    pub fn rank_and_kernel_with(&self, strategy: PivotStrategy) -> (usize, Vec<QVec>) {
        let (red, pivots) = self.rref(strategy);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(row, free).clone();
            }
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (red, pivots) = aug.rref(PivotStrategy::default());
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Rank of a list of vectors of common length `dim`.
pub fn rank_of(vectors: &[QVec], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(dim, vectors).rank()
}

/// Basis of `{x : <v, x> = 0 for all v in vectors}`.
pub fn orthogonal_complement(vectors: &[QVec], dim: usize) -> Vec<QVec> {
    QMatrix::from_rows(dim, vectors).rank_and_kernel().1
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[ZVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
            data.extend(r.iter().cloned());
        }
        ZMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let zrows: Vec<ZVec> = rows.iter().map(|r| zvec(r)).collect();
        Self::from_rows(cols, &zrows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn at(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ZMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    *out.at(i, j) += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        let rows: Vec<QVec> = (0..self.rows).map(|i| to_qvec(self.row(i))).collect();
        QMatrix::from_rows(self.cols, &rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            *self.at(target, j) += v;
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            *self.at(i, target) += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            *self.at(i, j) = v;
        }
    }
}

/// `left * input * right` is diagonal with entries `diagonal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: ZMatrix,
    pub right: ZMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &ZMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = ZMatrix::identity(rows);
    let mut right = ZMatrix::identity(cols);
    let steps = rows.min(cols);
    let mut diagonal = Vec::with_capacity(steps);

    'outer: for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = a.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -(a.get(i, t) / &pivot);
                a.add_row(i, t, &q);
                left.add_row(i, t, &q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -(a.get(t, j) / &pivot);
                a.add_col(j, t, &q);
                right.add_col(j, t, &q);
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        diagonal.push(a.get(t, t).clone());
    }
    diagonal.resize(steps, BigInt::zero());
    SmithForm { diagonal, left, right }
}

/// Basis of the saturated lattice `Z^dim ∩ span_Q(vectors)`.
pub fn saturated_basis(vectors: &[QVec], dim: usize) -> Vec<ZVec> {
    let rows: Vec<ZVec> = vectors
        .iter()
        .filter(|v| !is_zero_vec(v))
        .map(|v| primitive(v))
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let a = ZMatrix::from_rows(dim, &rows);
    let snf = smith_normal_form(&a);
    let r = snf.rank();
    // Row space of A equals the span of the first r rows of right^{-1}.
    let inv = snf
        .right
        .to_qmatrix()
        .inverse()
        .expect("unimodular transform is invertible");
    (0..r)
        .map(|i| inv.row(i).iter().map(|x| x.to_integer()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &ZMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    fn assert_smith_product(m: &ZMatrix) {
        let s = smith_normal_form(m);
        let prod = s.left.mul(m).mul(&s.right);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expect = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(prod.get(i, j), &expect, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn identity_rank_and_kernel() {
        let (r, k) = QMatrix::identity(2).rank_and_kernel();
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = QMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 1);
        assert_eq!(k, vec![qvec(&[-1, 1])]);
    }

    #[test]
    fn two_by_three_kernel() {
        let m = QMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 2);
        assert_eq!(k.len(), 1);
        // span{(1,-1,1)}
        let v = &k[0];
        assert_eq!(v[0].clone() * int(-1), v[1]);
        assert_eq!(v[0], v[2]);
        assert!(is_zero_vec(&m.mul_vec(v)));
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        let m = QMatrix::from_rows(3, &[]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn smith_examples() {
        assert_eq!(diag(&ZMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(diag(&ZMatrix::from_i64(&[&[1, 1], &[1, -1]])), vec![1, 2]);
        assert_eq!(diag(&ZMatrix::from_i64(&[&[2, 0]])), vec![2]);
        assert_eq!(diag(&ZMatrix::from_i64(&[&[2, 4], &[6, 8]])), vec![2, 4]);
        assert_eq!(diag(&ZMatrix::from_i64(&[&[0, 0], &[0, 3]])), vec![3, 0]);
        assert_eq!(diag(&ZMatrix::from_i64(&[&[2, 0], &[0, 3]])), vec![1, 6]);
        assert_smith_product(&ZMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_smith_product(&ZMatrix::from_i64(&[&[4, 6, 2], &[-2, 3, 7]]));
    }

    #[test]
    fn saturation_of_diagonal() {
        let basis = saturated_basis(&[qvec(&[2, 2])], 2);
        assert_eq!(basis.len(), 1);
        let b = &basis[0];
        assert!(b == &zvec(&[1, 1]) || b == &zvec(&[-1, -1]));
        assert_eq!(saturated_basis(&[qvec(&[0, 0])], 2), Vec::<ZVec>::new());
    }

    #[test]
    fn primitive_and_lcm() {
        assert_eq!(primitive(&[ratio(1, 2), int(1)]), zvec(&[1, 2]));
        assert_eq!(primitive(&[int(-4), int(6)]), zvec(&[-2, 3]));
        assert_eq!(denominator_lcm(&[ratio(1, 3), ratio(1, 2)]), BigInt::from(6));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = QMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, QMatrix::from_i64(&[&[1, -1], &[-1, 2]]));
        assert!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
