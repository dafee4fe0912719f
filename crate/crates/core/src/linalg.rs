//! Dense exact linear algebra: row reduction, kernels and a subspace calculus.
//!
//! Vectors are coordinate tuples (`Vec<Scalar>`). Subspaces keep a reduced row
//! echelon basis, so two subspaces are equal exactly when their bases are.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().cloned());
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        if let FieldSpec::Prime(p) = self.field {
            return self.rref_mod(p);
        }
        let mut rows = self.row_vectors();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, k);
            let inv = rows[r][c].inv();
            if !inv.is_one() {
                for x in rows[r].iter_mut() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (Matrix::from_rows(self.field, self.cols, &rows), pivots)
    }

    /// Same elimination on raw residues.
    fn rref_mod(&self, p: u64) -> (Matrix, Vec<usize>) {
        let residue = |x: &Scalar| match x {
            Scalar::Mod { value, .. } => *value,
            Scalar::Rat(_) => unreachable!("prime field matrix holds residues"),
        };
        let cols = self.cols;
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|i| self.row(i).iter().map(residue).collect()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
                continue;
            };
            rows.swap(r, k);
            let inv = self.field.from_i64(rows[r][c] as i64).inv();
            let inv = residue(&inv);
            if inv != 1 {
                for x in rows[r][c..].iter_mut() {
                    *x = *x * inv % p;
                }
            }
            let (before, rest) = rows.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("row r exists");
            for row in before.iter_mut().chain(after.iter_mut()) {
                let f = row[c];
                if f == 0 {
                    continue;
                }
                let g = p - f;
                for (x, &q) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if q != 0 {
                        *x = (*x + g * q) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        let data = rows
            .into_iter()
            .flatten()
            .map(|value| Scalar::Mod { value, p })
            .collect();
        (
            Matrix {
                field: self.field,
                rows: r,
                cols,
                data,
            },
            pivots,
        )
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut vecs = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            vecs.push(v);
        }
        Subspace::span(self.field, self.cols, &vecs)
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows: Vec<Vector> = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        Matrix::from_rows(self.field, self.cols + other.cols, &rows)
    }
}

/// A linear subspace of `field^ambient` with canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: vec![],
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vecs: &[Vector]) -> Self {
        let (basis, pivots) = Matrix::from_rows(field, ambient, vecs).rref_with_pivots();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Arity(self.ambient, other.ambient));
        }
        Ok(())
    }

    /// Canonical representative of `v` modulo this subspace: pivot coordinates cleared.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        out
    }

    /// Coordinates of `v` modulo this subspace in the basis of `complement_coords`.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.complement_coords().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn try_contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::Arity(self.ambient, v.len()));
        }
        Ok(self.contains(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut vecs = self.vectors();
        vecs.extend(other.vectors());
        Ok(Subspace::span(self.field(), self.ambient, &vecs))
    }

    /// Zassenhaus: reduce `[a | a]` over `[b | 0]`; rows with vanishing left half span `a ∩ b`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let f = self.field();
        let n = self.ambient;
        let mut rows: Vec<Vector> = Vec::new();
        for a in self.vectors() {
            rows.push(a.iter().chain(a.iter()).cloned().collect());
        }
        for b in other.vectors() {
            rows.push(b.iter().cloned().chain(std::iter::repeat_n(f.zero(), n)).collect());
        }
        let (r, pivots) = Matrix::from_rows(f, 2 * n, &rows).rref_with_pivots();
        let inter: Vec<Vector> = pivots
            .iter()
            .enumerate()
            .filter(|(_, &p)| p >= n)
            .map(|(i, _)| r.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::span(f, n, &inter))
    }

    /// Writes `v = a + b` with `a ∈ self`, `b ∈ other`, when possible.
    pub fn split(&self, other: &Subspace, v: &[Scalar]) -> Option<(Vector, Vector)> {
        let f = self.field();
        let n = self.ambient;
        let a = self.vectors();
        let b = other.vectors();
        // columns: generators of self, then of other; solve for coefficients.
        let mut cols: Vec<Vector> = a.iter().chain(b.iter()).cloned().collect();
        cols.push(v.to_vec());
        let aug = Matrix::from_cols(f, n, &cols);
        let (r, pivots) = aug.rref_with_pivots();
        let last = cols.len() - 1;
        if pivots.contains(&last) {
            return None;
        }
        let mut coef = vec![f.zero(); last];
        for (i, &p) in pivots.iter().enumerate() {
            coef[p] = r.get(i, last).clone();
        }
        let mut va = vec![f.zero(); n];
        for (c, g) in coef.iter().zip(&a) {
            axpy(&mut va, c, g);
        }
        let vb: Vector = v.iter().zip(&va).map(|(x, y)| x - y).collect();
        Some((va, vb))
    }

    /// Image of this subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vecs: Vec<Vector> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &vecs)
    }
}

/// `acc += c · v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
