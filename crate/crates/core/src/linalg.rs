//! Dense exact linear algebra over a prime field.
//!
//! Subspaces are kept in reduced row echelon form, which is unique for a
//! given subspace, so equality of subspaces is equality of their bases.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul_vec(&self, f: &PrimeField, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![0u32; self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            let row = self.row(i);
            let mut acc = 0u64;
            for (&a, &b) in row.iter().zip(v) {
                if a != 0 && b != 0 {
                    acc = (acc + a as u64 * b as u64) % f.modulus() as u64;
                }
            }
            *o = acc as u32;
        }
        out
    }

    pub fn mul(&self, f: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                f.axpy(dst, a, orow);
            }
        }
        out
    }

    pub fn sub(&self, f: &PrimeField, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        Subspace::from_vectors(f, self.cols, (0..self.rows).map(|i| self.row(i).to_vec())).dim()
    }

    /// Right kernel `{v : M v = 0}` as an echelonized basis.
    pub fn nullspace(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let rowspace =
            Subspace::from_vectors(f, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()));
        rowspace.orthogonal_kernel(f)
    }

    /// Column space.
    pub fn image(&self, f: &PrimeField) -> Subspace {
        Subspace::from_vectors(f, self.rows, (0..self.cols).map(|j| self.column(j)))
    }
}

/// A linear subspace of `F_p^n`, stored as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    pivot_of: Vec<Option<u32>>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.canonical_basis() == other.canonical_basis()
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new(), pivot_of: vec![None; ambient] }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            let mut e = vec![0; ambient];
            e[i] = 1;
            s.push_reduced(e, i);
        }
        s
    }

    /// Span of the coordinate vectors `e_i`, `i ∈ coords`.
    pub fn coordinate(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in coords {
            if s.pivot_of[i].is_none() {
                let mut e = vec![0; ambient];
                e[i] = 1;
                s.push_reduced(e, i);
            }
        }
        s
    }

    pub fn from_vectors(
        f: &PrimeField,
        ambient: usize,
        vectors: impl IntoIterator<Item = Vec<u32>>,
    ) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(f, v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Basis vectors in insertion order (each is reduced against the others).
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis sorted by pivot column: the unique RREF of the subspace.
    pub fn canonical_basis(&self) -> Vec<Vec<u32>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// Reduce `v` modulo the subspace in place; the result vanishes on all pivot columns.
    pub fn reduce_in_place(&self, f: &PrimeField, v: &mut [u32]) {
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = v[c];
            if a != 0 {
                f.axpy(v, f.neg(a), row);
            }
        }
    }

    pub fn reduce(&self, f: &PrimeField, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce_in_place(f, &mut w);
        w
    }

    pub fn contains(&self, f: &PrimeField, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce_in_place(f, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Insert `v`; returns true if the dimension grew.
    pub fn insert(&mut self, f: &PrimeField, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce_in_place(f, &mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[c]);
        f.scale(&mut v, inv);
        // keep the basis fully reduced
        for row in self.rows.iter_mut() {
            let a = row[c];
            if a != 0 {
                f.axpy(row, f.neg(a), &v);
            }
        }
        self.push_reduced(v, c);
        true
    }

    fn push_reduced(&mut self, v: Vec<u32>, pivot: usize) {
        self.pivot_of[pivot] = Some(self.rows.len() as u32);
        self.rows.push(v);
        self.pivots.push(pivot);
    }

    /// `other ⊆ self`.
    pub fn contains_subspace(&self, f: &PrimeField, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(f, v))
    }

    pub fn sum(&self, f: &PrimeField, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(f, v.clone());
        }
        s
    }

    /// Coordinates of `v` in `basis()` order, if `v` lies in the subspace.
    pub fn coordinates(&self, f: &PrimeField, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&c| v[c]).collect();
        let mut w = v.to_vec();
        for (row, &a) in self.rows.iter().zip(&coords) {
            if a != 0 {
                f.axpy(&mut w, f.neg(a), row);
            }
        }
        w.iter().all(|&x| x == 0).then_some(coords)
    }

    /// Basis of `{x : <r, x> = 0 for every basis row r}`, i.e. the right kernel of
    /// the matrix whose rows span this subspace.
    pub fn orthogonal_kernel(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for free in 0..self.ambient {
            if self.pivot_of[free].is_some() {
                continue;
            }
            let mut v = vec![0u32; self.ambient];
            v[free] = 1;
            for (row, &c) in self.rows.iter().zip(&self.pivots) {
                v[c] = f.neg(row[free]);
            }
            out.push(v);
        }
        out
    }

    pub fn intersection(&self, f: &PrimeField, other: &Subspace) -> Subspace {
        // V ∩ W = (V^⊥ + W^⊥)^⊥ with respect to the standard pairing
        let mut perp = Subspace::from_vectors(f, self.ambient, self.orthogonal_kernel(f));
        for v in other.orthogonal_kernel(f) {
            perp.insert(f, v);
        }
        Subspace::from_vectors(f, self.ambient, perp.orthogonal_kernel(f))
    }

    /// Image of the subspace under the quotient map onto the complement of `modulo`'s
    /// pivot coordinates; returned in those coordinates.
    pub fn project_modulo(&self, f: &PrimeField, modulo: &Subspace) -> Subspace {
        let keep: Vec<usize> =
            (0..self.ambient).filter(|&i| modulo.pivot_of[i].is_none()).collect();
        Subspace::from_vectors(
            f,
            keep.len(),
            self.rows.iter().map(|v| {
                let w = modulo.reduce(f, v);
                keep.iter().map(|&i| w[i]).collect()
            }),
        )
    }
}

/// Right kernel of the system whose rows are given, over `ncols` unknowns.
pub fn nullspace(
    f: &PrimeField,
    ncols: usize,
    rows: impl IntoIterator<Item = Vec<u32>>,
) -> Vec<Vec<u32>> {
    Subspace::from_vectors(f, ncols, rows).orthogonal_kernel(f)
}
