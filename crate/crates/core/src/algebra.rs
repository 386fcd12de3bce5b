//! The quotient `R = S/I` as a finite-dimensional algebra with a monomial basis.
//!
//! Ideals of `R` are plain [`Subspace`]s of `F_p^dim` that happen to be closed under
//! every variable action; the routines here produce and consume them.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest quotient dimension accepted by default.
pub const DEFAULT_DIM_CAP: usize = 512;

/// `R = S/I` over `F_p`, with basis the standard monomials of `I` in graded-lex order.
///
/// Basis index 0 is always the monomial `1`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    field: PrimeField,
    ideal: MonomialIdeal,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, u32>,
    var_action: Vec<Vec<Option<u32>>>,
    mul_table: Vec<Option<u32>>,
    degrees: Vec<u32>,
}

impl FiniteAlgebra {
    pub fn new(ideal: &MonomialIdeal, field: PrimeField) -> Result<Self> {
        Self::with_cap(ideal, field, DEFAULT_DIM_CAP)
    }

    pub fn with_cap(ideal: &MonomialIdeal, field: PrimeField, cap: usize) -> Result<Self> {
        let basis = ideal.standard_monomials()?;
        if basis.len() > cap {
            return Err(Error::DimensionCap { dim: basis.len(), cap });
        }
        let n = ideal.nvars();
        let dim = basis.len();
        let index: BTreeMap<Monomial, u32> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
        let var_action = (0..n)
            .map(|k| {
                let x = Monomial::var(n, k);
                basis.iter().map(|b| index.get(&b.mul(&x)).copied()).collect()
            })
            .collect();
        let mut mul_table = vec![None; dim * dim];
        for a in 0..dim {
            for b in a..dim {
                let p = index.get(&basis[a].mul(&basis[b])).copied();
                mul_table[a * dim + b] = p;
                mul_table[b * dim + a] = p;
            }
        }
        let degrees = basis.iter().map(Monomial::degree).collect();
        Ok(FiniteAlgebra { field, ideal: ideal.clone(), basis, index, var_action, mul_table, degrees })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    /// Index of `x_k * basis[b]`, or `None` if the product lies in `I`.
    #[inline]
    pub fn var_mul(&self, k: usize, b: usize) -> Option<usize> {
        self.var_action[k][b].map(|i| i as usize)
    }

    #[inline]
    pub fn mul_basis(&self, a: usize, b: usize) -> Option<usize> {
        self.mul_table[a * self.dim() + b].map(|i| i as usize)
    }

    /// Number of variables not in `I`, i.e. `dim m/m^2`.
    pub fn embedding_dim(&self) -> usize {
        self.degrees.iter().filter(|&&d| d == 1).count()
    }

    pub fn basis_vector(&self, b: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[b] = 1;
        v
    }

    pub fn one(&self) -> Vec<u32> {
        self.basis_vector(0)
    }

    pub fn mul(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let dim = self.dim();
        let mut out = vec![0; dim];
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            let row = &self.mul_table[a * dim..(a + 1) * dim];
            for (b, &vb) in v.iter().enumerate() {
                if vb != 0 {
                    if let Some(c) = row[b] {
                        let c = c as usize;
                        out[c] = f.mul_add(out[c], ua, vb);
                    }
                }
            }
        }
        out
    }

    /// `basis[b] * v`.
    pub fn mul_by_basis(&self, b: usize, v: &[u32]) -> Vec<u32> {
        let dim = self.dim();
        let mut out = vec![0; dim];
        let row = &self.mul_table[b * dim..(b + 1) * dim];
        for (a, &va) in v.iter().enumerate() {
            if va != 0 {
                if let Some(c) = row[a] {
                    out[c as usize] = va;
                }
            }
        }
        out
    }

    pub fn mul_var(&self, k: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim()];
        for (b, &vb) in v.iter().enumerate() {
            if vb != 0 {
                if let Some(c) = self.var_action[k][b] {
                    out[c as usize] = vb;
                }
            }
        }
        out
    }

    /// The 0/1 matrix of multiplication by `x_k`.
    pub fn action_matrix(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for b in 0..self.dim() {
            if let Some(c) = self.var_action[k][b] {
                m.set(c as usize, b, 1);
            }
        }
        m
    }

    /// Matrix of multiplication by the element `r`.
    pub fn mult_matrix(&self, r: &[u32]) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (a, &ra) in r.iter().enumerate() {
            if ra == 0 {
                continue;
            }
            for b in 0..dim {
                if let Some(c) = self.mul_basis(a, b) {
                    m.set(c, b, self.field.add(m.get(c, b), ra));
                }
            }
        }
        m
    }

    /// Span of basis monomials of degree at least `d`; `d = 1` gives `m`.
    pub fn m_power(&self, d: u32) -> Subspace {
        Subspace::coordinate(self.dim(), (0..self.dim()).filter(|&b| self.degrees[b] >= d))
    }

    pub fn maximal_ideal(&self) -> Subspace {
        self.m_power(1)
    }

    /// Image in `R` of a monomial ideal of `S`.
    pub fn monomial_ideal_image(&self, ideal: &MonomialIdeal) -> Subspace {
        Subspace::coordinate(
            self.dim(),
            (0..self.dim()).filter(|&b| ideal.contains(&self.basis[b])),
        )
    }

    /// The smallest ideal containing `vectors`.
    pub fn ideal_generated_by(&self, vectors: impl IntoIterator<Item = Vec<u32>>) -> Subspace {
        let f = &self.field;
        let mut span = Subspace::zero(self.dim());
        let mut queue: VecDeque<Vec<u32>> = VecDeque::new();
        for v in vectors {
            if span.insert(f, v.clone()) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for k in 0..self.nvars() {
                let w = self.mul_var(k, &v);
                if span.insert(f, w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        span
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| (0..self.nvars()).all(|k| s.contains(&self.field, &self.mul_var(k, v))))
    }

    /// `m * N`.
    pub fn m_times(&self, n: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for v in n.basis() {
            for k in 0..self.nvars() {
                out.insert(&self.field, self.mul_var(k, v));
            }
        }
        out
    }

    /// Minimal ideal generators of `N`: basis vectors of `N` independent modulo `m N`.
    pub fn minimal_generators(&self, n: &Subspace) -> Vec<Vec<u32>> {
        let mut span = self.m_times(n);
        let mut out = Vec::new();
        for v in n.canonical_basis() {
            if span.insert(&self.field, v.clone()) {
                out.push(v);
            }
        }
        out
    }

    pub fn product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let gb = self.minimal_generators(b);
        let mut out = Subspace::zero(self.dim());
        for u in a.basis() {
            for v in &gb {
                out.insert(&self.field, self.mul(u, v));
            }
        }
        out
    }

    /// `B : C = {r : r C ⊆ B}`.
    pub fn quotient(&self, b: &Subspace, c: &Subspace) -> Subspace {
        let f = &self.field;
        let dim = self.dim();
        let free: Vec<usize> = {
            let mut is_pivot = vec![false; dim];
            for &p in b.pivots() {
                is_pivot[p] = true;
            }
            (0..dim).filter(|&i| !is_pivot[i]).collect()
        };
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for g in self.minimal_generators(c) {
            // column a holds reduce_B(basis[a] * g); only non-pivot coordinates survive
            let cols: Vec<Vec<u32>> =
                (0..dim).map(|a| b.reduce(f, &self.mul_by_basis(a, &g))).collect();
            for &i in &free {
                let row: Vec<u32> = cols.iter().map(|col| col[i]).collect();
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        Subspace::from_vectors(f, dim, nullspace(f, dim, rows))
    }

    pub fn annihilator(&self, n: &Subspace) -> Subspace {
        self.quotient(&Subspace::zero(self.dim()), n)
    }

    /// `0 : m`.
    pub fn socle(&self) -> Subspace {
        self.annihilator(&self.maximal_ideal())
    }

    pub fn cm_type(&self) -> usize {
        self.socle().dim()
    }

    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut hf = vec![0usize; self.top_degree() as usize + 1];
        for &d in &self.degrees {
            hf[d as usize] += 1;
        }
        hf
    }
}
