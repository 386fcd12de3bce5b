//! Finite modules over `R` and the spaces of `R`-linear maps between them.
//!
//! A map out of a module is determined by the images of its generators, so a
//! Hom space is stored as the solution space of the syzygy constraints on those
//! images. Monomial modules (every action sends a basis element to a basis
//! element or zero) get their syzygies combinatorially; other modules go through
//! a presentation kernel.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::monomial::Monomial;

/// Sparse vector as `(index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec = Vec<(u32, u32)>;

/// Upper bound on the number of unknowns in a Hom computation.
pub const HOM_UNKNOWN_CAP: usize = 8192;

fn dense_to_sparse(v: &[u32]) -> SparseVec {
    v.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i as u32, x)).collect()
}

fn axpy_sparse(f: &PrimeField, dst: &mut [u32], c: u32, src: &SparseVec) {
    if c == 0 {
        return;
    }
    for &(i, x) in src {
        let i = i as usize;
        dst[i] = f.mul_add(dst[i], c, x);
    }
}

/// A finite `R`-module given by a basis, the action of each variable, and generators.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    nvars: usize,
    dim: usize,
    labels: Option<Vec<Monomial>>,
    /// `actions[k][w]` is `x_k * e_w`.
    actions: Vec<Vec<SparseVec>>,
    generators: Vec<Vec<u32>>,
    degrees: Option<Vec<i32>>,
}

impl ModuleRep {
    pub fn new(
        nvars: usize,
        dim: usize,
        actions: Vec<Vec<SparseVec>>,
        generators: Vec<Vec<u32>>,
    ) -> Result<Self> {
        if actions.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, found: actions.len() });
        }
        for a in &actions {
            if a.len() != dim || a.iter().flatten().any(|&(i, _)| i as usize >= dim) {
                return Err(Error::InvalidArgument("action does not fit the module dimension"));
            }
        }
        if let Some(g) = generators.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
        }
        Ok(ModuleRep { nvars, dim, labels: None, actions, generators, degrees: None })
    }

    /// The span of `labels` inside a monomial quotient, where `x_k` sends a label to
    /// its product if that product is again a label, and to zero otherwise.
    pub fn from_monomials(nvars: usize, labels: Vec<Monomial>, generators: &[usize]) -> Self {
        let index: BTreeMap<&Monomial, u32> =
            labels.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
        let dim = labels.len();
        let actions = (0..nvars)
            .map(|k| {
                let x = Monomial::var(nvars, k);
                labels
                    .iter()
                    .map(|w| match index.get(&w.mul(&x)) {
                        Some(&i) => vec![(i, 1)],
                        None => Vec::new(),
                    })
                    .collect()
            })
            .collect();
        let generators = generators
            .iter()
            .map(|&g| {
                let mut v = vec![0; dim];
                v[g] = 1;
                v
            })
            .collect();
        let degrees = Some(labels.iter().map(|m| m.degree() as i32).collect());
        ModuleRep { nvars, dim, labels: Some(labels), actions, generators, degrees }
    }

    /// `R` as a module over itself, generated by `1`.
    pub fn free(a: &FiniteAlgebra) -> Self {
        Self::from_monomials(a.nvars(), a.basis().to_vec(), &[0])
    }

    /// `R / I'` for an ideal `I'` of `R`, with basis the cosets of the basis monomials
    /// on non-pivot coordinates of `I'` and generator the coset of `1`.
    pub fn quotient(a: &FiniteAlgebra, sub: &Subspace) -> Self {
        let f = a.field();
        let dim_r = a.dim();
        let mut is_pivot = vec![false; dim_r];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..dim_r).filter(|&i| !is_pivot[i]).collect();
        let mut pos = vec![u32::MAX; dim_r];
        for (j, &i) in keep.iter().enumerate() {
            pos[i] = j as u32;
        }
        let project = |v: &[u32]| -> Vec<u32> {
            let w = sub.reduce(f, v);
            keep.iter().map(|&i| w[i]).collect()
        };
        let actions = (0..a.nvars())
            .map(|k| {
                keep.iter()
                    .map(|&c| dense_to_sparse(&project(&a.mul_var(k, &a.basis_vector(c)))))
                    .collect()
            })
            .collect();
        let one = project(&a.one());
        let generators = if one.iter().any(|&x| x != 0) { vec![one] } else { Vec::new() };
        let labels = keep.iter().map(|&i| a.basis()[i].clone()).collect();
        let degrees = keep.iter().map(|&i| a.degrees()[i] as i32).collect();
        ModuleRep {
            nvars: a.nvars(),
            dim: keep.len(),
            labels: Some(labels),
            actions,
            generators,
            degrees: Some(degrees),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[Monomial]> {
        self.labels.as_deref()
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    pub fn with_degrees(mut self, degrees: Vec<i32>) -> Result<Self> {
        if degrees.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: degrees.len() });
        }
        self.degrees = Some(degrees);
        Ok(self)
    }

    pub fn with_generators(mut self, generators: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, found: g.len() });
        }
        self.generators = generators;
        Ok(self)
    }

    /// Position of the single `1` if `v` is a basis vector.
    fn unit_position(v: &[u32]) -> Option<usize> {
        let mut pos = None;
        for (i, &x) in v.iter().enumerate() {
            match x {
                0 => {}
                1 if pos.is_none() => pos = Some(i),
                _ => return None,
            }
        }
        pos
    }

    /// Every action maps basis to basis or zero, and every generator is a basis vector.
    pub fn is_monomial(&self) -> bool {
        self.actions.iter().flatten().all(|col| col.is_empty() || (col.len() == 1 && col[0].1 == 1))
            && self.generators.iter().all(|g| Self::unit_position(g).is_some())
    }

    pub fn act_var(&self, f: &PrimeField, k: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (w, &c) in v.iter().enumerate() {
            axpy_sparse(f, &mut out, c, &self.actions[k][w]);
        }
        out
    }

    fn act_var_sparse(&self, f: &PrimeField, k: usize, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
        for &(w, c) in v {
            for &(i, x) in &self.actions[k][w as usize] {
                let e = acc.entry(i).or_insert(0);
                *e = f.mul_add(*e, c, x);
            }
        }
        acc.into_iter().filter(|&(_, x)| x != 0).collect()
    }

    pub fn action_matrix(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (w, col) in self.actions[k].iter().enumerate() {
            for &(i, x) in col {
                m.set(i as usize, w, x);
            }
        }
        m
    }

    /// True iff the variable actions commute pairwise.
    pub fn actions_commute(&self, f: &PrimeField) -> bool {
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                for w in 0..self.dim {
                    let a = self.act_var_sparse(f, i, &self.actions[j][w]);
                    let b = self.act_var_sparse(f, j, &self.actions[i][w]);
                    if a != b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `table[b][w] = basis_R[b] * e_w`.
    pub fn action_table(&self, a: &FiniteAlgebra) -> ActionTable {
        let f = a.field();
        let n = a.nvars();
        let mut rows: Vec<Vec<SparseVec>> = Vec::with_capacity(a.dim());
        rows.push((0..self.dim).map(|w| vec![(w as u32, 1)]).collect());
        for b in 1..a.dim() {
            let m = &a.basis()[b];
            let k = (0..n).find(|&k| m.exponents()[k] > 0).unwrap_or(0);
            let mut e = m.exponents().to_vec();
            e[k] -= 1;
            let prev = a.index_of(&Monomial::new(e)).unwrap_or(0);
            let row = rows[prev].iter().map(|v| self.act_var_sparse(f, k, v)).collect();
            rows.push(row);
        }
        ActionTable { rows, dim: self.dim }
    }

    /// The submodule generated by `vectors`.
    pub fn submodule_generated(&self, f: &PrimeField, vectors: &[Vec<u32>]) -> Subspace {
        let mut span = Subspace::zero(self.dim);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            if span.insert(f, v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for k in 0..self.nvars {
                let w = self.act_var(f, k, &v);
                if span.insert(f, w.clone()) {
                    queue.push(w);
                }
            }
        }
        span
    }

    pub fn generators_generate(&self, f: &PrimeField) -> bool {
        self.submodule_generated(f, &self.generators).dim() == self.dim
    }

    /// `m M`.
    pub fn m_times(&self, f: &PrimeField) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for k in 0..self.nvars {
            for col in &self.actions[k] {
                let mut v = vec![0; self.dim];
                axpy_sparse(f, &mut v, 1, col);
                s.insert(f, v);
            }
        }
        s
    }

    /// A minimal generating set: current generators first, then basis vectors,
    /// keeping those independent modulo `m M`.
    pub fn minimal_generators(&self, f: &PrimeField) -> Vec<Vec<u32>> {
        let mut span = self.m_times(f);
        let mut out = Vec::new();
        let candidates = self.generators.iter().cloned().chain((0..self.dim).map(|w| {
            let mut e = vec![0; self.dim];
            e[w] = 1;
            e
        }));
        for v in candidates {
            if span.dim() == self.dim {
                break;
            }
            if span.insert(f, v.clone()) {
                out.push(v);
            }
        }
        out
    }
}

/// `rows[b][w]` is `basis_R[b]` acting on the module basis vector `e_w`.
#[derive(Clone, Debug)]
pub struct ActionTable {
    rows: Vec<Vec<SparseVec>>,
    dim: usize,
}

impl ActionTable {
    pub fn get(&self, b: usize, w: usize) -> &SparseVec {
        &self.rows[b][w]
    }

    /// `basis_R[b] * v`.
    pub fn act(&self, f: &PrimeField, b: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (w, &c) in v.iter().enumerate() {
            axpy_sparse(f, &mut out, c, &self.rows[b][w]);
        }
        out
    }

    /// `r * v` for an element `r` of `R`.
    pub fn act_element(&self, f: &PrimeField, r: &[u32], v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (b, &rb) in r.iter().enumerate() {
            if rb == 0 {
                continue;
            }
            for (w, &c) in v.iter().enumerate() {
                if c != 0 {
                    axpy_sparse(f, &mut out, f.mul(rb, c), &self.rows[b][w]);
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `r` on the module.
    pub fn element_matrix(&self, f: &PrimeField, r: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (b, &rb) in r.iter().enumerate() {
            if rb == 0 {
                continue;
            }
            for w in 0..self.dim {
                for &(i, x) in &self.rows[b][w] {
                    let i = i as usize;
                    m.set(i, w, f.mul_add(m.get(i, w), rb, x));
                }
            }
        }
        m
    }
}

/// One source basis vector written as `sum coeff * basis_R[b] * g_i`.
type SectionEntry = Vec<(u32, u32, u32)>;

/// A basis of `Hom_R(M, N)`, each map stored as the concatenated images of the
/// generators of `M`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    field: PrimeField,
    ngens: usize,
    source_dim: usize,
    target_dim: usize,
    solutions: Subspace,
    section: Vec<SectionEntry>,
    target_table: ActionTable,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.solutions.dim()
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// Basis maps in echelon order, each of length `ngens * target_dim`.
    pub fn basis(&self) -> &[Vec<u32>] {
        self.solutions.basis()
    }

    pub fn solutions(&self) -> &Subspace {
        &self.solutions
    }

    pub fn target_table(&self) -> &ActionTable {
        &self.target_table
    }

    /// Image of generator `i` under the map with generator images `u`.
    pub fn image<'a>(&self, u: &'a [u32], i: usize) -> &'a [u32] {
        &u[i * self.target_dim..(i + 1) * self.target_dim]
    }

    /// Whether `u` (generator images) defines an `R`-linear map.
    pub fn contains(&self, u: &[u32]) -> bool {
        self.solutions.contains(&self.field, u)
    }

    pub fn coordinates(&self, u: &[u32]) -> Option<Vec<u32>> {
        self.solutions.coordinates(&self.field, u)
    }

    /// Linear combination of the basis maps.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        let mut u = vec![0; self.ngens * self.target_dim];
        for (c, b) in coeffs.iter().zip(self.basis()) {
            self.field.axpy(&mut u, *c, b);
        }
        u
    }

    /// Evaluate the map with generator images `u` on the source vector `v`.
    pub fn apply(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.target_dim];
        for (w, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(b, i, coeff) in &self.section[w] {
                let img = self.target_table.act(f, b as usize, self.image(u, i as usize));
                f.axpy(&mut out, f.mul(c, coeff), &img);
            }
        }
        out
    }

    /// The `target_dim x source_dim` matrix of the map with generator images `u`.
    pub fn matrix(&self, u: &[u32]) -> Matrix {
        let columns: Vec<Vec<u32>> = (0..self.source_dim)
            .map(|w| {
                let mut e = vec![0; self.source_dim];
                e[w] = 1;
                self.apply(u, &e)
            })
            .collect();
        Matrix::from_columns(self.target_dim, &columns)
    }

    /// Check `phi X_k^M = X_k^N phi` for every variable directly on matrices.
    pub fn verify_intertwining(&self, source: &ModuleRep, target: &ModuleRep, u: &[u32]) -> bool {
        let f = &self.field;
        let phi = self.matrix(u);
        (0..source.nvars()).all(|k| {
            phi.mul(f, &source.action_matrix(k)) == target.action_matrix(k).mul(f, &phi)
        })
    }

    /// `Hom(M, N)` as an `R`-module with basis the basis maps; generators are minimal.
    pub fn as_module(&self, target: &ModuleRep) -> ModuleRep {
        let f = &self.field;
        let actions: Vec<Vec<SparseVec>> = (0..target.nvars())
            .map(|k| {
                self.basis()
                    .iter()
                    .map(|u| {
                        let mut xu = Vec::with_capacity(u.len());
                        for i in 0..self.ngens {
                            xu.extend(target.act_var(f, k, self.image(u, i)));
                        }
                        let c = self
                            .coordinates(&xu)
                            .expect("Hom space is closed under the R-action");
                        dense_to_sparse(&c)
                    })
                    .collect()
            })
            .collect();
        let m = ModuleRep {
            nvars: target.nvars(),
            dim: self.dim(),
            labels: None,
            actions,
            generators: Vec::new(),
            degrees: None,
        };
        let gens = m.minimal_generators(f);
        ModuleRep { generators: gens, ..m }
    }
}

/// Syzygies of the generators as sparse vectors over `(b, i)`.
fn monomial_syzygies(a: &FiniteAlgebra, m: &ModuleRep, table: &ActionTable) -> Vec<SectionEntry> {
    let gens: Vec<usize> =
        m.generators.iter().map(|g| ModuleRep::unit_position(g).unwrap_or(0)).collect();
    let dim_r = a.dim();
    // image[i][b]: basis index of basis_R[b] * g_i, if nonzero
    let image: Vec<Vec<Option<u32>>> = gens
        .iter()
        .map(|&g| (0..dim_r).map(|b| table.get(b, g).first().map(|&(w, _)| w)).collect())
        .collect();
    let basis = a.basis();
    let mut out = Vec::new();
    for (i, img) in image.iter().enumerate() {
        let killers: Vec<usize> = (0..dim_r).filter(|&b| img[b].is_none()).collect();
        for &b in &killers {
            let minimal = !killers.iter().any(|&c| c != b && basis[c].divides(&basis[b]));
            if minimal {
                out.push(vec![(b as u32, i as u32, 1)]);
            }
        }
    }
    let neg1 = a.field().neg(1);
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let mut by_target: BTreeMap<u32, usize> = BTreeMap::new();
            for b in 0..dim_r {
                if let Some(w) = image[i][b] {
                    by_target.entry(w).or_insert(b);
                }
            }
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for c in 0..dim_r {
                if let Some(w) = image[j][c] {
                    if let Some(&b) = by_target.get(&w) {
                        pairs.push((b, c));
                    }
                }
            }
            for &(b, c) in &pairs {
                let minimal = !pairs.iter().any(|&(b2, c2)| {
                    (b2, c2) != (b, c) && basis[b2].divides(&basis[b]) && basis[c2].divides(&basis[c])
                });
                if minimal {
                    out.push(vec![(b as u32, i as u32, 1), (c as u32, j as u32, neg1)]);
                }
            }
        }
    }
    out
}

/// Module generators of the kernel of the presentation `R^r -> M`.
fn general_syzygies(a: &FiniteAlgebra, m: &ModuleRep, table: &ActionTable) -> Vec<SectionEntry> {
    let f = a.field();
    let dim_r = a.dim();
    let r = m.generators.len();
    let ncols = dim_r * r;
    // column (b, i) at position i * dim_r + b holds basis_R[b] * g_i
    let columns: Vec<Vec<u32>> = (0..r)
        .flat_map(|i| (0..dim_r).map(move |b| (i, b)))
        .map(|(i, b)| table.act(f, b, &m.generators[i]))
        .collect();
    let rows = (0..m.dim).map(|w| columns.iter().map(|c| c[w]).collect::<Vec<u32>>());
    let kernel = Subspace::from_vectors(f, ncols, nullspace(f, ncols, rows));
    // x_k acts on the free module by shifting the R-index
    let shift = |k: usize, z: &[u32]| -> Vec<u32> {
        let mut out = vec![0; ncols];
        for i in 0..r {
            for b in 0..dim_r {
                let c = z[i * dim_r + b];
                if c != 0 {
                    if let Some(b2) = a.var_mul(k, b) {
                        out[i * dim_r + b2] = c;
                    }
                }
            }
        }
        out
    };
    let mut span = Subspace::zero(ncols);
    for z in kernel.basis() {
        for k in 0..a.nvars() {
            span.insert(f, shift(k, z));
        }
    }
    let mut out = Vec::new();
    for z in kernel.canonical_basis() {
        if span.insert(f, z.clone()) {
            let entry = z
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(p, &c)| ((p % dim_r) as u32, (p / dim_r) as u32, c))
                .collect();
            out.push(entry);
        }
    }
    out
}

fn monomial_section(a: &FiniteAlgebra, m: &ModuleRep, table: &ActionTable) -> Result<Vec<SectionEntry>> {
    let mut section: Vec<Option<SectionEntry>> = vec![None; m.dim];
    for (i, g) in m.generators.iter().enumerate() {
        let gi = ModuleRep::unit_position(g).unwrap_or(0);
        for b in 0..a.dim() {
            if let Some(&(w, _)) = table.get(b, gi).first() {
                section[w as usize].get_or_insert_with(|| vec![(b as u32, i as u32, 1)]);
            }
        }
    }
    section
        .into_iter()
        .map(|s| s.ok_or(Error::InvalidArgument("generators do not generate the module")))
        .collect()
}

fn general_section(a: &FiniteAlgebra, m: &ModuleRep, table: &ActionTable) -> Result<Vec<SectionEntry>> {
    let f = a.field();
    let dim_r = a.dim();
    let r = m.generators.len();
    let width = m.dim + dim_r * r;
    let mut aug = Subspace::zero(width);
    for i in 0..r {
        for b in 0..dim_r {
            let mut v = table.act(f, b, &m.generators[i]);
            v.resize(width, 0);
            v[m.dim + i * dim_r + b] = 1;
            aug.insert(f, v);
        }
    }
    let mut section: Vec<Option<SectionEntry>> = vec![None; m.dim];
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        if p < m.dim {
            let entry = row[m.dim..]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(q, &c)| ((q % dim_r) as u32, (q / dim_r) as u32, c))
                .collect();
            section[p] = Some(entry);
        }
    }
    section
        .into_iter()
        .map(|s| s.ok_or(Error::InvalidArgument("generators do not generate the module")))
        .collect()
}

/// A basis of `Hom_R(M, N)`.
pub fn hom_space(a: &FiniteAlgebra, m: &ModuleRep, n: &ModuleRep) -> Result<HomSpace> {
    if m.nvars != a.nvars() || n.nvars != a.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: m.nvars.max(n.nvars) });
    }
    let f = *a.field();
    let r = m.generators.len();
    let unknowns = r * n.dim;
    if unknowns > HOM_UNKNOWN_CAP {
        return Err(Error::DimensionCap { dim: unknowns, cap: HOM_UNKNOWN_CAP });
    }
    let source_table = m.action_table(a);
    let target_table = n.action_table(a);
    let (syzygies, section) = if m.is_monomial() && m.labels.is_some() {
        (monomial_syzygies(a, m, &source_table), monomial_section(a, m, &source_table)?)
    } else {
        (general_syzygies(a, m, &source_table), general_section(a, m, &source_table)?)
    };
    let mut rows = Subspace::zero(unknowns);
    for z in &syzygies {
        // sum over (b, i, c) of c * basis_R[b] * u_i = 0, one equation per target coordinate
        let mut block = vec![vec![0u32; unknowns]; n.dim];
        for &(b, i, c) in z {
            for x in 0..n.dim {
                for &(v, val) in target_table.get(b as usize, x) {
                    let cell = &mut block[v as usize][i as usize * n.dim + x];
                    *cell = f.mul_add(*cell, c, val);
                }
            }
        }
        for row in block {
            if row.iter().any(|&x| x != 0) {
                rows.insert(&f, row);
            }
        }
    }
    let kernel = rows.orthogonal_kernel(&f);
    let echelon = Subspace::from_vectors(&f, unknowns, kernel).canonical_basis();
    let solutions = Subspace::from_vectors(&f, unknowns, echelon);
    Ok(HomSpace {
        field: f,
        ngens: r,
        source_dim: m.dim,
        target_dim: n.dim,
        solutions,
        section,
        target_table,
    })
}
