//! Surjections `ω -> m` and the Gorenstein cover `k ⊕ ω` they induce.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::FiniteAlgebra;
use crate::canonical::{tilde, CanonicalModule};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{nullspace, Matrix, Subspace};
use crate::module::{HomSpace, SparseVec};

pub const DEFAULT_SAMPLES: usize = 24;

/// Outcome of the search for a surjection `ω -> m`.
#[derive(Clone, Debug, PartialEq)]
pub enum TeterStatus {
    /// A surjection, given by its generator images.
    Found { f: Vec<u32>, graded: bool, shift: Option<i32>, samples_used: usize },
    /// No surjection among the samples; a surjection, if one exists, is missed with
    /// probability at most `failure_bound`.
    NotFound { samples: usize, failure_bound: f64 },
    /// `ω` needs fewer generators than `m`, so no surjection exists.
    Obstructed { embedding_dim: usize, generators: usize },
    /// Neither `Soc R ⊆ m^2` nor `m^2 = 0`.
    SocleConditionViolated,
}

impl TeterStatus {
    pub fn found(&self) -> Option<&[u32]> {
        match self {
            TeterStatus::Found { f, .. } => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            TeterStatus::Found { .. } => "found",
            TeterStatus::NotFound { .. } => "not-found",
            TeterStatus::Obstructed { .. } => "obstructed",
            TeterStatus::SocleConditionViolated => "socle-condition-violated",
        }
    }
}

/// `(e/p)^N`, capped at 1.
pub fn failure_bound(embedding_dim: usize, p: u32, samples: usize) -> f64 {
    let q = embedding_dim as f64 / p as f64;
    if q >= 1.0 {
        return 1.0;
    }
    let mut acc = 1.0;
    for _ in 0..samples {
        acc *= q;
    }
    acc
}

/// Basis of the maps in `dual` whose generator images all satisfy `keep(i, b)` for
/// every nonzero coordinate `b` of image `i`.
fn restricted(dual: &HomSpace, f: &PrimeField, keep: impl Fn(usize, usize) -> bool) -> Vec<Vec<u32>> {
    let dim_r = dual.target_dim();
    let positions: Vec<usize> = (0..dual.ngens())
        .flat_map(|i| (0..dim_r).map(move |b| (i, b)))
        .filter(|&(i, b)| !keep(i, b))
        .map(|(i, b)| i * dim_r + b)
        .collect();
    let rows = positions.iter().map(|&p| dual.basis().iter().map(|u| u[p]).collect::<Vec<u32>>());
    nullspace(f, dual.dim(), rows).iter().map(|c| dual.combine(c)).collect()
}

fn linear_rank(a: &FiniteAlgebra, dual: &HomSpace, u: &[u32]) -> usize {
    let linear: Vec<usize> = (0..a.dim()).filter(|&b| a.degrees()[b] == 1).collect();
    let rows = (0..dual.ngens()).map(|i| linear.iter().map(|&b| dual.image(u, i)[b]).collect());
    Subspace::from_vectors(a.field(), linear.len(), rows).dim()
}

fn image_ideal(a: &FiniteAlgebra, dual: &HomSpace, u: &[u32]) -> Subspace {
    a.ideal_generated_by((0..dual.ngens()).map(|i| dual.image(u, i).to_vec()))
}

/// `Soc R ⊆ m^2`, or `m^2 = 0`.
pub fn socle_condition(a: &FiniteAlgebra) -> bool {
    a.top_degree() <= 1 || a.m_power(2).contains_subspace(a.field(), &a.socle())
}

/// Randomised search for a surjection `ω -> m`, trying homogeneous maps first.
pub fn teter_test<G: Rng + ?Sized>(
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
    samples: usize,
    rng: &mut G,
) -> Result<TeterStatus> {
    if !socle_condition(a) {
        return Ok(TeterStatus::SocleConditionViolated);
    }
    let f = a.field();
    let e = a.embedding_dim();
    let ng = dual.ngens();
    if e == 0 {
        let zero = vec![0; ng * a.dim()];
        return Ok(TeterStatus::Found { f: zero, graded: true, shift: Some(0), samples_used: 0 });
    }
    if e > ng {
        return Ok(TeterStatus::Obstructed { embedding_dim: e, generators: ng });
    }
    let maximal = a.maximal_ideal();
    let gen_deg: Vec<i32> = (0..ng).map(|i| w.enclosing().f[i].degree() as i32).collect();
    let mut shifts: Vec<i32> = gen_deg.iter().map(|d| 1 - d).collect();
    shifts.sort_unstable();
    shifts.dedup();
    let mut used = 0;
    let attempt = |space: &[Vec<u32>], rng: &mut G, used: &mut usize| -> Option<Vec<u32>> {
        if space.is_empty() {
            return None;
        }
        for _ in 0..samples {
            *used += 1;
            let mut u = vec![0; ng * a.dim()];
            for h in space {
                f.axpy(&mut u, f.random(rng), h);
            }
            if linear_rank(a, dual, &u) == e && image_ideal(a, dual, &u) == maximal {
                return Some(u);
            }
        }
        None
    };
    for &s in &shifts {
        let piece = restricted(dual, f, |i, b| a.degrees()[b] as i32 == gen_deg[i] + s);
        if let Some(u) = attempt(&piece, rng, &mut used) {
            return Ok(TeterStatus::Found { f: u, graded: true, shift: Some(s), samples_used: used });
        }
    }
    let into_m = restricted(dual, f, |_, b| b != 0);
    if let Some(u) = attempt(&into_m, rng, &mut used) {
        return Ok(TeterStatus::Found { f: u, graded: false, shift: None, samples_used: used });
    }
    Ok(TeterStatus::NotFound { samples, failure_bound: failure_bound(e, f.modulus(), samples) })
}

/// Properties of a surjection `f` and of `h = f + f~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurjectionChecks {
    pub image_is_m: bool,
    pub kernel_is_socle: bool,
    pub h_symmetric: bool,
    pub h_image_is_m: bool,
    pub h_kernel_is_socle: bool,
}

impl SurjectionChecks {
    pub fn all(&self) -> bool {
        self.image_is_m
            && self.kernel_is_socle
            && self.h_symmetric
            && self.h_image_is_m
            && self.h_kernel_is_socle
    }
}

pub fn check_surjection(
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
    u: &[u32],
) -> Result<SurjectionChecks> {
    let f = a.field();
    let maximal = a.maximal_ideal();
    let socle = w.socle();
    let kernel = |v: &[u32]| Subspace::from_vectors(f, w.dim(), dual.matrix(v).nullspace(f));
    let t = tilde(a, w, dual, u)?;
    let mut h = u.to_vec();
    f.axpy(&mut h, 1, &t.tilde);
    let dim = w.dim();
    let hx: Vec<Vec<u32>> = (0..dim).map(|x| dual.apply(&h, &unit(dim, x))).collect();
    let h_symmetric = (0..dim).all(|x| {
        (0..dim).all(|y| w.act(a, &hx[x], &unit(dim, y)) == w.act(a, &hx[y], &unit(dim, x)))
    });
    Ok(SurjectionChecks {
        image_is_m: image_ideal(a, dual, u) == maximal,
        kernel_is_socle: kernel(u) == socle,
        h_symmetric,
        h_image_is_m: image_ideal(a, dual, &h) == maximal,
        h_kernel_is_socle: kernel(&h) == socle,
    })
}

fn unit(dim: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; dim];
    e[i] = 1;
    e
}

/// A commutative algebra given by structure constants on a basis whose element 0 is `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    field: PrimeField,
    dim: usize,
    products: Vec<SparseVec>,
    degrees: Option<Vec<i32>>,
}

impl StructureAlgebra {
    pub fn new(field: PrimeField, dim: usize, products: Vec<SparseVec>) -> Result<Self> {
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: products.len() });
        }
        Ok(StructureAlgebra { field, dim, products, degrees: None })
    }

    /// `k[X_1..X_n]/(X_i X_j, X_i^2 - X_j^2)` on the basis `1, X_1, ..., X_n, δ`.
    pub fn square_zero_gorenstein(field: PrimeField, n: usize) -> Self {
        let dim = n + 2;
        let delta = (n + 1) as u32;
        let mut products = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            products[a] = vec![(a as u32, 1)];
            products[a * dim] = vec![(a as u32, 1)];
        }
        for i in 1..=n {
            products[i * dim + i] = vec![(delta, 1)];
        }
        let mut degrees = vec![1; dim];
        degrees[0] = 0;
        degrees[n + 1] = 2;
        StructureAlgebra { field, dim, products, degrees: Some(degrees) }
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    pub fn product(&self, a: usize, b: usize) -> &SparseVec {
        &self.products[a * self.dim + b]
    }

    pub fn mul(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            for (b, &vb) in v.iter().enumerate() {
                if vb == 0 {
                    continue;
                }
                let c = f.mul(ua, vb);
                for &(k, x) in self.product(a, b) {
                    let k = k as usize;
                    out[k] = f.mul_add(out[k], c, x);
                }
            }
        }
        out
    }

    fn mul_sparse_basis(&self, v: &SparseVec, c: usize) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.dim];
        for &(k, x) in v {
            for &(j, y) in self.product(k as usize, c) {
                let j = j as usize;
                out[j] = f.mul_add(out[j], x, y);
            }
        }
        out
    }

    /// First basis triple `(a, b, c)` with `(ab)c != a(bc)`, if any.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.dim {
            for b in a..self.dim {
                for c in 0..self.dim {
                    let left = self.mul_sparse_basis(self.product(a, b), c);
                    let right = self.mul_sparse_basis(self.product(b, c), a);
                    if left != right {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|a| (0..self.dim).all(|b| self.product(a, b) == self.product(b, a)))
    }

    pub fn is_unital(&self) -> bool {
        (0..self.dim).all(|a| self.product(0, a).as_slice() == [(a as u32, 1)])
    }

    /// `0 : m_S` where `m_S` is spanned by basis elements `1..dim`.
    pub fn socle(&self) -> Subspace {
        let f = &self.field;
        let mut rows = Subspace::zero(self.dim);
        'outer: for a in 1..self.dim {
            for k in 0..self.dim {
                let row: Vec<u32> = (0..self.dim)
                    .map(|b| {
                        self.product(a, b).iter().find(|&&(j, _)| j as usize == k).map_or(0, |&(_, x)| x)
                    })
                    .collect();
                rows.insert(f, row);
                if rows.dim() == self.dim {
                    break 'outer;
                }
            }
        }
        Subspace::from_vectors(f, self.dim, rows.orthogonal_kernel(f))
    }

    /// Every structure constant respects the grading.
    pub fn is_graded(&self) -> bool {
        let Some(d) = &self.degrees else { return false };
        (0..self.dim).all(|a| {
            (0..self.dim).all(|b| self.product(a, b).iter().all(|&(k, _)| d[k as usize] == d[a] + d[b]))
        })
    }

    pub fn hilbert_function(&self) -> Option<Vec<usize>> {
        let d = self.degrees.as_ref()?;
        if d.iter().any(|&x| x < 0) {
            return None;
        }
        let top = d.iter().copied().max().unwrap_or(0) as usize;
        let mut hf = vec![0; top + 1];
        for &x in d {
            hf[x as usize] += 1;
        }
        Some(hf)
    }
}

/// The cover `S = k ⊕ ω` with `(α, x)(β, y) = (αβ, αy + βx + (x f(y) + y f(x))/2)`.
#[derive(Clone, Debug)]
pub struct CoverAlgebra {
    pub algebra: StructureAlgebra,
    /// Generator images of the surjection used.
    pub f: Vec<u32>,
}

pub fn build_cover(
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
    u: &[u32],
    shift: Option<i32>,
) -> Result<CoverAlgebra> {
    let field = *a.field();
    let dw = w.dim();
    let dim = dw + 1;
    let inv2 = field.inv(2);
    let fx: Vec<Vec<u32>> = (0..dw).map(|x| dual.apply(u, &unit(dw, x))).collect();
    let mut products = vec![Vec::new(); dim * dim];
    for s in 0..dim {
        products[s] = vec![(s as u32, 1)];
        products[s * dim] = vec![(s as u32, 1)];
    }
    for x in 0..dw {
        for y in x..dw {
            let mut v = w.act(a, &fx[y], &unit(dw, x));
            field.axpy(&mut v, 1, &w.act(a, &fx[x], &unit(dw, y)));
            field.scale(&mut v, inv2);
            let sparse: SparseVec = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as u32 + 1, c))
                .collect();
            products[(x + 1) * dim + (y + 1)] = sparse.clone();
            products[(y + 1) * dim + (x + 1)] = sparse;
        }
    }
    let mut algebra = StructureAlgebra::new(field, dim, products)?;
    if let Some((p, q, r)) = algebra.associativity_failure() {
        return Err(Error::AssociativityFailure { a: p, b: q, c: r });
    }
    if let Some(s) = shift {
        let labels = w.labels();
        let mut d = vec![0i32];
        d.extend(labels.iter().map(|m| m.degree() as i32 + s));
        algebra.degrees = Some(d);
        if !algebra.is_graded() {
            algebra.degrees = None;
        }
    }
    Ok(CoverAlgebra { algebra, f: u.to_vec() })
}

/// Independent checks on a cover `S` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub dim_ok: bool,
    pub socle_dim: usize,
    pub socle_ok: bool,
    /// `π(α, x) = α + f(x)` is a surjective ring map with kernel `Soc S`.
    pub projection_ok: bool,
    /// `S/Soc S ≅ R` by structure constants on preimages.
    pub iso_ok: bool,
    /// Dimension of `{x ∈ ω : x f(y) + y f(x) = 0 for all y}`.
    pub displayed_socle_dim: usize,
    /// `Some(top degree of Soc S == top degree of R + 1)` when the cover is graded.
    pub graded_socle_ok: Option<bool>,
}

impl CoverReport {
    pub fn verified(&self) -> bool {
        self.dim_ok && self.socle_ok && self.projection_ok && self.iso_ok
    }
}

pub fn verify_cover(
    s: &CoverAlgebra,
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
) -> CoverReport {
    let f = a.field();
    let alg = &s.algebra;
    let dim_s = alg.dim();
    let dim_r = a.dim();
    let socle = alg.socle();
    // π as a dim_r x dim_s matrix
    let mut columns = vec![a.one()];
    for x in 0..w.dim() {
        columns.push(dual.apply(&s.f, &unit(w.dim(), x)));
    }
    let pi = Matrix::from_columns(dim_r, &columns);
    let mut multiplicative = true;
    for p in 0..dim_s {
        for q in p..dim_s {
            let mut prod = vec![0; dim_s];
            for &(k, x) in alg.product(p, q) {
                prod[k as usize] = x;
            }
            if pi.mul_vec(f, &prod) != a.mul(&columns[p], &columns[q]) {
                multiplicative = false;
            }
        }
    }
    let kernel = Subspace::from_vectors(f, dim_s, pi.nullspace(f));
    let projection_ok = multiplicative && pi.rank(f) == dim_r && kernel == socle;

    // preimages of the basis of R through an augmented echelon form
    let mut aug = Subspace::zero(dim_r + dim_s);
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        v.resize(dim_r + dim_s, 0);
        v[dim_r + j] = 1;
        aug.insert(f, v);
    }
    let mut pre: Vec<Option<Vec<u32>>> = vec![None; dim_r];
    for (row, &p) in aug.basis().iter().zip(aug.pivots()) {
        if p < dim_r {
            pre[p] = Some(row[dim_r..].to_vec());
        }
    }
    let iso_ok = match pre.into_iter().collect::<Option<Vec<_>>>() {
        None => false,
        Some(pre) => (0..dim_r).all(|b| {
            (b..dim_r).all(|c| {
                let mut diff = alg.mul(&pre[b], &pre[c]);
                if let Some(bc) = a.mul_basis(b, c) {
                    f.axpy(&mut diff, f.neg(1), &pre[bc]);
                }
                socle.contains(f, &diff)
            })
        }),
    };

    let dw = w.dim();
    let fx = &columns[1..];
    let mut rows = Subspace::zero(dw);
    for y in 0..dw {
        // x -> x f(y) + y f(x), coordinate by coordinate
        let images: Vec<Vec<u32>> = (0..dw)
            .map(|x| {
                let mut v = w.act(a, &fx[y], &unit(dw, x));
                f.axpy(&mut v, 1, &w.act(a, &fx[x], &unit(dw, y)));
                v
            })
            .collect();
        for k in 0..dw {
            rows.insert(f, images.iter().map(|v| v[k]).collect());
        }
    }
    let displayed_socle_dim = dw - rows.dim();

    let graded_socle_ok = alg.degrees().map(|d| {
        let top = a.top_degree() as i32 + 1;
        socle.dim() == 1
            && socle.basis()[0].iter().enumerate().all(|(i, &c)| c == 0 || d[i] == top)
    });
    CoverReport {
        dim_ok: dim_s == dim_r + 1,
        socle_dim: socle.dim(),
        socle_ok: socle.dim() == 1,
        projection_ok,
        iso_ok,
        displayed_socle_dim,
        graded_socle_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialIdeal;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn alg(n: usize, gens: &[&[u32]]) -> FiniteAlgebra {
        FiniteAlgebra::new(&MonomialIdeal::from_exponents(n, gens).unwrap(), PrimeField::default())
            .unwrap()
    }

    fn run(a: &FiniteAlgebra) -> (CanonicalModule, HomSpace, TeterStatus) {
        let w = CanonicalModule::new(a).unwrap();
        let dual = w.dual(a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let st = teter_test(a, &w, &dual, DEFAULT_SAMPLES, &mut rng).unwrap();
        (w, dual, st)
    }

    #[test]
    fn square_zero_cover() {
        let a = alg(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let (w, dual, st) = run(&a);
        let TeterStatus::Found { f, shift, .. } = st else { panic!("{st:?}") };
        assert!(check_surjection(&a, &w, &dual, &f).unwrap().all());
        let s = build_cover(&a, &w, &dual, &f, shift).unwrap();
        assert_eq!(s.algebra.hilbert_function(), Some(vec![1, 2, 1]));
        let rep = verify_cover(&s, &a, &w, &dual);
        assert!(rep.verified(), "{rep:?}");
        assert_eq!(rep.graded_socle_ok, Some(true));

        let fixture = StructureAlgebra::square_zero_gorenstein(PrimeField::default(), 2);
        assert!(fixture.associativity_failure().is_none() && fixture.is_graded());
        assert_eq!(fixture.socle().dim(), 1);
        assert_eq!(fixture.hilbert_function(), s.algebra.hilbert_function());
    }

    #[test]
    fn field_cover() {
        let a = alg(2, &[&[1, 0], &[0, 1]]);
        let (w, dual, st) = run(&a);
        let f = st.found().unwrap().to_vec();
        let s = build_cover(&a, &w, &dual, &f, Some(0)).unwrap();
        assert_eq!(s.algebra.dim(), 2);
        assert!(verify_cover(&s, &a, &w, &dual).verified());
    }

    #[test]
    fn teter_ideal_cover() {
        let a = alg(2, &[&[3, 0], &[0, 3], &[2, 2]]);
        let (w, dual, st) = run(&a);
        let TeterStatus::Found { f, shift, graded, .. } = st else { panic!("{st:?}") };
        assert!(graded);
        let s = build_cover(&a, &w, &dual, &f, shift).unwrap();
        let rep = verify_cover(&s, &a, &w, &dual);
        assert!(rep.verified(), "{rep:?}");
        // k[x,y]/(x^3, y^3)
        assert_eq!(s.algebra.hilbert_function(), Some(vec![1, 2, 3, 2, 1]));
    }

    #[test]
    fn negatives() {
        let a = alg(2, &[&[3, 0], &[1, 2], &[0, 4]]);
        let (_, _, st) = run(&a);
        assert!(matches!(st, TeterStatus::NotFound { .. } | TeterStatus::Obstructed { .. }));

        // Gorenstein, two variables: ω = R needs one generator, m needs two
        let g = alg(2, &[&[2, 0], &[0, 2]]);
        let (_, _, st) = run(&g);
        assert_eq!(st, TeterStatus::Obstructed { embedding_dim: 2, generators: 1 });

        // tampered map x * f
        let a = alg(2, &[&[3, 0], &[0, 3], &[2, 2]]);
        let (w, dual, st) = run(&a);
        let f = st.found().unwrap();
        let x = a.basis_vector(1);
        let tampered: Vec<u32> =
            (0..dual.ngens()).flat_map(|i| a.mul(&x, dual.image(f, i))).collect();
        assert!(!check_surjection(&a, &w, &dual, &tampered).unwrap().image_is_m);
        match build_cover(&a, &w, &dual, &tampered, None) {
            Err(Error::AssociativityFailure { .. }) => {}
            Ok(s) => assert!(!verify_cover(&s, &a, &w, &dual).verified()),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn bound() {
        assert!(failure_bound(6, 101, 24) < 2f64.powi(-20));
        assert_eq!(failure_bound(200, 101, 24), 1.0);
    }
}
