//! The canonical module `ω = (J : I)/J`, its dual `ω* = Hom(ω, R)`, the trace ideal,
//! the tilde involution on `ω*`, and the biduality kernel of `R/I'`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::module::{hom_space, ActionTable, HomSpace, ModuleRep};
use crate::monomial::{EnclosingIrreducible, IrreducibleComponent, Monomial, MonomialIdeal};

/// `ω` realised inside `S/J` for the enclosing irreducible ideal `J`.
#[derive(Clone, Debug)]
pub struct CanonicalModule {
    enclosing: EnclosingIrreducible,
    module: ModuleRep,
    table: ActionTable,
    generator_index: Vec<usize>,
}

impl CanonicalModule {
    pub fn new(a: &FiniteAlgebra) -> Result<Self> {
        let comps = a.ideal().irreducible_decomposition()?;
        Self::from_components(a, comps)
    }

    pub fn from_components(a: &FiniteAlgebra, comps: Vec<IrreducibleComponent>) -> Result<Self> {
        let enclosing = EnclosingIrreducible::from_components(comps)?;
        let j = enclosing.enclosing.to_ideal();
        let labels: Vec<Monomial> = j
            .standard_monomials()?
            .into_iter()
            .filter(|m| enclosing.f.iter().any(|fi| fi.divides(m)))
            .collect();
        if labels.len() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: labels.len() });
        }
        let index: BTreeMap<&Monomial, usize> =
            labels.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let generator_index: Vec<usize> = enclosing
            .f
            .iter()
            .map(|fi| index.get(fi).copied().ok_or(Error::Inconsistent("f_i is not a label")))
            .collect::<Result<_>>()?;
        let module = ModuleRep::from_monomials(a.nvars(), labels, &generator_index);
        let table = module.action_table(a);
        Ok(CanonicalModule { enclosing, module, table, generator_index })
    }

    pub fn enclosing(&self) -> &EnclosingIrreducible {
        &self.enclosing
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn table(&self) -> &ActionTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn ngens(&self) -> usize {
        self.generator_index.len()
    }

    pub fn labels(&self) -> &[Monomial] {
        self.module.labels().unwrap_or(&[])
    }

    /// Basis index of the generator `f_i`.
    pub fn generator_index(&self, i: usize) -> usize {
        self.generator_index[i]
    }

    pub fn generator(&self, i: usize) -> &[u32] {
        &self.module.generators()[i]
    }

    /// `Soc ω`: labels killed by every variable.
    pub fn socle(&self) -> Subspace {
        let n = self.module.nvars();
        let dim = self.dim();
        let basis = self.labels();
        let inside: BTreeMap<&Monomial, ()> = basis.iter().map(|m| (m, ())).collect();
        Subspace::coordinate(
            dim,
            (0..dim).filter(|&w| {
                (0..n).all(|k| !inside.contains_key(&basis[w].mul(&Monomial::var(n, k))))
            }),
        )
    }

    /// Multiplication by the element `r` of `R` on `ω`.
    pub fn act(&self, a: &FiniteAlgebra, r: &[u32], w: &[u32]) -> Vec<u32> {
        self.table.act_element(a.field(), r, w)
    }

    /// `ω* = Hom(ω, R)`.
    pub fn dual(&self, a: &FiniteAlgebra) -> Result<HomSpace> {
        hom_space(a, &self.module, &ModuleRep::free(a))
    }

    /// `0 :_ω X` for elements `gens` of `R`.
    pub fn annihilated_by(&self, a: &FiniteAlgebra, gens: &[Vec<u32>]) -> Subspace {
        let f = a.field();
        let mut rows = Subspace::zero(self.dim());
        for g in gens {
            let m = self.table.element_matrix(f, g);
            for i in 0..m.rows() {
                rows.insert(f, m.row(i).to_vec());
            }
        }
        Subspace::from_vectors(f, self.dim(), rows.orthogonal_kernel(f))
    }
}

/// `ω*(ω)`: the span of all generator images of the maps in `ω*`.
///
/// The span is an ideal because `ω*` is an `R`-module.
pub fn trace_ideal(a: &FiniteAlgebra, dual: &HomSpace) -> Subspace {
    let f = a.field();
    let mut t = Subspace::zero(a.dim());
    for u in dual.basis() {
        for i in 0..dual.ngens() {
            t.insert(f, dual.image(u, i).to_vec());
        }
    }
    debug_assert!(a.is_ideal(&t));
    t
}

/// Condition (1): `m ⊆ ω*(ω)`.
pub fn condition1(a: &FiniteAlgebra, trace: &Subspace) -> bool {
    trace.contains_subspace(a.field(), &a.maximal_ideal())
}

/// A map `f ∈ ω*` together with `f~` and the elements `r_{f,x} = f~(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildePair {
    /// Generator images of `f`.
    pub f: Vec<u32>,
    /// Generator images of `f~`.
    pub tilde: Vec<u32>,
    /// `r_{f,x}` for each basis element `x` of `ω`.
    pub witnesses: Vec<Vec<u32>>,
}

/// Solve `f(y) x = r y` for `r = f~(x)`; it suffices to do this for `x = f_i`, `y = f_j`.
pub fn tilde(a: &FiniteAlgebra, w: &CanonicalModule, dual: &HomSpace, u: &[u32]) -> Result<TildePair> {
    let dim_r = a.dim();
    let ng = w.ngens();
    let mut images: Vec<u32> = Vec::with_capacity(ng * dim_r);
    for i in 0..ng {
        let gi = w.generator(i);
        // rhs[j] = f(g_j) g_i
        let rhs: Vec<Vec<u32>> = (0..ng).map(|j| w.act(a, dual.image(u, j), gi)).collect();
        let mut r = vec![0u32; dim_r];
        for (b, rb) in r.iter_mut().enumerate() {
            let hit = (0..ng).find_map(|j| {
                w.table().get(b, w.generator_index(j)).first().map(|&(lbl, _)| (j, lbl as usize))
            });
            let (j, lbl) = hit.ok_or(Error::Inconsistent("ω is not faithful"))?;
            *rb = rhs[j][lbl];
        }
        for (j, rj) in rhs.iter().enumerate() {
            if w.act(a, &r, w.generator(j)) != *rj {
                return Err(Error::Inconsistent("no r with f(y) x = r y"));
            }
        }
        images.extend(r);
    }
    if !dual.contains(&images) {
        return Err(Error::Inconsistent("f~ is not R-linear"));
    }
    let witnesses = (0..w.dim())
        .map(|x| {
            let mut e = vec![0; w.dim()];
            e[x] = 1;
            dual.apply(&images, &e)
        })
        .collect();
    Ok(TildePair { f: u.to_vec(), tilde: images, witnesses })
}

/// Matrix of `Φ: f -> f~` in the basis of `ω*`.
pub fn phi_matrix(a: &FiniteAlgebra, w: &CanonicalModule, dual: &HomSpace) -> Result<Matrix> {
    let columns = dual
        .basis()
        .iter()
        .map(|u| {
            let t = tilde(a, w, dual, u)?;
            dual.coordinates(&t.tilde).ok_or(Error::Inconsistent("f~ outside ω*"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(dual.dim(), &columns))
}

/// `f(x) y = f~(y) x` on every pair of basis elements.
pub fn satisfies_star(a: &FiniteAlgebra, w: &CanonicalModule, dual: &HomSpace, t: &TildePair) -> bool {
    let dim = w.dim();
    let fx: Vec<Vec<u32>> = (0..dim).map(|x| dual.apply(&t.f, &unit(dim, x))).collect();
    (0..dim).all(|x| {
        (0..dim).all(|y| {
            w.act(a, &fx[x], &unit(dim, y)) == w.act(a, &t.witnesses[y], &unit(dim, x))
        })
    })
}

fn unit(dim: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; dim];
    e[i] = 1;
    e
}

/// Outcome of the per-map identities for one `f ∈ ω*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapChecks {
    pub involution: bool,
    pub kernel_is_annihilator: bool,
    pub equal_length: bool,
}

impl MapChecks {
    pub fn all(&self) -> bool {
        self.involution && self.kernel_is_annihilator && self.equal_length
    }
}

/// `Φ²(f) = f`, `ker f = 0 :_ω J_f`, and `dim I_f = dim J_f`.
pub fn check_map(a: &FiniteAlgebra, w: &CanonicalModule, dual: &HomSpace, u: &[u32]) -> Result<MapChecks> {
    let f = a.field();
    let t = tilde(a, w, dual, u)?;
    let tt = tilde(a, w, dual, &t.tilde)?;
    let ng = w.ngens();
    let images = |v: &[u32]| -> Vec<Vec<u32>> { (0..ng).map(|i| dual.image(v, i).to_vec()).collect() };
    let i_f = a.ideal_generated_by(images(u));
    let j_f = a.ideal_generated_by(images(&t.tilde));
    let kernel = Subspace::from_vectors(f, w.dim(), dual.matrix(u).nullspace(f));
    let ann = w.annihilated_by(a, &images(&t.tilde));
    Ok(MapChecks {
        involution: tt.tilde == u,
        kernel_is_annihilator: kernel == ann,
        equal_length: i_f.dim() == j_f.dim(),
    })
}

/// Global identities on `ω*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityChecks {
    /// Every basis map passes [`check_map`].
    pub basis_maps: bool,
    /// `Φ` is invertible on `ω*`.
    pub phi_invertible: bool,
    /// `ω*(ω) = Σ I_f = Σ J_f`.
    pub trace_sums: bool,
    /// `0 :_ω ω*(ω) = ∩ ker f`.
    pub socle_kernel: bool,
}

impl DualityChecks {
    pub fn all(&self) -> bool {
        self.basis_maps && self.phi_invertible && self.trace_sums && self.socle_kernel
    }
}

pub fn check_duality(a: &FiniteAlgebra, w: &CanonicalModule, dual: &HomSpace) -> Result<DualityChecks> {
    let f = a.field();
    let ng = w.ngens();
    let mut basis_maps = true;
    let mut sum_i = Subspace::zero(a.dim());
    let mut sum_j = Subspace::zero(a.dim());
    let mut kernels = Subspace::zero(w.dim());
    for u in dual.basis() {
        basis_maps &= check_map(a, w, dual, u)?.all();
        let t = tilde(a, w, dual, u)?;
        for i in 0..ng {
            sum_i.insert(f, dual.image(u, i).to_vec());
            sum_j.insert(f, dual.image(&t.tilde, i).to_vec());
        }
        let m = dual.matrix(u);
        for r in 0..m.rows() {
            kernels.insert(f, m.row(r).to_vec());
        }
    }
    let trace = trace_ideal(a, dual);
    let phi = phi_matrix(a, w, dual)?;
    let intersection = Subspace::from_vectors(f, w.dim(), kernels.orthogonal_kernel(f));
    let ann = w.annihilated_by(a, &a.minimal_generators(&trace));
    Ok(DualityChecks {
        basis_maps,
        phi_invertible: phi.rank(f) == dual.dim(),
        trace_sums: a.ideal_generated_by(sum_i.basis().to_vec()) == trace
            && a.ideal_generated_by(sum_j.basis().to_vec()) == trace,
        socle_kernel: intersection == ann,
    })
}

/// `ω*(ω) ⊆ (I : J_1 + ... + I : J_n)/I`.
pub fn trace_in_colon_sum(a: &FiniteAlgebra, trace: &Subspace, comps: &[IrreducibleComponent]) -> Result<bool> {
    let n = a.nvars();
    let mut sum = MonomialIdeal::zero(n);
    for c in comps {
        sum = sum.sum(&a.ideal().colon_ideal(&c.to_ideal())?)?;
    }
    Ok(a.monomial_ideal_image(&sum).contains_subspace(a.field(), trace))
}

/// Kernel of `R/I' -> (R/I')**` computed two ways, both in the coordinates of
/// `R/I'` (basis monomials off the pivots of `I'`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biduality {
    pub from_hom: Subspace,
    pub from_colon: Subspace,
}

impl Biduality {
    pub fn agree(&self) -> bool {
        self.from_hom == self.from_colon
    }
}

pub fn biduality_kernel(a: &FiniteAlgebra, sub: &Subspace) -> Result<Biduality> {
    let f = a.field();
    let from_colon = a.annihilator(&a.annihilator(sub)).project_modulo(f, sub);
    let quotient = ModuleRep::quotient(a, sub);
    let free = ModuleRep::free(a);
    if quotient.dim() == 0 {
        return Ok(Biduality { from_hom: Subspace::zero(0), from_colon });
    }
    let dual_hom = hom_space(a, &quotient, &free)?;
    let dual = dual_hom.as_module(&free);
    let bidual = hom_space(a, &dual, &free)?;
    // ev(m) has generator images ψ(m) for the generators ψ of the dual
    let maps: Vec<Vec<u32>> = dual.generators().iter().map(|g| dual_hom.combine(g)).collect();
    let mut columns = Vec::with_capacity(quotient.dim());
    for x in 0..quotient.dim() {
        let e = unit(quotient.dim(), x);
        let ev: Vec<u32> = maps.iter().flat_map(|phi| dual_hom.apply(phi, &e)).collect();
        if !bidual.contains(&ev) {
            return Err(Error::Inconsistent("evaluation is not R-linear"));
        }
        columns.push(ev);
    }
    let rows = maps.len() * a.dim();
    let ev = Matrix::from_columns(rows, &columns);
    let from_hom = Subspace::from_vectors(f, quotient.dim(), ev.nullspace(f));
    Ok(Biduality { from_hom, from_colon })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn alg(n: usize, gens: &[&[u32]]) -> FiniteAlgebra {
        FiniteAlgebra::new(&MonomialIdeal::from_exponents(n, gens).unwrap(), PrimeField::default())
            .unwrap()
    }

    #[test]
    fn canonical_modules() {
        let g = alg(2, &[&[2, 0], &[0, 2]]);
        let w = CanonicalModule::new(&g).unwrap();
        assert_eq!((w.dim(), w.ngens()), (4, 1));

        let m2 = alg(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let w = CanonicalModule::new(&m2).unwrap();
        let shown: Vec<_> = w.labels().iter().map(|m| alloc::format!("{m}")).collect();
        assert_eq!(shown, ["x", "y", "x*y"]);
        assert_eq!(w.ngens(), 2);

        let r = alg(2, &[&[3, 0], &[1, 2], &[0, 4]]);
        let w = CanonicalModule::new(&r).unwrap();
        assert_eq!((w.dim(), w.ngens()), (8, 2));
        assert!(w.module().actions_commute(r.field()));
    }

    #[test]
    fn hom_omega_omega_is_r() {
        let r = alg(2, &[&[3, 0], &[1, 2], &[0, 4]]);
        let w = CanonicalModule::new(&r).unwrap();
        let h = hom_space(&r, w.module(), w.module()).unwrap();
        assert_eq!(h.dim(), r.dim());
    }

    #[test]
    fn traces_and_condition1() {
        for (gens, expect) in [
            (&[&[2u32, 0][..], &[0, 2]][..], true),
            (&[&[2, 0], &[1, 1], &[0, 2]], true),
            (&[&[3, 0], &[1, 2], &[0, 4]], false),
        ] {
            let a = alg(2, gens);
            let w = CanonicalModule::new(&a).unwrap();
            let dual = w.dual(&a).unwrap();
            let t = trace_ideal(&a, &dual);
            assert!(a.is_ideal(&t));
            assert_eq!(condition1(&a, &t), expect, "{:?}", a.ideal());
        }
        let g = alg(2, &[&[2, 0], &[0, 2]]);
        let dual = CanonicalModule::new(&g).unwrap().dual(&g).unwrap();
        assert_eq!(trace_ideal(&g, &dual), Subspace::full(4));
    }

    #[test]
    fn tilde_identities() {
        let a = alg(2, &[&[3, 0], &[1, 2], &[0, 4]]);
        let w = CanonicalModule::new(&a).unwrap();
        let dual = w.dual(&a).unwrap();
        let zero = vec![0; dual.ngens() * a.dim()];
        assert_eq!(tilde(&a, &w, &dual, &zero).unwrap().tilde, zero);
        for u in dual.basis() {
            let t = tilde(&a, &w, &dual, u).unwrap();
            assert!(satisfies_star(&a, &w, &dual, &t));
            assert!(check_map(&a, &w, &dual, u).unwrap().all());
        }
        assert!(check_duality(&a, &w, &dual).unwrap().all());
        let trace = trace_ideal(&a, &dual);
        let comps = a.ideal().irreducible_decomposition().unwrap();
        assert!(trace_in_colon_sum(&a, &trace, &comps).unwrap());
    }

    #[test]
    fn biduality_examples() {
        let g = alg(2, &[&[2, 0], &[0, 2]]);
        let b = biduality_kernel(&g, &Subspace::zero(4)).unwrap();
        assert!(b.agree() && b.from_hom.is_zero());
        let b = biduality_kernel(&g, &g.socle()).unwrap();
        assert!(b.agree() && b.from_hom.is_zero());

        // non almost Gorenstein: some I' has a biduality kernel outside Soc(R/I')
        let r = alg(2, &[&[3, 0], &[1, 2], &[0, 4]]);
        let mut escapes = false;
        for c in 0..r.dim() {
            let sub = r.ideal_generated_by([r.basis_vector(c)]);
            let b = biduality_kernel(&r, &sub).unwrap();
            assert!(b.agree());
            let q = ModuleRep::quotient(&r, &sub);
            let f = r.field();
            escapes |= b.from_hom.basis().iter().any(|v| (0..2).any(|k| q.act_var(f, k, v).iter().any(|&x| x != 0)));
        }
        assert!(escapes);
    }
}
