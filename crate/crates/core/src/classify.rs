//! Combinatorial almost-Gorenstein criteria for monomial quotients, the type-two
//! and type-three classifications, and enumeration of condition (2) over monomial ideals.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::FiniteAlgebra;
use crate::canonical::CanonicalModule;
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module::HomSpace;
use crate::monomial::{irreducible_colon, IrreducibleComponent, Monomial, MonomialIdeal};
use crate::perm::permutations;

/// Largest variable count (after splitting off trivial variables) for template search.
pub const MAX_TEMPLATE_VARS: usize = 6;

/// `J_1 : J_2 + J_2 : J_1 = m`.
pub fn typetwo_criterion(j1: &IrreducibleComponent, j2: &IrreducibleComponent) -> Result<bool> {
    let sum = irreducible_colon(j1, j2)?.sum(&irreducible_colon(j2, j1)?)?;
    Ok(sum == MonomialIdeal::maximal(j1.nvars()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeTwoCase {
    A,
    B,
    C,
}

impl TypeTwoCase {
    pub fn letter(self) -> char {
        match self {
            TypeTwoCase::A => 'a',
            TypeTwoCase::B => 'b',
            TypeTwoCase::C => 'c',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeTwoMatch {
    /// Lowest matching case.
    pub case: TypeTwoCase,
    /// Every matching case, ascending.
    pub matches: Vec<TypeTwoCase>,
    /// `perm[k]` is the position of variable `k` in the normal form.
    pub relabel: Vec<usize>,
    /// Whether the components were swapped to reach the normal form.
    pub swapped: bool,
    pub normal_form: MonomialIdeal,
}

/// The single variable `k` if `x^{(p - q)+} = x_k`.
fn single_unit_variable(p: &[u32], q: &[u32]) -> Option<usize> {
    let mut found = None;
    for (k, (&a, &b)) in p.iter().zip(q).enumerate() {
        if a > b {
            if a - b != 1 || found.is_some() {
                return None;
            }
            found = Some(k);
        }
    }
    found
}

/// Classify a type-two decomposition into the three shapes `a`, `b`, `c`.
pub fn typetwo_classify(j1: &IrreducibleComponent, j2: &IrreducibleComponent) -> Result<Option<TypeTwoMatch>> {
    if !typetwo_criterion(j1, j2)? {
        return Ok(None);
    }
    let (c, d) = (j1.exponents(), j2.exponents());
    let n = c.len();
    let either_one = |k: usize| c[k] == 1 || d[k] == 1;
    let u = single_unit_variable(c, d);
    let v = single_unit_variable(d, c);
    let mut matches = Vec::new();
    if (0..n).all(either_one) {
        matches.push(TypeTwoCase::A);
    }
    let b_var = [(u, false), (v, true)].into_iter().find_map(|(k, sw)| {
        k.filter(|&k| (0..n).filter(|&i| i != k).all(either_one)).map(|k| (k, sw))
    });
    if b_var.is_some() {
        matches.push(TypeTwoCase::B);
    }
    let c_vars = match (u, v) {
        (Some(p), Some(q)) if (0..n).filter(|&i| i != p && i != q).all(|i| c[i] == 1 && d[i] == 1) => {
            Some((q, p))
        }
        _ => None,
    };
    if c_vars.is_some() {
        matches.push(TypeTwoCase::C);
    }
    let Some(&case) = matches.first() else { return Ok(None) };
    let (order, swapped): (Vec<usize>, bool) = match case {
        TypeTwoCase::A => {
            let mut order: Vec<usize> = (0..n).filter(|&k| c[k] == 1).collect();
            order.extend((0..n).filter(|&k| c[k] != 1));
            (order, false)
        }
        TypeTwoCase::B => {
            let (k, sw) = b_var.unwrap_or((n - 1, false));
            let mut order: Vec<usize> = (0..n).filter(|&i| i != k).collect();
            order.push(k);
            (order, sw)
        }
        TypeTwoCase::C => {
            let (x, y) = c_vars.unwrap_or((0, 1));
            let mut order = vec![x, y];
            order.extend((0..n).filter(|&i| i != x && i != y));
            (order, false)
        }
    };
    let mut relabel = vec![0; n];
    for (pos, &k) in order.iter().enumerate() {
        relabel[k] = pos;
    }
    let ideal = j1.to_ideal().intersect(&j2.to_ideal())?;
    Ok(Some(TypeTwoMatch { case, matches, normal_form: ideal.permuted(&relabel), relabel, swapped }))
}

/// Whether the components are `J : x_k` for `J = (x^t)`, over the variables with `t_k >= 2`.
pub fn is_teter(comps: &[IrreducibleComponent]) -> bool {
    let Some(first) = comps.first() else { return false };
    let n = first.nvars();
    let t: Vec<u32> = (0..n).map(|k| comps.iter().map(|c| c.exponents()[k]).max().unwrap_or(1)).collect();
    let mut expected: Vec<Vec<u32>> = (0..n)
        .filter(|&k| t[k] >= 2)
        .map(|k| {
            let mut e = t.clone();
            e[k] -= 1;
            e
        })
        .collect();
    let mut got: Vec<Vec<u32>> = comps.iter().map(|c| c.exponents().to_vec()).collect();
    expected.sort();
    got.sort();
    comps.len() >= 2 && expected == got
}

/// Necessary condition on component `i` for condition (2):
/// `Σ_{j≠i} J_i : J_j + ∩_j J_j : J_i ⊇ m`.
pub fn component_condition(comps: &[IrreducibleComponent], i: usize) -> Result<bool> {
    let n = comps[i].nvars();
    let mut sum = MonomialIdeal::zero(n);
    let mut cap = MonomialIdeal::unit(n);
    for (j, cj) in comps.iter().enumerate() {
        if j != i {
            sum = sum.sum(&irreducible_colon(&comps[i], cj)?)?;
        }
        cap = cap.intersect(&irreducible_colon(cj, &comps[i])?)?;
    }
    Ok(sum.sum(&cap)?.contains_ideal(&MonomialIdeal::maximal(n)))
}

/// The terms `(J + (f_i)) : (J + (f_1, ..., f_n))` computed in `S`.
fn colon_terms(comps: &[IrreducibleComponent]) -> Result<Vec<MonomialIdeal>> {
    let enc = crate::monomial::EnclosingIrreducible::from_components(comps.to_vec())?;
    let j = enc.enclosing.to_ideal();
    let mut k = j.clone();
    for fi in &enc.f {
        k = k.add_monomial(fi)?;
    }
    enc.f.iter().map(|fi| j.add_monomial(fi)?.colon_ideal(&k)).collect()
}

/// Necessary conditions for condition (1): `Σ_i (f_i) : K ⊇ m`, and some `(f_i) : K ⊄ m^2`.
pub fn generator_colon_conditions(comps: &[IrreducibleComponent]) -> Result<(bool, bool)> {
    let terms = colon_terms(comps)?;
    let n = comps[0].nvars();
    let mut sum = MonomialIdeal::zero(n);
    for t in &terms {
        sum = sum.sum(t)?;
    }
    let m = MonomialIdeal::maximal(n);
    let m2 = m.product(&m)?;
    let colon_sum_is_m = sum.contains_ideal(&m);
    let colon_outside_m2 = terms.iter().any(|t| !m2.contains_ideal(t));
    Ok((colon_sum_is_m, colon_outside_m2))
}

/// Colon test for one variable `x`: if `x (I : (I : J_i)) ⊆ J_i` for all `i` then `x ∈ Σ I : J_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VariableColonEntry {
    /// `x (I : (I : J_i)) ⊆ J_i` for all `i`.
    pub antecedent: bool,
    /// `x ∈ Σ I : J_i`.
    pub consequent: bool,
}

impl VariableColonEntry {
    pub fn holds(&self) -> bool {
        !self.antecedent || self.consequent
    }
}

pub fn variable_colon_check(ideal: &MonomialIdeal, comps: &[IrreducibleComponent]) -> Result<Vec<VariableColonEntry>> {
    let n = ideal.nvars();
    let colons: Vec<MonomialIdeal> =
        comps.iter().map(|c| ideal.colon_ideal(&c.to_ideal())).collect::<Result<_>>()?;
    let bicolons: Vec<MonomialIdeal> =
        colons.iter().map(|c| ideal.colon_ideal(c)).collect::<Result<_>>()?;
    let mut sum = MonomialIdeal::zero(n);
    for c in &colons {
        sum = sum.sum(c)?;
    }
    (0..n)
        .map(|k| {
            let x = MonomialIdeal::new(n, vec![Monomial::var(n, k)])?;
            let mut antecedent = true;
            for (c, bc) in comps.iter().zip(&bicolons) {
                antecedent &= c.to_ideal().contains_ideal(&x.product(bc)?);
            }
            Ok(VariableColonEntry { antecedent, consequent: sum.contains(&Monomial::var(n, k)) })
        })
        .collect()
}

/// Build `φ: ω -> R` with `φ(f_i) = u_i` (`None` meaning zero) after checking
/// `u_i f_j ≡ u_j f_i (mod J)`; the result is checked against the Hom space.
pub fn witness_map(
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
    u: &[Option<Monomial>],
) -> Result<Vec<u32>> {
    let enc = w.enclosing();
    if u.len() != enc.f.len() {
        return Err(Error::WrongType { expected: enc.f.len(), found: u.len() });
    }
    let reduce = |m: Option<Monomial>| m.filter(|m| !enc.enclosing.contains(m));
    for i in 0..u.len() {
        for j in i + 1..u.len() {
            let lhs = reduce(u[i].as_ref().map(|ui| ui.mul(&enc.f[j])));
            let rhs = reduce(u[j].as_ref().map(|uj| uj.mul(&enc.f[i])));
            if lhs != rhs {
                return Err(Error::CongruenceFailure { i, j });
            }
        }
    }
    let mut images = Vec::with_capacity(u.len() * a.dim());
    for ui in u {
        let mut v = vec![0; a.dim()];
        if let Some(b) = ui.as_ref().and_then(|m| a.index_of(m)) {
            v[b] = 1;
        }
        images.extend(v);
    }
    if !dual.contains(&images) {
        return Err(Error::Inconsistent("compatible images do not define an R-linear map"));
    }
    Ok(images)
}

/// A matched type-three template.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeThreeMatch {
    /// Lowest matching case, 1 to 5.
    pub case: u8,
    /// Every matching case, ascending.
    pub matches: Vec<u8>,
    /// `components[i]` is the input component playing template component `i`.
    pub components: [usize; 3],
    /// `variables[t]` is the input variable playing template variable `t`.
    pub variables: Vec<usize>,
    /// Input variables with exponent one in every component, dropped before matching.
    pub omitted: Vec<usize>,
    /// Generator images of each witness map, indexed by input component.
    pub witnesses: Vec<Vec<Option<Monomial>>>,
}

fn col(m: &[Vec<u32>; 3], k: usize) -> (u32, u32, u32) {
    (m[0][k], m[1][k], m[2][k])
}

/// Template predicates on a relabeled exponent matrix; `m[i][k]` is the exponent of
/// variable `k` in template component `i`.
fn template_matches(case: u8, m: &[Vec<u32>; 3]) -> bool {
    let n = m[0].len();
    match case {
        1 => {
            let t: Vec<u32> = (0..n).map(|k| m[0][k].max(m[1][k]).max(m[2][k])).collect();
            n == 3
                && (0..3).all(|i| (0..n).all(|k| m[i][k] == if k == i { t[k] - 1 } else { t[k] }))
        }
        2 => {
            let (a0, a1, a2) = col(m, 0);
            let (b0, b1, b2) = col(m, 1);
            n >= 3
                && a1 == a0 + 1
                && a2 == 1
                && b1 == 1
                && b2 == b0 + 1
                && (2..n).all(|k| {
                    let (c0, c1, c2) = col(m, k);
                    c0 > 1 && c1 == 1 && c2 == 1
                })
        }
        3 => {
            let (a0, a1, a2) = col(m, 0);
            let (b0, b1, b2) = col(m, 1);
            n >= 3
                && a1 == a0 + 1
                && a2 == 1
                && b0 == b1 + 1
                && b2 == 1
                && (2..n).all(|k| {
                    let (c0, c1, c2) = col(m, k);
                    c0 == 1 && c1 == 1 && c2 > 1
                })
        }
        4 => {
            let (a0, a1, a2) = col(m, 0);
            let is_b = |k: usize| {
                let (c0, c1, c2) = col(m, k);
                c0 == 1 && c1 == 1 && c2 > 1
            };
            let is_c = |k: usize| {
                let (c0, c1, c2) = col(m, k);
                c0 > 1 && c1 == 1 && c2 == 1
            };
            a1 == a0 + 1
                && a2 == 1
                && (1..n).all(|k| is_b(k) || is_c(k))
                && (1..n).any(is_b)
                && (1..n).any(is_c)
        }
        5 => {
            let group = |k: usize| -> Option<usize> {
                let (c0, c1, c2) = col(m, k);
                match (c0 == 1, c1 == 1, c2 == 1) {
                    (true, true, false) => Some(2),
                    (true, false, true) => Some(1),
                    (false, true, true) => Some(0),
                    _ => None,
                }
            };
            let groups: Option<Vec<usize>> = (0..n).map(group).collect();
            groups.is_some_and(|g| (0..3).all(|i| g.contains(&i)))
        }
        _ => false,
    }
}

/// Witness maps for a template, as generator images in template coordinates.
fn template_witnesses(case: u8, m: &[Vec<u32>; 3]) -> Vec<[Option<Monomial>; 3]> {
    let n = m[0].len();
    let x = |k: usize| Monomial::var(n, k);
    let pow = |k: usize, e: u32| Monomial::pure_power(n, k, e);
    let prod = |terms: &[(usize, u32)]| {
        let mut e = vec![0u32; n];
        for &(k, p) in terms {
            e[k] += p;
        }
        Monomial::new(e)
    };
    match case {
        1 => {
            let t: Vec<u32> = (0..n).map(|k| m[0][k].max(m[1][k]).max(m[2][k])).collect();
            let f: Vec<Monomial> = (0..3)
                .map(|i| Monomial::new((0..n).map(|k| t[k] - m[i][k]).collect()))
                .collect();
            vec![[Some(f[0].clone()), Some(f[1].clone()), Some(f[2].clone())]]
        }
        2 => {
            let (a, b) = (m[0][0], m[0][1]);
            let rest: Vec<(usize, u32)> = (2..n).map(|k| (k, m[0][k] - 1)).collect();
            let mut out: Vec<[Option<Monomial>; 3]> =
                (2..n).map(|k| [Some(x(k)), Some(pow(1, b)), Some(pow(0, a))]).collect();
            let mut t1 = rest.clone();
            t1.push((1, b - 1));
            out.push([Some(x(0)), Some(prod(&t1)), None]);
            let mut t2 = rest;
            t2.push((0, a - 1));
            out.push([Some(x(1)), None, Some(prod(&t2))]);
            out
        }
        3 => (2..n).map(|k| [Some(x(0)), Some(x(1)), Some(x(k))]).collect(),
        4 => {
            let a = m[0][0];
            let bs: Vec<usize> = (1..n).filter(|&k| m[2][k] > 1).collect();
            let cs: Vec<usize> = (1..n).filter(|&k| m[0][k] > 1).collect();
            let mut out = Vec::new();
            for &i in &bs {
                for &j in &cs {
                    out.push([Some(x(j)), Some(pow(0, a)), Some(x(i))]);
                }
            }
            let tail: Vec<(usize, u32)> = cs.iter().map(|&k| (k, m[0][k] - 1)).collect();
            out.push([Some(x(0)), Some(prod(&tail)), None]);
            out
        }
        5 => {
            let in_group = |g: usize| (0..n).filter(move |&k| m[g][k] > 1);
            let mut out = Vec::new();
            for i in in_group(2) {
                for j in in_group(1) {
                    for k in in_group(0) {
                        out.push([Some(x(k)), Some(x(j)), Some(x(i))]);
                    }
                }
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Match a type-three decomposition against the five templates by brute force over
/// component and variable relabelings.
pub fn typethree_classify(comps: &[IrreducibleComponent]) -> Result<Option<TypeThreeMatch>> {
    if comps.len() != 3 {
        return Err(Error::WrongType { expected: 3, found: comps.len() });
    }
    let n = comps[0].nvars();
    let kept: Vec<usize> = (0..n).filter(|&k| comps.iter().any(|c| c.exponents()[k] > 1)).collect();
    let omitted: Vec<usize> = (0..n).filter(|k| !kept.contains(k)).collect();
    if kept.len() > MAX_TEMPLATE_VARS {
        return Err(Error::TooManyVariables { nvars: kept.len(), max: MAX_TEMPLATE_VARS });
    }
    let reduced: Vec<Vec<u32>> =
        comps.iter().map(|c| kept.iter().map(|&k| c.exponents()[k]).collect()).collect();
    let r = kept.len();
    let var_perms = permutations(r);
    let mut best: Option<(u8, [usize; 3], Vec<usize>)> = None;
    let mut matches = Vec::new();
    for case in 1..=5u8 {
        let mut hit = None;
        'search: for cp in permutations(3) {
            for vp in &var_perms {
                let m: [Vec<u32>; 3] =
                    core::array::from_fn(|i| vp.iter().map(|&k| reduced[cp[i]][k]).collect());
                if template_matches(case, &m) {
                    hit = Some(([cp[0], cp[1], cp[2]], vp.clone()));
                    break 'search;
                }
            }
        }
        if let Some((cp, vp)) = hit {
            matches.push(case);
            if best.is_none() {
                best = Some((case, cp, vp));
            }
        }
    }
    let Some((case, cp, vp)) = best else { return Ok(None) };
    let m: [Vec<u32>; 3] = core::array::from_fn(|i| vp.iter().map(|&k| reduced[cp[i]][k]).collect());
    let variables: Vec<usize> = vp.iter().map(|&k| kept[k]).collect();
    // lift template monomials back to the input variables
    let lift = |t: &Monomial| {
        let mut e = vec![0u32; n];
        for (pos, &exp) in t.exponents().iter().enumerate() {
            e[variables[pos]] = exp;
        }
        Monomial::new(e)
    };
    let witnesses = template_witnesses(case, &m)
        .into_iter()
        .map(|images| {
            let mut out: Vec<Option<Monomial>> = vec![None; 3];
            for (i, img) in images.iter().enumerate() {
                out[cp[i]] = img.as_ref().map(lift);
            }
            out
        })
        .collect();
    Ok(Some(TypeThreeMatch { case, matches, components: cp, variables, omitted, witnesses }))
}

/// Validate each witness through [`witness_map`] and check that their images
/// together contain `m`. Returns the built maps.
pub fn validate_witnesses(
    a: &FiniteAlgebra,
    w: &CanonicalModule,
    dual: &HomSpace,
    witnesses: &[Vec<Option<Monomial>>],
) -> Result<(Vec<Vec<u32>>, bool)> {
    let maps: Vec<Vec<u32>> =
        witnesses.iter().map(|u| witness_map(a, w, dual, u)).collect::<Result<_>>()?;
    let images = maps.iter().flat_map(|u| (0..dual.ngens()).map(|i| dual.image(u, i).to_vec()));
    let covered = a.ideal_generated_by(images).contains_subspace(a.field(), &a.maximal_ideal());
    Ok((maps, covered))
}

/// How a condition (2) verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition2Mode {
    /// Every monomial ideal of `R` was checked.
    Exhaustive,
    /// A violating monomial ideal was found; the verdict is definite.
    Witnessed,
    /// The enumeration exceeded the cap; only a sample was checked.
    Sampled,
}

impl Condition2Mode {
    pub fn label(self) -> &'static str {
        match self {
            Condition2Mode::Exhaustive => "exhaustive",
            Condition2Mode::Witnessed => "witnessed",
            Condition2Mode::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition2Result {
    pub holds: bool,
    pub mode: Condition2Mode,
    /// Number of ideals checked.
    pub checked: u64,
    /// Basis indices spanning a violating monomial ideal.
    pub witness: Option<Vec<usize>>,
    /// A violating non-monomial ideal found by random sampling, as spanning vectors.
    pub general_witness: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Condition2Params {
    pub cap: u64,
    pub allow_sampling: bool,
    /// Random non-monomial ideals tried when sampling.
    pub random_ideals: usize,
}

impl Default for Condition2Params {
    fn default() -> Self {
        Condition2Params { cap: 2_000_000, allow_sampling: true, random_ideals: 8 }
    }
}

const WORDS: usize = 8;
type Bits = [u64; WORDS];

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

/// Bitset tables for monomial ideals of `R`.
struct Lattice {
    dim: usize,
    /// `zero[b]`: basis elements `c` with `b c = 0`.
    zero: Vec<Bits>,
    /// `succ[b]`: nonzero `x_k b`.
    succ: Vec<Bits>,
    full: Bits,
}

impl Lattice {
    fn new(a: &FiniteAlgebra) -> Self {
        let dim = a.dim();
        let mut full = [0u64; WORDS];
        for i in 0..dim {
            set(&mut full, i);
        }
        let zero = (0..dim)
            .map(|b| {
                let mut z = [0u64; WORDS];
                for c in 0..dim {
                    if a.mul_basis(b, c).is_none() {
                        set(&mut z, c);
                    }
                }
                z
            })
            .collect();
        let succ = (0..dim)
            .map(|b| {
                let mut s = [0u64; WORDS];
                for k in 0..a.nvars() {
                    if let Some(c) = a.var_mul(k, b) {
                        set(&mut s, c);
                    }
                }
                s
            })
            .collect();
        Lattice { dim, zero, succ, full }
    }

    fn ann(&self, u: &Bits) -> Bits {
        let mut out = self.full;
        for i in 0..self.dim {
            if bit(u, i) {
                for w in 0..WORDS {
                    out[w] &= self.zero[i][w];
                }
            }
        }
        out
    }

    /// `0 : (0 : U) ⊆ U : m`.
    fn satisfies(&self, u: &Bits) -> bool {
        let annann = self.ann(&self.ann(u));
        (0..self.dim).all(|b| {
            !bit(&annann, b) || (0..WORDS).all(|w| self.succ[b][w] & !u[w] == 0)
        })
    }

    fn is_upset(&self, u: &Bits) -> bool {
        (0..self.dim).all(|b| !bit(u, b) || (0..WORDS).all(|w| self.succ[b][w] & !u[w] == 0))
    }

    /// Smallest monomial ideal containing the given basis elements.
    fn closure(&self, seeds: impl IntoIterator<Item = usize>) -> Bits {
        let mut u = [0u64; WORDS];
        let mut stack: Vec<usize> = seeds.into_iter().collect();
        while let Some(b) = stack.pop() {
            if bit(&u, b) {
                continue;
            }
            set(&mut u, b);
            for c in 0..self.dim {
                if bit(&self.succ[b], c) {
                    stack.push(c);
                }
            }
        }
        u
    }
}

fn members(u: &Bits, dim: usize) -> Vec<usize> {
    (0..dim).filter(|&i| bit(u, i)).collect()
}

enum Walk {
    Done,
    Violation(Bits),
    Capped,
}

/// Depth-first walk over the monomial ideals of `R`, deciding basis elements from
/// the highest index down; an element may join only once all its successors have.
fn walk(l: &Lattice, idx: usize, u: &mut Bits, count: &mut u64, cap: u64, check: bool) -> Walk {
    if idx == 0 {
        // decide the element 1, which is the last one
        for include in [false, true] {
            if include && !(0..WORDS).all(|w| l.succ[0][w] & !u[w] == 0) {
                continue;
            }
            let mut v = *u;
            if include {
                set(&mut v, 0);
            }
            *count += 1;
            if *count > cap {
                return Walk::Capped;
            }
            if check && !l.satisfies(&v) {
                return Walk::Violation(v);
            }
        }
        return Walk::Done;
    }
    let b = idx;
    match walk(l, idx - 1, u, count, cap, check) {
        Walk::Done => {}
        other => return other,
    }
    if (0..WORDS).all(|w| l.succ[b][w] & !u[w] == 0) {
        set(u, b);
        let r = walk(l, idx - 1, u, count, cap, check);
        u[b / 64] &= !(1 << (b % 64));
        return r;
    }
    Walk::Done
}

/// Number of monomial ideals of `R` (including `0` and `R`), or `None` above `cap`.
pub fn count_monomial_ideals(a: &FiniteAlgebra, cap: u64) -> Option<u64> {
    let l = Lattice::new(a);
    let mut u = [0u64; WORDS];
    let mut count = 0;
    match walk(&l, a.dim() - 1, &mut u, &mut count, cap, false) {
        Walk::Capped => None,
        _ => Some(count),
    }
}

/// Deterministic sample of monomial ideals: principal ideals and pairwise sums,
/// components and their sums, colons `I : J_i`, and powers of `m`.
fn lattice_sample(a: &FiniteAlgebra, l: &Lattice) -> Result<Vec<Bits>> {
    let dim = a.dim();
    let mut out: Vec<Bits> = Vec::new();
    for b in 0..dim {
        out.push(l.closure([b]));
        for c in b + 1..dim {
            out.push(l.closure([b, c]));
        }
    }
    let comps = a.ideal().irreducible_decomposition()?;
    let images: Vec<Bits> = comps
        .iter()
        .map(|c| {
            let ideal = c.to_ideal();
            l.closure((0..dim).filter(|&b| ideal.contains(&a.basis()[b])))
        })
        .collect();
    for mask in 1u32..(1 << comps.len().min(12)) {
        let mut u = [0u64; WORDS];
        for (i, img) in images.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for w in 0..WORDS {
                    u[w] |= img[w];
                }
            }
        }
        out.push(u);
    }
    for c in &comps {
        let colon = a.ideal().colon_ideal(&c.to_ideal())?;
        out.push(l.closure((0..dim).filter(|&b| colon.contains(&a.basis()[b]))));
    }
    for d in 0..=a.top_degree() + 1 {
        out.push(l.closure((0..dim).filter(|&b| a.degrees()[b] >= d)));
    }
    Ok(out)
}

/// Linear-algebra check of `0 : (0 : I') ⊆ I' : m` for an arbitrary ideal.
pub fn condition2_holds_for(a: &FiniteAlgebra, sub: &Subspace) -> bool {
    let annann = a.annihilator(&a.annihilator(sub));
    let colon = a.quotient(sub, &a.maximal_ideal());
    colon.contains_subspace(a.field(), &annann)
}

/// Condition (2) over monomial ideals: `0 : (0 : I') ⊆ I' : m` for every monomial
/// ideal `I'` of `R`. Exhaustive up to `cap` ideals, then sampled if allowed.
pub fn condition2_monomial<G: Rng + ?Sized>(
    a: &FiniteAlgebra,
    params: &Condition2Params,
    rng: &mut G,
) -> Result<Condition2Result> {
    if a.dim() > WORDS * 64 {
        return Err(Error::DimensionCap { dim: a.dim(), cap: WORDS * 64 });
    }
    let l = Lattice::new(a);
    let dim = a.dim();
    let mut u = [0u64; WORDS];
    let mut count = 0;
    match walk(&l, dim - 1, &mut u, &mut count, params.cap, true) {
        Walk::Done => {
            return Ok(Condition2Result {
                holds: true,
                mode: Condition2Mode::Exhaustive,
                checked: count,
                witness: None,
                general_witness: None,
            })
        }
        Walk::Violation(v) => {
            return Ok(Condition2Result {
                holds: false,
                mode: Condition2Mode::Witnessed,
                checked: count,
                witness: Some(members(&v, dim)),
                general_witness: None,
            })
        }
        Walk::Capped => {}
    }
    if !params.allow_sampling {
        return Err(Error::CapExceeded { count, cap: params.cap });
    }
    let sample = lattice_sample(a, &l)?;
    let mut checked = count;
    for s in &sample {
        debug_assert!(l.is_upset(s));
        checked += 1;
        if !l.satisfies(s) {
            return Ok(Condition2Result {
                holds: false,
                mode: Condition2Mode::Witnessed,
                checked,
                witness: Some(members(s, dim)),
                general_witness: None,
            });
        }
    }
    let f = a.field();
    let m = a.maximal_ideal();
    for _ in 0..params.random_ideals {
        let gens: Vec<Vec<u32>> = (0..2)
            .map(|_| {
                let mut v = vec![0u32; dim];
                for &b in m.pivots() {
                    v[b] = f.random(rng);
                }
                v
            })
            .collect();
        let sub = a.ideal_generated_by(gens.clone());
        checked += 1;
        if !condition2_holds_for(a, &sub) {
            return Ok(Condition2Result {
                holds: false,
                mode: Condition2Mode::Sampled,
                checked,
                witness: None,
                general_witness: Some(gens),
            });
        }
    }
    Ok(Condition2Result {
        holds: true,
        mode: Condition2Mode::Sampled,
        checked,
        witness: None,
        general_witness: None,
    })
}

/// Case label of a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Case {
    Gorenstein,
    TypeTwo { case: TypeTwoCase, teter: bool },
    TypeThree(u8),
    Teter,
    NotAlmostGorenstein,
    Unclassified,
}

impl Case {
    pub fn label(&self) -> String {
        match self {
            Case::Gorenstein => "Gorenstein".into(),
            Case::TypeTwo { case, teter } => {
                let suffix = if *teter && *case != TypeTwoCase::C { "→Teter" } else { "" };
                format!("TypeTwo:{}{}", case.letter(), suffix)
            }
            Case::TypeThree(k) => format!("TypeThree:{k}"),
            Case::Teter => "Teter".into(),
            Case::NotAlmostGorenstein => "NotAlmostGorenstein".into(),
            Case::Unclassified => "Unclassified".into(),
        }
    }

    pub fn is_almost_gorenstein(&self) -> Option<bool> {
        match self {
            Case::NotAlmostGorenstein => Some(false),
            Case::Unclassified => None,
            _ => Some(true),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn comp(e: &[u32]) -> IrreducibleComponent {
        IrreducibleComponent::new(e.to_vec()).unwrap()
    }

    fn alg(n: usize, gens: &[&[u32]]) -> FiniteAlgebra {
        FiniteAlgebra::new(&MonomialIdeal::from_exponents(n, gens).unwrap(), PrimeField::default())
            .unwrap()
    }

    #[test]
    fn typetwo_examples() {
        assert!(typetwo_criterion(&comp(&[1, 2]), &comp(&[2, 1])).unwrap());
        assert!(!typetwo_criterion(&comp(&[3, 2]), &comp(&[1, 4])).unwrap());
        assert!(typetwo_criterion(&comp(&[2, 3]), &comp(&[3, 2])).unwrap());

        let a = typetwo_classify(&comp(&[3, 1]), &comp(&[1, 3])).unwrap().unwrap();
        assert_eq!(a.case, TypeTwoCase::A);
        let b = typetwo_classify(&comp(&[1, 3]), &comp(&[2, 2])).unwrap().unwrap();
        assert_eq!(b.case, TypeTwoCase::B);
        assert_eq!(b.normal_form, MonomialIdeal::from_exponents(2, &[&[2, 0], &[0, 3], &[1, 2]]).unwrap());
        let c = typetwo_classify(&comp(&[2, 3]), &comp(&[3, 2])).unwrap().unwrap();
        assert_eq!(c.case, TypeTwoCase::C);
        assert_eq!(c.normal_form, MonomialIdeal::from_exponents(2, &[&[3, 0], &[0, 3], &[2, 2]]).unwrap());
        assert!(typetwo_classify(&comp(&[3, 2]), &comp(&[1, 4])).unwrap().is_none());
    }

    #[test]
    fn teter_templates() {
        assert!(is_teter(&[comp(&[1, 2]), comp(&[2, 1])]));
        assert!(is_teter(&[comp(&[2, 3]), comp(&[3, 2])]));
        assert!(!is_teter(&[comp(&[1, 4]), comp(&[3, 2])]));
        assert!(!is_teter(&[comp(&[2, 2])]));
    }

    #[test]
    fn component_condition_examples() {
        assert!(component_condition(&[comp(&[2, 2])], 0).unwrap());
        let good = [comp(&[1, 2]), comp(&[2, 1])];
        assert!(component_condition(&good, 0).unwrap() && component_condition(&good, 1).unwrap());
        assert!(!component_condition(&[comp(&[3, 2]), comp(&[1, 4])], 0).unwrap());
    }

    #[test]
    fn typethree_examples() {
        let case2 = [comp(&[2, 3, 2]), comp(&[3, 1, 1]), comp(&[1, 4, 1])];
        let m = typethree_classify(&case2).unwrap().unwrap();
        assert_eq!(m.case, 2);
        let case3 = [comp(&[2, 4, 1]), comp(&[3, 3, 1]), comp(&[1, 1, 2])];
        assert_eq!(typethree_classify(&case3).unwrap().unwrap().case, 3);
        let none = [comp(&[1, 3]), comp(&[2, 2]), comp(&[3, 1])];
        assert!(typethree_classify(&none).unwrap().is_none());
        let teter = [comp(&[1, 2, 2]), comp(&[2, 1, 2]), comp(&[2, 2, 1])];
        assert_eq!(typethree_classify(&teter).unwrap().unwrap().case, 1);
    }

    #[test]
    fn witnesses_validate() {
        let case2 = [comp(&[2, 3, 2]), comp(&[3, 1, 1]), comp(&[1, 4, 1])];
        let ideal = MonomialIdeal::from_components(&case2).unwrap();
        let a = FiniteAlgebra::new(&ideal, PrimeField::default()).unwrap();
        let w = CanonicalModule::new(&a).unwrap();
        let dual = w.dual(&a).unwrap();
        let comps = ideal.irreducible_decomposition().unwrap();
        let m = typethree_classify(&comps).unwrap().unwrap();
        let (_, covered) = validate_witnesses(&a, &w, &dual, &m.witnesses).unwrap();
        assert!(covered);

        let f = w.enclosing().f.clone();
        let taut: Vec<Option<Monomial>> = f.iter().cloned().map(Some).collect();
        assert!(witness_map(&a, &w, &dual, &taut).is_ok());
        let n = 3;
        let bad = vec![Some(Monomial::var(n, 0)), None, None];
        assert!(matches!(witness_map(&a, &w, &dual, &bad), Err(Error::CongruenceFailure { .. })));
    }

    #[test]
    fn variable_colon_examples() {
        let comps = [comp(&[1, 3]), comp(&[2, 2]), comp(&[3, 1])];
        let ideal = MonomialIdeal::from_components(&comps).unwrap();
        assert!(variable_colon_check(&ideal, &comps).unwrap().iter().all(VariableColonEntry::holds));
    }

    #[test]
    fn condition2_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = Condition2Params::default();
        let g = condition2_monomial(&alg(2, &[&[2, 0], &[0, 2]]), &p, &mut rng).unwrap();
        assert!(g.holds && g.mode == Condition2Mode::Exhaustive);
        let t = condition2_monomial(&alg(2, &[&[2, 0], &[1, 1], &[0, 2]]), &p, &mut rng).unwrap();
        assert!(t.holds && t.mode == Condition2Mode::Exhaustive);
        // up-sets of {1, x, y}: {}, {x}, {y}, {x, y}, {1, x, y}
        assert_eq!(count_monomial_ideals(&alg(2, &[&[2, 0], &[1, 1], &[0, 2]]), 100), Some(5));
        let bad = condition2_monomial(&alg(2, &[&[3, 0], &[1, 2], &[0, 4]]), &p, &mut rng).unwrap();
        assert!(!bad.holds && bad.witness.is_some());

        let capped = Condition2Params { cap: 2, allow_sampling: false, random_ideals: 0 };
        let r = condition2_monomial(&alg(2, &[&[2, 0], &[0, 2]]), &capped, &mut rng);
        assert!(matches!(r, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn case_labels() {
        assert_eq!(Case::TypeTwo { case: TypeTwoCase::A, teter: true }.label(), "TypeTwo:a→Teter");
        assert_eq!(Case::TypeTwo { case: TypeTwoCase::C, teter: true }.label(), "TypeTwo:c");
    }
}
