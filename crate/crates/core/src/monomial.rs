//! Monomials and monomial ideals in `k[x_1, ..., x_n]`.
//!
//! Everything here is combinatorial: an ideal is stored by its minimal
//! generators, sorted in graded-lex order, so two ideals are equal exactly
//! when their generator lists are equal.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Largest box (product of pure-power exponents) that `standard_monomials` will scan.
pub const MAX_BOX: u64 = 1 << 24;

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Monomial(e)
    }

    pub fn pure_power(nvars: usize, k: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[k] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of variables that occur with positive exponent.
    pub fn support_len(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Generator of `(self) : (other)`, i.e. the componentwise `max(a - b, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    /// `Some((k, e))` if this is `x_k^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (k, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((k, e));
            }
        }
        found
    }

    /// Apply a variable relabeling: variable `k` becomes variable `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            e[perm[k]] = x;
        }
        Monomial(e)
    }
}

/// Graded-lex order: total degree first, then the larger exponent of `x_1`
/// (then `x_2`, ...) comes first. Sorting ascending gives `1, x, y, x^2, xy, y^2, ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn var_name(nvars: usize, k: usize) -> VarName {
    VarName { nvars, k }
}

pub(crate) struct VarName {
    nvars: usize,
    k: usize,
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["x", "y", "z", "w"];
        if self.nvars <= 4 {
            f.write_str(NAMES[self.k])
        } else {
            write!(f, "x{}", self.k + 1)
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}", var_name(self.nvars(), k))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An irreducible `m`-primary monomial ideal `(x_1^{a_1}, ..., x_n^{a_n})`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent(Vec<u32>);

impl IrreducibleComponent {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::NoVariables);
        }
        if exponents.contains(&0) {
            return Err(Error::NonPositiveExponent);
        }
        Ok(IrreducibleComponent(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.0.len();
        let gens = self
            .0
            .iter()
            .enumerate()
            .map(|(k, &a)| Monomial::pure_power(n, k, a))
            .collect();
        MonomialIdeal::from_gens_unchecked(n, gens)
    }

    /// `self ⊆ other` as ideals.
    pub fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.exponents().iter().zip(&self.0).any(|(e, a)| e >= a)
    }

    pub fn permuted(&self, perm: &[usize]) -> IrreducibleComponent {
        let mut e = vec![0; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            e[perm[k]] = x;
        }
        IrreducibleComponent(e)
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_ideal())
    }
}

/// A monomial ideal, stored by its minimal generators in graded-lex order.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalize `gens` into an ideal of `k[x_1..x_nvars]`.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: bad.nvars() });
        }
        Ok(Self::from_gens_unchecked(nvars, gens))
    }

    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(nvars, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub(crate) fn from_gens_unchecked(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The maximal ideal `m = (x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_gens_unchecked(nvars, (0..nvars).map(|k| Monomial::var(nvars, k)).collect())
    }

    /// Intersection of irreducible components.
    pub fn from_components(components: &[IrreducibleComponent]) -> Result<Self> {
        let first = components.first().ok_or(Error::InvalidArgument("no components"))?;
        let mut acc = first.to_ideal();
        for c in &components[1..] {
            acc = acc.intersect(&c.to_ideal())?;
        }
        Ok(acc)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn add_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: m.nvars() });
        }
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `I : (m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: m.nvars() });
        }
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(Self::from_gens_unchecked(self.nvars, gens))
    }

    /// `I : J`, the intersection of `I : (g)` over the generators `g` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?)?;
            if acc == *self {
                // I ⊆ I:g for every g, so the intersection cannot shrink further.
                break;
            }
        }
        Ok(acc)
    }

    /// True iff every variable has a pure power among the generators.
    pub fn is_m_primary(&self) -> bool {
        self.pure_power_exponents().is_some()
    }

    /// Exponent of the pure power of each variable among the generators.
    pub fn pure_power_exponents(&self) -> Option<Vec<u32>> {
        let mut out: Vec<Option<u32>> = vec![None; self.nvars];
        for g in &self.gens {
            if let Some((k, e)) = g.as_pure_power() {
                out[k] = Some(e);
            }
        }
        out.into_iter().collect()
    }

    /// Monomials outside the ideal, in graded-lex order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let bounds = self.pure_power_exponents().ok_or(Error::NotMPrimary)?;
        let volume = bounds.iter().fold(1u64, |acc, &b| acc.saturating_mul(b as u64));
        if volume > MAX_BOX {
            return Err(Error::DimensionCap { dim: volume as usize, cap: MAX_BOX as usize });
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        loop {
            let m = Monomial(cur.clone());
            if !self.contains(&m) {
                out.push(m);
            }
            // odometer increment within the box
            let mut k = 0;
            loop {
                if k == self.nvars {
                    out.sort();
                    return Ok(out);
                }
                cur[k] += 1;
                if cur[k] < bounds[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
        }
    }

    /// Number of standard monomials in each degree, trailing zeros trimmed.
    pub fn hilbert_function(&self) -> Result<Vec<usize>> {
        let std = self.standard_monomials()?;
        let mut hf: Vec<usize> = Vec::new();
        for m in &std {
            let d = m.degree() as usize;
            if hf.len() <= d {
                hf.resize(d + 1, 0);
            }
            hf[d] += 1;
        }
        while hf.last() == Some(&0) {
            hf.pop();
        }
        Ok(hf)
    }

    /// Irredundant decomposition into irreducible components, sorted by exponent vector.
    ///
    /// Generators with at least two variables in their support are split as
    /// `I + (u) ∩ I + (v)` with `uv = g` on disjoint supports until only pure
    /// powers remain; redundant leaves are then dropped by re-intersection.
    pub fn irreducible_decomposition(&self) -> Result<Vec<IrreducibleComponent>> {
        if !self.is_m_primary() {
            return Err(Error::NotMPrimary);
        }
        let n = self.nvars;
        let mut leaves: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut seen: BTreeSet<Vec<Monomial>> = BTreeSet::new();
        let mut stack = vec![self.clone()];
        while let Some(ideal) = stack.pop() {
            if !seen.insert(ideal.gens.clone()) {
                continue;
            }
            match ideal.gens.iter().find(|g| g.support_len() >= 2) {
                Some(g) => {
                    let k = g.0.iter().position(|&e| e > 0).unwrap_or(0);
                    let u = Monomial::pure_power(n, k, g.0[k]);
                    let mut v = g.clone();
                    v.0[k] = 0;
                    stack.push(ideal.add_monomial(&u)?);
                    stack.push(ideal.add_monomial(&v)?);
                }
                None => {
                    // all generators are pure powers; m-primary is inherited from `self`
                    let exps = ideal.pure_power_exponents().ok_or(Error::NotMPrimary)?;
                    leaves.insert(exps);
                }
            }
        }
        let mut comps: Vec<IrreducibleComponent> =
            leaves.into_iter().map(IrreducibleComponent).collect();
        // a leaf containing another leaf is redundant
        let snapshot = comps.clone();
        comps.retain(|c| {
            !snapshot
                .iter()
                .any(|d| d != c && d.is_contained_in(c))
        });
        // remaining redundancy is removed by re-intersection
        let mut i = 0;
        while i < comps.len() && comps.len() > 1 {
            let rest: Vec<IrreducibleComponent> =
                comps.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.clone()).collect();
            if MonomialIdeal::from_components(&rest)? == *self {
                comps.remove(i);
            } else {
                i += 1;
            }
        }
        if MonomialIdeal::from_components(&comps)? != *self {
            return Err(Error::Inconsistent("decomposition does not re-intersect to the input"));
        }
        comps.sort();
        Ok(comps)
    }

    /// Apply a variable relabeling to every generator.
    pub fn permuted(&self, perm: &[usize]) -> MonomialIdeal {
        Self::from_gens_unchecked(self.nvars, self.gens.iter().map(|g| g.permuted(perm)).collect())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Minimal generating set of the ideal generated by `gens`, in graded-lex order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    // a proper divisor has strictly smaller degree, so it is already in `out`
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// `J_i : J_j = J_i + (x^{a_i - a_j})`, the product running over coordinates with `a_ik > a_jk`.
pub fn irreducible_colon(
    ji: &IrreducibleComponent,
    jj: &IrreducibleComponent,
) -> Result<MonomialIdeal> {
    if ji.nvars() != jj.nvars() {
        return Err(Error::DimensionMismatch { expected: ji.nvars(), found: jj.nvars() });
    }
    let diff = Monomial(ji.0.iter().zip(&jj.0).map(|(a, b)| a.saturating_sub(*b)).collect());
    ji.to_ideal().add_monomial(&diff)
}

/// The enclosing irreducible ideal `J = (x^t)` with `t_k = max_i a_ik`, and the
/// monomials `f_i = x^{t - a_i}` with `J : f_i = J_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnclosingIrreducible {
    pub enclosing: IrreducibleComponent,
    pub f: Vec<Monomial>,
    pub components: Vec<IrreducibleComponent>,
}

impl EnclosingIrreducible {
    pub fn from_components(components: Vec<IrreducibleComponent>) -> Result<Self> {
        let first = components.first().ok_or(Error::InvalidArgument("no components"))?;
        let n = first.nvars();
        let mut t = vec![0u32; n];
        for c in &components {
            if c.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.nvars() });
            }
            for (tk, &a) in t.iter_mut().zip(&c.0) {
                *tk = (*tk).max(a);
            }
        }
        let f: Vec<Monomial> = components
            .iter()
            .map(|c| Monomial(t.iter().zip(&c.0).map(|(tk, a)| tk - a).collect()))
            .collect();
        let enclosing = IrreducibleComponent(t);
        let j = enclosing.to_ideal();
        for (fi, c) in f.iter().zip(&components) {
            if j.colon(fi)? != c.to_ideal() {
                return Err(Error::Inconsistent("J : f_i differs from J_i"));
            }
        }
        Ok(EnclosingIrreducible { enclosing, f, components })
    }
}

/// Decompose `ideal` and build its enclosing irreducible ideal.
pub fn enclosing_irreducible(ideal: &MonomialIdeal) -> Result<EnclosingIrreducible> {
    EnclosingIrreducible::from_components(ideal.irreducible_decomposition()?)
}
