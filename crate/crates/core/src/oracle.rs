//! Random corpora of monomial ideals and the condition (1) / condition (2) hunt.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FiniteAlgebra;
use crate::canonical::{condition1, trace_ideal, CanonicalModule};
use crate::classify::{condition2_monomial, Condition2Mode, Condition2Params, Condition2Result};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{IrreducibleComponent, MonomialIdeal};
use crate::perm::permutations;

/// Corpus generation parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub n_vars: usize,
    pub max_exponent: u32,
    /// Number of irreducible components; random in `1..=4` when `None`.
    pub target_type: Option<usize>,
    pub count: usize,
    pub seed: u64,
    /// Upper bound on `dim R`.
    pub max_dim: Option<usize>,
}

/// Independent random stream number `index` for `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Sorted component exponents, minimised over variable relabelings.
fn canonical_key(comps: &[Vec<u32>], perms: &[Vec<usize>]) -> Vec<Vec<u32>> {
    perms
        .iter()
        .map(|p| {
            let mut rows: Vec<Vec<u32>> = comps.iter().map(|c| p.iter().map(|&k| c[k]).collect()).collect();
            rows.sort();
            rows
        })
        .min()
        .unwrap_or_default()
}

fn dominated(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Random `m`-primary ideals with irredundant decompositions, distinct up to
/// variable relabeling, in generation order.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<MonomialIdeal>> {
    if spec.n_vars == 0 {
        return Err(Error::NoVariables);
    }
    if spec.max_exponent == 0 {
        return Err(Error::NonPositiveExponent);
    }
    if spec.n_vars > 8 {
        return Err(Error::TooManyVariables { nvars: spec.n_vars, max: 8 });
    }
    let n = spec.n_vars;
    let perms = permutations(n);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(spec.count);
    let attempts = 1000 + 200 * spec.count;
    for _ in 0..attempts {
        if out.len() == spec.count {
            break;
        }
        let t = spec.target_type.unwrap_or_else(|| rng.gen_range(1..=4));
        let comps: Vec<Vec<u32>> =
            (0..t).map(|_| (0..n).map(|_| rng.gen_range(1..=spec.max_exponent)).collect()).collect();
        let irredundant =
            (0..t).all(|i| (0..t).all(|j| i == j || !dominated(&comps[i], &comps[j])));
        if !irredundant {
            continue;
        }
        let key = canonical_key(&comps, &perms);
        if seen.contains(&key) {
            continue;
        }
        let components: Vec<IrreducibleComponent> =
            comps.into_iter().map(IrreducibleComponent::new).collect::<Result<_>>()?;
        let ideal = MonomialIdeal::from_components(&components)?;
        if let Some(cap) = spec.max_dim {
            if ideal.standard_monomials()?.len() > cap {
                continue;
            }
        }
        seen.insert(key);
        out.push(ideal);
    }
    if out.len() < spec.count {
        return Err(Error::InfeasibleCorpus { wanted: spec.count, found: out.len() });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    /// Condition (2) holds exhaustively while condition (1) fails.
    CandidateCounterexample,
    /// Condition (2) held on a sample only, condition (1) fails.
    Unconfirmed,
    /// Condition (1) holds but condition (2) fails; never expected.
    ImplicationViolated,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Consistent => "consistent",
            Verdict::CandidateCounterexample => "candidate-counterexample",
            Verdict::Unconfirmed => "unconfirmed",
            Verdict::ImplicationViolated => "implication-violated",
        }
    }

    pub fn is_discrepancy(self) -> bool {
        self != Verdict::Consistent
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HuntResult {
    pub ideal: MonomialIdeal,
    pub cm_type: usize,
    pub dim: usize,
    pub c1: bool,
    pub c2: Condition2Result,
    pub params: Condition2Params,
    pub prime: u32,
    pub verdict: Verdict,
}

pub fn verdict(c1: bool, c2: &Condition2Result) -> Verdict {
    match (c1, c2.holds) {
        (true, true) | (false, false) => Verdict::Consistent,
        (true, false) => Verdict::ImplicationViolated,
        (false, true) if c2.mode == Condition2Mode::Exhaustive => Verdict::CandidateCounterexample,
        (false, true) => Verdict::Unconfirmed,
    }
}

pub fn hunt_one<G: Rng + ?Sized>(
    ideal: &MonomialIdeal,
    field: PrimeField,
    params: &Condition2Params,
    rng: &mut G,
) -> Result<HuntResult> {
    let a = FiniteAlgebra::new(ideal, field)?;
    let w = CanonicalModule::new(&a)?;
    let dual = w.dual(&a)?;
    let c1 = condition1(&a, &trace_ideal(&a, &dual));
    let c2 = condition2_monomial(&a, params, rng)?;
    Ok(HuntResult {
        ideal: ideal.clone(),
        cm_type: a.cm_type(),
        dim: a.dim(),
        c1,
        verdict: verdict(c1, &c2),
        c2,
        params: *params,
        prime: field.modulus(),
    })
}

/// Run [`hunt_one`] over a generated corpus, ideal `i` using stream `i` of the seed.
pub fn hunt(spec: &CorpusSpec, field: PrimeField, params: &Condition2Params) -> Result<Vec<HuntResult>> {
    generate_corpus(spec)?
        .iter()
        .enumerate()
        .map(|(i, ideal)| hunt_one(ideal, field, params, &mut rng_for(spec.seed, i as u64)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, max: u32, t: Option<usize>, count: usize, seed: u64) -> CorpusSpec {
        CorpusSpec { n_vars: n, max_exponent: max, target_type: t, count, seed, max_dim: None }
    }

    #[test]
    fn corpus_shapes() {
        let c = generate_corpus(&spec(3, 4, Some(2), 50, 7)).unwrap();
        assert_eq!(c.len(), 50);
        assert!(c.iter().all(|i| i.irreducible_decomposition().unwrap().len() == 2));
        let g = generate_corpus(&spec(3, 3, Some(1), 10, 1)).unwrap();
        assert!(g.iter().all(|i| i.irreducible_decomposition().unwrap().len() == 1));
        assert_eq!(generate_corpus(&spec(3, 4, Some(2), 50, 7)).unwrap(), c);
        let t3 = generate_corpus(&spec(4, 3, Some(3), 100, 2)).unwrap();
        assert!(t3.iter().all(|i| i.irreducible_decomposition().unwrap().len() == 3));
    }

    #[test]
    fn infeasible_spec() {
        // only (x^2) and (x) exist in one variable with exponents up to 2
        let r = generate_corpus(&spec(1, 2, Some(1), 3, 0));
        assert_eq!(r, Err(Error::InfeasibleCorpus { wanted: 3, found: 2 }));
        // 36 incomparable pairs in [1, 4]^2, 21 up to swapping the variables
        let r = generate_corpus(&spec(2, 4, Some(2), 50, 7));
        assert_eq!(r, Err(Error::InfeasibleCorpus { wanted: 50, found: 21 }));
        let r = generate_corpus(&spec(3, 3, Some(3), 100, 2));
        assert_eq!(r, Err(Error::InfeasibleCorpus { wanted: 100, found: 78 }));
    }

    #[test]
    fn small_hunt_is_consistent() {
        let results = hunt(&spec(3, 3, Some(2), 15, 5), PrimeField::default(), &Condition2Params::default()).unwrap();
        assert!(results.iter().all(|r| r.verdict == Verdict::Consistent));
    }
}
