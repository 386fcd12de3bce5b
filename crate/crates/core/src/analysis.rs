//! One-call analysis of a monomial quotient: invariants, both almost-Gorenstein
//! conditions, the combinatorial case, necessary conditions and the Teter cover.

use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::FiniteAlgebra;
use crate::canonical::{check_duality, check_map, condition1, trace_in_colon_sum, trace_ideal, CanonicalModule};
use crate::classify::{
    condition2_monomial, generator_colon_conditions, is_teter, variable_colon_check, component_condition, typethree_classify,
    typetwo_classify, validate_witnesses, Case, Condition2Params, Condition2Result, VariableColonEntry,
    TypeThreeMatch, TypeTwoMatch,
};
use crate::cover::{build_cover, teter_test, verify_cover, CoverReport, TeterStatus, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{IrreducibleComponent, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisParams {
    pub c1: bool,
    pub c2: bool,
    pub condition2: Condition2Params,
    /// Random combinations per search space in the Teter test.
    pub samples: usize,
    pub checks: bool,
    pub cover: bool,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        AnalysisParams {
            c1: true,
            c2: true,
            condition2: Condition2Params::default(),
            samples: DEFAULT_SAMPLES,
            checks: true,
            cover: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    /// Duality checks on the canonical dual plus the tilde checks on every basis map.
    pub duality: Option<bool>,
    pub trace_containment: Option<bool>,
    pub colon_sum_is_m: Option<bool>,
    pub colon_outside_m2: Option<bool>,
    /// One entry per component.
    pub component_condition: Vec<bool>,
    pub variable_colon: Option<Vec<VariableColonEntry>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSummary {
    pub status: TeterStatus,
    pub dim: Option<usize>,
    pub verified: Option<bool>,
    pub report: Option<CoverReport>,
    pub hilbert: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Analysis {
    pub ideal: MonomialIdeal,
    pub components: Vec<IrreducibleComponent>,
    pub dim: usize,
    pub cm_type: usize,
    pub hilbert: Vec<usize>,
    pub trace_dim: Option<usize>,
    pub c1: Option<bool>,
    pub c2: Option<Condition2Result>,
    pub case: Case,
    pub typetwo: Option<TypeTwoMatch>,
    pub typethree: Option<TypeThreeMatch>,
    /// Whether the type-three witness maps are R-linear and jointly cover `m`.
    pub witnesses_valid: Option<bool>,
    pub checks: Checks,
    pub cover: Option<CoverSummary>,
}

impl Analysis {
    /// Every way this analysis contradicts a proven implication, as short tags.
    /// Empty for a consistent run.
    pub fn discrepancies(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let c2 = self.c2.as_ref().map(|r| r.holds);
        if let (Some(c1), Some(c2)) = (self.c1, c2) {
            if c1 && !c2 {
                out.push("c1-without-c2");
            }
            if !c1 && c2 && self.cm_type <= 3 {
                out.push("c2-without-c1");
            }
        }
        if let (Some(ag), Some(c1)) = (self.case.is_almost_gorenstein(), self.c1) {
            if ag != c1 {
                out.push("case-vs-c1");
            }
        }
        if self.witnesses_valid == Some(false) {
            out.push("witness-invalid");
        }
        let c = &self.checks;
        if c.duality == Some(false) {
            out.push("duality");
        }
        if c.trace_containment == Some(false) {
            out.push("trace-containment");
        }
        if self.c1 == Some(true) && (c.colon_sum_is_m == Some(false) || c.colon_outside_m2 == Some(false)) {
            out.push("generator-colons");
        }
        if c2 == Some(true) && c.component_condition.iter().any(|&b| !b) {
            out.push("component-condition");
        }
        if c.variable_colon.as_ref().is_some_and(|v| v.iter().any(|e| !e.holds())) {
            out.push("variable-colon");
        }
        if self.cover.as_ref().is_some_and(|s| s.verified == Some(false)) {
            out.push("cover");
        }
        out
    }
}

fn combinatorial_case(
    comps: &[IrreducibleComponent],
    c1: Option<bool>,
) -> Result<(Case, Option<TypeTwoMatch>, Option<TypeThreeMatch>)> {
    let teter = is_teter(comps);
    Ok(match comps.len() {
        1 => (Case::Gorenstein, None, None),
        2 => match typetwo_classify(&comps[0], &comps[1])? {
            Some(m) => (Case::TypeTwo { case: m.case, teter }, Some(m), None),
            None => (Case::NotAlmostGorenstein, None, None),
        },
        3 => match typethree_classify(comps) {
            Ok(Some(m)) => (Case::TypeThree(m.case), None, Some(m)),
            Ok(None) => (Case::NotAlmostGorenstein, None, None),
            Err(Error::TooManyVariables { .. }) => (Case::Unclassified, None, None),
            Err(e) => return Err(e),
        },
        _ if teter => (Case::Teter, None, None),
        _ if c1 == Some(false) => (Case::NotAlmostGorenstein, None, None),
        _ => (Case::Unclassified, None, None),
    })
}

pub fn analyze<G: Rng + ?Sized>(
    ideal: &MonomialIdeal,
    field: PrimeField,
    params: &AnalysisParams,
    rng: &mut G,
) -> Result<Analysis> {
    let a = FiniteAlgebra::new(ideal, field)?;
    let components = ideal.irreducible_decomposition()?;
    let w = CanonicalModule::from_components(&a, components.clone())?;
    let dual = w.dual(&a)?;
    let trace = trace_ideal(&a, &dual);
    let c1 = params.c1.then(|| condition1(&a, &trace));
    let c2 = if params.c2 { Some(condition2_monomial(&a, &params.condition2, rng)?) } else { None };
    let (case, typetwo, typethree) = combinatorial_case(&components, c1)?;
    let witnesses_valid = typethree
        .as_ref()
        .map(|m| validate_witnesses(&a, &w, &dual, &m.witnesses).map(|(_, c)| c).unwrap_or(false));

    let mut checks = Checks::default();
    if params.checks {
        let mut duality = check_duality(&a, &w, &dual)?.all();
        for u in dual.basis() {
            duality &= check_map(&a, &w, &dual, u)?.all();
        }
        checks.duality = Some(duality);
        checks.trace_containment = Some(trace_in_colon_sum(&a, &trace, &components)?);
        let (sum_ok, outside_ok) = generator_colon_conditions(&components)?;
        checks.colon_sum_is_m = Some(sum_ok);
        checks.colon_outside_m2 = Some(outside_ok);
        checks.component_condition = (0..components.len()).map(|i| component_condition(&components, i)).collect::<Result<_>>()?;
        if components.len() == 3 {
            checks.variable_colon = Some(variable_colon_check(ideal, &components)?);
        }
    }

    let cover = if params.cover {
        let status = teter_test(&a, &w, &dual, params.samples, rng)?;
        let mut summary = CoverSummary { status, dim: None, verified: None, report: None, hilbert: None };
        if let TeterStatus::Found { f, shift, .. } = &summary.status {
            let s = build_cover(&a, &w, &dual, f, *shift)?;
            let report = verify_cover(&s, &a, &w, &dual);
            summary.dim = Some(s.algebra.dim());
            summary.verified = Some(report.verified());
            summary.hilbert = s.algebra.hilbert_function();
            summary.report = Some(report);
        }
        Some(summary)
    } else {
        None
    };

    Ok(Analysis {
        ideal: ideal.clone(),
        components,
        dim: a.dim(),
        cm_type: a.cm_type(),
        hilbert: a.hilbert_function(),
        trace_dim: Some(trace.dim()),
        c1,
        c2,
        case,
        typetwo,
        typethree,
        witnesses_valid,
        checks,
        cover,
    })
}
