//! JSON report types. Field order is fixed by declaration order, so equal inputs
//! serialize to equal bytes.

use agt_core::analysis::{Analysis, CoverSummary};
use agt_core::classify::Condition2Result;
use agt_core::cover::TeterStatus;
use agt_core::oracle::HuntResult;
use agt_core::{minimalize, Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};

use crate::input::IdealFile;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub ideal: IdealFile,
    pub display: String,
    pub components: Vec<Vec<u32>>,
    pub dim: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub hilbert: Vec<usize>,
    pub trace_dim: Option<usize>,
    pub conditions: Conditions,
    pub case: String,
    pub witnesses: Witnesses,
    pub checks: Checks,
    pub cover: Option<Cover>,
    pub discrepancies: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub c1: Option<bool>,
    pub c2: Option<Condition2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition2 {
    pub holds: bool,
    pub mode: String,
    pub checked: u64,
    /// Minimal generators of a violating monomial ideal of `R`.
    pub witness: Option<Vec<Vec<u32>>>,
    /// Spanning vectors of a violating non-monomial ideal, in the monomial basis of `R`.
    pub general_witness: Option<Vec<Vec<u32>>>,
}

impl Condition2 {
    pub fn new(r: &Condition2Result, ideal: &MonomialIdeal) -> Self {
        let basis = ideal.standard_monomials().unwrap_or_default();
        let witness = r.witness.as_ref().map(|idx| {
            minimalize(idx.iter().map(|&b| basis[b].clone()).collect())
                .iter()
                .map(|m| m.exponents().to_vec())
                .collect()
        });
        Condition2 {
            holds: r.holds,
            mode: r.mode.label().into(),
            checked: r.checked,
            witness,
            general_witness: r.general_witness.clone(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    pub typetwo: Option<TypeTwo>,
    pub typethree: Option<TypeThree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeTwo {
    pub matches: Vec<String>,
    pub relabel: Vec<usize>,
    pub swapped: bool,
    pub normal_form: IdealFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeThree {
    pub matches: Vec<u8>,
    pub components: Vec<usize>,
    pub variables: Vec<usize>,
    pub omitted: Vec<usize>,
    /// Generator images of each witness map; `null` is the zero image.
    pub maps: Vec<Vec<Option<Vec<u32>>>>,
    pub valid: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub duality: Option<bool>,
    pub trace_containment: Option<bool>,
    pub colon_sum_is_m: Option<bool>,
    pub colon_outside_m2: Option<bool>,
    pub component_condition: Vec<bool>,
    pub variable_colon: Option<Vec<VariableColon>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableColon {
    pub variable: String,
    pub antecedent: bool,
    pub consequent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cover {
    pub status: String,
    pub dim: Option<usize>,
    pub verified: Option<bool>,
    pub graded: Option<bool>,
    pub shift: Option<i32>,
    pub samples_used: Option<usize>,
    pub failure_bound: Option<f64>,
    pub embedding_dim: Option<usize>,
    pub generators: Option<usize>,
    pub hilbert: Option<Vec<usize>>,
    pub socle_dim: Option<usize>,
    pub displayed_socle_dim: Option<usize>,
    pub graded_socle_ok: Option<bool>,
}

impl Cover {
    pub fn new(s: &CoverSummary) -> Self {
        let mut c = Cover {
            status: s.status.label().into(),
            dim: s.dim,
            verified: s.verified,
            graded: None,
            shift: None,
            samples_used: None,
            failure_bound: None,
            embedding_dim: None,
            generators: None,
            hilbert: s.hilbert.clone(),
            socle_dim: s.report.as_ref().map(|r| r.socle_dim),
            displayed_socle_dim: s.report.as_ref().map(|r| r.displayed_socle_dim),
            graded_socle_ok: s.report.as_ref().and_then(|r| r.graded_socle_ok),
        };
        match &s.status {
            TeterStatus::Found { graded, shift, samples_used, .. } => {
                c.graded = Some(*graded);
                c.shift = *shift;
                c.samples_used = Some(*samples_used);
            }
            TeterStatus::NotFound { samples, failure_bound } => {
                c.samples_used = Some(*samples);
                c.failure_bound = Some(*failure_bound);
            }
            TeterStatus::Obstructed { embedding_dim, generators } => {
                c.embedding_dim = Some(*embedding_dim);
                c.generators = Some(*generators);
            }
            TeterStatus::SocleConditionViolated => {}
        }
        c
    }
}

fn exps(m: &Monomial) -> Vec<u32> {
    m.exponents().to_vec()
}

impl Report {
    pub fn new(a: &Analysis) -> Self {
        let n = a.ideal.nvars();
        let witnesses = Witnesses {
            typetwo: a.typetwo.as_ref().map(|m| TypeTwo {
                matches: m.matches.iter().map(|c| c.letter().to_string()).collect(),
                relabel: m.relabel.clone(),
                swapped: m.swapped,
                normal_form: IdealFile::from_ideal(&m.normal_form),
            }),
            typethree: a.typethree.as_ref().map(|m| TypeThree {
                matches: m.matches.clone(),
                components: m.components.to_vec(),
                variables: m.variables.clone(),
                omitted: m.omitted.clone(),
                maps: m.witnesses.iter().map(|w| w.iter().map(|u| u.as_ref().map(exps)).collect()).collect(),
                valid: a.witnesses_valid,
            }),
        };
        let checks = Checks {
            duality: a.checks.duality,
            trace_containment: a.checks.trace_containment,
            colon_sum_is_m: a.checks.colon_sum_is_m,
            colon_outside_m2: a.checks.colon_outside_m2,
            component_condition: a.checks.component_condition.clone(),
            variable_colon: a.checks.variable_colon.as_ref().map(|v| {
                v.iter()
                    .enumerate()
                    .map(|(k, e)| VariableColon {
                        variable: Monomial::var(n, k).to_string(),
                        antecedent: e.antecedent,
                        consequent: e.consequent,
                    })
                    .collect()
            }),
        };
        Report {
            ideal: IdealFile::from_ideal(&a.ideal),
            display: a.ideal.to_string(),
            components: a.components.iter().map(|c| c.exponents().to_vec()).collect(),
            dim: a.dim,
            cm_type: a.cm_type,
            hilbert: a.hilbert.clone(),
            trace_dim: a.trace_dim,
            conditions: Conditions { c1: a.c1, c2: a.c2.as_ref().map(|r| Condition2::new(r, &a.ideal)) },
            case: a.case.label(),
            witnesses,
            checks,
            cover: a.cover.as_ref().map(Cover::new),
            discrepancies: a.discrepancies().into_iter().map(String::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Hunt {
    pub ideal: IdealFile,
    pub display: String,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub dim: usize,
    pub c1: bool,
    pub c2: Condition2,
    pub cap: u64,
    pub random_ideals: usize,
    pub prime: u32,
    pub verdict: String,
}

impl Hunt {
    pub fn new(h: &HuntResult) -> Self {
        Hunt {
            ideal: IdealFile::from_ideal(&h.ideal),
            display: h.ideal.to_string(),
            cm_type: h.cm_type,
            dim: h.dim,
            c1: h.c1,
            c2: Condition2::new(&h.c2, &h.ideal),
            cap: h.params.cap,
            random_ideals: h.params.random_ideals,
            prime: h.prime,
            verdict: h.verdict.label().into(),
        }
    }
}
