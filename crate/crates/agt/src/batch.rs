//! Parallel runs over many ideals. Ideal `i` always draws from random stream `i`
//! of the seed, so results do not depend on scheduling.

use std::collections::BTreeMap;

use agt_core::analysis::{analyze, AnalysisParams};
use agt_core::classify::Condition2Params;
use agt_core::oracle::{generate_corpus, hunt_one, rng_for, CorpusSpec};
use agt_core::{MonomialIdeal, PrimeField};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{Hunt, Report};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub count: usize,
    pub by_case: BTreeMap<String, usize>,
    pub c1_true: usize,
    pub c2_true: usize,
    pub c2_sampled: usize,
    pub cover_found: usize,
    pub cover_verified: usize,
    pub discrepancies: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub seed: u64,
    pub prime: u32,
    pub summary: Summary,
    pub reports: Vec<Report>,
}

pub fn analyze_all(
    ideals: &[MonomialIdeal],
    field: PrimeField,
    params: &AnalysisParams,
    seed: u64,
) -> agt_core::Result<Vec<Report>> {
    ideals
        .par_iter()
        .enumerate()
        .map(|(i, ideal)| {
            let a = analyze(ideal, field, params, &mut rng_for(seed, i as u64))?;
            Ok(Report::new(&a))
        })
        .collect()
}

pub fn summarize(reports: &[Report]) -> Summary {
    let mut by_case = BTreeMap::new();
    for r in reports {
        *by_case.entry(r.case.clone()).or_insert(0) += 1;
    }
    let c2 = |f: &dyn Fn(&crate::report::Condition2) -> bool| {
        reports.iter().filter(|r| r.conditions.c2.as_ref().is_some_and(f)).count()
    };
    let cover = |f: &dyn Fn(&crate::report::Cover) -> bool| reports.iter().filter(|r| r.cover.as_ref().is_some_and(f)).count();
    Summary {
        count: reports.len(),
        by_case,
        c1_true: reports.iter().filter(|r| r.conditions.c1 == Some(true)).count(),
        c2_true: c2(&|c| c.holds),
        c2_sampled: c2(&|c| c.mode == "sampled"),
        cover_found: cover(&|c| c.status == "found"),
        cover_verified: cover(&|c| c.verified == Some(true)),
        discrepancies: reports.iter().filter(|r| !r.discrepancies.is_empty()).count(),
    }
}

pub fn run_batch(
    ideals: &[MonomialIdeal],
    field: PrimeField,
    params: &AnalysisParams,
    seed: u64,
) -> agt_core::Result<BatchReport> {
    let reports = analyze_all(ideals, field, params, seed)?;
    Ok(BatchReport { seed, prime: field.modulus(), summary: summarize(&reports), reports })
}

pub fn run_hunt(spec: &CorpusSpec, field: PrimeField, params: &Condition2Params) -> agt_core::Result<Vec<Hunt>> {
    let corpus = generate_corpus(spec)?;
    corpus
        .par_iter()
        .enumerate()
        .map(|(i, ideal)| Ok(Hunt::new(&hunt_one(ideal, field, params, &mut rng_for(spec.seed, i as u64))?)))
        .collect()
}
