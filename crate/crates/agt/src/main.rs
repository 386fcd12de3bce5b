use std::path::PathBuf;
use std::process::ExitCode;

use agt::batch::{run_batch, run_hunt};
use agt::input::{read_ideal, read_ideals, IdealFile};
use agt::report::Report;
use agt::to_json;
use agt_core::analysis::{analyze, AnalysisParams};
use agt_core::canonical::CanonicalModule;
use agt_core::classify::Condition2Params;
use agt_core::cover::{build_cover, teter_test, verify_cover, TeterStatus};
use agt_core::oracle::{generate_corpus, rng_for, CorpusSpec};
use agt_core::{FiniteAlgebra, Monomial, PrimeField};
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

/// Almost-Gorenstein tests for Artinian monomial quotients.
#[derive(Parser)]
#[command(name = "agt", version)]
struct Cli {
    /// Prime field characteristic (odd, below 2^31).
    #[arg(long, global = true, env = "AGT_PRIME", default_value_t = 101)]
    prime: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest number of monomial ideals enumerated for condition (2) before sampling.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    cap: u64,
    /// Random maps tried per search space in the Teter test.
    #[arg(long, global = true, default_value_t = 24)]
    samples: usize,
    /// Write JSON here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long)]
    vars: usize,
    #[arg(long)]
    max_exp: u32,
    /// Number of irreducible components; random in 1..=4 if omitted.
    #[arg(long = "type")]
    target_type: Option<usize>,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    max_dim: Option<usize>,
}

impl CorpusArgs {
    fn spec(&self, seed: u64) -> CorpusSpec {
        CorpusSpec {
            n_vars: self.vars,
            max_exponent: self.max_exp,
            target_type: self.target_type,
            count: self.count,
            seed,
            max_dim: self.max_dim,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full report: invariants, conditions, case, witnesses, checks and cover.
    Classify {
        #[arg(long)]
        ideal: PathBuf,
        /// Same as --out.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Decide the selected conditions only.
    Check {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        conditions: Vec<u8>,
    },
    /// Search for a surjection onto the maximal ideal and emit the resulting cover.
    Cover {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Dimension, type, Hilbert function and standard monomials.
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Compare conditions (1) and (2) over a generated corpus.
    Hunt {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Also write flagged results here.
        #[arg(long)]
        candidates: Option<PathBuf>,
    },
    /// Generate a corpus of ideals as a JSON array.
    Corpus {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Report on every ideal of a JSON array, in parallel.
    Batch {
        #[arg(long)]
        input: PathBuf,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn label(m: &Monomial) -> String {
    m.to_string()
}

/// Returns whether a discrepancy was found.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let field = PrimeField::new(cli.prime)?;
    let c2 = Condition2Params { cap: cli.cap, ..Condition2Params::default() };
    let params = AnalysisParams { condition2: c2, samples: cli.samples, ..AnalysisParams::default() };
    let out = cli.out.as_ref();
    match cli.command {
        Command::Classify { ideal, report } => {
            let i = read_ideal(&ideal)?;
            let a = analyze(&i, field, &params, &mut rng_for(cli.seed, 0))?;
            let r = Report::new(&a);
            emit(report.as_ref().or(out), &to_json(&r))?;
            Ok(!r.discrepancies.is_empty())
        }
        Command::Check { ideal, conditions } => {
            if let Some(bad) = conditions.iter().find(|&&c| c != 1 && c != 2) {
                bail!("unknown condition {bad}; expected 1 or 2");
            }
            let i = read_ideal(&ideal)?;
            let p = AnalysisParams {
                c1: conditions.contains(&1),
                c2: conditions.contains(&2),
                checks: false,
                cover: false,
                ..params
            };
            let a = analyze(&i, field, &p, &mut rng_for(cli.seed, 0))?;
            let r = Report::new(&a);
            let value = json!({
                "ideal": r.ideal,
                "type": r.cm_type,
                "case": r.case,
                "conditions": r.conditions,
                "discrepancies": r.discrepancies,
            });
            emit(out, &to_json(&value))?;
            Ok(!r.discrepancies.is_empty())
        }
        Command::Cover { ideal } => {
            let i = read_ideal(&ideal)?;
            let a = FiniteAlgebra::new(&i, field)?;
            let w = CanonicalModule::new(&a)?;
            let dual = w.dual(&a)?;
            let status = teter_test(&a, &w, &dual, cli.samples, &mut rng_for(cli.seed, 0))?;
            let mut value = json!({
                "ideal": IdealFile::from_ideal(&i),
                "status": status.label(),
            });
            match &status {
                TeterStatus::Found { f, shift, graded, .. } => {
                    let images: Vec<_> = (0..dual.ngens())
                        .map(|g| {
                            let terms: serde_json::Map<String, serde_json::Value> = dual
                                .image(f, g)
                                .iter()
                                .enumerate()
                                .filter(|(_, &c)| c != 0)
                                .map(|(b, &c)| (label(&a.basis()[b]), json!(c)))
                                .collect();
                            json!({ "generator": label(&w.labels()[w.generator_index(g)]), "image": terms })
                        })
                        .collect();
                    let s = build_cover(&a, &w, &dual, f, *shift)?;
                    let report = verify_cover(&s, &a, &w, &dual);
                    let alg = &s.algebra;
                    let mut basis = vec!["1".to_string()];
                    basis.extend(w.labels().iter().map(|m| format!("w:{}", label(m))));
                    let mut products = Vec::new();
                    for p in 1..alg.dim() {
                        for q in p..alg.dim() {
                            let prod = alg.product(p, q);
                            if !prod.is_empty() {
                                products.push(json!({ "a": p, "b": q, "product": prod }));
                            }
                        }
                    }
                    value["graded"] = json!(graded);
                    value["shift"] = json!(shift);
                    value["map"] = json!(images);
                    value["cover"] = json!({
                        "dim": alg.dim(),
                        "basis": basis,
                        "degrees": alg.degrees(),
                        "hilbert": alg.hilbert_function(),
                        "products": products,
                    });
                    value["verification"] = json!({
                        "verified": report.verified(),
                        "dim_ok": report.dim_ok,
                        "socle_dim": report.socle_dim,
                        "socle_ok": report.socle_ok,
                        "projection_ok": report.projection_ok,
                        "iso_ok": report.iso_ok,
                        "displayed_socle_dim": report.displayed_socle_dim,
                        "graded_socle_ok": report.graded_socle_ok,
                    });
                    emit(out, &to_json(&value))?;
                    Ok(!report.verified())
                }
                TeterStatus::NotFound { samples, failure_bound } => {
                    value["samples"] = json!(samples);
                    value["failure_bound"] = json!(failure_bound);
                    emit(out, &to_json(&value))?;
                    Ok(false)
                }
                TeterStatus::Obstructed { embedding_dim, generators } => {
                    value["embedding_dim"] = json!(embedding_dim);
                    value["generators"] = json!(generators);
                    emit(out, &to_json(&value))?;
                    Ok(false)
                }
                TeterStatus::SocleConditionViolated => {
                    emit(out, &to_json(&value))?;
                    Ok(false)
                }
            }
        }
        Command::Hilbert { ideal } => {
            let i = read_ideal(&ideal)?;
            let a = FiniteAlgebra::new(&i, field)?;
            let value = json!({
                "ideal": IdealFile::from_ideal(&i),
                "dim": a.dim(),
                "type": a.cm_type(),
                "hilbert": a.hilbert_function(),
                "standard_monomials": a.basis().iter().map(label).collect::<Vec<_>>(),
            });
            emit(out, &to_json(&value))?;
            Ok(false)
        }
        Command::Hunt { corpus, candidates } => {
            let results = run_hunt(&corpus.spec(cli.seed), field, &c2)?;
            let flagged: Vec<_> = results.iter().filter(|h| h.verdict != "consistent").cloned().collect();
            if let Some(path) = candidates {
                std::fs::write(&path, to_json(&flagged)).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(out, &to_json(&results))?;
            Ok(!flagged.is_empty())
        }
        Command::Corpus { corpus } => {
            let ideals = generate_corpus(&corpus.spec(cli.seed))?;
            let files: Vec<IdealFile> = ideals.iter().map(IdealFile::from_ideal).collect();
            emit(out, &to_json(&files))?;
            Ok(false)
        }
        Command::Batch { input } => {
            let ideals = read_ideals(&input)?;
            let report = run_batch(&ideals, field, &params, cli.seed)?;
            emit(out, &to_json(&report))?;
            Ok(report.summary.discrepancies > 0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
