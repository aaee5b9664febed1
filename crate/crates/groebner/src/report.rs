//! Run orchestration: execute an algorithm with instrumentation and package
//! the outcome, together with the model's predicted costs, into a report
//! that serializes deterministically.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::buchberger::{buchberger_basis, reduce_basis};
use crate::complexity::{buchberger_cost, f5b_cost, f5b_fast_cost, CostModelInput};
use crate::context::{Context, OpCounts};
use crate::error::{domain, Result};
use crate::f5b::{f5b_basis, ReductionStrategy};
use crate::fast_reduce::ReductionMode;
use crate::polynomial::Polynomial;

/// The three interchangeable basis algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Buchberger,
    F5b,
    F5bFast,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Buchberger, Algorithm::F5b, Algorithm::F5bFast];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Buchberger => "buchberger",
            Algorithm::F5b => "f5b",
            Algorithm::F5bFast => "f5b-fast",
        }
    }

    pub fn from_name(name: &str) -> Result<Algorithm> {
        match name {
            "buchberger" => Ok(Algorithm::Buchberger),
            "f5b" => Ok(Algorithm::F5b),
            "f5b-fast" => Ok(Algorithm::F5bFast),
            other => Err(domain(format!(
                "unknown algorithm '{other}' (expected buchberger, f5b, or f5b-fast)"
            ))),
        }
    }
}

/// Size summary of the input system, including the derived model parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub generators: u64,
    pub variables: u64,
    pub max_degree: u64,
    pub min_degree: u64,
    pub degree_cap: String,
    pub monomial_count: String,
}

/// The three model predictions at the input's parameters, as exact rationals
/// rendered in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedCosts {
    pub buchberger_cost: String,
    pub f5b_cost: String,
    pub f5b_fast_cost: String,
    pub in_model_domain: bool,
}

/// Everything a single instrumented run produced. Serializes with a stable
/// field order; two runs of the same deterministic algorithm differ at most
/// in `elapsed_ms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub algorithm: String,
    pub order: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reduction_mode: Option<String>,
    pub input: InputSummary,
    pub basis: Vec<String>,
    pub counts: OpCounts,
    pub predicted: PredictedCosts,
    pub elapsed_ms: u64,
}

/// Prediction-only output for runs that skip the computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostPrediction {
    pub input: InputSummary,
    pub predicted: PredictedCosts,
}

fn summarize_input(ctx: &Context, generators: &[Polynomial]) -> Result<(InputSummary, CostModelInput)> {
    let model = CostModelInput::for_system(ctx, generators)?;
    let mut max_degree = 0u64;
    let mut min_degree = u64::MAX;
    for p in generators {
        let d = p
            .total_degree()
            .ok_or_else(|| domain("cannot summarize a zero generator"))?;
        max_degree = max_degree.max(d);
        min_degree = min_degree.min(d);
    }
    let summary = InputSummary {
        generators: model.m(),
        variables: model.n(),
        max_degree,
        min_degree,
        degree_cap: model.degree_cap().to_string(),
        monomial_count: model.monomial_count().to_string(),
    };
    Ok((summary, model))
}

fn predicted_costs(model: &CostModelInput) -> PredictedCosts {
    PredictedCosts {
        buchberger_cost: buchberger_cost(model).to_string(),
        f5b_cost: f5b_cost(model).to_string(),
        f5b_fast_cost: f5b_fast_cost(model).to_string(),
        in_model_domain: model.in_model_domain(),
    }
}

/// Computes the model predictions for a system without running anything.
pub fn predict(ctx: &Context, generators: &[Polynomial]) -> Result<CostPrediction> {
    let (input, model) = summarize_input(ctx, generators)?;
    Ok(CostPrediction { input, predicted: predicted_costs(&model) })
}

/// Runs `algorithm` on the generators with a fresh counter, reduces the
/// result to the canonical basis, and packages counters, predictions, and
/// timing. The counter snapshot is taken before the final interreduction, so
/// the counts belong to the algorithm itself. `mode` only affects the fast
/// variant.
pub fn run(
    ctx: &Context,
    generators: &[Polynomial],
    algorithm: Algorithm,
    mode: ReductionMode,
) -> Result<RunReport> {
    let (input, model) = summarize_input(ctx, generators)?;
    ctx.counter().reset();
    let start = Instant::now();
    let raw = match algorithm {
        Algorithm::Buchberger => buchberger_basis(ctx, generators)?,
        Algorithm::F5b => f5b_basis(ctx, generators, ReductionStrategy::F5)?,
        Algorithm::F5bFast => {
            let strategy = match mode {
                ReductionMode::Safe => ReductionStrategy::FastSafe,
                ReductionMode::Literal => ReductionStrategy::FastLiteral,
            };
            f5b_basis(ctx, generators, strategy)?
        }
    };
    let counts = ctx.counter().snapshot();
    let reduced = reduce_basis(ctx, &raw)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let reduction_mode = match algorithm {
        Algorithm::F5bFast => Some(
            match mode {
                ReductionMode::Safe => "safe",
                ReductionMode::Literal => "literal",
            }
            .to_string(),
        ),
        _ => None,
    };
    Ok(RunReport {
        algorithm: algorithm.name().to_string(),
        order: ctx.order().name().to_string(),
        field: ctx.field().to_string(),
        reduction_mode,
        input,
        basis: reduced.iter().map(|p| p.format(ctx)).collect(),
        counts,
        predicted: predicted_costs(&model),
        elapsed_ms,
    })
}

fn write_input(out: &mut String, input: &InputSummary) {
    let _ = writeln!(
        out,
        "input: {} generators, {} variables, degrees {}..{}, cap {}, {} monomials",
        input.generators,
        input.variables,
        input.min_degree,
        input.max_degree,
        input.degree_cap,
        input.monomial_count
    );
}

fn write_predicted(out: &mut String, predicted: &PredictedCosts) {
    let _ = writeln!(out, "predicted field operations:");
    let _ = writeln!(out, "  buchberger: {}", predicted.buchberger_cost);
    let _ = writeln!(out, "  f5b:        {}", predicted.f5b_cost);
    let _ = writeln!(out, "  f5b-fast:   {}", predicted.f5b_fast_cost);
    if !predicted.in_model_domain {
        let _ = writeln!(
            out,
            "  note: outside the model domain (generators >= monomial count)"
        );
    }
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.reduction_mode {
            Some(mode) => {
                let _ = writeln!(out, "algorithm: {} ({} reduction)", self.algorithm, mode);
            }
            None => {
                let _ = writeln!(out, "algorithm: {}", self.algorithm);
            }
        }
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "field: {}", self.field);
        write_input(&mut out, &self.input);
        let _ = writeln!(out, "basis ({} polynomials):", self.basis.len());
        for p in &self.basis {
            let _ = writeln!(out, "  {p}");
        }
        let _ = writeln!(out, "counts:");
        let _ = writeln!(out, "  field operations:     {}", self.counts.field_ops);
        let _ = writeln!(out, "  reduction steps:      {}", self.counts.reduction_steps);
        let _ = writeln!(out, "  pairs generated:      {}", self.counts.pairs_generated);
        let _ = writeln!(
            out,
            "  discarded (syzygy):   {}",
            self.counts.pairs_discarded_syzygy
        );
        let _ = writeln!(
            out,
            "  discarded (rewritten): {}",
            self.counts.pairs_discarded_rewritten
        );
        let _ = writeln!(
            out,
            "  reduced to zero:      {}",
            self.counts.pairs_reduced_to_zero
        );
        let _ = writeln!(
            out,
            "  basis contributing:   {}",
            self.counts.pairs_basis_contributing
        );
        write_predicted(&mut out, &self.predicted);
        let _ = writeln!(out, "elapsed: {} ms", self.elapsed_ms);
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| domain(format!("report serialization failed: {e}")))
    }
}

impl CostPrediction {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_input(&mut out, &self.input);
        write_predicted(&mut out, &self.predicted);
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| domain(format!("prediction serialization failed: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;

    fn parabola_hyperbola() -> (Context, Vec<Polynomial>) {
        parse_system("vars: x, y\norder: lex\nfield: q\nx^2 - y\nx*y - 1\n").unwrap()
    }

    #[test]
    fn all_algorithms_agree_on_the_reduced_basis() {
        let (ctx, gens) = parabola_hyperbola();
        let mut bases = Vec::new();
        for algorithm in Algorithm::ALL {
            let report = run(&ctx, &gens, algorithm, ReductionMode::Safe).unwrap();
            assert!(report.counts.pairs_conserved(), "{:?}", report.counts);
            bases.push(report.basis);
        }
        assert_eq!(bases[0], bases[1]);
        assert_eq!(bases[1], bases[2]);
        assert_eq!(bases[0], vec!["x - y^2".to_string(), "y^3 - 1".to_string()]);
    }

    #[test]
    fn single_generator_runs_without_pairs() {
        let (ctx, gens) = parse_system("vars: x, y\norder: grevlex\nfield: gf 7\nx^2*y - y\n").unwrap();
        for algorithm in Algorithm::ALL {
            let report = run(&ctx, &gens, algorithm, ReductionMode::Safe).unwrap();
            assert_eq!(report.counts.pairs_generated, 0);
            assert_eq!(report.basis, vec!["x^2*y + 6*y".to_string()]);
        }
    }

    #[test]
    fn report_fields_describe_the_run() {
        let (ctx, gens) = parabola_hyperbola();
        let report = run(&ctx, &gens, Algorithm::F5bFast, ReductionMode::Literal).unwrap();
        assert_eq!(report.algorithm, "f5b-fast");
        assert_eq!(report.order, "lex");
        assert_eq!(report.field, "q");
        assert_eq!(report.reduction_mode.as_deref(), Some("literal"));
        assert_eq!(report.input.generators, 2);
        assert_eq!(report.input.variables, 2);
        assert_eq!(report.input.max_degree, 2);
        assert_eq!(report.input.min_degree, 2);
        assert_eq!(report.input.degree_cap, "68");
        assert!(report.predicted.in_model_domain);

        let plain = run(&ctx, &gens, Algorithm::Buchberger, ReductionMode::Safe).unwrap();
        assert_eq!(plain.reduction_mode, None);
    }

    #[test]
    fn json_round_trips_and_is_deterministic() {
        let (ctx, gens) = parabola_hyperbola();
        let mut first = run(&ctx, &gens, Algorithm::F5b, ReductionMode::Safe).unwrap();
        let mut second = run(&ctx, &gens, Algorithm::F5b, ReductionMode::Safe).unwrap();
        first.elapsed_ms = 0;
        second.elapsed_ms = 0;
        assert_eq!(first.to_json().unwrap(), second.to_json().unwrap());

        let json = first.to_json().unwrap();
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, first);
        assert!(json.contains("\"pairs_discarded_rewritten\": 0"));
    }

    #[test]
    fn text_report_mentions_every_section() {
        let (ctx, gens) = parabola_hyperbola();
        let report = run(&ctx, &gens, Algorithm::F5bFast, ReductionMode::Safe).unwrap();
        let text = report.to_text();
        for needle in [
            "algorithm: f5b-fast (safe reduction)",
            "order: lex",
            "basis (2 polynomials)",
            "x - y^2",
            "pairs generated",
            "predicted field operations:",
            "elapsed:",
        ] {
            assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
        }
    }

    #[test]
    fn prediction_without_running() {
        let (ctx, gens) = parabola_hyperbola();
        let prediction = predict(&ctx, &gens).unwrap();
        assert_eq!(prediction.input.monomial_count, "2415");
        let json = prediction.to_json().unwrap();
        let back: CostPrediction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, prediction);
        assert!(prediction.to_text().contains("buchberger:"));
    }

    #[test]
    fn algorithm_names_round_trip() {
        for algorithm in Algorithm::ALL {
            assert_eq!(Algorithm::from_name(algorithm.name()).unwrap(), algorithm);
        }
        assert!(Algorithm::from_name("f4").is_err());
    }
}
