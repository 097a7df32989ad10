//! Independent GA instances and the crossover comparison experiment.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitgraph::Graph;
use crate::cwsmap::clique_graph_order;
use crate::error::Result;
use crate::evolve::{mann_whitney_greater, run_ga, CrossoverKind, GaConfig, GaOutcome, MannWhitney};
use crate::pauli::ErrorSet;
use crate::util::derive_seed;

/// Clique-graph order as a GA fitness function.
pub fn order_fitness(e: &ErrorSet) -> impl Fn(&Graph) -> i64 + Sync + '_ {
    move |g| clique_graph_order(g, e).map(|o| o.order as i64).unwrap_or(i64::MIN)
}

/// One GA run, as written to JSON-lines output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaInstance {
    pub index: usize,
    pub seed: u64,
    pub crossover: CrossoverKind,
    pub best_graph6: String,
    pub best_fitness: i64,
    pub outcome: GaOutcome,
}

/// `instances` runs of `template`, instance `i` seeded with `derive_seed(master, i)`.
pub fn ga_campaign(template: &GaConfig, instances: usize, master: u64, e: &ErrorSet) -> Result<Vec<GaInstance>> {
    let fitness = order_fitness(e);
    (0..instances)
        .into_par_iter()
        .map(|i| {
            let seed = derive_seed(master, i as u64);
            let config = GaConfig { seed, ..*template };
            let outcome = run_ga(&config, &fitness)?;
            Ok(GaInstance {
                index: i,
                seed,
                crossover: template.crossover,
                best_graph6: outcome.best_graph.to_graph6(),
                best_fitness: outcome.best_fitness,
                outcome,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaSummary {
    pub crossover: CrossoverKind,
    pub instances: usize,
    pub mean_best: f64,
    pub max_best: i64,
    pub all_monotone: bool,
    /// Mean of the per-generation best over instances.
    pub mean_history: Vec<f64>,
}

fn summarize(kind: CrossoverKind, runs: &[GaInstance]) -> GaSummary {
    let gens = runs.first().map_or(0, |r| r.outcome.history.len());
    let mean_history = (0..gens)
        .map(|g| runs.iter().map(|r| r.outcome.history[g].best as f64).sum::<f64>() / runs.len() as f64)
        .collect();
    GaSummary {
        crossover: kind,
        instances: runs.len(),
        mean_best: runs.iter().map(|r| r.best_fitness as f64).sum::<f64>() / runs.len().max(1) as f64,
        max_best: runs.iter().map(|r| r.best_fitness).max().unwrap_or(0),
        all_monotone: runs.iter().all(|r| r.outcome.is_monotone()),
        mean_history,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaComparison {
    pub treatment: GaSummary,
    pub baseline: GaSummary,
    /// One-sided test that treatment final fitness exceeds baseline.
    pub test: MannWhitney,
    pub runs: Vec<GaInstance>,
}

/// Runs `instances` GA instances for each crossover and compares final best
/// fitness. The baseline uses the seed stream `derive_seed(master, 1)`, the
/// treatment `derive_seed(master, 0)`.
pub fn ga_compare(
    template: &GaConfig,
    treatment: CrossoverKind,
    baseline: CrossoverKind,
    instances: usize,
    master: u64,
    e: &ErrorSet,
) -> Result<GaComparison> {
    let t_runs = ga_campaign(&GaConfig { crossover: treatment, ..*template }, instances, derive_seed(master, 0), e)?;
    let b_runs = ga_campaign(&GaConfig { crossover: baseline, ..*template }, instances, derive_seed(master, 1), e)?;
    let t_best: Vec<f64> = t_runs.iter().map(|r| r.best_fitness as f64).collect();
    let b_best: Vec<f64> = b_runs.iter().map(|r| r.best_fitness as f64).collect();
    Ok(GaComparison {
        treatment: summarize(treatment, &t_runs),
        baseline: summarize(baseline, &b_runs),
        test: mann_whitney_greater(&t_best, &b_best),
        runs: t_runs.into_iter().chain(b_runs).collect(),
    })
}
