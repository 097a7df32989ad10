//! Generational genetic algorithm over graphs on `n` nodes.

mod crossover;
mod stats;

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitgraph::Graph;
use crate::error::{invalid, Result};
use crate::util::rng_from_seed;

pub use crossover::{
    crossover_bits, crossover_graphs, crossover_spectral, decode_bits, encode_bits, mutate,
    single_point_at, two_point_at, CrossoverKind,
};
pub use stats::{mann_whitney_greater, MannWhitney};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub n: usize,
    pub population: usize,
    pub generations: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub tournament: usize,
    pub elitism: usize,
    pub crossover: CrossoverKind,
    pub seed: u64,
}

impl GaConfig {
    pub fn new(n: usize, crossover: CrossoverKind, seed: u64) -> Self {
        Self {
            n,
            population: 20,
            generations: 100,
            crossover_prob: 0.9,
            mutation_prob: 0.1,
            tournament: 10,
            elitism: 2,
            crossover,
            seed,
        }
    }

    /// Shorter runs used for production searches: 50 generations, N = 10.
    pub fn production(n: usize, crossover: CrossoverKind, seed: u64) -> Self {
        Self { population: 10, generations: 50, tournament: 5, ..Self::new(n, crossover, seed) }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=16).contains(&self.n) {
            return Err(invalid(format!("GA node count {} outside 2..=16", self.n)));
        }
        if self.population == 0 {
            return Err(invalid("population must be positive"));
        }
        for (name, p) in [("crossover", self.crossover_prob), ("mutation", self.mutation_prob)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid(format!("{name} probability {p} outside [0, 1]")));
            }
        }
        if let CrossoverKind::Uniform { p_e } = self.crossover {
            if !(0.0..=1.0).contains(&p_e) {
                return Err(invalid(format!("exchange probability {p_e} outside [0, 1]")));
            }
        }
        if self.tournament == 0 || self.tournament > self.population {
            return Err(invalid("tournament size must be in 1..=population"));
        }
        if self.elitism >= self.population {
            return Err(invalid("elitism must be smaller than the population"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub best: i64,
    pub mean: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaOutcome {
    pub best_graph: Graph,
    pub best_fitness: i64,
    /// Entry 0 is the initial population.
    pub history: Vec<GenerationStats>,
}

impl GaOutcome {
    /// True iff the per-generation best never decreases.
    pub fn is_monotone(&self) -> bool {
        self.history.windows(2).all(|w| w[1].best >= w[0].best)
    }
}

fn evaluate<F>(population: &[Graph], fitness: &F) -> Vec<i64>
where
    F: Fn(&Graph) -> i64 + Sync,
{
    population.par_iter().map(fitness).collect()
}

fn stats(scores: &[i64]) -> GenerationStats {
    GenerationStats {
        best: *scores.iter().max().expect("nonempty population"),
        mean: scores.iter().sum::<i64>() as f64 / scores.len() as f64,
    }
}

/// Index of the fittest member of a distinct random subset; ties go to the
/// lower population index.
fn tournament<R: Rng + ?Sized>(scores: &[i64], size: usize, rng: &mut R) -> usize {
    sample(rng, scores.len(), size)
        .into_iter()
        .max_by(|&a, &b| scores[a].cmp(&scores[b]).then(b.cmp(&a)))
        .expect("tournament size >= 1")
}

/// Runs the GA. The fitness function must be pure; it is evaluated in parallel
/// within a generation, which does not affect the result.
pub fn run_ga<F>(config: &GaConfig, fitness: F) -> Result<GaOutcome>
where
    F: Fn(&Graph) -> i64 + Sync,
{
    config.validate()?;
    let mut rng = rng_from_seed(config.seed);
    let size = config.population;
    let mut population: Vec<Graph> = (0..size).map(|_| Graph::random(config.n, &mut rng)).collect();
    let mut scores = evaluate(&population, &fitness);
    let mut history = vec![stats(&scores)];
    for _ in 0..config.generations {
        let mut ranked: Vec<usize> = (0..size).collect();
        ranked.sort_by(|&a, &b| scores[b].cmp(&scores[a]).then(a.cmp(&b)));
        let mut next: Vec<Graph> = ranked[..config.elitism].iter().map(|&i| population[i]).collect();
        while next.len() < size {
            let a = population[tournament(&scores, config.tournament, &mut rng)];
            let b = population[tournament(&scores, config.tournament, &mut rng)];
            let (c1, c2) = if rng.gen_bool(config.crossover_prob) {
                crossover_graphs(config.crossover, &a, &b, &mut rng)?
            } else {
                (a, b)
            };
            for mut child in [c1, c2] {
                if next.len() == size {
                    break;
                }
                if rng.gen_bool(config.mutation_prob) {
                    child = mutate(&child, &mut rng)?;
                }
                next.push(child);
            }
        }
        population = next;
        scores = evaluate(&population, &fitness);
        history.push(stats(&scores));
    }
    let best = (0..size).max_by(|&a, &b| scores[a].cmp(&scores[b]).then(b.cmp(&a))).expect("nonempty");
    Ok(GaOutcome { best_graph: population[best], best_fitness: scores[best], history })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &Graph) -> i64 {
        g.edge_count() as i64
    }

    #[test]
    fn zero_generations_reports_initial_best() {
        let cfg = GaConfig { generations: 0, ..GaConfig::new(6, CrossoverKind::SinglePoint, 3) };
        let out = run_ga(&cfg, edges).unwrap();
        assert_eq!(out.history.len(), 1);
        let mut rng = rng_from_seed(3);
        let initial: Vec<Graph> = (0..20).map(|_| Graph::random(6, &mut rng)).collect();
        assert_eq!(out.best_fitness, initial.iter().map(edges).max().unwrap());
    }

    #[test]
    fn constant_fitness() {
        let out = run_ga(&GaConfig::new(5, CrossoverKind::Spectral, 1), |_| 7).unwrap();
        assert_eq!(out.best_fitness, 7);
        assert_eq!(out.history.len(), 101);
    }

    #[test]
    fn elitism_keeps_best_monotone() {
        for kind in [
            CrossoverKind::SinglePoint,
            CrossoverKind::TwoPoint,
            CrossoverKind::Uniform { p_e: 0.5 },
            CrossoverKind::Random,
            CrossoverKind::Spectral,
        ] {
            let cfg = GaConfig { generations: 30, ..GaConfig::new(8, kind, 9) };
            let out = run_ga(&cfg, |g| -(g.edge_count() as i64 - 10).abs()).unwrap();
            assert!(out.is_monotone(), "{kind:?}");
            assert_eq!(out.best_fitness, out.history.last().unwrap().best);
        }
    }

    #[test]
    fn reproducible() {
        let cfg = GaConfig { generations: 20, ..GaConfig::new(7, CrossoverKind::Spectral, 21) };
        assert_eq!(run_ga(&cfg, edges).unwrap(), run_ga(&cfg, edges).unwrap());
    }

    #[test]
    fn full_tournament_selects_fittest() {
        let scores = [3, 9, 1, 9, 4];
        let mut rng = rng_from_seed(0);
        for _ in 0..20 {
            assert_eq!(tournament(&scores, 5, &mut rng), 1);
        }
    }

    #[test]
    fn climbs_edge_count() {
        let cfg = GaConfig { generations: 60, ..GaConfig::new(8, CrossoverKind::Uniform { p_e: 0.5 }, 2) };
        let out = run_ga(&cfg, edges).unwrap();
        assert!(out.best_fitness > out.history[0].best);
    }

    #[test]
    fn rejects_bad_configs() {
        let base = GaConfig::new(6, CrossoverKind::Random, 0);
        assert!(run_ga(&GaConfig { tournament: 21, ..base }, edges).is_err());
        assert!(run_ga(&GaConfig { elitism: 20, ..base }, edges).is_err());
        assert!(run_ga(&GaConfig { mutation_prob: 1.5, ..base }, edges).is_err());
        assert!(run_ga(&GaConfig { n: 1, ..base }, edges).is_err());
    }
}
