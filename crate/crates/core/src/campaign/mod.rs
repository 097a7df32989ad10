//! Search campaigns: solve many graphs against one error set and aggregate.
//!
//! Exhaustive searches run over class representatives and lift their counts
//! to isomorphism classes and labeled graphs using class sizes.

mod cache;
mod ga;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitgraph::{enumerate_classes, Graph, GraphClass, Relation};
use crate::clique::SolverSpec;
use crate::cwsmap::{classical_error_data, verify_code, CliqueInstance, CwsCode};
use crate::error::{invalid, Result};
use crate::evolve::GaConfig;
use crate::pauli::{ErrorSet, ErrorSetKind};
use crate::util::{bits_to_string, derive_seed, rng_from_seed};

pub use cache::{CacheEntry, ResultCache};
pub use ga::{ga_campaign, ga_compare, order_fitness, GaComparison, GaInstance, GaSummary};

/// How graphs are chosen.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SearchMode {
    /// One representative per class.
    Exhaustive { relation: Relation },
    /// Uniform labeled graphs.
    Random { samples: usize },
    /// GA instances maximising clique-graph order; each best graph is solved.
    Ga { instances: usize, config: GaConfig },
    /// Uniform labeled graphs screened by clique-graph order; only graphs
    /// with at least `min_order` nodes are solved. Suits error sets where
    /// almost every graph has an empty clique graph.
    Screened { samples: usize, min_order: usize },
}

/// One solved graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRow {
    pub graph6: String,
    /// Clique-graph order `|N_E|`.
    pub order: usize,
    /// Dimension of the complement of `D_G(E)`; clusters of `order` follow it.
    pub annihilator_dim: usize,
    pub clique_size: usize,
    /// Code size `clique_size + 1`, except that an impure single state counts as 0.
    pub k: usize,
    pub pure: bool,
    /// Isomorphism classes represented by this row.
    pub iso_count: u64,
    /// Labeled graphs represented by this row.
    pub labeled_count: u64,
    pub codewords: Vec<String>,
    /// GA seed and fitness, for GA rows.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ga_seed: Option<u64>,
}

/// Counts of rows, isomorphism classes and labeled graphs sharing a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bucket {
    pub value: usize,
    pub rows: u64,
    pub iso: u64,
    pub labeled: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub mode: SearchMode,
    pub error_set: String,
    pub error_set_hash: String,
    pub solver: SolverSpec,
    pub seed: u64,
    pub rows: Vec<GraphRow>,
    pub k_histogram: Vec<Bucket>,
    pub order_histogram: Vec<Bucket>,
    pub best_k: usize,
    pub wall_ms: u64,
}

impl SearchReport {
    /// Rows attaining [`Self::best_k`].
    pub fn best_rows(&self) -> impl Iterator<Item = &GraphRow> {
        self.rows.iter().filter(move |r| r.k == self.best_k)
    }

    /// Fractions of rows, isomorphism classes and labeled graphs attaining `k`.
    pub fn fractions_at(&self, k: usize) -> (f64, f64, f64) {
        let total = totals(&self.rows);
        let hit = totals(self.rows.iter().filter(|r| r.k == k));
        (
            hit.0 as f64 / total.0 as f64,
            hit.1 as f64 / total.1 as f64,
            hit.2 as f64 / total.2 as f64,
        )
    }

    /// Recomputes the aggregates from the rows.
    pub fn recompute_aggregates(&mut self) {
        self.k_histogram = histogram(&self.rows, |r| r.k);
        self.order_histogram = histogram(&self.rows, |r| r.order);
        self.best_k = self.rows.iter().map(|r| r.k).max().unwrap_or(0);
    }

    /// Re-verifies every best row against `e`.
    pub fn verify_best(&self, e: &ErrorSet) -> Result<bool> {
        for row in self.best_rows().filter(|r| r.k > 0) {
            let g = Graph::from_graph6(&row.graph6)?;
            let words: Vec<u32> = row
                .codewords
                .iter()
                .map(|w| crate::util::bits_from_str(w).ok_or_else(|| invalid("bad codeword")))
                .collect::<Result<_>>()?;
            if !verify_code(&g, e, &words)?.ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn totals<'a>(rows: impl IntoIterator<Item = &'a GraphRow>) -> (u64, u64, u64) {
    rows.into_iter().fold((0, 0, 0), |t, r| (t.0 + 1, t.1 + r.iso_count, t.2 + r.labeled_count))
}

pub fn histogram(rows: &[GraphRow], key: impl Fn(&GraphRow) -> usize) -> Vec<Bucket> {
    let mut map: BTreeMap<usize, Bucket> = BTreeMap::new();
    for r in rows {
        let v = key(r);
        let b = map.entry(v).or_insert(Bucket { value: v, rows: 0, iso: 0, labeled: 0 });
        b.rows += 1;
        b.iso += r.iso_count;
        b.labeled += r.labeled_count;
    }
    map.into_values().collect()
}

/// Default relation for exhaustive searches: LC classes suffice when the
/// error set is invariant under every local letter permutation.
pub fn default_relation(e: &ErrorSet) -> Relation {
    match e.kind() {
        ErrorSetKind::Symmetric { .. } => Relation::LcIsomorphism,
        _ => Relation::Isomorphism,
    }
}

/// Solves one graph, consulting and filling `cache`.
pub fn solve_graph(g: &Graph, e: &ErrorSet, solver: &SolverSpec, cache: Option<&ResultCache>) -> Result<(GraphRow, Option<CacheEntry>)> {
    let data = classical_error_data(g, e)?;
    let inst = CliqueInstance::from_data(&data);
    let graph6 = g.to_graph6();
    let hash = e.content_hash();
    let key = solver.key();
    let (members, fresh) = match cache.and_then(|c| c.get(&graph6, &hash, &key)) {
        Some(m) => (m.to_vec(), None),
        None => {
            let report = solver.solve(&inst)?;
            let entry = CacheEntry {
                graph6: graph6.clone(),
                error_set: hash.clone(),
                solver: key.clone(),
                members: report.members.clone(),
            };
            (report.members, Some(entry))
        }
    };
    let code = CwsCode::from_clique(g, e, &members)?;
    let k = code.effective_k();
    let row = GraphRow {
        graph6,
        order: inst.len(),
        annihilator_dim: data.annihilator_dim(),
        clique_size: members.len(),
        k,
        pure: data.is_pure(),
        iso_count: 1,
        labeled_count: 1,
        codewords: if k == 0 {
            Vec::new()
        } else {
            code.codewords.iter().map(|&x| bits_to_string(x, g.n())).collect()
        },
        ga_seed: None,
    };
    Ok((row, fresh))
}

/// Per-graph solver: PLS seeds are split per graph index.
fn solver_for(solver: &SolverSpec, index: usize) -> SolverSpec {
    match *solver {
        SolverSpec::Pls { attempts, selections, seed } => {
            SolverSpec::Pls { attempts, selections, seed: derive_seed(seed, index as u64) }
        }
        other => other,
    }
}

fn solve_all(
    graphs: &[(Graph, u64, u64)],
    e: &ErrorSet,
    solver: &SolverSpec,
    cache: &mut ResultCache,
) -> Result<Vec<GraphRow>> {
    let results: Vec<Result<(GraphRow, Option<CacheEntry>)>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, (g, iso, labeled))| {
            let (mut row, fresh) = solve_graph(g, e, &solver_for(solver, i), Some(cache))?;
            row.iso_count = *iso;
            row.labeled_count = *labeled;
            Ok((row, fresh))
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        let (row, fresh) = r?;
        if let Some(entry) = fresh {
            cache.insert(entry);
        }
        rows.push(row);
    }
    cache.flush()?;
    Ok(rows)
}

/// Runs a search campaign. `descriptor` is the error-set label recorded in
/// the report.
pub fn run_search(
    e: &ErrorSet,
    mode: &SearchMode,
    solver: &SolverSpec,
    seed: u64,
    cache: &mut ResultCache,
) -> Result<SearchReport> {
    let start = Instant::now();
    let n = e.n();
    let rows = match mode {
        SearchMode::Exhaustive { relation } => {
            let classes: Vec<GraphClass> = enumerate_classes(n, *relation)?;
            let graphs: Vec<(Graph, u64, u64)> =
                classes.iter().map(|c| (c.representative, c.iso_classes, c.class_size)).collect();
            solve_all(&graphs, e, solver, cache)?
        }
        SearchMode::Random { samples } => {
            let graphs: Vec<(Graph, u64, u64)> = (0..*samples)
                .map(|i| (Graph::random(n, &mut rng_from_seed(derive_seed(seed, i as u64))), 1, 1))
                .collect();
            solve_all(&graphs, e, solver, cache)?
        }
        SearchMode::Screened { samples, min_order } => {
            let kept: Vec<Option<Graph>> = (0..*samples)
                .into_par_iter()
                .map(|i| {
                    let g = Graph::random(n, &mut rng_from_seed(derive_seed(seed, i as u64)));
                    let o = crate::cwsmap::clique_graph_order(&g, e)?;
                    Ok((o.order >= *min_order).then_some(g))
                })
                .collect::<Result<_>>()?;
            let graphs: Vec<(Graph, u64, u64)> = kept.into_iter().flatten().map(|g| (g, 1, 1)).collect();
            solve_all(&graphs, e, solver, cache)?
        }
        SearchMode::Ga { instances, config } => {
            if config.n != n {
                return Err(invalid("GA node count differs from the error set's"));
            }
            let runs = ga_campaign(config, *instances, seed, e)?;
            let graphs: Vec<(Graph, u64, u64)> = runs.iter().map(|r| (r.outcome.best_graph, 1, 1)).collect();
            let mut rows = solve_all(&graphs, e, solver, cache)?;
            for (row, run) in rows.iter_mut().zip(&runs) {
                row.ga_seed = Some(run.seed);
            }
            rows
        }
    };
    let mut report = SearchReport {
        n,
        mode: mode.clone(),
        error_set: e.kind().label(),
        error_set_hash: e.content_hash(),
        solver: *solver,
        seed,
        rows,
        k_histogram: Vec::new(),
        order_histogram: Vec::new(),
        best_k: 0,
        wall_ms: 0,
    };
    report.recompute_aggregates();
    report.wall_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Which graphs a clique-order histogram covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum GraphSource {
    Classes { relation: Relation },
    Sample { size: usize, seed: u64 },
}

/// Histogram of `(|N_E|, annihilator dimension)` without solving any clique.
pub fn order_histogram(e: &ErrorSet, source: GraphSource) -> Result<Vec<OrderBucket>> {
    let n = e.n();
    let graphs: Vec<(Graph, u64)> = match source {
        GraphSource::Classes { relation } => {
            enumerate_classes(n, relation)?.into_iter().map(|c| (c.representative, c.class_size)).collect()
        }
        GraphSource::Sample { size, seed } => (0..size)
            .map(|i| (Graph::random(n, &mut rng_from_seed(derive_seed(seed, i as u64))), 1))
            .collect(),
    };
    let orders: Vec<(usize, usize, u64)> = graphs
        .par_iter()
        .map(|(g, w)| {
            crate::cwsmap::clique_graph_order(g, e).map(|o| (o.order, o.annihilator_dim, *w))
        })
        .collect::<Result<_>>()?;
    let mut map: BTreeMap<(usize, usize), OrderBucket> = BTreeMap::new();
    for (order, r, w) in orders {
        let b = map.entry((order, r)).or_insert(OrderBucket { order, annihilator_dim: r, graphs: 0, labeled: 0 });
        b.graphs += 1;
        b.labeled += w;
    }
    Ok(map.into_values().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBucket {
    pub order: usize,
    pub annihilator_dim: usize,
    pub graphs: u64,
    pub labeled: u64,
}

/// CSV with header `order,annihilator_dim,graphs,labeled`.
pub fn order_histogram_csv(buckets: &[OrderBucket]) -> String {
    let mut s = String::from("order,annihilator_dim,graphs,labeled\n");
    for b in buckets {
        s.push_str(&format!("{},{},{},{}\n", b.order, b.annihilator_dim, b.graphs, b.labeled));
    }
    s
}
