use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use cws_core::bitgraph::{classes_to_text, enumerate_classes, Graph, Relation};
use cws_core::bounds::{lp_max_k, reference_nonadditive, singleton_bound, MAX_LP_LENGTH};
use cws_core::campaign::{
    default_relation, ga_compare as run_compare, order_histogram, order_histogram_csv, run_search, GraphSource,
    ResultCache, SearchMode, SearchReport,
};
use cws_core::clique::{PlsParams, SolverSpec};
use cws_core::cwsmap::{verify_code, CwsCode};
use cws_core::evolve::{CrossoverKind, GaConfig};
use cws_core::pauli::{parse_error_set, ErrorSet};
use cws_core::qoracle::detection_check;
use cws_core::util::bits_from_str;
use serde::Serialize;

use crate::{
    BoundsArgs, ClusterArgs, EnumerateArgs, ErrorSetArgs, GaArgs, GaCompareArgs, ModeArg, RelationArg, SearchArgs,
    SolverArg, VerifyArgs,
};

const SPEC_COMMENT: &str = "# errorset-spec ";

fn relation(r: RelationArg) -> Relation {
    match r {
        RelationArg::Iso => Relation::Isomorphism,
        RelationArg::Lc => Relation::LcIsomorphism,
    }
}

fn error_set(a: &ErrorSetArgs) -> Result<ErrorSet> {
    parse_error_set(&a.error_set, a.n, a.d).with_context(|| format!("error set '{}'", a.error_set))
}

fn crossover(name: &str, exchange: f64) -> Result<CrossoverKind> {
    Ok(match name.parse::<CrossoverKind>()? {
        CrossoverKind::Uniform { .. } => CrossoverKind::Uniform { p_e: exchange },
        other => other,
    })
}

fn ga_config(n: usize, a: &GaArgs, seed: u64) -> Result<GaConfig> {
    let config = GaConfig {
        n,
        population: a.ga_population,
        generations: a.ga_generations,
        crossover_prob: a.ga_crossover_prob,
        mutation_prob: a.ga_mutation_prob,
        tournament: a.ga_tournament,
        elitism: a.ga_elitism,
        crossover: crossover(&a.ga_crossover, a.ga_exchange_prob)?,
        seed,
    };
    config.validate()?;
    Ok(config)
}

/// Opens `path`, or stdout when absent.
fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn enumerate(a: EnumerateArgs) -> Result<i32> {
    let classes = enumerate_classes(a.n, relation(a.relation))?;
    let (g6, csv) = classes_to_text(&classes);
    match a.out {
        Some(base) => {
            fs::write(base.with_extension("g6"), g6)?;
            fs::write(base.with_extension("csv"), csv)?;
            let labeled: u64 = classes.iter().map(|c| c.class_size).sum();
            let iso: u64 = classes.iter().map(|c| c.iso_classes).sum();
            eprintln!("n={} classes={} isomorphism_classes={iso} labeled={labeled}", a.n, classes.len());
        }
        None => print!("{g6}"),
    }
    Ok(0)
}

#[derive(Serialize)]
struct SearchSummary<'a> {
    summary: bool,
    n: usize,
    mode: &'a SearchMode,
    error_set: &'a str,
    error_set_hash: &'a str,
    solver: String,
    seed: u64,
    graphs: usize,
    best_k: usize,
    best_graphs: usize,
    fractions_at_best: (f64, f64, f64),
    k_histogram: &'a [cws_core::campaign::Bucket],
    order_histogram: &'a [cws_core::campaign::Bucket],
    verified: bool,
    wall_ms: u64,
}

fn summary(r: &SearchReport, verified: bool) -> SearchSummary<'_> {
    SearchSummary {
        summary: true,
        n: r.n,
        mode: &r.mode,
        error_set: &r.error_set,
        error_set_hash: &r.error_set_hash,
        solver: r.solver.key(),
        seed: r.seed,
        graphs: r.rows.len(),
        best_k: r.best_k,
        best_graphs: r.best_rows().count(),
        fractions_at_best: if r.rows.is_empty() { (0.0, 0.0, 0.0) } else { r.fractions_at(r.best_k) },
        k_histogram: &r.k_histogram,
        order_histogram: &r.order_histogram,
        verified,
        wall_ms: r.wall_ms,
    }
}

pub fn search(a: SearchArgs) -> Result<i32> {
    let e = error_set(&a.errors)?;
    let n = a.errors.n;
    let mode = match a.mode {
        ModeArg::Exhaustive => {
            SearchMode::Exhaustive { relation: a.relation.map(relation).unwrap_or_else(|| default_relation(&e)) }
        }
        ModeArg::Random => SearchMode::Random { samples: a.samples },
        ModeArg::Screened => SearchMode::Screened { samples: a.samples, min_order: a.min_order },
        ModeArg::Ga => SearchMode::Ga { instances: a.ga_instances, config: ga_config(n, &a.ga, a.seed)? },
    };
    let solver = match a.solver {
        SolverArg::Exact => SolverSpec::exact(),
        SolverArg::Pls => {
            SolverSpec::pls(PlsParams { attempts: a.attempts, max_selections: a.selections, seed: a.seed })
        }
    };
    let mut cache = match &a.cache {
        Some(p) => ResultCache::open(p)?,
        None => ResultCache::in_memory(),
    };
    let report = run_search(&e, &mode, &solver, a.seed, &mut cache)?;
    let verified = report.verify_best(&e)?;
    let mut out = output(a.out.as_deref())?;
    for row in &report.rows {
        json_line(&mut *out, row)?;
    }
    json_line(&mut *out, &summary(&report, verified))?;
    out.flush()?;
    if let Some(dir) = &a.codes_dir {
        write_codes(dir, &report, &e, &a.errors)?;
    }
    eprintln!(
        "n={n} errorset={} best K={} on {} of {} graphs ({} ms)",
        report.error_set,
        report.best_k,
        report.best_rows().count(),
        report.rows.len(),
        report.wall_ms
    );
    if !verified {
        eprintln!("verification of an optimal code FAILED");
        return Ok(1);
    }
    Ok(0)
}

fn write_codes(dir: &Path, report: &SearchReport, e: &ErrorSet, spec: &ErrorSetArgs) -> Result<()> {
    fs::create_dir_all(dir)?;
    let d = spec.d.map(|d| format!(" {d}")).unwrap_or_default();
    for (i, row) in report.best_rows().filter(|r| r.k > 0).enumerate() {
        let g = Graph::from_graph6(&row.graph6)?;
        let words = row.codewords.iter().map(|w| bits_from_str(w).context("bad codeword")).collect::<Result<Vec<_>>>()?;
        let code = CwsCode::from_clique(&g, e, &words)?;
        let text = code.to_text().replacen('\n', &format!("\n{SPEC_COMMENT}{}{d}\n", spec.error_set), 1);
        fs::write(dir.join(format!("n{}_k{}_{i:03}.code", report.n, row.k)), text)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyReport {
    file: String,
    n: usize,
    k: usize,
    error_set: String,
    hash_matches: bool,
    ok: bool,
    pure: bool,
    violation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_ok: Option<bool>,
}

pub fn verify(a: VerifyArgs) -> Result<i32> {
    let text = fs::read_to_string(&a.file).with_context(|| format!("reading {}", a.file.display()))?;
    let code = CwsCode::read_from(text.as_bytes())?;
    let (spec, d) = match &a.error_set {
        Some(s) => (s.clone(), a.d),
        None => {
            let line = text
                .lines()
                .find_map(|l| l.strip_prefix(SPEC_COMMENT))
                .context("no --error-set given and the file names none")?;
            let mut parts = line.split_whitespace();
            let spec = parts.next().context("empty error-set comment")?.to_string();
            let d = match parts.next() {
                Some(d) => Some(d.parse().context("bad distance in error-set comment")?),
                None => a.d,
            };
            (spec, d)
        }
    };
    let e = parse_error_set(&spec, code.n(), d)?;
    let v = verify_code(&code.graph, &e, &code.codewords)?;
    let oracle_ok = if a.oracle { Some(detection_check(&code.graph, &code.codewords, &e)?.ok) } else { None };
    let hash_matches = code.error_set_hash.is_empty() || code.error_set_hash == e.content_hash();
    let report = VerifyReport {
        file: a.file.display().to_string(),
        n: code.n(),
        k: code.k(),
        error_set: e.kind().label(),
        hash_matches,
        ok: v.ok,
        pure: v.pure,
        violation: v.violation.map(|x| x.to_string()),
        oracle_ok,
    };
    println!("{}", serde_json::to_string(&report)?);
    let passed = v.ok && oracle_ok.unwrap_or(true);
    if oracle_ok.is_some_and(|o| o != v.ok) {
        bail!("classical and statevector checks disagree");
    }
    Ok(if passed { 0 } else { 1 })
}

pub fn bounds(a: BoundsArgs) -> Result<i32> {
    if a.n_max > MAX_LP_LENGTH {
        bail!("--n-max is limited to {MAX_LP_LENGTH}");
    }
    let mut out = output(a.out.as_deref())?;
    writeln!(out, "n,d,singleton,lp_integer,lp_supremum,reference_lower,reference_upper,status")?;
    let mut contradictions = 0;
    for n in a.n_min.max(1)..=a.n_max {
        for d in a.d_min.max(1)..=a.d_max {
            let lp = lp_max_k(n, d, a.pure)?;
            let reference = reference_nonadditive(n, d);
            let (lower, upper) = reference.as_ref().map_or((None, None), |r| (r.lower, r.upper));
            // only a bound below a known code is a contradiction; other
            // arguments may tighten the published upper bound
            let status = match (lower, upper) {
                (Some(l), _) if lp.integer < l => {
                    contradictions += 1;
                    "contradiction"
                }
                (_, Some(u)) if lp.integer == u => "match",
                (_, Some(_)) => "differs",
                _ => "unreferenced",
            };
            let fmt = |x: Option<u64>| x.map(|v| v.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{n},{d},{},{},{:.6},{},{},{status}",
                singleton_bound(n, d)?,
                lp.integer,
                lp.supremum_f64(),
                fmt(lower),
                fmt(upper)
            )?;
        }
    }
    out.flush()?;
    Ok(if contradictions > 0 { 1 } else { 0 })
}

pub fn cluster_hist(a: ClusterArgs) -> Result<i32> {
    let e = error_set(&a.errors)?;
    let source = match a.relation {
        Some(r) => GraphSource::Classes { relation: relation(r) },
        None => GraphSource::Sample { size: a.samples, seed: a.seed },
    };
    let buckets = order_histogram(&e, source)?;
    let mut out = output(a.out.as_deref())?;
    out.write_all(order_histogram_csv(&buckets).as_bytes())?;
    out.flush()?;
    Ok(0)
}

pub fn ga_compare(a: GaCompareArgs) -> Result<i32> {
    let e = error_set(&a.errors)?;
    let template = ga_config(a.errors.n, &a.ga, a.seed)?;
    let treatment = crossover(&a.treatment, a.ga.ga_exchange_prob)?;
    let baseline = crossover(&a.baseline, a.ga.ga_exchange_prob)?;
    let c = run_compare(&template, treatment, baseline, a.instances, a.seed, &e)?;
    let mut out = output(a.out.as_deref())?;
    for run in &c.runs {
        json_line(&mut *out, run)?;
    }
    #[derive(Serialize)]
    struct Line<'a> {
        comparison: bool,
        treatment: &'a cws_core::campaign::GaSummary,
        baseline: &'a cws_core::campaign::GaSummary,
        test: &'a cws_core::evolve::MannWhitney,
    }
    json_line(&mut *out, &Line { comparison: true, treatment: &c.treatment, baseline: &c.baseline, test: &c.test })?;
    out.flush()?;
    eprintln!(
        "{} mean {:.2} vs {} mean {:.2}: U={} z={:.3} p={:.4}",
        treatment.name(),
        c.treatment.mean_best,
        baseline.name(),
        c.baseline.mean_best,
        c.test.u,
        c.test.z,
        c.test.p_greater
    );
    Ok(0)
}
