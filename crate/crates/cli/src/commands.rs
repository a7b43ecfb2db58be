use std::path::Path;

use serde_json::{json, Value};
use smoothgraph_core::decomposition::{auxiliary_blob_graph, blob_partition};
use smoothgraph_core::expansion::{
    conductance_profile, edge_isoperimetric_exact, expansion_profile, sweep_cut_upper_bound, vertex_isoperimetric_exact,
};
use smoothgraph_core::graph_core::io::{load_graph, write_edge_list, LoadedGraph, PerturbedGraphFile};
use smoothgraph_core::graph_core::{degeneracy, diameter, generate_base, perturb};
use smoothgraph_core::harness::{
    applicable_reports, read_result_json, run_sweep, theorem_report, write_outputs, Calibration, ExperimentConfig,
    Theorem, TheoremReport,
};
use smoothgraph_core::longpath::{default_blob_size, long_path_blob_heuristic, longest_path_exact};
use smoothgraph_core::subset_enum::{decode_connected_set, encode_connected_set, enumerate_connected_sets, parse_bits};
use smoothgraph_core::walks::{empirical_mixing_estimate, mixing_bounds, mixing_time_exact};
use smoothgraph_core::{BaseKind, Error, PerturbationParams, PerturbedGraph, Result};

use crate::cli::{Cli, Command, MixArgs};

pub enum Outcome {
    Done,
    BandFailure,
}

fn emit(json_mode: bool, value: Value, line: String) -> Result<()> {
    if json_mode {
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!("{line}");
    }
    Ok(())
}

fn load(path: &Path) -> Result<LoadedGraph> {
    load_graph(path)
}

fn as_perturbed(loaded: LoadedGraph) -> Result<PerturbedGraph> {
    match loaded {
        LoadedGraph::Perturbed(pg) => Ok(pg),
        LoadedGraph::Plain(g) => PerturbedGraph::from_parts(g, Vec::new(), 0.0),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let js = cli.json;
    match &cli.command {
        Command::Gen { kind, n, seed, output } => {
            let kind: BaseKind = kind.parse()?;
            let g = generate_base(kind, *n, *seed)?;
            std::fs::write(output, write_edge_list(&g)).map_err(Error::file(output))?;
            emit(
                js,
                json!({"kind": kind.name(), "n": g.n(), "m": g.m(), "output": output}),
                format!("{}: n={} m={} -> {}", kind.name(), g.n(), g.m(), output.display()),
            )?;
        }
        Command::Perturb {
            graph,
            eps,
            eps_exponent,
            seed,
            output,
        } => {
            let base = match load(graph)? {
                LoadedGraph::Plain(g) => g,
                LoadedGraph::Perturbed(_) => {
                    return Err(Error::Parameter("perturb expects an edge list, not a perturbed sample".into()))
                }
            };
            let params = match (eps, eps_exponent) {
                (Some(e), _) => PerturbationParams::new(*e, *seed),
                (None, Some(a)) => PerturbationParams::with_exponent(*a, *seed),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let pg = perturb(&base, &params)?;
            let file = PerturbedGraphFile::from_graph(&pg, Some(*seed));
            std::fs::write(output, serde_json::to_string_pretty(&file)? + "\n").map_err(Error::file(output))?;
            emit(
                js,
                json!({"n": pg.n(), "eps": pg.eps, "seed": seed, "random_edges": pg.random_edges.len(),
                       "new_edges": pg.new_edge_count(), "merged_edges": pg.merged.m(), "output": output}),
                format!(
                    "n={} eps={} random_edges={} new_edges={} merged_m={} -> {}",
                    pg.n(),
                    pg.eps,
                    pg.random_edges.len(),
                    pg.new_edge_count(),
                    pg.merged.m(),
                    output.display()
                ),
            )?;
        }
        Command::Stats { graph } => {
            let loaded = load(graph)?;
            let g = loaded.working();
            let connected = g.is_connected();
            let diam = if connected { Some(diameter(g)?) } else { None };
            let random = match &loaded {
                LoadedGraph::Perturbed(pg) => Some(pg.random_edges.len()),
                LoadedGraph::Plain(_) => None,
            };
            emit(
                js,
                json!({"n": g.n(), "m": g.m(), "min_degree": g.min_degree(), "max_degree": g.max_degree(),
                       "degeneracy": degeneracy(g), "connected": connected, "diameter": diam, "random_edges": random}),
                format!(
                    "n={} m={} degree=[{}, {}] degeneracy={} connected={} diameter={}{}",
                    g.n(),
                    g.m(),
                    g.min_degree(),
                    g.max_degree(),
                    degeneracy(g),
                    connected,
                    diam.map_or("-".into(), |d| d.to_string()),
                    random.map_or(String::new(), |r| format!(" random_edges={r}"))
                ),
            )?;
        }
        Command::Expansion { graph, max_frac, sweep } => {
            let loaded = load(graph)?;
            let g = loaded.working();
            if *sweep {
                let s = sweep_cut_upper_bound(g)?;
                emit(
                    js,
                    json!({"method": "sweep", "edge_expansion_upper": s.value, "set": s.set,
                           "converged": s.converged, "iterations": s.iterations}),
                    format!("edge expansion <= {:.6} (sweep, |S|={}, converged={})", s.value, s.set.len(), s.converged),
                )?;
            } else {
                let iota = vertex_isoperimetric_exact(g, *max_frac)?;
                let c = edge_isoperimetric_exact(g, *max_frac)?;
                emit(
                    js,
                    json!({"method": "exact", "max_frac": max_frac, "iota": iota, "c": c}),
                    format!(
                        "iota={}/{} ({:.6}) c={}/{} ({:.6})",
                        iota.numerator, iota.denominator, iota.value, c.numerator, c.denominator, c.value
                    ),
                )?;
            }
        }
        Command::Profile {
            graph,
            alpha,
            conductance,
            connected,
        } => {
            let loaded = load(graph)?;
            let g = loaded.working();
            if *conductance {
                let p = conductance_profile(g, *connected)?;
                let line = p
                    .bands
                    .iter()
                    .map(|b| format!("j={} phi={:.6}", b.j, b.phi))
                    .collect::<Vec<_>>()
                    .join("; ");
                emit(js, serde_json::to_value(&p)?, line)?;
            } else {
                let p = expansion_profile(g, *alpha)?;
                let line = p
                    .iter()
                    .map(|q| format!("s={} boundary={} value={:.6}", q.s, q.min_boundary, q.value))
                    .collect::<Vec<_>>()
                    .join("; ");
                emit(js, serde_json::to_value(&p)?, line)?;
            }
        }
        Command::Mix(args) => mix(js, args)?,
        Command::Blobs { graph, k, output } => {
            let loaded = load(graph)?;
            let (base, working) = match &loaded {
                LoadedGraph::Plain(g) => (g, g),
                LoadedGraph::Perturbed(pg) => (&pg.base, &pg.merged),
            };
            let part = blob_partition(base, *k)?;
            part.validate(base)?;
            let aux = auxiliary_blob_graph(working, &part)?;
            if let Some(out) = output {
                std::fs::write(out, serde_json::to_string_pretty(&part.to_json())? + "\n").map_err(Error::file(out))?;
            }
            let sizes: Vec<usize> = part.blobs.iter().map(Vec::len).collect();
            let (lo, hi) = (sizes.iter().min().unwrap(), sizes.iter().max().unwrap());
            emit(
                js,
                json!({"k": k, "delta": part.delta, "t": part.t(), "min_size": lo, "max_size": hi,
                       "aux_edges": aux.graph.m(), "aux_connected": aux.graph.is_connected(),
                       "blobs": part.blobs}),
                format!(
                    "t={} sizes=[{lo}, {hi}] within [{}, {}] aux_edges={} aux_connected={}",
                    part.t(),
                    k,
                    part.delta * k,
                    aux.graph.m(),
                    aux.graph.is_connected()
                ),
            )?;
        }
        Command::Longpath { graph, exact, k, seed } => {
            let loaded = load(graph)?;
            if *exact {
                let w = longest_path_exact(loaded.working())?;
                emit(
                    js,
                    serde_json::to_value(&w)?,
                    format!("length={} method={}", w.length, w.method.name()),
                )?;
            } else {
                let pg = as_perturbed(loaded)?;
                let k = match k {
                    Some(k) => *k,
                    None => default_blob_size(pg.eps, pg.n())
                        .map_err(|_| Error::Parameter("eps is 0; pass --k for the blob size".into()))?,
                };
                let h = long_path_blob_heuristic(&pg, k, *seed)?;
                emit(
                    js,
                    serde_json::to_value(&h)?,
                    format!(
                        "length={} method={} aux_length={} k={} t={}",
                        h.path.length,
                        h.path.method.name(),
                        h.aux_length,
                        h.k,
                        h.t
                    ),
                )?;
            }
        }
        Command::Enum { graph, v, a, b, decode } => {
            let loaded = load(graph)?;
            let g = loaded.working();
            if let Some(bits) = decode {
                let set = decode_connected_set(g, *v, &parse_bits(bits)?)?;
                emit(js, json!({"root": v, "set": set}), format!("{set:?}"))?;
            } else {
                let (a, b) = (a.unwrap(), b.unwrap());
                if *v >= g.n() {
                    return Err(Error::Parameter(format!("vertex {v} out of range for n = {}", g.n())));
                }
                let sets = enumerate_connected_sets(g, *v, a, b);
                let codes = sets
                    .iter()
                    .map(|s| encode_connected_set(g, s, *v))
                    .collect::<Result<Vec<_>>>()?;
                if js {
                    let items: Vec<Value> = sets
                        .iter()
                        .zip(&codes)
                        .map(|(s, c)| json!({"set": s, "code": c.bit_string()}))
                        .collect();
                    emit(true, json!({"v": v, "a": a, "b": b, "count": sets.len(), "sets": items}), String::new())?;
                } else {
                    for c in &codes {
                        println!("{}", c.line());
                    }
                }
            }
        }
        Command::Sweep { config, output } => {
            let cfg = ExperimentConfig::load(config)?;
            let res = run_sweep(&cfg)?;
            let reports = applicable_reports(&res, &Calibration::frozen())?;
            let files = write_outputs(output, &res, &reports)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            emit(
                js,
                json!({"rows": res.rows.len(), "files": files, "reports": reports}),
                format!(
                    "{} rows; {} reports, {failed} failing; wrote {}",
                    res.rows.len(),
                    reports.len(),
                    files.iter().map(|p| p.display().to_string()).collect::<Vec<_>>().join(", ")
                ),
            )?;
            if failed > 0 {
                return Ok(Outcome::BandFailure);
            }
        }
        Command::Report { results, theorem } => {
            let file = read_result_json(results)?;
            let cal = Calibration::frozen();
            let reports = match theorem {
                Some(t) => vec![theorem_report(&file.result, t.parse::<Theorem>()?, &cal)?],
                None => applicable_reports(&file.result, &cal)?,
            };
            if js {
                emit(true, serde_json::to_value(&reports)?, String::new())?;
            } else {
                reports.iter().for_each(|r| println!("{}", report_line(r)));
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(Outcome::BandFailure);
            }
        }
    }
    Ok(Outcome::Done)
}

fn report_line(r: &TheoremReport) -> String {
    let status = serde_json::to_value(r.status).unwrap();
    let mut line = format!(
        "{} [{}] {} = {:.6} band=[{}, {}] status={}",
        r.theorem,
        r.claim,
        r.fitted,
        r.fitted_constant,
        r.band[0],
        r.band[1],
        status.as_str().unwrap()
    );
    for f in &r.flags {
        line.push_str(&format!("; {f}"));
    }
    line
}

fn mix(js: bool, args: &MixArgs) -> Result<()> {
    let loaded = load(&args.graph)?;
    let g = loaded.working();
    let bounds = if args.no_bounds { None } else { Some(mixing_bounds(g)?) };
    let mut value = json!({"n": g.n(), "m": g.m()});
    let mut line;
    let mut flags = serde_json::Map::new();
    if args.estimate {
        let est = empirical_mixing_estimate(g, args.walkers, args.horizon, args.seed)?;
        line = match est.estimate {
            Some(t) => format!("estimate={t} (Monte Carlo, {} walkers/start)", est.walkers),
            None => format!("not mixed by horizon {} (last TV {:.4})", est.horizon, est.last_tv),
        };
        value["estimate"] = json!(est.estimate);
        flags.insert("mode".into(), json!("estimate"));
        flags.insert("status".into(), serde_json::to_value(est.status)?);
        flags.insert("noise_floor".into(), json!(est.noise_floor));
        flags.insert("note".into(), json!(est.note));
    } else {
        let t = mixing_time_exact(g)?;
        line = format!("t_mix={}", t.t_mix);
        if t.boundary {
            line.push_str(" (boundary case)");
        }
        value["t_mix"] = json!(t.t_mix);
        flags.insert("mode".into(), json!("exact"));
        flags.insert("boundary".into(), json!(t.boundary));
        flags.insert("worst_start".into(), json!(t.worst_start));
    }
    if let Some(b) = bounds {
        line.push_str(&format!(
            " fr_sum={:.6} js_value={:.6}{}",
            b.fr_sum,
            b.js_value,
            if b.exact() { "" } else { " (approximate)" }
        ));
        value["fr_sum"] = json!(b.fr_sum);
        value["js_value"] = json!(b.js_value);
        flags.insert("fr_exact".into(), json!(b.fr_exact));
        flags.insert("js_exact".into(), json!(b.js_exact));
    }
    value["flags"] = Value::Object(flags);
    emit(js, value, line)
}
