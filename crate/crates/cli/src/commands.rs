use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use cyclebound::cycles::CycleSearch;
use cyclebound::decomposition::{block_decomposition, is_block_graph, BridgeSet};
use cyclebound::equality::{certify_equality_from, EqualityStatus};
use cyclebound::format::{parse_graph_labeled, serialize_graph, serialize_graph_json, ParsedGraph};
use cyclebound::fuzz::{run_fuzz, FuzzConfig, FuzzError, FuzzFailure, FuzzSummary};
use cyclebound::generators::{
    gen_block_graph, gen_induced_clique, gen_random_connected, gen_tree, BlockGraphSpec, Density,
    RandomSpec, WeightRange,
};
use cyclebound::inequality::{
    light_edge_forest_from, report_from_profiles, threshold_mass_from, InequalityReport,
};
use cyclebound::report::{CertificateView, Number, NumberMode, ReportView};
use cyclebound::{Error, Rational, VertexId, WeightedGraph};

use crate::{Failure, GenerateKind, RunArgs};

type CmdResult = Result<(), Failure>;

fn load(path: &Path) -> Result<ParsedGraph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_graph_labeled(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("views serialize")
}

struct Names<'a>(Option<&'a [String]>);

impl Names<'_> {
    fn get(&self, v: VertexId) -> String {
        match self.0 {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    fn list(&self, vs: &[VertexId]) -> String {
        vs.iter()
            .map(|&v| self.get(v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Serialize)]
struct Labeled<T> {
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(flatten)]
    body: T,
}

fn analyse_main(
    g: &WeightedGraph,
    run: &RunArgs,
) -> Result<(InequalityReport, BridgeSet), Failure> {
    let search = CycleSearch::new(g, run.search());
    let profiles = search.profiles()?;
    let report = report_from_profiles(g, search.bridges(), profiles)?;
    Ok((report, search.bridges().clone()))
}

fn report_text(report: &InequalityReport, view: &ReportView, names: &Names) -> String {
    let mut out = String::new();
    let state = if view.connected {
        "connected"
    } else {
        "disconnected"
    };
    writeln!(out, "n = {}, m = {}, {state}", view.n, view.edges.len()).unwrap();
    writeln!(out, "local_sum = {}", view.local_sum).unwrap();
    writeln!(out, "bound     = {}", view.bound).unwrap();
    writeln!(out, "gap       = {}", view.gap).unwrap();
    match view.numerically_tight {
        None => writeln!(out, "equality  = {}", view.equality).unwrap(),
        Some(tight) => writeln!(out, "numerically tight = {tight}").unwrap(),
    }
    if !view.connected {
        for c in &view.components {
            writeln!(
                out,
                "component [{}]: phi = {} <= {}",
                names.list(&c.vertices),
                c.phi,
                c.bound
            )
            .unwrap();
        }
    }
    writeln!(out, "edges (u v : w  C_w  phi  witness):").unwrap();
    for (e, p) in view.edges.iter().zip(&report.profiles) {
        let witness = match &e.witness {
            Some(c) => names.list(c),
            None if p.is_bridge => "bridge".to_string(),
            None => "-".to_string(),
        };
        writeln!(
            out,
            "  {} {} : {}  {}  {}  {witness}",
            names.get(e.u),
            names.get(e.v),
            e.w,
            e.c_w,
            e.phi
        )
        .unwrap();
    }
    out
}

pub(crate) fn verify(path: &Path, run: &RunArgs) -> CmdResult {
    let parsed = load(path)?;
    let g = &parsed.graph;
    let (report, _) = analyse_main(g, run)?;
    let view = ReportView::new(&report, run.number_mode());
    let names = Names(parsed.labels.as_deref());
    if run.json {
        println!(
            "{}",
            to_json(&Labeled {
                labels: parsed.labels.clone(),
                body: view
            })
        );
    } else {
        print!("{}", report_text(&report, &view, &names));
    }
    Ok(())
}

#[derive(Serialize)]
struct ThresholdView {
    t: Number,
    light_mass: Number,
    bound: Number,
    heavy_mass: Number,
    complement_bound: Number,
    holds: bool,
}

#[derive(Serialize)]
struct AnalyzeView {
    report: ReportView,
    bridges: Vec<(VertexId, VertexId)>,
    blocks: Vec<Vec<VertexId>>,
    cut_vertices: Vec<VertexId>,
    block_graph: bool,
    /// Absent in float mode, which never certifies equality.
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateView>,
    light_edge_forest: Vec<(VertexId, VertexId)>,
    thresholds: Vec<ThresholdView>,
}

pub(crate) fn analyze(path: &Path, thresholds: &[Rational], run: &RunArgs) -> CmdResult {
    let parsed = load(path)?;
    let g = &parsed.graph;
    let mode = run.number_mode();
    let (report, bridges) = analyse_main(g, run)?;
    let blocks = block_decomposition(g);
    let block_check = is_block_graph(g);
    let certificate = match mode {
        NumberMode::Exact => Some(certify_equality_from(g, &report, &run.search())?),
        NumberMode::Float => None,
    };
    let forest = light_edge_forest_from(g, &report.profiles)?;
    let mut threshold_views = Vec::new();
    for t in thresholds {
        let tr = threshold_mass_from(g, &report.profiles, t)?;
        let num = |r: &Rational| Number::new(r, mode);
        threshold_views.push(ThresholdView {
            t: num(&tr.t),
            light_mass: num(&tr.light_mass),
            bound: num(&tr.bound),
            heavy_mass: num(&tr.heavy_mass),
            complement_bound: num(&tr.complement_bound),
            holds: tr.holds,
        });
    }
    let pair = |id: usize| (g.edge(id).u, g.edge(id).v);
    let view = AnalyzeView {
        report: ReportView::new(&report, mode),
        bridges: bridges.bridges.iter().map(|&id| pair(id)).collect(),
        blocks: blocks.blocks.iter().map(|b| b.vertices.clone()).collect(),
        cut_vertices: blocks.cut_vertices.clone(),
        block_graph: block_check.is_block_graph,
        certificate: certificate.as_ref().map(CertificateView::from),
        light_edge_forest: forest.edges.iter().map(|&id| pair(id)).collect(),
        thresholds: threshold_views,
    };

    if run.json {
        println!(
            "{}",
            to_json(&Labeled {
                labels: parsed.labels.clone(),
                body: view
            })
        );
        return Ok(());
    }
    let names = Names(parsed.labels.as_deref());
    let edge_list = |edges: &[(VertexId, VertexId)]| {
        if edges.is_empty() {
            "none".to_string()
        } else {
            edges
                .iter()
                .map(|&(u, v)| format!("{}-{}", names.get(u), names.get(v)))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };
    print!("{}", report_text(&report, &view.report, &names));
    println!("bridges: {}", edge_list(&view.bridges));
    println!("blocks:");
    for b in &view.blocks {
        println!("  [{}]", names.list(b));
    }
    println!(
        "cut vertices: {}",
        if view.cut_vertices.is_empty() {
            "none".to_string()
        } else {
            names.list(&view.cut_vertices)
        }
    );
    println!(
        "block graph: {}",
        if view.block_graph { "yes" } else { "no" }
    );
    match &certificate {
        None => println!("certificate: not issued in float mode"),
        Some(cert) => {
            match (cert.status, cert.route) {
                (EqualityStatus::Strict, _) => println!("certificate: Strict (gap {})", cert.gap),
                (EqualityStatus::Equality, route) => {
                    println!("certificate: Equality via {route:?}")
                }
            }
            for b in &cert.per_block {
                if let Some(a) = &b.a {
                    let a: Vec<String> = a.iter().map(ToString::to_string).collect();
                    println!(
                        "  block [{}]: a = ({})",
                        names.list(&b.vertices),
                        a.join(", ")
                    );
                }
            }
            for c in &cert.diagnostics.components {
                println!(
                    "  component [{}]: phi = {} (bound {}), max cycle phi = {}, termwise tight: {}",
                    names.list(&c.vertices),
                    c.phi_total,
                    c.bound,
                    c.max_cycle_phi,
                    c.termwise_tight
                );
            }
        }
    }
    println!("light-edge forest: {}", edge_list(&view.light_edge_forest));
    for t in &view.thresholds {
        println!(
            "threshold T = {}: light mass {} <= {}, heavy mass {} >= {}",
            t.t, t.light_mass, t.bound, t.heavy_mass, t.complement_bound
        );
    }
    Ok(())
}

pub(crate) fn generate(kind: GenerateKind, run: &RunArgs) -> CmdResult {
    let g = match kind {
        GenerateKind::Tree { n, seed } => gen_tree(n, seed)?,
        GenerateKind::InducedClique { r, a } => {
            if a.len() != r {
                return Err(
                    Error::Invalid(format!("expected {r} vertex values, got {}", a.len())).into(),
                );
            }
            gen_induced_clique(r, &a)?
        }
        GenerateKind::BlockGraph { spec, seed } => {
            let text = fs::read_to_string(&spec)
                .map_err(|e| Failure::Io(format!("{}: {e}", spec.display())))?;
            let spec: BlockGraphSpec = serde_json::from_str(&text).map_err(|e| {
                Failure::Io(format!("{}: invalid block graph spec: {e}", spec.display()))
            })?;
            gen_block_graph(&spec, seed)?
        }
        GenerateKind::Random { n, m, p, seed } => {
            let density = match (m, p) {
                (_, Some(p)) => Density::Probability(p),
                (Some(m), None) => Density::Edges(m),
                (None, None) => {
                    Density::Edges((2 * n).saturating_sub(1).min(n * n.saturating_sub(1) / 2))
                }
            };
            gen_random_connected(&RandomSpec {
                n,
                density,
                weights: WeightRange::default(),
                seed,
            })?
        }
    };
    if run.json {
        println!("{}", serialize_graph_json(&g));
    } else {
        print!("{}", serialize_graph(&g));
    }
    Ok(())
}

fn summary_text(cfg: &FuzzConfig, s: &FuzzSummary) -> String {
    let mut out = String::new();
    let opt = |r: &Option<Rational>| r.as_ref().map_or("-".to_string(), ToString::to_string);
    writeln!(
        out,
        "fuzz n = {}..{}, {} trials each, seed {}",
        cfg.n_min, cfg.n_max, cfg.trials, cfg.seed
    )
    .unwrap();
    writeln!(out, "instances:            {}", s.instances).unwrap();
    writeln!(out, "checks passed:        {}", s.checks).unwrap();
    writeln!(out, "thresholds:           {}", s.thresholds).unwrap();
    writeln!(out, "bondy-fan components: {}", s.bondy_fan_components).unwrap();
    if cfg.cross_check {
        writeln!(out, "oracle edges:         {}", s.oracle_edges).unwrap();
    }
    writeln!(out, "equality instances:   {}", s.equality_instances).unwrap();
    writeln!(out, "min gap:              {}", opt(&s.min_gap)).unwrap();
    writeln!(out, "min positive gap:     {}", opt(&s.min_positive_gap)).unwrap();
    out
}

pub(crate) fn fuzz(cfg: FuzzConfig, out_dir: &Path, run: &RunArgs) -> CmdResult {
    match run_fuzz(&cfg) {
        Ok(summary) => {
            if run.json {
                #[derive(Serialize)]
                struct FuzzView<'a> {
                    config: &'a FuzzConfig,
                    summary: &'a FuzzSummary,
                }
                println!(
                    "{}",
                    to_json(&FuzzView {
                        config: &cfg,
                        summary: &summary
                    })
                );
            } else {
                print!("{}", summary_text(&cfg, &summary));
            }
            Ok(())
        }
        Err(FuzzError::Config(e)) => Err(e.into()),
        Err(FuzzError::Failure(failure)) => {
            let FuzzFailure {
                n,
                trial,
                instance_seed,
                instance,
                source,
            } = *failure;
            let name = format!("counterexample-seed{}-n{n}-trial{trial}.txt", cfg.seed);
            let path = out_dir.join(name);
            let contents = format!(
                "# {source}\n# run seed {}, n = {n}, trial {trial}, instance seed {instance_seed:#x}\n{instance}",
                cfg.seed
            );
            match fs::write(&path, contents) {
                Ok(()) => eprintln!("failing instance written to {}", path.display()),
                Err(e) => eprintln!("could not write {}: {e}", path.display()),
            }
            Err(source.into())
        }
    }
}
