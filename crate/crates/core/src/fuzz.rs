//! Seeded falsification runs over random connected instances.
//!
//! Each instance is checked against the main bound, the per-cycle `phi`
//! bound, the light-edge forest, random thresholds and, per bridgeless
//! component, the classical heavy-cycle and long-cycle bounds. Optionally the
//! pruned search is cross-checked against brute-force enumeration.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::SearchConfig;
use crate::cycles::{enumerate_cycles, CycleSearch};
use crate::error::Error;
use crate::format::serialize_graph;
use crate::generators::{gen_random_connected, rng_from_seed, Density, RandomSpec, WeightRange};
use crate::graph::WeightedGraph;
use crate::inequality::{
    cycle_phi_bound_from, light_edge_forest_from, report_from_profiles, threshold_mass_from,
    verify_bondy_fan, verify_erdos_gallai, InequalityReport,
};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Instances per vertex count.
    pub trials: usize,
    pub seed: u64,
    pub thresholds_per_instance: usize,
    /// Compare every `C_w(e)` with the enumeration oracle.
    pub cross_check: bool,
    pub search: SearchConfig,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            n_min: 3,
            n_max: 8,
            trials: 200,
            seed: 0,
            thresholds_per_instance: 3,
            cross_check: false,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Debug, Error)]
pub enum FuzzError {
    #[error(transparent)]
    Config(Error),
    #[error(transparent)]
    Failure(Box<FuzzFailure>),
}

/// A failing instance with everything needed to reproduce it.
#[derive(Debug, Error)]
#[error("instance n = {n}, trial = {trial} (seed {instance_seed:#x}) failed: {source}")]
pub struct FuzzFailure {
    pub n: usize,
    pub trial: usize,
    pub instance_seed: u64,
    pub instance: String,
    #[source]
    pub source: Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceOutcome {
    pub n: usize,
    pub m: usize,
    pub gap: Rational,
    pub equality: bool,
    pub checks: usize,
    pub oracle_edges: usize,
    pub bondy_fan_components: usize,
    pub erdos_gallai_components: usize,
    pub thresholds: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct FuzzSummary {
    pub instances: usize,
    pub checks: usize,
    pub equality_instances: usize,
    pub min_gap: Option<Rational>,
    /// Smallest gap among strict instances.
    pub min_positive_gap: Option<Rational>,
    pub oracle_edges: usize,
    pub bondy_fan_components: usize,
    pub erdos_gallai_components: usize,
    pub thresholds: usize,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of one instance, derived from the run seed and its position.
pub fn instance_seed(seed: u64, n: usize, trial: usize) -> u64 {
    splitmix64(splitmix64(seed ^ (n as u64) << 32) ^ trial as u64)
}

/// Random connected graph on `n` vertices with `m` uniform in `[n-1, C(n,2)]`.
pub fn fuzz_instance(n: usize, seed: u64) -> crate::error::Result<WeightedGraph> {
    let mut rng = rng_from_seed(seed);
    let m = rng.gen_range(n.saturating_sub(1)..=n * n.saturating_sub(1) / 2);
    gen_random_connected(&RandomSpec {
        n,
        density: Density::Edges(m),
        weights: WeightRange::default(),
        seed: rng.gen(),
    })
}

/// Compares every `C_w(e)` against the maximum over enumerated cycles.
pub fn cross_check_oracle(
    g: &WeightedGraph,
    report: &InequalityReport,
    config: &SearchConfig,
) -> crate::error::Result<usize> {
    let mut best: Vec<Option<Rational>> = vec![None; g.m()];
    for cycle in enumerate_cycles(g, config.enumeration_cap)? {
        for id in cycle.edges(g) {
            if best[id].as_ref().is_none_or(|b| cycle.weight() > b) {
                best[id] = Some(cycle.weight().clone());
            }
        }
    }
    let mut compared = 0;
    for p in &report.profiles {
        let agrees = match &best[p.edge] {
            None => p.is_bridge,
            Some(max) => {
                compared += 1;
                !p.is_bridge
                    && p.c_w == *max
                    && p.witness
                        .as_ref()
                        .is_some_and(|w| w.revalidate(g) && w.contains_edge(g, p.edge))
            }
        };
        if !agrees {
            return Err(Error::Discrepancy {
                detail: format!(
                    "edge {}-{}: search {} vs oracle {:?}",
                    p.u, p.v, p.c_w, best[p.edge]
                ),
                instance: serialize_graph(g),
            });
        }
    }
    Ok(compared)
}

/// Runs every per-instance check. `seed` drives the random thresholds.
pub fn check_instance(
    g: &WeightedGraph,
    seed: u64,
    config: &FuzzConfig,
) -> crate::error::Result<InstanceOutcome> {
    let search = CycleSearch::new(g, config.search);
    let report = report_from_profiles(g, search.bridges(), search.profiles()?)?;
    let mut checks = 1;
    let phi = report.phi();

    cycle_phi_bound_from(g, &phi, &config.search)?;
    light_edge_forest_from(g, &report.profiles)?;
    checks += 2;

    let mut rng = rng_from_seed(seed ^ 0x7468_7265_7368);
    let mut thresholds = 0;
    if g.m() > 0 {
        for _ in 0..config.thresholds_per_instance {
            let p = &report.profiles[rng.gen_range(0..g.m())];
            let t = &p.c_w * Rational::new(rng.gen_range(1..=6), 4);
            threshold_mass_from(g, &report.profiles, &t)?;
            thresholds += 1;
        }
    }
    checks += thresholds;

    let mut bondy_fan_components = 0;
    let mut erdos_gallai_components = 0;
    for comp in report.per_component.iter().filter(|c| !c.edges.is_empty()) {
        let (sub, origin) = g.induced_subgraph(&comp.vertices);
        let sub_phi: Vec<Rational> = origin.iter().map(|&id| phi[id].clone()).collect();
        verify_bondy_fan(&sub, &sub_phi, &config.search)?;
        verify_erdos_gallai(&sub, &config.search)?;
        bondy_fan_components += 1;
        erdos_gallai_components += 1;
    }
    checks += bondy_fan_components + erdos_gallai_components;

    let oracle_edges = if config.cross_check {
        checks += 1;
        cross_check_oracle(g, &report, &config.search)?
    } else {
        0
    };

    Ok(InstanceOutcome {
        n: g.n(),
        m: g.m(),
        equality: report.is_equality,
        gap: report.gap,
        checks,
        oracle_edges,
        bondy_fan_components,
        erdos_gallai_components,
        thresholds,
    })
}

pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzSummary, FuzzError> {
    if config.n_max > config.search.enumeration_cap {
        return Err(FuzzError::Config(Error::CapExceeded {
            what: "fuzzing",
            size: config.n_max,
            cap: config.search.enumeration_cap,
        }));
    }
    if config.n_min < 1 {
        return Err(FuzzError::Config(Error::Invalid(
            "n_min must be at least 1".into(),
        )));
    }
    let jobs: Vec<(usize, usize)> = (config.n_min..=config.n_max)
        .flat_map(|n| (0..config.trials).map(move |t| (n, t)))
        .collect();
    let run_one = |&(n, trial): &(usize, usize)| -> Result<InstanceOutcome, FuzzError> {
        let instance_seed = instance_seed(config.seed, n, trial);
        let fail = |g: Option<&WeightedGraph>, source: Error| {
            FuzzError::Failure(Box::new(FuzzFailure {
                n,
                trial,
                instance_seed,
                instance: source
                    .instance()
                    .map(str::to_string)
                    .or_else(|| g.map(serialize_graph))
                    .unwrap_or_default(),
                source,
            }))
        };
        let g = fuzz_instance(n, instance_seed).map_err(|e| fail(None, e))?;
        check_instance(&g, instance_seed, config).map_err(|e| fail(Some(&g), e))
    };
    let outcomes: Vec<Result<InstanceOutcome, FuzzError>> = if config.search.parallel {
        jobs.par_iter().map(run_one).collect()
    } else {
        jobs.iter().map(run_one).collect()
    };

    let mut summary = FuzzSummary::default();
    for outcome in outcomes {
        let o = outcome?;
        summary.instances += 1;
        summary.checks += o.checks;
        summary.oracle_edges += o.oracle_edges;
        summary.bondy_fan_components += o.bondy_fan_components;
        summary.erdos_gallai_components += o.erdos_gallai_components;
        summary.thresholds += o.thresholds;
        if o.equality {
            summary.equality_instances += 1;
        } else if summary.min_positive_gap.as_ref().is_none_or(|g| o.gap < *g) {
            summary.min_positive_gap = Some(o.gap.clone());
        }
        if summary.min_gap.as_ref().is_none_or(|g| o.gap < *g) {
            summary.min_gap = Some(o.gap);
        }
    }
    Ok(summary)
}
