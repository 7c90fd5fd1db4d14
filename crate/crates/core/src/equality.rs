//! Certificates for instances that attain the bound: vertex-induced weight
//! recovery, the complete-graph characterization, block-graph sufficiency
//! and the necessary conditions on bridgeless components.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::config::SearchConfig;
use crate::cycles::{hamilton_catalog, pair_index, CycleSearch, CycleWitness};
use crate::decomposition::block_decomposition;
use crate::error::{counterexample, Error, Result};
use crate::generators::gen_induced_clique;
use crate::graph::{VertexId, WeightedGraph};
use crate::inequality::{verify_main, InequalityReport};
use crate::rational::Rational;

/// Edge weights of `K_r`, indexed by [`pair_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWeights {
    r: usize,
    weights: Vec<Rational>,
}

impl CliqueWeights {
    pub fn new(r: usize, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != r * r.saturating_sub(1) / 2 {
            return Err(Error::invalid(format!(
                "K_{r} has {} edges, got {} weights",
                r * r.saturating_sub(1) / 2,
                weights.len()
            )));
        }
        Ok(CliqueWeights { r, weights })
    }

    pub fn from_map(r: usize, map: &BTreeMap<(VertexId, VertexId), Rational>) -> Result<Self> {
        let mut weights = Vec::with_capacity(r * r.saturating_sub(1) / 2);
        for u in 0..r {
            for v in u + 1..r {
                let w = map
                    .get(&(u, v))
                    .or_else(|| map.get(&(v, u)))
                    .ok_or_else(|| {
                        Error::invalid(format!("missing weight for clique edge {u}-{v}"))
                    })?;
                weights.push(w.clone());
            }
        }
        Ok(CliqueWeights { r, weights })
    }

    /// Weights of a complete graph, in its (already lexicographic) edge order.
    pub fn from_graph(g: &WeightedGraph) -> Result<Self> {
        if !g.is_complete() {
            return Err(Error::invalid("graph is not complete"));
        }
        Ok(CliqueWeights {
            r: g.n(),
            weights: g.edges().iter().map(|e| e.weight.clone()).collect(),
        })
    }

    /// Weights of the clique induced by `vertices` (sorted ascending).
    fn from_subclique(g: &WeightedGraph, vertices: &[VertexId]) -> Result<Self> {
        let mut weights = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                let id = g
                    .edge_between(u, v)
                    .ok_or_else(|| Error::invalid(format!("block is missing edge {u}-{v}")))?;
                weights.push(g.weight(id).clone());
            }
        }
        CliqueWeights::new(vertices.len(), weights)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> &Rational {
        &self.weights[pair_index(self.r, u, v)]
    }

    fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.r);
        for u in 0..self.r {
            for v in u + 1..self.r {
                let _ = writeln!(out, "e {u} {v} {}", self.get(u, v));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedSolution {
    pub a: Vec<Rational>,
    /// Vertex-induced in the strict sense requires every `a(v) >= 0`.
    pub all_nonnegative: bool,
}

/// Recovers `a` with `w(uv) = (a(u) + a(v)) / 2` on every edge of `K_r`, or
/// `None` when no such `a` exists.
///
/// With `x = 0`, `y = 1`, `z = 2`: `a(t) = w(tx) + w(ty) - w(xy)` for the
/// other vertices, `a(x) = w(xy) + w(xz) - w(yz)` and symmetrically for `y`.
/// For `r = 3` this is the unique solution of the 3x3 system; for larger `r`
/// every edge is re-checked.
pub fn solve_vertex_induced(w: &CliqueWeights) -> Result<Option<InducedSolution>> {
    let r = w.r();
    if r < 3 {
        return Err(Error::invalid(format!(
            "vertex-induced recovery needs r >= 3, got {r}"
        )));
    }
    let (x, y, z) = (0, 1, 2);
    let mut a = Vec::with_capacity(r);
    for t in 0..r {
        let value = match t {
            _ if t == x => w.get(x, y) + w.get(x, z) - w.get(y, z),
            _ if t == y => w.get(x, y) + w.get(y, z) - w.get(x, z),
            _ => w.get(t, x) + w.get(t, y) - w.get(x, y),
        };
        a.push(value);
    }
    let half = Rational::new(1, 2);
    for u in 0..r {
        for v in u + 1..r {
            if (&a[u] + &a[v]) * &half != *w.get(u, v) {
                return Ok(None);
            }
        }
    }
    let all_nonnegative = a.iter().all(|x| !x.is_negative());
    Ok(Some(InducedSolution { a, all_nonnegative }))
}

/// Builds `K_r` induced from `a` and checks that every `C_w(e)` equals
/// `sum(a)` and that the local sum is exactly `(r - 1) / 2`.
pub fn verify_induced_clique_equality(
    r: usize,
    a: &[Rational],
    config: &SearchConfig,
) -> Result<InequalityReport> {
    if r < 4 {
        return Err(Error::invalid(format!(
            "induced clique check needs r >= 4, got {r}"
        )));
    }
    if a.iter().all(Rational::is_zero) {
        return Err(Error::invalid("vertex values must not all be zero"));
    }
    let g = gen_induced_clique(r, a)?;
    let report = verify_main(&g, config)?;
    let total: Rational = a.iter().sum();
    if let Some(p) = report.profiles.iter().find(|p| p.c_w != total) {
        return Err(counterexample(
            "C_w(e) = sum a(v) on induced cliques",
            format!("edge {}-{} has C_w {} != {total}", p.u, p.v, p.c_w),
            &g,
        ));
    }
    if report.local_sum != Rational::new(r as i64 - 1, 2) {
        return Err(counterexample(
            "induced cliques attain equality",
            format!("local sum {}", report.local_sum),
            &g,
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityStatus {
    Equality,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateRoute {
    /// Block graph whose cliques of order at least 4 are vertex-induced.
    BlockGraphInduced,
    /// Equality on an instance outside the block-graph family.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCertificate {
    pub vertices: Vec<VertexId>,
    /// `None` for triangles and bridges, which are unconstrained.
    pub a: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentConditions {
    pub vertices: Vec<VertexId>,
    pub phi_total: Rational,
    pub bound: Rational,
    /// `phi(H) = (|H| - 1) / 2`.
    pub phi_subtotal_equals_bound: bool,
    /// Largest `phi(C)` over cycles inside the component.
    pub max_cycle_phi: Rational,
    /// A cycle with `phi(C) = 1`, when one exists.
    pub tight_cycle: Option<CycleWitness>,
    /// `C_w(e) = w(C)` for every edge of the tight cycle.
    pub termwise_tight: bool,
}

impl ComponentConditions {
    pub fn all_hold(&self) -> bool {
        self.phi_subtotal_equals_bound && self.tight_cycle.is_some() && self.termwise_tight
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecessaryConditionsReport {
    pub components: Vec<ComponentConditions>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityCertificate {
    pub status: EqualityStatus,
    /// `None` for strict instances.
    pub route: Option<CertificateRoute>,
    pub gap: Rational,
    pub per_block: Vec<BlockCertificate>,
    pub diagnostics: NecessaryConditionsReport,
}

/// Checks the three conditions every equality instance must meet, on each
/// component of `G - B` that has an edge.
pub fn necessary_conditions(
    g: &WeightedGraph,
    report: &InequalityReport,
    config: &SearchConfig,
) -> Result<NecessaryConditionsReport> {
    let phi = report.phi();
    let mut components = Vec::new();
    for comp in report.per_component.iter().filter(|c| !c.edges.is_empty()) {
        let (sub, origin) = g.induced_subgraph(&comp.vertices);
        let sub_phi: Vec<Rational> = origin.iter().map(|&id| phi[id].clone()).collect();
        let phi_graph = sub.with_weights(sub_phi)?;
        let best = CycleSearch::new(&phi_graph, *config)
            .heaviest()?
            .expect("a bridgeless component with an edge has a cycle");
        let max_cycle_phi = best.weight().clone();
        let tight_cycle = if max_cycle_phi == 1 {
            let mapped = best.vertices().iter().map(|&v| comp.vertices[v]).collect();
            Some(CycleWitness::new(g, mapped)?)
        } else {
            None
        };
        let termwise_tight = tight_cycle.as_ref().is_some_and(|c| {
            c.edges(g)
                .into_iter()
                .all(|id| report.profiles[id].c_w == *c.weight())
        });
        components.push(ComponentConditions {
            vertices: comp.vertices.clone(),
            phi_total: comp.phi.clone(),
            bound: comp.bound.clone(),
            phi_subtotal_equals_bound: comp.phi == comp.bound,
            max_cycle_phi,
            tight_cycle,
            termwise_tight,
        });
    }
    Ok(NecessaryConditionsReport { components })
}

pub fn certify_equality(g: &WeightedGraph, config: &SearchConfig) -> Result<EqualityCertificate> {
    let report = verify_main(g, config)?;
    certify_equality_from(g, &report, config)
}

pub fn certify_equality_from(
    g: &WeightedGraph,
    report: &InequalityReport,
    config: &SearchConfig,
) -> Result<EqualityCertificate> {
    let diagnostics = necessary_conditions(g, report, config)?;
    if !report.is_equality {
        return Ok(EqualityCertificate {
            status: EqualityStatus::Strict,
            route: None,
            gap: report.gap.clone(),
            per_block: Vec::new(),
            diagnostics,
        });
    }
    if let Some(c) = diagnostics.components.iter().find(|c| !c.all_hold()) {
        return Err(counterexample(
            "necessary conditions for equality",
            format!("component {:?} fails: {c:?}", c.vertices),
            g,
        ));
    }
    let blocks = block_decomposition(g);
    let is_block_graph = report.connected && blocks.blocks.iter().all(|b| b.is_clique());
    let mut per_block = Vec::new();
    let route = if is_block_graph {
        for block in &blocks.blocks {
            let a = if block.order() >= 4 {
                let weights = CliqueWeights::from_subclique(g, &block.vertices)?;
                match solve_vertex_induced(&weights)? {
                    Some(sol) if sol.all_nonnegative => Some(sol.a),
                    other => {
                        return Err(counterexample(
                            "equality forces vertex-induced clique blocks",
                            format!("block {:?}: {other:?}", block.vertices),
                            g,
                        ))
                    }
                }
            } else {
                None
            };
            per_block.push(BlockCertificate {
                vertices: block.vertices.clone(),
                a,
            });
        }
        CertificateRoute::BlockGraphInduced
    } else {
        CertificateRoute::Other
    };
    Ok(EqualityCertificate {
        status: EqualityStatus::Equality,
        route: Some(route),
        gap: report.gap.clone(),
        per_block,
        diagnostics,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrCharacterization {
    pub r: usize,
    pub equality: bool,
    pub solution: Option<InducedSolution>,
    /// The common `C_w(e)` when equality holds.
    pub common_c_w: Option<Rational>,
    /// `phi = w / W` recovered as an induced weighting when equality holds.
    pub phi_solution: Option<InducedSolution>,
    pub holds: bool,
}

/// On `K_r` (`4 <= r <= 7`): equality holds iff `w` is vertex-induced with
/// nonnegative `a`; on equality `C_w` is constant and `phi` is induced.
pub fn verify_k_r_characterization(
    g: &WeightedGraph,
    config: &SearchConfig,
) -> Result<KrCharacterization> {
    let r = g.n();
    if !g.is_complete() {
        return Err(Error::invalid(
            "characterization check needs a complete graph",
        ));
    }
    if !(4..=7).contains(&r) {
        return Err(Error::invalid(format!(
            "characterization check needs 4 <= r <= 7, got {r}"
        )));
    }
    let report = verify_main(g, config)?;
    let solution = solve_vertex_induced(&CliqueWeights::from_graph(g)?)?;
    let induced = solution.as_ref().is_some_and(|s| s.all_nonnegative);
    if report.is_equality != induced {
        return Err(counterexample(
            "equality on K_r iff w is vertex-induced",
            format!(
                "equality = {}, induced = {induced} ({solution:?})",
                report.is_equality
            ),
            g,
        ));
    }
    let mut common_c_w = None;
    let mut phi_solution = None;
    if report.is_equality {
        let first = report.profiles[0].c_w.clone();
        if report.profiles.iter().any(|p| p.c_w != first) {
            return Err(counterexample(
                "C_w is constant on equality cliques",
                "C_w varies",
                g,
            ));
        }
        let a_total: Rational = solution
            .as_ref()
            .map(|s| s.a.iter().sum())
            .unwrap_or_default();
        if a_total != first {
            return Err(counterexample(
                "C_w(e) = sum a(v) on equality cliques",
                format!("{first} != {a_total}"),
                g,
            ));
        }
        let phi = CliqueWeights::new(r, report.phi())?;
        phi_solution = solve_vertex_induced(&phi)?;
        if phi_solution.is_none() {
            return Err(counterexample(
                "phi is induced on equality cliques",
                "no solution",
                g,
            ));
        }
        common_c_w = Some(first);
    }
    Ok(KrCharacterization {
        r,
        equality: report.is_equality,
        solution,
        common_c_w,
        phi_solution,
        holds: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonWeightCheck {
    pub r: usize,
    pub hamilton_weights_equal: bool,
    pub common_weight: Option<Rational>,
    pub solution: Option<InducedSolution>,
    /// Vertex quadruples on which the exchange identity was checked.
    pub exchange_quadruples_checked: usize,
    pub holds: bool,
}

/// If all Hamilton cycles of `K_r` weigh the same under `weighting`, then the
/// weighting is induced (with possibly negative `a`) and, on every 4 vertices,
/// the three perfect matchings have equal weight.
pub fn verify_hamilton_equal_weight_implies_induced(
    weighting: &CliqueWeights,
) -> Result<HamiltonWeightCheck> {
    let r = weighting.r();
    if !(4..=7).contains(&r) {
        return Err(Error::invalid(format!(
            "Hamilton lemma check needs 4 <= r <= 7, got {r}"
        )));
    }
    let catalog = hamilton_catalog(r)?;
    let cycle_weight =
        |c: &[VertexId]| -> Rational { (0..r).map(|k| weighting.get(c[k], c[(k + 1) % r])).sum() };
    let first = cycle_weight(&catalog.cycles[0]);
    let equal = catalog.cycles.iter().all(|c| cycle_weight(c) == first);
    let solution = solve_vertex_induced(weighting)?;
    let fail = |detail: String| Error::Counterexample {
        claim: "equal Hamilton weights imply an induced weighting",
        detail,
        instance: weighting.to_text(),
    };
    let mut checked = 0;
    if equal {
        if solution.is_none() {
            return Err(fail("no induced solution".into()));
        }
        for a in 0..r {
            for b in a + 1..r {
                for c in b + 1..r {
                    for d in c + 1..r {
                        let m1 = weighting.get(a, b) + weighting.get(c, d);
                        let m2 = weighting.get(a, c) + weighting.get(b, d);
                        let m3 = weighting.get(a, d) + weighting.get(b, c);
                        if m1 != m2 || m2 != m3 {
                            return Err(fail(format!(
                                "exchange identity fails on {a},{b},{c},{d}"
                            )));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(HamiltonWeightCheck {
        r,
        hamilton_weights_equal: equal,
        common_weight: equal.then_some(first),
        solution,
        exchange_quadruples_checked: checked,
        holds: true,
    })
}
