//! The bound `sum_e w(e) / C_w(e) <= (n - 1) / 2`, its proof-step identities,
//! the classical heavy-cycle bounds it rests on, and its corollaries.
//!
//! Every check here either returns a report or, when a proven statement fails
//! on the instance, an [`Error::Counterexample`] carrying the instance.

use serde::Serialize;

use crate::config::SearchConfig;
use crate::cycles::{enumerate_cycles, CycleSearch, CycleWitness, LocalProfile};
use crate::decomposition::{two_edge_components_with, BridgeSet};
use crate::error::{counterexample, Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;

/// `phi` total of one component `H_i` of `G - B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPhi {
    pub vertices: Vec<VertexId>,
    /// Non-bridge edges inside the component.
    pub edges: Vec<EdgeId>,
    pub phi: Rational,
    /// `(n_i - 1) / 2`.
    pub bound: Rational,
}

/// Per connected component totals; only interesting for disconnected input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedPart {
    pub vertices: Vec<VertexId>,
    pub local_sum: Rational,
    pub bound: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub n: usize,
    pub connected: bool,
    /// `sum_e w(e) / C_w(e)`.
    pub local_sum: Rational,
    /// `(n - 1) / 2` for connected input, `sum_c (n_c - 1) / 2` otherwise.
    pub bound: Rational,
    pub gap: Rational,
    pub is_equality: bool,
    pub bridge_count: usize,
    pub profiles: Vec<LocalProfile>,
    pub per_component: Vec<ComponentPhi>,
    pub connected_parts: Vec<ConnectedPart>,
}

impl InequalityReport {
    pub fn phi(&self) -> Vec<Rational> {
        self.profiles.iter().map(|p| p.phi.clone()).collect()
    }

    pub fn c_w(&self) -> Vec<Rational> {
        self.profiles.iter().map(|p| p.c_w.clone()).collect()
    }
}

fn half(k: usize) -> Rational {
    Rational::new(k as i64, 2)
}

/// `phi(e) = w(e) / C_w(e)` for every edge; bridges map to 1/2.
pub fn phi_weighting(g: &WeightedGraph, config: &SearchConfig) -> Result<Vec<Rational>> {
    Ok(CycleSearch::new(g, *config)
        .profiles()?
        .into_iter()
        .map(|p| p.phi)
        .collect())
}

pub fn verify_main(g: &WeightedGraph, config: &SearchConfig) -> Result<InequalityReport> {
    let search = CycleSearch::new(g, *config);
    let profiles = search.profiles()?;
    report_from_profiles(g, search.bridges(), profiles)
}

/// Assembles and checks the report from precomputed profiles.
pub fn report_from_profiles(
    g: &WeightedGraph,
    bridges: &BridgeSet,
    profiles: Vec<LocalProfile>,
) -> Result<InequalityReport> {
    let n = g.n();
    let local_sum: Rational = profiles.iter().map(|p| &p.phi).sum();

    for p in &profiles {
        let ok = if p.is_bridge {
            p.phi == Rational::new(1, 2)
        } else {
            p.phi.is_positive() && p.phi < 1
        };
        if !ok {
            return Err(counterexample(
                "phi range",
                format!("edge {}-{} has phi {}", p.u, p.v, p.phi),
                g,
            ));
        }
    }

    let decomposition = two_edge_components_with(g, bridges);
    let mut per_component: Vec<ComponentPhi> = decomposition
        .components
        .iter()
        .map(|vertices| ComponentPhi {
            vertices: vertices.clone(),
            edges: Vec::new(),
            phi: Rational::zero(),
            bound: half(vertices.len() - 1),
        })
        .collect();
    for p in profiles.iter().filter(|p| !p.is_bridge) {
        let c = &mut per_component[decomposition.component_of[p.u]];
        c.edges.push(p.edge);
        c.phi += &p.phi;
    }
    for c in &per_component {
        if c.phi > c.bound {
            return Err(counterexample(
                "component bound phi(H) <= (|H| - 1)/2",
                format!("component {:?} has phi {} > {}", c.vertices, c.phi, c.bound),
                g,
            ));
        }
    }

    let parts = g.connected_components();
    let mut part_of = vec![0usize; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    let mut connected_parts: Vec<ConnectedPart> = parts
        .iter()
        .map(|vertices| ConnectedPart {
            vertices: vertices.clone(),
            local_sum: Rational::zero(),
            bound: half(vertices.len() - 1),
        })
        .collect();
    for p in &profiles {
        connected_parts[part_of[p.u]].local_sum += &p.phi;
    }

    // Removing the bridges splits each connected part once per bridge.
    let k = decomposition.components.len();
    let n_minus_parts: usize = decomposition
        .components
        .iter()
        .map(|c| c.len() - 1)
        .sum::<usize>()
        + bridges.len();
    let phi_assembled: Rational =
        per_component.iter().map(|c| &c.phi).sum::<Rational>() + half(bridges.len());
    if k != bridges.len() + parts.len()
        || n_minus_parts != n - parts.len()
        || phi_assembled != local_sum
    {
        return Err(counterexample(
            "bridge/component accounting",
            format!("k = {k}, |B| = {}, parts = {}", bridges.len(), parts.len()),
            g,
        ));
    }

    let bound = half(n - parts.len());
    let gap = &bound - &local_sum;
    for part in &connected_parts {
        if part.local_sum > part.bound {
            return Err(counterexample(
                "sum w(e)/C_w(e) <= (n-1)/2",
                format!(
                    "local sum {} exceeds {} on {:?}",
                    part.local_sum, part.bound, part.vertices
                ),
                g,
            ));
        }
    }
    Ok(InequalityReport {
        n,
        connected: parts.len() <= 1,
        is_equality: gap.is_zero(),
        local_sum,
        bound,
        gap,
        bridge_count: bridges.len(),
        profiles,
        per_component,
        connected_parts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclePhiCheck {
    pub cycles: usize,
    /// Largest `phi(C)` over all cycles, `None` for a forest.
    pub max_phi: Option<Rational>,
    /// Cycles with `phi(C) = 1`.
    pub tight_cycles: usize,
    pub holds: bool,
}

/// Brute force over every cycle: `phi(C) <= 1`.
pub fn verify_cycle_phi_bound(g: &WeightedGraph, config: &SearchConfig) -> Result<CyclePhiCheck> {
    let phi = phi_weighting(g, config)?;
    cycle_phi_bound_from(g, &phi, config)
}

pub fn cycle_phi_bound_from(
    g: &WeightedGraph,
    phi: &[Rational],
    config: &SearchConfig,
) -> Result<CyclePhiCheck> {
    let mut check = CyclePhiCheck {
        cycles: 0,
        max_phi: None,
        tight_cycles: 0,
        holds: true,
    };
    for cycle in enumerate_cycles(g, config.enumeration_cap)? {
        let value = cycle.weight_under(g, phi);
        check.cycles += 1;
        if value == 1 {
            check.tight_cycles += 1;
        }
        if value > 1 {
            return Err(counterexample(
                "phi(C) <= 1 for every cycle",
                format!("cycle {:?} has phi {value}", cycle.vertices()),
                g,
            ));
        }
        if check.max_phi.as_ref().is_none_or(|m| value > *m) {
            check.max_phi = Some(value);
        }
    }
    Ok(check)
}

fn require_two_edge_connected(g: &WeightedGraph, what: &str) -> Result<()> {
    let bridges = crate::decomposition::find_bridges(g);
    if !g.is_connected() || !bridges.is_empty() || g.m() == 0 {
        return Err(Error::invalid(format!(
            "{what} needs a 2-edge-connected graph with at least one edge"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondyFanCheck {
    pub total: Rational,
    /// `2 * total / (n - 1)`.
    pub threshold: Rational,
    /// Heaviest cycle under the weighting; its weight is measured in it.
    pub witness: CycleWitness,
    pub holds: bool,
}

/// A 2-edge-connected graph has a cycle of weight at least
/// `2 * total / (n - 1)` under any positive weighting.
pub fn verify_bondy_fan(
    g: &WeightedGraph,
    weighting: &[Rational],
    config: &SearchConfig,
) -> Result<BondyFanCheck> {
    require_two_edge_connected(g, "heavy-cycle bound")?;
    if weighting.len() != g.m() {
        return Err(Error::invalid("weighting must cover every edge"));
    }
    let weighted = g.with_weights(weighting.to_vec())?;
    let total = weighted.total_weight();
    let threshold = Rational::from_integer(2) * &total / Rational::from(g.n() - 1);
    let witness = CycleSearch::new(&weighted, *config)
        .heaviest()?
        .expect("a bridgeless graph with an edge has a cycle");
    if *witness.weight() < threshold {
        return Err(counterexample(
            "heavy cycle of weight >= 2 w(G)/(n-1)",
            format!("heaviest cycle {} < {threshold}", witness.weight()),
            &weighted,
        ));
    }
    Ok(BondyFanCheck {
        total,
        threshold,
        witness,
        holds: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErdosGallaiCheck {
    pub n: usize,
    pub m: usize,
    /// `2m / (n - 1)`.
    pub threshold: Rational,
    pub longest: usize,
    pub witness: CycleWitness,
    pub holds: bool,
}

/// A 2-edge-connected graph has a cycle of length at least `2m / (n - 1)`.
pub fn verify_erdos_gallai(g: &WeightedGraph, config: &SearchConfig) -> Result<ErdosGallaiCheck> {
    require_two_edge_connected(g, "long-cycle bound")?;
    let unit = g.unit_weighted();
    let witness = CycleSearch::new(&unit, *config)
        .heaviest()?
        .expect("a bridgeless graph with an edge has a cycle");
    let threshold = Rational::from(2 * g.m()) / Rational::from(g.n() - 1);
    let longest = witness.len();
    if Rational::from(longest) < threshold {
        return Err(counterexample(
            "cycle of length >= 2m/(n-1)",
            format!("longest cycle {longest} < {threshold}"),
            g,
        ));
    }
    Ok(ErdosGallaiCheck {
        n: g.n(),
        m: g.m(),
        threshold,
        longest,
        witness,
        holds: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub t: Rational,
    /// `sum of w(e)` over edges with `C_w(e) <= T`.
    pub light_mass: Rational,
    /// `T (n - 1) / 2`.
    pub bound: Rational,
    /// `sum of w(e)` over edges with `C_w(e) > T`.
    pub heavy_mass: Rational,
    /// `w(G) - T (n - 1) / 2`.
    pub complement_bound: Rational,
    pub holds: bool,
}

fn require_connected(g: &WeightedGraph, what: &str) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::invalid(format!("{what} needs a connected graph")));
    }
    Ok(())
}

pub fn threshold_mass(
    g: &WeightedGraph,
    t: &Rational,
    config: &SearchConfig,
) -> Result<ThresholdReport> {
    require_connected(g, "threshold mass")?;
    if !t.is_positive() {
        return Err(Error::invalid(format!(
            "threshold must be positive, got {t}"
        )));
    }
    let profiles = CycleSearch::new(g, *config).profiles()?;
    threshold_mass_from(g, &profiles, t)
}

pub fn threshold_mass_from(
    g: &WeightedGraph,
    profiles: &[LocalProfile],
    t: &Rational,
) -> Result<ThresholdReport> {
    if !t.is_positive() {
        return Err(Error::invalid(format!(
            "threshold must be positive, got {t}"
        )));
    }
    let mut light_mass = Rational::zero();
    let mut heavy_mass = Rational::zero();
    for p in profiles {
        if p.c_w <= *t {
            light_mass += &p.weight;
        } else {
            heavy_mass += &p.weight;
        }
    }
    let bound = t * &half(g.n().saturating_sub(1));
    let complement_bound = g.total_weight() - &bound;
    if light_mass > bound || heavy_mass < complement_bound {
        return Err(counterexample(
            "threshold mass <= T(n-1)/2",
            format!("T = {t}: light mass {light_mass} vs {bound}, heavy mass {heavy_mass} vs {complement_bound}"),
            g,
        ));
    }
    Ok(ThresholdReport {
        t: t.clone(),
        light_mass,
        bound,
        heavy_mass,
        complement_bound,
        holds: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LightEdgeForest {
    /// `F = { e : C_w(e) < 2 w(e) }`.
    pub edges: Vec<EdgeId>,
    pub acyclic: bool,
    /// `|F| <= n - 1`.
    pub within_bound: bool,
}

pub fn light_edge_forest(g: &WeightedGraph, config: &SearchConfig) -> Result<LightEdgeForest> {
    require_connected(g, "light-edge forest")?;
    let profiles = CycleSearch::new(g, *config).profiles()?;
    light_edge_forest_from(g, &profiles)
}

pub fn light_edge_forest_from(
    g: &WeightedGraph,
    profiles: &[LocalProfile],
) -> Result<LightEdgeForest> {
    let two = Rational::from_integer(2);
    let edges: Vec<EdgeId> = profiles
        .iter()
        .filter(|p| p.c_w < &two * &p.weight)
        .map(|p| p.edge)
        .collect();
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut acyclic = true;
    for &id in &edges {
        let e = g.edge(id);
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a == b {
            acyclic = false;
            break;
        }
        parent[a] = b;
    }
    let within_bound = edges.len() < g.n().max(1);
    if !acyclic || !within_bound {
        return Err(counterexample(
            "{e : C_w(e) < 2w(e)} is acyclic",
            format!("light edges {edges:?}"),
            g,
        ));
    }
    Ok(LightEdgeForest {
        edges,
        acyclic,
        within_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnweightedChain {
    /// `m / L`, with `L` the longest cycle length.
    pub global_ratio: Rational,
    /// `sum_e 1 / c(e)`.
    pub local_sum: Rational,
    pub bound: Rational,
    pub holds: bool,
}

/// With unit weights on a bridgeless graph: `m / L <= sum_e 1/c(e) <= (n-1)/2`.
pub fn verify_unweighted_chain(
    g: &WeightedGraph,
    config: &SearchConfig,
) -> Result<UnweightedChain> {
    require_two_edge_connected(g, "unweighted chain")?;
    let unit = g.unit_weighted();
    let search = CycleSearch::new(&unit, *config);
    let longest = search
        .heaviest()?
        .expect("bridgeless graph has a cycle")
        .len();
    let report = report_from_profiles(&unit, search.bridges(), search.profiles()?)?;
    let global_ratio = Rational::from(g.m()) / Rational::from(longest);
    if global_ratio > report.local_sum {
        return Err(counterexample(
            "m/L <= sum 1/c(e)",
            format!("{global_ratio} > {}", report.local_sum),
            g,
        ));
    }
    Ok(UnweightedChain {
        global_ratio,
        local_sum: report.local_sum,
        bound: report.bound,
        holds: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_induced_clique;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, Rational::one()))).unwrap()
    }

    fn cycle(n: usize) -> WeightedGraph {
        unit(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn c4_heavy() -> WeightedGraph {
        let w = [1, 1, 1, 10];
        WeightedGraph::new(
            4,
            (0..4).map(|i| (i, (i + 1) % 4, Rational::from_integer(w[i]))),
        )
        .unwrap()
    }

    fn k(r: usize) -> WeightedGraph {
        WeightedGraph::complete(r, |_, _| Rational::one()).unwrap()
    }

    #[test]
    fn phi_examples() {
        let path = unit(3, &[(0, 1), (1, 2)]);
        assert!(phi_weighting(&path, &cfg())
            .unwrap()
            .iter()
            .all(|p| *p == Rational::new(1, 2)));
        assert!(phi_weighting(&k(3), &cfg())
            .unwrap()
            .iter()
            .all(|p| *p == Rational::new(1, 3)));
        let g = c4_heavy();
        let phi = phi_weighting(&g, &cfg()).unwrap();
        let heavy = g.edge_between(0, 3).unwrap();
        for (e, p) in phi.iter().enumerate() {
            let expected = if e == heavy {
                Rational::new(10, 13)
            } else {
                Rational::new(1, 13)
            };
            assert_eq!(*p, expected);
        }
    }

    #[test]
    fn main_examples() {
        let tree = unit(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let r = verify_main(&tree, &cfg()).unwrap();
        assert_eq!(r.local_sum, 2);
        assert!(r.is_equality);

        let r = verify_main(&k(4), &cfg()).unwrap();
        assert_eq!(r.local_sum, Rational::new(3, 2));
        assert!(r.is_equality);

        let r = verify_main(&cycle(5), &cfg()).unwrap();
        assert_eq!(r.local_sum, 1);
        assert_eq!(r.gap, 1);
        assert!(!r.is_equality);

        let a: Vec<Rational> = (1..=4).map(Rational::from_integer).collect();
        let r = verify_main(&gen_induced_clique(4, &a).unwrap(), &cfg()).unwrap();
        assert_eq!(r.local_sum, Rational::new(3, 2));
        assert!(r.is_equality);
    }

    #[test]
    fn disconnected_inputs_report_per_part() {
        let g = unit(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
        let r = verify_main(&g, &cfg()).unwrap();
        assert!(!r.connected);
        assert_eq!(r.connected_parts.len(), 3);
        assert_eq!(r.bound, Rational::new(3, 2));
        assert_eq!(r.local_sum, Rational::new(3, 2));
        assert!(r.is_equality);
    }

    #[test]
    fn cycle_phi_examples() {
        let c = verify_cycle_phi_bound(&k(3), &cfg()).unwrap();
        assert_eq!(c.max_phi, Some(Rational::one()));
        let c = verify_cycle_phi_bound(&k(4), &cfg()).unwrap();
        assert_eq!(c.cycles, 7);
        assert_eq!(c.tight_cycles, 3);
        let triangle_phi = Rational::new(3, 4);
        let phi = phi_weighting(&k(4), &cfg()).unwrap();
        let tri = CycleWitness::new(&k(4), vec![0, 1, 2]).unwrap();
        assert_eq!(tri.weight_under(&k(4), &phi), triangle_phi);
        let c = verify_cycle_phi_bound(&c4_heavy(), &cfg()).unwrap();
        assert_eq!(c.max_phi, Some(Rational::one()));
    }

    #[test]
    fn bondy_fan_examples() {
        let c5 = cycle(5);
        let ones = vec![Rational::one(); 5];
        let b = verify_bondy_fan(&c5, &ones, &cfg()).unwrap();
        assert_eq!(b.threshold, Rational::new(5, 2));
        assert_eq!(b.witness.weight(), &Rational::from_integer(5));

        let quarter = vec![Rational::new(1, 4); 6];
        let b = verify_bondy_fan(&k(4), &quarter, &cfg()).unwrap();
        assert_eq!(b.threshold, Rational::one());
        assert_eq!(b.witness.weight(), &Rational::one());

        // Theta graph: poles 0 and 1, three internal vertices 2, 3, 4.
        let theta = unit(5, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]);
        let b = verify_bondy_fan(&theta, &vec![Rational::one(); 6], &cfg()).unwrap();
        assert_eq!(b.witness.weight(), &Rational::from_integer(4));
        assert_eq!(b.threshold, Rational::new(12, 4));

        let path = unit(3, &[(0, 1), (1, 2)]);
        assert!(verify_bondy_fan(&path, &vec![Rational::one(); 2], &cfg()).is_err());
    }

    #[test]
    fn erdos_gallai_examples() {
        for n in 3..8 {
            let e = verify_erdos_gallai(&cycle(n), &cfg()).unwrap();
            assert_eq!(e.longest, n);
        }
        let e = verify_erdos_gallai(&k(4), &cfg()).unwrap();
        assert_eq!(
            (e.longest, e.threshold.clone()),
            (4, Rational::from_integer(4))
        );
        let e = verify_erdos_gallai(&k(5), &cfg()).unwrap();
        assert_eq!((e.longest, e.threshold), (5, Rational::from_integer(5)));
    }

    #[test]
    fn threshold_examples() {
        let g = k(4);
        let t = threshold_mass(&g, &Rational::from_integer(4), &cfg()).unwrap();
        assert_eq!(
            (t.light_mass.clone(), t.bound.clone()),
            (Rational::from_integer(6), Rational::from_integer(6))
        );
        let t = threshold_mass(&g, &Rational::from_integer(3), &cfg()).unwrap();
        assert_eq!(t.light_mass, 0);
        assert_eq!(t.bound, Rational::new(9, 2));
        assert_eq!(t.heavy_mass, 6);

        let tree = WeightedGraph::new(
            3,
            [
                (0, 1, Rational::new(1, 2)),
                (1, 2, Rational::from_integer(2)),
            ],
        )
        .unwrap();
        let t = threshold_mass(&tree, &Rational::one(), &cfg()).unwrap();
        assert_eq!(t.light_mass, Rational::new(1, 2));

        assert!(threshold_mass(&g, &Rational::zero(), &cfg()).is_err());
    }

    #[test]
    fn light_edge_examples() {
        assert!(light_edge_forest(&k(5), &cfg()).unwrap().edges.is_empty());
        let g = c4_heavy();
        let f = light_edge_forest(&g, &cfg()).unwrap();
        assert_eq!(f.edges, vec![g.edge_between(0, 3).unwrap()]);
        let tree = unit(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(light_edge_forest(&tree, &cfg()).unwrap().edges.is_empty());
    }

    #[test]
    fn unweighted_chain() {
        let c = verify_unweighted_chain(&k(5), &cfg()).unwrap();
        assert_eq!(c.global_ratio, 2);
        assert_eq!(c.local_sum, 2);
        let c = verify_unweighted_chain(&cycle(5), &cfg()).unwrap();
        assert_eq!(c.global_ratio, 1);
    }
}
