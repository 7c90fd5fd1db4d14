//! Stable JSON views of reports. Rationals are strings `"p/q"` (or `"p"`).

use serde::Serialize;

use crate::equality::{CertificateRoute, EqualityCertificate, EqualityStatus};
use crate::graph::VertexId;
use crate::inequality::InequalityReport;
use crate::rational::Rational;

/// Gaps below this are reported as numerically tight in float mode.
pub const FLOAT_TIGHT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberMode {
    #[default]
    Exact,
    /// Values rendered as floats. Never claims equality.
    Float,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Number {
    Exact(Rational),
    Float(f64),
}

impl Number {
    pub fn new(value: &Rational, mode: NumberMode) -> Self {
        match mode {
            NumberMode::Exact => Number::Exact(value.clone()),
            NumberMode::Float => Number::Float(value.to_f64()),
        }
    }
}

impl std::fmt::Display for Number {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Number::Exact(r) => write!(f, "{r}"),
            Number::Float(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EdgeView {
    pub u: VertexId,
    pub v: VertexId,
    pub w: Number,
    pub c_w: Number,
    pub phi: Number,
    pub bridge: bool,
    pub witness: Option<Vec<VertexId>>,
}

#[derive(Debug, Serialize)]
pub struct ComponentView {
    pub vertices: Vec<VertexId>,
    pub phi: Number,
    pub bound: Number,
}

#[derive(Debug, Serialize)]
pub struct ReportView {
    pub mode: NumberMode,
    pub n: usize,
    pub connected: bool,
    pub local_sum: Number,
    pub bound: Number,
    pub gap: Number,
    /// Exact mode only; always `false` in float mode.
    pub equality: bool,
    /// Float mode only: `|gap| < 1e-9`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerically_tight: Option<bool>,
    pub edges: Vec<EdgeView>,
    pub components: Vec<ComponentView>,
}

impl ReportView {
    pub fn new(report: &InequalityReport, mode: NumberMode) -> Self {
        let num = |r: &Rational| Number::new(r, mode);
        let (equality, numerically_tight) = match mode {
            NumberMode::Exact => (report.is_equality, None),
            NumberMode::Float => (
                false,
                Some(report.gap.to_f64().abs() < FLOAT_TIGHT_TOLERANCE),
            ),
        };
        ReportView {
            mode,
            n: report.n,
            connected: report.connected,
            local_sum: num(&report.local_sum),
            bound: num(&report.bound),
            gap: num(&report.gap),
            equality,
            numerically_tight,
            edges: report
                .profiles
                .iter()
                .map(|p| EdgeView {
                    u: p.u,
                    v: p.v,
                    w: num(&p.weight),
                    c_w: num(&p.c_w),
                    phi: num(&p.phi),
                    bridge: p.is_bridge,
                    witness: p.witness.as_ref().map(|c| c.vertices().to_vec()),
                })
                .collect(),
            components: report
                .per_component
                .iter()
                .map(|c| ComponentView {
                    vertices: c.vertices.clone(),
                    phi: num(&c.phi),
                    bound: num(&c.bound),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BlockView {
    pub vertices: Vec<VertexId>,
    pub a: Option<Vec<Rational>>,
}

#[derive(Debug, Serialize)]
pub struct ConditionView {
    pub vertices: Vec<VertexId>,
    pub phi_equals_bound: bool,
    pub max_cycle_phi: Rational,
    pub tight_cycle: Option<Vec<VertexId>>,
    pub termwise_tight: bool,
}

#[derive(Debug, Serialize)]
pub struct CertificateView {
    pub status: EqualityStatus,
    pub route: Option<CertificateRoute>,
    pub gap: Rational,
    pub blocks: Vec<BlockView>,
    pub necessary_conditions: Vec<ConditionView>,
}

impl From<&EqualityCertificate> for CertificateView {
    fn from(cert: &EqualityCertificate) -> Self {
        CertificateView {
            status: cert.status,
            route: cert.route,
            gap: cert.gap.clone(),
            blocks: cert
                .per_block
                .iter()
                .map(|b| BlockView {
                    vertices: b.vertices.clone(),
                    a: b.a.clone(),
                })
                .collect(),
            necessary_conditions: cert
                .diagnostics
                .components
                .iter()
                .map(|c| ConditionView {
                    vertices: c.vertices.clone(),
                    phi_equals_bound: c.phi_subtotal_equals_bound,
                    max_cycle_phi: c.max_cycle_phi.clone(),
                    tight_cycle: c.tight_cycle.as_ref().map(|t| t.vertices().to_vec()),
                    termwise_tight: c.termwise_tight,
                })
                .collect(),
        }
    }
}

pub fn report_json(report: &InequalityReport, mode: NumberMode) -> String {
    serde_json::to_string_pretty(&ReportView::new(report, mode)).expect("report views serialize")
}

pub fn certificate_json(cert: &EqualityCertificate) -> String {
    serde_json::to_string_pretty(&CertificateView::from(cert)).expect("certificate views serialize")
}
