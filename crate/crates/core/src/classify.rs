//! Which connected graphs have packed (equivalently Simis) cover ideals
//! `J_t(G)`, and a harness comparing that prediction with computation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::MonomialIdeal;
use crate::duality::{self, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::graph::{Graph, Shape};
use crate::packing;
use crate::tconn::TConnInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoReason {
    NotPathOrCycle,
    CycleExcluded,
    NotBipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    NEqualsT,
    Path,
    CycleSpecial { t: usize, n: usize },
    /// `t = 2`: edge ideals, decided by bipartiteness.
    Bipartite,
    No(NoReason),
}

impl Case {
    pub fn tag(&self) -> &'static str {
        match self {
            Case::NEqualsT => "n_equals_t",
            Case::Path => "path",
            Case::CycleSpecial { .. } => "cycle_special",
            Case::Bipartite => "bipartite",
            Case::No(NoReason::NotPathOrCycle) => "not_path_or_cycle",
            Case::No(NoReason::CycleExcluded) => "cycle_excluded",
            Case::No(NoReason::NotBipartite) => "not_bipartite",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: bool,
    pub case: Case,
}

fn special_cycle(n: usize, t: usize) -> bool {
    match t {
        3 => matches!(n, 3 | 6 | 9),
        4 => matches!(n, 4 | 8),
        _ => n == t,
    }
}

/// Predicted packing (and Simis) verdict for `J_t(G)`.
pub fn theorem_classification(graph: &Graph, t: usize) -> Result<Classification> {
    let n = graph.n();
    if t < 2 || t > n {
        return Err(Error::InvalidArgument(format!("need 2 <= t <= n, got t = {t}, n = {n}")));
    }
    let shape = graph.classify_shape()?;
    let case = if t == 2 {
        if graph.is_bipartite() { Case::Bipartite } else { Case::No(NoReason::NotBipartite) }
    } else if n == t {
        Case::NEqualsT
    } else {
        match shape {
            Shape::Path(_) => Case::Path,
            Shape::Cycle(_) if special_cycle(n, t) => Case::CycleSpecial { t, n },
            Shape::Cycle(_) => Case::No(NoReason::CycleExcluded),
            Shape::Other => Case::No(NoReason::NotPathOrCycle),
        }
    };
    Ok(Classification { verdict: !matches!(case, Case::No(_)), case })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimisStatus {
    EqualUpTo,
    Witness,
    Aborted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowWitness {
    pub s: u32,
    pub monomial: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarnessRow {
    pub graph: String,
    pub t: usize,
    pub predicted: bool,
    pub case: String,
    pub packed_computed: bool,
    pub simis_bounded: SimisStatus,
    pub s_max: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<RowWitness>,
    pub agrees: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarnessReport {
    pub rows: Vec<HarnessRow>,
    pub disagreements: usize,
}

impl HarnessReport {
    pub fn from_rows(mut rows: Vec<HarnessRow>) -> Self {
        rows.sort_by(|a, b| (&a.graph, a.t).cmp(&(&b.graph, b.t)));
        let disagreements = rows.iter().filter(|r| !r.agrees).count();
        HarnessReport { rows, disagreements }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Strict parse: unknown fields, a wrong disagreement count or an
    /// inconsistent `agrees` flag are schema errors.
    pub fn from_json(text: &str) -> Result<Self> {
        let report: HarnessReport =
            serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("report schema: {e}")))?;
        for row in &report.rows {
            if row.agrees != row_agrees(row.predicted, row.packed_computed, row.simis_bounded) {
                return Err(Error::InvalidArgument(format!("report schema: inconsistent row for {} t={}", row.graph, row.t)));
            }
            if (row.simis_bounded == SimisStatus::Witness) != row.witness.is_some() {
                return Err(Error::InvalidArgument(format!("report schema: witness mismatch for {} t={}", row.graph, row.t)));
            }
        }
        if report.disagreements != report.rows.iter().filter(|r| !r.agrees).count() {
            return Err(Error::InvalidArgument("report schema: disagreement count is wrong".into()));
        }
        Ok(report)
    }
}

// Packing must match the prediction; a Simis failure on a predicted-packed
// instance also counts against it.
fn row_agrees(predicted: bool, packed: bool, simis: SimisStatus) -> bool {
    packed == predicted && !(predicted && simis == SimisStatus::Witness)
}

/// Classifies, decides packing, and runs the bounded Simis comparison for
/// one instance. `s_max = None` means `s_max = t`.
pub fn check_instance(graph: &Graph, t: usize, s_max: Option<u32>, cap: usize) -> Result<HarnessRow> {
    let class = theorem_classification(graph, t)?;
    let j: MonomialIdeal = TConnInstance::new(graph.clone(), t)?.cover_ideal();
    let s_max = s_max.unwrap_or(t as u32);
    let packed = packing::is_packed(&j)?.packed;
    let (simis, witness) = match duality::simis_check(&j, s_max, cap) {
        Ok(report) => match report.witness() {
            None => (SimisStatus::EqualUpTo, None),
            Some((s, m)) => (SimisStatus::Witness, Some(RowWitness { s, monomial: m.to_string() })),
        },
        Err(Error::SizeLimit { .. }) => (SimisStatus::Aborted, None),
        Err(e) => return Err(e),
    };
    Ok(HarnessRow {
        graph: graph.to_graph6(),
        t,
        predicted: class.verdict,
        case: class.case.tag().to_string(),
        packed_computed: packed,
        simis_bounded: simis,
        s_max,
        witness,
        agrees: row_agrees(class.verdict, packed, simis),
    })
}

/// Runs [`check_instance`] for every graph and every `t` in `t_values`
/// with `t <= n`, in parallel; rows come back sorted by (graph6, t).
pub fn verify_graphs(graphs: &[Graph], t_values: &[usize], s_max: Option<u32>, cap: usize) -> Result<HarnessReport> {
    let jobs: Vec<(&Graph, usize)> =
        graphs.iter().flat_map(|g| t_values.iter().filter(|&&t| t <= g.n()).map(move |&t| (g, t))).collect();
    let rows = jobs.par_iter().map(|&(g, t)| check_instance(g, t, s_max, cap)).collect::<Result<Vec<_>>>()?;
    Ok(HarnessReport::from_rows(rows))
}

/// Every connected labeled graph on at most `n_max` vertices, every `t` in
/// `t_values` with `3 <= t <= n`.
pub fn verify_theorem(n_max: usize, t_values: &[usize], s_max: Option<u32>) -> Result<HarnessReport> {
    verify_theorem_with_cap(n_max, t_values, s_max, DEFAULT_SIZE_CAP)
}

pub fn verify_theorem_with_cap(n_max: usize, t_values: &[usize], s_max: Option<u32>, cap: usize) -> Result<HarnessReport> {
    let t_values: Vec<usize> = t_values.iter().copied().filter(|&t| t >= 3).collect();
    let mut graphs = Vec::new();
    for n in 3..=n_max {
        graphs.extend(Graph::connected_labeled(n)?);
    }
    verify_graphs(&graphs, &t_values, s_max, cap)
}

/// The `t = 2` rule on every connected labeled graph with `2..=n_max`
/// vertices.
pub fn verify_bipartite(n_max: usize, s_max: u32) -> Result<HarnessReport> {
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(Graph::connected_labeled(n)?);
    }
    verify_graphs(&graphs, &[2], Some(s_max), DEFAULT_SIZE_CAP)
}
