//! Incidence matrices of t-connected ideals and the covering/packing
//! integer programs over the matrix of minimal covers.
//!
//! For a cover matrix `B` and weights `α`:
//! `τ_α(B) = min α·y` subject to `Bᵀy ≥ 1`, and
//! `ν_α(B) = max Σz` subject to `Bz ≤ α`, over nonnegative integers.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::clutter;
use crate::error::{Error, Result};
use crate::graph::{Graph, Shape, VertexSet};
use crate::tconn::TConnInstance;

/// Default limit on `(bound + 1)^n` for the gap search.
pub const DEFAULT_GAP_CAP: u64 = 20_000_000;

fn row_strings(rows: usize, cols: &[u64]) -> Vec<String> {
    (0..rows)
        .map(|i| cols.iter().map(|&c| if c >> i & 1 == 1 { '1' } else { '0' }).collect())
        .collect()
}

/// A 0/1 matrix stored by columns; bit `i` of a column is row `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn from_columns(rows: usize, cols: Vec<u64>) -> Result<Self> {
        if rows > crate::MAX_VARS {
            return Err(Error::TooManyVertices(rows));
        }
        if cols.iter().any(|&c| c & !VertexSet::full(rows).bits() != 0) {
            return Err(Error::InvalidArgument("column entry outside the row range".into()));
        }
        Ok(IncidenceMatrix { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    /// Entry at 1-based row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.cols[j - 1] >> (i - 1) & 1) as u8
    }

    pub fn to_row_strings(&self) -> Vec<String> {
        row_strings(self.rows, &self.cols)
    }

    /// Distinct columns in canonical order.
    pub fn normalized(&self) -> IncidenceMatrix {
        let mut cols = self.cols.clone();
        cols.sort_by(|&a, &b| clutter::cmp_sets(a, b));
        cols.dedup();
        IncidenceMatrix { rows: self.rows, cols }
    }
}

impl Serialize for IncidenceMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_row_strings().serialize(s)
    }
}

/// `M_t(G)`: one column per connected induced `t`-subset, canonical order.
pub fn incidence_matrix(graph: &Graph, t: usize) -> Result<IncidenceMatrix> {
    let inst = TConnInstance::new(graph.clone(), t)?;
    IncidenceMatrix::from_columns(graph.n(), inst.t_connected_ideal().supports())
}

/// `M_t(P_n)` by formula: entry `(i, j)` is 1 iff `j <= i <= j + t - 1`,
/// for columns `j = 1..=n - t + 1`.
pub fn path_incidence_formula(n: usize, t: usize) -> Result<IncidenceMatrix> {
    if t == 0 || t > n {
        return Err(Error::InvalidArgument(format!("need 1 <= t <= n, got n = {n}, t = {t}")));
    }
    let cols = (1..=n - t + 1).map(|j| VertexSet::from_labels(j..j + t).bits()).collect();
    IncidenceMatrix::from_columns(n, cols)
}

/// `M_t(C_n)` by formula: entry `(i, j)` is 1 iff `(i - j) mod n <= t - 1`,
/// for columns `j = 1..=n`. When `t = n` every column is all-ones.
pub fn cycle_incidence_formula(n: usize, t: usize) -> Result<IncidenceMatrix> {
    if n < 3 || t == 0 || t > n {
        return Err(Error::InvalidArgument(format!("need n >= 3, 1 <= t <= n, got n = {n}, t = {t}")));
    }
    let cols = (1..=n)
        .map(|j| VertexSet::from_labels((1..=n).filter(|&i| (i + n - j) % n < t)).bits())
        .collect();
    IncidenceMatrix::from_columns(n, cols)
}

/// The matrix `B` of minimal 0/1 solutions of `Aᵀx ≥ 1`, with the blocker
/// of its columns (the minimal columns of `A`) kept for bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMatrix {
    rows: usize,
    cols: Vec<u64>,
    blocker: Vec<u64>,
}

impl CoverMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    /// Minimal sets meeting every column.
    pub fn blocker(&self) -> &[u64] {
        &self.blocker
    }

    pub fn to_row_strings(&self) -> Vec<String> {
        row_strings(self.rows, &self.cols)
    }
}

impl Serialize for CoverMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_row_strings().serialize(s)
    }
}

pub fn minimal_solutions(a: &IncidenceMatrix) -> Result<CoverMatrix> {
    if a.cols.is_empty() || a.cols.contains(&0) {
        return Err(Error::InvalidArgument("incidence matrix needs nonzero columns".into()));
    }
    let mut cols = clutter::minimal_transversals(&a.cols);
    cols.sort_by(|&x, &y| clutter::cmp_sets(x, y));
    let blocker = clutter::minimal_sets(a.cols.clone());
    Ok(CoverMatrix { rows: a.rows, cols, blocker })
}

fn check_alpha(b: &CoverMatrix, alpha: &[u64]) -> Result<()> {
    if alpha.len() != b.rows {
        return Err(Error::InvalidArgument(format!("weight vector has length {}, expected {}", alpha.len(), b.rows)));
    }
    Ok(())
}

fn weight_of(alpha: &[u64], set: u64) -> u64 {
    VertexSet::from_bits(set).iter().map(|v| alpha[v - 1]).sum()
}

// Every feasible y can be lowered to a 0/1 vector, so scanning subsets is exact.
fn tau_by_enumeration(b: &CoverMatrix, alpha: &[u64]) -> u64 {
    let n = b.rows;
    let mut cost = vec![0u64; 1 << n];
    let mut best = u64::MAX;
    for y in 1usize..1 << n {
        let low = y.trailing_zeros() as usize;
        cost[y] = cost[y & (y - 1)] + alpha[low];
        if cost[y] < best && b.cols.iter().all(|&c| c & y as u64 != 0) {
            best = cost[y];
        }
    }
    best
}

/// `τ_α(B)` by weighted hitting-set branch and bound over 0/1 vectors,
/// re-checked by full enumeration when `n <= 12`.
pub fn tau(b: &CoverMatrix, alpha: &[u64]) -> Result<u64> {
    check_alpha(b, alpha)?;
    let mut weights = alpha.to_vec();
    weights.resize(64, 0);
    let (value, _) = clutter::min_weight_hitting_set(&b.cols, &weights).expect("cover columns are nonempty");
    if b.rows <= 12 {
        let check = tau_by_enumeration(b, alpha);
        if check != value {
            return Err(Error::Verification(format!("tau mismatch: branch and bound {value}, enumeration {check}")));
        }
    }
    Ok(value)
}

struct Packer<'a> {
    cols: &'a [u64],
    blocker: &'a [u64],
    best: u64,
}

impl Packer<'_> {
    // Any family of covers uses each blocker set at least once per member.
    fn bound(&self, residual: &[u64], from: usize) -> u64 {
        let reach = self.cols[from..].iter().fold(0u64, |acc, &c| acc | c);
        self.blocker.iter().map(|&t| weight_of(residual, t & reach)).min().unwrap_or(0)
    }

    fn step(&mut self, residual: &mut [u64], from: usize, value: u64) {
        if value > self.best {
            self.best = value;
        }
        if from == self.cols.len() || value + self.bound(residual, from) <= self.best {
            return;
        }
        let col = self.cols[from];
        let cap = VertexSet::from_bits(col).iter().map(|v| residual[v - 1]).min().unwrap_or(0);
        for take in (0..=cap).rev() {
            for v in VertexSet::from_bits(col).iter() {
                residual[v - 1] -= take;
            }
            self.step(residual, from + 1, value + take);
            for v in VertexSet::from_bits(col).iter() {
                residual[v - 1] += take;
            }
        }
    }
}

/// `ν_α(B)` by depth-first search over column multiplicities, pruned by the
/// blocker bound `min_T Σ_{i∈T} α_i`.
pub fn nu(b: &CoverMatrix, alpha: &[u64]) -> Result<u64> {
    check_alpha(b, alpha)?;
    let mut packer = Packer { cols: &b.cols, blocker: &b.blocker, best: 0 };
    let mut residual = alpha.to_vec();
    packer.step(&mut residual, 0, 0);
    Ok(packer.best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapWitness {
    pub alpha: Vec<u64>,
    pub tau: u64,
    pub nu: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapSearchReport {
    pub entry_bound: u64,
    /// Weight vectors evaluated (orbit representatives for cycles).
    pub scanned: u64,
    pub witness: Option<GapWitness>,
}

// Vectors in {0..=bound}^n with the given sum, lexicographically ascending.
fn vectors_with_sum(n: usize, bound: u64, sum: u64) -> Vec<Vec<u64>> {
    fn fill(prefix: &mut Vec<u64>, n: usize, bound: u64, left: u64, out: &mut Vec<Vec<u64>>) {
        let slots = (n - prefix.len()) as u64;
        if slots == 0 {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let low = left.saturating_sub((slots - 1) * bound);
        for x in low..=bound.min(left) {
            prefix.push(x);
            fill(prefix, n, bound, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(n), n, bound, sum, &mut out);
    out
}

fn is_rotation_minimal(alpha: &[u64]) -> bool {
    let n = alpha.len();
    (1..n).all(|k| alpha[k..].iter().chain(&alpha[..k]).cmp(alpha.iter()) != std::cmp::Ordering::Less)
}

/// First `α ∈ {0..=bound}^n`, ordered by `Σα` then lexicographically, with
/// `τ_α ≠ ν_α`. On cycles only lexicographically least rotations are
/// evaluated, which cannot skip the first witness.
pub fn duality_gap_search(graph: &Graph, t: usize, bound: u64, cap: u64) -> Result<GapSearchReport> {
    let n = graph.n();
    let space = (bound + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
    if space > cap {
        return Err(Error::SizeLimit { what: "weight vectors in the gap search", size: space as usize, cap: cap as usize });
    }
    let b = minimal_solutions(&incidence_matrix(graph, t)?)?;
    let rotations = matches!(graph.classify_shape()?, Shape::Cycle(_)) && is_standard_cycle(graph);
    let mut scanned = 0;
    for sum in 0..=bound * n as u64 {
        let level: Vec<Vec<u64>> =
            vectors_with_sum(n, bound, sum).into_iter().filter(|a| !rotations || is_rotation_minimal(a)).collect();
        scanned += level.len() as u64;
        let hit = level
            .par_iter()
            .map(|alpha| -> Result<Option<GapWitness>> {
                let (tau, nu) = (tau(&b, alpha)?, nu(&b, alpha)?);
                Ok((tau != nu).then(|| GapWitness { alpha: alpha.clone(), tau, nu }))
            })
            .find_first(|r| !matches!(r, Ok(None)));
        if let Some(found) = hit {
            let witness = found?;
            // Count only up to and including the witness.
            let position = level.iter().position(|a| Some(a) == witness.as_ref().map(|w| &w.alpha)).unwrap_or(0);
            scanned -= (level.len() - position - 1) as u64;
            return Ok(GapSearchReport { entry_bound: bound, scanned, witness });
        }
    }
    Ok(GapSearchReport { entry_bound: bound, scanned, witness: None })
}

// Rotation by one label is an automorphism only for the 1-2-...-n-1 cycle.
fn is_standard_cycle(graph: &Graph) -> bool {
    let n = graph.n();
    (1..=n).all(|v| graph.has_edge(v, v % n + 1))
}
