//! `I_t(G)` and its cover ideal `J_t(G)`, plus closed-form generator lists
//! for paths and cycles.

use crate::algebra::{Monomial, MonomialIdeal};
use crate::clutter;
use crate::duality;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::MAX_VARS;

/// A connected graph together with `2 <= t <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TConnInstance {
    graph: Graph,
    t: usize,
}

impl TConnInstance {
    pub fn new(graph: Graph, t: usize) -> Result<Self> {
        if t < 2 || t > graph.n() {
            return Err(Error::InvalidArgument(format!("t = {t} outside 2..={}", graph.n())));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(TConnInstance { graph, t })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `I_t(G)`: one square-free generator per connected induced `t`-subset.
    pub fn t_connected_ideal(&self) -> MonomialIdeal {
        let sets = self.graph.connected_induced_subsets(self.t).expect("t validated");
        MonomialIdeal::from_supports(self.graph.n(), sets)
    }

    /// `J_t(G)`, whose generators are the minimal t-covers of `G`.
    pub fn cover_ideal(&self) -> MonomialIdeal {
        duality::alexander_dual(&self.t_connected_ideal()).expect("I_t(G) is square-free and proper")
    }
}

fn check_sizes(n: usize, t: usize) -> Result<()> {
    if t < 2 || n < t {
        return Err(Error::InvalidArgument(format!("need n >= t >= 2, got n = {n}, t = {t}")));
    }
    if n > MAX_VARS {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

// Turns index sequences into an ideal; errors instead of silently fixing a
// non-minimal or repeated cover.
fn ideal_from_sequences(n: usize, seqs: &[Vec<usize>]) -> Result<MonomialIdeal> {
    let sets: Vec<u64> = seqs.iter().map(|s| VertexSet::from_labels(s.iter().copied()).bits()).collect();
    let minimal = clutter::minimal_sets(sets.clone());
    if minimal.len() != sets.len() {
        return Err(Error::Verification("closed-form generators are not an antichain".into()));
    }
    Ok(MonomialIdeal::from_supports(n, minimal.into_iter().map(VertexSet::from_bits)))
}

/// Minimal t-covers of `P_n` as increasing sequences `i_1 < ... < i_r` with
/// `i_1 <= t`, `i_2 >= t + 1`, `i_r >= n - t + 1`, `i_{r-1} <= n - t`,
/// consecutive gaps at most `t` and gaps two apart at least `t + 1`.
/// Every produced cover is checked to have at least `floor(n / t)` elements.
pub fn path_cover_gens(n: usize, t: usize) -> Result<MonomialIdeal> {
    check_sizes(n, t)?;
    let mut seqs = Vec::new();
    let mut seq = Vec::new();
    for first in 1..=t {
        seq.push(first);
        extend_path(n, t, &mut seq, &mut seqs);
        seq.pop();
    }
    if let Some(short) = seqs.iter().find(|s| s.len() < n / t) {
        return Err(Error::Verification(format!("path cover {short:?} has fewer than floor(n/t) elements")));
    }
    ideal_from_sequences(n, &seqs)
}

fn extend_path(n: usize, t: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let r = seq.len();
    let last = seq[r - 1];
    if last + t > n {
        // i_r >= n - t + 1: nothing may follow, since i_r would then need to be <= n - t.
        if r == 1 || seq[r - 2] + t <= n {
            out.push(seq.clone());
        }
        return;
    }
    for next in last + 1..=(last + t).min(n) {
        if r == 1 && next < t + 1 {
            continue;
        }
        if r >= 2 && next < seq[r - 2] + t + 1 {
            continue;
        }
        seq.push(next);
        extend_path(n, t, seq, out);
        seq.pop();
    }
}

/// Minimal t-covers of `C_n`: consecutive gaps (including the wrap-around
/// gap `n + i_1 - i_r`) at most `t`, gaps two apart at least `t + 1`
/// including `n + i_1 - i_{r-1}` and `n + i_2 - i_r`. Every produced cover is
/// checked to have at least `ceil(n / t)` elements.
pub fn cycle_cover_gens(n: usize, t: usize) -> Result<MonomialIdeal> {
    check_sizes(n, t)?;
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let mut seqs = Vec::new();
    let mut seq = Vec::new();
    for first in 1..=t {
        seq.push(first);
        extend_cycle(n, t, &mut seq, &mut seqs);
        seq.pop();
    }
    if let Some(short) = seqs.iter().find(|s| s.len() < n.div_ceil(t)) {
        return Err(Error::Verification(format!("cycle cover {short:?} has fewer than ceil(n/t) elements")));
    }
    ideal_from_sequences(n, &seqs)
}

fn extend_cycle(n: usize, t: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let r = seq.len();
    let first = seq[0];
    let last = seq[r - 1];
    if n + first - last <= t {
        // The wrap-around gap is closed; a further index would break
        // n + i_1 - i_{r-1} >= t + 1.
        let closes = r == 1 || (n + first >= seq[r - 2] + t + 1 && n + seq[1] >= last + t + 1);
        if closes {
            out.push(seq.clone());
        }
        return;
    }
    for next in last + 1..=(last + t).min(n) {
        if r >= 2 && next < seq[r - 2] + t + 1 {
            continue;
        }
        seq.push(next);
        extend_cycle(n, t, seq, out);
        seq.pop();
    }
}

/// For `n = t * l`, the covers `f_i = x_i x_{i+t} ... x_{i+(l-1)t}`,
/// `i = 1..=t`, which are pairwise disjoint; `None` when `t` does not
/// divide `n`.
pub fn cycle_konig_sequence(n: usize, t: usize) -> Option<Vec<Monomial>> {
    if t < 2 || n < t || n % t != 0 || n > MAX_VARS {
        return None;
    }
    Some(
        (1..=t)
            .map(|i| Monomial::square_free(n, VertexSet::from_labels((0..n / t).map(|k| i + k * t))))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    // Brute-force oracle: minimal vertex sets meeting every connected t-set.
    fn brute_covers(g: &Graph, t: usize) -> MonomialIdeal {
        let edges: Vec<u64> = g.connected_induced_subsets(t).unwrap().iter().map(|s| s.bits()).collect();
        let hits: Vec<u64> = (0u64..1 << g.n()).filter(|&c| edges.iter().all(|&e| e & c != 0)).collect();
        MonomialIdeal::from_supports(g.n(), clutter::minimal_sets(hits).into_iter().map(VertexSet::from_bits))
    }

    #[test]
    fn instance_validation() {
        assert!(TConnInstance::new(Graph::path(4).unwrap(), 1).is_err());
        assert!(TConnInstance::new(Graph::path(4).unwrap(), 5).is_err());
        let split = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(TConnInstance::new(split, 2), Err(Error::Disconnected));
    }

    #[test]
    fn t_connected_examples() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        let edge_ideal = TConnInstance::new(g.clone(), 2).unwrap().t_connected_ideal();
        assert_eq!(edge_ideal, ideal(5, &["x1*x2", "x2*x3", "x2*x4", "x4*x5"]));
        let full = TConnInstance::new(g, 5).unwrap().t_connected_ideal();
        assert_eq!(full, ideal(5, &["x1*x2*x3*x4*x5"]));
        let p4 = TConnInstance::new(Graph::path(4).unwrap(), 3).unwrap().t_connected_ideal();
        assert_eq!(p4, ideal(4, &["x1*x2*x3", "x2*x3*x4"]));
    }

    #[test]
    fn cover_examples() {
        let star = TConnInstance::new(Graph::star(3).unwrap(), 3).unwrap().cover_ideal();
        assert_eq!(star, ideal(4, &["x1", "x2*x3", "x2*x4", "x3*x4"]));
        for g in [Graph::star(4).unwrap(), Graph::cycle(5).unwrap(), Graph::complete(4).unwrap()] {
            let n = g.n();
            assert_eq!(TConnInstance::new(g, n).unwrap().cover_ideal(), MonomialIdeal::maximal(n));
        }
        let p5 = TConnInstance::new(Graph::path(5).unwrap(), 3).unwrap().cover_ideal();
        assert!(p5.gens().contains(&Monomial::var(5, 3)));
        assert_eq!(p5, brute_covers(&Graph::path(5).unwrap(), 3));
    }

    #[test]
    fn path_golden_lists() {
        let p74 = path_cover_gens(7, 4).unwrap();
        assert_eq!(p74, ideal(7, &["x1*x5", "x2*x5", "x2*x6", "x3*x5", "x3*x6", "x3*x7", "x4"]));
        let p83 = path_cover_gens(8, 3).unwrap();
        let listed = [
            "x1*x4*x5*x8", "x1*x4*x6", "x1*x4*x7", "x2*x4*x6", "x2*x4*x7", "x2*x5*x6", "x2*x5*x7", "x2*x5*x8",
            "x3*x4*x7", "x3*x5*x7", "x3*x5*x8", "x3*x6",
        ];
        assert_eq!(p83, ideal(8, &listed));
        assert_eq!(p83.len(), 12);
        for t in 2..=6 {
            assert_eq!(path_cover_gens(t, t).unwrap(), MonomialIdeal::maximal(t));
        }
        assert!(path_cover_gens(3, 4).is_err());
        assert!(path_cover_gens(3, 1).is_err());
    }

    #[test]
    fn cycle_examples() {
        let c63 = cycle_cover_gens(6, 3).unwrap();
        assert_eq!(c63, ideal(6, &["x1*x4", "x2*x5", "x3*x6", "x1*x3*x5", "x2*x4*x6"]));
        assert_eq!(c63, brute_covers(&Graph::cycle(6).unwrap(), 3));
        for t in 3..=6 {
            assert_eq!(cycle_cover_gens(t, t).unwrap(), MonomialIdeal::maximal(t));
        }
        let c73 = cycle_cover_gens(7, 3).unwrap();
        for g in ["x1*x4*x7", "x2*x5*x6"] {
            assert!(c73.gens().contains(&Monomial::parse(7, g).unwrap()));
        }
        assert_eq!(c73, brute_covers(&Graph::cycle(7).unwrap(), 3));
        assert!(cycle_cover_gens(2, 2).is_err());
    }

    #[test]
    fn closed_forms_match_brute_force_small() {
        for n in 3..=9 {
            for t in 2..=n {
                assert_eq!(path_cover_gens(n, t).unwrap(), brute_covers(&Graph::path(n).unwrap(), t), "P_{n} t={t}");
                assert_eq!(cycle_cover_gens(n, t).unwrap(), brute_covers(&Graph::cycle(n).unwrap(), t), "C_{n} t={t}");
            }
        }
    }

    #[test]
    fn smallest_path_cover_is_floor() {
        // The smallest t-cover of P_n has exactly floor(n/t) vertices.
        for n in 2..=12 {
            for t in 2..=n {
                let gens = path_cover_gens(n, t).unwrap();
                let smallest = gens.gens().iter().map(|g| g.degree() as usize).min().unwrap();
                assert_eq!(smallest, n / t, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn konig_sequence() {
        let f = cycle_konig_sequence(6, 3).unwrap();
        let shown: Vec<String> = f.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1*x4", "x2*x5", "x3*x6"]);
        assert_eq!(cycle_konig_sequence(7, 3), None);
        let f44: Vec<String> = cycle_konig_sequence(4, 4).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(f44, ["x1", "x2", "x3", "x4"]);
        for n in 3..=12 {
            for t in 2..=n {
                let Some(seq) = cycle_konig_sequence(n, t) else { continue };
                let gens = cycle_cover_gens(n, t).unwrap();
                let mut union = VertexSet::EMPTY;
                for f in &seq {
                    assert!(gens.gens().contains(f));
                    assert!(union.is_disjoint(f.support()));
                    union = union.union(f.support());
                }
                assert_eq!(union, VertexSet::full(n));
            }
        }
    }
}
