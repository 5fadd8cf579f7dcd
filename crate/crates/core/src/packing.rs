//! Minors (restrictions), the König test, the packing property, and the
//! explicit non-packing minors of cover ideals of cycles.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Monomial, MonomialIdeal};
use crate::clutter;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tconn::TConnInstance;

/// Variables set to 0 and to 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Minor {
    pub zeros: VertexSet,
    pub ones: VertexSet,
}

impl Minor {
    pub fn new(zeros: VertexSet, ones: VertexSet) -> Result<Self> {
        if !zeros.is_disjoint(ones) {
            return Err(Error::InvalidArgument(format!("variables {} set to both 0 and 1", zeros.intersection(ones))));
        }
        Ok(Minor { zeros, ones })
    }

    pub fn zeros(zeros: VertexSet) -> Self {
        Minor { zeros, ones: VertexSet::EMPTY }
    }

    pub fn ones(ones: VertexSet) -> Self {
        Minor { zeros: VertexSet::EMPTY, ones }
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty() && self.ones.is_empty()
    }

    /// Minor number `index` of the ternary counter over `nvars` variables:
    /// digit `v - 1` (least significant first) is 0 keep, 1 zero, 2 one.
    pub fn from_counter(nvars: usize, mut index: u64) -> Self {
        let mut minor = Minor::default();
        for v in 1..=nvars {
            match index % 3 {
                1 => minor.zeros.insert(v),
                2 => minor.ones.insert(v),
                _ => {}
            }
            index /= 3;
        }
        minor
    }
}

/// A restricted ideal, in the shrunken ring of surviving variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    /// Generators over `survivors.len()` variables.
    pub ideal: MonomialIdeal,
    /// Original labels of the surviving variables, ascending; new variable
    /// `k` is old variable `survivors[k - 1]`.
    pub survivors: Vec<usize>,
    /// The same ideal written in the original variables.
    pub in_original_ring: MonomialIdeal,
}

/// Sets the `zeros` to 0 (dropping every generator they divide) and the
/// `ones` to 1 (deleting them from the remaining generators).
pub fn restrict(ideal: &MonomialIdeal, minor: &Minor) -> Result<Restriction> {
    let n = ideal.nvars();
    let universe = VertexSet::full(n);
    if !minor.zeros.union(minor.ones).is_subset(universe) {
        return Err(Error::InvalidArgument(format!("minor mentions variables outside 1..={n}")));
    }
    Minor::new(minor.zeros, minor.ones)?;
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.support().is_disjoint(minor.zeros))
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            for v in minor.ones.iter() {
                exps[v - 1] = 0;
            }
            Monomial::from_exps(exps)
        })
        .collect();
    let in_original_ring = MonomialIdeal::minimal_from(n, gens);
    let survivors = universe.difference(minor.zeros).difference(minor.ones).to_vec();
    let ideal = in_original_ring.project(&survivors);
    Ok(Restriction { ideal, survivors, in_original_ring })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KonigReport {
    pub konig: bool,
    pub height: usize,
    pub max_disjoint: usize,
    /// Pairwise disjoint generators, `height` of them when König.
    pub certificate: Vec<Monomial>,
}

// (height, disjoint picks) for a clutter of nonempty supports.
fn konig_numbers(supports: &[u64]) -> (usize, Vec<usize>) {
    let height = clutter::min_hitting_set_size(supports).expect("no empty support");
    let picks = clutter::max_disjoint(supports, height);
    (height, picks)
}

/// Whether `height(I)` generators with pairwise disjoint supports exist.
/// Zero and unit ideals count as König.
pub fn is_konig(ideal: &MonomialIdeal) -> Result<KonigReport> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(KonigReport { konig: true, height: 0, max_disjoint: 0, certificate: Vec::new() });
    }
    let (height, picks) = konig_numbers(&ideal.supports());
    Ok(KonigReport {
        konig: picks.len() == height,
        height,
        max_disjoint: picks.len(),
        certificate: picks.iter().map(|&i| ideal.gens()[i].clone()).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingWitness {
    pub zeros: VertexSet,
    pub ones: VertexSet,
    pub restricted_gens: MonomialIdeal,
    pub height: usize,
    pub max_disjoint: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingReport {
    pub packed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PackingWitness>,
}

// Restricts a clutter; `None` when the result is the zero or unit ideal.
fn restrict_clutter(edges: &[u64], minor: &Minor) -> Option<Vec<u64>> {
    let zeros = minor.zeros.bits();
    let ones = minor.ones.bits();
    let mut out = Vec::with_capacity(edges.len());
    for &e in edges {
        if e & zeros != 0 {
            continue;
        }
        let kept = e & !ones;
        if kept == 0 {
            return None;
        }
        out.push(kept);
    }
    if out.is_empty() {
        return None;
    }
    Some(clutter::minimal_sets(out))
}

fn minor_failure(edges: &[u64], minor: &Minor) -> Option<(Vec<u64>, usize, usize)> {
    let restricted = restrict_clutter(edges, minor)?;
    let (height, picks) = konig_numbers(&restricted);
    (picks.len() < height).then_some((restricted, height, picks.len()))
}

/// Decides the packing property by checking every minor in ternary counter
/// order. The reported witness is the first failing minor in that order,
/// independent of how the scan is scheduled.
pub fn is_packed(ideal: &MonomialIdeal) -> Result<PackingReport> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let n = ideal.nvars();
    if n > 20 {
        return Err(Error::SizeLimit { what: "variables for minor enumeration", size: n, cap: 20 });
    }
    let edges = ideal.supports();
    let total = 3usize.pow(n as u32);
    let first = (0..total)
        .into_par_iter()
        .with_min_len(256)
        .map(|idx| idx as u64)
        .find_first(|&idx| minor_failure(&edges, &Minor::from_counter(n, idx)).is_some());
    Ok(match first {
        None => PackingReport { packed: true, witness: None },
        Some(idx) => {
            let minor = Minor::from_counter(n, idx);
            let (restricted, height, max_disjoint) = minor_failure(&edges, &minor).expect("found above");
            PackingReport {
                packed: false,
                witness: Some(PackingWitness {
                    zeros: minor.zeros,
                    ones: minor.ones,
                    restricted_gens: MonomialIdeal::from_supports(n, restricted.into_iter().map(VertexSet::from_bits)),
                    height,
                    max_disjoint,
                }),
            }
        }
    })
}

/// A connected induced subgraph on `t + 1` vertices with `r >= 3` non-cut
/// vertices, the first such in canonical subset order.
pub fn non_cut_witness(graph: &Graph, t: usize) -> Result<Option<(VertexSet, usize)>> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    if t < 2 {
        return Err(Error::InvalidArgument(format!("t = {t} must be at least 2")));
    }
    if graph.n() <= t {
        return Ok(None);
    }
    for h in graph.connected_induced_subsets(t + 1)? {
        let r = graph.non_cut_within(h).len();
        if r >= 3 {
            return Ok(Some((h, r)));
        }
    }
    Ok(None)
}

/// One step of the descent: a zero-set turning `J_t(C_n)` into the cover
/// ideal `J_{t'}(C_{n'})`, verified up to a dihedral relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleMinor {
    pub n: usize,
    pub t: usize,
    pub zeros: VertexSet,
    pub target_n: usize,
    pub target_t: usize,
    /// `relabeling[k]` is the position on `C_{n'}` of the `k`-th surviving
    /// variable (original label `survivors[k]`).
    pub survivors: Vec<usize>,
    pub relabeling: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CycleNonPacking {
    /// `t` does not divide `n`, so the ideal itself is not König.
    NotKonig { n: usize, t: usize },
    Minor(CycleMinor),
}

fn zero_set_for(n: usize, t: usize) -> (Vec<usize>, usize, usize) {
    let l = n / t;
    if t == 3 {
        let k = n / 12;
        return match n % 12 {
            0 if k % 2 == 0 => {
                let mut z = vec![1, 4, 7, 10];
                z.extend((0..=3 * k - 4).map(|i| 4 * i + 13));
                (z, 9 * k - 1, 2)
            }
            0 => ((0..3 * k).map(|i| 4 * i + 1).collect(), 9 * k, 2),
            3 => {
                let mut z = vec![1, 5, 9];
                z.extend((0..=4 * k - 4).map(|i| 3 * i + 13));
                (z, 8 * k + 3, 2)
            }
            6 => {
                let mut z: Vec<usize> = (0..=4 * k - 2).map(|i| 3 * i + 1).collect();
                z.extend([12 * k - 1, 12 * k + 3]);
                (z, 8 * k + 5, 2)
            }
            _ => {
                let mut z: Vec<usize> = (0..4 * k).map(|i| 3 * i + 1).collect();
                z.extend([12 * k + 2, 12 * k + 6]);
                (z, 8 * k + 7, 2)
            }
        };
    }
    match (n, t) {
        (12, 4) => (vec![1, 4, 6, 8, 11], 7, 2),
        (10, 5) => (vec![2, 4, 6, 8, 10], 5, 2),
        _ => ((1..=l).map(|m| t * m).collect(), (t - 1) * l, t - 1),
    }
}

fn cover_of_cycle(n: usize, t: usize) -> Result<MonomialIdeal> {
    Ok(TConnInstance::new(Graph::cycle(n)?, t)?.cover_ideal())
}

/// Searches the `2n` rotations and reflections of `C_n` for one carrying
/// `ideal` onto `target`; returns the image of each variable.
pub fn dihedral_match(ideal: &MonomialIdeal, target: &MonomialIdeal) -> Option<Vec<usize>> {
    let n = ideal.nvars();
    if target.nvars() != n || ideal.len() != target.len() {
        return None;
    }
    let mut target_sets: Vec<u64> = target.supports();
    target_sets.sort_unstable();
    for reflect in [false, true] {
        for shift in 0..n {
            let map: Vec<usize> =
                (0..n).map(|k| if reflect { (n - k + shift) % n } else { (k + shift) % n } + 1).collect();
            let mut image: Vec<u64> = ideal
                .supports()
                .into_iter()
                .map(|s| VertexSet::from_bits(s).iter().fold(0u64, |acc, v| acc | 1 << (map[v - 1] - 1)))
                .collect();
            image.sort_unstable();
            if image == target_sets {
                return Some(map);
            }
        }
    }
    None
}

/// The non-packing minor of `J_t(C_n)` for `n > t >= 3` outside the three
/// packed cases, checked by restriction and relabeling.
pub fn cycle_nonpacking_minor(n: usize, t: usize) -> Result<CycleNonPacking> {
    if t < 3 || n <= t {
        return Err(Error::InvalidArgument(format!("need n > t >= 3, got n = {n}, t = {t}")));
    }
    if matches!((n, t), (6, 3) | (9, 3) | (8, 4)) {
        return Err(Error::InvalidArgument(format!("J_{t}(C_{n}) has the packing property")));
    }
    if n % t != 0 {
        return Ok(CycleNonPacking::NotKonig { n, t });
    }
    let (zeros, target_n, target_t) = zero_set_for(n, t);
    let zeros = VertexSet::from_labels(zeros);
    let restricted = restrict(&cover_of_cycle(n, t)?, &Minor::zeros(zeros))?;
    let target = cover_of_cycle(target_n, target_t)?;
    let relabeling = dihedral_match(&restricted.ideal, &target).ok_or_else(|| {
        Error::Verification(format!(
            "setting {zeros} to zero in J_{t}(C_{n}) does not give J_{target_t}(C_{target_n})"
        ))
    })?;
    Ok(CycleNonPacking::Minor(CycleMinor {
        n,
        t,
        zeros,
        target_n,
        target_t,
        survivors: restricted.survivors,
        relabeling,
    }))
}

/// Follows verified minors from `J_t(C_n)` down to the cover ideal of an
/// odd cycle's edge ideal (or to a non-König ideal).
pub fn cycle_descent(n: usize, t: usize) -> Result<Vec<CycleNonPacking>> {
    let mut steps = Vec::new();
    let (mut n, mut t) = (n, t);
    loop {
        let step = cycle_nonpacking_minor(n, t)?;
        let next = match &step {
            CycleNonPacking::Minor(m) if m.target_t >= 3 => Some((m.target_n, m.target_t)),
            _ => None,
        };
        steps.push(step);
        match next {
            Some(pair) => (n, t) = pair,
            None => return Ok(steps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tconn::cycle_cover_gens;

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(n, gens).unwrap()
    }

    fn cover(g: Graph, t: usize) -> MonomialIdeal {
        TConnInstance::new(g, t).unwrap().cover_ideal()
    }

    // Oracle: brute force over all subsets of generators.
    fn oracle_max_disjoint(i: &MonomialIdeal) -> usize {
        let s = i.supports();
        (0u32..1 << s.len())
            .filter(|pick| {
                let chosen: Vec<u64> = (0..s.len()).filter(|&k| pick >> k & 1 == 1).map(|k| s[k]).collect();
                chosen.iter().enumerate().all(|(a, &x)| chosen[a + 1..].iter().all(|&y| x & y == 0))
            })
            .map(|p| p.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn minor_counter() {
        assert!(Minor::from_counter(3, 0).is_empty());
        let m = Minor::from_counter(3, 1 + 2 * 3 + 9);
        assert_eq!(m.zeros, VertexSet::from_labels([1, 3]));
        assert_eq!(m.ones, VertexSet::from_labels([2]));
        assert!(Minor::new(VertexSet::from_labels([1]), VertexSet::from_labels([1])).is_err());
    }

    #[test]
    fn restrict_to_smaller_cycle() {
        let j48 = cover(Graph::cycle(8).unwrap(), 4);
        let r = restrict(&j48, &Minor::zeros(VertexSet::from_labels([4, 8]))).unwrap();
        assert_eq!(r.survivors, vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(r.ideal, cover(Graph::cycle(6).unwrap(), 3));

        let j312 = cover(Graph::cycle(12).unwrap(), 3);
        let r = restrict(&j312, &Minor::zeros(VertexSet::from_labels([1, 5, 9]))).unwrap();
        assert!(dihedral_match(&r.ideal, &cover(Graph::cycle(9).unwrap(), 2)).is_some());
    }

    #[test]
    fn restrict_degenerate() {
        let j = ideal(4, &["x1", "x2*x3", "x2*x4", "x3*x4"]);
        assert!(restrict(&j, &Minor::ones(VertexSet::from_labels([2, 3]))).unwrap().ideal.is_unit());
        assert!(restrict(&j, &Minor::zeros(VertexSet::full(4))).unwrap().ideal.is_zero());
        assert!(restrict(&j, &Minor::zeros(VertexSet::from_labels([5]))).is_err());
        let r = restrict(&j, &Minor::new(VertexSet::from_labels([1]), VertexSet::from_labels([4])).unwrap()).unwrap();
        assert_eq!(r.survivors, vec![2, 3]);
        assert_eq!(r.ideal, ideal(2, &["x1", "x2"]));
        assert_eq!(r.in_original_ring, ideal(4, &["x2", "x3"]));
    }

    #[test]
    fn konig_examples() {
        let c63 = is_konig(&cover(Graph::cycle(6).unwrap(), 3)).unwrap();
        assert!(c63.konig);
        let cert: Vec<String> = c63.certificate.iter().map(|m| m.to_string()).collect();
        assert_eq!(cert, ["x1*x4", "x2*x5", "x3*x6"]);
        assert!(!is_konig(&cover(Graph::cycle(7).unwrap(), 3)).unwrap().konig);
        let star = is_konig(&ideal(4, &["x1", "x2*x3", "x2*x4", "x3*x4"])).unwrap();
        assert_eq!((star.konig, star.height, star.max_disjoint), (false, 3, 2));
        assert!(is_konig(&MonomialIdeal::zero(3)).unwrap().konig);
        assert!(is_konig(&MonomialIdeal::unit(3)).unwrap().konig);
        assert_eq!(is_konig(&ideal(1, &["x1^2"])), Err(Error::NotSquareFree));
    }

    #[test]
    fn disjoint_count_matches_oracle() {
        for n in 3..=8 {
            for t in 2..=n {
                let j = cycle_cover_gens(n, t).unwrap();
                if j.len() > 20 {
                    continue;
                }
                let k = is_konig(&j).unwrap();
                assert!(k.max_disjoint <= k.height);
                if !k.konig {
                    assert_eq!(k.max_disjoint, oracle_max_disjoint(&j), "C_{n} t={t}");
                }
            }
        }
    }

    #[test]
    fn cycle_konig_iff_divisible() {
        for n in 3..=12 {
            for t in 3..=n {
                let k = is_konig(&cycle_cover_gens(n, t).unwrap()).unwrap();
                assert_eq!(k.konig, n % t == 0, "C_{n} t={t}");
                assert_eq!(k.height, t);
            }
        }
    }

    #[test]
    fn packing_examples() {
        assert!(is_packed(&cover(Graph::cycle(6).unwrap(), 3)).unwrap().packed);
        assert!(!is_packed(&cover(Graph::cycle(7).unwrap(), 2)).unwrap().packed);
        let star = is_packed(&cover(Graph::star(3).unwrap(), 3)).unwrap();
        let w = star.witness.unwrap();
        assert!(w.zeros.is_empty() && w.ones.is_empty());
        assert_eq!((w.height, w.max_disjoint), (3, 2));
        assert_eq!(is_packed(&MonomialIdeal::zero(2)), Err(Error::ZeroOrUnitIdeal));
    }

    #[test]
    fn packing_report_json() {
        let report = is_packed(&cover(Graph::star(3).unwrap(), 3)).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"packed":false,"witness":{"zeros":[],"ones":[],"restricted_gens":["x1","x2*x3","x2*x4","x3*x4"],"height":3,"max_disjoint":2}}"#
        );
        let ok = is_packed(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), r#"{"packed":true}"#);
    }

    #[test]
    fn non_cut_witness_examples() {
        let (h, r) = non_cut_witness(&Graph::star(3).unwrap(), 3).unwrap().unwrap();
        assert_eq!((h, r), (VertexSet::full(4), 3));
        assert_eq!(non_cut_witness(&Graph::path(9).unwrap(), 3).unwrap(), None);
        let (h, r) = non_cut_witness(&Graph::cycle(6).unwrap(), 5).unwrap().unwrap();
        assert_eq!((h, r), (VertexSet::full(6), 6));
        assert_eq!(non_cut_witness(&Graph::path(3).unwrap(), 3).unwrap(), None);
    }

    #[test]
    fn non_cut_minor_is_not_konig() {
        // Setting every variable outside H to 1 leaves a non-König ideal.
        for g in Graph::connected_labeled(5).unwrap().iter().step_by(11) {
            for t in 2..5 {
                let Some((h, _)) = non_cut_witness(g, t).unwrap() else { continue };
                let j = cover(g.clone(), t);
                let minor = Minor::ones(g.vertices().difference(h));
                let r = restrict(&j, &minor).unwrap();
                assert!(!is_konig(&r.ideal).unwrap().konig, "{g:?} t={t}");
            }
        }
    }

    #[test]
    fn cycle_minors() {
        for (n, t, zeros, target) in [
            (12, 3, vec![1, 5, 9], (9, 2)),
            (15, 3, vec![1, 5, 9, 13], (11, 2)),
            (12, 4, vec![1, 4, 6, 8, 11], (7, 2)),
            (16, 4, vec![4, 8, 12, 16], (12, 3)),
            (10, 5, vec![2, 4, 6, 8, 10], (5, 2)),
            (12, 6, vec![6, 12], (10, 5)),
            (24, 3, vec![1, 4, 7, 10, 13, 17, 21], (17, 2)),
            (27, 3, vec![1, 5, 9, 13, 16, 19, 22, 25], (19, 2)),
            (30, 3, vec![1, 4, 7, 10, 13, 16, 19, 23, 27], (21, 2)),
        ] {
            let CycleNonPacking::Minor(m) = cycle_nonpacking_minor(n, t).unwrap() else { panic!() };
            assert_eq!(m.zeros, VertexSet::from_labels(zeros));
            assert_eq!((m.target_n, m.target_t), target);
        }
        assert_eq!(cycle_nonpacking_minor(7, 3).unwrap(), CycleNonPacking::NotKonig { n: 7, t: 3 });
        assert!(cycle_nonpacking_minor(9, 3).is_err());
        assert!(cycle_nonpacking_minor(3, 3).is_err());
        assert!(cycle_nonpacking_minor(8, 2).is_err());
    }

    #[test]
    fn descent_reaches_odd_cycle() {
        let steps = cycle_descent(12, 6).unwrap();
        assert_eq!(steps.len(), 2);
        let CycleNonPacking::Minor(last) = steps.last().unwrap() else { panic!() };
        assert_eq!((last.target_n, last.target_t), (5, 2));
        let j = cover(Graph::cycle(5).unwrap(), 2);
        assert!(!is_konig(&j).unwrap().konig);
    }
}
