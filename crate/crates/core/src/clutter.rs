//! Set systems over at most 64 points, each set a `u64` bitmask.
//!
//! The square-free side of the engine (transversals, heights, disjoint
//! generator selections, restrictions) runs on these instead of exponent
//! vectors.

use std::cmp::Ordering;

/// Canonical order of square-free supports: fewer elements first, then the
/// set containing the smallest differing element first. Agrees with the
/// monomial order on square-free monomials.
pub fn cmp_sets(a: u64, b: u64) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        let diff = a ^ b;
        if diff == 0 {
            Ordering::Equal
        } else if a & diff & diff.wrapping_neg() != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

/// Inclusion-minimal members, deduplicated and canonically sorted.
pub fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by(|&a, &b| cmp_sets(a, b));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// All inclusion-minimal sets meeting every edge, canonically sorted.
///
/// Branches on an uncovered edge with the fewest candidate points and keeps
/// a point only while every chosen point still has a private edge, so each
/// minimal transversal is produced exactly once. An empty edge admits no
/// transversal; an empty edge list admits only the empty set.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    if edges.contains(&0) {
        return Vec::new();
    }
    let edges = minimal_sets(edges.to_vec());
    let universe = edges.iter().fold(0, |acc, &e| acc | e);
    let mut out = Vec::new();
    let uncovered: Vec<u64> = edges.clone();
    transversal_step(&edges, 0, universe, &uncovered, &mut out);
    minimal_sets(out)
}

fn transversal_step(edges: &[u64], chosen: u64, mut cand: u64, uncovered: &[u64], out: &mut Vec<u64>) {
    let Some(&pivot) = uncovered.iter().min_by_key(|&&e| (e & cand).count_ones()) else {
        out.push(chosen);
        return;
    };
    let options = pivot & cand;
    cand &= !options;
    let mut rest = options;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        let grown = chosen | bit;
        if every_point_has_private_edge(edges, grown) {
            let left: Vec<u64> = uncovered.iter().copied().filter(|&e| e & bit == 0).collect();
            transversal_step(edges, grown, cand, &left, out);
        }
        cand |= bit;
    }
}

fn every_point_has_private_edge(edges: &[u64], set: u64) -> bool {
    let mut private = 0u64;
    for &e in edges {
        let hit = e & set;
        if hit != 0 && hit & (hit - 1) == 0 {
            private |= hit;
        }
    }
    private == set
}

/// Minimum total weight of a point set meeting every edge, with one optimal
/// set. Weights are indexed by point (bit position). Returns `None` when an
/// edge is empty.
pub fn min_weight_hitting_set(edges: &[u64], weights: &[u64]) -> Option<(u64, u64)> {
    if edges.contains(&0) {
        return None;
    }
    let points = edges.iter().fold(0u64, |acc, &e| acc | e);
    assert!(weights.len() >= 64 - points.leading_zeros() as usize, "missing weights");
    let edges = minimal_sets(edges.to_vec());
    // Free points are always worth taking.
    let free = edges
        .iter()
        .fold(0u64, |acc, &e| acc | e)
        & (0..64).filter(|&i| weights.get(i).copied().unwrap_or(0) == 0).fold(0u64, |acc, i| acc | 1 << i);
    let remaining: Vec<u64> = edges.iter().copied().filter(|&e| e & free == 0).collect();
    let (greedy_cost, greedy_set) = greedy_hitting_set(&remaining, weights);
    let mut best = (greedy_cost, greedy_set);
    hitting_step(&remaining, weights, 0, 0, 0, &mut best);
    Some((best.0, best.1 | free))
}

fn weight(weights: &[u64], set: u64) -> u64 {
    let mut total = 0;
    let mut rest = set;
    while rest != 0 {
        total += weights[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    total
}

fn greedy_hitting_set(edges: &[u64], weights: &[u64]) -> (u64, u64) {
    let mut chosen = 0u64;
    let mut open: Vec<u64> = edges.to_vec();
    while !open.is_empty() {
        let points = open.iter().fold(0u64, |acc, &e| acc | e);
        let mut best_point = 0;
        let mut best_score = (0u64, 1u64);
        let mut rest = points;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let hits = open.iter().filter(|&&e| e >> p & 1 == 1).count() as u64;
            let w = weights[p].max(1);
            // hits / w > best_hits / best_w
            if hits * best_score.1 > best_score.0 * w {
                best_score = (hits, w);
                best_point = p;
            }
        }
        chosen |= 1 << best_point;
        open.retain(|&e| e >> best_point & 1 == 0);
    }
    (weight(weights, chosen), chosen)
}

// Lower bound: greedily pick pairwise disjoint open edges; each needs its own
// point, costing at least its cheapest allowed member.
fn disjoint_lower_bound(open: &[u64], weights: &[u64], forbidden: u64) -> Option<u64> {
    let mut used = 0u64;
    let mut bound = 0;
    for &e in open {
        let allowed = e & !forbidden;
        if allowed == 0 {
            return None;
        }
        if e & used == 0 {
            used |= e;
            let mut cheapest = u64::MAX;
            let mut rest = allowed;
            while rest != 0 {
                cheapest = cheapest.min(weights[rest.trailing_zeros() as usize]);
                rest &= rest - 1;
            }
            bound += cheapest;
        }
    }
    Some(bound)
}

fn hitting_step(edges: &[u64], weights: &[u64], chosen: u64, forbidden: u64, cost: u64, best: &mut (u64, u64)) {
    let open: Vec<u64> = edges.iter().copied().filter(|&e| e & chosen == 0).collect();
    let Some(&pivot) = open.iter().min_by_key(|&&e| (e & !forbidden).count_ones()) else {
        if cost < best.0 {
            *best = (cost, chosen);
        }
        return;
    };
    let Some(lb) = disjoint_lower_bound(&open, weights, forbidden) else {
        return;
    };
    if cost + lb >= best.0 {
        return;
    }
    let mut options: Vec<usize> = {
        let mut v = Vec::new();
        let mut rest = pivot & !forbidden;
        while rest != 0 {
            v.push(rest.trailing_zeros() as usize);
            rest &= rest - 1;
        }
        v
    };
    options.sort_by_key(|&p| weights[p]);
    let mut excluded = forbidden;
    for p in options {
        let c = cost + weights[p];
        if c < best.0 {
            hitting_step(edges, weights, chosen | 1 << p, excluded, c, best);
        }
        excluded |= 1 << p;
    }
}

/// Size of the smallest point set meeting every edge.
pub fn min_hitting_set_size(edges: &[u64]) -> Option<usize> {
    min_weight_hitting_set(edges, &[1; 64]).map(|(c, _)| c as usize)
}

/// Indices of a largest family of pairwise disjoint edges, stopping early
/// once `stop_at` edges are found.
pub fn max_disjoint(edges: &[u64], stop_at: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| cmp_sets(edges[a], edges[b]));
    let mut best = Vec::new();
    let mut current = Vec::new();
    disjoint_step(edges, &order, 0, &mut current, &mut best, stop_at);
    best.sort_unstable();
    best
}

fn disjoint_step(
    edges: &[u64],
    candidates: &[usize],
    used: u64,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    stop_at: usize,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if best.len() >= stop_at || candidates.is_empty() {
        return;
    }
    // Bound: the free points can host at most free / smallest-edge disjoint edges.
    let free = candidates.iter().fold(0u64, |acc, &i| acc | edges[i]) & !used;
    let smallest = edges[candidates[0]].count_ones().max(1);
    let room = (free.count_ones() / smallest) as usize;
    if current.len() + room.min(candidates.len()) <= best.len() {
        return;
    }
    for (k, &i) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - k) <= best.len() {
            return;
        }
        let e = edges[i];
        let next: Vec<usize> = candidates[k + 1..].iter().copied().filter(|&j| edges[j] & e == 0).collect();
        current.push(i);
        disjoint_step(edges, &next, used | e, current, best, stop_at);
        current.pop();
        if best.len() >= stop_at {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(labels: &[usize]) -> u64 {
        labels.iter().fold(0, |acc, &v| acc | 1 << (v - 1))
    }

    fn oracle_transversals(edges: &[u64], n: usize) -> Vec<u64> {
        let hits: Vec<u64> = (0u64..1 << n).filter(|&s| edges.iter().all(|&e| e & s != 0)).collect();
        minimal_sets(hits)
    }

    fn oracle_min_weight(edges: &[u64], n: usize, w: &[u64]) -> u64 {
        (0u64..1 << n)
            .filter(|&s| edges.iter().all(|&e| e & s != 0))
            .map(|s| weight(w, s))
            .min()
            .unwrap()
    }

    fn oracle_disjoint(edges: &[u64]) -> usize {
        (0u32..1 << edges.len())
            .filter(|&pick| {
                let mut used = 0u64;
                (0..edges.len()).filter(|&i| pick >> i & 1 == 1).all(|i| {
                    let ok = edges[i] & used == 0;
                    used |= edges[i];
                    ok
                })
            })
            .map(|p| p.count_ones() as usize)
            .max()
            .unwrap()
    }

    // Small deterministic pseudo-random clutters.
    fn sample_edges(seed: u64, n: usize, m: usize) -> Vec<u64> {
        let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (0..m)
            .map(|_| {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let e = x & ((1 << n) - 1);
                if e == 0 {
                    1
                } else {
                    e
                }
            })
            .collect()
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![bits(&[2, 3]), bits(&[1, 4]), bits(&[5]), bits(&[1, 2])];
        v.sort_by(|&a, &b| cmp_sets(a, b));
        assert_eq!(v, vec![bits(&[5]), bits(&[1, 2]), bits(&[1, 4]), bits(&[2, 3])]);
    }

    #[test]
    fn star_transversals() {
        // {cab, cad, cbd} with c = 1, a = 2, b = 3, d = 4
        let edges = [bits(&[1, 2, 3]), bits(&[1, 2, 4]), bits(&[1, 3, 4])];
        assert_eq!(
            minimal_transversals(&edges),
            vec![bits(&[1]), bits(&[2, 3]), bits(&[2, 4]), bits(&[3, 4])]
        );
    }

    #[test]
    fn degenerate_transversals() {
        assert_eq!(minimal_transversals(&[]), vec![0]);
        assert!(minimal_transversals(&[0, 3]).is_empty());
    }

    #[test]
    fn transversals_match_brute_force() {
        for seed in 0..200 {
            let n = 3 + (seed % 7) as usize;
            let edges = sample_edges(seed, n, 1 + (seed % 9) as usize);
            assert_eq!(minimal_transversals(&edges), oracle_transversals(&edges, n), "seed {seed}");
        }
    }

    #[test]
    fn hitting_sets_match_brute_force() {
        for seed in 0..200 {
            let n = 3 + (seed % 8) as usize;
            let edges = sample_edges(seed + 1000, n, 1 + (seed % 11) as usize);
            let w: Vec<u64> = (0..64).map(|i| (i as u64 * 7 + seed) % 4).collect();
            let (cost, set) = min_weight_hitting_set(&edges, &w).unwrap();
            assert!(edges.iter().all(|&e| e & set != 0));
            assert_eq!(weight(&w, set), cost);
            assert_eq!(cost, oracle_min_weight(&edges, n, &w), "seed {seed}");
            assert_eq!(
                min_hitting_set_size(&edges).unwrap() as u64,
                oracle_min_weight(&edges, n, &[1; 64])
            );
        }
        assert_eq!(min_weight_hitting_set(&[0], &[1; 64]), None);
    }

    #[test]
    fn disjoint_matches_brute_force() {
        for seed in 0..200 {
            let n = 3 + (seed % 8) as usize;
            let edges = sample_edges(seed + 5000, n, 1 + (seed % 10) as usize);
            let pick = max_disjoint(&edges, usize::MAX);
            let mut used = 0;
            for &i in &pick {
                assert_eq!(edges[i] & used, 0);
                used |= edges[i];
            }
            assert_eq!(pick.len(), oracle_disjoint(&edges), "seed {seed}");
        }
    }

    #[test]
    fn disjoint_stops_early() {
        let edges = [1, 2, 4, 8];
        assert_eq!(max_disjoint(&edges, 2).len(), 2);
        assert_eq!(max_disjoint(&edges, 10).len(), 4);
    }
}
