use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Monomial;
use crate::clutter;
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::MAX_VARS;

/// A monomial ideal, held as its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// `<x_1, ..., x_n>`.
    pub fn maximal(nvars: usize) -> Self {
        Self::prime(nvars, VertexSet::full(nvars))
    }

    /// The prime generated by the variables in `vars`.
    pub fn prime(nvars: usize, vars: VertexSet) -> Self {
        MonomialIdeal { nvars, gens: vars.iter().map(|v| Monomial::var(nvars, v)).collect() }
    }

    /// Minimal generators of the ideal generated by `candidates`.
    pub fn minimalize(nvars: usize, candidates: Vec<Monomial>) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::TooManyVertices(nvars));
        }
        if let Some(bad) = candidates.iter().find(|m| m.nvars() != nvars) {
            return Err(Error::UniverseMismatch(nvars, bad.nvars()));
        }
        Ok(Self::minimal_from(nvars, candidates))
    }

    pub(crate) fn minimal_from(nvars: usize, mut candidates: Vec<Monomial>) -> Self {
        candidates.sort_unstable();
        candidates.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(candidates.len());
        // Sorted by degree, so only strictly lower-degree survivors can divide.
        let mut level_start = 0;
        for c in candidates {
            if gens.last().is_some_and(|g| g.degree() < c.degree()) {
                level_start = gens.len();
            }
            if !gens[..level_start].iter().any(|g| g.divides(&c)) {
                gens.push(c);
            }
        }
        MonomialIdeal { nvars, gens }
    }

    /// Square-free ideal with the given generator supports.
    pub fn from_supports<I: IntoIterator<Item = VertexSet>>(nvars: usize, supports: I) -> Self {
        let sets = clutter::minimal_sets(supports.into_iter().map(VertexSet::bits).collect());
        MonomialIdeal {
            nvars,
            gens: sets.into_iter().map(|s| Monomial::square_free(nvars, VertexSet::from_bits(s))).collect(),
        }
    }

    /// Parses generator strings such as `["x1*x2", "x3^2"]`.
    pub fn parse<S: AsRef<str>>(nvars: usize, gens: &[S]) -> Result<Self> {
        let monomials = gens.iter().map(|g| Monomial::parse(nvars, g.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::minimalize(nvars, monomials)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    /// Generator supports as bitmasks, in generator order.
    pub fn supports(&self) -> Vec<u64> {
        self.gens.iter().map(|g| g.support().bits()).collect()
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(self.nvars, other.nvars))
        }
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let cands = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))).collect();
        Ok(Self::minimal_from(self.nvars, cands))
    }

    /// `I^s`; `I^0` is the unit ideal.
    pub fn power(&self, s: u32) -> Self {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..s {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let cands = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))).collect();
        Ok(Self::minimal_from(self.nvars, cands))
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.nvars(), self.nvars, "monomial from a different ring");
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Whether `m` lies in `I^s`, decided by searching for `s` generators
    /// whose product divides `m`, without expanding the power.
    pub fn contains_in_power(&self, m: &Monomial, s: u32) -> bool {
        assert_eq!(m.nvars(), self.nvars, "monomial from a different ring");
        if s == 0 {
            return true;
        }
        let Some(min_degree) = self.gens.first().map(Monomial::degree) else {
            return false;
        };
        if min_degree == 0 {
            return true;
        }
        let mut order: Vec<&Monomial> = self.gens.iter().collect();
        order.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        let mut memo = HashMap::new();
        power_search(&order, min_degree, m.clone(), s, &mut memo)
    }

    /// Height (codimension): the fewest variables meeting every generator
    /// support.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() || self.is_unit() {
            return Err(Error::ZeroOrUnitIdeal);
        }
        Ok(clutter::min_hitting_set_size(&self.supports()).expect("proper ideal has no unit generator"))
    }

    /// Keep only the variables in `keep` (1-based, ascending), renumbered
    /// `1..=keep.len()`. Generators must not involve dropped variables.
    pub(crate) fn project(&self, keep: &[usize]) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.project(keep)).collect();
        Self::minimal_from(keep.len(), gens)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(Monomial::to_string).collect()
    }
}

fn power_search(
    order: &[&Monomial],
    min_degree: u32,
    rest: Monomial,
    s: u32,
    memo: &mut HashMap<(Monomial, u32), bool>,
) -> bool {
    if s == 0 {
        return true;
    }
    if rest.degree() < s * min_degree {
        return false;
    }
    let key = (rest, s);
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let rest = &key.0;
    let found = order.iter().any(|g| match rest.checked_div(g) {
        Some(q) => power_search(order, min_degree, q, s - 1, memo),
        None => false,
    });
    memo.insert(key, found);
    found
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.gens)
    }
}
