use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::MAX_VARS;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` over a fixed number of variables.
///
/// Ordered graded-lexicographically: lower degree first, ties broken by the
/// exponent vectors with `x_1 > x_2 > ...` (so `x1*x5` precedes `x2*x5`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    support: u64,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVertices(exps.len()));
        }
        Ok(Self::from_exps(exps))
    }

    pub(crate) fn from_exps(exps: Vec<u32>) -> Self {
        let mut support = 0;
        let mut degree = 0;
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                support |= 1 << i;
                degree += e;
            }
        }
        Monomial { exps, support, degree }
    }

    /// The monomial `1`.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], support: 0, degree: 0 }
    }

    /// `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Self::from_exps(exps)
    }

    /// The square-free monomial with the given support.
    pub fn square_free(nvars: usize, support: VertexSet) -> Self {
        let mut exps = vec![0; nvars];
        for v in support.iter() {
            exps[v - 1] = 1;
        }
        Self::from_exps(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based.
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::from_bits(self.support)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Sum of the exponents over the variables in `vars`.
    pub fn degree_in(&self, vars: VertexSet) -> u32 {
        vars.iter().map(|v| self.exps[v - 1]).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.support & !other.support == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            support: self.support | other.support,
            degree: self.degree + other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        Self::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / divisor`, if the division is exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor
            .divides(self)
            .then(|| Self::from_exps(self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect()))
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Monomial {
        Self::from_exps(self.exps.iter().map(|&e| e * k).collect())
    }

    /// Drop variables and keep the listed ones, renumbered in order.
    pub(crate) fn project(&self, keep: &[usize]) -> Monomial {
        Self::from_exps(keep.iter().map(|&v| self.exps[v - 1]).collect())
    }

    /// Parses `1`, `x3`, `x1^2*x4` and friends. Repeated factors multiply.
    pub fn parse(nvars: usize, text: &str) -> Result<Monomial> {
        let bad = || Error::MonomialSyntax(text.to_string());
        let trimmed = text.trim();
        let mut exps = vec![0u32; nvars];
        if trimmed == "1" {
            return Ok(Monomial::one(nvars));
        }
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let body = factor.strip_prefix('x').ok_or_else(bad)?;
            let (index, power) = match body.split_once('^') {
                Some((i, p)) => (i, p.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            if index == 0 || index > nvars {
                return Err(bad());
            }
            exps[index - 1] += power;
        }
        Ok(Self::from_exps(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
