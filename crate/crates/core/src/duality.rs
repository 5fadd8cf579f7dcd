//! Alexander duality, minimal primes, symbolic powers and the bounded
//! comparison of symbolic with ordinary powers.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{Monomial, MonomialIdeal};
use crate::clutter;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Default bound on intermediate generator counts.
pub const DEFAULT_SIZE_CAP: usize = 200_000;

fn check_square_free_proper(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    Ok(())
}

/// `I^∨`: generated by the minimal transversals of the generator supports.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_square_free_proper(ideal)?;
    let covers = clutter::minimal_transversals(&ideal.supports());
    Ok(MonomialIdeal::from_supports(ideal.nvars(), covers.into_iter().map(VertexSet::from_bits)))
}

/// Variable supports of the minimal primes of a square-free ideal. No member
/// contains another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PrimeList {
    primes: Vec<VertexSet>,
}

impl PrimeList {
    pub fn primes(&self) -> &[VertexSet] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The symbolic-power membership test: `m` has degree at least `s` over
    /// every prime.
    pub fn symbolic_contains(&self, m: &Monomial, s: u32) -> bool {
        self.primes.iter().all(|&p| m.degree_in(p) >= s)
    }
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<PrimeList> {
    check_square_free_proper(ideal)?;
    let primes = clutter::minimal_transversals(&ideal.supports()).into_iter().map(VertexSet::from_bits).collect();
    Ok(PrimeList { primes })
}

/// All monomials of total degree `d` in the given variables.
fn monomials_of_degree(nvars: usize, vars: &[usize], d: u32) -> Vec<Monomial> {
    fn fill(vars: &[usize], d: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let (&first, rest) = vars.split_first().expect("nonempty");
        if rest.is_empty() {
            exps[first - 1] = d;
            out.push(Monomial::from_exps(exps.clone()));
            exps[first - 1] = 0;
            return;
        }
        for e in (0..=d).rev() {
            exps[first - 1] = e;
            fill(rest, d - e, exps, out);
        }
        exps[first - 1] = 0;
    }
    let mut out = Vec::new();
    fill(vars, d, &mut vec![0; nvars], &mut out);
    out
}

/// `acc ∩ P^s` for a variable-generated prime `P`: each generator `a` of
/// `acc` contributes `a * P^(s - deg_P a)`.
fn intersect_prime_power(acc: &MonomialIdeal, prime: VertexSet, s: u32) -> MonomialIdeal {
    let vars = prime.to_vec();
    let nvars = acc.nvars();
    let mut fillers: Vec<Option<Vec<Monomial>>> = vec![None; s as usize + 1];
    let mut cands = Vec::new();
    for a in acc.gens() {
        let have = a.degree_in(prime);
        if have >= s {
            cands.push(a.clone());
            continue;
        }
        let need = (s - have) as usize;
        let fill = fillers[need].get_or_insert_with(|| monomials_of_degree(nvars, &vars, need as u32));
        cands.extend(fill.iter().map(|q| a.mul(q)));
    }
    MonomialIdeal::minimal_from(nvars, cands)
}

fn symbolic_from_primes(nvars: usize, primes: &PrimeList, s: u32, cap: usize) -> Result<MonomialIdeal> {
    if s == 0 {
        return Ok(MonomialIdeal::unit(nvars));
    }
    let mut order: Vec<VertexSet> = primes.primes.clone();
    order.sort_by_key(|p| p.len());
    let mut acc = MonomialIdeal::unit(nvars);
    for p in order {
        acc = intersect_prime_power(&acc, p, s);
        if acc.len() > cap {
            return Err(Error::SizeLimit { what: "symbolic power generators", size: acc.len(), cap });
        }
    }
    Ok(acc)
}

/// `I^(s)`: the intersection of the `s`-th powers of the minimal primes,
/// folded smallest prime first.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32, cap: usize) -> Result<MonomialIdeal> {
    let primes = minimal_primes(ideal)?;
    symbolic_from_primes(ideal.nvars(), &primes, s, cap)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimisVerdict {
    /// `I^(s) = I^s` for every `s` up to the bound.
    EqualUpTo(u32),
    /// `witness` lies in `I^(s)` but not in `I^s`.
    WitnessAt { s: u32, witness: Monomial },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimisReport {
    pub ideal: MonomialIdeal,
    pub s_max: u32,
    pub verdict: SimisVerdict,
}

impl SimisReport {
    pub fn is_equal(&self) -> bool {
        matches!(self.verdict, SimisVerdict::EqualUpTo(_))
    }

    pub fn witness(&self) -> Option<(u32, &Monomial)> {
        match &self.verdict {
            SimisVerdict::WitnessAt { s, witness } => Some((*s, witness)),
            SimisVerdict::EqualUpTo(_) => None,
        }
    }
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    s: u32,
    monomial: &'a Monomial,
}

impl Serialize for SimisReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let witness = self.witness();
        let mut st = serializer.serialize_struct("SimisReport", if witness.is_some() { 4 } else { 3 })?;
        st.serialize_field("ideal", &self.ideal)?;
        st.serialize_field("s_max", &self.s_max)?;
        match witness {
            None => st.serialize_field("verdict", "equal_up_to")?,
            Some((s, monomial)) => {
                st.serialize_field("verdict", "witness_at")?;
                st.serialize_field("witness", &WitnessJson { s, monomial })?;
            }
        }
        st.end()
    }
}

/// Compares `I^(s)` with `I^s` for `s = 2..=s_max`, stopping at the first
/// difference. The witness is the first generator of `I^(s)`, in canonical
/// order, outside `I^s`.
pub fn simis_check(ideal: &MonomialIdeal, s_max: u32, cap: usize) -> Result<SimisReport> {
    if s_max == 0 {
        return Err(Error::InvalidArgument("s_max must be positive".into()));
    }
    let primes = minimal_primes(ideal)?;
    let mut power = ideal.clone();
    for s in 2..=s_max {
        power = power.product(ideal)?;
        if power.len() > cap {
            return Err(Error::SizeLimit { what: "ordinary power generators", size: power.len(), cap });
        }
        let symbolic = symbolic_from_primes(ideal.nvars(), &primes, s, cap)?;
        if symbolic != power {
            let witness = symbolic
                .gens()
                .iter()
                .find(|w| !ideal.contains_in_power(w, s))
                .cloned()
                .ok_or_else(|| Error::Verification(format!("I^({s}) != I^{s} but no generator separates them")))?;
            return Ok(SimisReport { ideal: ideal.clone(), s_max, verdict: SimisVerdict::WitnessAt { s, witness } });
        }
    }
    Ok(SimisReport { ideal: ideal.clone(), s_max, verdict: SimisVerdict::EqualUpTo(s_max) })
}
