//! Factorial functions of binomial, Sheffer and triangular posets.
//!
//! Every interval is counted (no sampling). A single pass computes the
//! maximal-chain count of each interval `[x, y]` and groups the counts by the
//! rank pair `(ρ(x), ρ(y))`; the three profile kinds are read off that
//! census. When a profile does not exist the caller gets a witness: two
//! intervals that the definition says should agree but do not.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::count::ChainCount;
use crate::error::PosetError;
use crate::poset::{Element, GradedPoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("{function}({k}) = {numerator}/{denominator} is not an integer")]
    NonIntegralRatio {
        function: char,
        k: usize,
        numerator: ChainCount,
        denominator: ChainCount,
    },
    #[error("{function}(1) must be 1, got {value}")]
    BadInitialValue { function: char, value: ChainCount },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Binomial,
    Sheffer,
}

/// Binomial factorial function `B` and, for Sheffer posets, the Sheffer
/// factorial function `D`, with the derived atom function
/// `A(k) = B(k)/B(k-1)` and coatom function `C(k) = D(k)/D(k-1)`.
///
/// Sequences are stored from index 0 with `B(0) = D(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialProfile {
    kind: ProfileKind,
    b: Vec<ChainCount>,
    d: Vec<ChainCount>,
    a: Vec<ChainCount>,
    c: Vec<ChainCount>,
}

fn ratios(seq: &[ChainCount], function: char) -> Result<Vec<ChainCount>, ProfileError> {
    let mut out = vec![ChainCount::one()];
    for k in 1..seq.len() {
        let r = seq[k].checked_div_exact(&seq[k - 1]).ok_or_else(|| ProfileError::NonIntegralRatio {
            function,
            k,
            numerator: seq[k].clone(),
            denominator: seq[k - 1].clone(),
        })?;
        out.push(r);
    }
    Ok(out)
}

fn with_unit(values: Vec<ChainCount>, function: char) -> Result<Vec<ChainCount>, ProfileError> {
    if let Some(first) = values.first() {
        if *first != 1 {
            return Err(ProfileError::BadInitialValue { function, value: first.clone() });
        }
    }
    let mut seq = vec![ChainCount::one()];
    seq.extend(values);
    Ok(seq)
}

impl FactorialProfile {
    /// Profile of a binomial poset from `B(1), B(2), …`.
    pub fn binomial(b: Vec<ChainCount>) -> Result<Self, ProfileError> {
        let b = with_unit(b, 'B')?;
        let a = ratios(&b, 'A')?;
        Ok(FactorialProfile { kind: ProfileKind::Binomial, b, d: Vec::new(), a, c: Vec::new() })
    }

    /// Profile of a Sheffer poset from `B(1), …` and `D(1), …`.
    pub fn sheffer(b: Vec<ChainCount>, d: Vec<ChainCount>) -> Result<Self, ProfileError> {
        let b = with_unit(b, 'B')?;
        let d = with_unit(d, 'D')?;
        let a = ratios(&b, 'A')?;
        let c = ratios(&d, 'C')?;
        Ok(FactorialProfile { kind: ProfileKind::Sheffer, b, d, a, c })
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    /// `B(k)`, with `B(0) = 1`.
    pub fn b(&self, k: usize) -> Option<&ChainCount> {
        self.b.get(k)
    }

    /// `D(k)` for Sheffer profiles; for binomial profiles `D = B`.
    pub fn d(&self, k: usize) -> Option<&ChainCount> {
        match self.kind {
            ProfileKind::Binomial => self.b.get(k),
            ProfileKind::Sheffer => self.d.get(k),
        }
    }

    pub fn a(&self, k: usize) -> Option<&ChainCount> {
        self.a.get(k)
    }

    pub fn c(&self, k: usize) -> Option<&ChainCount> {
        match self.kind {
            ProfileKind::Binomial => self.a.get(k),
            ProfileKind::Sheffer => self.c.get(k),
        }
    }

    /// Largest `k` with `B(k)` known.
    pub fn max_b(&self) -> usize {
        self.b.len() - 1
    }

    /// Largest `k` with `D(k)` known.
    pub fn max_d(&self) -> usize {
        match self.kind {
            ProfileKind::Binomial => self.max_b(),
            ProfileKind::Sheffer => self.d.len() - 1,
        }
    }

    /// `B(1), B(2), …`
    pub fn b_values(&self) -> &[ChainCount] {
        &self.b[1..]
    }

    /// `D(1), D(2), …`
    pub fn d_values(&self) -> &[ChainCount] {
        match self.kind {
            ProfileKind::Binomial => &self.b[1..],
            ProfileKind::Sheffer => &self.d[1..],
        }
    }

    /// `C(1), C(2), …`
    pub fn c_values(&self) -> &[ChainCount] {
        match self.kind {
            ProfileKind::Binomial => &self.a[1..],
            ProfileKind::Sheffer => &self.c[1..],
        }
    }

    /// `A(1), A(2), …`
    pub fn a_values(&self) -> &[ChainCount] {
        &self.a[1..]
    }
}

impl Serialize for FactorialProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("B", self.b_values())?;
        if self.kind == ProfileKind::Sheffer {
            map.serialize_entry("D", self.d_values())?;
        }
        map.end()
    }
}

/// Chain counts `B(m, n)` for every rank pair `m ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangularProfile {
    rank: usize,
    /// Row `m` holds `B(m, m), B(m, m+1), …, B(m, rank)`.
    #[serde(rename = "B")]
    rows: Vec<Vec<ChainCount>>,
}

impl TriangularProfile {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `B(m, n)`; `None` unless `m ≤ n ≤ rank`.
    pub fn get(&self, m: usize, n: usize) -> Option<&ChainCount> {
        if m > n {
            return None;
        }
        self.rows.get(m)?.get(n - m)
    }
}

/// An interval together with its maximal-chain count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountedInterval {
    pub x: Element,
    pub y: Element,
    pub chains: ChainCount,
}

/// Two intervals of the same kind whose chain counts differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: CountedInterval,
    pub second: CountedInterval,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] has {} maximal chains but [{}, {}] has {}",
            self.first.x, self.first.y, self.first.chains, self.second.x, self.second.y, self.second.chains
        )
    }
}

#[derive(Debug, Clone)]
struct CensusEntry {
    first: CountedInterval,
    conflict: Option<CountedInterval>,
}

/// Maximal-chain counts of all intervals grouped by `(ρ(x), ρ(y))`.
#[derive(Debug, Clone)]
pub struct IntervalCensus {
    rank: usize,
    bottom: Element,
    entries: BTreeMap<(usize, usize), CensusEntry>,
}

impl IntervalCensus {
    pub fn of(p: &GradedPoset) -> Self {
        let mut entries: BTreeMap<(usize, usize), CensusEntry> = BTreeMap::new();
        for x in 0..p.len() {
            let row = p.chain_row(x);
            for k in p.rank_of(x) + 1..=p.rank() {
                for &y in p.elements_of_rank(k) {
                    if row.is_zero(y) {
                        continue;
                    }
                    let chains = row.get(y);
                    let key = (p.rank_of(x), k);
                    match entries.get_mut(&key) {
                        None => {
                            entries.insert(key, CensusEntry { first: CountedInterval { x, y, chains }, conflict: None });
                        }
                        Some(entry) => {
                            if entry.conflict.is_none() && entry.first.chains != chains {
                                entry.conflict = Some(CountedInterval { x, y, chains });
                            }
                        }
                    }
                }
            }
        }
        IntervalCensus { rank: p.rank(), bottom: p.bottom(), entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Common count of the intervals with the given end ranks, or a witness.
    fn uniform(&self, m: usize, n: usize) -> Result<&CountedInterval, Witness> {
        let entry = &self.entries[&(m, n)];
        match &entry.conflict {
            Some(c) => Err(Witness { first: entry.first.clone(), second: c.clone() }),
            None => Ok(&entry.first),
        }
    }

    /// Common count over all rank pairs `(m, m + len)` with `m` in `starts`.
    fn uniform_length(&self, len: usize, starts: std::ops::RangeInclusive<usize>) -> Result<ChainCount, Witness> {
        let mut seen: Option<&CountedInterval> = None;
        for m in starts {
            let here = self.uniform(m, m + len)?;
            match seen {
                None => seen = Some(here),
                Some(prev) if prev.chains != here.chains => {
                    return Err(Witness { first: prev.clone(), second: here.clone() });
                }
                Some(_) => {}
            }
        }
        Ok(seen.expect("at least one start rank").chains.clone())
    }

    pub fn binomial_profile(&self) -> Result<FactorialProfile, Witness> {
        let b = (1..=self.rank)
            .map(|len| self.uniform_length(len, 0..=self.rank - len))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FactorialProfile::binomial(b).expect("chain counts of a binomial poset give integral ratios"))
    }

    pub fn sheffer_profile(&self) -> Result<FactorialProfile, Witness> {
        let d = (1..=self.rank)
            .map(|len| self.uniform(0, len).map(|c| c.chains.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let b = (1..self.rank)
            .map(|len| self.uniform_length(len, 1..=self.rank - len))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FactorialProfile::sheffer(b, d).expect("chain counts of a Sheffer poset give integral ratios"))
    }

    pub fn triangular_profile(&self) -> Result<TriangularProfile, Witness> {
        let mut rows = Vec::with_capacity(self.rank + 1);
        for m in 0..=self.rank {
            let mut row = vec![ChainCount::one()];
            for n in m + 1..=self.rank {
                row.push(self.uniform(m, n)?.chains.clone());
            }
            rows.push(row);
        }
        Ok(TriangularProfile { rank: self.rank, rows })
    }

    /// Bottom element of the surveyed poset.
    pub fn bottom(&self) -> Element {
        self.bottom
    }

    /// Representative interval and, when present, a disagreeing one for
    /// every rank pair; used for diagnostics.
    pub fn summary(&self) -> Vec<((usize, usize), CountedInterval, Option<CountedInterval>)> {
        self.entries
            .iter()
            .map(|(&k, e)| (k, e.first.clone(), e.conflict.clone()))
            .collect()
    }
}

/// Binomial profile, if every two intervals of equal length have equally
/// many maximal chains.
pub fn binomial_profile(p: &GradedPoset) -> Result<FactorialProfile, Witness> {
    IntervalCensus::of(p).binomial_profile()
}

/// Sheffer profile, if the intervals `[0̂, y]` of equal length agree (`D`)
/// and the intervals `[x, y]`, `x ≠ 0̂`, of equal length agree (`B`).
pub fn sheffer_profile(p: &GradedPoset) -> Result<FactorialProfile, Witness> {
    IntervalCensus::of(p).sheffer_profile()
}

/// Triangular profile, if chain counts depend only on `(ρ(x), ρ(y))`.
pub fn triangular_profile(p: &GradedPoset) -> Result<TriangularProfile, Witness> {
    IntervalCensus::of(p).triangular_profile()
}

/// `Σ_k (-1)^k N_k` over the rank counts `N_k` of `[x, y]`, `x < y`.
pub fn euler_poincare_residual(p: &GradedPoset, x: Element, y: Element) -> Result<i64, PosetError> {
    if x == y && x < p.len() {
        return Err(PosetError::SingletonInterval(x));
    }
    let counts = p.rank_counts(x, y)?;
    Ok(counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum())
}

fn quotient(num: &ChainCount, den1: &ChainCount, den2: &ChainCount) -> Option<ChainCount> {
    num.checked_div_exact(&(den1 * den2))
}

/// Checks the rank-count formulas against actual element counts on every
/// interval: `B(n)/(B(k)B(n-k))` on binomial intervals and
/// `D(n)/(D(k)B(n-k))` on Sheffer intervals `[0̂, y]` (Sheffer profiles
/// only). A non-exact quotient or a missing value counts as a failure.
pub fn verify_rank_count_formulas(p: &GradedPoset, profile: &FactorialProfile) -> bool {
    for x in 0..p.len() {
        let sheffer_interval = profile.kind() == ProfileKind::Sheffer && x == p.bottom();
        for k in p.rank_of(x) + 1..=p.rank() {
            for &y in p.elements_of_rank(k) {
                if !p.leq(x, y) {
                    continue;
                }
                let counts = p.rank_counts(x, y).expect("x <= y");
                let n = counts.len() - 1;
                let ok = if sheffer_interval {
                    (1..n).all(|j| {
                        match (profile.d(n), profile.d(j), profile.b(n - j)) {
                            (Some(dn), Some(dj), Some(b)) => quotient(dn, dj, b) == Some((counts[j] as u64).into()),
                            _ => false,
                        }
                    })
                } else {
                    (0..=n).all(|j| match (profile.b(n), profile.b(j), profile.b(n - j)) {
                        (Some(bn), Some(bj), Some(b)) => quotient(bn, bj, b) == Some((counts[j] as u64).into()),
                        _ => false,
                    })
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// `Σ_{k=0}^{n} (-1)^k B(n)/(B(k)B(n-k))`, zero for Eulerian binomial
/// intervals of length `n ≥ 1`. `None` if a value is missing or a quotient
/// is not exact.
pub fn binomial_euler_poincare_sum(profile: &FactorialProfile, n: usize) -> Option<BigInt> {
    let mut total = BigInt::from(0);
    for k in 0..=n {
        let term = BigInt::from(quotient(profile.b(n)?, profile.b(k)?, profile.b(n - k)?)?.into_biguint());
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Some(total)
}

/// `1 + Σ_{k=1}^{m} (-1)^k D(m)/(D(k)B(m-k))`, zero for Eulerian Sheffer
/// intervals of length `m ≥ 2`.
pub fn sheffer_euler_poincare_sum(profile: &FactorialProfile, m: usize) -> Option<BigInt> {
    let mut total = BigInt::from(1);
    for k in 1..=m {
        let term = BigInt::from(quotient(profile.d(m)?, profile.d(k)?, profile.b(m - k)?)?.into_biguint());
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Some(total)
}
