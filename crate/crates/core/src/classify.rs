//! Canonical forms of Eulerian binomial, Sheffer and triangular posets.
//!
//! A form is read off the factorial functions and, at rank 3, the
//! component decomposition. Whenever the form pins down the poset up to
//! isomorphism, the classifier builds that poset with [`realize`] and checks
//! the isomorphism before answering; a mismatch is reported as
//! [`ClassifyError::InconsistentWithTheorems`] together with everything the
//! census knows.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::constructors::{box_sum, boolean, butterfly, dual_suspension, k_summation, polygon};
use crate::count::ChainCount;
use crate::error::PosetError;
use crate::iso::is_isomorphic;
use crate::poset::{Element, GradedPoset};
use crate::profile::{FactorialProfile, IntervalCensus, TriangularProfile, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ObservedProfile {
    Factorial(FactorialProfile),
    Triangular(TriangularProfile),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ClassificationResult {
    /// `B_n`
    Boolean { n: usize },
    /// `T_n`
    Butterfly { n: usize },
    /// `⊞^α(B_n)`, `n` odd
    #[serde(rename = "ksum_boolean")]
    KSumBoolean { alpha: usize, n: usize },
    /// `⊞^α(T_n)`, `n` odd
    #[serde(rename = "ksum_butterfly")]
    KSumButterfly { alpha: usize, n: usize },
    /// `⊞_i P_{q_i}`, parts in descending order
    PolygonSum { parts: Vec<usize> },
    /// `Σ*(⊞^α(B_n))`, `n` odd; the poset has rank `n + 1`
    #[serde(rename = "sigma_star_ksum_boolean")]
    SigmaStarKSumBoolean { alpha: usize, n: usize },
    /// `⊞^α(Σ*(B_n))`, `n` even; the poset has rank `n + 1`
    #[serde(rename = "ksum_sigma_star_boolean")]
    KSumSigmaStarBoolean { alpha: usize, n: usize },
    /// `Σ*(⊞^α(T_n))`, `n` odd, `α > 1`; the poset has rank `n + 1`
    #[serde(rename = "sigma_star_ksum_butterfly")]
    SigmaStarKSumButterfly { alpha: usize, n: usize },
    /// Factorial functions of the cubical lattice of rank `n`; the
    /// structure itself is not determined.
    CubicalFactorialType { n: usize },
    /// One of the nine factorial triples `(B(3), D(3), D(4))` at rank 4.
    /// Cases 1 and 9 are families with parameter `r = D(4)/4`.
    #[serde(rename = "rank4_case")]
    Rank4Case {
        case: u8,
        #[serde(skip_serializing_if = "Option::is_none")]
        r: Option<usize>,
    },
    /// `B(k) = 2^(k-1)` throughout; carries `C(1), …, C(rank)`.
    ThinSheffer { coatoms: Vec<ChainCount> },
    OpenCase { reason: String, profile: ObservedProfile },
}

use ClassificationResult as R;

impl ClassificationResult {
    /// Whether the form determines the poset up to isomorphism.
    pub fn is_structural(&self) -> bool {
        !matches!(
            self,
            R::CubicalFactorialType { .. } | R::Rank4Case { .. } | R::ThinSheffer { .. } | R::OpenCase { .. }
        )
    }

    /// Rewrites one-fold summations as the summand itself.
    pub fn canonical(&self) -> ClassificationResult {
        match *self {
            R::KSumBoolean { alpha: 1, n } => R::Boolean { n },
            R::KSumButterfly { alpha: 1, n } => R::Butterfly { n },
            _ => self.clone(),
        }
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            R::Boolean { n } => write!(f, "B_{n}"),
            R::Butterfly { n } => write!(f, "T_{n}"),
            R::KSumBoolean { alpha, n } => write!(f, "⊞^{alpha}(B_{n})"),
            R::KSumButterfly { alpha, n } => write!(f, "⊞^{alpha}(T_{n})"),
            R::PolygonSum { parts } => {
                let parts: Vec<String> = parts.iter().map(|q| format!("P_{q}")).collect();
                write!(f, "{}", parts.join(" ⊞ "))
            }
            R::SigmaStarKSumBoolean { alpha, n } => write!(f, "Σ*(⊞^{alpha}(B_{n}))"),
            R::KSumSigmaStarBoolean { alpha, n } => write!(f, "⊞^{alpha}(Σ*(B_{n}))"),
            R::SigmaStarKSumButterfly { alpha, n } => write!(f, "Σ*(⊞^{alpha}(T_{n}))"),
            R::CubicalFactorialType { n } => write!(f, "cubical factorial functions, rank {n}"),
            R::Rank4Case { case, r: Some(r) } => write!(f, "rank-4 case {case} (r = {r})"),
            R::Rank4Case { case, r: None } => write!(f, "rank-4 case {case}"),
            R::ThinSheffer { coatoms } => {
                let c: Vec<String> = coatoms.iter().map(|c| c.to_string()).collect();
                write!(f, "thin Sheffer, C = ({})", c.join(", "))
            }
            R::OpenCase { reason, .. } => write!(f, "open case: {reason}"),
        }
    }
}

/// Everything known about a poset whose profile fits no canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub reason: String,
    pub rank: usize,
    pub elements: usize,
    pub profile: Option<ObservedProfile>,
    /// One line per rank pair: `(m, n): count [x, y]` plus any disagreeing interval.
    pub intervals: Vec<String>,
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.reason)?;
        writeln!(f, "rank {}, {} elements", self.rank, self.elements)?;
        if let Some(p) = &self.profile {
            writeln!(f, "profile: {}", serde_json::to_string(p).expect("profiles serialize"))?;
        }
        for line in &self.intervals {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("not Eulerian: [{x}, {y}] has Euler-Poincaré residual {residual}")]
    NotEulerian { x: Element, y: Element, residual: i64 },
    #[error("not binomial: {0}")]
    NotBinomial(Witness),
    #[error("not Sheffer: {0}")]
    NotSheffer(Witness),
    #[error("not triangular: {0}")]
    NotTriangular(Witness),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("profile contradicts the classification:\n{0}")]
    InconsistentWithTheorems(Box<Diagnostics>),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// First interval violating the Eulerian condition, by residual.
fn eulerian_witness(p: &GradedPoset) -> ClassifyError {
    for x in 0..p.len() {
        for y in 0..p.len() {
            if x != y && p.leq(x, y) {
                let counts = p.rank_counts(x, y).expect("x <= y");
                let residual: i64 = counts
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
                    .sum();
                if residual != 0 {
                    return ClassifyError::NotEulerian { x, y, residual };
                }
            }
        }
    }
    unreachable!("called on a non-Eulerian poset")
}

fn require_eulerian(p: &GradedPoset) -> Result<(), ClassifyError> {
    if p.rank() == 0 {
        return Err(PosetError::RankTooSmall { rank: 0, minimum: 1 }.into());
    }
    if p.is_eulerian() {
        Ok(())
    } else {
        Err(eulerian_witness(p))
    }
}

struct Context<'a> {
    poset: &'a GradedPoset,
    census: IntervalCensus,
}

impl Context<'_> {
    fn inconsistent(&self, reason: impl Into<String>, profile: Option<ObservedProfile>) -> ClassifyError {
        let intervals = self
            .census
            .summary()
            .into_iter()
            .map(|((m, n), first, other)| {
                let mut line = format!("({m}, {n}): {} [{}, {}]", first.chains, first.x, first.y);
                if let Some(o) = other {
                    line.push_str(&format!("; {} [{}, {}]", o.chains, o.x, o.y));
                }
                line
            })
            .collect();
        ClassifyError::InconsistentWithTheorems(Box::new(Diagnostics {
            reason: reason.into(),
            rank: self.poset.rank(),
            elements: self.poset.len(),
            profile,
            intervals,
        }))
    }

    /// Builds the canonical poset of a structural form and checks the
    /// isomorphism.
    fn confirm(&self, form: ClassificationResult, profile: ObservedProfile) -> Result<ClassificationResult, ClassifyError> {
        let model = match realize(&form) {
            Ok(Some(m)) => m,
            Ok(None) => return Ok(form),
            Err(e) => return Err(self.inconsistent(format!("cannot build {form}: {e}"), Some(profile))),
        };
        if is_isomorphic(self.poset, &model).is_some() {
            Ok(form)
        } else {
            Err(self.inconsistent(format!("profile suggests {form}, but the poset is not isomorphic to it"), Some(profile)))
        }
    }

    fn polygon_sum(&self, profile: ObservedProfile) -> Result<ClassificationResult, ClassifyError> {
        match polygon_parts(self.poset) {
            Ok(parts) => Ok(R::PolygonSum { parts }),
            Err(reason) => Err(self.inconsistent(reason, Some(profile))),
        }
    }
}

/// Parts `q_1 ≥ … ≥ q_r` of a rank-3 poset whose components are polygons.
fn polygon_parts(p: &GradedPoset) -> Result<Vec<usize>, String> {
    let mut parts = Vec::new();
    for component in p.remove_bounds_components().map_err(|e| e.to_string())? {
        let q = component.elements_of_rank(1).len();
        let gon = polygon(q).map_err(|e| e.to_string())?;
        if is_isomorphic(&component, &gon).is_none() {
            return Err(format!("a component with {q} atoms is not the face lattice of a {q}-gon"));
        }
        parts.push(q);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

fn usize_of(c: &ChainCount) -> Option<usize> {
    c.to_u64().and_then(|v| usize::try_from(v).ok())
}

/// `values[k-1] == f(k)` for `k` in `range`.
fn matches_on(values: impl Fn(usize) -> Option<ChainCount>, range: std::ops::RangeInclusive<usize>, f: impl Fn(usize) -> ChainCount) -> bool {
    range.into_iter().all(|k| values(k) == Some(f(k)))
}

fn factorial(k: usize) -> ChainCount {
    ChainCount::factorial(k as u64)
}

fn two_pow(k: usize) -> ChainCount {
    ChainCount::pow2(k as u64)
}

/// `value / unit` when it is an exact positive integer.
fn multiple(value: Option<&ChainCount>, unit: &ChainCount) -> Option<usize> {
    value?.checked_div_exact(unit).as_ref().and_then(usize_of).filter(|&a| a >= 1)
}

/// Classifies an Eulerian binomial poset: `B_n` or `T_n` at even rank,
/// `⊞^α(B_n)` or `⊞^α(T_n)` at odd rank, a sum of polygons at rank 3.
pub fn classify_eulerian_binomial(p: &GradedPoset) -> Result<ClassificationResult, ClassifyError> {
    require_eulerian(p)?;
    let cx = Context { poset: p, census: IntervalCensus::of(p) };
    let profile = cx.census.binomial_profile().map_err(ClassifyError::NotBinomial)?;
    binomial_form(&cx, profile)
}

fn binomial_form(cx: &Context, profile: FactorialProfile) -> Result<ClassificationResult, ClassifyError> {
    let n = cx.poset.rank();
    let observed = ObservedProfile::Factorial(profile.clone());
    if n <= 2 {
        return Ok(R::Boolean { n });
    }
    if n == 3 {
        return cx.polygon_sum(observed);
    }
    let b = |k: usize| profile.b(k).cloned();
    let (closed, boolean_like): (fn(usize) -> ChainCount, bool) = match b(3).as_ref().and_then(usize_of) {
        Some(6) => (factorial, true),
        Some(4) => (|k| two_pow(k - 1), false),
        _ => return Err(cx.inconsistent("an Eulerian binomial poset of rank at least 4 has B(3) = 4 or 6", Some(observed))),
    };
    if !matches_on(b, 1..=n - 1, closed) {
        return Err(cx.inconsistent("B(k) departs from its closed form below the top rank", Some(observed)));
    }
    let Some(alpha) = multiple(profile.b(n), &closed(n)) else {
        return Err(cx.inconsistent("B(n) is not a multiple of its closed form", Some(observed)));
    };
    let form = match (n % 2, alpha, boolean_like) {
        (_, 1, true) => R::Boolean { n },
        (_, 1, false) => R::Butterfly { n },
        (0, _, _) => return Err(cx.inconsistent("an even-rank Eulerian binomial poset cannot be a summation", Some(observed))),
        (_, _, true) => R::KSumBoolean { alpha, n },
        (_, _, false) => R::KSumButterfly { alpha, n },
    };
    cx.confirm(form, observed)
}

/// Classifies an Eulerian Sheffer poset by rank and by `(B(3), D(3))`.
pub fn classify_eulerian_sheffer(p: &GradedPoset) -> Result<ClassificationResult, ClassifyError> {
    require_eulerian(p)?;
    let cx = Context { poset: p, census: IntervalCensus::of(p) };
    let profile = cx.census.sheffer_profile().map_err(ClassifyError::NotSheffer)?;
    sheffer_form(&cx, profile)
}

/// `(B(3), D(3), D(4))` of the nine rank-4 cases, in case order. Cases 1
/// and 9 are the families `(2r, 4, 4r)` and `(4, 2r, 4r)`, `r ≥ 2`.
pub const RANK4_FIXED_CASES: [(u8, [usize; 3]); 7] = [
    (2, [10, 6, 120]),
    (3, [8, 6, 48]),
    (4, [6, 6, 24]),
    (5, [4, 6, 12]),
    (6, [6, 10, 120]),
    (7, [6, 8, 48]),
    (8, [6, 4, 12]),
];

/// Case number and family parameter of a rank-4 factorial triple. Fixed
/// cases win over the families where they coincide.
pub fn rank4_case(b3: usize, d3: usize, d4: usize) -> Option<(u8, Option<usize>)> {
    if let Some(&(case, _)) = RANK4_FIXED_CASES.iter().find(|(_, t)| *t == [b3, d3, d4]) {
        return Some((case, None));
    }
    if d4.is_multiple_of(4) && d4 >= 8 {
        let r = d4 / 4;
        if b3 == 2 * r && d3 == 4 {
            return Some((1, Some(r)));
        }
        if b3 == 4 && d3 == 2 * r {
            return Some((9, Some(r)));
        }
    }
    None
}

fn sheffer_form(cx: &Context, profile: FactorialProfile) -> Result<ClassificationResult, ClassifyError> {
    let n = cx.poset.rank();
    let observed = ObservedProfile::Factorial(profile.clone());
    if n <= 2 {
        return Ok(R::Boolean { n });
    }
    if n == 3 {
        return cx.polygon_sum(observed);
    }
    let small = |c: Option<&ChainCount>| c.and_then(usize_of);
    let b3 = small(profile.b(3));
    let d3 = small(profile.d(3));
    if n == 4 {
        let triple = (b3, d3, small(profile.d(4)));
        return match triple {
            (Some(b3), Some(d3), Some(d4)) => match rank4_case(b3, d3, d4) {
                Some((case, r)) => Ok(R::Rank4Case { case, r }),
                None => Err(cx.inconsistent(format!("({b3}, {d3}, {d4}) is none of the nine rank-4 triples"), Some(observed))),
            },
            _ => Err(cx.inconsistent("rank-4 factorial values out of range", Some(observed))),
        };
    }
    let b = |k: usize| profile.b(k).cloned();
    let d = |k: usize| profile.d(k).cloned();
    let even = n.is_multiple_of(2);
    match (b3, d3) {
        (Some(6), Some(6)) => {
            if !matches_on(b, 1..=n - 1, factorial) || !matches_on(d, 1..=n - 1, factorial) {
                return Err(cx.inconsistent("B(3) = D(3) = 6 but the factorial functions are not k! below the top", Some(observed)));
            }
            let Some(alpha) = multiple(profile.d(n), &factorial(n)) else {
                return Err(cx.inconsistent("D(n) is not a multiple of n!", Some(observed)));
            };
            let form = match (even, alpha) {
                (_, 1) => R::Boolean { n },
                (true, _) => return Err(cx.inconsistent("even rank with B(3) = D(3) = 6 forces D(n) = n!", Some(observed))),
                (false, _) => R::KSumBoolean { alpha, n },
            };
            cx.confirm(form, observed)
        }
        (Some(6), Some(8)) => {
            if !even {
                return Ok(R::OpenCase {
                    reason: "odd rank with B(3) = 6, D(3) = 8".into(),
                    profile: observed,
                });
            }
            let cubical_d = |k: usize| &two_pow(k - 1) * &factorial(k - 1);
            if !matches_on(b, 1..=n - 1, factorial) || !matches_on(d, 1..=n, cubical_d) {
                return Err(cx.inconsistent("B(3) = 6, D(3) = 8 at even rank forces the cubical factorial functions", Some(observed)));
            }
            Ok(R::CubicalFactorialType { n })
        }
        (Some(6), Some(10)) if n == 5 => Ok(R::OpenCase {
            reason: "rank 5 with B(3) = 6, D(3) = 10".into(),
            profile: observed,
        }),
        (Some(6), Some(4)) => {
            if !matches_on(b, 1..=n - 2, factorial) {
                return Err(cx.inconsistent("B(3) = 6, D(3) = 4 but B(k) is not k! below rank n - 1", Some(observed)));
            }
            let form = if even {
                match multiple(profile.b(n - 1), &factorial(n - 1)) {
                    Some(alpha) => R::SigmaStarKSumBoolean { alpha, n: n - 1 },
                    None => return Err(cx.inconsistent("B(n-1) is not a multiple of (n-1)!", Some(observed))),
                }
            } else {
                if profile.b(n - 1) != Some(&factorial(n - 1)) {
                    return Err(cx.inconsistent("odd rank with B(3) = 6, D(3) = 4 forces B(n-1) = (n-1)!", Some(observed)));
                }
                match multiple(profile.d(n), &(&factorial(n - 1) * 2)) {
                    Some(alpha) => R::KSumSigmaStarBoolean { alpha, n: n - 1 },
                    None => return Err(cx.inconsistent("D(n) is not a multiple of 2(n-1)!", Some(observed))),
                }
            };
            cx.confirm(form, observed)
        }
        (Some(4), _) => {
            let thin = |k: usize| two_pow(k - 1);
            if !matches_on(b, 1..=n - 2, thin) {
                return Err(cx.inconsistent("B(3) = 4 but B(k) is not 2^(k-1) below rank n - 1", Some(observed)));
            }
            if profile.b(n - 1) == Some(&thin(n - 1)) {
                return Ok(R::ThinSheffer { coatoms: profile.c_values().to_vec() });
            }
            match multiple(profile.b(n - 1), &thin(n - 1)) {
                Some(alpha) if even && alpha > 1 => cx.confirm(R::SigmaStarKSumButterfly { alpha, n: n - 1 }, observed),
                _ => Err(cx.inconsistent("B(3) = 4 and B(n-1) fits neither the thin nor the summed butterfly form", Some(observed))),
            }
        }
        _ => Err(cx.inconsistent("(B(3), D(3)) matches no branch of the Sheffer classification", Some(observed))),
    }
}

/// Classifies an Eulerian triangular poset with `B(k, k+3) = 6` for all
/// `k`: `⊞^α(B_n)` at odd rank (α reported even when it is 1), `B_n` at even
/// rank. Anything else is an open case.
pub fn classify_eulerian_triangular(p: &GradedPoset) -> Result<ClassificationResult, ClassifyError> {
    require_eulerian(p)?;
    let cx = Context { poset: p, census: IntervalCensus::of(p) };
    let profile = cx.census.triangular_profile().map_err(ClassifyError::NotTriangular)?;
    triangular_form(&cx, profile)
}

fn triangular_form(cx: &Context, profile: TriangularProfile) -> Result<ClassificationResult, ClassifyError> {
    let n = cx.poset.rank();
    let six = ChainCount::from(6u64);
    let observed = ObservedProfile::Triangular(profile.clone());
    if n < 4 {
        return Ok(R::OpenCase {
            reason: format!("triangular posets of rank {n} are classified only from rank 4 on"),
            profile: observed,
        });
    }
    if !(0..=n - 3).all(|k| profile.get(k, k + 3) == Some(&six)) {
        return Ok(R::OpenCase {
            reason: "B(k, k+3) is not 6 for every k".into(),
            profile: observed,
        });
    }
    let form = if n % 2 == 1 {
        match multiple(profile.get(0, n), &factorial(n)) {
            Some(alpha) => R::KSumBoolean { alpha, n },
            None => return Err(cx.inconsistent("B(0, n) is not a multiple of n!", Some(observed))),
        }
    } else {
        R::Boolean { n }
    };
    cx.confirm(form, observed)
}

/// Uses the most specific classifier the poset admits: binomial, then
/// Sheffer, then triangular.
pub fn classify(p: &GradedPoset) -> Result<ClassificationResult, ClassifyError> {
    require_eulerian(p)?;
    let cx = Context { poset: p, census: IntervalCensus::of(p) };
    if let Ok(profile) = cx.census.binomial_profile() {
        return binomial_form(&cx, profile);
    }
    if let Ok(profile) = cx.census.sheffer_profile() {
        return sheffer_form(&cx, profile);
    }
    let profile = cx.census.triangular_profile().map_err(ClassifyError::NotTriangular)?;
    triangular_form(&cx, profile)
}

/// The canonical poset of a structural form; `None` for forms that fix only
/// factorial functions.
pub fn realize(r: &ClassificationResult) -> Result<Option<GradedPoset>, PosetError> {
    Ok(Some(match r {
        R::Boolean { n } => boolean(*n)?,
        R::Butterfly { n } => butterfly(*n)?,
        R::KSumBoolean { alpha, n } => k_summation(&boolean(*n)?, *alpha)?,
        R::KSumButterfly { alpha, n } => k_summation(&butterfly(*n)?, *alpha)?,
        R::PolygonSum { parts } => {
            let gons = parts.iter().map(|&q| polygon(q)).collect::<Result<Vec<_>, _>>()?;
            box_sum(&gons)?
        }
        R::SigmaStarKSumBoolean { alpha, n } => dual_suspension(&k_summation(&boolean(*n)?, *alpha)?)?,
        R::KSumSigmaStarBoolean { alpha, n } => k_summation(&dual_suspension(&boolean(*n)?)?, *alpha)?,
        R::SigmaStarKSumButterfly { alpha, n } => dual_suspension(&k_summation(&butterfly(*n)?, *alpha)?)?,
        R::CubicalFactorialType { .. } | R::Rank4Case { .. } | R::ThinSheffer { .. } | R::OpenCase { .. } => {
            return Ok(None)
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThinCondition {
    /// Length-3 Sheffer intervals are sums of polygons, `C(3) ≥ 2`.
    PolygonSum,
    /// `C(2k) = 2` and both coatoms cover the same elements.
    CoatomsCoverSame,
    /// `C(2k+1)` is even and the coatoms pair up by their lower covers.
    CoatomPairing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThinCheck {
    /// Length of the Sheffer intervals `[0̂, y]` examined.
    pub length: usize,
    pub condition: ThinCondition,
    pub coatoms: ChainCount,
    pub holds: bool,
    /// Top of an offending interval.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Element>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThinShefferReport {
    pub rank: usize,
    pub checks: Vec<ThinCheck>,
}

impl ThinShefferReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Structural conditions satisfied by Eulerian Sheffer posets whose
/// binomial factorial function is `2^(k-1)`.
///
/// The poset must be Eulerian and Sheffer with `B(3) = 4` and
/// `B(k) = 2^(k-1)` for `k ≤ rank - 2`. A Sheffer interval `[0̂, y]` of length `L` is examined
/// when every binomial interval inside it is thin, that is when
/// `B(k) = 2^(k-1)` for `k ≤ L - 1`.
pub fn check_thin_sheffer_conditions(p: &GradedPoset) -> Result<ThinShefferReport, ClassifyError> {
    require_eulerian(p)?;
    let n = p.rank();
    if n < 4 {
        return Err(ClassifyError::PreconditionViolated(format!("rank {n} is below 4")));
    }
    let profile = IntervalCensus::of(p).sheffer_profile().map_err(ClassifyError::NotSheffer)?;
    let thin = |k: usize| profile.b(k) == Some(&two_pow(k - 1));
    if let Some(k) = (1..=(n - 2).max(3)).find(|&k| !thin(k)) {
        return Err(ClassifyError::PreconditionViolated(format!(
            "B({k}) = {}, not 2^{}",
            profile.b(k).expect("k < rank"),
            k - 1
        )));
    }
    let mut checks = Vec::new();
    for len in 3..=n {
        if !(1..len).all(thin) {
            break;
        }
        let coatoms = profile.c(len).expect("len <= rank").clone();
        let condition = match len {
            3 => ThinCondition::PolygonSum,
            _ if len % 2 == 0 => ThinCondition::CoatomsCoverSame,
            _ => ThinCondition::CoatomPairing,
        };
        let mut check = ThinCheck { length: len, condition, coatoms: coatoms.clone(), holds: true, witness: None, detail: None };
        let h = usize_of(&coatoms);
        let global = match condition {
            ThinCondition::PolygonSum if h.is_none_or(|h| h < 2) => Some(format!("C(3) = {coatoms} < 2")),
            ThinCondition::CoatomsCoverSame if h != Some(2) => Some(format!("C({len}) = {coatoms}, not 2")),
            ThinCondition::CoatomPairing if h.is_none_or(|h| h % 2 == 1) => Some(format!("C({len}) = {coatoms} is odd")),
            _ => None,
        };
        if let Some(detail) = global {
            check.holds = false;
            check.detail = Some(detail);
            checks.push(check);
            continue;
        }
        for &y in p.elements_of_rank(len) {
            let failure = match condition {
                ThinCondition::PolygonSum => {
                    let interval = p.interval(p.bottom(), y).expect("bottom is below everything");
                    polygon_parts(&interval).err()
                }
                ThinCondition::CoatomsCoverSame => {
                    let c = p.lower_covers(y);
                    (p.lower_covers(c[0]) != p.lower_covers(c[1]))
                        .then(|| format!("coatoms {} and {} cover different elements", c[0], c[1]))
                }
                ThinCondition::CoatomPairing => {
                    let mut groups: Vec<(&[Element], usize)> = Vec::new();
                    for &c in p.lower_covers(y) {
                        let below = p.lower_covers(c);
                        match groups.iter_mut().find(|(b, _)| *b == below) {
                            Some((_, size)) => *size += 1,
                            None => groups.push((below, 1)),
                        }
                    }
                    groups
                        .iter()
                        .find(|(_, size)| size % 2 == 1)
                        .map(|(below, size)| format!("{size} coatoms cover {below:?}; they do not pair up"))
                }
            };
            if let Some(detail) = failure {
                check.holds = false;
                check.witness = Some(y);
                check.detail = Some(detail);
                break;
            }
        }
        checks.push(check);
    }
    Ok(ThinShefferReport { rank: n, checks })
}
