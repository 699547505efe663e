//! A fixed list of named posets used for cross-checks.

use std::collections::BTreeMap;

use crate::classify::{classify, realize, ClassifyError};
use crate::constructors::*;
use crate::enumerate::Report;
use crate::iso::is_isomorphic;
use crate::polytope::{face_lattice_from_incidence, fixtures};
use crate::poset::GradedPoset;
use crate::profile::{
    binomial_euler_poincare_sum, euler_poincare_residual, sheffer_euler_poincare_sum, verify_rank_count_formulas,
    IntervalCensus, ProfileKind,
};

pub struct CatalogEntry {
    pub name: String,
    pub poset: GradedPoset,
}

fn entry(name: impl Into<String>, poset: Result<GradedPoset, crate::PosetError>) -> CatalogEntry {
    CatalogEntry { name: name.into(), poset: poset.expect("catalog constructions are valid") }
}

/// Standard families, operators applied to them, subspace lattices and
/// the bundled face lattices. Deterministic order; at most a few hundred
/// elements per poset.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(entry(format!("boolean({n})"), boolean(n)));
    }
    for n in 1..=7 {
        out.push(entry(format!("butterfly({n})"), butterfly(n)));
    }
    for n in 0..=4 {
        out.push(entry(format!("chain({n})"), chain(n)));
    }
    for q in 2..=8 {
        out.push(entry(format!("polygon({q})"), polygon(q)));
    }
    for n in 1..=4 {
        out.push(entry(format!("cubical({n})"), cubical(n)));
    }
    for (n, q) in [(2, 2), (3, 2), (2, 3)] {
        out.push(entry(format!("subspace({n},{q})"), subspace_lattice(n, q)));
    }
    for n in 3..=5 {
        out.push(entry(format!("sigma_star(boolean({n}))"), boolean(n).and_then(|p| dual_suspension(&p))));
        out.push(entry(format!("sigma_star(butterfly({n}))"), butterfly(n).and_then(|p| dual_suspension(&p))));
    }
    out.push(entry("sigma_star(polygon(5))", polygon(5).and_then(|p| dual_suspension(&p))));
    out.push(entry("sigma(boolean(3))", boolean(3).and_then(|p| suspension(&p))));
    out.push(entry("sigma(polygon(5))", polygon(5).and_then(|p| suspension(&p))));
    out.push(entry("dual(cubical(3))", cubical(3).map(|p| p.dual())));
    for alpha in 2..=3 {
        out.push(entry(format!("ksum({alpha}, boolean(3))"), boolean(3).and_then(|p| k_summation(&p, alpha))));
        out.push(entry(format!("ksum({alpha}, boolean(5))"), boolean(5).and_then(|p| k_summation(&p, alpha))));
        out.push(entry(format!("ksum({alpha}, butterfly(5))"), butterfly(5).and_then(|p| k_summation(&p, alpha))));
        out.push(entry(
            format!("sigma_star(ksum({alpha}, boolean(5)))"),
            boolean(5).and_then(|p| k_summation(&p, alpha)).and_then(|p| dual_suspension(&p)),
        ));
        out.push(entry(
            format!("sigma_star(ksum({alpha}, butterfly(5)))"),
            butterfly(5).and_then(|p| k_summation(&p, alpha)).and_then(|p| dual_suspension(&p)),
        ));
        out.push(entry(
            format!("ksum({alpha}, sigma_star(boolean(4)))"),
            boolean(4).and_then(|p| dual_suspension(&p)).and_then(|p| k_summation(&p, alpha)),
        ));
    }
    out.push(entry("ksum(2, boolean(4))", boolean(4).and_then(|p| k_summation(&p, 2))));
    out.push(entry("boxsum(polygon(3), polygon(4))", box_sum(&[polygon(3).unwrap(), polygon(4).unwrap()])));
    out.push(entry(
        "boxsum(polygon(4), polygon(3), polygon(3))",
        box_sum(&[polygon(4).unwrap(), polygon(3).unwrap(), polygon(3).unwrap()]),
    ));
    out.push(entry("segre(boolean(2), boolean(2))", rank_product(&boolean(2).unwrap(), &boolean(2).unwrap())));
    out.push(entry("segre(butterfly(3), butterfly(3))", rank_product(&butterfly(3).unwrap(), &butterfly(3).unwrap())));
    out.push(entry("segre(boolean(3), cubical(2))", rank_product(&boolean(3).unwrap(), &cubical(2).unwrap())));
    for name in ["triangle", "square", "cube", "icosahedron", "dodecahedron"] {
        let inc = fixtures::by_name(name).expect("bundled fixture");
        out.push(entry(name, face_lattice_from_incidence(&inc)));
    }
    out
}

/// Internal consistency of every catalog poset: both Eulerian tests agree
/// and match the residuals; binomial implies Sheffer implies triangular
/// with matching values; on Eulerian posets the rank-count formulas and
/// Euler–Poincaré sums hold; structural classifications realize to an
/// isomorphic poset.
pub fn verify_catalog() -> Report {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    for CatalogEntry { name, poset } in standard_catalog() {
        check(&name, &poset, &mut counts, &mut failures);
    }
    Report { suite: "catalog".into(), bound: 0, counts, failures }
}

/// The catalog checks for a single poset, which in addition must be
/// Eulerian.
pub fn verify_poset(name: &str, p: &GradedPoset) -> Report {
    let mut counts = BTreeMap::new();
    let mut failures = Vec::new();
    check(name, p, &mut counts, &mut failures);
    if !p.is_eulerian() {
        failures.push(format!("{name}: not Eulerian"));
    }
    Report { suite: "poset".into(), bound: 0, counts, failures }
}

fn check(name: &str, p: &GradedPoset, counts: &mut BTreeMap<String, usize>, failures: &mut Vec<String>) {
    let mut bump = |key: &str| *counts.entry(key.to_string()).or_default() += 1;
    let mut fail = |msg: String| failures.push(format!("{name}: {msg}"));
    bump("posets");
    let eulerian = p.is_eulerian();
    if eulerian != p.is_eulerian_by_mobius() {
        fail("parity and Möbius Eulerian tests disagree".into());
    }
    let residuals_vanish = (0..p.len())
        .all(|x| (0..p.len()).all(|y| x == y || !p.leq(x, y) || euler_poincare_residual(p, x, y) == Ok(0)));
    if residuals_vanish != eulerian {
        fail("Euler-Poincaré residuals disagree with the Eulerian test".into());
    }
    let census = IntervalCensus::of(p);
    let binomial = census.binomial_profile().ok();
    let sheffer = census.sheffer_profile().ok();
    let triangular = census.triangular_profile().ok();
    if binomial.is_some() && sheffer.is_none() || sheffer.is_some() && triangular.is_none() {
        fail("profile hierarchy broken".into());
    }
    if let (Some(s), Some(t)) = (&sheffer, &triangular) {
        let n = p.rank();
        let agrees = (1..=n).all(|k| t.get(0, k) == s.d(k)) && (1..=n).all(|m| (m..=n).all(|k| t.get(m, k) == s.b(k - m)));
        if !agrees {
            fail("triangular values disagree with the Sheffer profile".into());
        }
    }
    if binomial.is_some() {
        bump("binomial");
    }
    if sheffer.is_some() {
        bump("sheffer");
    }
    if !eulerian {
        return;
    }
    bump("eulerian");
    if let Some(profile) = &binomial.or(sheffer) {
        if !verify_rank_count_formulas(p, profile) {
            fail("rank-count formulas fail".into());
        }
        let zero = num_bigint::BigInt::from(0);
        if profile.kind() == ProfileKind::Binomial {
            if let Some(n) = (1..=p.rank()).find(|&n| binomial_euler_poincare_sum(profile, n) != Some(zero.clone())) {
                fail(format!("binomial Euler-Poincaré sum nonzero at n = {n}"));
            }
        } else if let Some(m) = (2..=p.rank()).find(|&m| sheffer_euler_poincare_sum(profile, m) != Some(zero.clone())) {
            fail(format!("Sheffer Euler-Poincaré sum nonzero at m = {m}"));
        }
    }
    match classify(p) {
        Err(ClassifyError::Poset(crate::PosetError::RankTooSmall { .. })) if p.rank() == 0 => {}
        Ok(r) if r.is_structural() => match realize(&r) {
            Ok(Some(model)) if is_isomorphic(p, &model).is_some() => bump("realized"),
            _ => fail(format!("{r} does not realize to an isomorphic poset")),
        },
        Ok(_) => bump("non_structural"),
        Err(ClassifyError::NotTriangular(_)) => bump("not_triangular"),
        Err(e) => fail(e.to_string()),
    }
}
