//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//! Runs without the libtest harness so the lines always print.

mod common;

use std::time::{Duration, Instant};

use common::{comparable_pairs, dfs_chains, factorial, interval_rank_counts, partitions_min2, pow2};
use eposet::catalog::standard_catalog;
use eposet::classify::{classify, classify_eulerian_sheffer, classify_eulerian_triangular, realize, ClassificationResult as R};
use eposet::constructors::*;
use eposet::enumerate::{enumerate_rank4_factorials, verify_rank3_classification, verify_rank4_classification};
use eposet::polytope::fixtures;
use eposet::profile::{binomial_profile, euler_poincare_residual, sheffer_profile, ProfileKind};
use eposet::{face_lattice_from_incidence, is_isomorphic, ChainCount, GradedPoset};
use num_bigint::BigUint;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(c: &ChainCount) -> BigUint {
    c.as_biguint().clone()
}

fn closed_form_factorials() -> Outcome {
    for n in 1..=7 {
        let b = binomial_profile(&boolean(n).unwrap()).map_err(|w| format!("boolean({n}): {w}"))?;
        for k in 1..=n {
            ensure(big(b.b(k).unwrap()) == factorial(k), || format!("boolean({n}) B({k})"))?;
        }
        let t = binomial_profile(&butterfly(n).unwrap()).map_err(|w| format!("butterfly({n}): {w}"))?;
        for k in 1..=n {
            ensure(big(t.b(k).unwrap()) == pow2(k - 1), || format!("butterfly({n}) B({k})"))?;
        }
    }
    for n in 1..=6 {
        let s = sheffer_profile(&cubical(n).unwrap()).map_err(|w| format!("cubical({n}): {w}"))?;
        for k in 1..=n {
            ensure(big(s.b(k).unwrap()) == factorial(k), || format!("cubical({n}) B({k})"))?;
        }
        for k in 1..=n + 1 {
            ensure(big(s.d(k).unwrap()) == pow2(k - 1) * factorial(k - 1), || format!("cubical({n}) D({k})"))?;
        }
    }
    Ok(())
}

fn eulerian_tests() -> Outcome {
    let mut families: Vec<(String, GradedPoset)> = Vec::new();
    for n in 1..=7 {
        families.push((format!("boolean({n})"), boolean(n).unwrap()));
        families.push((format!("butterfly({n})"), butterfly(n).unwrap()));
    }
    for q in 2..=8 {
        families.push((format!("polygon({q})"), polygon(q).unwrap()));
    }
    for n in 1..=6 {
        families.push((format!("cubical({n})"), cubical(n).unwrap()));
    }
    for (name, p) in &families {
        ensure(p.is_eulerian(), || format!("{name} should be Eulerian"))?;
        ensure(dual_suspension(p).unwrap().is_eulerian(), || format!("sigma_star({name}) should be Eulerian"))?;
        if p.rank() >= 2 {
            for alpha in 2..=3 {
                let s = k_summation(p, alpha).unwrap();
                let expect = p.rank() % 2 == 1;
                ensure(s.is_eulerian() == expect, || format!("ksum({alpha}, {name}): expected Eulerian = {expect}"))?;
            }
        }
    }
    for n in 2..=6 {
        ensure(!chain(n).unwrap().is_eulerian(), || format!("chain({n}) should not be Eulerian"))?;
    }
    ensure(!subspace_lattice(3, 2).unwrap().is_eulerian(), || "subspace(3,2)".into())?;
    ensure(!subspace_lattice(2, 3).unwrap().is_eulerian(), || "subspace(2,3)".into())
}

fn polytope_fixtures() -> Outcome {
    for (name, inc, sizes, triple) in [
        ("icosahedron", fixtures::icosahedron(), [12, 30, 20], [10u64, 6, 120]),
        ("dodecahedron", fixtures::dodecahedron(), [20, 30, 12], [6, 10, 120]),
    ] {
        let p = face_lattice_from_incidence(&inc).map_err(|e| format!("{name}: {e}"))?;
        ensure(p.rank() == 4 && p.is_eulerian(), || format!("{name}: not an Eulerian rank-4 poset"))?;
        let found: Vec<usize> = (1..=3).map(|k| p.elements_of_rank(k).len()).collect();
        ensure(found == sizes, || format!("{name}: rank sizes {found:?}"))?;
        let s = sheffer_profile(&p).map_err(|w| format!("{name}: not Sheffer: {w}"))?;
        let got = [s.b(3), s.d(3), s.d(4)].map(|c| c.and_then(ChainCount::to_u64).unwrap_or(0));
        ensure(got == triple, || format!("{name}: (B(3), D(3), D(4)) = {got:?}"))?;
    }
    Ok(())
}

fn rank3_census() -> Outcome {
    let report = verify_rank3_classification(8).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("failures: {:?}", report.failures))?;
    for t in 2..=8 {
        let got = report.counts.get(&t.to_string()).copied().unwrap_or(0);
        ensure(got == partitions_min2(t), || format!("t = {t}: {got} posets, expected {}", partitions_min2(t)))?;
    }
    let expected: Vec<usize> = (2..=8).map(partitions_min2).collect();
    ensure(expected == [1, 1, 2, 2, 4, 4, 7], || format!("partition oracle gives {expected:?}"))
}

fn rank4_census() -> Outcome {
    let report = verify_rank4_classification(30).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("failures: {:?}", report.failures))?;
    // the nine cases as factorial triples; cases 1 and 9 are families in r
    let fixed = [(10, 6, 120), (8, 6, 48), (6, 6, 24), (4, 6, 12), (6, 10, 120), (6, 8, 48), (6, 4, 12)];
    let in_table = |(b3, d3, d4): (usize, usize, usize)| {
        fixed.contains(&(b3, d3, d4))
            || (d4 % 4 == 0 && d4 / 4 >= 2 && ((b3 == d4 / 2 && d3 == 4) || (b3 == 4 && d3 == d4 / 2)))
    };
    let solutions = enumerate_rank4_factorials(30).map_err(|e| e.to_string())?;
    for s in &solutions {
        ensure(in_table(s.triple()), || format!("extra solution {s:?}"))?;
        let allowed = s.k1 == 2 || s.k2 == 2 || [(3, 3), (3, 4), (4, 3), (3, 5), (5, 3)].contains(&(s.k1, s.k2));
        ensure(allowed, || format!("unexpected (k1, k2) = ({}, {})", s.k1, s.k2))?;
    }
    let triples: Vec<_> = solutions.iter().map(|s| s.triple()).collect();
    for t in fixed {
        ensure(triples.contains(&t), || format!("missing case {t:?}"))?;
    }
    for r in 2..=30 {
        ensure(triples.contains(&(2 * r, 4, 4 * r)), || format!("family 1 missing r = {r}"))?;
        ensure(triples.contains(&(4, 2 * r, 4 * r)), || format!("family 9 missing r = {r}"))?;
    }
    Ok(())
}

fn round_trips() -> Outcome {
    let mut grid: Vec<(String, GradedPoset, R)> = Vec::new();
    for n in 4..=7 {
        for alpha in 1..=3 {
            if alpha > 1 && n % 2 == 0 {
                continue;
            }
            let b = k_summation(&boolean(n).unwrap(), alpha).unwrap();
            let t = k_summation(&butterfly(n).unwrap(), alpha).unwrap();
            let (eb, et) = if alpha == 1 {
                (R::Boolean { n }, R::Butterfly { n })
            } else {
                (R::KSumBoolean { alpha, n }, R::KSumButterfly { alpha, n })
            };
            if n % 2 == 1 {
                let sb = R::SigmaStarKSumBoolean { alpha, n };
                let st = if alpha == 1 { R::Butterfly { n: n + 1 } } else { R::SigmaStarKSumButterfly { alpha, n } };
                grid.push((format!("sigma_star(ksum({alpha}, boolean({n})))"), dual_suspension(&b).unwrap(), sb));
                grid.push((format!("sigma_star(ksum({alpha}, butterfly({n})))"), dual_suspension(&t).unwrap(), st));
            }
            grid.push((format!("ksum({alpha}, boolean({n}))"), b, eb));
            grid.push((format!("ksum({alpha}, butterfly({n}))"), t, et));
        }
    }
    for n in [4, 6] {
        for alpha in 1..=3 {
            let p = k_summation(&dual_suspension(&boolean(n).unwrap()).unwrap(), alpha).unwrap();
            grid.push((format!("ksum({alpha}, sigma_star(boolean({n})))"), p, R::KSumSigmaStarBoolean { alpha, n }));
        }
    }
    for n in [5, 7] {
        for alpha in 2..=3 {
            let p = k_summation(&boolean(n).unwrap(), alpha).unwrap();
            let r = classify_eulerian_sheffer(&p).map_err(|e| format!("ksum({alpha}, boolean({n})) as Sheffer: {e}"))?;
            ensure(r == R::KSumBoolean { alpha, n }, || format!("ksum({alpha}, boolean({n})) as Sheffer gave {r}"))?;
        }
    }
    for (name, p, expected) in grid {
        let r = classify(&p).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.canonical() == expected, || format!("{name}: classified as {r}, expected {expected}"))?;
        let model = realize(&r).map_err(|e| format!("{name}: {e}"))?.ok_or_else(|| format!("{name}: {r} is not structural"))?;
        ensure(is_isomorphic(&p, &model).is_some(), || format!("{name}: not isomorphic to {r}"))?;
    }
    Ok(())
}

fn counting_identities() -> Outcome {
    for entry in standard_catalog() {
        let (name, p) = (&entry.name, &entry.poset);
        if !p.is_eulerian() {
            continue;
        }
        let profile = binomial_profile(p).or_else(|_| sheffer_profile(p)).ok();
        for (x, y) in comparable_pairs(p) {
            let len = p.rank_of(y) - p.rank_of(x);
            let sign = if len % 2 == 0 { 1 } else { -1 };
            ensure(p.mobius(x, y) == Ok(sign), || format!("{name}: mu({x}, {y})"))?;
            if x == y {
                continue;
            }
            ensure(euler_poincare_residual(p, x, y) == Ok(0), || format!("{name}: residual on [{x}, {y}]"))?;
            let Some(profile) = &profile else { continue };
            let counts = interval_rank_counts(p, x, y);
            let b = |k: usize| big(profile.b(k).unwrap());
            let sheffer = profile.kind() == ProfileKind::Sheffer && x == p.bottom();
            let ks: Vec<usize> = if sheffer { (1..len).collect() } else { (0..=len).collect() };
            for k in ks {
                let (num, den) = if sheffer {
                    (big(profile.d(len).unwrap()), big(profile.d(k).unwrap()) * b(len - k))
                } else {
                    (b(len), b(k) * b(len - k))
                };
                ensure(&num % &den == BigUint::from(0u8) && num / den == BigUint::from(counts[k]), || {
                    format!("{name}: rank-count formula at k = {k} on [{x}, {y}]")
                })?;
            }
        }
    }
    let mut inner: Vec<(String, GradedPoset)> = Vec::new();
    for n in 2..=6 {
        inner.push((format!("boolean({n})"), boolean(n).unwrap()));
        inner.push((format!("butterfly({n})"), butterfly(n).unwrap()));
    }
    for alpha in 2..=3 {
        inner.push((format!("ksum({alpha}, boolean(5))"), k_summation(&boolean(5).unwrap(), alpha).unwrap()));
        inner.push((format!("ksum({alpha}, butterfly(5))"), k_summation(&butterfly(5).unwrap(), alpha).unwrap()));
    }
    for (name, p) in inner {
        let b = binomial_profile(&p).map_err(|w| format!("{name}: {w}"))?;
        let s = sheffer_profile(&dual_suspension(&p).unwrap()).map_err(|w| format!("sigma_star({name}): {w}"))?;
        for n in 2..=p.rank() + 1 {
            let expected = big(b.b(n - 1).unwrap()) * 2u8;
            ensure(big(s.d(n).unwrap()) == expected, || format!("sigma_star({name}): D({n}) != 2B({})", n - 1))?;
        }
    }
    Ok(())
}

fn chain_oracle() -> Outcome {
    let mut checked = 0;
    for entry in standard_catalog().into_iter().filter(|e| e.poset.len() <= 200) {
        let p = &entry.poset;
        for (x, y) in comparable_pairs(p) {
            let dp = p.count_maximal_chains(x, y).map_err(|e| e.to_string())?;
            ensure(big(&dp) == dfs_chains(p, x, y), || format!("{}: [{x}, {y}]", entry.name))?;
        }
        checked += 1;
    }
    ensure(checked >= 50, || format!("only {checked} posets checked"))
}

fn triangular_branch() -> Outcome {
    for alpha in 1..=3 {
        let p = k_summation(&boolean(5).unwrap(), alpha).unwrap();
        let r = classify_eulerian_triangular(&p).map_err(|e| e.to_string())?;
        ensure(r == R::KSumBoolean { alpha, n: 5 }, || format!("ksum({alpha}, boolean(5)) gave {r}"))?;
    }
    let r = classify_eulerian_triangular(&boolean(6).unwrap()).map_err(|e| e.to_string())?;
    ensure(r == R::Boolean { n: 6 }, || format!("boolean(6) gave {r}"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("closed-form factorial functions", 10, closed_form_factorials),
        ("Eulerian tests", 30, eulerian_tests),
        ("icosahedron and dodecahedron", 5, polytope_fixtures),
        ("rank-3 census", 60, rank3_census),
        ("rank-4 arithmetic census", 5, rank4_census),
        ("classification round trips", 300, round_trips),
        ("counting identities", 120, counting_identities),
        ("chain-count oracle", 60, chain_oracle),
        ("triangular branch", 10, triangular_branch),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {elapsed:.2?}, limit {limit} s"))
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
}
