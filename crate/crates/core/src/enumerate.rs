//! Exhaustive checks at ranks 3 and 4.
//!
//! At rank 3 an Eulerian poset is determined by its middle layer: each
//! coatom covers two atoms and each atom lies under two coatoms, so the
//! middle Hasse diagram is a 2-regular bipartite graph. Reading coatoms as
//! edges between atoms turns it into a loopless 2-regular multigraph on the
//! atoms, which [`enumerate_rank3`] generates edge by edge. At rank 4 only
//! the arithmetic of the element counts is enumerated.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify_eulerian_sheffer, rank4_case, realize, ClassificationResult};
use crate::constructors::{boolean, cubical, dual_suspension, polygon, suspension};
use crate::count::ChainCount;
use crate::iso::is_isomorphic;
use crate::polytope::{face_lattice_from_incidence, fixtures};
use crate::poset::GradedPoset;
use crate::profile::sheffer_profile;

/// Largest middle-layer size accepted by [`enumerate_rank3`].
pub const MAX_MIDDLE: usize = 16;

/// Smallest `max_r` accepted by [`verify_rank4_classification`]; below it
/// the icosahedron and dodecahedron cases cannot appear.
pub const MIN_RANK4_BOUND: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("bound {bound} exceeds the limit {limit}")]
    BoundExceeded { bound: usize, limit: usize },
    #[error("bound {bound} is below the minimum {minimum}")]
    BoundTooSmall { bound: usize, minimum: usize },
}

/// Outcome of a verification suite. `counts` maps a size or case label to
/// the number of objects seen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub bound: usize,
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rank-3 poset whose coatoms are the given atom pairs; atoms are
/// `1..=t`, coatoms follow in edge order, then the top.
fn rank3_from_edges(t: usize, edges: &[(usize, usize)]) -> GradedPoset {
    let top = 2 * t + 1;
    let mut ranks = vec![0];
    ranks.extend(std::iter::repeat_n(1, t));
    ranks.extend(std::iter::repeat_n(2, t));
    ranks.push(3);
    let mut covers = Vec::with_capacity(4 * t);
    for a in 1..=t {
        covers.push((0, a));
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        let c = t + 1 + i;
        covers.push((a + 1, c));
        covers.push((b + 1, c));
        covers.push((c, top));
    }
    GradedPoset::new(ranks, covers).expect("a 2-regular middle layer gives a graded poset")
}

/// Sorted cycle lengths of a 2-regular multigraph; a digon has length 2.
fn cycle_type(t: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); t];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut seen = vec![false; t];
    let mut lengths = Vec::new();
    for start in 0..t {
        if seen[start] {
            continue;
        }
        let (mut prev_edge, mut v, mut len) = (usize::MAX, start, 0);
        loop {
            seen[v] = true;
            len += 1;
            let &(w, e) = adj[v].iter().find(|&&(_, e)| e != prev_edge).expect("degree 2");
            prev_edge = e;
            v = w;
            if v == start {
                break;
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Calls `emit` on every loopless 2-regular multigraph on `t` vertices
/// reachable by adding edges from the lowest vertex with spare degree to
/// either an open vertex or the lowest untouched one. Every isomorphism
/// class is reached at least once.
fn grow(t: usize, deg: &mut Vec<u8>, edges: &mut Vec<(usize, usize)>, emit: &mut dyn FnMut(&[(usize, usize)])) {
    if edges.len() == t {
        emit(edges);
        return;
    }
    let Some(a) = (0..t).find(|&v| deg[v] < 2) else { return };
    let fresh = (0..t).find(|&v| v != a && deg[v] == 0);
    let open = (0..t).filter(|&v| v != a && deg[v] == 1);
    let partners: Vec<usize> = open.chain(fresh).collect();
    for b in partners {
        deg[a] += 1;
        deg[b] += 1;
        edges.push((a, b));
        grow(t, deg, edges, emit);
        edges.pop();
        deg[a] -= 1;
        deg[b] -= 1;
    }
}

/// Eulerian-type rank-3 posets with `2 ≤ t ≤ max_middle` atoms, one per
/// isomorphism class, ordered by `t` and then by descending cycle type.
pub fn enumerate_rank3(max_middle: usize) -> Result<Vec<GradedPoset>, EnumerateError> {
    if max_middle > MAX_MIDDLE {
        return Err(EnumerateError::BoundExceeded { bound: max_middle, limit: MAX_MIDDLE });
    }
    if max_middle == 0 {
        return Err(EnumerateError::BoundTooSmall { bound: 0, minimum: 1 });
    }
    let mut out = Vec::new();
    for t in 2..=max_middle {
        // cycle types are a complete invariant for this family
        let mut classes: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        grow(t, &mut vec![0; t], &mut Vec::with_capacity(t), &mut |edges| {
            classes.entry(cycle_type(t, edges)).or_insert_with(|| edges.to_vec());
        });
        for (_, edges) in classes.into_iter().rev() {
            out.push(rank3_from_edges(t, &edges));
        }
    }
    Ok(out)
}

/// Checks every poset of [`enumerate_rank3`]: it is Eulerian, classifies as
/// a sum of polygons, and is isomorphic to that sum.
pub fn verify_rank3_classification(max_middle: usize) -> Result<Report, EnumerateError> {
    let posets = enumerate_rank3(max_middle)?;
    let mut counts: BTreeMap<usize, usize> = (2..=max_middle).map(|t| (t, 0)).collect();
    let mut failures = Vec::new();
    for p in &posets {
        let t = p.elements_of_rank(1).len();
        *counts.entry(t).or_default() += 1;
        if !p.is_eulerian() {
            failures.push(format!("t = {t}: not Eulerian"));
            continue;
        }
        match classify_eulerian_sheffer(p) {
            Ok(r @ ClassificationResult::PolygonSum { .. }) => {
                let model = realize(&r).ok().flatten();
                if !model.is_some_and(|m| is_isomorphic(p, &m).is_some()) {
                    failures.push(format!("t = {t}: not isomorphic to {r}"));
                }
            }
            Ok(r) => failures.push(format!("t = {t}: classified as {r}")),
            Err(e) => failures.push(format!("t = {t}: {e}")),
        }
    }
    Ok(Report {
        suite: "rank3".into(),
        bound: max_middle,
        counts: counts.into_iter().map(|(t, c)| (t.to_string(), c)).collect(),
        failures,
    })
}

/// Element counts of a rank-4 Eulerian Sheffer poset with `B(3) = 2k1`,
/// `D(3) = 2k2`: `m` atoms, `r` rank-2 elements, `n` coatoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Rank4Solution {
    pub k1: usize,
    pub k2: usize,
    pub m: usize,
    pub r: usize,
    pub n: usize,
    #[serde(rename = "D4")]
    pub d4: ChainCount,
}

impl Rank4Solution {
    /// `(B(3), D(3), D(4))`
    pub fn triple(&self) -> (usize, usize, usize) {
        (2 * self.k1, 2 * self.k2, 4 * self.r)
    }
}

/// All integer solutions of `2 + r = m + n`, `2r = k1·m = k2·n` with
/// `2 ≤ r ≤ max_r` and `m, n ≥ 1`, ordered by `(k1, k2, r)`.
pub fn enumerate_rank4_factorials(max_r: usize) -> Result<Vec<Rank4Solution>, EnumerateError> {
    if max_r < 2 {
        return Err(EnumerateError::BoundTooSmall { bound: max_r, minimum: 2 });
    }
    let mut out = BTreeSet::new();
    for r in 2..=max_r {
        for k1 in (1..=2 * r).filter(|k| (2 * r) % k == 0) {
            for k2 in (1..=2 * r).filter(|k| (2 * r) % k == 0) {
                let (m, n) = (2 * r / k1, 2 * r / k2);
                if m + n == r + 2 {
                    out.insert(Rank4Solution { k1, k2, m, r, n, d4: ChainCount::from(4 * r as u64) });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Posets realizing each rank-4 case, with a display name.
pub fn rank4_witnesses() -> Vec<(u8, &'static str, GradedPoset)> {
    let face = |f: crate::polytope::FaceIncidence| face_lattice_from_incidence(&f).expect("fixture is polytopal");
    let b3 = boolean(3).expect("valid");
    let p5 = polygon(5).expect("valid");
    vec![
        (1, "sigma_star(polygon(5))", dual_suspension(&p5).expect("rank 3")),
        (2, "icosahedron", face(fixtures::icosahedron())),
        (3, "dual(cubical(3))", cubical(3).expect("valid").dual()),
        (4, "boolean(4)", boolean(4).expect("valid")),
        (5, "sigma(boolean(3))", suspension(&b3).expect("rank 3")),
        (6, "dodecahedron", face(fixtures::dodecahedron())),
        (7, "cubical(3)", cubical(3).expect("valid")),
        (8, "sigma_star(boolean(3))", dual_suspension(&b3).expect("rank 3")),
        (9, "sigma(polygon(5))", suspension(&p5).expect("rank 3")),
    ]
}

/// Checks that the rank-4 solutions fall into exactly the nine cases, each
/// case occurring, and that each witness poset has the profile and the
/// classification of its case.
pub fn verify_rank4_classification(max_r: usize) -> Result<Report, EnumerateError> {
    if max_r < MIN_RANK4_BOUND {
        return Err(EnumerateError::BoundTooSmall { bound: max_r, minimum: MIN_RANK4_BOUND });
    }
    let mut counts: BTreeMap<String, usize> = (1..=9).map(|c| (c.to_string(), 0)).collect();
    let mut failures = Vec::new();
    for s in enumerate_rank4_factorials(max_r)? {
        let (b3, d3, d4) = s.triple();
        match rank4_case(b3, d3, d4) {
            Some((case, _)) => *counts.get_mut(&case.to_string()).expect("cases 1..=9") += 1,
            None => failures.push(format!("({b3}, {d3}, {d4}) from k1 = {}, k2 = {} is not a known case", s.k1, s.k2)),
        }
    }
    for (case, count) in &counts {
        if *count == 0 {
            failures.push(format!("case {case} has no solution"));
        }
    }
    for (case, name, p) in rank4_witnesses() {
        match sheffer_profile(&p) {
            Ok(profile) => {
                let small = |c: Option<&ChainCount>| c.and_then(ChainCount::to_u64).unwrap_or(0) as usize;
                let triple = (small(profile.b(3)), small(profile.d(3)), small(profile.d(4)));
                if rank4_case(triple.0, triple.1, triple.2).map(|c| c.0) != Some(case) {
                    failures.push(format!("{name}: triple {triple:?} is not case {case}"));
                }
            }
            Err(w) => failures.push(format!("{name}: not Sheffer ({w})")),
        }
        match classify_eulerian_sheffer(&p) {
            Ok(ClassificationResult::Rank4Case { case: c, .. }) if c == case => {}
            Ok(r) => failures.push(format!("{name}: classified as {r}, expected case {case}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    Ok(Report { suite: "rank4".into(), bound: max_r, counts, failures })
}
