//! Benchmark inputs shared by the criterion benches.

use eposet::constructors::*;
use eposet::GradedPoset;

/// Named posets of increasing size for the profile and Möbius benches.
pub fn sized_inputs() -> Vec<(&'static str, GradedPoset)> {
    vec![
        ("boolean(6)", boolean(6).unwrap()),
        ("butterfly(7)", butterfly(7).unwrap()),
        ("cubical(5)", cubical(5).unwrap()),
        ("ksum(3, boolean(5))", k_summation(&boolean(5).unwrap(), 3).unwrap()),
        ("subspace(3, 3)", subspace_lattice(3, 3).unwrap()),
    ]
}

/// A poset and a relabeled copy of it, so the isomorphism search cannot
/// succeed on the identity map.
pub fn shuffled_pair(p: GradedPoset) -> (GradedPoset, GradedPoset) {
    let n = p.len();
    // reverse the elements inside each rank level
    let mut perm: Vec<usize> = (0..n).collect();
    for k in 0..=p.rank() {
        let level = p.elements_of_rank(k);
        for (i, &e) in level.iter().enumerate() {
            perm[e] = level[level.len() - 1 - i];
        }
    }
    let q = p.permuted(&perm).unwrap();
    (p, q)
}
