//! Independent reference computations for the integration tests. Nothing
//! here calls the library's counting code.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use eposet::{Element, GradedPoset};
use num_bigint::BigUint;

pub fn factorial(k: usize) -> BigUint {
    (1..=k as u64).fold(BigUint::from(1u8), |acc, i| acc * i)
}

pub fn pow2(k: usize) -> BigUint {
    BigUint::from(1u8) << k
}

/// Saturated chains from `x` to `y` by plain depth-first search.
pub fn dfs_chains(p: &GradedPoset, x: Element, y: Element) -> BigUint {
    fn go(p: &GradedPoset, z: Element, y: Element) -> u64 {
        if z == y {
            return 1;
        }
        if p.rank_of(z) >= p.rank_of(y) {
            return 0;
        }
        p.upper_covers(z).iter().map(|&w| go(p, w, y)).sum()
    }
    BigUint::from(go(p, x, y))
}

/// Elements reachable upwards from `x` along covers.
pub fn up_set(p: &GradedPoset, x: Element) -> BTreeSet<Element> {
    let mut seen = BTreeSet::from([x]);
    let mut queue = VecDeque::from([x]);
    while let Some(z) = queue.pop_front() {
        for &w in p.upper_covers(z) {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Number of elements of each relative rank in `[x, y]`, found by search.
pub fn interval_rank_counts(p: &GradedPoset, x: Element, y: Element) -> Vec<usize> {
    let len = p.rank_of(y) - p.rank_of(x);
    let mut counts = vec![0; len + 1];
    for z in up_set(p, x) {
        if up_set(p, z).contains(&y) {
            counts[p.rank_of(z) - p.rank_of(x)] += 1;
        }
    }
    counts
}

/// All pairs `x ≤ y`.
pub fn comparable_pairs(p: &GradedPoset) -> Vec<(Element, Element)> {
    (0..p.len()).flat_map(|x| up_set(p, x).into_iter().map(move |y| (x, y))).collect()
}

/// Partitions of `t` into parts of size at least 2.
pub fn partitions_min2(t: usize) -> usize {
    fn count(rest: usize, max_part: usize) -> usize {
        if rest == 0 {
            return 1;
        }
        (2..=max_part.min(rest)).map(|part| count(rest - part, part)).sum()
    }
    count(t, t)
}

/// Isomorphism by trying every rank-preserving bijection. Only for tiny
/// posets.
pub fn brute_force_isomorphic(p: &GradedPoset, q: &GradedPoset) -> bool {
    if p.len() != q.len() || p.rank() != q.rank() {
        return false;
    }
    let pc: BTreeSet<(Element, Element)> = p.covers().collect();
    let qc: BTreeSet<(Element, Element)> = q.covers().collect();
    if pc.len() != qc.len() {
        return false;
    }
    let mut map = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    fn extend(
        i: usize,
        p: &GradedPoset,
        q: &GradedPoset,
        pc: &BTreeSet<(Element, Element)>,
        qc: &BTreeSet<(Element, Element)>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == p.len() {
            return pc.iter().all(|&(a, b)| qc.contains(&(map[a], map[b])));
        }
        for j in 0..q.len() {
            if !used[j] && q.rank_of(j) == p.rank_of(i) {
                map[i] = j;
                used[j] = true;
                if extend(i + 1, p, q, pc, qc, map, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    extend(0, p, q, &pc, &qc, &mut map, &mut used)
}

/// Möbius value as the alternating count of strict chains `x < … < y`.
pub fn philip_hall_mobius(p: &GradedPoset, x: Element, y: Element) -> i64 {
    // chains[z][k]: strict chains of length k from x to z
    let between: Vec<Element> = up_set(p, x).into_iter().filter(|&z| up_set(p, z).contains(&y)).collect();
    let len = p.rank_of(y) - p.rank_of(x);
    let mut chains = std::collections::BTreeMap::new();
    let mut order = between.clone();
    order.sort_by_key(|&z| p.rank_of(z));
    for &z in &order {
        let mut row = vec![0i64; len + 1];
        if z == x {
            row[0] = 1;
        } else {
            for &w in &order {
                if w != z && p.rank_of(w) < p.rank_of(z) && up_set(p, w).contains(&z) {
                    let prev: &Vec<i64> = &chains[&w];
                    for k in 0..len {
                        row[k + 1] += prev[k];
                    }
                }
            }
        }
        chains.insert(z, row);
    }
    chains[&y].iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c } else { -c }).sum()
}

/// Subspaces of the `n`-dimensional space over the prime field `F_q`,
/// found by testing every subset of vectors for closure.
pub fn brute_force_subspaces(n: u32, q: usize) -> Vec<Vec<usize>> {
    let size = q.pow(n);
    assert!(size <= 16, "too many subsets");
    let digits = |v: usize| (0..n).map(|i| (v / q.pow(i)) % q).collect::<Vec<_>>();
    let encode = |d: &[usize]| d.iter().enumerate().map(|(i, &x)| x * q.pow(i as u32)).sum::<usize>();
    let add = |a: usize, b: usize| {
        let (da, db) = (digits(a), digits(b));
        encode(&da.iter().zip(&db).map(|(x, y)| (x + y) % q).collect::<Vec<_>>())
    };
    let scale = |c: usize, a: usize| encode(&digits(a).iter().map(|x| (c * x) % q).collect::<Vec<_>>());
    let mut out = Vec::new();
    for mask in 0u32..(1 << size) {
        let set: Vec<usize> = (0..size).filter(|&v| mask & (1 << v) != 0).collect();
        let has = |v: usize| mask & (1 << v) != 0;
        if !has(0) {
            continue;
        }
        let closed = set.iter().all(|&a| set.iter().all(|&b| has(add(a, b))) && (0..q).all(|c| has(scale(c, a))));
        if closed {
            out.push(set);
        }
    }
    out
}
