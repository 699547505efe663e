//! Isomorphism of graded posets.
//!
//! Colors start from `(rank, up-degree, down-degree)` and are refined by the
//! multisets of neighbor colors until stable, on the disjoint union of both
//! posets so colors are comparable. A backtracking search then extends a
//! partial map one element at a time, visiting elements in an order that
//! keeps each new element adjacent to already-mapped ones.

use std::collections::HashMap;

use crate::poset::{Element, GradedPoset};

/// A rank- and cover-preserving bijection `p → q`, if one exists.
pub fn is_isomorphic(p: &GradedPoset, q: &GradedPoset) -> Option<Vec<Element>> {
    if p.len() != q.len() || p.rank() != q.rank() || p.cover_count() != q.cover_count() {
        return None;
    }
    let (cp, cq) = refine_colors(p, q);
    let mut hist_p = HashMap::new();
    let mut hist_q = HashMap::new();
    for &c in &cp {
        *hist_p.entry(c).or_insert(0usize) += 1;
    }
    for &c in &cq {
        *hist_q.entry(c).or_insert(0usize) += 1;
    }
    if hist_p != hist_q {
        return None;
    }
    let order = search_order(p, &cp, &hist_p);
    Search::new(p, q, &cp, &cq, order).run()
}

/// Checks that `map` is a bijection sending covers of `p` exactly onto the
/// covers of `q` and preserving ranks.
pub fn verify_isomorphism(p: &GradedPoset, q: &GradedPoset, map: &[Element]) -> bool {
    let n = p.len();
    if q.len() != n || map.len() != n || p.cover_count() != q.cover_count() {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|e| p.rank_of(e) == q.rank_of(map[e]))
        && p
            .covers()
            .all(|(x, y)| q.upper_covers(map[x]).binary_search(&map[y]).is_ok())
}

fn refine_colors(p: &GradedPoset, q: &GradedPoset) -> (Vec<u32>, Vec<u32>) {
    let initial = |g: &GradedPoset| -> Vec<(usize, usize, usize)> {
        (0..g.len())
            .map(|e| (g.rank_of(e), g.upper_covers(e).len(), g.lower_covers(e).len()))
            .collect()
    };
    let mut table = HashMap::new();
    let mut intern = |sig| {
        let next = table.len() as u32;
        *table.entry(sig).or_insert(next)
    };
    let mut cp: Vec<u32> = initial(p).into_iter().map(|s| intern(vec![s.0 as u32, s.1 as u32, s.2 as u32])).collect();
    let mut cq: Vec<u32> = initial(q).into_iter().map(|s| intern(vec![s.0 as u32, s.1 as u32, s.2 as u32])).collect();
    let mut classes = distinct(&cp, &cq);
    loop {
        let mut table = HashMap::new();
        let mut step = |g: &GradedPoset, colors: &[u32]| -> Vec<u32> {
            (0..g.len())
                .map(|e| {
                    let mut ups: Vec<u32> = g.upper_covers(e).iter().map(|&f| colors[f]).collect();
                    let mut downs: Vec<u32> = g.lower_covers(e).iter().map(|&f| colors[f]).collect();
                    ups.sort_unstable();
                    downs.sort_unstable();
                    let mut sig = Vec::with_capacity(ups.len() + downs.len() + 2);
                    sig.push(colors[e]);
                    sig.extend(ups);
                    sig.push(u32::MAX);
                    sig.extend(downs);
                    let next = table.len() as u32;
                    *table.entry(sig).or_insert(next)
                })
                .collect()
        };
        let np = step(p, &cp);
        let nq = step(q, &cq);
        let n_classes = distinct(&np, &nq);
        cp = np;
        cq = nq;
        if n_classes == classes {
            return (cp, cq);
        }
        classes = n_classes;
    }
}

fn distinct(a: &[u32], b: &[u32]) -> usize {
    let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// Greedy order: next is the unvisited element with the most visited
/// neighbors, then the rarer color, then the smaller id.
fn search_order(p: &GradedPoset, colors: &[u32], hist: &HashMap<u32, usize>) -> Vec<Element> {
    let n = p.len();
    let mut visited = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&e| !visited[e])
            .min_by_key(|&e| (std::cmp::Reverse(links[e]), hist[&colors[e]], e))
            .expect("unvisited element remains");
        visited[next] = true;
        order.push(next);
        for &f in p.upper_covers(next).iter().chain(p.lower_covers(next)) {
            links[f] += 1;
        }
    }
    order
}

struct Search<'a> {
    p: &'a GradedPoset,
    q: &'a GradedPoset,
    cp: &'a [u32],
    cq: &'a [u32],
    order: Vec<Element>,
    map: Vec<Option<Element>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(
        p: &'a GradedPoset,
        q: &'a GradedPoset,
        cp: &'a [u32],
        cq: &'a [u32],
        order: Vec<Element>,
    ) -> Self {
        let n = p.len();
        Search {
            p,
            q,
            cp,
            cq,
            order,
            map: vec![None; n],
            used: vec![false; n],
        }
    }

    fn candidates(&self, u: Element) -> Vec<Element> {
        let mapped_up = self.p.upper_covers(u).iter().find_map(|&w| self.map[w]);
        let mapped_down = self.p.lower_covers(u).iter().find_map(|&w| self.map[w]);
        let pool: Vec<Element> = match (mapped_up, mapped_down) {
            (Some(fw), _) => self.q.lower_covers(fw).to_vec(),
            (None, Some(fw)) => self.q.upper_covers(fw).to_vec(),
            (None, None) => (0..self.q.len()).collect(),
        };
        pool.into_iter()
            .filter(|&v| !self.used[v] && self.cq[v] == self.cp[u])
            .collect()
    }

    fn consistent(&self, u: Element, v: Element) -> bool {
        self.p
            .upper_covers(u)
            .iter()
            .filter_map(|&w| self.map[w])
            .all(|fw| self.q.upper_covers(v).binary_search(&fw).is_ok())
            && self
                .p
                .lower_covers(u)
                .iter()
                .filter_map(|&w| self.map[w])
                .all(|fw| self.q.lower_covers(v).binary_search(&fw).is_ok())
    }

    fn run(mut self) -> Option<Vec<Element>> {
        let n = self.order.len();
        let mut cands: Vec<Vec<Element>> = vec![Vec::new(); n];
        let mut next = vec![0usize; n];
        cands[0] = self.candidates(self.order[0]);
        let mut depth = 0usize;
        loop {
            let u = self.order[depth];
            if let Some(v) = self.map[u].take() {
                self.used[v] = false;
            }
            let mut chosen = None;
            while next[depth] < cands[depth].len() {
                let v = cands[depth][next[depth]];
                next[depth] += 1;
                if self.consistent(u, v) {
                    chosen = Some(v);
                    break;
                }
            }
            match chosen {
                Some(v) => {
                    self.map[u] = Some(v);
                    self.used[v] = true;
                    depth += 1;
                    if depth == n {
                        return Some(self.map.into_iter().map(|m| m.expect("complete map")).collect());
                    }
                    cands[depth] = self.candidates(self.order[depth]);
                    next[depth] = 0;
                }
                None => {
                    if depth == 0 {
                        return None;
                    }
                    depth -= 1;
                }
            }
        }
    }
}
