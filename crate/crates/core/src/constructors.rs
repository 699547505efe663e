//! Named poset families and the operators that combine them.

use crate::error::PosetError;
use crate::poset::{Element, GradedPoset, MAX_ELEMENTS};

fn ensure_size(elements: u128) -> Result<usize, PosetError> {
    if elements > MAX_ELEMENTS as u128 {
        return Err(PosetError::TooLarge {
            elements: usize::try_from(elements).unwrap_or(usize::MAX),
            limit: MAX_ELEMENTS,
        });
    }
    Ok(elements as usize)
}

fn built(ranks: Vec<usize>, covers: Vec<(Element, Element)>) -> GradedPoset {
    GradedPoset::new(ranks, covers).expect("constructor output is a valid graded poset")
}

/// The boolean lattice `B_n`: subsets of an `n`-set, element id = bitmask.
pub fn boolean(n: usize) -> Result<GradedPoset, PosetError> {
    if n == 0 {
        return Err(PosetError::InvalidArgument("boolean(n) needs n >= 1".into()));
    }
    if n >= 64 {
        return Err(PosetError::TooLarge { elements: usize::MAX, limit: MAX_ELEMENTS });
    }
    let size = ensure_size(1u128 << n)?;
    let ranks = (0..size).map(|m| m.count_ones() as usize).collect();
    let covers = (0..size)
        .flat_map(|m| (0..n).filter(move |i| m & (1 << i) == 0).map(move |i| (m, m | (1 << i))))
        .collect();
    Ok(built(ranks, covers))
}

/// The butterfly poset `T_n`: two elements on every interior rank, each
/// covering both elements of the rank below.
pub fn butterfly(n: usize) -> Result<GradedPoset, PosetError> {
    if n == 0 {
        return Err(PosetError::InvalidArgument("butterfly(n) needs n >= 1".into()));
    }
    let size = ensure_size(2 * n as u128)?;
    let top = size - 1;
    let level = |k: usize| [1 + 2 * (k - 1), 2 + 2 * (k - 1)];
    let mut ranks = vec![0; size];
    ranks[top] = n;
    let mut covers = Vec::new();
    for k in 1..n {
        for e in level(k) {
            ranks[e] = k;
            if k == 1 {
                covers.push((0, e));
            } else {
                covers.extend(level(k - 1).map(|d| (d, e)));
            }
        }
    }
    if n == 1 {
        covers.push((0, top));
    } else {
        covers.extend(level(n - 1).map(|d| (d, top)));
    }
    Ok(built(ranks, covers))
}

/// The chain with `n + 1` elements.
pub fn chain(n: usize) -> Result<GradedPoset, PosetError> {
    let size = ensure_size(n as u128 + 1)?;
    Ok(built((0..size).collect(), (1..size).map(|e| (e - 1, e)).collect()))
}

/// Face lattice `P_q` of a `q`-gon. Vertices are `1..=q`, edge `q + i`
/// joins vertices `i` and `i + 1` (cyclically). `q = 2` gives the digon.
pub fn polygon(q: usize) -> Result<GradedPoset, PosetError> {
    if q < 2 {
        return Err(PosetError::DegenerateGon(q));
    }
    let size = ensure_size(2 * q as u128 + 2)?;
    let top = size - 1;
    let mut ranks = vec![0; size];
    let mut covers = Vec::new();
    for i in 1..=q {
        let edge = q + i;
        ranks[i] = 1;
        ranks[edge] = 2;
        covers.push((0, i));
        covers.push((i, edge));
        covers.push((i % q + 1, edge));
        covers.push((edge, top));
    }
    ranks[top] = 3;
    Ok(built(ranks, covers))
}

/// Face lattice of the `n`-cube, `T^n ∪ {0̂}`, where `T` has two minimal
/// elements below one maximal element.
///
/// A face is a word over `{0, 1, *}` of length `n` (base-3 digits 0, 1, 2);
/// its id is the word's value plus one, and id 0 is the empty face.
pub fn cubical(n: usize) -> Result<GradedPoset, PosetError> {
    if n == 0 {
        return Err(PosetError::InvalidArgument("cubical(n) needs n >= 1".into()));
    }
    if n > 40 {
        return Err(PosetError::TooLarge { elements: usize::MAX, limit: MAX_ELEMENTS });
    }
    let words = 3u128.pow(n as u32);
    let size = ensure_size(words + 1)?;
    let words = words as usize;
    let digits = |w: usize| {
        let mut w = w;
        (0..n).map(move |_| {
            let d = w % 3;
            w /= 3;
            d
        })
    };
    let mut ranks = vec![0; size];
    let mut covers = Vec::new();
    let mut place = 1usize;
    let places: Vec<usize> = (0..n)
        .map(|_| {
            let p = place;
            place *= 3;
            p
        })
        .collect();
    for w in 0..words {
        let stars = digits(w).filter(|&d| d == 2).count();
        ranks[w + 1] = stars + 1;
        if stars == 0 {
            covers.push((0, w + 1));
        }
        for (i, d) in digits(w).enumerate() {
            if d == 2 {
                covers.push((w - 2 * places[i] + 1, w + 1));
                covers.push((w - places[i] + 1, w + 1));
            }
        }
    }
    Ok(built(ranks, covers))
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Lattice of subspaces of `F_q^n` ordered by inclusion, `q` prime and
/// `1 ≤ n ≤ 4`. Subspaces are enumerated by reduced row-echelon form:
/// by dimension, then pivot set, then free entries.
pub fn subspace_lattice(n: usize, q: usize) -> Result<GradedPoset, PosetError> {
    if !(1..=4).contains(&n) || !is_prime(q) || q > 1 << 16 {
        return Err(PosetError::UnsupportedField { n, q });
    }
    let total: u128 = (0..=n).map(|k| gaussian_binomial(n, k, q as u128)).sum();
    ensure_size(total)?;

    let mut spaces: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut ranks = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|i| {
                    let pivots = &pivots;
                    (pivots[i] + 1..n).filter(move |j| !pivots.contains(j)).map(move |j| (i, j))
                })
                .collect();
            let mut fill = vec![0usize; free.len()];
            loop {
                let mut rows = vec![vec![0usize; n]; k];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                for (&(i, j), &v) in free.iter().zip(&fill) {
                    rows[i][j] = v;
                }
                spaces.push(rows);
                ranks.push(k);
                // odometer over q^free
                let mut pos = 0;
                while pos < fill.len() {
                    fill[pos] += 1;
                    if fill[pos] < q {
                        break;
                    }
                    fill[pos] = 0;
                    pos += 1;
                }
                if pos == fill.len() {
                    break;
                }
            }
        }
    }
    let contains = |basis: &[Vec<usize>], v: &[usize]| {
        let mut v = v.to_vec();
        for row in basis {
            let p = row.iter().position(|&x| x == 1).expect("row has a pivot");
            let c = v[p];
            if c != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = (*a + q - (c * b) % q) % q;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    };
    let mut covers = Vec::new();
    for (u, small) in spaces.iter().enumerate() {
        for (w, big) in spaces.iter().enumerate() {
            if ranks[w] == ranks[u] + 1 && small.iter().all(|v| contains(big, v)) {
                covers.push((u, w));
            }
        }
    }
    Ok(built(ranks, covers))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dual suspension `Σ*(P)`: two new elements between `0̂` and the atoms.
///
/// Ids: old bottom, the two new elements, then the remaining old elements
/// in their original order.
pub fn dual_suspension(p: &GradedPoset) -> Result<GradedPoset, PosetError> {
    if p.rank() < 1 {
        return Err(PosetError::RankTooSmall { rank: p.rank(), minimum: 1 });
    }
    ensure_size(p.len() as u128 + 2)?;
    let bottom = p.bottom();
    let new_id = |e: Element| if e == bottom { 0 } else if e < bottom { e + 3 } else { e + 2 };
    let mut ranks = vec![0; p.len() + 2];
    let mut labels = vec![None; p.len() + 2];
    ranks[1] = 1;
    ranks[2] = 1;
    for e in 0..p.len() {
        if e != bottom {
            ranks[new_id(e)] = p.rank_of(e) + 1;
            labels[new_id(e)] = p.label(e).map(str::to_owned);
        }
    }
    labels[0] = p.label(bottom).map(str::to_owned);
    let mut covers = vec![(0, 1), (0, 2)];
    for (x, y) in p.covers() {
        if x == bottom {
            covers.push((1, new_id(y)));
            covers.push((2, new_id(y)));
        } else {
            covers.push((new_id(x), new_id(y)));
        }
    }
    Ok(built(ranks, covers).with_labels(labels).expect("label count"))
}

/// Suspension `Σ(P)`: two new elements between the coatoms and `1̂`.
///
/// Ids: old elements other than the top in their original order, the two
/// new elements, then the old top.
pub fn suspension(p: &GradedPoset) -> Result<GradedPoset, PosetError> {
    if p.rank() < 1 {
        return Err(PosetError::RankTooSmall { rank: p.rank(), minimum: 1 });
    }
    let size = ensure_size(p.len() as u128 + 2)?;
    let top = p.top();
    let (a1, a2, new_top) = (size - 3, size - 2, size - 1);
    let new_id = |e: Element| if e == top { new_top } else if e > top { e - 1 } else { e };
    let mut ranks = vec![0; size];
    let mut labels = vec![None; size];
    for e in 0..p.len() {
        ranks[new_id(e)] = p.rank_of(e);
        labels[new_id(e)] = p.label(e).map(str::to_owned);
    }
    ranks[a1] = p.rank();
    ranks[a2] = p.rank();
    ranks[new_top] = p.rank() + 1;
    let mut covers = vec![(a1, new_top), (a2, new_top)];
    for (x, y) in p.covers() {
        if y == top {
            covers.push((new_id(x), a1));
            covers.push((new_id(x), a2));
        } else {
            covers.push((new_id(x), new_id(y)));
        }
    }
    Ok(built(ranks, covers).with_labels(labels).expect("label count"))
}

/// `⊞_i Q_i`: the summands' interiors side by side, sharing one `0̂` and one `1̂`.
///
/// Ids: 0 is the shared bottom, then each summand's interior in order, then
/// the shared top.
pub fn box_sum(posets: &[GradedPoset]) -> Result<GradedPoset, PosetError> {
    let first = posets
        .first()
        .ok_or_else(|| PosetError::InvalidArgument("box_sum needs at least one poset".into()))?;
    let rank = first.rank();
    if let Some(bad) = posets.iter().find(|p| p.rank() != rank) {
        return Err(PosetError::RankMismatch { expected: rank, found: bad.rank() });
    }
    if rank < 2 {
        return Err(PosetError::RankTooSmall { rank, minimum: 2 });
    }
    let interior: u128 = posets.iter().map(|p| p.len() as u128 - 2).sum();
    let size = ensure_size(interior + 2)?;
    let top = size - 1;
    let mut ranks = vec![0; size];
    ranks[top] = rank;
    let mut labels = vec![None; size];
    let mut covers = Vec::new();
    let mut offset = 1;
    for p in posets {
        let mut local = vec![0; p.len()];
        let mut next = offset;
        for e in 0..p.len() {
            local[e] = if e == p.bottom() {
                0
            } else if e == p.top() {
                top
            } else {
                next += 1;
                next - 1
            };
            if local[e] != 0 && local[e] != top {
                ranks[local[e]] = p.rank_of(e);
                labels[local[e]] = p.label(e).map(str::to_owned);
            }
        }
        covers.extend(p.covers().map(|(x, y)| (local[x], local[y])));
        offset = next;
    }
    Ok(built(ranks, covers).with_labels(labels).expect("label count"))
}

/// `⊞^k(P)`: `k` copies of `P` glued at `0̂` and `1̂`. Even-rank input is
/// accepted; its summations are not Eulerian for `k ≥ 2`.
pub fn k_summation(p: &GradedPoset, k: usize) -> Result<GradedPoset, PosetError> {
    if k == 0 {
        return Err(PosetError::InvalidArgument("k_summation needs k >= 1".into()));
    }
    let copies = vec![p.clone(); k];
    box_sum(&copies)
}

/// Rank (Segre) product: pairs of equal rank ordered componentwise.
/// Ids follow `(x, z)` in lexicographic order.
pub fn rank_product(p: &GradedPoset, q: &GradedPoset) -> Result<GradedPoset, PosetError> {
    if p.rank() != q.rank() {
        return Err(PosetError::RankMismatch { expected: p.rank(), found: q.rank() });
    }
    let size: u128 = (0..=p.rank())
        .map(|k| p.elements_of_rank(k).len() as u128 * q.elements_of_rank(k).len() as u128)
        .sum();
    ensure_size(size)?;
    let mut index = std::collections::HashMap::new();
    let mut ranks = Vec::new();
    for x in 0..p.len() {
        for &z in q.elements_of_rank(p.rank_of(x)) {
            index.insert((x, z), ranks.len());
            ranks.push(p.rank_of(x));
        }
    }
    let mut covers = Vec::new();
    for x in 0..p.len() {
        for &z in q.elements_of_rank(p.rank_of(x)) {
            for &x2 in p.upper_covers(x) {
                for &z2 in q.upper_covers(z) {
                    covers.push((index[&(x, z)], index[&(x2, z2)]));
                }
            }
        }
    }
    Ok(built(ranks, covers))
}
