//! Finite bounded graded posets stored as ranked Hasse diagrams.
//!
//! Elements are dense ids `0..len()`. A [`GradedPoset`] is validated on
//! construction (unique bottom and top, every cover raises the rank by one,
//! every interior element has both a lower and an upper cover) and is
//! immutable afterwards. The comparability closure is computed lazily the
//! first time an order query needs it.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bitset::BitSet;
use crate::count::ChainCount;
use crate::error::PosetError;

pub type Element = usize;

/// Largest element count accepted by [`GradedPoset::new`].
pub const MAX_ELEMENTS: usize = 8192;

#[derive(Debug)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    up: Vec<Vec<Element>>,
    down: Vec<Vec<Element>>,
    by_rank: Vec<Vec<Element>>,
    bottom: Element,
    top: Element,
    labels: Vec<Option<String>>,
    closure: OnceLock<Closure>,
}

#[derive(Debug, Clone)]
struct Closure {
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    even: BitSet,
}

impl Clone for GradedPoset {
    fn clone(&self) -> Self {
        GradedPoset {
            ranks: self.ranks.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            by_rank: self.by_rank.clone(),
            bottom: self.bottom,
            top: self.top,
            labels: self.labels.clone(),
            closure: OnceLock::new(),
        }
    }
}

/// Identical ids, ranks, covers and labels. Use [`crate::iso::is_isomorphic`]
/// for equality up to relabeling.
impl PartialEq for GradedPoset {
    fn eq(&self, other: &Self) -> bool {
        self.ranks == other.ranks && self.up == other.up && self.labels == other.labels
    }
}

impl Eq for GradedPoset {}

impl GradedPoset {
    /// Validates `ranks` and the cover relation and builds the poset.
    ///
    /// Bottom and top are inferred as the unique elements of rank 0 and of
    /// maximal rank. Duplicate cover pairs are ignored.
    pub fn new(
        ranks: Vec<usize>,
        covers: impl IntoIterator<Item = (Element, Element)>,
    ) -> Result<Self, PosetError> {
        let n = ranks.len();
        if n == 0 {
            return Err(PosetError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooLarge {
                elements: n,
                limit: MAX_ELEMENTS,
            });
        }
        let minima: Vec<Element> = (0..n).filter(|&e| ranks[e] == 0).collect();
        match minima.len() {
            0 => return Err(PosetError::NoMinimum),
            1 => {}
            _ => return Err(PosetError::MultipleMinima(minima)),
        }
        let max_rank = *ranks.iter().max().expect("nonempty");
        let maxima: Vec<Element> = (0..n).filter(|&e| ranks[e] == max_rank).collect();
        if maxima.len() > 1 {
            return Err(PosetError::MultipleMaxima(maxima));
        }
        let (bottom, top) = (minima[0], maxima[0]);

        let mut pairs = BTreeSet::new();
        for (x, y) in covers {
            for e in [x, y] {
                if e >= n {
                    return Err(PosetError::UnknownElement { element: e, count: n });
                }
            }
            if ranks[y] != ranks[x] + 1 {
                return Err(PosetError::NotGraded(format!(
                    "cover ({x}, {y}) goes from rank {} to rank {}",
                    ranks[x], ranks[y]
                )));
            }
            pairs.insert((x, y));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in &pairs {
            up[x].push(y);
            down[y].push(x);
        }
        for e in 0..n {
            up[e].sort_unstable();
            down[e].sort_unstable();
        }
        for e in 0..n {
            let lacks_down = e != bottom && down[e].is_empty();
            let lacks_up = e != top && up[e].is_empty();
            if lacks_down && lacks_up {
                return Err(PosetError::DanglingElement(e));
            }
            if lacks_down {
                return Err(PosetError::NotGraded(format!(
                    "element {e} of rank {} covers nothing",
                    ranks[e]
                )));
            }
            if lacks_up {
                return Err(PosetError::NotGraded(format!(
                    "element {e} of rank {} is covered by nothing",
                    ranks[e]
                )));
            }
        }
        let mut by_rank = vec![Vec::new(); max_rank + 1];
        for e in 0..n {
            by_rank[ranks[e]].push(e);
        }
        Ok(GradedPoset {
            ranks,
            up,
            down,
            by_rank,
            bottom,
            top,
            labels: vec![None; n],
            closure: OnceLock::new(),
        })
    }

    /// Attaches diagnostic labels, one slot per element.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self, PosetError> {
        if labels.len() != self.len() {
            return Err(PosetError::InvalidArgument(format!(
                "{} labels for {} elements",
                labels.len(),
                self.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.ranks[self.top]
    }

    pub fn rank_of(&self, e: Element) -> usize {
        self.ranks[e]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    pub fn upper_covers(&self, e: Element) -> &[Element] {
        &self.up[e]
    }

    pub fn lower_covers(&self, e: Element) -> &[Element] {
        &self.down[e]
    }

    pub fn elements_of_rank(&self, k: usize) -> &[Element] {
        self.by_rank.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn label(&self, e: Element) -> Option<&str> {
        self.labels[e].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// All cover pairs in lexicographic order.
    pub fn covers(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    fn closure(&self) -> &Closure {
        self.closure.get_or_init(|| {
            let n = self.len();
            let mut above = vec![BitSet::new(n); n];
            for rank in (0..self.by_rank.len()).rev() {
                for &x in &self.by_rank[rank] {
                    let mut set = BitSet::new(n);
                    set.insert(x);
                    for &y in &self.up[x] {
                        set.union_with(&above[y]);
                    }
                    above[x] = set;
                }
            }
            let mut below = vec![BitSet::new(n); n];
            for rank in 0..self.by_rank.len() {
                for &y in &self.by_rank[rank] {
                    let mut set = BitSet::new(n);
                    set.insert(y);
                    for &x in &self.down[y] {
                        set.union_with(&below[x]);
                    }
                    below[y] = set;
                }
            }
            let mut even = BitSet::new(n);
            for e in (0..n).filter(|&e| self.ranks[e].is_multiple_of(2)) {
                even.insert(e);
            }
            Closure { above, below, even }
        })
    }

    /// `x <= y` in the partial order.
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.ranks[x] <= self.ranks[y] && self.closure().above[x].contains(y)
    }

    fn check_pair(&self, x: Element, y: Element) -> Result<(), PosetError> {
        for e in [x, y] {
            if e >= self.len() {
                return Err(PosetError::UnknownElement {
                    element: e,
                    count: self.len(),
                });
            }
        }
        if !self.leq(x, y) {
            return Err(PosetError::NotComparable { x, y });
        }
        Ok(())
    }

    /// Elements of `[x, y]` in increasing id order.
    pub fn interval_elements(&self, x: Element, y: Element) -> Result<Vec<Element>, PosetError> {
        self.check_pair(x, y)?;
        let c = self.closure();
        Ok(c.above[x].intersection(&c.below[y]).iter().collect())
    }

    /// The interval `[x, y]` as a poset of its own, re-indexed densely in
    /// the original id order, with ranks shifted so that `x` has rank 0.
    pub fn interval(&self, x: Element, y: Element) -> Result<GradedPoset, PosetError> {
        let elements = self.interval_elements(x, y)?;
        Ok(self.induced(&elements))
    }

    /// Subposet on a convex set with a unique minimum and maximum.
    pub(crate) fn induced(&self, elements: &[Element]) -> GradedPoset {
        let mut index = vec![usize::MAX; self.len()];
        for (i, &e) in elements.iter().enumerate() {
            index[e] = i;
        }
        let base = elements.iter().map(|&e| self.ranks[e]).min().unwrap_or(0);
        let ranks = elements.iter().map(|&e| self.ranks[e] - base).collect();
        let covers: Vec<(Element, Element)> = elements
            .iter()
            .flat_map(|&x| self.up[x].iter().map(move |&y| (x, y)))
            .filter(|&(_, y)| index[y] != usize::MAX)
            .map(|(x, y)| (index[x], index[y]))
            .collect();
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        GradedPoset::new(ranks, covers)
            .and_then(|p| p.with_labels(labels))
            .expect("convex subposet with unique bounds is graded")
    }

    /// Number of maximal chains of `[x, y]`.
    pub fn count_maximal_chains(&self, x: Element, y: Element) -> Result<ChainCount, PosetError> {
        self.check_pair(x, y)?;
        Ok(self.chain_row(x).get(y))
    }

    /// Maximal chain counts of `[x, z]` for every `z`, zero where `x` is not
    /// below `z`. Dynamic programming by rank over lower covers.
    pub(crate) fn chain_row(&self, x: Element) -> ChainRow {
        let n = self.len();
        let start = self.ranks[x];
        let mut small = vec![0u128; n];
        small[x] = 1;
        let mut overflow = false;
        'outer: for rank in start + 1..self.by_rank.len() {
            for &z in &self.by_rank[rank] {
                let mut acc = 0u128;
                for &w in &self.down[z] {
                    match acc.checked_add(small[w]) {
                        Some(v) => acc = v,
                        None => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
                small[z] = acc;
            }
        }
        if !overflow {
            return ChainRow::Small(small);
        }
        let mut big = vec![BigUint::zero(); n];
        big[x] = BigUint::from(1u32);
        for rank in start + 1..self.by_rank.len() {
            for &z in &self.by_rank[rank] {
                let mut acc = BigUint::zero();
                for &w in &self.down[z] {
                    acc += &big[w];
                }
                big[z] = acc;
            }
        }
        ChainRow::Big(big)
    }

    /// Möbius function `μ(x, y)` by the recursion
    /// `μ(x, x) = 1`, `μ(x, y) = -Σ_{x ≤ z < y} μ(x, z)`.
    pub fn mobius(&self, x: Element, y: Element) -> Result<i64, PosetError> {
        self.check_pair(x, y)?;
        Ok(self.mobius_row(x, Some(y))[y])
    }

    /// `μ(x, z)` for every `z ≥ x` (and `z ≤ limit` when given); zero elsewhere.
    fn mobius_row(&self, x: Element, limit: Option<Element>) -> Vec<i64> {
        let c = self.closure();
        let mut region = c.above[x].clone();
        if let Some(y) = limit {
            region = region.intersection(&c.below[y]);
        }
        let mut mu = vec![0i64; self.len()];
        let top_rank = limit.map_or(self.rank(), |y| self.ranks[y]);
        for rank in self.ranks[x]..=top_rank {
            for &z in &self.by_rank[rank] {
                if !region.contains(z) {
                    continue;
                }
                if z == x {
                    mu[z] = 1;
                    continue;
                }
                let sum: i64 = region
                    .intersection(&c.below[z])
                    .iter()
                    .filter(|&w| w != z)
                    .map(|w| mu[w])
                    .sum();
                mu[z] = -sum;
            }
        }
        mu
    }

    /// Eulerian test by the Euler–Poincaré relation: every non-singleton
    /// interval has as many elements of even rank as of odd rank.
    pub fn is_eulerian(&self) -> bool {
        let c = self.closure();
        (0..self.len()).all(|x| {
            c.above[x].iter().filter(|&y| y != x).all(|y| {
                let size = c.above[x].intersection(&c.below[y]).count();
                2 * c.above[x].count_and3(&c.below[y], &c.even) == size
            })
        })
    }

    /// Eulerian test through the Möbius function: `μ(x, y) = (-1)^{ρ(y)-ρ(x)}`
    /// for all `x ≤ y`. Agrees with [`GradedPoset::is_eulerian`].
    pub fn is_eulerian_by_mobius(&self) -> bool {
        let c = self.closure();
        (0..self.len()).all(|x| {
            let mu = self.mobius_row(x, None);
            c.above[x].iter().all(|y| {
                let expected = if (self.ranks[y] - self.ranks[x]).is_multiple_of(2) { 1 } else { -1 };
                mu[y] == expected
            })
        })
    }

    /// Number of elements of each rank in `[x, y]`, indexed by rank relative to `x`.
    pub fn rank_counts(&self, x: Element, y: Element) -> Result<Vec<usize>, PosetError> {
        self.check_pair(x, y)?;
        let c = self.closure();
        let mut counts = vec![0; self.ranks[y] - self.ranks[x] + 1];
        for z in c.above[x].intersection(&c.below[y]).iter() {
            counts[self.ranks[z] - self.ranks[x]] += 1;
        }
        Ok(counts)
    }

    /// Connected components of the Hasse diagram with bottom and top removed,
    /// each returned with its own bottom and top re-attached. Ordered by the
    /// smallest element id of the component.
    pub fn remove_bounds_components(&self) -> Result<Vec<GradedPoset>, PosetError> {
        if self.rank() < 2 {
            return Err(PosetError::RankTooSmall {
                rank: self.rank(),
                minimum: 2,
            });
        }
        Ok(self
            .interior_components()
            .into_iter()
            .map(|mut comp| {
                comp.push(self.bottom);
                comp.push(self.top);
                comp.sort_unstable();
                self.induced(&comp)
            })
            .collect())
    }

    /// Interior elements grouped by connected component, each sorted by id.
    pub(crate) fn interior_components(&self) -> Vec<Vec<Element>> {
        let n = self.len();
        let mut seen = vec![false; n];
        seen[self.bottom] = true;
        seen[self.top] = true;
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(e) = stack.pop() {
                for &f in self.up[e].iter().chain(&self.down[e]) {
                    if !seen[f] {
                        seen[f] = true;
                        comp.push(f);
                        stack.push(f);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The order dual: same elements, covers reversed, ranks measured from
    /// the new bottom.
    pub fn dual(&self) -> GradedPoset {
        let r = self.rank();
        let ranks = self.ranks.iter().map(|&k| r - k).collect();
        GradedPoset::new(ranks, self.covers().map(|(x, y)| (y, x)))
            .and_then(|p| p.with_labels(self.labels.clone()))
            .expect("dual of a graded poset is graded")
    }

    /// The same poset with element `e` renamed to `perm[e]`.
    pub fn permuted(&self, perm: &[Element]) -> Result<GradedPoset, PosetError> {
        let n = self.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(PosetError::InvalidArgument("not a permutation of the elements".into()));
        }
        let mut ranks = vec![0; n];
        let mut labels = vec![None; n];
        for e in 0..n {
            ranks[perm[e]] = self.ranks[e];
            labels[perm[e]] = self.labels[e].clone();
        }
        GradedPoset::new(ranks, self.covers().map(|(x, y)| (perm[x], perm[y])))?.with_labels(labels)
    }
}

/// One row of the chain-count table: counts of `[x, z]` for all `z`.
pub(crate) enum ChainRow {
    Small(Vec<u128>),
    Big(Vec<BigUint>),
}

impl ChainRow {
    pub(crate) fn get(&self, z: Element) -> ChainCount {
        match self {
            ChainRow::Small(v) => ChainCount::from(v[z]),
            ChainRow::Big(v) => ChainCount::from(v[z].clone()),
        }
    }

    pub(crate) fn is_zero(&self, z: Element) -> bool {
        match self {
            ChainRow::Small(v) => v[z] == 0,
            ChainRow::Big(v) => v[z].is_zero(),
        }
    }
}
