//! Finite posets and bounded lattices with dense order matrices and
//! precomputed meet/join tables.

use crate::error::{BoundKind, LatticeError, Result};

/// Default cap on the number of tuples a lattice power may materialize.
pub const DEFAULT_PRODUCT_BUDGET: usize = 1_000_000;

/// A finite partial order on elements `0..n`, stored as a dense boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Builds a poset from a dense relation, validating the poset axioms.
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Poset> {
        assert_eq!(leq.len(), n * n, "relation matrix must be n*n");
        let p = Poset { n, leq };
        p.validate()?;
        Ok(p)
    }

    /// Reflexive-transitive closure of a cover relation. Fails on cycles.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        for &(a, b) in covers {
            let id = a.max(b);
            if id >= n {
                return Err(LatticeError::InvalidElement { id, n });
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in covers {
            leq[lo * n + hi] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a * n + b] && leq[b * n + a] {
                    return Err(LatticeError::NotAPoset { element: a });
                }
            }
        }
        Ok(Poset { n, leq })
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            if !self.leq[a * n + a] {
                return Err(LatticeError::NotAPoset { element: a });
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(LatticeError::NotAPoset { element: a });
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return Err(LatticeError::NotAPoset { element: a });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            'pair: for b in 0..self.n {
                if !self.lt(a, b) {
                    continue;
                }
                for c in 0..self.n {
                    if self.lt(a, c) && self.lt(c, b) {
                        continue 'pair;
                    }
                }
                out.push((a, b));
            }
        }
        out.sort_unstable();
        out
    }

    /// Mirsky height of each element: length of the longest chain ending there
    /// (a single element has height 1).
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (0..self.n).filter(|&u| self.lt(u, v)).count());
        let mut h = vec![1usize; self.n];
        for &v in &order {
            for u in 0..self.n {
                if self.lt(u, v) {
                    h[v] = h[v].max(h[u] + 1);
                }
            }
        }
        h
    }

    pub fn dual(&self) -> Poset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = self.leq(b, a);
            }
        }
        Poset { n, leq }
    }
}

/// A finite bounded lattice: poset plus meet/join tables and the two bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Builds a bounded lattice from a cover relation.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Lattice> {
        Lattice::from_poset(Poset::from_covers(n, covers)?)
    }

    /// Builds a bounded lattice from a validated poset, computing bounds and
    /// meet/join tables by scanning the order matrix.
    pub fn from_poset(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| poset.leq(b, x)))
            .ok_or(LatticeError::NotBounded(BoundKind::Bottom))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| poset.leq(x, t)))
            .ok_or(LatticeError::NotBounded(BoundKind::Top))?;
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let glb = unique_bound(&poset, a, b, true)
                    .ok_or(LatticeError::NotALattice { a, b, kind: BoundKind::Meet })?;
                let lub = unique_bound(&poset, a, b, false)
                    .ok_or(LatticeError::NotALattice { a, b, kind: BoundKind::Join })?;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
                join[a * n + b] = lub;
                join[b * n + a] = lub;
            }
        }
        Ok(Lattice { poset, meet, join, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.poset.lt(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.poset.n + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.poset.n + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Direct power L^k on tuple-index-encoded tuples.
    pub fn product(&self, k: usize, budget: Option<usize>) -> Result<Lattice> {
        assert!(k >= 1, "arity must be at least 1");
        let limit = budget.unwrap_or(DEFAULT_PRODUCT_BUDGET);
        let idx = TupleIndex::new(self.len(), k);
        if idx.count() > limit {
            return Err(LatticeError::BudgetExceeded { limit, reached: idx.count() });
        }
        let m = idx.count();
        let mut leq = vec![false; m * m];
        let mut ta = vec![0usize; k];
        let mut tb = vec![0usize; k];
        for a in 0..m {
            idx.decode_into(a, &mut ta);
            for b in 0..m {
                idx.decode_into(b, &mut tb);
                leq[a * m + b] = ta.iter().zip(&tb).all(|(&x, &y)| self.leq(x, y));
            }
        }
        let mut meet = vec![0usize; m * m];
        let mut join = vec![0usize; m * m];
        for a in 0..m {
            idx.decode_into(a, &mut ta);
            for b in 0..m {
                idx.decode_into(b, &mut tb);
                let mt: Vec<usize> = ta.iter().zip(&tb).map(|(&x, &y)| self.meet(x, y)).collect();
                let jn: Vec<usize> = ta.iter().zip(&tb).map(|(&x, &y)| self.join(x, y)).collect();
                meet[a * m + b] = idx.encode(&mt);
                join[a * m + b] = idx.encode(&jn);
            }
        }
        let bottom = idx.encode(&vec![self.bottom; k]);
        let top = idx.encode(&vec![self.top; k]);
        Ok(Lattice { poset: Poset { n: m, leq }, meet, join, bottom, top })
    }

    /// Order-reversed lattice: meet and join swapped, bounds swapped.
    pub fn dual(&self) -> Lattice {
        Lattice {
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }

    /// Greatest lower and least upper bound of a subset.
    /// Empty meet is the top, empty join the bottom.
    pub fn subset_bounds(&self, set: &[usize]) -> Result<(usize, usize)> {
        for &x in set {
            self.check_element(x)?;
        }
        let inf = set.iter().fold(self.top, |acc, &x| self.meet(acc, x));
        let sup = set.iter().fold(self.bottom, |acc, &x| self.join(acc, x));
        Ok((inf, sup))
    }

    /// Finds the smallest-id element c with A < c < B, if any.
    ///
    /// A must be upward directed, B downward directed, and A < B must hold.
    pub fn separator_exists(&self, a_set: &[usize], b_set: &[usize]) -> Result<Option<usize>> {
        assert!(!a_set.is_empty() && !b_set.is_empty(), "A and B must be nonempty");
        for &x in a_set.iter().chain(b_set) {
            self.check_element(x)?;
        }
        // A upward directed: every pair has an upper bound inside A.
        for (i, &a) in a_set.iter().enumerate() {
            for &a2 in &a_set[i..] {
                if !a_set.iter().any(|&s| self.leq(a, s) && self.leq(a2, s)) {
                    return Err(LatticeError::NotDirected {
                        which: 'A',
                        direction: "upward",
                        a,
                        b: a2,
                    });
                }
            }
        }
        for (i, &b) in b_set.iter().enumerate() {
            for &b2 in &b_set[i..] {
                if !b_set.iter().any(|&s| self.leq(s, b) && self.leq(s, b2)) {
                    return Err(LatticeError::NotDirected {
                        which: 'B',
                        direction: "downward",
                        a: b,
                        b: b2,
                    });
                }
            }
        }
        for &a in a_set {
            for &b in b_set {
                if !self.lt(a, b) {
                    return Err(LatticeError::NotSeparated { a, b });
                }
            }
        }
        Ok((0..self.len()).find(|&c| {
            a_set.iter().all(|&a| self.lt(a, c)) && b_set.iter().all(|&b| self.lt(c, b))
        }))
    }

    /// Checks the end-extension condition for an embedding of `self` into `other`:
    /// every element of `other` lying below the image of a non-top element of
    /// `self` must itself be in the image.
    pub fn is_end_extension(&self, other: &Lattice, embed: &[usize]) -> Result<bool> {
        self.check_embedding(other, embed)?;
        let image: Vec<bool> = {
            let mut im = vec![false; other.len()];
            for &y in embed {
                im[y] = true;
            }
            im
        };
        for b in 0..other.len() {
            if image[b] {
                continue;
            }
            for a in 0..self.len() {
                if a != self.top && other.leq(b, embed[a]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_embedding(&self, other: &Lattice, embed: &[usize]) -> Result<()> {
        let fail = |reason: &str| {
            Err(LatticeError::NotAnEmbedding { reason: reason.to_string() })
        };
        if embed.len() != self.len() {
            return fail("map length does not match the domain");
        }
        for &y in embed {
            if y >= other.len() {
                return fail("image element out of range");
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a != b && embed[a] == embed[b] {
                    return fail("map is not injective");
                }
            }
        }
        if embed[self.bottom] != other.bottom || embed[self.top] != other.top {
            return fail("map does not preserve the bounds");
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if embed[self.meet(a, b)] != other.meet(embed[a], embed[b])
                    || embed[self.join(a, b)] != other.join(embed[a], embed[b])
                {
                    return fail("map does not preserve meet/join");
                }
            }
        }
        Ok(())
    }

    /// Cubic scan of the distributive law x∧(y∨z) = (x∧y)∨(x∧z).
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z))
                        != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn check_element(&self, id: usize) -> Result<()> {
        if id >= self.len() {
            return Err(LatticeError::InvalidElement { id, n: self.len() });
        }
        Ok(())
    }
}

fn unique_bound(poset: &Poset, a: usize, b: usize, lower: bool) -> Option<usize> {
    let n = poset.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&c| {
            if lower {
                poset.leq(c, a) && poset.leq(c, b)
            } else {
                poset.leq(a, c) && poset.leq(b, c)
            }
        })
        .collect();
    let mut best = None;
    for &c in &bounds {
        let dominates = bounds.iter().all(|&d| {
            if lower {
                poset.leq(d, c)
            } else {
                poset.leq(c, d)
            }
        });
        if dominates {
            best = Some(c);
            break;
        }
    }
    best
}

/// Mixed-radix encoding of L^k tuples: index = Σ aᵢ · n^(k−1−i), with the
/// first coordinate most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleIndex {
    n: usize,
    k: usize,
}

impl TupleIndex {
    pub fn new(n: usize, k: usize) -> TupleIndex {
        assert!(k >= 1 && n >= 1);
        TupleIndex { n, k }
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn base(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.k);
        tuple.iter().fold(0, |acc, &a| {
            debug_assert!(a < self.n);
            acc * self.n + a
        })
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut tuple = vec![0usize; self.k];
        for i in (0..self.k).rev() {
            tuple[i] = index % self.n;
            index /= self.n;
        }
        tuple
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [usize]) {
        for i in (0..self.k).rev() {
            out[i] = index % self.n;
            index /= self.n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    /// Independent oracle: greatest lower bound by scanning the order matrix.
    fn brute_glb(p: &Poset, a: usize, b: usize) -> Option<usize> {
        let lbs: Vec<usize> = (0..p.len()).filter(|&c| p.leq(c, a) && p.leq(c, b)).collect();
        lbs.iter().copied().find(|&c| lbs.iter().all(|&d| p.leq(d, c)))
    }

    fn brute_lub(p: &Poset, a: usize, b: usize) -> Option<usize> {
        let ubs: Vec<usize> = (0..p.len()).filter(|&c| p.leq(a, c) && p.leq(b, c)).collect();
        ubs.iter().copied().find(|&c| ubs.iter().all(|&d| p.leq(c, d)))
    }

    #[test]
    fn two_element_lattice() {
        let l = Lattice::from_covers(2, &[(0, 1)]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 1);
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
    }

    #[test]
    fn m3_tables_match_brute_force() {
        let l = gallery::make_mn(3).unwrap();
        assert_eq!(l.len(), 5);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(Some(l.meet(a, b)), brute_glb(l.poset(), a, b));
                assert_eq!(Some(l.join(a, b)), brute_lub(l.poset(), a, b));
            }
        }
    }

    #[test]
    fn hexagon_is_not_a_lattice() {
        // 0 < a,b < c,d < 1: the pair (c,d) has two maximal lower bounds a,b.
        let covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];
        let err = Lattice::from_covers(6, &covers).unwrap_err();
        match err {
            LatticeError::NotALattice { a, b, .. } => {
                let p = Poset::from_covers(6, &covers).unwrap();
                assert!(brute_glb(&p, a, b).is_none() || brute_lub(&p, a, b).is_none());
            }
            other => panic!("expected NotALattice, got {other:?}"),
        }
    }

    #[test]
    fn missing_cover_breaks_boundedness() {
        // Boolean square minus the cover (2,3): element 2 no longer lies
        // below a common top, so the poset is not bounded.
        let err = Lattice::from_covers(4, &[(0, 1), (0, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotBounded(_)));
    }

    #[test]
    fn cycle_is_rejected() {
        let err = Poset::from_covers(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAPoset { .. }));
    }

    #[test]
    fn product_of_two_element_is_boolean_square() {
        let two = gallery::chain(2).unwrap();
        let sq = two.product(2, None).unwrap();
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.bottom(), 0);
        assert_eq!(sq.top(), 3);
        // (0,1) and (1,0) are incomparable.
        assert!(!sq.leq(1, 2) && !sq.leq(2, 1));
        assert!(sq.is_distributive());
    }

    #[test]
    fn product_arity_one_is_identity() {
        let c3 = gallery::chain(3).unwrap();
        let p = c3.product(1, None).unwrap();
        assert_eq!(p, c3);
    }

    #[test]
    fn product_budget() {
        let c3 = gallery::chain(3).unwrap();
        let err = c3.product(4, Some(80)).unwrap_err();
        assert!(matches!(err, LatticeError::BudgetExceeded { limit: 80, reached: 81 }));
    }

    #[test]
    fn product_order_is_componentwise() {
        let m3 = gallery::make_mn(3).unwrap();
        let sq = m3.product(2, None).unwrap();
        assert_eq!(sq.len(), 25);
        let idx = TupleIndex::new(5, 2);
        for a in 0..25 {
            for b in 0..25 {
                let ta = idx.decode(a);
                let tb = idx.decode(b);
                assert_eq!(
                    sq.leq(a, b),
                    ta.iter().zip(&tb).all(|(&x, &y)| m3.leq(x, y))
                );
            }
        }
    }

    #[test]
    fn dual_is_involution() {
        for l in [gallery::chain(3).unwrap(), gallery::make_mn(3).unwrap(), gallery::make_n5()] {
            assert_eq!(l.dual().dual(), l);
        }
    }

    #[test]
    fn dual_of_chain_reverses_order() {
        let c3 = gallery::chain(3).unwrap();
        let d = c3.dual();
        assert_eq!(d.bottom(), 2);
        assert_eq!(d.top(), 0);
        assert!(d.leq(2, 1) && d.leq(1, 0));
    }

    #[test]
    fn dual_of_m3_is_isomorphic_to_m3() {
        // Brute-force isomorphism search over the 5! permutations.
        let m3 = gallery::make_mn(3).unwrap();
        let d = m3.dual();
        let mut found = false;
        let mut perm = [0usize; 5];
        fn search(
            pos: usize,
            used: &mut [bool; 5],
            perm: &mut [usize; 5],
            a: &Lattice,
            b: &Lattice,
            found: &mut bool,
        ) {
            if *found {
                return;
            }
            if pos == 5 {
                let iso = (0..5).all(|x| {
                    (0..5).all(|y| a.leq(x, y) == b.leq(perm[x], perm[y]))
                });
                if iso {
                    *found = true;
                }
                return;
            }
            for v in 0..5 {
                if !used[v] {
                    used[v] = true;
                    perm[pos] = v;
                    search(pos + 1, used, perm, a, b, found);
                    used[v] = false;
                }
            }
        }
        search(0, &mut [false; 5], &mut perm, &m3, &d, &mut found);
        assert!(found);
    }

    #[test]
    fn subset_bounds_examples() {
        let m3 = gallery::make_mn(3).unwrap();
        assert_eq!(m3.subset_bounds(&[1, 2]).unwrap(), (0, 4));
        assert_eq!(m3.subset_bounds(&[]).unwrap(), (4, 0));
        let c3 = gallery::chain(3).unwrap();
        assert_eq!(c3.subset_bounds(&[0, 1]).unwrap(), (0, 1));
    }

    #[test]
    fn separator_on_chain5() {
        let c5 = gallery::chain(5).unwrap();
        assert_eq!(c5.separator_exists(&[1], &[3]).unwrap(), Some(2));
    }

    #[test]
    fn separator_adjacent_is_none() {
        let c3 = gallery::chain(3).unwrap();
        assert_eq!(c3.separator_exists(&[0], &[1]).unwrap(), None);
    }

    #[test]
    fn separator_on_m3_returns_smallest_atom() {
        let m3 = gallery::make_mn(3).unwrap();
        assert_eq!(m3.separator_exists(&[0], &[4]).unwrap(), Some(1));
    }

    #[test]
    fn separator_rejects_non_separated() {
        let c3 = gallery::chain(3).unwrap();
        let err = c3.separator_exists(&[1], &[1]).unwrap_err();
        assert!(matches!(err, LatticeError::NotSeparated { .. }));
    }

    #[test]
    fn separator_rejects_undirected() {
        let m3 = gallery::make_mn(3).unwrap();
        // Two atoms have no upper bound inside {1,2}.
        let err = m3.separator_exists(&[1, 2], &[4]).unwrap_err();
        assert!(matches!(err, LatticeError::NotDirected { which: 'A', .. }));
    }

    #[test]
    fn end_extension_examples() {
        let two = gallery::chain(2).unwrap();
        let c3 = gallery::chain(3).unwrap();
        let c4 = gallery::chain(4).unwrap();
        // {0,1} into chain3 as bounds.
        assert!(two.is_end_extension(&c3, &[0, 2]).unwrap());
        // chain3 {0,a,1} into chain4 {0,m,a,1} with a fresh element below a.
        assert!(!c3.is_end_extension(&c4, &[0, 2, 3]).unwrap());
        // Identity embedding.
        assert!(c3.is_end_extension(&c3, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn end_extension_rejects_non_embedding() {
        let two = gallery::chain(2).unwrap();
        let c3 = gallery::chain(3).unwrap();
        let err = two.is_end_extension(&c3, &[0, 1]).unwrap_err();
        assert!(matches!(err, LatticeError::NotAnEmbedding { .. }));
    }

    #[test]
    fn distributivity_examples() {
        assert!(gallery::chain(4).unwrap().is_distributive());
        assert!(!gallery::make_mn(3).unwrap().is_distributive());
        assert!(!gallery::make_n5().is_distributive());
        let cube = gallery::chain(2).unwrap().product(3, None).unwrap();
        assert!(cube.is_distributive());
    }

    #[test]
    fn tuple_index_roundtrip() {
        let idx = TupleIndex::new(3, 3);
        for i in 0..idx.count() {
            assert_eq!(idx.encode(&idx.decode(i)), i);
        }
        // First coordinate most significant.
        assert_eq!(idx.encode(&[2, 0, 1]), 2 * 9 + 1);
    }

    #[test]
    fn lattice_axioms_hold_on_suite() {
        for l in crate::gallery::curated_suite() {
            let n = l.len();
            for a in 0..n {
                for b in 0..n {
                    let m = l.meet(a, b);
                    let j = l.join(a, b);
                    assert!(l.leq(m, a) && l.leq(m, b));
                    assert!(l.leq(a, j) && l.leq(b, j));
                    for c in 0..n {
                        if l.leq(c, a) && l.leq(c, b) {
                            assert!(l.leq(c, m));
                        }
                        if l.leq(a, c) && l.leq(b, c) {
                            assert!(l.leq(j, c));
                        }
                    }
                    // Absorption.
                    assert_eq!(l.meet(a, l.join(a, b)), a);
                    assert_eq!(l.join(a, l.meet(a, b)), a);
                }
            }
        }
    }
}
