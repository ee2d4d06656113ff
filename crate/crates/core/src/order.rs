//! Chains, antichains, finite Ramsey-style witnesses, monotone function
//! tables, canonical enumeration, partial-function extension and Sperner
//! families of incomparable functions.

use crate::error::{LatticeError, Result};
use crate::lattice::{Lattice, Poset, TupleIndex};

/// Default cap on the number of functions an enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 1_000_000;

/// A total or partial k-ary function on a lattice, stored densely over
/// tuple-index-encoded arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    arity: usize,
    base: usize,
    values: Vec<Option<usize>>,
}

impl FunctionTable {
    /// Total table from a dense value vector of length base^arity.
    pub fn total(base: usize, arity: usize, values: Vec<usize>) -> FunctionTable {
        let idx = TupleIndex::new(base, arity);
        assert_eq!(values.len(), idx.count(), "dense table has wrong length");
        assert!(values.iter().all(|&v| v < base), "value out of range");
        FunctionTable { arity, base, values: values.into_iter().map(Some).collect() }
    }

    /// Partial table from (tuple index, value) associations.
    pub fn partial(base: usize, arity: usize, points: &[(usize, usize)]) -> Result<FunctionTable> {
        let idx = TupleIndex::new(base, arity);
        let mut values = vec![None; idx.count()];
        for &(p, v) in points {
            if p >= idx.count() {
                return Err(LatticeError::InvalidElement { id: p, n: idx.count() });
            }
            if v >= base {
                return Err(LatticeError::InvalidElement { id: v, n: base });
            }
            if let Some(old) = values[p] {
                if old != v {
                    return Err(LatticeError::InvalidTerm(format!(
                        "conflicting values {old} and {v} at point {p}"
                    )));
                }
            }
            values[p] = Some(v);
        }
        Ok(FunctionTable { arity, base, values })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn index(&self) -> TupleIndex {
        TupleIndex::new(self.base, self.arity)
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// Value at an encoded tuple index, if defined.
    pub fn get(&self, point: usize) -> Option<usize> {
        self.values[point]
    }

    /// Tuple indices where the function is defined, ascending.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&p| self.values[p].is_some()).collect()
    }

    /// Dense values of a total table.
    pub fn dense_values(&self) -> Vec<usize> {
        assert!(self.is_total(), "table is partial");
        self.values.iter().map(|v| v.unwrap()).collect()
    }
}

/// Outcome of a pointwise comparison of two total function tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// Pointwise comparison over all tuples; both tables must be total and share
/// lattice and arity.
pub fn compare_functions(l: &Lattice, f: &FunctionTable, g: &FunctionTable) -> Result<FunctionOrder> {
    if f.arity != g.arity {
        return Err(LatticeError::ArityMismatch { expected: f.arity, got: g.arity });
    }
    if f.base != g.base || f.base != l.len() {
        return Err(LatticeError::ArityMismatch { expected: l.len(), got: f.base.max(g.base) });
    }
    assert!(f.is_total() && g.is_total(), "comparison requires total tables");
    let mut le = true;
    let mut ge = true;
    for p in 0..f.values.len() {
        let (a, b) = (f.values[p].unwrap(), g.values[p].unwrap());
        le &= l.leq(a, b);
        ge &= l.leq(b, a);
        if !le && !ge {
            return Ok(FunctionOrder::Incomparable);
        }
    }
    Ok(match (le, ge) {
        (true, true) => FunctionOrder::Equal,
        (true, false) => FunctionOrder::Less,
        (false, true) => FunctionOrder::Greater,
        (false, false) => FunctionOrder::Incomparable,
    })
}

/// Monotonicity scan over comparable pairs of the (domain-restricted) table.
/// Returns `None` when monotone, otherwise a violating pair of tuples.
pub fn check_monotone(l: &Lattice, f: &FunctionTable) -> Option<(Vec<usize>, Vec<usize>)> {
    let idx = f.index();
    let dom = f.domain();
    let mut ta = vec![0usize; f.arity];
    let mut tb = vec![0usize; f.arity];
    for &a in &dom {
        idx.decode_into(a, &mut ta);
        for &b in &dom {
            idx.decode_into(b, &mut tb);
            let below = ta.iter().zip(&tb).all(|(&x, &y)| l.leq(x, y));
            if below && !l.leq(f.values[a].unwrap(), f.values[b].unwrap()) {
                return Some((ta.clone(), tb.clone()));
            }
        }
    }
    None
}

/// Kind of a chain-or-antichain witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Chain,
    Antichain,
    /// Reported only when the caller analyzes a dual explicitly.
    DualChain,
}

/// A chain (totally ordered ascending) or antichain (pairwise incomparable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAntichainWitness {
    pub kind: WitnessKind,
    pub elements: Vec<usize>,
}

impl ChainAntichainWitness {
    /// Checks that the witness is valid in the given poset.
    pub fn is_valid(&self, p: &Poset) -> bool {
        match self.kind {
            WitnessKind::Chain => self
                .elements
                .windows(2)
                .all(|w| p.lt(w[0], w[1])),
            WitnessKind::Antichain => {
                let e = &self.elements;
                (0..e.len()).all(|i| (i + 1..e.len()).all(|j| !p.comparable(e[i], e[j])))
            }
            WitnessKind::DualChain => self
                .elements
                .windows(2)
                .all(|w| p.lt(w[1], w[0])),
        }
    }
}

/// Maximum antichain (Dilworth width) via minimum chain cover by maximum
/// bipartite matching and König's theorem. Deterministic for a fixed poset.
pub fn max_antichain(p: &Poset) -> Vec<usize> {
    let (match_l, _match_r) = max_matching(p);
    konig_antichain(p, &match_l)
}

/// Minimum chain cover: partitions the elements into width-many chains,
/// following matched edges. Chains are ascending, ordered by smallest head.
pub fn min_chain_cover(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let (match_l, match_r) = max_matching(p);
    let mut chains = Vec::new();
    for start in 0..n {
        if match_r[start].is_some() {
            continue; // not a chain head
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = match_l[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    chains
}

/// Kuhn's algorithm on the split graph: left u -> right v when u < v.
/// Vertices are tried in ascending id order.
fn max_matching(p: &Poset) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = p.len();
    let mut match_l: Vec<Option<usize>> = vec![None; n];
    let mut match_r: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut seen = vec![false; n];
        augment(p, u, &mut seen, &mut match_l, &mut match_r);
    }
    (match_l, match_r)
}

fn augment(
    p: &Poset,
    u: usize,
    seen: &mut [bool],
    match_l: &mut [Option<usize>],
    match_r: &mut [Option<usize>],
) -> bool {
    for v in 0..p.len() {
        if p.lt(u, v) && !seen[v] {
            seen[v] = true;
            if match_r[v].is_none() || augment(p, match_r[v].unwrap(), seen, match_l, match_r) {
                match_l[u] = Some(v);
                match_r[v] = Some(u);
                return true;
            }
        }
    }
    false
}

/// König construction: elements whose left node and right node both avoid the
/// minimum vertex cover form a maximum antichain.
fn konig_antichain(p: &Poset, match_l: &[Option<usize>]) -> Vec<usize> {
    let n = p.len();
    let mut match_r: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        if let Some(v) = match_l[u] {
            match_r[v] = Some(u);
        }
    }
    // Alternating reachability from unmatched left vertices.
    let mut z_l = vec![false; n];
    let mut z_r = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| match_l[u].is_none()).collect();
    for &u in &stack {
        z_l[u] = true;
    }
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if p.lt(u, v) && !z_r[v] {
                z_r[v] = true;
                if let Some(u2) = match_r[v] {
                    if !z_l[u2] {
                        z_l[u2] = true;
                        stack.push(u2);
                    }
                }
            }
        }
    }
    // Cover = (L not in Z) ∪ (R in Z); keep elements outside the cover.
    (0..n).filter(|&u| z_l[u] && !z_r[u]).collect()
}

/// Maximum-length chain (Mirsky height), ascending, deterministic by
/// smallest-id choices.
pub fn longest_chain(p: &Poset) -> Vec<usize> {
    let h = p.heights();
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let max_h = *h.iter().max().unwrap();
    let mut cur = (0..n).find(|&v| h[v] == max_h).unwrap();
    let mut chain = vec![cur];
    for level in (1..max_h).rev() {
        let prev = (0..n)
            .find(|&u| p.lt(u, cur) && h[u] == level)
            .expect("height levels are contiguous along some chain");
        chain.push(prev);
        cur = prev;
    }
    chain.reverse();
    chain
}

/// Finite chain-or-antichain dichotomy: a chain of length >= r or an
/// antichain of size >= s, provided |P| >= (r-1)(s-1)+1.
pub fn ramsey_witness(p: &Poset, r: usize, s: usize) -> Result<ChainAntichainWitness> {
    assert!(r >= 1 && s >= 1);
    let required = (r - 1) * (s - 1) + 1;
    if p.len() < required {
        return Err(LatticeError::TooSmall { required, actual: p.len() });
    }
    let chain = longest_chain(p);
    if chain.len() >= r {
        return Ok(ChainAntichainWitness { kind: WitnessKind::Chain, elements: chain });
    }
    // Height < r: some Mirsky layer has at least s elements by pigeonhole.
    let h = p.heights();
    let max_h = chain.len();
    for level in 1..=max_h {
        let layer: Vec<usize> = (0..p.len()).filter(|&v| h[v] == level).collect();
        if layer.len() >= s {
            return Ok(ChainAntichainWitness { kind: WitnessKind::Antichain, elements: layer });
        }
    }
    unreachable!("pigeonhole guarantees a large layer when the chain is short")
}

/// A fixed linear extension of L^k: tuples sorted by total coordinate height,
/// ties by tuple index. Shared by every enumeration so streams and witnesses
/// are deterministic.
pub fn canonical_tuple_order(l: &Lattice, k: usize) -> Vec<usize> {
    let idx = TupleIndex::new(l.len(), k);
    let h = l.poset().heights();
    let mut order: Vec<usize> = (0..idx.count()).collect();
    let mut t = vec![0usize; k];
    let key: Vec<usize> = order
        .iter()
        .map(|&p| {
            idx.decode_into(p, &mut t);
            t.iter().map(|&e| h[e]).sum()
        })
        .collect();
    order.sort_by_key(|&p| (key[p], p));
    order
}

/// Visits every total monotone f: L^k -> L in canonical order. The callback
/// returns `false` to stop early. Returns the number of functions visited.
pub fn for_each_monotone<F>(l: &Lattice, k: usize, mut visit: F) -> usize
where
    F: FnMut(&[Option<usize>]) -> bool,
{
    let idx = TupleIndex::new(l.len(), k);
    let order = canonical_tuple_order(l, k);
    // Cover predecessors of each tuple, per coordinate.
    let elem_preds: Vec<Vec<usize>> = {
        let covers = l.poset().covers();
        let mut preds = vec![Vec::new(); l.len()];
        for &(lo, hi) in &covers {
            preds[hi].push(lo);
        }
        preds
    };
    let mut tuple_preds: Vec<Vec<usize>> = vec![Vec::new(); idx.count()];
    let mut t = vec![0usize; k];
    for p in 0..idx.count() {
        idx.decode_into(p, &mut t);
        for i in 0..k {
            let save = t[i];
            for &lo in &elem_preds[save] {
                t[i] = lo;
                tuple_preds[p].push(idx.encode(&t));
            }
            t[i] = save;
        }
    }
    let mut values: Vec<Option<usize>> = vec![None; idx.count()];
    let mut visited = 0usize;
    let mut running = true;
    fn recurse(
        l: &Lattice,
        order: &[usize],
        tuple_preds: &[Vec<usize>],
        values: &mut Vec<Option<usize>>,
        pos: usize,
        visited: &mut usize,
        running: &mut bool,
        visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) {
        if !*running {
            return;
        }
        if pos == order.len() {
            *visited += 1;
            if !visit(values) {
                *running = false;
            }
            return;
        }
        let p = order[pos];
        let lb = tuple_preds[p]
            .iter()
            .fold(l.bottom(), |acc, &q| l.join(acc, values[q].unwrap()));
        for v in 0..l.len() {
            if l.leq(lb, v) {
                values[p] = Some(v);
                recurse(l, order, tuple_preds, values, pos + 1, visited, running, visit);
                if !*running {
                    values[p] = None;
                    return;
                }
            }
        }
        values[p] = None;
    }
    recurse(
        l,
        &order,
        &tuple_preds,
        &mut values,
        0,
        &mut visited,
        &mut running,
        &mut visit,
    );
    visited
}

/// Enumerates total monotone functions in canonical order, stopping after
/// `limit` when given.
pub fn enumerate_monotone(l: &Lattice, k: usize, limit: Option<usize>) -> Vec<FunctionTable> {
    let mut out = Vec::new();
    for_each_monotone(l, k, |values| {
        out.push(FunctionTable {
            arity: k,
            base: l.len(),
            values: values.to_vec(),
        });
        limit.map_or(true, |m| out.len() < m)
    });
    out
}

/// Exact count of total monotone functions L^k -> L by the same backtracking
/// as enumeration. Errors if the count exceeds the budget.
pub fn count_monotone(l: &Lattice, k: usize, budget: Option<usize>) -> Result<usize> {
    let limit = budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
    let mut count = 0usize;
    for_each_monotone(l, k, |_| {
        count += 1;
        count <= limit
    });
    if count > limit {
        return Err(LatticeError::BudgetExceeded { limit, reached: count });
    }
    Ok(count)
}

/// Least monotone total extension of a monotone partial function:
/// fbar(x) = sup { f(z) : z in dom f, z <= x }, with empty sup = bottom.
pub fn extend_partial(l: &Lattice, f: &FunctionTable) -> Result<FunctionTable> {
    assert_eq!(f.base(), l.len());
    if let Some((lower, upper)) = check_monotone(l, f) {
        return Err(LatticeError::NotMonotoneOnDomain { lower, upper });
    }
    let idx = f.index();
    let dom = f.domain();
    let mut td = vec![0usize; f.arity];
    let mut tx = vec![0usize; f.arity];
    let mut values = Vec::with_capacity(idx.count());
    for x in 0..idx.count() {
        idx.decode_into(x, &mut tx);
        let mut acc = l.bottom();
        for &z in &dom {
            idx.decode_into(z, &mut td);
            if td.iter().zip(&tx).all(|(&a, &b)| l.leq(a, b)) {
                acc = l.join(acc, f.values[z].unwrap());
            }
        }
        values.push(acc);
    }
    Ok(FunctionTable::total(l.len(), f.arity, values))
}

/// Middle-layer Sperner family over an antichain A: for every subset S of A
/// of size floor(|A|/2), the monotone indicator f_S(x) = top iff some a in S
/// lies below x. The family is pairwise incomparable; for a singleton A the
/// only subset is empty and the family is the constant-bottom indicator.
pub fn sperner_family(l: &Lattice, antichain: &[usize]) -> Result<Vec<FunctionTable>> {
    for &x in antichain {
        l.check_element(x)?;
    }
    for (i, &a) in antichain.iter().enumerate() {
        for &b in &antichain[i + 1..] {
            if l.leq(a, b) || l.leq(b, a) {
                return Err(LatticeError::NotAnAntichain { a, b });
            }
        }
    }
    let mut sorted: Vec<usize> = antichain.to_vec();
    sorted.sort_unstable();
    let m = sorted.len() / 2;
    let mut family = Vec::new();
    for subset in combinations(&sorted, m) {
        let values: Vec<usize> = (0..l.len())
            .map(|x| {
                if subset.iter().any(|&a| l.leq(a, x)) {
                    l.top()
                } else {
                    l.bottom()
                }
            })
            .collect();
        family.push(FunctionTable::total(l.len(), 1, values));
    }
    Ok(family)
}

/// All size-m subsets in lexicographic order.
fn combinations(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(items: &[usize], m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, m, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, m, 0, &mut cur, &mut out);
    out
}
