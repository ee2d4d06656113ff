//! Congruences and simplicity, Wille's property, order-polynomial
//! completeness decisions (characterization vs. brute force), the finite
//! interpolation property, and the antichain-amplification pipeline.

use std::collections::HashMap;

use crate::error::{LatticeError, Result};
use crate::lattice::{Lattice, TupleIndex};
use crate::order::{for_each_monotone, sperner_family, FunctionTable};
use crate::poly::{
    interpolate, polynomial_clone, skeletonize, thinning_check, Term, DEFAULT_CLONE_BUDGET,
};

/// A partition of the element set, canonicalized so block ids appear in
/// first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    num_blocks: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary block assignment.
    pub fn from_assignment(assignment: &[usize]) -> Partition {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        for &raw in assignment {
            let next = relabel.len();
            block_of.push(*relabel.entry(raw).or_insert(next));
        }
        let num_blocks = relabel.len();
        Partition { block_of, num_blocks }
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    /// Blocks as element lists, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    /// The one-block partition collapsing everything.
    pub fn is_full(&self) -> bool {
        self.num_blocks == 1
    }

    /// The identity partition of singletons.
    pub fn is_identity(&self) -> bool {
        self.num_blocks == self.block_of.len()
    }

    /// Refinement order: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let n = self.block_of.len();
        (0..n).all(|a| (0..n).all(|b| !self.same_block(a, b) || other.same_block(a, b)))
    }
}

/// Least congruence containing the given pairs: the pairs are closed under
/// equivalence, then under substitution a ≡ b ⟹ a∧c ≡ b∧c and
/// a∨c ≡ b∨c, alternating to a fixpoint.
pub fn congruence_generated(l: &Lattice, pairs: &[(usize, usize)]) -> Result<Partition> {
    let n = l.len();
    for &(a, b) in pairs {
        l.check_element(a)?;
        l.check_element(b)?;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    fn union(parent: &mut Vec<usize>, a: usize, b: usize) -> bool {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra == rb {
            return false;
        }
        parent[ra.max(rb)] = ra.min(rb);
        true
    }
    for &(a, b) in pairs {
        union(&mut parent, a, b);
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in a + 1..n {
                if find(&mut parent, a) != find(&mut parent, b) {
                    continue;
                }
                for c in 0..n {
                    changed |= union(&mut parent, l.meet(a, c), l.meet(b, c));
                    changed |= union(&mut parent, l.join(a, c), l.join(b, c));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let assignment: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Ok(Partition::from_assignment(&assignment))
}

/// Simplicity: every pair of distinct elements generates the full
/// congruence. On failure returns the first pair (in id order) together with
/// the proper congruence it generates.
pub fn is_simple(l: &Lattice) -> Result<(bool, Option<((usize, usize), Partition)>)> {
    if l.len() < 2 {
        return Err(LatticeError::TrivialLattice);
    }
    for a in 0..l.len() {
        for b in a + 1..l.len() {
            let theta = congruence_generated(l, &[(a, b)])?;
            if !theta.is_full() {
                return Ok((false, Some(((a, b), theta))));
            }
        }
    }
    Ok((true, None))
}

/// Wille's property: the only regressive maps (f(x) ≤ x) preserving binary
/// joins are the identity and the constant bottom. Preservation of the top
/// is not required, and f(bottom) = bottom is forced by regressivity.
/// On failure returns the first offending map in lexicographic id order.
pub fn wille_property(l: &Lattice) -> (bool, Option<Vec<usize>>) {
    let n = l.len();
    // Admissible images of x are the elements below x, ascending.
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| l.leq(y, x)).collect())
        .collect();
    let mut f = vec![0usize; n];
    let identity: Vec<usize> = (0..n).collect();
    let constant_bottom = vec![l.bottom(); n];

    fn search(
        l: &Lattice,
        candidates: &[Vec<usize>],
        f: &mut Vec<usize>,
        depth: usize,
        identity: &[usize],
        constant_bottom: &[usize],
    ) -> Option<Vec<usize>> {
        let n = l.len();
        if depth == n {
            if f != identity && f != constant_bottom {
                return Some(f.clone());
            }
            return None;
        }
        'next: for &v in &candidates[depth] {
            f[depth] = v;
            // Join preservation on every pair whose join is also assigned.
            for a in 0..=depth {
                for b in a..=depth {
                    let j = l.join(a, b);
                    if j <= depth && f[j] != l.join(f[a], f[b]) {
                        continue 'next;
                    }
                }
            }
            if let Some(w) = search(l, candidates, f, depth + 1, identity, constant_bottom) {
                return Some(w);
            }
        }
        None
    }
    match search(l, &candidates, &mut f, 0, &identity, &constant_bottom) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

/// The characterization report: a finite lattice is order-polynomially
/// complete iff it is simple and has Wille's property.
#[derive(Debug, Clone)]
pub struct OpcReport {
    pub simple: bool,
    /// Pair generating a proper congruence, with that congruence.
    pub simple_witness: Option<((usize, usize), Partition)>,
    pub wille: bool,
    /// Offending regressive join-preserving map.
    pub wille_witness: Option<Vec<usize>>,
    pub verdict: bool,
}

pub fn opc_wille(l: &Lattice) -> Result<OpcReport> {
    let (simple, simple_witness) = is_simple(l)?;
    let (wille, wille_witness) = wille_property(l);
    Ok(OpcReport {
        simple,
        simple_witness,
        wille,
        wille_witness,
        verdict: simple && wille,
    })
}

/// Outcome of the brute-force k-ary completeness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteOutcome {
    AllPolynomial,
    /// A monotone function of the requested arity outside the clone.
    Witness(FunctionTable),
}

/// Up-set indicator of `a` as a unary table: top where x ≥ a, else bottom.
fn upset_indicator(l: &Lattice, a: usize) -> Vec<usize> {
    (0..l.len())
        .map(|x| if l.leq(a, x) { l.top() } else { l.bottom() })
        .collect()
}

/// Decides whether every monotone f: L^k → L is a polynomial function.
///
/// Two routes, chosen deterministically by the budget:
/// * literal — build the full k-ary clone and stream the monotone functions
///   in canonical order, checking membership;
/// * indicator — used when the clone or the enumeration outgrows the
///   budget. Every monotone f satisfies
///   f(x₁..x_k) = ⋁_ā ( f(ā) ∧ ⋀ᵢ χ_{aᵢ}(xᵢ) ), where χ_a is the up-set
///   indicator of a: the join runs over ā ≤ x̄ and f is monotone. So all
///   monotone functions of every arity are polynomials iff every unary χ_a
///   is, and a non-polynomial χ_a lifts to the k-ary monotone
///   non-polynomial g(x̄) = χ_a(x₁) (substituting constants for x₂..x_k in
///   any polynomial representation of g would make χ_a itself one).
pub fn opc_bruteforce(l: &Lattice, k: usize, budget: Option<usize>) -> Result<BruteOutcome> {
    assert!(k >= 1);
    let limit = budget.unwrap_or(DEFAULT_CLONE_BUDGET);
    let idx = TupleIndex::new(l.len(), k);
    if idx.count() > limit {
        return Err(LatticeError::BudgetExceeded { limit, reached: idx.count() });
    }
    match polynomial_clone(l, k, None, Some(limit)) {
        Ok(clone) => {
            let mut witness: Option<FunctionTable> = None;
            let mut overflowed = false;
            let mut seen = 0usize;
            for_each_monotone(l, k, |values| {
                seen += 1;
                if seen > limit {
                    overflowed = true;
                    return false;
                }
                let dense: Vec<usize> = values.iter().map(|v| v.unwrap()).collect();
                if clone.find(&dense).is_none() {
                    witness = Some(FunctionTable::total(l.len(), k, dense));
                    return false;
                }
                true
            });
            if let Some(f) = witness {
                return Ok(BruteOutcome::Witness(f));
            }
            if !overflowed {
                return Ok(BruteOutcome::AllPolynomial);
            }
        }
        Err(LatticeError::BudgetExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    // Indicator route.
    let unary = polynomial_clone(l, 1, None, Some(limit))?;
    for a in 0..l.len() {
        let chi = upset_indicator(l, a);
        if unary.find(&chi).is_none() {
            let mut tuple = vec![0usize; k];
            let values: Vec<usize> = (0..idx.count())
                .map(|p| {
                    idx.decode_into(p, &mut tuple);
                    chi[tuple[0]]
                })
                .collect();
            return Ok(BruteOutcome::Witness(FunctionTable::total(l.len(), k, values)));
        }
    }
    Ok(BruteOutcome::AllPolynomial)
}

/// The finite interpolation property at arity k, with witness on failure.
/// On a finite lattice, interpolability of every monotone function on every
/// finite subset is equivalent to every monotone function being a
/// polynomial outright, so the domain of the witness is all of L^k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpReport {
    pub holds: bool,
    /// Monotone non-interpolable function; its domain is all of L^k.
    pub witness: Option<FunctionTable>,
}

pub fn has_ip(l: &Lattice, k: usize, budget: Option<usize>) -> Result<IpReport> {
    Ok(match opc_bruteforce(l, k, budget)? {
        BruteOutcome::AllPolynomial => IpReport { holds: true, witness: None },
        BruteOutcome::Witness(f) => IpReport { holds: false, witness: Some(f) },
    })
}

/// Outcome of the antichain-amplification pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum AmplificationOutcome {
    /// All family members interpolated; the largest shared-skeleton group
    /// yields a coefficient antichain in L^{n'}.
    Amplified {
        family_size: usize,
        /// Witness terms of the chosen skeleton group.
        terms: Vec<Term>,
        n_prime: usize,
        /// Pairwise incomparable coefficient tuples, one per term.
        coefficients: Vec<Vec<usize>>,
    },
    /// A family member that is not a polynomial function.
    NonPolynomialWitness(FunctionTable),
}

/// Builds the Sperner family over the antichain, interpolates every member
/// as a unary polynomial, groups the witness terms by skeleton, and runs
/// the thinning check on the largest group (ties broken by first
/// insertion). A non-interpolable member short-circuits into
/// `NonPolynomialWitness`.
pub fn antichain_amplification(
    l: &Lattice,
    antichain: &[usize],
    budget: Option<usize>,
) -> Result<AmplificationOutcome> {
    let family = sperner_family(l, antichain)?;
    let mut terms = Vec::with_capacity(family.len());
    for f in &family {
        match interpolate(l, f, budget)? {
            Some(t) => terms.push(t),
            None => return Ok(AmplificationOutcome::NonPolynomialWitness(f.clone())),
        }
    }
    // Group indices by skeleton template, preserving first-insertion order.
    let mut groups: Vec<(Term, Vec<usize>)> = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let template = skeletonize(t).template;
        match groups.iter_mut().find(|(g, _)| *g == template) {
            Some((_, members)) => members.push(i),
            None => groups.push((template, vec![i])),
        }
    }
    let (_, members) = groups
        .iter()
        .max_by_key(|(_, members)| members.len())
        .expect("family is nonempty");
    let chosen: Vec<Term> = members.iter().map(|&i| terms[i].clone()).collect();
    let report = thinning_check(l, &chosen)?;
    Ok(AmplificationOutcome::Amplified {
        family_size: family.len(),
        terms: chosen,
        n_prime: report.n_prime,
        coefficients: report.coefficients,
    })
}
