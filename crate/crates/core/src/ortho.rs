//! Ortholattices: validation of the orthocomplement laws, orthoproducts,
//! horizontal sums, and the factorization of arbitrary unary maps through
//! the graph antichain of the horizontal sum O + (O x O).

use crate::error::{LatticeError, Result};
use crate::lattice::{Lattice, Poset};
use crate::order::FunctionTable;

/// A bounded lattice with an antitone involution `perp` satisfying
/// x ∨ x⊥ = top and x ∧ x⊥ = bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoLattice {
    lattice: Lattice,
    perp: Vec<usize>,
}

impl OrthoLattice {
    /// Validates the orthocomplement laws and wraps the pair. Checks run in
    /// the order involution, complement laws, antitonicity, and report the
    /// first violating witness.
    pub fn new(lattice: Lattice, perp: Vec<usize>) -> Result<Self> {
        let n = lattice.len();
        if perp.len() != n {
            return Err(LatticeError::ArityMismatch { expected: n, got: perp.len() });
        }
        for &p in &perp {
            lattice.check_element(p)?;
        }
        for x in 0..n {
            let back = perp[perp[x]];
            if back != x {
                return Err(LatticeError::InvolutionFails { x, result: back });
            }
        }
        for x in 0..n {
            let j = lattice.join(x, perp[x]);
            if j != lattice.top() {
                return Err(LatticeError::ComplementFails { x, op: '∨', result: j });
            }
            let m = lattice.meet(x, perp[x]);
            if m != lattice.bottom() {
                return Err(LatticeError::ComplementFails { x, op: '∧', result: m });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if lattice.leq(a, b) && !lattice.leq(perp[b], perp[a]) {
                    return Err(LatticeError::NotAntitone { a, b });
                }
            }
        }
        Ok(OrthoLattice { lattice, perp })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn perp(&self, x: usize) -> usize {
        self.perp[x]
    }

    pub fn perp_table(&self) -> &[usize] {
        &self.perp
    }
}

/// Componentwise product O1 x O2 with componentwise orthocomplement.
/// Element (i, j) gets id i * |O2| + j.
pub fn ortho_product(o1: &OrthoLattice, o2: &OrthoLattice) -> Result<OrthoLattice> {
    let (n1, n2) = (o1.len(), o2.len());
    let n = n1 * n2;
    let mut leq = vec![false; n * n];
    for a1 in 0..n1 {
        for a2 in 0..n2 {
            for b1 in 0..n1 {
                for b2 in 0..n2 {
                    if o1.lattice().leq(a1, b1) && o2.lattice().leq(a2, b2) {
                        leq[(a1 * n2 + a2) * n + (b1 * n2 + b2)] = true;
                    }
                }
            }
        }
    }
    let lattice = Lattice::from_poset(Poset::new(n, leq)?)?;
    let perp: Vec<usize> = (0..n)
        .map(|e| o1.perp(e / n2) * n2 + o2.perp(e % n2))
        .collect();
    OrthoLattice::new(lattice, perp)
}

/// Horizontal sum: the two interiors side by side between shared bounds.
/// Cross-summand interior elements are incomparable, so cross meets are
/// bottom and cross joins are top. Returns the sum together with the two
/// id embeddings. Ids: 0 = bottom, then the O1 interior in ascending
/// original order, then the O2 interior, then top.
pub fn horizontal_sum(
    o1: &OrthoLattice,
    o2: &OrthoLattice,
) -> Result<(OrthoLattice, Vec<usize>, Vec<usize>)> {
    if o1.len() < 3 || o2.len() < 3 {
        return Err(LatticeError::DegenerateSummand);
    }
    let n = o1.len() + o2.len() - 2;
    let top = n - 1;
    let mut embed1 = vec![0usize; o1.len()];
    let mut embed2 = vec![0usize; o2.len()];
    let mut next = 1;
    for (o, embed) in [(o1, &mut embed1), (o2, &mut embed2)] {
        for x in 0..o.len() {
            embed[x] = if x == o.lattice().bottom() {
                0
            } else if x == o.lattice().top() {
                top
            } else {
                let id = next;
                next += 1;
                id
            };
        }
    }
    let mut leq = vec![false; n * n];
    let mut set = |a: usize, b: usize| leq[a * n + b] = true;
    for e in 0..n {
        set(e, e);
        set(0, e);
        set(e, top);
    }
    for (o, embed) in [(o1, &embed1), (o2, &embed2)] {
        for a in 0..o.len() {
            for b in 0..o.len() {
                if o.lattice().leq(a, b) {
                    set(embed[a], embed[b]);
                }
            }
        }
    }
    let lattice = Lattice::from_poset(Poset::new(n, leq)?)?;
    let mut perp = vec![0usize; n];
    for (o, embed) in [(o1, &embed1), (o2, &embed2)] {
        for x in 0..o.len() {
            perp[embed[x]] = embed[o.perp(x)];
        }
    }
    let sum = OrthoLattice::new(lattice, perp)?;
    Ok((sum, embed1, embed2))
}

/// The factorization of an arbitrary total unary map through the graph
/// antichain: inside O1 = O + (O x O), with g1(x) = (x, 0), g2(x) = (1, x)
/// and h defined on A = {(x, x⊥)} by h((x, x⊥)) = f(x), the identity
/// f(x) = h(g1(x) ∨ g2(x)⊥) holds pointwise.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    /// The horizontal sum O + (O x O).
    pub o1: OrthoLattice,
    /// Id embedding of O into the sum.
    pub embed_o: Vec<usize>,
    /// Id embedding of O x O into the sum.
    pub embed_square: Vec<usize>,
    /// The graph antichain {(x, x⊥) : x ∈ O}, as sum ids in x order.
    pub graph: Vec<usize>,
    /// g1 and g2 as partial tables on the sum, defined on the embedded copy
    /// of O with values in the O x O summand.
    pub g1: FunctionTable,
    pub g2: FunctionTable,
    /// h as a partial table on the sum, defined exactly on the graph, with
    /// values in the O summand.
    pub h: FunctionTable,
    pub graph_is_antichain: bool,
    pub g_monotone: bool,
    pub h_monotone: bool,
    pub identity_verified: bool,
}

/// Builds and verifies the factorization for a total unary f on O.
/// f need not be monotone.
pub fn factorization_report(o: &OrthoLattice, f: &FunctionTable) -> Result<FactorizationReport> {
    assert_eq!(f.arity(), 1, "factorization applies to unary maps");
    assert_eq!(f.base(), o.len());
    assert!(f.is_total(), "factorization requires a total map");
    let n = o.len();
    let square = ortho_product(o, o)?;
    let (o1, embed_o, embed_square) = horizontal_sum(o, &square)?;
    // Product id of the pair (a, b) in O x O.
    let enc = |a: usize, b: usize| a * n + b;
    let g1_points: Vec<(usize, usize)> = (0..n)
        .map(|x| (embed_o[x], embed_square[enc(x, o.lattice().bottom())]))
        .collect();
    let g2_points: Vec<(usize, usize)> = (0..n)
        .map(|x| (embed_o[x], embed_square[enc(o.lattice().top(), x)]))
        .collect();
    let g1 = FunctionTable::partial(o1.len(), 1, &g1_points)?;
    let g2 = FunctionTable::partial(o1.len(), 1, &g2_points)?;
    let graph: Vec<usize> = (0..n).map(|x| embed_square[enc(x, o.perp(x))]).collect();
    let h_points: Vec<(usize, usize)> = (0..n)
        .map(|x| (graph[x], embed_o[f.get(x).unwrap()]))
        .collect();
    let h = FunctionTable::partial(o1.len(), 1, &h_points)?;

    let mut graph_is_antichain = true;
    'pairs: for (i, &a) in graph.iter().enumerate() {
        for &b in &graph[i + 1..] {
            if o1.lattice().leq(a, b) || o1.lattice().leq(b, a) {
                graph_is_antichain = false;
                break 'pairs;
            }
        }
    }
    let mut g_monotone = true;
    let mut h_monotone = true;
    for a in 0..n {
        for b in 0..n {
            if o.lattice().leq(a, b) {
                let l1 = o1.lattice();
                if !l1.leq(g1.get(embed_o[a]).unwrap(), g1.get(embed_o[b]).unwrap())
                    || !l1.leq(g2.get(embed_o[a]).unwrap(), g2.get(embed_o[b]).unwrap())
                {
                    g_monotone = false;
                }
            }
            if o1.lattice().leq(graph[a], graph[b])
                && !o1.lattice().leq(h.get(graph[a]).unwrap(), h.get(graph[b]).unwrap())
            {
                h_monotone = false;
            }
        }
    }
    let mut identity_verified = true;
    for x in 0..n {
        let arg = o1
            .lattice()
            .join(g1.get(embed_o[x]).unwrap(), o1.perp(g2.get(embed_o[x]).unwrap()));
        if h.get(arg) != Some(embed_o[f.get(x).unwrap()]) {
            identity_verified = false;
        }
    }
    Ok(FactorizationReport {
        o1,
        embed_o,
        embed_square,
        graph,
        g1,
        g2,
        h,
        graph_is_antichain,
        g_monotone,
        h_monotone,
        identity_verified,
    })
}
