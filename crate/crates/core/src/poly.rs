//! Polynomial and σ-polynomial terms, evaluation, the clone of polynomial
//! functions with witness derivations, interpolation, skeleton extraction,
//! liminf evaluation and sublattice lower approximation.

use std::collections::HashMap;
use std::fmt;

use crate::error::{LatticeError, Result};
use crate::lattice::{Lattice, TupleIndex};
use crate::order::{compare_functions, FunctionOrder, FunctionTable};
use crate::ortho::OrthoLattice;

/// Default cap on the number of tables a clone closure may hold.
pub const DEFAULT_CLONE_BUDGET: usize = 250_000;

/// A formal term over variables, lattice constants, n-ary join/meet, the
/// orthocomplement, and finite sup/inf families.
///
/// `Join`/`Meet` carry at least two subterms; `Sup`/`Inf` carry arbitrary
/// finite families with the conventions sup ∅ = bottom, inf ∅ = top.
/// `Slot` appears only inside skeleton templates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// Variable x_i, 1-based.
    Var(usize),
    /// Lattice constant by element id.
    Const(usize),
    Join(Vec<Term>),
    Meet(Vec<Term>),
    Perp(Box<Term>),
    Sup(Vec<Term>),
    Inf(Vec<Term>),
    /// Numbered coefficient slot of a skeleton template, 1-based.
    Slot(usize),
}

impl Term {
    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(vec![a, b])
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(vec![a, b])
    }

    /// Largest variable index used (0 when the term is variable-free).
    pub fn max_var(&self) -> usize {
        match self {
            Term::Var(i) => *i,
            Term::Const(_) | Term::Slot(_) => 0,
            Term::Perp(t) => t.max_var(),
            Term::Join(ts) | Term::Meet(ts) | Term::Sup(ts) | Term::Inf(ts) => {
                ts.iter().map(Term::max_var).max().unwrap_or(0)
            }
        }
    }

    /// Whether any `Perp` node occurs, i.e. the term needs an ortholattice.
    pub fn uses_perp(&self) -> bool {
        match self {
            Term::Perp(_) => true,
            Term::Var(_) | Term::Const(_) | Term::Slot(_) => false,
            Term::Join(ts) | Term::Meet(ts) | Term::Sup(ts) | Term::Inf(ts) => {
                ts.iter().any(Term::uses_perp)
            }
        }
    }

    fn eval_inner(&self, l: &Lattice, perp: Option<&[usize]>, point: &[usize]) -> Result<usize> {
        match self {
            Term::Var(i) => {
                if *i == 0 || *i > point.len() {
                    return Err(LatticeError::ArityMismatch { expected: point.len(), got: *i });
                }
                Ok(point[*i - 1])
            }
            Term::Const(c) => {
                l.check_element(*c)?;
                Ok(*c)
            }
            Term::Slot(s) => Err(LatticeError::InvalidTerm(format!(
                "skeleton slot {s} cannot be evaluated; substitute coefficients first"
            ))),
            Term::Perp(t) => {
                let table = perp.ok_or(LatticeError::PerpUnavailable)?;
                Ok(table[t.eval_inner(l, perp, point)?])
            }
            Term::Join(ts) => {
                if ts.len() < 2 {
                    return Err(LatticeError::InvalidTerm("join needs >= 2 subterms".into()));
                }
                let mut acc = l.bottom();
                for t in ts {
                    acc = l.join(acc, t.eval_inner(l, perp, point)?);
                }
                Ok(acc)
            }
            Term::Meet(ts) => {
                if ts.len() < 2 {
                    return Err(LatticeError::InvalidTerm("meet needs >= 2 subterms".into()));
                }
                let mut acc = l.top();
                for t in ts {
                    acc = l.meet(acc, t.eval_inner(l, perp, point)?);
                }
                Ok(acc)
            }
            Term::Sup(ts) => {
                let mut acc = l.bottom();
                for t in ts {
                    acc = l.join(acc, t.eval_inner(l, perp, point)?);
                }
                Ok(acc)
            }
            Term::Inf(ts) => {
                let mut acc = l.top();
                for t in ts {
                    acc = l.meet(acc, t.eval_inner(l, perp, point)?);
                }
                Ok(acc)
            }
        }
    }

    /// Evaluates on a plain lattice; `Perp` nodes yield `PerpUnavailable`.
    pub fn eval(&self, l: &Lattice, point: &[usize]) -> Result<usize> {
        self.eval_inner(l, None, point)
    }

    /// Evaluates on an ortholattice, resolving `Perp` via its table.
    pub fn eval_ortho(&self, o: &OrthoLattice, point: &[usize]) -> Result<usize> {
        self.eval_inner(o.lattice(), Some(o.perp_table()), point)
    }

    /// Total induced function table of arity k on L.
    pub fn table(&self, l: &Lattice, k: usize) -> Result<FunctionTable> {
        let idx = TupleIndex::new(l.len(), k);
        let mut point = vec![0usize; k];
        let mut values = Vec::with_capacity(idx.count());
        for p in 0..idx.count() {
            idx.decode_into(p, &mut point);
            values.push(self.eval(l, &point)?);
        }
        Ok(FunctionTable::total(l.len(), k, values))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Const(c) => write!(f, "c{c}"),
            Term::Slot(s) => write!(f, "@{s}"),
            Term::Perp(t) => write!(f, "(perp {t})"),
            Term::Join(ts) | Term::Meet(ts) | Term::Sup(ts) | Term::Inf(ts) => {
                let op = match self {
                    Term::Join(_) => "join",
                    Term::Meet(_) => "meet",
                    Term::Sup(_) => "sup",
                    _ => "inf",
                };
                write!(f, "({op}")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses the s-expression term syntax: `x1..xk`, `c<id>`, `(join e1 e2 ...)`,
/// `(meet e1 e2 ...)`, `(perp e)`, `(sup ...)`, `(inf ...)`.
pub fn parse_term(input: &str) -> Result<Term> {
    let tokens = tokenize(input)?;
    let mut pos = 0;
    let term = parse_expr(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(LatticeError::InvalidTerm(format!(
            "trailing input after term: {:?}",
            tokens[pos]
        )));
    }
    Ok(term)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open,
    Close,
    Word(String),
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut word = String::new();
    for ch in input.chars() {
        match ch {
            '(' | ')' => {
                if !word.is_empty() {
                    tokens.push(Token::Word(std::mem::take(&mut word)));
                }
                tokens.push(if ch == '(' { Token::Open } else { Token::Close });
            }
            c if c.is_whitespace() => {
                if !word.is_empty() {
                    tokens.push(Token::Word(std::mem::take(&mut word)));
                }
            }
            c => word.push(c),
        }
    }
    if !word.is_empty() {
        tokens.push(Token::Word(word));
    }
    if tokens.is_empty() {
        return Err(LatticeError::InvalidTerm("empty input".into()));
    }
    Ok(tokens)
}

fn parse_expr(tokens: &[Token], pos: &mut usize) -> Result<Term> {
    let bad = |msg: &str| LatticeError::InvalidTerm(msg.to_string());
    match tokens.get(*pos) {
        None => Err(bad("unexpected end of input")),
        Some(Token::Close) => Err(bad("unexpected ')'")),
        Some(Token::Word(w)) => {
            *pos += 1;
            parse_atom(w)
        }
        Some(Token::Open) => {
            *pos += 1;
            let op = match tokens.get(*pos) {
                Some(Token::Word(w)) => w.clone(),
                _ => return Err(bad("expected an operator after '('")),
            };
            *pos += 1;
            let mut args = Vec::new();
            loop {
                match tokens.get(*pos) {
                    Some(Token::Close) => {
                        *pos += 1;
                        break;
                    }
                    None => return Err(bad("missing ')'")),
                    _ => args.push(parse_expr(tokens, pos)?),
                }
            }
            match op.as_str() {
                "join" if args.len() >= 2 => Ok(Term::Join(args)),
                "meet" if args.len() >= 2 => Ok(Term::Meet(args)),
                "join" | "meet" => Err(bad("join/meet need at least 2 arguments")),
                "perp" if args.len() == 1 => Ok(Term::Perp(Box::new(args.pop().unwrap()))),
                "perp" => Err(bad("perp takes exactly 1 argument")),
                "sup" => Ok(Term::Sup(args)),
                "inf" => Ok(Term::Inf(args)),
                other => Err(bad(&format!("unknown operator {other:?}"))),
            }
        }
    }
}

fn parse_atom(word: &str) -> Result<Term> {
    let bad = || LatticeError::InvalidTerm(format!("cannot parse atom {word:?}"));
    if let Some(rest) = word.strip_prefix('x') {
        let i: usize = rest.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(LatticeError::InvalidTerm("variable indices start at x1".into()));
        }
        return Ok(Term::Var(i));
    }
    if let Some(rest) = word.strip_prefix('c') {
        let c: usize = rest.parse().map_err(|_| bad())?;
        return Ok(Term::Const(c));
    }
    Err(bad())
}

/// How a clone member was obtained: a generator, or a pointwise operation on
/// earlier members. Indices reference the clone's insertion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    Projection(usize),
    Constant(usize),
    Join(usize, usize),
    Meet(usize, usize),
    Perp(usize),
}

/// A clone member: its value vector over the restriction points plus the
/// derivation that produced it.
#[derive(Debug, Clone)]
pub struct CloneMember {
    pub table: Vec<usize>,
    pub derivation: Derivation,
}

/// The clone of (ortho)polynomial functions on a restriction set, with
/// witness derivations. Members are deduplicated by table equality and kept
/// in insertion order.
#[derive(Debug, Clone)]
pub struct PolynomialClone {
    arity: usize,
    base: usize,
    points: Vec<usize>,
    members: Vec<CloneMember>,
    index: HashMap<Vec<usize>, usize>,
}

impl PolynomialClone {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Size of the underlying lattice.
    pub fn base(&self) -> usize {
        self.base
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Tuple indices of the restriction set, in evaluation order.
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn members(&self) -> &[CloneMember] {
        &self.members
    }

    /// Index of the member with this value vector over the restriction points.
    pub fn find(&self, table: &[usize]) -> Option<usize> {
        self.index.get(table).copied()
    }

    /// Whether a total function table restricted to the points is a member.
    pub fn contains_function(&self, f: &FunctionTable) -> Option<usize> {
        let restricted: Vec<usize> = self.points.iter().map(|&p| f.get(p)).collect::<Option<_>>()?;
        self.find(&restricted)
    }

    /// Reconstructs a witness term along the derivation chain.
    pub fn witness_term(&self, member: usize) -> Term {
        match self.members[member].derivation {
            Derivation::Projection(i) => Term::Var(i + 1),
            Derivation::Constant(c) => Term::Const(c),
            Derivation::Join(a, b) => Term::join(self.witness_term(a), self.witness_term(b)),
            Derivation::Meet(a, b) => Term::meet(self.witness_term(a), self.witness_term(b)),
            Derivation::Perp(a) => Term::Perp(Box::new(self.witness_term(a))),
        }
    }
}

/// Least set of k-ary functions on the restriction set containing the
/// projections and all constants, closed under pointwise join and meet
/// (and orthocomplement when `perp` is given). Pairs are processed
/// breadth-first in insertion order, so derivations are deterministic.
fn clone_closure(
    l: &Lattice,
    perp: Option<&[usize]>,
    k: usize,
    restriction: Option<&[usize]>,
    max_size: Option<usize>,
) -> Result<PolynomialClone> {
    assert!(k >= 1);
    let limit = max_size.unwrap_or(DEFAULT_CLONE_BUDGET);
    let idx = TupleIndex::new(l.len(), k);
    let points: Vec<usize> = match restriction {
        Some(ps) => {
            let mut ps = ps.to_vec();
            ps.sort_unstable();
            ps.dedup();
            for &p in &ps {
                if p >= idx.count() {
                    return Err(LatticeError::InvalidElement { id: p, n: idx.count() });
                }
            }
            ps
        }
        None => (0..idx.count()).collect(),
    };
    let mut clone = PolynomialClone {
        arity: k,
        base: l.len(),
        points,
        members: Vec::new(),
        index: HashMap::new(),
    };

    let mut generators: Vec<(Vec<usize>, Derivation)> = Vec::new();
    let mut tuple = vec![0usize; k];
    for i in 0..k {
        let table: Vec<usize> = clone
            .points
            .iter()
            .map(|&p| {
                idx.decode_into(p, &mut tuple);
                tuple[i]
            })
            .collect();
        generators.push((table, Derivation::Projection(i)));
    }
    for c in 0..l.len() {
        generators.push((vec![c; clone.points.len()], Derivation::Constant(c)));
    }

    // Value vectors that fit in a machine word get a packed direct-address
    // index; the pair loop dominates large closures and the packed path
    // avoids per-pair allocation and hashing. Both paths insert in the same
    // order, so derivations and member indices are identical.
    let pts = clone.points.len();
    let bits = (usize::BITS - (l.len().max(2) - 1).leading_zeros()) as usize;
    if pts > 0 && bits * pts <= 22 {
        closure_packed(l, perp, &mut clone, generators, limit, bits)?;
    } else {
        closure_hashed(l, perp, &mut clone, generators, limit)?;
    }
    Ok(clone)
}

fn closure_hashed(
    l: &Lattice,
    perp: Option<&[usize]>,
    clone: &mut PolynomialClone,
    generators: Vec<(Vec<usize>, Derivation)>,
    limit: usize,
) -> Result<()> {
    let push = |clone: &mut PolynomialClone, table: Vec<usize>, derivation: Derivation| -> Result<()> {
        if clone.index.contains_key(&table) {
            return Ok(());
        }
        if clone.members.len() >= limit {
            return Err(LatticeError::BudgetExceeded { limit, reached: clone.members.len() + 1 });
        }
        clone.index.insert(table.clone(), clone.members.len());
        clone.members.push(CloneMember { table, derivation });
        Ok(())
    };
    for (table, derivation) in generators {
        push(clone, table, derivation)?;
    }
    let mut j = 0;
    while j < clone.members.len() {
        if let Some(perp_table) = perp {
            let table: Vec<usize> = clone.members[j].table.iter().map(|&v| perp_table[v]).collect();
            push(clone, table, Derivation::Perp(j))?;
        }
        for i in 0..j {
            let joined: Vec<usize> = clone.members[i]
                .table
                .iter()
                .zip(&clone.members[j].table)
                .map(|(&a, &b)| l.join(a, b))
                .collect();
            push(clone, joined, Derivation::Join(i, j))?;
            let met: Vec<usize> = clone.members[i]
                .table
                .iter()
                .zip(&clone.members[j].table)
                .map(|(&a, &b)| l.meet(a, b))
                .collect();
            push(clone, met, Derivation::Meet(i, j))?;
        }
        j += 1;
    }
    Ok(())
}

fn closure_packed(
    l: &Lattice,
    perp: Option<&[usize]>,
    clone: &mut PolynomialClone,
    generators: Vec<(Vec<usize>, Derivation)>,
    limit: usize,
    bits: usize,
) -> Result<()> {
    let pts = clone.points.len();
    let mask = (1u32 << bits) - 1;
    const EMPTY: u32 = u32::MAX;
    let mut slots = vec![EMPTY; 1usize << (bits * pts)];
    let mut packed: Vec<u32> = Vec::new();

    let pack = |table: &[usize]| -> u32 {
        table
            .iter()
            .enumerate()
            .fold(0u32, |acc, (t, &v)| acc | (v as u32) << (bits * t))
    };
    let unpack = |key: u32| -> Vec<usize> {
        (0..pts).map(|t| (key >> (bits * t) & mask) as usize).collect()
    };

    for (table, derivation) in generators {
        let key = pack(&table);
        if slots[key as usize] != EMPTY {
            continue;
        }
        if clone.members.len() >= limit {
            return Err(LatticeError::BudgetExceeded { limit, reached: clone.members.len() + 1 });
        }
        slots[key as usize] = clone.members.len() as u32;
        clone.index.insert(table.clone(), clone.members.len());
        packed.push(key);
        clone.members.push(CloneMember { table, derivation });
    }

    let mut j = 0;
    while j < packed.len() {
        let kj = packed[j];
        let mut emit = |key: u32,
                        derivation: Derivation,
                        clone: &mut PolynomialClone,
                        packed: &mut Vec<u32>|
         -> Result<()> {
            if slots[key as usize] != EMPTY {
                return Ok(());
            }
            if clone.members.len() >= limit {
                return Err(LatticeError::BudgetExceeded { limit, reached: clone.members.len() + 1 });
            }
            slots[key as usize] = clone.members.len() as u32;
            let table = unpack(key);
            clone.index.insert(table.clone(), clone.members.len());
            packed.push(key);
            clone.members.push(CloneMember { table, derivation });
            Ok(())
        };
        if let Some(perp_table) = perp {
            let mut key = 0u32;
            for t in 0..pts {
                let v = (kj >> (bits * t) & mask) as usize;
                key |= (perp_table[v] as u32) << (bits * t);
            }
            emit(key, Derivation::Perp(j), clone, &mut packed)?;
        }
        for i in 0..j {
            let ki = packed[i];
            let mut jkey = 0u32;
            let mut mkey = 0u32;
            for t in 0..pts {
                let a = (ki >> (bits * t) & mask) as usize;
                let b = (kj >> (bits * t) & mask) as usize;
                jkey |= (l.join(a, b) as u32) << (bits * t);
                mkey |= (l.meet(a, b) as u32) << (bits * t);
            }
            emit(jkey, Derivation::Join(i, j), clone, &mut packed)?;
            emit(mkey, Derivation::Meet(i, j), clone, &mut packed)?;
        }
        j += 1;
    }
    Ok(())
}

/// Clone of lattice polynomial functions (no orthocomplement).
pub fn polynomial_clone(
    l: &Lattice,
    k: usize,
    restriction: Option<&[usize]>,
    max_size: Option<usize>,
) -> Result<PolynomialClone> {
    clone_closure(l, None, k, restriction, max_size)
}

/// Clone of orthopolynomial functions: closed under join, meet and perp.
pub fn ortho_clone(o: &OrthoLattice, k: usize, max_size: Option<usize>) -> Result<PolynomialClone> {
    clone_closure(o.lattice(), Some(o.perp_table()), k, None, max_size)
}

/// Searches for a polynomial agreeing with the partial function on its
/// domain. Returns the witness of minimal derivation depth, or `None` when
/// no clone member matches (in particular for non-monotone-on-domain f).
pub fn interpolate(l: &Lattice, f: &FunctionTable, max_size: Option<usize>) -> Result<Option<Term>> {
    assert_eq!(f.base(), l.len());
    let domain = f.domain();
    let clone = clone_closure(l, None, f.arity(), Some(&domain), max_size)?;
    let target: Vec<usize> = clone.points().iter().map(|&p| f.get(p).unwrap()).collect();
    Ok(clone.find(&target).map(|m| clone.witness_term(m)))
}

/// A term template with numbered coefficient slots plus the coefficient
/// tuple that fills them. Substitution reproduces the original term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub template: Term,
    pub coefficients: Vec<usize>,
}

/// Replaces constants by slots numbered in left-to-right traversal order.
pub fn skeletonize(term: &Term) -> Skeleton {
    fn walk(t: &Term, coeffs: &mut Vec<usize>) -> Term {
        match t {
            Term::Const(c) => {
                coeffs.push(*c);
                Term::Slot(coeffs.len())
            }
            Term::Var(i) => Term::Var(*i),
            Term::Slot(s) => Term::Slot(*s),
            Term::Perp(inner) => Term::Perp(Box::new(walk(inner, coeffs))),
            Term::Join(ts) => Term::Join(ts.iter().map(|t| walk(t, coeffs)).collect()),
            Term::Meet(ts) => Term::Meet(ts.iter().map(|t| walk(t, coeffs)).collect()),
            Term::Sup(ts) => Term::Sup(ts.iter().map(|t| walk(t, coeffs)).collect()),
            Term::Inf(ts) => Term::Inf(ts.iter().map(|t| walk(t, coeffs)).collect()),
        }
    }
    let mut coefficients = Vec::new();
    let template = walk(term, &mut coefficients);
    Skeleton { template, coefficients }
}

/// Fills the slots of a template with a coefficient tuple.
pub fn substitute(template: &Term, coefficients: &[usize]) -> Result<Term> {
    fn walk(t: &Term, coeffs: &[usize]) -> Result<Term> {
        Ok(match t {
            Term::Slot(s) => {
                if *s == 0 || *s > coeffs.len() {
                    return Err(LatticeError::InvalidTerm(format!(
                        "slot {s} has no coefficient (tuple has {})",
                        coeffs.len()
                    )));
                }
                Term::Const(coeffs[*s - 1])
            }
            Term::Var(i) => Term::Var(*i),
            Term::Const(c) => Term::Const(*c),
            Term::Perp(inner) => Term::Perp(Box::new(walk(inner, coeffs)?)),
            Term::Join(ts) => Term::Join(ts.iter().map(|t| walk(t, coeffs)).collect::<Result<_>>()?),
            Term::Meet(ts) => Term::Meet(ts.iter().map(|t| walk(t, coeffs)).collect::<Result<_>>()?),
            Term::Sup(ts) => Term::Sup(ts.iter().map(|t| walk(t, coeffs)).collect::<Result<_>>()?),
            Term::Inf(ts) => Term::Inf(ts.iter().map(|t| walk(t, coeffs)).collect::<Result<_>>()?),
        })
    }
    walk(template, coefficients)
}

/// Result of the thinning check: coefficient tuples of a shared-skeleton
/// family with pairwise incomparable induced functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinningReport {
    /// Number of coefficient slots (the exponent n' of the ambient power).
    pub n_prime: usize,
    /// One coefficient tuple per input term, in input order.
    pub coefficients: Vec<Vec<usize>>,
    /// Whether the tuples are pairwise incomparable in L^{n'}.
    pub antichain: bool,
    /// A comparable pair of tuple indices, should one exist. Cannot occur
    /// when the preconditions hold; populated for reporting completeness.
    pub contradiction: Option<(usize, usize)>,
}

/// Checks the coefficient-antichain property: terms sharing one skeleton
/// whose induced functions are pairwise incomparable have pairwise
/// incomparable coefficient tuples.
pub fn thinning_check(l: &Lattice, terms: &[Term]) -> Result<ThinningReport> {
    assert!(!terms.is_empty(), "at least one term required");
    let skeletons: Vec<Skeleton> = terms.iter().map(skeletonize).collect();
    for (i, s) in skeletons.iter().enumerate() {
        if s.template != skeletons[0].template {
            return Err(LatticeError::SkeletonMismatch { index: i });
        }
    }
    let k = terms.iter().map(Term::max_var).max().unwrap_or(0).max(1);
    let tables: Vec<FunctionTable> = terms
        .iter()
        .map(|t| t.table(l, k))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..tables.len() {
        for j in i + 1..tables.len() {
            if compare_functions(l, &tables[i], &tables[j])? != FunctionOrder::Incomparable {
                return Err(LatticeError::FunctionsComparable { i, j });
            }
        }
    }
    let coefficients: Vec<Vec<usize>> = skeletons.into_iter().map(|s| s.coefficients).collect();
    let mut contradiction = None;
    'outer: for i in 0..coefficients.len() {
        for j in i + 1..coefficients.len() {
            let le = coefficients[i].iter().zip(&coefficients[j]).all(|(&a, &b)| l.leq(a, b));
            let ge = coefficients[i].iter().zip(&coefficients[j]).all(|(&a, &b)| l.leq(b, a));
            if le || ge {
                contradiction = Some((i, j));
                break 'outer;
            }
        }
    }
    debug_assert!(
        contradiction.is_none(),
        "comparable coefficients force comparable functions by slot monotonicity"
    );
    Ok(ThinningReport {
        n_prime: coefficients[0].len(),
        antichain: contradiction.is_none(),
        coefficients,
        contradiction,
    })
}

/// sup over k of (inf over n in k..=m of p_n(point)), plus a flag recording
/// whether the value sequence is constant on a final segment of length >= 2.
///
/// The sequence stands for an infinite one whose behaviour past the
/// truncation is unknown, so the degenerate singleton suffix is excluded:
/// k ranges over 0..m. A strictly alternating (0, 1, 0, 1) therefore gives
/// bottom rather than its last value.
pub fn liminf_eval(l: &Lattice, seq: &[Term], point: &[usize]) -> Result<(usize, bool)> {
    assert!(!seq.is_empty(), "sequence must be nonempty");
    let values: Vec<usize> = seq
        .iter()
        .map(|t| t.eval(l, point))
        .collect::<Result<Vec<_>>>()?;
    if values.len() == 1 {
        return Ok((values[0], false));
    }
    let mut result = l.bottom();
    for k in 0..values.len() - 1 {
        let suffix_inf = values[k..].iter().fold(l.top(), |acc, &v| l.meet(acc, v));
        result = l.join(result, suffix_inf);
    }
    let m = values.len();
    let stabilized = m >= 2 && values[m - 2] == values[m - 1];
    Ok((result, stabilized))
}

/// Lower approximation of a total unary function onto a sublattice candidate
/// S: f_S(x) = sup_S { y in S : y <=_L f(x) } for x in S.
///
/// S must contain the bounds and every pair of its elements must have a
/// greatest lower and least upper bound inside S under the restricted order.
pub fn lower_approximation(l: &Lattice, f: &FunctionTable, s: &[usize]) -> Result<FunctionTable> {
    assert_eq!(f.base(), l.len());
    assert_eq!(f.arity(), 1, "lower approximation is defined for unary tables");
    assert!(f.is_total(), "lower approximation requires a total table");
    let mut sub: Vec<usize> = s.to_vec();
    sub.sort_unstable();
    sub.dedup();
    for &x in &sub {
        l.check_element(x)?;
    }
    let fail = |reason: String| LatticeError::NotASublatticeCandidate { reason };
    if !sub.contains(&l.bottom()) || !sub.contains(&l.top()) {
        return Err(fail("subset must contain bottom and top".into()));
    }
    // Restricted sup: least member of S above both, by scan.
    let s_join = |a: usize, b: usize| -> Result<usize> {
        let ubs: Vec<usize> = sub.iter().copied().filter(|&c| l.leq(a, c) && l.leq(b, c)).collect();
        ubs.iter()
            .copied()
            .find(|&c| ubs.iter().all(|&d| l.leq(c, d)))
            .ok_or_else(|| fail(format!("elements {a} and {b} have no least upper bound in S")))
    };
    let s_meet = |a: usize, b: usize| -> Result<usize> {
        let lbs: Vec<usize> = sub.iter().copied().filter(|&c| l.leq(c, a) && l.leq(c, b)).collect();
        lbs.iter()
            .copied()
            .find(|&c| lbs.iter().all(|&d| l.leq(d, c)))
            .ok_or_else(|| fail(format!("elements {a} and {b} have no greatest lower bound in S")))
    };
    for (i, &a) in sub.iter().enumerate() {
        for &b in &sub[i..] {
            s_join(a, b)?;
            s_meet(a, b)?;
        }
    }
    let mut points = Vec::new();
    for &x in &sub {
        let fx = f.get(x).unwrap();
        let mut acc = l.bottom();
        for &y in &sub {
            if l.leq(y, fx) {
                acc = s_join(acc, y)?;
            }
        }
        points.push((x, acc));
    }
    FunctionTable::partial(l.len(), 1, &points)
}
