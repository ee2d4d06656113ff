//! Stock lattices: the named example families plus seeded random instances
//! for property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LatticeError, Result};
use crate::lattice::{Lattice, Poset};
use crate::ortho::OrthoLattice;

/// Total chain with `n` elements, ids ascending.
pub fn chain(n: usize) -> Result<Lattice> {
    assert!(n >= 1);
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Lattice::from_covers(n, &covers)
}

/// M_n: an antichain of `n` atoms between fresh bounds.
/// Ids: 0 = bottom, 1..=n atoms, n+1 = top.
pub fn make_mn(n: usize) -> Result<Lattice> {
    assert!(n >= 1, "atom count must be at least 1");
    let top = n + 1;
    let mut covers = Vec::with_capacity(2 * n);
    for a in 1..=n {
        covers.push((0, a));
        covers.push((a, top));
    }
    Lattice::from_covers(n + 2, &covers)
}

/// N5, the pentagon: 0 < 1 < 3 < 4 and 0 < 2 < 4, with 2 incomparable to 1, 3.
pub fn make_n5() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]).expect("N5 is a lattice")
}

/// The three block-structured example families.
///
/// * kind 1: disjoint chains of the given sizes side by side between bounds.
/// * kind 2: antichain blocks stacked with singleton separators in between.
/// * kind 3: the blocks concatenated in reversed order into a single chain.
pub fn make_example(kind: u8, blocks: &[usize]) -> Result<Lattice> {
    assert!(!blocks.is_empty(), "at least one block required");
    assert!(blocks.iter().all(|&s| s >= 1), "block sizes must be positive");
    match kind {
        1 => {
            let n = 2 + blocks.iter().sum::<usize>();
            let top = n - 1;
            let mut covers = Vec::new();
            let mut next = 1;
            for &size in blocks {
                let first = next;
                for i in 0..size {
                    if i > 0 {
                        covers.push((next - 1, next));
                    }
                    next += 1;
                }
                covers.push((0, first));
                covers.push((next - 1, top));
            }
            Lattice::from_covers(n, &covers)
        }
        2 => {
            // 0, block_1, sep_1, block_2, sep_2, ..., block_m, 1
            let n = 2 + blocks.iter().sum::<usize>() + (blocks.len() - 1);
            let top = n - 1;
            let mut covers = Vec::new();
            let mut below: Vec<usize> = vec![0];
            let mut next = 1;
            for (bi, &size) in blocks.iter().enumerate() {
                let block: Vec<usize> = (next..next + size).collect();
                next += size;
                for &b in &block {
                    for &lo in &below {
                        covers.push((lo, b));
                    }
                }
                if bi + 1 < blocks.len() {
                    let sep = next;
                    next += 1;
                    for &b in &block {
                        covers.push((b, sep));
                    }
                    below = vec![sep];
                } else {
                    for &b in &block {
                        covers.push((b, top));
                    }
                }
            }
            Lattice::from_covers(n, &covers)
        }
        3 => {
            let total: usize = blocks.iter().sum();
            chain(total + 2)
        }
        _ => panic!("example kind must be 1, 2 or 3"),
    }
}

/// Power-set lattice on `m` atoms with set-complement orthocomplement.
/// Elements are bitmasks, so meet/join are bitwise and/or.
pub fn make_boolean(m: usize) -> Result<OrthoLattice> {
    const LIMIT: usize = 20;
    if m > LIMIT {
        return Err(LatticeError::BudgetExceeded { limit: 1 << LIMIT, reached: 1 << m });
    }
    let n = 1usize << m;
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = a & b == a;
        }
    }
    let lattice = Lattice::from_poset(Poset::new(n, leq)?)?;
    let perp: Vec<usize> = (0..n).map(|a| !a & (n - 1)).collect();
    OrthoLattice::new(lattice, perp)
}

/// MO_n: the horizontal sum of n Boolean squares; 2n atoms paired by perp.
/// Ids: 0 = bottom, atoms 1..=2n (partner of 2i-1 is 2i), 2n+1 = top.
pub fn make_mo(n: usize) -> Result<OrthoLattice> {
    assert!(n >= 1);
    let lattice = make_mn(2 * n)?;
    let top = 2 * n + 1;
    let mut perp = vec![0usize; 2 * n + 2];
    perp[0] = top;
    perp[top] = 0;
    for i in 0..n {
        let a = 2 * i + 1;
        perp[a] = a + 1;
        perp[a + 1] = a;
    }
    OrthoLattice::new(lattice, perp)
}

/// Deterministic random lattice: a closure system of subsets of a small
/// ground set, closed under intersection and containing the full set,
/// ordered by inclusion and relabeled to dense ids.
pub fn random_lattice(n: usize, seed: u64) -> Lattice {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground = (usize::BITS - n.leading_zeros()) as usize + 1;
    let full: u32 = (1u32 << ground) - 1;
    let mut sets: Vec<u32> = vec![0, full];
    for _ in 0..n {
        sets.push(rng.gen_range(0..=full));
    }
    // Close under intersection.
    loop {
        let mut added = false;
        let cur = sets.clone();
        for (i, &a) in cur.iter().enumerate() {
            for &b in &cur[i + 1..] {
                let c = a & b;
                if !sets.contains(&c) {
                    sets.push(c);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    sets.dedup();
    let m = sets.len();
    let mut leq = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = sets[a] & sets[b] == sets[a];
        }
    }
    Lattice::from_poset(Poset::new(m, leq).expect("closure system is a poset"))
        .expect("closure system is a lattice")
}

/// Deterministic random poset on `n` elements: random edges on ids oriented
/// upward, transitively closed.
pub fn random_poset(n: usize, seed: u64) -> Poset {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.3) {
                covers.push((a, b));
            }
        }
    }
    Poset::from_covers(n, &covers).expect("upward-oriented edges are acyclic")
}

/// The curated lattice suite used throughout the cross-validation tests.
pub fn curated_suite() -> Vec<Lattice> {
    vec![
        chain(2).unwrap(),
        chain(3).unwrap(),
        chain(4).unwrap(),
        chain(5).unwrap(),
        make_boolean(2).unwrap().into_lattice(),
        make_boolean(3).unwrap().into_lattice(),
        make_mn(3).unwrap(),
        make_mn(4).unwrap(),
        make_mn(5).unwrap(),
        make_n5(),
        make_example(1, &[2, 3]).unwrap(),
        make_example(2, &[3, 2]).unwrap(),
        make_example(3, &[2, 2]).unwrap(),
    ]
}

/// Names matching `curated_suite` order, for reporting.
pub fn curated_suite_names() -> Vec<&'static str> {
    vec![
        "2-element", "chain3", "chain4", "chain5", "boolean-square", "boolean-cube",
        "M3", "M4", "M5", "N5", "example1[2,3]", "example2[3,2]", "example3[2,2]",
    ]
}
