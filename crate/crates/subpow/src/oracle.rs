//! Brute-force ground truth by orbit enumeration.
//!
//! Shifting every member of a d-subset of Z_l by one is a bijection,
//! so the subsets split into shift orbits; an orbit of period k is
//! exactly one k-cycle of the subset power. Enumerating all C(l, d)
//! subsets and grouping them into orbits therefore recomputes the
//! cycle spectrum with no shared logic with the closed-form count.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::cycle_structure::{binomial, CycleSpectrum};
use crate::error::{Error, Result};
use crate::subset_power::{subset_rank, subset_unrank, SubsetVertex};

/// Default cap on C(l, d) for brute-force enumeration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// One shift orbit: its lexicographically minimal subset and its
/// period, the least positive shift mapping the orbit to itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    representative: SubsetVertex,
    period: usize,
}

impl OrbitRecord {
    /// Lexicographically minimal subset in the orbit.
    pub fn representative(&self) -> &SubsetVertex {
        &self.representative
    }

    /// Least positive r with shift_subset(representative, r, l) equal
    /// to the representative; always divides l.
    pub fn period(&self) -> usize {
        self.period
    }
}

/// Shifts every member of `a` by `s` modulo `l`. Any integer shift is
/// accepted; members must lie in `{0..l-1}`.
pub fn shift_subset(a: &SubsetVertex, s: i64, l: usize) -> Result<SubsetVertex> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    if let Some(&m) = a.members().iter().find(|&&m| m >= l) {
        return Err(Error::MemberOutOfModulus {
            member: m,
            modulus: l,
        });
    }
    let mut members: Vec<usize> = a
        .members()
        .iter()
        .map(|&x| (x as i128 + s as i128).rem_euclid(l as i128) as usize)
        .collect();
    members.sort_unstable();
    Ok(SubsetVertex::from_sorted(members))
}

/// Least positive r with shift_subset(a, r, l) = a. The shift by l is
/// the identity, so r exists and divides l.
pub fn orbit_period(a: &SubsetVertex, l: usize) -> Result<usize> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut current = shift_subset(a, 1, l)?;
    let mut r = 1;
    while &current != a {
        current = shift_subset(&current, 1, l)?;
        r += 1;
    }
    Ok(r)
}

/// Reduces every member of `a` modulo `m`, collapsing duplicates.
pub fn project_mod(a: &SubsetVertex, m: usize) -> Result<SubsetVertex> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut members: Vec<usize> = a.members().iter().map(|&x| x % m).collect();
    members.sort_unstable();
    members.dedup();
    Ok(SubsetVertex::from_sorted(members))
}

struct Bitset {
    words: Vec<u64>,
}

impl Bitset {
    fn new(bits: usize) -> Self {
        Bitset {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
}

/// All shift orbits of the d-subsets of Z_l, one record per orbit, in
/// lexicographic order of their representatives. Refuses instances
/// where C(l, d) exceeds `budget`.
pub fn orbit_records(l: usize, d: usize, budget: u64) -> Result<Vec<OrbitRecord>> {
    if d == 0 || d > l {
        return Err(Error::SubsetSizeOutOfRange { d, n: l });
    }
    let total = match crate::subset_power::binomial_u64(l, d) {
        Some(total) if total <= budget => total,
        // Overflowing u64 certainly overflows any u64 budget.
        _ => {
            return Err(Error::BudgetExceeded {
                subsets: binomial(l, d),
                budget,
            })
        }
    };

    let mut seen = Bitset::new(total as usize);
    let mut records = Vec::new();
    for rank in 0..total {
        if seen.get(rank as usize) {
            continue;
        }
        // Every earlier subset already had its whole orbit marked, so
        // the first unseen subset is the lexicographic minimum of a
        // fresh orbit.
        let representative = subset_unrank(l, d, rank).expect("rank < C(l, d) by construction");
        let mut current = representative.clone();
        let mut period = 0;
        loop {
            let r = subset_rank(l, &current).expect("orbit stays within the rank range");
            seen.set(r as usize);
            current = shift_subset(&current, 1, l)?;
            period += 1;
            if current == representative {
                break;
            }
        }
        records.push(OrbitRecord {
            representative,
            period,
        });
    }
    Ok(records)
}

/// Cycle spectrum by exhaustive orbit enumeration: counts[k] = number
/// of orbits of period k. Ground truth for the closed-form count.
pub fn brute_force_spectrum(l: usize, d: usize, budget: u64) -> Result<CycleSpectrum> {
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    for record in orbit_records(l, d, budget)? {
        *counts.entry(record.period()).or_default() += 1u32;
    }
    Ok(CycleSpectrum::new(l, d, counts))
}
