//! Exact cycle structure of subset powers of directed cycles.
//!
//! Subset powers of a directed cycle decompose into disjoint cycles,
//! because shifting every member by one is a bijection on d-subsets.
//! A k-cycle exists exactly when k divides l and l divides dk, every
//! instance reduces to one with l = k, and the number of k-cycles has
//! a closed form: an inclusion-exclusion sum over the squarefree
//! divisors of gcd(k, t) with t = dk/l, divided exactly by t. A Möbius
//! summation over all divisors of gcd(k, t) computes the same value by
//! a different route and serves as a cross-check.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::subset_power::SubsetVertex;

/// A valid (l, d, k) instance rewritten with cycle length as modulus:
/// counting k-cycles among d-subsets of Z_l equals counting k-cycles
/// among t-subsets of Z_k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedInstance {
    /// Cycle length, unchanged by the reduction.
    pub k: usize,
    /// Reduced subset size t = dk/l; satisfies 1 <= t <= k.
    pub t: usize,
    /// Compression factor c = l/k, so k*c = l and t*c = d.
    pub c: usize,
}

/// Prime factorization with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(usize, u32)>,
}

impl Factorization {
    /// (prime, exponent) pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    /// The factored integer.
    pub fn value(&self) -> usize {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<usize>()
    }
}

/// The cycle decomposition of one subset power: counts[k] = number of
/// k-cycles, holding exactly the k with nonzero count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSpectrum {
    l: usize,
    d: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl CycleSpectrum {
    pub(crate) fn new(l: usize, d: usize, counts: BTreeMap<usize, BigUint>) -> Self {
        debug_assert!(counts
            .keys()
            .all(|&k| l.is_multiple_of(k) && (d * k).is_multiple_of(l)));
        debug_assert!(counts.values().all(|c| !c.is_zero()));
        CycleSpectrum { l, d, counts }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Cycle counts keyed by cycle length, keys increasing.
    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    /// Total vertices covered, sum of k*counts[k]; equals C(l, d) since
    /// the cycles partition the subset power's vertex set.
    pub fn vertex_total(&self) -> BigUint {
        let mut total = BigUint::zero();
        for (&k, count) in &self.counts {
            total += count * BigUint::from(k);
        }
        total
    }
}

fn check_instance_domain(l: usize, d: usize, k: usize) -> Result<()> {
    if d == 0 || d > l {
        return Err(Error::SubsetSizeOutOfRange { d, n: l });
    }
    if k == 0 {
        return Err(Error::CycleLengthOutOfRange { k, l });
    }
    Ok(())
}

/// True iff the d-th subset power of the directed l-cycle contains a
/// k-cycle: k must divide l, l must divide dk, and unless k = 1, d must
/// be strictly less than l. Requires 1 <= d <= l and k >= 1.
///
/// The divisibility conditions alone over-admit the full-set case:
/// when d = l the unique d-subset is fixed by every shift, so the
/// subset power is a single loop and no k-cycle with k > 1 exists,
/// even though k | l and l | dk hold for every divisor k of l. The
/// closed-form count is zero there, as is the brute-force orbit count.
pub fn exists_cycle(l: usize, d: usize, k: usize) -> Result<bool> {
    check_instance_domain(l, d, k)?;
    Ok(l.is_multiple_of(k)
        && (d as u128 * k as u128).is_multiple_of(l as u128)
        && (d < l || k == 1))
}

/// Rewrites a valid (l, d, k) instance as (k, t, c) with t = dk/l and
/// c = l/k; the k-cycle count is unchanged by this reduction.
pub fn reduce_instance(l: usize, d: usize, k: usize) -> Result<ReducedInstance> {
    if !exists_cycle(l, d, k)? {
        return Err(Error::NoCycleExists { l, d, k });
    }
    Ok(ReducedInstance {
        k,
        t: d * k / l,
        c: l / k,
    })
}

/// An explicit k-cycle witness for a valid (l, d, k): the subset
/// holding t consecutive residues from each of the c classes spaced k
/// apart, followed by its first k - 1 shifts. Consecutive subsets are
/// related by shifting every member up by one mod l, cyclically.
pub fn canonical_cycle(l: usize, d: usize, k: usize) -> Result<Vec<SubsetVertex>> {
    let ReducedInstance { k, t, c } = reduce_instance(l, d, k)?;
    // Blocks [jk, jk + t - 1] are disjoint and increasing because t <= k,
    // so the member list comes out sorted.
    let mut first = Vec::with_capacity(t * c);
    for j in 0..c {
        for i in 0..t {
            first.push(j * k + i);
        }
    }
    let mut cycle = Vec::with_capacity(k);
    for s in 0..k {
        let mut members: Vec<usize> = first.iter().map(|&x| (x + s) % l).collect();
        members.sort_unstable();
        cycle.push(SubsetVertex::from_sorted(members));
    }
    Ok(cycle)
}

/// Prime factorization by trial division; n = 1 gives the empty list.
pub fn factorize(n: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorizeZero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// One term per subset of the distinct primes: the product of the
/// chosen primes and the sign (-1)^(subset size). 2^m entries for m
/// primes, enumerated by an m-bit counter, so products are distinct.
pub fn squarefree_terms(f: &Factorization) -> Vec<(usize, i8)> {
    let m = f.factors().len();
    let mut terms = Vec::with_capacity(1 << m);
    for mask in 0..1u32 << m {
        let mut product = 1;
        for (i, &(p, _)) in f.factors().iter().enumerate() {
            if mask >> i & 1 == 1 {
                product *= p;
            }
        }
        let parity = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        terms.push((product, parity));
    }
    terms
}

/// C(n, r) at arbitrary precision; 0 when r > n. Each multiplicative
/// step divides exactly because every prefix is itself a binomial.
pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc = acc * BigUint::from(n - r + i) / BigUint::from(i);
    }
    acc
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The exact number of k-cycles in the d-th subset power of the
/// directed l-cycle. Zero when no k-cycle exists; otherwise, with
/// t = dk/l, an inclusion-exclusion sum of C(k/p - 1, t/p - 1) over the
/// squarefree divisors p of gcd(k, t), divided by t. The sum is
/// asserted nonnegative and exactly divisible by t; a failure of either
/// assertion is an implementation bug, not an input condition.
pub fn count_cycles(l: usize, d: usize, k: usize) -> Result<BigUint> {
    if !exists_cycle(l, d, k)? {
        return Ok(BigUint::zero());
    }
    let t = d * k / l;
    let f = factorize(gcd(k, t))?;
    let mut sum = BigInt::zero();
    for (p, parity) in squarefree_terms(&f) {
        // p divides gcd(k, t), so both quotients are exact.
        let term = BigInt::from(binomial(k / p - 1, t / p - 1));
        if parity > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let sum = sum
        .to_biguint()
        .expect("inclusion-exclusion sum is nonnegative");
    let t_big = BigUint::from(t);
    assert!(
        (&sum % &t_big).is_zero(),
        "inclusion-exclusion sum must be divisible by t"
    );
    Ok(sum / t_big)
}

/// Independent recomputation of count_cycles(k, t, k) as a Möbius
/// summation over all divisors of gcd(k, t), divided by k instead of t.
/// Kept self-contained (own gcd, divisor scan, and Möbius evaluation)
/// so the two routes share no counting logic.
pub fn mobius_count(k: usize, t: usize) -> Result<BigUint> {
    if t == 0 || t > k {
        return Err(Error::SubsetSizeOutOfRange { d: t, n: k });
    }
    let g = {
        let (mut a, mut b) = (k, t);
        while b != 0 {
            let r = a % b;
            a = b;
            b = r;
        }
        a
    };
    let mut sum = BigInt::zero();
    for a in (1..=g).filter(|&a| g.is_multiple_of(a)) {
        let mu = mobius(a);
        if mu == 0 {
            continue;
        }
        let term = BigInt::from(binomial(k / a, t / a));
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let sum = sum.to_biguint().expect("divisor sum is nonnegative");
    let k_big = BigUint::from(k);
    assert!(
        (&sum % &k_big).is_zero(),
        "divisor sum must be divisible by k"
    );
    Ok(sum / k_big)
}

/// Möbius function by trial division: 0 on a squared prime factor,
/// otherwise (-1)^(number of prime factors).
fn mobius(mut n: usize) -> i8 {
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The full cycle decomposition of the d-th subset power of the
/// directed l-cycle: counts for every cycle length k with a nonzero
/// count, i.e. every divisor k of l with l dividing dk.
pub fn spectrum(l: usize, d: usize) -> Result<CycleSpectrum> {
    if d == 0 || d > l {
        return Err(Error::SubsetSizeOutOfRange { d, n: l });
    }
    let mut counts = BTreeMap::new();
    for k in (1..=l).filter(|&k| l.is_multiple_of(k)) {
        let count = count_cycles(l, d, k)?;
        if !count.is_zero() {
            counts.insert(k, count);
        }
    }
    Ok(CycleSpectrum::new(l, d, counts))
}
