//! Spectrum comparison for verification sweeps.

use std::collections::{BTreeMap, BTreeSet};

use subpow::BigUint;

/// First cycle length where two spectra disagree, with both counts
/// rendered ("0" for an absent key).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub k: usize,
    pub formula: String,
    pub oracle: String,
}

pub fn first_mismatch(
    formula: &BTreeMap<usize, BigUint>,
    oracle: &BTreeMap<usize, BigUint>,
) -> Option<Mismatch> {
    let keys: BTreeSet<usize> = formula.keys().chain(oracle.keys()).copied().collect();
    for k in keys {
        let f = formula.get(&k);
        let o = oracle.get(&k);
        if f != o {
            let render = |c: Option<&BigUint>| c.map_or_else(|| "0".to_string(), |c| c.to_string());
            return Some(Mismatch {
                k,
                formula: render(f),
                oracle: render(o),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(pairs: &[(usize, u64)]) -> BTreeMap<usize, BigUint> {
        pairs.iter().map(|&(k, c)| (k, BigUint::from(c))).collect()
    }

    #[test]
    fn equal_spectra_have_no_mismatch() {
        let a = counts(&[(3, 1), (6, 2)]);
        assert_eq!(first_mismatch(&a, &a.clone()), None);
    }

    #[test]
    fn differing_count_is_reported_at_smallest_k() {
        let a = counts(&[(3, 1), (6, 2)]);
        let b = counts(&[(3, 1), (6, 5)]);
        assert_eq!(
            first_mismatch(&a, &b),
            Some(Mismatch {
                k: 6,
                formula: "2".to_string(),
                oracle: "5".to_string()
            })
        );
    }

    #[test]
    fn missing_key_counts_as_zero() {
        let a = counts(&[(3, 1)]);
        let b = counts(&[(3, 1), (6, 2)]);
        assert_eq!(
            first_mismatch(&a, &b),
            Some(Mismatch {
                k: 6,
                formula: "0".to_string(),
                oracle: "2".to_string()
            })
        );
    }
}
