//! Hilbert function of `S/I`: the number of monomials of a given degree
//! outside a squarefree monomial ideal.

use super::{IdealError, MonomialIdeal};
use crate::bitset::VertexSet;

pub const DEFAULT_DEGREE_CAP: usize = 6;

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Monomials of degree `d` in `r` variables.
fn monomials_of_degree(r: usize, d: usize) -> u64 {
    if r == 0 {
        return u64::from(d == 0);
    }
    binomial((r + d - 1) as u64, d as u64)
}

pub(super) fn check_degree(d: usize) -> Result<(), IdealError> {
    if d > DEFAULT_DEGREE_CAP {
        Err(IdealError::DegreeCapExceeded { degree: d, cap: DEFAULT_DEGREE_CAP })
    } else {
        Ok(())
    }
}

/// `dim_K (S/I)_d`, computed by inclusion–exclusion over the lcms of generator subsets.
///
/// Only subsets whose lcm has degree at most `d` contribute, and lcm degree
/// only grows along a subset chain, so the enumeration is pruned there.
pub fn standard_monomial_count(ideal: &MonomialIdeal, d: usize) -> Result<u64, IdealError> {
    check_degree(d)?;
    Ok(count_by_inclusion_exclusion(ideal, d))
}

/// Inclusion–exclusion without the degree cap.
pub fn count_by_inclusion_exclusion(ideal: &MonomialIdeal, d: usize) -> u64 {
    let r = ideal.ambient_vars();
    let gens: Vec<VertexSet> = ideal.generators().iter().map(|g| g.support()).collect();
    // signed sum of #{monomials of degree d divisible by lcm(T)} over T ⊆ gens
    fn walk(gens: &[VertexSet], start: usize, lcm: VertexSet, sign: i64, r: usize, d: usize, acc: &mut i128) {
        *acc += sign as i128 * monomials_of_degree(r, d - lcm.len()) as i128;
        for i in start..gens.len() {
            let next = lcm.union(gens[i]);
            if next.len() <= d {
                walk(gens, i + 1, next, -sign, r, d, acc);
            }
        }
    }
    let mut acc = 0i128;
    walk(&gens, 0, VertexSet::EMPTY, 1, r, d, &mut acc);
    debug_assert!(acc >= 0);
    acc as u64
}

/// Direct enumeration of all exponent vectors of degree `d`, testing each
/// monomial's support for membership.
pub fn count_by_enumeration(ideal: &MonomialIdeal, d: usize) -> u64 {
    fn walk(ideal: &MonomialIdeal, var: usize, left: usize, support: VertexSet, count: &mut u64) {
        let r = ideal.ambient_vars();
        if left == 0 {
            if !ideal.contains_support(support) {
                *count += 1;
            }
            return;
        }
        if var == r {
            return;
        }
        // exponent 0 for `var`
        walk(ideal, var + 1, left, support, count);
        let with = support.with(var);
        for e in 1..=left {
            walk(ideal, var + 1, left - e, with, count);
        }
    }
    let mut count = 0;
    walk(ideal, 0, d, VertexSet::EMPTY, &mut count);
    count
}
