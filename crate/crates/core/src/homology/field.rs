//! Coefficient fields and sparse rank by column reduction.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::HomologyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    PrimeField(u64),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);
    pub const GF32003: FieldSpec = FieldSpec::PrimeField(32003);

    pub fn validate(self) -> Result<Self, HomologyError> {
        match self {
            FieldSpec::PrimeField(p) if !is_prime(p) || p >= 1 << 32 => Err(HomologyError::InvalidField(p)),
            f => Ok(f),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => p,
            FieldSpec::Rationals => 0,
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `2`, `32003`, `GF(7)`, `exact`, `QQ`.
impl FromStr for FieldSpec {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if matches!(t.to_ascii_lowercase().as_str(), "exact" | "qq" | "q" | "rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let p: u64 = digits.parse().map_err(|_| HomologyError::UnknownField(s.to_string()))?;
        FieldSpec::PrimeField(p).validate()
    }
}

/// A sparse column: `(row, coefficient)` sorted by row, no zero coefficients.
pub(crate) type Column<E> = Vec<(usize, E)>;

pub(crate) trait Field: Sync {
    type E: Clone + Send + Sync;
    fn embed(&self, v: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    /// `a - c * b`.
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn div(&self, a: &Self::E, b: &Self::E) -> Self::E;
}

pub(crate) struct Fp(pub u64);

impl Fp {
    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.0;
            }
            b = b * b % self.0;
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    type E = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        (a + self.0 - c * b % self.0) % self.0
    }

    fn div(&self, a: &u64, b: &u64) -> u64 {
        a * self.pow(*b, self.0 - 2) % self.0
    }
}

pub(crate) struct Rationals;

impl Field for Rationals {
    type E = BigRational;

    fn embed(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
}

/// Rank of the matrix whose columns are given, by left-to-right reduction on
/// the lowest nonzero row.
pub(crate) fn rank<F: Field>(field: &F, columns: Vec<Column<F::E>>) -> usize {
    let mut reduced: Vec<Column<F::E>> = Vec::new();
    let mut owner: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for mut col in columns {
        while let Some((low, _)) = col.last() {
            let Some(&k) = owner.get(low) else { break };
            let other = &reduced[k];
            let factor = field.div(&col.last().unwrap().1, &other.last().unwrap().1);
            col = axpy(field, &col, &factor, other);
        }
        if let Some(&(low, _)) = col.last() {
            owner.insert(low, reduced.len());
            reduced.push(col);
        }
    }
    reduced.len()
}

/// `a - c * b` on sorted sparse columns.
fn axpy<F: Field>(field: &F, a: &Column<F::E>, c: &F::E, b: &Column<F::E>) -> Column<F::E> {
    let zero = field.embed(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (row, v) = if take_a {
            i += 1;
            (a[i - 1].0, a[i - 1].1.clone())
        } else if take_b {
            j += 1;
            (b[j - 1].0, field.sub_mul(&zero, c, &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, field.sub_mul(&a[i - 1].1, c, &b[j - 1].1))
        };
        if !field.is_zero(&v) {
            out.push((row, v));
        }
    }
    out
}

/// Exact integer rank over `Q`, used by tests to cross-check the field paths.
#[cfg(test)]
pub(crate) fn dense_rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect()).collect();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                let top = m[rank].clone();
                for (x, t) in m[r].iter_mut().zip(&top) {
                    *x -= &f * t;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn columns(rows: &[Vec<i64>]) -> Vec<Vec<(usize, i64)>> {
        let width = rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| rows.iter().enumerate().filter(|(_, r)| r[c] != 0).map(|(i, r)| (i, r[c])).collect())
            .collect()
    }

    fn rank_in<F: Field>(f: &F, rows: &[Vec<i64>]) -> usize {
        let cols = columns(rows).into_iter().map(|c| c.into_iter().map(|(i, v)| (i, f.embed(v))).filter(|(_, v)| !f.is_zero(v)).collect()).collect();
        rank(f, cols)
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("GF(32003)".parse::<FieldSpec>().unwrap(), FieldSpec::GF32003);
        assert_eq!("exact".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("4".parse::<FieldSpec>(), Err(HomologyError::InvalidField(4)));
        assert!("seven".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::GF32003.to_string(), "GF(32003)");
    }

    #[test]
    fn characteristic_dependent_rank() {
        // [[1,1],[1,-1]] has determinant -2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_in(&Fp(2), &m), 1);
        assert_eq!(rank_in(&Fp(3), &m), 2);
        assert_eq!(rank_in(&Rationals, &m), 2);
    }

    #[test]
    fn inverse_mod_p() {
        let f = Fp(32003);
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.div(&1, &a) * a % 32003, 1);
        }
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense_rational(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..6)) {
            let expect = dense_rational_rank(&rows);
            prop_assert_eq!(rank_in(&Rationals, &rows), expect);
            // minors are at most 5!·2^5 < 32003 in size
            prop_assert_eq!(rank_in(&Fp(32003), &rows), expect);
        }
    }
}
