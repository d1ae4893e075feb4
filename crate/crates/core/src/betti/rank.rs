//! Exact rank of sparse integer matrices.
//!
//! Matrices are given as columns of `(row, value)` pairs with strictly
//! increasing rows. Over GF(p) the columns are reduced modulo `p`; over ℚ a
//! fraction-free column reduction runs in `i128`, restarting in arbitrary
//! precision if an intermediate value would overflow.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};

use crate::field::FieldSpec;

pub type SparseColumn = Vec<(u32, i64)>;

/// Rank of the matrix with the given columns over `field`.
pub fn rank(columns: &[SparseColumn], field: FieldSpec) -> usize {
    match field.characteristic() {
        0 => rank_rational(columns),
        p => rank_mod_p(columns, p as u64),
    }
}

pub fn rank_mod_p(columns: &[SparseColumn], p: u64) -> usize {
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(u32, u64)> = col
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, lv)) = c.last() {
            match pivots.get(&low) {
                Some(piv) => {
                    // c -= (lv / piv_low) * piv, with piv normalised to piv_low = 1
                    c = axpy_mod(&c, p - lv, piv, p);
                }
                None => {
                    let inv = mod_inverse(lv, p);
                    let normalised = c.iter().map(|&(r, v)| (r, v * inv % p)).collect();
                    pivots.insert(low, normalised);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + s * b` over GF(p), merging sorted sparse vectors.
fn axpy_mod(a: &[(u32, u64)], s: u64, b: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (r, v) = if take_a {
            i += 1;
            a[i - 1]
        } else if take_b {
            j += 1;
            (b[j - 1].0, s * b[j - 1].1 % p)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, (a[i - 1].1 + s * b[j - 1].1) % p)
        };
        if v != 0 {
            out.push((r, v));
        }
    }
    out
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

pub fn rank_rational(columns: &[SparseColumn]) -> usize {
    let small: Vec<Vec<(u32, i128)>> =
        columns.iter().map(|c| c.iter().map(|&(r, v)| (r, v as i128)).collect()).collect();
    if let Some(r) = fraction_free_rank(small) {
        return r;
    }
    let big: Vec<Vec<(u32, BigInt)>> =
        columns.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
    fraction_free_rank(big).expect("arbitrary precision cannot overflow")
}

/// Column reduction over ℤ: `c ← piv_low·c − c_low·piv`, then divide `c` by
/// the gcd of its entries. Returns `None` on overflow.
fn fraction_free_rank<T>(columns: Vec<Vec<(u32, T)>>) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for mut c in columns {
        c.retain(|(_, v)| !v.is_zero());
        while let Some((low, lv)) = c.last().cloned() {
            let Some(piv) = pivots.get(&low) else {
                pivots.insert(low, c);
                break;
            };
            let pv = piv.last().expect("pivot column is nonzero").1.clone();
            let g = pv.gcd(&lv);
            let (a, b) = (pv / g.clone(), lv / g);
            c = combine(&c, &a, piv, &b)?;
            normalise(&mut c);
        }
    }
    Some(pivots.len())
}

/// `a·x − b·y` on sorted sparse vectors, dropping zeros.
fn combine<T>(x: &[(u32, T)], a: &T, y: &[(u32, T)], b: &T) -> Option<Vec<(u32, T)>>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (r, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, x[i - 1].1.checked_mul(a)?)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, T::zero().checked_sub(&y[j - 1].1.checked_mul(b)?)?)
        } else {
            i += 1;
            j += 1;
            let l = x[i - 1].1.checked_mul(a)?;
            let rr = y[j - 1].1.checked_mul(b)?;
            (x[i - 1].0, l.checked_sub(&rr)?)
        };
        if !v.is_zero() {
            out.push((r, v));
        }
    }
    Some(out)
}

fn normalise<T: Integer + Signed + Clone>(c: &mut [(u32, T)]) {
    let g = c.iter().fold(T::zero(), |acc, (_, v)| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for (_, v) in c.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn dense_to_columns(rows: usize, cols: usize, data: &[i64]) -> Vec<SparseColumn> {
        (0..cols)
            .map(|c| (0..rows).filter_map(|r| {
                let v = data[r * cols + c];
                (v != 0).then_some((r as u32, v))
            }).collect())
            .collect()
    }

    /// Dense Bareiss elimination over BigInt; independent of the sparse code.
    fn bareiss_rank(rows: usize, cols: usize, data: &[i64]) -> usize {
        let mut m: Vec<Vec<BigInt>> =
            (0..rows).map(|r| (0..cols).map(|c| BigInt::from(data[r * cols + c])).collect()).collect();
        let mut rank = 0;
        let mut prev = BigInt::from(1);
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, p);
            for r in rank + 1..rows {
                for k in c + 1..cols {
                    let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                    m[r][k] = v;
                }
                m[r][c] = BigInt::zero();
            }
            prev = m[rank][c].clone();
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    fn dense_rank_mod(rows: usize, cols: usize, data: &[i64], p: i64) -> usize {
        let mut m: Vec<Vec<i64>> =
            (0..rows).map(|r| (0..cols).map(|c| data[r * cols + c].rem_euclid(p)).collect()).collect();
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, piv);
            let inv = mod_inverse(m[rank][c] as u64, p as u64) as i64;
            for r in 0..rows {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c] * inv % p;
                    for k in 0..cols {
                        m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn simple_cases() {
        let cols = vec![vec![(0, 2), (1, 4)], vec![(0, 1), (1, 2)]];
        assert_eq!(rank(&cols, FieldSpec::RATIONALS), 1);
        // [[2, 0], [0, 3]] has full rank except mod 2 and mod 3
        let cols = vec![vec![(0, 2)], vec![(1, 3)]];
        assert_eq!(rank(&cols, FieldSpec::RATIONALS), 2);
        assert_eq!(rank(&cols, FieldSpec::prime(2)), 1);
        assert_eq!(rank(&cols, FieldSpec::prime(3)), 1);
        assert_eq!(rank(&[], FieldSpec::RATIONALS), 0);
    }

    #[test]
    fn big_entries_fall_back_to_bigint() {
        let big = i64::MAX / 3;
        let cols = vec![
            vec![(0, big), (1, big - 1), (2, 7)],
            vec![(0, big - 5), (1, big), (2, 11)],
            vec![(0, 3), (1, big - 2), (2, big)],
        ];
        let data: Vec<i64> = (0..3).flat_map(|r| (0..3).map(move |c| (r, c))).map(|(r, c)| {
            cols[c].iter().find(|(rr, _)| *rr == r as u32).map_or(0, |e| e.1)
        }).collect();
        assert_eq!(rank_rational(&cols), bareiss_rank(3, 3, &data));
    }

    proptest! {
        #[test]
        fn matches_dense_oracles(rows in 1usize..7, cols in 1usize..7, seed in prop::collection::vec(-2i64..=2, 49)) {
            let data = &seed[..rows * cols];
            let columns = dense_to_columns(rows, cols, data);
            prop_assert_eq!(rank(&columns, FieldSpec::RATIONALS), bareiss_rank(rows, cols, data));
            for p in [2i64, 3, 5] {
                prop_assert_eq!(rank(&columns, FieldSpec::prime(p as u32)), dense_rank_mod(rows, cols, data, p));
            }
        }
    }
}
