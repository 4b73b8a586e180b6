//! Exact dense linear algebra for the oracles: fraction-free rank over the
//! rationals (Bareiss, after clearing row denominators), standard elimination
//! over prime fields, and an exact solver used by the membership oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{FieldSpec, Scalar};

fn to_integer_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for entry in row {
                let Scalar::Rational(r) = entry else {
                    panic!("expected rational entries in characteristic 0");
                };
                lcm = lcm.lcm(r.denom());
            }
            row.iter()
                .map(|entry| {
                    let Scalar::Rational(r) = entry else {
                        unreachable!()
                    };
                    (r * BigRational::from_integer(lcm.clone())).to_integer()
                })
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = numerator.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn modp_rank(p: u64, rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|entry| {
                    let Scalar::Residue(r) = entry else {
                        panic!("expected residue entries in characteristic p");
                    };
                    *r
                })
                .collect()
        })
        .collect();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let field = FieldSpec::prime(p).expect("characteristic is prime");
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|r| m[*r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = match field.inv(&Scalar::Residue(m[rank][col])) {
            Ok(Scalar::Residue(v)) => v,
            _ => unreachable!(),
        };
        for c in col..ncols {
            m[rank][c] = ((m[rank][c] as u128 * inv as u128) % p as u128) as u64;
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in col..ncols {
                    let sub = (factor as u128 * m[rank][c] as u128) % p as u128;
                    m[r][c] = ((m[r][c] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank of a row-major matrix over the given field.
pub fn rank(field: &FieldSpec, rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field.characteristic() {
        0 => bareiss_rank(to_integer_rows(rows)),
        p => modp_rank(p, rows),
    }
}

/// Solves `A x = b` exactly, returning any solution (free variables zero),
/// or `None` when the system is inconsistent.
pub fn solve(field: &FieldSpec, a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let nrows = a.len();
    assert_eq!(nrows, b.len(), "matrix and right-hand side disagree");
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), ncols, "ragged matrix");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(&m[rank][col]).expect("pivot is nonzero");
        for c in col..=ncols {
            m[rank][c] = field.mul(&m[rank][c], &inv);
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let sub = field.mul(&factor, &m[rank][c]);
                    m[r][c] = field.sub(&m[r][c], &sub);
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    for row in m.iter().skip(rank) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![field.zero(); ncols];
    for (r, col) in pivot_cols.iter().enumerate() {
        x[*col] = m[r][ncols].clone();
    }
    Some(x)
}
