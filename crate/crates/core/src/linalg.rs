//! Exact null spaces by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// A basis of `{v : A v = 0}` for a rational matrix given as rows.
///
/// Rows are cleared of denominators, reduced to echelon form with Bareiss'
/// fraction-free update, and each free column yields one basis vector with
/// a 1 in that column.
pub fn null_space(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r, cols)).collect();
    let pivots = bareiss_echelon(&mut m, cols);

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for &(r, c) in pivots.iter().rev() {
                let mut acc = Rational::zero();
                for j in c + 1..cols {
                    if !m[r][j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(m[r][j].clone()) * &v[j];
                    }
                }
                v[c] = -acc / Rational::from_integer(m[r][c].clone());
            }
            v
        })
        .collect()
}

fn integer_row(row: &[Rational], cols: usize) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (0..cols)
        .map(|j| {
            row.get(j)
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .unwrap_or_else(BigInt::zero)
        })
        .collect()
}

/// In-place Bareiss elimination to row echelon form; returns the pivot
/// positions `(row, col)`. Every division in the update is exact.
fn bareiss_echelon(m: &mut [Vec<BigInt>], cols: usize) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        for r in row + 1..m.len() {
            for j in col + 1..cols {
                let v = &m[row][col] * &m[r][j] - &m[r][col] * &m[row][j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][j] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push((row, col));
        row += 1;
    }
    pivots
}
