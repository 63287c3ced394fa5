//! Small dense matrices over [`Scalar`].

use super::{RingError, Scalar};

pub fn identity_matrix(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

pub fn matrix_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact in the Laurent ring, which is an integral domain.
pub fn determinant(m: &[Vec<Scalar>]) -> Result<Scalar, RingError> {
    let n = m.len();
    if n == 0 {
        return Ok(Scalar::one());
    }
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = Scalar::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Scalar::zero());
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}
