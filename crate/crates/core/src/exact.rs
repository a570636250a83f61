//! Small dense matrices over the rationals.
//!
//! Lattice data (Cartan inverses, basis changes, grid coordinates) must satisfy
//! identities exactly, so none of it goes through floating point.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub type RatMatrix = Vec<Vec<Rational64>>;

pub fn from_int(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&v| Rational64::from_integer(v)).collect())
        .collect()
}

pub fn identity(n: usize) -> RatMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational64::one() } else { Rational64::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &RatMatrix) -> RatMatrix {
    let n = m.len();
    let k = m.first().map_or(0, Vec::len);
    (0..k).map(|j| (0..n).map(|i| m[i][j]).collect()).collect()
}

pub fn mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational64::zero(), |acc, k| acc + row[k] * b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &RatMatrix, v: &[Rational64]) -> Vec<Rational64> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational64::zero(), |acc, (&x, &y)| acc + x * y)
        })
        .collect()
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(m: &RatMatrix) -> Rational64 {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational64::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational64::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let factor = a[r][col] / p;
            if factor.is_zero() {
                continue;
            }
            for c in col..n {
                let delta = factor * a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Gauss-Jordan inverse; `None` for singular input.
pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let p = a[col][col];
        for c in 0..n {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col];
            for c in 0..n {
                let da = factor * a[col][c];
                let di = factor * inv[col][c];
                a[r][c] -= da;
                inv[r][c] -= di;
            }
        }
    }
    Some(inv)
}

/// Representative of `q` modulo 1 in `[0, 1)`.
pub fn frac(q: Rational64) -> Rational64 {
    let f = q - q.floor();
    debug_assert!(!f.is_negative() && f < Rational64::one());
    f
}

pub fn to_f64(q: Rational64) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}
