//! Root-system data for the supported simple Lie algebras.
//!
//! Everything is derived from the Gram matrix of the simple roots: the Cartan
//! matrix, marks and dual marks (read off the highest root and highest dual
//! root after closing the simple roots under reflections), the basis change
//! from fundamental coweights to simple coroots, the Weyl group order and the
//! volume of the fundamental simplex.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;

use crate::exact::{self, RatMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraLabel {
    A1,
    A2,
    C2,
    G2,
}

impl AlgebraLabel {
    pub const ALL: [AlgebraLabel; 4] = [Self::A1, Self::A2, Self::C2, Self::G2];
    pub const RANK_TWO: [AlgebraLabel; 3] = [Self::A2, Self::C2, Self::G2];

    pub fn rank(self) -> usize {
        match self {
            Self::A1 => 1,
            Self::A2 | Self::C2 | Self::G2 => 2,
        }
    }

    /// Gram matrix `<alpha_i, alpha_j>` of the simple roots.
    ///
    /// For C2 the first simple root is the short one; for G2 the second.
    fn gram(self) -> RatMatrix {
        let q = Rational64::new;
        match self {
            Self::A1 => vec![vec![q(2, 1)]],
            Self::A2 => vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]],
            Self::C2 => vec![vec![q(1, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]],
            Self::G2 => vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 3)]],
        }
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A1 => "A1",
            Self::A2 => "A2",
            Self::C2 => "C2",
            Self::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for AlgebraLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(Self::A1),
            "A2" => Ok(Self::A2),
            "C2" => Ok(Self::C2),
            "G2" => Ok(Self::G2),
            _ => Err(Error::UnsupportedAlgebra(s.to_string())),
        }
    }
}

/// Integer coordinates `(lambda_1, ..., lambda_n)` in the basis of fundamental
/// weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Self(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// Sum of the fundamental weights, `(1, ..., 1)`.
    pub fn rho(rank: usize) -> Self {
        Self(vec![1; rank])
    }

    /// The `j`-th fundamental weight (0-based).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut v = vec![0; rank];
        v[j] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<[i64; 2]> for Weight {
    fn from(c: [i64; 2]) -> Self {
        Self(c.to_vec())
    }
}

impl From<[i64; 1]> for Weight {
    fn from(c: [i64; 1]) -> Self {
        Self(c.to_vec())
    }
}

/// Immutable bundle of root-system data.
#[derive(Debug, Clone)]
pub struct AlgebraData {
    label: AlgebraLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: RatMatrix,
    simple_roots: Vec<Vec<f64>>,
    coroots: Vec<Vec<f64>>,
    marks: Vec<i64>,
    dual_marks: Vec<i64>,
    coxeter_number: i64,
    c: i64,
    weyl_order: u64,
    cartan_inverse: RatMatrix,
    omega_in_coroot_basis: RatMatrix,
    vol_f: f64,
}

pub fn build_algebra(label: AlgebraLabel) -> AlgebraData {
    AlgebraData::new(label)
}

impl AlgebraData {
    pub fn new(label: AlgebraLabel) -> Self {
        let gram = label.gram();
        let rank = gram.len();
        let two = Rational64::from_integer(2);

        // C_ij = <alpha_i, alpha_j^vee> = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = two * gram[i][j] / gram[j][j];
                        assert!(v.is_integer(), "Cartan entry must be integral");
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();

        let simple_roots = cholesky_rows(&gram);
        let coroots: Vec<Vec<f64>> = simple_roots
            .iter()
            .enumerate()
            .map(|(i, root)| {
                let scale = 2.0 / exact::to_f64(gram[i][i]);
                root.iter().map(|x| x * scale).collect()
            })
            .collect();

        let marks = highest_root_coefficients(&cartan);
        let cartan_t: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[j][i]).collect())
            .collect();
        let dual_marks = highest_root_coefficients(&cartan_t);

        let cartan_q = exact::from_int(&cartan);
        let c_det = exact::det(&cartan_q);
        assert!(c_det.is_integer());
        let c = c_det.to_integer();
        let cartan_inverse = exact::inverse(&cartan_q).expect("Cartan matrix is nonsingular");
        let omega_in_coroot_basis = exact::transpose(&cartan_inverse);

        let factorial: u64 = (1..=rank as u64).product();
        let weyl_order = factorial * marks.iter().map(|&m| m as u64).product::<u64>() * c as u64;

        let coroot_det = float_det(&coroots).abs();
        let vol_f = coroot_det / weyl_order as f64;

        Self {
            label,
            rank,
            cartan,
            gram,
            simple_roots,
            coroots,
            coxeter_number: 1 + marks.iter().sum::<i64>(),
            marks,
            dual_marks,
            c,
            weyl_order,
            cartan_inverse,
            omega_in_coroot_basis,
            vol_f,
        }
    }

    pub fn label(&self) -> AlgebraLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `C_ij = <alpha_i, alpha_j^vee>`; row `i` is `alpha_i` in the omega basis.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// Simple roots realized in orthonormal coordinates.
    pub fn simple_roots(&self) -> &[Vec<f64>] {
        &self.simple_roots
    }

    pub fn coroots(&self) -> &[Vec<f64>] {
        &self.coroots
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn dual_marks(&self) -> &[i64] {
        &self.dual_marks
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// Determinant of the Cartan matrix.
    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// `B` with `omega_i^vee = sum_k B_ik alpha_k^vee`, i.e. `C^{-T}`.
    pub fn omega_in_coroot_basis(&self) -> &RatMatrix {
        &self.omega_in_coroot_basis
    }

    /// `C^{-1}`: maps omega^vee-coordinates of a point to its alpha^vee-coordinates.
    pub fn cartan_inverse(&self) -> &RatMatrix {
        &self.cartan_inverse
    }

    /// Volume of the fundamental simplex `F`.
    pub fn vol_f(&self) -> f64 {
        self.vol_f
    }

    /// Jacobian factor of the linear part of the X-transform: `2^{-floor(n/2)}`
    /// for type A, 1 for the other supported algebras.
    pub fn kappa(&self) -> f64 {
        match self.label {
            AlgebraLabel::A1 | AlgebraLabel::A2 => 0.5f64.powi((self.rank / 2) as i32),
            AlgebraLabel::C2 | AlgebraLabel::G2 => 1.0,
        }
    }

    /// Highest dual root `eta = sum m_i^vee alpha_i^vee` in orthonormal coordinates.
    pub fn highest_dual_root(&self) -> Vec<f64> {
        let mut eta = vec![0.0; self.rank];
        for (m, coroot) in self.dual_marks.iter().zip(&self.coroots) {
            for (e, x) in eta.iter_mut().zip(coroot) {
                *e += *m as f64 * x;
            }
        }
        eta
    }

    /// Fundamental coweights in orthonormal coordinates, computed from `B`.
    pub fn fundamental_coweights(&self) -> Vec<Vec<f64>> {
        self.omega_in_coroot_basis
            .iter()
            .map(|row| {
                let mut v = vec![0.0; self.rank];
                for (b, coroot) in row.iter().zip(&self.coroots) {
                    for (e, x) in v.iter_mut().zip(coroot) {
                        *e += exact::to_f64(*b) * x;
                    }
                }
                v
            })
            .collect()
    }

    pub(crate) fn check_rank(&self, got: usize) -> Result<()> {
        if got == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, got })
        }
    }
}

/// `|lambda|_m = sum lambda_i m_i^vee`.
pub fn m_degree(data: &AlgebraData, lambda: &Weight) -> i64 {
    lambda
        .coords()
        .iter()
        .zip(data.dual_marks())
        .map(|(l, m)| l * m)
        .sum()
}

/// Dominant weights of m-degree at most `max_degree`, in lexicographic order.
pub fn enumerate_dominant(data: &AlgebraData, max_degree: i64) -> Vec<Weight> {
    fn rec(dual: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let Some((&m, rest)) = dual.split_first() else {
            out.push(Weight(prefix.clone()));
            return;
        };
        for v in 0..=budget / m {
            prefix.push(v);
            rec(rest, budget - v * m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if max_degree >= 0 {
        rec(data.dual_marks(), max_degree, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `lambda` lies in `M Q`, decided by solving
/// `lambda = M (k_1 alpha_1 + ... + k_n alpha_n)` exactly over the rationals.
pub fn weight_in_mq(data: &AlgebraData, lambda: &Weight, m: i64) -> bool {
    assert!(m >= 1, "M must be positive");
    // alpha_i has omega-coordinates given by row i of C, so k^T = lambda^T C^{-1} / M.
    let inv = data.cartan_inverse();
    (0..data.rank()).all(|j| {
        let k = lambda
            .coords()
            .iter()
            .enumerate()
            .fold(Rational64::zero(), |acc, (i, &l)| acc + inv[i][j] * l)
            / m;
        k.is_integer()
    })
}

/// Coefficients of the highest root of the root system whose Cartan matrix is
/// given (`cartan[i][j] = <alpha_i, alpha_j^vee>`), found by closing the simple
/// roots under simple reflections.
fn highest_root_coefficients(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    roots.extend(queue.iter().cloned());
    while let Some(beta) = queue.pop() {
        for i in 0..n {
            // r_i beta = beta - <beta, alpha_i^vee> alpha_i
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if roots.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let highest = roots
        .iter()
        .filter(|r| r.iter().all(|&k| k >= 0))
        .max_by_key(|r| r.iter().sum::<i64>())
        .expect("root system is nonempty")
        .clone();
    // the highest root dominates every positive root coefficientwise
    debug_assert!(roots
        .iter()
        .filter(|r| r.iter().all(|&k| k >= 0))
        .all(|r| r.iter().zip(&highest).all(|(a, b)| a <= b)));
    highest
}

/// Rows of the lower Cholesky factor `L` (`G = L L^T`); row `i` realizes `alpha_i`.
fn cholesky_rows(gram: &RatMatrix) -> Vec<Vec<f64>> {
    let n = gram.len();
    let g: Vec<Vec<f64>> = gram
        .iter()
        .map(|r| r.iter().map(|&q| exact::to_f64(q)).collect())
        .collect();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = g[i][i] - s;
                assert!(d > 0.0, "Gram matrix must be positive definite");
                l[i][i] = d.sqrt();
            } else {
                l[i][j] = (g[i][j] - s) / l[j][j];
            }
        }
    }
    l
}

fn float_det(rows: &[Vec<f64>]) -> f64 {
    match rows.len() {
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        n => {
            let mut a = rows.to_vec();
            let mut det = 1.0;
            for col in 0..n {
                let pivot = (col..n)
                    .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
                    .unwrap();
                if a[pivot][col] == 0.0 {
                    return 0.0;
                }
                if pivot != col {
                    a.swap(pivot, col);
                    det = -det;
                }
                det *= a[col][col];
                for r in col + 1..n {
                    let f = a[r][col] / a[col][col];
                    for c in col..n {
                        a[r][c] -= f * a[col][c];
                    }
                }
            }
            det
        }
    }
}

/// `true` if `q` is a nonnegative rational (used by grid invariants).
#[cfg(test)]
pub(crate) fn is_nonnegative(q: &Rational64) -> bool {
    *q >= Rational64::zero()
}
