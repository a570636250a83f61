//! The X-transform `F -> Omega`, the domain `Omega` and its weight polynomial `K`.
//!
//! For A1, C2 and G2 the generators `Z_j` are real and `X_j = Z_j`. For A2,
//! `Z_2 = conj(Z_1)` and the real coordinates are `X_1 = (Z_1 + Z_2) / 2`,
//! `X_2 = (Z_1 - Z_2) / 2i`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::exact;
use crate::liealg::{AlgebraData, AlgebraLabel, Weight};
use crate::orbitfuncs::{c_at, s_at, BankScratch, OrbitBank};
use crate::weyl::{TorusPoint, WeylGroup};
use crate::{Error, Result};

/// Slack used by every `Omega` membership test.
pub const OMEGA_SLACK: f64 = 1e-9;

/// Imaginary residue tolerated in quantities that must be real.
const REAL_RESIDUE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct OmegaPoint(pub Vec<f64>);

impl OmegaPoint {
    pub fn new(y: impl Into<Vec<f64>>) -> Self {
        Self(y.into())
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }
}

impl From<[f64; 2]> for OmegaPoint {
    fn from(y: [f64; 2]) -> Self {
        Self(y.to_vec())
    }
}

fn combine(label: AlgebraLabel, z: &[Complex64]) -> OmegaPoint {
    match label {
        AlgebraLabel::A2 => {
            let x1 = (z[0] + z[1]) * 0.5;
            let x2 = (z[0] - z[1]) / Complex64::new(0.0, 2.0);
            assert!(
                x1.im.abs() < REAL_RESIDUE && x2.im.abs() < REAL_RESIDUE,
                "internal consistency: A2 generators are not conjugate ({z:?})"
            );
            OmegaPoint(vec![x1.re, x2.re])
        }
        AlgebraLabel::A1 | AlgebraLabel::C2 | AlgebraLabel::G2 => {
            for zj in z {
                assert!(
                    zj.im.abs() < REAL_RESIDUE,
                    "internal consistency: {label} generator has imaginary part {}",
                    zj.im
                );
            }
            OmegaPoint(z.iter().map(|zj| zj.re).collect())
        }
    }
}

/// `X(x)`, evaluated from the orbit-sum definition of the generators.
pub fn eval_x(data: &AlgebraData, x: &TorusPoint) -> OmegaPoint {
    let n = data.rank();
    let z: Vec<Complex64> = (0..n)
        .map(|j| c_at(data, &Weight::fundamental(n, j), x.coords()))
        .collect();
    combine(data.label(), &z)
}

/// Reusable X-transform for evaluating many points.
#[derive(Debug, Clone)]
pub struct XTransform {
    label: AlgebraLabel,
    bank: OrbitBank,
}

impl XTransform {
    pub fn new(data: &AlgebraData) -> Self {
        let n = data.rank();
        let labels: Vec<Weight> = (0..n).map(|j| Weight::fundamental(n, j)).collect();
        Self {
            label: data.label(),
            bank: OrbitBank::new(data, &labels),
        }
    }

    /// `X` at alpha^vee-coordinates `a`.
    pub fn apply(&self, a: &[f64], scratch: &mut XScratch) -> OmegaPoint {
        scratch.z.resize(self.bank.len(), Complex64::new(0.0, 0.0));
        self.bank.eval_into(a, &mut scratch.z, &mut scratch.bank);
        combine(self.label, &scratch.z)
    }
}

#[derive(Debug, Clone, Default)]
pub struct XScratch {
    z: Vec<Complex64>,
    bank: BankScratch,
}

/// Explicit inequality description of `Omega`, with slack [`OMEGA_SLACK`].
pub fn in_omega(label: AlgebraLabel, y: &OmegaPoint) -> Result<bool> {
    let y = y.coords();
    if y.len() != label.rank() {
        return Err(Error::RankMismatch {
            expected: label.rank(),
            got: y.len(),
        });
    }
    let tol = OMEGA_SLACK;
    Ok(match label {
        AlgebraLabel::A1 => y[0].abs() <= 2.0 + tol,
        AlgebraLabel::A2 => eval_k(label, &OmegaPoint::new(y)) >= -tol,
        AlgebraLabel::C2 => {
            let (y1, y2) = (y[0], y[1]);
            -2.0 * y1 - 4.0 <= y2 + tol && 2.0 * y1 - 4.0 <= y2 + tol && y2 <= 0.25 * y1 * y1 + tol
        }
        AlgebraLabel::G2 => {
            let (y1, y2) = (y[0], y[1]);
            if y2 < -3.0 - tol {
                return Ok(false);
            }
            let p = (y2 + 3.0).max(0.0).powf(1.5);
            -2.0 * (p + 3.0 * y2 + 6.0) <= y1 + tol
                && y1 <= 2.0 * (p - 3.0 * y2 - 6.0) + tol
                && y1 >= 0.25 * y2 * y2 - 3.0 - tol
        }
    })
}

/// The weight polynomial `K` with `K(X(x)) = |S_rho(x)|^2`.
pub fn eval_k(label: AlgebraLabel, y: &OmegaPoint) -> f64 {
    let y = y.coords();
    match label {
        AlgebraLabel::A1 => 4.0 - y[0] * y[0],
        AlgebraLabel::A2 => {
            let (y1, y2) = (y[0], y[1]);
            let r = y1 * y1 + y2 * y2 + 9.0;
            -r * r + 8.0 * (y1 * y1 * y1 - 3.0 * y1 * y2 * y2) + 108.0
        }
        AlgebraLabel::C2 => {
            let (y1, y2) = (y[0], y[1]);
            (y1 * y1 - 4.0 * y2) * ((y2 + 4.0) * (y2 + 4.0) - 4.0 * y1 * y1)
        }
        AlgebraLabel::G2 => {
            let (y1, y2) = (y[0], y[1]);
            (y2 * y2 - 4.0 * y1 - 12.0)
                * (y1 * y1 - 4.0 * y2 * y2 * y2 + 12.0 * y1 * y2 + 24.0 * y1 + 36.0 * y2 + 36.0)
        }
    }
}

/// `sqrt(K)` clamped at the boundary, where rounding can push `K` below zero.
pub fn sqrt_k(label: AlgebraLabel, y: &OmegaPoint) -> f64 {
    eval_k(label, y).max(0.0).sqrt()
}

/// `|det J_x(X)| = kappa (2 pi)^n / (|F| |W|) * |S_rho(x)|`.
pub fn jacobian_abs(data: &AlgebraData, x: &TorusPoint) -> f64 {
    let n = data.rank();
    let s = s_at(data, &WeylGroup::new(data), &Weight::rho(n), x.coords());
    jacobian_prefactor(data) * s.norm()
}

/// `kappa (2 pi)^n / (|F| |W|)`, the constant relating `dy` to `|S_rho| dx`.
pub fn jacobian_prefactor(data: &AlgebraData) -> f64 {
    data.kappa() * TAU.powi(data.rank() as i32) / (data.vol_f() * data.weyl_order() as f64)
}

/// `|det|` of the fourth-order central-difference Jacobian of `X` with respect to orthonormal
/// coordinates, obtained from the derivative in alpha^vee-coordinates divided by
/// `|det alpha^vee|`.
pub fn numeric_jacobian_abs(data: &AlgebraData, x: &TorusPoint, h: f64) -> Result<f64> {
    if !(1e-7..=1e-4).contains(&h) {
        return Err(Error::StepOutOfRange(h));
    }
    data.check_rank(x.rank())?;
    let n = data.rank();
    let a = x.coords();
    let mut jac = vec![vec![0.0; n]; n];
    let shifted = |j: usize, t: f64| {
        let mut b = a.to_vec();
        b[j] += t;
        eval_x(data, &TorusPoint::new(b))
    };
    for j in 0..n {
        let (p2, p1) = (shifted(j, 2.0 * h), shifted(j, h));
        let (m1, m2) = (shifted(j, -h), shifted(j, -2.0 * h));
        for i in 0..n {
            jac[i][j] = (8.0 * (p1.0[i] - m1.0[i]) - (p2.0[i] - m2.0[i])) / (12.0 * h);
        }
    }
    let det = match n {
        1 => jac[0][0],
        2 => jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0],
        _ => unreachable!("X-transform realized only up to rank 2"),
    };
    Ok(det.abs() / (data.vol_f() * data.weyl_order() as f64))
}

/// The image of the edges of `F` under `X`, `samples` points per edge.
///
/// For C2 these are the two lines and the parabola bounding `Omega`; for G2
/// the parabola and the two `3/2`-power curves; for A2 the curve `K = 0`.
/// For A1 the single segment `[-2, 2]` is returned, embedded as `(y, 0)`.
pub fn boundary_curves(data: &AlgebraData, samples: usize) -> Vec<Vec<OmegaPoint>> {
    assert!(samples >= 2);
    if data.rank() == 1 {
        let seg = (0..samples)
            .map(|k| {
                let t = k as f64 / (samples - 1) as f64;
                OmegaPoint(vec![-2.0 + 4.0 * t, 0.0])
            })
            .collect();
        return vec![seg];
    }
    let m = data.marks();
    let inv = data.cartan_inverse();
    let vertices = [
        [0.0, 0.0],
        [1.0 / m[0] as f64, 0.0],
        [0.0, 1.0 / m[1] as f64],
    ];
    let xt = XTransform::new(data);
    let mut scratch = XScratch::default();
    [(0, 1), (1, 2), (2, 0)]
        .iter()
        .map(|&(p, q)| {
            (0..samples)
                .map(|k| {
                    let t = k as f64 / (samples - 1) as f64;
                    let u = [
                        (1.0 - t) * vertices[p][0] + t * vertices[q][0],
                        (1.0 - t) * vertices[p][1] + t * vertices[q][1],
                    ];
                    let a: Vec<f64> = (0..2)
                        .map(|r| exact::to_f64(inv[r][0]) * u[0] + exact::to_f64(inv[r][1]) * u[1])
                        .collect();
                    xt.apply(&a, &mut scratch)
                })
                .collect()
        })
        .collect()
}
