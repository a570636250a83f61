//! Polynomial approximation in `L^2_K(Omega)`.
//!
//! The orthogonal polynomials `p_lambda` satisfy `p_lambda(X(x)) = C_lambda(x)`,
//! so every evaluation of `p_lambda` happens on `F` and every `Omega`-integral
//! is pulled back to `F`:
//! `(f, g)_K = 1/(kappa (2 pi)^n) int_Omega f conj(g) K^{-1/2} dy
//!          = 1/(|F| |W|) int_F f(X(x)) conj(g(X(x))) dx`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::grids::build_grid;
use crate::liealg::{enumerate_dominant, AlgebraData, AlgebraLabel, Weight};
use crate::orbitfuncs::{BankScratch, OrbitBank};
use crate::refquad::ref_integral_vec;
use crate::sum::CompensatedComplexSum;
use crate::weyl::stabilizer_order;
use crate::xmap::{eval_x, jacobian_prefactor, OmegaPoint, XScratch, XTransform};
use crate::{Error, Result};

/// Smallest subdivision for coefficient integrals.
pub const MIN_SUBDIVISION_COEFFS: usize = 64;
/// Smallest subdivision for error integrals.
pub const MIN_SUBDIVISION_ERROR: usize = 256;

/// Imaginary residue tolerated when a real approximant is requested.
const REAL_RESIDUE: f64 = 1e-10;

/// A function to approximate, given either on `Omega` or directly on `F`.
#[derive(Clone, Copy)]
pub enum Target<'a> {
    /// Real `f(y)` on `Omega`.
    Omega(&'a (dyn Fn(&OmegaPoint) -> f64 + Sync)),
    /// `g(x) = f(X(x))` in alpha^vee-coordinates; may be complex.
    Pullback(&'a (dyn Fn(&[f64]) -> Complex64 + Sync)),
}

impl Target<'_> {
    fn at(&self, xt: &XTransform, a: &[f64], scratch: &mut XScratch) -> Complex64 {
        match self {
            Target::Omega(f) => Complex64::new(f(&xt.apply(a, scratch)), 0.0),
            Target::Pullback(g) => g(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxCoeffs {
    pub algebra: AlgebraLabel,
    pub m: i64,
    /// `a_lambda` for every `lambda` in `P^+_M`.
    pub coeffs: BTreeMap<Weight, Complex64>,
}

impl ApproxCoeffs {
    pub fn get(&self, lambda: &Weight) -> Option<Complex64> {
        self.coeffs.get(lambda).copied()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn bank(&self, data: &AlgebraData) -> (OrbitBank, Vec<Complex64>) {
        let labels: Vec<Weight> = self.coeffs.keys().cloned().collect();
        let values = self.coeffs.values().copied().collect();
        (OrbitBank::new(data, &labels), values)
    }
}

/// `h_lambda` for each label.
fn stabilizers(data: &AlgebraData, labels: &[Weight]) -> Vec<f64> {
    labels
        .iter()
        .map(|l| stabilizer_order(data, l) as f64)
        .collect()
}

/// Cubature coefficients of `v_M[f]`:
/// `a_lambda = h_lambda / (c |W| M^n) * sum_j eps_j f(y_j) conj(C_lambda(x_j))`.
pub fn coeffs_v(data: &AlgebraData, m: i64, f: Target<'_>) -> Result<ApproxCoeffs> {
    let grid = build_grid(data, m)?;
    let labels = enumerate_dominant(data, m);
    let bank = OrbitBank::new(data, &labels);
    let rows: Vec<Vec<Complex64>> = grid
        .points
        .par_iter()
        .map_init(
            || (BankScratch::default(), vec![Complex64::new(0.0, 0.0); labels.len()]),
            |(scratch, c), p| {
                let a = p.alpha_f64();
                let fx = match f {
                    Target::Omega(f) => Complex64::new(f(&eval_x(data, &p.torus_point())), 0.0),
                    Target::Pullback(g) => g(&a),
                };
                bank.eval_into(&a, c, scratch);
                c.iter().map(|ck| fx * ck.conj() * p.eps as f64).collect()
            },
        )
        .collect();
    let norm = data.c() as f64 * data.weyl_order() as f64 * (m as f64).powi(data.rank() as i32);
    let h = stabilizers(data, &labels);
    let coeffs = labels
        .iter()
        .enumerate()
        .map(|(k, l)| {
            let s: CompensatedComplexSum = rows.iter().map(|r| r[k]).collect();
            (l.clone(), s.value() * (h[k] / norm))
        })
        .collect();
    Ok(ApproxCoeffs {
        algebra: data.label(),
        m,
        coeffs,
    })
}

/// Optimal coefficients of `u_M[f]`: `a_lambda = h_lambda (f, p_lambda)_K`,
/// integrated by the reference quadrature at subdivision `r`.
pub fn coeffs_u(data: &AlgebraData, m: i64, f: Target<'_>, r: usize) -> Result<ApproxCoeffs> {
    if r < MIN_SUBDIVISION_COEFFS {
        return Err(Error::SubdivisionTooCoarse {
            got: r,
            min: MIN_SUBDIVISION_COEFFS,
        });
    }
    if m < 0 {
        return Err(Error::InvalidM(m));
    }
    let labels = enumerate_dominant(data, m);
    let bank = OrbitBank::new(data, &labels);
    let xt = XTransform::new(data);
    let n = labels.len();
    let est = ref_integral_vec(
        data,
        2 * n,
        || {
            (
                XScratch::default(),
                BankScratch::default(),
                vec![Complex64::new(0.0, 0.0); n],
            )
        },
        |(xs, bs, c), a, out| {
            let fx = f.at(&xt, a, xs);
            bank.eval_into(a, c, bs);
            for (k, ck) in c.iter().enumerate() {
                let v = fx * ck.conj();
                out[2 * k] = v.re;
                out[2 * k + 1] = v.im;
            }
        },
        r,
    )?;
    let h = stabilizers(data, &labels);
    let norm = data.vol_f() * data.weyl_order() as f64;
    let coeffs = labels
        .into_iter()
        .enumerate()
        .map(|(k, l)| {
            let v = Complex64::new(est[2 * k].value, est[2 * k + 1].value);
            (l, v * (h[k] / norm))
        })
        .collect();
    Ok(ApproxCoeffs {
        algebra: data.label(),
        m,
        coeffs,
    })
}

/// `sum_lambda a_lambda C_lambda(x)` at alpha^vee-coordinates `a`.
pub fn eval_approx(data: &AlgebraData, coeffs: &ApproxCoeffs, a: &[f64]) -> Complex64 {
    ApproxEvaluator::new(data, coeffs).eval(a, &mut ApproxScratch::default())
}

/// Real part of [`eval_approx`], asserting the imaginary residue vanishes.
pub fn eval_approx_real(data: &AlgebraData, coeffs: &ApproxCoeffs, a: &[f64]) -> f64 {
    real_part(eval_approx(data, coeffs, a))
}

fn real_part(z: Complex64) -> f64 {
    assert!(
        z.im.abs() < REAL_RESIDUE,
        "internal consistency: approximant of a real function has imaginary part {}",
        z.im
    );
    z.re
}

/// Reusable evaluator of an approximant at many points.
#[derive(Debug, Clone)]
pub struct ApproxEvaluator {
    bank: OrbitBank,
    values: Vec<Complex64>,
}

#[derive(Debug, Clone, Default)]
pub struct ApproxScratch {
    bank: BankScratch,
    c: Vec<Complex64>,
}

impl ApproxEvaluator {
    pub fn new(data: &AlgebraData, coeffs: &ApproxCoeffs) -> Self {
        let (bank, values) = coeffs.bank(data);
        Self { bank, values }
    }

    pub fn eval(&self, a: &[f64], scratch: &mut ApproxScratch) -> Complex64 {
        scratch.c.resize(self.values.len(), Complex64::new(0.0, 0.0));
        self.bank.eval_into(a, &mut scratch.c, &mut scratch.bank);
        let mut s = Complex64::new(0.0, 0.0);
        for (ak, ck) in self.values.iter().zip(&scratch.c) {
            s += ak * ck;
        }
        s
    }

    pub fn eval_real(&self, a: &[f64], scratch: &mut ApproxScratch) -> f64 {
        real_part(self.eval(a, scratch))
    }
}

/// `int_Omega |f - approximant|^2 K^{-1/2} dy`, pulled back to `F`.
pub fn error_l2k(data: &AlgebraData, f: Target<'_>, coeffs: &ApproxCoeffs, r: usize) -> Result<f64> {
    if r < MIN_SUBDIVISION_ERROR {
        return Err(Error::SubdivisionTooCoarse {
            got: r,
            min: MIN_SUBDIVISION_ERROR,
        });
    }
    let xt = XTransform::new(data);
    let ev = ApproxEvaluator::new(data, coeffs);
    let est = ref_integral_vec(
        data,
        1,
        || (XScratch::default(), ApproxScratch::default()),
        |(xs, aps), a, out| {
            let d = f.at(&xt, a, xs) - ev.eval(a, aps);
            out[0] = d.norm_sqr();
        },
        r,
    )?;
    Ok((jacobian_prefactor(data) * est[0].value).max(0.0))
}

/// `(f, g)_K` for two targets, by the reference quadrature.
pub fn inner_k(data: &AlgebraData, f: Target<'_>, g: Target<'_>, r: usize) -> Result<Complex64> {
    let xt = XTransform::new(data);
    let est = ref_integral_vec(
        data,
        2,
        XScratch::default,
        |xs, a, out| {
            let v = f.at(&xt, a, xs) * g.at(&xt, a, xs).conj();
            out[0] = v.re;
            out[1] = v.im;
        },
        r,
    )?;
    let norm = data.vol_f() * data.weyl_order() as f64;
    Ok(Complex64::new(est[0].value, est[1].value) / norm)
}

/// Isotropic Gaussian bump on `Omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianModel {
    pub center: [f64; 2],
    pub sigma: f64,
}

impl GaussianModel {
    /// The C2 example: centre `(0, -1.8)`, `sigma = 0.35`.
    pub const STANDARD: GaussianModel = GaussianModel {
        center: [0.0, -1.8],
        sigma: 0.35,
    };

    /// The standard model for C2; for other algebras the same width centred at
    /// the image of the barycentre of `F`.
    pub fn for_algebra(data: &AlgebraData) -> Self {
        if data.label() == AlgebraLabel::C2 {
            return Self::STANDARD;
        }
        let n = data.rank();
        let marks = data.marks();
        let inv = data.cartan_inverse();
        // vertices of F in omega^vee-coordinates are 0 and e_i / m_i
        let u: Vec<f64> = (0..n).map(|i| 1.0 / ((n + 1) as f64 * marks[i] as f64)).collect();
        let a: Vec<f64> = (0..n)
            .map(|r| (0..n).map(|i| crate::exact::to_f64(inv[r][i]) * u[i]).sum())
            .collect();
        let y = eval_x(data, &crate::weyl::TorusPoint::new(a));
        let mut center = [0.0; 2];
        center[..n].copy_from_slice(y.coords());
        Self {
            center,
            sigma: Self::STANDARD.sigma,
        }
    }

    pub fn eval(&self, y: &OmegaPoint) -> f64 {
        let r2: f64 = y
            .coords()
            .iter()
            .zip(&self.center)
            .map(|(yi, ci)| (yi - ci) * (yi - ci))
            .sum();
        (-r2 / (2.0 * self.sigma * self.sigma)).exp()
    }
}

/// The standard Gaussian model function.
pub fn gaussian_model(y: &OmegaPoint) -> f64 {
    GaussianModel::STANDARD.eval(y)
}
