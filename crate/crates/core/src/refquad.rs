//! Dense reference quadrature on the simplex `F`.
//!
//! `F` is mapped to the standard simplex `t_i >= 0, sum t_i <= 1` through
//! `u_i = t_i / m_i` (omega^vee-coordinates). The standard simplex is split
//! into `R^2` congruent triangles (`R` intervals in rank 1) and each cell is
//! sampled at its centroid. Two levels `R` and `2R` are combined by Richardson
//! extrapolation.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::exact;
use crate::liealg::AlgebraData;
use crate::sum::CompensatedSum;
use crate::xmap::{jacobian_prefactor, OmegaPoint, XScratch, XTransform};
use crate::{Error, Result};

/// Smallest subdivision accepted by the estimators.
pub const MIN_SUBDIVISION: usize = 16;

#[derive(Debug, Clone)]
pub struct RefGrid {
    rank: usize,
    r: usize,
    /// `a = map * t`.
    map: Vec<Vec<f64>>,
    cell_weight: f64,
}

impl RefGrid {
    pub fn new(data: &AlgebraData, r: usize) -> Result<Self> {
        if r < 1 {
            return Err(Error::SubdivisionTooCoarse { got: r, min: 1 });
        }
        let n = data.rank();
        let inv = data.cartan_inverse();
        let marks = data.marks();
        let map = (0..n)
            .map(|row| {
                (0..n)
                    .map(|i| exact::to_f64(inv[row][i]) / marks[i] as f64)
                    .collect()
            })
            .collect();
        let cells = if n == 1 { r } else { r * r };
        Ok(Self {
            rank: n,
            r,
            map,
            cell_weight: data.vol_f() / cells as f64,
        })
    }

    pub fn subdivision(&self) -> usize {
        self.r
    }

    pub fn cell_count(&self) -> usize {
        if self.rank == 1 {
            self.r
        } else {
            self.r * self.r
        }
    }

    pub fn cell_weight(&self) -> f64 {
        self.cell_weight
    }

    fn to_alpha(&self, t: &[f64], a: &mut [f64]) {
        for (ar, row) in a.iter_mut().zip(&self.map) {
            *ar = row.iter().zip(t).map(|(m, ti)| m * ti).sum();
        }
    }

    /// Centroids of the cells in row `i`, in `t`-coordinates. In rank 1 a row
    /// is a single interval.
    fn for_each_in_row(&self, i: usize, mut visit: impl FnMut(&[f64])) {
        let h = 1.0 / self.r as f64;
        if self.rank == 1 {
            visit(&[(i as f64 + 0.5) * h]);
            return;
        }
        let r = self.r;
        for j in 0..r - i {
            visit(&[(i as f64 + 1.0 / 3.0) * h, (j as f64 + 1.0 / 3.0) * h]);
        }
        for j in 0..(r - i).saturating_sub(1) {
            visit(&[(i as f64 + 2.0 / 3.0) * h, (j as f64 + 2.0 / 3.0) * h]);
        }
    }

    /// Cell centres in alpha^vee-coordinates.
    pub fn points(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(self.cell_count());
        for i in 0..self.r {
            self.for_each_in_row(i, |t| {
                let mut a = vec![0.0; self.rank];
                self.to_alpha(t, &mut a);
                out.push(a);
            });
        }
        out
    }

    /// Midpoint sums of a vector-valued integrand.
    ///
    /// `g(state, a, out)` writes `dim` values at the cell centre `a`. Rows are
    /// processed in parallel with one `state` per worker; row partials are
    /// reduced serially in row order.
    pub fn integrate_with<S, I, G>(&self, dim: usize, init: I, g: G) -> Vec<f64>
    where
        I: Fn() -> S + Sync + Send,
        G: Fn(&mut S, &[f64], &mut [f64]) + Sync + Send,
    {
        let partials: Vec<Vec<CompensatedSum>> = (0..self.r)
            .into_par_iter()
            .map_init(
                || (init(), vec![0.0; dim], vec![0.0; self.rank]),
                |(state, buf, a), i| {
                    let mut acc = vec![CompensatedSum::new(); dim];
                    self.for_each_in_row(i, |t| {
                        self.to_alpha(t, a);
                        g(state, a, buf);
                        for (s, &v) in acc.iter_mut().zip(buf.iter()) {
                            s.add(v);
                        }
                    });
                    acc
                },
            )
            .collect();
        let mut total = vec![CompensatedSum::new(); dim];
        for row in &partials {
            for (t, p) in total.iter_mut().zip(row) {
                t.add(p.value());
            }
        }
        total
            .into_iter()
            .map(|t| t.value() * self.cell_weight)
            .collect()
    }

    pub fn integrate<G>(&self, g: G) -> f64
    where
        G: Fn(&[f64]) -> f64 + Sync + Send,
    {
        self.integrate_with(1, || (), |_, a, out| out[0] = g(a))[0]
    }
}

/// A Richardson-extrapolated value with the estimated error of the finer level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefEstimate {
    pub value: f64,
    pub error: f64,
}

fn richardson(coarse: f64, fine: f64) -> RefEstimate {
    RefEstimate {
        value: (4.0 * fine - coarse) / 3.0,
        error: (fine - coarse).abs() / 3.0,
    }
}

fn check_subdivision(r: usize, min: usize) -> Result<()> {
    if r < min {
        Err(Error::SubdivisionTooCoarse { got: r, min })
    } else {
        Ok(())
    }
}

/// `int_F g` for a vector-valued `g`, extrapolated from levels `R` and `2R`.
pub fn ref_integral_vec<S, I, G>(
    data: &AlgebraData,
    dim: usize,
    init: I,
    g: G,
    r: usize,
) -> Result<Vec<RefEstimate>>
where
    I: Fn() -> S + Sync + Send,
    G: Fn(&mut S, &[f64], &mut [f64]) + Sync + Send,
{
    check_subdivision(r, MIN_SUBDIVISION)?;
    let coarse = RefGrid::new(data, r)?.integrate_with(dim, &init, &g);
    let fine = RefGrid::new(data, 2 * r)?.integrate_with(dim, &init, &g);
    Ok(coarse
        .into_iter()
        .zip(fine)
        .map(|(c, f)| richardson(c, f))
        .collect())
}

/// `int_F g(x) dx`, `g` taking alpha^vee-coordinates.
pub fn ref_integral_f<G>(data: &AlgebraData, g: G, r: usize) -> Result<RefEstimate>
where
    G: Fn(&[f64]) -> f64 + Sync + Send,
{
    let v = ref_integral_vec(data, 1, || (), |_, a, out| out[0] = g(a), r)?;
    Ok(v[0])
}

/// Complex version of [`ref_integral_f`]; the error bound covers both parts.
pub fn ref_integral_f_complex<G>(data: &AlgebraData, g: G, r: usize) -> Result<(Complex64, f64)>
where
    G: Fn(&[f64]) -> Complex64 + Sync + Send,
{
    let v = ref_integral_vec(
        data,
        2,
        || (),
        |_, a, out| {
            let z = g(a);
            out[0] = z.re;
            out[1] = z.im;
        },
        r,
    )?;
    Ok((
        Complex64::new(v[0].value, v[1].value),
        v[0].error.hypot(v[1].error),
    ))
}

/// `int_Omega f K^{-1/2} dy`, computed as
/// `kappa (2 pi)^n / (|F| |W|) * int_F f(X(x)) dx`.
pub fn ref_integral_omega_weighted<F>(data: &AlgebraData, f: F, r: usize) -> Result<RefEstimate>
where
    F: Fn(&OmegaPoint) -> f64 + Sync + Send,
{
    let xt = XTransform::new(data);
    let v = ref_integral_vec(
        data,
        1,
        XScratch::default,
        |scratch, a, out| out[0] = f(&xt.apply(a, scratch)),
        r,
    )?;
    let k = jacobian_prefactor(data);
    Ok(RefEstimate {
        value: k * v[0].value,
        error: k * v[0].error,
    })
}
