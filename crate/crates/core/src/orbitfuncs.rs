//! Symmetric (C) and antisymmetric (S) orbit functions.
//!
//! Points are given in alpha^vee-coordinates `a` and labels in omega
//! coordinates, so `<nu, x> = sum nu_i a_i` because `<omega_i, alpha_j^vee> = delta_ij`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::grids::GridFM;
use crate::liealg::{AlgebraData, Weight};
use crate::sum::CompensatedComplexSum;
use crate::weyl::{orbit, TorusPoint, WeylGroup};
use crate::{Error, Result};

/// `exp(2 pi i t)`, with `t` reduced modulo 1 first.
#[inline]
pub(crate) fn unit_phase(t: f64) -> Complex64 {
    let r = t - t.round();
    let (s, c) = (TAU * r).sin_cos();
    Complex64::new(c, s)
}

#[inline]
fn pairing(nu: &[i64], a: &[f64]) -> f64 {
    nu.iter().zip(a).map(|(&n, &x)| n as f64 * x).sum()
}

/// `C_lambda(x) = sum over the distinct elements nu of W lambda of exp(2 pi i <nu, x>)`.
pub fn eval_c(data: &AlgebraData, lambda: &Weight, x: &TorusPoint) -> Result<Complex64> {
    data.check_rank(lambda.rank())?;
    data.check_rank(x.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominantLabel(lambda.clone()));
    }
    Ok(c_at(data, lambda, x.coords()))
}

pub(crate) fn c_at(data: &AlgebraData, lambda: &Weight, a: &[f64]) -> Complex64 {
    orbit(data, lambda)
        .elements()
        .iter()
        .map(|nu| unit_phase(pairing(nu.coords(), a)))
        .collect::<CompensatedComplexSum>()
        .value()
}

/// `S_lambda(x) = sum_{w in W} det(w) exp(2 pi i <w lambda, x>)`.
pub fn eval_s(data: &AlgebraData, lambda: &Weight, x: &TorusPoint) -> Result<Complex64> {
    data.check_rank(lambda.rank())?;
    data.check_rank(x.rank())?;
    if !lambda.is_strictly_dominant() {
        return Err(Error::NonStrictlyDominantLabel(lambda.clone()));
    }
    Ok(s_at(data, &WeylGroup::new(data), lambda, x.coords()))
}

pub(crate) fn s_at(data: &AlgebraData, group: &WeylGroup, lambda: &Weight, a: &[f64]) -> Complex64 {
    debug_assert_eq!(data.rank(), a.len());
    group
        .elements()
        .iter()
        .map(|w| unit_phase(pairing(w.apply(lambda).coords(), a)) * f64::from(w.det()))
        .collect::<CompensatedComplexSum>()
        .value()
}

/// `Z_j = C_{omega_j}` (0-based `j`).
pub fn eval_z(data: &AlgebraData, j: usize, x: &TorusPoint) -> Complex64 {
    assert!(j < data.rank(), "fundamental weight index {j} out of range");
    c_at(data, &Weight::fundamental(data.rank(), j), x.coords())
}

/// `sum_{x in F_M} eps(x) C_lambda(x)`; equals `c M^n` when `lambda` is in `MQ`
/// and 0 otherwise.
pub fn discrete_sum(data: &AlgebraData, lambda: &Weight, grid: &GridFM) -> Result<Complex64> {
    data.check_rank(lambda.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NonDominantLabel(lambda.clone()));
    }
    let orbit = orbit(data, lambda);
    let mut acc = CompensatedComplexSum::new();
    for p in &grid.points {
        let a = p.torus_point();
        let c = orbit
            .elements()
            .iter()
            .map(|nu| unit_phase(pairing(nu.coords(), a.coords())))
            .collect::<CompensatedComplexSum>()
            .value();
        acc.add(c * p.eps as f64);
    }
    Ok(acc.value())
}

/// Batch evaluator for a fixed family of C-functions.
///
/// The orbits are expanded once; at each point a table of `exp(2 pi i k a_i)`
/// per coordinate turns every orbit term into a product of table entries.
/// When `-1` lies in the Weyl group every orbit is closed under negation, and
/// only one representative of each `{nu, -nu}` pair is kept.
#[derive(Debug, Clone)]
pub struct OrbitBank {
    rank: usize,
    labels: Vec<Weight>,
    /// `term_start[k]..term_start[k + 1]` indexes the terms of label `k`.
    term_start: Vec<usize>,
    /// Table offsets `nu_i + width_i`, `rank` entries per term.
    term_index: Vec<usize>,
    term_weight: Vec<f64>,
    width: Vec<usize>,
    real: bool,
}

/// Reusable buffers for [`OrbitBank::eval_into`].
#[derive(Debug, Clone, Default)]
pub struct BankScratch {
    tables: Vec<Vec<Complex64>>,
}

impl OrbitBank {
    pub fn new(data: &AlgebraData, labels: &[Weight]) -> Self {
        let rank = data.rank();
        let orbits: Vec<Vec<Weight>> = labels
            .iter()
            .map(|l| orbit(data, l).elements().to_vec())
            .collect();
        let real = orbits
            .iter()
            .all(|o| o.iter().all(|nu| o.binary_search(&negate(nu)).is_ok()));
        let mut width = vec![0usize; rank];
        for nu in orbits.iter().flatten() {
            for (w, &c) in width.iter_mut().zip(nu.coords()) {
                *w = (*w).max(c.unsigned_abs() as usize);
            }
        }
        let mut term_start = Vec::with_capacity(labels.len() + 1);
        let mut term_index = Vec::new();
        let mut term_weight = Vec::new();
        for o in &orbits {
            term_start.push(term_weight.len());
            for nu in o {
                let weight = if !real {
                    1.0
                } else {
                    let neg = negate(nu);
                    if *nu == neg {
                        1.0
                    } else if *nu > neg {
                        2.0
                    } else {
                        continue;
                    }
                };
                term_weight.push(weight);
                term_index.extend(
                    nu.coords()
                        .iter()
                        .zip(&width)
                        .map(|(&c, &w)| (c + w as i64) as usize),
                );
            }
        }
        term_start.push(term_weight.len());
        Self {
            rank,
            labels: labels.to_vec(),
            term_start,
            term_index,
            term_weight,
            width,
            real,
        }
    }

    pub fn labels(&self) -> &[Weight] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Whether every function in the bank is real-valued.
    pub fn is_real(&self) -> bool {
        self.real
    }

    /// Writes `C_lambda(a)` for every label into `out`.
    pub fn eval_into(&self, a: &[f64], out: &mut [Complex64], scratch: &mut BankScratch) {
        debug_assert_eq!(a.len(), self.rank);
        debug_assert_eq!(out.len(), self.labels.len());
        scratch.tables.resize_with(self.rank, Vec::new);
        for ((table, &w), &ai) in scratch.tables.iter_mut().zip(&self.width).zip(a) {
            table.clear();
            table.resize(2 * w + 1, Complex64::new(1.0, 0.0));
            for k in 1..=w {
                let z = unit_phase(k as f64 * ai);
                table[w + k] = z;
                table[w - k] = z.conj();
            }
        }
        match self.rank {
            2 => self.eval_rank2(out, &scratch.tables[0], &scratch.tables[1]),
            _ => self.eval_general(out, &scratch.tables),
        }
    }

    fn eval_rank2(&self, out: &mut [Complex64], t0: &[Complex64], t1: &[Complex64]) {
        for (k, slot) in out.iter_mut().enumerate() {
            let range = self.term_start[k]..self.term_start[k + 1];
            let idx = &self.term_index[2 * range.start..2 * range.end];
            let weights = &self.term_weight[range];
            if self.real {
                let mut s = 0.0;
                for (pair, &wt) in idx.chunks_exact(2).zip(weights) {
                    let (p, q) = (t0[pair[0]], t1[pair[1]]);
                    s += wt * (p.re * q.re - p.im * q.im);
                }
                *slot = Complex64::new(s, 0.0);
            } else {
                let mut s = Complex64::new(0.0, 0.0);
                for (pair, &wt) in idx.chunks_exact(2).zip(weights) {
                    s += t0[pair[0]] * t1[pair[1]] * wt;
                }
                *slot = s;
            }
        }
    }

    fn eval_general(&self, out: &mut [Complex64], tables: &[Vec<Complex64>]) {
        let n = self.rank;
        for (k, slot) in out.iter_mut().enumerate() {
            let range = self.term_start[k]..self.term_start[k + 1];
            let mut s = Complex64::new(0.0, 0.0);
            for t in range {
                let prod = (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| {
                    acc * tables[i][self.term_index[t * n + i]]
                });
                s += prod * self.term_weight[t];
            }
            *slot = if self.real { Complex64::new(s.re, 0.0) } else { s };
        }
    }

    pub fn eval(&self, a: &[f64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.labels.len()];
        self.eval_into(a, &mut out, &mut BankScratch::default());
        out
    }
}

fn negate(w: &Weight) -> Weight {
    Weight(w.coords().iter().map(|c| -c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::build_grid;
    use crate::liealg::{build_algebra, enumerate_dominant, AlgebraLabel};
    use crate::weyl::reflect_point;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn values_at_origin_are_orbit_sizes() {
        let o = TorusPoint::origin(2);
        let a2 = build_algebra(AlgebraLabel::A2);
        let c2 = build_algebra(AlgebraLabel::C2);
        let g2 = build_algebra(AlgebraLabel::G2);
        assert!(close(eval_c(&a2, &Weight::from([1, 1]), &o).unwrap(), 6.0.into(), 1e-14));
        assert!(close(eval_c(&c2, &Weight::from([1, 0]), &o).unwrap(), 4.0.into(), 1e-14));
        assert!(close(eval_z(&a2, 0, &o), 3.0.into(), 1e-14));
        assert!(close(eval_z(&c2, 1, &o), 4.0.into(), 1e-14));
        assert!(close(eval_z(&g2, 0, &o), 6.0.into(), 1e-14));
    }

    #[test]
    fn zero_label_is_constant_one() {
        for label in AlgebraLabel::ALL {
            let d = build_algebra(label);
            let x = TorusPoint::new(vec![0.123; d.rank()]);
            let v = eval_c(&d, &Weight::zero(d.rank()), &x).unwrap();
            assert!(close(v, 1.0.into(), 1e-15));
        }
    }

    #[test]
    fn label_checks() {
        let a2 = build_algebra(AlgebraLabel::A2);
        let x = TorusPoint::new(vec![0.1, 0.2]);
        assert!(matches!(
            eval_c(&a2, &Weight::from([-1, 0]), &x),
            Err(Error::NonDominantLabel(_))
        ));
        assert!(matches!(
            eval_s(&a2, &Weight::from([0, 1]), &x),
            Err(Error::NonStrictlyDominantLabel(_))
        ));
        assert!(matches!(
            eval_c(&a2, &Weight::new(vec![1]), &x),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn s_rho_vanishes_on_walls_and_not_inside() {
        for label in AlgebraLabel::RANK_TWO {
            let d = build_algebra(label);
            let rho = Weight::rho(2);
            assert!(eval_s(&d, &rho, &TorusPoint::origin(2)).unwrap().norm() < 1e-12);
            // the three edges of F, in omega^vee coordinates scaled by marks
            let m = d.marks();
            let inv = d.cartan_inverse();
            let to_alpha = |u: [f64; 2]| -> TorusPoint {
                let a: Vec<f64> = (0..2)
                    .map(|k| {
                        crate::exact::to_f64(inv[k][0]) * u[0] + crate::exact::to_f64(inv[k][1]) * u[1]
                    })
                    .collect();
                TorusPoint::new(a)
            };
            for t in [0.1, 0.37, 0.8] {
                for u in [
                    [t / m[0] as f64, 0.0],
                    [0.0, t / m[1] as f64],
                    [t / m[0] as f64, (1.0 - t) / m[1] as f64],
                ] {
                    let v = eval_s(&d, &rho, &to_alpha(u)).unwrap();
                    assert!(v.norm() < 1e-12, "{label} {u:?} {v}");
                }
            }
            let inside = to_alpha([0.25 / m[0] as f64, 0.25 / m[1] as f64]);
            assert!(eval_s(&d, &rho, &inside).unwrap().norm() > 1e-3);
        }
    }

    #[test]
    fn weyl_invariance_and_antisymmetry() {
        for label in AlgebraLabel::RANK_TWO {
            let d = build_algebra(label);
            let x = TorusPoint::new(vec![0.173, 0.402]);
            let lambda = Weight::from([2, 3]);
            let c = eval_c(&d, &lambda, &x).unwrap();
            let s = eval_s(&d, &lambda, &x).unwrap();
            for i in 0..2 {
                let rx = reflect_point(&d, i, &x);
                assert!(close(eval_c(&d, &lambda, &rx).unwrap(), c, 1e-12));
                assert!(close(eval_s(&d, &lambda, &rx).unwrap(), -s, 1e-12));
            }
            let shifted = TorusPoint::new(vec![0.173 + 2.0, 0.402 - 1.0]);
            assert!(close(eval_c(&d, &lambda, &shifted).unwrap(), c, 1e-12));
        }
    }

    #[test]
    fn discrete_sum_examples() {
        let a2 = build_algebra(AlgebraLabel::A2);
        let g = build_grid(&a2, 2).unwrap();
        let s0 = discrete_sum(&a2, &Weight::from([0, 0]), &g).unwrap();
        assert!(close(s0, 12.0.into(), 1e-12));
        let s1 = discrete_sum(&a2, &Weight::from([1, 0]), &g).unwrap();
        assert!(s1.norm() < 1e-9);
        // (2,2) lies in 2Q, so C_(2,2) = |W(2,2)| = 6 at every node
        let s2 = discrete_sum(&a2, &Weight::from([2, 2]), &g).unwrap();
        assert!(close(s2, 72.0.into(), 1e-9));
    }

    #[test]
    fn bank_agrees_with_direct_evaluation() {
        for label in AlgebraLabel::ALL {
            let d = build_algebra(label);
            let labels = enumerate_dominant(&d, 9);
            let bank = OrbitBank::new(&d, &labels);
            assert_eq!(bank.is_real(), label != AlgebraLabel::A2);
            let a: Vec<f64> = [0.211, 0.374][..d.rank()].to_vec();
            let vals = bank.eval(&a);
            for (l, v) in labels.iter().zip(&vals) {
                let direct = c_at(&d, l, &a);
                assert!(close(*v, direct, 1e-12), "{label} {l}: {v} vs {direct}");
            }
        }
    }
}
