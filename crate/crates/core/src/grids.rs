//! The finite point sets `F_M = (1/M) P^vee / Q^vee ∩ F`.

use num_rational::Rational64;

use crate::exact;
use crate::liealg::{AlgebraData, AlgebraLabel};
use crate::weyl::{epsilon, TorusPoint};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct GridPoint {
    /// `[s_0, s_1, ..., s_n]` with `s_0 + sum s_i m_i = M`.
    pub index: Vec<i64>,
    /// `(s_1/M, ..., s_n/M)` in the omega^vee basis.
    pub omega_coords: Vec<Rational64>,
    /// Same point in the alpha^vee basis (not reduced modulo 1).
    pub alpha_coords: Vec<Rational64>,
    pub eps: u64,
}

impl GridPoint {
    pub fn torus_point(&self) -> TorusPoint {
        TorusPoint::exact(self.alpha_coords.iter().copied())
    }

    pub fn alpha_f64(&self) -> Vec<f64> {
        self.alpha_coords.iter().map(|&q| exact::to_f64(q)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct GridFM {
    pub algebra: AlgebraLabel,
    pub m: i64,
    pub points: Vec<GridPoint>,
}

impl GridFM {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Enumerates every index `[s_0, ..., s_n]` in lexicographic order and fills
/// exact coordinates and orbit sizes.
pub fn build_grid(data: &AlgebraData, m: i64) -> Result<GridFM> {
    if m < 1 {
        return Err(Error::InvalidM(m));
    }
    let mut indices = Vec::new();
    enumerate_indices(data.marks(), m, &mut Vec::new(), &mut indices);
    indices.sort();

    let points = indices
        .into_iter()
        .map(|index| {
            let omega_coords: Vec<Rational64> =
                index[1..].iter().map(|&s| Rational64::new(s, m)).collect();
            // x = sum u_i omega_i^vee = sum_i u_i sum_k B_ik alpha_k^vee, so a = B^T u = C^{-1} u
            let alpha_coords = exact::mul_vec(data.cartan_inverse(), &omega_coords);
            let eps = epsilon(data, &TorusPoint::exact(alpha_coords.iter().copied()))?;
            Ok(GridPoint {
                index,
                omega_coords,
                alpha_coords,
                eps,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GridFM {
        algebra: data.label(),
        m,
        points,
    })
}

fn enumerate_indices(marks: &[i64], budget: i64, tail: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let Some((&mk, rest)) = marks.split_first() else {
        let mut idx = Vec::with_capacity(tail.len() + 1);
        idx.push(budget);
        idx.extend_from_slice(tail);
        out.push(idx);
        return;
    };
    for s in 0..=budget / mk {
        tail.push(s);
        enumerate_indices(rest, budget - s * mk, tail, out);
        tail.pop();
    }
}

/// `sum_j eps_j`, which equals `c M^n`.
pub fn grid_weighted_count(grid: &GridFM) -> u64 {
    grid.points.iter().map(|p| p.eps).sum()
}
