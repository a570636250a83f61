//! Cubature rules on `Omega` for the weight `K^{-1/2}`.
//!
//! A rule of density `M` integrates every polynomial of m-degree at most
//! `2M - 1` exactly:
//! `int_Omega p K^{-1/2} dy = prefactor * sum_j eps_j p(y_j)`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::Rational64;
use rayon::prelude::*;

use crate::grids::build_grid;
use crate::liealg::{AlgebraData, AlgebraLabel};
use crate::sum::{sum, sum_complex};
use crate::weyl::TorusPoint;
use crate::xmap::{eval_x, OmegaPoint};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct CubatureNode {
    /// `[s_0, ..., s_n]`.
    pub index: Vec<i64>,
    /// Exact alpha^vee-coordinates of the preimage in `F`.
    pub alpha_exact: Vec<Rational64>,
    pub alpha: Vec<f64>,
    pub y: OmegaPoint,
    pub eps: u64,
    /// `prefactor * eps`.
    pub weight: f64,
}

impl CubatureNode {
    pub fn torus_point(&self) -> TorusPoint {
        TorusPoint::exact(self.alpha_exact.iter().copied())
    }
}

#[derive(Debug, Clone)]
pub struct CubatureRule {
    pub algebra: AlgebraLabel,
    pub m: i64,
    pub prefactor: f64,
    pub nodes: Vec<CubatureNode>,
}

impl CubatureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_j eps_j`, equal to `c M^n`.
    pub fn eps_total(&self) -> u64 {
        self.nodes.iter().map(|n| n.eps).sum()
    }
}

/// `kappa / (c |W|) * (2 pi / M)^n`.
pub fn rule_prefactor(data: &AlgebraData, m: i64) -> f64 {
    data.kappa() / (data.c() as f64 * data.weyl_order() as f64)
        * (TAU / m as f64).powi(data.rank() as i32)
}

pub fn build_rule(data: &AlgebraData, m: i64) -> Result<CubatureRule> {
    let grid = build_grid(data, m)?;
    let prefactor = rule_prefactor(data, m);
    let nodes = grid
        .points
        .into_par_iter()
        .map(|p| {
            let x = p.torus_point();
            let y = eval_x(data, &x);
            let alpha = p.alpha_f64();
            CubatureNode {
                weight: prefactor * p.eps as f64,
                index: p.index,
                alpha_exact: p.alpha_coords,
                alpha,
                y,
                eps: p.eps,
            }
        })
        .collect();
    Ok(CubatureRule {
        algebra: data.label(),
        m,
        prefactor,
        nodes,
    })
}

/// `sum_j w_j f(y_j)`.
///
/// `f` is evaluated in parallel; the reduction runs serially in node order, so
/// the result does not depend on the thread count.
pub fn integrate<F>(rule: &CubatureRule, f: F) -> f64
where
    F: Fn(&OmegaPoint) -> f64 + Sync,
{
    let terms: Vec<f64> = rule
        .nodes
        .par_iter()
        .map(|n| n.eps as f64 * f(&n.y))
        .collect();
    rule.prefactor * sum(terms)
}

/// `prefactor * sum_j eps_j g(x_j)` for `g` given on `F` in alpha^vee-coordinates.
pub fn integrate_pullback<G>(rule: &CubatureRule, g: G) -> f64
where
    G: Fn(&[f64]) -> f64 + Sync,
{
    let terms: Vec<f64> = rule
        .nodes
        .par_iter()
        .map(|n| n.eps as f64 * g(&n.alpha))
        .collect();
    rule.prefactor * sum(terms)
}

pub fn integrate_pullback_complex<G>(rule: &CubatureRule, g: G) -> Complex64
where
    G: Fn(&[f64]) -> Complex64 + Sync,
{
    let terms: Vec<Complex64> = rule
        .nodes
        .par_iter()
        .map(|n| g(&n.alpha) * n.eps as f64)
        .collect();
    sum_complex(terms) * rule.prefactor
}
