//! Node, coefficient and figure export.
//!
//! CSV and JSON node files hold one record per grid point. CSV floats are
//! written with 17 significant digits; JSON floats use the shortest
//! representation that round-trips exactly.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::approx::{ApproxCoeffs, ApproxEvaluator, ApproxScratch};
use crate::cubature::CubatureRule;
use crate::liealg::AlgebraData;
use crate::sum::CompensatedSum;
use crate::weyl::TorusPoint;
use crate::xmap::{boundary_curves, eval_x, OmegaPoint};
use crate::{exact, Result};

/// Column order of node CSV files.
pub const CSV_HEADER: [&str; 11] = [
    "algebra", "M", "s0", "s1", "s2", "a1", "a2", "y1", "y2", "eps", "weight",
];

/// Samples per boundary curve in SVG output.
pub const BOUNDARY_SAMPLES: usize = 512;

fn full(x: f64) -> String {
    format!("{x:.16e}")
}

fn cell<T>(v: Option<T>, f: impl Fn(T) -> String) -> String {
    v.map(f).unwrap_or_default()
}

/// Writes the rule as CSV. Rank-1 rules leave the second-coordinate columns empty.
pub fn write_nodes_csv<W: Write>(rule: &CubatureRule, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for n in &rule.nodes {
        let record = [
            rule.algebra.to_string(),
            rule.m.to_string(),
            n.index[0].to_string(),
            n.index[1].to_string(),
            cell(n.index.get(2), |s| s.to_string()),
            full(n.alpha[0]),
            cell(n.alpha.get(1).copied(), full),
            full(n.y.coords()[0]),
            cell(n.y.coords().get(1).copied(), full),
            n.eps.to_string(),
            full(n.weight),
        ];
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeRecord {
    pub index: Vec<i64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub eps: u64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodesFile {
    pub algebra: String,
    #[serde(rename = "M")]
    pub m: i64,
    pub prefactor: f64,
    pub nodes: Vec<NodeRecord>,
}

impl NodesFile {
    pub fn from_rule(rule: &CubatureRule) -> Self {
        Self {
            algebra: rule.algebra.to_string(),
            m: rule.m,
            prefactor: rule.prefactor,
            nodes: rule
                .nodes
                .iter()
                .map(|n| NodeRecord {
                    index: n.index.clone(),
                    x: n.alpha.clone(),
                    y: n.y.coords().to_vec(),
                    eps: n.eps,
                    weight: n.weight,
                })
                .collect(),
        }
    }

    /// `prefactor * sum_j eps_j f(y_j)`, summed in file order exactly as
    /// [`crate::cubature::integrate`] does.
    pub fn integrate(&self, f: impl Fn(&OmegaPoint) -> f64) -> f64 {
        let s: CompensatedSum = self
            .nodes
            .iter()
            .map(|n| n.eps as f64 * f(&OmegaPoint::new(n.y.clone())))
            .collect();
        self.prefactor * s.value()
    }
}

pub fn write_nodes_json<W: Write>(rule: &CubatureRule, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &NodesFile::from_rule(rule))?;
    writeln!(out)?;
    Ok(())
}

pub fn read_nodes_json<R: Read>(input: R) -> Result<NodesFile> {
    Ok(serde_json::from_reader(input)?)
}

/// Scatter plot of the nodes over the boundary of `Omega`.
///
/// The view box is the bounding box of the boundary with a 5% margin and the
/// vertical axis points up. Rank-1 rules are drawn on the line `y2 = 0`.
pub fn write_nodes_svg<W: Write>(data: &AlgebraData, rule: &CubatureRule, mut out: W) -> Result<()> {
    let curves = boundary_curves(data, BOUNDARY_SAMPLES);
    let planar = |p: &[f64]| (p[0], p.get(1).copied().unwrap_or(0.0));
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in curves.iter().flatten() {
        let (x, y) = planar(p.coords());
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let width = x1 - x0;
    let height = (y1 - y0).max(0.1 * width);
    let (cy, mx, my) = ((y0 + y1) / 2.0, 0.05 * width, 0.05 * height);
    let (vx, vy) = (x0 - mx, -(cy + height / 2.0) - my);
    let (vw, vh) = (width + 2.0 * mx, height + 2.0 * my);
    let radius = 0.005 * vw;
    let stroke = 0.002 * vw;

    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx} {vy} {vw} {vh}" width="800" height="{}">"#,
        (800.0 * vh / vw).round()
    )?;
    writeln!(out, "<title>{} nodes, M = {}</title>", rule.algebra, rule.m)?;
    for curve in &curves {
        let pts: Vec<String> = curve
            .iter()
            .map(|p| {
                let (x, y) = planar(p.coords());
                format!("{x},{}", -y)
            })
            .collect();
        writeln!(
            out,
            r#"<polyline fill="none" stroke="black" stroke-width="{stroke}" points="{}"/>"#,
            pts.join(" ")
        )?;
    }
    for n in &rule.nodes {
        let (x, y) = planar(n.y.coords());
        writeln!(
            out,
            r#"<circle cx="{x}" cy="{}" r="{radius}" fill="steelblue"/>"#,
            -y
        )?;
    }
    writeln!(out, "</svg>")?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct CoeffRecord {
    lambda: Vec<i64>,
    re: f64,
    im: f64,
}

#[derive(Debug, Serialize)]
struct CoeffFile {
    algebra: String,
    #[serde(rename = "M")]
    m: i64,
    error_l2k: Option<f64>,
    coeffs: Vec<CoeffRecord>,
}

pub fn write_coeffs_json<W: Write>(coeffs: &ApproxCoeffs, error: Option<f64>, mut out: W) -> Result<()> {
    let file = CoeffFile {
        algebra: coeffs.algebra.to_string(),
        m: coeffs.m,
        error_l2k: error,
        coeffs: coeffs
            .coeffs
            .iter()
            .map(|(l, v)| CoeffRecord {
                lambda: l.coords().to_vec(),
                re: v.re,
                im: v.im,
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut out, &file)?;
    writeln!(out)?;
    Ok(())
}

/// Samples `f` and the approximant on a regular lattice of `F` with `n`
/// subdivisions per edge, mapped to `Omega` by `X`.
pub fn write_approx_grid_csv<W: Write>(
    data: &AlgebraData,
    f: impl Fn(&OmegaPoint) -> f64,
    coeffs: &ApproxCoeffs,
    n: usize,
    out: W,
) -> Result<()> {
    let rank = data.rank();
    let marks = data.marks();
    let inv = data.cartan_inverse();
    let ev = ApproxEvaluator::new(data, coeffs);
    let mut scratch = ApproxScratch::default();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["a1", "a2", "y1", "y2", "f", "approx"])?;
    let mut lattice = Vec::new();
    if rank == 1 {
        lattice.extend((0..=n).map(|i| vec![i]));
    } else {
        for i in 0..=n {
            lattice.extend((0..=n - i).map(|j| vec![i, j]));
        }
    }
    for t in lattice {
        let u: Vec<f64> = t
            .iter()
            .zip(marks)
            .map(|(&ti, &m)| ti as f64 / (n as f64 * m as f64))
            .collect();
        let a: Vec<f64> = (0..rank)
            .map(|r| (0..rank).map(|i| exact::to_f64(inv[r][i]) * u[i]).sum())
            .collect();
        let y = eval_x(data, &TorusPoint::new(a.clone()));
        let record = [
            full(a[0]),
            cell(a.get(1).copied(), full),
            full(y.coords()[0]),
            cell(y.coords().get(1).copied(), full),
            full(f(&y)),
            full(ev.eval_real(&a, &mut scratch)),
        ];
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
