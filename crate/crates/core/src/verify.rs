//! Self-check suites run by `weylcub verify`.
//!
//! Sample points come from a Kronecker sequence, so the suites are
//! deterministic without a random number generator.

use std::fmt;

use num_complex::Complex64;

use crate::approx::{coeffs_v, Target};
use crate::cubature::{build_rule, integrate_pullback_complex};
use crate::grids::{build_grid, GridFM};
use crate::liealg::{build_algebra, enumerate_dominant, weight_in_mq, AlgebraData, AlgebraLabel};
use crate::orbitfuncs::{c_at, s_at, BankScratch, OrbitBank};
use crate::refquad::ref_integral_vec;
use crate::sum::CompensatedComplexSum;
use crate::tables::{
    golden_mismatches, table1, table2, table3, table4, EXACT_AREAS, GOLDEN_TABLE1, GOLDEN_TABLE2,
    PRINTED_TABLE3, PRINTED_TABLE4, TABLE4_R, sig6,
};
use crate::weyl::{TorusPoint, WeylGroup};
use crate::xmap::{eval_k, eval_x, jacobian_abs, jacobian_prefactor, numeric_jacobian_abs};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    fn max_m(self) -> i64 {
        match self {
            Level::Quick => 10,
            Level::Full => 30,
        }
    }

    fn subdivision(self) -> usize {
        match self {
            Level::Quick => 128,
            Level::Full => 512,
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level `{other}` (expected quick or full)")),
        }
    }
}

/// Deliberate defects for exercising the suites themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    None,
    /// Adds one to the orbit size of the last point of every grid.
    CorruptEpsilon,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

/// Point `k` of the Kronecker sequence in the unit square, in alpha^vee-coordinates.
pub fn kronecker_point(k: usize, rank: usize) -> Vec<f64> {
    const ALPHA: [f64; 2] = [0.754_877_666_246_692_7, 0.569_840_290_998_053_3];
    (0..rank)
        .map(|i| (0.5 + (k + 1) as f64 * ALPHA[i]).fract())
        .collect()
}

fn grid_with_fault(data: &AlgebraData, m: i64, fault: Fault) -> Result<GridFM> {
    let mut g = build_grid(data, m)?;
    if fault == Fault::CorruptEpsilon {
        if let Some(p) = g.points.last_mut() {
            p.eps += 1;
        }
    }
    Ok(g)
}

/// Largest deviation of `sum eps C_lambda` from `c M^n [lambda in MQ]`, relative
/// to `c M^n`, over every dominant `lambda` of m-degree at most `2M - 1`.
pub fn discrete_orthogonality_defect(data: &AlgebraData, m: i64, fault: Fault) -> Result<f64> {
    let grid = grid_with_fault(data, m, fault)?;
    let labels = enumerate_dominant(data, 2 * m - 1);
    let bank = OrbitBank::new(data, &labels);
    let mut sums = vec![CompensatedComplexSum::new(); labels.len()];
    let mut c = vec![Complex64::new(0.0, 0.0); labels.len()];
    let mut scratch = BankScratch::default();
    for p in &grid.points {
        bank.eval_into(&p.alpha_f64(), &mut c, &mut scratch);
        for (s, ck) in sums.iter_mut().zip(&c) {
            s.add(ck * p.eps as f64);
        }
    }
    let cmn = data.c() as f64 * (m as f64).powi(data.rank() as i32);
    Ok(labels
        .iter()
        .zip(&sums)
        .map(|(l, s)| {
            let want = if weight_in_mq(data, l, m) { cmn } else { 0.0 };
            (s.value() - want).norm() / cmn
        })
        .fold(0.0, f64::max))
}

/// Largest `|integrate_pullback(rule, C_lambda) - J int_F C_lambda|` over every
/// dominant `lambda` of m-degree at most `2M - 1`, with `J` the Jacobian
/// constant and the right side from the reference quadrature.
pub fn exactness_defect(data: &AlgebraData, m: i64, r: usize, fault: Fault) -> Result<f64> {
    let labels = enumerate_dominant(data, 2 * m - 1);
    let mut rule = build_rule(data, m)?;
    if fault == Fault::CorruptEpsilon {
        if let Some(n) = rule.nodes.last_mut() {
            n.eps += 1;
        }
    }
    let bank = OrbitBank::new(data, &labels);
    let n = labels.len();
    let reference = ref_integral_vec(
        data,
        2 * n,
        || (BankScratch::default(), vec![Complex64::new(0.0, 0.0); n]),
        |(scratch, c), a, out| {
            bank.eval_into(a, c, scratch);
            for (k, ck) in c.iter().enumerate() {
                out[2 * k] = ck.re;
                out[2 * k + 1] = ck.im;
            }
        },
        r,
    )?;
    let jac = jacobian_prefactor(data);
    let mut worst: f64 = 0.0;
    for (k, l) in labels.iter().enumerate() {
        let cub = integrate_pullback_complex(&rule, |a| c_at(data, l, a));
        let exact = Complex64::new(reference[2 * k].value, reference[2 * k + 1].value) * jac;
        worst = worst.max((cub - exact).norm());
    }
    Ok(worst)
}

/// Largest relative deviation of `K(X(x))` from `|S_rho(x)|^2` over `count` points.
pub fn k_identity_defect(data: &AlgebraData, count: usize) -> f64 {
    let group = WeylGroup::new(data);
    let rho = crate::liealg::Weight::rho(data.rank());
    (0..count)
        .map(|k| {
            let a = kronecker_point(k, data.rank());
            let s2 = s_at(data, &group, &rho, &a).norm_sqr();
            let kx = eval_k(data.label(), &eval_x(data, &TorusPoint::new(a)));
            // the scale of |S_rho|^2 is |W|^2; near walls compare against it
            (kx - s2).abs() / s2.max(1e-3 * (data.weyl_order() as f64).powi(2))
        })
        .fold(0.0, f64::max)
}

/// Largest relative deviation between analytic and finite-difference Jacobians
/// over `count` points, skipping points where `|S_rho|` is below 5% of its scale.
pub fn jacobian_defect(data: &AlgebraData, count: usize) -> Result<f64> {
    let scale = jacobian_prefactor(data) * data.weyl_order() as f64;
    let mut worst: f64 = 0.0;
    let mut used = 0;
    let mut k = 0;
    while used < count {
        let x = TorusPoint::new(kronecker_point(k, data.rank()));
        k += 1;
        let analytic = jacobian_abs(data, &x);
        if analytic < 0.05 * scale {
            continue;
        }
        let numeric = numeric_jacobian_abs(data, &x, 1e-4)?;
        worst = worst.max(((numeric - analytic) / analytic).abs());
        used += 1;
    }
    Ok(worst)
}

/// Smallest pairwise distance between the nodes of the rule of density `m`.
pub fn min_node_separation(data: &AlgebraData, m: i64) -> Result<f64> {
    let rule = build_rule(data, m)?;
    let mut pts: Vec<&[f64]> = rule.nodes.iter().map(|n| n.y.coords()).collect();
    pts.sort_by(|p, q| p[0].total_cmp(&q[0]));
    let dist = |p: &[f64], q: &[f64]| -> f64 {
        p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    };
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[j][0] - pts[i][0] >= best {
                break;
            }
            best = best.min(dist(pts[i], pts[j]));
        }
    }
    Ok(best)
}

/// Largest deviation of `coeffs_v` from `delta_{lambda mu}` for `f = C_mu`,
/// over every `mu` of m-degree at most `M - 1`.
pub fn coefficient_recovery_defect(data: &AlgebraData, m: i64) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for mu in enumerate_dominant(data, m - 1) {
        let g = |a: &[f64]| c_at(data, &mu, a);
        let c = coeffs_v(data, m, Target::Pullback(&g))?;
        for (l, v) in &c.coeffs {
            let want = if *l == mu { 1.0 } else { 0.0 };
            worst = worst.max((v - want).norm());
        }
    }
    Ok(worst)
}

pub fn run(level: Level) -> Result<Report> {
    run_with(level, Fault::None)
}

pub fn run_with(level: Level, fault: Fault) -> Result<Report> {
    let mut report = Report::default();
    let r = level.subdivision();

    let t1 = golden_mismatches(&table1(), &GOLDEN_TABLE1);
    report.push("table 1 golden", t1.is_empty(), format!("{} mismatches", t1.len()));
    let mut rows2 = table2()?;
    if fault == Fault::CorruptEpsilon {
        rows2[1].values[0] += 1;
    }
    let t2 = golden_mismatches(&rows2, &GOLDEN_TABLE2);
    report.push("table 2 golden", t2.is_empty(), format!("{} mismatches", t2.len()));

    let orth_max_m = match level {
        Level::Quick => 10,
        Level::Full => 20,
    };
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        let mut worst: f64 = 0.0;
        for m in 1..=orth_max_m {
            worst = worst.max(discrete_orthogonality_defect(&d, m, fault)?);
        }
        report.push(
            &format!("discrete orthogonality {label}, M <= {orth_max_m}"),
            worst <= 1e-9,
            format!("max relative defect {worst:.3e} (tol 1e-9)"),
        );
    }

    let exact_ms: &[i64] = match level {
        Level::Quick => &[3, 5],
        Level::Full => &[3, 5, 8],
    };
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        let mut worst: f64 = 0.0;
        for &m in exact_ms {
            worst = worst.max(exactness_defect(&d, m, r, fault)?);
        }
        report.push(
            &format!("cubature exactness {label}, M in {exact_ms:?}"),
            worst <= 1e-6,
            format!("max abs defect {worst:.3e} (tol 1e-6, R = {r})"),
        );
    }

    let samples = match level {
        Level::Quick => 200,
        Level::Full => 1000,
    };
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        let k = k_identity_defect(&d, samples);
        report.push(
            &format!("K(X(x)) = |S_rho(x)|^2 {label}"),
            k <= 1e-9,
            format!("max relative defect {k:.3e} over {samples} points (tol 1e-9)"),
        );
        let j = jacobian_defect(&d, samples / 10)?;
        report.push(
            &format!("Jacobian identity {label}"),
            j <= 1e-6,
            format!("max relative defect {j:.3e} (tol 1e-6)"),
        );
        let mut sep = f64::INFINITY;
        for m in 1..=level.max_m() {
            sep = sep.min(min_node_separation(&d, m)?);
        }
        report.push(
            &format!("node injectivity {label}, M <= {}", level.max_m()),
            sep > 1e-9,
            format!("min node separation {sep:.3e}"),
        );
        let rec = coefficient_recovery_defect(&d, 6)?;
        report.push(
            &format!("coefficient recovery {label}, M = 6"),
            rec <= 1e-8,
            format!("max defect {rec:.3e} (tol 1e-8)"),
        );
    }

    if level == Level::Full {
        let t3 = table3()?;
        let mut worst: f64 = 0.0;
        for (row, printed) in t3.iter().zip(PRINTED_TABLE3) {
            for (v, p) in row.iter().zip(printed) {
                worst = worst.max((v - p).abs());
            }
        }
        report.push(
            "table 3 vs printed",
            worst <= 5e-4,
            format!("max abs deviation {worst:.3e} (tol 5e-4)"),
        );
        let conv = t3
            .iter()
            .zip(EXACT_AREAS)
            .map(|(row, e)| (row[row.len() - 1] - e).abs())
            .fold(0.0, f64::max);
        report.push(
            "table 3 M = 100 vs exact areas",
            conv <= 3e-3,
            format!("max abs deviation {conv:.3e} (tol 3e-3)"),
        );
        let t4 = table4(TABLE4_R)?;
        let rel = t4
            .iter()
            .zip(PRINTED_TABLE4)
            .map(|(v, p)| ((v - p) / p).abs())
            .fold(0.0, f64::max);
        report.push(
            "table 4 vs printed",
            rel <= 0.05,
            format!(
                "computed [{}], max relative deviation {rel:.3} (tol 0.05)",
                t4.iter().map(|&v| sig6(v)).collect::<Vec<_>>().join(", ")
            ),
        );
    }
    Ok(report)
}
