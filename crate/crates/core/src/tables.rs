//! Recomputation of the four reference tables.
//!
//! Tables 1 and 2 are combinatorial and carry a golden copy; Tables 3 and 4
//! are numerical and carry the published values for comparison.

use std::fmt::Write as _;

use num_rational::Rational64;

use crate::approx::{coeffs_v, error_l2k, gaussian_model, Target};
use crate::cubature::{build_rule, integrate};
use crate::liealg::{build_algebra, AlgebraData, AlgebraLabel, Weight};
use crate::weyl::{epsilon, stabilizer_order, TorusPoint};
use crate::xmap::sqrt_k;
use crate::{exact, Result};

/// Column order of Tables 1 to 3.
pub const COLUMNS: [AlgebraLabel; 3] = AlgebraLabel::RANK_TWO;

/// Densities of Table 3.
pub const TABLE3_M: [i64; 5] = [10, 20, 30, 50, 100];
/// Densities of Table 4.
pub const TABLE4_M: [i64; 3] = [10, 20, 30];
/// Reference subdivision used for Table 4.
pub const TABLE4_R: usize = 1024;

/// `h_lambda` by support pattern of `lambda`.
pub const GOLDEN_TABLE1: [(&str, [u64; 3]); 4] = [
    ("(0,0)", [6, 8, 12]),
    ("(*,0)", [2, 2, 2]),
    ("(0,*)", [2, 2, 2]),
    ("(*,*)", [1, 1, 1]),
];

/// `eps_j` by support pattern of `[s0, s1, s2]`.
pub const GOLDEN_TABLE2: [(&str, [u64; 3]); 7] = [
    ("[*,0,0]", [1, 1, 1]),
    ("[0,*,0]", [1, 2, 3]),
    ("[0,0,*]", [1, 1, 2]),
    ("[*,*,0]", [3, 4, 6]),
    ("[*,0,*]", [3, 4, 6]),
    ("[0,*,*]", [3, 4, 6]),
    ("[*,*,*]", [6, 8, 12]),
];

/// Published integrals of `1` over `Omega`, rows in [`COLUMNS`] order.
pub const PRINTED_TABLE3: [[f64; 5]; 3] = [
    [6.0751, 6.2314, 6.2602, 6.2749, 6.2811],
    [10.056, 10.5133, 10.5985, 10.6421, 10.6605],
    [7.4789, 8.2561, 8.4092, 8.4885, 8.5221],
];

/// Exact values of the Table 3 integrals: `2 pi`, `32/3`, `128/15`.
pub const EXACT_AREAS: [f64; 3] = [std::f64::consts::TAU, 32.0 / 3.0, 128.0 / 15.0];

/// Published L^2_K errors of the C2 Gaussian example.
pub const PRINTED_TABLE4: [f64; 3] = [0.0636842, 0.0035217, 0.0000636];

#[derive(Debug, Clone, PartialEq)]
pub struct PatternRow {
    pub pattern: String,
    pub values: Vec<u64>,
}

fn pattern_string(stars: &[bool], open: char, close: char) -> String {
    let body: Vec<&str> = stars.iter().map(|&s| if s { "*" } else { "0" }).collect();
    format!("{open}{}{close}", body.join(","))
}

/// Stabilizer orders of one representative per support pattern.
pub fn table1() -> Vec<PatternRow> {
    let datas: Vec<AlgebraData> = COLUMNS.iter().map(|&l| build_algebra(l)).collect();
    [[false, false], [true, false], [false, true], [true, true]]
        .iter()
        .map(|stars| {
            let lambda = Weight::new(stars.iter().map(|&s| s as i64).collect::<Vec<_>>());
            PatternRow {
                pattern: pattern_string(stars, '(', ')'),
                values: datas.iter().map(|d| stabilizer_order(d, &lambda)).collect(),
            }
        })
        .collect()
}

/// Orbit sizes `eps` of one grid point per support pattern of `[s0, s1, s2]`.
pub fn table2() -> Result<Vec<PatternRow>> {
    let datas: Vec<AlgebraData> = COLUMNS.iter().map(|&l| build_algebra(l)).collect();
    let patterns = [
        [true, false, false],
        [false, true, false],
        [false, false, true],
        [true, true, false],
        [true, false, true],
        [false, true, true],
        [true, true, true],
    ];
    patterns
        .iter()
        .map(|stars| {
            let s: Vec<i64> = stars.iter().map(|&b| b as i64).collect();
            let values = datas
                .iter()
                .map(|d| {
                    let marks = d.marks();
                    let m = s[0] + s[1] * marks[0] + s[2] * marks[1];
                    let u = [Rational64::new(s[1], m), Rational64::new(s[2], m)];
                    let a = exact::mul_vec(d.cartan_inverse(), &u);
                    epsilon(d, &TorusPoint::exact(a))
                })
                .collect::<Result<Vec<u64>>>()?;
            Ok(PatternRow {
                pattern: pattern_string(stars, '[', ']'),
                values,
            })
        })
        .collect()
}

/// Entries of a recomputed table that disagree with a golden copy.
pub fn golden_mismatches(computed: &[PatternRow], golden: &[(&str, [u64; 3])]) -> Vec<String> {
    let mut out = Vec::new();
    if computed.len() != golden.len() {
        out.push(format!(
            "row count {} differs from golden {}",
            computed.len(),
            golden.len()
        ));
    }
    for (row, (pattern, values)) in computed.iter().zip(golden) {
        if row.pattern != *pattern || row.values != values {
            out.push(format!(
                "{}: computed {:?}, golden {} {:?}",
                row.pattern, row.values, pattern, values
            ));
        }
    }
    out
}

/// `integrate(rule, K^{1/2})` for every algebra and density; rows in [`COLUMNS`] order.
pub fn table3() -> Result<Vec<Vec<f64>>> {
    COLUMNS
        .iter()
        .map(|&label| {
            let d = build_algebra(label);
            TABLE3_M
                .iter()
                .map(|&m| {
                    let rule = build_rule(&d, m)?;
                    Ok(integrate(&rule, |y| sqrt_k(label, y)))
                })
                .collect()
        })
        .collect()
}

/// L^2_K errors of `v_M` for the C2 Gaussian at the Table 4 densities.
pub fn table4(r: usize) -> Result<Vec<f64>> {
    let d = build_algebra(AlgebraLabel::C2);
    let f = gaussian_model;
    TABLE4_M
        .iter()
        .map(|&m| {
            let c = coeffs_v(&d, m, Target::Omega(&f))?;
            error_l2k(&d, Target::Omega(&f), &c, r)
        })
        .collect()
}

/// `x` with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn render(header: &[String], rows: &[Vec<String>]) -> String {
    let ncol = header.len();
    let mut width = vec![0; ncol];
    for r in std::iter::once(header).chain(rows.iter().map(|r| r.as_slice())) {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        padded.join(" | ")
    };
    let mut s = String::new();
    writeln!(s, "{}", line(header)).unwrap();
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(s, "{}", rule.join("-+-")).unwrap();
    for r in rows {
        writeln!(s, "{}", line(r)).unwrap();
    }
    s
}

fn pattern_table(title: &str, first: &str, rows: &[PatternRow]) -> String {
    let mut header = vec![first.to_string()];
    header.extend(COLUMNS.iter().map(|l| l.to_string()));
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![r.pattern.clone()];
            v.extend(r.values.iter().map(|x| x.to_string()));
            v
        })
        .collect();
    format!("{title}\n{}", render(&header, &body))
}

pub fn format_table1(rows: &[PatternRow]) -> String {
    pattern_table("Table 1: stabilizer orders h_lambda", "lambda", rows)
}

pub fn format_table2(rows: &[PatternRow]) -> String {
    pattern_table("Table 2: orbit sizes eps_j", "j", rows)
}

pub fn format_table3(values: &[Vec<f64>]) -> String {
    let mut header = vec!["M".to_string()];
    header.extend(TABLE3_M.iter().map(|m| m.to_string()));
    let body: Vec<Vec<String>> = COLUMNS
        .iter()
        .zip(values)
        .map(|(l, row)| {
            let mut v = vec![l.to_string()];
            v.extend(row.iter().map(|&x| sig6(x)));
            v
        })
        .collect();
    format!(
        "Table 3: cubature estimates of the area of Omega\n{}",
        render(&header, &body)
    )
}

pub fn format_table4(values: &[f64]) -> String {
    let mut header = vec!["M".to_string()];
    header.extend(TABLE4_M.iter().map(|m| m.to_string()));
    let mut row = vec!["L2_K error".to_string()];
    row.extend(values.iter().map(|&x| sig6(x)));
    format!(
        "Table 4: C2 Gaussian, int |f - v_M[f]|^2 K^(-1/2)\n{}",
        render(&header, &[row])
    )
}
