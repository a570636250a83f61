//! Cubature estimates of the area of Omega, i.e. the integral of K^{1/2}
//! against the weight K^{-1/2}, converging to 2 pi, 32/3 and 128/15.

use weylcub::cubature::{build_rule, integrate};
use weylcub::liealg::build_algebra;
use weylcub::tables::{COLUMNS, EXACT_AREAS, TABLE3_M};
use weylcub::xmap::sqrt_k;

fn main() -> weylcub::Result<()> {
    for (label, exact) in COLUMNS.into_iter().zip(EXACT_AREAS) {
        let d = build_algebra(label);
        print!("{label}:");
        for m in TABLE3_M {
            let rule = build_rule(&d, m)?;
            let v = integrate(&rule, |y| sqrt_k(label, y));
            print!("  M={m}: {v:.6}");
        }
        println!("  (exact {exact:.6})");
    }
    Ok(())
}
