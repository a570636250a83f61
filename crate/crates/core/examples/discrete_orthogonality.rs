//! Weighted sums of C-functions over F_M vanish for every nonzero label of
//! m-degree below 2M, and the cubature rule matches the reference integral.

use weylcub::grids::build_grid;
use weylcub::liealg::{build_algebra, enumerate_dominant, AlgebraLabel, Weight};
use weylcub::orbitfuncs::discrete_sum;
use weylcub::verify::{exactness_defect, Fault};

fn main() -> weylcub::Result<()> {
    let m = 4;
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        let grid = build_grid(&d, m)?;
        let total = discrete_sum(&d, &Weight::zero(d.rank()), &grid)?;
        let worst = enumerate_dominant(&d, 2 * m - 1)
            .iter()
            .filter(|l| !l.is_zero())
            .map(|l| discrete_sum(&d, l, &grid).map(|s| s.norm()))
            .collect::<weylcub::Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        let exact = exactness_defect(&d, m, 128, Fault::None)?;
        println!(
            "{label} M={m}: |F_M| = {}, sum eps = {}, max |sum| over lambda != 0: {worst:.2e}, \
             cubature vs reference: {exact:.2e}",
            grid.len(),
            total.re
        );
    }
    Ok(())
}
