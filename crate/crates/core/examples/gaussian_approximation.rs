//! Cubature approximation v_M of the Gaussian bump on the C2 domain and its
//! L^2_K error, next to the optimal approximation u_M for small M.

use weylcub::approx::{coeffs_u, coeffs_v, error_l2k, gaussian_model, Target};
use weylcub::liealg::{build_algebra, AlgebraLabel};

fn main() -> weylcub::Result<()> {
    let d = build_algebra(AlgebraLabel::C2);
    let f = gaussian_model;
    let r = 256;
    for m in [5, 10, 20] {
        let v = coeffs_v(&d, m, Target::Omega(&f))?;
        let ev = error_l2k(&d, Target::Omega(&f), &v, r)?;
        let u = coeffs_u(&d, m, Target::Omega(&f), r)?;
        let eu = error_l2k(&d, Target::Omega(&f), &u, r)?;
        println!(
            "M={m:>2}: {} coefficients, error of v_M {ev:.6e}, error of u_M {eu:.6e}",
            v.len()
        );
    }
    Ok(())
}
