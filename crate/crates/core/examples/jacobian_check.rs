//! Compares the analytic Jacobian of X with central differences and checks
//! K(X(x)) = |S_rho(x)|^2 at a few points of F.

use weylcub::liealg::{build_algebra, AlgebraLabel, Weight};
use weylcub::orbitfuncs::eval_s;
use weylcub::verify::kronecker_point;
use weylcub::weyl::TorusPoint;
use weylcub::xmap::{eval_k, eval_x, jacobian_abs, numeric_jacobian_abs};

fn main() -> weylcub::Result<()> {
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        println!("{label}");
        for k in 0..4 {
            let x = TorusPoint::new(kronecker_point(k, d.rank()));
            let analytic = jacobian_abs(&d, &x);
            let numeric = numeric_jacobian_abs(&d, &x, 1e-4)?;
            let y = eval_x(&d, &x);
            let s = eval_s(&d, &Weight::rho(d.rank()), &x)?.norm_sqr();
            println!(
                "  x={:?}: |J| {analytic:.10} vs {numeric:.10}, K(X) {:.10} vs |S_rho|^2 {s:.10}",
                x.coords(),
                eval_k(label, &y)
            );
        }
    }
    Ok(())
}
