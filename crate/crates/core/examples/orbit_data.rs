//! Root-system data, Weyl orbits and stabilizers for every supported algebra.

use weylcub::liealg::{build_algebra, enumerate_dominant, m_degree, AlgebraLabel, Weight};
use weylcub::weyl::{orbit, stabilizer_order};

fn main() {
    for label in AlgebraLabel::ALL {
        let d = build_algebra(label);
        println!("{label}: rank {}, |W| = {}, c = {}", d.rank(), d.weyl_order(), d.c());
        println!("  Cartan matrix {:?}", d.cartan());
        println!("  marks {:?}, dual marks {:?}", d.marks(), d.dual_marks());
        println!("  |F| = {:.6}, kappa = {}", d.vol_f(), d.kappa());
        let rho = Weight::rho(d.rank());
        let o = orbit(&d, &rho);
        let elems: Vec<String> = o.elements().iter().map(|w| w.to_string()).collect();
        println!("  orbit of rho ({} elements): {}", o.len(), elems.join(" "));
        let p3 = enumerate_dominant(&d, 3);
        let listing: Vec<String> = p3
            .iter()
            .map(|l| format!("{l}[deg {}, h {}]", m_degree(&d, l), stabilizer_order(&d, l)))
            .collect();
        println!("  P+_3: {}", listing.join(" "));
    }
}
