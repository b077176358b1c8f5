//! Closed-form tridiagonal models of the irreducible modules and the
//! eigenvalues of their tridiagonal matrices.
//!
//! cargo run --example models -- 7

use terwilliger::binary::Family;
use terwilliger::graph::eigenvalues_formula;
use terwilliger::terwilliger::halved_classes;

fn show(v: &[terwilliger::Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() {
    let d: usize = std::env::args().nth(1).map_or(7, |s| s.parse().expect("D must be an integer"));
    let thetas = eigenvalues_formula(d, Family::HalvedCube);
    println!("halved-cube eigenvalues: {}", show(&thetas));
    for (m, mult) in halved_classes(d) {
        println!("{} (multiplicity {mult}, dimension {})", m.label(), m.dimension());
        println!("  alpha  = [{}]", show(&m.alpha));
        println!("  beta   = [{}]", show(&m.beta));
        println!("  gamma  = [{}]", show(&m.gamma));
        println!("  theta* = [{}]", show(&m.theta_star));
        let eig = m.eigenvalues_among(&thetas).expect("spectrum inside the graph spectrum");
        println!("  eigenvalues of [A] = [{}]", show(&eig));
    }
}
