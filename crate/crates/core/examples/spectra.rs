//! Eigenvalues, multiplicities, intersection numbers and dual intersection
//! numbers of both graphs.
//!
//! cargo run --example spectra -- 6

use terwilliger::binary::{Family, GraphContext};
use terwilliger::graph::{intersection_numbers, primitive_idempotents, q_polynomial_check};

fn main() -> terwilliger::Result<()> {
    let d: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("D must be an integer"));
    for family in [Family::Hypercube, Family::HalvedCube] {
        let ctx = GraphContext::new(d, family)?;
        let spectral = primitive_idempotents(&ctx)?;
        let arr = intersection_numbers(&ctx)?;
        let dual = q_polynomial_check(&ctx, &spectral)?;
        println!("{family} D={d}: {} vertices, valency {}", ctx.vertex_count(), ctx.valency());
        for i in 0..=ctx.diameter() {
            println!(
                "  i={i}: theta={:>4} mult={:>4}  a={:>3} b={:>3} c={:>3}  a*={:>3} b*={:>3} c*={:>3}",
                spectral.eigenvalues[i].to_string(),
                spectral.multiplicities[i],
                arr.a[i],
                arr.b[i],
                arr.c[i],
                dual.a_star[i].to_string(),
                dual.b_star[i].to_string(),
                dual.c_star[i].to_string()
            );
        }
    }
    Ok(())
}
