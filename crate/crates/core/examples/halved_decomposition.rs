//! Decomposition of the halved-cube standard module into the modules M_k and
//! N_k, obtained by restricting the hypercube modules.
//!
//! cargo run --example halved_decomposition -- 8 [base-vertex]

use terwilliger::binary::{BitVector, Family, GraphContext};
use terwilliger::terwilliger::decompose_halved;

fn main() -> terwilliger::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(8, |s| s.parse().expect("D must be an integer"));
    let base = match args.next() {
        Some(s) => BitVector::from_bit_string(&s)?.0,
        None => BitVector::ZERO,
    };
    let ctx = GraphContext::with_base(d, Family::HalvedCube, base)?;
    let report = decompose_halved(&ctx)?;
    println!("halved cube D={d}, base vertex {}", report.base_vertex);
    for m in &report.modules {
        let alpha: Vec<String> = m.model.alpha.iter().map(|x| x.to_string()).collect();
        println!("  {} x{} (dim {}), alpha = [{}]", m.label(), m.multiplicity, m.dimension, alpha.join(", "));
    }
    for c in &report.checks {
        println!("  {}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
    }
    Ok(())
}
