//! Decomposition of the hypercube standard module into the modules L_k,
//! with a lowest-weight vector and the tridiagonal model of each class.
//!
//! cargo run --example hypercube_modules -- 6

use terwilliger::binary::{Family, GraphContext};
use terwilliger::terwilliger::hypercube_report;

fn main() -> terwilliger::Result<()> {
    let d: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("D must be an integer"));
    let ctx = GraphContext::new(d, Family::Hypercube)?;
    let (report, instances) = hypercube_report(&ctx)?;
    for m in &report.modules {
        let first = instances.iter().find(|i| i.model.k == m.k).expect("each class occurs");
        let w0: Vec<String> = first.basis[0].coords.iter().map(|x| x.to_string()).collect();
        println!(
            "{} x{} (dim {}): gamma = {:?}",
            m.label(),
            m.multiplicity,
            m.dimension,
            m.model.gamma.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
        println!("    a lowest-weight vector on shell {}: [{}]", m.k, w0.join(" "));
    }
    println!("total {} of {}, combined rank {}", report.total_dimension, report.vertex_count, report.combined_rank);
    Ok(())
}
