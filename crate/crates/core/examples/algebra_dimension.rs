//! Dimension of the Terwilliger algebra by closure of {A, A*}, against the
//! closed form and the sum of squared module dimensions.
//!
//! cargo run --release --example algebra_dimension -- 3 8

use terwilliger::binary::{Family, GraphContext};
use terwilliger::terwilliger::{algebra_dimension, classify_modules, decompose_halved};

fn main() -> terwilliger::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("D must be an integer"));
    let from = args.next().unwrap_or(3);
    let to = args.next().unwrap_or(from.max(6));
    for d in from..=to {
        let ctx = GraphContext::new(d, Family::HalvedCube)?;
        let classes = classify_modules(&decompose_halved(&ctx)?);
        let dim = algebra_dimension(&ctx, to, Some(&classes))?;
        println!("D={d}: closure {:?}, formula {}, sum of squares {:?}", dim.computed, dim.formula, dim.sum_of_squares);
    }
    Ok(())
}
