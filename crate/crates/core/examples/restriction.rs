//! The halved cube inside the hypercube: its adjacency, idempotents and
//! dual adjacency matrix are restrictions of hypercube matrices to the
//! even-weight words.
//!
//! cargo run --example restriction -- 7

use terwilliger::binary::BitVector;
use terwilliger::graph::{check_adjacency_restriction, check_dual_adjacency_restriction, check_idempotent_folding};

fn main() -> terwilliger::Result<()> {
    let d: usize = std::env::args().nth(1).map_or(7, |s| s.parse().expect("D must be an integer"));
    check_adjacency_restriction(d)?;
    println!("A = A_2 restricted to the even words");
    check_idempotent_folding(d)?;
    println!("E_i = (E_i + E_(D-i)) restricted to the even words");
    let astar = check_dual_adjacency_restriction(d, BitVector::ZERO)?;
    let diag: Vec<String> = astar.entries().iter().take(8).map(|x| x.to_string()).collect();
    println!("A* = hypercube A* restricted; first entries {}", diag.join(" "));
    Ok(())
}
