//! The polynomials v_i(t), their Krawtchouk form, and the distance matrices
//! they produce on the hypercube.
//!
//! cargo run --example krawtchouk -- 5

use terwilliger::binary::{Family, GraphContext};
use terwilliger::krawtchouk::{
    distance_matrix_identity_check, krawtchouk_eval, krawtchouk_identity_check, v_eval_identity_check, v_polys,
};
use terwilliger::Rational;

fn main() -> terwilliger::Result<()> {
    let d: usize = std::env::args().nth(1).map_or(5, |s| s.parse().expect("D must be an integer"));
    for (i, v) in v_polys(d).iter().enumerate() {
        println!("v_{i}(t) = {v}");
    }
    let t = Rational::from(3i64);
    println!("K_1(3; 2, {d}) = {}", krawtchouk_eval(1, &t, &Rational::from(2i64), d)?);
    println!("Krawtchouk form holds: {}", krawtchouk_identity_check(d)?);
    println!("v_(D-1)(D-2n) = (-1)^n (D-2n): {}", v_eval_identity_check(d));
    let cube = GraphContext::new(d, Family::Hypercube)?;
    println!("A_i = v_i(A) and A*_i = v_i(A*): {}", distance_matrix_identity_check(&cube)?);
    Ok(())
}
