// Lowest and highest weights of θ(σ) for both compact dual pairs.

use howe::theta::{
    enumerate_sigma_o, enumerate_sigma_u, theta_o_lowest, theta_u_lowest, to_highest_gl, to_highest_sp,
};
use howe::{Epsilon, SignedWeight, UnitarySigma};

pub fn run_example() -> howe::Result<()> {
    let sigma = UnitarySigma::new(vec![1], vec![-1], 2, 2, 2)?;
    let low = theta_u_lowest(&sigma)?;
    let high = to_highest_gl(&low, 2, 2)?;
    println!("(U(2), U(2,2))  {sigma}: tau' = ({})  tau = ({})", low.display_blocks(2), high.display_blocks(2));

    let sigma = SignedWeight::new(vec![2], Epsilon::Minus, 3, 2)?;
    let low = theta_o_lowest(&sigma)?;
    println!("(O(3), Sp(4))   {sigma}: tau' = ({low})  tau = ({})", to_highest_sp(&low));

    // an inadmissible σ is rejected with the violated inequality
    if let Err(e) = UnitarySigma::new(vec![2, 1], vec![-1, -2], 2, 2, 2) {
        println!("rejected: {e}");
    }

    println!("U(1)xU(1,1), B=2:");
    for s in enumerate_sigma_u(1, 1, 1, 2) {
        println!("  {s} -> ({})", to_highest_gl(&theta_u_lowest(&s)?, 1, 1)?.display_blocks(1));
    }
    println!("O(2)xSp(2), B=1:");
    for s in enumerate_sigma_o(2, 1, 1) {
        println!("  {s} -> ({})", to_highest_sp(&theta_o_lowest(&s)?));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
