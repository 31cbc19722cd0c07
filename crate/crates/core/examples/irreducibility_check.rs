// Deciding irreducibility of N(λ), with the witness trace.

use howe::jantzen::verify_witness;
use howe::{check_irreducible, RootSystem, Weight};

pub fn run_example() -> howe::Result<()> {
    let gl = RootSystem::gl(2, 2)?;
    for lambda in [[-2, -3, 3, 2], [-1, -2, 2, 1]] {
        let lambda = Weight::from_ints(&lambda);
        let v = check_irreducible(&gl, &lambda)?;
        println!("GL(2,2) lambda = ({lambda}): {}", v.status);
        for w in &v.witnesses {
            println!("  {w}  (re-verified: {})", verify_witness(&gl, &lambda, w));
        }
    }

    // integral positive pairing rescued by a compact reflection
    let gl12 = RootSystem::gl(1, 2)?;
    let lambda = Weight::from_ints(&[0, 0, 2]);
    let v = check_irreducible(&gl12, &lambda)?;
    println!("GL(1,2) lambda = ({lambda}): {}", v.status);
    for w in &v.witnesses {
        println!("  {w}");
    }

    let sp = RootSystem::sp(2)?;
    let lambda: Weight = "-3/2, -7/2".parse()?;
    println!("SP(2) lambda = ({lambda}): {}", check_irreducible(&sp, &lambda)?.status);
    let lambda = Weight::from_ints(&[0, 0]);
    println!("SP(2) lambda = ({lambda}): {}", check_irreducible(&sp, &lambda)?.status);
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
