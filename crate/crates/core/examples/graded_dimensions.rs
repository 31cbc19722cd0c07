// Filtration dimensions and Weyl dimensions.

use howe::graded::{check_graded_dims_o, check_graded_dims_sp, sym_hilbert, weyl_dim, CompactGroup};
use howe::Weight;

pub fn run_example() -> howe::Result<()> {
    let o = check_graded_dims_o(2, 3, 3, 4)?;
    println!("O case m=2 n=3 dimE=3: equal = {}", o.equal);
    for r in &o.rows {
        println!("  t={} {} {}", r.degree, r.left, r.right);
    }

    let sp = check_graded_dims_sp(2, 1, 2, 4)?;
    println!("Sp case p=2 dimE=1 dimF=2: equal = {}", sp.equal);
    for r in &sp.rows {
        println!("  t={} {} {} {}", r.degree, r.left, r.right, r.third.as_deref().unwrap_or("-"));
    }

    println!("dim S^4(C^3) = {}", sym_hilbert(3, 4)?);
    println!("dim U(3)(2,1,0) = {}", weyl_dim(CompactGroup::Unitary, &Weight::from_ints(&[2, 1, 0]))?);
    println!(
        "dim O(4)(1,1) = {}",
        weyl_dim(CompactGroup::Orthogonal { n: 4 }, &Weight::from_ints(&[1, 1]))?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
