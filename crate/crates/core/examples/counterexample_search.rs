// Reducible τ outside the admissible range.

use howe::survey::find_counterexamples;

pub fn run_example() -> howe::Result<()> {
    for p in [2, 3] {
        let found = find_counterexamples(2, 2, p, 2)?;
        println!("m=n=2 p={p} B=2: {} reducible", found.len());
        for c in &found {
            println!("  tau=({})  {}", c.tau, c.witness);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
