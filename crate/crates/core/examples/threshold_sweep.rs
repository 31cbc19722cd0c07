// Sweeping every admissible σ at and below the threshold ranks.

use howe::survey::{sweep_sp, sweep_u, EpsFilter};

pub fn run_example() -> howe::Result<()> {
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let p = m + n - 1;
        let r = sweep_u(m, n, p, 3)?;
        println!("U  m={m} n={n} p={p}: {} sigmas, {}", r.total, r.summary_line());
    }
    for p in 1..=3 {
        let n = 2 * p - 1;
        let r = sweep_sp(n, p, 3, EpsFilter::Both)?;
        println!("Sp n={n} p={p}: {} sigmas, {}", r.total, r.summary_line());
    }

    let below = sweep_sp(1, 2, 2, EpsFilter::Both)?;
    println!("Sp n=1 p=2: {:?}", below.histogram);
    for c in &below.counterexamples {
        println!("  {}  tau=({})  alpha={:?}  value={}", c.sigma, c.tau, c.alpha, howe::weight::format_q(&c.value));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
