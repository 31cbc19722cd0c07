// Closed-form long-root and sum-root pairings for (O(n), Sp(2p)), checked
// against direct computation.

use howe::survey::{closed_form_sp_pairings, crosscheck_closed_form};
use howe::weight::format_q;
use howe::Epsilon;

pub fn run_example() -> howe::Result<()> {
    let table = closed_form_sp_pairings(5, 3, 2, &[2, 1], Epsilon::Minus)?;
    println!("n=5 p=3 a=(2,1) eps=-1");
    for e in table.entries() {
        println!("  {:?}: {}", e.root, format_q(&e.value));
    }

    let mut total = 0;
    for p in 1..=3 {
        for n in 1..=7 {
            let r = crosscheck_closed_form(n, p, 3)?;
            assert!(r.ok(), "{:?}", r.mismatches.first());
            total += r.entries;
        }
    }
    println!("{total} pairings agree with the tables");
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
