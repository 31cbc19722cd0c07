// Roots, ρ and reflections for the two families.

use howe::{pairing, reflect, RootSystem};

pub fn run_example() -> howe::Result<()> {
    let gl = RootSystem::gl(2, 2)?;
    println!("GL(2,2) rho = ({})", gl.rho());
    for r in gl.positive_noncompact_roots() {
        println!("  noncompact positive {r}: (rho)_alpha = {}", howe::weight::format_q(&pairing(gl.rho(), r.coords())?));
    }

    let sp = RootSystem::sp(3)?;
    println!("SP(3) rho = ({})", sp.rho());
    println!(
        "  {} roots, {} noncompact, simple: {:?}",
        sp.roots().len(),
        sp.noncompact_roots().count(),
        sp.simple_roots()
    );

    let image = reflect(&[1, 0, 0, -1], &[0, 1, 0, -1])?;
    println!("s_(e1-e4)(e2-e4) = ({image})");
    Ok(())
}

#[allow(dead_code)]
fn main() -> howe::Result<()> {
    run_example()
}
