//! The four-qubit `G_abcd` family restricted to its FES members, and their
//! position on the `μ` circle.

use fes_ilo::classify::{canonical_four, FourQubitG};
use fes_ilo::fes_basis::{expand, psi_pq};
use fes_ilo::statevec::{fidelity, DEFAULT_TOL};
use fes_ilo::Result;
use num_complex::Complex64 as C64;

fn main() -> Result<()> {
    println!("{:>6} {:>10} {:>28}", "phi", "mu", "(c40, c22, c04)");
    for i in 0..8 {
        let phi = i as f64 * std::f64::consts::PI / 8.0;
        let (a, d) = (C64::new(phi.cos(), 0.0), C64::new(phi.sin(), 0.0));
        let g = FourQubitG::fes(a, d);
        let Some(mu) = g.mu() else {
            println!("{phi:>6.3} {:>10} (a + d = 0)", "-");
            continue;
        };
        let state = g.build()?.normalized()?;
        let v = expand(&state, DEFAULT_TOL)?.phase_fixed();
        let check = state.phase_distance(&canonical_four(mu))?;
        assert!(check < 1e-10);
        let c: Vec<String> = v.coeffs().iter().map(|c| format!("{:+.4}", c.re)).collect();
        println!("{phi:>6.3} {:>10.4} {:>28}", mu.re, c.join(", "));
    }

    // psi_22 lies on the family at d = 2a, b = a - d.
    let one = C64::new(1.0, 0.0);
    let psi22 = psi_pq(2, 2)?;
    let on_family = FourQubitG::fes(one, 2.0 * one).build()?.normalized()?;
    println!(
        "\n|<G_(1,-1,0,2)|psi_22>|^2 = {:.12}",
        fidelity(&on_family, &psi22)?
    );
    let other = FourQubitG::new(C64::new(0.0, 0.0), -one, C64::new(0.0, 0.0), one)
        .build()?
        .normalized()?;
    println!(
        "|<G_(0,-1,0,1)|psi_22>|^2 = {:.12}",
        fidelity(&other, &psi22)?
    );
    Ok(())
}
