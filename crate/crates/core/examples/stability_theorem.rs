//! Approach an entangled boundary state and watch the success probability
//! vanish while the fidelity goes to one.

use fes_ilo::classify::{
    classify, default_eps_grid, named_state, stability_sweep, NamedState, DEFAULT_SUPPORT_TOL,
};
use fes_ilo::fes_basis::expand;
use fes_ilo::statevec::DEFAULT_TOL;
use fes_ilo::{FPolicy, FesVector, Result};

fn main() -> Result<()> {
    let ghz = expand(&named_state(NamedState::Ghz, 3)?, DEFAULT_TOL)?;
    let report = classify(&ghz, DEFAULT_SUPPORT_TOL);
    let target = report.endpoint_minus;
    println!("GHZ3 -> psi_{target} as t -> -1");
    println!(
        "{:>10} {:>12} {:>12} {:>12} {:>12}",
        "eps", "1-F", "eps^4/48", "P", "3eps^2/16"
    );
    for s in stability_sweep(&ghz, target, &default_eps_grid(), FPolicy::PovmMax)?
        .iter()
        .step_by(5)
    {
        let e = s.epsilon;
        println!(
            "{e:>10.1e} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}",
            s.infidelity,
            e.powi(4) / 48.0,
            s.probability,
            3.0 * e * e / 16.0
        );
    }

    // A five-qubit state with full support heads to psi_14.
    let v = FesVector::from_real(5, &[0.3, 0.5, 0.81])?.normalized()?;
    let report = classify(&v, DEFAULT_SUPPORT_TOL);
    println!(
        "\nn = 5, boundaries reachable only in the limit: {:?}",
        report
            .reachable_boundaries
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
    );
    for s in stability_sweep(
        &v,
        report.endpoint_minus,
        &[1e-1, 1e-2, 1e-3, 1e-4],
        FPolicy::PovmMax,
    )? {
        println!(
            "  eps {:.0e}: 1-F {:.3e}, P {:.3e}",
            s.epsilon, s.infidelity, s.probability
        );
    }
    Ok(())
}
