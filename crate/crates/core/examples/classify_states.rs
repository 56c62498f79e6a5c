//! Class reports for a few named and hand-built states.

use fes_ilo::classify::{classify, named_state, NamedState, DEFAULT_SUPPORT_TOL};
use fes_ilo::fes_basis::expand;
use fes_ilo::statevec::DEFAULT_TOL;
use fes_ilo::{FesVector, Result};

fn show(label: &str, v: &FesVector) {
    let r = classify(v, DEFAULT_SUPPORT_TOL);
    let support: Vec<String> = r.support.iter().map(|s| s.to_string()).collect();
    println!("{label}: n = {}, support [{}]", r.n, support.join(" "));
    if r.is_eigenstate {
        println!("  eigenstate, the curve is a single point");
        return;
    }
    println!(
        "  t -> +1: psi_{}   t -> -1: psi_{}",
        r.endpoint_plus, r.endpoint_minus
    );
    for nb in &r.neighbors {
        println!(
            "  neighbour psi_{} {:?} entangled={}",
            nb.index, nb.kind, nb.entangled
        );
    }
}

fn main() -> Result<()> {
    show(
        "GHZ3",
        &expand(&named_state(NamedState::Ghz, 3)?, DEFAULT_TOL)?,
    );
    show(
        "W (FES form)",
        &expand(&named_state(NamedState::WFes, 3)?, DEFAULT_TOL)?,
    );
    show(
        "GHZ4",
        &expand(&named_state(NamedState::Ghz, 4)?, DEFAULT_TOL)?,
    );
    show(
        "psi_60 + psi_42 + psi_06",
        &FesVector::from_real(6, &[1.0, 1.0, 0.0, 1.0])?.normalized()?,
    );
    show(
        "n = 7 uniform",
        &FesVector::from_real(7, &[1.0; 4])?.normalized()?,
    );
    Ok(())
}
