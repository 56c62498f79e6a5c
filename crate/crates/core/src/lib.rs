//! Flip-and-exchange symmetric (FES) many-qubit states under invertible
//! local operations (ILOs).
//!
//! FES states are invariant under any exchange of qubits and under flipping
//! every qubit at once. They span a subspace of dimension `⌊n/2⌋ + 1`, and the
//! FES local operations `M(t) = f(t)[[1, t], [t, 1]]` act diagonally on the
//! basis `ψ_pq = H^{⊗n} S(n, p)`. This crate works in that reduced basis and
//! keeps a dense `2^n` engine alongside as the reference:
//!
//! - [`statevec`]: dense state vectors, `A^{⊗n}`, exchange and flip symmetry.
//! - [`fes_basis`]: Dicke states, `ψ_pq`, and conversion to [`FesVector`].
//! - [`ilo`]: `M(t)`, curve evolution and conversion probabilities.
//! - [`classify`]: class reports, stability sweeps, the four-qubit `G`
//!   family, closest product states and the odd/even correspondence.
//! - [`cli`]: the `fes-ilo` command-line front end.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run -p fes-ilo --example basis_construction
//! cargo run -p fes-ilo --example ghz3_curve
//! cargo run -p fes-ilo --example stability_theorem
//! cargo run -p fes-ilo --example four_qubit_family
//! cargo run -p fes-ilo --example classify_states
//! cargo run -p fes-ilo --example closest_product
//! cargo run -p fes-ilo --example odd_even
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod fes_basis;
pub mod ilo;
pub mod optimize;
pub mod statevec;

pub use error::{Error, Result};
pub use fes_basis::{BasisIndex, FesVector};
pub use ilo::{FPolicy, IloParams};
pub use statevec::{LocalOperator, StateVector};
