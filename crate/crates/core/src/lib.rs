//! Partition-function estimation in the one-clean-qubit model.
//!
//! Estimates Z = Tr[e^{-βH}] for few-qubit Hamiltonians by simulating the
//! trace-estimation primitive of the one-clean-qubit (DQC1) model. Two
//! linear-combination-of-unitaries routes are implemented:
//!
//! * a Chebyshev expansion of e^{-βH} whose terms are powers of a
//!   qubitization walk operator built from a block encoding of H
//!   (Hamiltonians given as weighted sums of Pauli strings), and
//! * a discretized Hubbard-Stratonovich transform whose terms are
//!   evolutions under a gap-amplified Hamiltonian H' with (H')² acting
//!   as H on the zero-ancilla sector (Hamiltonians given as weighted
//!   sums of projectors).
//!
//! Both routes produce additive-error estimates; [`estimators::estimate_relative`]
//! wraps any additive estimator into a relative-error one by a geometric
//! threshold schedule. Everything is verified against an exact dense
//! eigendecomposition oracle at desk scale.

pub mod blockenc;
pub mod chebyshev;
pub mod densemath;
pub mod dqc1;
pub mod error;
pub mod estimators;
pub mod hamiltonian;
pub mod hst;
pub mod validate;

pub use densemath::DenseOperator;
pub use error::{Error, Result};
pub use hamiltonian::HamiltonianSpec;
