//! Integral lattices over cyclic groups and the rationality of fixed fields
//! of the cyclic shift on `k(x_0, ..., x_{p-1})`.
//!
//! * [`exactmat`]: exact integer matrices, Smith normal form, kernels.
//! * [`glattice`]: lattices over `C_n`, Tate cohomology, flabby resolutions.
//! * [`numfield`]: integer polynomials, factorization mod `p`, ramification.
//! * [`noether`]: the lattice `M` for a prime `p` and the classifier.
//! * [`symver`]: exponent-level re-derivation of the action on `M`.
//! * [`cli`]: the `noether` command-line front end.

pub mod cli;
pub mod exactmat;
pub mod glattice;
pub mod json;
pub mod noether;
pub mod numfield;
pub mod primes;
pub mod symver;

pub use exactmat::IntMatrix;
pub use glattice::{CyclicGroup, FlabbyResolution, PiLattice, Subgroup, TateGroup};
pub use noether::{classify, noether_lattice, Outcome, Verdict};
pub use numfield::{IntPolynomial, NumberFieldSpec};
