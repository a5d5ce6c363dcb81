//! Numerical laboratory for spherically symmetric self-gravitating
//! compressible gas dynamics under general barotropic pressure laws.
//!
//! The crate bundles:
//! - an equation-of-state toolkit with power-law tail control ([`eos`]),
//! - critical-mass calculators including the Lane-Emden limit ([`critical_mass`]),
//! - entropy machinery: a Goursat-constructed special entropy pair and the
//!   weak entropy kernel with its flux kernel ([`entropy`]),
//! - a Lagrangian free-boundary viscous solver with self-gravity ([`solver`]),
//! - estimate functionals and sweep harnesses probing viscosity and domain
//!   limits ([`diagnostics`]).

pub mod cli;
pub mod critical_mass;
pub mod diagnostics;
pub mod entropy;
pub mod eos;
pub mod interp;
pub mod quad;
pub mod solver;
