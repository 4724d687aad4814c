//! Hybridizable discontinuous Galerkin (HDG) solver for the 2D compressible
//! Navier-Stokes equations with characteristic boundary conditions.
//!
//! The crate is organized bottom-up:
//!
//! - [`thermo`]: nondimensional ideal-gas model, conservative/primitive
//!   conversions, convective and viscous fluxes.
//! - [`charalg`]: characteristic algebra of the Euler system on a facet frame
//!   (Jacobians, eigensystem, sign splittings, amplitude vectors, viscous
//!   quasi-linear terms).
//! - [`mesh`]: triangular meshes, structured generation, periodic pairing, and
//!   a plain-text interchange format.
//! - [`femcore`]: modal bases on triangles, nodal bases on facets, quadrature,
//!   and L2 projection.
//! - [`hdgsolver`]: the mixed HDG discretization, static condensation, Newton
//!   iteration, and implicit time stepping.
//! - [`bconds`]: boundary operators — walls, subsonic outflow, far-field, and
//!   the characteristic (relaxation-based) family.
//! - [`cases`]: benchmark case definitions, reference solutions, and
//!   reflection/force diagnostics, plus the time-stepping driver.

pub mod bconds;
pub mod cases;
pub mod charalg;
pub mod femcore;
pub mod hdgsolver;
pub mod linalg;
pub mod mesh;
pub mod thermo;
