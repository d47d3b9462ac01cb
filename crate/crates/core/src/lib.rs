//! Parallel-in-time solver for 2D incompressible channel flow past a cylinder.
//!
//! The crate couples a serial fractional-step Navier-Stokes integrator on a
//! staggered Cartesian grid (with a stair-step cylinder mask) to the parareal
//! family of time-parallel iterations. Two variants are provided: classic
//! parareal, where coarse and fine propagators share one mesh and differ only
//! in time step, and a micro-macro variant where the coarse propagator runs
//! on a 2:1 nested coarser mesh and states move between levels through
//! restriction, lifting and a matching operator in full-approximation-scheme
//! form.
//!
//! All numerics are generic over the scalar type through [`Real`]; concrete
//! `f64` aliases for the main types live at the crate root.

pub mod diagnostics;
mod error;
pub mod grid;
pub mod pint;
pub mod solver;
pub mod transfer;
pub(crate) mod util;

pub use error::Error;

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};
use std::str::FromStr;

/// Scalar type the field arithmetic is generic over (`f32`, `f64`).
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + fmt::Display
    + fmt::LowerExp
    + fmt::Debug
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: num_traits::Float
        + num_traits::FromPrimitive
        + num_traits::ToPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Sum
        + fmt::Display
        + fmt::LowerExp
        + fmt::Debug
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Convenient result alias for fallible solver operations.
pub type Result<T, E = Error> = std::result::Result<T, E>;

pub type Mesh64 = grid::Mesh<f64>;
pub type MeshConfig64 = grid::MeshConfig<f64>;
pub type MeshPair64 = grid::MeshPair<f64>;
pub type ScalarField64 = grid::ScalarField<f64>;
pub type State64 = grid::State<f64>;
pub type SolverParams64 = solver::SolverParams<f64>;
pub type Propagator64 = solver::Propagator<f64>;
pub type PintConfig64 = pint::PintConfig<f64>;
pub type PintReport64 = pint::PintReport<f64>;

pub type Mesh32 = grid::Mesh<f32>;
pub type State32 = grid::State<f32>;
