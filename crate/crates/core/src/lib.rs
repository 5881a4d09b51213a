//! Orbits, flat limits and standard fans of finite-colength monomial ideals in `K[[x,y]]`.

pub mod cli;
pub mod error;
pub mod fan;
pub mod kernel;
pub mod limits;
pub mod orbit;
pub mod segre3;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
