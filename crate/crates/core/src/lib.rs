//! Speciality of toric linear systems with base points at torus-fixed points.

pub mod divisor;
pub mod error;
pub mod fan;
pub mod fleet;
pub mod io;
pub mod lattice;
pub mod linsys;
pub mod render;
pub mod surface;

pub use divisor::{LatticePolytope, ToricDivisor};
pub use error::{Error, Result};
pub use fan::{Fan, Wall};
pub use lattice::LatticeVector;
pub use linsys::{LinearSystemSpec, SpecialityReport, Witness, WitnessMode};
pub use surface::{PicardClass, SurfaceKind, SurfaceModel};
