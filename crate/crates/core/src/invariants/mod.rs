pub mod alexander;
pub mod goeritz;
pub mod jones;
pub mod moves;
pub mod poly;
pub mod triviality;

pub use alexander::alexander;
pub use goeritz::determinant;
pub use jones::{jones, jones_with_cap, DEFAULT_JONES_CAP};
pub use moves::Move;
pub use poly::LaurentPoly;
pub use triviality::{is_trivial, Budget, TrivialityVerdict, Witness};
