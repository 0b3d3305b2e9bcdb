//! Rank-2 Drinfeld `F_q[T]`-modules over finite fields.

mod dense;
mod linalg;
mod table;

pub mod census;
pub mod drinfeld;
pub mod endo;
pub mod error;
pub mod field;
pub mod ore;
pub mod poly;
pub mod report;
pub mod weil;

pub use drinfeld::{AField, CharPoly, DrinfeldModule};
pub use error::{Error, Result};
pub use field::{ArithKind, FieldCtx, FieldElem, Level};
pub use ore::{EvalField, OrePoly};
pub use poly::{APoly, PolyOp};
