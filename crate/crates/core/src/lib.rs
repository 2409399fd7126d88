//! Exact coordinate planes over division rings, the skew field built
//! geometrically on a line from a chosen zero and one, and dilations viewed
//! as isomorphisms between those line skew fields.
//!
//! Finite planes AG(2, GF(q)) are checked exhaustively; the plane over the
//! rational quaternions is checked by seeded sampling and is where the
//! Pappus statement and commutativity of the constructed product fail.

pub mod dilation;
pub mod error;
pub mod field;
pub mod incidence;
pub mod line_algebra;
pub mod report;
pub mod sampling;
pub mod witness;

pub use dilation::{DilationKind, DilationMap};
pub use error::{Error, Result};
pub use field::{DivisionRing, GaloisField, GfElem, Quaternion, Quaternions, RingContext, RingDescriptor};
pub use incidence::{Incidence, Intersection, Line, Plane, Point};
pub use line_algebra::{AuxPolicy, LineAlgebra};
pub use report::{Report, Status};
pub use sampling::{Mode, Sampling};
