//! Birational rowmotion on finite posets over (possibly noncommutative) rings,
//! evaluated with exact arithmetic.
//!
//! Labelings live on the extended poset `P̂ = {BOT} ⊕ P ⊕ {TOP}`. A toggle that
//! needs a missing inverse makes the whole labeling undefined, represented as
//! `None` throughout.
//!
//! ```
//! use ncrowmotion::{algebra::RingDescriptor, poset::{rectangle, ExtendedPoset}, rowmotion};
//!
//! let poset = ExtendedPoset::new(rectangle(2, 2).unwrap());
//! let ring = RingDescriptor::Matrix(2);
//! let f = rowmotion::Labeling::random(&poset, ring, 7, 9).unwrap();
//! let orbit = rowmotion::iterate(&poset, &f, 4);
//! assert!(orbit.get(4).is_some());
//! ```

pub mod algebra;
pub mod check;
pub mod cli;
pub mod poset;
pub mod rowmotion;
pub mod slacks;
pub mod verify;

pub use algebra::{PartialValue, RingDescriptor, RingElement};
pub use check::{Mismatch, Outcome};
pub use poset::{ExtendedPoset, Poset};
pub use rowmotion::{Labeling, Orbit};
