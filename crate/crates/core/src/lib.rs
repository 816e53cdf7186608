//! Zeroth-order general Randić index of trees against the domination number.
//!
//! The crate computes `sum_v d_v^alpha` and the domination number of trees,
//! evaluates the sharp bounds that relate them in both exponent regimes,
//! builds and recognizes the extremal families, and certifies the bounds
//! exhaustively over all free trees of small order.

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod invariants;
pub mod numeric;
pub mod prufer;
pub mod tree;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use tree::{EdgeList, Tree};
