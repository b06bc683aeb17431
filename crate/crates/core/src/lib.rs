//! Root-system combinatorics deciding when the Witt ring of a complex flag
//! variety `G/L_H` is an exterior algebra, and on generators of which degrees.

pub mod character;
pub mod conditions;
pub mod cone;
pub mod degrees;
pub mod error;
pub mod lattice;
pub mod root_datum;
pub mod tables;
pub mod weyl;

pub use character::{CharacterElement, TateClass};
pub use conditions::{ConditionStatus, ConditionVerdict};
pub use cone::FixedConeMonoid;
pub use degrees::{Provenance, RepType, WittPresentation, WittStatus};
pub use error::{Error, Result};
pub use root_datum::{build_root_datum, shared_root_datum, Family, Root, RootDatum, SimpleType, Weight};
pub use weyl::{Involution, SubsetMask, WeylElement};
