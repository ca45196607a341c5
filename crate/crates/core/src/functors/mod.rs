//! Homomorphisms, the pair and quotient functors, and the natural maps
//! between them.

pub mod hom;
pub mod inclusion;
pub mod natural;
pub mod quotient;

pub use hom::{check_hom, check_implication_hom, compose, functor_i_hom, identity, inverse};
pub use inclusion::{inclusion_collapse, upward_closed_subalgebras, InclusionReport};
pub use natural::{check_iota, iota, kappa, IotaReport, KappaReport};
pub use quotient::{functor_c_hom, quotient_c, Quotient};
