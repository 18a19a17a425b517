//! Executable monads, distributive laws and distributive series of monads.
//!
//! The [`series`] engine is generic over a [`monad::Universe`]. Two universes
//! ship with the crate: terms over generator carriers ([`monad::Sets`], used by
//! the [`zoo`] of algebraic monads and the ring and rig normalizers) and cells
//! of finite globular sets ([`globular::Globs`], used to build the free strict
//! n-category monad from its composition monads).

pub mod error;
pub mod globular;
pub mod monad;
pub mod series;
pub mod term;
pub mod zoo;

pub use error::{Error, Result};
pub use monad::{CheckEntry, CheckReport, DistLaw, LawRef, Monad, MonadRef, Sets, Universe, Witness};
pub use series::{DistributiveSeries, Route};
pub use term::{Carrier, Constant, Sym, Term};
