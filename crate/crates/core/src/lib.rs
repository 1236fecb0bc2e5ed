#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bar;
pub mod chain;
pub mod complexes;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod representations;
pub mod ring;

pub use algebra::{AlgebraElement, IdealBasis};
pub use chain::ChainComplex;
pub use diagram::{BrauerDiagram, CompositionResult, DiagramStats, Generator};
pub use error::{Error, Result};
pub use homology::HomologyGroup;
pub use representations::{BoxDiagram, ModuleElement};
pub use ring::{Ring, RingElem, RingKind};
