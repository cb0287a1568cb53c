//! Exact computations for quantum groups at roots of unity: root data,
//! affine Weyl alcoves, cyclotomic arithmetic, weight multiplicities,
//! truncated tensor products and modularity of the resulting category.

pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod modular;
pub mod rootdata;
pub mod weight;
pub mod weyl;

pub use characters::{CharacterCache, DominantCharacter};
pub use cyclotomic::{CycNum, CycRing};
pub use error::{Error, Result};
pub use fusion::{FusionEngine, FusionTable};
pub use modular::{ModularData, ModularityReport, TransparentObject, Verdict};
pub use num_complex::Complex64;
pub use rootdata::{
    build_root_system, build_root_system_with, BuildOptions, Constants, LieType, Root, RootSystem,
    Series,
};
pub use weight::Weight;
pub use weyl::{AlcoveContext, FoldResult};
