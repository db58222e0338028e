//! Exact rational analysis of finite bases of l1^n.
//!
//! Everything a basis of l1^n can be asked quantitatively is answered here
//! without floating point: the optimal constants of equivalence to the
//! standard unit vector basis, the unconditional basis constant by
//! sign-pattern enumeration, perturbation radii with their two-sided
//! sandwich bounds, the minimal dominating radius under reindexing
//! (a bottleneck assignment), and certified inequality checks whose radical
//! sides are bracketed between exact rationals.
//!
//! Start with [`Basis`] and [`Basis::equivalence_constants`], or run one of
//! the examples:
//!
//! ```bash
//! cargo run --example analyze_basis
//! cargo run --example prop1_family
//! cargo run --example bottleneck_delta
//! ```
//!
//! The `l1basis` binary exposes the same operations as `analyze`,
//! `construct`, `verify`, and `search-c` subcommands over a plain-text basis
//! file format.

pub mod basis;
pub mod basis_file;
pub mod bottleneck;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod matrix;
pub mod perturbation;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod unconditional;
pub mod vector;

pub use basis::{Basis, DualSystem, EquivalenceConstants, DEFAULT_DIMENSION_CAP};
pub use basis_file::BasisFile;
pub use bottleneck::{min_dominating_delta, BottleneckResult};
pub use constructions::{
    fact2_check, interpolation_check, prop1_block, prop1_direct_sum, random_basis, thm2_check,
    Fact2Certificate, InterpolationCheck, Prop1Block, Prop1DirectSum, RandomMode, Thm2Certificate,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use perturbation::{
    bp_criterion, perturbation_radius, relative_equivalence_constants, sandwich_check, BpReport,
    PerturbationReport, SandwichCertificate,
};
pub use report::Report;
pub use roots::CertifiedValue;
pub use scalar::Scalar;
pub use unconditional::{
    unconditional_constant, unconditional_constant_with_cap, SignPattern, UnconditionalConstant,
    DEFAULT_SIGN_ENUMERATION_CAP,
};
pub use vector::{lp_norm, NormValue, PNorm, Vector};
