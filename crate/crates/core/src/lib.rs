//! Exact computation of first-cohomology jumping data for rank-one local
//! systems on spaces presented by a finite group presentation.

pub mod admissible;
pub mod charvar;
pub mod error;
pub mod exactnum;
pub mod fox;
pub mod laurent;
pub mod linalg;
pub mod resonance;

pub use admissible::{
    exp_lift_candidates, find_zero_lift, generic_dim_criterion, inequality_audit, is_admissible,
    AdmissibilityReport, GenericDimCriterion, InequalityAudit, LiftBox,
};
pub use charvar::{
    charvar_membership, component_dims, curve_h1_dim, generic_h1_dim_along, jumping_points_1d,
    rank_jump_points, symmetry_check, twisted_h0_dim, twisted_h1_dim, Character, CurveDescriptor,
    JumpPoint, JumpReport, MatrixJumpReport, SymmetryReport, TorusSpec,
};
pub use error::{Error, Result};
pub use exactnum::{Cyclo, Field, Rat, RootOfUnity};
pub use fox::{fox_derivative, Presentation, Word};
pub use laurent::{LaurentPoly, UniPoly};
pub use linalg::Matrix;
pub use resonance::{aomoto_h1_dim, cup_data, resonance_dim_ge, CupData, OneForm};
