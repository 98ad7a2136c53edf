//! Linear recurrence sequences and the zero (Skolem) and positivity questions.

mod bound;
mod classify;
mod family;
mod loops;
mod report;
mod sequence;
mod sml;

pub use crate::cancel::CancelToken;
pub use bound::{
    dominant_root_bound, dominant_root_bound_with_cap, exp_poly_coeffs, positivity_check,
    positivity_check_with_cap, BoundVerdict, ExpPolyCoeffs, PositivityVerdict,
    DEFAULT_PRECISION_CAP,
};
pub use classify::{classify, ClassFlags, ClassificationReport, LrsClass};
pub use family::{family_generate, Family, FamilyMember};
pub use loops::{lrs_from_loop, LinearLoop};
pub use report::{skolem_analyze, SkolemMethod, SkolemReport};
pub use sequence::{
    evaluate, minimal_poly, zero_search, zero_search_cancellable, Backward, LrsSpec, ZeroSet,
};
pub use sml::{sml_decompose, SmlDecomposition};
