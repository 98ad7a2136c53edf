//! Structural predicates on characteristic polynomials.

mod circles;
mod degeneracy;
mod search;

pub use circles::{square_mean_relation, two_circle_analysis, RadiusRelation, TwoCircleReport};
pub use degeneracy::{
    degeneracy_test, degeneracy_witnesses, hypothesis_check, ratio_polynomial, DegeneracyWitness,
    HypothesisReport,
};
pub use search::{search_box, search_box_cancellable, PolynomialBox, SearchPredicate};
