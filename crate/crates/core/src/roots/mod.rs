//! Certified complex root isolation and exact modulus comparisons.

mod aberth;
mod complex;
mod dyadic;
mod isolate;
mod modulus;

pub use complex::{ComplexBox, DComplex};
pub use dyadic::{Dyadic, Interval};
pub use isolate::{isolate_roots, refine_root, Refiner, RootSystem};
pub(crate) use modulus::{candidates_with, decide, dominant_class_with};
pub use modulus::{
    dominant_candidates, dominant_class, log2_norm_bound, modulus_compare, modulus_partition,
    modulus_sep_exponent, sep_exponent, separation_bound, ModulusClass, ModulusPartition,
};
