//! Integer and rational polynomials and the exact constructions built on them.

mod cyclotomic;
mod factor;
mod int_poly;
mod modp;
mod palindrome;
mod power;
mod rational;
mod resultant;

pub use cyclotomic::{
    cyclotomic, cyclotomic_candidates, cyclotomic_factors, cyclotomic_multiplicity,
    cyclotomic_product_test,
};
pub use factor::{factor_degrees_mod, factor_rational, is_irreducible, rational_roots};
pub use int_poly::IntPolynomial;
pub use modp::FpPoly;
pub use palindrome::{palindrome_expand, palindrome_reduce};
pub use power::{
    from_power_sums, from_power_sums_int, full_ratio_polynomial, pair_product_polynomial,
    polynomial_sqrt, power_map, power_sums, power_sums_monic, product_polynomial,
};
pub use rational::RationalPolynomial;
pub use resultant::{
    bareiss_determinant, discriminant, is_squarefree, resultant, squarefree_decomposition,
    squarefree_part,
};
