//! Abelian covers of the plane branched on a conic-line arrangement and
//! the divisor arithmetic on the blow-up behind their invariants.

pub mod character;
pub mod cover;
pub mod divisor;

pub use character::{check_cover_exists, is_prime, CharacterVector, CoverCertificate};
pub use cover::{
    bmy_slack, cover_canonical_square, cover_euler_characteristic, cover_report, euler_polynomial, miyaoka_slack,
    nine_k3_squared_closed_form, CoverReport,
};
pub use divisor::{
    canonical_coefficients, canonical_q_divisor, divisor_self_intersection, k2_effective_form, log_canonical_divisor,
    pair_with_component, BlownUpPoint, BlowupData, ComponentCoefficients, EffectiveForm, QDivisorClass,
};
