//! Integer `q`-series, the weight-3 eta quotient of level 48, its Hecke
//! eigenvalues and the characters of `Z[ω]` that produce them.

mod characters;
mod hecke;
mod qseries;

pub use characters::{
    chi2, lattice_sum, lattice_sum_with, normalize_pi, surface_ap_via_characters, ArgumentOrder,
    LatticeCandidate, LatticeCharacter, LatticeSumOutcome, NormalizedPi, SixthRoot, Variant,
};
pub use hecke::{alpha_from_beta, ap_closed_form, frobenius_alpha, hecke_expand, nebentypus};
pub use qseries::{eta_quotient, EtaQuotientSpec, QSeries};
