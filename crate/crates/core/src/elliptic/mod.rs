//! Elliptic curves over function fields and the explicit maps around them.

mod curve;
mod quotient;
mod sections;
mod surface;

pub use curve::{FunctionFieldCurve, Point, RationalFunctionPoint, WeierstrassCurve};
pub use quotient::{
    pagliani_graph, quotient_psi_residual, verify_pagliani_graph, verify_quotient_psi,
    FunctionFieldC, GenusTwo, GraphOutcome, GraphVariant, PsiVariant,
};
pub use sections::{
    base_change_t_u3, omega_sigma1, push_to_e_t, section_to_xyz, section_to_xyz_u, sigma1,
    sigma1_prime, tau, xyz_residual,
};
pub use surface::{
    inose_residuals, lines, quartic, verify_inose_and_eps2, verify_lines_and_singular_points,
    InoseOptions, LinesReport,
};
