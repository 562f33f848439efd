//! Finite fields, brute-force point counts and the closed form `N(p, n)`.

mod count;
mod field;

pub use count::{
    a_pn, adjudicate, brute_count_elliptic, brute_count_surface, brute_count_surface_with,
    count_report, count_report_with, formula_count_surface, trace_alg, Convention,
    ConventionVerdict, CountReport, DEFAULT_BUDGET,
};
pub use field::{FiniteField, MAX_FIELD_ORDER};
