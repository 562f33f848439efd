//! Integer solutions of `m³ + … + (m+k-1)³ = l³` and of `xy(x²+y²-1) = z³`.

mod pagliani;
mod search;
mod solution;
mod symmetry;

pub use pagliani::{
    in_pagliani_family, pagliani, pagliani_identity_holds, pagliani_polynomials, pagliani_u_up_to,
};
pub use search::{search, search_with, SearchOptions, SearchReport, MAX_BOUND};
pub use solution::{cube_sum, mkl_to_xyz, xyz_to_mkl, SolutionMKL, SolutionXYZ};
pub use symmetry::{canonical_form, orbit, Generator, SymmetryElement};
