//! Singular fibers, section heights and Néron–Severi data of `E_t`.

mod components;
mod height;
mod kodaira;
mod lattice;

pub use components::{component_of, local_contribution, Component};
pub use height::{height_pairing, HeightContext, HeightConvention, HeightMatrix};
pub use kodaira::{
    classify_fibers, components_excess, euler_total, weight, ComponentGroup, FiberType,
    KodairaFiber, PlaceOnBase,
};
pub use lattice::{det_ns, shioda_tate_rank};
