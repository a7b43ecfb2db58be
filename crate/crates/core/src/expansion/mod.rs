//! Isoperimetric quantities: cut statistics, exact edge and vertex
//! expansion, expansion and conductance profiles, and sweep-cut upper bounds.

mod connected;
mod cut;
mod exact;
mod profile;
mod scan;
mod sweep;

pub use connected::connected_edge_expansion_exact;
pub use cut::{cut_stats, CutStats};
pub use exact::{edge_isoperimetric_exact, expansion_profile, vertex_isoperimetric_exact, Isoperimetric, ProfilePoint};
pub use profile::{
    band_count, conductance_exact, conductance_profile, Band, Conductance, ConductanceProfile, GlobalConductance,
    CONNECTED_ENUM_MAX_N,
};
pub(crate) use profile::in_band;
pub use scan::EXHAUSTIVE_MAX_N;
pub use sweep::{spectral_order, sweep_cut_upper_bound, SpectralOrder, SweepCut, SWEEP_MAX_ITERATIONS};
