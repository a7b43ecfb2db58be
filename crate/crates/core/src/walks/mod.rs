//! Lazy random walk: transition operator, stationary distribution, exact
//! mixing time, conductance bounds and a Monte Carlo estimator.

mod bounds;
mod empirical;
mod mixing;
mod operator;

pub use bounds::{mixing_bounds, MixingBounds};
pub use empirical::{empirical_mixing_estimate, EstimateStatus, MixingEstimate};
pub use mixing::{mixing_time_exact, worst_tv_trajectory, MixingTime, MIXING_GUARD, MIXING_STEP_CAP, MIXING_THRESHOLD};
pub use operator::{
    lazy_step, stationary, stationary_flow, tv_distance, Stationary, TransitionOperator, DENSE_MAX_N,
};
