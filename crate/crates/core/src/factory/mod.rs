//! Chebyshev curves built by the Heron recursion, with their gate data,
//! integer triples and parameter recovery.

mod cache;
mod curve;
mod gates;
mod schedule;
mod triples;

pub use cache::{load_cache, parse_cache, render_cache, save_cache, CacheLoad};
pub use curve::{
    annihilates, build_curve, compose_with_param, measure_profile, on_curve, predict_step,
    CurveFactory, CurveRecord, Profile, StepReport,
};
pub use gates::{gate_table, passage_code, GateMultiplicities, PassageCode, PassageEvent};
pub use schedule::{heron_exponents, schedule, ScheduleStep, StepOp};
pub use triples::{
    enumerate_params, oppenheim_triples, recover_parameter, GateHit, ParamSource, Triple,
    TripleReport,
};
