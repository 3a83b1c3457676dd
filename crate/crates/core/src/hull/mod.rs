//! The nonstandard hull of a metric space: halos of finite points of `*M`
//! with distance `st(*d)`, over a small registry of concrete spaces.

mod harness;
mod ops;
mod space;
mod spaces;

pub use harness::{check_proposition_a, check_theorem_b, probe_verdicts, Clause, HarnessReport, ProbeVerdict};
pub use ops::{extended_distance, hull_distance, in_closed_ball, in_galaxy, is_approachable, is_nearstandard};
pub use space::{parse_point, ExtendedPoint, HaloRef, HullError, MetricSpace, NearstandardVerdict, SpaceId, SpaceMeta};
pub use spaces::space;
