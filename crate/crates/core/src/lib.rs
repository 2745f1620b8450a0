//! A small relational engine with binary-numeral arithmetic, six relations
//! deciding divisibility by three, and the tooling to compare them by
//! speed on ground inputs and by the reach of their answer sequences.

pub mod arith;
pub mod div3;
pub mod expansion;
pub mod harness;
pub mod kanren;

pub use arith::{build_num, num_value, OlegNumeral};
pub use div3::{DfaState, ImplId, UnknownImpl};
pub use expansion::{all_solutions, reach, GroundSet, ReifiedBitList};
pub use harness::{Grid, ReachSample, SpeedSample};
pub use kanren::{run, run_star, solutions, Answer, Goal, Term};
