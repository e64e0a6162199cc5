//! Exact enumeration of Berge equilibria (in the sense of Zhukovskii) for
//! n-person games in which every player has two pure strategies.
//!
//! The search covers pure profiles (zero disappointment), completely mixed
//! profiles (per-player systems of affine equalities) and mixed-type
//! profiles (a pure subprofile for some players, completely mixed strategies
//! for the rest). All arithmetic is exact rational arithmetic.
//!
//! ```
//! use berge::{all_berge, fixtures, verify_berge, MixedProfile, rational::ratio};
//!
//! let game = fixtures::unique_mixed();
//! let report = all_berge(&game);
//! let point = MixedProfile::new(vec![ratio(1, 2), ratio(1, 3), ratio(3, 5)]).unwrap();
//! assert!(report.contains(&point));
//! assert!(verify_berge(&game, &point).unwrap());
//! ```

pub mod error;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod linear;
pub mod mixed;
pub mod pure;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use format::{emit_game, emit_report, parse_game, parse_game_with_limit, ReportFormat};
pub use game::{index_to_profile, profile_index, Game, MixedProfile, PureProfile};
pub use linear::{intersect, solve_all_equal, solve_ge, Interval, LinearFn, SolutionSet};
pub use mixed::{
    all_berge, enumerate_partitions, fully_mixed_berge, mixed_type_berge, player_system,
    step1_candidates, step2_subequilibria, step3_refine, BergeReport, Diagnostics, EquilibriumBox,
    Partition, PartitionDiagnostic, PartitionOutcome, PlayerConstraint, Source,
};
pub use pure::{
    disappointment, disappointment_matrix, pure_berge, pure_nash, swap_payoffs, DisappointmentTable,
};
pub use rational::Rational;
pub use verify::{boxes_contain, grid_oracle, verify_berge};
