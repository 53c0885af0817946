//! Executable checks: golden reproductions of the worked examples, the
//! point-configuration comparison of `ir(I)` and `ir(I*)`, and seeded
//! randomized suites.

mod oracle;
mod paper;
mod points;
mod random;

pub use oracle::{groebner_sound, macaulay_membership};
pub use paper::{reproduce_paper_examples, CheckRecord, PaperReport};
pub use points::{
    direction, ideal_of_points, line_ideal, theorem51_check, ComponentImage, PointConfiguration,
    StarComparisonReport,
};
pub use random::{
    graded_field_suite, groebner_membership_suite, main_theorem_suite, point_suite, run_all_suites,
    star_laws_suite, SuiteReport,
};
