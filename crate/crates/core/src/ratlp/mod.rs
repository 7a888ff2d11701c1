//! Exact rational linear algebra and a two-phase simplex solver.

mod format;
mod matrix;
mod program;
mod rational;
mod simplex;

pub use format::{format_lp, parse_lp};
pub(crate) use format::{content_lines, parse_count, parse_rationals};
pub use matrix::RationalMatrix;
pub use program::{LinearProgram, LpOutcome, Sense};
pub use rational::{approx_decimal, common_denominator, dot, parse_rational, rat, ratio, Rational};
pub use simplex::solve;

/// Free-function form of [`LinearProgram::dual`].
pub fn dual(lp: &LinearProgram) -> LinearProgram {
    lp.dual()
}

/// Free-function form of [`LinearProgram::check_feasible`].
pub fn check_feasible(lp: &LinearProgram, x: &[Rational]) -> crate::Result<bool> {
    lp.check_feasible(x)
}
