use std::fmt;

use num_traits::Signed;

use super::matrix::RationalMatrix;
use super::rational::{dot, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Maximize,
    Minimize,
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sense::Maximize => "max",
            Sense::Minimize => "min",
        })
    }
}

/// An LP in one of the two canonical forms, with `x >= 0` implicit:
///
/// * `Maximize`: `max objᵀx  s.t.  A x <= rhs`
/// * `Minimize`: `min objᵀx  s.t.  A x >= rhs`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearProgram {
    sense: Sense,
    objective: Vec<Rational>,
    matrix: RationalMatrix,
    rhs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { solution, .. } => Some(solution),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            LpOutcome::Optimal { .. } => "optimal",
            LpOutcome::Infeasible => "infeasible",
            LpOutcome::Unbounded => "unbounded",
        }
    }
}

impl LinearProgram {
    pub fn new(
        sense: Sense,
        objective: Vec<Rational>,
        matrix: RationalMatrix,
        rhs: Vec<Rational>,
    ) -> Result<Self> {
        if objective.len() != matrix.cols() || rhs.len() != matrix.rows() {
            return Err(Error::DimensionMismatch(format!(
                "objective {} / rhs {} against a {}x{} matrix",
                objective.len(),
                rhs.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearProgram {
            sense,
            objective,
            matrix,
            rhs,
        })
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.rhs.len()
    }

    /// `max{c, A, b}` maps to `min{b, Aᵀ, c}` and back, so the double dual is the
    /// identity field for field.
    pub fn dual(&self) -> LinearProgram {
        LinearProgram {
            sense: match self.sense {
                Sense::Maximize => Sense::Minimize,
                Sense::Minimize => Sense::Maximize,
            },
            objective: self.rhs.clone(),
            matrix: self.matrix.transpose(),
            rhs: self.objective.clone(),
        }
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        dot(&self.objective, x)
    }

    /// Exact feasibility test of `x` under the sense's reading convention.
    pub fn check_feasible(&self, x: &[Rational]) -> Result<bool> {
        let ax = self.matrix.mul_vec(x)?;
        if x.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        Ok(match self.sense {
            Sense::Maximize => ax.iter().zip(&self.rhs).all(|(l, r)| l <= r),
            Sense::Minimize => ax.iter().zip(&self.rhs).all(|(l, r)| l >= r),
        })
    }

    pub fn is_integral(&self) -> bool {
        self.objective
            .iter()
            .chain(self.matrix.entries())
            .chain(&self.rhs)
            .all(|q| q.is_integer())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlp::rational::{rat, ratio};

    fn unit_max() -> LinearProgram {
        let a = RationalMatrix::from_rows(vec![vec![rat(1)]]).unwrap();
        LinearProgram::new(Sense::Maximize, vec![rat(1)], a, vec![rat(1)]).unwrap()
    }

    #[test]
    fn feasibility() {
        let lp = unit_max();
        assert!(lp.check_feasible(&[rat(1)]).unwrap());
        assert!(!lp.check_feasible(&[rat(2)]).unwrap());
        assert!(!lp.check_feasible(&[ratio(-1, 2)]).unwrap());
        assert!(lp.check_feasible(&[rat(1), rat(1)]).is_err());
    }

    #[test]
    fn double_dual_is_identity() {
        let a = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(-3)],
            vec![ratio(1, 2), rat(0), rat(4)],
        ])
        .unwrap();
        let lp = LinearProgram::new(Sense::Minimize, vec![rat(1), rat(2), rat(3)], a, vec![rat(5), rat(6)])
            .unwrap();
        let d = lp.dual();
        assert_eq!(d.sense(), Sense::Maximize);
        assert_eq!(d.objective(), lp.rhs());
        assert_eq!(d.matrix(), &lp.matrix().transpose());
        assert_eq!(d.dual(), lp);
    }

    #[test]
    fn dimension_checks() {
        let a = RationalMatrix::zeros(2, 3);
        assert!(LinearProgram::new(Sense::Maximize, vec![rat(0); 2], a.clone(), vec![rat(0); 2]).is_err());
        assert!(LinearProgram::new(Sense::Maximize, vec![rat(0); 3], a, vec![rat(0); 3]).is_err());
    }
}
