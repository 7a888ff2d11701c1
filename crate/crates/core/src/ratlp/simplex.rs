//! Two-phase primal simplex over exact rationals with Bland's smallest-index
//! rule, which guarantees termination without perturbation.
//!
//! Both LP forms are first rewritten as `max c'x s.t. A'x <= b'` (a `Minimize`
//! program is negated). Every row gets a slack; rows with `b'_i < 0` are
//! multiplied by `-1` and receive an artificial variable, so the column layout
//! is `[originals | slacks | artificials | rhs]`.

use num_traits::{One, Signed, Zero};

use super::program::{LinearProgram, LpOutcome, Sense};
use super::rational::Rational;

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs of the current phase; the last entry is minus the
    /// objective value of the current basis.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
}

enum Step {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn width(&self) -> usize {
        self.obj.len() - 1
    }

    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width()]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let p = self.rows[r][e].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                *v /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[e].clone();
            if !f.is_zero() {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = e;
    }

    /// Installs `costs` (maximisation) as the objective row, priced out against
    /// the current basis.
    fn set_objective(&mut self, costs: &[Rational]) {
        let mut obj: Vec<Rational> = costs.to_vec();
        obj.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = obj[b].clone();
            if !cb.is_zero() {
                for (v, t) in obj.iter_mut().zip(&self.rows[i]) {
                    *v -= &cb * t;
                }
            }
        }
        self.obj = obj;
    }

    /// Runs Bland's rule to optimality over columns `< allowed`.
    fn optimize(&mut self, allowed: usize) -> Step {
        loop {
            let Some(e) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return Step::Unbounded,
            }
        }
    }
}

/// Solves `lp` exactly. The returned solution is the final basic feasible
/// solution reached by the deterministic pivot sequence.
pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars();
    let m = lp.num_constraints();
    let flip = lp.sense() == Sense::Minimize;
    let neg = |q: &Rational| if flip { -q } else { q.clone() };

    let needs_artificial: Vec<bool> = lp.rhs().iter().map(|b| neg(b).is_negative()).collect();
    let n_art = needs_artificial.iter().filter(|&&b| b).count();
    let first_artificial = n + m;
    let width = n + m + n_art;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_art = first_artificial;
    for i in 0..m {
        let mut row = vec![Rational::zero(); width + 1];
        let sign = if needs_artificial[i] { -Rational::one() } else { Rational::one() };
        for (j, a) in lp.matrix().row(i).iter().enumerate() {
            row[j] = &sign * neg(a);
        }
        row[n + i] = sign.clone();
        row[width] = &sign * neg(&lp.rhs()[i]);
        if needs_artificial[i] {
            row[next_art] = Rational::one();
            basis.push(next_art);
            next_art += 1;
        } else {
            basis.push(n + i);
        }
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: vec![Rational::zero(); width + 1],
        basis,
        first_artificial,
    };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(first_artificial) {
            *c = -Rational::one();
        }
        t.set_objective(&phase1);
        // Phase 1 is bounded above by zero, so it always ends optimal.
        let _ = t.optimize(width);
        if t.obj[width].is_positive() {
            // -obj[width] = -(sum of artificials) < 0
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis where possible; a row
        // with no non-artificial nonzero is redundant and is left alone.
        for r in 0..m {
            if t.basis[r] >= t.first_artificial {
                if let Some(j) = (0..t.first_artificial).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, j);
                }
            }
        }
    }

    let mut costs = vec![Rational::zero(); width];
    for (j, c) in lp.objective().iter().enumerate() {
        costs[j] = neg(c);
    }
    t.set_objective(&costs);
    match t.optimize(t.first_artificial) {
        Step::Unbounded => LpOutcome::Unbounded,
        Step::Optimal => {
            let mut solution = vec![Rational::zero(); n];
            for (i, &b) in t.basis.iter().enumerate() {
                if b < n {
                    solution[b] = t.rhs(i).clone();
                }
            }
            LpOutcome::Optimal {
                value: lp.objective_value(&solution),
                solution,
            }
        }
    }
}
