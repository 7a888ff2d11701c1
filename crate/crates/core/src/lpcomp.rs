//! LP complementation: the complement transform, the solution map between an
//! LP and its complement, the feasibility case analysis, the scaled integer
//! pair, and the complementary matrix game.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlp::{
    common_denominator, content_lines, parse_count, parse_rationals, solve, LinearProgram,
    LpOutcome, Rational, RationalMatrix, Sense,
};

/// `max{c, A, b}` becomes `min{c, b cᵀ - A, b}` and `min{v, M, u}` becomes
/// `max{v, u vᵀ - M, u}`. Objective and right-hand side carry over unchanged.
pub fn complement(lp: &LinearProgram) -> LinearProgram {
    let outer = RationalMatrix::outer(lp.rhs(), lp.objective());
    let matrix = outer
        .sub(lp.matrix())
        .expect("outer product has the constraint matrix's shape");
    let sense = match lp.sense() {
        Sense::Maximize => Sense::Minimize,
        Sense::Minimize => Sense::Maximize,
    };
    LinearProgram::new(sense, lp.objective().to_vec(), matrix, lp.rhs().to_vec())
        .expect("complement preserves dimensions")
}

/// Maps an optimal solution `x` of value `opt > 1` to `x / (opt - 1)`, which is
/// feasible for the complement with value `opt / (opt - 1)`.
pub fn complement_solution(x: &[Rational], opt: &Rational) -> Result<Vec<Rational>> {
    if *opt <= Rational::one() {
        return Err(Error::OptNotAboveOne(opt.to_string()));
    }
    let a = opt - Rational::one();
    Ok(x.iter().map(|xi| xi / &a).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementationCase {
    /// `Opt(P) > 1`; the complement is expected to exceed one as well.
    BothAboveOne,
    PBelowOrAtOne,
    PInfeasible,
    PUnbounded,
}

impl ComplementationCase {
    pub fn label(self) -> &'static str {
        match self {
            ComplementationCase::BothAboveOne => "both_above_one",
            ComplementationCase::PBelowOrAtOne => "p_below_or_at_one",
            ComplementationCase::PInfeasible => "p_infeasible",
            ComplementationCase::PUnbounded => "p_unbounded",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementationReport {
    pub opt_p: LpOutcome,
    pub opt_c: LpOutcome,
    pub case: ComplementationCase,
    /// `(Opt(P) > 1) == (Opt(C̄P) > 1)`, treating non-optimal outcomes as "not above one".
    pub above_one_agrees: bool,
    /// `1/Opt(P) + 1/Opt(C̄P)` when both optima exceed one.
    pub identity_lhs: Option<Rational>,
    /// Set only in the `BothAboveOne` case.
    pub identity_holds: Option<bool>,
    /// For a maximisation with `Opt(P) <= 1` and `rhs >= 0`: whether the
    /// complement is infeasible or unbounded.
    pub lemma_holds: Option<bool>,
}

fn above_one(out: &LpOutcome) -> Option<&Rational> {
    out.value().filter(|v| **v > Rational::one())
}

pub fn verify_complementation(lp: &LinearProgram) -> ComplementationReport {
    let opt_p = solve(lp);
    let opt_c = solve(&complement(lp));
    let case = match &opt_p {
        LpOutcome::Infeasible => ComplementationCase::PInfeasible,
        LpOutcome::Unbounded => ComplementationCase::PUnbounded,
        LpOutcome::Optimal { value, .. } if *value > Rational::one() => {
            ComplementationCase::BothAboveOne
        }
        LpOutcome::Optimal { .. } => ComplementationCase::PBelowOrAtOne,
    };
    let above_one_agrees = above_one(&opt_p).is_some() == above_one(&opt_c).is_some();
    let identity_lhs = match (above_one(&opt_p), above_one(&opt_c)) {
        (Some(p), Some(c)) => Some(p.recip() + c.recip()),
        _ => None,
    };
    let identity_holds = (case == ComplementationCase::BothAboveOne)
        .then(|| identity_lhs.as_ref().is_some_and(|l| l.is_one()));
    let lemma_holds = (case == ComplementationCase::PBelowOrAtOne
        && lp.sense() == Sense::Maximize
        && lp.rhs().iter().all(|b| !b.is_negative()))
    .then_some(matches!(opt_c, LpOutcome::Infeasible | LpOutcome::Unbounded));
    ComplementationReport {
        opt_p,
        opt_c,
        case,
        above_one_agrees,
        identity_lhs,
        identity_holds,
        lemma_holds,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpPairResult {
    pub s: BigInt,
    pub t: BigInt,
    pub x_hat: Vec<BigInt>,
    pub value: BigInt,
    /// `A x̂ <= s b`
    pub primal_scaled_ok: bool,
    /// `(b cᵀ - A) x̂ >= t b`
    pub complement_scaled_ok: bool,
}

/// Builds the certified integer pair `P^I_s`, `C̄P^I_t` from the basic optimal
/// solution of an integral maximisation LP with optimum above one.
pub fn ip_scaled_pair(lp: &LinearProgram) -> Result<IpPairResult> {
    if lp.sense() != Sense::Maximize {
        return Err(Error::InvalidArgument("scaled IP pair needs a maximisation LP".into()));
    }
    if !lp.is_integral() {
        return Err(Error::NotIntegral);
    }
    let (opt, x) = match solve(lp) {
        LpOutcome::Optimal { value, solution } => (value, solution),
        other => return Err(Error::NotOptimal(other.label().into())),
    };
    if opt <= Rational::one() {
        return Err(Error::OptNotAboveOne(opt.to_string()));
    }
    let s = common_denominator(&x);
    let s_q = Rational::from_integer(s.clone());
    let t_q = &s_q * (&opt - Rational::one());
    if !t_q.is_integer() {
        return Err(Error::Invariant(format!("t = {t_q} is not integral")));
    }
    let t = t_q.to_integer();
    let x_hat_q: Vec<Rational> = x.iter().map(|xi| xi * &s_q).collect();
    let value_q = lp.objective_value(&x_hat_q);
    if value_q != &s_q + &t_q {
        return Err(Error::Invariant(format!("value {value_q} differs from s + t")));
    }

    let ax = lp.matrix().mul_vec(&x_hat_q)?;
    let primal_scaled_ok = ax.iter().zip(lp.rhs()).all(|(l, b)| *l <= &s_q * b);
    let comp = complement(lp);
    let cx = comp.matrix().mul_vec(&x_hat_q)?;
    let complement_scaled_ok = cx.iter().zip(lp.rhs()).all(|(l, b)| *l >= &t_q * b);

    Ok(IpPairResult {
        s,
        t,
        x_hat: x_hat_q.iter().map(Rational::to_integer).collect(),
        value: value_q.to_integer(),
        primal_scaled_ok,
        complement_scaled_ok,
    })
}

/// Zero-sum game: Rose picks a row, Colin a column, Rose receives the entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGame {
    payoff: RationalMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameValue {
    pub value: Rational,
    /// Optimal mixed strategy over rows.
    pub rose_strategy: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementaryGameReport {
    pub v: Rational,
    pub v_bar: Rational,
    pub sum_is_one: bool,
    /// `1 / Opt(complement(P))` reproduces `v_bar`.
    pub lp_route_agrees: bool,
}

impl MatrixGame {
    pub fn new(payoff: RationalMatrix) -> Result<Self> {
        if payoff.rows() == 0 || payoff.cols() == 0 {
            return Err(Error::InvalidArgument("payoff matrix must be non-empty".into()));
        }
        Ok(MatrixGame { payoff })
    }

    pub fn payoff(&self) -> &RationalMatrix {
        &self.payoff
    }

    /// The game with roles swapped and payoff `1 - Aᵀ`.
    pub fn complementary(&self) -> MatrixGame {
        MatrixGame {
            payoff: self.payoff.transpose().one_minus(),
        }
    }

    /// `P = max{1ᵀx : A x <= 1, x >= 0}`.
    pub fn value_lp(&self) -> LinearProgram {
        let (m, n) = (self.payoff.rows(), self.payoff.cols());
        LinearProgram::new(
            Sense::Maximize,
            vec![Rational::one(); n],
            self.payoff.clone(),
            vec![Rational::one(); m],
        )
        .expect("payoff shape is consistent")
    }

    fn check_unit_range(&self) -> Result<()> {
        match self
            .payoff
            .entries()
            .find(|a| a.is_negative() || **a > Rational::one())
        {
            Some(a) => Err(Error::PayoffOutOfRange(a.to_string())),
            None => Ok(()),
        }
    }
}

/// Value `V = 1 / Opt(P)`. Rose's strategy comes from the dual of `P`
/// (`min{1ᵀy : Aᵀy >= 1}`), scaled by `V`.
pub fn game_value(game: &MatrixGame) -> Result<GameValue> {
    game.check_unit_range()?;
    let p = game.value_lp();
    let opt = match solve(&p) {
        // an all-zero column lets Colin hold Rose to zero
        LpOutcome::Unbounded => return Err(Error::DegenerateGame("0".into())),
        LpOutcome::Infeasible => return Err(Error::Invariant("value LP is infeasible".into())),
        LpOutcome::Optimal { value, .. } => value,
    };
    let value = opt.recip();
    if value.is_one() || value.is_zero() {
        return Err(Error::DegenerateGame(value.to_string()));
    }
    let dual = p.dual();
    let y = match solve(&dual) {
        LpOutcome::Optimal { value: dv, solution } if dv == opt => solution,
        other => {
            return Err(Error::Invariant(format!(
                "dual of the value LP is {} instead of matching {opt}",
                other.label()
            )))
        }
    };
    let rose_strategy: Vec<Rational> = y.iter().map(|yi| yi * &value).collect();
    Ok(GameValue {
        value,
        rose_strategy,
    })
}

pub fn complementary_game_check(game: &MatrixGame) -> Result<ComplementaryGameReport> {
    let v = game_value(game)?.value;
    let v_bar = game_value(&game.complementary())?.value;
    let sum_is_one = (&v + &v_bar).is_one();
    let lp_route_agrees = match solve(&complement(&game.value_lp())) {
        LpOutcome::Optimal { value, .. } => value.recip() == v_bar,
        _ => false,
    };
    Ok(ComplementaryGameReport {
        v,
        v_bar,
        sum_is_one,
        lp_route_agrees,
    })
}

/// Game file: `game <m> <n>` followed by `m` rows of `n` rationals.
pub fn parse_game(text: &str) -> Result<MatrixGame> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| Error::parse(0, "empty game file"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("game") {
        return Err(Error::parse(ln, "expected `game <m> <n>`"));
    }
    let m = parse_count(ln, toks.next(), "row count")?;
    let n = parse_count(ln, toks.next(), "column count")?;
    if toks.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens in header"));
    }
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing payoff row"))?;
        rows.push(parse_rationals(ln, line.split_whitespace(), n)?);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "unexpected content after the last row"));
    }
    if m == 0 || n == 0 {
        return Err(Error::parse(ln, "payoff matrix must be non-empty"));
    }
    MatrixGame::new(RationalMatrix::from_rows(rows)?)
}
