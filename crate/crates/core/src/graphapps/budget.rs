//! Vertex cover with budget: `T_G(b)`, the longest family of vertex covers in
//! which no vertex is used more than `b` times.

use num_traits::ToPrimitive;

use super::chromatic::{c_fold_chromatic, chromatic_number, clique_number, fractional_chromatic, kappa_f, multicoloring};
use super::graph::{members, Graph};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ratlp::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    pub covers: Vec<Vec<usize>>,
    /// Largest number of members any single vertex belongs to.
    pub budget_used: usize,
}

impl CoverFamily {
    pub fn new(n: usize, covers: Vec<Vec<usize>>) -> Self {
        let mut count = vec![0usize; n];
        for s in &covers {
            for &v in s {
                count[v] += 1;
            }
        }
        CoverFamily {
            budget_used: count.into_iter().max().unwrap_or(0),
            covers,
        }
    }

    /// Every member covers `g`, the stored budget is accurate and at most `b`.
    pub fn is_valid_for(&self, g: &Graph, b: usize) -> bool {
        let fresh = CoverFamily::new(g.num_vertices(), self.covers.clone());
        fresh.budget_used == self.budget_used
            && self.budget_used <= b
            && self.covers.iter().all(|s| s.iter().all(|&v| v < g.num_vertices()) && g.is_vertex_cover(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetCover {
    pub t: usize,
    /// The largest `c` with `χ_c(G) <= b + c`, or 0.
    pub c: usize,
    pub witness: CoverFamily,
}

fn ceil_usize(q: Rational) -> usize {
    q.ceil().to_integer().to_usize().expect("small bound")
}

/// `T_G(b) = b + max{c >= 0 : χ_c(G) <= b + c}`, scanning `c = 1, 2, ...`.
/// The witness comes from the `c`-fold colouring with `b + c` colours: the
/// complement of each colour class is a cover and every vertex misses
/// exactly `c` of them.
pub fn budget_cover(g: &Graph, b: usize, limits: &Limits) -> Result<BudgetCover> {
    if g.num_edges() == 0 {
        return Err(Error::EmptyGraph);
    }
    if b == 0 {
        return Err(Error::InvalidArgument("budget b must be at least 1".into()));
    }
    let n = g.num_vertices();
    let omega = clique_number(g, limits)?;
    let chi_f = fractional_chromatic(g, limits)?;

    let mut best: Option<(usize, Vec<u64>)> = None;
    for c in 1.. {
        let k = b + c;
        let lower = (omega * c).max(ceil_usize(chi_f.clone() * Rational::from_integer((c as i64).into())));
        if lower > k {
            break;
        }
        match multicoloring(g, c, k, limits)? {
            Some(assign) => best = Some((c, assign)),
            None => break,
        }
    }

    let all: Vec<usize> = (0..n).collect();
    let (c, covers) = match best {
        None => (0, vec![all; b]),
        Some((c, assign)) => {
            let covers = (0..b + c)
                .map(|i| {
                    let class = (0..n).fold(0u64, |m, v| if assign[v] >> i & 1 == 1 { m | 1 << v } else { m });
                    members(!class & g.all())
                })
                .collect();
            (c, covers)
        }
    };
    let witness = CoverFamily::new(n, covers);
    if witness.covers.len() != b + c || !witness.is_valid_for(g, b) {
        return Err(Error::Invariant(format!("budget witness for b = {b} failed validation")));
    }
    Ok(BudgetCover { t: b + c, c, witness })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetRow {
    pub b: usize,
    pub t: usize,
    /// `⌊χ/(χ-1) · b⌋`.
    pub floor_lower: usize,
    /// `⌊ω/(ω-1) · b⌋`.
    pub floor_upper: usize,
    pub floors_hold: bool,
    /// `T(b)/b <= κ_f`.
    pub ratio_within_kappa: bool,
    /// `(T(b) >= b + c) ⇔ (χ_c <= b + c)` for every `1 <= c <= b`.
    pub iff_holds: bool,
    pub witness_valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCheck {
    pub kappa_is_two: bool,
    pub some_b_doubles: bool,
    pub all_b_double: bool,
    pub is_bipartite: bool,
}

impl BipartiteCheck {
    pub fn equivalent(&self) -> bool {
        let a = self.kappa_is_two;
        a == self.some_b_doubles && a == self.all_b_double && a == self.is_bipartite
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub kappa: Rational,
    pub chi: usize,
    pub omega: usize,
    /// `χ_c` for `c = 1..=b_max`.
    pub chi_c: Vec<usize>,
    pub rows: Vec<BudgetRow>,
    /// Largest budget probed for `T(b)/b = κ_f`: `4 · den(κ_f)`.
    pub window: usize,
    /// `T(b)` for `b = 1..=max(b_max, window)`.
    pub t_values: Vec<usize>,
    /// Least `b` in the window with `T(b) = κ_f · b`.
    pub kappa_attained_at: Option<usize>,
    /// Least `β` in the window with `T(kβ) = κ_f·kβ` for every `kβ` in the window.
    pub beta: Option<usize>,
    pub bipartite: BipartiteCheck,
}

impl BudgetReport {
    /// Whether every checked statement holds. Absence of `β` in the window is
    /// reported separately and is not a failure.
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.floors_hold && r.ratio_within_kappa && r.iff_holds && r.witness_valid)
            && self.bipartite.equivalent()
    }
}

pub const BETA_WINDOW_FACTOR: usize = 4;

pub fn verify_budget(g: &Graph, b_max: usize, limits: &Limits) -> Result<BudgetReport> {
    if b_max == 0 {
        return Err(Error::InvalidArgument("b_max must be at least 1".into()));
    }
    let kappa = kappa_f(g, limits)?.kappa;
    let chi = chromatic_number(g, limits)?;
    let omega = clique_number(g, limits)?;
    let chi_c = (1..=b_max)
        .map(|c| c_fold_chromatic(g, c, limits))
        .collect::<Result<Vec<_>>>()?;
    let den = kappa.denom().to_usize().expect("small denominator");
    let window = den * BETA_WINDOW_FACTOR;

    let int = |k: usize| Rational::from_integer((k as i64).into());
    let mut t_values = Vec::new();
    let mut rows = Vec::new();
    for b in 1..=b_max.max(window) {
        let cover = budget_cover(g, b, limits)?;
        let t = cover.t;
        t_values.push(t);
        if b > b_max {
            continue;
        }
        let floor_lower = chi * b / (chi - 1);
        let floor_upper = omega * b / (omega - 1);
        rows.push(BudgetRow {
            b,
            t,
            floor_lower,
            floor_upper,
            floors_hold: floor_lower <= t && t <= floor_upper,
            ratio_within_kappa: int(t) <= kappa.clone() * int(b),
            iff_holds: (1..=b).all(|c| (t >= b + c) == (chi_c[c - 1] <= b + c)),
            witness_valid: cover.witness.is_valid_for(g, b),
        });
    }

    let attains = |b: usize| int(t_values[b - 1]) == kappa.clone() * int(b);
    let kappa_attained_at = (1..=window).find(|&b| attains(b));
    let beta = (1..=BETA_WINDOW_FACTOR)
        .map(|k| k * den)
        .find(|&beta| (1..).map(|k| k * beta).take_while(|&b| b <= window).all(attains));

    let two = int(2);
    let bipartite = BipartiteCheck {
        kappa_is_two: kappa == two,
        some_b_doubles: rows.iter().any(|r| r.t == 2 * r.b),
        all_b_double: rows.iter().all(|r| r.t == 2 * r.b),
        is_bipartite: g.is_bipartite(),
    };

    Ok(BudgetReport {
        kappa,
        chi,
        omega,
        chi_c,
        rows,
        window,
        t_values,
        kappa_attained_at,
        beta,
        bipartite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlp::ratio;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn fixtures() {
        assert_eq!(budget_cover(&Graph::complete(3), 2, &lim()).unwrap().t, 3);
        assert_eq!(budget_cover(&Graph::cycle(6), 3, &lim()).unwrap().t, 6);
        let r = budget_cover(&Graph::cycle(5), 3, &lim()).unwrap();
        assert_eq!((r.t, r.c), (5, 2));
        let mut covers = r.witness.covers.clone();
        covers.sort();
        assert_eq!(covers, vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 2, 4], vec![1, 2, 4], vec![1, 3, 4]]);
        assert_eq!(r.witness.budget_used, 3);
    }

    #[test]
    fn no_extra_cover_gives_b_copies() {
        let r = budget_cover(&Graph::complete(4), 1, &lim()).unwrap();
        assert_eq!((r.t, r.c), (1, 0));
        assert_eq!(r.witness.covers, vec![vec![0, 1, 2, 3]]);
        assert_eq!(budget_cover(&Graph::edgeless(3), 1, &lim()), Err(Error::EmptyGraph));
        assert!(budget_cover(&Graph::cycle(5), 0, &lim()).is_err());
    }

    #[test]
    fn family_validation() {
        let g = Graph::cycle(5);
        let f = CoverFamily::new(5, vec![vec![0, 2, 4], vec![1, 3, 4]]);
        assert_eq!(f.budget_used, 2);
        assert!(f.is_valid_for(&g, 2));
        assert!(!f.is_valid_for(&g, 1));
        let bad = CoverFamily::new(5, vec![vec![0, 2]]);
        assert!(!bad.is_valid_for(&g, 3));
    }

    #[test]
    fn verify_fixtures() {
        let r = verify_budget(&Graph::cycle(5), 3, &lim()).unwrap();
        assert_eq!(&r.t_values[..3], &[1, 3, 5]);
        assert_eq!(r.rows.iter().map(|x| x.floor_lower).collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(r.rows.iter().map(|x| x.floor_upper).collect::<Vec<_>>(), vec![2, 4, 6]);
        assert_eq!(r.chi_c, vec![3, 5, 8]);
        assert_eq!(r.kappa, ratio(5, 3));
        assert_eq!(r.kappa_attained_at, Some(3));
        assert_eq!(r.beta, Some(3));
        assert!(r.all_hold());
        assert!(!r.bipartite.kappa_is_two);

        let r = verify_budget(&Graph::cycle(6), 3, &lim()).unwrap();
        assert_eq!(&r.t_values[..3], &[2, 4, 6]);
        let bp = &r.bipartite;
        assert!(bp.kappa_is_two && bp.some_b_doubles && bp.all_b_double && bp.is_bipartite);
        assert!(r.all_hold());

        let r = verify_budget(&Graph::complete(4), 3, &lim()).unwrap();
        assert_eq!(&r.t_values[..3], &[1, 2, 4]);
        assert_eq!(r.kappa_attained_at, Some(3));
        assert!(r.all_hold());
    }
}
