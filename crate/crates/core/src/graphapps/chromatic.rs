//! Cliques, maximal independent sets, exact (multi)colouring, and the
//! fractional chromatic number with its complementary parameter `κ_f`.

use itertools::Itertools;
use num_traits::{One, ToPrimitive};

use super::graph::{full_mask, members, Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, ParamKind};
use crate::limits::{Limits, Meter};
use crate::ratlp::Rational;

fn frac(a: usize, b: usize) -> Rational {
    Rational::new((a as i64).into(), (b as i64).into())
}

fn complement_masks(g: &Graph) -> Vec<u64> {
    let all = g.all();
    (0..g.num_vertices())
        .map(|v| !g.adj_mask(v) & all & !(1 << v))
        .collect()
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return Ok(());
    }
    let pivot = members(p | x)
        .into_iter()
        .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in members(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out, meter)?;
        p &= !(1 << v);
        x |= 1 << v;
    }
    Ok(())
}

fn max_clique_size(adj: &[u64], p: u64, size: usize, best: &mut usize, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    if p == 0 {
        *best = (*best).max(size);
        return Ok(());
    }
    let mut p = p;
    while p != 0 {
        if size + p.count_ones() as usize <= *best {
            return Ok(());
        }
        let v = p.trailing_zeros() as usize;
        p &= !(1 << v);
        max_clique_size(adj, p & adj[v], size + 1, best, meter)?;
    }
    Ok(())
}

/// `ω(G)`.
pub fn clique_number(g: &Graph, limits: &Limits) -> Result<usize> {
    let mut best = 0;
    max_clique_size(g.adj_masks(), g.all(), 0, &mut best, &mut limits.meter())?;
    Ok(best)
}

/// `α(G)`.
pub fn independence_number(g: &Graph, limits: &Limits) -> Result<usize> {
    let mut best = 0;
    max_clique_size(&complement_masks(g), g.all(), 0, &mut best, &mut limits.meter())?;
    Ok(best)
}

/// All maximal independent sets, each sorted, listed in lexicographic order.
pub fn maximal_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<Vec<usize>>> {
    let mut found = Vec::new();
    bron_kerbosch(&complement_masks(g), 0, g.all(), 0, &mut found, &mut limits.meter())?;
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(members).collect();
    sets.sort();
    Ok(sets)
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.num_edges() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Edges are the maximal independent sets.
pub fn independent_set_hypergraph(g: &Graph, limits: &Limits) -> Result<Hypergraph> {
    Hypergraph::new(g.num_vertices(), maximal_independent_sets(g, limits)?)
}

/// Edges are the minimal vertex covers, i.e. the complements of the maximal
/// independent sets (same order).
pub fn vertex_cover_hypergraph(g: &Graph, limits: &Limits) -> Result<Hypergraph> {
    Ok(independent_set_hypergraph(g, limits)?.complement())
}

pub fn fractional_chromatic(g: &Graph, limits: &Limits) -> Result<Rational> {
    require_edges(g)?;
    independent_set_hypergraph(g, limits)?.fractional_param(ParamKind::Covering)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaReport {
    pub kappa: Rational,
    pub chi_f: Rational,
    /// `1/κ_f + 1/χ_f = 1`.
    pub identity_holds: bool,
}

pub fn kappa_f(g: &Graph, limits: &Limits) -> Result<KappaReport> {
    require_edges(g)?;
    let h_is = independent_set_hypergraph(g, limits)?;
    let chi_f = h_is.fractional_param(ParamKind::Covering)?;
    let kappa = h_is.complement().fractional_param(ParamKind::Matching)?;
    Ok(KappaReport {
        identity_holds: (kappa.recip() + chi_f.recip()).is_one(),
        kappa,
        chi_f,
    })
}

pub const LOG_BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct KappaBounds {
    pub n: usize,
    pub omega: usize,
    pub chi: usize,
    pub alpha: usize,
    pub kappa: Rational,
    /// `χ/(χ-1)`, a lower bound.
    pub chi_bound: Rational,
    /// `n/(n-α)`, an upper bound.
    pub alpha_bound: Rational,
    /// `ω/(ω-1)`, an upper bound.
    pub omega_bound: Rational,
    pub chi_bound_holds: bool,
    pub alpha_bound_holds: bool,
    pub omega_bound_holds: bool,
    /// `χ/(χ - 1 - ln α)`; `None` when the denominator is not positive.
    pub log_bound: Option<f64>,
    pub log_bound_holds: Option<bool>,
}

pub fn kappa_bounds(g: &Graph, limits: &Limits) -> Result<KappaBounds> {
    let kappa = kappa_f(g, limits)?.kappa;
    let n = g.num_vertices();
    let omega = clique_number(g, limits)?;
    let chi = chromatic_number(g, limits)?;
    let alpha = independence_number(g, limits)?;
    let chi_bound = frac(chi, chi - 1);
    let alpha_bound = frac(n, n - alpha);
    let omega_bound = frac(omega, omega - 1);
    let denom = chi as f64 - 1.0 - (alpha as f64).ln();
    let log_bound = (denom > 0.0).then(|| chi as f64 / denom);
    let kappa_f64 = kappa.to_f64().expect("small rational");
    Ok(KappaBounds {
        n,
        omega,
        chi,
        alpha,
        chi_bound_holds: chi_bound <= kappa,
        alpha_bound_holds: kappa <= alpha_bound,
        omega_bound_holds: kappa <= omega_bound,
        log_bound_holds: log_bound.map(|b| kappa_f64 <= b + LOG_BOUND_TOLERANCE),
        log_bound,
        kappa,
        chi_bound,
        alpha_bound,
        omega_bound,
    })
}

/// Vertex `(v, a)` of `G·K_c` is numbered `v·c + a`.
pub fn lexicographic_product(g: &Graph, c: usize) -> Result<Graph> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be at least 1".into()));
    }
    let n = g.num_vertices();
    if n * c > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "product has {} vertices, above the limit of {MAX_VERTICES}",
            n * c
        )));
    }
    let clones = (0..n).flat_map(|v| (0..c).tuple_combinations().map(move |(a, b)| (v * c + a, v * c + b)));
    let cross = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| (0..c).cartesian_product(0..c).map(move |(a, b)| (u * c + a, v * c + b)));
    Graph::new(n * c, clones.chain(cross).collect::<Vec<_>>())
}

/// Greedy colouring in vertex order; returns colour per vertex.
fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut color = vec![usize::MAX; n];
    for v in 0..n {
        let taken = g
            .neighbors(v)
            .into_iter()
            .filter(|&u| color[u] != usize::MAX)
            .fold(0u64, |m, u| m | 1 << color[u]);
        color[v] = (!taken).trailing_zeros() as usize;
    }
    color
}

struct Dsatur<'a> {
    g: &'a Graph,
    lower: usize,
    best: usize,
    best_coloring: Vec<usize>,
    color: Vec<usize>,
    meter: Meter,
}

impl Dsatur<'_> {
    fn search(&mut self, colored: usize, used: usize, nbr: &[u64]) -> Result<()> {
        self.meter.tick()?;
        if used >= self.best {
            return Ok(());
        }
        let n = self.g.num_vertices();
        if colored == n {
            self.best = used;
            self.best_coloring = self.color.clone();
            return Ok(());
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by_key(|&v| (nbr[v].count_ones(), self.g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        for c in 0..(used + 1).min(self.best - 1) {
            if nbr[v] >> c & 1 == 1 {
                continue;
            }
            self.color[v] = c;
            let mut next = nbr.to_vec();
            for u in self.g.neighbors(v) {
                next[u] |= 1 << c;
            }
            self.search(colored + 1, used.max(c + 1), &next)?;
            self.color[v] = usize::MAX;
            if self.best <= self.lower {
                break;
            }
        }
        Ok(())
    }
}

/// An optimal proper colouring (colour per vertex, colours `0..χ`).
pub fn optimal_coloring(g: &Graph, limits: &Limits) -> Result<Vec<usize>> {
    let greedy = greedy_coloring(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let lower = clique_number(g, limits)?;
    if upper <= lower {
        return Ok(greedy);
    }
    let mut s = Dsatur {
        g,
        lower,
        best: upper,
        best_coloring: greedy,
        color: vec![usize::MAX; g.num_vertices()],
        meter: limits.meter(),
    };
    s.search(0, 0, &vec![0; g.num_vertices()])?;
    Ok(s.best_coloring)
}

pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(optimal_coloring(g, limits)?.into_iter().max().map_or(0, |c| c + 1))
}

/// Order in which each vertex has as many earlier neighbours as possible.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.adj_mask(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .expect("vertex left");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

struct Multicolor<'a> {
    g: &'a Graph,
    c: usize,
    k: usize,
    order: Vec<usize>,
    assign: Vec<u64>,
    meter: Meter,
}

impl Multicolor<'_> {
    /// Colours in use are always `0..used`; new colours are opened in order.
    fn search(&mut self, i: usize, used: usize) -> Result<bool> {
        self.meter.tick()?;
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        let forbidden = members(self.g.adj_mask(v))
            .into_iter()
            .fold(0u64, |m, u| m | self.assign[u]);
        let old = members(!forbidden & full_mask(used));
        for fresh in 0..=self.c.min(self.k - used) {
            let reuse = self.c - fresh;
            if reuse > old.len() {
                continue;
            }
            let new_mask = full_mask(used + fresh) & !full_mask(used);
            for picked in old.iter().copied().combinations(reuse) {
                self.assign[v] = picked.iter().fold(new_mask, |m, &col| m | 1 << col);
                if self.search(i + 1, used + fresh)? {
                    return Ok(true);
                }
            }
        }
        self.assign[v] = 0;
        Ok(false)
    }
}

/// An assignment of `c` colours out of `k` to each vertex with adjacent
/// vertices receiving disjoint sets, as colour bitmasks per vertex.
pub(crate) fn multicoloring(g: &Graph, c: usize, k: usize, limits: &Limits) -> Result<Option<Vec<u64>>> {
    if k > 64 {
        return Err(Error::InvalidArgument("at most 64 colours are supported".into()));
    }
    let mut s = Multicolor {
        g,
        c,
        k,
        order: search_order(g),
        assign: vec![0; g.num_vertices()],
        meter: limits.meter(),
    };
    Ok(s.search(0, 0)?.then_some(s.assign))
}

/// `χ_c(G) = χ(G·K_c)`, found as the least `k` admitting a `c`-fold colouring
/// with `k` colours, starting from `max(c·ω, ⌈c·χ_f⌉)`.
pub fn c_fold_chromatic(g: &Graph, c: usize, limits: &Limits) -> Result<usize> {
    if c == 0 {
        return Err(Error::InvalidArgument("c must be at least 1".into()));
    }
    if g.num_edges() == 0 {
        return Ok(c);
    }
    let frac_bound = (fractional_chromatic(g, limits)? * Rational::from_integer((c as i64).into()))
        .ceil()
        .to_integer()
        .to_usize()
        .expect("small bound");
    let upper = c * chromatic_number(g, limits)?;
    let mut k = (c * clique_number(g, limits)?).max(frac_bound);
    while k < upper {
        if multicoloring(g, c, k, limits)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
    Ok(upper)
}

/// `K(n, r)`: `r`-subsets of `0..n` in lexicographic order, adjacent when
/// disjoint.
pub fn kneser_graph(n: usize, r: usize) -> Result<Graph> {
    if r == 0 || n < 2 * r {
        return Err(Error::InvalidArgument(format!(
            "Kneser graph K({n},{r}) needs r >= 1 and n >= 2r"
        )));
    }
    let subsets: Vec<u64> = (0..n).combinations(r).map(|s| s.iter().fold(0, |m, &i| m | 1 << i)).collect();
    if subsets.len() > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "K({n},{r}) has {} vertices, above the limit of {MAX_VERTICES}",
            subsets.len()
        )));
    }
    let edges = (0..subsets.len())
        .tuple_combinations()
        .filter(|&(a, b)| subsets[a] & subsets[b] == 0);
    Graph::new(subsets.len(), edges.collect::<Vec<_>>())
}

pub fn petersen() -> Graph {
    kneser_graph(5, 2).expect("K(5,2) is valid")
}
