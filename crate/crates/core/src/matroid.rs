//! Matroids given by their list of bases, edge toughness, and cycle matroids
//! of connected graphs.

use std::collections::HashSet;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graphapps::{full_mask, members, Graph};
use crate::hypergraph::{Hypergraph, ParamKind, RatioBoundKind};
use crate::limits::{Limits, Meter};
use crate::ratlp::Rational;

pub const MAX_GROUND_SET: usize = 64;

#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    /// Bitmask per basis, first-occurrence order.
    bases: Vec<u64>,
    rank: usize,
}

impl Matroid {
    /// Builds a matroid from a basis hypergraph. Repeated bases collapse.
    /// The exchange axiom is only checked when `validate` is set.
    pub fn from_bases(h: &Hypergraph, validate: bool) -> Result<Matroid> {
        let n = h.num_vertices();
        if n > MAX_GROUND_SET {
            return Err(Error::InvalidArgument(format!(
                "ground set is limited to {MAX_GROUND_SET} elements, got {n}"
            )));
        }
        let rank = h.edges()[0].len();
        if h.edges().iter().any(|e| e.len() != rank) {
            return Err(Error::UnequalBasisSizes);
        }
        let mut seen = HashSet::new();
        let bases: Vec<u64> = h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
            .filter(|&b| seen.insert(b))
            .collect();
        let m = Matroid { n, bases, rank };
        if validate && !m.satisfies_exchange() {
            return Err(Error::ExchangeAxiomViolated);
        }
        Ok(m)
    }

    fn from_masks(n: usize, bases: Vec<u64>, rank: usize) -> Matroid {
        Matroid { n, bases, rank }
    }

    /// For all bases `B1, B2` and `x ∈ B1 \ B2` some `y ∈ B2 \ B1` makes
    /// `B1 - x + y` a basis.
    pub fn satisfies_exchange(&self) -> bool {
        let set: HashSet<u64> = self.bases.iter().copied().collect();
        self.bases.iter().all(|&b1| {
            self.bases.iter().all(|&b2| {
                members(b1 & !b2).into_iter().all(|x| {
                    members(b2 & !b1)
                        .into_iter()
                        .any(|y| set.contains(&(b1 & !(1 << x) | 1 << y)))
                })
            })
        })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| members(b)).collect()
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// `H_B(M)`.
    pub fn basis_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.n, self.bases()).expect("bases stay in range")
    }

    pub(crate) fn rank_mask(&self, s: u64) -> usize {
        self.bases.iter().map(|&b| (b & s).count_ones() as usize).max().unwrap_or(0)
    }

    /// `ρ_M(S) = max_B |S ∩ B|`.
    pub fn rank_of(&self, s: &[usize]) -> Result<usize> {
        if let Some(&x) = s.iter().find(|&&x| x >= self.n) {
            return Err(Error::OutOfRange { index: x, size: self.n });
        }
        Ok(self.rank_mask(s.iter().fold(0, |m, &v| m | 1 << v)))
    }

    /// Bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        let all = full_mask(self.n);
        Matroid::from_masks(
            self.n,
            self.bases.iter().map(|&b| !b & all).collect(),
            self.n - self.rank,
        )
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Vec<usize> {
        members(self.bases.iter().fold(full_mask(self.n), |m, &b| m & b))
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Vec<usize> {
        members(!self.bases.iter().fold(0, |m, &b| m | b) & full_mask(self.n))
    }
}

/// Equal ground set and equal basis sets; basis order is irrelevant.
impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        let sorted = |m: &Matroid| {
            let mut b = m.bases.clone();
            b.sort_unstable();
            b
        };
        self.n == other.n && self.rank == other.rank && sorted(self) == sorted(other)
    }
}

impl Eq for Matroid {}

pub fn matroid_dual(m: &Matroid) -> Matroid {
    m.dual()
}

pub fn rank(m: &Matroid, s: &[usize]) -> Result<usize> {
    m.rank_of(s)
}

/// `ρ_M̄(T) = |T| - ρ_M(V) + ρ_M(V \ T)` for every `T ⊆ V`.
pub fn verify_dual_rank(m: &Matroid, limits: &Limits) -> Result<bool> {
    let count = limits.check_subsets(m.n)?;
    let d = m.dual();
    let all = full_mask(m.n);
    let rv = m.rank;
    Ok((0..count).all(|t| d.rank_mask(t) + rv == t.count_ones() as usize + m.rank_mask(all & !t)))
}

/// `σ'(M) = min |V \ S| / (ρ(V) - ρ(S))` over `S` with `ρ(S) < ρ(V)`.
pub fn edge_toughness_matroid(m: &Matroid, limits: &Limits) -> Result<Rational> {
    if m.rank == 0 {
        return Err(Error::RankZero);
    }
    let count = limits.check_subsets(m.n)?;
    let n = m.n;
    (0..count)
        .filter_map(|s| {
            let r = m.rank_mask(s);
            (r < m.rank).then(|| {
                Rational::new(((n - s.count_ones() as usize) as i64).into(), ((m.rank - r) as i64).into())
            })
        })
        .min()
        .ok_or_else(|| Error::Invariant("the empty set always has rank below ρ(V)".into()))
}

struct Components {
    parent: Vec<usize>,
    count: usize,
}

impl Components {
    fn new(n: usize) -> Self {
        Components {
            parent: (0..n).collect(),
            count: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }
}

/// Number of connected components of `(V, {e_i : i ∈ kept})`.
fn component_count(g: &Graph, kept: u64) -> usize {
    let mut uf = Components::new(g.num_vertices());
    for i in members(kept) {
        let (u, v) = g.edges()[i];
        uf.union(u, v);
    }
    uf.count
}

fn spanning_trees(g: &Graph, i: usize, chosen: u64, uf: &Components, out: &mut Vec<u64>, meter: &mut Meter) -> Result<()> {
    meter.tick()?;
    let m = g.num_edges();
    if uf.count == 1 {
        out.push(chosen);
        return Ok(());
    }
    if i == m {
        return Ok(());
    }
    let (u, v) = g.edges()[i];
    let mut with = Components {
        parent: uf.parent.clone(),
        count: uf.count,
    };
    if with.union(u, v) {
        spanning_trees(g, i + 1, chosen | 1 << i, &with, out, meter)?;
    }
    // skipping edge i only pays off if the rest can still connect everything
    let rest = full_mask(m) & !full_mask(i + 1);
    if component_count(g, chosen | rest) == 1 {
        spanning_trees(g, i + 1, chosen, uf, out, meter)?;
    }
    Ok(())
}

/// `M_G`: ground set is the edge list of `g`, bases are its spanning trees.
pub fn cycle_matroid(g: &Graph, limits: &Limits) -> Result<Matroid> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.num_edges() > MAX_GROUND_SET {
        return Err(Error::InvalidArgument(format!(
            "cycle matroids are limited to {MAX_GROUND_SET} edges"
        )));
    }
    let mut trees = Vec::new();
    let uf = Components::new(g.num_vertices());
    spanning_trees(g, 0, 0, &uf, &mut trees, &mut limits.meter())?;
    Ok(Matroid::from_masks(g.num_edges(), trees, g.num_vertices() - 1))
}

/// `σ'(G) = min |Z| / (c(G - Z) - 1)` over edge sets `Z` with `c(G - Z) > 1`.
pub fn edge_toughness_graph(g: &Graph, limits: &Limits) -> Result<Rational> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let m = g.num_edges();
    let count = limits.check_subsets(m)?;
    let all = full_mask(m);
    (0..count)
        .filter_map(|z| {
            let c = component_count(g, all & !z);
            (c > 1).then(|| Rational::new((z.count_ones() as i64).into(), ((c - 1) as i64).into()))
        })
        .min()
        .ok_or_else(|| Error::Invariant("deleting every edge disconnects a graph on two or more vertices".into()))
}

/// Edges whose removal disconnects their component (bridges).
pub fn cut_edges(g: &Graph) -> Vec<usize> {
    let m = g.num_edges();
    let base = component_count(g, full_mask(m));
    (0..m)
        .filter(|&i| component_count(g, full_mask(m) & !(1 << i)) > base)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidTheoremReport {
    pub mu_f: Rational,
    pub tau_f: Rational,
    pub sigma: Rational,
    /// `β(H_B(M)*)`.
    pub beta_dual: Rational,
    /// `k_f(H_B(M))` and `α(H_B(M))`; `None` when `M` has loops, which leave
    /// isolated vertices in `H_B(M)`.
    pub k_f: Option<Rational>,
    pub alpha: Option<Rational>,
    /// `μ_f = τ_f = σ'`.
    pub all_equal: bool,
    pub sigma_is_beta_dual: bool,
    pub k_f_is_alpha: Option<bool>,
}

pub fn verify_matroid_theorem(m: &Matroid, limits: &Limits) -> Result<MatroidTheoremReport> {
    if m.rank == 0 || !m.coloops().is_empty() {
        return Err(Error::Trivial);
    }
    let h = m.basis_hypergraph();
    let mu_f = h.fractional_param(ParamKind::Matching)?;
    let tau_f = h.fractional_param(ParamKind::Transversal)?;
    let sigma = edge_toughness_matroid(m, limits)?;
    let beta_dual = h.dual().ratio_bound(RatioBoundKind::Beta, limits)?;
    let (k_f, alpha) = if m.loops().is_empty() {
        (
            Some(h.fractional_param(ParamKind::Covering)?),
            Some(h.ratio_bound(RatioBoundKind::Alpha, limits)?),
        )
    } else {
        (None, None)
    };
    Ok(MatroidTheoremReport {
        all_equal: mu_f == tau_f && tau_f == sigma,
        sigma_is_beta_dual: sigma == beta_dual,
        k_f_is_alpha: k_f.as_ref().zip(alpha.as_ref()).map(|(k, a)| k == a),
        mu_f,
        tau_f,
        sigma,
        beta_dual,
        k_f,
        alpha,
    })
}

/// `σ'(M) > 1` exactly when there is no coloop (positive rank).
pub fn toughness_exceeds_one(m: &Matroid, limits: &Limits) -> Result<bool> {
    Ok(edge_toughness_matroid(m, limits)? > Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlp::{rat, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    fn from(n: usize, bases: Vec<Vec<usize>>) -> Result<Matroid> {
        Matroid::from_bases(&Hypergraph::new(n, bases).unwrap(), true)
    }

    fn u12() -> Matroid {
        from(2, vec![vec![0], vec![1]]).unwrap()
    }

    fn u23() -> Matroid {
        from(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    fn k4() -> Matroid {
        cycle_matroid(&Graph::complete(4), &lim()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(u12().rank(), 1);
        assert_eq!(u23().rank(), 2);
        assert_eq!(from(3, vec![vec![0, 1], vec![2]]), Err(Error::UnequalBasisSizes));
        assert_eq!(from(4, vec![vec![0, 1], vec![2, 3]]), Err(Error::ExchangeAxiomViolated));
        let unchecked = Matroid::from_bases(&Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap(), false);
        assert!(unchecked.is_ok());
        let dup = from(2, vec![vec![0], vec![1], vec![0]]).unwrap();
        assert_eq!(dup.num_bases(), 2);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&u12(), &[0, 1]).unwrap(), 1);
        assert_eq!(rank(&u23(), &[0]).unwrap(), 1);
        assert_eq!(rank(&u23(), &[0, 1, 2]).unwrap(), 2);
        assert_eq!(rank(&k4(), &[0, 1, 2, 3, 4, 5]).unwrap(), 3);
        assert_eq!(rank(&u23(), &[3]), Err(Error::OutOfRange { index: 3, size: 3 }));
    }

    #[test]
    fn duals() {
        assert_eq!(matroid_dual(&u12()), u12());
        assert_eq!(u23().dual().dual(), u23());
        assert_eq!(k4().dual().rank(), 3);
        for m in [u12(), u23(), k4()] {
            assert!(verify_dual_rank(&m, &lim()).unwrap());
        }
        let full = from(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(full.dual().rank(), 0);
        assert_eq!(full.dual().bases(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn toughness() {
        assert_eq!(edge_toughness_matroid(&u12(), &lim()).unwrap(), rat(2));
        let coloop = from(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(coloop.coloops(), vec![0]);
        assert_eq!(edge_toughness_matroid(&coloop, &lim()).unwrap(), rat(1));
        assert_eq!(edge_toughness_matroid(&k4(), &lim()).unwrap(), rat(2));
        let full = from(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(edge_toughness_matroid(&full.dual(), &lim()), Err(Error::RankZero));
    }

    #[test]
    fn cycle_matroids() {
        let k3 = cycle_matroid(&Graph::complete(3), &lim()).unwrap();
        assert_eq!((k3.num_bases(), k3.rank()), (3, 2));
        assert_eq!((k4().num_bases(), k4().rank()), (16, 3));
        let p = cycle_matroid(&Graph::path(3), &lim()).unwrap();
        assert_eq!(p.bases(), vec![vec![0, 1]]);
        assert!(k4().satisfies_exchange());
        assert_eq!(cycle_matroid(&Graph::new(3, [(0, 1)]).unwrap(), &lim()), Err(Error::Disconnected));
        assert_eq!(cycle_matroid(&Graph::edgeless(1), &lim()), Err(Error::NoEdges));
    }

    #[test]
    fn graph_toughness() {
        assert_eq!(edge_toughness_graph(&Graph::path(3), &lim()).unwrap(), rat(1));
        assert_eq!(edge_toughness_graph(&Graph::complete(4), &lim()).unwrap(), rat(2));
        assert_eq!(edge_toughness_graph(&Graph::cycle(5), &lim()).unwrap(), ratio(5, 4));
        assert_eq!(cut_edges(&Graph::path(3)), vec![0, 1]);
        assert!(cut_edges(&Graph::cycle(5)).is_empty());
        assert_eq!(edge_toughness_graph(&Graph::edgeless(2), &lim()), Err(Error::NoEdges));
    }

    #[test]
    fn theorem_fixtures() {
        let r = verify_matroid_theorem(&u12(), &lim()).unwrap();
        assert_eq!((r.mu_f.clone(), r.sigma.clone()), (rat(2), rat(2)));
        assert!(r.all_equal && r.sigma_is_beta_dual && r.k_f_is_alpha == Some(true));
        let r = verify_matroid_theorem(&k4(), &lim()).unwrap();
        assert_eq!(r.tau_f, rat(2));
        assert!(r.all_equal && r.sigma_is_beta_dual);
        let coloop = from(3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(verify_matroid_theorem(&coloop, &lim()), Err(Error::Trivial));
        assert!(!toughness_exceeds_one(&coloop, &lim()).unwrap());
        assert!(toughness_exceeds_one(&u23(), &lim()).unwrap());
    }
}
