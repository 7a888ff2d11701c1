//! Hypergraphs with multiset edge lists, their incidence LPs, and the
//! complementation identities between the four fractional parameters.
//!
//! Vertices are `0..n`. Edges keep their input order and multiplicity, so the
//! dual and complement constructions are exact involutions at the level of
//! incidence matrices.

use std::fmt::{self, Write as _};

use num_traits::One;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ratlp::{content_lines, parse_count, solve, LinearProgram, LpOutcome, Rational, RationalMatrix, Sense};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HypergraphFlags {
    pub has_isolated_vertex: bool,
    pub has_universal_vertex: bool,
    pub has_empty_edge: bool,
    pub has_complete_edge: bool,
    pub nontrivial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    Covering,
    Packing,
    Matching,
    Transversal,
}

impl ParamKind {
    pub const ALL: [ParamKind; 4] = [
        ParamKind::Covering,
        ParamKind::Packing,
        ParamKind::Matching,
        ParamKind::Transversal,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            ParamKind::Covering => "k",
            ParamKind::Packing => "p",
            ParamKind::Matching => "mu",
            ParamKind::Transversal => "tau",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamKind::Covering => "covering",
            ParamKind::Packing => "packing",
            ParamKind::Matching => "matching",
            ParamKind::Transversal => "transversal",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioBoundKind {
    Alpha,
    Beta,
    Gamma,
}

impl Hypergraph {
    /// Edges are sorted and deduplicated internally; edge order and edge
    /// multiplicity are preserved. At least one vertex and one edge required.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("hypergraph needs at least one vertex".into()));
        }
        if edges.is_empty() {
            return Err(Error::InvalidArgument("hypergraph needs at least one edge".into()));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for mut e in edges {
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::OutOfRange { index: v, size: n });
            }
            e.sort_unstable();
            e.dedup();
            norm.push(e);
        }
        Ok(Hypergraph { n, edges: norm })
    }

    /// The edge hypergraph of the cycle `C_k` (edges `{i, i+1 mod k}`).
    pub fn cycle_edges(k: usize) -> Self {
        let edges = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
        Hypergraph::new(k, edges).expect("cycle on at least one vertex")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `n x m` 0/1 matrix with `M[v][e] = 1` iff `v ∈ e`.
    pub fn incidence_matrix(&self) -> RationalMatrix {
        let masks = self.membership();
        RationalMatrix::indicator(self.n, self.edges.len(), |v, e| masks[e][v])
    }

    fn membership(&self) -> Vec<Vec<bool>> {
        self.edges
            .iter()
            .map(|e| {
                let mut row = vec![false; self.n];
                for &v in e {
                    row[v] = true;
                }
                row
            })
            .collect()
    }

    /// One dual edge per original vertex, in vertex order, listing the edges
    /// that contain it. Identical dual edges are kept.
    pub fn dual(&self) -> Hypergraph {
        let mut dual_edges = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                dual_edges[v].push(i);
            }
        }
        Hypergraph {
            n: self.edges.len(),
            edges: dual_edges,
        }
    }

    /// Every edge replaced by its complement in the vertex set.
    pub fn complement(&self) -> Hypergraph {
        let edges = self
            .membership()
            .into_iter()
            .map(|row| (0..self.n).filter(|&v| !row[v]).collect())
            .collect();
        Hypergraph { n: self.n, edges }
    }

    pub fn classify(&self) -> HypergraphFlags {
        let mut degree = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                degree[v] += 1;
            }
        }
        let m = self.edges.len();
        let has_universal_vertex = degree.contains(&m);
        let has_empty_edge = self.edges.iter().any(Vec::is_empty);
        HypergraphFlags {
            has_isolated_vertex: degree.contains(&0),
            has_universal_vertex,
            has_empty_edge,
            has_complete_edge: self.edges.iter().any(|e| e.len() == self.n),
            nontrivial: !has_empty_edge && !has_universal_vertex,
        }
    }

    /// The LP whose optimum is the fractional parameter `kind`.
    ///
    /// * Covering `K(H)`: `min 1ᵀx, M x >= 1`
    /// * Packing `P(H)`: the dual of `K(H)`, `max 1ᵀy, Mᵀ y <= 1`
    /// * Matching `M(H)`: `max 1ᵀy, M y <= 1`
    /// * Transversal `T(H)`: `min 1ᵀx, Mᵀ x >= 1`
    pub fn param_lp(&self, kind: ParamKind) -> LinearProgram {
        let m = self.incidence_matrix();
        let ones = |k: usize| vec![Rational::one(); k];
        let (n_v, n_e) = (self.n, self.edges.len());
        let lp = match kind {
            ParamKind::Covering | ParamKind::Packing => {
                LinearProgram::new(Sense::Minimize, ones(n_e), m, ones(n_v))
            }
            ParamKind::Matching => LinearProgram::new(Sense::Maximize, ones(n_e), m, ones(n_v)),
            ParamKind::Transversal => {
                LinearProgram::new(Sense::Minimize, ones(n_v), m.transpose(), ones(n_e))
            }
        }
        .expect("incidence LP dimensions are consistent");
        if kind == ParamKind::Packing {
            lp.dual()
        } else {
            lp
        }
    }

    fn check_param(&self, kind: ParamKind) -> Result<()> {
        let flags = self.classify();
        match kind {
            ParamKind::Covering if flags.has_isolated_vertex => Err(Error::InfeasibleParameter(
                "isolated vertex cannot be covered".into(),
            )),
            ParamKind::Packing if flags.has_isolated_vertex => Err(Error::UnboundedParameter(
                "isolated vertex has unbounded packing weight".into(),
            )),
            ParamKind::Transversal if flags.has_empty_edge => Err(Error::InfeasibleParameter(
                "empty edge cannot be hit".into(),
            )),
            ParamKind::Matching if flags.has_empty_edge => Err(Error::UnboundedParameter(
                "empty edge has unbounded matching weight".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Exact optimum of the parameter's LP.
    pub fn fractional_param(&self, kind: ParamKind) -> Result<Rational> {
        self.check_param(kind)?;
        match solve(&self.param_lp(kind)) {
            LpOutcome::Optimal { value, .. } => Ok(value),
            other => Err(Error::Invariant(format!(
                "{kind} LP is {} despite passing its precondition",
                other.label()
            ))),
        }
    }

    fn vertex_masks(&self) -> Vec<u64> {
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect()
    }

    /// `masks[v]` has bit `e` set iff `v ∈ e`.
    fn edge_index_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                masks[v] |= 1 << i;
            }
        }
        masks
    }

    /// Exact optimum of the 0/1 program by exhaustive subset search.
    pub fn integer_param(&self, kind: ParamKind, limits: &Limits) -> Result<usize> {
        self.check_param(kind)?;
        let over_edges = matches!(kind, ParamKind::Covering | ParamKind::Matching);
        let count = limits.check_subsets(if over_edges { self.edges.len() } else { self.n })?;
        // constraint masks over the enumerated ground set
        let constraints = if over_edges {
            self.edge_index_masks()
        } else {
            self.vertex_masks()
        };
        let size = |s: u64| s.count_ones() as usize;
        let best = match kind {
            ParamKind::Covering | ParamKind::Transversal => (0..count)
                .filter(|&s| constraints.iter().all(|&c| c & s != 0))
                .map(size)
                .min(),
            ParamKind::Matching | ParamKind::Packing => (0..count)
                .filter(|&s| constraints.iter().all(|&c| (c & s).count_ones() <= 1))
                .map(size)
                .max(),
        };
        best.ok_or_else(|| Error::Invariant(format!("no feasible {kind} set")))
    }

    /// `ρ_H(S) = max_e |S ∩ e|`.
    pub fn rho(&self, s: &[usize]) -> usize {
        self.edges
            .iter()
            .map(|e| e.iter().filter(|v| s.contains(v)).count())
            .max()
            .unwrap_or(0)
    }

    /// `ρ̃_H(Z) = min_v |{e ∈ Z : v ∈ e}|` for a set `Z` of edge indices.
    pub fn rho_tilde(&self, z: &[usize]) -> usize {
        (0..self.n)
            .map(|v| z.iter().filter(|&&e| self.edges[e].contains(&v)).count())
            .min()
            .unwrap_or(0)
    }

    /// Exact `α`, `β` or `γ` by full subset enumeration.
    pub fn ratio_bound(&self, kind: RatioBoundKind, limits: &Limits) -> Result<Rational> {
        let frac = |a: usize, b: usize| Rational::new((a as i64).into(), (b as i64).into());
        let best = match kind {
            RatioBoundKind::Alpha | RatioBoundKind::Gamma => {
                let count = limits.check_subsets(self.n)?;
                let masks = self.vertex_masks();
                let mut best: Option<Rational> = None;
                for s in 1..count {
                    let size = s.count_ones() as usize;
                    let rho = masks.iter().map(|&e| (e & s).count_ones() as usize).max().unwrap_or(0);
                    let cand = match kind {
                        RatioBoundKind::Alpha if rho > 0 => frac(size, rho),
                        RatioBoundKind::Gamma if size > rho => frac(size, size - rho),
                        _ => continue,
                    };
                    best = Some(match best {
                        None => cand,
                        Some(b) if kind == RatioBoundKind::Alpha => b.max(cand),
                        Some(b) => b.min(cand),
                    });
                }
                best
            }
            RatioBoundKind::Beta => {
                let count = limits.check_subsets(self.edges.len())?;
                let masks = self.edge_index_masks();
                (1..count)
                    .filter_map(|z| {
                        let rt = masks.iter().map(|&v| (v & z).count_ones() as usize).min().unwrap_or(0);
                        (rt > 0).then(|| frac(z.count_ones() as usize, rt))
                    })
                    .min()
            }
        };
        best.ok_or(Error::NoAdmissibleSubset)
    }
}

/// One row of the complementation corollary: `1/param(H*) + 1/param(H̄)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamIdentity {
    pub kind: ParamKind,
    pub on_dual: Rational,
    pub on_complement: Rational,
    pub lhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementationIdentities {
    /// Indexed like [`ParamKind::ALL`]. `None` when a side is undefined, which
    /// for a nontrivial `H` only happens for matching/transversal when `H`
    /// has an isolated vertex or a complete edge.
    pub identities: Vec<Option<ParamIdentity>>,
}

impl ComplementationIdentities {
    pub fn all_defined_hold(&self) -> bool {
        self.identities.iter().flatten().all(|i| i.holds)
    }

    pub fn get(&self, kind: ParamKind) -> Option<&ParamIdentity> {
        self.identities.iter().flatten().find(|i| i.kind == kind)
    }
}

fn undefined(e: &Error) -> bool {
    matches!(e, Error::InfeasibleParameter(_) | Error::UnboundedParameter(_))
}

pub fn verify_hypergraph_complementation(h: &Hypergraph) -> Result<ComplementationIdentities> {
    if !h.classify().nontrivial {
        return Err(Error::NotNontrivial);
    }
    let (d, c) = (h.dual(), h.complement());
    let mut identities = Vec::with_capacity(4);
    for kind in ParamKind::ALL {
        let pair = d.fractional_param(kind).and_then(|a| Ok((a, c.fractional_param(kind)?)));
        match pair {
            Ok((on_dual, on_complement)) => {
                let lhs = on_dual.recip() + on_complement.recip();
                identities.push(Some(ParamIdentity {
                    kind,
                    holds: lhs.is_one(),
                    on_dual,
                    on_complement,
                    lhs,
                }));
            }
            Err(e) if undefined(&e) && matches!(kind, ParamKind::Matching | ParamKind::Transversal) => {
                identities.push(None)
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ComplementationIdentities { identities })
}

/// `p <= α <= p_f = k_f <= β <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub p: usize,
    pub alpha: Rational,
    pub p_f: Rational,
    pub k_f: Rational,
    pub beta: Rational,
    pub k: usize,
    /// The five links of the chain, left to right.
    pub links: [bool; 5],
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.links.iter().all(|&b| b)
    }
}

pub fn verify_chain(h: &Hypergraph, limits: &Limits) -> Result<ChainReport> {
    let int = |k: usize| Rational::from_integer((k as i64).into());
    let p = h.integer_param(ParamKind::Packing, limits)?;
    let k = h.integer_param(ParamKind::Covering, limits)?;
    let alpha = h.ratio_bound(RatioBoundKind::Alpha, limits)?;
    let beta = h.ratio_bound(RatioBoundKind::Beta, limits)?;
    let p_f = h.fractional_param(ParamKind::Packing)?;
    let k_f = h.fractional_param(ParamKind::Covering)?;
    let links = [
        int(p) <= alpha,
        alpha <= p_f,
        p_f == k_f,
        k_f <= beta,
        beta <= int(k),
    ];
    Ok(ChainReport {
        p,
        alpha,
        p_f,
        k_f,
        beta,
        k,
        links,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBetaReport {
    pub alpha_complement: Rational,
    pub beta_dual: Rational,
    pub lhs: Rational,
    pub holds: bool,
}

/// `1/α(H̄) + 1/β(H*)` for a nontrivial `H`.
pub fn verify_alpha_beta(h: &Hypergraph, limits: &Limits) -> Result<AlphaBetaReport> {
    if !h.classify().nontrivial {
        return Err(Error::NotNontrivial);
    }
    let alpha_complement = h.complement().ratio_bound(RatioBoundKind::Alpha, limits)?;
    let beta_dual = h.dual().ratio_bound(RatioBoundKind::Beta, limits)?;
    let lhs = alpha_complement.recip() + beta_dual.recip();
    Ok(AlphaBetaReport {
        holds: lhs.is_one(),
        alpha_complement,
        beta_dual,
        lhs,
    })
}

/// Hypergraph file: `hypergraph <n>`, then one edge per line as vertex
/// indices, or `-` for the empty edge.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty hypergraph file"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("hypergraph") {
        return Err(Error::parse(ln, "expected `hypergraph <n>`"));
    }
    let n = parse_count(ln, toks.next(), "vertex count")?;
    if toks.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens in header"));
    }
    if n == 0 {
        return Err(Error::parse(ln, "hypergraph needs at least one vertex"));
    }
    let mut edges = Vec::new();
    for (ln, line) in lines {
        if line == "-" {
            edges.push(Vec::new());
            continue;
        }
        let edge = line
            .split_whitespace()
            .map(|t| {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::parse(ln, format!("malformed vertex {t:?}")))?;
                if v >= n {
                    return Err(Error::parse(ln, format!("vertex {v} out of range")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        edges.push(edge);
    }
    if edges.is_empty() {
        return Err(Error::parse(ln, "hypergraph needs at least one edge"));
    }
    Hypergraph::new(n, edges)
}

pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {}\n", h.n);
    for e in &h.edges {
        if e.is_empty() {
            out.push('-');
        } else {
            for (i, v) in e.iter().enumerate() {
                let _ = write!(out, "{}{v}", if i == 0 { "" } else { " " });
            }
        }
        out.push('\n');
    }
    out
}

/// Incidence matrices agree entry for entry (the canonical correspondence).
pub fn same_incidence(a: &Hypergraph, b: &Hypergraph) -> bool {
    a.incidence_matrix() == b.incidence_matrix()
}
