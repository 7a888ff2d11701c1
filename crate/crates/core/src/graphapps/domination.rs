//! Neighbourhood hypergraphs of digraphs and fractional (total) domination.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::graph::{members, Digraph};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, ParamKind};
use crate::ratlp::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Closure {
    Open,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NeighborhoodSpec {
    pub side: Side,
    pub closure: Closure,
}

impl NeighborhoodSpec {
    pub const IN_OPEN: Self = Self::new(Side::In, Closure::Open);
    pub const IN_CLOSED: Self = Self::new(Side::In, Closure::Closed);
    pub const OUT_OPEN: Self = Self::new(Side::Out, Closure::Open);
    pub const OUT_CLOSED: Self = Self::new(Side::Out, Closure::Closed);

    pub const fn new(side: Side, closure: Closure) -> Self {
        NeighborhoodSpec { side, closure }
    }
}

impl fmt::Display for NeighborhoodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::In => "in",
            Side::Out => "out",
        };
        let closure = match self.closure {
            Closure::Open => "open",
            Closure::Closed => "closed",
        };
        write!(f, "{side}-{closure}")
    }
}

impl FromStr for NeighborhoodSpec {
    type Err = Error;

    /// `in-open`, `in-closed`, `out-open` or `out-closed`.
    fn from_str(s: &str) -> Result<Self> {
        let (side, closure) = s
            .split_once('-')
            .ok_or_else(|| Error::InvalidArgument(format!("bad neighbourhood spec {s:?}")))?;
        let side = match side {
            "in" => Side::In,
            "out" => Side::Out,
            _ => return Err(Error::InvalidArgument(format!("bad side {side:?}"))),
        };
        let closure = match closure {
            "open" => Closure::Open,
            "closed" => Closure::Closed,
            _ => return Err(Error::InvalidArgument(format!("bad closure {closure:?}"))),
        };
        Ok(NeighborhoodSpec { side, closure })
    }
}

fn neighborhood(d: &Digraph, v: usize, spec: NeighborhoodSpec) -> u64 {
    let open = match spec.side {
        Side::In => d.in_mask(v),
        Side::Out => d.out_mask(v),
    };
    match spec.closure {
        Closure::Open => open,
        Closure::Closed => open | 1 << v,
    }
}

/// One edge per vertex, in vertex order: the chosen neighbourhood of it.
pub fn neighborhood_hypergraph(d: &Digraph, spec: NeighborhoodSpec) -> Hypergraph {
    let edges = (0..d.num_vertices())
        .map(|v| members(neighborhood(d, v, spec)))
        .collect();
    Hypergraph::new(d.num_vertices(), edges).expect("neighbourhoods stay in range")
}

pub fn digraph_complement(d: &Digraph) -> Digraph {
    d.complement()
}

/// Fractional transversal number of the neighbourhood hypergraph.
pub fn fractional_domination(d: &Digraph, spec: NeighborhoodSpec) -> Result<Rational> {
    if let Some(v) = (0..d.num_vertices()).find(|&v| neighborhood(d, v, spec) == 0) {
        return Err(Error::NoTotalDominatingSet(v));
    }
    neighborhood_hypergraph(d, spec).fractional_param(ParamKind::Transversal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentCheck {
    /// `Γ^in_f(T)`.
    pub big_gamma_in: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularCheck {
    pub k: usize,
    /// `Γ^out_f(D)`; `None` when `k = 0`.
    pub big_gamma_out: Option<Rational>,
    pub gamma_is_n_over_k_plus_1: bool,
    pub big_gamma_is_n_over_k: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationReport {
    /// `γ^in_f(D)`.
    pub gamma_in: Rational,
    /// `Γ^out_f(D̄)`.
    pub big_gamma_out_complement: Rational,
    pub lhs: Rational,
    pub holds: bool,
    pub tournament: Option<TournamentCheck>,
    pub regular: Option<RegularCheck>,
}

pub fn verify_domination(d: &Digraph) -> Result<DominationReport> {
    if let Some(v) = d.in_universal_vertex() {
        return Err(Error::InUniversalVertex(v));
    }
    let gamma_in = fractional_domination(d, NeighborhoodSpec::IN_CLOSED)?;
    let big_gamma_out_complement = fractional_domination(&d.complement(), NeighborhoodSpec::OUT_OPEN)?;
    let lhs = gamma_in.recip() + big_gamma_out_complement.recip();

    let tournament = if d.is_tournament() {
        let big_gamma_in = fractional_domination(d, NeighborhoodSpec::IN_OPEN)?;
        Some(TournamentCheck {
            holds: (gamma_in.recip() + big_gamma_in.recip()).is_one(),
            big_gamma_in,
        })
    } else {
        None
    };

    let regular = match d.regular_degree() {
        Some(k) => {
            let n = d.num_vertices() as i64;
            let frac = |den: usize| Rational::new(n.into(), (den as i64).into());
            let big_gamma_out = if k > 0 {
                Some(fractional_domination(d, NeighborhoodSpec::OUT_OPEN)?)
            } else {
                None
            };
            Some(RegularCheck {
                k,
                gamma_is_n_over_k_plus_1: gamma_in == frac(k + 1),
                big_gamma_is_n_over_k: big_gamma_out.as_ref().map(|g| *g == frac(k)),
                big_gamma_out,
            })
        }
        None => None,
    };

    Ok(DominationReport {
        holds: lhs.is_one(),
        gamma_in,
        big_gamma_out_complement,
        lhs,
        tournament,
        regular,
    })
}
