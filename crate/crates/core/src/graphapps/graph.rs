//! Simple graphs and loopless digraphs on at most 64 vertices, stored with
//! per-vertex adjacency bitmasks.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ratlp::{content_lines, parse_count};

pub const MAX_VERTICES: usize = 64;

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("graph needs at least one vertex".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "graphs are limited to {MAX_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if let Some(&x) = [u, v].iter().find(|&&x| x >= n) {
        return Err(Error::OutOfRange { index: x, size: n });
    }
    if u == v {
        return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// `(u, v)` with `u < v`, first-occurrence order.
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Repeated edges collapse; loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            check_pair(n, u, v)?;
            let (a, b) = (u.min(v), u.max(v));
            if adj[a] >> b & 1 == 0 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                list.push((a, b));
            }
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// # Panics
    /// If `n` is 0 or above [`MAX_VERTICES`].
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("valid order")
    }

    /// # Panics
    /// If `n < 3` or `n` is above [`MAX_VERTICES`].
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid order")
    }

    /// # Panics
    /// If `n` is 0 or above [`MAX_VERTICES`].
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid order")
    }

    /// # Panics
    /// If `n` is 0 or above [`MAX_VERTICES`].
    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, []).expect("valid order")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        members(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn adj_masks(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn all(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all();
        let edges = (0..self.n).flat_map(|u| {
            let row = !self.adj[u] & all;
            (u + 1..self.n).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
        });
        Graph::new(self.n, edges).expect("same order")
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = members(frontier).into_iter().fold(0, |m, v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == self.all()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// A vertex adjacent to every other vertex.
    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] | 1 << v == self.all())
    }

    pub fn is_vertex_cover(&self, s: &[usize]) -> bool {
        let m = mask_of(s);
        self.edges.iter().all(|&(u, v)| m >> u & 1 == 1 || m >> v & 1 == 1)
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        let m = mask_of(s);
        s.iter().all(|&v| self.adj[v] & m == 0)
    }

    /// Each edge becomes a pair of opposite arcs.
    pub fn to_digraph(&self) -> Digraph {
        let arcs = self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
        Digraph::new(self.n, arcs).expect("same order")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order(n)?;
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in arcs {
            check_pair(n, u, v)?;
            if out[u] >> v & 1 == 0 {
                out[u] |= 1 << v;
                inn[v] |= 1 << u;
                list.push((u, v));
            }
        }
        Ok(Digraph { n, arcs: list, out, inn })
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u] >> v & 1 == 1
    }

    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.inn[v]
    }

    /// All loopless pairs not already arcs, in lexicographic order.
    pub fn complement(&self) -> Digraph {
        let arcs = (0..self.n).flat_map(|u| {
            (0..self.n)
                .filter(move |&v| v != u && self.out[u] >> v & 1 == 0)
                .map(move |v| (u, v))
        });
        Digraph::new(self.n, arcs).expect("same order")
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| {
            (u + 1..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u))
        })
    }

    /// `Some(k)` when every in- and out-degree equals `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.out[0].count_ones();
        (0..self.n)
            .all(|v| self.out[v].count_ones() == k && self.inn[v].count_ones() == k)
            .then_some(k as usize)
    }

    /// A vertex `v` with an arc to every other vertex, i.e. `v` lies in every
    /// closed in-neighbourhood.
    pub fn in_universal_vertex(&self) -> Option<usize> {
        let all = full_mask(self.n);
        (0..self.n).find(|&v| self.out[v] | 1 << v == all)
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    Graph(Graph),
    Digraph(Digraph),
}

impl GraphInput {
    pub fn into_digraph(self) -> Digraph {
        match self {
            GraphInput::Graph(g) => g.to_digraph(),
            GraphInput::Digraph(d) => d,
        }
    }
}

fn is_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !(l.starts_with('c') && (l.len() == 1 || l.starts_with("c "))))
        .is_some_and(|l| l.starts_with("p "))
}

fn parse_pair(ln: usize, line: &str, one_based: bool) -> Result<(usize, usize)> {
    let mut toks = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let t = toks.next().ok_or_else(|| Error::parse(ln, "expected two vertices"))?;
        let v: usize = t.parse().map_err(|_| Error::parse(ln, format!("malformed vertex {t:?}")))?;
        if one_based {
            v.checked_sub(1).ok_or_else(|| Error::parse(ln, "DIMACS vertices are 1-indexed"))
        } else {
            Ok(v)
        }
    };
    let pair = (next()?, next()?);
    if toks.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens"));
    }
    Ok(pair)
}

fn located<T>(ln: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(ln, other.to_string()),
    })
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == "c" || line.starts_with("c ") {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "p" if n.is_none() => {
                let mut toks = rest.split_whitespace();
                if !matches!(toks.next(), Some("edge" | "col")) {
                    return Err(Error::parse(ln, "expected `p edge <n> <m>`"));
                }
                let count = parse_count(ln, toks.next(), "vertex count")?;
                parse_count(ln, toks.next(), "edge count")?;
                n = Some(count);
            }
            "e" => {
                let count = n.ok_or_else(|| Error::parse(ln, "edge before `p` line"))?;
                let (u, v) = parse_pair(ln, rest, true)?;
                located(ln, check_pair(count, u, v))?;
                edges.push((u, v));
            }
            _ => return Err(Error::parse(ln, format!("unexpected DIMACS line {line:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `p edge` line"))?;
    located(0, Graph::new(n, edges))
}

/// Reads `graph <n>` / `digraph <n>` files, or DIMACS `p edge` files.
pub fn parse_graph_input(text: &str) -> Result<GraphInput> {
    if is_dimacs(text) {
        return parse_dimacs(text).map(GraphInput::Graph);
    }
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| Error::parse(0, "empty graph file"))?;
    let mut toks = header.split_whitespace();
    let directed = match toks.next() {
        Some("graph") => false,
        Some("digraph") => true,
        _ => return Err(Error::parse(ln, "expected `graph <n>` or `digraph <n>`")),
    };
    let n = parse_count(ln, toks.next(), "vertex count")?;
    if toks.next().is_some() {
        return Err(Error::parse(ln, "trailing tokens in header"));
    }
    located(ln, check_order(n))?;
    let mut pairs = Vec::new();
    for (ln, line) in lines {
        let (u, v) = parse_pair(ln, line, false)?;
        located(ln, check_pair(n, u, v))?;
        pairs.push((u, v));
    }
    Ok(if directed {
        GraphInput::Digraph(Digraph::new(n, pairs)?)
    } else {
        GraphInput::Graph(Graph::new(n, pairs)?)
    })
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_graph_input(text)? {
        GraphInput::Graph(g) => Ok(g),
        GraphInput::Digraph(_) => Err(Error::parse(1, "expected an undirected graph")),
    }
}

/// Undirected input is read as its symmetric digraph.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_graph_input(text).map(GraphInput::into_digraph)
}

fn format_pairs(header: &str, n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("{header} {n}\n");
    for (u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn format_graph(g: &Graph) -> String {
    format_pairs("graph", g.n, &g.edges)
}

pub fn format_digraph(d: &Digraph) -> String {
    format_pairs("digraph", d.n, &d.arcs)
}
