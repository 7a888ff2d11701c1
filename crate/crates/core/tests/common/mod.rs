//! Seeded corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use fraccomp::graphapps::{Digraph, Graph};
use fraccomp::hypergraph::Hypergraph;
use fraccomp::matroid::Matroid;
use fraccomp::ratlp::{rat, LinearProgram, LpOutcome, Rational, RationalMatrix, Sense};
use fraccomp::Limits;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn limits() -> Limits {
    Limits::default()
}

/// `max{cx : Ax <= b}` with `m, n <= 6`, entries of `c` and `A` in
/// `[-3, 3]`, `b` in `[1, 3]`.
pub fn random_lp(r: &mut impl Rng) -> LinearProgram {
    let m = r.gen_range(1..=6);
    let n = r.gen_range(1..=6);
    let rows = (0..m)
        .map(|_| (0..n).map(|_| rat(r.gen_range(-3..=3))).collect())
        .collect();
    let c = (0..n).map(|_| rat(r.gen_range(-3..=3))).collect();
    let b = (0..m).map(|_| rat(r.gen_range(1..=3))).collect();
    LinearProgram::new(Sense::Maximize, c, RationalMatrix::from_rows(rows).unwrap(), b).unwrap()
}

pub struct LpCorpus {
    /// Programs with `Opt > 1`.
    pub above_one: Vec<LinearProgram>,
    /// Programs met while sampling whose optimum is at most one.
    pub at_most_one: Vec<LinearProgram>,
    pub sampled: usize,
}

/// Samples until `count` programs with optimum above one have been found.
pub fn lp_corpus(seed: u64, count: usize) -> LpCorpus {
    let mut r = rng(seed);
    let mut corpus = LpCorpus {
        above_one: Vec::new(),
        at_most_one: Vec::new(),
        sampled: 0,
    };
    while corpus.above_one.len() < count {
        let lp = random_lp(&mut r);
        corpus.sampled += 1;
        if let LpOutcome::Optimal { value, .. } = fraccomp::ratlp::solve(&lp) {
            if value > Rational::from_integer(1.into()) {
                corpus.above_one.push(lp);
            } else {
                corpus.at_most_one.push(lp);
            }
        }
        assert!(corpus.sampled < 200 * count, "LP sampler is not finding optima above one");
    }
    corpus
}

/// Each edge is a uniform random subset, so empty and complete edges occur.
pub fn random_hypergraph(r: &mut impl Rng, max_n: usize, max_m: usize) -> Hypergraph {
    let n = r.gen_range(1..=max_n);
    let m = r.gen_range(1..=max_m);
    let edges = (0..m).map(|_| (0..n).filter(|_| r.gen_bool(0.5)).collect()).collect();
    Hypergraph::new(n, edges).unwrap()
}

pub fn hypergraph_corpus(seed: u64, count: usize, max_n: usize, max_m: usize) -> Vec<Hypergraph> {
    let mut r = rng(seed);
    (0..count).map(|_| random_hypergraph(&mut r, max_n, max_m)).collect()
}

pub fn random_digraph(r: &mut impl Rng, max_n: usize) -> Digraph {
    let n = r.gen_range(2..=max_n);
    let p = r.gen_range(0.2..0.8);
    let arcs: Vec<_> = (0..n)
        .cartesian_product(0..n)
        .filter(|&(u, v)| u != v && r.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).unwrap()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).tuple_combinations().collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap()
}

fn connected_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut seen = 1u32;
    loop {
        let mut next = seen;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 && (seen >> u & 1 == 1 || seen >> v & 1 == 1) {
                next |= 1 << u | 1 << v;
            }
        }
        if next == seen {
            return seen == (1 << n) - 1;
        }
        seen = next;
    }
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices with at least one edge, by minimising the edge mask over all
/// vertex permutations.
pub fn graph_classes(n: usize, connected_only: bool) -> Vec<Graph> {
    let ps = pairs(n);
    let index = |u: usize, v: usize| ps.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|p| ps.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 1u32..1 << ps.len() {
        if connected_only && !connected_mask(n, &ps, mask) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|t| (0..ps.len()).filter(|&i| mask >> i & 1 == 1).fold(0u32, |a, i| a | 1 << t[i]))
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(graph_from_mask(n, &ps, canon));
        }
    }
    out
}

fn gf2_rank(cols: impl IntoIterator<Item = u8>) -> usize {
    let mut basis: Vec<u8> = Vec::new();
    for mut c in cols {
        for &b in &basis {
            c = c.min(c ^ b);
        }
        if c != 0 {
            basis.push(c);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Column matroid of a random `r x n` matrix over GF(2) (`n <= 6`), with
/// bases listed explicitly and validated. Matroids with a coloop are skipped.
pub fn random_binary_matroid(r: &mut impl Rng) -> Matroid {
    random_binary_matroid_with(r, false)
}

pub fn random_binary_matroid_with(r: &mut impl Rng, allow_coloops: bool) -> Matroid {
    loop {
        let rows = r.gen_range(1..=3u32);
        let n = r.gen_range(2..=6usize);
        let cols: Vec<u8> = (0..n).map(|_| r.gen_range(0..1u8 << rows)).collect();
        let rank = gf2_rank(cols.iter().copied());
        if rank == 0 {
            continue;
        }
        let bases: Vec<Vec<usize>> = (0..n)
            .combinations(rank)
            .filter(|s| gf2_rank(s.iter().map(|&i| cols[i])) == rank)
            .collect();
        let has_coloop = (0..n).any(|e| bases.iter().all(|b| b.contains(&e)));
        if has_coloop && !allow_coloops {
            continue;
        }
        let h = Hypergraph::new(n, bases).unwrap();
        return Matroid::from_bases(&h, true).unwrap();
    }
}

pub fn vertex_covers(g: &Graph) -> Vec<u32> {
    (0u32..1 << g.num_vertices())
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .collect()
}

fn longest_family(covers: &[u32], n: usize, b: usize) -> usize {
    fn search(covers: &[u32], from: usize, used: &mut [usize], b: usize) -> usize {
        let mut best = 0;
        for i in from..covers.len() {
            let s = covers[i];
            let members: Vec<usize> = (0..used.len()).filter(|&v| s >> v & 1 == 1).collect();
            if members.iter().all(|&v| used[v] < b) {
                members.iter().for_each(|&v| used[v] += 1);
                best = best.max(1 + search(covers, i, used, b));
                members.iter().for_each(|&v| used[v] -= 1);
            }
        }
        best
    }
    search(covers, 0, &mut vec![0; n], b)
}

/// Longest multiset of vertex covers using each vertex at most `b` times,
/// by exhaustive search over the minimal covers.
pub fn brute_force_budget(g: &Graph, b: usize) -> usize {
    let covers = vertex_covers(g);
    let minimal: Vec<u32> = covers
        .iter()
        .copied()
        .filter(|&s| !covers.iter().any(|&t| t != s && t & s == t))
        .collect();
    longest_family(&minimal, g.num_vertices(), b)
}

/// Same search over every vertex cover, not only the minimal ones.
pub fn brute_force_budget_all_covers(g: &Graph, b: usize) -> usize {
    longest_family(&vertex_covers(g), g.num_vertices(), b)
}

pub fn mask_members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}
