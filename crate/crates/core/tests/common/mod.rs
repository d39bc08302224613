#![allow(dead_code)]

use ohgraph::analysis::plain_graph;
use ohgraph::{OrientedHypergraph, Sign};
use rand::seq::SliceRandom;
use rand::Rng;

fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random oriented hypergraph with no isolated vertices. Parallel incidences
/// are allowed; 0-edges may occur unless `no_empty_edges`.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_incidences: usize,
    no_empty_edges: bool,
) -> OrientedHypergraph {
    loop {
        let nv = rng.gen_range(1..=max_vertices);
        let ne = rng.gen_range(1..=max_edges);
        let floor = if no_empty_edges { nv.max(ne) } else { nv };
        if floor > max_incidences {
            continue;
        }
        let total = rng.gen_range(floor..=max_incidences);
        let mut incs: Vec<(usize, usize, Sign)> = Vec::with_capacity(total);
        for v in 0..nv {
            incs.push((v, rng.gen_range(0..ne), sign(rng)));
        }
        if no_empty_edges {
            for e in 0..ne {
                if !incs.iter().any(|i| i.1 == e) {
                    incs.push((rng.gen_range(0..nv), e, sign(rng)));
                }
            }
        }
        if incs.len() > total {
            continue;
        }
        while incs.len() < total {
            incs.push((rng.gen_range(0..nv), rng.gen_range(0..ne), sign(rng)));
        }
        incs.shuffle(rng);
        return OrientedHypergraph::from_ordinals(nv, ne, incs).expect("generated references are valid");
    }
}

/// Bouquet family: every edge sits at a single vertex with constant sign.
pub fn random_bouquet<R: Rng>(rng: &mut R, max_vertices: usize, max_incidences: usize) -> OrientedHypergraph {
    let nv = rng.gen_range(1..=max_vertices.min(max_incidences));
    let mut budget = max_incidences - nv;
    let mut incs = Vec::new();
    let mut edge = 0;
    for v in 0..nv {
        let edges_here = 1 + usize::from(budget > 0 && rng.gen_bool(0.3));
        budget -= edges_here - 1;
        for _ in 0..edges_here {
            let s = sign(rng);
            let extra = rng.gen_range(0..=budget.min(2));
            budget -= extra;
            for _ in 0..=extra {
                incs.push((v, edge, s));
            }
            edge += 1;
        }
    }
    OrientedHypergraph::from_ordinals(nv, edge, incs).expect("valid bouquet")
}

/// Balanced signed graph: vertex marks `μ`, every 2-edge `uw` gets adjacency
/// sign `μ(u)μ(w)`. Includes occasional parallel edges, positive loops and
/// 1-edges; every vertex is covered.
pub fn random_balanced_signed_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> OrientedHypergraph {
    let nv = rng.gen_range(1..=max_vertices);
    let marks: Vec<Sign> = (0..nv).map(|_| sign(rng)).collect();
    let mut incs = Vec::new();
    let mut edge = 0;
    let n_edges = rng.gen_range(0..=nv + 3);
    for _ in 0..n_edges {
        let u = rng.gen_range(0..nv);
        let w = rng.gen_range(0..nv);
        let adjacency = marks[u] * marks[w];
        let su = sign(rng);
        // adjacency sign is -σ(u)σ(w)
        let sw = -(adjacency * su);
        incs.push((u, edge, su));
        incs.push((w, edge, sw));
        edge += 1;
    }
    for v in 0..nv {
        if !incs.iter().any(|i| i.0 == v) {
            incs.push((v, edge, sign(rng)));
            edge += 1;
        }
    }
    OrientedHypergraph::from_ordinals(nv, edge, incs).expect("valid signed graph")
}

/// Random simple graph without isolated vertices, plain-graph encoded.
pub fn random_plain_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> (usize, Vec<(usize, usize)>, OrientedHypergraph) {
    loop {
        let n = rng.gen_range(2..=max_vertices);
        let p = rng.gen_range(0.25..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let covered = (0..n).all(|v| edges.iter().any(|&(a, b)| a == v || b == v));
        if covered {
            let g = plain_graph(n, &edges).expect("valid plain graph");
            return (n, edges, g);
        }
    }
}
