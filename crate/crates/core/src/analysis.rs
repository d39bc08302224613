//! Bounds on `perm(L)` and `det(L)`, exhaustive orientation sweeps, the
//! balanced signed graph check for `perm(A)`, and the Sachs basic-figure
//! oracle for plain graphs.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::coefficients::{scalar_summary, Objective};
use crate::contributors::visit_contributors;
use crate::error::{Error, Result};
use crate::hypergraph::{OrientedHypergraph, Sign};
use crate::polynomial::IntPolynomial;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub contributor_count: u64,
    pub perm_l: i64,
    pub det_l: i64,
    /// `-|C| < perm(L) <= |C|` and `-|C| < det(L) <= |C|`.
    pub bounds_hold: bool,
    pub lower_strict_ok: bool,
    pub upper_perm_attained: bool,
    pub upper_det_attained: bool,
    pub constant_orientation: bool,
    pub bouquet_family: bool,
    /// `upper_perm_attained == constant_orientation` and
    /// `upper_det_attained == bouquet_family`.
    pub sharpness_consistent: bool,
    pub notes: Vec<String>,
}

pub fn bounds_report(g: &OrientedHypergraph, max_contributors: u64) -> Result<BoundsReport> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(Error::PreconditionViolated(format!(
            "vertex `{}` is isolated",
            g.vertex_names()[v]
        )));
    }
    if let Some(e) = g.first_empty_edge() {
        return Err(Error::PreconditionViolated(format!("edge `{}` is a 0-edge", g.edge_names()[e])));
    }
    let s = scalar_summary(g, max_contributors)?;
    let count = s.contributors as i64;
    let lower_strict_ok = s.perm_l > -count && s.det_l > -count;
    let bounds_hold = lower_strict_ok && s.perm_l <= count && s.det_l <= count;
    let upper_perm_attained = s.perm_l == count;
    let upper_det_attained = s.det_l == count;
    let constant_orientation = g.constant_orientation() != crate::hypergraph::ConstantOrientation::Neither;
    let bouquet_family = is_bouquet_family(g);

    let mut notes = Vec::new();
    if upper_perm_attained {
        notes.push(if constant_orientation {
            "perm(L) attains |C| with a constant orientation".to_string()
        } else {
            "perm(L) attains |C| with a non-constant orientation (switching-equivalent to a constant one)".to_string()
        });
    }
    if upper_det_attained {
        notes.push("det(L) attains |C|: every contributor has an even number of positive circles".to_string());
    }
    if bouquet_family != upper_det_attained {
        notes.push("det(L) = |C| disagrees with the bouquet predicate".to_string());
    }

    Ok(BoundsReport {
        contributor_count: s.contributors,
        perm_l: s.perm_l,
        det_l: s.det_l,
        bounds_hold,
        lower_strict_ok,
        upper_perm_attained,
        upper_det_attained,
        constant_orientation,
        bouquet_family,
        sharpness_consistent: upper_det_attained == bouquet_family,
        notes,
    })
}

/// Every edge has all its incidences at one vertex, all with one sign, so
/// the only adjacencies are negative loops.
pub fn is_bouquet_family(g: &OrientedHypergraph) -> bool {
    (0..g.edge_count()).all(|e| {
        let incs = g.incidences_on(e);
        incs.windows(2).all(|w| {
            let (a, b) = (g.incidence(w[0]), g.incidence(w[1]));
            a.vertex == b.vertex && a.sign == b.sign
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationSweepResult {
    pub objective: Objective,
    pub contributor_count: u64,
    /// `values[mask]`; bit `i` of `mask` set means `σ(i) = -1`.
    pub values: Vec<i64>,
    pub max: i64,
    pub min: i64,
    /// Masks attaining `max`, ascending.
    pub argmax: Vec<u64>,
}

impl OrientationSweepResult {
    pub fn orientation_count(&self) -> usize {
        self.values.len()
    }

    /// Smallest mask attaining the maximum.
    pub fn witness(&self) -> u64 {
        self.argmax[0]
    }
}

/// Evaluates `objective` for every orientation of `g`'s underlying incidence
/// structure, in bitmask order.
///
/// The contributor set does not depend on σ. Each contributor's term is
/// `(-1)^(a + |mask ∧ x|)` where `a` is an orientation-free parity and `x`
/// marks the incidences its circles pass through an odd number of times, so
/// contributors are enumerated once and bucketed by `(a, x)`.
pub fn orientation_sweep(g: &OrientedHypergraph, objective: Objective, limits: &Limits) -> Result<OrientationSweepResult> {
    let n_inc = g.incidence_count();
    if n_inc > limits.max_incidences_sweep || n_inc > 32 {
        return Err(Error::ResourceLimit {
            what: "incidences in sweep",
            limit: limits.max_incidences_sweep.min(32) as u64,
        });
    }
    let mut buckets: HashMap<(bool, u64), i64> = HashMap::new();
    let count = visit_contributors(g, limits.max_contributors, |c| {
        let s = c.tallies(g);
        if objective.matrix == crate::coefficients::MatrixKind::Adjacency && s.bs > 0 {
            return;
        }
        let mut x = 0u64;
        let mut circle_vertices = 0usize;
        for step in c.steps().iter().filter(|st| !st.is_backstep()) {
            x ^= (1u64 << step.tail) ^ (1u64 << step.head);
            circle_vertices += 1;
        }
        let circles = s.circles();
        // (-1)^nc = (-1)^(Σ circle lengths) · (-1)^|mask ∧ x|
        let base = match objective {
            Objective::PERM_L => s.oc + circle_vertices,
            Objective::DET_L => circles + circle_vertices,
            Objective::PERM_A => circle_vertices,
            _ => s.ec + circle_vertices,
        };
        *buckets.entry((base % 2 == 1, x)).or_default() += 1;
    })?;
    let mut buckets: Vec<((bool, u64), i64)> = buckets.into_iter().collect();
    buckets.sort_unstable();

    let values: Vec<i64> = (0..1u64 << n_inc)
        .map(|mask| {
            buckets
                .iter()
                .map(|&((odd, x), mult)| {
                    if odd ^ ((mask & x).count_ones() % 2 == 1) {
                        -mult
                    } else {
                        mult
                    }
                })
                .sum()
        })
        .collect();
    let max = *values.iter().max().expect("at least one orientation");
    let min = *values.iter().min().expect("at least one orientation");
    let argmax = (0..values.len() as u64).filter(|&m| values[m as usize] == max).collect();
    Ok(OrientationSweepResult {
        objective,
        contributor_count: count,
        values,
        max,
        min,
        argmax,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedCheck {
    pub balanced: bool,
    pub perm_a: i64,
    pub backstep_free: u64,
    pub attains: bool,
}

/// For a signed graph, compares `perm(A)` with the number of backstep-free
/// contributors. A balanced graph that misses equality is reported as a
/// verification mismatch; unbalanced graphs only report the comparison.
pub fn balanced_perm_a_check(g: &OrientedHypergraph, max_contributors: u64) -> Result<BalancedCheck> {
    let balanced = g.is_balanced_signed_graph()?;
    let s = scalar_summary(g, max_contributors)?;
    let attains = s.perm_a == s.backstep_free as i64;
    if balanced && !attains {
        return Err(Error::VerificationMismatch {
            what: "perm_A on a balanced signed graph".into(),
            contributor: s.perm_a.to_string(),
            oracle: s.backstep_free.to_string(),
        });
    }
    Ok(BalancedCheck {
        balanced,
        perm_a: s.perm_a,
        backstep_free: s.backstep_free,
        attains,
    })
}

/// Encodes a plain (multi)graph: each edge `(u, w)` becomes a 2-edge with
/// signs `+1` at `u` and `-1` at `w`, so every adjacency is positive.
pub fn plain_graph(n_vertices: usize, edges: &[(usize, usize)]) -> Result<OrientedHypergraph> {
    let incidences = edges
        .iter()
        .enumerate()
        .flat_map(|(e, &(u, w))| [(u, e, Sign::Plus), (w, e, Sign::Minus)])
        .collect();
    OrientedHypergraph::from_ordinals(n_vertices, edges.len(), incidences)
}

/// Recovers the edge list of a plain-graph encoding.
pub fn plain_graph_edges(g: &OrientedHypergraph) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        let name = &g.edge_names()[e];
        let [i, j] = g.incidences_on(e) else {
            return Err(Error::NotAPlainGraph(format!("edge `{name}` does not have size 2")));
        };
        let (a, b) = (g.incidence(*i), g.incidence(*j));
        if a.vertex == b.vertex {
            return Err(Error::NotAPlainGraph(format!("edge `{name}` is a loop")));
        }
        if g.incidence_pair_sign(*i, *j) != Sign::Plus {
            return Err(Error::NotAPlainGraph(format!("edge `{name}` has a negative adjacency")));
        }
        out.push((a.vertex, b.vertex));
    }
    Ok(out)
}

const MAX_SACHS_EDGES: usize = 24;

/// `det(xI − A)` for a plain graph via basic figures: vertex-disjoint
/// unions of single edges and cycles, each figure `U` covering `n − k`
/// vertices adding `(-1)^p(U) · 2^c(U)` to the coefficient of `x^k`. With
/// parallel edges, two of them form a 2-cycle.
pub fn sachs_coefficients(g: &OrientedHypergraph) -> Result<IntPolynomial> {
    let edges = plain_graph_edges(g)?;
    let n = g.vertex_count();
    let m = edges.len();
    if m > MAX_SACHS_EDGES {
        return Err(Error::ResourceLimit {
            what: "edges for basic-figure enumeration",
            limit: MAX_SACHS_EDGES as u64,
        });
    }
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for subset in 0u32..(1u32 << m) {
        if let Some((covered, components, cycles)) = basic_figure(n, &edges, subset) {
            let mut term = BigInt::from(1) << cycles;
            if components % 2 == 1 {
                term = -term;
            }
            coeffs[n - covered] += term;
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `(covered vertices, components, cycles)` if the chosen edges form a basic
/// figure.
fn basic_figure(n: usize, edges: &[(usize, usize)], subset: u32) -> Option<(usize, usize, usize)> {
    let mut degree = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, &(u, w)) in edges.iter().enumerate() {
        if subset >> e & 1 == 0 {
            continue;
        }
        degree[u] += 1;
        degree[w] += 1;
        if degree[u] > 2 || degree[w] > 2 {
            return None;
        }
        let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
        parent[ru] = rw;
    }
    // per component root: (vertices, edges, any degree-1 vertex)
    let mut comps: HashMap<usize, (usize, usize, bool)> = HashMap::new();
    for v in (0..n).filter(|&v| degree[v] > 0) {
        let r = find(&mut parent, v);
        let entry = comps.entry(r).or_default();
        entry.0 += 1;
        entry.1 += degree[v];
        entry.2 |= degree[v] == 1;
    }
    let mut covered = 0;
    let mut cycles = 0;
    for &(verts, degree_sum, has_leaf) in comps.values() {
        let edge_count = degree_sum / 2;
        if has_leaf {
            if verts != 2 || edge_count != 1 {
                return None;
            }
        } else {
            cycles += 1;
        }
        covered += verts;
    }
    Some((covered, comps.len(), cycles))
}
