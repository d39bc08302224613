//! Contributors: one directed 1-path out of every vertex such that the
//! heads again cover every vertex exactly once.
//!
//! A contributor is stored per vertex as a [`Step`] `(tail, head)` of
//! incidence ids: `tail` sits at the vertex, `head` lies on the same edge.
//! `tail == head` is a backstep. The head map is a permutation of the
//! vertices; its fixed points are backsteps or loops, and its longer cycles
//! are circles whose sign is the product of the adjacency signs traversed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypergraph::{OrientedHypergraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub tail: usize,
    pub head: usize,
}

impl Step {
    pub fn is_backstep(self) -> bool {
        self.tail == self.head
    }

    pub fn reversed(self) -> Step {
        Step {
            tail: self.head,
            head: self.tail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Contributor {
    steps: Vec<Step>,
}

impl Contributor {
    /// Validating constructor; `steps[v]` is the step out of vertex `v`.
    pub fn new(g: &OrientedHypergraph, steps: Vec<Step>) -> Result<Self> {
        let wrapped: Vec<Option<Step>> = steps.iter().copied().map(Some).collect();
        validate(g, &wrapped)?;
        Ok(Contributor { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn head_map(&self, g: &OrientedHypergraph) -> Vec<usize> {
        self.steps.iter().map(|s| g.incidence(s.head).vertex).collect()
    }

    pub fn backstep_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_backstep()).count()
    }

    pub fn stats(&self, g: &OrientedHypergraph) -> ContributorStats {
        let wrapped: Vec<Option<Step>> = self.steps.iter().copied().map(Some).collect();
        compute_stats(g, &wrapped)
    }

    /// Same counts as [`stats`](Self::stats), allocation-free for up to 64
    /// vertices.
    pub fn tallies(&self, g: &OrientedHypergraph) -> Tallies {
        let n = self.steps.len();
        if n > 64 {
            return self.stats(g).tallies();
        }
        let mut t = Tallies::default();
        let mut seen = 0u64;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            seen |= 1 << start;
            let first = self.steps[start];
            let mut v = g.incidence(first.head).vertex;
            if v == start && first.is_backstep() {
                t.bs += 1;
                continue;
            }
            let mut len = 1;
            let mut negative = g.incidence_pair_sign(first.tail, first.head).is_negative();
            while v != start {
                seen |= 1 << v;
                let s = self.steps[v];
                negative ^= g.incidence_pair_sign(s.tail, s.head).is_negative();
                len += 1;
                v = g.incidence(s.head).vertex;
            }
            if len % 2 == 0 {
                t.ec += 1;
            } else {
                t.oc += 1;
            }
            if negative {
                t.nc += 1;
            } else {
                t.pc += 1;
            }
        }
        t
    }

    pub fn as_sub(&self) -> SubContributor {
        SubContributor {
            steps: self.steps.iter().copied().map(Some).collect(),
        }
    }
}

/// A contributor with some backsteps deleted. Deleted vertices stay in the
/// vertex set as isolated vertices (`None`). Equality is by value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubContributor {
    steps: Vec<Option<Step>>,
}

impl SubContributor {
    pub fn steps(&self) -> &[Option<Step>] {
        &self.steps
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_none())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn stats(&self, g: &OrientedHypergraph) -> ContributorStats {
        compute_stats(g, &self.steps)
    }

    /// Number of contributors of `g` that collapse onto this element when
    /// exactly its isolated vertices' backsteps are deleted.
    pub fn extension_count(&self, g: &OrientedHypergraph) -> u64 {
        self.isolated_vertices()
            .into_iter()
            .map(|v| g.incidences_at(v).len() as u64)
            .product()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    /// Vertices in traversal order, starting from the smallest.
    pub vertices: Vec<usize>,
    pub sign: Sign,
    /// A 2-circle that runs one adjacency out and straight back.
    pub degenerate: bool,
}

impl Circle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ContributorStats {
    pub bs: usize,
    pub circles: Vec<Circle>,
    pub ec: usize,
    pub oc: usize,
    pub pc: usize,
    pub nc: usize,
    /// Cycle decomposition of the head map over non-isolated vertices,
    /// fixed points included, each cycle starting at its smallest vertex.
    pub permutation: Vec<Vec<usize>>,
}

impl ContributorStats {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn tallies(&self) -> Tallies {
        Tallies {
            bs: self.bs,
            ec: self.ec,
            oc: self.oc,
            pc: self.pc,
            nc: self.nc,
        }
    }
}

/// The counts every sign formula needs, without the circle list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Tallies {
    pub bs: usize,
    pub ec: usize,
    pub oc: usize,
    pub pc: usize,
    pub nc: usize,
}

impl Tallies {
    pub fn circles(&self) -> usize {
        self.ec + self.oc
    }
}

fn validate(g: &OrientedHypergraph, steps: &[Option<Step>]) -> Result<()> {
    if steps.len() != g.vertex_count() {
        return Err(Error::InvalidContributor(format!(
            "{} steps for {} vertices",
            steps.len(),
            g.vertex_count()
        )));
    }
    let n_inc = g.incidence_count();
    let mut hit = vec![false; g.vertex_count()];
    for (v, step) in steps.iter().enumerate() {
        let Some(step) = step else { continue };
        if step.tail >= n_inc || step.head >= n_inc {
            return Err(Error::InvalidContributor(format!("incidence out of range at vertex {v}")));
        }
        let (tail, head) = (g.incidence(step.tail), g.incidence(step.head));
        if tail.vertex != v {
            return Err(Error::InvalidContributor(format!(
                "tail incidence {} is not at vertex {v}",
                step.tail
            )));
        }
        if tail.edge != head.edge {
            return Err(Error::InvalidContributor(format!(
                "incidences {} and {} lie on different edges",
                step.tail, step.head
            )));
        }
        if steps[head.vertex].is_none() || std::mem::replace(&mut hit[head.vertex], true) {
            return Err(Error::InvalidContributor("head map is not a bijection".into()));
        }
    }
    Ok(())
}

/// Statistics for a contributor given as per-vertex steps; `None` marks an
/// isolated vertex. Returns `InvalidContributor` on malformed input.
pub fn stats(g: &OrientedHypergraph, steps: &[Option<Step>]) -> Result<ContributorStats> {
    validate(g, steps)?;
    Ok(compute_stats(g, steps))
}

fn compute_stats(g: &OrientedHypergraph, steps: &[Option<Step>]) -> ContributorStats {
    let head_vertex = |v: usize| g.incidence(steps[v].expect("non-isolated").head).vertex;
    let mut out = ContributorStats::default();
    let mut seen = vec![false; steps.len()];
    for start in 0..steps.len() {
        if seen[start] || steps[start].is_none() {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut v = head_vertex(start);
        while v != start {
            seen[v] = true;
            cycle.push(v);
            v = head_vertex(v);
        }
        out.permutation.push(cycle.clone());

        if cycle.len() == 1 && steps[start].expect("non-isolated").is_backstep() {
            out.bs += 1;
            continue;
        }
        let sign = cycle.iter().fold(Sign::Plus, |acc, &u| {
            let s = steps[u].expect("non-isolated");
            acc * g.incidence_pair_sign(s.tail, s.head)
        });
        let degenerate = cycle.len() == 2 && steps[cycle[1]] == steps[cycle[0]].map(Step::reversed);
        if cycle.len() % 2 == 0 {
            out.ec += 1;
        } else {
            out.oc += 1;
        }
        if sign.is_negative() {
            out.nc += 1;
        } else {
            out.pc += 1;
        }
        out.circles.push(Circle {
            vertices: cycle,
            sign,
            degenerate,
        });
    }
    out
}

/// Streams every contributor of `g` to `visit` in canonical order: vertices
/// in order, tail then head incidence ids ascending, pruning repeated heads.
/// Returns the number visited; fails past `max` contributors.
pub fn visit_contributors<F>(g: &OrientedHypergraph, max: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&Contributor),
{
    g.require_no_isolated_vertices()?;
    let mut state = Search {
        g,
        used: vec![false; g.vertex_count()],
        current: Contributor {
            steps: Vec::with_capacity(g.vertex_count()),
        },
        count: 0,
        max,
    };
    state.descend(&mut visit)?;
    Ok(state.count)
}

struct Search<'a> {
    g: &'a OrientedHypergraph,
    used: Vec<bool>,
    current: Contributor,
    count: u64,
    max: u64,
}

impl Search<'_> {
    fn descend(&mut self, visit: &mut dyn FnMut(&Contributor)) -> Result<()> {
        let v = self.current.steps.len();
        if v == self.g.vertex_count() {
            if self.count >= self.max {
                return Err(Error::ResourceLimit {
                    what: "contributors",
                    limit: self.max,
                });
            }
            self.count += 1;
            debug_assert!(self.used.iter().all(|&u| u), "head map must be a bijection");
            visit(&self.current);
            return Ok(());
        }
        let g = self.g;
        for &tail in g.incidences_at(v) {
            for &head in g.incidences_on(g.incidence(tail).edge) {
                let w = g.incidence(head).vertex;
                if self.used[w] {
                    continue;
                }
                self.used[w] = true;
                self.current.steps.push(Step { tail, head });
                let res = self.descend(visit);
                self.current.steps.pop();
                self.used[w] = false;
                res?;
            }
        }
        Ok(())
    }
}

pub fn enumerate_contributors(g: &OrientedHypergraph, max: u64) -> Result<Vec<Contributor>> {
    let mut out = Vec::new();
    visit_contributors(g, max, |c| out.push(c.clone()))?;
    Ok(out)
}

pub fn count_contributors(g: &OrientedHypergraph, max: u64) -> Result<u64> {
    visit_contributors(g, max, |_| {})
}

/// Partitions contributors by their exact head permutation.
pub fn group_by_permutomorphism(
    g: &OrientedHypergraph,
    contributors: &[Contributor],
) -> BTreeMap<Vec<usize>, Vec<Contributor>> {
    let mut classes: BTreeMap<Vec<usize>, Vec<Contributor>> = BTreeMap::new();
    for c in contributors {
        classes.entry(c.head_map(g)).or_default().push(c.clone());
    }
    classes
}

fn backstep_vertices(c: &Contributor) -> Vec<usize> {
    c.steps
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_backstep())
        .map(|(v, _)| v)
        .collect()
}

fn delete_steps(c: &Contributor, vertices: &[usize]) -> SubContributor {
    let mut sub = c.as_sub();
    for &v in vertices {
        sub.steps[v] = None;
    }
    sub
}

fn check_k(g: &OrientedHypergraph, k: usize) -> Result<()> {
    if k > g.vertex_count() {
        return Err(Error::PreconditionViolated(format!(
            "k = {k} exceeds the vertex count {}",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Distinct sub-contributors obtained from contributors with exactly `k`
/// backsteps by deleting all of them.
pub fn enumerate_hat_eq(g: &OrientedHypergraph, k: usize, max: u64) -> Result<Vec<SubContributor>> {
    check_k(g, k)?;
    let mut set = BTreeSet::new();
    visit_contributors(g, max, |c| {
        let bs = backstep_vertices(c);
        if bs.len() == k {
            set.insert(delete_steps(c, &bs));
        }
    })?;
    Ok(set.into_iter().collect())
}

/// Distinct sub-contributors obtained from contributors with at least `k`
/// backsteps by deleting any `k` of them; the rest stay in place.
pub fn enumerate_hat_geq(g: &OrientedHypergraph, k: usize, max: u64) -> Result<Vec<SubContributor>> {
    check_k(g, k)?;
    let mut set = BTreeSet::new();
    visit_contributors(g, max, |c| {
        for chosen in backstep_vertices(c).into_iter().combinations(k) {
            set.insert(delete_steps(c, &chosen));
        }
    })?;
    Ok(set.into_iter().collect())
}

/// Hat sets indexed by `k`.
pub type HatFamily = Vec<BTreeSet<SubContributor>>;

/// Both hat families for every `k` in one traversal:
/// `(eq[k], geq[k])` for `k = 0..=|V|`.
pub fn hat_families(g: &OrientedHypergraph, max: u64) -> Result<(HatFamily, HatFamily)> {
    let n = g.vertex_count();
    let mut eq = vec![BTreeSet::new(); n + 1];
    let mut geq = vec![BTreeSet::new(); n + 1];
    visit_contributors(g, max, |c| {
        let bs = backstep_vertices(c);
        for chosen in bs.iter().copied().powerset() {
            let k = chosen.len();
            let sub = delete_steps(c, &chosen);
            if k == bs.len() {
                eq[k].insert(sub.clone());
            }
            geq[k].insert(sub);
        }
    })?;
    Ok((eq, geq))
}

/// Streams every element of every hat family exactly once, without
/// materializing sets.
///
/// A sub-contributor with isolated set `S` arises from every contributor
/// that agrees with it off `S` and has a backstep at each vertex of `S`, on
/// any of that vertex's incidences. Exactly one of those uses the first
/// incidence at every vertex of `S`; only that representative is emitted.
/// `visit(k, exact, tallies)` receives `k = |S|`, whether `S` was all of the
/// contributor's backsteps (membership in `Ĉ₌ₖ`), and the element's tallies
/// (every element is in `Ĉ≥ₖ`).
pub fn visit_hat_elements<F>(g: &OrientedHypergraph, max: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(usize, bool, Tallies),
{
    visit_contributors(g, max, |c| {
        let t = c.tallies(g);
        let backsteps = backstep_vertices(c);
        let canonical: Vec<usize> = backsteps
            .iter()
            .copied()
            .filter(|&v| c.steps[v].tail == g.incidences_at(v)[0])
            .collect();
        let all_canonical = canonical.len() == backsteps.len();
        for k in 0..=canonical.len() {
            let remaining = Tallies { bs: t.bs - k, ..t };
            let exact = all_canonical && k == backsteps.len();
            // number of k-subsets of the canonical backsteps
            for _ in 0..binomial(canonical.len(), k) {
                visit(k, exact, remaining);
            }
        }
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Cycle notation with vertex names, fixed points included: `(v1 v2)(v3)`.
pub fn cycle_notation(g: &OrientedHypergraph, permutation: &[Vec<usize>]) -> String {
    let names = g.vertex_names();
    let mut out = String::new();
    for cycle in permutation {
        let _ = write!(out, "({})", cycle.iter().map(|&v| names[v].as_str()).join(" "));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
