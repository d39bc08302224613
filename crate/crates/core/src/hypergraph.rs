//! Oriented hypergraphs: vertices, edges and signed incidences.
//!
//! Every element is addressed by its ordinal in input order. Incidences are
//! atoms in their own right: two incidences with the same vertex and edge are
//! *parallel* and remain distinct, which is what separates a loop from a
//! backstep.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Orientation of a single incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }

    /// Accepts `+`, `-`, `+1`, `-1` and `1`.
    pub fn parse(s: &str) -> Result<Sign> {
        match s {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other.to_string())),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub id: usize,
    pub vertex: usize,
    pub edge: usize,
    pub sign: Sign,
}

/// `(v, i, e, j, w)`: vertex `v` reaches `w` through distinct incidences
/// `i` and `j` on edge `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedAdjacency {
    pub tail_vertex: usize,
    pub tail_incidence: usize,
    pub edge: usize,
    pub head_incidence: usize,
    pub head_vertex: usize,
}

impl DirectedAdjacency {
    pub fn reversed(self) -> DirectedAdjacency {
        DirectedAdjacency {
            tail_vertex: self.head_vertex,
            tail_incidence: self.head_incidence,
            edge: self.edge,
            head_incidence: self.tail_incidence,
            head_vertex: self.tail_vertex,
        }
    }

    pub fn is_loop(self) -> bool {
        self.tail_vertex == self.head_vertex
    }
}

/// Whether every incidence carries the same sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantOrientation {
    Extroverted,
    Introverted,
    Neither,
}

/// An oriented hypergraph with total orders on vertices, edges and
/// incidences fixed at construction. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedHypergraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<Incidence>,
    at_vertex: Vec<Vec<usize>>,
    on_edge: Vec<Vec<usize>>,
}

/// Name-based construction in document order.
#[derive(Debug, Clone, Default)]
pub struct HypergraphBuilder {
    vertices: Vec<String>,
    edges: Vec<String>,
    incidences: Vec<(String, String, i64)>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn edge(mut self, name: impl Into<String>) -> Self {
        self.edges.push(name.into());
        self
    }

    pub fn incidence(mut self, vertex: impl Into<String>, edge: impl Into<String>, sign: i64) -> Self {
        self.incidences.push((vertex.into(), edge.into(), sign));
        self
    }

    pub fn push_vertex(&mut self, name: impl Into<String>) {
        self.vertices.push(name.into());
    }

    pub fn push_edge(&mut self, name: impl Into<String>) {
        self.edges.push(name.into());
    }

    pub fn push_incidence(&mut self, vertex: impl Into<String>, edge: impl Into<String>, sign: i64) {
        self.incidences.push((vertex.into(), edge.into(), sign));
    }

    pub fn build(self) -> Result<OrientedHypergraph> {
        let vertex_index = index_names(&self.vertices, "vertex")?;
        let edge_index = index_names(&self.edges, "edge")?;
        let mut raw = Vec::with_capacity(self.incidences.len());
        for (id, (v, e, s)) in self.incidences.into_iter().enumerate() {
            let vertex = *vertex_index.get(v.as_str()).ok_or(Error::DanglingReference {
                incidence: id,
                kind: "vertex",
                name: v.clone(),
            })?;
            let edge = *edge_index.get(e.as_str()).ok_or(Error::DanglingReference {
                incidence: id,
                kind: "edge",
                name: e.clone(),
            })?;
            raw.push((vertex, edge, Sign::from_value(s)?));
        }
        OrientedHypergraph::from_parts(self.vertices, self.edges, raw)
    }
}

fn index_names<'a>(names: &'a [String], kind: &'static str) -> Result<HashMap<&'a str, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(index)
}

impl OrientedHypergraph {
    /// Builds from ordinal incidences `(vertex, edge, sign)`; incidence ids
    /// follow slice order.
    pub fn from_parts(
        vertices: Vec<String>,
        edges: Vec<String>,
        incidences: Vec<(usize, usize, Sign)>,
    ) -> Result<Self> {
        index_names(&vertices, "vertex")?;
        index_names(&edges, "edge")?;
        let mut at_vertex = vec![Vec::new(); vertices.len()];
        let mut on_edge = vec![Vec::new(); edges.len()];
        let mut list = Vec::with_capacity(incidences.len());
        for (id, (vertex, edge, sign)) in incidences.into_iter().enumerate() {
            if vertex >= vertices.len() {
                return Err(Error::DanglingReference {
                    incidence: id,
                    kind: "vertex",
                    name: format!("#{vertex}"),
                });
            }
            if edge >= edges.len() {
                return Err(Error::DanglingReference {
                    incidence: id,
                    kind: "edge",
                    name: format!("#{edge}"),
                });
            }
            at_vertex[vertex].push(id);
            on_edge[edge].push(id);
            list.push(Incidence {
                id,
                vertex,
                edge,
                sign,
            });
        }
        Ok(OrientedHypergraph {
            vertices,
            edges,
            incidences: list,
            at_vertex,
            on_edge,
        })
    }

    /// Convenience constructor with generated names `v1..`, `e1..`.
    pub fn from_ordinals(n_vertices: usize, n_edges: usize, incidences: Vec<(usize, usize, Sign)>) -> Result<Self> {
        let vertices = (1..=n_vertices).map(|i| format!("v{i}")).collect();
        let edges = (1..=n_edges).map(|i| format!("e{i}")).collect();
        Self::from_parts(vertices, edges, incidences)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn incidence_count(&self) -> usize {
        self.incidences.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edges
    }

    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn incidence(&self, id: usize) -> &Incidence {
        &self.incidences[id]
    }

    /// Incidence ids at `v`, ascending.
    pub fn incidences_at(&self, v: usize) -> &[usize] {
        &self.at_vertex[v]
    }

    /// Incidence ids on `e`, ascending.
    pub fn incidences_on(&self, e: usize) -> &[usize] {
        &self.on_edge[e]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownElement {
                kind: "vertex",
                name: name.to_string(),
            })
    }

    pub fn edge_index(&self, name: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement {
                kind: "edge",
                name: name.to_string(),
            })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement {
                kind: "vertex",
                name: format!("#{v}"),
            })
        }
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::UnknownElement {
                kind: "edge",
                name: format!("#{e}"),
            })
        }
    }

    /// Number of incidences at `v`, parallel incidences counted separately.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.at_vertex[v].len())
    }

    /// Number of incidences on `e`.
    pub fn size(&self, e: usize) -> Result<usize> {
        self.check_edge(e)?;
        Ok(self.on_edge[e].len())
    }

    /// All directed adjacencies with tail `v`, loops included, ordered by
    /// tail incidence id then head incidence id.
    pub fn adjacencies(&self, v: usize) -> Result<Vec<DirectedAdjacency>> {
        self.check_vertex(v)?;
        let mut out = Vec::new();
        for &i in &self.at_vertex[v] {
            let edge = self.incidences[i].edge;
            for &j in &self.on_edge[edge] {
                if i != j {
                    out.push(DirectedAdjacency {
                        tail_vertex: v,
                        tail_incidence: i,
                        edge,
                        head_incidence: j,
                        head_vertex: self.incidences[j].vertex,
                    });
                }
            }
        }
        Ok(out)
    }

    /// `-σ(i)σ(j)`.
    pub fn adjacency_sign(&self, adj: &DirectedAdjacency) -> Sign {
        self.incidence_pair_sign(adj.tail_incidence, adj.head_incidence)
    }

    /// `-σ(i)σ(j)` for any two incidence ids. For `i == j` this is the
    /// backstep weight `-1`.
    pub fn incidence_pair_sign(&self, i: usize, j: usize) -> Sign {
        -(self.incidences[i].sign * self.incidences[j].sign)
    }

    pub fn constant_orientation(&self) -> ConstantOrientation {
        if self.incidences.iter().all(|i| i.sign == Sign::Plus) {
            ConstantOrientation::Extroverted
        } else if self.incidences.iter().all(|i| i.sign == Sign::Minus) {
            ConstantOrientation::Introverted
        } else {
            ConstantOrientation::Neither
        }
    }

    /// Removes the vertices in `deleted` and all incidences at them. Edges are
    /// kept unless `drop_empty_edges` is set and they end up with no
    /// incidences. Surviving elements keep their relative order.
    pub fn weak_delete(&self, deleted: &[usize], drop_empty_edges: bool) -> Result<Self> {
        let mut gone = vec![false; self.vertices.len()];
        for &v in deleted {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let mut vertex_map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, name) in self.vertices.iter().enumerate() {
            if !gone[v] {
                vertex_map[v] = vertices.len();
                vertices.push(name.clone());
            }
        }
        let kept: Vec<&Incidence> = self.incidences.iter().filter(|i| !gone[i.vertex]).collect();
        let mut edge_map = vec![usize::MAX; self.edges.len()];
        let mut edges = Vec::new();
        for (e, name) in self.edges.iter().enumerate() {
            let occupied = kept.iter().any(|i| i.edge == e);
            if occupied || !drop_empty_edges {
                edge_map[e] = edges.len();
                edges.push(name.clone());
            }
        }
        let incidences = kept
            .into_iter()
            .map(|i| (vertex_map[i.vertex], edge_map[i.edge], i.sign))
            .collect();
        Self::from_parts(vertices, edges, incidences)
    }

    /// Same underlying incidence structure with signs taken from `mask`:
    /// bit `id` set means `σ(id) = -1`.
    pub fn with_orientation_mask(&self, mask: u64) -> Self {
        let mut out = self.clone();
        for inc in &mut out.incidences {
            inc.sign = Sign::from_parity((mask >> inc.id) & 1 == 1);
        }
        out
    }

    /// Bitmask of the current orientation, same encoding as
    /// [`with_orientation_mask`](Self::with_orientation_mask).
    pub fn orientation_mask(&self) -> u64 {
        self.incidences
            .iter()
            .filter(|i| i.sign.is_negative())
            .fold(0, |m, i| m | (1u64 << i.id))
    }

    pub fn with_signs_negated(&self) -> Self {
        let mut out = self.clone();
        for inc in &mut out.incidences {
            inc.sign = -inc.sign;
        }
        out
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        self.at_vertex.iter().position(|l| l.is_empty())
    }

    pub fn first_empty_edge(&self) -> Option<usize> {
        self.on_edge.iter().position(|l| l.is_empty())
    }

    pub fn require_no_isolated_vertices(&self) -> Result<()> {
        match self.first_isolated_vertex() {
            Some(v) => Err(Error::IsolatedVertex(self.vertices[v].clone())),
            None => Ok(()),
        }
    }

    /// Balance test for signed graphs: every circle has positive sign.
    ///
    /// Marks each vertex `±1` along a spanning forest and checks every
    /// 2-edge sign equals the product of its endpoint marks. 1-edges and
    /// 0-edges carry no circles and are ignored.
    pub fn is_balanced_signed_graph(&self) -> Result<bool> {
        for (e, incs) in self.on_edge.iter().enumerate() {
            if incs.len() > 2 {
                return Err(Error::NotASignedGraph(self.edges[e].clone()));
            }
        }
        let n = self.vertices.len();
        // (neighbor, edge sign) lists
        let mut nbrs: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
        for incs in &self.on_edge {
            if let [i, j] = incs[..] {
                let s = self.incidence_pair_sign(i, j);
                let (a, b) = (self.incidences[i].vertex, self.incidences[j].vertex);
                nbrs[a].push((b, s));
                if a != b {
                    nbrs[b].push((a, s));
                }
            }
        }
        let mut mark: Vec<Option<Sign>> = vec![None; n];
        for root in 0..n {
            if mark[root].is_some() {
                continue;
            }
            mark[root] = Some(Sign::Plus);
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                let mu = mark[u].expect("marked on push");
                for &(w, s) in &nbrs[u] {
                    let want = mu * s;
                    match mark[w] {
                        None => {
                            mark[w] = Some(want);
                            stack.push(w);
                        }
                        Some(m) if m != want => return Ok(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A weak walk of length `k`: `k + 1` vertices, `k` edges and `2k`
/// incidences, step `h` entering edge `edges[h]` through
/// `incidences[2h]` and leaving through `incidences[2h + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakWalk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub incidences: Vec<usize>,
}

impl WeakWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `(-1)^⌊n/2⌋ ∏ σ(i)` with `n = 2k` incidences.
    pub fn sign(&self, g: &OrientedHypergraph) -> Sign {
        let odd = self
            .incidences
            .iter()
            .filter(|&&i| g.incidence(i).sign.is_negative())
            .count()
            % 2
            == 1;
        Sign::from_parity(odd) * Sign::from_parity((self.incidences.len() / 2) % 2 == 1)
    }

    pub fn backstep_count(&self) -> usize {
        self.incidences.chunks(2).filter(|p| p[0] == p[1]).count()
    }
}

impl OrientedHypergraph {
    /// All weak walks of length `k` from `v` to `w`, depth-first over
    /// incidence choices in id order. Fails once more than `max_walks`
    /// walks would be produced.
    pub fn weak_walks(&self, v: usize, w: usize, k: usize, max_walks: u64) -> Result<Vec<WeakWalk>> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let mut out = Vec::new();
        let mut walk = WeakWalk {
            vertices: vec![v],
            edges: Vec::new(),
            incidences: Vec::new(),
        };
        self.walk_dfs(&mut walk, w, k, &mut |walk| {
            if out.len() as u64 >= max_walks {
                return Err(Error::ResourceLimit {
                    what: "weak walks",
                    limit: max_walks,
                });
            }
            out.push(walk.clone());
            Ok(())
        })?;
        Ok(out)
    }

    /// `#positive − #negative` weak walks of length `k` from `v` to `w`,
    /// by enumeration.
    pub fn signed_walk_count(&self, v: usize, w: usize, k: usize, max_walks: u64) -> Result<i64> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        let mut total = 0i64;
        let mut seen = 0u64;
        let mut walk = WeakWalk {
            vertices: vec![v],
            edges: Vec::new(),
            incidences: Vec::new(),
        };
        self.walk_dfs(&mut walk, w, k, &mut |walk| {
            seen += 1;
            if seen > max_walks {
                return Err(Error::ResourceLimit {
                    what: "weak walks",
                    limit: max_walks,
                });
            }
            total += walk.sign(self).value();
            Ok(())
        })?;
        Ok(total)
    }

    fn walk_dfs(
        &self,
        walk: &mut WeakWalk,
        target: usize,
        remaining: usize,
        emit: &mut dyn FnMut(&WeakWalk) -> Result<()>,
    ) -> Result<()> {
        let here = *walk.vertices.last().expect("walk starts at a vertex");
        if remaining == 0 {
            if here == target {
                emit(walk)?;
            }
            return Ok(());
        }
        for &i in &self.at_vertex[here] {
            let edge = self.incidences[i].edge;
            for &j in &self.on_edge[edge] {
                walk.edges.push(edge);
                walk.incidences.push(i);
                walk.incidences.push(j);
                walk.vertices.push(self.incidences[j].vertex);
                self.walk_dfs(walk, target, remaining - 1, emit)?;
                walk.vertices.pop();
                walk.incidences.pop();
                walk.incidences.pop();
                walk.edges.pop();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{t3, x3};

    fn loop_vertex(s1: i64, s2: i64) -> OrientedHypergraph {
        HypergraphBuilder::new()
            .vertex("v")
            .edge("e")
            .incidence("v", "e", s1)
            .incidence("v", "e", s2)
            .build()
            .unwrap()
    }

    #[test]
    fn build_errors() {
        let err = HypergraphBuilder::new()
            .vertex("v1")
            .edge("e")
            .incidence("v9", "e", 1)
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::DanglingReference { kind: "vertex", .. }));

        let err = HypergraphBuilder::new().vertex("a").vertex("a").build().unwrap_err();
        assert!(matches!(err, Error::DuplicateName { .. }));

        let err = HypergraphBuilder::new()
            .vertex("a")
            .edge("e")
            .incidence("a", "e", 2)
            .build()
            .unwrap_err();
        assert_eq!(err, Error::InvalidSign("2".into()));
    }

    #[test]
    fn degrees_and_sizes() {
        let g = t3();
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(g.size(0).unwrap(), 2);
        let x = x3();
        assert_eq!(x.degree(0).unwrap(), 1);
        assert_eq!(x.size(0).unwrap(), 3);
        assert_eq!(loop_vertex(1, 1).degree(0).unwrap(), 2);
        assert!(matches!(g.degree(7), Err(Error::UnknownElement { .. })));
    }

    #[test]
    fn adjacency_lists() {
        let x = x3();
        let adj = x.adjacencies(0).unwrap();
        assert_eq!(adj.len(), 2);
        assert_eq!(adj.iter().map(|a| a.head_vertex).collect::<Vec<_>>(), vec![1, 2]);

        let l = loop_vertex(1, -1);
        let adj = l.adjacencies(0).unwrap();
        assert_eq!(adj.len(), 2);
        assert!(adj.iter().all(|a| a.is_loop()));
        assert_eq!(adj[0].reversed(), adj[1]);

        assert_eq!(t3().adjacencies(0).unwrap().len(), 2);
    }

    #[test]
    fn adjacency_signs() {
        let g = t3();
        let a12 = g.adjacencies(0).unwrap()[0];
        assert_eq!(a12.head_vertex, 1);
        assert_eq!(g.adjacency_sign(&a12), Sign::Plus);
        let a23 = g
            .adjacencies(1)
            .unwrap()
            .into_iter()
            .find(|a| a.head_vertex == 2)
            .unwrap();
        assert_eq!(g.adjacency_sign(&a23), Sign::Minus);
        let x = x3();
        assert_eq!(x.adjacency_sign(&x.adjacencies(0).unwrap()[0]), Sign::Minus);

        assert_eq!(loop_vertex(1, 1).adjacency_sign(&loop_vertex(1, 1).adjacencies(0).unwrap()[0]), Sign::Minus);
        assert_eq!(loop_vertex(-1, -1).adjacency_sign(&loop_vertex(-1, -1).adjacencies(0).unwrap()[0]), Sign::Minus);
        assert_eq!(loop_vertex(1, -1).adjacency_sign(&loop_vertex(1, -1).adjacencies(0).unwrap()[0]), Sign::Plus);
    }

    #[test]
    fn weak_deletion() {
        let x = x3().weak_delete(&[0], false).unwrap();
        assert_eq!(x.vertex_count(), 2);
        assert_eq!(x.size(0).unwrap(), 2);

        // v2 and v3 still sit on e12 and e13, which survive as 1-edges
        let t = t3().weak_delete(&[0], true).unwrap();
        assert_eq!(t.vertex_names(), ["v2", "v3"]);
        assert_eq!(t.edge_names(), ["e12", "e13", "e23"]);
        assert_eq!(t.size(0).unwrap(), 1);
        let t = t3().weak_delete(&[0, 1], true).unwrap();
        assert_eq!(t.edge_names(), ["e13", "e23"]);
        let t = t3().weak_delete(&[0, 1], false).unwrap();
        assert_eq!(t.first_empty_edge(), Some(0));

        let kept = t3().weak_delete(&[0], false).unwrap();
        assert_eq!(kept.edge_count(), 3);
        assert_eq!(kept.size(0).unwrap(), 1);

        assert_eq!(t3().weak_delete(&[], false).unwrap(), t3());
        assert!(t3().weak_delete(&[5], false).is_err());
    }

    #[test]
    fn walks_of_length_one() {
        let g = t3();
        let walks = g.weak_walks(0, 0, 1, 100).unwrap();
        assert_eq!(walks.len(), 2);
        assert!(walks.iter().all(|w| w.backstep_count() == 1 && w.sign(&g) == Sign::Minus));
        assert_eq!(g.signed_walk_count(0, 0, 1, 100).unwrap(), -2);
        assert_eq!(g.weak_walks(0, 1, 1, 100).unwrap().len(), 1);
        assert_eq!(g.signed_walk_count(0, 1, 1, 100).unwrap(), 1);
        assert_eq!(g.signed_walk_count(1, 1, 0, 100).unwrap(), 1);
        assert_eq!(g.signed_walk_count(1, 2, 0, 100).unwrap(), 0);
    }

    #[test]
    fn walk_cap() {
        let g = x3();
        assert!(matches!(
            g.weak_walks(0, 0, 3, 2),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            g.signed_walk_count(0, 0, 3, 2),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn constant_orientations() {
        assert_eq!(x3().constant_orientation(), ConstantOrientation::Extroverted);
        assert_eq!(x3().with_signs_negated().constant_orientation(), ConstantOrientation::Introverted);
        assert_eq!(t3().constant_orientation(), ConstantOrientation::Neither);
    }

    #[test]
    fn balance() {
        // triangle encoded as a plain graph: all adjacency signs +1
        let plain = OrientedHypergraph::from_ordinals(
            3,
            3,
            vec![
                (0, 0, Sign::Plus),
                (1, 0, Sign::Minus),
                (0, 1, Sign::Plus),
                (2, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 2, Sign::Minus),
            ],
        )
        .unwrap();
        assert!(plain.is_balanced_signed_graph().unwrap());
        assert!(!t3().is_balanced_signed_graph().unwrap());
        assert!(matches!(x3().is_balanced_signed_graph(), Err(Error::NotASignedGraph(_))));
        // negative loop is an unbalanced circle, positive loop is fine
        assert!(!loop_vertex(1, 1).is_balanced_signed_graph().unwrap());
        assert!(loop_vertex(1, -1).is_balanced_signed_graph().unwrap());
    }

    #[test]
    fn orientation_masks() {
        let g = t3();
        let mask = g.orientation_mask();
        assert_eq!(g.with_orientation_mask(mask), g);
        assert_eq!(g.with_orientation_mask(0).constant_orientation(), ConstantOrientation::Extroverted);
    }
}
