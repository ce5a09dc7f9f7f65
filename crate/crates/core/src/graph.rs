//! Simple undirected graphs on 1-based vertex indices with the minor
//! operations: complement, contraction, deletion, subdivision.
//!
//! Adjacency is a dense bitset per vertex, which keeps edge tests O(1)
//! inside the search hot loops. Vertices are numbered `1..=order`; after a
//! contraction the merged vertex takes the smaller index, the rest are
//! renumbered downward, and each vertex keeps the sorted set of original
//! labels it absorbed so results can be reported in the input coordinates.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest supported order. Bit 0 of each adjacency row is unused so that
/// vertex ids map directly to bit positions.
pub const MAX_ORDER: usize = 63;

#[derive(Clone)]
pub struct Graph {
    order: usize,
    /// `adj[v]` is the neighbor bitset of vertex `v` (`adj[0]` unused).
    adj: Vec<u64>,
    /// `labels[v]` is the sorted set of original labels merged into `v`.
    labels: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices labeled `1..=order`.
    pub fn empty(order: usize) -> Graph {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Graph {
            order,
            adj: vec![0; order + 1],
            labels: (0..=order).map(|v| vec![v]).collect(),
        }
    }

    pub fn complete(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for u in 1..=order {
            for v in (u + 1)..=order {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `1-2-...-n-1`; requires `n >= 3`.
    pub fn cycle(order: usize) -> Graph {
        assert!(order >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.add_edge(v, v + 1);
        }
        g.add_edge(order, 1);
        g
    }

    /// Path `1-2-...-n`.
    pub fn path(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Complete multipartite graph with the given part sizes; parts are
    /// consecutive label ranges in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let order: usize = parts.iter().sum();
        let mut g = Graph::empty(order);
        let mut part_of = Vec::with_capacity(order + 1);
        part_of.push(usize::MAX);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(i).take(p));
        }
        for u in 1..=order {
            for v in (u + 1)..=order {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order, MAX_ORDER));
        }
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > order || v > order {
                return Err(Error::InvalidEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Join of two graphs: disjoint union plus all edges between the parts.
    /// Vertices of `a` keep their labels; vertices of `b` are shifted up by
    /// `a.order()`.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let n = a.order + b.order;
        let mut g = Graph::empty(n);
        for (u, v) in a.edge_list() {
            g.add_edge(u, v);
        }
        for (u, v) in b.edge_list() {
            g.add_edge(u + a.order, v + a.order);
        }
        for u in 1..=a.order {
            for v in (a.order + 1)..=n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj[1..]
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        1..=self.order
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.has_vertex(u) && self.has_vertex(v) && self.adj[u] & (1 << v) != 0
    }

    /// Neighbor bitset of `v` (bit `u` set iff `(u, v)` is an edge).
    pub fn neighbor_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Bitset with one bit per vertex of the graph.
    pub fn vertex_bits(&self) -> u64 {
        if self.order == 0 {
            0
        } else {
            ((1u128 << (self.order + 1)) - 2) as u64
        }
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        if !self.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(bits_to_vec(self.adj[v]))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if !self.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.size());
        for u in 1..=self.order {
            let above = if u >= 63 { 0 } else { !0u64 << (u + 1) };
            let mut bits = self.adj[u] & above;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                edges.push((u, v));
                bits &= bits - 1;
            }
        }
        edges
    }

    /// Sorted original labels merged into vertex `v`.
    pub fn label_set(&self, v: usize) -> Result<&[usize]> {
        if !self.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(&self.labels[v])
    }

    /// Current vertex whose label history contains `label`, if any.
    pub fn resolve_label(&self, label: usize) -> Option<usize> {
        (1..=self.order).find(|&v| self.labels[v].binary_search(&label).is_ok())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && self.has_vertex(u) && self.has_vertex(v));
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Complement on the same vertex set; labels are preserved.
    pub fn complement(&self) -> Graph {
        let mask = self.vertex_bits();
        let mut g = self.clone();
        for v in 1..=self.order {
            g.adj[v] = (!self.adj[v]) & mask & !(1 << v);
        }
        g
    }

    /// Contract edge `(u, v)`: the merged vertex takes the smaller of the
    /// two indices, the larger index is removed and higher vertices shift
    /// down, parallel edges coalesce, and the merged vertex absorbs both
    /// label histories.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_vertex(u) {
            return Err(Error::InvalidVertex(u));
        }
        if !self.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        g.adj[keep] = (self.adj[keep] | self.adj[gone]) & !(1 << keep) & !(1 << gone);
        for w in 1..=self.order {
            if w != keep && w != gone && g.adj[w] & (1 << gone) != 0 {
                g.adj[w] = (g.adj[w] & !(1 << gone)) | (1 << keep);
            }
        }
        g.adj[gone] = 0;
        let merged_labels = merge_sorted(&self.labels[keep], &self.labels[gone]);
        g.labels[keep] = merged_labels;
        g.remove_slot(gone);
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if !self.has_vertex(v) {
            return Err(Error::InvalidVertex(v));
        }
        let mut g = self.clone();
        for w in 1..=self.order {
            g.adj[w] &= !(1 << v);
        }
        g.adj[v] = 0;
        g.remove_slot(v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Replace edge `(u, v)` by a path through `k` fresh vertices appended
    /// at the top indices (`k = 0` leaves the graph unchanged). Fresh
    /// vertices get labels above every existing label.
    pub fn subdivide_edge(&self, u: usize, v: usize, k: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        if self.order + k > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order + k, MAX_ORDER));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        let mut next_label = self
            .labels
            .iter()
            .skip(1)
            .flat_map(|l| l.iter().copied())
            .max()
            .unwrap_or(0);
        let base = self.order;
        g.order += k;
        g.adj.resize(g.order + 1, 0);
        for i in 1..=k {
            next_label += 1;
            g.labels.push(vec![next_label]);
            let prev = if i == 1 { u } else { base + i - 1 };
            g.add_edge(prev, base + i);
        }
        g.add_edge(base + k, v);
        Ok(g)
    }

    /// Induced subgraph on the given vertices, renumbered `1..=|S|` in
    /// ascending order of the original indices. Label histories carry over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.len() != vertices.len() {
            return Err(Error::Spec("duplicate vertices in induced subgraph".into()));
        }
        for &v in &keep {
            if !self.has_vertex(v) {
                return Err(Error::InvalidVertex(v));
            }
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            g.labels[i + 1] = self.labels[v].clone();
            for (j, &w) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(v, w) {
                    g.add_edge(i + 1, j + 1);
                }
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut seen: u64 = 1 << 1;
        let mut frontier: u64 = 1 << 1;
        while frontier != 0 {
            let mut next = 0;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_bits()
    }

    /// Ascending degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (1..=self.order)
            .map(|v| self.adj[v].count_ones() as usize)
            .collect();
        degs.sort_unstable();
        degs
    }

    /// Forgets label history, making every vertex its own original label.
    pub fn with_identity_labels(&self) -> Graph {
        let mut g = self.clone();
        g.labels = (0..=self.order).map(|v| vec![v]).collect();
        g
    }

    /// Relabel through `perm`, where `perm[v]` is the new index of old
    /// vertex `v` (`perm[0]` ignored). This is a re-presentation of the
    /// graph, so label histories reset to the new identities.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order + 1 {
            return Err(Error::Spec("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.order + 1];
        for &p in &perm[1..] {
            if p == 0 || p > self.order || seen[p] {
                return Err(Error::Spec("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(self.order);
        for (u, v) in self.edge_list() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Checks whether the vertices in `bits` induce a connected subgraph.
    pub fn is_connected_subset(&self, bits: u64) -> bool {
        if bits == 0 {
            return false;
        }
        let start = bits.trailing_zeros() as usize;
        let mut seen: u64 = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut b = frontier;
            while b != 0 {
                let v = b.trailing_zeros() as usize;
                b &= b - 1;
                next |= self.adj[v] & bits;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == bits
    }

    /// Drops vertex slot `v` (assumed already disconnected), shifting all
    /// higher indices down by one.
    fn remove_slot(&mut self, v: usize) {
        debug_assert_eq!(self.adj[v], 0);
        let order = self.order;
        let low_mask: u64 = (1 << v) - 1;
        for w in 1..=order {
            let row = self.adj[w];
            self.adj[w] = (row & low_mask) | ((row & !low_mask & !(1 << v)) >> 1);
        }
        self.adj.remove(v);
        self.labels.remove(v);
        self.order -= 1;
    }
}

/// Equality is structural: same order and adjacency. Label histories are
/// bookkeeping and do not participate.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.order == other.order && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edge_list())
    }
}

fn bits_to_vec(mut bits: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

/// JSON interchange form: `{"n": 11, "edges": [[1, 2], ...]}` with 1-based
/// endpoints and `u < v`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.order(),
        edges: g.edge_list().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("graph json serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::GraphJson(e.to_string()))?;
    if doc.n > MAX_ORDER {
        return Err(Error::OrderTooLarge(doc.n, MAX_ORDER));
    }
    let mut g = Graph::empty(doc.n);
    for [u, v] in doc.edges {
        if u == 0 || v == 0 || u > doc.n || v > doc.n || u >= v {
            return Err(Error::GraphJson(format!(
                "edge [{u}, {v}] is not a 1-based pair with u < v"
            )));
        }
        if g.has_edge(u, v) {
            return Err(Error::GraphJson(format!("duplicate edge [{u}, {v}]")));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(5).complement();
        assert_eq!(g.size(), 0);
        assert_eq!(g.order(), 5);
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::cycle(7);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn edge_counts_are_complementary() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (4, 6)]).unwrap();
        assert_eq!(g.size() + g.complement().size(), 6 * 5 / 2);
    }

    #[test]
    fn contract_k4_edge_gives_k3() {
        let g = Graph::complete(4).contract_edge(2, 4).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(g.label_set(2).unwrap(), &[2, 4]);
        assert_eq!(g.label_set(3).unwrap(), &[3]);
    }

    #[test]
    fn contract_nonedge_errors() {
        let g = Graph::cycle(5);
        assert!(matches!(
            g.contract_edge(1, 3),
            Err(Error::MissingEdge(1, 3))
        ));
    }

    #[test]
    fn contraction_edge_count_formula() {
        // |E'| = |E| - 1 - |N(u) ∩ N(v)|
        let g = Graph::from_edges(
            6,
            &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (1, 6)],
        )
        .unwrap();
        let common = g.common_neighbors(2, 3);
        let h = g.contract_edge(2, 3).unwrap();
        assert_eq!(h.size(), g.size() - 1 - common);
    }

    #[test]
    fn delete_vertex_from_complete() {
        let g = Graph::complete(6).delete_vertex(3).unwrap();
        assert_eq!(g, Graph::complete(5));
    }

    #[test]
    fn delete_then_complement_commutes_with_add() {
        let g = Graph::cycle(6);
        let a = g.delete_edge(2, 3).unwrap().complement();
        let mut b = g.complement();
        b.add_edge(2, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn subdivision_grows_order_and_size() {
        let g = Graph::cycle(5);
        let h = g.subdivide_edge(1, 2, 3).unwrap();
        assert_eq!(h.order(), 8);
        assert_eq!(h.size(), g.size() + 3);
        assert!(!h.has_edge(1, 2));
        assert!(h.has_edge(1, 6));
        assert!(h.has_edge(6, 7));
        assert!(h.has_edge(7, 8));
        assert!(h.has_edge(8, 2));
        assert_eq!(g.subdivide_edge(1, 2, 0).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = Graph::cycle(6);
        let h = g.induced_subgraph(&[2, 3, 5]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_list(), vec![(1, 2)]);
        assert_eq!(h.label_set(3).unwrap(), &[5]);
    }

    #[test]
    fn resolve_label_after_contractions() {
        let g = Graph::complete(5)
            .contract_edge(2, 4)
            .unwrap()
            .contract_edge(1, 3)
            .unwrap();
        assert_eq!(g.resolve_label(4), Some(2));
        assert_eq!(g.resolve_label(3), Some(1));
        assert_eq!(g.resolve_label(5), Some(3));
        assert_eq!(g.resolve_label(9), None);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(5).is_connected());
        assert!(!Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 5), (3, 4)]).unwrap();
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        assert!(from_json("{\"n\":3,\"edges\":[[2,1]]}").is_err());
        assert!(from_json("{\"n\":3,\"edges\":[[1,4]]}").is_err());
    }

    #[test]
    fn join_builds_wheel() {
        let w5 = Graph::join(&Graph::cycle(4), &Graph::empty(1));
        assert_eq!(w5.order(), 5);
        assert_eq!(w5.size(), 8);
        assert_eq!(w5.degree(5).unwrap(), 4);
    }
}
