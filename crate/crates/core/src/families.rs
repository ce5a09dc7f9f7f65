//! The three families of maximal non-separating planar graphs: wheels,
//! elongated triangular prisms, and maximal outerplanar graphs.
//!
//! Provides constructors with fixed reproducible labelings, enumeration up
//! to isomorphism, structural recognition, chord analysis of maximal
//! outerplanar graphs, and the named fixture graphs.

use crate::canon::{canonical_code_capped, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Default order cap for the maximal outerplanar enumeration (the labeled
/// triangulation count is Catalan(n-2)).
pub const DEFAULT_ENUM_CAP: usize = 13;

/// Symbolic description of a family member.
///
/// Wheels are `K_1 + C_{n-1}` with rim `v_1..v_{n-1}` and hub `v_n`. Prisms
/// are described by the per-path subdivision counts, stored sorted
/// descending. Outerplanar members are an `n`-cycle `1..n` plus the listed
/// triangulating chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Wheel { n: usize },
    Prism { subdivisions: [usize; 3] },
    Outerplanar { n: usize, chords: Vec<(usize, usize)> },
}

impl FamilySpec {
    pub fn wheel(n: usize) -> FamilySpec {
        FamilySpec::Wheel { n }
    }

    /// Prism spec with the subdivision counts normalized descending.
    pub fn prism(a: usize, b: usize, c: usize) -> FamilySpec {
        let mut s = [a, b, c];
        s.sort_unstable_by(|x, y| y.cmp(x));
        FamilySpec::Prism { subdivisions: s }
    }

    /// The fan `K_1 + P_{n-1}`: every chord at `v_1`.
    pub fn fan(n: usize) -> FamilySpec {
        FamilySpec::Outerplanar {
            n,
            chords: (3..n).map(|j| (1, j)).collect(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Wheel { n } => wheel(*n),
            FamilySpec::Prism { subdivisions: [a, b, c] } => elongated_prism(*a, *b, *c),
            FamilySpec::Outerplanar { n, chords } => max_outerplanar(*n, chords),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Wheel { n } => *n,
            FamilySpec::Prism { subdivisions } => 6 + subdivisions.iter().sum::<usize>(),
            FamilySpec::Outerplanar { n, .. } => *n,
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Wheel { n } => write!(f, "wheel({n})"),
            FamilySpec::Prism { subdivisions: [a, b, c] } => write!(f, "prism({a},{b},{c})"),
            FamilySpec::Outerplanar { n, chords } => {
                write!(f, "outerplanar({n};")?;
                for (i, (u, v)) in chords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A non-boundary edge of a maximal outerplanar graph together with its
/// chord length: the shorter of the two boundary path lengths between the
/// endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChordClass {
    pub edge: (usize, usize),
    pub length: usize,
}

/// The two mutually exclusive shapes of a maximal outerplanar graph of
/// order >= 7: either two vertex-disjoint 2-chords exist, or the graph is
/// the fan `K_1 + P_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dichotomy {
    IndependentPair { e1: (usize, usize), e2: (usize, usize) },
    Fan { hub: usize },
}

/// Wheel `W_n = K_1 + C_{n-1}`: rim `v_1..v_{n-1}` in cycle order, hub
/// `v_n` adjacent to every rim vertex. Requires `n >= 4`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Spec(format!("wheel needs order >= 4, got {n}")));
    }
    let mut g = Graph::empty(n);
    for v in 1..(n - 1) {
        g.add_edge(v, v + 1);
    }
    g.add_edge(n - 1, 1);
    for v in 1..n {
        g.add_edge(v, n);
    }
    Ok(g)
}

/// Elongated triangular prism: triangles `1,2,3` and `4,5,6`, with the
/// vertical edges `(1,4)`, `(2,5)`, `(3,6)` subdivided `a`, `b`, `c` times.
/// Subdivision vertices are numbered consecutively along the first path,
/// then the second, then the third.
pub fn elongated_prism(a: usize, b: usize, c: usize) -> Result<Graph> {
    let mut g = Graph::from_edges(
        6,
        &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (2, 5), (3, 6)],
    )?;
    g = g.subdivide_edge(1, 4, a)?;
    g = g.subdivide_edge(2, 5, b)?;
    g = g.subdivide_edge(3, 6, c)?;
    Ok(g)
}

/// All prism specs of the given order up to isomorphism: one per partition
/// of `order - 6` into at most three parts, descending lexicographic.
pub fn enumerate_prisms(order: usize) -> Result<Vec<FamilySpec>> {
    if order < 6 {
        return Err(Error::Spec(format!("prisms need order >= 6, got {order}")));
    }
    let m = order - 6;
    let mut out = Vec::new();
    for a in (m.div_ceil(3)..=m).rev() {
        let rest = m - a;
        for b in (rest.div_ceil(2)..=rest.min(a)).rev() {
            out.push(FamilySpec::Prism {
                subdivisions: [a, b, rest - b],
            });
        }
    }
    Ok(out)
}

/// Maximal outerplanar graph: the cycle `1..n` plus the given chords, which
/// must be `n - 3` pairwise non-crossing non-boundary diagonals (such a set
/// always triangulates the polygon).
pub fn max_outerplanar(n: usize, chords: &[(usize, usize)]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Spec(format!(
            "maximal outerplanar needs order >= 3, got {n}"
        )));
    }
    if chords.len() != n - 3 {
        return Err(Error::Spec(format!(
            "expected {} chords for order {n}, got {}",
            n - 3,
            chords.len()
        )));
    }
    let mut norm: Vec<(usize, usize)> = Vec::with_capacity(chords.len());
    for &(u, v) in chords {
        if u == 0 || v == 0 || u > n || v > n || u == v {
            return Err(Error::Spec(format!("chord ({u}, {v}) out of range")));
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let boundary = v - u == 1 || (u == 1 && v == n);
        if boundary {
            return Err(Error::Spec(format!("({u}, {v}) is a boundary edge, not a chord")));
        }
        norm.push((u, v));
    }
    norm.sort_unstable();
    if norm.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Spec("duplicate chord".into()));
    }
    for (i, &(a, b)) in norm.iter().enumerate() {
        for &(c, d) in &norm[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let inside = |x: usize| a < x && x < b;
            if inside(c) != inside(d) {
                return Err(Error::Spec(format!(
                    "chords ({a}, {b}) and ({c}, {d}) cross"
                )));
            }
        }
    }
    let mut g = Graph::cycle(n);
    for &(u, v) in &norm {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// All maximal outerplanar graphs of order `n` up to isomorphism, obtained
/// by generating every labeled triangulation of the `n`-gon and deduping by
/// canonical code. The result is sorted by canonical code.
pub fn enumerate_max_outerplanar(n: usize) -> Result<Vec<Graph>> {
    enumerate_max_outerplanar_with_cap(n, DEFAULT_ENUM_CAP)
}

pub fn enumerate_max_outerplanar_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n < 4 {
        return Err(Error::Spec(format!(
            "outerplanar enumeration needs order >= 4, got {n}"
        )));
    }
    if n > cap {
        return Err(Error::OverCap(n, cap));
    }
    let mut seen: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for chords in polygon_triangulations(n) {
        let g = max_outerplanar(n, &chords)?;
        let code = canonical_code_capped(&g, n)?;
        seen.entry(code).or_insert(g);
    }
    Ok(seen.into_values().collect())
}

/// Every triangulation of the labeled `n`-gon as a chord list; there are
/// Catalan(n-2) of them. Each is generated exactly once by branching on the
/// apex of the triangle resting on the closing edge of each sub-polygon.
pub fn polygon_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn tri(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in (lo + 1)..hi {
            let lefts = tri(lo, apex);
            let rights = tri(apex, hi);
            for left in &lefts {
                for right in &rights {
                    let mut chords = Vec::new();
                    if apex - lo > 1 {
                        chords.push((lo, apex));
                    }
                    if hi - apex > 1 {
                        chords.push((apex, hi));
                    }
                    chords.extend_from_slice(left);
                    chords.extend_from_slice(right);
                    out.push(chords);
                }
            }
        }
        out
    }
    assert!(n >= 3);
    tri(1, n)
}

/// Recognized maximal outerplanar structure: the boundary cycle in a
/// canonical order (smallest vertex first, smaller neighbor second) plus
/// per-vertex boundary positions and the chord list.
#[derive(Clone, Debug)]
pub struct Mop {
    pub boundary: Vec<usize>,
    pub pos: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
}

impl Mop {
    /// Recognizes a maximal outerplanar graph and recovers its boundary.
    ///
    /// In a triangulated polygon a boundary edge lies on exactly one
    /// triangle and a chord on exactly two, so the boundary is exactly the
    /// set of edges whose endpoints have one common neighbor.
    pub fn recognize(g: &Graph) -> Result<Mop> {
        let n = g.order();
        if n < 3 || g.size() != 2 * n - 3 {
            return Err(Error::NotMaxOuterplanar);
        }
        let mut boundary_adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut chords = Vec::new();
        for (u, v) in g.edge_list() {
            if g.common_neighbors(u, v) == 1 {
                boundary_adj[u].push(v);
                boundary_adj[v].push(u);
            } else {
                chords.push((u, v));
            }
        }
        if n == 3 {
            // Triangle: every edge is boundary.
            return Ok(Mop {
                boundary: vec![1, 2, 3],
                pos: vec![0, 0, 1, 2],
                chords: Vec::new(),
            });
        }
        if boundary_adj[1..].iter().any(|a| a.len() != 2) {
            return Err(Error::NotMaxOuterplanar);
        }
        // Walk the cycle starting at vertex 1, toward its smaller neighbor.
        let mut boundary = Vec::with_capacity(n);
        let mut prev = 1;
        let mut cur = *boundary_adj[1].iter().min().expect("two neighbors");
        boundary.push(1);
        while cur != 1 {
            boundary.push(cur);
            let next = if boundary_adj[cur][0] == prev {
                boundary_adj[cur][1]
            } else {
                boundary_adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        if boundary.len() != n {
            return Err(Error::NotMaxOuterplanar);
        }
        let mut pos = vec![0; n + 1];
        for (i, &v) in boundary.iter().enumerate() {
            pos[v] = i;
        }
        // Chords must be pairwise non-crossing in the recovered cycle.
        let ordered: Vec<(usize, usize)> = chords
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                (a, b)
            })
            .collect();
        for (i, &(a, b)) in ordered.iter().enumerate() {
            if b - a < 2 || b - a > n - 2 {
                return Err(Error::NotMaxOuterplanar);
            }
            for &(c, d) in &ordered[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let inside = |x: usize| a < x && x < b;
                if inside(c) != inside(d) {
                    return Err(Error::NotMaxOuterplanar);
                }
            }
        }
        chords.sort_unstable();
        Ok(Mop { boundary, pos, chords })
    }

    pub fn order(&self) -> usize {
        self.boundary.len()
    }

    /// Chord length of an edge: the shorter boundary distance between the
    /// endpoint positions.
    pub fn chord_length(&self, u: usize, v: usize) -> usize {
        let n = self.order();
        let d = self.pos[u].abs_diff(self.pos[v]);
        d.min(n - d)
    }

    /// The boundary vertex strictly between the endpoints of a 2-chord.
    pub fn apex(&self, u: usize, v: usize) -> usize {
        debug_assert_eq!(self.chord_length(u, v), 2);
        let n = self.order();
        let (a, b) = (self.pos[u], self.pos[v]);
        let mid = if (a + 2) % n == b { (a + 1) % n } else { (b + 1) % n };
        self.boundary[mid]
    }

    /// Vertex at boundary position `i mod n`.
    pub fn at(&self, i: usize) -> usize {
        self.boundary[i % self.order()]
    }
}

/// Classifies a graph as a wheel, an elongated prism, or a maximal
/// outerplanar graph, or returns `None`. Degenerate overlaps resolve by the
/// fixed priority wheel > prism > outerplanar.
pub fn classify(g: &Graph) -> Option<FamilySpec> {
    if let Some((n, _)) = recognize_wheel(g) {
        return Some(FamilySpec::Wheel { n });
    }
    if let Some((subdivisions, _)) = recognize_prism(g) {
        return Some(FamilySpec::Prism { subdivisions });
    }
    if let Ok(mop) = Mop::recognize(g) {
        let n = g.order();
        let mut chords: Vec<(usize, usize)> = mop
            .chords
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (mop.pos[u] + 1, mop.pos[v] + 1);
                (a.min(b), a.max(b))
            })
            .collect();
        chords.sort_unstable();
        return Some(FamilySpec::Outerplanar { n, chords });
    }
    None
}

/// Wheel recognition; returns the order and the map from canonical wheel
/// labels to input vertices (`map[i]` hosts `v_i`).
pub fn recognize_wheel(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.order();
    if n < 4 || g.size() != 2 * (n - 1) {
        return None;
    }
    let hub = (1..=n).find(|&v| g.degree(v).unwrap() == n - 1)?;
    let rim: Vec<usize> = (1..=n).filter(|&v| v != hub).collect();
    // Walk the rim cycle from its smallest vertex toward the smaller
    // neighbor; every rim vertex must have exactly two rim neighbors.
    let rim_nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .unwrap()
            .into_iter()
            .filter(|&u| u != hub)
            .collect()
    };
    if rim.iter().any(|&v| rim_nbrs(v).len() != 2) {
        return None;
    }
    let start = *rim.iter().min().unwrap();
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *rim_nbrs(start).iter().min().unwrap();
    while cur != start {
        walk.push(cur);
        let nb = rim_nbrs(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    if walk.len() != n - 1 {
        return None;
    }
    let mut map = vec![0; n + 1];
    for (i, &v) in walk.iter().enumerate() {
        map[i + 1] = v;
    }
    map[n] = hub;
    Some((n, map))
}

/// Prism recognition; returns the sorted subdivision counts and the map
/// from canonical prism labels to input vertices.
pub fn recognize_prism(g: &Graph) -> Option<([usize; 3], Vec<usize>)> {
    let n = g.order();
    if n < 6 || g.size() != n + 3 {
        return None;
    }
    let mut tri_verts = Vec::new();
    for v in 1..=n {
        match g.degree(v).unwrap() {
            3 => tri_verts.push(v),
            2 => {}
            _ => return None,
        }
    }
    if tri_verts.len() != 6 {
        return None;
    }
    // The two disjoint triangles among the degree-3 vertices.
    let mut triangles = Vec::new();
    for (i, &a) in tri_verts.iter().enumerate() {
        for (j, &b) in tri_verts.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for &c in &tri_verts[j + 1..] {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    triangles.push([a, b, c]);
                }
            }
        }
    }
    if triangles.len() != 2 || triangles[0].iter().any(|v| triangles[1].contains(v)) {
        return None;
    }
    let (t1, t2) = (triangles[0], triangles[1]);
    // Walk the path leaving each vertex of the first triangle.
    let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    let mut used = vec![false; n + 1];
    for v in t1.iter().chain(t2.iter()) {
        used[*v] = true;
    }
    for &u in &t1 {
        let mut internal = Vec::new();
        let mut prev = u;
        let mut cur = *g
            .neighbors(u)
            .unwrap()
            .iter()
            .find(|&&w| !t1.contains(&w))?;
        loop {
            if t2.contains(&cur) {
                break;
            }
            if g.degree(cur).unwrap() != 2 || used[cur] {
                return None;
            }
            used[cur] = true;
            internal.push(cur);
            let next = *g
                .neighbors(cur)
                .unwrap()
                .iter()
                .find(|&&w| w != prev)
                .expect("degree-2 vertex has another neighbor");
            prev = cur;
            cur = next;
        }
        paths.push((u, cur, internal));
    }
    if used[1..].iter().any(|&b| !b) {
        return None;
    }
    // The three path endpoints in the far triangle must be distinct.
    let mut ends: Vec<usize> = paths.iter().map(|p| p.1).collect();
    ends.sort_unstable();
    ends.dedup();
    if ends.len() != 3 {
        return None;
    }
    // Canonical labeling sorts the paths by descending subdivision count,
    // tie-broken by the near-triangle endpoint.
    paths.sort_by(|x, y| y.2.len().cmp(&x.2.len()).then(x.0.cmp(&y.0)));
    let counts = [paths[0].2.len(), paths[1].2.len(), paths[2].2.len()];
    let mut map = vec![0; n + 1];
    let mut next = 7;
    for (i, (u, w, internal)) in paths.iter().enumerate() {
        map[1 + i] = *u;
        map[4 + i] = *w;
        for &x in internal {
            map[next] = x;
            next += 1;
        }
    }
    Some((counts, map))
}

/// Chord classification of a maximal outerplanar graph: every non-boundary
/// edge with its chord length, ascending by edge.
pub fn chord_classes(g: &Graph) -> Result<Vec<ChordClass>> {
    let mop = Mop::recognize(g)?;
    Ok(mop
        .chords
        .iter()
        .map(|&(u, v)| ChordClass {
            edge: (u, v),
            length: mop.chord_length(u, v),
        })
        .collect())
}

/// Boundary cycle of a maximal outerplanar graph in canonical order.
pub fn boundary_cycle(g: &Graph) -> Result<Vec<usize>> {
    Ok(Mop::recognize(g)?.boundary)
}

/// For a maximal outerplanar graph of order >= 7, exactly one holds: some
/// pair of vertex-disjoint 2-chords exists (the lexicographically smallest
/// such pair is returned) or the graph is the fan `K_1 + P_{n-1}`.
pub fn dichotomy(g: &Graph) -> Result<Dichotomy> {
    let n = g.order();
    if n < 7 {
        return Err(Error::Spec(format!("dichotomy needs order >= 7, got {n}")));
    }
    let mop = Mop::recognize(g)?;
    dichotomy_of(g, &mop)
}

pub(crate) fn dichotomy_of(g: &Graph, mop: &Mop) -> Result<Dichotomy> {
    let two_chords: Vec<(usize, usize)> = mop
        .chords
        .iter()
        .copied()
        .filter(|&(u, v)| mop.chord_length(u, v) == 2)
        .collect();
    for (i, &e1) in two_chords.iter().enumerate() {
        for &e2 in &two_chords[i + 1..] {
            let disjoint =
                e1.0 != e2.0 && e1.0 != e2.1 && e1.1 != e2.0 && e1.1 != e2.1;
            if disjoint {
                return Ok(Dichotomy::IndependentPair { e1, e2 });
            }
        }
    }
    let n = g.order();
    let hub = (1..=n)
        .find(|&v| g.degree(v).unwrap() == n - 1)
        .ok_or_else(|| Error::Unsupported("no independent 2-chords and no fan hub".into()))?;
    let rest = g.delete_vertex(hub)?;
    let degs = rest.degree_sequence();
    let is_path = rest.is_connected()
        && degs[..2] == [1, 1]
        && degs[2..].iter().all(|&d| d == 2);
    if !is_path {
        return Err(Error::Unsupported(
            "no independent 2-chords but not a fan".into(),
        ));
    }
    Ok(Dichotomy::Fan { hub })
}

/// Named fixture graphs used throughout the test surfaces.
///
/// `sec7_complement` is a 28-edge graph of order 11; `sec7_planar` is its
/// complement, a maximal planar graph with 27 = 3*11 - 6 edges.
pub fn fixture(name: &str) -> Result<Graph> {
    match name {
        "sec7_complement" => Graph::from_edges(
            11,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (1, 8),
                (2, 4),
                (2, 7),
                (2, 11),
                (3, 6),
                (3, 10),
                (3, 11),
                (4, 6),
                (4, 7),
                (4, 8),
                (5, 8),
                (5, 9),
                (5, 11),
                (6, 9),
                (6, 10),
                (6, 11),
                (7, 9),
                (7, 10),
                (7, 11),
                (8, 9),
                (8, 10),
                (8, 11),
            ],
        ),
        "sec7_planar" => Ok(fixture("sec7_complement")?.complement()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// Fixture names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] = &["sec7_complement", "sec7_planar"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    #[test]
    fn wheel_4_is_k4() {
        assert_eq!(wheel(4).unwrap(), Graph::complete(4));
        assert!(wheel(3).is_err());
    }

    #[test]
    fn wheel_edge_count_and_complement_degrees() {
        for n in 4..=14 {
            assert_eq!(wheel(n).unwrap().size(), 2 * (n - 1));
        }
        let cw11 = wheel(11).unwrap().complement();
        assert_eq!(cw11.degree(11).unwrap(), 0);
        for v in 1..=10 {
            assert_eq!(cw11.degree(v).unwrap(), 7);
        }
        // Complements of wheels are disconnected: the hub is isolated.
        for n in 5..=12 {
            assert!(!wheel(n).unwrap().complement().is_connected());
        }
    }

    #[test]
    fn hub_deletion_leaves_regular_complement() {
        for n in 6..=13 {
            let h0 = wheel(n).unwrap().complement().delete_vertex(n).unwrap();
            assert!(h0.degree_sequence().iter().all(|&d| d == n - 4));
        }
    }

    #[test]
    fn prism_order_and_size() {
        let p = elongated_prism(0, 0, 0).unwrap();
        assert_eq!((p.order(), p.size()), (6, 9));
        for (a, b, c) in [(5, 0, 0), (3, 2, 1), (2, 2, 2)] {
            let g = elongated_prism(a, b, c).unwrap();
            assert_eq!(g.order(), 6 + a + b + c);
            assert_eq!(g.size(), 9 + a + b + c);
        }
    }

    #[test]
    fn prism_paths_are_induced() {
        // Internal path vertices have degree exactly 2 and no chords to the
        // other paths or triangles.
        let g = elongated_prism(4, 1, 0).unwrap();
        for v in 7..=g.order() {
            assert_eq!(g.degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn enumerate_prisms_counts() {
        let e11 = enumerate_prisms(11).unwrap();
        let specs: Vec<[usize; 3]> = e11
            .iter()
            .map(|s| match s {
                FamilySpec::Prism { subdivisions } => *subdivisions,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(
            specs,
            vec![[5, 0, 0], [4, 1, 0], [3, 2, 0], [3, 1, 1], [2, 2, 1]]
        );
        assert_eq!(enumerate_prisms(6).unwrap().len(), 1);
        // Partition oracle: brute-force count of sorted triples.
        for order in 6..=16 {
            let m = order - 6;
            let mut brute = 0;
            for a in 0..=m {
                for b in 0..=a {
                    let c = m as i64 - a as i64 - b as i64;
                    if c >= 0 && c as usize <= b {
                        brute += 1;
                    }
                }
            }
            assert_eq!(enumerate_prisms(order).unwrap().len(), brute);
        }
        assert_eq!(enumerate_prisms(13).unwrap().len(), 8);
    }

    #[test]
    fn enumerated_prisms_pairwise_nonisomorphic() {
        let codes: Vec<_> = enumerate_prisms(11)
            .unwrap()
            .iter()
            .map(|s| canonical_code_capped(&s.build().unwrap(), 11).unwrap())
            .collect();
        for i in 0..codes.len() {
            for j in (i + 1)..codes.len() {
                assert_ne!(codes[i], codes[j]);
            }
        }
    }

    #[test]
    fn outerplanar_builders() {
        let quad = max_outerplanar(4, &[(1, 3)]).unwrap();
        let mut k4_minus = Graph::complete(4);
        k4_minus = k4_minus.delete_edge(2, 4).unwrap();
        assert_eq!(quad, k4_minus);

        let fan = FamilySpec::fan(11).build().unwrap();
        assert_eq!(fan, Graph::join(&Graph::empty(1), &Graph::path(10)));
        assert_eq!(fan.size(), 2 * 11 - 3);

        assert!(max_outerplanar(6, &[(1, 3), (2, 4), (1, 5)]).is_err()); // crossing
        assert!(max_outerplanar(6, &[(1, 3)]).is_err()); // wrong count
        assert!(max_outerplanar(6, &[(1, 2), (1, 3), (1, 4)]).is_err()); // boundary edge
    }

    #[test]
    fn fan_build_matches_join_form() {
        // All chords at v_1 produce K_1 + P_{n-1} with hub v_1.
        for n in 5..=9 {
            let fan = FamilySpec::fan(n).build().unwrap();
            assert_eq!(fan.degree(1).unwrap(), n - 1);
            let rest = fan.delete_vertex(1).unwrap();
            let degs = rest.degree_sequence();
            assert!(rest.is_connected());
            assert_eq!(&degs[..2], &[1, 1]);
            assert!(degs[2..].iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn triangulation_counts_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        // index i holds Catalan(i); an n-gon has Catalan(n-2) triangulations
        for n in 3..=11 {
            assert_eq!(polygon_triangulations(n).len(), catalan[n - 2]);
        }
    }

    #[test]
    fn enumerate_small_outerplanar() {
        assert_eq!(enumerate_max_outerplanar(4).unwrap().len(), 1);
        assert_eq!(enumerate_max_outerplanar(5).unwrap().len(), 1);
        assert_eq!(enumerate_max_outerplanar(6).unwrap().len(), 3);
        assert!(enumerate_max_outerplanar(14).is_err());
        for g in enumerate_max_outerplanar(8).unwrap() {
            assert!(g.is_connected());
            assert_eq!(g.size(), 2 * 8 - 3);
        }
    }

    #[test]
    fn dedupe_matches_explicit_dihedral_orbits() {
        // Independent dedupe oracle: orbits of the dihedral group acting on
        // labeled triangulations by rotating/reflecting chord endpoints.
        for n in 5..=9 {
            let all = polygon_triangulations(n);
            let norm = |mut ch: Vec<(usize, usize)>| {
                for e in ch.iter_mut() {
                    if e.0 > e.1 {
                        *e = (e.1, e.0);
                    }
                }
                ch.sort_unstable();
                ch
            };
            let mut reps = std::collections::BTreeSet::new();
            for ch in &all {
                let mut orbit_min: Option<Vec<(usize, usize)>> = None;
                for r in 0..n {
                    for refl in [false, true] {
                        let img: Vec<(usize, usize)> = ch
                            .iter()
                            .map(|&(u, v)| {
                                let m = |x: usize| {
                                    let x0 = x - 1;
                                    let y = if refl { (n - x0) % n } else { x0 };
                                    (y + r) % n + 1
                                };
                                (m(u), m(v))
                            })
                            .collect();
                        let img = norm(img);
                        if orbit_min.as_ref().is_none_or(|m| img < *m) {
                            orbit_min = Some(img);
                        }
                    }
                }
                reps.insert(orbit_min.unwrap());
            }
            assert_eq!(
                enumerate_max_outerplanar(n).unwrap().len(),
                reps.len(),
                "order {n}"
            );
        }
    }

    #[test]
    fn classify_family_members() {
        for n in 4..=13 {
            assert_eq!(
                classify(&wheel(n).unwrap()),
                Some(FamilySpec::Wheel { n }),
                "wheel {n}"
            );
        }
        for spec in enumerate_prisms(11).unwrap() {
            assert_eq!(classify(&spec.build().unwrap()), Some(spec));
        }
        for spec in enumerate_prisms(13).unwrap() {
            assert_eq!(classify(&spec.build().unwrap()), Some(spec));
        }
        // K_4 is the wheel W_4, not a maximal outerplanar graph (it has
        // 6 > 2n-3 edges), and the priority keeps it a wheel.
        assert_eq!(classify(&Graph::complete(4)), Some(FamilySpec::Wheel { n: 4 }));
        // Unstructured graph.
        assert_eq!(classify(&Graph::cycle(6)), None);
    }

    #[test]
    fn classify_outerplanar_round_trips() {
        for g in enumerate_max_outerplanar(7).unwrap() {
            match classify(&g) {
                Some(FamilySpec::Outerplanar { n, chords }) => {
                    let rebuilt = max_outerplanar(n, &chords).unwrap();
                    assert_eq!(
                        canonical_code(&rebuilt).unwrap(),
                        canonical_code(&g).unwrap()
                    );
                }
                other => panic!("expected outerplanar, got {other:?}"),
            }
        }
    }

    #[test]
    fn chord_classes_on_fan_and_quad() {
        let fan = FamilySpec::fan(11).build().unwrap();
        let classes = chord_classes(&fan).unwrap();
        let mut lengths: Vec<usize> = classes.iter().map(|c| c.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![2, 2, 3, 3, 4, 4, 5, 5]);

        let quad = max_outerplanar(4, &[(1, 3)]).unwrap();
        let classes = chord_classes(&quad).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].length, 2);

        // An 11-gon triangulation containing (1, 6) classifies it as a
        // 5-chord.
        let g = FamilySpec::Outerplanar {
            n: 11,
            chords: vec![
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (6, 8),
                (6, 9),
                (6, 10),
                (6, 11),
            ],
        }
        .build()
        .unwrap();
        let c16 = chord_classes(&g)
            .unwrap()
            .into_iter()
            .find(|c| c.edge == (1, 6))
            .unwrap();
        assert_eq!(c16.length, 5);
    }

    #[test]
    fn dichotomy_fan_and_snake() {
        let fan = FamilySpec::fan(11).build().unwrap();
        assert_eq!(dichotomy(&fan).unwrap(), Dichotomy::Fan { hub: 1 });

        // Zig-zag ("snake") triangulation of the 11-gon.
        let snake = FamilySpec::Outerplanar {
            n: 11,
            chords: vec![
                (2, 11),
                (3, 11),
                (3, 10),
                (4, 10),
                (4, 9),
                (5, 9),
                (5, 8),
                (6, 8),
            ],
        }
        .build()
        .unwrap();
        match dichotomy(&snake).unwrap() {
            Dichotomy::IndependentPair { e1, e2 } => {
                let mop = Mop::recognize(&snake).unwrap();
                assert_eq!(mop.chord_length(e1.0, e1.1), 2);
                assert_eq!(mop.chord_length(e2.0, e2.1), 2);
                assert!(e1.0 != e2.0 && e1.0 != e2.1 && e1.1 != e2.0 && e1.1 != e2.1);
            }
            other => panic!("expected independent pair, got {other:?}"),
        }
        assert!(dichotomy(&max_outerplanar(5, &[(1, 3), (1, 4)]).unwrap()).is_err());
    }

    #[test]
    fn dichotomy_is_exclusive_exhaustively_small() {
        for n in 7..=9 {
            for g in enumerate_max_outerplanar(n).unwrap() {
                match dichotomy(&g).unwrap() {
                    Dichotomy::Fan { hub } => {
                        assert_eq!(g.degree(hub).unwrap(), n - 1);
                    }
                    Dichotomy::IndependentPair { e1, e2 } => {
                        let mop = Mop::recognize(&g).unwrap();
                        assert_eq!(mop.chord_length(e1.0, e1.1), 2);
                        assert_eq!(mop.chord_length(e2.0, e2.1), 2);
                        // A fan would have all chords at the hub; rule it out.
                        assert!((1..=n).all(|v| g.degree(v).unwrap() < n - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn fixtures() {
        let comp = fixture("sec7_complement").unwrap();
        assert_eq!(comp.order(), 11);
        assert_eq!(comp.size(), 28);
        assert!(comp.has_edge(2, 11));
        let planar = fixture("sec7_planar").unwrap();
        assert_eq!(planar.size(), 27);
        assert_eq!(planar.size(), 3 * 11 - 6);
        assert_eq!(planar.complement(), comp);
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn sec7_planar_tree_structure() {
        // In the 28-edge fixture with (2,11) contracted, the vertices
        // {3,4,5,7,9,10} induce a tree whose leaves are 3, 4, 5.
        let h = fixture("sec7_complement")
            .unwrap()
            .contract_edge(2, 11)
            .unwrap();
        let sub_ids: Vec<usize> = [3, 4, 5, 7, 9, 10]
            .iter()
            .map(|&l| h.resolve_label(l).unwrap())
            .collect();
        let t = h.induced_subgraph(&sub_ids).unwrap();
        assert!(t.is_connected());
        assert_eq!(t.size(), t.order() - 1);
        for leaf_label in [3, 4, 5] {
            let v = t.resolve_label(leaf_label).unwrap();
            assert_eq!(t.degree(v).unwrap(), 1);
        }
    }

    #[test]
    fn spec_json_shapes() {
        let w: FamilySpec = serde_json::from_str(r#"{"family":"wheel","n":11}"#).unwrap();
        assert_eq!(w, FamilySpec::Wheel { n: 11 });
        let p: FamilySpec =
            serde_json::from_str(r#"{"family":"prism","subdivisions":[5,0,0]}"#).unwrap();
        assert_eq!(p, FamilySpec::Prism { subdivisions: [5, 0, 0] });
        let o: FamilySpec =
            serde_json::from_str(r#"{"family":"outerplanar","n":4,"chords":[[1,3]]}"#).unwrap();
        assert_eq!(o.build().unwrap().size(), 5);
        assert_eq!(
            serde_json::to_string(&FamilySpec::Wheel { n: 7 }).unwrap(),
            r#"{"family":"wheel","n":7}"#
        );
    }
}

#[cfg(test)]
mod count_fixtures {
    use super::*;

    /// Isomorphism-class counts produced by the canonical-code dedupe over
    /// all labeled polygon triangulations, frozen as regression fixtures
    /// (the dihedral-orbit oracle above independently confirms the small
    /// orders).
    #[test]
    fn outerplanar_counts_frozen() {
        let expected = [
            (4, 1),
            (5, 1),
            (6, 3),
            (7, 4),
            (8, 12),
            (9, 27),
            (10, 82),
            (11, 228),
            (12, 733),
        ];
        for (n, count) in expected {
            assert_eq!(enumerate_max_outerplanar(n).unwrap().len(), count, "n = {n}");
        }
    }
}
