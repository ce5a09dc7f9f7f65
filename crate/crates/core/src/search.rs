//! Exact minor-containment search: branch-and-bound over assignments of
//! host vertices to connected branch sets.
//!
//! Branch sets are enumerated per pattern vertex as rooted connected
//! subsets (each subset generated exactly once), with vertices explored in
//! descending-degree order, lexicographic tie-break. Pruning combines the
//! remaining-vertex count, adjacency feasibility of already-placed sets,
//! and an edge-budget bound: every still-unsatisfied pattern edge needs its
//! own host edge with an endpoint outside the placed sets, so too few such
//! edges ends the branch. `Absent` is only reported after the pruned space
//! is exhausted; a budget stop is the distinct `Inconclusive` outcome.

use crate::certificates::MinorModel;
use crate::graph::Graph;
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Node budget; 0 means unbounded (complete search).
    pub node_budget: u64,
    /// Deterministic branching order. The engine is single-threaded and
    /// always explores in a fixed order, so outcomes, witnesses, and node
    /// counts are reproducible whenever this is set.
    pub deterministic: bool,
    /// Orders branch-set roots for complete patterns so each unordered
    /// family is tried once. Outcome-invariant.
    pub symmetry_pruning: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 0,
            deterministic: true,
            symmetry_pruning: true,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Found(MinorModel),
    Absent,
    Inconclusive,
}

impl Outcome {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::Absent => "absent",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        let mut doc = serde_json::json!({
            "outcome": self.outcome.name(),
            "nodes": self.nodes,
            "ms": self.elapsed.as_millis() as u64,
        });
        if let Outcome::Found(model) = &self.outcome {
            doc["target"] = serde_json::Value::String(model.target_name());
            doc["branch_sets"] = serde_json::json!(model.branch_sets);
        }
        doc.to_string()
    }
}

/// Exact decision of `K_t` as a minor of `g`.
pub fn has_complete_minor(g: &Graph, t: usize, cfg: &SearchConfig) -> SearchResult {
    has_minor(g, &Graph::complete(t), cfg)
}

/// Exact decision of `pattern` as a minor of `g`. Pattern non-edges are
/// unconstrained; pattern edges demand a host edge between the two branch
/// sets.
pub fn has_minor(g: &Graph, pattern: &Graph, cfg: &SearchConfig) -> SearchResult {
    let started = Instant::now();
    let t = pattern.order();
    let absent = |nodes| SearchResult {
        outcome: Outcome::Absent,
        nodes,
        elapsed: started.elapsed(),
    };
    if t > g.order() || pattern.size() > g.size() {
        return absent(0);
    }
    let mut search = Search::new(g, pattern, cfg);
    let found = search.place(0);
    let outcome = if found {
        let model = search.model();
        assert!(
            model.verify().is_ok(),
            "engine produced an invalid model: {:?}",
            model.verify()
        );
        Outcome::Found(model)
    } else if search.aborted {
        Outcome::Inconclusive
    } else {
        Outcome::Absent
    };
    SearchResult {
        outcome,
        nodes: search.nodes,
        elapsed: started.elapsed(),
    }
}

struct Search<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    t: usize,
    /// Pattern vertices in placement order (descending pattern degree).
    order: Vec<usize>,
    /// For each slot, earlier slots that must be adjacent.
    req: Vec<Vec<usize>>,
    /// For each slot, whether it needs adjacency to some later slot.
    future_mask: Vec<u64>,
    /// Pattern edges with at least one endpoint in slot >= i.
    future_required: Vec<usize>,
    /// Host vertices by (degree desc, id asc); `rank_of[v]` inverts it.
    by_rank: Vec<usize>,
    rank_of: Vec<usize>,
    /// Mask of vertices with rank strictly greater than r.
    gt_rank: Vec<u64>,
    symmetry: bool,
    budget: u64,
    nodes: u64,
    aborted: bool,
    used: u64,
    sets: Vec<u64>,
    set_nbrs: Vec<u64>,
    seed_ranks: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, pattern: &'a Graph, cfg: &SearchConfig) -> Search<'a> {
        let t = pattern.order();
        let mut order: Vec<usize> = (1..=t).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v).unwrap()), v));
        let mut slot_of = vec![0usize; t + 1];
        for (slot, &v) in order.iter().enumerate() {
            slot_of[v] = slot;
        }
        let mut req = vec![Vec::new(); t];
        let mut future_mask = vec![0u64; t];
        let mut future_required = vec![0usize; t + 1];
        for (u, v) in pattern.edge_list() {
            let (a, b) = (slot_of[u].min(slot_of[v]), slot_of[u].max(slot_of[v]));
            req[b].push(a);
            future_mask[a] |= 1 << b;
            for i in 0..=b {
                future_required[i] += 1;
            }
        }
        let mut by_rank: Vec<usize> = g.vertices().collect();
        by_rank.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v).unwrap()), v));
        let mut rank_of = vec![0usize; g.order() + 1];
        for (r, &v) in by_rank.iter().enumerate() {
            rank_of[v] = r;
        }
        let mut gt_rank = vec![0u64; g.order() + 1];
        for r in (0..g.order()).rev() {
            gt_rank[r] = if r + 1 < g.order() {
                gt_rank[r + 1] | (1 << by_rank[r + 1])
            } else {
                0
            };
        }
        let complete = *pattern == Graph::complete(t);
        Search {
            g,
            pattern,
            t,
            order,
            req,
            future_mask,
            future_required,
            by_rank,
            rank_of,
            gt_rank,
            symmetry: cfg.symmetry_pruning && complete,
            budget: cfg.node_budget,
            nodes: 0,
            aborted: false,
            used: 0,
            sets: vec![0; t],
            set_nbrs: vec![0; t],
            seed_ranks: vec![0; t],
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget != 0 && self.nodes > self.budget {
            self.aborted = true;
        }
        self.aborted
    }

    fn place(&mut self, i: usize) -> bool {
        if self.tick() {
            return false;
        }
        if i == self.t {
            return true;
        }
        let free = self.g.vertex_bits() & !self.used;
        if (free.count_ones() as usize) < self.t - i {
            return false;
        }
        // Placed sets that still owe adjacency to an unplaced slot must
        // reach a free vertex.
        for j in 0..i {
            if self.future_mask[j] >> i != 0 && self.set_nbrs[j] & free == 0 {
                return false;
            }
        }
        // Edge budget: every pattern edge not yet realized needs a distinct
        // host edge with a free endpoint.
        let mut touch = 0usize;
        let mut inside = 0usize;
        let mut bits = free;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let row = self.g.neighbor_bits(v);
            touch += row.count_ones() as usize;
            inside += (row & free).count_ones() as usize;
        }
        let available = touch - inside / 2;
        if available < self.future_required[i] {
            return false;
        }
        // Enumerate candidate branch sets rooted at each allowed seed.
        let max_size = free.count_ones() as usize - (self.t - i - 1);
        let min_rank = if self.symmetry && i > 0 {
            self.seed_ranks[i - 1] + 1
        } else {
            0
        };
        for r in min_rank..self.by_rank.len() {
            let seed = self.by_rank[r];
            if free & (1 << seed) == 0 {
                continue;
            }
            self.seed_ranks[i] = r;
            let nbrs = self.g.neighbor_bits(seed);
            let ext = nbrs & free & self.gt_rank[r];
            if self.grow(i, 1 << seed, nbrs, ext, r, 1, max_size, free) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// Extends a rooted connected subset, emitting every enlargement
    /// exactly once (extension candidates are consumed left to right and
    /// only exclusive new neighbors join the pool).
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        i: usize,
        set: u64,
        set_nbrs: u64,
        ext: u64,
        seed_rank: usize,
        size: usize,
        max_size: usize,
        free: u64,
    ) -> bool {
        if self.tick() {
            return false;
        }
        if self.req[i].iter().all(|&j| set & self.set_nbrs[j] != 0) {
            self.sets[i] = set;
            self.set_nbrs[i] = set_nbrs;
            self.used |= set;
            if self.place(i + 1) {
                return true;
            }
            self.used &= !set;
            if self.aborted {
                return false;
            }
        }
        if size == max_size {
            return false;
        }
        let mut pool = ext;
        while pool != 0 {
            // Deterministic pick: lowest-rank member of the pool.
            let w = {
                let mut best = usize::MAX;
                let mut bits = pool;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if self.rank_of[v] < best {
                        best = self.rank_of[v];
                    }
                }
                self.by_rank[best]
            };
            pool &= !(1u64 << w);
            let w_nbrs = self.g.neighbor_bits(w);
            let exclusive = w_nbrs & free & self.gt_rank[seed_rank] & !set & !set_nbrs;
            let next_ext = pool | (exclusive & !(1u64 << w));
            if self.grow(
                i,
                set | (1 << w),
                set_nbrs | w_nbrs,
                next_ext,
                seed_rank,
                size + 1,
                max_size,
                free,
            ) {
                return true;
            }
            if self.aborted {
                return false;
            }
        }
        false
    }

    /// Builds the model from the recorded slot assignment (branch sets are
    /// indexed by pattern vertex).
    fn model(&self) -> MinorModel {
        let mut branch_sets = vec![Vec::new(); self.t];
        for (slot, &pv) in self.order.iter().enumerate() {
            let mut bits = self.sets[slot];
            let mut set = Vec::with_capacity(bits.count_ones() as usize);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                set.push(v);
            }
            branch_sets[pv - 1] = set;
        }
        MinorModel {
            host: self.g.clone(),
            branch_sets,
            target: self.pattern.clone(),
        }
    }
}

/// Exact Hadwiger number with witness: ascends from `K_1`, confirming the
/// final value by an exhausted `Absent` search one order above.
#[derive(Clone, Debug)]
pub struct HadwigerOutcome {
    pub value: usize,
    pub witness: Option<MinorModel>,
    /// False only when a node budget stopped the confirming search; the
    /// value is then a lower bound.
    pub exact: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

pub fn hadwiger(g: &Graph, cfg: &SearchConfig) -> HadwigerOutcome {
    let started = Instant::now();
    let mut nodes = 0;
    if g.order() == 0 {
        return HadwigerOutcome {
            value: 0,
            witness: None,
            exact: true,
            nodes,
            elapsed: started.elapsed(),
        };
    }
    let first = has_complete_minor(g, 1, cfg);
    nodes += first.nodes;
    let mut witness = match first.outcome {
        Outcome::Found(m) => Some(m),
        _ => unreachable!("K_1 is a minor of any nonempty graph"),
    };
    let mut value = 1;
    loop {
        let next = has_complete_minor(g, value + 1, cfg);
        nodes += next.nodes;
        match next.outcome {
            Outcome::Found(m) => {
                witness = Some(m);
                value += 1;
            }
            Outcome::Absent => {
                return HadwigerOutcome {
                    value,
                    witness,
                    exact: true,
                    nodes,
                    elapsed: started.elapsed(),
                }
            }
            Outcome::Inconclusive => {
                return HadwigerOutcome {
                    value,
                    witness,
                    exact: false,
                    nodes,
                    elapsed: started.elapsed(),
                }
            }
        }
    }
}

/// Result of the sufficient intrinsic-knottedness test.
#[derive(Clone, Debug)]
pub enum IkStatus {
    /// A `K_7` or `K_{3,3,1,1}` minor certificate.
    Certified(MinorModel),
    /// Neither certificate exists; this proves nothing about knottedness.
    NotCertified,
    /// A node budget stopped a search before a decision.
    Inconclusive,
}

/// Complete 4-partite pattern with parts 3, 3, 1, 1.
pub fn k3311() -> Graph {
    Graph::complete_multipartite(&[3, 3, 1, 1])
}

/// Searches for a `K_7` minor, then a `K_{3,3,1,1}` minor. Either one is a
/// sufficient certificate that the graph is intrinsically knotted; absence
/// of both decides nothing.
pub fn ik_sufficient(g: &Graph, cfg: &SearchConfig) -> (IkStatus, u64) {
    let k7 = has_complete_minor(g, 7, cfg);
    let mut nodes = k7.nodes;
    match k7.outcome {
        Outcome::Found(m) => return (IkStatus::Certified(m), nodes),
        Outcome::Inconclusive => return (IkStatus::Inconclusive, nodes),
        Outcome::Absent => {}
    }
    let quad = has_minor(g, &k3311(), cfg);
    nodes += quad.nodes;
    match quad.outcome {
        Outcome::Found(m) => (IkStatus::Certified(m), nodes),
        Outcome::Inconclusive => (IkStatus::Inconclusive, nodes),
        Outcome::Absent => (IkStatus::NotCertified, nodes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{enumerate_max_outerplanar, fixture, wheel};
    use rand::{Rng, SeedableRng};

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn complete_graph_contains_itself() {
        let r = has_complete_minor(&Graph::complete(5), 5, &cfg());
        match r.outcome {
            Outcome::Found(m) => {
                assert!(m.branch_sets.iter().all(|s| s.len() == 1));
            }
            other => panic!("expected Found, got {other:?}"),
        }
        assert!(!has_complete_minor(&Graph::complete(5), 6, &cfg())
            .outcome
            .is_found());
    }

    #[test]
    fn wheel_complement_bounds() {
        let host = wheel(11).unwrap().complement();
        assert!(has_complete_minor(&host, 7, &cfg()).outcome.is_found());
        assert!(matches!(
            has_complete_minor(&host, 8, &cfg()).outcome,
            Outcome::Absent
        ));
    }

    #[test]
    fn hadwiger_of_wheel_complements() {
        for n in 6..=10 {
            let h = hadwiger(&wheel(n).unwrap().complement(), &cfg());
            assert!(h.exact);
            assert_eq!(h.value, 3 * (n - 1) / 4, "n = {n}");
            assert!(h.witness.unwrap().verify().is_ok());
        }
    }

    #[test]
    fn hadwiger_of_complete_graphs() {
        for n in 1..=8 {
            let h = hadwiger(&Graph::complete(n), &cfg());
            assert_eq!((h.value, h.exact), (n, true));
        }
        assert_eq!(hadwiger(&Graph::empty(0), &cfg()).value, 0);
    }

    #[test]
    fn k6_contains_k23() {
        let pat = Graph::complete_multipartite(&[2, 3]);
        assert!(has_minor(&Graph::complete(6), &pat, &cfg()).outcome.is_found());
    }

    #[test]
    fn outerplanar_graphs_have_no_k4_minor() {
        for g in enumerate_max_outerplanar(8).unwrap() {
            let r = has_minor(&g, &Graph::complete(4), &cfg());
            assert!(matches!(r.outcome, Outcome::Absent), "{g:?}");
            // ... and K_{2,3} is absent too (outerplanarity).
            let r = has_minor(&g, &Graph::complete_multipartite(&[2, 3]), &cfg());
            assert!(matches!(r.outcome, Outcome::Absent), "{g:?}");
        }
    }

    #[test]
    fn monotone_in_target_and_edges() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(3..=8);
            let mut g = Graph::empty(n);
            for u in 1..=n {
                for v in (u + 1)..=n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(u, v);
                    }
                }
            }
            let mut prev_found = true;
            for t in 1..=n {
                let found = has_complete_minor(&g, t, &cfg()).outcome.is_found();
                assert!(prev_found || !found, "K_{t} found after a miss on {g:?}");
                prev_found = found;
            }
        }
    }

    #[test]
    fn budget_reports_inconclusive() {
        let tight = SearchConfig {
            node_budget: 3,
            ..SearchConfig::default()
        };
        let host = wheel(11).unwrap().complement();
        let r = has_complete_minor(&host, 7, &tight);
        assert!(matches!(r.outcome, Outcome::Inconclusive));
        assert!(r.nodes <= 4);
    }

    #[test]
    fn deterministic_node_counts() {
        let host = fixture("sec7_complement").unwrap();
        let a = has_complete_minor(&host, 6, &cfg());
        let b = has_complete_minor(&host, 6, &cfg());
        assert_eq!(a.nodes, b.nodes);
        match (a.outcome, b.outcome) {
            (Outcome::Found(x), Outcome::Found(y)) => {
                assert_eq!(x.branch_sets, y.branch_sets);
            }
            other => panic!("expected two Found outcomes, got {other:?}"),
        }
    }

    #[test]
    fn sec7_fixture_searches() {
        let comp = fixture("sec7_complement").unwrap();
        let h = hadwiger(&comp, &cfg());
        assert!(h.exact);
        assert_eq!(h.value, 6);
        let (status, _) = ik_sufficient(&comp, &cfg());
        match status {
            IkStatus::Certified(m) => assert_eq!(m.target, k3311()),
            other => panic!("expected a certificate, got {other:?}"),
        }
        // The planar host graph certifies nothing: both patterns are
        // nonplanar, so neither occurs as a minor of a planar graph.
        let planar = fixture("sec7_planar").unwrap();
        assert!(matches!(
            ik_sufficient(&planar, &cfg()).0,
            IkStatus::NotCertified
        ));
    }

    #[test]
    fn symmetry_pruning_is_outcome_invariant() {
        let no_sym = SearchConfig {
            symmetry_pruning: false,
            ..SearchConfig::default()
        };
        for n in [6, 7, 9] {
            let host = wheel(n).unwrap().complement();
            for t in 2..=6 {
                assert_eq!(
                    has_complete_minor(&host, t, &cfg()).outcome.is_found(),
                    has_complete_minor(&host, t, &no_sym).outcome.is_found()
                );
            }
        }
    }

    #[test]
    fn search_json_shape() {
        let r = has_complete_minor(&Graph::complete(3), 3, &cfg());
        let text = r.to_json();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["outcome"], "found");
        assert_eq!(doc["target"], "K3");
        assert!(doc["nodes"].as_u64().is_some());
    }
}
