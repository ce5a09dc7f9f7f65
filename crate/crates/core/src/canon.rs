//! Exact canonical forms for small graphs.
//!
//! Color refinement followed by backtracking over the refinement-stable
//! partition: every non-singleton cell is split by individualizing each of
//! its vertices in turn, and the code is the lexicographic minimum of the
//! packed adjacency matrices over all discrete leaves. Two graphs get equal
//! codes iff they are isomorphic. The order cap is configuration, not a
//! structural limit.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for canonical codes.
pub const DEFAULT_CANON_CAP: usize = 16;

/// Total-order key with equal values exactly on isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_code_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_code_capped(g: &Graph, cap: usize) -> Result<CanonicalCode> {
    let n = g.order();
    if n > cap {
        return Err(Error::OverCap(n, cap));
    }
    if n == 0 {
        return Ok(CanonicalCode {
            order: 0,
            bits: Vec::new(),
        });
    }
    let mut best: Option<Vec<u64>> = None;
    let colors = vec![0u32; n + 1];
    search(g, colors, &mut best);
    Ok(CanonicalCode {
        order: n,
        bits: best.expect("at least one discrete leaf"),
    })
}

fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<Vec<u64>>) {
    refine(g, &mut colors);
    let n = g.order();
    // Cells, indexed by color; refinement keeps colors dense in 0..k.
    let ncolors = colors[1..].iter().max().copied().unwrap_or(0) as usize + 1;
    if ncolors == n {
        let code = pack(g, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    // First smallest non-singleton cell, by color.
    let mut cell_size = vec![0usize; ncolors];
    for v in 1..=n {
        cell_size[colors[v] as usize] += 1;
    }
    let target = (0..ncolors)
        .filter(|&c| cell_size[c] > 1)
        .min_by_key(|&c| (cell_size[c], c))
        .expect("non-discrete partition has a non-singleton cell");
    let cell: Vec<usize> = (1..=n)
        .filter(|&v| colors[v] as usize == target)
        .collect();
    // If every transposition within the cell is an automorphism (uniform
    // adjacency rows ignoring each other), one representative suffices;
    // this keeps empty, complete, and multipartite cells from branching
    // factorially.
    let interchangeable = cell.iter().enumerate().all(|(i, &u)| {
        cell[i + 1..].iter().all(|&v| {
            let mask = !(1u64 << u) & !(1u64 << v);
            g.neighbor_bits(u) & mask == g.neighbor_bits(v) & mask
        })
    });
    let branch_on: &[usize] = if interchangeable { &cell[..1] } else { &cell };
    for &v in branch_on {
        let mut branch = colors.clone();
        branch[v] = ncolors as u32;
        search(g, branch, best);
    }
}

/// 1-WL color refinement to a stable partition. Colors are renumbered
/// densely after every round, ordered by (old color, sorted neighbor color
/// multiset), which keeps the refinement isomorphism-invariant.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = g.order();
    if n == 0 {
        return;
    }
    let count = |cs: &[u32]| cs[1..].iter().max().copied().unwrap_or(0) as usize + 1;
    loop {
        let before = count(colors);
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (1..=n)
            .map(|v| {
                let mut nbr: Vec<u32> = g
                    .neighbors(v)
                    .expect("valid vertex")
                    .iter()
                    .map(|&u| colors[u])
                    .collect();
                nbr.sort_unstable();
                (colors[v], nbr, v)
            })
            .collect();
        sigs.sort();
        let mut c = 0u32;
        let mut next = vec![0u32; n + 1];
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                c += 1;
            }
            next[sigs[i].2] = c;
        }
        colors[1..=n].copy_from_slice(&next[1..=n]);
        // Each round refines the previous partition, so an unchanged color
        // count means the partition is stable.
        if count(colors) == before {
            return;
        }
    }
}

/// Isomorphism test by exhausting permutations. Test oracle; exponential.
#[cfg(test)]
pub fn isomorphic_brute_force(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..=n).collect();
    permute_rec(a, b, &mut perm, 1)
}

#[cfg(test)]
fn permute_rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
    let n = a.order();
    if k > n {
        return a
            .edge_list()
            .iter()
            .all(|&(u, v)| b.has_edge(perm[u], perm[v]));
    }
    for i in k..=n {
        perm.swap(k, i);
        // prefix check: edges within 1..=k must map to edges
        let ok = (1..k).all(|u| a.has_edge(u, k) == b.has_edge(perm[u], perm[k]));
        if ok && permute_rec(a, b, perm, k + 1) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Packs the adjacency matrix of `g` relabeled so that color rank becomes
/// vertex position, row-major upper triangle, 64 bits per word.
fn pack(g: &Graph, colors: &[u32]) -> Vec<u64> {
    let n = g.order();
    // position[c] = vertex with color c
    let mut vertex_at = vec![0usize; n];
    for v in 1..=n {
        vertex_at[colors[v] as usize] = v;
    }
    let mut bits = vec![0u64; (n * (n - 1) / 2).div_ceil(64).max(1)];
    let mut pos = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(vertex_at[i], vertex_at[j]) {
                bits[pos / 64] |= 1 << (63 - pos % 64);
            }
            pos += 1;
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::wheel;
    use rand::{Rng, SeedableRng};

    fn random_relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
        let n = g.order();
        let mut perm: Vec<usize> = (0..=n).collect();
        for i in (2..=n).rev() {
            let j = rng.gen_range(1..=i);
            perm.swap(i, j);
        }
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn relabelings_share_codes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let w7 = wheel(7).unwrap();
        for _ in 0..20 {
            let h = random_relabel(&w7, &mut rng);
            assert_eq!(canonical_code(&h).unwrap(), canonical_code(&w7).unwrap());
        }
    }

    #[test]
    fn wheel_differs_from_fan() {
        // W_7 vs K_1 + P_6: degree sequences already differ, and the
        // brute-force isomorphism search agrees.
        let w7 = wheel(7).unwrap();
        let fan = Graph::join(&Graph::path(6), &Graph::empty(1));
        assert_ne!(w7.degree_sequence(), fan.degree_sequence());
        assert!(!isomorphic_brute_force(&w7, &fan));
        assert_ne!(canonical_code(&w7).unwrap(), canonical_code(&fan).unwrap());
    }

    #[test]
    fn codes_match_brute_force_on_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for trial in 0..300 {
            let n = rng.gen_range(1..=7);
            let mut a = Graph::empty(n);
            let mut b = Graph::empty(n);
            for u in 1..=n {
                for v in (u + 1)..=n {
                    if rng.gen_bool(0.5) {
                        a.add_edge(u, v);
                    }
                    if rng.gen_bool(0.5) {
                        b.add_edge(u, v);
                    }
                }
            }
            // Half the trials compare against a relabeling instead.
            let b = if trial % 2 == 0 {
                random_relabel(&a, &mut rng)
            } else {
                b
            };
            assert_eq!(
                canonical_code(&a).unwrap() == canonical_code(&b).unwrap(),
                isomorphic_brute_force(&a, &b),
                "disagreement on {a:?} vs {b:?}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(17);
        assert!(canonical_code(&g).is_err());
        assert!(canonical_code_capped(&g, 20).is_ok());
    }

    #[test]
    fn highly_symmetric_graphs() {
        let c6 = Graph::cycle(6);
        let two_triangles =
            Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_ne!(
            canonical_code(&c6).unwrap(),
            canonical_code(&two_triangles).unwrap()
        );
        assert_eq!(
            canonical_code(&Graph::complete(8)).unwrap(),
            canonical_code(&Graph::complete(8)).unwrap()
        );
    }
}
