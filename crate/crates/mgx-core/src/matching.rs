//! Maximum matchings and i-matching counts on underlying graphs.
//!
//! The main path is Edmonds' blossom algorithm, which handles the odd cycles
//! that are everywhere in this problem domain. An exhaustive search over
//! independent edge sets is kept as an independent oracle for small graphs,
//! and exact i-matching counts come from a vertex-indexed deletion recursion
//! memoized on induced-subgraph bitmasks.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, VertexId};

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }
}

/// Matching number together with the exact i-matching counts m_0..m_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingProfile {
    pub m: usize,
    pub counts: Vec<BigInt>,
}

/// A maximum matching via Edmonds' blossom algorithm (O(V^3)).
pub fn maximum_matching(g: &MixedGraph) -> Matching {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // Greedy seed round shortens the augmenting phase.
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w].is_none()) {
                mate[v] = Some(w);
                mate[w] = Some(v);
            }
        }
    }

    for root in 0..n {
        if mate[root].is_none() {
            augment_from(root, &adj, &mut mate);
        }
    }

    let mut edges = Vec::new();
    for v in 0..n {
        if let Some(w) = mate[v] {
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Matching { edges }
}

/// Size of a maximum matching.
pub fn matching_number(g: &MixedGraph) -> usize {
    maximum_matching(g).len()
}

fn augment_from(root: usize, adj: &[Vec<usize>], mate: &mut [Option<usize>]) -> bool {
    let n = adj.len();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut queue = VecDeque::new();
    used[root] = true;
    queue.push_back(root);

    let lca = |a: usize,
               b: usize,
               base: &[usize],
               parent: &[Option<usize>],
               mate: &[Option<usize>]| {
        let mut seen = vec![false; n];
        let mut x = a;
        loop {
            x = base[x];
            seen[x] = true;
            match mate[x] {
                None => break,
                Some(mx) => match parent[mx] {
                    None => break,
                    Some(px) => x = px,
                },
            }
        }
        let mut y = b;
        loop {
            y = base[y];
            if seen[y] {
                return y;
            }
            y = parent[mate[y].expect("even vertex on alternating tree")]
                .expect("path to root exists");
        }
    };

    #[allow(clippy::too_many_arguments)]
    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        base: &[usize],
        parent: &mut [Option<usize>],
        mate: &[Option<usize>],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            let mv = mate[v].expect("blossom path alternates");
            in_blossom[base[mv]] = true;
            parent[v] = Some(child);
            child = mv;
            v = parent[mv].expect("blossom path continues");
        }
    }

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            if to == root || mate[to].map_or(false, |m| parent[m].is_some()) {
                // Odd cycle: contract the blossom at the least common ancestor.
                let cur_base = lca(v, to, &base, &parent, mate);
                let mut in_blossom = vec![false; n];
                mark_path(v, cur_base, to, &base, &mut parent, mate, &mut in_blossom);
                mark_path(to, cur_base, v, &base, &mut parent, mate, &mut in_blossom);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => {
                        // Augmenting path found: flip matched edges along it.
                        let mut u = to;
                        loop {
                            let pu = parent[u].expect("path reaches root");
                            let next = mate[pu];
                            mate[u] = Some(pu);
                            mate[pu] = Some(u);
                            match next {
                                None => break,
                                Some(nx) => u = nx,
                            }
                        }
                        return true;
                    }
                    Some(m) => {
                        if !used[m] {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
    }
    false
}

/// Exact i-matching counts via the recursion on the smallest live vertex v:
/// matchings either leave v unmatched or pair it with a live neighbor. Every
/// subproblem is an induced subgraph, memoized on its vertex bitmask.
pub fn matching_counts(g: &MixedGraph) -> Result<MatchingProfile> {
    let n = g.vertex_count();
    if n > 64 {
        return Err(Error::CapExceeded(format!(
            "matching_counts supports at most 64 vertices, got {n}"
        )));
    }
    let adj_mask: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w)))
        .collect();
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    let counts = count_by_size(full, &adj_mask, &mut memo);
    let m = counts.len() - 1;
    Ok(MatchingProfile { m, counts })
}

fn count_by_size(mask: u64, adj: &[u64], memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if mask == 0 {
        return vec![BigInt::one()];
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let mut acc = count_by_size(rest, adj, memo);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let sub = count_by_size(rest & !(1u64 << u), adj, memo);
        if acc.len() < sub.len() + 1 {
            acc.resize(sub.len() + 1, BigInt::zero());
        }
        for (i, c) in sub.iter().enumerate() {
            acc[i + 1] += c;
        }
    }
    while acc.len() > 1 && acc.last().map_or(false, |c| c.is_zero()) {
        acc.pop();
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Matching number of `g` with the `forbidden` edges removed. Comparing the
/// result with `matching_number(g)` decides whether a maximum matching
/// avoiding the forbidden set exists.
pub fn max_matching_avoiding(g: &MixedGraph, forbidden: &[(VertexId, VertexId)]) -> usize {
    let banned: std::collections::HashSet<(usize, usize)> = forbidden
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut sub = MixedGraph::new(g.vertex_count());
    for e in g.edges() {
        if !banned.contains(&(e.u, e.v)) {
            sub.add_edge(e.u, e.v).unwrap();
        }
    }
    matching_number(&sub)
}

/// Exhaustive matching number over independent edge subsets; the independent
/// oracle for the blossom path. Capped at 24 edges.
pub fn brute_force_matching_number(g: &MixedGraph) -> Result<usize> {
    if g.edge_count() > 24 {
        return Err(Error::CapExceeded(format!(
            "brute force matching capped at 24 edges, got {}",
            g.edge_count()
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    fn rec(edges: &[(usize, usize)], idx: usize, used: u64, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if idx == edges.len() || size + (edges.len() - idx) <= *best {
            return;
        }
        let (u, v) = edges[idx];
        if used & (1 << u) == 0 && used & (1 << v) == 0 {
            rec(edges, idx + 1, used | (1 << u) | (1 << v), size + 1, best);
        }
        rec(edges, idx + 1, used, size, best);
    }
    let mut best = 0;
    rec(&edges, 0, 0, 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> MixedGraph {
        let mut g = MixedGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    fn cycle(n: usize) -> MixedGraph {
        let mut g = path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    fn counts_of(g: &MixedGraph) -> Vec<i64> {
        matching_counts(g)
            .unwrap()
            .counts
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn maximum_matching_small() {
        assert_eq!(maximum_matching(&path(4)).len(), 2);
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&cycle(6)).len(), 3);
        // star on 5 vertices
        let mut star = MixedGraph::new(5);
        for v in 1..5 {
            star.add_edge(0, v).unwrap();
        }
        assert_eq!(maximum_matching(&star).len(), 1);
    }

    #[test]
    fn matching_is_vertex_disjoint() {
        let m = maximum_matching(&cycle(9));
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in m.edges() {
            assert!(seen.insert(u));
            assert!(seen.insert(v));
        }
        assert_eq!(m.len(), 4);
    }

    #[test]
    fn petersen_matching_number() {
        let mut g = MixedGraph::new(10);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5).unwrap(); // outer cycle
            g.add_edge(v, v + 5).unwrap(); // spokes
            g.add_edge(5 + v, 5 + (v + 2) % 5).unwrap(); // pentagram
        }
        assert_eq!(g.edge_count(), 15);
        // Frozen from the exhaustive oracle below.
        assert_eq!(brute_force_matching_number(&g).unwrap(), 5);
        assert_eq!(maximum_matching(&g).len(), 5);
    }

    #[test]
    fn matching_counts_examples() {
        assert_eq!(counts_of(&cycle(4)), vec![1, 4, 2]);
        assert_eq!(counts_of(&path(2)), vec![1, 1]);
        // Frozen from subset enumeration: P5 has 4 single edges and the
        // 3 disjoint pairs (e1,e3), (e1,e4), (e2,e4).
        assert_eq!(counts_of(&path(5)), vec![1, 4, 3]);
        assert_eq!(counts_of(&MixedGraph::new(3)), vec![1]);
    }

    #[test]
    fn avoiding_forbidden_edges() {
        // C4 with pendant 4-0: the pendant edge is avoidable.
        let mut g = cycle(4);
        let mut g5 = MixedGraph::new(5);
        for e in g.edges() {
            g5.add_edge(e.u, e.v).unwrap();
        }
        g5.add_edge(4, 0).unwrap();
        g = g5;
        assert_eq!(matching_number(&g), 2);
        assert_eq!(max_matching_avoiding(&g, &[(4, 0)]), 2);

        assert_eq!(max_matching_avoiding(&cycle(5), &[]), 2);

        let tri = cycle(3);
        let all: Vec<(usize, usize)> = tri.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(max_matching_avoiding(&tri, &all), 0);
    }

    #[test]
    fn brute_force_oracle() {
        assert_eq!(brute_force_matching_number(&cycle(6)).unwrap(), 3);
        let mut star = MixedGraph::new(5);
        for v in 1..5 {
            star.add_edge(0, v).unwrap();
        }
        assert_eq!(brute_force_matching_number(&star).unwrap(), 1);
        let mut big = MixedGraph::new(26);
        for v in 1..26 {
            big.add_edge(v - 1, v).unwrap();
        }
        assert!(brute_force_matching_number(&big).is_err());
    }

    #[test]
    fn quasi_pendant_deletion_drops_matching_by_one() {
        // Lemma: deleting a quasi-pendant vertex v gives m(G-v) = m(G)-1.
        for g in [path(5), path(6), cycle(4)] {
            let mut with_pendant = MixedGraph::new(g.vertex_count() + 1);
            for e in g.edges() {
                with_pendant.add_edge(e.u, e.v).unwrap();
            }
            with_pendant.add_edge(0, g.vertex_count()).unwrap();
            let m = matching_number(&with_pendant);
            for (_, quasi) in with_pendant.pendant_and_quasi_pendant() {
                if with_pendant.degree(quasi) > 1 {
                    let r = with_pendant.delete_vertices(&[quasi]).unwrap();
                    assert_eq!(matching_number(&r.graph), m - 1);
                }
            }
        }
    }
}
