//! Graph generators: fixed families, seeded random graphs, exhaustive
//! orientation enumeration, and the labeled census of connected graphs with
//! pairwise vertex-disjoint cycles (trees, unicyclic graphs and cacti).
//!
//! Determinism contract: the same spec and seed always produce the same
//! graph sequence, and orientation enumeration walks codes 0..3^|E| in
//! numeric order.

use rand::rngs::StdRng;
use rand::Rng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::graph::MixedGraph;

/// Cap on exhaustive orientation enumeration (3^20 codes).
pub const ORIENTATION_CAP: usize = 20;
/// Cap on the labeled census generators.
pub const CENSUS_CAP: usize = 8;

/// Deterministic seeded RNG used by every random generator in the crate.
pub fn seeded_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Graph family selector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    RandomTree { n: usize, count: usize },
    UnicyclicAll { n: usize },
    RandomConnected { n: usize, extra: usize, count: usize },
}

/// A family plus the seed that fixes the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub seed: u64,
}

/// Generates the graph stream for a spec. Deterministic in (family, seed).
pub fn generate(spec: &GeneratorSpec) -> Result<Box<dyn Iterator<Item = MixedGraph> + Send>> {
    match spec.family {
        Family::Path { n } => Ok(Box::new(std::iter::once(path(n)))),
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::InvalidSpec(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(Box::new(std::iter::once(cycle(n))))
        }
        Family::Star { n } => {
            if n < 1 {
                return Err(Error::InvalidSpec("star needs n >= 1".into()));
            }
            Ok(Box::new(std::iter::once(star(n))))
        }
        Family::RandomTree { n, count } => {
            let mut rng = seeded_rng(spec.seed);
            let trees: Vec<MixedGraph> = (0..count).map(|_| random_tree(n, &mut rng)).collect();
            Ok(Box::new(trees.into_iter()))
        }
        Family::UnicyclicAll { n } => Ok(Box::new(unicyclic_all(n)?.into_iter())),
        Family::RandomConnected { n, extra, count } => {
            if n == 0 {
                return Err(Error::InvalidSpec("random_connected needs n >= 1".into()));
            }
            let mut rng = seeded_rng(spec.seed);
            let graphs: Vec<MixedGraph> = (0..count)
                .map(|_| random_connected(n, extra, &mut rng))
                .collect();
            Ok(Box::new(graphs.into_iter()))
        }
    }
}

pub fn path(n: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

pub fn cycle(n: usize) -> MixedGraph {
    let mut g = path(n);
    g.add_edge(n - 1, 0).unwrap();
    g
}

/// Star on n vertices, center 0.
pub fn star(n: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for v in 1..n {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// Uniform random labeled tree via a random Pruefer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> MixedGraph {
    if n <= 1 {
        return MixedGraph::new(n);
    }
    if n == 2 {
        let mut g = MixedGraph::new(2);
        g.add_edge(0, 1).unwrap();
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(n, &seq)
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> MixedGraph {
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = MixedGraph::new(n);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("a leaf always remains");
        g.add_edge(leaf, s).unwrap();
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaf_heap.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    g.add_edge(a, b).unwrap();
    g
}

/// Random connected graph: a uniform tree plus `extra` additional distinct
/// edges (fewer when the complete graph runs out of room).
pub fn random_connected(n: usize, extra: usize, rng: &mut impl Rng) -> MixedGraph {
    let mut g = random_tree(n, rng);
    let max_extra = n * (n - 1) / 2 - g.edge_count();
    let want = extra.min(max_extra);
    let mut added = 0;
    while added < want {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
            added += 1;
        }
    }
    g
}

/// Random graph on `n` vertices: every pair present independently with a
/// density drawn once per graph. Not necessarily connected.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> MixedGraph {
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut g = MixedGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Each edge independently kept undirected or oriented either way.
pub fn random_orientation(g: &MixedGraph, rng: &mut impl Rng) -> MixedGraph {
    let mut out = MixedGraph::new(g.vertex_count());
    for e in g.edges() {
        match rng.gen_range(0..3u8) {
            0 => out.add_edge(e.u, e.v).unwrap(),
            1 => out.add_arc(e.u, e.v).unwrap(),
            _ => out.add_arc(e.v, e.u).unwrap(),
        }
    }
    out
}

/// Number of orientations of a graph with `edges` edges, i.e. 3^edges.
pub fn orientation_count(edges: usize) -> u64 {
    3u64.pow(edges as u32)
}

/// Applies orientation code `code` (base-3 digits, least significant digit
/// on edge 0): digit 0 keeps the edge undirected, 1 orients u->v, 2 v->u.
pub fn orient_by_code(g: &MixedGraph, code: u64) -> MixedGraph {
    let mut out = MixedGraph::new(g.vertex_count());
    let mut c = code;
    for e in g.edges() {
        match c % 3 {
            0 => out.add_edge(e.u, e.v).unwrap(),
            1 => out.add_arc(e.u, e.v).unwrap(),
            _ => out.add_arc(e.v, e.u).unwrap(),
        }
        c /= 3;
    }
    out
}

/// All 3^|E| orientations of the underlying graph of `g`, in code order.
pub fn enumerate_orientations(
    g: &MixedGraph,
) -> Result<impl Iterator<Item = MixedGraph> + Send + '_> {
    if g.edge_count() > ORIENTATION_CAP {
        return Err(Error::CapExceeded(format!(
            "orientation enumeration capped at {ORIENTATION_CAP} edges, got {}",
            g.edge_count()
        )));
    }
    let total = orientation_count(g.edge_count());
    Ok((0..total).map(move |code| orient_by_code(g, code)))
}

/// How many cycles a census graph must contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleCountFilter {
    Any,
    Exactly(usize),
    AtLeast(usize),
}

impl CycleCountFilter {
    fn admits(self, k: usize) -> bool {
        match self {
            CycleCountFilter::Any => true,
            CycleCountFilter::Exactly(want) => k == want,
            CycleCountFilter::AtLeast(min) => k >= min,
        }
    }
}

/// Every labeled connected unicyclic graph on `n` vertices, exactly once.
pub fn unicyclic_all(n: usize) -> Result<Vec<MixedGraph>> {
    let mut out = Vec::new();
    for_each_cactus(n, CycleCountFilter::Exactly(1), &mut |g| out.push(g))?;
    Ok(out)
}

/// Streams every labeled connected graph on `n` vertices whose blocks are
/// single edges or cycles with pairwise vertex-disjoint cycles (trees when
/// the filter admits zero cycles), each graph exactly once.
///
/// Construction: pick disjoint cycle supports and cycle orders, then join
/// the contracted pieces by a labeled tree whose edges pick their attachment
/// vertices inside each cycle.
pub fn for_each_cactus(
    n: usize,
    filter: CycleCountFilter,
    f: &mut dyn FnMut(MixedGraph),
) -> Result<()> {
    if n > CENSUS_CAP {
        return Err(Error::CapExceeded(format!(
            "census generation capped at {CENSUS_CAP} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(());
    }
    let mut partition = Vec::new();
    let mut emit = Emitter { n, f };
    cycle_length_partitions(n, 3, &mut partition, &mut |parts| {
        if !filter.admits(parts.len()) {
            return;
        }
        let mut chosen: Vec<Vec<usize>> = Vec::new();
        choose_cycle_supports(n, parts, 0, (1u64 << n) - 1, &mut chosen, &mut emit);
    });
    Ok(())
}

struct Emitter<'a> {
    n: usize,
    f: &'a mut dyn FnMut(MixedGraph),
}

/// Nondecreasing cycle length multisets with parts >= `min`, total <= n.
fn cycle_length_partitions(
    n: usize,
    min: usize,
    cur: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    f(cur);
    let used: usize = cur.iter().sum();
    for q in min..=(n - used).min(n) {
        if used + q > n {
            break;
        }
        cur.push(q);
        cycle_length_partitions(n, q, cur, f);
        cur.pop();
    }
}

/// Chooses disjoint vertex supports for the cycle lengths; equal lengths are
/// tie-broken by increasing minimum vertex so each support multiset is
/// produced once.
fn choose_cycle_supports(
    n: usize,
    parts: &[usize],
    idx: usize,
    avail: u64,
    chosen: &mut Vec<Vec<usize>>,
    emit: &mut Emitter,
) {
    if idx == parts.len() {
        let mut orders: Vec<Vec<Vec<usize>>> = Vec::with_capacity(chosen.len());
        for support in chosen.iter() {
            orders.push(cycle_orders(support));
        }
        attach_and_emit(n, chosen, &orders, emit);
        return;
    }
    let q = parts[idx];
    // Tie-break: if the previous part has the same length, this support's
    // minimum must exceed the previous one's.
    let min_floor = if idx > 0 && parts[idx - 1] == q {
        chosen[idx - 1][0] + 1
    } else {
        0
    };
    let candidates: Vec<usize> = (min_floor..n).filter(|&v| avail & (1 << v) != 0).collect();
    let mut pick = Vec::with_capacity(q);
    choose_k(&candidates, q, 0, &mut pick, &mut |subset| {
        let mask: u64 = subset.iter().fold(0, |m, &v| m | (1 << v));
        chosen.push(subset.to_vec());
        choose_cycle_supports(n, parts, idx + 1, avail & !mask, chosen, emit);
        chosen.pop();
    });
}

fn choose_k(
    items: &[usize],
    k: usize,
    from: usize,
    cur: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if cur.len() == k {
        f(cur);
        return;
    }
    let need = k - cur.len();
    for i in from..items.len() {
        if items.len() - i < need {
            break;
        }
        cur.push(items[i]);
        choose_k(items, k, i + 1, cur, f);
        cur.pop();
    }
}

/// All distinct labeled cycles on a sorted support: traversals starting at
/// the smallest vertex, reflections killed by requiring the second vertex to
/// be smaller than the last, (q-1)!/2 of them.
fn cycle_orders(support: &[usize]) -> Vec<Vec<usize>> {
    let q = support.len();
    let rest: Vec<usize> = support[1..].to_vec();
    let mut out = Vec::new();
    let mut perm = rest.clone();
    permute(&mut perm, 0, &mut |p| {
        if p[0] < p[q - 2] {
            let mut traversal = Vec::with_capacity(q);
            traversal.push(support[0]);
            traversal.extend_from_slice(p);
            out.push(traversal);
        }
    });
    out
}

fn permute(items: &mut [usize], at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// Joins the contracted pieces (one node per cycle, one per leftover vertex)
/// by every labeled tree, expanding tree edges through every attachment
/// choice, and emits the finished graphs.
fn attach_and_emit(
    n: usize,
    supports: &[Vec<usize>],
    orders: &[Vec<Vec<usize>>],
    emit: &mut Emitter,
) {
    let k = supports.len();
    let cycle_mask: u64 = supports
        .iter()
        .flat_map(|s| s.iter())
        .fold(0, |m, &v| m | (1 << v));
    let singles: Vec<usize> = (0..n).filter(|&v| cycle_mask & (1 << v) == 0).collect();
    let t = k + singles.len();

    // Choice list per contracted node: a cycle node may attach anywhere on
    // its cycle, a singleton only at itself.
    let node_choices: Vec<Vec<usize>> = (0..t)
        .map(|node| {
            if node < k {
                supports[node].clone()
            } else {
                vec![singles[node - k]]
            }
        })
        .collect();

    let mut order_pick = vec![0usize; k];
    if t == 1 {
        // No tree edges: a bare cycle (or a single vertex).
        emit_cycle_products(n, supports, orders, &mut order_pick, 0, &[], &node_choices, emit);
        return;
    }

    // All labeled trees on t nodes via Pruefer sequences.
    let seq_len = t - 2;
    let total: u64 = (t as u64).pow(seq_len as u32);
    let mut seq = vec![0usize; seq_len];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = (c % t as u64) as usize;
            c /= t as u64;
        }
        let tree_edges = pruefer_edges(t, &seq);
        emit_cycle_products(
            n,
            supports,
            orders,
            &mut order_pick,
            0,
            &tree_edges,
            &node_choices,
            emit,
        );
    }
}

/// Pruefer decode returning the edge list of the tree on `t` nodes.
fn pruefer_edges(t: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if t == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; t];
    for &s in seq {
        degree[s] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..t)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(t - 1);
    for &s in seq {
        let std::cmp::Reverse(leaf) = heap.pop().unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            heap.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().unwrap();
    let std::cmp::Reverse(b) = heap.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Iterates the cartesian product of cycle orders, then of attachment
/// choices for every tree edge, emitting one graph per combination.
#[allow(clippy::too_many_arguments)]
fn emit_cycle_products(
    n: usize,
    supports: &[Vec<usize>],
    orders: &[Vec<Vec<usize>>],
    order_pick: &mut Vec<usize>,
    at: usize,
    tree_edges: &[(usize, usize)],
    node_choices: &[Vec<usize>],
    emit: &mut Emitter,
) {
    if at < supports.len() {
        for pick in 0..orders[at].len() {
            order_pick[at] = pick;
            emit_cycle_products(
                n,
                supports,
                orders,
                order_pick,
                at + 1,
                tree_edges,
                node_choices,
                emit,
            );
        }
        return;
    }

    // Mixed-radix walk over attachment choices for the tree edge endpoints.
    let radices: Vec<(usize, usize)> = tree_edges
        .iter()
        .map(|&(x, y)| (node_choices[x].len(), node_choices[y].len()))
        .collect();
    let combos: u64 = radices
        .iter()
        .map(|&(a, b)| (a * b) as u64)
        .product();
    for mut code in 0..combos {
        let mut g = MixedGraph::new(n);
        for (ci, order) in orders.iter().enumerate() {
            let traversal = &order[order_pick[ci]];
            for i in 0..traversal.len() {
                let a = traversal[i];
                let b = traversal[(i + 1) % traversal.len()];
                g.add_edge(a, b).unwrap();
            }
        }
        for (ei, &(x, y)) in tree_edges.iter().enumerate() {
            let (ra, rb) = radices[ei];
            let pick = (code % (ra * rb) as u64) as usize;
            code /= (ra * rb) as u64;
            let ax = node_choices[x][pick % ra];
            let ay = node_choices[y][pick / ra];
            // Supports are disjoint and tree edges are distinct pairs, so
            // the attachment edge is always new.
            g.add_edge(ax, ay)
                .expect("attachment edges cannot collide");
        }
        (emit.f)(g);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_families() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).cycle_space_dim(), 1);
        assert_eq!(star(5).degree(0), 4);
    }

    #[test]
    fn orientation_enumeration_counts() {
        let mut single = MixedGraph::new(2);
        single.add_edge(0, 1).unwrap();
        assert_eq!(enumerate_orientations(&single).unwrap().count(), 3);
        assert_eq!(enumerate_orientations(&path(3)).unwrap().count(), 9);
        assert_eq!(enumerate_orientations(&cycle(3)).unwrap().count(), 27);
    }

    #[test]
    fn orientation_even_sigma_count_on_triangle() {
        // Frozen from this enumeration itself: a triangle orientation has an
        // even signature exactly when its arc count is even, giving
        // 1 + C(3,2)*4 = 13 of the 27 orientations.
        use crate::elementary::signature;
        let c3 = cycle(3);
        let even = enumerate_orientations(&c3)
            .unwrap()
            .filter(|g| signature(g, &[0, 1, 2]).unwrap().sigma % 2 == 0)
            .count();
        assert_eq!(even, 13);
    }

    #[test]
    fn random_generators_are_deterministic() {
        let spec = GeneratorSpec {
            family: Family::RandomTree { n: 10, count: 3 },
            seed: 7,
        };
        let a: Vec<MixedGraph> = generate(&spec).unwrap().collect();
        let b: Vec<MixedGraph> = generate(&spec).unwrap().collect();
        assert_eq!(a, b);
        for t in &a {
            assert_eq!(t.edge_count(), 9);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = seeded_rng(11);
        for n in 1..12 {
            for extra in 0..4 {
                let g = random_connected(n, extra, &mut rng);
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn unicyclic_census_counts() {
        // Frozen from the brute-force census below (connected graphs with
        // |E| = |V|): 1, 15, 222, 3660 labeled unicyclic graphs on 3..6
        // vertices.
        assert_eq!(unicyclic_all(3).unwrap().len(), 1);
        assert_eq!(unicyclic_all(4).unwrap().len(), 15);
        assert_eq!(unicyclic_all(5).unwrap().len(), 222);
        assert_eq!(unicyclic_all(6).unwrap().len(), 3660);
        for g in unicyclic_all(5).unwrap() {
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), g.vertex_count());
        }
    }

    #[test]
    fn unicyclic_census_matches_brute_force() {
        use std::collections::HashSet;
        for n in 3..=5usize {
            let mut brute: HashSet<Vec<(usize, usize)>> = HashSet::new();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                if mask.count_ones() as usize != n {
                    continue;
                }
                let mut g = MixedGraph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                if g.is_connected() {
                    let mut key: Vec<(usize, usize)> =
                        g.edges().iter().map(|e| (e.u, e.v)).collect();
                    key.sort_unstable();
                    brute.insert(key);
                }
            }
            let census: HashSet<Vec<(usize, usize)>> = unicyclic_all(n)
                .unwrap()
                .iter()
                .map(|g| {
                    let mut key: Vec<(usize, usize)> =
                        g.edges().iter().map(|e| (e.u, e.v)).collect();
                    key.sort_unstable();
                    key
                })
                .collect();
            assert_eq!(census.len(), unicyclic_all(n).unwrap().len(), "no dups");
            assert_eq!(census, brute, "census must equal filter at n={n}");
        }
    }

    #[test]
    fn cactus_census_matches_brute_force() {
        use std::collections::HashSet;
        for n in 1..=5usize {
            let mut brute: HashSet<Vec<(usize, usize)>> = HashSet::new();
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = MixedGraph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                if g.is_connected() && g.all_cycles_if_disjoint().is_some() {
                    let mut key: Vec<(usize, usize)> =
                        g.edges().iter().map(|e| (e.u, e.v)).collect();
                    key.sort_unstable();
                    brute.insert(key);
                }
            }
            let mut census: Vec<Vec<(usize, usize)>> = Vec::new();
            for_each_cactus(n, CycleCountFilter::Any, &mut |g| {
                let mut key: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
                key.sort_unstable();
                census.push(key);
            })
            .unwrap();
            let census_set: HashSet<_> = census.iter().cloned().collect();
            assert_eq!(census.len(), census_set.len(), "duplicates at n={n}");
            assert_eq!(census_set, brute, "census mismatch at n={n}");
        }
    }

    #[test]
    fn census_cap() {
        assert!(unicyclic_all(9).is_err());
    }
}
