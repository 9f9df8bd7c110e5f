//! Real elementary subgraph enumeration: the independent characteristic
//! polynomial oracle.
//!
//! An elementary subgraph is a vertex-disjoint union of single edges and
//! cycles; it is real when every cycle has an even signature, equivalently
//! when the product of matrix entries around the cycle is +1 or -1. The
//! coefficient a_j of the characteristic polynomial equals
//!
//! ```text
//!   sum over real elementary subgraphs B on j vertices of
//!       (-1)^(sigma(B)/2 + omega(B)) * 2^(number of cycles of B)
//! ```
//!
//! where sigma(B) sums the cycle signatures and omega(B) counts components.
//! Enumeration is deliberately exponential; it exists to check the
//! Faddeev–LeVerrier route, never to replace it.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, MixedGraph, VertexId};
use crate::hermitian::IntPolynomial;

/// Cap on the order accepted by the enumeration routines.
pub const ENUMERATION_CAP: usize = 14;

/// Forward/backward arc counts of a cycle traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleSignature {
    pub forward: usize,
    pub backward: usize,
    /// |forward - backward|; independent of traversal direction.
    pub sigma: usize,
}

/// Signature of a cycle given as an ordered vertex sequence (closed
/// implicitly). Undirected edges count toward neither direction.
pub fn signature(g: &MixedGraph, traversal: &[VertexId]) -> Result<CycleSignature> {
    validate_cycle(g, traversal)?;
    let mut forward = 0usize;
    let mut backward = 0usize;
    let len = traversal.len();
    for idx in 0..len {
        let a = traversal[idx];
        let b = traversal[(idx + 1) % len];
        let e = g.edge_between(a, b).expect("validated above");
        if let EdgeKind::Arc { tail, .. } = e.kind {
            if tail == a {
                forward += 1;
            } else {
                backward += 1;
            }
        }
    }
    Ok(CycleSignature {
        forward,
        backward,
        sigma: forward.abs_diff(backward),
    })
}

/// Whether the cycle's entry product is +1 or -1. The product test and the
/// even-signature test must agree; the equivalence is asserted.
pub fn is_real(g: &MixedGraph, traversal: &[VertexId]) -> Result<bool> {
    let sig = signature(g, traversal)?;
    // Product of entries: each undirected edge contributes 1, each forward
    // arc i, each backward arc -i = 1/i, so the product is i^(f-b).
    let quarter_turns = (sig.forward as i64 - sig.backward as i64).rem_euclid(4);
    let real_by_value = quarter_turns == 0 || quarter_turns == 2;
    let real_by_sigma = sig.sigma % 2 == 0;
    assert_eq!(
        real_by_value, real_by_sigma,
        "entry-product realness must coincide with even signature"
    );
    Ok(real_by_value)
}

fn validate_cycle(g: &MixedGraph, traversal: &[VertexId]) -> Result<()> {
    if traversal.len() < 3 {
        return Err(Error::NotACycle(format!("length {} < 3", traversal.len())));
    }
    let mut seen = std::collections::HashSet::new();
    for &v in traversal {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange(v, g.vertex_count()));
        }
        if !seen.insert(v) {
            return Err(Error::NotACycle(format!("repeated vertex {v}")));
        }
    }
    let len = traversal.len();
    for idx in 0..len {
        let a = traversal[idx];
        let b = traversal[(idx + 1) % len];
        if g.edge_between(a, b).is_none() {
            return Err(Error::NotACycle(format!("missing edge {a}-{b}")));
        }
    }
    Ok(())
}

struct RealCycle {
    mask: u64,
    min_vertex: usize,
    sigma_half: usize,
}

/// All simple cycles of even signature, each found once via paths that start
/// at the cycle's smallest vertex and fix a traversal direction.
fn real_cycle_catalog(g: &MixedGraph) -> Vec<RealCycle> {
    let n = g.vertex_count();
    let mut found = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 0..n {
        path.clear();
        path.push(start);
        dfs_cycles(g, start, start, 1u64 << start, &mut path, &mut found);
    }
    found
}

fn dfs_cycles(
    g: &MixedGraph,
    start: usize,
    cur: usize,
    mask: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<RealCycle>,
) {
    for w in g.neighbors(cur) {
        if w == start {
            // Closing edge: require length >= 3 and canonical direction
            // (second vertex smaller than last) so each cycle appears once.
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                let sig = signature(g, path).expect("constructed traversal is a cycle");
                if sig.sigma % 2 == 0 {
                    out.push(RealCycle {
                        mask,
                        min_vertex: start,
                        sigma_half: sig.sigma / 2,
                    });
                }
            }
        } else if w > start && mask & (1 << w) == 0 {
            path.push(w);
            dfs_cycles(g, start, w, mask | (1 << w), path, out);
            path.pop();
        }
    }
}

/// All coefficients a_0..a_n by enumeration of real elementary subgraphs.
fn coefficients_by_enumeration(g: &MixedGraph) -> Result<Vec<BigInt>> {
    let n = g.vertex_count();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded(format!(
            "elementary subgraph enumeration capped at {ENUMERATION_CAP} vertices, got {n}"
        )));
    }
    let cycles = real_cycle_catalog(g);
    let mut by_min: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for (idx, c) in cycles.iter().enumerate() {
        by_min[c.min_vertex].push(idx);
    }
    let adj_mask: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | (1 << w)))
        .collect();

    let mut acc = vec![BigInt::zero(); n + 1];

    // Recursive enumeration over the smallest undecided vertex. Each leaf is
    // one elementary subgraph; components are anchored at their minimum
    // vertex, so no subgraph is produced twice.
    struct Ctx<'a> {
        n: usize,
        adj_mask: &'a [u64],
        cycles: &'a [RealCycle],
        by_min: &'a [Vec<usize>],
        acc: &'a mut [BigInt],
    }

    fn rec(ctx: &mut Ctx, v: usize, used: u64, order: usize, omega: usize, ncyc: usize, sh: usize) {
        if v == ctx.n {
            let negative = (sh + omega) % 2 == 1;
            let mut term = BigInt::one() << ncyc;
            if negative {
                term = -term;
            }
            ctx.acc[order] += term;
            return;
        }
        if used & (1 << v) != 0 {
            rec(ctx, v + 1, used, order, omega, ncyc, sh);
            return;
        }
        // v left out of the subgraph
        rec(ctx, v + 1, used, order, omega, ncyc, sh);
        // v matched by an edge to a later unused neighbor
        let mut cands = ctx.adj_mask[v] & !used;
        cands &= !((1u64 << (v + 1)) - 1); // only u > v
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            rec(
                ctx,
                v + 1,
                used | (1 << v) | (1 << u),
                order + 2,
                omega + 1,
                ncyc,
                sh,
            );
        }
        // v absorbed into a real cycle whose minimum vertex is v
        for &ci in &ctx.by_min[v] {
            let c = &ctx.cycles[ci];
            if c.mask & used == 0 {
                rec(
                    ctx,
                    v + 1,
                    used | c.mask,
                    order + c.mask.count_ones() as usize,
                    omega + 1,
                    ncyc + 1,
                    sh + c.sigma_half,
                );
            }
        }
    }

    let mut ctx = Ctx {
        n,
        adj_mask: &adj_mask,
        cycles: &cycles,
        by_min: &by_min,
        acc: &mut acc,
    };
    rec(&mut ctx, 0, 0, 0, 0, 0, 0);
    Ok(acc)
}

/// Coefficient a_j of the characteristic polynomial by enumeration.
pub fn coefficient_by_enumeration(g: &MixedGraph, j: usize) -> Result<BigInt> {
    if j > g.vertex_count() {
        return Err(Error::CapExceeded(format!(
            "coefficient index {j} exceeds order {}",
            g.vertex_count()
        )));
    }
    Ok(coefficients_by_enumeration(g)?.remove(j))
}

/// Full characteristic polynomial by enumeration; must equal the
/// Faddeev–LeVerrier result exactly.
pub fn charpoly_by_enumeration(g: &MixedGraph) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_coeffs(coefficients_by_enumeration(g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{charpoly, HermitianMatrix};

    fn undirected_cycle(n: usize) -> MixedGraph {
        let mut g = MixedGraph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn signature_counts() {
        let mut g = MixedGraph::new(3);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        let s = signature(&g, &[0, 1, 2]).unwrap();
        assert_eq!((s.forward, s.backward, s.sigma), (2, 0, 2));

        let c6 = undirected_cycle(6);
        assert_eq!(signature(&c6, &[0, 1, 2, 3, 4, 5]).unwrap().sigma, 0);

        let mut directed = MixedGraph::new(4);
        for v in 0..4 {
            directed.add_arc(v, (v + 1) % 4).unwrap();
        }
        assert_eq!(signature(&directed, &[0, 1, 2, 3]).unwrap().sigma, 4);
    }

    #[test]
    fn signature_direction_independent() {
        let mut g = MixedGraph::new(5);
        g.add_arc(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_arc(3, 2).unwrap();
        g.add_arc(3, 4).unwrap();
        g.add_edge(4, 0).unwrap();
        let fwd = signature(&g, &[0, 1, 2, 3, 4]).unwrap();
        let rev = signature(&g, &[0, 4, 3, 2, 1]).unwrap();
        assert_eq!(fwd.sigma, rev.sigma);
    }

    #[test]
    fn signature_rejects_non_cycles() {
        let g = undirected_cycle(4);
        assert!(signature(&g, &[0, 1]).is_err());
        assert!(signature(&g, &[0, 1, 3]).is_err());
        assert!(signature(&g, &[0, 1, 2, 1]).is_err());
    }

    #[test]
    fn realness_matches_sigma_parity() {
        let mut g = MixedGraph::new(3);
        g.add_arc(0, 1).unwrap();
        g.add_arc(1, 2).unwrap();
        g.add_edge(2, 0).unwrap();
        assert!(is_real(&g, &[0, 1, 2]).unwrap());

        let mut one_arc = MixedGraph::new(3);
        one_arc.add_arc(0, 1).unwrap();
        one_arc.add_edge(1, 2).unwrap();
        one_arc.add_edge(2, 0).unwrap();
        assert!(!is_real(&one_arc, &[0, 1, 2]).unwrap());

        assert!(is_real(&undirected_cycle(5), &[0, 1, 2, 3, 4]).unwrap());
    }

    #[test]
    fn coefficient_examples() {
        let c4 = undirected_cycle(4);
        assert_eq!(coefficient_by_enumeration(&c4, 4).unwrap(), BigInt::from(0));
        let c3 = undirected_cycle(3);
        assert_eq!(coefficient_by_enumeration(&c3, 3).unwrap(), BigInt::from(-2));
        assert_eq!(coefficient_by_enumeration(&c3, 1).unwrap(), BigInt::from(0));
    }

    #[test]
    fn charpoly_by_enumeration_examples() {
        let mut p3 = MixedGraph::new(3);
        p3.add_edge(0, 1).unwrap();
        p3.add_edge(1, 2).unwrap();
        assert_eq!(
            charpoly_by_enumeration(&p3).unwrap().coeffs(),
            &big(&[1, 0, -2, 0])[..]
        );

        // mixed triangle with signature 2
        let mut t = MixedGraph::new(3);
        t.add_arc(0, 1).unwrap();
        t.add_arc(1, 2).unwrap();
        t.add_edge(2, 0).unwrap();
        assert_eq!(
            charpoly_by_enumeration(&t).unwrap().coeffs(),
            &big(&[1, 0, -3, 2])[..]
        );

        assert_eq!(
            charpoly_by_enumeration(&MixedGraph::new(1))
                .unwrap()
                .coeffs(),
            &big(&[1, 0])[..]
        );
    }

    #[test]
    fn enumeration_matches_faddeev_leverrier() {
        // K4 with a few arcs thrown in
        let mut k4 = MixedGraph::new(4);
        k4.add_arc(0, 1).unwrap();
        k4.add_edge(0, 2).unwrap();
        k4.add_arc(3, 0).unwrap();
        k4.add_edge(1, 2).unwrap();
        k4.add_arc(1, 3).unwrap();
        k4.add_edge(2, 3).unwrap();
        let by_enum = charpoly_by_enumeration(&k4).unwrap();
        let by_fl = charpoly(&HermitianMatrix::adjacency(&k4)).unwrap();
        assert_eq!(by_enum, by_fl);
    }

    #[test]
    fn cap_enforced() {
        let g = MixedGraph::new(15);
        assert!(charpoly_by_enumeration(&g).is_err());
    }
}
