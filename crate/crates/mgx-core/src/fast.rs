//! Checked 128-bit fast paths for the exhaustive verification suites.
//!
//! The public inertia routes work over arbitrary-precision scalars. The
//! suites grind through hundreds of millions of small matrices, so they use
//! these i128 versions of the same algorithms. Every arithmetic step is
//! checked; on overflow the functions return `None` and the caller falls
//! back to the arbitrary-precision route, so exactness is never at risk.
//!
//! The congruence variant avoids rationals entirely: eliminating with a raw
//! pivot `d` replaces the true Schur complement `S` by `d*S`, which only
//! scales the quadratic form. A running flip flag tracks the accumulated
//! scale sign so pivot signs are still read off correctly, and a 2x2 pivot
//! scales by `|h|^2 > 0`, contributing one positive and one negative
//! direction regardless of the flag.

use crate::hermitian::Inertia;

/// Max matrix order accepted by the fast paths.
pub(crate) const FAST_CAP: usize = 14;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct G128 {
    pub re: i128,
    pub im: i128,
}

impl G128 {
    pub const ZERO: G128 = G128 { re: 0, im: 0 };
    pub const ONE: G128 = G128 { re: 1, im: 0 };
    pub const I: G128 = G128 { re: 0, im: 1 };
    pub const MINUS_I: G128 = G128 { re: 0, im: -1 };

    #[inline]
    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    #[inline]
    pub fn conj(self) -> G128 {
        G128 {
            re: self.re,
            im: -self.im,
        }
    }

    #[inline]
    pub fn checked_add(self, o: G128) -> Option<G128> {
        Some(G128 {
            re: self.re.checked_add(o.re)?,
            im: self.im.checked_add(o.im)?,
        })
    }

    #[inline]
    pub fn checked_sub(self, o: G128) -> Option<G128> {
        Some(G128 {
            re: self.re.checked_sub(o.re)?,
            im: self.im.checked_sub(o.im)?,
        })
    }

    #[inline]
    pub fn checked_mul(self, o: G128) -> Option<G128> {
        let re = self
            .re
            .checked_mul(o.re)?
            .checked_sub(self.im.checked_mul(o.im)?)?;
        let im = self
            .re
            .checked_mul(o.im)?
            .checked_add(self.im.checked_mul(o.re)?)?;
        Some(G128 { re, im })
    }

    /// Scale by a real integer.
    #[inline]
    pub fn checked_scale(self, d: i128) -> Option<G128> {
        Some(G128 {
            re: self.re.checked_mul(d)?,
            im: self.im.checked_mul(d)?,
        })
    }
}

/// Fills `w` (row-major n*n, caller-provided) with the Hermitian adjacency
/// entries of `edges` under per-edge orientation `digits`: 0 keeps the edge
/// undirected, 1 orients u->v, 2 orients v->u.
pub(crate) fn fill_adjacency(
    n: usize,
    edges: &[(usize, usize)],
    digits: &[u8],
    w: &mut [G128],
) {
    debug_assert_eq!(w.len(), n * n);
    debug_assert_eq!(edges.len(), digits.len());
    w.fill(G128::ZERO);
    for (&(u, v), &d) in edges.iter().zip(digits) {
        let (a, b) = match d {
            0 => (G128::ONE, G128::ONE),
            1 => (G128::I, G128::MINUS_I),
            _ => (G128::MINUS_I, G128::I),
        };
        w[u * n + v] = a;
        w[v * n + u] = b;
    }
}

/// Inertia by scaled Hermitian congruence elimination. Destroys `w`.
/// Returns `None` on arithmetic overflow.
pub(crate) fn congruence_inertia(n: usize, w: &mut [G128]) -> Option<Inertia> {
    debug_assert!(n <= FAST_CAP);
    let mut active: Vec<usize> = (0..n).collect();
    let mut p_plus = 0usize;
    let mut n_minus = 0usize;
    let mut flipped = false;

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| w[k * n + k].re != 0) {
            let k = active[pos];
            let d = w[k * n + k].re;
            debug_assert_eq!(w[k * n + k].im, 0, "Hermitian diagonal must be real");
            if (d > 0) != flipped {
                p_plus += 1;
            } else {
                n_minus += 1;
            }
            active.remove(pos);
            for ai in 0..active.len() {
                let i = active[ai];
                let wik = w[i * n + k];
                if wik.is_zero() {
                    // row already eliminated; still need the d-scaling below
                    for aj in 0..active.len() {
                        let j = active[aj];
                        w[i * n + j] = w[i * n + j].checked_scale(d)?;
                    }
                    continue;
                }
                for aj in 0..active.len() {
                    let j = active[aj];
                    // w[i][j] <- d*w[i][j] - w[i][k]*w[k][j]
                    let scaled = w[i * n + j].checked_scale(d)?;
                    let cross = wik.checked_mul(w[k * n + j])?;
                    w[i * n + j] = scaled.checked_sub(cross)?;
                }
            }
            if d < 0 {
                flipped = !flipped;
            }
            continue;
        }

        // Zero active diagonal: first nonzero off-diagonal, row-major.
        let mut pivot = None;
        'scan: for (pk, &k) in active.iter().enumerate() {
            for (pl, &l) in active.iter().enumerate().skip(pk + 1) {
                if !w[k * n + l].is_zero() {
                    pivot = Some((pk, pl, k, l));
                    break 'scan;
                }
            }
        }
        let Some((pk, pl, k, l)) = pivot else {
            break; // all-zero active block
        };
        p_plus += 1;
        n_minus += 1;
        let h = w[k * n + l];
        let norm = h.re.checked_mul(h.re)?.checked_add(h.im.checked_mul(h.im)?)?;
        active.remove(pl);
        active.remove(pk);
        // w[i][j] <- |h|^2 w[i][j] - (w[i][k] h w[l][j] + w[i][l] h* w[k][j]),
        // a positive scaling of the true Schur complement.
        for ai in 0..active.len() {
            let i = active[ai];
            let t1 = w[i * n + k].checked_mul(h)?;
            let t2 = w[i * n + l].checked_mul(h.conj())?;
            for aj in 0..active.len() {
                let j = active[aj];
                let scaled = w[i * n + j].checked_scale(norm)?;
                let c1 = t1.checked_mul(w[l * n + j])?;
                let c2 = t2.checked_mul(w[k * n + j])?;
                w[i * n + j] = scaled.checked_sub(c1)?.checked_sub(c2)?;
            }
        }
    }

    Some(Inertia {
        p_plus,
        n_minus,
        nullity: n - p_plus - n_minus,
    })
}

/// Exact characteristic polynomial coefficients a_0..a_n by Faddeev–LeVerrier
/// over checked i128. Exploits the fact that every intermediate product
/// `H * M_k` is Hermitian (both factors are polynomials in H), so only the
/// upper triangle is computed. Returns `None` on overflow.
pub(crate) fn charpoly(n: usize, a: &[G128]) -> Option<Vec<i128>> {
    debug_assert!(n <= FAST_CAP);
    debug_assert_eq!(a.len(), n * n);
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(1i128);
    if n == 0 {
        return Some(coeffs);
    }
    let mut m = a.to_vec(); // m = H * M_k, starting with M_1 = I
    let mut next = vec![G128::ZERO; n * n];
    for k in 1..=n {
        let mut trace = 0i128;
        for d in 0..n {
            debug_assert_eq!(m[d * n + d].im, 0, "trace of H*M_k must be real");
            trace = trace.checked_add(m[d * n + d].re)?;
        }
        debug_assert_eq!(trace % (k as i128), 0, "FL division must be exact");
        let a_k = -trace / (k as i128);
        coeffs.push(a_k);
        if k == n {
            break;
        }
        for d in 0..n {
            m[d * n + d].re = m[d * n + d].re.checked_add(a_k)?;
        }
        for i in 0..n {
            for j in i..n {
                let mut acc = G128::ZERO;
                for t in 0..n {
                    let h = a[i * n + t];
                    if h.is_zero() {
                        continue;
                    }
                    acc = acc.checked_add(h.checked_mul(m[t * n + j])?)?;
                }
                next[i * n + j] = acc;
                next[j * n + i] = acc.conj();
            }
        }
        std::mem::swap(&mut m, &mut next);
    }
    Some(coeffs)
}

/// Descartes' sign rule on i128 coefficients of a real-rooted monic polynomial.
pub(crate) fn descartes(coeffs: &[i128]) -> Inertia {
    let n = coeffs.len() - 1;
    let mut sign_changes = 0usize;
    let mut last_sign = 0i8;
    let mut last_nonzero = 0usize;
    for (j, &a) in coeffs.iter().enumerate() {
        let s = match a.cmp(&0) {
            std::cmp::Ordering::Greater => 1i8,
            std::cmp::Ordering::Less => -1i8,
            std::cmp::Ordering::Equal => 0i8,
        };
        if s == 0 {
            continue;
        }
        if last_sign != 0 && s != last_sign {
            sign_changes += 1;
        }
        last_sign = s;
        last_nonzero = j;
    }
    let nullity = n - last_nonzero;
    Inertia {
        p_plus: sign_changes,
        n_minus: n - nullity - sign_changes,
        nullity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{charpoly as big_charpoly, inertia_by_congruence, HermitianMatrix};
    use crate::graph::MixedGraph;
    use num_bigint::BigInt;

    fn random_mixed(n: usize, seed: u64) -> MixedGraph {
        // tiny deterministic LCG; good enough for cross-checks
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut g = MixedGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                match next() % 5 {
                    0 => g.add_edge(u, v).unwrap(),
                    1 => g.add_arc(u, v).unwrap(),
                    2 => g.add_arc(v, u).unwrap(),
                    _ => {}
                }
            }
        }
        g
    }

    fn to_g128(h: &HermitianMatrix) -> Vec<G128> {
        let n = h.order();
        let mut w = vec![G128::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let e = h.entry(i, j);
                w[i * n + j] = G128 {
                    re: i64::try_from(&e.re).unwrap() as i128,
                    im: i64::try_from(&e.im).unwrap() as i128,
                };
            }
        }
        w
    }

    #[test]
    fn fast_paths_match_bignum_paths() {
        for seed in 0..300u64 {
            let n = 1 + (seed as usize % 8);
            let g = random_mixed(n, seed);
            let h = HermitianMatrix::adjacency(&g);
            let mut w = to_g128(&h);
            let fast_c = congruence_inertia(n, &mut w).expect("no overflow at n<=8");
            let slow_c = inertia_by_congruence(&h);
            assert_eq!(fast_c, slow_c, "congruence mismatch seed {seed}");

            let coeffs = charpoly(n, &to_g128(&h)).expect("no overflow");
            let slow_p = big_charpoly(&h).unwrap();
            let fast_as_big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            assert_eq!(&fast_as_big[..], slow_p.coeffs(), "charpoly mismatch seed {seed}");
            assert_eq!(descartes(&coeffs), slow_c, "descartes mismatch seed {seed}");
        }
    }
}
