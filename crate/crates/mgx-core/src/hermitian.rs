//! Hermitian adjacency matrices and exact inertia computation.
//!
//! Two independent exact routes to the inertia triple are provided:
//!
//! * [`charpoly`] computes the integer characteristic polynomial with the
//!   Faddeev–LeVerrier recurrence (exact division by the step index at every
//!   step), and [`Inertia::from_charpoly`] reads p+ off the coefficient signs
//!   by Descartes' rule, which is exact because a Hermitian characteristic
//!   polynomial has only real roots.
//! * [`inertia_by_congruence`] performs symmetric elimination over exact
//!   Gaussian rationals, taking 1x1 pivots on nonzero diagonal entries and
//!   2x2 pivots `[[0,h],[h*,0]]` (contributing one positive and one negative
//!   direction) when the active diagonal is all zero.
//!
//! The two routes must agree on every input; the verification suites enforce
//! this exhaustively.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, GaussianRational};
use crate::graph::{EdgeKind, MixedGraph};

/// An n x n Hermitian matrix over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussianInt>, // row-major
}

impl HermitianMatrix {
    /// Validates the Hermitian symmetry of `entries` (row-major, length n*n).
    pub fn from_entries(n: usize, entries: Vec<GaussianInt>) -> Result<Self> {
        assert_eq!(entries.len(), n * n, "entry count must be n*n");
        for k in 0..n {
            for l in k..n {
                if entries[k * n + l] != entries[l * n + k].conj() {
                    return Err(Error::NotHermitian(k, l));
                }
            }
        }
        Ok(HermitianMatrix { n, entries })
    }

    /// The Hermitian adjacency matrix of a mixed graph: an undirected edge
    /// contributes 1 to both symmetric entries, an arc from `t` to `h`
    /// contributes i at (t,h) and -i at (h,t), the diagonal is zero.
    pub fn adjacency(g: &MixedGraph) -> Self {
        let n = g.vertex_count();
        let mut entries = vec![GaussianInt::zero(); n * n];
        for e in g.edges() {
            match e.kind {
                EdgeKind::Undirected => {
                    entries[e.u * n + e.v] = GaussianInt::one();
                    entries[e.v * n + e.u] = GaussianInt::one();
                }
                EdgeKind::Arc { tail, head } => {
                    entries[tail * n + head] = GaussianInt::i();
                    entries[head * n + tail] = GaussianInt::new(0, -1);
                }
            }
        }
        HermitianMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, k: usize, l: usize) -> &GaussianInt {
        &self.entries[k * self.n + l]
    }

    /// Rank, i.e. p+ + n-.
    pub fn rank(&self) -> usize {
        let inertia = inertia_by_congruence(self);
        inertia.rank()
    }
}

/// Monic integer polynomial `a_0 x^n + a_1 x^(n-1) + ... + a_n`, `a_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>, // coeffs[j] = a_j, multiplying x^(n-j)
}

impl IntPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty() && coeffs[0].is_one(), "must be monic");
        IntPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient a_j of x^(degree - j).
    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product of two monic polynomials (used for the component identity
    /// `phi(G) = prod_i phi(G_i)` on disjoint unions).
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

/// Inertia triple of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub p_plus: usize,
    pub n_minus: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn new(p_plus: usize, n_minus: usize, nullity: usize) -> Self {
        Inertia {
            p_plus,
            n_minus,
            nullity,
        }
    }

    pub fn rank(&self) -> usize {
        self.p_plus + self.n_minus
    }

    pub fn order(&self) -> usize {
        self.p_plus + self.n_minus + self.nullity
    }

    /// Descartes' sign rule on a real-rooted monic polynomial: p+ is the
    /// number of sign changes of a_0..a_n ignoring zeros; the nullity is the
    /// number of trailing zero coefficients.
    pub fn from_charpoly(p: &IntPolynomial) -> Inertia {
        let n = p.degree();
        let mut sign_changes = 0usize;
        let mut last_sign = 0i8;
        let mut last_nonzero = 0usize;
        for (j, a) in p.coeffs().iter().enumerate() {
            let s = match a.sign() {
                num_bigint::Sign::Plus => 1i8,
                num_bigint::Sign::Minus => -1i8,
                num_bigint::Sign::NoSign => 0i8,
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
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.p_plus, self.n_minus, self.nullity)
    }
}

/// Exact characteristic polynomial `det(xI - H)` by the Faddeev–LeVerrier
/// recurrence: `M_1 = I`, `a_k = -tr(H M_k)/k`, `M_{k+1} = H M_k + a_k I`.
///
/// Every trace of an intermediate matrix must be real and every division by
/// the step index must be exact; both are asserted and a violation is
/// reported as an internal-consistency error, never as bad input.
pub fn charpoly(h: &HermitianMatrix) -> Result<IntPolynomial> {
    let n = h.n;
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    if n == 0 {
        return Ok(IntPolynomial::from_coeffs(coeffs));
    }

    // m = H * (previous m) computed fresh each step; starts as H * I = H.
    let mut m = h.entries.clone();
    for k in 1..=n {
        let mut trace = GaussianInt::zero();
        for d in 0..n {
            trace += &m[d * n + d];
        }
        if !trace.is_real() {
            return Err(Error::Internal(format!(
                "nonzero imaginary trace at step {k}: {trace}"
            )));
        }
        let a_k = (-&trace)
            .checked_div_int(&BigInt::from(k))
            .ok_or_else(|| Error::Internal(format!("inexact division by {k} in charpoly")))?;
        debug_assert!(a_k.is_real());
        coeffs.push(a_k.re.clone());

        if k == n {
            break;
        }
        // m <- H * (m + a_k I)
        for d in 0..n {
            m[d * n + d] += &a_k;
        }
        let mut next = vec![GaussianInt::zero(); n * n];
        for i in 0..n {
            for t in 0..n {
                let hit = &h.entries[i * n + t];
                if hit.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = hit * &m[t * n + j];
                    next[i * n + j] += &prod;
                }
            }
        }
        m = next;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Inertia via Descartes' rule applied to the exact characteristic polynomial.
pub fn inertia_from_charpoly(p: &IntPolynomial) -> Inertia {
    Inertia::from_charpoly(p)
}

/// Inertia via Sylvester's law: Hermitian congruence elimination over exact
/// Gaussian rationals. Pivot order is deterministic: the first nonzero
/// diagonal entry, else the first nonzero off-diagonal entry in row-major
/// order, which is eliminated with a 2x2 pivot contributing (+1, -1).
pub fn inertia_by_congruence(h: &HermitianMatrix) -> Inertia {
    let n = h.n;
    let mut w: Vec<GaussianRational> = h
        .entries
        .iter()
        .map(GaussianRational::from_int)
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut p_plus = 0usize;
    let mut n_minus = 0usize;

    let at = |w: &[GaussianRational], i: usize, j: usize| w[i * n + j].clone();

    while !active.is_empty() {
        // 1x1 pivot on the first nonzero diagonal entry.
        if let Some(pos) = active.iter().position(|&k| !w[k * n + k].is_zero()) {
            let k = active[pos];
            let pivot = at(&w, k, k);
            debug_assert!(pivot.is_real(), "Hermitian diagonal must be real");
            if pivot.re.is_positive() {
                p_plus += 1;
            } else {
                n_minus += 1;
            }
            active.remove(pos);
            for &i in &active {
                let f = at(&w, i, k).div_real(&pivot.re);
                if f.is_zero() {
                    continue;
                }
                for &j in &active {
                    // w[i][j] -= f * w[k][j]
                    let delta = f.mul(&at(&w, k, j));
                    w[i * n + j] = w[i * n + j].sub(&delta);
                }
            }
            continue;
        }

        // All active diagonal entries are zero: find the first nonzero
        // off-diagonal in row-major order.
        let mut pivot_pair = None;
        'scan: for (pk, &k) in active.iter().enumerate() {
            for (pl, &l) in active.iter().enumerate().skip(pk + 1) {
                if !w[k * n + l].is_zero() {
                    pivot_pair = Some((pk, pl, k, l));
                    break 'scan;
                }
            }
        }
        let Some((pk, pl, k, l)) = pivot_pair else {
            break; // active submatrix is zero
        };
        // The block [[0,h],[h*,0]] has eigenvalues +|h| and -|h|.
        p_plus += 1;
        n_minus += 1;
        let hv = at(&w, k, l);
        active.remove(pl);
        active.remove(pk);
        // Schur complement with block inverse [[0, 1/h*],[1/h, 0]]:
        // w[i][j] -= w[i][k] w[l][j] / h* + w[i][l] w[k][j] / h
        let hv_conj = hv.conj();
        for &i in &active {
            let rik = at(&w, i, k).div(&hv_conj);
            let ril = at(&w, i, l).div(&hv);
            if rik.is_zero() && ril.is_zero() {
                continue;
            }
            for &j in &active {
                let d1 = rik.mul(&at(&w, l, j));
                let d2 = ril.mul(&at(&w, k, j));
                w[i * n + j] = w[i * n + j].sub(&d1).sub(&d2);
            }
        }
    }

    Inertia {
        p_plus,
        n_minus,
        nullity: n - p_plus - n_minus,
    }
}
