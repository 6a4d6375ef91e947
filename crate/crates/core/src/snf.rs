//! Smith normal form over the integers, plus the determinantal-divisor
//! oracle.
//!
//! The reduction picks the smallest nonzero entry (by absolute value) of the
//! remaining submatrix as pivot and clears its row and column by division
//! with remainder; a nonzero remainder is strictly smaller than the pivot and
//! replaces it, so each stage terminates. When the finished pivot fails to
//! divide some remaining entry, that entry's row is added to the pivot row
//! and the stage reruns, which is the standard trick that both enforces the
//! divisibility chain and keeps intermediate entries small. A final diagonal
//! pass replaces non-chained pairs by (gcd, lcm) as a safety net.
//!
//! [`determinantal_divisors`] is deliberately a different algorithm (gcd over
//! all minors of each order); the two routes cross-check each other in tests.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{IntMatrix, MatrixError};

/// Combinatorial bound for the minor-gcd oracle.
pub const MAX_DIVISOR_VERTICES: usize = 9;

/// Diagonal invariant factors with optional unimodular transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonnegative invariant factors, each dividing the next (every integer
    /// divides 0).
    pub factors: Vec<BigInt>,
    /// `(u, v)` with `u * a * v = diag(factors)` and `det u, det v = ±1`.
    pub transforms: Option<(IntMatrix, IntMatrix)>,
}

/// `deltas[i]` is the gcd of all `i x i` minors, with `deltas[0] = 1` and 0
/// once every minor of that order vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalDivisors {
    pub deltas: Vec<BigInt>,
}

impl DeterminantalDivisors {
    /// Invariant factors read off as successive quotients, zero once the
    /// divisors vanish.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.deltas.len() - 1;
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            if self.deltas[i].is_zero() {
                out.push(BigInt::zero());
            } else {
                out.push(&self.deltas[i] / &self.deltas[i - 1]);
            }
        }
        out
    }
}

struct Reduction {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reduction {
    fn new(m: &IntMatrix, want_transforms: bool) -> Self {
        Reduction {
            a: m.clone(),
            u: want_transforms.then(|| IntMatrix::identity(m.rows())),
            v: want_transforms.then(|| IntMatrix::identity(m.cols())),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.a.cols() {
            let delta = q * &self.a[(src, j)];
            self.a[(dst, j)] += delta;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                let delta = q * &u[(src, j)];
                u[(dst, j)] += delta;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.a.rows() {
            let delta = q * &self.a[(i, src)];
            self.a[(i, dst)] += delta;
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows() {
                let delta = q * &v[(i, src)];
                v[(i, dst)] += delta;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.a.cols() {
            let neg = -self.a[(i, j)].clone();
            self.a[(i, j)] = neg;
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols() {
                let neg = -u[(i, j)].clone();
                u[(i, j)] = neg;
            }
        }
    }

    /// Position of the entry with minimal nonzero absolute value in the
    /// trailing submatrix starting at `(k, k)`.
    fn min_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let e = &self.a[(i, j)];
                if e.is_zero() {
                    continue;
                }
                let mag = e.abs();
                if best.as_ref().is_none_or(|(_, m)| mag < *m) {
                    best = Some(((i, j), mag));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn non_divisible_entry(&self, k: usize) -> Option<usize> {
        let pivot = &self.a[(k, k)];
        for i in k + 1..self.a.rows() {
            for j in k + 1..self.a.cols() {
                if !(&self.a[(i, j)] % pivot).is_zero() {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Computes the Smith normal form of `m`.
///
/// The factors are nonnegative and satisfy the divisibility chain. With
/// `want_transforms`, unimodular `u`, `v` with `u * m * v = diag(factors)`
/// are returned; the identity and both determinants are asserted before
/// returning.
pub fn smith_normal_form(m: &IntMatrix, want_transforms: bool) -> SnfResult {
    let mut red = Reduction::new(m, want_transforms);
    let rank_bound = m.rows().min(m.cols());

    for k in 0..rank_bound {
        let Some((pi, pj)) = red.min_pivot(k) else {
            break; // trailing submatrix is zero
        };
        red.swap_rows(k, pi);
        red.swap_cols(k, pj);
        'stage: loop {
            // clear column k; a nonzero remainder is smaller than the pivot
            // and becomes the new pivot
            for i in k + 1..red.a.rows() {
                if red.a[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&red.a[(i, k)] / &red.a[(k, k)]);
                red.add_row_multiple(i, k, &q);
                if !red.a[(i, k)].is_zero() {
                    red.swap_rows(k, i);
                    continue 'stage;
                }
            }
            // clear row k the same way
            for j in k + 1..red.a.cols() {
                if red.a[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&red.a[(k, j)] / &red.a[(k, k)]);
                red.add_col_multiple(j, k, &q);
                if !red.a[(k, j)].is_zero() {
                    red.swap_cols(k, j);
                    continue 'stage;
                }
            }
            // pull in a row whose entries the pivot does not divide yet
            match red.non_divisible_entry(k) {
                Some(i) => {
                    red.add_row_multiple(k, i, &BigInt::one());
                    continue 'stage;
                }
                None => break 'stage,
            }
        }
        if red.a[(k, k)].is_negative() {
            red.negate_row(k);
        }
    }

    let mut factors: Vec<BigInt> = (0..rank_bound).map(|i| red.a[(i, i)].clone()).collect();
    enforce_chain(&mut factors, &mut red.u, &mut red.v);

    let transforms = match (red.u, red.v) {
        (Some(u), Some(v)) => {
            let product = u.mul(m).mul(&v);
            assert!(
                product.is_diagonal_with(&factors),
                "transform product is not the diagonal of factors"
            );
            assert!(u.determinant().unwrap().abs().is_one(), "u is not unimodular");
            assert!(v.determinant().unwrap().abs().is_one(), "v is not unimodular");
            Some((u, v))
        }
        _ => None,
    };
    SnfResult { factors, transforms }
}

/// Convenience wrapper: invariant factors without transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(m, false).factors
}

/// Replaces diagonal pairs violating the chain by (gcd, lcm), mirroring the
/// fix into the transforms so `u * a * v` stays exact.
fn enforce_chain(d: &mut [BigInt], u: &mut Option<IntMatrix>, v: &mut Option<IntMatrix>) {
    let len = d.len();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..len {
            for j in i + 1..len {
                if d[i].is_zero() && d[j].is_zero() {
                    continue;
                }
                if !d[i].is_zero() && (&d[j] % &d[i]).is_zero() {
                    continue;
                }
                let a = d[i].clone();
                let b = d[j].clone();
                let eg = a.extended_gcd(&b);
                let g = eg.gcd.clone();
                let l = &a / &g * &b;
                if let Some(u) = u {
                    // left factor [[x, y], [-b/g, a/g]] acting on rows i, j
                    let (bi_g, ai_g) = (&b / &g, &a / &g);
                    for c in 0..u.cols() {
                        let (ri, rj) = (u[(i, c)].clone(), u[(j, c)].clone());
                        u[(i, c)] = &eg.x * &ri + &eg.y * &rj;
                        u[(j, c)] = &ai_g * &rj - &bi_g * &ri;
                    }
                }
                if let Some(v) = v {
                    // right factor [[1, -y*b/g], [1, x*a/g]] acting on cols i, j
                    let (yb_g, xa_g) = (&eg.y * &b / &g, &eg.x * &a / &g);
                    for r in 0..v.rows() {
                        let (ci, cj) = (v[(r, i)].clone(), v[(r, j)].clone());
                        v[(r, i)] = &ci + &cj;
                        v[(r, j)] = &xa_g * &cj - &yb_g * &ci;
                    }
                }
                d[i] = g;
                d[j] = l;
                changed = true;
            }
        }
    }
}

/// Gcd of all `i x i` minors for every order `i`, by direct enumeration.
///
/// Exponential in `n`; serves as the independent oracle for the elimination
/// path. Once some order has all minors zero, every later order does too.
pub fn determinantal_divisors(m: &IntMatrix) -> Result<DeterminantalDivisors, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n > MAX_DIVISOR_VERTICES {
        return Err(MatrixError::DivisorBound { n, max: MAX_DIVISOR_VERTICES });
    }
    let mut deltas = Vec::with_capacity(n + 1);
    deltas.push(BigInt::one());
    for order in 1..=n {
        if deltas[order - 1].is_zero() {
            deltas.push(BigInt::zero());
            continue;
        }
        let mut gcd = BigInt::zero();
        'level: for rows in (0..n).combinations(order) {
            for cols in (0..n).combinations(order) {
                let det = m.submatrix(&rows, &cols)?.determinant()?;
                gcd = gcd.gcd(&det);
                if gcd.is_one() {
                    break 'level;
                }
            }
        }
        deltas.push(gcd);
    }
    Ok(DeterminantalDivisors { deltas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_k5() {
        let lap = Graph::complete(5).unwrap().laplacian();
        assert_eq!(invariant_factors(&lap), big(&[1, 5, 5, 5, 0]));
    }

    #[test]
    fn snf_k5_minus_2e() {
        let lap = Family::CompleteMinus2e.build(5).unwrap().laplacian();
        assert_eq!(invariant_factors(&lap), big(&[1, 1, 3, 15, 0]));
    }

    #[test]
    fn snf_k7_minus_2_triangles() {
        let lap = Family::CompleteMinus2Triangles.build(7).unwrap().laplacian();
        assert_eq!(invariant_factors(&lap), big(&[1, 1, 4, 4, 4, 28, 0]));
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(invariant_factors(&m), big(&[1, 6]));
    }

    #[test]
    fn snf_k5_minus_c4_and_p4() {
        let c4 = Family::CompleteMinusC4.build(5).unwrap().laplacian();
        assert_eq!(invariant_factors(&c4), big(&[1, 1, 3, 3, 0]));
        let p4 = Family::CompleteMinusP4.build(5).unwrap().laplacian();
        assert_eq!(invariant_factors(&p4), big(&[1, 1, 1, 21, 0]));
    }

    #[test]
    fn snf_pendant_k4() {
        let lap = Family::PendantComplete.build(5).unwrap().laplacian();
        assert_eq!(invariant_factors(&lap), big(&[1, 1, 4, 4, 0]));
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntMatrix::zeros(3, 3);
        assert_eq!(invariant_factors(&m), big(&[0, 0, 0]));
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4]]);
        assert_eq!(invariant_factors(&m), big(&[2]));
    }

    #[test]
    fn transforms_verified_on_laplacians() {
        for fam in [Family::Complete, Family::CompleteMinus2e, Family::K23] {
            let g = fam.build(5).unwrap();
            let lap = g.laplacian();
            let res = smith_normal_form(&lap, true);
            let (u, v) = res.transforms.as_ref().unwrap();
            let product = u.mul(&lap).mul(v);
            assert!(product.is_diagonal_with(&res.factors));
        }
    }

    #[test]
    fn divisors_k3() {
        let lap = Graph::complete(3).unwrap().laplacian();
        let dd = determinantal_divisors(&lap).unwrap();
        assert_eq!(dd.deltas, big(&[1, 1, 3, 0]));
        assert_eq!(dd.invariant_factors(), big(&[1, 3, 0]));
    }

    #[test]
    fn divisors_zero_matrix() {
        let dd = determinantal_divisors(&IntMatrix::zeros(3, 3)).unwrap();
        assert_eq!(dd.deltas, big(&[1, 0, 0, 0]));
    }

    #[test]
    fn divisors_k5() {
        let lap = Graph::complete(5).unwrap().laplacian();
        let dd = determinantal_divisors(&lap).unwrap();
        assert_eq!(dd.deltas, big(&[1, 1, 5, 25, 125, 0]));
    }

    #[test]
    fn divisors_bound() {
        let m = IntMatrix::zeros(10, 10);
        assert!(matches!(
            determinantal_divisors(&m),
            Err(MatrixError::DivisorBound { .. })
        ));
    }

    #[test]
    fn snf_matches_divisor_oracle_on_small_families() {
        for (fam, n) in [
            (Family::Complete, 6),
            (Family::CompleteMinusEdge, 6),
            (Family::PendantComplete, 7),
            (Family::K33, 6),
            (Family::Case7, 7),
            (Family::CompleteMinusK33, 7),
        ] {
            let lap = fam.build(n).unwrap().laplacian();
            let snf = invariant_factors(&lap);
            let oracle = determinantal_divisors(&lap).unwrap().invariant_factors();
            assert_eq!(snf, oracle, "{fam} on {n} vertices");
        }
    }

    #[test]
    fn chain_post_pass_fixes_non_chained_diagonal() {
        let mut d = big(&[4, 6]);
        enforce_chain(&mut d, &mut None, &mut None);
        assert_eq!(d, big(&[2, 12]));

        let mut with_zero = big(&[0, 5]);
        enforce_chain(&mut with_zero, &mut None, &mut None);
        assert_eq!(with_zero, big(&[5, 0]));
    }

    #[test]
    fn chain_post_pass_keeps_transforms_exact() {
        // diag(4, 6) is already diagonal but not chained
        let m = IntMatrix::from_rows(vec![vec![4, 0], vec![0, 6]]);
        let res = smith_normal_form(&m, true);
        assert_eq!(res.factors, big(&[2, 12]));
        let (u, v) = res.transforms.unwrap();
        assert!(u.mul(&m).mul(&v).is_diagonal_with(&res.factors));
    }
}
