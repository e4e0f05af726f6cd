use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::{CoxeterMatrix, Label};
use super::CoxeterError;
use crate::polyalg::{cyclotomic, IntPoly};
use crate::roots::trace_polynomial;

/// Default cap on the number of group elements the oracle stores.
pub const DEFAULT_ORACLE_LIMIT: usize = 400_000;

/// `Z[x]/(psi)` with `x = 2cos(pi/L)`; elements are coefficient vectors of
/// length `deg psi`.
struct Ring {
    psi: Vec<BigInt>,
}

type Elem = Vec<BigInt>;

impl Ring {
    fn new(l: u64) -> Ring {
        let l = l.max(2) as usize;
        let psi = trace_polynomial(&cyclotomic(2 * l)).expect("Phi_2L is reciprocal of even degree");
        Ring { psi: psi.into_coeffs() }
    }

    fn dim(&self) -> usize {
        self.psi.len() - 1
    }

    fn reduce(&self, p: &IntPoly) -> Elem {
        let d = self.dim();
        let mut c = p.coeffs().to_vec();
        // psi is monic
        while c.len() > d {
            let top = c.pop().expect("nonempty");
            let off = c.len() - d;
            for k in 0..d {
                c[off + k] -= &top * &self.psi[k];
            }
        }
        c.resize(d, BigInt::zero());
        c
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut prod = vec![BigInt::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        self.reduce(&IntPoly::from_coeffs(prod))
    }

    /// `2cos(k pi / L)` as `C_k(x)`.
    fn two_cos(&self, k: usize) -> Elem {
        let x = IntPoly::t();
        let (mut prev, mut cur) = (IntPoly::from(2i64), x.clone());
        if k == 0 {
            return self.reduce(&prev);
        }
        for _ in 1..k {
            let next = &x * &cur - &prev;
            prev = cur;
            cur = next;
        }
        self.reduce(&cur)
    }
}

/// Sphere sizes `a_0, ..., a_depth` of `(G, S)` by breadth-first search in
/// the Tits representation, with exact arithmetic.
pub fn tits_bfs_sphere_sizes(m: &CoxeterMatrix, depth: usize) -> Result<Vec<u64>, CoxeterError> {
    tits_bfs_sphere_sizes_with_limit(m, depth, DEFAULT_ORACLE_LIMIT)
}

/// As [`tits_bfs_sphere_sizes`], failing with `OracleTooLarge` once more
/// than `limit` elements would be held.
pub fn tits_bfs_sphere_sizes_with_limit(
    m: &CoxeterMatrix,
    depth: usize,
    limit: usize,
) -> Result<Vec<u64>, CoxeterError> {
    let n = m.rank();
    let l = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| m.get(i, j).finite())
        .fold(2u64, |acc, x| acc.lcm(&u64::from(x)));
    let ring = Ring::new(l);
    let d = ring.dim();
    let lu = l as usize;
    // c[i][j] = 2cos(pi/m_ij), c[i][i] = -2
    let mut c = vec![vec![Elem::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            c[i][j] = if i == j {
                ring.reduce(&IntPoly::from(-2i64))
            } else {
                match m.get(i, j) {
                    Label::Finite(mij) => ring.two_cos(lu / mij as usize),
                    Label::Infinite => ring.reduce(&IntPoly::from(2i64)),
                }
            };
        }
    }
    // matrices stored row-major, n*n ring elements
    let mut identity = vec![vec![BigInt::zero(); d]; n * n];
    for i in 0..n {
        identity[i * n + i][0] = BigInt::from(1);
    }
    let mut sizes = vec![1u64];
    let mut prev: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut cur: BTreeSet<Vec<Elem>> = BTreeSet::new();
    cur.insert(identity);
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for g in &cur {
            for i in 0..n {
                let h = reflect_rows(&ring, &c[i], g, i, n);
                if !prev.contains(&h) && !cur.contains(&h) {
                    next.insert(h);
                }
            }
            if prev.len() + cur.len() + next.len() > limit {
                return Err(CoxeterError::OracleTooLarge { limit });
            }
        }
        sizes.push(next.len() as u64);
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(sizes)
}

/// `s_i * g`: only row `i` changes, to `sum_j c_ij g_j`.
fn reflect_rows(ring: &Ring, ci: &[Elem], g: &[Elem], i: usize, n: usize) -> Vec<Elem> {
    let mut h = g.to_vec();
    for col in 0..n {
        let mut acc = vec![BigInt::zero(); ring.dim()];
        for j in 0..n {
            let e = &g[j * n + col];
            if e.iter().all(Zero::is_zero) {
                continue;
            }
            let term = if i == j {
                // c_ii = -2 is constant; g_i + c_ii g_i = -g_i handled below
                continue;
            } else {
                ring.mul(&ci[j], e)
            };
            for (a, t) in acc.iter_mut().zip(term) {
                *a += t;
            }
        }
        for (a, x) in acc.iter_mut().zip(&g[i * n + col]) {
            *a -= x;
        }
        h[i * n + col] = acc;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{growth_poly_finite, steinberg_growth};

    #[test]
    fn small_groups() {
        assert_eq!(tits_bfs_sphere_sizes(&CoxeterMatrix::new(1), 3).unwrap(), vec![1, 1, 0, 0]);
        assert_eq!(tits_bfs_sphere_sizes(&CoxeterMatrix::new(3), 4).unwrap(), vec![1, 3, 3, 1, 0]);
        let d5 = CoxeterMatrix::from_labels(2, [(0, 1, 5u32)]).unwrap();
        assert_eq!(tits_bfs_sphere_sizes(&d5, 6).unwrap(), vec![1, 2, 2, 2, 2, 1, 0]);
    }

    #[test]
    fn h3_exhausts_at_120() {
        let h3 = CoxeterMatrix::triangle(2, 3, 5).unwrap();
        let s = tits_bfs_sphere_sizes(&h3, 15).unwrap();
        assert_eq!(s.iter().sum::<u64>(), 120);
        let poly = growth_poly_finite(&h3).unwrap();
        for (k, a) in s.iter().enumerate() {
            assert_eq!(poly.coeff(k), BigInt::from(*a));
        }
    }

    #[test]
    fn hyperbolic_triangle_matches_steinberg() {
        let m = CoxeterMatrix::triangle(2, 3, 7).unwrap();
        let s = tits_bfs_sphere_sizes(&m, 10).unwrap();
        assert_eq!(&s[..6], &[1, 3, 5, 7, 9, 12]);
        let c = steinberg_growth(&m).taylor_coeffs(11).unwrap();
        let c: Vec<u64> = c.iter().map(|x| u64::try_from(x).unwrap()).collect();
        assert_eq!(s, c);
    }

    #[test]
    fn infinite_labels() {
        let m = CoxeterMatrix::from_labels(2, [(0, 1, Label::Infinite)]).unwrap();
        assert_eq!(tits_bfs_sphere_sizes(&m, 5).unwrap(), vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn guard() {
        let m = CoxeterMatrix::triangle(7, 7, 7).unwrap();
        assert_eq!(
            tits_bfs_sphere_sizes_with_limit(&m, 12, 100),
            Err(CoxeterError::OracleTooLarge { limit: 100 })
        );
    }
}
