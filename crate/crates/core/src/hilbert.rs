//! Hilbert series of the edge ideal quotient and the degree of its h-polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{alternating_g, d_ladder, f_vector, DLadder, FVector};
use crate::poly::IntPolynomial;

/// Reduced Hilbert series `h(t) / (1 - t)^pole_order` plus the data the
/// degree rule is read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSummary {
    pub h: IntPolynomial,
    pub pole_order: usize,
    pub deg_h: usize,
    pub alpha: usize,
    pub g: BigInt,
    pub d_prime: Option<usize>,
    pub ladder: Vec<BigInt>,
}

/// `N(t) = sum_{i=0}^{alpha} f_{i-1} t^i (1-t)^{alpha-i}`, the numerator over `(1-t)^alpha`.
pub fn hilbert_numerator(fv: &FVector) -> IntPolynomial {
    let alpha = fv.alpha();
    (0..=alpha).fold(IntPolynomial::zero(), |acc, i| {
        let term = &IntPolynomial::monomial(fv.face_count(i), i) * &IntPolynomial::one_minus_t_pow(alpha - i);
        &acc + &term
    })
}

/// The same numerator rebuilt from the ladder:
/// `(1 - sum D_s)(1-t)^alpha + sum_s D_s (1-t)^{alpha-s-1}`.
pub fn numerator_from_ladder(ladder: &DLadder) -> IntPolynomial {
    let alpha = ladder.values.len();
    let total: BigInt = ladder.values.iter().sum();
    let mut acc = &IntPolynomial::one_minus_t_pow(alpha) * &(BigInt::one() - total);
    for (s, d) in ladder.values.iter().enumerate() {
        acc = &acc + &(&IntPolynomial::one_minus_t_pow(alpha - s - 1) * d);
    }
    acc
}

/// Cancels every common factor `(1 - t)` between numerator and `(1-t)^pole`.
pub fn reduce(numerator: &IntPolynomial, pole: usize) -> Result<(IntPolynomial, usize)> {
    let mut h = numerator.clone();
    let mut pole = pole;
    while !h.is_zero() && h.eval_at_one().is_zero() {
        if pole == 0 {
            return Err(Error::InternalInconsistency(format!(
                "numerator {h} still vanishes at t = 1 with no pole left"
            )));
        }
        h = h.divide_by_one_minus_t()?;
        pole -= 1;
    }
    Ok((h, pole))
}

/// `alpha` if `g != 1`, else `alpha - d' - 1`.
pub fn degree_by_rule(alpha: usize, g: &BigInt, d_prime: Option<usize>) -> Result<usize> {
    if !g.is_one() {
        return Ok(alpha);
    }
    let d = d_prime.ok_or_else(|| Error::InternalInconsistency("g = 1 but every D_s vanishes".into()))?;
    Ok(alpha - d - 1)
}

/// Full summary of `g`, with the reduction degree checked against the ladder rule.
pub fn summarize(g: &Graph) -> Result<HilbertSummary> {
    if g.n() == 0 {
        return Err(Error::NotApplicable("the graph on zero vertices has no h-polynomial".into()));
    }
    summarize_fvector(&f_vector(g))
}

/// As [`summarize`], starting from a known f-vector.
pub fn summarize_fvector(fv: &FVector) -> Result<HilbertSummary> {
    let alpha = fv.alpha();
    let ladder = d_ladder(fv)?;
    let numerator = hilbert_numerator(fv);
    debug_assert_eq!(numerator, numerator_from_ladder(&ladder));
    let (h, pole_order) = reduce(&numerator, alpha)?;
    let deg_h = h
        .degree()
        .ok_or_else(|| Error::InternalInconsistency("h-polynomial is zero".into()))?;
    let g = alternating_g(fv);
    let d_prime = ladder.first_nonzero();
    let by_rule = degree_by_rule(alpha, &g, d_prime)?;
    if by_rule != deg_h {
        return Err(Error::TheoremViolation(format!(
            "reduction gives deg h = {deg_h}, the g/D-ladder rule gives {by_rule} (alpha {alpha}, g {g})"
        )));
    }
    if pole_order != alpha {
        return Err(Error::TheoremViolation(format!("pole order {pole_order} differs from alpha {alpha}")));
    }
    if !h.coeff(0).is_one() {
        return Err(Error::InternalInconsistency(format!("h(0) = {} in {h}", h.coeff(0))));
    }
    Ok(HilbertSummary {
        h,
        pole_order,
        deg_h,
        alpha,
        g,
        d_prime,
        ladder: ladder.values,
    })
}

/// Taylor coefficients of `h(t) / (1-t)^pole_order` through `t^up_to`.
pub fn series_coefficients(hs: &HilbertSummary, up_to: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = (0..=up_to).map(|i| hs.h.coeff(i)).collect();
    for _ in 0..hs.pole_order {
        let mut running = BigInt::zero();
        for x in c.iter_mut() {
            running += &*x;
            *x = running.clone();
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::binomial;
    use crate::independence::hilbert_function_by_monomials;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn fv(c: &[i64]) -> FVector {
        FVector::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Numerator by expanding the series coefficient-wise: multiply the
    /// Hilbert function through by (1-t)^alpha and truncate.
    fn numerator_by_series(f: &FVector) -> IntPolynomial {
        let alpha = f.alpha();
        let hf: Vec<BigInt> = (0..=alpha + 1)
            .map(|d| {
                if d == 0 {
                    BigInt::one()
                } else {
                    (1..=alpha).map(|j| f.g(j) * binomial((d - 1) as u64, j as i64 - 1)).sum()
                }
            })
            .collect();
        let series = IntPolynomial::from_coeffs(hf);
        let prod = &series * &IntPolynomial::one_minus_t_pow(alpha);
        IntPolynomial::from_coeffs((0..=alpha).map(|i| prod.coeff(i)).collect())
    }

    #[test]
    fn numerators_of_small_examples() {
        for (counts, expect) in [
            (vec![5, 4], vec![1, 3]),
            (vec![7, 12, 8], vec![1, 4, 1, 2]),
            (vec![6, 9, 2], vec![1, 3, 0, -2]),
        ] {
            let f = fv(&counts);
            assert_eq!(hilbert_numerator(&f), p(&expect));
            assert_eq!(numerator_by_series(&f), p(&expect));
            assert_eq!(numerator_from_ladder(&d_ladder(&f).unwrap()), p(&expect));
        }
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce(&p(&[1, 3]), 2).unwrap(), (p(&[1, 3]), 2));
        assert_eq!(reduce(&p(&[1, -1]), 1).unwrap(), (p(&[1]), 0));
        assert_eq!(reduce(&p(&[1, 2]), 2).unwrap(), (p(&[1, 2]), 2));
        assert!(matches!(reduce(&p(&[1, -1]), 0), Err(Error::InternalInconsistency(_))));
    }

    #[test]
    fn summaries_of_small_examples() {
        let s = summarize(&Graph::triangle_star(2).unwrap()).unwrap();
        assert_eq!((s.deg_h, s.alpha, s.g.clone(), s.d_prime), (1, 2, BigInt::from(1), Some(0)));
        let t = summarize(&Graph::triangle_star(3).unwrap()).unwrap();
        assert_eq!((t.deg_h, t.alpha, t.g), (3, 3, BigInt::from(3)));
        let p4 = summarize(&Graph::path(4).unwrap()).unwrap();
        assert_eq!((p4.deg_h, p4.h.clone()), (1, p(&[1, 2])));
        let c6 = summarize(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(c6.h, p(&[1, 3, 0, -2]));
        let k1 = summarize(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((k1.deg_h, k1.pole_order), (0, 1));
        assert!(matches!(summarize(&Graph::empty(0).unwrap()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn series_prefix() {
        let s = summarize(&Graph::triangle_star(2).unwrap()).unwrap();
        assert_eq!(series_coefficients(&s, 2), vec![1, 5, 9].into_iter().map(BigInt::from).collect::<Vec<_>>());
        let e2 = summarize(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(series_coefficients(&e2, 3), (1..=4).map(BigInt::from).collect::<Vec<_>>());
        for g in [Graph::cycle(7).unwrap(), Graph::complete_bipartite(3, 2).unwrap(), Graph::path(6).unwrap()] {
            let s = summarize(&g).unwrap();
            let c = series_coefficients(&s, 6);
            for (d, v) in c.iter().enumerate() {
                assert_eq!(*v, hilbert_function_by_monomials(&g, d));
            }
        }
    }

    fn lhs_rhs(d: u64, k: u64) -> (BigInt, BigInt) {
        let lhs = binomial(d - 1, k as i64);
        let rhs: BigInt = (0..=k)
            .map(|i| {
                let t = binomial(d + k - i, (k - i) as i64) * binomial(k + 1, i as i64);
                if i % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum();
        (lhs, rhs)
    }

    #[test]
    fn binomial_identity_grid() {
        for d in 1..=30 {
            for k in 0..=30 {
                let (l, r) = lhs_rhs(d, k);
                assert_eq!(l, r, "d = {d}, k = {k}");
            }
        }
    }

    proptest! {
        #[test]
        fn binomial_identity_wider(d in 1u64..80, k in 0u64..80) {
            let (l, r) = lhs_rhs(d, k);
            prop_assert_eq!(l, r);
        }

        #[test]
        fn summary_invariants(mask in any::<u64>(), n in 1usize..10) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for j in 1..n {
                for i in 0..j {
                    if (mask >> (bit % 64)) & 1 == 1 { edges.push((i, j)); }
                    bit += 1;
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let s = summarize(&g).unwrap();
            prop_assert!(s.deg_h <= s.alpha);
            prop_assert_eq!(s.pole_order, s.alpha);
            prop_assert!(!s.h.eval_at_one().is_zero());
            prop_assert_eq!(numerator_by_series(&f_vector(&g)), s.h);
        }
    }
}
