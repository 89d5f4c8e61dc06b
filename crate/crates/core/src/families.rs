//! Closed forms for paths and cycles, plus the exact binomial coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::hilbert::summarize;

/// `C(n, k)`, zero for `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Independent sets of size `i` in the path on `n` vertices.
pub fn path_count(n: u64, i: u64) -> BigInt {
    if n + 1 >= 2 * i {
        binomial(n - i + 1, i as i64)
    } else {
        BigInt::zero()
    }
}

/// Independent sets of size `i` in the cycle on `n >= 3` vertices.
pub fn cycle_count(n: u64, i: u64) -> BigInt {
    debug_assert!(n >= 3);
    if i == 0 {
        return BigInt::one();
    }
    if n < 2 * i {
        return BigInt::zero();
    }
    let numer = BigInt::from(n) * binomial(n - i - 1, i as i64 - 1);
    let (q, r) = numer.div_rem(&BigInt::from(i));
    assert!(r.is_zero(), "n C(n-i-1, i-1) must be divisible by i");
    q
}

/// Alternating sum of the path f-vector, by residue of `n` mod 6.
pub fn path_alt_sum(n: u64) -> i64 {
    debug_assert!(n >= 1);
    match n % 6 {
        2 | 3 => 2,
        1 | 4 => 1,
        _ => 0,
    }
}

/// Alternating sum of the cycle f-vector, by residue of `n` mod 6.
pub fn cycle_alt_sum(n: u64) -> i64 {
    debug_assert!(n >= 3);
    match n % 6 {
        0 => -1,
        1 | 5 => 0,
        2 | 4 => 2,
        _ => 3,
    }
}

/// `sum_j (-1)^(j-1) j p_{n,j}`, summed term by term.
pub fn t_ladder_direct(n: u64) -> BigInt {
    (1..=n.div_ceil(2)).fold(BigInt::zero(), |acc, j| {
        let term = BigInt::from(j) * path_count(n, j);
        if j % 2 == 1 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// First rung `D_0` of the path ladder in closed form:
/// `(-1)^k (k+1)` for `n = 3k+1` or `n = 3k+3`, and `(-1)^k 2(k+1)` for `n = 3k+2`.
pub fn t_ladder(n: u64) -> BigInt {
    assert!(n >= 1);
    let (k, magnitude) = match n % 3 {
        1 => ((n - 1) / 3, (n - 1) / 3 + 1),
        2 => ((n - 2) / 3, 2 * ((n - 2) / 3 + 1)),
        _ => ((n - 3) / 3, (n - 3) / 3 + 1),
    };
    let value = if k % 2 == 0 {
        BigInt::from(magnitude)
    } else {
        -BigInt::from(magnitude)
    };
    assert_eq!(value, t_ladder_direct(n), "closed form disagrees with the direct sum at n = {n}");
    value
}

/// Degree of the h-polynomial of the path on `n >= 1` vertices.
pub fn path_degree(n: u64) -> u64 {
    let alpha = n.div_ceil(2);
    if n % 3 == 1 {
        alpha - 1
    } else {
        alpha
    }
}

/// Degree of the h-polynomial of the cycle on `n >= 3` vertices.
pub fn cycle_degree(n: u64) -> u64 {
    n / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDegreeReport {
    pub family: Family,
    pub n: u64,
    pub alpha: u64,
    pub deg_formula: u64,
    pub deg_brute: Option<u64>,
}

impl FamilyDegreeReport {
    pub fn consistent(&self) -> bool {
        self.deg_brute.is_none_or(|b| b == self.deg_formula)
    }
}

/// Formula degree, plus the enumerated degree when `n <= brute_budget`.
pub fn family_degree_report(family: Family, n: u64, brute_budget: u64) -> Result<FamilyDegreeReport> {
    let (alpha, deg_formula) = match family {
        Family::Path => (n.div_ceil(2), path_degree(n)),
        Family::Cycle => (n / 2, cycle_degree(n)),
    };
    let deg_brute = if n <= brute_budget.min(64) {
        let g = match family {
            Family::Path => Graph::path(n as usize)?,
            Family::Cycle => Graph::cycle(n as usize)?,
        };
        Some(summarize(&g)?.deg_h as u64)
    } else {
        None
    };
    Ok(FamilyDegreeReport {
        family,
        n,
        alpha,
        deg_formula,
        deg_brute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::independence::{alternating_g, f_vector, is_independent};

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn count_independent_of_size(g: &Graph, size: usize) -> i64 {
        g.vertices()
            .subsets()
            .filter(|s: &VertexSet| s.len() == size && is_independent(g, *s))
            .count() as i64
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), b(6));
        assert_eq!(binomial(3, 5), b(0));
        assert_eq!(binomial(0, 0), b(1));
        assert_eq!(binomial(5, -1), b(0));
        assert_eq!(binomial(64, 32), "1832624140942590534".parse::<BigInt>().unwrap());
    }

    #[test]
    fn path_counts() {
        assert_eq!(path_count(5, 2), b(count_independent_of_size(&Graph::path(5).unwrap(), 2)));
        assert_eq!(path_count(5, 2), b(6));
        assert_eq!(path_count(3, 2), b(1));
        assert_eq!(path_count(2, 2), b(0));
    }

    #[test]
    fn cycle_counts() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(cycle_count(6, 2), b(count_independent_of_size(&c6, 2)));
        assert_eq!(cycle_count(6, 2), b(9));
        assert_eq!(cycle_count(6, 3), b(2));
        assert_eq!(cycle_count(5, 3), b(0));
        assert_eq!(cycle_count(7, 0), b(1));
    }

    #[test]
    fn alternating_sums() {
        assert_eq!([1, 2, 3].map(path_alt_sum), [1, 2, 2]);
        assert_eq!([3, 4, 5].map(cycle_alt_sum), [3, 2, 0]);
        let direct: BigInt = (1..=5u64)
            .map(|j| if j % 2 == 1 { path_count(9, j) } else { -path_count(9, j) })
            .sum();
        assert_eq!(direct, b(2));
        assert_eq!(path_alt_sum(9), 2);
        assert_eq!(path_alt_sum(6) + path_alt_sum(9), 2);
    }

    #[test]
    fn t_values() {
        assert_eq!(t_ladder(1), b(1));
        assert_eq!(t_ladder(4), b(-2));
        assert_eq!(t_ladder_direct(5), b(5 - 2 * 6 + 3));
        assert_eq!(t_ladder(5), b(-4));
        assert_eq!(t_ladder_direct(3), b(3 - 2));
        assert_eq!(t_ladder(3), b(1));
    }

    #[test]
    fn degrees() {
        assert_eq!(path_degree(4), 1);
        assert_eq!(path_degree(1), 0);
        assert_eq!(cycle_degree(6), 3);
        assert_eq!(cycle_degree(5), 2);
    }

    #[test]
    fn closed_forms_match_enumeration() {
        for n in 1..=18u64 {
            let fv = f_vector(&Graph::path(n as usize).unwrap());
            for i in 0..=n + 1 {
                assert_eq!(path_count(n, i), if i == 0 { b(1) } else { fv.g(i as usize) });
            }
            assert_eq!(alternating_g(&fv), b(path_alt_sum(n)));
        }
        for n in 3..=18u64 {
            let fv = f_vector(&Graph::cycle(n as usize).unwrap());
            for i in 1..=n {
                assert_eq!(cycle_count(n, i), fv.g(i as usize));
            }
            assert_eq!(alternating_g(&fv), b(cycle_alt_sum(n)));
        }
    }

    #[test]
    fn family_reports() {
        let r = family_degree_report(Family::Path, 4, 18).unwrap();
        assert_eq!((r.alpha, r.deg_formula, r.deg_brute), (2, 1, Some(1)));
        assert!(r.consistent());
        let c = family_degree_report(Family::Cycle, 100, 18).unwrap();
        assert_eq!(c.deg_brute, None);
        assert_eq!(c.deg_formula, 50);
    }
}
