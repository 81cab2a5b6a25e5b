//! Exact rational feasibility for `A·λ = b, λ ≥ 0` via phase-1 simplex.
//!
//! Bland's rule on both the entering and leaving choices rules out cycling,
//! so the search terminates on every input. All arithmetic is over
//! `BigRational`; there is no rounding anywhere in a verdict.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn rational(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Searches for `λ ≥ 0` with `Σ_j λ_j · columns[j] = target`.
///
/// Returns the multipliers when the system is feasible, `None` otherwise.
pub(crate) fn nonneg_combination(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == n));
    if k == 0 {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }

    // Tableau rows: [λ columns | artificial identity | rhs], rhs ≥ 0.
    let width = k + n + 1;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(width);
        let flip = target[i].is_negative();
        for column in columns {
            row.push(if flip { -&column[i] } else { column[i].clone() });
        }
        for j in 0..n {
            row.push(if j == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(if flip { -&target[i] } else { target[i].clone() });
        rows.push(row);
    }
    let mut basis: Vec<usize> = (k..k + n).collect();

    // Phase-1 objective: minimize the sum of artificials. With the artificial
    // basis the reduced-cost row is the column sum over constraint rows for
    // the λ columns and zero for the artificial columns.
    let mut objective = vec![BigRational::zero(); width];
    for (j, entry) in objective.iter_mut().enumerate().take(k) {
        *entry = rows
            .iter()
            .fold(BigRational::zero(), |acc, row| acc + &row[j]);
    }
    objective[width - 1] = rows
        .iter()
        .fold(BigRational::zero(), |acc, row| acc + &row[width - 1]);

    // Bland: smallest improving column.
    while let Some(entering) = (0..k + n).find(|&j| objective[j].is_positive()) {
        // Ratio test, ties broken by smallest basis variable.
        let mut pivot_row: Option<usize> = None;
        let mut best_ratio: Option<BigRational> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[entering].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[entering];
            let better = match &best_ratio {
                None => true,
                Some(best) => {
                    ratio < *best
                        || (ratio == *best && basis[i] < basis[pivot_row.expect("ratio set")])
                }
            };
            if better {
                best_ratio = Some(ratio);
                pivot_row = Some(i);
            }
        }
        // The objective is bounded below by zero, so a pivot row always
        // exists; treat the impossible case as infeasible.
        let pivot_row = pivot_row?;

        let pivot = rows[pivot_row][entering].clone();
        for entry in rows[pivot_row].iter_mut() {
            *entry /= &pivot;
        }
        let pivot_values = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot_row || row[entering].is_zero() {
                continue;
            }
            let factor = row[entering].clone();
            for (entry, pivot_entry) in row.iter_mut().zip(&pivot_values) {
                *entry -= &factor * pivot_entry;
            }
        }
        if !objective[entering].is_zero() {
            let factor = objective[entering].clone();
            for (entry, pivot_entry) in objective.iter_mut().zip(&pivot_values) {
                *entry -= &factor * pivot_entry;
            }
        }
        basis[pivot_row] = entering;
    }

    if !objective[width - 1].is_zero() {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); k];
    for (i, &variable) in basis.iter().enumerate() {
        if variable < k {
            lambda[variable] = rows[i][width - 1].clone();
        }
    }
    debug_assert!(lambda.iter().all(|x| !x.is_negative()));
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cols(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter()
            .map(|c| c.iter().map(|&x| rational(x)).collect())
            .collect()
    }

    fn vec_r(data: &[i64]) -> Vec<BigRational> {
        data.iter().map(|&x| rational(x)).collect()
    }

    #[test]
    fn orthant_membership() {
        let columns = cols(&[&[1, 0], &[0, 1]]);
        assert!(nonneg_combination(&columns, &vec_r(&[3, 5])).is_some());
        assert!(nonneg_combination(&columns, &vec_r(&[-1, 0])).is_none());
    }

    #[test]
    fn skew_cone_membership_certificate() {
        // (2,1) = 3/2·(1,0) + 1/2·(1,2)
        let columns = cols(&[&[1, 0], &[1, 2]]);
        let lambda = nonneg_combination(&columns, &vec_r(&[2, 1])).unwrap();
        assert_eq!(lambda[0], BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(lambda[1], BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(nonneg_combination(&columns, &vec_r(&[0, -1])).is_none());
    }

    #[test]
    fn zero_target_is_always_feasible() {
        let columns = cols(&[&[1, 1], &[-2, 3]]);
        let lambda = nonneg_combination(&columns, &vec_r(&[0, 0])).unwrap();
        assert!(lambda.iter().all(Zero::is_zero));
    }

    #[test]
    fn redundant_generators_are_handled() {
        let columns = cols(&[&[1, 0], &[1, 0], &[2, 1], &[0, 1], &[1, 1]]);
        assert!(nonneg_combination(&columns, &vec_r(&[7, 3])).is_some());
        assert!(nonneg_combination(&columns, &vec_r(&[-1, -1])).is_none());
    }

    #[test]
    fn empty_generator_list() {
        assert!(nonneg_combination(&[], &vec_r(&[0, 0])).is_some());
        assert!(nonneg_combination(&[], &vec_r(&[1, 0])).is_none());
    }
}
