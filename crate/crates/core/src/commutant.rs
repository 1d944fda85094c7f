//! Brute-force intertwiner-dimension oracle.
//!
//! `commutant_dim(h, n)` computes the dimension of the endomorphism algebra
//! of `V^{(x)n}` as a comodule. The comodule structure is only accessible
//! through the braid operators
//! `R_i = id^{(x)(i-1)} (x) R (x) id^{(x)(n-i-1)}`, so the oracle proceeds by
//! two stacked commutator systems: first the kernel basis of
//! `{ Y : Y R_i = R_i Y }` (the image of the coacting algebra), then the
//! dimension of `{ X : X Y = Y X }` over that basis. Both solves are exact;
//! the second is restricted iteratively to keep the elimination small.
//!
//! Note the single commutator system is not enough: `{ X : X R_i = R_i X }`
//! is the full centralizer of the braid operators, which is strictly larger
//! than the algebra they generate (already at `n = 2` a Hecke operator with
//! two 2-dimensional eigenspaces has an 8-dimensional centralizer while the
//! endomorphism algebra of the comodule is 2-dimensional). The double
//! commutator recovers the generated algebra exactly, and
//! [`braid_image_dim`] cross-checks it from the generating side.
//!
//! For a birank-(1,1) symmetry the result must equal `sum_k C(n-1,k)^2`, the
//! multiplicity count predicted by the fusion rules; that comparison is the
//! central cross-validation between this module and the fusion calculus.

use crate::hecke::HeckeSymmetry;
use crate::matrix::{algebra_closure, Matrix};

/// Default cap on the tensor power; `n = 4` with `dim V = 2` already means a
/// 256-unknown exact elimination.
pub const DEFAULT_COMMUTANT_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommutantError {
    #[error("tensor power must be at least 1")]
    ZeroPower,
    #[error("tensor power {n} exceeds the cap {cap} for exact commutant computation")]
    CapExceeded { n: usize, cap: usize },
}

fn tower_operators(h: &HeckeSymmetry, n: usize) -> Vec<Matrix> {
    let d = h.dim();
    (1..n)
        .map(|i| {
            let left = Matrix::identity(d.pow((i - 1) as u32));
            let right = Matrix::identity(d.pow((n - i - 1) as u32));
            left.kron(h.r_matrix()).kron(&right)
        })
        .collect()
}

/// Stacked system whose kernel is `{ X : X op = op X for all ops }`, with `X`
/// vectorized row-major.
fn commutator_system(ops: &[&Matrix]) -> Matrix {
    let big = ops[0].rows();
    let unknowns = big * big;
    let mut system = Matrix::zeros(ops.len() * unknowns, unknowns);
    let mut row = 0;
    for op in ops {
        for a in 0..big {
            for b in 0..big {
                for k in 0..big {
                    let r_kb = op.at(k, b);
                    if !r_kb.is_zero() {
                        let col = a * big + k;
                        let v = system.at(row, col) + r_kb;
                        system.set(row, col, v);
                    }
                    let r_ak = op.at(a, k);
                    if !r_ak.is_zero() {
                        let col = k * big + b;
                        let v = system.at(row, col) - r_ak;
                        system.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    system
}

/// `dim End(V^{(x)n})` as a comodule, with the default cap.
pub fn commutant_dim(h: &HeckeSymmetry, n: usize) -> Result<usize, CommutantError> {
    commutant_dim_with_cap(h, n, DEFAULT_COMMUTANT_CAP)
}

pub fn commutant_dim_with_cap(
    h: &HeckeSymmetry,
    n: usize,
    cap: usize,
) -> Result<usize, CommutantError> {
    if n == 0 {
        return Err(CommutantError::ZeroPower);
    }
    if n > cap {
        return Err(CommutantError::CapExceeded { n, cap });
    }
    let d = h.dim();
    if n == 1 {
        return Ok(d * d); // End(V) with no constraints
    }
    let operators = tower_operators(h, n);
    let op_refs: Vec<&Matrix> = operators.iter().collect();

    // centralizer of the braid operators
    let centralizer: Vec<Vec<_>> = commutator_system(&op_refs).kernel_basis();
    let big = d.pow(n as u32);
    let centralizer: Vec<Matrix> = centralizer
        .into_iter()
        .map(|v| Matrix::from_fn(big, big, |i, j| v[i * big + j].clone()))
        .collect();

    // double commutant, one centralizer element at a time: maintain a column
    // basis N of the current solution space and restrict each new constraint
    // to it, so the eliminations shrink instead of stacking up
    let mut basis: Option<Matrix> = None; // None = all of End(V^n)
    for y in &centralizer {
        let constraint = commutator_system(&[y]);
        let restricted = match &basis {
            None => constraint,
            Some(n_mat) => &constraint * n_mat,
        };
        let kernel = restricted.kernel_basis();
        if kernel.is_empty() {
            return Ok(0);
        }
        let kernel_mat = Matrix::from_columns(&kernel);
        basis = Some(match basis {
            None => kernel_mat,
            Some(n_mat) => &n_mat * &kernel_mat,
        });
    }
    Ok(basis.map_or(big * big, |m| m.cols()))
}

/// Dimension of the unital algebra generated by the braid operators on
/// `V^{(x)n}` -- the generating-side cross-check for [`commutant_dim`].
pub fn braid_image_dim(h: &HeckeSymmetry, n: usize) -> Result<usize, CommutantError> {
    if n == 0 {
        return Err(CommutantError::ZeroPower);
    }
    let d = h.dim();
    if n == 1 {
        return Ok(1); // scalars only
    }
    let operators = tower_operators(h, n);
    Ok(algebra_closure(d.pow(n as u32), &operators).len())
}

/// Binomial coefficient, exact in u128 for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn manin3() -> HeckeSymmetry {
        HeckeSymmetry::manin_standard(Scalar::from_int(3)).unwrap()
    }

    #[test]
    fn no_constraints_at_power_one() {
        assert_eq!(commutant_dim(&manin3(), 1).unwrap(), 4);
        assert_eq!(commutant_dim(&HeckeSymmetry::flip(3), 1).unwrap(), 9);
    }

    #[test]
    fn two_simple_summands_at_power_two() {
        assert_eq!(commutant_dim(&manin3(), 2).unwrap(), 2);
    }

    #[test]
    fn power_three_matches_central_binomial() {
        // sum_k C(2,k)^2 = C(4,2) = 6
        assert_eq!(commutant_dim(&manin3(), 3).unwrap(), 6);
    }

    #[test]
    fn double_commutant_matches_braid_image() {
        let h = manin3();
        for n in 2..=3 {
            assert_eq!(
                commutant_dim(&h, n).unwrap(),
                braid_image_dim(&h, n).unwrap(),
                "power {n}"
            );
        }
        let flip = HeckeSymmetry::flip(2);
        for n in 2..=3 {
            assert_eq!(
                commutant_dim(&flip, n).unwrap(),
                braid_image_dim(&flip, n).unwrap()
            );
        }
    }

    #[test]
    fn super_flip_matches_the_same_multiplicities() {
        // the (1|1) super-flip is also birank (1,1): same hook multiplicities
        let h = HeckeSymmetry::super_flip_11();
        assert_eq!(commutant_dim(&h, 2).unwrap(), 2);
        assert_eq!(commutant_dim(&h, 3).unwrap(), 6);
    }

    #[test]
    fn classical_flip_has_symmetric_group_image() {
        // permutation action of S_2 on (Q^2)^{(x)2}: group algebra image is
        // {1, flip}, and End of the comodule is 2-dimensional as well
        assert_eq!(commutant_dim(&HeckeSymmetry::flip(2), 2).unwrap(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            commutant_dim(&manin3(), 5),
            Err(CommutantError::CapExceeded { n: 5, cap: 4 })
        ));
        assert!(matches!(
            commutant_dim(&manin3(), 0),
            Err(CommutantError::ZeroPower)
        ));
        assert_eq!(commutant_dim_with_cap(&manin3(), 2, 2).unwrap(), 2);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(
            (0..=3).map(|k| binomial(3, k).pow(2)).sum::<u128>(),
            binomial(6, 3)
        );
    }
}
