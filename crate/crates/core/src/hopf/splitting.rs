//! The splitting criterion and its independent cross-check.
//!
//! A simple comodule `M` is splitting (equal to its own injective hull)
//! exactly when the form `c(x, y) = lambda_r(y S(x))` is not identically zero
//! on the coefficient space `Cf(M)` -- and in that case `c` is non-degenerate
//! there. The independent oracle decides the same question on the module
//! side: `M` is projective over the dual algebra iff the canonical surjection
//! from a free module splits, which is one exact linear solve. For simple
//! finite-dimensional comodules the two answers must always agree.

use super::comodule::{coefficient_space, is_simple, Comodule};
use super::integral::{integral, IntegralSide};
use super::{HopfAlgebra, HopfError};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Result of the splitting test: the verdict and the form restricted to a
/// basis of the coefficient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingReport {
    pub splitting: bool,
    pub coefficient_dim: usize,
    pub c_matrix: Matrix,
}

/// Evaluates the splitting criterion on a simple comodule: builds the matrix
/// `C[i][j] = lambda_r(f_j S(f_i))` over a basis `{f_i}` of `Cf(M)` and tests
/// it against zero. When nonzero, full rank is asserted; a nonzero degenerate
/// form would falsify the criterion and is reported as an error.
pub fn splitting_test(h: &HopfAlgebra, m: &Comodule) -> Result<SplittingReport, HopfError> {
    if !is_simple(h, m) {
        return Err(HopfError::NotSimple);
    }
    let lambda_r = integral(h, IntegralSide::Right)?;
    let cf = coefficient_space(h, m);
    let k = cf.dim();
    let c_matrix = Matrix::from_fn(k, k, |i, j| {
        let s_fi = h.antipode_of(&cf.basis[i]);
        lambda_r.evaluate(&h.mul_elements(&cf.basis[j], &s_fi))
    });
    let splitting = !c_matrix.is_zero();
    if splitting && c_matrix.rank() < k {
        return Err(HopfError::SplittingFormDegenerate);
    }
    Ok(SplittingReport {
        splitting,
        coefficient_dim: k,
        c_matrix,
    })
}

/// Independent projectivity oracle over the dual algebra `H*`.
///
/// `H*` carries the convolution product `(phi psi)(a) = phi(a_1) psi(a_2)` and
/// acts on `M` through the coaction. The oracle builds the canonical
/// `H*`-linear surjection `(H*)^{dim M} -> M`, `delta_a^{(i)} -> delta_a -> v_i`,
/// and asks for an equivariant section: `M` is projective iff the resulting
/// inhomogeneous linear system is consistent. For a simple finite-dimensional
/// comodule, projective, injective and splitting all coincide.
pub fn projectivity_oracle(h: &HopfAlgebra, m: &Comodule) -> Result<bool, HopfError> {
    if !is_simple(h, m) {
        return Err(HopfError::NotSimple);
    }
    let n = h.dim();
    let d = m.dim();
    let actions = m.action_matrices(h);

    // delta_coeff[u][t][a]: coefficient of delta_u in delta_t delta_a, i.e.
    // the coefficient of e_t (x) e_a in Delta(e_u).
    let mut delta_coeff = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for u in 0..n {
        for (t, a, c) in h.comult_triples(u) {
            delta_coeff[u][*t][*a] += c;
        }
    }

    // Unknowns: sigma(v_i) = sum_{a,j} x[i][a][j] delta_a^{(j)},
    // flattened as (i * n + a) * d + j.
    let unknowns = d * n * d;
    let equivariance_rows = n * d * n * d;
    let section_rows = d * d;
    let mut system = Matrix::zeros(equivariance_rows + section_rows, unknowns);
    let mut rhs = vec![Scalar::zero(); equivariance_rows + section_rows];
    let mut row = 0;

    // sigma(delta_t -> v_i) = delta_t . sigma(v_i), coefficient of delta_u^{(j)}
    for t in 0..n {
        for i in 0..d {
            for u in 0..n {
                for j in 0..d {
                    for b in 0..d {
                        let coeff = actions[t].at(b, i);
                        if !coeff.is_zero() {
                            let col = (b * n + u) * d + j;
                            let upd = system.at(row, col) + coeff;
                            system.set(row, col, upd);
                        }
                    }
                    for a in 0..n {
                        let coeff = &delta_coeff[u][t][a];
                        if !coeff.is_zero() {
                            let col = (i * n + a) * d + j;
                            let upd = system.at(row, col) - coeff;
                            system.set(row, col, upd);
                        }
                    }
                    row += 1;
                }
            }
        }
    }

    // pi(sigma(v_i)) = v_i: sum_{a,j} x[i][a][j] (delta_a -> v_j) = v_i
    for i in 0..d {
        for r in 0..d {
            for a in 0..n {
                for j in 0..d {
                    let coeff = actions[a].at(r, j);
                    if !coeff.is_zero() {
                        let col = (i * n + a) * d + j;
                        let upd = system.at(row, col) + coeff;
                        system.set(row, col, upd);
                    }
                }
            }
            if r == i {
                rhs[row] = Scalar::one();
            }
            row += 1;
        }
    }

    Ok(system.solve(&rhs).is_some())
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;

    #[test]
    fn group_algebra_simples_are_splitting() {
        for order in 2..=4 {
            let h = cyclic_group_algebra(order);
            for (t, m) in simple_comodules(&h) {
                let report = splitting_test(&h, &m).unwrap();
                assert!(report.splitting, "character {t} of kC{order}");
                assert_eq!(report.coefficient_dim, 1);
                assert!(projectivity_oracle(&h, &m).unwrap());
            }
        }
    }

    #[test]
    fn sweedler_simples_are_not_splitting() {
        let h = sweedler_h4();
        for (t, m) in simple_comodules(&h) {
            let report = splitting_test(&h, &m).unwrap();
            assert!(!report.splitting, "character {t} of H4");
            assert!(report.c_matrix.is_zero());
            assert!(!projectivity_oracle(&h, &m).unwrap());
        }
    }

    #[test]
    fn sweedler_trivial_comodule_value() {
        // c(1,1) = lambda_r(1) = 0 because the right integral is supported on x
        let h = sweedler_h4();
        let report = splitting_test(&h, &trivial_comodule(&h)).unwrap();
        assert_eq!(report.c_matrix, Matrix::zeros(1, 1));
    }

    #[test]
    fn two_dimensional_simple_over_the_s3_function_algebra() {
        // cosemisimple, two-sided integral; the standard representation gives
        // a comodule that is simple but not one-dimensional, so the splitting
        // form lives on a 4-dimensional coefficient space
        let h = dual_s3_algebra();
        assert!(h.validate().ok);
        let std_rep = s3_standard_comodule();
        assert!(std_rep.validate(&h).ok);
        assert!(crate::hopf::is_simple(&h, &std_rep));

        let report = splitting_test(&h, &std_rep).unwrap();
        assert!(report.splitting);
        assert_eq!(report.coefficient_dim, 4);
        assert_eq!(report.c_matrix.rank(), 4);
        assert!(projectivity_oracle(&h, &std_rep).unwrap());
    }

    #[test]
    fn non_simple_inputs_are_rejected() {
        let h = sweedler_h4();
        let reg = regular_comodule(&h);
        assert!(matches!(splitting_test(&h, &reg), Err(HopfError::NotSimple)));
        assert!(matches!(
            projectivity_oracle(&h, &reg),
            Err(HopfError::NotSimple)
        ));
    }
}
