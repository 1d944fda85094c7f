//! Integrals on a finite-dimensional Hopf algebra, the convolution product
//! they induce, and the associated bilinear form.
//!
//! A left integral is a functional with `a_1 lambda(a_2) = lambda(a) 1`; a
//! right integral satisfies the mirrored identity. Both are found by solving
//! the defining linear system exactly; the solution space must have dimension
//! at most one (uniqueness up to a constant), which is asserted rather than
//! assumed.

use super::{HopfAlgebra, HopfError};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralSide {
    Left,
    Right,
}

impl fmt::Display for IntegralSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegralSide::Left => write!(f, "left"),
            IntegralSide::Right => write!(f, "right"),
        }
    }
}

/// A left or right integral, normalized so its first nonzero entry is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralFunctional {
    pub side: IntegralSide,
    pub covector: Vec<Scalar>,
}

impl IntegralFunctional {
    pub fn evaluate(&self, v: &[Scalar]) -> Scalar {
        self.covector.iter().zip(v).map(|(l, x)| l * x).sum()
    }
}

/// Whether the given covector satisfies the integral axiom for `side`.
pub fn integral_axiom_holds(h: &HopfAlgebra, covector: &[Scalar], side: IntegralSide) -> bool {
    let n = h.dim();
    for i in 0..n {
        let mut lhs = vec![Scalar::zero(); n];
        for (j, k, c) in h.comult_triples(i) {
            match side {
                IntegralSide::Left => lhs[*j] += &(c * &covector[*k]),
                IntegralSide::Right => lhs[*k] += &(c * &covector[*j]),
            }
        }
        let rhs: Vec<Scalar> = h.unit_vector().iter().map(|u| &covector[i] * u).collect();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Solves the integral equations. Returns `None` when only the zero
/// functional satisfies them; errors when the solution space has dimension
/// greater than one, which would contradict uniqueness.
pub fn find_integral(
    h: &HopfAlgebra,
    side: IntegralSide,
) -> Result<Option<IntegralFunctional>, HopfError> {
    let n = h.dim();
    // Row (i, j): the e_j component of a_1 lambda(a_2) - lambda(a) 1 for a = e_i,
    // as a linear form in the unknowns lambda_k.
    let mut system = Matrix::zeros(n * n, n);
    for i in 0..n {
        for (a, b, c) in h.comult_triples(i) {
            let (out, unknown) = match side {
                IntegralSide::Left => (*a, *b),
                IntegralSide::Right => (*b, *a),
            };
            let upd = system.at(i * n + out, unknown) + c;
            system.set(i * n + out, unknown, upd);
        }
        for j in 0..n {
            let u = &h.unit_vector()[j];
            if !u.is_zero() {
                let upd = system.at(i * n + j, i) - u;
                system.set(i * n + j, i, upd);
            }
        }
    }
    let kernel = system.kernel_basis();
    match kernel.len() {
        0 => Ok(None),
        1 => {
            let mut covector = kernel.into_iter().next().unwrap();
            let lead = covector
                .iter()
                .find(|c| !c.is_zero())
                .expect("kernel basis vector is nonzero")
                .clone();
            let inv = lead.recip().expect("leading coefficient is nonzero");
            for c in covector.iter_mut() {
                *c = &*c * &inv;
            }
            debug_assert!(integral_axiom_holds(h, &covector, side));
            Ok(Some(IntegralFunctional { side, covector }))
        }
        dimension => Err(HopfError::IntegralNotUnique { side, dimension }),
    }
}

/// Like [`find_integral`] but requires existence.
pub fn integral(h: &HopfAlgebra, side: IntegralSide) -> Result<IntegralFunctional, HopfError> {
    find_integral(h, side)?.ok_or(HopfError::NoIntegral { side })
}

/// The convolution product `g * f = f_1 lambda(f_2 S(g))` built from a left
/// integral; associative but non-unital.
pub fn convolution(
    h: &HopfAlgebra,
    lambda: &IntegralFunctional,
    g: &[Scalar],
    f: &[Scalar],
) -> Vec<Scalar> {
    debug_assert_eq!(lambda.side, IntegralSide::Left);
    let n = h.dim();
    let s_g = h.antipode_of(g);
    // z[b] = lambda(e_b S(g))
    let z: Vec<Scalar> = (0..n)
        .map(|b| lambda.evaluate(&h.mul_elements(&h.basis_element(b), &s_g)))
        .collect();
    let mut out = vec![Scalar::zero(); n];
    for (i, fi) in f.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        for (a, b, c) in h.comult_triples(i) {
            if !z[*b].is_zero() {
                out[*a] += &(fi * &(c * &z[*b]));
            }
        }
    }
    out
}

/// Checks `f_1 lambda(f_2 S(g)) = lambda(f S(g_1)) g_2` on all basis pairs.
pub fn first_identity_holds(h: &HopfAlgebra, lambda: &IntegralFunctional) -> bool {
    let n = h.dim();
    for g in 0..n {
        let basis_g = h.basis_element(g);
        for f in 0..n {
            let lhs = convolution(h, lambda, &basis_g, &h.basis_element(f));
            let mut rhs = vec![Scalar::zero(); n];
            for (a, b, c) in h.comult_triples(g) {
                let s_a = h.antipode_of(&h.basis_element(*a));
                let val = lambda.evaluate(&h.mul_elements(&h.basis_element(f), &s_a));
                if !val.is_zero() {
                    rhs[*b] += &(c * &val);
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Checks `lambda_r(h_1 S(g)) h_2 = S^2(g_1) lambda_r(h S(g_2))` on all basis
/// pairs; a consequence of the right-integral axiom.
pub fn second_identity_holds(h: &HopfAlgebra, lambda_r: &IntegralFunctional) -> bool {
    debug_assert_eq!(lambda_r.side, IntegralSide::Right);
    let n = h.dim();
    let s2 = h.antipode_matrix() * h.antipode_matrix();
    for g in 0..n {
        let s_g = h.antipode_of(&h.basis_element(g));
        for e in 0..n {
            let mut lhs = vec![Scalar::zero(); n];
            for (a, b, c) in h.comult_triples(e) {
                let val = lambda_r.evaluate(&h.mul_elements(&h.basis_element(*a), &s_g));
                if !val.is_zero() {
                    lhs[*b] += &(c * &val);
                }
            }
            let mut rhs = vec![Scalar::zero(); n];
            for (a, b, c) in h.comult_triples(g) {
                let s_b = h.antipode_of(&h.basis_element(*b));
                let val = lambda_r.evaluate(&h.mul_elements(&h.basis_element(e), &s_b));
                if val.is_zero() {
                    continue;
                }
                for t in 0..n {
                    let coeff = s2.at(t, *a);
                    if !coeff.is_zero() {
                        rhs[t] += &(&(c * &val) * coeff);
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Associativity of the convolution product on all basis triples.
pub fn convolution_associative(h: &HopfAlgebra, lambda: &IntegralFunctional) -> bool {
    let n = h.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| h.basis_element(i)).collect();
    for x in 0..n {
        for y in 0..n {
            let xy = convolution(h, lambda, &basis[x], &basis[y]);
            for z in 0..n {
                let lhs = convolution(h, lambda, &xy, &basis[z]);
                let yz = convolution(h, lambda, &basis[y], &basis[z]);
                let rhs = convolution(h, lambda, &basis[x], &yz);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// The bilinear form `b(x, y) = lambda_l(x S(y))` as a matrix over the basis.
pub fn bilinear_form_b(h: &HopfAlgebra, lambda: &IntegralFunctional) -> Matrix {
    debug_assert_eq!(lambda.side, IntegralSide::Left);
    let n = h.dim();
    Matrix::from_fn(n, n, |i, j| {
        let s_j = h.antipode_of(&h.basis_element(j));
        lambda.evaluate(&h.mul_elements(&h.basis_element(i), &s_j))
    })
}

/// Non-degeneracy of `b`, finding the left integral internally.
pub fn check_nondegenerate_b(h: &HopfAlgebra) -> Result<bool, HopfError> {
    let lambda = integral(h, IntegralSide::Left)?;
    Ok(bilinear_form_b(h, &lambda).rank() == h.dim())
}

/// The balance law `b(x <- phi, y) = b(x, phi -> y)` over the dual basis.
pub fn balanced_b_holds(h: &HopfAlgebra, lambda: &IntegralFunctional) -> bool {
    let n = h.dim();
    let b_of = |u: &[Scalar], v: &[Scalar]| -> Scalar {
        lambda.evaluate(&h.mul_elements(u, &h.antipode_of(v)))
    };
    for t in 0..n {
        for i in 0..n {
            // x <- delta_t = delta_t(x_1) x_2
            let mut hit_x = vec![Scalar::zero(); n];
            for (a, b, c) in h.comult_triples(i) {
                if *a == t {
                    hit_x[*b] += c;
                }
            }
            for j in 0..n {
                // delta_t -> y = y_1 delta_t(y_2)
                let mut hit_y = vec![Scalar::zero(); n];
                for (a, b, c) in h.comult_triples(j) {
                    if *b == t {
                        hit_y[*a] += c;
                    }
                }
                if b_of(&hit_x, &h.basis_element(j)) != b_of(&h.basis_element(i), &hit_y) {
                    return false;
                }
            }
        }
    }
    true
}

/// `lambda_l . S` must satisfy the right-integral axiom.
pub fn antipode_composed_is_right_integral(h: &HopfAlgebra, lambda: &IntegralFunctional) -> bool {
    debug_assert_eq!(lambda.side, IntegralSide::Left);
    let n = h.dim();
    let composed: Vec<Scalar> = (0..n)
        .map(|i| lambda.evaluate(&h.antipode_of(&h.basis_element(i))))
        .collect();
    integral_axiom_holds(h, &composed, IntegralSide::Right)
}
