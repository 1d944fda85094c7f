//! Hecke symmetries: Yang-Baxter operators with a quadratic relation and a
//! closure condition.
//!
//! An operator `R : V (x) V -> V (x) V` is stored as the `d^2 x d^2` matrix
//! whose entry at flat row `(c,d)` and flat column `(a,b)` is the coefficient
//! of `e_c (x) e_d` in `R(e_a (x) e_b)`. The three defining checks are
//!
//! * the braid form of the Yang-Baxter equation,
//! * the quadratic relation `(R - q)(R + 1) = 0` (eigenvalues `{q, -1}`),
//! * closure: invertibility of the half-dual `P : V* (x) V -> V (x) V*`.
//!
//! The q-rank is the categorical rank of `V` computed through `P^{-1}`: the
//! composite `ev . P^{-1} . db` applied to 1. On the flip it equals `dim V`,
//! on the (1|1) super-flip it equals the super-dimension 0.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("invalid Hecke parameter q = {0}: q must avoid 0 and -1")]
    InvalidQ(Scalar),
    #[error("invalid family parameter p = {0}: p must be nonzero")]
    InvalidP(Scalar),
    #[error("R-matrix must be {expected}x{expected} for dim {dim}, got {rows}x{cols}")]
    WrongShape {
        dim: usize,
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("R-matrix is singular; a Hecke symmetry must be invertible")]
    SingularR,
    #[error("half-dual operator is singular; q-rank requires closure")]
    HalfDualSingular,
}

/// First entry at which two matrices differ, for axiom-failure reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// Outcome of the Yang-Baxter check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YangBaxterCheck {
    pub holds: bool,
    pub first_mismatch: Option<EntryMismatch>,
}

fn first_mismatch(lhs: &Matrix, rhs: &Matrix) -> Option<EntryMismatch> {
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.at(i, j) != rhs.at(i, j) {
                return Some(EntryMismatch {
                    row: i,
                    col: j,
                    lhs: lhs.at(i, j).clone(),
                    rhs: rhs.at(i, j).clone(),
                });
            }
        }
    }
    None
}

/// A candidate Hecke symmetry: the operator `R` on `V (x) V` together with
/// its quadratic parameter `q`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeSymmetry {
    dim: usize,
    q: Scalar,
    r: Matrix,
}

impl HeckeSymmetry {
    /// Wraps an operator matrix. Rejects `q` in `{0, -1}`, shape mismatches
    /// and singular `R`; it does not verify the Yang-Baxter or Hecke
    /// relations (those are results, not preconditions).
    pub fn new(dim: usize, q: Scalar, r: Matrix) -> Result<Self, HeckeError> {
        if q.is_zero() || q == Scalar::from_int(-1) {
            return Err(HeckeError::InvalidQ(q));
        }
        let expected = dim * dim;
        if r.rows() != expected || r.cols() != expected {
            return Err(HeckeError::WrongShape {
                dim,
                expected,
                rows: r.rows(),
                cols: r.cols(),
            });
        }
        if r.rank() != expected {
            return Err(HeckeError::SingularR);
        }
        Ok(HeckeSymmetry { dim, q, r })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn r_matrix(&self) -> &Matrix {
        &self.r
    }

    /// The standard one-parameter symmetry on a 2-dimensional space:
    ///
    /// ```text
    /// R(e0 (x) e0) = q e0 (x) e0
    /// R(e0 (x) e1) = e1 (x) e0
    /// R(e1 (x) e0) = e0 (x) e1 + (q-1) e1 (x) e0
    /// R(e1 (x) e1) = -e1 (x) e1
    /// ```
    ///
    /// At `q = 1` this degenerates to the super-flip on a (1|1) space.
    pub fn manin_standard(q: Scalar) -> Result<Self, HeckeError> {
        Self::manin_two_parameter(q, Scalar::one())
    }

    /// The two-parameter family generalizing [`Self::manin_standard`]: the
    /// middle block becomes `R(e0 (x) e1) = p e1 (x) e0`,
    /// `R(e1 (x) e0) = (q/p) e0 (x) e1 + (q-1) e1 (x) e0`.
    pub fn manin_two_parameter(q: Scalar, p: Scalar) -> Result<Self, HeckeError> {
        if p.is_zero() {
            return Err(HeckeError::InvalidP(p));
        }
        let mut r = Matrix::zeros(4, 4);
        // flat pair index (i,j) -> 2i + j
        r.set(0, 0, q.clone()); // coefficient of e00 in R(e00)
        r.set(2, 1, p.clone()); // e10 in R(e01)
        r.set(1, 2, &q / &p); // e01 in R(e10)
        r.set(2, 2, &q - &Scalar::one()); // e10 in R(e10)
        r.set(3, 3, -Scalar::one()); // e11 in R(e11)
        Self::new(2, q, r)
    }

    /// The flip `R(e_a (x) e_b) = e_b (x) e_a`; a Hecke symmetry with `q = 1`.
    pub fn flip(dim: usize) -> Self {
        let mut r = Matrix::zeros(dim * dim, dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                r.set(b * dim + a, a * dim + b, Scalar::one());
            }
        }
        HeckeSymmetry {
            dim,
            q: Scalar::one(),
            r,
        }
    }

    /// The signed flip on a (1|1)-graded 2-dimensional space:
    /// `R(e_a (x) e_b) = (-1)^{|a||b|} e_b (x) e_a` with `|e0| = 0`, `|e1| = 1`.
    pub fn super_flip_11() -> Self {
        let mut r = Matrix::zeros(4, 4);
        r.set(0, 0, Scalar::one());
        r.set(2, 1, Scalar::one());
        r.set(1, 2, Scalar::one());
        r.set(3, 3, -Scalar::one());
        HeckeSymmetry {
            dim: 2,
            q: Scalar::one(),
            r,
        }
    }

    /// `R (x) id` acting on `V^{(x)3}`.
    fn r12(&self) -> Matrix {
        self.r.kron(&Matrix::identity(self.dim))
    }

    /// `id (x) R` acting on `V^{(x)3}`.
    fn r23(&self) -> Matrix {
        Matrix::identity(self.dim).kron(&self.r)
    }

    /// Checks `(R (x) id)(id (x) R)(R (x) id) = (id (x) R)(R (x) id)(id (x) R)`
    /// as exact `d^3 x d^3` matrices.
    pub fn verify_yang_baxter(&self) -> YangBaxterCheck {
        let r12 = self.r12();
        let r23 = self.r23();
        let lhs = &(&r12 * &r23) * &r12;
        let rhs = &(&r23 * &r12) * &r23;
        let first_mismatch = first_mismatch(&lhs, &rhs);
        YangBaxterCheck {
            holds: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    /// Checks `(R - q)(R + 1) = 0` exactly.
    pub fn verify_hecke_relation(&self) -> bool {
        let id = Matrix::identity(self.dim * self.dim);
        let lhs = &(&self.r - &id.scale(&self.q)) * &(&self.r + &id);
        lhs.is_zero()
    }

    /// The half-dual `P : V* (x) V -> V (x) V*`, defined entrywise by
    /// `P[(c,k),(a,b)] = R[(a,c),(b,k)]` (input basis `e^a (x) e_b`, output
    /// basis `e_c (x) e^k`).
    pub fn half_dual(&self) -> HalfDual {
        let d = self.dim;
        let p = Matrix::from_fn(d * d, d * d, |row, col| {
            let (c, k) = (row / d, row % d);
            let (a, b) = (col / d, col % d);
            self.r.at(a * d + c, b * d + k).clone()
        });
        HalfDual { dim: d, p }
    }

    /// Closure: the half-dual is invertible.
    pub fn verify_closed(&self) -> bool {
        self.half_dual().p.rank() == self.dim * self.dim
    }

    /// The q-rank `ev . P^{-1} . db` evaluated at 1, where
    /// `db(1) = sum_i e_i (x) e^i` and `ev(e^a (x) e_b) = delta_{a,b}`:
    /// the sum over `i, a` of the `P^{-1}` entries at row `(a,a)`, column `(i,i)`.
    pub fn q_rank(&self) -> Result<Scalar, HeckeError> {
        let d = self.dim;
        let p_inv = self
            .half_dual()
            .p
            .inverse()
            .ok_or(HeckeError::HalfDualSingular)?;
        let mut total = Scalar::zero();
        for i in 0..d {
            for a in 0..d {
                total += p_inv.at(a * d + a, i * d + i);
            }
        }
        Ok(total)
    }
}

/// The half-dual operator `P` of a Hecke symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDual {
    dim: usize,
    p: Matrix,
}

impl HalfDual {
    pub fn matrix(&self) -> &Matrix {
        &self.p
    }

    pub fn is_invertible(&self) -> bool {
        self.p.rank() == self.dim * self.dim
    }
}
