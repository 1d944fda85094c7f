//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`HopfAlgebra`] stores the full structure-constant data (multiplication
//! table, unit, comultiplication, counit, antipode) over exact rationals.
//! [`HopfAlgebra::validate`] checks every axiom as an exact identity and
//! reports the first failure by name; nothing in this module derives missing
//! data (in particular the antipode is always supplied, never computed by
//! convolution inversion).

mod comodule;
mod integral;
pub mod samples;
mod splitting;

pub use comodule::{
    bullet, coefficient_space, comodules_isomorphic, double_dual, hom_dim, is_simple,
    CoefficientSpace, Comodule,
};
pub use integral::{
    antipode_composed_is_right_integral, balanced_b_holds, bilinear_form_b,
    check_nondegenerate_b, convolution, convolution_associative, find_integral,
    first_identity_holds, integral, second_identity_holds, IntegralFunctional, IntegralSide,
};
pub use splitting::{projectivity_oracle, splitting_test, SplittingReport};

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("malformed structure constants: {0}")]
    Shape(String),
    #[error("Hopf axiom {axiom:?} fails: {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("no {side} integral exists")]
    NoIntegral { side: IntegralSide },
    #[error("{side} integral space has dimension {dimension}, violating uniqueness")]
    IntegralNotUnique { side: IntegralSide, dimension: usize },
    #[error("invalid comodule: {0}")]
    InvalidComodule(String),
    #[error("operation requires a simple comodule")]
    NotSimple,
    #[error("the circle action is not surjective; the bullet comodule is undefined")]
    BulletUnsolvable,
    #[error("splitting form is nonzero but degenerate on the coefficient space")]
    SplittingFormDegenerate,
}

/// Name plus detail of the first Hopf axiom that failed to hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub detail: String,
}

/// Outcome of [`HopfAlgebra::validate`] or [`Comodule::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub failure: Option<AxiomFailure>,
}

impl ValidationReport {
    fn pass() -> Self {
        ValidationReport {
            ok: true,
            failure: None,
        }
    }

    fn fail(axiom: &'static str, detail: String) -> Self {
        ValidationReport {
            ok: false,
            failure: Some(AxiomFailure { axiom, detail }),
        }
    }
}

/// A finite-dimensional Hopf algebra over Q in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    basis_names: Vec<String>,
    /// `mult[i][j]` is the coefficient vector of `e_i e_j`.
    mult: Vec<Vec<Vec<Scalar>>>,
    /// Coefficient vector of the algebra unit.
    unit: Vec<Scalar>,
    /// Sparse comultiplication: `Delta(e_i) = sum c e_j (x) e_k` over triples `(j, k, c)`.
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    /// `S(e_j)` is column `j`.
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(
        basis_names: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let n = basis_names.len();
        if n == 0 {
            return Err(HopfError::Shape("empty basis".into()));
        }
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(HopfError::Shape("multiplication table is not n x n".into()));
        }
        if mult
            .iter()
            .flatten()
            .any(|coeffs| coeffs.len() != n)
        {
            return Err(HopfError::Shape(
                "multiplication entries must be length-n coefficient vectors".into(),
            ));
        }
        if unit.len() != n || counit.len() != n {
            return Err(HopfError::Shape("unit/counit must have length n".into()));
        }
        if comult.len() != n {
            return Err(HopfError::Shape("comultiplication must cover every basis element".into()));
        }
        for triples in &comult {
            for &(j, k, _) in triples {
                if j >= n || k >= n {
                    return Err(HopfError::Shape(format!(
                        "comultiplication index ({j},{k}) out of range for n = {n}"
                    )));
                }
            }
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(HopfError::Shape("antipode must be an n x n matrix".into()));
        }
        Ok(HopfAlgebra {
            basis_names,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit_vector(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn comult_triples(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn mult_table(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.mult
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// Product of two elements given by coefficient vectors.
    pub fn mul_elements(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai * bj;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &(&c * m);
                    }
                }
            }
        }
        out
    }

    pub fn antipode_of(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        self.counit
            .iter()
            .zip(v)
            .map(|(c, x)| c * x)
            .sum()
    }

    /// `Delta(v)` as the dense `n x n` coefficient matrix `T[j][k]` of `e_j (x) e_k`.
    pub fn comult_matrix(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut t = Matrix::zeros(n, n);
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let upd = t.at(*j, *k) + &(vi * c);
                t.set(*j, *k, upd);
            }
        }
        t
    }

    /// Pretty-prints an element in the named basis.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.basis_names[i];
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("{c}\u{b7}{name}"));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Checks every Hopf axiom as an exact structure-constant identity,
    /// stopping at the first failure.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();

        // associativity
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mult[i][j];
                for k in 0..n {
                    let lhs = self.mul_elements(ij, &self.basis_element(k));
                    let rhs = self.mul_elements(&self.basis_element(i), &self.mult[j][k]);
                    if lhs != rhs {
                        return ValidationReport::fail(
                            "associativity",
                            format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"),
                        );
                    }
                }
            }
        }

        // unit
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul_elements(&self.unit, &e) != e || self.mul_elements(&e, &self.unit) != e {
                return ValidationReport::fail("unit", format!("1 does not act as identity on e{i}"));
            }
        }

        // coassociativity: compare (Delta (x) id) Delta with (id (x) Delta) Delta
        for i in 0..n {
            let mut lhs = vec![Scalar::zero(); n * n * n];
            let mut rhs = vec![Scalar::zero(); n * n * n];
            for (j, k, c) in &self.comult[i] {
                for (a, b, c2) in &self.comult[*j] {
                    lhs[(a * n + b) * n + k] += &(c * c2);
                }
                for (a, b, c2) in &self.comult[*k] {
                    rhs[(j * n + a) * n + b] += &(c * c2);
                }
            }
            if lhs != rhs {
                return ValidationReport::fail(
                    "coassociativity",
                    format!("(Delta x id) Delta and (id x Delta) Delta differ on e{i}"),
                );
            }
        }

        // counit laws
        for i in 0..n {
            let mut left = vec![Scalar::zero(); n];
            let mut right = vec![Scalar::zero(); n];
            for (j, k, c) in &self.comult[i] {
                left[*k] += &(c * &self.counit[*j]);
                right[*j] += &(c * &self.counit[*k]);
            }
            if left != self.basis_element(i) || right != self.basis_element(i) {
                return ValidationReport::fail(
                    "counit",
                    format!("(eps x id) Delta or (id x eps) Delta is not the identity on e{i}"),
                );
            }
        }

        // Delta is an algebra morphism
        for i in 0..n {
            for j in 0..n {
                let lhs = self.comult_matrix(&self.mult[i][j]);
                let mut rhs = Matrix::zeros(n, n);
                for (a, b, c) in &self.comult[i] {
                    for (a2, b2, c2) in &self.comult[j] {
                        let coeff = c * c2;
                        let first = &self.mult[*a][*a2];
                        let second = &self.mult[*b][*b2];
                        for (u, fu) in first.iter().enumerate() {
                            if fu.is_zero() {
                                continue;
                            }
                            for (v, sv) in second.iter().enumerate() {
                                if sv.is_zero() {
                                    continue;
                                }
                                let upd = rhs.at(u, v) + &(&coeff * &(fu * sv));
                                rhs.set(u, v, upd);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return ValidationReport::fail(
                        "comultiplication-multiplicative",
                        format!("Delta(e{i} e{j}) != Delta(e{i}) Delta(e{j})"),
                    );
                }
            }
        }

        // Delta(1) = 1 (x) 1
        {
            let lhs = self.comult_matrix(&self.unit);
            let rhs = Matrix::from_fn(n, n, |j, k| &self.unit[j] * &self.unit[k]);
            if lhs != rhs {
                return ValidationReport::fail(
                    "comultiplication-unit",
                    "Delta(1) != 1 (x) 1".to_string(),
                );
            }
        }

        // eps is an algebra morphism
        for i in 0..n {
            for j in 0..n {
                let lhs = self.counit_of(&self.mult[i][j]);
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    return ValidationReport::fail(
                        "counit-multiplicative",
                        format!("eps(e{i} e{j}) != eps(e{i}) eps(e{j})"),
                    );
                }
            }
        }
        if self.counit_of(&self.unit) != Scalar::one() {
            return ValidationReport::fail("counit-unit", "eps(1) != 1".to_string());
        }

        // antipode axioms: m (S x id) Delta = eps . 1 = m (id x S) Delta
        for i in 0..n {
            let mut left = vec![Scalar::zero(); n];
            let mut right = vec![Scalar::zero(); n];
            for (j, k, c) in &self.comult[i] {
                let s_j = self.antipode_of(&self.basis_element(*j));
                let term = self.mul_elements(&s_j, &self.basis_element(*k));
                for (t, x) in term.iter().enumerate() {
                    left[t] += &(c * x);
                }
                let s_k = self.antipode_of(&self.basis_element(*k));
                let term = self.mul_elements(&self.basis_element(*j), &s_k);
                for (t, x) in term.iter().enumerate() {
                    right[t] += &(c * x);
                }
            }
            let expected: Vec<Scalar> =
                self.unit.iter().map(|u| &self.counit[i] * u).collect();
            if left != expected {
                return ValidationReport::fail(
                    "antipode-left",
                    format!("m (S x id) Delta(e{i}) != eps(e{i}) 1"),
                );
            }
            if right != expected {
                return ValidationReport::fail(
                    "antipode-right",
                    format!("m (id x S) Delta(e{i}) != eps(e{i}) 1"),
                );
            }
        }

        ValidationReport::pass()
    }

    /// Like [`Self::validate`] but as a `Result`, for call sites that require
    /// a valid algebra.
    pub fn validated(&self) -> Result<(), HopfError> {
        match self.validate().failure {
            None => Ok(()),
            Some(f) => Err(HopfError::Axiom {
                axiom: f.axiom,
                detail: f.detail,
            }),
        }
    }

    /// Basis indices `t` with `Delta(e_t) = e_t (x) e_t` and `eps(e_t) = 1`.
    pub fn group_like_basis_indices(&self) -> Vec<usize> {
        let n = self.dim();
        (0..n)
            .filter(|&t| {
                if self.counit[t] != Scalar::one() {
                    return false;
                }
                let mut expected = Matrix::zeros(n, n);
                expected.set(t, t, Scalar::one());
                self.comult_matrix(&self.basis_element(t)) == expected
            })
            .collect()
    }
}

impl fmt::Display for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfAlgebra(dim {}, basis {:?})", self.dim(), self.basis_names)
    }
}
