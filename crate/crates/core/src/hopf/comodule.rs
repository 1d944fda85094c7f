//! Right comodules over a structure-constant Hopf algebra, and the module
//! theory over the dual algebra that drives simplicity and Hom computations.
//!
//! A comodule morphism commutes with the dual-algebra action
//! `phi -> v = v_0 phi(v_1)`, and conversely (the comodule-to-module functor
//! is full and faithful), so Hom spaces and invariant subspaces are plain
//! exact linear algebra over the action matrices of the dual basis.

use super::{HopfAlgebra, HopfError, ValidationReport};
use crate::matrix::{algebra_closure, Matrix, RowSpace};
use crate::scalar::Scalar;

/// A right comodule: `rho(v_i) = sum c v_j (x) e_t` over triples `(j, t, c)`.
///
/// Equality is structural (triple order matters); compare
/// [`action_matrices`](Self::action_matrices) for coaction equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comodule {
    dim: usize,
    coaction: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Comodule {
    pub fn new(
        dim: usize,
        coaction: Vec<Vec<(usize, usize, Scalar)>>,
    ) -> Result<Self, HopfError> {
        if coaction.len() != dim {
            return Err(HopfError::InvalidComodule(format!(
                "coaction must list {dim} basis vectors, found {}",
                coaction.len()
            )));
        }
        for triples in &coaction {
            for &(j, _, _) in triples {
                if j >= dim {
                    return Err(HopfError::InvalidComodule(format!(
                        "coaction vector index {j} out of range for dim {dim}"
                    )));
                }
            }
        }
        Ok(Comodule { dim, coaction })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction_triples(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.coaction[i]
    }

    /// Checks the comodule axioms over `h` exactly: coassociativity
    /// `(rho (x) id) rho = (id (x) Delta) rho` and the counit law.
    pub fn validate(&self, h: &HopfAlgebra) -> ValidationReport {
        let n = h.dim();
        for triples in &self.coaction {
            for &(_, t, _) in triples {
                if t >= n {
                    return ValidationReport::fail(
                        "coaction-shape",
                        format!("coaction refers to basis index {t} of a dim-{n} Hopf algebra"),
                    );
                }
            }
        }
        let d = self.dim;
        for i in 0..d {
            // coefficients in M (x) H (x) H, flat index (j * n + a) * n + b
            let mut lhs = vec![Scalar::zero(); d * n * n];
            let mut rhs = vec![Scalar::zero(); d * n * n];
            for (j, t, c) in &self.coaction[i] {
                for (j2, t2, c2) in &self.coaction[*j] {
                    lhs[(j2 * n + t2) * n + t] += &(c * c2);
                }
                for (a, b, c2) in h.comult_triples(*t) {
                    rhs[(j * n + a) * n + b] += &(c * c2);
                }
            }
            if lhs != rhs {
                return ValidationReport::fail(
                    "coaction-coassociativity",
                    format!("(rho x id) rho != (id x Delta) rho on v{i}"),
                );
            }

            let mut counit_side = vec![Scalar::zero(); d];
            for (j, t, c) in &self.coaction[i] {
                counit_side[*j] += &(c * &h.counit_vector()[*t]);
            }
            let mut expected = vec![Scalar::zero(); d];
            expected[i] = Scalar::one();
            if counit_side != expected {
                return ValidationReport::fail(
                    "coaction-counit",
                    format!("(id x eps) rho != id on v{i}"),
                );
            }
        }
        ValidationReport::pass()
    }

    pub fn validated(&self, h: &HopfAlgebra) -> Result<(), HopfError> {
        match self.validate(h).failure {
            None => Ok(()),
            Some(f) => Err(HopfError::InvalidComodule(format!("{}: {}", f.axiom, f.detail))),
        }
    }

    /// The action matrices of the dual basis: `A_t[j][i]` is the coefficient
    /// of `v_j` in `delta_t -> v_i`.
    pub fn action_matrices(&self, h: &HopfAlgebra) -> Vec<Matrix> {
        let n = h.dim();
        let mut actions = vec![Matrix::zeros(self.dim, self.dim); n];
        for (i, triples) in self.coaction.iter().enumerate() {
            for (j, t, c) in triples {
                let upd = actions[*t].at(*j, i) + c;
                actions[*t].set(*j, i, upd);
            }
        }
        actions
    }
}

/// Basis of the coefficient space `Cf(M)`, as coordinate vectors in `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSpace {
    pub basis: Vec<Vec<Scalar>>,
}

impl CoefficientSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The span in `H` of all matrix coefficients of the coaction: the vectors
/// `c_{ij}` with `rho(v_i) = sum_j v_j (x) c_{ij}`.
pub fn coefficient_space(h: &HopfAlgebra, m: &Comodule) -> CoefficientSpace {
    let n = h.dim();
    let mut span = RowSpace::new(n);
    for i in 0..m.dim() {
        let mut per_target = vec![vec![Scalar::zero(); n]; m.dim()];
        for (j, t, c) in m.coaction_triples(i) {
            per_target[*j][*t] += c;
        }
        for vector in per_target {
            if vector.iter().any(|s| !s.is_zero()) {
                span.insert(&vector);
            }
        }
    }
    CoefficientSpace {
        basis: span.basis().to_vec(),
    }
}

/// Dimension of the space of comodule morphisms `m1 -> m2`: linear maps
/// commuting with every dual-basis action.
pub fn hom_dim(h: &HopfAlgebra, m1: &Comodule, m2: &Comodule) -> usize {
    hom_system(h, m1, m2).kernel_basis().len()
}

fn hom_system(h: &HopfAlgebra, m1: &Comodule, m2: &Comodule) -> Matrix {
    let a1 = m1.action_matrices(h);
    let a2 = m2.action_matrices(h);
    let (d1, d2) = (m1.dim(), m2.dim());
    // unknown F is d2 x d1, vectorized row-major; constraint F A1_t = A2_t F
    let unknowns = d2 * d1;
    let mut system = Matrix::zeros(h.dim() * unknowns, unknowns);
    let mut row = 0;
    for t in 0..h.dim() {
        for a in 0..d2 {
            for b in 0..d1 {
                for k in 0..d1 {
                    let coeff = a1[t].at(k, b);
                    if !coeff.is_zero() {
                        let col = a * d1 + k;
                        let upd = system.at(row, col) + coeff;
                        system.set(row, col, upd);
                    }
                }
                for k in 0..d2 {
                    let coeff = a2[t].at(a, k);
                    if !coeff.is_zero() {
                        let col = k * d1 + b;
                        let upd = system.at(row, col) - coeff;
                        system.set(row, col, upd);
                    }
                }
                row += 1;
            }
        }
    }
    system
}

/// Whether `m1` and `m2` are isomorphic comodules: the Hom space must contain
/// an invertible element. The search tries the Hom basis and then seeded
/// small-integer combinations (the invertible locus is Zariski-open in the
/// Hom space, so if it is nonempty these combinations meet it in practice).
pub fn comodules_isomorphic(h: &HopfAlgebra, m1: &Comodule, m2: &Comodule) -> bool {
    if m1.dim() != m2.dim() {
        return false;
    }
    let d = m1.dim();
    let homs: Vec<Matrix> = hom_system(h, m1, m2)
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
        .collect();
    if homs.is_empty() {
        return d == 0;
    }
    for f in &homs {
        if f.rank() == d {
            return true;
        }
    }
    let mut rng = SmallRng::new(0x5eed);
    for _ in 0..200 {
        let mut candidate = Matrix::zeros(d, d);
        for f in &homs {
            let c = Scalar::from_int(rng.next_in(-3..=3));
            if !c.is_zero() {
                candidate = &candidate + &f.scale(&c);
            }
        }
        if candidate.rank() == d {
            return true;
        }
    }
    false
}

/// Deterministic xorshift generator for search candidates. Test-support
/// randomness lives in dev-dependencies; library searches must be
/// reproducible, so a tiny inline generator is used instead.
struct SmallRng(u64);

impl SmallRng {
    fn new(seed: u64) -> Self {
        SmallRng(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn next_in(&mut self, range: std::ops::RangeInclusive<i64>) -> i64 {
        let (lo, hi) = (*range.start(), *range.end());
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.at(i, j);
            if !x.is_zero() {
                acc += &(x * b.at(j, i));
            }
        }
    }
    acc
}

/// Trace-form radical test: in characteristic zero the Jacobson radical of a
/// matrix algebra is the radical of the form `(x, y) -> tr(xy)`.
fn has_nontrivial_radical(algebra: &[Matrix]) -> bool {
    let k = algebra.len();
    let gram = Matrix::from_fn(k, k, |i, j| trace_of_product(&algebra[i], &algebra[j]));
    gram.rank() < k
}

/// Basis of the commutant `{ X : X A_t = A_t X for all t }`.
fn commutant_basis(dim: usize, actions: &[Matrix]) -> Vec<Matrix> {
    let unknowns = dim * dim;
    let mut system = Matrix::zeros(actions.len() * unknowns, unknowns);
    let mut row = 0;
    for a_t in actions {
        for a in 0..dim {
            for b in 0..dim {
                for k in 0..dim {
                    let coeff = a_t.at(k, b);
                    if !coeff.is_zero() {
                        let col = a * dim + k;
                        let upd = system.at(row, col) + coeff;
                        system.set(row, col, upd);
                    }
                    let coeff = a_t.at(a, k);
                    if !coeff.is_zero() {
                        let col = k * dim + b;
                        let upd = system.at(row, col) - coeff;
                        system.set(row, col, upd);
                    }
                }
                row += 1;
            }
        }
    }
    system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(dim, dim, |i, j| v[i * dim + j].clone()))
        .collect()
}

fn is_scalar_matrix(m: &Matrix) -> bool {
    let c = m.at(0, 0).clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let expected = if i == j { c.clone() } else { Scalar::zero() };
            if *m.at(i, j) != expected {
                return false;
            }
        }
    }
    true
}

/// Eigenvalue candidates for the spectral-split search; the commutants of the
/// bundled inputs have small rational spectra.
fn eigenvalue_candidates() -> Vec<Scalar> {
    let mut out = Vec::new();
    for k in -6i64..=6 {
        out.push(Scalar::from_int(k));
    }
    for (n, d) in [
        (1, 2),
        (-1, 2),
        (3, 2),
        (-3, 2),
        (1, 3),
        (-1, 3),
        (2, 3),
        (-2, 3),
        (5, 2),
        (-5, 2),
        (1, 4),
        (-1, 4),
    ] {
        out.push(Scalar::from_fraction(n, d).unwrap());
    }
    out
}

/// Searches the commutant for a non-scalar element with a rational eigenvalue
/// whose eigenspace is proper. Such an eigenspace commutes with the whole
/// action algebra, so it certifies reducibility.
fn commutant_split_exists(dim: usize, commutant: &[Matrix]) -> bool {
    let mut candidates: Vec<Matrix> = commutant.to_vec();
    for i in 0..commutant.len() {
        for j in (i + 1)..commutant.len() {
            candidates.push(&commutant[i] + &commutant[j]);
            candidates.push(&commutant[i] - &commutant[j]);
            candidates.push(&commutant[i] * &commutant[j]);
        }
    }
    let mut rng = SmallRng::new(0xc0ffee);
    for _ in 0..100 {
        let mut c = Matrix::zeros(dim, dim);
        for b in commutant {
            let coeff = Scalar::from_int(rng.next_in(-2..=2));
            if !coeff.is_zero() {
                c = &c + &b.scale(&coeff);
            }
        }
        candidates.push(c);
    }
    let lambdas = eigenvalue_candidates();
    for c in &candidates {
        if is_scalar_matrix(c) {
            continue;
        }
        for lambda in &lambdas {
            let shifted = c - &Matrix::identity(dim).scale(lambda);
            let kernel_dim = dim - shifted.rank();
            if kernel_dim > 0 && kernel_dim < dim {
                return true;
            }
        }
    }
    false
}

/// Exact simplicity test for a comodule via its dual-algebra module structure.
///
/// Layered decision, each layer exact:
/// 1. dimension 1 is simple;
/// 2. a nonzero trace-form radical of the action algebra certifies a proper
///    invariant subspace (the socle of the radical);
/// 3. a vector with a proper orbit span certifies reducibility (standard
///    basis plus seeded random vectors);
/// 4. a one-dimensional commutant certifies simplicity;
/// 5. a proper rational eigenspace of a commutant element certifies
///    reducibility;
/// 6. otherwise simplicity requires `dim B * dim C = (dim M)^2`
///    (Cauchy-Schwarz on the isotypic decomposition), which is returned.
///
/// This resolves every comodule whose simple constituents have endomorphism
/// ring Q -- in particular everything in the bundled corpus. Balanced
/// isotypic modules over a larger division ring would need minimal-polynomial
/// factorization and are outside this search.
pub fn is_simple(h: &HopfAlgebra, m: &Comodule) -> bool {
    let d = m.dim();
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let actions = m.action_matrices(h);
    let algebra = algebra_closure(d, &actions);
    if has_nontrivial_radical(&algebra) {
        return false;
    }

    let mut test_vectors: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut v = vec![Scalar::zero(); d];
            v[i] = Scalar::one();
            v
        })
        .collect();
    let mut rng = SmallRng::new(0xbead);
    for _ in 0..100 {
        let v: Vec<Scalar> = (0..d).map(|_| Scalar::from_int(rng.next_in(-3..=3))).collect();
        if v.iter().any(|s| !s.is_zero()) {
            test_vectors.push(v);
        }
    }
    for v in &test_vectors {
        let orbit = Matrix::hstack(
            &algebra
                .iter()
                .map(|b| {
                    let img = b.apply(v);
                    Matrix::from_fn(d, 1, |i, _| img[i].clone())
                })
                .collect::<Vec<_>>(),
        )
        .expect("orbit columns share the row count");
        if orbit.rank() < d {
            return false;
        }
    }

    let commutant = commutant_basis(d, &actions);
    if commutant.len() == 1 {
        return true;
    }
    if commutant_split_exists(d, &commutant) {
        return false;
    }
    algebra.len() * commutant.len() == d * d
}

/// The double left dual `M**`: same underlying space, coaction
/// `v_0 (x) S^2(v_1)`.
pub fn double_dual(h: &HopfAlgebra, m: &Comodule) -> Result<Comodule, HopfError> {
    let s2 = h.antipode_matrix() * h.antipode_matrix();
    let n = h.dim();
    let coaction = (0..m.dim())
        .map(|i| {
            let mut acc: std::collections::BTreeMap<(usize, usize), Scalar> = Default::default();
            for (j, t, c) in m.coaction_triples(i) {
                for k in 0..n {
                    let coeff = s2.at(k, *t);
                    if !coeff.is_zero() {
                        *acc.entry((*j, k)).or_insert_with(Scalar::zero) += &(c * coeff);
                    }
                }
            }
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((j, k), c)| (j, k, c))
                .collect()
        })
        .collect();
    let out = Comodule::new(m.dim(), coaction)?;
    out.validated(h)?;
    Ok(out)
}

/// The comodule `M^bullet` obtained by inverting the circle action
/// `h o v = v_0 lambda(h S(v_1))` of the convolution algebra and pushing the
/// coproduct through: `delta(v) = (h_1 o v) (x) h_2` where `h o v = v`.
///
/// Defined for simple comodules with surjective circle action; the choice of
/// `h` does not matter by non-degeneracy of the integral.
pub fn bullet(h: &HopfAlgebra, m: &Comodule) -> Result<Comodule, HopfError> {
    use super::integral::{integral, IntegralSide};
    if !is_simple(h, m) {
        return Err(HopfError::NotSimple);
    }
    let lambda = integral(h, IntegralSide::Left)?;
    let n = h.dim();
    let d = m.dim();

    // pairing[b][t] = lambda(e_b S(e_t))
    let pairing = Matrix::from_fn(n, n, |b, t| {
        let s_t = h.antipode_of(&h.basis_element(t));
        let prod = h.mul_elements(&h.basis_element(b), &s_t);
        lambda
            .covector
            .iter()
            .zip(&prod)
            .map(|(l, p)| l * p)
            .sum()
    });

    // circle[b]: the matrix of v -> e_b o v on M
    let circle: Vec<Matrix> = (0..n)
        .map(|b| {
            let mut mat = Matrix::zeros(d, d);
            for i in 0..d {
                for (j, t, c) in m.coaction_triples(i) {
                    let upd = mat.at(*j, i) + &(c * pairing.at(b, *t));
                    mat.set(*j, i, upd);
                }
            }
            mat
        })
        .collect();

    let mut coaction = Vec::with_capacity(d);
    for i in 0..d {
        // solve sum_b h_b (e_b o v_i) = v_i for h in H
        let system = Matrix::from_fn(d, n, |r, b| circle[b].at(r, i).clone());
        let mut target = vec![Scalar::zero(); d];
        target[i] = Scalar::one();
        let h_coeffs = system.solve(&target).ok_or(HopfError::BulletUnsolvable)?;

        let mut acc: std::collections::BTreeMap<(usize, usize), Scalar> = Default::default();
        for (b, hb) in h_coeffs.iter().enumerate() {
            if hb.is_zero() {
                continue;
            }
            for (p, r, c) in h.comult_triples(b) {
                // (e_p o v_i) (x) e_r
                for j in 0..d {
                    let coeff = circle[*p].at(j, i);
                    if !coeff.is_zero() {
                        *acc.entry((j, *r)).or_insert_with(Scalar::zero) += &(hb * &(c * coeff));
                    }
                }
            }
        }
        coaction.push(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((j, r), c)| (j, r, c))
                .collect(),
        );
    }
    let out = Comodule::new(d, coaction)?;
    out.validated(h)?;
    Ok(out)
}
