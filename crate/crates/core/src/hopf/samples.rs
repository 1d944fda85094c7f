//! Bundled example Hopf algebras and standard comodules, matching the JSON
//! files shipped under `data/`.

use super::{Comodule, HopfAlgebra};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Group algebra of the cyclic group of the given order: basis `g^0..g^{n-1}`,
/// `Delta(g^i) = g^i (x) g^i`, `S(g^i) = g^{-i}`.
pub fn cyclic_group_algebra(order: usize) -> HopfAlgebra {
    assert!(order >= 1);
    let n = order;
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            i => format!("g^{i}"),
        })
        .collect();
    let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, coeffs) in row.iter_mut().enumerate() {
            coeffs[(i + j) % n] = Scalar::one();
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[0] = Scalar::one();
    let comult = (0..n).map(|i| vec![(i, i, Scalar::one())]).collect();
    let counit = vec![Scalar::one(); n];
    let mut antipode = Matrix::zeros(n, n);
    for j in 0..n {
        antipode.set((n - j) % n, j, Scalar::one());
    }
    HopfAlgebra::new(names, mult, unit, comult, counit, antipode)
        .expect("cyclic group algebra is well formed")
}

/// Sweedler's four-dimensional Hopf algebra: basis `{1, g, x, gx}` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Delta(x) = x (x) 1 + g (x) x`,
/// `S(x) = -gx`. The smallest non-cosemisimple Hopf algebra with integral.
pub fn sweedler_h4() -> HopfAlgebra {
    sweedler_with_antipode_sign(-1)
}

/// Sweedler's algebra with the wrong antipode sign `S(x) = +gx`; fails the
/// antipode axiom and exists for negative tests.
pub fn sweedler_h4_bad_antipode() -> HopfAlgebra {
    sweedler_with_antipode_sign(1)
}

fn sweedler_with_antipode_sign(sign: i64) -> HopfAlgebra {
    let names = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let n = 4;
    let z = || vec![Scalar::zero(); n];
    let e = |i: usize, c: i64| {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::from_int(c);
        v
    };
    // rows: left factor 1, g, x, gx; columns: right factor
    let mult = vec![
        vec![e(0, 1), e(1, 1), e(2, 1), e(3, 1)],
        vec![e(1, 1), e(0, 1), e(3, 1), e(2, 1)],
        vec![e(2, 1), e(3, -1), z(), z()],
        vec![e(3, 1), e(2, -1), z(), z()],
    ];
    let unit = e(0, 1);
    let comult = vec![
        vec![(0, 0, Scalar::one())],
        vec![(1, 1, Scalar::one())],
        vec![(2, 0, Scalar::one()), (1, 2, Scalar::one())],
        vec![(3, 1, Scalar::one()), (0, 3, Scalar::one())],
    ];
    let counit = vec![
        Scalar::one(),
        Scalar::one(),
        Scalar::zero(),
        Scalar::zero(),
    ];
    let mut antipode = Matrix::zeros(n, n);
    antipode.set(0, 0, Scalar::one()); // S(1) = 1
    antipode.set(1, 1, Scalar::one()); // S(g) = g
    antipode.set(3, 2, Scalar::from_int(sign)); // S(x) = sign * gx
    antipode.set(2, 3, Scalar::one()); // S(gx) = x
    HopfAlgebra::new(names, mult, unit, comult, counit, antipode)
        .expect("Sweedler algebra is well formed")
}

/// Permutations of {0,1,2} in a fixed order: identity, the two 3-cycles,
/// then the three transpositions.
const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
];

fn s3_compose(p: usize, q: usize) -> usize {
    // (p . q)(i) = p(q(i))
    let composed = [
        S3[p][S3[q][0]],
        S3[p][S3[q][1]],
        S3[p][S3[q][2]],
    ];
    S3.iter().position(|s| *s == composed).expect("closed")
}

fn s3_inverse(p: usize) -> usize {
    (0..6).find(|&q| s3_compose(p, q) == 0).expect("group")
}

/// Standard 2-dimensional representation of the permutation `p` on
/// `{(x0,x1,x2) : sum = 0}` in the basis `f1 = e0-e1`, `f2 = e1-e2`.
fn s3_standard_matrix(p: usize) -> Matrix {
    // e0 - e1 = f1, e1 - e2 = f2, e0 - e2 = f1 + f2, antisymmetric in (a, b)
    let delta = |a: usize, b: usize| -> [i64; 2] {
        match (a, b) {
            (0, 1) => [1, 0],
            (1, 0) => [-1, 0],
            (1, 2) => [0, 1],
            (2, 1) => [0, -1],
            (0, 2) => [1, 1],
            (2, 0) => [-1, -1],
            _ => [0, 0],
        }
    };
    // columns: image of f1 = e0 - e1 and f2 = e1 - e2
    let c1 = delta(S3[p][0], S3[p][1]);
    let c2 = delta(S3[p][1], S3[p][2]);
    Matrix::from_fn(2, 2, |i, j| {
        let col = if j == 0 { c1 } else { c2 };
        Scalar::from_int(col[i])
    })
}

/// The function algebra on the symmetric group S3: basis of delta functions,
/// pointwise multiplication, `Delta(d_s) = sum_{ab=s} d_a (x) d_b`,
/// `S(d_s) = d_{s^{-1}}`. Cosemisimple with a two-sided integral; its
/// comodules are S3-representations, so it carries a 2-dimensional simple.
pub fn dual_s3_algebra() -> HopfAlgebra {
    let n = 6;
    let names: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
    let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        row[i][i] = Scalar::one();
    }
    let unit = vec![Scalar::one(); n];
    let comult = (0..n)
        .map(|s| {
            let mut triples = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if s3_compose(a, b) == s {
                        triples.push((a, b, Scalar::one()));
                    }
                }
            }
            triples
        })
        .collect();
    let counit = (0..n)
        .map(|s| if s == 0 { Scalar::one() } else { Scalar::zero() })
        .collect();
    let mut antipode = Matrix::zeros(n, n);
    for s in 0..n {
        antipode.set(s3_inverse(s), s, Scalar::one());
    }
    HopfAlgebra::new(names, mult, unit, comult, counit, antipode)
        .expect("dual S3 algebra is well formed")
}

/// The standard 2-dimensional simple comodule over [`dual_s3_algebra`]:
/// `rho(v) = sum_s (M(s) v) (x) d_s` for the standard representation `M`.
pub fn s3_standard_comodule() -> Comodule {
    let coaction = (0..2)
        .map(|i| {
            let mut triples = Vec::new();
            for s in 0..6 {
                let m = s3_standard_matrix(s);
                for j in 0..2 {
                    let c = m.at(j, i);
                    if !c.is_zero() {
                        triples.push((j, s, c.clone()));
                    }
                }
            }
            triples
        })
        .collect();
    Comodule::new(2, coaction).expect("standard comodule is well formed")
}

/// The trivial comodule `k` with coaction `v -> v (x) 1`.
pub fn trivial_comodule(h: &HopfAlgebra) -> Comodule {
    let triples = h
        .unit_vector()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (0, k, c.clone()))
        .collect();
    Comodule::new(1, vec![triples]).expect("trivial comodule is well formed")
}

/// The one-dimensional comodule `v -> v (x) e_t`; only valid when `e_t` is
/// group-like.
pub fn character_comodule(h: &HopfAlgebra, t: usize) -> Comodule {
    assert!(t < h.dim(), "character index out of range");
    Comodule::new(1, vec![vec![(0, t, Scalar::one())]])
        .expect("character comodule is well formed")
}

/// `H` coacting on itself by the comultiplication.
pub fn regular_comodule(h: &HopfAlgebra) -> Comodule {
    let coaction = (0..h.dim()).map(|i| h.comult_triples(i).to_vec()).collect();
    Comodule::new(h.dim(), coaction).expect("regular comodule is well formed")
}

/// All simple comodules of the bundled pointed examples: the characters at
/// the group-like basis elements.
pub fn simple_comodules(h: &HopfAlgebra) -> Vec<(usize, Comodule)> {
    h.group_like_basis_indices()
        .into_iter()
        .map(|t| (t, character_comodule(h, t)))
        .collect()
}
