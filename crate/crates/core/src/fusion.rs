//! The Z^2-labelled fusion calculus of simple comodules for birank-(1,1)
//! symmetries.
//!
//! Simple comodules are named by integer pairs `(m, n)`; the total degree
//! `m + n` decides everything. Labels of total degree zero are the powers
//! `D^k = (k, -k)` of the one-dimensional superdeterminant and are invertible
//! under tensor product. A product of two labels with opposite nonzero total
//! degrees is not semisimple: it is the indecomposable injective hull of a
//! `D^k` with four one-dimensional composition factors. Every other product
//! splits into two two-dimensional simples.
//!
//! `K0Element` is the Grothendieck-ring side of the story: formal integer
//! combinations of labels multiplied by composition factors, which stays a
//! commutative associative ring even through the non-semisimple case.

use std::collections::BTreeMap;
use std::fmt;

/// Label `(m, n)` of a simple comodule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleLabel {
    pub m: i64,
    pub n: i64,
}

impl SimpleLabel {
    pub fn new(m: i64, n: i64) -> Self {
        SimpleLabel { m, n }
    }

    /// The invertible line `D^k = (k, -k)`; `D^1` is the superdeterminant.
    pub fn d_power(k: i64) -> Self {
        SimpleLabel { m: k, n: -k }
    }

    pub fn total_degree(&self) -> i64 {
        self.m + self.n
    }

    /// `(m, n)* = (-m, -n)`.
    pub fn dual(&self) -> Self {
        SimpleLabel {
            m: -self.m,
            n: -self.n,
        }
    }

    /// A label is splitting (typical) exactly when its total degree is nonzero.
    pub fn is_splitting(&self) -> bool {
        self.total_degree() != 0
    }

    /// Dimension: 2 for splitting labels, 1 for the `D^k` lines.
    pub fn dim(&self) -> u64 {
        if self.is_splitting() {
            2
        } else {
            1
        }
    }

    /// Tensoring with `D^j`: `(m, n) . D^j = (m + j, n - j)`.
    pub fn twist(&self, j: i64) -> Self {
        SimpleLabel {
            m: self.m + j,
            n: self.n - j,
        }
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A finitely supported integer combination of simple labels. Zero
/// multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K0Element {
    terms: BTreeMap<SimpleLabel, i64>,
}

impl K0Element {
    pub fn zero() -> Self {
        K0Element::default()
    }

    /// The class of the trivial comodule `(0,0)`, the ring unit.
    pub fn one() -> Self {
        K0Element::from_label(SimpleLabel::new(0, 0))
    }

    pub fn from_label(l: SimpleLabel) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(l, 1);
        K0Element { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (SimpleLabel, i64)>) -> Self {
        let mut out = K0Element::zero();
        for (l, c) in pairs {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, l: SimpleLabel, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(l).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&l);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SimpleLabel, &i64)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, l: &SimpleLabel) -> i64 {
        self.terms.get(l).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &K0Element) -> K0Element {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(*l, *c);
        }
        out
    }

    pub fn dual(&self) -> K0Element {
        K0Element::from_terms(self.terms().map(|(l, c)| (l.dual(), *c)))
    }

    /// The dimension homomorphism extended linearly.
    pub fn dim(&self) -> i64 {
        self.terms()
            .map(|(l, c)| c * l.dim() as i64)
            .sum()
    }
}

impl fmt::Display for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(l, c)| match c {
                1 => l.to_string(),
                c => format!("{c}\u{b7}{l}"),
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Structure of a tensor product of two simple labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorDecomposition {
    /// Direct sum of simples with multiplicity (sorted, multiplicities > 0).
    Semisimple(Vec<(SimpleLabel, u64)>),
    /// Indecomposable injective with one-dimensional socle `D^k`; `factors`
    /// are its four composition factors `2 D^k + D^{k+1} + D^{k-1}`.
    IndecomposableInjective {
        socle: SimpleLabel,
        factors: K0Element,
    },
}

impl TensorDecomposition {
    /// Composition factors in the Grothendieck group.
    pub fn factors(&self) -> K0Element {
        match self {
            TensorDecomposition::Semisimple(parts) => {
                K0Element::from_terms(parts.iter().map(|(l, c)| (*l, *c as i64)))
            }
            TensorDecomposition::IndecomposableInjective { factors, .. } => factors.clone(),
        }
    }

    pub fn total_dim(&self) -> i64 {
        self.factors().dim()
    }
}

impl fmt::Display for TensorDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorDecomposition::Semisimple(parts) => {
                let text: Vec<String> = parts
                    .iter()
                    .map(|(l, c)| match c {
                        1 => l.to_string(),
                        c => format!("{c}\u{b7}{l}"),
                    })
                    .collect();
                write!(f, "{}", text.join(" + "))
            }
            TensorDecomposition::IndecomposableInjective { socle, factors } => {
                write!(f, "INDEC-INJ socle {socle}; factors {factors}")
            }
        }
    }
}

/// Product of two nonzero-degree "line" labels `I_{a,0} . I_{b,0}` with
/// `a + b != 0`, as the pair of splitting summands.
fn line_product(a: i64, b: i64) -> [SimpleLabel; 2] {
    debug_assert!(a != 0 && b != 0 && a + b != 0);
    let s = a + b;
    let same_sign = (a > 0) == (b > 0);
    if (same_sign && a > 0) || (!same_sign && s < 0) {
        // both positive, or mixed signs with negative total
        [SimpleLabel::new(s, 0), SimpleLabel::new(s - 1, 1)]
    } else {
        // both negative, or mixed signs with positive total
        [SimpleLabel::new(s, 0), SimpleLabel::new(s + 1, -1)]
    }
}

/// Decomposition of `x (x) y` into simples, or into the indecomposable
/// injective when the two total degrees are opposite and nonzero.
pub fn tensor(x: SimpleLabel, y: SimpleLabel) -> TensorDecomposition {
    let s1 = x.total_degree();
    let s2 = y.total_degree();

    if s1 == 0 {
        // x = D^m is invertible: a single summand.
        return TensorDecomposition::Semisimple(vec![(y.twist(x.m), 1)]);
    }
    if s2 == 0 {
        return TensorDecomposition::Semisimple(vec![(x.twist(y.m), 1)]);
    }
    let j = -(x.n + y.n);
    if s1 + s2 == 0 {
        // I_{s1,0} . I_{-s1,0} twisted by D^j: injective hull of D^j.
        let socle = SimpleLabel::d_power(j);
        let factors = K0Element::from_terms([
            (socle, 2),
            (SimpleLabel::d_power(j + 1), 1),
            (SimpleLabel::d_power(j - 1), 1),
        ]);
        return TensorDecomposition::IndecomposableInjective { socle, factors };
    }
    let mut parts: Vec<(SimpleLabel, u64)> = line_product(s1, s2)
        .into_iter()
        .map(|l| (l.twist(j), 1))
        .collect();
    parts.sort();
    TensorDecomposition::Semisimple(parts)
}

/// Bilinear extension of [`tensor`] to the Grothendieck ring, multiplying by
/// composition factors.
pub fn k0_mul(x: &K0Element, y: &K0Element) -> K0Element {
    let mut out = K0Element::zero();
    for (lx, cx) in x.terms() {
        for (ly, cy) in y.terms() {
            for (l, c) in tensor(*lx, *ly).factors().terms() {
                out.add_term(*l, c * cx * cy);
            }
        }
    }
    out
}

/// Multiplicities of the simples in `V^{(x)n}` for `V = (1,0)`, obtained by
/// iterating the fusion rule. `(n-k, k)` appears with multiplicity `C(n-1, k)`.
pub fn tensor_power_multiplicities(n: usize) -> BTreeMap<SimpleLabel, u64> {
    assert!(n >= 1, "tensor power must be at least 1");
    let v = K0Element::from_label(SimpleLabel::new(1, 0));
    let mut acc = v.clone();
    for _ in 1..n {
        acc = k0_mul(&acc, &v);
    }
    acc.terms()
        .map(|(l, c)| {
            debug_assert!(*c > 0);
            (*l, *c as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::binomial;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn l(m: i64, n: i64) -> SimpleLabel {
        SimpleLabel::new(m, n)
    }

    fn random_label(rng: &mut StdRng, bound: i64) -> SimpleLabel {
        l(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
    }

    #[test]
    fn dual_examples() {
        assert_eq!(l(1, 0).dual(), l(-1, 0));
        assert_eq!(l(0, 0).dual(), l(0, 0));
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let x = random_label(&mut rng, 9);
            assert_eq!(x.dual().dual(), x);
        }
    }

    #[test]
    fn splitting_and_dimension() {
        assert!(l(1, 0).is_splitting());
        assert_eq!(l(1, 0).dim(), 2);
        assert!(!l(1, -1).is_splitting()); // the superdeterminant
        assert_eq!(l(1, -1).dim(), 1);
        assert!(!l(0, 0).is_splitting());
        assert_eq!(l(0, 0).dim(), 1);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            tensor(l(1, 0), l(1, 0)),
            TensorDecomposition::Semisimple(vec![(l(1, 1), 1), (l(2, 0), 1)])
        );

        let vv_star = tensor(l(1, 0), l(-1, 0));
        match &vv_star {
            TensorDecomposition::IndecomposableInjective { socle, factors } => {
                assert_eq!(*socle, l(0, 0));
                assert_eq!(
                    *factors,
                    K0Element::from_terms([(l(0, 0), 2), (l(1, -1), 1), (l(-1, 1), 1)])
                );
            }
            other => panic!("expected the injective hull of k, got {other:?}"),
        }

        assert_eq!(
            tensor(l(3, 0), l(-1, 0)),
            TensorDecomposition::Semisimple(vec![(l(2, 0), 1), (l(3, -1), 1)])
        );

        assert_eq!(
            tensor(l(2, -2), l(1, 3)),
            TensorDecomposition::Semisimple(vec![(l(3, 1), 1)])
        );
    }

    #[test]
    fn d_twist_rule() {
        // (m,n) . (-1,1) = (m-1, n+1) for every label
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..100 {
            let x = random_label(&mut rng, 9);
            assert_eq!(
                tensor(x, l(-1, 1)),
                TensorDecomposition::Semisimple(vec![(l(x.m - 1, x.n + 1), 1)])
            );
        }
        // the superdeterminant and its inverse cancel
        assert_eq!(
            tensor(l(1, -1), l(-1, 1)),
            TensorDecomposition::Semisimple(vec![(l(0, 0), 1)])
        );
    }

    #[test]
    fn dimension_homomorphism() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..300 {
            let x = random_label(&mut rng, 6);
            let y = random_label(&mut rng, 6);
            assert_eq!(
                tensor(x, y).total_dim(),
                (x.dim() * y.dim()) as i64,
                "{x} (x) {y}"
            );
        }
    }

    #[test]
    fn k0_ring_examples() {
        let v = K0Element::from_label(l(1, 0));
        let v_star = K0Element::from_label(l(-1, 0));
        assert_eq!(
            k0_mul(&v, &v_star),
            K0Element::from_terms([(l(0, 0), 2), (l(1, -1), 1), (l(-1, 1), 1)])
        );

        let mut rng = StdRng::seed_from_u64(4);
        let unit = K0Element::one();
        for _ in 0..50 {
            let x = K0Element::from_terms([
                (random_label(&mut rng, 6), rng.gen_range(-3..=3)),
                (random_label(&mut rng, 6), rng.gen_range(-3..=3)),
            ]);
            assert_eq!(k0_mul(&unit, &x), x);
            assert_eq!(k0_mul(&x, &unit), x);
        }

        // ((V.V).V*) = (V.(V.V*)) = 2 V + (2,-1) + (0,1)
        let vv = k0_mul(&v, &v);
        let lhs = k0_mul(&vv, &v_star);
        let rhs = k0_mul(&v, &k0_mul(&v, &v_star));
        let expected =
            K0Element::from_terms([(l(1, 0), 2), (l(2, -1), 1), (l(0, 1), 1)]);
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn k0_mul_is_associative_and_commutative() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let x = K0Element::from_label(random_label(&mut rng, 6));
            let y = K0Element::from_label(random_label(&mut rng, 6));
            let z = K0Element::from_label(random_label(&mut rng, 6));
            assert_eq!(k0_mul(&k0_mul(&x, &y), &z), k0_mul(&x, &k0_mul(&y, &z)));
            assert_eq!(k0_mul(&x, &y), k0_mul(&y, &x));
        }
    }

    #[test]
    fn dual_is_a_ring_anti_automorphism() {
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..200 {
            let x = K0Element::from_label(random_label(&mut rng, 6));
            let y = K0Element::from_label(random_label(&mut rng, 6));
            assert_eq!(k0_mul(&x.dual(), &y.dual()), k0_mul(&y, &x).dual());
        }
    }

    #[test]
    fn tensor_power_multiplicities_are_binomial() {
        assert_eq!(
            tensor_power_multiplicities(1),
            BTreeMap::from([(l(1, 0), 1)])
        );
        assert_eq!(
            tensor_power_multiplicities(3),
            BTreeMap::from([(l(3, 0), 1), (l(2, 1), 2), (l(1, 2), 1)])
        );
        assert_eq!(
            tensor_power_multiplicities(4),
            BTreeMap::from([(l(4, 0), 1), (l(3, 1), 3), (l(2, 2), 3), (l(1, 3), 1)])
        );
        for n in 1..=8usize {
            let mults = tensor_power_multiplicities(n);
            assert_eq!(mults.len(), n);
            for k in 0..n {
                assert_eq!(
                    mults[&l((n - k) as i64, k as i64)] as u128,
                    binomial(n - 1, k)
                );
            }
            // dimension bookkeeping: all factors are 2-dimensional
            let total: u64 = mults.values().map(|c| c * 2).sum();
            assert_eq!(total as u128, 1u128 << n);
        }
    }
}
