//! Acceptance suite: one test per criterion, exact arithmetic throughout,
//! each printing a single PASS line with its runtime (visible under
//! `cargo test --test acceptance -- --nocapture`).

use cofrob::commutant::{binomial, commutant_dim};
use cofrob::fusion::{self, K0Element, SimpleLabel, TensorDecomposition};
use cofrob::hecke::HeckeSymmetry;
use cofrob::hopf::{self, samples, HopfAlgebra, IntegralSide};
use cofrob::poincare;
use cofrob::scalar::Scalar;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_fraction(n, d).unwrap()
}

fn sample_parameters() -> Vec<Scalar> {
    vec![q(3, 1), q(5, 1), q(7, 2), q(1, 1)]
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS in {elapsed:.2?}");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its runtime budget: {elapsed:.2?} >= {budget:.2?}"
    );
}

#[test]
fn criterion_1_hecke_axioms() {
    let started = Instant::now();
    for qv in sample_parameters() {
        let h = HeckeSymmetry::manin_standard(qv.clone()).unwrap();
        assert!(h.verify_yang_baxter().holds, "YBE at q = {qv}");
        assert!(h.verify_hecke_relation(), "Hecke relation at q = {qv}");
        assert!(h.verify_closed(), "closure at q = {qv}");
    }
    finish(
        "1 (Hecke axioms for q in {3, 5, 7/2, 1})",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_q_rank() {
    let started = Instant::now();
    for qv in sample_parameters() {
        let h = HeckeSymmetry::manin_standard(qv.clone()).unwrap();
        assert_eq!(h.q_rank().unwrap(), Scalar::zero(), "q-rank at q = {qv}");
    }
    assert_eq!(
        HeckeSymmetry::flip(2).q_rank().unwrap(),
        Scalar::from_int(2)
    );
    assert_eq!(
        HeckeSymmetry::super_flip_11().q_rank().unwrap(),
        Scalar::zero()
    );
    finish("2 (q-rank values)", started, Duration::from_secs(1));
}

#[test]
fn criterion_3_poincare_series() {
    let started = Instant::now();
    let h = HeckeSymmetry::manin_standard(q(3, 1)).unwrap();
    for n in 1..=6 {
        assert_eq!(poincare::sym_dim(&h, n).unwrap(), 2, "dim S_{n}");
        assert_eq!(poincare::ext_dim(&h, n).unwrap(), 2, "dim L_{n}");
    }
    let (verdict, table) = poincare::detect_birank11_checked(
        |qv| HeckeSymmetry::manin_standard(qv.clone()),
        &q(3, 1),
        6,
    )
    .unwrap();
    assert!(verdict, "birank (1,1) verdict");
    assert_eq!(table.fitted_a, Some(Scalar::one()));
    assert_eq!(table.fitted_b, Some(Scalar::one()));
    finish("3 (Poincare series, birank (1,1))", started, Duration::from_secs(30));
}

#[test]
fn criterion_4_schur_weyl_oracle() {
    let started = Instant::now();
    let h = HeckeSymmetry::manin_standard(q(3, 1)).unwrap();
    for (n, expected) in [(2usize, 2usize), (3, 6), (4, 20)] {
        let got = commutant_dim(&h, n).unwrap();
        assert_eq!(got, expected, "commutant dimension at power {n}");
        let predicted: u128 = (0..n).map(|k| binomial(n - 1, k).pow(2)).sum();
        assert_eq!(got as u128, predicted, "binomial prediction at power {n}");

        // cross-module check against the fusion calculus: the multiplicities
        // of V^{(x)n} drive both the endomorphism count and the total dimension
        let mults = fusion::tensor_power_multiplicities(n);
        let from_fusion: u64 = mults.values().map(|c| c * c).sum();
        assert_eq!(got as u64, from_fusion, "fusion multiplicities at power {n}");
        let total: u64 = mults.keys().zip(mults.values()).map(|(l, c)| c * l.dim()).sum();
        assert_eq!(u128::from(total), 1u128 << n, "total dimension bookkeeping at power {n}");
    }
    finish("4 (Schur-Weyl oracle 2, 6, 20)", started, Duration::from_secs(300));
}

#[test]
fn criterion_5_fusion_ring_properties() {
    let started = Instant::now();

    // dimension homomorphism on every product with labels in [-6, 6]^2
    for m in -6..=6i64 {
        for n in -6..=6i64 {
            let x = SimpleLabel::new(m, n);
            assert_eq!(x.is_splitting(), x.dim() == 2, "splitting <=> dim 2 at {x}");
            for p in -6..=6i64 {
                for qq in -6..=6i64 {
                    let y = SimpleLabel::new(p, qq);
                    let d = fusion::tensor(x, y);
                    assert_eq!(
                        d.total_dim(),
                        (x.dim() * y.dim()) as i64,
                        "dimension homomorphism at {x} (x) {y}"
                    );
                    if let TensorDecomposition::IndecomposableInjective { socle, factors } = &d {
                        assert_eq!(factors.multiplicity(socle), 2);
                    }
                }
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(0xfade);
    let random_label =
        |rng: &mut StdRng| SimpleLabel::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6));

    // associativity on 1000 random triples
    for _ in 0..1000 {
        let x = K0Element::from_label(random_label(&mut rng));
        let y = K0Element::from_label(random_label(&mut rng));
        let z = K0Element::from_label(random_label(&mut rng));
        assert_eq!(
            fusion::k0_mul(&fusion::k0_mul(&x, &y), &z),
            fusion::k0_mul(&x, &fusion::k0_mul(&y, &z))
        );
    }

    // commutativity and the dual anti-automorphism on 1000 random pairs
    for _ in 0..1000 {
        let x = K0Element::from_label(random_label(&mut rng));
        let y = K0Element::from_label(random_label(&mut rng));
        assert_eq!(fusion::k0_mul(&x, &y), fusion::k0_mul(&y, &x));
        assert_eq!(
            fusion::k0_mul(&x.dual(), &y.dual()),
            fusion::k0_mul(&y, &x).dual()
        );
    }

    // D-twist rule
    for _ in 0..1000 {
        let x = random_label(&mut rng);
        assert_eq!(
            fusion::tensor(x, SimpleLabel::new(-1, 1)),
            TensorDecomposition::Semisimple(vec![(SimpleLabel::new(x.m - 1, x.n + 1), 1)])
        );
    }

    finish("5 (fusion ring property suite)", started, Duration::from_secs(10));
}

fn bundled_hopf_algebras() -> Vec<(&'static str, HopfAlgebra)> {
    vec![
        ("kC2", samples::cyclic_group_algebra(2)),
        ("kC3", samples::cyclic_group_algebra(3)),
        ("kC4", samples::cyclic_group_algebra(4)),
        ("H4", samples::sweedler_h4()),
    ]
}

#[test]
fn criterion_6_splitting_equivalence() {
    let started = Instant::now();
    for (name, h) in bundled_hopf_algebras() {
        assert!(h.validate().ok, "{name} validates");
        let expect_splitting = name != "H4";
        let simples = samples::simple_comodules(&h);
        assert!(!simples.is_empty());
        for (t, m) in simples {
            let split = hopf::splitting_test(&h, &m).unwrap();
            let oracle = hopf::projectivity_oracle(&h, &m).unwrap();
            assert_eq!(
                split.splitting, oracle,
                "splitting test and projectivity oracle disagree on character {t} of {name}"
            );
            assert_eq!(
                split.splitting, expect_splitting,
                "expected verdict on character {t} of {name}"
            );
        }
    }
    finish("6 (splitting <=> projectivity on all simples)", started, Duration::from_secs(5));
}

#[test]
fn criterion_7_integral_suite() {
    let started = Instant::now();
    for (name, h) in bundled_hopf_algebras() {
        // solution spaces have dimension exactly one
        let left = hopf::find_integral(&h, IntegralSide::Left)
            .unwrap_or_else(|e| panic!("{name} left integral: {e}"))
            .unwrap_or_else(|| panic!("{name} has no left integral"));
        let right = hopf::find_integral(&h, IntegralSide::Right)
            .unwrap_or_else(|e| panic!("{name} right integral: {e}"))
            .unwrap_or_else(|| panic!("{name} has no right integral"));

        assert!(
            hopf::antipode_composed_is_right_integral(&h, &left),
            "lambda_l . S fails the right-integral axiom on {name}"
        );
        assert!(
            hopf::first_identity_holds(&h, &left),
            "first convolution identity fails on {name}"
        );
        assert!(
            hopf::second_identity_holds(&h, &right),
            "second convolution identity fails on {name}"
        );
        assert!(
            hopf::convolution_associative(&h, &left),
            "convolution is not associative on {name}"
        );
        assert!(
            hopf::balanced_b_holds(&h, &left),
            "bilinear form b is not balanced on {name}"
        );

        if name == "H4" {
            let mut gx = vec![Scalar::zero(); 4];
            gx[3] = Scalar::one();
            assert_eq!(left.covector, gx, "H4 left integral supported on gx");
            let mut x = vec![Scalar::zero(); 4];
            x[2] = Scalar::one();
            assert_eq!(right.covector, x, "H4 right integral supported on x");
            assert_eq!(hopf::bilinear_form_b(&h, &left).rank(), 4, "rank of b on H4");
        }
    }
    finish("7 (integral suite)", started, Duration::from_secs(5));
}

#[test]
fn criterion_8_hom_dimension() {
    let started = Instant::now();
    let h = samples::sweedler_h4();
    let regular = samples::regular_comodule(&h);
    let cases = [
        ("trivial", samples::trivial_comodule(&h)),
        ("M_g", samples::character_comodule(&h, 1)),
        ("regular", regular.clone()),
    ];
    for (name, m) in cases {
        assert_eq!(
            hopf::hom_dim(&h, &regular, &m),
            m.dim(),
            "hom dimension from the regular comodule to {name}"
        );
    }
    finish("8 (Hom dimension equals comodule dimension)", started, Duration::from_secs(5));
}
