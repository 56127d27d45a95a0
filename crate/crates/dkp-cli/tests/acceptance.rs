//! Acceptance suite: one test per criterion, every check exact (zero
//! residual), one pass/fail line printed per criterion. The whole suite
//! runs in seconds.

use std::process::Command;

use dkp_core::analysis::{commutant, decompose, intertwiner, is_irreducible, unitarize};
use dkp_core::matrix::Matrix;
use dkp_core::planewave::{
    field_map_check, kg_relations_check, proca_relations_check, solution_space, Momentum,
};
use dkp_core::projectors::{
    build_projectors, verify_orthogonality, verify_r01_scalar, verify_rels_1p1,
};
use dkp_core::reps::{
    build_gamma, build_kronecker_rep, build_scalar_rep, build_vector_rep, builtin_irrep_1p1,
    trivial_rep, verify_dkp, GammaBasis, Representation,
};
use num_traits::Signed;

fn kron2() -> Representation {
    build_kronecker_rep(&build_gamma(GammaBasis::Dirac2), true).unwrap()
}

fn kron4() -> Representation {
    build_kronecker_rep(&build_gamma(GammaBasis::Dirac4), true).unwrap()
}

fn pass(name: &str) {
    println!("criterion {name}: PASS");
}

/// 1. The explicit 3x3 matrices satisfy the trilinear relation for all
///    8 index triples, exactly.
#[test]
fn criterion_01_builtin_satisfies_dkp() {
    let report = verify_dkp(&builtin_irrep_1p1());
    assert!(report.passed);
    assert!(report.violations.is_empty());
    pass("01 irrep1p1 satisfies the DKP algebra");
}

/// 2. The Kronecker sum with the 1/2 factor is a DKP representation;
///    without the factor it fails at (0,0,0) and the reported residual
///    equals the binomial-expansion oracle: three times the relation's
///    right-hand side.
#[test]
fn criterion_02_kronecker_half_dichotomy() {
    let g = build_gamma(GammaBasis::Dirac2);
    assert!(verify_dkp(&kron2()).passed);

    let nohalf = build_kronecker_rep(&g, false).unwrap();
    let report = verify_dkp(&nohalf);
    assert!(!report.passed);
    let first = &report.violations[0];
    assert_eq!(first.indices, vec![0, 0, 0]);

    // Oracle: with A = gamma^0 x I and C = I x gamma^0 (commuting
    // square roots of the identity), the binomial expansion gives
    // (A+C)^3 = A^3 + 3A^2C + 3AC^2 + C^3 = 4(A+C), so the relation
    // instance evaluates to LHS - RHS = 2*4(A+C) - 2(A+C) = 6(A+C),
    // which is 3 times the RHS 2*beta^0_nohalf.
    let id = Matrix::identity(2);
    let a = g.beta(0).kron(&id);
    let c = id.kron(g.beta(0));
    let a3 = &(&a * &a) * &a;
    let a2c = &(&a * &a) * &c;
    let ac2 = &a * &(&c * &c);
    let c3 = &(&c * &c) * &c;
    let lhs = (&(&a3 + &a2c.scale_int(3)) + &(&ac2.scale_int(3) + &c3)).scale_int(2);
    let rhs = nohalf.beta(0).scale_int(2);
    let oracle = &lhs - &rhs;
    assert_eq!(first.residual, oracle);
    assert_eq!(first.residual, rhs.scale_int(3));
    pass("02 kron2 needs the 1/2 factor; nohalf fails at (0,0,0) with the binomial residual");
}

/// 3. decompose(kron2) gives blocks [1, 3]; the 1-block is the zero
///    representation; the 3-block admits an invertible intertwiner to
///    the 3x3 representation with S†S a positive rational scalar.
#[test]
fn criterion_03_kron2_decomposition_and_equivalence() {
    let result = decompose(&kron2()).unwrap();
    assert!(result.complete);
    let dims: Vec<usize> = result.blocks.iter().map(|b| b.basis.len()).collect();
    assert_eq!(dims, vec![1, 3]);
    assert!(result.blocks[0].subrep.betas().iter().all(Matrix::is_zero));

    let three = &result.blocks[1].subrep;
    let builtin = builtin_irrep_1p1();
    let cert = intertwiner(three, &builtin).unwrap().expect("equivalent");
    assert!(cert.s.inverse().is_some());
    for mu in 0..2 {
        assert_eq!(&cert.s * three.beta(mu), builtin.beta(mu) * &cert.s);
    }
    let upgraded = unitarize(&cert, three, &builtin).unwrap();
    let lambda = upgraded.lambda.expect("scalar gram");
    assert!(lambda.is_positive());
    let gram = &cert.s.conj_transpose() * &cert.s;
    assert_eq!(
        gram,
        Matrix::identity(3).scalar_mul(&dkp_core::GaussianRational::from_rational(lambda))
    );
    pass("03 kron2 = zero block + 3x3 block equivalent to irrep1p1, gram scalar positive");
}

/// 4. Commutant dimensions 1 / 2 / 3 for the 3x3, 4x4 and 16x16
///    representations.
#[test]
fn criterion_04_commutant_dimensions() {
    assert_eq!(commutant(&builtin_irrep_1p1()).dim(), 1);
    assert_eq!(commutant(&kron2()).dim(), 2);
    assert_eq!(commutant(&kron4()).dim(), 3);
    pass("04 commutant dimensions 1 / 2 / 3");
}

/// 5. decompose(kron4) gives blocks [1, 5, 10]; the 5- and 10-blocks
///    are irreducible and mutually inequivalent.
#[test]
fn criterion_05_kron4_decomposition() {
    let result = decompose(&kron4()).unwrap();
    assert!(result.complete);
    let dims: Vec<usize> = result.blocks.iter().map(|b| b.basis.len()).collect();
    assert_eq!(dims, vec![1, 5, 10]);
    let five = &result.blocks[1].subrep;
    let ten = &result.blocks[2].subrep;
    assert!(is_irreducible(five).0);
    assert!(is_irreducible(ten).0);
    assert!(intertwiner(five, ten).unwrap().is_none());
    pass("05 kron4 = [1, 5, 10], blocks irreducible and inequivalent");
}

/// 6. The (1+1) projector identities hold exactly on every D=2 DKP
///    representation in the repo.
#[test]
fn criterion_06_rels_on_every_d2_rep() {
    let reps = [
        builtin_irrep_1p1(),
        build_scalar_rep(2).unwrap(),
        build_vector_rep(2).unwrap(),
        kron2(),
        trivial_rep(2).unwrap(),
    ];
    for rep in &reps {
        let ps = build_projectors(rep).unwrap();
        assert!(
            verify_rels_1p1(&ps, rep).unwrap().passed(),
            "dim {}",
            rep.dim()
        );
        assert!(
            verify_r01_scalar(&ps).unwrap().passed(),
            "dim {}",
            rep.dim()
        );
    }
    pass("06 rels identities and R^01 S_01 = 0 on every D=2 rep");
}

/// 7. Orthogonality dichotomy: all cross-sector products vanish for the
///    D=4 representations in both orders; at D=2 at least one product
///    is nonzero.
#[test]
fn criterion_07_orthogonality_dichotomy() {
    for rep in [
        kron4(),
        build_scalar_rep(4).unwrap(),
        build_vector_rep(4).unwrap(),
    ] {
        let ps = build_projectors(&rep).unwrap();
        let orth = verify_orthogonality(&ps);
        assert!(orth.all_vanish, "dim {}", rep.dim());
    }
    for rep in [builtin_irrep_1p1(), kron2()] {
        let ps = build_projectors(&rep).unwrap();
        let orth = verify_orthogonality(&ps);
        assert!(!orth.all_vanish, "dim {}", rep.dim());
        assert!(!orth.nonzero_products.is_empty());
    }
    pass("07 orthogonality dichotomy between D=4 and D=2");
}

/// 8. The first-order constructions: scalar and vector coincide with
///    the 3x3 representation at D=2; at D=4 they have dimensions 5 and
///    10 and satisfy the algebra.
#[test]
fn criterion_08_first_order_constructions() {
    let builtin = builtin_irrep_1p1();
    assert_eq!(build_scalar_rep(2).unwrap().betas(), builtin.betas());
    assert_eq!(build_vector_rep(2).unwrap().betas(), builtin.betas());
    let s4 = build_scalar_rep(4).unwrap();
    let v4 = build_vector_rep(4).unwrap();
    assert_eq!(s4.dim(), 5);
    assert_eq!(v4.dim(), 10);
    assert!(verify_dkp(&s4).passed);
    assert!(verify_dkp(&v4).passed);
    pass("08 scalar/vector constructions: D=2 equals irrep1p1, D=4 dims 5 and 10");
}

/// 9. Plane-wave suite on three exact on-shell momenta and off-shell
///    controls.
#[test]
fn criterion_09_plane_wave_suite() {
    let rep = builtin_irrep_1p1();
    let ps = build_projectors(&rep).unwrap();
    for (comps, m) in [([5i64, 4], 3i64), ([13, 12], 5), ([3, 0], 3)] {
        let p = Momentum::from_ints(&comps, m).unwrap();
        let sol = solution_space(&rep, &p).unwrap();
        assert_eq!(sol.amplitude_basis.len(), 1, "p={comps:?}");
        assert!(kg_relations_check(&rep, &ps, &sol).unwrap().passed());
        let proca = proca_relations_check(&rep, &ps, &sol).unwrap();
        assert!(proca.passed());
        // The beta^1-multiplied system must be part of the report.
        assert!(proca.checks.iter().any(|c| c.name.contains("vec1-system")));
        assert!(proca
            .checks
            .iter()
            .any(|c| c.name.contains("vec1-equivalence")));
    }
    for (comps, m) in [([1i64, 1], 1i64), ([2, 1], 1)] {
        let p = Momentum::from_ints(&comps, m).unwrap();
        let sol = solution_space(&rep, &p).unwrap();
        assert!(sol.amplitude_basis.is_empty(), "p={comps:?}");
    }
    pass("09 plane-wave suite over the on-shell grid with off-shell controls");
}

/// 10. The field map between the Klein-Gordon and Proca readings of the
///     on-shell amplitude, exact at p=(5,4), m=3.
#[test]
fn criterion_10_field_map() {
    let p = Momentum::from_ints(&[5, 4], 3).unwrap();
    let report = field_map_check(&p).unwrap();
    assert!(report.passed());
    for expected in [
        "field-map F01/m = phi",
        "field-map -A0 = (1/m) d^1 phi",
        "field-map -A1 = (1/m) d^0 phi",
        "field-map lorenz p_mu A^mu = 0",
    ] {
        assert!(
            report.checks.iter().any(|c| c.name == expected),
            "{expected}"
        );
    }
    pass("10 field map exact at p=(5,4), m=3");
}

/// 11. `dkp paper` aggregates the suite, exits 0, and its JSON report
///     is byte-stable across two consecutive runs.
#[test]
fn criterion_11_paper_command_byte_stable() {
    let binary = env!("CARGO_BIN_EXE_dkp");
    let run = || {
        Command::new(binary)
            .args(["paper", "--json"])
            .output()
            .expect("run dkp paper")
    };
    let first = run();
    assert!(first.status.success(), "exit: {:?}", first.status);
    let second = run();
    assert!(second.status.success());
    assert_eq!(first.stdout, second.stdout, "report must be byte-stable");
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("\"overall\": \"pass\""));

    // The self-test switch must flip the overall verdict.
    let corrupted = Command::new(binary)
        .args(["paper", "--selftest-corrupt"])
        .output()
        .expect("run dkp paper --selftest-corrupt");
    assert_eq!(corrupted.status.code(), Some(1));
    pass("11 dkp paper exits 0 with a byte-stable JSON report");
}
