//! Cross-module oracle tests with independently derived expected
//! values, plus the repo's central theorem: every (1+1) DKP
//! representation constructed here decomposes into zero blocks and
//! blocks equivalent to the explicit 3x3 representation.

use dkp_core::analysis::{commutant, decompose, intertwiner, unitarize};
use dkp_core::matrix::{solve_sylvester_family, Matrix};
use dkp_core::planewave::{solution_space, Momentum};
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

/// Independent check that the Sylvester solver returns what it claims:
/// each basis element commutes with every generator, and the basis is
/// linearly independent.
#[test]
fn commutant_basis_is_valid_and_frozen_dims_hold() {
    for (rep, expected_dim) in [(builtin_irrep_1p1(), 1usize), (kron2(), 2), (kron4(), 3)] {
        let c = commutant(&rep);
        assert_eq!(c.dim(), expected_dim, "dim {}", rep.dim());
        for x in &c.basis {
            for b in rep.betas() {
                assert!((&(x * b) - &(b * x)).is_zero());
            }
        }
        let stacked: Vec<Matrix> = c.basis.iter().map(Matrix::vec_rows).collect();
        assert_eq!(Matrix::from_columns(&stacked).rank(), expected_dim);
    }
}

/// The 9-unknown commutant system of the 3x3 representation has a
/// one-dimensional solution spanned by the identity.
#[test]
fn sylvester_on_builtin_betas_gives_scalars() {
    let rep = builtin_irrep_1p1();
    let pairs: Vec<(Matrix, Matrix)> = rep.betas().iter().map(|b| (b.clone(), b.clone())).collect();
    let basis = solve_sylvester_family(&pairs).unwrap();
    assert_eq!(basis.len(), 1);
    assert_eq!(basis[0], Matrix::identity(3));
}

/// Schur consistency: the commutant dimension is never smaller than the
/// number of blocks, with equality at the multiplicity-free cases.
#[test]
fn schur_consistency() {
    for (rep, blocks_expected) in [
        (builtin_irrep_1p1(), 1usize),
        (kron2(), 2),
        (kron4(), 3),
        (trivial_rep(2).unwrap(), 1),
    ] {
        let result = decompose(&rep).unwrap();
        assert!(result.complete);
        assert_eq!(result.blocks.len(), blocks_expected);
        assert!(commutant(&rep).dim() >= result.blocks.len());
        assert_eq!(commutant(&rep).dim(), result.blocks.len());
    }
}

/// Every (1+1) representation shipped or constructed in this repo
/// splits into zero blocks and blocks with an invertible intertwiner to
/// the explicit 3x3 representation: the theory admits only the spin-0
/// sector.
#[test]
fn central_theorem_only_spin0_in_1p1() {
    let builtin = builtin_irrep_1p1();
    let d2_reps = [
        builtin_irrep_1p1(),
        build_scalar_rep(2).unwrap(),
        build_vector_rep(2).unwrap(),
        kron2(),
        trivial_rep(2).unwrap(),
    ];
    for rep in &d2_reps {
        let result = decompose(rep).unwrap();
        assert!(result.complete, "dim {}", rep.dim());
        for block in &result.blocks {
            let zero_action = block.subrep.betas().iter().all(Matrix::is_zero);
            if zero_action {
                continue;
            }
            let cert = intertwiner(&block.subrep, &builtin)
                .unwrap()
                .unwrap_or_else(|| {
                    panic!(
                        "nontrivial block of dim {} not equivalent to the 3x3 irrep",
                        block.subrep.dim()
                    )
                });
            let upgraded = unitarize(&cert, &block.subrep, &builtin).unwrap();
            assert!(upgraded.lambda.unwrap().is_positive());
        }
    }
}

/// Dispersion: the symbol kernel is nonzero exactly on shell, over a
/// grid of exact momenta.
#[test]
fn dispersion_grid() {
    let reps: Vec<Representation> = vec![builtin_irrep_1p1(), build_scalar_rep(2).unwrap()];
    let on_shell = [([5i64, 4], 3i64), ([13, 12], 5), ([3, 0], 3), ([1, 0], 1)];
    let off_shell = [([1i64, 1], 1i64), ([2, 1], 1), ([5, 4], 2)];
    for rep in &reps {
        for (comps, m) in on_shell {
            let p = Momentum::from_ints(&comps, m).unwrap();
            assert!(p.on_shell(rep.metric()));
            let sol = solution_space(rep, &p).unwrap();
            assert_eq!(sol.amplitude_basis.len(), 1, "p={comps:?} m={m}");
        }
        for (comps, m) in off_shell {
            let p = Momentum::from_ints(&comps, m).unwrap();
            assert!(!p.on_shell(rep.metric()));
            let sol = solution_space(rep, &p).unwrap();
            assert!(sol.amplitude_basis.is_empty(), "p={comps:?} m={m}");
        }
    }
    // Higher-dimensional scalar reps still have a one-dimensional
    // on-shell solution space.
    for d in [3usize, 4] {
        let rep = build_scalar_rep(d).unwrap();
        let mut comps = vec![5i64, 4];
        comps.resize(d, 0);
        let p = Momentum::from_ints(&comps, 3).unwrap();
        assert_eq!(solution_space(&rep, &p).unwrap().amplitude_basis.len(), 1);
    }
}

/// The reducible 4-dim representation has a two-dimensional on-shell
/// solution space: one amplitude from the zero block is absent, both
/// amplitudes come from the 3x3 block plus none from the trivial one.
#[test]
fn kron2_solution_space_matches_block_structure() {
    let rep = kron2();
    let p = Momentum::from_ints(&[5, 4], 3).unwrap();
    let sol = solution_space(&rep, &p).unwrap();
    // The trivial block contributes nothing ((0 - m) u = 0 forces 0),
    // the 3x3 block contributes its single amplitude.
    assert_eq!(sol.amplitude_basis.len(), 1);
}

#[test]
fn vector4_polarization_count_frozen() {
    let rep = build_vector_rep(4).unwrap();
    let p = Momentum::from_ints(&[5, 4, 0, 0], 3).unwrap();
    assert_eq!(solution_space(&rep, &p).unwrap().amplitude_basis.len(), 3);
    let off = Momentum::from_ints(&[5, 4, 1, 0], 3).unwrap();
    assert!(solution_space(&rep, &off)
        .unwrap()
        .amplitude_basis
        .is_empty());
}

/// DKP verification agrees with an independently computed residual on a
/// deliberately wrong input: the no-half Kronecker sum at (0,0,0).
#[test]
fn nohalf_residual_matches_binomial_expansion() {
    let g = build_gamma(GammaBasis::Dirac2);
    let nohalf = build_kronecker_rep(&g, false).unwrap();
    let report = verify_dkp(&nohalf);
    assert!(!report.passed);
    let first = &report.violations[0];
    assert_eq!(first.indices, vec![0, 0, 0]);

    // (A + C)^3 with A = gamma^0 x I, C = I x gamma^0, A^2 = C^2 = I,
    // AC = CA expands to 4(A + C); the relation instance reads
    // 2(A+C)^3 - 2(A+C) = 6(A+C).
    let id = Matrix::identity(2);
    let a = g.beta(0).kron(&id);
    let c = id.kron(g.beta(0));
    assert_eq!(&a * &c, &c * &a);
    assert_eq!(&a * &a, Matrix::identity(4));
    let b = &a + &c;
    let b3 = &(&b * &b) * &b;
    assert_eq!(b3, b.scale_int(4));
    let expected = b.scale_int(6);
    assert_eq!(first.residual, expected);
}
