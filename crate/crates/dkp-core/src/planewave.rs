//! Plane-wave verification of the field equations.
//!
//! Convention used everywhere (and stamped into every report): plane
//! waves are ψ ∝ e^{-ip·x}, so the substitution is ∂_μ → -i p_μ. The
//! momentum stores the contravariant components p^μ; the covariant
//! p_μ = g_{μμ} p^μ are lowered on demand.

use num_traits::{One, Signed, Zero};

use crate::error::PlaneWaveError;
use crate::gaussian::{GaussianRational, Rational};
use crate::matrix::Matrix;
use crate::projectors::ProjectorSet;
use crate::report::Report;
use crate::reps::{builtin_irrep_1p1, Metric, Representation};

pub const WAVE_CONVENTION: &str = "psi ~ exp(-i p.x), so d_mu -> -i p_mu";

/// On- or off-shell momentum with a positive mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Momentum {
    components: Vec<Rational>,
    mass: Rational,
}

impl Momentum {
    /// `components` are the contravariant p^μ.
    pub fn new(components: Vec<Rational>, mass: Rational) -> Result<Self, PlaneWaveError> {
        if !mass.is_positive() {
            return Err(PlaneWaveError::BadMass(mass.to_string()));
        }
        Ok(Self { components, mass })
    }

    pub fn from_ints(components: &[i64], mass: i64) -> Result<Self, PlaneWaveError> {
        Self::new(
            components
                .iter()
                .map(|&c| crate::gaussian::rat(c))
                .collect(),
            crate::gaussian::rat(mass),
        )
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    /// Contravariant component p^μ.
    pub fn upper(&self, mu: usize) -> &Rational {
        &self.components[mu]
    }

    /// Covariant component p_μ = g_{μμ} p^μ.
    pub fn lower(&self, mu: usize, metric: &Metric) -> Rational {
        if metric.g(mu) == 1 {
            self.components[mu].clone()
        } else {
            -self.components[mu].clone()
        }
    }

    /// p² = g_{μν} p^μ p^ν.
    pub fn squared(&self, metric: &Metric) -> Rational {
        let mut acc = Rational::zero();
        for (mu, c) in self.components.iter().enumerate() {
            let term = c * c;
            if metric.g(mu) == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    pub fn on_shell(&self, metric: &Metric) -> bool {
        self.squared(metric) == &self.mass * &self.mass
    }

    pub fn require_on_shell(&self, metric: &Metric) -> Result<(), PlaneWaveError> {
        if self.on_shell(metric) {
            Ok(())
        } else {
            Err(PlaneWaveError::OffShell {
                p2: self.squared(metric).to_string(),
                m2: (&self.mass * &self.mass).to_string(),
            })
        }
    }

    /// -i p^μ as a Gaussian rational (the plane-wave image of ∂^μ).
    fn deriv_upper(&self, mu: usize) -> GaussianRational {
        GaussianRational::new(Rational::zero(), -self.components[mu].clone())
    }
}

fn real(q: Rational) -> GaussianRational {
    GaussianRational::from_rational(q)
}

/// The symbol β^μ p_μ - m·I of the wave operator on the amplitude.
pub fn dkp_symbol(rep: &Representation, p: &Momentum) -> Result<Matrix, PlaneWaveError> {
    if p.d() != rep.d() {
        return Err(PlaneWaveError::DimensionMismatch {
            expected: rep.d(),
            got: p.d(),
        });
    }
    let n = rep.dim();
    let mut sym = Matrix::identity(n).scalar_mul(&real(-p.mass().clone()));
    for mu in 0..rep.d() {
        let p_mu = p.lower(mu, rep.metric());
        sym = &sym + &rep.beta(mu).scalar_mul(&real(p_mu));
    }
    Ok(sym)
}

/// The exact kernel of the symbol: every column u satisfies
/// (β^μ p_μ - m)u = 0. Off-shell momenta are allowed and are expected
/// to produce an empty basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneWaveSolution {
    pub momentum: Momentum,
    pub amplitude_basis: Vec<Matrix>,
}

pub fn solution_space(
    rep: &Representation,
    p: &Momentum,
) -> Result<PlaneWaveSolution, PlaneWaveError> {
    let sym = dkp_symbol(rep, p)?;
    Ok(PlaneWaveSolution {
        momentum: p.clone(),
        amplitude_basis: sym.null_space(),
    })
}

/// Scalar-sector relations on every on-shell amplitude u:
///
/// - p_μ (P^μ u) = m (P u)
/// - P^μ u = (p^μ / m)(P u)   (the derivative relation, raised form)
/// - (m² - p²)(P u) = 0       (Klein-Gordon, trivial on shell)
pub fn kg_relations_check(
    rep: &Representation,
    ps: &ProjectorSet,
    sol: &PlaneWaveSolution,
) -> Result<Report, PlaneWaveError> {
    let p = &sol.momentum;
    p.require_on_shell(rep.metric())?;
    let m = real(p.mass().clone());
    let mut report = Report::new();
    for (k, u) in sol.amplitude_basis.iter().enumerate() {
        let pu = &ps.p * u;
        if pu.is_zero() {
            report.vacuous(
                &format!("kg-degenerate u{k}"),
                "P u = 0: the scalar-sector relations hold trivially on this amplitude",
            );
        }
        let mut div = pu.scalar_mul(&m);
        for mu in 0..rep.d() {
            let p_mu = real(p.lower(mu, rep.metric()));
            div = &div - &(&ps.p_up[mu] * u).scalar_mul(&p_mu);
        }
        report.residual_check(
            &format!("kg-divergence u{k}"),
            &div,
            &format!("p_mu (P^mu u) = m (P u); {WAVE_CONVENTION}"),
        );
        for mu in 0..rep.d() {
            let ratio = real(p.upper(mu) / p.mass());
            let residual = &(&ps.p_up[mu] * u) - &pu.scalar_mul(&ratio);
            report.residual_check(
                &format!("kg-derivative u{k} mu={mu}"),
                &residual,
                &format!("P^mu u = (p^mu/m) P u; {WAVE_CONVENTION}"),
            );
        }
        let kg_factor = real(&(p.mass() * p.mass()) - &p.squared(rep.metric()));
        report.residual_check(
            &format!("kg-klein-gordon u{k}"),
            &pu.scalar_mul(&kg_factor),
            "(m^2 - p^2)(P u) = 0",
        );
    }
    Ok(report)
}

/// Vector-sector relations on every on-shell amplitude u:
///
/// - p_ν (R^{μν} u) = m (R^μ u)
/// - R^{μν} u = -(1/m) [p^μ (R^ν u) - p^ν (R^μ u)]   (strength tensor,
///   the overall sign follows from the e^{-ip·x} convention)
/// - p_μ (R^μ u) = 0
///
/// For D = 2 the β¹-multiplied system is verified as well, together
/// with the operator identities that make it equivalent to the
/// scalar-sector system.
pub fn proca_relations_check(
    rep: &Representation,
    ps: &ProjectorSet,
    sol: &PlaneWaveSolution,
) -> Result<Report, PlaneWaveError> {
    let p = &sol.momentum;
    p.require_on_shell(rep.metric())?;
    let d = rep.d();
    let m = real(p.mass().clone());
    let mut report = Report::new();
    for (k, u) in sol.amplitude_basis.iter().enumerate() {
        for mu in 0..d {
            let mut div = (&ps.r_up[mu] * u).scalar_mul(&m);
            for nu in 0..d {
                let p_nu = real(p.lower(nu, rep.metric()));
                div = &div - &(&ps.r_up2[mu][nu] * u).scalar_mul(&p_nu);
            }
            report.residual_check(
                &format!("proca-divergence u{k} mu={mu}"),
                &div,
                &format!("p_nu (R^munu u) = m (R^mu u); {WAVE_CONVENTION}"),
            );
        }
        let inv_m = real(Rational::one() / p.mass());
        for mu in 0..d {
            for nu in 0..d {
                let anti = &(&ps.r_up[nu] * u).scalar_mul(&real(p.upper(mu).clone()))
                    - &(&ps.r_up[mu] * u).scalar_mul(&real(p.upper(nu).clone()));
                let residual = &(&ps.r_up2[mu][nu] * u) + &anti.scalar_mul(&inv_m);
                report.residual_check(
                    &format!("proca-strength u{k} mu={mu} nu={nu}"),
                    &residual,
                    &format!("R^munu u = -(1/m)[p^mu (R^nu u) - p^nu (R^mu u)]; {WAVE_CONVENTION}"),
                );
            }
        }
        let mut lorenz = Matrix::zero(rep.dim(), 1);
        for mu in 0..d {
            let p_mu = real(p.lower(mu, rep.metric()));
            lorenz = &lorenz + &(&ps.r_up[mu] * u).scalar_mul(&p_mu);
        }
        report.residual_check(&format!("proca-lorenz u{k}"), &lorenz, "p_mu (R^mu u) = 0");
        if d == 2 {
            report.merge(beta1_system_check(rep, ps, p, u, k));
        }
    }
    Ok(report)
}

/// The (1+1) vector-sector system written with a left β¹ factor, plus
/// the operator identities -(β¹)²P = P and (β¹)²P^μ = -P^μ through
/// which left-multiplying by β¹ turns it into the scalar-sector system
/// and back.
fn beta1_system_check(
    rep: &Representation,
    ps: &ProjectorSet,
    p: &Momentum,
    u: &Matrix,
    k: usize,
) -> Report {
    let metric = rep.metric();
    let b1 = rep.beta(1);
    let m = real(p.mass().clone());
    let mut report = Report::new();

    let b1_pu = b1 * &(&ps.p * u);
    let b1_p0u = b1 * &(&ps.p_up[0] * u);
    let b1_p1u = b1 * &(&ps.p_up[1] * u);

    // β¹ ∂_1(Pψ) = β¹ (im) P¹ψ  →  -p_1 (β¹Pu) = m (β¹P¹u)
    let p1_low = real(p.lower(1, metric));
    let eq1 = &(-&b1_pu.scalar_mul(&p1_low)) - &b1_p1u.scalar_mul(&m);
    report.residual_check(
        &format!("vec1-system u{k} eq1"),
        &eq1,
        &format!("beta^1 d_1(P psi) = beta^1 (i m) P^1 psi; {WAVE_CONVENTION}"),
    );

    // β¹ ∂_0(Pψ) = -β¹ (im) P⁰ψ  →  p_0 (β¹Pu) = m (β¹P⁰u)
    let p0_low = real(p.lower(0, metric));
    let eq2 = &b1_pu.scalar_mul(&p0_low) - &b1_p0u.scalar_mul(&m);
    report.residual_check(
        &format!("vec1-system u{k} eq2"),
        &eq2,
        &format!("beta^1 d_0(P psi) = -beta^1 (i m) P^0 psi; {WAVE_CONVENTION}"),
    );

    // β¹ Pψ = β¹ (i/m)[∂⁰(P⁰ψ) - ∂¹(P¹ψ)]  →
    // β¹Pu = (1/m)[p⁰ (β¹P⁰u) - p¹ (β¹P¹u)]
    let inv_m = real(Rational::one() / p.mass());
    let rhs = &b1_p0u.scalar_mul(&real(p.upper(0).clone()))
        - &b1_p1u.scalar_mul(&real(p.upper(1).clone()));
    let eq3 = &b1_pu - &rhs.scalar_mul(&inv_m);
    report.residual_check(
        &format!("vec1-system u{k} eq3"),
        &eq3,
        &format!("beta^1 (P psi) = beta^1 (i/m)[d^0(P^0 psi) - d^1(P^1 psi)]; {WAVE_CONVENTION}"),
    );

    // Operator identities behind the equivalence with the scalar-sector
    // system: left-multiplying the equations above by β¹ and using them
    // reproduces the kg-divergence/kg-derivative relations, and
    // conversely multiplying those by β¹ gives the equations above.
    let b1sq = b1 * b1;
    report.residual_check(
        &format!("vec1-equivalence u{k} -(beta^1)^2 P = P"),
        &(&(-&(&b1sq * &ps.p)) - &ps.p),
        "operator identity used when multiplying the system by beta^1 on the left",
    );
    for mu in 0..2 {
        report.residual_check(
            &format!("vec1-equivalence u{k} (beta^1)^2 P^{mu} = -P^{mu}"),
            &(&(&b1sq * &ps.p_up[mu]) + &ps.p_up[mu]),
            "operator identity used when multiplying the system by beta^1 on the left",
        );
    }
    report
}

/// The (1+1) spin-0 / "spin-1" field map, verified on the unique
/// on-shell amplitude line of the builtin representation. The single
/// column is read once as the Klein-Gordon spinor (mφ, ∂¹φ, ∂⁰φ)/m and
/// once as the Proca spinor (F^{01}/m, -A⁰, -A¹); both readings name
/// the same numbers, and the map between the field contents is exact.
pub fn field_map_check(p: &Momentum) -> Result<Report, PlaneWaveError> {
    let rep = builtin_irrep_1p1();
    p.require_on_shell(rep.metric())?;
    let sol = solution_space(&rep, p)?;
    let u = sol
        .amplitude_basis
        .first()
        .ok_or(PlaneWaveError::EmptySolutionSpace)?;

    let mut report = Report::new();
    report.condition_check(
        "field-map solution line",
        sol.amplitude_basis.len() == 1,
        "the on-shell solution space of the 3x3 representation is one-dimensional",
    );

    // Scalar reading.
    let phi = u.at(0, 0).clone();
    // Vector reading.
    let f01 = &real(p.mass().clone()) * &phi;
    let a0 = -u.at(1, 0);
    let a1 = -u.at(2, 0);

    let m_inv = real(Rational::one() / p.mass());
    let single = |name: &str, value: GaussianRational, details: &str| {
        (
            name.to_string(),
            Matrix::column(vec![value]),
            details.to_string(),
        )
    };

    let checks = [
        single(
            "field-map F01/m = phi",
            &(&f01 * &m_inv) - &phi,
            "the Proca strength component carries the scalar field",
        ),
        single(
            "field-map -A0 = (1/m) d^1 phi",
            &(-&a0) - &(&(&p.deriv_upper(1) * &phi) * &m_inv),
            WAVE_CONVENTION,
        ),
        single(
            "field-map -A1 = (1/m) d^0 phi",
            &(-&a1) - &(&(&p.deriv_upper(0) * &phi) * &m_inv),
            WAVE_CONVENTION,
        ),
        single(
            "field-map lorenz p_mu A^mu = 0",
            &(&real(p.lower(0, rep.metric())) * &a0) + &(&real(p.lower(1, rep.metric())) * &a1),
            "d_mu A^mu = 0 under the plane-wave substitution",
        ),
        single(
            "field-map F01 = d^0 A^1 - d^1 A^0",
            &f01 - &(&(&p.deriv_upper(0) * &a1) - &(&p.deriv_upper(1) * &a0)),
            "strength-tensor definition under the plane-wave substitution",
        ),
    ];
    for (name, residual, details) in checks {
        report.residual_check(&name, &residual, &details);
    }

    // Round trip: rebuild the amplitude from the scalar field alone.
    let rebuilt = Matrix::column(vec![
        phi.clone(),
        &(&p.deriv_upper(1) * &phi) * &m_inv,
        &(&p.deriv_upper(0) * &phi) * &m_inv,
    ]);
    report.residual_check(
        "field-map roundtrip",
        &(&rebuilt - u),
        "mapping the amplitude to field content and back reproduces it exactly",
    );
    Ok(report)
}
