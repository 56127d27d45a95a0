//! Clifford and DKP representation builders plus exact algebra checks.
//!
//! The defining relations:
//!
//! - Clifford:  γ^μ γ^ν + γ^ν γ^μ = 2 g^{μν} I
//! - DKP:       β^μ β^ν β^ρ + β^ρ β^ν β^μ = g^{μν} β^ρ + g^{ρν} β^μ
//!
//! over the diagonal Minkowski metric with signature (+,-,...,-).

use crate::error::RepError;
use crate::gaussian::GaussianRational;
use crate::matrix::Matrix;

/// Diagonal Minkowski metric, signature (+,-,...,-).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    signature: Vec<i8>,
}

impl Metric {
    /// The (+,-,...,-) metric in `d` spacetime dimensions.
    pub fn minkowski(d: usize) -> Result<Self, RepError> {
        if d < 2 {
            return Err(RepError::DimensionTooSmall(d));
        }
        let mut signature = vec![-1i8; d];
        signature[0] = 1;
        Ok(Self { signature })
    }

    pub fn from_signature(signature: Vec<i8>) -> Result<Self, RepError> {
        if signature.len() < 2 || signature[0] != 1 || signature.iter().any(|&s| s != 1 && s != -1)
        {
            return Err(RepError::BadSignature(signature));
        }
        Ok(Self { signature })
    }

    /// Spacetime dimension D.
    pub fn d(&self) -> usize {
        self.signature.len()
    }

    /// g^{μμ} = g_{μμ} (diagonal, entries ±1).
    pub fn g(&self, mu: usize) -> i8 {
        self.signature[mu]
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }
}

/// A candidate representation: the metric plus one square matrix per
/// spacetime index. Whether it satisfies the Clifford or DKP relations
/// is decided by [`verify_clifford`] / [`verify_dkp`], never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    metric: Metric,
    dim: usize,
    betas: Vec<Matrix>,
}

impl Representation {
    pub fn new(metric: Metric, betas: Vec<Matrix>) -> Result<Self, RepError> {
        let d = metric.d();
        let dim = betas.first().map_or(0, Matrix::rows);
        for (index, b) in betas.iter().enumerate() {
            if !b.is_square() || b.rows() != dim {
                return Err(RepError::BadGenerator {
                    expected: d,
                    dim,
                    index,
                    rows: b.rows(),
                    cols: b.cols(),
                });
            }
        }
        if betas.len() != d || dim == 0 {
            return Err(RepError::BadGenerator {
                expected: d,
                dim,
                index: betas.len(),
                rows: 0,
                cols: 0,
            });
        }
        Ok(Self { metric, dim, betas })
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn d(&self) -> usize {
        self.metric.d()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// β^μ (upper index).
    pub fn beta(&self, mu: usize) -> &Matrix {
        &self.betas[mu]
    }

    pub fn betas(&self) -> &[Matrix] {
        &self.betas
    }

    /// β_μ = g_{μμ} β^μ (lowered index).
    pub fn beta_lower(&self, mu: usize) -> Matrix {
        let b = &self.betas[mu];
        if self.metric.g(mu) == 1 {
            b.clone()
        } else {
            -b
        }
    }
}

/// One violated relation instance: the indices and the exact residual
/// LHS - RHS. Clifford violations carry two indices, DKP ones three.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraViolation {
    pub indices: Vec<usize>,
    pub residual: Matrix,
}

/// Outcome of checking a defining relation over all index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub passed: bool,
    pub violations: Vec<AlgebraViolation>,
}

impl AlgebraReport {
    fn from_violations(violations: Vec<AlgebraViolation>) -> Self {
        Self {
            passed: violations.is_empty(),
            violations,
        }
    }
}

/// Checks γ^μ γ^ν + γ^ν γ^μ - 2 g^{μν} I = 0 for all μ ≤ ν.
pub fn verify_clifford(rep: &Representation) -> AlgebraReport {
    let d = rep.d();
    let id = Matrix::identity(rep.dim());
    let mut violations = Vec::new();
    for mu in 0..d {
        for nu in mu..d {
            let anti = rep.beta(mu).anticommutator(rep.beta(nu)).expect("square");
            let rhs = if mu == nu {
                id.scale_int(2 * rep.metric().g(mu) as i64)
            } else {
                Matrix::zero(rep.dim(), rep.dim())
            };
            let residual = &anti - &rhs;
            if !residual.is_zero() {
                violations.push(AlgebraViolation {
                    indices: vec![mu, nu],
                    residual,
                });
            }
        }
    }
    AlgebraReport::from_violations(violations)
}

/// Checks β^μ β^ν β^ρ + β^ρ β^ν β^μ - g^{μν} β^ρ - g^{ρν} β^μ = 0 for
/// every one of the D^3 index triples. No symmetry reduction: the full
/// scan is cheap at these sizes and easier to audit.
pub fn verify_dkp(rep: &Representation) -> AlgebraReport {
    let d = rep.d();
    let g = |mu: usize, nu: usize| -> i64 {
        if mu == nu {
            rep.metric().g(mu) as i64
        } else {
            0
        }
    };
    let mut violations = Vec::new();
    for mu in 0..d {
        for nu in 0..d {
            let bm_bn = rep.beta(mu) * rep.beta(nu);
            let bn_bm = rep.beta(nu) * rep.beta(mu);
            for rho in 0..d {
                let lhs = &(&bm_bn * rep.beta(rho)) + &(rep.beta(rho) * &bn_bm);
                let rhs = &rep.beta(rho).scale_int(g(mu, nu)) + &rep.beta(mu).scale_int(g(rho, nu));
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    violations.push(AlgebraViolation {
                        indices: vec![mu, nu, rho],
                        residual,
                    });
                }
            }
        }
    }
    AlgebraReport::from_violations(violations)
}

/// Named gamma-matrix bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaBasis {
    /// 2x2 gammas in (1+1) dimensions: γ^0 = σ_x, γ^1 = [[0,1],[-1,0]].
    Dirac2,
    /// Standard 4x4 Dirac basis in (3+1): γ^0 = diag(I,-I),
    /// γ^k = [[0, σ_k], [-σ_k, 0]].
    Dirac4,
}

pub fn build_gamma(basis: GammaBasis) -> Representation {
    match basis {
        GammaBasis::Dirac2 => {
            let g0 = Matrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap();
            let g1 = Matrix::parse(&[&["0", "1"], &["-1", "0"]]).unwrap();
            Representation::new(Metric::minkowski(2).unwrap(), vec![g0, g1]).unwrap()
        }
        GammaBasis::Dirac4 => {
            let id = Matrix::identity(2);
            let zero = Matrix::zero(2, 2);
            let paulis = [
                Matrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap(),
                Matrix::parse(&[&["0", "-i"], &["i", "0"]]).unwrap(),
                Matrix::parse(&[&["1", "0"], &["0", "-1"]]).unwrap(),
            ];
            let block = |tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix| {
                tl.hstack(tr).vstack(&bl.hstack(br))
            };
            let mut gammas = vec![block(&id, &zero, &zero, &(-&id))];
            for s in &paulis {
                gammas.push(block(&zero, s, &(-s), &zero));
            }
            Representation::new(Metric::minkowski(4).unwrap(), gammas).unwrap()
        }
    }
}

/// β^μ = c (γ^μ ⊗ I + I ⊗ γ^μ) on the tensor-square space, with
/// c = 1/2 when `include_half` and c = 1 otherwise. The half is what
/// makes the result a DKP representation; omitting it is a known
/// mistake this toolkit can demonstrate.
pub fn build_kronecker_rep(
    gammas: &Representation,
    include_half: bool,
) -> Result<Representation, RepError> {
    let clifford = verify_clifford(gammas);
    if !clifford.passed {
        let v = &clifford.violations[0];
        return Err(RepError::NotClifford {
            mu: v.indices[0],
            nu: v.indices[1],
        });
    }
    let id = Matrix::identity(gammas.dim());
    let half = GaussianRational::from_rational(crate::gaussian::rat_frac(1, 2));
    let betas = gammas
        .betas()
        .iter()
        .map(|g| {
            let sum = &g.kron(&id) + &id.kron(g);
            if include_half {
                sum.scalar_mul(&half)
            } else {
                sum
            }
        })
        .collect();
    Representation::new(gammas.metric().clone(), betas)
}

/// The explicit 3x3 irreducible DKP representation in (1+1):
/// β^0 = [[0,0,i],[0,0,0],[-i,0,0]], β^1 = [[0,i,0],[i,0,0],[0,0,0]].
pub fn builtin_irrep_1p1() -> Representation {
    let b0 = Matrix::parse(&[&["0", "0", "i"], &["0", "0", "0"], &["-i", "0", "0"]]).unwrap();
    let b1 = Matrix::parse(&[&["0", "i", "0"], &["i", "0", "0"], &["0", "0", "0"]]).unwrap();
    Representation::new(Metric::minkowski(2).unwrap(), vec![b0, b1]).unwrap()
}

/// The one-dimensional representation with every β^μ = 0.
pub fn trivial_rep(d: usize) -> Result<Representation, RepError> {
    let metric = Metric::minkowski(d)?;
    let betas = vec![Matrix::zero(1, 1); d];
    Representation::new(metric, betas)
}

/// First-order form of the Klein-Gordon equation (□ + m²)φ = 0 in D
/// spacetime dimensions, with component ordering
/// ψ = (mφ, ∂^1φ, ..., ∂^{D-1}φ, ∂^0φ)/m, which reproduces the builtin
/// (1+1) matrices exactly at D = 2. Dimension D + 1.
pub fn build_scalar_rep(d: usize) -> Result<Representation, RepError> {
    let metric = Metric::minkowski(d)?;
    let n = d + 1;
    let i = GaussianRational::i();
    let neg_i = -&i;
    // Component slots: 0 -> φ, k -> ∂^k φ / m (k = 1..D-1), D -> ∂^0 φ / m.
    let mut betas = Vec::with_capacity(d);
    let mut b0 = Matrix::zero(n, n);
    b0.set(0, d, i.clone());
    b0.set(d, 0, neg_i.clone());
    betas.push(b0);
    for k in 1..d {
        let mut bk = Matrix::zero(n, n);
        bk.set(0, k, i.clone());
        bk.set(k, 0, i.clone());
        betas.push(bk);
    }
    Representation::new(metric, betas)
}

/// First-order form of the Proca system (□ + m²)A^μ = 0, ∂_μ A^μ = 0,
/// with component ordering: F^{μν}/m blocks first in lexicographic
/// (μ<ν) order, then -A^0 ... -A^{D-1}. Dimension D(D+1)/2. At D = 2
/// the matrices coincide with the builtin (1+1) representation.
pub fn build_vector_rep(d: usize) -> Result<Representation, RepError> {
    let metric = Metric::minkowski(d)?;
    let npairs = d * (d - 1) / 2;
    let n = npairs + d;
    let i = GaussianRational::i();
    let neg_i = -&i;

    // Lexicographic pair index over (μ<ν).
    let pair_index = |mu: usize, nu: usize| -> usize {
        debug_assert!(mu < nu && nu < d);
        (0..mu).map(|a| d - 1 - a).sum::<usize>() + (nu - mu - 1)
    };

    let mut betas = vec![Matrix::zero(n, n); d];
    for mu in 0..d {
        for nu in (mu + 1)..d {
            let q = pair_index(mu, nu);
            // F^{μν} row: F^{μν} = ∂^μ A^ν - ∂^ν A^μ.
            let g_mu = metric.g(mu);
            let g_nu = metric.g(nu);
            betas[mu].set(
                q,
                npairs + nu,
                if g_mu == 1 { i.clone() } else { neg_i.clone() },
            );
            betas[nu].set(
                q,
                npairs + mu,
                if g_nu == 1 { neg_i.clone() } else { i.clone() },
            );
            // A rows: ∂_μ F^{μν} = -m² A^ν.
            betas[mu].set(npairs + nu, q, neg_i.clone());
            betas[nu].set(npairs + mu, q, i.clone());
        }
    }
    Representation::new(metric, betas)
}
