//! Reducibility analysis: commutants, invariant-subspace decomposition,
//! and equivalence certificates.
//!
//! Everything is decided over the Gaussian rationals. Irreducibility is
//! certified by a one-dimensional commutant (Schur), which for the
//! representations in scope coincides with irreducibility over the
//! complex numbers. Decomposition proceeds in three exact steps:
//!
//! 1. strip the maximal zero-action summand (the common kernel of the
//!    generators, complementary to the column-space closure);
//! 2. close the generator images into the invariant complement;
//! 3. split further along eigenspaces of commutant elements whose
//!    minimal polynomial has distinct rational roots.
//!
//! Whenever a block cannot be split (no rational-spectrum commutant
//! element is found, or a root search overflows its bounds), the result
//! is returned as an explicit partial decomposition, never silently.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AnalysisError;
use crate::gaussian::{GaussianRational, Rational};
use crate::matrix::{solve_sylvester_family, Matrix};
use crate::reps::{verify_dkp, Representation};

/// Basis of {X : X β^μ = β^μ X for all μ}, in the canonical RREF form
/// produced by the vectorized kernel computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantBasis {
    pub rep_dim: usize,
    pub basis: Vec<Matrix>,
}

impl CommutantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn commutant(rep: &Representation) -> CommutantBasis {
    let pairs: Vec<(Matrix, Matrix)> = rep.betas().iter().map(|b| (b.clone(), b.clone())).collect();
    let basis = solve_sylvester_family(&pairs).expect("square generators of equal dimension");
    CommutantBasis {
        rep_dim: rep.dim(),
        basis,
    }
}

/// Schur certificate: irreducible iff the commutant is the scalars.
pub fn is_irreducible(rep: &Representation) -> (bool, CommutantBasis) {
    let c = commutant(rep);
    (c.dim() == 1, c)
}

/// One invariant block: the subspace basis (columns in the original
/// coordinates) and the induced subrepresentation in that basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub basis: Vec<Matrix>,
    pub subrep: Representation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    /// Blocks sorted by dimension (ascending, then by basis content).
    pub blocks: Vec<Block>,
    /// Columns are the concatenated block bases; conjugating the
    /// original generators by this matrix block-diagonalizes them.
    pub change_of_basis: Matrix,
    /// False when some block could not be split to an irreducible one.
    pub complete: bool,
    pub notes: Vec<String>,
}

/// Induced action on an invariant subspace spanned by the given
/// independent columns. Rejects non-invariant input naming the first
/// violating (generator, column) pair.
pub fn restrict(rep: &Representation, basis: &[Matrix]) -> Result<Representation, AnalysisError> {
    assert!(!basis.is_empty(), "empty restriction basis");
    let b = Matrix::from_columns(basis);
    if b.rank() != basis.len() {
        return Err(AnalysisError::DependentBasis);
    }
    let mut induced = Vec::with_capacity(rep.d());
    for mu in 0..rep.d() {
        let image = rep.beta(mu) * &b;
        match b.solve(&image) {
            Some(m) => induced.push(m),
            None => {
                let col = (0..basis.len())
                    .find(|&j| b.solve(&image.column_at(j)).is_none())
                    .unwrap_or(0);
                return Err(AnalysisError::NotInvariant { mu, col });
            }
        }
    }
    Ok(Representation::new(rep.metric().clone(), induced).expect("square induced action"))
}

/// Canonical basis of the span of the given column vectors (RREF rows
/// turned back into columns). Deterministic.
fn span_basis(vectors: &[Matrix]) -> Vec<Matrix> {
    let nonzero: Vec<&Matrix> = vectors.iter().filter(|v| !v.is_zero()).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<GaussianRational>> = nonzero
        .iter()
        .map(|v| (0..v.rows()).map(|r| v.at(r, 0).clone()).collect())
        .collect();
    let (r, _, rank) = Matrix::from_rows(rows).rref();
    (0..rank)
        .map(|row| Matrix::from_fn(r.cols(), 1, |c, _| r.at(row, c).clone()))
        .collect()
}

/// Exact Gram-Schmidt; then each vector is rescaled to unit norm when
/// its squared norm is a norm in Q(i) (a sum of two rational squares).
/// Unit-norm bases keep the induced blocks compatible with the
/// conjugate-transpose structure of the ambient representation, which
/// is what makes intertwiner Gram matrices come out scalar.
fn orthonormalize(basis: &[Matrix]) -> Vec<Matrix> {
    let mut ortho: Vec<Matrix> = Vec::with_capacity(basis.len());
    for v in basis {
        let mut w = v.clone();
        for u in &ortho {
            let coeff = &u.inner(&w) / &GaussianRational::from_rational(u.inner(u).re.clone());
            w = &w - &u.scalar_mul(&coeff);
        }
        debug_assert!(!w.is_zero(), "independent input collapsed in Gram-Schmidt");
        if let Some(z) = unit_rescale_factor(&w.inner(&w).re) {
            w = w.scalar_mul(&z);
        }
        ortho.push(w);
    }
    ortho
}

/// Gaussian rational z with |z|² = 1/q, when one exists.
fn unit_rescale_factor(q: &Rational) -> Option<GaussianRational> {
    debug_assert!(q.is_positive());
    let a = q.numer().clone();
    let b = q.denom().clone();
    let (x, y) = two_squares(&(&a * &b))?;
    // N((x + iy)/a) = a·b / a² = b/a = 1/q.
    Some(GaussianRational::new(
        Rational::new(x, a.clone()),
        Rational::new(y, a),
    ))
}

/// Writes n = x² + y² for a positive integer n, by trial-division
/// factorization and composition of Gaussian-integer norms. Gives up
/// (None) when a prime ≡ 3 (mod 4) appears to an odd power or the
/// cofactor exceeds the factorization bound.
fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    const TRIAL_LIMIT: u64 = 100_000;
    if !n.is_positive() {
        return None;
    }
    let mut remaining = n.clone();
    // Gaussian integer accumulator (x, y) representing x + iy, norm 1.
    let mut acc = (BigInt::one(), BigInt::zero());
    let mul = |(a, b): &(BigInt, BigInt), (c, d): &(BigInt, BigInt)| (a * c - b * d, a * d + b * c);
    let mut p = BigInt::from(2);
    while (&p * &p) <= remaining {
        if p > BigInt::from(TRIAL_LIMIT) {
            return None;
        }
        if remaining.is_multiple_of(&p) {
            let mut e = 0u32;
            while remaining.is_multiple_of(&p) {
                remaining /= &p;
                e += 1;
            }
            acc = apply_prime_power(acc, &p, e, &mul)?;
        }
        p += 1;
    }
    if remaining > BigInt::one() {
        acc = apply_prime_power(acc, &remaining, 1, &mul)?;
    }
    Some((acc.0.abs(), acc.1.abs()))
}

fn apply_prime_power(
    acc: (BigInt, BigInt),
    p: &BigInt,
    e: u32,
    mul: &impl Fn(&(BigInt, BigInt), &(BigInt, BigInt)) -> (BigInt, BigInt),
) -> Option<(BigInt, BigInt)> {
    let four = BigInt::from(4);
    let residue = p.mod_floor(&four);
    if residue == BigInt::from(3) {
        if !e.is_multiple_of(2) {
            return None;
        }
        return Some((acc.0 * p.pow(e / 2), acc.1 * p.pow(e / 2)));
    }
    // p = 2 -> 1 + i; p ≡ 1 (mod 4) -> search x² + y² = p.
    let rep = if *p == BigInt::from(2) {
        (BigInt::one(), BigInt::one())
    } else {
        let mut found = None;
        let mut x = BigInt::one();
        while &(&x * &x) <= p {
            let rest = p - &x * &x;
            let y = rest.sqrt();
            if (&y * &y) == rest {
                found = Some((x.clone(), y));
                break;
            }
            x += 1;
        }
        found?
    };
    let mut out = acc;
    for _ in 0..e {
        out = mul(&out, &rep);
    }
    Some(out)
}

/// Monic minimal polynomial of a square matrix, coefficients in
/// ascending degree order.
fn minimal_polynomial(x: &Matrix) -> Vec<GaussianRational> {
    let n = x.rows();
    let mut power = Matrix::identity(n);
    let mut stacked = power.vec_rows();
    loop {
        power = &power * x;
        let target = power.vec_rows();
        if let Some(c) = stacked.solve(&target) {
            let deg = stacked.cols();
            let mut coeffs: Vec<GaussianRational> = (0..deg).map(|k| -c.at(k, 0)).collect();
            coeffs.push(GaussianRational::one());
            return coeffs;
        }
        stacked = stacked.hstack(&target);
    }
}

fn eval_poly(coeffs: &[GaussianRational], at: &Rational) -> GaussianRational {
    let x = GaussianRational::from_rational(at.clone());
    let mut acc = GaussianRational::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &x) + c;
    }
    acc
}

/// All rational roots when the polynomial splits into distinct linear
/// rational factors; None otherwise (or when divisor enumeration would
/// exceed its bound).
fn distinct_rational_roots(coeffs: &[GaussianRational]) -> Option<Vec<Rational>> {
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return None;
    }
    // Trailing zero coefficients: t^s divides the polynomial. s >= 2
    // means a repeated root at 0.
    let s = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("minimal polynomial is nonzero");
    if s > 1 {
        return None;
    }
    let reduced = &coeffs[s..];
    let mut roots: Vec<Rational> = if s == 1 {
        vec![Rational::zero()]
    } else {
        vec![]
    };

    if reduced.len() > 1 {
        // Candidate roots must annihilate both the real and the
        // imaginary part; use a nonzero one for the search.
        let real_part: Vec<Rational> = reduced.iter().map(|c| c.re.clone()).collect();
        let imag_part: Vec<Rational> = reduced.iter().map(|c| c.im.clone()).collect();
        let probe = if real_part.iter().any(|c| !c.is_zero()) {
            real_part
        } else {
            imag_part
        };
        // Clear denominators to integers.
        let mut lcm = BigInt::one();
        for c in &probe {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = probe
            .iter()
            .map(|c| (c * &Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().cloned().unwrap_or_else(BigInt::zero);
        let lowest = ints.iter().find(|c| !c.is_zero())?.clone();
        let numerators = divisors(&lowest.abs())?;
        let denominators = divisors(&lead.abs())?;
        for num in &numerators {
            for den in &denominators {
                for sign in [1i64, -1] {
                    let candidate = Rational::new(num * BigInt::from(sign), den.clone());
                    if roots.contains(&candidate) {
                        continue;
                    }
                    if eval_poly(coeffs, &candidate).is_zero() {
                        roots.push(candidate);
                    }
                }
            }
        }
    }
    // Distinct linear factorization iff one root per degree.
    if roots.len() == deg {
        roots.sort();
        Some(roots)
    } else {
        None
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const DIVISOR_BOUND: u64 = 1_000_000;
    if n.is_zero() {
        return Some(vec![]);
    }
    if n > &BigInt::from(DIVISOR_BOUND * DIVISOR_BOUND) {
        return None;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &(&d * &d) <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Splits one invariant subspace into irreducible pieces by commutant
/// eigenprojections. Candidates are the commutant basis elements, their
/// conjugate-transpose symmetrizations (when those still commute), and
/// small integer combinations with coefficients in [-3, 3]. Returns the
/// sub-bases in original coordinates and whether every piece ended up
/// irreducible.
fn split_invariant(
    rep: &Representation,
    basis: Vec<Matrix>,
    notes: &mut Vec<String>,
) -> (Vec<Vec<Matrix>>, bool) {
    let sub = match restrict(rep, &basis) {
        Ok(s) => s,
        Err(e) => {
            notes.push(format!("restriction failed unexpectedly: {e}"));
            return (vec![basis], false);
        }
    };
    let com: Vec<Matrix> = {
        let pairs: Vec<(Matrix, Matrix)> =
            sub.betas().iter().map(|b| (b.clone(), b.clone())).collect();
        solve_sylvester_family(&pairs).expect("commutant system")
    };
    if com.len() == 1 {
        return (vec![basis], true);
    }
    let b = Matrix::from_columns(&basis);
    for x in splitter_candidates(&sub, &com) {
        if x.scalar_part().is_some() {
            continue;
        }
        let Some(roots) = distinct_rational_roots(&minimal_polynomial(&x)) else {
            continue;
        };
        let mut pieces: Vec<Vec<Matrix>> = Vec::new();
        let mut total = 0usize;
        for root in &roots {
            let shifted = &x
                - &Matrix::identity(x.rows())
                    .scalar_mul(&GaussianRational::from_rational(root.clone()));
            let kernel = shifted.null_space();
            total += kernel.len();
            if !kernel.is_empty() {
                // Back to original coordinates.
                pieces.push(kernel.iter().map(|v| &b * v).collect());
            }
        }
        if total != basis.len() || pieces.len() < 2 {
            continue;
        }
        let mut result = Vec::new();
        let mut all_irreducible = true;
        for piece in pieces {
            let (blocks, ok) = split_invariant(rep, piece, notes);
            all_irreducible &= ok;
            result.extend(blocks);
        }
        return (result, all_irreducible);
    }
    notes.push(format!(
        "no rational-spectrum commutant element found for a {}-dimensional block (commutant dimension {})",
        basis.len(),
        com.len()
    ));
    (vec![basis], false)
}

/// Candidate splitting elements in deterministic order.
fn splitter_candidates(sub: &Representation, com: &[Matrix]) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = com.to_vec();
    let commutes = |x: &Matrix| {
        sub.betas()
            .iter()
            .all(|bl| (&(x * bl) - &(bl * x)).is_zero())
    };
    for x in com {
        let her = &x.conj_transpose() + x;
        if !her.is_zero() && commutes(&her) {
            out.push(her);
        }
        let skew = (&x.conj_transpose() - x).scalar_mul(&GaussianRational::i());
        if !skew.is_zero() && commutes(&skew) {
            out.push(skew);
        }
    }
    let k = com.len();
    if (2..=4).contains(&k) {
        let mut coeffs = vec![-3i64; k];
        loop {
            if coeffs.iter().filter(|&&c| c != 0).count() >= 2 {
                let mut x = Matrix::zero(com[0].rows(), com[0].cols());
                for (c, base) in coeffs.iter().zip(com) {
                    if *c != 0 {
                        x = &x + &base.scale_int(*c);
                    }
                }
                out.push(x);
            }
            let mut idx = 0;
            loop {
                if idx == k {
                    return out;
                }
                coeffs[idx] += 1;
                if coeffs[idx] <= 3 {
                    break;
                }
                coeffs[idx] = -3;
                idx += 1;
            }
        }
    }
    out
}

/// Full decomposition into invariant blocks, with the zero-action
/// summand extracted first and the remainder split along commutant
/// eigenspaces.
pub fn decompose(rep: &Representation) -> Result<DecompositionResult, AnalysisError> {
    let algebra = verify_dkp(rep);
    if !algebra.passed {
        let idx = &algebra.violations[0].indices;
        return Err(AnalysisError::NotDkp((idx[0], idx[1], idx[2])));
    }
    let n = rep.dim();
    let mut notes = Vec::new();

    // Common kernel of all generators.
    let mut stacked = rep.beta(0).clone();
    for mu in 1..rep.d() {
        stacked = stacked.vstack(rep.beta(mu));
    }
    let common_kernel = stacked.null_space();

    // Column-space closure under the generator action.
    let mut reach: Vec<Matrix> = Vec::new();
    for mu in 0..rep.d() {
        for c in 0..n {
            reach.push(rep.beta(mu).column_at(c));
        }
    }
    let mut reach = span_basis(&reach);
    loop {
        let mut extended = reach.clone();
        for b in rep.betas() {
            for v in &reach {
                extended.push(b * v);
            }
        }
        let closed = span_basis(&extended);
        if closed.len() == reach.len() {
            break;
        }
        reach = closed;
    }

    // Zero-action part: kernel vectors independent of the closure.
    let mut trivial_part: Vec<Matrix> = Vec::new();
    {
        let mut current = reach.clone();
        let mut current_rank = if current.is_empty() {
            0
        } else {
            Matrix::from_columns(&current).rank()
        };
        for v in &common_kernel {
            let mut candidate = current.clone();
            candidate.push(v.clone());
            let rank = Matrix::from_columns(&candidate).rank();
            if rank > current_rank {
                trivial_part.push(v.clone());
                current = candidate;
                current_rank = rank;
            }
        }
    }

    if trivial_part.len() + reach.len() < n {
        notes.push(format!(
            "zero-action part ({}) plus generator-image closure ({}) span only {} of {} dimensions",
            trivial_part.len(),
            reach.len(),
            trivial_part.len() + reach.len(),
            n
        ));
    }

    let mut complete = trivial_part.len() + reach.len() == n;
    let mut block_bases: Vec<Vec<Matrix>> = trivial_part.into_iter().map(|v| vec![v]).collect();
    if !reach.is_empty() {
        let (blocks, ok) = split_invariant(rep, reach, &mut notes);
        complete &= ok;
        block_bases.extend(blocks);
    }

    // Orthonormalize (exactly where possible) and build the blocks.
    let mut blocks = Vec::with_capacity(block_bases.len());
    for basis in block_bases {
        let basis = orthonormalize(&basis);
        let subrep = restrict(rep, &basis)?;
        blocks.push(Block { basis, subrep });
    }
    blocks.sort_by(|a, b| {
        a.basis
            .len()
            .cmp(&b.basis.len())
            .then_with(|| format!("{:?}", a.basis).cmp(&format!("{:?}", b.basis)))
    });

    let columns: Vec<Matrix> = blocks.iter().flat_map(|b| b.basis.clone()).collect();
    let change_of_basis = Matrix::from_columns(&columns);
    if change_of_basis.inverse().is_none() {
        return Err(AnalysisError::DependentBasis);
    }

    Ok(DecompositionResult {
        blocks,
        change_of_basis,
        complete,
        notes,
    })
}

/// Equivalence witness between two representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwinerCertificate {
    /// Invertible S with S β_A^μ = β_B^μ S for all μ.
    pub s: Matrix,
    /// S†S = λ I when the Gram matrix is scalar (set by [`unitarize`]).
    pub lambda: Option<Rational>,
    /// Exact unitary intertwiner when √λ is rational.
    pub unitary_witness: Option<Matrix>,
}

/// Searches the solution space of S β_A^μ = β_B^μ S for an invertible
/// element: first the canonical basis elements, then small integer
/// combinations with coefficients in [-3, 3]. Returns None when the
/// space contains no invertible element (in particular whenever the
/// dimensions differ).
pub fn intertwiner(
    rep_a: &Representation,
    rep_b: &Representation,
) -> Result<Option<IntertwinerCertificate>, AnalysisError> {
    if rep_a.metric() != rep_b.metric() {
        return Err(AnalysisError::MetricMismatch {
            da: rep_a.d(),
            db: rep_b.d(),
        });
    }
    if rep_a.dim() != rep_b.dim() {
        return Ok(None);
    }
    let pairs: Vec<(Matrix, Matrix)> = rep_a
        .betas()
        .iter()
        .zip(rep_b.betas())
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    let space = solve_sylvester_family(&pairs).expect("equal dimensions checked above");
    if space.is_empty() {
        return Ok(None);
    }
    for s in &space {
        if s.inverse().is_some() {
            return Ok(Some(IntertwinerCertificate {
                s: s.clone(),
                lambda: None,
                unitary_witness: None,
            }));
        }
    }
    let k = space.len();
    if (2..=4).contains(&k) {
        let mut coeffs = vec![-3i64; k];
        loop {
            if coeffs.iter().filter(|&&c| c != 0).count() >= 2 {
                let mut x = Matrix::zero(rep_b.dim(), rep_a.dim());
                for (c, base) in coeffs.iter().zip(&space) {
                    if *c != 0 {
                        x = &x + &base.scale_int(*c);
                    }
                }
                if x.inverse().is_some() {
                    return Ok(Some(IntertwinerCertificate {
                        s: x,
                        lambda: None,
                        unitary_witness: None,
                    }));
                }
            }
            let mut idx = 0;
            loop {
                if idx == k {
                    return Ok(None);
                }
                coeffs[idx] += 1;
                if coeffs[idx] <= 3 {
                    break;
                }
                coeffs[idx] = -3;
                idx += 1;
            }
        }
    }
    Ok(None)
}

/// √q when it is rational.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rational::new(ns, ds))
    } else {
        None
    }
}

/// Upgrades an intertwiner to a unitarity certificate. S†S must be a
/// positive rational scalar λI (guaranteed by Schur for irreducible
/// inputs whose generators carry the β^0-Hermitian / β^k-anti-Hermitian
/// pattern); when √λ is rational the exact unitary witness S/√λ is
/// attached, otherwise λ itself certifies unitarizability and no
/// irrational entries are fabricated.
pub fn unitarize(
    cert: &IntertwinerCertificate,
    rep_a: &Representation,
    rep_b: &Representation,
) -> Result<IntertwinerCertificate, AnalysisError> {
    let s = &cert.s;
    if s.inverse().is_none() {
        return Err(AnalysisError::NotInvertible);
    }
    for (a, b) in rep_a.betas().iter().zip(rep_b.betas()) {
        if &(s * a) - &(b * s) != Matrix::zero(s.rows(), s.cols()) {
            return Err(AnalysisError::NotInvertible);
        }
    }
    let gram = &s.conj_transpose() * s;
    let Some(scalar) = gram.scalar_part() else {
        return Err(AnalysisError::GramNotScalar);
    };
    if !scalar.is_real() || !scalar.re.is_positive() {
        return Err(AnalysisError::GramNotPositive(scalar.to_string()));
    }
    let lambda = scalar.re;
    let unitary_witness = rational_sqrt(&lambda).map(|root| {
        let inv = GaussianRational::from_rational(Rational::one() / root);
        s.scalar_mul(&inv)
    });
    if let Some(w) = &unitary_witness {
        debug_assert_eq!(&w.conj_transpose() * w, Matrix::identity(w.rows()));
    }
    Ok(IntertwinerCertificate {
        s: s.clone(),
        lambda: Some(lambda),
        unitary_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::{rat, rat_frac};
    use crate::reps::{
        build_gamma, build_kronecker_rep, build_scalar_rep, build_vector_rep, builtin_irrep_1p1,
        trivial_rep, GammaBasis,
    };

    fn kron2() -> Representation {
        build_kronecker_rep(&build_gamma(GammaBasis::Dirac2), true).unwrap()
    }

    #[test]
    fn commutant_dimensions() {
        assert_eq!(commutant(&builtin_irrep_1p1()).dim(), 1);
        assert_eq!(commutant(&kron2()).dim(), 2);
        assert_eq!(commutant(&trivial_rep(2).unwrap()).dim(), 1);
    }

    #[test]
    fn irreducibility_verdicts() {
        assert!(is_irreducible(&builtin_irrep_1p1()).0);
        assert!(!is_irreducible(&kron2()).0);
    }

    #[test]
    fn two_squares_small_cases() {
        assert_eq!(
            two_squares(&BigInt::from(1)),
            Some((BigInt::from(1), BigInt::from(0)))
        );
        let (x, y) = two_squares(&BigInt::from(2)).unwrap();
        assert_eq!(&x * &x + &y * &y, BigInt::from(2));
        let (x, y) = two_squares(&BigInt::from(50)).unwrap();
        assert_eq!(&x * &x + &y * &y, BigInt::from(50));
        assert_eq!(two_squares(&BigInt::from(3)), None);
        assert_eq!(two_squares(&BigInt::from(12)), None);
    }

    #[test]
    fn unit_rescale_normalizes_norms() {
        let v = Matrix::column(vec![
            GaussianRational::zero(),
            GaussianRational::one(),
            GaussianRational::from_int(-1),
            GaussianRational::zero(),
        ]);
        let z = unit_rescale_factor(&v.inner(&v).re).unwrap();
        let w = v.scalar_mul(&z);
        assert_eq!(w.inner(&w), GaussianRational::one());
    }

    #[test]
    fn minimal_polynomial_of_projector() {
        let p = Matrix::parse(&[&["1", "0"], &["0", "0"]]).unwrap();
        // t² - t
        let mp = minimal_polynomial(&p);
        assert_eq!(mp.len(), 3);
        let roots = distinct_rational_roots(&mp).unwrap();
        assert_eq!(roots, vec![rat(0), rat(1)]);
    }

    #[test]
    fn nilpotent_has_no_distinct_linear_factorization() {
        let nil = Matrix::parse(&[&["0", "1"], &["0", "0"]]).unwrap();
        assert_eq!(distinct_rational_roots(&minimal_polynomial(&nil)), None);
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (t - 1/2)(t + 2) = t² + 3/2 t - 1
        let coeffs = vec![
            GaussianRational::from_int(-1),
            GaussianRational::from_rational(rat_frac(3, 2)),
            GaussianRational::one(),
        ];
        let roots = distinct_rational_roots(&coeffs).unwrap();
        assert_eq!(roots, vec![rat(-2), rat_frac(1, 2)]);
    }

    #[test]
    fn restrict_full_space_is_identity_operation() {
        let rep = builtin_irrep_1p1();
        let basis: Vec<Matrix> = (0..3).map(|c| Matrix::identity(3).column_at(c)).collect();
        let sub = restrict(&rep, &basis).unwrap();
        assert_eq!(sub.betas(), rep.betas());
    }

    #[test]
    fn restrict_common_kernel_of_kron2_is_zero_rep() {
        let rep = kron2();
        let mut stacked = rep.beta(0).clone();
        stacked = stacked.vstack(rep.beta(1));
        let kernel = stacked.null_space();
        assert_eq!(kernel.len(), 1);
        let sub = restrict(&rep, &kernel).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(sub.betas().iter().all(Matrix::is_zero));
    }

    #[test]
    fn restrict_rejects_non_invariant_line() {
        let rep = builtin_irrep_1p1();
        let line = vec![Matrix::identity(3).column_at(0)];
        let err = restrict(&rep, &line).unwrap_err();
        assert!(matches!(err, AnalysisError::NotInvariant { .. }));
    }

    #[test]
    fn decompose_irreducible_is_single_block() {
        let rep = builtin_irrep_1p1();
        let result = decompose(&rep).unwrap();
        assert!(result.complete);
        assert_eq!(result.blocks.len(), 1);
        assert_eq!(result.blocks[0].subrep.betas(), rep.betas());
    }

    #[test]
    fn decompose_trivial_rep() {
        let result = decompose(&trivial_rep(2).unwrap()).unwrap();
        assert!(result.complete);
        assert_eq!(result.blocks.len(), 1);
        assert!(result.blocks[0].subrep.betas().iter().all(Matrix::is_zero));
    }

    #[test]
    fn decompose_kron2_into_1_plus_3() {
        let rep = kron2();
        let result = decompose(&rep).unwrap();
        assert!(result.complete, "notes: {:?}", result.notes);
        let dims: Vec<usize> = result.blocks.iter().map(|b| b.basis.len()).collect();
        assert_eq!(dims, vec![1, 3]);
        assert!(result.blocks[0].subrep.betas().iter().all(Matrix::is_zero));
        assert!(is_irreducible(&result.blocks[1].subrep).0);
    }

    #[test]
    fn decompose_rejects_non_dkp() {
        let nohalf = build_kronecker_rep(&build_gamma(GammaBasis::Dirac2), false).unwrap();
        assert!(matches!(
            decompose(&nohalf),
            Err(AnalysisError::NotDkp((0, 0, 0)))
        ));
    }

    #[test]
    fn change_of_basis_block_diagonalizes() {
        let rep = kron2();
        let result = decompose(&rep).unwrap();
        let c = &result.change_of_basis;
        let c_inv = c.inverse().unwrap();
        for mu in 0..rep.d() {
            let conj = &(&c_inv * rep.beta(mu)) * c;
            // Assemble the expected block diagonal.
            let mut expected = Matrix::zero(rep.dim(), rep.dim());
            let mut offset = 0;
            for block in &result.blocks {
                let sub = block.subrep.beta(mu);
                for r in 0..sub.rows() {
                    for cc in 0..sub.cols() {
                        expected.set(offset + r, offset + cc, sub.at(r, cc).clone());
                    }
                }
                offset += sub.rows();
            }
            assert_eq!(conj, expected, "mu={mu}");
        }
    }

    #[test]
    fn intertwiner_identical_reps_is_identity() {
        let a = build_scalar_rep(2).unwrap();
        let b = build_vector_rep(2).unwrap();
        let cert = intertwiner(&a, &b).unwrap().unwrap();
        assert_eq!(cert.s, Matrix::identity(3));
    }

    #[test]
    fn intertwiner_kron2_block_vs_builtin() {
        let result = decompose(&kron2()).unwrap();
        let block = &result.blocks[1].subrep;
        let cert = intertwiner(block, &builtin_irrep_1p1()).unwrap().unwrap();
        let upgraded = unitarize(&cert, block, &builtin_irrep_1p1()).unwrap();
        let lambda = upgraded.lambda.unwrap();
        assert!(lambda.is_positive());
    }

    #[test]
    fn intertwiner_none_for_different_dims() {
        let s4 = build_scalar_rep(4).unwrap();
        let v4 = build_vector_rep(4).unwrap();
        assert!(intertwiner(&s4, &v4).unwrap().is_none());
    }

    #[test]
    fn intertwiner_metric_mismatch_is_error() {
        let a = builtin_irrep_1p1();
        let s4 = build_scalar_rep(4).unwrap();
        assert!(matches!(
            intertwiner(&a, &s4),
            Err(AnalysisError::MetricMismatch { da: 2, db: 4 })
        ));
    }

    #[test]
    fn unitarize_scaled_identity() {
        let rep = builtin_irrep_1p1();
        let cert = IntertwinerCertificate {
            s: Matrix::identity(3).scale_int(2),
            lambda: None,
            unitary_witness: None,
        };
        let upgraded = unitarize(&cert, &rep, &rep).unwrap();
        assert_eq!(upgraded.lambda, Some(rat(4)));
        assert_eq!(upgraded.unitary_witness, Some(Matrix::identity(3)));

        let identity = IntertwinerCertificate {
            s: Matrix::identity(3),
            lambda: None,
            unitary_witness: None,
        };
        let upgraded = unitarize(&identity, &rep, &rep).unwrap();
        assert_eq!(upgraded.lambda, Some(rat(1)));
        assert_eq!(upgraded.unitary_witness, Some(Matrix::identity(3)));
    }

    #[test]
    fn equivalence_is_symmetric_and_transitive_on_builtin() {
        let rep = builtin_irrep_1p1();
        let result = decompose(&kron2()).unwrap();
        let block = result.blocks[1].subrep.clone();
        let s_ab = intertwiner(&block, &rep).unwrap().unwrap().s;
        // symmetric: S⁻¹ intertwines the other way.
        let s_ba = s_ab.inverse().unwrap();
        for mu in 0..2 {
            assert_eq!(&s_ba * rep.beta(mu), block.beta(mu) * &s_ba);
        }
        // transitive: compose with the identity intertwiner rep -> rep.
        let s_bc = intertwiner(&rep, &rep).unwrap().unwrap().s;
        let s_ac = &s_bc * &s_ab;
        for mu in 0..2 {
            assert_eq!(&s_ac * block.beta(mu), rep.beta(mu) * &s_ac);
        }
    }
}
