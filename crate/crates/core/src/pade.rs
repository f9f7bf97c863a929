//! Rational-function reconstruction from truncated expansions: for each
//! coefficient, solve the linear system `p - q * expansion = 0` modulo the
//! truncation ideal under degree bounds, normalize the denominator's
//! constant term to 1, and accept only candidates whose re-expansion
//! survives one further lift.

use crate::error::Error;
use crate::field::{Fp, PrimeField};
use crate::lift::{TruncatedLift, TruncationPoint};
use crate::linalg::{solve_any, Mat};
use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::poly::Poly;

/// A rational coefficient `num/den` in the z-variables, normalized so the
/// constant term of `den` is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadePair {
    num: Poly,
    den: Poly,
}

impl PadePair {
    /// Wraps a numerator and denominator; the denominator's constant term
    /// must be 1.
    pub fn new(num: Poly, den: Poly) -> PadePair {
        assert!(
            den.terms().iter().any(|t| t.mono.is_one() && t.coeff == Fp::ONE),
            "denominator constant term must be 1"
        );
        PadePair { num, den }
    }

    pub fn constant(c: Fp, num_vars: usize) -> PadePair {
        PadePair {
            num: Poly::constant(c, num_vars, MonomialOrder::Drl),
            den: Poly::constant(Fp::ONE, num_vars, MonomialOrder::Drl),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.terms().len() == 1
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn eq_rational(&self, other: &PadePair, k: &PrimeField) -> bool {
        self.num.mul(&other.den, k) == other.num.mul(&self.den, k)
    }

    /// Evaluates at a full z-point; fails if the denominator vanishes.
    pub fn evaluate(&self, assign: &[Option<Fp>], k: &PrimeField) -> Result<Fp, Error> {
        let d = self.den.substitute(assign, k);
        let den = d.coeff_of(&Monomial::one(assign.len()));
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num.substitute(assign, k);
        let num = n.coeff_of(&Monomial::one(assign.len()));
        k.div(num, den)
    }
}

/// Power-series expansion of `pair` truncated at `u`: coefficients are
/// produced in ascending order, each from the previously computed ones.
pub fn expand(pair: &PadePair, u: &TruncationPoint, vars: &VarSet, k: &PrimeField) -> Poly {
    let monos = u.expansion_monomials(vars);
    let mut coeffs: Vec<(Monomial, Fp)> = Vec::with_capacity(monos.len());
    for v in &monos {
        let mut c = pair.num.coeff_of(v);
        for t in pair.den.terms() {
            if t.mono.is_one() || !t.mono.divides(v) {
                continue;
            }
            let rest = t.mono.div_into(v);
            if let Some((_, s)) = coeffs.iter().find(|(m, _)| *m == rest) {
                c = k.sub(c, k.mul(t.coeff, *s));
            }
        }
        coeffs.push((v.clone(), c));
    }
    Poly::from_pairs(coeffs, MonomialOrder::Drl, k)
}

/// Computes a Padé approximant of the truncated expansion `lambda` (known
/// modulo the truncation ideal at `u`) with numerator degree at most `d1`
/// and denominator degree at most `d2`. Underdetermined systems return the
/// canonical echelon solution; the stability check downstream rejects
/// spurious candidates.
pub fn pade_approximant(
    lambda: &Poly,
    u: &TruncationPoint,
    d1: u32,
    d2: u32,
    vars: &VarSet,
    k: &PrimeField,
) -> Result<PadePair, Error> {
    let n = vars.len();
    let equations = u.expansion_monomials(vars);
    let num_monos: Vec<Monomial> =
        equations.iter().filter(|m| m.degree() <= d1).cloned().collect();
    let den_monos: Vec<Monomial> = equations
        .iter()
        .filter(|m| !m.is_one() && m.degree() <= d2)
        .cloned()
        .collect();
    let unknowns = num_monos.len() + den_monos.len();

    // p_v - sum_a q_a lambda_{v/a} = lambda_v, with q's constant term at 1
    let mut mat = Mat::zeros(equations.len(), unknowns);
    let mut rhs = vec![Fp::ZERO; equations.len()];
    for (row, v) in equations.iter().enumerate() {
        if let Some(j) = num_monos.iter().position(|m| m == v) {
            mat[(row, j)] = Fp::ONE;
        }
        for (j, a) in den_monos.iter().enumerate() {
            if a.divides(v) {
                let l = lambda.coeff_of(&a.div_into(v));
                mat[(row, num_monos.len() + j)] = k.neg(l);
            }
        }
        rhs[row] = lambda.coeff_of(v);
    }
    let x = solve_any(&mat, &rhs, k).ok_or(Error::NoPadeSolution)?;

    let num = Poly::from_pairs(
        num_monos.iter().cloned().zip(x[..num_monos.len()].iter().copied()),
        MonomialOrder::Drl,
        k,
    );
    let den = Poly::from_pairs(
        std::iter::once((Monomial::one(n), Fp::ONE))
            .chain(den_monos.iter().cloned().zip(x[num_monos.len()..].iter().copied())),
        MonomialOrder::Drl,
        k,
    );
    Ok(PadePair { num, den })
}

/// An element of the generic-fiber basis: x-monomials with rational
/// z-coefficients, descending in the target order, leading coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberBasisElement {
    terms: Vec<(Monomial, PadePair)>,
}

impl FiberBasisElement {
    /// Assembles and sorts by the target order; drops zero numerators.
    pub fn new(pairs: Vec<(Monomial, PadePair)>, target: &MonomialOrder) -> FiberBasisElement {
        let mut terms: Vec<(Monomial, PadePair)> =
            pairs.into_iter().filter(|(_, p)| !p.num.is_zero()).collect();
        terms.sort_by(|a, b| target.compare(&b.0, &a.0));
        FiberBasisElement { terms }
    }

    pub fn terms(&self) -> &[(Monomial, PadePair)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.terms.first().expect("nonempty element").0
    }

    /// Multiplies through by all denominators, giving a polynomial in the
    /// full ring (used for ideal-membership verification).
    pub fn clear_denominators(&self, k: &PrimeField) -> Poly {
        let mut acc = Poly::zero(MonomialOrder::Drl);
        for (w, pair) in &self.terms {
            let mut part = pair.num.mul_term(w, Fp::ONE, k);
            for (w2, other) in &self.terms {
                if w2 != w {
                    part = part.mul(&other.den, k);
                }
            }
            acc = acc.add(&part, k);
        }
        acc
    }

    /// Evaluates all coefficients at a z-point, returning a polynomial in
    /// the x-variables (z-exponents zero), sorted by `target`.
    pub fn specialize(
        &self,
        point: &[Fp],
        vars: &VarSet,
        target: &MonomialOrder,
        k: &PrimeField,
    ) -> Result<Poly, Error> {
        let mut assign: Vec<Option<Fp>> = vec![None; vars.len()];
        for (i, zi) in vars.z_range().enumerate() {
            assign[zi] = Some(point[i]);
        }
        let pairs: Result<Vec<(Monomial, Fp)>, Error> = self
            .terms
            .iter()
            .map(|(w, p)| Ok((w.clone(), p.evaluate(&assign, k)?)))
            .collect();
        Ok(Poly::from_pairs(pairs?, target.clone(), k))
    }
}

/// True when re-expanding every coefficient of the candidate to the
/// truncation point of `next` reproduces `next` exactly.
pub fn is_stable(
    cand: &FiberBasisElement,
    next: &TruncatedLift,
    vars: &VarSet,
    k: &PrimeField,
) -> bool {
    let v = next.at();
    let mut support = next.x_support(vars);
    for (w, pair) in cand.terms() {
        let expected = next.z_coefficient(w, vars, k);
        if expand(pair, v, vars, k) != expected {
            return false;
        }
        support.retain(|s| s != w);
    }
    // any x-monomial of the lift not covered by the candidate is a mismatch
    support.is_empty()
}
