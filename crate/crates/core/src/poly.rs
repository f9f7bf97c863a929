//! Sparse multivariate polynomials over the prime field and the
//! multivariate division (normal form) procedure.
//!
//! Term lists are kept strictly descending in the polynomial's own order
//! and free of zero coefficients; every constructor restores this.

use std::cmp::Ordering;

use crate::field::{Fp, PrimeField};
use crate::monomial::{format_monomial, Monomial, MonomialOrder, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Fp,
}

/// A polynomial as a sorted sparse term list. The sort order travels with
/// the polynomial; changing order is an explicit resort, never implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    terms: Vec<Term>,
    order: MonomialOrder,
}

impl Poly {
    pub fn zero(order: MonomialOrder) -> Poly {
        Poly { terms: Vec::new(), order }
    }

    pub fn constant(c: Fp, num_vars: usize, order: MonomialOrder) -> Poly {
        let mut p = Poly::zero(order);
        if !c.is_zero() {
            p.terms.push(Term { mono: Monomial::one(num_vars), coeff: c });
        }
        p
    }

    pub fn monomial(mono: Monomial, coeff: Fp, order: MonomialOrder) -> Poly {
        let mut p = Poly::zero(order);
        if !coeff.is_zero() {
            p.terms.push(Term { mono, coeff });
        }
        p
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_pairs(
        pairs: impl IntoIterator<Item = (Monomial, Fp)>,
        order: MonomialOrder,
        k: &PrimeField,
    ) -> Poly {
        let mut terms: Vec<Term> =
            pairs.into_iter().map(|(mono, coeff)| Term { mono, coeff }).collect();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = k.add(last.coeff, t.coeff),
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Poly { terms: merged, order }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.first().map(|t| t.mono.num_vars())
    }

    /// Leading term under the polynomial's own order; `None` for zero.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// The largest support monomial. `None` for the zero polynomial.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<Fp> {
        self.terms.first().map(|t| t.coeff)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Fp {
        self.terms
            .iter()
            .find(|t| &t.mono == mono)
            .map(|t| t.coeff)
            .unwrap_or(Fp::ZERO)
    }

    /// Same terms re-sorted under a different order.
    pub fn resorted(&self, order: MonomialOrder) -> Poly {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        Poly { terms, order }
    }

    fn merge_with(&self, other: &Poly, k: &PrimeField, negate_other: bool) -> Poly {
        assert_eq!(self.order, other.order, "polynomial order mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.order.compare(&a.mono, &b.mono) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let coeff = if negate_other { k.neg(b.coeff) } else { b.coeff };
                    terms.push(Term { mono: b.mono.clone(), coeff });
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = if negate_other {
                        k.sub(a.coeff, b.coeff)
                    } else {
                        k.add(a.coeff, b.coeff)
                    };
                    if !coeff.is_zero() {
                        terms.push(Term { mono: a.mono.clone(), coeff });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            let coeff = if negate_other { k.neg(b.coeff) } else { b.coeff };
            terms.push(Term { mono: b.mono.clone(), coeff });
        }
        Poly { terms, order: self.order.clone() }
    }

    pub fn add(&self, other: &Poly, k: &PrimeField) -> Poly {
        self.merge_with(other, k, false)
    }

    pub fn sub(&self, other: &Poly, k: &PrimeField) -> Poly {
        self.merge_with(other, k, true)
    }

    pub fn neg(&self, k: &PrimeField) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.clone(), coeff: k.neg(t.coeff) })
            .collect();
        Poly { terms, order: self.order.clone() }
    }

    pub fn scale(&self, c: Fp, k: &PrimeField) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.order.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.clone(), coeff: k.mul(t.coeff, c) })
            .collect();
        Poly { terms, order: self.order.clone() }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: Fp, k: &PrimeField) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.order.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { mono: t.mono.mul(m), coeff: k.mul(t.coeff, c) })
            .collect();
        Poly { terms, order: self.order.clone() }
    }

    pub fn mul(&self, other: &Poly, k: &PrimeField) -> Poly {
        assert_eq!(self.order, other.order, "polynomial order mismatch");
        let mut acc = Poly::zero(self.order.clone());
        for t in &other.terms {
            acc = acc.add(&self.mul_term(&t.mono, t.coeff, k), k);
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, k: &PrimeField) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c == Fp::ONE => self.clone(),
            Some(c) => self.scale(k.inv(c).expect("nonzero leading coefficient"), k),
        }
    }

    /// Substitutes values for the variables in `assign` (a full
    /// assignment slot per variable, `None` meaning "keep symbolic").
    pub fn substitute(&self, assign: &[Option<Fp>], k: &PrimeField) -> Poly {
        let n = assign.len();
        let pairs = self.terms.iter().map(|t| {
            let mut c = t.coeff;
            let mut exps = vec![0u32; n];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                match assign[i] {
                    Some(v) => c = k.mul(c, k.pow(v, e as u64)),
                    None => exps[i] = e,
                }
            }
            (Monomial::from_exps(exps), c)
        });
        Poly::from_pairs(pairs, self.order.clone(), k)
    }

    /// Renders using variable names, e.g. `x1^2 + 10*z + 6`.
    pub fn format(&self, vars: &VarSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for t in &self.terms {
            let m = format_monomial(&t.mono, vars);
            if m == "1" {
                parts.push(format!("{}", t.coeff));
            } else if t.coeff == Fp::ONE {
                parts.push(m);
            } else {
                parts.push(format!("{}*{}", t.coeff, m));
            }
        }
        parts.join(" + ")
    }
}

/// Remainder of `f` on division by `basis`: no support monomial of the
/// result is divisible by any leading monomial of `basis`, and the
/// difference lies in the ideal generated by `basis`.
///
/// Reduction always rewrites the currently largest reducible monomial and
/// picks the first divisor by position, so results are reproducible.
pub fn normal_form(f: &Poly, basis: &[Poly], k: &PrimeField) -> Poly {
    let order = f.order().clone();
    let mut p = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    'outer: while let Some(lead) = p.terms.first().cloned() {
        for g in basis {
            let Some(gt) = g.leading_term() else { continue };
            if gt.mono.divides(&lead.mono) {
                let q = gt.mono.div_into(&lead.mono);
                let c = k.div(lead.coeff, gt.coeff).expect("nonzero leading coefficient");
                p = p.sub(&g.mul_term(&q, c, k), k);
                continue 'outer;
            }
        }
        remainder.push(lead);
        p.terms.remove(0);
    }
    Poly { terms: remainder, order }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f11() -> PrimeField {
        PrimeField::new(11).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    fn poly(pairs: &[(&[u32], u64)], k: &PrimeField) -> Poly {
        Poly::from_pairs(
            pairs.iter().map(|(e, c)| (m(e), k.elem(*c))),
            MonomialOrder::Drl,
            k,
        )
    }

    #[test]
    fn additive_identity_and_scaling() {
        let k = f11();
        let f = poly(&[(&[2, 0], 1), (&[0, 1], 5)], &k);
        let zero = Poly::zero(MonomialOrder::Drl);
        assert_eq!(f.add(&zero, &k), f);
        assert!(f.scale(Fp::ZERO, &k).is_zero());
        assert!(f.sub(&f, &k).is_zero());
    }

    #[test]
    fn product_reduces_mod_p() {
        let k = f11();
        // (x+1)(x-1) = x^2 + 10 over F_11
        let a = poly(&[(&[1], 1), (&[0], 1)], &k);
        let b = poly(&[(&[1], 1), (&[0], 10)], &k);
        assert_eq!(a.mul(&b, &k), poly(&[(&[2], 1), (&[0], 10)], &k));
    }

    #[test]
    fn leading_monomials() {
        let k = f11();
        // lm(x3^2 + 6) = x3^2 in a 4-variable ring [x1,x2,x3,z]
        let f = poly(&[(&[0, 0, 2, 0], 1), (&[0, 0, 0, 0], 6)], &k);
        assert_eq!(f.leading_monomial(), Some(&m(&[0, 0, 2, 0])));
        let c = poly(&[(&[0, 0, 0, 0], 3)], &k);
        assert_eq!(c.leading_monomial(), Some(&m(&[0, 0, 0, 0])));
        // lm(x1*x2 + x2^2) under DRL(x1 > x2) = x1*x2
        let g = poly(&[(&[1, 1], 1), (&[0, 2], 1)], &k);
        assert_eq!(g.leading_monomial(), Some(&m(&[1, 1])));
        assert_eq!(Poly::zero(MonomialOrder::Drl).leading_monomial(), None);
    }

    #[test]
    fn normal_form_self_reduction() {
        let k = f11();
        let g1 = poly(&[(&[2, 0], 1), (&[0, 1], 3)], &k);
        let g2 = poly(&[(&[1, 1], 1), (&[0, 0], 7)], &k);
        let basis = vec![g1.clone(), g2.clone()];
        assert!(normal_form(&g1, &basis, &k).is_zero());
        assert!(normal_form(&g2, &basis, &k).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_reduced() {
        let k = f11();
        let basis = vec![
            poly(&[(&[2, 0], 1), (&[0, 1], 3)], &k),
            poly(&[(&[0, 3], 1), (&[1, 0], 2)], &k),
        ];
        let f = poly(&[(&[4, 2], 5), (&[1, 1], 2), (&[0, 0], 9)], &k);
        let r = normal_form(&f, &basis, &k);
        assert_eq!(normal_form(&r, &basis, &k), r);
        for t in r.terms() {
            for g in &basis {
                assert!(!g.leading_monomial().unwrap().divides(&t.mono));
            }
        }
        // f - r reduces to zero
        assert!(normal_form(&f.sub(&r, &k), &basis, &k).is_zero());
    }

    #[test]
    fn substitution() {
        let k = f11();
        // f = x^2 + 3xz + z at x=2: 4 + 6z + z = 4 + 7z
        let f = poly(&[(&[2, 0], 1), (&[1, 1], 3), (&[0, 1], 1)], &k);
        let g = f.substitute(&[Some(k.elem(2)), None], &k);
        assert_eq!(g, poly(&[(&[0, 1], 7), (&[0, 0], 4)], &k));
    }

    #[test]
    fn format_terms() {
        let k = f11();
        let vars = VarSet::split(vec!["x1".into(), "z".into()], 1);
        let f = poly(&[(&[2, 0], 1), (&[0, 1], 10), (&[0, 0], 6)], &k);
        assert_eq!(f.format(&vars), "x1^2 + 10*z + 6");
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
        prop::collection::vec(
            (prop::collection::vec(0u32..4, 3), 0u64..11),
            0..8,
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(pa in arb_poly(), pb in arb_poly(), pc in arb_poly()) {
            let k = f11();
            let build = |p: &Vec<(Vec<u32>, u64)>| {
                Poly::from_pairs(
                    p.iter().map(|(e, c)| (Monomial::from_exps(e.clone()), k.elem(*c))),
                    MonomialOrder::Drl,
                    &k,
                )
            };
            let (a, b, c) = (build(&pa), build(&pb), build(&pc));
            prop_assert_eq!(a.add(&b, &k), b.add(&a, &k));
            prop_assert_eq!(a.mul(&b, &k), b.mul(&a, &k));
            prop_assert_eq!(
                a.mul(&b.add(&c, &k), &k),
                a.mul(&b, &k).add(&a.mul(&c, &k), &k)
            );
            // invariants: sorted strictly descending, no zero coefficients
            let ab = a.mul(&b, &k);
            for w in ab.terms().windows(2) {
                prop_assert_eq!(
                    MonomialOrder::Drl.compare(&w[0].mono, &w[1].mono),
                    std::cmp::Ordering::Greater
                );
            }
            prop_assert!(ab.terms().iter().all(|t| !t.coeff.is_zero()));
        }
    }
}
