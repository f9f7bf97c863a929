//! Change of ordering for zero-dimensional ideals by linear algebra on
//! normal forms: enumerate monomials in the target order, detect linear
//! dependence among their normal-form vectors, and read off the new basis.

use crate::error::Error;
use crate::field::{Fp, PrimeField};
use crate::groebner::{GroebnerBasis, Staircase};
use crate::linalg::{IncrementalSpan, SpanOutcome};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

/// Coordinates of the normal form of `f` on the staircase `s`, ordered as
/// the staircase is (ascending in the basis order).
pub fn nf_vector(f: &Poly, basis: &GroebnerBasis, s: &Staircase, k: &PrimeField) -> Vec<Fp> {
    let r = basis.normal_form(&f.resorted(basis.order().clone()), k);
    let mut v = vec![Fp::ZERO; s.len()];
    for t in r.terms() {
        let i = s.position(&t.mono).expect("normal form lives on the staircase");
        v[i] = t.coeff;
    }
    v
}

/// Converts a reduced Gröbner basis of a zero-dimensional ideal into the
/// reduced basis for `target`, returning the target staircase as well.
pub fn fglm(
    basis: &GroebnerBasis,
    target: MonomialOrder,
    k: &PrimeField,
) -> Result<(GroebnerBasis, Staircase), Error> {
    let source_stairs = basis.staircase(k)?;
    let n = basis.num_vars().ok_or(Error::NotZeroDimensional)?;

    let mut span = IncrementalSpan::new(source_stairs.len());
    let mut quotient_basis: Vec<Monomial> = Vec::new();
    let mut new_lms: Vec<Monomial> = Vec::new();
    let mut new_gens: Vec<Poly> = Vec::new();

    // queue sorted descending in the target order so the smallest pops last
    let mut queue: Vec<Monomial> = vec![Monomial::one(n)];
    while let Some(u) = queue.pop() {
        if new_lms.iter().any(|m| m.divides(&u)) {
            continue;
        }
        let v = nf_vector(&Poly::monomial(u.clone(), Fp::ONE, target.clone()), basis, &source_stairs, k);
        match span.offer(&v, k) {
            SpanOutcome::Independent(_) => {
                for i in 0..n {
                    let child = u.mul(&Monomial::var(i, n));
                    if !queue.contains(&child) {
                        let pos = queue
                            .binary_search_by(|probe| target.compare(&child, probe))
                            .unwrap_or_else(|e| e);
                        queue.insert(pos, child);
                    }
                }
                quotient_basis.push(u);
            }
            SpanOutcome::Dependent(combo) => {
                // u - sum(combo_i * s_i) lies in the ideal and is reduced
                let pairs = std::iter::once((u.clone(), Fp::ONE)).chain(
                    quotient_basis
                        .iter()
                        .zip(&combo)
                        .map(|(s, &c)| (s.clone(), k.neg(c))),
                );
                new_gens.push(Poly::from_pairs(pairs, target.clone(), k));
                new_lms.push(u);
            }
        }
    }

    let mut gens = new_gens;
    gens.sort_by(|a, b| {
        target.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let out = GroebnerBasis::from_reduced_parts(gens, target);
    let stairs = out.staircase(k)?;
    debug_assert_eq!(stairs.len(), source_stairs.len());
    Ok((out, stairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use rand::{Rng, SeedableRng};

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
    fn nf_vector_unit_vectors_and_zero() {
        let k = f11();
        let gb = buchberger(
            &[poly(&[(&[2, 0], 1), (&[0, 1], 4)], &k), poly(&[(&[0, 2], 1), (&[1, 0], 9)], &k)],
            &MonomialOrder::Drl,
            &k,
        );
        let s = gb.staircase(&k).unwrap();
        for (i, u) in s.monomials().iter().enumerate() {
            let v = nf_vector(&Poly::monomial(u.clone(), Fp::ONE, MonomialOrder::Drl), &gb, &s, &k);
            let mut expect = vec![Fp::ZERO; s.len()];
            expect[i] = Fp::ONE;
            assert_eq!(v, expect);
        }
        let z = nf_vector(&Poly::zero(MonomialOrder::Drl), &gb, &s, &k);
        assert!(z.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn fglm_on_variable_ideal_is_order_independent() {
        let k = f11();
        let gens = vec![poly(&[(&[1, 0], 1)], &k), poly(&[(&[0, 1], 1)], &k)];
        let gb = buchberger(&gens, &MonomialOrder::Drl, &k);
        let (out, stairs) = fglm(&gb, MonomialOrder::Lex, &k).unwrap();
        assert_eq!(out.generators().len(), 2);
        assert_eq!(stairs.monomials(), &[m(&[0, 0])]);
        let oracle = buchberger(&gens, &MonomialOrder::Lex, &k);
        assert_eq!(out.generators(), oracle.generators());
    }

    #[test]
    fn fglm_matches_buchberger_on_random_ideals() {
        let k = f11();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            // dominant pure powers keep the ideal zero-dimensional
            let mut gens = vec![
                poly(&[(&[2, 0], 1), (&[1, 0], rng.random_range(0..11)), (&[0, 1], rng.random_range(0..11)), (&[0, 0], rng.random_range(0..11))], &k),
                poly(&[(&[0, 3], 1), (&[0, 1], rng.random_range(0..11)), (&[1, 0], rng.random_range(0..11))], &k),
            ];
            gens.push(poly(&[(&[1, 1], rng.random_range(0..11)), (&[0, 0], rng.random_range(0..11))], &k));
            let h = buchberger(&gens, &MonomialOrder::Drl, &k);
            if !h.is_zero_dimensional() {
                continue;
            }
            let (via_fglm, _) = fglm(&h, MonomialOrder::Lex, &k).unwrap();
            let direct = buchberger(&gens, &MonomialOrder::Lex, &k);
            assert_eq!(via_fglm.generators(), direct.generators());
        }
    }

    #[test]
    fn fglm_output_is_a_groebner_basis() {
        let k = f11();
        let gens = vec![
            poly(&[(&[2, 0], 1), (&[0, 1], 3), (&[0, 0], 1)], &k),
            poly(&[(&[0, 2], 1), (&[1, 0], 5), (&[0, 0], 2)], &k),
        ];
        let h = buchberger(&gens, &MonomialOrder::Drl, &k);
        let (g, stairs) = fglm(&h, MonomialOrder::Lex, &k).unwrap();
        // staircase sizes agree between source and target order
        assert_eq!(stairs.len(), h.staircase(&k).unwrap().len());
        // S-polynomial criterion on the output
        for i in 0..g.generators().len() {
            for j in (i + 1)..g.generators().len() {
                let s = crate::groebner::s_polynomial(&g.generators()[i], &g.generators()[j], &k);
                assert!(g.normal_form(&s, &k).is_zero());
            }
        }
        // new leading monomials are pairwise indivisible
        let lms: Vec<_> = g.leading_monomials().collect();
        for a in &lms {
            for b in &lms {
                assert!(a == b || !a.divides(b));
            }
        }
    }
}
