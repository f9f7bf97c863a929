//! Buchberger engine producing reduced Gröbner bases, plus staircases,
//! the zero-dimensionality test and maximally independent variable sets.

use std::collections::HashMap;

use crate::error::Error;
use crate::field::PrimeField;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{normal_form, Poly};

/// A Gröbner basis. When `reduced` is set the generators are monic, sorted
/// ascending by leading monomial, and no support monomial of one element is
/// divisible by the leading monomial of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    gens: Vec<Poly>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.gens.iter().find_map(|g| g.num_vars())
    }

    /// Normal form of `f` with respect to this basis.
    pub fn normal_form(&self, f: &Poly, k: &PrimeField) -> Poly {
        debug_assert_eq!(f.order(), &self.order, "resort before reducing");
        normal_form(f, &self.gens, k)
    }

    pub fn contains(&self, f: &Poly, k: &PrimeField) -> bool {
        self.normal_form(&f.resorted(self.order.clone()), k).is_zero()
    }

    /// Wraps externally constructed generators that are already a reduced
    /// basis (sorted, monic, inter-reduced). Used by truncation-basis
    /// extraction; the caller vouches for reducedness.
    pub fn from_reduced_parts(gens: Vec<Poly>, order: MonomialOrder) -> GroebnerBasis {
        GroebnerBasis { gens, order, reduced: true }
    }
}

/// The monomials outside the leading-monomial ideal, sorted ascending by
/// the basis order. Finite exactly for zero-dimensional ideals.
#[derive(Clone, Debug)]
pub struct Staircase {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Staircase {
    fn new(monomials: Vec<Monomial>) -> Staircase {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Staircase { monomials, index }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// The S-polynomial of two nonzero polynomials: leading terms cancel.
pub fn s_polynomial(f: &Poly, g: &Poly, k: &PrimeField) -> Poly {
    let ft = f.leading_term().expect("nonzero");
    let gt = g.leading_term().expect("nonzero");
    let lcm = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(
        &ft.mono.div_into(&lcm),
        k.inv(ft.coeff).expect("nonzero leading coefficient"),
        k,
    );
    let b = g.mul_term(
        &gt.mono.div_into(&lcm),
        k.inv(gt.coeff).expect("nonzero leading coefficient"),
        k,
    );
    a.sub(&b, k)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Installs pairs for a new basis element using the standard pair-pruning
/// criteria: divisibility among new lcms, one pair per lcm class (dropped
/// entirely when some class member has coprime leading monomials), and
/// removal of superseded old pairs.
fn update_pairs(basis: &[Poly], pairs: &mut Vec<Pair>, t: usize, order: &MonomialOrder) {
    let lm_t = basis[t].leading_monomial().unwrap().clone();

    let mut cand: Vec<Pair> = (0..t)
        .map(|i| Pair { i, j: t, lcm: basis[i].leading_monomial().unwrap().lcm(&lm_t) })
        .collect();
    cand.sort_by(|a, b| {
        a.lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| order.compare(&a.lcm, &b.lcm))
            .then_with(|| a.i.cmp(&b.i))
    });

    // keep only lcm-minimal candidates
    let mut survivors: Vec<Pair> = Vec::new();
    for c in cand {
        if survivors.iter().any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm)) {
            continue;
        }
        survivors.push(c);
    }

    // group equal lcms: drop the class if any member is a coprime pair,
    // otherwise keep a single representative
    let mut kept: Vec<Pair> = Vec::new();
    let mut idx = 0;
    while idx < survivors.len() {
        let mut end = idx + 1;
        while end < survivors.len() && survivors[end].lcm == survivors[idx].lcm {
            end += 1;
        }
        let class = &survivors[idx..end];
        let coprime = class.iter().any(|p| {
            basis[p.i]
                .leading_monomial()
                .unwrap()
                .is_coprime_with(basis[p.j].leading_monomial().unwrap())
        });
        if !coprime {
            kept.push(Pair {
                i: class[0].i,
                j: class[0].j,
                lcm: class[0].lcm.clone(),
            });
        }
        idx = end;
    }

    // prune old pairs strictly superseded by the new element
    pairs.retain(|p| {
        let li = basis[p.i].leading_monomial().unwrap();
        let lj = basis[p.j].leading_monomial().unwrap();
        !(lm_t.divides(&p.lcm) && li.lcm(&lm_t) != p.lcm && lj.lcm(&lm_t) != p.lcm)
    });
    pairs.extend(kept);
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder, k: &PrimeField) -> GroebnerBasis {
    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        let g = g.resorted(order.clone());
        let r = normal_form(&g, &basis, k);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic(k));
        update_pairs(&basis, &mut pairs, basis.len() - 1, order);
    }

    while !pairs.is_empty() {
        // normal selection: smallest lcm degree, then order, first
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], k);
        let r = normal_form(&s, &basis, k);
        if !r.is_zero() {
            basis.push(r.monic(k));
            update_pairs(&basis, &mut pairs, basis.len() - 1, order);
        }
    }

    reduce_basis(basis, order, k)
}

fn reduce_basis(mut basis: Vec<Poly>, order: &MonomialOrder, k: &PrimeField) -> GroebnerBasis {
    // minimalize: drop elements whose lm is divisible by another lm
    basis.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    // tail-reduce every element against the others
    let snapshot = minimal.clone();
    for (i, g) in minimal.iter_mut().enumerate() {
        let others: Vec<Poly> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        *g = normal_form(g, &others, k).monic(k);
    }
    GroebnerBasis { gens: minimal, order: order.clone(), reduced: true }
}

impl GroebnerBasis {
    /// True when every variable has a pure power among the leading
    /// monomials, i.e. the quotient is a finite-dimensional vector space.
    pub fn is_zero_dimensional(&self) -> bool {
        let Some(n) = self.num_vars() else { return false };
        (0..n).all(|v| {
            self.leading_monomials()
                .any(|m| m.exps().iter().enumerate().all(|(i, &e)| e == 0 || i == v))
        })
    }

    /// Enumerates the staircase ascending by the basis order.
    pub fn staircase(&self, k: &PrimeField) -> Result<Staircase, Error> {
        let _ = k;
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.num_vars().ok_or(Error::NotZeroDimensional)?;
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        let mut queue: Vec<Monomial> = vec![Monomial::one(n)];
        let mut out: Vec<Monomial> = Vec::new();
        while !queue.is_empty() {
            // queue kept sorted descending so the smallest pops from the back
            let u = queue.pop().unwrap();
            if lms.iter().any(|m| m.divides(&u)) {
                continue;
            }
            for i in 0..n {
                let child = u.mul(&Monomial::var(i, n));
                if !queue.contains(&child) {
                    let pos = queue
                        .binary_search_by(|probe| self.order.compare(&child, probe))
                        .unwrap_or_else(|e| e);
                    queue.insert(pos, child);
                }
            }
            out.push(u);
        }
        Ok(Staircase::new(out))
    }

    /// Greedy maximal set of variables, in declaration order, such that no
    /// leading monomial is supported inside the set. The complement is the
    /// finite-fiber block.
    pub fn max_independent_set(&self) -> Result<Vec<usize>, Error> {
        if self.gens.iter().any(|g| g.leading_monomial().is_some_and(|m| m.is_one())) {
            return Err(Error::IdealIsUnit);
        }
        let Some(n) = self.num_vars() else { return Err(Error::IdealIsUnit) };
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        let mut picked = vec![false; n];
        for v in 0..n {
            picked[v] = true;
            let banned = lms.iter().any(|m| {
                m.exps().iter().enumerate().all(|(i, &e)| e == 0 || picked[i])
            });
            if banned {
                picked[v] = false;
            }
        }
        Ok((0..n).filter(|&v| picked[v]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
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
    fn s_polynomial_examples() {
        let k = f11();
        let f = poly(&[(&[2, 0], 1), (&[0, 1], 1)], &k); // x^2 + y
        let g = poly(&[(&[1, 1], 1), (&[0, 0], 1)], &k); // xy + 1
        assert!(s_polynomial(&f, &f, &k).is_zero());
        // monomial inputs cancel completely
        let a = poly(&[(&[2, 0], 1)], &k);
        let b = poly(&[(&[1, 1], 1)], &k);
        assert!(s_polynomial(&a, &b, &k).is_zero());
        // y(x^2+y) - x(xy+1) = y^2 - x
        assert_eq!(s_polynomial(&f, &g, &k), poly(&[(&[0, 2], 1), (&[1, 0], 10)], &k));
        // leading terms cancel
        let s = s_polynomial(&f, &g, &k);
        let lcm = m(&[2, 1]);
        assert!(MonomialOrder::Drl.compare(s.leading_monomial().unwrap(), &lcm)
            == std::cmp::Ordering::Less);
    }

    #[test]
    fn buchberger_single_generator() {
        let k = f11();
        let f = poly(&[(&[1, 0], 1)], &k);
        let gb = buchberger(&[f.clone()], &MonomialOrder::Drl, &k);
        assert_eq!(gb.generators(), &[f]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn buchberger_output_satisfies_criterion_randomized() {
        let k = f11();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..12 {
            let gens: Vec<Poly> = (0..2)
                .map(|_| {
                    let pairs: Vec<(Monomial, Fp)> = (0..4)
                        .map(|_| {
                            let e = vec![rng.random_range(0..3u32), rng.random_range(0..3u32)];
                            (Monomial::from_exps(e), k.elem(rng.random_range(0..11)))
                        })
                        .collect();
                    Poly::from_pairs(pairs, MonomialOrder::Drl, &k)
                })
                .filter(|p| !p.is_zero())
                .collect();
            if gens.is_empty() {
                continue;
            }
            let gb = buchberger(&gens, &MonomialOrder::Drl, &k);
            for i in 0..gb.generators().len() {
                for j in (i + 1)..gb.generators().len() {
                    let s = s_polynomial(&gb.generators()[i], &gb.generators()[j], &k);
                    assert!(gb.normal_form(&s, &k).is_zero(), "Buchberger criterion");
                }
            }
            // membership of explicit combinations
            for g in &gens {
                assert!(gb.contains(g, &k));
            }
            let fancy = gens[0].mul(&gens[gens.len() - 1], &k).add(&gens[0], &k);
            assert!(gb.contains(&fancy, &k));
        }
    }

    #[test]
    fn reduced_basis_is_permutation_invariant() {
        let k = f11();
        let gens = vec![
            poly(&[(&[2, 0], 1), (&[0, 1], 3), (&[0, 0], 1)], &k),
            poly(&[(&[1, 1], 1), (&[1, 0], 2)], &k),
            poly(&[(&[0, 2], 5), (&[1, 0], 1)], &k),
        ];
        let gb1 = buchberger(&gens, &MonomialOrder::Drl, &k);
        let permuted = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
        let gb2 = buchberger(&permuted, &MonomialOrder::Drl, &k);
        assert_eq!(gb1.generators(), gb2.generators());
    }

    #[test]
    fn staircase_of_variable_ideal() {
        let k = f11();
        let gens = vec![poly(&[(&[1, 0, 0], 1)], &k), poly(&[(&[0, 1, 0], 1)], &k), poly(&[(&[0, 0, 1], 1)], &k)];
        let gb = buchberger(&gens, &MonomialOrder::Drl, &k);
        let s = gb.staircase(&k).unwrap();
        assert_eq!(s.monomials(), &[m(&[0, 0, 0])]);
    }

    #[test]
    fn staircase_requires_zero_dimensional() {
        let k = f11();
        // <xy - 1> has leading monomial xy: no pure powers
        let gb = buchberger(&[poly(&[(&[1, 1], 1), (&[0, 0], 10)], &k)], &MonomialOrder::Drl, &k);
        assert!(!gb.is_zero_dimensional());
        assert_eq!(gb.staircase(&k).unwrap_err(), Error::NotZeroDimensional);
        // <x^2, y^3> is zero-dimensional with a 6-element staircase
        let gb = buchberger(
            &[poly(&[(&[2, 0], 1)], &k), poly(&[(&[0, 3], 1)], &k)],
            &MonomialOrder::Drl,
            &k,
        );
        assert!(gb.is_zero_dimensional());
        assert_eq!(gb.staircase(&k).unwrap().len(), 6);
    }

    #[test]
    fn staircase_sorted_ascending() {
        let k = f11();
        let gb = buchberger(
            &[poly(&[(&[2, 0], 1)], &k), poly(&[(&[0, 2], 1)], &k)],
            &MonomialOrder::Drl,
            &k,
        );
        let s = gb.staircase(&k).unwrap();
        assert_eq!(s.monomials(), &[m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[1, 1])]);
        assert_eq!(s.position(&m(&[1, 0])), Some(2));
    }

    #[test]
    fn staircase_size_is_order_independent() {
        let k = f11();
        let gens = vec![
            poly(&[(&[2, 1], 1), (&[0, 0], 3)], &k),
            poly(&[(&[1, 2], 1), (&[1, 0], 1), (&[0, 0], 5)], &k),
            poly(&[(&[3, 0], 1), (&[0, 3], 2)], &k),
            poly(&[(&[0, 4], 1), (&[1, 1], 7)], &k),
        ];
        let drl = buchberger(&gens, &MonomialOrder::Drl, &k);
        let lex = buchberger(&gens, &MonomialOrder::Lex, &k);
        if drl.is_zero_dimensional() {
            assert_eq!(
                drl.staircase(&k).unwrap().len(),
                lex.staircase(&k).unwrap().len()
            );
        }
    }

    #[test]
    fn max_independent_set_examples() {
        let k = f11();
        // <xy - 1>: both {x} and {y} work; greedy picks {x}
        let gb = buchberger(&[poly(&[(&[1, 1], 1), (&[0, 0], 10)], &k)], &MonomialOrder::Drl, &k);
        assert_eq!(gb.max_independent_set().unwrap(), vec![0]);
        // zero-dimensional ideal: empty set
        let gb = buchberger(
            &[poly(&[(&[2, 0], 1)], &k), poly(&[(&[0, 2], 1)], &k)],
            &MonomialOrder::Drl,
            &k,
        );
        assert_eq!(gb.max_independent_set().unwrap(), Vec::<usize>::new());
        // unit ideal errors
        let gb = buchberger(&[poly(&[(&[0, 0], 5)], &k)], &MonomialOrder::Drl, &k);
        assert_eq!(gb.max_independent_set().unwrap_err(), Error::IdealIsUnit);
    }
}
