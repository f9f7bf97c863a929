//! Truncation machinery for the fiber maximal ideal and the core lifting
//! step: extend a basis element one truncation monomial (or one whole
//! degree batch) at a time by solving for normal-form coordinates.

use std::cmp::Ordering;

use crate::error::Error;
use crate::field::{Fp, PrimeField};
use crate::fglm::nf_vector;
use crate::groebner::{buchberger, GroebnerBasis, Staircase};
use crate::linalg::{solve_unique, Mat};
use crate::monomial::{Monomial, MonomialOrder, VarSet};
use crate::poly::Poly;

/// A monomial in the z-variables marking how far expansions are known:
/// coefficients are truncated modulo the ideal of all z-monomials beyond
/// this point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationPoint {
    u: Monomial,
}

/// All z-monomials of total degree `d`, ascending in the degree reverse
/// lexicographic order.
fn z_monomials_of_degree(vars: &VarSet, d: u32) -> Vec<Monomial> {
    let n = vars.len();
    let zr = vars.z_range();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(exps: &mut Vec<u32>, idx: usize, end: usize, rem: u32, out: &mut Vec<Monomial>) {
        if idx + 1 == end {
            exps[idx] = rem;
            out.push(Monomial::from_exps(exps.clone()));
            exps[idx] = 0;
            return;
        }
        for e in 0..=rem {
            exps[idx] = e;
            rec(exps, idx + 1, end, rem - e, out);
            exps[idx] = 0;
        }
    }
    if zr.is_empty() {
        if d == 0 {
            out.push(Monomial::one(n));
        }
        return out;
    }
    rec(&mut exps, zr.start, zr.end, d, &mut out);
    out.sort_by(|a, b| MonomialOrder::Drl.compare(a, b));
    out
}

impl TruncationPoint {
    /// The origin: expansions known modulo every positive-degree
    /// z-monomial.
    pub fn origin(vars: &VarSet) -> TruncationPoint {
        TruncationPoint { u: Monomial::one(vars.len()) }
    }

    pub fn new(u: Monomial, vars: &VarSet) -> TruncationPoint {
        assert!(u.supported_in(vars.z_range()), "truncation point must be a z-monomial");
        TruncationPoint { u }
    }

    /// The largest z-monomial of total degree `d`.
    pub fn max_of_degree(d: u32, vars: &VarSet) -> TruncationPoint {
        let m = z_monomials_of_degree(vars, d).pop().expect("no z-variables");
        TruncationPoint { u: m }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.u
    }

    pub fn degree(&self) -> u32 {
        self.u.degree()
    }

    /// The immediate successor among z-monomials.
    pub fn succ(&self, vars: &VarSet) -> TruncationPoint {
        let level = z_monomials_of_degree(vars, self.u.degree());
        let pos = level.iter().position(|m| *m == self.u).expect("point on its level");
        let u = if pos + 1 < level.len() {
            level[pos + 1].clone()
        } else {
            z_monomials_of_degree(vars, self.u.degree() + 1)
                .into_iter()
                .next()
                .expect("no z-variables")
        };
        TruncationPoint { u }
    }

    /// True when the z-monomial `v` lies in the truncation ideal, i.e.
    /// strictly beyond this point.
    pub fn cuts(&self, v: &Monomial) -> bool {
        MonomialOrder::Drl.compare(v, &self.u) == Ordering::Greater
    }

    /// Minimal generating set of the truncation ideal: the divisibility
    /// minimal z-monomials strictly beyond the point.
    pub fn minimal_generators(&self, vars: &VarSet) -> Vec<Monomial> {
        let d = self.u.degree();
        let same_level: Vec<Monomial> = z_monomials_of_degree(vars, d)
            .into_iter()
            .filter(|m| self.cuts(m))
            .collect();
        let mut out = same_level.clone();
        for m in z_monomials_of_degree(vars, d + 1) {
            if !same_level.iter().any(|g| g.divides(&m)) {
                out.push(m);
            }
        }
        out
    }

    /// The z-monomials at or below this point, ascending: the support
    /// available to truncated expansions.
    pub fn expansion_monomials(&self, vars: &VarSet) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=self.u.degree() {
            out.extend(z_monomials_of_degree(vars, d).into_iter().filter(|m| !self.cuts(m)));
        }
        out
    }

    /// Drops the terms of `f` whose z-part lies beyond this point.
    pub fn truncate(&self, f: &Poly, vars: &VarSet, k: &PrimeField) -> Poly {
        let zr = vars.z_range();
        Poly::from_pairs(
            f.terms()
                .iter()
                .filter(|t| !self.cuts(&t.mono.restrict(zr.clone())))
                .map(|t| (t.mono.clone(), t.coeff)),
            f.order().clone(),
            k,
        )
    }
}

/// A basis element whose z-expansions are known up to a truncation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedLift {
    body: Poly,
    at: TruncationPoint,
}

impl TruncatedLift {
    pub fn new(body: Poly, at: TruncationPoint) -> TruncatedLift {
        TruncatedLift { body, at }
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn at(&self) -> &TruncationPoint {
        &self.at
    }

    /// The distinct x-monomials appearing in the body.
    pub fn x_support(&self, vars: &VarSet) -> Vec<Monomial> {
        let xr = vars.x_range();
        let mut out: Vec<Monomial> = Vec::new();
        for t in self.body.terms() {
            let w = t.mono.restrict(xr.clone());
            if !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    /// The truncated z-expansion multiplying the x-monomial `w`.
    pub fn z_coefficient(&self, w: &Monomial, vars: &VarSet, k: &PrimeField) -> Poly {
        let xr = vars.x_range();
        let zr = vars.z_range();
        Poly::from_pairs(
            self.body
                .terms()
                .iter()
                .filter(|t| t.mono.restrict(xr.clone()) == *w)
                .map(|t| (t.mono.restrict(zr.clone()), t.coeff)),
            MonomialOrder::Drl,
            k,
        )
    }
}

/// Reduced basis of the ideal plus the truncation ideal at `u`, by a fresh
/// Buchberger run on the generators together with the minimal truncation
/// generators.
pub fn truncation_basis(
    gens: &[Poly],
    u: &TruncationPoint,
    ormord: &MonomialOrder,
    vars: &VarSet,
    k: &PrimeField,
) -> GroebnerBasis {
    let mut all: Vec<Poly> = gens.to_vec();
    for m in u.minimal_generators(vars) {
        all.push(Poly::monomial(m, Fp::ONE, ormord.clone()));
    }
    buchberger(&all, ormord, k)
}

/// Derives the truncation basis at `u` from a reduced basis computed at a
/// finer point (or from an untruncated basis), by truncating every element
/// and adjoining the minimal truncation generators.
///
/// Valid when the fine basis is the truncated fiber basis plus truncation
/// generators: guaranteed for block orders eliminating the x-block at good
/// specialization points, and for DRL when no leading monomial meets the
/// z-block. Callers keep the staircase-stability check on as a backstop.
pub fn derive_truncation_basis(
    fine: &GroebnerBasis,
    u: &TruncationPoint,
    vars: &VarSet,
    k: &PrimeField,
) -> GroebnerBasis {
    let mut gens: Vec<Poly> = Vec::new();
    for m in u.minimal_generators(vars) {
        gens.push(Poly::monomial(m, Fp::ONE, fine.order().clone()));
    }
    for g in fine.generators() {
        let t = u.truncate(g, vars, k);
        if t.is_zero() {
            continue;
        }
        if t.leading_monomial().unwrap().supported_in(vars.z_range()) {
            // truncation generator of the finer point, superseded above
            continue;
        }
        gens.push(t);
    }
    gens.sort_by(|a, b| {
        fine.order().compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    GroebnerBasis::from_reduced_parts(gens, fine.order().clone())
}

/// Verifies that the staircase of a truncation basis is the product of the
/// expansion monomials with the degree-zero fiber staircase `s1_x`, and
/// returns it.
pub fn check_staircase_stability(
    h_u: &GroebnerBasis,
    u: &TruncationPoint,
    s1_x: &[Monomial],
    vars: &VarSet,
    k: &PrimeField,
) -> Result<Staircase, Error> {
    let stairs = h_u.staircase(k)?;
    let vs = u.expansion_monomials(vars);
    if stairs.len() != vs.len() * s1_x.len() {
        return Err(Error::StaircaseUnstable);
    }
    for v in &vs {
        for w in s1_x {
            if stairs.position(&v.mul(w)).is_none() {
                return Err(Error::StaircaseUnstable);
            }
        }
    }
    Ok(stairs)
}

/// Lifts `g` to the successor truncation point using the reduced basis
/// `h_v` there: writes the normal form of `g` as the unique combination of
/// the normal forms of (new monomial) x (target staircase) and subtracts
/// it. A missing or non-unique combination signals a bad specialization
/// point.
pub fn lift_step(
    g: &TruncatedLift,
    h_v: &GroebnerBasis,
    s_v: &Staircase,
    s_target: &[Monomial],
    vars: &VarSet,
    k: &PrimeField,
) -> Result<TruncatedLift, Error> {
    let v = g.at().succ(vars);
    let body = g.body().resorted(h_v.order().clone());
    let c = nf_vector(&body, h_v, s_v, k);
    if c.iter().all(|x| x.is_zero()) {
        return Ok(TruncatedLift::new(body, v));
    }
    let cols: Vec<Vec<Fp>> = s_target
        .iter()
        .map(|w| {
            let vw = Poly::monomial(v.monomial().mul(w), Fp::ONE, h_v.order().clone());
            nf_vector(&vw, h_v, s_v, k)
        })
        .collect();
    let alpha = solve_unique(&Mat::from_cols(&cols), &[c], k)?.remove(0);
    let mut corrected = body;
    for (w, &a) in s_target.iter().zip(&alpha) {
        if !a.is_zero() {
            let t = Poly::monomial(v.monomial().mul(w), a, corrected.order().clone());
            corrected = corrected.sub(&t, k);
        }
    }
    debug_assert!(h_v.normal_form(&corrected, k).is_zero());
    Ok(TruncatedLift::new(corrected, v))
}

/// Shared state for lifting a whole set of elements between two truncation
/// points against one basis: the coefficient matrix over all intermediate
/// monomials is assembled once and every element is solved in one
/// elimination.
pub struct BatchLifter<'a> {
    h: &'a GroebnerBasis,
    s_h: Staircase,
    from: TruncationPoint,
    to: TruncationPoint,
    products: Vec<Monomial>,
    matrix: Mat,
}

impl<'a> BatchLifter<'a> {
    pub fn new(
        h: &'a GroebnerBasis,
        from: &TruncationPoint,
        to: &TruncationPoint,
        s_target: &[Monomial],
        vars: &VarSet,
        k: &PrimeField,
    ) -> Result<BatchLifter<'a>, Error> {
        let s_h = h.staircase(k)?;
        let new_points: Vec<Monomial> = to
            .expansion_monomials(vars)
            .into_iter()
            .filter(|m| from.cuts(m))
            .collect();
        let mut products = Vec::new();
        let mut cols = Vec::new();
        for p in &new_points {
            for w in s_target {
                let m = p.mul(w);
                cols.push(nf_vector(
                    &Poly::monomial(m.clone(), Fp::ONE, h.order().clone()),
                    h,
                    &s_h,
                    k,
                ));
                products.push(m);
            }
        }
        Ok(BatchLifter {
            h,
            s_h,
            from: from.clone(),
            to: to.clone(),
            products,
            matrix: Mat::from_cols(&cols),
        })
    }

    /// Dimensions of the lift system (rows, columns).
    pub fn system_size(&self) -> (usize, usize) {
        (self.matrix.nrows(), self.matrix.ncols())
    }

    /// Lifts every element in one linear solve; all elements must sit at
    /// the batch's starting point.
    pub fn lift_all(
        &self,
        elems: &[TruncatedLift],
        k: &PrimeField,
    ) -> Result<Vec<TruncatedLift>, Error> {
        let mut rhs = Vec::with_capacity(elems.len());
        let mut bodies = Vec::with_capacity(elems.len());
        for g in elems {
            assert_eq!(g.at(), &self.from, "element not at the batch start");
            let body = g.body().resorted(self.h.order().clone());
            rhs.push(nf_vector(&body, self.h, &self.s_h, k));
            bodies.push(body);
        }
        if self.products.is_empty() || elems.is_empty() {
            return Ok(bodies
                .into_iter()
                .map(|b| TruncatedLift::new(b, self.to.clone()))
                .collect());
        }
        let solutions = solve_unique(&self.matrix, &rhs, k)?;
        let mut out = Vec::with_capacity(elems.len());
        for (body, alpha) in bodies.into_iter().zip(solutions) {
            let mut corrected = body;
            for (m, &a) in self.products.iter().zip(&alpha) {
                if !a.is_zero() {
                    let t = Poly::monomial(m.clone(), a, corrected.order().clone());
                    corrected = corrected.sub(&t, k);
                }
            }
            debug_assert!(self.h.normal_form(&corrected, k).is_zero());
            out.push(TruncatedLift::new(corrected, self.to.clone()));
        }
        Ok(out)
    }
}

/// How `lift_to` reaches the target point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    /// One step per truncation monomial, with intermediate bases derived
    /// from the target basis by truncation.
    Stepwise,
    /// One linear system over all intermediate monomials at once.
    Batch,
}

/// Lifts `g` to `target`, given the reduced basis there.
pub fn lift_to(
    g: &TruncatedLift,
    target: &TruncationPoint,
    h_target: &GroebnerBasis,
    s_target: &[Monomial],
    mode: LiftMode,
    vars: &VarSet,
    k: &PrimeField,
) -> Result<TruncatedLift, Error> {
    if g.at() == target {
        return Ok(g.clone());
    }
    assert_eq!(
        MonomialOrder::Drl.compare(g.at().monomial(), target.monomial()),
        Ordering::Less,
        "target must be beyond the current point"
    );
    match mode {
        LiftMode::Batch => {
            let lifter = BatchLifter::new(h_target, g.at(), target, s_target, vars, k)?;
            Ok(lifter.lift_all(std::slice::from_ref(g), k)?.remove(0))
        }
        LiftMode::Stepwise => {
            let mut cur = g.clone();
            while cur.at() != target {
                let v = cur.at().succ(vars);
                let h_v = if &v == target {
                    h_target.clone()
                } else {
                    derive_truncation_basis(h_target, &v, vars, k)
                };
                let s_v = h_v.staircase(k)?;
                cur = lift_step(&cur, &h_v, &s_v, s_target, vars, k)?;
            }
            Ok(cur)
        }
    }
}
