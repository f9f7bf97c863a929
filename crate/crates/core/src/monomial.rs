//! Monomials as exponent vectors and the monomial orders used throughout:
//! degree reverse lexicographic, lexicographic and block compositions.

use std::cmp::Ordering;
use std::fmt;

/// A monomial over a fixed variable list: one exponent per variable, with
/// the total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Monomial {
        Monomial { exps: vec![0; num_vars], degree: 0 }
    }

    pub fn var(index: usize, num_vars: usize) -> Monomial {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree summed over a variable index range.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }

    /// True when every nonzero exponent lies in `range`.
    pub fn supported_in(&self, range: std::ops::Range<usize>) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || range.contains(&i))
    }

    /// Keeps the exponents inside `range`, zeroing the others.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        exps[range.clone()].copy_from_slice(&self.exps[range]);
        Monomial::from_exps(exps)
    }

    /// True when the monomial is a power of a single variable (or 1).
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() <= 1
    }

    /// Embeds the monomial into a ring with permuted variables:
    /// `perm[i]` is the new index of old variable `i`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (old, &new) in perm.iter().enumerate() {
            exps[new] = self.exps[old];
        }
        Monomial { exps, degree: self.degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// A monomial order over a contiguous slice of the variable list.
///
/// `Block` compares the first `split` variables with one order and breaks
/// ties on the remaining ones, so elimination orders are nested blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree first, ties broken reverse lexicographically: the monomial
    /// with the larger exponent in the last differing variable is smaller.
    Drl,
    /// Straight lexicographic comparison.
    Lex,
    Block {
        split: usize,
        top: Box<MonomialOrder>,
        rest: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order comparing variables `[0, split)` with `top` first.
    pub fn block(split: usize, top: MonomialOrder, rest: MonomialOrder) -> MonomialOrder {
        MonomialOrder::Block { split, top: Box::new(top), rest: Box::new(rest) }
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.num_vars(), v.num_vars(), "monomial scope mismatch");
        self.cmp_slices(u.exps(), v.exps())
    }

    fn cmp_slices(&self, u: &[u32], v: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Drl => {
                let du: u32 = u.iter().sum();
                let dv: u32 = v.iter().sum();
                match du.cmp(&dv) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for i in (0..u.len()).rev() {
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => {}
                        // last nonzero exponent of u/v positive => u smaller
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Less => return Ordering::Greater,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..u.len() {
                    match u[i].cmp(&v[i]) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { split, top, rest } => {
                let s = (*split).min(u.len());
                top.cmp_slices(&u[..s], &v[..s])
                    .then_with(|| rest.cmp_slices(&u[s..], &v[s..]))
            }
        }
    }

    /// The larger of two monomials.
    pub fn max<'a>(&self, u: &'a Monomial, v: &'a Monomial) -> &'a Monomial {
        if self.compare(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

/// The variable list of the working polynomial ring, partitioned into the
/// leading x-block `[0, num_x)` and the trailing z-block `[num_x, n)`.
/// Within each block, variables keep their declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    num_x: usize,
}

impl VarSet {
    /// All variables in the x-block (no fiber variables yet).
    pub fn unsplit(names: Vec<String>) -> VarSet {
        let num_x = names.len();
        VarSet { names, num_x }
    }

    pub fn split(names: Vec<String>, num_x: usize) -> VarSet {
        assert!(num_x <= names.len());
        VarSet { names, num_x }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn num_z(&self) -> usize {
        self.names.len() - self.num_x
    }

    pub fn x_range(&self) -> std::ops::Range<usize> {
        0..self.num_x
    }

    pub fn z_range(&self) -> std::ops::Range<usize> {
        self.num_x..self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Formats a monomial like `x1^2*z` using the variable names; `1` for the
/// constant monomial.
pub fn format_monomial(m: &Monomial, vars: &VarSet) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}
