use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::{same_ring, PolyRing};

/// A sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map with no zero coefficients; the map's key order is
/// grevlex ascending, so iteration is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MultiPoly {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        MultiPoly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), i), BigRational::one());
        MultiPoly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn from_terms<I>(ring: &Arc<PolyRing>, it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        assert_eq!(m.nvars(), self.ring.nvars());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading term under `order`, if nonzero.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &BigRational)> {
        match order {
            // map order is grevlex ascending, so the last entry leads
            MonomialOrder::GrevLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, other.ring, "ring mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, other.ring, "ring mismatch in sub");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, q)| (m.clone(), q * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MultiPoly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(mm, q)| (mm.mul(m), q * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ring, other.ring, "ring mismatch in mul");
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            for (mm, cc) in &other.terms {
                out.add_term(m.mul(mm), c * cc);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = Self::one(&self.ring);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Divide by a constant, normalizing the leading coefficient.
    pub fn monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Substitute each variable by the given image polynomial. The images
    /// must all live in one ring, which becomes the result ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        assert_eq!(images.len(), self.ring.nvars(), "substitution arity");
        let target = images
            .first()
            .map(|p| Arc::clone(p.ring()))
            .unwrap_or_else(|| Arc::clone(&self.ring));
        for img in images {
            same_ring(&target, img.ring())?;
        }
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut piece = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    piece = piece.mul(&images[i].pow(e));
                }
            }
            out = out.add(&piece);
        }
        Ok(out)
    }

    /// Evaluate at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ring.nvars(), "evaluation arity");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        acc
    }

    /// Image of the polynomial in a ring containing the same variable names
    /// (by name lookup). Errors if a used variable is missing in the target.
    pub fn lift_to(&self, target: &Arc<PolyRing>) -> Result<MultiPoly> {
        let map: Vec<Option<usize>> = (0..self.ring.nvars())
            .map(|i| target.var_index(self.ring.var_name(i)))
            .collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(crate::error::Error::BadVariables(format!(
                                "variable `{}` missing in target ring",
                                self.ring.var_name(i)
                            )))
                        }
                    }
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Variables actually occurring.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }
}

fn fmt_coeff_abs(c: &BigRational) -> String {
    let a = c.abs();
    if a.is_integer() {
        format!("{}", a.numer())
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn fmt_monomial(ring: &PolyRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 1 {
            parts.push(ring.var_name(i).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ring.var_name(i), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms descending in grevlex, coefficients in lowest
    /// terms, e.g. `3/2*x1^2*x2 - x3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff = fmt_coeff_abs(c);
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{}", fmt_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", coeff, fmt_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}
