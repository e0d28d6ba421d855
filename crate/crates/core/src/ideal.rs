use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, reduce};
use crate::poly::{same_ring, MonomialOrder, MultiPoly, PolyRing};

/// A reduced Groebner basis together with the order it was computed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub polys: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        if self.polys.is_empty() {
            return f.clone();
        }
        reduce(f, &self.polys, self.order)
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant() && !p.is_zero())
    }
}

/// A finitely generated ideal with an idempotently filled Groebner cache.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<MultiPoly>,
    cache: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists. Use [`Ideal::equal`] for
    /// mathematical equality of the generated ideals.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, generators: Vec<MultiPoly>) -> Result<Self> {
        for g in &generators {
            same_ring(&ring, g.ring())?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring,
            generators,
            cache: OnceLock::new(),
        })
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal {
            ring,
            generators: Vec::new(),
            cache: OnceLock::new(),
        }
    }

    pub fn unit(ring: Arc<PolyRing>) -> Self {
        let one = MultiPoly::one(&ring);
        Ideal {
            ring,
            generators: vec![one],
            cache: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// The reduced Groebner basis under `order`. Fills the cache on first
    /// use; a request under a different order recomputes without caching.
    pub fn groebner(&self, order: MonomialOrder) -> GroebnerBasis {
        if let Some(gb) = self.cache.get() {
            if gb.order == order {
                return gb.clone();
            }
            return GroebnerBasis {
                order,
                polys: buchberger(&self.generators, order),
            };
        }
        let gb = GroebnerBasis {
            order,
            polys: buchberger(&self.generators, order),
        };
        let _ = self.cache.set(gb.clone());
        gb
    }

    /// The ideal with its reduced basis cached under `order`; the basis also
    /// replaces the generator list (it generates the same ideal).
    pub fn with_basis(&self, order: MonomialOrder) -> Ideal {
        let gb = self.groebner(order);
        let out = Ideal {
            ring: Arc::clone(&self.ring),
            generators: gb.polys.clone(),
            cache: OnceLock::new(),
        };
        let _ = out.cache.set(gb);
        out
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.cache.get()
    }

    /// Unique remainder modulo the cached reduced basis. Errors when no basis
    /// has been cached yet.
    pub fn normal_form(&self, f: &MultiPoly) -> Result<MultiPoly> {
        same_ring(&self.ring, f.ring())?;
        let gb = self.cache.get().ok_or(Error::MissingBasis)?;
        Ok(gb.normal_form(f))
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        same_ring(&self.ring, f.ring())?;
        Ok(self.groebner(MonomialOrder::GrevLex).contains(f))
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.groebner(MonomialOrder::GrevLex).is_unit_ideal()
    }

    /// Mathematical equality via reduced bases under a shared order.
    pub fn equal(&self, other: &Ideal) -> Result<bool> {
        same_ring(&self.ring, other.ring())?;
        let a = self.groebner(MonomialOrder::GrevLex);
        let b = other.groebner(MonomialOrder::GrevLex);
        Ok(a.polys == b.polys)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, other.ring())?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(Arc::clone(&self.ring), gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        same_ring(&self.ring, other.ring())?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(Arc::clone(&self.ring), gens)
    }

    /// `self^e`, with `self^0` the unit ideal.
    pub fn power(&self, e: usize) -> Result<Ideal> {
        let mut out = Ideal::unit(Arc::clone(&self.ring));
        for _ in 0..e {
            out = out.product(self)?;
            // trim redundant generators to keep powers manageable
            out = out.with_basis(MonomialOrder::GrevLex);
        }
        Ok(out)
    }
}

/// Cache the reduced basis for `(ideal, order)` on a fresh ideal value.
pub fn run_buchberger(ideal: &Ideal, order: MonomialOrder) -> Ideal {
    ideal.with_basis(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring_xy() -> Arc<PolyRing> {
        PolyRing::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn zero_and_unit_ideals() {
        let r = ring_xy();
        let z = Ideal::zero(Arc::clone(&r));
        assert!(z.groebner(MonomialOrder::Lex).polys.is_empty());
        let u = Ideal::unit(Arc::clone(&r));
        let gb = u.groebner(MonomialOrder::Lex);
        assert_eq!(gb.polys, vec![MultiPoly::one(&r)]);
    }

    #[test]
    fn normal_form_requires_cached_basis() {
        let r = ring_xy();
        let i = Ideal::new(Arc::clone(&r), vec![parse_poly(&r, "x").unwrap()]).unwrap();
        let f = parse_poly(&r, "x + y").unwrap();
        assert_eq!(i.normal_form(&f), Err(Error::MissingBasis));
        let i = i.with_basis(MonomialOrder::GrevLex);
        assert_eq!(i.normal_form(&f).unwrap(), parse_poly(&r, "y").unwrap());
    }

    #[test]
    fn membership_of_generators() {
        let r = ring_xy();
        let i = Ideal::new(
            Arc::clone(&r),
            vec![
                parse_poly(&r, "x^2 - y").unwrap(),
                parse_poly(&r, "x*y - 1").unwrap(),
            ],
        )
        .unwrap();
        let i = i.with_basis(MonomialOrder::GrevLex);
        for g in i.generators() {
            assert!(i.contains(g).unwrap());
        }
        // the unit stays itself modulo a proper ideal
        let one = MultiPoly::one(&r);
        assert_eq!(i.normal_form(&one).unwrap(), one);
        assert!(!i.contains(&one).unwrap());
    }

    #[test]
    fn ideal_equality_under_permutation_and_combination() {
        let r = ring_xy();
        let a = Ideal::new(
            Arc::clone(&r),
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
        )
        .unwrap();
        let b = Ideal::new(
            Arc::clone(&r),
            vec![parse_poly(&r, "y").unwrap(), parse_poly(&r, "x").unwrap()],
        )
        .unwrap();
        let c = Ideal::new(
            Arc::clone(&r),
            vec![
                parse_poly(&r, "x + y").unwrap(),
                parse_poly(&r, "y").unwrap(),
            ],
        )
        .unwrap();
        assert!(a.equal(&b).unwrap());
        assert!(a.equal(&c).unwrap());
        let d = Ideal::new(Arc::clone(&r), vec![parse_poly(&r, "x^2").unwrap()]).unwrap();
        let e = Ideal::new(Arc::clone(&r), vec![parse_poly(&r, "x").unwrap()]).unwrap();
        assert!(!d.equal(&e).unwrap());
    }

    #[test]
    fn powers() {
        let r = ring_xy();
        let m = Ideal::new(
            Arc::clone(&r),
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
        )
        .unwrap();
        let m2 = m.power(2).unwrap();
        assert!(m2.contains(&parse_poly(&r, "x*y").unwrap()).unwrap());
        assert!(!m2.contains(&parse_poly(&r, "x").unwrap()).unwrap());
    }
}
