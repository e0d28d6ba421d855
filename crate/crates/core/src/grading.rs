//! Torus actions as integer weight assignments: weight decompositions,
//! isotypic components, and affine-weight-monoid membership.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{rref, Q};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};

/// A character of a split torus G_m^r, identified with a point of Z^r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, c: i64) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn dot(&self, other: &WeightVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn max_norm(&self) -> i64 {
        self.0.iter().map(|w| w.abs()).max().unwrap_or(0)
    }
}

impl std::fmt::Display for WeightVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// A split torus action on a polynomial ring: one weight vector per variable.
/// Weights are action weights: the coordinate `x_i` of weight `w` satisfies
/// `x_i(t · p) = t^w x_i(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusAction {
    rank: usize,
    weights: Vec<WeightVector>,
}

impl TorusAction {
    pub fn new(rank: usize, weights: Vec<WeightVector>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::DimensionMismatch(
                "torus rank must be positive".into(),
            ));
        }
        for w in &weights {
            if w.rank() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "weight {w} has rank != {rank}"
                )));
            }
        }
        Ok(TorusAction { rank, weights })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn variable_weight(&self, i: usize) -> &WeightVector {
        &self.weights[i]
    }

    pub fn variable_weights(&self) -> &[WeightVector] {
        &self.weights
    }

    /// The weight of a monomial: exponents paired against variable weights.
    pub fn weight_of(&self, m: &Monomial) -> Result<WeightVector> {
        if m.nvars() != self.weights.len() {
            return Err(Error::DimensionMismatch(format!(
                "monomial has {} variables, action covers {}",
                m.nvars(),
                self.weights.len()
            )));
        }
        let mut acc = WeightVector::zero(self.rank);
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                acc = acc.add(&self.weights[i].scaled(e as i64));
            }
        }
        Ok(acc)
    }
}

/// Weight-homogeneous pieces of a polynomial; no zero pieces, and the pieces
/// sum back to the input.
pub fn homogeneous_components(
    f: &MultiPoly,
    action: &TorusAction,
) -> Result<BTreeMap<WeightVector, MultiPoly>> {
    let mut out: BTreeMap<WeightVector, MultiPoly> = BTreeMap::new();
    for (m, c) in f.terms() {
        let w = action.weight_of(m)?;
        out.entry(w)
            .or_insert_with(|| MultiPoly::zero(f.ring()))
            .add_term(m.clone(), c.clone());
    }
    Ok(out)
}

/// Is `f` concentrated in a single weight? Zero counts as homogeneous.
pub fn is_homogeneous(f: &MultiPoly, action: &TorusAction) -> Result<bool> {
    Ok(homogeneous_components(f, action)?.len() <= 1)
}

/// A finite set of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSet {
    members: BTreeSet<WeightVector>,
}

impl CharacterSet {
    pub fn new(members: impl IntoIterator<Item = WeightVector>) -> Self {
        CharacterSet {
            members: members.into_iter().collect(),
        }
    }

    pub fn contains(&self, chi: &WeightVector) -> bool {
        self.members.contains(chi)
    }

    pub fn iter(&self) -> impl Iterator<Item = &WeightVector> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Searches for an integer functional pairing strictly positively with every
/// given weight, by increasing max-norm with lexicographic tie-break.
///
/// `Ok(None)` is a proof of absence: it is returned exactly when 0 lies in
/// the convex hull of the weights, tested exactly on small affinely
/// independent subsets. Returns an error for an empty weight list or when the
/// search cap is exceeded (which existence makes practically unreachable).
pub fn positive_functional(rank: usize, weights: &[WeightVector]) -> Result<Option<WeightVector>> {
    if weights.is_empty() {
        return Err(Error::Precondition(
            "positive_functional requires a nonempty weight list".into(),
        ));
    }
    if zero_in_convex_hull(rank, weights) {
        return Ok(None);
    }
    const NORM_CAP: i64 = 64;
    for norm in 1..=NORM_CAP {
        // all of [-norm, norm]^rank in lexicographic order, outer shell only
        let mut candidate = vec![-norm; rank];
        'shell: loop {
            let lambda = WeightVector(candidate.clone());
            if lambda.max_norm() == norm && weights.iter().all(|w| lambda.dot(w) > 0) {
                return Ok(Some(lambda));
            }
            let mut k = rank;
            while k > 0 {
                k -= 1;
                if candidate[k] < norm {
                    candidate[k] += 1;
                    for v in candidate.iter_mut().skip(k + 1) {
                        *v = -norm;
                    }
                    continue 'shell;
                }
            }
            break;
        }
    }
    Err(Error::ResourceCap(format!(
        "no positive functional of max-norm <= {NORM_CAP} found"
    )))
}

/// Exact test whether 0 is a convex combination of the given weights.
fn zero_in_convex_hull(rank: usize, weights: &[WeightVector]) -> bool {
    // Caratheodory: it suffices to look at subsets of size <= rank + 1 whose
    // combination is unique.
    let n = weights.len();
    let max_size = (rank + 1).min(n);
    let mut subset: Vec<usize> = Vec::new();
    fn search(
        weights: &[WeightVector],
        rank: usize,
        start: usize,
        size: usize,
        subset: &mut Vec<usize>,
    ) -> bool {
        if subset.len() == size {
            return zero_in_hull_of(weights, rank, subset);
        }
        for i in start..weights.len() {
            subset.push(i);
            if search(weights, rank, i + 1, size, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }
    for size in 1..=max_size {
        if search(weights, rank, 0, size, &mut subset) {
            return true;
        }
    }
    false
}

fn zero_in_hull_of(weights: &[WeightVector], rank: usize, subset: &[usize]) -> bool {
    let s = subset.len();
    // rows: one per torus coordinate plus the affine constraint sum(c) = 1,
    // augmented with the right-hand side
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(rank + 1);
    for coord in 0..rank {
        let mut row: Vec<Q> = subset
            .iter()
            .map(|&j| Q::from_integer(weights[j].0[coord].into()))
            .collect();
        row.push(Q::zero());
        rows.push(row);
    }
    let mut affine: Vec<Q> = vec![Q::from_integer(1.into()); s];
    affine.push(Q::from_integer(1.into()));
    rows.push(affine);

    let pivots = rref(&mut rows);
    // inconsistent system: pivot in the augmented column
    if pivots.contains(&s) {
        return false;
    }
    // affinely dependent subset: skip, a smaller subset witnesses instead
    if pivots.len() != s {
        return false;
    }
    let coeffs: Vec<Q> = rows.iter().map(|r| r[s].clone()).collect();
    coeffs.iter().all(|c| *c >= Q::zero())
}

/// A finitely generated submonoid of the character lattice, presented by its
/// generators. Membership is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMonoid {
    rank: usize,
    generators: Vec<WeightVector>,
}

impl WeightMonoid {
    pub fn new(rank: usize, generators: Vec<WeightVector>) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "monoid generator {g} has rank != {rank}"
                )));
            }
        }
        Ok(WeightMonoid { rank, generators })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[WeightVector] {
        &self.generators
    }

    /// True iff `chi` is a nonnegative integer combination of the generators.
    ///
    /// With a strictly positive functional on the generators the search is a
    /// bounded branch-and-bound over coefficient vectors. Without one (the
    /// cone has a nontrivial lineality part) the question is decided exactly
    /// through Laurent-monomial subalgebra membership.
    pub fn contains(&self, chi: &WeightVector) -> Result<bool> {
        if chi.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "character {chi} has rank != {}",
                self.rank
            )));
        }
        if chi.is_zero() {
            return Ok(true);
        }
        let mut gens: Vec<WeightVector> = self
            .generators
            .iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect();
        gens.sort();
        gens.dedup();
        if gens.is_empty() {
            return Ok(false);
        }
        match positive_functional(self.rank, &gens)? {
            Some(phi) => Ok(bounded_combination_search(chi, &gens, &phi, 0)),
            None => self.laurent_membership(chi, &gens),
        }
    }

    fn laurent_membership(&self, chi: &WeightVector, gens: &[WeightVector]) -> Result<bool> {
        let r = self.rank;
        let mut names: Vec<String> = (0..r).map(|i| format!("t{i}")).collect();
        names.extend((0..r).map(|i| format!("s{i}")));
        let ring = PolyRing::new(names)?;
        let laurent_mono = |w: &WeightVector| -> MultiPoly {
            let mut exps = vec![0u32; 2 * r];
            for (i, &wi) in w.0.iter().enumerate() {
                if wi >= 0 {
                    exps[i] = wi as u32;
                } else {
                    exps[r + i] = (-wi) as u32;
                }
            }
            MultiPoly::monomial(&ring, Monomial::new(exps), num_traits::One::one())
        };
        let mut relations = Vec::with_capacity(r);
        for i in 0..r {
            let t = MultiPoly::var(&ring, i);
            let s = MultiPoly::var(&ring, r + i);
            relations.push(t.mul(&s).sub(&MultiPoly::one(&ring)));
        }
        let pres = Ideal::new(Arc::clone(&ring), relations)?;
        let gen_polys: Vec<MultiPoly> = gens.iter().map(&laurent_mono).collect();
        let f = laurent_mono(chi);
        Ok(crate::elim::subalgebra_membership(&f, &gen_polys, &pres)?.is_some())
    }
}

fn bounded_combination_search(
    target: &WeightVector,
    gens: &[WeightVector],
    phi: &WeightVector,
    idx: usize,
) -> bool {
    if idx == gens.len() {
        return target.is_zero();
    }
    let height = phi.dot(target);
    if height < 0 {
        return false;
    }
    let step = phi.dot(&gens[idx]);
    debug_assert!(step > 0);
    let max_c = height / step;
    for c in 0..=max_c {
        let rem = target.sub(&gens[idx].scaled(c));
        if bounded_combination_search(&rem, gens, phi, idx + 1) {
            return true;
        }
    }
    false
}

/// A presented quotient algebra with a torus weight assignment on the ambient
/// variables. The defining ideal must be weight-homogeneous.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    ring: Arc<PolyRing>,
    defining_ideal: Ideal,
    action: TorusAction,
}

impl GradedAlgebra {
    pub fn new(ring: Arc<PolyRing>, defining_ideal: Ideal, action: TorusAction) -> Result<Self> {
        crate::poly::same_ring(&ring, defining_ideal.ring())?;
        if action.nvars() != ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "action covers {} variables, ring has {}",
                action.nvars(),
                ring.nvars()
            )));
        }
        for g in defining_ideal.generators() {
            if !is_homogeneous(g, &action)? {
                return Err(Error::Inhomogeneous(format!("generator {g}")));
            }
        }
        Ok(GradedAlgebra {
            ring,
            defining_ideal,
            action,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining_ideal
    }

    pub fn action(&self) -> &TorusAction {
        &self.action
    }

    /// Basis (as reduced normal-form representatives) of the span of algebra
    /// elements with weight in `chars` and total degree at most the bound.
    pub fn isotypic_component(
        &self,
        chars: &CharacterSet,
        degree_bound: u32,
    ) -> Result<IsotypicBasis> {
        let gb = self.defining_ideal.groebner(MonomialOrder::GrevLex);
        let mut nfs: Vec<MultiPoly> = Vec::new();
        for m in monomials_up_to_degree(self.ring.nvars(), degree_bound) {
            let w = self.action.weight_of(&m)?;
            if !chars.contains(&w) {
                continue;
            }
            let nf = gb.normal_form(&MultiPoly::monomial(&self.ring, m, num_traits::One::one()));
            if !nf.is_zero() {
                nfs.push(nf);
            }
        }
        Ok(IsotypicBasis::from_spanning(&self.ring, nfs))
    }
}

/// A finite-dimensional space of normal-form representatives, stored as
/// reduced row-echelon combinations of its monomial support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicBasis {
    basis: Vec<MultiPoly>,
}

impl IsotypicBasis {
    pub fn from_spanning(ring: &Arc<PolyRing>, polys: Vec<MultiPoly>) -> Self {
        let mut support: BTreeSet<Monomial> = BTreeSet::new();
        for p in &polys {
            for (m, _) in p.terms() {
                support.insert(m.clone());
            }
        }
        // columns in descending grevlex, so echelon pivots sit on leading terms
        let support: Vec<Monomial> = support.into_iter().rev().collect();
        let mut rows: Vec<Vec<Q>> = polys
            .iter()
            .map(|p| support.iter().map(|m| p.coeff(m)).collect())
            .collect();
        rref(&mut rows);
        let basis = rows
            .into_iter()
            .map(|row| {
                MultiPoly::from_terms(
                    ring,
                    row.into_iter()
                        .zip(&support)
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, m)| (m.clone(), c)),
                )
            })
            .collect();
        IsotypicBasis { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }
}

/// All monomials in `nvars` variables of total degree at most `d`, in
/// ascending grevlex order.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, left: u32) {
        if var == exps.len() {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(out, exps, var + 1, left - e);
        }
        exps[var] = 0;
    }
    rec(&mut out, &mut exps, 0, d);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    #[test]
    fn weight_of_monomials() {
        let act = TorusAction::new(1, vec![w(&[1]), w(&[-1])]).unwrap();
        let m = Monomial::new(vec![2, 1]); // x^2 y
        assert_eq!(act.weight_of(&m).unwrap(), w(&[1]));
        assert_eq!(act.weight_of(&Monomial::one(2)).unwrap(), w(&[0]));

        let act2 = TorusAction::new(2, vec![w(&[1, 0]), w(&[0, 1])]).unwrap();
        assert_eq!(
            act2.weight_of(&Monomial::new(vec![1, 1])).unwrap(),
            w(&[1, 1])
        );
    }

    #[test]
    fn components_split_and_sum() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let act = TorusAction::new(1, vec![w(&[1]), w(&[-1])]).unwrap();
        let f = parse_poly(&r, "x + y").unwrap();
        let comps = homogeneous_components(&f, &act).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&w(&[1])], parse_poly(&r, "x").unwrap());
        assert_eq!(comps[&w(&[-1])], parse_poly(&r, "y").unwrap());
        let total = comps
            .values()
            .fold(MultiPoly::zero(&r), |acc, p| acc.add(p));
        assert_eq!(total, f);

        let hom = parse_poly(&r, "x^2 + 3*x^2").unwrap();
        assert_eq!(homogeneous_components(&hom, &act).unwrap().len(), 1);
        assert!(homogeneous_components(&MultiPoly::zero(&r), &act)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn isotypic_components_of_small_quotients() {
        let r = PolyRing::new(vec!["x"]).unwrap();
        let act = TorusAction::new(1, vec![w(&[1])]).unwrap();
        let free =
            GradedAlgebra::new(Arc::clone(&r), Ideal::zero(Arc::clone(&r)), act.clone()).unwrap();
        let chi2 = CharacterSet::new([w(&[2])]);
        let b = free.isotypic_component(&chi2, 3).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis()[0], parse_poly(&r, "x^2").unwrap());

        let nil = GradedAlgebra::new(
            Arc::clone(&r),
            Ideal::new(Arc::clone(&r), vec![parse_poly(&r, "x^2").unwrap()]).unwrap(),
            act,
        )
        .unwrap();
        assert_eq!(nil.isotypic_component(&chi2, 3).unwrap().dim(), 0);

        let r2 = PolyRing::new(vec!["x", "y"]).unwrap();
        let act2 = TorusAction::new(1, vec![w(&[1]), w(&[-1])]).unwrap();
        let hyp = GradedAlgebra::new(
            Arc::clone(&r2),
            Ideal::new(Arc::clone(&r2), vec![parse_poly(&r2, "x*y").unwrap()]).unwrap(),
            act2,
        )
        .unwrap();
        let chi0 = CharacterSet::new([w(&[0])]);
        let b = hyp.isotypic_component(&chi0, 4).unwrap();
        assert_eq!(b.dim(), 1);
        assert_eq!(b.basis()[0], parse_poly(&r2, "1").unwrap());
    }

    #[test]
    fn inhomogeneous_ideal_rejected() {
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let act = TorusAction::new(1, vec![w(&[1]), w(&[-1])]).unwrap();
        let bad = Ideal::new(Arc::clone(&r), vec![parse_poly(&r, "x + y").unwrap()]).unwrap();
        assert!(matches!(
            GradedAlgebra::new(Arc::clone(&r), bad, act),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn monoid_membership_pointed() {
        let s = WeightMonoid::new(1, vec![w(&[1])]).unwrap();
        assert!(s.contains(&w(&[3])).unwrap());
        assert!(!s.contains(&w(&[-1])).unwrap());
        assert!(s.contains(&w(&[0])).unwrap());

        let s2 = WeightMonoid::new(2, vec![w(&[1, 0]), w(&[1, 2])]).unwrap();
        assert!(s2.contains(&w(&[2, 2])).unwrap());
        assert!(!s2.contains(&w(&[0, 1])).unwrap());
    }

    #[test]
    fn monoid_membership_with_lineality() {
        // generators span a line: membership through the Laurent route
        let s = WeightMonoid::new(1, vec![w(&[1]), w(&[-1])]).unwrap();
        assert!(s.contains(&w(&[5])).unwrap());
        assert!(s.contains(&w(&[-4])).unwrap());

        let s2 = WeightMonoid::new(2, vec![w(&[1, 0]), w(&[-1, 0])]).unwrap();
        assert!(s2.contains(&w(&[3, 0])).unwrap());
        assert!(!s2.contains(&w(&[0, 1])).unwrap());
    }

    #[test]
    fn positive_functional_search() {
        assert_eq!(positive_functional(1, &[w(&[1])]).unwrap(), Some(w(&[1])));
        assert_eq!(
            positive_functional(2, &[w(&[1, 0]), w(&[0, 1])]).unwrap(),
            Some(w(&[1, 1]))
        );
        assert_eq!(positive_functional(1, &[w(&[1]), w(&[-1])]).unwrap(), None);
        // zero weight can never pair strictly positively
        assert_eq!(positive_functional(2, &[w(&[0, 0])]).unwrap(), None);
    }

    #[test]
    fn membership_closed_under_addition() {
        let s = WeightMonoid::new(2, vec![w(&[1, 0]), w(&[1, 2]), w(&[0, 3])]).unwrap();
        let members: Vec<WeightVector> = vec![w(&[2, 2]), w(&[1, 5]), w(&[3, 0])];
        for a in &members {
            assert!(s.contains(a).unwrap());
            for b in &members {
                assert!(s.contains(&a.add(b)).unwrap());
            }
        }
    }
}
