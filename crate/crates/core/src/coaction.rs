//! Presentations of algebraic groups and monoids with their (co)actions:
//! saturation of ideals, the universal-quotient descent tower, Kempf
//! one-parameter-subgroup search, and center-invariant triviality.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::elim::SubalgebraTester;
use crate::error::{Error, Result};
use crate::grading::{
    homogeneous_components, positive_functional, TorusAction, WeightMonoid, WeightVector,
};
use crate::groebner::reduce;
use crate::ideal::Ideal;
use crate::linalg::{invert, nullspace, LinearSubspace, Q};
use crate::poly::{same_ring, Monomial, MonomialOrder, MultiPoly, PolyRing};

/// Coordinate-ring presentation of a linear group acting linearly on an
/// affine space.
///
/// The action is carried as two polynomial matrices over O(G): the forward
/// matrix `rho(g)` and the inverse matrix `rho(g^{-1})`. The substitution
/// `x_j -> sum_i rho(g^{-1})_{ji} x_i` realizes the representation structure
/// `(g.f)(x) = f(g^{-1} x)` on the coordinate ring; the forward substitution
/// is the comorphism of the action map and is the one that extends over a
/// monoid closure.
#[derive(Debug, Clone)]
pub struct GroupPresentation {
    ring: Arc<PolyRing>,
    relations: Ideal,
    action: Vec<Vec<MultiPoly>>,
    inverse_action: Vec<Vec<MultiPoly>>,
    identity: Vec<Q>,
}

impl GroupPresentation {
    pub fn new(
        ring: Arc<PolyRing>,
        relations: Ideal,
        action: Vec<Vec<MultiPoly>>,
        inverse_action: Vec<Vec<MultiPoly>>,
        identity: Vec<Q>,
    ) -> Result<Self> {
        same_ring(&ring, relations.ring())?;
        let n = action.len();
        if inverse_action.len() != n {
            return Err(Error::DimensionMismatch(
                "action and inverse-action matrices differ in size".into(),
            ));
        }
        for row in action.iter().chain(&inverse_action) {
            if row.len() != n {
                return Err(Error::DimensionMismatch(
                    "action matrix is not square".into(),
                ));
            }
            for entry in row {
                same_ring(&ring, entry.ring())?;
            }
        }
        if identity.len() != ring.nvars() {
            return Err(Error::DimensionMismatch(
                "identity coordinates do not match group variables".into(),
            ));
        }
        let p = GroupPresentation {
            ring,
            relations,
            action,
            inverse_action,
            identity,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let gb = self.relations.groebner(MonomialOrder::GrevLex);
        if gb.is_unit_ideal() {
            return Err(Error::BadPresentation(
                "group relations form the unit ideal".into(),
            ));
        }
        // the identity point satisfies the relations
        for rel in self.relations.generators() {
            if !rel.evaluate(&self.identity).is_zero() {
                return Err(Error::BadPresentation(format!(
                    "identity point does not satisfy relation {rel}"
                )));
            }
        }
        let n = self.dim_rep();
        // both matrices evaluate to the identity matrix at 1_G
        for (name, m) in [
            ("action", &self.action),
            ("inverse action", &self.inverse_action),
        ] {
            for r in 0..n {
                for c in 0..n {
                    let v = m[r][c].evaluate(&self.identity);
                    let expect = if r == c { Q::one() } else { Q::zero() };
                    if v != expect {
                        return Err(Error::BadPresentation(format!(
                            "{name} matrix is not the identity at 1_G (entry {r},{c})"
                        )));
                    }
                }
            }
        }
        // inverse * forward = identity modulo relations
        for r in 0..n {
            for c in 0..n {
                let mut acc = MultiPoly::zero(&self.ring);
                for k in 0..n {
                    acc = acc.add(&self.inverse_action[r][k].mul(&self.action[k][c]));
                }
                let expect = if r == c {
                    MultiPoly::one(&self.ring)
                } else {
                    MultiPoly::zero(&self.ring)
                };
                if !gb.contains(&acc.sub(&expect)) {
                    return Err(Error::BadPresentation(format!(
                        "inverse-action times action is not the identity modulo relations \
                         (entry {r},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn action_matrix(&self) -> &[Vec<MultiPoly>] {
        &self.action
    }

    pub fn inverse_action_matrix(&self) -> &[Vec<MultiPoly>] {
        &self.inverse_action
    }

    pub fn identity_point(&self) -> &[Q] {
        &self.identity
    }

    /// Dimension of the acted space.
    pub fn dim_rep(&self) -> usize {
        self.action.len()
    }

    /// The ring O(G) ⊗ A with group variables first.
    pub fn product_ring(&self, acted: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
        self.ring.extended(acted.var_names().to_vec())
    }

    fn substitution(&self, f: &MultiPoly, matrix: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
        let acted = f.ring();
        if acted.nvars() != self.dim_rep() {
            return Err(Error::DimensionMismatch(format!(
                "acted ring has {} variables, action matrix is {}x{}",
                acted.nvars(),
                self.dim_rep(),
                self.dim_rep()
            )));
        }
        let product = self.product_ring(acted)?;
        let ng = self.ring.nvars();
        let images: Vec<MultiPoly> = (0..self.dim_rep())
            .map(|j| {
                let mut img = MultiPoly::zero(&product);
                for i in 0..self.dim_rep() {
                    let coeff = matrix[j][i].lift_to(&product)?;
                    img = img.add(&coeff.mul(&MultiPoly::var(&product, ng + i)));
                }
                Ok(img)
            })
            .collect::<Result<_>>()?;
        let substituted = f.substitute(&images)?;
        // bring group coefficients into normal form modulo the relations
        let gb = self.relations.groebner(MonomialOrder::GrevLex);
        let lifted: Vec<MultiPoly> = gb
            .polys
            .iter()
            .map(|p| p.lift_to(&product))
            .collect::<Result<_>>()?;
        if lifted.is_empty() {
            return Ok(substituted);
        }
        Ok(reduce(&substituted, &lifted, MonomialOrder::GrevLex))
    }

    /// The representation coaction `f(x) -> f(g^{-1} x)`, expanded in
    /// O(G) ⊗ A and reduced modulo the group relations.
    pub fn coact(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.substitution(f, &self.inverse_action)
    }

    /// The comorphism of the action map, `f(x) -> f(g x)`.
    pub fn comorphism(&self, f: &MultiPoly) -> Result<MultiPoly> {
        self.substitution(f, &self.action)
    }

    /// Group the terms of a product-ring element by group monomial; values
    /// are polynomials in the acted ring.
    pub fn coefficients_by_group_monomial(
        &self,
        h: &MultiPoly,
        acted: &Arc<PolyRing>,
    ) -> BTreeMap<Monomial, MultiPoly> {
        let ng = self.ring.nvars();
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in h.terms() {
            let gm = Monomial::new(m.exps()[..ng].to_vec());
            let xm = Monomial::new(m.exps()[ng..].to_vec());
            out.entry(gm)
                .or_insert_with(|| MultiPoly::zero(acted))
                .add_term(xm, c.clone());
        }
        out
    }

    /// Group the terms of a product-ring element by acted monomial; values
    /// are polynomials in O(G).
    pub fn coefficients_by_acted_monomial(&self, h: &MultiPoly) -> BTreeMap<Monomial, MultiPoly> {
        let ng = self.ring.nvars();
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in h.terms() {
            let gm = Monomial::new(m.exps()[..ng].to_vec());
            let xm = Monomial::new(m.exps()[ng..].to_vec());
            out.entry(xm)
                .or_insert_with(|| MultiPoly::zero(&self.ring))
                .add_term(gm, c.clone());
        }
        out
    }

    /// Evaluate the group variables of a product-ring element at a point of
    /// G, leaving a polynomial in the acted ring.
    pub fn specialize_group(&self, h: &MultiPoly, point: &[Q], acted: &Arc<PolyRing>) -> MultiPoly {
        let ng = self.ring.nvars();
        let mut out = MultiPoly::zero(acted);
        for (m, c) in h.terms() {
            let mut coeff = c.clone();
            for (i, &e) in m.exps()[..ng].iter().enumerate() {
                for _ in 0..e {
                    coeff *= &point[i];
                }
            }
            out.add_term(Monomial::new(m.exps()[ng..].to_vec()), coeff);
        }
        out
    }
}

/// Default cap on saturation rounds; hitting it signals a malformed
/// presentation, since Noetherianity guarantees termination.
pub const DEFAULT_SATURATION_CAP: usize = 32;

/// The smallest G-stable ideal containing `seed`: iterated adjunction of the
/// coefficient polynomials of the coaction with respect to the group-monomial
/// basis of O(G).
pub fn g_saturate(seed: &Ideal, group: &GroupPresentation, cap: usize) -> Result<Ideal> {
    let acted = Arc::clone(seed.ring());
    let mut current = seed.with_basis(MonomialOrder::GrevLex);
    for _ in 0..cap {
        let gb = current.groebner(MonomialOrder::GrevLex);
        let mut additions: Vec<MultiPoly> = Vec::new();
        for f in &gb.polys {
            let h = group.coact(f)?;
            for (_, coeff) in group.coefficients_by_group_monomial(&h, &acted) {
                let nf = gb.normal_form(&coeff);
                if !nf.is_zero() {
                    additions.push(nf);
                }
            }
        }
        if additions.is_empty() {
            return Ok(current);
        }
        let mut gens = gb.polys.clone();
        gens.extend(additions);
        current = Ideal::new(Arc::clone(&acted), gens)?.with_basis(MonomialOrder::GrevLex);
    }
    Err(Error::SaturationCap { cap })
}

/// A presented algebraic monoid with zero lying over its unit group.
#[derive(Debug, Clone)]
pub struct MonoidPresentation {
    group: GroupPresentation,
    monoid_gens: Vec<MultiPoly>,
    zero_point: Vec<Q>,
    central_torus: TorusAction,
    tbar_weight_monoid: WeightMonoid,
    central_embedding: Vec<WeightVector>,
}

impl MonoidPresentation {
    pub fn new(
        group: GroupPresentation,
        monoid_gens: Vec<MultiPoly>,
        zero_point: Vec<Q>,
        central_torus: TorusAction,
        tbar_weight_monoid: WeightMonoid,
        central_embedding: Vec<WeightVector>,
    ) -> Result<Self> {
        for g in &monoid_gens {
            same_ring(group.ring(), g.ring())?;
        }
        if zero_point.len() != monoid_gens.len() {
            return Err(Error::DimensionMismatch(
                "zero point must give one coordinate per monoid generator".into(),
            ));
        }
        if central_torus.nvars() != group.ring().nvars() {
            return Err(Error::DimensionMismatch(
                "central torus must weight every group variable".into(),
            ));
        }
        if central_embedding.len() != central_torus.rank() {
            return Err(Error::DimensionMismatch(
                "central embedding must map every central cocharacter".into(),
            ));
        }
        for w in &central_embedding {
            if w.rank() != tbar_weight_monoid.rank() {
                return Err(Error::DimensionMismatch(
                    "central embedding lands in the maximal-torus cocharacter lattice".into(),
                ));
            }
        }
        Ok(MonoidPresentation {
            group,
            monoid_gens,
            zero_point,
            central_torus,
            tbar_weight_monoid,
            central_embedding,
        })
    }

    pub fn group(&self) -> &GroupPresentation {
        &self.group
    }

    pub fn monoid_generators(&self) -> &[MultiPoly] {
        &self.monoid_gens
    }

    pub fn zero_point(&self) -> &[Q] {
        &self.zero_point
    }

    pub fn central_torus(&self) -> &TorusAction {
        &self.central_torus
    }

    pub fn tbar_weight_monoid(&self) -> &WeightMonoid {
        &self.tbar_weight_monoid
    }

    /// Central-torus weights of the monoid generators, one per generator;
    /// each generator must be weight-homogeneous.
    pub fn generator_weights(&self) -> Result<Vec<WeightVector>> {
        if self.monoid_gens.is_empty() {
            return Err(Error::BadPresentation(
                "monoid presentation has no generators".into(),
            ));
        }
        self.monoid_gens
            .iter()
            .map(|g| {
                let comps = homogeneous_components(g, &self.central_torus)?;
                match comps.len() {
                    0 => Err(Error::BadPresentation("zero monoid generator".into())),
                    1 => Ok(comps.into_keys().next().unwrap()),
                    _ => Err(Error::Inhomogeneous(format!(
                        "monoid generator {g} under the central torus"
                    ))),
                }
            })
            .collect()
    }

    /// Map a central cocharacter into the maximal-torus cocharacter lattice.
    pub fn embed_cochar(&self, lambda: &WeightVector) -> Result<WeightVector> {
        if lambda.rank() != self.central_embedding.len() {
            return Err(Error::DimensionMismatch(
                "cocharacter rank does not match the central torus".into(),
            ));
        }
        let rank = self.tbar_weight_monoid.rank();
        let mut out = WeightVector::zero(rank);
        for (z, image) in lambda.0.iter().zip(&self.central_embedding) {
            out = out.add(&image.scaled(*z));
        }
        Ok(out)
    }

    /// Subalgebra tester for O(Ḡ) ⊆ O(G) modulo the group relations.
    pub fn gbar_tester(&self) -> Result<SubalgebraTester> {
        SubalgebraTester::new(self.group.ring(), &self.monoid_gens, self.group.relations())
    }

    /// Check that the zero point is the Kempf limit of the identity: monoid
    /// generators of positive Kempf pairing vanish at 0, weight-zero
    /// generators keep their value at 1_G.
    pub fn validate_zero_point(&self, kempf: &KempfOnePSG) -> Result<()> {
        let weights = self.generator_weights()?;
        for ((gen, w), z) in self.monoid_gens.iter().zip(&weights).zip(&self.zero_point) {
            let pairing = kempf.cochar.dot(w);
            let expect = if pairing > 0 {
                Q::zero()
            } else {
                gen.evaluate(self.group.identity_point())
            };
            if *z != expect {
                return Err(Error::BadPresentation(format!(
                    "zero point coordinate for generator {gen} should be {expect}"
                )));
            }
        }
        Ok(())
    }
}

/// A central one-parameter subgroup pairing strictly positively with every
/// nonzero central weight of the monoid generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempfOnePSG {
    pub cochar: WeightVector,
}

/// Search for a Kempf one-parameter subgroup through the central torus:
/// cocharacters are enumerated by increasing max-norm with lexicographic
/// tie-break and the smallest valid one is returned. `None` means the
/// nonzero generator weights span no open half-space, so no Kempf
/// one-parameter subgroup exists through this torus.
pub fn find_kempf_opsg(monoid: &MonoidPresentation) -> Result<Option<KempfOnePSG>> {
    let weights = monoid.generator_weights()?;
    let mut nonzero: Vec<WeightVector> = weights.into_iter().filter(|w| !w.is_zero()).collect();
    nonzero.sort();
    nonzero.dedup();
    if nonzero.is_empty() {
        return Err(Error::BadPresentation(
            "no nonzero central-torus weights on the monoid generators".into(),
        ));
    }
    Ok(positive_functional(monoid.central_torus.rank(), &nonzero)?
        .map(|cochar| KempfOnePSG { cochar }))
}

/// True iff every weight-zero monomial in the monoid generators of degree at
/// most `degree_bound` reduces to a scalar modulo the group relations.
pub fn center_invariants_trivial(monoid: &MonoidPresentation, degree_bound: u32) -> Result<bool> {
    if degree_bound < 1 {
        return Err(Error::Precondition(
            "degree bound must be at least 1".into(),
        ));
    }
    let weights = monoid.generator_weights()?;
    let rank = monoid.central_torus.rank();
    let gb = monoid.group.relations().groebner(MonomialOrder::GrevLex);
    let k = monoid.monoid_gens.len();

    let mut exps = vec![0u32; k];
    fn rec(
        exps: &mut Vec<u32>,
        idx: usize,
        left: u32,
        weights: &[WeightVector],
        rank: usize,
        monoid: &MonoidPresentation,
        gb: &crate::ideal::GroebnerBasis,
    ) -> Result<bool> {
        if idx == exps.len() {
            if exps.iter().all(|&e| e == 0) {
                return Ok(true);
            }
            let mut w = WeightVector::zero(rank);
            for (i, &e) in exps.iter().enumerate() {
                w = w.add(&weights[i].scaled(e as i64));
            }
            if !w.is_zero() {
                return Ok(true);
            }
            let mut p = MultiPoly::one(monoid.group.ring());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    p = p.mul(&monoid.monoid_gens[i].pow(e));
                }
            }
            return Ok(gb.normal_form(&p).is_constant());
        }
        for e in 0..=left {
            exps[idx] = e;
            if !rec(exps, idx + 1, left - e, weights, rank, monoid, gb)? {
                return Ok(false);
            }
        }
        exps[idx] = 0;
        Ok(true)
    }
    rec(&mut exps, 0, degree_bound, &weights, rank, monoid, &gb)
}

/// The universal monoid-representation quotient of a finite-dimensional
/// representation, computed by the decreasing descent tower on the dual.
///
/// `coaction_matrix[j][i]` is the coefficient of `x_i` in the comorphism
/// image of the dual coordinate `x_j`; for a representation presented by a
/// group, that is its forward action matrix. The returned subspace `U` of
/// the dual satisfies: the universal quotient is `W = V / ann(U)`, of
/// dimension `dim U`.
pub fn universal_quotient(
    coaction_matrix: &[Vec<MultiPoly>],
    monoid: &MonoidPresentation,
) -> Result<LinearSubspace> {
    let group = &monoid.group;
    let n = coaction_matrix.len();
    for row in coaction_matrix {
        if row.len() != n {
            return Err(Error::DimensionMismatch(
                "coaction matrix is not square".into(),
            ));
        }
        for e in row {
            same_ring(group.ring(), e.ring())?;
        }
    }
    // consistency with the relations: the matrix is the identity at 1_G
    for (r, row) in coaction_matrix.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let v = e.evaluate(group.identity_point());
            let expect = if r == c { Q::one() } else { Q::zero() };
            if v != expect {
                return Err(Error::BadPresentation(format!(
                    "coaction matrix is not compatible with the presentation \
                     (entry {r},{c} at 1_G)"
                )));
            }
        }
    }
    if n == 0 {
        return Ok(LinearSubspace::zero(0));
    }

    let tester = monoid.gbar_tester()?;
    let rel_gb = group.relations().groebner(MonomialOrder::GrevLex);

    let mut current = LinearSubspace::full(n);
    loop {
        let r = current.dim();
        if r == 0 {
            return Ok(current);
        }
        // complete the basis with standard vectors on the non-pivot columns
        let mut pivot_cols: Vec<usize> = Vec::new();
        for row in current.basis() {
            let p = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
            pivot_cols.push(p);
        }
        let mut full_rows: Vec<Vec<Q>> = current.basis().to_vec();
        for col in 0..n {
            if !pivot_cols.contains(&col) {
                let mut v = vec![Q::zero(); n];
                v[col] = Q::one();
                full_rows.push(v);
            }
        }
        let inverse = invert(&full_rows).expect("completed basis is invertible");

        // l[q][i]: coefficient of x_i in the coaction of the q-th basis vector
        let mut ell: Vec<Vec<MultiPoly>> = Vec::with_capacity(r);
        for q in 0..r {
            let mut row = Vec::with_capacity(n);
            for i in 0..n {
                let mut acc = MultiPoly::zero(group.ring());
                for j in 0..n {
                    let c = &current.basis()[q][j];
                    if !c.is_zero() {
                        acc = acc.add(&coaction_matrix[j][i].scale(c));
                    }
                }
                row.push(acc);
            }
            ell.push(row);
        }

        // coordinates in the adapted basis: coeff[q][t] = sum_i l[q][i] K[i][t]
        let mut equations: Vec<Vec<Q>> = Vec::new();
        for t in 0..n {
            let mut residues: Vec<MultiPoly> = Vec::with_capacity(r);
            for q in 0..r {
                let mut acc = MultiPoly::zero(group.ring());
                for i in 0..n {
                    let k = &inverse[i][t];
                    if !k.is_zero() {
                        acc = acc.add(&ell[q][i].scale(k));
                    }
                }
                let residue = if t < r {
                    // component along the subspace: must lie in O(Ḡ)
                    let nf = tester.reduce(&acc)?;
                    tester.split_residue(&nf).1
                } else {
                    // component along the complement: must vanish in O(G)
                    rel_gb.normal_form(&acc).lift_to(tester.ext_ring())?
                };
                residues.push(residue);
            }
            // one linear equation per residue monomial
            let mut support: std::collections::BTreeSet<Monomial> = Default::default();
            for p in &residues {
                for (m, _) in p.terms() {
                    support.insert(m.clone());
                }
            }
            for m in support {
                equations.push(residues.iter().map(|p| p.coeff(&m)).collect());
            }
        }

        if equations.is_empty() {
            return Ok(current);
        }
        let kernel = nullspace(equations, r);
        if kernel.len() == r {
            return Ok(current);
        }
        let mut new_rows: Vec<Vec<Q>> = Vec::with_capacity(kernel.len());
        for s in kernel {
            let mut v = vec![Q::zero(); n];
            for (q, coef) in s.iter().enumerate() {
                if !coef.is_zero() {
                    for c in 0..n {
                        let t = &v[c] + coef * &current.basis()[q][c];
                        v[c] = t;
                    }
                }
            }
            new_rows.push(v);
        }
        current = LinearSubspace::from_spanning(n, new_rows)?;
    }
}

/// True iff the coordinate algebra of the quotient by `ideal` carries a
/// monoid representation: the comorphism coefficients of every generator lie
/// in O(Ḡ) after reduction modulo the ideal.
///
/// Preconditions: the ideal is G-stable (verified via a saturation
/// fixed-point check).
pub fn is_gbar_stable(ideal: &Ideal, monoid: &MonoidPresentation) -> Result<bool> {
    let group = &monoid.group;
    let saturated = g_saturate(ideal, group, DEFAULT_SATURATION_CAP)?;
    if !saturated.equal(ideal)? {
        return Err(Error::Precondition(
            "is_gbar_stable requires a G-stable ideal".into(),
        ));
    }
    let gb = ideal.groebner(MonomialOrder::GrevLex);
    let tester = monoid.gbar_tester()?;
    let acted = ideal.ring();
    let n = group.dim_rep();
    if acted.nvars() != n {
        return Err(Error::DimensionMismatch(
            "ideal ring does not match the acted space".into(),
        ));
    }
    for j in 0..n {
        // comorphism of x_j with the acted part reduced modulo the ideal
        let mut by_monomial: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for i in 0..n {
            let nf = gb.normal_form(&MultiPoly::var(acted, i));
            for (m, c) in nf.terms() {
                let entry = by_monomial
                    .entry(m.clone())
                    .or_insert_with(|| MultiPoly::zero(group.ring()));
                *entry = entry.add(&group.action_matrix()[j][i].scale(c));
            }
        }
        for (_, coeff) in by_monomial {
            let nf = tester.reduce(&coeff)?;
            if !tester.split_residue(&nf).1.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff the representation coaction reduces to the identity substitution
/// modulo `quotient_ideal` (trivial action on the presented quotient),
/// taking the group relations into account.
pub fn coact_is_identity_mod(group: &GroupPresentation, quotient_ideal: &Ideal) -> Result<bool> {
    let acted = quotient_ideal.ring();
    let n = group.dim_rep();
    if acted.nvars() != n {
        return Err(Error::DimensionMismatch(
            "quotient ideal ring does not match the acted space".into(),
        ));
    }
    let product = group.product_ring(acted)?;
    let rel_gb = group.relations().groebner(MonomialOrder::GrevLex);
    let ideal_gb = quotient_ideal.groebner(MonomialOrder::GrevLex);
    // the two blocks are variable-disjoint, so the union of the lifted bases
    // is a Groebner basis of the combined ideal
    let mut combined: Vec<MultiPoly> = Vec::new();
    for p in rel_gb.polys.iter().chain(&ideal_gb.polys) {
        combined.push(p.lift_to(&product)?);
    }
    for j in 0..n {
        let ng = group.ring().nvars();
        let diff = group
            .coact(&MultiPoly::var(acted, j))?
            .sub(&MultiPoly::var(&product, ng + j));
        let nf = if combined.is_empty() {
            diff
        } else {
            reduce(&diff, &combined, MonomialOrder::GrevLex)
        };
        if !nf.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::WeightMonoid;
    use crate::poly::parse_poly;
    use crate::presentations::{gl2, split_torus, Gl2Action};

    fn w(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    fn gm_on_line() -> (GroupPresentation, MonoidPresentation, Arc<PolyRing>) {
        let tbar = WeightMonoid::new(1, vec![w(&[1])]).unwrap();
        let (g, m) = split_torus(&[w(&[1])], tbar).unwrap();
        (g, m, PolyRing::new(vec!["x"]).unwrap())
    }

    fn gm_on_plane() -> (GroupPresentation, MonoidPresentation, Arc<PolyRing>) {
        let tbar = WeightMonoid::new(1, vec![w(&[1])]).unwrap();
        let (g, m) = split_torus(&[w(&[1]), w(&[-1])], tbar).unwrap();
        (g, m, PolyRing::new(vec!["x", "y"]).unwrap())
    }

    #[test]
    fn coact_on_the_line() {
        let (group, _, acted) = gm_on_line();
        let x = MultiPoly::var(&acted, 0);
        let h = group.coact(&x).unwrap();
        let product = group.product_ring(&acted).unwrap();
        assert_eq!(h, parse_poly(&product, "tinv*x").unwrap());

        let c = parse_poly(&acted, "7/3").unwrap();
        let hc = group.coact(&c).unwrap();
        assert_eq!(hc, parse_poly(&product, "7/3").unwrap());
    }

    #[test]
    fn coact_gl2_uses_the_adjugate() {
        let (group, _) = gl2(Gl2Action::Standard).unwrap();
        let acted = PolyRing::new(vec!["v1", "v2"]).unwrap();
        let x1 = MultiPoly::var(&acted, 0);
        let h = group.coact(&x1).unwrap();
        let product = group.product_ring(&acted).unwrap();
        assert_eq!(h, parse_poly(&product, "d*x22*v1 - d*x12*v2").unwrap());
    }

    #[test]
    fn coact_unit_property() {
        let (group, _, acted) = gm_on_plane();
        let f = parse_poly(&acted, "x^2*y - 3*x + 1/2").unwrap();
        let h = group.coact(&f).unwrap();
        let back = group.specialize_group(&h, group.identity_point(), &acted);
        assert_eq!(back, f);
    }

    #[test]
    fn coact_is_an_algebra_map() {
        let (group, _, acted) = gm_on_plane();
        let f = parse_poly(&acted, "x + y").unwrap();
        let g = parse_poly(&acted, "x*y - 2").unwrap();
        let lhs = group.coact(&f.mul(&g)).unwrap();
        let rel_gb = group.relations().groebner(MonomialOrder::GrevLex);
        let product = group.product_ring(&acted).unwrap();
        let lifted: Vec<MultiPoly> = rel_gb
            .polys
            .iter()
            .map(|p| p.lift_to(&product).unwrap())
            .collect();
        let rhs = reduce(
            &group.coact(&f).unwrap().mul(&group.coact(&g).unwrap()),
            &lifted,
            MonomialOrder::GrevLex,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn saturate_mixing_weights() {
        let (group, _, acted) = gm_on_plane();
        let seed = Ideal::new(
            Arc::clone(&acted),
            vec![parse_poly(&acted, "x + y").unwrap()],
        )
        .unwrap();
        let sat = g_saturate(&seed, &group, DEFAULT_SATURATION_CAP).unwrap();
        let expect = Ideal::new(
            Arc::clone(&acted),
            vec![
                parse_poly(&acted, "x").unwrap(),
                parse_poly(&acted, "y").unwrap(),
            ],
        )
        .unwrap();
        assert!(sat.equal(&expect).unwrap());
    }

    #[test]
    fn saturate_fixed_points() {
        let (group, _) = gl2(Gl2Action::Standard).unwrap();
        let acted = PolyRing::new(vec!["v1", "v2"]).unwrap();
        let seed = Ideal::new(
            Arc::clone(&acted),
            vec![MultiPoly::var(&acted, 0), MultiPoly::var(&acted, 1)],
        )
        .unwrap();
        let sat = g_saturate(&seed, &group, DEFAULT_SATURATION_CAP).unwrap();
        assert!(sat.equal(&seed).unwrap());

        let unit = Ideal::unit(Arc::clone(&acted));
        assert!(g_saturate(&unit, &group, DEFAULT_SATURATION_CAP)
            .unwrap()
            .is_unit_ideal());
    }

    #[test]
    fn saturate_is_idempotent_and_monotone() {
        let (group, _) = gl2(Gl2Action::Standard).unwrap();
        let acted = PolyRing::new(vec!["v1", "v2"]).unwrap();
        let seed = Ideal::new(
            Arc::clone(&acted),
            vec![parse_poly(&acted, "v1^2 + v2").unwrap()],
        )
        .unwrap();
        let once = g_saturate(&seed, &group, DEFAULT_SATURATION_CAP).unwrap();
        let twice = g_saturate(&once, &group, DEFAULT_SATURATION_CAP).unwrap();
        assert!(once.equal(&twice).unwrap());
        for g in seed.generators() {
            assert!(once.contains(g).unwrap());
        }
        // two rounds are genuinely needed here: the first adjoins v2 from
        // the degree-1 coefficients, the second pulls in v1 from the orbit
        // of v2
        let expect = Ideal::new(
            Arc::clone(&acted),
            vec![
                parse_poly(&acted, "v1").unwrap(),
                parse_poly(&acted, "v2").unwrap(),
            ],
        )
        .unwrap();
        assert!(once.equal(&expect).unwrap());
    }

    #[test]
    fn universal_quotient_torus_line() {
        // weights (1, -1), closure monoid Z_{>=0}: the dual of the weight-1
        // line survives
        let (group, monoid, _) = gm_on_plane();
        let u = universal_quotient(group.action_matrix(), &monoid).unwrap();
        assert_eq!(u.dim(), 1);
        assert_eq!(u.basis()[0][0], Q::one());
        assert!(u.basis()[0][1].is_zero());
    }

    #[test]
    fn universal_quotient_on_a_conjugated_torus() {
        // hyperbolic G_m-action conjugated by a unipotent change of basis:
        // the surviving dual line is not a coordinate line
        let (group, monoid, _) = gm_on_plane();
        let ring = group.ring();
        let t = MultiPoly::var(ring, 0);
        let tinv = MultiPoly::var(ring, 1);
        let sigma = vec![
            vec![t.clone(), tinv.sub(&t)],
            vec![MultiPoly::zero(ring), tinv.clone()],
        ];
        let u = universal_quotient(&sigma, &monoid).unwrap();
        assert_eq!(u.dim(), 1);
        assert_eq!(u.basis()[0][0], Q::one());
        assert_eq!(u.basis()[0][1], -Q::one());
    }

    #[test]
    fn universal_quotient_extremes() {
        let tbar = WeightMonoid::new(1, vec![w(&[1])]).unwrap();
        let (g_pos, m_pos) = split_torus(&[w(&[2]), w(&[0]), w(&[1])], tbar.clone()).unwrap();
        let u = universal_quotient(g_pos.action_matrix(), &m_pos).unwrap();
        assert_eq!(u.dim(), 3);

        let (g_neg, m_neg) = split_torus(&[w(&[-1]), w(&[-2])], tbar).unwrap();
        let u = universal_quotient(g_neg.action_matrix(), &m_neg).unwrap();
        assert_eq!(u.dim(), 0);
    }

    #[test]
    fn gbar_stability_of_quotients() {
        let (_, monoid, acted) = gm_on_plane();
        let stable =
            Ideal::new(Arc::clone(&acted), vec![parse_poly(&acted, "y").unwrap()]).unwrap();
        assert!(is_gbar_stable(&stable, &monoid).unwrap());

        let unstable =
            Ideal::new(Arc::clone(&acted), vec![parse_poly(&acted, "x").unwrap()]).unwrap();
        assert!(!is_gbar_stable(&unstable, &monoid).unwrap());
    }

    #[test]
    fn trivial_action_detection() {
        let (group, _, acted) = gm_on_plane();
        let point = Ideal::new(
            Arc::clone(&acted),
            vec![MultiPoly::var(&acted, 0), MultiPoly::var(&acted, 1)],
        )
        .unwrap();
        assert!(coact_is_identity_mod(&group, &point).unwrap());

        let axis = Ideal::new(Arc::clone(&acted), vec![parse_poly(&acted, "y").unwrap()]).unwrap();
        assert!(!coact_is_identity_mod(&group, &axis).unwrap());
    }

    #[test]
    fn center_invariants_on_matrix_monoid() {
        let (_, monoid) = gl2(Gl2Action::Standard).unwrap();
        assert!(center_invariants_trivial(&monoid, 4).unwrap());
    }

    #[test]
    fn center_invariants_product_counterexample() {
        // two torus factors, central torus scaling only the first: the
        // second coordinate is a nonscalar invariant
        let ring = PolyRing::new(vec!["t1", "t2", "s1", "s2"]).unwrap();
        let mk = |i: usize| MultiPoly::var(&ring, i);
        let relations = Ideal::new(
            Arc::clone(&ring),
            vec![
                mk(0).mul(&mk(2)).sub(&MultiPoly::one(&ring)),
                mk(1).mul(&mk(3)).sub(&MultiPoly::one(&ring)),
            ],
        )
        .unwrap();
        let action = vec![
            vec![mk(0), MultiPoly::zero(&ring)],
            vec![MultiPoly::zero(&ring), mk(1)],
        ];
        let inverse = vec![
            vec![mk(2), MultiPoly::zero(&ring)],
            vec![MultiPoly::zero(&ring), mk(3)],
        ];
        let group = GroupPresentation::new(
            Arc::clone(&ring),
            relations,
            action,
            inverse,
            vec![Q::one(); 4],
        )
        .unwrap();
        let central = TorusAction::new(1, vec![w(&[1]), w(&[0]), w(&[-1]), w(&[0])]).unwrap();
        let tbar = WeightMonoid::new(2, vec![w(&[1, 0]), w(&[0, 1])]).unwrap();
        let monoid = MonoidPresentation::new(
            group,
            vec![mk(0), mk(1)],
            vec![Q::zero(), Q::one()],
            central,
            tbar,
            vec![w(&[1, 0])],
        )
        .unwrap();
        assert!(!center_invariants_trivial(&monoid, 3).unwrap());
    }
}
