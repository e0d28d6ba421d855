//! Elimination ideals and subalgebra membership through tag variables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{GroebnerBasis, Ideal};
use crate::poly::{same_ring, Monomial, MonomialOrder, MultiPoly, PolyRing};

fn permute_poly(p: &MultiPoly, target: &Arc<PolyRing>, perm: &[usize]) -> MultiPoly {
    // perm[k] = original index of the k-th target variable
    MultiPoly::from_terms(
        target,
        p.terms().map(|(m, c)| {
            let exps: Vec<u32> = perm.iter().map(|&i| m.exps()[i]).collect();
            (Monomial::new(exps), c.clone())
        }),
    )
}

/// Generators of `ideal ∩ k[vars \ drop_vars]`, via a block order that puts
/// the dropped variables first. The result lives in the original ring but
/// involves none of the dropped variables.
pub fn elimination_ideal(ideal: &Ideal, drop_vars: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut drop = drop_vars.to_vec();
    drop.sort_unstable();
    drop.dedup();
    if drop.iter().any(|&i| i >= n) {
        return Err(Error::BadVariables(
            "drop_vars outside the ring's variables".into(),
        ));
    }
    let kept: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let k = drop.len();
    let perm: Vec<usize> = drop.iter().chain(kept.iter()).copied().collect();
    let permuted_ring = ring.permuted(&perm)?;

    let gens: Vec<MultiPoly> = ideal
        .generators()
        .iter()
        .map(|g| permute_poly(g, &permuted_ring, &perm))
        .collect();
    let permuted_ideal = Ideal::new(Arc::clone(&permuted_ring), gens)?;
    let gb = permuted_ideal.groebner(MonomialOrder::Elimination(k));

    // invert the permutation to land back in the original ring
    let mut inv = vec![0usize; n];
    for (new_idx, &old_idx) in perm.iter().enumerate() {
        inv[old_idx] = new_idx;
    }
    let kept_polys: Vec<MultiPoly> = gb
        .polys
        .iter()
        .filter(|p| p.terms().all(|(m, _)| !m.touches_block(k)))
        .map(|p| permute_poly(p, ring, &inv))
        .collect();
    Ideal::new(Arc::clone(ring), kept_polys)
}

/// Decides membership in a finitely generated subalgebra of a presented ring,
/// and expresses members as polynomials in the subalgebra generators.
///
/// The extended ring is `k[x, u]` with one tag `u_l` per generator; the test
/// ideal is the presentation plus the graph relations `u_l - gen_l`, reduced
/// under the block order eliminating the `x` variables.
pub struct SubalgebraTester {
    ext_ring: Arc<PolyRing>,
    n_orig: usize,
    gb: GroebnerBasis,
    tag_ring: Arc<PolyRing>,
}

impl SubalgebraTester {
    pub fn new(
        ring: &Arc<PolyRing>,
        subalg_gens: &[MultiPoly],
        presentation: &Ideal,
    ) -> Result<Self> {
        same_ring(ring, presentation.ring())?;
        for g in subalg_gens {
            same_ring(ring, g.ring())?;
        }
        let mut prefix = "u".to_string();
        while (0..ring.nvars()).any(|i| ring.var_name(i).starts_with(&prefix)) {
            prefix.insert(0, '_');
        }
        let tag_names: Vec<String> = (1..=subalg_gens.len())
            .map(|l| format!("{prefix}{l}"))
            .collect();
        let ext_ring = ring.extended(tag_names.clone())?;
        let n = ring.nvars();

        let mut gens: Vec<MultiPoly> = presentation
            .generators()
            .iter()
            .map(|g| g.lift_to(&ext_ring))
            .collect::<Result<_>>()?;
        for (l, g) in subalg_gens.iter().enumerate() {
            let tag = MultiPoly::var(&ext_ring, n + l);
            gens.push(tag.sub(&g.lift_to(&ext_ring)?));
        }
        let ideal = Ideal::new(Arc::clone(&ext_ring), gens)?;
        let gb = ideal.groebner(MonomialOrder::Elimination(n));
        if gb.is_unit_ideal() {
            return Err(Error::BadPresentation(
                "presentation ideal is the unit ideal".into(),
            ));
        }
        Ok(SubalgebraTester {
            ext_ring,
            n_orig: n,
            gb,
            tag_ring: PolyRing::new(tag_names)?,
        })
    }

    pub fn tag_ring(&self) -> &Arc<PolyRing> {
        &self.tag_ring
    }

    /// The extended ring `k[x, u]` the tester reduces in.
    pub fn ext_ring(&self) -> &Arc<PolyRing> {
        &self.ext_ring
    }

    /// Normal form of `f` in the extended ring; linear in `f`.
    pub fn reduce(&self, f: &MultiPoly) -> Result<MultiPoly> {
        Ok(self.gb.normal_form(&f.lift_to(&self.ext_ring)?))
    }

    /// Split a reduced element into its tag-only part and the part still
    /// touching original variables. Membership holds iff the latter is zero.
    pub fn split_residue(&self, nf: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let mut good = MultiPoly::zero(&self.ext_ring);
        let mut bad = MultiPoly::zero(&self.ext_ring);
        for (m, c) in nf.terms() {
            if m.touches_block(self.n_orig) {
                bad.add_term(m.clone(), c.clone());
            } else {
                good.add_term(m.clone(), c.clone());
            }
        }
        (good, bad)
    }

    /// Some(expression in the tag ring) iff `f` lies in the subalgebra
    /// modulo the presentation ideal.
    pub fn membership(&self, f: &MultiPoly) -> Result<Option<MultiPoly>> {
        let nf = self.reduce(f)?;
        let (good, bad) = self.split_residue(&nf);
        if !bad.is_zero() {
            return Ok(None);
        }
        // drop the leading original-variable block from the exponents
        let expr = MultiPoly::from_terms(
            &self.tag_ring,
            good.terms()
                .map(|(m, c)| (Monomial::new(m.exps()[self.n_orig..].to_vec()), c.clone())),
        );
        Ok(Some(expr))
    }
}

/// One-shot form of [`SubalgebraTester::membership`].
pub fn subalgebra_membership(
    f: &MultiPoly,
    subalg_gens: &[MultiPoly],
    presentation: &Ideal,
) -> Result<Option<MultiPoly>> {
    SubalgebraTester::new(f.ring(), subalg_gens, presentation)?.membership(f)
}
