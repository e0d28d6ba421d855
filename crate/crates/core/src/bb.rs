//! Fixed-point-scheme ideals and attractor ideals for torus and
//! reductive-monoid actions, with the limit/unit/section structure maps.

use crate::coaction::{
    coact_is_identity_mod, g_saturate, is_gbar_stable, KempfOnePSG, MonoidPresentation,
};
use crate::error::{Error, Result};
use crate::grading::{homogeneous_components, GradedAlgebra, WeightMonoid, WeightVector};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, MultiPoly};

/// An algebra homomorphism out of a presented quotient, as the image of each
/// ambient ring variable.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMap {
    pub images: Vec<MultiPoly>,
}

/// Per-invariant verification flags of an assembled decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BBVerification {
    /// fixed ideal contains the attractor ideal (X^G ⊆ X^+)
    pub containment: bool,
    /// limit ∘ section is the identity on the fixed-scheme presentation
    pub section_identity: bool,
    /// the attractor quotient carries a monoid representation
    pub gbar_stable: bool,
    /// the action on the fixed-scheme quotient is trivial
    pub fixed_action_trivial: bool,
}

impl BBVerification {
    pub fn all_ok(&self) -> bool {
        self.containment && self.section_identity && self.gbar_stable && self.fixed_action_trivial
    }
}

/// The attractor decomposition of one affine scheme: both ideals and the
/// three structure maps, with verification flags.
#[derive(Debug, Clone)]
pub struct BBResult {
    pub attractor_ideal: Ideal,
    pub fixed_ideal: Ideal,
    /// i_∞: X^+ → X^G, presented on the fixed-scheme quotient's generators.
    pub limit_map: AlgebraMap,
    /// i_1: X^+ → X, the quotient presentation of the ambient algebra.
    pub unit_map: AlgebraMap,
    /// s: X^G → X^+, the further quotient by the positive part.
    pub section_map: AlgebraMap,
    pub verification: BBVerification,
}

/// Kempf weights of the ring variables: the cocharacter paired against each
/// variable's torus weight.
pub fn kempf_variable_weights(alg: &GradedAlgebra, cochar: &WeightVector) -> Result<Vec<i64>> {
    if cochar.rank() != alg.action().rank() {
        return Err(Error::DimensionMismatch(
            "cocharacter rank does not match the torus action".into(),
        ));
    }
    Ok(alg
        .action()
        .variable_weights()
        .iter()
        .map(|w| cochar.dot(w))
        .collect())
}

/// The fixed-scheme ideal: the defining ideal plus every variable of
/// strictly positive Kempf weight. Requires a valid Kempf grading: no
/// variable of negative weight.
pub fn fixed_ideal(alg: &GradedAlgebra, cochar: &WeightVector) -> Result<Ideal> {
    let weights = kempf_variable_weights(alg, cochar)?;
    if let Some(j) = weights.iter().position(|&w| w < 0) {
        return Err(Error::BadKempfGrading(format!(
            "variable {} has negative Kempf weight {}",
            alg.ring().var_name(j),
            weights[j]
        )));
    }
    let mut gens = alg.defining_ideal().generators().to_vec();
    for (j, &w) in weights.iter().enumerate() {
        if w > 0 {
            gens.push(MultiPoly::var(alg.ring(), j));
        }
    }
    Ok(Ideal::new(std::sync::Arc::clone(alg.ring()), gens)?.with_basis(MonomialOrder::GrevLex))
}

const OUTSIDER_ROUND_CAP: usize = 32;

/// The torus attractor ideal: the defining ideal together with every
/// weight component lying outside the closure's weight monoid.
///
/// Seed generators are the outsider-weight variables; the loop then adjoins
/// outsider components of normal forms of monomials up to `degree_bound`
/// (default: maximum generator degree of the defining ideal plus two) until
/// nothing new appears.
pub fn attractor_ideal_torus(
    alg: &GradedAlgebra,
    s: &WeightMonoid,
    degree_bound: Option<u32>,
) -> Result<Ideal> {
    if s.rank() != alg.action().rank() {
        return Err(Error::DimensionMismatch(
            "weight monoid rank does not match the torus action".into(),
        ));
    }
    let ring = alg.ring();
    let bound = degree_bound.unwrap_or_else(|| {
        alg.defining_ideal()
            .generators()
            .iter()
            .map(|g| g.total_degree())
            .max()
            .unwrap_or(1)
            + 2
    });

    let mut gens = alg.defining_ideal().generators().to_vec();
    for (j, w) in alg.action().variable_weights().iter().enumerate() {
        if !s.contains(w)? {
            gens.push(MultiPoly::var(ring, j));
        }
    }
    let mut current =
        Ideal::new(std::sync::Arc::clone(ring), gens)?.with_basis(MonomialOrder::GrevLex);

    for _ in 0..OUTSIDER_ROUND_CAP {
        let gb = current.groebner(MonomialOrder::GrevLex);
        let mut additions: Vec<MultiPoly> = Vec::new();
        for m in crate::grading::monomials_up_to_degree(ring.nvars(), bound) {
            if m.is_one() {
                continue;
            }
            let nf = gb.normal_form(&MultiPoly::monomial(ring, m, num_traits::One::one()));
            if nf.is_zero() {
                continue;
            }
            for (w, piece) in homogeneous_components(&nf, alg.action())? {
                // a nonzero piece of a normal form is itself in normal form
                if !s.contains(&w)? && !additions.contains(&piece) {
                    additions.push(piece);
                }
            }
        }
        if additions.is_empty() {
            return Ok(current);
        }
        let mut gens = gb.polys.clone();
        gens.extend(additions);
        current = Ideal::new(std::sync::Arc::clone(ring), gens)?.with_basis(MonomialOrder::GrevLex);
    }
    Err(Error::ResourceCap(format!(
        "outsider adjunction did not stabilize within {OUTSIDER_ROUND_CAP} rounds"
    )))
}

/// The reductive-case attractor ideal: the G-saturation of the torus
/// attractor ideal for the maximal-torus weight monoid.
pub fn attractor_ideal_reductive(
    alg: &GradedAlgebra,
    monoid: &MonoidPresentation,
    degree_bound: Option<u32>,
    saturation_cap: usize,
) -> Result<Ideal> {
    let group = monoid.group();
    if group.dim_rep() != alg.ring().nvars() {
        return Err(Error::DimensionMismatch(
            "acted space does not match the group action matrix".into(),
        ));
    }
    // the defining ideal must already be G-stable
    let defining = alg.defining_ideal().with_basis(MonomialOrder::GrevLex);
    if !g_saturate(&defining, group, saturation_cap)?.equal(&defining)? {
        return Err(Error::Precondition("defining ideal is not G-stable".into()));
    }
    let torus_ideal = attractor_ideal_torus(alg, monoid.tbar_weight_monoid(), degree_bound)?;
    g_saturate(&torus_ideal, group, saturation_cap)
}

/// Knobs surfaced by the CLI.
#[derive(Debug, Clone, Copy)]
pub struct BBOptions {
    pub degree_bound: Option<u32>,
    pub saturation_cap: usize,
}

impl Default for BBOptions {
    fn default() -> Self {
        BBOptions {
            degree_bound: None,
            saturation_cap: crate::coaction::DEFAULT_SATURATION_CAP,
        }
    }
}

/// Full decomposition: both ideals, the three structure maps, and the
/// verification block. Containment failure is a hard error; the remaining
/// flags are reported in the result.
pub fn assemble_bb(
    alg: &GradedAlgebra,
    monoid: &MonoidPresentation,
    kempf: &KempfOnePSG,
    opts: BBOptions,
) -> Result<BBResult> {
    let group = monoid.group();
    let ring = alg.ring();
    let cochar = monoid.embed_cochar(&kempf.cochar)?;
    let weights = kempf_variable_weights(alg, &cochar)?;

    let attractor = attractor_ideal_reductive(alg, monoid, opts.degree_bound, opts.saturation_cap)?;
    let att_gb = attractor.groebner(MonomialOrder::GrevLex);

    // negative-weight variables must die in the attractor quotient, else the
    // supplied one-parameter subgroup is not Kempf for this presentation
    for (j, &w) in weights.iter().enumerate() {
        if w < 0 && !att_gb.contains(&MultiPoly::var(ring, j)) {
            return Err(Error::BadKempfGrading(format!(
                "variable {} of negative Kempf weight {} survives the attractor quotient",
                ring.var_name(j),
                w
            )));
        }
    }

    let mut fix_gens = att_gb.polys.clone();
    for (j, &w) in weights.iter().enumerate() {
        if w > 0 {
            fix_gens.push(MultiPoly::var(ring, j));
        }
    }
    let fixed =
        Ideal::new(std::sync::Arc::clone(ring), fix_gens)?.with_basis(MonomialOrder::GrevLex);
    let fix_gb = fixed.groebner(MonomialOrder::GrevLex);

    let containment = attractor.generators().iter().all(|g| fix_gb.contains(g));
    if !containment {
        return Err(Error::InvariantViolation(
            "fixed ideal does not contain the attractor ideal".into(),
        ));
    }

    let n = ring.nvars();
    let unit_map = AlgebraMap {
        images: (0..n)
            .map(|j| att_gb.normal_form(&MultiPoly::var(ring, j)))
            .collect(),
    };
    let limit_map = AlgebraMap {
        images: (0..n)
            .map(|j| {
                if weights[j] == 0 {
                    att_gb.normal_form(&MultiPoly::var(ring, j))
                } else {
                    MultiPoly::zero(ring)
                }
            })
            .collect(),
    };
    let section_map = AlgebraMap {
        images: (0..n)
            .map(|j| fix_gb.normal_form(&MultiPoly::var(ring, j)))
            .collect(),
    };

    // limit then section equals the fixed-scheme quotient map
    let mut section_identity = true;
    for j in 0..n {
        let through = limit_map.images[j].substitute(&section_map.images)?;
        let direct = fix_gb.normal_form(&MultiPoly::var(ring, j));
        if !fix_gb.normal_form(&through).sub(&direct).is_zero() {
            section_identity = false;
            break;
        }
    }

    let gbar_stable = is_gbar_stable(&attractor, monoid)?;
    let fixed_action_trivial = coact_is_identity_mod(group, &fixed)?;

    Ok(BBResult {
        attractor_ideal: attractor,
        fixed_ideal: fixed,
        limit_map,
        unit_map,
        section_map,
        verification: BBVerification {
            containment,
            section_identity,
            gbar_stable,
            fixed_action_trivial,
        },
    })
}
