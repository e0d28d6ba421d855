//! Truncated (standard adic) algebras and modules: isotypic-dimension
//! tables, stabilization indices, and reconstruction of the algebraization
//! from truncation data.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::bb::fixed_ideal;
use crate::error::{Error, Result};
use crate::grading::{GradedAlgebra, IsotypicBasis, WeightVector};
use crate::ideal::Ideal;
use crate::linalg::{rank, rref, Q};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

/// The tower A_n = A / I^{n+1} for I the fixed-scheme ideal of the Kempf
/// grading, presented level by level over the ambient ring.
#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    base: GradedAlgebra,
    kempf: WeightVector,
    ideal_i: Ideal,
    levels: Vec<Ideal>,
    depth: usize,
}

/// Build the truncation tower to the given depth, verifying the adic kernel
/// identity `ker(A_m -> A_n) = ker(A_m -> A_0)^{n+1}` and that the fixed
/// scheme of every level is Spec(A_0).
pub fn truncate(
    base: GradedAlgebra,
    kempf: WeightVector,
    depth: usize,
) -> Result<TruncatedAlgebra> {
    let weights = crate::bb::kempf_variable_weights(&base, &kempf)?;
    if let Some(j) = weights.iter().position(|&w| w < 0) {
        return Err(Error::BadKempfGrading(format!(
            "variable {} has negative Kempf weight {}",
            base.ring().var_name(j),
            weights[j]
        )));
    }
    let ring = Arc::clone(base.ring());
    let ideal_i = fixed_ideal(&base, &kempf)?;

    // positive part as a monomial ideal: its powers are directly enumerable
    let positive_vars: Vec<usize> = weights
        .iter()
        .enumerate()
        .filter_map(|(j, &w)| (w > 0).then_some(j))
        .collect();

    let mut levels = Vec::with_capacity(depth + 1);
    for n in 0..=depth {
        let mut gens = base.defining_ideal().generators().to_vec();
        gens.extend(
            power_monomials(&positive_vars, ring.nvars(), (n + 1) as u32)
                .into_iter()
                .map(|m| MultiPoly::monomial(&ring, m, One::one())),
        );
        levels.push(Ideal::new(Arc::clone(&ring), gens)?.with_basis(MonomialOrder::GrevLex));
    }

    // adic kernel identity at every pair of levels
    let mut l0_pow = levels[0].clone();
    for n in 0..=depth {
        if n > 0 {
            l0_pow = l0_pow
                .product(&levels[0])?
                .with_basis(MonomialOrder::GrevLex);
        }
        for m in (n + 1)..=depth {
            let rhs = levels[m].sum(&l0_pow)?;
            if !levels[n].equal(&rhs)? {
                return Err(Error::InvariantViolation(format!(
                    "adic kernel identity fails between levels {m} and {n}"
                )));
            }
        }
    }
    // the fixed scheme of every level is the level-0 scheme
    for (n, level) in levels.iter().enumerate() {
        let level_alg =
            GradedAlgebra::new(Arc::clone(&ring), level.clone(), base.action().clone())?;
        let fix = fixed_ideal(&level_alg, &kempf)?;
        if !fix.equal(&levels[0])? {
            return Err(Error::InvariantViolation(format!(
                "fixed scheme of level {n} is not Spec(A_0)"
            )));
        }
    }

    Ok(TruncatedAlgebra {
        base,
        kempf,
        ideal_i,
        levels,
        depth,
    })
}

/// Monomials of total degree exactly `d` in the given variables.
fn power_monomials(vars: &[usize], nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if !vars.is_empty() {
        let mut exps = vec![0u32; nvars];
        fn rec(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, vars: &[usize], i: usize, left: u32) {
            if i + 1 == vars.len() {
                exps[vars[i]] = left;
                out.push(Monomial::new(exps.clone()));
                exps[vars[i]] = 0;
                return;
            }
            for e in 0..=left {
                exps[vars[i]] = e;
                rec(out, exps, vars, i + 1, left - e);
                exps[vars[i]] = 0;
            }
        }
        rec(&mut out, &mut exps, vars, 0, d);
        out.sort();
    }
    out
}

impl TruncatedAlgebra {
    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn kempf(&self) -> &WeightVector {
        &self.kempf
    }

    pub fn fixed_scheme_ideal(&self) -> &Ideal {
        &self.ideal_i
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn level(&self, n: usize) -> &Ideal {
        &self.levels[n]
    }

    /// Kempf pairing of a character: the stabilization index n_chi.
    pub fn kempf_weight(&self, chi: &WeightVector) -> Result<i64> {
        if chi.rank() != self.kempf.rank() {
            return Err(Error::DimensionMismatch(
                "character rank does not match the torus".into(),
            ));
        }
        Ok(self.kempf.dot(chi))
    }

    fn require_positive_grading(&self) -> Result<()> {
        let weights = crate::bb::kempf_variable_weights(&self.base, &self.kempf)?;
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::BadKempfGrading(
                "isotypic dimension counting requires every variable to have strictly \
                 positive Kempf weight"
                    .into(),
            ));
        }
        Ok(())
    }

    /// All ambient monomials of torus weight exactly `chi`; finite because
    /// the Kempf pairing of every variable is at least 1.
    pub fn monomials_of_weight(&self, chi: &WeightVector) -> Result<Vec<Monomial>> {
        self.require_positive_grading()?;
        let bound = self.kempf_weight(chi)?;
        if bound < 0 {
            return Ok(Vec::new());
        }
        let action = self.base.action();
        let mut out = Vec::new();
        for m in crate::grading::monomials_up_to_degree(self.base.ring().nvars(), bound as u32) {
            if action.weight_of(&m)? == *chi {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// dim of the weight-chi piece of A_n for n = 0..=depth, by counting independent normal
    /// forms of weight-chi monomials.
    pub fn isotypic_dims(&self, chi: &WeightVector) -> Result<Vec<usize>> {
        let monos = self.monomials_of_weight(chi)?;
        let ring = self.base.ring();
        let mut dims = Vec::with_capacity(self.depth + 1);
        for level in &self.levels {
            let gb = level.groebner(MonomialOrder::GrevLex);
            let nfs: Vec<MultiPoly> = monos
                .iter()
                .map(|m| gb.normal_form(&MultiPoly::monomial(ring, m.clone(), One::one())))
                .filter(|p| !p.is_zero())
                .collect();
            dims.push(IsotypicBasis::from_spanning(ring, nfs).dim());
        }
        Ok(dims)
    }

    /// Reconstruct the weight-chi piece of the algebra from the level just
    /// past the stabilization bound.
    pub fn algebraize(
        &self,
        chars: &[WeightVector],
    ) -> Result<Vec<(WeightVector, Vec<MultiPoly>)>> {
        let mut out = Vec::with_capacity(chars.len());
        for chi in chars {
            let n_chi = self.kempf_weight(chi)?;
            let read_level = if n_chi < 0 { 0 } else { (n_chi + 1) as usize };
            if read_level > self.depth {
                return Err(Error::InsufficientDepth {
                    depth: self.depth,
                    msg: format!("character {chi} needs level {read_level}"),
                });
            }
            let monos = self.monomials_of_weight(chi)?;
            let ring = self.base.ring();
            let gb = self.levels[read_level].groebner(MonomialOrder::GrevLex);
            let nfs: Vec<MultiPoly> = monos
                .iter()
                .map(|m| gb.normal_form(&MultiPoly::monomial(ring, m.clone(), One::one())))
                .filter(|p| !p.is_zero())
                .collect();
            out.push((
                chi.clone(),
                IsotypicBasis::from_spanning(ring, nfs).basis().to_vec(),
            ));
        }
        Ok(out)
    }
}

/// One character's stabilization record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationRow {
    pub chi: WeightVector,
    /// The predicted bound: n_chi, plus |minimal weight| in the module case.
    pub predicted: i64,
    /// Last level where the dimension still changed (0 when constant).
    pub observed: usize,
    pub dims: Vec<usize>,
    /// Whether the truncation depth exceeds the predicted bound.
    pub conclusive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub rows: Vec<StabilizationRow>,
}

fn stabilization_row(
    chi: &WeightVector,
    dims: Vec<usize>,
    predicted: i64,
    depth: usize,
) -> Result<StabilizationRow> {
    let last_change = (1..dims.len()).filter(|&n| dims[n] != dims[n - 1]).max();
    if let Some(l) = last_change {
        if (l as i64) > predicted {
            return Err(Error::InvariantViolation(format!(
                "character {chi}: dimensions still change at level {l}, past the \
                 predicted bound {predicted}"
            )));
        }
    }
    Ok(StabilizationRow {
        chi: chi.clone(),
        predicted,
        observed: last_change.unwrap_or(0),
        dims,
        conclusive: (depth as i64) > predicted,
    })
}

/// Observed-versus-predicted stabilization for the algebra itself:
/// the bound for a character chi is its Kempf pairing n_chi.
pub fn check_stabilization(
    trunc: &TruncatedAlgebra,
    chars: &[WeightVector],
) -> Result<StabilizationReport> {
    let mut rows = Vec::with_capacity(chars.len());
    for chi in chars {
        let dims = trunc.isotypic_dims(chi)?;
        let predicted = trunc.kempf_weight(chi)?;
        rows.push(stabilization_row(chi, dims, predicted, trunc.depth())?);
    }
    Ok(StabilizationReport { rows })
}

/// A finitely presented graded module over the truncated algebra: free on
/// generators with declared weights, modulo homogeneous relation columns.
#[derive(Debug, Clone)]
pub struct AdicModule {
    algebra: Arc<TruncatedAlgebra>,
    generator_weights: Vec<WeightVector>,
    relations: Vec<Vec<MultiPoly>>,
    relation_weights: Vec<WeightVector>,
}

impl AdicModule {
    pub fn new(
        algebra: Arc<TruncatedAlgebra>,
        generator_weights: Vec<WeightVector>,
        relations: Vec<Vec<MultiPoly>>,
    ) -> Result<Self> {
        let rank_t = algebra.base().action().rank();
        if generator_weights.is_empty() {
            return Err(Error::BadPresentation(
                "module needs at least one generator".into(),
            ));
        }
        for w in &generator_weights {
            if w.rank() != rank_t {
                return Err(Error::DimensionMismatch(
                    "generator weight rank does not match the torus".into(),
                ));
            }
        }
        let r = generator_weights.len();
        let action = algebra.base().action();
        let mut relation_weights = Vec::with_capacity(relations.len());
        for col in &relations {
            if col.len() != r {
                return Err(Error::DimensionMismatch(
                    "relation column length does not match the generator count".into(),
                ));
            }
            let mut weight: Option<WeightVector> = None;
            for (i, entry) in col.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                crate::poly::same_ring(algebra.base().ring(), entry.ring())?;
                let comps = crate::grading::homogeneous_components(entry, action)?;
                if comps.len() != 1 {
                    return Err(Error::Inhomogeneous(format!("relation entry {entry}")));
                }
                let u = comps.into_keys().next().unwrap().add(&generator_weights[i]);
                match &weight {
                    None => weight = Some(u),
                    Some(prev) if *prev == u => {}
                    Some(prev) => {
                        return Err(Error::Inhomogeneous(format!(
                            "relation column mixes weights {prev} and {u}"
                        )))
                    }
                }
            }
            relation_weights
                .push(weight.ok_or_else(|| Error::BadPresentation("zero relation column".into()))?);
        }
        Ok(AdicModule {
            algebra,
            generator_weights,
            relations,
            relation_weights,
        })
    }

    pub fn algebra(&self) -> &Arc<TruncatedAlgebra> {
        &self.algebra
    }

    pub fn generator_weights(&self) -> &[WeightVector] {
        &self.generator_weights
    }

    /// Minimal Kempf weight among the generators; the module stabilization
    /// bound is n_chi + |m| for this m.
    pub fn minimal_kempf_weight(&self) -> Result<i64> {
        let mut min = i64::MAX;
        for w in &self.generator_weights {
            min = min.min(self.algebra.kempf_weight(w)?);
        }
        Ok(min)
    }

    /// Coordinates of the weight-chi slice of the ambient free module:
    /// pairs (generator index, monomial of weight chi - w_i).
    fn slice_coords(&self, chi: &WeightVector) -> Result<Vec<(usize, Monomial)>> {
        let mut coords = Vec::new();
        for (i, w) in self.generator_weights.iter().enumerate() {
            let target = chi.sub(w);
            let mut monos = self.algebra.monomials_of_weight(&target)?;
            monos.reverse(); // descending, keeps pivots on leading monomials
            for m in monos {
                coords.push((i, m));
            }
        }
        Ok(coords)
    }

    fn coord_index(coords: &[(usize, Monomial)], i: usize, m: &Monomial) -> Option<usize> {
        coords.iter().position(|(j, mm)| *j == i && mm == m)
    }

    /// Vectors spanning the image of the relation-and-truncation submodule
    /// inside the weight-chi slice at level n.
    fn relation_span(
        &self,
        chi: &WeightVector,
        level: usize,
        coords: &[(usize, Monomial)],
    ) -> Result<Vec<Vec<Q>>> {
        let mut span: Vec<Vec<Q>> = Vec::new();
        // module relations, multiplied into the slice
        for (col, u) in self.relations.iter().zip(&self.relation_weights) {
            for q_mon in self.algebra.monomials_of_weight(&chi.sub(u))? {
                let mut v = vec![Q::zero(); coords.len()];
                for (i, entry) in col.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    let prod = entry.mul_term(&q_mon, &One::one());
                    for (m, c) in prod.terms() {
                        let idx = Self::coord_index(coords, i, m)
                            .expect("product monomial stays in the slice");
                        let t = &v[idx] + c;
                        v[idx] = t;
                    }
                }
                span.push(v);
            }
        }
        // level ideal times each generator
        let gb = self.algebra.level(level).groebner(MonomialOrder::GrevLex);
        let action = self.algebra.base().action();
        for p in &gb.polys {
            let comps = crate::grading::homogeneous_components(p, action)?;
            let w_p = comps.into_keys().next().expect("nonzero basis element");
            for (i, w_gen) in self.generator_weights.iter().enumerate() {
                let target = chi.sub(&w_p).sub(w_gen);
                for q_mon in self.algebra.monomials_of_weight(&target)? {
                    let prod = p.mul_term(&q_mon, &One::one());
                    let mut v = vec![Q::zero(); coords.len()];
                    for (m, c) in prod.terms() {
                        let idx = Self::coord_index(coords, i, m)
                            .expect("product monomial stays in the slice");
                        let t = &v[idx] + c;
                        v[idx] = t;
                    }
                    span.push(v);
                }
            }
        }
        Ok(span)
    }

    /// dim of the weight-chi piece of M_n for n = 0..=depth.
    pub fn isotypic_dims(&self, chi: &WeightVector) -> Result<Vec<usize>> {
        let coords = self.slice_coords(chi)?;
        let mut dims = Vec::with_capacity(self.algebra.depth() + 1);
        for level in 0..=self.algebra.depth() {
            if coords.is_empty() {
                dims.push(0);
                continue;
            }
            let span = self.relation_span(chi, level, &coords)?;
            dims.push(coords.len() - rank(span));
        }
        Ok(dims)
    }
}

/// Stabilization for a grounded module: the bound is n_chi + |m| with m the
/// minimal Kempf weight of the generators.
pub fn check_stabilization_module(
    module: &AdicModule,
    chars: &[WeightVector],
) -> Result<StabilizationReport> {
    let m = module.minimal_kempf_weight()?;
    let mut rows = Vec::with_capacity(chars.len());
    for chi in chars {
        let dims = module.isotypic_dims(chi)?;
        let predicted = module.algebra.kempf_weight(chi)? + m.abs();
        rows.push(stabilization_row(
            chi,
            dims,
            predicted,
            module.algebra.depth(),
        )?);
    }
    Ok(StabilizationReport { rows })
}

/// Whether lifted generators that surject onto M_0 generate the whole module
/// at every computed level and requested character.
///
/// Errors when the generators fail the M_0 surjectivity precondition.
pub fn check_generation(
    module: &AdicModule,
    lifted_gens: &[Vec<MultiPoly>],
    chars: &[WeightVector],
) -> Result<bool> {
    let r = module.generator_weights.len();
    let action = module.algebra.base().action();
    // each lifted generator must be a homogeneous vector
    let mut gen_weights = Vec::with_capacity(lifted_gens.len());
    for g in lifted_gens {
        if g.len() != r {
            return Err(Error::DimensionMismatch(
                "lifted generator has the wrong number of components".into(),
            ));
        }
        let mut weight: Option<WeightVector> = None;
        for (i, entry) in g.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let comps = crate::grading::homogeneous_components(entry, action)?;
            if comps.len() != 1 {
                return Err(Error::Inhomogeneous(format!(
                    "lifted generator entry {entry}"
                )));
            }
            let u = comps
                .into_keys()
                .next()
                .unwrap()
                .add(&module.generator_weights[i]);
            match &weight {
                None => weight = Some(u),
                Some(prev) if *prev == u => {}
                Some(_) => {
                    return Err(Error::Inhomogeneous(
                        "lifted generator mixes weights".into(),
                    ))
                }
            }
        }
        gen_weights
            .push(weight.ok_or_else(|| Error::BadPresentation("zero lifted generator".into()))?);
    }

    // surjectivity onto M_0: constant parts must span k^r together with the
    // relation constants
    let mut m0_rows: Vec<Vec<Q>> = Vec::new();
    for col in &module.relations {
        m0_rows.push(col.iter().map(|p| p.constant_term()).collect());
    }
    let relation_rank = rank(m0_rows.clone());
    for g in lifted_gens {
        m0_rows.push(g.iter().map(|p| p.constant_term()).collect());
    }
    let mut probe = m0_rows.clone();
    let full = rref(&mut probe).len();
    if full < r {
        return Err(Error::Precondition(format!(
            "lifted generators do not surject onto M_0 (rank {full} of {r}; \
             relations alone give {relation_rank})"
        )));
    }

    // at every level and character, generator multiples plus relations must
    // fill the slice
    for chi in chars {
        let coords = module.slice_coords(chi)?;
        if coords.is_empty() {
            continue;
        }
        for level in 0..=module.algebra.depth() {
            let mut span = module.relation_span(chi, level, &coords)?;
            for (g, u) in lifted_gens.iter().zip(&gen_weights) {
                for q_mon in module.algebra.monomials_of_weight(&chi.sub(u))? {
                    let mut v = vec![Q::zero(); coords.len()];
                    for (i, entry) in g.iter().enumerate() {
                        if entry.is_zero() {
                            continue;
                        }
                        let prod = entry.mul_term(&q_mon, &One::one());
                        for (m, c) in prod.terms() {
                            let idx = AdicModule::coord_index(&coords, i, m)
                                .expect("product monomial stays in the slice");
                            let t = &v[idx] + c;
                            v[idx] = t;
                        }
                    }
                    span.push(v);
                }
            }
            if rank(span) < coords.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Module generator weight data as it appears in input: either finitely many
/// explicit weights, an infinite family at one weight, or an arithmetic
/// chain of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorWeightSpec {
    Single(WeightVector),
    RepeatedInfinitely(WeightVector),
    Chain {
        start: WeightVector,
        step: WeightVector,
    },
}

/// Validate groundedness: the weight set of M_0 must be finite. Returns the
/// distinct weight set; rejects chains with nonzero step, diagnosing
/// unbounded-below weight sets through the Kempf pairing.
pub fn validate_grounded(
    specs: &[GeneratorWeightSpec],
    kempf: &WeightVector,
) -> Result<Vec<WeightVector>> {
    let mut weights: Vec<WeightVector> = Vec::new();
    for spec in specs {
        match spec {
            GeneratorWeightSpec::Single(w) | GeneratorWeightSpec::RepeatedInfinitely(w) => {
                if !weights.contains(w) {
                    weights.push(w.clone());
                }
            }
            GeneratorWeightSpec::Chain { start, step } => {
                if step.is_zero() {
                    if !weights.contains(start) {
                        weights.push(start.clone());
                    }
                    continue;
                }
                let pairing = kempf.dot(step);
                let diag = if pairing < 0 {
                    format!(
                        "infinite descending weight set: chain from {start} with step {step} \
                         is unbounded below"
                    )
                } else {
                    format!("infinite weight set: chain from {start} with step {step}")
                };
                return Err(Error::NotGrounded(diag));
            }
        }
    }
    weights.sort();
    Ok(weights)
}
