//! The structured input document: a TOML schema with polynomial strings in
//! the kernel's plain-text grammar. One format serves files, stdin, tests,
//! and the docs; see `docs/input-format.md`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use kempf_core::coaction::{GroupPresentation, MonoidPresentation};
use kempf_core::error::Error;
use kempf_core::formal::GeneratorWeightSpec;
use kempf_core::grading::{GradedAlgebra, TorusAction, WeightMonoid, WeightVector};
use kempf_core::ideal::Ideal;
use kempf_core::linalg::Q;
use kempf_core::parse_poly;
use kempf_core::poly::{MultiPoly, PolyRing};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDoc {
    /// Built-in example supplying group/monoid (and defaults for the rest).
    pub catalog: Option<String>,
    pub ring: Option<RingSection>,
    pub ideal: Option<IdealSection>,
    pub torus: Option<TorusSection>,
    pub group: Option<GroupSection>,
    pub monoid: Option<MonoidSection>,
    pub module: Option<ModuleSection>,
    pub params: Option<ParamsSection>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSection {
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSection {
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusSection {
    pub rank: usize,
    /// One weight row per ring variable.
    pub weights: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    pub vars: Vec<String>,
    pub relations: Vec<String>,
    pub action: Vec<Vec<String>>,
    pub inverse_action: Vec<Vec<String>>,
    /// Coordinates of the identity element, as rational strings.
    pub identity: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidSection {
    pub generators: Vec<String>,
    pub zero_point: Vec<String>,
    pub central_rank: usize,
    /// One weight row per group variable.
    pub central_weights: Vec<Vec<i64>>,
    pub tbar_rank: usize,
    pub tbar_generators: Vec<Vec<i64>>,
    pub central_embedding: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    #[serde(default)]
    pub generator_weights: Vec<Vec<i64>>,
    /// Infinite weight families, validated for groundedness at parse time.
    #[serde(default)]
    pub generator_repeats: Vec<Vec<i64>>,
    #[serde(default)]
    pub generator_chains: Vec<ChainSpec>,
    /// Relation columns: one polynomial per generator.
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainSpec {
    pub start: Vec<i64>,
    pub step: Vec<i64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    pub depth: Option<usize>,
    pub degree_bound: Option<u32>,
    pub saturation_cap: Option<usize>,
    /// Explicit Kempf cocharacter in the maximal-torus cocharacter lattice.
    pub kempf: Option<Vec<i64>>,
    #[serde(default)]
    pub characters: Vec<Vec<i64>>,
}

pub fn parse_doc(text: &str) -> Result<ProblemDoc, Error> {
    toml::from_str(text).map_err(|e| Error::Parse(format!("input document: {e}")))
}

pub fn doc_to_string(doc: &ProblemDoc) -> Result<String, Error> {
    toml::to_string(doc).map_err(|e| Error::Parse(format!("serialize: {e}")))
}

fn parse_rational(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den: num_bigint::BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den == 0.into() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Q::new(num, den))
}

fn weight_rows(rows: &[Vec<i64>]) -> Vec<WeightVector> {
    rows.iter().map(|r| WeightVector(r.clone())).collect()
}

impl GroupSection {
    pub fn build(&self) -> Result<GroupPresentation, Error> {
        let ring = PolyRing::new(self.vars.clone())?;
        let rel_polys = self
            .relations
            .iter()
            .map(|s| parse_poly(&ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        let relations = Ideal::new(Arc::clone(&ring), rel_polys)?;
        let parse_matrix = |rows: &[Vec<String>]| -> Result<Vec<Vec<MultiPoly>>, Error> {
            rows.iter()
                .map(|row| row.iter().map(|s| parse_poly(&ring, s)).collect())
                .collect()
        };
        let action = parse_matrix(&self.action)?;
        let inverse_action = parse_matrix(&self.inverse_action)?;
        let identity = self
            .identity
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        GroupPresentation::new(ring, relations, action, inverse_action, identity)
    }
}

impl MonoidSection {
    pub fn build(&self, group: GroupPresentation) -> Result<MonoidPresentation, Error> {
        let ring = Arc::clone(group.ring());
        let gens = self
            .generators
            .iter()
            .map(|s| parse_poly(&ring, s))
            .collect::<Result<Vec<_>, _>>()?;
        let zero = self
            .zero_point
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        let central = TorusAction::new(self.central_rank, weight_rows(&self.central_weights))?;
        let tbar = WeightMonoid::new(self.tbar_rank, weight_rows(&self.tbar_generators))?;
        MonoidPresentation::new(
            group,
            gens,
            zero,
            central,
            tbar,
            weight_rows(&self.central_embedding),
        )
    }
}

/// Fully resolved inputs for one invocation.
pub struct Resolved {
    pub algebra: Option<GradedAlgebra>,
    pub group: Option<GroupPresentation>,
    pub monoid: Option<MonoidPresentation>,
    pub module_weights: Vec<GeneratorWeightSpec>,
    pub module_relations: Vec<Vec<String>>,
    pub depth: usize,
    pub degree_bound: Option<u32>,
    pub saturation_cap: usize,
    pub kempf_cochar: Option<WeightVector>,
    pub characters: Vec<WeightVector>,
}

pub const DEFAULT_DEPTH: usize = 6;

impl ProblemDoc {
    /// Resolve against an optional catalog entry. Explicit sections win over
    /// catalog defaults.
    pub fn resolve(
        &self,
        catalog: Option<&crate::catalog::ResolvedEntry>,
    ) -> Result<Resolved, Error> {
        let group = match &self.group {
            Some(g) => Some(g.build()?),
            None => catalog.map(|c| c.group.clone()),
        };
        let monoid = match (&self.monoid, &group) {
            (Some(m), Some(g)) => Some(m.build(g.clone())?),
            (Some(_), None) => {
                return Err(Error::Parse(
                    "a [monoid] section requires a [group] section or catalog entry".into(),
                ))
            }
            (None, _) => catalog.map(|c| c.monoid.clone()),
        };

        let algebra = match (&self.ring, &self.torus) {
            (Some(ring_sec), Some(torus_sec)) => {
                let ring = PolyRing::new(ring_sec.vars.clone())?;
                let gens = match &self.ideal {
                    Some(i) => i
                        .generators
                        .iter()
                        .map(|s| parse_poly(&ring, s))
                        .collect::<Result<Vec<_>, _>>()?,
                    None => Vec::new(),
                };
                let ideal = Ideal::new(Arc::clone(&ring), gens)?;
                let action = TorusAction::new(torus_sec.rank, weight_rows(&torus_sec.weights))?;
                if action.nvars() != ring.nvars() {
                    return Err(Error::Parse(
                        "the torus weight matrix needs one row per ring variable".into(),
                    ));
                }
                Some(GradedAlgebra::new(ring, ideal, action)?)
            }
            (None, None) => catalog.and_then(|c| c.default_algebra.clone()),
            _ => {
                return Err(Error::Parse(
                    "[ring] and [torus] sections must be given together".into(),
                ))
            }
        };

        let params = self.params.clone().unwrap_or_default();
        let mut module_weights: Vec<GeneratorWeightSpec> = Vec::new();
        let mut module_relations = Vec::new();
        if let Some(m) = &self.module {
            for w in &m.generator_weights {
                module_weights.push(GeneratorWeightSpec::Single(WeightVector(w.clone())));
            }
            for w in &m.generator_repeats {
                module_weights.push(GeneratorWeightSpec::RepeatedInfinitely(WeightVector(
                    w.clone(),
                )));
            }
            for c in &m.generator_chains {
                module_weights.push(GeneratorWeightSpec::Chain {
                    start: WeightVector(c.start.clone()),
                    step: WeightVector(c.step.clone()),
                });
            }
            module_relations = m.relations.clone();
        }

        Ok(Resolved {
            algebra,
            group,
            monoid,
            module_weights,
            module_relations,
            depth: params.depth.unwrap_or(DEFAULT_DEPTH),
            degree_bound: params.degree_bound,
            saturation_cap: params
                .saturation_cap
                .unwrap_or(kempf_core::coaction::DEFAULT_SATURATION_CAP),
            kempf_cochar: params.kempf.map(WeightVector),
            characters: params
                .characters
                .iter()
                .map(|c| WeightVector(c.clone()))
                .collect(),
        })
    }
}
