//! Built-in group/monoid/action examples. Every entry is fully validated at
//! load time: presentation invariants run in the constructors, and the zero
//! point is checked against the Kempf limit whenever a Kempf one-parameter
//! subgroup exists.

use std::sync::Arc;

use kempf_core::coaction::{find_kempf_opsg, GroupPresentation, MonoidPresentation};
use kempf_core::error::{Error, Result};
use kempf_core::grading::{GradedAlgebra, TorusAction, WeightMonoid, WeightVector};
use kempf_core::ideal::Ideal;
use kempf_core::poly::PolyRing;
use kempf_core::presentations;

pub struct ResolvedEntry {
    pub key: &'static str,
    pub description: &'static str,
    pub group: GroupPresentation,
    pub monoid: MonoidPresentation,
    /// Default acted algebra (ring, defining ideal, maximal-torus action).
    pub default_algebra: Option<GradedAlgebra>,
}

fn w(v: &[i64]) -> WeightVector {
    WeightVector(v.to_vec())
}

fn free_algebra(names: &[&str], weights: Vec<WeightVector>) -> Result<GradedAlgebra> {
    let rank = weights[0].rank();
    let ring = PolyRing::new(names.to_vec())?;
    GradedAlgebra::new(
        Arc::clone(&ring),
        Ideal::zero(Arc::clone(&ring)),
        TorusAction::new(rank, weights)?,
    )
}

pub const KEYS: &[&str] = &[
    "gm-a1",
    "gm-trivial",
    "gl2-m2-std",
    "gl2-m2-dual",
    "gl2-m2-sum",
    "m2",
    "m3",
    "upper-tri-2",
    "opposite-weights",
];

pub fn load(key: &str) -> Result<ResolvedEntry> {
    match key {
        "gm-a1" => {
            let tbar = WeightMonoid::new(1, vec![w(&[1])])?;
            let (group, monoid) = presentations::split_torus(&[w(&[1]), w(&[-1])], tbar)?;
            Ok(ResolvedEntry {
                key: "gm-a1",
                description: "G_m in its closure A^1, acting on the plane with weights (1, -1)",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["x", "y"], vec![w(&[1]), w(&[-1])])?),
            })
        }
        "gm-trivial" => {
            let tbar = WeightMonoid::new(1, vec![w(&[1])])?;
            let (group, monoid) = presentations::split_torus(&[w(&[0]), w(&[0])], tbar)?;
            Ok(ResolvedEntry {
                key: "gm-trivial",
                description: "G_m in A^1 acting trivially on the plane",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["x", "y"], vec![w(&[0]), w(&[0])])?),
            })
        }
        "gl2-m2-std" => {
            let (group, monoid) = presentations::gl2(presentations::Gl2Action::Standard)?;
            Ok(ResolvedEntry {
                key: "gl2-m2-std",
                description: "GL_2 in M_2 with the standard representation on A^2",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["v1", "v2"], vec![w(&[1, 0]), w(&[0, 1])])?),
            })
        }
        "gl2-m2-dual" => {
            let (group, monoid) = presentations::gl2(presentations::Gl2Action::Dual)?;
            Ok(ResolvedEntry {
                key: "gl2-m2-dual",
                description: "GL_2 in M_2 with the dual (inverse-transpose) representation",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["v1", "v2"], vec![w(&[-1, 0]), w(&[0, -1])])?),
            })
        }
        "gl2-m2-sum" => {
            let (group, monoid) = presentations::gl2(presentations::Gl2Action::SumStandardDual)?;
            Ok(ResolvedEntry {
                key: "gl2-m2-sum",
                description: "GL_2 in M_2 on standard plus dual, acting on A^4",
                group,
                monoid,
                default_algebra: Some(free_algebra(
                    &["v1", "v2", "v3", "v4"],
                    vec![w(&[1, 0]), w(&[0, 1]), w(&[-1, 0]), w(&[0, -1])],
                )?),
            })
        }
        "m2" => {
            let (group, monoid) = presentations::gl2(presentations::Gl2Action::Standard)?;
            Ok(ResolvedEntry {
                key: "m2",
                description: "the monoid of 2x2 matrices over its unit group GL_2",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["v1", "v2"], vec![w(&[1, 0]), w(&[0, 1])])?),
            })
        }
        "m3" => {
            let (group, monoid) = presentations::gl3()?;
            Ok(ResolvedEntry {
                key: "m3",
                description: "the monoid of 3x3 matrices over its unit group GL_3",
                group,
                monoid,
                default_algebra: Some(free_algebra(
                    &["v1", "v2", "v3"],
                    vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])],
                )?),
            })
        }
        "upper-tri-2" => {
            let (group, monoid) = presentations::upper_triangular_2()?;
            Ok(ResolvedEntry {
                key: "upper-tri-2",
                description: "the monoid of upper-triangular 2x2 matrices, searched through \
                              the diagonal torus",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["v1", "v2"], vec![w(&[1, 0]), w(&[0, 1])])?),
            })
        }
        "opposite-weights" => {
            let (group, monoid) = presentations::opposite_weights()?;
            Ok(ResolvedEntry {
                key: "opposite-weights",
                description: "synthetic torus data with opposite generator weights (not Kempf)",
                group,
                monoid,
                default_algebra: Some(free_algebra(&["x"], vec![w(&[1])])?),
            })
        }
        other => Err(Error::Parse(format!("unknown catalog key `{other}`"))),
    }
}

/// Load and structurally validate every entry, including the Kempf-limit
/// consistency of the zero point when a Kempf cocharacter exists.
pub fn load_all_validated() -> Result<Vec<ResolvedEntry>> {
    let mut out = Vec::with_capacity(KEYS.len());
    for key in KEYS {
        let entry = load(key)?;
        if let Some(kempf) = find_kempf_opsg(&entry.monoid)? {
            entry.monoid.validate_zero_point(&kempf)?;
        }
        out.push(entry);
    }
    Ok(out)
}
