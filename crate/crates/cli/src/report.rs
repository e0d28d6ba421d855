//! Deterministic plain-text reports: canonical generator lists, generator
//! image lists for the structure maps, and a verification block.

use std::fmt::Write as _;

use kempf_core::bb::BBResult;
use kempf_core::coaction::{GroupPresentation, MonoidPresentation};
use kempf_core::formal::StabilizationReport;
use kempf_core::grading::{GradedAlgebra, WeightVector};
use kempf_core::ideal::Ideal;
use kempf_core::linalg::LinearSubspace;
use kempf_core::poly::{MonomialOrder, MultiPoly, PolyRing};

pub fn ideal_line(ideal: &Ideal, order: MonomialOrder) -> String {
    let gb = ideal.groebner(order);
    if gb.polys.is_empty() {
        "[0]".to_string()
    } else {
        format!(
            "[{}]",
            gb.polys
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

fn map_line(ring: &PolyRing, images: &[MultiPoly]) -> String {
    images
        .iter()
        .enumerate()
        .map(|(j, p)| format!("{} -> {}", ring.var_name(j), p))
        .collect::<Vec<_>>()
        .join(", ")
}

fn verify_line(name: &str, ok: bool) -> String {
    format!("verify {name}: {}", if ok { "ok" } else { "FAIL" })
}

pub fn bb_report(
    source: &str,
    alg: &GradedAlgebra,
    out: &BBResult,
    order: MonomialOrder,
) -> String {
    let ring = alg.ring();
    let mut s = String::new();
    let _ = writeln!(s, "bb report");
    let _ = writeln!(s, "source: {source}");
    let _ = writeln!(s, "ring: [{}]", ring.var_names().join(", "));
    let _ = writeln!(
        s,
        "attractor ideal: {}",
        ideal_line(&out.attractor_ideal, order)
    );
    let _ = writeln!(s, "fixed ideal: {}", ideal_line(&out.fixed_ideal, order));
    let _ = writeln!(s, "unit map: {}", map_line(ring, &out.unit_map.images));
    let _ = writeln!(s, "limit map: {}", map_line(ring, &out.limit_map.images));
    let _ = writeln!(
        s,
        "section map: {}",
        map_line(ring, &out.section_map.images)
    );
    let _ = writeln!(
        s,
        "{}",
        verify_line("containment", out.verification.containment)
    );
    let _ = writeln!(
        s,
        "{}",
        verify_line("section identity", out.verification.section_identity)
    );
    let _ = writeln!(
        s,
        "{}",
        verify_line("gbar stable", out.verification.gbar_stable)
    );
    let _ = writeln!(
        s,
        "{}",
        verify_line(
            "fixed action trivial",
            out.verification.fixed_action_trivial
        )
    );
    s
}

pub fn kempf_report(source: &str, found: Option<&WeightVector>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "kempf report");
    let _ = writeln!(s, "source: {source}");
    match found {
        Some(cochar) => {
            let _ = writeln!(s, "cochar: {cochar}");
        }
        None => {
            let _ = writeln!(s, "not Kempf through given torus");
        }
    }
    s
}

pub fn fixed_report(
    source: &str,
    alg: &GradedAlgebra,
    fix: &Ideal,
    order: MonomialOrder,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "fixed report");
    let _ = writeln!(s, "source: {source}");
    let _ = writeln!(s, "ring: [{}]", alg.ring().var_names().join(", "));
    let _ = writeln!(s, "fixed ideal: {}", ideal_line(fix, order));
    s
}

pub fn stabilize_report(
    source: &str,
    kind: &str,
    depth: usize,
    report: &StabilizationReport,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "stabilization report");
    let _ = writeln!(s, "source: {source}");
    let _ = writeln!(s, "subject: {kind}");
    let _ = writeln!(s, "depth: {depth}");
    for row in &report.rows {
        let dims = row
            .dims
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let status = if row.conclusive { "ok" } else { "inconclusive" };
        let _ = writeln!(
            s,
            "character {}: predicted {}, observed {}, dims [{dims}], status {status}",
            row.chi, row.predicted, row.observed
        );
    }
    s
}

pub fn algebraize_report(source: &str, pieces: &[(WeightVector, Vec<MultiPoly>)]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebraization report");
    let _ = writeln!(s, "source: {source}");
    for (chi, basis) in pieces {
        let list = if basis.is_empty() {
            "[]".to_string()
        } else {
            format!(
                "[{}]",
                basis
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        };
        let _ = writeln!(s, "character {}: dim {}, basis {}", chi, basis.len(), list);
    }
    s
}

pub fn universal_quotient_report(source: &str, u: &LinearSubspace) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "universal quotient report");
    let _ = writeln!(s, "source: {source}");
    let _ = writeln!(s, "ambient dual dimension: {}", u.ambient_dim());
    let _ = writeln!(s, "quotient dimension: {}", u.dim());
    for row in u.basis() {
        let coords = row
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(s, "dual basis row: [{coords}]");
    }
    s
}

pub fn catalog_show(
    entry_key: &str,
    description: &str,
    group: &GroupPresentation,
    monoid: &MonoidPresentation,
    algebra: Option<&GradedAlgebra>,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "catalog entry: {entry_key}");
    let _ = writeln!(s, "description: {description}");
    let _ = writeln!(s, "group ring: [{}]", group.ring().var_names().join(", "));
    let _ = writeln!(
        s,
        "relations: {}",
        ideal_line(group.relations(), MonomialOrder::GrevLex)
    );
    for (name, matrix) in [
        ("action", group.action_matrix()),
        ("inverse action", group.inverse_action_matrix()),
    ] {
        let rows = matrix
            .iter()
            .map(|row| {
                format!(
                    "[{}]",
                    row.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(s, "{name}: [{rows}]");
    }
    let gens = monoid
        .monoid_generators()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(s, "monoid generators: [{gens}]");
    let tbar = monoid
        .tbar_weight_monoid()
        .generators()
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(s, "closure weight monoid: [{tbar}]");
    if let Some(alg) = algebra {
        let _ = writeln!(s, "acted ring: [{}]", alg.ring().var_names().join(", "));
        let weights = alg
            .action()
            .variable_weights()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(s, "acted weights: [{weights}]");
        let _ = writeln!(
            s,
            "defining ideal: {}",
            ideal_line(alg.defining_ideal(), MonomialOrder::GrevLex)
        );
    }
    s
}
