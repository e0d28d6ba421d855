//! Buchberger's algorithm with the two classical pair-elimination criteria,
//! multivariate division, and reduced-basis normalization.

use num_rational::BigRational;

use crate::poly::{Monomial, MonomialOrder, MultiPoly};

/// Remainder of `f` on division by `basis` under `order`. Deterministic: the
/// first listed divisor whose leading monomial divides is used.
pub fn reduce(f: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut remainder = MultiPoly::zero(&ring);
    let leads: Vec<(Monomial, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g
                .leading_term(order)
                .expect("zero polynomial in reduction basis");
            (m.clone(), c.clone())
        })
        .collect();
    while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut divided = false;
        for (g, (glm, glc)) in basis.iter().zip(&leads) {
            if glm.divides(&lm) {
                let factor = &lc / glc;
                let quot = glm.quotient_of(&lm);
                p = p.sub(&g.mul_term(&quot, &factor));
                divided = true;
                break;
            }
        }
        if !divided {
            let term = MultiPoly::monomial(&ring, lm.clone(), lc.clone());
            remainder = remainder.add(&term);
            p = p.sub(&term);
        }
    }
    remainder
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (flm, flc) = f.leading_term(order).unwrap();
    let (glm, glc) = g.leading_term(order).unwrap();
    let lcm = flm.lcm(glm);
    let fq = flm.quotient_of(&lcm);
    let gq = glm.quotient_of(&lcm);
    let one = num_traits::One::one();
    f.mul_term(&fq, &(&one / flc))
        .sub(&g.mul_term(&gq, &(&one / glc)))
}

/// Compute the unique reduced Groebner basis of the ideal spanned by `gens`.
///
/// Pair selection is by increasing lcm (normal strategy). Pairs are dropped by
/// the coprimality criterion and the chain criterion before any reduction.
pub fn buchberger(gens: &[MultiPoly], order: MonomialOrder) -> Vec<MultiPoly> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let mut basis: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Vec::new();
    }

    let lm = |p: &MultiPoly| -> Monomial { p.leading_term(order).unwrap().0.clone() };

    // queue kept sorted with the smallest lcm last (normal selection)
    let mut pairs: Vec<(Monomial, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((lm(&basis[j]).lcm(&lm(&basis[i])), j, i));
        }
    }
    let resort = |pairs: &mut Vec<(Monomial, usize, usize)>| {
        pairs.sort_by(|a, b| order.cmp(&a.0, &b.0).reverse());
    };
    resort(&mut pairs);
    let mut done: std::collections::BTreeSet<(usize, usize)> = Default::default();

    while let Some((_, i, j)) = pairs.pop() {
        done.insert((i, j));

        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);
        // Buchberger's first criterion: coprime leading monomials
        if lmi.is_coprime_with(&lmj) {
            continue;
        }
        // chain criterion: some k with lm(k) | lcm(i,j) and both pairs settled
        let lcm_ij = lmi.lcm(&lmj);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            if !lm(&basis[k]).divides(&lcm_ij) {
                return false;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            done.contains(&p1) && done.contains(&p2)
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let new_idx = basis.len();
            let lm_new = r.leading_term(order).unwrap().0.clone();
            for k in 0..new_idx {
                pairs.push((lm(&basis[k]).lcm(&lm_new), k, new_idx));
            }
            basis.push(r);
            resort(&mut pairs);
        }
    }

    reduce_basis(basis, order, &ring)
}

/// Normalize to the unique reduced basis: monic, minimal, tail-reduced,
/// sorted with leading monomials descending.
fn reduce_basis(
    mut basis: Vec<MultiPoly>,
    order: MonomialOrder,
    _ring: &std::sync::Arc<crate::poly::PolyRing>,
) -> Vec<MultiPoly> {
    basis.retain(|p| !p.is_zero());
    for p in &mut basis {
        *p = p.monic(order);
    }
    // minimalize: drop any element whose leading monomial another divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_term(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_term(order).unwrap().0.clone();
            if lmj.divides(&lmi) && (lmi != lmj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();
    // tail-reduce each against the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, p)| (j != i).then(|| p.clone()))
            .collect();
        let r = reduce(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(la, lb).reverse()
    });
    reduced
}
