//! Property tests for the algebra kernel: normal-form arithmetic, reduced
//! basis uniqueness, subspace lattice facts, weight decompositions, and the
//! coaction laws.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use kempf_core::elim::subalgebra_membership;
use kempf_core::grading::{
    homogeneous_components, CharacterSet, GradedAlgebra, TorusAction, WeightMonoid, WeightVector,
};
use kempf_core::ideal::Ideal;
use kempf_core::linalg::{rank, LinearSubspace, Q};
use kempf_core::poly::{Monomial, MonomialOrder, MultiPoly, PolyRing};
use kempf_core::presentations::split_torus;

fn q(n: i64) -> Q {
    BigRational::from_integer(n.into())
}

fn ring3() -> Arc<PolyRing> {
    PolyRing::new(vec!["x", "y", "z"]).unwrap()
}

prop_compose! {
    fn arb_monomial(nvars: usize, max_deg: u32)
        (exps in proptest::collection::vec(0u32..=2, nvars))
        -> Monomial
    {
        let mut exps = exps;
        let n = exps.len();
        let mut total: u32 = exps.iter().sum();
        let mut i = 0;
        while total > max_deg {
            if exps[i % n] > 0 {
                exps[i % n] -= 1;
                total -= 1;
            }
            i += 1;
        }
        Monomial::new(exps)
    }
}

prop_compose! {
    fn arb_poly(nvars: usize, max_deg: u32, max_terms: usize)
        (terms in proptest::collection::vec(
            (arb_monomial(nvars, max_deg), -4i64..=4),
            1..=max_terms,
        ))
        -> Vec<(Monomial, i64)>
    {
        terms
    }
}

fn to_poly(ring: &Arc<PolyRing>, terms: &[(Monomial, i64)]) -> MultiPoly {
    MultiPoly::from_terms(ring, terms.iter().map(|(m, c)| (m.clone(), q(*c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_multiplicative(
        gens in proptest::collection::vec(arb_poly(3, 3, 3), 1..=2),
        f in arb_poly(3, 3, 3),
        g in arb_poly(3, 3, 3),
    ) {
        let ring = ring3();
        let polys: Vec<MultiPoly> = gens.iter().map(|t| to_poly(&ring, t)).collect();
        let ideal = Ideal::new(Arc::clone(&ring), polys).unwrap();
        let gb = ideal.groebner(MonomialOrder::GrevLex);
        let f = to_poly(&ring, &f);
        let g = to_poly(&ring, &g);
        let lhs = gb.normal_form(&f.mul(&g));
        let rhs = gb.normal_form(&gb.normal_form(&f).mul(&gb.normal_form(&g)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduced_basis_ignores_generator_order_and_scale(
        gens in proptest::collection::vec(arb_poly(3, 3, 3), 1..=3),
        scales in proptest::collection::vec((1i64..=5, prop::bool::ANY), 3),
    ) {
        let ring = ring3();
        let polys: Vec<MultiPoly> = gens.iter().map(|t| to_poly(&ring, t)).collect();
        let a = Ideal::new(Arc::clone(&ring), polys.clone()).unwrap();

        let mut scaled: Vec<MultiPoly> = polys
            .iter()
            .zip(scales.iter().cycle())
            .map(|(p, (s, neg))| {
                let c = if *neg { -q(*s) } else { q(*s) };
                p.scale(&c)
            })
            .collect();
        scaled.reverse();
        let b = Ideal::new(Arc::clone(&ring), scaled).unwrap();

        prop_assert!(a.equal(&b).unwrap());
        prop_assert_eq!(
            a.groebner(MonomialOrder::GrevLex).polys,
            b.groebner(MonomialOrder::GrevLex).polys
        );
    }

    #[test]
    fn subspace_intersection_is_the_largest_common_subspace(
        rows_a in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..=3),
        rows_b in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..=3),
    ) {
        let to_q = |rows: &Vec<Vec<i64>>| -> Vec<Vec<Q>> {
            rows.iter().map(|r| r.iter().map(|&n| q(n)).collect()).collect()
        };
        let a = LinearSubspace::from_spanning(4, to_q(&rows_a)).unwrap();
        let b = LinearSubspace::from_spanning(4, to_q(&rows_b)).unwrap();
        let c = a.intersect(&b).unwrap();
        prop_assert!(c.is_subspace_of(&a));
        prop_assert!(c.is_subspace_of(&b));
        // dimension formula against a brute-force rank of the stacked system
        let mut stacked = a.basis().to_vec();
        stacked.extend(b.basis().to_vec());
        let sum_dim = rank(stacked);
        prop_assert_eq!(c.dim() + sum_dim, a.dim() + b.dim());
    }

    #[test]
    fn weights_add_under_monomial_multiplication(
        m1 in arb_monomial(3, 4),
        m2 in arb_monomial(3, 4),
        ws in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 3),
    ) {
        let action = TorusAction::new(
            2,
            ws.into_iter().map(WeightVector).collect(),
        ).unwrap();
        let lhs = action.weight_of(&m1.mul(&m2)).unwrap();
        let rhs = action.weight_of(&m1).unwrap().add(&action.weight_of(&m2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn components_sum_back_and_are_stable(
        f in arb_poly(3, 4, 5),
        ws in proptest::collection::vec(-2i64..=2, 3),
    ) {
        let ring = ring3();
        let action = TorusAction::new(
            1,
            ws.into_iter().map(|w| WeightVector(vec![w])).collect(),
        ).unwrap();
        let f = to_poly(&ring, &f);
        let comps = homogeneous_components(&f, &action).unwrap();
        let mut total = MultiPoly::zero(&ring);
        for (w, piece) in &comps {
            let inner = homogeneous_components(piece, &action).unwrap();
            prop_assert_eq!(inner.len(), 1);
            prop_assert_eq!(inner.keys().next().unwrap(), w);
            total = total.add(piece);
        }
        prop_assert_eq!(total, f);
    }

    #[test]
    fn monoid_membership_is_closed_under_addition(
        gens in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 1..=3),
        c1 in proptest::collection::vec(0i64..=2, 3),
        c2 in proptest::collection::vec(0i64..=2, 3),
    ) {
        let gens: Vec<WeightVector> = gens.into_iter().map(WeightVector).collect();
        let monoid = WeightMonoid::new(2, gens.clone()).unwrap();
        let combine = |cs: &[i64]| {
            let mut acc = WeightVector::zero(2);
            for (g, &c) in gens.iter().zip(cs) {
                acc = acc.add(&g.scaled(c));
            }
            acc
        };
        let chi1 = combine(&c1);
        let chi2 = combine(&c2);
        prop_assert!(monoid.contains(&chi1).unwrap());
        prop_assert!(monoid.contains(&chi2).unwrap());
        prop_assert!(monoid.contains(&chi1.add(&chi2)).unwrap());
    }

    #[test]
    fn subalgebra_expressions_evaluate_back(
        g1 in arb_poly(2, 2, 2),
        g2 in arb_poly(2, 2, 2),
        e in proptest::collection::vec((0u32..=2, 0u32..=2, -3i64..=3), 1..=2),
    ) {
        let ring = PolyRing::new(vec!["x", "y"]).unwrap();
        let gens = vec![to_poly(&ring, &g1), to_poly(&ring, &g2)];
        // f is an explicit polynomial in the generators
        let mut f = MultiPoly::zero(&ring);
        for (a, b, c) in &e {
            f = f.add(&gens[0].pow(*a).mul(&gens[1].pow(*b)).scale(&q(*c)));
        }
        let pres = Ideal::zero(Arc::clone(&ring));
        let expr = subalgebra_membership(&f, &gens, &pres).unwrap();
        prop_assert!(expr.is_some());
        let expr = expr.unwrap();
        let evaluated = expr.substitute(&gens).unwrap();
        prop_assert_eq!(evaluated, f);
    }

    #[test]
    fn isotypic_dimension_is_presentation_independent(
        gens in proptest::collection::vec(arb_monomial(3, 3), 1..=2),
        mix in -2i64..=2,
        chi in 0i64..=3,
        bound in 2u32..=4,
    ) {
        let ring = ring3();
        let action = TorusAction::new(
            1,
            vec![WeightVector(vec![1]), WeightVector(vec![1]), WeightVector(vec![2])],
        ).unwrap();
        // weight-homogeneous generators: monomial times (1 + optional partner)
        let polys: Vec<MultiPoly> = gens
            .iter()
            .map(|m| MultiPoly::monomial(&ring, m.clone(), q(1)))
            .collect();
        let i1 = Ideal::new(Arc::clone(&ring), polys.clone()).unwrap();
        // same ideal, redundant homogeneous presentation: scaled copies and
        // monomial multiples
        let mut polys2: Vec<MultiPoly> = polys.iter().rev().cloned().collect();
        if mix != 0 {
            polys2.push(polys[0].scale(&q(mix)));
        }
        polys2.push(polys[0].mul(&polys[0]));
        if polys.len() == 2 {
            polys2.push(polys[0].mul(&polys[1]));
        }
        let i2 = Ideal::new(Arc::clone(&ring), polys2).unwrap();

        let a1 = GradedAlgebra::new(Arc::clone(&ring), i1, action.clone()).unwrap();
        let a2 = GradedAlgebra::new(Arc::clone(&ring), i2, action).unwrap();
        let chars = CharacterSet::new([WeightVector(vec![chi])]);
        prop_assert_eq!(
            a1.isotypic_component(&chars, bound).unwrap().dim(),
            a2.isotypic_component(&chars, bound).unwrap().dim()
        );
    }

    #[test]
    fn universal_quotient_matches_the_weight_space_oracle(
        weights in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 1..=4),
        s_gens in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 1..=2),
    ) {
        let weights: Vec<WeightVector> = weights.into_iter().map(WeightVector).collect();
        let tbar = WeightMonoid::new(2, s_gens.into_iter().map(WeightVector).collect()).unwrap();
        let (group, monoid) = split_torus(&weights, tbar.clone()).unwrap();
        let u = kempf_core::coaction::universal_quotient(group.action_matrix(), &monoid).unwrap();
        // oracle: exactly the dual coordinates of coordinates whose weight
        // lies in the closure monoid survive
        let insiders: Vec<usize> = weights
            .iter()
            .enumerate()
            .filter_map(|(i, w)| tbar.contains(w).unwrap().then_some(i))
            .collect();
        prop_assert_eq!(u.dim(), insiders.len());
        for (row, &i) in u.basis().iter().zip(&insiders) {
            for (j, c) in row.iter().enumerate() {
                if j == i {
                    prop_assert!(c.is_one());
                } else {
                    prop_assert!(c.is_zero());
                }
            }
        }
    }
}
