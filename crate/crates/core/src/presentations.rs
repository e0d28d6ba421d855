//! Ready-made group/monoid presentations: split tori inside their toric
//! closures, GL_n inside the full matrix monoid, and the upper-triangular
//! monoid. These are the building blocks for the CLI catalog and the test
//! oracles.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coaction::{GroupPresentation, MonoidPresentation};
use crate::error::Result;
use crate::grading::{TorusAction, WeightMonoid, WeightVector};
use crate::ideal::Ideal;
use crate::linalg::Q;
use crate::poly::{Monomial, MultiPoly, PolyRing};

/// Laurent monomial `t^w` in a ring laid out as `t1..tr, tinv1..tinvr`.
fn laurent_monomial(ring: &Arc<PolyRing>, rank: usize, w: &WeightVector) -> MultiPoly {
    let mut exps = vec![0u32; 2 * rank];
    for (i, &wi) in w.0.iter().enumerate() {
        if wi >= 0 {
            exps[i] = wi as u32;
        } else {
            exps[rank + i] = (-wi) as u32;
        }
    }
    MultiPoly::monomial(ring, Monomial::new(exps), BigRational::one())
}

/// A split torus G_m^r acting diagonally with the given action weights, with
/// monoid closure T̄ described by its weight monoid. O(T̄) ⊆ O(T) is generated
/// by the Laurent monomials of the monoid generators.
pub fn split_torus(
    acted_weights: &[WeightVector],
    tbar: WeightMonoid,
) -> Result<(GroupPresentation, MonoidPresentation)> {
    let rank = tbar.rank();
    let names: Vec<String> = if rank == 1 {
        vec!["t".into(), "tinv".into()]
    } else {
        (1..=rank)
            .map(|i| format!("t{i}"))
            .chain((1..=rank).map(|i| format!("tinv{i}")))
            .collect()
    };
    let ring = PolyRing::new(names)?;
    let mut relations = Vec::with_capacity(rank);
    for i in 0..rank {
        let t = MultiPoly::var(&ring, i);
        let tinv = MultiPoly::var(&ring, rank + i);
        relations.push(t.mul(&tinv).sub(&MultiPoly::one(&ring)));
    }
    let relations = Ideal::new(Arc::clone(&ring), relations)?;

    let n = acted_weights.len();
    let mut action = vec![vec![MultiPoly::zero(&ring); n]; n];
    let mut inverse = vec![vec![MultiPoly::zero(&ring); n]; n];
    for (j, w) in acted_weights.iter().enumerate() {
        action[j][j] = laurent_monomial(&ring, rank, w);
        inverse[j][j] = laurent_monomial(&ring, rank, &w.scaled(-1));
    }
    let identity = vec![Q::one(); 2 * rank];
    let group = GroupPresentation::new(Arc::clone(&ring), relations, action, inverse, identity)?;

    let monoid_gens: Vec<MultiPoly> = tbar
        .generators()
        .iter()
        .map(|w| laurent_monomial(&ring, rank, w))
        .collect();
    let zero_point: Vec<Q> = tbar
        .generators()
        .iter()
        .map(|w| if w.is_zero() { Q::one() } else { Q::zero() })
        .collect();
    // the torus acts on its own coordinates with weight e_i on t_i
    let mut central_weights = Vec::with_capacity(2 * rank);
    for i in 0..rank {
        let mut w = vec![0i64; rank];
        w[i] = 1;
        central_weights.push(WeightVector(w));
    }
    for i in 0..rank {
        let mut w = vec![0i64; rank];
        w[i] = -1;
        central_weights.push(WeightVector(w));
    }
    let central = TorusAction::new(rank, central_weights)?;
    let embedding: Vec<WeightVector> = (0..rank)
        .map(|i| {
            let mut w = vec![0i64; rank];
            w[i] = 1;
            WeightVector(w)
        })
        .collect();
    let monoid = MonoidPresentation::new(
        group.clone(),
        monoid_gens,
        zero_point,
        central,
        tbar,
        embedding,
    )?;
    Ok((group, monoid))
}

/// How GL_2 acts on the plane in [`gl2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gl2Action {
    /// The defining representation on A^2.
    Standard,
    /// The dual (inverse-transpose) representation on A^2.
    Dual,
    /// Standard ⊕ dual on A^4.
    SumStandardDual,
}

/// GL_2 inside the monoid M_2 of all 2x2 matrices. The coordinate ring is
/// k[x11, x12, x21, x22, d] with d inverting the determinant; O(M_2) is the
/// subalgebra of matrix entries. The central scalar torus weights every
/// entry by 1 and embeds diagonally into the maximal torus.
pub fn gl2(action_kind: Gl2Action) -> Result<(GroupPresentation, MonoidPresentation)> {
    let ring = PolyRing::new(vec!["x11", "x12", "x21", "x22", "d"])?;
    let v = |name: &str| MultiPoly::var(&ring, ring.var_index(name).unwrap());
    let det = v("x11").mul(&v("x22")).sub(&v("x12").mul(&v("x21")));
    let relations = Ideal::new(
        Arc::clone(&ring),
        vec![v("d").mul(&det).sub(&MultiPoly::one(&ring))],
    )?;

    let fwd2 = vec![vec![v("x11"), v("x12")], vec![v("x21"), v("x22")]];
    // adjugate over the determinant
    let inv2 = vec![
        vec![v("d").mul(&v("x22")), v("d").mul(&v("x12")).neg()],
        vec![v("d").mul(&v("x21")).neg(), v("d").mul(&v("x11"))],
    ];
    let transpose = |m: &Vec<Vec<MultiPoly>>| -> Vec<Vec<MultiPoly>> {
        (0..2)
            .map(|r| (0..2).map(|c| m[c][r].clone()).collect())
            .collect()
    };
    let (action, inverse): (Vec<Vec<MultiPoly>>, Vec<Vec<MultiPoly>>) = match action_kind {
        Gl2Action::Standard => (fwd2, inv2),
        // dual: rho(g) = (g^{-1})^T, rho(g^{-1}) = g^T
        Gl2Action::Dual => (transpose(&inv2), transpose(&fwd2)),
        Gl2Action::SumStandardDual => {
            let dual_fwd = transpose(&inv2);
            let dual_inv = transpose(&fwd2);
            let zero = MultiPoly::zero(&ring);
            let block = |a: &Vec<Vec<MultiPoly>>, b: &Vec<Vec<MultiPoly>>| {
                let mut m = vec![vec![zero.clone(); 4]; 4];
                for r in 0..2 {
                    for c in 0..2 {
                        m[r][c] = a[r][c].clone();
                        m[2 + r][2 + c] = b[r][c].clone();
                    }
                }
                m
            };
            (block(&fwd2, &dual_fwd), block(&inv2, &dual_inv))
        }
    };
    let identity = vec![Q::one(), Q::zero(), Q::zero(), Q::one(), Q::one()];
    let group = GroupPresentation::new(Arc::clone(&ring), relations, action, inverse, identity)?;

    let monoid_gens = vec![v("x11"), v("x12"), v("x21"), v("x22")];
    let zero_point = vec![Q::zero(); 4];
    // scalars: entries weight 1, the inverse determinant weight -2
    let central = TorusAction::new(
        1,
        vec![
            WeightVector(vec![1]),
            WeightVector(vec![1]),
            WeightVector(vec![1]),
            WeightVector(vec![1]),
            WeightVector(vec![-2]),
        ],
    )?;
    let tbar = WeightMonoid::new(2, vec![WeightVector(vec![1, 0]), WeightVector(vec![0, 1])])?;
    let embedding = vec![WeightVector(vec![1, 1])];
    let monoid = MonoidPresentation::new(
        group.clone(),
        monoid_gens,
        zero_point,
        central,
        tbar,
        embedding,
    )?;
    Ok((group, monoid))
}

/// GL_3 inside M_3 with the standard representation on A^3.
pub fn gl3() -> Result<(GroupPresentation, MonoidPresentation)> {
    let names: Vec<String> = (1..=3)
        .flat_map(|r| (1..=3).map(move |c| format!("x{r}{c}")))
        .chain(std::iter::once("d".to_string()))
        .collect();
    let ring = PolyRing::new(names)?;
    let x = |r: usize, c: usize| MultiPoly::var(&ring, (r - 1) * 3 + (c - 1));
    let d = MultiPoly::var(&ring, 9);

    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        x(r1, c1).mul(&x(r2, c2)).sub(&x(r1, c2).mul(&x(r2, c1)))
    };
    let det = x(1, 1)
        .mul(&minor(2, 3, 2, 3))
        .sub(&x(1, 2).mul(&minor(2, 3, 1, 3)))
        .add(&x(1, 3).mul(&minor(2, 3, 1, 2)));
    let relations = Ideal::new(
        Arc::clone(&ring),
        vec![d.mul(&det).sub(&MultiPoly::one(&ring))],
    )?;

    let action: Vec<Vec<MultiPoly>> = (1..=3)
        .map(|r| (1..=3).map(|c| x(r, c)).collect())
        .collect();
    // inverse = d * adjugate; adj[r][c] is the (c,r) cofactor
    let rows_except = |k: usize| -> (usize, usize) {
        match k {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        }
    };
    let mut inverse = vec![vec![MultiPoly::zero(&ring); 3]; 3];
    for r in 1..=3 {
        for c in 1..=3 {
            let (i1, i2) = rows_except(c);
            let (j1, j2) = rows_except(r);
            let cof = minor(i1, i2, j1, j2);
            let signed = if (r + c) % 2 == 0 { cof } else { cof.neg() };
            inverse[r - 1][c - 1] = d.mul(&signed);
        }
    }
    let mut identity = vec![Q::zero(); 10];
    identity[0] = Q::one();
    identity[4] = Q::one();
    identity[8] = Q::one();
    identity[9] = Q::one();
    let group = GroupPresentation::new(Arc::clone(&ring), relations, action, inverse, identity)?;

    let monoid_gens: Vec<MultiPoly> = (1..=3)
        .flat_map(|r| (1..=3).map(move |c| (r, c)))
        .map(|(r, c)| x(r, c))
        .collect();
    let zero_point = vec![Q::zero(); 9];
    let mut central_weights = vec![WeightVector(vec![1]); 9];
    central_weights.push(WeightVector(vec![-3]));
    let central = TorusAction::new(1, central_weights)?;
    let tbar = WeightMonoid::new(
        3,
        vec![
            WeightVector(vec![1, 0, 0]),
            WeightVector(vec![0, 1, 0]),
            WeightVector(vec![0, 0, 1]),
        ],
    )?;
    let embedding = vec![WeightVector(vec![1, 1, 1])];
    let monoid = MonoidPresentation::new(
        group.clone(),
        monoid_gens,
        zero_point,
        central,
        tbar,
        embedding,
    )?;
    Ok((group, monoid))
}

/// Invertible upper-triangular 2x2 matrices inside the monoid of all
/// upper-triangular matrices, acting standardly on A^2. The Kempf search
/// runs through the left-scaling diagonal torus, under which the entries
/// a, b, c carry weights (1,0), (1,0), (0,1).
pub fn upper_triangular_2() -> Result<(GroupPresentation, MonoidPresentation)> {
    let ring = PolyRing::new(vec!["a", "b", "c", "ainv", "cinv"])?;
    let v = |name: &str| MultiPoly::var(&ring, ring.var_index(name).unwrap());
    let relations = Ideal::new(
        Arc::clone(&ring),
        vec![
            v("a").mul(&v("ainv")).sub(&MultiPoly::one(&ring)),
            v("c").mul(&v("cinv")).sub(&MultiPoly::one(&ring)),
        ],
    )?;
    let action = vec![vec![v("a"), v("b")], vec![MultiPoly::zero(&ring), v("c")]];
    let inverse = vec![
        vec![v("ainv"), v("b").mul(&v("ainv")).mul(&v("cinv")).neg()],
        vec![MultiPoly::zero(&ring), v("cinv")],
    ];
    let identity = vec![Q::one(), Q::zero(), Q::one(), Q::one(), Q::one()];
    let group = GroupPresentation::new(Arc::clone(&ring), relations, action, inverse, identity)?;

    let monoid_gens = vec![v("a"), v("b"), v("c")];
    let zero_point = vec![Q::zero(); 3];
    let central = TorusAction::new(
        2,
        vec![
            WeightVector(vec![1, 0]),
            WeightVector(vec![1, 0]),
            WeightVector(vec![0, 1]),
            WeightVector(vec![-1, 0]),
            WeightVector(vec![0, -1]),
        ],
    )?;
    let tbar = WeightMonoid::new(2, vec![WeightVector(vec![1, 0]), WeightVector(vec![0, 1])])?;
    let embedding = vec![WeightVector(vec![1, 0]), WeightVector(vec![0, 1])];
    let monoid = MonoidPresentation::new(
        group.clone(),
        monoid_gens,
        zero_point,
        central,
        tbar,
        embedding,
    )?;
    Ok((group, monoid))
}

/// Synthetic non-Kempf data: G_m with monoid generators of opposite weights.
pub fn opposite_weights() -> Result<(GroupPresentation, MonoidPresentation)> {
    let tbar = WeightMonoid::new(1, vec![WeightVector(vec![1]), WeightVector(vec![-1])])?;
    split_torus(&[WeightVector(vec![1])], tbar)
}
