//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod multipoly;
mod order;
mod parse;
mod ring;

pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use ring::{same_ring, PolyRing};

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn ring2() -> std::sync::Arc<PolyRing> {
        PolyRing::new(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn display_round_trip() {
        let r = PolyRing::new(vec!["x1", "x2", "x3"]).unwrap();
        let p = parse_poly(&r, "3/2*x1^2*x2 - x3 + 1").unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 - x3 + 1");
        let q = parse_poly(&r, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn zero_and_cancellation() {
        let r = ring2();
        let p = parse_poly(&r, "x - x").unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
        assert_eq!(parse_poly(&r, "0").unwrap(), MultiPoly::zero(&r));
    }

    #[test]
    fn arithmetic() {
        let r = ring2();
        let p = parse_poly(&r, "x + y").unwrap();
        let q = parse_poly(&r, "x - y").unwrap();
        assert_eq!(p.mul(&q), parse_poly(&r, "x^2 - y^2").unwrap());
        assert_eq!(p.pow(2), parse_poly(&r, "x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn orders_disagree_on_leading_term() {
        // x^3 vs x*y^2*... classic: lex prefers x-heavy, grevlex prefers high degree
        let r = ring2();
        let p = parse_poly(&r, "x^2 + x*y^2").unwrap();
        let (lm, _) = p.leading_term(MonomialOrder::GrevLex).unwrap();
        assert_eq!(lm.exps(), &[1, 2]);
        let (lm, _) = p.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(lm.exps(), &[2, 0]);
    }

    #[test]
    fn elimination_order_blocks() {
        // first variable forms the block; any block monomial dominates
        let ord = MonomialOrder::Elimination(1);
        let x = Monomial::var(2, 0);
        let y3 = Monomial::new(vec![0, 3]);
        assert_eq!(ord.cmp(&x, &y3), std::cmp::Ordering::Greater);
    }

    #[test]
    fn substitution_and_evaluation() {
        let r = ring2();
        let p = parse_poly(&r, "x^2 + y").unwrap();
        let imgs = vec![
            parse_poly(&r, "y").unwrap(),
            parse_poly(&r, "x + 1").unwrap(),
        ];
        assert_eq!(
            p.substitute(&imgs).unwrap(),
            parse_poly(&r, "y^2 + x + 1").unwrap()
        );
        let v = p.evaluate(&[BigRational::one(), BigRational::one()]);
        assert_eq!(v, BigRational::from_integer(2.into()));
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        let r = ring2();
        assert!(parse_poly(&r, "x + z").is_err());
    }
}
