use std::cmp::Ordering;

use super::monomial::Monomial;

/// A monomial order: a multiplication-compatible total order on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic. The default everywhere.
    GrevLex,
    /// Lexicographic with the first variable largest.
    Lex,
    /// Elimination block order for the first `k` variables: grevlex on the
    /// block, ties broken by grevlex on the remaining variables. Any monomial
    /// touching the block dominates every block-free monomial.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::GrevLex => a.grevlex(b),
            MonomialOrder::Lex => a.lex(b),
            MonomialOrder::Elimination(k) => match a.grevlex_on(b, 0..k) {
                Ordering::Equal => a.grevlex_on(b, k..a.nvars()),
                ord => ord,
            },
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Elimination(k) => write!(f, "elim({k})"),
        }
    }
}
