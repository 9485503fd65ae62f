//! Exact coefficient domains.
//!
//! Three concrete rings sit behind the [`Ring`] trait: [`Rational`] (`Q`),
//! [`RationalFunction`] (`Q(q)`) and [`MultiPoly`] (`Q[x_1..x_m, t]`).
//! Generic algorithms are written against [`Ring`]; [`Element`] is the
//! tagged form used where the domain is only known at run time.

mod multipoly;
mod poly;
mod ratfunc;
mod rational;
mod ring;

pub use multipoly::{elementary_of, elementary_symmetric, Monomial, MultiPoly};
pub use poly::{poly_gcd, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::{ParseRationalError, Rational};
pub use ring::{Field, Ring, RingOps, RingSpec};

use crate::error::{Error, Result};

/// A ring element tagged with its domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Element {
    Rational(Rational),
    RatFunc(RationalFunction),
    Multi(MultiPoly),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Element {
    pub fn ring_spec(&self) -> RingSpec {
        match self {
            Element::Rational(a) => a.ring_spec(),
            Element::RatFunc(a) => a.ring_spec(),
            Element::Multi(a) => a.ring_spec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Rational(a) => a.is_zero(),
            Element::RatFunc(a) => a.is_zero(),
            Element::Multi(a) => a.is_zero(),
        }
    }
}

fn mismatch(a: &Element, b: &Element) -> Error {
    Error::DomainMismatch {
        left: a.ring_spec().to_string(),
        right: b.ring_spec().to_string(),
    }
}

fn apply<R: RingOps>(a: &R, b: &R, op: ArithOp) -> R {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    }
}

/// Exact `a op b`; both operands must come from the same domain.
pub fn ring_arith(a: &Element, b: &Element, op: ArithOp) -> Result<Element> {
    if a.ring_spec() != b.ring_spec() {
        return Err(mismatch(a, b));
    }
    Ok(match (a, b) {
        (Element::Rational(x), Element::Rational(y)) => Element::Rational(apply(x, y, op)),
        (Element::RatFunc(x), Element::RatFunc(y)) => Element::RatFunc(apply(x, y, op)),
        (Element::Multi(x), Element::Multi(y)) => Element::Multi(apply(x, y, op)),
        _ => return Err(mismatch(a, b)),
    })
}

/// Exact `a / b`, defined only over the field domains.
pub fn ring_div(a: &Element, b: &Element) -> Result<Element> {
    if a.ring_spec() != b.ring_spec() {
        return Err(mismatch(a, b));
    }
    match (a, b) {
        (Element::Rational(x), Element::Rational(y)) => Ok(Element::Rational(x.div(y)?)),
        (Element::RatFunc(x), Element::RatFunc(y)) => Ok(Element::RatFunc(x.div(y)?)),
        (Element::Multi(_), _) => Err(Error::NotAField(a.ring_spec().to_string())),
        _ => Err(mismatch(a, b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Element {
        Element::Rational(s.parse().unwrap())
    }

    fn qpoly(cs: &[i64]) -> Element {
        Element::RatFunc(RationalFunction::from_poly(Polynomial::from_ints(cs)))
    }

    #[test]
    fn arith_examples() {
        assert_eq!(ring_arith(&rat("1/2"), &rat("1/3"), ArithOp::Add).unwrap(), rat("5/6"));
        assert_eq!(
            ring_arith(&qpoly(&[1, 1]), &qpoly(&[-1, 1]), ArithOp::Mul).unwrap(),
            qpoly(&[-1, 0, 1])
        );
        let x1x2 = Element::Multi(MultiPoly::x(2, 1).mul(&MultiPoly::x(2, 2)));
        let zero = Element::Multi(MultiPoly::zero(2));
        match ring_arith(&x1x2, &zero, ArithOp::Mul).unwrap() {
            Element::Multi(p) => assert_eq!(p.terms().count(), 0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn domain_mismatch() {
        let err = ring_arith(&rat("1"), &qpoly(&[1]), ArithOp::Add).unwrap_err();
        assert_eq!(err.code(), "DOMAIN_MISMATCH");
        let a = Element::Multi(MultiPoly::x(2, 1));
        let b = Element::Multi(MultiPoly::x(3, 1));
        assert_eq!(ring_arith(&a, &b, ArithOp::Sub).unwrap_err().code(), "DOMAIN_MISMATCH");
    }

    #[test]
    fn division_examples() {
        let one = qpoly(&[1]);
        let Element::RatFunc(inv) = ring_div(&one, &qpoly(&[1, 1])).unwrap() else {
            panic!()
        };
        assert_eq!(inv.num(), &Polynomial::from_ints(&[1]));
        assert_eq!(inv.den(), &Polynomial::from_ints(&[1, 1]));
        assert_eq!(ring_div(&qpoly(&[-1, 0, 1]), &qpoly(&[-1, 1])).unwrap(), qpoly(&[1, 1]));
        let x1 = Element::Multi(MultiPoly::x(2, 1));
        let x2 = Element::Multi(MultiPoly::x(2, 2));
        assert_eq!(ring_div(&x1, &x2).unwrap_err().code(), "NOT_A_FIELD");
        assert_eq!(ring_div(&rat("1"), &rat("0")).unwrap_err().code(), "DIVISION_BY_ZERO");
    }
}
