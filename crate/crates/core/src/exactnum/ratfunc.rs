use std::fmt;

use crate::error::{Error, Result};

use super::{Field, Polynomial, Rational, Ring, RingOps, RingSpec};

/// Element of `Q(q)`, kept reduced: coprime numerator and denominator, and a
/// monic denominator. The canonical form is therefore unique, so structural
/// equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Polynomial<Rational>,
    den: Polynomial<Rational>,
}

impl RationalFunction {
    pub fn new(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(num));
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero").clone();
        let inv = lead.recip()?;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// Numerator and denominator already coprime; only the scaling is fixed.
    fn coprime(num: Polynomial<Rational>, den: Polynomial<Rational>) -> Self {
        if num.is_zero() {
            return Self::from_poly(num);
        }
        let lead = den.leading().expect("nonzero denominator");
        if lead == &Rational::one() {
            return RationalFunction { num, den };
        }
        let inv = lead.recip().expect("nonzero");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(num: Polynomial<Rational>) -> Self {
        RationalFunction {
            num,
            den: Polynomial::constant(Rational::one()),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(Polynomial::constant(r))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(Polynomial::from_ints(&[0, 1]))
    }

    pub fn num(&self) -> &Polynomial<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Substitute a rational value for `q`.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        self.num.eval(at).div(&self.den.eval(at))
    }
}

fn exact_quo(a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> Polynomial<Rational> {
    if b.degree() == Some(0) && b.coeffs()[0] == Rational::one() {
        return a.clone();
    }
    let (q, r) = a.div_rem(b).expect("nonzero divisor");
    debug_assert!(r.is_zero());
    q
}

impl RingOps for RationalFunction {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    // Henrici's formulas: only gcds of the smaller pieces are needed because
    // both operands are already reduced.
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&other.den).expect("nonzero");
        if g.degree() == Some(0) {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::coprime(num, self.den.mul(&other.den));
        }
        let d1 = exact_quo(&self.den, &g);
        let d2 = exact_quo(&other.den, &g);
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let den = d1.mul(&other.den);
        let h = if num.is_zero() {
            g.clone()
        } else {
            num.gcd(&g).expect("nonzero")
        };
        Self::coprime(exact_quo(&num, &h), exact_quo(&den, &h))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_poly(Polynomial::zero());
        }
        let g1 = self.num.gcd(&other.den).expect("nonzero");
        let g2 = other.num.gcd(&self.den).expect("nonzero");
        let num = exact_quo(&self.num, &g1).mul(&exact_quo(&other.num, &g2));
        let den = exact_quo(&self.den, &g2).mul(&exact_quo(&other.den, &g1));
        Self::coprime(num, den)
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::from_poly(Polynomial::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rational(Rational::one())
    }
    fn embed(&self, r: &Rational) -> Self {
        Self::from_rational(r.clone())
    }
    fn ring_spec(&self) -> RingSpec {
        RingSpec::RatFuncQ
    }
    fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.is_polynomial()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), true) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            let c = &self.den.coeffs()[0];
            debug_assert!(c == &Rational::one());
            f.write_str(&self.num.to_text("q"))
        } else {
            let wrap = |p: &Polynomial<Rational>| {
                let text = p.to_text("q");
                if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || text.starts_with('-') {
                    format!("({text})")
                } else {
                    text
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_ints(cs)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn reduces_on_construction() {
        let x = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(x, RationalFunction::from_poly(p(&[1, 1])));
        let y = rf(&[2], &[2, 2]);
        assert_eq!(y.num(), &p(&[1]));
        assert_eq!(y.den(), &p(&[1, 1]));
        let neg = rf(&[1], &[-1, -1]);
        assert_eq!(neg.num(), &p(&[-1]));
        assert_eq!(neg.den(), &p(&[1, 1]));
    }

    #[test]
    fn field_inverse() {
        let one_plus_q = RationalFunction::from_poly(p(&[1, 1]));
        let inv = one_plus_q.inv().unwrap();
        assert_eq!(inv, rf(&[1], &[1, 1]));
        assert_eq!(inv.mul(&one_plus_q), inv.one_like());
        assert_eq!(inv.zero_like().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quotient_of_polynomials() {
        let a = RationalFunction::from_poly(p(&[-1, 0, 1]));
        let b = RationalFunction::from_poly(p(&[-1, 1]));
        assert_eq!(a.div(&b).unwrap(), RationalFunction::from_poly(p(&[1, 1])));
    }

    #[test]
    fn sums_cancel() {
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[0, 1], &[1, 1]);
        assert_eq!(a.add(&b), a.one_like());
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[-1, 1], &[1, 1]).to_string(), "(q - 1)/(q + 1)");
        assert_eq!(rf(&[1], &[1, 1]).to_string(), "1/(q + 1)");
        assert_eq!(rf(&[0, 2], &[0, 0, 1]).to_string(), "2/q");
        assert_eq!(RationalFunction::q().to_string(), "q");
    }

    #[test]
    fn evaluation() {
        let x = rf(&[-1, 1], &[1, 1]);
        assert_eq!(x.eval(&Rational::from_int(3)).unwrap(), "1/2".parse().unwrap());
        assert_eq!(x.eval(&Rational::from_int(-1)), Err(Error::DivisionByZero));
    }
}
