use std::fmt;

use crate::error::{Error, Result};

use super::Rational;

/// Which coefficient domain a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rational,
    RatFuncQ,
    /// Polynomials in `x_1..x_m` and `t`.
    MultiPoly(usize),
}

impl RingSpec {
    pub fn multipoly(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("MULTIPOLY requires m >= 1".into()));
        }
        Ok(RingSpec::MultiPoly(m))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, RingSpec::MultiPoly(_))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Rational => write!(f, "RATIONAL"),
            RingSpec::RatFuncQ => write!(f, "RATFUNC_Q"),
            RingSpec::MultiPoly(m) => write!(f, "MULTIPOLY({m})"),
        }
    }
}

/// Context-free ring arithmetic. Enough for determinant expansion, where
/// the caller supplies the unit.
pub trait RingOps: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// Commutative ring with unit containing `Q`.
///
/// Zero and one are produced from an existing element (`zero_like`,
/// `one_like`) because some domains carry context, e.g. the arity of a
/// multivariate polynomial ring.
pub trait Ring: RingOps + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of a rational number in the same domain as `self`.
    fn embed(&self, r: &Rational) -> Self;
    fn ring_spec(&self) -> RingSpec;
    /// `Some(r)` when the element is the image of the rational `r`.
    fn as_rational(&self) -> Option<Rational>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn scale_int(&self, n: i64) -> Self {
        self.mul(&self.embed(&Rational::from_int(n)))
    }

    fn check_same_domain(&self, other: &Self) -> Result<()> {
        let (l, r) = (self.ring_spec(), other.ring_spec());
        if l == r {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: l.to_string(),
                right: r.to_string(),
            })
        }
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}
