use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

use super::{Field, Rational, Ring, RingOps};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: RingOps> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^deg`, with `zero` used for padding.
    pub fn monomial(c: R, deg: usize, zero: &R) -> Self {
        let mut coeffs = vec![zero.clone(); deg];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn scale(&self, s: &R) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn map<S: RingOps>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Polynomial<R> {
    /// Coefficient of `var^i`, zero beyond the degree. `like` supplies the
    /// domain context for that zero.
    pub fn coeff_or_zero(&self, i: usize, like: &R) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero_like())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = at.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Product of `(var - r)` over the given roots, times `lead`.
    pub fn from_roots(lead: &R, roots: &[R]) -> Self {
        roots.iter().fold(Self::constant(lead.clone()), |acc, r| {
            acc.mul(&Self::new(vec![r.neg(), lead.one_like()]))
        })
    }
}

impl<R: RingOps> RingOps for Polynomial<R> {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o = o.add(c);
        }
        Self::new(out)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let out = (0..n)
            .map(|k| {
                let lo = k.saturating_sub(other.coeffs.len() - 1);
                let hi = k.min(self.coeffs.len() - 1);
                (lo + 1..=hi).fold(self.coeffs[lo].mul(&other.coeffs[k - lo]), |acc, i| {
                    acc.add(&self.coeffs[i].mul(&other.coeffs[k - i]))
                })
            })
            .collect();
        Self::new(out)
    }

    fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

impl<F: Field> Polynomial<F> {
    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let zero = lead.zero_like();
        let mut quot = vec![zero.clone(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].mul(&lead_inv);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].sub(&c.mul(d));
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Rescale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return Ok(Self::constant(
                self.coeffs
                    .iter()
                    .chain(&other.coeffs)
                    .next()
                    .expect("nonzero")
                    .one_like(),
            ));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }
}

impl Polynomial<Rational> {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }
}

/// Monic gcd of two polynomials over `Q`.
pub fn poly_gcd(a: &Polynomial<Rational>, b: &Polynomial<Rational>) -> Result<Polynomial<Rational>> {
    a.gcd(b)
}

impl<R: Ring> Polynomial<R> {
    /// Human-readable form in descending powers, e.g. `1/2*t^2 - t + 1/2`.
    pub fn to_text(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = match c.as_rational() {
                Some(r) => (r.is_negative(), r.abs().to_string()),
                None => (false, format!("({c})")),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = body == "1";
            match deg {
                0 => out.push_str(&body),
                _ => {
                    if !unit {
                        let _ = write!(out, "{body}*");
                    }
                    out.push_str(var);
                    if deg > 1 {
                        let _ = write!(out, "^{deg}");
                    }
                }
            }
        }
        out
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1])).unwrap(), p(&[1]));
        assert_eq!(poly_gcd(&p(&[2, 2]), &p(&[4, 4])).unwrap(), p(&[1, 1]));
        assert_eq!(poly_gcd(&p(&[]), &p(&[])), Err(Error::BothZero));
        assert_eq!(
            poly_gcd(&p(&[]), &p(&[3, 6])).unwrap(),
            p(&[1, 2]).scale(&"1/2".parse().unwrap())
        );
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (q, r) = p(&[3, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, p(&[3, 1]));
    }

    #[test]
    fn text_form_descends() {
        let half: Rational = "1/2".parse().unwrap();
        let poly = Polynomial::new(vec![half.clone(), Rational::from_int(-1), half]);
        assert_eq!(poly.to_text("t"), "1/2*t^2 - t + 1/2");
        assert_eq!(p(&[0, -1]).to_text("q"), "-q");
        assert_eq!(p(&[]).to_text("t"), "0");
    }

    #[test]
    fn horner() {
        assert_eq!(p(&[1, 2, 3]).eval(&Rational::from_int(2)), Rational::from_int(17));
    }
}
