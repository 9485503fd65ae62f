//! Truncated formal power series.
//!
//! A series of order `N` keeps the coefficients of degrees `0..=N`, and every
//! binary operation returns the smaller of its operands' orders. Inverses and
//! quotients are available both through the division-free recursion and
//! through the Wronski-type Hessenberg determinants `D_k`.

use std::fmt;
use std::str::FromStr;

use crate::det::hessenberg_det;
use crate::error::{Error, Result};
use crate::exactnum::{
    elementary_symmetric, MultiPoly, Polynomial, Rational, RationalFunction, Ring, RingOps, RingSpec,
};
use crate::special::q_factorial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series with the given coefficients for degrees `0..coeffs.len()`.
    ///
    /// Panics on an empty list or on coefficients from different domains.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        let spec = coeffs[0].ring_spec();
        assert!(
            coeffs.iter().all(|c| c.ring_spec() == spec),
            "mixed coefficient domains"
        );
        TruncatedSeries { coeffs }
    }

    /// Like [`TruncatedSeries::new`] but insists on `a_0 = 1`.
    pub fn normalized(coeffs: Vec<R>) -> Result<Self> {
        let s = Self::new(coeffs);
        s.check_unit()?;
        Ok(s)
    }

    /// The constant series `1` at the given order.
    pub fn one(like: &R, order: usize) -> Self {
        let mut coeffs = vec![like.zero_like(); order + 1];
        coeffs[0] = like.one_like();
        TruncatedSeries { coeffs }
    }

    /// Series from a polynomial, padded or cut to `order`.
    pub fn from_polynomial(p: &Polynomial<R>, like: &R, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| p.coeff_or_zero(i, like)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; `None` beyond the order.
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn ring_spec(&self) -> RingSpec {
        self.coeffs[0].ring_spec()
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Replace the coefficient of `t^k`.
    pub fn with_coeff(&self, k: usize, c: R) -> Result<Self> {
        if k > self.order() {
            return Err(Error::KExceedsOrder { k, order: self.order() });
        }
        self.coeffs[0].check_same_domain(&c)?;
        let mut coeffs = self.coeffs.clone();
        coeffs[k] = c;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn check_unit(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::NonunitConstantTerm(self.coeffs[0].to_string()))
        }
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.order() {
            Err(Error::KExceedsOrder { k, order: self.order() })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.coeffs[0].check_same_domain(&other.coeffs[0])?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(t^{})",
            Polynomial::new(self.coeffs.clone()),
            self.order() + 1
        )
    }
}

/// Cauchy product, truncated at the smaller order.
pub fn series_mul<R: Ring>(f: &TruncatedSeries<R>, g: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.coeffs[0].check_same_domain(&g.coeffs[0])?;
    let order = f.order().min(g.order());
    let coeffs = (0..=order)
        .map(|n| {
            (1..=n).fold(f.coeffs[0].mul(&g.coeffs[n]), |acc, i| {
                acc.add(&f.coeffs[i].mul(&g.coeffs[n - i]))
            })
        })
        .collect();
    Ok(TruncatedSeries { coeffs })
}

/// `1/f` by the recursion `d_k = -sum_{i=1..k} a_i d_{k-i}`.
pub fn series_invert<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.check_unit()?;
    let a = &f.coeffs;
    let mut d: Vec<R> = Vec::with_capacity(a.len());
    d.push(a[0].one_like());
    for k in 1..a.len() {
        let s = (1..=k).fold(a[0].zero_like(), |acc, i| acc.add(&a[i].mul(&d[k - i])));
        d.push(s.neg());
    }
    Ok(TruncatedSeries { coeffs: d })
}

/// The `(k+1) x (k+1)` matrix whose first row is `first_row` and whose
/// remaining rows are the shifted coefficient rows `(1, a_1, ..., a_k)`,
/// `(0, 1, a_1, ...)`, ..., `(0, ..., 1, a_1)`.
pub fn bordered_matrix<T: Clone>(first_row: Vec<T>, a: &[T], zero: &T) -> Vec<Vec<T>> {
    let k = first_row.len() - 1;
    let mut rows = vec![first_row];
    for i in 1..=k {
        rows.push(
            (0..=k)
                .map(|j| if j + 1 >= i { a[j + 1 - i].clone() } else { zero.clone() })
                .collect(),
        );
    }
    rows
}

fn sign<R: Ring>(k: usize, x: R) -> R {
    if k % 2 == 1 {
        x.neg()
    } else {
        x
    }
}

/// `D_k(f)`: `(-1)^k` times the `k x k` Hessenberg determinant with first
/// row `(a_1, ..., a_k)` and unit subdiagonal. `D_0 = 1`.
pub fn wronski_dk<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<R> {
    f.check_unit()?;
    f.check_k(k)?;
    let a = &f.coeffs;
    let zero = a[0].zero_like();
    let m: Vec<Vec<R>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if j + 1 >= i { a[j + 1 - i].clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    Ok(sign(k, hessenberg_det(&m, &a[0].one_like())))
}

/// `D_k(g, f)`, the `k`-th coefficient of `g/f`, as a bordered determinant.
pub fn quotient_dk<R: Ring>(g: &TruncatedSeries<R>, f: &TruncatedSeries<R>, k: usize) -> Result<R> {
    f.coeffs[0].check_same_domain(&g.coeffs[0])?;
    f.check_unit()?;
    g.check_unit()?;
    f.check_k(k)?;
    g.check_k(k)?;
    let zero = f.coeffs[0].zero_like();
    let m = bordered_matrix(g.coeffs[..=k].to_vec(), &f.coeffs, &zero);
    Ok(sign(k, hessenberg_det(&m, &f.coeffs[0].one_like())))
}

/// `f(s t)`: the coefficient `a_k` becomes `a_k s^k`.
pub fn series_scale_var<R: Ring>(f: &TruncatedSeries<R>, s: &R) -> Result<TruncatedSeries<R>> {
    f.coeffs[0].check_same_domain(s)?;
    let mut power = s.one_like();
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for a in &f.coeffs {
        coeffs.push(a.mul(&power));
        power = power.mul(s);
    }
    Ok(TruncatedSeries { coeffs })
}

/// Named series, before a coefficient domain is chosen.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// `a_k = 1/k!`
    Exp,
    /// `a_k = 1/[k]_q!`
    QExp,
    /// `a_k = 1`
    Geom,
    /// Explicit coefficients, `c_0 = 1`; zero beyond the list.
    Explicit(Vec<Rational>),
    /// `prod_{i=1..m} (1 - x_i t)` in symbolic variables.
    ProdRoots(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesSpec {
    pub kind: SeriesKind,
    pub order: usize,
}

/// Parse failure for the series grammar, with the byte offset of the
/// offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad series spec at position {position}: {message}")]
pub struct SpecParseError {
    pub position: usize,
    pub message: String,
}

impl SeriesKind {
    pub fn natural_domain(&self) -> RingSpec {
        match self {
            SeriesKind::QExp => RingSpec::RatFuncQ,
            SeriesKind::ProdRoots(m) => RingSpec::MultiPoly(*m),
            _ => RingSpec::Rational,
        }
    }
}

impl FromStr for SeriesKind {
    type Err = SpecParseError;

    /// Grammar: `exp`, `qexp`, `geom`, `poly:c0,c1,...` with `c0 = 1`, or
    /// `prodroots:m`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = |position: usize, message: &str| SpecParseError {
            position,
            message: message.to_string(),
        };
        match s {
            "exp" => return Ok(SeriesKind::Exp),
            "qexp" => return Ok(SeriesKind::QExp),
            "geom" => return Ok(SeriesKind::Geom),
            _ => {}
        }
        let Some((head, body)) = s.split_once(':') else {
            return Err(err(0, &format!("unknown series {s:?}")));
        };
        let body_start = head.len() + 1;
        match head {
            "poly" => {
                let mut coeffs = Vec::new();
                let mut pos = body_start;
                for tok in body.split(',') {
                    let c: Rational = tok
                        .parse()
                        .map_err(|_| err(pos, &format!("malformed coefficient {tok:?}")))?;
                    coeffs.push(c);
                    pos += tok.len() + 1;
                }
                if coeffs[0] != Rational::one() {
                    return Err(err(body_start, "leading coefficient must be 1"));
                }
                Ok(SeriesKind::Explicit(coeffs))
            }
            "prodroots" => match body.parse::<usize>() {
                Ok(m) if m >= 1 => Ok(SeriesKind::ProdRoots(m)),
                _ => Err(err(body_start, "prodroots needs a variable count m >= 1")),
            },
            _ => Err(err(0, &format!("unknown series {head:?}"))),
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Exp => f.write_str("exp"),
            SeriesKind::QExp => f.write_str("qexp"),
            SeriesKind::Geom => f.write_str("geom"),
            SeriesKind::Explicit(cs) => {
                let body: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "poly:{}", body.join(","))
            }
            SeriesKind::ProdRoots(m) => write!(f, "prodroots:{m}"),
        }
    }
}

fn rational_coeffs<R: Ring>(kind: &SeriesKind, order: usize, like: &R) -> Option<Vec<R>> {
    let cs = match kind {
        SeriesKind::Exp => {
            let mut fact = Rational::one();
            (0..=order)
                .map(|k| {
                    if k > 0 {
                        fact = fact.mul(&Rational::from_int(k as i64));
                    }
                    fact.recip().expect("k! is nonzero")
                })
                .collect()
        }
        SeriesKind::Geom => vec![Rational::one(); order + 1],
        SeriesKind::Explicit(cs) => (0..=order)
            .map(|k| cs.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect(),
        _ => return None,
    };
    Some(cs.iter().map(|c| like.embed(c)).collect())
}

/// Realize a named series over `Q` (EXP, GEOM, EXPLICIT).
pub fn realize_rational(spec: &SeriesSpec) -> Result<TruncatedSeries<Rational>> {
    realize_in(spec, &Rational::one())
}

/// Realize a series spec in the domain of `like`. QEXP and PRODROOTS need
/// their own domains, see [`realize_qexp`] and [`realize_prodroots`].
pub fn realize_in<R: Ring>(spec: &SeriesSpec, like: &R) -> Result<TruncatedSeries<R>> {
    match rational_coeffs(&spec.kind, spec.order, like) {
        Some(cs) => TruncatedSeries::normalized(cs),
        None => Err(Error::SpecDomainMismatch {
            spec: spec.kind.to_string(),
            domain: like.ring_spec().to_string(),
        }),
    }
}

/// `e_q^t = sum t^k / [k]_q!` over `Q(q)`.
pub fn realize_qexp(order: usize) -> TruncatedSeries<RationalFunction> {
    let coeffs = (0..=order)
        .map(|k| {
            RationalFunction::new(Polynomial::constant(Rational::one()), q_factorial(k))
                .expect("q-factorials are nonzero")
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// `prod_{i=1..m} (1 - x_i t)` with `a_k = (-1)^k e_k(x)`.
pub fn realize_prodroots(m: usize, order: usize) -> TruncatedSeries<MultiPoly> {
    let coeffs = (0..=order)
        .map(|k| {
            let e = elementary_symmetric(m, k);
            if k % 2 == 1 {
                e.neg()
            } else {
                e
            }
        })
        .collect();
    TruncatedSeries { coeffs }
}

/// A realized series whose domain is only known at run time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnySeries {
    Rational(TruncatedSeries<Rational>),
    RatFunc(TruncatedSeries<RationalFunction>),
    Multi(TruncatedSeries<MultiPoly>),
}

/// Instantiate a series spec over the requested coefficient domain.
pub fn realize_spec(spec: &SeriesSpec, domain: RingSpec) -> Result<AnySeries> {
    let mismatch = || Error::SpecDomainMismatch {
        spec: spec.kind.to_string(),
        domain: domain.to_string(),
    };
    match (&spec.kind, domain) {
        (SeriesKind::QExp, RingSpec::RatFuncQ) => Ok(AnySeries::RatFunc(realize_qexp(spec.order))),
        (SeriesKind::QExp, _) => Err(mismatch()),
        (SeriesKind::ProdRoots(m), RingSpec::MultiPoly(n)) if *m == n => {
            Ok(AnySeries::Multi(realize_prodroots(*m, spec.order)))
        }
        (SeriesKind::ProdRoots(_), _) => Err(mismatch()),
        (_, RingSpec::Rational) => Ok(AnySeries::Rational(realize_in(spec, &Rational::one())?)),
        (_, RingSpec::RatFuncQ) => Ok(AnySeries::RatFunc(realize_in(
            spec,
            &RationalFunction::from_rational(Rational::one()),
        )?)),
        (_, RingSpec::MultiPoly(m)) => Ok(AnySeries::Multi(realize_in(
            spec,
            &MultiPoly::constant(m, Rational::one()),
        )?)),
    }
}
