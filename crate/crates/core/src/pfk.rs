//! The polynomials `P_{f,k}(t)` attached to a series `f = 1 + sum a_k t^k`.
//!
//! They are the coefficients of `f(tx)/f(x) = sum_k P_{f,k}(t) x^k`. Three
//! independent routes compute them:
//!
//! * [`pfk_determinant`]: `(-1)^k` times the bordered Hessenberg determinant
//!   with first row `(1, a_1 t, ..., a_k t^k)`;
//! * [`pfk_recursion`]: `P_k = a_k t^k - sum_{i=1..k} a_i P_{k-i}`;
//! * [`pfk_convolution`]: `P_k = sum_i a_i D_{k-i}(f) t^i`, the coefficient of
//!   `x^k` in `f(tx) * (1/f)(x)`.
//!
//! For `k >= 1` every `P_k` vanishes at `t = 1` and has leading coefficient
//! `a_k`. Its roots are only ever handled through their elementary
//! symmetric functions ([`root_symmetrics`]), which stay in the base field.

use std::fmt;

use crate::det::{bareiss_det, hessenberg_det};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Polynomial, Ring, RingOps};
use crate::report::IdentityReport;
use crate::series::{bordered_matrix, series_invert, series_mul, series_scale_var, wronski_dk, TruncatedSeries};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PfkSource {
    Det,
    Rec,
    Conv,
}

impl fmt::Display for PfkSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PfkSource::Det => "DET",
            PfkSource::Rec => "REC",
            PfkSource::Conv => "CONV",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PfkPolynomial<R> {
    pub poly: Polynomial<R>,
    pub k: usize,
    pub source: PfkSource,
}

fn check_k<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<()> {
    f.check_unit()?;
    if k > f.order() {
        return Err(Error::KExceedsOrder { k, order: f.order() });
    }
    Ok(())
}

pub fn pfk_determinant<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<PfkPolynomial<R>> {
    check_k(f, k)?;
    let a = f.coeffs();
    let zero = a[0].zero_like();
    let first_row = (0..=k).map(|j| Polynomial::monomial(a[j].clone(), j, &zero)).collect();
    let consts: Vec<Polynomial<R>> = a[..=k].iter().map(|c| Polynomial::constant(c.clone())).collect();
    let m = bordered_matrix(first_row, &consts, &Polynomial::zero());
    let det = hessenberg_det(&m, &Polynomial::constant(a[0].one_like()));
    Ok(PfkPolynomial {
        poly: if k % 2 == 1 { det.neg() } else { det },
        k,
        source: PfkSource::Det,
    })
}

/// `P_0 .. P_k` by the recursion.
pub fn pfk_recursion_all<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<Vec<Polynomial<R>>> {
    check_k(f, k)?;
    let a = f.coeffs();
    let zero = a[0].zero_like();
    let mut ps: Vec<Polynomial<R>> = vec![Polynomial::constant(a[0].one_like())];
    for j in 1..=k {
        let mut p = Polynomial::monomial(a[j].clone(), j, &zero);
        for i in 1..=j {
            p = p.sub(&ps[j - i].scale(&a[i]));
        }
        ps.push(p);
    }
    Ok(ps)
}

pub fn pfk_recursion<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<PfkPolynomial<R>> {
    let poly = pfk_recursion_all(f, k)?.pop().expect("k+1 entries");
    Ok(PfkPolynomial {
        poly,
        k,
        source: PfkSource::Rec,
    })
}

pub fn pfk_convolution<R: Ring>(f: &TruncatedSeries<R>, k: usize) -> Result<PfkPolynomial<R>> {
    check_k(f, k)?;
    let a = f.coeffs();
    let coeffs = (0..=k)
        .map(|i| Ok(a[i].mul(&wronski_dk(f, k - i)?)))
        .collect::<Result<Vec<R>>>()?;
    Ok(PfkPolynomial {
        poly: Polynomial::new(coeffs),
        k,
        source: PfkSource::Conv,
    })
}

/// `P_{f,k}(t)` at a field point, by fraction-free elimination of the
/// numerically evaluated bordered matrix. Cross-check only.
pub fn pfk_fraction_free_at<F: Field>(f: &TruncatedSeries<F>, k: usize, t: &F) -> Result<F> {
    check_k(f, k)?;
    let a = f.coeffs();
    let mut power = a[0].one_like();
    let first_row = (0..=k)
        .map(|j| {
            let entry = a[j].mul(&power);
            power = power.mul(t);
            entry
        })
        .collect();
    let m = bordered_matrix(first_row, a, &a[0].zero_like());
    let det = bareiss_det(&m, &a[0].one_like())?;
    Ok(if k % 2 == 1 { det.neg() } else { det })
}

/// `D_k(f)` by fraction-free elimination. Cross-check only.
pub fn dk_fraction_free<F: Field>(f: &TruncatedSeries<F>, k: usize) -> Result<F> {
    check_k(f, k)?;
    let a = f.coeffs();
    let zero = a[0].zero_like();
    let m: Vec<Vec<F>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if j + 1 >= i { a[j + 1 - i].clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    let det = bareiss_det(&m, &a[0].one_like())?;
    Ok(if k % 2 == 1 { det.neg() } else { det })
}

/// Compare `f(tx)/f(x)` against `sum_k P_{f,k}(t) x^k` for degrees `0..=n`.
///
/// The left side goes through variable scaling, the recursive inverse and
/// the Cauchy product; the right side evaluates the recursion polynomials.
pub fn verify_ftxfx<R: Ring>(f: &TruncatedSeries<R>, t_value: &R, n: usize) -> Result<IdentityReport<R>> {
    check_k(f, n)?;
    let f = f.truncate(n);
    let lhs = series_mul(&series_scale_var(&f, t_value)?, &series_invert(&f)?)?;
    let ps = pfk_recursion_all(&f, n)?;
    let mut report = IdentityReport::new("ftxfx");
    for (k, p) in ps.iter().enumerate() {
        report.push(k, lhs.coeffs()[k].clone(), p.eval(t_value));
    }
    Ok(report)
}

/// Compare `P_j(st)` with `sum_i P_i(s) P_{j-i}(t) t^i` for `j = 0..=k`.
pub fn verify_pfk_mult<R: Ring>(f: &TruncatedSeries<R>, s: &R, t: &R, k: usize) -> Result<IdentityReport<R>> {
    check_k(f, k)?;
    s.check_same_domain(t)?;
    f.coeffs()[0].check_same_domain(s)?;
    let ps = pfk_recursion_all(f, k)?;
    let st = s.mul(t);
    let at_s: Vec<R> = ps.iter().map(|p| p.eval(s)).collect();
    let at_t: Vec<R> = ps.iter().map(|p| p.eval(t)).collect();
    let mut report = IdentityReport::new("pfk-mult");
    for j in 0..=k {
        let lhs = ps[j].eval(&st);
        let mut t_pow = t.one_like();
        let mut rhs = t.zero_like();
        for i in 0..=j {
            rhs = rhs.add(&at_s[i].mul(&at_t[j - i]).mul(&t_pow));
            t_pow = t_pow.mul(t);
        }
        report.push(j, lhs, rhs);
    }
    Ok(report)
}

/// Elementary symmetric functions `e_0..e_k` of the root multiset of
/// `P_{f,k}`, so that `P_{f,k}(t) = a_k sum_j (-1)^j e_j t^(k-j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSymmetrics<F> {
    pub k: usize,
    pub e: Vec<F>,
}

impl<F: Field> RootSymmetrics<F> {
    /// `lead * prod (t - q_i)`, expanded.
    pub fn polynomial(&self, lead: &F) -> Polynomial<F> {
        let coeffs = (0..=self.k)
            .map(|deg| {
                let j = self.k - deg;
                let c = lead.mul(&self.e[j]);
                if j % 2 == 1 {
                    c.neg()
                } else {
                    c
                }
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

/// `e_j = (-1)^j a_{k-j} D_j(f) / a_k`. Requires `a_k != 0`.
pub fn root_symmetrics<F: Field>(f: &TruncatedSeries<F>, k: usize) -> Result<RootSymmetrics<F>> {
    check_k(f, k)?;
    let a = f.coeffs();
    if a[k].is_zero() {
        return Err(Error::VanishingLeadingCoeff { k });
    }
    let lead_inv = a[k].inv()?;
    let e = (0..=k)
        .map(|j| {
            let v = a[k - j].mul(&wronski_dk(f, j)?).mul(&lead_inv);
            Ok(if j % 2 == 1 { v.neg() } else { v })
        })
        .collect::<Result<Vec<F>>>()?;
    Ok(RootSymmetrics { k, e })
}
