//! Named specializations: the q-exponential and the one-row Hall-Littlewood
//! polynomials.

use crate::det::hessenberg_det;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Monomial, MultiPoly, Polynomial, Rational, RationalFunction, Ring, RingOps};
use crate::pfk::{pfk_convolution, pfk_determinant, pfk_recursion, pfk_recursion_all};
use crate::report::IdentityReport;
use crate::series::{
    bordered_matrix, realize_prodroots, realize_qexp, realize_rational, series_mul, series_scale_var, SeriesKind,
    SeriesSpec, TruncatedSeries,
};

/// The q-integer `[l]_q = 1 + q + ... + q^(l-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QInt {
    pub l: usize,
    pub value: Polynomial<Rational>,
}

impl QInt {
    pub fn new(l: usize) -> Self {
        QInt {
            l,
            value: Polynomial::new(vec![Rational::one(); l]),
        }
    }

    pub fn as_ratfunc(&self) -> RationalFunction {
        RationalFunction::from_poly(self.value.clone())
    }
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q`, with `[0]_q! = 1`.
pub fn q_factorial(k: usize) -> Polynomial<Rational> {
    (1..=k).fold(Polynomial::constant(Rational::one()), |acc, l| {
        acc.mul(&QInt::new(l).value)
    })
}

fn q_factorial_rf(k: usize) -> RationalFunction {
    RationalFunction::from_poly(q_factorial(k))
}

fn q_pow(i: usize) -> RationalFunction {
    RationalFunction::q().pow(i as u32)
}

/// `(t - 1)(t - q)...(t - q^(k-1)) / [k]_q!` expanded in `t`.
pub fn qexp_product_form(k: usize) -> Polynomial<RationalFunction> {
    let one = RationalFunction::q().one_like();
    let roots: Vec<RationalFunction> = (0..k).map(q_pow).collect();
    let inv = q_factorial_rf(k).inv().expect("q-factorials are nonzero");
    Polynomial::from_roots(&one, &roots).scale(&inv)
}

/// Unsigned determinant of the bordered matrix with first row
/// `(1, c_1 t, ..., c_k t^k)` and shifted rows of `(1, c_1, ..., c_k)`.
pub fn bordered_det_in_t(c: &[RationalFunction]) -> Polynomial<RationalFunction> {
    let zero = c[0].zero_like();
    let first_row = c
        .iter()
        .enumerate()
        .map(|(j, cj)| Polynomial::monomial(cj.clone(), j, &zero))
        .collect();
    let consts: Vec<Polynomial<RationalFunction>> = c.iter().map(|x| Polynomial::constant(x.clone())).collect();
    let m = bordered_matrix(first_row, &consts, &Polynomial::zero());
    hessenberg_det(&m, &Polynomial::constant(c[0].one_like()))
}

/// Every comparison made by [`verify_qexp_factorization`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QexpFactorizationReport {
    /// Each of the three `P_k` paths against the factored product.
    pub det: IdentityReport<Polynomial<RationalFunction>>,
    pub rec: IdentityReport<Polynomial<RationalFunction>>,
    pub conv: IdentityReport<Polynomial<RationalFunction>>,
    /// The unsigned bordered determinant with entries `1/[j]_q!` against
    /// `(1 - t)(q - t)...(q^(k-1) - t) / [k]_q!`.
    pub bordered_det: IdentityReport<Polynomial<RationalFunction>>,
    /// `P_k(q^a)` against zero for `0 <= a < k`.
    pub vanishing: IdentityReport<RationalFunction>,
    /// The product form at `q = 1` against `P_{exp,k}`.
    pub classical_limit: IdentityReport<Polynomial<Rational>>,
}

impl QexpFactorizationReport {
    pub fn passed(&self) -> bool {
        self.det.passed()
            && self.rec.passed()
            && self.conv.passed()
            && self.bordered_det.passed()
            && self.vanishing.passed()
            && self.classical_limit.passed()
    }
}

/// `P_{e_q, k}(t) = (t - 1)(t - q)...(t - q^(k-1)) / [k]_q!` for `1 <= k <= k_max`.
pub fn verify_qexp_factorization(k_max: usize) -> Result<QexpFactorizationReport> {
    if k_max == 0 {
        return Err(Error::KExceedsOrder { k: 0, order: 0 });
    }
    let f = realize_qexp(k_max);
    let exp = realize_rational(&SeriesSpec {
        kind: SeriesKind::Exp,
        order: k_max,
    })?;
    let mut report = QexpFactorizationReport {
        det: IdentityReport::new("qexp-factorization/det"),
        rec: IdentityReport::new("qexp-factorization/rec"),
        conv: IdentityReport::new("qexp-factorization/conv"),
        bordered_det: IdentityReport::new("qexp-factorization/bordered-det"),
        vanishing: IdentityReport::new("qexp-factorization/vanishing"),
        classical_limit: IdentityReport::new("qexp-factorization/q=1"),
    };
    let zero = RationalFunction::q().zero_like();
    let one_q = Rational::one();
    let recs = pfk_recursion_all(&f, k_max)?;
    let exp_recs = pfk_recursion_all(&exp, k_max)?;
    for k in 1..=k_max {
        let product = qexp_product_form(k);
        let rec = recs[k].clone();
        report.det.push(k, pfk_determinant(&f, k)?.poly, product.clone());
        report.conv.push(k, pfk_convolution(&f, k)?.poly, product.clone());
        report.rec.push(k, rec.clone(), product.clone());

        let entries: Vec<RationalFunction> = f.coeffs()[..=k].to_vec();
        let bordered_rhs = if k % 2 == 1 { product.neg() } else { product.clone() };
        report.bordered_det.push(k, bordered_det_in_t(&entries), bordered_rhs);

        for a in 0..k {
            report
                .vanishing
                .push_noted(k, format!("a={a}"), rec.eval(&q_pow(a)), zero.clone());
        }

        let at_one = product.map(|c| c.eval(&one_q).expect("[k]_q! is k! at q = 1"));
        report.classical_limit.push(k, at_one, exp_recs[k].clone());
    }
    Ok(report)
}

/// The bracket polynomial `B_n(x) = 1 + sum_{k=1..n} (q^n - 1)...(q^n - q^(k-1)) / [k]_q! x^k`.
pub fn qexp_shift_bracket(n: usize) -> Polynomial<RationalFunction> {
    let qn = q_pow(n);
    let mut coeffs = vec![qn.one_like()];
    let mut numer = qn.one_like();
    for k in 1..=n {
        numer = numer.mul(&qn.sub(&q_pow(k - 1)));
        coeffs.push(numer.div(&q_factorial_rf(k)).expect("nonzero"));
    }
    Polynomial::new(coeffs)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QexpShiftReport {
    /// `e_q^(q^n x)` against `e_q^x B_n(x)`, degree by degree.
    pub shift: IdentityReport<RationalFunction>,
    /// `B_n` against `prod_{i=1..n} (1 + (q - 1) q^(i-1) x)`.
    pub product: IdentityReport<RationalFunction>,
    /// The coefficients of `B_n` against `P_{e_q,k}(q^n)`.
    pub pfk_values: IdentityReport<RationalFunction>,
}

impl QexpShiftReport {
    pub fn passed(&self) -> bool {
        self.shift.passed() && self.product.passed() && self.pfk_values.passed()
    }
}

pub fn verify_qexp_shift(n: usize, order: usize) -> Result<QexpShiftReport> {
    if order < n {
        return Err(Error::KExceedsOrder { k: n, order });
    }
    let qexp = realize_qexp(order);
    let one = RationalFunction::q().one_like();
    let bracket = qexp_shift_bracket(n);

    let lhs = series_scale_var(&qexp, &q_pow(n))?;
    let rhs = series_mul(&qexp, &TruncatedSeries::from_polynomial(&bracket, &one, order))?;
    let mut shift = IdentityReport::new("qexp-shift");
    for k in 0..=order {
        shift.push(k, lhs.coeffs()[k].clone(), rhs.coeffs()[k].clone());
    }

    let q_minus_one = RationalFunction::q().sub(&one);
    let prod = (1..=n).fold(Polynomial::constant(one.clone()), |acc, i| {
        acc.mul(&Polynomial::new(vec![one.clone(), q_minus_one.mul(&q_pow(i - 1))]))
    });
    let mut product = IdentityReport::new("qexp-shift/product");
    for k in 0..=n {
        product.push(k, bracket.coeff_or_zero(k, &one), prod.coeff_or_zero(k, &one));
    }

    let ps = pfk_recursion_all(&qexp, order)?;
    let mut pfk_values = IdentityReport::new("qexp-shift/pfk");
    for (k, p) in ps.iter().enumerate() {
        pfk_values.push(k, bracket.coeff_or_zero(k, &one), p.eval(&q_pow(n)));
    }
    Ok(QexpShiftReport {
        shift,
        product,
        pfk_values,
    })
}

/// `Q_{(k)}(x_1..x_m; t)` as a polynomial in `x_1..x_m, t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HLResult {
    pub k: usize,
    pub m: usize,
    pub value: MultiPoly,
}

/// `P_{f,k}` for `f = prod (1 - x_i t)`, by the division-free recursion over
/// `Q[x_1..x_m, t]` with the series variable identified with `t`.
pub fn hall_littlewood_qk(m: usize, k: usize) -> Result<HLResult> {
    if m == 0 {
        return Err(Error::InvalidSpec("MULTIPOLY requires m >= 1".into()));
    }
    let f = realize_prodroots(m, k);
    let p = pfk_recursion(&f, k)?.poly;
    Ok(HLResult {
        k,
        m,
        value: p.eval(&MultiPoly::t(m)),
    })
}

/// Coefficient of `u^k` in `prod_i (1 - x_i t u) / (1 - x_i u)`, expanded
/// with geometric series for the denominators.
pub fn hl_oracle(m: usize, k: usize) -> Result<HLResult> {
    if m == 0 {
        return Err(Error::InvalidSpec("MULTIPOLY requires m >= 1".into()));
    }
    let one = MultiPoly::constant(m, Rational::one());
    let t = MultiPoly::t(m);
    let mut acc = TruncatedSeries::one(&one, k);
    for i in 1..=m {
        let xi = MultiPoly::x(m, i);
        let mut numer = TruncatedSeries::one(&one, k);
        if k >= 1 {
            numer = numer.with_coeff(1, xi.mul(&t).neg())?;
        }
        let mut geo = Vec::with_capacity(k + 1);
        geo.push(one.clone());
        for j in 1..=k {
            let prev: &MultiPoly = &geo[j - 1];
            geo.push(prev.mul(&xi));
        }
        acc = series_mul(&series_mul(&acc, &numer)?, &TruncatedSeries::new(geo))?;
    }
    Ok(HLResult {
        k,
        m,
        value: acc.coeffs()[k].clone(),
    })
}

/// `h_k(x_1..x_m)`, the sum of all monomials of degree `k`.
pub fn complete_homogeneous(m: usize, k: usize) -> MultiPoly {
    fn go(slot: usize, m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot + 1 == m {
            cur[slot] = left;
            out.push(cur.clone());
            cur[slot] = 0;
            return;
        }
        for e in 0..=left {
            cur[slot] = e;
            go(slot + 1, m, left - e, cur, out);
        }
        cur[slot] = 0;
    }
    let mut exps = Vec::new();
    go(0, m, k as u32, &mut vec![0; m + 1], &mut exps);
    MultiPoly::from_terms(m, exps.into_iter().map(|e| (e, Rational::one())))
}

/// Exponent vectors of a polynomial, for tests and serialization.
pub fn monomials(p: &MultiPoly) -> Vec<&Monomial> {
    p.terms().map(|(mono, _)| mono).collect()
}
