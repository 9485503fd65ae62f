//! Truncated free associative algebra, q-brackets and the generalized
//! conjugation `f(x) y f(x)^{-1}`.
//!
//! Elements are finite sums of words over a small alphabet (default `x`,
//! `y`). An element of order `N` keeps only words of length `<= N`; products
//! drop longer words. Conjugation by a series of order `N` therefore lives at
//! order `N + 1`: `N` letters `x` and one `y`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};
use crate::pfk::root_symmetrics;
use crate::report::IdentityReport;
use crate::series::{series_invert, wronski_dk, TruncatedSeries};

pub const X: u8 = 0;
pub const Y: u8 = 1;

/// A word as generator indices. Ordered by length, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x^i y x^j`.
    pub fn x_y_x(i: usize, j: usize) -> Self {
        let mut w = vec![X; i];
        w.push(Y);
        w.extend(std::iter::repeat_n(X, j));
        Word(w)
    }

    fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    pub fn count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement<R> {
    terms: BTreeMap<Word, R>,
    order: usize,
    one: R,
    alphabet: Arc<[char]>,
}

fn default_alphabet() -> Arc<[char]> {
    Arc::from(&['x', 'y'][..])
}

impl<R: Ring> FreeElement<R> {
    /// Zero in the algebra on `{x, y}` over the domain of `like`.
    pub fn zero(like: &R, order: usize) -> Self {
        Self::zero_with_alphabet(like, order, default_alphabet())
    }

    pub fn zero_with_alphabet(like: &R, order: usize, alphabet: Arc<[char]>) -> Self {
        FreeElement {
            terms: BTreeMap::new(),
            order,
            one: like.one_like(),
            alphabet,
        }
    }

    /// `coeff * word`, or zero when the word is longer than the order.
    pub fn monomial(word: Word, coeff: R, order: usize) -> Self {
        let mut out = Self::zero(&coeff, order);
        out.add_term(word, coeff);
        out
    }

    pub fn generator(letter: u8, like: &R, order: usize) -> Self {
        Self::monomial(Word(vec![letter]), like.one_like(), order)
    }

    pub fn x(like: &R, order: usize) -> Self {
        Self::generator(X, like, order)
    }

    pub fn y(like: &R, order: usize) -> Self {
        Self::generator(Y, like, order)
    }

    fn add_term(&mut self, word: Word, c: R) {
        if word.len() > self.order || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The unit of the coefficient domain.
    pub fn one(&self) -> &R {
        &self.one
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Option<&R> {
        self.terms.get(word)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn word_text(&self, word: &Word) -> String {
        word.0.iter().map(|&l| self.alphabet[l as usize]).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.one.check_same_domain(&other.one)?;
        if self.order != other.order || self.alphabet != other.alphabet {
            return Err(Error::DomainMismatch {
                left: format!("free algebra on {:?} of order {}", &*self.alphabet, self.order),
                right: format!("free algebra on {:?} of order {}", &*other.alphabet, other.order),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.one.neg()))
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero_with_alphabet(&self.one, self.order, self.alphabet.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    /// Only the words of the given length.
    pub fn graded_piece(&self, len: usize) -> Self {
        let mut out = Self::zero_with_alphabet(&self.one, self.order, self.alphabet.clone());
        for (w, c) in self.terms.iter().filter(|(w, _)| w.len() == len) {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Same terms, different truncation order (words too long are dropped).
    pub fn with_order(&self, order: usize) -> Self {
        let mut out = Self::zero_with_alphabet(&self.one, order, self.alphabet.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

/// Concatenation product, truncated at the common order.
pub fn free_mul<R: Ring>(a: &FreeElement<R>, b: &FreeElement<R>) -> Result<FreeElement<R>> {
    a.check_compatible(b)?;
    let mut out = FreeElement::zero_with_alphabet(&a.one, a.order, a.alphabet.clone());
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            if wa.len() + wb.len() <= a.order {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
    }
    Ok(out)
}

/// `[a, b]_q = ab - q ba`.
pub fn q_bracket<R: Ring>(a: &FreeElement<R>, b: &FreeElement<R>, q: &R) -> Result<FreeElement<R>> {
    a.one.check_same_domain(q)?;
    free_mul(a, b)?.sub(&free_mul(b, a)?.scale(q))
}

fn check_fits(k: usize, order: usize) -> Result<()> {
    if k + 1 > order {
        return Err(Error::KExceedsOrder { k: k + 1, order });
    }
    Ok(())
}

/// `sum_j (-1)^j e_j x^(k-j) y x^j` from `e_0..e_k`.
pub fn ad_q_power<R: Ring>(e: &[R], k: usize, order: usize) -> Result<FreeElement<R>> {
    if e.len() != k + 1 || !e[0].is_one() {
        return Err(Error::BadSymmetrics);
    }
    check_fits(k, order)?;
    let mut out = FreeElement::zero(&e[0], order);
    for (j, ej) in e.iter().enumerate() {
        let c = if j % 2 == 1 { ej.neg() } else { ej.clone() };
        out.add_term(Word::x_y_x(k - j, j), c);
    }
    Ok(out)
}

/// `[x, [x, ..., [x, y]_{q_1}, ...]_{q_(k-1)}]_{q_k}`.
pub fn nested_bracket<R: Ring>(q_list: &[R], like: &R, order: usize) -> Result<FreeElement<R>> {
    check_fits(q_list.len(), order)?;
    let x = FreeElement::x(like, order);
    let mut acc = FreeElement::y(like, order);
    for q in q_list {
        acc = q_bracket(&x, &acc, q)?;
    }
    Ok(acc)
}

/// `sum_i c_i x^i` for the coefficients of a series.
fn series_in_x<R: Ring>(s: &TruncatedSeries<R>, order: usize) -> FreeElement<R> {
    let mut out = FreeElement::zero(&s.coeffs()[0], order);
    for (i, c) in s.coeffs().iter().enumerate() {
        out.add_term(Word(vec![X; i]), c.clone());
    }
    out
}

/// `f(x) y f(x)^{-1}` by direct multiplication in the free algebra, keeping
/// words of length `<= n + 1`.
pub fn conjugate_series<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<FreeElement<R>> {
    f.check_unit()?;
    if n > f.order() {
        return Err(Error::KExceedsOrder { k: n, order: f.order() });
    }
    let f = f.truncate(n);
    let order = n + 1;
    let fx = series_in_x(&f, order);
    let finv = series_in_x(&series_invert(&f)?, order);
    let y = FreeElement::y(&f.coeffs()[0], order);
    free_mul(&fx, &free_mul(&y, &finv)?)
}

/// Degree-by-degree pieces of the conjugation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdjointResult<R> {
    /// Entry `k` holds the words with `k` letters `x` and one `y`; entry 0
    /// is `y` itself.
    pub per_degree: Vec<FreeElement<R>>,
    pub total: FreeElement<R>,
}

/// `z_k = sum_i a_i D_{k-i}(f) x^i y x^(k-i)` for `k = 0..=n`, with the
/// `D_j` taken from their determinants. No hypothesis on the `a_k`.
pub fn zk_terms<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<AdjointResult<R>> {
    f.check_unit()?;
    if n > f.order() {
        return Err(Error::KExceedsOrder { k: n, order: f.order() });
    }
    let a = f.coeffs();
    let order = n + 1;
    let d = (0..=n).map(|j| wronski_dk(f, j)).collect::<Result<Vec<R>>>()?;
    let mut per_degree = Vec::with_capacity(n + 1);
    let mut total = FreeElement::zero(&a[0], order);
    for k in 0..=n {
        let mut z = FreeElement::zero(&a[0], order);
        for i in 0..=k {
            z.add_term(Word::x_y_x(i, k - i), a[i].mul(&d[k - i]));
        }
        total = total.add(&z)?;
        per_degree.push(z);
    }
    Ok(AdjointResult { per_degree, total })
}

/// Check `z_k` against the graded pieces of the direct conjugation.
pub fn verify_zk<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<IdentityReport<FreeElement<R>>> {
    let conj = conjugate_series(f, n)?;
    let zk = zk_terms(f, n)?;
    let mut report = IdentityReport::new("zk");
    for (k, z) in zk.per_degree.into_iter().enumerate() {
        report.push(k, conj.graded_piece(k + 1), z);
    }
    Ok(report)
}

/// Both comparisons made for the generalized conjugation formula.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjugationReport<F> {
    /// Direct conjugation against `a_k (ad x)^{q_k}(y)`.
    pub adjoint: IdentityReport<FreeElement<F>>,
    /// Direct conjugation against `z_k`.
    pub zk: IdentityReport<FreeElement<F>>,
}

impl<F: Ring> ConjugationReport<F> {
    pub fn passed(&self) -> bool {
        self.adjoint.passed() && self.zk.passed()
    }
}

/// `f(x) y f(x)^{-1} = y + sum_k a_k (ad x)^{q_k}(y)` where `q_k` is the root
/// multiset of `P_{f,k}`, consumed only through its elementary symmetric
/// functions. Refuses when some `a_k` with `1 <= k <= n` vanishes.
pub fn verify_general_conjugation<F: Field>(f: &TruncatedSeries<F>, n: usize) -> Result<ConjugationReport<F>> {
    f.check_unit()?;
    if n > f.order() {
        return Err(Error::KExceedsOrder { k: n, order: f.order() });
    }
    if let Some(k) = (1..=n).find(|&k| f.coeffs()[k].is_zero()) {
        return Err(Error::VanishingLeadingCoeff { k });
    }
    let conj = conjugate_series(f, n)?;
    let zk = zk_terms(f, n)?;
    let order = n + 1;
    let mut adjoint = IdentityReport::new("conjugation");
    let mut zk_report = IdentityReport::new("zk");
    for k in 0..=n {
        let lhs = conj.graded_piece(k + 1);
        let sym = root_symmetrics(f, k)?;
        let rhs = ad_q_power(&sym.e, k, order)?.scale(&f.coeffs()[k]);
        adjoint.push(k, lhs.clone(), rhs);
        zk_report.push(k, lhs, zk.per_degree[k].clone());
    }
    Ok(ConjugationReport { adjoint, zk: zk_report })
}

impl<R: Ring> fmt::Display for FreeElement<R> {
    /// Canonical order, e.g. `y + xy - yx + 1/2*xxy`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
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
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                self.word_text(w)
            };
            if body == "1" {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&body);
            } else {
                let _ = write!(out, "{body}*{word}");
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Rational, RationalFunction, RingOps};
    use crate::series::{realize_qexp, realize_rational, SeriesKind, SeriesSpec};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Build an element from `(word, coeff)` pairs at the given order.
    fn el(order: usize, terms: &[(&str, &str)]) -> FreeElement<Rational> {
        let mut out = FreeElement::zero(&Rational::one(), order);
        for (w, c) in terms {
            let word = Word(w.chars().map(|ch| if ch == 'x' { X } else { Y }).collect());
            out.add_term(word, r(c));
        }
        out
    }

    fn one() -> Rational {
        Rational::one()
    }

    #[test]
    fn products() {
        let x = FreeElement::x(&one(), 3);
        let y = FreeElement::y(&one(), 3);
        assert_eq!(free_mul(&x, &y).unwrap(), el(3, &[("xy", "1")]));
        let lhs = free_mul(&x.add(&y).unwrap(), &x.sub(&y).unwrap()).unwrap();
        assert_eq!(lhs, el(3, &[("xx", "1"), ("xy", "-1"), ("yx", "1"), ("yy", "-1")]));
        let x2 = FreeElement::x(&one(), 2);
        assert!(free_mul(&x2, &el(2, &[("xx", "1")])).unwrap().is_zero());
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = FreeElement::x(&one(), 2);
        let b = FreeElement::x(&one(), 3);
        assert_eq!(free_mul(&a, &b).unwrap_err().code(), "DOMAIN_MISMATCH");
    }

    #[test]
    fn brackets() {
        let x = FreeElement::x(&one(), 2);
        let y = FreeElement::y(&one(), 2);
        assert_eq!(q_bracket(&x, &y, &one()).unwrap(), el(2, &[("xy", "1"), ("yx", "-1")]));
        assert!(q_bracket(&x, &x, &one()).unwrap().is_zero());
        let qo = RationalFunction::q();
        let xq = FreeElement::x(&qo, 2);
        let yq = FreeElement::y(&qo, 2);
        let b = q_bracket(&xq, &yq, &qo).unwrap();
        assert_eq!(b.coeff(&Word(vec![Y, X])), Some(&qo.neg()));
        assert_eq!(b.coeff(&Word(vec![X, Y])), Some(&qo.one_like()));
    }

    #[test]
    fn ad_q_examples() {
        assert_eq!(ad_q_power(&[one()], 0, 1).unwrap(), el(1, &[("y", "1")]));
        assert_eq!(
            ad_q_power(&[one(), r("2"), one()], 2, 3).unwrap(),
            el(3, &[("xxy", "1"), ("xyx", "-2"), ("yxx", "1")])
        );
        assert_eq!(ad_q_power(&[r("2"), r("1")], 1, 3).unwrap_err(), Error::BadSymmetrics);
        assert_eq!(ad_q_power(&[one(), one()], 1, 1).unwrap_err().code(), "K_EXCEEDS_ORDER");
    }

    #[test]
    fn nested_examples() {
        assert_eq!(
            nested_bracket::<Rational>(&[], &one(), 1).unwrap(),
            el(1, &[("y", "1")])
        );
        assert_eq!(
            nested_bracket(&[r("2"), r("3")], &one(), 3).unwrap(),
            el(3, &[("xxy", "1"), ("xyx", "-5"), ("yxx", "6")])
        );
        // (ad x)^2 (y) = xxy - 2xyx + yxx
        assert_eq!(
            nested_bracket(&[one(), one()], &one(), 3).unwrap(),
            el(3, &[("xxy", "1"), ("xyx", "-2"), ("yxx", "1")])
        );
    }

    fn exp(order: usize) -> TruncatedSeries<Rational> {
        realize_rational(&SeriesSpec {
            kind: SeriesKind::Exp,
            order,
        })
        .unwrap()
    }

    #[test]
    fn conjugation_examples() {
        let unit = TruncatedSeries::one(&one(), 3);
        assert_eq!(conjugate_series(&unit, 3).unwrap(), el(4, &[("y", "1")]));
        assert_eq!(
            conjugate_series(&exp(2), 2).unwrap(),
            el(
                3,
                &[
                    ("y", "1"),
                    ("xy", "1"),
                    ("yx", "-1"),
                    ("xxy", "1/2"),
                    ("xyx", "-1"),
                    ("yxx", "1/2")
                ]
            )
        );
        let lin = TruncatedSeries::new(vec![one(), one(), r("0")]);
        assert_eq!(
            conjugate_series(&lin, 2).unwrap(),
            el(3, &[("y", "1"), ("xy", "1"), ("yx", "-1"), ("yxx", "1"), ("xyx", "-1")])
        );
    }

    #[test]
    fn zk_examples() {
        let f = TruncatedSeries::new(vec![one(), r("-3/5"), r("2"), r("7")]);
        let z = zk_terms(&f, 3).unwrap();
        assert_eq!(z.per_degree[1], el(4, &[("xy", "-3/5"), ("yx", "3/5")]));
        assert_eq!(z.total, conjugate_series(&f, 3).unwrap());
        let ez = zk_terms(&exp(2), 2).unwrap();
        assert_eq!(
            ez.per_degree[2],
            el(3, &[("xxy", "1/2"), ("xyx", "-1"), ("yxx", "1/2")])
        );
        let lin = TruncatedSeries::new(vec![one(), one(), r("0")]);
        let lz = zk_terms(&lin, 2).unwrap();
        assert_eq!(lz.per_degree[2], el(3, &[("yxx", "1"), ("xyx", "-1")]));
    }

    #[test]
    fn general_conjugation_exp() {
        let rep = verify_general_conjugation(&exp(4), 4).unwrap();
        assert!(rep.passed());
        let mut fact = Rational::one();
        let ones = vec![one(); 4];
        for k in 0..=4 {
            if k > 0 {
                fact = fact * Rational::from_int(k as i64);
            }
            let classical = nested_bracket(&ones[..k], &one(), 5).unwrap();
            assert_eq!(rep.adjoint.checks[k].lhs, classical.scale(&fact.recip().unwrap()));
        }
    }

    #[test]
    fn general_conjugation_qexp() {
        let qe = realize_qexp(3);
        let rep = verify_general_conjugation(&qe, 3).unwrap();
        assert!(rep.passed());
        let q = RationalFunction::q();
        let qs: Vec<RationalFunction> = (0..3).map(|i| q.pow(i)).collect();
        for k in 1..=3 {
            let bracket = nested_bracket(&qs[..k], &q, 4).unwrap();
            assert_eq!(rep.adjoint.checks[k].lhs, bracket.scale(&qe.coeffs()[k]));
        }
    }

    #[test]
    fn refuses_vanishing_coefficient() {
        let f = TruncatedSeries::new(vec![one(), one(), r("0"), r("2")]);
        assert_eq!(
            verify_general_conjugation(&f, 3).unwrap_err(),
            Error::VanishingLeadingCoeff { k: 2 }
        );
        assert!(verify_zk(&f, 3).unwrap().passed());
    }

    #[test]
    fn display_order() {
        let e = conjugate_series(&exp(2), 2).unwrap();
        assert_eq!(e.to_string(), "y + xy - yx + 1/2*xxy - xyx + 1/2*yxx");
    }
}
