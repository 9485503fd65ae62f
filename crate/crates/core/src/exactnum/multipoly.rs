use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use super::{Rational, Ring, RingOps, RingSpec};

/// Exponent vector over `x_1..x_m, t`; the last slot is `t`.
///
/// Ordered graded-lexicographically with `x_1 < x_2 < ... < x_m < t`:
/// total degree first, then the exponent of the largest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over `Q` in `x_1..x_m` and `t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    m: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(m: usize) -> Self {
        MultiPoly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        let mut p = Self::zero(m);
        p.push_term(Monomial(vec![0; m + 1]), c);
        p
    }

    /// `x_i` for `i` in `1..=m`.
    pub fn x(m: usize, i: usize) -> Self {
        assert!((1..=m).contains(&i), "variable x_{i} outside x_1..x_{m}");
        let mut e = vec![0; m + 1];
        e[i - 1] = 1;
        Self::from_terms(m, [(e, Rational::one())])
    }

    /// The parameter `t`.
    pub fn t(m: usize) -> Self {
        let mut e = vec![0; m + 1];
        e[m] = 1;
        Self::from_terms(m, [(e, Rational::one())])
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(m);
        for (e, c) in terms {
            assert_eq!(e.len(), m + 1, "exponent vector arity");
            p.push_term(Monomial(e), c);
        }
        p
    }

    fn push_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    /// Number of `x` variables.
    pub fn arity(&self) -> usize {
        self.m
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Set `x_i = 0` and remove its slot, giving a polynomial in one fewer
    /// `x` variable.
    pub fn drop_x(&self, i: usize) -> MultiPoly {
        assert!((1..=self.m).contains(&i));
        let mut out = MultiPoly::zero(self.m - 1);
        for (mono, c) in &self.terms {
            if mono.0[i - 1] == 0 {
                let mut e = mono.0.clone();
                e.remove(i - 1);
                out.push_term(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Set `t` to a rational value.
    pub fn eval_t(&self, at: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.m);
        for (mono, c) in &self.terms {
            let mut e = mono.0.clone();
            let d = std::mem::take(&mut e[self.m]);
            out.push_term(Monomial(e), c.mul(&at.pow(d)));
        }
        out
    }

    /// Distinct values of the `x`-degree (all slots but `t`) over the terms.
    pub fn x_degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|mono| mono.0[..self.m].iter().sum()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    fn assert_same_arity(&self, other: &Self) {
        assert_eq!(self.m, other.m, "MultiPoly arity mismatch");
    }
}

impl RingOps for MultiPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.push_term(mono.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        self.assert_same_arity(other);
        let mut out = MultiPoly::zero(self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.push_term(ma.times(mb), ca.mul(cb));
            }
        }
        out
    }

    fn neg(&self) -> Self {
        MultiPoly {
            m: self.m,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.m)
    }
    fn one_like(&self) -> Self {
        MultiPoly::constant(self.m, Rational::one())
    }
    fn embed(&self, r: &Rational) -> Self {
        MultiPoly::constant(self.m, r.clone())
    }
    fn ring_spec(&self) -> RingSpec {
        RingSpec::MultiPoly(self.m)
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (mono, c) = self.terms.iter().next().expect("one term");
                (mono.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Descending canonical order, e.g. `x1^2 - x1*x2*t + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (mono, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (slot, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if slot == self.m {
                    "t".to_string()
                } else {
                    format!("x{}", slot + 1)
                };
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let abs = c.abs();
            if factors.is_empty() {
                let _ = write!(out, "{abs}");
            } else if abs == Rational::one() {
                out.push_str(&factors.join("*"));
            } else {
                let _ = write!(out, "{abs}*{}", factors.join("*"));
            }
        }
        f.write_str(&out)
    }
}

/// `e_k(x_1..x_m)` as a polynomial in `MULTIPOLY(m)`.
pub fn elementary_symmetric(m: usize, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(m);
    if k > m {
        return out;
    }
    for subset in k_subsets(m, k) {
        let mut e = vec![0; m + 1];
        for i in subset {
            e[i] = 1;
        }
        out.push_term(Monomial(e), Rational::one());
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Elementary symmetric functions `e_0..e_n` of a list of ring elements, read
/// off the expansion of `prod (1 + r_i u)`.
pub fn elementary_of<R: Ring>(values: &[R], one: &R) -> Vec<R> {
    let mut e = vec![one.clone()];
    for r in values {
        e.push(one.zero_like());
        for j in (1..e.len()).rev() {
            e[j] = e[j].add(&e[j - 1].mul(r));
        }
    }
    e
}
