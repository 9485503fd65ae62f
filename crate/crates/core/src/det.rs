//! Determinants.
//!
//! Every matrix in this crate is upper Hessenberg with a unit subdiagonal, so
//! the production path is the division-free recursion over leading principal
//! minors. [`bareiss_det`] is a generic fraction-free elimination kept as an
//! independent cross-check over fields.

use crate::error::{Error, Result};
use crate::exactnum::{Field, RingOps};

/// Determinant of an upper Hessenberg matrix.
///
/// Entries strictly below the subdiagonal are never read. With `h_n` the
/// leading `n x n` minor,
/// `h_n = sum_r (-1)^(n-r) m[r][n] (prod of subdiagonal entries r..n) h_r`.
pub fn hessenberg_det<T: RingOps>(m: &[Vec<T>], one: &T) -> T {
    let n = m.len();
    let mut minors: Vec<T> = Vec::with_capacity(n + 1);
    minors.push(one.clone());
    for j in 0..n {
        let mut acc: Option<T> = None;
        let mut sub_prod = one.clone();
        for r in (0..=j).rev() {
            let term = m[r][j].mul(&sub_prod).mul(&minors[r]);
            let term = if (j - r) % 2 == 1 { term.neg() } else { term };
            acc = Some(match acc {
                Some(a) => a.add(&term),
                None => term,
            });
            if r > 0 {
                sub_prod = sub_prod.mul(&m[r][r - 1]);
            }
        }
        minors.push(acc.expect("at least one term"));
    }
    minors.pop().expect("nonempty")
}

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact.
pub fn bareiss_det<F: Field>(matrix: &[Vec<F>], one: &F) -> Result<F> {
    let n = matrix.len();
    if n == 0 {
        return Ok(one.clone());
    }
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidSpec("determinant of a non-square matrix".into()));
    }
    let mut a = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(one.sub(one)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { d.neg() } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn small_hessenberg() {
        let one = Rational::one();
        assert_eq!(hessenberg_det(&m(&[]), &one), one);
        assert_eq!(hessenberg_det(&m(&[&[5]]), &one), Rational::from_int(5));
        assert_eq!(hessenberg_det(&m(&[&[1, 2], &[3, 4]]), &one), Rational::from_int(-2));
        // 3x3 with non-unit subdiagonal: cofactor expansion by hand gives 3.
        let h = m(&[&[2, 1, 3], &[1, 1, 1], &[0, 2, 1]]);
        assert_eq!(hessenberg_det(&h, &one), Rational::from_int(3));
    }

    #[test]
    fn bareiss_matches_cofactors() {
        let one = Rational::one();
        let h = m(&[&[2, 1, 3], &[1, 1, 1], &[0, 2, 1]]);
        assert_eq!(bareiss_det(&h, &one).unwrap(), Rational::from_int(3));
        // Needs a row swap.
        let p = m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(bareiss_det(&p, &one).unwrap(), Rational::from_int(-1));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(bareiss_det(&singular, &one).unwrap().is_zero());
    }
}
