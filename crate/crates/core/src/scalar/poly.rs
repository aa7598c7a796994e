//! Dense univariate polynomials over an exact field, stored in ascending order
//! with no trailing zeros. Used for cyclotomic reduction and for the
//! rational-function field.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Coeff: Clone + PartialEq {
    fn c_zero() -> Self;
    fn c_one() -> Self;
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, o: &Self) -> Self;
    fn c_sub(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_neg(&self) -> Self;
    /// Multiplicative inverse; callers never pass zero.
    fn c_inv(&self) -> Self;
}

impl Coeff for BigRational {
    fn c_zero() -> Self {
        Zero::zero()
    }
    fn c_one() -> Self {
        One::one()
    }
    fn c_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn c_add(&self, o: &Self) -> Self {
        self + o
    }
    fn c_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn c_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn c_neg(&self) -> Self {
        -self
    }
    fn c_inv(&self) -> Self {
        self.recip()
    }
}

pub fn trim<T: Coeff>(mut p: Vec<T>) -> Vec<T> {
    while p.last().map_or(false, |c| c.c_is_zero()) {
        p.pop();
    }
    p
}

pub fn add<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.c_add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trim(out)
}

pub fn neg<T: Coeff>(a: &[T]) -> Vec<T> {
    a.iter().map(|c| c.c_neg()).collect()
}

pub fn sub<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    add(a, &neg(b))
}

pub fn scale<T: Coeff>(a: &[T], s: &T) -> Vec<T> {
    if s.c_is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c.c_mul(s)).collect()
}

pub fn mul<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::c_zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.c_is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.c_is_zero() {
                continue;
            }
            out[i + j] = out[i + j].c_add(&x.c_mul(y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<T: Coeff>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Vec<T> = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().c_inv();
    let mut q = vec![T::c_zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap().c_mul(&lead_inv);
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].c_sub(&f.c_mul(y));
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Remainder modulo a monic polynomial.
pub fn rem_monic<T: Coeff>(a: &[T], m: &[T]) -> Vec<T> {
    let mut r: Vec<T> = a.to_vec();
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let f = r.last().unwrap().clone();
        if !f.c_is_zero() {
            for (j, y) in m.iter().enumerate() {
                r[shift + j] = r[shift + j].c_sub(&f.c_mul(y));
            }
        }
        r.pop();
    }
    trim(r)
}

pub fn make_monic<T: Coeff>(a: &[T]) -> Vec<T> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(a, &l.c_inv()),
    }
}

pub fn gcd<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Inverse of `a` modulo `m`, if gcd(a, m) = 1.
pub fn inverse_mod<T: Coeff>(a: &[T], m: &[T]) -> Option<Vec<T>> {
    // invariant: r0 = s0·a (mod m), r1 = s1·a (mod m)
    let mut r0 = m.to_vec();
    let mut s0: Vec<T> = Vec::new();
    let mut r1 = a.to_vec();
    let mut s1: Vec<T> = vec![T::c_one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        s0 = s1;
        r1 = r;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].c_inv();
    Some(rem_monic(&scale(&s0, &c), &make_monic(m)))
}

pub fn eval<T: Coeff>(a: &[T], x: &T) -> T {
    let mut acc = T::c_zero();
    for c in a.iter().rev() {
        acc = acc.c_mul(x).c_add(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> Vec<BigRational> {
        trim(v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    #[test]
    fn divrem_reconstructs() {
        let a = q(&[1, 0, 3, 5, -2]);
        let b = q(&[2, 1, 1]);
        let (qq, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&qq, &b), &r), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x+3)
        let a = q(&[-2, 1, 1]);
        let b = q(&[-3, 2, 1]);
        assert_eq!(gcd(&a, &b), q(&[-1, 1]));
    }

    #[test]
    fn inverse_mod_phi3() {
        let m = q(&[1, 1, 1]);
        let a = q(&[0, 1]);
        let s = inverse_mod(&a, &m).unwrap();
        assert_eq!(rem_monic(&mul(&a, &s), &m), q(&[1]));
    }
}
