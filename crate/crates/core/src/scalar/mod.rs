//! Exact scalars: rationals, cyclotomic fields Q(ζ_n) and univariate rational
//! functions over either. Every value is kept in a canonical form, so `==` is
//! value equality.

pub mod parse;
pub mod poly;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use parse::{parse_scalar, ParseError};
use poly::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic(u32),
    RationalFunctions { base: Box<FieldSpec>, var: String },
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FieldError {
    #[error("field has no cyclotomic layer")]
    NoRootOfUnity,
    #[error("invalid field description `{0}`")]
    BadSpec(String),
}

impl FieldSpec {
    pub fn cyclotomic(n: u32) -> FieldSpec {
        FieldSpec::Cyclotomic(n)
    }

    pub fn functions(base: FieldSpec, var: &str) -> FieldSpec {
        FieldSpec::RationalFunctions { base: Box::new(base), var: var.to_string() }
    }

    pub fn validate(&self) -> Result<(), FieldError> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Cyclotomic(n) if *n >= 1 => Ok(()),
            FieldSpec::Cyclotomic(_) => Err(FieldError::BadSpec(self.to_string())),
            FieldSpec::RationalFunctions { base, var } => {
                let ok_var = !var.is_empty()
                    && var != "z"
                    && var.chars().all(|c| c.is_ascii_alphabetic() || c == '_');
                match **base {
                    FieldSpec::RationalFunctions { .. } => Err(FieldError::BadSpec(self.to_string())),
                    _ if !ok_var => Err(FieldError::BadSpec(self.to_string())),
                    _ => base.validate(),
                }
            }
        }
    }

    /// Order of the root of unity adjoined, if any.
    pub fn root_order(&self) -> Option<u32> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Cyclotomic(n) => Some(*n),
            FieldSpec::RationalFunctions { base, .. } => base.root_order(),
        }
    }

    pub fn variable(&self) -> Option<&str> {
        match self {
            FieldSpec::RationalFunctions { var, .. } => Some(var),
            _ => None,
        }
    }

    /// Whether `s` is a canonical element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (&s.0, self) {
            (Repr::Rat(_), _) => true,
            (Repr::Cyc(c), f) => f.root_order() == Some(c.n),
            (Repr::Fun(r), FieldSpec::RationalFunctions { base, .. }) => {
                r.num.iter().chain(r.den.iter()).all(|c| base.contains(c))
            }
            (Repr::Fun(_), _) => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldSpec::RationalFunctions { base, var } => write!(f, "{base}({var})"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = FieldError;

    /// Accepts `Q`, `Q(zeta_n)`, `cyclotomic(n)`, and either followed by `(var)`.
    fn from_str(s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadSpec(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (base, rest) = if let Some(r) = t.strip_prefix("cyclotomic(") {
            let close = r.find(')').ok_or_else(bad)?;
            let n: u32 = r[..close].parse().map_err(|_| bad())?;
            (FieldSpec::Cyclotomic(n), &r[close + 1..])
        } else if let Some(r) = t.strip_prefix("Q(zeta_").or_else(|| t.strip_prefix("Q(zeta")) {
            let close = r.find(')').ok_or_else(bad)?;
            let n: u32 = r[..close].parse().map_err(|_| bad())?;
            (FieldSpec::Cyclotomic(n), &r[close + 1..])
        } else if let Some(r) = t.strip_prefix('Q') {
            (FieldSpec::Rationals, r)
        } else if t == "rationals" {
            (FieldSpec::Rationals, "")
        } else {
            return Err(bad());
        };
        let out = if rest.is_empty() {
            base
        } else {
            let var = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
            FieldSpec::functions(base, var)
        };
        out.validate().map_err(|_| bad())?;
        Ok(out)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Cyc {
    n: u32,
    /// Coefficients of 1, z, z², … below φ(n); at least one non-constant term.
    c: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct RatFun {
    /// Polynomials over the base field (entries are `Rat` or `Cyc` scalars).
    num: Vec<Scalar>,
    /// Monic, coprime to `num`, and not both constant.
    den: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rat(BigRational),
    Cyc(Arc<Cyc>),
    Fun(Arc<RatFun>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(Repr);

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigRational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigRational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// The n-th cyclotomic polynomial Φ_n, ascending coefficients.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigRational>> {
    assert!(n >= 1);
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = vec![rat(0); n as usize + 1];
    p[0] = rat(-1);
    p[n as usize] = rat(1);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly::divrem(&p, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    let p = Arc::new(p);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

impl Coeff for Scalar {
    fn c_zero() -> Self {
        Scalar::zero()
    }
    fn c_one() -> Self {
        Scalar::one()
    }
    fn c_is_zero(&self) -> bool {
        Scalar::is_zero(self)
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
        Scalar::inv(self).expect("inverse of zero")
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar(Repr::Rat(BigRational::zero()))
    }

    pub fn one() -> Scalar {
        Scalar(Repr::Rat(BigRational::one()))
    }

    pub fn from_int(i: i64) -> Scalar {
        Scalar(Repr::Rat(rat(i)))
    }

    pub fn from_bigint(i: BigInt) -> Scalar {
        Scalar(Repr::Rat(BigRational::from_integer(i)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Scalar {
        Scalar(Repr::Rat(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar(Repr::Rat(r))
    }

    /// The primitive root z = e^{2πi/n} in Q(ζ_n).
    pub fn zeta(n: u32) -> Scalar {
        Scalar::cyclotomic(n, vec![rat(0), rat(1)])
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_pow(n: u32, k: i64) -> Scalar {
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![rat(0); e + 1];
        c[e] = rat(1);
        Scalar::cyclotomic(n, c)
    }

    /// Element Σ c_i z^i of Q(ζ_n), reduced modulo Φ_n.
    pub fn cyclotomic(n: u32, coeffs: Vec<BigRational>) -> Scalar {
        let phi = cyclotomic_poly(n);
        let c = poly::rem_monic(&poly::trim(coeffs), &phi);
        Self::cyc_canonical(n, c)
    }

    fn cyc_canonical(n: u32, c: Vec<BigRational>) -> Scalar {
        match c.len() {
            0 => Scalar::zero(),
            1 => Scalar(Repr::Rat(c.into_iter().next().unwrap())),
            _ => Scalar(Repr::Cyc(Arc::new(Cyc { n, c }))),
        }
    }

    /// Rational function num/den with coefficients in the base field.
    pub fn rational_function(num: Vec<Scalar>, den: Vec<Scalar>) -> Option<Scalar> {
        let num = poly::trim(num);
        let den = poly::trim(den);
        if den.is_empty() {
            return None;
        }
        if num.is_empty() {
            return Some(Scalar::zero());
        }
        let g = poly::gcd(&num, &den);
        let (mut n, _) = poly::divrem(&num, &g);
        let (mut d, _) = poly::divrem(&den, &g);
        let lead = d.last().unwrap().c_inv();
        n = poly::scale(&n, &lead);
        d = poly::scale(&d, &lead);
        if n.len() <= 1 && d.len() == 1 {
            return Some(n.into_iter().next().unwrap_or_else(Scalar::zero));
        }
        Some(Scalar(Repr::Fun(Arc::new(RatFun { num: n, den: d }))))
    }

    /// The function-field variable itself.
    pub fn variable() -> Scalar {
        Scalar(Repr::Fun(Arc::new(RatFun {
            num: vec![Scalar::zero(), Scalar::one()],
            den: vec![Scalar::one()],
        })))
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Repr::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64())
    }

    fn as_cyc_vec(&self, n: u32) -> Vec<BigRational> {
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_zero() {
                    vec![]
                } else {
                    vec![r.clone()]
                }
            }
            Repr::Cyc(c) => {
                assert_eq!(c.n, n, "mixing cyclotomic fields of orders {} and {}", c.n, n);
                c.c.clone()
            }
            Repr::Fun(_) => unreachable!(),
        }
    }

    fn as_fun(&self) -> (Vec<Scalar>, Vec<Scalar>) {
        match &self.0 {
            Repr::Fun(f) => (f.num.clone(), f.den.clone()),
            _ if self.is_zero() => (vec![], vec![Scalar::one()]),
            _ => (vec![self.clone()], vec![Scalar::one()]),
        }
    }

    pub fn cyc_order(&self) -> Option<u32> {
        match &self.0 {
            Repr::Cyc(c) => Some(c.n),
            _ => None,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match &self.0 {
            Repr::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar(Repr::Rat(r.recip())))
                }
            }
            Repr::Cyc(c) => {
                let phi = cyclotomic_poly(c.n);
                let s = poly::inverse_mod(&c.c, &phi).expect("nonzero cyclotomic element is invertible");
                Some(Self::cyc_canonical(c.n, s))
            }
            Repr::Fun(f) => Scalar::rational_function(f.den.clone(), f.num.clone()),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Option<Scalar> {
        o.inv().map(|i| self * &i)
    }

    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Complex conjugation on Q(ζ_n) (z ↦ z⁻¹); identity on rationals.
    pub fn conj(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(_) => self.clone(),
            Repr::Cyc(c) => {
                let mut out = vec![rat(0); c.n as usize];
                for (i, a) in c.c.iter().enumerate() {
                    let j = (c.n as usize - i) % c.n as usize;
                    out[j] = &out[j] + a;
                }
                Scalar::cyclotomic(c.n, out)
            }
            Repr::Fun(_) => panic!("conjugation is not defined on rational functions"),
        }
    }

    fn add_impl(&self, o: &Scalar) -> Scalar {
        match (&self.0, &o.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Fun(_), _) | (_, Repr::Fun(_)) => {
                let (an, ad) = self.as_fun();
                let (bn, bd) = o.as_fun();
                if ad == bd {
                    return Scalar::rational_function(poly::add(&an, &bn), ad).unwrap();
                }
                let num = poly::add(&poly::mul(&an, &bd), &poly::mul(&bn, &ad));
                Scalar::rational_function(num, poly::mul(&ad, &bd)).unwrap()
            }
            _ => {
                let n = self.cyc_order().or(o.cyc_order()).unwrap();
                let s = poly::add(&self.as_cyc_vec(n), &o.as_cyc_vec(n));
                Self::cyc_canonical(n, s)
            }
        }
    }

    fn mul_impl(&self, o: &Scalar) -> Scalar {
        match (&self.0, &o.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Rat(a), Repr::Cyc(c)) | (Repr::Cyc(c), Repr::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar(Repr::Cyc(Arc::new(Cyc { n: c.n, c: c.c.iter().map(|x| x * a).collect() })))
            }
            (Repr::Cyc(x), Repr::Cyc(y)) => {
                assert_eq!(x.n, y.n, "mixing cyclotomic fields of orders {} and {}", x.n, y.n);
                let p = poly::mul(&x.c, &y.c);
                let r = poly::rem_monic(&p, &cyclotomic_poly(x.n));
                Self::cyc_canonical(x.n, r)
            }
            _ => {
                if self.is_zero() || o.is_zero() {
                    return Scalar::zero();
                }
                let (an, ad) = self.as_fun();
                let (bn, bd) = o.as_fun();
                Scalar::rational_function(poly::mul(&an, &bn), poly::mul(&ad, &bd)).unwrap()
            }
        }
    }

    fn neg_impl(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Cyc(c) => Scalar(Repr::Cyc(Arc::new(Cyc { n: c.n, c: c.c.iter().map(|x| -x).collect() }))),
            Repr::Fun(f) => Scalar(Repr::Fun(Arc::new(RatFun {
                num: f.num.iter().map(|x| x.neg_impl()).collect(),
                den: f.den.clone(),
            }))),
        }
    }

    /// Canonical text form, parseable back by `parse_scalar` (variable name
    /// defaults to `q` when the field is not known).
    pub fn to_canonical_string(&self, var: &str) -> String {
        match &self.0 {
            Repr::Rat(r) => fmt_rat(r),
            Repr::Cyc(c) => {
                let terms: Vec<(Term, usize)> = c.c.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (Term::Rat(a.clone()), i)).collect();
                fmt_poly(&terms, "z")
            }
            Repr::Fun(f) => {
                let side = |p: &[Scalar]| {
                    let terms: Vec<(Term, usize)> = p
                        .iter()
                        .enumerate()
                        .filter(|(_, a)| !a.is_zero())
                        .map(|(i, a)| match &a.0 {
                            Repr::Rat(r) => (Term::Rat(r.clone()), i),
                            _ => (Term::Group(a.to_canonical_string(var)), i),
                        })
                        .collect();
                    fmt_poly(&terms, var)
                };
                if f.den.len() == 1 {
                    side(&f.num)
                } else {
                    format!("({})/({})", side(&f.num), side(&f.den))
                }
            }
        }
    }
}

enum Term {
    Rat(BigRational),
    Group(String),
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_poly(terms: &[(Term, usize)], var: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (t, e)) in terms.iter().enumerate() {
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let (neg, body) = match t {
            Term::Rat(r) => {
                let a = r.abs();
                let body = if mono.is_empty() {
                    fmt_rat(&a)
                } else if a.is_one() {
                    mono.clone()
                } else {
                    format!("{}*{}", fmt_rat(&a), mono)
                };
                (r.is_negative(), body)
            }
            Term::Group(s) => {
                let body = if mono.is_empty() { format!("({s})") } else { format!("({s})*{mono}") };
                (false, body)
            }
        };
        match (k, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string("q"))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(i: i64) -> Self {
        Scalar::from_int(i)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        self.add_impl(o)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self.add_impl(&o.neg_impl())
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        self.mul_impl(o)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        self.add_impl(&o)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        self.mul_impl(&o)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_impl()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&mut self.0, &o.0) {
            *a += b;
            return;
        }
        *self = self.add_impl(o);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&mut self.0, &o.0) {
            *a -= b;
            return;
        }
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = self.mul_impl(o);
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(it: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in it {
            acc += &x;
        }
        acc
    }
}

/// The primitive root of unity of the field's cyclotomic layer.
pub fn primitive_root(field: &FieldSpec) -> Result<Scalar, FieldError> {
    field.root_order().map(Scalar::zeta).ok_or(FieldError::NoRootOfUnity)
}

/// Gaussian integer [k]_q = 1 + q + … + q^{k-1}.
pub fn q_int(q: &Scalar, k: u32) -> Scalar {
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for _ in 0..k {
        acc += &p;
        p = &p * q;
    }
    acc
}

pub fn q_factorial(q: &Scalar, k: u32) -> Scalar {
    (1..=k).fold(Scalar::one(), |acc, i| &acc * &q_int(q, i))
}

/// Gaussian binomial coefficient, computed by the q-Pascal rule so that it
/// stays defined at roots of unity.
pub fn q_binomial(q: &Scalar, n: u32, k: u32) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    let mut row = vec![Scalar::one()];
    for m in 1..=n {
        let mut next = vec![Scalar::zero(); m as usize + 1];
        next[0] = Scalar::one();
        next[m as usize] = Scalar::one();
        for j in 1..m as usize {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            next[j] = &row[j - 1] + &(&q.pow(j as i64).unwrap() * &row[j]);
        }
        row = next;
    }
    row[k as usize].clone()
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let p = |n| cyclotomic_poly(n).iter().map(|c| c.to_integer().to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(p(1), vec![-1, 1]);
        assert_eq!(p(2), vec![1, 1]);
        assert_eq!(p(3), vec![1, 1, 1]);
        assert_eq!(p(4), vec![1, 0, 1]);
        assert_eq!(p(6), vec![1, -1, 1]);
        assert_eq!(p(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=12u32 {
            let z = Scalar::zeta(n);
            assert!(z.pow(n as i64).unwrap().is_one(), "n = {n}");
            for k in 1..n {
                if n % k == 0 {
                    assert!(!z.pow(k as i64).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn collapse_to_rational() {
        assert_eq!(Scalar::zeta(2), Scalar::from_int(-1));
        assert_eq!(Scalar::zeta(4).pow(2).unwrap(), Scalar::from_int(-1));
        let z = Scalar::zeta(3);
        // z + z² = -1
        assert_eq!(&z + &z.pow(2).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn q_binomial_vanishes_at_root() {
        let q = Scalar::zeta(3);
        assert!(q_binomial(&q, 3, 1).is_zero());
        assert!(q_binomial(&q, 3, 2).is_zero());
        assert_eq!(q_binomial(&q, 2, 1), &Scalar::one() + &q);
    }

    #[test]
    fn conj_inverts_roots() {
        let z = Scalar::zeta(5);
        assert_eq!(z.conj(), z.inv().unwrap());
    }

    #[test]
    fn field_spec_strings() {
        for s in ["Q", "Q(zeta_3)", "Q(q)", "Q(zeta_12)(t)"] {
            let f: FieldSpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!("cyclotomic(4)".parse::<FieldSpec>().unwrap(), FieldSpec::Cyclotomic(4));
        assert!("Q(z)".parse::<FieldSpec>().is_err());
    }
}
