use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ground field: the rationals or a prime field of word size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(Rat::Small(n, 1)),
            Field::Prime(p) => Scalar::Fp {
                v: (n as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    /// Parses `"3"`, `"-2/5"` or `"1.25"` into the field.
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let bad = || Error::Input(format!("bad coefficient {s:?}"));
        let q: BigRational = if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        } else if let Some((ip, fp)) = t.split_once('.') {
            let neg = ip.starts_with('-');
            let ip_digits = ip.trim_start_matches(['-', '+']);
            if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let whole: BigInt = if ip_digits.is_empty() {
                BigInt::zero()
            } else {
                ip_digits.parse().map_err(|_| bad())?
            };
            let frac: BigInt = fp.parse().map_err(|_| bad())?;
            let scale = num_traits::pow(BigInt::from(10), fp.len());
            let mut v = BigRational::new(whole * &scale + frac, scale);
            if neg {
                v = -v;
            }
            v
        } else {
            BigRational::from_integer(t.parse().map_err(|_| bad())?)
        };
        self.from_big_rational(&q)
            .ok_or_else(|| Error::Input(format!("coefficient {s:?} has no image in {self}")))
    }

    pub fn from_big_rational(self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rationals => Some(Scalar::Q(Rat::from_big(q.clone()))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = q.numer().mod_floor(&pb).to_u64()?;
                let d = q.denom().mod_floor(&pb).to_u64()?;
                if d == 0 {
                    return None;
                }
                let n = Scalar::Fp { v: n, p };
                let d = Scalar::Fp { v: d, p };
                Some(&n / &d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rational number with an `i64` fast path. Values that fit are always
/// stored as `Small` with a positive, coprime denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    fn from_i128(n: i128, d: i128) -> Rat {
        debug_assert!(d != 0);
        let g = gcd_i128(n, d);
        let (mut n, mut d) = if g > 1 { (n / g, d / g) } else { (n, d) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat::Small(n, d),
            _ => Rat::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub fn from_big(q: BigRational) -> Rat {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(n, d),
            _ => Rat::Big(Box::new(q)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small(_, d) => *d == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rat::Small(s, 1);
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * d + c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        return Rat::Small(s, 1);
                    }
                }
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::from_i128(-(*a as i128), *b as i128),
            Rat::Big(q) => Rat::from_big(-(**q).clone()),
        }
    }

    fn inv(&self) -> Option<Rat> {
        match self {
            Rat::Small(0, _) => None,
            Rat::Small(a, b) => Some(Rat::from_i128(*b as i128, *a as i128)),
            Rat::Big(q) => Some(Rat::from_big(q.recip())),
        }
    }

    fn cmp_value(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small(n, 1) => write!(f, "{n}"),
            Rat::Small(n, d) => write!(f, "{n}/{d}"),
            Rat::Big(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

/// Field element. Arithmetic between elements of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rat::Small(1, 1)),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::Fp { v, p } => {
                if *v == 0 {
                    None
                } else {
                    Some(Scalar::Fp { v: pow_mod(*v, p - 2, *p), p: *p })
                }
            }
        }
    }

    /// `self -= f * b`, the elimination kernel.
    #[inline]
    pub fn sub_mul_assign(&mut self, f: &Scalar, b: &Scalar) {
        if f.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, f, b) {
            (Scalar::Fp { v, p }, Scalar::Fp { v: fv, .. }, Scalar::Fp { v: bv, .. }) => {
                let prod = mul_mod(*fv, *bv, *p);
                *v = if *v >= prod { *v - prod } else { *v + *p - prod };
            }
            _ => {
                let t = f * b;
                *self = &*self - &t;
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut r = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        r
    }

    /// Total order used only for deterministic tie-breaking.
    pub fn canonical_cmp(&self, o: &Scalar) -> Ordering {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => a.cmp_value(b),
            (Scalar::Fp { v: a, .. }, Scalar::Fp { v: b, .. }) => a.cmp(b),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Q(r) => Some(r.to_big()),
            Scalar::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "scalars from different fields");
                let s = a + b;
                Scalar::Fp { v: if s >= *p { s - p } else { s }, p: *p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "scalars from different fields");
                Scalar::Fp { v: mul_mod(*a, *b, *p), p: *p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    #[inline]
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { v, p } => Scalar::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Integer candidates `p/q` for rational roots need the absolute value of a
/// big integer's divisors; only small values are enumerated.
pub(crate) fn small_divisors(n: &BigInt, limit: u64) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > limit {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_normalizes() {
        let f = Field::Rationals;
        let a = f.parse("2/4").unwrap();
        assert_eq!(a, Scalar::Q(Rat::Small(1, 2)));
        let b = f.parse("-0.25").unwrap();
        assert_eq!(&a + &b, f.parse("1/4").unwrap());
        assert_eq!(&a * &b, f.parse("-1/8").unwrap());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn overflow_promotes_to_big() {
        let f = Field::Rationals;
        let big = f.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rat::Big(_))));
        let back = &sq / &big;
        assert_eq!(back, big);
        let m = f.from_i64(i64::MIN);
        assert!(matches!(-&m, Scalar::Q(Rat::Big(_))));
    }

    #[test]
    fn prime_field() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert!(Field::prime(9).is_err());
        assert!(f.parse("1/7").is_err());
    }

    #[test]
    fn miller_rabin() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }
}
