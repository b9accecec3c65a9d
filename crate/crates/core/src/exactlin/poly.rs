use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{small_divisors, Field, Scalar};

const DIVISOR_LIMIT: u64 = 1_000_000;
const BRUTE_FORCE_LIMIT: u64 = 65_536;

/// Evaluates a polynomial given by coefficients from the constant term up.
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = x.field().zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Distinct roots of a polynomial that lie in the ground field. Over the
/// rationals only roots `p/q` with small `p`, `q` are found.
pub fn roots_in_field(field: Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Scalar::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if c[0].is_zero() {
        roots.push(field.zero());
        let k = c.iter().position(|x| !x.is_zero()).unwrap();
        c.drain(..k);
    }
    if c.len() <= 1 {
        return roots;
    }
    match field {
        Field::Prime(p) => {
            let range = if p <= BRUTE_FORCE_LIMIT { p } else { 1000 };
            for v in 1..range {
                let x = field.from_i64(v as i64);
                if eval_poly(&c, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
        Field::Rationals => {
            let qs: Vec<BigRational> = c.iter().map(|x| x.as_rational().unwrap()).collect();
            let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect();
            let (Some(ps), Some(qd)) = (
                small_divisors(&ints[0], DIVISOR_LIMIT),
                small_divisors(ints.last().unwrap(), DIVISOR_LIMIT),
            ) else {
                return roots;
            };
            let mut found: Vec<BigRational> = Vec::new();
            for &pn in &ps {
                for &qn in &qd {
                    for sign in [1i64, -1] {
                        let r = BigRational::new(BigInt::from(pn) * sign, BigInt::from(qn));
                        if found.contains(&r) || r.is_zero() {
                            continue;
                        }
                        let x = field.from_big_rational(&r).unwrap();
                        if eval_poly(&c, &x).is_zero() {
                            found.push(r);
                            roots.push(x);
                        }
                    }
                }
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots() {
        let f = Field::Rationals;
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let c: Vec<Scalar> = vec![f.zero(), f.parse("-3/2").unwrap(), f.parse("5/2").unwrap(), f.one()];
        let mut r: Vec<String> = roots_in_field(f, &c).iter().map(|x| x.to_string()).collect();
        r.sort();
        assert_eq!(r, vec!["-3", "0", "1/2"]);
        // x^2 + 1 has none
        assert!(roots_in_field(f, &[f.one(), f.zero(), f.one()]).is_empty());
    }

    #[test]
    fn prime_field_roots() {
        let f = Field::prime(5).unwrap();
        // x^2 + 1 = (x - 2)(x - 3) over GF(5)
        let r = roots_in_field(f, &[f.one(), f.zero(), f.one()]);
        assert_eq!(r.len(), 2);
    }
}
