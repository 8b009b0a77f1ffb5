//! Coefficient fields.
//!
//! Everything in the crate is exact: either a prime field `F_p` or the
//! rationals. A field is a small context value; elements are plain data and
//! all arithmetic goes through the context, in the style of
//! `ring.add(&a, &b)`.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Option<Self::Elem>;
    fn config(&self) -> FieldConfig;
    /// Distinct roots of `poly` (coefficients low to high) lying in the field.
    fn roots(&self, poly: &[Self::Elem]) -> Vec<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `a += c * b`
    fn axpy(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        if !self.is_zero(c) && !self.is_zero(b) {
            *a = self.add(a, &self.mul(c, b));
        }
    }
}

/// Serializable description of a field, as carried in reports and on the
/// command line (`F:<p>` or `Q`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldConfig {
    Prime { p: u64 },
    Rational,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::Prime { p: 101 }
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::Prime { p } => write!(f, "F_{p}"),
            FieldConfig::Rational => write!(f, "Q"),
        }
    }
}

impl std::str::FromStr for FieldConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "q" {
            return Ok(FieldConfig::Rational);
        }
        let digits = s
            .strip_prefix("F:")
            .or_else(|| s.strip_prefix("F "))
            .or_else(|| s.strip_prefix('F'))
            .unwrap_or(s)
            .trim();
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Field(format!("cannot parse field `{s}`")))?;
        PrimeField::new(p)?;
        Ok(FieldConfig::Prime { p })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`, `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 32) || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a prime below 2^32")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u64> {
        let d = self.reduce_big(den);
        let n = self.reduce_big(num);
        self.inv(&d).map(|di| self.mul(&n, &di))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<u64> {
        let r = parse_rational(s)?;
        self.from_ratio(r.numer(), r.denom())
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Prime { p: self.p }
    }

    fn roots(&self, poly: &[u64]) -> Vec<u64> {
        let poly = trim(self, poly.to_vec());
        if poly.len() <= 1 {
            return Vec::new();
        }
        if self.p <= 1 << 16 {
            return (0..self.p)
                .filter(|x| self.is_zero(&poly_eval(self, &poly, x)))
                .collect();
        }
        // Split off the product of linear factors, then peel roots with
        // random equal-degree splitting.
        let x = vec![0, 1];
        let xp = poly_powmod(self, &x, self.p, &poly);
        let g = poly_gcd(self, &poly, &poly_sub(self, &xp, &x));
        let mut out = Vec::new();
        let mut rng = rand::thread_rng();
        split_linear(self, g, &mut out, &mut rng);
        out.sort_unstable();
        out
    }
}

fn split_linear<R: Rng>(f: &PrimeField, g: Vec<u64>, out: &mut Vec<u64>, rng: &mut R) {
    let g = monic(f, g);
    match g.len() {
        0 | 1 => {}
        2 => out.push(f.neg(&g[0])),
        _ => loop {
            let a = f.random(rng);
            let shifted = vec![a, 1];
            let h = poly_powmod(f, &shifted, (f.p - 1) / 2, &g);
            let d = poly_gcd(f, &g, &poly_sub(f, &h, &[1]));
            if d.len() > 1 && d.len() < g.len() {
                let (q, _) = poly_divrem(f, &g, &d);
                split_linear(f, d, out, rng);
                split_linear(f, q, out, rng);
                break;
            }
        },
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

const RATIONAL_SAMPLE_BOUND: i64 = 50;
const RATIONAL_ROOT_SEARCH_BOUND: u64 = 1_000_000;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Option<BigRational> {
        parse_rational(s)
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Rational
    }

    fn roots(&self, poly: &[BigRational]) -> Vec<BigRational> {
        let mut poly = trim(self, poly.to_vec());
        let mut out = Vec::new();
        if poly.len() <= 1 {
            return out;
        }
        if poly[0].is_zero() {
            out.push(BigRational::zero());
            while poly.len() > 1 && poly[0].is_zero() {
                poly.remove(0);
            }
        }
        if poly.len() <= 1 {
            return out;
        }
        // Clear denominators.
        let lcm = poly
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = poly
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().unwrap().abs();
        let konst = ints[0].abs();
        let (Some(lead), Some(konst)) = (lead.to_u64(), konst.to_u64()) else {
            return out;
        };
        if lead > RATIONAL_ROOT_SEARCH_BOUND || konst > RATIONAL_ROOT_SEARCH_BOUND {
            return out;
        }
        for q in divisors(lead) {
            for p in divisors(konst) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(p) * sign, BigInt::from(q));
                    if poly_eval(self, &poly, &cand).is_zero() && !out.contains(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Parses `3`, `-2`, `5/7`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

// Dense univariate polynomials, coefficients low to high.

pub fn trim<F: Field>(f: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

pub fn poly_eval<F: Field>(f: &F, p: &[F::Elem], x: &F::Elem) -> F::Elem {
    p.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

pub fn poly_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
            let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
            f.sub(&x, &y)
        })
        .collect();
    trim(f, out)
}

pub fn poly_mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            f.axpy(&mut out[i + j], x, y);
        }
    }
    trim(f, out)
}

pub fn monic<F: Field>(f: &F, p: Vec<F::Elem>) -> Vec<F::Elem> {
    let p = trim(f, p);
    match p.last() {
        None => p,
        Some(lead) => {
            let li = f.inv(lead).expect("nonzero leading coefficient");
            p.iter().map(|c| f.mul(c, &li)).collect()
        }
    }
}

/// Division with remainder; `b` must be nonzero.
pub fn poly_divrem<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let b = trim(f, b.to_vec());
    let mut r = trim(f, a.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let li = f.inv(b.last().unwrap()).unwrap();
    let mut q = vec![f.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &li);
        for (i, bc) in b.iter().enumerate() {
            let t = f.mul(&c, bc);
            r[shift + i] = f.sub(&r[shift + i], &t);
        }
        q[shift] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn poly_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = trim(f, a.to_vec());
    let mut b = trim(f, b.to_vec());
    while !b.is_empty() {
        let (_, r) = poly_divrem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, a)
}

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn poly_xgcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let mut r0 = trim(f, a.to_vec());
    let mut r1 = trim(f, b.to_vec());
    let mut s0 = vec![f.one()];
    let mut s1: Vec<F::Elem> = Vec::new();
    let mut t0: Vec<F::Elem> = Vec::new();
    let mut t1 = vec![f.one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(f, &r0, &r1);
        let s2 = poly_sub(f, &s0, &poly_mul(f, &q, &s1));
        let t2 = poly_sub(f, &t0, &poly_mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead = r0.last().cloned().unwrap_or_else(|| f.one());
    let li = f.inv(&lead).unwrap();
    let scale = |p: Vec<F::Elem>| trim(f, p.iter().map(|c| f.mul(c, &li)).collect());
    (scale(r0), scale(s0), scale(t0))
}

fn poly_powmod<F: Field>(f: &F, base: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![f.one()];
    let mut b = poly_divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_divrem(f, &poly_mul(f, &acc, &b), m).1;
        }
        b = poly_divrem(f, &poly_mul(f, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.add(&100, &5), 4);
        assert_eq!(f.sub(&3, &5), 99);
        assert_eq!(f.mul(&f.inv(&7).unwrap(), &7), 1);
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.parse("1/2"), Some(51));
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn field_config_parsing() {
        assert_eq!("F:7".parse::<FieldConfig>().unwrap(), FieldConfig::Prime { p: 7 });
        assert_eq!("Q".parse::<FieldConfig>().unwrap(), FieldConfig::Rational);
        assert!("F:9".parse::<FieldConfig>().is_err());
    }

    #[test]
    fn roots_prime_small_and_large() {
        let f = PrimeField::new(101).unwrap();
        // (x - 2)(x - 5) = x^2 - 7x + 10
        let p = vec![10, f.from_i64(-7), 1];
        assert_eq!(f.roots(&p), vec![2, 5]);
        let g = PrimeField::new(1_000_003).unwrap();
        let p = vec![10, g.from_i64(-7), 1];
        assert_eq!(g.roots(&p), vec![2, 5]);
        // x^2 + 1 has no roots mod 1000003 (which is 3 mod 4).
        assert!(g.roots(&[1, 0, 1]).is_empty());
    }

    #[test]
    fn roots_rational() {
        let q = RationalField;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let p: Vec<_> = [-3, 5, 2].iter().map(|&c| q.from_i64(c)).collect();
        let r = q.roots(&p);
        assert_eq!(r, vec![q.from_i64(-3), parse_rational("1/2").unwrap()]);
    }

    #[test]
    fn xgcd_identity() {
        let f = PrimeField::new(101).unwrap();
        let a = vec![f.from_i64(-1), 0, 1]; // x^2 - 1
        let b = vec![f.from_i64(-1), 1]; // x - 1
        let c = vec![1, 1]; // x + 1
        let (g, s, t) = poly_xgcd(&f, &b, &c);
        assert_eq!(g, vec![1]);
        let lhs = poly_sub(&f, &poly_mul(&f, &s, &b), &poly_mul(&f, &poly_sub(&f, &[], &t), &c));
        assert_eq!(lhs, vec![1]);
        assert_eq!(poly_divrem(&f, &a, &b).1, Vec::<u64>::new());
    }
}
