//! Exact arithmetic in `Z[√2]` and `Z[1/√2]`.
//!
//! [`RingInt`] is an element `a + b√2` with arbitrary-precision coefficients.
//! [`Dyadic`] is an element `v / √2^k` of `Z[1/√2]`, always stored with the
//! least denominator exponent, so structural equality is value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

/// An element `a + b√2` of `Z[√2]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingInt {
    pub a: BigInt,
    pub b: BigInt,
}

/// Residue class of a [`RingInt`] modulo 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Residue {
    Zero,
    One,
    Rt2,
    OnePlusRt2,
}

impl Residue {
    /// `1` and `1+√2` are the classes the synthesis pivot looks for.
    pub fn is_odd(self) -> bool {
        matches!(self, Residue::One | Residue::OnePlusRt2)
    }
}

impl RingInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RingInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        RingInt::default()
    }

    pub fn one() -> Self {
        RingInt::new(1, 0)
    }

    pub fn rt2() -> Self {
        RingInt::new(0, 1)
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        RingInt::new(a, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// `√2` divides `a + b√2` exactly when `a` is even.
    pub fn divisible_by_rt2(&self) -> bool {
        self.a.is_even()
    }

    /// `(a + b√2)/√2 = b + (a/2)√2`, or `None` when `a` is odd.
    pub fn div_rt2(&self) -> Option<RingInt> {
        if !self.divisible_by_rt2() {
            return None;
        }
        Some(RingInt {
            a: self.b.clone(),
            b: &self.a >> 1u32,
        })
    }

    /// `(a + b√2)·√2 = 2b + a√2`.
    pub fn mul_rt2(&self) -> RingInt {
        RingInt {
            a: &self.b << 1u32,
            b: self.a.clone(),
        }
    }

    /// Multiply by `√2^m`.
    pub fn mul_rt2_pow(&self, m: u32) -> RingInt {
        let mut out = RingInt {
            a: &self.a << (m / 2),
            b: &self.b << (m / 2),
        };
        if m % 2 == 1 {
            out = out.mul_rt2();
        }
        out
    }

    pub fn residue(&self) -> Residue {
        match (self.a.is_odd(), self.b.is_odd()) {
            (false, false) => Residue::Zero,
            (true, false) => Residue::One,
            (false, true) => Residue::Rt2,
            (true, true) => Residue::OnePlusRt2,
        }
    }

    /// Galois conjugate `a - b√2`.
    pub fn conj(&self) -> RingInt {
        RingInt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² - 2b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - ((&self.b * &self.b) << 1u32)
    }

    /// Decimal approximation, for debug output only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 2f64.sqrt()
    }
}

impl<'a> Add<&'a RingInt> for &'a RingInt {
    type Output = RingInt;
    fn add(self, rhs: &RingInt) -> RingInt {
        RingInt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for RingInt {
    type Output = RingInt;
    fn add(self, rhs: RingInt) -> RingInt {
        RingInt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<'a> Sub<&'a RingInt> for &'a RingInt {
    type Output = RingInt;
    fn sub(self, rhs: &RingInt) -> RingInt {
        RingInt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for RingInt {
    type Output = RingInt;
    fn sub(self, rhs: RingInt) -> RingInt {
        RingInt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<'a> Mul<&'a RingInt> for &'a RingInt {
    type Output = RingInt;
    fn mul(self, rhs: &RingInt) -> RingInt {
        let bb = &self.b * &rhs.b;
        RingInt {
            a: &self.a * &rhs.a + (bb << 1u32),
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl Mul for RingInt {
    type Output = RingInt;
    fn mul(self, rhs: RingInt) -> RingInt {
        &self * &rhs
    }
}

impl Neg for RingInt {
    type Output = RingInt;
    fn neg(self) -> RingInt {
        RingInt {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &RingInt {
    type Output = RingInt;
    fn neg(self) -> RingInt {
        RingInt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl From<i64> for RingInt {
    fn from(a: i64) -> Self {
        RingInt::from_int(a)
    }
}

/// Renders as `a`, `b*rt2`, `a+b*rt2` or `a-b*rt2`; zero renders as `0`.
impl fmt::Display for RingInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*rt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*rt2", self.a, -&self.b)
                } else {
                    write!(f, "{}+{}*rt2", self.a, self.b)
                }
            }
        }
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    if digits.is_empty() || digits == "-" {
        return None;
    }
    BigInt::from_str(digits).ok()
}

/// Parses one signed summand: an integer, or a `√2` multiple written as
/// `b*rt2`, `rt2`, `-rt2`, `b√2`, `b*√2`.
fn parse_term(term: &str) -> Option<(BigInt, bool)> {
    let term = term.trim();
    for tag in ["*rt2", "rt2", "*√2", "√2"] {
        if let Some(coef) = term.strip_suffix(tag) {
            let c = match coef {
                "" | "+" => BigInt::one(),
                "-" => -BigInt::one(),
                _ => parse_int(coef)?,
            };
            return Some((c, true));
        }
    }
    parse_int(term).map(|c| (c, false))
}

impl FromStr for RingInt {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseError::new(format!("invalid Z[rt2] element `{s}`"));
        if s.is_empty() {
            return Err(bad());
        }
        // Split at sign characters that are not at the very start.
        let mut parts = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if i > start && (ch == '+' || ch == '-') {
                parts.push(&s[start..i]);
                start = i;
            }
        }
        parts.push(&s[start..]);
        let mut out = RingInt::zero();
        let (mut seen_a, mut seen_b) = (false, false);
        for p in parts {
            let (c, is_rt2) = parse_term(p).ok_or_else(bad)?;
            if is_rt2 {
                if seen_b {
                    return Err(bad());
                }
                seen_b = true;
                out.b = c;
            } else {
                if seen_a || seen_b {
                    return Err(bad());
                }
                seen_a = true;
                out.a = c;
            }
        }
        Ok(out)
    }
}

/// An element `num / √2^k` of `Z[1/√2]` in least-denominator form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: RingInt,
    k: u32,
}

impl Dyadic {
    /// Canonical form of `num / √2^k`.
    pub fn reduce(mut num: RingInt, mut k: u32) -> Dyadic {
        if num.is_zero() {
            return Dyadic::zero();
        }
        while k > 0 {
            match num.div_rt2() {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        Dyadic { num, k }
    }

    pub fn zero() -> Dyadic {
        Dyadic::default()
    }

    pub fn one() -> Dyadic {
        Dyadic {
            num: RingInt::one(),
            k: 0,
        }
    }

    pub fn from_ring(num: RingInt) -> Dyadic {
        Dyadic::reduce(num, 0)
    }

    /// `1/√2`.
    pub fn inv_rt2() -> Dyadic {
        Dyadic {
            num: RingInt::one(),
            k: 1,
        }
    }

    pub fn num(&self) -> &RingInt {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Least denominator exponent.
    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerator when the value is written over `√2^k` with `k >= self.k()`.
    pub fn numerator_at(&self, k: u32) -> RingInt {
        assert!(k >= self.k, "exponent {k} is below the lde {}", self.k);
        self.num.mul_rt2_pow(k - self.k)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / 2f64.sqrt().powi(self.k as i32)
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let k = self.k.max(rhs.k);
        Dyadic::reduce(&self.numerator_at(k) + &rhs.numerator_at(k), k)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let k = self.k.max(rhs.k);
        Dyadic::reduce(&self.numerator_at(k) - &rhs.numerator_at(k), k)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::reduce(&self.num * &rhs.num, self.k + rhs.k)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            k: self.k,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            k: self.k,
        }
    }
}

/// `(a+b*rt2)/rt2^k`, dropping the parts that are zero.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/rt2^{}", self.num, self.k)
        }
    }
}

impl FromStr for Dyadic {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, k) = match s.split_once('/') {
            None => (s, 0u32),
            Some((num, den)) => {
                let den = den.trim();
                let exp = den
                    .strip_prefix("rt2^")
                    .or_else(|| den.strip_prefix("√2^"))
                    .ok_or_else(|| ParseError::new(format!("invalid denominator `{den}`")))?;
                let k = exp
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(format!("invalid exponent `{exp}`")))?;
                (num.trim(), k)
            }
        };
        let num = num
            .strip_prefix('(')
            .and_then(|n| n.strip_suffix(')'))
            .unwrap_or(num);
        Ok(Dyadic::reduce(num.parse()?, k))
    }
}
