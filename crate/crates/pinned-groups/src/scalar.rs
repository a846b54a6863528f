use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_PRECISION: u32 = 192;
pub const MIN_PRECISION: u32 = 128;
pub const MAX_PRECISION: u32 = 4096;

/// Relative width below which an interval counts as certified.
pub const CERTIFY_BITS: u32 = 128;

thread_local! {
    static PRECISION: Cell<u32> = const { Cell::new(DEFAULT_PRECISION) };
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("undecidable at current precision ({0} bits); increase precision")]
    Undecidable(u32),
    #[error("cannot parse scalar '{0}'")]
    Parse(String),
}

/// Errors that may go away when the computation is repeated at higher precision.
pub trait PrecisionSensitive {
    fn is_undecidable(&self) -> bool;
}

impl PrecisionSensitive for ScalarError {
    fn is_undecidable(&self) -> bool {
        matches!(self, ScalarError::Undecidable(_))
    }
}

pub fn precision() -> u32 {
    PRECISION.with(|p| p.get())
}

struct PrecisionGuard(u32);

impl Drop for PrecisionGuard {
    fn drop(&mut self) {
        PRECISION.with(|p| p.set(self.0));
    }
}

/// Runs `f` with the working precision set to `bits`, restoring the old value afterwards.
pub fn with_precision<T>(bits: u32, f: impl FnOnce() -> T) -> T {
    let old = PRECISION.with(|p| p.replace(bits.max(MIN_PRECISION)));
    let _guard = PrecisionGuard(old);
    f()
}

/// Retries `f` at doubled precision while it reports an undecidable comparison,
/// starting from the current precision and stopping after `MAX_PRECISION`.
pub fn escalate<T, E: PrecisionSensitive>(mut f: impl FnMut() -> Result<T, E>) -> Result<T, E> {
    let mut bits = precision();
    loop {
        match with_precision(bits, &mut f) {
            Err(e) if e.is_undecidable() && bits < MAX_PRECISION => bits = (bits * 2).min(MAX_PRECISION),
            other => return other,
        }
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub(crate) fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = is_square(x.numer())?;
    let d = is_square(x.denom())?;
    Some(BigRational::new(n, d))
}

/// Splits a positive integer as k²·d with d free of small square factors.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut d = n.clone();
    let mut p = 2u32;
    while p < 4096 {
        let pp = BigInt::from(p * p);
        if pp > d {
            break;
        }
        while (&d % &pp).is_zero() {
            d /= &pp;
            k *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(r) = is_square(&d) {
        k *= r;
        d = BigInt::one();
    }
    (k, d)
}

fn floor_ratio(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

fn ceil_ratio(x: &BigRational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

fn bit_exponent(x: &BigRational) -> i64 {
    x.numer().bits() as i64 - x.denom().bits() as i64
}

/// Rounds to `prec` significant bits in the requested direction; small exact values are kept.
fn round_to(x: &BigRational, prec: u32, up: bool) -> BigRational {
    if x.is_zero() || (x.numer().bits() <= prec as u64 && x.denom().bits() <= prec as u64) {
        return x.clone();
    }
    let shift = prec as i64 - bit_exponent(x);
    let scaled = if shift >= 0 {
        x * BigRational::from_integer(pow2(shift as u64))
    } else {
        x / BigRational::from_integer(pow2((-shift) as u64))
    };
    let q = if up { ceil_ratio(&scaled) } else { floor_ratio(&scaled) };
    if shift >= 0 {
        BigRational::new(q, pow2(shift as u64))
    } else {
        BigRational::from_integer(q * pow2((-shift) as u64))
    }
}

/// Lower or upper bound of √x for x ≥ 0, accurate to about `prec` bits.
fn sqrt_bound(x: &BigRational, prec: u32, up: bool) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    if let Some(r) = rational_sqrt(x) {
        return r;
    }
    let e = bit_exponent(x);
    let k = (prec as i64 - e.min(0) / 2 + 2).max(0) as u64;
    let scaled = x * BigRational::from_integer(pow2(2 * k));
    let s = if up {
        let c = ceil_ratio(&scaled);
        let r = c.sqrt();
        if &r * &r == c {
            r
        } else {
            r + 1
        }
    } else {
        floor_ratio(&scaled).sqrt()
    };
    BigRational::new(s, pow2(k))
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let shift = 60 - bit_exponent(x);
    let scaled = if shift >= 0 {
        x * BigRational::from_integer(pow2(shift as u64))
    } else {
        x / BigRational::from_integer(pow2((-shift) as u64))
    };
    let m = floor_ratio(&scaled).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(-(shift.clamp(-2000, 2000) as i32))
}

fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering with `digits` significant digits (truncated toward zero).
pub fn decimal_string(x: &BigRational, digits: usize) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let neg = x.is_negative();
    let a = x.abs();
    let mut exp10: i64 = (bit_exponent(&a) as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    let scale = |e: i64| -> BigRational {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            BigRational::one() / num_traits::pow(ten.clone(), (-e) as usize)
        }
    };
    while a >= scale(exp10 + 1) {
        exp10 += 1;
    }
    while a < scale(exp10) {
        exp10 -= 1;
    }
    let m = floor_ratio(&(&a * scale(digits as i64 - 1 - exp10)));
    let s = m.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&s[..1]);
    let rest = s[1..].trim_end_matches('0');
    if !rest.is_empty() {
        out.push('.');
        out.push_str(rest);
    }
    if exp10 != 0 {
        out.push_str(&format!("e{exp10}"));
    }
    out
}

/// Closed interval with rational (in practice dyadic) endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    fn rounded(lo: BigRational, hi: BigRational) -> Self {
        let p = precision();
        Interval {
            lo: round_to(&lo, p, false),
            hi: round_to(&hi, p, true),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn magnitude(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Width is below 2^-CERTIFY_BITS relative to the magnitude.
    pub fn is_certified(&self) -> bool {
        let w = self.width();
        if w.is_zero() {
            return true;
        }
        let floor = BigRational::new(BigInt::one(), pow2(64));
        let m = self.magnitude().max(floor);
        w * BigRational::from_integer(pow2(CERTIFY_BITS as u64)) < m
    }

    pub fn relative_width(&self) -> f64 {
        let m = self.magnitude();
        if m.is_zero() {
            return 0.0;
        }
        rational_to_f64(&(self.width() / m))
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval::rounded(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    fn mul(&self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::rounded(lo, hi)
    }

    fn recip(&self) -> Result<Interval, ScalarError> {
        if self.lo.is_zero() && self.hi.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.contains_zero() {
            return Err(ScalarError::Undecidable(precision()));
        }
        let one = BigRational::one();
        Ok(Interval::rounded(&one / &self.hi, &one / &self.lo))
    }

    fn sqrt(&self) -> Result<Interval, ScalarError> {
        if self.hi.is_negative() {
            return Err(ScalarError::NegativeSqrt);
        }
        if self.lo.is_negative() {
            if self.hi.is_zero() {
                return Ok(Interval::point(BigRational::zero()));
            }
            return Err(ScalarError::Undecidable(precision()));
        }
        let p = precision();
        Ok(Interval {
            lo: sqrt_bound(&self.lo, p, false),
            hi: sqrt_bound(&self.hi, p, true),
        })
    }

    fn sign(&self) -> Result<Ordering, ScalarError> {
        if self.lo.is_positive() {
            Ok(Ordering::Greater)
        } else if self.hi.is_negative() {
            Ok(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Ok(Ordering::Equal)
        } else {
            Err(ScalarError::Undecidable(precision()))
        }
    }
}

/// p + q√d with q ≠ 0 and d > 1 a non-square integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub p: BigRational,
    pub q: BigRational,
    pub d: BigInt,
}

impl Quadratic {
    fn norm(&self) -> BigRational {
        &self.p * &self.p - &self.q * &self.q * BigRational::from_integer(self.d.clone())
    }

    fn sign(&self) -> Ordering {
        let sq = if self.q.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        };
        let sp = self.p.cmp(&BigRational::zero());
        if sp == Ordering::Equal || sp == sq {
            return sq;
        }
        if self.norm().is_positive() {
            sp
        } else {
            sq
        }
    }

    /// Rewrites q√d over √target when d·target is a perfect square.
    fn rebase(&self, target: &BigInt) -> Option<Quadratic> {
        let r = is_square(&(&self.d * target))?;
        Some(Quadratic {
            p: self.p.clone(),
            q: &self.q * BigRational::new(r, target.clone()),
            d: target.clone(),
        })
    }

    fn to_interval(&self) -> Interval {
        let p = precision();
        let d = BigRational::from_integer(self.d.clone());
        let s = Interval {
            lo: sqrt_bound(&d, p + 8, false),
            hi: sqrt_bound(&d, p + 8, true),
        };
        Interval::point(self.p.clone()).add(&Interval::point(self.q.clone()).mul(&s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Rational,
    Quadratic,
    Interval,
}

/// An element of the scalar tower: exact rational, element of one real quadratic field,
/// or a certified interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Quad(Quadratic),
    Interval(Interval),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::Rat(rat(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    pub fn interval(lo: BigRational, hi: BigRational) -> Self {
        Scalar::Interval(Interval { lo, hi })
    }

    pub fn level(&self) -> Level {
        match self {
            Scalar::Rat(_) => Level::Rational,
            Scalar::Quad(_) => Level::Quadratic,
            Scalar::Interval(_) => Level::Interval,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Interval(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Cheap structural zero test (exact levels only).
    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    fn quad(p: BigRational, q: BigRational, d: BigInt) -> Self {
        if q.is_zero() {
            Scalar::Rat(p)
        } else {
            Scalar::Quad(Quadratic { p, q, d })
        }
    }

    pub fn to_interval(&self) -> Interval {
        match self {
            Scalar::Rat(r) => Interval::point(r.clone()),
            Scalar::Quad(q) => q.to_interval(),
            Scalar::Interval(i) => i.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rat(r) => rational_to_f64(r),
            Scalar::Quad(q) => rational_to_f64(&q.p) + rational_to_f64(&q.q) * rational_to_f64(&BigRational::from_integer(q.d.clone())).sqrt(),
            Scalar::Interval(i) => rational_to_f64(&i.midpoint()),
        }
    }

    /// Aligns two quadratic elements to a common radicand when possible.
    fn common_field(a: &Quadratic, b: &Quadratic) -> Option<(Quadratic, Quadratic)> {
        if a.d == b.d {
            return Some((a.clone(), b.clone()));
        }
        b.rebase(&a.d).map(|b2| (a.clone(), b2))
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Rat(a), Scalar::Quad(q)) | (Scalar::Quad(q), Scalar::Rat(a)) => {
                Scalar::quad(&q.p + a, q.q.clone(), q.d.clone())
            }
            (Scalar::Quad(x), Scalar::Quad(y)) => match Self::common_field(x, y) {
                Some((x, y)) => Scalar::quad(&x.p + &y.p, &x.q + &y.q, x.d),
                None => Scalar::Interval(x.to_interval().add(&y.to_interval())),
            },
            _ => Scalar::Interval(self.to_interval().add(&o.to_interval())),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Quad(q) => Scalar::quad(-&q.p, -&q.q, q.d.clone()),
            Scalar::Interval(i) => Scalar::Interval(i.neg()),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Quad(q)) | (Scalar::Quad(q), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::quad(&q.p * a, &q.q * a, q.d.clone())
            }
            (Scalar::Quad(x), Scalar::Quad(y)) => match Self::common_field(x, y) {
                Some((x, y)) => {
                    let d = BigRational::from_integer(x.d.clone());
                    Scalar::quad(
                        &x.p * &y.p + &x.q * &y.q * d,
                        &x.p * &y.q + &x.q * &y.p,
                        x.d,
                    )
                }
                None => Scalar::Interval(x.to_interval().mul(&y.to_interval())),
            },
            (Scalar::Rat(a), Scalar::Interval(_)) | (Scalar::Interval(_), Scalar::Rat(a)) if a.is_zero() => {
                Scalar::zero()
            }
            _ => Scalar::Interval(self.to_interval().mul(&o.to_interval())),
        }
    }

    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Quad(q) => {
                let n = q.norm();
                Ok(Scalar::quad(&q.p / &n, -&q.q / &n, q.d.clone()))
            }
            Scalar::Interval(i) => Ok(Scalar::Interval(i.recip()?)),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.recip()?))
    }

    pub fn pow_i(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut r = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Positive square root. Stays exact when the result lies in ℚ or in the field of `self`.
    pub fn sqrt(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(a) => {
                if a.is_negative() {
                    return Err(ScalarError::NegativeSqrt);
                }
                if let Some(r) = rational_sqrt(a) {
                    return Ok(Scalar::Rat(r));
                }
                let (k, d) = split_square(&(a.numer() * a.denom()));
                if d.is_one() {
                    return Ok(Scalar::Rat(BigRational::new(k, a.denom().clone())));
                }
                Ok(Scalar::quad(
                    BigRational::zero(),
                    BigRational::new(k, a.denom().clone()),
                    d,
                ))
            }
            Scalar::Quad(q) => {
                if q.sign() == Ordering::Less {
                    return Err(ScalarError::NegativeSqrt);
                }
                match Self::denest(q) {
                    Some(s) => Ok(s),
                    None => Ok(Scalar::Interval(q.to_interval().sqrt()?)),
                }
            }
            Scalar::Interval(i) => Ok(Scalar::Interval(i.sqrt()?)),
        }
    }

    /// Looks for x + y√d with (x + y√d)² = p + q√d.
    fn denest(q: &Quadratic) -> Option<Scalar> {
        let r = rational_sqrt(&q.norm())?;
        let two = rat(2);
        let d = BigRational::from_integer(q.d.clone());
        for cand in [(&q.p + &r) / &two, (&q.p - &r) / &two] {
            if cand.is_negative() {
                continue;
            }
            if let Some(x) = rational_sqrt(&cand) {
                if x.is_zero() {
                    let y2 = &q.p / &d;
                    if let Some(y) = rational_sqrt(&y2) {
                        return Some(Scalar::quad(BigRational::zero(), y, q.d.clone()));
                    }
                    continue;
                }
                let y = &q.q / (&two * &x);
                let s = Scalar::quad(x, y, q.d.clone());
                if s.sign().ok() == Some(Ordering::Greater) {
                    return Some(s);
                }
            }
        }
        None
    }

    pub fn sign(&self) -> Result<Ordering, ScalarError> {
        match self {
            Scalar::Rat(a) => Ok(a.cmp(&BigRational::zero())),
            Scalar::Quad(q) => Ok(q.sign()),
            Scalar::Interval(i) => i.sign(),
        }
    }

    pub fn is_positive(&self) -> Result<bool, ScalarError> {
        Ok(self.sign()? == Ordering::Greater)
    }

    pub fn compare(&self, o: &Scalar) -> Result<Ordering, ScalarError> {
        self.sub(o).sign()
    }

    /// Equality: exact at the exact levels; at interval level decided when the difference
    /// excludes zero, or certified equal when it contains zero and is narrow enough.
    pub fn equals(&self, o: &Scalar) -> Result<bool, ScalarError> {
        match self.sub(o) {
            Scalar::Rat(r) => Ok(r.is_zero()),
            Scalar::Quad(_) => Ok(false),
            Scalar::Interval(i) => {
                if !i.contains_zero() {
                    return Ok(false);
                }
                let scale = self.to_interval().magnitude().max(o.to_interval().magnitude());
                let floor = BigRational::new(BigInt::one(), pow2(64));
                if i.width() * BigRational::from_integer(pow2(CERTIFY_BITS as u64)) < scale.max(floor) {
                    Ok(true)
                } else {
                    Err(ScalarError::Undecidable(precision()))
                }
            }
        }
    }

    /// Width of the enclosure relative to its magnitude; zero for exact values.
    pub fn relative_width(&self) -> f64 {
        match self {
            Scalar::Interval(i) => i.relative_width(),
            _ => 0.0,
        }
    }
}

macro_rules! scalar_op {
    ($tr:ident, $f:ident) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                Scalar::$f(self, o)
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                Scalar::$f(&self, &o)
            }
        }
        impl std::ops::$tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                Scalar::$f(&self, o)
            }
        }
        impl std::ops::$tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                Scalar::$f(self, &o)
            }
        }
    };
}

scalar_op!(Add, add);
scalar_op!(Sub, sub);
scalar_op!(Mul, mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts integers, fractions `p/q` and finite decimals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(Scalar::Rat)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let t = s.trim();
    let err = || ScalarError::Parse(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((i, f)) = t.split_once('.') {
        let neg = i.starts_with('-');
        let digits = format!("{}{}", i.trim_start_matches(['-', '+']), f);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let d = num_traits::pow(BigInt::from(10), f.len());
        let r = BigRational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = t.parse().map_err(|_| err())?;
    Ok(BigRational::from_integer(n))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", format_rational(r)),
            Scalar::Quad(q) => {
                let qa = q.q.abs();
                let coef = if qa.is_one() {
                    String::new()
                } else if qa.denom().is_one() {
                    qa.numer().to_string()
                } else {
                    format!("({})", format_rational(&qa))
                };
                let sign = if q.q.is_negative() { "-" } else { "+" };
                if q.p.is_zero() {
                    let lead = if q.q.is_negative() { "-" } else { "" };
                    write!(f, "{lead}{coef}√{}", q.d)
                } else {
                    write!(f, "{} {sign} {coef}√{}", format_rational(&q.p), q.d)
                }
            }
            Scalar::Interval(i) => {
                let mid = i.midpoint();
                let rad = rational_to_f64(&(i.width() / rat(2)));
                write!(f, "{} ± {:.1e}", decimal_string(&mid, 40), rad)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ScalarRepr {
    Rat { num: String, den: String },
    Quad { p: String, q: String, d: String },
    Interval { lo: String, hi: String },
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Scalar::Rat(r) => ScalarRepr::Rat {
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            },
            Scalar::Quad(q) => ScalarRepr::Quad {
                p: format_rational(&q.p),
                q: format_rational(&q.q),
                d: q.d.to_string(),
            },
            Scalar::Interval(i) => ScalarRepr::Interval {
                lo: format_rational(&i.lo),
                hi: format_rational(&i.hi),
            },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = ScalarRepr::deserialize(d)?;
        let p = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Ok(match repr {
            ScalarRepr::Rat { num, den } => Scalar::Rat(p(&format!("{num}/{den}"))?),
            ScalarRepr::Quad { p: a, q, d } => {
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                Scalar::quad(p(&a)?, p(&q)?, d)
            }
            ScalarRepr::Interval { lo, hi } => Scalar::interval(p(&lo)?, p(&hi)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn sqrt_levels() {
        assert_eq!(q("9/4").sqrt().unwrap(), q("3/2"));
        let s3 = q("3").sqrt().unwrap();
        assert_eq!(s3.level(), Level::Quadratic);
        assert_eq!(s3.mul(&s3), q("3"));
        let s12 = q("12").sqrt().unwrap();
        assert_eq!(s12.to_string(), "2√3");
        let s2 = q("2").sqrt().unwrap();
        assert_eq!(s2.mul(&s3).level(), Level::Interval);
        assert_eq!(q("-1").sqrt(), Err(ScalarError::NegativeSqrt));
    }

    #[test]
    fn denesting() {
        // 3 + 2√2 = (1 + √2)²
        let s2 = q("2").sqrt().unwrap();
        let x = q("3").add(&q("2").mul(&s2));
        let r = x.sqrt().unwrap();
        assert_eq!(r, q("1").add(&s2));
    }

    #[test]
    fn rebased_radicands_combine() {
        let a = q("3").sqrt().unwrap();
        let b = q("27").sqrt().unwrap();
        assert_eq!(b.sub(&a.mul(&q("3"))), Scalar::zero());
    }

    #[test]
    fn quadratic_sign_and_inverse() {
        let s3 = q("3").sqrt().unwrap();
        let x = s3.sub(&q("2"));
        assert_eq!(x.sign().unwrap(), Ordering::Less);
        let y = x.recip().unwrap();
        assert_eq!(x.mul(&y), Scalar::one());
    }

    #[test]
    fn interval_ops_certify() {
        let s2 = q("2").sqrt().unwrap();
        let s3 = q("3").sqrt().unwrap();
        let x = s2.add(&s3);
        let y = x.mul(&x);
        let expect = q("5").add(&q("2").mul(&q("6").sqrt().unwrap()));
        assert!(y.equals(&expect).unwrap());
        assert!(!y.equals(&q("10")).unwrap());
        assert!(y.to_interval().is_certified());
    }

    #[test]
    fn undecidable_sign_and_escalation() {
        let s2 = q("2").sqrt().unwrap();
        let s3 = q("3").sqrt().unwrap();
        let zero = s2.mul(&s3).sub(&q("6").sqrt().unwrap());
        assert!(matches!(zero.sign(), Err(ScalarError::Undecidable(_))));
        let r: Result<(), ScalarError> = escalate(|| zero.sign().map(|_| ()));
        assert!(matches!(r, Err(ScalarError::Undecidable(_))));
    }

    #[test]
    fn precision_scoping() {
        assert_eq!(precision(), DEFAULT_PRECISION);
        with_precision(512, || assert_eq!(precision(), 512));
        assert_eq!(precision(), DEFAULT_PRECISION);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("0.25"), Scalar::from_ratio(1, 4));
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert!("x".parse::<Scalar>().is_err());
        assert_eq!(decimal_string(&BigRational::new(1.into(), 3.into()), 5), "3.3333e-1");
    }
}
