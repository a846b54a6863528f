//! Carriers of the semifields used for coordinates.

use std::fmt;
use std::str::FromStr;

use moves::{Semifield, SfError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use pinned_groups::scalar::parse_rational;
use pinned_groups::Scalar;
use serde::{Deserialize, Serialize};

use crate::ZoneError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SemifieldTag {
    PositiveRational,
    PositiveTower,
    PuiseuxPositive,
    TropicalQ,
    TropicalZHalf,
    TropicalZ,
    Trivial,
}

impl SemifieldTag {
    pub const ALL: [SemifieldTag; 7] = [
        SemifieldTag::PositiveRational,
        SemifieldTag::PositiveTower,
        SemifieldTag::PuiseuxPositive,
        SemifieldTag::TropicalQ,
        SemifieldTag::TropicalZHalf,
        SemifieldTag::TropicalZ,
        SemifieldTag::Trivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemifieldTag::PositiveRational => "PositiveRational",
            SemifieldTag::PositiveTower => "PositiveTower",
            SemifieldTag::PuiseuxPositive => "PuiseuxPositive",
            SemifieldTag::TropicalQ => "TropicalQ",
            SemifieldTag::TropicalZHalf => "TropicalZHalf",
            SemifieldTag::TropicalZ => "TropicalZ",
            SemifieldTag::Trivial => "Trivial",
        }
    }

    pub fn parse(s: &str) -> Option<SemifieldTag> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        Self::ALL.into_iter().find(|t| t.name().to_ascii_lowercase() == key)
    }

    pub fn is_tropical(self) -> bool {
        matches!(self, SemifieldTag::TropicalQ | SemifieldTag::TropicalZHalf | SemifieldTag::TropicalZ)
    }
}

impl fmt::Display for SemifieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn rat_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// ℚ_{>0} with ordinary operations; square roots only of rational squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRational(pub BigRational);

impl PositiveRational {
    pub fn new(x: BigRational) -> Result<Self, ZoneError> {
        if !x.is_positive() {
            return Err(ZoneError::NotPositive(rat_string(&x)));
        }
        Ok(PositiveRational(x))
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::from_rational(self.0.clone())
    }
}

impl Semifield for PositiveRational {
    fn sf_one() -> Self {
        PositiveRational(BigRational::one())
    }

    fn sf_add(&self, o: &Self) -> Self {
        PositiveRational(&self.0 + &o.0)
    }

    fn sf_mul(&self, o: &Self) -> Self {
        PositiveRational(&self.0 * &o.0)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(PositiveRational(&self.0 / &o.0))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        rational_sqrt(&self.0)
            .map(PositiveRational)
            .ok_or_else(|| SfError::Domain(format!("{} is not a rational square", rat_string(&self.0))))
    }

    fn sf_const(n: u32) -> Self {
        PositiveRational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat_string(&self.0))
    }
}

/// (ℚ, min, +): the valuation semifield.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalQ(pub BigRational);

impl TropicalQ {
    pub fn int(n: i64) -> Self {
        TropicalQ(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        TropicalQ(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }
}

impl Semifield for TropicalQ {
    fn sf_one() -> Self {
        TropicalQ(BigRational::zero())
    }

    fn sf_add(&self, o: &Self) -> Self {
        TropicalQ(self.0.clone().min(o.0.clone()))
    }

    fn sf_mul(&self, o: &Self) -> Self {
        TropicalQ(&self.0 + &o.0)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(TropicalQ(&self.0 - &o.0))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Ok(TropicalQ(&self.0 / BigRational::from_integer(BigInt::from(2))))
    }

    fn sf_const(_n: u32) -> Self {
        Self::sf_one()
    }
}

impl fmt::Display for TropicalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat_string(&self.0))
    }
}

impl FromStr for TropicalQ {
    type Err = ZoneError;

    fn from_str(s: &str) -> Result<Self, ZoneError> {
        Ok(TropicalQ(parse_rational(s)?))
    }
}

pub fn is_dyadic(x: &BigRational) -> bool {
    let mut d = x.denom().clone();
    let two = BigInt::from(2);
    while d.is_even() {
        d /= &two;
    }
    d.is_one()
}

/// (ℤ[1/2], min, +).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalZHalf(BigRational);

impl TropicalZHalf {
    pub fn new(x: BigRational) -> Result<Self, ZoneError> {
        if !is_dyadic(&x) {
            return Err(ZoneError::Domain(format!("{} is not in ℤ[1/2]", rat_string(&x))));
        }
        Ok(TropicalZHalf(x))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl Semifield for TropicalZHalf {
    fn sf_one() -> Self {
        TropicalZHalf(BigRational::zero())
    }

    fn sf_add(&self, o: &Self) -> Self {
        TropicalZHalf(self.0.clone().min(o.0.clone()))
    }

    fn sf_mul(&self, o: &Self) -> Self {
        TropicalZHalf(&self.0 + &o.0)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(TropicalZHalf(&self.0 - &o.0))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Ok(TropicalZHalf(&self.0 / BigRational::from_integer(BigInt::from(2))))
    }

    fn sf_const(_n: u32) -> Self {
        Self::sf_one()
    }
}

impl fmt::Display for TropicalZHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat_string(&self.0))
    }
}

/// (ℤ, min, +); halving only of even values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalZ(pub BigInt);

impl Semifield for TropicalZ {
    fn sf_one() -> Self {
        TropicalZ(BigInt::zero())
    }

    fn sf_add(&self, o: &Self) -> Self {
        TropicalZ(self.0.clone().min(o.0.clone()))
    }

    fn sf_mul(&self, o: &Self) -> Self {
        TropicalZ(&self.0 + &o.0)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        Ok(TropicalZ(&self.0 - &o.0))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        if self.0.is_odd() {
            return Err(SfError::Domain(format!("{} is odd and cannot be halved in ℤ", self.0)));
        }
        Ok(TropicalZ(&self.0 / BigInt::from(2)))
    }

    fn sf_const(_n: u32) -> Self {
        Self::sf_one()
    }
}

impl fmt::Display for TropicalZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The semifield {1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Trivial;

impl Semifield for Trivial {
    fn sf_one() -> Self {
        Trivial
    }

    fn sf_add(&self, _o: &Self) -> Self {
        Trivial
    }

    fn sf_mul(&self, _o: &Self) -> Self {
        Trivial
    }

    fn sf_div(&self, _o: &Self) -> Result<Self, SfError> {
        Ok(Trivial)
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        Ok(Trivial)
    }

    fn sf_const(_n: u32) -> Self {
        Trivial
    }
}

impl fmt::Display for Trivial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("1")
    }
}

/// Lossy float view, for diagnostics only.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn is_dyadic_vec(v: &[BigRational]) -> bool {
    v.iter().all(is_dyadic)
}
