//! Truncated Puiseux series in ξ with real coefficients.

use std::collections::BTreeMap;
use std::fmt;

use moves::{Semifield, SfError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pinned_groups::Scalar;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::semifields::rat_string;
use crate::ZoneError;

/// Exponent span kept beyond the leading term when an operation truncates.
pub const DEFAULT_HORIZON: i64 = 8;

type Terms = Vec<(BigRational, Scalar)>;

/// Σ c_k ξ^{e_k} with increasing exponents, known exactly below `order` (all terms when
/// `order` is `None`).
#[derive(Debug, Clone)]
pub struct PuiseuxScalar {
    terms: Terms,
    order: Option<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn below(e: &BigRational, limit: Option<&BigRational>) -> bool {
    limit.is_none_or(|l| e < l)
}

fn collect(map: BTreeMap<BigRational, Scalar>, limit: Option<&BigRational>) -> Terms {
    map.into_iter()
        .filter(|(e, c)| below(e, limit) && !c.is_exact_zero())
        .collect()
}

fn mul_terms(a: &[(BigRational, Scalar)], b: &[(BigRational, Scalar)], limit: Option<&BigRational>) -> Terms {
    let mut map: BTreeMap<BigRational, Scalar> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea + eb;
            if !below(&e, limit) {
                continue;
            }
            let c = ca.mul(cb);
            map.entry(e).and_modify(|x| *x = x.add(&c)).or_insert(c);
        }
    }
    collect(map, limit)
}

fn min_opt(a: Option<BigRational>, b: Option<BigRational>) -> Option<BigRational> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl PuiseuxScalar {
    pub fn new(terms: Vec<(BigRational, Scalar)>, order: Option<BigRational>) -> Result<Self, ZoneError> {
        let mut map: BTreeMap<BigRational, Scalar> = BTreeMap::new();
        for (e, c) in terms {
            map.entry(e).and_modify(|x| *x = x.add(&c)).or_insert(c);
        }
        let terms = collect(map, order.as_ref());
        let p = PuiseuxScalar { terms, order };
        p.valuation()?;
        Ok(p)
    }

    pub fn constant(c: Scalar) -> Self {
        PuiseuxScalar {
            terms: if c.is_exact_zero() { Vec::new() } else { vec![(BigRational::zero(), c)] },
            order: None,
        }
    }

    /// c·ξ^e.
    pub fn monomial(c: Scalar, e: BigRational) -> Self {
        PuiseuxScalar {
            terms: vec![(e, c)],
            order: None,
        }
    }

    pub fn terms(&self) -> &[(BigRational, Scalar)] {
        &self.terms
    }

    pub fn order(&self) -> Option<&BigRational> {
        self.order.as_ref()
    }

    /// The smallest exponent; errors unless its coefficient is positive.
    pub fn valuation(&self) -> Result<BigRational, ZoneError> {
        let (e, c) = self
            .terms
            .first()
            .ok_or_else(|| ZoneError::NotPositive("series vanishes to the truncation order".into()))?;
        if !c.is_positive()? {
            return Err(ZoneError::NotPositive(format!("leading coefficient {c}")));
        }
        Ok(e.clone())
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = min_opt(self.order.clone(), o.order.clone());
        let mut map: BTreeMap<BigRational, Scalar> = BTreeMap::new();
        for (e, c) in self.terms.iter().chain(&o.terms) {
            map.entry(e.clone()).and_modify(|x| *x = x.add(c)).or_insert_with(|| c.clone());
        }
        PuiseuxScalar {
            terms: collect(map, order.as_ref()),
            order,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let va = self.terms.first().map(|t| t.0.clone());
        let vb = o.terms.first().map(|t| t.0.clone());
        let order = match (va, vb) {
            (Some(va), Some(vb)) => min_opt(self.order.as_ref().map(|p| &vb + p), o.order.as_ref().map(|p| &va + p)),
            _ => min_opt(self.order.clone(), o.order.clone()),
        };
        PuiseuxScalar {
            terms: mul_terms(&self.terms, &o.terms, order.as_ref()),
            order,
        }
    }

    /// Splits off the leading term: self = c·ξ^v·(1 + u) with u in positive exponents.
    fn normalized(&self) -> Result<(BigRational, Scalar, Terms, BigRational), ZoneError> {
        let (v, c) = self
            .terms
            .first()
            .cloned()
            .ok_or_else(|| ZoneError::Domain("division by a vanishing series".into()))?;
        let inv = c.recip()?;
        let u: Terms = self.terms[1..].iter().map(|(e, x)| (e - &v, x.mul(&inv))).collect();
        let horizon = match &self.order {
            Some(p) => p - &v,
            None => rat(DEFAULT_HORIZON),
        };
        Ok((v, c, u, horizon))
    }

    /// Σ_k coef(k)·u^k truncated below the relative horizon.
    fn power_series(u: &[(BigRational, Scalar)], horizon: &BigRational, coef: impl Fn(usize) -> Scalar) -> Terms {
        let mut map: BTreeMap<BigRational, Scalar> = BTreeMap::new();
        map.insert(BigRational::zero(), coef(0));
        let mut pow: Terms = vec![(BigRational::zero(), Scalar::one())];
        let mut k = 0;
        loop {
            k += 1;
            pow = mul_terms(&pow, u, Some(horizon));
            if pow.is_empty() {
                break;
            }
            let ck = coef(k);
            for (e, x) in &pow {
                let t = x.mul(&ck);
                map.entry(e.clone()).and_modify(|y| *y = y.add(&t)).or_insert(t);
            }
        }
        collect(map, Some(horizon))
    }

    fn scaled(terms: Terms, c: &Scalar, shift: &BigRational, order: Option<BigRational>) -> Self {
        PuiseuxScalar {
            terms: terms.into_iter().map(|(e, x)| (e + shift, x.mul(c))).collect(),
            order,
        }
    }

    pub fn recip(&self) -> Result<Self, ZoneError> {
        let (v, c, u, h) = self.normalized()?;
        let ci = c.recip()?;
        if u.is_empty() && self.order.is_none() {
            return Ok(PuiseuxScalar::monomial(ci, -v));
        }
        let series = Self::power_series(&u, &h, |k| Scalar::from_i64(if k % 2 == 0 { 1 } else { -1 }));
        Ok(Self::scaled(series, &ci, &-&v, Some(&h - &v)))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ZoneError> {
        Ok(self.mul(&o.recip()?))
    }

    /// Positive square root; halves the valuation.
    pub fn sqrt(&self) -> Result<Self, ZoneError> {
        let (v, c, u, h) = self.normalized()?;
        if !c.is_positive()? {
            return Err(ZoneError::NotPositive(format!("leading coefficient {c}")));
        }
        let cr = c.sqrt()?;
        let half_v = &v / rat(2);
        if u.is_empty() && self.order.is_none() {
            return Ok(PuiseuxScalar::monomial(cr, half_v));
        }
        // binom(1/2, k)
        let coef = |k: usize| {
            let mut b = BigRational::one();
            for j in 0..k {
                b = b * (BigRational::new(BigInt::one(), BigInt::from(2)) - rat(j as i64)) / rat(j as i64 + 1);
            }
            Scalar::from_rational(b)
        };
        let series = Self::power_series(&u, &h, coef);
        Ok(Self::scaled(series, &cr, &half_v, Some(&half_v + &h)))
    }

    /// Numerical value at ξ = x, for diagnostics.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_f64() * x.powf(crate::semifields::rat_to_f64(e)))
            .sum()
    }
}

impl PartialEq for PuiseuxScalar {
    fn eq(&self, o: &Self) -> bool {
        self.order == o.order
            && self.terms.len() == o.terms.len()
            && self
                .terms
                .iter()
                .zip(&o.terms)
                .all(|((e, c), (f, d))| e == f && c.equals(d).unwrap_or(false))
    }
}

impl Semifield for PuiseuxScalar {
    fn sf_one() -> Self {
        PuiseuxScalar::constant(Scalar::one())
    }

    fn sf_add(&self, o: &Self) -> Self {
        self.add(o)
    }

    fn sf_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }

    fn sf_div(&self, o: &Self) -> Result<Self, SfError> {
        self.div(o).map_err(|e| SfError::Domain(e.to_string()))
    }

    fn sf_sqrt(&self) -> Result<Self, SfError> {
        self.sqrt().map_err(|e| SfError::Domain(e.to_string()))
    }

    fn sf_const(n: u32) -> Self {
        PuiseuxScalar::constant(Scalar::from_i64(i64::from(n)))
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            f.write_str("0")?;
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·ξ^{}", rat_string(e))?;
            }
        }
        if let Some(p) = &self.order {
            write!(f, " + O(ξ^{})", rat_string(p))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    terms: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<String>,
}

impl Serialize for PuiseuxScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (rat_string(e), c.to_string()))
                .collect(),
            order: self.order.as_ref().map(rat_string),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PuiseuxScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        let parse = |s: &str| pinned_groups::scalar::parse_rational(s).map_err(D::Error::custom);
        let mut terms = Vec::new();
        for (e, c) in &w.terms {
            terms.push((parse(e)?, c.parse::<Scalar>().map_err(D::Error::custom)?));
        }
        let order = w.order.as_deref().map(parse).transpose()?;
        PuiseuxScalar::new(terms, order).map_err(D::Error::custom)
    }
}
