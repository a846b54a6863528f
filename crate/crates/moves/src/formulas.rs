//! Coordinate formulas of the elementary moves. Inputs and outputs are in the order used
//! in the defining identities: for standard moves this is word order; for non-standard
//! moves it is the tuple order of the identities (for example `(a, b, c, d, e, f)`).

use pinned_groups::{PrecisionSensitive, Scalar, ScalarError};

use crate::semifield::{Semifield, SfError};

fn c2<S: Semifield>() -> S {
    S::sf_const(2)
}

fn c4<S: Semifield>() -> S {
    S::sf_const(4)
}

pub fn std_a1a1<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    Ok(vec![x[1].clone(), x[0].clone()])
}

/// x_i(a) x_j(b) x_i(c) = x_j(bc/(a+c)) x_i(a+c) x_j(ab/(a+c)).
pub fn std_a2<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    let s = a.sf_add(c);
    Ok(vec![b.sf_mul(c).sf_div(&s)?, s.clone(), a.sf_mul(b).sf_div(&s)?])
}

/// Rank-two move of type B2 starting with the short letter.
pub fn std_b2_short_first<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a, b, c, d) = (&x[0], &x[1], &x[2], &x[3]);
    let aa = a.sf_mul(a);
    let p1 = aa
        .sf_mul(b)
        .sf_add(&aa.sf_mul(d))
        .sf_add(&c2::<S>().sf_mul(a).sf_mul(c).sf_mul(d))
        .sf_add(&c.sf_mul(c).sf_mul(d));
    let p2 = a.sf_mul(b).sf_add(&a.sf_mul(d)).sf_add(&c.sf_mul(d));
    Ok(vec![
        b.sf_mul(c).sf_mul(c).sf_mul(d).sf_div(&p1)?,
        p1.sf_div(&p2)?,
        p2.sf_mul(&p2).sf_div(&p1)?,
        a.sf_mul(b).sf_mul(c).sf_div(&p2)?,
    ])
}

/// Rank-two move of type B2 starting with the long letter.
pub fn std_b2_long_first<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a, b, c, d) = (&x[0], &x[1], &x[2], &x[3]);
    let r1 = a.sf_mul(b).sf_add(&a.sf_mul(d)).sf_add(&c.sf_mul(d));
    let r2 = a
        .sf_mul(b)
        .sf_mul(b)
        .sf_add(&c2::<S>().sf_mul(a).sf_mul(b).sf_mul(d))
        .sf_add(&a.sf_mul(d).sf_mul(d))
        .sf_add(&c.sf_mul(d).sf_mul(d));
    Ok(vec![
        b.sf_mul(c).sf_mul(d).sf_div(&r1)?,
        r1.sf_mul(&r1).sf_div(&r2)?,
        r2.sf_div(&r1)?,
        a.sf_mul(b).sf_mul(b).sf_mul(c).sf_div(&r2)?,
    ])
}

pub fn ns43i<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    Ok(vec![x[1].clone(), x[0].clone()])
}

/// (a, b) ↦ (a′, b′) with b′ = √(a² + 2ab), a′ = b²/(a + b + b′).
pub fn ns44_forward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a, b) = (&x[0], &x[1]);
    let s = a.sf_mul(&a.sf_add(&c2::<S>().sf_mul(b))).sf_sqrt()?;
    let ap = b.sf_mul(b).sf_div(&a.sf_add(b).sf_add(&s))?;
    Ok(vec![ap, s])
}

pub fn ns44_backward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (ap, bp) = (&x[0], &x[1]);
    let s = ap.sf_mul(&ap.sf_add(&c2::<S>().sf_mul(bp))).sf_sqrt()?;
    let a = bp.sf_mul(bp).sf_div(&ap.sf_add(bp).sf_add(&s))?;
    Ok(vec![a, s])
}

pub fn ns45_forward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a, b, c) = (&x[0], &x[1], &x[2]);
    let bp = a.sf_add(c);
    let bp2 = bp.sf_mul(&bp);
    let ap = b.sf_mul(c).sf_mul(c).sf_div(&bp2)?;
    let cp = a
        .sf_mul(b)
        .sf_mul(&a.sf_add(&c2::<S>().sf_mul(c)))
        .sf_div(&bp2)?;
    Ok(vec![ap, bp, cp])
}

pub fn ns45_backward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (ap, bp, cp) = (&x[0], &x[1], &x[2]);
    let t = ap.sf_add(cp);
    let s = ap.sf_mul(bp).sf_mul(bp).sf_mul(&t).sf_sqrt()?;
    let a = bp.sf_mul(bp).sf_mul(cp).sf_div(&bp.sf_mul(&t).sf_add(&s))?;
    let c = s.sf_div(&t)?;
    Ok(vec![a, t, c])
}

/// (a1, a2, a3, a2′) ↦ (b1, b2, b3, b2′).
pub fn ns46_forward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (a1, a2, a3, a2p) = (&x[0], &x[1], &x[2], &x[3]);
    let two = c2::<S>();
    let four = c4::<S>();
    let a13 = a1.sf_add(a3);
    let m = a2.sf_add(a2p);
    let xx = a13.sf_mul(a2).sf_add(&two.sf_mul(a1).sf_mul(a2p));
    let yy = a1
        .sf_mul(a2)
        .sf_add(&a2.sf_mul(a3))
        .sf_add(&two.sf_mul(a2p).sf_mul(a3));
    let sq = a2.sf_mul(a2).sf_mul(&a13).sf_mul(&a13);
    let mixed = four.sf_mul(a1).sf_mul(a2).sf_mul(a2p).sf_mul(a3);
    let delta = sq.sf_add(&mixed);
    let s = delta.sf_sqrt()?;
    let xs = xx.sf_add(&s);
    let xs2 = xs.sf_mul(&xs);
    let b1 = xs.sf_div(&two.sf_mul(&m))?;
    let b3 = two
        .sf_mul(a2p)
        .sf_mul(a3)
        .sf_mul(a3)
        .sf_div(&yy.sf_add(&s))?;
    let b2p = four
        .sf_mul(a1)
        .sf_mul(a1)
        .sf_mul(a2p)
        .sf_mul(&m)
        .sf_mul(&m)
        .sf_div(&xs2)?;
    let inner = sq
        .sf_add(&four.sf_mul(a1).sf_mul(a3).sf_mul(a2).sf_mul(a2p))
        .sf_add(&two.sf_mul(&xx).sf_mul(&s))
        .sf_add(&delta);
    let b2 = m.sf_mul(&inner).sf_div(&xs2)?;
    Ok(vec![b1, b2, b3, b2p])
}

pub fn ns46_backward<S: Semifield>(x: &[S]) -> Result<Vec<S>, SfError> {
    let (b1, b2, b3, b2p) = (&x[0], &x[1], &x[2], &x[3]);
    let two = c2::<S>();
    let b13 = b1.sf_add(b3);
    let delta = b3
        .sf_mul(b3)
        .sf_add(&b2.sf_mul(b3).sf_mul(&b13).sf_div(b2p)?);
    let s = delta.sf_sqrt()?;
    let b1s = b1.sf_add(&s);
    let a1 = b1.sf_mul(&b13).sf_div(&b1s)?;
    let a3 = b13.sf_mul(&s).sf_div(&b1s)?;
    let a2p = b2p.sf_mul(&b1s).sf_mul(&b1s).sf_div(&b13.sf_mul(&b13))?;
    let den = b2
        .sf_mul(b1)
        .sf_add(&b2.sf_mul(b3))
        .sf_add(&two.sf_mul(b2p).sf_mul(b3))
        .sf_add(&two.sf_mul(b2p).sf_mul(&s));
    let a2 = b2.sf_mul(b2).sf_mul(b1).sf_div(&den)?;
    Ok(vec![a1, a2, a3, a2p])
}

/// A non-standard move written as: one output coordinate (the pivot) is a root of a low
/// degree polynomial with coefficients in the inputs; the others are rational in the
/// inputs and the pivot.
#[derive(Debug, Clone)]
pub struct PivotForm {
    pub index: usize,
    /// Coefficients, constant term first.
    pub poly: Vec<Scalar>,
    /// Degree of the pivot polynomial as derived by elimination before cancellation.
    pub stated_degree: usize,
}

fn q(x: &Scalar, y: &Scalar) -> Result<Scalar, SfError> {
    Ok(x.div(y)?)
}

fn k(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    out
}

fn poly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => Scalar::zero(),
        })
        .collect()
}

fn poly_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Scalar::zero);
            let y = b.get(i).cloned().unwrap_or_else(Scalar::zero);
            x - y
        })
        .collect()
}

struct D4Fwd {
    m: [Scalar; 4],
    d12: Scalar,
    d23: Scalar,
    d13: Scalar,
    c: Scalar,
}

impl D4Fwd {
    fn new(x: &[Scalar]) -> Self {
        let (a1, a2, a3, a0) = (&x[0], &x[1], &x[2], &x[3]);
        let (b1, b2, b3, b0) = (&x[4], &x[5], &x[6], &x[7]);
        let m = [a0 + b0, a1 + b1, a2 + b2, a3 + b3];
        let b = [b0, b1, b2, b3];
        let d = |i: usize, j: usize| b[i] * b[j] * a0 - &m[i] * &m[j] * &m[0];
        let c = k(2) * a3 * b1 * b2 * a0 * &m[0] + b1 * b2 * b3 * a0 * b0;
        D4Fwd {
            d12: d(1, 2),
            d23: d(2, 3),
            d13: d(1, 3),
            m,
            c,
        }
    }

    /// d_ij + m_i m_j β as a polynomial in β.
    fn qp(&self, d: &Scalar, i: usize, j: usize) -> Vec<Scalar> {
        vec![d.clone(), &self.m[i] * &self.m[j]]
    }

    /// E − C as a polynomial in β, where 2β²√Δ = E − C.
    fn e_minus_c(&self) -> Vec<Scalar> {
        let m = &self.m;
        let m0_minus = vec![m[0].clone(), k(-1)];
        let beta = vec![Scalar::zero(), k(1)];
        let lin = self.qp(&self.d12, 1, 2).iter().map(|x| x * &m[3]).collect::<Vec<_>>();
        let lin2 = self.qp(&self.d23, 2, 3).iter().map(|x| x * &m[1]).collect::<Vec<_>>();
        let lin3 = self.qp(&self.d13, 1, 3).iter().map(|x| x * &m[2]).collect::<Vec<_>>();
        let sum: Vec<Scalar> = (0..2).map(|t| &lin[t] + &lin2[t] + &lin3[t]).collect();
        let first = poly_mul(&poly_mul(&beta, &m0_minus), &[&m[1] * &m[2] * &m[3]]);
        let second = poly_mul(&m0_minus, &sum);
        let third: Vec<Scalar> = lin.iter().map(|x| k(2) * &m[0] * x).collect();
        let e = poly_add(&poly_sub(&first, &second), &third);
        poly_sub(&e, &[self.c.clone()])
    }

    fn pivot_poly(&self) -> Vec<Scalar> {
        let beta4 = vec![Scalar::zero(), k(4)];
        let prod = poly_mul(
            &poly_mul(&poly_mul(&beta4, &self.qp(&self.d12, 1, 2)), &self.qp(&self.d23, 2, 3)),
            &self.qp(&self.d13, 1, 3),
        );
        let ec = self.e_minus_c();
        poly_sub(&prod, &poly_mul(&ec, &ec))
    }
}

struct D4Bwd {
    m: [Scalar; 4],
    d12: Scalar,
    d23: Scalar,
    d13: Scalar,
    kk: Scalar,
}

impl D4Bwd {
    fn new(x: &[Scalar]) -> Self {
        let (a0, a1, a2, a3) = (&x[0], &x[1], &x[2], &x[3]);
        let (b0, b1, b2, b3) = (&x[4], &x[5], &x[6], &x[7]);
        let m = [a0 + b0, a1 + b1, a2 + b2, a3 + b3];
        let b = [b0, b1, b2, b3];
        let d = |i: usize, j: usize| b[i] * b[j] * b0 + &m[i] * &m[j] * a0;
        let cp = (a1 * a2 * a3 + a1 * a3 * b2 + a1 * a2 * b3 + a2 * a3 * b1) * a0 * b0
            + k(2) * a3 * b1 * b2 * b0 * (a0 + b0);
        let d12 = d(1, 2);
        let kk = k(2) * &m[3] * &m[0] * &d12 - cp;
        D4Bwd {
            d12,
            d23: d(2, 3),
            d13: d(1, 3),
            m,
            kk,
        }
    }
}

fn ns_pivot_form(tag: NsTag, forward: bool, x: &[Scalar]) -> Result<PivotForm, SfError> {
    let zero = Scalar::zero;
    let form = |index: usize, poly: Vec<Scalar>, stated: usize| PivotForm {
        index,
        poly,
        stated_degree: stated,
    };
    Ok(match (tag, forward) {
        (NsTag::I, _) => form(0, vec![-&x[1], k(1)], 1),
        (NsTag::Ii, _) => {
            let (a, b) = (&x[0], &x[1]);
            form(1, vec![-(a * a + k(2) * a * b), zero(), k(1)], 2)
        }
        (NsTag::Iii, true) => form(1, vec![-(&x[0] + &x[2]), k(1)], 1),
        (NsTag::Iii, false) => {
            let (ap, bp, cp) = (&x[0], &x[1], &x[2]);
            let t = ap + cp;
            form(2, vec![-(ap * bp * bp * &t), zero(), &t * &t], 2)
        }
        (NsTag::Iv, true) => {
            let (a1, a2, a3, a2p) = (&x[0], &x[1], &x[2], &x[3]);
            let a13 = a1 + a3;
            let m = a2 + a2p;
            let xx = &a13 * a2 + k(2) * a1 * a2p;
            let delta = a2 * a2 * &a13 * &a13 + k(4) * a1 * a2 * a2p * a3;
            form(
                0,
                vec![&xx * &xx - delta, k(-4) * &m * &xx, k(4) * &m * &m],
                2,
            )
        }
        (NsTag::Iv, false) => {
            let (b1, b2, b3, b2p) = (&x[0], &x[1], &x[2], &x[3]);
            let p = b1 * (b1 + b3);
            let delta = b3 * b3 + q(&(b2 * b3 * (b1 + b3)), b2p)?;
            form(0, vec![&p * &p, k(-2) * &p * b1, b1 * b1 - delta], 2)
        }
        (NsTag::C3, true) => {
            let (a, b, c, e, f) = (&x[0], &x[1], &x[2], &x[4], &x[5]);
            let aa = a * b * c + a * b * e + a * e * f + c * e * f;
            form(4, vec![-aa, a * b + a * f + c * f], 4)
        }
        (NsTag::C3, false) => {
            let (ap, bp, cp, ep, fp) = (&x[0], &x[1], &x[2], &x[4], &x[5]);
            let u = ap + cp + fp;
            let z = ep * ep * fp;
            let w = bp + ep;
            let s4 = ap * bp + ap * ep + cp * ep + ep * fp;
            let s5 = ep * (bp * cp + bp * fp + ep * fp);
            form(
                4,
                vec![
                    &s5 * &z - &s4 * &w * &z - &z * &z,
                    k(2) * &s4 * &z,
                    &s4 * &u * &w - &s4 * &s4 - &s5 * &u,
                ],
                2,
            )
        }
        (NsTag::B3, true) => {
            let (a, b, c, e, f) = (&x[0], &x[1], &x[2], &x[4], &x[5]);
            let s = a + c + e;
            let g = a * b + a * f + c * f;
            let h = e * e * f * f;
            let aa = k(2) * a * b * e * f
                + k(2) * a * e * f * f
                + k(2) * c * e * f * f
                + a * b * b * c
                + a * b * b * e;
            form(
                4,
                vec![
                    &h * &s * &s,
                    -(&s * (&aa + k(2) * &h)),
                    &aa + &g * &g + &h,
                ],
                2,
            )
        }
        (NsTag::B3, false) => {
            let (ap, bp, cp, ep, fp) = (&x[0], &x[1], &x[2], &x[4], &x[5]);
            let u = ap + cp + fp;
            let c0 = ep * ep * fp * fp * (ap * bp + ap * ep + cp * ep);
            let c1 = -(ep
                * fp
                * (ap * ap * bp
                    + ap * ap * ep
                    + k(2) * ap * bp * cp
                    + k(2) * ap * bp * fp
                    + k(2) * ap * cp * ep
                    + k(2) * ap * ep * fp
                    + cp * cp * ep
                    + k(2) * cp * ep * fp));
            let c2 = u * (ap * bp * cp + ap * bp * fp + ap * ep * fp + cp * ep * fp);
            form(4, vec![c0, c1, c2], 2)
        }
        (NsTag::D4, true) => form(4, D4Fwd::new(x).pivot_poly(), 4),
        (NsTag::D4, false) => {
            let d = D4Bwd::new(x);
            let delta = &d.d12 * &d.d23 * &d.d13;
            let m0 = &d.m[0];
            form(
                3,
                vec![
                    &delta * m0 * m0,
                    k(2) * &delta * m0 - &d.kk * &d.kk,
                    delta,
                ],
                2,
            )
        }
    })
}

/// All outputs from the inputs and a candidate pivot value.
fn ns_complete(tag: NsTag, forward: bool, x: &[Scalar], p: &Scalar) -> Result<Vec<Scalar>, SfError> {
    Ok(match (tag, forward) {
        (NsTag::I, _) => vec![p.clone(), x[0].clone()],
        (NsTag::Ii, _) => vec![&x[0] + &x[1] - p, p.clone()],
        (NsTag::Iii, true) => {
            let (a, b, c) = (&x[0], &x[1], &x[2]);
            let p2 = p * p;
            vec![q(&(b * c * c), &p2)?, p.clone(), q(&(a * b * (a + k(2) * c)), &p2)?]
        }
        (NsTag::Iii, false) => {
            let (ap, bp, cp) = (&x[0], &x[1], &x[2]);
            let t = ap + cp;
            let a = q(&(bp * bp * cp), &(bp * &t + p * &t))?;
            vec![a, t, p.clone()]
        }
        (NsTag::Iv, true) => {
            let (a1, a2, a3, a2p) = (&x[0], &x[1], &x[2], &x[3]);
            let a13 = a1 + a3;
            let m = a2 + a2p;
            let xx = &a13 * a2 + k(2) * a1 * a2p;
            let yy = a1 * a2 + a2 * a3 + k(2) * a2p * a3;
            let s = k(2) * &m * p - &xx;
            let xs = &xx + &s;
            let b3 = q(&(k(2) * a2p * a3 * a3), &(&yy + &s))?;
            let b2p = q(&(k(4) * a1 * a1 * a2p * &m * &m), &(&xs * &xs))?;
            vec![p.clone(), &m - &b2p, b3, b2p]
        }
        (NsTag::Iv, false) => {
            let (b1, b2, b3, b2p) = (&x[0], &x[1], &x[2], &x[3]);
            let b13 = b1 + b3;
            let s = q(&(b1 * &b13), p)? - b1;
            let b1s = b1 + &s;
            let a3 = q(&(&b13 * &s), &b1s)?;
            let a2p = q(&(b2p * &b1s * &b1s), &(&b13 * &b13))?;
            let a2 = q(
                &(b2 * b2 * b1),
                &(b2 * b1 + b2 * b3 + k(2) * b2p * b3 + k(2) * b2p * &s),
            )?;
            vec![p.clone(), a2, a3, a2p]
        }
        (NsTag::C3, true) | (NsTag::B3, true) => {
            let (a, b, c, d, e, f) = (&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]);
            let bp = a + c + e - p;
            let ap = q(&(b * c + b * e + e * f - (b + f) * p), &bp)?;
            let fp = if tag == NsTag::C3 {
                q(&(e * e * f), &(p * p))?
            } else {
                q(&(e * f), p)?
            };
            let cp = b + f - &ap - &fp;
            vec![ap, bp, cp, d.clone(), p.clone(), fp]
        }
        (NsTag::C3, false) | (NsTag::B3, false) => {
            let (ap, bp, cp, dp, ep, fp) = (&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]);
            let u = ap + cp + fp;
            let w = bp + ep;
            let s4 = ap * bp + ap * ep + cp * ep + ep * fp;
            let f = if tag == NsTag::C3 {
                q(&(ep * ep * fp), &(p * p))?
            } else {
                q(&(ep * fp), p)?
            };
            let b = &u - &f;
            let c = q(&(&s4 - p * &u), &b)?;
            let a = &w - p - &c;
            vec![a, b, c, dp.clone(), p.clone(), f]
        }
        (NsTag::D4, true) => {
            let d = D4Fwd::new(x);
            let ec = eval(&d.e_minus_c(), p);
            if !ec.is_positive()? {
                return Err(SfError::Domain("E − C is not positive".into()));
            }
            let root = q(&ec, &(k(2) * p * p))?;
            let den = |dd: &Scalar, i: usize, j: usize| dd + &d.m[i] * &d.m[j] * p;
            let b3 = q(&(&root * p), &den(&d.d12, 1, 2))?;
            let b1 = q(&(&root * p), &den(&d.d23, 2, 3))?;
            let b2 = q(&(&root * p), &den(&d.d13, 1, 3))?;
            let m = &d.m;
            vec![
                &m[0] - p,
                &m[1] - &b1,
                &m[2] - &b2,
                &m[3] - &b3,
                p.clone(),
                b1,
                b2,
                b3,
            ]
        }
        (NsTag::D4, false) => {
            let d = D4Bwd::new(x);
            if !d.kk.is_positive()? {
                return Err(SfError::Domain("K is not positive".into()));
            }
            let m = &d.m;
            let base = &m[0] + p;
            let b3 = q(&d.kk, &(&base * &d.d12))?;
            let b1 = q(&d.kk, &(&base * &d.d23))?;
            let b2 = q(&d.kk, &(&base * &d.d13))?;
            vec![
                &m[1] - &b1,
                &m[2] - &b2,
                &m[3] - &b3,
                p.clone(),
                b1,
                b2,
                b3,
                &m[0] - p,
            ]
        }
    })
}

fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

/// Structural vanishing: exact zero, or an enclosure containing zero. Used only where the
/// coefficient is known to vanish identically.
fn vanishes(x: &Scalar) -> bool {
    match x {
        Scalar::Interval(i) => i.contains_zero(),
        _ => x.is_exact_zero(),
    }
}

/// The non-standard moves, indexed by their local type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NsTag {
    I,
    Ii,
    Iii,
    Iv,
    C3,
    B3,
    D4,
}

/// Outcome of pivot root selection.
#[derive(Debug, Clone)]
pub struct PivotSolution {
    pub output: Vec<Scalar>,
    pub form: PivotForm,
    /// Degree after dropping identically vanishing leading coefficients.
    pub effective_degree: usize,
    /// Number of real roots of the pivot polynomial.
    pub real_roots: usize,
    /// Number of roots giving an all-positive output.
    pub admissible: usize,
}

pub fn pivot_form(tag: NsTag, forward: bool, x: &[Scalar]) -> Result<PivotForm, SfError> {
    ns_pivot_form(tag, forward, x)
}

pub fn pivot_complete(tag: NsTag, forward: bool, x: &[Scalar], p: &Scalar) -> Result<Vec<Scalar>, SfError> {
    ns_complete(tag, forward, x, p)
}

pub fn poly_eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    eval(poly, x)
}

/// Real roots of a polynomial of degree at most two after trimming.
fn real_roots(poly: &[Scalar]) -> Result<(usize, Vec<Scalar>), SfError> {
    let mut deg = poly.len() - 1;
    while deg > 0 && vanishes(&poly[deg]) {
        deg -= 1;
    }
    match deg {
        0 => Err(SfError::Domain("pivot polynomial is constant".into())),
        1 => Ok((1, vec![q(&-&poly[0], &poly[1])?])),
        2 => {
            let (c0, c1, c2) = (&poly[0], &poly[1], &poly[2]);
            let disc = c1 * c1 - k(4) * c2 * c0;
            let two_a = k(2) * c2;
            match disc.sign()? {
                std::cmp::Ordering::Less => Ok((2, vec![])),
                std::cmp::Ordering::Equal => Ok((2, vec![q(&-c1, &two_a)?])),
                std::cmp::Ordering::Greater => {
                    let r = disc.sqrt()?;
                    Ok((2, vec![q(&(-c1 + &r), &two_a)?, q(&(-c1 - &r), &two_a)?]))
                }
            }
        }
        _ => Err(SfError::Domain(format!("pivot polynomial of degree {deg}"))),
    }
}

/// Solves the pivot polynomial and keeps the roots whose completed output is positive.
pub fn solve_pivoted(tag: NsTag, forward: bool, x: &[Scalar]) -> Result<PivotSolution, SfError> {
    let form = ns_pivot_form(tag, forward, x)?;
    let (effective_degree, roots) = real_roots(&form.poly)?;
    let real = roots.len();
    let mut keep: Vec<Vec<Scalar>> = Vec::new();
    // A candidate that cannot be decided is dropped when another one is certified
    // positive, since the positive solution is unique.
    let mut undecided: Option<ScalarError> = None;
    for r in roots {
        let out = match ns_complete(tag, forward, x, &r) {
            Ok(o) => o,
            Err(SfError::Arithmetic(e)) if e.is_undecidable() => {
                undecided = Some(e);
                continue;
            }
            Err(_) => continue,
        };
        let mut ok = true;
        for v in &out {
            match v.is_positive() {
                Ok(true) => {}
                Ok(false) => {
                    ok = false;
                    break;
                }
                Err(e) => {
                    ok = false;
                    undecided = Some(e);
                    break;
                }
            }
        }
        if ok {
            keep.push(out);
        }
    }
    if let (true, Some(e)) = (keep.is_empty(), undecided) {
        return Err(SfError::Arithmetic(e));
    }
    let admissible = keep.len();
    match admissible {
        1 => Ok(PivotSolution {
            output: keep.pop().unwrap_or_default(),
            form,
            effective_degree,
            real_roots: real,
            admissible,
        }),
        0 => Err(SfError::Domain("no pivot root gives a positive output".into())),
        n => Err(SfError::Domain(format!("{n} pivot roots give positive outputs"))),
    }
}

