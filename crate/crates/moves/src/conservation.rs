//! Polynomial identities relating the unprimed and primed coordinates of the
//! non-standard moves.

use pinned_groups::{Scalar, ScalarError};
use weyl_core::MoveTag;

use crate::transition::{Direction, MoveKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Law {
    pub name: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl Law {
    pub fn holds(&self) -> Result<bool, ScalarError> {
        self.lhs.equals(&self.rhs)
    }
}

fn k(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

fn law(name: &str, lhs: Scalar, rhs: Scalar) -> Law {
    Law {
        name: name.into(),
        lhs,
        rhs,
    }
}

/// The laws of a move, given the input and output of the map in direction `kind`.
pub fn conservation_laws(kind: MoveKind, input: &[Scalar], output: &[Scalar]) -> Vec<Law> {
    let (x, y) = match kind.direction {
        Direction::Forward => (input, output),
        Direction::Backward => (output, input),
    };
    match kind.tag {
        MoveTag::Ns43i => vec![law("a′ = b", y[0].clone(), x[1].clone()), law("b′ = a", y[1].clone(), x[0].clone())],
        MoveTag::Ns44 => {
            let (a, b, ap, bp) = (&x[0], &x[1], &y[0], &y[1]);
            vec![law("a+b", a + b, ap + bp), law("a²+2ab", a * a + k(2) * a * b, bp * bp)]
        }
        MoveTag::Ns46 => {
            let (a1, a2, a3, a2p) = (&x[0], &x[1], &x[2], &x[3]);
            let (b1, b2, b3, b2p) = (&y[0], &y[1], &y[2], &y[3]);
            vec![
                law("a1+a3", a1 + a3, b1 + b3),
                law("a2+a2′", a2 + a2p, b2 + b2p),
                law("a1²a2′", a1 * a1 * a2p, b1 * b1 * b2p),
                law("(a1+a3)a2+2a1a2′", (a1 + a3) * a2 + k(2) * a1 * a2p, b1 * (b2 + k(2) * b2p)),
            ]
        }
        MoveTag::Ns47 | MoveTag::Ns48 => {
            let (a, b, c, d, e, f) = (&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]);
            let (ap, bp, cp, dp, ep, fp) = (&y[0], &y[1], &y[2], &y[3], &y[4], &y[5]);
            let mut v = vec![
                law("d", d.clone(), dp.clone()),
                law("a+c+e", a + c + e, bp + ep),
                law("b+f", b + f, ap + cp + fp),
            ];
            if kind.tag == MoveTag::Ns47 {
                v.push(law("e²f", e * e * f, ep * ep * fp));
                v.push(law(
                    "bc+be+ef",
                    b * c + b * e + e * f,
                    ap * bp + ap * ep + cp * ep + ep * fp,
                ));
                v.push(law(
                    "abc+abe+aef+cef+e²f",
                    a * b * c + a * b * e + a * e * f + c * e * f + e * e * f,
                    ep * (bp * cp + bp * fp + ep * fp),
                ));
            } else {
                v.push(law("ef", e * f, ep * fp));
                v.push(law(
                    "bc+be+ef",
                    b * c + b * e + e * f,
                    ap * bp + ap * ep + cp * ep + ep * fp,
                ));
                let cf = cp + fp;
                v.push(law(
                    "2abef+2aef²+2cef²+ab²c+ab²e",
                    k(2) * a * b * e * f + k(2) * a * e * f * f + k(2) * c * e * f * f + a * b * b * c + a * b * b * e,
                    ep * bp * (&cf * &cf + fp * fp),
                ));
            }
            v
        }
        MoveTag::Ns49 => {
            let a = [&x[3], &x[0], &x[1], &x[2]];
            let b = [&x[7], &x[4], &x[5], &x[6]];
            let ap = [&y[0], &y[1], &y[2], &y[3]];
            let bp = [&y[4], &y[5], &y[6], &y[7]];
            let mut v: Vec<Law> = (0..4)
                .map(|i| law(&format!("a{i}+b{i}"), a[i] + b[i], ap[i] + bp[i]))
                .collect();
            for (i, j) in [(1, 2), (2, 3), (1, 3)] {
                v.push(law(
                    &format!("pair {i}{j}"),
                    (a[i] * a[j] + a[i] * b[j] + b[i] * a[j]) * (a[0] + b[0]) + b[i] * b[j] * b[0],
                    (ap[i] * ap[j] + ap[i] * bp[j] + bp[i] * ap[j]) * bp[0],
                ));
            }
            v.push(law(
                "C",
                k(2) * a[3] * b[1] * b[2] * a[0] * (a[0] + b[0]) + b[1] * b[2] * b[3] * a[0] * b[0],
                (ap[1] * ap[2] * ap[3] + ap[1] * ap[3] * bp[2] + ap[1] * ap[2] * bp[3] + ap[2] * ap[3] * bp[1])
                    * ap[0]
                    * bp[0]
                    + k(2) * ap[3] * bp[1] * bp[2] * bp[0] * (ap[0] + bp[0]),
            ));
            v
        }
        _ => Vec::new(),
    }
}

/// Names of the laws that fail; errors when a comparison is undecidable.
pub fn failed_laws(kind: MoveKind, input: &[Scalar], output: &[Scalar]) -> Result<Vec<String>, ScalarError> {
    let mut bad = Vec::new();
    for l in conservation_laws(kind, input, output) {
        if !l.holds()? {
            bad.push(l.name);
        }
    }
    Ok(bad)
}
