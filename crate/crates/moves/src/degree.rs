use serde::{Deserialize, Serialize};

use pinned_groups::{escalate, Scalar};

use crate::formulas::{poly_eval, solve_pivoted};
use crate::transition::{evaluate_closed_form, ns_tag, Direction, MoveKind};
use crate::MoveError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub kind: MoveKind,
    /// Output coordinate determined first, in the tuple order of the move.
    pub pivot_index: usize,
    /// Degree of the pivot polynomial before cancellation.
    pub stated_degree: usize,
    pub effective_degree: usize,
    /// Degree of each output in the solving order: the pivot, then the others.
    pub sequence: Vec<usize>,
    pub inverse_sequence: Vec<usize>,
    pub real_roots: usize,
    pub admissible_roots: usize,
    pub pivot_residual_ok: bool,
    /// Agreement with the literal closed form, for the moves that have one.
    pub closed_form_agrees: Option<bool>,
    pub round_trip_ok: bool,
}

impl DegreeReport {
    /// Either the map or its inverse is solved by roots of degree at most two.
    pub fn triangular(&self) -> bool {
        let m = |s: &[usize]| s.iter().copied().max().unwrap_or(0);
        m(&self.sequence).min(m(&self.inverse_sequence)) <= 2
    }
}

/// Zero test for a polynomial residual, relative to the size of its terms.
fn residual_vanishes(poly: &[Scalar], x: &Scalar) -> Result<bool, MoveError> {
    let r = poly_eval(poly, x);
    match &r {
        Scalar::Interval(i) => {
            if !i.contains_zero() {
                return Ok(false);
            }
            let mag = x.to_f64().abs();
            let scale: f64 = poly
                .iter()
                .enumerate()
                .map(|(k, c)| c.to_f64().abs() * mag.powi(k as i32))
                .sum();
            let w = pinned_groups::Scalar::from_rational(i.width()).to_f64();
            Ok(w <= scale * 2f64.powi(-100))
        }
        exact => Ok(exact.is_exact_zero()),
    }
}

fn sequence(effective: usize, n: usize) -> Vec<usize> {
    std::iter::once(effective).chain(std::iter::repeat(1).take(n - 1)).collect()
}

/// Confirms the triangular form of a non-standard move at one input.
pub fn triangular_degree_check(kind: MoveKind, input: &[Scalar]) -> Result<DegreeReport, MoveError> {
    escalate(|| check_once(kind, input))
}

fn check_once(kind: MoveKind, input: &[Scalar]) -> Result<DegreeReport, MoveError> {
    let ns = ns_tag(kind.tag).ok_or_else(|| MoveError::Unsupported(format!("{} is a standard move", kind.tag.name())))?;
    if input.len() != kind.arity() {
        return Err(MoveError::Arity {
            expected: kind.arity(),
            got: input.len(),
        });
    }
    let forward = kind.direction == Direction::Forward;
    let root_err = |e| crate::transition::lift_root_error(kind.tag, e);
    let sol = solve_pivoted(ns, forward, input).map_err(root_err)?;
    let inv = solve_pivoted(ns, !forward, &sol.output).map_err(root_err)?;
    let pivot = &sol.output[sol.form.index];
    let pivot_residual_ok = residual_vanishes(&sol.form.poly, pivot)?;
    let mut round_trip_ok = true;
    for (a, b) in inv.output.iter().zip(input) {
        round_trip_ok &= a.equals(b)?;
    }
    let closed_form_agrees = if kind.needs_reals() {
        None
    } else {
        let cf = evaluate_closed_form(kind, input)?;
        let mut ok = true;
        for (a, b) in cf.iter().zip(&sol.output) {
            ok &= a.equals(b)?;
        }
        Some(ok)
    };
    let n = input.len();
    let report = DegreeReport {
        kind,
        pivot_index: sol.form.index,
        stated_degree: sol.form.stated_degree,
        effective_degree: sol.effective_degree,
        sequence: sequence(sol.effective_degree, n),
        inverse_sequence: sequence(inv.effective_degree, n),
        real_roots: sol.real_roots,
        admissible_roots: sol.admissible,
        pivot_residual_ok,
        closed_form_agrees,
        round_trip_ok,
    };
    if !report.pivot_residual_ok
        || !report.round_trip_ok
        || report.closed_form_agrees == Some(false)
        || !report.triangular()
        || report.effective_degree > report.stated_degree
    {
        return Err(MoveError::DegreeViolation(format!("{report:?}")));
    }
    Ok(report)
}
