use serde::{Deserialize, Serialize};
use std::fmt;

use pinned_groups::Scalar;
use weyl_core::{CartanDatum, MoveSite, MoveTag};

use crate::formulas::{self, solve_pivoted, NsTag};
use crate::g2::std_g2;
use crate::semifield::{Semifield, SfError};
use crate::MoveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn parse(s: &str) -> Option<Direction> {
        match s.trim().to_ascii_lowercase().as_str() {
            "forward" | "fwd" | "f" => Some(Direction::Forward),
            "backward" | "bwd" | "b" | "inverse" => Some(Direction::Backward),
            _ => None,
        }
    }

    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// A move together with the direction in which its coordinate map is applied. For the
/// non-standard moves, forward rewrites the source pattern to the target pattern; for
/// Std-B2 and Std-G2, forward starts with the short letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveKind {
    pub tag: MoveTag,
    pub direction: Direction,
}

impl MoveKind {
    pub fn new(tag: MoveTag, direction: Direction) -> Self {
        MoveKind { tag, direction }
    }

    pub fn arity(&self) -> usize {
        self.tag.arity()
    }

    pub fn inverse(&self) -> MoveKind {
        MoveKind {
            tag: self.tag,
            direction: self.direction.reversed(),
        }
    }

    /// Whether the coordinate map needs square roots.
    pub fn needs_sqrt(&self) -> bool {
        match self.tag {
            MoveTag::Ns44 | MoveTag::Ns46 | MoveTag::Ns47 | MoveTag::Ns48 | MoveTag::Ns49 => true,
            MoveTag::Ns45 => self.direction == Direction::Backward,
            _ => false,
        }
    }

    /// Whether the coordinate map needs subtraction and so only runs over the reals.
    pub fn needs_reals(&self) -> bool {
        matches!(self.tag, MoveTag::Ns47 | MoveTag::Ns48 | MoveTag::Ns49)
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tag.name(), self.direction)
    }
}

pub(crate) fn ns_tag(tag: MoveTag) -> Option<NsTag> {
    Some(match tag {
        MoveTag::Ns43i => NsTag::I,
        MoveTag::Ns44 => NsTag::Ii,
        MoveTag::Ns45 => NsTag::Iii,
        MoveTag::Ns46 => NsTag::Iv,
        MoveTag::Ns47 => NsTag::C3,
        MoveTag::Ns48 => NsTag::B3,
        MoveTag::Ns49 => NsTag::D4,
        _ => return None,
    })
}

fn to_scalars<S: Semifield>(x: &[S]) -> Option<Vec<Scalar>> {
    x.iter().map(|v| v.sf_as_scalar().cloned()).collect()
}

fn from_scalars<S: Semifield>(x: Vec<Scalar>) -> Result<Vec<S>, SfError> {
    x.into_iter()
        .map(|v| S::sf_from_scalar(v).ok_or_else(|| SfError::Unsupported("scalar conversion".into())))
        .collect()
}

fn generic_ns<S: Semifield>(tag: MoveTag, forward: bool, x: &[S]) -> Result<Vec<S>, SfError> {
    match (tag, forward) {
        (MoveTag::Ns43i, _) => formulas::ns43i(x),
        (MoveTag::Ns44, true) => formulas::ns44_forward(x),
        (MoveTag::Ns44, false) => formulas::ns44_backward(x),
        (MoveTag::Ns45, true) => formulas::ns45_forward(x),
        (MoveTag::Ns45, false) => formulas::ns45_backward(x),
        (MoveTag::Ns46, true) => formulas::ns46_forward(x),
        (MoveTag::Ns46, false) => formulas::ns46_backward(x),
        _ => Err(SfError::Unsupported(format!(
            "{} outside the positive reals (it needs subtraction)",
            tag.name()
        ))),
    }
}

/// Evaluates the move on coordinates in the tuple order of its defining identity.
/// Over real scalars the non-standard moves go through pivot root selection, which
/// asserts that exactly one root gives a positive output.
pub fn evaluate_move<S: Semifield>(kind: MoveKind, input: &[S]) -> Result<Vec<S>, MoveError> {
    if input.len() != kind.arity() {
        return Err(MoveError::Arity {
            expected: kind.arity(),
            got: input.len(),
        });
    }
    if let Some(xs) = to_scalars(input) {
        for (k, v) in xs.iter().enumerate() {
            if !v.is_positive().map_err(SfError::from)? {
                return Err(MoveError::NotPositive(k));
            }
        }
    }
    let forward = kind.direction == Direction::Forward;
    let out = match kind.tag {
        MoveTag::StdA1A1 => formulas::std_a1a1(input)?,
        MoveTag::StdA2 => formulas::std_a2(input)?,
        MoveTag::StdB2 if forward => formulas::std_b2_short_first(input)?,
        MoveTag::StdB2 => formulas::std_b2_long_first(input)?,
        MoveTag::StdG2 => std_g2(forward, input)?,
        MoveTag::StarSwap => input.to_vec(),
        tag => {
            let ns = ns_tag(tag).ok_or_else(|| MoveError::Internal(format!("{tag:?}")))?;
            match to_scalars(input) {
                Some(xs) => from_scalars(solve_pivoted(ns, forward, &xs).map_err(|e| lift_root_error(tag, e))?.output)?,
                None => generic_ns(tag, forward, input)?,
            }
        }
    };
    Ok(out)
}

pub(crate) fn lift_root_error(tag: MoveTag, e: SfError) -> MoveError {
    match e {
        SfError::Domain(msg) => MoveError::RootSelection {
            tag: tag.name().to_string(),
            detail: msg,
        },
        other => MoveError::Semifield(other),
    }
}

/// The closed formulas evaluated literally, without root selection.
pub fn evaluate_closed_form<S: Semifield>(kind: MoveKind, input: &[S]) -> Result<Vec<S>, MoveError> {
    if input.len() != kind.arity() {
        return Err(MoveError::Arity {
            expected: kind.arity(),
            got: input.len(),
        });
    }
    match kind.tag {
        t if t.is_standard() => evaluate_move(kind, input),
        t => Ok(generic_ns(t, kind.direction == Direction::Forward, input)?),
    }
}

/// Positions of the coordinates of a non-standard move inside the word prefix: the k-th
/// forward input sits at source position `fwd_in[k]` and the k-th forward output lands
/// at target position `fwd_out[k]`.
pub fn ns_windows(tag: MoveTag) -> Option<(Vec<usize>, Vec<usize>)> {
    Some(match tag {
        MoveTag::Ns43i => (vec![0, 1], vec![0, 1]),
        MoveTag::Ns44 => (vec![1, 0], vec![1, 0]),
        MoveTag::Ns45 => (vec![2, 1, 0], vec![2, 1, 0]),
        MoveTag::Ns46 => (vec![1, 3, 2, 0], vec![1, 2, 3, 0]),
        MoveTag::Ns47 | MoveTag::Ns48 => (vec![5, 4, 3, 2, 1, 0], vec![5, 4, 3, 2, 1, 0]),
        MoveTag::Ns49 => (vec![5, 6, 7, 4, 2, 3, 1, 0], vec![7, 5, 4, 6, 3, 2, 1, 0]),
        _ => return None,
    })
}

/// Direction of the coordinate map of a move site in a given datum.
pub fn site_kind(datum: &CartanDatum, site: &MoveSite) -> MoveKind {
    let direction = match site.tag {
        MoveTag::StdB2 | MoveTag::StdG2 => {
            let (i, j) = (site.letters[0], site.letters[1]);
            if datum.c(i, j) < -1 {
                Direction::Forward
            } else {
                Direction::Backward
            }
        }
        t if t.is_standard() => Direction::Forward,
        _ => {
            if site.forward {
                Direction::Forward
            } else {
                Direction::Backward
            }
        }
    };
    MoveKind::new(site.tag, direction)
}

/// Rewrites coordinates indexed by word positions across one move site.
pub fn apply_site<S: Semifield>(
    datum: &CartanDatum,
    site: &MoveSite,
    coords: &[S],
) -> Result<Vec<S>, MoveError> {
    let kind = site_kind(datum, site);
    let p = site.position;
    let mut out = coords.to_vec();
    if site.tag.is_standard() {
        let m = site.tag.arity();
        if p + m > coords.len() {
            return Err(MoveError::PathMismatch(format!("{} at {p} overruns the word", site.tag.name())));
        }
        let res = evaluate_move(kind, &coords[p..p + m])?;
        out.splice(p..p + m, res);
        return Ok(out);
    }
    let (fin, fout) = ns_windows(site.tag).ok_or_else(|| MoveError::Internal("missing window".into()))?;
    let n = fin.len();
    if p + n > coords.len() {
        return Err(MoveError::PathMismatch(format!("{} overruns the word", site.tag.name())));
    }
    let (src, dst) = if kind.direction == Direction::Forward {
        (&fin, &fout)
    } else {
        (&fout, &fin)
    };
    let input: Vec<S> = src.iter().map(|&k| coords[p + k].clone()).collect();
    let res = evaluate_move(kind, &input)?;
    for (k, v) in res.into_iter().enumerate() {
        out[p + dst[k]] = v;
    }
    Ok(out)
}

/// A path of move sites from one word to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub path: Vec<MoveSite>,
}

impl TransitionMap {
    pub fn identity(word: Vec<usize>) -> Self {
        TransitionMap {
            source: word.clone(),
            target: word,
            path: Vec::new(),
        }
    }

    /// Checks that the path rewrites the source word into the target word.
    pub fn validate(&self) -> Result<(), MoveError> {
        let mut w = self.source.clone();
        for (n, site) in self.path.iter().enumerate() {
            w = site
                .apply(&w)
                .ok_or_else(|| MoveError::PathMismatch(format!("step {n} ({}) does not apply", site.tag.name())))?;
        }
        if w != self.target {
            return Err(MoveError::PathMismatch("path does not end at the target word".into()));
        }
        Ok(())
    }

    pub fn reversed(&self) -> TransitionMap {
        TransitionMap {
            source: self.target.clone(),
            target: self.source.clone(),
            path: self.path.iter().rev().map(weyl_core::braid::reverse_site).collect(),
        }
    }

    pub fn then(&self, next: &TransitionMap) -> Result<TransitionMap, MoveError> {
        if self.target != next.source {
            return Err(MoveError::PathMismatch("maps do not compose".into()));
        }
        let mut path = self.path.clone();
        path.extend(next.path.iter().cloned());
        Ok(TransitionMap {
            source: self.source.clone(),
            target: next.target.clone(),
            path,
        })
    }

    /// Applies every move of the path to coordinates of the source word.
    pub fn compose<S: Semifield>(&self, datum: &CartanDatum, coords: &[S]) -> Result<Vec<S>, MoveError> {
        compose_transition(datum, self, coords)
    }
}

pub fn compose_transition<S: Semifield>(
    datum: &CartanDatum,
    map: &TransitionMap,
    coords: &[S],
) -> Result<Vec<S>, MoveError> {
    if coords.len() != map.source.len() {
        return Err(MoveError::Arity {
            expected: map.source.len(),
            got: coords.len(),
        });
    }
    let mut w = map.source.clone();
    let mut c = coords.to_vec();
    for (n, site) in map.path.iter().enumerate() {
        let next = site
            .apply(&w)
            .ok_or_else(|| MoveError::PathMismatch(format!("step {n} ({}) does not apply", site.tag.name())))?;
        c = apply_site(datum, site, &c)?;
        w = next;
    }
    if w != map.target {
        return Err(MoveError::PathMismatch("path does not end at the target word".into()));
    }
    Ok(c)
}

/// The transition map between two involution words of the same element, along a shortest
/// path of the braid graph.
pub fn transition_between(
    tw: &weyl_core::TwistedWeyl,
    source: &[usize],
    target: &[usize],
) -> Result<TransitionMap, MoveError> {
    let e = tw.involution_target(source)?;
    let g = weyl_core::braid_graph(tw, &tw.group().element(e))?;
    let s = g
        .vertex_index(source)
        .ok_or_else(|| MoveError::PathMismatch("source is not an involution word".into()))?;
    let t = g
        .vertex_index(target)
        .ok_or_else(|| MoveError::PathMismatch("target is not an involution word of the same element".into()))?;
    let path = g
        .path(s, t)
        .ok_or_else(|| MoveError::PathMismatch("words lie in different components".into()))?;
    Ok(TransitionMap {
        source: source.to_vec(),
        target: target.to_vec(),
        path,
    })
}
