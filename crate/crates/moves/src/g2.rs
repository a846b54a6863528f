//! The standard G2 braid move, obtained by folding D4 along its triality: the short G2
//! letter is the product of the three commuting leaf letters of D4 and the long letter is
//! the centre. The G2 relation of length six unfolds to a relation between two reduced
//! words of the longest element of D4, which is a chain of commutations and A2 moves.

use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use crate::formulas::std_a2;
use crate::semifield::{Semifield, SfError};

const CENTRE: u8 = 2;
const LEAVES: [u8; 3] = [1, 3, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Commute(usize),
    Braid(usize),
}

fn unfold(first_short: bool) -> Vec<u8> {
    (0..6)
        .flat_map(|k| {
            if (k % 2 == 0) == first_short {
                LEAVES.to_vec()
            } else {
                vec![CENTRE]
            }
        })
        .collect()
}

fn neighbours(w: &[u8]) -> Vec<(Step, Vec<u8>)> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        let (x, y) = (w[p], w[p + 1]);
        if x != y && x != CENTRE && y != CENTRE {
            let mut v = w.to_vec();
            v.swap(p, p + 1);
            out.push((Step::Commute(p), v));
        }
        if p + 2 < w.len() && w[p + 2] == x && x != y && (x == CENTRE || y == CENTRE) {
            let mut v = w.to_vec();
            v[p] = y;
            v[p + 1] = x;
            v[p + 2] = y;
            out.push((Step::Braid(p), v));
        }
    }
    out
}

fn find_path(from: &[u8], to: &[u8]) -> Vec<Step> {
    let mut prev: HashMap<Vec<u8>, (Vec<u8>, Step)> = HashMap::new();
    let mut queue = VecDeque::from([from.to_vec()]);
    let mut seen = std::collections::HashSet::from([from.to_vec()]);
    while let Some(w) = queue.pop_front() {
        if w == to {
            break;
        }
        for (step, v) in neighbours(&w) {
            if seen.insert(v.clone()) {
                prev.insert(v.clone(), (w.clone(), step));
                queue.push_back(v);
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = to.to_vec();
    while cur != from {
        let (p, s) = prev.get(&cur).expect("unfolded G2 words are braid equivalent in D4").clone();
        steps.push(s);
        cur = p;
    }
    steps.reverse();
    steps
}

fn path(first_short: bool) -> &'static [Step] {
    static SHORT: OnceLock<Vec<Step>> = OnceLock::new();
    static LONG: OnceLock<Vec<Step>> = OnceLock::new();
    let cell = if first_short { &SHORT } else { &LONG };
    cell.get_or_init(|| find_path(&unfold(first_short), &unfold(!first_short)))
}

/// Number of D4 moves in the unfolded relation.
pub fn unfolded_path_len(first_short: bool) -> usize {
    path(first_short).len()
}

/// Runs the unfolded relation on D4 coordinates; returns the twelve target coordinates.
pub fn unfolded<S: Semifield>(first_short: bool, coords: &[S]) -> Result<Vec<S>, SfError> {
    let mut c: Vec<S> = Vec::with_capacity(12);
    for (k, x) in coords.iter().enumerate() {
        let reps = if (k % 2 == 0) == first_short { 3 } else { 1 };
        c.extend(std::iter::repeat(x.clone()).take(reps));
    }
    for step in path(first_short) {
        match *step {
            Step::Commute(p) => c.swap(p, p + 1),
            Step::Braid(p) => {
                let out = std_a2(&c[p..p + 3])?;
                c.splice(p..p + 3, out);
            }
        }
    }
    Ok(c)
}

/// x_i(c0) x_j(c1) … x_j(c5) = x_j(c0′) x_i(c1′) … x_i(c5′) in G2.
pub fn std_g2<S: Semifield>(first_short: bool, coords: &[S]) -> Result<Vec<S>, SfError> {
    let c = unfolded(first_short, coords)?;
    let target = unfold(!first_short);
    let mut out = Vec::with_capacity(6);
    let mut pos = 0;
    for _ in 0..6 {
        out.push(c[pos].clone());
        pos += if LEAVES.contains(&target[pos]) { 3 } else { 1 };
    }
    Ok(out)
}
