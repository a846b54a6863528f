//! The monoid U^+(F) = ⊔_w U^+_w(F) for a semifield F, with points stored in the
//! coordinates of the canonical reduced word of their Weyl index.

use std::collections::{HashMap, VecDeque};

use moves::{apply_site, Semifield};
use weyl_core::{ElemId, MoveSite, MoveTag, WeylGroup};

use crate::ZoneError;

#[derive(Debug, Clone, PartialEq)]
pub struct UPoint<S> {
    pub index: ElemId,
    /// The canonical reduced word of `index`.
    pub word: Vec<usize>,
    pub coords: Vec<S>,
}

fn std_sites(group: &WeylGroup, word: &[usize]) -> Vec<MoveSite> {
    let d = group.datum();
    let mut out = Vec::new();
    for p in 0..word.len() {
        for j in 1..=d.rank() {
            let i = word[p];
            if i == j {
                continue;
            }
            let m = d.m(i, j);
            let Some(tag) = MoveTag::std_for_m(m) else { continue };
            if p + m <= word.len() && (0..m).all(|k| word[p + k] == if k % 2 == 0 { i } else { j }) {
                out.push(MoveSite {
                    tag,
                    position: p,
                    letters: vec![i, j],
                    forward: true,
                });
            }
        }
    }
    out
}

/// Rewrites coordinates on a reduced word, by standard braid moves, to a reduced word
/// accepted by `goal`.
fn rewrite_until<S: Semifield>(
    group: &WeylGroup,
    word: &[usize],
    coords: &[S],
    goal: impl Fn(&[usize]) -> bool,
) -> Result<(Vec<usize>, Vec<S>), ZoneError> {
    let budget = group.order() * word.len().max(1);
    let mut prev: HashMap<Vec<usize>, Option<(Vec<usize>, MoveSite)>> = HashMap::from([(word.to_vec(), None)]);
    let mut queue = VecDeque::from([word.to_vec()]);
    let mut found = None;
    while let Some(w) = queue.pop_front() {
        if goal(&w) {
            found = Some(w);
            break;
        }
        if prev.len() > budget {
            break;
        }
        for site in std_sites(group, &w) {
            let v = site.apply(&w).expect("site matches");
            if !prev.contains_key(&v) {
                prev.insert(v.clone(), Some((w.clone(), site)));
                queue.push_back(v);
            }
        }
    }
    let target = found.ok_or_else(|| ZoneError::Budget(format!("no rewrite of {word:?} within {budget} words")))?;
    let mut path = Vec::new();
    let mut cur = target.clone();
    while let Some(Some((p, site))) = prev.get(&cur) {
        path.push(site.clone());
        cur = p.clone();
    }
    path.reverse();
    let mut c = coords.to_vec();
    for site in &path {
        c = apply_site(group.datum(), site, &c)?;
    }
    Ok((target, c))
}

fn canonical<S: Semifield>(group: &WeylGroup, word: Vec<usize>, coords: Vec<S>) -> Result<UPoint<S>, ZoneError> {
    let index = group.id_of_word(&word)?;
    let canon = group.element(index).word;
    let (word, coords) = rewrite_until(group, &word, &coords, |w| w == canon.as_slice())?;
    Ok(UPoint { index, word, coords })
}

/// Multiplies a point on a reduced word by x_i(c) on the right.
fn push_letter<S: Semifield>(
    group: &WeylGroup,
    word: Vec<usize>,
    coords: Vec<S>,
    i: usize,
    c: &S,
) -> Result<(Vec<usize>, Vec<S>), ZoneError> {
    let e = group.id_of_word(&word)?;
    if !group.is_right_descent(e, i - 1) {
        let (mut w, mut cs) = (word, coords);
        w.push(i);
        cs.push(c.clone());
        return Ok((w, cs));
    }
    let (w, mut cs) = rewrite_until(group, &word, &coords, |w| w.last() == Some(&i))?;
    let last = cs.len() - 1;
    cs[last] = cs[last].sf_add(c);
    Ok((w, cs))
}

/// x_{i_1}(c_1)…x_{i_k}(c_k) in U^+(F) for any word.
pub fn usemifield_element<S: Semifield>(group: &WeylGroup, word: &[usize], coords: &[S]) -> Result<UPoint<S>, ZoneError> {
    if word.len() != coords.len() {
        return Err(ZoneError::Arity {
            expected: word.len(),
            got: coords.len(),
        });
    }
    let (mut w, mut c) = (Vec::new(), Vec::new());
    for (&i, x) in word.iter().zip(coords) {
        group.datum().check_letter(i)?;
        (w, c) = push_letter(group, w, c, i, x)?;
    }
    canonical(group, w, c)
}

pub fn usemifield_multiply<S: Semifield>(group: &WeylGroup, p: &UPoint<S>, q: &UPoint<S>) -> Result<UPoint<S>, ZoneError> {
    let (mut w, mut c) = (p.word.clone(), p.coords.clone());
    for (&i, x) in q.word.iter().zip(&q.coords) {
        (w, c) = push_letter(group, w, c, i, x)?;
    }
    canonical(group, w, c)
}
