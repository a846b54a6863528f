use serde::{Deserialize, Serialize};

use crate::group::{ElemId, WeylElement, WeylGroup};
use crate::{CartanDatum, WeylError};

/// Upper bound on the number of words any single enumeration may return.
pub const WORD_CAP: usize = 500_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistedInvolution {
    pub element: WeylElement,
    pub phi: usize,
    pub norm: usize,
}

/// One letter of a joint word: a one-based index and a sign (`-1` lowers, `+1` raises).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedLetter {
    pub index: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionWord {
    pub letters: Vec<usize>,
    pub target: TwistedInvolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JointWord {
    pub letters: Vec<SignedLetter>,
    pub targets: (TwistedInvolution, TwistedInvolution),
}

/// A Weyl group together with its twisted-involution data for the datum's star.
#[derive(Debug, Clone)]
pub struct TwistedWeyl {
    group: WeylGroup,
    twisted: Vec<bool>,
    phi: Vec<Option<usize>>,
    word_count: Vec<u64>,
}

impl TwistedWeyl {
    pub fn new(datum: &CartanDatum) -> Result<Self, WeylError> {
        Self::from_group(WeylGroup::new(datum)?)
    }

    pub fn from_group(group: WeylGroup) -> Result<Self, WeylError> {
        let size = group.order();
        let twisted: Vec<bool> = group
            .ids()
            .map(|e| group.mul_ids(e, group.star_id(e)) == 0)
            .collect();
        let mut phi = vec![None; size];
        let mut word_count = vec![0u64; size];
        // ids are in nondecreasing length order, so descents are already filled in
        for e in group.ids() {
            if !twisted[e] {
                continue;
            }
            if e == 0 {
                phi[e] = Some(0);
                word_count[e] = 1;
                continue;
            }
            let mut value: Option<usize> = None;
            let mut count = 0u64;
            for i in 0..group.rank() {
                if let Some((prev, commuting)) = Self::reduce_step(&group, e, i) {
                    let p = phi[prev].ok_or(WeylError::Internal("phi order".into()))?;
                    let v = if commuting { p + 1 } else { p };
                    match value {
                        None => value = Some(v),
                        Some(old) if old != v => {
                            return Err(WeylError::Internal(format!(
                                "phi depends on the descent at element {e}"
                            )))
                        }
                        _ => {}
                    }
                    count = count.saturating_add(word_count[prev]);
                }
            }
            phi[e] = value;
            word_count[e] = count;
        }
        Ok(TwistedWeyl {
            group,
            twisted,
            phi,
            word_count,
        })
    }

    /// For a twisted involution `e` and zero-based `i` with `s_i` a right descent, returns the
    /// smaller twisted involution and whether the commuting case `s* e = e s` occurred.
    fn reduce_step(group: &WeylGroup, e: ElemId, i: usize) -> Option<(ElemId, bool)> {
        if !group.is_right_descent(e, i) {
            return None;
        }
        let istar = group.datum().star[i];
        let es = group.mul_gen_right(e, i);
        let se = group.mul_gen_left(e, istar);
        if es == se {
            Some((es, true))
        } else {
            Some((group.mul_gen_left(es, istar), false))
        }
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn datum(&self) -> &CartanDatum {
        self.group.datum()
    }

    pub fn is_twisted_id(&self, e: ElemId) -> bool {
        self.twisted[e]
    }

    pub fn twisted_ids(&self) -> Vec<ElemId> {
        self.group.ids().filter(|&e| self.twisted[e]).collect()
    }

    pub fn phi_id(&self, e: ElemId) -> Result<usize, WeylError> {
        self.phi[e].ok_or(WeylError::NotTwisted)
    }

    pub fn norm_id(&self, e: ElemId) -> Result<usize, WeylError> {
        let p = self.phi_id(e)?;
        let l = self.group.len_of(e);
        if (l + p) % 2 != 0 {
            return Err(WeylError::Internal("odd |w|+phi".into()));
        }
        Ok((l + p) / 2)
    }

    pub fn word_count_id(&self, e: ElemId) -> Result<u64, WeylError> {
        if self.twisted[e] {
            Ok(self.word_count[e])
        } else {
            Err(WeylError::NotTwisted)
        }
    }

    pub fn info(&self, e: ElemId) -> Result<TwistedInvolution, WeylError> {
        Ok(TwistedInvolution {
            element: self.group.element(e),
            phi: self.phi_id(e)?,
            norm: self.norm_id(e)?,
        })
    }

    pub fn twisted_id(&self, w: &WeylElement) -> Result<ElemId, WeylError> {
        let e = self.group.id_of(w)?;
        if self.twisted[e] {
            Ok(e)
        } else {
            Err(WeylError::NotTwisted)
        }
    }

    pub fn twisted_info(&self, w: &WeylElement) -> Result<TwistedInvolution, WeylError> {
        self.info(self.twisted_id(w)?)
    }

    /// All twisted involutions, ordered by length then canonical word.
    pub fn twisted_involutions(&self) -> Vec<TwistedInvolution> {
        let mut ids = self.twisted_ids();
        ids.sort_by(|&a, &b| {
            self.group
                .len_of(a)
                .cmp(&self.group.len_of(b))
                .then_with(|| self.group.raw_word(a).cmp(self.group.raw_word(b)))
        });
        ids.into_iter().filter_map(|e| self.info(e).ok()).collect()
    }

    pub fn phi(&self, w: &WeylElement) -> Result<usize, WeylError> {
        self.phi_id(self.twisted_id(w)?)
    }

    pub fn norm(&self, w: &WeylElement) -> Result<usize, WeylError> {
        self.norm_id(self.twisted_id(w)?)
    }

    /// `s_{i*} • e • s_i` for a zero-based letter; `None` when the step is absorbed.
    pub fn twisted_step(&self, e: ElemId, i: usize) -> Option<ElemId> {
        if self.group.is_right_descent(e, i) {
            return None;
        }
        let es = self.group.mul_gen_right(e, i);
        let istar = self.datum().star[i];
        Some(self.group.demazure_gen_left(es, istar))
    }

    /// Predecessor of `e` in the involution-word recursion ending in zero-based letter `i`.
    pub fn twisted_reduce(&self, e: ElemId, i: usize) -> Option<ElemId> {
        Self::reduce_step(&self.group, e, i).map(|(p, _)| p)
    }

    /// All involution words of a twisted involution, as one-based letter sequences, sorted.
    pub fn involution_words_id(&self, e: ElemId) -> Result<Vec<Vec<usize>>, WeylError> {
        let count = self.word_count_id(e)?;
        if count as usize > WORD_CAP {
            return Err(WeylError::EnumerationCap(WORD_CAP));
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut stack: Vec<(ElemId, Vec<usize>)> = vec![(e, Vec::new())];
        while let Some((cur, suffix)) = stack.pop() {
            if cur == 0 {
                out.push(suffix.iter().rev().map(|l| l + 1).collect());
                continue;
            }
            for i in 0..self.group.rank() {
                if let Some(prev) = self.twisted_reduce(cur, i) {
                    let mut s = suffix.clone();
                    s.push(i);
                    stack.push((prev, s));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn involution_words(&self, w: &WeylElement) -> Result<Vec<InvolutionWord>, WeylError> {
        let e = self.twisted_id(w)?;
        let target = self.info(e)?;
        Ok(self
            .involution_words_id(e)?
            .into_iter()
            .map(|letters| InvolutionWord {
                letters,
                target: target.clone(),
            })
            .collect())
    }

    /// Twisted involution reached by an arbitrary word via the Demazure recursion.
    pub fn involution_target(&self, word: &[usize]) -> Result<ElemId, WeylError> {
        let mut left = Vec::with_capacity(2 * word.len());
        for &l in word.iter().rev() {
            self.datum().check_letter(l)?;
            left.push(self.datum().star_of(l));
        }
        left.extend_from_slice(word);
        self.group.demazure_word(&left)
    }

    /// Whether a word is an involution word of `e` (minimal length and correct product).
    pub fn is_involution_word(&self, e: ElemId, word: &[usize]) -> Result<bool, WeylError> {
        Ok(self.twisted[e]
            && word.len() == self.norm_id(e)?
            && self.involution_target(word)? == e)
    }

    pub fn joint_words(
        &self,
        w: &WeylElement,
        wp: &WeylElement,
    ) -> Result<Vec<JointWord>, WeylError> {
        let (a, b) = (self.twisted_id(w)?, self.twisted_id(wp)?);
        let targets = (self.info(a)?, self.info(b)?);
        let words = self.joint_words_id(a, b)?;
        Ok(words
            .into_iter()
            .map(|letters| JointWord {
                letters,
                targets: targets.clone(),
            })
            .collect())
    }

    /// All shuffles of an involution word of `a` (sign −1) with one of `b` (sign +1).
    pub fn joint_words_id(&self, a: ElemId, b: ElemId) -> Result<Vec<Vec<SignedLetter>>, WeylError> {
        let ja = self.involution_words_id(a)?;
        let jb = self.involution_words_id(b)?;
        let (k, kp) = (self.norm_id(a)?, self.norm_id(b)?);
        let shuffles = binomial(k + kp, k);
        let total = (ja.len() as u128) * (jb.len() as u128) * shuffles;
        if total > WORD_CAP as u128 {
            return Err(WeylError::EnumerationCap(WORD_CAP));
        }
        let masks = shuffle_masks(k, kp);
        let mut out = Vec::with_capacity(total as usize);
        for x in &ja {
            for y in &jb {
                for mask in &masks {
                    let (mut p, mut q) = (0, 0);
                    let mut word = Vec::with_capacity(k + kp);
                    for &neg in mask {
                        if neg {
                            word.push(SignedLetter { index: x[p], sign: -1 });
                            p += 1;
                        } else {
                            word.push(SignedLetter { index: y[q], sign: 1 });
                            q += 1;
                        }
                    }
                    out.push(word);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `w • w' • w*` for any `w` and twisted involution `w'`.
    pub fn cell_index_action_id(&self, w: ElemId, wp: ElemId) -> Result<ElemId, WeylError> {
        if !self.twisted[wp] {
            return Err(WeylError::NotTwisted);
        }
        let g = &self.group;
        let r = g.demazure_ids(g.demazure_ids(w, wp), g.inverse_id(g.star_id(w)));
        if !self.twisted[r] {
            return Err(WeylError::Internal("action left the twisted involutions".into()));
        }
        Ok(r)
    }

    pub fn cell_index_action(
        &self,
        w: &WeylElement,
        wp: &WeylElement,
    ) -> Result<TwistedInvolution, WeylError> {
        let r = self.cell_index_action_id(self.group.id_of(w)?, self.twisted_id(wp)?)?;
        self.info(r)
    }

    pub fn pair_index_action(
        &self,
        w: (&WeylElement, &WeylElement),
        target: (&WeylElement, &WeylElement),
    ) -> Result<(TwistedInvolution, TwistedInvolution), WeylError> {
        Ok((
            self.cell_index_action(w.0, target.0)?,
            self.cell_index_action(w.1, target.1)?,
        ))
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Every arrangement of `k` true and `kp` false values.
fn shuffle_masks(k: usize, kp: usize) -> Vec<Vec<bool>> {
    if k == 0 {
        return vec![vec![false; kp]];
    }
    if kp == 0 {
        return vec![vec![true; k]];
    }
    let mut out = Vec::new();
    for mut m in shuffle_masks(k - 1, kp) {
        m.insert(0, true);
        out.push(m);
    }
    for mut m in shuffle_masks(k, kp - 1) {
        m.insert(0, false);
        out.push(m);
    }
    out
}
