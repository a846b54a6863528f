use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::{CartanDatum, WeylError};

/// Largest group we are willing to enumerate (order of W(F4)).
pub const ENUMERATION_CAP: usize = 1152;

/// A Weyl group element stored as its shortlex-minimal reduced word (one-based letters).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

pub type ElemId = usize;

/// Fully enumerated finite Weyl group with multiplication tables.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    datum: CartanDatum,
    words: Vec<Vec<usize>>,
    right: Vec<Vec<ElemId>>,
    left: Vec<Vec<ElemId>>,
    matrices: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, ElemId>,
    inverse: Vec<ElemId>,
    starred: Vec<ElemId>,
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

impl WeylGroup {
    pub fn new(datum: &CartanDatum) -> Result<Self, WeylError> {
        let n = datum.rank();
        // column j of the reflection matrix of s_i is s_i(alpha_j)
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = vec![0i64; n * n];
                for j in 0..n {
                    m[j * n + j] = 1;
                    m[i * n + j] -= datum.cartan[i][j] as i64;
                }
                m
            })
            .collect();
        let mut id = vec![0i64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        let mut words = vec![Vec::new()];
        let mut matrices = vec![id.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(id, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul(&matrices[cur], g, n);
                if lookup.contains_key(&m) {
                    continue;
                }
                if words.len() >= ENUMERATION_CAP {
                    return Err(WeylError::EnumerationCap(ENUMERATION_CAP));
                }
                let mut w = words[cur].clone();
                w.push(i);
                lookup.insert(m.clone(), words.len());
                queue.push_back(words.len());
                words.push(w);
                matrices.push(m);
            }
        }
        let size = words.len();
        let mut right = vec![vec![0; n]; size];
        let mut left = vec![vec![0; n]; size];
        for e in 0..size {
            for (i, g) in gens.iter().enumerate() {
                right[e][i] = lookup[&mat_mul(&matrices[e], g, n)];
                left[e][i] = lookup[&mat_mul(g, &matrices[e], n)];
            }
        }
        let mut grp = WeylGroup {
            datum: datum.clone(),
            words,
            right,
            left,
            matrices,
            lookup,
            inverse: Vec::new(),
            starred: Vec::new(),
        };
        grp.inverse = (0..size)
            .map(|e| {
                let mut cur = 0;
                for &l in grp.words[e].iter().rev() {
                    cur = grp.right[cur][l];
                }
                cur
            })
            .collect();
        grp.starred = (0..size)
            .map(|e| {
                let mut cur = 0;
                for &l in &grp.words[e] {
                    cur = grp.right[cur][datum.star[l]];
                }
                cur
            })
            .collect();
        Ok(grp)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn ids(&self) -> std::ops::Range<ElemId> {
        0..self.words.len()
    }

    pub fn len_of(&self, e: ElemId) -> usize {
        self.words[e].len()
    }

    /// Zero-based canonical word.
    pub fn raw_word(&self, e: ElemId) -> &[usize] {
        &self.words[e]
    }

    pub fn element(&self, e: ElemId) -> WeylElement {
        WeylElement {
            word: self.words[e].iter().map(|l| l + 1).collect(),
        }
    }

    /// Reflection-representation matrix (row-major, on simple-root coordinates).
    pub fn matrix(&self, e: ElemId) -> &[i64] {
        &self.matrices[e]
    }

    /// Dimension of the `lambda`-eigenspace of the reflection matrix of `e`.
    pub fn eigenspace_dim(&self, e: ElemId, lambda: i64) -> usize {
        let n = self.rank();
        let m = &self.matrices[e];
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| (m[i * n + j] - if i == j { lambda } else { 0 }) as i128).collect())
            .collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| a[r][col] != 0) else { continue };
            a.swap(rank, p);
            for r in rank + 1..n {
                if a[r][col] != 0 {
                    let (f, g) = (a[r][col], a[rank][col]);
                    for c in 0..n {
                        a[r][c] = a[r][c] * g - a[rank][c] * f;
                    }
                    let d = a[r].iter().fold(0i128, |x, &y| gcd(x, y.abs()));
                    if d > 1 {
                        a[r].iter_mut().for_each(|v| *v /= d);
                    }
                }
            }
            rank += 1;
        }
        n - rank
    }

    pub fn id_of_matrix(&self, m: &[i64]) -> Option<ElemId> {
        self.lookup.get(m).copied()
    }

    /// Product of an arbitrary word of one-based letters.
    pub fn id_of_word(&self, word: &[usize]) -> Result<ElemId, WeylError> {
        let mut cur = 0;
        for &l in word {
            self.datum.check_letter(l)?;
            cur = self.right[cur][l - 1];
        }
        Ok(cur)
    }

    pub fn id_of(&self, w: &WeylElement) -> Result<ElemId, WeylError> {
        self.id_of_word(&w.word)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement, WeylError> {
        Ok(self.element(self.id_of_word(word)?))
    }

    pub fn identity_id(&self) -> ElemId {
        0
    }

    pub fn longest_id(&self) -> ElemId {
        self.ids().max_by_key(|&e| self.len_of(e)).unwrap_or(0)
    }

    pub fn longest(&self) -> WeylElement {
        self.element(self.longest_id())
    }

    /// `e * s_i` for a zero-based letter.
    pub fn mul_gen_right(&self, e: ElemId, i: usize) -> ElemId {
        self.right[e][i]
    }

    /// `s_i * e` for a zero-based letter.
    pub fn mul_gen_left(&self, e: ElemId, i: usize) -> ElemId {
        self.left[e][i]
    }

    pub fn mul_ids(&self, a: ElemId, b: ElemId) -> ElemId {
        let mut cur = a;
        for &l in &self.words[b] {
            cur = self.right[cur][l];
        }
        cur
    }

    pub fn inverse_id(&self, e: ElemId) -> ElemId {
        self.inverse[e]
    }

    pub fn star_id(&self, e: ElemId) -> ElemId {
        self.starred[e]
    }

    /// Zero-based letter `i` is a right descent of `e`.
    pub fn is_right_descent(&self, e: ElemId, i: usize) -> bool {
        self.len_of(self.right[e][i]) < self.len_of(e)
    }

    pub fn is_left_descent(&self, e: ElemId, i: usize) -> bool {
        self.len_of(self.left[e][i]) < self.len_of(e)
    }

    /// `e • s_i`.
    pub fn demazure_gen_right(&self, e: ElemId, i: usize) -> ElemId {
        if self.is_right_descent(e, i) {
            e
        } else {
            self.right[e][i]
        }
    }

    /// `s_i • e`.
    pub fn demazure_gen_left(&self, e: ElemId, i: usize) -> ElemId {
        if self.is_left_descent(e, i) {
            e
        } else {
            self.left[e][i]
        }
    }

    pub fn demazure_ids(&self, a: ElemId, b: ElemId) -> ElemId {
        let mut cur = a;
        for &l in &self.words[b] {
            cur = self.demazure_gen_right(cur, l);
        }
        cur
    }

    /// Demazure product of an arbitrary word of one-based letters.
    pub fn demazure_word(&self, word: &[usize]) -> Result<ElemId, WeylError> {
        let mut cur = 0;
        for &l in word {
            self.datum.check_letter(l)?;
            cur = self.demazure_gen_right(cur, l - 1);
        }
        Ok(cur)
    }

    pub fn weyl_multiply(&self, u: &WeylElement, v: &WeylElement) -> Result<WeylElement, WeylError> {
        Ok(self.element(self.mul_ids(self.id_of(u)?, self.id_of(v)?)))
    }

    pub fn demazure_product(
        &self,
        u: &WeylElement,
        v: &WeylElement,
    ) -> Result<WeylElement, WeylError> {
        Ok(self.element(self.demazure_ids(self.id_of(u)?, self.id_of(v)?)))
    }

    pub fn star(&self, w: &WeylElement) -> Result<WeylElement, WeylError> {
        Ok(self.element(self.star_id(self.id_of(w)?)))
    }

    pub fn inverse(&self, w: &WeylElement) -> Result<WeylElement, WeylError> {
        Ok(self.element(self.inverse_id(self.id_of(w)?)))
    }

    /// Whether a word of one-based letters is reduced.
    pub fn is_reduced(&self, word: &[usize]) -> Result<bool, WeylError> {
        Ok(self.len_of(self.id_of_word(word)?) == word.len())
    }

    /// All reduced words of an element, lexicographically sorted.
    pub fn reduced_words(&self, e: ElemId) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(e, Vec::new())];
        while let Some((cur, suffix)) = stack.pop() {
            if cur == 0 {
                let mut w: Vec<usize> = suffix.iter().rev().map(|l| l + 1).collect::<Vec<_>>();
                w.shrink_to_fit();
                out.push(w);
                continue;
            }
            for i in 0..self.rank() {
                if self.is_right_descent(cur, i) {
                    let mut s = suffix.clone();
                    s.push(i);
                    stack.push((self.right[cur][i], s));
                }
            }
        }
        out.sort();
        out
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
