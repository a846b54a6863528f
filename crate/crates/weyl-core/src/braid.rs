use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::group::WeylElement;
use crate::twisted::TwistedWeyl;
use crate::{Family, WeylError};

/// Elementary moves between words. `StarSwap` exchanges a leading letter `i` with `i*`
/// when the two commute; it is the commuting braid relation at the centre of the
/// palindromic product and carries the identity coordinate map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveTag {
    StdA1A1,
    StdA2,
    StdB2,
    StdG2,
    StarSwap,
    Ns43i,
    Ns44,
    Ns45,
    Ns46,
    Ns47,
    Ns48,
    Ns49,
}

impl MoveTag {
    pub const ALL: [MoveTag; 12] = [
        MoveTag::StdA1A1,
        MoveTag::StdA2,
        MoveTag::StdB2,
        MoveTag::StdG2,
        MoveTag::StarSwap,
        MoveTag::Ns43i,
        MoveTag::Ns44,
        MoveTag::Ns45,
        MoveTag::Ns46,
        MoveTag::Ns47,
        MoveTag::Ns48,
        MoveTag::Ns49,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveTag::StdA1A1 => "Std-A1A1",
            MoveTag::StdA2 => "Std-A2",
            MoveTag::StdB2 => "Std-B2",
            MoveTag::StdG2 => "Std-G2",
            MoveTag::StarSwap => "Std-star",
            MoveTag::Ns43i => "NS-4.3(i)",
            MoveTag::Ns44 => "NS-4.4",
            MoveTag::Ns45 => "NS-4.5",
            MoveTag::Ns46 => "NS-4.6",
            MoveTag::Ns47 => "NS-4.7",
            MoveTag::Ns48 => "NS-4.8",
            MoveTag::Ns49 => "NS-4.9",
        }
    }

    pub fn parse(s: &str) -> Option<MoveTag> {
        let t = s.trim();
        MoveTag::ALL.into_iter().find(|m| {
            m.name().eq_ignore_ascii_case(t) || m.dot_label().eq_ignore_ascii_case(t) && !m.is_standard()
        })
    }

    /// Edge label used in DOT output.
    pub fn dot_label(self) -> &'static str {
        match self {
            MoveTag::Ns43i => "NS-4.3(i)",
            MoveTag::Ns44 => "NS-4.3(ii)",
            MoveTag::Ns45 => "NS-4.3(iii)",
            MoveTag::Ns46 => "NS-4.3(iv)",
            MoveTag::Ns47 | MoveTag::Ns48 => "NS-4.3(v)",
            MoveTag::Ns49 => "NS-4.3(vi)",
            _ => "std",
        }
    }

    pub fn is_standard(self) -> bool {
        matches!(
            self,
            MoveTag::StdA1A1 | MoveTag::StdA2 | MoveTag::StdB2 | MoveTag::StdG2 | MoveTag::StarSwap
        )
    }

    /// Number of coordinates the move consumes.
    pub fn arity(self) -> usize {
        match self {
            MoveTag::StdA1A1 => 2,
            MoveTag::StdA2 => 3,
            MoveTag::StdB2 => 4,
            MoveTag::StdG2 => 6,
            MoveTag::StarSwap => 1,
            MoveTag::Ns43i => 2,
            MoveTag::Ns44 => 2,
            MoveTag::Ns45 => 3,
            MoveTag::Ns46 => 4,
            MoveTag::Ns47 => 6,
            MoveTag::Ns48 => 6,
            MoveTag::Ns49 => 8,
        }
    }

    pub fn std_for_m(m: usize) -> Option<MoveTag> {
        match m {
            2 => Some(MoveTag::StdA1A1),
            3 => Some(MoveTag::StdA2),
            4 => Some(MoveTag::StdB2),
            6 => Some(MoveTag::StdG2),
            _ => None,
        }
    }
}

/// A non-standard move as a rewrite of a word prefix, in local zero-based labels.
#[derive(Debug, Clone)]
pub struct NsPattern {
    pub tag: MoveTag,
    pub cartan: Vec<Vec<i32>>,
    pub star: Vec<usize>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

fn a_n(n: usize) -> Vec<Vec<i32>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

pub fn ns_patterns() -> Vec<NsPattern> {
    let chain3 = |c12: i32, c21: i32| {
        let mut c = a_n(3);
        c[0][1] = c12;
        c[1][0] = c21;
        c
    };
    let mut d4 = vec![vec![0; 4]; 4];
    for (i, row) in d4.iter_mut().enumerate() {
        row[i] = 2;
    }
    for k in 1..4 {
        d4[0][k] = -1;
        d4[k][0] = -1;
    }
    let mut b2 = a_n(2);
    b2[0][1] = -2;
    vec![
        NsPattern {
            tag: MoveTag::Ns43i,
            cartan: a_n(2),
            star: vec![0, 1],
            source: vec![0, 1],
            target: vec![1, 0],
        },
        NsPattern {
            tag: MoveTag::Ns44,
            cartan: a_n(2),
            star: vec![1, 0],
            source: vec![0, 1],
            target: vec![1, 0],
        },
        NsPattern {
            tag: MoveTag::Ns45,
            cartan: b2,
            star: vec![0, 1],
            source: vec![0, 1, 0],
            target: vec![1, 0, 1],
        },
        NsPattern {
            tag: MoveTag::Ns46,
            cartan: a_n(3),
            star: vec![2, 1, 0],
            source: vec![1, 2, 0, 1],
            target: vec![1, 2, 1, 0],
        },
        NsPattern {
            tag: MoveTag::Ns47,
            cartan: chain3(-1, -2),
            star: vec![0, 1, 2],
            source: vec![0, 1, 2, 1, 0, 1],
            target: vec![0, 1, 2, 0, 1, 0],
        },
        NsPattern {
            tag: MoveTag::Ns48,
            cartan: chain3(-2, -1),
            star: vec![0, 1, 2],
            source: vec![0, 1, 2, 1, 0, 1],
            target: vec![0, 1, 2, 0, 1, 0],
        },
        NsPattern {
            tag: MoveTag::Ns49,
            cartan: d4,
            star: vec![0, 1, 2, 3],
            source: vec![0, 3, 1, 2, 0, 1, 2, 3],
            target: vec![3, 2, 1, 0, 2, 1, 3, 0],
        },
    ]
}

/// One application of a move to a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub tag: MoveTag,
    /// Zero-based position of the first affected letter.
    pub position: usize,
    /// One-based global letter for each local label of the move (for standard moves:
    /// the first and second letter of the source segment).
    pub letters: Vec<usize>,
    /// True when the word is rewritten from the pattern source to the pattern target.
    pub forward: bool,
}

impl MoveSite {
    /// Rewrites `word` according to this site, checking that the pattern matches.
    pub fn apply(&self, word: &[usize]) -> Option<Vec<usize>> {
        let len = match self.tag {
            t if t.is_standard() => t.arity(),
            t => ns_patterns().into_iter().find(|p| p.tag == t)?.source.len(),
        };
        if self.position + len > word.len() {
            return None;
        }
        let (from, to) = self.local_words()?;
        let seg = &word[self.position..self.position + len];
        let expect: Vec<usize> = from.iter().map(|&l| self.letters[l]).collect();
        if seg != expect.as_slice() {
            return None;
        }
        let mut out = word.to_vec();
        for (k, &l) in to.iter().enumerate() {
            out[self.position + k] = self.letters[l];
        }
        Some(out)
    }

    /// Source and target segments in local labels, oriented by `forward`.
    pub fn local_words(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (s, t) = if self.tag.is_standard() {
            if self.tag == MoveTag::StarSwap {
                (vec![0], vec![1])
            } else {
                let m = self.tag.arity();
                let s: Vec<usize> = (0..m).map(|k| k % 2).collect();
                let t: Vec<usize> = (0..m).map(|k| (k + 1) % 2).collect();
                (s, t)
            }
        } else {
            let p = ns_patterns().into_iter().find(|p| p.tag == self.tag)?;
            (p.source, p.target)
        };
        Some(if self.forward || self.tag.is_standard() { (s, t) } else { (t, s) })
    }
}

/// All moves applicable to an involution word.
pub fn applicable_moves(tw: &TwistedWeyl, word: &[usize]) -> Vec<MoveSite> {
    let d = tw.datum();
    let mut out = Vec::new();
    for p in 0..word.len() {
        let i = word[p];
        for j in 1..=d.rank() {
            if j == i {
                continue;
            }
            let m = d.m(i, j);
            if p + m > word.len() {
                continue;
            }
            if (0..m).all(|k| word[p + k] == if k % 2 == 0 { i } else { j }) {
                if let Some(tag) = MoveTag::std_for_m(m) {
                    out.push(MoveSite {
                        tag,
                        position: p,
                        letters: vec![i, j],
                        forward: true,
                    });
                }
            }
        }
    }
    if let Some(&first) = word.first() {
        let s = d.star_of(first);
        if s != first && d.c(first, s) == 0 {
            out.push(MoveSite {
                tag: MoveTag::StarSwap,
                position: 0,
                letters: vec![first, s],
                forward: true,
            });
        }
    }
    for pat in ns_patterns() {
        for forward in [true, false] {
            let from = if forward { &pat.source } else { &pat.target };
            if let Some(map) = match_prefix(tw, &pat, from, word) {
                out.push(MoveSite {
                    tag: pat.tag,
                    position: 0,
                    letters: map,
                    forward,
                });
            }
        }
    }
    out
}

/// Relabeling of the pattern's local labels matching the prefix of `word`, if it is a
/// Cartan and star isomorphism onto its image.
fn match_prefix(tw: &TwistedWeyl, pat: &NsPattern, from: &[usize], word: &[usize]) -> Option<Vec<usize>> {
    if word.len() < from.len() {
        return None;
    }
    let d = tw.datum();
    let r = pat.cartan.len();
    let mut map = vec![0usize; r];
    for (k, &l) in from.iter().enumerate() {
        if map[l] == 0 {
            map[l] = word[k];
        } else if map[l] != word[k] {
            return None;
        }
    }
    if map.iter().any(|&g| g == 0) {
        return None;
    }
    for a in 0..r {
        for b in 0..r {
            if a != b && map[a] == map[b] {
                return None;
            }
            if d.c(map[a], map[b]) != pat.cartan[a][b] {
                return None;
            }
        }
        if d.star_of(map[a]) != map[pat.star[a]] {
            return None;
        }
    }
    Some(map)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidEdge {
    pub from: usize,
    pub to: usize,
    pub site: MoveSite,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BraidGraph {
    pub target: WeylElement,
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<BraidEdge>,
}

impl BraidGraph {
    pub fn vertex_index(&self, word: &[usize]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(word)).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut comps = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            comps += 1;
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(u, _) in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        q.push_back(u);
                    }
                }
            }
        }
        comps
    }

    /// Neighbour lists with the edge index used.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            adj[e.from].push((e.to, k));
            adj[e.to].push((e.from, k));
        }
        adj
    }

    /// Shortest path of move sites from one vertex to another, oriented along the path.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<MoveSite>> {
        let adj = self.adjacency();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        seen[from] = true;
        let mut q = VecDeque::from([from]);
        while let Some(v) = q.pop_front() {
            if v == to {
                break;
            }
            for &(u, k) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    prev[u] = Some((v, k));
                    q.push_back(u);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, k) = prev[cur]?;
            steps.push(self.oriented(k, p));
            cur = p;
        }
        steps.reverse();
        Some(steps)
    }

    /// The move of edge `k` oriented to start at vertex `v`.
    pub fn oriented(&self, k: usize, v: usize) -> MoveSite {
        let e = &self.edges[k];
        if e.from == v {
            e.site.clone()
        } else {
            reverse_site(&e.site)
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph braid {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", vertex_name(v));
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                vertex_name(&self.vertices[e.from]),
                vertex_name(&self.vertices[e.to]),
                e.site.tag.dot_label()
            );
        }
        s.push_str("}\n");
        s
    }
}

/// The inverse rewrite of a move site.
pub fn reverse_site(site: &MoveSite) -> MoveSite {
    if site.tag.is_standard() {
        let mut letters = site.letters.clone();
        letters.swap(0, 1);
        MoveSite {
            letters,
            ..site.clone()
        }
    } else {
        MoveSite {
            forward: !site.forward,
            ..site.clone()
        }
    }
}

pub fn vertex_name(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    if word.iter().all(|&l| l < 10) {
        word.iter().map(|l| l.to_string()).collect()
    } else {
        word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn braid_graph(tw: &TwistedWeyl, w: &WeylElement) -> Result<BraidGraph, WeylError> {
    if tw.datum().label.family == Family::G && !tw.datum().label.doubled {
        return Err(WeylError::UnsupportedType(
            "G2 non-standard move not implemented".into(),
        ));
    }
    let e = tw.twisted_id(w)?;
    let vertices = tw.involution_words_id(e)?;
    let index: HashMap<&[usize], usize> = vertices
        .iter()
        .enumerate()
        .map(|(k, v)| (v.as_slice(), k))
        .collect();
    let mut edges = Vec::new();
    for (k, v) in vertices.iter().enumerate() {
        for site in applicable_moves(tw, v) {
            let image = site
                .apply(v)
                .ok_or_else(|| WeylError::Internal("move site does not apply".into()))?;
            let &t = index.get(image.as_slice()).ok_or_else(|| {
                WeylError::Internal(format!(
                    "{} maps {:?} outside the involution words",
                    site.tag.name(),
                    v
                ))
            })?;
            let dup = edges
                .iter()
                .any(|x: &BraidEdge| x.from == k && x.to == t && x.site.tag == site.tag);
            if (k < t || (k == t && site.forward)) && !dup {
                edges.push(BraidEdge {
                    from: k,
                    to: t,
                    site,
                });
            }
        }
    }
    Ok(BraidGraph {
        target: tw.group().element(e),
        vertices,
        edges,
    })
}
