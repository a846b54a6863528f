use serde::{Deserialize, Serialize};
use std::fmt;

use crate::WeylError;

/// Dynkin family of an irreducible finite root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self, WeylError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            other => Err(WeylError::UnsupportedType(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
    /// Set for the doubled datum of `G x G` whose star swaps the two copies.
    pub doubled: bool,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = format!("{:?}{}", self.family, self.rank);
        if self.doubled {
            write!(f, "{base}x{base}")
        } else {
            write!(f, "{base}")
        }
    }
}

/// How the diagram involution is chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarChoice {
    Identity,
    /// The nontrivial diagram automorphism of order two (A_n, D_n).
    Flip,
    /// One-based image of each node.
    Explicit(Vec<usize>),
}

impl StarChoice {
    pub fn parse(s: &str) -> Result<Self, WeylError> {
        let t = s.trim();
        match t {
            "id" | "identity" | "1" => Ok(StarChoice::Identity),
            "flip" | "diagram" => Ok(StarChoice::Flip),
            "triality" => Err(WeylError::StarNotInvolution),
            _ => {
                let parts: Result<Vec<usize>, _> = t
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|p| !p.is_empty())
                    .map(|p| p.parse::<usize>())
                    .collect();
                parts
                    .map(StarChoice::Explicit)
                    .map_err(|_| WeylError::BadStar(t.to_string()))
            }
        }
    }
}

/// Cartan matrix with `cartan[i][j] = <alpha_j, alpha_i^vee>` (zero-based storage) and a
/// diagram involution. Public letters are one-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanDatum {
    pub label: TypeLabel,
    pub cartan: Vec<Vec<i32>>,
    /// Zero-based star permutation.
    pub star: Vec<usize>,
}

fn bourbaki(family: Family, n: usize) -> Result<Vec<Vec<i32>>, WeylError> {
    let bad = || WeylError::UnsupportedType(format!("{family:?}{n}"));
    let min = match family {
        Family::A => 1,
        Family::B => 2,
        Family::C => 2,
        Family::D => 4,
        Family::G => 2,
    };
    if n < min || (family == Family::G && n != 2) {
        return Err(bad());
    }
    let mut c = vec![vec![0i32; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match family {
        Family::G => {
            c[0][1] = -3;
            c[1][0] = -1;
        }
        Family::D => {
            for i in 0..n - 2 {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
        }
        _ => {
            for i in 0..n - 1 {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            match family {
                Family::B => c[n - 1][n - 2] = -2,
                Family::C => c[n - 2][n - 1] = -2,
                _ => {}
            }
        }
    }
    Ok(c)
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize, star: StarChoice) -> Result<Self, WeylError> {
        let cartan = bourbaki(family, rank)?;
        let n = rank;
        let star = match star {
            StarChoice::Identity => (0..n).collect(),
            StarChoice::Flip => match family {
                Family::A => (0..n).map(|i| n - 1 - i).collect(),
                Family::D => {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.swap(n - 2, n - 1);
                    p
                }
                _ => return Err(WeylError::UnsupportedStar(format!("{family:?}{n}"))),
            },
            StarChoice::Explicit(p) => {
                if p.len() != n || p.iter().any(|&x| x == 0 || x > n) {
                    return Err(WeylError::BadStar(format!("{p:?}")));
                }
                p.into_iter().map(|x| x - 1).collect()
            }
        };
        Self::from_parts(
            TypeLabel {
                family,
                rank,
                doubled: false,
            },
            cartan,
            star,
        )
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self, WeylError> {
        Self::new(family, rank, StarChoice::Identity)
    }

    /// Validates a Cartan matrix and zero-based star.
    pub fn from_parts(
        label: TypeLabel,
        cartan: Vec<Vec<i32>>,
        star: Vec<usize>,
    ) -> Result<Self, WeylError> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) || star.len() != n {
            return Err(WeylError::InvalidCartan("shape".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(WeylError::InvalidCartan("diagonal".into()));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (cartan[i][j], cartan[j][i]);
                if a > 0 || (a == 0) != (b == 0) || !(0..=3).contains(&(a * b)) {
                    return Err(WeylError::InvalidCartan(format!("entry ({},{})", i + 1, j + 1)));
                }
            }
        }
        if star.iter().any(|&s| s >= n) {
            return Err(WeylError::BadStar(format!("{star:?}")));
        }
        for i in 0..n {
            if star[star[i]] != i {
                return Err(WeylError::StarNotInvolution);
            }
        }
        for i in 0..n {
            for j in 0..n {
                if cartan[star[i]][star[j]] != cartan[i][j] {
                    return Err(WeylError::StarBreaksCartan);
                }
            }
        }
        Ok(CartanDatum {
            label,
            cartan,
            star,
        })
    }

    /// Datum of `G x G`: block-diagonal Cartan matrix, star exchanging the copies.
    pub fn doubled(&self) -> Result<Self, WeylError> {
        let n = self.rank();
        let mut c = vec![vec![0i32; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                c[i][j] = self.cartan[i][j];
                c[n + i][n + j] = self.cartan[i][j];
            }
        }
        let star = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
        let label = TypeLabel {
            doubled: true,
            ..self.label
        };
        Self::from_parts(label, c, star)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Cartan entry for one-based letters.
    pub fn c(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    /// Star of a one-based letter.
    pub fn star_of(&self, i: usize) -> usize {
        self.star[i - 1] + 1
    }

    pub fn star_is_identity(&self) -> bool {
        self.star.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Order of `s_i s_j` for one-based letters.
    pub fn m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        match self.c(i, j) * self.c(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }

    pub fn check_letter(&self, i: usize) -> Result<(), WeylError> {
        if i == 0 || i > self.rank() {
            Err(WeylError::LetterOutOfRange(i, self.rank()))
        } else {
            Ok(())
        }
    }

    /// One-based star as an array, as used by JSON output.
    pub fn star_array(&self) -> Vec<usize> {
        self.star.iter().map(|s| s + 1).collect()
    }
}
