use clap::ValueEnum;
use pinned_groups::{PinnedModel, Scalar, MIN_PRECISION};
use weyl_core::{CartanDatum, Family, SignedLetter, StarChoice, WeylGroup};

use crate::{cli_err, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

/// Everything a verb needs besides its own arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// A Dynkin family letter, or `GL` for the general linear models.
    pub type_label: Option<String>,
    pub rank: Option<usize>,
    pub star: StarChoice,
    pub precision: u32,
    pub samples: Option<usize>,
    pub seed: u64,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            type_label: None,
            rank: None,
            star: StarChoice::Identity,
            precision: MIN_PRECISION,
            samples: None,
            seed: 0,
            format: Format::Table,
        }
    }
}

impl RunConfig {
    pub fn new(
        type_label: Option<String>,
        rank: Option<usize>,
        star: &str,
        precision: u32,
        samples: Option<usize>,
        seed: u64,
        format: Format,
    ) -> Result<Self, CliError> {
        if precision < MIN_PRECISION {
            return Err(CliError::Usage(format!(
                "precision below floor: {precision} < {MIN_PRECISION} bits"
            )));
        }
        if samples == Some(0) {
            return Err(CliError::Usage("--samples must be positive".into()));
        }
        Ok(RunConfig {
            type_label,
            rank,
            star: StarChoice::parse(star).map_err(cli_err)?,
            precision,
            samples,
            seed,
            format,
        })
    }

    pub fn has_type(&self) -> bool {
        self.type_label.is_some()
    }

    fn is_gl(&self) -> bool {
        self.type_label.as_deref().is_some_and(|t| t.eq_ignore_ascii_case("gl"))
    }

    pub fn family(&self) -> Result<Family, CliError> {
        let t = self.type_label.as_deref().ok_or_else(|| CliError::Usage("--type is required".into()))?;
        if self.is_gl() {
            return Ok(Family::A);
        }
        Family::parse(t).map_err(cli_err)
    }

    pub fn datum(&self) -> Result<CartanDatum, CliError> {
        let family = self.family()?;
        let rank = self.rank.ok_or_else(|| CliError::Usage("--rank is required".into()))?;
        let star = if self.is_gl() { StarChoice::Identity } else { self.star.clone() };
        CartanDatum::new(family, rank, star).map_err(cli_err)
    }

    /// `GL` with rank r is GL_{r+1}; otherwise the shipped model of the datum.
    pub fn model(&self) -> Result<PinnedModel, CliError> {
        let d = self.datum()?;
        if self.is_gl() {
            PinnedModel::general_linear(d.rank() + 1).map_err(cli_err)
        } else {
            PinnedModel::for_datum(&d).map_err(cli_err)
        }
    }

    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }

    pub fn star_name(&self) -> String {
        match &self.star {
            StarChoice::Identity => "id".into(),
            StarChoice::Flip => "flip".into(),
            StarChoice::Explicit(v) => v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        }
    }
}

fn tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect()
}

/// A word of one-based letters: `121`, `1,2,1`, `e` or empty for the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>, CliError> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let bad = || CliError::Usage(format!("bad word '{s}'"));
    let parts = tokens(t);
    if parts.len() == 1 && !t.contains(',') {
        return t.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect();
    }
    parts.iter().map(|p| p.parse::<usize>().map_err(|_| bad())).collect()
}

/// A Weyl group element given by a word, or `w0`.
pub fn parse_element(group: &WeylGroup, s: &str) -> Result<usize, CliError> {
    if s.trim() == "w0" {
        return Ok(group.longest_id());
    }
    group.id_of_word(&parse_word(s)?).map_err(cli_err)
}

/// Signed letters such as `-1,+2,2`; an unsigned letter counts as positive.
pub fn parse_joint(s: &str) -> Result<Vec<SignedLetter>, CliError> {
    tokens(s)
        .into_iter()
        .map(|p| {
            let (sign, rest) = match p.as_bytes()[0] {
                b'-' => (-1, &p[1..]),
                b'+' => (1, &p[1..]),
                _ => (1, p),
            };
            let index = rest
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad signed letter '{p}'")))?;
            Ok(SignedLetter { index, sign })
        })
        .collect()
}

pub fn parse_scalars(parts: &[String]) -> Result<Vec<Scalar>, CliError> {
    parts
        .iter()
        .flat_map(|p| tokens(p).into_iter().map(str::to_string).collect::<Vec<_>>())
        .map(|p| p.parse::<Scalar>().map_err(cli_err))
        .collect()
}

pub fn parse_scalar_list(s: &str) -> Result<Vec<Scalar>, CliError> {
    parse_scalars(&[s.to_string()])
}

/// Rows separated by `;`, entries by commas or spaces.
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(parse_scalar_list)
        .collect()
}

pub fn word_string(w: &[usize]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    let sep = if w.iter().any(|&l| l > 9) { "," } else { "" };
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn joint_string(w: &[SignedLetter]) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter()
        .map(|l| format!("{}{}", if l.sign < 0 { '-' } else { '+' }, l.index))
        .collect::<Vec<_>>()
        .join(",")
}
