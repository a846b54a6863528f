//! The verbs other than `verify`.

use std::fmt::Write;

use moves::{check_move_identity, conservation_laws, Certificate, Direction, MoveKind};
use num_rational::BigRational;
use pinned_groups::scalar::parse_rational;
use pinned_groups::{Matrix, Scalar};
use serde::Deserialize;
use serde_json::{json, Value};
use tp_cells::{classify_cell, conjugation_step, factor_unipotent_a, weyl_cell_a, CellContext, CellIndex, CellKind, CellPoint, CellWord};
use tropical_zones::{rat_string, zone_map};
use weyl_core::braid::braid_graph;
use weyl_core::{MoveTag, SignedLetter, TwistedWeyl};

use crate::config::{joint_string, parse_element, parse_joint, parse_matrix, parse_scalar_list, parse_word, word_string};
use crate::{cli_err, CliError, Format, RunConfig};

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn twisted(cfg: &RunConfig) -> Result<TwistedWeyl, CliError> {
    TwistedWeyl::new(&cfg.datum()?).map_err(cli_err)
}

fn header(cfg: &RunConfig) -> Result<String, CliError> {
    Ok(format!("{} star={}", cfg.datum()?.label, cfg.star_name()))
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn enumerate(cfg: &RunConfig) -> Result<String, CliError> {
    let tw = twisted(cfg)?;
    let g = tw.group();
    let mut ids = tw.twisted_ids();
    ids.sort_by_key(|&e| (g.len_of(e), g.element(e).word));
    let mut rows = Vec::new();
    let mut words = 0u64;
    for &e in &ids {
        let info = tw.info(e).map_err(cli_err)?;
        let count = tw.word_count_id(e).map_err(cli_err)?;
        words += count;
        rows.push((info, count));
    }
    Ok(match cfg.format {
        Format::Json => pretty(&json!({
            "type": cfg.datum()?.label.to_string(),
            "star": cfg.star_name(),
            "rows": rows.iter().map(|(t, c)| json!({
                "element": t.element.word,
                "length": t.element.word.len(),
                "phi": t.phi,
                "norm": t.norm,
                "involution_words": c,
            })).collect::<Vec<_>>(),
            "total": {"twisted_involutions": rows.len(), "involution_words": words},
        })),
        _ => {
            let mut s = format!("# {}\n", header(cfg)?);
            let _ = writeln!(s, "{:<16} {:>4} {:>4} {:>5} {:>6}", "w", "|w|", "phi", "norm", "|J|");
            for (t, c) in &rows {
                let _ = writeln!(
                    s,
                    "{:<16} {:>4} {:>4} {:>5} {:>6}",
                    word_string(&t.element.word),
                    t.element.word.len(),
                    t.phi,
                    t.norm,
                    c
                );
            }
            let _ = writeln!(s, "total: {} twisted involutions, {} involution words", rows.len(), words);
            s
        }
    })
}

/// Involution words of `element`, its reduced words, or the joint words of (element, right).
pub fn words(cfg: &RunConfig, element: &str, right: Option<&str>, reduced: bool) -> Result<String, CliError> {
    let tw = twisted(cfg)?;
    let e = parse_element(tw.group(), element)?;
    let list: Vec<String> = if let Some(r) = right {
        let f = parse_element(tw.group(), r)?;
        tw.joint_words_id(e, f).map_err(cli_err)?.iter().map(|w| joint_string(w)).collect()
    } else if reduced {
        tw.group().reduced_words(e).iter().map(|w| word_string(w)).collect()
    } else {
        tw.involution_words_id(e).map_err(cli_err)?.iter().map(|w| word_string(w)).collect()
    };
    let kind = if right.is_some() {
        "joint"
    } else if reduced {
        "reduced"
    } else {
        "involution"
    };
    Ok(match cfg.format {
        Format::Json => pretty(&json!({"kind": kind, "element": word_string(&tw.group().element(e).word), "words": list})),
        _ => {
            let mut s = format!("# {} {kind} words of {}\n", header(cfg)?, word_string(&tw.group().element(e).word));
            for w in &list {
                let _ = writeln!(s, "{w}");
            }
            let _ = writeln!(s, "total: {}", list.len());
            s
        }
    })
}

pub fn graph(cfg: &RunConfig, element: &str) -> Result<String, CliError> {
    let tw = twisted(cfg)?;
    let e = parse_element(tw.group(), element)?;
    let g = braid_graph(&tw, &tw.group().element(e)).map_err(cli_err)?;
    Ok(match cfg.format {
        Format::Json => pretty(&json!({
            "target": g.target.word,
            "vertices": g.vertices,
            "edges": g.edges.iter().map(|x| json!({
                "from": x.from,
                "to": x.to,
                "tag": x.site.tag.name(),
                "label": x.site.tag.dot_label(),
                "position": x.site.position,
            })).collect::<Vec<_>>(),
            "connected": g.is_connected(),
        })),
        _ => g.to_dot(),
    })
}

fn parse_kind(tag: &str, direction: &str) -> Result<MoveKind, CliError> {
    let t = MoveTag::parse(tag).ok_or_else(|| CliError::Usage(format!("unknown move '{tag}'")))?;
    let d = Direction::parse(direction).ok_or_else(|| CliError::Usage(format!("unknown direction '{direction}'")))?;
    Ok(MoveKind::new(t, d))
}

fn check_arity(kind: MoveKind, n: usize) -> Result<(), CliError> {
    if n != kind.arity() {
        return Err(CliError::Usage(format!("{kind} takes {} coordinates, got {n}", kind.arity())));
    }
    Ok(())
}

/// Evaluates a move, checks its matrix identity and reports its conservation laws.
pub fn move_cmd(cfg: &RunConfig, tag: &str, direction: &str, input: &[Scalar]) -> Result<String, CliError> {
    let kind = parse_kind(tag, direction)?;
    let input = input.to_vec();
    check_arity(kind, input.len())?;
    let chk = check_move_identity(kind, &input).map_err(|e| match e {
        moves::MoveError::IdentityFailed(m) => CliError::Failure(m),
        other => cli_err(other),
    })?;
    let mut laws = Vec::new();
    for l in conservation_laws(kind, &input, &chk.output) {
        laws.push((l.name.clone(), l.holds().map_err(cli_err)?));
    }
    let bad: Vec<&String> = laws.iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    let width_ok = match chk.certificate {
        Certificate::Exact => true,
        Certificate::Interval { max_relative_width } => max_relative_width < 2f64.powi(-128),
    };
    let text = match cfg.format {
        Format::Json => pretty(&json!({
            "move": kind.tag.name(),
            "direction": kind.direction.to_string(),
            "input": chk.input,
            "output": chk.output,
            "output_text": scalar_strings(&chk.output),
            "certificate": chk.certificate,
            "identity": {"model": chk.model, "holds": true},
            "laws": laws.iter().map(|(n, ok)| json!({"name": n, "holds": ok})).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!("{kind}\n");
            let _ = writeln!(s, "input       {}", scalar_strings(&chk.input).join("  "));
            let _ = writeln!(s, "output      {}", scalar_strings(&chk.output).join("  "));
            let _ = writeln!(s, "certificate {}", chk.certificate);
            let _ = writeln!(s, "identity    holds in {}", chk.model);
            if !laws.is_empty() {
                let _ = writeln!(s, "laws        {}/{} hold", laws.len() - bad.len(), laws.len());
                for (n, ok) in &laws {
                    let _ = writeln!(s, "  {} {n}", if *ok { "ok  " } else { "FAIL" });
                }
            }
            s
        }
    };
    if !bad.is_empty() {
        return Err(CliError::Failure(format!("{kind}: laws {bad:?} fail\n{text}")));
    }
    if !width_ok {
        return Err(CliError::Precision(format!("{kind}: certificate too wide\n{text}")));
    }
    Ok(text)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarInput {
    Text(String),
    Number(i64),
    Value(Scalar),
}

#[derive(Deserialize)]
struct MoveRequest {
    #[serde(rename = "move")]
    tag: String,
    #[serde(default = "forward")]
    direction: String,
    input: Vec<ScalarInput>,
}

fn forward() -> String {
    "forward".into()
}

/// `move_cmd` driven by a JSON request.
pub fn move_request(cfg: &RunConfig, request: &str) -> Result<String, CliError> {
    let req: MoveRequest = serde_json::from_str(request).map_err(|e| CliError::Usage(format!("bad request: {e}")))?;
    let input = req
        .input
        .into_iter()
        .map(|x| match x {
            ScalarInput::Text(t) => t.parse::<Scalar>().map_err(cli_err),
            ScalarInput::Number(n) => Ok(Scalar::from_i64(n)),
            ScalarInput::Value(v) => Ok(v),
        })
        .collect::<Result<Vec<_>, _>>()?;
    move_cmd(cfg, &req.tag, &req.direction, &input)
}

/// Applies the zone map of a move to a tuple of valuations.
pub fn tropicalize(cfg: &RunConfig, tag: &str, direction: &str, values: &[String]) -> Result<String, CliError> {
    let kind = parse_kind(tag, direction)?;
    let v: Vec<BigRational> = values
        .iter()
        .flat_map(|p| p.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::to_string).collect::<Vec<_>>())
        .map(|p| parse_rational(&p).map_err(cli_err))
        .collect::<Result<_, _>>()?;
    check_arity(kind, v.len())?;
    let zm = zone_map(kind).map_err(cli_err)?;
    let out = zm.apply(&v).map_err(cli_err)?;
    let (vin, vout): (Vec<String>, Vec<String>) = (v.iter().map(rat_string).collect(), out.iter().map(rat_string).collect());
    Ok(match cfg.format {
        Format::Json => pretty(&json!({
            "move": kind.tag.name(),
            "direction": kind.direction.to_string(),
            "input": vin,
            "output": vout,
            "formula": zm.expression.output_strings(),
        })),
        _ => {
            let mut s = format!("{kind}\n");
            let _ = writeln!(s, "input   {}", vin.join("  "));
            let _ = writeln!(s, "output  {}", vout.join("  "));
            for (k, f) in zm.expression.output_strings().iter().enumerate() {
                let _ = writeln!(s, "  y{k} = {f}");
            }
            s
        }
    })
}

fn context(cfg: &RunConfig) -> Result<CellContext, CliError> {
    CellContext::new(cfg.model()?).map_err(cli_err)
}

/// Factors a matrix of the model: into its Weyl cell, along a given word, or as a τ-cell.
pub fn factor(cfg: &RunConfig, matrix: &str, word: Option<&str>, classify: bool) -> Result<String, CliError> {
    let ctx = context(cfg)?;
    let rows = parse_matrix(matrix)?;
    let n = ctx.model.dim();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("{} needs a {n}x{n} matrix", ctx.model.name())));
    }
    let m = Matrix::from_rows(rows);
    if classify {
        let t = classify_cell(&ctx, &m).map_err(cli_err)?;
        return Ok(match cfg.format {
            Format::Json => pretty(&json!({"cell": t.element.word, "phi": t.phi, "norm": t.norm})),
            _ => format!("cell {}  phi {}  norm {}\n", word_string(&t.element.word), t.phi, t.norm),
        });
    }
    let (w, c) = match word {
        Some(w) => {
            let w = parse_word(w)?;
            let c = factor_unipotent_a(&ctx, &m, &w).map_err(cli_err)?;
            (w, c)
        }
        None => weyl_cell_a(&ctx, &m).map_err(cli_err)?,
    };
    Ok(match cfg.format {
        Format::Json => pretty(&json!({"word": w, "coords": c, "coords_text": scalar_strings(&c)})),
        _ => format!("word   {}\ncoords {}\n", word_string(&w), scalar_strings(&c).join("  ")),
    })
}

/// One conjugation step x_{i*}(a)·g·x_i(a) (or with y) on a cell point.
pub fn act(
    cfg: &RunConfig,
    kind: &str,
    word: &str,
    coords: &str,
    torus: Option<&str>,
    letter: &str,
    value: &str,
) -> Result<String, CliError> {
    let ctx = context(cfg)?;
    let c = parse_scalar_list(coords)?;
    let point = match kind.to_ascii_lowercase().as_str() {
        "u+" | "uplus" | "plus" => CellPoint::u_plus(&ctx, &parse_word(word)?, &c),
        "u-" | "uminus" | "minus" => CellPoint::u_minus(&ctx, &parse_word(word)?, &c),
        "g" | "joint" => {
            let t = match torus {
                Some(t) => parse_scalar_list(t)?,
                None => vec![Scalar::one(); ctx.model.torus_rank()],
            };
            CellPoint::joint(&ctx, &parse_joint(word)?, &c, &t)
        }
        other => return Err(CliError::Usage(format!("unknown cell kind '{other}'"))),
    }
    .map_err(cli_err)?;
    let mut l: Vec<SignedLetter> = parse_joint(letter)?;
    if l.len() != 1 {
        return Err(CliError::Usage(format!("expected one letter, got '{letter}'")));
    }
    let explicit = letter.trim_start().starts_with(['+', '-']);
    if point.kind == CellKind::UMinus && !explicit {
        l[0].sign = -1;
    }
    let a: Scalar = value.parse().map_err(cli_err)?;
    let out = conjugation_step(&ctx, &point, l[0], &a).map_err(cli_err)?;
    Ok(match cfg.format {
        Format::Json => pretty(&serde_json::to_value(&out).map_err(|e| CliError::Usage(e.to_string()))?),
        _ => {
            let mut s = String::new();
            let kind = match out.kind {
                CellKind::UPlus => "U+",
                CellKind::UMinus => "U-",
                CellKind::G => "G",
            };
            let index = match &out.index {
                CellIndex::Single(w) => word_string(w),
                CellIndex::Pair(w, wp) => format!("({}, {})", word_string(w), word_string(wp)),
            };
            let word = match &out.word {
                CellWord::Plain(w) => word_string(w),
                CellWord::Joint(_) => joint_string(&out.word.signed()),
            };
            let _ = writeln!(s, "kind   {kind}");
            let _ = writeln!(s, "index  {index}");
            let _ = writeln!(s, "word   {word}");
            let _ = writeln!(s, "coords {}", scalar_strings(&out.coords).join("  "));
            if let Some(t) = &out.torus {
                let _ = writeln!(s, "torus  {}", scalar_strings(t).join("  "));
            }
            s
        }
    })
}
