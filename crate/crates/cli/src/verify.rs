//! Seeded verification suites. Each check feeds a named counter; the report lists the
//! counters sorted by name, so it depends only on the configuration and the seed.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;
use moves::{
    check_move_identity, compose_transition, conservation_laws, evaluate_move, oracle_model, psi_product,
    transition_between, Certificate, Direction, MoveError, MoveKind,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use pinned_groups::{model_catalog, Matrix, PinnedModel, Scalar};
use serde::Serialize;
use tp_cells::{
    classify_cell, factor_unipotent_a, jacobian_rank, kappa, kappa_joint, parameter_count, psi_plus, weyl_cell_a,
    CellContext,
};
use tropical_zones::{
    usemifield_element, usemifield_multiply, valuations, zone_map, zone_supported, PositiveRational, Trivial,
};
use weyl_core::braid::braid_graph;
use weyl_core::{CartanDatum, Family, MoveTag, StarChoice, TwistedWeyl, WeylGroup};

use crate::config::word_string;
use crate::sample::Sampler;
use crate::{CliError, Failure, Format, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Weyl,
    Models,
    Cells,
    Moves,
    Zones,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Weyl => "weyl",
            Suite::Models => "models",
            Suite::Cells => "cells",
            Suite::Moves => "moves",
            Suite::Zones => "zones",
            Suite::All => "all",
        }
    }
}

/// Failure messages kept per counter.
const KEEP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counter {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub undecidable: usize,
    pub failures: Vec<String>,
}

impl Counter {
    fn new(name: &str) -> Self {
        Counter {
            name: name.to_string(),
            passed: 0,
            total: 0,
            undecidable: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, r: Result<bool, Problem>, what: impl FnOnce() -> String) {
        self.total += 1;
        let msg = match r {
            Ok(true) => {
                self.passed += 1;
                return;
            }
            Ok(false) => what(),
            Err(p) => {
                if p.undecidable {
                    self.undecidable += 1;
                }
                format!("{}: {}", what(), p.message)
            }
        };
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub precision: u32,
    pub scope: String,
    pub counters: Vec<Counter>,
    pub passed: usize,
    pub total: usize,
    pub status: String,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.counters.iter().any(|c| c.passed + c.undecidable < c.total)
    }

    pub fn undecidable(&self) -> bool {
        self.counters.iter().any(|c| c.undecidable > 0)
    }

    pub fn counter(&self, name: &str) -> Option<&Counter> {
        self.counters.iter().find(|c| c.name == name)
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
            s.push('\n');
            return s;
        }
        let mut s = format!(
            "# verify {}  seed={}  precision={}  scope={}\n",
            self.suite, self.seed, self.precision, self.scope
        );
        let width = self.counters.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.counters {
            let status = if c.ok() { "pass" } else { "FAIL" };
            let _ = writeln!(s, "{:<width$}  {:>6}/{:<6} {status}", c.name, c.passed, c.total);
            for f in &c.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        let _ = writeln!(s, "total {}/{} {}", self.passed, self.total, self.status);
        s
    }
}

/// An error raised while running a check.
#[derive(Debug)]
pub struct Problem {
    message: String,
    undecidable: bool,
}

impl<E: Failure> From<E> for Problem {
    fn from(e: E) -> Self {
        Problem {
            undecidable: e.undecidable(),
            message: e.to_string(),
        }
    }
}

type Check = Result<bool, Problem>;

struct Runner<'a> {
    cfg: &'a RunConfig,
    counters: BTreeMap<String, Counter>,
}

impl<'a> Runner<'a> {
    fn counter(&mut self, name: &str) -> &mut Counter {
        self.counters.entry(name.to_string()).or_insert_with(|| Counter::new(name))
    }

    fn record(&mut self, name: &str, r: Check, what: impl FnOnce() -> String) {
        self.counter(name).record(r, what);
    }

    fn sampler(&self, name: &str) -> Sampler {
        Sampler::new(self.cfg.seed, name)
    }

    fn samples(&self, default: usize) -> usize {
        self.cfg.samples_or(default)
    }
}

fn datum(f: Family, r: usize, star: StarChoice) -> CartanDatum {
    CartanDatum::new(f, r, star).expect("built-in data are valid")
}

/// The data of the combinatorial tables when no type is given.
pub fn default_data() -> Vec<CartanDatum> {
    let mut v: Vec<CartanDatum> = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
    ]
    .into_iter()
    .map(|(f, r)| datum(f, r, StarChoice::Identity))
    .collect();
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::D, 4)] {
        v.push(datum(f, r, StarChoice::Flip));
    }
    v
}

fn scope_data(cfg: &RunConfig) -> Result<Vec<CartanDatum>, CliError> {
    if cfg.has_type() {
        Ok(vec![cfg.datum()?])
    } else {
        Ok(default_data())
    }
}

fn label(d: &CartanDatum) -> String {
    if d.star_is_identity() {
        d.label.to_string()
    } else {
        format!("{}*", d.label)
    }
}

fn weyl_suite(run: &mut Runner) -> Result<(), CliError> {
    for d in scope_data(run.cfg)? {
        let tw = TwistedWeyl::new(&d).map_err(crate::cli_err)?;
        let g = tw.group();
        let l = label(&d);
        for e in tw.twisted_ids() {
            let name = || format!("{l} {}", word_string(&g.element(e).word));
            let r: Check = (|| {
                let (len, phi, norm) = (g.len_of(e), tw.phi_id(e)?, tw.norm_id(e)?);
                let words = tw.involution_words_id(e)?;
                let mut ok = 2 * norm == len + phi && words.len() as u64 == tw.word_count_id(e)?;
                for w in &words {
                    ok &= w.len() == norm && tw.involution_target(w)? == e;
                }
                Ok(ok)
            })();
            run.record("weyl.norm-formula", r, name);
            for i in 0..d.rank() {
                let Some(f) = tw.twisted_step(e, i) else { continue };
                let r: Check = (|| {
                    let (p, q) = (tw.phi_id(e)?, tw.phi_id(f)?);
                    Ok(match g.len_of(f) - g.len_of(e) {
                        1 => q == p + 1,
                        2 => q == p,
                        _ => false,
                    })
                })();
                run.record("weyl.phi-recursion", r, || format!("{} step {}", name(), i + 1));
            }
            if d.star_is_identity() {
                let r: Check = (|| Ok(tw.phi_id(e)? == g.eigenspace_dim(e, -1)))();
                run.record("weyl.phi-eigenspace", r, name);
            }
            if d.label.family != Family::G {
                let r: Check = (|| Ok(braid_graph(&tw, &g.element(e))?.is_connected()))();
                run.record("weyl.braid-connected", r, name);
            }
        }
        if d.label.family == Family::A && d.rank() == 3 && !d.star_is_identity() {
            let r: Check = (|| {
                let bg = braid_graph(&tw, &g.longest())?;
                let (Some(u), Some(v)) = (bg.vertex_index(&[2, 3, 1, 2]), bg.vertex_index(&[2, 3, 2, 1])) else {
                    return Ok(false);
                };
                Ok(bg.edges.iter().any(|x| {
                    (x.from, x.to) == (u.min(v), u.max(v)) && x.site.tag == MoveTag::Ns46
                }))
            })();
            run.record("weyl.ns-edge A3*", r, || "2312 -- 2321".into());
        }
    }
    Ok(())
}

fn random_positive_element(s: &mut Sampler, model: &PinnedModel, group: &WeylGroup) -> Result<Matrix, Problem> {
    let e = s.index(group.order());
    let words = group.reduced_words(e);
    let w = s.pick(&words).clone();
    Ok(psi_product(model, &w, &s.ratios(w.len()))?)
}

fn models_suite(run: &mut Runner) -> Result<(), CliError> {
    let models = if run.cfg.has_type() {
        vec![run.cfg.model()?]
    } else {
        model_catalog().map_err(crate::cli_err)?
    };
    let n = run.samples(20);
    for m in models {
        let name = m.name().to_string();
        run.record("models.validate", m.validate().map(|_| true).map_err(Problem::from), || name.clone());
        let group = match WeylGroup::new(m.datum()) {
            Ok(g) => g,
            Err(e) => {
                run.record("models.tau", Err(e.into()), || name.clone());
                continue;
            }
        };
        let mut s = run.sampler(&format!("models.tau {name}"));
        for k in 0..n {
            let r: Check = (|| {
                let g = random_positive_element(&mut s, &m, &group)?;
                let h = m.twisted_action(&g, &Matrix::identity(m.dim()))?;
                Ok(m.tau(&m.tau(&g)?)?.equals(&g)? && m.is_tau_fixed(&h)?)
            })();
            run.record("models.tau", r, || format!("{name} sample {k}"));
        }
    }
    Ok(())
}

/// Moves whose checking model lies in the configured family, up to the configured rank;
/// B2 and C2 count as one type.
fn scoped_tags(cfg: &RunConfig, tags: &[MoveTag]) -> Result<Vec<MoveTag>, CliError> {
    if !cfg.has_type() {
        return Ok(tags.to_vec());
    }
    let d = cfg.datum()?;
    let mut out = Vec::new();
    for &t in tags {
        let (m, _) = oracle_model(t).map_err(crate::cli_err)?;
        let (f, g) = (m.datum().label.family, d.label.family);
        let same = f == g || (m.datum().rank() == 2 && d.rank() == 2 && [f, g].iter().all(|x| matches!(x, Family::B | Family::C)));
        if same && m.datum().rank() <= d.rank() {
            out.push(t);
        }
    }
    Ok(out)
}

fn equal_all(a: &[Scalar], b: &[Scalar]) -> Result<bool, Problem> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for (x, y) in a.iter().zip(b) {
        if !x.equals(y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn moves_suite(run: &mut Runner) -> Result<(), CliError> {
    let n = run.samples(100);
    let bound = 2f64.powi(-128);
    for tag in scoped_tags(run.cfg, &MoveTag::ALL)? {
        for dir in [Direction::Forward, Direction::Backward] {
            let kind = MoveKind::new(tag, dir);
            let mut s = run.sampler(&format!("moves {kind}"));
            let (id, laws, trip) = (
                format!("moves.identity {}", tag.name()),
                format!("moves.laws {}", tag.name()),
                format!("moves.round-trip {}", tag.name()),
            );
            let has_laws = !tag.is_standard() && tag != MoveTag::Ns43i;
            for _ in 0..n {
                let x = s.ratios(kind.arity());
                let what = || format!("{kind} at {}", x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
                let chk = check_move_identity(kind, &x);
                let (r, out): (Check, Option<Vec<Scalar>>) = match chk {
                    Ok(c) => {
                        let ok = match c.certificate {
                            Certificate::Exact => true,
                            Certificate::Interval { max_relative_width } => max_relative_width < bound,
                        };
                        (Ok(ok), Some(c.output))
                    }
                    Err(MoveError::IdentityFailed(_)) => (Ok(false), None),
                    Err(e) => (Err(e.into()), None),
                };
                run.record(&id, r, what);
                let Some(y) = out else { continue };
                if has_laws {
                    let r: Check = (|| {
                        let mut ok = true;
                        for l in conservation_laws(kind, &x, &y) {
                            ok &= l.holds()?;
                        }
                        Ok(ok)
                    })();
                    run.record(&laws, r, what);
                }
                let r: Check = (|| equal_all(&evaluate_move(kind.inverse(), &y)?, &x))();
                run.record(&trip, r, what);
            }
        }
    }
    Ok(())
}

fn sl(rank: usize, star: StarChoice) -> Result<CellContext, CliError> {
    let m = PinnedModel::special_linear(rank, star).map_err(crate::cli_err)?;
    CellContext::new(m).map_err(crate::cli_err)
}

fn cell_contexts(cfg: &RunConfig) -> Result<Vec<CellContext>, CliError> {
    if cfg.has_type() {
        if cfg.family()? != Family::A {
            return Ok(Vec::new());
        }
        return Ok(vec![CellContext::new(cfg.model()?).map_err(crate::cli_err)?]);
    }
    Ok(vec![
        sl(1, StarChoice::Identity)?,
        sl(2, StarChoice::Identity)?,
        sl(2, StarChoice::Flip)?,
        sl(3, StarChoice::Identity)?,
        sl(3, StarChoice::Flip)?,
        CellContext::new(PinnedModel::general_linear(2).map_err(crate::cli_err)?).map_err(crate::cli_err)?,
    ])
}

fn cells_suite(run: &mut Runner) -> Result<(), CliError> {
    for ctx in cell_contexts(run.cfg)? {
        unipotent_cells(run, &ctx)?;
        if ctx.model.rank() <= 2 {
            joint_cells(run, &ctx)?;
        }
    }
    Ok(())
}

fn unipotent_cells(run: &mut Runner, ctx: &CellContext) -> Result<(), CliError> {
    let name = ctx.model.name().to_string();
    let g = ctx.tw.group();
    let d = ctx.model.datum();
    let mut s = run.sampler(&format!("cells.factor {name}"));
    for k in 0..run.samples(200) {
        let r: Check = (|| {
            let e = s.index(g.order());
            let words = g.reduced_words(e);
            let w = s.pick(&words).clone();
            let c = s.ratios(w.len());
            let m = psi_plus(ctx, &w, &c)?;
            let back = factor_unipotent_a(ctx, &m, &w)?;
            let (w2, c2) = weyl_cell_a(ctx, &m)?;
            Ok(equal_all(&back, &c)? && g.id_of_word(&w2)? == e && psi_plus(ctx, &w2, &c2)?.equals(&m)?)
        })();
        run.record("cells.factor-psi", r, || format!("{name} sample {k}"));
    }
    let n = run.samples(20);
    for e in ctx.tw.twisted_ids() {
        let words = ctx.tw.involution_words_id(e).map_err(crate::cli_err)?;
        let info = ctx.tw.info(e).map_err(crate::cli_err)?;
        let what = |k: usize| format!("{name} {} sample {k}", word_string(&info.element.word));
        let mut s = run.sampler(&format!("cells.kappa {name} {}", word_string(&info.element.word)));
        for k in 0..n {
            let w = s.pick(&words).clone();
            let c = s.ratios(w.len());
            let r: Check = (|| {
                let m = kappa(ctx, &w, &c)?;
                Ok(ctx.model.is_tau_fixed(&m)? && classify_cell(ctx, &m)? == info)
            })();
            run.record("cells.kappa-classified", r, || what(k));
            let r: Check = (|| {
                let m = kappa(ctx, &w, &c)?;
                let mut ok = true;
                for w2 in &words {
                    let map = transition_between(&ctx.tw, &w, w2)?;
                    let c2 = compose_transition(d, &map, &c)?;
                    ok &= kappa(ctx, w2, &c2)?.equals(&m)?;
                }
                Ok(ok)
            })();
            run.record("cells.kappa-well-defined", r, || what(k));
            let (w2, w3) = (s.pick(&words).clone(), s.pick(&words).clone());
            let r: Check = (|| {
                let around = transition_between(&ctx.tw, &w, &w2)?
                    .then(&transition_between(&ctx.tw, &w2, &w3)?)?
                    .then(&transition_between(&ctx.tw, &w3, &w)?)?;
                equal_all(&compose_transition(d, &around, &c)?, &c)
            })();
            run.record("cells.transition-cycles", r, || what(k));
            for i in 1..=d.rank() {
                let a = s.ratio();
                let r: Check = (|| {
                    let m = kappa(ctx, &w, &c)?;
                    let moved = ctx.model.twisted_action(&ctx.model.gen_x(i, &a)?, &m)?;
                    let si = g.id_of_word(&[i])?;
                    Ok(classify_cell(ctx, &moved)? == ctx.tw.info(ctx.tw.cell_index_action_id(si, e)?)?)
                })();
                run.record("cells.index-law", r, || format!("{} letter {i}", what(k)));
            }
        }
    }
    Ok(())
}

fn joint_cells(run: &mut Runner, ctx: &CellContext) -> Result<(), CliError> {
    let name = ctx.model.name().to_string();
    let ids = ctx.tw.twisted_ids();
    let torus_dim = ctx.model.tau_fixed_torus_dim();
    let gl2 = name == "GL2";
    let mut s = run.sampler(&format!("cells.joint {name}"));
    let mut pairs = Vec::new();
    for &a in &ids {
        for &b in &ids {
            pairs.push((a, b));
            let expect = ctx.tw.norm_id(a).map_err(crate::cli_err)? + ctx.tw.norm_id(b).map_err(crate::cli_err)? + torus_dim;
            let what = || format!("{name} ({}, {})", word_string(&ctx.tw.group().element(a).word), word_string(&ctx.tw.group().element(b).word));
            let words = ctx.tw.joint_words_id(a, b).map_err(crate::cli_err)?;
            for jj in &words {
                let r: Check = (|| Ok(parameter_count(ctx, jj)? == expect))();
                run.record("cells.parameter-count", r, what);
            }
            let jj = s.pick(&words).clone();
            let r: Check = (|| {
                let c = s.ratios(jj.len());
                let t = s.tau_torus(&ctx.model)?;
                Ok(jacobian_rank(ctx, &jj, &c, &t)? == expect)
            })();
            run.record("cells.jacobian-rank", r, what);
        }
    }
    for k in 0..run.samples(100) {
        let (a, b) = *s.pick(&pairs);
        let r: Check = (|| {
            let words = ctx.tw.joint_words_id(a, b)?;
            let jj = s.pick(&words).clone();
            let c = s.ratios(jj.len());
            let t = s.tau_torus(&ctx.model)?;
            let m = kappa_joint(ctx, &jj, &c, &t)?;
            let mut ok = ctx.model.is_tau_fixed(&m)?;
            if gl2 {
                ok &= m.get(0, 0).equals(m.get(1, 1))? && m.det()?.equals(&Scalar::one())?;
            }
            Ok(ok)
        })();
        let counter = if gl2 { "cells.joint-gl2" } else { "cells.joint-tau-fixed" };
        run.record(counter, r, || format!("{name} sample {k}"));
    }
    Ok(())
}

fn zones_suite(run: &mut Runner) -> Result<(), CliError> {
    let zone_tags: Vec<MoveTag> = MoveTag::ALL.into_iter().filter(|&t| zone_supported(t) && t != MoveTag::StdG2 && t != MoveTag::StarSwap).collect();
    let n = run.samples(200);
    for tag in scoped_tags(run.cfg, &zone_tags)? {
        for dir in [Direction::Forward, Direction::Backward] {
            let kind = MoveKind::new(tag, dir);
            let name = format!("zones.preservation {} {dir}", tag.name());
            let zm = zone_map(kind).map_err(crate::cli_err)?;
            let mut s = run.sampler(&name);
            for k in 0..n {
                let r: Check = (|| {
                    let x = s.series_vec(kind.arity())?;
                    let y = evaluate_move(kind, &x)?;
                    Ok(valuations(&y)? == zm.apply(&valuations(&x)?)?)
                })();
                run.record(&name, r, || format!("{kind} sample {k}"));
            }
        }
    }
    if scoped_tags(run.cfg, &[MoveTag::Ns44])?.contains(&MoveTag::Ns44) {
        let r: Check = (|| {
            let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
            let out = zone_map(MoveKind::new(MoveTag::Ns44, Direction::Forward))?.apply(&[q(1, 1), q(0, 1)])?;
            Ok(out == vec![q(0, 1), q(1, 2)])
        })();
        run.record("zones.half-integer NS-4.4", r, || "(1,0)".into());
    }
    monoid_checks(run)
}

fn monoid_checks(run: &mut Runner) -> Result<(), CliError> {
    let data = if run.cfg.has_type() {
        vec![run.cfg.datum()?]
    } else {
        vec![datum(Family::A, 2, StarChoice::Identity), datum(Family::B, 2, StarChoice::Identity)]
    };
    for d in data {
        let g = WeylGroup::new(&d).map_err(crate::cli_err)?;
        let l = d.label.to_string();
        for a in g.ids() {
            for b in g.ids() {
                let r: Check = (|| {
                    let p = |e: usize| {
                        let w = g.element(e).word;
                        usemifield_element(&g, &w, &vec![Trivial; w.len()])
                    };
                    Ok(usemifield_multiply(&g, &p(a)?, &p(b)?)?.index == g.demazure_ids(a, b))
                })();
                run.record("zones.monoid-demazure", r, || format!("{l} {a}*{b}"));
            }
        }
    }
    let model = match run.cfg.has_type() {
        true if run.cfg.family()? == Family::A => run.cfg.model()?,
        true => return Ok(()),
        false => PinnedModel::special_linear(2, StarChoice::Identity).map_err(crate::cli_err)?,
    };
    let ctx = CellContext::new(model).map_err(crate::cli_err)?;
    let g = ctx.tw.group().clone();
    let mut s = run.sampler(&format!("zones.monoid-matrix {}", ctx.model.name()));
    for k in 0..run.samples(100) {
        let r: Check = (|| {
            let mut draw = || -> Result<(Vec<usize>, Vec<Scalar>), Problem> {
                let e = s.index(g.order());
                let w = g.element(e).word;
                let c = s.ratios(w.len());
                Ok((w, c))
            };
            let ((w1, c1), (w2, c2)) = (draw()?, draw()?);
            let pr = |c: &[Scalar]| -> Result<Vec<PositiveRational>, Problem> {
                c.iter()
                    .map(|x| {
                        let q = x.as_rational().ok_or_else(|| Problem { message: "irrational sample".into(), undecidable: false })?;
                        Ok(PositiveRational::new(q.clone())?)
                    })
                    .collect()
            };
            let p = usemifield_element(&g, &w1, &pr(&c1)?)?;
            let q = usemifield_element(&g, &w2, &pr(&c2)?)?;
            let pq = usemifield_multiply(&g, &p, &q)?;
            let m = psi_product(&ctx.model, &w1, &c1)?.mul(&psi_product(&ctx.model, &w2, &c2)?);
            let coords: Vec<Scalar> = pq.coords.iter().map(PositiveRational::to_scalar).collect();
            let (w, _) = weyl_cell_a(&ctx, &m)?;
            Ok(psi_product(&ctx.model, &pq.word, &coords)?.equals(&m)? && g.id_of_word(&w)? == pq.index)
        })();
        run.record("zones.monoid-matrix", r, || format!("{} sample {k}", ctx.model.name()));
    }
    Ok(())
}

pub fn run_suite(cfg: &RunConfig, suite: Suite) -> Result<Report, CliError> {
    let mut run = Runner {
        cfg,
        counters: BTreeMap::new(),
    };
    let all = suite == Suite::All;
    if all || suite == Suite::Weyl {
        weyl_suite(&mut run)?;
    }
    if all || suite == Suite::Models {
        models_suite(&mut run)?;
    }
    if all || suite == Suite::Moves {
        moves_suite(&mut run)?;
    }
    if all || suite == Suite::Cells {
        cells_suite(&mut run)?;
    }
    if all || suite == Suite::Zones {
        zones_suite(&mut run)?;
    }
    let counters: Vec<Counter> = run.counters.into_values().collect();
    let passed = counters.iter().map(|c| c.passed).sum();
    let total = counters.iter().map(|c| c.total).sum();
    let scope = if cfg.has_type() {
        format!("{} star={}", cfg.datum()?.label, cfg.star_name())
    } else {
        "default".into()
    };
    let mut report = Report {
        suite: suite.name().into(),
        seed: cfg.seed,
        precision: cfg.precision,
        scope,
        counters,
        passed,
        total,
        status: String::new(),
    };
    report.status = if report.failed() {
        "fail"
    } else if report.undecidable() {
        "precision"
    } else {
        "pass"
    }
    .into();
    Ok(report)
}
