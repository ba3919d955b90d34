//! Command-line interface. Every command prints one JSON document (census
//! prints JSON lines) and maps failures to exit codes:
//! 0 success, 1 disagreement, 2 input error, 3 resource guard.

use crate::bipermutohedral::{
    biflag_of_bisequence, bipermutohedron_vertex, count_chambers, enumerate_bipermutations, enumerate_bisubsets,
    pinned_vector,
};
use crate::bits::{self, Set};
use crate::conormal::{Bergman, Conormal};
use crate::corpus;
use crate::error::{Error, Result};
use crate::hodge;
use crate::io::{self, FanSpec};
use crate::matroid::Matroid;
use crate::verify::{self, Theorem};
use crate::weights::{self, PiecewiseLinearClass};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "conormal", version, about = "Bergman and conormal fans of matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic polynomials, beta, and f- and h-vectors with their verdicts.
    Invariants {
        path: PathBuf,
        /// Relabel the ground set first: a permutation "p0,p1,..." or "reverse".
        #[arg(long)]
        order: Option<String>,
    },
    /// CSM cycles with the fiber-sum and pushforward oracles.
    Csm {
        path: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Mixed degrees of the conormal fan against the characteristic polynomial.
    Degrees {
        path: PathBuf,
        #[arg(long)]
        order: Option<String>,
    },
    /// Check one identity with independent oracles: `verify 1.2 M.json` or
    /// `verify --theorem 1.2 M.json`.
    Verify {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[arg(long)]
        order: Option<String>,
        /// Longest biflag considered by `vanishing`.
        #[arg(long, default_value_t = verify::VANISHING_MAX_LENGTH)]
        max_len: usize,
    },
    /// Run invariants and verifications over a family of matroids, as JSON lines.
    Census {
        /// Bridgeless connected multigraphs with at most this many edges.
        #[arg(long)]
        graphs: Option<usize>,
        /// Uniform matroids on at most this many elements.
        #[arg(long)]
        uniform: Option<usize>,
        /// Every `*.json` matroid file in a directory, by file name.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Skip this many items from the start.
        #[arg(long, default_value_t = 0)]
        skip: usize,
        /// Append lines to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip as many items as `--out` already holds.
        #[arg(long)]
        resume: bool,
        /// Comma-separated identities to verify (default: all).
        #[arg(long)]
        theorems: Option<String>,
        #[arg(long)]
        order: Option<String>,
        /// Leave out the timing field so output is byte-reproducible.
        #[arg(long)]
        no_timings: bool,
    },
    /// Poincaré duality, hard Lefschetz, and Hodge–Riemann checks.
    Hodge {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = FanKind::Conormal)]
        fan: FanKind,
        #[arg(long)]
        order: Option<String>,
    },
    /// Operations on fans given in fan JSON.
    #[command(subcommand)]
    Fan(FanCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FanKind {
    Conormal,
    Bergman,
}

#[derive(Debug, Subcommand)]
pub enum FanCommand {
    /// Emit a fan as JSON.
    Export {
        /// Bipermutohedral fan on a ground set of size n+1.
        #[arg(long, group = "source")]
        bipermutohedral: Option<usize>,
        /// Conormal fan of a matroid file.
        #[arg(long, group = "source")]
        conormal: Option<PathBuf>,
        /// Bergman fan of a matroid file.
        #[arg(long, group = "source")]
        bergman: Option<PathBuf>,
    },
    /// Balancing of the weights in a fan file (fundamental weight if none).
    CheckBalanced { path: PathBuf },
    /// Degree of a product of classes against the weights in a fan file.
    Degree {
        path: PathBuf,
        /// Values of one class on the rays, "v0,v1,..."; repeat per factor.
        #[arg(long = "class", required = true)]
        classes: Vec<String>,
    },
    /// Stellar subdivision at a cone "i,j,...".
    Stellar {
        path: PathBuf,
        #[arg(long)]
        cone: String,
    },
}

/// One command's output.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub input: String,
    pub command: String,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Value>,
}

fn error_json(e: &Error) -> Value {
    json!({"kind": e.kind(), "message": e.to_string()})
}

/// Parse arguments, run, print, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    execute(cli.command, &mut out)
}

/// Run a parsed command, writing output to `out`.
pub fn execute(command: Command, out: &mut dyn Write) -> i32 {
    if let Command::Census { graphs, uniform, dir, skip, out: path, resume, theorems, order, no_timings } = command {
        let opts = CensusOptions { graphs, uniform, dir, skip, out: path, resume, theorems, order, timings: !no_timings };
        return match census(&opts, out) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(out, "{}", json!({"command": "census", "error": error_json(&e)}));
                e.exit_code()
            }
        };
    }
    let (input, name) = describe(&command);
    let start = Instant::now();
    match dispatch(command) {
        Ok((results, agree)) => {
            let report = RunReport {
                input,
                command: name,
                results,
                agree,
                timings: Some(json!({"total_ms": start.elapsed().as_millis() as u64})),
            };
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            if agree == Some(false) {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({"input": input, "command": name, "error": error_json(&e)})).expect("json")
            );
            e.exit_code()
        }
    }
}

fn describe(command: &Command) -> (String, String) {
    let p = |path: &Path| path.display().to_string();
    match command {
        Command::Invariants { path, .. } => (p(path), "invariants".into()),
        Command::Csm { path, .. } => (p(path), "csm".into()),
        Command::Degrees { path, .. } => (p(path), "degrees".into()),
        Command::Verify { args, .. } => (args.last().cloned().unwrap_or_default(), "verify".into()),
        Command::Census { .. } => (String::new(), "census".into()),
        Command::Hodge { path, .. } => (p(path), "hodge".into()),
        Command::Fan(f) => match f {
            FanCommand::Export { bipermutohedral, conormal, bergman } => (
                bipermutohedral
                    .map(|n| format!("bipermutohedral {n}"))
                    .or_else(|| conormal.as_deref().map(p))
                    .or_else(|| bergman.as_deref().map(p))
                    .unwrap_or_default(),
                "fan export".into(),
            ),
            FanCommand::CheckBalanced { path } => (p(path), "fan check-balanced".into()),
            FanCommand::Degree { path, .. } => (p(path), "fan degree".into()),
            FanCommand::Stellar { path, .. } => (p(path), "fan stellar".into()),
        },
    }
}

/// A relabeling: comma-separated permutation or `reverse`.
pub fn parse_order(spec: &str, n: usize) -> Result<Vec<usize>> {
    if spec.trim() == "reverse" {
        return Ok((0..n).rev().collect());
    }
    spec.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry '{t}'"))))
        .collect()
}

fn load(path: &Path, order: &Option<String>) -> Result<Matroid> {
    let m = io::read_matroid(path)?;
    reorder(m, order)
}

fn reorder(m: Matroid, order: &Option<String>) -> Result<Matroid> {
    match order {
        Some(spec) => m.relabel(&parse_order(spec, m.ground_size())?),
        None => Ok(m),
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("'{t}' is not an integer"))))
        .collect()
}

fn dispatch(command: Command) -> Result<(Value, Option<bool>)> {
    match command {
        Command::Invariants { path, order } => {
            let m = load(&path, &order)?;
            let inv = verify::invariants(&m)?;
            let agree = inv["beta_agree"] == json!(true) && inv["chi_agree"] == json!(true);
            Ok((inv, Some(agree)))
        }
        Command::Csm { path, k, order } => {
            let m = load(&path, &order)?;
            let ks: Vec<usize> = match k {
                Some(k) if k >= m.full_rank() => return Err(Error::Parse(format!("k = {k} exceeds r = {}", m.full_rank() - 1))),
                Some(k) => vec![k],
                None => (0..m.full_rank()).collect(),
            };
            let (agree, rows) = verify::csm_rows(&m, ks)?;
            Ok((json!({"cycles": rows}), Some(agree)))
        }
        Command::Degrees { path, order } => {
            let m = load(&path, &order)?;
            let (agree, details) = verify::char_poly_identity(&m)?;
            Ok((details, Some(agree)))
        }
        Command::Verify { theorem, args, order, max_len } => {
            let (name, path) = match (theorem, args.as_slice()) {
                (Some(t), [p]) => (t, p.clone()),
                (None, [t, p]) => (t.clone(), p.clone()),
                _ => return Err(Error::Parse("expected `verify THEOREM PATH` or `verify --theorem THEOREM PATH`".into())),
            };
            let theorem = Theorem::parse(&name)?;
            let m = load(Path::new(&path), &order)?;
            let v = if theorem == Theorem::Vanishing {
                let (agree, details) = verify::vanishing(&m, max_len)?;
                verify::Verification { theorem: name, agree, details }
            } else {
                verify::run(&m, theorem)?
            };
            let agree = v.agree;
            Ok((serde_json::to_value(v).expect("serializable"), Some(agree)))
        }
        Command::Census { .. } => unreachable!("handled by execute"),
        Command::Hodge { path, max_k, fan, order } => {
            let m = load(&path, &order)?;
            let report = match fan {
                FanKind::Conormal => {
                    let cn = Conormal::new(&m)?;
                    hodge::lefschetz_report(cn.fan(), &cn.support_function(), max_k)?
                }
                FanKind::Bergman => {
                    let b = Bergman::new(&m)?;
                    hodge::lefschetz_report(&b.fan, &b.support_function(), max_k)?
                }
            };
            let ok = report.all_hold();
            Ok((serde_json::to_value(report).expect("serializable"), Some(ok)))
        }
        Command::Fan(f) => fan_command(f),
    }
}

fn fan_command(command: FanCommand) -> Result<(Value, Option<bool>)> {
    match command {
        FanCommand::Export { bipermutohedral, conormal, bergman } => {
            if let Some(n) = bipermutohedral {
                return Ok((export_bipermutohedral(n + 1)?, None));
            }
            if let Some(path) = conormal {
                let m = io::read_matroid(&path)?;
                let cn = Conormal::new(&m)?;
                let mut v = serde_json::to_value(FanSpec::from_fan(cn.fan())).expect("serializable");
                v["ray_labels"] = json!(cn.biflats().iter().map(|&(f, g)| pair_label(m.ground_size(), f, g)).collect::<Vec<_>>());
                return Ok((v, None));
            }
            if let Some(path) = bergman {
                let m = io::read_matroid(&path)?;
                let b = Bergman::new(&m)?;
                let mut v = serde_json::to_value(FanSpec::from_fan(&b.fan)).expect("serializable");
                v["ray_labels"] = json!(b.flats.iter().map(|&f| bits::label(f)).collect::<Vec<_>>());
                return Ok((v, None));
            }
            Err(Error::Parse("fan export needs --bipermutohedral, --conormal, or --bergman".into()))
        }
        FanCommand::CheckBalanced { path } => {
            let spec = io::parse_fan(&io::read_text(&path)?)?;
            let fan = spec.build()?;
            let w = spec.weight(&fan)?;
            Ok((json!({"k": w.k, "balanced": weights::is_balanced(&fan, &w)?}), None))
        }
        FanCommand::Degree { path, classes } => {
            let spec = io::parse_fan(&io::read_text(&path)?)?;
            let fan = spec.build()?;
            let w = spec.weight(&fan)?;
            let classes = classes
                .iter()
                .map(|c| {
                    let v = parse_ints(c)?;
                    if v.len() != fan.rays().len() {
                        return Err(Error::DimensionMismatch(format!("class has {} values for {} rays", v.len(), fan.rays().len())));
                    }
                    Ok(PiecewiseLinearClass::from_integers(&v))
                })
                .collect::<Result<Vec<_>>>()?;
            let d = weights::degree(&fan, &classes, &w)?;
            Ok((json!({"k": w.k, "degree": io::rational_json(&d)}), None))
        }
        FanCommand::Stellar { path, cone } => {
            let spec = io::parse_fan(&io::read_text(&path)?)?;
            let fan = spec.build()?;
            let cone: Vec<usize> = parse_ints(&cone)?
                .into_iter()
                .map(|i| usize::try_from(i).map_err(|_| Error::Parse(format!("bad ray index {i}"))))
                .collect::<Result<_>>()?;
            let sub = hodge::stellar_subdivision(&fan, &cone)?;
            let mut v = serde_json::to_value(FanSpec::from_fan(&sub)).expect("serializable");
            v["new_ray"] = json!((sub.rays().len() > fan.rays().len()).then(|| fan.rays().len()));
            Ok((v, None))
        }
    }
}

fn pair_label(g: usize, s: Set, t: Set) -> String {
    let e = bits::full(g);
    let lab = |x: Set| if x == e { "E".to_string() } else { bits::label(x) };
    format!("{}|{}", lab(s), lab(t))
}

/// Rays, maximal cones (as biflags and bisequences), and vertices of the
/// bipermutohedral fan on `g` elements.
pub fn export_bipermutohedral(g: usize) -> Result<Value> {
    if !(1..=63).contains(&g) {
        return Err(Error::GroundTooLarge(g));
    }
    let chambers = count_chambers(g);
    let budget = hodge::monomial_budget()?;
    if chambers > budget as u128 {
        return Err(Error::ResourceGuard { needed: usize::try_from(chambers).unwrap_or(usize::MAX), budget });
    }
    let bisubsets = enumerate_bisubsets(g);
    let index: std::collections::HashMap<(Set, Set), usize> = bisubsets.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let rays: Vec<Vec<i64>> = bisubsets.iter().map(|&(s, t)| pinned_vector(g, s, t)).collect();
    let (mut cones, mut biflags, mut bisequences, mut vertices) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for b in enumerate_bipermutations(g) {
        let f = biflag_of_bisequence(&b);
        let mut cone: Vec<usize> = f.pairs().iter().map(|p| index[p]).collect();
        cone.sort_unstable();
        cones.push(cone);
        biflags.push(json!(f.pairs().iter().map(|&(s, t)| json!([io::set_json(s), io::set_json(t)])).collect::<Vec<_>>()));
        let seq = json!(b.parts().iter().map(|&p| io::set_json(p)).collect::<Vec<_>>());
        let v = bipermutohedron_vertex(&b)?;
        vertices.push(json!({"bisequence": seq.clone(), "x": v.x, "y": v.y}));
        bisequences.push(seq);
    }
    Ok(json!({
        "ground_size": g,
        "rank": 2 * (g - 1),
        "rays": rays,
        "ray_labels": bisubsets.iter().map(|&(s, t)| pair_label(g, s, t)).collect::<Vec<_>>(),
        "cones": cones,
        "biflags": biflags,
        "bisequences": bisequences,
        "vertices": vertices,
    }))
}

/// Settings of a census run.
#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub graphs: Option<usize>,
    pub uniform: Option<usize>,
    pub dir: Option<PathBuf>,
    pub skip: usize,
    pub out: Option<PathBuf>,
    pub resume: bool,
    pub theorems: Option<String>,
    pub order: Option<String>,
    pub timings: bool,
}

/// A census item: a label and the matroid, or the error from loading it.
pub type CensusItem = (String, Result<Matroid>);

/// Items in a fixed order: uniform, then graphic, then directory files.
pub fn census_items(opts: &CensusOptions) -> Result<Vec<CensusItem>> {
    let mut items: Vec<CensusItem> = Vec::new();
    if let Some(n) = opts.uniform {
        items.extend(corpus::uniform_corpus(n).into_iter().map(|m| (m.name().unwrap_or_default().to_string(), Ok(m))));
    }
    if let Some(e) = opts.graphs {
        items.extend(corpus::graph_corpus(e)?.into_iter().map(|m| (m.name().unwrap_or_default().to_string(), Ok(m))));
    }
    if let Some(dir) = &opts.dir {
        let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        items.extend(files.into_iter().map(|p| (p.display().to_string(), io::read_matroid(&p))));
    }
    Ok(items)
}

/// Invariants and verifications for one census item.
pub fn census_line(label: &str, m: &Result<Matroid>, theorems: &[Theorem], order: &Option<String>, timings: bool) -> Value {
    let start = Instant::now();
    let m = match m.clone().and_then(|m| reorder(m, order)) {
        Ok(m) => m,
        Err(e) => return json!({"input": label, "command": "census", "error": error_json(&e)}),
    };
    let mut line = json!({"input": label, "command": "census", "matroid": io::matroid_to_json(&m)});
    match verify::invariants(&m) {
        Ok(inv) => line["invariants"] = inv,
        Err(e) => line["invariants_error"] = error_json(&e),
    }
    let mut agree = true;
    let mut results = serde_json::Map::new();
    for &t in theorems {
        let entry = match verify::run(&m, t) {
            Ok(v) => {
                agree &= v.agree;
                json!({"agree": v.agree})
            }
            Err(e) => json!({"agree": null, "error": error_json(&e)}),
        };
        results.insert(t.name().to_string(), entry);
    }
    line["verifications"] = Value::Object(results);
    line["agree"] = json!(agree);
    if timings {
        line["timings"] = json!({"total_ms": start.elapsed().as_millis() as u64});
    }
    line
}

fn census(opts: &CensusOptions, out: &mut dyn Write) -> Result<i32> {
    let theorems: Vec<Theorem> = match &opts.theorems {
        Some(s) => s.split(',').filter(|t| !t.is_empty()).map(|t| Theorem::parse(t.trim())).collect::<Result<_>>()?,
        None => Theorem::ALL.to_vec(),
    };
    let items = census_items(opts)?;
    let mut skip = opts.skip;
    if opts.resume {
        let path = opts.out.as_ref().ok_or_else(|| Error::Parse("--resume needs --out".into()))?;
        if path.exists() {
            skip = io::read_text(path)?.lines().filter(|l| !l.trim().is_empty()).count();
        }
    }
    let mut file = match &opts.out {
        Some(p) => Some(
            std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    let mut any_disagreement = false;
    let pending: Vec<&CensusItem> = items.iter().skip(skip).collect();
    let chunk = rayon::current_num_threads().max(1) * 4;
    for group in pending.chunks(chunk) {
        let lines: Vec<Value> =
            group.par_iter().map(|(label, m)| census_line(label, m, &theorems, &opts.order, opts.timings)).collect();
        for line in lines {
            any_disagreement |= line["agree"] == json!(false);
            let text = serde_json::to_string(&line).expect("serializable");
            let target: &mut dyn Write = match file.as_mut() {
                Some(f) => f,
                None => out,
            };
            writeln!(target, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))?;
        }
    }
    Ok(if any_disagreement { 1 } else { 0 })
}
