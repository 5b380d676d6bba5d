//! Command-line front end. Every command prints a JSON report (or a short
//! text rendering of it) and exits 0 when all checks pass, 1 when one
//! fails, 2 on a usage error and 3 when the library rejects the input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::perm::{phi, QuotientMap};
use crate::presentations::presentation;
use crate::reps::{
    build_rep, faithfulness_witnesses, is_2local, kernel_search, mvpt3_rep, mvpt3_source, named_invariant,
    restrict_rep, thm43_predicate, verify_named_invariant, verify_relations, verify_system_blocks, rho_block,
    s_block, Battery, Mvpt3Case, RepFamily, RepParams,
};
use crate::schreier::{expand, expand_letter, expand_word, lemma31_action, SchreierContext};
use crate::words::{parse_letters, parse_word, Family, GenSym, GroupCtx};

pub const TOOL_VERSION: &str = concat!("mvtwin ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub item: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    pub fn new(item: impl Into<String>, pass: bool, detail: Value) -> Check {
        Check {
            item: item.into(),
            pass,
            detail,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CtxInfo {
    pub n: usize,
    pub k: usize,
    pub group: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub task: String,
    pub ctx: CtxInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<RepFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<RepParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    pub results: Vec<Check>,
    pub pass: bool,
    pub seed: u64,
    pub tool_version: &'static str,
}

impl Report {
    fn new(task: &str, n: usize, k: usize, group: Family, seed: u64) -> Report {
        Report {
            task: task.to_string(),
            ctx: CtxInfo {
                n,
                k,
                group: group.name(),
            },
            family: None,
            params: None,
            data: None,
            results: Vec::new(),
            pass: true,
            seed,
            tool_version: TOOL_VERSION,
        }
    }

    fn push(&mut self, item: impl Into<String>, pass: bool, detail: Value) {
        self.results.push(Check::new(item, pass, detail));
    }

    fn finish(mut self) -> Report {
        self.results.sort_by(|a, b| a.item.cmp(&b.item));
        self.pass = self.results.iter().all(|c| c.pass);
        self
    }
}

/// Results of a `--grid` run, one report per `(n, k)` point.
#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub task: String,
    pub points: Vec<Report>,
    pub pass: bool,
    pub seed: u64,
    pub tool_version: &'static str,
}

/// Restrictions on randomly sampled parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Constraint {
    None,
    AllYEqual,
    YDistinct,
    /// `z8` with all `y` equal and `b = (1 + a) y`.
    Zeta8Plus,
    /// `z8` with all `y` equal and `b = (1 - a) y`.
    Zeta8Minus,
    /// `z8` with all `y` equal and `b/y` different from `1 ± a`.
    Zeta8Generic,
}

/// Uniform numerator and denominator in `1..=50`, uniform sign.
fn draw(rng: &mut ChaCha8Rng) -> Scalar {
    let num: i64 = rng.gen_range(1..=50);
    let den: i64 = rng.gen_range(1..=50);
    let v = Scalar::frac(num, den);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// Reproducible random parameters for a family.
pub fn sample_params(family: RepFamily, k: usize, constraint: Constraint, seed: u64) -> Result<RepParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zeta8 = matches!(
        constraint,
        Constraint::Zeta8Plus | Constraint::Zeta8Minus | Constraint::Zeta8Generic
    );
    if zeta8 && family != RepFamily::Z8 {
        return Err(Error::Parameter(format!("constraint {constraint:?} applies to z8 only")));
    }
    if constraint == Constraint::YDistinct && k < 2 {
        return Err(Error::Parameter("distinct y values need k >= 2".into()));
    }
    let y = match constraint {
        Constraint::AllYEqual | Constraint::Zeta8Plus | Constraint::Zeta8Minus | Constraint::Zeta8Generic => {
            vec![draw(&mut rng); k]
        }
        Constraint::YDistinct => loop {
            let y: Vec<Scalar> = (0..k).map(|_| draw(&mut rng)).collect();
            if y.iter().any(|v| *v != y[0]) {
                break y;
            }
        },
        Constraint::None => (0..k).map(|_| draw(&mut rng)).collect(),
    };
    let mut params = RepParams::new(y);
    if family.needs_z() {
        params.z = Some(draw(&mut rng));
    }
    if family.needs_ab() {
        let one = Scalar::one();
        let y0 = params.y[0].clone();
        let (a, b) = loop {
            let a = draw(&mut rng);
            let b = match constraint {
                Constraint::Zeta8Plus => (&one + &a) * &y0,
                Constraint::Zeta8Minus => (&one - &a) * &y0,
                _ => draw(&mut rng),
            };
            let on_boundary = b == (&one + &a) * &y0 || b == (&one - &a) * &y0;
            if b.is_zero() || (constraint == Constraint::Zeta8Generic && on_boundary) {
                continue;
            }
            break (a, b);
        };
        params = params.with_ab(a, b);
    }
    Ok(params)
}

#[derive(Debug, Parser)]
#[command(name = "mvtwin", version, about = "Exact computations in multi-virtual twin groups")]
struct Cli {
    /// Number of strands; a comma list with --grid.
    #[arg(long, global = true, default_value = "3")]
    n: String,
    /// Number of virtual layers; a comma list with --grid.
    #[arg(long, global = true, default_value = "1")]
    k: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run over every (n, k) pair from the comma lists in --n and --k.
    #[arg(long, global = true)]
    grid: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    Mvt,
    Mvpt,
    Mvht,
}

impl From<GroupArg> for Family {
    fn from(g: GroupArg) -> Family {
        match g {
            GroupArg::Mvt => Family::Mvt,
            GroupArg::Mvpt => Family::Mvpt,
            GroupArg::Mvht => Family::Mvht,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MapArg {
    Phi,
    Psi,
}

impl From<MapArg> for QuotientMap {
    fn from(m: MapArg) -> QuotientMap {
        match m {
            MapArg::Phi => QuotientMap::Phi,
            MapArg::Psi => QuotientMap::Psi,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generators and defining relators of a group.
    Relators {
        #[arg(long, value_enum, default_value = "mvt")]
        group: GroupArg,
    },
    /// Image of a word under phi or psi.
    Quotient {
        #[arg(long, value_enum, default_value = "phi")]
        map: MapArg,
        #[arg(long)]
        word: String,
    },
    /// Representation checks.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Kernel subgroups and rewriting.
    Subgroup {
        #[command(subcommand)]
        cmd: SubgroupCmd,
    },
    /// Conjugate a subgroup generator by a rho^0 word.
    Lemma31 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        sym: String,
    },
    /// The coset transversal keyed by permutation.
    Transversal,
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long)]
    family: RepFamily,
    /// Comma list of k rationals; sampled from --seed when absent.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Constraint used when sampling missing parameters.
    #[arg(long, value_enum, default_value = "none")]
    constraint: Constraint,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CaseArg {
    Diagonal,
    Triangular,
    Generic,
}

#[derive(Debug, Subcommand)]
enum RepCmd {
    /// Evaluate every defining relator.
    Verify(ParamArgs),
    /// Burnside span dimension against the closed-form verdict.
    Irreducible(ParamArgs),
    /// Nontrivial kernel elements.
    Witness(ParamArgs),
    /// Substitute the blocks into the classification equations.
    System(ParamArgs),
    /// Search short words for kernel elements.
    KernelSearch {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 20_000)]
        beam: usize,
    },
    /// The listed M_2 VPT_3 matrices against restriction.
    Mvpt3 {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        eps: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// `y0,y1`; sampled when absent.
        #[arg(long, allow_hyphen_values = true)]
        y: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
enum SubgroupCmd {
    /// Schreier generators and their labels.
    Gens {
        #[arg(long, value_enum, default_value = "phi")]
        map: MapArg,
    },
    /// Listed relators and rewritten conjugated ambient relators.
    Relators {
        #[arg(long, value_enum, default_value = "phi")]
        map: MapArg,
    },
    /// Rewrite a kernel word into subgroup generators.
    Rewrite {
        #[arg(long, value_enum, default_value = "phi")]
        map: MapArg,
        #[arg(long)]
        word: String,
    },
}

fn parse_scalar(text: &str) -> Result<Scalar> {
    text.trim().parse()
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("bad {what} value {t:?}")))
        })
        .collect()
}

fn resolve_params(args: &ParamArgs, k: usize, seed: u64) -> Result<RepParams> {
    let mut p = sample_params(args.family, k, args.constraint, seed)?;
    if let Some(y) = &args.y {
        p.y = y.split(',').map(parse_scalar).collect::<Result<_>>()?;
    }
    if let Some(z) = &args.z {
        p.z = Some(parse_scalar(z)?);
    }
    if let Some(a) = &args.a {
        p.a = Some(parse_scalar(a)?);
    }
    if let Some(b) = &args.b {
        p.b = Some(parse_scalar(b)?);
    }
    p.validate(args.family, k)?;
    Ok(p)
}

fn key(prefix: &str, idx: usize) -> String {
    format!("{prefix}/{idx:05}")
}

fn run_point(cmd: &Command, n: usize, k: usize, seed: u64) -> Result<Report> {
    let amb = GroupCtx::mvt(n, k)?;
    Ok(match cmd {
        Command::Relators { group } => {
            let ctx = GroupCtx::new(n, k, (*group).into())?;
            let pres = presentation(&ctx)?;
            let mut r = Report::new("relators", n, k, ctx.family(), seed);
            r.data = Some(json!({
                "generators": pres.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>()
            }));
            for (i, rel) in pres.relators.iter().enumerate() {
                r.push(key("relator", i), true, json!({"tag": rel.tag, "word": rel.word.to_string()}));
            }
            r
        }
        Command::Quotient { map, word } => {
            let map: QuotientMap = (*map).into();
            let w = parse_word(word, &amb)?;
            let image = map.image(&w)?;
            let mut r = Report::new(&format!("quotient {}", map.name()), n, k, Family::Mvt, seed);
            r.push(
                "image",
                true,
                json!({"word": w.to_string(), "image_cycles": image.to_string(), "in_kernel": image.is_identity()}),
            );
            r
        }
        Command::Rep { cmd } => run_rep(cmd, n, k, seed)?,
        Command::Subgroup { cmd } => run_subgroup(cmd, n, k, seed)?,
        Command::Lemma31 { a, sym } => {
            let a = parse_word(a, &amb)?;
            let letters = parse_letters(sym, n, k)?;
            let [l] = letters[..] else {
                return Err(Error::Parameter("--sym takes exactly one subgroup symbol".into()));
            };
            let result = lemma31_action(&a, l.sym)?;
            let sym_word = expand_letter(l, &amb)?;
            let conj = a.invert().concat(&sym_word)?.concat(&a)?;
            let battery = Battery::standard(n, k)?;
            let agrees = battery.agree(&expand_letter(result, &amb)?, &conj)?;
            let mut r = Report::new("lemma31", n, k, l.sym.family(), seed);
            r.push(
                "action",
                agrees,
                json!({"a": a.to_string(), "sym": l.to_string(), "result": result.to_string()}),
            );
            r
        }
        Command::Transversal => {
            let sc = SchreierContext::new(n, k, QuotientMap::Phi)?;
            let mut r = Report::new("transversal", n, k, Family::Mvt, seed);
            for (i, (p, w)) in sc.transversal().iter().enumerate() {
                r.push(
                    key("entry", i),
                    phi(w)? == *p,
                    json!({"permutation": p.to_string(), "word": w.to_string()}),
                );
            }
            r
        }
    }
    .finish())
}

fn run_rep(cmd: &RepCmd, n: usize, k: usize, seed: u64) -> Result<Report> {
    let with_params = |task: &str, args: &ParamArgs| -> Result<(Report, RepParams)> {
        let params = resolve_params(args, k, seed)?;
        let mut r = Report::new(task, n, k, Family::Mvt, seed);
        r.family = Some(args.family);
        r.params = Some(params.clone());
        Ok((r, params))
    };
    Ok(match cmd {
        RepCmd::Verify(args) => {
            let (mut r, params) = with_params("rep verify", args)?;
            let rep = build_rep(args.family, &params, n, k)?;
            for (i, c) in verify_relations(&rep)?.into_iter().enumerate() {
                r.push(key("relator", i), c.pass, json!({"tag": c.tag, "word": c.word}));
            }
            r.push("shape", is_2local(&rep), json!("homogeneous 2-local"));
            r
        }
        RepCmd::Irreducible(args) => {
            let (mut r, params) = with_params("rep irreducible", args)?;
            let rep = build_rep(args.family, &params, n, k)?;
            let dim = rep.span_dimension()?;
            let burnside_reducible = dim < n * n;
            let predicate = thm43_predicate(args.family, &params)?;
            let verdict = |red: bool| if red { "reducible" } else { "irreducible" };
            r.push(
                "burnside",
                true,
                json!({"span_dimension": dim, "full": n * n, "verdict": verdict(burnside_reducible)}),
            );
            r.push(
                "predicate",
                predicate == burnside_reducible,
                json!({"verdict": verdict(predicate)}),
            );
            if let Some(inv) = named_invariant(args.family, &params, n)? {
                r.push(
                    "invariant",
                    verify_named_invariant(&rep, &inv)?,
                    json!({"kind": inv.kind, "vector": inv.vector, "conjugator": inv.conjugator}),
                );
            }
            r
        }
        RepCmd::Witness(args) => {
            let (mut r, params) = with_params("rep witness", args)?;
            for (i, w) in faithfulness_witnesses(args.family, &params, n, k)?.iter().enumerate() {
                r.push(
                    key("witness", i),
                    w.holds(),
                    json!({
                        "word": w.word.to_string(),
                        "maps_to_identity": w.maps_to_identity,
                        "phi": w.phi.to_string(),
                        "psi": w.psi.to_string(),
                        "certificate": w.certificate().map(QuotientMap::name),
                    }),
                );
            }
            r
        }
        RepCmd::System(args) => {
            let (mut r, params) = with_params("rep system", args)?;
            let s = s_block(args.family, &params)?;
            let rhos = (0..k)
                .map(|a| rho_block(args.family, &params, a))
                .collect::<Result<Vec<_>>>()?;
            for (i, e) in verify_system_blocks(&s, &rhos)?.into_iter().enumerate() {
                r.push(key("equation", i), e.pass, json!(e.name));
            }
            r
        }
        RepCmd::KernelSearch { params: args, max_len, beam } => {
            let (mut r, params) = with_params("rep kernel-search", args)?;
            let rep = build_rep(args.family, &params, n, k)?;
            let found = kernel_search(&rep, *max_len, *beam)?;
            for (i, (w, map)) in found.certified.iter().enumerate() {
                r.push(key("certified", i), true, json!({"word": w.to_string(), "certificate": map.name()}));
            }
            for (i, w) in found.unresolved.iter().enumerate() {
                r.push(key("unresolved", i), true, json!({"word": w.to_string()}));
            }
            r.data = Some(json!({"explored": found.explored, "truncated": found.truncated}));
            r
        }
        RepCmd::Mvpt3 { case, eps, delta, t, z, a, b, y } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut get = |v: &Option<String>| -> Result<Scalar> {
                match v {
                    Some(text) => parse_scalar(text),
                    None => Ok(draw(&mut rng)),
                }
            };
            let (y0, y1) = match y {
                Some(text) => match &parse_list::<Scalar>(text, "y")?[..] {
                    [y0, y1] => (y0.clone(), y1.clone()),
                    _ => return Err(Error::Parameter("--y takes y0,y1".into())),
                },
                None => (get(&None)?, get(&None)?),
            };
            let case = match case {
                CaseArg::Diagonal => Mvpt3Case::Diagonal { eps: *eps, delta: *delta },
                CaseArg::Triangular => Mvpt3Case::Triangular { t: *t, z: get(z)? },
                CaseArg::Generic => Mvpt3Case::Generic { a: get(a)?, b: get(b)? },
            };
            let printed = mvpt3_rep(&case, &y0, &y1)?;
            let source = mvpt3_source(&case, &y0, &y1)?;
            let restricted = restrict_rep(&source, Family::Mvpt)?;
            let mut r = Report::new("rep mvpt3", 3, 2, Family::Mvpt, seed);
            r.family = source.family();
            r.params = Some(source.params().clone());
            r.data = Some(json!({"case": case}));
            for (g, m) in &printed {
                r.push(
                    format!("symbol/{g}"),
                    restricted.get(g) == Some(m),
                    json!({"printed": m, "restricted": restricted.get(g)}),
                );
            }
            r
        }
    })
}

fn run_subgroup(cmd: &SubgroupCmd, n: usize, k: usize, seed: u64) -> Result<Report> {
    let map = match cmd {
        SubgroupCmd::Gens { map } | SubgroupCmd::Relators { map } | SubgroupCmd::Rewrite { map, .. } => {
            QuotientMap::from(*map)
        }
    };
    let sc = SchreierContext::new(n, k, map)?;
    let fam = sc.family();
    Ok(match cmd {
        SubgroupCmd::Gens { .. } => {
            let mut r = Report::new("subgroup gens", n, k, fam, seed);
            let gens = sc.schreier_generators()?;
            let mut labels: Vec<GenSym> = gens.iter().map(|g| g.label.sym).collect();
            labels.sort();
            labels.dedup();
            for (i, g) in labels.iter().enumerate() {
                let e = expand(*g, sc.ctx())?;
                r.push(
                    key("generator", i),
                    map.in_kernel(&e)?,
                    json!({"label": g.to_string(), "expansion": e.to_string()}),
                );
            }
            r.data = Some(json!({"schreier_words": gens.len(), "labels": labels.len()}));
            r
        }
        SubgroupCmd::Relators { .. } => {
            let pres = sc.subgroup_presentation()?;
            let battery = Battery::standard(n, k)?;
            let mut r = Report::new("subgroup relators", n, k, fam, seed);
            for (i, rel) in pres.printed.relators.iter().enumerate() {
                r.push(
                    key("printed", i),
                    battery.is_trivial(&expand_word(&rel.word)?)?,
                    json!({"tag": rel.tag, "word": rel.word.to_string()}),
                );
            }
            for (i, rw) in pres.rewritten.iter().enumerate() {
                r.push(key("rewritten", i), rw.battery_pass, serde_json::to_value(rw).expect("serializable"));
            }
            r.data = Some(json!({
                "generators": pres.generators.iter().map(|(g, _)| g.to_string()).collect::<Vec<_>>()
            }));
            r
        }
        SubgroupCmd::Rewrite { word, .. } => {
            let w = parse_word(word, &sc.ambient())?;
            let tau = sc.rewrite_tau(&w)?;
            let raw = sc.rewrite_tau_raw(&w)?;
            let battery = Battery::standard(n, k)?;
            let mut r = Report::new("subgroup rewrite", n, k, fam, seed);
            r.push(
                "tau",
                battery.agree(&w, &expand_word(&tau)?)?,
                json!({"word": w.to_string(), "tau": tau.to_string(), "raw": raw.to_string()}),
            );
            r
        }
    })
}

fn render_text(r: &Report, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{} (n={}, k={}, {})", r.task, r.ctx.n, r.ctx.k, r.ctx.group)?;
    if let Some(f) = r.family {
        writeln!(out, "family {f}: {}", serde_json::to_string(&r.params).expect("serializable"))?;
    }
    for c in &r.results {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        writeln!(out, "{mark} {} {}", c.item, c.detail)?;
    }
    writeln!(out, "pass: {}", r.pass)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 2,
        _ => 3,
    }
}

/// Parses `argv` (including the program name), writes the report to `out`
/// and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let lists = (parse_list::<usize>(&cli.n, "n"), parse_list::<usize>(&cli.k, "k"));
    let (ns, ks) = match lists {
        (Ok(ns), Ok(ks)) => (ns, ks),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(out, "error: {e}");
            return 2;
        }
    };
    if !cli.grid && (ns.len() != 1 || ks.len() != 1) {
        let _ = writeln!(out, "error: comma lists in --n/--k need --grid");
        return 2;
    }
    let mut reports = Vec::new();
    for &n in &ns {
        for &k in &ks {
            match run_point(&cli.command, n, k, cli.seed) {
                Ok(r) => reports.push(r),
                Err(e) => {
                    let _ = writeln!(out, "error: {e}");
                    return exit_code(&e);
                }
            }
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let written = if cli.grid {
        let grid = GridReport {
            task: reports[0].task.clone(),
            pass,
            seed: cli.seed,
            tool_version: TOOL_VERSION,
            points: reports,
        };
        if cli.json {
            writeln!(out, "{}", serde_json::to_string_pretty(&grid).expect("serializable"))
        } else {
            grid.points
                .iter()
                .try_for_each(|r| render_text(r, out))
                .and_then(|_| writeln!(out, "grid pass: {pass}"))
        }
    } else if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports[0]).expect("serializable"))
    } else {
        render_text(&reports[0], out)
    };
    if written.is_err() {
        return 3;
    }
    if pass {
        0
    } else {
        1
    }
}
