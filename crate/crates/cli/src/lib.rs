//! Command-line front end for `homorder`.
//!
//! [`run_args`] parses arguments and runs one subcommand, returning the exit
//! status and the text written to stdout and stderr. Exit status 0 means the
//! answer was computed (negative answers included), 1 means a check found a
//! counterexample, 2 means bad usage or bad input.

use std::ffi::OsString;
use std::fmt::{self, Display};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use homorder::algebra::{product, sum};
use homorder::classes::{extension_witness_bounded, membership, Condition, Direction};
use homorder::duality::{dual_of_tree, gap_certificate, verify_duality_bounded, DualityFailure};
use homorder::enumerate::{all_trees_one_edge_per_kind, save_catalog, Oracle};
use homorder::hom::{compare, core_of, find_hom, is_core, Comparability};
use homorder::model::{directed_shadow, parse};
use homorder::order::{
    antichain_from_duality, cutpoint_certificates, d_star, is_maximal_antichain_bounded, is_small_bounded,
    split_antichain, Antichain, Placement, SmallnessVerdict, SplitOptions, SplitResult, WitnessSource,
};
use homorder::{Config, Error, Signature, Structure, DEFAULT_CEILING};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Structures,
    Cores,
    Trees,
    OneEdgeTrees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Up,
    Down,
}

#[derive(Debug, Parser)]
#[command(name = "homorder", version, about = "Computations in the homomorphism order of finite relational structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalOptions {
    /// Largest tree and catalog core tried as a splitting witness.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub witness_bound: u64,
    /// Vertex bound for every catalog-backed verification.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    pub verify_bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for persisted catalogs.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Cap on labeled candidates and raw dual size.
    #[arg(long, global = true, default_value_t = DEFAULT_CEILING)]
    pub ceiling: u64,
    /// Run catalog loops on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Find a homomorphism A → B.
    Hom { a: PathBuf, b: PathBuf },
    /// Place A and B relative to each other.
    Compare { a: PathBuf, b: PathBuf },
    /// Core of A with a retraction.
    Core { a: PathBuf },
    /// Categorical product A × B.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        core: bool,
    },
    /// Disjoint union A + B.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        core: bool,
    },
    /// List a catalog, optionally saving it as a catalog directory.
    Enumerate {
        /// Arities, e.g. "2" or "2 3".
        #[arg(long = "type", default_value = "2")]
        sig: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = KindArg::Structures)]
        kind: KindArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Dual of a tree.
    Dual { tree: PathBuf },
    /// Check a candidate finite duality against the catalog.
    VerifyDuality {
        #[arg(long = "forest")]
        forests: Vec<PathBuf>,
        #[arg(long = "dual")]
        duals: Vec<PathBuf>,
    },
    /// Gap below a connected tree.
    Gap { tree: PathBuf },
    /// Cut-point certificates of a connected tree.
    Cutpoint { tree: PathBuf },
    /// Split an antichain, in the given order and reversed.
    Split {
        #[arg(required = true)]
        elements: Vec<PathBuf>,
    },
    /// The structure D* and its core.
    Dstar {
        #[arg(long = "type", default_value = "2")]
        sig: String,
    },
    /// Smallness verdict for X.
    Small { x: PathBuf },
    /// Class membership of X.
    Classes { x: PathBuf },
    /// Check maximality of an antichain against the catalog.
    MacCheck {
        #[arg(required = true)]
        elements: Vec<PathBuf>,
    },
    /// Maximal antichain from a verified finite duality.
    MacFromDuality {
        #[arg(long = "forest")]
        forests: Vec<PathBuf>,
        #[arg(long = "dual")]
        duals: Vec<PathBuf>,
    },
    /// Search the catalog for a class member extending an antichain.
    Extend {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        condition: u8,
        #[arg(long)]
        x: PathBuf,
        #[arg(long = "s")]
        s: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = DirectionArg::Up)]
        direction: DirectionArg,
    },
    /// Directed shadow of X.
    Shadow { x: PathBuf },
}

/// Everything one invocation needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub witness_bound: usize,
    pub verify_bound: usize,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub ceiling: u64,
    pub parallel: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let o = cli.options;
        RunConfig {
            command: cli.command,
            witness_bound: o.witness_bound as usize,
            verify_bound: o.verify_bound as usize,
            format: o.format,
            cache_dir: o.cache_dir,
            ceiling: o.ceiling,
            parallel: !o.sequential,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VerificationFailed { .. } => EXIT_COUNTEREXAMPLE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Step<T = ()> = std::result::Result<T, Failure>;

/// Key/value lines plus embedded structures; prose only in text mode.
struct Report {
    format: Format,
    out: String,
    code: i32,
}

impl Report {
    fn field(&mut self, key: &str, value: impl Display) {
        self.out.push_str(&format!("{key}: {value}\n"));
    }

    fn note(&mut self, text: impl Display) {
        if self.format == Format::Text {
            self.out.push_str(&format!("# {text}\n"));
        }
    }

    fn structure(&mut self, name: &str, s: &Structure) {
        self.out.push_str(&format!("begin structure {name}\n{s}end structure\n"));
    }

    fn fail(&mut self) {
        self.code = EXIT_COUNTEREXAMPLE;
    }
}

struct YesNo(bool);

impl Display for YesNo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "yes" } else { "no" })
    }
}

fn load(path: &Path) -> Step<Structure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_all(paths: &[PathBuf]) -> Step<Vec<Structure>> {
    let items = paths.iter().map(|p| load(p)).collect::<Step<Vec<_>>>()?;
    if let Some(first) = items.first() {
        for (s, p) in items.iter().zip(paths).skip(1) {
            if s.sig() != first.sig() {
                return Err(usage(format!(
                    "{}: type ({}) differs from {} ({})",
                    p.display(),
                    s.sig(),
                    paths[0].display(),
                    first.sig()
                )));
            }
        }
    }
    Ok(items)
}

fn parse_sig(text: &str) -> Step<Signature> {
    let arities = text
        .split_whitespace()
        .map(|w| w.parse::<usize>().map_err(|_| usage(format!("bad arity `{w}` in type `{text}`"))))
        .collect::<Step<Vec<_>>>()?;
    Signature::new(arities).map_err(Failure::from)
}

struct Context<'a> {
    cfg: &'a RunConfig,
    report: Report,
}

impl Context<'_> {
    fn config(&self) -> Config {
        Config {
            ceiling: self.cfg.ceiling,
            parallel: self.cfg.parallel,
        }
    }

    fn oracle(&self, sig: &Signature) -> Oracle {
        let oracle = Oracle::new(sig.clone(), self.config());
        match &self.cfg.cache_dir {
            Some(dir) => oracle.with_cache_dir(dir),
            None => oracle,
        }
    }
}

pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&RunConfig::from(cli)),
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            Outcome { code, stdout, stderr }
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let mut ctx = Context {
        cfg,
        report: Report {
            format: cfg.format,
            out: String::new(),
            code: EXIT_OK,
        },
    };
    match dispatch(&mut ctx) {
        Ok(()) => Outcome {
            code: ctx.report.code,
            stdout: ctx.report.out,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: ctx.report.out,
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(ctx: &mut Context) -> Step {
    let command = ctx.cfg.command.clone();
    match command {
        Command::Hom { a, b } => hom(ctx, &a, &b),
        Command::Compare { a, b } => compare_cmd(ctx, &a, &b),
        Command::Core { a } => core_cmd(ctx, &a),
        Command::Product { a, b, core } => binary(ctx, &a, &b, core, true),
        Command::Sum { a, b, core } => binary(ctx, &a, &b, core, false),
        Command::Enumerate {
            sig,
            n_max,
            kind,
            out,
            count_only,
        } => enumerate(ctx, &sig, n_max as usize, kind, out.as_deref(), count_only),
        Command::Dual { tree } => dual(ctx, &tree),
        Command::VerifyDuality { forests, duals } => verify(ctx, &forests, &duals),
        Command::Gap { tree } => gap(ctx, &tree),
        Command::Cutpoint { tree } => cutpoint(ctx, &tree),
        Command::Split { elements } => split(ctx, &elements),
        Command::Dstar { sig } => dstar(ctx, &sig),
        Command::Small { x } => small(ctx, &x),
        Command::Classes { x } => classes(ctx, &x),
        Command::MacCheck { elements } => mac_check(ctx, &elements),
        Command::MacFromDuality { forests, duals } => mac_from_duality(ctx, &forests, &duals),
        Command::Extend {
            condition,
            x,
            s,
            direction,
        } => extend(ctx, condition, &x, &s, direction),
        Command::Shadow { x } => shadow(ctx, &x),
    }
}

fn two(a: &Path, b: &Path) -> Step<(Structure, Structure)> {
    let mut items = load_all(&[a.to_path_buf(), b.to_path_buf()])?;
    let b = items.pop().expect("two inputs");
    let a = items.pop().expect("two inputs");
    Ok((a, b))
}

fn hom(ctx: &mut Context, a: &Path, b: &Path) -> Step {
    let (a, b) = two(a, b)?;
    let f = find_hom(&a, &b)?;
    let r = &mut ctx.report;
    r.field("exists", YesNo(f.is_some()));
    if let Some(f) = f {
        r.field("map", f);
    }
    Ok(())
}

fn compare_cmd(ctx: &mut Context, a: &Path, b: &Path) -> Step {
    let (a, b) = two(a, b)?;
    let c = compare(&a, &b)?;
    let r = &mut ctx.report;
    r.field("relation", c.label());
    match c {
        Comparability::Equivalent { forward, backward } => {
            r.field("forward", forward);
            r.field("backward", backward);
        }
        Comparability::StrictlyBelow { forward } => r.field("forward", forward),
        Comparability::StrictlyAbove { backward } => r.field("backward", backward),
        Comparability::Incomparable => {}
    }
    Ok(())
}

fn core_cmd(ctx: &mut Context, a: &Path) -> Step {
    let a = load(a)?;
    let (core, retraction) = core_of(&a);
    let r = &mut ctx.report;
    r.field("input_is_core", YesNo(is_core(&a)));
    r.field("core_vertices", core.n());
    r.field("retraction", retraction);
    r.structure("core", &core);
    Ok(())
}

fn binary(ctx: &mut Context, a: &Path, b: &Path, reduce: bool, is_product: bool) -> Step {
    let (a, b) = two(a, b)?;
    let mut s = if is_product { product(&a, &b)? } else { sum(&a, &b)? };
    if reduce {
        s = core_of(&s).0;
    }
    ctx.report.structure(if is_product { "product" } else { "sum" }, &s);
    Ok(())
}

fn enumerate(ctx: &mut Context, sig: &str, n_max: usize, kind: KindArg, out: Option<&Path>, count_only: bool) -> Step {
    let sig = parse_sig(sig)?;
    let oracle = ctx.oracle(&sig);
    let catalog = match kind {
        KindArg::Structures => (*oracle.structures(n_max)?).clone(),
        KindArg::Cores => (*oracle.cores(n_max)?).clone(),
        KindArg::Trees => (*oracle.trees(n_max)?).clone(),
        KindArg::OneEdgeTrees => all_trees_one_edge_per_kind(&sig, &ctx.config()),
    };
    let r = &mut ctx.report;
    r.field("type", &sig);
    r.field("kind", catalog.kind.name());
    r.field("n_max", catalog.n_max);
    r.field("count", catalog.len());
    if let Some(dir) = out {
        save_catalog(&catalog, dir)?;
        r.note(format!("catalog written to {}", dir.display()));
    }
    if !count_only {
        for (i, e) in catalog.entries.iter().enumerate() {
            r.structure(&format!("entry.{i}"), &e.structure);
        }
    }
    Ok(())
}

fn dual(ctx: &mut Context, tree: &Path) -> Step {
    let t = load(tree)?;
    let bound = ctx.cfg.verify_bound;
    let pair = dual_of_tree(&ctx.oracle(t.sig()), &t, bound)?;
    let r = &mut ctx.report;
    r.field("verified_bound", pair.verified_bound);
    r.field("dual_vertices", pair.dual.n());
    r.structure("dual", &pair.dual);
    r.note(format!("duality verified up to {bound} vertices"));
    Ok(())
}

fn need_sig(items: &[Structure], what: &str) -> Step<Signature> {
    items
        .first()
        .map(|s| s.sig().clone())
        .ok_or_else(|| usage(format!("{what} needs at least one input")))
}

fn verify(ctx: &mut Context, forests: &[PathBuf], duals: &[PathBuf]) -> Step {
    let all: Vec<PathBuf> = forests.iter().chain(duals).cloned().collect();
    let items = load_all(&all)?;
    let sig = need_sig(&items, "verify-duality")?;
    let (f, d) = items.split_at(forests.len());
    let bound = ctx.cfg.verify_bound;
    let report = verify_duality_bounded(&ctx.oracle(&sig), f, d, bound)?;
    let r = &mut ctx.report;
    r.field("bound", report.bound);
    r.field("checked", report.checked);
    match report.counterexample {
        None => {
            r.field("result", "pass");
            r.note(format!("no counterexample among structures with at most {bound} vertices"));
        }
        Some(c) => {
            r.field("result", "counterexample");
            r.field("counterexample_index", c.index);
            match c.failure {
                DualityFailure::Both { forest, dual } => {
                    r.field("failure", "both");
                    r.field("failure_forest", forest);
                    r.field("failure_dual", dual);
                }
                DualityFailure::Neither => r.field("failure", "neither"),
            }
            r.structure("counterexample", &c.structure);
            r.fail();
        }
    }
    Ok(())
}

fn gap(ctx: &mut Context, tree: &Path) -> Step {
    let t = load(tree)?;
    let g = gap_certificate(&ctx.oracle(t.sig()), &t, ctx.cfg.verify_bound)?;
    let r = &mut ctx.report;
    r.field("verified_bound", g.verified_bound);
    r.structure("bottom", &g.bottom);
    r.structure("top", &g.top);
    r.note(format!(
        "no structure with at most {} vertices lies strictly between bottom and top",
        g.verified_bound
    ));
    Ok(())
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

fn cutpoint(ctx: &mut Context, tree: &Path) -> Step {
    let t = load(tree)?;
    let c = cutpoint_certificates(&ctx.oracle(t.sig()), &t, ctx.cfg.verify_bound)?;
    let r = &mut ctx.report;
    r.field("bound", c.bound);
    r.field("checked", c.checked);
    r.field("identity_below", pass(c.below_failure.is_none()));
    r.field("identity_above", pass(c.above_failure.is_none()));
    r.structure("dual", &c.dual);
    r.structure("below", &c.below);
    r.structure("above", &c.above);
    if let Some(x) = &c.below_failure {
        r.structure("below_failure", x);
    }
    if let Some(x) = &c.above_failure {
        r.structure("above_failure", x);
    }
    if !c.passed() {
        r.fail();
    }
    Ok(())
}

fn indices(r: &SplitResult, upper: bool) -> String {
    let list: Vec<String> = r
        .placements
        .iter()
        .enumerate()
        .filter(|(_, p)| matches!(p, Placement::Upper(_)) == upper)
        .map(|(i, _)| i.to_string())
        .collect();
    list.join(" ")
}

/// Input positions of F for a run over the reversed antichain.
fn reversed_upper(r: &SplitResult) -> String {
    let n = r.placements.len();
    let mut list: Vec<usize> = r
        .placements
        .iter()
        .enumerate()
        .filter(|(_, p)| matches!(p, Placement::Upper(_)))
        .map(|(i, _)| n - 1 - i)
        .collect();
    list.sort();
    list.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn split(ctx: &mut Context, paths: &[PathBuf]) -> Step {
    let items = load_all(paths)?;
    let sig = need_sig(&items, "split")?;
    let antichain = Antichain::new(items)?;
    let oracle = ctx.oracle(&sig);
    let opts = SplitOptions {
        witness_bound: ctx.cfg.witness_bound,
        verify_bound: ctx.cfg.verify_bound,
    };
    let result = split_antichain(&oracle, &antichain, opts)?;
    let reversed = split_antichain(&oracle, &antichain.reversed(), opts)?;

    let r = &mut ctx.report;
    r.field("witness_bound", opts.witness_bound);
    r.field("verify_bound", opts.verify_bound);
    r.field("elements", result.elements.len());
    for (i, (e, p)) in result.elements.iter().zip(&result.placements).enumerate() {
        r.structure(&format!("element.{i}"), e);
        match p {
            Placement::Upper(w) => {
                r.field(&format!("element.{i}.side"), "F");
                let source = match &w.source {
                    WitnessSource::TreeSum { .. } => "tree-sum",
                    WitnessSource::Catalog => "catalog",
                };
                r.field(&format!("element.{i}.witness_source"), source);
                r.field(&format!("element.{i}.witness_map"), &w.embedding);
                if let WitnessSource::TreeSum { tree } = &w.source {
                    r.structure(&format!("element.{i}.tree"), tree);
                }
                r.structure(&format!("element.{i}.witness"), &w.structure);
            }
            Placement::Lower(rej) => {
                r.field(&format!("element.{i}.side"), "D");
                r.field(&format!("element.{i}.rejection"), rej.tag());
            }
        }
    }
    r.field("F", indices(&result, true));
    r.field("D", indices(&result, false));
    r.field("contract", pass(result.contract.uncovered.is_none()));
    r.field("contract_bound", result.contract.bound);
    r.field("contract_checked", result.contract.checked);
    if let Some(x) = &result.contract.uncovered {
        r.structure("uncovered", x);
    }
    for (i, v) in &result.smallness {
        r.field(&format!("element.{i}.smallness"), v.label());
    }
    r.field("verdict", result.verdict.label());
    let reversed_f = reversed_upper(&reversed);
    r.field("reversed_F", &reversed_f);
    r.field("reversed_verdict", reversed.verdict.label());
    r.field("order_independent", YesNo(reversed_f == indices(&result, true)));
    match result.verdict.label() {
        "splitting" => r.note(format!(
            "every core with at most {} vertices is above F or below D",
            opts.verify_bound
        )),
        "bottom-exception" => r.note("no valid splitting: antichain at the bottom"),
        _ => r.note("no valid splitting"),
    }
    Ok(())
}

fn dstar(ctx: &mut Context, sig: &str) -> Step {
    let sig = parse_sig(sig)?;
    let d = d_star(&sig, &ctx.config())?;
    let r = &mut ctx.report;
    r.field("type", &sig);
    r.field("components", d.components.len());
    r.structure("dstar", &d.structure);
    r.structure("core", &d.core);
    Ok(())
}

fn small(ctx: &mut Context, x: &Path) -> Step {
    let x = load(x)?;
    let v = is_small_bounded(&ctx.oracle(x.sig()), &x, ctx.cfg.verify_bound)?;
    let r = &mut ctx.report;
    r.field("verdict", v.label());
    match v {
        SmallnessVerdict::Small => r.note("X maps to D*"),
        SmallnessVerdict::SmallUpToBound { y, bound } => {
            r.field("bound", bound);
            r.structure("y", &y);
        }
        SmallnessVerdict::NotSmall { pairs, bound } => {
            r.field("bound", bound);
            r.field("candidates", pairs.len());
            for (i, (y, z)) in pairs.iter().enumerate() {
                r.structure(&format!("y.{i}"), y);
                r.structure(&format!("z.{i}"), z);
            }
        }
    }
    Ok(())
}

fn classes(ctx: &mut Context, x: &Path) -> Step {
    let x = load(x)?;
    let m = membership(&x);
    let r = &mut ctx.report;
    for c in Condition::ALL {
        let value = match m.holds(c) {
            Ok(v) => YesNo(v).to_string(),
            Err(_) => "n/a".to_string(),
        };
        r.field(&format!("condition.{}", c.number()), value);
    }
    r.field("shadow_directed_cycle", YesNo(m.shadow_directed_cycle));
    if !x.sig().is_digraph() {
        r.note("condition 1 tests maps to forests; condition 2 tests each component against trees");
    }
    Ok(())
}

fn mac_check(ctx: &mut Context, paths: &[PathBuf]) -> Step {
    let items = load_all(paths)?;
    let sig = need_sig(&items, "mac-check")?;
    let a = Antichain::new(items)?;
    let report = is_maximal_antichain_bounded(&ctx.oracle(&sig), &a, ctx.cfg.verify_bound)?;
    let r = &mut ctx.report;
    r.field("bound", report.bound);
    r.field("checked", report.checked);
    match report.witness {
        None => r.field("result", "maximal-up-to-bound"),
        Some(w) => {
            r.field("result", "not-maximal");
            r.structure("incomparable", &w);
            r.fail();
        }
    }
    Ok(())
}

fn mac_from_duality(ctx: &mut Context, forests: &[PathBuf], duals: &[PathBuf]) -> Step {
    let all: Vec<PathBuf> = forests.iter().chain(duals).cloned().collect();
    let items = load_all(&all)?;
    let sig = need_sig(&items, "mac-from-duality")?;
    let (f, d) = items.split_at(forests.len());
    let a = antichain_from_duality(&ctx.oracle(&sig), f, d, ctx.cfg.verify_bound)?;
    let r = &mut ctx.report;
    r.field("verified_bound", ctx.cfg.verify_bound);
    r.field("elements", a.len());
    for (i, e) in a.elements().iter().enumerate() {
        r.structure(&format!("element.{i}"), e);
    }
    Ok(())
}

fn extend(ctx: &mut Context, condition: u8, x: &Path, s: &[PathBuf], direction: DirectionArg) -> Step {
    let mut paths = vec![x.to_path_buf()];
    paths.extend(s.iter().cloned());
    let mut items = load_all(&paths)?;
    let x = items.remove(0);
    let c = Condition::from_number(condition)?;
    let direction = match direction {
        DirectionArg::Up => Direction::Up,
        DirectionArg::Down => Direction::Down,
    };
    let bound = ctx.cfg.verify_bound;
    let y = extension_witness_bounded(&ctx.oracle(x.sig()), c, &items, &x, direction, bound)?;
    let r = &mut ctx.report;
    r.field("condition", c.number());
    r.field("direction", direction.name());
    r.field("bound", bound);
    match y {
        Some(y) => {
            r.field("result", "found");
            r.structure("witness", &y);
        }
        None => r.field("result", "none-up-to-bound"),
    }
    Ok(())
}

fn shadow(ctx: &mut Context, x: &Path) -> Step {
    let x = load(x)?;
    let s = directed_shadow(&x);
    let r = &mut ctx.report;
    r.field("directed_cycle", YesNo(homorder::classes::has_directed_cycle(&s)));
    r.structure("shadow", &s);
    Ok(())
}
