use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reglab_core::algebra::{parse_polynomial, Ring, RingSpec};
use reglab_core::experiments::{
    conjecture_char0_harness, nolimit_evidence, symbolic_reg_bracket, verify_theorem, CrossCheck, ExperimentReport,
    RunOptions, TheoremFamilySpec, TheoremId,
};
use reglab_core::families::{
    asymptotic_report, check_graded, delta_family_sample, family_from_json, noetherian_stabilization_test, GradedFamily,
    Preset, RegMode,
};
use reglab_core::groebner::{Budget, GbCache, IdealPresentation};
use reglab_core::monomial::{cm_regularity, MonomialIdeal};
use reglab_core::polyhedra::MonoPolyhedron;
use reglab_core::Error;

#[derive(Parser)]
#[command(name = "reglab", version, about = "Exact Gröbner bases, regularity brackets and asymptotic experiments")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Ring as JSON, or a comma-separated variable list ordered degrevlex.
    /// Without it the variables are taken from the input in order of appearance.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Field characteristic (0 for the rationals).
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Stop after this many reduction steps, default 10^7 (exit code 3)
    #[arg(long, global = true)]
    budget_steps: Option<u64>,
    /// Stop at S-pairs above this degree, default 4d+64 (exit code 3)
    #[arg(long, global = true)]
    budget_degree: Option<u32>,
    /// Worker threads for parallel runs
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Gröbner basis cache directory (defaults to $REGLAB_CACHE or ./.reglab-cache for `cache`).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis.
    Gb { ideal: String },
    /// Normal form of a polynomial modulo an ideal.
    Nf {
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Initial ideal.
    Initial { ideal: String },
    /// Regularity: exact for monomial ideals, otherwise the bracket.
    Reg {
        #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
        mono: Option<String>,
        ideal: Option<String>,
    },
    /// Regularity bracket from the socle (lower) and the initial ideal (upper).
    RegBracket {
        ideal: String,
        /// Highest degree searched for socle elements (default 4·d + 64).
        #[arg(long)]
        socle_budget: Option<u32>,
    },
    /// Socle witness check, or the top socle degree without a witness.
    Socle {
        ideal: String,
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        degree_budget: Option<u32>,
    },
    /// Intersection of two ideals
    Intersect { left: String, right: String },
    /// Colon by a polynomial, a variable, or the maximal ideal.
    Colon {
        ideal: String,
        #[arg(long, group = "by_what", required = true)]
        by: Option<String>,
        #[arg(long, group = "by_what")]
        var: Option<String>,
        #[arg(long, group = "by_what")]
        maximal: bool,
    },
    /// Newton polyhedron of a monomial ideal.
    Np { ideal: String },
    /// Scaled Newton polyhedra of a family: per-n δ, running infimum, sampled limit.
    Delta {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long = "N")]
        n_max: usize,
    },
    /// Graded families: regularity reports, gradedness, stabilization
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Replication runs for the Q + f setting over F_2[x,y,a,b]
    #[command(subcommand)]
    Paper(PaperCmd),
    /// Inspect or clear the Gröbner basis cache
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Args)]
struct FamilyArg {
    /// Preset name, inline JSON, or @file with JSON.
    #[arg(long)]
    family: String,
    /// Growth rule for ex-diverge.
    #[arg(long)]
    f: Option<String>,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// reg, d, μ and ratios for n ≤ N.
    Report {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long = "N")]
        n_max: usize,
        /// Brackets instead of exact monomial regularity.
        #[arg(long)]
        bracket: bool,
    },
    /// I_p I_q ⊆ I_{p+q} for p + q ≤ N.
    CheckGraded {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long = "N")]
        n_max: usize,
    },
    /// Search for a stabilizing index of the scaled Newton polyhedra.
    Stabilize {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long = "N")]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CrossCheckArg {
    Auto,
    Always,
    Never,
}

#[derive(Subcommand)]
enum PaperCmd {
    /// Replicate one explicit Gröbner basis family.
    Verify {
        #[arg(long)]
        thm: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "auto")]
        cross_check: CrossCheckArg,
    },
    /// reg/n along n = 2^s and n = 3·2^s.
    Nolimit {
        #[arg(long, default_value_t = 3)]
        max_s: u32,
    },
    /// Bracket for the regularity of the n-th symbolic power.
    Symbolic {
        #[arg(long)]
        n: u32,
    },
    /// Characteristic-zero brackets against the closed-form guess.
    ConjChar0 {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum CacheCmd {
    Ls,
    Clear,
}

enum Failure {
    Core(Error),
    /// Ran to completion but some assertion failed.
    Assertion,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 3,
        Error::Io(_) | Error::Internal(_) => 1,
        _ => 2,
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Identifiers in order of first appearance.
fn infer_vars(texts: &[&str]) -> Vec<String> {
    let mut vars: Vec<String> = Vec::new();
    for t in texts {
        let mut chars = t.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            if c.is_ascii_alphabetic() || c == '_' {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let name = &t[i..end];
                if !vars.iter().any(|v| v == name) {
                    vars.push(name.to_string());
                }
            }
        }
    }
    vars
}

struct Ctx {
    global: Global,
}

impl Ctx {
    fn ring(&self, texts: &[&str]) -> Result<Ring, Error> {
        match self.global.ring.as_deref() {
            Some(r) if r.trim_start().starts_with('{') => RingSpec::from_json(r),
            Some(r) => {
                let vars: Vec<&str> = r.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
                RingSpec::degrevlex(self.global.characteristic, &vars)
            }
            None => {
                let vars = infer_vars(texts);
                if vars.is_empty() {
                    return Err(Error::InvalidArgument("no variables; pass --ring".into()));
                }
                let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
                RingSpec::degrevlex(self.global.characteristic, &refs)
            }
        }
    }

    fn budget(&self) -> Budget {
        let mut b = Budget { max_degree: self.global.budget_degree, ..Budget::default() };
        if let Some(s) = self.global.budget_steps {
            b.max_steps = s;
        }
        b
    }

    fn ideal(&self, ring: &Ring, text: &str) -> Result<IdealPresentation, Error> {
        Ok(IdealPresentation::parse(ring, text)?.with_budget(self.budget()))
    }

    fn cache(&self) -> Option<GbCache> {
        self.global.cache_dir.as_ref().map(GbCache::new)
    }

    fn run_options(&self, cross_check: CrossCheck) -> RunOptions {
        RunOptions { budget: self.budget(), cache: self.cache(), cross_check }
    }

    fn emit(&self, text: impl AsRef<str>, value: Value) {
        if self.global.json {
            out(&serde_json::to_string_pretty(&value).expect("json"));
        } else {
            out(text.as_ref().trim_end());
        }
    }

    fn emit_report(&self, report: &ExperimentReport, summary: &str) -> Outcome {
        if self.global.json {
            out(&report.to_json());
        } else {
            out(report.render_text().trim_end());
            if !summary.is_empty() {
                out(summary.trim_end());
            }
        }
        if report.passed() {
            Ok(())
        } else {
            Err(Failure::Assertion)
        }
    }

    fn family(&self, arg: &FamilyArg) -> Result<Arc<GradedFamily>, Error> {
        let spec = arg.family.trim();
        if let Some(path) = spec.strip_prefix('@') {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            family_from_json(&text)
        } else if spec.starts_with('{') {
            family_from_json(spec)
        } else {
            GradedFamily::preset(Preset::by_name(spec, arg.f.as_deref())?, self.global.characteristic)
        }
    }
}

/// `4·d + 64` for generators of degree at most `d`.
fn default_socle_budget(i: &IdealPresentation) -> Result<u32, Error> {
    Ok(4 * i.max_generator_degree()?.unwrap_or(0) + 64)
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::InvalidArgument(format!("threads: {e}")))?;
    }
    let ctx = Ctx { global: cli.global };
    match cli.cmd {
        Cmd::Gb { ideal } => {
            let ring = ctx.ring(&[&ideal])?;
            let i = ctx.ideal(&ring, &ideal)?;
            let gb = match ctx.cache() {
                Some(c) => i.groebner_cached(&c)?.0,
                None => i.groebner()?,
            };
            let basis: Vec<String> = gb.basis().iter().map(|p| p.render()).collect();
            ctx.emit(basis.join("\n"), json!({"ring": ring.to_json_value(), "size": basis.len(), "basis": basis}));
        }
        Cmd::Nf { poly, ideal } => {
            let ring = ctx.ring(&[&ideal, &poly])?;
            let p = parse_polynomial(&ring, &poly)?;
            let r = ctx.ideal(&ring, &ideal)?.normal_form(&p)?.render();
            ctx.emit(&r, json!({"normal_form": r}));
        }
        Cmd::Initial { ideal } => {
            let ring = ctx.ring(&[&ideal])?;
            let init = ctx.ideal(&ring, &ideal)?.initial_ideal()?;
            ctx.emit(init.render(), json!({"initial_ideal": init.rendered_gens()}));
        }
        Cmd::Reg { mono: Some(m), .. } => {
            let ring = ctx.ring(&[&m])?;
            let ideal = MonomialIdeal::parse(&ring, &m)?;
            let r = cm_regularity(&ideal, ring.field())?;
            ctx.emit(r.to_string(), json!({"reg": r}));
        }
        Cmd::Reg { ideal: Some(text), .. } => {
            let ring = ctx.ring(&[&text])?;
            let i = ctx.ideal(&ring, &text)?;
            let b = i.reg_bracket(Some(default_socle_budget(&i)?))?;
            let shown = if b.is_exact() { b.lower.to_string() } else { b.to_string() };
            ctx.emit(shown, json!({"reg": b}));
        }
        Cmd::Reg { .. } => return Err(Error::InvalidArgument("pass --mono or an ideal".into()).into()),
        Cmd::RegBracket { ideal, socle_budget } => {
            let ring = ctx.ring(&[&ideal])?;
            let i = ctx.ideal(&ring, &ideal)?;
            let b = i.reg_bracket(Some(socle_budget.map_or_else(|| default_socle_budget(&i), Ok)?))?;
            ctx.emit(format!("{b} (lower: {}, upper: {})", b.lower_method, b.upper_method), json!(b));
        }
        Cmd::Socle { ideal, witness, degree_budget } => {
            let texts: Vec<&str> = std::iter::once(ideal.as_str()).chain(witness.as_deref()).collect();
            let ring = ctx.ring(&texts)?;
            let i = ctx.ideal(&ring, &ideal)?;
            match witness {
                Some(w) => {
                    let h = parse_polynomial(&ring, &w)?;
                    let ok = i.socle_witness_check(&h)?;
                    ctx.emit(if ok { "witness: pass" } else { "witness: fail" }, json!({"witness": w, "pass": ok}));
                    if !ok {
                        return Err(Failure::Assertion);
                    }
                }
                None => {
                    let budget = degree_budget.map_or_else(|| default_socle_budget(&i), Ok)?;
                    let top = i.socle_degree_max(budget)?;
                    let text = match top {
                        Some(d) => format!("top socle degree: {d}"),
                        None => format!("no socle element up to degree {budget}"),
                    };
                    ctx.emit(text, json!({"top_socle_degree": top, "degree_budget": budget}));
                }
            }
        }
        Cmd::Intersect { left, right } => {
            let ring = ctx.ring(&[&left, &right])?;
            let r = ctx.ideal(&ring, &left)?.intersect(&ctx.ideal(&ring, &right)?)?;
            let gens: Vec<String> = r.minimal_generators()?.iter().map(|p| p.render()).collect();
            ctx.emit(gens.join("\n"), json!({"generators": gens}));
        }
        Cmd::Colon { ideal, by, var, maximal } => {
            let texts: Vec<&str> = [Some(ideal.as_str()), by.as_deref(), var.as_deref()].into_iter().flatten().collect();
            let ring = ctx.ring(&texts)?;
            let i = ctx.ideal(&ring, &ideal)?;
            let r = if let Some(g) = by {
                i.colon_element(&parse_polynomial(&ring, &g)?)?
            } else if let Some(v) = var {
                let idx = ring.var_index(&v).ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{v}`")))?;
                i.colon_variable(idx)?
            } else {
                debug_assert!(maximal);
                i.colon_maximal()?
            };
            let gens: Vec<String> = r.minimal_generators()?.iter().map(|p| p.render()).collect();
            ctx.emit(gens.join("\n"), json!({"generators": gens}));
        }
        Cmd::Np { ideal } => {
            let ring = ctx.ring(&[&ideal])?;
            let p = MonoPolyhedron::newton(&MonomialIdeal::parse(&ring, &ideal)?)?;
            let s = p.summary();
            let verts: Vec<String> = s.vertices.iter().map(|v| format!("({})", v.join(", "))).collect();
            ctx.emit(format!("vertices: {}\ndelta: {}", verts.join(" "), s.delta), json!(s));
        }
        Cmd::Delta { family, n_max } => {
            let fam = ctx.family(&family)?;
            let s = delta_family_sample(&fam, n_max)?;
            let per_n: Vec<String> = s.per_n.iter().map(|d| d.to_string()).collect();
            let text = format!(
                "per-n delta: {}\ninf delta (n <= {n_max}): {}\nsampled hull delta: {}\nextrapolated delta: {}",
                per_n.join(" "),
                s.inf(),
                s.sampled_delta(),
                s.extrapolated_delta()
            );
            ctx.emit(text, json!(s));
        }
        Cmd::Family(cmd) => match cmd {
            FamilyCmd::Report { family, n_max, bracket } => {
                let fam = ctx.family(&family)?;
                let r = asymptotic_report(&fam, n_max, if bracket { RegMode::Bracket } else { RegMode::Exact })?;
                ctx.emit(r.render_table(), json!(r));
            }
            FamilyCmd::CheckGraded { family, n_max } => {
                let fam = ctx.family(&family)?;
                let c = check_graded(&fam, n_max)?;
                ctx.emit(format!("{c:?}"), json!(c));
                if !c.passed() {
                    return Err(Failure::Assertion);
                }
            }
            FamilyCmd::Stabilize { family, n_max } => {
                let fam = ctx.family(&family)?;
                let s = noetherian_stabilization_test(&fam, n_max)?;
                let text = match s.stabilized_at {
                    Some(c) => format!("stabilizes at c = {c} (checked multiples up to {n_max})"),
                    None => format!("no stabilizing c with 2c <= {n_max}"),
                };
                ctx.emit(text, json!(s));
            }
        },
        Cmd::Paper(cmd) => return run_paper(&ctx, cmd),
        Cmd::Cache(cmd) => {
            let cache = ctx.cache().unwrap_or_else(GbCache::from_env);
            match cmd {
                CacheCmd::Ls => {
                    let entries = cache.list()?;
                    let text: Vec<String> = entries.iter().map(|e| format!("{}  {} elements  {} bytes", e.key, e.elements, e.bytes)).collect();
                    ctx.emit(text.join("\n"), json!(entries));
                }
                CacheCmd::Clear => {
                    let n = cache.clear()?;
                    ctx.emit(format!("removed {n} entries"), json!({"removed": n}));
                }
            }
        }
    }
    Ok(())
}

fn run_paper(ctx: &Ctx, cmd: PaperCmd) -> Outcome {
    match cmd {
        PaperCmd::Verify { thm, n, k, cross_check } => {
            let id = TheoremId::by_name(&thm)?;
            let spec = TheoremFamilySpec::new(id, n, k)?;
            let cc = match cross_check {
                CrossCheckArg::Auto => CrossCheck::Auto,
                CrossCheckArg::Always => CrossCheck::Always,
                CrossCheckArg::Never => CrossCheck::Never,
            };
            let report = verify_theorem(&spec, &ctx.run_options(cc))?;
            ctx.emit_report(&report, "")
        }
        PaperCmd::Nolimit { max_s } => {
            let (out, report) = nolimit_evidence(max_s, &ctx.run_options(CrossCheck::Auto))?;
            let mut summary = String::from("n      theorem          reg bracket   reg/n\n");
            for r in &out.rows {
                summary.push_str(&format!("{:<6} {:<16} {:<13} [{}, {}]\n", r.n, r.theorem, r.bracket.to_string(), r.lower_ratio, r.upper_ratio));
            }
            for r in &out.intersection {
                summary.push_str(&format!("reg(Q^{0} ∩ (f^{0})) ∈ {1} ({2})\n", r.n, r.intersection, r.method));
            }
            summary.push_str(&format!("gap: {} < {} is {}\n", out.min_upper_ratio, out.max_lower_ratio, out.gap));
            ctx.emit_report(&report, &summary)
        }
        PaperCmd::Symbolic { n } => {
            let (out, report) = symbolic_reg_bracket(n, &ctx.run_options(CrossCheck::Auto))?;
            let mut summary = String::from("k   source                  used        computed\n");
            for t in &out.terms {
                summary.push_str(&format!("{:<3} {:<23} {:<11} {}\n", t.k, t.source, t.bracket.to_string(), t.computed));
            }
            match &out.bracket {
                Some(b) => summary.push_str(&format!(
                    "reg of the symbolic power ∈ {b}; upper end from k ∈ {:?}, lower end from k ∈ {:?}\n",
                    out.upper_dominators, out.lower_dominators
                )),
                None => summary.push_str("formula inapplicable: hypothesis not confirmed\n"),
            }
            ctx.emit_report(&report, &summary)
        }
        PaperCmd::ConjChar0 { max_n } => {
            let (_, report) = conjecture_char0_harness(max_n, &ctx.run_options(CrossCheck::Auto))?;
            ctx.emit_report(&report, "")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
