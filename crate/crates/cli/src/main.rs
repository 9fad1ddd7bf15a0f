use std::fmt::Display;
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use edense::act::{munn_act, wagner_preston, GradingOutcome};
use edense::construction::{c_u_monoid, fixture_by_name, parse_category_text};
use edense::coset::{is_self_conjugate, quotient_group, CosetSpace};
use edense::crypto::{
    elgamal_seeded, massey_omura_seeded, minimum_idempotent, modexp_system, seeded_keys, Cryptosystem,
    ProtocolTranscript,
};
use edense::verify::{coset_findings, run_on_table, run_suite, Corpus, Finding, Suite};
use edense::{ElementSet, Error, FiniteSemigroup, PartialAct, TotalAct};

/// Finite E-dense semigroups, their partial acts, cosets and cryptosystems.
#[derive(Parser)]
#[command(name = "edense", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Idempotents, inverse sets and structural flags of a Cayley table.
    Analyze(Source),
    /// Build and validate a partial act.
    Act(ActArgs),
    /// Cosets of a closed E-dense subsemigroup.
    Cosets(CosetArgs),
    /// The monoid C_u of a category with a group action.
    BuildCu(BuildCuArgs),
    /// A seeded Massey-Omura or ElGamal exchange.
    CryptoDemo(CryptoArgs),
    /// Run law suites against a table, the fixtures or the full corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Source {
    /// Cayley table file.
    #[arg(required_unless_present = "fixture")]
    table: Option<PathBuf>,
    /// Built-in fixture instead of a table file.
    #[arg(long, conflicts_with = "table")]
    fixture: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActKind {
    WagnerPreston,
    Munn,
}

#[derive(Args)]
struct ActArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "wagner-preston", conflicts_with = "file")]
    kind: ActKind,
    /// Act text file to validate.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Restrict the Wagner-Preston act to the left ideal generated by these ids.
    #[arg(long, conflicts_with = "file")]
    ideal: Option<String>,
}

#[derive(Args)]
struct CosetArgs {
    #[command(flatten)]
    source: Source,
    /// Space-separated element ids of H.
    #[arg(long)]
    subsemigroup: String,
}

#[derive(Args)]
struct BuildCuArgs {
    /// Category text file.
    category: PathBuf,
    /// Base object, overriding the file.
    #[arg(long)]
    base: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Protocol {
    Mo,
    Elgamal,
}

#[derive(Args)]
struct CryptoArgs {
    /// Modular exponentiation over U_p.
    #[arg(long, required_unless_present = "fixture", conflicts_with = "fixture")]
    prime: Option<u64>,
    /// Fixture acting on S·f for its least idempotent f.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "mo")]
    protocol: Protocol,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Plaintext point; a residue for --prime, a point id otherwise.
    #[arg(long)]
    plaintext: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Cayley table file.
    #[arg(required_unless_present_any = ["corpus", "fixtures"])]
    table: Option<PathBuf>,
    /// Every fixture plus all tables of order at most three.
    #[arg(long, conflicts_with_all = ["table", "fixtures"])]
    corpus: bool,
    /// The built-in fixtures only.
    #[arg(long, conflicts_with = "table")]
    fixtures: bool,
    /// A suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct Report {
    command: String,
    output: Vec<String>,
    findings: Vec<Finding>,
    exit_status: u8,
}

#[derive(Default)]
struct Out {
    lines: Vec<String>,
    findings: Vec<Finding>,
}

impl Out {
    fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }

    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.findings.push(if ok { Finding::pass(name) } else { Finding::fail(name, witness()) });
    }

    fn error(&mut self, name: &str, e: impl Display) {
        self.findings.push(Finding::fail(name, e.to_string()));
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(src: &Source, out: &mut Out) -> anyhow::Result<Option<FiniteSemigroup>> {
    let loaded = match (&src.table, &src.fixture) {
        (_, Some(name)) => fixture_by_name(name),
        (Some(path), None) => FiniteSemigroup::parse_table(&read(path)?),
        (None, None) => unreachable!("clap requires a source"),
    };
    Ok(match loaded {
        Ok(s) => {
            out.findings.push(Finding::pass("table: parses"));
            Some(s)
        }
        Err(e @ Error::NonAssociative(..)) => {
            out.error("table: associative", e);
            None
        }
        Err(e) => {
            out.error("table: parses", e);
            None
        }
    })
}

fn flag(b: bool) -> &'static str {
    if b { "true" } else { "false" }
}

fn analyze(src: &Source, out: &mut Out) -> anyhow::Result<()> {
    let Some(s) = load(src, out)? else { return Ok(()) };
    let class = s.classify_idempotents();
    out.line(format!("order: {}", s.order()));
    if let Some(e) = s.identity() {
        out.line(format!("identity: {e}"));
    }
    out.line(format!("E = {}", s.idempotents()));
    out.line(format!("band: {}", flag(class.is_band)));
    out.line(format!("semilattice: {}", flag(class.is_semilattice)));
    out.line(format!("commutative: {}", flag(s.is_commutative())));
    out.line(format!("e-dense: {}", flag(s.is_e_dense())));
    out.line(format!("e-unitary: {}", flag(s.is_e_unitary())));
    out.line(format!("inverse: {}", flag(s.is_inverse_semigroup())));
    out.line(format!("group: {}", flag(s.is_group())));
    for a in s.elements() {
        let sets = s.inverse_sets(a);
        out.line(format!("{a}: W = {} V = {} L = {}", sets.weak, sets.inverse, sets.left));
    }
    out.line(format!("regular = {}", s.regular_elements()));
    out.check("analyze: group tests agree", s.is_group() == s.is_group_direct(), || {
        "group characterisations disagree".into()
    });
    Ok(())
}

fn describe_act(act: &PartialAct<'_>, out: &mut Out) {
    for l in act.to_text().lines() {
        out.line(l);
    }
    let p = act.properties();
    out.line(format!("effective: {}", flag(p.effective)));
    out.line(format!("transitive: {}", flag(p.transitive)));
    out.line(format!("indecomposable: {}", flag(p.indecomposable)));
    out.line(format!("locally free: {}", flag(p.locally_free)));
    match act.grading() {
        Ok(GradingOutcome::Graded(g)) => {
            let degrees: Vec<String> = g.degrees().iter().map(ToString::to_string).collect();
            out.line(format!("grading: {}", degrees.join(" ")));
        }
        Ok(GradingOutcome::NonEffective(x)) => out.line(format!("grading: none, point {x} lies in no domain")),
        Ok(GradingOutcome::NoMinimumIdempotent(x)) => {
            out.line(format!("grading: none, point {x} has no least stabilizing idempotent"))
        }
        Err(e) => out.line(format!("grading: none, {e}")),
    }
}

fn act(args: &ActArgs, out: &mut Out) -> anyhow::Result<()> {
    let Some(s) = load(&args.source, out)? else { return Ok(()) };
    let built = if let Some(path) = &args.file {
        PartialAct::parse(&s, &read(path)?)
    } else if let Some(ids) = &args.ideal {
        ids.parse::<ElementSet>()
            .and_then(|g| {
                s.check_set(&g)?;
                let ideal = g.iter().fold(ElementSet::new(), |acc, a| acc.union(&s.principal_left_ideal(a)));
                TotalAct::on_left_ideal(&s, &ideal)
            })
            .and_then(|t| wagner_preston(&s, Some(&t)))
    } else {
        match args.kind {
            ActKind::WagnerPreston => wagner_preston(&s, None),
            ActKind::Munn => munn_act(&s),
        }
    };
    match built {
        Ok(a) => {
            out.findings.push(Finding::pass("act validates"));
            describe_act(&a, out);
        }
        Err(e) => out.error("act validates", e),
    }
    Ok(())
}

fn cosets(args: &CosetArgs, out: &mut Out) -> anyhow::Result<()> {
    let Some(s) = load(&args.source, out)? else { return Ok(()) };
    let h = match args.subsemigroup.parse::<ElementSet>().and_then(|h| s.check_set(&h).map(|_| h)) {
        Ok(h) => h,
        Err(e) => {
            out.error("cosets: H parses", e);
            return Ok(());
        }
    };
    let space = match CosetSpace::new(&s, &h) {
        Ok(space) => space,
        Err(e) => {
            out.error("cosets: H is a closed E-dense subsemigroup", e);
            return Ok(());
        }
    };
    out.findings.push(Finding::pass("cosets: H is a closed E-dense subsemigroup"));
    out.line(format!("H = {h}"));
    out.line(format!("D_H = {}", space.domain()));
    out.line(format!("cosets: {}", space.len()));
    for c in space.cosets() {
        out.line(c.members().to_text());
    }
    match is_self_conjugate(&s, &h) {
        Ok(true) => {
            out.line("self-conjugate: true");
            match quotient_group(&s, &h) {
                Ok(q) => {
                    out.line("quotient group:");
                    for l in q.to_table_text().lines() {
                        out.line(l);
                    }
                }
                Err(e) => out.error("cosets: quotient group", e),
            }
        }
        Ok(false) => out.line("self-conjugate: false"),
        Err(e) => out.error("cosets: self-conjugacy", e),
    }
    out.findings.extend(coset_findings(&s, &h, "input"));
    Ok(())
}

fn build_cu(args: &BuildCuArgs, out: &mut Out) -> anyhow::Result<()> {
    let parsed = match parse_category_text(&read(&args.category)?) {
        Ok(p) => p,
        Err(e) => {
            out.error("category: parses", e);
            return Ok(());
        }
    };
    out.findings.push(Finding::pass("category: parses"));
    let base = args.base.unwrap_or(parsed.base);
    let cu = match c_u_monoid(&parsed.category, &parsed.action, base) {
        Ok(cu) => cu,
        Err(e) => {
            out.error("C_u: builds", e);
            return Ok(());
        }
    };
    out.findings.push(Finding::pass("C_u: builds"));
    let s = cu.semigroup();
    out.line(format!("group: {}", parsed.group_name));
    out.line(format!("base: {base}"));
    for (i, &(p, g)) in cu.pairs().iter().enumerate() {
        out.line(format!("{i} = ({}, {g})", parsed.category.morphism(p).label));
    }
    for l in s.to_table_text().lines() {
        out.line(l);
    }
    out.line(format!("E = {}", s.idempotents()));
    out.line(format!("e-unitary: {}", flag(s.is_e_unitary())));
    out.check("C_u: monoid", s.is_monoid(), || "no identity".into());
    out.check("C_u: E-dense", s.is_e_dense(), || "some W(s) is empty".into());
    Ok(())
}

fn transcript_lines(t: &ProtocolTranscript, point: impl Fn(usize) -> String, element: impl Fn(usize) -> String) -> Vec<String> {
    let mut lines = vec![format!("protocol: {}", t.protocol), format!("plaintext = {}", point(t.plaintext))];
    lines.extend(t.render_with(element, &point).lines().map(String::from));
    lines.push(format!(
        "recovered = {} ({})",
        point(t.recovered),
        if t.succeeded() { "matches plaintext" } else { "differs from plaintext" }
    ));
    lines
}

fn run_protocol(protocol: Protocol, sys: &Cryptosystem, x: usize, seed: u64) -> edense::Result<ProtocolTranscript> {
    match protocol {
        Protocol::Mo => massey_omura_seeded(sys.semigroup(), sys.act(), x, seed),
        Protocol::Elgamal => elgamal_seeded(sys.semigroup(), sys.act(), x, seed),
    }
}

fn key_space_lines(sys: &Cryptosystem, seed: u64, point: impl Fn(usize) -> String, element: impl Fn(usize) -> String) -> edense::Result<Vec<String>> {
    let key = seeded_keys(sys.semigroup(), sys.act(), seed, 1)?[0];
    let keyed = sys.with_key(key)?;
    let mut lines = Vec::new();
    for x in 0..keyed.points() {
        let k = keyed.decrypt_key_space(x)?;
        let names: Vec<String> = k.iter().map(&element).collect();
        lines.push(format!("K({}, {}) = {{{}}} |K|={}", element(key), point(x), names.join(", "), k.len()));
    }
    Ok(lines)
}

fn crypto_demo(args: &CryptoArgs, out: &mut Out) -> anyhow::Result<()> {
    let result = if let Some(p) = args.prime { demo_prime(p, args, out) } else { demo_fixture(args, out) };
    if let Err(e) = result {
        out.error("crypto: setup", e);
    }
    Ok(())
}

fn demo_prime(p: u64, args: &CryptoArgs, out: &mut Out) -> edense::Result<()> {
    let m = modexp_system(p)?;
    out.line(format!("U_{} acting on U_{p} by exponentiation", p - 1));
    let fixed: Vec<String> = m.fixed_points().iter().map(ToString::to_string).collect();
    out.line(format!("points fixed by every key: {}", fixed.join(" ")));
    let plain = args.plaintext.unwrap_or(2);
    let x = m.point_of(plain).ok_or(Error::PointOutOfRange { point: plain as usize, size: m.act().points() })?;
    let point = |x: usize| m.point_value(x).to_string();
    let element = |k: usize| m.key_value(k).to_string();
    out.lines.extend(key_space_lines(m.system(), args.seed, point, element)?);
    let t = run_protocol(args.protocol, m.system(), x, args.seed)?;
    out.lines.extend(transcript_lines(&t, point, element));
    out.check("crypto: recovered = plaintext", t.succeeded(), || {
        format!("recovered {} from {}", m.point_value(t.recovered), m.point_value(t.plaintext))
    });
    Ok(())
}

fn demo_fixture(args: &CryptoArgs, out: &mut Out) -> edense::Result<()> {
    let name = args.fixture.as_deref().expect("clap requires --prime or --fixture");
    let s = fixture_by_name(name)?;
    let f = minimum_idempotent(&s)?;
    let act = TotalAct::on_left_ideal(&s, &s.principal_left_ideal(f))?;
    let sys = Cryptosystem::new(s.clone(), act, 0)?;
    out.line(format!("{name} acting on S{f} = {}", s.principal_left_ideal(f)));
    let point = |x: usize| sys.act().label(x).to_string();
    let element = |k: usize| s.label(k);
    out.lines.extend(key_space_lines(&sys, args.seed, point, element)?);
    let plain = args.plaintext.unwrap_or(0) as usize;
    let t = run_protocol(args.protocol, &sys, plain, args.seed)?;
    out.lines.extend(transcript_lines(&t, point, element));
    out.check("crypto: recovered = plaintext", t.succeeded(), || {
        format!("recovered {} from {}", t.recovered, t.plaintext)
    });
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut Out) -> anyhow::Result<()> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match args.suite.parse::<Suite>() {
            Ok(s) => vec![s],
            Err(e) => {
                out.error("verify: suite", e);
                return Ok(());
            }
        }
    };
    if let Some(path) = &args.table {
        out.findings.extend(run_on_table(&read(path)?, &suites));
        return Ok(());
    }
    let corpus = if args.corpus { Corpus::full()? } else { Corpus::fixtures() };
    out.line(format!("subjects: {}", corpus.subjects.len()));
    for suite in suites {
        out.findings.extend(run_suite(suite, &corpus));
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze(_) => "analyze",
        Command::Act(_) => "act",
        Command::Cosets(_) => "cosets",
        Command::BuildCu(_) => "build-cu",
        Command::CryptoDemo(_) => "crypto-demo",
        Command::Verify(_) => "verify",
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let mut out = Out::default();
    match &cli.command {
        Command::Analyze(src) => analyze(src, &mut out)?,
        Command::Act(a) => act(a, &mut out)?,
        Command::Cosets(a) => cosets(a, &mut out)?,
        Command::BuildCu(a) => build_cu(a, &mut out)?,
        Command::CryptoDemo(a) => crypto_demo(a, &mut out)?,
        Command::Verify(a) => verify(a, &mut out)?,
    }
    let exit_status = u8::from(out.findings.iter().any(|f| !f.pass));
    Ok(Report { command: command_name(&cli.command).into(), output: out.lines, findings: out.findings, exit_status })
}

fn render_text(r: &Report) -> String {
    let mut s = String::new();
    for l in &r.output {
        s.push_str(l);
        s.push('\n');
    }
    for f in &r.findings {
        let status = if f.pass { "PASS" } else { "FAIL" };
        match &f.witness {
            Some(w) if !f.pass => s.push_str(&format!("{status} {}: {w}\n", f.name)),
            _ => s.push_str(&format!("{status} {}\n", f.name)),
        }
    }
    let failed = r.findings.iter().filter(|f| !f.pass).count();
    s.push_str(&format!("{} findings, {failed} failed\n", r.findings.len()));
    s
}

fn main() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    let report = run(&cli)?;
    let text = if cli.json { serde_json::to_string_pretty(&report)? + "\n" } else { render_text(&report) };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    Ok(ExitCode::from(report.exit_status))
}
