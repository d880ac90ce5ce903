//! Command implementations for the `zdlattice` binary.
//!
//! Every command renders into a [`CommandOutput`] instead of printing, so the
//! binary stays a thin shell and tests can inspect output and exit codes.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` a claim failed or a
//! counterexample was found.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::bitset::BitSet;
use crate::census::{self, CensusConfig, IdealFilter};
use crate::claims::{self, ClaimId, Status};
use crate::ideal::{self, IdealSet, RadicalVariant};
use crate::lattice::{find_forbidden_sublattice, Lattice, LatticeSpec};
use crate::zdgraph::{self, build_gamma, build_gamma_i, gamma_without_zero};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLAIM_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zdlattice", version, about = "Zero-divisor graphs of finite lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a lattice and report distributivity and modularity.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// List ideals, marking primes; optionally the quotient (I:x).
    Ideals {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ideal: IdealArgs,
        /// Element x for the quotient (I:x); defaults to I = {0} when no ideal is given.
        #[arg(long)]
        quotient: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build Γ_I(L) (or Γ(L)) and report its invariants.
    Zdgraph {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ideal: IdealArgs,
        /// Emit DOT instead of the report.
        #[arg(long)]
        dot: bool,
        /// Build Γ(L) with adjacency x ∧ y = 0 instead of Γ_I(L).
        #[arg(long)]
        gamma_classic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Intersect the prime ideals attached to I.
    Radical {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        ideal: IdealArgs,
        /// `contained` (primes P ⊆ I) or `containing` (primes P ⊇ I).
        #[arg(long, default_value = "contained")]
        variant: RadicalVariant,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every golden fact from the built-in fixtures.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// Sweep claims over every lattice up to a size bound.
    Census {
        #[arg(long, default_value_t = census::DEFAULT_CENSUS_SIZE)]
        max_size: usize,
        #[arg(long)]
        distributive_only: bool,
        /// Comma-separated claim ids; all claims by default.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<ClaimId>,
        /// all, proper or principal.
        #[arg(long, default_value = "all")]
        ideal_filter: IdealFilter,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Permit --max-size 8 (slow).
        #[arg(long)]
        allow_size_8: bool,
        /// Directory for replayable counterexample files.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Find the first counterexample to one claim.
    Search {
        claim: String,
        #[arg(long, default_value_t = census::DEFAULT_CENSUS_SIZE)]
        max_size: usize,
        #[arg(long)]
        allow_size_8: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Lattice file.
    pub file: Option<PathBuf>,
    /// Built-in lattice instead of a file: `grid` or `truncation[:n]`.
    #[arg(long, conflicts_with = "file")]
    pub fixture: Option<String>,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Comma-separated labels of the ideal's members.
    #[arg(long, value_delimiter = ',', conflicts_with = "ideal_principal")]
    pub ideal: Option<Vec<String>>,
    /// Use the principal ideal (x].
    #[arg(long)]
    pub ideal_principal: Option<String>,
}

/// Rendered result of one command.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                CommandOutput {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                CommandOutput::ok(text)
            }
        }
    }
}

pub fn execute(cmd: Command) -> CommandOutput {
    let result = match cmd {
        Command::Check { input, json } => load(&input).map(|l| cmd_check(&l, json)),
        Command::Ideals {
            input,
            ideal,
            quotient,
            json,
        } => load(&input).and_then(|l| cmd_ideals(&l, &ideal, quotient.as_deref(), json)),
        Command::Zdgraph {
            input,
            ideal,
            dot,
            gamma_classic,
            json,
        } => load(&input).and_then(|l| cmd_zdgraph(&l, &ideal, dot, gamma_classic, json)),
        Command::Radical {
            input,
            ideal,
            variant,
            json,
        } => load(&input).and_then(|l| cmd_radical(&l, &ideal, variant, json)),
        Command::VerifyPaper { json } => Ok(cmd_verify(json)),
        Command::Census {
            max_size,
            distributive_only,
            claims,
            ideal_filter,
            workers,
            allow_size_8,
            out,
            json,
        } => {
            let config = CensusConfig {
                max_size,
                distributive_only,
                claims: if claims.is_empty() { ClaimId::ALL.to_vec() } else { claims },
                ideal_filter,
                worker_count: workers,
                allow_size_8,
            };
            cmd_census(&config, out.as_deref(), json)
        }
        Command::Search {
            claim,
            max_size,
            allow_size_8,
            out,
            json,
        } => cmd_search(&claim, max_size, allow_size_8, out.as_deref(), json),
    };
    result.unwrap_or_else(CommandOutput::error)
}

type CmdResult = Result<CommandOutput, String>;

fn load(input: &Input) -> Result<Lattice, String> {
    match (&input.file, &input.fixture) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            Lattice::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, Some(name)) => fixture(name),
        (None, None) => Err("a lattice file or --fixture is required".into()),
    }
}

fn fixture(name: &str) -> Result<Lattice, String> {
    match name.split_once(':') {
        None if name == "grid" => Ok(claims::grid()),
        None if name == "truncation" => Ok(claims::truncation(6).expect("n = 6")),
        Some(("truncation", n)) => {
            let n: usize = n.parse().map_err(|_| format!("bad truncation size `{n}`"))?;
            claims::truncation(n).map_err(|e| e.to_string())
        }
        _ => Err(format!("unknown fixture `{name}` (grid, truncation[:n])")),
    }
}

fn resolve_ideal(l: &Lattice, args: &IdealArgs) -> Result<IdealSet, String> {
    let members = match (&args.ideal, &args.ideal_principal) {
        (Some(labels), _) => l
            .set_from_labels(labels.iter().map(|s| s.trim()))
            .map_err(|u| format!("unknown element `{u}`"))?,
        (None, Some(p)) => {
            let a = l.index_of(p.trim()).ok_or_else(|| format!("unknown element `{p}`"))?;
            l.principal_ideal(a).map_err(|e| e.to_string())?
        }
        (None, None) => BitSet::singleton(l.bottom()),
    };
    IdealSet::ideal(l, members).map_err(|e| e.to_string())
}

fn json_text(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn cmd_check(l: &Lattice, json: bool) -> CommandOutput {
    let witness = find_forbidden_sublattice(l);
    let distributive = l.is_distributive();
    let modular = l.is_modular();
    if json {
        return CommandOutput::ok(json_text(json!({
            "elements": l.len(),
            "covers": l.cover_pairs().len(),
            "bottom": l.label(l.bottom()),
            "top": l.label(l.top()),
            "distributive": distributive,
            "modular": modular,
            "forbidden_sublattice": witness.map(|w| json!({
                "kind": format!("{:?}", w.kind),
                "elements": w.embedding.iter().map(|&e| l.label(e)).collect::<Vec<_>>(),
            })),
        })));
    }
    let yn = |b| if b { "yes" } else { "no" };
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", l.len());
    let _ = writeln!(out, "covers: {}", l.cover_pairs().len());
    let _ = writeln!(out, "bottom: {}", l.label(l.bottom()));
    let _ = writeln!(out, "top: {}", l.label(l.top()));
    let _ = writeln!(out, "distributive: {}", yn(distributive));
    let _ = writeln!(out, "modular: {}", yn(modular));
    match witness {
        Some(w) => {
            let els: Vec<&str> = w.embedding.iter().map(|&e| l.label(e)).collect();
            let _ = writeln!(out, "forbidden sublattice: {:?} {}", w.kind, els.join(" "));
        }
        None => out.push_str("forbidden sublattice: none\n"),
    }
    CommandOutput::ok(out)
}

fn cmd_ideals(l: &Lattice, args: &IdealArgs, quotient: Option<&str>, json: bool) -> CmdResult {
    let ideals = ideal::enumerate_ideals(l);
    let quotient = match quotient {
        Some(x) => {
            let xi = l.index_of(x).ok_or_else(|| format!("unknown element `{x}`"))?;
            let i = resolve_ideal(l, args)?;
            let q = ideal::quotient_ideal(l, &i, xi);
            Some((x.to_string(), i, q))
        }
        None => None,
    };
    if json {
        let list: Vec<_> = ideals
            .iter()
            .map(|i| {
                json!({
                    "members": i.members().iter().map(|x| l.label(x)).collect::<Vec<_>>(),
                    "proper": i.is_proper(),
                    "prime": i.is_prime(),
                })
            })
            .collect();
        let q = quotient.as_ref().map(|(x, i, q)| {
            json!({
                "x": x,
                "ideal": l.format_set(i.members()),
                "quotient": l.format_set(*q),
                "is_ideal": ideal::is_ideal(l, *q),
            })
        });
        return Ok(CommandOutput::ok(json_text(json!({ "ideals": list, "quotient": q }))));
    }
    let mut out = String::new();
    for i in &ideals {
        let mut tags = Vec::new();
        if i.is_prime() {
            tags.push("prime");
        }
        if !i.is_proper() {
            tags.push("improper");
        }
        let _ = writeln!(out, "{} {}", l.format_set(i.members()), tags.join(" ")).map(|_| ());
    }
    let primes = ideals.iter().filter(|i| i.is_prime()).count();
    let _ = writeln!(out, "ideals: {}, prime: {}", ideals.len(), primes);
    if let Some((x, i, q)) = quotient {
        let verdict = if ideal::is_ideal(l, q) { "an ideal" } else { "not an ideal" };
        let _ = writeln!(out, "({}:{x}) = {} ({verdict})", l.format_set(i.members()), l.format_set(q));
    }
    // trailing spaces from empty tag lists
    let out = out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n";
    Ok(CommandOutput::ok(out))
}

fn cmd_zdgraph(l: &Lattice, args: &IdealArgs, dot: bool, classic: bool, json: bool) -> CmdResult {
    let g = if classic {
        build_gamma(l)
    } else {
        let i = resolve_ideal(l, args)?;
        build_gamma_i(l, &i).map_err(|e| e.to_string())?
    };
    if dot {
        return Ok(CommandOutput::ok(g.to_dot()));
    }
    let edges: Vec<(String, String)> = g
        .element_edges()
        .iter()
        .map(|&(u, v)| (l.label(u).to_string(), l.label(v).to_string()))
        .collect();
    if json {
        let inv = g.invariants();
        return Ok(CommandOutput::ok(json_text(json!({
            "kind": if classic { "gamma" } else { "gamma_i" },
            "ideal": l.format_set(g.origin().ideal),
            "vertices": g.vertex_labels(),
            "edges": edges,
            "connected": inv.connected,
            "diameter": inv.diameter.to_string(),
            "girth": inv.girth.to_string(),
            "cut_vertices": labels_of(&g, inv.cut_vertices),
            "core_vertices": labels_of(&g, inv.core_vertices),
            "omega": inv.clique_number,
            "chi": inv.chromatic_number,
        }))));
    }
    let mut out = String::new();
    if classic {
        out.push_str("graph: gamma (adjacency x ∧ y = 0)\n");
    } else {
        let _ = writeln!(out, "graph: gamma_I with I = {}", l.format_set(g.origin().ideal));
    }
    let _ = writeln!(out, "|V| = {}", g.vertex_count());
    let _ = writeln!(out, "V = {{{}}}", g.vertex_labels().join(","));
    let _ = writeln!(out, "|E| = {}", g.edge_count());
    for (u, v) in &edges {
        let _ = writeln!(out, "  {u} -- {v}");
    }
    out.push_str(&g.invariants_report());
    Ok(CommandOutput::ok(out))
}

fn labels_of(g: &zdgraph::ZdGraph, positions: BitSet) -> Vec<&str> {
    positions.iter().map(|p| g.vertex_labels()[p].as_str()).collect()
}

fn cmd_radical(l: &Lattice, args: &IdealArgs, variant: RadicalVariant, json: bool) -> CmdResult {
    let i = resolve_ideal(l, args)?;
    let r = ideal::radical(l, &i, variant);
    if json {
        return Ok(CommandOutput::ok(json_text(json!({
            "ideal": l.format_set(i.members()),
            "variant": variant.name(),
            "family_size": r.family_size,
            "family": r.family.iter().map(|p| l.format_set(*p)).collect::<Vec<_>>(),
            "radical": r.value.map(|v| l.format_set(v)),
            "equals_ideal": r.value == Some(i.members()),
        }))));
    }
    let mut out = String::new();
    let _ = writeln!(out, "I = {}", l.format_set(i.members()));
    let _ = writeln!(out, "variant: {variant}");
    let _ = writeln!(out, "family_size: {}", r.family_size);
    for p in &r.family {
        let _ = writeln!(out, "  prime {}", l.format_set(*p));
    }
    match r.value {
        None => {
            let what = match variant {
                RadicalVariant::Contained => "contained in",
                RadicalVariant::Containing => "containing",
            };
            let _ = writeln!(out, "no prime {what} I");
        }
        Some(v) if v == i.members() => out.push_str("√I = I\n"),
        Some(v) => {
            let _ = writeln!(out, "√I = {} ≠ I", l.format_set(v));
        }
    }
    Ok(CommandOutput::ok(out))
}

/// One named golden fact about the built-in fixtures.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs the golden checks. The grid diagram is a parameter so a corrupted
/// copy can be exercised.
pub fn verify_golden(grid: &LatticeSpec) -> Vec<GoldenCheck> {
    let fig = Lattice::from_spec(grid).map_err(|e| format!("grid diagram does not build: {e}"));
    let mut checks = Vec::new();
    let mut record = |name: &'static str, r: Result<String, String>| {
        let (passed, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        checks.push(GoldenCheck { name, passed, detail });
    };

    let with_fig = |f: &dyn Fn(&Lattice) -> Result<String, String>| match &fig {
        Ok(l) => f(l),
        Err(e) => Err(e.clone()),
    };
    let idx = |l: &Lattice, s: &str| l.index_of(s).ok_or_else(|| format!("label `{s}` missing"));
    let expect = |cond: bool, ok: String, bad: String| if cond { Ok(ok) } else { Err(bad) };

    record(
        "grid: 9-element distributive lattice with 12 covers",
        with_fig(&|l| {
            let covers = l.cover_pairs().len();
            let d = l.is_distributive() && find_forbidden_sublattice(l).is_none();
            expect(
                l.len() == 9 && covers == 12 && d,
                "9 elements, 12 covers, distributive".into(),
                format!("{} elements, {covers} covers, distributive={d}", l.len()),
            )
        }),
    );
    record(
        "grid: 0∧z = a∧b = a∧x = c∧b = c∧x = 0",
        with_fig(&|l| {
            for (a, b) in [("0", "z"), ("a", "b"), ("a", "x"), ("c", "b"), ("c", "x")] {
                let m = l.meet(idx(l, a)?, idx(l, b)?);
                if m != l.bottom() {
                    return Err(format!("{a}∧{b} = {}", l.label(m)));
                }
            }
            Ok("all five meets are 0".into())
        }),
    );
    record(
        "grid: |V(Γ(L))| = 5",
        with_fig(&|l| {
            let g = build_gamma(l);
            expect(
                g.vertex_count() == 5,
                format!("V = {{{}}}", g.vertex_labels().join(",")),
                format!("|V| = {}", g.vertex_count()),
            )
        }),
    );
    record(
        "grid: |V(Γ_{0}(L))| = 4",
        with_fig(&|l| {
            let g = build_gamma_i(l, &IdealSet::zero(l)).map_err(|e| e.to_string())?;
            expect(
                g.vertex_count() == 4,
                format!("V = {{{}}}", g.vertex_labels().join(",")),
                format!("|V| = {}", g.vertex_count()),
            )
        }),
    );
    record(
        "grid: Γ_{0}(L) is not isomorphic to Γ(L)",
        with_fig(&|l| {
            let g0 = build_gamma_i(l, &IdealSet::zero(l)).map_err(|e| e.to_string())?;
            expect(
                zdgraph::graphs_isomorphic(&build_gamma(l), &g0).is_none(),
                "no isomorphism".into(),
                "graphs are isomorphic".into(),
            )
        }),
    );
    record(
        "grid: Γ_{0}(L) is isomorphic to Γ(L) minus 0",
        with_fig(&|l| {
            let g0 = build_gamma_i(l, &IdealSet::zero(l)).map_err(|e| e.to_string())?;
            expect(
                zdgraph::graphs_isomorphic(&gamma_without_zero(l), &g0).is_some(),
                "isomorphic".into(),
                "not isomorphic".into(),
            )
        }),
    );
    record(
        "grid: (z] = {0,a,c,x,y,z}",
        with_fig(&|l| {
            let z = l.principal_ideal(idx(l, "z")?).map_err(|e| e.to_string())?;
            let want = l.set_from_labels(["0", "c", "a", "x", "y", "z"]).map_err(|u| format!("label `{u}` missing"))?;
            expect(z == want, l.format_set(z), l.format_set(z))
        }),
    );
    record(
        "grid: primes inside (z] are (a] and (z], radical {0,a,c} ≠ I",
        with_fig(&|l| {
            let z = IdealSet::principal(l, idx(l, "z")?);
            let r = ideal::radical(l, &z, RadicalVariant::Contained);
            let want_family = vec![
                l.principal_ideal(idx(l, "a")?).map_err(|e| e.to_string())?,
                z.members(),
            ];
            let want_value = l.set_from_labels(["0", "a", "c"]).map_err(|u| format!("label `{u}` missing"))?;
            let fam: Vec<String> = r.family.iter().map(|p| l.format_set(*p)).collect();
            let got = format!(
                "family [{}], radical {}",
                fam.join(" "),
                r.value.map_or("none".into(), |v| l.format_set(v))
            );
            expect(r.family == want_family && r.value == Some(want_value), got.clone(), got)
        }),
    );
    record(
        "grid: radical over primes containing (z] is (z]",
        with_fig(&|l| {
            let z = IdealSet::principal(l, idx(l, "z")?);
            let r = ideal::radical(l, &z, RadicalVariant::Containing);
            expect(
                r.value == Some(z.members()),
                format!("family_size {}", r.family_size),
                format!("radical {:?}", r.value.map(|v| l.format_set(v))),
            )
        }),
    );

    let (t, chain_ideal) = claims::truncation_with_ideal(6).expect("n = 6");
    record("truncation n=6: 8-element non-distributive lattice", {
        let w = find_forbidden_sublattice(&t);
        let ok = t.len() == 8 && !t.is_distributive() && w.is_some_and(|w| w.verify(&t));
        let detail = match w {
            Some(w) => {
                let els: Vec<&str> = w.embedding.iter().map(|&e| t.label(e)).collect();
                format!("{:?} {}", w.kind, els.join(" "))
            }
            None => "no forbidden sublattice".into(),
        };
        expect(ok, detail.clone(), detail)
    });
    record("truncation n=6: upper-set intersection is {{4..6},{1..6}} ≠ {1}", {
        let hyp = claims::upper_set_intersection(&t, &chain_ideal);
        let want = t.set_from_labels(["{4..6}", "{1..6}"]).expect("labels exist");
        let report = claims::check_p1_6(&t, &chain_ideal).map(|r| r.status);
        expect(
            hyp == want && report == Ok(Status::Vacuous),
            format!("{} (P1.6 vacuous)", t.format_set(hyp)),
            format!("{} ({report:?})", t.format_set(hyp)),
        )
    });
    record("search: smallest contained-primes radical counterexample is the 3-chain with I = {0,a}", {
        match census::search_counterexample(ClaimId::P2_1Contained, 3) {
            Ok(Some((l, i, _))) => {
                let ok = l.len() == 3 && l.is_chain() && l.format_set(i.members()) == "{0,a}";
                let d = format!("{}-element lattice, I = {}", l.len(), l.format_set(i.members()));
                expect(ok, d.clone(), d)
            }
            Ok(None) => Err("no counterexample".into()),
            Err(e) => Err(e.to_string()),
        }
    });
    record("census: Γ_{0}(L) ≅ Γ(L) minus 0 on every lattice up to 6 elements", {
        let mut total = 0;
        let mut bad = Vec::new();
        for l in census::enumerate_lattices(6).filter(|l| l.len() >= 2) {
            total += 1;
            let g0 = build_gamma_i(&l, &IdealSet::zero(&l)).expect("{0} is proper");
            if zdgraph::graphs_isomorphic(&gamma_without_zero(&l), &g0).is_none() {
                bad.push(l.to_text());
            }
        }
        expect(
            bad.is_empty(),
            format!("{total}/{total} lattices"),
            format!("{} of {total} lattices differ", bad.len()),
        )
    });
    record("census: lattice classes of sizes 1..6 number 1 1 1 2 5 15", {
        let counts: Vec<usize> = (1..=6).map(|n| census::lattices_of_size(n).len()).collect();
        expect(counts == [1, 1, 1, 2, 5, 15], format!("{counts:?}"), format!("{counts:?}"))
    });

    let sweep = |claims: Vec<ClaimId>| {
        census::run_census(&CensusConfig {
            max_size: 7,
            distributive_only: true,
            claims,
            ideal_filter: IdealFilter::Proper,
            worker_count: 1,
            allow_size_8: false,
        })
        .map_err(|e| e.to_string())
    };
    record(
        "census: radical over containing primes equals I on distributive lattices up to 7",
        sweep(vec![ClaimId::P2_1Containing]).and_then(|s| {
            let c = s.per_claim[&ClaimId::P2_1Containing];
            let d = format!("{} of {} proper ideals", c.holds, s.instance_count);
            expect(c.holds == s.instance_count, d.clone(), d)
        }),
    );
    record(
        "census: diameter, cycle and core claims never fail on distributive lattices up to 7",
        sweep(vec![ClaimId::P1_3, ClaimId::T1_5a, ClaimId::T1_5b, ClaimId::Case4]).and_then(|s| {
            let fails: usize = s.per_claim.values().map(|c| c.fails).sum();
            let g = &s.graph_stats;
            let odd_girth = g.girths.keys().any(|k| !matches!(k.as_str(), "3" | "4" | "acyclic"));
            let d = format!(
                "{fails} failures, girths {:?}, {} off-core non-pendant vertices",
                g.girths, g.off_core_non_pendant_vertices
            );
            expect(fails == 0 && !odd_girth && g.off_core_non_pendant_vertices == 0, d.clone(), d)
        }),
    );
    checks
}

pub fn cmd_verify(json: bool) -> CommandOutput {
    render_verify(&verify_golden(&claims::grid_spec()), json)
}

pub fn render_verify(checks: &[GoldenCheck], json: bool) -> CommandOutput {
    let passed = checks.iter().filter(|c| c.passed).count();
    let code = if passed == checks.len() { EXIT_OK } else { EXIT_CLAIM_FAILED };
    if json {
        let text = json_text(json!({ "checks": checks, "passed": passed, "total": checks.len() }));
        return CommandOutput::with_code(text, code);
    }
    let mut out = String::new();
    for c in checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
    }
    let _ = writeln!(out, "{passed}/{} checks passed", checks.len());
    CommandOutput::with_code(out, code)
}

fn cmd_census(config: &CensusConfig, out_dir: Option<&std::path::Path>, json: bool) -> CmdResult {
    let mut stderr = String::new();
    if config.max_size == census::MAX_CENSUS_SIZE && config.allow_size_8 {
        stderr.push_str("warning: size 8 adds 222 lattice classes and every ideal of each\n");
    }
    let summary = census::run_census(config).map_err(|e| e.to_string())?;
    if let Some(dir) = out_dir {
        summary.write_counterexamples(dir).map_err(|e| e.to_string())?;
    }
    let stdout = if json {
        json_text(serde_json::to_value(&summary).expect("summary serializes"))
    } else {
        summary.render()
    };
    let code = if summary.counterexamples.is_empty() { EXIT_OK } else { EXIT_CLAIM_FAILED };
    Ok(CommandOutput { stdout, stderr, code })
}

fn cmd_search(
    claim: &str,
    max_size: usize,
    allow_size_8: bool,
    out_dir: Option<&std::path::Path>,
    json: bool,
) -> CmdResult {
    let claim: ClaimId = claim.parse().map_err(|e: claims::UnknownClaim| e.to_string())?;
    if max_size == census::MAX_CENSUS_SIZE && !allow_size_8 {
        return Err(census::CensusError::Size8NotAllowed.to_string());
    }
    let found = census::search_counterexample(claim, max_size).map_err(|e| e.to_string())?;
    let Some((l, i, report)) = found else {
        let stdout = if json {
            json_text(json!({ "claim": claim, "max_size": max_size, "found": false }))
        } else {
            format!("{claim}: no counterexample up to {max_size} elements\n")
        };
        return Ok(CommandOutput::ok(stdout));
    };
    let mut written = None;
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        let path = dir.join(format!("{claim}.lattice"));
        let text = census::Counterexample::new(&l, &i, report.clone()).to_file_text();
        std::fs::write(&path, text).map_err(|e| e.to_string())?;
        written = Some(path);
    }
    let stdout = if json {
        json_text(json!({
            "claim": claim,
            "max_size": max_size,
            "found": true,
            "lattice": l.to_text(),
            "ideal": l.format_set(i.members()),
            "report": report,
            "file": written.as_ref().map(|p| p.display().to_string()),
        }))
    } else {
        let mut s = format!(
            "{claim}: counterexample on a {}-element lattice with I = {}\n",
            l.len(),
            l.format_set(i.members())
        );
        s.push_str(&report.line(&l));
        s.push('\n');
        s.push_str(&l.to_text());
        if let Some(p) = &written {
            let _ = writeln!(s, "written: {}", p.display());
        }
        s
    };
    Ok(CommandOutput::with_code(stdout, EXIT_CLAIM_FAILED))
}
