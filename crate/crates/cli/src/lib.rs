//! Command-line front end: argument parsing, input loading and output
//! rendering around the `regset` library.
//!
//! [`run`] never touches the process streams, so tests can drive it directly.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use regset::formats::{group_from_json, id_set_from_json, SubgroupSpec};
use regset::perfect_code::{InvolutionWitness, Violation};
use regset::{
    all_subgroups, catalog, check_regular_set, is_perfect_code, oracle_inverse_closed_transversal,
    BuildOptions, ConnectionBuilder, ElementId, GroupTable, LayeredCosetGraph, RegularSetReport,
    Subgroup, IDENTITY,
};

#[derive(Debug, Parser)]
#[command(name = "regset", version, about = "Subgroup perfect codes and (a,b)-regular sets in Cayley graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Double-coset blocks of G relative to H.
    Classes(Target),
    /// Decide whether H is a perfect code of some Cayley graph on G.
    CheckPc {
        #[command(flatten)]
        target: Target,
        /// Cross-check against the transversal search, for |G| up to N.
        #[arg(long, value_name = "N")]
        oracle_cap: Option<usize>,
    },
    /// Layered coset multigraphs, one per block.
    Layers(Target),
    /// Construct S making H an (a,b)-regular set of Cay(G,S).
    Build {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        ab: Params,
        /// Fail before building if odd b is impossible.
        #[arg(long)]
        strict_precheck: bool,
        #[arg(long, value_enum, default_value_t = Render::Ids)]
        render: Render,
    },
    /// Check that H is an (a,b)-regular set of Cay(G,S).
    Verify {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        ab: Params,
        #[arg(long, value_name = "PATH")]
        set: PathBuf,
    },
    /// Write Cay(G,S) as DOT, marking the vertices of H.
    ExportDot {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_name = "PATH")]
        set: PathBuf,
    },
    /// Build and verify every feasible (H, a, b) for one group.
    Sweep {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Args)]
struct GroupArg {
    /// Group file, or `catalog:NAME`.
    #[arg(long, value_name = "PATH|catalog:NAME")]
    group: String,
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write the result here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Target {
    #[command(flatten)]
    group: GroupArg,
    /// Subgroup file, `members:[..]` or `generators:[..]`.
    #[arg(long, value_name = "PATH|members:[..]|generators:[..]")]
    subgroup: String,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Debug, Args)]
struct Params {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Render {
    Ids,
    Perm,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad flags, unreadable files: exit 2.
    Usage(String),
    /// Library errors and failed checks: exit 1, JSON on stderr.
    Domain(String),
}

impl From<regset::Error> for Failure {
    fn from(e: regset::Error) -> Self {
        Failure::Domain(to_json(&e))
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_group(source: &str) -> Result<GroupTable, Failure> {
    match source.strip_prefix("catalog:") {
        Some(name) => Ok(catalog(name)?),
        None => Ok(group_from_json(&read(source.as_ref())?)?),
    }
}

fn load_subgroup<'g>(group: &'g GroupTable, source: &str) -> Result<Subgroup<'g>, Failure> {
    let spec = if source.starts_with("members:") || source.starts_with("generators:") {
        SubgroupSpec::parse_inline(source)?
    } else {
        SubgroupSpec::from_json(&read(source.as_ref())?)?
    };
    Ok(spec.resolve(group)?)
}

#[derive(Serialize)]
struct OracleCheck {
    agrees: bool,
    transversal: Option<Vec<ElementId>>,
}

#[derive(Serialize)]
struct PerfectCodeOutput {
    perfect_code: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<InvolutionWitness>>,
    /// An inverse-closed right transversal of `H`, containing the identity.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_transversal: Option<Vec<ElementId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleCheck>,
}

fn check_pc(h: &Subgroup<'_>, oracle_cap: Option<usize>) -> Result<PerfectCodeOutput, Failure> {
    let verdict = is_perfect_code(h)?;
    let witness_transversal = if verdict.is_perfect_code {
        let s = ConnectionBuilder::new(h)?.build(0, 1)?;
        let mut t = s.outer;
        t.insert(0, IDENTITY);
        Some(t)
    } else {
        None
    };
    let oracle = match oracle_cap {
        Some(cap) => {
            let found = oracle_inverse_closed_transversal(h, cap)?;
            Some(OracleCheck {
                agrees: found.is_some() == verdict.is_perfect_code,
                transversal: found,
            })
        }
        None => None,
    };
    Ok(PerfectCodeOutput {
        perfect_code: verdict.is_perfect_code,
        violation: verdict.violation,
        witnesses: verdict.witnesses,
        witness_transversal,
        oracle,
    })
}

#[derive(Serialize)]
struct BuildOutput {
    a: usize,
    b: usize,
    #[serde(rename = "S")]
    s: Vec<ElementId>,
    size: usize,
    inner: Vec<ElementId>,
    blocks: Vec<regset::TransversalBundle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    permutations: Option<Vec<String>>,
}

#[derive(Serialize)]
struct VerificationFailed<'a> {
    error: &'static str,
    report: &'a RegularSetReport,
}

fn build(g: &GroupTable, h: &Subgroup<'_>, a: usize, b: usize, strict_precheck: bool, render: Render) -> Result<BuildOutput, Failure> {
    let builder = ConnectionBuilder::with_options(h, BuildOptions { strict_precheck })?;
    let set = builder.build(a, b)?;
    let report = check_regular_set(g, &set.elements, h, a, b)?;
    if !report.ok {
        return Err(Failure::Domain(to_json(&VerificationFailed {
            error: "VerificationFailed",
            report: &report,
        })));
    }
    let permutations = match render {
        Render::Ids => None,
        Render::Perm => {
            g.permutations()
                .ok_or_else(|| Failure::Usage("--render perm needs a permutation group".into()))?;
            Some(
                set.elements
                    .iter()
                    .map(|&y| g.permutation(y).expect("permutation group").to_string())
                    .collect(),
            )
        }
    };
    Ok(BuildOutput {
        a,
        b,
        size: set.size(),
        s: set.elements,
        inner: set.inner,
        blocks: set.blocks,
        permutations,
    })
}

/// Undirected edges of `Cay(G, S)`, each once as `(low, high)`, sorted.
fn cayley_edges(g: &GroupTable, s: &[ElementId]) -> Vec<(ElementId, ElementId)> {
    let mut edges: Vec<(ElementId, ElementId)> = g
        .elements()
        .flat_map(|x| s.iter().map(move |&y| (x, g.mul(y, x))))
        .filter(|&(x, z)| x < z)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn export_dot(g: &GroupTable, h: &Subgroup<'_>, s: &[ElementId]) -> Result<String, Failure> {
    regset::verifier::validate_connection_set(g, s)?;
    let mut out = String::from("graph {\n");
    for v in g.elements() {
        if h.contains(v) {
            writeln!(out, "  v{v} [incode=true];").unwrap();
        } else {
            writeln!(out, "  v{v};").unwrap();
        }
    }
    for (x, z) in cayley_edges(g, s) {
        writeln!(out, "  v{x} -- v{z};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Serialize)]
struct SweepRow {
    subgroup: Vec<ElementId>,
    index: usize,
    perfect_code: bool,
    a: usize,
    b: usize,
    /// `None` when the build was refused.
    size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'static str>,
    ok: bool,
}

#[derive(Serialize)]
struct SweepSummary {
    group: Option<String>,
    order: usize,
    subgroups: usize,
    cases: usize,
    verified: usize,
    refused: usize,
    failures: usize,
    rows: Vec<SweepRow>,
}

/// A row is `ok` when the build verifies, or is refused for odd `b` on a
/// subgroup that is not a perfect code.
fn sweep(g: &GroupTable) -> Result<SweepSummary, Failure> {
    let subgroups: Vec<Subgroup<'_>> = all_subgroups(g)
        .into_iter()
        .filter(|h| !h.is_trivial() && h.is_proper())
        .collect();
    let mut rows = Vec::new();
    for h in &subgroups {
        let pc = is_perfect_code(h)?.is_perfect_code;
        let builder = ConnectionBuilder::new(h)?;
        for a in (0..h.order()).filter(|a| h.order() % 2 == 0 || a % 2 == 0) {
            for b in 0..=h.order() {
                let row = match builder.build(a, b) {
                    Ok(set) => {
                        let ok = check_regular_set(g, &set.elements, h, a, b)?.ok;
                        (Some(set.size()), None, ok)
                    }
                    Err(e) => {
                        let expected = !pc && b % 2 == 1 && matches!(e, regset::Error::PerfectCodeRequired { .. });
                        (None, Some(e.kind()), expected)
                    }
                };
                rows.push(SweepRow {
                    subgroup: h.members().to_vec(),
                    index: h.index(),
                    perfect_code: pc,
                    a,
                    b,
                    size: row.0,
                    error: row.1,
                    ok: row.2,
                });
            }
        }
    }
    Ok(SweepSummary {
        group: g.name().map(String::from),
        order: g.order(),
        subgroups: subgroups.len(),
        cases: rows.len(),
        verified: rows.iter().filter(|r| r.ok && r.size.is_some()).count(),
        refused: rows.iter().filter(|r| r.ok && r.size.is_none()).count(),
        failures: rows.iter().filter(|r| !r.ok).count(),
        rows,
    })
}

/// Result text, destination and exit code of a successful dispatch.
struct Emit {
    text: String,
    out: Option<PathBuf>,
    code: i32,
}

impl Emit {
    fn json<T: Serialize>(value: &T, out: &OutArg) -> Self {
        Emit {
            text: to_json(value),
            out: out.out.clone(),
            code: 0,
        }
    }
}

fn dispatch(command: Command) -> Result<Emit, Failure> {
    match command {
        Command::Classes(t) => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            Ok(Emit::json(&h.class_decomposition()?, &t.out))
        }
        Command::CheckPc { target: t, oracle_cap } => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            Ok(Emit::json(&check_pc(&h, oracle_cap)?, &t.out))
        }
        Command::Layers(t) => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            let dumps: Vec<_> = h
                .class_decomposition()?
                .blocks
                .iter()
                .map(|block| LayeredCosetGraph::build(&h, block).dump())
                .collect();
            Ok(Emit::json(&dumps, &t.out))
        }
        Command::Build {
            target: t,
            ab,
            strict_precheck,
            render,
        } => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            Ok(Emit::json(&build(&g, &h, ab.a, ab.b, strict_precheck, render)?, &t.out))
        }
        Command::Verify { target: t, ab, set } => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            let s = id_set_from_json(&read(&set)?)?;
            let report = check_regular_set(&g, &s, &h, ab.a, ab.b)?;
            let mut emit = Emit::json(&report, &t.out);
            emit.code = if report.ok { 0 } else { 1 };
            Ok(emit)
        }
        Command::ExportDot { target: t, set } => {
            let g = load_group(&t.group.group)?;
            let h = load_subgroup(&g, &t.subgroup)?;
            let s = id_set_from_json(&read(&set)?)?;
            Ok(Emit {
                text: export_dot(&g, &h, &s)?,
                out: t.out.out,
                code: 0,
            })
        }
        Command::Sweep { group, out } => {
            let g = load_group(&group.group)?;
            let summary = sweep(&g)?;
            let mut emit = Emit::json(&summary, &out);
            emit.code = if summary.failures == 0 { 0 } else { 1 };
            Ok(emit)
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(Emit { text, out: None, code }) => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
        Ok(Emit { text, out: Some(path), code }) => match fs::write(&path, text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}\n", path.display()),
            },
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(json)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: json,
        },
    }
}
