//! Command-line front end.
//!
//! Every command renders its result three ways: an aligned text table
//! (`human`), a JSON envelope (`json`) and a CSV table with a header row
//! (`csv`). Counts are always written as decimal strings. Exit status is 0 on
//! success, 1 when `verify` finds a failing claim and 2 on bad usage or input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::arith::factorial;
use crate::caput::{self, CaputSpec, Head, HeadMode};
use crate::error::{Error, Result};
use crate::oracle::{self, ClosedForms, Fault};
use crate::partitions::{self, class_order};
use crate::perm::{compose, Permutation};
use crate::problems::{self, Query, Reduction};
use crate::{genealogy, FORMAT_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "combinatoria", version, about = "Exact counting over the symmetric group")]
struct Cli {
    /// Output format
    #[arg(
        long,
        global = true,
        value_enum,
        env = "COMBINATORIA_FORMAT",
        default_value = "human"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Permutation arithmetic
    #[command(subcommand)]
    Perm(PermCmd),
    /// Integer partitions
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Conjugacy classes of Sₙ with their orders
    Classes {
        #[arg(long)]
        n: usize,
    },
    /// Fixed-head counting and enumeration
    #[command(subcommand)]
    Caput(CaputCmd),
    /// The problem catalogue
    #[command(subcommand)]
    Problems(ProblemsCmd),
    /// Consanguinity-tree counts and coordinates
    #[command(subcommand)]
    Genealogy(GenealogyCmd),
    /// Check every closed form against brute-force enumeration
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Break a closed form on purpose (mutation check)
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    CauchyDenominator,
}

#[derive(Debug, Args)]
struct DegreeArg {
    /// Degree, needed for cycle forms that leave out trailing fixed points
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum PermCmd {
    /// p∘q, applying q first
    Compose {
        p: String,
        q: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Inverse permutation
    Inverse {
        p: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
    /// Cycle decomposition, cycle type and fixed points
    Cycles {
        p: String,
        #[command(flatten)]
        degree: DegreeArg,
    },
}

#[derive(Debug, Subcommand)]
enum PartitionsCmd {
    /// p(n), exact
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Every partition of n, largest first part first
    List {
        #[arg(long)]
        n: usize,
    },
    /// Partitions of n into exactly two parts
    TwoPart {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Args)]
struct HeadArgs {
    #[arg(long)]
    n: usize,
    /// Positions with occupants, e.g. 1=a,3=c
    #[arg(long, default_value = "")]
    head: String,
    /// loose, exact or setwise
    #[arg(long, default_value = "loose")]
    mode: String,
}

impl HeadArgs {
    fn spec(&self) -> Result<CaputSpec> {
        CaputSpec::new(Head::parse(self.n, &self.head)?, self.mode.parse()?)
    }
}

#[derive(Debug, Subcommand)]
enum CaputCmd {
    /// Number of arrangements with the given head
    Count(HeadArgs),
    /// The arrangements with the given head, in lexicographic order
    Enumerate {
        #[command(flatten)]
        head: HeadArgs,
        /// Stop after this many permutations
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// 1-12, complexions or simpliciter
    #[arg(long)]
    id: String,
    #[arg(long)]
    n: Option<usize>,
    /// Exponent of the complexions
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    head: Option<String>,
    #[arg(long)]
    mode: Option<String>,
    /// Smaller arrangement for problem 10, as position=symbol pairs
    #[arg(long)]
    sub: Option<String>,
    /// Larger arrangement for problem 10, e.g. badc
    #[arg(long)]
    whole: Option<String>,
    /// Count the empty complexion in simpliciter
    #[arg(long)]
    include_empty: bool,
}

#[derive(Debug, Subcommand)]
enum ProblemsCmd {
    /// Count (and optionally list) the instances of a problem
    Solve {
        #[command(flatten)]
        args: ProblemArgs,
        /// List up to this many witnesses
        #[arg(long)]
        witnesses: Option<usize>,
    },
    /// Recompute a problem's count through a fixed head
    Reduce {
        #[command(flatten)]
        args: ProblemArgs,
    },
}

#[derive(Debug, Subcommand)]
enum GenealogyCmd {
    /// Points of the tree at a degree: 2ⁿ·(n+1)
    Personae {
        #[arg(long)]
        gradus: usize,
    },
    /// Coordinates of every point, as (antecedens, sequens) pairs
    Coords {
        #[arg(long)]
        gradus: usize,
    },
    /// Partitions of the rank count into two parts
    Discerptiones {
        #[arg(long)]
        n: u64,
    },
}

/// A result in all three renderings.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    // trailing human-only lines
    notes: Vec<String>,
    status: i32,
}

impl Output {
    fn new(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Output {
            json,
            header,
            rows,
            notes: Vec::new(),
            status: EXIT_OK,
        }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    fn render(&self, format: Format, command: &str, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let env = json!({
                    "format_version": FORMAT_VERSION,
                    "command": command,
                    "result": self.json,
                });
                let text = serde_json::to_string_pretty(&env).map_err(std::io::Error::other)?;
                writeln!(out, "{text}")
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Human => {
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        self.rows
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.header[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                let head: Vec<String> = self.header.iter().map(|h| h.to_string()).collect();
                writeln!(out, "{}", line(&head))?;
                for r in &self.rows {
                    writeln!(out, "{}", line(r))?;
                }
                for n in &self.notes {
                    writeln!(out, "{n}")?;
                }
                Ok(())
            }
        }
    }
}

fn dec(v: &BigUint) -> String {
    v.to_string()
}

/// Runs the CLI on `argv` (program name first) and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let command = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match dispatch(cli.command) {
        Ok(output) => match output.render(cli.format, &command, out) {
            Ok(()) => output.status,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Perm(c) => perm(c),
        Command::Partitions(c) => partitions_cmd(c),
        Command::Classes { n } => classes(n),
        Command::Caput(c) => caput_cmd(c),
        Command::Problems(c) => problems_cmd(c),
        Command::Genealogy(c) => genealogy_cmd(c),
        Command::Verify { max_n, inject_fault } => verify(max_n, inject_fault),
    }
}

fn perm_json(p: &Permutation) -> Value {
    let t = p.cycle_type();
    json!({
        "degree": p.degree(),
        "one_line": p.to_one_line_string(),
        "cycles": p.to_string(),
        "cycle_type": t.to_string(),
        "alpha": t.alpha(),
        "fixed_points": p.fixed_points(),
    })
}

fn perm_row(p: &Permutation) -> Vec<String> {
    vec![
        p.to_one_line_string(),
        p.to_string(),
        p.cycle_type().to_string(),
        p.fixed_points()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ]
}

const PERM_HEADER: [&str; 4] = ["one_line", "cycles", "cycle_type", "fixed_points"];

fn perm(cmd: PermCmd) -> Result<Output> {
    let (op, result, inputs) = match cmd {
        PermCmd::Compose { p, q, degree } => {
            let (a, b) = (Permutation::parse(&p, degree.n)?, Permutation::parse(&q, degree.n)?);
            ("compose", compose(&a, &b)?, vec![a, b])
        }
        PermCmd::Inverse { p, degree } => {
            let a = Permutation::parse(&p, degree.n)?;
            ("inverse", a.inverse(), vec![a])
        }
        PermCmd::Cycles { p, degree } => {
            let a = Permutation::parse(&p, degree.n)?;
            ("cycles", a.clone(), vec![a])
        }
    };
    let weight: usize = result
        .cycle_type()
        .alpha()
        .iter()
        .enumerate()
        .map(|(i, a)| (i + 1) * a)
        .sum();
    let json = json!({
        "operation": op,
        "inputs": inputs.iter().map(|p| p.to_one_line_string()).collect::<Vec<_>>(),
        "permutation": perm_json(&result),
        "weight": weight,
    });
    Ok(Output::new(json, PERM_HEADER.to_vec(), vec![perm_row(&result)]).note(format!("sum of i*alpha_i = {weight}")))
}

fn partitions_cmd(cmd: PartitionsCmd) -> Result<Output> {
    Ok(match cmd {
        PartitionsCmd::Count { n } => {
            let c = partitions::count_partitions(n);
            Output::new(
                json!({ "n": n, "count": dec(&c) }),
                vec!["n", "count"],
                vec![vec![n.to_string(), dec(&c)]],
            )
        }
        PartitionsCmd::List { n } => {
            let list = partitions::enumerate_partitions(n)?;
            let rows: Vec<Vec<String>> = list
                .iter()
                .enumerate()
                .map(|(i, p)| vec![(i + 1).to_string(), p.to_string(), p.len().to_string()])
                .collect();
            let json = json!({
                "n": n,
                "count": list.len().to_string(),
                "partitions": list.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            Output::new(json, vec!["index", "partition", "parts"], rows).note(format!("p({n}) = {}", list.len()))
        }
        PartitionsCmd::TwoPart { n } => {
            let c = partitions::two_part_count(n);
            let listed: Vec<String> = partitions::partitions_into(n as usize, 2)
                .map(|p| p.to_string())
                .collect();
            let json = json!({ "n": n, "count": c.to_string(), "partitions": listed });
            Output::new(json, vec!["n", "count"], vec![vec![n.to_string(), c.to_string()]])
        }
    })
}

fn classes(n: usize) -> Result<Output> {
    let types = partitions::cycle_types_of(n)?;
    let mut total = BigUint::default();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for t in &types {
        let order = class_order(t).order;
        let part = t
            .cycle_lengths()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        rows.push(vec![part.clone(), t.to_string(), dec(&order)]);
        items.push(json!({
            "partition": part,
            "cycle_type": t.to_string(),
            "alpha": t.alpha(),
            "order": dec(&order),
        }));
        total += order;
    }
    let fact = factorial(n);
    let json = json!({
        "n": n,
        "class_count": types.len().to_string(),
        "classes": items,
        "total": dec(&total),
        "factorial": dec(&fact),
    });
    Ok(
        Output::new(json, vec!["partition", "cycle_type", "order"], rows).note(format!(
            "{} classes, orders sum to {} = {n}!",
            types.len(),
            total
        )),
    )
}

fn spec_json(spec: &CaputSpec) -> Value {
    json!({ "degree": spec.degree(), "head": spec.head().to_string(), "mode": spec.mode().as_str() })
}

fn caput_cmd(cmd: CaputCmd) -> Result<Output> {
    match cmd {
        CaputCmd::Count(h) => {
            let spec = h.spec()?;
            let c = caput::count_caput(&spec);
            let json = json!({ "spec": spec_json(&spec), "count": dec(&c) });
            Ok(Output::new(
                json,
                vec!["n", "head", "mode", "count"],
                vec![vec![
                    spec.degree().to_string(),
                    spec.head().to_string(),
                    spec.mode().to_string(),
                    dec(&c),
                ]],
            ))
        }
        CaputCmd::Enumerate { head, limit } => {
            let spec = head.spec()?;
            let count = caput::count_caput(&spec);
            let mut it = caput::enumerate_caput(&spec)?;
            let perms: Vec<Permutation> = it.by_ref().take(limit.unwrap_or(usize::MAX)).collect();
            let truncated = it.next().is_some();
            let rows = perms
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let mut r = vec![(i + 1).to_string(), problems::arrangement(p)];
                    r.extend(perm_row(p));
                    r
                })
                .collect();
            let json = json!({
                "spec": spec_json(&spec),
                "count": dec(&count),
                "truncated": truncated,
                "permutations": perms.iter().map(perm_json).collect::<Vec<_>>(),
            });
            let mut header = vec!["index", "arrangement"];
            header.extend(PERM_HEADER);
            Ok(Output::new(json, header, rows).note(format!(
                "{count} in total{}",
                if truncated { ", listing truncated" } else { "" }
            )))
        }
    }
}

fn query(a: &ProblemArgs) -> Result<Query> {
    let need_n = || {
        a.n.ok_or_else(|| Error::InvalidArgument(format!("problem {} needs --n", a.id)))
    };
    Ok(match a.id.parse::<problems::ProblemId>()? {
        problems::ProblemId::Complexions => Query::Complexions {
            n: need_n()?,
            k: a.k
                .ok_or_else(|| Error::InvalidArgument("complexions need --k".into()))?,
        },
        problems::ProblemId::Simpliciter => Query::Simpliciter {
            n: need_n()?,
            include_empty: a.include_empty,
        },
        problems::ProblemId::Order => Query::Order { n: need_n()? },
        problems::ProblemId::Vicinity => Query::Vicinity { n: need_n()? },
        problems::ProblemId::Caput => {
            let head = Head::parse(need_n()?, a.head.as_deref().unwrap_or(""))?;
            let mode: HeadMode = a.mode.as_deref().unwrap_or("loose").parse()?;
            Query::Caput {
                spec: CaputSpec::new(head, mode)?,
            }
        }
        problems::ProblemId::Containment => {
            let whole = a
                .whole
                .as_deref()
                .ok_or_else(|| Error::InvalidArgument("problem 10 needs --whole".into()))?;
            let whole = Permutation::parse(whole, a.n)?;
            let sub = Head::parse(a.n.unwrap_or(whole.degree()), a.sub.as_deref().unwrap_or(""))?;
            Query::Containment { sub, whole }
        }
        problems::ProblemId::Reserved(id) => Query::Reserved { id },
    })
}

fn json_of<T: serde::Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::InvalidArgument(e.to_string()))
}

// Flattens a JSON object into a two-row table.
fn object_table(v: &Value) -> (Vec<&'static str>, Vec<Vec<String>>) {
    const KEYS: [&str; 13] = [
        "problem_id",
        "status",
        "inputs",
        "count",
        "contained",
        "witnesses",
        "truncated",
        "caput",
        "direct_count",
        "caput_count",
        "agrees",
        "derivation",
        "n",
    ];
    let mut header = Vec::new();
    let mut row = Vec::new();
    for key in KEYS {
        if let Some(x) = v.get(key) {
            header.push(key);
            row.push(match x {
                Value::String(s) => s.clone(),
                Value::Array(items) => items
                    .iter()
                    .map(|i| i.as_str().map(str::to_owned).unwrap_or_else(|| i.to_string()))
                    .collect::<Vec<_>>()
                    .join(" "),
                Value::Object(m) => m
                    .iter()
                    .map(|(k, v)| format!("{k}={}", v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string())))
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            });
        }
    }
    (header, vec![row])
}

fn problems_cmd(cmd: ProblemsCmd) -> Result<Output> {
    let value = match cmd {
        ProblemsCmd::Solve { args, witnesses } => json_of(&problems::solve(&query(&args)?, witnesses)?)?,
        ProblemsCmd::Reduce { args } => {
            let r: Reduction = problems::reduce_to_caput(&query(&args)?)?;
            json_of(&r)?
        }
    };
    let (header, rows) = object_table(&value);
    // transpose into key/value lines for reading
    let mut out = Output::new(value, header.clone(), rows.clone());
    out.header = vec!["field", "value"];
    out.rows = header
        .iter()
        .zip(&rows[0])
        .map(|(k, v)| vec![k.to_string(), v.clone()])
        .collect();
    Ok(out)
}

fn genealogy_cmd(cmd: GenealogyCmd) -> Result<Output> {
    Ok(match cmd {
        GenealogyCmd::Personae { gradus } => {
            let m = genealogy::GradusModel::new(gradus);
            let c = m.personae();
            Output::new(
                json!({ "gradus": gradus, "cognationes": m.cognationes, "personae": dec(&c) }),
                vec!["gradus", "cognationes", "personae"],
                vec![vec![gradus.to_string(), m.cognationes.to_string(), dec(&c)]],
            )
        }
        GenealogyCmd::Coords { gradus } => {
            let list = genealogy::coordinates(gradus)?;
            let rows = list
                .iter()
                .map(|c| vec![c.antecedens.to_string(), c.sequens.to_string()])
                .collect();
            let json = json!({
                "layout": genealogy::LAYOUT,
                "gradus": gradus,
                "count": list.len().to_string(),
                "coordinates": list,
            });
            Output::new(json, vec!["antecedens", "sequens"], rows).note(format!(
                "{} points, layout {}",
                list.len(),
                genealogy::LAYOUT
            ))
        }
        GenealogyCmd::Discerptiones { n } => {
            let c = genealogy::discerptiones_two(n);
            Output::new(
                json!({ "cognationes": n, "count": c.to_string() }),
                vec!["cognationes", "count"],
                vec![vec![n.to_string(), c.to_string()]],
            )
        }
    })
}

fn verify(max_n: usize, fault: Option<FaultArg>) -> Result<Output> {
    if max_n > oracle::SN_CEILING {
        return Err(Error::EnumerationTooLarge {
            what: "verification run",
            size: max_n,
            ceiling: oracle::SN_CEILING,
        });
    }
    let forms = match fault {
        Some(FaultArg::CauchyDenominator) => ClosedForms::with_fault(Fault::CauchyDenominator),
        None => ClosedForms::default(),
    };
    let reports = oracle::verify_with(max_n, &forms);
    let all_pass = reports.iter().all(|r| r.passed());
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.claim.to_string(),
                r.n_range
                    .map(|(a, b)| format!("{a}..={b}"))
                    .unwrap_or_else(|| "-".into()),
                r.cases.to_string(),
                format!("{:?}", r.verdict).to_lowercase(),
                r.counterexample.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let json = json!({ "max_n": max_n, "all_pass": all_pass, "reports": json_of(&reports)? });
    let mut out =
        Output::new(json, vec!["claim", "range", "cases", "verdict", "counterexample"], rows).note(if all_pass {
            "all claims pass"
        } else {
            "VERIFICATION FAILED"
        });
    if !all_pass {
        out.status = EXIT_VERIFY_FAILED;
    }
    Ok(out)
}
