//! `qg`: quartic Galois groups and splitting-field intersections over Q.

use clap::{Parser, Subcommand};
use serde::Serialize;

use qg_cli::commands::{self, FamilyKind};
use qg_cli::input::{parse_form_kind, parse_operand, Operand};
use qg_core::forms::FormKind;

#[derive(Parser)]
#[command(
    name = "qg",
    about = "Exact splitting-field computations for quartic polynomials over Q",
    long_about = "Classifies quartic Galois groups, decides when two quartics have the same\n\
                  splitting field (and the degree of the intersection), generates families\n\
                  of parameters with coincident fields, and dumps the underlying resolvents.\n\
                  Polynomials: `x^4+5*x^2+5` or `[5,0,5,0,1]` (ascending). Parameter pairs:\n\
                  `(0,1) s4`, `(5,5) d4-form`, or bare `(a,b)` with --form."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit one JSON document instead of text lines.
    #[arg(long, global = true)]
    machine: bool,
    /// Interpret bare `(a,b)` operands as this form kind (s4|d4|c4|v4).
    #[arg(long, global = true)]
    form: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Galois group and normal-form parameters of a quartic.
    Galois {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Intersection of the splitting fields of two quartics.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Budget for squarefree Tschirnhausen retries.
        #[arg(long, default_value_t = 16)]
        retries: u32,
        /// Cross-validate the closed-form resolvent against the numeric
        /// oracle (precision from QG_PRECISION_BITS).
        #[arg(long)]
        self_check: bool,
    },
    /// Equal/not-equal verdict with a certifying family parameter.
    Isom {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Bound on |numerator| and denominator of searched parameters.
        #[arg(long, default_value_t = 50)]
        bound: i64,
    },
    /// Emit members of an isomorphism family (s4-p|s4-uv|d4-u|d4-pq|c4).
    Family {
        #[arg(allow_hyphen_values = true)]
        input: String,
        kind: String,
        count: usize,
    },
    /// Parameter-space searches (table2|simplest-quartic).
    Search {
        mode: String,
        #[arg(long, default_value_t = -256, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, default_value_t = 768, allow_hyphen_values = true)]
        max: i64,
        /// Worker threads for grid evaluation.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Dump the exact pair resolvent and its structural parts.
    Resolvent {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        self_check: bool,
    },
}

fn emit<T: Serialize>(report: &T, machine: bool, render: impl Fn(&T) -> String) {
    if machine {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
    } else {
        print!("{}", render(report));
    }
}

fn run(cli: &Cli) -> Result<(), qg_core::Error> {
    let default_kind: Option<FormKind> = match &cli.form {
        Some(s) => Some(parse_form_kind(s)?),
        None => None,
    };
    let parse = |s: &String| -> Result<Operand, qg_core::Error> { parse_operand(s, default_kind) };
    match &cli.command {
        Command::Galois { input } => {
            let r = commands::cmd_galois(&parse(input)?)?;
            emit(&r, cli.machine, |r| {
                let mut out = format!(
                    "input: {}\npolynomial: {}\ngroup: {} (order {})\n",
                    r.input, r.poly, r.group, r.group_order
                );
                if let Some(f) = &r.s4_form {
                    out += &format!("s4-form: ({}, {})\n", f.params.0, f.params.1);
                }
                if let Some(f) = &r.d4_form {
                    out += &format!("d4-form: ({}, {})\n", f.params.0, f.params.1);
                }
                out
            });
        }
        Command::Intersect {
            a,
            b,
            retries,
            self_check,
        } => {
            let r = commands::cmd_intersect(&parse(a)?, &parse(b)?, *retries, *self_check)?;
            emit(&r, cli.machine, |r| {
                let mut out = format!(
                    "inputs: {} | {}\ngroups: {} x {}\nrelation: {}\nintersection-degree: {}\n",
                    r.inputs.0, r.inputs.1, r.groups.0, r.groups.1, r.relation, r.degree
                );
                for row in &r.rows {
                    out += &format!(
                        "row: {} (table {}, GAP [{},{}])\n",
                        row.row_id, row.table, row.gap_id.0, row.gap_id.1
                    );
                }
                out += &format!(
                    "dt: {}{}{}\n",
                    r.dt_resolvent.block,
                    match &r.dt_resolvent.refined {
                        Some(d) => format!(" refined {d}"),
                        None => String::new(),
                    },
                    format_args!(" (retries {})", r.dt_resolvent.retries)
                );
                if let Some(d1) = &r.dt_r1 {
                    out += &format!(
                        "dt-r1: {}{}\n",
                        d1.block,
                        match &d1.refined {
                            Some(d) => format!(" refined {d}"),
                            None => String::new(),
                        }
                    );
                }
                out += &format!(
                    "kernels: [{}] | [{}]\n",
                    r.subfield_kernels.0.join(", "),
                    r.subfield_kernels.1.join(", ")
                );
                if let Some(ok) = r.oracle_checked {
                    out += &format!("oracle-check: {}\n", if ok { "ok" } else { "MISMATCH" });
                }
                out += &format!("elapsed-ms: {}\n", r.elapsed_ms);
                out
            });
        }
        Command::Isom { a, b, bound } => {
            let r = commands::cmd_isom(&parse(a)?, &parse(b)?, *bound)?;
            emit(&r, cli.machine, |r| {
                let mut out = format!(
                    "inputs: {} | {}\nequal: {}\n",
                    r.inputs.0, r.inputs.1, r.equal
                );
                if let Some(w) = &r.witness {
                    out += &format!(
                        "witness-family: {}\nwitness-params: [{}]\nsource: {} ({}, {})\ntarget: {} ({}, {})\nmap: {}\n",
                        w.family,
                        w.params.join(", "),
                        w.source.kind, w.source.params.0, w.source.params.1,
                        w.target.kind, w.target.params.0, w.target.params.1,
                        w.map
                    );
                }
                if let Some(n) = &r.note {
                    out += &format!("note: {n}\n");
                }
                out
            });
        }
        Command::Family { input, kind, count } => {
            let k = FamilyKind::parse(kind)?;
            let r = commands::cmd_family(&parse(input)?, k, *count)?;
            emit(&r, cli.machine, |r| {
                let mut out = format!(
                    "input: {}\nfamily: {}\nsource: {} ({}, {})\n",
                    r.input, r.kind, r.source.kind, r.source.params.0, r.source.params.1
                );
                for p in &r.points {
                    out += &format!(
                        "point: params [{}] target ({}, {}) map {}\n",
                        p.params.join(", "),
                        p.target.params.0,
                        p.target.params.1,
                        p.map
                    );
                }
                for (param, why) in &r.skipped {
                    out += &format!("skipped: {param} ({why} vanishes)\n");
                }
                out
            });
        }
        Command::Search {
            mode,
            min,
            max,
            jobs,
        } => {
            let r = match mode.as_str() {
                "table2" => commands::cmd_search_table2(*min, *max),
                "simplest-quartic" => commands::cmd_search_simplest((*min).max(1), *max, *jobs)?,
                other => {
                    return Err(qg_core::Error::Parse(format!(
                        "unknown search mode `{other}`"
                    )))
                }
            };
            emit(&r, cli.machine, |r| {
                let mut out = format!("mode: {}\nrange: [{}, {}]\n", r.mode, r.range.0, r.range.1);
                for row in &r.table2_rows {
                    out += &format!(
                        "row: b={} B={} target=({}, {})\n",
                        row.b, row.big_b, row.a_target, row.b_target
                    );
                }
                for h in &r.equal_pairs {
                    out += &format!(
                        "equal: (m,n)=({},{}) roots [{}]\n",
                        h.m,
                        h.n,
                        h.roots.join(", ")
                    );
                }
                for h in &r.rewrite_pairs {
                    out += &format!(
                        "rewrite-handled: (m,n)=({},{}) equal={}\n",
                        h.m, h.n, h.equal
                    );
                }
                out
            });
        }
        Command::Resolvent { a, b, self_check } => {
            let r = commands::cmd_resolvent(&parse(a)?, &parse(b)?, default_kind, *self_check)?;
            emit(&r, cli.machine, |r| {
                let mut out = format!(
                    "inputs: {} | {}\ncase: {}\nresolvent: {}\ncoeffs: {}\n",
                    r.inputs.0, r.inputs.1, r.case, r.total, r.total_coeffs
                );
                for (name, poly) in &r.parts {
                    out += &format!("{name}: {poly}\n");
                }
                if let Some(ok) = r.oracle_checked {
                    out += &format!("oracle-check: {}\n", if ok { "ok" } else { "MISMATCH" });
                }
                out
            });
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(commands::exit_code(&e));
    }
}
