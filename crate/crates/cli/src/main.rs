use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use latpoly::decide::{decide_polynomial, decide_sugeno, decide_term, run_check, SetChoice};
use latpoly::harness::registry::{find, replay};
use latpoly::harness::report::{nest, render};
use latpoly::harness::theorems::{verify_theorem, Mode, SweepPlan};
use latpoly::io::{load_coefs, load_lattice, load_table};
use latpoly::poly::{
    alpha_from_oracle, alpha_star, beta_from_oracle, beta_star, eval_cnf, eval_dnf, eval_simplex,
    extension_mismatch, sugeno_eval, FuzzyMeasure,
};
use latpoly::props::Property;
use latpoly::{Error, Result};

type Fields = Vec<(String, String)>;

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Lattice polynomial functions on finite lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a coefficient map or fuzzy measure at a tuple.
    Eval {
        #[arg(long)]
        func: PathBuf,
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value_t = Form::Dnf)]
        form: Form,
        /// Lattice file for function files without a `lattice` field.
        #[arg(long)]
        lattice: Option<PathBuf>,
    },
    /// Canonical coefficients and uniqueness flags of a table.
    Canon {
        #[arg(long)]
        table: PathBuf,
    },
    /// Run one property checker.
    Check {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        prop: String,
        #[arg(long)]
        domain: Option<String>,
        #[arg(long, value_enum, default_value_t = SetArg::Range)]
        s: SetArg,
    },
    /// Decide membership in a class of functions.
    Decide {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = Class::Poly)]
        class: Class,
    },
    /// Sweep tables and check a theorem on each.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        arity: usize,
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        expect_counterexample: bool,
    },
    /// Replay a registered counterexample.
    Counterexample { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Dnf,
    Cnf,
    Simplex,
    Sugeno,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    Range,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Poly,
    Sugeno,
    Term,
}

fn field(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn eval(func: PathBuf, at: &str, form: Form, lattice: Option<PathBuf>) -> Result<(Fields, bool)> {
    let fallback = lattice.map(|p| load_lattice(&p).map(Arc::new)).transpose()?;
    let (l, coefs) = load_coefs(&func, fallback)?;
    coefs.validate(&l)?;
    let x = l.parse_tuple(at)?;
    let (name, v) = match form {
        Form::Dnf => ("dnf", eval_dnf(&l, &coefs, &x)?),
        Form::Cnf => ("cnf", eval_cnf(&l, &coefs, &x)?),
        Form::Simplex => ("simplex", eval_simplex(&l, &coefs, &x)?),
        Form::Sugeno => ("sugeno", sugeno_eval(&l, &FuzzyMeasure::new(&l, coefs)?, &x)?),
    };
    let out = vec![
        field("form", name),
        field("at", l.fmt_tuple(&x)),
        field("value", l.name(v)),
    ];
    Ok((out, true))
}

fn canon(table: PathBuf) -> Result<(Fields, bool)> {
    let f = load_table(&table)?;
    let l = f.lattice();
    let alpha = alpha_from_oracle(&f);
    let beta = beta_from_oracle(&f);
    let polynomial = extension_mismatch(&f).is_none();
    let mut out = vec![
        field("lattice", l),
        field("arity", f.arity()),
        field("polynomial", polynomial),
        field("alpha", alpha.display(l)),
    ];
    if l.is_chain() {
        out.push(field("alpha_star", alpha_star(l, &alpha)?.display(l)));
    } else {
        out.push(field("alpha_star", "n/a"));
    }
    out.push(field("beta", beta.display(l)));
    if l.is_chain() {
        out.push(field("beta_star", beta_star(l, &beta)?.display(l)));
    } else {
        out.push(field("beta_star", "n/a"));
    }
    let flag = |unique: Result<bool>| unique.map_or("n/a".to_string(), |u| u.to_string());
    out.push(field("unique_dnf", flag(latpoly::poly::is_unique_dnf(&f))));
    out.push(field("unique_cnf", flag(latpoly::poly::is_unique_cnf(&f))));
    Ok((out, true))
}

fn check(table: PathBuf, prop: &str, domain: Option<&str>, s: SetArg) -> Result<(Fields, bool)> {
    let f = load_table(&table)?;
    let property = Property::parse(prop, domain)?;
    let set = match s {
        SetArg::Range => SetChoice::Range,
        SetArg::All => SetChoice::All,
    };
    let report = run_check(&f, property, set)?;
    let mut out = vec![field("set", set.name())];
    out.extend(report.fields(f.lattice()));
    Ok((out, report.holds))
}

fn decide(table: PathBuf, class: Class) -> Result<(Fields, bool)> {
    let f = load_table(&table)?;
    let (name, d) = match class {
        Class::Poly => ("polynomial", decide_polynomial(&f)),
        Class::Sugeno => ("sugeno", decide_sugeno(&f)),
        Class::Term => ("term", decide_term(&f)),
    };
    let mut out = vec![field("class", name)];
    out.extend(d.fields(f.lattice()));
    Ok((out, d.verdict))
}

struct VerifyArgs {
    theorem: String,
    lattice: PathBuf,
    arity: usize,
    mode: String,
    samples: u64,
    seed: Option<u64>,
    expect_counterexample: bool,
}

fn verify(a: VerifyArgs) -> Result<(Fields, bool)> {
    let l = Arc::new(load_lattice(&a.lattice)?);
    let mode = Mode::parse(&a.mode)?;
    let plan = if mode.is_random() {
        let seed = a.seed.ok_or_else(|| Error::InvalidPlan {
            theorem: a.theorem.clone(),
            reason: "--seed is required for random modes".into(),
        })?;
        SweepPlan::random(l, a.arity, mode, a.samples, seed)
    } else {
        SweepPlan {
            mode,
            ..SweepPlan::exhaustive(l, a.arity)
        }
    };
    let run = verify_theorem(&a.theorem, &plan, a.expect_counterexample)?;
    Ok((run.fields(), run.passed()))
}

fn counterexample(name: &str) -> Result<(Fields, bool)> {
    let entry = find(name)?;
    let l = entry.table.lattice();
    let mut out = vec![
        field("name", entry.name),
        field("summary", entry.summary),
        field("lattice", l),
        field("arity", entry.table.arity()),
        field("values", entry.table.display_values()),
    ];
    let mut all_match = true;
    for (i, line) in replay(&entry)?.iter().enumerate() {
        let ok = line.matches(&entry.table);
        all_match &= ok;
        let mut fields = vec![
            field("check", line.expectation.label()),
            field("expected", line.expectation.expected),
            field("matches", ok),
        ];
        fields.extend(line.report.fields(l));
        out.extend(nest(&format!("profile.{i}"), fields));
    }
    out.push(field("profile_matches", all_match));
    Ok((out, all_match))
}

fn run(cli: Cli) -> Result<(Fields, bool)> {
    match cli.command {
        Command::Eval {
            func,
            at,
            form,
            lattice,
        } => eval(func, &at, form, lattice),
        Command::Canon { table } => canon(table),
        Command::Check {
            table,
            prop,
            domain,
            s,
        } => check(table, &prop, domain.as_deref(), s),
        Command::Decide { table, class } => decide(table, class),
        Command::Verify {
            theorem,
            lattice,
            arity,
            mode,
            samples,
            seed,
            expect_counterexample,
        } => verify(VerifyArgs {
            theorem,
            lattice,
            arity,
            mode,
            samples,
            seed,
            expect_counterexample,
        }),
        Command::Counterexample { name } => counterexample(&name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((fields, ok)) => {
            print!("{}", render(&fields));
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
