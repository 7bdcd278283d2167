use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pathavoid::dispatch::{self, Method};
use pathavoid::golden;
use pathavoid::render::{self, TableMeta};
use pathavoid::verify::{self, Status, VerifyConfig};
use pathavoid::{parse_pattern, CountTable, Pattern, PatternClass, PatternProfile};

#[derive(Parser, Debug)]
#[command(
    version,
    about = "Exact counts of lattice paths avoiding a step pattern"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show a pattern's structure, class, and applicable methods
    Analyze {
        #[arg(long)]
        pattern: String,
    },
    /// Count paths to (n, m) weakly above y = x - l avoiding a pattern
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Run every applicable method and fail on disagreement
        #[arg(long)]
        verify: bool,
    },
    /// Emit the table of counts for 0 <= n <= nmax, 0 <= m <= mmax
    Table {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        mmax: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// Continue r^a tables below the boundary
        #[arg(long)]
        extend: bool,
        #[arg(long, value_enum, default_value_t = Format::Grid)]
        format: Format,
    },
    /// Cross-check all counting methods over every short pattern
    Verify {
        /// Longest pattern enumerated
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Rebuild the reference tables and diff them against the embedded copies
    ReproducePaper {
        #[arg(long, value_enum, default_value_t = Format::Grid)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Oracle,
    Recurrence,
    Formula,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Formula => Method::Formula,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Grid,
    Csv,
    Json,
}

/// Exit status contract: 1 for usage and input errors, 2 when a
/// verification or reproduction check fails.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<pathavoid::Error> for Failure {
    fn from(e: pathavoid::Error) -> Failure {
        match e {
            pathavoid::Error::Mismatch { .. } => Failure::Verification(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Analyze { pattern } => analyze(&parse_pattern(&pattern)?),
        Command::Count {
            pattern,
            n,
            m,
            l,
            method,
            verify,
        } => count(&parse_pattern(&pattern)?, n, m, l, method.into(), verify),
        Command::Table {
            pattern,
            nmax,
            mmax,
            l,
            extend,
            format,
        } => table(&parse_pattern(&pattern)?, nmax, mmax, l, extend, format),
        Command::Verify { max_len, nmax } => run_verify(max_len, nmax),
        Command::ReproducePaper { format } => reproduce(format),
    }
}

fn join(patterns: &[Pattern]) -> String {
    if patterns.is_empty() {
        return "(none)".into();
    }
    patterns
        .iter()
        .map(Pattern::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn method_summary(profile: &PatternProfile) -> Vec<String> {
    let mut lines = Vec::new();
    match &profile.class {
        PatternClass::PureRight(a) if *a >= 2 => {
            lines.push("formula     boundary points m = n - l".to_string());
            lines.push("recurrence  any l, with --extend below the boundary".to_string());
        }
        PatternClass::PureUp(_) | PatternClass::Length4Special(_) => {
            lines.push("formula     l = 0, m >= n".to_string());
        }
        PatternClass::BifixFreeDepth0 | PatternClass::BifixIndex1Depth0 => {
            lines.push("formula     l = 0, m >= n".to_string());
            lines.push("recurrence  l = 0".to_string());
        }
        PatternClass::DepthPositive { .. } => {
            if dispatch::formula_gap(profile, 0, 1, 0).is_none() {
                lines.push("formula     l = 0, m >= n + 1".to_string());
            }
            lines.push("recurrence  l = 0".to_string());
        }
        _ => {}
    }
    lines.push("oracle      always".to_string());
    lines
}

fn analyze(p: &Pattern) -> Result<(), Failure> {
    let profile = p.classify();
    println!("pattern      {p}");
    println!("length       {}", p.len());
    println!("dimensions   a={} c={}", profile.a, profile.c);
    println!("depth        {}", profile.depth);
    println!("bifixes      {}", join(&profile.bifixes));
    println!("bifix index  {}", profile.bifix_index);
    if let (Some(b), Some(d)) = (profile.b, profile.d) {
        println!("b, d         b={b} d={d}");
    }
    println!("reverse      {}", profile.reverse);
    println!("class        {}", profile.class);
    for (i, line) in method_summary(&profile).iter().enumerate() {
        let label = if i == 0 { "methods" } else { "" };
        println!("{label:<12} {line}");
    }
    Ok(())
}

fn count(
    p: &Pattern,
    n: usize,
    m: usize,
    l: usize,
    method: Method,
    verify: bool,
) -> Result<(), Failure> {
    if verify {
        let checked = dispatch::count_verified(p, n, m, l)?;
        println!("{}", checked.value);
        let methods: Vec<_> = checked
            .by_method
            .iter()
            .map(|(method, _)| method.as_str())
            .collect();
        eprintln!("agreed: {}", methods.join(", "));
    } else {
        println!("{}", dispatch::count(p, n, m, l, method)?);
    }
    Ok(())
}

fn emit(meta: &TableMeta, table: &CountTable, format: Format, source: &str) -> Result<(), Failure> {
    let text = match format {
        Format::Grid => {
            println!("# {} {} l={} ({source})", meta.pattern, meta.class, meta.l);
            render::render_grid(table)
        }
        Format::Csv => render::render_csv(meta, table)?,
        Format::Json => render::render_json(meta, table)? + "\n",
    };
    print!("{text}");
    Ok(())
}

fn table(
    p: &Pattern,
    n_max: usize,
    m_max: usize,
    l: usize,
    extend: bool,
    format: Format,
) -> Result<(), Failure> {
    let (table, source) = dispatch::build_table(p, n_max, m_max, l, extend)?;
    let meta = TableMeta {
        pattern: p.to_string(),
        class: p.classify().class.to_string(),
        l,
    };
    emit(&meta, &table, format, source.as_str())
}

fn run_verify(max_len: usize, n_max: usize) -> Result<(), Failure> {
    let reports = verify::run(&VerifyConfig {
        max_pattern_len: max_len,
        n_max,
    });
    for report in &reports {
        println!("{report}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let known = reports
        .iter()
        .filter(|r| matches!(r.status, Status::KnownIssue(_)))
        .count();
    println!(
        "{} properties, {failed} failed, {known} known issues",
        reports.len()
    );
    if failed > 0 {
        return Err(Failure::Verification(format!("{failed} properties failed")));
    }
    Ok(())
}

fn reproduce(format: Format) -> Result<(), Failure> {
    let mut differing = Vec::new();
    for golden in golden::golden_tables() {
        let (table, source) = dispatch::build_table(
            &golden.pattern,
            golden.n_max,
            golden.m_max,
            golden.l,
            golden.extend,
        )?;
        println!("## {}", golden.name);
        let meta = TableMeta {
            pattern: golden.pattern.to_string(),
            class: golden.pattern.classify().class.to_string(),
            l: golden.l,
        };
        emit(&meta, &table, format, source.as_str())?;
        let diff = golden.diff(&table);
        for d in &diff {
            let actual = d
                .actual
                .as_ref()
                .map_or("missing".to_string(), |v| v.to_string());
            println!(
                "diff ({}, {}): expected {}, got {actual}",
                d.n, d.m, d.expected
            );
        }
        println!(
            "## {}: {} reference cells, {} differ",
            golden.name,
            golden.cells.len(),
            diff.len()
        );
        if !diff.is_empty() {
            differing.push(golden.name.clone());
        }
    }
    if differing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "tables differ: {}",
            differing.join(", ")
        )))
    }
}
