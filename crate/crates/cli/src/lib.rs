//! Command-line front end.
//!
//! [`run`] does all the work on in-memory streams so it can be tested without
//! spawning a process; `main` only wires it to the real stdin/stdout.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use tamil_stem::eval::{self, gold_conflicts, render_gold, ReportFormat};
use tamil_stem::ruleset::{builtin_rules, generate_forms, parse_rules, validate_rules, Paradigm};
use tamil_stem::script::normalize_bytes;
use tamil_stem::{
    compare, evaluate, light_stem, strip_stem, GraphemeWord, LightStemmer, RuleSet, StemResult,
    StripStemmer,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFLICTS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Algo {
    #[default]
    Light,
    Strip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Table => ReportFormat::Table,
            Format::Csv => ReportFormat::Csv,
            Format::Json => ReportFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParadigmArg {
    Noun,
    Verb,
}

impl From<ParadigmArg> for Paradigm {
    fn from(p: ParadigmArg) -> Self {
        match p {
            ParadigmArg::Noun => Paradigm::Noun,
            ParadigmArg::Verb => Paradigm::Verb,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tamilstem",
    version,
    about = "Tamil light and suffix-stripping stemmers"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stem one word per stdin line, printing `word<TAB>stem`.
    Stem {
        #[arg(long, value_enum, default_value_t)]
        algo: Algo,
        /// Rule file to use instead of the built-in rules.
        #[arg(long)]
        rules: Option<PathBuf>,
        /// Print the applied rules as `#` lines after each word.
        #[arg(long)]
        trace: bool,
    },
    /// Score one stemmer against a gold file.
    Eval {
        #[arg(long, value_enum, default_value_t)]
        algo: Algo,
        #[arg(long)]
        rules: Option<PathBuf>,
        /// Gold file (`surface<TAB>stem`); read from stdin when omitted.
        #[arg(long)]
        gold: Option<PathBuf>,
    },
    /// Compare both stemmers over cumulative chunks of a gold file.
    Compare {
        #[arg(long)]
        gold: Option<PathBuf>,
        /// Ascending cumulative chunk sizes; defaults to the whole file.
        #[arg(long, value_delimiter = ',')]
        chunks: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Rules for both stemmers (built-ins when omitted).
        #[arg(long)]
        rules: Option<PathBuf>,
        /// Separate rules for the strip stemmer.
        #[arg(long)]
        strip_rules: Option<PathBuf>,
    },
    /// Check a rule file (the built-in rules when omitted).
    RulesValidate {
        #[arg(long)]
        rules: Option<PathBuf>,
    },
    /// Inflect one root per stdin line and print gold-format pairs.
    Generate {
        #[arg(long, value_enum)]
        paradigm: ParadigmArg,
    },
}

impl Command {
    /// Whether the command consumes stdin.
    pub fn reads_stdin(&self) -> bool {
        match self {
            Command::Stem { .. } | Command::Generate { .. } => true,
            Command::Eval { gold, .. } | Command::Compare { gold, .. } => gold.is_none(),
            Command::RulesValidate { .. } => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

/// Parses arguments (including the program name). Usage errors map to exit
/// 64; `--help` and `--version` succeed with the text on stdout.
pub fn parse_args<I, T>(args: I) -> Result<CliConfig, Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    CliConfig::try_parse_from(args).map_err(|e| {
        let text = e.render().to_string();
        if e.use_stderr() {
            Outcome::fail(EXIT_USAGE, text)
        } else {
            Outcome::ok(text)
        }
    })
}

fn read_file(path: &Path) -> Result<String, Outcome> {
    let bytes = std::fs::read(path)
        .map_err(|e| Outcome::fail(EXIT_NO_INPUT, format!("{}: {e}", path.display())))?;
    normalize_bytes(&bytes)
        .map_err(|e| Outcome::fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn decode_stdin(stdin: &[u8]) -> Result<String, Outcome> {
    normalize_bytes(stdin).map_err(|e| Outcome::fail(EXIT_DATA, format!("stdin: {e}")))
}

fn load_rules(path: Option<&Path>) -> Result<RuleSet, Outcome> {
    match path {
        None => Ok(builtin_rules().clone()),
        Some(p) => {
            let text = read_file(p)?;
            parse_rules(&text)
                .map_err(|e| Outcome::fail(EXIT_DATA, format!("{}: {e}", p.display())))
        }
    }
}

fn load_gold_from(path: Option<&Path>, stdin: &[u8]) -> Result<Vec<eval::GoldEntry>, Outcome> {
    let (text, name) = match path {
        Some(p) => (read_file(p)?, p.display().to_string()),
        None => (decode_stdin(stdin)?, "stdin".to_owned()),
    };
    eval::load_gold(&text).map_err(|e| Outcome::fail(EXIT_DATA, format!("{name}: {e}")))
}

fn stem_with(algo: Algo, word: &GraphemeWord, rules: &RuleSet) -> StemResult {
    match algo {
        Algo::Light => light_stem(word, rules),
        Algo::Strip => strip_stem(word, rules),
    }
}

fn warn_conflicts(gold: &[eval::GoldEntry], stderr: &mut String) {
    for c in gold_conflicts(gold) {
        let _ = writeln!(stderr, "warning: {c}");
    }
}

fn run_stem(
    algo: Algo,
    rules: Option<&Path>,
    trace: bool,
    stdin: &[u8],
) -> Result<Outcome, Outcome> {
    let rules = load_rules(rules)?;
    let input = decode_stdin(stdin)?;
    let mut out = String::new();
    for line in input.lines() {
        let word = GraphemeWord::new(line.trim());
        let result = stem_with(algo, &word, &rules);
        let _ = writeln!(out, "{}\t{}", word, result.stem);
        if trace {
            for step in &result.trace {
                let _ = writeln!(
                    out,
                    "#\t{}\t{}\t{}\t{}",
                    step.pass, step.rule, step.before, step.after
                );
            }
        }
    }
    Ok(Outcome::ok(out))
}

fn run_eval(
    algo: Algo,
    rules: Option<&Path>,
    gold: Option<&Path>,
    stdin: &[u8],
) -> Result<Outcome, Outcome> {
    let rules = load_rules(rules)?;
    let gold = load_gold_from(gold, stdin)?;
    let e = evaluate(|w| stem_with(algo, w, &rules).stem, &gold)
        .map_err(|e| Outcome::fail(EXIT_DATA, e.to_string()))?;
    let mut outcome = Outcome::ok(format!(
        "n_unique\t{}\nn_correct\t{}\naccuracy\t{}\n",
        e.n_unique,
        e.n_correct,
        e.accuracy()
    ));
    warn_conflicts(&gold, &mut outcome.stderr);
    Ok(outcome)
}

fn run_compare(
    gold: Option<&Path>,
    chunks: Option<&[usize]>,
    format: Format,
    rules: Option<&Path>,
    strip_rules: Option<&Path>,
    stdin: &[u8],
) -> Result<Outcome, Outcome> {
    let light_rules = load_rules(rules)?;
    let strip_rules = match strip_rules {
        Some(p) => load_rules(Some(p))?,
        None => light_rules.clone(),
    };
    let gold = load_gold_from(gold, stdin)?;
    let whole = [gold.len()];
    let chunks = chunks.unwrap_or(&whole);
    let report = compare(
        &gold,
        chunks,
        &StripStemmer::new(&strip_rules),
        &LightStemmer::new(&light_rules),
    )
    .map_err(|e| Outcome::fail(EXIT_DATA, e.to_string()))?;
    let mut outcome = Outcome::ok(eval::render(&report, format.into()));
    warn_conflicts(&gold, &mut outcome.stderr);
    Ok(outcome)
}

fn run_validate(rules: Option<&Path>) -> Result<Outcome, Outcome> {
    let (text, name) = match rules {
        Some(p) => (read_file(p)?, p.display().to_string()),
        None => (
            tamil_stem::ruleset::builtin_rules_text().to_owned(),
            "built-in rules".to_owned(),
        ),
    };
    let errors = validate_rules(&text);
    if errors.is_empty() {
        let n = parse_rules(&text).map(|r| r.len()).unwrap_or(0);
        return Ok(Outcome::ok(format!("{name}: ok, {n} rules\n")));
    }
    let mut out = String::new();
    for e in &errors {
        let _ = writeln!(out, "{name}: {e}");
    }
    let code = if errors.iter().all(|e| e.is_conflict()) {
        EXIT_CONFLICTS
    } else {
        EXIT_DATA
    };
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    })
}

fn run_generate(paradigm: ParadigmArg, stdin: &[u8]) -> Result<Outcome, Outcome> {
    let input = decode_stdin(stdin)?;
    let mut entries = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let root = line.split('#').next().unwrap_or("").trim();
        if root.is_empty() {
            continue;
        }
        let forms = generate_forms(&GraphemeWord::new(root), paradigm.into())
            .map_err(|e| Outcome::fail(EXIT_DATA, format!("stdin line {}: {e}", idx + 1)))?;
        entries.extend(forms.into_iter().map(|f| eval::GoldEntry {
            surface: f.surface,
            expected_stem: f.stem,
        }));
    }
    Ok(Outcome::ok(render_gold(&entries)))
}

/// Executes a parsed command against the given stdin bytes.
pub fn run(config: &CliConfig, stdin: &[u8]) -> Outcome {
    let result = match &config.command {
        Command::Stem { algo, rules, trace } => run_stem(*algo, rules.as_deref(), *trace, stdin),
        Command::Eval { algo, rules, gold } => {
            run_eval(*algo, rules.as_deref(), gold.as_deref(), stdin)
        }
        Command::Compare {
            gold,
            chunks,
            format,
            rules,
            strip_rules,
        } => run_compare(
            gold.as_deref(),
            chunks.as_deref(),
            *format,
            rules.as_deref(),
            strip_rules.as_deref(),
            stdin,
        ),
        Command::RulesValidate { rules } => run_validate(rules.as_deref()),
        Command::Generate { paradigm } => run_generate(*paradigm, stdin),
    };
    result.unwrap_or_else(|e| e)
}

/// Argument parsing plus [`run`].
pub fn run_args<I, T>(args: I, stdin: &[u8]) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(args) {
        Ok(config) => run(&config, stdin),
        Err(outcome) => outcome,
    }
}
