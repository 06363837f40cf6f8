//! Batch command-line front end.
//!
//! Exit codes: 0 on success, 1 when `decode` could not decode some line,
//! 2 on any configuration, parse or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::codes::Code;
use crate::decoder::{decode_word, Algorithm, DecodeResult};
use crate::harness::{inject_errors, run_trials, ChannelSpec, CSV_HEADER};
use crate::specfile::{format_word, parse_code_spec, parse_words};

#[derive(Parser, Debug)]
#[command(name = "alternant", about = "Encode, corrupt and decode RS/GRS/alternant/BCH words", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print code parameters.
    Info(Common),
    /// Encode message lines into codeword lines.
    Encode(Common),
    /// Add a fixed number of symbol errors to each word.
    Corrupt(Common),
    /// Decode received words back to messages.
    Decode(Common),
    /// Run seeded channel trials and print a CSV report.
    Bench(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Code-spec file.
    #[arg(long)]
    spec: PathBuf,
    /// Input word file.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decoding algorithm: d (leading-term cancellation) or e (Euclidean).
    #[arg(long, default_value = "d")]
    algorithm: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of symbol errors per word.
    #[arg(long, default_value_t = 0)]
    errors: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
}

impl Common {
    fn load_code(&self) -> Result<Code> {
        let text = fs::read_to_string(&self.spec).with_context(|| format!("reading spec {}", self.spec.display()))?;
        parse_code_spec(&text).with_context(|| format!("in spec {}", self.spec.display()))
    }

    fn read_input(&self) -> Result<String> {
        let Some(path) = &self.input else { bail!("--in is required") };
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }

    fn write_output(&self, text: &str, stdout: &mut dyn Write) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => stdout.write_all(text.as_bytes()).context("writing to standard output"),
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            2
        }
    }
}

fn dispatch(command: &Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Info(args) => info(args, stdout),
        Command::Encode(args) => encode(args, stdout),
        Command::Corrupt(args) => corrupt(args, stdout),
        Command::Decode(args) => decode(args, stdout),
        Command::Bench(args) => bench(args, stdout),
    }
}

fn info(args: &Common, stdout: &mut dyn Write) -> Result<i32> {
    let code = args.load_code()?;
    let mut out = String::new();
    out += &format!("type: {}\n", code.kind());
    out += &format!("field: {}\n", code.field());
    out += &format!("n: {}\n", code.n());
    out += &format!("k: {}\n", code.k());
    out += &format!("designed_distance: {}\n", code.designed_distance());
    out += &format!("radius: {}\n", code.radius());
    if let Some(alt) = code.alt() {
        out += &format!("subfield_order: {}\n", alt.subfield_order());
        out += &format!("dimension: {}\n", alt.dimension());
    }
    if let Code::Bch(b) = &code {
        out += &format!("delta: {}\nb: {}\nbeta: {}\n", b.delta(), b.offset(), b.beta());
    }
    args.write_output(&out, stdout)?;
    Ok(0)
}

fn encode(args: &Common, stdout: &mut dyn Write) -> Result<i32> {
    let code = args.load_code()?;
    let messages = parse_words(&args.read_input()?, code.field(), code.dimension())?;
    let mut out = String::new();
    for (line, msg) in messages {
        let word = code.encode(&msg).with_context(|| format!("line {line}"))?;
        out += &format_word(&word);
        out.push('\n');
    }
    args.write_output(&out, stdout)?;
    Ok(0)
}

fn corrupt(args: &Common, stdout: &mut dyn Write) -> Result<i32> {
    let code = args.load_code()?;
    let words = parse_words(&args.read_input()?, code.field(), code.n())?;
    let channel = ChannelSpec { weight: args.errors, seed: args.seed };
    let mut out = String::new();
    for (trial, (_, word)) in words.iter().enumerate() {
        let (r, _) = inject_errors(&code, word, &channel, trial as u64)?;
        out += &format_word(&r);
        out.push('\n');
    }
    args.write_output(&out, stdout)?;
    Ok(0)
}

fn decode(args: &Common, stdout: &mut dyn Write) -> Result<i32> {
    let code = args.load_code()?;
    let words = parse_words(&args.read_input()?, code.field(), code.n())?;
    let mut out = String::new();
    let mut failed = false;
    for (line, r) in words {
        match decode_word(&code, &r, args.algorithm, &mut ()).with_context(|| format!("line {line}"))? {
            DecodeResult::Success(d) => {
                let msg = code.message_of(&d.codeword).context("decoded word is not a codeword")?;
                out += &format_word(&msg);
            }
            DecodeResult::Failure(reason) => {
                failed = true;
                out += &format!("FAIL {reason}");
            }
        }
        out.push('\n');
    }
    args.write_output(&out, stdout)?;
    Ok(if failed { 1 } else { 0 })
}

fn bench(args: &Common, stdout: &mut dyn Write) -> Result<i32> {
    let code = args.load_code()?;
    let channel = ChannelSpec { weight: args.errors, seed: args.seed };
    let report = run_trials(&code, &channel, args.trials, args.algorithm)?;
    args.write_output(&format!("{CSV_HEADER}\n{}\n", report.csv_row()), stdout)?;
    Ok(0)
}
