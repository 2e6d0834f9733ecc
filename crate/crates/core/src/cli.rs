//! Command-line front end: `encrypt`, `decrypt`, `verify` and `bench`.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |---:|---|
//! | 0 | success |
//! | 1 | `verify` found a mismatch |
//! | 2 | usage error (unknown flag, bad hex, wrong key length, conflicting flags) |
//! | 3 | input or key file not found |
//! | 4 | ciphertext length not a multiple of 8 |
//! | 5 | bad PKCS#7 padding |
//! | 6 | key parity failure under `--check-parity` |
//! | 7 | weak or semi-weak key under `--strict-keys` |
//! | 8 | plaintext length not a multiple of 8 without `--pkcs7` |
//! | 9 | other I/O error |
//! | 10 | a benchmark record failed |

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};

use crate::bench::{
    self, emit_report, run_sweep, speedup_table, Baseline, ReportFormat, SweepSpec, SweepVariable,
};
use crate::ecb::{
    decrypt_stream, encrypt_stream, Backend, DispatchConfig, Engine, PaddingMode,
    DEFAULT_CHUNK_BLOCKS, DEFAULT_WORK_GROUP,
};
use crate::error::Error;
use crate::kat;
use crate::tdes::{triple_schedule, TripleKey};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;
pub const EXIT_CIPHERTEXT_LENGTH: i32 = 4;
pub const EXIT_BAD_PADDING: i32 = 5;
pub const EXIT_PARITY: i32 = 6;
pub const EXIT_WEAK_KEY: i32 = 7;
pub const EXIT_INPUT_LENGTH: i32 = 8;
pub const EXIT_IO: i32 = 9;
pub const EXIT_BENCH_FAILED: i32 = 10;

/// Environment variable overriding the default worker count.
pub const WORKERS_ENV: &str = "TDES_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "tdes",
    version,
    about = "Parallel Triple-DES ECB encryption and benchmarks"
)]
struct Args {
    #[command(subcommand)]
    command: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Encrypt a file (or stdin with "-").
    Encrypt(CryptArgs),
    /// Decrypt a file (or stdin with "-").
    Decrypt(CryptArgs),
    /// Run the embedded known-answer and property checks.
    Verify,
    /// Run a benchmark sweep and write a report.
    Bench(BenchArgs),
}

#[derive(clap::Args, Debug)]
struct DispatchArgs {
    /// Blocks of 8 bytes per dispatch.
    #[arg(long, default_value_t = DEFAULT_CHUNK_BLOCKS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    chunk_blocks: u64,
    /// Blocks per worker task.
    #[arg(long, default_value_t = DEFAULT_WORK_GROUP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    work_group: u64,
    /// Worker threads (defaults to the number of hardware threads).
    #[arg(long, env = WORKERS_ENV, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// scalar-reference, threaded or noop.
    #[arg(long, default_value = "threaded")]
    backend: Backend,
}

impl DispatchArgs {
    fn config(&self) -> DispatchConfig {
        let mut cfg = DispatchConfig::default()
            .with_chunk_blocks(self.chunk_blocks as usize)
            .with_work_group(self.work_group as usize)
            .with_backend(self.backend);
        if let Some(w) = self.workers {
            cfg.workers = w as usize;
        }
        cfg
    }
}

#[derive(clap::Args, Debug)]
struct CryptArgs {
    /// Key as 48, 32 or 16 hex characters (three, two or one DES keys).
    #[arg(
        long,
        conflicts_with = "key_file",
        required_unless_present = "key_file"
    )]
    key: Option<String>,
    /// File holding the hex key, optionally newline-terminated.
    #[arg(long, value_name = "PATH")]
    key_file: Option<PathBuf>,
    /// Use PKCS#7 padding (default: none, input must be a multiple of 8 bytes).
    #[arg(long)]
    pkcs7: bool,
    /// Reject keys whose bytes do not have odd parity.
    #[arg(long)]
    check_parity: bool,
    /// Reject weak and semi-weak DES keys instead of warning.
    #[arg(long)]
    strict_keys: bool,
    #[command(flatten)]
    dispatch: DispatchArgs,
    /// Input path, or "-" for stdin.
    input: PathBuf,
    /// Output path, or "-" for stdout.
    output: PathBuf,
}

#[derive(clap::Args, Debug)]
struct BenchArgs {
    /// Which parameter to sweep: work-group, chunk-blocks or workers.
    #[arg(long, default_value = "workers")]
    sweep: SweepVariable,
    /// Comma-separated, strictly increasing values (default depends on the sweep).
    #[arg(long, value_delimiter = ',')]
    values: Vec<usize>,
    /// Payload size in MiB.
    #[arg(long, default_value_t = 64)]
    payload_mb: usize,
    #[arg(long, default_value_t = bench::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = bench::DEFAULT_REPETITIONS)]
    repetitions: usize,
    /// csv or markdown.
    #[arg(long, default_value = "csv")]
    format: ReportFormat,
    /// Report destination (default: stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    dispatch: DispatchArgs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KeySource {
    Hex(TripleKey),
    File(PathBuf),
}

/// `-` means a standard stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StreamPath {
    Std,
    File(PathBuf),
}

impl From<PathBuf> for StreamPath {
    fn from(p: PathBuf) -> Self {
        if p.as_os_str() == "-" {
            StreamPath::Std
        } else {
            StreamPath::File(p)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CryptCommand {
    pub key: KeySource,
    pub input: StreamPath,
    pub output: StreamPath,
    pub padding: PaddingMode,
    pub dispatch: DispatchConfig,
    pub check_parity: bool,
    pub strict_keys: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchCommand {
    pub spec: SweepSpec,
    pub format: ReportFormat,
    pub output: StreamPath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliCommand {
    Encrypt(CryptCommand),
    Decrypt(CryptCommand),
    Verify,
    Bench(BenchCommand),
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> clap::Error {
    Args::command().error(kind, msg)
}

fn crypt_command(a: CryptArgs) -> Result<CryptCommand, clap::Error> {
    let key = match (a.key, a.key_file) {
        (Some(hex), None) => KeySource::Hex(
            TripleKey::from_hex(&hex)
                .map_err(|e| usage_error(ErrorKind::InvalidValue, format!("--key: {e}")))?,
        ),
        (None, Some(path)) => KeySource::File(path),
        _ => {
            return Err(usage_error(
                ErrorKind::ArgumentConflict,
                "give exactly one of --key and --key-file",
            ))
        }
    };
    let dispatch = a.dispatch.config();
    dispatch
        .validate()
        .map_err(|e| usage_error(ErrorKind::InvalidValue, e))?;
    Ok(CryptCommand {
        key,
        input: a.input.into(),
        output: a.output.into(),
        padding: if a.pkcs7 {
            PaddingMode::Pkcs7
        } else {
            PaddingMode::None
        },
        dispatch,
        check_parity: a.check_parity,
        strict_keys: a.strict_keys,
    })
}

fn bench_command(a: BenchArgs) -> Result<BenchCommand, clap::Error> {
    let fixed = a.dispatch.config();
    let mut spec = match a.sweep {
        SweepVariable::WorkGroup => SweepSpec::work_group_sweep(fixed),
        SweepVariable::ChunkBlocks => SweepSpec::chunk_sweep(fixed),
        SweepVariable::Workers => SweepSpec::worker_sweep(fixed),
    };
    if !a.values.is_empty() {
        spec.values = a.values;
    }
    spec = spec
        .with_payload_bytes(a.payload_mb << 20)
        .with_repetitions(a.repetitions)
        .with_seed(a.seed);
    spec.validate()
        .map_err(|e| usage_error(ErrorKind::InvalidValue, e))?;
    Ok(BenchCommand {
        spec,
        format: a.format,
        output: a.output.map_or(StreamPath::Std, StreamPath::from),
    })
}

/// Parses and validates a full argument vector (program name first).
pub fn parse_args<I, T>(argv: I) -> Result<CliCommand, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    Ok(match args.command {
        Verb::Encrypt(a) => CliCommand::Encrypt(crypt_command(a)?),
        Verb::Decrypt(a) => CliCommand::Decrypt(crypt_command(a)?),
        Verb::Verify => CliCommand::Verify,
        Verb::Bench(a) => CliCommand::Bench(bench_command(a)?),
    })
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidHex(_) | Error::KeyLength(_) | Error::Config(_) => EXIT_USAGE,
        Error::Parity { .. } => EXIT_PARITY,
        Error::WeakKey { .. } => EXIT_WEAK_KEY,
        Error::InputLength(_) => EXIT_INPUT_LENGTH,
        Error::CiphertextLength(_) => EXIT_CIPHERTEXT_LENGTH,
        Error::BadPadding => EXIT_BAD_PADDING,
        Error::Io { source, .. } if source.kind() == io::ErrorKind::NotFound => EXIT_NOT_FOUND,
        Error::Io { .. } | Error::Report(_) => EXIT_IO,
    }
}

fn open_failed(what: &str, path: &std::path::Path, e: io::Error) -> (i32, String) {
    let code = if e.kind() == io::ErrorKind::NotFound {
        EXIT_NOT_FOUND
    } else {
        EXIT_IO
    };
    let msg = if code == EXIT_NOT_FOUND {
        format!("{what} not found: {}", path.display())
    } else {
        format!("cannot open {what} {}: {e}", path.display())
    };
    (code, msg)
}

fn load_key(source: &KeySource) -> Result<TripleKey, (i32, String)> {
    match source {
        KeySource::Hex(k) => Ok(*k),
        KeySource::File(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| open_failed("key file", path, e))?;
            TripleKey::from_hex(&text)
                .map_err(|e| (EXIT_USAGE, format!("key file {}: {e}", path.display())))
        }
    }
}

fn open_input(p: &StreamPath) -> Result<Box<dyn Read>, (i32, String)> {
    match p {
        StreamPath::Std => Ok(Box::new(io::stdin().lock())),
        StreamPath::File(path) => File::open(path)
            .map(|f| Box::new(f) as Box<dyn Read>)
            .map_err(|e| open_failed("input file", path, e)),
    }
}

fn open_output(p: &StreamPath) -> Result<Box<dyn Write>, (i32, String)> {
    match p {
        StreamPath::Std => Ok(Box::new(io::stdout().lock())),
        StreamPath::File(path) => File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| open_failed("output file", path, e)),
    }
}

fn run_crypt(
    cmd: &CryptCommand,
    encrypt: bool,
    stderr: &mut dyn Write,
) -> Result<(), (i32, String)> {
    let key = load_key(&cmd.key)?;
    let fail = |e: Error| (exit_code(&e), e.to_string());
    if cmd.check_parity {
        key.check_parity().map_err(fail)?;
    }
    if cmd.strict_keys {
        key.check_weak().map_err(fail)?;
    } else {
        for i in key.weak_components() {
            let _ = writeln!(
                stderr,
                "tdes: warning: key {i} is a weak or semi-weak DES key"
            );
        }
    }
    let ts = triple_schedule(&key);
    let engine = Engine::new(cmd.dispatch).map_err(fail)?;
    let input = open_input(&cmd.input)?;
    let output = open_output(&cmd.output)?;
    let (verb, report) = if encrypt {
        (
            "encrypt",
            encrypt_stream(input, output, &engine, &ts, cmd.padding),
        )
    } else {
        (
            "decrypt",
            decrypt_stream(input, output, &engine, &ts, cmd.padding),
        )
    };
    let report = report.map_err(fail)?;
    let _ = writeln!(stderr, "tdes: {verb}: {report}");
    Ok(())
}

fn run_verify(stdout: &mut dyn Write) -> Result<(), (i32, String)> {
    let report = kat::verify_all();
    for f in &report.failures {
        let _ = writeln!(stdout, "FAIL {f}");
    }
    let _ = writeln!(stdout, "verify: {report}");
    if report.passed() {
        Ok(())
    } else {
        Err((
            EXIT_VERIFY_FAILED,
            format!("{} known-answer checks failed", report.failures.len()),
        ))
    }
}

fn run_bench(cmd: &BenchCommand, stderr: &mut dyn Write) -> Result<(), (i32, String)> {
    let fail = |e: Error| (exit_code(&e), e.to_string());
    let records = run_sweep(&cmd.spec).map_err(fail)?;
    let bytes = emit_report(&records, cmd.format).map_err(fail)?;
    let mut out = open_output(&cmd.output)?;
    out.write_all(&bytes)
        .and_then(|_| out.flush())
        .map_err(|e| (EXIT_IO, format!("writing report: {e}")))?;
    if cmd.spec.variable == SweepVariable::Workers {
        if let Ok(table) = speedup_table(&records, Baseline::First) {
            let _ = write!(stderr, "{table}");
        }
    }
    let failed = records.iter().filter(|r| !r.is_ok()).count();
    if failed > 0 {
        return Err((
            EXIT_BENCH_FAILED,
            format!("{failed} benchmark record(s) failed"),
        ));
    }
    Ok(())
}

/// Executes a parsed command. Returns the process exit code.
pub fn run(cmd: &CliCommand) -> i32 {
    let mut stderr = io::stderr();
    let result = match cmd {
        CliCommand::Encrypt(c) => run_crypt(c, true, &mut stderr),
        CliCommand::Decrypt(c) => run_crypt(c, false, &mut stderr),
        CliCommand::Verify => run_verify(&mut io::stdout()),
        CliCommand::Bench(c) => run_bench(c, &mut stderr),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "tdes: error: {msg}");
            code
        }
    }
}

/// Parses `argv`, runs the command and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cmd) => run(&cmd),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tdes::KeyingOption;

    const KEY48: &str = "0123456789ABCDEF23456789ABCDEF01456789ABCDEF0123";

    fn parse(args: &[&str]) -> Result<CliCommand, clap::Error> {
        parse_args(std::iter::once("tdes").chain(args.iter().copied()))
    }

    fn crypt(cmd: CliCommand) -> CryptCommand {
        match cmd {
            CliCommand::Encrypt(c) | CliCommand::Decrypt(c) => c,
            other => panic!("not a crypt command: {other:?}"),
        }
    }

    #[test]
    fn encrypt_with_three_key_hex() {
        let c = crypt(parse(&["encrypt", "--key", KEY48, "in.bin", "out.bin"]).unwrap());
        match c.key {
            KeySource::Hex(k) => assert_eq!(k.option, KeyingOption::Option1),
            other => panic!("{other:?}"),
        }
        assert_eq!(c.input, StreamPath::File("in.bin".into()));
        assert_eq!(c.padding, PaddingMode::None);
        assert_eq!(c.dispatch.chunk_blocks, 131_072);
        assert_eq!(c.dispatch.work_group, 256);
    }

    #[test]
    fn single_key_inferred_from_length() {
        let c = crypt(parse(&["encrypt", "--key", &KEY48[..16], "-", "-"]).unwrap());
        assert!(matches!(c.key, KeySource::Hex(k) if k.option == KeyingOption::Option3));
        assert_eq!(c.input, StreamPath::Std);
        assert_eq!(c.output, StreamPath::Std);
    }

    #[test]
    fn bad_hex_is_a_usage_error() {
        let e = parse(&["encrypt", "--key", "zz0123456789ABCD", "a", "b"]).unwrap_err();
        assert_eq!(e.kind(), ErrorKind::InvalidValue);
        assert!(e.to_string().contains("invalid hex"));
        assert_eq!(e.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn rejections() {
        // wrong key length
        assert!(parse(&["encrypt", "--key", "0123456789", "a", "b"]).is_err());
        // unknown flag
        assert_eq!(
            parse(&["encrypt", "--key", KEY48, "--fast", "a", "b"])
                .unwrap_err()
                .kind(),
            ErrorKind::UnknownArgument
        );
        // conflicting key sources
        assert_eq!(
            parse(&["encrypt", "--key", KEY48, "--key-file", "k", "a", "b"])
                .unwrap_err()
                .kind(),
            ErrorKind::ArgumentConflict
        );
        // key required for encrypt/decrypt
        assert!(parse(&["decrypt", "a", "b"]).is_err());
        // zero sizes
        assert!(parse(&["encrypt", "--key", KEY48, "--work-group", "0", "a", "b"]).is_err());
        // bench takes no key
        assert!(parse(&["bench", "--key", KEY48]).is_err());
        // non-increasing sweep values
        assert!(parse(&["bench", "--values", "4,2"]).is_err());
        assert!(parse(&["bench", "--format", "xml"]).is_err());
    }

    #[test]
    fn verify_and_bench_need_no_key() {
        assert_eq!(parse(&["verify"]).unwrap(), CliCommand::Verify);
        match parse(&[
            "bench",
            "--sweep",
            "chunk-blocks",
            "--values",
            "128,1024",
            "--payload-mb",
            "1",
        ])
        .unwrap()
        {
            CliCommand::Bench(b) => {
                assert_eq!(b.spec.variable, SweepVariable::ChunkBlocks);
                assert_eq!(b.spec.values, vec![128, 1024]);
                assert_eq!(b.spec.payload_bytes, 1 << 20);
                assert_eq!(b.format, ReportFormat::Csv);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dispatch_overrides() {
        let c = crypt(
            parse(&[
                "decrypt",
                "--key",
                KEY48,
                "--pkcs7",
                "--chunk-blocks",
                "64",
                "--work-group",
                "8",
                "--workers",
                "3",
                "--backend",
                "scalar-reference",
                "--check-parity",
                "--strict-keys",
                "x",
                "y",
            ])
            .unwrap(),
        );
        assert_eq!(c.padding, PaddingMode::Pkcs7);
        assert_eq!(
            c.dispatch,
            DispatchConfig {
                chunk_blocks: 64,
                work_group: 8,
                workers: 3,
                backend: Backend::ScalarReference
            }
        );
        assert!(c.check_parity && c.strict_keys);
    }

    #[test]
    fn error_classes_have_distinct_codes() {
        let codes = [
            exit_code(&Error::CiphertextLength(9)),
            exit_code(&Error::BadPadding),
            exit_code(&Error::Parity { key: 1, byte: 0 }),
            exit_code(&Error::WeakKey { key: 1 }),
            exit_code(&Error::InputLength(3)),
            exit_code(&Error::Io {
                offset: 0,
                source: io::Error::from(io::ErrorKind::NotFound),
            }),
            exit_code(&Error::Io {
                offset: 0,
                source: io::Error::other("x"),
            }),
            EXIT_USAGE,
            EXIT_VERIFY_FAILED,
            EXIT_BENCH_FAILED,
        ];
        let mut sorted = codes.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), codes.len());
        assert!(!codes.contains(&EXIT_OK));
    }
}
