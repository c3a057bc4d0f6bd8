use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prc_core::decoder::{build_candidate_list, list_decode, DEFAULT_CANDIDATE_CAP};
use prc_core::io::{codeword_to_string, parse_codeword, parse_message, parse_spec};
use prc_core::oracle::{exhaustive_scan, DEFAULT_SEARCH_CAP};
use prc_core::sim::{corrupt, simulate, ChannelKind, ChannelModel, DecoderKind, SimMode};
use prc_core::tables::{emit_field_table, emit_tables};
use prc_core::{
    decode, interpolate_fixed_transform, Algorithm, CodeSpec, DecodeOptions, DecodeOutcome,
    ErasurePattern, Error, Recovery, Stopping,
};

#[derive(Parser)]
#[command(
    name = "prc",
    version,
    about = "Polynomial remainder codes: encode, decode, simulate"
)]
struct Cli {
    /// Print the elapsed wall-clock time to stderr.
    #[arg(long, global = true)]
    time: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a code spec and print its parameters.
    SpecCheck(SpecArg),
    /// Encode a message file into a codeword file.
    Encode(Io),
    /// Decode a received word.
    Decode(DecodeCmd),
    /// Add channel errors to a codeword.
    Corrupt(CorruptCmd),
    /// Run decoders against a simulated channel.
    Simulate(SimulateCmd),
    /// Exhaustive minimum-distance scan of a small code.
    Scan(SpecArg),
    /// Counts of monic irreducible polynomials.
    Tables(TablesCmd),
}

#[derive(Args)]
struct SpecArg {
    #[arg(long)]
    spec: PathBuf,
}

#[derive(Args)]
struct Io {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long = "in")]
    input: PathBuf,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Gcd1,
    Gcd2,
}

#[derive(Clone, Copy, ValueEnum)]
enum StopArg {
    Relative,
    Threshold,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecoverArg {
    Quotient,
    Ratio,
    Error,
}

#[derive(Args, Clone, Copy)]
struct DecoderFlags {
    #[arg(long, value_enum, default_value = "gcd1")]
    algorithm: AlgorithmArg,
    #[arg(long, value_enum, default_value = "relative")]
    stop: StopArg,
    #[arg(long, value_enum, default_value = "quotient")]
    recover: RecoverArg,
}

impl DecoderFlags {
    fn options(self) -> DecodeOptions {
        DecodeOptions {
            algorithm: match self.algorithm {
                AlgorithmArg::Gcd1 => Algorithm::PartialI,
                AlgorithmArg::Gcd2 => Algorithm::PartialII,
            },
            stopping: match self.stop {
                StopArg::Relative => Stopping::DegreeRelative,
                StopArg::Threshold => Stopping::Threshold,
            },
            recovery: match self.recover {
                RecoverArg::Quotient => Recovery::QuotientMod,
                RecoverArg::Ratio => Recovery::Ratio,
                RecoverArg::Error => Recovery::ErrorSubtract,
            },
        }
    }
}

#[derive(Args)]
struct DecodeCmd {
    #[command(flatten)]
    io: Io,
    #[command(flatten)]
    decoder: DecoderFlags,
    /// Treat these symbol indices as erased and interpolate from the rest.
    #[arg(long, value_delimiter = ',')]
    erase: Vec<usize>,
    /// Fall back to the precomputed locator candidate list on failure.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChannelArgs {
    /// Corrupt exactly these symbol indices.
    #[arg(long, value_delimiter = ',')]
    positions: Option<Vec<usize>>,
    /// Corrupt this many uniformly chosen symbols.
    #[arg(long)]
    hamming_weight: Option<usize>,
    /// Corrupt a uniformly chosen symbol set of this total modulus degree.
    #[arg(long)]
    degree_weight: Option<usize>,
}

impl ChannelArgs {
    fn kind(&self) -> ChannelKind {
        if let Some(p) = &self.positions {
            ChannelKind::FixedPositions(p.clone())
        } else if let Some(w) = self.hamming_weight {
            ChannelKind::RandomHammingWeight(w)
        } else {
            ChannelKind::RandomDegreeWeight(
                self.degree_weight.expect("clap enforces one channel flag"),
            )
        }
    }
}

#[derive(Args)]
struct CorruptCmd {
    #[command(flatten)]
    io: Io,
    #[command(flatten)]
    channel: ChannelArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Trial index mixed into the seed.
    #[arg(long, default_value_t = 0)]
    trial: u64,
}

#[derive(Args)]
struct SimulateCmd {
    #[arg(long)]
    spec: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    channel: ChannelArgs,
    #[command(flatten)]
    decoder: DecoderFlags,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Also run the list-extended decoder.
    #[arg(long)]
    list: bool,
    /// Enumerate every error value on each single position from --positions
    /// (or on the given set when --joint), over --messages random messages.
    #[arg(long)]
    exhaustive: bool,
    /// With --exhaustive: treat --positions as one joint support.
    #[arg(long, requires = "exhaustive")]
    joint: bool,
    #[arg(long, default_value_t = 100)]
    messages: u64,
}

#[derive(Args)]
struct TablesCmd {
    /// Field size.
    #[arg(long, default_value_t = 2)]
    q: u64,
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
    /// Side-by-side counts for several field sizes instead of one.
    #[arg(long, value_delimiter = ',')]
    fields: Vec<u64>,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure of a command: exit code 1 for decoding failures, 2 otherwise.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(2, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> Result<CodeSpec, Fail> {
    parse_spec(&read(path)?).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail(2, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn spec_summary(s: &CodeSpec) -> String {
    format!(
        "field: {}\nn: {}\nk: {}\ndegrees: {:?}\nN: {}\nK: {}\nt_H: {}\nt_D: {}\nmin_degree_distance: {}\nordered_degree: {}\nirreducible: {}\ntail_equal_degree: {}\nrate: {:.4}\n",
        s.field(),
        s.n(),
        s.k(),
        s.degrees(),
        s.big_n(),
        s.big_k(),
        s.t_h(),
        s.t_d(),
        s.min_degree_distance(),
        s.ordered_degree(),
        s.irreducible(),
        s.tail_equal_degree(),
        s.rate()
    )
}

fn run(cmd: Command) -> Result<(), Fail> {
    match cmd {
        Command::SpecCheck(a) => {
            let s = load_spec(&a.spec)?;
            print!("{}", spec_summary(&s));
            Ok(())
        }
        Command::Encode(io) => {
            let s = load_spec(&io.spec)?;
            let m = parse_message(&s, &read(&io.input)?)?;
            emit(&io.out, &codeword_to_string(&s, &s.encode(&m)?))
        }
        Command::Decode(d) => {
            let s = load_spec(&d.io.spec)?;
            let y = parse_codeword(&s, &read(&d.io.input)?)?;
            if !d.erase.is_empty() {
                let pattern = ErasurePattern::from_erased(&s, &d.erase)?;
                return match interpolate_fixed_transform(&s, &y, &pattern) {
                    Ok(a) => emit(&d.io.out, &format!("status: success\nmessage: {a}\n")),
                    Err(e @ (Error::NonDivisible | Error::MessageDegreeOverflow)) => {
                        emit(
                            &d.io.out,
                            &format!("status: failure\nfailure_reason: {e}\n"),
                        )?;
                        Err(Fail(1, "erasure decoding failed".into()))
                    }
                    Err(e) => Err(e.into()),
                };
            }
            let options = d.decoder.options();
            let out = if d.list {
                let candidates = build_candidate_list(&s, DEFAULT_CANDIDATE_CAP)?;
                list_decode(&s, &y, &candidates, &options)?
            } else {
                decode(&s, &y, &options)?
            };
            emit(&d.io.out, &format!("{out}\n"))?;
            match out {
                DecodeOutcome::Failure { .. } => Err(Fail(1, "decoding failed".into())),
                _ => Ok(()),
            }
        }
        Command::Corrupt(c) => {
            let s = load_spec(&c.io.spec)?;
            let word = parse_codeword(&s, &read(&c.io.input)?)?;
            let model = ChannelModel {
                kind: c.channel.kind(),
                master_seed: c.seed,
            };
            let (y, e) = corrupt(&s, &word, &model, c.trial)?;
            eprintln!("error positions: {:?}", e.support());
            emit(&c.io.out, &codeword_to_string(&s, &y))
        }
        Command::Simulate(c) => {
            let s = load_spec(&c.spec)?;
            let kind = c.channel.kind();
            let options = c.decoder.options();
            let mut decoders = vec![DecoderKind::Gcd(options)];
            if c.list {
                decoders.push(DecoderKind::List(options));
            }
            let mode = if c.exhaustive {
                let ChannelKind::FixedPositions(p) = &kind else {
                    return Err(Fail(2, "--exhaustive needs --positions".into()));
                };
                let supports = if c.joint {
                    vec![p.clone()]
                } else {
                    p.iter().map(|&i| vec![i]).collect()
                };
                SimMode::Exhaustive {
                    supports,
                    messages: c.messages,
                }
            } else {
                SimMode::MonteCarlo { trials: c.trials }
            };
            let model = ChannelModel {
                kind,
                master_seed: c.seed,
            };
            let report = simulate(&s, &model, &mode, &decoders)?;
            emit(&c.out, &report.to_string())
        }
        Command::Scan(a) => {
            let s = load_spec(&a.spec)?;
            let r = exhaustive_scan(&s, DEFAULT_SEARCH_CAP)?;
            println!("{r}");
            Ok(())
        }
        Command::Tables(t) => {
            let text = if t.fields.is_empty() {
                let table = emit_tables(t.q, t.max_degree);
                if t.csv {
                    table.to_csv()
                } else {
                    table.to_text()
                }
            } else {
                let table = emit_field_table(&t.fields, t.max_degree);
                if t.csv {
                    table.to_csv()
                } else {
                    table.to_text()
                }
            };
            emit(&t.out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = run(cli.command);
    if cli.time {
        eprintln!("elapsed: {:.3?}", started.elapsed());
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
