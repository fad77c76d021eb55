use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chaotic_prng::analysis::{
    autocorrelation, cross_correlation, detect_cycle, detect_cycle_from, flatness_threshold,
    ideal_period, phase_distance, power_spectrum, strategy_prefix, AnalysisError,
    DEFAULT_CYCLE_BUDGET, DEFAULT_PREFIX_K,
};
use chaotic_prng::battery::{run_battery, BatteryOptions, Strictness};
use chaotic_prng::cipher::{chi_square_uniformity, histogram, xor_cipher};
use chaotic_prng::{generate_bits, Generator, SeedSpec};
use chaotic_prng_cli::bitstream::{write_bits, Format};
use chaotic_prng_cli::config_file::render_config;
use chaotic_prng_cli::pgm::{read_pgm, write_pgm};
use chaotic_prng_cli::report;
use chaotic_prng_cli::seed::GeneratorArgs;
use chaotic_prng_cli::transcript::Transcript;
use chaotic_prng_cli::CliError;
use clap::{Args, Parser, Subcommand};

/// Pseudo-random bits from discrete chaotic iterations driven by the logistic
/// map, with a randomness test battery, orbit analysis and image encryption.
///
/// Exit status: 0 success, 1 statistical failure, 2 usage error, 3 runtime
/// error (including dead or degenerate seeds).
#[derive(Parser)]
#[command(name = "chaotic-prng", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a bitstream.
    Gen(GenArgs),
    /// Run the statistical battery over several sequences.
    Test(TestArgs),
    /// Correlation, power spectrum and phase-distance analysis.
    Analyze(AnalyzeArgs),
    /// Transient and period of the block-level orbit.
    Cycle(CycleArgs),
    /// XOR a PGM image with the keystream.
    Encrypt(CipherArgs),
    /// Same operation as encrypt.
    Decrypt(CipherArgs),
    /// Pixel histogram and its chi-square distance from uniform.
    Histogram(HistogramArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Force the strategy and gap sequences from a transcript file.
    #[arg(long, value_name = "FILE")]
    transcript: Option<PathBuf>,
    /// Number of bits.
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    /// ASCII line width; 0 disables wrapping.
    #[arg(long, default_value_t = 64)]
    wrap: usize,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TestArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Number of sequences; sequence i uses seed t + i.
    #[arg(long, default_value_t = 100)]
    sequences: usize,
    /// Bits per sequence.
    #[arg(long, default_value_t = 1_000_000)]
    length: usize,
    /// Allow inputs shorter than the NIST minimum sizes.
    #[arg(long)]
    relaxed: bool,
    /// Block frequency block length.
    #[arg(long, default_value_t = chaotic_prng::battery::DEFAULT_BLOCK_LEN)]
    block_len: usize,
    /// Serial test pattern length.
    #[arg(long, default_value_t = chaotic_prng::battery::DEFAULT_SERIAL_M)]
    serial_m: usize,
    /// Approximate entropy pattern length.
    #[arg(long, default_value_t = chaotic_prng::battery::DEFAULT_APEN_M)]
    apen_m: usize,
    /// Write per-sequence p-values and summaries as CSV.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Bits analyzed.
    #[arg(long, default_value_t = 100_000)]
    length: usize,
    /// Largest correlation lag.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    max_lag: u64,
    /// Also search the orbit for a cycle, spending at most this many block
    /// steps.
    #[arg(long)]
    budget: Option<u64>,
    /// Strategy prefix length of the phase distance.
    #[arg(long, default_value_t = DEFAULT_PREFIX_K)]
    prefix_k: usize,
    /// Path prefix of the CSV outputs `.autocorr.csv`, `.xcorr.csv` and
    /// `.spectrum.csv`.
    #[arg(long, value_name = "PREFIX")]
    out: PathBuf,
}

#[derive(Args)]
struct CycleArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    /// Force the strategy and gap sequences from a transcript file; use
    /// `repeat = true` for a periodic driver.
    #[arg(long, value_name = "FILE")]
    transcript: Option<PathBuf>,
    /// Maximum number of block steps.
    #[arg(long, default_value_t = DEFAULT_CYCLE_BUDGET)]
    budget: u64,
    /// Also write the report to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CipherArgs {
    #[command(flatten)]
    generator: GeneratorArgs,
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(Args)]
struct HistogramArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Write `value,count` rows.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Test(a) => test(a),
        Command::Analyze(a) => analyze(a),
        Command::Cycle(a) => cycle(a),
        Command::Encrypt(a) | Command::Decrypt(a) => encrypt(a),
        Command::Histogram(a) => histogram_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::runtime(format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn load_transcript(path: &Path) -> Result<Transcript, CliError> {
    let text = String::from_utf8(read(path)?)
        .map_err(|_| CliError::usage(format!("{}: not UTF-8 text", path.display())))?;
    Transcript::parse(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// The transcript, checked against an explicitly chosen scheme.
fn forced(generator: &GeneratorArgs, path: &Path) -> Result<Transcript, CliError> {
    let transcript = load_transcript(path)?;
    if generator.scheme.is_some() || generator.n_cells.is_some() || generator.m_set.is_some() {
        let scheme = generator.scheme()?;
        transcript
            .check_against(scheme.n_cells, &scheme.gaps)
            .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(transcript)
}

fn gen(a: GenArgs) -> Result<(), CliError> {
    let bits = match &a.transcript {
        Some(path) => {
            let transcript = forced(&a.generator, path)?;
            eprintln!(
                "forced transcript: x0 = {}, {} strategy values, {} gaps, repeat = {}",
                transcript.x0,
                transcript.strategy.len(),
                transcript.gaps.len(),
                transcript.repeat
            );
            Generator::with_driver(
                transcript.x0,
                transcript.driver(),
                !a.generator.no_emit_initial,
            )
            .bits(a.count)?
        }
        None => {
            let (scheme, config) = a.generator.config()?;
            eprintln!("# {scheme}");
            eprint!("{}", render_config(&config));
            generate_bits(&config, a.count)?
        }
    };
    match &a.out {
        Some(path) => write_bits(create(path)?, &bits, a.format, a.wrap)?,
        None => write_bits(io::stdout().lock(), &bits, a.format, a.wrap)?,
    }
    Ok(())
}

fn test(a: TestArgs) -> Result<(), CliError> {
    let (scheme, config) = a.generator.config()?;
    if !matches!(config.seed(), SeedSpec::TimeDerived { .. }) {
        return Err(CliError::usage(
            "the battery needs a master seed t (--seed or --seed-from-time)",
        ));
    }
    let opts = BatteryOptions {
        strictness: if a.relaxed {
            Strictness::Relaxed
        } else {
            Strictness::Strict
        },
        block_len: a.block_len,
        serial_m: a.serial_m,
        apen_m: a.apen_m,
        ..BatteryOptions::default()
    };
    println!("{scheme}");
    let battery = run_battery(&config, a.sequences, a.length, &opts)?;
    report::battery_text(io::stdout().lock(), &battery)?;
    if let Some(path) = &a.csv {
        report::battery_csv(create(path)?, &battery)?;
    }
    if battery.all_passed() {
        Ok(())
    } else {
        let failed: Vec<_> = battery.failures().map(|s| s.test).collect();
        Err(CliError::Statistical(format!(
            "P_T below threshold: {}",
            failed.join(", ")
        )))
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn analyze(a: AnalyzeArgs) -> Result<(), CliError> {
    let (scheme, config) = a.generator.config()?;
    let max_lag = usize::try_from(a.max_lag).map_err(CliError::usage)?;
    let bits = generate_bits(&config, a.length)?;
    let bound = |c: f64| c / (a.length as f64).sqrt();
    let mut out = io::stdout().lock();
    writeln!(out, "{scheme}, {} bits", a.length)?;

    let auto = autocorrelation(&bits, max_lag)?;
    report::correlation_csv(create(&with_suffix(&a.out, ".autocorr.csv"))?, &auto)?;
    let within = auto.values[1..]
        .iter()
        .filter(|r| r.abs() <= bound(4.0))
        .count();
    let worst = auto.values[1..].iter().fold(0.0f64, |m, r| m.max(r.abs()));
    writeln!(out, "autocorrelation: r(0) = {}", auto.values[0])?;
    writeln!(
        out,
        "  lags 1..={max_lag}: {within} within 4/sqrt(L) = {:.5}, max |r| = {worst:.5}",
        bound(4.0)
    )?;

    // partner stream from the adjacent seed t + 1
    let partner = match *config.seed() {
        SeedSpec::TimeDerived { t } => Some(config.with_seed(SeedSpec::TimeDerived { t: t + 1 })?),
        SeedSpec::Explicit { .. } => None,
    };
    match &partner {
        Some(partner) => {
            let other = generate_bits(partner, a.length)?;
            let cross = cross_correlation(&bits, &other, max_lag)?;
            report::correlation_csv(create(&with_suffix(&a.out, ".xcorr.csv"))?, &cross)?;
            let worst = cross.values.iter().fold(0.0f64, |m, r| m.max(r.abs()));
            writeln!(
                out,
                "cross-correlation with seed t + 1: max |r| = {worst:.5} (5/sqrt(L) = {:.5})",
                bound(5.0)
            )?;
        }
        None => writeln!(
            out,
            "cross-correlation skipped: needs a seed t to pick the adjacent seed"
        )?,
    }

    let spectrum = power_spectrum(&bits)?;
    report::spectrum_csv(create(&with_suffix(&a.out, ".spectrum.csv"))?, &spectrum)?;
    writeln!(
        out,
        "power spectrum: energy / L = {:.9}, flatness = {:.3} (threshold {:.3})",
        spectrum.total_energy / a.length as f64,
        spectrum.flatness,
        flatness_threshold(a.length)
    )?;

    if let Some(partner) = &partner {
        let (x_a, _) = config.initial_values();
        let (x_b, _) = partner.initial_values();
        let d = phase_distance(
            &strategy_prefix(&config, a.prefix_k)?,
            &x_a,
            &strategy_prefix(partner, a.prefix_k)?,
            &x_b,
        )?;
        writeln!(
            out,
            "phase distance to seed t + 1: d_e = {}, d_s = {:.12} (tail <= {:.1e}), total = {:.12}",
            d.cells,
            d.strategy,
            d.tail_bound,
            d.total()
        )?;
    }

    if let Some(budget) = a.budget {
        match detect_cycle(&config, budget) {
            Ok(r) => report::cycle_text(&mut out, &r)?,
            Err(AnalysisError::BudgetExceeded { budget }) => {
                writeln!(out, "no cycle within {budget} block steps")?
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn cycle(a: CycleArgs) -> Result<(), CliError> {
    let mut text = Vec::new();
    match &a.transcript {
        Some(path) => {
            let transcript = forced(&a.generator, path)?;
            if !transcript.repeat {
                return Err(CliError::usage(
                    "cycle detection needs a repeating transcript (repeat = true)",
                ));
            }
            let r = detect_cycle_from(transcript.x0, transcript.driver(), a.budget)?;
            report::cycle_text(&mut text, &r)?;
            let ideal = ideal_period(
                transcript.gaps.len() as u64,
                transcript.strategy.len() as u64,
            );
            writeln!(text, "ideal_period: {ideal}")?;
            if r.orbit_length <= 256 {
                let mut g = Generator::with_driver(transcript.x0, transcript.driver(), true);
                let states = (0..r.orbit_length)
                    .map(|_| g.next_block().map(|x| x.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                writeln!(text, "states: {}", states.join(" "))?;
            }
        }
        None => {
            let (scheme, config) = a.generator.config()?;
            writeln!(text, "{scheme}")?;
            report::cycle_text(&mut text, &detect_cycle(&config, a.budget)?)?;
        }
    }
    io::stdout().write_all(&text)?;
    if let Some(path) = &a.out {
        let mut f = create(path)?;
        f.write_all(&text)?;
        f.flush()?;
    }
    Ok(())
}

fn encrypt(a: CipherArgs) -> Result<(), CliError> {
    let (_, config) = a.generator.config()?;
    let image = read_pgm(&read(&a.input)?)
        .map_err(|e| CliError::usage(format!("{}: {e}", a.input.display())))?;
    let out = xor_cipher(&image, &config)?;
    write_pgm(create(&a.out)?, &out)?;
    Ok(())
}

fn histogram_cmd(a: HistogramArgs) -> Result<(), CliError> {
    let image = read_pgm(&read(&a.input)?)
        .map_err(|e| CliError::usage(format!("{}: {e}", a.input.display())))?;
    let hist = histogram(&image);
    println!(
        "{}x{} pixels, chi-square vs uniform = {:.3} (255 degrees of freedom)",
        image.width(),
        image.height(),
        chi_square_uniformity(&hist)
    );
    if let Some(path) = &a.csv {
        report::histogram_csv(create(path)?, &hist)?;
    }
    Ok(())
}
