//! Command-line front end: `spectrum`, `budget`, `validate`, `sweep`.
//!
//! Exit codes: 0 success, 1 validation-suite failure, 2 usage error,
//! 3 numerical failure, 4 partial sweep failure.
//!
//! Output is deterministic: identical flags produce byte-identical files
//! regardless of `--threads`.

use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bogolubov::{AFactor, Scenario, TruncationPolicy};
use crate::matching::Media;
use crate::output::{spectrum_from_json, spectrum_to_csv, spectrum_to_json};
use crate::presets;
use crate::spectrum::{
    photon_budget_from_table, photon_budget_infinite, schwinger_static_energy, spectrum_finite,
    spectrum_infinite_table, PhotonBudget, QuadSpec, SpectrumKernel, SpectrumMode, SpectrumTable,
    StaticCasimirEnergy,
};
use crate::validate::{run_suite, ValidationConfig};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_PARTIAL_SWEEP: i32 = 4;

#[derive(Parser)]
#[command(
    name = "casimir-bubble",
    version,
    about = "Photon spectra and budgets from a sudden refractive-index change in a dielectric bubble"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a photon spectrum table (CSV or JSON)
    Spectrum(SpectrumArgs),
    /// Photon number/energy budget plus the static Casimir comparator (JSON)
    Budget(BudgetArgs),
    /// Run the consistency-check suite (JSON report)
    Validate(ValidateArgs),
    /// Sweep one parameter; one spectrum + budget per step plus an index
    Sweep(SweepArgs),
}

#[derive(Args, Clone)]
struct PhysicsOpts {
    /// Built-in preset: schwinger | updated | min-radius | ambient
    #[arg(long)]
    preset: Option<String>,
    /// Refractive index inside the bubble (with --n-liquid/--radius-um/--cutoff-nm)
    #[arg(long)]
    n_gas: Option<f64>,
    /// Refractive index of the ambient liquid
    #[arg(long)]
    n_liquid: Option<f64>,
    /// Bubble radius in µm
    #[arg(long)]
    radius_um: Option<f64>,
    /// Cutoff wavelength λ in nm (K = 2π/λ)
    #[arg(long)]
    cutoff_nm: Option<f64>,
}

impl PhysicsOpts {
    fn resolve(&self) -> Result<(Media, Scenario, Option<String>)> {
        let explicit = [self.n_gas, self.n_liquid, self.radius_um, self.cutoff_nm];
        match &self.preset {
            Some(name) => {
                if explicit.iter().any(Option::is_some) {
                    return Err(Error::InvalidInput(
                        "--preset conflicts with --n-gas/--n-liquid/--radius-um/--cutoff-nm".into(),
                    ));
                }
                let p = presets::builtin(name).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "unknown preset '{name}' (available: schwinger, updated, min-radius, ambient)"
                    ))
                })?;
                Ok((p.media, p.scenario, Some(p.name.to_string())))
            }
            None => {
                if explicit.iter().any(Option::is_none) {
                    return Err(Error::InvalidInput(
                        "either --preset or all of --n-gas --n-liquid --radius-um --cutoff-nm \
                         must be given"
                            .into(),
                    ));
                }
                let media = Media::new(self.n_gas.unwrap(), self.n_liquid.unwrap())?;
                let scenario = Scenario::from_radius_um_cutoff_nm(
                    self.radius_um.unwrap(),
                    self.cutoff_nm.unwrap(),
                )?;
                Ok((media, scenario, None))
            }
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum ModeOpt {
    Exact,
    Factorized,
    Infinite,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum AFactorOpt {
    Unit,
    Exact,
}

impl From<AFactorOpt> for AFactor {
    fn from(a: AFactorOpt) -> Self {
        match a {
            AFactorOpt::Unit => AFactor::Unit,
            AFactorOpt::Exact => AFactor::Exact,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum FormatOpt {
    Csv,
    Json,
}

#[derive(Args, Clone)]
struct ComputeOpts {
    /// Kernel: exact | factorized | infinite
    #[arg(long, value_enum, default_value_t = ModeOpt::Factorized)]
    mode: ModeOpt,
    /// Partial-wave weight: unit | exact (exact restores |A_ν(y)|²)
    #[arg(long, value_enum, default_value_t = AFactorOpt::Unit)]
    a_factor: AFactorOpt,
    /// Upper end of the x grid (default 1.2·RK)
    #[arg(long)]
    x_max: Option<f64>,
    /// x grid spacing (default x_max/360 for spectrum, x_max/1999 for budget)
    #[arg(long)]
    dx: Option<f64>,
    /// Relative tail tolerance of the adaptive partial-wave truncation
    #[arg(long, default_value_t = TruncationPolicy::DEFAULT_TAIL_EPSILON)]
    tail_eps: f64,
    /// Override of the y-integration upper bound (default RK)
    #[arg(long)]
    y_max: Option<f64>,
    /// Output format: csv | json
    #[arg(long, value_enum, default_value_t = FormatOpt::Csv)]
    format: FormatOpt,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = automatic)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    physics: PhysicsOpts,
    #[command(flatten)]
    compute: ComputeOpts,
}

#[derive(Args)]
struct BudgetArgs {
    #[command(flatten)]
    physics: PhysicsOpts,
    #[command(flatten)]
    compute: ComputeOpts,
    /// Integrate a previously written JSON spectrum instead of recomputing
    #[arg(long)]
    from_table: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Comma-separated check families (default: all)
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Relative tail tolerance for kernel sums inside the checks
    #[arg(long, default_value_t = TruncationPolicy::DEFAULT_TAIL_EPSILON)]
    tail_eps: f64,
    /// Inject a relative Bessel perturbation (sensitivity calibration)
    #[arg(long, default_value_t = 0.0, hide = true)]
    perturb: f64,
    /// Worker threads (0 = automatic)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum SweepParam {
    RadiusUm,
    CutoffNm,
    NLiquid,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    physics: PhysicsOpts,
    #[command(flatten)]
    compute: ComputeOpts,
    /// Swept parameter: radius-um | cutoff-nm | n-liquid
    #[arg(long, value_enum)]
    param: SweepParam,
    /// First parameter value
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    /// Last parameter value
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Number of steps (>= 1; a single step requires from == to)
    #[arg(long)]
    steps: usize,
    /// Output directory for per-step files and index.json
    #[arg(long)]
    out_dir: PathBuf,
}

/// Parse `std::env::args` and run; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Run with explicit arguments (first element is the program name).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Spectrum(args) => run_spectrum(&args),
        Command::Budget(args) => run_budget(&args),
        Command::Validate(args) => run_validate(&args),
        Command::Sweep(args) => run_sweep(&args),
    }
}

fn usage_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn numerical_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    EXIT_NUMERICAL
}

/// Run `f` on a rayon pool sized per `--threads` (0 = rayon's default).
fn with_pool<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R> {
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn build_grid(x_max: f64, dx: f64) -> Result<Vec<f64>> {
    if !(x_max.is_finite() && x_max > 0.0) || !(dx.is_finite() && dx > 0.0) || dx > x_max {
        return Err(Error::InvalidInput(format!(
            "need 0 < dx <= x_max, got dx = {dx}, x_max = {x_max}"
        )));
    }
    let n = (x_max / dx + 1e-6).floor() as usize + 1;
    Ok((0..n).map(|i| i as f64 * dx).collect())
}

fn compute_table(
    media: &Media,
    scenario: &Scenario,
    compute: &ComputeOpts,
    default_points: usize,
) -> Result<SpectrumTable> {
    let x_max = compute.x_max.unwrap_or(1.2 * scenario.x_max());
    let dx = compute.dx.unwrap_or(x_max / (default_points as f64 - 1.0));
    let grid = build_grid(x_max, dx)?;
    match compute.mode {
        ModeOpt::Infinite => spectrum_infinite_table(media, scenario, &grid),
        kernel_mode => {
            let kernel = match kernel_mode {
                ModeOpt::Exact => SpectrumKernel::Exact,
                ModeOpt::Factorized => SpectrumKernel::Factorized,
                ModeOpt::Infinite => unreachable!(),
            };
            let policy = TruncationPolicy::adaptive(compute.tail_eps)?;
            let quad = QuadSpec {
                panel_width: 1.0,
                y_max: compute.y_max,
            };
            spectrum_finite(
                media,
                scenario,
                &grid,
                &quad,
                kernel,
                &policy,
                compute.a_factor.into(),
            )
        }
    }
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content.as_bytes())?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn render_table(table: &SpectrumTable, preset: Option<&str>, format: FormatOpt) -> Result<String> {
    match format {
        FormatOpt::Csv => Ok(spectrum_to_csv(table, preset)),
        FormatOpt::Json => spectrum_to_json(table),
    }
}

fn run_spectrum(args: &SpectrumArgs) -> i32 {
    let (media, scenario, preset) = match args.physics.resolve() {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let table = match with_pool(args.compute.threads, || {
        compute_table(&media, &scenario, &args.compute, 361)
    }) {
        Ok(Ok(t)) => t,
        Ok(Err(e)) | Err(e) => {
            return match e {
                Error::InvalidInput(_) => usage_error(&e),
                _ => numerical_error(&e),
            }
        }
    };
    let rendered = match render_table(&table, preset.as_deref(), args.compute.format) {
        Ok(r) => r,
        Err(e) => return numerical_error(&e),
    };
    match write_or_print(&args.compute.out, &rendered) {
        Ok(()) => EXIT_OK,
        Err(e) => numerical_error(&e),
    }
}

#[derive(Serialize)]
struct BudgetDocument {
    preset: String,
    mode: SpectrumMode,
    a_factor: AFactor,
    media: Media,
    scenario: Scenario,
    budget: PhotonBudget,
    static_casimir: StaticCasimirEnergy,
}

fn budget_from_args(args: &BudgetArgs) -> Result<BudgetDocument> {
    if let Some(path) = &args.from_table {
        let text = std::fs::read_to_string(path)?;
        let table = spectrum_from_json(&text)?;
        if !table.tail_is_negligible(1e-6) {
            eprintln!(
                "warning: spectral tail not negligible at the end of the table; \
                 the budget may undercount"
            );
        }
        let budget = photon_budget_from_table(&table)?;
        return Ok(BudgetDocument {
            preset: "custom".into(),
            mode: table.mode,
            a_factor: table.a_factor,
            media: table.media,
            scenario: table.scenario,
            budget,
            static_casimir: schwinger_static_energy(&table.media, &table.scenario),
        });
    }
    let (media, scenario, preset) = args.physics.resolve()?;
    let (mode, budget) = match args.compute.mode {
        ModeOpt::Infinite => (
            SpectrumMode::Infinite,
            photon_budget_infinite(&media, &scenario),
        ),
        _ => {
            let table = compute_table(&media, &scenario, &args.compute, 2000)?;
            if !table.tail_is_negligible(1e-6) && !media.is_uniform() {
                eprintln!(
                    "warning: spectral tail not negligible at x_max = {}; \
                     consider a larger --x-max",
                    table.points.last().map(|p| p.x).unwrap_or(0.0)
                );
            }
            (table.mode, photon_budget_from_table(&table)?)
        }
    };
    Ok(BudgetDocument {
        preset: preset.unwrap_or_else(|| "custom".into()),
        mode,
        a_factor: args.compute.a_factor.into(),
        media,
        scenario,
        budget,
        static_casimir: schwinger_static_energy(&media, &scenario),
    })
}

fn run_budget(args: &BudgetArgs) -> i32 {
    let doc = match with_pool(args.compute.threads, || budget_from_args(args)) {
        Ok(Ok(d)) => d,
        Ok(Err(e)) | Err(e) => {
            return match e {
                Error::InvalidInput(_) | Error::Io(_) => usage_error(&e),
                _ => numerical_error(&e),
            }
        }
    };
    let mut rendered = match serde_json::to_string_pretty(&doc) {
        Ok(r) => r,
        Err(e) => return numerical_error(&Error::Serde(e)),
    };
    rendered.push('\n');
    match write_or_print(&args.compute.out, &rendered) {
        Ok(()) => EXIT_OK,
        Err(e) => numerical_error(&e),
    }
}

fn run_validate(args: &ValidateArgs) -> i32 {
    for family in &args.checks {
        if !crate::validate::FAMILIES.contains(&family.as_str()) {
            return usage_error(&Error::InvalidInput(format!(
                "unknown check family '{family}' (available: {})",
                crate::validate::FAMILIES.join(", ")
            )));
        }
    }
    let cfg = ValidationConfig {
        families: args.checks.clone(),
        perturb: args.perturb,
        tail_epsilon: args.tail_eps,
        ..Default::default()
    };
    let report = match with_pool(args.threads, || run_suite(&cfg)) {
        Ok(Ok(r)) => r,
        Ok(Err(e)) | Err(e) => return numerical_error(&e),
    };
    match serde_json::to_string_pretty(&report) {
        Ok(j) => println!("{j}"),
        Err(e) => return numerical_error(&Error::Serde(e)),
    }
    if report.all_passed {
        EXIT_OK
    } else {
        eprintln!("failed checks: {}", report.failed_names().join(", "));
        EXIT_VALIDATION_FAILED
    }
}

#[derive(Serialize)]
struct SweepEntry {
    value: f64,
    spectrum: String,
    budget: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct SweepIndex {
    param: String,
    from: f64,
    to: f64,
    steps: usize,
    entries: Vec<SweepEntry>,
}

fn sweep_step_inputs(
    base_media: &Media,
    base_scenario: &Scenario,
    param: SweepParam,
    value: f64,
) -> Result<(Media, Scenario)> {
    match param {
        SweepParam::RadiusUm => Ok((
            *base_media,
            Scenario::from_radius_um_cutoff_nm(value, base_scenario.cutoff_wavelength_nm())?,
        )),
        SweepParam::CutoffNm => Ok((
            *base_media,
            Scenario::from_radius_um_cutoff_nm(base_scenario.radius_um(), value)?,
        )),
        SweepParam::NLiquid => Ok((Media::new(base_media.n_gas(), value)?, *base_scenario)),
    }
}

fn run_sweep(args: &SweepArgs) -> i32 {
    let (media, scenario, _) = match args.physics.resolve() {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    if args.steps == 0 {
        return usage_error(&Error::InvalidInput("--steps must be >= 1".into()));
    }
    if args.steps == 1 && args.from != args.to {
        return usage_error(&Error::InvalidInput(
            "a single-step sweep requires --from == --to".into(),
        ));
    }
    if args.steps >= 2 && !(args.from < args.to) {
        return usage_error(&Error::InvalidInput(
            "--from must be strictly below --to".into(),
        ));
    }
    if let Err(e) = std::fs::create_dir_all(&args.out_dir) {
        return usage_error(&Error::Io(e));
    }

    let values: Vec<f64> = if args.steps == 1 {
        vec![args.from]
    } else {
        (0..args.steps)
            .map(|i| args.from + (args.to - args.from) * i as f64 / (args.steps - 1) as f64)
            .collect()
    };

    let param_name = match args.param {
        SweepParam::RadiusUm => "radius-um",
        SweepParam::CutoffNm => "cutoff-nm",
        SweepParam::NLiquid => "n-liquid",
    };
    let ext = match args.compute.format {
        FormatOpt::Csv => "csv",
        FormatOpt::Json => "json",
    };

    let mut entries = Vec::with_capacity(values.len());
    let mut failures: Vec<String> = Vec::new();
    for (i, &value) in values.iter().enumerate() {
        let spectrum_name = format!("step_{i:03}.{ext}");
        let budget_name = format!("step_{i:03}.budget.json");
        let step = with_pool(args.compute.threads, || {
            sweep_one(&media, &scenario, args, value)
        })
        .and_then(|r| r);
        match step {
            Ok((table_text, budget_text)) => {
                let werr = std::fs::write(args.out_dir.join(&spectrum_name), table_text)
                    .and_then(|_| std::fs::write(args.out_dir.join(&budget_name), budget_text));
                match werr {
                    Ok(()) => entries.push(SweepEntry {
                        value,
                        spectrum: spectrum_name,
                        budget: budget_name,
                        ok: true,
                        error: None,
                    }),
                    Err(e) => {
                        failures.push(format!("{param_name} = {value}: {e}"));
                        entries.push(SweepEntry {
                            value,
                            spectrum: String::new(),
                            budget: String::new(),
                            ok: false,
                            error: Some(e.to_string()),
                        });
                    }
                }
            }
            Err(e) => {
                failures.push(format!("{param_name} = {value}: {e}"));
                entries.push(SweepEntry {
                    value,
                    spectrum: String::new(),
                    budget: String::new(),
                    ok: false,
                    error: Some(e.to_string()),
                });
            }
        }
    }

    let index = SweepIndex {
        param: param_name.to_string(),
        from: args.from,
        to: args.to,
        steps: args.steps,
        entries,
    };
    let index_text = match serde_json::to_string_pretty(&index) {
        Ok(mut t) => {
            t.push('\n');
            t
        }
        Err(e) => return numerical_error(&Error::Serde(e)),
    };
    if let Err(e) = std::fs::write(args.out_dir.join("index.json"), index_text) {
        return numerical_error(&Error::Io(e));
    }

    if failures.is_empty() {
        EXIT_OK
    } else {
        eprintln!("sweep completed with failures:");
        for f in &failures {
            eprintln!("  {f}");
        }
        EXIT_PARTIAL_SWEEP
    }
}

/// Compute one sweep step: the rendered spectrum file and budget JSON.
fn sweep_one(
    base_media: &Media,
    base_scenario: &Scenario,
    args: &SweepArgs,
    value: f64,
) -> Result<(String, String)> {
    let (media, scenario) = sweep_step_inputs(base_media, base_scenario, args.param, value)?;
    let table = compute_table(&media, &scenario, &args.compute, 361)?;
    let table_text = render_table(&table, None, args.compute.format)?;
    let budget = match args.compute.mode {
        ModeOpt::Infinite => photon_budget_infinite(&media, &scenario),
        _ => photon_budget_from_table(&table)?,
    };
    let doc = BudgetDocument {
        preset: "custom".into(),
        mode: table.mode,
        a_factor: args.compute.a_factor.into(),
        media,
        scenario,
        budget,
        static_casimir: schwinger_static_energy(&media, &scenario),
    };
    let mut budget_text = serde_json::to_string_pretty(&doc)?;
    budget_text.push('\n');
    Ok((table_text, budget_text))
}

/// Read a spectrum table back from a JSON file (exposed for tooling tests).
pub fn read_spectrum_table(path: &Path) -> Result<SpectrumTable> {
    let text = std::fs::read_to_string(path)?;
    spectrum_from_json(&text)
}
