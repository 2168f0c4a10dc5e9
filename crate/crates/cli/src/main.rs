mod svg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trifold::asymptotics::{self, AsymptoticSample};
use trifold::domain::{boundary_polyline, DomainBoundary};
use trifold::export::fmt;
use trifold::extremal::{ExtremalReport, Objective};
use trifold::inequalities::{default_tau_grid, default_x_grid, verify_lemma1, verify_lemma2, Claim, LemmaReport};
use trifold::poly::trinomial_derivative_roots;
use trifold::suffridge::{corner_point, t_symmetric_coeffs};
use trifold::univalence::{certify_univalence, UnivalenceReport, Verdict, Witness, DEFAULT_SAMPLES};

/// Univalent trinomials z + a z^(1+T) + b z^(1+2T) with T-fold symmetry.
#[derive(Parser, Debug)]
#[command(name = "trifold", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary of the univalence domain U_T as CSV, SVG or a summary.
    Domain {
        #[command(flatten)]
        common: Common,
        /// Samples per boundary arc.
        #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
    },
    /// Corner point (a0, b0) and the zeros of the corner trinomial's derivative.
    Corner {
        #[command(flatten)]
        common: Common,
    },
    /// Checks the corner extremality, its univalence and the derivative zeros.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Grid resolution for the extremum search.
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(50..=4000))]
        resolution: u64,
        /// Samples along Γ3+ for the monotonicity tables.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(100..))]
        samples: u64,
        /// Seed for the random interior spot checks.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Grid verification of the two trigonometric inequality lemmas.
    Lemmas {
        #[command(flatten)]
        out: OutputArgs,
        #[arg(long = "k-max", default_value_t = 20, value_parser = clap::value_parser!(u32).range(3..=59))]
        k_max: u32,
        /// Number of α values in (0, 1/2].
        #[arg(long = "alpha-points", default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        alpha_points: u64,
    },
    /// Coefficients of the fold-symmetric family S^(T) with n terms.
    Suffridge {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Univalence certificate for z + a z^(1+T) + b z^(1+2T).
    CheckUnivalence {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        /// Samples on each test circle.
        #[arg(long, default_value_t = DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(64..))]
        samples: u64,
    },
    /// Closed-form extrema against the grid oracle.
    Extremal {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(50..=4000))]
        resolution: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(100..))]
        samples: u64,
    },
    /// Normalized covering ratio and maximum modulus for growing n.
    Asymptotics {
        #[command(flatten)]
        common: Common,
        #[arg(long = "n-max", default_value_t = 800, value_parser = clap::value_parser!(u64).range(3..=100_000))]
        n_max: u64,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Fold order T.
    #[arg(long = "T", value_parser = clap::value_parser!(u32).range(1..=1000))]
    fold: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output path, `-` for standard output.
    #[arg(long, default_value = "-")]
    out: PathBuf,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Text,
}

impl OutputArgs {
    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if !allowed.contains(&f) {
            return Err(UsageError(format!("format {f:?} is not available for this subcommand").to_lowercase()).into());
        }
        Ok(f)
    }

    fn open(&self) -> Result<Box<dyn Write>> {
        if self.out.as_os_str() == "-" {
            return Ok(Box::new(BufWriter::new(io::stdout().lock())));
        }
        let file = File::create(&self.out).with_context(|| format!("cannot create {}", self.out.display()))?;
        Ok(Box::new(BufWriter::new(file)))
    }

    fn write(&self, body: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
        let mut w = self.open()?;
        body(&mut w)?;
        w.flush().with_context(|| format!("cannot write {}", self.out.display()))?;
        Ok(())
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Whether every check of a subcommand held.
type Passed = bool;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            if is_usage_error(&err) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_usage_error(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<UsageError>().is_some() {
        return true;
    }
    matches!(
        err.downcast_ref::<trifold::Error>(),
        Some(
            trifold::Error::InvalidFoldOrder(_)
                | trifold::Error::InvalidSuffridgeIndex { .. }
                | trifold::Error::InvalidExponents { .. }
                | trifold::Error::InvalidArgument(_)
                | trifold::Error::EmptyPolynomial
                | trifold::Error::NotNormalized(_)
        )
    )
}

fn run(command: Command) -> Result<Passed> {
    match command {
        Command::Domain { common, samples } => cmd_domain(&common, samples as usize),
        Command::Corner { common } => cmd_corner(&common),
        Command::Verify { common, resolution, samples, seed } => {
            cmd_verify(&common, resolution as usize, samples as usize, seed)
        }
        Command::Lemmas { out, k_max, alpha_points } => cmd_lemmas(&out, k_max, alpha_points as usize),
        Command::Suffridge { common, n } => cmd_suffridge(&common, n as usize),
        Command::CheckUnivalence { common, a, b, samples } => cmd_check_univalence(&common, a, b, samples as usize),
        Command::Extremal { common, resolution, samples } => cmd_extremal(&common, resolution as usize, samples as usize),
        Command::Asymptotics { common, n_max } => cmd_asymptotics(&common, n_max as usize),
    }
}

fn cmd_domain(common: &Common, samples: usize) -> Result<Passed> {
    let format = common.out.format(Format::Csv, &[Format::Csv, Format::Svg, Format::Text])?;
    let boundary: DomainBoundary<f64> = boundary_polyline(common.fold, samples)?;
    let closed = boundary.closure_gap() < 1e-9;
    let simple = boundary.is_simple();
    common.out.write(|w| {
        match format {
            Format::Csv => boundary.write_csv(w)?,
            Format::Svg => w.write_all(svg::render(&boundary).as_bytes())?,
            Format::Text => {
                let (lo, hi) = boundary.bounding_box();
                writeln!(w, "T = {}", common.fold)?;
                writeln!(w, "samples per arc = {samples}")?;
                writeln!(w, "vertices = {}", boundary.vertices().len())?;
                writeln!(w, "area = {}", fmt(boundary.signed_area()))?;
                writeln!(w, "a range = [{}, {}]", fmt(lo.x), fmt(hi.x))?;
                writeln!(w, "b range = [{}, {}]", fmt(lo.y), fmt(hi.y))?;
                writeln!(w, "closure gap = {}", fmt(boundary.closure_gap()))?;
                writeln!(w, "simple = {simple}")?;
            }
        }
        Ok(())
    })?;
    if !closed || !simple {
        eprintln!("boundary check failed: closed = {closed}, simple = {simple}");
    }
    Ok(closed && simple)
}

fn cmd_corner(common: &Common) -> Result<Passed> {
    let format = common.out.format(Format::Csv, &[Format::Csv, Format::Text])?;
    let c = corner_point::<f64>(common.fold)?;
    let roots = trinomial_derivative_roots(common.fold, c.a0, c.b0);
    let worst = roots.iter().map(|r| (r.modulus - 1.0).abs()).fold(0.0, f64::max);
    let on_circle = worst < 1e-10;
    common.out.write(|w| {
        match format {
            Format::Csv => {
                writeln!(w, "T,a0,b0,root_count,max_root_modulus_deviation")?;
                writeln!(w, "{},{},{},{},{}", common.fold, fmt(c.a0), fmt(c.b0), roots.len(), fmt(worst))?;
            }
            _ => {
                writeln!(w, "T = {}", common.fold)?;
                writeln!(w, "a0 = {}", fmt(c.a0))?;
                writeln!(w, "b0 = {}", fmt(c.b0))?;
                writeln!(w, "derivative zeros = {}", roots.len())?;
                for r in &roots {
                    writeln!(w, "  modulus {} argument {}", fmt(r.modulus), fmt(r.argument))?;
                }
                writeln!(w, "max ||z| - 1| = {}", fmt(worst))?;
            }
        }
        Ok(())
    })?;
    Ok(on_circle)
}

struct CheckLine {
    name: String,
    passed: bool,
    detail: String,
}

fn cmd_verify(common: &Common, resolution: usize, samples: usize, seed: u64) -> Result<Passed> {
    common.out.format(Format::Text, &[Format::Text])?;
    let fold = common.fold;
    let mut checks = Vec::new();

    let report = ExtremalReport::<f64>::build(fold, resolution, samples)?;
    let closed = &report.closed_form;
    for o in Objective::ALL {
        let opt = report.oracle.optimum(o);
        let kind = if o.maximized() { "max" } else { "min" };
        let diff = (opt.value - closed.value(o)).abs();
        let bound = report.oracle.value_bound(o);
        checks.push(CheckLine {
            name: format!("{kind}_{o} value"),
            passed: diff <= bound,
            detail: format!(
                "closed form {} oracle {} |diff| {} bound {}",
                fmt(closed.value(o)),
                fmt(opt.value),
                fmt(diff),
                fmt(bound)
            ),
        });
        checks.push(CheckLine {
            name: format!("arg{kind}_{o} location"),
            passed: opt.within_one_cell(),
            detail: format!(
                "at ({}, {}), offset ({}, {}) cells from the corner",
                fmt(opt.at.x),
                fmt(opt.at.y),
                fmt(opt.offset_cells.0),
                fmt(opt.offset_cells.1)
            ),
        });
    }
    for table in report.monotonicity.tables() {
        let direction = if table.increasing { "increasing" } else { "decreasing" };
        checks.push(CheckLine {
            name: format!("{} {direction} along Gamma3+", table.quantity),
            passed: table.is_strict(),
            detail: format!("{} violations, min step {}", table.violations(), fmt(table.min_step)),
        });
    }
    checks.push(CheckLine {
        name: "derivative sign via G".into(),
        passed: report.monotonicity.derivative_sign_violations == 0,
        detail: format!("{} non-positive samples", report.monotonicity.derivative_sign_violations),
    });

    let corner = corner_point::<f64>(fold)?;
    let roots = trinomial_derivative_roots(fold, corner.a0, corner.b0);
    let worst = roots.iter().map(|r| (r.modulus - 1.0).abs()).fold(0.0, f64::max);
    checks.push(CheckLine {
        name: "derivative zeros on the unit circle".into(),
        passed: worst < 1e-10,
        detail: format!("{} zeros, max ||z| - 1| = {}", roots.len(), fmt(worst)),
    });

    let cert = certify_univalence(fold, corner.a0, corner.b0, DEFAULT_SAMPLES)?;
    checks.push(CheckLine {
        name: "corner trinomial univalent".into(),
        passed: cert.verdict == Verdict::Univalent,
        detail: describe_certificate(&cert),
    });

    let boundary: DomainBoundary<f64> = boundary_polyline(fold, 512)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = boundary.bounding_box();
    let mut spot = 0;
    let mut spot_failures = Vec::new();
    while spot < 12 {
        let a = rng.random_range(lo.x..hi.x);
        let b = rng.random_range(lo.y..hi.y);
        if !boundary.contains(a, b) || boundary.distance_to(a, b) < 0.01 {
            continue;
        }
        spot += 1;
        if certify_univalence(fold, a, b, 512)?.verdict != Verdict::Univalent {
            spot_failures.push(format!("({}, {})", fmt(a), fmt(b)));
        }
    }
    checks.push(CheckLine {
        name: "random interior points univalent".into(),
        passed: spot_failures.is_empty(),
        detail: if spot_failures.is_empty() {
            format!("12 points, seed {seed}")
        } else {
            format!("failed at {}", spot_failures.join(" "))
        },
    });

    let passed = checks.iter().all(|c| c.passed);
    common.out.write(|w| {
        writeln!(w, "T = {fold}, resolution {resolution}, cell {}", fmt(report.oracle.cell_size))?;
        writeln!(w, "corner (a0, b0) = ({}, {})", fmt(corner.a0), fmt(corner.b0))?;
        writeln!(w, "max_L1 = {}", fmt(closed.max_l1))?;
        writeln!(w, "max_L2 = {}", fmt(closed.max_l2))?;
        writeln!(w, "min_L3 = {}", fmt(closed.min_l3))?;
        for c in &checks {
            writeln!(w, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        writeln!(w, "{}", if passed { "all checks passed" } else { "some checks failed" })?;
        Ok(())
    })?;
    if let Some(first) = checks.iter().find(|c| !c.passed) {
        eprintln!("first failing check: {}", first.name);
    }
    Ok(passed)
}

fn describe_certificate(r: &UnivalenceReport<f64>) -> String {
    let mut s = format!("{} at r = {}", r.verdict, fmt(r.radius));
    if r.min_derivative_root_modulus.is_finite() {
        s.push_str(&format!(", min |zero of F'| = {}", fmt(r.min_derivative_root_modulus)));
    }
    if let Some(d) = r.min_boundary_self_distance {
        s.push_str(&format!(", min image self-distance = {}", fmt(d)));
    }
    s
}

fn cmd_lemmas(out: &OutputArgs, k_max: u32, alpha_points: usize) -> Result<Passed> {
    out.format(Format::Csv, &[Format::Csv, Format::Text])?;
    let x_grid: Vec<f64> = default_x_grid();
    let alphas: Vec<f64> = (1..=alpha_points).map(|i| 0.5 * i as f64 / alpha_points as f64).collect();
    let taus: Vec<f64> = default_tau_grid();
    let lemma1 = verify_lemma1(&x_grid, k_max);
    let lemma2 = verify_lemma2(&taus, &alphas);
    let passed = lemma1.passed() && lemma2.passed();
    out.write(|w| {
        if out.format == Some(Format::Text) {
            for (name, r, claims) in [
                ("lemma 1", &lemma1, &[Claim::HNegative, Claim::HRatio, Claim::HRatioStrong][..]),
                ("lemma 2", &lemma2, &[Claim::GPositive, Claim::GLowerBound][..]),
            ] {
                writeln!(w, "{name}: {} points, {} violations", r.points_checked, r.violations.len())?;
                for &c in claims {
                    if let Some(m) = r.min_margin(c) {
                        writeln!(w, "  {c}: min margin {}", fmt(m))?;
                    }
                }
            }
        } else {
            let combined = LemmaReport {
                description: format!("{}; {}", lemma1.description, lemma2.description),
                points_checked: lemma1.points_checked + lemma2.points_checked,
                violations: lemma1.violations.iter().chain(&lemma2.violations).cloned().collect(),
                min_margins: Vec::new(),
            };
            combined.write_violations_csv(&mut *w)?;
        }
        Ok(())
    })?;
    eprintln!(
        "lemma 1: {} violations, lemma 2: {} violations",
        lemma1.violations.len(),
        lemma2.violations.len()
    );
    Ok(passed)
}

fn cmd_suffridge(common: &Common, n: usize) -> Result<Passed> {
    let format = common.out.format(Format::Csv, &[Format::Csv, Format::Text])?;
    let p = t_symmetric_coeffs::<f64>(common.fold, n)?;
    common.out.write(|w| {
        if format == Format::Csv {
            writeln!(w, "j,exponent,coefficient")?;
        }
        for (i, &c) in p.coeffs().iter().enumerate() {
            let j = i + 1;
            match format {
                Format::Csv => writeln!(w, "{j},{},{}", p.exponent(j), fmt(c))?,
                _ => writeln!(w, "a_{j} (z^{}) = {}", p.exponent(j), fmt(c))?,
            }
        }
        Ok(())
    })?;
    Ok(true)
}

fn cmd_check_univalence(common: &Common, a: f64, b: f64, samples: usize) -> Result<Passed> {
    common.out.format(Format::Text, &[Format::Text, Format::Csv])?;
    if !a.is_finite() || !b.is_finite() {
        return Err(UsageError("a and b must be finite".into()).into());
    }
    let r = certify_univalence(common.fold, a, b, samples)?;
    common.out.write(|w| {
        if common.out.format == Some(Format::Csv) {
            writeln!(w, "T,a,b,verdict,radius,samples,min_derivative_root_modulus,min_boundary_self_distance")?;
            writeln!(
                w,
                "{},{},{},{},{},{},{},{}",
                common.fold,
                fmt(a),
                fmt(b),
                r.verdict,
                fmt(r.radius),
                r.samples,
                fmt(r.min_derivative_root_modulus),
                r.min_boundary_self_distance.map(fmt).unwrap_or_default()
            )?;
            return Ok(());
        }
        writeln!(w, "verdict = {}", r.verdict)?;
        for (radius, v) in &r.ladder {
            writeln!(w, "  r = {}: {v}", fmt(*radius))?;
        }
        writeln!(w, "min |zero of F'| = {}", fmt(r.min_derivative_root_modulus))?;
        if let Some(d) = r.min_boundary_self_distance {
            writeln!(w, "min image self-distance = {}", fmt(d))?;
        }
        match r.witness {
            Some(Witness::CriticalPoint { z, modulus }) => {
                writeln!(w, "witness: F'({} + {}i) = 0, |z| = {}", fmt(z.re), fmt(z.im), fmt(modulus))?
            }
            Some(Witness::SelfIntersection { theta1, theta2 }) => writeln!(
                w,
                "witness: image edges at angles {} and {} intersect",
                fmt(theta1),
                fmt(theta2)
            )?,
            None => {}
        }
        Ok(())
    })?;
    Ok(r.verdict == Verdict::Univalent)
}

fn cmd_extremal(common: &Common, resolution: usize, samples: usize) -> Result<Passed> {
    let format = common.out.format(Format::Csv, &[Format::Csv, Format::Text])?;
    let report = ExtremalReport::<f64>::build(common.fold, resolution, samples)?;
    common.out.write(|w| {
        if format == Format::Csv {
            return Ok(report.write_csv(w)?);
        }
        for (name, closed, oracle) in report.rows() {
            writeln!(w, "{name}: closed form {} oracle {}", fmt(closed), fmt(oracle))?;
        }
        for t in report.monotonicity.tables() {
            writeln!(w, "{}: +{} -{} 0:{}", t.quantity, t.positive, t.negative, t.zero)?;
        }
        writeln!(w, "near-boundary cells: {}", report.oracle.near_boundary.len())?;
        Ok(())
    })?;
    Ok(report.passed())
}

fn cmd_asymptotics(common: &Common, n_max: usize) -> Result<Passed> {
    let format = common.out.format(Format::Csv, &[Format::Csv, Format::Text])?;
    let mut n_list = asymptotics::default_n_list(n_max);
    if n_list.is_empty() {
        n_list.push(n_max);
    }
    let samples: Vec<AsymptoticSample<f64>> = asymptotics::trend(common.fold, &n_list)?;
    let (cover_ok, max_ok) = asymptotics::deviations_non_increasing(&samples);
    let positive = samples.iter().all(|s| s.ratio_cover > 0.0 && s.ratio_cover < 1.0 && s.max_mod > 1.0);
    common.out.write(|w| {
        if format == Format::Csv {
            return Ok(asymptotics::write_csv(&samples, w)?);
        }
        writeln!(w, "{}", asymptotics::FAMILY_LABEL)?;
        writeln!(w, "c_T = {}", fmt(asymptotics::c_t::<f64>(common.fold)?))?;
        for s in &samples {
            writeln!(
                w,
                "n = {}: normalized cover {} normalized max {}",
                s.n,
                fmt(s.normalized_cover),
                fmt(s.normalized_max)
            )?;
        }
        writeln!(w, "deviations non-increasing: cover {cover_ok}, max {max_ok}")?;
        Ok(())
    })?;
    eprintln!("note: {}", asymptotics::FAMILY_LABEL);
    Ok(cover_ok && max_ok && positive)
}
