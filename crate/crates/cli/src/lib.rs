//! Command line front end for the biased Bernoulli convolution
//! library. Every subcommand maps to one library operation, emits one
//! JSON document (or a CSV table with `--format csv`), and is
//! deterministic: the same invocation always produces the same bytes.

use std::fmt::Write as _;
use std::path::PathBuf;

use bcmf_core::expansions::{
    beta_digits, freq_words, gap_distance_with_depth, membership_u, multinacci_words, r_lambda,
    solve_constant, BitWord, EPSequence, MembershipVerdict, Mode, NamedConstant, Params, Rational,
    DEFAULT_COMPARE_DEPTH, DEFAULT_TOL,
};
use bcmf_core::measure::{
    local_dim_estimate, mesh_profile, nu_ball, nu_enclosure, DimEstimate, Enclosure, Interval,
    MeshProfile,
};
use bcmf_core::spectrum::{
    coarse_spectrum, default_q_grid, holder_bound, lower_bound_curve, lower_default_k,
    osc_spectrum_point, spectrum_curve, typical_dim, typical_dim_mc, upper_bound_curve,
    HolderBound, McReport, SpectrumCurve, TypicalDim,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "bcmf",
    version,
    about = "Biased Bernoulli convolutions: expansions, measures, spectra"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// RNG seed for the sampling commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Size of the worker thread pool (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Greedy,
    Lazy,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Greedy => Mode::Greedy,
            CliMode::Lazy => Mode::Lazy,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Named algebraic constants of the parameter axis.
    Constants,
    /// Greedy or lazy digits of a point of the support.
    Expand(ExpandArgs),
    /// Certify that a digit sequence is the unique expansion of its value.
    Unique(SeqArgs),
    /// Certified distance of an orbit from the overlap gap.
    Gap(SeqArgs),
    /// Enclosure of the measure of an interval.
    Measure(MeasureArgs),
    /// Enclosure of the measure of a ball.
    Ball(BallArgs),
    /// Local dimension regression along a certified sequence.
    Localdim(LocaldimArgs),
    /// Enclosures for every cell of a uniform mesh over the support.
    Mesh(MeshArgs),
    /// Multifractal spectra: exact, bounded, or box-counting.
    #[command(subcommand)]
    Spectrum(SpectrumCmd),
    /// Certified Holder exponent of the distribution function.
    Holder(HolderArgs),
    /// Typical local dimension under a biased digit law.
    Typical(TypicalArgs),
    /// Monte-Carlo diagnostic for the typical local dimension.
    TypicalMc(TypicalMcArgs),
    /// Word constructions realising digit frequencies.
    #[command(subcommand)]
    Words(WordsCmd),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ExpandArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = CliMode::Greedy)]
    pub mode: CliMode,
    #[arg(long, default_value_t = 40)]
    pub digits: usize,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SeqArgs {
    #[arg(long)]
    pub lambda: f64,
    /// Eventually periodic digit sequence, written "PRE|PER".
    #[arg(long)]
    pub seq: String,
    #[arg(long, default_value_t = DEFAULT_COMPARE_DEPTH)]
    pub depth: usize,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MeasureArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long, default_value_t = 40)]
    pub depth: u32,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BallArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub x: f64,
    #[arg(long)]
    pub r: f64,
    #[arg(long, default_value_t = 40)]
    pub depth: u32,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct LocaldimArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub seq: String,
    #[arg(long, default_value_t = 5)]
    pub nmin: u32,
    #[arg(long, default_value_t = 30)]
    pub nmax: u32,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct MeshArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    /// Cell half-width; cells are [(2j-2) r, 2j r].
    #[arg(long)]
    pub r: f64,
    #[arg(long, default_value_t = 40)]
    pub depth: u32,
}

#[derive(Debug, Subcommand)]
pub enum SpectrumCmd {
    /// Exact Legendre spectrum of a strongly separated system.
    Exact(SpectrumExactArgs),
    /// Lower and upper bounds in the overlapping regime, with the
    /// exact binomial reference curve.
    Bounds(SpectrumBoundsArgs),
    /// Coarse (box-counting) spectrum from mesh enclosures.
    Coarse(SpectrumCoarseArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpectrumExactArgs {
    /// Probability weight, repeated once per branch.
    #[arg(long = "w", required = true)]
    pub weights: Vec<f64>,
    /// Common contraction ratio.
    #[arg(long)]
    pub rho: f64,
    /// Evaluate a single Legendre parameter instead of the whole curve.
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long, requires = "qmax")]
    pub qmin: Option<f64>,
    #[arg(long, requires = "qmin")]
    pub qmax: Option<f64>,
    #[arg(long, default_value_t = 201)]
    pub qsteps: usize,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpectrumBoundsArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    /// Run-length parameter of the lower-bound subsystem.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, default_value_t = 0.55)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 1.65)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 200)]
    pub alpha_steps: usize,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpectrumCoarseArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    /// Mesh half-width, repeated, strictly decreasing.
    #[arg(long = "r", required = true)]
    pub r_list: Vec<f64>,
    #[arg(long, default_value_t = 0.05)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.55)]
    pub alpha_min: f64,
    #[arg(long, default_value_t = 1.65)]
    pub alpha_max: f64,
    #[arg(long, default_value_t = 200)]
    pub alpha_steps: usize,
    #[arg(long, default_value_t = 40)]
    pub depth: u32,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct HolderArgs {
    #[arg(long)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TypicalArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct TypicalMcArgs {
    #[arg(long)]
    pub lambda: f64,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
    #[arg(long, default_value_t = 100)]
    pub samples: u32,
    #[arg(long, default_value_t = 40)]
    pub ndigits: usize,
    /// Regression radius, repeated, strictly decreasing. Defaults to
    /// 2^-5 .. 2^-12.
    #[arg(long = "r")]
    pub r_list: Vec<f64>,
    #[arg(long, default_value_t = 40)]
    pub depth: u32,
}

#[derive(Debug, Subcommand)]
pub enum WordsCmd {
    /// Block pair from the expansion of 1, with its frequency window.
    Freq(HolderArgs),
    /// Run-limited block pair, with its frequency window.
    Multinacci(HolderArgs),
    /// Smallest certified digit-0 frequency at this lambda.
    R(HolderArgs),
}

#[derive(Serialize)]
struct ConstantsDoc {
    golden: f64,
    beta_one: f64,
    komornik_loreti: f64,
    multinacci_3: f64,
    multinacci_4: f64,
    multinacci_5: f64,
}

#[derive(Serialize)]
struct ExpandDoc {
    lambda: f64,
    x: f64,
    mode: Mode,
    digits: BitWord,
}

#[derive(Serialize)]
struct UniqueDoc {
    seq: String,
    lambda: f64,
    depth: usize,
    verdict: MembershipVerdict,
}

#[derive(Serialize)]
struct GapDoc {
    seq: String,
    lambda: f64,
    distance: f64,
}

#[derive(Serialize)]
struct BoundsDoc {
    lower: SpectrumCurve,
    upper: SpectrumCurve,
    exact: SpectrumCurve,
}

#[derive(Serialize)]
struct RDoc {
    lambda: f64,
    r: Rational,
}

/// Rendered output of one invocation.
enum Doc {
    Constants(ConstantsDoc),
    Expand(ExpandDoc),
    Unique(UniqueDoc),
    Gap(GapDoc),
    Enclosure(Enclosure),
    Dim(DimEstimate),
    Mesh(MeshProfile),
    Curve(SpectrumCurve),
    Point(bcmf_core::spectrum::SpectrumPoint),
    Bounds(Box<BoundsDoc>),
    Holder(HolderBound),
    Typical(TypicalDim),
    Mc(McReport),
    Freq(bcmf_core::expansions::FreqWords),
    Multinacci(bcmf_core::expansions::MultinacciWords),
    R(RDoc),
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn evaluate(cli: &Cli) -> Result<Doc, bcmf_core::Error> {
    use rand_chacha::rand_core::SeedableRng;
    match &cli.command {
        Command::Constants => Ok(Doc::Constants(ConstantsDoc {
            golden: solve_constant(NamedConstant::Golden, DEFAULT_TOL)?,
            beta_one: solve_constant(NamedConstant::BetaOne, DEFAULT_TOL)?,
            komornik_loreti: solve_constant(NamedConstant::KomornikLoreti, DEFAULT_TOL)?,
            multinacci_3: solve_constant(NamedConstant::Multinacci(3), DEFAULT_TOL)?,
            multinacci_4: solve_constant(NamedConstant::Multinacci(4), DEFAULT_TOL)?,
            multinacci_5: solve_constant(NamedConstant::Multinacci(5), DEFAULT_TOL)?,
        })),
        Command::Expand(a) => Ok(Doc::Expand(ExpandDoc {
            lambda: a.lambda,
            x: a.x,
            mode: a.mode.into(),
            digits: beta_digits(a.x, a.lambda, a.mode.into(), a.digits)?,
        })),
        Command::Unique(a) => {
            let seq = EPSequence::parse(&a.seq)?;
            Ok(Doc::Unique(UniqueDoc {
                seq: seq.to_string(),
                lambda: a.lambda,
                depth: a.depth,
                verdict: membership_u(&seq, a.lambda, a.depth)?,
            }))
        }
        Command::Gap(a) => {
            let seq = EPSequence::parse(&a.seq)?;
            Ok(Doc::Gap(GapDoc {
                seq: seq.to_string(),
                lambda: a.lambda,
                distance: gap_distance_with_depth(&seq, a.lambda, a.depth)?,
            }))
        }
        Command::Measure(a) => {
            let params = Params::new(a.lambda, a.p)?;
            let cell = Interval::new(a.a, a.b)?;
            Ok(Doc::Enclosure(nu_enclosure(&params, cell, a.depth)))
        }
        Command::Ball(a) => {
            let params = Params::new(a.lambda, a.p)?;
            Ok(Doc::Enclosure(nu_ball(&params, a.x, a.r, a.depth)))
        }
        Command::Localdim(a) => {
            let params = Params::new(a.lambda, a.p)?;
            let seq = EPSequence::parse(&a.seq)?;
            Ok(Doc::Dim(local_dim_estimate(&params, &seq, a.nmin, a.nmax)?))
        }
        Command::Mesh(a) => {
            let params = Params::new(a.lambda, a.p)?;
            Ok(Doc::Mesh(mesh_profile(&params, a.r, a.depth)?))
        }
        Command::Spectrum(SpectrumCmd::Exact(a)) => {
            if let Some(q) = a.q {
                return Ok(Doc::Point(osc_spectrum_point(&a.weights, a.rho, q)?));
            }
            let grid = match (a.qmin, a.qmax) {
                (Some(lo), Some(hi)) => linspace(lo, hi, a.qsteps),
                _ => default_q_grid(),
            };
            Ok(Doc::Curve(spectrum_curve(&a.weights, a.rho, &grid)?))
        }
        Command::Spectrum(SpectrumCmd::Bounds(a)) => {
            let k = match a.k {
                Some(k) => k,
                None => lower_default_k(a.lambda)?,
            };
            let alpha_grid = linspace(a.alpha_min, a.alpha_max, a.alpha_steps);
            Ok(Doc::Bounds(Box::new(BoundsDoc {
                lower: lower_bound_curve(a.lambda, a.p, k, &default_q_grid())?,
                upper: upper_bound_curve(a.lambda, a.p, &alpha_grid)?,
                exact: spectrum_curve(&[a.p, 1.0 - a.p], 0.5, &default_q_grid())?,
            })))
        }
        Command::Spectrum(SpectrumCmd::Coarse(a)) => {
            let params = Params::new(a.lambda, a.p)?;
            let alpha_grid = linspace(a.alpha_min, a.alpha_max, a.alpha_steps);
            Ok(Doc::Curve(coarse_spectrum(
                &params,
                &a.r_list,
                &alpha_grid,
                a.eps,
                a.depth,
            )?))
        }
        Command::Holder(a) => Ok(Doc::Holder(holder_bound(a.lambda)?)),
        Command::Typical(a) => Ok(Doc::Typical(typical_dim(a.lambda, a.p, a.q)?)),
        Command::TypicalMc(a) => {
            let params = Params::new(a.lambda, a.p)?;
            let radii: Vec<f64> = if a.r_list.is_empty() {
                (5..=12).map(|k| 0.5f64.powi(k)).collect()
            } else {
                a.r_list.clone()
            };
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            Ok(Doc::Mc(typical_dim_mc(
                &params, a.q, a.samples, a.ndigits, &radii, a.depth, &mut rng,
            )?))
        }
        Command::Words(WordsCmd::Freq(a)) => Ok(Doc::Freq(freq_words(a.lambda)?)),
        Command::Words(WordsCmd::Multinacci(a)) => Ok(Doc::Multinacci(multinacci_words(a.lambda)?)),
        Command::Words(WordsCmd::R(a)) => Ok(Doc::R(RDoc {
            lambda: a.lambda,
            r: r_lambda(a.lambda)?,
        })),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize infallibly");
    s.push('\n');
    s
}

fn curve_rows(out: &mut String, curve: &SpectrumCurve, label: Option<&str>) {
    for pt in &curve.points {
        if let Some(l) = label {
            out.push_str(l);
            out.push(',');
        }
        if let Some(q) = pt.q {
            let _ = write!(out, "{q}");
        }
        let _ = writeln!(out, ",{},{}", pt.alpha, pt.f);
    }
}

fn to_csv(doc: &Doc) -> String {
    let mut s = String::new();
    match doc {
        Doc::Constants(c) => {
            s.push_str("name,value\n");
            for (name, v) in [
                ("golden", c.golden),
                ("beta_one", c.beta_one),
                ("komornik_loreti", c.komornik_loreti),
                ("multinacci_3", c.multinacci_3),
                ("multinacci_4", c.multinacci_4),
                ("multinacci_5", c.multinacci_5),
            ] {
                let _ = writeln!(s, "{name},{v}");
            }
        }
        Doc::Expand(d) => {
            let mode = match d.mode {
                Mode::Greedy => "greedy",
                Mode::Lazy => "lazy",
            };
            let _ = writeln!(
                s,
                "lambda,x,mode,digits\n{},{},{mode},{}",
                d.lambda, d.x, d.digits
            );
        }
        Doc::Unique(d) => {
            s.push_str("seq,lambda,status,shift,position\n");
            let _ = write!(s, "{},{},", d.seq, d.lambda);
            match d.verdict {
                MembershipVerdict::In => s.push_str("in,,\n"),
                MembershipVerdict::Out { shift, position } => {
                    let _ = writeln!(s, "out,{shift},{position}");
                }
                MembershipVerdict::Undecided { .. } => s.push_str("undecided,,\n"),
            }
        }
        Doc::Gap(d) => {
            let _ = writeln!(
                s,
                "seq,lambda,distance\n{},{},{}",
                d.seq, d.lambda, d.distance
            );
        }
        Doc::Enclosure(e) => {
            let _ = writeln!(s, "lo,hi\n{},{}", e.lo, e.hi);
        }
        Doc::Dim(d) => {
            let _ = writeln!(
                s,
                "slope,intercept,residual,predicted\n{},{},{},{}",
                d.slope, d.intercept, d.residual, d.predicted
            );
        }
        Doc::Mesh(m) => {
            s.push_str("j,center,lo,hi\n");
            for cell in &m.cells {
                let center = 0.5 * (cell.interval.a() + cell.interval.b());
                let _ = writeln!(
                    s,
                    "{},{center},{},{}",
                    cell.index, cell.enclosure.lo, cell.enclosure.hi
                );
            }
        }
        Doc::Curve(c) => {
            s.push_str("q,alpha,f\n");
            curve_rows(&mut s, c, None);
        }
        Doc::Point(pt) => {
            s.push_str("q,alpha,f\n");
            if let Some(q) = pt.q {
                let _ = write!(s, "{q}");
            }
            let _ = writeln!(s, ",{},{}", pt.alpha, pt.f);
        }
        Doc::Bounds(b) => {
            s.push_str("curve,q,alpha,f\n");
            curve_rows(&mut s, &b.lower, Some("lower"));
            curve_rows(&mut s, &b.upper, Some("upper"));
            curve_rows(&mut s, &b.exact, Some("exact"));
        }
        Doc::Holder(h) => {
            let _ = writeln!(
                s,
                "delta,k_used,boost\n{},{},{}",
                h.delta, h.k_used, h.boost
            );
        }
        Doc::Typical(t) => {
            let regime = match t.regime {
                bcmf_core::spectrum::Regime::Singularity => "singularity",
                bcmf_core::spectrum::Regime::DimensionOne => "dimension_one",
            };
            let _ = writeln!(
                s,
                "H,predicted,j_lo,j_hi,regime,alpha,f_lower_bound\n{},{},{},{},{regime},{},{}",
                t.h, t.predicted, t.j_interval[0], t.j_interval[1], t.alpha, t.f_lower_bound
            );
        }
        Doc::Mc(m) => {
            let _ = writeln!(
                s,
                "mean_slope,sd,samples,diagnostic\n{},{},{},{}",
                m.mean_slope, m.sd, m.samples, m.diagnostic
            );
        }
        Doc::Freq(f) => {
            let _ = writeln!(
                s,
                "k,u0,u1,freq_lo,freq_hi\n{},{},{},{},{}",
                f.k, f.u0, f.u1, f.freq_interval.0, f.freq_interval.1
            );
        }
        Doc::Multinacci(m) => {
            let _ = writeln!(
                s,
                "k,v0,v1,freq_lo,freq_hi,dim_bound\n{},{},{},{},{},{}",
                m.k, m.v0, m.v1, m.freq_interval.0, m.freq_interval.1, m.dim_bound
            );
        }
        Doc::R(r) => {
            let _ = writeln!(s, "lambda,r\n{},{}", r.lambda, r.r);
        }
    }
    s
}

fn to_json(doc: &Doc) -> String {
    match doc {
        Doc::Constants(d) => json(d),
        Doc::Expand(d) => json(d),
        Doc::Unique(d) => json(d),
        Doc::Gap(d) => json(d),
        Doc::Enclosure(d) => json(d),
        Doc::Dim(d) => json(d),
        Doc::Mesh(d) => json(d),
        Doc::Curve(d) => json(d),
        Doc::Point(d) => json(d),
        Doc::Bounds(d) => json(d),
        Doc::Holder(d) => json(d),
        Doc::Typical(d) => json(d),
        Doc::Mc(d) => json(d),
        Doc::Freq(d) => json(d),
        Doc::Multinacci(d) => json(d),
        Doc::R(d) => json(d),
    }
}

/// Runs one parsed invocation and returns the rendered output.
pub fn render(cli: &Cli) -> Result<String, bcmf_core::Error> {
    let doc = evaluate(cli)?;
    Ok(match cli.format {
        Format::Json => to_json(&doc),
        Format::Csv => to_csv(&doc),
    })
}

/// Full run: configure the pool, render, and deliver to stdout or the
/// `--out` file.
pub fn run(cli: &Cli) -> Result<(), Box<dyn std::error::Error>> {
    if let Some(n) = cli.threads {
        // a second configuration attempt in the same process is fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let text = render(cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_self_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn linspace_hits_both_endpoints() {
        let g = linspace(0.55, 1.65, 200);
        assert_eq!(g.len(), 200);
        assert_eq!(g[0], 0.55);
        assert_eq!(*g.last().unwrap(), 1.65);
        assert_eq!(linspace(0.3, 0.9, 1), vec![0.3]);
    }

    #[test]
    fn negative_grid_arguments_parse() {
        let cli = Cli::try_parse_from([
            "bcmf", "spectrum", "exact", "--w", "0.5", "--w", "0.5", "--rho", "0.5", "--q", "-40",
        ])
        .unwrap();
        match cli.command {
            Command::Spectrum(SpectrumCmd::Exact(ref a)) => assert_eq!(a.q, Some(-40.0)),
            _ => panic!("expected the exact-spectrum subcommand"),
        }
    }

    #[test]
    fn exact_dyadic_measure_renders_in_both_formats() {
        let mut cli = Cli::try_parse_from([
            "bcmf", "measure", "--lambda", "0.5", "--p", "0.5", "--a", "0", "--b", "0.25",
        ])
        .unwrap();
        assert_eq!(render(&cli).unwrap(), "{\"lo\":0.25,\"hi\":0.25}\n");
        cli.format = Format::Csv;
        assert_eq!(render(&cli).unwrap(), "lo,hi\n0.25,0.25\n");
    }
}
