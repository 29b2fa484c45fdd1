//! Thin command-line front end over the library.
//!
//! One subcommand per module operation, JSON payloads for structured
//! data, comma-separated exact rationals for series. Configuration
//! precedence: flags, then GROTHWITT_* environment variables, then
//! defaults. Identical argv and environment produce byte-identical
//! stdout.

use clap::{Args, Parser, Subcommand};
use grothwitt::config::Config;
use grothwitt::indep::{CharSystem, LatticeSystem, LatticeVerdict, Verdict};
use grothwitt::k0::SElement;
use grothwitt::poly::rat_to_f64;
use grothwitt::rational_witt::{MotivicMeasurePoly, OnePoly};
use grothwitt::skolem::{
    fit_good_set, ghost_zero_set, localize_irreducible_relation, RelationPoly, TwoCurvesClass,
};
use grothwitt::witt::LambdaSeries;
use grothwitt::zeta::{Curve, ZetaData};
use grothwitt::{parse_rat, Error, Int, Rat};
use num_traits::One;

#[derive(Parser)]
#[command(
    name = "grothwitt",
    version,
    about = "Exact Witt-ring arithmetic, curve zeta functions, and certified (in)dependence tests"
)]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

/// Config knobs; unset flags fall back to GROTHWITT_* variables, then
/// to built-in defaults.
#[derive(Args)]
struct Overrides {
    /// Series truncation order N
    #[arg(long, global = true)]
    trunc: Option<usize>,
    /// Trial budget for randomized witnesses
    #[arg(long, global = true)]
    trials: Option<u32>,
    /// Seed for deterministic random streams
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Ghost-component scan horizon
    #[arg(long, global = true)]
    horizon: Option<u64>,
    /// Largest extension degree for the isogeny search
    #[arg(long, global = true)]
    mmax: Option<u32>,
    /// Working precision in bits for character-sum numerics
    #[arg(long, global = true)]
    bits: Option<u32>,
}

impl Overrides {
    fn apply(&self, cfg: &mut Config) {
        if let Some(v) = self.trunc {
            cfg.trunc = v;
        }
        if let Some(v) = self.trials {
            cfg.trials = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        if let Some(v) = self.horizon {
            cfg.horizon = v;
        }
        if let Some(v) = self.mmax {
            cfg.m_max = v;
        }
        if let Some(v) = self.bits {
            cfg.bits = v;
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on truncated series in the big Witt ring of Q
    Witt {
        #[command(subcommand)]
        op: WittOp,
    },
    /// Arithmetic on motivic measures (Witt-rational polynomials in T)
    Measure {
        #[command(subcommand)]
        op: MeasureOp,
    },
    /// Point counting and zeta functions of curves
    Zeta {
        #[command(subcommand)]
        op: ZetaOp,
    },
    /// The zero-dimensional subring and its point-count measures
    K0s {
        #[command(subcommand)]
        op: K0Op,
    },
    /// Algebraic (in)dependence tests
    Indep {
        #[command(subcommand)]
        op: IndepOp,
    },
    /// Ghost zero sets and relation localization
    Skolem {
        #[command(subcommand)]
        op: SkolemOp,
    },
    /// Digit sums, Stickelberger valuations, and Jacobi sums
    Dh {
        #[command(subcommand)]
        op: DhOp,
    },
    /// Run the acceptance criteria and print one line per criterion
    Verify {
        /// "all" or a comma-separated list of criterion ids (c01..c11)
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum WittOp {
    /// Witt sum of two series
    Add {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Witt product of two series
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Ghost components of a series
    Ghost {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Frobenius F_m
    Frob {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        m: usize,
    },
    /// Verschiebung V_m
    Versch {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum MeasureOp {
    /// Motivic measure of a curve (JSON payload)
    Of {
        /// Curve JSON: inline, a path, or - for stdin
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Field-element enumeration budget
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Ghost component: a polynomial in T, printed as T^0.. coefficients
    Ghost {
        /// Measure JSON: inline, a path, or - for stdin
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        nu: usize,
    },
    /// Base change F_m on a measure
    Frob {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        m: usize,
    },
    /// Restriction of scalars V_m on a measure
    Versch {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        m: usize,
    },
    /// Product of two measures
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Subcommand)]
enum ZetaOp {
    /// Number of points over the degree-ext extension
    Count {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        /// Extension degree
        #[arg(long)]
        ext: u32,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Zeta function (validated numerator) from point counts
    Compute {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand)]
enum K0Op {
    /// Product of two zero-dimensional classes
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Point-count measure psi_n
    Psi {
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
        #[arg(long)]
        n: u64,
    },
    /// Explicit pair of nonzero classes built from x_nu whose product is zero
    Zerodiv {
        #[arg(long)]
        nu: u64,
    },
}

#[derive(Subcommand)]
enum IndepOp {
    /// Jacobi-criterion independence witness over the group algebra
    Jacobi {
        /// Character system JSON: inline, a path, or - for stdin
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Trial budget for the witness search
        #[arg(long)]
        budget: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Eigenvalue-lattice dimension criterion
    Lattice {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Classify the measures of two curves over GF(q)
    TwoCurves {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Zeta numerator of the first curve: t^1.. coefficients, or a
        /// full list from t^0 (odd length, leading 1); empty = genus 0
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
        #[arg(long, allow_hyphen_values = true)]
        p2: String,
        #[arg(long)]
        mmax: Option<u32>,
        #[arg(long)]
        horizon: Option<u64>,
    },
}

#[derive(Subcommand)]
enum SkolemOp {
    /// Fit a modulus/residues description of a measure's ghost zero set
    Goodset {
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Locate the factor of a product relation that vanishes periodically
    Localize {
        /// JSON array of measures
        #[arg(long, allow_hyphen_values = true)]
        measures: String,
        /// JSON array of integer polynomial factors
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        #[arg(long)]
        horizon: Option<u64>,
    },
}

#[derive(Subcommand)]
enum DhOp {
    /// Base-p digit sum of t * (q-1)/(p^a - 1) ... the sigma invariant
    Sigma {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        t: u64,
    },
    /// Stickelberger valuation sigma(t)/(a(p-1)) of a Jacobi sum
    Val {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        t: u64,
    },
    /// Jacobi character sum evaluated to a certified precision
    Jacobi {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        j: u64,
        #[arg(long)]
        bits: Option<u32>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Least n0 with phi(p^n - 1) > (p^n - 1)/n for all n >= n0
    Threshold {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Nonsingular 2x2 valuation matrix for a twisting exponent gamma
    Matrix {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        gamma: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    let mut cfg = Config::from_env();
    cli.overrides.apply(&mut cfg);
    let outcome = std::panic::catch_unwind(move || dispatch(cli.command, &cfg));
    match outcome {
        Ok(Ok(code)) => std::process::exit(code),
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
        Err(_) => std::process::exit(1),
    }
}

/// Resolves a payload argument: inline JSON, `-` for stdin, or a path.
fn payload(arg: &str) -> Result<String, Error> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut buf = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Error::Argument(format!("cannot read stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(arg).map_err(|e| Error::Argument(format!("cannot read {arg}: {e}")))
}

fn from_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, Error> {
    let text = payload(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Argument(format!("bad {what} JSON: {e}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization of checked data")
}

/// Parses a series argument: a comma-separated rational list, an inline
/// JSON array of strings, or `@path` naming a file holding such an array.
fn series_arg(arg: &str) -> Result<LambdaSeries, Error> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Argument(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    let t = text.trim();
    let coeffs: Vec<Rat> = if t.starts_with('[') {
        let items: Vec<String> = serde_json::from_str(t)
            .map_err(|e| Error::Argument(format!("bad series JSON: {e}")))?;
        items
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<_, _>>()?
    } else {
        t.split(',').map(parse_rat).collect::<Result<_, _>>()?
    };
    LambdaSeries::new(coeffs)
}

/// Comma-joined exact rationals, the inverse of `series_arg`'s inline form.
fn join_rats(coeffs: &[Rat]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Zeta numerator coefficients for two-curves input: even-length lists
/// are t^1..t^2g tails, odd-length lists starting with 1 include t^0,
/// and the empty string is the genus-0 numerator.
fn weil_tail(arg: &str) -> Result<Vec<Rat>, Error> {
    let t = arg.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let entries: Vec<Rat> = t.split(',').map(parse_rat).collect::<Result<_, _>>()?;
    if entries.len() % 2 == 0 {
        Ok(entries)
    } else if entries[0] == Rat::one() {
        Ok(entries[1..].to_vec())
    } else {
        Err(Error::Argument(format!(
            "odd-length numerator list must start with the t^0 coefficient 1: {arg:?}"
        )))
    }
}

/// Zero-dimensional class from either the documented wrapper object or
/// a bare terms map.
fn s_element(arg: &str) -> Result<SElement, Error> {
    let text = payload(arg)?;
    if let Ok(elem) = serde_json::from_str::<SElement>(&text) {
        return Ok(elem);
    }
    let wrapped = format!("{{\"terms\":{text}}}");
    serde_json::from_str(&wrapped)
        .map_err(|e| Error::Argument(format!("bad zero-dimensional class JSON: {e}")))
}

fn approx_line(label: &str, value: &grothwitt::numeric::Approx) -> String {
    format!(
        "{label} = {:.15e} +- {:.3e}",
        rat_to_f64(&value.value),
        rat_to_f64(&value.err)
    )
}

fn dispatch(command: Command, cfg: &Config) -> Result<i32, Error> {
    match command {
        Command::Witt { op } => witt(op),
        Command::Measure { op } => measure(op, cfg),
        Command::Zeta { op } => zeta(op, cfg),
        Command::K0s { op } => k0s(op),
        Command::Indep { op } => indep(op, cfg),
        Command::Skolem { op } => skolem(op, cfg),
        Command::Dh { op } => dh(op, cfg),
        Command::Verify { suite } => verify(&suite),
    }
}

fn witt(op: WittOp) -> Result<i32, Error> {
    let out = match op {
        WittOp::Add { a, b } => join_rats(series_arg(&a)?.add(&series_arg(&b)?)?.coeffs()),
        WittOp::Mul { a, b } => join_rats(series_arg(&a)?.mul(&series_arg(&b)?)?.coeffs()),
        WittOp::Ghost { a } => join_rats(&series_arg(&a)?.ghost()),
        WittOp::Frob { a, m } => join_rats(series_arg(&a)?.frobenius(m)?.coeffs()),
        WittOp::Versch { a, m } => join_rats(series_arg(&a)?.verschiebung(m)?.coeffs()),
    };
    println!("{out}");
    Ok(0)
}

fn measure(op: MeasureOp, cfg: &Config) -> Result<i32, Error> {
    match op {
        MeasureOp::Of { curve, budget } => {
            let curve: Curve = from_json(&curve, "curve")?;
            let z = curve.zeta(1, budget.unwrap_or(cfg.enum_budget))?;
            println!("{}", to_json(&z.motivic_measure()));
        }
        MeasureOp::Ghost { input, nu } => {
            let m: MotivicMeasurePoly = from_json(&input, "measure")?;
            println!("{}", join_rats(&m.ghost(nu)));
        }
        MeasureOp::Frob { input, m } => {
            let measure: MotivicMeasurePoly = from_json(&input, "measure")?;
            println!("{}", to_json(&measure.frobenius(m)?));
        }
        MeasureOp::Versch { input, m } => {
            let measure: MotivicMeasurePoly = from_json(&input, "measure")?;
            println!("{}", to_json(&measure.verschiebung(m)?));
        }
        MeasureOp::Mul { a, b } => {
            let a: MotivicMeasurePoly = from_json(&a, "measure")?;
            let b: MotivicMeasurePoly = from_json(&b, "measure")?;
            println!("{}", to_json(&a.mul(&b)));
        }
    }
    Ok(0)
}

fn zeta(op: ZetaOp, cfg: &Config) -> Result<i32, Error> {
    match op {
        ZetaOp::Count { curve, ext, budget } => {
            let curve: Curve = from_json(&curve, "curve")?;
            println!("{}", curve.count_points(ext, budget.unwrap_or(cfg.enum_budget))?);
        }
        ZetaOp::Compute { curve, budget } => {
            let curve: Curve = from_json(&curve, "curve")?;
            println!("{}", to_json(&curve.zeta(1, budget.unwrap_or(cfg.enum_budget))?));
        }
    }
    Ok(0)
}

fn k0s(op: K0Op) -> Result<i32, Error> {
    match op {
        K0Op::Mul { a, b } => {
            let a = s_element(&a)?;
            let b = s_element(&b)?;
            println!("{}", to_json(&a.mul(&b)));
        }
        K0Op::Psi { elem, n } => {
            println!("{}", s_element(&elem)?.psi(n)?);
        }
        K0Op::Zerodiv { nu } => {
            let (a, b) = SElement::zero_divisor_witness(nu)?;
            println!("{}", to_json(&a));
            println!("{}", to_json(&b));
        }
    }
    Ok(0)
}

fn indep(op: IndepOp, cfg: &Config) -> Result<i32, Error> {
    match op {
        IndepOp::Jacobi {
            input,
            budget,
            seed,
        } => {
            let system: CharSystem = from_json(&input, "character system")?;
            let verdict = system
                .independence_witness(budget.unwrap_or(cfg.trials), seed.unwrap_or(cfg.seed))?;
            match verdict {
                Verdict::IndependentCertified { divisor, point } => {
                    println!("IndependentCertified divisor={divisor} point={}", join_rats(&point));
                    Ok(0)
                }
                Verdict::DependentCertified { certificate } => {
                    println!("DependentCertified {certificate:?}");
                    Ok(0)
                }
                Verdict::Inconclusive { detail } => {
                    println!("Inconclusive: {detail}");
                    Ok(3)
                }
            }
        }
        IndepOp::Lattice { input } => {
            let system: LatticeSystem = from_json(&input, "lattice system")?;
            let (verdict, dims) = system.verdict()?;
            let dims = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
            println!("dims {dims}");
            match verdict {
                LatticeVerdict::GeometricallyIndependent => println!("GeometricallyIndependent"),
                LatticeVerdict::DependentAt { index } => println!("DependentAt index={index}"),
            }
            Ok(0)
        }
        IndepOp::TwoCurves {
            q,
            p1,
            p2,
            mmax,
            horizon,
        } => {
            let q: Int = q
                .trim()
                .parse()
                .map_err(|e| Error::Argument(format!("bad field size {q:?}: {e}")))?;
            let build = |arg: &str| -> Result<ZetaData, Error> {
                let tail = weil_tail(arg)?;
                let genus = tail.len() / 2;
                ZetaData::from_numerator(q.clone(), genus, OnePoly::new(tail))
            };
            let z1 = build(&p1)?;
            let z2 = build(&p2)?;
            let outcome = grothwitt::skolem::classify_two_curves(
                &z1,
                &z2,
                mmax.unwrap_or(cfg.m_max) as u64,
                horizon.unwrap_or(cfg.horizon),
            )?;
            match outcome.class {
                TwoCurvesClass::IsogenousJacobians { m } => println!("IsogenousJacobians m={m}"),
                TwoCurvesClass::BecomesSpecialBoth { m } => println!("BecomesSpecialBoth m={m}"),
                TwoCurvesClass::IndependentCertified => println!("IndependentCertified"),
            }
            if let Some(d) = outcome.diagnostics {
                println!("relation: {}", d.relation.render());
                println!("vanishes: {}", d.vanishes);
                if let Some((index, which)) = d.counterexample {
                    println!("counterexample: index {index}, {which}");
                }
                println!("flat: {},{}", d.flat[0], d.flat[1]);
            }
            Ok(0)
        }
    }
}

fn skolem(op: SkolemOp, cfg: &Config) -> Result<i32, Error> {
    match op {
        SkolemOp::Goodset { input, horizon } => {
            let m: MotivicMeasurePoly = from_json(&input, "measure")?;
            let horizon = horizon.unwrap_or(cfg.horizon);
            let zeros = ghost_zero_set(&m, horizon);
            println!("{}", to_json(&fit_good_set(&zeros, horizon)?));
        }
        SkolemOp::Localize {
            measures,
            factors,
            horizon,
        } => {
            let measures: Vec<MotivicMeasurePoly> = from_json(&measures, "measures")?;
            let factors: Vec<RelationPoly> = from_json(&factors, "factors")?;
            let loc =
                localize_irreducible_relation(&measures, &factors, horizon.unwrap_or(cfg.horizon))?;
            println!("modulus: {}", loc.modulus);
            println!("factor: {} ({})", loc.factor, factors[loc.factor].render());
        }
    }
    Ok(0)
}

fn dh(op: DhOp, cfg: &Config) -> Result<i32, Error> {
    match op {
        DhOp::Sigma { p, a, t } => println!("{}", grothwitt::dh::digit_sum(t, p, a)?),
        DhOp::Val { p, a, t } => println!("{}", grothwitt::dh::stickelberger_valuation(t, p, a)?),
        DhOp::Jacobi {
            p,
            a,
            t,
            j,
            bits,
            budget,
        } => {
            let sum = grothwitt::dh::jacobi_sum(p, a, t, j, budget.unwrap_or(cfg.enum_budget))?;
            let (re, im) = sum.evaluate(bits.unwrap_or(cfg.bits));
            println!("{}", approx_line("re", &re));
            println!("{}", approx_line("im", &im));
        }
        DhOp::Threshold { p, horizon } => {
            let t = grothwitt::dh::phi_threshold(p, horizon.unwrap_or(cfg.horizon))?;
            println!("threshold: {}", t.threshold);
            let failures = t.failures.iter().map(|n| n.to_string()).collect::<Vec<_>>();
            println!("failures: {}", failures.join(","));
        }
        DhOp::Matrix { p, n, gamma } => {
            let v = grothwitt::dh::valuation_matrix(p, n, gamma)?;
            println!(
                "X: [[{},{}],[{},{}]]",
                v.x[0][0], v.x[0][1], v.x[1][0], v.x[1][1]
            );
            println!("a: {}", v.a);
            println!("det: {}", v.det);
        }
    }
    Ok(0)
}

fn verify(suite: &str) -> Result<i32, Error> {
    let wanted: Vec<&str> = if suite == "all" {
        Vec::new()
    } else {
        suite.split(',').map(str::trim).collect()
    };
    let outcomes = grothwitt::verify::run_all_filtered(&wanted)?;
    let mut all = true;
    for outcome in &outcomes {
        println!("{}", outcome.line());
        all &= outcome.passed;
    }
    Ok(if all { 0 } else { 3 })
}
