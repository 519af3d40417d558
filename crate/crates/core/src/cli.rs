//! Command-line front end. Exit codes: 0 all checks passed, 1 a conclusion
//! check failed, 2 a hypothesis gate failed, 3 input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::covering::{fixed_data, lift_action, verify_covering, verify_rb_lemmas};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::homology::{boundary_matrices, integral_homology, mod_p_cohomology, universal_coefficients_check};
use crate::io;
use crate::pi_one::pi1_presentation;
use crate::sset::{cartesian_product, nerve_of_group, validate};
use crate::theorems::{instances::selftest, run_case, Outcome};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CONCLUSION: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kancover", version, about = "Regular covers and finite group actions on one-vertex simplicial sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the command's output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Suppress the summary printed alongside JSON output.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load files of any kind and check their invariants.
    Validate { paths: Vec<PathBuf> },
    /// The nerve of a builtin group (`Z3`, `S3`, `Z2xZ2`, ...) or a group file.
    Nerve {
        group: String,
        #[arg(long)]
        dim: usize,
    },
    /// Presentation of the fundamental group.
    Pi1 { complex: PathBuf },
    /// The regular cover along a quotient map, with covering checks.
    Cover {
        complex: PathBuf,
        #[arg(long)]
        quotient: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Lift an action on the base of a cover to the cover.
    Lift {
        cover: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Fixed subcomplexes of a lifted action and the subgroup Γ.
    Fixed {
        cover: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Integral homology, or mod-p cohomology with `--coeff`.
    Homology {
        complex: PathBuf,
        #[arg(long)]
        coeff: Option<u64>,
        #[arg(long)]
        max_deg: Option<usize>,
    },
    /// Cartesian product of two complexes.
    Product { x: PathBuf, y: PathBuf },
    /// Run the theorems listed in a case file.
    Verify {
        case: PathBuf,
        /// Override the case's check depth.
        #[arg(long)]
        depth: Option<usize>,
        /// Override the case's truncation.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Run the built-in invariant suite.
    Selftest,
}

/// Text for stdout (or `--out`), a summary for stderr, and the exit code.
struct Output {
    text: String,
    summary: String,
    code: i32,
}

impl Output {
    fn report(text: String, passed: bool) -> Self {
        Output {
            text,
            summary: String::new(),
            code: if passed { EXIT_PASS } else { EXIT_CONCLUSION },
        }
    }

    fn json(text: String, summary: String) -> Self {
        Output { text, summary, code: EXIT_PASS }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            if !cli.quiet && !out.summary.is_empty() {
                eprint!("{}", out.summary);
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &out.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return EXIT_INPUT;
                    }
                }
                None => print!("{}", out.text),
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::HypothesisFailed(_) => EXIT_HYPOTHESIS,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn default_depth(requested: Option<usize>, max_dim: usize) -> usize {
    requested.unwrap_or(2).min(max_dim.saturating_sub(1))
}

fn load_group_arg(spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.exists() {
        io::load_group(path)
    } else {
        FiniteGroup::named(spec)
    }
}

fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Validate { paths } => {
            let loaded = io::parse_inputs(paths)?;
            let mut text = String::new();
            for (p, l) in paths.iter().zip(&loaded) {
                writeln!(text, "{}: ok, {}", p.display(), l.describe()).unwrap();
            }
            Ok(Output::report(text, true))
        }
        Command::Nerve { group, dim } => {
            let g = load_group_arg(group)?;
            let nerve = nerve_of_group(&g, *dim)?;
            let x = nerve.presentation();
            let counts: Vec<String> = (0..=x.max_dim()).map(|n| x.generator_count(n).to_string()).collect();
            Ok(Output::json(
                io::to_canonical(&io::complex_file(x)),
                format!("nerve of {} up to dimension {dim}: generator counts [{}]\n", g.name(), counts.join(", ")),
            ))
        }
        Command::Pi1 { complex } => {
            let x = io::load_complex(complex)?;
            Ok(Output::report(pi1_presentation(&x)?.to_string(), true))
        }
        Command::Cover { complex, quotient, depth } => {
            let x = io::load_complex(complex)?;
            let q = io::load_quotient(quotient, &x)?;
            let c = crate::covering::build_cover(&x, &q)?;
            let mut report = validate(c.total());
            report.absorb(verify_covering(&c, default_depth(*depth, x.max_dim()))?);
            let mut out = Output::json(io::to_canonical(&io::complex_file(c.total())), report.to_string());
            out.code = if report.passed() { EXIT_PASS } else { EXIT_CONCLUSION };
            Ok(out)
        }
        Command::Lift { cover, action, depth } => {
            let c = io::load_cover(cover)?;
            let a = io::load_action(action, c.base())?;
            let l = lift_action(&c, &a)?;
            let (g, q) = (l.group(), c.group());
            let mut text = String::new();
            for (x, star) in l.induced().iter().enumerate() {
                let images: Vec<&str> = star.images().iter().map(|&b| q.element_name(b)).collect();
                writeln!(text, "{}_* = [{}]", g.element_name(x), images.join(", ")).unwrap();
            }
            let gamma: Vec<&str> = l.gamma().iter().map(|&b| q.element_name(b)).collect();
            writeln!(text, "Gamma = {{{}}}", gamma.join(", ")).unwrap();
            let report = verify_rb_lemmas(&c, &l, default_depth(*depth, c.total().max_dim()));
            write!(text, "{report}").unwrap();
            Ok(Output::report(text, report.passed()))
        }
        Command::Fixed { cover, action } => {
            let c = io::load_cover(cover)?;
            let a = io::load_action(action, c.base())?;
            let l = lift_action(&c, &a)?;
            let data = fixed_data(&c, &l)?;
            let q = c.group();
            let counts = |x: &crate::sset::SSetPresentation| {
                (0..=x.max_dim()).map(|n| x.generator_count(n).to_string()).collect::<Vec<_>>().join(", ")
            };
            let mut text = String::new();
            writeln!(text, "K^G: generator counts [{}]", counts(&data.k_g)).unwrap();
            writeln!(text, "E: generator counts [{}]", counts(&data.e)).unwrap();
            let gamma: Vec<&str> = data.gamma.iter().map(|&b| q.element_name(b)).collect();
            writeln!(text, "Gamma = {{{}}}", gamma.join(", ")).unwrap();
            write!(text, "{}", data.orbit_report).unwrap();
            Ok(Output::report(text, data.orbit_report.passed()))
        }
        Command::Homology { complex, coeff, max_deg } => {
            let x = io::load_complex(complex)?;
            let x = match max_deg {
                Some(d) if d + 1 < x.max_dim() => x.truncated(d + 1)?,
                _ => x,
            };
            let c = boundary_matrices(&x)?;
            let h = integral_homology(&c);
            let text = match coeff {
                None => h.to_string(),
                Some(p) => {
                    let m = mod_p_cohomology(&c, *p)?;
                    let uct = universal_coefficients_check(&h, &m);
                    format!("{m}{uct}")
                }
            };
            Ok(Output::report(text, true))
        }
        Command::Product { x, y } => {
            let (a, b) = (io::load_complex(x)?, io::load_complex(y)?);
            let p = cartesian_product(&a, &b)?;
            let counts: Vec<String> = (0..=p.max_dim()).map(|n| p.generator_count(n).to_string()).collect();
            Ok(Output::json(
                io::to_canonical(&io::complex_file(&p)),
                format!("`{}`: generator counts [{}]\n", p.name(), counts.join(", ")),
            ))
        }
        Command::Verify { case, depth, dim } => {
            let mut case = io::load_case(case)?;
            if depth.is_some() || dim.is_some() {
                let mut rebuilt = crate::theorems::TheoremCase::new(
                    case.name.clone(),
                    &case.complex,
                    case.quotient.clone(),
                    &case.action,
                    dim.unwrap_or(case.truncation),
                    depth.unwrap_or(case.check_depth),
                )?
                .with_theorems(&case.theorems);
                rebuilt.p = case.p;
                rebuilt.expected = case.expected.clone();
                case = rebuilt;
            }
            let reports = run_case(&case)?;
            let mut text = String::new();
            for r in &reports {
                write!(text, "{r}").unwrap();
                if let Some(expected) = case.expected.get(&r.theorem) {
                    let verdict = if *expected == r.outcome { "matches" } else { "differs" };
                    writeln!(text, "expected {expected}: {verdict}").unwrap();
                }
            }
            let outcome = Outcome::combine(reports.iter().map(|r| r.outcome));
            writeln!(text, "overall: {outcome}").unwrap();
            Ok(Output {
                text,
                summary: String::new(),
                code: outcome.exit_code(),
            })
        }
        Command::Selftest => {
            let reports = selftest()?;
            let mut text = String::new();
            for r in &reports {
                write!(text, "{r}").unwrap();
            }
            let passed = reports.iter().all(|r| r.passed());
            writeln!(text, "selftest: {}", if passed { "ok" } else { "FAILED" }).unwrap();
            Ok(Output::report(text, passed))
        }
    }
}
