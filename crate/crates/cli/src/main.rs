//! `gkgrowth`: GK dimensions, growth polynomials and brute-force checks.

mod problem;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gkgrowth_core::cuspidal::{
    ai_unramified_quadratic, cusp_leading, gl2_growth, level_zero, murnaghan_ramified, murnaghan_unramified,
};
use gkgrowth_core::growth::{exact_growth, gk_dimension, leading_term};
use gkgrowth_core::orbits::growth_to_expansion;
use gkgrowth_core::segments::poset_below_with_limit;
use gkgrowth_core::segments::DEFAULT_NODE_LIMIT;
use gkgrowth_core::sln::{sl_leading_term, twist_stabilizer_count};
use gkgrowth_core::{Error, Gl2Case, LeadingTerm, XLaurent};

use problem::{read_problem, Problem};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        Self { code: 2, msg: msg.into() }
    }

    pub fn semantic(msg: impl Into<String>) -> Self {
        Self { code: 3, msg: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::UnsupportedMultisegment(_)
            | Error::InsufficientCuspidalData(_)
            | Error::UnsupportedSize(_)
            | Error::AmbiguousExpansion(_) => 4,
            Error::SizeLimitExceeded { .. } => 5,
            _ => 3,
        };
        Self { code, msg: e.to_string() }
    }
}

#[derive(Parser)]
#[command(name = "gkgrowth", version, about = "Growth of K_N-fixed vectors in GL_n representations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// GK dimension and leading coefficient of the Langlands quotient.
    Gk { file: PathBuf },
    /// Exact growth polynomial in X = q^(N-1).
    Exact { file: PathBuf },
    /// Poset of multisegments below the given one.
    Poset {
        file: PathBuf,
        /// Print Graphviz instead of a node list.
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        max_nodes: usize,
    },
    /// Compare closed forms with brute-force counts over Z/p^N.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3])]
        primes: Vec<u64>,
        /// Largest level N; defaults to 2 for matrix suites and 6 for level0.
        #[arg(long = "max-N")]
        max_level: Option<u32>,
        /// Values of q for the level0 suite.
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 4, 5])]
        q_values: Vec<u64>,
    },
    /// Growth polynomial of a built-in cuspidal family.
    Cuspidal {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 0)]
        j: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        /// GL_2 case.
        #[arg(long = "case", value_enum, default_value_t = CaseArg::Level0)]
        case: CaseArg,
        #[arg(long, default_value_t = 1)]
        level: u32,
        /// Also print the character expansion as JSON.
        #[arg(long)]
        expansion: bool,
    },
    /// Integer dimension at q and N.
    Eval {
        file: PathBuf,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long = "N")]
        level: Option<u32>,
    },
    /// Leading term for SL_n using the file's twist table.
    Sl { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Flags,
    Cartan,
    Level0,
    Identities,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Leading,
    #[value(name = "murnaghan_unr")]
    MurnaghanUnr,
    #[value(name = "murnaghan_ram")]
    MurnaghanRam,
    Level0,
    Gl2,
    #[value(name = "ai_quad")]
    AiQuad,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Level0,
    E2,
    E1,
}

fn warn(msg: &str) {
    eprintln!("warning: {msg}");
}

fn render_leading(lt: &LeadingTerm) -> String {
    lt.coeff.render("q")
}

fn nonempty(p: &Problem) -> Result<(), CliError> {
    if p.multisegment.is_empty() {
        return Err(CliError::semantic("multisegment is empty"));
    }
    Ok(())
}

fn growth_of(p: &Problem) -> Result<XLaurent, CliError> {
    nonempty(p)?;
    Ok(exact_growth(&p.multisegment, &p.sources)?)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Gk { file } => {
            let p = read_problem(&file)?;
            nonempty(&p)?;
            let a = &p.multisegment;
            let lt = leading_term(a);
            println!(
                "gk = {}, coeff = {}, generic = {}",
                gk_dimension(a),
                render_leading(&lt),
                a.is_generic()
            );
        }
        Cmd::Exact { file } => {
            let p = read_problem(&file)?;
            println!("{}", growth_of(&p)?.render("q"));
        }
        Cmd::Poset { file, dot, max_nodes } => {
            let p = read_problem(&file)?;
            nonempty(&p)?;
            let poset = poset_below_with_limit(&p.multisegment, max_nodes)?;
            if dot {
                print!("{}", poset.to_dot());
            } else {
                println!("{} nodes, {} edges", poset.len(), poset.hasse_edges.len());
                for (i, m) in poset.nodes.iter().enumerate() {
                    println!("{i}: {} gk = {}", m.display_normalized(), gk_dimension(m));
                }
                for (u, v) in &poset.hasse_edges {
                    println!("{u} -> {v}");
                }
            }
        }
        Cmd::Verify { suite, max_n, primes, max_level, q_values } => {
            let ok = verify::run(suite, max_n, &primes, max_level, &q_values)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Cmd::Cuspidal { kind, n, j, ell, case, level, expansion } => {
            let need_n = || n.ok_or_else(|| CliError::semantic("--n is required for this kind"));
            let (g, size) = match kind {
                Kind::Leading => {
                    let n = need_n()?;
                    let (c, e) = cusp_leading(n);
                    println!("{} X^{e} (leading term only)", c.render("q"));
                    return Ok(0);
                }
                Kind::MurnaghanUnr => {
                    let n = need_n()?;
                    (murnaghan_unramified(n, j)?, n)
                }
                Kind::MurnaghanRam => {
                    let n = need_n()?;
                    let r = murnaghan_ramified(n, j)?;
                    match &r.in_q {
                        Some(g) => {
                            if !g.is_integral() {
                                warn("coefficients are not polynomials in q");
                            }
                            (g.clone(), n)
                        }
                        None => {
                            warn(&format!("exponents are not integral; printed in s = q^(1/{})", 2 * n));
                            println!("{}", r.in_s.render("s"));
                            return Ok(0);
                        }
                    }
                }
                Kind::Level0 => {
                    let n = need_n()?;
                    (level_zero(n)?, n)
                }
                Kind::Gl2 => {
                    let case = match case {
                        CaseArg::Level0 => Gl2Case::Level0,
                        CaseArg::E2 => Gl2Case::E2 { level },
                        CaseArg::E1 => Gl2Case::E1 { level },
                    };
                    (gl2_growth(case)?, 2)
                }
                Kind::AiQuad => (ai_unramified_quadratic(ell), 2),
            };
            println!("{}", g.render("q"));
            if expansion {
                let ce = growth_to_expansion(&g, size)?;
                println!("{}", serde_json::to_string(&ce).map_err(|e| CliError::semantic(e.to_string()))?);
            }
        }
        Cmd::Eval { file, q, level } => {
            let p = read_problem(&file)?;
            let (q0, big_n) = match (q, level, p.eval) {
                (Some(q), Some(n), _) => (q, n),
                (q, n, Some((fq, fnn))) => (q.unwrap_or(fq), n.unwrap_or(fnn)),
                _ => return Err(CliError::semantic("evaluation point needs --q and --N or an `eval` entry")),
            };
            let g = growth_of(&p)?;
            if let Some(t) = p.threshold() {
                if big_n < t {
                    warn(&format!("N = {big_n} is below the source threshold {t}; value may be wrong"));
                }
            }
            println!("{}", g.eval_dim(q0, big_n)?);
        }
        Cmd::Sl { file } => {
            let p = read_problem(&file)?;
            nonempty(&p)?;
            let table = p
                .twist
                .as_ref()
                .ok_or_else(|| CliError::semantic("problem file has no `twist` table"))?;
            let total = p.multisegment.total_size();
            if table.n() != total {
                warn(&format!("twist table has {} characters but the multisegment has size {total}", table.n()));
            }
            let d = twist_stabilizer_count(&p.multisegment, table)?;
            let lt = sl_leading_term(&p.multisegment, d)?;
            println!("d = {d}, gk = {}, coeff = {}", lt.exponent, render_leading(&lt));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.msg);
            ExitCode::from(e.code)
        }
    }
}
