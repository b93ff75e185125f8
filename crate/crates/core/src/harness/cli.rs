//! `middom` command line. Exit codes: 0 success, 1 verification or solve
//! failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::io::{read_graph, write_graph};
use super::{init_workers, nordhaus_gaddum_scan, reports_to_csv, verify_theorem, Grid, VerificationReport};
use crate::error::{Error, Result};
use crate::families::{generate, Family, FamilySpec};
use crate::formulas::{closed_form, FormulaValue, Params, TheoremId};
use crate::graph::Graph;
use crate::operators::middle_graph;
use crate::solver::{domination_number, middle_total_domination, total_domination_number, SolveResult};

#[derive(Parser, Debug)]
#[command(name = "middom", version, about = "Middle graphs and their (total) domination numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family member as an edge list
    Gen {
        family: Family,
        /// Family parameters, e.g. `6` for path 6 or `2 3` for complete-bipartite
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the middle graph of an edge list
    Middle {
        /// Input file, `-` for stdin
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Total domination number and a witness
    #[command(name = "gamma-t")]
    GammaT {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Evaluate on the middle graph of the input
        #[arg(long)]
        middle: bool,
    },
    /// Domination number and a witness
    Gamma {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        middle: bool,
    },
    /// Run verification campaigns (`all` or a theorem id)
    Verify {
        theorem: String,
        /// Cap every order range of the grid
        #[arg(long)]
        max_n: Option<usize>,
        /// Alternative grid file
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive Nordhaus–Gaddum scan over labeled graphs of order n
    #[command(name = "ng-scan")]
    NgScan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Formula against solver over a range of the family parameter
    Table {
        family: Family,
        /// Inclusive range `a..b`
        #[arg(long)]
        range: String,
        /// First side for complete-bipartite; the range then runs over the second
        #[arg(long, default_value_t = 2)]
        n1: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
}

impl clap::ValueEnum for Family {
    fn value_variants<'a>() -> &'a [Self] {
        &Family::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn cli_main<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    init_workers();
    match run(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_input(path: &PathBuf) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Io(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
    };
    read_graph(&text)
}

fn emit(text: &str, output: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

fn print_solution(g: &Graph, r: &SolveResult, out: &mut dyn Write) -> Result<()> {
    let names: Vec<String> = r.witness.iter().map(|v| g.label(v).to_string()).collect();
    let text = format!("{}\nwitness: {}\n", r.value, names.join(" "));
    emit(&text, None, out)
}

fn run(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen { family, params, output } => {
            let g = generate(&FamilySpec::new(family, params)?)?;
            emit(&write_graph(&g), output.as_ref(), out)?;
        }
        Command::Middle { input, output } => {
            let g = read_input(&input)?;
            emit(&write_graph(middle_graph(&g).graph()), output.as_ref(), out)?;
        }
        Command::GammaT { input, middle } => {
            let g = read_input(&input)?;
            if middle {
                let r = middle_total_domination(&g)?;
                print_solution(middle_graph(&g).graph(), &r, out)?;
            } else {
                print_solution(&g, &total_domination_number(&g)?, out)?;
            }
        }
        Command::Gamma { input, middle } => {
            let g = read_input(&input)?;
            let g = if middle { middle_graph(&g).into_graph() } else { g };
            print_solution(&g, &domination_number(&g)?, out)?;
        }
        Command::Verify {
            theorem,
            max_n,
            grid,
            format,
        } => {
            let mut g = match grid {
                Some(p) => Grid::from_toml(
                    &std::fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                )?,
                None => Grid::standard(),
            };
            if let Some(m) = max_n {
                g = g.with_max_n(m);
            }
            let ids: Vec<TheoremId> = if theorem == "all" {
                TheoremId::ALL.to_vec()
            } else {
                vec![theorem.parse()?]
            };
            let reports: Vec<VerificationReport> = ids.iter().map(|&t| verify_theorem(t, &g)).collect();
            let text = match format {
                Format::Csv => reports_to_csv(&reports)?,
                Format::Text => {
                    let mut s: String = reports.iter().map(VerificationReport::to_text).collect();
                    let good = reports.iter().filter(|r| r.passed()).count();
                    let _ = writeln!(s, "{good}/{} theorems pass", reports.len());
                    s
                }
            };
            emit(&text, None, out)?;
            return Ok(if reports.iter().all(VerificationReport::passed) { 0 } else { 1 });
        }
        Command::NgScan { n, format } => {
            let scan = nordhaus_gaddum_scan(n)?;
            let bad = scan.violations().count();
            let mut s = String::new();
            match format {
                Format::Csv => {
                    s.push_str("encoding,gt_g,gt_gbar,sum,product,status\n");
                    for r in &scan.records {
                        let st = if r.holds() { "pass" } else { "fail" };
                        let _ = writeln!(s, "{},{},{},{},{},{st}", r.encoding, r.gt_g, r.gt_gbar, r.sum, r.product);
                    }
                    for x in &scan.excluded {
                        let v = |o: Option<usize>| o.map_or(String::new(), |v| v.to_string());
                        let _ = writeln!(s, "{},{},{},,,excluded", x.encoding, v(x.gt_g), v(x.gt_gbar));
                    }
                }
                Format::Text => {
                    let b = scan.records.first().map(|r| r.bounds);
                    let _ = writeln!(
                        s,
                        "n={n}: {} graphs in scope, {} excluded, {bad} violations",
                        scan.records.len(),
                        scan.excluded.len()
                    );
                    if let Some(b) = b {
                        let _ = writeln!(
                            s,
                            "bounds: sum in [{}, {}], product in [{}, {}]",
                            b.sum_lo, b.sum_hi, b.product_lo, b.product_hi
                        );
                    }
                    for r in scan.violations() {
                        let _ = writeln!(s, "violation {}: {} {}", r.encoding, r.gt_g, r.gt_gbar);
                    }
                }
            }
            emit(&s, None, out)?;
            return Ok(if bad == 0 { 0 } else { 1 });
        }
        Command::Table {
            family,
            range,
            n1,
            format,
        } => {
            let (lo, hi) = parse_range(&range)?;
            let mut rows = Vec::new();
            for n in lo..=hi {
                let params = if family == Family::CompleteBipartite { vec![n1, n] } else { vec![n] };
                let g = generate(&FamilySpec::new(family, params)?)?;
                let formula = family_formula(family, n1, n)?;
                let solver = middle_total_domination(&g)?.value;
                rows.push((n, formula, solver));
            }
            let mut s = String::new();
            match format {
                TableFormat::Csv => s.push_str("n,formula,solver,match\n"),
                TableFormat::Markdown => s.push_str("| n | formula | solver | match |\n|---|---|---|---|\n"),
            }
            let mut all = true;
            for (n, f, v) in rows {
                let ok = f.contains(v);
                all &= ok;
                let _ = match format {
                    TableFormat::Csv => writeln!(s, "{n},{f},{v},{ok}"),
                    TableFormat::Markdown => writeln!(s, "| {n} | {f} | {v} | {ok} |"),
                };
            }
            emit(&s, None, out)?;
            return Ok(if all { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::param("range", format!("expected `a..b`, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// The closed form for `γ_t(M(·))` of a family member.
fn family_formula(family: Family, n1: usize, n: usize) -> Result<FormulaValue> {
    let (t, p) = match family {
        Family::Path => (TheoremId::PathFormula, Params::Order(n)),
        Family::Cycle | Family::Wheel => (TheoremId::FamilyCorollary, Params::Order(n)),
        Family::Complete => (TheoremId::CompleteFormula, Params::Order(n)),
        Family::Star => (TheoremId::StarFormula, Params::Order(n)),
        Family::DoubleStar => (TheoremId::DoubleStarFormula, Params::Order(n)),
        Family::Friendship => (TheoremId::FriendshipFormula, Params::Order(n)),
        Family::CompleteBipartite => (TheoremId::CompleteBipartiteFormula, Params::Bipartite { n1, n2: n }),
    };
    Ok(closed_form(t, &p)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..10").unwrap(), (3, 10));
        assert_eq!(parse_range("3..=4").unwrap(), (3, 4));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
