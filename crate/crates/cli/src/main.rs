//! Command-line frontend.
//!
//! Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 input or
//! data error, 3 resource bound exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use trifactor_cli::report::{
    CoxeterRow, CoxeterTableResult, DioidResult, DioidRow, HeckeResult, ParabolicRow, Report,
    SquareDcResult, SuiteRow, TripleCheckResult, TripleCheckRow, VerifyAllResult,
};
use trifactor_cli::suites;
use trifactor_core::cosets::build_coset_space_bounded;
use trifactor_core::coxeter::{
    build_coxeter, parabolic_factorization_check_bounded, CoxeterType,
};
use trifactor_core::dioid::DoubleCosetDioid;
use trifactor_core::error::Error;
use trifactor_core::factor::{self, Method};
use trifactor_core::hecke;
use trifactor_core::limits;
use trifactor_core::perm::{load_perm_file, parse_cycles};

#[derive(Parser)]
#[command(name = "trifactor", version, about = "Double-coset factorization workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every randomized procedure.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trial budget for the probabilistic marker (default scales with rank).
    #[arg(long, global = true)]
    trials: Option<u32>,

    /// Include the two largest exceptional types in table commands.
    #[arg(long, global = true)]
    extended: bool,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Resource bound for enumerations and coset indices.
    #[arg(long, global = true)]
    bound: Option<u64>,

    /// Directory holding the shipped .perm files.
    #[arg(long, global = true, default_value = "data")]
    data: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Check which finite Coxeter groups are a product of three
    /// conjugates of a maximal parabolic, against the expected table.
    CoxeterTable,
    /// Search a group/subgroup pair for a double coset whose square is
    /// the whole group.
    SquareDc {
        group: PathBuf,
        subgroup: PathBuf,
        /// Confirm candidates with the randomized marker instead of the
        /// exact product.
        #[arg(long)]
        probabilistic: bool,
    },
    /// Evaluate the triple-product criterion `G = A A^x A`.
    TripleCheck {
        group: PathBuf,
        subgroup: PathBuf,
        /// Element in cycle notation; all double-coset representatives
        /// are scanned when omitted.
        #[arg(long)]
        element: Option<String>,
    },
    /// Intersection numbers and collapsed adjacency matrices.
    Hecke { group: PathBuf, subgroup: PathBuf },
    /// Dioid checks per Coxeter type (longest-element square plus a
    /// seeded axiom sample).
    DioidVerify {
        /// Single type symbol; the default sweep list runs when omitted.
        #[arg(long = "type")]
        type_symbol: Option<String>,
    },
    /// Run every verification suite.
    VerifyAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Input(_) | Error::Data(_) => 2,
                Error::Resource { .. } => 3,
                Error::Internal(_) => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn emit<T: serde::Serialize>(cli: &Cli, report: &Report<T>) -> Result<(), Error> {
    let json = report.to_json();
    match &cli.out {
        Some(path) => std::fs::write(path, json.as_bytes())
            .map_err(|e| Error::Data(format!("{}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::CoxeterTable => cmd_coxeter_table(cli),
        Command::SquareDc {
            group,
            subgroup,
            probabilistic,
        } => cmd_square_dc(cli, group, subgroup, *probabilistic),
        Command::TripleCheck {
            group,
            subgroup,
            element,
        } => cmd_triple_check(cli, group, subgroup, element.as_deref()),
        Command::Hecke { group, subgroup } => cmd_hecke(cli, group, subgroup),
        Command::DioidVerify { type_symbol } => cmd_dioid_verify(cli, type_symbol.as_deref()),
        Command::VerifyAll => cmd_verify_all(cli),
    }
}

fn index_bound(cli: &Cli) -> u64 {
    cli.bound.unwrap_or(limits::DEFAULT_INDEX_BOUND)
}

fn enum_bound(cli: &Cli) -> u64 {
    cli.bound.unwrap_or(limits::DEFAULT_ENUM_BOUND)
}

fn cmd_coxeter_table(cli: &Cli) -> Result<bool, Error> {
    let mut rows = Vec::new();
    let mut all_match = true;
    for (symbol, expected) in suites::table_for(cli.extended) {
        let t: CoxeterType = symbol.parse()?;
        let sys = build_coxeter(t)?;
        let check = parabolic_factorization_check_bounded(&sys, index_bound(cli))?;
        let parabolics = check
            .per_parabolic
            .iter()
            .map(|v| ParabolicRow {
                omitted: v.omitted,
                index: v.index,
                rank: v.rank,
                witness_label: v.witness.as_ref().map(|(label, _)| *label),
            })
            .collect();
        let matches_expected = check.overall == expected;
        all_match &= matches_expected;
        eprintln!(
            "{symbol}: {} (expected {})",
            check.overall, expected
        );
        rows.push(CoxeterRow {
            type_symbol: symbol.to_string(),
            group_order: sys.order(),
            expected,
            verdict: check.overall,
            matches_expected,
            parabolics,
        });
    }
    let result = CoxeterTableResult {
        extended: cli.extended,
        rows,
        all_match,
    };
    emit(cli, &Report::new("coxeter-table", cli.seed, result))?;
    Ok(all_match)
}

fn cmd_square_dc(
    cli: &Cli,
    group: &Path,
    subgroup: &Path,
    probabilistic: bool,
) -> Result<bool, Error> {
    let g = load_perm_file(group)?.group;
    let a = load_perm_file(subgroup)?.group;
    let cs = build_coset_space_bounded(&g, &a, index_bound(cli), enum_bound(cli))?;
    let method = if probabilistic {
        Method::Probabilistic {
            trials: cli.trials.unwrap_or_else(|| factor::default_trials(cs.rank())),
            seed: cli.seed,
        }
    } else {
        Method::Exact
    };
    let report = factor::run_square_dc(&cs, method)?;
    let (method_name, trials) = match &report.method {
        Method::Exact => ("exact", None),
        Method::Probabilistic { trials, .. } => ("probabilistic", Some(*trials)),
    };
    let result = SquareDcResult {
        group: group.display().to_string(),
        subgroup: subgroup.display().to_string(),
        group_order: g.order(),
        subgroup_order: a.order(),
        index: cs.index(),
        rank: cs.rank(),
        subdegrees: cs.subdegrees(),
        method: method_name.to_string(),
        trials,
        witness_label: report.witness_label,
        witness: report.witness.as_ref().map(|w| w.to_string()),
    };
    match &result.witness {
        Some(w) => eprintln!(
            "rank {}: double coset {} (representative {w}) squares to the group",
            result.rank,
            result.witness_label.unwrap()
        ),
        None => eprintln!("rank {}: no squaring double coset", result.rank),
    }
    emit(cli, &Report::new("square-dc", cli.seed, result))?;
    Ok(true)
}

fn cmd_triple_check(
    cli: &Cli,
    group: &Path,
    subgroup: &Path,
    element: Option<&str>,
) -> Result<bool, Error> {
    let g = load_perm_file(group)?.group;
    let a = load_perm_file(subgroup)?.group;
    let cs = build_coset_space_bounded(&g, &a, index_bound(cli), enum_bound(cli))?;

    let element_verdict = match element {
        Some(text) => {
            let x = parse_cycles(g.degree(), text)?;
            Some(factor::triple_check(&cs, &x)?)
        }
        None => None,
    };
    let mut per_label = Vec::new();
    for label in 0..cs.rank() as u32 {
        let rep = cs.transversal(cs.dc_rep(label));
        per_label.push(TripleCheckRow {
            label,
            representative: rep.to_string(),
            verdict: factor::triple_check(&cs, &rep)?,
        });
    }
    let any = per_label.iter().any(|r| r.verdict);
    eprintln!(
        "rank {}: {} double coset(s) satisfy the triple criterion",
        cs.rank(),
        per_label.iter().filter(|r| r.verdict).count()
    );
    let result = TripleCheckResult {
        group: group.display().to_string(),
        subgroup: subgroup.display().to_string(),
        rank: cs.rank(),
        element: element.map(str::to_string),
        element_verdict,
        per_label,
        any,
    };
    emit(cli, &Report::new("triple-check", cli.seed, result))?;
    Ok(true)
}

fn cmd_hecke(cli: &Cli, group: &Path, subgroup: &Path) -> Result<bool, Error> {
    let g = load_perm_file(group)?.group;
    let a = load_perm_file(subgroup)?.group;
    let cs = build_coset_space_bounded(&g, &a, index_bound(cli), enum_bound(cli))?;
    let ca = hecke::intersection_numbers(&cs)?;
    let result = HeckeResult {
        group: group.display().to_string(),
        subgroup: subgroup.display().to_string(),
        rank: ca.rank(),
        subdegrees: ca.subdegrees().to_vec(),
        inverse_labels: (0..cs.rank() as u32).map(|j| cs.inverse_label(j)).collect(),
        matrices: ca.matrices(),
        tensor: ca.tensor().clone(),
        squaring_labels: ca.squaring_labels()?,
    };
    eprintln!(
        "rank {}: squaring labels {:?}",
        result.rank, result.squaring_labels
    );
    emit(cli, &Report::new("hecke", cli.seed, result))?;
    Ok(true)
}

fn cmd_dioid_verify(cli: &Cli, type_symbol: Option<&str>) -> Result<bool, Error> {
    let symbols: Vec<String> = match type_symbol {
        Some(s) => vec![s.to_string()],
        None => suites::LONGEST_SQUARE_TYPES.iter().map(|s| s.to_string()).collect(),
    };
    let mut rows = Vec::new();
    let mut all_ok = true;
    for symbol in &symbols {
        let t: CoxeterType = symbol.parse()?;
        let sys = build_coxeter(t)?;
        let d = DoubleCosetDioid::new(&sys, enum_bound(cli).max(100_000))?;
        let longest = d.verify_theorem_longest_square()?;

        // seeded axiom sample, sized to the group
        let mut rng = trifactor_core::rng::seeded(cli.seed, trifactor_core::rng::stream::DIOID);
        let mut axioms_ok = true;
        let mut axiom_checks = 0u64;
        use rand::Rng;
        for _ in 0..50 {
            let pick = |rng: &mut dyn rand::RngCore| {
                let idxs: Vec<u32> = (0..d.size() as u32)
                    .filter(|_| rng.random_bool(0.25))
                    .collect();
                d.from_indices(&idxs)
            };
            let a = pick(&mut rng);
            let b = pick(&mut rng);
            let c = pick(&mut rng);
            let assoc = d.mult(&d.mult(&a, &b)?, &c)? == d.mult(&a, &d.mult(&b, &c)?)?;
            let dist = d.mult(&a, &d.add(&b, &c)?)?
                == d.add(&d.mult(&a, &b)?, &d.mult(&a, &c)?)?;
            let star = d.star(&d.mult(&a, &b)?)?
                == d.mult(&d.star(&b)?, &d.star(&a)?)?;
            axiom_checks += 3;
            axioms_ok &= assoc && dist && star;
        }
        let ok = longest && axioms_ok;
        all_ok &= ok;
        eprintln!("{symbol}: longest-square {longest}, axioms {axioms_ok}");
        rows.push(DioidRow {
            type_symbol: symbol.clone(),
            group_order: sys.order(),
            longest_square_covers: longest,
            axiom_checks,
            axioms_ok,
        });
    }
    let result = DioidResult { rows, all_ok };
    emit(cli, &Report::new("dioid-verify", cli.seed, result))?;
    Ok(all_ok)
}

fn cmd_verify_all(cli: &Cli) -> Result<bool, Error> {
    let outcomes = suites::run_all(&cli.data, cli.seed, cli.extended)?;
    let mut rows = Vec::new();
    let mut all_passed = true;
    for o in &outcomes {
        eprintln!(
            "{}: {} ({} checks{})",
            o.name,
            if o.passed { "pass" } else { "FAIL" },
            o.checks,
            if o.failures.is_empty() {
                String::new()
            } else {
                format!(", {} failures", o.failures.len())
            }
        );
        all_passed &= o.passed;
        rows.push(SuiteRow {
            name: o.name.clone(),
            passed: o.passed,
            checks: o.checks,
            failures: o.failures.clone(),
        });
    }
    let result = VerifyAllResult {
        suites: rows,
        all_passed,
    };
    emit(cli, &Report::new("verify-all", cli.seed, result))?;
    Ok(all_passed)
}
