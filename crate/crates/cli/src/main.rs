use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use efl_core::forest::{canonicalize, supporting_forest};
use efl_core::ibtree::{apply_labeling, sum_weights, tree_stats};
use efl_core::perm::{derangement_poly, eulerian_by_enumeration};
use efl_core::verify::{reports_to_json, run_checks, Status};
use efl_core::{
    eulerian_via_grammar, gamma_expand, Budgets, CheckId, EulerianForm, IncTree, LabelScheme,
    Monomial, Perm, RationalPoly, VarId,
};

/// Exact (α,β)-Eulerian polynomials, γ-coefficients, permutation statistics
/// and identity verification.
#[derive(Debug, Parser)]
#[command(name = "efl", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "EFL_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print A_n.
    Eulerian {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Route::Grammar)]
        route: Route,
        /// Print A*_n, which is A_n with x and y exchanged.
        #[arg(long)]
        star: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print γ-coefficients, one line per block.
    Gamma {
        #[arg(long, value_enum)]
        family: GammaFamily,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the statistics and cycle form of a permutation.
    Stats {
        /// One-line word, e.g. "8 4 9 6 1 2 5 3 7".
        #[arg(long)]
        perm: Perm,
    },
    /// Print the increasing binary tree of a permutation with its labels.
    Tree {
        #[arg(long)]
        perm: Perm,
        #[arg(long, value_enum, default_value_t = Labeling::Abab)]
        labeling: Labeling,
    },
    /// Print the supporting forest and canonical plane forest of a permutation.
    Forest {
        #[arg(long)]
        perm: Perm,
    },
    /// Run the identity checks; exits 1 if any fails.
    Verify {
        /// Run only this check (e.g. T24_planeForest).
        #[arg(long)]
        check: Option<CheckId>,
        /// Largest n; each check is further capped by its budget.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        json: bool,
        /// Include per-check elapsed_ms.
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = Budgets::default().grammar)]
        budget_grammar: usize,
        #[arg(long, default_value_t = Budgets::default().permutations)]
        budget_perm: usize,
        #[arg(long, default_value_t = Budgets::default().forests)]
        budget_forest: usize,
        #[arg(long, default_value_t = Budgets::default().derangements)]
        budget_derangement: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Route {
    Grammar,
    Enum,
    Tree,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GammaFamily {
    AlphaEulerian,
    Derangement,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Labeling {
    Abab,
    Mod1,
    Mod2,
    Axyz,
}

impl From<Labeling> for LabelScheme {
    fn from(l: Labeling) -> Self {
        match l {
            Labeling::Abab => LabelScheme::AbAlphaBeta,
            Labeling::Mod1 => LabelScheme::Modified1,
            Labeling::Mod2 => LabelScheme::Modified2,
            Labeling::Axyz => LabelScheme::Axyz,
        }
    }
}

const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn eulerian(n: usize, route: Route) -> Result<RationalPoly, String> {
    Ok(match route {
        Route::Grammar => eulerian_via_grammar(n).map_err(|e| e.to_string())?,
        Route::Enum => eulerian_by_enumeration(n, EulerianForm::MinForm),
        Route::Tree => {
            let ab = Monomial::from_pairs(&[(VarId::A, 1), (VarId::B, 1)]);
            sum_weights(n + 1, LabelScheme::AbAlphaBeta)
                .map_err(|e| e.to_string())?
                .divide_exact_by_monomial(&ab)
                .map_err(|e| e.to_string())?
        }
    })
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Eulerian {
            n,
            route,
            star,
            json,
        } => {
            let mut a = eulerian(n, route)?;
            if star {
                a = a.swap_vars(VarId::X, VarId::Y);
            }
            if json {
                println!("{}", a.to_json());
            } else {
                println!("{a}");
            }
        }
        Command::Gamma { family, n, json } => {
            let p = match family {
                GammaFamily::AlphaEulerian => eulerian_via_grammar(n)
                    .map_err(|e| e.to_string())?
                    .substitute_pairs(&[(VarId::Beta, RationalPoly::var(VarId::Alpha))]),
                GammaFamily::Derangement => derangement_poly(n),
            };
            let g = gamma_expand(&p).map_err(|e| e.to_string())?;
            if json {
                let rows: Vec<_> = g
                    .blocks
                    .iter()
                    .map(|((rest, d), gammas)| {
                        serde_json::json!({
                            "rest": rest.to_string(),
                            "d": d,
                            "gamma": gammas.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(rows));
            } else {
                for ((rest, d), gammas) in &g.blocks {
                    let cs: Vec<_> = gammas.iter().map(|c| c.to_string()).collect();
                    println!("{rest} d={d}: {}", cs.join(" "));
                }
            }
        }
        Command::Stats { perm } => {
            println!("{}", perm.statistics());
            println!("cycles={}", perm.to_cycles());
        }
        Command::Tree { perm, labeling } => {
            let tree = IncTree::from_perm(&perm).map_err(|e| e.to_string())?;
            let labeled = apply_labeling(&tree, labeling.into());
            let leaves: Vec<_> = labeled.leaves.iter().map(|l| l.to_string()).collect();
            let vertices: Vec<_> = labeled
                .vertices
                .iter()
                .filter_map(|(v, _, l)| l.map(|l| format!("{v}:{l}")))
                .collect();
            let s = tree_stats(&tree);
            println!("tree: {tree}");
            println!("leaves: {}", leaves.join(" "));
            println!("vertices: {}", vertices.join(" "));
            println!(
                "xleaf={} yleaf={} peaks={} alpha={} beta={}",
                s.xleaf, s.yleaf, s.peaks, s.n_alpha, s.n_beta
            );
            println!("weight: {}", labeled.weight());
        }
        Command::Forest { perm } => {
            let tree = IncTree::from_perm(&perm).map_err(|e| e.to_string())?;
            let forest = supporting_forest(&tree).map_err(|e| e.to_string())?;
            println!("supporting: {forest}");
            println!("rescaled: {}", forest.shifted(-1));
            println!("plane: {}", canonicalize(&forest));
        }
        Command::Verify {
            check,
            max_n,
            json,
            timings,
            budget_grammar,
            budget_perm,
            budget_forest,
            budget_derangement,
        } => {
            let budgets = Budgets {
                grammar: budget_grammar,
                permutations: budget_perm,
                forests: budget_forest,
                derangements: budget_derangement,
            };
            let ids = match check {
                Some(id) => vec![id],
                None => CheckId::ALL.to_vec(),
            };
            let reports = run_checks(&ids, max_n, &budgets).map_err(|e| e.to_string())?;
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            if json {
                println!("{}", reports_to_json(&reports, timings));
            } else {
                for r in &reports {
                    let status = if r.passed() { "PASS" } else { "FAIL" };
                    let mut line = format!("{status} {} n={}", r.id, r.n);
                    if timings {
                        line.push_str(&format!(" {}ms", r.elapsed.as_millis()));
                    }
                    if let Some(w) = &r.witness {
                        line.push_str(&format!(" witness={w}"));
                    }
                    println!("{line}");
                }
                println!("{} checks, {} failed", reports.len(), failed);
            }
            return Ok(u8::from(failed > 0));
        }
    }
    Ok(0)
}
