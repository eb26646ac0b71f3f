//! `nilp` — exact computations on structure-constant nilpotent Lie algebras.
//!
//! Exit codes: 0 when every requested check passes, 1 when a computation
//! precondition fails or a requested check does not hold (the module error
//! name is printed), 2 for usage errors including unreadable or malformed
//! input files.

use clap::{Parser, Subcommand};
use nilp_core::cochain::AlternatingCochain;
use nilp_core::cohomology::{self, ce_homology_dims, cohomology_dims_hc, rigidity_certificate};
use nilp_core::deform::{
    deformation_conditions, extract_deformation_maximal, linear_deformation, variety_membership,
    DeformationProblem,
};
use nilp_core::interchange;
use nilp_core::lie::StructureTensor;
use nilp_core::operad;
use nilp_core::rational::{format_rational, parse_rational};
use nilp_core::{catalog, parallel};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nilp", version, about = "Exact tools for nilpotent Lie algebras")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the sampled characteristic-vector search
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random samples in the characteristic-vector search
    #[arg(long, global = true, default_value_t = 16)]
    samples: usize,
    /// Disable the data-parallel code paths
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jacobi check, nilindex and the associativity-family flags
    Verify { file: PathBuf },
    /// Characteristic sequence and descending central series
    Invariants { file: PathBuf },
    /// Degree-2 deformation cohomology dimensions and the rigidity flag
    Cohomology { file: PathBuf },
    /// Homology dimensions of the exterior-algebra complex
    Homology { file: PathBuf },
    /// Operations on the bundled classification catalogs
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Operad dimension computations
    Operad {
        #[command(subcommand)]
        action: OperadCmd,
    },
    /// Linear deformations of two-step nilpotent algebras
    Deform {
        #[command(subcommand)]
        action: DeformCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Verify catalog entries (Jacobi, expected nilindex, invariants)
    Verify {
        /// Verify every entry
        #[arg(long)]
        all: bool,
    },
    /// Print the invariant table
    Table,
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Dual operad dimensions d_1 .. d_kmax from the recurrence
    DualDims {
        #[arg(long)]
        kmax: usize,
    },
    /// Check the Koszul functional equation to the given order
    KoszulCheck {
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// The arity-4 dimension constants of the cubic operads
    CubicDims,
}

#[derive(Subcommand)]
enum DeformCmd {
    /// Normalise an algebra with maximal characteristic sequence into
    /// model + cocycle form; emits {basis_change, phi, conditions} as JSON
    Extract { file: PathBuf },
    /// Evaluate the deformation conditions for a base and a direction
    Check {
        base: PathBuf,
        phi: PathBuf,
        /// Deformation parameter, e.g. 1 or 3/2
        #[arg(long, default_value = "1")]
        t: String,
    },
}

/// A failure with a chosen process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

fn load_algebra(path: &Path) -> Result<(Option<String>, StructureTensor), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    interchange::parse_algebra(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_cochain(path: &Path) -> Result<AlternatingCochain, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    interchange::parse_cochain(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn seq_string(parts: &[usize]) -> String {
    format!(
        "({})",
        parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    )
}

fn cmd_verify(cli: &Cli, file: &Path) -> Result<(), Failure> {
    let (name, g) = load_algebra(file)?;
    let defects = g.jacobi_defect();
    let jacobi_ok = defects.is_empty();
    let nilindex = if jacobi_ok { g.nilindex().ok() } else { None };
    let lie_nilpotent = jacobi_ok && nilindex.is_some();
    let flags = if lie_nilpotent {
        Some((
            g.check_associative(),
            g.check_cubic_associative(),
            (1u8..=6).map(|law| g.check_gi_associative(law)).collect::<Vec<bool>>(),
            g.check_triple_total_associative(),
        ))
    } else {
        None
    };
    if cli.json {
        let report = json!({
            "name": name,
            "dim": g.dim(),
            "jacobi_ok": jacobi_ok,
            "jacobi_defects": defects.len(),
            "nilindex": nilindex,
            "associative": flags.as_ref().map(|f| f.0),
            "cubic_associative": flags.as_ref().map(|f| f.1),
            "gi_associative": flags.as_ref().map(|f| f.2.clone()),
            "triple_total_associative": flags.as_ref().map(|f| f.3),
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    } else {
        println!("algebra: {} (dim {})", name.as_deref().unwrap_or("<unnamed>"), g.dim());
        println!("jacobi: {}", if jacobi_ok { "ok" } else { "FAILED" });
        match (&nilindex, jacobi_ok) {
            (Some(p), _) => println!("nilindex: {p}"),
            (None, true) => println!("nilindex: not nilpotent"),
            (None, false) => println!("nilindex: skipped (not a Lie algebra)"),
        }
        if let Some((assoc, cubic, gi, triple)) = &flags {
            println!("associative: {assoc}");
            println!("cubic associative: {cubic}");
            let gi_text: Vec<String> = gi
                .iter()
                .enumerate()
                .map(|(idx, ok)| format!("G{}={}", idx + 1, ok))
                .collect();
            println!("gi associative: {}", gi_text.join(" "));
            println!("triple total associative: {triple}");
        }
    }
    if !jacobi_ok {
        return Err(Failure::check("NotLie"));
    }
    if nilindex.is_none() {
        return Err(Failure::check("NotNilpotent"));
    }
    Ok(())
}

fn cmd_invariants(cli: &Cli, file: &Path) -> Result<(), Failure> {
    let (name, g) = load_algebra(file)?;
    if !g.is_lie() {
        return Err(Failure::check("NotLie"));
    }
    let series = g
        .lower_central_series()
        .map_err(|e| Failure::check(e.to_string()))?;
    let data = g
        .characteristic_data(cli.samples, cli.seed)
        .map_err(|e| Failure::check(e.to_string()))?;
    if cli.json {
        let report = json!({
            "name": name,
            "dim": g.dim(),
            "characteristic_sequence": data.sequence.parts.parts(),
            "char_seq_sampled": data.sampled,
            "central_series_dims": series.dims,
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    } else {
        println!("algebra: {} (dim {})", name.as_deref().unwrap_or("<unnamed>"), g.dim());
        println!(
            "characteristic sequence: {}{}",
            seq_string(data.sequence.parts.parts()),
            if data.sampled { " [sampled]" } else { "" }
        );
        println!("central series dims: {}", seq_string(&series.dims));
    }
    Ok(())
}

fn cmd_cohomology(cli: &Cli, file: &Path) -> Result<(), Failure> {
    let (name, g) = load_algebra(file)?;
    let report = cohomology_dims_hc(&g).map_err(|e| Failure::check(e.to_string()))?;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    } else {
        println!("algebra: {} (dim {})", name.as_deref().unwrap_or("<unnamed>"), g.dim());
        println!("dim Z2 = {}", report.dim_z2);
        println!("dim B2 = {}", report.dim_b2);
        println!("dim H2 = {}", report.dim_h2);
        if report.two_step {
            match rigidity_certificate(&g).map_err(|e| Failure::check(e.to_string()))? {
                cohomology::Rigidity::RigidIn2Nilp => println!("rigid in the two-step variety: yes"),
                cohomology::Rigidity::Inconclusive { .. } => {
                    println!("rigid in the two-step variety: inconclusive (H2 nonzero)")
                }
            }
        } else {
            println!("rigid in the two-step variety: n/a (not two-step)");
        }
    }
    Ok(())
}

fn cmd_homology(cli: &Cli, file: &Path) -> Result<(), Failure> {
    let (name, g) = load_algebra(file)?;
    let dims = ce_homology_dims(&g).map_err(|e| Failure::check(e.to_string()))?;
    if cli.json {
        let report = json!({ "name": name, "dims": dims });
        println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    } else {
        let text: Vec<String> = dims.iter().map(ToString::to_string).collect();
        println!("homology dims m_0..m_{}: {}", dims.len() - 1, text.join(" "));
    }
    Ok(())
}

fn cmd_catalog_verify(cli: &Cli, all: bool) -> Result<(), Failure> {
    if !all {
        return Err(Failure::usage("catalog verify requires --all"));
    }
    let reports = catalog::verify_all(cli.samples, cli.seed);
    let mut failures = 0usize;
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("serialise"));
        failures = reports
            .iter()
            .filter(|r| !(r.jacobi_ok && r.nilindex_matches_expected))
            .count();
    } else {
        for r in &reports {
            let ok = r.jacobi_ok && r.nilindex_matches_expected;
            if !ok {
                failures += 1;
            }
            println!(
                "{:<16} dim {} nilindex {:<9} charseq {:<14} {}",
                r.name,
                r.dim,
                r.nilindex.map_or("-".into(), |p| p.to_string()),
                r.characteristic_sequence
                    .as_deref()
                    .map_or("-".into(), seq_string),
                if ok {
                    "ok".to_string()
                } else if !r.jacobi_ok {
                    "FAIL (Jacobi)".to_string()
                } else {
                    format!("FAIL (expected nilindex {})", r.expected_nilindex)
                }
            );
        }
        println!("{} entries, {} failures", reports.len(), failures);
    }
    if failures > 0 {
        return Err(Failure::check(format!("{failures} catalog entries failed verification")));
    }
    Ok(())
}

fn cmd_catalog_table(cli: &Cli) -> Result<(), Failure> {
    let rows = catalog::invariant_table(cli.samples, cli.seed);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("serialise"));
    } else {
        println!(
            "{:<16} {:>3} {:>8} {:<14} {:<16} {:>5}  flags",
            "name", "dim", "nilindex", "charseq", "central series", "H2"
        );
        for r in &rows {
            println!(
                "{:<16} {:>3} {:>8} {:<14} {:<16} {:>5}  {}",
                r.name,
                r.dim,
                r.nilindex.map_or("-".into(), |p| p.to_string()),
                r.characteristic_sequence.as_deref().map_or("-".into(), seq_string),
                r.central_series_dims.as_deref().map_or("-".into(), seq_string),
                r.dim_h2.map_or("-".into(), |h| h.to_string()),
                if r.not_separated_from.is_empty() {
                    String::new()
                } else {
                    format!("not separated from {}", r.not_separated_from.join(","))
                }
            );
        }
    }
    Ok(())
}

fn cmd_operad(cli: &Cli, action: &OperadCmd) -> Result<(), Failure> {
    match action {
        OperadCmd::DualDims { kmax } => {
            if *kmax < 2 {
                return Err(Failure::usage("--kmax must be at least 2"));
            }
            let dims = operad::dual_dims(*kmax);
            if cli.json {
                let as_strings: Vec<String> = dims.d.iter().map(ToString::to_string).collect();
                println!("{}", serde_json::to_string(&as_strings).expect("serialise"));
            } else {
                let text: Vec<String> = dims.d.iter().map(ToString::to_string).collect();
                println!("{}", text.join(" "));
            }
        }
        OperadCmd::KoszulCheck { order } => {
            if *order < 2 {
                return Err(Failure::usage("--order must be at least 2"));
            }
            let f = operad::gen_function_2nilp(*order);
            let fdual = operad::series_from_dual_dims(&operad::dual_dims(*order), *order);
            let holds = operad::koszul_check(&f, &fdual, *order)
                .map_err(|e| Failure::check(e.to_string()))?;
            if cli.json {
                println!("{}", json!({ "order": order, "holds": holds }));
            } else {
                println!("koszul functional equation to order {order}: {holds}");
            }
            if !holds {
                return Err(Failure::check("functional equation failed"));
            }
        }
        OperadCmd::CubicDims => {
            let dims = operad::cubic_operad_dims();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&dims).expect("serialise"));
            } else {
                println!(
                    "asscubic(4) = {}\njordan relation module (4) = {}\njordan operad (4) = {}",
                    dims.asscubic4, dims.jordan_relation4, dims.jord4
                );
            }
        }
    }
    Ok(())
}

fn cmd_deform_extract(cli: &Cli, file: &Path) -> Result<(), Failure> {
    let (name, g) = load_algebra(file)?;
    let extraction = extract_deformation_maximal(&g, cli.samples, cli.seed)
        .map_err(|e| Failure::check(e.to_string()))?;
    let p = (g.dim() - 1) / 2;
    let model = if g.dim() % 2 == 1 {
        nilp_core::lie::k_odd(p)
    } else {
        nilp_core::lie::k_even(p + 1)
    };
    let problem = DeformationProblem::new(model, extraction.phi.clone(), nilp_core::rational::qi(1))
        .expect("dimensions match by construction");
    let conditions = deformation_conditions(&problem).map_err(|e| Failure::check(e.to_string()))?;
    let report = json!({
        "name": name,
        "basis_change": interchange::matrix_to_json_value(&extraction.basis_change),
        "phi": serde_json::from_str::<serde_json::Value>(
            &interchange::cochain_to_json(None, &extraction.phi)
        ).expect("valid JSON"),
        "conditions": conditions,
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    Ok(())
}

fn cmd_deform_check(cli: &Cli, base: &Path, phi: &Path, t: &str) -> Result<(), Failure> {
    let (_, base_tensor) = load_algebra(base)?;
    let phi_cochain = load_cochain(phi)?;
    let t = parse_rational(t).map_err(|e| Failure::usage(format!("--t: {e}")))?;
    let problem = DeformationProblem::new(base_tensor, phi_cochain, t.clone())
        .map_err(|e| Failure::check(e.to_string()))?;
    let conditions = deformation_conditions(&problem).map_err(|e| Failure::check(e.to_string()))?;
    let deformed = linear_deformation(&problem);
    if cli.json {
        let report = json!({
            "t": format_rational(&t),
            "conditions": conditions,
            "deformed": serde_json::from_str::<serde_json::Value>(
                &interchange::algebra_to_json(None, &deformed)
            ).expect("valid JSON"),
            "deformed_in_variety": variety_membership(&deformed),
        });
        println!("{}", serde_json::to_string_pretty(&report).expect("serialise"));
    } else {
        println!("phi o phi = 0: {}", conditions.phi_square_zero);
        println!("delta_H(phi) = 0: {}", conditions.delta_h_zero);
        println!("delta_C(phi) = 0: {}", conditions.delta_c_zero);
        println!("stays two-step for all t: {}", conditions.stays_2step);
        println!("deformed algebra at t = {} in variety: {}", format_rational(&t), variety_membership(&deformed));
    }
    if !conditions.stays_2step {
        return Err(Failure::check("deformation conditions failed"));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Invariants { file } => cmd_invariants(cli, file),
        Command::Cohomology { file } => cmd_cohomology(cli, file),
        Command::Homology { file } => cmd_homology(cli, file),
        Command::Catalog { action } => match action {
            CatalogCmd::Verify { all } => cmd_catalog_verify(cli, *all),
            CatalogCmd::Table => cmd_catalog_table(cli),
        },
        Command::Operad { action } => cmd_operad(cli, action),
        Command::Deform { action } => match action {
            DeformCmd::Extract { file } => cmd_deform_extract(cli, file),
            DeformCmd::Check { base, phi, t } => cmd_deform_check(cli, base, phi, t),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.sequential {
        parallel::set_enabled(false);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
