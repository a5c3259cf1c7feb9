//! `extlift`: oriented matroid computations from instance files — bases,
//! circuits, duality, generic extensions/liftings, the basis/reorientation
//! bijection, and a verification report over every checked proposition.

mod instance;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail};
use clap::{Parser, Subcommand};
use extlift_core::*;
use serde_json::{json, Value};

use instance::{load_instance, parse_subset, resolve, Instance, SpecOverrides};
use output::{sign_string, Labeling};

const HARD_CAP: usize = 20;

#[derive(Parser)]
#[command(name = "extlift", version, about)]
struct Cli {
    /// Instance file (matrix or chirotope format).
    #[arg(long, global = true)]
    instance: Option<PathBuf>,

    /// Emit JSON instead of tab-separated text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampling generic data when the instance gives none.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Largest accepted ground set (hard cap 20).
    #[arg(long, global = true, default_value_t = 12)]
    max_n: usize,

    /// Extension vector, e.g. `1,1` (overrides the instance).
    #[arg(long, global = true)]
    vector: Option<String>,

    /// Lifting heights, e.g. `0,1,0,1` (overrides the instance).
    #[arg(long, global = true)]
    heights: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bases.
    Bases,
    /// List the signed circuits (canonical representatives).
    Circuits,
    /// List the signed cocircuits (canonical representatives).
    Cocircuits,
    /// Print the dual chirotope.
    Dual,
    /// Print the single-element extension (new element `f` last).
    Extend,
    /// Print the single-element lifting (new element `g` last).
    Lift,
    /// Print the compliant extension-lifting (elements `g, f, 1..n`).
    Extlift,
    /// One row per basis: basis, reorientation, optimal basis, verified.
    Bijection,
    /// Map a compatible reorientation back to its basis.
    Inverse {
        /// The reorientation, e.g. `2,4`; omit for the full table.
        #[arg(long)]
        region: Option<String>,
    },
    /// List the compatible reorientations.
    Compatible,
    /// List the bounded regions of the extension-lifting.
    Regions,
    /// Run every check; exit 0 iff all pass.
    Verify {
        /// Treat the chirotope instance as an extension-lifting with
        /// elements `g, f, 1..n` and verify it end to end.
        #[arg(long)]
        as_extlift: bool,
    },
    /// Print the three cardinalities.
    Count,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_int_list(text: &str) -> anyhow::Result<Vec<i64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| anyhow!("`{t}` is not an integer"))
        })
        .collect()
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    if cli.max_n > HARD_CAP {
        bail!("--max-n {} exceeds the hard cap {HARD_CAP}", cli.max_n);
    }
    let path = cli
        .instance
        .as_ref()
        .ok_or_else(|| anyhow!("--instance <path> is required"))?;
    let inst = load_instance(path, cli.max_n)?;
    let overrides = SpecOverrides {
        vector: cli.vector.as_deref().map(parse_int_list).transpose()?,
        heights: cli.heights.as_deref().map(parse_int_list).transpose()?,
        seed: cli.seed,
    };

    match &cli.command {
        Command::Bases => cmd_bases(cli, &inst),
        Command::Circuits => cmd_signed_sets(cli, &inst, false),
        Command::Cocircuits => cmd_signed_sets(cli, &inst, true),
        Command::Dual => cmd_dual(cli, &inst),
        Command::Extend => cmd_extend(cli, &inst, &overrides),
        Command::Lift => cmd_lift(cli, &inst, &overrides),
        Command::Extlift => cmd_extlift(cli, &inst, &overrides),
        Command::Bijection => cmd_bijection(cli, &inst, &overrides),
        Command::Inverse { region } => cmd_inverse(cli, &inst, &overrides, region.as_deref()),
        Command::Compatible => cmd_compatible(cli, &inst, &overrides),
        Command::Regions => cmd_regions(cli, &inst, &overrides),
        Command::Verify { as_extlift } => cmd_verify(cli, &inst, &overrides, *as_extlift),
        Command::Count => cmd_count(cli, &inst, &overrides),
    }
}

fn ok() -> anyhow::Result<ExitCode> {
    Ok(ExitCode::SUCCESS)
}

fn cmd_bases(cli: &Cli, inst: &Instance) -> anyhow::Result<ExitCode> {
    let m = inst.chirotope()?;
    let labels = Labeling::Plain;
    let bases = m.bases();
    if cli.json {
        println!(
            "{}",
            json!({ "bases": bases.iter().map(|&b| labels.subset_json(b)).collect::<Vec<_>>() })
        );
    } else {
        for b in bases {
            println!("{}", labels.subset(b));
        }
    }
    ok()
}

fn cmd_signed_sets(cli: &Cli, inst: &Instance, cocircuits: bool) -> anyhow::Result<ExitCode> {
    let m = inst.chirotope()?;
    let labels = Labeling::Plain;
    let sets = if cocircuits { m.cocircuits() } else { m.circuits() };
    if cli.json {
        let key = if cocircuits { "cocircuits" } else { "circuits" };
        println!(
            "{}",
            json!({ key: sets.iter().map(|s| labels.signed_set_json(s)).collect::<Vec<_>>() })
        );
    } else {
        for s in sets {
            println!("{}", labels.signed_set(&s));
        }
    }
    ok()
}

fn print_chirotope(cli: &Cli, m: &Chirotope, labels: Labeling, extra: Option<(&str, Value)>) {
    if cli.json {
        let mut obj = json!({
            "n": m.n(),
            "rank": m.rank(),
            "signs": sign_string(m.signs()),
            "elements": (0..m.n()).map(|e| labels.label(e)).collect::<Vec<_>>(),
        });
        if let Some((key, value)) = extra {
            obj.as_object_mut().unwrap().insert(key.into(), value);
        }
        println!("{obj}");
    } else {
        println!(
            "# elements: {}",
            (0..m.n()).map(|e| labels.label(e)).collect::<Vec<_>>().join(" ")
        );
        println!("chirotope");
        println!("{} {}", m.n(), m.rank());
        println!("{}", sign_string(m.signs()));
        if let Some((key, value)) = extra {
            println!("# {key}: {value}");
        }
    }
}

fn cmd_dual(cli: &Cli, inst: &Instance) -> anyhow::Result<ExitCode> {
    let m = inst.chirotope()?;
    print_chirotope(cli, &m.dual(), Labeling::Plain, None);
    ok()
}

fn cmd_extend(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, false)?;
    let sigstar = r.sigstar.expect("requested");
    let extended = extend(&r.m, &sigstar)?;
    print_chirotope(cli, &extended, Labeling::Appended('f', r.m.n()), None);
    ok()
}

fn cmd_lift(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, false, true)?;
    let sigma = r.sigma.expect("requested");
    let lifted = lift(&r.m, &sigma)?;
    print_chirotope(cli, &lifted, Labeling::Appended('g', r.m.n()), None);
    ok()
}

fn cmd_extlift(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let mbar = compose_compliant(
        &r.m,
        r.sigstar.as_ref().expect("requested"),
        r.sigma.as_ref().expect("requested"),
    )?;
    let compliant = is_compliant(&mbar);
    print_chirotope(
        cli,
        mbar.om(),
        Labeling::GfFirst,
        Some(("compliant", Value::Bool(compliant))),
    );
    ok()
}

fn cmd_bijection(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let rows = bijection_table(
        &r.m,
        r.sigstar.as_ref().expect("requested"),
        r.sigma.as_ref().expect("requested"),
    )?;
    let plain = Labeling::Plain;
    let gf = Labeling::GfFirst;
    if cli.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|row| {
                json!({
                    "basis": plain.subset_json(row.basis),
                    "reorientation": plain.subset_json(row.reorientation),
                    "optimal_basis": gf.subset_json(row.optimal_basis_in_mbar),
                    "verified": row.verified,
                })
            })
            .collect();
        println!("{}", json!({ "rows": rows }));
    } else {
        for row in &rows {
            println!(
                "{}\t{}\t{}\t{}",
                plain.subset(row.basis),
                plain.subset(row.reorientation),
                gf.subset(row.optimal_basis_in_mbar),
                row.verified
            );
        }
    }
    ok()
}

fn cmd_inverse(
    cli: &Cli,
    inst: &Instance,
    ov: &SpecOverrides,
    region: Option<&str>,
) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let sigstar = r.sigstar.as_ref().expect("requested");
    let sigma = r.sigma.as_ref().expect("requested");
    let plain = Labeling::Plain;
    match region {
        Some(text) => {
            let a = parse_subset(text, r.m.n())?;
            let basis = inverse_map(&r.m, sigstar, sigma, a)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "region": plain.subset_json(a), "basis": plain.subset_json(basis) })
                );
            } else {
                println!("{}", plain.subset(basis));
            }
        }
        None => {
            let regions = compatible_reorientations(&r.m, sigstar, sigma)?;
            let mut rows = Vec::new();
            for a in regions {
                let basis = inverse_map(&r.m, sigstar, sigma, a)?;
                rows.push((a, basis));
            }
            if cli.json {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|(a, b)| {
                        json!({ "region": plain.subset_json(*a), "basis": plain.subset_json(*b) })
                    })
                    .collect();
                println!("{}", json!({ "rows": rows }));
            } else {
                for (a, b) in rows {
                    println!("{}\t{}", plain.subset(a), plain.subset(b));
                }
            }
        }
    }
    ok()
}

fn cmd_compatible(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let list = compatible_reorientations(
        &r.m,
        r.sigstar.as_ref().expect("requested"),
        r.sigma.as_ref().expect("requested"),
    )?;
    print_subset_list(cli, "compatible", &list);
    ok()
}

fn cmd_regions(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let mbar = compose_compliant(
        &r.m,
        r.sigstar.as_ref().expect("requested"),
        r.sigma.as_ref().expect("requested"),
    )?;
    let list = bounded_regions(&mbar)?;
    print_subset_list(cli, "regions", &list);
    ok()
}

fn print_subset_list(cli: &Cli, key: &str, list: &[Subset]) {
    let plain = Labeling::Plain;
    if cli.json {
        println!(
            "{}",
            json!({ key: list.iter().map(|&a| plain.subset_json(a)).collect::<Vec<_>>() })
        );
    } else {
        for &a in list {
            println!("{}", plain.subset(a));
        }
    }
}

fn cmd_count(cli: &Cli, inst: &Instance, ov: &SpecOverrides) -> anyhow::Result<ExitCode> {
    let r = resolve(inst, ov, true, true)?;
    let sigstar = r.sigstar.as_ref().expect("requested");
    let sigma = r.sigma.as_ref().expect("requested");
    let bases = r.m.bases().len();
    let compatible = compatible_reorientations(&r.m, sigstar, sigma)?.len();
    let mbar = compose_compliant(&r.m, sigstar, sigma)?;
    let regions = bounded_regions(&mbar)?.len();
    let equal = bases == compatible && bases == regions;
    if cli.json {
        println!(
            "{}",
            json!({ "bases": bases, "compatible": compatible, "regions": regions, "equal": equal })
        );
    } else {
        println!("bases\t{bases}");
        println!("compatible\t{compatible}");
        println!("regions\t{regions}");
        println!("equal\t{equal}");
    }
    ok()
}

fn report_to_exit(cli: &Cli, checks: &[VerificationCheck]) -> ExitCode {
    let failed: Vec<&VerificationCheck> = checks.iter().filter(|c| !c.passed).collect();
    if cli.json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness }))
            .collect();
        println!(
            "{}",
            json!({ "checks": list, "passed": failed.is_empty() })
        );
    } else {
        for c in checks {
            match (&c.passed, &c.witness) {
                (true, _) => println!("PASS {}", c.name),
                (false, Some(w)) => println!("FAIL {}: {w}", c.name),
                (false, None) => println!("FAIL {}", c.name),
            }
        }
        println!(
            "verify: {} checks, {} failed",
            checks.len(),
            failed.len()
        );
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn cmd_verify(
    cli: &Cli,
    inst: &Instance,
    ov: &SpecOverrides,
    as_extlift: bool,
) -> anyhow::Result<ExitCode> {
    let mut checks: Vec<VerificationCheck> = Vec::new();

    let m = inst.chirotope()?;
    // Axiom validation first: everything downstream assumes a chirotope.
    if let Err(e) = m.validate() {
        if cli.json {
            println!(
                "{}",
                json!({
                    "checks": [ { "name": "chirotope-axioms", "passed": false, "witness": e.to_string() } ],
                    "passed": false
                })
            );
        } else {
            println!("FAIL chirotope-axioms: {e}");
            println!("verify: 1 checks, 1 failed");
        }
        return Ok(ExitCode::FAILURE);
    }
    checks.push(VerificationCheck {
        name: "chirotope-axioms",
        passed: true,
        witness: None,
    });

    if as_extlift {
        let mbar = match ExtensionLifting::new(m) {
            Ok(mbar) => mbar,
            Err(e) => {
                checks.push(VerificationCheck {
                    name: "extlift-invariants",
                    passed: false,
                    witness: Some(e.to_string()),
                });
                return Ok(report_to_exit(cli, &checks));
            }
        };
        checks.push(VerificationCheck {
            name: "extlift-invariants",
            passed: true,
            witness: None,
        });
        let compliant = is_compliant(&mbar);
        checks.push(VerificationCheck {
            name: "extlift-compliant",
            passed: compliant,
            witness: (!compliant).then(|| "a cocircuit has g positive and f negative".into()),
        });
        let (sigstar, sigma) = signatures_of(&mbar)?;
        let minor = mbar.minor();
        let report = verify_all(&minor, &sigstar, &sigma)?;
        checks.extend(report.checks);
        return Ok(report_to_exit(cli, &checks));
    }

    let r = resolve(inst, ov, true, true)?;
    let report = verify_all(
        &r.m,
        r.sigstar.as_ref().expect("requested"),
        r.sigma.as_ref().expect("requested"),
    )?;
    checks.extend(report.checks);
    if let Some(a) = &r.matrix {
        checks.extend(verify_oracle(a, &r.m));
    }
    Ok(report_to_exit(cli, &checks))
}
