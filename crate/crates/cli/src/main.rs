//! `srgta`: construct strongly regular graphs, compute their automorphism
//! groups and Terwilliger-type algebras, and classify parameter sets.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use srgta::autgrp::{automorphism_group, export_generators, import_generators, AutOptions, AutomorphismGroup};
use srgta::classifier::{
    exclusion_lemma, intersection_numbers, krein, param_form, triple_transitivity_verdict, ParamForm,
};
use srgta::families::FamilySpec;
use srgta::graphcore::{is_strongly_regular, read_graph, write_graph};
use srgta::reproduce::{reproduce, ReproduceOptions, Status};
use srgta::terwilliger::{analyze, AlgebraReport, AnalysisOptions, TOptions};
use srgta::{Error, Graph, SrgParams};

#[derive(Parser, Debug)]
#[command(name = "srgta", version, about = "Terwilliger algebras and triple transitivity of strongly regular graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it as an edge list.
    Construct {
        /// Family tag: multipartite, cycle, grid, johnson, grassmann, paley, peisert, vo, o6minus, bilinear.
        family: String,
        /// Integer parameters of the family.
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// Output file (default: `<family>_<params>.txt`).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report dim T₀, T, T̃ with block decompositions.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        format: FormatArgs,
        /// Analyze every vertex, not one per automorphism orbit.
        #[arg(long)]
        all_vertices: bool,
    },
    /// Compute the automorphism group.
    Aut {
        file: PathBuf,
        /// Write the generators here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Search time budget in seconds.
        #[arg(long, default_value_t = 300)]
        timeout: u64,
        #[arg(long)]
        json: bool,
    },
    /// Parameter-level analysis of (n, k, λ, μ).
    Classify {
        n: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        #[arg(long)]
        json: bool,
    },
    /// Full triple-transitivity pipeline at vertex 0, as JSON.
    CheckTriple {
        file: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Run the reproduction battery.
    Reproduce {
        /// Directory with graph files for the imported rows.
        #[arg(long)]
        import_dir: Option<PathBuf>,
        /// Run only this group of rows.
        #[arg(long)]
        only: Option<String>,
        /// Worker threads (default: logical cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Search time budget per graph in seconds.
        #[arg(long, default_value_t = 300)]
        timeout: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Automorphism generators to import instead of searching.
    #[arg(long)]
    gens: Option<PathBuf>,
    /// Search time budget in seconds.
    #[arg(long, default_value_t = 300)]
    timeout: u64,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Prime for the rank computations.
    #[arg(long)]
    prime: Option<u64>,
    /// Also compute dim T over the rationals.
    #[arg(long)]
    rational: bool,
    /// Seed for the second prime and the sampled closure check.
    #[arg(long)]
    seed: Option<u64>,
}

impl AlgebraArgs {
    fn options(&self) -> TOptions {
        TOptions { prime: self.prime, seed: self.seed, rational: self.rational }
    }
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct FormatArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    table: bool,
}

/// Failures carry their exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Timeout(_)) { 3 } else { 2 };
        Failure { code, msg: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Construct { family, params, output } => construct(&family, &params, output),
        Command::Analyze { file, group, algebra, format, all_vertices } => {
            let g = read_graph(&file)?;
            let grp = load_group(&g, &group)?;
            let opts = AnalysisOptions { t: algebra.options(), all_vertices };
            let reports = analyze(&g, &grp, &opts)?;
            if format.json {
                println!("{}", to_json(&reports));
            } else {
                println!("{}", table_header());
                let name =
                    file.file_name().map_or_else(|| file.display().to_string(), |s| s.to_string_lossy().into_owned());
                for r in &reports {
                    println!("{}", table_row(&name, r));
                }
            }
            Ok(0)
        }
        Command::Aut { file, output, timeout, json } => {
            let g = read_graph(&file)?;
            let grp = automorphism_group(&g, &aut_options(timeout))?;
            if let Some(path) = output {
                export_generators(&path, &grp)?;
            }
            let (transitive, rank) = grp.bsgs.transitivity_rank();
            if json {
                let v = json!({
                    "order": grp.bsgs.order().to_string(),
                    "generators": grp.generators.len(),
                    "transitive": transitive,
                    "rank": rank,
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            } else {
                println!("|Aut| = {}", grp.bsgs.order());
                println!("generators: {}", grp.generators.len());
                println!("transitive: {transitive}, rank: {}", rank.map_or("-".into(), |r| r.to_string()));
            }
            Ok(0)
        }
        Command::Classify { n, k, lambda, mu, json } => classify(SrgParams { n, k, lambda, mu }, json),
        Command::CheckTriple { file, group, algebra } => {
            let g = read_graph(&file)?;
            let grp = load_group(&g, &group)?;
            let opts = AnalysisOptions { t: algebra.options(), all_vertices: false };
            let report = triple_transitivity_verdict(&g, &grp, &opts)?;
            println!("{}", to_json(&report));
            Ok(0)
        }
        Command::Reproduce { import_dir, only, jobs, algebra, timeout, json } => {
            let opts = ReproduceOptions {
                import_dir,
                only,
                jobs,
                analysis: AnalysisOptions { t: algebra.options(), all_vertices: false },
                aut: Some(aut_options(timeout)),
            };
            let rows = reproduce(&opts)?;
            if json {
                println!("{}", to_json(&rows));
            } else {
                for r in &rows {
                    println!("{r}");
                }
            }
            Ok(if rows.iter().any(|r| r.status == Status::Fail) { 1 } else { 0 })
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn aut_options(timeout: u64) -> AutOptions {
    AutOptions { timeout: Duration::from_secs(timeout), ..AutOptions::default() }
}

fn load_group(g: &Graph, args: &GroupArgs) -> Result<AutomorphismGroup, Failure> {
    Ok(match &args.gens {
        Some(path) => import_generators(path, g)?,
        None => automorphism_group(g, &aut_options(args.timeout))?,
    })
}

fn construct(family: &str, params: &[i64], output: Option<PathBuf>) -> Result<u8, Failure> {
    let spec = FamilySpec::parse(family, params)?;
    let g = spec.build()?;
    let path = output.unwrap_or_else(|| {
        let args: Vec<String> = params.iter().map(i64::to_string).collect();
        PathBuf::from(format!("{family}_{}.txt", args.join("_")))
    });
    write_graph(&g, &path)?;
    match is_strongly_regular(&g) {
        Ok(p) => println!("{p}"),
        Err(e) => println!("not strongly regular: {e}"),
    }
    eprintln!("wrote {}", Path::new(&path).display());
    Ok(0)
}

fn blocks_str(b: &[[usize; 3]; 3]) -> String {
    let rows: Vec<String> = b.iter().map(|r| format!("[{},{},{}]", r[0], r[1], r[2])).collect();
    format!("[{}]", rows.join(","))
}

fn table_header() -> &'static str {
    "SRG | Name | ω | |Aut| | dim T0 | dim T | dim T~ | T~ blocks"
}

fn table_row(name: &str, r: &AlgebraReport) -> String {
    format!(
        "{} | {} | {} | {} | {} | {} | {} | {}",
        r.params,
        name,
        r.omega,
        r.aut_order,
        r.dims.t0,
        r.dims.t,
        r.dims.t_tilde,
        blocks_str(&r.blocks.t_tilde)
    )
}

fn classify(p: SrgParams, as_json: bool) -> Result<u8, Failure> {
    let inter = intersection_numbers(&p)?;
    let forms = param_form(&p);
    let kr = match krein(&p) {
        Ok(k) => Some(k),
        Err(Error::ImprimitiveParams { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let exclusion = kr.as_ref().map(|_| exclusion_lemma(&p)).transpose()?;
    let ls: Vec<String> = forms.iter().filter(|f| f.is_ls_or_nls()).map(ParamForm::to_string).collect();
    let ls_part = if ls.is_empty() { "no LS/nLS".to_string() } else { ls.join(", ") };
    let krein_part = match &kr {
        None => "imprimitive".to_string(),
        Some(k) if k.signs() == (1, 1) => "Krein oracle > 0".to_string(),
        Some(_) => "Krein oracle vanishes".to_string(),
    };
    let excl_part = exclusion.map_or("exclusion: n/a".to_string(), |e| format!("exclusion: {e}"));
    if as_json {
        let v = json!({
            "params": p,
            "intersection_numbers": inter.p,
            "nonzero": inter.nonzero_count(),
            "t0_blocks": inter.block_counts(),
            "krein": kr.as_ref().map(|k| json!({
                "theta": k.theta.to_string(),
                "tau": k.tau.to_string(),
                "f": k.f.to_string(),
                "g": k.g.to_string(),
                "q11_oracle": k.q11_oracle.to_string(),
                "q22_oracle": k.q22_oracle.to_string(),
                "q11_paper": k.q11_paper.to_string(),
                "q22_paper": k.q22_paper.to_string(),
                "agreement": k.agreement,
            })),
            "forms": forms,
            "exclusion": exclusion,
        });
        println!("{}", to_json(&v));
        return Ok(0);
    }
    println!("params {p}");
    for k in 0..3 {
        let m: Vec<String> = (0..3)
            .map(|i| format!("[{}]", (0..3).map(|j| inter.get(i, j, k).to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        println!("p_ij^{k} = [{}]", m.join(","));
    }
    println!(
        "nonzero intersection numbers: {} (dim T0), blocks {}",
        inter.nonzero_count(),
        blocks_str(&inter.block_counts())
    );
    if let Some(k) = &kr {
        println!("eigenvalues θ = {}, τ = {} with multiplicities {}, {}", k.theta, k.tau, k.f, k.g);
        println!("Krein oracle: q11^1 = {}, q22^2 = {}", k.q11_oracle, k.q22_oracle);
        println!(
            "displayed polynomials: q11^1 = {}, q22^2 = {} (agreement: {})",
            k.q11_paper, k.q22_paper, k.agreement
        );
    }
    let names: Vec<String> = forms.iter().map(ParamForm::to_string).collect();
    println!("forms: {}", if names.is_empty() { "none".into() } else { names.join(", ") });
    println!("{ls_part}; {krein_part}; {excl_part}");
    Ok(0)
}
