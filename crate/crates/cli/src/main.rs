//! `planar`: command-line front end for planar-curvature.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on bad input. Every
//! failure prints one `error: <Kind>: <message>` line on stderr.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use planar_curvature::analysis::{
    census, discharge, enumerate_positive_patterns, run_all_checks,
};
use planar_curvature::curvature::{
    classify, combinatorial_curvature, corner_curvature, psi_curvature, total_curvature,
    vertex_pattern,
};
use planar_curvature::embedding::{validate_tessellation, Tessellation};
use planar_curvature::error::Error;
use planar_curvature::generators::{generate, GeneratorSpec};
use planar_curvature::io::{self, export_dot, export_svg, Report, SvgOptions};
use planar_curvature::operators::{census_transfer_check, dual, medial, psi_medial_transfer_check};
use planar_curvature::rational::Rational;
use serde_json::json;

#[derive(Parser)]
#[command(name = "planar", version, about = "Curvature calculus on planar tessellations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the tessellation conditions; exits 1 if any is violated.
    Validate { file: PathBuf },
    /// Curvature of every interior vertex, plus optional edge and corner tables.
    Curvature {
        file: PathBuf,
        /// Ψ-curvature of every interior edge.
        #[arg(long)]
        psi: bool,
        /// Corner curvature of every corner at an interior vertex.
        #[arg(long)]
        corner: bool,
        #[arg(long)]
        json: bool,
    },
    /// Counts V_k and F_k of interior vertices and faces.
    Census { file: PathBuf },
    /// Vertex patterns with positive or vanishing curvature.
    Patterns {
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long = "max-k", default_value_t = 30)]
        max_k: usize,
    },
    /// Writes the medial graph and reports the transfer checks.
    Medial {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Writes the dual graph (closed tessellations only).
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Runs the discharging rule and checks conservation and big-face sums.
    Discharge { file: PathBuf },
    /// Runs every applicable checker. Several files are analysed in parallel.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Generates a tessellation, e.g. `gen antiprism 9 -o a9.planar`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draws the tessellation as SVG and/or DOT.
    Export {
        file: PathBuf,
        #[arg(long, required_unless_present = "dot")]
        svg: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long = "color-curvature")]
        color_curvature: bool,
    },
}

enum Failure {
    /// A check ran and failed; its output has already been printed.
    Check,
    Input { kind: String, message: String },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input { kind: e.kind().to_string(), message: e.to_string() }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input { kind: "IoError".into(), message: format!("{}: {e}", path.display()) }
}

type Outcome = Result<String, Failure>;

fn load(path: &Path) -> Result<Tessellation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(io::parse(&text)?)
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_validate(file: &Path) -> Outcome {
    let t = load(file)?;
    let report = validate_tessellation(&t);
    if report.is_empty() {
        return Ok(format!(
            "ok: {} tessellation, V={} E={} F={}\n",
            t.mode().as_str(),
            t.vertex_count(),
            t.edge_count(),
            t.face_count()
        ));
    }
    for v in report.iter() {
        println!("violation: {v}");
    }
    Err(Failure::Check)
}

fn cmd_curvature(file: &Path, psi: bool, corner: bool, as_json: bool) -> Outcome {
    let t = load(file)?;
    let total = total_curvature(&t);
    let vertices: Vec<_> = t
        .interior_vertices()
        .map(|x| {
            let pattern = vertex_pattern(&t, x).expect("interior vertex");
            (x, pattern, combinatorial_curvature(&t, x).expect("interior vertex"))
        })
        .collect();
    let edges: Vec<_> = if psi {
        t.interior_edges()
            .map(|e| (e, t.edge_endpoints(e), psi_curvature(&t, e).expect("interior edge")))
            .collect()
    } else {
        Vec::new()
    };
    let corners: Vec<_> = if corner {
        let mut out = Vec::new();
        for x in t.interior_vertices() {
            let mut faces: Vec<_> = t.faces_at(x).collect();
            faces.sort();
            faces.dedup();
            for f in faces {
                out.push((x, f, corner_curvature(&t, x, f)?));
            }
        }
        out
    } else {
        Vec::new()
    };

    if as_json {
        let mut doc = json!({
            "vertices": vertices.iter().map(|(x, p, phi)| json!({
                "vertex": x.0, "pattern": p.to_string(), "phi": phi.to_string(),
            })).collect::<Vec<_>>(),
            "total": total.to_string(),
            "classes": classify(&t),
        });
        if psi {
            doc["edges"] = edges
                .iter()
                .map(|(e, (a, b), v)| json!({"edge": e.0, "ends": [a.0, b.0], "psi": v.to_string()}))
                .collect();
        }
        if corner {
            doc["corners"] = corners
                .iter()
                .map(|(x, f, c)| json!({"vertex": x.0, "face": f.0, "corner": c.to_string()}))
                .collect();
        }
        return Ok(serde_json::to_string_pretty(&doc).expect("json") + "\n");
    }

    let mut out = String::new();
    writeln!(out, "{:>8}  {:<24}  phi", "vertex", "pattern").unwrap();
    for (x, p, phi) in &vertices {
        writeln!(out, "{:>8}  {:<24}  {}", x.0, p.to_string(), phi).unwrap();
    }
    if psi {
        writeln!(out, "\n{:>8}  {:<12}  psi", "edge", "ends").unwrap();
        for (e, (a, b), v) in &edges {
            writeln!(out, "{:>8}  {:<12}  {}", e.0, format!("{}-{}", a.0, b.0), v).unwrap();
        }
    }
    if corner {
        writeln!(out, "\n{:>8}  {:>8}  corner", "vertex", "face").unwrap();
        for (x, f, c) in &corners {
            writeln!(out, "{:>8}  {:>8}  {}", x.0, f.0, c).unwrap();
        }
    }
    writeln!(out, "\ntotal: {total}").unwrap();
    writeln!(out, "classes: {}", classify(&t)).unwrap();
    Ok(out)
}

fn cmd_census(file: &Path) -> Outcome {
    let t = load(file)?;
    let c = census(&t);
    let mut out = String::new();
    writeln!(out, "{:>4}  {:>8}  {:>8}", "k", "V_k", "F_k").unwrap();
    for k in 3..=c.max_degree().max(3) {
        let (v, f) = (c.vertices_of_degree(k), c.faces_of_degree(k));
        if v > 0 || f > 0 {
            writeln!(out, "{k:>4}  {v:>8}  {f:>8}").unwrap();
        }
    }
    writeln!(out, "{:>4}  {:>8}  {:>8}", "all", c.vertex_total(), c.face_total()).unwrap();
    Ok(out)
}

fn cmd_patterns(degree: usize, max_k: usize) -> Outcome {
    let e = enumerate_positive_patterns(degree, max_k)?;
    let mut out = String::new();
    writeln!(out, "positive curvature, vertex degree {degree}:").unwrap();
    for family in &e.positive {
        writeln!(out, "  {family}").unwrap();
    }
    writeln!(out, "vanishing curvature:").unwrap();
    for p in &e.vanishing {
        writeln!(out, "  {p}").unwrap();
    }
    Ok(out)
}

fn summary(name: &str, t: &Tessellation) -> String {
    format!(
        "{name}: {} tessellation, V={} E={} F={}\n",
        t.mode().as_str(),
        t.vertex_count(),
        t.edge_count(),
        t.face_count()
    )
}

fn cmd_medial(file: &Path, output: &Path) -> Outcome {
    let t = load(file)?;
    let m = medial(&t)?;
    write(output, &io::serialize(&m.medial))?;
    let psi = psi_medial_transfer_check(&t)?;
    let census_ok = census_transfer_check(&t)?;
    let mut out = summary("medial", &m.medial);
    writeln!(out, "psi transfer: {}", verdict(psi)).unwrap();
    writeln!(out, "census transfer: {}", verdict(census_ok)).unwrap();
    if psi && census_ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check)
    }
}

fn cmd_dual(file: &Path, output: &Path) -> Outcome {
    let t = load(file)?;
    let d = dual(&t)?;
    write(output, &io::serialize(&d.dual))?;
    let mut out = summary("dual", &d.dual);
    writeln!(out, "total curvature: {}", total_curvature(&d.dual)).unwrap();
    Ok(out)
}

fn cmd_discharge(file: &Path) -> Outcome {
    let t = load(file)?;
    let state = discharge(&t)?;
    let mut out = String::new();
    writeln!(out, "{:>8}  {:>10}  {:>10}", "vertex", "phi", "phi~").unwrap();
    for (x, phi) in &state.phi {
        writeln!(out, "{:>8}  {:>10}  {:>10}", x.0, phi.to_string(), state.phi_tilde[x].to_string())
            .unwrap();
    }
    let conserved = state.conserved();
    writeln!(
        out,
        "\nconservation: {} (phi {}, phi~ {})",
        verdict(conserved),
        state.total_phi(),
        state.total_phi_tilde()
    )
    .unwrap();
    let half = Rational::new(1, 2);
    let mut all = conserved;
    for &sigma in &state.big_faces {
        let sum = state.face_sum(&t, sigma);
        let degree = t.face_degree(sigma);
        let (ok, rel) = if degree <= 11 { (sum > half, ">") } else { (sum >= half, ">=") };
        all &= ok;
        writeln!(out, "face {} (degree {degree}): sum {sum} {rel} 1/2 {}", sigma.0, verdict(ok)).unwrap();
    }
    if all {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check)
    }
}

fn graph_id(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn check_one(path: &Path) -> Result<Report, Failure> {
    let t = load(path)?;
    Ok(Report::new(graph_id(path), run_all_checks(&t)))
}

fn cmd_check(files: &[PathBuf], as_json: bool) -> Outcome {
    let results: Vec<Result<Report, Failure>> = std::thread::scope(|s| {
        let handles: Vec<_> = files.iter().map(|f| s.spawn(move || check_one(f))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    let mut out = String::new();
    for r in &reports {
        if as_json {
            out.push_str(&r.to_json());
            out.push('\n');
        } else {
            writeln!(out, "{}:", r.graph_id).unwrap();
            for c in &r.checks {
                writeln!(out, "  {:<24} {:<4} {}", c.name, c.status, c.value).unwrap();
                for w in &c.witnesses {
                    writeln!(out, "    witness: {w}").unwrap();
                }
            }
        }
    }
    if reports.iter().all(Report::all_passed) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Check)
    }
}

fn cmd_gen(args: &[String], output: Option<&Path>) -> Outcome {
    let spec = GeneratorSpec::from_args(args)?;
    let text = io::serialize(&generate(&spec)?);
    match output {
        Some(path) => {
            write(path, &text)?;
            Ok(format!("wrote {spec} to {}\n", path.display()))
        }
        None => Ok(text),
    }
}

fn cmd_export(file: &Path, svg: Option<&Path>, dot: Option<&Path>, color: bool) -> Outcome {
    let t = load(file)?;
    let mut out = String::new();
    if let Some(path) = svg {
        let options = SvgOptions { color_curvature: color, ..SvgOptions::default() };
        write(path, &export_svg(&t, &options)?)?;
        writeln!(out, "wrote {}", path.display()).unwrap();
    }
    if let Some(path) = dot {
        write(path, &export_dot(&t))?;
        writeln!(out, "wrote {}", path.display()).unwrap();
    }
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Curvature { file, psi, corner, json } => cmd_curvature(&file, psi, corner, json),
        Command::Census { file } => cmd_census(&file),
        Command::Patterns { degree, max_k } => cmd_patterns(degree, max_k),
        Command::Medial { file, output } => cmd_medial(&file, &output),
        Command::Dual { file, output } => cmd_dual(&file, &output),
        Command::Discharge { file } => cmd_discharge(&file),
        Command::Check { files, json } => cmd_check(&files, json),
        Command::Gen { args, output } => cmd_gen(&args, output.as_deref()),
        Command::Export { file, svg, dot, color_curvature } => {
            cmd_export(&file, svg.as_deref(), dot.as_deref(), color_curvature)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: UsageError: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input { kind, message }) => {
            eprintln!("error: {kind}: {message}");
            ExitCode::from(2)
        }
    }
}
