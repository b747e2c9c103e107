//! `linsys` — generate, inspect, solve, and verify finite linear systems.
//!
//! Exit codes: 0 success/pass, 2 input error, 3 budget exhausted or
//! inconclusive, 4 verification failure. Diagnostics go to standard error;
//! data goes to files or standard output.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linsys::{
    chat, cnn, enumerate_between, example_c34, export_dot, girth, levi_graph, nu2_exact,
    planarity_bound, projective_plane, random_linear_system, standard_corpus, tau_exact,
    verify_cor42, verify_eq1, verify_lemma41, verify_lemmas_42_43, verify_props_31_32,
    verify_thm21, verify_thm32_minimality, AbelianGroup, Certificate, CorpusInstance, Girth,
    LinearSystem, VerificationReport,
};
use linsys_cli::{
    canonical_instance, certificate_file, emit_json, parse_instance, report_file, InstanceFile,
    FORMAT_VERSION,
};

#[derive(Parser)]
#[command(name = "linsys", version, about = "Finite linear systems toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance and emit its canonical file
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Write the instance here instead of standard output
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Validate an instance file and print its statistics
    Check { file: PathBuf },
    /// Solve for the transversal and/or 2-packing number
    Solve {
        file: PathBuf,
        #[arg(value_enum)]
        which: Which,
        /// Search node budget (default 100000000)
        #[arg(long)]
        budget: Option<u64>,
        /// Directory to write certificate files into
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Run a theorem check and write its report
    Verify {
        /// One of: eq1, thm21, prop31, prop32, thm32, lemma41, lemmas4243, cor42
        theorem: String,
        /// Comma-separated group orders for prop31/prop32/thm32 (default 3,5,7)
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Number of random corpus instances for eq1/thm21 (default 60)
        #[arg(long)]
        seeds: Option<u64>,
        /// Search node budget per solve
        #[arg(long)]
        budget: Option<u64>,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the incidence (Levi) graph; print girth and planarity data
    Levi {
        file: PathBuf,
        /// Write a Graphviz DOT rendering here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Also print the girth-based edge bound and the non-planarity verdict
        #[arg(long)]
        bound: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Two-apex system over a neutral-sum abelian group without involutions
    Cnn {
        /// Group descriptor such as z5 or z3xz3
        #[arg(long)]
        group: String,
    },
    /// Projective plane of prime order q
    Pp {
        #[arg(long)]
        q: u64,
    },
    /// The ten-point system: order-3 plane minus its first triangle
    Chat,
    /// The transcribed 8-point, 8-line two-apex example
    C34,
    /// Seeded random linear system
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        points: usize,
        #[arg(long)]
        lines: usize,
        /// Smallest line size (at least 2)
        #[arg(long, default_value_t = 2)]
        min: usize,
        /// Largest line size
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Tau,
    Nu2,
    Both,
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Gen { family, out } => cmd_gen(family, out.as_deref()),
        Command::Check { file } => cmd_check(&file),
        Command::Solve {
            file,
            which,
            budget,
            cert_out,
        } => cmd_solve(&file, which, budget, cert_out.as_deref()),
        Command::Verify {
            theorem,
            n,
            seeds,
            budget,
            out,
        } => cmd_verify(&theorem, n.as_deref(), seeds, budget, out.as_deref()),
        Command::Levi { file, dot, bound } => cmd_levi(&file, dot.as_deref(), bound),
    }
}

fn cmd_gen(family: GenFamily, out: Option<&Path>) -> u8 {
    let mut metadata = BTreeMap::new();
    let insert = |metadata: &mut BTreeMap<String, String>, key: &str, value: String| {
        metadata.insert(key.to_string(), value);
    };
    let built: Result<LinearSystem, linsys::Error> = match &family {
        GenFamily::Cnn { group } => {
            insert(&mut metadata, "generator", "cnn".to_string());
            insert(&mut metadata, "group", group.to_lowercase());
            AbelianGroup::parse_descriptor(group).and_then(|g| cnn(&g))
        }
        GenFamily::Pp { q } => {
            insert(&mut metadata, "generator", "pp".to_string());
            insert(&mut metadata, "q", q.to_string());
            projective_plane(*q)
        }
        GenFamily::Chat => {
            insert(&mut metadata, "generator", "chat".to_string());
            Ok(chat())
        }
        GenFamily::C34 => {
            insert(&mut metadata, "generator", "c34".to_string());
            Ok(example_c34())
        }
        GenFamily::Random {
            seed,
            points,
            lines,
            min,
            max,
        } => {
            insert(&mut metadata, "generator", "random".to_string());
            insert(&mut metadata, "seed", seed.to_string());
            insert(&mut metadata, "points", points.to_string());
            insert(&mut metadata, "lines", lines.to_string());
            insert(&mut metadata, "min", min.to_string());
            insert(&mut metadata, "max", max.to_string());
            random_linear_system(*seed, *points, *lines, *min, *max)
        }
    };
    let system = match built {
        Ok(system) => system,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    let text = emit_json(&canonical_instance(&system, metadata));
    if let Some(path) = out {
        if let Err(err) = fs::write(path, &text) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return 2;
        }
    } else {
        print!("{text}");
    }
    eprintln!(
        "generated {} points, {} lines",
        system.num_points(),
        system.num_lines()
    );
    0
}

fn read_instance(path: &Path) -> Result<(InstanceFile, LinearSystem), String> {
    let text =
        fs::read_to_string(path).map_err(|err| format!("cannot read {}: {err}", path.display()))?;
    parse_instance(&text)
}

fn cmd_check(path: &Path) -> u8 {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", path.display());
            return 2;
        }
    };
    let file: InstanceFile = match serde_json::from_str(&text) {
        Ok(file) => file,
        Err(err) => {
            eprintln!("error: instance file is not valid JSON: {err}");
            return 2;
        }
    };
    if file.format_version != FORMAT_VERSION {
        eprintln!(
            "error: unsupported format_version {} (expected {FORMAT_VERSION})",
            file.format_version
        );
        return 2;
    }
    match LinearSystem::validate(file.points, file.lines) {
        Ok(system) => {
            let stats = system.stats();
            println!("valid");
            println!("points {}", stats.num_points);
            println!("lines {}", stats.num_lines);
            println!("rank {}", stats.rank);
            println!("max degree {}", stats.max_degree);
            match stats.uniform_r {
                Some(r) => println!("uniform {r}"),
                None => println!("uniform no"),
            }
            println!("intersecting {}", stats.is_intersecting);
            0
        }
        Err(err) => {
            println!("invalid: {err}");
            2
        }
    }
}

fn cmd_solve(path: &Path, which: Which, budget: Option<u64>, cert_out: Option<&Path>) -> u8 {
    let (file, system) = match read_instance(path) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    let mut results: Vec<(&str, Certificate)> = Vec::new();
    match which {
        Which::Tau => results.push(("tau", tau_exact(&system, budget))),
        Which::Nu2 => results.push(("nu2", nu2_exact(&system, budget))),
        Which::Both => {
            results.push(("tau", tau_exact(&system, budget)));
            results.push(("nu2", nu2_exact(&system, budget)));
        }
    }
    let mut all_optimal = true;
    for (name, certificate) in &results {
        println!("{name} {}", certificate.value);
        if !certificate.optimal {
            all_optimal = false;
            eprintln!("{name}: node budget exhausted; value is an upper/lower incumbent only");
        }
    }
    if let Some(dir) = cert_out {
        if let Err(err) = fs::create_dir_all(dir) {
            eprintln!("error: cannot create {}: {err}", dir.display());
            return 2;
        }
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "instance".to_string());
        for (name, certificate) in &results {
            let cert_path = dir.join(format!("{stem}.{name}.cert.json"));
            let text = emit_json(&certificate_file(&file, &system, certificate));
            if let Err(err) = fs::write(&cert_path, text) {
                eprintln!("error: cannot write {}: {err}", cert_path.display());
                return 2;
            }
        }
    }
    if all_optimal {
        0
    } else {
        3
    }
}

/// Candidate pool for the rank-4 structural lemmas: every system between
/// the triangle-deleted plane and the order-3 plane.
fn lattice_candidates() -> Vec<CorpusInstance> {
    enumerate_between(&chat(), &projective_plane(3).expect("3 is prime"))
        .expect("the lattice fits the enumeration cap")
        .into_iter()
        .enumerate()
        .map(|(i, system)| CorpusInstance::new(format!("member_{i:02}"), system))
        .collect()
}

fn cmd_verify(
    theorem: &str,
    n: Option<&[u64]>,
    seeds: Option<u64>,
    budget: Option<u64>,
    out: Option<&Path>,
) -> u8 {
    let n_list: Vec<u64> = n.map(<[u64]>::to_vec).unwrap_or_else(|| vec![3, 5, 7]);
    let seeds = seeds.unwrap_or(60);
    let report: VerificationReport = match theorem {
        "eq1" => verify_eq1(&standard_corpus(seeds), budget),
        "thm21" => verify_thm21(&standard_corpus(seeds), budget),
        "prop31" | "prop32" => verify_props_31_32(&n_list, budget),
        "thm32" => verify_thm32_minimality(&n_list, budget),
        "lemma41" => verify_lemma41(&lattice_candidates(), budget),
        "lemmas4243" => verify_lemmas_42_43(&lattice_candidates(), budget),
        "cor42" => {
            let result = verify_cor42(budget);
            eprintln!(
                "{} lattice members; |A| = {}, |B| = {}",
                result.members.len(),
                result.set_a.len(),
                result.set_b.len()
            );
            result.report
        }
        other => {
            eprintln!(
                "error: unknown theorem id {other:?} (expected eq1, thm21, prop31, prop32, thm32, lemma41, lemmas4243, or cor42)"
            );
            return 2;
        }
    };
    let text = emit_json(&report_file(&report, theorem));
    if let Some(path) = out {
        if let Err(err) = fs::write(path, &text) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return 2;
        }
    } else {
        print!("{text}");
    }
    let verdict = if !report.passed {
        "failed"
    } else if report.has_inconclusive() {
        "inconclusive"
    } else {
        "passed"
    };
    eprintln!(
        "{theorem}: {verdict} ({} instances checked)",
        report.instances_checked
    );
    if !report.passed {
        4
    } else if report.has_inconclusive() {
        3
    } else {
        0
    }
}

fn cmd_levi(path: &Path, dot: Option<&Path>, bound: bool) -> u8 {
    let (_, system) = match read_instance(path) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprintln!("error: {err}");
            return 2;
        }
    };
    let graph = levi_graph(&system);
    println!("vertices {}", graph.point_vertices + graph.line_vertices);
    println!("edges {}", graph.edges.len());
    match girth(&graph) {
        Girth::Finite(g) => println!("girth {g}"),
        Girth::Infinite => println!("girth infinite"),
    }
    if bound {
        let report = planarity_bound(&graph);
        println!("bound {}", report.bound_value);
        println!("certified_nonplanar {}", report.certified_nonplanar);
    }
    if let Some(dot_path) = dot {
        let point_labels: Vec<String> = system.points().to_vec();
        let line_labels: Vec<String> = (0..system.num_lines())
            .map(|i| {
                let labels: Vec<&str> = system.line_labels(i);
                labels.join(",")
            })
            .collect();
        let text = match export_dot(&graph, &point_labels, &line_labels) {
            Ok(text) => text,
            Err(err) => {
                eprintln!("error: {err}");
                return 2;
            }
        };
        if let Err(err) = fs::write(dot_path, text) {
            eprintln!("error: cannot write {}: {err}", dot_path.display());
            return 2;
        }
    }
    0
}
