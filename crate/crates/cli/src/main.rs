//! `aecc`: batch command-line surface of the acyclic edge coloring toolkit.
//!
//! Subcommands: color | verify | oracle | find-config | discharge | gen.
//! Exit codes: 0 success, 1 verification violation or unmet coloring target,
//! 2 usage/parse errors, 3 non-planar input, 4 theorem-contradiction event.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use aecc_core::colorer::{color_planar_with_palette, ColorBudget, ColorRun};
use aecc_core::coloring::{check_acyclic, Violation};
use aecc_core::config::{find_any_configuration, ConfigReport};
use aecc_core::corpus;
use aecc_core::discharge::{build_h, check_structural_lemmas, final_report, initial_charges};
use aecc_core::embed::PlaneEmbedding;
use aecc_core::error::Error;
use aecc_core::fmt::{parse_coloring, parse_edge_list, write_coloring, write_edge_list};
use aecc_core::graph::Graph;
use aecc_core::oracle::{
    acyclic_chromatic_index, exists_acyclic_coloring, IndexOutcome, OracleBudget, OracleOutcome,
};

#[derive(Parser)]
#[command(
    name = "aecc",
    about = "Acyclic edge colorings of planar graphs with Delta+5 colors",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Node cap for exhaustive searches.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock cap in seconds for exhaustive searches (runs stopped by
    /// this cap are not byte-reproducible).
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn oracle(&self) -> OracleBudget {
        let mut b = OracleBudget::default();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        b.max_seconds = self.budget_seconds;
        b
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Acyclically color planar graphs read from edge-list files.
    Color {
        /// Input edge-list files.
        inputs: Vec<PathBuf>,
        /// Output coloring path (single input only; default <input>.coloring).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the JSON step trace here (single input only).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Override the palette size (default Delta+5).
        #[arg(long)]
        palette_size: Option<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Process input files in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a coloring file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Write the JSON verdict here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Exact acyclic chromatic index, or a single k-colorability decision.
    Oracle {
        graph: PathBuf,
        /// Decide acyclic edge k-colorability instead of searching the index.
        #[arg(long)]
        k: Option<usize>,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Report the first unavoidable configuration, or "none".
    FindConfig {
        graph: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the discharging engine on the stripped plane graph H.
    Discharge {
        graph: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also check the structural lemmas of H.
        #[arg(long)]
        check_lemmas: bool,
        /// Use this rotation system of the input graph instead of computing
        /// an embedding (one `v: n1 n2 ...` line per vertex).
        #[arg(long)]
        rotation: Option<PathBuf>,
        /// Log R4 patterns that matched except for the m3(u) = 4 demand.
        #[arg(long)]
        lenient: bool,
    },
    /// Generate corpus graphs.
    Gen {
        /// stacked | named | thinned
        #[arg(long)]
        kind: String,
        /// Vertex count for stacked triangulations.
        #[arg(long)]
        n: Option<usize>,
        /// Base graph name for named/thinned kinds.
        #[arg(long)]
        name: Option<String>,
        /// Subdivision probability for the thinned kind.
        #[arg(long)]
        thin: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
}

fn log_level() -> u8 {
    std::env::var("AECC_LOG")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

macro_rules! logln {
    ($lvl:expr, $($arg:tt)*) => {
        if log_level() >= $lvl { eprintln!($($arg)*); }
    };
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. }
        | Error::PartialColoring(_)
        | Error::UnknownName(_)
        | Error::ColorOutOfRange { .. }
        | Error::UnknownVertex(_) => 2,
        Error::NotPlanar | Error::Disconnected => 3,
        Error::TheoremContradiction { .. } => 4,
        _ => 1,
    }
}

fn read_graph(path: &Path) -> Result<Graph, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("aecc: {}: {e}", path.display());
        2u8
    })?;
    parse_edge_list(&text).map_err(|e| {
        eprintln!("aecc: {}: {e}", path.display());
        exit_code_for(&e)
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), u8> {
    fs::write(path, contents).map_err(|e| {
        eprintln!("aecc: {}: {e}", path.display());
        2u8
    })
}

#[derive(Serialize)]
struct VerifyReport {
    status: &'static str,
    violation: Option<ViolationReport>,
}

#[derive(Serialize)]
enum ViolationReport {
    Proper {
        vertex: usize,
        edges: [[usize; 2]; 2],
        color: usize,
    },
    Bichromatic {
        cycle: Vec<usize>,
        colors: [usize; 2],
    },
}

impl ViolationReport {
    fn new(v: &Violation) -> Self {
        match v {
            Violation::Proper {
                vertex,
                edges,
                color,
            } => ViolationReport::Proper {
                vertex: *vertex,
                edges: [[edges.0.lo(), edges.0.hi()], [edges.1.lo(), edges.1.hi()]],
                color: *color,
            },
            Violation::Bichromatic { cycle, colors } => ViolationReport::Bichromatic {
                cycle: cycle.clone(),
                colors: [colors.0, colors.1],
            },
        }
    }
}

fn emit_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<(), u8> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match path {
        Some(p) => write_file(p, &(text + "\n")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_color_one(
    input: &Path,
    out: Option<&Path>,
    json: Option<&Path>,
    palette_size: Option<usize>,
    budget: &ColorBudget,
) -> u8 {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let palette = palette_size.unwrap_or_else(|| g.max_degree().map_or(5, |d| d + 5));
    if g.vertex_count() >= 3 && g.edge_count() >= 1 && !g.is_two_connected() {
        eprintln!(
            "aecc: note: {} is not 2-connected; coloring blocks independently",
            input.display()
        );
    }
    logln!(1, "coloring {} with palette {palette}", input.display());
    let run: ColorRun = match color_planar_with_palette(&g, palette, budget) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("aecc: {}: {e}", input.display());
            if matches!(e, Error::TheoremContradiction { .. }) {
                // only a failure at Delta+5 or more contradicts the theorem;
                // an undersized user palette is an ordinary miss
                let delta = g.max_degree().unwrap_or(0);
                if palette < delta + 5 {
                    return 1;
                }
                let dump = input.with_extension("contradiction.txt");
                let _ = fs::write(&dump, write_edge_list(&g));
                eprintln!("aecc: reproducer written to {}", dump.display());
            }
            return exit_code_for(&e);
        }
    };
    // the exit contract: acyclic and within the palette
    let delta = g.max_degree().unwrap_or(0);
    let target = palette_size.unwrap_or(delta + 5);
    let ok = check_acyclic(&g, &run.coloring)
        .map(|v| v.is_none())
        .unwrap_or(false)
        && run.coloring.colors_used().iter().all(|&c| c <= target);
    let out_path = match out {
        Some(p) => p.to_path_buf(),
        None => input.with_extension("coloring"),
    };
    if write_file(&out_path, &write_coloring(&g, &run.coloring)).is_err() {
        return 2;
    }
    if let Some(jp) = json {
        #[derive(Serialize)]
        struct Trace<'a> {
            palette: usize,
            blocks: usize,
            colors_used: usize,
            steps: &'a [aecc_core::colorer::StepTrace],
        }
        let t = Trace {
            palette: run.palette,
            blocks: run.blocks,
            colors_used: run.coloring.colors_used().len(),
            steps: &run.trace,
        };
        if emit_json(&t, Some(jp)).is_err() {
            return 2;
        }
    }
    if ok {
        0
    } else {
        eprintln!(
            "aecc: {}: no acyclic coloring within {target} colors",
            input.display()
        );
        1
    }
}

fn cmd_color(
    inputs: &[PathBuf],
    out: Option<&Path>,
    json: Option<&Path>,
    palette_size: Option<usize>,
    budget: &ColorBudget,
    jobs: usize,
) -> u8 {
    if inputs.is_empty() {
        eprintln!("aecc: color: no input files");
        return 2;
    }
    if inputs.len() > 1 && (out.is_some() || json.is_some()) {
        eprintln!("aecc: color: --out/--json need a single input; outputs derive per file");
        return 2;
    }
    if inputs.len() == 1 {
        return cmd_color_one(&inputs[0], out, json, palette_size, budget);
    }
    // multiple inputs: derive per-file outputs, optionally in parallel
    let jobs = jobs.max(1).min(inputs.len());
    let worst = std::sync::Mutex::new(0u8);
    let next = std::sync::atomic::AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= inputs.len() {
                    break;
                }
                let code = cmd_color_one(&inputs[i], None, None, palette_size, budget);
                let mut w = worst.lock().unwrap();
                *w = (*w).max(code);
            });
        }
    });
    let w = *worst.lock().unwrap();
    w
}

fn cmd_verify(graph: &Path, coloring: &Path, json: Option<&Path>) -> u8 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(coloring) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("aecc: {}: {e}", coloring.display());
            return 2;
        }
    };
    // palette: largest color mentioned (comments ignored)
    let palette = text
        .lines()
        .map(|l| match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        })
        .filter_map(|l| l.split_whitespace().nth(2))
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
        .max(1);
    let c = match parse_coloring(&text, &g, palette) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("aecc: {}: {e}", coloring.display());
            return exit_code_for(&e);
        }
    };
    match check_acyclic(&g, &c) {
        Ok(None) => {
            let _ = emit_json(
                &VerifyReport {
                    status: "ok",
                    violation: None,
                },
                json,
            );
            0
        }
        Ok(Some(v)) => {
            let _ = emit_json(
                &VerifyReport {
                    status: "violation",
                    violation: Some(ViolationReport::new(&v)),
                },
                json,
            );
            1
        }
        Err(e) => {
            eprintln!("aecc: {e}");
            exit_code_for(&e)
        }
    }
}

fn cmd_oracle(graph: &Path, k: Option<usize>, out: Option<&Path>, budget: OracleBudget) -> u8 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match k {
        Some(k) => match exists_acyclic_coloring(&g, k, budget) {
            OracleOutcome::Colorable(c) => {
                println!("Yes");
                if let Some(p) = out {
                    let _ = write_file(p, &write_coloring(&g, &c));
                }
                0
            }
            OracleOutcome::NotColorable => {
                println!("No");
                0
            }
            OracleOutcome::BudgetExceeded => {
                eprintln!("aecc: oracle budget exceeded");
                1
            }
        },
        None => match acyclic_chromatic_index(&g, budget) {
            Ok(IndexOutcome::Index(k, c)) => {
                println!("{k}");
                if let Some(p) = out {
                    let _ = write_file(p, &write_coloring(&g, &c));
                }
                0
            }
            Ok(IndexOutcome::BudgetExceeded) => {
                eprintln!("aecc: oracle budget exceeded");
                1
            }
            Err(e) => {
                eprintln!("aecc: {e}");
                exit_code_for(&e)
            }
        },
    }
}

fn cmd_find_config(graph: &Path, json: Option<&Path>) -> u8 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match find_any_configuration(&g) {
        Some(cfg) => {
            let report = ConfigReport::new(&g, &cfg);
            let _ = emit_json(&report, json);
            0
        }
        None => {
            // a miss on a 2-connected planar graph with Delta >= 5 would
            // contradict the unavoidability theorem
            let delta = g.max_degree().unwrap_or(0);
            if delta >= 5 && g.is_two_connected() && PlaneEmbedding::embed(&g).is_ok() {
                eprintln!(
                    "aecc: warning: no configuration on a 2-connected planar graph with Delta={delta}; this contradicts unavoidability"
                );
            }
            match json {
                Some(p) => {
                    let _ = write_file(p, "\"none\"\n");
                }
                None => println!("none"),
            }
            0
        }
    }
}

fn cmd_discharge(
    graph: &Path,
    json: Option<&Path>,
    check_lemmas: bool,
    rotation: Option<&Path>,
    lenient: bool,
) -> u8 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let sg = match build_h(&g) {
        Ok(sg) => sg,
        Err(e) => {
            eprintln!("aecc: {e}");
            return exit_code_for(&e);
        }
    };
    let emb = match rotation {
        None => match PlaneEmbedding::embed(&sg.h) {
            Ok(e) => e,
            Err(e) => {
                eprintln!("aecc: H: {e}");
                return exit_code_for(&e);
            }
        },
        Some(rp) => {
            // a rotation of G induces one of H: drop the stripped vertices
            // from every cyclic order
            let text = match fs::read_to_string(rp) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("aecc: {}: {e}", rp.display());
                    return 2;
                }
            };
            let rot_g = match aecc_core::fmt::parse_rotation(&text, g.vertex_count()) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("aecc: {}: {e}", rp.display());
                    return 2;
                }
            };
            if let Err(e) = PlaneEmbedding::from_rotation(g.clone(), rot_g.clone()) {
                eprintln!("aecc: {}: {e}", rp.display());
                return exit_code_for(&e);
            }
            let rot_h: Vec<Vec<usize>> = (0..sg.h.vertex_count())
                .map(|v| {
                    rot_g[sg.map.new_to_old[v]]
                        .iter()
                        .filter_map(|&w| sg.map.old_to_new[w])
                        .filter(|&w| sg.h.has_edge(v, w))
                        .collect()
                })
                .collect();
            match PlaneEmbedding::from_rotation(sg.h.clone(), rot_h) {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("aecc: induced rotation of H: {e}");
                    return exit_code_for(&e);
                }
            }
        }
    };
    let init = initial_charges(&emb);
    let opts = aecc_core::discharge::DischargeOptions {
        log_near_misses: lenient,
    };
    let done = aecc_core::discharge::apply_rules_with(&emb, &init, &opts);
    let report = final_report(&init, &done);

    #[derive(Serialize)]
    struct Full {
        h_vertices: usize,
        h_edges: usize,
        h_faces: usize,
        #[serde(flatten)]
        report: aecc_core::discharge::DischargeReport,
        #[serde(skip_serializing_if = "Option::is_none")]
        lemma_violations: Option<Vec<aecc_core::discharge::LemmaViolation>>,
    }
    let lemma_violations = check_lemmas.then(|| check_structural_lemmas(&sg, &emb));
    let full = Full {
        h_vertices: sg.h.vertex_count(),
        h_edges: sg.h.edge_count(),
        h_faces: emb.faces().len(),
        report,
        lemma_violations,
    };
    let _ = emit_json(&full, json);
    0
}

fn cmd_gen(
    kind: &str,
    n: Option<usize>,
    name: Option<&str>,
    thin_p: Option<f64>,
    seed: u64,
    out_dir: &Path,
) -> u8 {
    if fs::create_dir_all(out_dir).is_err() {
        eprintln!("aecc: cannot create {}", out_dir.display());
        return 2;
    }
    let (label, graph) = match kind {
        "stacked" => {
            let Some(n) = n else {
                eprintln!("aecc: gen --kind stacked needs --n");
                return 2;
            };
            match corpus::stacked_triangulation(n, seed) {
                Ok((g, _)) => (format!("stacked-n{n}-s{seed}"), g),
                Err(e) => {
                    eprintln!("aecc: {e}");
                    return 2;
                }
            }
        }
        "named" => {
            let Some(name) = name else {
                eprintln!("aecc: gen --kind named needs --name");
                return 2;
            };
            match corpus::named(name) {
                Ok(g) => (name.to_string(), g),
                Err(e) => {
                    eprintln!("aecc: {e}");
                    return 2;
                }
            }
        }
        "thinned" => {
            let p = thin_p.unwrap_or(0.5);
            let base = match (name, n) {
                (Some(name), _) => match corpus::named(name) {
                    Ok(g) => (name.to_string(), g),
                    Err(e) => {
                        eprintln!("aecc: {e}");
                        return 2;
                    }
                },
                (None, Some(n)) => match corpus::stacked_triangulation(n, seed) {
                    Ok((g, _)) => (format!("stacked-n{n}-s{seed}"), g),
                    Err(e) => {
                        eprintln!("aecc: {e}");
                        return 2;
                    }
                },
                (None, None) => {
                    eprintln!("aecc: gen --kind thinned needs --name or --n");
                    return 2;
                }
            };
            let thinned = corpus::thin(&base.1, p, seed);
            (format!("{}-thin{p}-s{seed}", base.0), thinned)
        }
        other => {
            eprintln!("aecc: unknown gen kind {other:?} (stacked|named|thinned)");
            return 2;
        }
    };
    let edges_path = out_dir.join(format!("{label}.edges"));
    if write_file(&edges_path, &write_edge_list(&graph)).is_err() {
        return 2;
    }
    let entry = corpus::ManifestEntry::describe(&label, &graph, seed);
    let manifest_path = out_dir.join(format!("{label}.json"));
    if emit_json(&entry, Some(&manifest_path)).is_err() {
        return 2;
    }
    logln!(1, "wrote {}", edges_path.display());
    0
}

fn run() -> u8 {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Color {
            inputs,
            out,
            json,
            palette_size,
            budget,
            jobs,
        } => {
            let mut cb = ColorBudget::default();
            if let Some(n) = budget.budget_nodes {
                cb.search_nodes = n;
                cb.fallback_nodes = n;
            }
            cmd_color(
                &inputs,
                out.as_deref(),
                json.as_deref(),
                palette_size,
                &cb,
                jobs,
            )
        }
        Cmd::Verify {
            graph,
            coloring,
            json,
        } => cmd_verify(&graph, &coloring, json.as_deref()),
        Cmd::Oracle {
            graph,
            k,
            out,
            budget,
        } => cmd_oracle(&graph, k, out.as_deref(), budget.oracle()),
        Cmd::FindConfig { graph, json } => cmd_find_config(&graph, json.as_deref()),
        Cmd::Discharge {
            graph,
            json,
            check_lemmas,
            rotation,
            lenient,
        } => cmd_discharge(
            &graph,
            json.as_deref(),
            check_lemmas,
            rotation.as_deref(),
            lenient,
        ),
        Cmd::Gen {
            kind,
            n,
            name,
            thin,
            seed,
            out,
        } => cmd_gen(&kind, n, name.as_deref(), thin, seed, &out),
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}
