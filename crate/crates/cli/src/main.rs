//! `mk`: command-line front end for the `mkflat` library.
//!
//! Exit codes: 0 when the command succeeds (or the verdict is the positive
//! one), 1 for a negative verdict, 2 for usage and input errors.

use std::collections::BTreeSet;
use std::cell::RefCell;
use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use mkflat::classifier::{self, Classification};
use mkflat::distributions::{induced_parity, ParityDistribution, RootDistribution};
use mkflat::growth;
use mkflat::io;
use mkflat::lattice::{AxialPoint, Direction, Face, Orientation, Region};
use mkflat::linkgraph::{self, Label};
use mkflat::pauli::{self, PauliLabelling, Seed};
use mkflat::realizer::{self, Counterexample, SearchStats};
use mkflat::render::{self, Layer, RenderInputs, RenderSpec};

#[derive(Parser)]
#[command(name = "mk", version, about = "Root and parity distributions on the triangular lattice")]
struct Cli {
    /// Output format for record-valued results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Induced parity distribution of a root distribution (.rdist -> .pdist).
    Parity {
        #[arg(long)]
        rdist: PathBuf,
        /// Faces to report; defaults to every face with all corners assigned.
        #[arg(long)]
        region: Option<PathBuf>,
    },
    /// Search for a root distribution inducing a parity distribution. Exit 1 if none exists.
    Realize {
        #[arg(long)]
        parity: PathBuf,
        /// Enumerate every realization instead of the first.
        #[arg(long)]
        all: bool,
        /// Stop enumerating after this many realizations.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check the bundled non-realizable parity distribution. Exit 1 if it turns out realizable.
    Counterexample {
        /// Use this .pdist instead of the bundled one.
        #[arg(long)]
        parity: Option<PathBuf>,
        /// Central face as `a b U|D` (with --parity).
        #[arg(long, num_args = 3, value_names = ["A", "B", "O"])]
        central: Option<Vec<String>>,
    },
    /// Check that all 64 parity patterns on a radius-1 hexagon are realizable.
    Hexagon,
    /// Pauli X/Y/Z labellings.
    Pauli {
        #[command(subcommand)]
        command: PauliCommand,
    },
    /// Classify an even root distribution.
    Classify {
        #[arg(long)]
        rdist: PathBuf,
        #[arg(long)]
        region: Option<PathBuf>,
    },
    /// Generate even root distributions.
    Gen {
        #[command(subcommand)]
        command: GenCommand,
    },
    /// Link graph checks.
    Link {
        #[command(subcommand)]
        command: LinkCommand,
    },
    /// Iterate the boundary growth recurrence. Exit 1 if the inequality fails.
    Growth {
        #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [1u64, 0])]
        seed: Vec<u64>,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Print every state, not only the verdict.
        #[arg(long)]
        table: bool,
    },
    /// Render a region and its distributions as SVG.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum PauliCommand {
    /// Check every interior vertex word. Exit 1 if some word is not a relator.
    Validate {
        #[arg(long)]
        region: PathBuf,
        #[arg(long)]
        puzzle: PathBuf,
    },
    /// Extend a seed pair of labels to the whole region. Exit 1 on contradiction.
    Extend {
        #[arg(long)]
        region: PathBuf,
        #[arg(long)]
        rdist: PathBuf,
        /// `a b U|D L a' b' U|D L'`: two adjacent faces and their labels.
        #[arg(long, num_args = 8, value_names = ["A", "B", "O", "L", "A2", "B2", "O2", "L2"])]
        seed: Vec<String>,
    },
    /// Root distribution on the interior vertices of a labelled region.
    Roots {
        #[arg(long)]
        region: PathBuf,
        #[arg(long)]
        puzzle: PathBuf,
    },
    /// Whether the induced root distribution is even. Exit 1 if not.
    Even {
        #[arg(long)]
        region: PathBuf,
        #[arg(long)]
        puzzle: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The t-flat on three hexagons around its center triangle.
    TFlat {
        #[arg(long, default_value_t = 4)]
        radius: i32,
        /// Lowest corner of the center triangle.
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true)]
        center: Option<Vec<i32>>,
        /// Also write the window's region file here.
        #[arg(long)]
        region_out: Option<PathBuf>,
    },
    /// A strip union on a parallelogram window.
    Strips {
        #[arg(long)]
        axis: Direction,
        /// Comma-separated directions repeated across the lines, e.g. `D1,D2`.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<Direction>,
        #[arg(long, default_value_t = 8)]
        width: i32,
        #[arg(long, default_value_t = 8)]
        height: i32,
        #[arg(long)]
        region_out: Option<PathBuf>,
    },
    /// A random even root distribution on a hexagon.
    RandomEven {
        #[arg(long, default_value_t = 3)]
        radius: i32,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        #[arg(long)]
        region_out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LinkCommand {
    /// Ranks of all roots of the Pauli Cayley graph.
    Ranks,
    /// Isomorphism between the Pauli Cayley graph and GP(8,3).
    Iso,
    /// Label words of all 6-cycles.
    Relators,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    region: PathBuf,
    #[arg(long)]
    parity: Option<PathBuf>,
    #[arg(long)]
    rdist: Option<PathBuf>,
    #[arg(long)]
    puzzle: Option<PathBuf>,
    /// Pixels per lattice edge.
    #[arg(long, default_value_t = 40.0)]
    scale: f64,
    /// Root segment half-length as a fraction of an edge.
    #[arg(long, default_value_t = 0.2)]
    epsilon: f64,
    /// Comma-separated subset of faces,parity,roots,labels,gliders.
    #[arg(long, value_delimiter = ',')]
    layers: Option<Vec<Layer>>,
    /// Highlight t and t′ gliders (requires --rdist).
    #[arg(long)]
    gliders: bool,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

struct Out {
    format: Format,
    color: bool,
    buf: RefCell<String>,
}

macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        let mut b = $out.buf.borrow_mut();
        let _ = writeln!(b, $($arg)*);
    }};
}

macro_rules! outp {
    ($out:expr, $($arg:tt)*) => {{
        let mut b = $out.buf.borrow_mut();
        let _ = write!(b, $($arg)*);
    }};
}

impl Out {
    fn verdict(&self, ok: bool, text: &str) {
        if self.color {
            let code = if ok { 32 } else { 31 };
            outln!(self, "\x1b[{code}m{text}\x1b[0m");
        } else {
            outln!(self, "{text}");
        }
    }

    fn json(&self, value: serde_json::Value) {
        outln!(self, "{value}");
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_region(path: &Path) -> Result<Region> {
    io::parse_region(&read(path)?).with_context(|| path.display().to_string())
}

fn load_rdist(path: &Path) -> Result<RootDistribution> {
    io::parse_root_distribution(&read(path)?).with_context(|| path.display().to_string())
}

fn load_pdist(path: &Path) -> Result<ParityDistribution> {
    io::parse_parity(&read(path)?).with_context(|| path.display().to_string())
}

fn load_puzzle(path: &Path) -> Result<PauliLabelling> {
    io::parse_labelling(&read(path)?).with_context(|| path.display().to_string())
}

fn region_or_spanned(region: Option<&PathBuf>, delta: &RootDistribution) -> Result<Region> {
    match region {
        Some(p) => load_region(p),
        None => Ok(Region::spanned_by(&delta.iter().map(|(p, _)| p).collect::<BTreeSet<_>>())),
    }
}

fn face_json(f: Face) -> serde_json::Value {
    json!({ "a": f.a, "b": f.b, "o": f.orientation.symbol().to_string() })
}

fn emit_rdist(out: &Out, delta: &RootDistribution) {
    match out.format {
        Format::Text => outp!(out, "{}", io::write_root_distribution(delta)),
        Format::Json => {
            for (p, d) in delta.iter() {
                out.json(json!({ "a": p.a, "b": p.b, "dir": d.to_string() }));
            }
        }
    }
}

fn emit_pdist(out: &Out, parity: &ParityDistribution) {
    match out.format {
        Format::Text => outp!(out, "{}", io::write_parity(parity)),
        Format::Json => {
            for (f, p) in parity.iter() {
                let mut v = face_json(f);
                v["parity"] = json!(p.bit());
                out.json(v);
            }
        }
    }
}

fn emit_puzzle(out: &Out, labels: &PauliLabelling) {
    match out.format {
        Format::Text => outp!(out, "{}", io::write_labelling(labels)),
        Format::Json => {
            for (f, l) in labels.iter() {
                let mut v = face_json(f);
                v["label"] = json!(l.to_string());
                out.json(v);
            }
        }
    }
}

fn write_region_file(path: Option<&PathBuf>, region: &Region) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, io::write_region(region)).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn stats_text(s: SearchStats) -> String {
    format!("nodes {} propagations {} failures {}", s.nodes, s.propagations, s.failures)
}

fn stats_json(s: SearchStats) -> serde_json::Value {
    json!({ "nodes": s.nodes, "propagations": s.propagations, "failures": s.failures })
}

fn parse_face(a: &str, b: &str, o: &str) -> Result<Face> {
    let orientation: Orientation = o.parse().map_err(|_| anyhow::anyhow!("`{o}` is not U or D"))?;
    Ok(Face { a: a.parse()?, b: b.parse()?, orientation })
}

fn parse_label(s: &str) -> Result<Label> {
    s.parse().map_err(|e: String| anyhow::anyhow!(e))
}

fn run(cli: Cli, out: &Out) -> Result<u8> {
    match cli.command {
        Command::Parity { rdist, region } => {
            let delta = load_rdist(&rdist)?;
            let region = region_or_spanned(region.as_ref(), &delta)?;
            emit_pdist(out, &induced_parity(&delta, &region)?);
            Ok(0)
        }
        Command::Realize { parity, all, limit } => {
            let target = load_pdist(&parity)?;
            let region = target.domain();
            if all || limit.is_some() {
                let solutions = realizer::enumerate_realizations(&target, &region, limit)?;
                for (i, s) in solutions.iter().enumerate() {
                    match out.format {
                        Format::Text => {
                            outln!(out, "# solution {}", i + 1);
                            outp!(out, "{}", io::write_root_distribution(s));
                        }
                        Format::Json => {
                            for (p, d) in s.iter() {
                                out.json(json!({ "solution": i + 1, "a": p.a, "b": p.b, "dir": d.to_string() }));
                            }
                        }
                    }
                }
                if out.format == Format::Text {
                    outln!(out, "# {} solution(s)", solutions.len());
                }
                return Ok(if solutions.is_empty() { 1 } else { 0 });
            }
            let outcome = realizer::realize(&target, &region)?;
            match (outcome.witness(), out.format) {
                (Some(w), Format::Text) => {
                    out.verdict(true, "SAT");
                    outp!(out, "{}", io::write_root_distribution(w));
                }
                (Some(w), Format::Json) => emit_rdist(out, w),
                (None, Format::Text) => {
                    out.verdict(false, "UNSAT");
                    outln!(out, "{}", stats_text(outcome.stats()));
                }
                (None, Format::Json) => out.json(json!({ "outcome": "UNSAT", "stats": stats_json(outcome.stats()) })),
            }
            Ok(if outcome.is_sat() { 0 } else { 1 })
        }
        Command::Counterexample { parity, central } => {
            let ce = match (parity, central) {
                (None, None) => Counterexample::bundled(),
                (Some(p), Some(c)) => Counterexample::load(&p, parse_face(&c[0], &c[1], &c[2])?)?,
                (Some(p), None) => Counterexample::load(&p, realizer::COUNTEREXAMPLE_CENTRAL_FACE)?,
                (None, Some(_)) => bail!("--central requires --parity"),
            };
            let start = std::time::Instant::now();
            let outcome = ce.solve();
            let elapsed = start.elapsed();
            let dozen = realizer::verify_disallowed_dozen(&ce);
            let refuted = dozen.two_mismatch_cases().filter(|c| !c.outcome.is_sat()).count();
            match out.format {
                Format::Text => {
                    out.verdict(!outcome.is_sat(), if outcome.is_sat() { "SAT" } else { "UNSAT" });
                    outln!(out, "faces {} odd {}", ce.parity.len(), ce.parity.odd_faces().len());
                    outln!(out, "{} time {:.3}s", stats_text(outcome.stats()), elapsed.as_secs_f64());
                    outln!(out, "central {}: {refuted}/12 two-mismatch corner cases refuted", ce.central_face);
                }
                Format::Json => out.json(json!({
                    "outcome": if outcome.is_sat() { "SAT" } else { "UNSAT" },
                    "faces": ce.parity.len(),
                    "odd": ce.parity.odd_faces().len(),
                    "stats": stats_json(outcome.stats()),
                    "central": face_json(ce.central_face),
                    "refuted": refuted,
                    "dozen_holds": dozen.holds(),
                })),
            }
            Ok(if outcome.is_sat() { 1 } else { 0 })
        }
        Command::Hexagon => {
            let witnesses = realizer::hexagon_witnesses();
            let n = witnesses.iter().filter(|w| w.is_some()).count();
            match out.format {
                Format::Text => out.verdict(n == 64, &format!("{n}/64 realizable")),
                Format::Json => out.json(json!({ "realizable": n, "total": 64 })),
            }
            Ok(if n == 64 { 0 } else { 1 })
        }
        Command::Pauli { command } => run_pauli(command, out),
        Command::Classify { rdist, region } => {
            let delta = load_rdist(&rdist)?;
            let region = region_or_spanned(region.as_ref(), &delta)?;
            let w = classifier::EvenWindow::new(region, &delta)?;
            let verdict = classifier::classify(&w);
            match out.format {
                Format::Text => match &verdict {
                    Classification::TFlat { center, symmetry_checked } => {
                        outln!(out, "TFlat center {center} symmetry {}", if *symmetry_checked { "checked" } else { "unchecked" })
                    }
                    Classification::StripUnion { axis, rows } => {
                        outln!(out, "StripUnion axis {axis}");
                        for (line, d) in rows {
                            outln!(out, "row {line} {d}");
                        }
                    }
                    Classification::Undetermined(reason) => outln!(out, "Undetermined {reason:?}"),
                },
                Format::Json => match &verdict {
                    Classification::TFlat { center, symmetry_checked } => out.json(json!({
                        "verdict": "TFlat", "center": face_json(*center), "symmetry_checked": symmetry_checked
                    })),
                    Classification::StripUnion { axis, rows } => {
                        let rows: serde_json::Map<String, serde_json::Value> =
                            rows.iter().map(|(l, d)| (l.to_string(), json!(d.to_string()))).collect();
                        out.json(json!({ "verdict": "StripUnion", "axis": axis.to_string(), "rows": rows }))
                    }
                    Classification::Undetermined(reason) => {
                        out.json(json!({ "verdict": "Undetermined", "reason": format!("{reason:?}") }))
                    }
                },
            }
            Ok(if matches!(verdict, Classification::Undetermined(_)) { 1 } else { 0 })
        }
        Command::Gen { command } => {
            let w = match &command {
                GenCommand::TFlat { radius, center, .. } => {
                    let c = center.as_ref().map(|v| AxialPoint::new(v[0], v[1])).unwrap_or(AxialPoint::new(2, -1));
                    classifier::build_t_flat(c, *radius)?
                }
                GenCommand::Strips { axis, rows, width, height, .. } => {
                    if rows.is_empty() {
                        bail!("--rows needs at least one direction");
                    }
                    let region = Region::parallelogram(AxialPoint::ORIGIN, *width, *height);
                    classifier::build_strip_union(*axis, classifier::periodic_rows(rows), &region)?
                }
                GenCommand::RandomEven { radius, rng_seed, .. } => {
                    let mut rng = ChaCha8Rng::seed_from_u64(*rng_seed);
                    classifier::random_even_window(AxialPoint::ORIGIN, *radius, &mut rng)?
                }
            };
            let region_out = match &command {
                GenCommand::TFlat { region_out, .. }
                | GenCommand::Strips { region_out, .. }
                | GenCommand::RandomEven { region_out, .. } => region_out.as_ref(),
            };
            write_region_file(region_out, w.region())?;
            emit_rdist(out, w.delta());
            Ok(0)
        }
        Command::Link { command } => run_link(command, out),
        Command::Growth { seed, steps, table } => {
            let start = mkflat::GrowthState::seed(seed[0].into(), seed[1].into());
            let seq = growth::sequence(&start, steps);
            if table {
                for (i, s) in seq.iter().enumerate() {
                    let margin = s.margin().map(|m| m.to_string()).unwrap_or_else(|| "negative".into());
                    match out.format {
                        Format::Text => outln!(out, "{} a {} b {} f {} margin {}", i + 1, s.a, s.b, s.f, margin),
                        Format::Json => out.json(json!({
                            "n": i + 1, "a": s.a.to_string(), "b": s.b.to_string(), "f": s.f.to_string(), "margin": margin
                        })),
                    }
                }
            }
            let ok = growth::check_inequality(&start, steps);
            match out.format {
                Format::Text => out.verdict(ok, &format!("2^f < 8^a 16^b for n <= {steps}: {}", if ok { "holds" } else { "fails" })),
                Format::Json if !table => out.json(json!({ "steps": steps, "holds": ok })),
                Format::Json => {}
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Render(args) => {
            let region = load_region(&args.region)?;
            let parity = args.parity.as_deref().map(load_pdist).transpose()?;
            let roots = args.rdist.as_deref().map(load_rdist).transpose()?;
            let labels = args.puzzle.as_deref().map(load_puzzle).transpose()?;
            let gliders = match (&roots, args.gliders) {
                (Some(d), true) => classifier::find_gliders(&classifier::EvenWindow::new(region.clone(), d)?),
                (None, true) => bail!("--gliders requires --rdist"),
                _ => Vec::new(),
            };
            let spec = RenderSpec {
                scale: args.scale,
                epsilon: args.epsilon,
                layers: args.layers.map(|l| l.into_iter().collect()).unwrap_or_else(|| RenderSpec::default().layers),
            };
            let inputs = RenderInputs {
                region: &region,
                parity: parity.as_ref(),
                roots: roots.as_ref(),
                labels: labels.as_ref(),
                gliders: &gliders,
            };
            let svg = render::render(&inputs, &spec)?;
            match args.output {
                Some(p) => std::fs::write(&p, svg).with_context(|| format!("writing {}", p.display()))?,
                None => outp!(out, "{svg}"),
            }
            Ok(0)
        }
    }
}

fn run_pauli(command: PauliCommand, out: &Out) -> Result<u8> {
    match command {
        PauliCommand::Validate { region, puzzle } => {
            let (region, labels) = (load_region(&region)?, load_puzzle(&puzzle)?);
            let ok = pauli::validate(&labels, &region)?;
            out.verdict(ok, if ok { "valid" } else { "invalid" });
            Ok(if ok { 0 } else { 1 })
        }
        PauliCommand::Extend { region, rdist, seed } => {
            let (region, delta) = (load_region(&region)?, load_rdist(&rdist)?);
            let seed = Seed::new(
                parse_face(&seed[0], &seed[1], &seed[2])?,
                parse_label(&seed[3])?,
                parse_face(&seed[4], &seed[5], &seed[6])?,
                parse_label(&seed[7])?,
            );
            match pauli::extend(&delta, &region, seed) {
                Ok(labels) => {
                    emit_puzzle(out, &labels);
                    Ok(0)
                }
                Err(e @ (pauli::PauliError::Contradiction { .. } | pauli::PauliError::Unreached(_))) => {
                    eprintln!("{e}");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        PauliCommand::Roots { region, puzzle } => {
            let (region, labels) = (load_region(&region)?, load_puzzle(&puzzle)?);
            emit_rdist(out, &pauli::induced_roots(&labels, &region)?);
            Ok(0)
        }
        PauliCommand::Even { region, puzzle } => {
            let (region, labels) = (load_region(&region)?, load_puzzle(&puzzle)?);
            let ok = pauli::check_even(&labels, &region)?;
            out.verdict(ok, if ok { "even" } else { "odd" });
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn run_link(command: LinkCommand, out: &Out) -> Result<u8> {
    let g = linkgraph::pauli_cayley();
    match command {
        LinkCommand::Ranks => {
            let roots = linkgraph::enumerate_roots(&g);
            let mut counts = std::collections::BTreeMap::new();
            for r in &roots {
                let rank = linkgraph::root_rank(&g, r)?;
                *counts.entry(rank.to_string()).or_insert(0usize) += 1;
            }
            let lemma = linkgraph::verify_rank_label_lemma(&g)?;
            match out.format {
                Format::Text => {
                    outln!(out, "vertices {} roots {}", g.vertex_count(), roots.len());
                    for (rank, n) in &counts {
                        outln!(out, "rank {rank}: {n}");
                    }
                    out.verdict(lemma, &format!("rank 2 iff three distinct labels: {}", if lemma { "holds" } else { "fails" }));
                }
                Format::Json => out.json(json!({
                    "vertices": g.vertex_count(), "roots": roots.len(), "ranks": counts, "lemma": lemma
                })),
            }
            Ok(if lemma { 0 } else { 1 })
        }
        LinkCommand::Iso => {
            let mk = linkgraph::moebius_kantor();
            match linkgraph::find_isomorphism(&g, &mk) {
                Some(map) => {
                    match out.format {
                        Format::Text => {
                            out.verdict(true, "Cayley(P;X,Y,Z) ≅ GP(8,3)");
                            for (v, w) in map.iter().enumerate() {
                                outln!(out, "{} -> {}", g.name(v), mk.name(*w));
                            }
                        }
                        Format::Json => {
                            for (v, w) in map.iter().enumerate() {
                                out.json(json!({ "from": g.name(v), "to": mk.name(*w) }));
                            }
                        }
                    }
                    Ok(0)
                }
                None => {
                    out.verdict(false, "Cayley(P;X,Y,Z) is not isomorphic to GP(8,3)");
                    Ok(1)
                }
            }
        }
        LinkCommand::Relators => {
            let ok = linkgraph::verify_relator_cycles(&g)?;
            let cycles = g.six_cycles();
            match out.format {
                Format::Text => {
                    for c in &cycles {
                        let word: String = (0..6).map(|i| g.label(c[i], c[(i + 1) % 6]).expect("labelled").to_string()).collect();
                        let names: Vec<&str> = c.iter().map(|v| g.name(*v)).collect();
                        outln!(out, "{word} {}", names.join(" "));
                    }
                    out.verdict(ok, &format!("{} six-cycles, all relators: {}", cycles.len(), if ok { "yes" } else { "no" }));
                }
                Format::Json => {
                    for c in &cycles {
                        let word: String = (0..6).map(|i| g.label(c[i], c[(i + 1) % 6]).expect("labelled").to_string()).collect();
                        out.json(json!({ "word": word, "vertices": c.iter().map(|v| g.name(*v)).collect::<Vec<_>>() }));
                    }
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let color = std::env::var("MK_COLOR").is_ok_and(|v| v == "1") && std::io::stdout().is_terminal();
    let out = Out { format: cli.format, color, buf: RefCell::new(String::new()) };
    let result = run(cli, &out);
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(out.buf.borrow().as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
