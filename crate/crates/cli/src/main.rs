use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ferrers_sandpile::io::{to_json, ConfigRecord, PermRecord, TableauRecord};
use ferrers_sandpile::oracle::{self, CertifyOptions};
use ferrers_sandpile::{
    enumerate_tableaux, stabilize_perm, Configuration, DecoratedPermutation, DecoratedTableau,
    FerrersDiagram, FerrersGraph,
};
use serde_json::json;

mod convert;

use convert::Kind;

#[derive(Parser)]
#[command(name = "ferrers", version, about = "Recurrent sandpile configurations on Ferrers graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the vertices and edges of the graph of a diagram.
    Graph {
        #[arg(long)]
        shape: FerrersDiagram,
    },
    /// Convert between configurations, tableaux, permutations and trees.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Needed when converting from a configuration given as heights.
        #[arg(long)]
        shape: Option<FerrersDiagram>,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Decorations `a_1,...,a_n`, overriding any in the input.
        #[arg(long)]
        decorations: Option<String>,
    },
    /// Stabilize a configuration.
    Stabilize {
        #[arg(long)]
        shape: FerrersDiagram,
        #[arg(long)]
        heights: Configuration,
        #[arg(long)]
        trace: bool,
        /// Run the permutation-side algorithm and check it against the graph.
        #[arg(long, value_enum)]
        via: Option<Via>,
    },
    /// Stream every object of one kind, one per line; the count goes to stderr.
    Enumerate {
        #[arg(long)]
        shape: FerrersDiagram,
        #[arg(long, value_enum)]
        kind: EnumKind,
    },
    /// Run the oracle suite over every diagram up to a semiperimeter.
    Certify {
        #[arg(long)]
        semiperimeter_max: usize,
        #[arg(long, default_value_t = 200)]
        walk_steps: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Stable,
    Recurrent,
    Minimal,
    Tableaux,
    Decorated,
}

enum Failure {
    Format(String),
    Domain(String),
    Certification(String),
    Io(io::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Format(_) => 2,
            Failure::Domain(_) | Failure::Io(_) => 3,
            Failure::Certification(_) => 4,
        }
    }
}

impl From<ferrers_sandpile::Error> for Failure {
    fn from(e: ferrers_sandpile::Error) -> Self {
        if e.is_format_error() {
            Failure::Format(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(3);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            match &f {
                Failure::Format(m) | Failure::Domain(m) | Failure::Certification(m) => {
                    eprintln!("error: {m}")
                }
                Failure::Io(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Graph { shape } => graph(shape, fmt, out),
        Command::Convert {
            from,
            to,
            shape,
            input,
            decorations,
        } => {
            let obj = convert::read(*from, shape.as_ref(), input, decorations.as_deref())?;
            convert::write(&obj, *to, fmt, out)
        }
        Command::Stabilize {
            shape,
            heights,
            trace,
            via,
        } => stabilize(shape, heights, *trace, via.is_some(), fmt, out),
        Command::Enumerate { shape, kind } => {
            no_dot(fmt)?;
            enumerate(shape, *kind, fmt, out)
        }
        Command::Certify {
            semiperimeter_max,
            walk_steps,
            seed,
        } => {
            no_dot(fmt)?;
            certify(*semiperimeter_max, *walk_steps, *seed, fmt, out)
        }
    }
}

fn no_dot(fmt: Format) -> Outcome {
    if fmt == Format::Dot {
        Err(Failure::Format("dot output is only available for graphs and trees".into()))
    } else {
        Ok(())
    }
}

fn graph(shape: &FerrersDiagram, fmt: Format, out: &mut impl Write) -> Outcome {
    let g = shape.graph();
    let lab = g.labeling();
    match fmt {
        Format::Text => {
            writeln!(out, "shape {shape}")?;
            writeln!(out, "vertices 0..={} (sink 0)", g.n())?;
            writeln!(out, "rows {}", join(lab.rows()))?;
            writeln!(out, "columns {}", join(lab.cols()))?;
            writeln!(out, "edges {}", g.edge_count())?;
            for (a, b) in g.edges() {
                writeln!(out, "{a} {b}")?;
            }
        }
        Format::Json => {
            let v = json!({
                "shape": shape.parts(),
                "vertices": g.vertex_count(),
                "rows": lab.rows(),
                "cols": lab.cols(),
                "edges": g.edges(),
            });
            writeln!(out, "{v}")?;
        }
        Format::Dot => writeln!(out, "{}", graph_dot(&g))?,
    }
    Ok(())
}

fn graph_dot(g: &FerrersGraph) -> String {
    let lab = g.labeling();
    let mut s = String::from("graph ferrers {\n");
    for &r in lab.rows() {
        s.push_str(&format!("  {r} [shape=box];\n"));
    }
    for (a, b) in g.edges() {
        s.push_str(&format!("  {a} -- {b};\n"));
    }
    s.push('}');
    s
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn stabilize(
    shape: &FerrersDiagram,
    c: &Configuration,
    trace: bool,
    via_perm: bool,
    fmt: Format,
    out: &mut impl Write,
) -> Outcome {
    no_dot(fmt)?;
    let g = shape.graph();
    let c = Configuration::for_graph(&g, c.heights().to_vec())?;
    let st = g.stabilize_traced(&c)?;

    let mut perm_steps = Vec::new();
    let mut perm_result = None;
    if via_perm {
        let start = g.encode_as_permutation(&c)?;
        let (end, steps) = stabilize_perm(&start);
        let expected = DecoratedPermutation::from_tableau(&g.psi(&st.stable)?);
        if end != expected || end.to_configuration() != st.stable {
            return Err(Failure::Certification(format!(
                "permutation side gave {end}, graph side {expected}"
            )));
        }
        perm_steps = std::iter::once(start.to_string())
            .chain(steps.iter().map(|s| s.to_string()))
            .collect();
        perm_result = Some(end);
    }

    match fmt {
        Format::Json => {
            let mut v = json!({
                "shape": shape.parts(),
                "heights": st.stable.heights(),
                "topples": &st.topples[1..],
            });
            if trace {
                v["trace"] = json!(st.trace);
            }
            if let Some(p) = &perm_result {
                v["perm"] = serde_json::to_value(PermRecord::from(p)).expect("serializable");
                if trace {
                    v["perm_trace"] = json!(perm_steps);
                }
            }
            writeln!(out, "{v}")?;
        }
        _ => {
            if trace {
                let mut cur = c.clone();
                for &v in &st.trace {
                    cur = g.topple(&cur, v)?;
                    writeln!(out, "topple {v}: {cur}")?;
                }
                for s in &perm_steps {
                    writeln!(out, "perm {s}")?;
                }
            }
            writeln!(out, "{}", st.stable)?;
            if let Some(p) = &perm_result {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(())
}

fn enumerate(shape: &FerrersDiagram, kind: EnumKind, fmt: Format, out: &mut impl Write) -> Outcome {
    let g = shape.graph();
    let budget = oracle::budget_from_env();
    let json = fmt == Format::Json;
    let mut count = 0usize;
    let mut emit_config = |out: &mut dyn Write, c: &Configuration| -> io::Result<()> {
        count += 1;
        if json {
            writeln!(out, "{}", to_json(&ConfigRecord::new(shape, c)))
        } else {
            writeln!(out, "{c}")
        }
    };
    let noun = match kind {
        EnumKind::Stable => {
            for c in oracle::enumerate_stable(&g, budget)? {
                emit_config(out, &c)?;
            }
            "stable configurations"
        }
        EnumKind::Recurrent => {
            for c in oracle::enumerate_stable(&g, budget)? {
                if g.is_recurrent(&c)? {
                    emit_config(out, &c)?;
                }
            }
            "recurrent configurations"
        }
        EnumKind::Minimal => {
            let mut all: Vec<Configuration> = enumerate_tableaux(shape).iter().map(|t| t.phi_tc()).collect();
            all.sort();
            for c in &all {
                emit_config(out, c)?;
            }
            "minimal recurrent configurations"
        }
        EnumKind::Tableaux => {
            for t in enumerate_tableaux(shape) {
                count += 1;
                if json {
                    writeln!(out, "{}", to_json(&TableauRecord::from(&t)))?;
                } else {
                    writeln!(out, "{}", t.to_compact())?;
                }
            }
            "EW-tableaux"
        }
        EnumKind::Decorated => {
            for t in enumerate_tableaux(shape) {
                for d in DecoratedTableau::all_canonical(&t) {
                    count += 1;
                    if json {
                        writeln!(out, "{}", to_json(&TableauRecord::from(&d)))?;
                    } else {
                        let a: Vec<String> = d.decorations().iter().map(|a| a.to_string()).collect();
                        writeln!(out, "{} {}", t.to_compact(), a.join(","))?;
                    }
                }
            }
            "canonical decorated tableaux"
        }
    };
    eprintln!("{count} {noun}");
    Ok(())
}

fn certify(max: usize, walk_steps: usize, seed: u64, fmt: Format, out: &mut impl Write) -> Outcome {
    let opts = CertifyOptions {
        budget: oracle::budget_from_env(),
        walk_steps,
        seed,
    };
    let reports = oracle::certify_all(max, &opts)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if fmt == Format::Json {
        writeln!(out, "{}", serde_json::to_string(&reports).expect("serializable"))?;
    } else {
        for r in &reports {
            writeln!(out, "{}", r.summary())?;
            for p in r.failures() {
                if let Some(c) = &p.counterexample {
                    writeln!(out, "  {}: {c}", p.name)?;
                }
            }
        }
        writeln!(out, "{} shapes, {} failed", reports.len(), failed)?;
    }
    if failed > 0 {
        return Err(Failure::Certification(format!("{failed} shapes failed certification")));
    }
    Ok(())
}
