use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use symtype::enumeration::{
    enumerate_types_parallel, medial_provenance, row_from, Census, DualityMode, TypeRecord,
};
use symtype::formats::dot::ToDot;
use symtype::formats::{self, builtin, Document, FormatError, MapError};
use symtype::names::Registry;
use symtype::selftest::Selftest;
use symtype::transforms::{self, NotAMedial};
use symtype::{quotient, CanonicalCode, FlagGraph, TypeGraph};

const RECORDS_HELP: &str = "\
Output formats:
  table    aligned columns with a header line
  records  one line per item, space-separated key=value fields:
             type    index= name= code= self_dual= self_petrie= edge_transitive=
                     automorphisms= dualities= polarities= proper=
             medial  code= name= source= how=proper|improper[d]|none
             census  k= a= b= c= d= e= f= g= mode=
           counts in `dualities`/`polarities` follow --duality-mode
  dot-dir  one Graphviz file per type, written to the -o directory as <k>_<index>.dot";

#[derive(Parser)]
#[command(name = "symtype", version, about = "Flag graphs, symmetry type graphs and medial types of maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a flg, stg, xstg or map file.
    Validate { file: String },
    /// Report elements, symmetry and type graph of a map.
    Analyze { file: String },
    /// Apply a map operator and write the result as flg.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        file: String,
        /// Output path; demedialize writes `<out>.a` and `<out>.b`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the symmetry type graph of a map as stg or Graphviz.
    Typegraph {
        file: String,
        /// `.dot` selects Graphviz output, anything else stg.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<TypeFormat>,
    },
    /// Enumerate symmetry type graphs on k vertices.
    #[command(after_help = RECORDS_HELP)]
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Print the census row for k.
        #[arg(long)]
        census: bool,
        /// List medial types on k vertices with their sources.
        #[arg(long)]
        medial: bool,
        #[arg(long, default_value_t = DualityMode::CALIBRATED)]
        duality_mode: DualityMode,
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Directory for `--format dot-dir`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the reference checks and print one line per check.
    Selftest {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Dual,
    Petrie,
    Opposite,
    Medial,
    Demedialize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeFormat {
    Stg,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Table,
    Records,
    DotDir,
}

/// A failed command: exit code, error category and message.
struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "Usage",
            message: message.into(),
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Failure {
            code: 2,
            kind: "Io",
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let kind = match e {
            FormatError::Syntax { .. } => "Syntax",
            FormatError::Flag(_) => "InvalidFlagGraph",
            FormatError::Type(_) => "InvalidTypeGraph",
            FormatError::Map(_) => "InvalidMap",
        };
        Failure {
            code: 1,
            kind,
            message: e.to_string(),
        }
    }
}

impl From<MapError> for Failure {
    fn from(e: MapError) -> Self {
        FormatError::Map(e).into()
    }
}

impl From<NotAMedial> for Failure {
    fn from(e: NotAMedial) -> Self {
        Failure {
            code: 1,
            kind: "NotAMedial",
            message: e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

/// Reads a file, or a builtin map given as `builtin:<name>`.
fn read_document(source: &str) -> Result<Document> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin::by_name(name)
            .map(Document::Flg)
            .map_err(|e| Failure::usage(e.to_string()));
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
    Ok(formats::parse_document(&text)?)
}

fn read_map(source: &str) -> Result<FlagGraph> {
    match read_document(source)? {
        Document::Flg(g) => Ok(g),
        Document::Map(w) => Ok(w.to_flag_graph()?),
        other => Err(Failure::usage(format!(
            "{source}: expected a flg or map file, found {}",
            other.kind()
        ))),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn registry() -> Result<Registry> {
    Registry::from_env().map_err(|e| Failure {
        code: 2,
        kind: "Aliases",
        message: e.to_string(),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(file: &str) -> Result<()> {
    let summary = match read_document(file)? {
        Document::Flg(g) => format!("flg n={}", g.n()),
        Document::Stg(t) => format!("stg k={}", t.k()),
        Document::Xstg(x) => format!(
            "xstg k={} {}",
            x.k(),
            if x.is_proper() { "proper" } else { "improper" }
        ),
        Document::Map(w) => {
            let g = w.to_flag_graph()?;
            format!("map faces={} flags={}", w.faces().len(), g.n())
        }
    };
    println!("ok: {summary}");
    Ok(())
}

fn analyze(file: &str) -> Result<()> {
    let g = read_map(file)?;
    let e = g.elements();
    let autos = g.color_automorphisms();
    let t = quotient(&g);
    let code = t.canonical_code();
    let alias = registry()?.name(&code).unwrap_or_else(|| "-".to_string());
    let dualities = g.map_dualities();
    let self_dual = if dualities.is_empty() {
        "no".to_string()
    } else {
        let proper = dualities.iter().filter(|d| d.proper).count();
        let kinds: Vec<&str> = [(proper > 0, "proper"), (proper < dualities.len(), "improper")]
            .into_iter()
            .filter_map(|(has, name)| has.then_some(name))
            .collect();
        format!("yes ({})", kinds.join(", "))
    };
    let schlafli = e.schlafli.map_or("none".to_string(), |(p, q)| format!("{{{p},{q}}}"));

    let mut out = String::new();
    let mut line = |key: &str, value: &dyn std::fmt::Display| writeln!(out, "{key}: {value}").unwrap();
    line("flags", &g.n());
    line("vertices", &e.num_vertices());
    line("edges", &e.num_edges());
    line("faces", &e.num_faces());
    line("euler", &e.euler);
    line("orientable", &yes_no(e.orientable));
    line("schlafli", &schlafli);
    line("automorphisms", &autos.len());
    line("orbits", &t.k());
    line("type", &code);
    line("alias", &alias);
    line("self_dual", &self_dual);
    line("self_petrie", &yes_no(transforms::petrie_flag(&g).is_isomorphic(&g)));
    line("medial", &yes_no(transforms::demedialize(&g).is_ok()));
    print!("{out}");
    Ok(())
}

fn transform(op: Op, file: &str, output: Option<&Path>) -> Result<()> {
    let g = read_map(file)?;
    let result = match op {
        Op::Dual => transforms::dual_flag(&g),
        Op::Petrie => transforms::petrie_flag(&g),
        Op::Opposite => transforms::opposite(&g),
        Op::Medial => transforms::medial_flag(&g),
        Op::Demedialize => {
            let (a, b) = transforms::demedialize(&g)?;
            let base = match output {
                Some(p) => p.to_path_buf(),
                None if !file.starts_with("builtin:") => PathBuf::from(file),
                None => return Err(Failure::usage("demedialize of a builtin needs -o")),
            };
            for (suffix, m) in [("a", &a), ("b", &b)] {
                let mut path = base.clone().into_os_string();
                path.push(format!(".{suffix}"));
                let path = PathBuf::from(path);
                write_output(Some(&path), &formats::serialize_flg(m))?;
            }
            return Ok(());
        }
    };
    write_output(output, &formats::serialize_flg(&result))
}

fn typegraph(file: &str, output: Option<&Path>, format: Option<TypeFormat>) -> Result<()> {
    let format = format.unwrap_or_else(|| match output.and_then(Path::extension) {
        Some(ext) if ext == "dot" => TypeFormat::Dot,
        _ => TypeFormat::Stg,
    });
    let text = match read_document(file)? {
        Document::Xstg(x) => match format {
            TypeFormat::Dot => x.to_dot(),
            TypeFormat::Stg => formats::serialize_xstg(&x),
        },
        doc => {
            let t: TypeGraph = match doc {
                Document::Stg(t) => t,
                Document::Flg(g) => quotient(&g),
                Document::Map(w) => quotient(&w.to_flag_graph()?),
                Document::Xstg(_) => unreachable!(),
            };
            match format {
                TypeFormat::Dot => t.to_dot(),
                TypeFormat::Stg => formats::serialize_stg(&t),
            }
        }
    };
    write_output(output, &text)
}

struct Enumerate {
    k: usize,
    census: bool,
    medial: bool,
    mode: DualityMode,
    format: ListFormat,
    jobs: usize,
    output: Option<PathBuf>,
}

fn name_of(reg: &Registry, code: &CanonicalCode, index: usize) -> String {
    reg.alias(code)
        .map_or_else(|| format!("{}:{index}", code.k()), str::to_string)
}

fn enumerate(args: Enumerate) -> Result<()> {
    let Enumerate { k, census, medial, mode, format, jobs, output } = args;
    if k == 0 {
        return Err(Failure::usage("--k must be at least 1"));
    }
    let jobs = jobs.max(1);
    if format == ListFormat::DotDir && output.is_none() {
        return Err(Failure::usage("--format dot-dir needs -o <dir>"));
    }
    let reg = registry()?;
    let mut out = String::new();

    if census || medial {
        let current = Census::compute_parallel(k, jobs);
        let half = k.is_multiple_of(2).then(|| Census::compute_parallel(k / 2, jobs));
        if medial {
            let half_codes = half.as_ref().map(|h| h.codes()).unwrap_or_default();
            let own = enumerate_types_parallel(k, jobs);
            let provenance = medial_provenance(&current, half.as_ref());
            if format == ListFormat::DotDir {
                let codes: Vec<CanonicalCode> = provenance.keys().cloned().collect();
                return write_dot_dir(output.as_deref().unwrap(), &codes, &own);
            }
            let source_name = |c: &CanonicalCode| {
                let list = if c.k() == k { &own } else { &half_codes };
                let index = list.binary_search(c).unwrap_or(0);
                name_of(&reg, c, index)
            };
            if format == ListFormat::Table {
                writeln!(out, "{:<10} {:<21} how", "medial", "source").unwrap();
            }
            for (target, sources) in &provenance {
                let index = own.binary_search(target).expect("medial type is enumerated");
                let tname = name_of(&reg, target, index);
                for (source, how) in sources {
                    match format {
                        ListFormat::Table => writeln!(out, "{tname:<10} {:<21} {how}", source_name(source)),
                        _ => writeln!(
                            out,
                            "medial code={target} name={tname} source={source} how={how}"
                        ),
                    }
                    .unwrap();
                }
            }
        }
        if census {
            let row = row_from(&current, half.as_ref(), mode);
            match format {
                ListFormat::Records => writeln!(
                    out,
                    "census k={} a={} b={} c={} d={} e={} f={} g={} mode={}",
                    row.k, row.a, row.b, row.c, row.d, row.e, row.f, row.g, row.mode
                ),
                _ => writeln!(
                    out,
                    "{:>3} {:>6} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}  mode\n{:>3} {:>6} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4}  {}",
                    "k", "a", "b", "c", "d", "e", "f", "g",
                    row.k, row.a, row.b, row.c, row.d, row.e, row.f, row.g, row.mode
                ),
            }
            .unwrap();
        }
        print!("{out}");
        if format != ListFormat::DotDir {
            return Ok(());
        }
        out.clear();
    }

    let codes = enumerate_types_parallel(k, jobs);
    if format == ListFormat::DotDir {
        return write_dot_dir(output.as_deref().unwrap(), &codes, &codes);
    }
    if format == ListFormat::Table {
        writeln!(
            out,
            "{:<8} {:>4} {:>4} {:>4} {:>5} {:>5} {:>5} {:>6}  code",
            "name", "sd", "sp", "et", "aut", "dual", "polar", "proper"
        )
        .unwrap();
    }
    for (index, code) in codes.into_iter().enumerate() {
        let r = TypeRecord::new(code);
        let name = name_of(&reg, &r.code, index);
        match format {
            ListFormat::Table => writeln!(
                out,
                "{name:<8} {:>4} {:>4} {:>4} {:>5} {:>5} {:>5} {:>6}  {}",
                yes_no(r.self_dual),
                yes_no(r.self_petrie),
                yes_no(r.edge_transitive),
                r.automorphisms,
                r.duality_count(mode),
                r.polarity_count(mode),
                yes_no(r.has_proper_polarity()),
                r.code
            ),
            _ => writeln!(
                out,
                "type index={index} name={name} code={} self_dual={} self_petrie={} edge_transitive={} automorphisms={} dualities={} polarities={} proper={}",
                r.code,
                yes_no(r.self_dual),
                yes_no(r.self_petrie),
                yes_no(r.edge_transitive),
                r.automorphisms,
                r.duality_count(mode),
                r.polarity_count(mode),
                yes_no(r.has_proper_polarity()),
            ),
        }
        .unwrap();
    }
    print!("{out}");
    Ok(())
}

/// `own` is the sorted list of all `k`-vertex codes, used for file names.
fn write_dot_dir(dir: &Path, codes: &[CanonicalCode], own: &[CanonicalCode]) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    for code in codes {
        let index = own.binary_search(code).expect("code is enumerated");
        let path = dir.join(format!("{}_{index}.dot", code.k()));
        write_output(Some(&path), &code.to_type_graph().to_dot())?;
    }
    println!("wrote {} files to {}", codes.len(), dir.display());
    Ok(())
}

fn selftest(max_k: usize, jobs: usize) -> Result<()> {
    let suite = Selftest::new(max_k, jobs.max(1));
    let outcomes = suite.run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("selftest: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            kind: "Selftest",
            message: format!("{failed} checks failed"),
        })
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Analyze { file } => analyze(&file),
        Command::Transform { op, file, output } => transform(op, &file, output.as_deref()),
        Command::Typegraph { file, output, format } => typegraph(&file, output.as_deref(), format),
        Command::Enumerate { k, census, medial, duality_mode, format, jobs, output } => {
            enumerate(Enumerate {
                k,
                census,
                medial,
                mode: duality_mode,
                format,
                jobs,
                output,
            })
        }
        Command::Selftest { max_k, jobs } => selftest(max_k, jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}: {}", f.kind, f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
