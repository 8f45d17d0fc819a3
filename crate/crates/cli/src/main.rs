use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use semirep::characters::{abelian_character_table, load_table, symmetric_table, CharacterTable};
use semirep::constructions::{
    gbar_quiver, hsiao_quiver_closed_form, hsiao_quiver_general, permutation_group, rank,
    representation_type,
};
use semirep::quiver::{full_quiver, QuiverGraph};
use semirep::rep::{cartan_closed_form, cartan_oracle, is_directed, nico_bound, Analysis};
use semirep::semigroup::{
    FiniteSemigroup, GeneratorSpec, Group, SemigroupFile, DEFAULT_ELEMENT_CAP,
};
use semirep::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "semirep", version, about = "Representation theory of finite regular semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Cross-check against an independent computation; a mismatch exits 3.
    #[arg(long, global = true)]
    oracle: bool,

    /// Largest semigroup enumerated from generators.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Closed,
    General,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Green structure and J-class data.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Left invertibility of every sandwich matrix.
    Directed {
        #[arg(long)]
        input: PathBuf,
    },
    /// Quiver of a right regular band of groups.
    Quiver {
        #[arg(long)]
        input: PathBuf,
        /// `J=PATH`: table for the maximal subgroup of J-class J.
        #[arg(long = "char-table")]
        char_table: Vec<String>,
    },
    /// Cartan matrix of a right regular band of groups.
    Cartan {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "char-table")]
        char_table: Vec<String>,
    },
    /// Quiver of ordered G-partitions.
    Hsiao {
        #[arg(long)]
        n: usize,
        /// Multiplication table of G; trivial group if omitted.
        #[arg(long = "group-table")]
        group_table: Option<PathBuf>,
        #[arg(long = "char-table")]
        char_table: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
    },
    /// Quiver of a permutation group with the constant maps adjoined.
    Gbar {
        #[arg(long)]
        generators: PathBuf,
        #[arg(long = "char-table")]
        char_table: Option<PathBuf>,
    },
    /// Rank and representation type of a transitive permutation group.
    Classify {
        #[arg(long)]
        generators: PathBuf,
    },
    /// Nico's bound on the global dimension.
    Nico {
        #[arg(long)]
        input: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_semigroup(path: &Path, cap: usize) -> Result<FiniteSemigroup> {
    SemigroupFile::from_json(&read(path)?)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?
        .build(cap)
}

fn load_generators(path: &Path) -> Result<GeneratorSpec> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Tables for every J-class: from `J=PATH` arguments, otherwise built in.
fn tables_for(an: &Analysis, specs: &[String]) -> Result<Vec<CharacterTable>> {
    let mut given: Vec<Option<CharacterTable>> = vec![None; an.num_j_classes()];
    for spec in specs {
        let (j, path) = spec
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("--char-table {spec}: expected J=PATH")))?;
        let j: usize = j
            .parse()
            .ok()
            .filter(|&j| j < an.num_j_classes())
            .ok_or_else(|| Error::Input(format!("--char-table {spec}: no J-class {j}")))?;
        given[j] = Some(load_table(&read(Path::new(path))?, &an.subgroups[j].group)?);
    }
    given
        .into_iter()
        .enumerate()
        .map(|(j, t)| match t {
            Some(t) => Ok(t),
            None => abelian_character_table(&an.subgroups[j].group).map_err(|_| {
                Error::Precondition(format!(
                    "J-class {j} has a non-abelian maximal subgroup; pass --char-table {j}=PATH"
                ))
            }),
        })
        .collect()
}

fn principal_line(an: &Analysis) -> String {
    let order: Vec<String> = an.green.principal_order.iter().map(|j| format!("J{j}")).collect();
    format!("principal order: {}\n", order.join(" < "))
}

fn emit_quiver(q: &QuiverGraph, format: Format, header: &str) -> String {
    match format {
        Format::Dot => q.to_dot(),
        Format::Json => q.to_json() + "\n",
        Format::Text => {
            let mut out = header.to_string();
            let _ = writeln!(out, "{} vertices, {} arrows", q.vertices.len(), q.arrow_count());
            for v in &q.vertices {
                let _ = writeln!(out, "  v{} {}", v.id, v.display);
            }
            for a in &q.arrows {
                let _ = writeln!(out, "  {} -> {} x{}", q.vertex(a.from).display, q.vertex(a.to).display, a.mult);
            }
            out
        }
    }
}

fn analyze(s: FiniteSemigroup, format: Format) -> Result<String> {
    let regular = s.is_regular();
    let rrbg = s.is_rrbg();
    let monoid = s.identity().is_some();
    let an = match Analysis::new(s.clone()) {
        Ok(an) => an,
        Err(Error::Precondition(msg)) if format != Format::Json => {
            return Ok(format!("order {}\nregular: false ({msg})\n", s.order()));
        }
        Err(e) => return Err(e),
    };
    let classes: Vec<_> = an
        .green
        .principal_order
        .iter()
        .map(|&j| {
            let rec = &an.records[j];
            json!({
                "jclass": j,
                "size": rec.elements.len(),
                "idempotent": s.label(rec.e),
                "l_classes": rec.ell(),
                "r_classes": rec.r(),
                "group_order": an.subgroups[j].group.order(),
                "group_abelian": an.subgroups[j].group.is_abelian(),
            })
        })
        .collect();
    if format == Format::Json {
        let v = json!({
            "order": s.order(),
            "regular": regular,
            "monoid": monoid,
            "rrbg": rrbg,
            "principal_order": an.green.principal_order,
            "j_classes": classes,
        });
        return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
    }
    let mut out = format!("order {}\nregular: {regular}\nmonoid: {monoid}\nrrbg: {rrbg}\n", s.order());
    out += &principal_line(&an);
    for c in &classes {
        let _ = writeln!(
            out,
            "  J{}: {} elements, e = {}, {} L-classes, {} R-classes, |G| = {}",
            c["jclass"], c["size"], c["idempotent"].as_str().unwrap(), c["l_classes"], c["r_classes"], c["group_order"]
        );
    }
    Ok(out)
}

fn directed(s: FiniteSemigroup, format: Format) -> Result<String> {
    let an = Analysis::new(s)?;
    let report = is_directed(&an)?;
    if format == Format::Json {
        let classes: Vec<_> = report
            .classes
            .iter()
            .map(|c| json!({"jclass": c.jclass, "expansion_rank": c.expansion_rank, "full_rank": c.full_rank}))
            .collect();
        return Ok(serde_json::to_string_pretty(&json!({"directed": report.directed, "classes": classes})).unwrap() + "\n");
    }
    let mut out = principal_line(&an);
    for &j in &an.green.principal_order {
        let c = &report.classes[j];
        let _ = writeln!(out, "  J{}: expansion rank {} of {}", j, c.expansion_rank, c.full_rank);
    }
    out += if report.directed { "directed\n" } else { "not directed\n" };
    Ok(out)
}

fn cartan(s: FiniteSemigroup, specs: &[String], oracle: bool, format: Format) -> Result<String> {
    let an = Analysis::new(s)?;
    let tables = tables_for(&an, specs)?;
    let c = cartan_closed_form(&an, &tables)?;
    let mut checked = false;
    if oracle {
        let o = cartan_oracle(&an, &tables)?;
        if o.entries != c.entries {
            return Err(Error::Internal("Cartan matrix differs from the multiplicity-formula oracle".into()));
        }
        checked = true;
    }
    if format == Format::Json {
        let mut v = json!({"vertices": c.vertices, "matrix": c.entries});
        if checked {
            v["oracle"] = json!("oracle agrees");
        }
        return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
    }
    let mut out = principal_line(&an);
    for v in &c.vertices {
        let _ = writeln!(out, "  v{} {}", v.id, v.display);
    }
    for row in &c.entries {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
    if checked {
        out += "oracle agrees\n";
    }
    Ok(out)
}

fn quiver(s: FiniteSemigroup, specs: &[String], oracle: bool, format: Format) -> Result<String> {
    let an = Analysis::new(s)?;
    an.require_rrbg()?;
    let tables = tables_for(&an, specs)?;
    let report = full_quiver(&an, &tables, oracle)?;
    let mut header = principal_line(&an);
    if oracle {
        let checked = report.pairs.iter().filter(|p| p.oracle_checked).count();
        let _ = writeln!(header, "oracle agrees ({checked} of {} pairs checked)", report.pairs.len());
    }
    Ok(emit_quiver(&report.graph, format, &header))
}

fn group_and_table(group_table: Option<&Path>, char_table: Option<&Path>, cap: usize) -> Result<CharacterTable> {
    let g = match group_table {
        Some(p) => Group::from_semigroup(load_semigroup(p, cap)?)?,
        None => Group::trivial(),
    };
    match char_table {
        Some(p) => load_table(&read(p)?, &g),
        None => abelian_character_table(&g)
            .map_err(|_| Error::Precondition("the group is not abelian; pass --char-table".into())),
    }
}

fn hsiao(n: usize, table: &CharacterTable, mode: Mode, oracle: bool, format: Format) -> Result<String> {
    let mut header = format!("n = {n}, |G| = {}\n", table.group().order());
    let graph = match mode {
        Mode::Closed => hsiao_quiver_closed_form(n, table),
        Mode::General | Mode::Both => {
            let report = hsiao_quiver_general(n, table, oracle)?;
            if oracle {
                header += "oracle agrees\n";
            }
            if mode == Mode::Both {
                let closed = hsiao_quiver_closed_form(n, table);
                if !closed.same_labelled(&report.graph) {
                    return Err(Error::Internal("closed form and general algorithm disagree".into()));
                }
                header += "closed form and general algorithm agree\n";
            }
            report.graph
        }
    };
    Ok(emit_quiver(&graph, format, &header))
}

fn perm_table(spec: &GeneratorSpec, char_table: Option<&Path>) -> Result<CharacterTable> {
    let t = permutation_group(spec.degree, &spec.maps)?;
    let maps = t.maps.clone();
    let g = Group::from_semigroup(t.semigroup)?;
    if let Some(p) = char_table {
        return load_table(&read(p)?, &g);
    }
    if g.is_abelian() {
        return abelian_character_table(&g);
    }
    let full: usize = (1..=spec.degree).product();
    if g.order() == full {
        return symmetric_table(&g, move |x| maps[x].iter().map(|&p| p as usize).collect());
    }
    Err(Error::Precondition("no built-in table for this group; pass --char-table".into()))
}

fn gbar(spec: &GeneratorSpec, char_table: Option<&Path>, oracle: bool, format: Format) -> Result<String> {
    let table = perm_table(spec, char_table)?;
    let q = gbar_quiver(spec.degree, &spec.maps, &table)?;
    let mut header = String::new();
    if oracle {
        let (_, an, tables) = semirep::constructions::gbar_analysis(spec.degree, &spec.maps, &table)?;
        let full = full_quiver(&an, &tables, true)?.graph;
        if full != q {
            return Err(Error::Internal("permutation-character recipe differs from the general algorithm".into()));
        }
        header += "oracle agrees\n";
    }
    Ok(emit_quiver(&q, format, &header))
}

fn classify(spec: &GeneratorSpec, format: Format) -> Result<String> {
    let r = rank(spec.degree, &spec.maps)?;
    let kind = representation_type(spec.degree, &spec.maps)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!({"rank": r, "type": kind.to_string()})).unwrap() + "\n",
        _ => format!("rank {r}\n{kind} representation type\n"),
    })
}

fn nico(s: FiniteSemigroup, format: Format) -> Result<String> {
    let an = Analysis::new(s)?;
    let d = nico_bound(&an.semigroup, &an.green);
    if format == Format::Json {
        let v = json!({"sigma": d.sigma, "bound": d.bound, "longest_chain": d.longest_chain});
        return Ok(serde_json::to_string_pretty(&v).unwrap() + "\n");
    }
    let mut out = principal_line(&an);
    for &j in &an.green.principal_order {
        let _ = writeln!(out, "  J{j}: sigma {}", d.sigma[j]);
    }
    let _ = writeln!(out, "global dimension at most {}", d.bound);
    Ok(out)
}

fn run(cli: &Cli) -> Result<String> {
    let f = cli.format;
    if f == Format::Dot && !matches!(cli.command, Command::Quiver { .. } | Command::Hsiao { .. } | Command::Gbar { .. }) {
        return Err(Error::Input("--format dot applies to quiver, hsiao and gbar".into()));
    }
    match &cli.command {
        Command::Analyze { input } => analyze(load_semigroup(input, cli.cap)?, f),
        Command::Directed { input } => directed(load_semigroup(input, cli.cap)?, f),
        Command::Quiver { input, char_table } => quiver(load_semigroup(input, cli.cap)?, char_table, cli.oracle, f),
        Command::Cartan { input, char_table } => cartan(load_semigroup(input, cli.cap)?, char_table, cli.oracle, f),
        Command::Hsiao { n, group_table, char_table, mode } => {
            let table = group_and_table(group_table.as_deref(), char_table.as_deref(), cli.cap)?;
            hsiao(*n, &table, *mode, cli.oracle, f)
        }
        Command::Gbar { generators, char_table } => gbar(&load_generators(generators)?, char_table.as_deref(), cli.oracle, f),
        Command::Classify { generators } => classify(&load_generators(generators)?, f),
        Command::Nico { input } => nico(load_semigroup(input, cli.cap)?, f),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
