//! Batch command-line interface over the matroids library.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
//! invariant breach.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use matroids::catalog;
use matroids::connectivity;
use matroids::extensions;
use matroids::flats;
use matroids::ground::Mask;
use matroids::modularity::{self, PartitionFamily};
use matroids::quotients;
use matroids::spec::{parse_spec, serialize_spec, MatroidSpec, SpecKind};
use matroids::verify;
use matroids::{Error, Matroid};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Parser)]
#[command(
    name = "matroid",
    version,
    about = "Finite matroid computations",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Seed for sampled verification instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap for subset-enumerating operations (overrides MATROID_MAX_SIZE).
    #[arg(long, global = true)]
    max_size: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and build a matroid, reporting basic facts.
    Build {
        #[arg(long)]
        matroid: String,
    },
    /// Rank of a set.
    Rank {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        set: String,
    },
    /// Closure of a set.
    Closure {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        set: String,
    },
    /// All flats with their ranks.
    Flats {
        #[arg(long)]
        matroid: String,
    },
    /// All circuits.
    Circuits {
        #[arg(long)]
        matroid: String,
    },
    /// Modular-pair test for two sets.
    ModularPair {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Skew-family test.
    Skew {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: String,
    },
    /// Modular-flat test.
    ModularFlat {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        set: String,
    },
    /// Modular-matroid test.
    ModularMatroid {
        #[arg(long)]
        matroid: String,
    },
    /// Nullity of a set.
    Nullity {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        set: String,
    },
    /// Local connectivity of an indexed family.
    LocalConn {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: String,
    },
    /// Connectivity of a partition, or of a set against its complement.
    Lambda {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        set: Option<String>,
    },
    /// Dual connectivity of a partition.
    LambdaDual {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        partition: String,
    },
    /// Enumerate all modular cuts.
    Cuts {
        #[arg(long)]
        matroid: String,
    },
    /// Single-element extension through a modular cut.
    Extend {
        #[arg(long)]
        matroid: String,
        /// Fresh label; generated when omitted.
        #[arg(long)]
        label: Option<String>,
        /// Cut members as a family, e.g. "a,b|a,b,c"; omit for the empty cut.
        #[arg(long, default_value = "")]
        cut: String,
    },
    /// Single-element projection through a modular cut.
    ProjectBy {
        #[arg(long)]
        matroid: String,
        #[arg(long, default_value = "")]
        cut: String,
    },
    /// Guts family of an indexed family, with its validation verdict.
    GutsCut {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        family: String,
    },
    /// Iterated guts projection of a partition.
    GutsIterate {
        #[arg(long)]
        matroid: String,
        #[arg(long)]
        partition: String,
        #[arg(long)]
        steps: usize,
    },
    /// Quotient test.
    Quotient {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
    /// Discrepancy of a quotient pair on a set (default: the ground set).
    Discrepancy {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        set: Option<String>,
    },
    /// Reconstruct a quotient as a projection.
    ReconstructProjection {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
    /// Splice two matroids along a contraction and a deletion.
    Splice {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Run verification suites.
    Verify {
        /// Suite id, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List catalog entries.
    Catalog,
}

struct Doc {
    rows: Vec<(String, String)>,
}

impl Doc {
    fn new() -> Doc {
        Doc { rows: Vec::new() }
    }

    fn push(&mut self, key: &str, value: impl Into<String>) {
        self.rows.push((key.to_string(), value.into()));
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.rows {
            match format {
                Format::Text => writeln!(out, "{k}: {v}").unwrap(),
                Format::Machine => writeln!(out, "{k}\t{v}").unwrap(),
            }
        }
        out
    }
}

/// A named matroid argument: a catalog name or `@file` with a spec document.
struct Input {
    matroid: Matroid,
    digest: String,
}

fn resolve_spec_for_name(name: &str) -> Result<MatroidSpec, Error> {
    if let Some(rest) = name.strip_prefix("uniform:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() == 2 {
            if let (Ok(k), Ok(n)) = (parts[0].trim().parse(), parts[1].trim().parse()) {
                return Ok(MatroidSpec::uniform(name, k, n));
            }
        }
        return Err(Error::UnknownName(name.to_string()));
    }
    if let Some(rest) = name.strip_prefix("free:") {
        let n: usize = rest.parse().map_err(|_| Error::UnknownName(name.into()))?;
        return Ok(MatroidSpec::uniform(name, n, n));
    }
    if let Some(rest) = name.strip_prefix("loops:") {
        let n: usize = rest.parse().map_err(|_| Error::UnknownName(name.into()))?;
        return Ok(MatroidSpec::uniform(name, 0, n));
    }
    catalog::named_entries()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.spec)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn load_matroid(arg: &str) -> Result<Input, Error> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpec(format!("cannot read {path}: {e}")))?;
        let spec = parse_spec(&text)?;
        let matroid = spec.build()?;
        return Ok(Input {
            matroid,
            digest: digest_of(text.as_bytes()),
        });
    }
    let spec = resolve_spec_for_name(arg)?;
    let matroid = catalog::get(arg).or_else(|_| spec.build())?;
    Ok(Input {
        matroid,
        digest: digest_of(serialize_spec(&spec).as_bytes()),
    })
}

fn digest_of(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in out {
        write!(hex, "{b:02x}").unwrap();
    }
    format!("sha256:{hex}")
}

fn parse_set(m: &Matroid, text: &str) -> Result<Mask, Error> {
    let text = text.trim();
    if text.is_empty() || text == "-" {
        return Ok(Mask::EMPTY);
    }
    m.ground().mask_of(text.split(',').map(str::trim))
}

fn parse_family(m: &Matroid, text: &str) -> Result<PartitionFamily, Error> {
    PartitionFamily::parse(m.ground().clone(), text)
}

/// Serialize a matroid as an explicit-bases spec (canonical, reproducible).
fn matroid_to_spec(m: &Matroid, name: &str) -> Result<MatroidSpec, Error> {
    matroids::check_cap(m.len())?;
    let r = m.rank_full();
    let mut bases = Vec::new();
    for s in m.full_mask().subsets() {
        if s.len() == r && m.indep(s) {
            bases.push(
                m.ground()
                    .labels_of(s)
                    .into_iter()
                    .map(String::from)
                    .collect::<Vec<_>>(),
            );
        }
    }
    Ok(MatroidSpec {
        name: name.to_string(),
        kind: SpecKind::ExplicitBases { bases },
        labels: Some(m.ground().labels().to_vec()),
    })
}

fn run(cli: &Cli, argv_echo: &str) -> Result<Doc, Error> {
    let mut doc = Doc::new();
    doc.push("command", argv_echo);

    let seed = cli.seed;
    match &cli.command {
        Command::Build { matroid } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            doc.push("output.size", m.len().to_string());
            doc.push("output.rank", m.rank_full().to_string());
            doc.push("output.loops", m.ground().format_mask(m.loops()));
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(m, m.name().unwrap_or("built"))?),
            );
        }
        Command::Rank { matroid, set } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let x = parse_set(m, set)?;
            doc.push("output.rank", m.rank(x)?.to_string());
        }
        Command::Closure { matroid, set } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let x = parse_set(m, set)?;
            doc.push("output.closure", m.ground().format_mask(m.closure(x)?));
        }
        Command::Flats { matroid } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = flats::flats(m)?;
            doc.push("output.count", fam.len().to_string());
            for (i, (f, r)) in fam.iter().enumerate() {
                doc.push(
                    &format!("output.flat.{i}"),
                    format!("{}\trank={r}", m.ground().format_mask(f)),
                );
            }
        }
        Command::Circuits { matroid } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let cs = flats::circuits(m)?;
            doc.push("output.count", cs.len().to_string());
            for (i, c) in cs.iter().enumerate() {
                doc.push(&format!("output.circuit.{i}"), m.ground().format_mask(*c));
            }
        }
        Command::ModularPair { matroid, x, y } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let xm = parse_set(m, x)?;
            let ym = parse_set(m, y)?;
            doc.push(
                "output.modular_pair",
                modularity::is_modular_pair(m, xm, ym)?.to_string(),
            );
        }
        Command::Skew { matroid, family } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = parse_family(m, family)?;
            doc.push(
                "output.skew",
                modularity::is_skew_family(m, &fam)?.to_string(),
            );
        }
        Command::ModularFlat { matroid, set } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let f = parse_set(m, set)?;
            doc.push(
                "output.modular_flat",
                modularity::is_modular_flat(m, f)?.to_string(),
            );
        }
        Command::ModularMatroid { matroid } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            doc.push(
                "output.modular_matroid",
                modularity::is_modular_matroid(&input.matroid)?.to_string(),
            );
        }
        Command::Nullity { matroid, set } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let x = parse_set(m, set)?;
            doc.push("output.nullity", connectivity::nullity(m, x)?.to_string());
        }
        Command::LocalConn { matroid, family } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = parse_family(m, family)?;
            doc.push(
                "output.local_connectivity",
                connectivity::multi_local_conn(m, &fam)?.to_string(),
            );
        }
        Command::Lambda {
            matroid,
            partition,
            set,
        } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let value = match (partition, set) {
                (Some(p), None) => connectivity::lambda(m, &parse_family(m, p)?)?,
                (None, Some(s)) => connectivity::lambda_set(m, parse_set(m, s)?)?,
                _ => {
                    return Err(Error::InvalidSpec(
                        "lambda needs exactly one of --partition or --set".into(),
                    ))
                }
            };
            doc.push("output.lambda", value.to_string());
        }
        Command::LambdaDual { matroid, partition } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = parse_family(m, partition)?;
            doc.push(
                "output.lambda_dual",
                connectivity::lambda_dual(m, &fam)?.to_string(),
            );
        }
        Command::Cuts { matroid } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let cuts = extensions::enumerate_modular_cuts(m)?;
            doc.push("output.count", cuts.len().to_string());
            for (i, cut) in cuts.iter().enumerate() {
                let rendered: Vec<String> = cut
                    .members()
                    .iter()
                    .map(|&f| m.ground().format_mask(f))
                    .collect();
                doc.push(&format!("output.cut.{i}"), rendered.join("|"));
            }
        }
        Command::Extend {
            matroid,
            label,
            cut,
        } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let cut = parse_cut(m, cut)?;
            let label = match label {
                Some(l) => l.clone(),
                None => generate_label(m),
            };
            let ext = extensions::extend_by(m, &label, &cut)?;
            doc.push("output.label", &label);
            doc.push("output.rank", ext.rank_full().to_string());
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(&ext, "extension")?),
            );
        }
        Command::ProjectBy { matroid, cut } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let cut = parse_cut(m, cut)?;
            let projected = extensions::project_by(m, &cut)?;
            doc.push("output.rank", projected.rank_full().to_string());
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(&projected, "projection")?),
            );
        }
        Command::GutsCut { matroid, family } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = parse_family(m, family)?;
            let g = extensions::guts_cut(m, &fam)?;
            doc.push("output.covers_ground", g.covers_ground().to_string());
            doc.push("output.count", g.members().len().to_string());
            for (i, f) in g.members().iter().enumerate() {
                doc.push(&format!("output.member.{i}"), m.ground().format_mask(*f));
            }
            match g.validation().violation() {
                None => doc.push("output.valid", "true"),
                Some(v) => {
                    doc.push("output.valid", "false");
                    doc.push("output.violation", v.render(m.ground()));
                }
            }
        }
        Command::GutsIterate {
            matroid,
            partition,
            steps,
        } => {
            let input = load_matroid(matroid)?;
            doc.push("input.matroid", &input.digest);
            let m = &input.matroid;
            let fam = parse_family(m, partition)?;
            let result = extensions::guts_project_iterate(m, &fam, *steps)?;
            doc.push("output.rank", result.rank_full().to_string());
            let fam_after = PartitionFamily::new(result.ground().clone(), fam.parts().to_vec())?;
            doc.push(
                "output.lambda",
                connectivity::lambda(&result, &fam_after)?.to_string(),
            );
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(&result, "guts-projection")?),
            );
        }
        Command::Quotient { n, m } => {
            let ni = load_matroid(n)?;
            let mi = load_matroid(m)?;
            doc.push("input.n", &ni.digest);
            doc.push("input.m", &mi.digest);
            doc.push(
                "output.quotient",
                quotients::is_quotient(&ni.matroid, &mi.matroid)?.to_string(),
            );
        }
        Command::Discrepancy { n, m, set } => {
            let ni = load_matroid(n)?;
            let mi = load_matroid(m)?;
            doc.push("input.n", &ni.digest);
            doc.push("input.m", &mi.digest);
            let x = match set {
                Some(s) => parse_set(&mi.matroid, s)?,
                None => mi.matroid.full_mask(),
            };
            doc.push(
                "output.discrepancy",
                quotients::discrepancy(&ni.matroid, &mi.matroid, x)?.to_string(),
            );
        }
        Command::ReconstructProjection { n, m } => {
            let ni = load_matroid(n)?;
            let mi = load_matroid(m)?;
            doc.push("input.n", &ni.digest);
            doc.push("input.m", &mi.digest);
            let w = quotients::quotient_to_projection(&ni.matroid, &mi.matroid)?;
            doc.push("output.removed_size", w.removed_size().to_string());
            doc.push(
                "output.removed_set",
                w.matroid().ground().format_mask(w.removed_set()),
            );
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(w.matroid(), "projection-witness")?),
            );
        }
        Command::Splice {
            m,
            n,
            contract,
            delete,
        } => {
            let mi = load_matroid(m)?;
            let ni = load_matroid(n)?;
            doc.push("input.m", &mi.digest);
            doc.push("input.n", &ni.digest);
            let c = parse_set(&mi.matroid, contract)?;
            let d = parse_set(&ni.matroid, delete)?;
            let p = quotients::splice(&mi.matroid, &ni.matroid, c, d)?;
            doc.push("output.size", p.len().to_string());
            doc.push(
                "output.spec",
                serde_compact(&matroid_to_spec(&p, "splice")?),
            );
        }
        Command::Verify { suite } => {
            let max_size = cli.max_size.unwrap_or(6);
            let reports = if suite == "all" {
                verify::run_all(max_size, seed)?
            } else {
                vec![verify::run_suite(suite, max_size, seed)?]
            };
            let mut failures = 0;
            for r in &reports {
                doc.push(
                    &format!("suite.{}", r.suite),
                    format!("{}\t{}", r.instances, r.status()),
                );
                if r.regime == verify::Regime::Sampled {
                    doc.push(&format!("suite.{}.regime", r.suite), "sampled");
                }
                if let Some(ce) = &r.first_counterexample {
                    doc.push(&format!("suite.{}.counterexample", r.suite), ce);
                }
                if !r.passed() {
                    failures += 1;
                }
            }
            doc.push("output.suites", reports.len().to_string());
            doc.push("output.failures", failures.to_string());
            if failures > 0 {
                // report rendered by the caller before exiting nonzero
                doc.push("output.status", "fail");
            } else {
                doc.push("output.status", "pass");
            }
        }
        Command::Catalog => {
            let max_size = cli.max_size.unwrap_or(8);
            let mut count = 0;
            for e in catalog::entries() {
                if e.spec.size() <= max_size {
                    doc.push(
                        &format!("catalog.{}", e.name),
                        format!("size={}\trank={}", e.spec.size(), e.expected.rank),
                    );
                    count += 1;
                }
            }
            doc.push("output.count", count.to_string());
        }
    }

    doc.push(
        "provenance.library",
        format!("matroids {}", env!("CARGO_PKG_VERSION")),
    );
    doc.push("provenance.seed", seed.to_string());
    doc.push("provenance.size_cap", matroids::size_cap().to_string());
    Ok(doc)
}

fn serde_compact(spec: &MatroidSpec) -> String {
    serde_json::to_string(spec).expect("spec serialization cannot fail")
}

fn parse_cut(m: &Matroid, text: &str) -> Result<extensions::ModularCut, Error> {
    let members: Vec<Mask> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split('|')
            .map(|part| parse_set(m, part))
            .collect::<Result<_, _>>()?
    };
    match extensions::validate_modular_cut(m, &members)? {
        extensions::ValidationOutcome::Valid(c) => Ok(c),
        extensions::ValidationOutcome::Invalid(v) => Err(Error::InvalidSpec(format!(
            "not a modular cut: {}",
            v.render(m.ground())
        ))),
    }
}

fn generate_label(m: &Matroid) -> String {
    for i in 0usize.. {
        let candidate = format!("_e{i}");
        if !m.ground().contains_label(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version through the error path with success
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };

    // env cap, overridden by the flag; for `verify` and `catalog`,
    // --max-size is the instance-size budget instead and the enumeration
    // cap keeps its default so internal constructions have headroom
    if let Ok(v) = std::env::var("MATROID_MAX_SIZE") {
        if let Ok(cap) = v.parse::<usize>() {
            matroids::set_size_cap(cap);
        }
    }
    if !matches!(cli.command, Command::Verify { .. } | Command::Catalog) {
        if let Some(cap) = cli.max_size {
            matroids::set_size_cap(cap);
        }
    }

    let echo = args[1..].join(" ");
    match run(&cli, &echo) {
        Ok(doc) => {
            print!("{}", doc.render(cli.format));
            let failed_verify = doc
                .rows
                .iter()
                .any(|(k, v)| k == "output.status" && v == "fail");
            if failed_verify {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
