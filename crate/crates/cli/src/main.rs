use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mrkit_core::automorphisms::{enumerate_aut, inner_subgroup, omega};
use mrkit_core::constructions::{
    boolean_algebra, build_i, face_poset, filter_algebra, implication_subalgebra, interval_algebra,
    BooleanAlgebra, ImplicationAlgebra,
};
use mrkit_core::cubic::axioms::{caret_total, check_cubic_axioms, check_mr_axiom};
use mrkit_core::format::{from_json, to_json};
use mrkit_core::functors::quotient_c;
use mrkit_core::verify::{all_pass, render_text, select, verify_algebra, verify_corpus, Outcome};
use mrkit_core::{corpus, AxiomReport, CubicAlgebra, Limits, WitnessPolicy};

/// Finite cubic and MR-algebras: build, check, automorphisms, claim suite.
#[derive(Parser, Debug)]
#[command(name = "mrkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Seed for the randomized corpus.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Largest carrier any exhaustive search may touch.
    #[arg(long, global = true, env = "MRKIT_MAX_CARRIER", default_value_t = 81)]
    max_carrier: usize,

    #[arg(long, global = true, value_enum, default_value_t = Witness::First)]
    witness: Witness,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an algebra and write it as JSON.
    Build(BuildArgs),
    /// Run the cubic, MR and caret-totality checks on an algebra file.
    Check {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Enumerate the automorphism group and its inner subgroup.
    Aut {
        #[arg(short, long)]
        input: PathBuf,
        /// List only inner automorphisms, with the Ω table.
        #[arg(long)]
        inner: bool,
    },
    /// Run the claim suite on an algebra file or on the built-in corpus.
    Verify {
        #[arg(
            short,
            long,
            conflicts_with = "corpus",
            required_unless_present = "corpus"
        )]
        input: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Comma-separated claim ids; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
    },
}

#[derive(clap::Args, Debug)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Dimension or number of atoms.
    #[arg(long, visible_alias = "atoms")]
    n: Option<usize>,
    /// Base of a pair algebra: `I3`, `B<n>`, or comma-separated element
    /// labels of the Boolean algebra on `--n` atoms.
    #[arg(long)]
    base: Option<String>,
    /// Generator of the principal filter for `--kind filter` (a Boolean
    /// label such as `r`); defaults to the last atom.
    #[arg(long)]
    generator: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Interval,
    Face,
    Filter,
    Pairs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Witness {
    First,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

struct Run {
    limits: Limits,
    policy: WitnessPolicy,
    format: Format,
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = Run {
        limits: Limits::default().with_max_carrier(cli.max_carrier),
        policy: match cli.witness {
            Witness::First => WitnessPolicy::First,
            Witness::All => WitnessPolicy::All,
        },
        format: cli.format,
        seed: cli.seed,
    };
    let result = match &cli.command {
        Command::Build(args) => build(&run, args),
        Command::Check { input } => check(&run, input),
        Command::Aut { input, inner } => aut(&run, input, *inner),
        Command::Verify {
            input,
            corpus,
            claims,
        } => verify(&run, input.as_deref(), *corpus, claims),
    };
    match result.and_then(|(out, ok)| emit(cli.output.as_deref(), &out).map(|_| ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<CubicAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn build(run: &Run, args: &BuildArgs) -> Result<(String, bool)> {
    let need_n = || {
        args.n
            .ok_or_else(|| anyhow!("--n is required for this kind"))
    };
    let alg = match args.kind {
        Kind::Interval => interval_algebra(need_n()?, &run.limits)?.algebra,
        Kind::Face => face_poset(need_n()?, &run.limits)?.algebra,
        Kind::Filter => {
            let b = boolean_algebra(need_n()?, &run.limits)?;
            if b.atom_count() == 0 {
                bail!("a filter algebra needs at least one atom");
            }
            let g = match &args.generator {
                Some(label) => boolean_element(&b, label)?,
                None => b.atom(b.atom_count() - 1),
            };
            filter_algebra(&b, &b.principal_filter(g), &run.limits)?
                .pairs
                .algebra
        }
        Kind::Pairs => {
            let base = args
                .base
                .as_deref()
                .ok_or_else(|| anyhow!("--base is required for pairs"))?;
            let base = pair_base(run, base, args.n)?;
            run.limits
                .check_carrier("pair algebra", base.size() * base.size())?;
            build_i(&base)?.algebra
        }
    };
    run.limits.check_carrier("algebra", alg.size())?;
    Ok((to_json(&alg), true))
}

fn boolean_element(b: &BooleanAlgebra, label: &str) -> Result<usize> {
    (0..b.size()).find(|&m| b.label(m) == label).ok_or_else(|| {
        anyhow!(
            "no element {label:?} in the Boolean algebra on {} atoms",
            b.atom_count()
        )
    })
}

fn pair_base(run: &Run, base: &str, n: Option<usize>) -> Result<ImplicationAlgebra> {
    if base == "I3" {
        return Ok(corpus::i3());
    }
    if let Some(k) = base.strip_prefix('B').and_then(|k| k.parse::<usize>().ok()) {
        return Ok(ImplicationAlgebra::from_boolean(&boolean_algebra(
            k,
            &run.limits,
        )?));
    }
    let n = n.ok_or_else(|| anyhow!("--n is required when --base lists elements"))?;
    let b = boolean_algebra(n, &run.limits)?;
    let masks = base
        .split(',')
        .map(|l| boolean_element(&b, l.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(implication_subalgebra(&b, &masks)?.algebra)
}

fn report_json(alg: &CubicAlgebra, r: &AxiomReport) -> Value {
    json!({
        "passed": r.passed,
        "violations": r.violations.iter().map(|v| json!({
            "rule": v.rule,
            "witness": v.witness,
            "labels": v.witness.iter().map(|&x| alg.label(x)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn report_text(name: &str, alg: &CubicAlgebra, r: &AxiomReport) -> String {
    let mut s = format!("{name}: {}\n", if r.passed { "pass" } else { "fail" });
    for v in &r.violations {
        let labels: Vec<&str> = v.witness.iter().map(|&x| alg.label(x)).collect();
        s.push_str(&format!(
            "  rule {} witness {:?} ({})\n",
            v.rule,
            v.witness,
            labels.join(", ")
        ));
    }
    s
}

fn check(run: &Run, input: &Path) -> Result<(String, bool)> {
    let alg = load(input)?;
    run.limits.check_carrier("check", alg.size())?;
    let cubic = check_cubic_axioms(&alg, run.policy)?;
    if !cubic.passed {
        let out = match run.format {
            Format::Json => json!({"cubic": report_json(&alg, &cubic)}).to_string(),
            Format::Text => report_text("cubic", &alg, &cubic),
        };
        return Ok((out, false));
    }
    let mr = check_mr_axiom(&alg, run.policy);
    let caret = caret_total(&alg);
    let agree = caret == mr.passed;
    let out = match run.format {
        Format::Json => json!({
            "carrier": alg.size(),
            "cubic": report_json(&alg, &cubic),
            "mr": report_json(&alg, &mr),
            "caret_total": caret,
        })
        .to_string(),
        Format::Text => {
            let mut s = format!("carrier: {}\n", alg.size());
            s.push_str(&report_text("cubic", &alg, &cubic));
            s.push_str(&report_text("mr", &alg, &mr));
            s.push_str(&format!("caret_total: {caret}\n"));
            s
        }
    };
    Ok((out, agree))
}

fn aut(run: &Run, input: &Path, only_inner: bool) -> Result<(String, bool)> {
    let alg = load(input)?;
    let cubic = check_cubic_axioms(&alg, WitnessPolicy::First)?;
    if let Some(v) = cubic.first() {
        bail!(
            "not a cubic algebra: rule {} fails at {:?}",
            v.rule,
            v.witness
        );
    }
    let auts = enumerate_aut(&alg, &run.limits)?;
    let inner = inner_subgroup(&alg, &auts);
    let omega_rows = if check_mr_axiom(&alg, WitnessPolicy::First).passed {
        let q = quotient_c(&alg)?;
        let rows = inner
            .iter()
            .map(|phi| {
                let g = omega(&alg, &q, phi)?;
                Ok((
                    phi.clone(),
                    g.to_vec()
                        .iter()
                        .map(|&c| q.algebra.label(c).to_string())
                        .collect(),
                ))
            })
            .collect::<Result<Vec<(Vec<usize>, Vec<String>)>>>()?;
        Some(rows)
    } else {
        None
    };
    let listed = if only_inner { &inner } else { &auts };
    let out = match run.format {
        Format::Json => json!({
            "order": auts.len(),
            "inner_order": inner.len(),
            "elements": listed,
            "inner": inner,
            "omega": omega_rows.as_ref().map(|rows| rows.iter().map(|(phi, g)| json!({
                "automorphism": phi,
                "filter": g,
            })).collect::<Vec<_>>()),
        })
        .to_string(),
        Format::Text => {
            let mut s = format!("order: {}\ninner: {}\n", auts.len(), inner.len());
            s.push_str(if only_inner {
                "inner automorphisms:\n"
            } else {
                "automorphisms:\n"
            });
            for phi in listed {
                s.push_str(&format!("  {phi:?}\n"));
            }
            match &omega_rows {
                Some(rows) => {
                    s.push_str("omega:\n");
                    for (phi, g) in rows {
                        s.push_str(&format!("  {phi:?} -> {{{}}}\n", g.join(", ")));
                    }
                }
                None => s.push_str("omega: not an MR-algebra\n"),
            }
            s
        }
    };
    Ok((out, true))
}

fn verify(
    run: &Run,
    input: Option<&Path>,
    use_corpus: bool,
    ids: &[String],
) -> Result<(String, bool)> {
    let claims = select(ids)?;
    let outcomes: Vec<Outcome> = if use_corpus {
        verify_corpus(&claims, run.seed, &run.limits)?
    } else {
        let path = input.expect("clap requires --input without --corpus");
        let alg = load(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        verify_algebra(&name, &alg, &claims, run.seed, &run.limits)?
    };
    let out = match run.format {
        Format::Json => serde_json::to_string_pretty(&outcomes)?,
        Format::Text => render_text(&outcomes),
    };
    Ok((out, all_pass(&outcomes)))
}
