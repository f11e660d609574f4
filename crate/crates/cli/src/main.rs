//! `perfcode`: decide subgroup perfect codes from the command line.
//!
//! Exit codes: 0 success, 2 parse error or unknown suite, 3 semantic error
//! (e.g. a generator outside the group), 4 a size bound was exceeded,
//! 5 a counterexample or disagreement was found.

mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use perfcode::corpus::describe;
use perfcode::oracle::find_admissible_connection_set_with;
use perfcode::perfect::{basic_criterion, every_subgroup_is_perfect_code, is_perfect_code};
use perfcode::psl2::Psl2Group;
use perfcode::spec::parse_generators;
use perfcode::verify::{cyclic_subgroups, run_suite, Suite, VerifyOptions};
use perfcode::{two_part, Error, Group, GroupSpec, Limits, Permutation};

use report::*;

#[derive(Parser)]
#[command(
    name = "perfcode",
    version,
    about = "Subgroup perfect codes of Cayley graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sample {
    Cyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a subgroup is a perfect code of a group.
    Check {
        /// `sym:<n>`, `alt:<n>`, `cyclic:<n>`, `dihedral:<n>`, `psl2:<q>` or `<degree>:<gen>;<gen>`.
        #[arg(long)]
        group: String,
        /// Subgroup generators in cycle notation, separated by `;`.
        #[arg(long, required_unless_present = "subgroup_order_sample")]
        subgroup: Option<String>,
        /// Instead of one subgroup, check every subgroup of the given kind.
        #[arg(long, value_enum, conflicts_with = "subgroup")]
        subgroup_order_sample: Option<Sample>,
        /// Include a failure witness, or a connection set when the answer is yes.
        #[arg(long)]
        witness: bool,
        /// Also run the double-coset criterion and, within bounds, the connection-set search.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Largest group order to enumerate.
        #[arg(long, env = Limits::MAX_ORDER_ENV)]
        max_order: Option<usize>,
        /// Largest index for the connection-set search (groups of order at most 48 are always searched).
        #[arg(long)]
        oracle_bound: Option<usize>,
    },
    /// Run a verification suite over the built-in corpus.
    Verify {
        /// example, sl2, ngq, criteria, sub, conjugate, ns, ele, oracle-equivalence,
        /// corollaries, witness, psl-orders, sypsl or psl.
        suite: String,
        /// Largest corpus group order (default 120, 48 for oracle-equivalence).
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        oracle_bound: Option<usize>,
        /// Seed for the sampled PSL(2, 17) subgroups.
        #[arg(long, default_value_t = perfcode::lcg::Lcg::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Order, Sylow 2-subgroup structure and the every-subgroup verdict.
    GroupInfo {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, env = Limits::MAX_ORDER_ENV)]
        max_order: Option<usize>,
    },
}

/// A failed run: exit code and message.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::OrderCapExceeded { .. }
            | Error::LatticeBoundExceeded { .. }
            | Error::OracleBoundExceeded { .. }
            | Error::FieldBoundExceeded { .. } => 4,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn limits(max_order: Option<usize>, oracle_bound: Option<usize>) -> Limits {
    let mut limits = Limits::from_env();
    if let Some(cap) = max_order {
        limits.max_order = cap;
    }
    if let Some(bound) = oracle_bound {
        limits.oracle_index_bound = bound;
    }
    limits
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn emit_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents serialize")
    );
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn build(spec: &str, limits: &Limits) -> Result<(GroupSpec, Group), Failure> {
    let spec: GroupSpec = spec.parse()?;
    let group = spec.build_with(limits)?;
    Ok((spec, group))
}

/// Like `parse_generators`, but a well-formed cycle on points beyond the
/// degree is reported as lying outside the group rather than as a parse error.
fn subgroup_generators(s: &str, degree: usize) -> Result<Vec<Permutation>, Error> {
    parse_generators(s, degree).map_err(|e| {
        s.split(';')
            .map(str::trim)
            .find(|t| Permutation::parse(t, degree).is_err() && t.parse::<Permutation>().is_ok())
            .map_or(e, |t| Error::NotInGroup(t.to_string()))
    })
}

fn check(
    group: &str,
    subgroup: &str,
    witness: bool,
    cross_check: bool,
    format: Format,
    limits: &Limits,
) -> Outcome {
    let start = Instant::now();
    let (spec, g) = build(group, limits)?;
    let gens = subgroup_generators(subgroup, g.degree())?;
    let h = g.generated_subgroup(&gens)?;
    let report = is_perfect_code(&g, &h);

    let connection_set = if witness && report.is_perfect_code {
        let s = find_admissible_connection_set_with(&g, &h, limits)?.ok_or_else(|| Failure {
            code: 5,
            message: "no connection set found for a subgroup reported as a perfect code".into(),
        })?;
        Some(strings(s.elements()))
    } else {
        None
    };

    let cross = cross_check.then(|| {
        let basic = basic_criterion(&g, &h);
        let oracle = match find_admissible_connection_set_with(&g, &h, limits) {
            Ok(Some(_)) => Some(true),
            Ok(None) => Some(false),
            Err(_) => None,
        };
        let agree = basic.is_perfect_code == report.is_perfect_code
            && oracle.is_none_or(|o| o == report.is_perfect_code);
        CrossCheck {
            basic_criterion: basic.is_perfect_code,
            basic_witness: basic.witness.as_ref().map(ToString::to_string),
            oracle: match oracle {
                Some(true) => "found",
                Some(false) => "none",
                None => "skipped",
            },
            agree,
        }
    });
    let disagree = cross.as_ref().is_some_and(|c| !c.agree);

    let doc = CheckDocument {
        schema: SCHEMA_VERSION,
        command: "check",
        input: CheckInput {
            group: spec.to_string(),
            subgroup: subgroup.trim().to_string(),
        },
        group: GroupSummary::of(&g),
        subgroup: GroupSummary::of(&h),
        is_perfect_code: report.is_perfect_code,
        path: report.path.label(),
        witness: if witness {
            report.witness.as_ref().map(ToString::to_string)
        } else {
            None
        },
        reduction_trace: report
            .reduction_trace
            .iter()
            .map(|&(step, order)| TraceStep { step, order })
            .collect(),
        connection_set,
        cross_check: cross,
        timing_ms: elapsed_ms(start),
    };
    match format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!(
                "group          {} (order {})",
                doc.input.group, doc.group.order
            );
            println!(
                "subgroup       <{}> (order {})",
                describe(&h),
                doc.subgroup.order
            );
            println!("perfect code   {}", yes_no(doc.is_perfect_code));
            println!("decided by     {}", doc.path);
            for t in &doc.reduction_trace {
                println!("  {:<20} order {}", t.step, t.order);
            }
            if let Some(x) = &doc.witness {
                println!("witness        {x}");
            }
            if let Some(s) = &doc.connection_set {
                println!("connection set {{{}}}", s.join(", "));
            }
            if let Some(c) = &doc.cross_check {
                println!("basic          {}", yes_no(c.basic_criterion));
                println!("oracle         {}", c.oracle);
                println!("agree          {}", yes_no(c.agree));
            }
        }
    }
    Ok(if disagree { 5 } else { 0 })
}

fn check_sample(group: &str, format: Format, limits: &Limits) -> Outcome {
    let start = Instant::now();
    let (spec, g) = build(group, limits)?;
    let psl = match spec {
        GroupSpec::Psl2(q) if matches!(q % 8, 1 | 7) => Some(Psl2Group::with_limits(q, limits)?),
        _ => None,
    };
    let mut rows = Vec::new();
    for h in cyclic_subgroups(&g) {
        let verdict = is_perfect_code(&g, &h).is_perfect_code;
        let (case, matches) = match &psl {
            Some(psl) => {
                let (case, predicted) = psl.classify(&h)?;
                (Some(case.label()), predicted == verdict)
            }
            None => (None, verdict == basic_criterion(&g, &h).is_perfect_code),
        };
        rows.push(SampleRow {
            generator: describe(&h),
            order: h.order(),
            is_perfect_code: verdict,
            psl_case: case,
            matches,
        });
    }
    let all_match = rows.iter().all(|r| r.matches);
    let doc = SampleDocument {
        schema: SCHEMA_VERSION,
        command: "check",
        input: CheckInput {
            group: spec.to_string(),
            subgroup: "cyclic".into(),
        },
        group: GroupSummary::of(&g),
        rows,
        all_match,
        timing_ms: elapsed_ms(start),
    };
    match format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!(
                "{:<32} {:>5}  {:<7} {:<18} match",
                "generator", "order", "perfect", "case"
            );
            for r in &doc.rows {
                println!(
                    "{:<32} {:>5}  {:<7} {:<18} {}",
                    r.generator,
                    r.order,
                    yes_no(r.is_perfect_code),
                    r.psl_case.unwrap_or("-"),
                    yes_no(r.matches)
                );
            }
            println!(
                "{} cyclic subgroups, all match: {}",
                doc.rows.len(),
                yes_no(all_match)
            );
        }
    }
    Ok(if all_match { 0 } else { 5 })
}

fn verify(
    suite: &str,
    max_order: Option<usize>,
    oracle_bound: Option<usize>,
    seed: u64,
    format: Format,
) -> Outcome {
    let start = Instant::now();
    let suite: Suite = suite.parse()?;
    let opts = VerifyOptions {
        max_order,
        limits: limits(None, oracle_bound),
        seed,
        ..VerifyOptions::default()
    };
    let report = run_suite(suite, &opts)?;
    let input = VerifyInput {
        suite: suite.name().to_string(),
        max_order: max_order.unwrap_or(suite.default_max_order()),
        oracle_bound: opts.limits.oracle_index_bound,
        seed,
    };
    let doc = VerifyDocument::new(input, &report, elapsed_ms(start));
    match format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            println!(
                "suite {} (max order {})",
                doc.input.suite, doc.input.max_order
            );
            for t in &doc.groups {
                let skipped = if t.skipped > 0 {
                    format!(", {} skipped", t.skipped)
                } else {
                    String::new()
                };
                println!(
                    "  {:<32} order {:>5}  {:>5} pairs{skipped}",
                    t.group, t.order, t.pairs
                );
            }
            for f in &doc.failures {
                println!("COUNTEREXAMPLE {} <{}>: {}", f.group, f.subgroup, f.detail);
            }
            println!(
                "{}: {} pairs tested, {} skipped, {} failures",
                if doc.passed { "ok" } else { "FAILED" },
                doc.pairs_tested,
                doc.skipped,
                doc.failures.len()
            );
        }
    }
    Ok(if doc.passed { 0 } else { 5 })
}

fn group_info(group: &str, format: Format, limits: &Limits) -> Outcome {
    let start = Instant::now();
    let (spec, g) = build(group, limits)?;
    let field = match spec {
        GroupSpec::Psl2(q) => {
            let psl = Psl2Group::with_limits(q, limits)?;
            let f = psl.field();
            Some(FieldSummary {
                p: f.characteristic(),
                k: f.degree(),
                modulus: f.modulus().to_vec(),
            })
        }
        _ => None,
    };
    let sylow = g.sylow(2)?;
    let doc = GroupInfoDocument {
        schema: SCHEMA_VERSION,
        command: "group-info",
        input: GroupInfoInput {
            group: spec.to_string(),
        },
        group: GroupSummary::of(&g),
        two_part: two_part(g.order() as u64),
        sylow2: SylowSummary::of(&sylow),
        every_subgroup_is_perfect_code: every_subgroup_is_perfect_code(&g),
        field,
        timing_ms: elapsed_ms(start),
    };
    match format {
        Format::Json => emit_json(&doc),
        Format::Text => {
            let s = &doc.sylow2;
            let mut shape = Vec::new();
            for (flag, name) in [
                (s.cyclic, "cyclic"),
                (s.dihedral, "dihedral"),
                (s.abelian, "abelian"),
                (s.elementary_abelian, "elementary abelian"),
            ] {
                if flag {
                    shape.push(name);
                }
            }
            println!(
                "group        {} (degree {}, order {})",
                doc.input.group, doc.group.degree, doc.group.order
            );
            println!("generators   {}", doc.group.generators.join(" "));
            println!("2-part       {}", doc.two_part);
            println!("sylow2       order {} [{}]", s.order, shape.join(", "));
            println!(
                "every subgroup is a perfect code: {}",
                yes_no(doc.every_subgroup_is_perfect_code)
            );
            if let Some(f) = &doc.field {
                println!("field        GF({}^{}), modulus {:?}", f.p, f.k, f.modulus);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            group,
            subgroup,
            subgroup_order_sample,
            witness,
            cross_check,
            format,
            max_order,
            oracle_bound,
        } => {
            let limits = limits(max_order, oracle_bound);
            match (subgroup, subgroup_order_sample) {
                (_, Some(Sample::Cyclic)) => check_sample(&group, format, &limits),
                (Some(sub), None) => check(&group, &sub, witness, cross_check, format, &limits),
                (None, None) => unreachable!("clap requires one of them"),
            }
        }
        Command::Verify {
            suite,
            max_order,
            oracle_bound,
            seed,
            format,
        } => verify(&suite, max_order, oracle_bound, seed, format),
        Command::GroupInfo {
            group,
            format,
            max_order,
        } => group_info(&group, format, &limits(max_order, None)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
