//! Command-line front end. Commands return an [`Outcome`] instead of printing
//! so that they can be driven directly from tests.
//!
//! Exit codes: 0 for an irreducible / passing result, 1 for a reducible /
//! failing result, 2 for any input error.

use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::criterion::{export_dot, GeneratorSet, Reason};
use crate::error::{Error, Result};
use crate::field::{Elem, FieldCtx, FieldSpec};
use crate::oracle::crosscheck;
use crate::quadratic::{compose_word, GeneratorSpec, MonicQuadratic, Word};
use crate::search::{
    census_pairs, census_tsv, example_family, example_family_set, verify_lemma_p7mod8,
    verify_prop_p3mod4, PairFilter,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REDUCIBLE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Largest crosscheck depth; words of length 4 already expand to degree 16.
pub const MAX_DEPTH: usize = 4;

/// Largest word length for which `witness` prints the dense composition.
const MAX_DENSE_WITNESS: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "quadsemi",
    version,
    about = "Decide whether every composition of given monic quadratics over F_q is irreducible"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the semigroup; prints the verdict as JSON.
    Check(InputArgs),
    /// Print a minimal reducible word with its chain values.
    Witness(InputArgs),
    /// Compare the chain test with Rabin's test on all words up to a depth.
    Words {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Sweep all unordered pairs of monic quadratics over F_{p^e}.
    Census {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, default_value = "all")]
        filter: PairFilter,
        #[arg(long, value_enum, default_value_t = CensusFormat::Tsv)]
        format: CensusFormat,
        /// Keep only the first N rows.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check one of the non-existence or existence statements for a prime.
    Verify {
        #[command(flatten)]
        target: VerifyTarget,
        /// Extension degree for --example-family.
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
        format: VerifyFormat,
    },
    /// Render the reachable subgraph in Graphviz DOT.
    Dot(InputArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input JSON file, or "-" for standard input.
    pub input: String,
    #[arg(long, default_value_t = 8)]
    pub max_generators: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct VerifyTarget {
    /// Every x^2 - b over F_p, p = 7 mod 8, generates a reducible composition.
    #[arg(long = "lemma-7mod8", value_name = "P")]
    pub lemma_7mod8: Option<u64>,
    /// Every pair x^2 - b_f, x^2 - b_g of distinct non-squares over F_p,
    /// p = 3 mod 4, generates a reducible composition.
    #[arg(long = "prop-3mod4", value_name = "P")]
    pub prop_3mod4: Option<u64>,
    /// For q = 1 mod 4, every member of the two-generator family is irreducible.
    #[arg(long = "example-family", value_name = "P")]
    pub example_family: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CensusFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Text,
    Json,
}

/// Input file contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub field: FieldSpec,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: Error) -> Self {
        Outcome {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }

    fn warn(mut self, warnings: &[String]) -> Self {
        let mut prefix: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
        prefix.push_str(&self.stderr);
        self.stderr = prefix;
        self
    }
}

#[derive(Serialize)]
struct CheckOutput {
    verdict: &'static str,
    reason: Option<Reason>,
    witness: Option<Word>,
    reach_nodes: Vec<Elem>,
    d_s: Vec<Elem>,
}

#[derive(Serialize)]
struct WitnessOutput {
    verdict: &'static str,
    witness: Option<Word>,
    beta_chain: Option<Vec<Elem>>,
    /// Little-endian coefficients of the composed polynomial.
    composition: Option<Vec<Elem>>,
}

#[derive(Serialize)]
struct FamilyOutput {
    q: u32,
    holds: bool,
    members: Vec<Elem>,
}

fn verdict_name(irreducible: bool) -> &'static str {
    if irreducible {
        "irreducible"
    } else {
        "reducible"
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Config(format!("reading standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{path}: {e}")))?;
    }
    Ok(text)
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid input: {e}")))
}

struct Problem {
    ctx: FieldCtx,
    gens: Vec<MonicQuadratic>,
    warnings: Vec<String>,
}

impl Problem {
    fn load(args: &InputArgs, stdin: &mut dyn Read) -> Result<Self> {
        let config = parse_config(&read_input(&args.input, stdin)?)?;
        let ctx = config.field.build()?;
        let raw: Vec<MonicQuadratic> = config
            .generators
            .iter()
            .map(|g| g.resolve(&ctx))
            .collect::<Result<_>>()?;
        let mut gens = Vec::new();
        for g in raw.iter().copied() {
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
        let mut warnings = Vec::new();
        if gens.len() < raw.len() {
            warnings.push(format!(
                "removed {} duplicate generator(s)",
                raw.len() - gens.len()
            ));
        }
        if gens.len() > args.max_generators {
            return Err(Error::Config(format!(
                "{} generators exceed --max-generators {}",
                gens.len(),
                args.max_generators
            )));
        }
        Ok(Problem {
            ctx,
            gens,
            warnings,
        })
    }

    fn set(&self) -> Result<GeneratorSet<'_>> {
        GeneratorSet::new(&self.ctx, self.gens.iter().copied())
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    match &cli.command {
        Command::Check(args) => with_problem(args, stdin, cmd_check),
        Command::Witness(args) => with_problem(args, stdin, cmd_witness),
        Command::Dot(args) => with_problem(args, stdin, cmd_dot),
        Command::Words { input, depth } => with_problem(input, stdin, |set| cmd_words(set, *depth)),
        Command::Census {
            p,
            e,
            filter,
            format,
            limit,
        } => cmd_census(*p, *e, *filter, *format, *limit).unwrap_or_else(Outcome::error),
        Command::Verify { target, e, format } => {
            cmd_verify(target, *e, *format).unwrap_or_else(Outcome::error)
        }
    }
}

fn with_problem(
    args: &InputArgs,
    stdin: &mut dyn Read,
    command: impl FnOnce(&GeneratorSet<'_>) -> Result<Outcome>,
) -> Outcome {
    let problem = match Problem::load(args, stdin) {
        Ok(p) => p,
        Err(e) => return Outcome::error(e),
    };
    let outcome = problem
        .set()
        .and_then(|set| command(&set))
        .unwrap_or_else(Outcome::error);
    outcome.warn(&problem.warnings)
}

pub fn cmd_check(set: &GeneratorSet<'_>) -> Result<Outcome> {
    let graph = set.reachable_subgraph();
    let verdict = set.verdict_from_graph(&graph);
    let irreducible = verdict.is_irreducible();
    let out = CheckOutput {
        verdict: verdict_name(irreducible),
        reason: verdict.reason,
        witness: verdict.witness,
        reach_nodes: graph.nodes().to_vec(),
        d_s: set.distinguished_set(),
    };
    Ok(Outcome::ok(
        if irreducible { EXIT_OK } else { EXIT_REDUCIBLE },
        to_json(&out),
    ))
}

pub fn cmd_witness(set: &GeneratorSet<'_>) -> Result<Outcome> {
    let verdict = set.check_semigroup_irreducible();
    let out = match verdict.witness {
        None => WitnessOutput {
            verdict: verdict_name(true),
            witness: None,
            beta_chain: None,
            composition: None,
        },
        Some(w) => WitnessOutput {
            verdict: verdict_name(false),
            beta_chain: Some(set.beta_chain(&w)?),
            composition: (w.len() <= MAX_DENSE_WITNESS)
                .then(|| compose_word(set, &w).coeffs().to_vec()),
            witness: Some(w),
        },
    };
    let code = if out.witness.is_none() {
        EXIT_OK
    } else {
        EXIT_REDUCIBLE
    };
    Ok(Outcome::ok(code, to_json(&out)))
}

pub fn cmd_words(set: &GeneratorSet<'_>, depth: usize) -> Result<Outcome> {
    if depth == 0 || depth > MAX_DEPTH {
        return Err(Error::Config(format!(
            "--depth must be between 1 and {MAX_DEPTH}"
        )));
    }
    let report = crosscheck(set, depth)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_REDUCIBLE
    };
    Ok(Outcome::ok(code, to_json(&report)))
}

pub fn cmd_dot(set: &GeneratorSet<'_>) -> Result<Outcome> {
    Ok(Outcome::ok(
        EXIT_OK,
        export_dot(set.ctx(), &set.reachable_subgraph()),
    ))
}

pub fn cmd_census(
    p: u64,
    e: u32,
    filter: PairFilter,
    format: CensusFormat,
    limit: Option<usize>,
) -> Result<Outcome> {
    let ctx = FieldCtx::new(p, e, None)?;
    let mut rows = census_pairs(&ctx, filter);
    if let Some(n) = limit {
        rows.truncate(n);
    }
    let text = match format {
        CensusFormat::Tsv => census_tsv(&rows),
        CensusFormat::Json => to_json(&rows),
    };
    Ok(Outcome::ok(EXIT_OK, text))
}

pub fn cmd_verify(target: &VerifyTarget, e: u32, format: VerifyFormat) -> Result<Outcome> {
    let (holds, json) = if let Some(p) = target.lemma_7mod8 {
        let report = verify_lemma_p7mod8(p)?;
        (report.holds, to_json(&report))
    } else if let Some(p) = target.prop_3mod4 {
        let report = verify_prop_p3mod4(p)?;
        (report.holds, to_json(&report))
    } else if let Some(p) = target.example_family {
        let ctx = FieldCtx::new(p, e, None)?;
        let members = example_family(&ctx)?;
        let holds = members.iter().all(|&a| {
            example_family_set(&ctx, a)
                .check_semigroup_irreducible()
                .is_irreducible()
        });
        let out = FamilyOutput {
            q: ctx.order(),
            holds,
            members,
        };
        (holds, to_json(&out))
    } else {
        return Err(Error::Config("no statement selected".into()));
    };
    let text = match format {
        VerifyFormat::Text => format!("{holds}\n"),
        VerifyFormat::Json => json,
    };
    Ok(Outcome::ok(
        if holds { EXIT_OK } else { EXIT_REDUCIBLE },
        text,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("quadsemi").chain(args.iter().copied()))
            .expect("arguments parse");
        run(&cli, &mut stdin.as_bytes())
    }

    const EXAMPLE_Q13: &str =
        r#"{"field":{"p":13,"e":1},"generators":[{"a":5,"b":-5},{"a":6,"b":-5}]}"#;
    const PROP_P7: &str =
        r#"{"field":{"p":7,"e":1},"generators":[{"c1":0,"c0":-3},{"c1":0,"c0":-5}]}"#;

    #[test]
    fn check_exit_codes() {
        let out = run_args(&["check", "-"], EXAMPLE_Q13);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "irreducible");
        assert_eq!(v["witness"], serde_json::Value::Null);
        assert_eq!(v["reach_nodes"], serde_json::json!([5, 6]));
        assert_eq!(v["d_s"], serde_json::json!([5]));

        let out = run_args(&["check", "-"], PROP_P7);
        assert_eq!(out.code, EXIT_REDUCIBLE);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["verdict"], "reducible");
        assert_eq!(v["reason"], "square_reachable");
        assert_eq!(v["witness"], serde_json::json!([0, 1]));

        let out = run_args(
            &["check", "-"],
            r#"{"field":{"p":2,"e":1},"generators":[]}"#,
        );
        assert_eq!(out.code, EXIT_ERROR);
        assert!(out.stderr.contains("even characteristic"));
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "not json",
            r#"{"field":{"p":7},"generators":[]}"#,
            r#"{"field":{"p":7,"q":3},"generators":[{"a":0,"b":3}]}"#,
            r#"{"field":{"p":7},"generators":[{"a":0,"b":3}],"extra":1}"#,
            r#"{"field":{"p":7},"generators":[{"a":0,"b":30}]}"#,
        ] {
            let out = run_args(&["check", "-"], bad);
            assert_eq!(out.code, EXIT_ERROR, "{bad}");
            assert!(out.stdout.is_empty());
        }
    }

    #[test]
    fn duplicates_warn() {
        let input =
            r#"{"field":{"p":13},"generators":[{"a":5,"b":8},{"c1":3,"c0":4},{"a":6,"b":8}]}"#;
        let out = run_args(&["check", "-"], input);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stderr.starts_with("warning: removed 1 duplicate"));
    }

    #[test]
    fn generator_cap() {
        let out = run_args(&["check", "--max-generators", "1", "-"], EXAMPLE_Q13);
        assert_eq!(out.code, EXIT_ERROR);
    }

    #[test]
    fn verify_commands() {
        let out = run_args(&["verify", "--lemma-7mod8", "7"], "");
        assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "true\n"));
        let out = run_args(&["verify", "--prop-3mod4", "11"], "");
        assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "true\n"));
        let out = run_args(&["verify", "--prop-3mod4", "13"], "");
        assert_eq!(out.code, EXIT_ERROR);
        assert!(out.stderr.contains("congruent to 3 mod 4"));
        let out = run_args(&["verify", "--example-family", "3", "--e", "2"], "");
        assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "true\n"));
        assert!(Cli::try_parse_from(["quadsemi", "verify"]).is_err());
        assert!(Cli::try_parse_from([
            "quadsemi",
            "verify",
            "--lemma-7mod8",
            "7",
            "--prop-3mod4",
            "7"
        ])
        .is_err());
    }

    #[test]
    fn words_depth_bounds() {
        let out = run_args(&["words", "--depth", "5", "-"], EXAMPLE_Q13);
        assert_eq!(out.code, EXIT_ERROR);
        let out = run_args(&["words", "--depth", "2", "-"], PROP_P7);
        assert_eq!(out.code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["words"], 6);
        assert_eq!(v["mismatches"], serde_json::json!([]));
    }

    #[test]
    fn witness_command() {
        let out = run_args(&["witness", "-"], PROP_P7);
        assert_eq!(out.code, EXIT_REDUCIBLE);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["witness"], serde_json::json!([0, 1]));
        assert_eq!(v["beta_chain"], serde_json::json!([3, 1]));
        // (x^2 - 5)^2 - 3 = x^4 - 10x^2 + 22 = x^4 + 4x^2 + 1
        assert_eq!(v["composition"], serde_json::json!([1, 0, 4, 0, 1]));
    }

    #[test]
    fn census_command() {
        let out = run_args(&["census", "--p", "5", "--limit", "3"], "");
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.stdout.lines().count(), 4);
        let out = run_args(
            &["census", "--p", "5", "--format", "json", "--limit", "2"],
            "",
        );
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert!(
            Cli::try_parse_from(["quadsemi", "census", "--p", "5", "--filter", "nope"]).is_err()
        );
    }
}
