//! Batch front end: a [`JobSpec`] names one subcommand and its inputs, and
//! [`run`] turns it into a deterministic, re-runnable [`Report`].

mod render;
mod selftest;

use std::fmt;
use std::path::Path;

use gldist::cosets::{self, Composition, Involution};
use gldist::derivatives::{derivative_necessity_test, MonomialRep, NecessityOutcome};
use gldist::distinction::{self, DistinctionVerdict};
use gldist::factors::{self, AdditiveCharacterSpec, ExactEps};
use gldist::kernelnum::{self, KernelCase, KernelCheck, QuadratureConfig, StripDomain};
use gldist::ktypes::{self, HighestWeight};
use gldist::params::ParameterFile;
use gldist::{GaussianRational, LanglandsParameter, Rational, UnitaryRep};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use render::render_text;
pub use selftest::{run_suites, SuiteResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Subcommand {
    Classify,
    Ktype,
    Derive,
    Eps,
    Cosets,
    VerifyKernel,
    Selftest,
}

impl fmt::Display for Subcommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Subcommand::Classify => "classify",
            Subcommand::Ktype => "ktype",
            Subcommand::Derive => "derive",
            Subcommand::Eps => "eps",
            Subcommand::Cosets => "cosets",
            Subcommand::VerifyKernel => "verify-kernel",
            Subcommand::Selftest => "selftest",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Generic,
    #[default]
    Unitary,
}

/// One invocation. `input` and `pair` hold the parsed JSON itself, never a
/// path, so a job echoed into a report can be replayed verbatim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub subcommand: Subcommand,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Value>,
    #[serde(default)]
    pub mode: Mode,
    /// Twist `b` of `ψ_b(z) = exp(2πi Re(bz))`, as `"re,im"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s0: Option<String>,
    /// Second parameter for `eps`; switches to the pair factor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comp: Option<Vec<usize>>,
}

impl JobSpec {
    pub fn new(subcommand: Subcommand) -> Self {
        JobSpec {
            subcommand,
            input: None,
            mode: Mode::default(),
            b: None,
            s0: None,
            pair: None,
            radius: None,
            samples: None,
            n: None,
            comp: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subcommand: Subcommand,
    pub inputs: JobSpec,
    pub results: Value,
    /// The results of the library each part of `results` rests on.
    pub anchors: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Numeric,
    SuiteFailure,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Parse, message: message.into() }
    }

    fn precondition(hypothesis: &str, detail: impl fmt::Display) -> Self {
        CliError { kind: ErrorKind::Precondition, message: format!("hypothesis violated ({hypothesis}): {detail}") }
    }

    /// 1 parse error, 2 violated hypothesis, 3 numeric failure or a failing
    /// self-test suite.
    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Parse => 1,
            ErrorKind::Precondition => 2,
            ErrorKind::Numeric | ErrorKind::SuiteFailure => 3,
        }
    }
}

/// Attaches the hypothesis a library call relies on to its failure.
trait Hypothesis<T> {
    fn hyp(self, hypothesis: &str) -> Result<T, CliError>;
}

impl<T> Hypothesis<T> for Result<T, gldist::Error> {
    fn hyp(self, hypothesis: &str) -> Result<T, CliError> {
        self.map_err(|e| match e {
            gldist::Error::Parse(m) => CliError::parse(m),
            gldist::Error::NoConvergence { .. } => CliError { kind: ErrorKind::Numeric, message: e.to_string() },
            other => CliError::precondition(hypothesis, other),
        })
    }
}

/// Reads `arg` as inline JSON when it starts with `{` or `[`, otherwise as a
/// path to a JSON file. Syntax errors carry line and column.
pub fn load_json(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| CliError::parse(format!("inline JSON: {e}")));
    }
    let path = Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

/// Schema errors are parse errors; values the library's constructors reject
/// (a non-imaginary `u`, `t` outside `(0, 1)`, a zero size) are violated
/// hypotheses.
fn decode_field<T: DeserializeOwned>(v: &Value, what: &str, prefix: &str) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = match e.path().to_string().as_str() {
            "." if !prefix.is_empty() => prefix.to_string(),
            "." => ".".to_string(),
            rest if rest.starts_with('[') => format!("{prefix}{rest}"),
            rest if prefix.is_empty() => rest.to_string(),
            rest => format!("{prefix}.{rest}"),
        };
        let inner = e.into_inner().to_string();
        match inner.strip_prefix("precondition violated: ") {
            Some(detail) => CliError::precondition(
                "unitary blocks have imaginary u and 0 < t < 1; block sizes are positive",
                format!("{what} at `{path}`: {detail}"),
            ),
            None => CliError::parse(format!("{what} at `{path}`: {inner}")),
        }
    })
}

/// Decodes an object tagged by `type`, one variant per `(tag, field)`;
/// dispatching by hand keeps field paths in the diagnostics.
fn tagged<T: DeserializeOwned, R>(
    v: &Value,
    what: &str,
    variants: &[(&str, &str, fn(T) -> R)],
) -> Result<R, CliError> {
    let tag = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::parse(format!("{what}: missing string field `type`")))?;
    let Some((_, field, wrap)) = variants.iter().find(|(t, _, _)| *t == tag) else {
        let known: Vec<&str> = variants.iter().map(|(t, _, _)| *t).collect();
        return Err(CliError::parse(format!("{what}: unknown type `{tag}` (expected one of {known:?})")));
    };
    let inner = v.get(*field).ok_or_else(|| CliError::parse(format!("{what}: missing field `{field}`")))?;
    Ok(wrap(decode_field(inner, what, field)?))
}

fn parameter_file(v: &Value, what: &str) -> Result<ParameterFile, CliError> {
    if v.get("type").and_then(Value::as_str) == Some("unitary") {
        tagged(v, what, &[("unitary", "blocks", |blocks| ParameterFile::Unitary { blocks })])
    } else {
        tagged(v, what, &[("langlands", "characters", |characters| ParameterFile::Langlands { characters })])
    }
}

fn derive_input(v: &Value, what: &str) -> Result<DeriveInput, CliError> {
    if v.get("type").and_then(Value::as_str) == Some("unitary") {
        tagged(v, what, &[("unitary", "blocks", DeriveInput::Unitary)])
    } else {
        tagged(v, what, &[("monomial", "blocks", DeriveInput::Monomial)])
    }
}

/// A top-level array is a batch; anything else is a single item.
fn items<T>(
    input: Option<&Value>,
    what: &str,
    decode: fn(&Value, &str) -> Result<T, CliError>,
) -> Result<(Vec<T>, bool), CliError> {
    let v = input.ok_or_else(|| CliError::parse(format!("missing --input ({what})")))?;
    match v {
        Value::Array(xs) => {
            let parsed = xs
                .iter()
                .enumerate()
                .map(|(i, x)| decode(x, &format!("{what} #{i}")))
                .collect::<Result<Vec<T>, _>>()?;
            Ok((parsed, true))
        }
        single => Ok((vec![decode(single, what)?], false)),
    }
}

/// Runs `f` over the batch in parallel; results keep input order and the
/// first failure by index wins.
fn per_item<T, R, F>(items: Vec<T>, batch: bool, f: F) -> Result<Value, CliError>
where
    T: Sync,
    R: Serialize + Send,
    F: Fn(&T) -> Result<R, CliError> + Sync,
{
    let out: Vec<Result<R, CliError>> = items.par_iter().map(&f).collect();
    let out = out.into_iter().collect::<Result<Vec<R>, _>>()?;
    let mut values: Vec<Value> = out.iter().map(to_value).collect();
    Ok(if batch { Value::Array(values) } else { values.remove(0) })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize to JSON")
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    s.trim().parse::<Rational>().map_err(|e| CliError::parse(format!("`{s}`: {e}")))
}

/// `a`, `bi`, `a+bi`, `a-bi` with rational `a`, `b`; a bare `i` means one.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, CliError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(GaussianRational::real(parse_rational(&t)?));
    };
    // The imaginary part starts at the last sign that is not leading.
    let split = body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other.trim_start_matches('+'),
    };
    Ok(GaussianRational::new(parse_rational(re)?, parse_rational(im)?))
}

/// `"re,im"`.
fn parse_b(s: &str) -> Result<GaussianRational, CliError> {
    let (re, im) = s.split_once(',').ok_or_else(|| CliError::parse(format!("--b expects \"re,im\", got `{s}`")))?;
    Ok(GaussianRational::new(parse_rational(re)?, parse_rational(im)?))
}

pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    let (results, anchors) = match job.subcommand {
        Subcommand::Classify => classify(job)?,
        Subcommand::Ktype => ktype(job)?,
        Subcommand::Derive => derive(job)?,
        Subcommand::Eps => eps(job)?,
        Subcommand::Cosets => coset_report(job)?,
        Subcommand::VerifyKernel => verify_kernel(job)?,
        Subcommand::Selftest => selftest(job)?,
    };
    Ok(Report {
        subcommand: job.subcommand,
        inputs: job.clone(),
        results,
        anchors: anchors.iter().map(|s| s.to_string()).collect(),
    })
}

#[derive(Serialize)]
struct Classification {
    parameter: LanglandsParameter,
    distinguished: bool,
    condition_i: bool,
    condition_ii: bool,
    appears_in_branching: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    has_exceptional_factor: Option<bool>,
    verdict: DistinctionVerdict,
    /// The block-form verdict, for unitary input in unitary mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    block_verdict: Option<DistinctionVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
}

fn classify(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let (files, batch) = items(job.input.as_ref(), "parameter", parameter_file)?;
    let mode = job.mode;
    let results = per_item(files, batch, |f| {
        let p = f.langlands();
        let verdict = match mode {
            Mode::Generic => distinction::is_distinguished_generic(&p),
            Mode::Unitary => distinction::is_distinguished_unitary(&p),
        };
        let rep = f.unitary().filter(|_| mode == Mode::Unitary);
        let block_verdict = rep.map(distinction::is_distinguished_blocks);
        Ok(Classification {
            distinguished: verdict.distinguished,
            condition_i: verdict.condition_i,
            condition_ii: verdict.condition_ii,
            appears_in_branching: distinction::appears_in_branching(&p),
            has_exceptional_factor: f.unitary().map(distinction::has_exceptional_factor),
            agreement: block_verdict.as_ref().map(|b| b.distinguished == verdict.distinguished),
            block_verdict,
            verdict,
            parameter: p,
        })
    })?;
    let anchors: &[&str] = match mode {
        Mode::Generic => &[
            "generic criterion: condition (i) pairs characters by an involution",
            "branching question: same test as the generic criterion",
        ],
        Mode::Unitary => &[
            "unitary criterion: conditions (i) and (ii) on the parameter",
            "block criterion: u/-u pairing and even multiplicity of odd-k unitary characters",
            "branching question: same test as the generic criterion",
            "odd-k character blocks of size >= 2 carry no K-type non-vanishing guarantee",
        ],
    };
    Ok((results, anchors))
}

#[derive(Serialize)]
struct KtypeResult {
    lowest_ktype: HighestWeight,
    distinguished_minimal_ktype: HighestWeight,
    o_distinguished: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleResult>,
}

#[derive(Serialize)]
struct OracleResult {
    radius: i64,
    minimizers: Vec<HighestWeight>,
    agrees: bool,
}

fn ktype(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let (files, batch) = items(job.input.as_ref(), "parameter", parameter_file)?;
    let radius = job.radius;
    let results = per_item(files, batch, |f| {
        let p = f.langlands();
        let dmk = ktypes::distinguished_minimal_ktype(&p)
            .hyp("every odd m_j must occur an even number of times")?;
        let oracle = match radius {
            Some(r) => {
                let minimizers = ktypes::minimal_distinguished_ktype_oracle(&p, r)
                    .hyp("the oracle radius must cover max |m_j| and reach an even K-type")?;
                Some(OracleResult { radius: r, agrees: minimizers == [dmk.clone()], minimizers })
            }
            None => None,
        };
        Ok(KtypeResult {
            lowest_ktype: ktypes::lowest_ktype(&p),
            o_distinguished: ktypes::is_o_distinguished(&dmk),
            distinguished_minimal_ktype: dmk,
            oracle,
        })
    })?;
    Ok((
        results,
        &[
            "lowest K-type: the m-vector in decreasing order",
            "distinguished minimal K-type: pairs of odd k become k+1 and k-1",
            "oracle: least-norm even weights occurring in the principal series (Kostant multiplicity)",
        ],
    ))
}

enum DeriveInput {
    Monomial(MonomialRep),
    Unitary(UnitaryRep),
}

#[derive(Serialize)]
struct DeriveResult {
    condition_i: bool,
    condition_ii: bool,
    outcome: NecessityOutcome,
    /// Condition (i) holds but a derivative fails it: not distinguished.
    certifies_non_distinction: bool,
}

fn derive(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let (inputs, batch) = items(job.input.as_ref(), "monomial representation", derive_input)?;
    let results = per_item(inputs, batch, |d| {
        let m = match d {
            DeriveInput::Monomial(blocks) => blocks.clone(),
            DeriveInput::Unitary(blocks) => {
                MonomialRep::from_unitary(blocks).hyp("the derivative test applies to products of characters")?
            }
        };
        let p = m.to_langlands();
        let condition_i = distinction::check_condition_i(&p).0;
        let outcome = derivative_necessity_test(&m);
        Ok(DeriveResult {
            condition_i,
            condition_ii: distinction::check_condition_ii(&p).0,
            certifies_non_distinction: condition_i && !outcome.passes,
            outcome,
        })
    })?;
    Ok((
        results,
        &[
            "highest derivative: every block shrinks by one",
            "necessity: a distinguished unitary representation has all iterated highest derivatives satisfying condition (i)",
        ],
    ))
}

#[derive(Serialize)]
struct EpsResult {
    b: GaussianRational,
    s0: GaussianRational,
    eps: ExactEps,
    is_one: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<PairEps>,
}

#[derive(Serialize)]
struct PairEps {
    with: LanglandsParameter,
    eps: ExactEps,
    is_one: bool,
}

fn eps(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let (files, batch) = items(job.input.as_ref(), "parameter", parameter_file)?;
    let b = job.b.as_deref().map(parse_b).transpose()?.unwrap_or_else(GaussianRational::i);
    let psi = AdditiveCharacterSpec::new(b.clone()).hyp("the additive character needs b != 0")?;
    let s0 = match &job.s0 {
        Some(s) => parse_gaussian(s)?,
        None => GaussianRational::real(Rational::frac(1, 2)),
    };
    let other = match &job.pair {
        Some(v) => Some(parameter_file(v, "pair parameter")?.langlands()),
        None => None,
    };
    let results = per_item(files, batch, |f| {
        let p = f.langlands();
        let e = factors::eps_rep(&p, &psi, &s0);
        let pair = other.as_ref().map(|q| {
            let e = factors::eps_pair(&p, q, &psi);
            PairEps { with: q.clone(), is_one: e.is_one(), eps: e }
        });
        Ok(EpsResult { b: b.clone(), s0: s0.clone(), is_one: e.is_one(), eps: e, pair })
    })?;
    Ok((
        results,
        &[
            "epsilon factor of a character: i^|m| b^m |b|^(2s-m+s0-1/2)",
            "epsilon factors are multiplicative over the parameter",
            "distinguished parameters have epsilon 1 at s0 = 1/2 when psi is trivial on R",
        ],
    ))
}

#[derive(Serialize)]
struct CosetClass {
    representative: Involution,
    members: usize,
    orbit_dimension: usize,
    open: bool,
}

#[derive(Serialize)]
struct CosetResult {
    n: usize,
    composition: Vec<usize>,
    involutions: usize,
    representatives_verified: bool,
    classes: Vec<CosetClass>,
}

fn coset_report(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let n = job.n.ok_or_else(|| CliError::parse("cosets needs --n"))?;
    let comp = match &job.comp {
        Some(parts) => Composition::new(parts.clone()).hyp("composition parts must be positive")?,
        None => Composition::borel(n),
    };
    let all = cosets::enumerate_involutions(n).hyp("n must lie in 1..=10")?;
    let classes = cosets::parabolic_class_members(n, &comp).hyp("n <= 8 and the composition sums to n")?;
    let classes = classes
        .par_iter()
        .map(|members| {
            let w = &members[0];
            let d = cosets::orbit_dimension(w, &comp).hyp("the composition sums to n")?;
            Ok(CosetClass { representative: w.clone(), members: members.len(), orbit_dimension: d, open: d == 2 * n * n })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let result = CosetResult {
        n,
        composition: comp.parts().to_vec(),
        involutions: all.len(),
        representatives_verified: all.par_iter().all(cosets::verify_representative),
        classes,
    };
    Ok((
        to_value(&result),
        &[
            "Borel orbits on GL_n(C)/GL_n(R) are indexed by involutions",
            "g_w conj(g_w)^-1 lies in wT",
            "parabolic orbits: Young-subgroup double cosets of involutions",
            "orbit dimension: real rank of p + Ad(g_w) gl_n(R); open iff 2n^2",
        ],
    ))
}

#[derive(Serialize)]
struct KernelSample {
    s: GaussianRational,
    irreducible: bool,
    case1: CaseOutcome,
    case2: CaseOutcome,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CaseOutcome {
    Checked(KernelCheck),
    Skipped { skipped: String },
}

const DEFAULT_SAMPLES: [&str; 4] = ["0", "1/5", "2/5", "1/5+3/10i"];

fn verify_kernel(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    let samples: Vec<String> = match &job.samples {
        Some(v) => v.clone(),
        None => DEFAULT_SAMPLES.iter().map(|s| s.to_string()).collect(),
    };
    let parsed = samples.iter().map(|s| parse_gaussian(s)).collect::<Result<Vec<_>, _>>()?;
    let cfg = QuadratureConfig::default();
    let results = per_item(parsed, true, |s| {
        let z = s.to_complex();
        let domain = StripDomain::new(z);
        if !domain.case1 && !domain.case2 {
            return Err(CliError::precondition(
                "the kernel integrals converge only for -2/3 < Re s < 2",
                format!("s = {s}"),
            ));
        }
        let check = |case: KernelCase| -> Result<CaseOutcome, CliError> {
            if !domain.valid(case) {
                let (lo, hi) = case.strip();
                return Ok(CaseOutcome::Skipped { skipped: format!("outside {lo:.4} < Re s < {hi}") });
            }
            kernelnum::kernel_check(case, z, &cfg).hyp("s inside the convergence strip").map(CaseOutcome::Checked)
        };
        Ok(KernelSample {
            irreducible: kernelnum::irreducibility_guard(s),
            case1: check(KernelCase::Case1)?,
            case2: check(KernelCase::Case2)?,
            s: s.clone(),
        })
    })?;
    Ok((
        results,
        &[
            "radial integral: Beta-function closed form",
            "angular integral: int |sin|^p over a full period",
            "case 1 equals 2^-(1+s) times the displayed Gamma expression; case 2 also divides by 1+s",
        ],
    ))
}

fn selftest(job: &JobSpec) -> Result<(Value, &'static [&'static str]), CliError> {
    if job.input.is_some() {
        return Err(CliError::parse("selftest takes no input"));
    }
    let suites = run_suites();
    let failed: Vec<&str> = suites.iter().filter(|s| !s.passed).map(|s| s.name.as_str()).collect();
    if !failed.is_empty() {
        return Err(CliError {
            kind: ErrorKind::SuiteFailure,
            message: format!("self-test suites failed: {}", failed.join(", ")),
        });
    }
    Ok((to_value(&suites), &["invariant suites over the whole library"]))
}
