//! Seeded evidence runs: relator soundness, decomposition round-trips, a
//! torsion census and a bounded completeness probe.
//!
//! Every run is a pure function of its [`TrialConfig`]. Trial `i` draws from
//! a ChaCha8 stream keyed by `(seed, i)`, trials run in parallel, and results
//! are merged in trial order, so reports are byte-identical across runs and
//! thread counts.

pub mod rewrite;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::decompose::{decompose_traced, Branch};
use crate::error::{Error, Result};
use crate::exact::{is_prime, ProjMat2};
use crate::presentation::{
    check_involution_laws, check_u_identity, corrected_variants, instantiate, verify_relator, Catalog, Expectation,
    Relator, VerifyResult,
};
use crate::torsion::{conjugator_to_canonical, order_of, OrderClass};
use crate::words::{Base, GenLetter, Word};

pub use rewrite::{replay, rewrite_search, RewriteMove, RewriteStep, SearchLimits, SearchOutcome};

pub const SCHEMA_VERSION: u32 = 1;

/// Letters enumerated by the completeness probe unless configured otherwise.
pub const DEFAULT_PROBE_ALPHABET: [&str; 6] = ["T", "T^-1", "U", "V", "H(2)", "H(2)^-1"];

/// Parameters of an evidence run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_word_len: usize,
    pub entry_bound: u64,
    pub prime_pool: Vec<u64>,
    pub rewrite_depth: usize,
    pub length_cap: usize,
    /// Cap on words visited by a single rewrite search.
    pub node_budget: usize,
    /// Letters enumerated by the completeness probe.
    pub alphabet: Vec<String>,
    /// Restricts soundness sampling to these relator ids (e.g.
    /// `involution/VII`); empty means the default mixed scope.
    pub families: Vec<String>,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 1,
            trials: 1000,
            max_word_len: 4,
            entry_bound: 1000,
            prime_pool: vec![2, 3, 5, 7],
            rewrite_depth: 10,
            length_cap: 24,
            node_budget: 100_000,
            alphabet: DEFAULT_PROBE_ALPHABET.iter().map(|s| s.to_string()).collect(),
            families: Vec::new(),
        }
    }
}

impl TrialConfig {
    /// Defaults suited to `mode`; the probe only needs the prime 2.
    pub fn for_mode(mode: Mode) -> Self {
        let mut cfg = TrialConfig::default();
        if mode == Mode::Probe {
            cfg.prime_pool = vec![2];
        }
        cfg
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("max_word_len", self.max_word_len as u64),
            ("entry_bound", self.entry_bound),
            ("rewrite_depth", self.rewrite_depth as u64),
            ("length_cap", self.length_cap as u64),
            ("node_budget", self.node_budget as u64),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| *v == 0) {
            return Err(Error::Config(format!("{name} must be positive")));
        }
        if self.prime_pool.is_empty() {
            return Err(Error::Config("prime_pool must not be empty".into()));
        }
        if !self.prime_pool.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("prime_pool must be sorted and distinct".into()));
        }
        if let Some(p) = self.prime_pool.iter().find(|&&p| !is_prime(&BigInt::from(p))) {
            return Err(Error::Config(format!("{p} in prime_pool is not prime")));
        }
        if self.alphabet.is_empty() {
            return Err(Error::Config("alphabet must not be empty".into()));
        }
        self.probe_alphabet()?;
        Ok(())
    }

    fn probe_alphabet(&self) -> Result<Vec<Word>> {
        self.alphabet
            .iter()
            .map(|s| {
                let w: Word = s.parse()?;
                if w.len() != 1 {
                    return Err(Error::Config(format!("alphabet entry {s:?} is not a single letter")));
                }
                Ok(w)
            })
            .collect()
    }

    fn limits(&self) -> SearchLimits {
        SearchLimits {
            primes: self.prime_pool.clone(),
            depth: self.rewrite_depth,
            length_cap: self.length_cap,
            node_budget: self.node_budget,
        }
    }

    /// The random stream for trial `index`.
    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Soundness,
    Roundtrip,
    Census,
    Probe,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Soundness => "soundness",
            Mode::Roundtrip => "roundtrip",
            Mode::Census => "census",
            Mode::Probe => "probe",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "soundness" => Ok(Mode::Soundness),
            "roundtrip" => Ok(Mode::Roundtrip),
            "census" => Ok(Mode::Census),
            "probe" => Ok(Mode::Probe),
            other => Err(Error::Config(format!("unknown mode {other:?}"))),
        }
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub kind: String,
    pub inputs: Vec<String>,
    pub witness: Option<String>,
    pub detail: String,
}

/// A matrix-equal pair the rewrite search could not connect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unresolved {
    pub matrix: String,
    pub word_a: String,
    pub word_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub schema_version: u32,
    pub mode: Mode,
    pub config: TrialConfig,
    pub counters: BTreeMap<String, u64>,
    pub failures: Vec<Failure>,
    pub unresolved: Vec<Unresolved>,
}

impl EvidenceReport {
    fn new(mode: Mode, cfg: &TrialConfig) -> Self {
        EvidenceReport {
            schema_version: SCHEMA_VERSION,
            mode,
            config: cfg.clone(),
            counters: BTreeMap::new(),
            failures: Vec::new(),
            unresolved: Vec::new(),
        }
    }

    pub fn counter(&self, name: &str) -> u64 {
        self.counters.get(name).copied().unwrap_or(0)
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn bump(&mut self, name: &str, by: u64) {
        *self.counters.entry(name.to_string()).or_default() += by;
    }

    fn absorb(&mut self, outcome: TrialOutcome) {
        for (name, by) in outcome.counters {
            self.bump(&name, by);
        }
        self.failures.extend(outcome.failures);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// A short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!("mode={} seed={} trials={}\n", self.mode, self.config.seed, self.config.trials);
        for (k, v) in &self.counters {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        out.push_str(&format!("failures: {}\n", self.failures.len()));
        for f in self.failures.iter().take(10) {
            out.push_str(&format!("  [{}] {} {}\n", f.kind, f.inputs.join(" | "), f.detail));
        }
        if !self.unresolved.is_empty() {
            out.push_str(&format!("unresolved: {}\n", self.unresolved.len()));
            for u in self.unresolved.iter().take(10) {
                out.push_str(&format!("  {}: \"{}\" ~ \"{}\"\n", u.matrix, u.word_a, u.word_b));
            }
        }
        out
    }
}

/// Checks that `json` is a well-formed evidence report.
pub fn validate_json(json: &str) -> Result<()> {
    let v: Value = serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| schema("top level is not an object"))?;
    for key in obj.keys() {
        if !["schema_version", "mode", "config", "counters", "failures", "unresolved"].contains(&key.as_str()) {
            return Err(schema(&format!("unexpected field {key:?}")));
        }
    }
    if obj.get("schema_version").and_then(Value::as_u64) != Some(u64::from(SCHEMA_VERSION)) {
        return Err(schema("schema_version must be 1"));
    }
    let mode = obj.get("mode").and_then(Value::as_str).ok_or_else(|| schema("mode must be a string"))?;
    mode.parse::<Mode>().map_err(|_| schema("unknown mode"))?;
    let config = obj.get("config").ok_or_else(|| schema("missing config"))?;
    let config: TrialConfig =
        serde_json::from_value(config.clone()).map_err(|e| schema(&format!("config: {e}")))?;
    config.validate().map_err(|e| schema(&format!("config: {e}")))?;
    let counters = obj.get("counters").and_then(Value::as_object).ok_or_else(|| schema("counters must be an object"))?;
    if !counters.values().all(Value::is_u64) {
        return Err(schema("counters must be non-negative integers"));
    }
    let failures = obj.get("failures").and_then(Value::as_array).ok_or_else(|| schema("failures must be an array"))?;
    for f in failures {
        let f: Failure = serde_json::from_value(f.clone()).map_err(|e| schema(&format!("failure: {e}")))?;
        if let Some(w) = &f.witness {
            w.parse::<ProjMat2>().map_err(|e| schema(&format!("failure witness: {e}")))?;
        }
    }
    let unresolved =
        obj.get("unresolved").and_then(Value::as_array).ok_or_else(|| schema("unresolved must be an array"))?;
    for u in unresolved {
        let u: Unresolved = serde_json::from_value(u.clone()).map_err(|e| schema(&format!("unresolved: {e}")))?;
        let m: ProjMat2 = u.matrix.parse().map_err(|e| schema(&format!("unresolved matrix: {e}")))?;
        for w in [&u.word_a, &u.word_b] {
            let w: Word = w.parse().map_err(|e| schema(&format!("unresolved word: {e}")))?;
            if w.eval() != m {
                return Err(schema("unresolved word does not evaluate to its matrix"));
            }
        }
    }
    Ok(())
}

fn schema(msg: &str) -> Error {
    Error::Schema(msg.to_string())
}

/// Runs the evidence mode `mode` on `cfg`.
pub fn run(mode: Mode, cfg: &TrialConfig) -> Result<EvidenceReport> {
    cfg.validate()?;
    Ok(match mode {
        Mode::Soundness => fuzz_soundness(cfg)?,
        Mode::Roundtrip => fuzz_roundtrip(cfg),
        Mode::Census => torsion_census(cfg),
        Mode::Probe => completeness_probe(cfg)?,
    })
}

#[derive(Default)]
struct TrialOutcome {
    counters: Vec<(String, u64)>,
    failures: Vec<Failure>,
}

impl TrialOutcome {
    fn count(&mut self, name: impl Into<String>) {
        self.counters.push((name.into(), 1));
    }

    fn fail(&mut self, kind: &str, inputs: Vec<String>, witness: Option<&ProjMat2>, detail: String) {
        self.failures.push(Failure {
            kind: kind.to_string(),
            inputs,
            witness: witness.map(ToString::to_string),
            detail,
        });
    }

    fn record(&mut self, kind: &str, input: String, result: &VerifyResult) {
        self.count(kind);
        if !result.holds {
            let detail = match &result.note {
                Some(note) => format!("{}: {note}", result.id),
                None => format!("{} does not evaluate to the identity", result.id),
            };
            self.fail(kind, vec![input], Some(&result.witness), detail);
        }
    }
}

fn run_trials(
    mode: Mode,
    cfg: &TrialConfig,
    trial: impl Fn(&mut ChaCha8Rng, &mut TrialOutcome) + Sync,
) -> EvidenceReport {
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = cfg.rng(i);
            let mut out = TrialOutcome::default();
            trial(&mut rng, &mut out);
            out
        })
        .collect();
    let mut report = EvidenceReport::new(mode, cfg);
    report.bump("trials", cfg.trials);
    for o in outcomes {
        report.absorb(o);
    }
    report
}

fn matches_family(id: &str, family: &str) -> bool {
    id.strip_prefix(family)
        .is_some_and(|rest| rest.is_empty() || rest.starts_with('[') || rest.starts_with('.'))
}

fn nonzero_int(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = nonzero_int(rng, 30);
    let den = if rng.gen_bool(0.5) { 1 } else { rng.gen_range(1..=12) };
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Samples relator instances and parameterized laws and checks that each
/// evaluates to the identity.
///
/// With `families` empty, each trial picks one of: a tv relator, an
/// involution relator not flagged as misprinted, the `U` identity at a
/// random integer, or the involution laws at random rationals. With
/// `families` set, trials sample only the matching relators, misprinted
/// ones included, so a wrong relator shows up as failures.
pub fn fuzz_soundness(cfg: &TrialConfig) -> Result<EvidenceReport> {
    cfg.validate()?;
    let tv = instantiate(Catalog::Tv, &cfg.prime_pool);
    let involution: Vec<Relator> = instantiate(Catalog::Involution, &cfg.prime_pool)
        .into_iter()
        .filter(|r| r.expected == Expectation::Identity)
        .collect();
    if !cfg.families.is_empty() {
        let all: Vec<Relator> = tv
            .into_iter()
            .chain(instantiate(Catalog::Involution, &cfg.prime_pool))
            .chain(corrected_variants())
            .collect();
        let scoped: Vec<Relator> =
            all.into_iter().filter(|r| cfg.families.iter().any(|f| matches_family(&r.id(), f))).collect();
        if scoped.is_empty() {
            return Err(Error::Config(format!("no relators match families {:?}", cfg.families)));
        }
        return Ok(run_trials(Mode::Soundness, cfg, |rng, out| {
            let r = scoped.choose(rng).expect("nonempty");
            out.record(&format!("relator:{}", r.catalog), r.word.to_string(), &verify_relator(r));
        }));
    }
    Ok(run_trials(Mode::Soundness, cfg, |rng, out| match rng.gen_range(0..4) {
        0 => {
            let r = tv.choose(rng).expect("nonempty");
            out.record("relator:tv", r.word.to_string(), &verify_relator(r));
        }
        1 => {
            let r = involution.choose(rng).expect("nonempty");
            out.record("relator:involution", r.word.to_string(), &verify_relator(r));
        }
        2 => {
            let p = nonzero_int(rng, 20);
            let result = check_u_identity(p).expect("p is nonzero");
            out.record("law:u-identity", format!("p={p}"), &result);
        }
        _ => {
            let (r, s) = (random_rational(rng), random_rational(rng));
            let result = check_involution_laws(&r, &s).expect("nonzero parameters");
            out.record("law:involutions", format!("r={r} s={s}"), &result);
        }
    }))
}

/// A uniformly random nonsingular matrix with entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut ChaCha8Rng, bound: u64) -> ProjMat2 {
    let b = bound as i64;
    loop {
        let mut e = || rng.gen_range(-b..=b);
        if let Ok(m) = ProjMat2::new(e(), e(), e(), e()) {
            return m;
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, cfg: &TrialConfig) -> Word {
    let len = rng.gen_range(1..=cfg.max_word_len);
    let letters = (0..len)
        .map(|_| {
            let p = *cfg.prime_pool.choose(rng).expect("nonempty pool") as i64;
            let base = match rng.gen_range(0..8) {
                0 => Base::T,
                1 => Base::U,
                2 => Base::V,
                3 => Base::K,
                4 => Base::S,
                5 => Base::L,
                6 => Base::h(p),
                _ => Base::i(if rng.gen_bool(0.5) { p } else { -p }),
            };
            let exp = *[-2i64, -1, 1, 2].choose(rng).expect("nonempty");
            GenLetter::new(base, exp).expect("nonzero exponent")
        })
        .collect();
    Word::from_letters(letters)
}

fn in_output_alphabet(w: &Word) -> bool {
    w.uses_prime_parameters() && w.letters().iter().all(|l| matches!(l.base, Base::T | Base::U | Base::V | Base::H(_)))
}

fn branch_counter(b: Branch) -> &'static str {
    match b {
        Branch::General => "branch:a",
        Branch::ZeroCorner => "branch:b",
        Branch::Affine => "branch:c",
    }
}

fn check_roundtrip(kind: &str, input: String, m: &ProjMat2, out: &mut TrialOutcome) {
    let (word, branch) = decompose_traced(m);
    out.count(kind);
    out.count(branch_counter(branch));
    let back = word.eval();
    if &back != m {
        out.fail(kind, vec![input, word.to_string()], Some(&back), format!("decomposition evaluates to {back}, not {m}"));
    } else if !in_output_alphabet(&word) {
        out.fail(kind, vec![input, word.to_string()], None, "decomposition leaves the {T, U, V, H(prime)} alphabet".into());
    }
}

/// Random matrices and random words, each pushed through `decompose` and
/// evaluated back.
pub fn fuzz_roundtrip(cfg: &TrialConfig) -> EvidenceReport {
    let mut report = run_trials(Mode::Roundtrip, cfg, |rng, out| {
        if rng.gen_bool(0.5) {
            let m = random_matrix(rng, cfg.entry_bound);
            check_roundtrip("roundtrip:matrix", m.to_string(), &m, out);
        } else {
            let w = random_word(rng, cfg);
            check_roundtrip("roundtrip:word", w.to_string(), &w.eval(), out);
        }
    });
    if cfg.trials > 0 {
        let mut out = TrialOutcome::default();
        check_roundtrip("roundtrip:identity", "identity".into(), &ProjMat2::identity(), &mut out);
        report.absorb(out);
    }
    report
}

fn expected_tau(n: u32) -> Option<BigRational> {
    let t = match n {
        2 => 0,
        3 => 1,
        4 => 2,
        6 => 3,
        _ => return None,
    };
    Some(BigRational::from_integer(BigInt::from(t)))
}

fn class_counter(c: &OrderClass) -> String {
    match c {
        OrderClass::Identity => "order:identity".into(),
        OrderClass::Finite(n) => format!("order:finite-{n}"),
        other => format!("order:{other}"),
    }
}

/// Classifies random nonsingular matrices; any finite order outside
/// `{1, 2, 3, 4, 6}`, a `τ` off its expected value, or a conjugator that
/// does not verify is a failure. The distribution of conjugator exponents
/// is recorded under `conjugator:e=..`.
pub fn torsion_census(cfg: &TrialConfig) -> EvidenceReport {
    run_trials(Mode::Census, cfg, |rng, out| {
        let m = random_matrix(rng, cfg.entry_bound);
        let class = order_of(&m);
        out.count(class_counter(&class));
        let OrderClass::Finite(n) = class else { return };
        let Some(tau) = expected_tau(n) else {
            out.fail("census:order", vec![m.to_string()], Some(&m), format!("finite order {n}"));
            return;
        };
        let actual = m.trace_sq_over_det();
        if actual != tau {
            out.fail("census:tau", vec![m.to_string()], Some(&m), format!("order {n} with tau={actual}"));
        }
        if n >= 3 {
            match conjugator_to_canonical(&m) {
                Ok(w) if w.verify(&m) => out.count(format!("conjugator:e={}", w.exponent)),
                Ok(w) => out.fail(
                    "census:conjugator",
                    vec![m.to_string()],
                    Some(&w.conjugator),
                    format!("witness {w} does not verify"),
                ),
                Err(e) => out.fail("census:conjugator", vec![m.to_string()], None, e.to_string()),
            }
        }
    })
}

/// Distinct freely reduced words of length `<= max_len` over `alphabet`,
/// sorted by length and then text.
fn enumerate_words(alphabet: &[Word], max_len: usize) -> (u64, Vec<Word>) {
    let mut layer = vec![Word::empty()];
    let mut generated = 1u64;
    let mut all = std::collections::BTreeSet::new();
    all.insert((0usize, String::new()));
    let mut reduced = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for a in alphabet {
                let x = w.concat(a);
                generated += 1;
                let r = x.free_reduce();
                if all.insert((r.len(), r.to_string())) {
                    reduced.push(r);
                }
                next.push(x);
            }
        }
        layer = next;
    }
    reduced.sort_by_cached_key(|w| (w.len(), w.to_string()));
    (generated, reduced)
}

/// Enumerates all words up to `max_word_len` over the configured alphabet,
/// buckets them by matrix, and tries to connect consecutive words in each
/// bucket by relator rewriting. Pairs the search cannot connect are listed
/// as unresolved: candidates for a missing relator, or for a deeper search.
pub fn completeness_probe(cfg: &TrialConfig) -> Result<EvidenceReport> {
    cfg.validate()?;
    let alphabet = cfg.probe_alphabet()?;
    let (generated, words) = enumerate_words(&alphabet, cfg.max_word_len);
    let mut buckets: BTreeMap<ProjMat2, Vec<Word>> = BTreeMap::new();
    for w in words {
        buckets.entry(w.eval()).or_default().push(w);
    }
    let pairs: Vec<(&ProjMat2, &Word, &Word)> = buckets
        .iter()
        .flat_map(|(m, ws)| ws.windows(2).map(move |p| (m, &p[0], &p[1])))
        .collect();
    let limits = cfg.limits();
    let results: Vec<Result<SearchOutcome>> = pairs.par_iter().map(|(_, a, b)| rewrite_search(a, b, &limits)).collect();

    let mut report = EvidenceReport::new(Mode::Probe, cfg);
    report.bump("words_generated", generated);
    report.bump("words_reduced", buckets.values().map(|ws| ws.len() as u64).sum());
    report.bump("buckets", buckets.len() as u64);
    report.bump("buckets_multi", buckets.values().filter(|ws| ws.len() > 1).count() as u64);
    report.bump("pairs", pairs.len() as u64);
    report.bump("connected", 0);
    report.bump("unresolved", 0);
    let mut longest = 0u64;
    for ((m, a, b), result) in pairs.iter().zip(results) {
        match result {
            Ok(SearchOutcome::Path(path)) => {
                report.bump("connected", 1);
                longest = longest.max(path.len() as u64);
            }
            Ok(SearchOutcome::Exhausted { .. }) => {
                report.bump("unresolved", 1);
                report.unresolved.push(Unresolved {
                    matrix: m.to_string(),
                    word_a: a.to_string(),
                    word_b: b.to_string(),
                });
            }
            Err(e) => report.failures.push(Failure {
                kind: "probe:bucket".into(),
                inputs: vec![a.to_string(), b.to_string()],
                witness: Some(m.to_string()),
                detail: e.to_string(),
            }),
        }
    }
    report.bump("longest_path", longest);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: u64) -> TrialConfig {
        TrialConfig { trials, ..TrialConfig::default() }
    }

    #[test]
    fn zero_trials_give_an_empty_report() {
        for mode in [Mode::Soundness, Mode::Roundtrip, Mode::Census] {
            let r = run(mode, &cfg(0)).unwrap();
            assert!(r.failures.is_empty());
            assert_eq!(r.counter("trials"), 0);
            assert_eq!(r.counters.len(), 1);
        }
    }

    #[test]
    fn soundness_default_scope_passes() {
        let r = fuzz_soundness(&cfg(400)).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert!(r.counter("relator:tv") > 0 && r.counter("law:involutions") > 0);
    }

    #[test]
    fn printed_vii_viii_always_fail() {
        let c = TrialConfig {
            families: vec!["involution/VII".into(), "involution/VIII".into()],
            ..cfg(50)
        };
        let r = fuzz_soundness(&c).unwrap();
        assert_eq!(r.failures.len(), 50);
        assert!(r.failures.iter().all(|f| f.witness.is_some()));
        let c = TrialConfig { families: vec!["involution/VII'".into(), "involution/VIII'".into()], ..cfg(20) };
        assert!(fuzz_soundness(&c).unwrap().passed());
    }

    #[test]
    fn unknown_family_is_a_config_error() {
        let c = TrialConfig { families: vec!["tv/IX".into()], ..cfg(1) };
        assert!(matches!(fuzz_soundness(&c), Err(Error::Config(_))));
    }

    #[test]
    fn roundtrip_hits_every_branch() {
        let r = fuzz_roundtrip(&cfg(300));
        assert!(r.passed(), "{}", r.summary());
        for b in ["branch:a", "branch:b", "branch:c"] {
            assert!(r.counter(b) > 0, "{b}");
        }
    }

    #[test]
    fn census_with_unit_entries() {
        let c = TrialConfig { entry_bound: 1, ..cfg(500) };
        let r = torsion_census(&c);
        assert!(r.passed(), "{}", r.summary());
        assert!(r.counter("order:finite-2") > 0);
    }

    #[test]
    fn reports_are_deterministic_and_valid() {
        let c = cfg(200);
        for mode in [Mode::Soundness, Mode::Roundtrip, Mode::Census] {
            let a = run(mode, &c).unwrap().to_json();
            let b = run(mode, &c).unwrap().to_json();
            assert_eq!(a, b);
            validate_json(&a).unwrap();
        }
    }

    #[test]
    fn probe_single_letters_are_singletons() {
        let c = TrialConfig { max_word_len: 1, ..TrialConfig::for_mode(Mode::Probe) };
        let r = completeness_probe(&c).unwrap();
        assert_eq!(r.counter("pairs"), 0);
        assert_eq!(r.counter("buckets"), 7);
    }

    #[test]
    fn probe_over_u_and_v_sees_the_klein_group() {
        let c = TrialConfig {
            max_word_len: 2,
            alphabet: vec!["U".into(), "V".into()],
            ..TrialConfig::for_mode(Mode::Probe)
        };
        let r = completeness_probe(&c).unwrap();
        assert_eq!(r.counter("buckets"), 4);
        assert_eq!(r.counter("pairs"), 1);
        assert_eq!(r.counter("connected"), 1);
        validate_json(&r.to_json()).unwrap();
    }

    #[test]
    fn validation_rejects_bad_configs_and_reports() {
        assert!(TrialConfig { prime_pool: vec![3, 2], ..cfg(1) }.validate().is_err());
        assert!(TrialConfig { prime_pool: vec![4], ..cfg(1) }.validate().is_err());
        assert!(TrialConfig { length_cap: 0, ..cfg(1) }.validate().is_err());
        assert!(TrialConfig { alphabet: vec!["T U".into()], ..cfg(1) }.validate().is_err());
        assert!(validate_json("{}").is_err());
        let mut r: Value = serde_json::from_str(&fuzz_roundtrip(&cfg(3)).to_json()).unwrap();
        r["unresolved"] = serde_json::json!([{"matrix": "[[1,1],[0,1]]", "word_a": "T", "word_b": "U"}]);
        assert!(validate_json(&r.to_string()).is_err());
    }
}
