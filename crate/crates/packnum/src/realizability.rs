//! Realizable (clique, chromatic, packing chromatic) triples, corpus
//! checks, counterexample searches, and the table of least realizable
//! packing chromatic numbers.

use crate::graph::{distances, Graph};
use crate::graph6::emit_graph6;
use crate::invariants::{chromatic_number, clique_number, independence_number, is_k_critical};
use crate::mycielskian::{alpha_mycielskian, mycielskian};
use crate::packing::{
    is_s_packing_colorable, packing_chromatic_number, SPackingSpec,
};
use crate::solve::{Budget, BudgetExceeded};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Clique number, chromatic number, and packing chromatic number of a
/// graph, in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub clique: usize,
    pub chromatic: usize,
    pub packing_chromatic: usize,
}

impl Triple {
    pub fn new(clique: usize, chromatic: usize, packing_chromatic: usize) -> Self {
        Self {
            clique,
            chromatic,
            packing_chromatic,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.clique, self.chromatic, self.packing_chromatic
        )
    }
}

pub fn triple_of(g: &Graph, budget: Budget) -> Result<Triple, BudgetExceeded> {
    Ok(Triple {
        clique: clique_number(g),
        chromatic: chromatic_number(g),
        packing_chromatic: packing_chromatic_number(g, budget)?.0,
    })
}

#[derive(Debug, Error)]
pub enum RealizeError {
    #[error("base graph needs at least one edge")]
    NoEdge,
    #[error("target {target} is below the packing chromatic number {current} of the base graph")]
    TargetBelow { target: usize, current: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Grows a graph into one with the same clique and chromatic numbers
/// and packing chromatic number exactly `target`, by appending leaves
/// one at a time.
///
/// A leaf changes no distance between old vertices, so the old packing
/// colouring extends with one fresh colour (the value rises by at most
/// one) and colourings restrict to subgraphs (it never falls).  If a
/// whole round of `current` leaves on every vertex failed to raise the
/// value, restricting a colouring of the round's result would colour
/// the round's start graph with fewer than `current` colours, which is
/// impossible; hence each round raises the value by exactly one.
pub fn realize_higher(g: &Graph, target: usize, budget: Budget) -> Result<Graph, RealizeError> {
    if g.edge_count() == 0 {
        return Err(RealizeError::NoEdge);
    }
    let (mut current, _) = packing_chromatic_number(g, budget)?;
    if target < current {
        return Err(RealizeError::TargetBelow { target, current });
    }
    let mut work = g.clone();
    while current < target {
        let round_order = work.n();
        let mut raised = false;
        'round: for v in 0..round_order {
            for _ in 0..current {
                work = work.append_leaves(&[(v, 1)]).expect("vertex is in range");
                if !is_s_packing_colorable(&work, &SPackingSpec::chi_rho(current), budget)? {
                    current += 1;
                    raised = true;
                    break 'round;
                }
            }
        }
        assert!(
            raised,
            "a full round of appended leaves must raise the packing chromatic number"
        );
    }
    Ok(work)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CheckId {
    #[serde(rename = "indep-upper")]
    IndepUpper,
    #[serde(rename = "degree-lower")]
    DegreeLower,
    #[serde(rename = "degree-lower-tight")]
    DegreeLowerTight,
    #[serde(rename = "stars-222")]
    Stars222,
    #[serde(rename = "chi-eq-rho-clique")]
    ChiEqRhoClique,
    #[serde(rename = "no-gap-one")]
    NoGapOne,
    #[serde(rename = "no-gap-two")]
    NoGapTwo,
    #[serde(rename = "conjecture-356")]
    Conjecture356,
    #[serde(rename = "myc-alpha-formula")]
    MycAlphaFormula,
    #[serde(rename = "myc-alpha-sandwich")]
    MycAlphaSandwich,
    #[serde(rename = "myc-alpha-sharp")]
    MycAlphaSharp,
    #[serde(rename = "myc-rho-step")]
    MycRhoStep,
    #[serde(rename = "myc-rho-upper")]
    MycRhoUpper,
    #[serde(rename = "myc-diam2-eq")]
    MycDiam2Eq,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::IndepUpper,
        CheckId::DegreeLower,
        CheckId::DegreeLowerTight,
        CheckId::Stars222,
        CheckId::ChiEqRhoClique,
        CheckId::NoGapOne,
        CheckId::NoGapTwo,
        CheckId::Conjecture356,
        CheckId::MycAlphaFormula,
        CheckId::MycAlphaSandwich,
        CheckId::MycAlphaSharp,
        CheckId::MycRhoStep,
        CheckId::MycRhoUpper,
        CheckId::MycDiam2Eq,
    ];

    pub fn slug(self) -> &'static str {
        match self {
            CheckId::IndepUpper => "indep-upper",
            CheckId::DegreeLower => "degree-lower",
            CheckId::DegreeLowerTight => "degree-lower-tight",
            CheckId::Stars222 => "stars-222",
            CheckId::ChiEqRhoClique => "chi-eq-rho-clique",
            CheckId::NoGapOne => "no-gap-one",
            CheckId::NoGapTwo => "no-gap-two",
            CheckId::Conjecture356 => "conjecture-356",
            CheckId::MycAlphaFormula => "myc-alpha-formula",
            CheckId::MycAlphaSandwich => "myc-alpha-sandwich",
            CheckId::MycAlphaSharp => "myc-alpha-sharp",
            CheckId::MycRhoStep => "myc-rho-step",
            CheckId::MycRhoUpper => "myc-rho-upper",
            CheckId::MycDiam2Eq => "myc-diam2-eq",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            CheckId::IndepUpper => {
                "packing chromatic number is at most n - alpha + 1, with equality at diameter 2"
            }
            CheckId::DegreeLower => {
                "packing chromatic number is at least max_degree - alpha + 2, with equality \
                 when a vertex dominates"
            }
            CheckId::DegreeLowerTight => {
                "for alpha = 2, the degree lower bound is met exactly for dominated graphs \
                 and the glued two-clique family"
            }
            CheckId::Stars222 => "the graphs with all three invariants equal to 2 are the stars",
            CheckId::ChiEqRhoClique => {
                "chromatic = packing chromatic >= 3 forces clique = chromatic"
            }
            CheckId::NoGapOne => {
                "no triangle-free graph with chromatic number k >= 4 has packing chromatic \
                 number k + 1"
            }
            CheckId::NoGapTwo => {
                "no triangle-free graph with chromatic number k >= 4 has packing chromatic \
                 number k + 2"
            }
            CheckId::Conjecture356 => "no graph has invariants (3, 5, 6)",
            CheckId::MycAlphaFormula => {
                "independence number of the Mycielskian equals the neighbourhood-excess maximum"
            }
            CheckId::MycAlphaSandwich => {
                "independence number of the Mycielskian lies between 2*alpha and n + alpha - 1"
            }
            CheckId::MycAlphaSharp => {
                "for non-complete non-stars the Mycielskian independence number is at most \
                 n + alpha - 2"
            }
            CheckId::MycRhoStep => {
                "the Mycielskian raises the packing chromatic number by at least 2, exactly 2 \
                 on complete graphs"
            }
            CheckId::MycRhoUpper => {
                "packing chromatic number of the Mycielskian is at most min(n + 2, 2(n - alpha + 1))"
            }
            CheckId::MycDiam2Eq => {
                "at diameter 2 the Mycielskian's packing chromatic number is 2n - alpha(M) + 2"
            }
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown check id {0:?}")]
pub struct UnknownCheck(pub String);

impl FromStr for CheckId {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.slug() == s)
            .ok_or_else(|| UnknownCheck(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Holds,
    Violates,
    NotApplicable,
    Skipped,
}

/// Per-graph facts shared by the checks; the budgeted ones are
/// computed at most once.
struct Facts<'a> {
    g: &'a Graph,
    budget: Budget,
    n: usize,
    connected: bool,
    alpha: usize,
    chi: usize,
    omega: usize,
    max_degree: usize,
    diameter: Option<u32>,
    complete: bool,
    star: bool,
    chi_rho: OnceCell<Result<usize, BudgetExceeded>>,
    myc: OnceCell<Graph>,
    alpha_myc: OnceCell<usize>,
    chi_rho_myc: OnceCell<Result<usize, BudgetExceeded>>,
}

impl<'a> Facts<'a> {
    fn new(g: &'a Graph, budget: Budget) -> Self {
        let connected = g.is_connected();
        Facts {
            g,
            budget,
            n: g.n(),
            connected,
            alpha: independence_number(g),
            chi: chromatic_number(g),
            omega: clique_number(g),
            max_degree: g.max_degree(),
            diameter: connected.then(|| distances(g).diameter()),
            complete: g.is_complete(),
            star: g.is_star(),
            chi_rho: OnceCell::new(),
            myc: OnceCell::new(),
            alpha_myc: OnceCell::new(),
            chi_rho_myc: OnceCell::new(),
        }
    }

    fn chi_rho(&self) -> Result<usize, BudgetExceeded> {
        *self
            .chi_rho
            .get_or_init(|| packing_chromatic_number(self.g, self.budget).map(|(k, _)| k))
    }

    fn myc(&self) -> &Graph {
        self.myc.get_or_init(|| mycielskian(self.g).graph)
    }

    fn alpha_myc(&self) -> usize {
        *self
            .alpha_myc
            .get_or_init(|| independence_number(self.myc()))
    }

    fn chi_rho_myc(&self) -> Result<usize, BudgetExceeded> {
        *self
            .chi_rho_myc
            .get_or_init(|| packing_chromatic_number(self.myc(), self.budget).map(|(k, _)| k))
    }
}

const TWO_CLIQUE_MAX_N: usize = 9;

fn eval_check(f: &Facts, check: CheckId) -> Outcome {
    use Outcome::*;
    if !f.connected {
        return NotApplicable;
    }
    let verdict = |ok: bool| if ok { Holds } else { Violates };
    match check {
        CheckId::IndepUpper => match f.chi_rho() {
            Err(_) => Skipped,
            Ok(rho) => {
                let ub = f.n - f.alpha + 1;
                verdict(rho <= ub && (f.diameter != Some(2) || rho == ub))
            }
        },
        CheckId::DegreeLower => match f.chi_rho() {
            Err(_) => Skipped,
            Ok(rho) => {
                let lb = f.max_degree as i64 - f.alpha as i64 + 2;
                let dominated = f.max_degree == f.n - 1;
                verdict(rho as i64 >= lb && (!dominated || rho as i64 == lb))
            }
        },
        CheckId::DegreeLowerTight => {
            if f.alpha != 2 {
                return NotApplicable;
            }
            if f.n > TWO_CLIQUE_MAX_N {
                return Skipped;
            }
            let rho = match f.chi_rho() {
                Err(_) => return Skipped,
                Ok(rho) => rho,
            };
            let equality = rho == f.max_degree;
            let dominated = f.max_degree == f.n - 1;
            let in_family = crate::families::h_class_members_cached(f.n)
                .iter()
                .any(|h| crate::enumerate::is_isomorphic(f.g, h));
            verdict(equality == (dominated || in_family))
        }
        CheckId::Stars222 => {
            if !f.star && !(f.omega == 2 && f.chi == 2) {
                return NotApplicable;
            }
            match f.chi_rho() {
                Err(_) => Skipped,
                Ok(rho) => {
                    let is_222 = f.omega == 2 && f.chi == 2 && rho == 2;
                    verdict(is_222 == f.star)
                }
            }
        }
        CheckId::ChiEqRhoClique => {
            if f.chi < 3 {
                return NotApplicable;
            }
            match is_s_packing_colorable(f.g, &SPackingSpec::chi_rho(f.chi), f.budget) {
                Err(_) => Skipped,
                Ok(false) => NotApplicable,
                Ok(true) => verdict(f.omega == f.chi),
            }
        }
        CheckId::NoGapOne | CheckId::NoGapTwo => {
            if f.omega != 2 || f.chi < 4 {
                return NotApplicable;
            }
            let gap = if check == CheckId::NoGapOne { 1 } else { 2 };
            match f.chi_rho() {
                Err(_) => Skipped,
                Ok(rho) => verdict(rho != f.chi + gap),
            }
        }
        CheckId::Conjecture356 => {
            if f.omega != 3 || f.chi != 5 {
                return NotApplicable;
            }
            match f.chi_rho() {
                Err(_) => Skipped,
                Ok(rho) => verdict(rho != 6),
            }
        }
        CheckId::MycAlphaFormula => {
            let formula = alpha_mycielskian(f.g).value;
            verdict(formula == f.alpha_myc())
        }
        CheckId::MycAlphaSandwich => {
            if f.n < 2 {
                return NotApplicable;
            }
            let am = f.alpha_myc();
            verdict(2 * f.alpha <= am && am <= f.n + f.alpha - 1)
        }
        CheckId::MycAlphaSharp => {
            if f.n < 2 || f.complete || f.star {
                return NotApplicable;
            }
            verdict(f.alpha_myc() <= f.n + f.alpha - 2)
        }
        CheckId::MycRhoStep => {
            if f.n < 2 {
                return NotApplicable;
            }
            match (f.chi_rho(), f.chi_rho_myc()) {
                (Ok(rho), Ok(rho_m)) => {
                    verdict(rho_m >= rho + 2 && (!f.complete || rho_m == rho + 2))
                }
                _ => Skipped,
            }
        }
        CheckId::MycRhoUpper => {
            if f.n < 2 {
                return NotApplicable;
            }
            match f.chi_rho_myc() {
                Err(_) => Skipped,
                Ok(rho_m) => verdict(rho_m <= (f.n + 2).min(2 * (f.n - f.alpha + 1))),
            }
        }
        CheckId::MycDiam2Eq => {
            if f.diameter != Some(2) {
                return NotApplicable;
            }
            match f.chi_rho_myc() {
                Err(_) => Skipped,
                Ok(rho_m) => verdict(rho_m == 2 * f.n - f.alpha_myc() + 2),
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "VERIFIED_ON_CORPUS")]
    VerifiedOnCorpus,
    #[serde(rename = "VIOLATION_FOUND")]
    ViolationFound,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
    #[serde(rename = "UNDECIDED")]
    Undecided,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: CheckId,
    pub description: &'static str,
    pub status: CheckStatus,
    /// Graphs visited (from `start_index` on).
    pub checked: usize,
    /// Graphs where the statement actually applied.
    pub applicable: usize,
    pub violations: Vec<String>,
    pub skipped: Vec<String>,
    pub last_index: Option<usize>,
}

/// One row of the realizability table: bounds on the least packing
/// chromatic number occurring together with clique number `a` and
/// chromatic number `b`.
#[derive(Debug, Clone, Serialize)]
pub struct MTableRow {
    pub a: usize,
    pub b: usize,
    /// Proven lower bound on the least such value.
    pub lo: usize,
    /// Best known upper bound (a construction, possibly tightened by a
    /// corpus witness).
    pub hi: usize,
    pub exact: bool,
    /// Corpus graph attaining `hi`, if the corpus found one.
    pub witness: Option<String>,
    /// Set when a corpus graph lands below the proven lower bound.
    pub anomaly: bool,
}

/// The table seeded from proven values alone: exact on the diagonal
/// (complete graphs) and one step off it (Mycielskians of complete
/// graphs); two steps off, non-realizability results give the floor
/// and iterated Mycielskians of complete graphs the ceiling.
pub fn seed_m_table() -> Vec<MTableRow> {
    let mut rows = Vec::new();
    for a in 2..=8usize {
        for b in a..=a + 2 {
            let (lo, hi) = if b == a {
                (a, a)
            } else if b == a + 1 {
                (a + 2, a + 2)
            } else if a == 2 {
                (7, 7)
            } else {
                (b + 1, 2 * a + 3)
            };
            rows.push(MTableRow {
                a,
                b,
                lo,
                hi,
                exact: lo == hi,
                witness: None,
                anomaly: false,
            });
        }
    }
    rows
}

fn merge_triple(rows: &mut [MTableRow], triple: Triple, graph6: &str) {
    let c = triple.packing_chromatic;
    for row in rows.iter_mut() {
        if row.a != triple.clique || row.b != triple.chromatic {
            continue;
        }
        if c < row.lo {
            row.anomaly = true;
        }
        if c < row.hi || (c == row.hi && row.witness.is_none()) {
            row.hi = c.min(row.hi);
            row.witness = Some(graph6.to_owned());
        }
        row.exact = !row.anomaly && row.lo == row.hi;
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub checks: Vec<CheckId>,
    pub budget: Budget,
    pub start_index: usize,
    pub with_m_table: bool,
    /// Largest order in the corpus; recorded in the report.
    pub max_n: usize,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub run_id: String,
    pub corpus_digest: String,
    pub corpus_size: usize,
    pub max_n: usize,
    pub budget: u64,
    pub start_index: usize,
    pub seed: Option<u64>,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_table: Option<Vec<MTableRow>>,
    pub undecided: Vec<String>,
}

impl ScanReport {
    pub fn any_violation(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.status == CheckStatus::ViolationFound)
            || self
                .m_table
                .iter()
                .flatten()
                .any(|row| row.anomaly)
    }

    pub fn any_undecided(&self) -> bool {
        !self.undecided.is_empty()
    }
}

/// Digest identifying a corpus: the hash of its graph6 lines.
pub fn corpus_digest(corpus: &[Graph]) -> String {
    let mut hasher = Sha256::new();
    for g in corpus {
        hasher.update(emit_graph6(g).expect("corpus orders fit graph6").as_bytes());
        hasher.update(b"\n");
    }
    format!("sha256:{:x}", hasher.finalize())
}

fn run_id(digest: &str, opts: &ScanOptions) -> String {
    let slugs: Vec<&str> = opts.checks.iter().map(|c| c.slug()).collect();
    let config = format!(
        "{}|{}|{}|{}|{:?}|{}|{}",
        digest,
        opts.max_n,
        opts.budget.limit(),
        opts.start_index,
        opts.seed,
        opts.with_m_table,
        slugs.join(",")
    );
    let mut hasher = Sha256::new();
    hasher.update(config.as_bytes());
    format!("{:x}", hasher.finalize())
}

struct GraphEval {
    graph6: String,
    outcomes: Vec<Outcome>,
    /// Some(None) means the triple was requested but ran out of budget.
    triple: Option<Option<Triple>>,
}

fn evaluate_graph(g: &Graph, opts: &ScanOptions) -> GraphEval {
    let facts = Facts::new(g, opts.budget);
    let outcomes = opts
        .checks
        .iter()
        .map(|&c| eval_check(&facts, c))
        .collect();
    let triple = opts.with_m_table.then(|| {
        facts
            .chi_rho()
            .ok()
            .map(|rho| Triple::new(facts.omega, facts.chi, rho))
    });
    GraphEval {
        graph6: emit_graph6(g).expect("corpus orders fit graph6"),
        outcomes,
        triple,
    }
}

/// Runs the requested checks over the corpus.  The corpus order is the
/// report order, so the result bytes do not depend on the worker
/// count.
pub fn run_scan(corpus: &[Graph], opts: &ScanOptions) -> ScanReport {
    let digest = corpus_digest(corpus);
    let start = opts.start_index.min(corpus.len());
    let evals: Vec<GraphEval> = corpus[start..]
        .par_iter()
        .map(|g| evaluate_graph(g, opts))
        .collect();

    let mut checks = Vec::with_capacity(opts.checks.len());
    for (slot, &check) in opts.checks.iter().enumerate() {
        let mut applicable = 0usize;
        let mut violations = Vec::new();
        let mut skipped = Vec::new();
        for eval in &evals {
            match eval.outcomes[slot] {
                Outcome::Holds => applicable += 1,
                Outcome::Violates => {
                    applicable += 1;
                    violations.push(eval.graph6.clone());
                }
                Outcome::NotApplicable => {}
                Outcome::Skipped => skipped.push(eval.graph6.clone()),
            }
        }
        let status = if !violations.is_empty() {
            CheckStatus::ViolationFound
        } else if !skipped.is_empty() {
            CheckStatus::Undecided
        } else if applicable == 0 {
            CheckStatus::NotApplicable
        } else {
            CheckStatus::VerifiedOnCorpus
        };
        checks.push(CheckReport {
            check,
            description: check.describe(),
            status,
            checked: evals.len(),
            applicable,
            violations,
            skipped,
            last_index: (!evals.is_empty()).then(|| start + evals.len() - 1),
        });
    }

    let m_table = opts.with_m_table.then(|| {
        let mut rows = seed_m_table();
        for eval in &evals {
            if let Some(Some(triple)) = eval.triple {
                merge_triple(&mut rows, triple, &eval.graph6);
            }
        }
        rows
    });

    let mut undecided = Vec::new();
    for eval in &evals {
        let skipped_check = eval.outcomes.iter().any(|&o| o == Outcome::Skipped);
        let skipped_triple = matches!(eval.triple, Some(None));
        if skipped_check || skipped_triple {
            undecided.push(eval.graph6.clone());
        }
    }

    ScanReport {
        run_id: run_id(&digest, opts),
        corpus_digest: digest,
        corpus_size: corpus.len(),
        max_n: opts.max_n,
        budget: opts.budget.limit(),
        start_index: opts.start_index,
        seed: opts.seed,
        checks,
        m_table,
        undecided,
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Restrict candidates to chromatically critical graphs.  A
    /// narrowing heuristic: with it on, absence among the candidates is
    /// not conclusive for the whole corpus.
    pub critical_filter: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::default(),
            critical_filter: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchHit {
    pub index: usize,
    pub graph6: String,
    pub triple: Triple,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub pattern: Triple,
    /// First corpus graph matching the pattern, if any.
    pub found: Option<SearchHit>,
    pub checked: usize,
    pub undecided: Vec<String>,
}

/// Looks for a corpus graph realizing the pattern.  Every graph is
/// decided (no early exit), so the outcome is the same for any worker
/// count.
pub fn search_counterexample(
    pattern: Triple,
    corpus: &[Graph],
    opts: &SearchOptions,
) -> SearchOutcome {
    enum Verdict {
        Match(Triple),
        NoMatch,
        OutOfBudget,
    }
    let verdicts: Vec<Verdict> = corpus
        .par_iter()
        .map(|g| {
            if opts.critical_filter && !is_k_critical(g, pattern.chromatic) {
                return Verdict::NoMatch;
            }
            if clique_number(g) != pattern.clique || chromatic_number(g) != pattern.chromatic {
                return Verdict::NoMatch;
            }
            match packing_chromatic_number(g, opts.budget) {
                Err(_) => Verdict::OutOfBudget,
                Ok((rho, _)) if rho == pattern.packing_chromatic => Verdict::Match(Triple::new(
                    pattern.clique,
                    pattern.chromatic,
                    rho,
                )),
                Ok(_) => Verdict::NoMatch,
            }
        })
        .collect();

    let mut found = None;
    let mut undecided = Vec::new();
    for (index, verdict) in verdicts.iter().enumerate() {
        match verdict {
            Verdict::Match(triple) if found.is_none() => {
                found = Some(SearchHit {
                    index,
                    graph6: emit_graph6(&corpus[index]).expect("corpus orders fit graph6"),
                    triple: *triple,
                });
            }
            Verdict::OutOfBudget => {
                undecided.push(emit_graph6(&corpus[index]).expect("corpus orders fit graph6"));
            }
            _ => {}
        }
    }
    SearchOutcome {
        pattern,
        found,
        checked: corpus.len(),
        undecided,
    }
}
