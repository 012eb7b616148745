//! Bounded verification suites for the product theorems and the prism
//! conjecture search.
//!
//! Each suite walks a finite hypothesis space from the generator (or a cycle
//! or clique family), evaluates the conclusion on every instance and collects
//! violations. Products up to `exact_cap` vertices are decided by full
//! enumeration; larger ones are probed with seeded random maximal independent
//! sets, which can refute well-coveredness but never establish it.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::certificates::Certificate;
use crate::graph::{cartesian_product, prism, GirthValue, Graph, GraphError};
use crate::graphio::{canonical_form, enumerate_connected_graphs, write_graph6, EnumFilter, GraphIoError};
use crate::graphio::{MAX_GENERATOR_ORDER, MAX_GRAPH6_ORDER};
use crate::independence::{
    decide_well_covered, independence_summary_with, is_extendable, isolatable, isolatable_vertices,
    random_maximal_independent_set, Coverage, IndependenceError, SizeGuard,
};
use crate::named::{complete, cycle};
use crate::MAX_ORDER;

/// Number of seeded maximal sets drawn when a product is too large to decide.
pub const SAMPLES: u64 = 1000;
/// Default order up to which products are decided exactly.
pub const DEFAULT_EXACT_CAP: usize = 30;
/// Hard ceiling on `exact_cap`.
pub const MAX_EXACT_CAP: usize = 40;
/// Largest cycle accepted by the cycle-product suite.
pub const MAX_CYCLE_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("UnknownStatement: `{0}` (known: {known})", known = Statement::ids().join(", "))]
    UnknownStatement(String),
    #[error("BoundsTooLarge: {0}")]
    BoundsTooLarge(String),
    #[error(transparent)]
    GraphIo(#[from] GraphIoError),
    #[error(transparent)]
    Independence(#[from] IndependenceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statement {
    /// A well-covered product has a well-covered factor.
    Thm1_1,
    /// In a well-covered graph, extendable means not isolatable.
    Thm2_2,
    /// Girth at least 4 and no isolatable vertex imply well-covered.
    Thm2_4,
    /// Girth-5 factors: only `K2 □ K2` and `C5 □ K2` are well-covered.
    Thm3_1,
    /// Girth-4 factors: a well-covered product has a `K2` factor.
    Cor3_6,
    /// Well-covered with no isolatable vertex gives a well-covered prism.
    Thm3_8,
    /// Girth exactly 4 with no isolatable vertex gives a well-covered prism.
    Cor3_9,
    /// `Cm □ Cn` is well-covered exactly when a factor is `C3`.
    TvCycles,
    /// `Kn □ H` is well-covered with `α = |V(H)|` when `Δ(H) < n`.
    KnProduct,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::Thm1_1,
        Statement::Thm2_2,
        Statement::Thm2_4,
        Statement::Thm3_1,
        Statement::Cor3_6,
        Statement::Thm3_8,
        Statement::Cor3_9,
        Statement::TvCycles,
        Statement::KnProduct,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Thm1_1 => "thm-1.1",
            Statement::Thm2_2 => "thm-2.2",
            Statement::Thm2_4 => "thm-2.4",
            Statement::Thm3_1 => "thm-3.1",
            Statement::Cor3_6 => "cor-3.6",
            Statement::Thm3_8 => "thm-3.8",
            Statement::Cor3_9 => "cor-3.9",
            Statement::TvCycles => "tv-cycles",
            Statement::KnProduct => "kn-product",
        }
    }

    pub fn ids() -> Vec<&'static str> {
        Self::ALL.iter().map(|s| s.id()).collect()
    }

    pub fn description(self) -> &'static str {
        match self {
            Statement::Thm1_1 => "if G □ H is well-covered then G or H is well-covered",
            Statement::Thm2_2 => "in a well-covered graph a vertex is extendable iff it is not isolatable",
            Statement::Thm2_4 => "a graph of girth at least 4 with no isolatable vertex is well-covered",
            Statement::Thm3_1 => {
                "for nontrivial connected G, H of girth at least 5, G □ H is well-covered iff it is K2 □ K2 or C5 □ K2"
            }
            Statement::Cor3_6 => {
                "for nontrivial connected G, H of girth at least 4, a well-covered G □ H has a factor equal to K2"
            }
            Statement::Thm3_8 => "a well-covered graph with no isolatable vertex has a well-covered prism",
            Statement::Cor3_9 => "a graph of girth 4 with no isolatable vertex has a well-covered prism",
            Statement::TvCycles => "Cm □ Cn is well-covered iff min(m, n) = 3",
            Statement::KnProduct => "Kn □ H is well-covered with independence number |V(H)| whenever Δ(H) < n",
        }
    }

    /// Default `(max_factor, max_product)`.
    fn defaults(self) -> (usize, Option<usize>) {
        match self {
            Statement::Thm1_1 => (5, Some(25)),
            Statement::Thm2_2 => (8, None),
            Statement::Thm2_4 | Statement::Thm3_8 | Statement::Cor3_9 => (9, None),
            Statement::Thm3_1 => (7, Some(30)),
            Statement::Cor3_6 => (6, Some(30)),
            Statement::TvCycles => (7, None),
            Statement::KnProduct => (5, Some(25)),
        }
    }

    fn involves_products(self) -> bool {
        !matches!(self, Statement::Thm2_2 | Statement::Thm2_4)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        Self::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| HarnessError::UnknownStatement(s.to_string()))
    }
}

/// Size limits for a suite. Unset orders fall back to per-statement defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_factor: Option<usize>,
    pub max_product: Option<usize>,
    pub exact_cap: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_factor: None,
            max_product: None,
            exact_cap: DEFAULT_EXACT_CAP,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Resolved {
    max_factor: usize,
    max_product: usize,
    exact_cap: usize,
    seed: u64,
}

impl Bounds {
    fn resolve(&self, st: Statement) -> Result<Resolved, HarnessError> {
        let (factor_default, product_default) = st.defaults();
        let max_factor = self.max_factor.unwrap_or(factor_default);
        let factor_limit = if st == Statement::TvCycles {
            MAX_CYCLE_ORDER
        } else {
            MAX_GENERATOR_ORDER
        };
        if max_factor > factor_limit {
            return Err(HarnessError::BoundsTooLarge(format!(
                "{st}: max factor order {max_factor} exceeds {factor_limit}"
            )));
        }
        let max_product = self
            .max_product
            .or(product_default)
            .unwrap_or(max_factor * max_factor);
        if st.involves_products() && max_product > MAX_ORDER {
            return Err(HarnessError::BoundsTooLarge(format!(
                "{st}: max product order {max_product} exceeds {MAX_ORDER}"
            )));
        }
        check_exact_cap(self.exact_cap)?;
        Ok(Resolved {
            max_factor,
            max_product,
            exact_cap: self.exact_cap,
            seed: self.seed,
        })
    }
}

fn check_exact_cap(cap: usize) -> Result<(), HarnessError> {
    if cap > MAX_EXACT_CAP {
        Err(HarnessError::BoundsTooLarge(format!(
            "exact cap {cap} exceeds {MAX_EXACT_CAP}"
        )))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Sampled,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Sampled => "sampled",
        })
    }
}

/// One failing instance. `inputs` holds graph6 lines (or `n:u-v,...` for
/// graphs past the graph6 limit); certificates on products use the labeling
/// `(g, h) -> g * |V(H)| + h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub inputs: Vec<String>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub statement: String,
    pub description: String,
    pub input_space: String,
    pub mode: Mode,
    pub pass: bool,
    pub checked: usize,
    pub exact_checks: usize,
    pub sampled_checks: usize,
    /// Sampled instances whose conclusion could be neither confirmed nor refuted.
    pub inconclusive: usize,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
    pub work_units: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "statement: {}", self.statement)?;
        writeln!(f, "description: {}", self.description)?;
        writeln!(f, "input space: {}", self.input_space)?;
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(
            f,
            "checked: {} (exact {}, sampled {}, inconclusive {})",
            self.checked, self.exact_checks, self.sampled_checks, self.inconclusive
        )?;
        writeln!(f, "work units: {}", self.work_units)?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        writeln!(f, "violations: {}", self.violations.len())?;
        for v in &self.violations {
            write!(f, "  {}: {}", v.inputs.join(" "), v.detail)?;
            if let Some(c) = &v.certificate {
                write!(f, " [{c}]")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "result: {}", if self.pass { "pass" } else { "FAIL" })
    }
}

/// graph6 when it fits, otherwise the inline edge-list token.
pub fn describe(g: &Graph) -> String {
    if g.order() <= MAX_GRAPH6_ORDER {
        write_graph6(g).expect("order is within the graph6 limit")
    } else {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", g.order(), edges.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Verdict {
    WellCovered,
    NotWellCovered(Certificate),
    /// Every sample had the same size.
    SampledConsistent,
}

#[derive(Debug, Clone)]
struct Decision {
    verdict: Verdict,
    exact: bool,
    work: u64,
}

fn decide(g: &Graph, exact_cap: usize, seed: u64) -> Result<Decision, HarnessError> {
    if g.order() <= exact_cap {
        let (coverage, work) = decide_well_covered(g, SizeGuard::Override)?;
        let verdict = match coverage {
            Coverage::WellCovered { .. } => Verdict::WellCovered,
            Coverage::NotWellCovered { larger, smaller } => {
                Verdict::NotWellCovered(Certificate::UnequalMaximalSets { first: larger, second: smaller })
            }
        };
        return Ok(Decision { verdict, exact: true, work });
    }
    let first = random_maximal_independent_set(g, seed);
    for i in 1..SAMPLES {
        let m = random_maximal_independent_set(g, seed.wrapping_add(i));
        if m.len() != first.len() {
            let (first, second) = if m.len() > first.len() { (m, first) } else { (first, m) };
            return Ok(Decision {
                verdict: Verdict::NotWellCovered(Certificate::UnequalMaximalSets { first, second }),
                exact: false,
                work: i + 1,
            });
        }
    }
    Ok(Decision {
        verdict: Verdict::SampledConsistent,
        exact: false,
        work: SAMPLES,
    })
}

#[derive(Debug, Default)]
struct Outcome {
    checked: bool,
    sampled: bool,
    inconclusive: bool,
    work: u64,
    violation: Option<Violation>,
    note: Option<String>,
}

impl Outcome {
    fn skipped() -> Self {
        Self::default()
    }

    fn checked(work: u64) -> Self {
        Self { checked: true, work, ..Self::default() }
    }

    fn from_decision(d: &Decision) -> Self {
        Self {
            checked: true,
            sampled: !d.exact,
            work: d.work,
            ..Self::default()
        }
    }

    fn violate(mut self, inputs: Vec<String>, detail: impl Into<String>, certificate: Option<Certificate>) -> Self {
        self.violation = Some(Violation { inputs, detail: detail.into(), certificate });
        self
    }
}

struct Tally {
    statement: String,
    description: String,
    input_space: String,
    notes: Vec<String>,
}

impl Tally {
    fn finish(self, outcomes: Vec<Outcome>) -> VerificationReport {
        let mut report = VerificationReport {
            statement: self.statement,
            description: self.description,
            input_space: self.input_space,
            mode: Mode::Exact,
            pass: true,
            checked: 0,
            exact_checks: 0,
            sampled_checks: 0,
            inconclusive: 0,
            violations: Vec::new(),
            notes: self.notes,
            work_units: 0,
        };
        for o in outcomes {
            if o.checked {
                report.checked += 1;
                if o.sampled {
                    report.sampled_checks += 1;
                } else {
                    report.exact_checks += 1;
                }
            }
            report.inconclusive += usize::from(o.inconclusive);
            report.work_units += o.work;
            report.violations.extend(o.violation);
            report.notes.extend(o.note);
        }
        if report.sampled_checks > 0 {
            report.mode = Mode::Sampled;
        }
        report.pass = report.violations.is_empty();
        report
    }
}

/// Order-preserving parallel map; the first error wins.
fn run<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Outcome, HarnessError> + Sync + Send,
) -> Result<Vec<Outcome>, HarnessError> {
    items.par_iter().map(f).collect()
}

fn connected_graphs(orders: std::ops::RangeInclusive<usize>, base: &EnumFilter) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate_connected_graphs(&base.with_order(n))?);
    }
    Ok(out)
}

/// Unordered pairs `(i, j)`, `i <= j`, whose product fits in `max_product`.
fn pairs<'a>(factors: &'a [Graph], max_product: usize) -> Vec<(&'a Graph, &'a Graph)> {
    (0..factors.len())
        .flat_map(|i| (i..factors.len()).map(move |j| (i, j)))
        .map(|(i, j)| (&factors[i], &factors[j]))
        .filter(|(g, h)| g.order() * h.order() <= max_product)
        .collect()
}

fn pair_inputs(g: &Graph, h: &Graph) -> Vec<String> {
    vec![format!("G={}", describe(g)), format!("H={}", describe(h))]
}

fn exact_well_covered(g: &Graph) -> Result<bool, HarnessError> {
    Ok(decide_well_covered(g, SizeGuard::Override)?.0.is_well_covered())
}

pub fn verify_statement(id: &str, bounds: &Bounds) -> Result<VerificationReport, HarnessError> {
    let st: Statement = id.parse()?;
    let b = bounds.resolve(st)?;
    let tally = |input_space: String, notes: Vec<String>| Tally {
        statement: st.id().to_string(),
        description: st.description().to_string(),
        input_space,
        notes,
    };
    match st {
        Statement::Thm1_1 => thm_1_1(b, tally),
        Statement::Thm2_2 => thm_2_2(b, tally),
        Statement::Thm2_4 => thm_2_4(b, tally),
        Statement::Thm3_1 => thm_3_1(b, tally),
        Statement::Cor3_6 => cor_3_6(b, tally),
        Statement::Thm3_8 => thm_3_8(b, tally),
        Statement::Cor3_9 => cor_3_9(b, tally),
        Statement::TvCycles => tv_cycles(b, tally),
        Statement::KnProduct => kn_product(b, tally),
    }
}

fn caps(b: Resolved) -> String {
    format!("exact up to {} vertices, seed {}", b.exact_cap, b.seed)
}

fn thm_1_1(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let all = connected_graphs(1..=b.max_factor, &EnumFilter::connected(1))?;
    let mut factors = Vec::new();
    for g in all {
        if !exact_well_covered(&g)? {
            factors.push(g);
        }
    }
    let pairs = pairs(&factors, b.max_product);
    let outcomes = run(&pairs, |&(g, h)| {
        let (p, _) = cartesian_product(g, h)?;
        let d = decide(&p, b.exact_cap, b.seed)?;
        let mut o = Outcome::from_decision(&d);
        match d.verdict {
            Verdict::WellCovered => {
                o = o.violate(pair_inputs(g, h), "product is well-covered but neither factor is", None)
            }
            Verdict::SampledConsistent => o.inconclusive = true,
            Verdict::NotWellCovered(_) => {}
        }
        Ok(o)
    })?;
    let space = format!(
        "pairs of connected non-well-covered graphs of order <= {}, product order <= {}; {}",
        b.max_factor,
        b.max_product,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn thm_2_2(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let graphs = connected_graphs(1..=b.max_factor, &EnumFilter::connected(1))?;
    let outcomes = run(&graphs, |g| {
        if !exact_well_covered(g)? {
            return Ok(Outcome::skipped());
        }
        let o = Outcome::checked(g.order() as u64);
        for x in 0..g.order() {
            let extendable = is_extendable(g, x)?;
            let isolator = isolatable(g, x)?;
            if extendable == isolator.is_some() {
                let detail = match isolator {
                    Some(j) => format!("vertex {x} is extendable but isolated by J={j}"),
                    None => format!("vertex {x} is neither extendable nor isolatable"),
                };
                return Ok(o.violate(vec![format!("G={}", describe(g))], detail, None));
            }
        }
        Ok(o)
    })?;
    let space = format!("well-covered connected graphs of order <= {}", b.max_factor);
    Ok(tally(space, vec![]).finish(outcomes))
}

fn thm_2_4(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let graphs = connected_graphs(1..=b.max_factor, &EnumFilter::connected(1).triangle_free())?;
    let outcomes = run(&graphs, |g| {
        if !isolatable_vertices(g)?.is_empty() {
            return Ok(Outcome::skipped());
        }
        let d = decide(g, MAX_ORDER, b.seed)?;
        let o = Outcome::from_decision(&d);
        Ok(match d.verdict {
            Verdict::NotWellCovered(c) => o.violate(
                vec![format!("G={}", describe(g))],
                "no isolatable vertex but not well-covered",
                Some(c),
            ),
            _ => o,
        })
    })?;
    let space = format!(
        "connected graphs of girth >= 4 and order <= {} with no isolatable vertex",
        b.max_factor
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn is_k2(g: &Graph) -> bool {
    g.order() == 2 && g.size() == 1
}

fn is_c5(g: &Graph) -> bool {
    g.order() == 5 && canonical_form(g) == canonical_form(&cycle(5))
}

fn thm_3_1(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let filter = EnumFilter::connected(2).min_girth(GirthValue::Finite(5));
    let factors = connected_graphs(2..=b.max_factor, &filter)?;
    let pairs = pairs(&factors, b.max_product);
    let outcomes = run(&pairs, |&(g, h)| {
        let expected = (is_k2(g) && is_k2(h)) || (is_k2(g) && is_c5(h)) || (is_c5(g) && is_k2(h));
        let (p, _) = cartesian_product(g, h)?;
        let d = decide(&p, b.exact_cap, b.seed)?;
        let mut o = Outcome::from_decision(&d);
        let inputs = pair_inputs(g, h);
        match (d.verdict, expected) {
            (Verdict::WellCovered, true) => {
                o.note = Some(format!("well-covered product: {}", inputs.join(" ")));
            }
            (Verdict::WellCovered, false) => {
                o = o.violate(inputs, "well-covered product other than K2 □ K2 and C5 □ K2", None)
            }
            (Verdict::NotWellCovered(c), true) => {
                o = o.violate(inputs, "expected a well-covered product", Some(c))
            }
            (Verdict::NotWellCovered(_), false) => {}
            (Verdict::SampledConsistent, _) => o.inconclusive = !expected,
        }
        Ok(o)
    })?;
    let space = format!(
        "pairs of connected graphs of girth >= 5 with order 2..={}, product order <= {}; {}; bounded range only",
        b.max_factor,
        b.max_product,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn cor_3_6(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let factors = connected_graphs(2..=b.max_factor, &EnumFilter::connected(2).triangle_free())?;
    let pairs = pairs(&factors, b.max_product);
    let outcomes = run(&pairs, |&(g, h)| {
        if is_k2(g) || is_k2(h) {
            return Ok(Outcome::checked(0));
        }
        let (p, _) = cartesian_product(g, h)?;
        let d = decide(&p, b.exact_cap, b.seed)?;
        let mut o = Outcome::from_decision(&d);
        match d.verdict {
            Verdict::WellCovered => {
                o = o.violate(pair_inputs(g, h), "well-covered product with no K2 factor", None)
            }
            Verdict::SampledConsistent => o.inconclusive = true,
            Verdict::NotWellCovered(_) => {}
        }
        Ok(o)
    })?;
    let space = format!(
        "pairs of connected graphs of girth >= 4 with order 2..={}, product order <= {}; {}",
        b.max_factor,
        b.max_product,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn prism_check(g: &Graph, b: Resolved) -> Result<Outcome, HarnessError> {
    let (p, _) = prism(g)?;
    let d = decide(&p, b.exact_cap, b.seed)?;
    let o = Outcome::from_decision(&d);
    Ok(match d.verdict {
        Verdict::NotWellCovered(c) => {
            o.violate(vec![format!("G={}", describe(g))], "prism is not well-covered", Some(c))
        }
        Verdict::SampledConsistent | Verdict::WellCovered => o,
    })
}

fn thm_3_8(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let graphs = connected_graphs(1..=b.max_factor, &EnumFilter::connected(1))?;
    let outcomes = run(&graphs, |g| {
        if !exact_well_covered(g)? || !isolatable_vertices(g)?.is_empty() {
            return Ok(Outcome::skipped());
        }
        prism_check(g, b)
    })?;
    let space = format!(
        "well-covered connected graphs of order <= {} with no isolatable vertex; {}",
        b.max_factor,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn cor_3_9(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let filter = EnumFilter::connected(4).triangle_free().containing_c4();
    let graphs = connected_graphs(4..=b.max_factor.max(3), &filter)?;
    let outcomes = run(&graphs, |g| {
        if !isolatable_vertices(g)?.is_empty() {
            return Ok(Outcome::skipped());
        }
        prism_check(g, b)
    })?;
    let space = format!(
        "connected graphs of girth 4 and order <= {} with no isolatable vertex; {}",
        b.max_factor,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn tv_cycles(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let pairs: Vec<(usize, usize)> = (3..=b.max_factor)
        .flat_map(|m| (m..=b.max_factor).map(move |n| (m, n)))
        .filter(|&(m, n)| m * n <= b.max_product)
        .collect();
    let outcomes = run(&pairs, |&(m, n)| {
        let (p, _) = cartesian_product(&cycle(m), &cycle(n))?;
        let expected = m == 3;
        let d = decide(&p, b.exact_cap, b.seed)?;
        let mut o = Outcome::from_decision(&d);
        let inputs = vec![format!("G=cycle:{m}"), format!("H=cycle:{n}")];
        match (d.verdict, expected) {
            (Verdict::WellCovered, false) => o = o.violate(inputs, "product is well-covered", None),
            (Verdict::NotWellCovered(c), true) => o = o.violate(inputs, "product is not well-covered", Some(c)),
            (Verdict::SampledConsistent, false) => o.inconclusive = true,
            _ => {}
        }
        Ok(o)
    })?;
    let space = format!(
        "Cm □ Cn with 3 <= m <= n <= {}, product order <= {}; {}",
        b.max_factor,
        b.max_product,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

fn kn_product(b: Resolved, tally: impl Fn(String, Vec<String>) -> Tally) -> Result<VerificationReport, HarnessError> {
    let partners = connected_graphs(1..=b.max_factor, &EnumFilter::connected(1))?;
    let cases: Vec<(usize, &Graph)> = (3..=b.max_factor)
        .flat_map(|n| partners.iter().map(move |h| (n, h)))
        .filter(|&(n, h)| h.max_degree() < n && n * h.order() <= b.max_product)
        .collect();
    let outcomes = run(&cases, |&(n, h)| {
        let (p, _) = cartesian_product(&complete(n), h)?;
        let inputs = vec![format!("G=complete:{n}"), format!("H={}", describe(h))];
        if p.order() <= b.exact_cap {
            let s = independence_summary_with(&p, SizeGuard::Override)?;
            let o = Outcome::checked(s.sets_examined);
            if !s.well_covered || s.alpha != h.order() {
                let certificate = s
                    .witness
                    .map(|(first, second)| Certificate::UnequalMaximalSets { first, second });
                let detail = format!("alpha = {}, i = {}, expected both {}", s.alpha, s.idom, h.order());
                return Ok(o.violate(inputs, detail, certificate));
            }
            return Ok(o);
        }
        let d = decide(&p, b.exact_cap, b.seed)?;
        let o = Outcome::from_decision(&d);
        let sampled = random_maximal_independent_set(&p, b.seed).len();
        Ok(match d.verdict {
            Verdict::NotWellCovered(c) => o.violate(inputs, "product is not well-covered", Some(c)),
            _ if sampled != h.order() => o.violate(
                inputs,
                format!("sampled maximal sets have size {sampled}, expected {}", h.order()),
                None,
            ),
            _ => o,
        })
    })?;
    let space = format!(
        "Kn □ H for 3 <= n <= {}, connected H of order <= {} with max degree < n, product order <= {}; {}",
        b.max_factor,
        b.max_factor,
        b.max_product,
        caps(b)
    );
    Ok(tally(space, vec![]).finish(outcomes))
}

/// Graphs for [`conjecture_search`].
#[derive(Debug, Clone)]
pub enum ConjectureSource {
    /// Every connected triangle-free graph with a 4-cycle in the order range.
    Builtin { min_order: usize, max_order: usize },
    /// Arbitrary graphs; those outside the hypothesis are skipped.
    Graphs(Vec<Graph>),
}

/// Looks for a connected triangle-free `G` containing a 4-cycle that has an
/// isolatable vertex and a well-covered prism. Each counterexample is a
/// violation carrying an isolating set; prisms above `exact_cap` vertices are
/// left inconclusive when sampling finds no deviation.
pub fn conjecture_search(
    source: &ConjectureSource,
    exact_cap: usize,
    seed: u64,
) -> Result<VerificationReport, HarnessError> {
    check_exact_cap(exact_cap)?;
    let filter = EnumFilter::connected(0).triangle_free().containing_c4();
    let (graphs, space, skipped) = match source {
        ConjectureSource::Builtin { min_order, max_order } => {
            if *max_order > MAX_GENERATOR_ORDER {
                return Err(HarnessError::BoundsTooLarge(format!(
                    "conjecture: order {max_order} exceeds the generator limit {MAX_GENERATOR_ORDER}; supply a graph6 stream"
                )));
            }
            let graphs = connected_graphs(*min_order..=*max_order, &filter)?;
            let space = format!("connected triangle-free graphs with a 4-cycle, orders {min_order}..={max_order}");
            (graphs, space, 0)
        }
        ConjectureSource::Graphs(all) => {
            let kept: Vec<Graph> = all
                .iter()
                .filter(|g| filter.with_order(g.order()).accepts(g))
                .cloned()
                .collect();
            let skipped = all.len() - kept.len();
            (kept, format!("{} supplied graphs", all.len()), skipped)
        }
    };
    let outcomes = run(&graphs, |g| {
        let isolatable_set = isolatable_vertices(g)?;
        let Some(x) = isolatable_set.first() else {
            return Ok(Outcome::checked(g.order() as u64));
        };
        let (p, _) = prism(g)?;
        if p.order() > MAX_ORDER {
            return Err(HarnessError::BoundsTooLarge(format!("prism of order {}", p.order())));
        }
        let d = decide(&p, exact_cap, seed)?;
        let mut o = Outcome::from_decision(&d);
        match d.verdict {
            Verdict::WellCovered => {
                let j = isolatable(g, x)?.expect("x was reported isolatable");
                let detail = format!(
                    "counterexample: vertex {x} is isolated by J={j} and the prism is well-covered (isolatable vertices {isolatable_set})"
                );
                o = o.violate(vec![format!("G={}", describe(g))], detail, None);
            }
            Verdict::SampledConsistent => {
                o.inconclusive = true;
                o.note = Some(format!(
                    "unresolved: G={} has isolatable vertices {isolatable_set}; prism too large to decide exactly",
                    describe(g)
                ));
            }
            Verdict::NotWellCovered(_) => {}
        }
        Ok(o)
    })?;
    let mut notes = Vec::new();
    if skipped > 0 {
        notes.push(format!(
            "skipped {skipped} graphs outside the hypothesis (connected, triangle-free, containing a 4-cycle)"
        ));
    }
    let tally = Tally {
        statement: "conjecture".to_string(),
        description: "a connected triangle-free graph with a 4-cycle and a well-covered prism has no isolatable vertex"
            .to_string(),
        input_space: format!("{space}; exact up to {exact_cap} vertices, seed {seed}"),
        notes,
    };
    Ok(tally.finish(outcomes))
}
