//! Executable checks of the extension, realization and fixed-point results on
//! concrete instances.
//!
//! Every check is hypothesis-gated: a [`TheoremReport`] separates "the input
//! does not satisfy the hypotheses" from "a conclusion failed".

mod extension;
mod fixed_points;
pub mod instances;
mod realize;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use extension::{build_extension_action, check_multiplicative, extend, verify_isotropy_iso, ExtensionAction};
pub use fixed_points::{aspherical_certificate, verify_corollary, verify_fixed_point_cohomology, verify_smith_instance};
pub use realize::{realize_extension, Realization, MAX_ACTING_ORDER, MAX_PRODUCT_SIMPLICES};

use crate::covering::{build_cover, lift_action, verify_rb_lemmas};
use crate::error::{Error, Result};
use crate::pi_one::QuotientMap;
use crate::report::Report;
use crate::sset::{SSetPresentation, SimplicialAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremKind {
    /// Extension of the deck action to `Q ⋊ G` and isotropy isomorphisms.
    Thm42,
    /// Realization of a split extension.
    Thm43,
    Smith,
    /// Cohomology of the fixed set of a `p`-group action.
    Thm52,
    /// Trivial action on `π₁` forces a trivial action.
    Cor54,
    /// Effective actions have injective abstract kernels.
    Borel,
}

impl TheoremKind {
    pub const ALL: [TheoremKind; 6] = [Self::Thm42, Self::Thm43, Self::Smith, Self::Thm52, Self::Cor54, Self::Borel];

    pub fn name(self) -> &'static str {
        match self {
            Self::Thm42 => "thm42",
            Self::Thm43 => "thm43",
            Self::Smith => "smith",
            Self::Thm52 => "thm52",
            Self::Cor54 => "cor54",
            Self::Borel => "borel",
        }
    }
}

impl fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidIndex(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Pass,
    ConclusionFailed,
    HypothesisFailed,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::ConclusionFailed => "conclusion_failed",
            Self::HypothesisFailed => "hypothesis_failed",
        }
    }

    /// 0, 1 or 2.
    pub fn exit_code(self) -> i32 {
        match self {
            Self::Pass => 0,
            Self::ConclusionFailed => 1,
            Self::HypothesisFailed => 2,
        }
    }

    /// Any conclusion failure dominates, then any hypothesis failure.
    pub fn combine(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        let all: Vec<Outcome> = outcomes.into_iter().collect();
        if all.contains(&Self::ConclusionFailed) {
            Self::ConclusionFailed
        } else if all.contains(&Self::HypothesisFailed) {
            Self::HypothesisFailed
        } else {
            Self::Pass
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Outcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Self::Pass, Self::ConclusionFailed, Self::HypothesisFailed]
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::InvalidIndex(format!("unknown outcome `{s}`")))
    }
}

/// A complex with a group action, an optional quotient of its fundamental
/// group, and the checks to run on it.
#[derive(Clone, Debug)]
pub struct TheoremCase {
    pub name: String,
    pub complex: SSetPresentation,
    pub quotient: Option<QuotientMap>,
    pub action: SimplicialAction,
    pub p: Option<u64>,
    pub truncation: usize,
    pub check_depth: usize,
    pub theorems: Vec<TheoremKind>,
    pub expected: BTreeMap<TheoremKind, Outcome>,
}

impl TheoremCase {
    /// Truncates `complex` and `action` at `truncation`, which must satisfy
    /// `check_depth + 1 <= truncation <= complex.max_dim()`.
    pub fn new(
        name: impl Into<String>,
        complex: &SSetPresentation,
        quotient: Option<QuotientMap>,
        action: &SimplicialAction,
        truncation: usize,
        check_depth: usize,
    ) -> Result<Self> {
        if check_depth + 1 > truncation {
            return Err(Error::InvalidIndex(format!("check depth {check_depth} needs truncation at least {}", check_depth + 1)));
        }
        if quotient.is_some() && truncation < 2 {
            return Err(Error::InvalidIndex("a quotient map needs truncation at least 2".into()));
        }
        Ok(TheoremCase {
            name: name.into(),
            complex: complex.truncated(truncation)?,
            quotient,
            action: action.truncated(truncation),
            p: None,
            truncation,
            check_depth,
            theorems: Vec::new(),
            expected: BTreeMap::new(),
        })
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_theorems(mut self, theorems: &[TheoremKind]) -> Self {
        self.theorems = theorems.to_vec();
        self
    }

    pub fn expecting(mut self, theorem: TheoremKind, outcome: Outcome) -> Self {
        self.expected.insert(theorem, outcome);
        self
    }

    pub(crate) fn require_quotient(&self) -> Result<&QuotientMap> {
        self.quotient
            .as_ref()
            .ok_or_else(|| Error::InvalidIndex(format!("case `{}` has no quotient map", self.name)))
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem: TheoremKind,
    pub case: String,
    pub outcome: Outcome,
    pub hypotheses: Vec<Report>,
    pub conclusions: Vec<Report>,
    pub tables: Vec<String>,
}

impl TheoremReport {
    /// Conclusions are only evaluated when every hypothesis holds.
    pub(crate) fn gated(theorem: TheoremKind, case: &TheoremCase, hypotheses: Vec<Report>, conclude: impl FnOnce(&mut TheoremReport) -> Result<()>) -> Result<Self> {
        let mut report = TheoremReport {
            theorem,
            case: case.name.clone(),
            outcome: Outcome::Pass,
            hypotheses,
            conclusions: Vec::new(),
            tables: Vec::new(),
        };
        if report.hypotheses.iter().any(|h| !h.passed()) {
            report.outcome = Outcome::HypothesisFailed;
            return Ok(report);
        }
        conclude(&mut report)?;
        if report.conclusions.iter().any(|c| !c.passed()) {
            report.outcome = Outcome::ConclusionFailed;
        }
        Ok(report)
    }

    /// `Err(HypothesisFailed)` when the hypothesis gate closed.
    pub fn into_result(self) -> Result<Self> {
        if self.outcome == Outcome::HypothesisFailed {
            let failed: Vec<&str> = self.hypotheses.iter().filter(|h| !h.passed()).map(|h| h.title.as_str()).collect();
            return Err(Error::HypothesisFailed(format!("{} on `{}`: {}", self.theorem, self.case, failed.join("; "))));
        }
        Ok(self)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} on `{}`: {}", self.theorem, self.case, self.outcome)?;
        for h in &self.hypotheses {
            write!(f, "hypothesis: {h}")?;
        }
        for c in &self.conclusions {
            write!(f, "conclusion: {c}")?;
        }
        for t in &self.tables {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

pub fn run_theorem(case: &TheoremCase, kind: TheoremKind) -> Result<TheoremReport> {
    match kind {
        TheoremKind::Thm42 => verify_extension_case(case),
        TheoremKind::Thm43 => verify_realization_case(case),
        TheoremKind::Smith => verify_smith_instance(case),
        TheoremKind::Thm52 => verify_fixed_point_cohomology(case),
        TheoremKind::Cor54 | TheoremKind::Borel => verify_corollary(case, kind),
    }
}

/// Runs every theorem listed in the case.
pub fn run_case(case: &TheoremCase) -> Result<Vec<TheoremReport>> {
    case.theorems.iter().map(|&k| run_theorem(case, k)).collect()
}

fn descent_hypothesis(case: &TheoremCase, q: &QuotientMap) -> Report {
    let mut h = Report::new("the action preserves the kernel of the quotient map");
    let result = build_cover(&case.complex, q).and_then(|c| lift_action(&c, &case.action));
    h.check(result.is_ok(), || result.err().map(|e| e.to_string()).unwrap_or_default());
    h
}

fn verify_extension_case(case: &TheoremCase) -> Result<TheoremReport> {
    let q = case.require_quotient()?;
    TheoremReport::gated(TheoremKind::Thm42, case, vec![descent_hypothesis(case, q)], |r| {
        let c = build_cover(&case.complex, q)?;
        let e = build_extension_action(&c, &case.action)?;
        r.conclusions.push(e.verify(case.check_depth));
        r.conclusions.push(verify_isotropy_iso(&e, case.check_depth));
        r.conclusions.push(verify_rb_lemmas(&c, e.lifted(), case.check_depth));
        Ok(())
    })
}

fn verify_realization_case(case: &TheoremCase) -> Result<TheoremReport> {
    let q = case.require_quotient()?;
    let mut size = Report::new(format!("acting group has order at most {MAX_ACTING_ORDER}"));
    size.check(case.action.group().order() <= MAX_ACTING_ORDER, || format!("order {}", case.action.group().order()));
    TheoremReport::gated(TheoremKind::Thm43, case, vec![descent_hypothesis(case, q), size], |r| {
        let c = build_cover(&case.complex, q)?;
        let lifted = lift_action(&c, &case.action)?;
        let real = realize_extension(case.action.group(), lifted.induced(), &case.complex, q)?;
        r.tables.push(format!(
            "L = {} of order {}; recovered group of order {}; Y: {} vertices, Y/Q: {} vertices",
            real.l.group().name(),
            real.l.order(),
            real.recovered.order(),
            real.y.presentation().generator_count(0),
            real.quotient.generator_count(0)
        ));
        r.conclusions.push(real.report);
        Ok(())
    })
}
