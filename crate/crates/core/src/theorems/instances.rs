//! The standard instances: group actions on nerves through automorphisms,
//! lifted to universal covers, plus the cases and self-test built on them.

use super::{build_extension_action, run_case, ExtensionAction, Outcome, TheoremCase, TheoremKind};
use crate::covering::{build_cover, lift_action, verify_covering, LiftedAction, RegularCover};
use crate::error::Result;
use crate::groups::{Automorphism, FiniteGroup, GroupHom};
use crate::homology::{boundary_matrices, integral_homology, mod_p_cohomology, universal_coefficients_check};
use crate::pi_one::QuotientMap;
use crate::report::Report;
use crate::sset::{check_kan, check_minimal, nerve_of_group, validate, Nerve, SimplicialAction, SimplicialAutomorphism};

/// `G` acting on the nerve of `Q` through `φ: G -> Aut(Q)`, with the
/// universal cover.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub nerve: Nerve,
    pub quotient: QuotientMap,
    pub cover: RegularCover,
    pub action: SimplicialAction,
}

impl Instance {
    pub fn on_nerve(name: impl Into<String>, q: &FiniteGroup, g: &FiniteGroup, phi: &[Automorphism], truncation: usize) -> Result<Self> {
        let nerve = nerve_of_group(q, truncation)?;
        let quotient = QuotientMap::universal_for_nerve(&nerve)?;
        let cover = build_cover(nerve.presentation(), &quotient)?;
        let action = SimplicialAction::on_nerve(&nerve, g, phi)?;
        Ok(Instance {
            name: name.into(),
            nerve,
            quotient,
            cover,
            action,
        })
    }

    /// `Z/2` acting on the nerve of `Z/3` by inversion.
    pub fn inversion_on_z3(truncation: usize) -> Result<Self> {
        let z3 = FiniteGroup::cyclic(3);
        let inv = Automorphism::new(&z3, vec![0, 2, 1])?;
        Self::on_nerve("inversion on N(Z3)", &z3, &FiniteGroup::cyclic(2), &[Automorphism::identity(3), inv], truncation)
    }

    /// `Z/2` acting on the nerve of `Z/2 × Z/2` by swapping the factors.
    pub fn swap_on_klein(truncation: usize) -> Result<Self> {
        let klein = FiniteGroup::named("Z2xZ2")?;
        let swap = Automorphism::new(&klein, vec![0, 2, 1, 3])?;
        Self::on_nerve("swap on N(Z2xZ2)", &klein, &FiniteGroup::cyclic(2), &[Automorphism::identity(4), swap], truncation)
    }

    pub fn trivial_on_nerve(q: &FiniteGroup, g: &FiniteGroup, truncation: usize) -> Result<Self> {
        let phi = vec![Automorphism::identity(q.order()); g.order()];
        Self::on_nerve(format!("trivial {} on N({})", g.name(), q.name()), q, g, &phi, truncation)
    }

    pub fn lifted(&self) -> Result<LiftedAction> {
        lift_action(&self.cover, &self.action)
    }

    pub fn extension_action(&self) -> Result<ExtensionAction> {
        build_extension_action(&self.cover, &self.action)
    }

    pub fn case(&self, theorems: &[TheoremKind], p: Option<u64>, check_depth: usize) -> Result<TheoremCase> {
        let base = self.nerve.presentation();
        let case = TheoremCase::new(self.name.clone(), base, Some(self.quotient.clone()), &self.action, base.max_dim(), check_depth)?
            .with_theorems(theorems);
        Ok(match p {
            Some(p) => case.with_prime(p),
            None => case,
        })
    }
}

/// `Z/2` acting on the universal cover of the nerve of `Z/2` by its deck
/// transformation, given directly as a complex with an action.
pub fn deck_swap_case(truncation: usize) -> Result<TheoremCase> {
    let nerve = nerve_of_group(&FiniteGroup::cyclic(2), truncation)?;
    let cover = build_cover(nerve.presentation(), &QuotientMap::universal_for_nerve(&nerve)?)?;
    let maps = vec![SimplicialAutomorphism::identity(cover.total()), cover.deck(1)];
    let action = SimplicialAction::new(cover.total(), &FiniteGroup::cyclic(2), maps)?;
    Ok(TheoremCase::new("deck swap on the universal cover of N(Z2)", cover.total(), None, &action, truncation, 2)?
        .with_prime(2)
        .with_theorems(&[TheoremKind::Smith])
        .expecting(TheoremKind::Smith, Outcome::HypothesisFailed))
}

/// The cases the self-test runs, each with its expected outcomes.
pub fn standard_cases() -> Result<Vec<TheoremCase>> {
    use Outcome::*;
    use TheoremKind::*;
    let with_expectations = |mut case: TheoremCase, expected: &[(TheoremKind, Outcome)]| {
        for &(k, o) in expected {
            case = case.expecting(k, o);
        }
        case
    };
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    Ok(vec![
        with_expectations(
            Instance::swap_on_klein(4)?.case(&[Thm42, Thm52, Cor54, Borel], Some(2), 2)?,
            &[(Thm42, Pass), (Thm52, Pass), (Cor54, HypothesisFailed), (Borel, Pass)],
        ),
        with_expectations(
            Instance::inversion_on_z3(4)?.case(&[Thm42, Smith, Thm52, Cor54, Borel], Some(2), 2)?,
            &[(Thm42, Pass), (Smith, Pass), (Thm52, Pass), (Cor54, HypothesisFailed), (Borel, Pass)],
        ),
        with_expectations(
            Instance::trivial_on_nerve(&z3, &z2, 4)?.case(&[Thm42, Smith, Thm52, Cor54, Borel], Some(2), 2)?,
            &[(Thm42, Pass), (Smith, Pass), (Thm52, Pass), (Cor54, Pass), (Borel, HypothesisFailed)],
        ),
        with_expectations(Instance::trivial_on_nerve(&z2, &z2, 2)?.case(&[Thm43], None, 1)?, &[(Thm43, Pass)]),
        with_expectations(Instance::inversion_on_z3(2)?.case(&[Thm43], None, 1)?, &[(Thm43, Pass)]),
        deck_swap_case(4)?,
    ])
}

/// Nerves, covers and homology on small groups, then every standard case
/// against its expected outcomes.
pub fn selftest() -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    for g in FiniteGroup::small_groups(6) {
        let nerve = nerve_of_group(&g, 4)?;
        let x = nerve.presentation();
        let mut r = Report::new(format!("nerve of {}", g.name()));
        r.absorb(validate(x));
        r.absorb(check_kan(x, 2)?.report);
        r.absorb(check_minimal(x, 2)?);
        let c = boundary_matrices(x)?;
        let h = integral_homology(&c);
        for p in [2, 3, 5] {
            r.absorb(universal_coefficients_check(&h, &mod_p_cohomology(&c, p)?));
        }
        reports.push(r);
    }
    for (n, m) in [(4, 2), (6, 2)] {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(n), 4)?;
        let q = QuotientMap::for_nerve(&nerve, &GroupHom::reduction(n, m)?)?;
        let c = build_cover(nerve.presentation(), &q)?;
        let mut r = Report::new(format!("cover of N(Z{n}) over Z{m}"));
        r.absorb(validate(c.total()));
        r.absorb(verify_covering(&c, 2)?);
        reports.push(r);
    }
    for case in standard_cases()? {
        let mut r = Report::new(format!("case `{}`", case.name));
        for t in run_case(&case)? {
            let expected = case.expected.get(&t.theorem).copied().unwrap_or(Outcome::Pass);
            r.check(t.outcome == expected, || format!("{}: {} but expected {}", t.theorem, t.outcome, expected));
        }
        reports.push(r);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_cases_meet_expectations() {
        for case in standard_cases().unwrap() {
            for t in run_case(&case).unwrap() {
                let expected = case.expected.get(&t.theorem).copied().unwrap_or(Outcome::Pass);
                assert_eq!(t.outcome, expected, "{t}");
            }
        }
    }
}
