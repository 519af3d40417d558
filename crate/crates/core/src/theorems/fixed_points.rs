use super::{TheoremCase, TheoremKind, TheoremReport};
use crate::covering::{build_cover, fixed_data, lift_action, LiftedAction, RegularCover};
use crate::error::Result;
use crate::groups::FiniteGroup;
use crate::homology::{boundary_matrices, group_cohomology, integral_homology, is_prime, mod_p_cohomology, ModPCohomology};
use crate::operator::{GenRef, SimplexRef};
use crate::report::Report;
use crate::sset::{check_minimal, SSetPresentation, SimplicialAction};

fn prime_hypothesis(case: &TheoremCase) -> (Report, u64) {
    let mut h = Report::new("p is prime");
    match case.p {
        Some(p) => {
            h.check(is_prime(p), || format!("{p} is not prime"));
            (h, p)
        }
        None => {
            h.violate("no prime given");
            (h, 0)
        }
    }
}

fn p_group_hypothesis(group: &FiniteGroup, p: u64) -> Report {
    let mut h = Report::new(format!("{} is a {p}-group", group.name()));
    h.check(p > 0 && group.is_p_group(p as usize), || format!("order {}", group.order()));
    h
}

fn reduced_hypothesis(k: &SSetPresentation) -> Report {
    let mut h = Report::new(format!("`{}` has one vertex", k.name()));
    h.check(k.is_reduced(), || format!("{} vertices", k.generator_count(0)));
    h
}

/// Checks that `dims` is `1, 0, 0, ...` in its reliable range.
fn acyclic_mod_p(title: String, m: &ModPCohomology) -> Report {
    let mut r = Report::new(title);
    for (i, &d) in m.reliable_dims().iter().enumerate() {
        let expected = usize::from(i == 0);
        r.check(d == expected, || format!("dim H^{i} = {d}, expected {expected}"));
    }
    r
}

/// Asphericity up to the truncation: the cover along the case's quotient map
/// has `H_i = 0` for `1 <= i <= N-1`.
pub fn aspherical_certificate(k: &SSetPresentation, cover: &RegularCover) -> Result<Report> {
    let mut h = Report::new(format!("`{}` is aspherical (its cover is acyclic in reliable degrees)", k.name()));
    let hom = integral_homology(&boundary_matrices(cover.total())?);
    for i in 1..=hom.reliable_up_to {
        h.check(hom.degrees[i].is_zero(), || format!("H_{i} of the cover is {}", hom.degrees[i]));
    }
    Ok(h)
}

/// The cover and lifted action when the case has a quotient map, with the
/// failure recorded as a hypothesis otherwise.
fn lifted(case: &TheoremCase, hypotheses: &mut Vec<Report>) -> Option<(RegularCover, LiftedAction)> {
    let mut h = Report::new("the action lifts to the cover");
    let result = case
        .require_quotient()
        .and_then(|q| build_cover(&case.complex, q))
        .and_then(|c| lift_action(&c, &case.action).map(|l| (c, l)));
    let ok = h.check(result.is_ok(), || result.as_ref().err().map(ToString::to_string).unwrap_or_default());
    hypotheses.push(h);
    if ok {
        result.ok()
    } else {
        None
    }
}

/// Smith's theorem on one instance. With a quotient map the target is the
/// cover with the lifted action, otherwise the complex itself.
///
/// Hypotheses: `G` is a `p`-group, the target is mod-`p` acyclic in reliable
/// degrees and some vertex is fixed by `G`. A truncation cannot certify
/// finiteness, so the fixed vertex stands in for it.
pub fn verify_smith_instance(case: &TheoremCase) -> Result<TheoremReport> {
    let (ph, p) = prime_hypothesis(case);
    let mut hypotheses = vec![ph, p_group_hypothesis(case.action.group(), p)];
    let (target, action): (SSetPresentation, SimplicialAction) = if case.quotient.is_some() {
        match lifted(case, &mut hypotheses) {
            Some((c, l)) => (c.total().clone(), l.action().clone()),
            None => return TheoremReport::gated(TheoremKind::Smith, case, hypotheses, |_| Ok(())),
        }
    } else {
        (case.complex.clone(), case.action.clone())
    };
    if hypotheses.iter().all(Report::passed) {
        let m = mod_p_cohomology(&boundary_matrices(&target)?, p)?;
        hypotheses.push(acyclic_mod_p(format!("`{}` is mod-{p} acyclic", target.name()), &m));
    }
    let fixed = action.fixed_generators();
    let mut vertex = Report::new("some vertex is fixed by the group");
    vertex.check(!fixed[0].is_empty(), || "every vertex is moved".into());
    hypotheses.push(vertex);
    TheoremReport::gated(TheoremKind::Smith, case, hypotheses, |r| {
        let (fixed_set, _) = target.subcomplex(format!("{}^G", target.name()), &fixed)?;
        let m = mod_p_cohomology(&boundary_matrices(&fixed_set)?, p)?;
        r.tables.push(m.to_string());
        r.conclusions.push(acyclic_mod_p(format!("`{}` is mod-{p} acyclic", fixed_set.name()), &m));
        Ok(())
    })
}

/// Fixed set of a `p`-group acting on an aspherical one-vertex complex:
/// (i) it has one vertex, (ii) its mod-`p` cohomology matches that of `Γ` in
/// every reliable degree, (iii) its edges map onto `Γ`.
pub fn verify_fixed_point_cohomology(case: &TheoremCase) -> Result<TheoremReport> {
    let (ph, p) = prime_hypothesis(case);
    let mut hypotheses = vec![ph, p_group_hypothesis(case.action.group(), p), reduced_hypothesis(&case.complex)];
    if !hypotheses.iter().all(Report::passed) {
        return TheoremReport::gated(TheoremKind::Thm52, case, hypotheses, |_| Ok(()));
    }
    let Some((c, l)) = lifted(case, &mut hypotheses) else {
        return TheoremReport::gated(TheoremKind::Thm52, case, hypotheses, |_| Ok(()));
    };
    hypotheses.push(aspherical_certificate(&case.complex, &c)?);
    TheoremReport::gated(TheoremKind::Thm52, case, hypotheses, |r| {
        let data = fixed_data(&c, &l)?;
        let qg = c.group();
        let mut one_vertex = Report::new("K^G has one vertex");
        one_vertex.check(data.k_g.is_reduced(), || format!("{} vertices", data.k_g.generator_count(0)));
        r.conclusions.push(one_vertex);

        let fixed_dims = mod_p_cohomology(&boundary_matrices(&data.k_g)?, p)?;
        let reliable = fixed_dims.reliable_up_to;
        let (gamma, _) = qg.subgroup(&data.gamma)?;
        let gamma_dims = group_cohomology(&gamma, p, reliable)?;
        let mut table = format!("degree | dim H^i(K^G; F_{p}) | dim H^i(Gamma; F_{p})\n");
        let mut cohomology = Report::new(format!("H^*(K^G; F_{p}) = H^*(Γ; F_{p}) in degrees 0..={reliable}"));
        for i in 0..=reliable {
            table.push_str(&format!("{i:>6} | {:>19} | {:>21}\n", fixed_dims.dims[i], gamma_dims[i]));
            cohomology.check(fixed_dims.dims[i] == gamma_dims[i], || {
                format!("degree {i}: {} vs {}", fixed_dims.dims[i], gamma_dims[i])
            });
        }
        r.tables.push(table.trim_end().to_string());
        r.conclusions.push(cohomology);

        let mut edges = Vec::new();
        for &i in &data.k_g_inclusion[1] {
            edges.push(c.quotient().edge_class(c.base(), &SimplexRef::nondegenerate(GenRef::new(1, i)))?);
        }
        let image = qg.generated_subgroup(&edges);
        let mut image_report = Report::new("image of π₁(K^G) is Γ");
        image_report.check(image == data.gamma, || {
            let names = |v: &[usize]| v.iter().map(|&a| qg.element_name(a).to_string()).collect::<Vec<_>>().join(", ");
            format!("image {{{}}} but Γ = {{{}}}", names(&image), names(&data.gamma))
        });
        r.tables.push(format!(
            "Gamma = {{{}}}",
            data.gamma.iter().map(|&a| qg.element_name(a)).collect::<Vec<_>>().join(", ")
        ));
        r.conclusions.push(image_report);
        Ok(())
    })
}

/// The two corollaries on a minimal aspherical one-vertex complex.
///
/// `cor54` needs a `p`-group with trivial induced action on `Q` and concludes
/// that every generator is fixed. `borel` needs an effective action and
/// concludes that `g ↦ g_*` is injective.
pub fn verify_corollary(case: &TheoremCase, kind: TheoremKind) -> Result<TheoremReport> {
    assert!(matches!(kind, TheoremKind::Cor54 | TheoremKind::Borel));
    let mut hypotheses = vec![reduced_hypothesis(&case.complex)];
    let depth = case.check_depth.min(case.complex.max_dim().saturating_sub(1));
    hypotheses.push(check_minimal(&case.complex, depth)?);
    let Some((c, l)) = lifted(case, &mut hypotheses) else {
        return TheoremReport::gated(kind, case, hypotheses, |_| Ok(()));
    };
    hypotheses.push(aspherical_certificate(&case.complex, &c)?);
    let g = case.action.group();
    if kind == TheoremKind::Cor54 {
        let (ph, p) = prime_hypothesis(case);
        hypotheses.push(ph);
        hypotheses.push(p_group_hypothesis(g, p));
        let mut trivial = Report::new("the induced action on the quotient group is trivial");
        for (x, a) in l.induced().iter().enumerate() {
            trivial.check(a.is_identity(), || format!("{} acts nontrivially", g.element_name(x)));
        }
        hypotheses.push(trivial);
    } else {
        let mut effective = Report::new("the action is effective");
        effective.check(case.action.is_effective(), || "a nonidentity element acts as the identity".into());
        hypotheses.push(effective);
    }
    TheoremReport::gated(kind, case, hypotheses, |r| {
        if kind == TheoremKind::Cor54 {
            let mut everything = Report::new("K^G = K");
            for gen in case.complex.all_generators() {
                everything.check(case.action.fixed_generators()[gen.dim].binary_search(&gen.index).is_ok(), || {
                    format!("`{}` is moved", case.complex.generator_name(gen))
                });
            }
            r.conclusions.push(everything);
        } else {
            let kernel = l.abstract_kernel();
            let mut injective = Report::new("the abstract kernel is injective");
            injective.check(kernel.len() == 1, || format!("kernel has order {}", kernel.len()));
            r.tables.push(format!("kernel of G -> Aut(Q) has order {}", kernel.len()));
            r.conclusions.push(injective);
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::instances::{deck_swap_case, Instance};
    use crate::theorems::Outcome;

    #[test]
    fn smith_on_universal_cover_of_z3() {
        let case = Instance::inversion_on_z3(4).unwrap().case(&[TheoremKind::Smith], Some(2), 2).unwrap();
        let r = verify_smith_instance(&case).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "{r}");
    }

    #[test]
    fn smith_gate_on_free_action() {
        let r = verify_smith_instance(&deck_swap_case(4).unwrap()).unwrap();
        assert_eq!(r.outcome, Outcome::HypothesisFailed, "{r}");
        assert!(r.clone().into_result().is_err());
    }

    #[test]
    fn smith_needs_a_p_group() {
        let case = Instance::inversion_on_z3(3).unwrap().case(&[TheoremKind::Smith], Some(3), 2).unwrap();
        assert_eq!(verify_smith_instance(&case).unwrap().outcome, Outcome::HypothesisFailed);
    }

    #[test]
    fn fixed_point_cohomology_instances() {
        for inst in [Instance::swap_on_klein(4).unwrap(), Instance::inversion_on_z3(4).unwrap()] {
            let case = inst.case(&[TheoremKind::Thm52], Some(2), 2).unwrap();
            let r = verify_fixed_point_cohomology(&case).unwrap();
            assert_eq!(r.outcome, Outcome::Pass, "{r}");
        }
    }

    #[test]
    fn fixed_point_cohomology_of_trivial_action() {
        let inst = Instance::trivial_on_nerve(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2), 4).unwrap();
        let r = verify_fixed_point_cohomology(&inst.case(&[TheoremKind::Thm52], Some(2), 2).unwrap()).unwrap();
        assert_eq!(r.outcome, Outcome::Pass, "{r}");
        assert!(r.tables[1].contains("0, 1"));
    }

    #[test]
    fn corollaries() {
        let trivial = Instance::trivial_on_nerve(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(2), 4).unwrap();
        let case = trivial.case(&[TheoremKind::Cor54, TheoremKind::Borel], Some(2), 2).unwrap();
        assert_eq!(verify_corollary(&case, TheoremKind::Cor54).unwrap().outcome, Outcome::Pass);
        assert_eq!(verify_corollary(&case, TheoremKind::Borel).unwrap().outcome, Outcome::HypothesisFailed);
        for inst in [Instance::inversion_on_z3(4).unwrap(), Instance::swap_on_klein(4).unwrap()] {
            let case = inst.case(&[TheoremKind::Borel], Some(2), 2).unwrap();
            assert_eq!(verify_corollary(&case, TheoremKind::Borel).unwrap().outcome, Outcome::Pass);
            assert_eq!(verify_corollary(&case, TheoremKind::Cor54).unwrap().outcome, Outcome::HypothesisFailed);
        }
    }
}
