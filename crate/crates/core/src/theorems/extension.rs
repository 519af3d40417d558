use crate::covering::{crossed_hom_at, lift_action, LiftedAction, RegularCover};
use crate::error::{Error, Result};
use crate::groups::{build_semidirect, FiniteGroup, SemidirectProduct};
use crate::operator::SimplexRef;
use crate::report::Report;
use crate::sset::{SimplicialAction, SimplicialAutomorphism};

/// Extends homomorphisms `h: N -> Aut(X)` and `t: G -> Aut(X)` to
/// `H(n, x) = h(n) ∘ t(x)` on `L = N ⋊ G`, after checking the glue condition
/// `t(x) ∘ h(n) = h(φ(x)(n)) ∘ t(x)` for every pair.
///
/// The result is indexed like the elements of `l`.
pub fn extend(l: &SemidirectProduct, h: &[SimplicialAutomorphism], t: &[SimplicialAutomorphism]) -> Result<Vec<SimplicialAutomorphism>> {
    let (normal, acting) = (l.normal(), l.acting());
    for x in 0..acting.order() {
        for n in 0..normal.order() {
            let twisted = l.phi()[x].apply(n);
            if t[x].compose(&h[n]) != h[twisted].compose(&t[x]) {
                return Err(Error::GlueFailure(format!(
                    "T({}) h({}) != h({}) T({})",
                    acting.element_name(x),
                    normal.element_name(n),
                    normal.element_name(twisted),
                    acting.element_name(x)
                )));
            }
        }
    }
    Ok((0..l.order())
        .map(|i| {
            let (n, x) = l.pair(i);
            h[n].compose(&t[x])
        })
        .collect())
}

/// Checks `maps[ab] = maps[a] ∘ maps[b]` for all pairs.
pub fn check_multiplicative(group: &FiniteGroup, maps: &[SimplicialAutomorphism]) -> Report {
    let mut report = Report::new(format!("multiplicativity over {}", group.name()));
    for a in 0..group.order() {
        for b in 0..group.order() {
            report.check(maps[group.mul(a, b)] == maps[a].compose(&maps[b]), || {
                format!("Ψ({}{}) != Ψ({})Ψ({})", group.element_name(a), group.element_name(b), group.element_name(a), group.element_name(b))
            });
        }
    }
    report
}

/// The action of `L = Q ⋊ G` on a regular cover extending the deck action
/// of `Q` and a lifted action of `G`:
///
/// ```text
/// ψ(n)(b) = b·n⁻¹        Ψ(n, x) = ψ(n) ∘ T(x)
/// ```
#[derive(Clone, Debug)]
pub struct ExtensionAction {
    cover: RegularCover,
    lifted: LiftedAction,
    l: SemidirectProduct,
    psi: Vec<SimplicialAutomorphism>,
}

pub fn build_extension_action(c: &RegularCover, a: &SimplicialAction) -> Result<ExtensionAction> {
    let lifted = lift_action(c, a)?;
    let q = c.group();
    let l = build_semidirect(q, lifted.group(), lifted.induced())?;
    let h: Vec<SimplicialAutomorphism> = (0..q.order()).map(|n| c.deck(q.inv(n))).collect();
    let psi = extend(&l, &h, lifted.action().automorphisms())?;
    Ok(ExtensionAction {
        cover: c.clone(),
        lifted,
        l,
        psi,
    })
}

impl ExtensionAction {
    pub fn cover(&self) -> &RegularCover {
        &self.cover
    }

    pub fn lifted(&self) -> &LiftedAction {
        &self.lifted
    }

    pub fn semidirect(&self) -> &SemidirectProduct {
        &self.l
    }

    pub fn psi(&self, l: usize) -> &SimplicialAutomorphism {
        &self.psi[l]
    }

    pub fn act(&self, l: usize, b: &SimplexRef) -> SimplexRef {
        self.psi[l].apply(b)
    }

    /// `L_b`, by exhaustive search.
    pub fn stabilizer(&self, b: &SimplexRef) -> Vec<usize> {
        (0..self.l.order()).filter(|&l| self.act(l, b) == *b).collect()
    }

    /// Multiplicativity over all of `L`, then on every simplex up to
    /// `up_to_dim`: the restrictions to `Q` and `G` and equivariance of the
    /// projection, `p(Ψ(ℓ) b) = η(ℓ) p(b)`.
    pub fn verify(&self, up_to_dim: usize) -> Report {
        let c = &self.cover;
        let (q, g) = (c.group(), self.lifted.group());
        let mut report = Report::new(format!("extension action of {} on `{}`", self.l.group().name(), c.total().name()));
        report.absorb(check_multiplicative(self.l.group(), &self.psi));
        for n in 0..=up_to_dim.min(c.total().max_dim()) {
            for b in c.total().enumerate_simplices(n) {
                let name = || c.total().display(&b);
                for a in 0..q.order() {
                    let expected = c.deck_apply(&b, q.inv(a));
                    report.check(self.act(self.l.include_normal(a), &b) == expected, || {
                        format!("Ψ({}) is not the deck action at {}", self.l.group().element_name(self.l.include_normal(a)), name())
                    });
                }
                for x in 0..g.order() {
                    report.check(self.act(self.l.include_acting(x), &b) == self.lifted.action().act(x, &b), || {
                        format!("Ψ({}) is not the lifted action at {}", self.l.group().element_name(self.l.include_acting(x)), name())
                    });
                }
                let pb = c.project(&b);
                for l in 0..self.l.order() {
                    let eta = self.l.projection(l);
                    report.check(c.project(&self.act(l, &b)) == self.lifted.base_action().act(eta, &pb), || {
                        format!("projection is not equivariant for {} at {}", self.l.group().element_name(l), name())
                    });
                }
            }
        }
        report
    }
}

/// For every simplex `b` of the cover up to `up_to_dim`, checks that
/// `f ↦ (r_b(f), f)` maps `G_{p(b)}` isomorphically onto `L_b`.
pub fn verify_isotropy_iso(e: &ExtensionAction, up_to_dim: usize) -> Report {
    let c = &e.cover;
    let l = &e.l;
    let lg = l.group();
    let mut report = Report::new(format!("isotropy isomorphisms on `{}` up to dimension {up_to_dim}", c.total().name()));
    for n in 0..=up_to_dim.min(c.total().max_dim()) {
        for b in c.total().enumerate_simplices(n) {
            let name = || c.total().display(&b);
            let stabilizer = e.stabilizer(&b);
            let base_iso = e.lifted.base_action().isotropy(&c.project(&b));
            let r = crossed_hom_at(c, &e.lifted, &b);
            let image = |f: usize| l.index(r.value(f).expect("r_b is defined on G_p(b)"), f);
            let mut images: Vec<usize> = base_iso.iter().map(|&f| image(f)).collect();
            images.sort_unstable();
            report.check(images == stabilizer, || {
                format!("|G_p(b)| = {}, |L_b| = {} and the correspondence is not onto at {}", base_iso.len(), stabilizer.len(), name())
            });
            let g = e.lifted.group();
            for &f in &base_iso {
                for &h in &base_iso {
                    report.check(lg.mul(image(f), image(h)) == image(g.mul(f, h)), || {
                        format!("correspondence is not multiplicative at {} for {}, {}", name(), g.element_name(f), g.element_name(h))
                    });
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::instances::Instance;

    #[test]
    fn identity_acts_trivially() {
        let inst = Instance::inversion_on_z3(2).unwrap();
        let e = inst.extension_action().unwrap();
        assert!(e.psi(e.semidirect().group().identity()).is_identity());
    }

    #[test]
    fn inversion_values() {
        let inst = Instance::inversion_on_z3(2).unwrap();
        let e = inst.extension_action().unwrap();
        let total = e.cover().total();
        let v = SimplexRef::nondegenerate(total.find("phi@0").unwrap());
        let l = e.semidirect().index(1, 1);
        // ψ(1)(φ, g_*(0)) = (φ, 0·1⁻¹)
        assert_eq!(total.display(&e.act(l, &v)), "phi@2");
        let stab: Vec<String> = e.stabilizer(&v).iter().map(|&l| e.semidirect().group().element_name(l).to_string()).collect();
        assert_eq!(stab, ["(0;0)", "(0;1)"]);
    }

    #[test]
    fn standard_instances_pass() {
        for inst in [Instance::inversion_on_z3(3).unwrap(), Instance::swap_on_klein(3).unwrap()] {
            let e = inst.extension_action().unwrap();
            let r = e.verify(2);
            assert!(r.passed(), "{r}");
            let r = verify_isotropy_iso(&e, 2);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn trivial_group_gives_deck_action() {
        let inst = Instance::trivial_on_nerve(&FiniteGroup::cyclic(3), &FiniteGroup::trivial(), 2).unwrap();
        let e = inst.extension_action().unwrap();
        assert_eq!(e.semidirect().order(), 3);
        let c = e.cover();
        for a in 0..3 {
            assert_eq!(e.psi(a), &c.deck(c.group().inv(a)));
        }
    }

    #[test]
    fn trivial_action_isotropy_is_everything_over_the_vertex() {
        let inst = Instance::trivial_on_nerve(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(2), 2).unwrap();
        let e = inst.extension_action().unwrap();
        for alpha in 0..3 {
            let v = e.cover().lift(&SimplexRef::nondegenerate(crate::operator::GenRef::new(0, 0)), alpha);
            assert_eq!(e.stabilizer(&v).len(), 2);
        }
        assert!(verify_isotropy_iso(&e, 2).passed());
    }

    #[test]
    fn glue_failure_is_detected() {
        let inst = Instance::inversion_on_z3(2).unwrap();
        let e = inst.extension_action().unwrap();
        let c = e.cover();
        let q = c.group();
        let h: Vec<SimplicialAutomorphism> = (0..3).map(|n| c.deck(q.inv(n))).collect();
        // the inversion action paired with the trivial automorphism of Z3
        let wrong = build_semidirect(q, &FiniteGroup::cyclic(2), &vec![crate::groups::Automorphism::identity(3); 2]).unwrap();
        let err = extend(&wrong, &h, e.lifted().action().automorphisms()).unwrap_err();
        assert!(matches!(err, Error::GlueFailure(_)));
    }
}
