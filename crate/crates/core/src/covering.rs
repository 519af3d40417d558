//! The regular cover `K̃_H` of a one-vertex complex along a quotient map
//! `q: π₁ K -> Q`, its deck action, lifted group actions and the data they
//! determine: crossed homomorphisms, fixed subcomplexes and the semidirect
//! action on the cover.
//!
//! Simplices of the cover are pairs `(x, α)` with `α ∈ Q`. Faces are taken in
//! the first coordinate, except that the last face twists the second:
//!
//! ```text
//! ∂_i (x, α) = (∂_i x, α)              i < n
//! ∂_n (x, α) = (∂_n x, e(x)⁻¹ α)       e(x) = q[∂_0^{n-1} x]
//! ```
//!
//! Degeneracies leave `α` alone, so a pair is nondegenerate exactly when `x`
//! is, and the generator `(x, α)` is named `x@α`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::groups::{build_semidirect, graph_of_crossed_hom, Automorphism, CrossedHom, DeckSemidirect, FiniteGroup, SemidirectProduct};
use crate::operator::{GenRef, SimplexRef};
use crate::pi_one::{induced_automorphism, pi1_presentation, QuotientMap};
use crate::report::Report;
use crate::sset::{for_each_horn, horn_key, kan_with_tables, simplex_tables, SSetPresentation, SimplicialAction, SimplicialAutomorphism};

#[derive(Clone, Debug)]
pub struct RegularCover {
    base: SSetPresentation,
    q: QuotientMap,
    total: SSetPresentation,
}

pub fn build_cover(base: &SSetPresentation, q: &QuotientMap) -> Result<RegularCover> {
    let pi = pi1_presentation(base)?;
    if &pi != q.presentation() {
        return Err(Error::InvalidIndex(format!(
            "quotient map was not built from the fundamental group of `{}`",
            base.name()
        )));
    }
    let group = q.group();
    let order = group.order();
    let mut generators = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=base.max_dim() {
        let mut gs = Vec::with_capacity(base.generator_count(n) * order);
        let mut fs = Vec::with_capacity(base.generator_count(n) * order);
        for index in 0..base.generator_count(n) {
            let x = GenRef::new(n, index);
            let xs = SimplexRef::nondegenerate(x);
            let twist = if n == 0 { group.identity() } else { group.inv(q.edge_class(base, &xs)?) };
            for alpha in 0..order {
                gs.push(format!("{}@{}", base.generator_name(x), group.element_name(alpha)));
                let face_list = base
                    .generator_faces(x)
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        let a = if i == n { group.mul(twist, alpha) } else { alpha };
                        let g = f.generator();
                        f.with_generator(GenRef::new(g.dim, g.index * order + a))
                    })
                    .collect();
                fs.push(face_list);
            }
        }
        generators.push(gs);
        faces.push(fs);
    }
    let name = format!("{}~{}", base.name(), group.name());
    let total = SSetPresentation::new(name, base.max_dim(), generators, faces)?;
    Ok(RegularCover {
        base: base.clone(),
        q: q.clone(),
        total,
    })
}

impl RegularCover {
    pub fn base(&self) -> &SSetPresentation {
        &self.base
    }

    pub fn total(&self) -> &SSetPresentation {
        &self.total
    }

    pub fn quotient(&self) -> &QuotientMap {
        &self.q
    }

    pub fn group(&self) -> &FiniteGroup {
        self.q.group()
    }

    /// `(x, α)` of a total generator.
    pub fn pair(&self, g: GenRef) -> (GenRef, usize) {
        let order = self.group().order();
        (GenRef::new(g.dim, g.index / order), g.index % order)
    }

    pub fn lift_generator(&self, x: GenRef, alpha: usize) -> GenRef {
        GenRef::new(x.dim, x.index * self.group().order() + alpha)
    }

    /// The simplex `(x, α)` for any simplex `x` of the base.
    pub fn lift(&self, x: &SimplexRef, alpha: usize) -> SimplexRef {
        x.with_generator(self.lift_generator(x.generator(), alpha))
    }

    pub fn project(&self, b: &SimplexRef) -> SimplexRef {
        b.with_generator(self.pair(b.generator()).0)
    }

    /// The `Q`-coordinate of a simplex.
    pub fn sheet(&self, b: &SimplexRef) -> usize {
        self.pair(b.generator()).1
    }

    /// `b · β = (x, α β)`.
    pub fn deck_apply(&self, b: &SimplexRef, beta: usize) -> SimplexRef {
        let (x, alpha) = self.pair(b.generator());
        b.with_generator(self.lift_generator(x, self.group().mul(alpha, beta)))
    }

    /// Right multiplication by `β` as an automorphism of the total complex.
    pub fn deck(&self, beta: usize) -> SimplicialAutomorphism {
        let maps = (0..=self.total.max_dim())
            .map(|n| {
                (0..self.total.generator_count(n))
                    .map(|i| self.deck_apply(&SimplexRef::nondegenerate(GenRef::new(n, i)), beta).generator().index)
                    .collect()
            })
            .collect();
        SimplicialAutomorphism::new(&self.total, maps).expect("deck transformations are simplicial")
    }
}

/// Checks unique lifting of horns along the projection for horns with faces
/// of dimension `0..=up_to_dim`, and the Kan condition of the total complex.
pub fn verify_covering(c: &RegularCover, up_to_dim: usize) -> Result<Report> {
    let total = c.total();
    if up_to_dim + 1 > total.max_dim() {
        return Err(Error::InvalidIndex(format!(
            "covering check up to {up_to_dim} needs truncation {}",
            up_to_dim + 1
        )));
    }
    let tt = simplex_tables(total, up_to_dim + 1);
    let bt = simplex_tables(c.base(), up_to_dim + 1);
    let mut report = Report::new(format!("covering map `{}` -> `{}` up to dimension {up_to_dim}", total.name(), c.base().name()));
    for n in 0..=up_to_dim {
        let project = |s: usize| bt[n].index[&c.project(&tt[n].simplices[s])];
        let mut total_fillers: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
        let mut base_fillers: HashMap<(usize, Vec<usize>), Vec<usize>> = HashMap::new();
        for k in 0..=n + 1 {
            for (z, fs) in tt[n + 1].faces.iter().enumerate() {
                total_fillers.entry((k, horn_key(fs, k))).or_default().push(z);
            }
            for (y, fs) in bt[n + 1].faces.iter().enumerate() {
                base_fillers.entry((k, horn_key(fs, k))).or_default().push(y);
            }
        }
        for_each_horn(&tt, n, |k, slots| {
            let down: Vec<usize> = slots.iter().map(|&s| if s == usize::MAX { s } else { project(s) }).collect();
            let lifts = total_fillers.get(&(k, slots.to_vec()));
            for &y in base_fillers.get(&(k, down)).map(Vec::as_slice).unwrap_or(&[]) {
                let target = &bt[n + 1].simplices[y];
                let count = lifts
                    .map(|l| l.iter().filter(|&&z| c.project(&tt[n + 1].simplices[z]) == *target).count())
                    .unwrap_or(0);
                report.check(count == 1, || {
                    let names: Vec<String> = slots
                        .iter()
                        .map(|&s| if s == usize::MAX { "_".into() } else { total.display(&tt[n].simplices[s]) })
                        .collect();
                    format!(
                        "horn ({}) missing face {k} has {count} lifts of `{}`",
                        names.join(", "),
                        c.base().display(target)
                    )
                });
            }
        });
    }
    report.absorb(kan_with_tables(total, &tt, up_to_dim).report);
    Ok(report)
}

/// A group action lifted from the base to the cover by
/// `g·(x, α) = (g x, g_*(α))`.
#[derive(Clone, Debug)]
pub struct LiftedAction {
    base_action: SimplicialAction,
    action: SimplicialAction,
    induced: Vec<Automorphism>,
}

pub fn lift_action(c: &RegularCover, a: &SimplicialAction) -> Result<LiftedAction> {
    let group = a.group();
    let q = c.group();
    let induced: Vec<Automorphism> = (0..group.order())
        .map(|g| induced_automorphism(c.base(), a.automorphism(g), c.quotient(), None))
        .collect::<Result<_>>()?;
    let total = c.total();
    let maps = induced
        .iter()
        .enumerate()
        .map(|(g, star)| {
            let m = (0..=total.max_dim())
                .map(|n| {
                    (0..total.generator_count(n))
                        .map(|i| {
                            let (x, alpha) = c.pair(GenRef::new(n, i));
                            c.lift_generator(a.automorphism(g).apply_generator(x), star.apply(alpha)).index
                        })
                        .collect()
                })
                .collect();
            SimplicialAutomorphism::new(total, m)
        })
        .collect::<Result<_>>()?;
    crate::groups::check_action(q, group, &induced)?;
    Ok(LiftedAction {
        base_action: a.clone(),
        action: SimplicialAction::new(total, group, maps)?,
        induced,
    })
}

impl LiftedAction {
    pub fn group(&self) -> &FiniteGroup {
        self.action.group()
    }

    pub fn action(&self) -> &SimplicialAction {
        &self.action
    }

    pub fn base_action(&self) -> &SimplicialAction {
        &self.base_action
    }

    /// `g ↦ g_*`.
    pub fn induced(&self) -> &[Automorphism] {
        &self.induced
    }

    /// `Γ`: elements of `Q` fixed by every `g_*`.
    pub fn gamma(&self) -> Vec<usize> {
        let order = self.induced[0].images().len();
        (0..order).filter(|&a| self.induced.iter().all(|s| s.apply(a) == a)).collect()
    }

    /// `g ↦ g_*` has trivial kernel.
    pub fn abstract_kernel(&self) -> Vec<usize> {
        (0..self.induced.len()).filter(|&g| self.induced[g].is_identity()).collect()
    }
}

/// `r_b` on `G_{p(b)}`: the unique `α` with `g·b = b·α`.
pub fn crossed_hom_at(c: &RegularCover, l: &LiftedAction, b: &SimplexRef) -> CrossedHom {
    let group = l.group();
    let pb = c.project(b);
    let mut values = vec![None; group.order()];
    for g in l.base_action.isotropy(&pb) {
        let gb = l.action.act(g, b);
        let solutions: Vec<usize> = (0..c.group().order()).filter(|&a| c.deck_apply(b, a) == gb).collect();
        assert_eq!(solutions.len(), 1, "deck action is free and transitive on fibres");
        values[g] = Some(solutions[0]);
    }
    CrossedHom::new(values, l.induced.clone())
}

/// Exhaustive check, over all simplices `b` of the cover up to `up_to_dim`,
/// all `α ∈ Q` and all `g, ĝ ∈ G`, of
///
/// * the crossed relation `r_b(g g') = r_b(g) g_*(r_b(g'))` and
///   `ker r_b = G_b`;
/// * `r_{bα}(g) = α⁻¹ r_b(g) g_*(α)`;
/// * `r_{ĝb}(ĝ g ĝ⁻¹) = ĝ_* r_b(g)`;
/// * for the fixed set `E`: `E ∩ Eα ≠ ∅` implies `α ∈ Γ` and `Eα = E`.
pub fn verify_rb_lemmas(c: &RegularCover, l: &LiftedAction, up_to_dim: usize) -> Report {
    let q = c.group();
    let g_group = l.group();
    let mut report = Report::new(format!("crossed homomorphisms on `{}` up to dimension {up_to_dim}", c.total().name()));
    for n in 0..=up_to_dim.min(c.total().max_dim()) {
        for b in c.total().enumerate_simplices(n) {
            let name = || c.total().display(&b);
            let rb = crossed_hom_at(c, l, &b);
            report.check(rb.check_relation(g_group, q).is_ok(), || format!("crossed relation fails at {}", name()));
            let kernel = rb.kernel(q);
            report.check(kernel == l.action.isotropy(&b), || format!("ker r_b != G_b at {}", name()));
            for alpha in 0..q.order() {
                let rba = crossed_hom_at(c, l, &c.deck_apply(&b, alpha));
                for &g in rb.domain() {
                    let expected = q.mul(q.mul(q.inv(alpha), rb.value(g).unwrap()), l.induced[g].apply(alpha));
                    report.check(rba.value(g) == Some(expected), || {
                        format!("r_(bα)(g) at b = {}, α = {}, g = {}", name(), q.element_name(alpha), g_group.element_name(g))
                    });
                }
            }
            for hat in 0..g_group.order() {
                let rgb = crossed_hom_at(c, l, &l.action.act(hat, &b));
                for &g in rb.domain() {
                    let conj = g_group.mul(g_group.mul(hat, g), g_group.inv(hat));
                    let expected = l.induced[hat].apply(rb.value(g).unwrap());
                    report.check(rgb.value(conj) == Some(expected), || {
                        format!(
                            "r_(ĝb)(ĝgĝ⁻¹) at b = {}, ĝ = {}, g = {}",
                            name(),
                            g_group.element_name(hat),
                            g_group.element_name(g)
                        )
                    });
                }
            }
        }
    }
    let gamma = l.gamma();
    let fixed: BTreeSet<GenRef> = l
        .action
        .fixed_generators()
        .iter()
        .enumerate()
        .flat_map(|(n, v)| v.iter().map(move |&i| GenRef::new(n, i)))
        .collect();
    for alpha in 0..q.order() {
        let moved: BTreeSet<GenRef> = fixed.iter().map(|&e| c.deck_apply(&SimplexRef::nondegenerate(e), alpha).generator()).collect();
        if fixed.intersection(&moved).next().is_some() {
            report.check(gamma.contains(&alpha) && moved == fixed, || {
                format!("E meets Eα for α = {} but α ∉ Γ or Eα ≠ E", q.element_name(alpha))
            });
        }
    }
    report
}

/// Fixed subcomplexes of a lifted action and the subgroup `Γ`.
#[derive(Clone, Debug)]
pub struct FixedData {
    /// Fixed subcomplex `E` of the cover.
    pub e: SSetPresentation,
    pub e_inclusion: Vec<Vec<usize>>,
    /// Fixed subcomplex `K^G` of the base.
    pub k_g: SSetPresentation,
    pub k_g_inclusion: Vec<Vec<usize>>,
    pub gamma: Vec<usize>,
    /// `E -> K^G` is onto with fibres the `Γ`-orbits.
    pub orbit_report: Report,
}

pub fn fixed_data(c: &RegularCover, l: &LiftedAction) -> Result<FixedData> {
    let (e, e_inclusion) = c
        .total()
        .subcomplex(format!("{}^G", c.total().name()), &l.action.fixed_generators())?;
    let (k_g, k_g_inclusion) = c
        .base()
        .subcomplex(format!("{}^G", c.base().name()), &l.base_action.fixed_generators())?;
    let gamma = l.gamma();
    let q = c.group();
    let mut orbit_report = Report::new("orbit map E -> K^G");
    let mut sheets: HashMap<GenRef, BTreeSet<usize>> = HashMap::new();
    for (n, inc) in e_inclusion.iter().enumerate() {
        for &i in inc {
            let (x, alpha) = c.pair(GenRef::new(n, i));
            let in_kg = k_g_inclusion[n].binary_search(&x.index).is_ok();
            orbit_report.check(in_kg, || format!("`{}` lies over a non-fixed simplex", c.total().generator_name(GenRef::new(n, i))));
            sheets.entry(x).or_default().insert(alpha);
        }
    }
    for (n, inc) in k_g_inclusion.iter().enumerate() {
        for &i in inc {
            let x = GenRef::new(n, i);
            let found = sheets.get(&x);
            let ok = found.is_some_and(|s| {
                let a0 = *s.iter().next().unwrap();
                let coset: BTreeSet<usize> = gamma.iter().map(|&g| q.mul(a0, g)).collect();
                &coset == s
            });
            orbit_report.check(ok, || format!("fibre over `{}` is not a single Γ-orbit", c.base().generator_name(x)));
        }
    }
    Ok(FixedData {
        e,
        e_inclusion,
        k_g,
        k_g_inclusion,
        gamma,
        orbit_report,
    })
}

/// The right action `b·(g, α) = (g⁻¹ b) α` of `G ⋉ Q` on the cover.
#[derive(Clone, Debug)]
pub struct SemidirectCoverAction {
    deck_group: DeckSemidirect,
    standard: SemidirectProduct,
    maps: Vec<SimplicialAutomorphism>,
}

pub fn semidirect_action_on_cover(c: &RegularCover, l: &LiftedAction) -> Result<SemidirectCoverAction> {
    let g_group = l.group();
    let deck_group = DeckSemidirect::new(g_group, c.group(), &l.induced)?;
    let standard = build_semidirect(c.group(), g_group, &l.induced)?;
    let decks: Vec<SimplicialAutomorphism> = (0..c.group().order()).map(|a| c.deck(a)).collect();
    let maps = (0..deck_group.group().order())
        .map(|idx| {
            let (g, alpha) = deck_group.pair(idx);
            decks[alpha].compose(l.action.automorphism(g_group.inv(g)))
        })
        .collect();
    Ok(SemidirectCoverAction {
        deck_group,
        standard,
        maps,
    })
}

impl SemidirectCoverAction {
    pub fn deck_group(&self) -> &DeckSemidirect {
        &self.deck_group
    }

    pub fn standard(&self) -> &SemidirectProduct {
        &self.standard
    }

    /// `b · ℓ` for `ℓ` indexed in the deck convention.
    pub fn act(&self, b: &SimplexRef, l: usize) -> SimplexRef {
        self.maps[l].apply(b)
    }

    /// The isotropy subgroup at `b`, carried into `Q ⋊ G`.
    pub fn isotropy_standard(&self, b: &SimplexRef) -> Vec<usize> {
        let mut iso: Vec<usize> = (0..self.maps.len())
            .filter(|&l| self.act(b, l) == *b)
            .map(|l| self.deck_group.to_standard(&self.standard, l))
            .collect();
        iso.sort_unstable();
        iso
    }

    /// Checks the right action law and that every isotropy group up to
    /// `up_to_dim` is the graph of the crossed homomorphism there.
    pub fn verify(&self, c: &RegularCover, l: &LiftedAction, up_to_dim: usize) -> Report {
        let dg = self.deck_group.group();
        let mut report = Report::new(format!("semidirect action on `{}`", c.total().name()));
        for a in 0..dg.order() {
            for b in 0..dg.order() {
                report.check(self.maps[dg.mul(a, b)] == self.maps[b].compose(&self.maps[a]), || {
                    format!("(x·{})·{} != x·({}{})", dg.element_name(a), dg.element_name(b), dg.element_name(a), dg.element_name(b))
                });
            }
        }
        for n in 0..=up_to_dim.min(c.total().max_dim()) {
            for b in c.total().enumerate_simplices(n) {
                let graph = graph_of_crossed_hom(&crossed_hom_at(c, l, &b), &self.standard);
                let iso = self.isotropy_standard(&b);
                report.check(graph.as_ref() == Ok(&iso), || format!("isotropy at {} is not the graph of r_b", c.total().display(&b)));
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupHom;
    use crate::sset::{nerve_of_group, validate, Nerve};

    fn z4_over_z2(dim: usize) -> (Nerve, RegularCover) {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(4), dim).unwrap();
        let q = QuotientMap::for_nerve(&nerve, &GroupHom::reduction(4, 2).unwrap()).unwrap();
        let c = build_cover(nerve.presentation(), &q).unwrap();
        (nerve, c)
    }

    fn inversion(dim: usize) -> (Nerve, RegularCover, LiftedAction) {
        let z3 = FiniteGroup::cyclic(3);
        let nerve = nerve_of_group(&z3, dim).unwrap();
        let q = QuotientMap::universal_for_nerve(&nerve).unwrap();
        let c = build_cover(nerve.presentation(), &q).unwrap();
        let inv = Automorphism::new(&z3, vec![0, 2, 1]).unwrap();
        let a = SimplicialAction::on_nerve(&nerve, &FiniteGroup::cyclic(2), &[Automorphism::identity(3), inv]).unwrap();
        let l = lift_action(&c, &a).unwrap();
        (nerve, c, l)
    }

    #[test]
    fn cover_counts_and_validity() {
        let (_, c) = z4_over_z2(3);
        assert_eq!(c.total().generator_count(0), 2);
        assert_eq!(c.total().generator_count(1), 6);
        for n in 0..=3 {
            assert_eq!(c.total().generator_count(n), 2 * c.base().generator_count(n));
        }
        assert!(validate(c.total()).passed());
    }

    #[test]
    fn twisted_last_face() {
        let (_, c) = z4_over_z2(2);
        let b = SimplexRef::nondegenerate(c.total().find("1.1@0").unwrap());
        assert_eq!(c.total().display(&c.total().face(&b, 2).unwrap()), "1@1");
        assert_eq!(c.total().display(&c.total().face(&b, 0).unwrap()), "1@0");
    }

    #[test]
    fn faces_of_degenerate_pairs_follow_the_formula() {
        let (_, c) = z4_over_z2(3);
        let (base, total, q) = (c.base(), c.total(), c.group());
        for n in 1..=3 {
            for x in base.enumerate_simplices(n) {
                let e = c.quotient().edge_class(base, &x).unwrap();
                for alpha in 0..q.order() {
                    let b = c.lift(&x, alpha);
                    for i in 0..=n {
                        let a = if i == n { q.mul(q.inv(e), alpha) } else { alpha };
                        let expected = c.lift(&base.face(&x, i).unwrap(), a);
                        assert_eq!(total.face(&b, i).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_quotient_gives_base() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 3).unwrap();
        let to_one = GroupHom::new(FiniteGroup::cyclic(3), FiniteGroup::trivial(), vec![0, 0, 0]).unwrap();
        let q = QuotientMap::for_nerve(&nerve, &to_one).unwrap();
        let c = build_cover(nerve.presentation(), &q).unwrap();
        for n in 0..=3 {
            assert_eq!(c.total().generator_count(n), nerve.presentation().generator_count(n));
        }
        assert!(verify_covering(&c, 2).unwrap().passed());
    }

    #[test]
    fn covering_checks_pass() {
        let (_, c) = z4_over_z2(3);
        assert!(verify_covering(&c, 1).unwrap().passed());
        let nerve = nerve_of_group(&FiniteGroup::cyclic(2), 3).unwrap();
        let u = build_cover(nerve.presentation(), &QuotientMap::universal_for_nerve(&nerve).unwrap()).unwrap();
        let r = verify_covering(&u, 2).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn lifted_inversion() {
        let (_, c, l) = inversion(2);
        let b = SimplexRef::nondegenerate(c.total().find("1@1").unwrap());
        assert_eq!(c.total().display(&l.action().act(1, &b)), "2@2");
        let v = SimplexRef::nondegenerate(c.total().find("phi@1").unwrap());
        assert_eq!(c.total().display(&l.action().act(1, &v)), "phi@2");
    }

    #[test]
    fn crossed_hom_examples() {
        let (_, c, l) = inversion(2);
        let v1 = SimplexRef::nondegenerate(c.total().find("phi@1").unwrap());
        let r = crossed_hom_at(&c, &l, &v1);
        assert_eq!(r.value(0), Some(0));
        assert_eq!(r.value(1), Some(1));
        let v0 = SimplexRef::nondegenerate(c.total().find("phi@0").unwrap());
        assert_eq!(crossed_hom_at(&c, &l, &v0).value(1), Some(0));
    }

    #[test]
    fn lemmas_hold_for_inversion() {
        let (_, c, l) = inversion(3);
        let r = verify_rb_lemmas(&c, &l, 2);
        assert!(r.passed(), "{r}");
        assert!(r.checked > 0);
    }

    #[test]
    fn fixed_data_for_inversion() {
        let (_, c, l) = inversion(3);
        let f = fixed_data(&c, &l).unwrap();
        assert_eq!(f.gamma, vec![0]);
        assert_eq!(f.k_g.generator_count(0), 1);
        assert!((1..=3).all(|n| f.k_g.generator_count(n) == 0));
        assert!(f.orbit_report.passed());
    }

    #[test]
    fn semidirect_isotropy_is_graph() {
        let (_, c, l) = inversion(2);
        let s = semidirect_action_on_cover(&c, &l).unwrap();
        let r = s.verify(&c, &l, 2);
        assert!(r.passed(), "{r}");
        let std = s.standard();
        let v1 = SimplexRef::nondegenerate(c.total().find("phi@1").unwrap());
        assert_eq!(s.isotropy_standard(&v1), vec![std.index(0, 0), std.index(1, 1)]);
        let v0 = SimplexRef::nondegenerate(c.total().find("phi@0").unwrap());
        assert_eq!(s.isotropy_standard(&v0), vec![std.index(0, 0), std.index(0, 1)]);
    }

    #[test]
    fn trivial_group_isotropy_is_trivial() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 2).unwrap();
        let c = build_cover(nerve.presentation(), &QuotientMap::universal_for_nerve(&nerve).unwrap()).unwrap();
        let a = SimplicialAction::trivial(nerve.presentation(), &FiniteGroup::trivial());
        let l = lift_action(&c, &a).unwrap();
        let s = semidirect_action_on_cover(&c, &l).unwrap();
        for b in c.total().enumerate_simplices(1) {
            assert_eq!(s.isotropy_standard(&b).len(), 1);
        }
    }
}
