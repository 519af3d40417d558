use super::nerve::Nerve;
use super::presentation::SSetPresentation;
use crate::error::{Error, Result};
use crate::groups::{Automorphism, FiniteGroup};
use crate::operator::{GenRef, SimplexRef};

/// A simplicial automorphism, given by where it sends each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialAutomorphism {
    maps: Vec<Vec<usize>>,
}

/// Checks that `maps` sends the generators of `x` bijectively onto those of
/// `y`, dimension by dimension, commuting with all faces.
pub fn check_generator_map(x: &SSetPresentation, y: &SSetPresentation, maps: &[Vec<usize>]) -> std::result::Result<(), String> {
    if maps.len() != x.max_dim() + 1 || x.max_dim() != y.max_dim() {
        return Err("dimension mismatch".into());
    }
    for (n, m) in maps.iter().enumerate() {
        if m.len() != x.generator_count(n) || m.len() != y.generator_count(n) {
            return Err(format!("dimension {n} has the wrong number of images"));
        }
        let mut seen = vec![false; m.len()];
        for &t in m {
            if t >= m.len() || std::mem::replace(&mut seen[t], true) {
                return Err(format!("dimension {n} is not a bijection"));
            }
        }
    }
    let apply = |s: &SimplexRef| {
        let g = s.generator();
        s.with_generator(GenRef::new(g.dim, maps[g.dim][g.index]))
    };
    for g in x.all_generators().filter(|g| g.dim > 0) {
        let image = GenRef::new(g.dim, maps[g.dim][g.index]);
        for (i, f) in x.generator_faces(g).iter().enumerate() {
            if apply(f) != y.generator_faces(image)[i] {
                return Err(format!("face {i} of `{}`", x.generator_name(g)));
            }
        }
    }
    Ok(())
}

impl SimplicialAutomorphism {
    pub fn identity(x: &SSetPresentation) -> Self {
        SimplicialAutomorphism {
            maps: (0..=x.max_dim()).map(|n| (0..x.generator_count(n)).collect()).collect(),
        }
    }

    pub fn new(x: &SSetPresentation, maps: Vec<Vec<usize>>) -> Result<Self> {
        check_generator_map(x, x, &maps).map_err(|d| Error::invariant("equivariance of faces", d))?;
        Ok(SimplicialAutomorphism { maps })
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn apply_generator(&self, g: GenRef) -> GenRef {
        GenRef::new(g.dim, self.maps[g.dim][g.index])
    }

    pub fn apply(&self, x: &SimplexRef) -> SimplexRef {
        x.with_generator(self.apply_generator(x.generator()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplicialAutomorphism) -> SimplicialAutomorphism {
        SimplicialAutomorphism {
            maps: other
                .maps
                .iter()
                .enumerate()
                .map(|(n, m)| m.iter().map(|&t| self.maps[n][t]).collect())
                .collect(),
        }
    }

    pub fn inverse(&self) -> SimplicialAutomorphism {
        SimplicialAutomorphism {
            maps: self
                .maps
                .iter()
                .map(|m| {
                    let mut inv = vec![0; m.len()];
                    for (s, &t) in m.iter().enumerate() {
                        inv[t] = s;
                    }
                    inv
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.maps.iter().all(|m| m.iter().enumerate().all(|(s, &t)| s == t))
    }

    /// Whether `g` is fixed.
    pub fn fixes(&self, g: GenRef) -> bool {
        self.maps[g.dim][g.index] == g.index
    }

    /// The restriction to generators of dimension at most `dim`.
    pub fn truncated(&self, dim: usize) -> SimplicialAutomorphism {
        SimplicialAutomorphism {
            maps: self.maps[..=dim.min(self.maps.len() - 1)].to_vec(),
        }
    }
}

/// A finite group acting on a presentation by simplicial automorphisms.
#[derive(Clone, Debug)]
pub struct SimplicialAction {
    group: FiniteGroup,
    maps: Vec<SimplicialAutomorphism>,
}

impl SimplicialAction {
    /// Checks that each map is an automorphism of `x` and that
    /// `g ↦ maps[g]` is a homomorphism.
    pub fn new(x: &SSetPresentation, group: &FiniteGroup, maps: Vec<SimplicialAutomorphism>) -> Result<Self> {
        if maps.len() != group.order() {
            return Err(Error::invariant(
                "action homomorphism",
                format!("{} maps for a group of order {}", maps.len(), group.order()),
            ));
        }
        for (g, m) in maps.iter().enumerate() {
            check_generator_map(x, x, &m.maps).map_err(|d| {
                Error::invariant("equivariance of faces", format!("element `{}`: {d}", group.element_name(g)))
            })?;
        }
        Self::check_homomorphism(group, &maps)?;
        Ok(SimplicialAction {
            group: group.clone(),
            maps,
        })
    }

    fn check_homomorphism(group: &FiniteGroup, maps: &[SimplicialAutomorphism]) -> Result<()> {
        if !maps[group.identity()].is_identity() {
            return Err(Error::invariant("action homomorphism", "the identity does not act trivially"));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if maps[group.mul(g, h)] != maps[g].compose(&maps[h]) {
                    return Err(Error::invariant(
                        "action homomorphism",
                        format!(
                            "map({}·{}) != map({})∘map({})",
                            group.element_name(g),
                            group.element_name(h),
                            group.element_name(g),
                            group.element_name(h)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn trivial(x: &SSetPresentation, group: &FiniteGroup) -> Self {
        SimplicialAction {
            group: group.clone(),
            maps: vec![SimplicialAutomorphism::identity(x); group.order()],
        }
    }

    /// The action on the nerve of `Q` through `phi: G -> Aut(Q)`, applied
    /// entrywise to tuples.
    pub fn on_nerve(nerve: &Nerve, group: &FiniteGroup, phi: &[Automorphism]) -> Result<Self> {
        crate::groups::check_action(nerve.group(), group, phi)?;
        let x = nerve.presentation();
        let maps = phi
            .iter()
            .map(|a| {
                let m = (0..=x.max_dim())
                    .map(|n| {
                        (0..x.generator_count(n))
                            .map(|i| {
                                let t: Vec<usize> = nerve.generator_tuple(GenRef::new(n, i)).iter().map(|&g| a.apply(g)).collect();
                                nerve.generator_of_tuple(&t).expect("automorphisms fix only the identity").index
                            })
                            .collect()
                    })
                    .collect();
                SimplicialAutomorphism { maps: m }
            })
            .collect();
        SimplicialAction::new(x, group, maps)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The action on the truncation at `dim`.
    pub fn truncated(&self, dim: usize) -> SimplicialAction {
        SimplicialAction {
            group: self.group.clone(),
            maps: self.maps.iter().map(|m| m.truncated(dim)).collect(),
        }
    }

    pub fn automorphism(&self, g: usize) -> &SimplicialAutomorphism {
        &self.maps[g]
    }

    pub fn automorphisms(&self) -> &[SimplicialAutomorphism] {
        &self.maps
    }

    pub fn act(&self, g: usize, x: &SimplexRef) -> SimplexRef {
        self.maps[g].apply(x)
    }

    /// Generators fixed by every group element, per dimension.
    pub fn fixed_generators(&self) -> Vec<Vec<usize>> {
        let dims = self.maps[0].maps.len();
        (0..dims)
            .map(|n| {
                (0..self.maps[0].maps[n].len())
                    .filter(|&i| self.maps.iter().all(|m| m.fixes(GenRef::new(n, i))))
                    .collect()
            })
            .collect()
    }

    /// No nonidentity element acts as the identity.
    pub fn is_effective(&self) -> bool {
        (0..self.group.order())
            .filter(|&g| g != self.group.identity())
            .all(|g| !self.maps[g].is_identity())
    }

    /// Elements fixing `x`.
    pub fn isotropy(&self, x: &SimplexRef) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.act(g, x) == *x).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::nerve_of_group;

    #[test]
    fn inversion_on_nerve() {
        let z3 = FiniteGroup::cyclic(3);
        let z2 = FiniteGroup::cyclic(2);
        let nerve = nerve_of_group(&z3, 3).unwrap();
        let inv = Automorphism::new(&z3, vec![0, 2, 1]).unwrap();
        let act = SimplicialAction::on_nerve(&nerve, &z2, &[Automorphism::identity(3), inv]).unwrap();
        let x = nerve.presentation();
        let one = SimplexRef::nondegenerate(x.find("1").unwrap());
        assert_eq!(x.display(&act.act(1, &one)), "2");
        assert!(act.is_effective());
        let fixed = act.fixed_generators();
        assert_eq!(fixed.iter().map(Vec::len).sum::<usize>(), 1);
    }

    #[test]
    fn broken_map_is_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        let nerve = nerve_of_group(&z3, 2).unwrap();
        let x = nerve.presentation();
        let mut maps = SimplicialAutomorphism::identity(x).maps;
        maps[1].swap(0, 1);
        let err = SimplicialAutomorphism::new(x, maps).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation { ref invariant, .. } if invariant == "equivariance of faces"));
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 2).unwrap();
        let x = nerve.presentation();
        let act = SimplicialAction::trivial(x, &FiniteGroup::cyclic(2));
        assert!(!act.is_effective());
        assert_eq!(act.fixed_generators()[2].len(), 4);
        assert_eq!(act.isotropy(&SimplexRef::nondegenerate(GenRef::new(1, 0))), vec![0, 1]);
    }

    #[test]
    fn composition_and_inverse() {
        let q = FiniteGroup::named("Z2xZ2").unwrap();
        let nerve = nerve_of_group(&q, 2).unwrap();
        let swap = Automorphism::new(&q, vec![0, 2, 1, 3]).unwrap();
        let act = SimplicialAction::on_nerve(&nerve, &FiniteGroup::cyclic(2), &[Automorphism::identity(4), swap]).unwrap();
        let a = act.automorphism(1);
        assert!(a.compose(a).is_identity());
        assert_eq!(&a.inverse(), a);
    }
}
