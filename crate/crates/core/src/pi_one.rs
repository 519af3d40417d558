//! Edge-path presentations of the fundamental group of a one-vertex complex,
//! quotient maps onto finite groups, and automorphisms induced by simplicial
//! automorphisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{Automorphism, FiniteGroup, GroupHom};
use crate::operator::{GenRef, SimplexRef};
use crate::sset::{Nerve, SSetPresentation, SimplicialAutomorphism};

/// One relator per nondegenerate 2-simplex `z`: `[∂_1 z] = [∂_0 z][∂_2 z]`.
/// Letters index 1-generators; `None` is a degenerate edge, read as the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub simplex: String,
    pub lhs: Option<usize>,
    pub rhs: [Option<usize>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1Presentation {
    generators: Vec<String>,
    relators: Vec<Relator>,
}

fn letter(edge: &SimplexRef) -> Option<usize> {
    (!edge.is_degenerate()).then(|| edge.generator().index)
}

pub fn pi1_presentation(k: &SSetPresentation) -> Result<Pi1Presentation> {
    if !k.is_reduced() {
        return Err(Error::NotReduced(k.name().to_string()));
    }
    if k.max_dim() < 2 {
        return Err(Error::InvalidIndex(format!(
            "`{}` must be presented up to dimension 2 to read off relators",
            k.name()
        )));
    }
    let relators = (0..k.generator_count(2))
        .map(|i| {
            let z = GenRef::new(2, i);
            let f = k.generator_faces(z);
            Relator {
                simplex: k.generator_name(z).to_string(),
                lhs: letter(&f[1]),
                rhs: [letter(&f[0]), letter(&f[2])],
            }
        })
        .collect();
    Ok(Pi1Presentation {
        generators: k.generators(1).to_vec(),
        relators,
    })
}

impl Pi1Presentation {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    fn word(&self, l: Option<usize>) -> &str {
        l.map_or("e", |i| self.generators[i].as_str())
    }

    pub fn describe_relator(&self, r: &Relator) -> String {
        format!(
            "[{}] = [{}][{}]   ({})",
            self.word(r.lhs),
            self.word(r.rhs[0]),
            self.word(r.rhs[1]),
            r.simplex
        )
    }
}

impl fmt::Display for Pi1Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators ({}): {}", self.generators.len(), self.generators.join(", "))?;
        writeln!(f, "relators ({}):", self.relators.len())?;
        for r in &self.relators {
            writeln!(f, "  {}", self.describe_relator(r))?;
        }
        Ok(())
    }
}

/// A surjection from the fundamental group onto a finite group `Q`, given on
/// the edge generators. Its kernel is the normal subgroup `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pi: Pi1Presentation,
    group: FiniteGroup,
    images: Vec<usize>,
}

impl QuotientMap {
    /// Checks that every relator dies in `Q` and that the images generate `Q`.
    pub fn new(pi: Pi1Presentation, group: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != pi.generators.len() || images.iter().any(|&a| a >= group.order()) {
            return Err(Error::InvalidIndex(format!(
                "expected {} images in a group of order {}",
                pi.generators.len(),
                group.order()
            )));
        }
        let q = QuotientMap { pi, group, images };
        for r in &q.pi.relators {
            let lhs = q.letter_image(r.lhs);
            let rhs = q.group.mul(q.letter_image(r.rhs[0]), q.letter_image(r.rhs[1]));
            if lhs != rhs {
                return Err(Error::RelatorViolation(r.simplex.clone()));
            }
        }
        if q.group.generated_subgroup(&q.images).len() != q.group.order() {
            return Err(Error::invariant(
                "surjectivity",
                format!("edge images do not generate {}", q.group.name()),
            ));
        }
        Ok(q)
    }

    /// The quotient of the nerve of a group induced by a surjective
    /// homomorphism `f`. With the relator orientation `[g h] = [h][g]` on the
    /// nerve, the edge `(g)` maps to `f(g)⁻¹`.
    pub fn for_nerve(nerve: &Nerve, f: &GroupHom) -> Result<Self> {
        let pi = pi1_presentation(nerve.presentation())?;
        let target = f.target();
        let images = (0..nerve.presentation().generator_count(1))
            .map(|i| target.inv(f.apply(nerve.generator_tuple(GenRef::new(1, i))[0])))
            .collect();
        QuotientMap::new(pi, target.clone(), images)
    }

    /// The quotient by the trivial subgroup, i.e. onto the group itself.
    pub fn universal_for_nerve(nerve: &Nerve) -> Result<Self> {
        QuotientMap::for_nerve(nerve, &GroupHom::identity(nerve.group()))
    }

    pub fn presentation(&self) -> &Pi1Presentation {
        &self.pi
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    fn letter_image(&self, l: Option<usize>) -> usize {
        l.map_or(self.group.identity(), |i| self.images[i])
    }

    /// Image of a 1-simplex; degenerate edges go to the identity.
    pub fn edge_image(&self, edge: &SimplexRef) -> usize {
        debug_assert_eq!(edge.dim(), 1);
        self.letter_image(letter(edge))
    }

    /// `q([∂_0^{n-1} x])` for an `n`-simplex `x`, `n >= 1`.
    pub fn edge_class(&self, k: &SSetPresentation, x: &SimplexRef) -> Result<usize> {
        if x.dim() == 0 {
            return Err(Error::InvalidIndex("edge class of a vertex".into()));
        }
        let mut e = x.clone();
        while e.dim() > 1 {
            e = k.face(&e, 0)?;
        }
        Ok(self.edge_image(&e))
    }
}

/// The automorphism `g_*` of `Q` with `q(A x) = g_*(q(x))` on every edge
/// generator `x`. With `candidate` given it is only verified; otherwise it is
/// determined from the edge images, which generate `Q`.
pub fn induced_automorphism(
    k: &SSetPresentation,
    a: &SimplicialAutomorphism,
    q: &QuotientMap,
    candidate: Option<&Automorphism>,
) -> Result<Automorphism> {
    let edges = 0..k.generator_count(1);
    let source: Vec<usize> = edges.clone().map(|i| q.images[i]).collect();
    let target: Vec<usize> = edges.map(|i| q.images[a.apply_generator(GenRef::new(1, i)).index]).collect();
    let group = &q.group;
    let found = match candidate {
        Some(c) => {
            let ok = c.is_automorphism_of(group) && source.iter().zip(&target).all(|(&s, &t)| c.apply(s) == t);
            ok.then(|| c.clone())
        }
        None => group
            .extend_homomorphism(&source, &target, group)
            .and_then(|images| Automorphism::new(group, images).ok()),
    };
    found.ok_or_else(|| {
        Error::NoDescent(format!(
            "the action on `{}` does not preserve the kernel of the map onto {}",
            k.name(),
            group.name()
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{nerve_of_group, standard_complex, SimplicialAction, StandardKind};

    #[test]
    fn nerve_of_z3_presentation() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 2).unwrap();
        let pi = pi1_presentation(nerve.presentation()).unwrap();
        assert_eq!(pi.generators(), ["1", "2"]);
        assert_eq!(pi.relators().len(), 4);
        // z = (1,1): [2] = [1][1]
        let r = &pi.relators()[0];
        assert_eq!((r.lhs, r.rhs), (Some(1), [Some(0), Some(0)]));
    }

    #[test]
    fn nerve_of_z2_relator_has_identity_letter() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(2), 2).unwrap();
        let pi = pi1_presentation(nerve.presentation()).unwrap();
        assert_eq!(pi.relators().len(), 1);
        assert_eq!(pi.relators()[0].lhs, None);
        assert_eq!(pi.relators()[0].rhs, [Some(0), Some(0)]);
    }

    #[test]
    fn point_has_empty_presentation() {
        let pt = standard_complex(StandardKind::Delta(0), 2).unwrap();
        let pi = pi1_presentation(&pt).unwrap();
        assert!(pi.generators().is_empty() && pi.relators().is_empty());
        let d1 = standard_complex(StandardKind::Delta(1), 2).unwrap();
        assert!(matches!(pi1_presentation(&d1), Err(Error::NotReduced(_))));
    }

    #[test]
    fn relator_violation_detected() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(4), 2).unwrap();
        let pi = pi1_presentation(nerve.presentation()).unwrap();
        // (g) ↦ 1 for every g is not a homomorphism
        let err = QuotientMap::new(pi, FiniteGroup::cyclic(2), vec![1, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::RelatorViolation(_)));
    }

    #[test]
    fn edge_classes() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(4), 3).unwrap();
        let q = QuotientMap::for_nerve(&nerve, &GroupHom::reduction(4, 2).unwrap()).unwrap();
        let x = nerve.presentation();
        let s = nerve.simplex_of_tuple(&[1, 2]);
        assert_eq!(q.edge_class(x, &s).unwrap(), 0);
        let one = SimplexRef::nondegenerate(x.find("1").unwrap());
        assert_eq!(q.edge_class(x, &one).unwrap(), 1);
        let deg = nerve.simplex_of_tuple(&[0, 0]);
        assert_eq!(q.edge_class(x, &deg).unwrap(), 0);
    }

    #[test]
    fn nonabelian_nerve_needs_inverted_edges() {
        let s3 = FiniteGroup::symmetric(3);
        let nerve = nerve_of_group(&s3, 2).unwrap();
        let pi = pi1_presentation(nerve.presentation()).unwrap();
        let direct: Vec<usize> = (0..5).map(|i| nerve.generator_tuple(GenRef::new(1, i))[0]).collect();
        assert!(QuotientMap::new(pi, s3.clone(), direct).is_err());
        assert!(QuotientMap::universal_for_nerve(&nerve).is_ok());
    }

    #[test]
    fn induced_automorphisms() {
        let z3 = FiniteGroup::cyclic(3);
        let nerve = nerve_of_group(&z3, 2).unwrap();
        let q = QuotientMap::universal_for_nerve(&nerve).unwrap();
        let inv = Automorphism::new(&z3, vec![0, 2, 1]).unwrap();
        let act = SimplicialAction::on_nerve(&nerve, &FiniteGroup::cyclic(2), &[Automorphism::identity(3), inv.clone()]).unwrap();
        let x = nerve.presentation();
        assert!(induced_automorphism(x, act.automorphism(0), &q, None).unwrap().is_identity());
        assert_eq!(induced_automorphism(x, act.automorphism(1), &q, None).unwrap(), inv);
        assert!(induced_automorphism(x, act.automorphism(1), &q, Some(&Automorphism::identity(3))).is_err());
    }

    #[test]
    fn no_descent_when_kernel_moves() {
        // swap on Z2xZ2 does not preserve the kernel of the first projection
        let k4 = FiniteGroup::named("Z2xZ2").unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let nerve = nerve_of_group(&k4, 2).unwrap();
        let proj = GroupHom::new(k4.clone(), z2.clone(), vec![0, 0, 1, 1]).unwrap();
        let q = QuotientMap::for_nerve(&nerve, &proj).unwrap();
        let swap = Automorphism::new(&k4, vec![0, 2, 1, 3]).unwrap();
        let act = SimplicialAction::on_nerve(&nerve, &z2, &[Automorphism::identity(4), swap]).unwrap();
        let err = induced_automorphism(nerve.presentation(), act.automorphism(1), &q, None).unwrap_err();
        assert!(matches!(err, Error::NoDescent(_)));
    }
}
