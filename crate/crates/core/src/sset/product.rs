use std::collections::HashMap;

use super::presentation::SSetPresentation;
use crate::error::{Error, Result};
use crate::operator::{GenRef, SimplexRef};

/// A finite cartesian product of presentations.
///
/// An `n`-simplex is a tuple of `n`-simplices, one per factor. It is
/// nondegenerate unless all coordinates share a degeneracy position, and a
/// degenerate tuple is normalized by collapsing the shared positions.
#[derive(Clone, Debug)]
pub struct Product {
    factors: Vec<SSetPresentation>,
    presentation: SSetPresentation,
    coords: Vec<Vec<Vec<SimplexRef>>>,
    index: HashMap<Vec<SimplexRef>, GenRef>,
}

/// The product of `factors`, truncated at the smallest truncation among them.
pub fn product_of(factors: &[SSetPresentation]) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::InvalidIndex("a product needs at least one factor".into()));
    }
    let max_dim = factors.iter().map(SSetPresentation::max_dim).min().unwrap();
    let mut product = Product {
        factors: factors.to_vec(),
        presentation: SSetPresentation::new("", 0, vec![vec![]], vec![vec![]])?,
        coords: Vec::new(),
        index: HashMap::new(),
    };
    let mut generators = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=max_dim {
        let simplices: Vec<Vec<SimplexRef>> = factors.iter().map(|f| f.enumerate_simplices(n)).collect();
        let mut gs = Vec::new();
        let mut fs = Vec::new();
        let mut cs = Vec::new();
        for tuple in cartesian(&simplices) {
            if !shared_positions(&tuple).is_empty() {
                continue;
            }
            let g = GenRef::new(n, gs.len());
            let names: Vec<String> = tuple.iter().zip(factors).map(|(s, f)| f.display(s)).collect();
            gs.push(format!("({})", names.join("|")));
            let tuple_faces = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        let face: Vec<SimplexRef> = tuple
                            .iter()
                            .zip(factors)
                            .map(|(s, f)| f.face(s, i))
                            .collect::<Result<_>>()?;
                        product.simplex_of(&face)
                    })
                    .collect::<Result<_>>()?
            };
            fs.push(tuple_faces);
            product.index.insert(tuple.clone(), g);
            cs.push(tuple);
        }
        generators.push(gs);
        faces.push(fs);
        product.coords.push(cs);
    }
    let name = factors.iter().map(|f| f.name().to_string()).collect::<Vec<_>>().join("x");
    product.presentation = SSetPresentation::new(name, max_dim, generators, faces)?;
    Ok(product)
}

/// `X × Y`.
pub fn cartesian_product(x: &SSetPresentation, y: &SSetPresentation) -> Result<SSetPresentation> {
    Ok(product_of(&[x.clone(), y.clone()])?.presentation)
}

/// Degeneracy positions common to all coordinates.
fn shared_positions(tuple: &[SimplexRef]) -> Vec<usize> {
    let mut shared = tuple[0].degeneracy_positions();
    for s in &tuple[1..] {
        let p = s.degeneracy_positions();
        shared.retain(|i| p.contains(i));
    }
    shared
}

fn cartesian(lists: &[Vec<SimplexRef>]) -> Vec<Vec<SimplexRef>> {
    let mut out: Vec<Vec<SimplexRef>> = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                list.iter().map(move |s| {
                    let mut t = prefix.clone();
                    t.push(s.clone());
                    t
                })
            })
            .collect();
    }
    out
}

impl Product {
    pub fn presentation(&self) -> &SSetPresentation {
        &self.presentation
    }

    pub fn factors(&self) -> &[SSetPresentation] {
        &self.factors
    }

    /// Coordinates of a generator.
    pub fn generator_coords(&self, g: GenRef) -> &[SimplexRef] {
        &self.coords[g.dim][g.index]
    }

    /// Normal form of a tuple of equal-dimensional simplices.
    pub fn simplex_of(&self, tuple: &[SimplexRef]) -> Result<SimplexRef> {
        let shared = shared_positions(tuple);
        let reduced: Vec<SimplexRef> = tuple.iter().map(|s| s.collapse(&shared)).collect();
        let gen = *self
            .index
            .get(&reduced)
            .ok_or_else(|| Error::MissingFaceEntry(format!("product tuple {reduced:?}")))?;
        let mut degs = shared;
        degs.reverse();
        Ok(SimplexRef::new(degs, gen).expect("shared positions form a valid word"))
    }

    /// Coordinates of any simplex.
    pub fn coords_of(&self, x: &SimplexRef) -> Vec<SimplexRef> {
        self.generator_coords(x.generator())
            .iter()
            .map(|c| c.degenerate_by(x.degeneracies()).expect("degeneracy word fits"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::sset::{nerve_of_group, standard_complex, validate, StandardKind};

    #[test]
    fn square_has_two_triangles() {
        let d1 = standard_complex(StandardKind::Delta(1), 3).unwrap();
        let sq = cartesian_product(&d1, &d1).unwrap();
        assert_eq!(sq.generator_count(0), 4);
        assert_eq!(sq.generator_count(1), 5);
        assert_eq!(sq.generator_count(2), 2);
        assert_eq!(sq.generator_count(3), 0);
        assert!(validate(&sq).passed());
    }

    #[test]
    fn simplex_counts_multiply() {
        let z2 = nerve_of_group(&FiniteGroup::cyclic(2), 3).unwrap();
        let d1 = standard_complex(StandardKind::Delta(1), 3).unwrap();
        let p = cartesian_product(z2.presentation(), &d1).unwrap();
        for n in 0..=3 {
            assert_eq!(
                p.simplex_count(n),
                z2.presentation().simplex_count(n) * d1.simplex_count(n)
            );
        }
        assert!(validate(&p).passed());
    }

    #[test]
    fn product_of_one_point_nerves_has_one_vertex() {
        let z2 = nerve_of_group(&FiniteGroup::cyclic(2), 2).unwrap();
        let p = cartesian_product(z2.presentation(), z2.presentation()).unwrap();
        assert_eq!(p.generator_count(0), 1);
    }

    #[test]
    fn normal_form_round_trip() {
        let d1 = standard_complex(StandardKind::Delta(1), 3).unwrap();
        let d2 = standard_complex(StandardKind::Delta(2), 3).unwrap();
        let p = product_of(&[d1, d2]).unwrap();
        for n in 0..=3 {
            for s in p.presentation().enumerate_simplices(n) {
                let c = p.coords_of(&s);
                assert_eq!(p.simplex_of(&c).unwrap(), s);
            }
        }
    }
}
