use super::finite::{Automorphism, FiniteGroup};
use super::semidirect::SemidirectProduct;
use crate::error::{Error, Result};

/// A function `r: D -> Q` on a subgroup `D` of `G`, together with the action
/// `g ↦ g_*` of `G` on `Q`. It is crossed when `r(gh) = r(g) · g_*(r(h))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedHom {
    domain: Vec<usize>,
    values: Vec<Option<usize>>,
    action: Vec<Automorphism>,
}

impl CrossedHom {
    /// `values[g]` is `Some(r(g))` for `g` in the domain and `None` elsewhere.
    pub fn new(values: Vec<Option<usize>>, action: Vec<Automorphism>) -> Self {
        let domain = values.iter().enumerate().filter(|(_, v)| v.is_some()).map(|(g, _)| g).collect();
        CrossedHom { domain, values, action }
    }

    /// The zero crossed homomorphism on all of `G`.
    pub fn trivial(acting: &FiniteGroup, normal: &FiniteGroup, action: Vec<Automorphism>) -> Self {
        Self::new(vec![Some(normal.identity()); acting.order()], action)
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn value(&self, g: usize) -> Option<usize> {
        self.values.get(g).copied().flatten()
    }

    pub fn action(&self) -> &[Automorphism] {
        &self.action
    }

    /// Elements of the domain sent to the identity.
    pub fn kernel(&self, normal: &FiniteGroup) -> Vec<usize> {
        self.domain
            .iter()
            .copied()
            .filter(|&g| self.values[g] == Some(normal.identity()))
            .collect()
    }

    /// Checks `r(gh) = r(g)·g_*(r(h))` on the domain; returns the first
    /// failing pair.
    pub fn check_relation(&self, acting: &FiniteGroup, normal: &FiniteGroup) -> std::result::Result<(), (usize, usize)> {
        for &g in &self.domain {
            for &h in &self.domain {
                let gh = acting.mul(g, h);
                let expected = normal.mul(self.values[g].unwrap(), self.action[g].apply(self.values[h].unwrap()));
                if self.values[gh] != Some(expected) {
                    return Err((g, h));
                }
            }
        }
        Ok(())
    }
}

/// The graph `{(r(g), g) : g ∈ D}` as a subgroup of `L = Q ⋊ G`, returned as
/// sorted element indices of `L`.
pub fn graph_of_crossed_hom(r: &CrossedHom, l: &SemidirectProduct) -> Result<Vec<usize>> {
    if r.values.len() != l.acting().order() {
        return Err(Error::InvalidIndex("crossed homomorphism and semidirect product disagree on G".into()));
    }
    let mut graph: Vec<usize> = r.domain.iter().map(|&g| l.index(r.values[g].unwrap(), g)).collect();
    graph.sort_unstable();
    if !l.group().is_subgroup(&graph) {
        let detail = match r.check_relation(l.acting(), l.normal()) {
            Err((g, h)) => format!(
                "graph is not closed: relation fails at ({}, {})",
                l.acting().element_name(g),
                l.acting().element_name(h)
            ),
            Ok(()) => "graph is not closed under multiplication".to_string(),
        };
        return Err(Error::NotCrossed(detail));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build_semidirect;

    fn setup() -> (FiniteGroup, FiniteGroup, Vec<Automorphism>, SemidirectProduct) {
        let q = FiniteGroup::cyclic(3);
        let g = FiniteGroup::cyclic(2);
        let phi = vec![Automorphism::identity(3), Automorphism::new(&q, vec![0, 2, 1]).unwrap()];
        let l = build_semidirect(&q, &g, &phi).unwrap();
        (q, g, phi, l)
    }

    #[test]
    fn trivial_graph_is_canonical_copy_of_g() {
        let (q, g, phi, l) = setup();
        let r = CrossedHom::trivial(&g, &q, phi);
        let graph = graph_of_crossed_hom(&r, &l).unwrap();
        assert_eq!(graph, vec![l.include_acting(0), l.include_acting(1)]);
    }

    #[test]
    fn graph_at_shifted_vertex() {
        // r(g) = β⁻¹ g_*(β) for β = 1: r(e) = 0, r(inv) = -1 + 2 = 1
        let (_, _, phi, l) = setup();
        let r = CrossedHom::new(vec![Some(0), Some(1)], phi);
        let graph = graph_of_crossed_hom(&r, &l).unwrap();
        assert_eq!(graph, vec![l.index(0, 0), l.index(1, 1)]);
        assert_eq!(graph.len(), 2);
    }

    #[test]
    fn trivial_domain() {
        let (_, _, phi, l) = setup();
        let r = CrossedHom::new(vec![Some(0), None], phi);
        assert_eq!(graph_of_crossed_hom(&r, &l).unwrap(), vec![l.index(0, 0)]);
    }

    #[test]
    fn graph_is_subgroup_iff_crossed() {
        let (q, g, phi, l) = setup();
        for r0 in 0..3 {
            for r1 in 0..3 {
                let r = CrossedHom::new(vec![Some(r0), Some(r1)], phi.clone());
                let crossed = r.check_relation(&g, &q).is_ok();
                let graph = graph_of_crossed_hom(&r, &l);
                assert_eq!(crossed, graph.is_ok(), "r = ({r0}, {r1})");
                if !crossed {
                    assert!(matches!(graph, Err(Error::NotCrossed(_))));
                }
            }
        }
    }
}
