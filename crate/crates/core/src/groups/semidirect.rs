use super::finite::{Automorphism, FiniteGroup};
use crate::error::{Error, Result};

/// `L = N ⋊_φ G` on pairs `(n, x)` with
///
/// ```text
/// (n, x) · (m, y) = (n · φ(x)(m), x · y)
/// ```
///
/// The pair `(n, x)` has index `n * |G| + x`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    normal: FiniteGroup,
    acting: FiniteGroup,
    phi: Vec<Automorphism>,
    group: FiniteGroup,
}

/// Checks that `phi` is a homomorphism `G -> Aut(N)`.
pub(crate) fn check_action(normal: &FiniteGroup, acting: &FiniteGroup, phi: &[Automorphism]) -> Result<()> {
    if phi.len() != acting.order() {
        return Err(Error::NotAnAction(format!(
            "expected one automorphism per element of {}, got {}",
            acting.name(),
            phi.len()
        )));
    }
    for (x, a) in phi.iter().enumerate() {
        if !a.is_automorphism_of(normal) {
            return Err(Error::NotAnAction(format!(
                "image of `{}` is not an automorphism of {}",
                acting.element_name(x),
                normal.name()
            )));
        }
    }
    for x in 0..acting.order() {
        for y in 0..acting.order() {
            if phi[acting.mul(x, y)] != phi[x].compose(&phi[y]) {
                return Err(Error::NotAnAction(format!(
                    "φ({}·{}) != φ({})∘φ({})",
                    acting.element_name(x),
                    acting.element_name(y),
                    acting.element_name(x),
                    acting.element_name(y)
                )));
            }
        }
    }
    Ok(())
}

/// Builds `N ⋊_φ G`, verifying that `phi` is an action by automorphisms.
pub fn build_semidirect(normal: &FiniteGroup, acting: &FiniteGroup, phi: &[Automorphism]) -> Result<SemidirectProduct> {
    check_action(normal, acting, phi)?;
    let (nn, ng) = (normal.order(), acting.order());
    let elements = (0..nn * ng)
        .map(|i| format!("({};{})", normal.element_name(i / ng), acting.element_name(i % ng)))
        .collect();
    let table = (0..nn * ng)
        .map(|a| {
            (0..nn * ng)
                .map(|b| {
                    let (n, x) = (a / ng, a % ng);
                    let (m, y) = (b / ng, b % ng);
                    normal.mul(n, phi[x].apply(m)) * ng + acting.mul(x, y)
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(format!("{}:{}", normal.name(), acting.name()), elements, table)?;
    Ok(SemidirectProduct {
        normal: normal.clone(),
        acting: acting.clone(),
        phi: phi.to_vec(),
        group,
    })
}

impl SemidirectProduct {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn normal(&self) -> &FiniteGroup {
        &self.normal
    }

    pub fn acting(&self) -> &FiniteGroup {
        &self.acting
    }

    pub fn phi(&self) -> &[Automorphism] {
        &self.phi
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn index(&self, n: usize, x: usize) -> usize {
        n * self.acting.order() + x
    }

    pub fn pair(&self, l: usize) -> (usize, usize) {
        (l / self.acting.order(), l % self.acting.order())
    }

    /// The quotient map `η: L -> G`.
    pub fn projection(&self, l: usize) -> usize {
        self.pair(l).1
    }

    pub fn include_normal(&self, n: usize) -> usize {
        self.index(n, self.acting.identity())
    }

    pub fn include_acting(&self, x: usize) -> usize {
        self.index(self.normal.identity(), x)
    }
}

/// `G ⋉ Q` on pairs `(g, α)` with the multiplication
///
/// ```text
/// (g, α) · (h, β) = (g h, h_*⁻¹(α) β)
/// ```
///
/// which is the convention under which `b·(g, α) = (g⁻¹ b) α` is a right action
/// on a regular cover. The pair `(g, α)` has index `g * |Q| + α`.
#[derive(Clone, Debug)]
pub struct DeckSemidirect {
    normal: FiniteGroup,
    phi: Vec<Automorphism>,
    group: FiniteGroup,
}

impl DeckSemidirect {
    pub fn new(acting: &FiniteGroup, normal: &FiniteGroup, phi: &[Automorphism]) -> Result<Self> {
        check_action(normal, acting, phi)?;
        let (ng, nq) = (acting.order(), normal.order());
        let inv: Vec<Automorphism> = phi.iter().map(Automorphism::inverse).collect();
        let elements = (0..ng * nq)
            .map(|i| format!("({};{})", acting.element_name(i / nq), normal.element_name(i % nq)))
            .collect();
        let table = (0..ng * nq)
            .map(|a| {
                (0..ng * nq)
                    .map(|b| {
                        let (g, alpha) = (a / nq, a % nq);
                        let (h, beta) = (b / nq, b % nq);
                        acting.mul(g, h) * nq + normal.mul(inv[h].apply(alpha), beta)
                    })
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_table(format!("{}|{}", acting.name(), normal.name()), elements, table)?;
        Ok(DeckSemidirect {
            normal: normal.clone(),
            phi: phi.to_vec(),
            group,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn index(&self, g: usize, alpha: usize) -> usize {
        g * self.normal.order() + alpha
    }

    pub fn pair(&self, l: usize) -> (usize, usize) {
        (l / self.normal.order(), l % self.normal.order())
    }

    /// The isomorphism onto `Q ⋊_φ G`, `(g, α) ↦ (g_*(α), g)`.
    pub fn to_standard(&self, standard: &SemidirectProduct, l: usize) -> usize {
        let (g, alpha) = self.pair(l);
        standard.index(self.phi[g].apply(alpha), g)
    }

    pub fn standard_isomorphism(&self, standard: &SemidirectProduct) -> Vec<usize> {
        (0..self.group.order()).map(|l| self.to_standard(standard, l)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{automorphisms, find_isomorphism, DEFAULT_AUTOMORPHISM_BOUND};

    fn inversion_z3() -> (FiniteGroup, FiniteGroup, Vec<Automorphism>) {
        let n = FiniteGroup::cyclic(3);
        let g = FiniteGroup::cyclic(2);
        let inv = Automorphism::new(&n, vec![0, 2, 1]).unwrap();
        (n, g, vec![Automorphism::identity(3), inv])
    }

    #[test]
    fn inversion_semidirect_is_s3() {
        let (n, g, phi) = inversion_z3();
        let l = build_semidirect(&n, &g, &phi).unwrap();
        assert_eq!(l.order(), 6);
        assert!(!l.group().is_abelian());
        assert!(find_isomorphism(l.group(), &FiniteGroup::symmetric(3)).is_some());
    }

    #[test]
    fn trivial_acting_group_gives_normal_factor() {
        let n = FiniteGroup::named("S3").unwrap();
        let l = build_semidirect(&n, &FiniteGroup::trivial(), &[Automorphism::identity(6)]).unwrap();
        assert_eq!(l.group().table(), n.table());
    }

    #[test]
    fn trivial_action_gives_klein_group() {
        let z2 = FiniteGroup::cyclic(2);
        let l = build_semidirect(&z2, &z2, &[Automorphism::identity(2), Automorphism::identity(2)]).unwrap();
        assert!(l.group().is_abelian());
        assert!((0..4).all(|a| l.group().mul(a, a) == l.group().identity()));
    }

    #[test]
    fn non_homomorphic_phi_is_rejected() {
        let (n, g, _) = inversion_z3();
        let inv = Automorphism::new(&n, vec![0, 2, 1]).unwrap();
        // φ(e) must be the identity
        let err = build_semidirect(&n, &g, &[inv.clone(), inv]).unwrap_err();
        assert!(matches!(err, Error::NotAnAction(_)));
        let not_aut = Automorphism::identity(3).compose(&Automorphism::identity(3));
        assert!(build_semidirect(&n, &g, &[not_aut]).is_err());
    }

    #[test]
    fn conjugation_realizes_phi() {
        let q = FiniteGroup::named("Z2xZ2").unwrap();
        let g = FiniteGroup::cyclic(2);
        let auts = automorphisms(&q, DEFAULT_AUTOMORPHISM_BOUND).unwrap();
        for a in auts.iter().filter(|a| a.compose(a).is_identity()) {
            let phi = vec![Automorphism::identity(4), a.clone()];
            let l = build_semidirect(&q, &g, &phi).unwrap();
            let lg = l.group();
            for x in 0..2 {
                for h in 0..4 {
                    let xe = l.include_acting(x);
                    let conj = lg.mul(lg.mul(xe, l.include_normal(h)), lg.inv(xe));
                    assert_eq!(conj, l.include_normal(phi[x].apply(h)));
                }
            }
        }
    }

    #[test]
    fn deck_convention_is_isomorphic() {
        let (n, g, phi) = inversion_z3();
        let l = build_semidirect(&n, &g, &phi).unwrap();
        let d = DeckSemidirect::new(&g, &n, &phi).unwrap();
        let iso = d.standard_isomorphism(&l);
        let dg = d.group();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(iso[dg.mul(a, b)], l.group().mul(iso[a], iso[b]));
            }
        }
        let mut sorted = iso.clone();
        sorted.sort();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
    }
}
