use super::presentation::SSetPresentation;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::operator::{GenRef, SimplexRef};

/// Name of the unique vertex of a one-vertex complex.
pub const VERTEX_NAME: &str = "phi";

/// The nerve of a finite group, truncated.
///
/// An `n`-simplex is a tuple `(g_1, ..., g_n)`; it is nondegenerate when no
/// entry is the identity. Faces drop the first or last entry or multiply two
/// neighbours; `s_j` inserts the identity at position `j`.
#[derive(Clone, Debug)]
pub struct Nerve {
    group: FiniteGroup,
    presentation: SSetPresentation,
    /// Non-identity elements in order; `rank[g]` is the position of `g` there.
    non_identity: Vec<usize>,
    rank: Vec<Option<usize>>,
}

pub fn nerve_of_group(group: &FiniteGroup, max_dim: usize) -> Result<Nerve> {
    if max_dim == 0 {
        return Err(Error::InvalidIndex("a nerve needs truncation at least 1".into()));
    }
    let non_identity: Vec<usize> = (0..group.order()).filter(|&g| g != group.identity()).collect();
    let mut rank = vec![None; group.order()];
    for (i, &g) in non_identity.iter().enumerate() {
        rank[g] = Some(i);
    }
    let m = non_identity.len();
    let mut nerve = Nerve {
        group: group.clone(),
        presentation: SSetPresentation::new("", 0, vec![vec![VERTEX_NAME.into()]], vec![vec![vec![]]])?,
        non_identity,
        rank,
    };
    let mut generators = vec![vec![VERTEX_NAME.to_string()]];
    let mut faces = vec![vec![Vec::new()]];
    for n in 1..=max_dim {
        let count = m.pow(n as u32);
        let mut gs = Vec::with_capacity(count);
        let mut fs = Vec::with_capacity(count);
        for idx in 0..count {
            let tuple = nerve.tuple_of_index(n, idx);
            let names: Vec<&str> = tuple.iter().map(|&g| group.element_name(g)).collect();
            gs.push(names.join("."));
            fs.push((0..=n).map(|i| nerve.simplex_of_tuple(&tuple_face(group, &tuple, i))).collect());
        }
        generators.push(gs);
        faces.push(fs);
    }
    nerve.presentation = SSetPresentation::new(format!("N({})", group.name()), max_dim, generators, faces)?;
    Ok(nerve)
}

/// `∂_i` on group tuples.
pub fn tuple_face(group: &FiniteGroup, tuple: &[usize], i: usize) -> Vec<usize> {
    let n = tuple.len();
    let mut out = tuple.to_vec();
    if i == 0 {
        out.remove(0);
    } else if i == n {
        out.pop();
    } else {
        let merged = group.mul(tuple[i - 1], tuple[i]);
        out[i - 1] = merged;
        out.remove(i);
    }
    out
}

impl Nerve {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn presentation(&self) -> &SSetPresentation {
        &self.presentation
    }

    pub fn into_presentation(self) -> SSetPresentation {
        self.presentation
    }

    fn tuple_of_index(&self, n: usize, mut idx: usize) -> Vec<usize> {
        let m = self.non_identity.len();
        let mut tuple = vec![0; n];
        for slot in tuple.iter_mut().rev() {
            *slot = self.non_identity[idx % m];
            idx /= m;
        }
        tuple
    }

    /// The tuple of a nondegenerate generator.
    pub fn generator_tuple(&self, g: GenRef) -> Vec<usize> {
        self.tuple_of_index(g.dim, g.index)
    }

    /// The generator with the given identity-free tuple.
    pub fn generator_of_tuple(&self, tuple: &[usize]) -> Option<GenRef> {
        let m = self.non_identity.len();
        let mut idx = 0;
        for &g in tuple {
            idx = idx * m + self.rank.get(g).copied().flatten()?;
        }
        Some(GenRef::new(tuple.len(), idx))
    }

    /// Normal form of an arbitrary tuple: identity entries become degeneracies.
    pub fn simplex_of_tuple(&self, tuple: &[usize]) -> SimplexRef {
        let e = self.group.identity();
        let reduced: Vec<usize> = tuple.iter().copied().filter(|&g| g != e).collect();
        let gen = self.generator_of_tuple(&reduced).expect("identity-free tuple");
        // vertex j of the simplex maps to the number of non-identity entries before it
        let mut surjection = vec![0];
        let mut level = 0;
        for &g in tuple {
            if g != e {
                level += 1;
            }
            surjection.push(level);
        }
        SimplexRef::from_surjection(&surjection, gen)
    }

    /// The tuple of any simplex.
    pub fn tuple_of(&self, x: &SimplexRef) -> Vec<usize> {
        let h = self.generator_tuple(x.generator());
        let sigma = x.surjection();
        sigma
            .windows(2)
            .map(|w| if w[0] == w[1] { self.group.identity() } else { h[w[0]] })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{apply_operator, normalize_operator, Symbol};
    use crate::sset::validate;

    #[test]
    fn counts_for_small_cyclic_groups() {
        let z2 = nerve_of_group(&FiniteGroup::cyclic(2), 3).unwrap();
        assert_eq!((1..=3).map(|n| z2.presentation().generator_count(n)).collect::<Vec<_>>(), vec![1, 1, 1]);
        let z3 = nerve_of_group(&FiniteGroup::cyclic(3), 2).unwrap();
        assert_eq!(z3.presentation().generator_count(1), 2);
        assert_eq!(z3.presentation().generator_count(2), 4);
        let one = nerve_of_group(&FiniteGroup::trivial(), 3).unwrap();
        assert!((1..=3).all(|n| one.presentation().generator_count(n) == 0));
        assert!(one.presentation().is_reduced());
    }

    #[test]
    fn tuple_round_trip() {
        let s3 = FiniteGroup::symmetric(3);
        let nerve = nerve_of_group(&s3, 3).unwrap();
        for n in 0..=3 {
            for x in nerve.presentation().enumerate_simplices(n) {
                let t = nerve.tuple_of(&x);
                assert_eq!(t.len(), n);
                assert_eq!(nerve.simplex_of_tuple(&t), x);
            }
        }
    }

    #[test]
    fn faces_follow_tuple_rule() {
        let s3 = FiniteGroup::symmetric(3);
        let nerve = nerve_of_group(&s3, 3).unwrap();
        let x = nerve.presentation();
        for n in 1..=3 {
            for s in x.enumerate_simplices(n) {
                let t = nerve.tuple_of(&s);
                for i in 0..=n {
                    let f = x.face(&s, i).unwrap();
                    assert_eq!(nerve.tuple_of(&f), tuple_face(&s3, &t, i));
                }
            }
        }
        assert!(validate(x).passed());
    }

    #[test]
    fn last_face_of_pair() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(4), 2).unwrap();
        let x = nerve.presentation();
        let g = SimplexRef::nondegenerate(x.find("1.1").unwrap());
        let w = normalize_operator(&[Symbol::Face(2)], 2).unwrap();
        let f = apply_operator(x, &w, &g).unwrap();
        assert_eq!(x.display(&f), "1");
        let sg = nerve.simplex_of_tuple(&[0, 1]);
        assert_eq!(x.display(&sg), "s0(1)");
    }
}
