use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::operator::{degeneracy_words, face_of, FaceLookup, GenRef, SimplexRef};

/// A truncated simplicial set given by its nondegenerate simplices up to
/// `max_dim` and the faces of each of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSetPresentation {
    name: String,
    max_dim: usize,
    generators: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<SimplexRef>>>,
    lookup: HashMap<String, GenRef>,
}

impl FaceLookup for SSetPresentation {
    fn generator_face(&self, g: GenRef, i: usize) -> Result<SimplexRef> {
        self.faces
            .get(g.dim)
            .and_then(|d| d.get(g.index))
            .and_then(|f| f.get(i))
            .cloned()
            .ok_or_else(|| Error::MissingFaceEntry(format!("{g:?} (face {i})")))
    }
}

impl SSetPresentation {
    /// Checks the structural invariants: one name list and one face list per
    /// dimension, `n + 1` faces of dimension `n - 1` for every `n`-generator,
    /// and globally unique names. Simplicial identities are checked by
    /// [`crate::sset::validate`].
    pub fn new(
        name: impl Into<String>,
        max_dim: usize,
        generators: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<SimplexRef>>>,
    ) -> Result<Self> {
        if generators.len() != max_dim + 1 || faces.len() != max_dim + 1 {
            return Err(Error::invariant(
                "dimension count",
                format!("expected {} dimensions of generators and faces", max_dim + 1),
            ));
        }
        let mut lookup = HashMap::new();
        for (n, names) in generators.iter().enumerate() {
            if faces[n].len() != names.len() {
                return Err(Error::invariant(
                    "face count",
                    format!("dimension {n} has {} generators but {} face lists", names.len(), faces[n].len()),
                ));
            }
            for (idx, gname) in names.iter().enumerate() {
                if lookup.insert(gname.clone(), GenRef::new(n, idx)).is_some() {
                    return Err(Error::invariant("unique generator names", gname.clone()));
                }
                let fs = &faces[n][idx];
                let expected = if n == 0 { 0 } else { n + 1 };
                if fs.len() != expected {
                    return Err(Error::invariant(
                        "face count",
                        format!("`{gname}` has {} faces, expected {expected}", fs.len()),
                    ));
                }
                for f in fs {
                    let g = f.generator();
                    if f.dim() + 1 != n || g.index >= generators[g.dim].len() {
                        return Err(Error::invariant(
                            "face dimension",
                            format!("a face of `{gname}` is not a valid {}-simplex", n - 1),
                        ));
                    }
                }
            }
        }
        Ok(SSetPresentation {
            name: name.into(),
            max_dim,
            generators,
            faces,
            lookup,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn generators(&self, dim: usize) -> &[String] {
        self.generators.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn generator_count(&self, dim: usize) -> usize {
        self.generators(dim).len()
    }

    pub fn generator_name(&self, g: GenRef) -> &str {
        &self.generators[g.dim][g.index]
    }

    pub fn find(&self, name: &str) -> Option<GenRef> {
        self.lookup.get(name).copied()
    }

    /// Exactly one vertex.
    pub fn is_reduced(&self) -> bool {
        self.generators[0].len() == 1
    }

    /// All generators of dimension at most `max_dim`, by dimension then index.
    pub fn all_generators(&self) -> impl Iterator<Item = GenRef> + '_ {
        self.generators
            .iter()
            .enumerate()
            .flat_map(|(n, gs)| (0..gs.len()).map(move |i| GenRef::new(n, i)))
    }

    pub fn generator_faces(&self, g: GenRef) -> &[SimplexRef] {
        &self.faces[g.dim][g.index]
    }

    pub fn face(&self, x: &SimplexRef, i: usize) -> Result<SimplexRef> {
        face_of(self, x, i)
    }

    /// `∂_0 x, ..., ∂_n x`.
    pub fn faces_of(&self, x: &SimplexRef) -> Vec<SimplexRef> {
        if x.dim() == 0 {
            return Vec::new();
        }
        (0..=x.dim())
            .map(|i| face_of(self, x, i).expect("presentation faces are complete"))
            .collect()
    }

    /// The simplex `(name, degeneracies)` written as `s1s0(name)`.
    pub fn display(&self, x: &SimplexRef) -> String {
        let name = self.generator_name(x.generator());
        if x.is_degenerate() {
            let word: String = x.degeneracies().iter().map(|i| format!("s{i}")).collect();
            format!("{word}({name})")
        } else {
            name.to_string()
        }
    }

    /// All `n`-simplices: nondegenerate ones first, then degeneracies of
    /// lower generators by decreasing generator dimension.
    pub fn enumerate_simplices(&self, n: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for k in (0..=n.min(self.max_dim)).rev() {
            let words = degeneracy_words(k, n);
            for index in 0..self.generators[k].len() {
                for w in &words {
                    out.push(SimplexRef::new(w.clone(), GenRef::new(k, index)).expect("valid degeneracy word"));
                }
            }
        }
        out
    }

    /// `Σ_k #gens(k) · C(n, k)`.
    pub fn simplex_count(&self, n: usize) -> usize {
        (0..=n.min(self.max_dim))
            .map(|k| self.generators[k].len() * binomial(n, k))
            .sum()
    }

    /// The `dim`-truncation (`dim <= max_dim`).
    pub fn truncated(&self, dim: usize) -> Result<SSetPresentation> {
        if dim > self.max_dim {
            return Err(Error::InvalidIndex(format!(
                "cannot truncate `{}` at {dim} above its truncation {}",
                self.name, self.max_dim
            )));
        }
        SSetPresentation::new(
            self.name.clone(),
            dim,
            self.generators[..=dim].to_vec(),
            self.faces[..=dim].to_vec(),
        )
    }

    /// The same complex with generator `i` of dimension `n` moved to position
    /// `perms[n][i]`.
    pub fn permute_generators(&self, perms: &[Vec<usize>]) -> Result<SSetPresentation> {
        let mut generators = self.generators.clone();
        let mut faces = self.faces.clone();
        for n in 0..=self.max_dim {
            let p = &perms[n];
            for (old, &new) in p.iter().enumerate() {
                generators[n][new] = self.generators[n][old].clone();
                faces[n][new] = self.faces[n][old]
                    .iter()
                    .map(|f| {
                        let g = f.generator();
                        f.with_generator(GenRef::new(g.dim, perms[g.dim][g.index]))
                    })
                    .collect();
            }
        }
        SSetPresentation::new(self.name.clone(), self.max_dim, generators, faces)
    }

    /// The subcomplex on the generators `keep[n]` (indices, any order) with
    /// its inclusion, as `inclusion[n][i]` = index in `self` of the `i`-th
    /// generator of the subcomplex. Fails unless `keep` is closed under faces.
    pub fn subcomplex(&self, name: impl Into<String>, keep: &[Vec<usize>]) -> Result<(SSetPresentation, Vec<Vec<usize>>)> {
        let mut inclusion: Vec<Vec<usize>> = (0..=self.max_dim)
            .map(|n| {
                let mut v = keep.get(n).cloned().unwrap_or_default();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        let position: Vec<HashMap<usize, usize>> = inclusion
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, &g)| (g, i)).collect())
            .collect();
        let mut generators = Vec::new();
        let mut faces = Vec::new();
        for n in 0..=self.max_dim {
            let mut gs = Vec::new();
            let mut fs = Vec::new();
            for &g in &inclusion[n] {
                gs.push(self.generators[n][g].clone());
                let mut gf = Vec::new();
                for f in &self.faces[n][g] {
                    let h = f.generator();
                    let Some(&local) = position[h.dim].get(&h.index) else {
                        return Err(Error::invariant(
                            "face closure",
                            format!(
                                "`{}` is kept but its face `{}` is not",
                                self.generators[n][g],
                                self.generator_name(h)
                            ),
                        ));
                    };
                    gf.push(f.with_generator(GenRef::new(h.dim, local)));
                }
                fs.push(gf);
            }
            generators.push(gs);
            faces.push(fs);
        }
        let sub = SSetPresentation::new(name, self.max_dim, generators, faces)?;
        inclusion.truncate(self.max_dim + 1);
        Ok((sub, inclusion))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All simplices of one dimension with their face indices into the table one
/// dimension down.
#[derive(Clone, Debug)]
pub struct SimplexTable {
    pub dim: usize,
    pub simplices: Vec<SimplexRef>,
    pub index: HashMap<SimplexRef, usize>,
    /// `faces[s][i]` is the position of `∂_i` of simplex `s` in the previous table.
    pub faces: Vec<Vec<usize>>,
}

impl SimplexTable {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
}

/// Simplex tables for dimensions `0..=up_to`.
pub fn simplex_tables(x: &SSetPresentation, up_to: usize) -> Vec<SimplexTable> {
    let mut tables: Vec<SimplexTable> = Vec::new();
    for n in 0..=up_to {
        let simplices = x.enumerate_simplices(n);
        let index: HashMap<SimplexRef, usize> = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let faces = if n == 0 {
            vec![Vec::new(); simplices.len()]
        } else {
            let prev = &tables[n - 1].index;
            simplices
                .iter()
                .map(|s| x.faces_of(s).iter().map(|f| prev[f]).collect())
                .collect()
        };
        tables.push(SimplexTable {
            dim: n,
            simplices,
            index,
            faces,
        });
    }
    tables
}
