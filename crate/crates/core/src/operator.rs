//! Composite face/degeneracy operators and Eilenberg–Zilber normal forms.
//!
//! A composite of face and degeneracy operators `X_n -> X_m` corresponds to a
//! monotone map `[m] -> [n]` of finite ordinals. Every such map factors
//! uniquely as a surjection followed by an injection, which on the operator
//! side reads
//!
//! ```text
//! s_{i_1} ... s_{i_k} ∂_{j_1} ... ∂_{j_r},   i_1 > ... > i_k,   j_1 < ... < j_r
//! ```
//!
//! Words are written in composition order: the rightmost symbol is applied
//! first. Normalization evaluates the word on the top simplex `(0, 1, ..., n)`
//! of `Δ[n]` and reads the factorization off the resulting tuple.

use std::fmt;

use crate::error::{Error, Result};

/// A single face or degeneracy symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Face(usize),
    Degeneracy(usize),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Face(i) => write!(f, "d{i}"),
            Symbol::Degeneracy(i) => write!(f, "s{i}"),
        }
    }
}

/// A composite operator in canonical form.
///
/// `degeneracies` is strictly decreasing and `faces` strictly increasing, both
/// listed in composition order, so the faces act first (largest index first)
/// and the degeneracies after them (smallest index first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorWord {
    source_dim: usize,
    target_dim: usize,
    degeneracies: Vec<usize>,
    faces: Vec<usize>,
}

impl OperatorWord {
    pub fn identity(dim: usize) -> Self {
        OperatorWord {
            source_dim: dim,
            target_dim: dim,
            degeneracies: Vec::new(),
            faces: Vec::new(),
        }
    }

    pub fn face(i: usize, source_dim: usize) -> Result<Self> {
        normalize_operator(&[Symbol::Face(i)], source_dim)
    }

    pub fn degeneracy(i: usize, source_dim: usize) -> Result<Self> {
        normalize_operator(&[Symbol::Degeneracy(i)], source_dim)
    }

    /// Builds a word from canonical parts, checking the ordering and index
    /// ranges.
    pub fn from_parts(source_dim: usize, degeneracies: Vec<usize>, faces: Vec<usize>) -> Result<Self> {
        if faces.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!("face indices {faces:?} are not strictly increasing")));
        }
        if degeneracies.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "degeneracy indices {degeneracies:?} are not strictly decreasing"
            )));
        }
        let mut symbols: Vec<Symbol> = degeneracies.iter().map(|&i| Symbol::Degeneracy(i)).collect();
        symbols.extend(faces.iter().map(|&j| Symbol::Face(j)));
        let word = normalize_operator(&symbols, source_dim)?;
        debug_assert_eq!(word.degeneracies, degeneracies);
        debug_assert_eq!(word.faces, faces);
        Ok(word)
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn degeneracies(&self) -> &[usize] {
        &self.degeneracies
    }

    pub fn faces(&self) -> &[usize] {
        &self.faces
    }

    pub fn is_identity(&self) -> bool {
        self.faces.is_empty() && self.degeneracies.is_empty()
    }

    /// The canonical word as a symbol sequence in composition order.
    pub fn symbols(&self) -> Vec<Symbol> {
        self.degeneracies
            .iter()
            .map(|&i| Symbol::Degeneracy(i))
            .chain(self.faces.iter().map(|&j| Symbol::Face(j)))
            .collect()
    }

    /// The monotone map `[target_dim] -> [source_dim]` this operator induces.
    pub fn monotone_map(&self) -> Vec<usize> {
        let mut tuple: Vec<usize> = (0..=self.source_dim).collect();
        for &j in self.faces.iter().rev() {
            tuple.remove(j);
        }
        for &i in self.degeneracies.iter().rev() {
            tuple.insert(i, tuple[i]);
        }
        tuple
    }

    /// Builds the canonical word of a monotone map `[m] -> [source_dim]`.
    pub fn from_monotone_map(values: &[usize], source_dim: usize) -> Result<Self> {
        if values.is_empty() || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidIndex(format!("{values:?} is not a nonempty monotone map")));
        }
        if values.iter().any(|&v| v > source_dim) {
            return Err(Error::InvalidIndex(format!(
                "{values:?} does not land in [0, {source_dim}]"
            )));
        }
        let mut hit = vec![false; source_dim + 1];
        for &v in values {
            hit[v] = true;
        }
        let faces = (0..=source_dim).filter(|&j| !hit[j]).collect();
        Ok(OperatorWord {
            source_dim,
            target_dim: values.len() - 1,
            degeneracies: degeneracies_of_surjection(values),
            faces,
        })
    }

    /// `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &OperatorWord) -> Result<OperatorWord> {
        if inner.target_dim != self.source_dim {
            return Err(Error::InvalidIndex(format!(
                "cannot compose: inner word lands in dimension {} but outer word starts at {}",
                inner.target_dim, self.source_dim
            )));
        }
        let outer = self.monotone_map();
        let inner_map = inner.monotone_map();
        let composite: Vec<usize> = outer.iter().map(|&v| inner_map[v]).collect();
        OperatorWord::from_monotone_map(&composite, inner.source_dim)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.symbols().iter().map(Symbol::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Rewrites an arbitrary symbol sequence (composition order) acting on
/// `source_dim`-simplices into its canonical form.
pub fn normalize_operator(word: &[Symbol], source_dim: usize) -> Result<OperatorWord> {
    let mut tuple: Vec<usize> = (0..=source_dim).collect();
    for symbol in word.iter().rev() {
        let dim = tuple.len() - 1;
        match *symbol {
            Symbol::Face(i) => {
                if dim == 0 || i > dim {
                    return Err(Error::IndexOutOfRange { symbol: "face", index: i, dim });
                }
                tuple.remove(i);
            }
            Symbol::Degeneracy(i) => {
                if i > dim {
                    return Err(Error::IndexOutOfRange { symbol: "degeneracy", index: i, dim });
                }
                tuple.insert(i, tuple[i]);
            }
        }
    }
    OperatorWord::from_monotone_map(&tuple, source_dim)
}

/// The surjection `[k + d] -> [k]` of a degeneracy word (strictly decreasing,
/// composition order) applied to a `k`-simplex.
pub(crate) fn surjection_of_degeneracies(degeneracies: &[usize], base_dim: usize) -> Vec<usize> {
    let mut tuple: Vec<usize> = (0..=base_dim).collect();
    for &i in degeneracies.iter().rev() {
        tuple.insert(i, tuple[i]);
    }
    tuple
}

/// Inverse of [`surjection_of_degeneracies`] on monotone surjections.
pub(crate) fn degeneracies_of_surjection(values: &[usize]) -> Vec<usize> {
    let mut degs: Vec<usize> = values
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == w[1])
        .map(|(i, _)| i)
        .collect();
    degs.reverse();
    degs
}

/// A nondegenerate generator of a presentation: its dimension and its
/// position in that dimension's generator list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenRef {
    pub dim: usize,
    pub index: usize,
}

impl GenRef {
    pub fn new(dim: usize, index: usize) -> Self {
        GenRef { dim, index }
    }
}

/// A simplex in Eilenberg–Zilber normal form: a strictly decreasing
/// degeneracy word applied to a nondegenerate generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    degeneracies: Vec<usize>,
    generator: GenRef,
}

impl SimplexRef {
    pub fn nondegenerate(generator: GenRef) -> Self {
        SimplexRef {
            degeneracies: Vec::new(),
            generator,
        }
    }

    /// Checks that `degeneracies` is a valid strictly decreasing word on a
    /// simplex of the generator's dimension.
    pub fn new(degeneracies: Vec<usize>, generator: GenRef) -> Result<Self> {
        if degeneracies.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "degeneracy indices {degeneracies:?} are not strictly decreasing"
            )));
        }
        // s_{i_1} ... s_{i_k} with i_1 > ... > i_k; the t-th from the right acts
        // on dimension gen.dim + t.
        for (t, &i) in degeneracies.iter().rev().enumerate() {
            let dim = generator.dim + t;
            if i > dim {
                return Err(Error::IndexOutOfRange { symbol: "degeneracy", index: i, dim });
            }
        }
        Ok(SimplexRef { degeneracies, generator })
    }

    pub(crate) fn from_surjection(surjection: &[usize], generator: GenRef) -> Self {
        debug_assert_eq!(*surjection.last().unwrap(), generator.dim);
        SimplexRef {
            degeneracies: degeneracies_of_surjection(surjection),
            generator,
        }
    }

    pub fn generator(&self) -> GenRef {
        self.generator
    }

    pub fn degeneracies(&self) -> &[usize] {
        &self.degeneracies
    }

    pub fn dim(&self) -> usize {
        self.generator.dim + self.degeneracies.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracies.is_empty()
    }

    pub(crate) fn surjection(&self) -> Vec<usize> {
        surjection_of_degeneracies(&self.degeneracies, self.generator.dim)
    }

    /// The same degeneracy word applied to a different generator of the same
    /// dimension.
    pub fn with_generator(&self, generator: GenRef) -> SimplexRef {
        debug_assert_eq!(generator.dim, self.generator.dim);
        SimplexRef {
            degeneracies: self.degeneracies.clone(),
            generator,
        }
    }

    /// `s_i` applied to this simplex.
    pub fn degeneracy(&self, i: usize) -> Result<SimplexRef> {
        let dim = self.dim();
        if i > dim {
            return Err(Error::IndexOutOfRange { symbol: "degeneracy", index: i, dim });
        }
        let mut surj = self.surjection();
        surj.insert(i, surj[i]);
        Ok(SimplexRef::from_surjection(&surj, self.generator))
    }

    /// A strictly decreasing degeneracy word applied to this simplex.
    pub fn degenerate_by(&self, degeneracies: &[usize]) -> Result<SimplexRef> {
        let outer = SimplexRef::new(degeneracies.to_vec(), GenRef::new(self.dim(), 0))?;
        let tau = outer.surjection();
        let sigma = self.surjection();
        let combined: Vec<usize> = tau.iter().map(|&v| sigma[v]).collect();
        Ok(SimplexRef::from_surjection(&combined, self.generator))
    }

    /// Positions `i` with `x = s_i y` for some `y`, increasing.
    pub fn degeneracy_positions(&self) -> Vec<usize> {
        let mut d = self.degeneracies.clone();
        d.reverse();
        d
    }

    /// Removes the degeneracies at the given positions, which must all be
    /// among [`Self::degeneracy_positions`].
    pub(crate) fn collapse(&self, positions: &[usize]) -> SimplexRef {
        let sigma = self.surjection();
        let kept: Vec<usize> = sigma
            .iter()
            .enumerate()
            .filter(|(j, _)| *j == 0 || !positions.contains(&(j - 1)))
            .map(|(_, &v)| v)
            .collect();
        SimplexRef::from_surjection(&kept, self.generator)
    }
}

/// Access to the faces of nondegenerate generators.
pub trait FaceLookup {
    /// `∂_i` of the generator `g`, for `g.dim >= 1` and `i <= g.dim`.
    fn generator_face(&self, g: GenRef, i: usize) -> Result<SimplexRef>;
}

/// `∂_i x` in normal form.
pub fn face_of(lookup: &impl FaceLookup, x: &SimplexRef, i: usize) -> Result<SimplexRef> {
    let n = x.dim();
    if n == 0 || i > n {
        return Err(Error::IndexOutOfRange { symbol: "face", index: i, dim: n });
    }
    let mut tau = x.surjection();
    let removed = tau.remove(i);
    if tau.contains(&removed) {
        return Ok(SimplexRef::from_surjection(&tau, x.generator));
    }
    let h = lookup.generator_face(x.generator, removed)?;
    let rho = h.surjection();
    let combined: Vec<usize> = tau
        .iter()
        .map(|&v| rho[if v > removed { v - 1 } else { v }])
        .collect();
    Ok(SimplexRef::from_surjection(&combined, h.generator))
}

/// Applies a canonical operator word to a simplex.
pub fn apply_operator(lookup: &impl FaceLookup, word: &OperatorWord, x: &SimplexRef) -> Result<SimplexRef> {
    if word.source_dim != x.dim() {
        return Err(Error::InvalidIndex(format!(
            "operator acts on dimension {} but the simplex has dimension {}",
            word.source_dim,
            x.dim()
        )));
    }
    let theta = word.monotone_map();
    let sigma = x.surjection();
    let composite: Vec<usize> = theta.iter().map(|&v| sigma[v]).collect();

    let k = x.generator.dim;
    let mut hit = vec![false; k + 1];
    for &v in &composite {
        hit[v] = true;
    }
    let mut current = SimplexRef::nondegenerate(x.generator);
    for j in (0..=k).rev().filter(|&j| !hit[j]) {
        current = face_of(lookup, &current, j)?;
    }
    // rank of each hit vertex among the hit ones
    let mut rank = vec![0; k + 1];
    let mut r = 0;
    for v in 0..=k {
        rank[v] = r;
        if hit[v] {
            r += 1;
        }
    }
    let rho = current.surjection();
    let combined: Vec<usize> = composite.iter().map(|&v| rho[rank[v]]).collect();
    Ok(SimplexRef::from_surjection(&combined, current.generator))
}

/// All strictly decreasing degeneracy words taking a `k`-simplex to an
/// `n`-simplex, in lexicographic order of their surjections.
pub fn degeneracy_words(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    // A word is determined by the set of positions i in [0, n-1] with
    // σ(i) = σ(i+1); any (n-k)-subset occurs.
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(start: usize, n: usize, need: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if need == 0 {
            let mut w = chosen.clone();
            w.reverse();
            out.push(w);
            return;
        }
        for i in start..n {
            if n - i < need {
                break;
            }
            chosen.push(i);
            rec(i + 1, n, need - 1, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, n - k, &mut chosen, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::{Degeneracy as S, Face as D};

    #[test]
    fn face_after_same_degeneracy_is_identity() {
        let w = normalize_operator(&[D(1), S(1)], 1).unwrap();
        assert!(w.is_identity());
        assert_eq!(w.source_dim(), 1);
        assert_eq!(w.target_dim(), 1);
    }

    #[test]
    fn lower_face_passes_degeneracy() {
        let w = normalize_operator(&[D(0), S(1)], 1).unwrap();
        assert_eq!(w.symbols(), vec![S(0), D(0)]);
    }

    #[test]
    fn degeneracies_reorder() {
        let w = normalize_operator(&[S(0), S(0)], 0).unwrap();
        assert_eq!(w.symbols(), vec![S(1), S(0)]);
        assert_eq!(w.target_dim(), 2);
    }

    #[test]
    fn out_of_range_symbols_are_rejected() {
        assert!(matches!(
            normalize_operator(&[D(3)], 2),
            Err(Error::IndexOutOfRange { index: 3, dim: 2, .. })
        ));
        assert!(matches!(
            normalize_operator(&[D(0)], 0),
            Err(Error::IndexOutOfRange { symbol: "face", .. })
        ));
        // s_2 after d_0 acts on dimension 1
        assert!(normalize_operator(&[S(2), D(0)], 2).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        let w = normalize_operator(&[D(0), S(2), D(3), S(0), S(1)], 3).unwrap();
        let again = normalize_operator(&w.symbols(), 3).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn from_parts_rejects_bad_order() {
        assert!(OperatorWord::from_parts(3, vec![0, 1], vec![]).is_err());
        assert!(OperatorWord::from_parts(3, vec![], vec![2, 1]).is_err());
        let w = OperatorWord::from_parts(3, vec![2, 0], vec![1, 3]).unwrap();
        assert_eq!(w.target_dim(), 3);
    }

    #[test]
    fn composition_matches_concatenation() {
        let a = normalize_operator(&[S(1), D(0)], 2).unwrap();
        let b = normalize_operator(&[D(2), S(0)], 2).unwrap();
        let composed = a.compose(&b).unwrap();
        let direct = normalize_operator(&[S(1), D(0), D(2), S(0)], 2).unwrap();
        assert_eq!(composed, direct);
    }

    #[test]
    fn degeneracy_word_counts_are_binomial() {
        assert_eq!(degeneracy_words(0, 2), vec![vec![1, 0]]);
        assert_eq!(degeneracy_words(1, 3).len(), 3);
        assert_eq!(degeneracy_words(2, 4).len(), 6);
        assert_eq!(degeneracy_words(3, 3), vec![Vec::<usize>::new()]);
        assert!(degeneracy_words(3, 2).is_empty());
    }

    #[test]
    fn simplex_ref_rejects_invalid_words() {
        let g = GenRef::new(0, 0);
        assert!(SimplexRef::new(vec![1, 0], g).is_ok());
        assert!(SimplexRef::new(vec![0, 1], g).is_err());
        assert!(SimplexRef::new(vec![2, 0], g).is_err());
    }
}
