use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Order bound above which [`automorphisms`] refuses to search.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 24;

/// A finite group given by its multiplication table.
///
/// Elements are referenced by their index into `elements`; names are only
/// used for input and output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major table (`table[a][b]` is the index of
    /// `a·b`) and verifies the group axioms.
    pub fn from_table(name: impl Into<String>, elements: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::invariant("nonempty", "a group has at least one element"));
        }
        let mut seen = BTreeSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(Error::invariant("unique element names", format!("`{e}` repeats")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::invariant("square table", format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::invariant("closure", "table entry out of range"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::invariant(
                            "associativity",
                            format!("({}·{})·{} != {}·({}·{})", elements[a], elements[b], elements[c], elements[a], elements[b], elements[c]),
                        ));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::invariant("identity", "no two-sided identity element"))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::invariant("inverses", format!("`{}` has no inverse", elements[a])))?;
            inverses.push(inv);
        }
        Ok(FiniteGroup {
            name: name.into(),
            elements,
            table,
            identity,
            inverses,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order zero");
        let elements = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let name = if n == 1 { "1".to_string() } else { format!("Z{n}") };
        Self::from_table(name, elements, table).expect("cyclic group table")
    }

    /// `A × B` with elements `(a,b)` in row-major order.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let elements = (0..na * nb)
            .map(|i| format!("({},{})", a.elements[i / nb], b.elements[i % nb]))
            .collect();
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(format!("{}x{}", a.name, b.name), elements, table).expect("product group table")
    }

    /// The symmetric group on `n` letters; elements are permutations in
    /// one-line notation, lexicographically ordered (so the identity is first).
    /// The product `στ` is "apply τ, then σ".
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n), "symmetric group size out of supported range");
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let elements = perms
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>())
            .collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..n).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        Self::from_table(format!("S{n}"), elements, table).expect("symmetric group table")
    }

    /// The dihedral group of order `2n`: elements `r^i` and `s r^i`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let elements = (0..2 * n)
            .map(|x| if x < n { format!("r{}", x) } else { format!("sr{}", x - n) })
            .collect();
        // (s^a r^i)(s^b r^j) = s^{a+b} r^{(-1)^b i + j}
        let table = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (a, i) = (x / n, x % n);
                        let (b, j) = (y / n, y % n);
                        let rot = if b == 0 { (i + j) % n } else { (n - i + j) % n };
                        ((a + b) % 2) * n + rot
                    })
                    .collect()
            })
            .collect();
        Self::from_table(format!("D{n}"), elements, table).expect("dihedral group table")
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // unit index 0..4 = 1,i,j,k; sign bit
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let names = ["1", "i", "j", "k"];
        let elements = (0..8)
            .map(|x| format!("{}{}", if x >= 4 { "-" } else { "" }, names[x % 4]))
            .collect();
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (u, neg) = UNIT[x % 4][y % 4];
                        let sign = neg ^ (x >= 4) ^ (y >= 4);
                        u + if sign { 4 } else { 0 }
                    })
                    .collect()
            })
            .collect();
        Self::from_table("Q8", elements, table).expect("quaternion group table")
    }

    /// Parses a builtin group name: `1`, `Zn`, `Sn`, `Dn`, `Q8`, or products
    /// such as `Z2xZ2`.
    pub fn named(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.contains('x') {
            let mut parts = spec.split('x');
            let first = Self::named(parts.next().unwrap())?;
            return parts.try_fold(first, |acc, p| Ok(Self::direct_product(&acc, &Self::named(p)?)));
        }
        let bad = || Error::InvalidIndex(format!("unknown group `{spec}`"));
        if spec == "1" || spec == "trivial" {
            return Ok(Self::trivial());
        }
        if spec == "Q8" {
            return Ok(Self::quaternion());
        }
        let (kind, n) = spec.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "Z" if n >= 1 => Ok(Self::cyclic(n)),
            "S" if (1..=5).contains(&n) => Ok(Self::symmetric(n)),
            "D" if n >= 1 => Ok(Self::dihedral(n)),
            _ => Err(bad()),
        }
    }

    /// One representative of every isomorphism class of groups of order at
    /// most `max_order` (supported up to 8).
    pub fn small_groups(max_order: usize) -> Vec<FiniteGroup> {
        assert!(max_order <= 8, "small group list only goes up to order 8");
        let names: &[&str] = &[
            "1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "D4", "Q8",
        ];
        names
            .iter()
            .map(|n| Self::named(n).unwrap())
            .filter(|g| g.order() <= max_order)
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether the order is a power of the prime `p` (the trivial group counts).
    pub fn is_p_group(&self, p: usize) -> bool {
        let mut n = self.order();
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// The subgroup generated by `gens`, as a sorted list of element indices.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&x| seen[x]).collect()
    }

    /// A small generating set, chosen greedily by element order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.order()).filter(|&a| a != self.identity).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in by_order {
            if span.len() == self.order() {
                break;
            }
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    /// Whether `elements` is closed under multiplication and inverses.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    /// The subgroup on `elements` as a group in its own right, together with
    /// the inclusion (new index -> old index).
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elements) {
            return Err(Error::invariant("subgroup", "element set is not closed"));
        }
        let mut inclusion: Vec<usize> = elements.to_vec();
        inclusion.sort_unstable();
        inclusion.dedup();
        let pos = |x: usize| inclusion.binary_search(&x).unwrap();
        let names = inclusion.iter().map(|&x| self.elements[x].clone()).collect();
        let table = inclusion
            .iter()
            .map(|&a| inclusion.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let group = FiniteGroup::from_table(format!("{}<sub>", self.name), names, table)?;
        Ok((group, inclusion))
    }

    /// Extends an assignment of generator images to a homomorphism into
    /// `target`, if one exists.
    pub fn extend_homomorphism(&self, gens: &[usize], images: &[usize], target: &FiniteGroup) -> Option<Vec<usize>> {
        let mut map: Vec<Option<usize>> = vec![None; self.order()];
        map[self.identity] = Some(target.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x].unwrap();
            for (&g, &fg) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let fy = target.mul(fx, fg);
                match map[y] {
                    None => {
                        map[y] = Some(fy);
                        queue.push_back(y);
                    }
                    Some(v) if v != fy => return None,
                    _ => {}
                }
            }
        }
        let map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        let hom = (0..self.order()).all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])));
        hom.then_some(map)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A group automorphism stored as the image of every element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: Vec<usize>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            images: (0..order).collect(),
        }
    }

    /// Wraps an element map after checking that it is a bijective
    /// homomorphism of `group`.
    pub fn new(group: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let a = Automorphism { images };
        if a.is_automorphism_of(group) {
            Ok(a)
        } else {
            Err(Error::NotAnAction(format!("map is not an automorphism of {}", group.name())))
        }
    }

    pub fn is_automorphism_of(&self, group: &FiniteGroup) -> bool {
        let n = group.order();
        if self.images.len() != n || self.images.iter().any(|&x| x >= n) {
            return false;
        }
        let mut hit = vec![false; n];
        for &x in &self.images {
            hit[x] = true;
        }
        hit.iter().all(|&h| h)
            && (0..n).all(|a| (0..n).all(|b| self.images[group.mul(a, b)] == group.mul(self.images[a], self.images[b])))
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut images = vec![0; self.images.len()];
        for (a, &b) in self.images.iter().enumerate() {
            images[b] = a;
        }
        Automorphism { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &b)| a == b)
    }
}

/// All automorphisms of `group` by exhaustive search over images of a
/// generating set. The identity comes first; the rest follow in
/// lexicographic order of their element maps.
pub fn automorphisms(group: &FiniteGroup, bound: usize) -> Result<Vec<Automorphism>> {
    if group.order() > bound {
        return Err(Error::BoundExceeded(format!(
            "automorphism search limited to order {bound}, group has order {}",
            group.order()
        )));
    }
    let mut found: Vec<Automorphism> = isomorphisms_between(group, group)
        .into_iter()
        .map(|images| Automorphism { images })
        .collect();
    found.sort();
    let id = found.iter().position(Automorphism::is_identity).expect("identity automorphism");
    let identity = found.remove(id);
    found.insert(0, identity);
    Ok(found)
}

/// An isomorphism `a -> b` (as an element map), if one exists.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = a.generating_set();
    let orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let mut images = Vec::with_capacity(gens.len());
    search_isos(a, b, &gens, &orders, &mut images, &mut |map| Some(map.to_vec()))
}

fn isomorphisms_between(a: &FiniteGroup, b: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = a.generating_set();
    let orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search_isos::<()>(a, b, &gens, &orders, &mut images, &mut |map| {
        out.push(map.to_vec());
        None
    });
    out
}

fn search_isos<T>(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    images: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if images.len() == gens.len() {
        let map = a.extend_homomorphism(gens, images, b)?;
        let mut hit = vec![false; b.order()];
        for &x in &map {
            hit[x] = true;
        }
        return if hit.iter().all(|&h| h) { visit(&map) } else { None };
    }
    let want = orders[images.len()];
    for candidate in 0..b.order() {
        if b.element_order(candidate) != want {
            continue;
        }
        images.push(candidate);
        let r = search_isos(a, b, gens, orders, images, visit);
        images.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// A homomorphism between finite groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: FiniteGroup, target: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        let n = source.order();
        if images.len() != n || images.iter().any(|&x| x >= target.order()) {
            return Err(Error::invariant("homomorphism", "image list has the wrong shape"));
        }
        for a in 0..n {
            for b in 0..n {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::invariant(
                        "homomorphism",
                        format!(
                            "f({}·{}) != f({})·f({})",
                            source.element_name(a),
                            source.element_name(b),
                            source.element_name(a),
                            source.element_name(b)
                        ),
                    ));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    /// The reduction `Z/m -> Z/n` for `n | m`.
    pub fn reduction(m: usize, n: usize) -> Result<Self> {
        if n == 0 || !m.is_multiple_of(n) {
            return Err(Error::InvalidIndex(format!("{n} does not divide {m}")));
        }
        Self::new(FiniteGroup::cyclic(m), FiniteGroup::cyclic(n), (0..m).map(|a| a % n).collect())
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            images: (0..group.order()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&a| self.images[a] == self.target.identity()).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &x in &self.images {
            hit[x] = true;
        }
        hit.iter().all(|&h| h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_associative_table_is_rejected() {
        // Z/3 with one entry swapped
        let mut table: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        table[1][1] = 1;
        table[1][2] = 2;
        let err = FiniteGroup::from_table("bad", vec!["0".into(), "1".into(), "2".into()], table).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation { ref invariant, .. } if invariant == "associativity"));
    }

    #[test]
    fn small_group_orders() {
        let orders: Vec<usize> = FiniteGroup::small_groups(6).iter().map(FiniteGroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6]);
        assert_eq!(FiniteGroup::small_groups(8).len(), 14);
    }

    #[test]
    fn named_groups() {
        assert!(!FiniteGroup::named("S3").unwrap().is_abelian());
        assert!(FiniteGroup::named("Z2xZ3").unwrap().is_abelian());
        assert!(!FiniteGroup::named("Q8").unwrap().is_abelian());
        assert!(!FiniteGroup::named("D4").unwrap().is_abelian());
        assert!(FiniteGroup::named("W9").is_err());
        assert!(find_isomorphism(&FiniteGroup::named("Z2xZ3").unwrap(), &FiniteGroup::cyclic(6)).is_some());
        assert!(find_isomorphism(&FiniteGroup::named("D4").unwrap(), &FiniteGroup::quaternion()).is_none());
    }

    #[test]
    fn automorphism_counts() {
        let count = |name: &str| automorphisms(&FiniteGroup::named(name).unwrap(), DEFAULT_AUTOMORPHISM_BOUND).unwrap().len();
        assert_eq!(count("Z3"), 2);
        assert_eq!(count("Z2xZ2"), 6);
        assert_eq!(count("1"), 1);
        assert_eq!(count("S3"), 6);
        assert_eq!(count("Z8"), 4);
        assert_eq!(count("Q8"), 24);
    }

    #[test]
    fn automorphisms_are_closed_under_composition() {
        let g = FiniteGroup::named("Z2xZ2").unwrap();
        let auts = automorphisms(&g, DEFAULT_AUTOMORPHISM_BOUND).unwrap();
        assert!(auts[0].is_identity());
        for a in &auts {
            for b in &auts {
                assert!(auts.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn automorphism_bound_is_enforced() {
        let g = FiniteGroup::cyclic(30);
        assert!(matches!(automorphisms(&g, 24), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn subgroup_extraction() {
        let g = FiniteGroup::named("Z2xZ2").unwrap();
        let diag = [g.find("(0,0)").unwrap(), g.find("(1,1)").unwrap()];
        let (sub, inc) = g.subgroup(&diag).unwrap();
        assert_eq!(sub.order(), 2);
        assert_eq!(inc, vec![0, 3]);
        assert!(g.subgroup(&[0, 1, 2]).is_err());
    }

    #[test]
    fn reduction_hom_kernel() {
        let r = GroupHom::reduction(6, 2).unwrap();
        assert_eq!(r.kernel(), vec![0, 2, 4]);
        assert!(r.is_surjective());
        assert!(GroupHom::reduction(6, 4).is_err());
    }
}
