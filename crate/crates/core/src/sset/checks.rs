use std::collections::{HashMap, HashSet};

use super::presentation::{simplex_tables, SSetPresentation, SimplexTable};
use crate::error::{Error, Result};
use crate::operator::SimplexRef;
use crate::report::Report;

/// Checks `∂_i ∂_j = ∂_{j-1} ∂_i` for `i < j` on every generator.
pub fn validate(x: &SSetPresentation) -> Report {
    let mut report = Report::new(format!("simplicial identities of `{}`", x.name()));
    for g in x.all_generators().filter(|g| g.dim >= 2) {
        let top = SimplexRef::nondegenerate(g);
        let faces = x.faces_of(&top);
        for j in 1..=g.dim {
            for i in 0..j {
                let lhs = x.face(&faces[j], i);
                let rhs = x.face(&faces[i], j - 1);
                report.check(lhs.is_ok() && lhs == rhs, || {
                    format!("generator `{}`, i = {i}, j = {j}", x.generator_name(g))
                });
            }
        }
    }
    report
}

/// A compatible family of `n + 1` simplices of dimension `n` indexed by
/// `0..=n+1` with slot `k` missing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Horn {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<Option<SimplexRef>>,
}

impl Horn {
    pub fn describe(&self, x: &SSetPresentation) -> String {
        let parts: Vec<String> = self
            .faces
            .iter()
            .map(|f| f.as_ref().map_or("_".to_string(), |s| x.display(s)))
            .collect();
        format!("Λ[{}, {}] = ({})", self.n + 1, self.k, parts.join(", "))
    }
}

/// Calls `visit(k, slots)` for every compatible horn of face dimension `n`,
/// `slots` holding table indices with `usize::MAX` at `k`.
pub(crate) fn for_each_horn(tables: &[SimplexTable], n: usize, mut visit: impl FnMut(usize, &[usize])) {
    let t = &tables[n];
    // by_face[i][f] = simplices whose i-th face is f
    let by_face: Vec<HashMap<usize, Vec<usize>>> = if n == 0 {
        Vec::new()
    } else {
        (0..=n)
            .map(|i| {
                let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
                for (s, fs) in t.faces.iter().enumerate() {
                    m.entry(fs[i]).or_default().push(s);
                }
                m
            })
            .collect()
    };
    let all: Vec<usize> = (0..t.len()).collect();
    for k in 0..=n + 1 {
        let order: Vec<usize> = (0..=n + 1).filter(|&j| j != k).collect();
        let mut slots = vec![usize::MAX; n + 2];
        extend(t, &by_face, &all, n, &order, 0, &mut slots, &mut |s| visit(k, s));
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    t: &SimplexTable,
    by_face: &[HashMap<usize, Vec<usize>>],
    all: &[usize],
    n: usize,
    order: &[usize],
    depth: usize,
    slots: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if depth == order.len() {
        visit(slots);
        return;
    }
    let j = order[depth];
    let assigned = &order[..depth];
    // constraint from the smallest assigned slot i < j: ∂_i x_j = ∂_{j-1} x_i
    let candidates: &[usize] = if n == 0 {
        all
    } else if let Some(&i) = assigned.iter().find(|&&i| i < j) {
        match by_face[i].get(&t.faces[slots[i]][j - 1]) {
            Some(v) => v,
            None => return,
        }
    } else {
        all
    };
    for &c in candidates {
        let ok = n == 0
            || assigned.iter().all(|&i| {
                if i < j {
                    t.faces[c][i] == t.faces[slots[i]][j - 1]
                } else {
                    t.faces[slots[i]][j] == t.faces[c][i - 1]
                }
            });
        if ok {
            slots[j] = c;
            extend(t, by_face, all, n, order, depth + 1, slots, visit);
            slots[j] = usize::MAX;
        }
    }
}

/// Key of an `(n+1)`-simplex with its `k`-th face forgotten.
pub(crate) fn horn_key(faces: &[usize], k: usize) -> Vec<usize> {
    faces
        .iter()
        .enumerate()
        .map(|(i, &f)| if i == k { usize::MAX } else { f })
        .collect()
}

/// Result of a Kan condition search.
#[derive(Clone, Debug)]
pub struct KanReport {
    pub report: Report,
    pub unfillable: Vec<Horn>,
}

impl KanReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Searches all horns with faces of dimension `0..=up_to_dim` for fillers
/// among all simplices one dimension up.
pub fn check_kan(x: &SSetPresentation, up_to_dim: usize) -> Result<KanReport> {
    if up_to_dim + 1 > x.max_dim() {
        return Err(Error::InvalidIndex(format!(
            "horns up to dimension {up_to_dim} need truncation at least {}, `{}` has {}",
            up_to_dim + 1,
            x.name(),
            x.max_dim()
        )));
    }
    let tables = simplex_tables(x, up_to_dim + 1);
    Ok(kan_with_tables(x, &tables, up_to_dim))
}

pub(crate) fn kan_with_tables(x: &SSetPresentation, tables: &[SimplexTable], up_to_dim: usize) -> KanReport {
    let mut report = Report::new(format!("Kan condition for `{}` up to dimension {up_to_dim}", x.name()));
    let mut unfillable = Vec::new();
    for n in 0..=up_to_dim {
        let up = &tables[n + 1];
        let filled: HashSet<(usize, Vec<usize>)> = (0..=n + 1)
            .flat_map(|k| up.faces.iter().map(move |fs| (k, horn_key(fs, k))))
            .collect();
        for_each_horn(tables, n, |k, slots| {
            let ok = filled.contains(&(k, slots.to_vec()));
            let horn = || Horn {
                n,
                k,
                faces: slots
                    .iter()
                    .map(|&s| (s != usize::MAX).then(|| tables[n].simplices[s].clone()))
                    .collect(),
            };
            if !report.check(ok, || format!("unfillable {}", horn().describe(x))) {
                unfillable.push(horn());
            }
        });
    }
    KanReport { report, unfillable }
}

/// Reports pairs of simplices of dimension `1..=up_to_dim` that agree on all
/// faces except the `k`-th and differ there.
pub fn check_minimal(x: &SSetPresentation, up_to_dim: usize) -> Result<Report> {
    if up_to_dim > x.max_dim() {
        return Err(Error::InvalidIndex(format!(
            "minimality up to {up_to_dim} exceeds truncation {} of `{}`",
            x.max_dim(),
            x.name()
        )));
    }
    let tables = simplex_tables(x, up_to_dim);
    let mut report = Report::new(format!("minimality of `{}` up to dimension {up_to_dim}", x.name()));
    for n in 1..=up_to_dim {
        let t = &tables[n];
        for k in 0..=n {
            let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut reported: HashSet<Vec<usize>> = HashSet::new();
            for (s, fs) in t.faces.iter().enumerate() {
                let key = horn_key(fs, k);
                match seen.get(&key) {
                    None => {
                        seen.insert(key, s);
                    }
                    Some(&first) => {
                        let ok = t.faces[first][k] == fs[k];
                        if ok || reported.insert(key) {
                            report.check(ok, || {
                                format!(
                                    "({}, {}) with k = {k}",
                                    x.display(&t.simplices[first]),
                                    x.display(&t.simplices[s])
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::operator::GenRef;
    use crate::sset::{nerve_of_group, standard_complex, StandardKind};

    #[test]
    fn standard_simplex_is_valid() {
        let d2 = standard_complex(StandardKind::Delta(2), 2).unwrap();
        assert!(validate(&d2).passed());
    }

    #[test]
    fn swapped_face_is_named() {
        let nerve3 = nerve_of_group(&FiniteGroup::cyclic(2), 3).unwrap();
        let x = nerve3.presentation();
        let g = x.find("1.1.1").unwrap();
        let mut faces: Vec<Vec<Vec<SimplexRef>>> = (0..=3)
            .map(|n| (0..x.generator_count(n)).map(|i| x.generator_faces(GenRef::new(n, i)).to_vec()).collect())
            .collect();
        faces[3][g.index].swap(0, 1);
        let gens = (0..=3).map(|n| x.generators(n).to_vec()).collect();
        let bad = SSetPresentation::new("bad", 3, gens, faces).unwrap();
        let r = validate(&bad);
        assert!(!r.passed());
        assert!(r.violations[0].contains("`1.1.1`"));
    }

    #[test]
    fn nerve_is_kan_and_minimal() {
        let x = nerve_of_group(&FiniteGroup::cyclic(3), 3).unwrap();
        assert!(check_kan(x.presentation(), 2).unwrap().passed());
        assert!(check_minimal(x.presentation(), 2).unwrap().passed());
    }

    #[test]
    fn interval_is_not_kan() {
        let d1 = standard_complex(StandardKind::Delta(1), 2).unwrap();
        let r = check_kan(&d1, 1).unwrap();
        assert!(!r.passed());
        assert!(!r.unfillable.is_empty());
    }

    #[test]
    fn interval_is_not_minimal() {
        let d1 = standard_complex(StandardKind::Delta(1), 1).unwrap();
        let r = check_minimal(&d1, 1).unwrap();
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v == "((0,1), s0((0))) with k = 0"));
    }

    #[test]
    fn point_is_kan_and_minimal() {
        let pt = standard_complex(StandardKind::Delta(0), 3).unwrap();
        assert!(check_kan(&pt, 2).unwrap().passed());
        assert!(check_minimal(&pt, 3).unwrap().passed());
    }

    #[test]
    fn kan_precondition() {
        let pt = standard_complex(StandardKind::Delta(0), 2).unwrap();
        assert!(check_kan(&pt, 2).is_err());
    }
}
