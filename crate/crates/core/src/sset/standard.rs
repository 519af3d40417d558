use std::collections::HashMap;

use super::presentation::SSetPresentation;
use crate::error::{Error, Result};
use crate::operator::{GenRef, SimplexRef};

/// The standard simplex, its boundary, or one of its horns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Delta(usize),
    Boundary(usize),
    Horn(usize, usize),
}

/// The nondegenerate simplices of the chosen subcomplex of `Δ[n]` as strictly
/// increasing vertex tuples, named like `(0,1)`, presented up to `max_dim`.
pub fn standard_complex(kind: StandardKind, max_dim: usize) -> Result<SSetPresentation> {
    let (n, name) = match kind {
        StandardKind::Delta(n) => (n, format!("Delta[{n}]")),
        StandardKind::Boundary(n) => (n, format!("dDelta[{n}]")),
        StandardKind::Horn(n, k) => {
            if k > n {
                return Err(Error::InvalidIndex(format!("horn index {k} exceeds {n}")));
            }
            (n, format!("Horn[{n},{k}]"))
        }
    };
    let keep = |s: &[usize]| match kind {
        StandardKind::Delta(_) => true,
        StandardKind::Boundary(_) => s.len() <= n,
        // a face of Δ[n] lies in the horn iff it misses some vertex other than k
        StandardKind::Horn(_, k) => (0..=n).any(|v| v != k && !s.contains(&v)),
    };
    let mut generators = Vec::new();
    let mut faces = Vec::new();
    let mut index: HashMap<Vec<usize>, GenRef> = HashMap::new();
    for q in 0..=max_dim {
        let mut gs = Vec::new();
        let mut fs = Vec::new();
        if q <= n {
            for tuple in subsets(n + 1, q + 1).into_iter().filter(|s| keep(s)) {
                let g = GenRef::new(q, gs.len());
                let tuple_faces = if q == 0 {
                    Vec::new()
                } else {
                    (0..=q)
                        .map(|i| {
                            let mut f = tuple.clone();
                            f.remove(i);
                            SimplexRef::nondegenerate(index[&f])
                        })
                        .collect()
                };
                let parts: Vec<String> = tuple.iter().map(usize::to_string).collect();
                gs.push(format!("({})", parts.join(",")));
                fs.push(tuple_faces);
                index.insert(tuple, g);
            }
        }
        generators.push(gs);
        faces.push(fs);
    }
    SSetPresentation::new(name, max_dim, generators, faces)
}

/// `size`-element subsets of `0..n` as increasing tuples, lexicographically.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::validate;

    #[test]
    fn delta_one() {
        let d = standard_complex(StandardKind::Delta(1), 1).unwrap();
        assert_eq!(d.generators(0), ["(0)", "(1)"]);
        assert_eq!(d.generators(1), ["(0,1)"]);
    }

    #[test]
    fn boundary_of_triangle() {
        let b = standard_complex(StandardKind::Boundary(2), 2).unwrap();
        assert_eq!(b.generator_count(0), 3);
        assert_eq!(b.generator_count(1), 3);
        assert_eq!(b.generator_count(2), 0);
        assert!(validate(&b).passed());
    }

    #[test]
    fn inner_horn() {
        let h = standard_complex(StandardKind::Horn(2, 1), 2).unwrap();
        assert_eq!(h.generator_count(0), 3);
        assert_eq!(h.generators(1), ["(0,1)", "(1,2)"]);
        assert_eq!(h.generator_count(2), 0);
        assert!(standard_complex(StandardKind::Horn(2, 3), 2).is_err());
    }

    #[test]
    fn tetrahedron_is_valid() {
        let d = standard_complex(StandardKind::Delta(3), 4).unwrap();
        assert!(validate(&d).passed());
        assert_eq!(d.generator_count(2), 4);
        assert_eq!(d.generator_count(4), 0);
    }
}
