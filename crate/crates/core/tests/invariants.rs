//! Property tests for the structural invariants.

use std::path::Path;

use proptest::prelude::*;

use kancover::covering::{build_cover, crossed_hom_at, lift_action};
use kancover::groups::{find_isomorphism, Automorphism, FiniteGroup};
use kancover::homology::{invariant_factors, rank_mod_p};
use kancover::io;
use kancover::operator::{normalize_operator, Symbol};
use kancover::pi_one::QuotientMap;
use kancover::sset::{nerve_of_group, tuple_face, SimplicialAction};

/// A word valid on `X_source`, in composition order.
fn word() -> impl Strategy<Value = (Vec<Symbol>, usize)> {
    (0usize..=6, prop::collection::vec((any::<bool>(), 0usize..16), 0..10)).prop_map(|(source, raw)| {
        let mut dim = source;
        let mut applied = Vec::new();
        for (face, k) in raw {
            if face && dim > 0 {
                applied.push(Symbol::Face(k % (dim + 1)));
                dim -= 1;
            } else {
                applied.push(Symbol::Degeneracy(k % (dim + 1)));
                dim += 1;
            }
        }
        applied.reverse();
        (applied, source)
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #[test]
    fn normal_form_is_idempotent((w, n) in word()) {
        let once = normalize_operator(&w, n).unwrap();
        prop_assert_eq!(normalize_operator(&once.symbols(), n).unwrap(), once);
    }

    #[test]
    fn composition_is_concatenation((w, n) in word(), (v, _) in word()) {
        let inner = normalize_operator(&w, n).unwrap();
        if let Ok(outer) = normalize_operator(&v, inner.target_dim()) {
            let mut joined = v.clone();
            joined.extend(&w);
            prop_assert_eq!(outer.compose(&inner).unwrap(), normalize_operator(&joined, n).unwrap());
        }
    }

    #[test]
    fn monotone_maps_round_trip((w, n) in word()) {
        let op = normalize_operator(&w, n).unwrap();
        let back = kancover::operator::OperatorWord::from_monotone_map(&op.monotone_map(), n).unwrap();
        prop_assert_eq!(back, op);
    }

    #[test]
    fn invariant_factors_ignore_permutations(m in matrix(), seed in any::<u64>()) {
        let mut rows = m.clone();
        let k = rows.len();
        rows.rotate_left((seed as usize) % k);
        let cols = rows[0].len();
        let shift = (seed as usize / 7) % cols;
        for r in &mut rows {
            r.rotate_left(shift);
        }
        prop_assert_eq!(invariant_factors(&m), invariant_factors(&rows));
    }

    #[test]
    fn transpose_has_the_same_factors(m in matrix()) {
        let t: Vec<Vec<i64>> = (0..m[0].len()).map(|j| m.iter().map(|r| r[j]).collect()).collect();
        prop_assert_eq!(invariant_factors(&m), invariant_factors(&t));
    }

    #[test]
    fn rank_mod_p_counts_units(m in matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let p_big = num_bigint::BigInt::from(p);
        let units = invariant_factors(&m).iter().filter(|d| (*d % &p_big) != num_bigint::BigInt::from(0)).count();
        prop_assert_eq!(rank_mod_p(&m, p), units);
    }

    #[test]
    fn nerve_faces_satisfy_identities(g in 0usize..8, tuple in prop::collection::vec(0usize..6, 3..6)) {
        let group = &FiniteGroup::small_groups(6)[g];
        let t: Vec<usize> = tuple.iter().map(|&a| a % group.order()).collect();
        let n = t.len();
        for j in 1..=n {
            for i in 0..j {
                let lhs = tuple_face(group, &tuple_face(group, &t, j), i);
                let rhs = tuple_face(group, &tuple_face(group, &t, i), j - 1);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn relabelled_groups_are_isomorphic(g in 0usize..8, shift in 1usize..6) {
        let group = &FiniteGroup::small_groups(6)[g];
        let n = group.order();
        // conjugate the table by a rotation of the non-identity labels
        let perm: Vec<usize> = (0..n).map(|a| if a == 0 || n == 1 { a } else { 1 + (a - 1 + shift) % (n - 1) }).collect();
        let mut inv = vec![0; n];
        for (a, &b) in perm.iter().enumerate() {
            inv[b] = a;
        }
        let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| perm[group.mul(inv[x], inv[y])]).collect()).collect();
        let names: Vec<String> = (0..n).map(|a| format!("e{a}")).collect();
        let relabelled = FiniteGroup::from_table("relabelled", names, table).unwrap();
        prop_assert!(find_isomorphism(group, &relabelled).is_some());
    }

    #[test]
    fn complex_files_round_trip(g in 0usize..8, dim in 1usize..4) {
        let group = &FiniteGroup::small_groups(6)[g];
        let x = nerve_of_group(group, dim).unwrap().into_presentation();
        let file = io::complex_file(&x);
        let text = io::to_canonical(&file);
        let parsed: io::ComplexFile = serde_json::from_str(&text).unwrap();
        let back = io::complex_from_file(Path::new("."), &parsed).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(io::to_canonical(&io::complex_file(&back)), text);
    }

    #[test]
    fn crossed_relation_on_random_simplices(inverse in any::<bool>(), n in 0usize..4, pick in any::<usize>(), alpha in 0usize..3) {
        let z3 = FiniteGroup::cyclic(3);
        let z2 = FiniteGroup::cyclic(2);
        let star = if inverse { vec![0, 2, 1] } else { vec![0, 1, 2] };
        let phi = [Automorphism::identity(3), Automorphism::new(&z3, star).unwrap()];
        let nerve = nerve_of_group(&z3, 3).unwrap();
        let c = build_cover(nerve.presentation(), &QuotientMap::universal_for_nerve(&nerve).unwrap()).unwrap();
        let a = SimplicialAction::on_nerve(&nerve, &z2, &phi).unwrap();
        let l = lift_action(&c, &a).unwrap();
        let simplices = c.total().enumerate_simplices(n);
        let b = &simplices[pick % simplices.len()];
        let rb = crossed_hom_at(&c, &l, b);
        prop_assert!(rb.check_relation(&z2, &z3).is_ok());
        let rba = crossed_hom_at(&c, &l, &c.deck_apply(b, alpha));
        for &g in rb.domain() {
            let expected = z3.mul(z3.mul(z3.inv(alpha), rb.value(g).unwrap()), l.induced()[g].apply(alpha));
            prop_assert_eq!(rba.value(g), Some(expected));
        }
    }
}
