//! Normal forms of face/degeneracy words and their action on simplices.

use kancover::operator::{apply_operator, normalize_operator, Symbol};
use kancover::sset::{nerve_of_group, standard_complex, StandardKind};
use kancover::groups::FiniteGroup;

fn main() -> kancover::Result<()> {
    use Symbol::{Degeneracy as S, Face as D};
    let words: [(&[Symbol], usize); 5] = [
        (&[D(1), S(1)], 1),
        (&[D(0), S(1)], 1),
        (&[S(0), S(0)], 0),
        (&[D(0), D(0)], 2),
        (&[D(0), S(2), D(3), S(0), S(1)], 3),
    ];
    for (word, n) in words {
        let raw: Vec<String> = word.iter().map(Symbol::to_string).collect();
        let w = normalize_operator(word, n)?;
        println!("{:<16} on X_{n} -> X_{}: {}", raw.join(" "), w.target_dim(), if w.is_identity() { "id".to_string() } else { w.to_string() });
    }

    let delta = standard_complex(StandardKind::Delta(3), 3)?;
    let top = delta.enumerate_simplices(3).into_iter().find(|x| !x.is_degenerate()).unwrap();
    let w = normalize_operator(&[S(0), D(2), D(3)], 3)?;
    println!("({w}) applied to {} = {}", delta.display(&top), delta.display(&apply_operator(&delta, &w, &top)?));

    let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 3)?;
    let x = nerve.simplex_of_tuple(&[1, 2]);
    let s = normalize_operator(&[S(1)], 2)?;
    let y = apply_operator(nerve.presentation(), &s, &x)?;
    println!("s1 of {} is {} with tuple {:?}", nerve.presentation().display(&x), nerve.presentation().display(&y), nerve.tuple_of(&y));
    Ok(())
}
