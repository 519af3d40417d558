//! Regular covers along quotient maps: validation, covering checks, deck
//! transformations and the homology of the total space.

use kancover::covering::{build_cover, verify_covering};
use kancover::groups::{FiniteGroup, GroupHom};
use kancover::homology::{boundary_matrices, integral_homology};
use kancover::pi_one::QuotientMap;
use kancover::sset::{nerve_of_group, validate};

fn main() -> kancover::Result<()> {
    for (n, m) in [(4, 2), (6, 2)] {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(n), 4)?;
        let q = QuotientMap::for_nerve(&nerve, &GroupHom::reduction(n, m)?)?;
        let c = build_cover(nerve.presentation(), &q)?;
        print!("{}", validate(c.total()));
        print!("{}", verify_covering(&c, 2)?);
        let h = integral_homology(&boundary_matrices(c.total())?);
        println!("H_1 of `{}` = {}", c.total().name(), h.degrees[1]);
    }

    let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 4)?;
    let c = build_cover(nerve.presentation(), &QuotientMap::universal_for_nerve(&nerve)?)?;
    let b = c.total().enumerate_simplices(1)[1].clone();
    for beta in 0..c.group().order() {
        println!("{} . {} = {}", c.total().display(&b), c.group().element_name(beta), c.total().display(&c.deck_apply(&b, beta)));
    }
    print!("{}", integral_homology(&boundary_matrices(c.total())?));
    Ok(())
}
