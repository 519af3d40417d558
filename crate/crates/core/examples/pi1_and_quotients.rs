//! Fundamental group presentations and quotient maps onto finite groups.

use kancover::groups::{FiniteGroup, GroupHom};
use kancover::operator::{GenRef, SimplexRef};
use kancover::pi_one::{pi1_presentation, QuotientMap};
use kancover::sset::{nerve_of_group, standard_complex, StandardKind};

fn main() -> kancover::Result<()> {
    let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 2)?;
    let pi = pi1_presentation(nerve.presentation())?;
    print!("{pi}");

    let z4 = nerve_of_group(&FiniteGroup::cyclic(4), 2)?;
    let q = QuotientMap::for_nerve(&z4, &GroupHom::reduction(4, 2)?)?;
    for i in 0..z4.presentation().generator_count(1) {
        let e = SimplexRef::nondegenerate(GenRef::new(1, i));
        println!("edge {} -> {}", z4.presentation().display(&e), q.group().element_name(q.edge_image(&e)));
    }

    // presentations need a single vertex
    let circle = standard_complex(StandardKind::Boundary(2), 2)?;
    match pi1_presentation(&circle) {
        Ok(p) => print!("{p}"),
        Err(e) => println!("`{}`: {e}", circle.name()),
    }
    Ok(())
}
