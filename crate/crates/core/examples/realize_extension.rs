//! Realizing a split extension `Q ⋊ G` by a free `Q`-action on a product of
//! copies of a cover, and recovering the extension from it.

use kancover::groups::find_isomorphism;
use kancover::theorems::instances::Instance;
use kancover::theorems::realize_extension;

fn main() -> kancover::Result<()> {
    let z2 = kancover::groups::FiniteGroup::cyclic(2);
    for inst in [Instance::trivial_on_nerve(&z2, &z2, 2)?, Instance::inversion_on_z3(2)?] {
        let l = inst.lifted()?;
        let real = realize_extension(l.group(), l.induced(), inst.nerve.presentation(), &inst.quotient)?;
        let y = real.y.presentation();
        println!("== {}", inst.name);
        println!("Y = `{}`: {} vertices, {} edges", y.name(), y.generator_count(0), y.generator_count(1));
        println!("Y/Q: {} vertices, {} edges", real.quotient.generator_count(0), real.quotient.generator_count(1));
        println!(
            "recovered group of order {} (abelian: {}), isomorphic to {}: {}",
            real.recovered.order(),
            real.recovered.is_abelian(),
            real.l.group().name(),
            find_isomorphism(&real.recovered, real.l.group()).is_some()
        );
        print!("{}", real.report);
    }
    Ok(())
}
