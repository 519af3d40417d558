//! Integral homology, mod-p cohomology and the universal coefficient check,
//! plus group cohomology computed from the bar resolution.

use kancover::groups::FiniteGroup;
use kancover::homology::{boundary_matrices, group_cohomology, integral_homology, mod_p_cohomology, universal_coefficients_check};
use kancover::sset::nerve_of_group;

fn main() -> kancover::Result<()> {
    let nerve = nerve_of_group(&FiniteGroup::cyclic(2), 5)?;
    let c = boundary_matrices(nerve.presentation())?;
    let h = integral_homology(&c);
    print!("{h}");
    for p in [2, 3] {
        let m = mod_p_cohomology(&c, p)?;
        print!("{m}{}", universal_coefficients_check(&h, &m));
    }
    for g in [FiniteGroup::cyclic(3), FiniteGroup::named("Z2xZ2")?, FiniteGroup::symmetric(3)] {
        println!("dim H^i({}; F_2), i = 0..3: {:?}", g.name(), group_cohomology(&g, 2, 3)?);
    }
    Ok(())
}
