//! Nerves of small groups: generator counts, validation, the Kan and
//! minimality checks, and a horn that has no filler in `∂Δ[2]`.

use kancover::groups::FiniteGroup;
use kancover::sset::{check_kan, check_minimal, nerve_of_group, standard_complex, validate, StandardKind};

fn main() -> kancover::Result<()> {
    for g in FiniteGroup::small_groups(6) {
        let nerve = nerve_of_group(&g, 4)?;
        let x = nerve.presentation();
        let counts: Vec<usize> = (0..=4).map(|n| x.generator_count(n)).collect();
        let ok = validate(x).passed() && check_kan(x, 2)?.passed() && check_minimal(x, 2)?.passed();
        println!("{:<8} counts {:?}  valid, Kan, minimal: {ok}", g.name(), counts);
    }
    let boundary = standard_complex(StandardKind::Boundary(2), 3)?;
    let kan = check_kan(&boundary, 1)?;
    println!("`{}`: {} unfillable horns, for example {}", boundary.name(), kan.unfillable.len(), kan.unfillable[0].describe(&boundary));
    Ok(())
}
