//! Cartesian products: `Δ[1] × Δ[1]` and the product of two nerves.

use kancover::groups::FiniteGroup;
use kancover::sset::{cartesian_product, nerve_of_group, standard_complex, validate, StandardKind};

fn main() -> kancover::Result<()> {
    let i = standard_complex(StandardKind::Delta(1), 2)?;
    let square = cartesian_product(&i, &i)?;
    for n in 0..=2 {
        let names: Vec<&str> = square.generators(n).iter().map(String::as_str).collect();
        println!("dim {n}: {}", names.join("  "));
    }
    println!("{}", validate(&square));

    let a = nerve_of_group(&FiniteGroup::cyclic(2), 3)?;
    let b = nerve_of_group(&FiniteGroup::cyclic(3), 3)?;
    let p = cartesian_product(a.presentation(), b.presentation())?;
    let counts: Vec<usize> = (0..=3).map(|n| p.generator_count(n)).collect();
    println!("`{}` generator counts {:?}", p.name(), counts);
    println!("{}", validate(&p));
    Ok(())
}
