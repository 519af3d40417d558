//! Lifting group actions to universal covers: induced automorphisms, the
//! subgroup Γ, crossed homomorphisms `r_b` and the fixed subcomplexes.

use kancover::covering::{crossed_hom_at, fixed_data, verify_rb_lemmas};
use kancover::theorems::instances::Instance;

fn main() -> kancover::Result<()> {
    for inst in [Instance::inversion_on_z3(4)?, Instance::swap_on_klein(4)?] {
        println!("== {}", inst.name);
        let l = inst.lifted()?;
        let q = inst.cover.group();
        for (g, star) in l.induced().iter().enumerate() {
            let images: Vec<&str> = star.images().iter().map(|&a| q.element_name(a)).collect();
            println!("{}_* = [{}]", l.group().element_name(g), images.join(", "));
        }
        let b = inst.cover.total().enumerate_simplices(0)[0].clone();
        let rb = crossed_hom_at(&inst.cover, &l, &b);
        for &g in rb.domain() {
            println!("r_{}({}) = {}", inst.cover.total().display(&b), l.group().element_name(g), q.element_name(rb.value(g).unwrap()));
        }
        print!("{}", verify_rb_lemmas(&inst.cover, &l, 2));
        let data = fixed_data(&inst.cover, &l)?;
        let gamma: Vec<&str> = data.gamma.iter().map(|&a| q.element_name(a)).collect();
        println!("Gamma = {{{}}}", gamma.join(", "));
        let counts: Vec<usize> = (0..=data.k_g.max_dim()).map(|n| data.k_g.generator_count(n)).collect();
        println!("K^G generator counts {counts:?}");
        print!("{}", data.orbit_report);
    }
    Ok(())
}
