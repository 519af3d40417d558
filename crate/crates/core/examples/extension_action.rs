//! The action of `Q ⋊ G` on the universal cover extending the deck action,
//! with stabilizers and the isotropy isomorphisms.

use kancover::theorems::instances::Instance;
use kancover::theorems::verify_isotropy_iso;

fn main() -> kancover::Result<()> {
    for inst in [Instance::inversion_on_z3(4)?, Instance::swap_on_klein(4)?] {
        let e = inst.extension_action()?;
        let l = e.semidirect();
        let total = inst.cover.total();
        println!("== {} acting on `{}`", l.group().name(), total.name());
        let b = total.enumerate_simplices(0)[0].clone();
        for ell in 0..l.order() {
            println!("{} . {} = {}", l.group().element_name(ell), total.display(&b), total.display(&e.act(ell, &b)));
        }
        let stab: Vec<&str> = e.stabilizer(&b).iter().map(|&s| l.group().element_name(s)).collect();
        println!("stabilizer of {}: {{{}}}", total.display(&b), stab.join(", "));
        print!("{}", e.verify(2));
        print!("{}", verify_isotropy_iso(&e, 2));
    }
    Ok(())
}
