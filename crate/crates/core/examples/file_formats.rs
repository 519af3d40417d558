//! Writes the fixture set (groups, complexes, quotient maps, actions, covers
//! and theorem cases, plus three deliberately corrupted files) and checks
//! that every valid file survives a load/serialize round trip byte for byte.
//!
//! ```text
//! cargo run --example file_formats -- [output-dir]
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use kancover::covering::build_cover;
use kancover::groups::{FiniteGroup, GroupHom};
use kancover::io::{self, CaseFile, CoverFile, GroupFile};
use kancover::pi_one::QuotientMap;
use kancover::sset::{nerve_of_group, SimplicialAction, SimplicialAutomorphism};
use kancover::theorems::instances::Instance;

fn write<T: serde::Serialize>(dir: &Path, name: &str, file: &T) -> kancover::Result<PathBuf> {
    let path = dir.join(name);
    io::write_canonical(&path, file)?;
    Ok(path)
}

#[allow(clippy::too_many_arguments)]
fn case(name: &str, complex: &str, quotient: Option<&str>, action: &str, p: Option<u64>, truncation: usize, depth: usize, theorems: &[(&str, &str)]) -> CaseFile {
    CaseFile {
        kind: "case".into(),
        name: name.into(),
        complex: complex.into(),
        quotient: quotient.map(str::to_string),
        action: action.into(),
        p,
        truncation,
        check_depth: depth,
        theorems: theorems.iter().map(|(t, _)| t.to_string()).collect(),
        expect: theorems.iter().map(|(t, o)| (t.to_string(), o.to_string())).collect(),
    }
}

fn main() -> kancover::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("kancover-fixtures"));
    fs::create_dir_all(&dir).map_err(|e| kancover::Error::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut written = Vec::new();

    let z2 = FiniteGroup::cyclic(2);
    for g in [z2.clone(), FiniteGroup::cyclic(3), FiniteGroup::named("Z2xZ2")?, FiniteGroup::symmetric(3)] {
        written.push(write(&dir, &format!("{}.group.json", g.name().to_lowercase()), &io::group_file(&g))?);
    }

    let swap = Instance::swap_on_klein(4)?;
    let inversion = Instance::inversion_on_z3(4)?;
    let trivial_z3 = Instance::trivial_on_nerve(&FiniteGroup::cyclic(3), &z2, 4)?;
    let trivial_z2 = Instance::trivial_on_nerve(&z2, &z2, 5)?;
    for (stem, inst) in [("klein", &swap), ("z3", &inversion), ("z2", &trivial_z2)] {
        let x = inst.nerve.presentation();
        let group = format!("{}.group.json", inst.quotient.group().name().to_lowercase());
        written.push(write(&dir, &format!("nerve_{stem}.complex.json"), &io::complex_file(x))?);
        written.push(write(&dir, &format!("{stem}_universal.quotient.json"), &io::quotient_file(&inst.quotient, &group))?);
        written.push(write(
            &dir,
            &format!("{stem}_universal.cover.json"),
            &CoverFile {
                kind: "cover".into(),
                complex: format!("nerve_{stem}.complex.json"),
                quotient: format!("{stem}_universal.quotient.json"),
            },
        )?);
    }
    written.push(write(&dir, "klein_swap.action.json", &io::action_file(swap.nerve.presentation(), &swap.action, "z2.group.json"))?);
    written.push(write(&dir, "z3_inversion.action.json", &io::action_file(inversion.nerve.presentation(), &inversion.action, "z2.group.json"))?);
    written.push(write(&dir, "z3_trivial.action.json", &io::action_file(trivial_z3.nerve.presentation(), &trivial_z3.action, "z2.group.json"))?);
    written.push(write(&dir, "z2_trivial.action.json", &io::action_file(trivial_z2.nerve.presentation(), &trivial_z2.action, "z2.group.json"))?);

    let z4 = nerve_of_group(&FiniteGroup::cyclic(4), 4)?;
    written.push(write(&dir, "nerve_z4.complex.json", &io::complex_file(z4.presentation()))?);
    written.push(write(&dir, "z4.group.json", &io::group_file(&FiniteGroup::cyclic(4)))?);
    let reduction = GroupHom::reduction(4, 2)?;
    written.push(write(&dir, "z4_to_z2.hom.json", &io::hom_file(&reduction, "z4.group.json", "z2.group.json"))?);
    let q = QuotientMap::for_nerve(&z4, &reduction)?;
    written.push(write(&dir, "z4_to_z2.quotient.json", &io::quotient_file(&q, "z2.group.json"))?);
    written.push(write(
        &dir,
        "z4_to_z2.cover.json",
        &CoverFile {
            kind: "cover".into(),
            complex: "nerve_z4.complex.json".into(),
            quotient: "z4_to_z2.quotient.json".into(),
        },
    )?);

    let nerve_z2 = nerve_of_group(&z2, 4)?;
    let cover = build_cover(nerve_z2.presentation(), &QuotientMap::universal_for_nerve(&nerve_z2)?)?;
    let deck = SimplicialAction::new(cover.total(), &z2, vec![SimplicialAutomorphism::identity(cover.total()), cover.deck(1)])?;
    written.push(write(&dir, "z2_universal_total.complex.json", &io::complex_file(cover.total()))?);
    written.push(write(&dir, "deck_swap.action.json", &io::action_file(cover.total(), &deck, "z2.group.json"))?);

    let cases = [
        ("swap.case.json", case("swap on N(Z2xZ2)", "nerve_klein.complex.json", Some("klein_universal.quotient.json"), "klein_swap.action.json", Some(2), 4, 2, &[("thm42", "pass"), ("thm52", "pass"), ("borel", "pass")])),
        ("inversion.case.json", case("inversion on N(Z3)", "nerve_z3.complex.json", Some("z3_universal.quotient.json"), "z3_inversion.action.json", Some(2), 4, 2, &[("thm42", "pass"), ("smith", "pass"), ("thm52", "pass"), ("borel", "pass")])),
        ("trivial_z3.case.json", case("trivial Z2 on N(Z3)", "nerve_z3.complex.json", Some("z3_universal.quotient.json"), "z3_trivial.action.json", Some(2), 4, 2, &[("smith", "pass"), ("thm52", "pass"), ("cor54", "pass")])),
        ("realize_z2.case.json", case("trivial Z2 on N(Z2)", "nerve_z2.complex.json", Some("z2_universal.quotient.json"), "z2_trivial.action.json", None, 2, 1, &[("thm43", "pass")])),
        ("realize_z3.case.json", case("inversion on N(Z3)", "nerve_z3.complex.json", Some("z3_universal.quotient.json"), "z3_inversion.action.json", None, 2, 1, &[("thm43", "pass")])),
        ("deck_swap.case.json", case("deck swap on the universal cover of N(Z2)", "z2_universal_total.complex.json", None, "deck_swap.action.json", Some(2), 4, 2, &[("smith", "hypothesis_failed")])),
    ];
    for (file, c) in &cases {
        written.push(write(&dir, file, c)?);
    }

    // corrupted: a non-associative table, a complex with two faces swapped,
    // and an action map that does not commute with faces
    let bad_group = GroupFile {
        kind: "group".into(),
        name: "latin square without associativity".into(),
        elements: (0..5).map(|i| i.to_string()).collect(),
        table: vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ],
    };
    write(&dir, "corrupt_nonassociative.group.json", &bad_group)?;
    let mut swapped = io::complex_file(&nerve_of_group(&z2, 3)?.into_presentation());
    swapped.name = "N(Z2) with swapped faces".into();
    swapped.faces.get_mut("1.1.1").unwrap().swap(0, 1);
    write(&dir, "corrupt_swapped_faces.complex.json", &swapped)?;
    let mut broken = io::action_file(inversion.nerve.presentation(), &inversion.action, "z2.group.json");
    let row = &mut broken.maps.get_mut("1").unwrap()[2];
    row.swap(0, 1);
    write(&dir, "corrupt_action.action.json", &broken)?;

    for path in &written {
        let original = fs::read_to_string(path).expect("just written");
        assert_eq!(io::canonical_form(path)?, original, "{}", path.display());
    }
    let loaded = io::parse_inputs(&[dir.join("nerve_z3.complex.json"), dir.join("z3_universal.quotient.json"), dir.join("z3_inversion.action.json")])?;
    for l in &loaded {
        println!("{}", l.describe());
    }
    println!("{} fixture files round-trip in {}", written.len(), dir.display());
    for bad in ["corrupt_nonassociative.group.json", "corrupt_swapped_faces.complex.json"] {
        println!("{bad}: {}", io::parse_inputs(&[dir.join(bad)]).unwrap_err());
    }
    let err = io::parse_inputs(&[dir.join("nerve_z3.complex.json"), dir.join("corrupt_action.action.json")]).unwrap_err();
    println!("corrupt_action.action.json: {err}");
    Ok(())
}
