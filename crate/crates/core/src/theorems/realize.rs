use std::collections::HashMap;

use super::extension::{check_multiplicative, extend};
use crate::covering::build_cover;
use crate::error::{Error, Result};
use crate::groups::{build_semidirect, Automorphism, FiniteGroup, SemidirectProduct};
use crate::operator::{GenRef, SimplexRef};
use crate::pi_one::QuotientMap;
use crate::report::Report;
use crate::sset::{product_of, validate, Product, SSetPresentation, SimplicialAction, SimplicialAutomorphism};

/// Largest acting group `realize_extension` accepts.
pub const MAX_ACTING_ORDER: usize = 3;
/// Largest number of product simplices, summed over dimensions.
pub const MAX_PRODUCT_SIMPLICES: u128 = 250_000;

/// `Y = K̃^G` with commuting-up-to-`φ` actions of `Q` and `G`, its quotient
/// by `Q`, and the group they generate.
#[derive(Clone, Debug)]
pub struct Realization {
    pub y: Product,
    /// `Σ_σ(χ)(z) = ψ(z_* σ)(χ(z))`, indexed by `σ ∈ Q`.
    pub sigma: Vec<SimplicialAutomorphism>,
    /// `J_x(χ)(z) = χ(z x)`, indexed by `x ∈ G`.
    pub j: Vec<SimplicialAutomorphism>,
    pub l: SemidirectProduct,
    /// `Σ_n ∘ J_x`, indexed like `l`.
    pub psi: Vec<SimplicialAutomorphism>,
    pub quotient: SSetPresentation,
    pub quotient_action: SimplicialAction,
    /// Position of each `Y`-generator's orbit among the quotient generators.
    pub orbit: Vec<Vec<usize>>,
    /// The distinct maps `Σ_n J_x` under composition.
    pub recovered: FiniteGroup,
    /// `ℓ ↦` its element of `recovered`.
    pub isomorphism: Vec<usize>,
    pub report: Report,
}

/// Builds `Y` as the `|G|`-fold product of the cover of `k` along `q`, with
/// coordinates indexed by the elements of `G` in order, and checks that
/// `L = Q ⋊_φ G` acts on it, that `Q` acts freely, that `G` acts on `Y/Q`,
/// and that the maps `Σ_n J_x` form a group isomorphic to `L`.
pub fn realize_extension(g: &FiniteGroup, phi: &[Automorphism], k: &SSetPresentation, q: &QuotientMap) -> Result<Realization> {
    if g.order() > MAX_ACTING_ORDER {
        return Err(Error::TooLarge(format!("acting group of order {} exceeds {MAX_ACTING_ORDER}", g.order())));
    }
    let cover = build_cover(k, q)?;
    let total = cover.total();
    let qg = cover.group();
    let l = build_semidirect(qg, g, phi)?;
    let estimate: u128 = (0..=total.max_dim())
        .map(|n| (total.simplex_count(n) as u128).saturating_pow(g.order() as u32))
        .fold(0, u128::saturating_add);
    if estimate > MAX_PRODUCT_SIMPLICES {
        return Err(Error::TooLarge(format!("{} simplices in the {}-fold product", estimate, g.order())));
    }
    let y = product_of(&vec![total.clone(); g.order()])?;
    let yp = y.presentation();
    let mut report = Report::new(format!("realization of {} on `{}`", l.group().name(), yp.name()));

    let transform = |f: &dyn Fn(&[SimplexRef]) -> Vec<SimplexRef>| -> Result<SimplicialAutomorphism> {
        let maps = (0..=yp.max_dim())
            .map(|n| {
                (0..yp.generator_count(n))
                    .map(|i| {
                        let image = y.simplex_of(&f(y.generator_coords(GenRef::new(n, i))))?;
                        if image.is_degenerate() {
                            return Err(Error::invariant("bijection on generators", "a generator maps to a degenerate simplex"));
                        }
                        Ok(image.generator().index)
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        SimplicialAutomorphism::new(yp, maps)
    };
    let sigma: Vec<SimplicialAutomorphism> = (0..qg.order())
        .map(|s| {
            transform(&|chi| {
                chi.iter()
                    .enumerate()
                    .map(|(z, c)| cover.deck_apply(c, qg.inv(phi[z].apply(s))))
                    .collect()
            })
        })
        .collect::<Result<_>>()?;
    let j: Vec<SimplicialAutomorphism> = (0..g.order())
        .map(|x| transform(&|chi| (0..g.order()).map(|z| chi[g.mul(z, x)].clone()).collect()))
        .collect::<Result<_>>()?;
    SimplicialAction::new(yp, qg, sigma.clone())?;
    SimplicialAction::new(yp, g, j.clone())?;

    let psi = extend(&l, &sigma, &j)?;
    report.note(format!("glue condition J_x Σ_σ = Σ_(x_*σ) J_x holds for all {} pairs", qg.order() * g.order()));
    report.absorb(check_multiplicative(l.group(), &psi));

    for (s, m) in sigma.iter().enumerate().filter(|&(s, _)| s != qg.identity()) {
        for gen in yp.all_generators() {
            report.check(!m.fixes(gen), || format!("Σ_{} fixes `{}`", qg.element_name(s), yp.generator_name(gen)));
        }
    }

    let (quotient, orbit) = orbit_quotient(yp, &sigma, &mut report)?;
    report.absorb(validate(&quotient));
    let quotient_action = induced_quotient_action(yp, &quotient, &orbit, g, &j, &mut report)?;

    let (recovered, isomorphism) = generated_group(&psi)?;
    report.check(recovered.order() == l.order(), || {
        format!("the maps Σ_n J_x form a group of order {} instead of {}", recovered.order(), l.order())
    });
    for a in 0..l.order() {
        for b in 0..l.order() {
            report.check(isomorphism[l.group().mul(a, b)] == recovered.mul(isomorphism[a], isomorphism[b]), || {
                format!("ℓ ↦ Σ_n J_x is not multiplicative at {}, {}", l.group().element_name(a), l.group().element_name(b))
            });
        }
    }
    report.note(format!(
        "Y has {} vertices (|Q|^|G| times the vertices of K^|G|); Y/Q has {}",
        yp.generator_count(0),
        quotient.generator_count(0)
    ));

    Ok(Realization {
        y,
        sigma,
        j,
        l,
        psi,
        quotient,
        quotient_action,
        orbit,
        recovered,
        isomorphism,
        report,
    })
}

/// `Y/Q` on the least generator of each orbit, with faces taken from the
/// representative and re-checked on every other orbit member.
fn orbit_quotient(y: &SSetPresentation, sigma: &[SimplicialAutomorphism], report: &mut Report) -> Result<(SSetPresentation, Vec<Vec<usize>>)> {
    let mut orbit = Vec::new();
    let mut reps = Vec::new();
    for n in 0..=y.max_dim() {
        let count = y.generator_count(n);
        let least: Vec<usize> = (0..count).map(|i| sigma.iter().map(|s| s.maps()[n][i]).min().unwrap()).collect();
        let mut r: Vec<usize> = least.clone();
        r.sort_unstable();
        r.dedup();
        let position: HashMap<usize, usize> = r.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        orbit.push(least.iter().map(|i| position[i]).collect::<Vec<usize>>());
        reps.push(r);
    }
    let to_quotient = |f: &SimplexRef| {
        let g = f.generator();
        f.with_generator(GenRef::new(g.dim, orbit[g.dim][g.index]))
    };
    let mut generators = Vec::new();
    let mut faces = Vec::new();
    for (n, r) in reps.iter().enumerate() {
        generators.push(r.iter().map(|&i| format!("[{}]", y.generator_name(GenRef::new(n, i)))).collect());
        faces.push(
            r.iter()
                .map(|&i| y.generator_faces(GenRef::new(n, i)).iter().map(to_quotient).collect())
                .collect(),
        );
    }
    for gen in y.all_generators().filter(|g| g.dim > 0) {
        let rep = reps[gen.dim][orbit[gen.dim][gen.index]];
        let here: Vec<SimplexRef> = y.generator_faces(gen).iter().map(to_quotient).collect();
        let there: Vec<SimplexRef> = y.generator_faces(GenRef::new(gen.dim, rep)).iter().map(to_quotient).collect();
        report.check(here == there, || format!("faces of `{}` disagree with its orbit representative", y.generator_name(gen)));
    }
    let quotient = SSetPresentation::new(format!("{}/Q", y.name()), y.max_dim(), generators, faces)?;
    Ok((quotient, orbit))
}

fn induced_quotient_action(
    y: &SSetPresentation,
    quotient: &SSetPresentation,
    orbit: &[Vec<usize>],
    g: &FiniteGroup,
    j: &[SimplicialAutomorphism],
    report: &mut Report,
) -> Result<SimplicialAction> {
    let maps = j
        .iter()
        .enumerate()
        .map(|(x, jx)| {
            let mut m: Vec<Vec<Option<usize>>> = (0..=quotient.max_dim()).map(|n| vec![None; quotient.generator_count(n)]).collect();
            for gen in y.all_generators() {
                let image = orbit[gen.dim][jx.maps()[gen.dim][gen.index]];
                let slot = &mut m[gen.dim][orbit[gen.dim][gen.index]];
                let consistent = slot.is_none_or(|v| v == image);
                report.check(consistent, || format!("J_{} does not descend at `{}`", g.element_name(x), y.generator_name(gen)));
                *slot = Some(image);
            }
            let maps = m.into_iter().map(|v| v.into_iter().map(Option::unwrap).collect()).collect();
            SimplicialAutomorphism::new(quotient, maps)
        })
        .collect::<Result<_>>()?;
    SimplicialAction::new(quotient, g, maps)
}

/// The distinct maps among `psi` as a group under composition, with the
/// index of each `psi[l]` in it.
fn generated_group(psi: &[SimplicialAutomorphism]) -> Result<(FiniteGroup, Vec<usize>)> {
    let mut distinct: Vec<SimplicialAutomorphism> = Vec::new();
    let mut index: HashMap<SimplicialAutomorphism, usize> = HashMap::new();
    let assignment: Vec<usize> = psi
        .iter()
        .map(|m| {
            *index.entry(m.clone()).or_insert_with(|| {
                distinct.push(m.clone());
                distinct.len() - 1
            })
        })
        .collect();
    let identity = distinct.iter().position(SimplicialAutomorphism::is_identity);
    if identity != Some(0) {
        return Err(Error::invariant("action homomorphism", "the identity element does not act as the identity"));
    }
    let table = distinct
        .iter()
        .map(|a| {
            distinct
                .iter()
                .map(|b| {
                    index.get(&a.compose(b)).copied().ok_or_else(|| {
                        Error::invariant("closure", "the maps Σ_n J_x are not closed under composition")
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<_>>()?;
    let names = (0..distinct.len()).map(|i| format!("m{i}")).collect();
    Ok((FiniteGroup::from_table("recovered", names, table)?, assignment))
}
