//! Normalized chains, integral homology by Smith normal form, and mod-p
//! cohomology.
//!
//! A presentation truncated at `N` gives trustworthy answers in degrees
//! `0..=N-1` only, since the boundary out of degree `N + 1` is missing.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

pub use snf::{invariant_factors, rank_mod_p};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::operator::SimplexRef;
use crate::report::Report;
use crate::sset::{nerve_of_group, SSetPresentation};

/// Largest nerve (in top-dimensional generators) group cohomology will build.
pub const GROUP_COHOMOLOGY_BOUND: usize = 50_000;

/// Chains on nondegenerate generators with `d = Σ (-1)^i ∂_i`, degenerate
/// faces counting as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedChainComplex {
    name: String,
    ranks: Vec<usize>,
    /// `columns[n][j]` lists the nonzero `(row, entry)` of `d_n` on generator `j`.
    columns: Vec<Vec<Vec<(usize, i64)>>>,
}

pub fn boundary_matrices(x: &SSetPresentation) -> Result<NormalizedChainComplex> {
    let ranks: Vec<usize> = (0..=x.max_dim()).map(|n| x.generator_count(n)).collect();
    let mut columns = vec![Vec::new()];
    for n in 1..=x.max_dim() {
        let cols = (0..ranks[n])
            .map(|j| {
                let mut col: Vec<(usize, i64)> = Vec::new();
                let g = SimplexRef::nondegenerate(crate::operator::GenRef::new(n, j));
                for (i, f) in x.faces_of(&g).iter().enumerate() {
                    if f.is_degenerate() {
                        continue;
                    }
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let row = f.generator().index;
                    match col.iter_mut().find(|(r, _)| *r == row) {
                        Some((_, v)) => *v += sign,
                        None => col.push((row, sign)),
                    }
                }
                col.retain(|&(_, v)| v != 0);
                col.sort_unstable();
                col
            })
            .collect();
        columns.push(cols);
    }
    let c = NormalizedChainComplex {
        name: x.name().to_string(),
        ranks,
        columns,
    };
    for n in 2..=x.max_dim() {
        for (j, col) in c.columns[n].iter().enumerate() {
            let mut acc: Vec<i64> = vec![0; c.ranks[n - 2]];
            for &(r, v) in col {
                for &(r2, w) in &c.columns[n - 1][r] {
                    acc[r2] += v * w;
                }
            }
            if acc.iter().any(|&v| v != 0) {
                return Err(Error::invariant(
                    "d∘d = 0",
                    format!("fails on `{}`", x.generator_name(crate::operator::GenRef::new(n, j))),
                ));
            }
        }
    }
    Ok(c)
}

impl NormalizedChainComplex {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_dim(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    /// `d_n` as a dense matrix with one row per `(n-1)`-generator.
    pub fn dense(&self, n: usize) -> Vec<Vec<i64>> {
        if n == 0 || n > self.max_dim() {
            return Vec::new();
        }
        let mut m = vec![vec![0; self.ranks[n]]; self.ranks[n - 1]];
        for (j, col) in self.columns[n].iter().enumerate() {
            for &(r, v) in col {
                m[r][j] = v;
            }
        }
        m
    }

    /// Highest degree whose (co)homology is exact.
    pub fn reliable_up_to(&self) -> usize {
        self.max_dim().saturating_sub(1)
    }
}

/// `ℤ^free ⊕ ⨁ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn cyclic(order: u64) -> Self {
        HomologyGroup {
            free_rank: 0,
            torsion: vec![BigInt::from(order)],
        }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Number of torsion factors divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|t| t.is_multiple_of(&p)).count()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomology {
    pub name: String,
    pub degrees: Vec<HomologyGroup>,
    pub reliable_up_to: usize,
}

impl fmt::Display for IntegralHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "integral homology of `{}` (reliable in degrees <= {})", self.name, self.reliable_up_to)?;
        for (i, h) in self.degrees.iter().enumerate() {
            let mark = if i > self.reliable_up_to { "  (unreliable)" } else { "" };
            writeln!(f, "  H_{i} = {h}{mark}")?;
        }
        Ok(())
    }
}

/// Homology in degrees `0..=N`; degree `N` ignores the missing boundary.
pub fn integral_homology(c: &NormalizedChainComplex) -> IntegralHomology {
    let n = c.max_dim();
    let factors: Vec<Vec<BigInt>> = (0..=n + 1)
        .map(|k| if k == 0 || k > n { Vec::new() } else { invariant_factors(&c.dense(k)) })
        .collect();
    let degrees = (0..=n)
        .map(|k| HomologyGroup {
            free_rank: c.ranks[k] - factors[k].len() - factors[k + 1].len(),
            torsion: factors[k + 1].iter().filter(|d| !d.is_one()).cloned().collect(),
        })
        .collect();
    IntegralHomology {
        name: c.name.clone(),
        degrees,
        reliable_up_to: c.reliable_up_to(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPCohomology {
    pub name: String,
    pub p: u64,
    pub dims: Vec<usize>,
    pub reliable_up_to: usize,
}

impl ModPCohomology {
    /// Dimensions in the reliable range.
    pub fn reliable_dims(&self) -> &[usize] {
        &self.dims[..=self.reliable_up_to.min(self.dims.len() - 1)]
    }
}

impl fmt::Display for ModPCohomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mod-{} cohomology of `{}` (reliable in degrees <= {})", self.p, self.name, self.reliable_up_to)?;
        for (i, d) in self.dims.iter().enumerate() {
            let mark = if i > self.reliable_up_to { "  (unreliable)" } else { "" };
            writeln!(f, "  dim H^{i} = {d}{mark}")?;
        }
        Ok(())
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `dim H^i = dim C_i - rank d_i - rank d_{i+1}` over `F_p`.
pub fn mod_p_cohomology(c: &NormalizedChainComplex, p: u64) -> Result<ModPCohomology> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = c.max_dim();
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|k| if k == 0 || k > n { 0 } else { rank_mod_p(&c.dense(k), p) })
        .collect();
    let dims = (0..=n).map(|k| c.ranks[k] - ranks[k] - ranks[k + 1]).collect();
    Ok(ModPCohomology {
        name: c.name.clone(),
        p,
        dims,
        reliable_up_to: c.reliable_up_to(),
    })
}

/// `H^i(Γ; F_p)` for `i <= degree_bound`, computed on the nerve of `Γ`.
pub fn group_cohomology(group: &FiniteGroup, p: u64, degree_bound: usize) -> Result<Vec<usize>> {
    let top = (group.order() - 1).checked_pow(degree_bound as u32 + 1).unwrap_or(usize::MAX);
    if top > GROUP_COHOMOLOGY_BOUND {
        return Err(Error::BoundExceeded(format!(
            "nerve of {} up to dimension {} has {top} top generators",
            group.name(),
            degree_bound + 1
        )));
    }
    let nerve = nerve_of_group(group, degree_bound + 1)?;
    let h = mod_p_cohomology(&boundary_matrices(nerve.presentation())?, p)?;
    Ok(h.dims[..=degree_bound].to_vec())
}

/// `dim H^i(F_p) = b_i + t_i(p) + t_{i-1}(p)` in every reliable degree.
pub fn universal_coefficients_check(h: &IntegralHomology, m: &ModPCohomology) -> Report {
    let mut report = Report::new(format!("universal coefficients for `{}` at p = {}", h.name, m.p));
    for i in 0..=h.reliable_up_to.min(m.reliable_up_to) {
        let expected = h.degrees[i].free_rank
            + h.degrees[i].p_torsion_count(m.p)
            + if i > 0 { h.degrees[i - 1].p_torsion_count(m.p) } else { 0 };
        report.check(m.dims[i] == expected, || {
            format!("degree {i}: mod-p dimension {} but integral data predicts {expected}", m.dims[i])
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{standard_complex, StandardKind};

    fn nerve_homology(group: &FiniteGroup, n: usize) -> IntegralHomology {
        let nerve = nerve_of_group(group, n).unwrap();
        integral_homology(&boundary_matrices(nerve.presentation()).unwrap())
    }

    #[test]
    fn interval_boundary() {
        let d1 = standard_complex(StandardKind::Delta(1), 1).unwrap();
        let c = boundary_matrices(&d1).unwrap();
        assert_eq!(c.dense(1), vec![vec![-1], vec![1]]);
    }

    #[test]
    fn nerve_of_z2_boundaries() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(2), 3).unwrap();
        let c = boundary_matrices(nerve.presentation()).unwrap();
        assert_eq!(c.dense(1), vec![vec![0]]);
        assert_eq!(c.dense(2), vec![vec![2]]);
        assert_eq!(c.dense(3), vec![vec![0]]);
    }

    #[test]
    fn triangle_is_acyclic() {
        let d2 = standard_complex(StandardKind::Delta(2), 3).unwrap();
        let h = integral_homology(&boundary_matrices(&d2).unwrap());
        assert_eq!(h.degrees[0], HomologyGroup::free(1));
        assert!(h.degrees[1..].iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn circle_from_boundary() {
        let b = standard_complex(StandardKind::Boundary(2), 2).unwrap();
        let h = integral_homology(&boundary_matrices(&b).unwrap());
        assert_eq!(h.degrees[0], HomologyGroup::free(1));
        assert_eq!(h.degrees[1], HomologyGroup::free(1));
    }

    #[test]
    fn real_projective_homology() {
        let h = nerve_homology(&FiniteGroup::cyclic(2), 5);
        assert_eq!(h.reliable_up_to, 4);
        assert_eq!(h.degrees[1], HomologyGroup::cyclic(2));
        assert!(h.degrees[2].is_zero());
        assert_eq!(h.degrees[3], HomologyGroup::cyclic(2));
        assert!(h.degrees[4].is_zero());
    }

    #[test]
    fn lens_space_homology() {
        let h = nerve_homology(&FiniteGroup::cyclic(3), 4);
        assert_eq!(h.degrees[1], HomologyGroup::cyclic(3));
        assert!(h.degrees[2].is_zero());
        assert_eq!(h.degrees[3], HomologyGroup::cyclic(3));
    }

    #[test]
    fn mod_p_dimensions() {
        let z2 = nerve_of_group(&FiniteGroup::cyclic(2), 5).unwrap();
        let m = mod_p_cohomology(&boundary_matrices(z2.presentation()).unwrap(), 2).unwrap();
        assert_eq!(m.reliable_dims(), [1, 1, 1, 1, 1]);
        let z3 = nerve_of_group(&FiniteGroup::cyclic(3), 4).unwrap();
        let m = mod_p_cohomology(&boundary_matrices(z3.presentation()).unwrap(), 2).unwrap();
        assert_eq!(m.reliable_dims(), [1, 0, 0, 0]);
        let pt = standard_complex(StandardKind::Delta(0), 3).unwrap();
        let m = mod_p_cohomology(&boundary_matrices(&pt).unwrap(), 5).unwrap();
        assert_eq!(m.reliable_dims(), [1, 0, 0]);
        assert!(matches!(mod_p_cohomology(&boundary_matrices(&pt).unwrap(), 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn group_cohomology_examples() {
        assert_eq!(group_cohomology(&FiniteGroup::cyclic(2), 2, 3).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(group_cohomology(&FiniteGroup::trivial(), 3, 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(group_cohomology(&FiniteGroup::cyclic(3), 2, 3).unwrap(), vec![1, 0, 0, 0]);
        assert!(matches!(group_cohomology(&FiniteGroup::cyclic(8), 2, 9), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn universal_coefficients_on_nerves() {
        for g in FiniteGroup::small_groups(6) {
            let nerve = nerve_of_group(&g, 4).unwrap();
            let c = boundary_matrices(nerve.presentation()).unwrap();
            let h = integral_homology(&c);
            for p in [2, 3, 5] {
                let r = universal_coefficients_check(&h, &mod_p_cohomology(&c, p).unwrap());
                assert!(r.passed(), "{r}");
            }
        }
    }
}
