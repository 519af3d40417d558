//! Hypothesis-gated fixed-point checks: Smith acyclicity, the cohomology of
//! `K^G` against that of Γ, and the two corollaries on effective and
//! homotopically trivial actions.

use kancover::theorems::instances::standard_cases;
use kancover::theorems::{run_case, Outcome};

fn main() -> kancover::Result<()> {
    for case in standard_cases()? {
        for report in run_case(&case)? {
            print!("{report}");
            let expected = case.expected.get(&report.theorem).copied().unwrap_or(Outcome::Pass);
            println!("expected {expected}: {}\n", if expected == report.outcome { "matches" } else { "differs" });
        }
    }
    Ok(())
}
