use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

/// Integer types the elimination runs over: `i64` with overflow detection,
/// falling back to `BigInt`.
trait Entry: Clone + PartialEq + Zero + One + Signed + Integer + CheckedMul + CheckedSub {}
impl Entry for i64 {}
impl Entry for BigInt {}

/// Diagonalizes by unimodular row and column operations, always pivoting on
/// an entry of least absolute value. Returns the nonzero diagonal (absolute
/// values, not yet in divisibility order), or `None` on overflow.
fn diagonalize<T: Entry>(mut a: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // global pivot search for the next step
        let mut best: Option<(usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if v.abs().is_one() {
                        break 'search;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        move_to(&mut a, t, pi, pj);
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&pivot);
                for j in t..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let delta = q.checked_mul(&a[t][j])?;
                    a[i][j] = a[i][j].checked_sub(&delta)?;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&pivot);
                for row in a.iter_mut().skip(t) {
                    if row[t].is_zero() {
                        continue;
                    }
                    let delta = q.checked_mul(&row[t])?;
                    row[j] = row[j].checked_sub(&delta)?;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot survives in row or column t
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            move_to(&mut a, t, best.0, best.1);
        }
        diag.push(a[t][t].abs());
    }
    Some(diag)
}

fn move_to<T>(a: &mut [Vec<T>], t: usize, i: usize, j: usize) {
    a.swap(t, i);
    if j != t {
        for row in a.iter_mut() {
            row.swap(t, j);
        }
    }
}

/// The nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix given
/// by rows. Their number is the rank.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let diag: Vec<BigInt> = match diagonalize(matrix.to_vec()) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => {
            let big = matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            diagonalize::<BigInt>(big).expect("arbitrary precision cannot overflow")
        }
    };
    let units = diag.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    // (a, b) -> (gcd, lcm) until every entry divides the later ones
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            let l = rest[i].lcm(&rest[j]);
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigInt::one(); units];
    out.extend(rest);
    out.sort();
    out
}

/// Rank over the field with `p` elements.
pub fn rank_mod_p(matrix: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pivot);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for j in c..cols {
                    a[r][j] = (a[r][j] + p - f * a[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(m: &[Vec<i64>]) -> Vec<i64> {
        invariant_factors(m).iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[]), Vec::<i64>::new());
    }

    #[test]
    fn large_entries() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1], vec![big - 1, big]];
        // det = big² - (big-1)² = 2 big - 1
        let f = invariant_factors(&m);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0], BigInt::one());
        assert_eq!(f[1], BigInt::from(2 * big - 1));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let m = vec![vec![2, i64::MAX], vec![3, 1]];
        assert!(diagonalize(m.clone()).is_none());
        let det = BigInt::from(2) - BigInt::from(3) * BigInt::from(i64::MAX);
        assert_eq!(invariant_factors(&m), vec![BigInt::one(), det.abs()]);
    }

    #[test]
    fn ranks_mod_p() {
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }
}
