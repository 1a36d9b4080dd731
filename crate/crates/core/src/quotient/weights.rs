//! Positive integer weight vectors making a set of polynomials homogeneous.

use crate::poly::Polynomial;

/// Upper bound on each free coordinate during the search.
const SEARCH_BOUND: i128 = 8;
/// Upper bound on the number of tried assignments.
const SEARCH_LIMIT: u64 = 200_000;

/// A positive weight `w` with `w·a = w·b` for any two exponents `a`, `b`
/// occurring in the same polynomial, if one is found.
///
/// The all-ones vector is tried first. Otherwise the kernel of the
/// exponent-difference matrix is parametrised by its free coordinates,
/// which are searched over `1..=SEARCH_BOUND`.
pub(crate) fn find_weights(nvars: usize, polys: &[&Polynomial]) -> Option<Vec<u64>> {
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for f in polys {
        let terms = f.terms();
        if let Some((lead, _)) = terms.first() {
            for (m, _) in &terms[1..] {
                let row: Vec<i128> = lead
                    .exponents()
                    .iter()
                    .zip(m.exponents())
                    .map(|(&a, &b)| a as i128 - b as i128)
                    .collect();
                rows.push(row);
            }
        }
    }
    if rows.iter().all(|r| r.iter().sum::<i128>() == 0) {
        return Some(vec![1; nvars]);
    }
    let (rref, pivots) = echelon(rows, nvars);
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    let mut assignment = vec![1i128; free.len()];
    let mut tried = 0u64;
    loop {
        if let Some(w) = complete(&rref, &pivots, &free, &assignment, nvars) {
            return Some(w);
        }
        tried += 1;
        if tried >= SEARCH_LIMIT || !advance(&mut assignment) {
            return None;
        }
    }
}

/// Odometer increment over `1..=SEARCH_BOUND`; false once exhausted.
fn advance(digits: &mut [i128]) -> bool {
    for d in digits.iter_mut() {
        if *d < SEARCH_BOUND {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}

/// Solves for the pivot coordinates and rescales to integers; `None` when
/// some coordinate is not positive.
fn complete(
    rref: &[Vec<i128>],
    pivots: &[usize],
    free: &[usize],
    values: &[i128],
    nvars: usize,
) -> Option<Vec<u64>> {
    // w_pivot = num / den per row
    let mut fractions: Vec<(usize, i128, i128)> = Vec::with_capacity(pivots.len());
    for (row, &p) in rref.iter().zip(pivots) {
        let num: i128 = -free.iter().zip(values).map(|(&c, &v)| row[c] * v).sum::<i128>();
        let den = row[p];
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num <= 0 {
            return None;
        }
        fractions.push((p, num, den));
    }
    let scale = fractions.iter().fold(1i128, |acc, &(_, _, d)| lcm(acc, d));
    let mut w = vec![0u64; nvars];
    for (&c, &v) in free.iter().zip(values) {
        w[c] = u64::try_from(v * scale).ok()?;
    }
    for (p, num, den) in fractions {
        w[p] = u64::try_from(num * (scale / den)).ok()?;
    }
    let g = w.iter().fold(0u64, |acc, &x| gcd(acc as i128, x as i128) as u64);
    Some(w.into_iter().map(|x| x / g.max(1)).collect())
}

/// Fraction-free row echelon form with rows reduced above and below pivots.
fn echelon(mut rows: Vec<Vec<i128>>, ncols: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let (a, b) = (rows[r][c], rows[k][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[k].iter_mut().zip(&pivot_row) {
                    *x = *x * a - *y * b;
                }
                normalize(&mut rows[k]);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0, |acc, &x| gcd(acc, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}
