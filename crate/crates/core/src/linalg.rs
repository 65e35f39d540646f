//! Dense exact linear algebra over Q(q): row reduction for solving and a
//! fraction-free (Bareiss) elimination over Z[q] for rank computations.

use crate::scalar::{IntPoly, ScalarQ};

/// Reduced row echelon form in place.  Pivots on the first nonzero entry of
/// each column, left to right.  Returns the pivot columns.
pub(crate) fn rref(rows: &mut [Vec<ScalarQ>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x = &*x - &(&f * p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve A x = b for square A; None when A is singular over Q(q).
pub(crate) fn solve_square(a: &[Vec<ScalarQ>], b: &[ScalarQ]) -> Option<Vec<ScalarQ>> {
    let n = a.len();
    let mut aug: Vec<Vec<ScalarQ>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some((0..n).map(|i| aug[i][n].clone()).collect())
}

/// Solve the (possibly rectangular) system `sum_j x_j col_j = rhs` exactly.
/// Returns None when inconsistent; free variables are set to zero.
pub(crate) fn solve_linear_combination(
    cols: &[Vec<ScalarQ>],
    rhs: &[ScalarQ],
) -> Option<Vec<ScalarQ>> {
    let nrows = rhs.len();
    let ncols = cols.len();
    let mut aug: Vec<Vec<ScalarQ>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<ScalarQ> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None; // pivot in the rhs column: inconsistent
    }
    let mut x = vec![ScalarQ::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Rank of a matrix over Q(q) by fraction-free elimination: each row is
/// cleared to Z[q] (scaling rows does not change rank), then Bareiss
/// two-step elimination with exact division runs over the integer
/// polynomials.  Pivoting picks the first row with a nonzero entry.
pub(crate) fn rank_fraction_free(rows: &[Vec<ScalarQ>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<IntPoly>> = rows.iter().map(|row| clear_denominators(row)).collect();

    let mut rank = 0;
    let mut prev_pivot = IntPoly::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let t = pivot.mul(&m[i][j]).sub(&m[i][c].mul(&m[r][j]));
                m[i][j] = t
                    .exact_div(&prev_pivot)
                    .expect("Bareiss division is exact");
            }
            m[i][c] = IntPoly::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        r += 1;
    }
    rank
}

fn clear_denominators(row: &[ScalarQ]) -> Vec<IntPoly> {
    let mut lcm = IntPoly::one();
    for x in row {
        let d = x.den_poly();
        let g = lcm.gcd(d);
        lcm = lcm.mul(&d.exact_div(&g).unwrap());
    }
    row.iter()
        .map(|x| {
            let co = lcm.exact_div(x.den_poly()).unwrap();
            x.num_poly().mul(&co)
        })
        .collect()
}
