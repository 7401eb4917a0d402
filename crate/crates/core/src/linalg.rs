//! Fraction-preserving Gaussian elimination.

use crate::rational::ExactRational;

type Row = Vec<ExactRational>;

/// Reduce `m` to row echelon form in place, pivoting on the first nonzero
/// entry of each column. Returns the pivot columns.
fn echelon(m: &mut [Row], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("pivot is nonzero");
        for c in col..m[row].len() {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..m[r].len() {
                    let delta = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Row]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    echelon(&mut m, cols).len()
}

/// Solve the square system `a · x = b`; `None` when `a` is singular.
pub fn solve(a: &[Row], b: &[ExactRational]) -> Option<Vec<ExactRational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Row> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "square system");
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    if echelon(&mut m, n).len() < n {
        return None;
    }
    Some(m.into_iter().map(|mut row| row.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(xs: &[i64]) -> Row {
        xs.iter().map(|&x| ExactRational::from(x)).collect()
    }

    #[test]
    fn solves_with_fractions() {
        // x + 2y = 3, 3x + 4y = 5  =>  x = -1, y = 2
        let a = vec![row(&[1, 2]), row(&[3, 4])];
        assert_eq!(solve(&a, &row(&[3, 5])).unwrap(), row(&[-1, 2]));
        // 2x = 1
        assert_eq!(solve(&[row(&[2])], &row(&[1])).unwrap(), vec![ExactRational::frac(1, 2)]);
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![row(&[0, 1]), row(&[1, 0])];
        assert_eq!(solve(&a, &row(&[7, 9])).unwrap(), row(&[9, 7]));
    }

    #[test]
    fn singular() {
        let a = vec![row(&[1, 2]), row(&[2, 4])];
        assert!(solve(&a, &row(&[1, 1])).is_none());
        assert_eq!(rank(&a), 1);
        assert_eq!(rank(&[row(&[0, 0])]), 0);
    }
}
