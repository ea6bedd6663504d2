//! Dense exact linear algebra over ℚ.
//!
//! Systems are small (tens of unknowns), so plain Gauss–Jordan elimination on
//! reduced rationals is used throughout.

use num_traits::{One, Zero};

use super::Rat;

/// Result of solving `M·v = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// `rank(M) < rank([M | rhs])`.
    Inconsistent { rank: usize, augmented_rank: usize },
    /// A particular solution with every free variable set to zero.
    Solved { solution: Vec<Rat>, rank: usize, nullity: usize },
}

impl LinearSolution {
    pub fn solution(&self) -> Option<&[Rat]> {
        match self {
            LinearSolution::Solved { solution, .. } => Some(solution),
            LinearSolution::Inconsistent { .. } => None,
        }
    }
}

/// Row-reduces `rows` in place; returns the pivot columns among the first
/// `ncols` columns.
fn row_reduce(rows: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Decides `M·v = rhs` by comparing `rank(M)` with `rank([M | rhs])`.
pub fn solve(matrix: &[Vec<Rat>], rhs: &[Rat], ncols: usize) -> LinearSolution {
    let mut rows: Vec<Vec<Rat>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.resize(ncols, Rat::zero());
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows, ncols);
    let rank = pivots.len();
    let inconsistent = rows[rank..].iter().any(|row| !row[ncols].is_zero());
    if inconsistent {
        return LinearSolution::Inconsistent {
            rank,
            augmented_rank: rank + 1,
        };
    }
    let mut solution = vec![Rat::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        solution[c] = rows[r][ncols].clone();
    }
    LinearSolution::Solved {
        solution,
        rank,
        nullity: ncols - rank,
    }
}

pub fn rank(matrix: &[Vec<Rat>]) -> usize {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows = matrix.to_vec();
    row_reduce(&mut rows, ncols).len()
}

/// Determinant by elimination; the empty matrix has determinant one.
pub fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v -= &f * pv;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn rank_decides_consistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            solve(&a, &[int(1), int(3)], 2),
            LinearSolution::Inconsistent { rank: 1, .. }
        ));
        let sol = solve(&a, &[int(1), int(2)], 2);
        assert_eq!(sol.solution().unwrap(), &[int(1), int(0)]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn determinant_with_swaps() {
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), int(6));
        assert_eq!(determinant(Vec::new()), int(1));
    }
}
