//! Exact Gaussian elimination over any [`Field`].

use crate::scalar::Field;

/// Reduces `rows` in place to row echelon form and returns the rank.
fn eliminate<F: Field>(rows: &mut [Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero_elem()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero_elem() {
                continue;
            }
            let factor = row[col].div_elem(&prow[col]);
            for c in col..ncols {
                let delta = factor.mul_elem(&prow[c]);
                row[c] = row[c].sub_elem(&delta);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of the matrix whose rows are `rows`. All rows must have equal length.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut work = rows.to_vec();
    eliminate(&mut work)
}

/// Solves the square system `matrix * x = rhs`; `None` if the matrix is singular.
#[allow(clippy::needless_range_loop)]
pub fn solve<F: Field>(matrix: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n);
    let mut aug: Vec<Vec<F>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero_elem())?;
        aug.swap(col, pivot);
        for r in 0..n {
            if r == col || aug[r][col].is_zero_elem() {
                continue;
            }
            let factor = aug[r][col].div_elem(&aug[col][col]);
            for c in col..=n {
                let delta = factor.mul_elem(&aug[col][c]);
                aug[r][c] = aug[r][c].sub_elem(&delta);
            }
        }
    }
    Some((0..n).map(|i| aug[i][n].div_elem(&aug[i][i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational_from_i64 as q, ModP};
    use num_rational::BigRational;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn rank_over_rationals() {
        assert_eq!(rank(&mat(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[2, 4], &[1, 2]])), 1);
        assert_eq!(rank::<BigRational>(&[]), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2: singular only in characteristic 2
        let rows = [[1u64, 1], [1, 3]];
        let over = |p: u64| {
            let m: Vec<Vec<ModP>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| ModP::new(v, p)).collect())
                .collect();
            rank(&m)
        };
        assert_eq!(over(2), 1);
        assert_eq!(over(3), 2);
    }

    #[test]
    fn solve_small_system() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let b = vec![q(3), q(5)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(
            x,
            vec![
                BigRational::new(4.into(), 5.into()),
                BigRational::new(7.into(), 5.into())
            ]
        );
        assert!(solve(&mat(&[&[1, 2], &[2, 4]]), &[q(1), q(2)]).is_none());
    }
}
