//! Row reduction over `F_q`.

use crate::table::GfTable;

/// A matrix in reduced row echelon form over a prefix of its columns; the
/// remaining columns ride along as right-hand sides.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    pub rows: Vec<Vec<u32>>,
    /// pivots[r] = column of the pivot in row r, for the first `rank` rows.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub(crate) fn row_reduce(t: &GfTable, mut rows: Vec<Vec<u32>>, pivot_cols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = t.inv(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = t.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v = t.sub(*v, t.mul(f, pv));
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, pivots }
}

/// Basis of `{x : M x = 0}` for `M` given by rows with `ncols` columns, one
/// vector per free column, in increasing free-column order.
pub(crate) fn nullspace(t: &GfTable, rows: Vec<Vec<u32>>, ncols: usize) -> Vec<Vec<u32>> {
    let ech = row_reduce(t, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (r, &pc) in ech.pivots.iter().enumerate() {
                v[pc] = t.neg(ech.rows[r][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let t = GfTable::prime(5);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 1]];
        let basis = nullspace(&t, rows.clone(), 3);
        assert_eq!(basis.len(), 3 - row_reduce(&t, rows.clone(), 3).rank());
        for v in &basis {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| t.add(acc, t.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }
}
