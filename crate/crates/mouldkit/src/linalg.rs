//! Exact dense linear algebra over the rationals: reduced row echelon form,
//! rank, nullspace and linear solves.

use num::{One, Zero};

use crate::scalar::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Vec<Q>>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![vec![Q::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i][i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            entries: rows,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.entries[i]
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.entries[i][c].is_zero()) else {
                continue;
            };
            m.entries.swap(r, p);
            let inv = m.entries[r][c].clone().recip();
            for j in c..m.cols {
                let v = m.entries[r][j].clone() * &inv;
                m.entries[r][j] = v;
            }
            for i in 0..m.rows {
                if i != r && !m.entries[i][c].is_zero() {
                    let f = m.entries[i][c].clone();
                    for j in c..m.cols {
                        let sub = m.entries[r][j].clone() * &f;
                        m.entries[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right nullspace (kernel of self as a map on column
    /// vectors).
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let is_pivot = |c: usize| pivots.contains(&c);
        for free in (0..self.cols).filter(|&c| !is_pivot(c)) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.entries[pi][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self * x = b; None when inconsistent. When the system is
    /// underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.entries[i][j] = self.entries[i][j].clone();
            }
            aug.entries[i][self.cols] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a pivot in the augmented column
        }
        let mut x = vec![Q::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r.entries[pi][self.cols].clone();
        }
        Some(x)
    }
}

/// rank of the row span of a set of vectors.
pub fn row_rank(vectors: &[Vec<Q>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_rows(vectors.to_vec()).rank()
}

/// True iff the two families of vectors span the same subspace, decided by
/// rank of the stacked matrices (double inclusion).
pub fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    let ra = row_rank(a);
    let rb = row_rank(b);
    if ra != rb {
        return false;
    }
    let mut stacked = a.to_vec();
    stacked.extend(b.iter().cloned());
    row_rank(&stacked) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(3).rank(), 3);
        assert_eq!(RationalMatrix::zero(2, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn nullspace_example() {
        let ns = m(&[&[1, 2], &[2, 4]]).nullspace();
        assert_eq!(ns.len(), 1);
        // spanned by (-2, 1)
        assert_eq!(ns[0], vec![q(-2), q(1)]);
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let x = a.solve(&[q(4), q(9)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        // inconsistent
        let a = m(&[&[1, 1], &[1, 1]]);
        assert!(a.solve(&[q(1), q(2)]).is_none());
        // underdetermined but consistent
        let a = m(&[&[1, 1]]);
        let x = a.solve(&[q(5)]).unwrap();
        assert_eq!(x[0] .clone()+ x[1].clone(), q(5));
    }

    #[test]
    fn span_comparison() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert!(same_span(&a, &b));
        let c = vec![vec![q(1), q(1)]];
        assert!(!same_span(&a, &c));
    }

    #[test]
    fn rref_is_idempotent() {
        let a = m(&[&[0, 2, 1], &[1, 1, 0], &[1, 3, 1]]);
        let (r, _) = a.rref();
        let (rr, _) = r.rref();
        assert_eq!(r, rr);
        assert_eq!(a.rank(), 2);
    }
}
