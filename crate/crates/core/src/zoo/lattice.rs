//! Subgroups of `Z^n` in Hermite normal form.

/// Integer row reduction restricted to the first `pivot_cols` columns.
///
/// Returns `(echelon, rest)`: rows with a pivot, in Hermite normal form on
/// the pivot part (positive pivots, entries above a pivot reduced into
/// `[0, pivot)`), and the remaining rows whose pivot part is zero. Extra
/// columns are carried along, which is how transforms are tracked.
fn row_reduce(mut rows: Vec<Vec<i64>>, pivot_cols: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut r = 0;
    for c in 0..pivot_cols {
        loop {
            let best = (r..rows.len())
                .filter(|&i| rows[i][c] != 0)
                .min_by_key(|&i| rows[i][c].abs());
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c] != 0 {
                    let q = rows[i][c].div_euclid(rows[r][c]);
                    let pivot_row = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= q * p;
                    }
                    if rows[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && rows[r][c] != 0 {
            if rows[r][c] < 0 {
                rows[r].iter_mut().for_each(|x| *x = -*x);
            }
            let pivot_row = rows[r].clone();
            for row in rows.iter_mut().take(r) {
                let q = row[c].div_euclid(pivot_row[c]);
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= q * p;
                }
            }
            r += 1;
        }
    }
    let rest = rows.split_off(r);
    (rows, rest)
}

/// A subgroup of `Z^n` given by generators, stored as a Hermite basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Self {
        assert!(
            generators.iter().all(|g| g.len() == dim),
            "generator dimension mismatch"
        );
        let (basis, _) = row_reduce(generators.to_vec(), dim);
        let pivots = basis
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).expect("nonzero echelon row"))
            .collect();
        Lattice { dim, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Canonical representative of `v + L`: pivot coordinates land in
    /// `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let q = v[c].div_euclid(row[c]);
            for (x, p) in v.iter_mut().zip(row) {
                *x -= q * p;
            }
        }
        v
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// `L ∩ L'`, from the left kernel of the stacked bases.
    pub fn intersection(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let (r1, r2) = (self.rank(), other.rank());
        let total = r1 + r2;
        let augmented: Vec<Vec<i64>> = self
            .basis
            .iter()
            .chain(&other.basis)
            .enumerate()
            .map(|(i, row)| {
                let mut out = row.clone();
                out.extend((0..total).map(|j| i64::from(i == j)));
                out
            })
            .collect();
        let (_, kernel) = row_reduce(augmented, self.dim);
        let generators: Vec<Vec<i64>> = kernel
            .iter()
            .map(|row| {
                let x = &row[self.dim..self.dim + r1];
                (0..self.dim)
                    .map(|c| x.iter().zip(&self.basis).map(|(a, b)| a * b[c]).sum())
                    .collect()
            })
            .collect();
        Lattice::new(self.dim, &generators)
    }
}
