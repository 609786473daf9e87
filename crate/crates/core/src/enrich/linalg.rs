//! Dense LU decomposition with partial pivoting, used by the kriging solver.
//! Singularity surfaces as `None` rather than being regularized silently.

/// Row-major LU factorization of an n×n matrix.
pub struct LuFactors {
    lu: Vec<f64>,
    perm: Vec<usize>,
    n: usize,
}

/// Factor `a` (row-major, length n·n). Returns `None` when a pivot
/// collapses below `1e-12 · max|a|` (numerically singular).
pub fn lu_factor(mut a: Vec<f64>, n: usize) -> Option<LuFactors> {
    assert_eq!(a.len(), n * n);
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let tol = 1e-12 * scale;
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        // pivot: largest magnitude in column k at or below the diagonal
        let mut pivot_row = k;
        let mut pivot_val = a[k * n + k].abs();
        for r in (k + 1)..n {
            let v = a[r * n + k].abs();
            if v > pivot_val {
                pivot_val = v;
                pivot_row = r;
            }
        }
        if pivot_val < tol {
            return None;
        }
        if pivot_row != k {
            for c in 0..n {
                a.swap(k * n + c, pivot_row * n + c);
            }
            perm.swap(k, pivot_row);
        }
        let pivot = a[k * n + k];
        for r in (k + 1)..n {
            let factor = a[r * n + k] / pivot;
            a[r * n + k] = factor;
            for c in (k + 1)..n {
                a[r * n + c] -= factor * a[k * n + c];
            }
        }
    }
    Some(LuFactors { lu: a, perm, n })
}

impl LuFactors {
    /// Solve A·x = b for one right-hand side.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut x: Vec<f64> = self.perm.iter().map(|&p| b[p]).collect();
        // forward substitution (unit lower triangle)
        for r in 1..n {
            let mut acc = x[r];
            for c in 0..r {
                acc -= self.lu[r * n + c] * x[c];
            }
            x[r] = acc;
        }
        // back substitution
        for r in (0..n).rev() {
            let mut acc = x[r];
            for c in (r + 1)..n {
                acc -= self.lu[r * n + c] * x[c];
            }
            x[r] = acc / self.lu[r * n + r];
        }
        x
    }
}
