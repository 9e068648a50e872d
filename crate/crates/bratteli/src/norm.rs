//! Largest singular value of a small dense matrix.
//!
//! One-sided Jacobi: orthogonalise column pairs with plane rotations in a
//! fixed sweep order until every pair is numerically orthogonal, then read
//! off the largest column norm. Deterministic for a fixed input, which
//! keeps norm-based tests reproducible.

/// `a` is row-major `n × n`. `tolerance` bounds the accepted relative
/// off-diagonality of the final Gram matrix.
pub fn largest_singular_value(a: &[f64], n: usize, tolerance: f64) -> f64 {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return 0.0;
    }
    if n == 1 {
        return a[0].abs();
    }
    let mut m = a.to_vec();
    let eps = (tolerance.max(f64::EPSILON)) * 1e-3;
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for r in 0..n {
                    let x = m[r * n + p];
                    let y = m[r * n + q];
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if apq.abs() <= eps * (app * aqq).sqrt() || apq == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (2.0 * apq);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..n {
                    let x = m[r * n + p];
                    let y = m[r * n + q];
                    m[r * n + p] = c * x - s * y;
                    m[r * n + q] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut best = 0.0f64;
    for p in 0..n {
        let mut col = 0.0;
        for r in 0..n {
            let x = m[r * n + p];
            col += x * x;
        }
        best = best.max(col);
    }
    best.sqrt()
}
