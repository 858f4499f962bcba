//! Exact linear solving and polynomial interpolation.


use super::{DimPoly, ExactError, RatFun, Rational};

/// Solve an overdetermined linear system `A x = rhs` over the field of
/// rational functions in `n`, exactly.
///
/// A full-column-rank square subsystem is selected greedily and solved by
/// fraction-free (Bareiss) elimination, so intermediate entries stay
/// polynomial with exact divisions. Returns the unique solution of that
/// subsystem; the caller is responsible for verifying the remaining rows.
///
/// Errors with [`ExactError::SingularSystem`] when no full-column-rank square
/// subsystem exists (this includes underdetermined inputs).
pub fn solve_linear_exact(
    a: &[Vec<RatFun>],
    rhs: &[RatFun],
) -> Result<Vec<RatFun>, ExactError> {
    let rows = a.len();
    assert_eq!(rows, rhs.len(), "matrix/rhs row mismatch");
    let cols = a.first().map_or(0, Vec::len);
    if rows < cols || cols == 0 {
        return Err(ExactError::SingularSystem);
    }

    // Clear each row to polynomial entries (augmented with rhs).
    let mut m: Vec<Vec<DimPoly>> = Vec::with_capacity(rows);
    for (row, r) in a.iter().zip(rhs) {
        assert_eq!(row.len(), cols, "ragged matrix");
        let mut lcd = DimPoly::one();
        for entry in row.iter().chain(std::iter::once(r)) {
            let den = entry.den();
            let g = lcd.gcd(den);
            lcd = &lcd * &den.div_exact(&g);
        }
        let mut cleared: Vec<DimPoly> = Vec::with_capacity(cols + 1);
        for entry in row.iter().chain(std::iter::once(r)) {
            cleared.push((&lcd * entry.num()).div_exact(entry.den()));
        }
        m.push(cleared);
    }

    // Bareiss elimination with greedy pivot-row selection. `m[0..step]` holds
    // the chosen pivot rows in order.
    let mut prev_pivot = DimPoly::one();
    for step in 0..cols {
        let pivot_row = (step..rows)
            .filter(|&i| !m[i][step].is_zero())
            .min_by_key(|&i| m[i][step].degree().unwrap_or(0))
            .ok_or(ExactError::SingularSystem)?;
        m.swap(step, pivot_row);
        let pivot = m[step][step].clone();
        for i in (step + 1)..rows {
            let lead = m[i][step].clone();
            for j in step..=cols {
                let t = &(&m[i][j] * &pivot) - &(&lead * &m[step][j]);
                m[i][j] = t.div_exact(&prev_pivot);
            }
        }
        prev_pivot = pivot;
    }

    // Back-substitute over the field.
    let mut x = vec![RatFun::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = RatFun::from_poly(m[i][cols].clone());
        for j in (i + 1)..cols {
            acc = &acc - &(&RatFun::from_poly(m[i][j].clone()) * &x[j]);
        }
        x[i] = &acc / &RatFun::from_poly(m[i][i].clone());
    }
    Ok(x)
}

/// Reconstruct the unique polynomial of degree at most `degree_bound` through
/// the given points (distinct abscissae required; at least `degree_bound + 1`
/// points).
///
/// The polynomial is fitted through the first `degree_bound + 1` points by
/// Newton divided differences; any remaining points must lie on it, otherwise
/// the data needs a higher degree and [`ExactError::DegreeExceeded`] is
/// returned.
pub fn interpolate(
    points: &[(Rational, Rational)],
    degree_bound: usize,
) -> Result<DimPoly, ExactError> {
    assert!(
        points.len() > degree_bound,
        "need at least degree_bound + 1 points"
    );
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            assert!(xi != xj, "duplicate interpolation abscissa");
        }
    }

    let fit = &points[..=degree_bound];
    // Divided-difference table.
    let mut table: Vec<Rational> = fit.iter().map(|(_, y)| y.clone()).collect();
    let xs: Vec<Rational> = fit.iter().map(|(x, _)| x.clone()).collect();
    for level in 1..table.len() {
        for i in (level..table.len()).rev() {
            let dx = &xs[i] - &xs[i - level];
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
    }
    // Expand the Newton form into monomial coefficients.
    let mut poly = DimPoly::zero();
    let mut basis = DimPoly::one();
    for (i, coeff) in table.iter().enumerate() {
        poly = &poly + &basis.scale(coeff);
        if i + 1 < table.len() {
            let factor = DimPoly::from_coeffs(vec![-&xs[i], Rational::from_integer(1.into())]);
            basis = &basis * &factor;
        }
    }

    for (x, y) in &points[degree_bound + 1..] {
        if &poly.eval(x) != y {
            return Err(ExactError::DegreeExceeded {
                bound: degree_bound,
            });
        }
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn rf_ints(coeffs: &[i64]) -> RatFun {
        RatFun::from_poly(DimPoly::from_ints(coeffs))
    }

    #[test]
    fn identity_system() {
        let a = vec![
            vec![rf_ints(&[1]), rf_ints(&[0])],
            vec![rf_ints(&[0]), rf_ints(&[1])],
        ];
        let rhs = vec![rf_ints(&[0, 1]), rf_ints(&[3])];
        let x = solve_linear_exact(&a, &rhs).unwrap();
        assert_eq!(x[0], rf_ints(&[0, 1]));
        assert_eq!(x[1], rf_ints(&[3]));
    }

    #[test]
    fn first_order_coefficient_system() {
        // Three equations in (a, b) over Q(n) encoding the first-order
        // Euler-Lagrange relations; solution a = -n(n-2)/4, b = n(n-2)/4.
        let half = RatFun::from_poly(DimPoly::from_coeffs(vec![
            rat_int(0),
            rat(1, 2),
            rat(-1, 4),
        ])); // (n/2)(1 - n/2)
        let a = vec![
            vec![rf_ints(&[1]), rf_ints(&[0])],
            vec![rf_ints(&[-2]), rf_ints(&[0])],
            vec![rf_ints(&[0]), rf_ints(&[-1])],
        ];
        let rhs = vec![
            half.clone(),
            &(&half + &half) * &rf_ints(&[-1]),
            half.clone(),
        ];
        let x = solve_linear_exact(&a, &rhs).unwrap();
        let expect_a = DimPoly::from_coeffs(vec![rat_int(0), rat(1, 2), rat(-1, 4)]);
        assert_eq!(x[0].as_poly().unwrap(), &expect_a);
        assert_eq!(x[1].as_poly().unwrap(), &-&expect_a);
        // Surplus row check, as the solver contract leaves it to the caller.
        let resid = &(&a[1][0] * &x[0]) - &rhs[1];
        assert!(resid.is_zero());
    }

    #[test]
    fn dependent_rows_consistent() {
        // Two equations, one unknown, second row a scaling of the first: the
        // rank-1 square subsystem solves and the surplus row verifies zero.
        let p = rf_ints(&[1, 2]);
        let q = rf_ints(&[3, 0, 1]);
        let a = vec![vec![p.clone()], vec![&p + &p]];
        let rhs = vec![q.clone(), &q + &q];
        let x = solve_linear_exact(&a, &rhs).unwrap();
        assert_eq!(x[0], &q / &p);
        let resid = &(&a[1][0] * &x[0]) - &rhs[1];
        assert!(resid.is_zero());
    }

    #[test]
    fn singular_system_detected() {
        let a = vec![
            vec![rf_ints(&[1]), rf_ints(&[2])],
            vec![rf_ints(&[2]), rf_ints(&[4])],
        ];
        let rhs = vec![rf_ints(&[1]), rf_ints(&[2])];
        assert_eq!(
            solve_linear_exact(&a, &rhs),
            Err(ExactError::SingularSystem)
        );
    }

    #[test]
    fn interpolate_square() {
        let pts = vec![
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(2), rat_int(4)),
        ];
        let p = interpolate(&pts, 2).unwrap();
        assert_eq!(p, DimPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn interpolate_b2_samples() {
        // Samples of n(n-4)(n²-4)/16 at n = 5..10 reconstruct the quartic.
        let target = DimPoly::from_coeffs(vec![
            rat_int(0),
            rat(1, 2),
            rat(-1, 4),
            rat(-1, 4),
            rat(1, 16),
        ]);
        let pts: Vec<_> = (5..=10)
            .map(|n| (rat_int(n), target.eval(&rat_int(n))))
            .collect();
        assert_eq!(interpolate(&pts, 4).unwrap(), target);
    }

    #[test]
    fn interpolate_degree_exceeded() {
        let cubic = DimPoly::from_ints(&[0, 0, 0, 1]);
        let pts: Vec<_> = (0..5)
            .map(|n| (rat_int(n), cubic.eval(&rat_int(n))))
            .collect();
        assert_eq!(
            interpolate(&pts, 2),
            Err(ExactError::DegreeExceeded { bound: 2 })
        );
    }

    #[test]
    fn interpolate_collinear() {
        let pts = vec![
            (rat_int(1), rat_int(3)),
            (rat_int(2), rat_int(5)),
            (rat_int(3), rat_int(7)),
        ];
        let p = interpolate(&pts, 2).unwrap();
        assert_eq!(p, DimPoly::from_ints(&[1, 2]));
    }
}
