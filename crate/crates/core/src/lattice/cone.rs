//! Exact rational cone membership via phase-one simplex.
//!
//! No floating point: the tableau holds `BigRational` entries and Bland's
//! rule guarantees termination, so membership is decided exactly.

use super::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Nonnegative rational coefficients expressing `target` in terms of
/// `columns`, or `None` when no such combination exists.
///
/// Solves the phase-one problem for `A x = b, x >= 0` where `A` has the
/// given columns: artificial variables are introduced per row and their sum
/// minimized; the system is feasible iff the minimum is zero.
pub fn nonneg_combination(
    columns: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let m = target.len();
    let n = columns.len();
    assert!(
        columns.iter().all(|c| c.len() == m),
        "dimension mismatch between generators and target"
    );

    let width = n + m + 1; // structural + artificial + rhs
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = target[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for col in columns {
            row.push(if flip { -&col[i] } else { col[i].clone() });
        }
        for j in 0..m {
            row.push(if j == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        row.push(if flip { -&target[i] } else { target[i].clone() });
        tab.push(row);
    }
    // objective row: reduced costs for minimizing the sum of artificials,
    // stored so that obj[j] = 0 for every basic column
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for j in (0..n).chain([width - 1]) {
            obj[j] -= &row[j];
        }
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: entering column is the lowest-index negative reduced cost
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        // ratio test, ties by lowest basis index (Bland)
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let cur = &tab[i][width - 1] / &tab[i][enter];
                    let best = &tab[l][width - 1] / &tab[l][enter];
                    cur < best || (cur == best && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let Some(l) = leave else {
            // sum of artificials is bounded below by zero, so this is
            // unreachable; bail out as infeasible rather than loop
            return None;
        };
        pivot(&mut tab, &mut obj, l, enter);
        basis[l] = enter;
    }

    if !obj[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = tab[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<BigRational>], obj: &mut [BigRational], l: usize, enter: usize) {
    let p = tab[l][enter].clone();
    for x in tab[l].iter_mut() {
        *x /= &p;
    }
    let pivot_row = tab[l].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == l || row[enter].is_zero() {
            continue;
        }
        let f = row[enter].clone();
        for (x, pv) in row.iter_mut().zip(&pivot_row) {
            *x -= &f * pv;
        }
    }
    if !obj[enter].is_zero() {
        let f = obj[enter].clone();
        for (x, pv) in obj.iter_mut().zip(&pivot_row) {
            *x -= &f * pv;
        }
    }
}

fn to_rational_columns(generators: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    generators
        .iter()
        .map(|g| g.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect()
}

/// True iff `point` is a nonnegative rational combination of `generators`.
/// All vectors must share one dimension `d >= 1`.
pub fn cone_contains(generators: &[Vec<BigInt>], point: &[BigRational]) -> bool {
    assert!(!point.is_empty(), "dimension must be at least 1");
    nonneg_combination(&to_rational_columns(generators), point).is_some()
}

/// True iff the cone spanned by `generators` is all of `Q^dim`, i.e. it
/// contains every `+e_i` and `-e_i`.
pub fn cone_is_full(generators: &[Vec<BigInt>], dim: usize) -> bool {
    assert!(dim >= 1, "dimension must be at least 1");
    assert!(
        generators.iter().all(|g| g.len() == dim),
        "dimension mismatch"
    );
    let columns = to_rational_columns(generators);
    for i in 0..dim {
        for sign in [1, -1] {
            let mut e = vec![BigRational::zero(); dim];
            e[i] = BigRational::from(BigInt::from(sign));
            if nonneg_combination(&columns, &e).is_none() {
                return false;
            }
        }
    }
    true
}

/// A strictly positive rational vector in the kernel of `m`, or `None`.
///
/// Existence is scale-invariant, so the search space is `x >= 1`
/// componentwise; substituting `x = 1 + y` reduces to feasibility of
/// `m y = -m 1` over `y >= 0`.
pub fn positive_kernel_vector(m: &IntMatrix) -> Option<Vec<BigRational>> {
    let ones = vec![BigInt::one(); m.cols()];
    let shift = m.mul_vec(&ones);
    let b: Vec<BigRational> = shift
        .iter()
        .map(|x| BigRational::from(-x.clone()))
        .collect();
    let columns = to_rational_columns(&m.columns());
    let y = nonneg_combination(&columns, &b)?;
    Some(y.into_iter().map(|v| v + BigRational::one()).collect())
}
