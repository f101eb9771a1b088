//! Row-style Hermite normal form, used to canonicalize lattice bases.

use super::snf::nearest_div;
use super::IntMatrix;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form of the lattice spanned by the rows of `m`.
///
/// The result has one row per basis vector of the row lattice: pivots are
/// positive, strictly to the right of the pivot of the previous row, and
/// entries above a pivot are reduced into `[0, pivot)`. Zero rows are
/// dropped, so two generating sets of the same lattice yield identical
/// output.
pub fn row_hermite(m: &IntMatrix) -> IntMatrix {
    let mut work = m.clone();
    let rows = work.rows();
    let cols = work.cols();
    let mut pivot_row = 0;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // gcd-reduce all entries of this column at or below pivot_row into one
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if work.at(r, col).is_zero() {
                    continue;
                }
                match best {
                    Some(b) if work.at(b, col).abs() <= work.at(r, col).abs() => {}
                    _ => best = Some(r),
                }
            }
            let Some(b) = best else { break };
            let mut others = false;
            for r in pivot_row..rows {
                if r == b || work.at(r, col).is_zero() {
                    continue;
                }
                others = true;
                let q = -nearest_div(work.at(r, col), work.at(b, col));
                work.add_row_multiple(r, b, &q);
            }
            if !others {
                work.swap_rows(pivot_row, b);
                if work.at(pivot_row, col).is_negative() {
                    work.negate_row(pivot_row);
                }
                for r in 0..pivot_row {
                    let q = -work.at(r, col).div_floor(work.at(pivot_row, col));
                    if !q.is_zero() {
                        work.add_row_multiple(r, pivot_row, &q);
                    }
                }
                pivot_row += 1;
                break;
            }
        }
    }

    IntMatrix::from_fn(pivot_row, cols, |r, c| work.at(r, c).clone())
}
