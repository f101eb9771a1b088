//! Smith normal form and the integer solvers built on it.

use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of [`smith_normal_form`]: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal, consecutive diagonal entries dividing each other.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `d`, in divisibility order, all positive.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries, i.e. the rank of the source matrix.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Quotient `q` minimizing `|a - q*b|` (ties resolved toward zero).
///
/// Guarantees `|a - q*b| <= |b|/2`, which is what makes the pivot shrink
/// strictly in the elimination loops below.
pub(crate) fn nearest_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Smith normal form over the integers.
///
/// Pivoting picks the minimal-absolute-value nonzero entry of the remaining
/// submatrix, which keeps intermediate growth moderate. The output is
/// canonical: `d` has nonnegative diagonal entries with `d_1 | d_2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    assert!(!m.is_empty(), "smith_normal_form requires a nonempty matrix");
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        match min_abs_entry(&d, t) {
            None => break,
            Some((pr, pc)) => {
                if pr != t {
                    d.swap_rows(t, pr);
                    u.swap_rows(t, pr);
                }
                if pc != t {
                    d.swap_cols(t, pc);
                    v.swap_cols(t, pc);
                }
            }
        }

        loop {
            clear_cross(&mut d, &mut u, &mut v, t);
            // Pivot must divide the whole remaining submatrix; if not, fold
            // the offending row into row t and eliminate again, which
            // replaces the pivot by a proper divisor.
            let pivot = d.at(t, t).clone();
            let bad = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !d.at(r, c).is_multiple_of(&pivot));
            match bad {
                Some((r, _)) => {
                    d.add_row_multiple(t, r, &BigInt::from(1));
                    u.add_row_multiple(t, r, &BigInt::from(1));
                }
                None => break,
            }
        }

        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors: Vec<BigInt> = (0..rows.min(cols))
        .map(|i| d.at(i, i).clone())
        .filter(|x| !x.is_zero())
        .collect();

    SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}

/// Position of the minimal-absolute-value nonzero entry of the submatrix
/// starting at `(t, t)`, or `None` if that submatrix is zero.
fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            let x = d.at(r, c);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if d.at(br, bc).abs() <= x.abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

/// Eliminate every entry of row `t` and column `t` beyond the pivot.
///
/// Each pass uses nearest-integer division, so a nonzero remainder is at
/// most half the pivot; swapping it into the pivot position strictly
/// shrinks the pivot and the loop terminates.
fn clear_cross(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    loop {
        let mut clean = true;
        for r in t + 1..d.rows() {
            if d.at(r, t).is_zero() {
                continue;
            }
            let q = nearest_div(d.at(r, t), d.at(t, t));
            if !q.is_zero() {
                let nq = -q;
                d.add_row_multiple(r, t, &nq);
                u.add_row_multiple(r, t, &nq);
            }
            if !d.at(r, t).is_zero() {
                d.swap_rows(t, r);
                u.swap_rows(t, r);
                clean = false;
            }
        }
        for c in t + 1..d.cols() {
            if d.at(t, c).is_zero() {
                continue;
            }
            let q = nearest_div(d.at(t, c), d.at(t, t));
            if !q.is_zero() {
                let nq = -q;
                d.add_col_multiple(c, t, &nq);
                v.add_col_multiple(c, t, &nq);
            }
            if !d.at(t, c).is_zero() {
                d.swap_cols(t, c);
                v.swap_cols(t, c);
                clean = false;
            }
        }
        if clean {
            return;
        }
    }
}

/// Basis of the integer kernel lattice `{x : m*x = 0}`, canonicalized via
/// the Hermite form of the kernel so the output is deterministic. Empty
/// iff the kernel is trivial.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    if m.cols() == 0 {
        return Vec::new();
    }
    if m.rows() == 0 || m.is_zero() {
        return IntMatrix::identity(m.cols())
            .columns()
            .into_iter()
            .collect();
    }
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    if rank == m.cols() {
        return Vec::new();
    }
    let gens = IntMatrix::from_fn(m.cols() - rank, m.cols(), |r, c| {
        snf.v.at(c, rank + r).clone()
    });
    let hermite = super::row_hermite(&gens);
    (0..hermite.rows()).map(|r| hermite.row(r)).collect()
}

/// Some integer `x` with `m*x = b`, or `None` when `b` is not in the integer
/// column span of `m`.
pub fn integer_solution(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch");
    if m.cols() == 0 || m.rows() == 0 || m.is_zero() {
        return b.iter().all(|x| x.is_zero()).then(|| vec![BigInt::zero(); m.cols()]);
    }
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for i in 0..m.rows() {
        if i < rank {
            let di = snf.d.at(i, i);
            if !c[i].is_multiple_of(di) {
                return None;
            }
            y[i] = &c[i] / di;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

impl IntMatrix {
    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols() {
            let x = self.at(a, c).clone();
            let y = self.at(b, c).clone();
            self.set(a, c, y);
            self.set(b, c, x);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows() {
            let x = self.at(r, a).clone();
            let y = self.at(r, b).clone();
            self.set(r, a, y);
            self.set(r, b, x);
        }
    }

    /// row `dst` += `k` * row `src`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        assert_ne!(dst, src);
        for c in 0..self.cols() {
            let v = self.at(dst, c) + k * self.at(src, c);
            self.set(dst, c, v);
        }
    }

    /// column `dst` += `k` * column `src`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        assert_ne!(dst, src);
        for r in 0..self.rows() {
            let v = self.at(r, dst) + k * self.at(r, src);
            self.set(r, dst, v);
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols() {
            let v = -self.at(r, c);
            self.set(r, c, v);
        }
    }
}
