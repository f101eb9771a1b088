//! Downgrading a trinomial algebra presentation to a Cox-ring grading.
//!
//! The base grading of `R[S_1..S_m]` is coarsened through a block matrix
//! that stacks `s` extra integer rows under the exponent matrix: `d` over
//! the `T` columns and `d'` over the `S` columns. The coarsened grading
//! group is the cokernel of the transposed block matrix. Admissibility asks
//! the columns of the block matrix to be pairwise different primitive
//! vectors that generate the ambient rational space as a cone; only then is
//! the downgraded algebra a Cox ring.

use crate::abgroup::{ElementOrder, FgAbGroup, GroupElement};
use crate::lattice::{self, IntMatrix};
use crate::poly::Homogeneity;
use crate::trinomial::RingPresentation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// The downgrade datum: `s` extra rows over the `T` and `S` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DowngradeData {
    d: IntMatrix,
    d_prime: IntMatrix,
}

impl DowngradeData {
    pub fn new(d: IntMatrix, d_prime: IntMatrix) -> Self {
        assert_eq!(d.rows(), d_prime.rows(), "d and d' must have equal row counts");
        DowngradeData { d, d_prime }
    }

    /// Number of extra grading rows.
    pub fn s(&self) -> usize {
        self.d.rows()
    }

    /// Number of extra free variables `S_k`.
    pub fn extra_vars(&self) -> usize {
        self.d_prime.cols()
    }

    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn d_prime(&self) -> &IntMatrix {
        &self.d_prime
    }
}

/// Outcome of the admissibility check, one verdict per condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// `0 < s < n + m - r`
    pub bound_ok: bool,
    /// Columns whose entries have a common divisor (or are zero).
    pub nonprimitive_columns: Vec<usize>,
    /// Pairs of equal columns.
    pub duplicate_columns: Vec<(usize, usize)>,
    /// Columns generate the whole space as a cone.
    pub cone_full: bool,
}

impl AdmissibilityReport {
    pub fn columns_primitive(&self) -> bool {
        self.nonprimitive_columns.is_empty()
    }

    pub fn columns_distinct(&self) -> bool {
        self.duplicate_columns.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.bound_ok && self.columns_primitive() && self.columns_distinct() && self.cone_full
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bound: {}, primitive: {}, distinct: {}, cone full: {}",
            self.bound_ok,
            self.columns_primitive(),
            self.columns_distinct(),
            self.cone_full
        )
    }
}

/// Runs the three admissibility verdicts plus the row-count bound on an
/// already assembled block matrix of shape `(r+s) x (n+m)`.
pub fn check_admissible(
    block: &IntMatrix,
    r: usize,
    s: usize,
    n: usize,
    m: usize,
) -> AdmissibilityReport {
    assert_eq!(block.rows(), r + s, "block matrix has wrong row count");
    assert_eq!(block.cols(), n + m, "block matrix has wrong column count");
    let bound_ok = s > 0 && s + r < n + m;
    let columns = block.columns();
    let nonprimitive_columns = (0..columns.len())
        .filter(|&c| !lattice::is_primitive(&columns[c]))
        .collect();
    let mut duplicate_columns = Vec::new();
    for i in 0..columns.len() {
        for j in i + 1..columns.len() {
            if columns[i] == columns[j] {
                duplicate_columns.push((i, j));
            }
        }
    }
    let cone_full = lattice::cone_is_full(&columns, r + s);
    AdmissibilityReport {
        bound_ok,
        nonprimitive_columns,
        duplicate_columns,
        cone_full,
    }
}

/// The downgraded presentation: block matrix, coarsened grading group and
/// the degrees of all `T` and `S` variables.
#[derive(Clone, Debug)]
pub struct CoxPresentation {
    base: RingPresentation,
    data: DowngradeData,
    block_matrix: IntMatrix,
    grading: FgAbGroup,
    t_degrees: Vec<GroupElement>,
    s_degrees: Vec<GroupElement>,
    admissibility: AdmissibilityReport,
}

impl CoxPresentation {
    /// Assembles the block matrix, checks admissibility and computes the
    /// coarsened grading. Inadmissible data is returned as the failing
    /// report.
    ///
    /// On success the constructor verifies that every base relation stays
    /// homogeneous in the coarsened grading and that the variable degrees
    /// generate it.
    pub fn build(
        base: RingPresentation,
        data: DowngradeData,
    ) -> Result<CoxPresentation, Box<AdmissibilityReport>> {
        let r = base.triple().r();
        let n = base.triple().total_vars();
        let s = data.s();
        let m = data.extra_vars();
        assert_eq!(data.d().cols(), n, "d must have one column per T variable");

        let block = block_matrix(base.p_matrix(), data.d(), data.d_prime());
        let admissibility = check_admissible(&block, r, s, n, m);
        if !admissibility.is_admissible() {
            return Err(Box::new(admissibility));
        }

        let grading = FgAbGroup::quotient(n + m, block.transpose());
        let degrees: Vec<GroupElement> = (0..n + m)
            .map(|v| {
                let mut e = vec![BigInt::zero(); n + m];
                e[v] = BigInt::one();
                grading.project(&e)
            })
            .collect();
        let t_degrees = degrees[..n].to_vec();
        let s_degrees = degrees[n..].to_vec();

        // coarsening consistency: relations stay homogeneous downstairs
        for rel in base.relations() {
            let lifted = rel.extend_vars(n + m);
            assert!(
                matches!(
                    lifted.homogeneity(&grading, &degrees),
                    Homogeneity::Homogeneous(_)
                ),
                "base relation lost homogeneity under downgrade"
            );
        }
        let basis: Vec<Vec<BigInt>> = (0..n + m)
            .map(|v| {
                let mut e = vec![BigInt::zero(); n + m];
                e[v] = BigInt::one();
                e
            })
            .collect();
        assert!(grading.generates(&basis), "degrees must generate the grading group");

        Ok(CoxPresentation {
            base,
            data,
            block_matrix: block,
            grading,
            t_degrees,
            s_degrees,
            admissibility,
        })
    }

    pub fn base(&self) -> &RingPresentation {
        &self.base
    }

    pub fn data(&self) -> &DowngradeData {
        &self.data
    }

    pub fn block_matrix(&self) -> &IntMatrix {
        &self.block_matrix
    }

    /// The coarsened grading group.
    pub fn grading(&self) -> &FgAbGroup {
        &self.grading
    }

    pub fn t_degrees(&self) -> &[GroupElement] {
        &self.t_degrees
    }

    pub fn s_degrees(&self) -> &[GroupElement] {
        &self.s_degrees
    }

    pub fn admissibility(&self) -> &AdmissibilityReport {
        &self.admissibility
    }

    /// Isotropy order along the divisor of the given column: infinite when
    /// the first `r` coordinates vanish (the `S` columns), otherwise their
    /// gcd, which for a `T` column is exactly its exponent.
    pub fn isotropy_order(&self, column: usize) -> ElementOrder {
        let v = self.block_matrix.col(column);
        assert!(lattice::is_primitive(&v), "column must be primitive");
        let r = self.base.triple().r();
        let head = &v[..r];
        if head.iter().all(|x| x.is_zero()) {
            ElementOrder::Infinite
        } else {
            ElementOrder::Finite(lattice::gcd_all(head))
        }
    }

    /// True iff the degrees of all `n + m` variables are pairwise distinct,
    /// the computable certificate for pairwise nonassociated generators.
    pub fn degrees_pairwise_distinct(&self) -> bool {
        let all: Vec<&GroupElement> = self.t_degrees.iter().chain(&self.s_degrees).collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i] == all[j] {
                    return false;
                }
            }
        }
        true
    }

    /// A strictly positive rational kernel vector of the block matrix,
    /// certifying pointedness of the coarsened grading.
    pub fn pointedness_certificate(&self) -> Option<Vec<BigRational>> {
        lattice::positive_kernel_vector(&self.block_matrix)
    }
}

/// Assembles the full downgrade matrix for a base presentation and datum;
/// the same matrix [`CoxPresentation::build`] checks and stores.
pub fn assemble_block(base: &RingPresentation, data: &DowngradeData) -> IntMatrix {
    block_matrix(base.p_matrix(), data.d(), data.d_prime())
}

/// `[[P, 0], [d, d']]`
fn block_matrix(p: &IntMatrix, d: &IntMatrix, d_prime: &IntMatrix) -> IntMatrix {
    let r = p.rows();
    let n = p.cols();
    let s = d.rows();
    let m = d_prime.cols();
    IntMatrix::from_fn(r + s, n + m, |row, col| {
        if row < r {
            if col < n {
                p.at(row, col).clone()
            } else {
                BigInt::zero()
            }
        } else if col < n {
            d.at(row - r, col).clone()
        } else {
            d_prime.at(row - r, col - n).clone()
        }
    })
}

/// The surface downgrade: one extra row, two extra variables with
/// coefficients `1` and `-1`, and per block the lexicographically smallest
/// positive `d` entries that are coprime to their exponents with strictly
/// increasing ratios `d_ij / l_ij`.
pub fn surface_recipe(base: &RingPresentation) -> DowngradeData {
    let triple = base.triple();
    let n = triple.total_vars();
    let mut entries = Vec::with_capacity(n);
    for row in triple.exponents() {
        let mut prev: Option<BigRational> = None;
        for &l in row {
            let li = BigInt::from(l);
            // smallest candidate with candidate / l strictly above prev
            let mut candidate = match &prev {
                None => BigInt::one(),
                Some(p) => (p * BigRational::from(li.clone())).floor().to_integer() + 1,
            };
            if candidate < BigInt::one() {
                candidate = BigInt::one();
            }
            while !candidate.gcd(&li).is_one() {
                candidate += 1;
            }
            prev = Some(BigRational::new(candidate.clone(), li));
            entries.push(candidate);
        }
    }
    let d = IntMatrix::from_fn(1, n, |_, c| entries[c].clone());
    let d_prime = IntMatrix::from_fn(1, 2, |_, c| {
        if c == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    });
    DowngradeData::new(d, d_prime)
}

/// Display name `S_1`-style for the extra variables, 1-based.
pub fn s_var_name(k: usize) -> String {
    format!("S_{}", k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trinomial::TripleData;

    fn example_base() -> RingPresentation {
        TripleData::from_i64(&[(1, 0), (1, 1), (0, 1)], &[&[2], &[2], &[2]])
            .presentation()
            .unwrap()
    }

    #[test]
    fn recipe_on_the_example() {
        let base = example_base();
        let data = surface_recipe(&base);
        assert_eq!(data.s(), 1);
        assert_eq!(data.extra_vars(), 2);
        assert_eq!(*data.d(), IntMatrix::from_i64_rows(&[&[1, 1, 1]]));
        assert_eq!(*data.d_prime(), IntMatrix::from_i64_rows(&[&[1, -1]]));
        let cox = CoxPresentation::build(base, data).unwrap();
        assert_eq!(
            *cox.block_matrix(),
            IntMatrix::from_i64_rows(&[
                &[-2, 2, 0, 0, 0],
                &[-2, 0, 2, 0, 0],
                &[1, 1, 1, 1, -1]
            ])
        );
        assert!(cox.admissibility().is_admissible());
    }

    #[test]
    fn recipe_ratios_increase_within_blocks() {
        let base = TripleData::from_i64(&[(1, 0), (1, 1), (0, 1)], &[&[2, 2], &[1], &[3]])
            .presentation()
            .unwrap();
        let data = surface_recipe(&base);
        // block (2,2) needs 1/2 < 3/2; block (1) takes 1; block (3) takes 1
        assert_eq!(*data.d(), IntMatrix::from_i64_rows(&[&[1, 3, 1, 1]]));
    }

    #[test]
    fn example_downgrade_grading() {
        let base = example_base();
        let data = surface_recipe(&base);
        let cox = CoxPresentation::build(base, data).unwrap();
        // rank n + m - (r + s) = 5 - 3
        assert_eq!(cox.grading().rank(), 2);
        assert!(cox.degrees_pairwise_distinct());
        let two = BigInt::from(2);
        assert_eq!(cox.isotropy_order(0), ElementOrder::Finite(two.clone()));
        assert_eq!(cox.isotropy_order(1), ElementOrder::Finite(two.clone()));
        assert_eq!(cox.isotropy_order(2), ElementOrder::Finite(two));
        assert_eq!(cox.isotropy_order(3), ElementOrder::Infinite);
        assert_eq!(cox.isotropy_order(4), ElementOrder::Infinite);
        assert!(cox.pointedness_certificate().is_some());
    }

    #[test]
    fn duplicate_columns_fail_distinctness() {
        let base = example_base();
        // two S columns with equal entries duplicate each other
        let d = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let d_prime = IntMatrix::from_i64_rows(&[&[1, 1]]);
        let err = CoxPresentation::build(base, DowngradeData::new(d, d_prime)).unwrap_err();
        assert!(!err.columns_distinct());
        assert_eq!(err.duplicate_columns, vec![(3, 4)]);
    }

    #[test]
    fn nonnegative_last_row_fails_cone() {
        let base = example_base();
        let d = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let d_prime = IntMatrix::from_i64_rows(&[&[1, 3]]);
        let err = CoxPresentation::build(base, DowngradeData::new(d, d_prime)).unwrap_err();
        // every column has nonnegative last coordinate: -e_3 is unreachable
        assert!(!err.cone_full);
    }

    #[test]
    fn zero_s_fails_bound() {
        let base = example_base();
        let d = IntMatrix::zeros(0, 3);
        let d_prime = IntMatrix::zeros(0, 0);
        let err = CoxPresentation::build(base, DowngradeData::new(d, d_prime)).unwrap_err();
        assert!(!err.bound_ok);
    }

    #[test]
    fn nonprimitive_column_is_reported() {
        let base = example_base();
        let d = IntMatrix::from_i64_rows(&[&[0, 1, 1]]);
        let d_prime = IntMatrix::from_i64_rows(&[&[1, -1]]);
        // first column becomes (-2, -2, 0): gcd 2
        let err = CoxPresentation::build(base, DowngradeData::new(d, d_prime)).unwrap_err();
        assert_eq!(err.nonprimitive_columns, vec![0]);
    }

    #[test]
    fn r1_base_without_extra_vars() {
        // two blocks sized (2, 1): no relations at all
        let base = TripleData::from_i64(&[(1, 0), (1, 1)], &[&[1, 2], &[1]])
            .presentation()
            .unwrap();
        let d = IntMatrix::from_i64_rows(&[&[1, -1, 0]]);
        let d_prime = IntMatrix::zeros(1, 0);
        let cox = CoxPresentation::build(base, DowngradeData::new(d, d_prime)).unwrap();
        assert!(cox.admissibility().is_admissible());
        assert_eq!(cox.grading().rank(), 1); // 3 + 0 - (1 + 1)
        assert_eq!(cox.s_degrees().len(), 0);
    }

    #[test]
    fn isotropy_gcd_on_merged_column() {
        // block 0 column of the example block matrix is (-2, -2, 1):
        // the first r coordinates have gcd 2 = l_01
        let base = example_base();
        let cox = CoxPresentation::build(base, surface_recipe(&example_base())).unwrap();
        let col = cox.block_matrix().col(0);
        assert_eq!(col[..2], [BigInt::from(-2), BigInt::from(-2)]);
        assert_eq!(cox.isotropy_order(0), ElementOrder::Finite(BigInt::from(2)));
    }
}
