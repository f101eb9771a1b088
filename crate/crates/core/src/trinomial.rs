//! The graded trinomial algebra construction.
//!
//! A defining datum consists of a sequence of coefficient pairs
//! `a_0, ..., a_r`, block sizes `n_0, ..., n_r` and positive exponents
//! `l_ij`. It determines a polynomial ring in variables `T_ij`
//! (`0 <= i <= r`, one variable per block slot), trinomial relations
//! between the block monomials, and a grading by the cokernel of the
//! transposed exponent matrix under which all relations are homogeneous of
//! the same degree.
//!
//! Index convention: block indices `i` and slot indices within a block are
//! both 0-based throughout the API; renderings (variable names such as
//! `T_01`) print the slot 1-based.

use crate::abgroup::{FgAbGroup, GroupElement};
use crate::lattice::IntMatrix;
use crate::poly::{Homogeneity, SparsePoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// The defining datum `(A, n, L)` of a graded trinomial algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleData {
    pairs: Vec<(BigRational, BigRational)>,
    block_sizes: Vec<usize>,
    exponents: Vec<Vec<u64>>,
}

/// A single way in which a [`TripleData`] fails its invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Fewer than two coefficient pairs.
    TooFewBlocks { found: usize },
    /// `block_sizes` or `exponents` does not have one entry per pair.
    ShapeMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    /// Block `block` has size zero.
    EmptyBlock { block: usize },
    /// Exponent row of block `block` disagrees with its size.
    RaggedExponents {
        block: usize,
        expected: usize,
        found: usize,
    },
    /// `l` entry at (block, slot) is zero.
    NonPositiveExponent { block: usize, slot: usize },
    /// Pairs `i` and `k` are linearly dependent (their determinant vanishes).
    DependentPair { i: usize, k: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewBlocks { found } => {
                write!(f, "need at least 2 coefficient pairs, found {found}")
            }
            Violation::ShapeMismatch {
                field,
                expected,
                found,
            } => write!(f, "{field} must have {expected} entries, found {found}"),
            Violation::EmptyBlock { block } => write!(f, "positivity: n[{block}] must be >= 1"),
            Violation::RaggedExponents {
                block,
                expected,
                found,
            } => write!(
                f,
                "L[{block}] must have {expected} entries to match n, found {found}"
            ),
            Violation::NonPositiveExponent { block, slot } => {
                write!(f, "positivity: L[{block}][{slot}] must be >= 1")
            }
            Violation::DependentPair { i, k } => {
                write!(f, "alpha_{{{i},{k}}} = 0: pairs {i} and {k} are linearly dependent")
            }
        }
    }
}

/// Why a factoriality decision could not be made.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FactorialityError {
    /// The gcd criterion is only established for sincere data.
    #[error("factoriality criterion requires a sincere triple")]
    NotSincere,
    /// The two routes to the verdict disagreed; this indicates a bug and is
    /// surfaced loudly instead of returning either answer.
    #[error(
        "internal consistency failure: gcd criterion says {pairwise_coprime}, \
         torsion says {torsion_free}"
    )]
    EvidenceMismatch {
        pairwise_coprime: bool,
        torsion_free: bool,
    },
}

/// Both routes to the factoriality verdict; constructed only when they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorialityEvidence {
    pub block_gcds: Vec<u64>,
    pub pairwise_coprime: bool,
    pub torsion_free: bool,
}

impl FactorialityEvidence {
    pub fn is_factorial(&self) -> bool {
        self.pairwise_coprime
    }
}

impl TripleData {
    pub fn new(
        pairs: Vec<(BigRational, BigRational)>,
        block_sizes: Vec<usize>,
        exponents: Vec<Vec<u64>>,
    ) -> Self {
        TripleData {
            pairs,
            block_sizes,
            exponents,
        }
    }

    /// Convenience constructor for integer coefficient pairs.
    pub fn from_i64(pairs: &[(i64, i64)], exponents: &[&[u64]]) -> Self {
        TripleData {
            pairs: pairs
                .iter()
                .map(|&(b, c)| (BigRational::from(BigInt::from(b)), BigRational::from(BigInt::from(c))))
                .collect(),
            block_sizes: exponents.iter().map(|row| row.len()).collect(),
            exponents: exponents.iter().map(|row| row.to_vec()).collect(),
        }
    }

    pub fn pairs(&self) -> &[(BigRational, BigRational)] {
        &self.pairs
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    /// Number of blocks minus one.
    pub fn r(&self) -> usize {
        self.pairs.len().saturating_sub(1)
    }

    /// Total number of `T` variables.
    pub fn total_vars(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// All violations of the defining invariants; empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let blocks = self.pairs.len();
        if blocks < 2 {
            out.push(Violation::TooFewBlocks { found: blocks });
        }
        if self.block_sizes.len() != blocks {
            out.push(Violation::ShapeMismatch {
                field: "n",
                expected: blocks,
                found: self.block_sizes.len(),
            });
        }
        if self.exponents.len() != blocks {
            out.push(Violation::ShapeMismatch {
                field: "L",
                expected: blocks,
                found: self.exponents.len(),
            });
        }
        for (i, &n) in self.block_sizes.iter().enumerate() {
            if n == 0 {
                out.push(Violation::EmptyBlock { block: i });
            }
        }
        for (i, row) in self.exponents.iter().enumerate() {
            if let Some(&n) = self.block_sizes.get(i) {
                if row.len() != n {
                    out.push(Violation::RaggedExponents {
                        block: i,
                        expected: n,
                        found: row.len(),
                    });
                }
            }
            for (j, &l) in row.iter().enumerate() {
                if l == 0 {
                    out.push(Violation::NonPositiveExponent { block: i, slot: j });
                }
            }
        }
        for i in 0..blocks {
            for k in i + 1..blocks {
                if self.alpha(i, k).is_zero() {
                    out.push(Violation::DependentPair { i, k });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Determinant `det(a_i, a_k) = b_i c_k - b_k c_i`.
    pub fn alpha(&self, i: usize, k: usize) -> BigRational {
        assert!(i < self.pairs.len() && k < self.pairs.len(), "index out of range");
        let (bi, ci) = &self.pairs[i];
        let (bk, ck) = &self.pairs[k];
        bi * ck - bk * ci
    }

    /// Variables in block-major order: `(0,0), (0,1), ..., (r, n_r - 1)`.
    pub fn var_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.total_vars());
        for (i, &n) in self.block_sizes.iter().enumerate() {
            for j in 0..n {
                out.push((i, j));
            }
        }
        out
    }

    /// Flat index of the variable at (block, slot).
    pub fn var_index(&self, block: usize, slot: usize) -> usize {
        assert!(block < self.block_sizes.len(), "index out of range");
        assert!(slot < self.block_sizes[block], "index out of range");
        self.block_sizes[..block].iter().sum::<usize>() + slot
    }

    /// The monomial `T_i^{l_i}`, i.e. the product over block `i` of each
    /// variable raised to its exponent.
    pub fn block_monomial(&self, block: usize) -> SparsePoly {
        let mut exps = vec![0u64; self.total_vars()];
        for (j, &l) in self.exponents[block].iter().enumerate() {
            exps[self.var_index(block, j)] = l;
        }
        SparsePoly::monomial(exps, BigRational::one())
    }

    /// Trinomial relation for blocks `i < j < k`:
    /// `alpha_jk T_i^(l_i) + alpha_ki T_j^(l_j) + alpha_ij T_k^(l_k)`.
    ///
    /// Has exactly three terms on valid data, where all determinants are
    /// nonzero.
    pub fn relation(&self, i: usize, j: usize, k: usize) -> SparsePoly {
        assert!(i < j && j < k && k <= self.r(), "indices must satisfy i < j < k <= r");
        self.block_monomial(i)
            .scale(&self.alpha(j, k))
            .add(&self.block_monomial(j).scale(&self.alpha(k, i)))
            .add(&self.block_monomial(k).scale(&self.alpha(i, j)))
    }

    /// Sincerity: `r >= 2` and `n_i * l_ij > 1` for all entries. This is
    /// exactly the condition under which relations exist and none of them
    /// has a linear term.
    pub fn is_sincere(&self) -> bool {
        self.r() >= 2
            && self
                .block_sizes
                .iter()
                .zip(&self.exponents)
                .all(|(&n, row)| row.iter().all(|&l| (n as u64) * l > 1))
    }

    /// Per-block gcd of the exponents.
    pub fn block_gcds(&self) -> Vec<u64> {
        self.exponents
            .iter()
            .map(|row| row.iter().fold(0u64, |g, &l| g.gcd(&l)))
            .collect()
    }

    /// The exponent matrix: one row per block `1..=r`; the columns of block
    /// 0 hold the negated exponents in every row, the columns of block
    /// `i >= 1` hold the exponent in row `i - 1` and zeros elsewhere.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let r = self.r();
        let n = self.total_vars();
        let mut m = IntMatrix::zeros(r, n);
        for (col, (i, j)) in self.var_pairs().into_iter().enumerate() {
            let l = BigInt::from(self.exponents[i][j]);
            if i == 0 {
                for row in 0..r {
                    m.set(row, col, -l.clone());
                }
            } else {
                m.set(i - 1, col, l);
            }
        }
        m
    }

    /// The strictly positive integer kernel vector
    /// `zeta_ij = (prod_k n_k * prod_km l_km) / (n_i * l_ij)`, certifying
    /// that the grading is pointed. Checks its own postconditions.
    pub fn pointedness_witness(&self) -> Vec<BigInt> {
        let mut total = BigInt::one();
        for &n in &self.block_sizes {
            total *= BigInt::from(n as u64);
        }
        for row in &self.exponents {
            for &l in row {
                total *= BigInt::from(l);
            }
        }
        let zeta: Vec<BigInt> = self
            .var_pairs()
            .into_iter()
            .map(|(i, j)| {
                &total / (BigInt::from(self.block_sizes[i] as u64) * BigInt::from(self.exponents[i][j]))
            })
            .collect();
        assert!(zeta.iter().all(|z| z.is_positive()), "witness must be positive");
        let image = self.exponent_matrix().mul_vec(&zeta);
        assert!(image.iter().all(|x| x.is_zero()), "witness must lie in the kernel");
        zeta
    }

    /// Full presentation of the graded algebra, or the list of violations.
    pub fn presentation(&self) -> Result<RingPresentation, Vec<Violation>> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(violations);
        }
        let vars = self.var_pairs();
        let p = self.exponent_matrix();
        let n = self.total_vars();
        let grading = FgAbGroup::quotient(n, p.transpose());
        let degrees: Vec<GroupElement> = (0..n)
            .map(|v| {
                let mut e = vec![BigInt::zero(); n];
                e[v] = BigInt::one();
                grading.project(&e)
            })
            .collect();
        let r = self.r();
        let relations: Vec<SparsePoly> =
            (0..r.saturating_sub(1)).map(|i| self.relation(i, i + 1, i + 2)).collect();
        Ok(RingPresentation {
            triple: self.clone(),
            vars,
            p_matrix: p,
            grading,
            degrees,
            relations,
        })
    }
}

/// Computed presentation of the graded algebra: variables, exponent matrix,
/// grading group, per-variable degrees and the consecutive trinomial
/// relations that generate the defining ideal.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    triple: TripleData,
    vars: Vec<(usize, usize)>,
    p_matrix: IntMatrix,
    grading: FgAbGroup,
    degrees: Vec<GroupElement>,
    relations: Vec<SparsePoly>,
}

impl RingPresentation {
    pub fn triple(&self) -> &TripleData {
        &self.triple
    }

    /// Variables as (block, slot) in column order.
    pub fn vars(&self) -> &[(usize, usize)] {
        &self.vars
    }

    pub fn p_matrix(&self) -> &IntMatrix {
        &self.p_matrix
    }

    /// The grading group, the cokernel of the transposed exponent matrix.
    pub fn grading(&self) -> &FgAbGroup {
        &self.grading
    }

    /// Degrees of the variables, in column order.
    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn relations(&self) -> &[SparsePoly] {
        &self.relations
    }

    /// `T_01`-style display names, slots printed 1-based.
    pub fn var_names(&self) -> Vec<String> {
        self.vars.iter().map(|&(i, j)| var_name(i, j)).collect()
    }

    /// Degree shared by all relations, when there is at least one.
    pub fn relation_degree(&self) -> Option<GroupElement> {
        let first = self.relations.first()?;
        match first.homogeneity(&self.grading, &self.degrees) {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// Complexity-one check: the grading group has rank `n - r` and the
    /// variable degrees generate it.
    pub fn is_complexity_one(&self) -> bool {
        let n = self.triple.total_vars();
        let r = self.triple.r();
        if self.grading.rank() + r != n {
            return false;
        }
        let basis: Vec<Vec<BigInt>> = (0..n)
            .map(|v| {
                let mut e = vec![BigInt::zero(); n];
                e[v] = BigInt::one();
                e
            })
            .collect();
        self.grading.generates(&basis)
    }

    /// Factoriality verdict with its dual evidence: the pairwise-coprimality
    /// of the block gcds and the torsion-freeness of the grading group must
    /// agree, and a disagreement is reported as an error rather than either
    /// answer.
    pub fn factoriality(&self) -> Result<FactorialityEvidence, FactorialityError> {
        if !self.triple.is_sincere() {
            return Err(FactorialityError::NotSincere);
        }
        let block_gcds = self.triple.block_gcds();
        let pairwise_coprime = pairwise_coprime(&block_gcds);
        let torsion_free = self.grading.is_torsion_free();
        if pairwise_coprime != torsion_free {
            return Err(FactorialityError::EvidenceMismatch {
                pairwise_coprime,
                torsion_free,
            });
        }
        Ok(FactorialityEvidence {
            block_gcds,
            pairwise_coprime,
            torsion_free,
        })
    }

    /// Integer vector `m` whose image under the transposed exponent matrix
    /// is `+1` at the given variable and `<= 0` everywhere else, when one
    /// exists.
    ///
    /// Such a vector exists iff the variable's block has size one and
    /// exponent one; the returned witness is verified before being handed
    /// out.
    pub fn degree_extremal_obstruction(&self, block: usize, slot: usize) -> Option<Vec<BigInt>> {
        let t = &self.triple;
        assert!(block < t.block_sizes.len(), "index out of range");
        assert!(slot < t.block_sizes[block], "index out of range");
        if t.block_sizes[block] != 1 || t.exponents[block][0] != 1 {
            return None;
        }
        let r = t.r();
        let mut m = vec![BigInt::zero(); r];
        if block == 0 {
            m[0] = BigInt::from(-1);
        } else {
            m[block - 1] = BigInt::one();
        }
        let image = self.p_matrix.transpose().mul_vec(&m);
        let target = t.var_index(block, slot);
        assert!(image[target].is_one(), "obstruction witness must hit +1");
        assert!(
            image
                .iter()
                .enumerate()
                .all(|(v, x)| v == target || !x.is_positive()),
            "obstruction witness must be nonpositive elsewhere"
        );
        Some(m)
    }
}

/// Display name of the variable at (block, slot), slot printed 1-based.
pub fn var_name(block: usize, slot: usize) -> String {
    let j = slot + 1;
    if block < 10 && j < 10 {
        format!("T_{block}{j}")
    } else {
        format!("T_{block}_{j}")
    }
}

/// True iff all entries are pairwise coprime.
pub fn pairwise_coprime(values: &[u64]) -> bool {
    for i in 0..values.len() {
        for k in i + 1..values.len() {
            if values[i].gcd(&values[k]) != 1 {
                return false;
            }
        }
    }
    true
}
