//! Finitely generated abelian groups presented as `Z^n` modulo an integer
//! column span, with canonical element coordinates.
//!
//! Canonical coordinates are fixed by the Smith normal form of the relation
//! matrix: an ambient vector is mapped through the unimodular row transform
//! and read off as a free part in `Z^rank` plus one reduced residue per
//! torsion factor. Two groups with equal `(rank, torsion)` are isomorphic
//! but may canonicalize the same ambient vector differently, so elements of
//! different presentations are never compared coordinatewise.

use crate::lattice::{self, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Quotient of `Z^n` by the column span of a relation matrix.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    ambient_rank: usize,
    relations: IntMatrix,
    rank: usize,
    torsion: Vec<BigInt>,
    /// Unimodular transform from ambient coordinates to SNF coordinates.
    to_canonical: IntMatrix,
    /// Rows of `to_canonical` carrying the torsion residues, aligned with
    /// `torsion`.
    torsion_rows: Vec<usize>,
    /// Rows of `to_canonical` carrying the free coordinates.
    free_rows: Vec<usize>,
}

/// Element of an [`FgAbGroup`] in canonical coordinates.
///
/// Residues are stored reduced into `[0, d_i)`; the free part is plain
/// integers. Equality is componentwise and only meaningful between elements
/// of the same group value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    free: Vec<BigInt>,
    torsion: Vec<BigInt>,
}

/// Order of a group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl FgAbGroup {
    /// Builds `Z^n / colspan(relations)`. The relation matrix must have `n`
    /// rows; zero columns are allowed and describe the free group.
    pub fn quotient(ambient_rank: usize, relations: IntMatrix) -> FgAbGroup {
        assert_eq!(
            relations.rows(),
            ambient_rank,
            "relation matrix must have one row per ambient coordinate"
        );
        if ambient_rank == 0 || relations.cols() == 0 {
            return FgAbGroup {
                ambient_rank,
                relations,
                rank: ambient_rank,
                torsion: Vec::new(),
                to_canonical: IntMatrix::identity(ambient_rank),
                torsion_rows: Vec::new(),
                free_rows: (0..ambient_rank).collect(),
            };
        }
        let snf = lattice::smith_normal_form(&relations);
        let nonzero = snf.rank();
        let mut torsion = Vec::new();
        let mut torsion_rows = Vec::new();
        for (i, factor) in snf.invariant_factors.iter().enumerate() {
            if !factor.is_one() {
                torsion.push(factor.clone());
                torsion_rows.push(i);
            }
        }
        let free_rows: Vec<usize> = (nonzero..ambient_rank).collect();
        FgAbGroup {
            ambient_rank,
            relations,
            rank: ambient_rank - nonzero,
            torsion,
            to_canonical: snf.u,
            torsion_rows,
            free_rows,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Free rank of the group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Torsion invariant factors `> 1`, in divisibility order.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Canonical coordinates of an ambient vector.
    pub fn project(&self, ambient: &[BigInt]) -> GroupElement {
        assert_eq!(ambient.len(), self.ambient_rank, "dimension mismatch");
        let y = self.to_canonical.mul_vec(ambient);
        let torsion = self
            .torsion_rows
            .iter()
            .zip(&self.torsion)
            .map(|(&row, modulus)| y[row].mod_floor(modulus))
            .collect();
        let free = self.free_rows.iter().map(|&row| y[row].clone()).collect();
        GroupElement { free, torsion }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            free: vec![BigInt::zero(); self.rank],
            torsion: vec![BigInt::zero(); self.torsion.len()],
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.check(a);
        self.check(b);
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&b.torsion)
                .zip(&self.torsion)
                .map(|((x, y), d)| (x + y).mod_floor(d))
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.check(a);
        GroupElement {
            free: a.free.iter().map(|x| -x).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, d)| (-x).mod_floor(d))
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        self.check(a);
        GroupElement {
            free: a.free.iter().map(|x| k * x).collect(),
            torsion: a
                .torsion
                .iter()
                .zip(&self.torsion)
                .map(|(x, d)| (k * x).mod_floor(d))
                .collect(),
        }
    }

    /// Least `k >= 1` with `k*a = 0`, or [`ElementOrder::Infinite`] when the
    /// free part is nonzero.
    pub fn order(&self, a: &GroupElement) -> ElementOrder {
        self.check(a);
        if a.free.iter().any(|x| !x.is_zero()) {
            return ElementOrder::Infinite;
        }
        let mut k = BigInt::one();
        for (x, d) in a.torsion.iter().zip(&self.torsion) {
            // order of x in Z/d is d / gcd(d, x)
            let o = d / d.gcd(x);
            k = k.lcm(&o);
        }
        ElementOrder::Finite(k)
    }

    /// True iff the projections of the given ambient vectors generate the
    /// whole group: together with the relation columns they must span a
    /// lattice with trivial cokernel.
    pub fn generates(&self, elements: &[Vec<BigInt>]) -> bool {
        assert!(
            elements.iter().all(|e| e.len() == self.ambient_rank),
            "dimension mismatch"
        );
        if self.ambient_rank == 0 {
            return true;
        }
        let total = elements.len() + self.relations.cols();
        if total == 0 {
            return self.is_trivial();
        }
        let joined = IntMatrix::from_fn(self.ambient_rank, total, |r, c| {
            if c < elements.len() {
                elements[c][r].clone()
            } else {
                self.relations.at(r, c - elements.len()).clone()
            }
        });
        let snf = lattice::smith_normal_form(&joined);
        snf.rank() == self.ambient_rank && snf.invariant_factors.iter().all(|f| f.is_one())
    }

    fn check(&self, a: &GroupElement) {
        assert_eq!(a.free.len(), self.rank, "element from a different group");
        assert_eq!(
            a.torsion.len(),
            self.torsion.len(),
            "element from a different group"
        );
    }
}

impl GroupElement {
    pub fn free_part(&self) -> &[BigInt] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_identity(&self) -> bool {
        self.free.iter().all(|x| x.is_zero()) && self.torsion.iter().all(|x| x.is_zero())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for x in &self.free {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        if !self.torsion.is_empty() {
            write!(f, "; ")?;
            for (i, x) in self.torsion.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, ")")
    }
}
