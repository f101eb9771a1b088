//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration
//! order — and with it every rendering and solve — is deterministic. Zero
//! coefficients are never stored.

use crate::abgroup::{FgAbGroup, GroupElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    vars: usize,
    terms: BTreeMap<Vec<u64>, BigRational>,
}

/// Outcome of a homogeneity test with respect to a degree assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Zero,
    /// All terms share this degree.
    Homogeneous(GroupElement),
    /// At least two terms have different degrees.
    Mixed,
}

impl SparsePoly {
    pub fn zero(vars: usize) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    /// Single term `c * x^exponents`.
    pub fn monomial(exponents: Vec<u64>, c: BigRational) -> Self {
        let vars = exponents.len();
        let mut p = Self::zero(vars);
        p.add_term(exponents, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u64]) -> BigRational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, exponents: Vec<u64>, c: BigRational) {
        assert_eq!(exponents.len(), self.vars, "variable count mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> SparsePoly {
        if k.is_zero() {
            return Self::zero(self.vars);
        }
        SparsePoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Reinterprets the polynomial in a larger variable ring; the new
    /// trailing variables do not occur.
    pub fn extend_vars(&self, new_vars: usize) -> SparsePoly {
        assert!(new_vars >= self.vars, "cannot drop variables");
        let mut out = SparsePoly::zero(new_vars);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.resize(new_vars, 0);
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Degree of a single monomial under the given per-variable degrees:
    /// the sum of `exponent * degree` over all variables.
    pub fn monomial_degree(
        group: &FgAbGroup,
        exponents: &[u64],
        degrees: &[GroupElement],
    ) -> GroupElement {
        assert_eq!(exponents.len(), degrees.len(), "variable count mismatch");
        let mut acc = group.identity();
        for (e, d) in exponents.iter().zip(degrees) {
            if *e == 0 {
                continue;
            }
            acc = group.add(&acc, &group.scale(&BigInt::from(*e), d));
        }
        acc
    }

    /// Common degree of all terms, when they agree.
    pub fn homogeneity(&self, group: &FgAbGroup, degrees: &[GroupElement]) -> Homogeneity {
        let mut common: Option<GroupElement> = None;
        for e in self.terms.keys() {
            let d = Self::monomial_degree(group, e, degrees);
            match &common {
                None => common = Some(d),
                Some(c) if *c == d => {}
                Some(_) => return Homogeneity::Mixed,
            }
        }
        match common {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Homogeneous(d),
        }
    }

    /// Rational coefficients expressing `self` as a linear combination of
    /// `generators`, or `None` when no exact combination exists.
    ///
    /// Sets up one equation per monomial in the union of supports and
    /// Gauss-eliminates over the rationals.
    pub fn in_linear_span(&self, generators: &[SparsePoly]) -> Option<Vec<BigRational>> {
        assert!(
            generators.iter().all(|g| g.vars == self.vars),
            "variable count mismatch"
        );
        let mut support: Vec<Vec<u64>> = self.terms.keys().cloned().collect();
        for g in generators {
            support.extend(g.terms.keys().cloned());
        }
        support.sort();
        support.dedup();

        let rows = support.len();
        let cols = generators.len();
        // augmented system [A | t]
        let mut a: Vec<Vec<BigRational>> = support
            .iter()
            .map(|mono| {
                let mut row: Vec<BigRational> =
                    generators.iter().map(|g| g.coefficient(mono)).collect();
                row.push(self.coefficient(mono));
                row
            })
            .collect();

        let mut pivot_of_col = vec![usize::MAX; cols];
        let mut row = 0;
        for col in 0..cols {
            if row == rows {
                break;
            }
            let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = a[row][col].clone();
            for x in a[row].iter_mut() {
                *x /= &inv;
            }
            let pivot_row = a[row].clone();
            for (r, other) in a.iter_mut().enumerate() {
                if r == row || other[col].is_zero() {
                    continue;
                }
                let f = other[col].clone();
                for (x, pv) in other.iter_mut().zip(&pivot_row) {
                    *x -= &f * pv;
                }
            }
            pivot_of_col[col] = row;
            row += 1;
        }
        // inconsistent iff a zeroed row keeps a nonzero right-hand side
        if a[row..].iter().any(|r| !r[cols].is_zero()) {
            return None;
        }
        let mut lambda = vec![BigRational::zero(); cols];
        for (col, &pr) in pivot_of_col.iter().enumerate() {
            if pr != usize::MAX {
                lambda[col] = a[pr][cols].clone();
            }
        }
        // free columns were fixed to zero; verify the combination exactly
        let mut recombined = SparsePoly::zero(self.vars);
        for (g, l) in generators.iter().zip(&lambda) {
            recombined = recombined.add(&g.scale(l));
        }
        (recombined == *self).then_some(lambda)
    }

    /// Renders with caller-supplied variable names, terms in descending
    /// lexicographic exponent order.
    pub fn render(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.vars, "variable count mismatch");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = coeff.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(names[v].clone());
                } else {
                    factors.push(format!("{}^{}", names[v], e));
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.vars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}
