//! Finite-dimensional Lie algebras given by exact rational structure constants.

pub mod catalog;
pub mod text;

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use thiserror::Error;

use crate::linalg;
use crate::rational::{format_rational, Rational};

pub const MAX_DIM: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {0} exceeds the supported maximum {MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("basis index out of range")]
    IndexOutOfRange,
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("complement does not span a complement of the ideal")]
    BadComplement,
    #[error("basis change matrix is singular or has the wrong shape")]
    SingularBasisChange,
}

/// A subspace of `Q^n`, stored by its reduced row-echelon basis so that
/// equality is plain data equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self, LieError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LieError::DimensionMismatch { expected: ambient_dim, got: v.len() });
        }
        let (basis, pivots) = linalg::rref(vectors, ambient_dim);
        Ok(Subspace { ambient_dim, basis, pivots })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let vs: Vec<_> = (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect();
        Subspace::span(ambient_dim, &vs).expect("unit vectors have the right length")
    }

    /// Span of basis vectors `e_i` given by 1-based indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Result<Self, LieError> {
        if indices.iter().any(|&i| i == 0 || i > ambient_dim) {
            return Err(LieError::IndexOutOfRange);
        }
        let vs: Vec<_> = indices.iter().map(|&i| unit(ambient_dim, i - 1)).collect();
        Subspace::span(ambient_dim, &vs)
    }

    /// Span of small-integer combinations, e.g. `[[0,1,0,0,0],[0,0,1,1,0]]`.
    pub fn from_int_rows(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self, LieError> {
        let vs: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::rational::int(x)).collect())
            .collect();
        Subspace::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Component of `v` outside the subspace, in the coordinates left after
    /// clearing pivot columns. Zero iff `v` lies in the subspace.
    pub fn residue(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.residue(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LieError> {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LieError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LieError::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        // a·A = b·B; solve for (a, b) and map back through A.
        let (ka, kb) = (self.dim(), other.dim());
        let rows: Vec<Vec<Rational>> = (0..self.ambient_dim)
            .map(|j| {
                let mut r: Vec<Rational> = self.basis.iter().map(|v| v[j].clone()).collect();
                r.extend(other.basis.iter().map(|v| -v[j].clone()));
                r
            })
            .collect();
        let kernel = linalg::nullspace(&rows, ka + kb);
        let vs: Vec<Vec<Rational>> = kernel
            .iter()
            .map(|k| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (c, b) in k[..ka].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient_dim, &vs)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "span({})", parts.join(", "))
    }
}

/// Writes a vector as a combination of `e1..en`, e.g. `e3+e4`, `-e1+1/2e2`.
pub fn format_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&format_rational(&mag));
        }
        out.push_str(&format!("e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

/// A computed chain g = g_0 ⊇ g_1 ⊇ … stopped at 0 or at the first repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl Series {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }

    /// Number of steps to reach 0 (nilpotency class or derived length).
    pub fn length(&self) -> Option<usize> {
        self.reaches_zero().then(|| self.terms.len() - 1)
    }
}

/// Isomorphism invariants used in place of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub commutator_dim: usize,
    pub commutator_abelian: bool,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {:?}, {:?}, {}, {}, {})",
            self.dim,
            self.derived_dims,
            self.lower_central_dims,
            self.center_dim,
            self.commutator_dim,
            self.commutator_abelian
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    dim: usize,
    c: Vec<Rational>,
    pub params: BTreeMap<String, Rational>,
}

impl LieAlgebra {
    /// The abelian algebra of the given dimension, to be filled with `set`.
    pub fn new(name: impl Into<String>, dim: usize) -> Result<Self, LieError> {
        if dim > MAX_DIM {
            return Err(LieError::DimensionTooLarge(dim));
        }
        Ok(LieAlgebra {
            name: name.into(),
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
            params: BTreeMap::new(),
        })
    }

    /// Builds from 1-based relations `[e_i, e_j] = Σ coeff e_k`.
    pub fn from_relations(
        name: impl Into<String>,
        dim: usize,
        relations: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, LieError> {
        let mut a = LieAlgebra::new(name, dim)?;
        for (i, j, k, v) in relations {
            if *i == 0 || *j == 0 || *k == 0 || *i > dim || *j > dim || *k > dim || i == j {
                return Err(LieError::IndexOutOfRange);
            }
            a.set(i - 1, j - 1, k - 1, v.clone());
        }
        Ok(a)
    }

    pub fn with_param(mut self, key: &str, value: Rational) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Sets `c[i][j][k] = v` and `c[j][i][k] = -v` (0-based).
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let a = self.idx(i, j, k);
        let b = self.idx(j, i, k);
        self.c[b] = -v.clone();
        self.c[a] = v;
    }

    /// Raw write of a single constant; used to build corrupted test copies.
    pub fn set_raw(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        let a = self.idx(i, j, k);
        self.c[a] = v;
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    /// Nonzero constants with `i < j`, 1-based.
    pub fn relations(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    let v = self.constant(i, j, k);
                    if !v.is_zero() {
                        out.push((i + 1, j + 1, k + 1, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn same_constants(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.c == other.c
    }

    fn check_len(&self, v: &[Rational]) -> Result<(), LieError> {
        if v.len() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.constant(i, j, k).clone()).collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| *self.constant(i, j, k) == -self.constant(j, i, k).clone()))
        })
    }

    /// Exact Jacobi identity on all basis triples (antisymmetry included).
    pub fn jacobi_check(&self) -> bool {
        self.is_antisymmetric() && self.jacobi_defects().is_empty()
    }

    /// Basis triples (0-based) where the Jacobi sum is nonzero.
    pub fn jacobi_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ok = (0..n).all(|l| {
                        let mut s = Rational::zero();
                        for m in 0..n {
                            s += self.constant(i, j, m) * self.constant(m, k, l);
                            s += self.constant(j, k, m) * self.constant(m, i, l);
                            s += self.constant(k, i, m) * self.constant(m, j, l);
                        }
                        s.is_zero()
                    });
                    if !ok {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    /// `[A, B]` for subspaces A, B.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let vs: Vec<Vec<Rational>> = a
            .basis()
            .iter()
            .flat_map(|x| b.basis().iter().map(move |y| (x, y)))
            .map(|(x, y)| self.bracket_unchecked(x, y))
            .collect();
        Subspace::span(self.dim, &vs).expect("brackets have ambient length")
    }

    pub fn commutator_ideal(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspaces(&full, &full)
    }

    /// Kernel of x ↦ ([x, e_j])_j.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let rows: Vec<Vec<Rational>> = (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| (0..n).map(|i| self.constant(i, j, k).clone()).collect())
            .collect();
        let ker = linalg::nullspace(&rows, n);
        Subspace::span(n, &ker).expect("kernel vectors have ambient length")
    }

    pub fn series(&self, kind: SeriesKind) -> Series {
        let full = Subspace::full(self.dim);
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => self.bracket_subspaces(last, &full),
            };
            let repeat = next == *last;
            terms.push(next);
            if repeat {
                break;
            }
        }
        Series { kind, terms }
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).reaches_zero()
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.series(SeriesKind::LowerCentral).length()
    }

    pub fn derived_length(&self) -> Option<usize> {
        self.series(SeriesKind::Derived).length()
    }

    fn bracket_within(&self, a: &Subspace, b: &Subspace, target: &Subspace) -> bool {
        a.basis()
            .iter()
            .all(|x| b.basis().iter().all(|y| target.contains(&self.bracket_unchecked(x, y))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_within(s, s, s)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.bracket_within(&Subspace::full(self.dim), s, s)
    }

    /// `{x : [x, s] ⊆ s}` for a subalgebra `s`.
    pub fn normalizer(&self, s: &Subspace) -> Result<Subspace, LieError> {
        if s.ambient_dim() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: s.ambient_dim() });
        }
        if !self.is_subalgebra(s) {
            return Err(LieError::NotSubalgebra);
        }
        let n = self.dim;
        let mut rows = Vec::new();
        for sb in s.basis() {
            // Column i is the residue of [e_i, sb].
            let cols: Vec<Vec<Rational>> =
                (0..n).map(|i| s.residue(&self.bracket_unchecked(&unit(n, i), sb))).collect();
            for k in 0..n {
                rows.push((0..n).map(|i| cols[i][k].clone()).collect());
            }
        }
        let ker = linalg::nullspace(&rows, n);
        Subspace::span(n, &ker)
    }

    /// Quotient by an ideal using the standard complement (unit vectors on
    /// the non-pivot columns of the ideal's echelon basis).
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        let complement: Vec<Vec<Rational>> =
            (0..n).filter(|c| !ideal.pivots.contains(c)).map(|c| unit(n, c)).collect();
        self.quotient_with_complement(ideal, &complement)
    }

    /// Quotient using an explicit complement basis; the result's basis is the
    /// image of `complement` in order.
    pub fn quotient_with_complement(
        &self,
        ideal: &Subspace,
        complement: &[Vec<Rational>],
    ) -> Result<LieAlgebra, LieError> {
        if ideal.ambient_dim() != self.dim {
            return Err(LieError::DimensionMismatch { expected: self.dim, got: ideal.ambient_dim() });
        }
        if !self.is_ideal(ideal) {
            return Err(LieError::NotIdeal);
        }
        let k = complement.len();
        if k + ideal.dim() != self.dim || complement.iter().any(|v| v.len() != self.dim) {
            return Err(LieError::BadComplement);
        }
        let mut basis: Vec<Vec<Rational>> = complement.to_vec();
        basis.extend(ideal.basis().iter().cloned());
        let inv = linalg::inverse(&basis).ok_or(LieError::BadComplement)?;
        let mut q = LieAlgebra::new(format!("{}/ideal", self.name), k)?;
        for a in 0..k {
            for b in a + 1..k {
                let v = self.bracket_unchecked(&complement[a], &complement[b]);
                for c in 0..k {
                    let coeff: Rational = v.iter().enumerate().map(|(m, vm)| vm * &inv[m][c]).sum();
                    q.set(a, b, c, coeff);
                }
            }
        }
        Ok(q)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let comm = self.commutator_ideal();
        Fingerprint {
            dim: self.dim,
            derived_dims: self.series(SeriesKind::Derived).dims(),
            lower_central_dims: self.series(SeriesKind::LowerCentral).dims(),
            center_dim: self.center().dim(),
            commutator_dim: comm.dim(),
            commutator_abelian: self.bracket_subspaces(&comm, &comm).is_zero(),
        }
    }

    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra, LieError> {
        let (n, m) = (a.dim, b.dim);
        let mut s = LieAlgebra::new(format!("{}+{}", a.name, b.name), n + m)?;
        for (i, j, k, v) in a.relations() {
            s.set(i - 1, j - 1, k - 1, v);
        }
        for (i, j, k, v) in b.relations() {
            s.set(n + i - 1, n + j - 1, n + k - 1, v);
        }
        Ok(s)
    }

    /// Rewrites the constants in a new basis whose vectors are the rows of
    /// `rows`, given in the current coordinates.
    pub fn change_basis(&self, rows: &[Vec<Rational>]) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(LieError::SingularBasisChange);
        }
        let inv = linalg::inverse(rows).ok_or(LieError::SingularBasisChange)?;
        let mut out = LieAlgebra::new(self.name.clone(), n)?;
        out.params = self.params.clone();
        for a in 0..n {
            for b in a + 1..n {
                let v = self.bracket_unchecked(&rows[a], &rows[b]);
                for c in 0..n {
                    let coeff: Rational = v.iter().enumerate().map(|(m, vm)| vm * &inv[m][c]).sum();
                    out.set(a, b, c, coeff);
                }
            }
        }
        Ok(out)
    }
}

/// Coordinates of `v` in the basis given by the rows of `rows`.
pub fn coordinates_in_basis(rows: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let inv = linalg::inverse(rows)?;
    let n = v.len();
    Some((0..n).map(|c| v.iter().enumerate().map(|(m, vm)| vm * &inv[m][c]).sum()).collect())
}

/// Result of comparing a normalizer with `inn ⊕ center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerSplit {
    pub normalizer: Subspace,
    pub center: Subspace,
    pub inn_plus_center: Subspace,
    pub direct: bool,
}

impl NormalizerSplit {
    pub fn holds(&self) -> bool {
        self.direct && self.normalizer == self.inn_plus_center
    }
}

/// Normalizer of `inn` against `inn ⊕ center` (the inner-mapping condition).
pub fn normalizer_split(alg: &LieAlgebra, inn: &Subspace) -> Result<NormalizerSplit, LieError> {
    let normalizer = alg.normalizer(inn)?;
    let center = alg.center();
    let inn_plus_center = inn.sum(&center)?;
    let direct = inn.intersection(&center)?.is_zero();
    Ok(NormalizerSplit { normalizer, center, inn_plus_center, direct })
}

#[cfg(test)]
mod tests {
    use super::catalog;
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn g43_brackets() {
        let g = catalog::g4_3();
        assert_eq!(g.bracket(&v(&[1, 0, 0, 0]), &v(&[0, 0, 0, 1])).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(g.bracket(&v(&[0, 0, 0, 1]), &v(&[0, 0, 1, 0])).unwrap(), v(&[0, -1, 0, 0]));
        let x = v(&[3, -1, 2, 5]);
        assert_eq!(g.bracket(&x, &x).unwrap(), v(&[0, 0, 0, 0]));
        assert!(matches!(g.bracket(&v(&[1]), &x), Err(LieError::DimensionMismatch { .. })));
    }

    #[test]
    fn corrupted_g43_fails_jacobi() {
        let mut g = catalog::g4_3();
        assert!(g.jacobi_check());
        g.set(0, 2, 3, int(1));
        assert!(!g.jacobi_check());
        assert!(g.jacobi_defects().iter().any(|&(i, j, k)| {
            let mut t = [i, j, k];
            t.sort();
            t == [0, 2, 3]
        }));
    }

    #[test]
    fn antisymmetry_violation_fails_jacobi_check() {
        let mut g = catalog::l2();
        g.set_raw(0, 1, 0, int(2));
        assert!(!g.jacobi_check());
    }

    #[test]
    fn commutator_ideals() {
        assert_eq!(catalog::mult1().commutator_ideal(), Subspace::coordinate(5, &[3, 4]).unwrap());
        assert!(catalog::abelian(4).commutator_ideal().is_zero());
        assert_eq!(catalog::g5_38().commutator_ideal(), Subspace::coordinate(5, &[1, 2, 3]).unwrap());
    }

    #[test]
    fn centers() {
        assert_eq!(catalog::g5_prop(1).center(), Subspace::coordinate(5, &[1]).unwrap());
        assert_eq!(catalog::abelian(5).center(), Subspace::full(5));
        assert_eq!(catalog::mult2().center(), Subspace::coordinate(5, &[5]).unwrap());
    }

    #[test]
    fn series_examples() {
        let f4 = catalog::filiform(4);
        assert_eq!(f4.series(SeriesKind::LowerCentral).dims(), vec![4, 2, 1, 0]);
        assert_eq!(f4.nilpotency_class(), Some(3));
        let l2 = catalog::l2();
        assert_eq!(l2.series(SeriesKind::Derived).dims(), vec![2, 1, 0]);
        assert_eq!(l2.series(SeriesKind::LowerCentral).dims(), vec![2, 1, 1]);
        assert!(l2.is_solvable() && !l2.is_nilpotent());
        assert_eq!(catalog::abelian(3).series(SeriesKind::Derived).dims(), vec![3, 0]);
    }

    #[test]
    fn ideals_and_normalizers() {
        let g = catalog::g4_3();
        assert!(g.is_ideal(&Subspace::coordinate(4, &[1]).unwrap()));
        assert!(g.is_ideal(&Subspace::full(4)));
        let s = Subspace::from_int_rows(4, &[&[1, 1, 0, 0]]).unwrap();
        assert!(!g.is_ideal(&s));
        assert_eq!(g.normalizer(&s).unwrap(), Subspace::coordinate(4, &[1, 2, 3]).unwrap());
        let ideal = Subspace::coordinate(4, &[1, 2]).unwrap();
        assert_eq!(g.normalizer(&ideal).unwrap(), Subspace::full(4));
        let inn1 = Subspace::from_int_rows(5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]).unwrap();
        assert_eq!(catalog::mult1().normalizer(&inn1).unwrap(), Subspace::coordinate(5, &[2, 3, 4]).unwrap());
        let not_sub = Subspace::coordinate(4, &[3, 4]).unwrap();
        assert_eq!(g.normalizer(&not_sub), Err(LieError::NotSubalgebra));
    }

    #[test]
    fn quotients() {
        let g = catalog::g5_33(int(1), int(0));
        let q = g.quotient(&Subspace::coordinate(5, &[1]).unwrap()).unwrap();
        let l2l2 = LieAlgebra::direct_sum(&catalog::l2(), &catalog::l2()).unwrap();
        assert_eq!(q.fingerprint(), l2l2.fingerprint());
        let f4 = catalog::filiform(4);
        assert_eq!(f4.quotient(&Subspace::zero(4)).unwrap().fingerprint(), f4.fingerprint());
        let q = f4.quotient(&Subspace::coordinate(4, &[4]).unwrap()).unwrap();
        assert_eq!(q.fingerprint(), catalog::filiform(3).fingerprint());
        assert_eq!(
            f4.quotient(&Subspace::coordinate(4, &[1]).unwrap()),
            Err(LieError::NotIdeal)
        );
    }

    #[test]
    fn fingerprints() {
        let f4 = catalog::filiform(4).fingerprint();
        assert_eq!(f4.derived_dims, vec![4, 2, 0]);
        assert_eq!(f4.lower_central_dims, vec![4, 2, 1, 0]);
        assert_eq!((f4.center_dim, f4.commutator_dim, f4.commutator_abelian), (1, 2, true));
        let r3 = catalog::abelian(3).fingerprint();
        assert_eq!(r3.to_string(), "(3, [3, 0], [3, 0], 3, 0, true)");
        let l2l2 = LieAlgebra::direct_sum(&catalog::l2(), &catalog::l2()).unwrap().fingerprint();
        assert_eq!(l2l2.derived_dims, vec![4, 2, 0]);
        assert_eq!(l2l2.lower_central_dims, vec![4, 2, 2]);
        assert_eq!((l2l2.center_dim, l2l2.commutator_dim), (0, 2));
    }

    #[test]
    fn direct_sums_match_catalog() {
        let m1 = LieAlgebra::direct_sum(&catalog::filiform(3), &catalog::l2()).unwrap();
        assert!(m1.same_constants(&catalog::mult1()));
        let l2l2 = LieAlgebra::direct_sum(&catalog::l2(), &catalog::l2()).unwrap();
        let m2 = LieAlgebra::direct_sum(&l2l2, &catalog::abelian(1)).unwrap();
        assert!(m2.same_constants(&catalog::mult2()));
        let a = catalog::g4_3();
        assert!(LieAlgebra::direct_sum(&a, &catalog::abelian(0)).unwrap().same_constants(&a));
    }

    #[test]
    fn change_basis_roundtrip() {
        let g = catalog::g4_3();
        let neg: Vec<Vec<Rational>> = (0..4).map(|i| unit(4, i).into_iter().map(|x| -x).collect()).collect();
        let h = g.change_basis(&neg).unwrap();
        // [−e1, −e4] = e1 = −(−e1)
        assert_eq!(*h.constant(0, 3, 0), int(-1));
        assert!(h.change_basis(&neg).unwrap().same_constants(&g));
    }

    #[test]
    fn niemenmaa_split_examples() {
        let inn1 = Subspace::from_int_rows(5, &[&[0, 1, 0, 0, 0], &[0, 0, 1, 1, 0]]).unwrap();
        let s = normalizer_split(&catalog::mult1(), &inn1).unwrap();
        assert!(s.holds());
        let cor = Subspace::from_int_rows(4, &[&[1, 1, 0, 0]]).unwrap();
        let s = normalizer_split(&catalog::g4_3(), &cor).unwrap();
        assert!(!s.holds());
        assert_eq!((s.normalizer.dim(), s.inn_plus_center.dim()), (3, 2));
    }

    #[test]
    fn vector_formatting() {
        assert_eq!(format_vector(&v(&[0, 0, 1, 1, 0])), "e3+e4");
        assert_eq!(format_vector(&[int(-1), crate::rational::rat(1, 2)]), "-e1+1/2e2");
        assert_eq!(format_vector(&v(&[0, 0])), "0");
    }
}
