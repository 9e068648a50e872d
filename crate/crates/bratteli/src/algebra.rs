//! Finite dimensional C*-algebras as matrix unit systems.
//!
//! An algebra `A = M_{n_1} ⊕ … ⊕ M_{n_r}` is described by its summand
//! sizes. The summands are laid out consecutively inside `M_m`,
//! `m = n_1 + … + n_r`, so each summand owns a block of global indices and
//! the block-diagonal index set `I` consists of the pairs `(i,j)` whose
//! entries fall in the same block. Elements are sparse exact-rational
//! matrices supported on `I`. All values are immutable after construction
//! and all operations are pure.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::norm;
use crate::scalar::{self, Scalar};

/// A direct sum of full matrix algebras, presented by its summand sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteDimAlgebra {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl FiniteDimAlgebra {
    /// `make_algebra`: lays the summands out consecutively, in order.
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptySizes);
        }
        if let Some(pos) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::NonPositiveSize { summand: pos + 1 });
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut total = 0usize;
        for &n in &sizes {
            offsets.push(total);
            total += n;
        }
        Ok(FiniteDimAlgebra {
            sizes,
            offsets,
            total,
        })
    }

    /// The full matrix algebra `M_n`.
    pub fn matrix(n: usize) -> Self {
        FiniteDimAlgebra::new(vec![n]).expect("positive size")
    }

    pub fn summand_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn summand_sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Size of summand `s` (1-based).
    pub fn summand_size(&self, s: usize) -> usize {
        self.sizes[s - 1]
    }

    /// Global index offset of summand `s`: global = offset + local.
    pub fn summand_offset(&self, s: usize) -> usize {
        self.offsets[s - 1]
    }

    /// Total size `m = Σ n_i` of the enveloping `M_m`.
    pub fn total_size(&self) -> usize {
        self.total
    }

    /// Linear dimension `Σ n_i²`.
    pub fn dimension(&self) -> usize {
        self.sizes.iter().map(|n| n * n).sum()
    }

    /// Global index of local index `i` in summand `s` (both 1-based).
    pub fn global(&self, s: usize, i: usize) -> usize {
        self.offsets[s - 1] + i
    }

    /// Which summand a global index belongs to.
    pub fn summand_of(&self, global: usize) -> Option<usize> {
        if global == 0 || global > self.total {
            return None;
        }
        let s = match self.offsets.binary_search(&(global - 1)) {
            Ok(s) => s,
            Err(s) => s - 1,
        };
        Some(s + 1)
    }

    /// Splits a global index into (summand, local).
    pub fn local(&self, global: usize) -> Option<(usize, usize)> {
        let s = self.summand_of(global)?;
        Some((s, global - self.offsets[s - 1]))
    }

    /// Whether the global pair `(i,j)` lies in the block-diagonal index set.
    pub fn contains_pair(&self, i: usize, j: usize) -> bool {
        match (self.summand_of(i), self.summand_of(j)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    fn check_unit(&self, s: usize, i: usize, j: usize) -> Result<()> {
        if s == 0 || s > self.sizes.len() {
            return Err(Error::IndexOutOfRange {
                what: "summand",
                got: s,
                max: self.sizes.len(),
            });
        }
        let n = self.sizes[s - 1];
        for (what, v) in [("row", i), ("column", j)] {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange {
                    what,
                    got: v,
                    max: n,
                });
            }
        }
        Ok(())
    }

    /// The matrix unit `e_{ij}` of summand `s` as an element.
    pub fn matrix_unit(&self, s: usize, i: usize, j: usize) -> Result<AlgebraElement> {
        self.check_unit(s, i, j)?;
        let mut entries = BTreeMap::new();
        entries.insert((self.global(s, i), self.global(s, j)), scalar::one());
        Ok(AlgebraElement {
            algebra: self.clone(),
            entries,
        })
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(&self) -> AlgebraElement {
        let mut entries = BTreeMap::new();
        for g in 1..=self.total {
            entries.insert((g, g), scalar::one());
        }
        AlgebraElement {
            algebra: self.clone(),
            entries,
        }
    }

    /// All matrix units as `(summand, i, j)` triples, in lexicographic order.
    pub fn unit_triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.sizes.iter().enumerate().flat_map(|(s0, &n)| {
            (1..=n).flat_map(move |i| (1..=n).map(move |j| (s0 + 1, i, j)))
        })
    }
}

/// A block-diagonal matrix with exact rational entries, indexed globally.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: FiniteDimAlgebra,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl AlgebraElement {
    /// Builds an element from global-index entries, validating support.
    pub fn from_entries(
        algebra: FiniteDimAlgebra,
        entries: impl IntoIterator<Item = ((usize, usize), Scalar)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), v) in entries {
            if !algebra.contains_pair(i, j) {
                return Err(Error::OutsideIndexSet { row: i, col: j });
            }
            if !v.is_zero() {
                map.insert((i, j), v);
            }
        }
        Ok(AlgebraElement {
            algebra,
            entries: map,
        })
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The entry at a global pair (zero when absent).
    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    /// The set of global pairs carrying a nonzero entry.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.entries.keys().copied().collect()
    }

    fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            let slot = entries.entry(*k).or_insert_with(Scalar::zero);
            *slot += v;
            if slot.is_zero() {
                entries.remove(k);
            }
        }
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            entries,
        })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&scalar::integer(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return self.algebra.zero();
        }
        AlgebraElement {
            algebra: self.algebra.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    /// Exact product; respects the block structure automatically because
    /// supports are block diagonal.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        // group the right factor's entries by row
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ((k, j), v) in &other.entries {
            by_row.entry(*k).or_default().push((*j, v));
        }
        let mut entries: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for ((i, k), u) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (j, v) in row {
                    let slot = entries.entry((*i, *j)).or_insert_with(Scalar::zero);
                    *slot += u * *v;
                }
            }
        }
        entries.retain(|_, v| !v.is_zero());
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            entries,
        })
    }

    /// Adjoint: transposes indices; rational conjugation is the identity.
    pub fn adjoint(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.algebra.clone(),
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), v)| ((j, i), v.clone()))
                .collect(),
        }
    }

    /// Largest singular value over all summand blocks, computed in `f64`
    /// by a deterministic one-sided Jacobi sweep to within `tolerance`.
    pub fn operator_norm(&self, tolerance: f64) -> f64 {
        let mut best = 0.0f64;
        for s in 1..=self.algebra.summand_count() {
            let n = self.algebra.summand_size(s);
            let off = self.algebra.summand_offset(s);
            let lo = off + 1;
            let hi = off + n;
            let mut block = vec![0.0f64; n * n];
            let mut nonzero = false;
            for (&(i, j), v) in self.entries.range((lo, 0)..=(hi, usize::MAX)) {
                block[(i - lo) * n + (j - lo)] = scalar::to_f64(v);
                nonzero = true;
            }
            if nonzero {
                best = best.max(norm::largest_singular_value(&block, n, tolerance));
            }
        }
        best
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement{{")?;
        for (idx, ((i, j), v)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *v != scalar::one() {
                write!(f, "{}·", scalar::format(v))?;
            }
            write!(f, "e({i},{j})")?;
        }
        write!(f, "}}")
    }
}

/// Which triangular pattern a mask selects within each summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskKind {
    /// `i ≤ j`: the full upper triangular algebra `T_n` per summand.
    Upper,
    /// `i < j`: the strictly upper triangular subalgebra.
    StrictUpper,
}

/// The upper (or strictly upper) triangular subspace of an algebra.
///
/// Closed under multiplication of matrix units within a summand:
/// `e_{ij}·e_{jk}` with `i ≤ j ≤ k` has `i ≤ k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularMask {
    pub algebra: FiniteDimAlgebra,
    pub kind: MaskKind,
}

impl TriangularMask {
    pub fn upper(algebra: FiniteDimAlgebra) -> Self {
        TriangularMask {
            algebra,
            kind: MaskKind::Upper,
        }
    }

    pub fn strict_upper(algebra: FiniteDimAlgebra) -> Self {
        TriangularMask {
            algebra,
            kind: MaskKind::StrictUpper,
        }
    }

    /// Whether the local pair `(i,j)` of some summand lies in the mask.
    pub fn contains_local(&self, i: usize, j: usize) -> bool {
        match self.kind {
            MaskKind::Upper => i <= j,
            MaskKind::StrictUpper => i < j,
        }
    }

    /// Whether a global pair lies in the mask.
    pub fn contains_global(&self, i: usize, j: usize) -> bool {
        match (self.algebra.local(i), self.algebra.local(j)) {
            (Some((s, li)), Some((t, lj))) if s == t => self.contains_local(li, lj),
            _ => false,
        }
    }

    /// Whether an element is supported inside the mask.
    pub fn contains_element(&self, x: &AlgebraElement) -> bool {
        x.algebra() == &self.algebra
            && x.support().iter().all(|&(i, j)| self.contains_global(i, j))
    }

    /// Matrix units of the mask, as `(summand, i, j)` triples.
    pub fn unit_triples(&self) -> Vec<(usize, usize, usize)> {
        self.algebra
            .unit_triples()
            .filter(|&(_, i, j)| self.contains_local(i, j))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.unit_triples().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn layout_single_summand() {
        let a = FiniteDimAlgebra::new(vec![2]).unwrap();
        assert_eq!(a.total_size(), 2);
        assert_eq!(a.dimension(), 4);
    }

    #[test]
    fn layout_three_summands() {
        // blocks at offsets 0, 2, 5; total linear dimension 4+9+16 = 29
        let a = FiniteDimAlgebra::new(vec![2, 3, 4]).unwrap();
        assert_eq!(a.summand_offset(1), 0);
        assert_eq!(a.summand_offset(2), 2);
        assert_eq!(a.summand_offset(3), 5);
        assert_eq!(a.total_size(), 9);
        assert_eq!(a.dimension(), 29);
    }

    #[test]
    fn layout_degenerate() {
        let a = FiniteDimAlgebra::new(vec![1]).unwrap();
        assert_eq!(a.total_size(), 1);
        assert_eq!(a.matrix_unit(1, 1, 1).unwrap().support(), vec![(1, 1)]);
    }

    #[test]
    fn invalid_sizes_rejected() {
        assert_eq!(FiniteDimAlgebra::new(vec![]), Err(Error::EmptySizes));
        assert_eq!(
            FiniteDimAlgebra::new(vec![2, 0]),
            Err(Error::NonPositiveSize { summand: 2 })
        );
    }

    #[test]
    fn matrix_unit_global_position() {
        // (M_2 ⊕ M_3, summand 2, 1, 1) sits at global (3,3)
        let a = FiniteDimAlgebra::new(vec![2, 3]).unwrap();
        let e = a.matrix_unit(2, 1, 1).unwrap();
        assert_eq!(e.support(), vec![(3, 3)]);
    }

    #[test]
    fn matrix_unit_out_of_range() {
        let a = FiniteDimAlgebra::matrix(2);
        assert!(matches!(
            a.matrix_unit(1, 2, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn unit_multiplication_law() {
        // exhaustive δ-law on M_3: e_{ij}·e_{kl} = δ_{jk} e_{il}
        let a = FiniteDimAlgebra::matrix(3);
        for (_, i, j) in a.unit_triples() {
            for (_, k, l) in a.unit_triples() {
                let prod = a
                    .matrix_unit(1, i, j)
                    .unwrap()
                    .multiply(&a.matrix_unit(1, k, l).unwrap())
                    .unwrap();
                let expected = if j == k {
                    a.matrix_unit(1, i, l).unwrap()
                } else {
                    a.zero()
                };
                assert_eq!(prod, expected, "e{i}{j}·e{k}{l}");
            }
        }
    }

    #[test]
    fn adjoint_is_involution() {
        let a = FiniteDimAlgebra::new(vec![2, 2]).unwrap();
        let x = AlgebraElement::from_entries(
            a.clone(),
            [((1, 2), ratio(3, 2)), ((3, 4), ratio(-1, 5))],
        )
        .unwrap();
        assert_eq!(x.adjoint().adjoint(), x);
        assert_eq!(
            a.matrix_unit(1, 1, 2).unwrap().adjoint(),
            a.matrix_unit(1, 2, 1).unwrap()
        );
    }

    #[test]
    fn cross_block_support_rejected() {
        let a = FiniteDimAlgebra::new(vec![2, 2]).unwrap();
        assert_eq!(
            AlgebraElement::from_entries(a, [((1, 3), ratio(1, 1))]),
            Err(Error::OutsideIndexSet { row: 1, col: 3 })
        );
    }

    #[test]
    fn algebra_mismatch_rejected() {
        let a = FiniteDimAlgebra::matrix(2);
        let b = FiniteDimAlgebra::matrix(3);
        let x = a.matrix_unit(1, 1, 1).unwrap();
        let y = b.matrix_unit(1, 1, 1).unwrap();
        assert_eq!(x.add(&y), Err(Error::AlgebraMismatch));
        assert_eq!(x.multiply(&y), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn norm_identity() {
        let a = FiniteDimAlgebra::matrix(3);
        assert!((a.identity().operator_norm(1e-9) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn norm_of_row() {
        // e_{11} + e_{12} in M_2 has norm √2
        let a = FiniteDimAlgebra::matrix(2);
        let x = a
            .matrix_unit(1, 1, 1)
            .unwrap()
            .add(&a.matrix_unit(1, 1, 2).unwrap())
            .unwrap();
        assert!((x.operator_norm(1e-9) - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn norm_over_summands() {
        // single unit in one summand of M_2 ⊕ M_2, the other zero
        let a = FiniteDimAlgebra::new(vec![2, 2]).unwrap();
        let x = a.matrix_unit(1, 1, 2).unwrap();
        assert!((x.operator_norm(1e-9) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn mask_closure_and_dimension() {
        let mask = TriangularMask::upper(FiniteDimAlgebra::matrix(3));
        for &(_, i, j) in &mask.unit_triples() {
            for &(_, k, l) in &mask.unit_triples() {
                if j == k {
                    assert!(mask.contains_local(i, l));
                }
            }
        }
        assert_eq!(mask.dimension(), 6);
        let strict = TriangularMask::strict_upper(FiniteDimAlgebra::matrix(3));
        assert_eq!(strict.dimension(), 3);
    }
}
