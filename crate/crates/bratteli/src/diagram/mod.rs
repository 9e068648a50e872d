//! Bratteli diagrams.
//!
//! A diagram is a leveled multigraph: level `k` carries one vertex per
//! matrix summand, with a positive size, and the gap between levels `k`
//! and `k+1` carries a nonnegative multiplicity matrix `E_k` whose entry
//! `E_k[v][w]` counts the edges (the multiplicity of the partial
//! embedding) from vertex `v` at level `k` to vertex `w` at level `k+1`.
//!
//! Diagrams are either *truncated* (finitely many levels; predicates are
//! answered prefix-only) or carry an eventually periodic [`Tail`], in
//! which case every predicate in this crate is exactly decidable.
//!
//! Tail size semantics: for unital diagrams the sizes in the tail are
//! forced by the recurrence `d_{k+1}(w) = Σ_v E_k[v][w]·d_k(v)`. A
//! nonunital diagram is a combinatorial object (it may fold an unbounded
//! vertex family onto a fixed vertex set, so the per-vertex size
//! inequality is deliberately not enforced); its tail sizes are declared
//! affinely — vertex `v` at period position `q`, occurrence `j`, has size
//! `base_q(v) + j·growth_q(v)`.

mod analysis;
mod classify;

pub use analysis::{
    AbsentReason, FermionVerdict, FermionWitness, UniquePath, Verdict, WitnessCycle,
};
pub(crate) use analysis::tarjan_scc as analysis_scc;
pub use classify::{classify, Classification, ClassificationReport, TypeITag, DEFAULT_SENTINEL};

use crate::error::{Error, Result};

/// Nonnegative multiplicity matrix; rows index source vertices.
pub type MultMatrix = Vec<Vec<u64>>;

/// Eventually periodic continuation of a diagram.
///
/// The first period matrix is the edge matrix out of the last
/// materialized level, and the matrices repeat cyclically forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tail {
    pub period: Vec<MultMatrix>,
    /// Declared sizes for period positions `1..p` (nonunital, `p > 1` only).
    pub period_sizes: Option<Vec<Vec<u64>>>,
    /// Per-position, per-vertex size increment per full period (nonunital).
    pub size_growth: Option<Vec<Vec<u64>>>,
}

impl Tail {
    pub fn stationary(matrix: MultMatrix) -> Self {
        Tail {
            period: vec![matrix],
            period_sizes: None,
            size_growth: None,
        }
    }

    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        self.period.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    unital: bool,
    sizes: Vec<Vec<u64>>,
    edges: Vec<MultMatrix>,
    tail: Option<Tail>,
}

fn matrix_dims(m: &MultMatrix) -> (usize, usize) {
    (m.len(), m.first().map_or(0, |r| r.len()))
}

fn check_rectangular(m: &MultMatrix, what: &str) -> Result<()> {
    let cols = m.first().map_or(0, |r| r.len());
    if m.is_empty() || cols == 0 {
        return Err(Error::InvalidDiagram(format!("{what} is empty")));
    }
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidDiagram(format!("{what} is ragged")));
    }
    Ok(())
}

fn check_no_orphans(m: &MultMatrix, what: &str) -> Result<()> {
    let (rows, cols) = matrix_dims(m);
    for w in 0..cols {
        if (0..rows).all(|v| m[v][w] == 0) {
            return Err(Error::InvalidDiagram(format!(
                "{what}: target vertex {} has no incoming edge",
                w + 1
            )));
        }
    }
    Ok(())
}

fn derived_sizes(prev: &[u64], m: &MultMatrix) -> Result<Vec<u64>> {
    let (rows, cols) = matrix_dims(m);
    debug_assert_eq!(rows, prev.len());
    let mut out = vec![0u64; cols];
    for (w, slot) in out.iter_mut().enumerate() {
        for v in 0..rows {
            let term = m[v][w]
                .checked_mul(prev[v])
                .ok_or(Error::MultiplicityOverflow)?;
            *slot = slot.checked_add(term).ok_or(Error::MultiplicityOverflow)?;
        }
    }
    Ok(out)
}

impl BratteliDiagram {
    /// Builds and validates a diagram. `sizes` lists the materialized
    /// levels; `edges[k]` joins level `k+1` to level `k+2` (1-based).
    pub fn new(
        unital: bool,
        sizes: Vec<Vec<u64>>,
        edges: Vec<MultMatrix>,
        tail: Option<Tail>,
    ) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidDiagram("no levels".into()));
        }
        for (k, level) in sizes.iter().enumerate() {
            if level.is_empty() {
                return Err(Error::InvalidDiagram(format!("level {} has no vertices", k + 1)));
            }
            if level.iter().any(|&d| d == 0) {
                return Err(Error::InvalidDiagram(format!(
                    "level {} has a vertex of size 0",
                    k + 1
                )));
            }
        }
        if edges.len() + 1 != sizes.len() {
            return Err(Error::InvalidDiagram(format!(
                "expected {} edge matrices for {} levels, got {}",
                sizes.len() - 1,
                sizes.len(),
                edges.len()
            )));
        }
        for (k, m) in edges.iter().enumerate() {
            let what = format!("edge matrix {}", k + 1);
            check_rectangular(m, &what)?;
            let (rows, cols) = matrix_dims(m);
            if rows != sizes[k].len() || cols != sizes[k + 1].len() {
                return Err(Error::InvalidDiagram(format!(
                    "{what} has shape {rows}×{cols}, expected {}×{}",
                    sizes[k].len(),
                    sizes[k + 1].len()
                )));
            }
            check_no_orphans(m, &what)?;
            if unital {
                let derived = derived_sizes(&sizes[k], m)?;
                if derived != sizes[k + 1] {
                    return Err(Error::InvalidDiagram(format!(
                        "unital diagram violates the size equality at level {}",
                        k + 2
                    )));
                }
            }
        }
        if let Some(t) = &tail {
            if t.period.is_empty() {
                return Err(Error::InvalidDiagram("tail period is empty".into()));
            }
            let p = t.period.len();
            for (q, m) in t.period.iter().enumerate() {
                let what = format!("tail period matrix {}", q + 1);
                check_rectangular(m, &what)?;
                check_no_orphans(m, &what)?;
            }
            let last = sizes.last().expect("nonempty").len();
            if matrix_dims(&t.period[0]).0 != last {
                return Err(Error::InvalidDiagram(
                    "tail period does not start at the last materialized level".into(),
                ));
            }
            for q in 0..p {
                let cols = matrix_dims(&t.period[q]).1;
                let next_rows = matrix_dims(&t.period[(q + 1) % p]).0;
                if cols != next_rows {
                    return Err(Error::InvalidDiagram(format!(
                        "tail period matrices {} and {} are dimensionally inconsistent",
                        q + 1,
                        (q + 1) % p + 1
                    )));
                }
            }
            if unital {
                if t.period_sizes.is_some() || t.size_growth.is_some() {
                    return Err(Error::InvalidDiagram(
                        "unital tails derive their sizes; declared tail sizes are not allowed"
                            .into(),
                    ));
                }
            } else {
                match &t.period_sizes {
                    None if p > 1 => {
                        return Err(Error::InvalidDiagram(
                            "nonunital tail with period > 1 requires period_sizes".into(),
                        ))
                    }
                    Some(ps) => {
                        if ps.len() != p - 1 {
                            return Err(Error::InvalidDiagram(format!(
                                "period_sizes must list positions 2..=period ({} entries)",
                                p - 1
                            )));
                        }
                        for (q, v) in ps.iter().enumerate() {
                            let expect = matrix_dims(&t.period[q]).1;
                            if v.len() != expect {
                                return Err(Error::InvalidDiagram(format!(
                                    "period_sizes[{q}] has {} entries, expected {expect}",
                                    v.len()
                                )));
                            }
                            if v.iter().any(|&d| d == 0) {
                                return Err(Error::InvalidDiagram(
                                    "period_sizes entries must be positive".into(),
                                ));
                            }
                        }
                    }
                    None => {}
                }
                if let Some(g) = &t.size_growth {
                    if g.len() != p {
                        return Err(Error::InvalidDiagram(format!(
                            "size_growth must list all {p} period positions"
                        )));
                    }
                    for (q, v) in g.iter().enumerate() {
                        let expect = if q == 0 {
                            last
                        } else {
                            matrix_dims(&t.period[q - 1]).1
                        };
                        if v.len() != expect {
                            return Err(Error::InvalidDiagram(format!(
                                "size_growth[{q}] has {} entries, expected {expect}",
                                v.len()
                            )));
                        }
                    }
                }
            }
        }
        Ok(BratteliDiagram {
            unital,
            sizes,
            edges,
            tail,
        })
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn tail(&self) -> Option<&Tail> {
        self.tail.as_ref()
    }

    pub fn has_tail(&self) -> bool {
        self.tail.is_some()
    }

    /// Number of materialized levels.
    pub fn materialized_levels(&self) -> usize {
        self.sizes.len()
    }

    /// The level at which the tail's first period matrix applies.
    pub fn tail_start(&self) -> usize {
        self.sizes.len()
    }

    fn tail_position(&self, level: usize) -> usize {
        let p = self.tail.as_ref().expect("tail").period.len();
        (level - self.tail_start()) % p
    }

    /// Edge matrix of the gap `level → level+1` (1-based level).
    pub fn edge_matrix(&self, level: usize) -> Result<MultMatrix> {
        if level == 0 {
            return Err(Error::LevelOutOfRange { level });
        }
        if level < self.sizes.len() {
            return Ok(self.edges[level - 1].clone());
        }
        match &self.tail {
            Some(t) => Ok(t.period[self.tail_position(level)].clone()),
            None => Err(Error::LevelOutOfRange { level }),
        }
    }

    pub fn vertex_count(&self, level: usize) -> Result<usize> {
        Ok(self.size_vector(level)?.len())
    }

    /// Size vector of a level, resolving through the tail when needed.
    pub fn size_vector(&self, level: usize) -> Result<Vec<u64>> {
        if level == 0 {
            return Err(Error::LevelOutOfRange { level });
        }
        if level <= self.sizes.len() {
            return Ok(self.sizes[level - 1].clone());
        }
        let t = self
            .tail
            .as_ref()
            .ok_or(Error::LevelOutOfRange { level })?;
        let start = self.tail_start();
        let p = t.period.len();
        if self.unital {
            let mut d = self.sizes[start - 1].clone();
            for l in start..level {
                d = derived_sizes(&d, &t.period[(l - start) % p])?;
            }
            Ok(d)
        } else {
            let q = (level - start) % p;
            let j = ((level - start) / p) as u64;
            let base = if q == 0 {
                self.sizes[start - 1].clone()
            } else {
                t.period_sizes
                    .as_ref()
                    .expect("validated: period_sizes present for p > 1")[q - 1]
                    .clone()
            };
            let growth = t
                .size_growth
                .as_ref()
                .map(|g| g[q].clone())
                .unwrap_or_else(|| vec![0; base.len()]);
            base.iter()
                .zip(&growth)
                .map(|(&b, &g)| {
                    g.checked_mul(j)
                        .and_then(|x| x.checked_add(b))
                        .ok_or(Error::MultiplicityOverflow)
                })
                .collect()
        }
    }

    /// Number of downward paths between two levels: the product of the
    /// intervening multiplicity matrices. Entry `[v][w]` counts paths from
    /// vertex `v` at `from_level` to `w` at `to_level`.
    pub fn compose_multiplicities(&self, from_level: usize, to_level: usize) -> Result<MultMatrix> {
        if from_level == 0 || from_level >= to_level {
            return Err(Error::InvalidDiagram(format!(
                "compose requires 1 <= from < to, got {from_level} and {to_level}"
            )));
        }
        let mut acc = self.edge_matrix(from_level)?;
        for level in from_level + 1..to_level {
            let next = self.edge_matrix(level)?;
            acc = mult_mat(&acc, &next)?;
        }
        Ok(acc)
    }

    /// Passes to the subsystem of the listed levels: the new gap matrices
    /// are the composed multiplicities between consecutive listed levels.
    /// A tail survives when the original has one; the new period spans the
    /// last listed gap, rounded up to a whole number of original periods.
    pub fn telescope(&self, levels: &[usize]) -> Result<BratteliDiagram> {
        if levels.is_empty() || levels.windows(2).any(|w| w[0] >= w[1]) || levels[0] == 0 {
            return Err(Error::NonIncreasingLevels);
        }
        let mut sizes = Vec::with_capacity(levels.len());
        for &l in levels {
            sizes.push(self.size_vector(l)?);
        }
        let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
        for w in levels.windows(2) {
            edges.push(self.compose_multiplicities(w[0], w[1])?);
        }
        let last = *levels.last().expect("nonempty");
        let tail = match &self.tail {
            None => None,
            Some(t) => {
                let p = t.period.len();
                let gap = if levels.len() >= 2 {
                    last - levels[levels.len() - 2]
                } else {
                    p
                };
                // align the telescoped period with the original one
                let gap = gap.div_ceil(p) * p;
                let period = vec![self.compose_multiplicities(last, last + gap)?];
                if self.unital {
                    Some(Tail {
                        period,
                        period_sizes: None,
                        size_growth: None,
                    })
                } else {
                    let q = if last >= self.tail_start() {
                        self.tail_position(last)
                    } else {
                        // nonunital tail sizes only apply from the tail start
                        return Err(Error::InvalidDiagram(
                            "telescope of a nonunital tail must end at or past the tail start"
                                .into(),
                        ));
                    };
                    let growth = t.size_growth.as_ref().map(|g| {
                        vec![g[q].iter().map(|&x| x * (gap / p) as u64).collect()]
                    });
                    Some(Tail {
                        period,
                        period_sizes: None,
                        size_growth: growth,
                    })
                }
            }
        };
        BratteliDiagram::new(self.unital, sizes, edges, tail)
    }

    // ----- canonical constructors -----

    /// The `t^∞` UHF diagram: one vertex per level, multiplicity `t`.
    pub fn uhf(base_size: u64, multiplicity: u64) -> Self {
        BratteliDiagram::new(
            true,
            vec![vec![base_size]],
            vec![],
            Some(Tail::stationary(vec![vec![multiplicity]])),
        )
        .expect("valid UHF diagram")
    }

    /// The Fermion diagram `2 — 4 — 8 — …` with double edges.
    pub fn fermion() -> Self {
        BratteliDiagram::uhf(2, 2)
    }

    /// The Pascal triangle diagram truncated at `depth` levels.
    pub fn pascal(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidDiagram("depth must be positive".into()));
        }
        let mut sizes = Vec::new();
        let mut edges = Vec::new();
        for k in 1..=depth {
            let mut row = Vec::with_capacity(k);
            let mut c = 1u64;
            for i in 0..k {
                row.push(c);
                c = c * (k - 1 - i) as u64 / (i + 1) as u64;
            }
            sizes.push(row);
            if k < depth {
                let mut m = vec![vec![0u64; k + 1]; k];
                for (v, row) in m.iter_mut().enumerate() {
                    row[v] = 1;
                    row[v + 1] = 1;
                }
                edges.push(m);
            }
        }
        BratteliDiagram::new(true, sizes, edges, None)
    }

    /// The compact-operator tower with its unit adjoined: a scalar seed
    /// feeding itself and a chain whose sizes grow by one per level.
    pub fn compact_operators() -> Self {
        BratteliDiagram::new(
            true,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 1], vec![0, 1]])),
        )
        .expect("valid diagram")
    }

    /// Single-vertex multiplicity-one corner chain `M_1 → M_2 → …`,
    /// truncated at `depth` levels (nonunital).
    pub fn corner_chain(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidDiagram("depth must be positive".into()));
        }
        let sizes = (1..=depth as u64).map(|k| vec![k]).collect();
        let edges = vec![vec![vec![1u64]]; depth - 1];
        BratteliDiagram::new(false, sizes, edges, None)
    }

    /// Folded diagram of the diagonal compact operators `c₀`: a seed plus
    /// a stable size-one vertex, countably many paths.
    pub fn c0_diagram() -> Self {
        BratteliDiagram::new(
            false,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 1], vec![0, 1]])),
        )
        .expect("valid diagram")
    }

    /// Folded diagram of `(Σ_k ⊕ M_k)_{c₀}`: a seed cycle feeding a
    /// transient vertex whose declared sizes grow linearly.
    pub fn r_diagram() -> Self {
        BratteliDiagram::new(
            false,
            vec![vec![1, 1]],
            vec![],
            Some(Tail {
                period: vec![vec![vec![1, 1], vec![0, 0]]],
                period_sizes: None,
                size_growth: Some(vec![vec![0, 1]]),
            }),
        )
        .expect("valid diagram")
    }

    /// Folded binary tree of size-one vertices: `C(K)` for a Cantor `K`.
    /// Uncountably many paths, sizes bounded; requires the nonunital flag.
    pub fn cantor_tree() -> Self {
        BratteliDiagram::new(
            false,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 1], vec![1, 1]])),
        )
        .expect("valid diagram")
    }

    /// Folded binary tree with linearly growing declared sizes:
    /// uncountably many paths, each with unbounded sizes.
    pub fn cantor_growing() -> Self {
        BratteliDiagram::new(
            false,
            vec![vec![1, 1]],
            vec![],
            Some(Tail {
                period: vec![vec![vec![1, 1], vec![1, 1]]],
                period_sizes: None,
                size_growth: Some(vec![vec![1, 1]]),
            }),
        )
        .expect("valid diagram")
    }

    /// Stationary diagram with one period matrix (test helper).
    pub fn stationary(unital: bool, sizes: Vec<u64>, matrix: MultMatrix) -> Result<Self> {
        BratteliDiagram::new(unital, vec![sizes], vec![], Some(Tail::stationary(matrix)))
    }
}

pub(crate) fn mult_mat(a: &MultMatrix, b: &MultMatrix) -> Result<MultMatrix> {
    let (ar, ac) = matrix_dims(a);
    let (br, bc) = matrix_dims(b);
    if ac != br {
        return Err(Error::InvalidDiagram(format!(
            "cannot multiply {ar}×{ac} by {br}×{bc}"
        )));
    }
    let mut out = vec![vec![0u64; bc]; ar];
    for i in 0..ar {
        for k in 0..ac {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..bc {
                let term = a[i][k]
                    .checked_mul(b[k][j])
                    .ok_or(Error::MultiplicityOverflow)?;
                out[i][j] = out[i][j]
                    .checked_add(term)
                    .ok_or(Error::MultiplicityOverflow)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermion_sizes_and_composition() {
        let f = BratteliDiagram::fermion();
        assert_eq!(f.size_vector(1).unwrap(), vec![2]);
        assert_eq!(f.size_vector(3).unwrap(), vec![8]);
        // levels 1→3 compose to multiplicity 4 = 2·2
        assert_eq!(f.compose_multiplicities(1, 3).unwrap(), vec![vec![4]]);
    }

    #[test]
    fn single_gap_composition_is_the_edge_matrix() {
        let d = BratteliDiagram::pascal(4).unwrap();
        assert_eq!(
            d.compose_multiplicities(2, 3).unwrap(),
            d.edge_matrix(2).unwrap()
        );
    }

    #[test]
    fn pascal_paths_by_brute_force() {
        // oracle: count downward paths by explicit enumeration
        let d = BratteliDiagram::pascal(8).unwrap();
        fn count_paths(d: &BratteliDiagram, from: usize, v: usize, to: usize, w: usize) -> u64 {
            if from == to {
                return u64::from(v == w);
            }
            let e = d.edge_matrix(from).unwrap();
            (0..e[v].len())
                .map(|u| e[v][u] * count_paths(d, from + 1, u, to, w))
                .sum()
        }
        let m = d.compose_multiplicities(2, 4).unwrap();
        for v in 0..2 {
            for w in 0..4 {
                assert_eq!(m[v][w], count_paths(&d, 2, v, 4, w));
            }
        }
        // vertices (2,1) → (4,2): two paths, via (3,1) and (3,2)
        assert_eq!(m[0][1], 2);
    }

    #[test]
    fn pascal_is_unital() {
        let d = BratteliDiagram::pascal(6).unwrap();
        assert_eq!(d.size_vector(5).unwrap(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn compact_operators_sizes_grow() {
        let d = BratteliDiagram::compact_operators();
        assert_eq!(d.size_vector(1).unwrap(), vec![1, 1]);
        assert_eq!(d.size_vector(4).unwrap(), vec![1, 4]);
    }

    #[test]
    fn r_diagram_declared_growth() {
        let d = BratteliDiagram::r_diagram();
        assert_eq!(d.size_vector(1).unwrap(), vec![1, 1]);
        assert_eq!(d.size_vector(5).unwrap(), vec![1, 5]);
    }

    #[test]
    fn truncated_diagram_rejects_deep_levels() {
        let d = BratteliDiagram::pascal(3).unwrap();
        assert!(matches!(
            d.size_vector(9),
            Err(Error::LevelOutOfRange { level: 9 })
        ));
    }

    #[test]
    fn telescope_fermion_doubles_multiplicity() {
        let f = BratteliDiagram::fermion();
        let t = f.telescope(&[1, 3, 5]).unwrap();
        assert_eq!(t.size_vector(2).unwrap(), vec![8]);
        assert_eq!(t.edge_matrix(1).unwrap(), vec![vec![4]]);
        // tail continues with the composed multiplicity
        assert_eq!(t.edge_matrix(3).unwrap(), vec![vec![4]]);
    }

    #[test]
    fn telescope_to_all_levels_is_identity() {
        let d = BratteliDiagram::pascal(4).unwrap();
        assert_eq!(d.telescope(&[1, 2, 3, 4]).unwrap(), d);
        let f = BratteliDiagram::fermion();
        assert_eq!(f.telescope(&[1]).unwrap(), f);
    }

    #[test]
    fn telescope_rejects_unordered_levels() {
        let d = BratteliDiagram::pascal(4).unwrap();
        assert_eq!(
            d.telescope(&[2, 2]).unwrap_err(),
            Error::NonIncreasingLevels
        );
    }

    #[test]
    fn telescoped_pascal_has_interior_double_paths() {
        let d = BratteliDiagram::pascal(8).unwrap();
        let t = d.telescope(&[1, 3, 5, 7]).unwrap();
        // oracle: entries of the composed matrices
        for gap in 1..=2usize {
            let m = t.edge_matrix(gap).unwrap();
            let orig = d
                .compose_multiplicities(2 * gap - 1, 2 * gap + 1)
                .unwrap();
            assert_eq!(m, orig);
            assert!(m.iter().flatten().any(|&x| x >= 2));
        }
    }

    #[test]
    fn unital_size_equality_enforced() {
        let bad = BratteliDiagram::new(
            true,
            vec![vec![2], vec![5]],
            vec![vec![vec![2]]],
            None,
        );
        assert!(matches!(bad, Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn orphan_vertices_rejected() {
        let bad = BratteliDiagram::new(
            false,
            vec![vec![1], vec![1, 1]],
            vec![vec![vec![1, 0]]],
            None,
        );
        assert!(matches!(bad, Err(Error::InvalidDiagram(_))));
    }

    #[test]
    fn composition_is_associative_on_small_diagrams() {
        let d = BratteliDiagram::pascal(7).unwrap();
        for (k, m, n) in [(1usize, 3usize, 5usize), (2, 4, 7), (1, 2, 6)] {
            let left = mult_mat(
                &d.compose_multiplicities(k, m).unwrap(),
                &d.compose_multiplicities(m, n).unwrap(),
            )
            .unwrap();
            assert_eq!(left, d.compose_multiplicities(k, n).unwrap());
        }
    }
}
