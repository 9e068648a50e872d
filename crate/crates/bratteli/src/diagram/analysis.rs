//! Structural predicates on Bratteli diagrams.
//!
//! For tail-bearing diagrams every verdict here is exact: the analysis
//! runs on the *period graph*, whose nodes are the pairs (period
//! position, vertex) and whose edges carry the period multiplicities. For
//! truncated diagrams the verdicts are qualified as prefix-only.

use std::collections::{BTreeSet, HashSet};

use crate::diagram::BratteliDiagram;
use crate::error::{Error, Result};

/// Witness chain for the Fermion property: strictly increasing levels,
/// one vertex per level, composed multiplicity at least two between each
/// consecutive pair. Tail-bearing diagrams report a `(prefix, cycle)`
/// decomposition: after the listed prefix, the last vertex repeats every
/// `level_step` levels forever.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermionWitness {
    pub levels: Vec<usize>,
    pub vertices: Vec<usize>,
    pub cycle: Option<WitnessCycle>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCycle {
    pub level_step: usize,
}

impl FermionWitness {
    /// Re-checks the witness against the diagram: every consecutive
    /// composed multiplicity is at least two, and the cycle (when present)
    /// returns to the same vertex with multiplicity at least two.
    pub fn verify(&self, diagram: &BratteliDiagram) -> Result<bool> {
        if self.levels.len() != self.vertices.len() || self.levels.len() < 2 {
            return Ok(false);
        }
        for w in self.levels.windows(2).zip(self.vertices.windows(2)) {
            let (lv, vs) = w;
            let m = diagram.compose_multiplicities(lv[0], lv[1])?;
            if m[vs[0] - 1][vs[1] - 1] < 2 {
                return Ok(false);
            }
        }
        if let Some(c) = &self.cycle {
            let last_level = *self.levels.last().expect("nonempty");
            let last_vertex = self.vertices.last().expect("nonempty") - 1;
            let m = diagram.compose_multiplicities(last_level, last_level + c.level_step)?;
            if m[last_vertex][last_vertex] < 2 {
                return Ok(false);
            }
            if let Some(t) = diagram.tail() {
                // the repeating step must span whole periods
                if c.level_step % t.len() != 0 || last_level < diagram.tail_start() {
                    return Ok(false);
                }
            } else {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbsentReason {
    /// Truncated diagram; no doubled chain was found within the horizon,
    /// but the verdict is prefix-only.
    Truncated,
    /// Exact verdict: no vertex of the period graph admits a doubled
    /// return, so no infinite witness chain exists.
    NoDoubledCycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermionVerdict {
    Witness(FermionWitness),
    Absent(AbsentReason),
}

impl FermionVerdict {
    pub fn witness(&self) -> Option<&FermionWitness> {
        match self {
            FermionVerdict::Witness(w) => Some(w),
            FermionVerdict::Absent(_) => None,
        }
    }
}

/// Boolean verdict with provenance: `exact` is false for truncated
/// diagrams, where only the materialized prefix was inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub exact: bool,
    pub explanation: String,
}

/// A vertex with a unique downward continuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquePath {
    pub level: usize,
    pub vertex: usize,
    /// Finite prefix of the path, as (level, vertex) pairs.
    pub path: Vec<(usize, usize)>,
    /// True when the path provably continues forever (tail-bearing).
    pub exact: bool,
}

// ----- period graph -----

/// Flattened graph of one full period of the tail. Node `(q, v)` stands
/// for vertex `v` at every level with period position `q`.
pub(crate) struct PeriodGraph {
    /// node id -> (position, vertex index within position)
    pub nodes: Vec<(usize, usize)>,
    /// adjacency with multiplicities: edges[n] = (target node, multiplicity)
    pub edges: Vec<Vec<(usize, u64)>>,
    /// strongly connected component id per node
    pub scc_of: Vec<usize>,
    pub scc_count: usize,
}

impl PeriodGraph {
    pub fn build(diagram: &BratteliDiagram) -> Option<PeriodGraph> {
        let tail = diagram.tail()?;
        let p = tail.len();
        let mut counts = Vec::with_capacity(p);
        counts.push(tail.period[0].len());
        for q in 1..p {
            counts.push(tail.period[q].len());
        }
        let mut offset = vec![0usize; p];
        for q in 1..p {
            offset[q] = offset[q - 1] + counts[q - 1];
        }
        let total: usize = counts.iter().sum();
        let mut nodes = Vec::with_capacity(total);
        for (q, &c) in counts.iter().enumerate() {
            for v in 0..c {
                nodes.push((q, v));
            }
        }
        let mut edges = vec![Vec::new(); total];
        for q in 0..p {
            let m = &tail.period[q];
            let tq = (q + 1) % p;
            for (v, row) in m.iter().enumerate() {
                for (w, &mult) in row.iter().enumerate() {
                    if mult > 0 {
                        edges[offset[q] + v].push((offset[tq] + w, mult));
                    }
                }
            }
        }
        let (scc_of, scc_count) = tarjan_scc(&edges);
        Some(PeriodGraph {
            nodes,
            edges,
            scc_of,
            scc_count,
        })
    }

    /// Whether component `c` contains at least one cycle.
    pub fn scc_is_recurrent(&self, c: usize) -> bool {
        let members: Vec<usize> = (0..self.nodes.len())
            .filter(|&n| self.scc_of[n] == c)
            .collect();
        if members.len() > 1 {
            return true;
        }
        let n = members[0];
        self.edges[n].iter().any(|&(t, _)| t == n)
    }

    /// A component is *doubling* when some power of the multiplicity
    /// matrix has a diagonal entry at least two inside it: it contains a
    /// cycle with an edge of multiplicity at least two, or it is strongly
    /// connected without being a single simple cycle.
    pub fn scc_is_doubling(&self, c: usize) -> bool {
        let members: Vec<usize> = (0..self.nodes.len())
            .filter(|&n| self.scc_of[n] == c)
            .collect();
        let mut internal_edges = 0usize;
        let mut has_cycle = members.len() > 1;
        for &n in &members {
            for &(t, mult) in &self.edges[n] {
                if self.scc_of[t] == c {
                    internal_edges += 1;
                    if mult >= 2 {
                        return true;
                    }
                    if t == n {
                        has_cycle = true;
                    }
                }
            }
        }
        has_cycle && internal_edges > members.len()
    }

    pub fn doubling_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&n| self.scc_is_doubling(self.scc_of[n]))
            .collect()
    }

    /// Nodes reachable from `start` (inclusive).
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(n) = stack.pop() {
            for &(t, _) in &self.edges[n] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Nodes from which `target` is reachable (inclusive).
    pub fn ancestors_of(&self, target: usize) -> Vec<bool> {
        let mut rev = vec![Vec::new(); self.nodes.len()];
        for (n, outs) in self.edges.iter().enumerate() {
            for &(t, _) in outs {
                rev[t].push(n);
            }
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![target];
        seen[target] = true;
        while let Some(n) = stack.pop() {
            for &t in &rev[n] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Smallest `m ≥ 1` with at least two length-`m` walks (counted with
    /// multiplicity) from `node` back to itself, capped by a pumping bound.
    pub fn doubled_return_length(&self, node: usize) -> Option<usize> {
        let n = self.nodes.len();
        let bound = n * n + n + 1;
        // walk counts from `node`, saturating at 2
        let mut counts = vec![0u64; n];
        counts[node] = 1;
        for step in 1..=bound {
            let mut next = vec![0u64; n];
            for (u, c) in counts.iter().enumerate() {
                if *c == 0 {
                    continue;
                }
                for &(t, mult) in &self.edges[u] {
                    next[t] = (next[t] + c * mult).min(4);
                }
            }
            counts = next;
            if counts[node] >= 2 {
                return Some(step);
            }
        }
        None
    }
}

/// Iterative Tarjan; returns (component id per node, component count).
/// Component ids are in reverse topological order of the condensation.
pub(crate) fn tarjan_scc(edges: &[Vec<(usize, u64)>]) -> (Vec<usize>, usize) {
    let n = edges.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut scc_of = vec![usize::MAX; n];
    let mut next_index = 0usize;
    let mut scc_count = 0usize;

    // explicit DFS stack: (node, edge cursor)
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut dfs: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut cursor)) = dfs.last_mut() {
            if *cursor == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&(w, _)) = edges[v].get(*cursor) {
                *cursor += 1;
                if index[w] == usize::MAX {
                    dfs.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("nonempty");
                        on_stack[w] = false;
                        scc_of[w] = scc_count;
                        if w == v {
                            break;
                        }
                    }
                    scc_count += 1;
                }
                dfs.pop();
                if let Some(&mut (parent, _)) = dfs.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    (scc_of, scc_count)
}

impl BratteliDiagram {
    /// Decides the Fermion property.
    ///
    /// Tail-bearing diagrams get an exact verdict: a witness exists
    /// precisely when some period-graph vertex admits a doubled return,
    /// and the returned witness is a `(prefix, cycle)` pair. Truncated
    /// diagrams get the longest doubled chain found within `horizon`
    /// levels, or `Absent(Truncated)` when no chain with at least one
    /// doubled step exists there.
    pub fn has_fermion_property(&self, horizon: usize) -> Result<FermionVerdict> {
        if let Some(graph) = PeriodGraph::build(self) {
            let doubling = graph.doubling_nodes();
            let Some(&node) = doubling.first() else {
                return Ok(FermionVerdict::Absent(AbsentReason::NoDoubledCycle));
            };
            let step = graph
                .doubled_return_length(node)
                .ok_or_else(|| {
                    Error::InternalInvariant("doubling component without doubled return".into())
                })?;
            let (q, v) = graph.nodes[node];
            let start = self.tail_start() + q;
            let witness = FermionWitness {
                levels: vec![start, start + step, start + 2 * step],
                vertices: vec![v + 1, v + 1, v + 1],
                cycle: Some(WitnessCycle { level_step: step }),
            };
            debug_assert!(witness.verify(self)?);
            return Ok(FermionVerdict::Witness(witness));
        }

        // truncated: dynamic program for the longest doubled chain
        let depth = self.materialized_levels().min(horizon.max(1));
        let mut best_len: Vec<Vec<usize>> = Vec::new();
        let mut best_next: Vec<Vec<Option<(usize, usize)>>> = Vec::new();
        for l in 1..=depth {
            let n = self.vertex_count(l)?;
            best_len.push(vec![1; n]);
            best_next.push(vec![None; n]);
        }
        for l in (1..=depth).rev() {
            for m in l + 1..=depth {
                let comp = self.compose_multiplicities(l, m)?;
                for v in 0..comp.len() {
                    for (w, &paths) in comp[v].iter().enumerate() {
                        if paths >= 2 {
                            let cand = 1 + best_len[m - 1][w];
                            if cand > best_len[l - 1][v] {
                                best_len[l - 1][v] = cand;
                                best_next[l - 1][v] = Some((m, w));
                            }
                        }
                    }
                }
            }
        }
        let mut start = None;
        let mut best = 1usize;
        for l in 1..=depth {
            for v in 0..best_len[l - 1].len() {
                if best_len[l - 1][v] > best {
                    best = best_len[l - 1][v];
                    start = Some((l, v));
                }
            }
        }
        match start {
            None => Ok(FermionVerdict::Absent(AbsentReason::Truncated)),
            Some((mut l, mut v)) => {
                let mut levels = vec![l];
                let mut vertices = vec![v + 1];
                while let Some((m, w)) = best_next[l - 1][v] {
                    levels.push(m);
                    vertices.push(w + 1);
                    l = m;
                    v = w;
                }
                Ok(FermionVerdict::Witness(FermionWitness {
                    levels,
                    vertices,
                    cycle: None,
                }))
            }
        }
    }

    /// Start classes for reachability analyses: all materialized
    /// (level, vertex) pairs, plus the first occurrence of every later
    /// period position when a tail is present.
    fn start_levels(&self) -> Vec<usize> {
        let mut levels: Vec<usize> = (1..=self.materialized_levels()).collect();
        if let Some(t) = self.tail() {
            for q in 1..t.len() {
                levels.push(self.tail_start() + q);
            }
        }
        levels
    }

    /// Iterates the forward reach set of `(level, vertex)`, calling
    /// `visit` per level with (level, reach set). Returns when `visit`
    /// yields `Some(r)`, the truncation is exhausted (returns `None`),
    /// or — tail-bearing — the (position, set) state repeats.
    fn iterate_reach<R>(
        &self,
        level: usize,
        vertex: usize,
        mut visit: impl FnMut(usize, &BTreeSet<usize>) -> Option<R>,
    ) -> Result<Option<R>> {
        let mut set: BTreeSet<usize> = [vertex].into();
        let mut l = level;
        let mut seen: HashSet<(usize, BTreeSet<usize>)> = HashSet::new();
        loop {
            if let Some(r) = visit(l, &set) {
                return Ok(Some(r));
            }
            if self.tail().is_some() && l >= self.tail_start() {
                let key = (self.tail_position(l), set.clone());
                if !seen.insert(key) {
                    return Ok(None);
                }
            }
            let e = match self.edge_matrix(l) {
                Ok(e) => e,
                Err(Error::LevelOutOfRange { .. }) => return Ok(None),
                Err(e) => return Err(e),
            };
            let mut next = BTreeSet::new();
            for &v in &set {
                for (w, &mult) in e[v].iter().enumerate() {
                    if mult > 0 {
                        next.insert(w);
                    }
                }
            }
            set = next;
            l += 1;
        }
    }

    /// Simplicity: every vertex eventually reaches *all* vertices of some
    /// lower level.
    pub fn is_simple(&self) -> Result<Verdict> {
        let exact = self.has_tail();
        for l in self.start_levels() {
            let n = self.vertex_count(l)?;
            for v in 0..n {
                let full = self.iterate_reach(l, v, |lvl, set| {
                    let count = self.vertex_count(lvl).ok()?;
                    (lvl > l && set.len() == count).then_some(())
                })?;
                if full.is_none() {
                    return Ok(Verdict {
                        holds: false,
                        exact,
                        explanation: format!(
                            "vertex {} at level {l} never reaches a full level",
                            v + 1
                        ),
                    });
                }
            }
        }
        Ok(Verdict {
            holds: true,
            exact,
            explanation: "every vertex reaches a full lower level".into(),
        })
    }

    /// Centre triviality: every pair of same-level vertices has downward
    /// paths meeting in a common vertex.
    pub fn has_trivial_centre(&self) -> Result<Verdict> {
        let exact = self.has_tail();
        for l in self.start_levels() {
            let n = self.vertex_count(l)?;
            for v in 0..n {
                for u in v + 1..n {
                    if !self.pair_meets(l, v, u)? {
                        return Ok(Verdict {
                            holds: false,
                            exact,
                            explanation: format!(
                                "vertices {} and {} at level {l} have no common descendant",
                                v + 1,
                                u + 1
                            ),
                        });
                    }
                }
            }
        }
        Ok(Verdict {
            holds: true,
            exact,
            explanation: "any two same-level vertices share a descendant".into(),
        })
    }

    fn pair_meets(&self, level: usize, a: usize, b: usize) -> Result<bool> {
        let mut sa: BTreeSet<usize> = [a].into();
        let mut sb: BTreeSet<usize> = [b].into();
        let mut l = level;
        let mut seen: HashSet<(usize, BTreeSet<usize>, BTreeSet<usize>)> = HashSet::new();
        loop {
            if sa.intersection(&sb).next().is_some() {
                return Ok(true);
            }
            if self.tail().is_some() && l >= self.tail_start() {
                let key = (self.tail_position(l), sa.clone(), sb.clone());
                if !seen.insert(key) {
                    return Ok(false);
                }
            }
            let e = match self.edge_matrix(l) {
                Ok(e) => e,
                Err(Error::LevelOutOfRange { .. }) => return Ok(false),
                Err(e) => return Err(e),
            };
            let step = |set: &BTreeSet<usize>| {
                let mut next = BTreeSet::new();
                for &v in set {
                    for (w, &mult) in e[v].iter().enumerate() {
                        if mult > 0 {
                            next.insert(w);
                        }
                    }
                }
                next
            };
            sa = step(&sa);
            sb = step(&sb);
            l += 1;
        }
    }

    /// Searches for a vertex with a unique downward path: at every lower
    /// level exactly one vertex is reachable, with multiplicity one.
    pub fn find_unique_descending_path(&self) -> Result<Option<UniquePath>> {
        for l in self.start_levels() {
            let n = self.vertex_count(l)?;
            'vertex: for v in 0..n {
                let mut path = vec![(l, v + 1)];
                let mut cur = v;
                let mut lvl = l;
                let mut seen: HashSet<(usize, usize)> = HashSet::new();
                loop {
                    if self.tail().is_some() && lvl >= self.tail_start() {
                        if !seen.insert((self.tail_position(lvl), cur)) {
                            return Ok(Some(UniquePath {
                                level: l,
                                vertex: v + 1,
                                path,
                                exact: true,
                            }));
                        }
                    }
                    let e = match self.edge_matrix(lvl) {
                        Ok(e) => e,
                        Err(Error::LevelOutOfRange { .. }) => {
                            // truncated: accept if at least one step was taken
                            if path.len() >= 2 {
                                return Ok(Some(UniquePath {
                                    level: l,
                                    vertex: v + 1,
                                    path,
                                    exact: false,
                                }));
                            }
                            continue 'vertex;
                        }
                        Err(e) => return Err(e),
                    };
                    let row = &e[cur];
                    let nonzero: Vec<usize> =
                        (0..row.len()).filter(|&w| row[w] > 0).collect();
                    if nonzero.len() != 1 || row[nonzero[0]] != 1 {
                        continue 'vertex;
                    }
                    cur = nonzero[0];
                    lvl += 1;
                    if path.len() < 8 {
                        path.push((lvl, cur + 1));
                    }
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Tail;

    #[test]
    fn fermion_diagram_has_witness() {
        let f = BratteliDiagram::fermion();
        let verdict = f.has_fermion_property(8).unwrap();
        let w = verdict.witness().expect("witness");
        assert_eq!(w.levels, vec![1, 2, 3]);
        assert_eq!(w.vertices, vec![1, 1, 1]);
        assert!(w.verify(&f).unwrap());
    }

    #[test]
    fn pascal_has_witness_with_step_two() {
        let d = BratteliDiagram::pascal(8).unwrap();
        let verdict = d.has_fermion_property(8).unwrap();
        let w = verdict.witness().expect("witness");
        assert!(w.verify(&d).unwrap());
        assert!(w.levels.len() >= 4);
        assert!(w
            .levels
            .windows(2)
            .all(|pair| pair[1] - pair[0] == 2));
    }

    #[test]
    fn multiplicity_one_chain_has_no_witness() {
        let d = BratteliDiagram::corner_chain(8).unwrap();
        assert_eq!(
            d.has_fermion_property(8).unwrap(),
            FermionVerdict::Absent(AbsentReason::Truncated)
        );
    }

    #[test]
    fn stationary_triangular_matrix_absent() {
        let d =
            BratteliDiagram::stationary(false, vec![1, 1], vec![vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(
            d.has_fermion_property(8).unwrap(),
            FermionVerdict::Absent(AbsentReason::NoDoubledCycle)
        );
    }

    #[test]
    fn two_distinct_cycles_through_a_vertex_double() {
        // position-0 vertex has a self-loop and a 2-cycle: doubling
        let d = BratteliDiagram::stationary(false, vec![1, 1], vec![vec![1, 1], vec![1, 0]])
            .unwrap();
        let verdict = d.has_fermion_property(8).unwrap();
        let w = verdict.witness().expect("witness");
        assert!(w.verify(&d).unwrap());
    }

    #[test]
    fn fermion_property_survives_telescoping() {
        for d in [
            BratteliDiagram::fermion(),
            BratteliDiagram::pascal(9).unwrap(),
        ] {
            let t = d.telescope(&[1, 3, 5, 7, 9][..d.materialized_levels().min(5)].as_ref())
                .unwrap_or_else(|_| d.telescope(&[1, 3, 5]).unwrap());
            let before = d.has_fermion_property(8).unwrap().witness().is_some();
            let after = t.has_fermion_property(8).unwrap().witness().is_some();
            assert_eq!(before, after);
        }
    }

    #[test]
    fn simplicity_examples() {
        assert!(BratteliDiagram::fermion().is_simple().unwrap().holds);

        // two disjoint chains: not simple, centre nontrivial
        let two = BratteliDiagram::new(
            true,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 0], vec![0, 1]])),
        )
        .unwrap();
        let v = two.is_simple().unwrap();
        assert!(!v.holds && v.exact);
        assert!(!two.has_trivial_centre().unwrap().holds);

        // triangular stationary diagram: not simple
        let tri = BratteliDiagram::new(
            true,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 0], vec![1, 1]])),
        )
        .unwrap();
        let v = tri.is_simple().unwrap();
        assert!(!v.holds);
        // oracle: reachability closure. vertex 1 reaches only itself.
        let m = tri.compose_multiplicities(1, 6).unwrap();
        assert_eq!(m[0][1], 0);
    }

    #[test]
    fn centre_examples() {
        // [[1,1],[0,1]]: both vertices reach vertex 2 — centre trivial
        let d = BratteliDiagram::new(
            true,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 1], vec![0, 1]])),
        )
        .unwrap();
        let v = d.has_trivial_centre().unwrap();
        assert!(v.holds && v.exact);
        // oracle: pairwise common-descendant via composed multiplicities
        let m = d.compose_multiplicities(1, 4).unwrap();
        assert!((0..2).any(|w| m[0][w] > 0 && m[1][w] > 0));

        assert!(BratteliDiagram::fermion().has_trivial_centre().unwrap().holds);
    }

    #[test]
    fn unique_path_examples() {
        // corner chain: the level-1 vertex carries the unique path
        let chain = BratteliDiagram::corner_chain(6).unwrap();
        let p = chain.find_unique_descending_path().unwrap().expect("path");
        assert_eq!((p.level, p.vertex), (1, 1));
        assert!(!p.exact);

        // F-diagram: double edges everywhere, no unique path
        assert_eq!(
            BratteliDiagram::fermion()
                .find_unique_descending_path()
                .unwrap(),
            None
        );

        // [[1,1],[0,1]]: vertex 2 rides the path 2 → 2 → 2 → …
        let d = BratteliDiagram::new(
            true,
            vec![vec![1, 1]],
            vec![],
            Some(Tail::stationary(vec![vec![1, 1], vec![0, 1]])),
        )
        .unwrap();
        let p = d.find_unique_descending_path().unwrap().expect("path");
        assert_eq!((p.level, p.vertex), (1, 2));
        assert!(p.exact);
        // oracle to depth 8: row of vertex 2 keeps a single unit entry
        for to in 2..=8 {
            let m = d.compose_multiplicities(1, to).unwrap();
            assert_eq!(m[1], vec![0, 1]);
        }
    }

    #[test]
    fn simple_implies_trivial_centre_on_small_family() {
        // exhaustive stationary family: 2 vertices, multiplicities ≤ 1
        for m00 in 0..=1u64 {
            for m01 in 0..=1u64 {
                for m10 in 0..=1u64 {
                    for m11 in 0..=1u64 {
                        let matrix = vec![vec![m00, m01], vec![m10, m11]];
                        let Ok(d) = BratteliDiagram::stationary(false, vec![1, 1], matrix)
                        else {
                            continue;
                        };
                        let simple = d.is_simple().unwrap().holds;
                        let centre = d.has_trivial_centre().unwrap().holds;
                        assert!(!simple || centre);
                    }
                }
            }
        }
    }
}
