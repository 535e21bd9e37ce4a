//! Weighted oriented graphs and their edge ideals.
//!
//! A graph lives on the ambient vertex set `[n]`; its vertices are exactly
//! the endpoints of its edges, so isolated vertices cannot be represented.
//! Weights are positive integers with weight 1 forced on source vertices.
//! The edge ideal has one generator `x_i x_j^{w(j)}` per directed edge
//! `(i, j)`.

use std::collections::{BTreeMap, BTreeSet};

use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::stanley_reisner_complex;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, VarSet, MAX_VARS};
use crate::homology::{is_acyclic, Field};
use crate::ideal::MonomialIdeal;
use crate::newton::np_membership;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct WeightedOrientedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    /// Weight of every active vertex (defaulted to 1 where unspecified).
    weights: BTreeMap<usize, u32>,
}

/// JSON form: `{"n": 10, "edges": [[1,2],...], "weights": {"7": 4}}`;
/// omitted weights default to 1.
#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    weights: BTreeMap<usize, u32>,
}

impl TryFrom<RawGraph> for WeightedOrientedGraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<WeightedOrientedGraph> {
        WeightedOrientedGraph::new(raw.n, raw.edges, raw.weights)
    }
}

impl From<WeightedOrientedGraph> for RawGraph {
    fn from(g: WeightedOrientedGraph) -> RawGraph {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().copied().collect(),
            // Only nontrivial weights are written back.
            weights: g
                .weights
                .iter()
                .filter(|(_, &w)| w > 1)
                .map(|(&j, &w)| (j, w))
                .collect(),
        }
    }
}

impl WeightedOrientedGraph {
    /// Validates and builds a graph spanning all of `[n]`: every vertex must
    /// touch an edge, the underlying graph must be simple, and sources must
    /// carry weight 1.
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize)>,
        weights: BTreeMap<usize, u32>,
    ) -> Result<WeightedOrientedGraph> {
        Ok(Self::new_spanning(n, edges, weights, false)?.0)
    }

    /// Like [`WeightedOrientedGraph::new`], but rewrites the weight of any
    /// weighted source to 1 instead of rejecting it; the rewritten vertices
    /// are returned alongside the graph.
    pub fn new_normalizing_sources(
        n: usize,
        edges: Vec<(usize, usize)>,
        weights: BTreeMap<usize, u32>,
    ) -> Result<(WeightedOrientedGraph, Vec<usize>)> {
        Self::new_spanning(n, edges, weights, true)
    }

    fn new_spanning(
        n: usize,
        edges: Vec<(usize, usize)>,
        weights: BTreeMap<usize, u32>,
        normalize_sources: bool,
    ) -> Result<(WeightedOrientedGraph, Vec<usize>)> {
        let (graph, normalized) = Self::assemble(n, edges, weights, normalize_sources)?;
        let active = graph.vertex_set();
        for j in 1..=n {
            if !active.contains(j) {
                return Err(Error::GraphInvariant(format!("vertex {j} is isolated")));
            }
        }
        Ok((graph, normalized))
    }

    /// Internal constructor that tolerates inactive ambient vertices; used
    /// for induced subgraphs, which stay in the ambient polynomial ring.
    fn assemble(
        n: usize,
        edges: Vec<(usize, usize)>,
        weights: BTreeMap<usize, u32>,
        normalize_sources: bool,
    ) -> Result<(WeightedOrientedGraph, Vec<usize>)> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n, MAX_VARS));
        }
        let mut edge_set = BTreeSet::new();
        for (i, j) in edges {
            if i == 0 || i > n {
                return Err(Error::VariableOutOfRange(i, n));
            }
            if j == 0 || j > n {
                return Err(Error::VariableOutOfRange(j, n));
            }
            if i == j {
                return Err(Error::GraphInvariant(format!("loop at vertex {i}")));
            }
            if edge_set.contains(&(j, i)) {
                return Err(Error::GraphInvariant(format!(
                    "edge {{{i},{j}}} appears with both orientations"
                )));
            }
            edge_set.insert((i, j));
        }

        let active: BTreeSet<usize> = edge_set
            .iter()
            .flat_map(|&(i, j)| [i, j])
            .collect();
        for (&j, &w) in &weights {
            if !active.contains(&j) {
                return Err(Error::GraphInvariant(format!(
                    "weight given for vertex {j}, which is not in the graph"
                )));
            }
            if w == 0 {
                return Err(Error::GraphInvariant(format!(
                    "weight of vertex {j} must be positive"
                )));
            }
        }

        let mut full_weights = BTreeMap::new();
        let mut normalized = Vec::new();
        for &j in &active {
            let w = weights.get(&j).copied().unwrap_or(1);
            let is_source = !edge_set.iter().any(|&(_, head)| head == j);
            if is_source && w > 1 {
                if normalize_sources {
                    normalized.push(j);
                    full_weights.insert(j, 1);
                } else {
                    return Err(Error::GraphInvariant(format!(
                        "source vertex {j} must have weight 1 (got {w})"
                    )));
                }
            } else {
                full_weights.insert(j, w);
            }
        }

        Ok((
            WeightedOrientedGraph {
                n,
                edges: edge_set,
                weights: full_weights,
            },
            normalized,
        ))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices that occur in an edge.
    pub fn vertex_set(&self) -> VarSet {
        VarSet::from_indices(self.edges.iter().flat_map(|&(i, j)| [i, j]))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_set().len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Weight of an active vertex.
    pub fn weight(&self, j: usize) -> Result<u32> {
        self.weights
            .get(&j)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("vertex {j} is not in the graph")))
    }

    /// `|w|`: the sum of the weights over the vertices.
    pub fn total_weight(&self) -> u64 {
        self.weights.values().map(|&w| w as u64).sum()
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.values().copied().max().unwrap_or(0)
    }

    pub fn in_neighbors(&self, j: usize) -> VarSet {
        VarSet::from_indices(
            self.edges
                .iter()
                .filter(|&&(_, head)| head == j)
                .map(|&(tail, _)| tail),
        )
    }

    pub fn out_neighbors(&self, j: usize) -> VarSet {
        VarSet::from_indices(
            self.edges
                .iter()
                .filter(|&&(tail, _)| tail == j)
                .map(|&(_, head)| head),
        )
    }

    /// Out-neighborhood of a set of vertices.
    pub fn out_neighbors_of_set(&self, set: VarSet) -> VarSet {
        set.iter()
            .fold(VarSet::EMPTY, |acc, j| acc.union(self.out_neighbors(j)))
    }

    pub fn is_source(&self, j: usize) -> bool {
        self.vertex_set().contains(j) && self.in_neighbors(j).is_empty()
    }

    pub fn is_sink(&self, j: usize) -> bool {
        self.vertex_set().contains(j) && self.out_neighbors(j).is_empty()
    }

    pub fn sources(&self) -> VarSet {
        VarSet::from_indices(self.vertex_set().iter().filter(|&j| self.is_source(j)))
    }

    pub fn sinks(&self) -> VarSet {
        VarSet::from_indices(self.vertex_set().iter().filter(|&j| self.is_sink(j)))
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j)) || self.edges.contains(&(j, i))
    }

    /// Independent in the underlying undirected graph.
    pub fn is_independent_set(&self, set: VarSet) -> bool {
        let verts = set.to_vec();
        for (k, &i) in verts.iter().enumerate() {
            for &j in &verts[k + 1..] {
                if self.are_adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Every pair of vertices adjacent.
    pub fn is_complete(&self) -> bool {
        let verts = self.vertex_set().to_vec();
        for (k, &i) in verts.iter().enumerate() {
            for &j in &verts[k + 1..] {
                if !self.are_adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// The edge ideal `I(D,w) = (x_i x_j^{w(j)} | (i,j) in E)`.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let gens = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let mut coords = vec![0u32; self.n];
                coords[i - 1] = 1;
                coords[j - 1] += self.weights[&j];
                Exponent::new(coords)
            })
            .collect();
        MonomialIdeal::new(self.n, gens).expect("edge generators are well formed")
    }

    /// The squarefree edge ideal `I(G)` of the underlying undirected graph.
    pub fn underlying_edge_ideal(&self) -> MonomialIdeal {
        self.edge_ideal().radical()
    }

    /// `I(G \ U)`: the underlying edge ideal of the graph induced away
    /// from `U`.
    fn underlying_edge_ideal_avoiding(&self, banned: VarSet) -> MonomialIdeal {
        let gens = self
            .edges
            .iter()
            .filter(|&&(i, j)| !banned.contains(i) && !banned.contains(j))
            .map(|&(i, j)| {
                Exponent::from_set(self.n, VarSet::from_indices([i, j]))
            })
            .collect();
        MonomialIdeal::new(self.n, gens).expect("edge generators are well formed")
    }

    /// Induced oriented subgraph on `U`, in the same ambient ring, with
    /// weights reset to 1 on vertices that become sources. Vertices of `U`
    /// left without an incident edge are dropped; the second component
    /// reports them.
    pub fn induced_subgraph(&self, u: VarSet) -> Result<(WeightedOrientedGraph, Vec<usize>)> {
        if u.is_empty() {
            return Err(Error::Precondition(
                "induced subgraph needs a nonempty vertex set".into(),
            ));
        }
        let kept_edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(i, j)| u.contains(i) && u.contains(j))
            .copied()
            .collect();
        let kept_vertices: BTreeSet<usize> =
            kept_edges.iter().flat_map(|&(i, j)| [i, j]).collect();
        let dropped: Vec<usize> = u
            .iter()
            .filter(|j| self.vertex_set().contains(*j) && !kept_vertices.contains(j))
            .collect();

        let mut weights = BTreeMap::new();
        for &j in &kept_vertices {
            let becomes_source = !kept_edges.iter().any(|&(_, head)| head == j);
            let w = if becomes_source { 1 } else { self.weights[&j] };
            weights.insert(j, w);
        }
        let (graph, _) = Self::assemble(self.n, kept_edges, weights, false)?;
        Ok((graph, dropped))
    }

    /// Closed form for `sqrt(I(D,w) : x^a)` when `a_j < w(j)` on every
    /// vertex: `I(G \ U) + (x_i | i in U)` with `U` the out-neighborhood of
    /// `supp a`.
    pub fn radical_colon_formula(&self, a: &Exponent) -> Result<MonomialIdeal> {
        a.check_len(self.n)?;
        for j in self.vertex_set().iter() {
            if a.deg(j) >= self.weights[&j] {
                return Err(Error::Precondition(format!(
                    "a_{j} = {} must be below the weight {}",
                    a.deg(j),
                    self.weights[&j]
                )));
            }
        }
        let u = self.out_neighbors_of_set(a.support());
        let vars = MonomialIdeal::variables(self.n, u)?;
        self.underlying_edge_ideal_avoiding(u).sum(&vars)
    }

    fn check_independent_sinks(&self, set: VarSet) -> Result<()> {
        for j in set.iter() {
            if !self.is_sink(j) {
                return Err(Error::Precondition(format!(
                    "vertex {j} is not a sink vertex"
                )));
            }
        }
        if !self.is_independent_set(set) {
            return Err(Error::Precondition(format!(
                "{set} is not an independent set"
            )));
        }
        Ok(())
    }

    /// The capacity `c(W) = sum_{j in W} a_j / w(j)`, exact. `supp a` must
    /// be an independent set of sinks and `W` a subset of it.
    pub fn capacity(&self, a: &Exponent, w_set: VarSet) -> Result<BigRational> {
        a.check_len(self.n)?;
        self.check_independent_sinks(a.support())?;
        if !w_set.is_subset(a.support()) {
            return Err(Error::Precondition(format!(
                "{w_set} is not a subset of supp a"
            )));
        }
        let mut total = BigRational::zero();
        for j in w_set.iter() {
            total += BigRational::new(a.deg(j).into(), self.weights[&j].into());
        }
        Ok(total)
    }

    /// The family of inclusion-minimal `W ⊆ supp a` with `c(W) >= 1`.
    pub fn minimal_capacity_sets(&self, a: &Exponent) -> Result<Vec<CapacitySet>> {
        a.check_len(self.n)?;
        let support = a.support();
        self.check_independent_sinks(support)?;
        let one = BigRational::one();
        let mut family = Vec::new();
        for w_set in support.subsets() {
            let c = self.capacity(a, w_set)?;
            if c < one {
                continue;
            }
            // Capacities strictly grow along supp a, so dropping any single
            // element decides minimality.
            let minimal = w_set.iter().all(|j| {
                let mut smaller = w_set;
                smaller.remove(j);
                self.capacity(a, smaller).unwrap() < one
            });
            if minimal {
                family.push(CapacitySet {
                    vertices: w_set,
                    capacity: c,
                });
            }
        }
        family.sort_by_key(|cs| cs.vertices.to_vec());
        Ok(family)
    }

    /// `n(W)`: the intersection over `j in W` of the in-neighborhood
    /// variable ideals `(x_k | k in N^-(j))`. `W` must be a nonempty set of
    /// sinks.
    pub fn neighbor_intersection_ideal(&self, w_set: VarSet) -> Result<MonomialIdeal> {
        if w_set.is_empty() {
            return Err(Error::Precondition(
                "n(W) needs a nonempty set of sinks".into(),
            ));
        }
        let mut result: Option<MonomialIdeal> = None;
        for j in w_set.iter() {
            if !self.is_sink(j) {
                return Err(Error::Precondition(format!(
                    "vertex {j} is not a sink vertex"
                )));
            }
            let vars = MonomialIdeal::variables(self.n, self.in_neighbors(j))?;
            result = Some(match result {
                None => vars,
                Some(acc) => acc.intersect(&vars)?,
            });
        }
        Ok(result.unwrap())
    }

    /// Closed form for `sqrt(closure(I(D,w)) : x^a)`:
    /// `I(G) + sum over minimal capacity sets of n(W)`. Preconditions:
    /// `supp a` is an independent set of sinks and `a_j < w(j)` everywhere.
    pub fn closure_radical_formula(&self, a: &Exponent) -> Result<MonomialIdeal> {
        a.check_len(self.n)?;
        self.check_independent_sinks(a.support())?;
        for j in self.vertex_set().iter() {
            if a.deg(j) >= self.weights[&j] {
                return Err(Error::Precondition(format!(
                    "a_{j} = {} must be below the weight {}",
                    a.deg(j),
                    self.weights[&j]
                )));
            }
        }
        let mut result = self.underlying_edge_ideal();
        for cs in self.minimal_capacity_sets(a)? {
            result = result.sum(&self.neighbor_intersection_ideal(cs.vertices)?)?;
        }
        Ok(result)
    }

    /// Builds `Δ(I(G) + sum_{W in T} n(W))` for a family `T` of nonempty
    /// subsets of an independent sink set and reports whether it is acyclic
    /// (it always should be).
    pub fn acyclicity_check(&self, family: &[VarSet], field: Field) -> Result<bool> {
        if family.is_empty() {
            return Err(Error::Precondition("the family must be nonempty".into()));
        }
        let mut union = VarSet::EMPTY;
        for &w_set in family {
            if w_set.is_empty() {
                return Err(Error::Precondition(
                    "family members must be nonempty".into(),
                ));
            }
            union = union.union(w_set);
        }
        self.check_independent_sinks(union)?;
        let mut ideal = self.underlying_edge_ideal();
        for &w_set in family {
            ideal = ideal.sum(&self.neighbor_intersection_ideal(w_set)?)?;
        }
        Ok(is_acyclic(&stanley_reisner_complex(&ideal)?, field))
    }

    fn require_complete(&self, min_vertices: usize) -> Result<()> {
        if !self.is_complete() {
            return Err(Error::Precondition(
                "the graph must be a complete oriented graph".into(),
            ));
        }
        if self.vertex_count() < min_vertices {
            return Err(Error::Precondition(format!(
                "need at least {min_vertices} vertices (got {})",
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// Vertices whose removal creates no new source: `j` is admissible iff
    /// it is not the unique in-neighbor of any other vertex.
    pub fn admissible_vertices(&self) -> Vec<usize> {
        self.vertex_set()
            .iter()
            .filter(|&j| {
                !self
                    .vertex_set()
                    .iter()
                    .any(|k| k != j && self.in_neighbors(k) == VarSet::singleton(j))
            })
            .collect()
    }

    /// The smallest admissible vertex of a complete oriented graph on at
    /// least 4 vertices (guaranteed to exist at that size; the cyclic
    /// triangle shows it can fail below it).
    pub fn find_admissible_vertex(&self) -> Result<usize> {
        self.require_complete(4)?;
        self.admissible_vertices()
            .first()
            .copied()
            .ok_or_else(|| Error::Precondition("no admissible vertex found".into()))
    }

    /// A complete oriented graph is of type 1 when it has a source vertex
    /// whose removal still leaves a source.
    pub fn is_type_one(&self) -> Result<bool> {
        self.require_complete(2)?;
        // A complete graph has at most one source.
        let source = match self.sources().iter().next() {
            Some(s) => s,
            None => return Ok(false),
        };
        let rest = self.vertex_set().difference(VarSet::singleton(source));
        if rest.len() < 2 {
            return Ok(false);
        }
        let (sub, _) = self.induced_subgraph(rest)?;
        Ok(!sub.sources().is_empty())
    }

    /// Closed formula for `reg(I(D,w))` on complete oriented graphs:
    /// `|w|` when n = 2, otherwise `|w| - n + 2` for type 1 and
    /// `|w| - n + 1` otherwise.
    ///
    /// Exact when every non-source vertex has weight at least 2. With
    /// weight-1 non-sources the true regularity can be smaller: on the
    /// cyclic triangle with weights (3,3,1) the engine gives 4 while this
    /// formula gives 5.
    pub fn complete_graph_reg(&self) -> Result<u64> {
        self.require_complete(2)?;
        let n = self.vertex_count() as u64;
        let total = self.total_weight();
        if n == 2 {
            return Ok(total);
        }
        if self.is_type_one()? {
            Ok(total - n + 2)
        } else {
            Ok(total - n + 1)
        }
    }

    /// Closed formula for `reg(closure(I(D,w)))` on complete oriented
    /// graphs: `max w + 1` (which equals `|w|` when n = 2).
    pub fn complete_closure_reg(&self) -> Result<u64> {
        self.require_complete(2)?;
        Ok(self.max_weight() as u64 + 1)
    }

    /// Membership test backing the sufficient condition on complete graphs:
    /// whenever `a_j <= w(j)` everywhere, `|a| >= max w + 1`, and
    /// `|supp a| >= 3`, the monomial must lie in the closure. Returns the
    /// raw Newton-polyhedron answer either way.
    pub fn membership_sufficient_condition(&self, a: &Exponent) -> Result<bool> {
        self.require_complete(3)?;
        a.check_len(self.n)?;
        let (member, _) = np_membership(&self.edge_ideal(), a)?;
        Ok(member)
    }

    /// Do the three hypotheses of the sufficient condition hold for `a`?
    pub fn sufficient_condition_hypotheses(&self, a: &Exponent) -> bool {
        let within = self
            .vertex_set()
            .iter()
            .all(|j| a.deg(j) <= self.weights[&j])
            && a.support().is_subset(self.vertex_set());
        within
            && a.total_degree() > self.max_weight() as u64
            && a.support().len() >= 3
    }
}

impl std::fmt::Debug for WeightedOrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "WeightedOrientedGraph(n={}, edges={:?}, weights={:?})",
            self.n, self.edges, self.weights
        )
    }
}

/// One member of the minimal capacity family: the sink subset and its exact
/// capacity.
#[derive(Clone, Debug, PartialEq)]
pub struct CapacitySet {
    pub vertices: VarSet,
    pub capacity: BigRational,
}
