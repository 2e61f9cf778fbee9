//! Hypergraph model: named vertices, named edges, components, and the
//! derived constructions (reduction, dual, induced subhypergraph,
//! intersection closure, unit-edge augmentation).

use crate::error::{Error, Result};
use crate::set::VertexSet;
use std::collections::{BTreeMap, HashMap, HashSet};

/// A hypergraph with named vertices and named, non-empty edges.
///
/// Vertices are indexed densely in first-appearance order; every vertex
/// occurs in at least one edge. Edge names are unique; duplicate edge *sets*
/// under different names are allowed (use [`Hypergraph::reduce`] to drop
/// them).
#[derive(Clone, Debug)]
pub struct Hypergraph {
    vertex_names: Vec<String>,
    vertex_ids: HashMap<String, usize>,
    edge_names: Vec<String>,
    edge_ids: HashMap<String, usize>,
    edges: Vec<VertexSet>,
}

/// One maximal `[separator]`-connected set of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub separator: VertexSet,
    pub members: VertexSet,
}

impl Hypergraph {
    /// Builds a hypergraph from named edges given as vertex-name lists.
    /// Vertex order is first appearance; repeated vertices within an edge
    /// collapse.
    pub fn from_edge_list<S: AsRef<str>>(edges: &[(S, Vec<S>)]) -> Result<Self> {
        let mut vertex_names: Vec<String> = Vec::new();
        let mut vertex_ids: HashMap<String, usize> = HashMap::new();
        for (_, vs) in edges {
            for v in vs {
                let v = v.as_ref();
                if !vertex_ids.contains_key(v) {
                    vertex_ids.insert(v.to_string(), vertex_names.len());
                    vertex_names.push(v.to_string());
                }
            }
        }
        let n = vertex_names.len();
        let mut edge_names = Vec::new();
        let mut edge_ids = HashMap::new();
        let mut sets = Vec::new();
        for (name, vs) in edges {
            let name = name.as_ref();
            if vs.is_empty() {
                return Err(Error::Precondition(format!("empty edge {name:?}")));
            }
            if edge_ids
                .insert(name.to_string(), edge_names.len())
                .is_some()
            {
                return Err(Error::Precondition(format!("duplicate edge name {name:?}")));
            }
            edge_names.push(name.to_string());
            sets.push(VertexSet::from_indices(
                n,
                vs.iter().map(|v| vertex_ids[v.as_ref()]),
            ));
        }
        Ok(Hypergraph {
            vertex_names,
            vertex_ids,
            edge_names,
            edge_ids,
            edges: sets,
        })
    }

    /// Internal constructor from pre-resolved index sets.
    pub(crate) fn from_parts(vertex_names: Vec<String>, edges: Vec<(String, VertexSet)>) -> Self {
        let vertex_ids = vertex_names
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let mut edge_names = Vec::new();
        let mut edge_ids = HashMap::new();
        let mut sets = Vec::new();
        for (name, set) in edges {
            edge_ids.insert(name.clone(), edge_names.len());
            edge_names.push(name);
            sets.push(set);
        }
        Hypergraph {
            vertex_names,
            vertex_ids,
            edge_names,
            edge_ids,
            edges: sets,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.vertex_ids.get(name).copied()
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edge_names[e]
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edge_ids.get(name).copied()
    }

    pub fn edge(&self, e: usize) -> &VertexSet {
        &self.edges[e]
    }

    pub fn edge_sets(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n_vertices())
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::empty(self.n_vertices())
    }

    /// Resolves vertex names into an index set.
    pub fn vertex_set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        let mut s = self.empty_vertex_set();
        for n in names {
            let v = self
                .vertex_id(n.as_ref())
                .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn vertex_set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.vertex_names[v].clone()).collect()
    }

    /// Edge ids incident to vertex `v`.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, e)| e.contains(v))
            .map(|(i, _)| i)
    }

    /// Maximal `[sep]`-connected components of `V(H) \ sep`, ordered by
    /// smallest member. Union-find over the edge-induced adjacency after
    /// deleting `sep`.
    pub fn components(&self, sep: &VertexSet) -> Result<Vec<Component>> {
        if sep.universe() != self.n_vertices() {
            return Err(Error::Precondition(
                "separator is not a vertex set of this hypergraph".into(),
            ));
        }
        let n = self.n_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for e in &self.edges {
            let rest: Vec<usize> = e.iter().filter(|v| !sep.contains(*v)).collect();
            for w in rest.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, VertexSet> = BTreeMap::new();
        for v in 0..n {
            if sep.contains(v) {
                continue;
            }
            let r = find(&mut parent, v);
            groups
                .entry(r)
                .or_insert_with(|| self.empty_vertex_set())
                .insert(v);
        }
        let mut comps: Vec<Component> = groups
            .into_values()
            .map(|members| Component {
                separator: sep.clone(),
                members,
            })
            .collect();
        comps.sort_by_key(|c| c.members.first());
        Ok(comps)
    }

    /// Subhypergraph induced by `keep`: edges become `e ∩ keep` (non-empty
    /// only). Proper subedges get provenance-tagged names (`"e|sub"`); with
    /// `dedup` only the first edge per identical set is retained.
    pub fn induced(&self, keep: &VertexSet, dedup: bool) -> Result<Hypergraph> {
        if keep.is_empty() {
            return Err(Error::Precondition("induced on empty vertex set".into()));
        }
        let kept: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let vertex_names: Vec<String> =
            kept.iter().map(|&v| self.vertex_names[v].clone()).collect();
        let mut edges: Vec<(String, VertexSet)> = Vec::new();
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for (i, e) in self.edges.iter().enumerate() {
            let inter = e.intersection(keep);
            if inter.is_empty() {
                continue;
            }
            let set = VertexSet::from_indices(kept.len(), inter.iter().map(|v| new_id[v]));
            if dedup && !seen.insert(set.clone()) {
                continue;
            }
            let name = if &inter == e {
                self.edge_names[i].clone()
            } else {
                format!("{}|sub", self.edge_names[i])
            };
            edges.push((name, set));
        }
        Ok(Hypergraph::from_parts(vertex_names, edges))
    }

    /// Fuses vertices with identical incident-edge sets and drops duplicate
    /// edge sets (keeping the first of each), recording both mappings.
    pub fn reduce(&self) -> ReducedHypergraph {
        // Vertex fusion: group by incidence signature.
        let mut sig_to_rep: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut vertex_fusion: BTreeMap<String, String> = BTreeMap::new();
        let mut keep_vertices: Vec<usize> = Vec::new();
        for v in 0..self.n_vertices() {
            let sig: Vec<usize> = self.incident_edges(v).collect();
            match sig_to_rep.get(&sig) {
                Some(&rep) => {
                    vertex_fusion
                        .insert(self.vertex_names[v].clone(), self.vertex_names[rep].clone());
                }
                None => {
                    sig_to_rep.insert(sig, v);
                    keep_vertices.push(v);
                    vertex_fusion
                        .insert(self.vertex_names[v].clone(), self.vertex_names[v].clone());
                }
            }
        }
        let mut new_id = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in keep_vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let vertex_names: Vec<String> = keep_vertices
            .iter()
            .map(|&v| self.vertex_names[v].clone())
            .collect();
        // Edge dedup after fusion.
        let mut seen: HashMap<VertexSet, usize> = HashMap::new();
        let mut edges: Vec<(String, VertexSet)> = Vec::new();
        let mut edge_dedup: BTreeMap<String, String> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            let set = VertexSet::from_indices(
                keep_vertices.len(),
                e.iter()
                    .filter(|&v| new_id[v] != usize::MAX)
                    .map(|v| new_id[v]),
            );
            match seen.get(&set) {
                Some(&first) => {
                    edge_dedup.insert(self.edge_names[i].clone(), self.edge_names[first].clone());
                }
                None => {
                    seen.insert(set.clone(), i);
                    edge_dedup.insert(self.edge_names[i].clone(), self.edge_names[i].clone());
                    edges.push((self.edge_names[i].clone(), set));
                }
            }
        }
        ReducedHypergraph {
            hypergraph: Hypergraph::from_parts(vertex_names, edges),
            vertex_fusion,
            edge_dedup,
        }
    }

    /// True iff no two vertices share an incidence signature and no two
    /// edges share a vertex set.
    pub fn is_reduced(&self) -> bool {
        let mut sigs = HashSet::new();
        for v in 0..self.n_vertices() {
            if !sigs.insert(self.incident_edges(v).collect::<Vec<_>>()) {
                return false;
            }
        }
        let mut sets = HashSet::new();
        self.edges.iter().all(|e| sets.insert(e.clone()))
    }

    /// Dual hypergraph: one vertex per edge of `self`, one edge per vertex
    /// `v` holding exactly the edges incident to `v`. Requires the input to
    /// be reduced, otherwise `dual(dual(H))` would not be isomorphic to `H`.
    pub fn dual(&self) -> Result<Hypergraph> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(
                "dual needs a reduced hypergraph (fuse twin vertices, drop duplicate edges)".into(),
            ));
        }
        let vertex_names = self.edge_names.clone();
        let m = vertex_names.len();
        let edges: Vec<(String, VertexSet)> = (0..self.n_vertices())
            .map(|v| {
                (
                    self.vertex_names[v].clone(),
                    VertexSet::from_indices(m, self.incident_edges(v)),
                )
            })
            .collect();
        Ok(Hypergraph::from_parts(vertex_names, edges))
    }

    /// All distinct non-empty intersections of edge subsets, i.e. the edge
    /// sets of `H^∩` (originals included), each with the number of edges of
    /// `self` containing it. Fixpoint under pairwise intersection.
    pub(crate) fn intersection_sets(&self) -> Vec<(VertexSet, usize)> {
        let mut known: HashSet<VertexSet> = HashSet::new();
        let mut queue: Vec<VertexSet> = Vec::new();
        for e in &self.edges {
            if known.insert(e.clone()) {
                queue.push(e.clone());
            }
        }
        let mut idx = 0;
        while idx < queue.len() {
            let cur = queue[idx].clone();
            idx += 1;
            for e in &self.edges {
                let inter = cur.intersection(e);
                if !inter.is_empty() && known.insert(inter.clone()) {
                    queue.push(inter);
                }
            }
        }
        queue
            .into_iter()
            .map(|s| {
                let cnt = self.edges.iter().filter(|e| s.is_subset(e)).count();
                (s, cnt)
            })
            .collect()
    }

    /// `H^∩`: closure of the edge set under pairwise intersection (to the
    /// fixpoint), empty intersections dropped, duplicate sets removed.
    ///
    /// The caller asserts `c`-miwidth(H) <= `bound`; this is checked and a
    /// violating edge tuple is reported otherwise. The closure then
    /// satisfies `2^c`-miwidth(H^∩) <= `bound`.
    pub fn intersection_closure(&self, c: usize, bound: usize) -> Result<Hypergraph> {
        let sets = self.intersection_sets();
        // Precondition check: some intersection of >= c distinct edges bigger
        // than `bound` would witness c-miwidth(H) > bound.
        for (s, cnt) in &sets {
            if *cnt >= c && s.len() > bound {
                let edges: Vec<String> = self
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| s.is_subset(e))
                    .take(c)
                    .map(|(i, _)| self.edge_names[i].clone())
                    .collect();
                let size = edges
                    .iter()
                    .map(|n| self.edges[self.edge_ids[n]].clone())
                    .reduce(|a, b| a.intersection(&b))
                    .map_or(0, |s| s.len());
                return Err(Error::MiwidthExceeded { edges, size, bound });
            }
        }
        Ok(self.closure_hypergraph(sets))
    }

    /// The closure as a hypergraph regardless of any miwidth precondition.
    pub fn intersection_closure_unchecked(&self) -> Hypergraph {
        let sets = self.intersection_sets();
        self.closure_hypergraph(sets)
    }

    fn closure_hypergraph(&self, sets: Vec<(VertexSet, usize)>) -> Hypergraph {
        let original: HashMap<&VertexSet, usize> =
            self.edges.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut edges: Vec<(String, VertexSet)> = Vec::new();
        let mut counter = 0usize;
        let mut ordered: Vec<VertexSet> = sets.into_iter().map(|(s, _)| s).collect();
        ordered.sort_by(|a, b| {
            let ka = original.get(a).copied().unwrap_or(usize::MAX);
            let kb = original.get(b).copied().unwrap_or(usize::MAX);
            ka.cmp(&kb)
                .then_with(|| b.len().cmp(&a.len()))
                .then_with(|| a.cmp(b))
        });
        for s in ordered {
            let name = match original.get(&s) {
                Some(&i) => self.edge_names[i].clone(),
                None => {
                    counter += 1;
                    let mut name = format!("cap{counter}");
                    while self.edge_ids.contains_key(&name) {
                        name.push('_');
                    }
                    name
                }
            };
            edges.push((name, s));
        }
        Hypergraph::from_parts(self.vertex_names.clone(), edges)
    }

    /// `H¹`: adds a unit edge per vertex, skipping vertices that already
    /// have one.
    pub fn add_unit_edges(&self) -> Hypergraph {
        let covered: HashSet<usize> = self
            .edges
            .iter()
            .filter(|e| e.len() == 1)
            .map(|e| e.first().unwrap())
            .collect();
        let mut edges: Vec<(String, VertexSet)> = self
            .edge_names
            .iter()
            .cloned()
            .zip(self.edges.iter().cloned())
            .collect();
        for v in 0..self.n_vertices() {
            if covered.contains(&v) {
                continue;
            }
            let mut name = format!("u_{}", self.vertex_names[v]);
            while self.edge_ids.contains_key(&name) {
                name.push('_');
            }
            edges.push((name, VertexSet::singleton(self.n_vertices(), v)));
        }
        Hypergraph::from_parts(self.vertex_names.clone(), edges)
    }

    /// True iff `s` is a clique in the primal graph.
    pub fn is_primal_clique(&self, s: &VertexSet) -> bool {
        let vs: Vec<usize> = s.iter().collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if !self.edges.iter().any(|e| e.contains(a) && e.contains(b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive isomorphism check (vertex relabeling) for small
    /// hypergraphs; used by tests for `dual(dual(H)) ≅ H`.
    pub fn isomorphic_to(&self, other: &Hypergraph) -> bool {
        if self.n_vertices() != other.n_vertices() || self.n_edges() != other.n_edges() {
            return false;
        }
        let n = self.n_vertices();
        assert!(n <= 8, "exhaustive isomorphism check capped at 8 vertices");
        let mine: Vec<VertexSet> = {
            let mut v = self.edges.clone();
            v.sort();
            v
        };
        for perm in permutations(n) {
            let mut mapped: Vec<VertexSet> = other
                .edges
                .iter()
                .map(|e| VertexSet::from_indices(n, e.iter().map(|v| perm[v])))
                .collect();
            mapped.sort();
            if mapped == mine {
                return true;
            }
        }
        false
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// A hypergraph together with the fusion/dedup mappings that produced it.
#[derive(Clone, Debug)]
pub struct ReducedHypergraph {
    pub hypergraph: Hypergraph,
    /// original vertex name -> representative vertex name
    pub vertex_fusion: BTreeMap<String, String>,
    /// original edge name -> representative edge name
    pub edge_dedup: BTreeMap<String, String>,
}

impl ReducedHypergraph {
    pub fn dual(&self) -> Result<Hypergraph> {
        self.hypergraph.dual()
    }
}
