//! Candidate-bag generation: ∪∩-trees, GHD bag families under bounded
//! (multi-)intersection, and FHD bag families under bounded degree,
//! intersection, rank, or the multi-intersection approximation.
//!
//! All generators are exponential in their parameters by nature; a hard
//! element budget turns blowup into a clean error. Term-count bounds are
//! saturated at |V(H)| since a union of more terms than vertices never
//! produces a new set.

use crate::covers::{fractional_cover, EdgeWeighting};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::metrics;
use crate::set::{EdgeSet, VertexSet};
use crate::{rat_int, Rat};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Node-labelled tree produced by the union-intersection expansion of
/// an edge against a sequence of edge sets.
#[derive(Clone, Debug)]
pub struct CupCapTree {
    pub nodes: Vec<CupCapNode>,
    pub root: usize,
}

#[derive(Clone, Debug)]
pub struct CupCapNode {
    /// Edges on the path from the root, as edge ids.
    pub label: EdgeSet,
    pub depth: usize,
    pub children: Vec<usize>,
    /// A node hit by an empty Q is a dead branch: its intersection with
    /// the empty union vanishes, so it stops counting as a leaf.
    pub dead: bool,
}

impl CupCapTree {
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes[i].children.is_empty() && !self.nodes[i].dead)
            .collect()
    }

    /// Leaves at depth < c.
    pub fn small_leaves(&self, c: usize) -> Vec<usize> {
        self.leaves()
            .into_iter()
            .filter(|&i| self.nodes[i].depth < c)
            .collect()
    }

    /// Leaves at depth >= c.
    pub fn full_leaves(&self, c: usize) -> Vec<usize> {
        self.leaves()
            .into_iter()
            .filter(|&i| self.nodes[i].depth >= c)
            .collect()
    }

    /// Intersection of the label edges of one node.
    pub fn label_intersection(&self, h: &Hypergraph, node: usize) -> VertexSet {
        self.nodes[node]
            .label
            .iter()
            .map(|e| h.edge(e).clone())
            .reduce(|a, b| a.intersection(&b))
            .unwrap_or_else(|| h.empty_vertex_set())
    }

    /// Union over leaves of the label intersections; equals
    /// e ∩ ⋂_j ⋃ Q_j.
    pub fn evaluate(&self, h: &Hypergraph) -> VertexSet {
        let mut out = h.empty_vertex_set();
        for leaf in self.leaves() {
            out.union_with(&self.label_intersection(h, leaf));
        }
        out
    }
}

/// Builds the ∪∩-tree of `edge, qs[0], ..., qs[l-1]`: in round j every
/// leaf whose label misses Q_j entirely spawns one child per member of
/// Q_j.
pub fn cupcap_tree(h: &Hypergraph, edge: usize, qs: &[Vec<usize>]) -> CupCapTree {
    let m = h.n_edges();
    let mut tree = CupCapTree {
        nodes: vec![CupCapNode {
            label: EdgeSet::from_indices(m, [edge]),
            depth: 0,
            children: Vec::new(),
            dead: false,
        }],
        root: 0,
    };
    for q in qs {
        let q_set = EdgeSet::from_indices(m, q.iter().copied());
        let leaves = tree.leaves();
        for p in leaves {
            if tree.nodes[p].label.intersects(&q_set) {
                continue;
            }
            if q.is_empty() {
                tree.nodes[p].dead = true;
                continue;
            }
            for &e in q {
                let mut label = tree.nodes[p].label.clone();
                label.insert(e);
                let idx = tree.nodes.len();
                let depth = tree.nodes[p].depth + 1;
                tree.nodes.push(CupCapNode {
                    label,
                    depth,
                    children: Vec::new(),
                    dead: false,
                });
                tree.nodes[p].children.push(idx);
            }
        }
    }
    tree
}

/// A finite family of candidate bags with the provenance of its generator.
#[derive(Clone, Debug)]
pub struct CandidateBagSet {
    pub bags: Vec<VertexSet>,
    /// ρ* certificates per bag, retained by the fractional generators.
    pub covers: Option<Vec<(Rat, EdgeWeighting)>>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct Provenance {
    pub generator: String,
    pub params: BTreeMap<String, String>,
    /// Size of the subedge family the bags were assembled from, when the
    /// generator uses one.
    pub sub_count: Option<usize>,
    pub bag_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GhdVariant {
    CoarseBip,
    FineBip,
    Bmip,
}

impl GhdVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            GhdVariant::CoarseBip => "coarse-bip",
            GhdVariant::FineBip => "fine-bip",
            GhdVariant::Bmip => "bmip",
        }
    }
}

/// Accumulates distinct sets under a budget.
struct Dedup {
    seen: HashSet<VertexSet>,
    budget: usize,
    what: &'static str,
}

impl Dedup {
    fn new(budget: usize, what: &'static str) -> Self {
        Dedup {
            seen: HashSet::new(),
            budget,
            what,
        }
    }

    fn insert(&mut self, s: VertexSet) -> Result<bool> {
        if self.seen.contains(&s) {
            return Ok(false);
        }
        if self.seen.len() >= self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                what: self.what.into(),
            });
        }
        self.seen.insert(s);
        Ok(true)
    }

    fn into_sorted(self) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = self.seen.into_iter().collect();
        v.sort();
        v
    }
}

/// All distinct unions of 1..=max_terms members of `terms` (plus the empty
/// union when `with_empty`), level-bounded breadth-first with dedup.
fn distinct_unions(
    universe: usize,
    terms: &[VertexSet],
    max_terms: usize,
    with_empty: bool,
    dedup: &mut Dedup,
) -> Result<Vec<VertexSet>> {
    let empty = VertexSet::empty(universe);
    let mut all: HashSet<VertexSet> = HashSet::new();
    if with_empty {
        all.insert(empty.clone());
    }
    let mut frontier: Vec<VertexSet> = vec![empty];
    let mut frontier_seen: HashSet<VertexSet> = frontier.iter().cloned().collect();
    for _level in 0..max_terms {
        let mut next = Vec::new();
        for u in &frontier {
            for t in terms {
                let joined = u.union(t);
                if frontier_seen.insert(joined.clone()) {
                    if !joined.is_empty() {
                        all.insert(joined.clone());
                    }
                    if all.len() > dedup.budget {
                        return Err(Error::BudgetExceeded {
                            budget: dedup.budget,
                            what: dedup.what.into(),
                        });
                    }
                    next.push(joined);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut v: Vec<VertexSet> = all.into_iter().collect();
    v.sort();
    Ok(v)
}

/// Saturates a term count of the form base^exp at the number of vertices.
fn saturating_terms(base: u64, exp: u64, n_vertices: usize) -> usize {
    let cap = BigInt::from(n_vertices);
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
        if acc >= cap {
            return n_vertices;
        }
    }
    acc.to_usize().unwrap_or(n_vertices).min(n_vertices)
}

/// Candidate bags for GHD checking: unions of at most k members of a
/// subedge family Sub, whose shape depends on the variant.
pub fn ghd_candidate_bags(
    h: &Hypergraph,
    k: usize,
    c: usize,
    i: usize,
    variant: GhdVariant,
    budget: usize,
) -> Result<CandidateBagSet> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let report = metrics::structural_metrics(h, c.max(2))?;
    match variant {
        GhdVariant::CoarseBip | GhdVariant::FineBip => {
            if report.iwidth > i {
                return Err(Error::Precondition(format!(
                    "intersection width {} exceeds the supplied bound {}",
                    report.iwidth, i
                )));
            }
        }
        GhdVariant::Bmip => {
            if c < 2 {
                return Err(Error::Precondition("bmip variant needs c >= 2".into()));
            }
            if report.miwidth[&c] > i {
                return Err(Error::Precondition(format!(
                    "{}-multi-intersection width {} exceeds the supplied bound {}",
                    c, report.miwidth[&c], i
                )));
            }
        }
    }
    let mut sub = Dedup::new(budget, "enumerating the subedge family");
    for e in h.edge_sets() {
        sub.insert(e.clone())?;
    }
    match variant {
        GhdVariant::CoarseBip => {
            // all subedges of size <= k*i
            let limit = k * i;
            for e in h.edge_sets() {
                subsets_up_to(e, limit, &mut sub)?;
            }
        }
        GhdVariant::FineBip => {
            // subsets of e ∩ (union of <= k other edges)
            let m = h.n_edges();
            for (ei, e) in h.edge_sets().iter().enumerate() {
                let others: Vec<usize> = (0..m).filter(|&j| j != ei).collect();
                let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
                for depth in 1..=k {
                    let mut level = Vec::new();
                    combinations(&others, depth, &mut |pick| {
                        level.push(pick.to_vec());
                    });
                    combos.extend(level);
                }
                let mut seen_inters: HashSet<VertexSet> = HashSet::new();
                for combo in combos.iter().filter(|c| !c.is_empty()) {
                    let mut union = h.empty_vertex_set();
                    for &j in combo {
                        union.union_with(h.edge(j));
                    }
                    let inter = e.intersection(&union);
                    if seen_inters.insert(inter.clone()) {
                        subsets_up_to(&inter, inter.len(), &mut sub)?;
                    }
                }
            }
        }
        GhdVariant::Bmip => {
            bmip_sub(h, k, c, &mut sub)?;
        }
    }
    let sub_family = sub.into_sorted();
    let sub_count = sub_family.len();
    let mut dedup = Dedup::new(budget, "assembling candidate bags");
    let bags = distinct_unions(h.n_vertices(), &sub_family, k, false, &mut dedup)?;
    let mut params = BTreeMap::new();
    params.insert("k".into(), k.to_string());
    params.insert("i".into(), i.to_string());
    if variant == GhdVariant::Bmip {
        params.insert("c".into(), c.to_string());
    }
    Ok(CandidateBagSet {
        provenance: bag_count_provenance(variant.as_str(), params, Some(sub_count), &bags),
        bags,
        covers: None,
    })
}

fn bag_count_provenance(
    generator: &str,
    params: BTreeMap<String, String>,
    sub_count: Option<usize>,
    bags: &[VertexSet],
) -> Provenance {
    Provenance {
        generator: generator.to_string(),
        params,
        sub_count,
        bag_count: bags.len(),
    }
}

/// The Sub family for the multi-intersection variant: unions of up to
/// k^(c-1) intersections of <= c edges, together with subsets of unions of
/// up to k^c exactly-c-wise intersections, all confined to a single edge.
fn bmip_sub(h: &Hypergraph, k: usize, c: usize, sub: &mut Dedup) -> Result<()> {
    let m = h.n_edges();
    let n = h.n_vertices();
    // Intersections of 1..=c distinct edges (the terms of the
    // (k^{c-1}, c)-sets) and of exactly c distinct edges (the C bases).
    let mut inter_terms: BTreeSet<VertexSet> = BTreeSet::new();
    let mut c_bases: BTreeSet<VertexSet> = BTreeSet::new();
    let ids: Vec<usize> = (0..m).collect();
    for depth in 1..=c {
        combinations(&ids, depth, &mut |pick| {
            let inter = pick
                .iter()
                .map(|&e| h.edge(e).clone())
                .reduce(|a, b| a.intersection(&b))
                .unwrap();
            if !inter.is_empty() {
                inter_terms.insert(inter.clone());
                if depth == c {
                    c_bases.insert(inter);
                }
            }
        });
    }
    let inter_terms: Vec<VertexSet> = inter_terms.into_iter().collect();
    let c_bases: Vec<VertexSet> = c_bases.into_iter().collect();
    let q_i = saturating_terms(k as u64, (c - 1) as u64, n);
    let q_c = saturating_terms(k as u64, c as u64, n);
    for e in h.edge_sets() {
        let terms_in_e: Vec<VertexSet> = inter_terms
            .iter()
            .filter(|t| t.is_subset(e))
            .cloned()
            .collect();
        let mut local = Dedup::new(sub.budget, sub.what);
        let i_parts = distinct_unions(n, &terms_in_e, q_i, true, &mut local)?;
        let bases_in_e: Vec<VertexSet> = c_bases
            .iter()
            .map(|b| b.intersection(e))
            .filter(|b| !b.is_empty())
            .collect();
        let mut local2 = Dedup::new(sub.budget, sub.what);
        let c_unions = distinct_unions(n, &bases_in_e, q_c, true, &mut local2)?;
        // Only maximal C-unions matter: subsets of smaller unions are
        // subsets of a maximal one.
        let maximal: Vec<&VertexSet> = c_unions
            .iter()
            .filter(|u| !c_unions.iter().any(|v| *u != v && u.is_subset(v)))
            .collect();
        for i_part in &i_parts {
            for u in &maximal {
                for s in u.subsets() {
                    let cand = i_part.union(&s);
                    if !cand.is_empty() {
                        sub.insert(cand)?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn subsets_up_to(e: &VertexSet, limit: usize, dedup: &mut Dedup) -> Result<()> {
    let members: Vec<usize> = e.iter().collect();
    let universe = e.universe();
    fn descend(
        members: &[usize],
        from: usize,
        left: usize,
        current: &mut Vec<usize>,
        universe: usize,
        dedup: &mut Dedup,
    ) -> Result<()> {
        if !current.is_empty() {
            dedup.insert(VertexSet::from_indices(universe, current.iter().copied()))?;
        }
        if left == 0 {
            return Ok(());
        }
        for idx in from..members.len() {
            current.push(members[idx]);
            descend(members, idx + 1, left - 1, current, universe, dedup)?;
            current.pop();
        }
        Ok(())
    }
    descend(
        &members,
        0,
        limit.min(members.len()),
        &mut Vec::new(),
        universe,
        dedup,
    )
}

fn combinations<T: Copy>(items: &[T], depth: usize, f: &mut impl FnMut(&[T])) {
    fn descend<T: Copy>(
        items: &[T],
        from: usize,
        left: usize,
        pick: &mut Vec<T>,
        f: &mut impl FnMut(&[T]),
    ) {
        if left == 0 {
            f(pick);
            return;
        }
        if items.len() - from < left {
            return;
        }
        for i in from..items.len() {
            pick.push(items[i]);
            descend(items, i + 1, left - 1, pick, f);
            pick.pop();
        }
    }
    descend(items, 0, depth, &mut Vec::new(), f);
}

#[derive(Clone, Debug)]
pub enum FhdMode {
    /// Bounded degree d: unions of intersection-closure edges.
    Bdp { d: usize },
    /// Bounded intersection: unions of <= ceil(k) edges plus a caller-chosen
    /// number of single vertices.
    Bip { i: usize, c_frac: usize },
    /// Bounded rank r: every vertex set of size <= ceil(r k).
    Rank { r: usize },
    /// Multi-intersection approximation at factor (1+eps).
    BmipApprox { c: usize, i: usize, eps: Rat },
}

impl FhdMode {
    pub fn name(&self) -> &'static str {
        match self {
            FhdMode::Bdp { .. } => "bdp",
            FhdMode::Bip { .. } => "bip",
            FhdMode::Rank { .. } => "rank",
            FhdMode::BmipApprox { .. } => "bmip-approx",
        }
    }
}

/// Candidate bags for FHD checking. Bags live in the vertex universe of the
/// input hypergraph; closure/unit preprocessing happens internally and only
/// influences which bags come out. Every bag carries its exact ρ*
/// certificate computed against the input hypergraph.
pub fn fhd_candidate_bags(
    h: &Hypergraph,
    k: &Rat,
    mode: &FhdMode,
    budget: usize,
) -> Result<CandidateBagSet> {
    if *k < Rat::one() {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let n = h.n_vertices();
    let threshold;
    let mut params: BTreeMap<String, String> = BTreeMap::new();
    params.insert("k".into(), crate::format_rat(k));
    let mut dedup = Dedup::new(budget, "assembling candidate bags");
    let candidates: Vec<VertexSet> = match mode {
        FhdMode::Bdp { d } => {
            threshold = k.clone();
            let report = metrics::structural_metrics(h, 2)?;
            if report.degree > *d {
                return Err(Error::Precondition(format!(
                    "degree {} exceeds the supplied bound {}",
                    report.degree, d
                )));
            }
            params.insert("d".into(), d.to_string());
            let closed = h.intersection_closure_unchecked();
            let kd = (k.clone() * rat_int(*d as i64)).ceil().to_integer();
            let q = saturating_terms(2, kd.to_u64().unwrap_or(64), n);
            params.insert("q".into(), q.to_string());
            distinct_unions(n, closed.edge_sets(), q, false, &mut dedup)?
        }
        FhdMode::Bip { i, c_frac } => {
            threshold = k.clone();
            let report = metrics::structural_metrics(h, 2)?;
            if report.iwidth > *i {
                return Err(Error::Precondition(format!(
                    "intersection width {} exceeds the supplied bound {}",
                    report.iwidth, i
                )));
            }
            params.insert("i".into(), i.to_string());
            params.insert("c_frac".into(), c_frac.to_string());
            let k_int: usize = k.ceil().to_integer().to_usize().unwrap_or(n);
            let mut local = Dedup::new(budget, "enumerating edge unions");
            let edge_unions = distinct_unions(n, h.edge_sets(), k_int.min(n), true, &mut local)?;
            extend_with_vertices(n, &edge_unions, *c_frac, &mut dedup)?
        }
        FhdMode::Rank { r } => {
            threshold = k.clone();
            let report = metrics::structural_metrics(h, 2)?;
            if report.rank > *r {
                return Err(Error::Precondition(format!(
                    "rank {} exceeds the supplied bound {}",
                    report.rank, r
                )));
            }
            params.insert("r".into(), r.to_string());
            let limit: usize = (k.clone() * rat_int(*r as i64))
                .ceil()
                .to_integer()
                .to_usize()
                .unwrap_or(n)
                .min(n);
            subsets_up_to(&h.all_vertices(), limit, &mut dedup)?;
            dedup.into_sorted()
        }
        FhdMode::BmipApprox { c, i, eps } => {
            if eps <= &Rat::zero() || eps > &Rat::one() {
                return Err(Error::Precondition("eps must lie in (0, 1]".into()));
            }
            threshold = k.clone() * (Rat::one() + eps.clone());
            let report = metrics::structural_metrics(h, (*c).max(2))?;
            if report.miwidth[c] > *i {
                return Err(Error::Precondition(format!(
                    "{}-multi-intersection width {} exceeds the supplied bound {}",
                    c, report.miwidth[c], i
                )));
            }
            params.insert("c".into(), c.to_string());
            params.insert("i".into(), i.to_string());
            params.insert("eps".into(), crate::format_rat(eps));
            // heavy-part terms: unions of closure edges, 2^ceil(4ck/eps) of
            // them; light part: at most ceil(i (4k/eps)^c) single vertices.
            let closed = h.intersection_closure_unchecked();
            let four_ck_over_eps = (rat_int(4 * *c as i64) * k.clone() / eps.clone())
                .ceil()
                .to_integer();
            let t1 = saturating_terms(2, four_ck_over_eps.to_u64().unwrap_or(64), n);
            let ratio = rat_int(4) * k.clone() / eps.clone();
            let mut pow = Rat::one();
            for _ in 0..*c {
                pow *= ratio.clone();
            }
            let t2_big = (rat_int(*i as i64) * pow).ceil().to_integer();
            let t2 = t2_big.to_usize().unwrap_or(n).min(n);
            params.insert("q_heavy".into(), t1.to_string());
            params.insert("q_light".into(), t2.to_string());
            let mut local = Dedup::new(budget, "enumerating closure-edge unions");
            let heavy_unions = distinct_unions(n, closed.edge_sets(), t1, true, &mut local)?;
            extend_with_vertices(n, &heavy_unions, t2, &mut dedup)?
        }
    };
    // Keep bags whose fractional cover number stays under the threshold;
    // retain the certificates.
    let mut bags = Vec::new();
    let mut covers = Vec::new();
    for bag in candidates {
        if bag.is_empty() {
            continue;
        }
        let (rho, gamma) = fractional_cover(h, &bag)?;
        if rho <= threshold {
            bags.push(bag);
            covers.push((rho, gamma));
        }
    }
    Ok(CandidateBagSet {
        provenance: bag_count_provenance(mode.name(), params, None, &bags),
        bags,
        covers: Some(covers),
    })
}

/// All distinct sets of the form `u ∪ s` with `u` from `bases` and `s` a
/// set of at most `extra` additional vertices.
fn extend_with_vertices(
    n: usize,
    bases: &[VertexSet],
    extra: usize,
    dedup: &mut Dedup,
) -> Result<Vec<VertexSet>> {
    for base in bases {
        let rest: Vec<usize> = (0..n).filter(|&v| !base.contains(v)).collect();
        let limit = extra.min(rest.len());
        let mut adder = |pick: &[usize]| -> Result<()> {
            let mut s = base.clone();
            for &v in pick {
                s.insert(v);
            }
            if !s.is_empty() {
                dedup.insert(s)?;
            }
            Ok(())
        };
        // combinations of 0..=limit extra vertices
        let mut err = None;
        for depth in 0..=limit {
            combinations(&rest, depth, &mut |pick| {
                if err.is_none() {
                    if let Err(e) = adder(pick) {
                        err = Some(e);
                    }
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    Ok(dedup
        .seen
        .iter()
        .cloned()
        .collect::<BTreeSet<VertexSet>>()
        .into_iter()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctd::ctd_decide;
    use crate::rat;

    fn h(edges: &[(&str, &[&str])]) -> Hypergraph {
        let spec: Vec<(&str, Vec<&str>)> = edges.iter().map(|(n, vs)| (*n, vs.to_vec())).collect();
        Hypergraph::from_edge_list(&spec).unwrap()
    }

    fn triangle() -> Hypergraph {
        h(&[
            ("e1", &["a", "b"]),
            ("e2", &["b", "c"]),
            ("e3", &["a", "c"]),
        ])
    }

    #[test]
    fn cupcap_zero_rounds_is_root_leaf() {
        let g = triangle();
        let t = cupcap_tree(&g, 0, &[]);
        assert_eq!(t.leaves(), vec![0]);
        assert_eq!(t.evaluate(&g), *g.edge(0));
    }

    #[test]
    fn cupcap_two_leaves_example() {
        // e={1,2,3}, Q1={{2,4},{3,5}} -> two leaves; evaluation {2,3}
        let g = h(&[
            ("e", &["1", "2", "3"]),
            ("f1", &["2", "4"]),
            ("f2", &["3", "5"]),
        ]);
        let t = cupcap_tree(&g, 0, &[vec![1, 2]]);
        assert_eq!(t.leaves().len(), 2);
        assert_eq!(t.evaluate(&g), g.vertex_set_of(&["2", "3"]).unwrap());
    }

    #[test]
    fn cupcap_matches_direct_evaluation() {
        let g = h(&[
            ("e1", &["a", "b", "c"]),
            ("e2", &["b", "d"]),
            ("e3", &["c", "d"]),
            ("e4", &["a", "d"]),
        ]);
        let qs = vec![vec![1, 2], vec![2, 3]];
        let t = cupcap_tree(&g, 0, &qs);
        let mut direct = g.edge(0).clone();
        for q in &qs {
            let mut union = g.empty_vertex_set();
            for &e in q {
                union.union_with(g.edge(e));
            }
            direct = direct.intersection(&union);
        }
        assert_eq!(t.evaluate(&g), direct);
    }

    #[test]
    fn cupcap_no_expansion_when_label_hits_q() {
        let g = triangle();
        // Q contains the root's own edge: no children sprout.
        let t = cupcap_tree(&g, 0, &[vec![0, 1]]);
        assert_eq!(t.nodes.len(), 1);
    }

    #[test]
    fn ghd_bags_single_edge_accepts_k1() {
        let g = h(&[("e1", &["a", "b", "c"])]);
        let bags = ghd_candidate_bags(&g, 1, 2, 1, GhdVariant::CoarseBip, 100_000).unwrap();
        assert!(bags.bags.contains(g.edge(0)));
        assert!(ctd_decide(&g, &bags.bags).unwrap().is_some());
    }

    #[test]
    fn ghd_bags_triangle_coarse_accepts_k2() {
        let g = triangle();
        let bags = ghd_candidate_bags(&g, 2, 2, 1, GhdVariant::CoarseBip, 100_000).unwrap();
        // pairs of edges are available as bags
        let d = ctd_decide(&g, &bags.bags).unwrap();
        assert!(d.is_some());
        let bags1 = ghd_candidate_bags(&g, 1, 2, 1, GhdVariant::CoarseBip, 100_000).unwrap();
        assert!(ctd_decide(&g, &bags1.bags).unwrap().is_none());
    }

    #[test]
    fn fine_bip_sub_is_contained_in_coarse() {
        let g = h(&[
            ("e1", &["a", "b", "c"]),
            ("e2", &["b", "c", "d"]),
            ("e3", &["d", "e"]),
        ]);
        let coarse = ghd_candidate_bags(&g, 2, 2, 2, GhdVariant::CoarseBip, 100_000).unwrap();
        let fine = ghd_candidate_bags(&g, 2, 2, 2, GhdVariant::FineBip, 100_000).unwrap();
        let coarse_set: HashSet<VertexSet> = coarse.bags.iter().cloned().collect();
        for b in &fine.bags {
            assert!(coarse_set.contains(b));
        }
    }

    #[test]
    fn bmip_variant_triangle() {
        let g = triangle();
        let bags = ghd_candidate_bags(&g, 2, 2, 1, GhdVariant::Bmip, 100_000).unwrap();
        assert!(ctd_decide(&g, &bags.bags).unwrap().is_some());
    }

    #[test]
    fn budget_is_enforced() {
        let g = triangle();
        let r = ghd_candidate_bags(&g, 2, 2, 1, GhdVariant::CoarseBip, 3);
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn fhd_rank_mode_triangle() {
        let g = triangle();
        let set = fhd_candidate_bags(&g, &rat(3, 2), &FhdMode::Rank { r: 2 }, 100_000).unwrap();
        // includes all of V (ρ* = 3/2)
        assert!(set.bags.contains(&g.all_vertices()));
        let covers = set.covers.unwrap();
        for (rho, _) in &covers {
            assert!(*rho <= rat(3, 2));
        }
        // the single-bag decomposition is found
        assert!(ctd_decide(&g, &set.bags).unwrap().is_some());
    }

    #[test]
    fn fhd_bdp_mode_single_edge() {
        let g = h(&[("e1", &["a", "b"])]);
        let set = fhd_candidate_bags(&g, &rat_int(1), &FhdMode::Bdp { d: 1 }, 100_000).unwrap();
        assert!(set.bags.contains(g.edge(0)));
        assert!(ctd_decide(&g, &set.bags).unwrap().is_some());
    }

    #[test]
    fn fhd_bip_mode_respects_cfrac() {
        let g = triangle();
        let none =
            fhd_candidate_bags(&g, &rat(3, 2), &FhdMode::Bip { i: 1, c_frac: 0 }, 100_000).unwrap();
        let some =
            fhd_candidate_bags(&g, &rat(3, 2), &FhdMode::Bip { i: 1, c_frac: 3 }, 100_000).unwrap();
        assert!(some.bags.len() >= none.bags.len());
        assert!(some.bags.contains(&g.all_vertices()));
    }

    #[test]
    fn fhd_precondition_errors() {
        let g = h(&[("e1", &["a", "b", "c"]), ("e2", &["a", "b", "d"])]);
        // iwidth is 2, bound 1 fails
        assert!(
            fhd_candidate_bags(&g, &rat_int(2), &FhdMode::Bip { i: 1, c_frac: 0 }, 100_000)
                .is_err()
        );
        // rank is 3, bound 2 fails
        assert!(fhd_candidate_bags(&g, &rat_int(2), &FhdMode::Rank { r: 2 }, 100_000).is_err());
    }

    #[test]
    fn bmip_approx_mode_triangle() {
        let g = triangle();
        let set = fhd_candidate_bags(
            &g,
            &rat(3, 2),
            &FhdMode::BmipApprox {
                c: 2,
                i: 1,
                eps: rat(1, 3),
            },
            100_000,
        )
        .unwrap();
        assert!(ctd_decide(&g, &set.bags).unwrap().is_some());
        let covers = set.covers.unwrap();
        for (rho, _) in &covers {
            assert!(*rho <= rat(3, 2) * rat(4, 3));
        }
    }
}
