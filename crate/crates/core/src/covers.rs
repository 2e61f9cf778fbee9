//! Integral and fractional edge covers, their support structure, the
//! heavy/light split with naive covers, full-subset representations, and
//! the table of minimal fractional-width overshoots µ(k,c).

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lp::Program;
use crate::set::VertexSet;
use crate::{rat_int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

/// Edge weighting with exact rational weights in [0,1]; only positive
/// weights are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeWeighting {
    weights: BTreeMap<usize, Rat>,
}

impl EdgeWeighting {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, edge: usize, w: Rat) {
        assert!(
            !w.is_negative() && w <= rat_int(1),
            "edge weight must lie in [0,1]"
        );
        if w.is_zero() {
            self.weights.remove(&edge);
        } else {
            self.weights.insert(edge, w);
        }
    }

    pub fn get(&self, edge: usize) -> Rat {
        self.weights.get(&edge).cloned().unwrap_or_else(Rat::zero)
    }

    /// Edges with positive weight, ascending by index.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> + '_ {
        self.weights.iter().map(|(&e, w)| (e, w))
    }

    pub fn total_weight(&self) -> Rat {
        self.weights.values().fold(Rat::zero(), |a, b| a + b)
    }

    pub fn is_integral(&self) -> bool {
        self.weights.values().all(|w| w.is_one())
    }

    /// Weight placed on a single vertex.
    pub fn vertex_weight(&self, h: &Hypergraph, v: usize) -> Rat {
        self.weights
            .iter()
            .filter(|(&e, _)| h.edge(e).contains(v))
            .fold(Rat::zero(), |a, (_, w)| a + w)
    }

    /// B(θ): vertices whose incident weight reaches 1, by exact comparison.
    pub fn covered_set(&self, h: &Hypergraph) -> VertexSet {
        let one = Rat::one();
        let mut acc: Vec<Rat> = vec![Rat::zero(); h.n_vertices()];
        for (&e, w) in &self.weights {
            for v in h.edge(e).iter() {
                acc[v] += w.clone();
            }
        }
        VertexSet::from_indices(
            h.n_vertices(),
            acc.iter()
                .enumerate()
                .filter(|(_, w)| **w >= one)
                .map(|(v, _)| v),
        )
    }

    /// Rendered as edge-name -> "p/q" for serialization.
    pub fn to_named(&self, h: &Hypergraph) -> BTreeMap<String, String> {
        self.weights
            .iter()
            .map(|(&e, w)| (h.edge_name(e).to_string(), crate::format_rat(w)))
            .collect()
    }

    pub fn from_named(h: &Hypergraph, named: &BTreeMap<String, String>) -> Result<Self> {
        let mut w = EdgeWeighting::new();
        for (name, val) in named {
            let e = h
                .edge_id(name)
                .ok_or_else(|| Error::UnknownEdge(name.clone()))?;
            let r = crate::parse_rat(val)?;
            if r.is_negative() || r > rat_int(1) {
                return Err(Error::Precondition(format!(
                    "cover weight {val} for {name} outside [0,1]"
                )));
            }
            w.set(e, r);
        }
        Ok(w)
    }
}

fn check_coverable(h: &Hypergraph, s: &VertexSet) -> Result<()> {
    for v in s.iter() {
        if h.incident_edges(v).next().is_none() {
            return Err(Error::Uncoverable(h.vertex_name(v).to_string()));
        }
    }
    Ok(())
}

/// ρ*(S) with a basic optimal fractional cover γ, S ⊆ B(γ). Exact rational
/// arithmetic, deterministic pivoting.
pub fn fractional_cover(h: &Hypergraph, s: &VertexSet) -> Result<(Rat, EdgeWeighting)> {
    check_coverable(h, s)?;
    if s.is_empty() {
        return Ok((Rat::zero(), EdgeWeighting::new()));
    }
    let m = h.n_edges();
    let mut p: Program<Rat> = Program::new(vec![Rat::one(); m]);
    for v in s.iter() {
        let mut row = vec![Rat::zero(); m];
        for e in h.incident_edges(v) {
            row[e] = Rat::one();
        }
        p.add_ge(row, Rat::one());
    }
    let sol = p.solve()?;
    let mut gamma = EdgeWeighting::new();
    for (e, w) in sol.assignment.into_iter().enumerate() {
        if !w.is_zero() {
            // Minimization keeps weights <= 1 implicitly.
            gamma.set(e, w);
        }
    }
    Ok((sol.value, gamma))
}

/// Fractional vertex cover number τ*(H): minimal total vertex weight putting
/// at least 1 on every edge.
pub fn fractional_transversal(h: &Hypergraph) -> Result<Rat> {
    let n = h.n_vertices();
    let mut p: Program<Rat> = Program::new(vec![Rat::one(); n]);
    for e in h.edge_sets() {
        let mut row = vec![Rat::zero(); n];
        for v in e.iter() {
            row[v] = Rat::one();
        }
        p.add_ge(row, Rat::one());
    }
    Ok(p.solve()?.value)
}

/// ρ(S) with an optimal integral cover, by branch-and-bound set cover with
/// the LP value as lower bound. Ties break lexicographically (lower edge
/// indices preferred), so outputs are reproducible.
pub fn integral_cover(h: &Hypergraph, s: &VertexSet) -> Result<(usize, EdgeWeighting)> {
    check_coverable(h, s)?;
    if s.is_empty() {
        return Ok((0, EdgeWeighting::new()));
    }
    // Candidates are edge traces on s, deduplicated keeping lowest index.
    let mut candidates: Vec<(usize, VertexSet)> = Vec::new();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    for (i, e) in h.edge_sets().iter().enumerate() {
        let inter = e.intersection(s);
        if !inter.is_empty() && seen.insert(inter.clone()) {
            candidates.push((i, inter));
        }
    }
    let greedy = |s: &VertexSet| -> Vec<usize> {
        let mut left = s.clone();
        let mut pick = Vec::new();
        while !left.is_empty() {
            let (i, best) = candidates
                .iter()
                .max_by_key(|(i, c)| (c.intersection(&left).len(), usize::MAX - i))
                .map(|(i, c)| (*i, c.clone()))
                .expect("coverable");
            left = left.difference(&best);
            pick.push(i);
        }
        pick
    };
    struct Ctx<'a> {
        h: &'a Hypergraph,
        candidates: &'a [(usize, VertexSet)],
        best: usize,
        best_pick: Vec<usize>,
    }
    fn descend(ctx: &mut Ctx, left: &VertexSet, picked: &mut Vec<usize>) {
        if left.is_empty() {
            if picked.len() < ctx.best {
                ctx.best = picked.len();
                ctx.best_pick = picked.clone();
            }
            return;
        }
        if picked.len() + 1 >= ctx.best {
            return;
        }
        // LP lower bound on the remainder.
        if let Ok((lp, _)) = fractional_cover(ctx.h, left) {
            let need: usize = lp.ceil().to_integer().try_into().unwrap_or(usize::MAX);
            if picked.len() + need >= ctx.best {
                return;
            }
        }
        // Branch on the lowest uncovered vertex: one of its candidates must
        // be picked; candidates are tried in ascending edge order.
        let v = left.first().unwrap();
        for (i, c) in ctx.candidates.iter() {
            if !c.contains(v) {
                continue;
            }
            picked.push(*i);
            let rest = left.difference(c);
            descend(ctx, &rest, picked);
            picked.pop();
        }
    }
    let seed = greedy(s);
    let mut ctx = Ctx {
        h,
        candidates: &candidates,
        best: seed.len(),
        best_pick: seed,
    };
    descend(&mut ctx, s, &mut Vec::new());
    let mut lambda = EdgeWeighting::new();
    let picks: BTreeSet<usize> = ctx.best_pick.iter().copied().collect();
    for e in picks {
        lambda.set(e, Rat::one());
    }
    Ok((ctx.best, lambda))
}

/// Lowers weights greedily (lexicographic edge order) until no single
/// positive weight can drop without losing a `target` vertex from B.
pub fn prune_cover(
    h: &Hypergraph,
    gamma: &EdgeWeighting,
    target: &VertexSet,
) -> Result<EdgeWeighting> {
    if !target.is_subset(&gamma.covered_set(h)) {
        return Err(Error::Precondition(
            "prune-cover target must be covered by the input weighting".into(),
        ));
    }
    let mut order: Vec<usize> = gamma.support().collect();
    order.sort_by(|&a, &b| h.edge_name(a).cmp(h.edge_name(b)));
    let mut out = gamma.clone();
    for e in order {
        let cur = out.get(e);
        if cur.is_zero() {
            continue;
        }
        // Minimum weight on e keeping every target vertex of e at >= 1.
        let mut needed = Rat::zero();
        for v in h.edge(e).intersection(target).iter() {
            let others = out.vertex_weight(h, v) - cur.clone();
            let deficit = Rat::one() - others;
            if deficit > needed {
                needed = deficit;
            }
        }
        if needed < cur {
            out.set(e, needed.max(Rat::zero()));
        }
    }
    Ok(out)
}

/// Heavy/light decomposition of B(γ) at the threshold 1 - 1/(2k).
#[derive(Clone, Debug)]
pub struct SplitRepresentation {
    /// (heavy edge, its part B(γ) ∩ e), ascending by edge index.
    pub heavy_parts: Vec<(usize, VertexSet)>,
    /// Fractional part U; in the canonical representation these are the
    /// covered vertices lying in no heavy edge.
    pub fractional_part: VertexSet,
    pub canonical: bool,
    pub covered: VertexSet,
}

pub fn split_representation(
    h: &Hypergraph,
    gamma: &EdgeWeighting,
    k: &Rat,
    canonical: bool,
) -> Result<SplitRepresentation> {
    let weight = gamma.total_weight();
    if &weight > k {
        return Err(Error::Precondition(format!(
            "weight(γ) = {} exceeds k = {}",
            crate::format_rat(&weight),
            crate::format_rat(k)
        )));
    }
    if *k < Rat::one() {
        return Err(Error::Precondition(
            "split representation needs k >= 1".into(),
        ));
    }
    let threshold = Rat::one() - Rat::new(1.into(), 2.into()) / k.clone();
    let covered = gamma.covered_set(h);
    let mut heavy_parts = Vec::new();
    let mut heavy_union = h.empty_vertex_set();
    let mut seen_parts: HashSet<VertexSet> = HashSet::new();
    for e in gamma.support() {
        if gamma.get(e) >= threshold {
            let part = covered.intersection(h.edge(e));
            if !seen_parts.insert(part.clone()) {
                return Err(Error::Precondition(
                    "duplicate heavy parts; weighting is not redundancy-free".into(),
                ));
            }
            heavy_union.union_with(h.edge(e));
            heavy_parts.push((e, part));
        }
    }
    let fractional_part = covered.difference(&heavy_union);
    Ok(SplitRepresentation {
        heavy_parts,
        fractional_part,
        canonical,
        covered,
    })
}

/// Naive cover for a split representation: weight 1 on every heavy edge,
/// plus an optimal fractional cover of the left-over fractional part.
pub fn naive_cover(h: &Hypergraph, rep: &SplitRepresentation) -> Result<EdgeWeighting> {
    let mut nu = EdgeWeighting::new();
    let mut heavy_union = h.empty_vertex_set();
    for (e, _) in &rep.heavy_parts {
        nu.set(*e, Rat::one());
        heavy_union.union_with(h.edge(*e));
    }
    let rest = rep.fractional_part.difference(&heavy_union);
    let (_, cover) = fractional_cover(h, &rest)?;
    for (e, w) in cover.iter() {
        let merged = (nu.get(e) + w.clone()).min(Rat::one());
        nu.set(e, merged);
    }
    Ok(nu)
}

/// A minimal full subset of supp(γ): its weight reaches 1 and no proper
/// subset does. The union of the intersections over all full subsets is
/// exactly B(γ).
pub struct FullSubset {
    pub edges: Vec<usize>,
    pub intersection: VertexSet,
    /// Matching edge of the intersection-closed input, when non-empty.
    pub closure_edge: Option<usize>,
}

pub fn full_subset_representation(
    h_closed: &Hypergraph,
    gamma: &EdgeWeighting,
    cap: usize,
) -> Result<Vec<FullSubset>> {
    let supp: Vec<usize> = gamma.support().collect();
    if supp.len() > cap {
        return Err(Error::CapExceeded {
            what: "full-subset representation".into(),
            quantity: "supp(γ)".into(),
            cap,
            actual: supp.len(),
        });
    }
    let n = supp.len();
    let weight_of = |mask: usize| -> Rat {
        (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| gamma.get(supp[j]))
            .fold(Rat::zero(), |a, b| a + b)
    };
    let mut out = Vec::new();
    'masks: for mask in 1usize..(1 << n) {
        if weight_of(mask) < Rat::one() {
            continue;
        }
        for j in 0..n {
            if mask >> j & 1 == 1 {
                let sub = mask & !(1 << j);
                if sub != 0 && weight_of(sub) >= Rat::one() {
                    continue 'masks; // not minimal
                }
            }
        }
        let edges: Vec<usize> = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| supp[j])
            .collect();
        let intersection = edges
            .iter()
            .map(|&e| h_closed.edge(e).clone())
            .reduce(|a, b| a.intersection(&b))
            .unwrap();
        let closure_edge = if intersection.is_empty() {
            None
        } else {
            h_closed.edge_sets().iter().position(|e| *e == intersection)
        };
        out.push(FullSubset {
            edges,
            intersection,
            closure_edge,
        });
    }
    Ok(out)
}

/// µ(k,c) table entry: the least value of ρ*(G) + j - k inside (0, 1/2]
/// over hypergraphs G on at most c vertices and integers j.
#[derive(Clone, Debug)]
pub struct MuTable {
    pub k: Rat,
    pub c: usize,
    pub value: Option<Rat>,
    pub witness: Option<(Hypergraph, u64)>,
}

/// Brute-force µ(k,c) for c <= 4; candidates are canonicalized up to vertex
/// relabeling since ρ* is isomorphism-invariant.
pub fn compute_mu(k: &Rat, c: usize) -> Result<MuTable> {
    if c > 4 {
        return Err(Error::CapExceeded {
            what: "µ(k,c) enumeration".into(),
            quantity: "c".into(),
            cap: 4,
            actual: c,
        });
    }
    if c == 0 || *k < Rat::one() {
        return Err(Error::Precondition("µ(k,c) needs c >= 1 and k >= 1".into()));
    }
    let half = Rat::new(1.into(), 2.into());
    let j_max: u64 = k.ceil().to_integer().try_into().unwrap_or(0);
    let mut best: Option<(Rat, Vec<u64>, u64)> = None;
    let mut rho_cache: HashMap<Vec<u64>, Rat> = HashMap::new();
    let non_empty_edges: u64 = (1 << c) - 1; // non-empty subsets of [c]
    for edge_choice in 0u64..(1 << non_empty_edges) {
        let masks: Vec<u64> = (1..=non_empty_edges)
            .filter(|m| edge_choice >> (m - 1) & 1 == 1)
            .collect();
        let canon = canonical_masks(&masks, c);
        let rho = match rho_cache.get(&canon) {
            Some(r) => r.clone(),
            None => {
                let g = hypergraph_from_masks(&canon, c);
                let all = g.all_vertices();
                let (r, _) = fractional_cover(&g, &all)?;
                rho_cache.insert(canon.clone(), r.clone());
                r
            }
        };
        for j in 0..=j_max {
            let val = rho.clone() + rat_int(j as i64) - k.clone();
            if val > Rat::zero() && val <= half {
                let better = best.as_ref().is_none_or(|(b, _, _)| val < *b);
                if better {
                    best = Some((val, canon.clone(), j));
                }
            }
        }
    }
    let value = best.as_ref().map(|(v, _, _)| v.clone());
    let witness = best.map(|(_, masks, j)| (hypergraph_from_masks(&masks, c), j));
    Ok(MuTable {
        k: k.clone(),
        c,
        value,
        witness,
    })
}

fn canonical_masks(masks: &[u64], c: usize) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = (0..c).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<u64> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u64;
                for (b, &target) in p.iter().enumerate().take(c) {
                    if m >> b & 1 == 1 {
                        out |= 1 << target;
                    }
                }
                out
            })
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| &mapped < b) {
            best = Some(mapped);
        }
    });
    best.unwrap_or_default()
}

fn permute_all(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute_all(items, at + 1, f);
        items.swap(at, i);
    }
}

fn hypergraph_from_masks(masks: &[u64], c: usize) -> Hypergraph {
    // Vertices covered by no edge are dropped (no isolated vertices).
    let covered: Vec<usize> = (0..c)
        .filter(|b| masks.iter().any(|m| m >> b & 1 == 1))
        .collect();
    let names: Vec<String> = covered.iter().map(|b| format!("v{}", b + 1)).collect();
    let pos: HashMap<usize, usize> = covered.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let edges: Vec<(String, VertexSet)> = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            (
                format!("g{}", i + 1),
                VertexSet::from_indices(
                    covered.len(),
                    (0..c).filter(|b| m >> b & 1 == 1).map(|b| pos[&b]),
                ),
            )
        })
        .collect();
    Hypergraph::from_parts(names, edges)
}
