//! Structural width measures (rank, degree, intersection and
//! multi-intersection widths, VC dimension) and the report used to classify
//! instances into the tractable restriction classes.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct MetricsReport {
    pub rank: usize,
    pub degree: usize,
    pub iwidth: usize,
    /// c -> c-multi-intersection width, for 2 <= c <= cmax.
    pub miwidth: BTreeMap<usize, usize>,
    pub vc: Option<usize>,
}

/// Exact rank, degree, iwidth and c-miwidth for 2 <= c <= cmax.
///
/// The miwidth values are read off the intersection closure: the largest
/// closure set contained in at least c edges is the c-multi-intersection
/// width (the intersection of c edges containing a maximal such set is the
/// set itself, so the maximum agrees with direct c-tuple enumeration).
pub fn structural_metrics(h: &Hypergraph, cmax: usize) -> Result<MetricsReport> {
    if cmax < 2 {
        return Err(Error::Precondition("cmax must be at least 2".into()));
    }
    let rank = h.edge_sets().iter().map(|e| e.len()).max().unwrap_or(0);
    let degree = (0..h.n_vertices())
        .map(|v| h.incident_edges(v).count())
        .max()
        .unwrap_or(0);
    let sets = h.intersection_sets();
    let mut miwidth = BTreeMap::new();
    for c in 2..=cmax {
        let w = sets
            .iter()
            .filter(|(_, cnt)| *cnt >= c)
            .map(|(s, _)| s.len())
            .max()
            .unwrap_or(0);
        miwidth.insert(c, w);
    }
    Ok(MetricsReport {
        rank,
        degree,
        iwidth: miwidth[&2],
        miwidth,
        vc: None,
    })
}

/// c-miwidth of `h` alone (closure-based, same as `structural_metrics`).
pub fn miwidth(h: &Hypergraph, c: usize) -> usize {
    h.intersection_sets()
        .iter()
        .filter(|(_, cnt)| *cnt >= c)
        .map(|(s, _)| s.len())
        .max()
        .unwrap_or(0)
}

/// Direct miwidth by c-tuple enumeration with prefix pruning. Kept for
/// cross-checking the closure formulation on small inputs.
pub fn miwidth_by_enumeration(h: &Hypergraph, c: usize) -> usize {
    fn descend(
        edges: &[VertexSet],
        from: usize,
        left: usize,
        prefix: &VertexSet,
        best: &mut usize,
    ) {
        if left == 0 {
            *best = (*best).max(prefix.len());
            return;
        }
        for i in from..edges.len() {
            let inter = prefix.intersection(&edges[i]);
            if inter.is_empty() {
                continue; // extending an empty intersection cannot beat best >= 0
            }
            descend(edges, i + 1, left - 1, &inter, best);
        }
    }
    if h.n_edges() < c {
        return 0;
    }
    let mut best = 0;
    for i in 0..h.n_edges() {
        descend(h.edge_sets(), i + 1, c - 1, h.edge(i), &mut best);
    }
    best
}

/// Exact VC dimension with a maximum shattered witness, by exhaustive
/// search in increasing set size. Capped because the search is exponential.
pub fn vc_dimension(h: &Hypergraph, cap: usize) -> Result<(usize, VertexSet)> {
    let n = h.n_vertices();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "VC dimension".into(),
            quantity: "V(H)".into(),
            cap,
            actual: n,
        });
    }
    // A shattered set of size s needs 2^s distinct traces, so s is bounded
    // by log2(|E|).
    let mut size_bound = 0;
    while (1usize << (size_bound + 1)) <= h.n_edges() {
        size_bound += 1;
    }
    let mut best = (0, h.empty_vertex_set());
    for s in 1..=size_bound.min(n) {
        let mut found = None;
        let mut pick = Vec::with_capacity(s);
        search_shattered(h, 0, s, &mut pick, &mut found);
        match found {
            Some(witness) => best = (s, witness),
            None => break, // shattered sets are closed under subsets
        }
    }
    Ok(best)
}

fn search_shattered(
    h: &Hypergraph,
    from: usize,
    left: usize,
    pick: &mut Vec<usize>,
    found: &mut Option<VertexSet>,
) {
    if found.is_some() {
        return;
    }
    if left == 0 {
        let x = VertexSet::from_indices(h.n_vertices(), pick.iter().copied());
        if is_shattered(h, &x) {
            *found = Some(x);
        }
        return;
    }
    for v in from..h.n_vertices() {
        pick.push(v);
        search_shattered(h, v + 1, left - 1, pick, found);
        pick.pop();
        if found.is_some() {
            return;
        }
    }
}

fn is_shattered(h: &Hypergraph, x: &VertexSet) -> bool {
    let mut traces: std::collections::HashSet<VertexSet> = std::collections::HashSet::new();
    for e in h.edge_sets() {
        traces.insert(x.intersection(e));
    }
    traces.len() == 1usize << x.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(edges: &[(&str, &[&str])]) -> Hypergraph {
        let spec: Vec<(&str, Vec<&str>)> = edges.iter().map(|(n, vs)| (*n, vs.to_vec())).collect();
        Hypergraph::from_edge_list(&spec).unwrap()
    }

    fn long_edge_family(n: usize) -> Hypergraph {
        let mut edges: Vec<(String, Vec<String>)> = (1..=n)
            .map(|i| (format!("e{i}"), vec!["v0".to_string(), format!("v{i}")]))
            .collect();
        edges.push(("e0".to_string(), (1..=n).map(|i| format!("v{i}")).collect()));
        let spec: Vec<(&str, Vec<&str>)> = edges
            .iter()
            .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
            .collect();
        Hypergraph::from_edge_list(&spec).unwrap()
    }

    /// Edges are all (n-1)-subsets of n vertices.
    fn complement_family(n: usize) -> Hypergraph {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, Vec<String>)> = (0..n)
            .map(|drop| {
                (
                    format!("e{}", drop + 1),
                    names
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, v)| v.clone())
                        .collect(),
                )
            })
            .collect();
        let spec: Vec<(&str, Vec<&str>)> = edges
            .iter()
            .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
            .collect();
        Hypergraph::from_edge_list(&spec).unwrap()
    }

    #[test]
    fn long_edge_family_iwidth_is_one() {
        for n in [3, 5, 7] {
            let m = structural_metrics(&long_edge_family(n), 3).unwrap();
            assert_eq!(m.iwidth, 1);
        }
    }

    #[test]
    fn complement_family_miwidths() {
        // all 4-subsets of 5 vertices: 2-miwidth = 3, c-miwidth = 5 - c
        let g = complement_family(5);
        let m = structural_metrics(&g, 4).unwrap();
        assert_eq!(m.miwidth[&2], 3);
        assert_eq!(m.miwidth[&3], 2);
        assert_eq!(m.miwidth[&4], 1);
    }

    #[test]
    fn single_edge_metrics() {
        let g = h(&[("e1", &["a", "b", "c"])]);
        let m = structural_metrics(&g, 3).unwrap();
        assert_eq!(m.rank, 3);
        assert_eq!(m.degree, 1);
        assert_eq!(m.iwidth, 0);
        assert!(structural_metrics(&g, 1).is_err());
    }

    #[test]
    fn closure_miwidth_matches_enumeration() {
        let g = h(&[
            ("e1", &["a", "b", "c", "d"]),
            ("e2", &["b", "c", "d", "e"]),
            ("e3", &["c", "d", "e", "f"]),
            ("e4", &["a", "d", "f"]),
            ("e5", &["a", "b"]),
        ]);
        for c in 2..=4 {
            let m = structural_metrics(&g, c).unwrap();
            assert_eq!(m.miwidth[&c], miwidth_by_enumeration(&g, c), "c = {c}");
        }
    }

    #[test]
    fn vc_single_edge_is_zero() {
        let g = h(&[("e1", &["a", "b", "c"])]);
        let (vc, _) = vc_dimension(&g, 16).unwrap();
        assert_eq!(vc, 0);
    }

    #[test]
    fn vc_complement_family_is_one() {
        let g = complement_family(5);
        let (vc, witness) = vc_dimension(&g, 16).unwrap();
        assert_eq!(vc, 1);
        assert_eq!(witness.len(), 1);
    }

    #[test]
    fn vc_power_set_is_two() {
        // all subsets of {a,b} occur as traces ({c} supplies the empty one),
        // so {a,b} is shattered by construction
        let g = h(&[
            ("e1", &["a"]),
            ("e2", &["b"]),
            ("e3", &["a", "b"]),
            ("e4", &["c"]),
        ]);
        let (vc, witness) = vc_dimension(&g, 16).unwrap();
        assert_eq!(vc, 2);
        assert_eq!(witness.len(), 2);
    }

    #[test]
    fn vc_cap_enforced() {
        let g = complement_family(5);
        assert!(vc_dimension(&g, 4).is_err());
    }

    #[test]
    fn degree_bound_kills_miwidth() {
        let g = h(&[
            ("e1", &["a", "b"]),
            ("e2", &["b", "c"]),
            ("e3", &["c", "a"]),
        ]);
        let m = structural_metrics(&g, 3).unwrap();
        assert_eq!(m.degree, 2);
        assert_eq!(m.miwidth[&3], 0); // (degree+1)-miwidth = 0
    }
}
