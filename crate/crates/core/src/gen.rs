//! Seeded random-instance generators used by the verification harness.
//! Everything here is deterministic in the seed.

use crate::hardness::{CnfFormula, Lit};
use crate::hypergraph::Hypergraph;
use crate::metrics::miwidth;
use crate::set::VertexSet;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn build(n: usize, edge_sets: Vec<Vec<usize>>) -> Hypergraph {
    // Drop vertices covered by no edge and relabel densely.
    let names = vertex_names(n);
    let mut used: Vec<bool> = vec![false; n];
    for e in &edge_sets {
        for &v in e {
            used[v] = true;
        }
    }
    let edges: Vec<(String, Vec<String>)> = edge_sets
        .iter()
        .enumerate()
        .map(|(i, e)| {
            (
                format!("e{}", i + 1),
                e.iter().map(|&v| names[v].clone()).collect(),
            )
        })
        .collect();
    let spec: Vec<(&str, Vec<&str>)> = edges
        .iter()
        .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
        .collect();
    Hypergraph::from_edge_list(&spec).expect("generated edges are valid")
}

fn random_edge(rng: &mut StdRng, n: usize, max_size: usize) -> Vec<usize> {
    let size = rng.gen_range(1..=max_size.min(n));
    let mut pool: Vec<usize> = (0..n).collect();
    pool.shuffle(rng);
    let mut e: Vec<usize> = pool.into_iter().take(size).collect();
    e.sort_unstable();
    e
}

/// Random hypergraph with up to `max_v` vertices and up to `max_e` edges;
/// duplicate edge sets are avoided. At least one edge always comes out.
pub fn random_hypergraph(rng: &mut StdRng, max_v: usize, max_e: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_v.max(3));
    let m = rng.gen_range(2..=max_e.max(2));
    let max_size = (n / 2 + 2).min(n);
    let mut edges: Vec<Vec<usize>> = vec![random_edge(rng, n, max_size)];
    let mut attempts = 0;
    while edges.len() < m && attempts < 200 {
        attempts += 1;
        let e = random_edge(rng, n, max_size);
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    build(n, edges)
}

/// Random hypergraph whose pairwise edge intersections have at most `i`
/// vertices.
pub fn random_with_iwidth(rng: &mut StdRng, max_v: usize, max_e: usize, i: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_v.max(3));
    let m = rng.gen_range(2..=max_e.max(2));
    let max_size = (n / 2 + 2).min(n);
    let mut edges: Vec<Vec<usize>> = vec![random_edge(rng, n, max_size)];
    let mut attempts = 0;
    while edges.len() < m && attempts < 200 {
        attempts += 1;
        let e = random_edge(rng, n, max_size);
        let fits = edges
            .iter()
            .all(|f| e.iter().filter(|v| f.contains(v)).count() <= i);
        if fits && !edges.contains(&e) {
            edges.push(e);
        }
    }
    build(n, edges)
}

/// Random hypergraph with c-wise intersections of at most `i` vertices.
pub fn random_with_miwidth(
    rng: &mut StdRng,
    max_v: usize,
    max_e: usize,
    c: usize,
    i: usize,
) -> Hypergraph {
    loop {
        let h = random_hypergraph(rng, max_v, max_e);
        if miwidth(&h, c) <= i {
            return h;
        }
        // Trim: drop a random edge until the condition holds.
        let mut edges: Vec<Vec<usize>> = (0..h.n_edges())
            .map(|e| h.edge(e).iter().collect())
            .collect();
        while edges.len() > 2 {
            let victim = rng.gen_range(0..edges.len());
            edges.remove(victim);
            let candidate = build(h.n_vertices(), edges.clone());
            if miwidth(&candidate, c) <= i {
                return candidate;
            }
        }
    }
}

/// Random hypergraph where every vertex lies in at most `d` edges.
pub fn random_with_degree(rng: &mut StdRng, max_v: usize, max_e: usize, d: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_v.max(3));
    let m = rng.gen_range(2..=max_e.max(2));
    let mut degree = vec![0usize; n];
    let max_size = (n / 2 + 2).min(n);
    let first = random_edge(rng, n, max_size);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for &v in &first {
        degree[v] += 1;
    }
    edges.push(first);
    let mut attempts = 0;
    while edges.len() < m && attempts < 200 {
        attempts += 1;
        let e = random_edge(rng, n, max_size);
        if e.iter().all(|&v| degree[v] < d) && !edges.contains(&e) {
            for &v in &e {
                degree[v] += 1;
            }
            edges.push(e);
        }
    }
    build(n, edges)
}

/// Random hypergraph with all edges of size at most `r`.
pub fn random_with_rank(rng: &mut StdRng, max_v: usize, max_e: usize, r: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_v.max(3));
    let m = rng.gen_range(2..=max_e.max(2));
    let mut edges: Vec<Vec<usize>> = vec![random_edge(rng, n, r)];
    let mut attempts = 0;
    while edges.len() < m && attempts < 200 {
        attempts += 1;
        let e = random_edge(rng, n, r);
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    build(n, edges)
}

/// Random reduced hypergraph (no twin vertices, no duplicate edges).
pub fn random_reduced(rng: &mut StdRng, max_v: usize, max_e: usize) -> Hypergraph {
    loop {
        let h = random_hypergraph(rng, max_v, max_e).reduce().hypergraph;
        if h.n_vertices() >= 2 && h.n_edges() >= 2 {
            return h;
        }
    }
}

/// Random family of candidate bags over the vertices of `h`.
pub fn random_bags(rng: &mut StdRng, h: &Hypergraph, max_bags: usize) -> Vec<VertexSet> {
    let n = h.n_vertices();
    let count = rng.gen_range(1..=max_bags.max(1));
    let mut bags = Vec::new();
    for _ in 0..count {
        let size = rng.gen_range(1..=n);
        let mut pool: Vec<usize> = (0..n).collect();
        pool.shuffle(rng);
        bags.push(VertexSet::from_indices(n, pool.into_iter().take(size)));
    }
    bags.sort();
    bags.dedup();
    bags
}

/// Random satisfiable 3CNF: an assignment is drawn first and every clause
/// is forced to satisfy it; the assignment is returned as the fixture.
pub fn random_sat_3cnf(rng: &mut StdRng, n: usize, m: usize) -> (CnfFormula, Vec<bool>) {
    let sigma: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut clauses = Vec::with_capacity(m);
    for _ in 0..m {
        let mut lits: Vec<Lit> = Vec::with_capacity(3);
        for _ in 0..3 {
            let var = rng.gen_range(1..=n);
            lits.push(Lit {
                var,
                positive: rng.gen_bool(0.5),
            });
        }
        // force at least one literal to agree with sigma
        if !lits.iter().any(|l| sigma[l.var - 1] == l.positive) {
            let fix = rng.gen_range(0..3);
            lits[fix].positive = sigma[lits[fix].var - 1];
        }
        clauses.push([lits[0], lits[1], lits[2]]);
    }
    (CnfFormula::new(n, clauses).unwrap(), sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::structural_metrics;

    #[test]
    fn generators_respect_their_bounds() {
        let mut r = rng(7);
        for _ in 0..20 {
            let h = random_with_iwidth(&mut r, 8, 8, 2);
            assert!(structural_metrics(&h, 2).unwrap().iwidth <= 2);
            let h = random_with_degree(&mut r, 8, 8, 3);
            assert!(structural_metrics(&h, 2).unwrap().degree <= 3);
            let h = random_with_rank(&mut r, 8, 8, 3);
            assert!(structural_metrics(&h, 2).unwrap().rank <= 3);
            let h = random_with_miwidth(&mut r, 8, 8, 3, 1);
            assert!(miwidth(&h, 3) <= 1);
            let h = random_reduced(&mut r, 8, 8);
            assert!(h.is_reduced());
        }
    }

    #[test]
    fn sat_instances_are_satisfiable() {
        let mut r = rng(11);
        for _ in 0..30 {
            let (phi, sigma) = random_sat_3cnf(&mut r, 4, 4);
            assert_eq!(phi.first_falsified(&sigma), None);
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let a = random_hypergraph(&mut rng(5), 8, 8);
        let b = random_hypergraph(&mut rng(5), 8, 8);
        assert_eq!(a.edge_sets(), b.edge_sets());
    }
}
