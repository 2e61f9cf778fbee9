//! Shared test support: an exhaustive CompNF candidate-TD search written
//! independently of the production marking algorithm, plus small builders.
//!
//! The enumerator explores, top-down, every way of decomposing a (head,
//! component) block through every other candidate bag, memoizing settled
//! results. Failures caused by cutting a cycle on the current path are not
//! cached, so the search computes the same least fixpoint the bottom-up
//! procedure does, by a different route.
#![allow(dead_code)] // each test binary uses a different subset

use hyperwidth::{Hypergraph, VertexSet};
use std::collections::HashMap;

pub fn h(edges: &[(&str, &[&str])]) -> Hypergraph {
    let spec: Vec<(&str, Vec<&str>)> = edges.iter().map(|(n, vs)| (*n, vs.to_vec())).collect();
    Hypergraph::from_edge_list(&spec).unwrap()
}

type BlockKey = (usize, VertexSet);

struct Search<'a> {
    h: &'a Hypergraph,
    bags: &'a [VertexSet],
    settled: HashMap<BlockKey, bool>,
    on_path: Vec<BlockKey>,
}

impl<'a> Search<'a> {
    /// Can the block (bags[b], comp) carry a CompNF TD of H[bag ∪ comp]
    /// rooted at the bag? Returns (answer, tainted-by-cycle-cut).
    fn decomposable(&mut self, b: usize, comp: &VertexSet) -> (bool, bool) {
        if comp.is_empty() {
            return (true, false);
        }
        let key = (b, comp.clone());
        if let Some(&v) = self.settled.get(&key) {
            return (v, false);
        }
        if self.on_path.contains(&key) {
            return (false, true); // cycle cut: do not cache this failure
        }
        self.on_path.push(key.clone());
        let bag_comp = self.bags[b].union(comp);
        let mut tainted = false;
        let mut answer = false;
        'bases: for (x, bag_x) in self.bags.iter().enumerate() {
            if x == b || !bag_x.is_subset(&bag_comp) {
                continue;
            }
            // blocks headed by x that sit below (b, comp)
            let comps_x = self.h.components(bag_x).unwrap();
            let below: Vec<VertexSet> = comps_x
                .into_iter()
                .map(|c| c.members)
                .filter(|y| y.is_subset(comp))
                .collect();
            let mut v_x = bag_x.clone();
            for y in &below {
                v_x.union_with(y);
            }
            if !comp.is_subset(&v_x) {
                continue;
            }
            for e in self.h.edge_sets() {
                if e.intersects(comp) && !e.is_subset(&v_x) {
                    continue 'bases;
                }
            }
            let mut all_ok = true;
            for y in &below {
                let (ok, t) = self.decomposable(x, y);
                tainted |= t;
                if !ok {
                    all_ok = false;
                    break;
                }
            }
            if all_ok {
                answer = true;
                break;
            }
        }
        self.on_path.pop();
        if answer {
            self.settled.insert(key, true);
            (true, false)
        } else {
            if !tainted {
                self.settled.insert(key, false);
            }
            (false, tainted)
        }
    }
}

/// Exhaustive decision: does a CompNF tree decomposition of `h` using only
/// the given bags exist?
pub fn exhaustive_compnf_exists(h: &Hypergraph, bags: &[VertexSet]) -> bool {
    let mut search = Search {
        h,
        bags,
        settled: HashMap::new(),
        on_path: Vec::new(),
    };
    'roots: for (b, bag) in bags.iter().enumerate() {
        let comps = h.components(bag).unwrap();
        for c in comps {
            let (ok, _) = search.decomposable(b, &c.members);
            if !ok {
                continue 'roots;
            }
        }
        return true;
    }
    false
}
