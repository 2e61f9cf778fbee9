//! Decomposition trees (TD/GHD/FHD/HD): validation against the defining
//! conditions, component normal form checking, normalization into
//! bag-maximal CompNF form, and critical paths.

use crate::covers::{fractional_cover, integral_cover, EdgeWeighting};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::{rat_int, Rat};
use num_traits::Zero;
use std::collections::VecDeque;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompKind {
    Td,
    Ghd,
    Fhd,
    Hd,
}

impl DecompKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecompKind::Td => "TD",
            DecompKind::Ghd => "GHD",
            DecompKind::Fhd => "FHD",
            DecompKind::Hd => "HD",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "TD" => Ok(DecompKind::Td),
            "GHD" => Ok(DecompKind::Ghd),
            "FHD" => Ok(DecompKind::Fhd),
            "HD" => Ok(DecompKind::Hd),
            other => Err(Error::InvalidDecomposition(format!(
                "unknown decomposition kind {other:?}"
            ))),
        }
    }
}

/// Width measure used for plain TDs: integral (ghw-style) or fractional
/// (fhw-style) cover number per bag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WidthMode {
    Integral,
    Fractional,
}

#[derive(Clone, Debug)]
pub struct DecompNode {
    pub id: String,
    pub bag: VertexSet,
    pub cover: Option<EdgeWeighting>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub kind: DecompKind,
    pub nodes: Vec<DecompNode>,
    pub root: usize,
}

impl Decomposition {
    pub fn single(
        kind: DecompKind,
        id: &str,
        bag: VertexSet,
        cover: Option<EdgeWeighting>,
    ) -> Self {
        Decomposition {
            kind,
            nodes: vec![DecompNode {
                id: id.to_string(),
                bag,
                cover,
                parent: None,
                children: Vec::new(),
            }],
            root: 0,
        }
    }

    pub fn add_child(
        &mut self,
        parent: usize,
        id: &str,
        bag: VertexSet,
        cover: Option<EdgeWeighting>,
    ) -> usize {
        let idx = self.nodes.len();
        self.nodes.push(DecompNode {
            id: id.to_string(),
            bag,
            cover,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.nodes[parent].children.push(idx);
        idx
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes of the subtree rooted at `u`, preorder.
    pub fn subtree(&self, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.nodes[x].children.iter().copied());
        }
        out
    }

    /// V(T_u): all vertices in bags of the subtree rooted at `u`.
    pub fn subtree_vertices(&self, u: usize) -> VertexSet {
        let mut s = self.nodes[u].bag.clone();
        for x in self.subtree(u) {
            s.union_with(&self.nodes[x].bag);
        }
        s
    }

    pub fn nodes_with_vertex(&self, v: usize) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&u| self.nodes[u].bag.contains(v))
            .collect()
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out = self.nodes[u].children.clone();
        if let Some(p) = self.nodes[u].parent {
            out.push(p);
        }
        out
    }

    /// The unique tree path from `a` to `b`, inclusive.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.nodes.len()];
        let mut queue = VecDeque::from([a]);
        prev[a] = a;
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for y in self.neighbors(x) {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Maximum cover weight over the nodes (for covered kinds).
    pub fn cover_width(&self) -> Rat {
        self.nodes
            .iter()
            .filter_map(|n| n.cover.as_ref().map(|c| c.total_weight()))
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Validates conditions (1), (2), the kind-specific cover conditions and
    /// the width bound, reporting every violation found.
    pub fn validate(&self, h: &Hypergraph, k: &Rat, mode: WidthMode) -> Result<ValidationReport> {
        for node in &self.nodes {
            if node.bag.universe() != h.n_vertices() {
                return Err(Error::InvalidDecomposition(format!(
                    "node {} references a different vertex universe",
                    node.id
                )));
            }
        }
        let mut violations = Vec::new();
        // (1) every edge inside some bag
        for (i, e) in h.edge_sets().iter().enumerate() {
            if !self.nodes.iter().any(|n| e.is_subset(&n.bag)) {
                violations.push(Violation::EdgeNotCovered {
                    edge: h.edge_name(i).to_string(),
                });
            }
        }
        // (2) connectedness per vertex
        for v in 0..h.n_vertices() {
            let with_v = self.nodes_with_vertex(v);
            if with_v.is_empty() {
                continue;
            }
            let mut seen = vec![false; self.nodes.len()];
            let mut queue = VecDeque::from([with_v[0]]);
            seen[with_v[0]] = true;
            let mut reached = 0;
            while let Some(x) = queue.pop_front() {
                reached += 1;
                for y in self.neighbors(x) {
                    if !seen[y] && self.nodes[y].bag.contains(v) {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            if reached != with_v.len() {
                violations.push(Violation::Disconnected {
                    vertex: h.vertex_name(v).to_string(),
                });
            }
        }
        // kind-specific cover conditions and width
        let mut width = Rat::zero();
        for node in &self.nodes {
            match self.kind {
                DecompKind::Td => {
                    let bag_width = match mode {
                        WidthMode::Integral => rat_int(integral_cover(h, &node.bag)?.0 as i64),
                        WidthMode::Fractional => fractional_cover(h, &node.bag)?.0,
                    };
                    if bag_width > width {
                        width = bag_width;
                    }
                }
                DecompKind::Ghd | DecompKind::Hd | DecompKind::Fhd => {
                    let Some(cover) = &node.cover else {
                        violations.push(Violation::MissingCover {
                            node: node.id.clone(),
                        });
                        continue;
                    };
                    if matches!(self.kind, DecompKind::Ghd | DecompKind::Hd) && !cover.is_integral()
                    {
                        violations.push(Violation::NonIntegralCover {
                            node: node.id.clone(),
                        });
                    }
                    let covered = cover.covered_set(h);
                    for v in node.bag.difference(&covered).iter() {
                        violations.push(Violation::BagVertexUncovered {
                            node: node.id.clone(),
                            vertex: h.vertex_name(v).to_string(),
                        });
                    }
                    if self.kind == DecompKind::Hd {
                        // special condition (4)
                        let idx = self
                            .nodes
                            .iter()
                            .position(|n| std::ptr::eq(n, node))
                            .unwrap();
                        let vt = self.subtree_vertices(idx);
                        for v in vt.intersection(&covered).difference(&node.bag).iter() {
                            violations.push(Violation::SpecialCondition {
                                node: node.id.clone(),
                                vertex: h.vertex_name(v).to_string(),
                            });
                        }
                    }
                    let w = cover.total_weight();
                    if w > width {
                        width = w;
                    }
                }
            }
        }
        if &width > k {
            violations.push(Violation::WidthExceeded {
                width: crate::format_rat(&width),
                bound: crate::format_rat(k),
            });
        }
        Ok(ValidationReport { violations, width })
    }

    /// Component normal form: every child subtree corresponds to exactly one
    /// component of its parent's bag (children fully inside the parent bag
    /// count as the empty-component case).
    pub fn check_compnf(&self, h: &Hypergraph) -> Result<(bool, Vec<String>)> {
        let report = self.validate(h, &rat_int(i64::MAX / 2), WidthMode::Fractional)?;
        if report.violations.iter().any(|v| {
            matches!(
                v,
                Violation::EdgeNotCovered { .. } | Violation::Disconnected { .. }
            )
        }) {
            return Err(Error::InvalidDecomposition(
                "component normal form is only defined for valid tree decompositions".into(),
            ));
        }
        let mut issues = Vec::new();
        for r in 0..self.nodes.len() {
            if self.nodes[r].children.is_empty() {
                continue;
            }
            let comps = h.components(&self.nodes[r].bag)?;
            for &s in &self.nodes[r].children {
                let vt = self.subtree_vertices(s);
                let meeting: Vec<&VertexSet> = comps
                    .iter()
                    .map(|c| &c.members)
                    .filter(|c| c.intersects(&vt))
                    .collect();
                match meeting.len() {
                    0 => {} // V(T_s) ⊆ B_r: the empty-component case
                    1 => {
                        let expect =
                            meeting[0].union(&self.nodes[r].bag.intersection(&self.nodes[s].bag));
                        if vt != expect {
                            issues.push(format!(
                                "child {} of {} does not match its component exactly",
                                self.nodes[s].id, self.nodes[r].id
                            ));
                        }
                    }
                    n => {
                        issues.push(format!(
                            "child {} of {} spans {} components of the parent bag",
                            self.nodes[s].id, self.nodes[r].id, n
                        ));
                    }
                }
            }
        }
        Ok((issues.is_empty(), issues))
    }

    /// Bag-maximization followed by component-normal-form repair: vertices
    /// covered by a node's edge cover are absorbed into its bag while
    /// connectedness permits; child subtrees spanning several components of
    /// the parent bag are split into one subtree per component with bags
    /// restricted to that component; subtrees adding nothing are dropped.
    /// Width never increases.
    pub fn normalize_ghd(&self, h: &Hypergraph) -> Result<Decomposition> {
        let own_width = self.cover_width();
        let report = self.validate(h, &own_width, WidthMode::Integral)?;
        if !report.is_valid() {
            return Err(Error::InvalidDecomposition(format!(
                "normalize-ghd needs a valid GHD: {}",
                report
            )));
        }
        let mut d = self.clone();
        let cap = 20 * (d.nodes.len() + h.n_vertices() + 4);
        for _round in 0..cap {
            let mut changed = d.maximize_bags(h);
            changed |= d.drop_redundant_subtrees();
            changed |= d.repair_one_compnf_violation(h)?;
            if !changed {
                let (ok, issues) = d.check_compnf(h)?;
                if ok {
                    return Ok(d);
                }
                return Err(Error::InvalidDecomposition(format!(
                    "normalization reached a fixpoint with CompNF violations: {}",
                    issues.join("; ")
                )));
            }
        }
        Err(Error::InvalidDecomposition(
            "normalization did not converge".into(),
        ))
    }

    fn maximize_bags(&mut self, h: &Hypergraph) -> bool {
        let mut changed = false;
        loop {
            let mut round_changed = false;
            for u in 0..self.nodes.len() {
                let Some(cover) = self.nodes[u].cover.clone() else {
                    continue;
                };
                let candidates = cover.covered_set(h).difference(&self.nodes[u].bag);
                for v in candidates.iter() {
                    let with_v = self.nodes_with_vertex(v);
                    let ok = if with_v.is_empty() {
                        true
                    } else {
                        self.neighbors(u).iter().any(|n| with_v.contains(n))
                    };
                    if ok {
                        self.nodes[u].bag.insert(v);
                        round_changed = true;
                    }
                }
            }
            if !round_changed {
                break;
            }
            changed = true;
        }
        changed
    }

    /// Drops any child subtree whose vertices all lie in the parent bag.
    fn drop_redundant_subtrees(&mut self) -> bool {
        let mut victim = None;
        'outer: for r in 0..self.nodes.len() {
            for &s in &self.nodes[r].children {
                if self.subtree_vertices(s).is_subset(&self.nodes[r].bag) {
                    victim = Some((r, s));
                    break 'outer;
                }
            }
        }
        let Some((r, s)) = victim else {
            return false;
        };
        let doomed: Vec<usize> = self.subtree(s);
        self.nodes[r].children.retain(|&c| c != s);
        self.remove_nodes(&doomed);
        // keep going until no redundant subtree remains
        self.drop_redundant_subtrees();
        true
    }

    fn remove_nodes(&mut self, doomed: &[usize]) {
        let mut keep: Vec<usize> = (0..self.nodes.len())
            .filter(|i| !doomed.contains(i))
            .collect();
        keep.sort_unstable();
        let mut remap = vec![usize::MAX; self.nodes.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let mut nodes = Vec::with_capacity(keep.len());
        for &old in &keep {
            let mut n = self.nodes[old].clone();
            n.parent = n.parent.map(|p| remap[p]);
            n.children = n
                .children
                .iter()
                .filter(|c| remap[**c] != usize::MAX)
                .map(|c| remap[*c])
                .collect();
            nodes.push(n);
        }
        self.root = remap[self.root];
        self.nodes = nodes;
    }

    fn repair_one_compnf_violation(&mut self, h: &Hypergraph) -> Result<bool> {
        // Find the violating pair closest to the root (BFS order).
        let mut order = VecDeque::from([self.root]);
        while let Some(r) = order.pop_front() {
            order.extend(self.nodes[r].children.iter().copied());
            let comps = h.components(&self.nodes[r].bag)?;
            for &s in self.nodes[r].children.clone().iter() {
                let vt = self.subtree_vertices(s);
                let meeting: Vec<VertexSet> = comps
                    .iter()
                    .map(|c| c.members.clone())
                    .filter(|c| c.intersects(&vt))
                    .collect();
                if meeting.len() <= 1 {
                    continue;
                }
                self.split_subtree(h, r, s, &meeting);
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Replaces child `s` of `r` by one tree per component in `meeting`,
    /// with bags restricted to that component plus the parent bag.
    fn split_subtree(&mut self, _h: &Hypergraph, r: usize, s: usize, meeting: &[VertexSet]) {
        let subtree: Vec<usize> = self.subtree(s);
        let parent_bag = self.nodes[r].bag.clone();
        let mut new_children: Vec<usize> = Vec::new();
        for (j, comp) in meeting.iter().enumerate() {
            let keep: Vec<usize> = subtree
                .iter()
                .copied()
                .filter(|&n| self.nodes[n].bag.intersects(comp))
                .collect();
            if keep.is_empty() {
                continue;
            }
            let allowed = comp.union(&parent_bag);
            // The kept nodes induce a connected subtree; its root is the
            // unique kept node whose parent is not kept.
            let root_in_keep = keep
                .iter()
                .copied()
                .find(|&n| match self.nodes[n].parent {
                    Some(p) => !keep.contains(&p),
                    None => true,
                })
                .expect("induced subtree has a root");
            let mut map = std::collections::HashMap::new();
            for &n in &keep {
                let idx = self.nodes.len();
                let node = DecompNode {
                    id: format!("{}@{}", self.nodes[n].id, j),
                    bag: self.nodes[n].bag.intersection(&allowed),
                    cover: self.nodes[n].cover.clone(),
                    parent: None,
                    children: Vec::new(),
                };
                self.nodes.push(node);
                map.insert(n, idx);
            }
            for &n in &keep {
                if n == root_in_keep {
                    continue;
                }
                // Attach to the closest kept ancestor to keep connectedness
                // when intermediate nodes were not kept.
                let mut p = self.nodes[n].parent;
                while let Some(q) = p {
                    if keep.contains(&q) {
                        break;
                    }
                    p = self.nodes[q].parent;
                }
                let parent_new = map[&p.expect("ancestor in keep")];
                let child_new = map[&n];
                self.nodes[child_new].parent = Some(parent_new);
                self.nodes[parent_new].children.push(child_new);
            }
            let new_root = map[&root_in_keep];
            self.nodes[new_root].parent = Some(r);
            new_children.push(new_root);
        }
        self.nodes[r].children.retain(|&c| c != s);
        self.nodes[r].children.extend(new_children);
        let doomed: Vec<usize> = subtree;
        self.remove_nodes(&doomed);
    }

    /// Critical path of `(u, e)`: the path from `u` to the closest node
    /// whose bag contains `e` entirely.
    pub fn critical_path(&self, h: &Hypergraph, u: usize, edge: usize) -> Result<Vec<usize>> {
        let Some(cover) = &self.nodes[u].cover else {
            return Err(Error::Precondition("node has no edge cover".into()));
        };
        if cover.get(edge).is_zero() {
            return Err(Error::Precondition(format!(
                "edge {} is not in the cover support at node {}",
                h.edge_name(edge),
                self.nodes[u].id
            )));
        }
        if h.edge(edge).is_subset(&self.nodes[u].bag) {
            return Err(Error::Precondition(format!(
                "edge {} is already inside the bag of node {}",
                h.edge_name(edge),
                self.nodes[u].id
            )));
        }
        let mut prev = vec![usize::MAX; self.nodes.len()];
        let mut queue = VecDeque::from([u]);
        prev[u] = u;
        while let Some(x) = queue.pop_front() {
            if h.edge(edge).is_subset(&self.nodes[x].bag) {
                let mut path = vec![x];
                let mut cur = x;
                while cur != u {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Ok(path);
            }
            for y in self.neighbors(x) {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        Err(Error::InvalidDecomposition(format!(
            "no node covers edge {}",
            h.edge_name(edge)
        )))
    }
}

#[derive(Clone, Debug)]
pub enum Violation {
    EdgeNotCovered { edge: String },
    Disconnected { vertex: String },
    MissingCover { node: String },
    NonIntegralCover { node: String },
    BagVertexUncovered { node: String, vertex: String },
    SpecialCondition { node: String, vertex: String },
    WidthExceeded { width: String, bound: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EdgeNotCovered { edge } => {
                write!(f, "edge {edge} is contained in no bag")
            }
            Violation::Disconnected { vertex } => {
                write!(f, "nodes containing vertex {vertex} are not connected")
            }
            Violation::MissingCover { node } => write!(f, "node {node} has no cover"),
            Violation::NonIntegralCover { node } => {
                write!(f, "node {node} has a non-integral cover")
            }
            Violation::BagVertexUncovered { node, vertex } => {
                write!(f, "bag vertex {vertex} at node {node} is not covered")
            }
            Violation::SpecialCondition { node, vertex } => {
                write!(
                    f,
                    "special condition fails at node {node}: covered subtree vertex {vertex} missing from bag"
                )
            }
            Violation::WidthExceeded { width, bound } => {
                write!(f, "width {width} exceeds the bound {bound}")
            }
        }
    }
}

#[derive(Debug)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub width: Rat,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid, width {}", crate::format_rat(&self.width))
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_traits::One;

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

    fn unit_cover(h: &Hypergraph, names: &[&str]) -> EdgeWeighting {
        let mut w = EdgeWeighting::new();
        for n in names {
            w.set(h.edge_id(n).unwrap(), Rat::one());
        }
        w
    }

    #[test]
    fn single_node_ghd_is_valid() {
        let g = triangle();
        let cover = unit_cover(&g, &["e1", "e2", "e3"]);
        let d = Decomposition::single(DecompKind::Ghd, "u0", g.all_vertices(), Some(cover));
        let r = d.validate(&g, &rat_int(3), WidthMode::Integral).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.width, rat_int(3));
        let r2 = d.validate(&g, &rat_int(2), WidthMode::Integral).unwrap();
        assert!(!r2.is_valid());
    }

    #[test]
    fn connectedness_violation_detected() {
        // path a-b-c-d; vertex a appears at both ends but not in the middle
        let g = h(&[
            ("e1", &["a", "b"]),
            ("e2", &["b", "c"]),
            ("e3", &["c", "d"]),
        ]);
        let mut d = Decomposition::single(
            DecompKind::Td,
            "u0",
            g.vertex_set_of(&["a", "b"]).unwrap(),
            None,
        );
        let m = d.add_child(0, "u1", g.vertex_set_of(&["b", "c"]).unwrap(), None);
        d.add_child(m, "u2", g.vertex_set_of(&["c", "d", "a"]).unwrap(), None);
        let r = d.validate(&g, &rat_int(5), WidthMode::Integral).unwrap();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Disconnected { .. })));
    }

    #[test]
    fn edge_coverage_violation_detected() {
        let g = triangle();
        let d = Decomposition::single(
            DecompKind::Td,
            "u0",
            g.vertex_set_of(&["a", "b"]).unwrap(),
            None,
        );
        let r = d.validate(&g, &rat_int(5), WidthMode::Integral).unwrap();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::EdgeNotCovered { .. })));
    }

    #[test]
    fn fhd_cover_checked_exactly() {
        let g = triangle();
        let mut cover = EdgeWeighting::new();
        for e in 0..3 {
            cover.set(e, rat(1, 2));
        }
        let d = Decomposition::single(DecompKind::Fhd, "u0", g.all_vertices(), Some(cover));
        let r = d.validate(&g, &rat(3, 2), WidthMode::Fractional).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.width, rat(3, 2));
    }

    #[test]
    fn hd_special_condition() {
        // root bag {a,b} covered by e1={a,b,c}; child bag {b,c}: the root's
        // cover reaches c which appears below -> special condition fails.
        let g = h(&[("e1", &["a", "b", "c"]), ("e2", &["b", "c"])]);
        let mut d = Decomposition::single(
            DecompKind::Hd,
            "u0",
            g.vertex_set_of(&["a", "b"]).unwrap(),
            Some(unit_cover(&g, &["e1"])),
        );
        d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["b", "c"]).unwrap(),
            Some(unit_cover(&g, &["e2"])),
        );
        let r = d.validate(&g, &rat_int(1), WidthMode::Integral).unwrap();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::SpecialCondition { .. })));
    }

    #[test]
    fn compnf_single_node_true() {
        let g = triangle();
        let d = Decomposition::single(DecompKind::Td, "u0", g.all_vertices(), None);
        let (ok, _) = d.check_compnf(&g).unwrap();
        assert!(ok);
    }

    #[test]
    fn compnf_detects_spanning_child() {
        // star: center m, leaves x and y; the root bag {m} has components
        // {x} and {y}; one child covering both violates CompNF.
        let g = h(&[("e1", &["m", "x"]), ("e2", &["m", "y"])]);
        let mut d =
            Decomposition::single(DecompKind::Td, "u0", g.vertex_set_of(&["m"]).unwrap(), None);
        d.add_child(0, "u1", g.vertex_set_of(&["m", "x", "y"]).unwrap(), None);
        let (ok, issues) = d.check_compnf(&g).unwrap();
        assert!(!ok);
        assert_eq!(issues.len(), 1);
    }

    #[test]
    fn normalize_splits_components() {
        let g = h(&[("e1", &["m", "x"]), ("e2", &["m", "y"])]);
        let mut d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.vertex_set_of(&["m"]).unwrap(),
            Some(unit_cover(&g, &["e1"])),
        );
        d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["m", "x", "y"]).unwrap(),
            Some(unit_cover(&g, &["e1", "e2"])),
        );
        let n = d.normalize_ghd(&g).unwrap();
        let (ok, _) = n.check_compnf(&g).unwrap();
        assert!(ok);
        assert!(n.cover_width() <= d.cover_width());
        let r = n
            .validate(&g, &d.cover_width(), WidthMode::Integral)
            .unwrap();
        assert!(r.is_valid());
    }

    #[test]
    fn normalize_absorbs_and_merges() {
        // two-node GHD where the child bag can absorb a covered vertex,
        // after which the child adds nothing and is dropped.
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let mut d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.all_vertices(),
            Some(unit_cover(&g, &["e1", "e2"])),
        );
        d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["b", "c"]).unwrap(),
            Some(unit_cover(&g, &["e2"])),
        );
        let n = d.normalize_ghd(&g).unwrap();
        assert_eq!(n.n_nodes(), 1);
        assert_eq!(n.nodes[0].bag, g.all_vertices());
    }

    #[test]
    fn normalize_keeps_already_normal() {
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let mut d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.vertex_set_of(&["a", "b"]).unwrap(),
            Some(unit_cover(&g, &["e1"])),
        );
        d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["b", "c"]).unwrap(),
            Some(unit_cover(&g, &["e2"])),
        );
        let n = d.normalize_ghd(&g).unwrap();
        assert_eq!(n.n_nodes(), 2);
        let bags: Vec<VertexSet> = n.nodes.iter().map(|x| x.bag.clone()).collect();
        assert!(bags.contains(&g.vertex_set_of(&["a", "b"]).unwrap()));
        assert!(bags.contains(&g.vertex_set_of(&["b", "c"]).unwrap()));
    }

    #[test]
    fn critical_path_length_one() {
        // e2 in the root cover but only covered fully at the child
        let g = h(&[("e1", &["a", "b"]), ("e2", &["b", "c"])]);
        let mut d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.vertex_set_of(&["a", "b"]).unwrap(),
            Some(unit_cover(&g, &["e1", "e2"])),
        );
        d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["b", "c"]).unwrap(),
            Some(unit_cover(&g, &["e2"])),
        );
        let e2 = g.edge_id("e2").unwrap();
        let path = d.critical_path(&g, 0, e2).unwrap();
        assert_eq!(path, vec![0, 1]);
    }

    #[test]
    fn critical_path_two_levels() {
        // chain of three bags; the root cover uses an edge only covered two
        // levels down, as in the configuration around a bag-maximal GHD's
        // critical path of length 2.
        let g = h(&[
            ("e1", &["a", "p"]),
            ("e2", &["c", "p"]),
            ("e4", &["p", "q"]),
        ]);
        let mut d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.vertex_set_of(&["a", "p"]).unwrap(),
            Some(unit_cover(&g, &["e1", "e4"])),
        );
        let m = d.add_child(
            0,
            "u1",
            g.vertex_set_of(&["c", "p"]).unwrap(),
            Some(unit_cover(&g, &["e2"])),
        );
        d.add_child(
            m,
            "u2",
            g.vertex_set_of(&["p", "q"]).unwrap(),
            Some(unit_cover(&g, &["e4"])),
        );
        let e4 = g.edge_id("e4").unwrap();
        let path = d.critical_path(&g, 0, e4).unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(path[0], 0);
        assert_eq!(path[2], 2);
    }

    #[test]
    fn critical_path_rejects_covered_edge() {
        let g = h(&[("e1", &["a", "b"])]);
        let d = Decomposition::single(
            DecompKind::Ghd,
            "u0",
            g.all_vertices(),
            Some(unit_cover(&g, &["e1"])),
        );
        assert!(d.critical_path(&g, 0, 0).is_err());
    }
}
