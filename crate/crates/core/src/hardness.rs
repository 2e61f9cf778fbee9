//! Hard-instance constructions: the two-sided gadget, the 3SAT reduction
//! emitting hypergraphs whose width-2 decomposability mirrors
//! satisfiability, the intended witness GHD for satisfiable inputs, and
//! width lifting by fresh cliques or cycles.

use crate::covers::EdgeWeighting;
use crate::decomp::{DecompKind, Decomposition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Rat;
use num_traits::One;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lit {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

#[derive(Clone, Debug)]
pub struct CnfFormula {
    pub n_vars: usize,
    pub clauses: Vec<[Lit; 3]>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<Self> {
        if clauses.is_empty() {
            return Err(Error::Precondition(
                "formula needs at least one clause".into(),
            ));
        }
        for c in &clauses {
            for l in c {
                if l.var == 0 || l.var > n_vars {
                    return Err(Error::Precondition(format!(
                        "literal variable {} out of range 1..={}",
                        l.var, n_vars
                    )));
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    /// Index (1-based) of the first clause falsified by `sigma`, if any.
    pub fn first_falsified(&self, sigma: &[bool]) -> Option<usize> {
        self.clauses
            .iter()
            .position(|c| {
                !c.iter()
                    .any(|l| sigma.get(l.var - 1).copied().unwrap_or(false) == l.positive)
            })
            .map(|i| i + 1)
    }
}

/// DIMACS CNF with exactly three literals per clause.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut n_vars = None;
    let mut lits: Vec<i64> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "cnf" {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: "expected 'p cnf <vars> <clauses>'".into(),
                });
            }
            n_vars = Some(parts[1].parse::<usize>().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: "bad variable count".into(),
            })?);
            continue;
        }
        for tok in line.split_whitespace() {
            lits.push(tok.parse::<i64>().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("bad literal {tok:?}"),
            })?);
        }
    }
    let Some(n_vars) = n_vars else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing 'p cnf' header".into(),
        });
    };
    let mut clauses = Vec::new();
    let mut cur: Vec<Lit> = Vec::new();
    for l in lits {
        if l == 0 {
            let c: [Lit; 3] = cur.clone().try_into().map_err(|_| {
                Error::Precondition(format!(
                    "clause {} has {} literals, need exactly 3",
                    clauses.len() + 1,
                    cur.len()
                ))
            })?;
            clauses.push(c);
            cur.clear();
        } else {
            cur.push(Lit {
                var: l.unsigned_abs() as usize,
                positive: l > 0,
            });
        }
    }
    if !cur.is_empty() {
        return Err(Error::Precondition(
            "trailing clause not terminated by 0".into(),
        ));
    }
    CnfFormula::new(n_vars, clauses)
}

const GADGET_NAMES: [&str; 8] = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"];
const GADGET_NAMES_PRIMED: [&str; 8] = ["ap1", "ap2", "bp1", "bp2", "cp1", "cp2", "dp1", "dp2"];

/// The 16 gadget edges over the given corner names: three layers of
/// crossing binary edges whose M1/M2 attachments force a fixed bag shape in
/// every width-2 decomposition.
fn gadget_edges(
    names: &[&str; 8],
    prefix: &str,
    m1: &[String],
    m2: &[String],
) -> Vec<(String, Vec<String>)> {
    let [a1, a2, b1, b2, c1, c2, d1, d2] = names.map(|s| s.to_string());
    let with_m = |base: Vec<String>, m: &[String]| {
        let mut v = base;
        v.extend(m.iter().cloned());
        v
    };
    vec![
        // layer A
        (
            format!("eA{prefix}1"),
            with_m(vec![a1.clone(), b1.clone()], m1),
        ),
        (
            format!("eA{prefix}2"),
            with_m(vec![a2.clone(), b2.clone()], m2),
        ),
        (format!("eA{prefix}3"), vec![a1.clone(), b2.clone()]),
        (format!("eA{prefix}4"), vec![a2.clone(), b1.clone()]),
        (format!("eA{prefix}5"), vec![a1.clone(), a2.clone()]),
        // layer B
        (
            format!("eB{prefix}1"),
            with_m(vec![b1.clone(), c1.clone()], m1),
        ),
        (
            format!("eB{prefix}2"),
            with_m(vec![b2.clone(), c2.clone()], m2),
        ),
        (format!("eB{prefix}3"), vec![b1.clone(), c2.clone()]),
        (format!("eB{prefix}4"), vec![b2.clone(), c1.clone()]),
        (format!("eB{prefix}5"), vec![b1.clone(), b2.clone()]),
        (format!("eB{prefix}6"), vec![c1.clone(), c2.clone()]),
        // layer C
        (
            format!("eC{prefix}1"),
            with_m(vec![c1.clone(), d1.clone()], m1),
        ),
        (
            format!("eC{prefix}2"),
            with_m(vec![c2.clone(), d2.clone()], m2),
        ),
        (format!("eC{prefix}3"), vec![c1.clone(), d2.clone()]),
        (format!("eC{prefix}4"), vec![c2, d1.clone()]),
        (format!("eC{prefix}5"), vec![d1, d2]),
    ]
}

/// Builds the stand-alone gadget over fresh corners a1,a2,b1,b2,c1,c2,d1,d2
/// with the given attachment sets.
pub fn build_gadget(m1: &[String], m2: &[String]) -> Result<Hypergraph> {
    let m1_set: BTreeSet<&String> = m1.iter().collect();
    let m2_set: BTreeSet<&String> = m2.iter().collect();
    if m1_set.len() != m1.len() || m2_set.len() != m2.len() {
        return Err(Error::Precondition(
            "attachment sets contain duplicates".into(),
        ));
    }
    if m1_set.intersection(&m2_set).next().is_some() {
        return Err(Error::Precondition("M1 and M2 must be disjoint".into()));
    }
    for name in GADGET_NAMES {
        if m1_set.contains(&name.to_string()) || m2_set.contains(&name.to_string()) {
            return Err(Error::Precondition(format!(
                "attachment sets must avoid the gadget vertex {name}"
            )));
        }
    }
    let edges = gadget_edges(&GADGET_NAMES, "", m1, m2);
    let spec: Vec<(&str, Vec<&str>)> = edges
        .iter()
        .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
        .collect();
    Hypergraph::from_edge_list(&spec)
}

/// Naming and index bookkeeping for the reduction, shared by the builder
/// and the witness construction.
#[derive(Clone, Debug)]
pub struct ReductionLayout {
    pub n: usize,
    pub m: usize,
}

impl ReductionLayout {
    /// Lexicographic positions (1,1)..(2n+3,m).
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=(2 * self.n + 3) {
            for j in 1..=self.m {
                out.push((i, j));
            }
        }
        out
    }

    /// All positions except the last.
    pub fn positions_without_max(&self) -> Vec<(usize, usize)> {
        let mut p = self.positions();
        p.pop();
        p
    }

    pub fn max_position(&self) -> (usize, usize) {
        (2 * self.n + 3, self.m)
    }

    pub fn s_name(q: (usize, usize), k: usize) -> String {
        format!("s_{}_{}_{}", q.0, q.1, k)
    }

    pub fn a_name(p: (usize, usize)) -> String {
        format!("a_{}_{}", p.0, p.1)
    }

    pub fn ap_name(p: (usize, usize)) -> String {
        format!("ap_{}_{}", p.0, p.1)
    }

    pub fn y_name(i: usize) -> String {
        format!("y{i}")
    }

    pub fn yp_name(i: usize) -> String {
        format!("yp{i}")
    }

    pub fn e_p_name(p: (usize, usize)) -> String {
        format!("e_{}_{}", p.0, p.1)
    }

    pub fn e_lit_name(p: (usize, usize), k: usize, side: usize) -> String {
        format!("e_{}_{}_{}_{}", p.0, p.1, k, side)
    }

    /// All S vertices: Q x {1,2,3} with Q the positions plus the three
    /// special places.
    pub fn s_vertices(&self) -> Vec<String> {
        let mut qs = self.positions();
        qs.extend([(0, 1), (0, 0), (1, 0)]);
        let mut out = Vec::new();
        for q in qs {
            for k in 1..=3 {
                out.push(Self::s_name(q, k));
            }
        }
        out
    }

    fn s_group(&self, q: (usize, usize)) -> Vec<String> {
        (1..=3).map(|k| Self::s_name(q, k)).collect()
    }

    fn s_without_group(&self, q: (usize, usize)) -> Vec<String> {
        let group: BTreeSet<String> = self.s_group(q).into_iter().collect();
        self.s_vertices()
            .into_iter()
            .filter(|s| !group.contains(s))
            .collect()
    }

    fn s_without_single(&self, p: (usize, usize), k: usize) -> Vec<String> {
        let drop = Self::s_name(p, k);
        self.s_vertices()
            .into_iter()
            .filter(|s| *s != drop)
            .collect()
    }

    pub fn y_vertices(&self) -> Vec<String> {
        (1..=self.n).map(Self::y_name).collect()
    }

    pub fn yp_vertices(&self) -> Vec<String> {
        (1..=self.n).map(Self::yp_name).collect()
    }

    pub fn a_vertices(&self) -> Vec<String> {
        self.positions().into_iter().map(Self::a_name).collect()
    }

    pub fn ap_vertices(&self) -> Vec<String> {
        self.positions().into_iter().map(Self::ap_name).collect()
    }

    /// {a_q : q >= p} in lexicographic position order.
    fn a_from(&self, p: (usize, usize)) -> Vec<String> {
        self.positions()
            .into_iter()
            .filter(|q| *q >= p)
            .map(Self::a_name)
            .collect()
    }

    /// {a'_q : q <= p}.
    fn ap_to(&self, p: (usize, usize)) -> Vec<String> {
        self.positions()
            .into_iter()
            .filter(|q| *q <= p)
            .map(Self::ap_name)
            .collect()
    }

    pub fn m1(&self) -> Vec<String> {
        let mut v = self.s_without_group((0, 1));
        v.push("z1".into());
        v
    }

    pub fn m2(&self) -> Vec<String> {
        let mut v = self.y_vertices();
        v.extend(self.s_group((0, 1)));
        v.push("z2".into());
        v
    }

    pub fn m1_primed(&self) -> Vec<String> {
        let mut v = self.s_without_group((1, 0));
        v.push("z1".into());
        v
    }

    pub fn m2_primed(&self) -> Vec<String> {
        let mut v = self.yp_vertices();
        v.extend(self.s_group((1, 0)));
        v.push("z2".into());
        v
    }

    /// The intended complementary pairing: for every pair (f, g), f meets S
    /// in the complement of the S-part that g meets.
    pub fn complementary_pairs(&self) -> Vec<(String, String)> {
        let mut pairs = Vec::new();
        for layer in ["A", "B", "C"] {
            pairs.push((format!("e{layer}1"), format!("e{layer}2")));
            pairs.push((format!("e{layer}p1"), format!("e{layer}p2")));
        }
        for p in self.positions_without_max() {
            for k in 1..=3 {
                pairs.push((Self::e_lit_name(p, k, 0), Self::e_lit_name(p, k, 1)));
            }
        }
        pairs.push(("e0_0_0".into(), "e1_0_0".into()));
        pairs.push(("e0_max".into(), "e1_max".into()));
        pairs
    }
}

/// The full reduction from a 3CNF formula: two gadget copies sharing S and
/// z1/z2, the ladder edges over A and A', one pair of literal edges per
/// position and literal, and the four boundary edges.
pub fn reduce_3sat(phi: &CnfFormula) -> Result<(Hypergraph, ReductionLayout)> {
    let layout = ReductionLayout {
        n: phi.n_vars,
        m: phi.clauses.len(),
    };
    let mut edges: Vec<(String, Vec<String>)> = Vec::new();
    edges.extend(gadget_edges(&GADGET_NAMES, "", &layout.m1(), &layout.m2()));
    edges.extend(gadget_edges(
        &GADGET_NAMES_PRIMED,
        "p",
        &layout.m1_primed(),
        &layout.m2_primed(),
    ));
    // ladder edges e_p = A'_p ∪ Ā_p
    for p in layout.positions_without_max() {
        let mut vs = layout.ap_to(p);
        vs.extend(layout.a_from(p));
        edges.push((ReductionLayout::e_p_name(p), vs));
    }
    // variable edges {y_i, y'_i}
    for i in 1..=layout.n {
        edges.push((
            format!("e_y{i}"),
            vec![ReductionLayout::y_name(i), ReductionLayout::yp_name(i)],
        ));
    }
    // literal edges
    for p in layout.positions_without_max() {
        let (_, j) = p;
        for (k, lit) in phi.clauses[j - 1].iter().enumerate() {
            let k = k + 1;
            let mut side0 = layout.a_from(p);
            side0.extend(layout.s_without_single(p, k));
            if lit.positive {
                side0.extend(layout.y_vertices());
            } else {
                side0.extend(
                    layout
                        .y_vertices()
                        .into_iter()
                        .filter(|y| *y != ReductionLayout::y_name(lit.var)),
                );
            }
            side0.push("z1".into());
            edges.push((ReductionLayout::e_lit_name(p, k, 0), side0));

            let mut side1 = layout.ap_to(p);
            side1.push(ReductionLayout::s_name(p, k));
            if lit.positive {
                side1.extend(
                    layout
                        .yp_vertices()
                        .into_iter()
                        .filter(|y| *y != ReductionLayout::yp_name(lit.var)),
                );
            } else {
                side1.extend(layout.yp_vertices());
            }
            side1.push("z2".into());
            edges.push((ReductionLayout::e_lit_name(p, k, 1), side1));
        }
    }
    // boundary edges
    let max = layout.max_position();
    {
        let mut vs = vec!["a1".to_string()];
        vs.extend(layout.a_vertices());
        vs.extend(layout.s_without_group((0, 0)));
        vs.extend(layout.y_vertices());
        vs.push("z1".into());
        edges.push(("e0_0_0".into(), vs));
    }
    {
        let mut vs = layout.s_group((0, 0));
        vs.extend(layout.yp_vertices());
        vs.push("z2".into());
        edges.push(("e1_0_0".into(), vs));
    }
    {
        let mut vs = layout.s_without_group(max);
        vs.extend(layout.y_vertices());
        vs.push("z1".into());
        edges.push(("e0_max".into(), vs));
    }
    {
        let mut vs = vec!["ap1".to_string()];
        vs.extend(layout.ap_vertices());
        vs.extend(layout.s_group(max));
        vs.extend(layout.yp_vertices());
        vs.push("z2".into());
        edges.push(("e1_max".into(), vs));
    }
    let spec: Vec<(&str, Vec<&str>)> = edges
        .iter()
        .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
        .collect();
    Ok((Hypergraph::from_edge_list(&spec)?, layout))
}

/// The path-shaped witness GHD of width 2 for a satisfiable input: three
/// gadget nodes, the boundary node, one node per ladder position covered by
/// the first satisfied literal of its clause, the opposite boundary node,
/// and the primed gadget nodes.
pub fn intended_ghd(
    h: &Hypergraph,
    layout: &ReductionLayout,
    phi: &CnfFormula,
    sigma: &[bool],
) -> Result<Decomposition> {
    if sigma.len() != phi.n_vars {
        return Err(Error::Precondition(format!(
            "assignment covers {} variables, formula has {}",
            sigma.len(),
            phi.n_vars
        )));
    }
    if let Some(clause) = phi.first_falsified(sigma) {
        return Err(Error::Unsatisfied(clause));
    }
    // first satisfied literal per clause (lowest k)
    let k_of_clause: Vec<usize> = phi
        .clauses
        .iter()
        .map(|c| {
            1 + c
                .iter()
                .position(|l| sigma[l.var - 1] == l.positive)
                .expect("satisfiable clause")
        })
        .collect();
    let z: Vec<String> = (1..=layout.n)
        .map(|i| {
            if sigma[i - 1] {
                ReductionLayout::y_name(i)
            } else {
                ReductionLayout::yp_name(i)
            }
        })
        .collect();
    let set = |names: Vec<String>| h.vertex_set_of(&names);
    let cover = |names: [&str; 2]| -> Result<EdgeWeighting> {
        let mut w = EdgeWeighting::new();
        for n in names {
            let e = h
                .edge_id(n)
                .ok_or_else(|| Error::UnknownEdge(n.to_string()))?;
            w.set(e, Rat::one());
        }
        Ok(w)
    };
    let s_all = layout.s_vertices();
    let ys = layout.y_vertices();
    let yps = layout.yp_vertices();
    let zs = ["z1".to_string(), "z2".to_string()];
    let gadget_bag = |corners: [&str; 4], side: &[String]| -> Vec<String> {
        let mut v: Vec<String> = corners.iter().map(|s| s.to_string()).collect();
        v.extend(side.iter().cloned());
        v.extend(s_all.iter().cloned());
        v.extend(zs.iter().cloned());
        v
    };
    // u_C
    let mut d = Decomposition::single(
        DecompKind::Ghd,
        "u_C",
        set(gadget_bag(["d1", "d2", "c1", "c2"], &ys))?,
        Some(cover(["eC1", "eC2"])?),
    );
    let mut tail = 0;
    let push = |d: &mut Decomposition,
                tail: &mut usize,
                id: &str,
                bag: Vec<String>,
                c: [&str; 2]|
     -> Result<()> {
        let idx = d.add_child(*tail, id, set(bag)?, Some(cover(c)?));
        *tail = idx;
        Ok(())
    };
    push(
        &mut d,
        &mut tail,
        "u_B",
        gadget_bag(["c1", "c2", "b1", "b2"], &ys),
        ["eB1", "eB2"],
    )?;
    push(
        &mut d,
        &mut tail,
        "u_A",
        gadget_bag(["b1", "b2", "a1", "a2"], &ys),
        ["eA1", "eA2"],
    )?;
    {
        let mut bag = vec!["a1".to_string()];
        bag.extend(layout.a_vertices());
        bag.extend(ys.iter().cloned());
        bag.extend(s_all.iter().cloned());
        bag.extend(z.iter().cloned());
        bag.extend(zs.iter().cloned());
        push(&mut d, &mut tail, "u_min-1", bag, ["e0_0_0", "e1_0_0"])?;
    }
    for p in layout.positions_without_max() {
        let (_, j) = p;
        let k = k_of_clause[j - 1];
        let mut bag = layout.ap_to(p);
        bag.extend(layout.a_from(p));
        bag.extend(s_all.iter().cloned());
        bag.extend(z.iter().cloned());
        bag.extend(zs.iter().cloned());
        let c0 = ReductionLayout::e_lit_name(p, k, 0);
        let c1 = ReductionLayout::e_lit_name(p, k, 1);
        push(
            &mut d,
            &mut tail,
            &format!("u_({},{})", p.0, p.1),
            bag,
            [c0.as_str(), c1.as_str()],
        )?;
    }
    {
        let mut bag = vec!["ap1".to_string()];
        bag.extend(layout.ap_vertices());
        bag.extend(yps.iter().cloned());
        bag.extend(s_all.iter().cloned());
        bag.extend(z.iter().cloned());
        bag.extend(zs.iter().cloned());
        push(&mut d, &mut tail, "u_max", bag, ["e0_max", "e1_max"])?;
    }
    push(
        &mut d,
        &mut tail,
        "up_A",
        gadget_bag(["ap1", "ap2", "bp1", "bp2"], &yps),
        ["eAp1", "eAp2"],
    )?;
    push(
        &mut d,
        &mut tail,
        "up_B",
        gadget_bag(["bp1", "bp2", "cp1", "cp2"], &yps),
        ["eBp1", "eBp2"],
    )?;
    push(
        &mut d,
        &mut tail,
        "up_C",
        gadget_bag(["cp1", "cp2", "dp1", "dp2"], &yps),
        ["eCp1", "eCp2"],
    )?;
    Ok(d)
}

#[derive(Clone, Copy, Debug)]
pub enum Shift {
    Integer(usize),
    /// r/q with r > q > 0.
    Rational {
        r: usize,
        q: usize,
    },
}

/// Raises both widths by the shift: a fresh 2l-clique (integer case) or r
/// fresh vertices carrying the r cyclic q-element edges (rational case),
/// plus binary edges joining every fresh vertex to every old vertex.
pub fn lift_width(h: &Hypergraph, shift: Shift) -> Result<Hypergraph> {
    let fresh_count = match shift {
        Shift::Integer(l) => {
            if l == 0 {
                return Err(Error::Precondition("integer shift must be >= 1".into()));
            }
            2 * l
        }
        Shift::Rational { r, q } => {
            if !(r > q && q > 0) {
                return Err(Error::Precondition(
                    "rational shift r/q needs r > q > 0".into(),
                ));
            }
            r
        }
    };
    let fresh: Vec<String> = (1..=fresh_count).map(|i| format!("lift_v{i}")).collect();
    for f in &fresh {
        if h.vertex_id(f).is_some() {
            return Err(Error::Precondition(format!(
                "vertex name {f} already taken; lift the original instance first"
            )));
        }
    }
    let mut edges: Vec<(String, Vec<String>)> = (0..h.n_edges())
        .map(|e| {
            (
                h.edge_name(e).to_string(),
                h.edge(e)
                    .iter()
                    .map(|v| h.vertex_name(v).to_string())
                    .collect(),
            )
        })
        .collect();
    match shift {
        Shift::Integer(_) => {
            for i in 0..fresh.len() {
                for j in i + 1..fresh.len() {
                    edges.push((
                        format!("lift_e{}_{}", i + 1, j + 1),
                        vec![fresh[i].clone(), fresh[j].clone()],
                    ));
                }
            }
        }
        Shift::Rational { r, q } => {
            for i in 0..r {
                let cycle: Vec<String> = (0..q).map(|d| fresh[(i + d) % r].clone()).collect();
                edges.push((format!("lift_e{}", i + 1), cycle));
            }
        }
    }
    for (i, f) in fresh.iter().enumerate() {
        for v in 0..h.n_vertices() {
            edges.push((
                format!("lift_c{}_{}", i + 1, h.vertex_name(v)),
                vec![f.clone(), h.vertex_name(v).to_string()],
            ));
        }
    }
    let spec: Vec<(&str, Vec<&str>)> = edges
        .iter()
        .map(|(n, vs)| (n.as_str(), vs.iter().map(|s| s.as_str()).collect()))
        .collect();
    Hypergraph::from_edge_list(&spec)
}
