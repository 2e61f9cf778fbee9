//! Candidate tree decompositions in component normal form: block
//! enumeration, the marking decision procedure, and extraction of a witness
//! decomposition from the recorded basis certificates.

use crate::decomp::{DecompKind, Decomposition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use std::collections::HashMap;

/// A (head, component) pair; the component is empty or one
/// `[head]`-component of the hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Index into the candidate bag family.
    pub head: usize,
    pub component: VertexSet,
}

/// Certificate recorded when a block gets marked: the bag that served as
/// basis together with the sub-blocks whose markings justified it.
#[derive(Clone, Debug)]
pub struct BasisCertificate {
    pub block: usize,
    pub basis: usize,
    pub sub_blocks: Vec<usize>,
}

/// Full outcome of the marking run, for diagnostics and tests.
pub struct CtdRun {
    pub bags: Vec<VertexSet>,
    pub blocks: Vec<Block>,
    pub marked: Vec<bool>,
    pub certificates: Vec<Option<BasisCertificate>>,
    pub accepting_bag: Option<usize>,
}

/// All blocks headed by members of `bags`: for each bag the empty block
/// plus one block per component, in deterministic order.
pub fn enumerate_blocks(h: &Hypergraph, bags: &[VertexSet]) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    for (i, b) in bags.iter().enumerate() {
        if b.universe() != h.n_vertices() {
            return Err(Error::Precondition(
                "candidate bag is not a vertex set of this hypergraph".into(),
            ));
        }
        blocks.push(Block {
            head: i,
            component: h.empty_vertex_set(),
        });
        for c in h.components(b)? {
            blocks.push(Block {
                head: i,
                component: c.members,
            });
        }
    }
    Ok(blocks)
}

/// Decides whether a CompNF tree decomposition using only the given bags
/// exists, and extracts one if so. "None" is an answer, not an error.
pub fn ctd_decide(h: &Hypergraph, bags: &[VertexSet]) -> Result<Option<Decomposition>> {
    let run = ctd_run(h, bags)?;
    extract(&run)
}

/// The marking loop. Blocks with empty components start marked; a block
/// (B,C) gets marked once some other bag X has all blocks (X,Y) <= (B,C)
/// marked, C inside X plus those Y, and every edge meeting C inside it too.
/// Certificates are recorded at marking time so extraction replays them.
pub fn ctd_run(h: &Hypergraph, bags: &[VertexSet]) -> Result<CtdRun> {
    let bags: Vec<VertexSet> = {
        // Dedup, preserving first occurrence.
        let mut seen = std::collections::HashSet::new();
        bags.iter()
            .filter(|b| seen.insert((*b).clone()))
            .cloned()
            .collect()
    };
    let blocks = enumerate_blocks(h, &bags)?;
    let mut by_head: Vec<Vec<usize>> = vec![Vec::new(); bags.len()];
    for (i, b) in blocks.iter().enumerate() {
        by_head[b.head].push(i);
    }
    let mut marked: Vec<bool> = blocks.iter().map(|b| b.component.is_empty()).collect();
    let mut certificates: Vec<Option<BasisCertificate>> = vec![None; blocks.len()];

    // Precompute per block b and candidate head X: the sub-blocks
    // (X,Y) <= (B,C) and whether the basis conditions on vertices and edges
    // hold; only the markings of the sub-blocks change over time.
    struct Candidate {
        block: usize,
        basis: usize,
        sub_blocks: Vec<usize>,
        missing: usize,
    }
    let mut candidates: Vec<Candidate> = Vec::new();
    let mut waiting: HashMap<usize, Vec<usize>> = HashMap::new(); // sub-block -> candidate ids
    let mut ready: Vec<usize> = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        if marked[bi] {
            continue;
        }
        let b_union_c = bags[block.head].union(&block.component);
        for (x, bag_x) in bags.iter().enumerate() {
            if x == block.head || !bag_x.is_subset(&b_union_c) {
                continue;
            }
            let mut sub_blocks = Vec::new();
            let mut v_x = bag_x.clone();
            for &sb in &by_head[x] {
                let y = &blocks[sb].component;
                // (X,Y) <= (B,C) iff X ∪ Y ⊆ B ∪ C and Y ⊆ C; X ⊆ B ∪ C
                // holds already.
                if y.is_subset(&block.component) && y.is_subset(&b_union_c) {
                    sub_blocks.push(sb);
                    v_x.union_with(y);
                }
            }
            if !block.component.is_subset(&v_x) {
                continue;
            }
            let edges_ok = h
                .edge_sets()
                .iter()
                .all(|e| !e.intersects(&block.component) || e.is_subset(&v_x));
            if !edges_ok {
                continue;
            }
            let missing = sub_blocks.iter().filter(|&&sb| !marked[sb]).count();
            let id = candidates.len();
            if missing == 0 {
                ready.push(id);
            }
            for &sb in &sub_blocks {
                if !marked[sb] {
                    waiting.entry(sb).or_default().push(id);
                }
            }
            candidates.push(Candidate {
                block: bi,
                basis: x,
                sub_blocks,
                missing,
            });
        }
    }

    // Propagate markings.
    while let Some(cid) = ready.pop() {
        let c = &candidates[cid];
        let bi = c.block;
        if marked[bi] {
            continue;
        }
        marked[bi] = true;
        certificates[bi] = Some(BasisCertificate {
            block: bi,
            basis: c.basis,
            sub_blocks: c.sub_blocks.clone(),
        });
        if let Some(deps) = waiting.get(&bi) {
            for &did in deps {
                let d = &mut candidates[did];
                d.missing -= 1;
                if d.missing == 0 && !marked[d.block] {
                    ready.push(did);
                }
            }
        }
    }

    let accepting_bag = (0..bags.len()).find(|&i| by_head[i].iter().all(|&b| marked[b]));
    Ok(CtdRun {
        bags,
        blocks,
        marked,
        certificates,
        accepting_bag,
    })
}

/// Rebuilds the CompNF TD from an accepting run: the root carries the
/// accepting bag; each of its blocks unfolds through its certificate into
/// the union-of-subtrees construction.
fn extract(run: &CtdRun) -> Result<Option<Decomposition>> {
    let Some(root_bag) = run.accepting_bag else {
        return Ok(None);
    };
    let mut d = Decomposition::single(DecompKind::Td, "n0", run.bags[root_bag].clone(), None);
    let mut counter = 1usize;
    let root_blocks: Vec<usize> = run
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.head == root_bag && !b.component.is_empty())
        .map(|(i, _)| i)
        .collect();
    for bi in root_blocks {
        attach_block(run, &mut d, 0, bi, &mut counter)?;
    }
    Ok(Some(d))
}

/// Hangs the decomposition of block `bi`'s component below node `at`
/// (whose bag is the block's head).
fn attach_block(
    run: &CtdRun,
    d: &mut Decomposition,
    at: usize,
    bi: usize,
    counter: &mut usize,
) -> Result<()> {
    if run.blocks[bi].component.is_empty() {
        return Ok(());
    }
    let cert = run.certificates[bi].as_ref().ok_or_else(|| {
        Error::InvalidDecomposition("accepting run lacks a certificate for a marked block".into())
    })?;
    let x_node = d.add_child(
        at,
        &format!("n{}", *counter),
        run.bags[cert.basis].clone(),
        None,
    );
    *counter += 1;
    for &sb in &cert.sub_blocks {
        attach_block(run, d, x_node, sb, counter)?;
    }
    Ok(())
}
