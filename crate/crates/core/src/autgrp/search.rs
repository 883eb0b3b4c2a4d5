use std::time::{Duration, Instant};

use super::partition::{ColoredPartition, Refiner};
use crate::error::{Error, Result};
use crate::graphcore::Graph;
use crate::permgroup::{orbit_labels, Permutation};

/// One node of the first path: the equitable partition before
/// individualization, the target cell, the chosen vertex and the resulting
/// trace.
struct PathNode {
    part: ColoredPartition,
    target: usize,
    target_len: usize,
    chosen: usize,
    trace: u64,
    cells_after: usize,
}

/// The leftmost root-to-leaf path of the search tree of a graph.
pub(crate) struct FirstPath {
    root_trace: u64,
    root_cells: usize,
    nodes: Vec<PathNode>,
    leaf: Vec<u32>,
}

pub(crate) struct Deadline {
    at: Instant,
    budget: Duration,
}

impl Deadline {
    pub(crate) fn new(budget: Duration) -> Self {
        Deadline { at: Instant::now() + budget, budget }
    }

    fn check(&self) -> Result<()> {
        if Instant::now() > self.at {
            Err(Error::Timeout(self.budget.as_secs()))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn root(refiner: &mut Refiner, colors: Option<&[usize]>, n: usize) -> (ColoredPartition, u64) {
    let mut p = match colors {
        Some(c) => ColoredPartition::from_colors(c),
        None => ColoredPartition::unit(n),
    };
    let t = refiner.refine_all(&mut p);
    (p, t)
}

pub(crate) fn first_path(refiner: &mut Refiner, root_part: ColoredPartition, root_trace: u64) -> FirstPath {
    let root_cells = root_part.cell_count();
    let mut nodes = Vec::new();
    let mut part = root_part;
    while let Some(target) = part.target_cell() {
        let target_len = part.cell_at(target).len();
        let chosen = part.cell_at(target)[0] as usize;
        let mut child = part.clone();
        let s = child.individualize(chosen);
        let trace = refiner.refine_from(&mut child, vec![s as u32]);
        nodes.push(PathNode { part, target, target_len, chosen, trace, cells_after: child.cell_count() });
        part = child;
    }
    FirstPath { root_trace, root_cells, nodes, leaf: part.lab().to_vec() }
}

/// Depth-first search below `part` (at depth `level`) for a leaf whose
/// bijection from the first leaf passes `accept`.
fn dfs(
    refiner: &mut Refiner,
    path: &FirstPath,
    part: &ColoredPartition,
    level: usize,
    deadline: &Deadline,
    accept: &mut dyn FnMut(&[u32]) -> Option<Permutation>,
) -> Result<Option<Permutation>> {
    deadline.check()?;
    if part.is_discrete() {
        return Ok(accept(part.lab()));
    }
    let Some(node) = path.nodes.get(level) else { return Ok(None) };
    let Some(target) = part.target_cell() else { return Ok(None) };
    if target != node.target || part.cell_at(target).len() != node.target_len {
        return Ok(None);
    }
    let cell: Vec<u32> = part.cell_at(target).to_vec();
    for w in cell {
        let mut child = part.clone();
        let s = child.individualize(w as usize);
        let t = refiner.refine_from(&mut child, vec![s as u32]);
        if t != node.trace || child.cell_count() != node.cells_after {
            continue;
        }
        if let Some(found) = dfs(refiner, path, &child, level + 1, deadline, accept)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// The bijection taking the first leaf to `leaf`, if it maps edges of `g`
/// onto edges of `h`.
fn leaf_map(g: &Graph, h: &Graph, first: &[u32], leaf: &[u32]) -> Option<Permutation> {
    let mut images = vec![0usize; first.len()];
    for (&a, &b) in first.iter().zip(leaf) {
        images[a as usize] = b as usize;
    }
    let ok = g.edges().all(|(u, v)| h.has_edge(images[u], images[v]));
    ok.then(|| Permutation::from_images(images).expect("leaves are orderings"))
}

/// Outcome of the generator search.
pub struct SearchOutcome {
    pub generators: Vec<Permutation>,
    /// `false` when the deadline expired before every level was finished;
    /// the generators then span a subgroup only.
    pub complete: bool,
}

/// Generators of the automorphism group of `g` preserving the colour
/// classes (all vertices alike when `colors` is `None`).
pub(crate) fn search(g: &Graph, colors: Option<&[usize]>, deadline: &Deadline) -> SearchOutcome {
    let n = g.order();
    let mut refiner = Refiner::new(g);
    let (root_part, root_trace) = root(&mut refiner, colors, n);
    let path = first_path(&mut refiner, root_part, root_trace);
    let mut gens: Vec<Permutation> = Vec::new();
    for level in (0..path.nodes.len()).rev() {
        let node = &path.nodes[level];
        let cell: Vec<usize> = node.part.cell_at(node.target).iter().map(|&v| v as usize).collect();
        let mut rejected: Vec<usize> = Vec::new();
        for &v in &cell {
            if v == node.chosen {
                continue;
            }
            let labels = orbit_labels(&gens, n).expect("generators have degree n");
            if labels[v] == labels[node.chosen] || rejected.iter().any(|&r| labels[r] == labels[v]) {
                continue;
            }
            let mut child = node.part.clone();
            let s = child.individualize(v);
            let t = refiner.refine_from(&mut child, vec![s as u32]);
            let mut found = None;
            if t == node.trace && child.cell_count() == node.cells_after {
                let mut accept = |leaf: &[u32]| leaf_map(g, g, &path.leaf, leaf);
                match dfs(&mut refiner, &path, &child, level + 1, deadline, &mut accept) {
                    Ok(f) => found = f,
                    Err(_) => return SearchOutcome { generators: gens, complete: false },
                }
            }
            match found {
                Some(gamma) => gens.push(gamma),
                None => rejected.push(v),
            }
        }
    }
    SearchOutcome { generators: gens, complete: true }
}

/// An isomorphism `g → h` (vertex `v` of `g` goes to `perm[v]`), if any.
pub(crate) fn isomorphism(g: &Graph, h: &Graph, deadline: &Deadline) -> Result<Option<Permutation>> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let n = g.order();
    let mut rg = Refiner::new(g);
    let (gp, gt) = root(&mut rg, None, n);
    let path = first_path(&mut rg, gp, gt);
    let mut rh = Refiner::new(h);
    let (hp, ht) = root(&mut rh, None, n);
    if ht != path.root_trace || hp.cell_count() != path.root_cells {
        return Ok(None);
    }
    let mut accept = |leaf: &[u32]| leaf_map(g, h, &path.leaf, leaf);
    dfs(&mut rh, &path, &hp, 0, deadline, &mut accept)
}
