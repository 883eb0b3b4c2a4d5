use std::collections::VecDeque;

use crate::graphcore::Graph;

/// Ordered partition of the vertex set, nauty style: `lab` lists vertices
/// cell by cell and each cell is named by its first position in `lab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPartition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    cell: Vec<u32>,
    len: Vec<u32>,
    ncells: usize,
}

impl ColoredPartition {
    /// The single-cell partition.
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n as u32;
        }
        ColoredPartition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell: vec![0; n],
            len,
            ncells: usize::from(n > 0),
        }
    }

    /// Cells ordered by colour value.
    pub fn from_colors(colors: &[usize]) -> Self {
        let n = colors.len();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by_key(|&v| (colors[v as usize], v));
        let mut p = ColoredPartition { lab, pos: vec![0; n], cell: vec![0; n], len: vec![0; n], ncells: 0 };
        let mut start = 0;
        for k in 0..n {
            let v = p.lab[k] as usize;
            if k > 0 && colors[v] != colors[p.lab[k - 1] as usize] {
                start = k;
            }
            if start == k {
                p.ncells += 1;
            }
            p.pos[v] = k as u32;
            p.cell[v] = start as u32;
            p.len[start] += 1;
        }
        p
    }

    pub fn order(&self) -> usize {
        self.lab.len()
    }

    pub fn cell_count(&self) -> usize {
        self.ncells
    }

    pub fn is_discrete(&self) -> bool {
        self.ncells == self.lab.len()
    }

    /// Vertex order, cell by cell.
    pub fn lab(&self) -> &[u32] {
        &self.lab
    }

    pub fn cell_start_of(&self, v: usize) -> usize {
        self.cell[v] as usize
    }

    pub fn cell_at(&self, start: usize) -> &[u32] {
        &self.lab[start..start + self.len[start] as usize]
    }

    /// Cell starts in order.
    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut k = 0;
        std::iter::from_fn(move || {
            (k < self.lab.len()).then(|| {
                let s = k;
                k += self.len[k] as usize;
                s
            })
        })
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.starts().map(|s| self.cell_at(s).iter().map(|&v| v as usize).collect()).collect()
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        self.starts().filter(|&s| self.len[s] > 1).min_by_key(|&s| (self.len[s], s))
    }

    /// Splits `v` off the front of its cell; returns the start of the new
    /// singleton cell.
    pub fn individualize(&mut self, v: usize) -> usize {
        let c = self.cell[v] as usize;
        let l = self.len[c] as usize;
        if l == 1 {
            return c;
        }
        let p = self.pos[v] as usize;
        let w = self.lab[c];
        self.lab.swap(c, p);
        self.pos[w as usize] = p as u32;
        self.pos[v] = c as u32;
        self.len[c] = 1;
        self.len[c + 1] = (l - 1) as u32;
        for k in c + 1..c + l {
            self.cell[self.lab[k] as usize] = (c + 1) as u32;
        }
        self.ncells += 1;
        c
    }

    /// Every vertex of a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let starts: Vec<usize> = self.starts().collect();
        for &s in &starts {
            let mut profile: Option<Vec<usize>> = None;
            for &v in self.cell_at(s) {
                let mut counts = vec![0usize; self.lab.len()];
                for &u in g.neighbors(v as usize) {
                    counts[self.cell[u as usize] as usize] += 1;
                }
                match &profile {
                    None => profile = Some(counts),
                    Some(p) if *p != counts => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2))
        .wrapping_mul(0xff51_afd7_ed55_8ccd)
}

/// Scratch space for equitable refinement on one graph.
pub struct Refiner<'a> {
    g: &'a Graph,
    cnt: Vec<u32>,
    touched: Vec<u32>,
    in_queue: Vec<bool>,
}

impl<'a> Refiner<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Refiner { g, cnt: vec![0; n], touched: Vec::new(), in_queue: vec![false; n] }
    }

    /// Refines to the coarsest equitable partition finer than `p`, using
    /// every cell as a splitter. Returns an isomorphism-invariant trace.
    pub fn refine_all(&mut self, p: &mut ColoredPartition) -> u64 {
        let starts: Vec<u32> = p.starts().map(|s| s as u32).collect();
        self.refine_from(p, starts)
    }

    /// Refinement after individualization: `p` was equitable before `cell`
    /// was split off, so that cell alone is enough as initial splitter.
    pub fn refine_from(&mut self, p: &mut ColoredPartition, splitters: Vec<u32>) -> u64 {
        let mut queue: VecDeque<u32> = VecDeque::new();
        for s in splitters {
            if !self.in_queue[s as usize] {
                self.in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        let mut trace = 0x2545_f491_4f6c_dd1d;
        let mut cells: Vec<u32> = Vec::new();
        let mut frags: Vec<(u32, u32)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            self.in_queue[w as usize] = false;
            let w = w as usize;
            let wlen = p.len[w] as usize;
            for k in w..w + wlen {
                let v = p.lab[k] as usize;
                for &u in self.g.neighbors(v) {
                    if self.cnt[u as usize] == 0 {
                        self.touched.push(u);
                    }
                    self.cnt[u as usize] += 1;
                }
            }
            cells.clear();
            cells.extend(self.touched.iter().map(|&u| p.cell[u as usize]));
            cells.sort_unstable();
            cells.dedup();
            trace = mix(trace, w as u64);
            for &c in &cells {
                let c = c as usize;
                let clen = p.len[c] as usize;
                if clen == 1 {
                    continue;
                }
                let cnt = &self.cnt;
                p.lab[c..c + clen].sort_by_key(|&v| cnt[v as usize]);
                frags.clear();
                let mut fs = c;
                for k in c + 1..=c + clen {
                    if k == c + clen || cnt[p.lab[k] as usize] != cnt[p.lab[fs] as usize] {
                        frags.push((fs as u32, (k - fs) as u32));
                        fs = k;
                    }
                }
                for k in c..c + clen {
                    p.pos[p.lab[k] as usize] = k as u32;
                }
                if frags.len() == 1 {
                    continue;
                }
                trace = mix(trace, c as u64);
                for &(s, l) in &frags {
                    trace = mix(trace, ((cnt[p.lab[s as usize] as usize] as u64) << 32) | l as u64);
                    p.len[s as usize] = l;
                    for k in s..s + l {
                        p.cell[p.lab[k as usize] as usize] = s;
                    }
                }
                p.ncells += frags.len() - 1;
                let largest = frags.iter().enumerate().max_by_key(|&(i, &(_, l))| (l, std::cmp::Reverse(i))).unwrap().0;
                let whole = self.in_queue[c];
                for (i, &(s, _)) in frags.iter().enumerate() {
                    if (whole || i != largest) && !self.in_queue[s as usize] {
                        self.in_queue[s as usize] = true;
                        queue.push_back(s);
                    }
                }
            }
            for &u in &self.touched {
                self.cnt[u as usize] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.ncells as u64)
    }
}

/// Coarsest equitable refinement of `p`.
pub fn refine(g: &Graph, p: &ColoredPartition) -> ColoredPartition {
    let mut out = p.clone();
    Refiner::new(g).refine_all(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use rand::{Rng, SeedableRng};

    #[test]
    fn petersen_unit_partition_is_stable() {
        let g = families::johnson(5).unwrap().complement();
        let p = refine(&g, &ColoredPartition::unit(10));
        assert_eq!(p.cell_count(), 1);
    }

    #[test]
    fn path_splits_by_degree() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p = refine(&g, &ColoredPartition::unit(3));
        let mut cells = p.cells();
        cells.sort();
        assert_eq!(cells, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn individualization_then_refinement() {
        let g = families::grid(3).unwrap();
        let mut p = ColoredPartition::unit(9);
        let mut r = Refiner::new(&g);
        r.refine_all(&mut p);
        let s = p.individualize(0);
        r.refine_from(&mut p, vec![s as u32]);
        // {0}, the four rook-neighbours, the four others
        let mut sizes: Vec<usize> = p.cells().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 4, 4]);
        assert!(p.is_equitable(&g));
    }

    #[test]
    fn idempotent_and_equitable_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..30);
            let prob = rng.gen_range(0.05..0.6);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(prob));
            let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let p = refine(&g, &ColoredPartition::from_colors(&colors));
            assert!(p.is_equitable(&g));
            let q = refine(&g, &p);
            assert_eq!(p.cells(), q.cells());
            // refinement only splits the colour classes
            for cell in p.cells() {
                assert!(cell.iter().all(|&v| colors[v] == colors[cell[0]]));
            }
        }
    }
}
