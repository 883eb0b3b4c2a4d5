use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphcore::{is_strongly_regular, Graph};
use crate::size_guard;

/// Vertex limit for the brute-force triple tabulation.
pub const TRIPLE_GUARD: u64 = 300;

/// Why a subconstituent is not strongly regular (in the wide sense).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubconstituentFailure {
    pub omega: usize,
    /// 1 for the neighbourhood of ω, 2 for the non-neighbourhood.
    pub which: u8,
    /// Distinct degrees inside the subconstituent.
    pub degrees: BTreeSet<usize>,
    /// Common-neighbour counts inside the subconstituent, over adjacent and
    /// over non-adjacent pairs.
    pub adjacent_counts: BTreeSet<usize>,
    pub non_adjacent_counts: BTreeSet<usize>,
    /// A pair (vertex labels of the whole graph) whose count differs from
    /// that of the first pair of the same kind.
    pub pair: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRegularity {
    pub regular: bool,
    pub checked: Vec<usize>,
    pub failure: Option<SubconstituentFailure>,
}

fn inspect(g: &Graph, cell: &[usize], omega: usize, which: u8) -> Option<SubconstituentFailure> {
    let h = g.induced(cell);
    if h.is_strongly_regular_wide() {
        return None;
    }
    let degrees: BTreeSet<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    let prof = h.common_neighbour_profile();
    let pair =
        prof.adjacent_witnesses.get(1).or(prof.non_adjacent_witnesses.get(1)).map(|&(u, v, _)| (cell[u], cell[v]));
    Some(SubconstituentFailure {
        omega,
        which,
        degrees,
        adjacent_counts: prof.adjacent,
        non_adjacent_counts: prof.non_adjacent,
        pair,
    })
}

/// Checks that both subconstituents at every vertex of `reps` (every
/// vertex when `None`) are strongly regular in the wide sense.
pub fn triple_regularity(g: &Graph, reps: Option<&[usize]>) -> Result<TripleRegularity> {
    is_strongly_regular(g)?;
    let all: Vec<usize> = (0..g.order()).collect();
    let reps = reps.unwrap_or(&all);
    let mut checked = Vec::new();
    for &omega in reps {
        let part = g.partition_at(omega)?;
        checked.push(omega);
        for which in [1u8, 2] {
            if let Some(f) = inspect(g, &part.cells[which as usize], omega, which) {
                return Ok(TripleRegularity { regular: false, checked, failure: Some(f) });
            }
        }
    }
    Ok(TripleRegularity { regular: true, checked, failure: None })
}

/// Pairwise relations `(d(α,β), d(β,γ), d(α,γ))` of an ordered triple.
pub type TripleClass = (u8, u8, u8);
/// Counts indexed `[i][j][k]` by the relations of `v` to `α, β, γ`.
pub type TripleTable = [[[u32; 3]; 3]; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleViolation {
    pub class: TripleClass,
    pub first: ([usize; 3], TripleTable),
    pub second: ([usize; 3], TripleTable),
}

/// Tabulated triple intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleWitness {
    pub constant: bool,
    /// The table of the first triple seen in each class.
    pub tables: BTreeMap<String, TripleTable>,
    pub violation: Option<TripleViolation>,
}

fn relation(g: &Graph, a: usize, b: usize) -> u8 {
    if a == b {
        0
    } else if g.has_edge(a, b) {
        1
    } else {
        2
    }
}

/// Bitsets of the three relation classes around each vertex.
struct Rel {
    words: usize,
    sets: Vec<[Vec<u64>; 3]>,
}

impl Rel {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let words = n.div_ceil(64);
        let sets = (0..n)
            .map(|v| {
                let mut s = [vec![0u64; words], vec![0u64; words], vec![0u64; words]];
                for u in 0..n {
                    s[relation(g, v, u) as usize][u / 64] |= 1 << (u % 64);
                }
                s
            })
            .collect();
        Rel { words, sets }
    }

    fn table(&self, t: [usize; 3]) -> TripleTable {
        let mut out = [[[0u32; 3]; 3]; 3];
        for (i, a) in self.sets[t[0]].iter().enumerate() {
            for (j, b) in self.sets[t[1]].iter().enumerate() {
                for (k, c) in self.sets[t[2]].iter().enumerate() {
                    out[i][j][k] = (0..self.words).map(|w| (a[w] & b[w] & c[w]).count_ones()).sum();
                }
            }
        }
        out
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn permute(t: &TripleTable, p: [usize; 3]) -> TripleTable {
    let mut out = [[[0u32; 3]; 3]; 3];
    for (i, plane) in out.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                let idx = [i, j, k];
                let mut src = [0; 3];
                for s in 0..3 {
                    src[p[s]] = idx[s];
                }
                *cell = t[src[0]][src[1]][src[2]];
            }
        }
    }
    out
}

type Seen = BTreeMap<TripleClass, Vec<([usize; 3], TripleTable)>>;

/// Records the distinct tables of each class, first occurrence only.
fn record(seen: &mut Seen, class: TripleClass, triple: [usize; 3], table: TripleTable) {
    let list = seen.entry(class).or_default();
    if !list.iter().any(|(_, t)| *t == table) {
        list.push((triple, table));
    }
}

/// Brute-force `p_{ijk}^{abc}` over all vertex triples, grouped by the
/// class of pairwise relations; the oracle for triple regularity.
pub fn triple_intersection_numbers(g: &Graph) -> Result<TripleWitness> {
    let n = g.order();
    let limit = size_guard(TRIPLE_GUARD);
    if n as u64 > limit {
        return Err(Error::SizeGuardExceeded { what: "triple intersection numbers".into(), size: n as u64, limit });
    }
    let rel = Rel::new(g);
    let per_alpha: Vec<Seen> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut seen = Seen::new();
            for b in a..n {
                for c in b..n {
                    let base = [a, b, c];
                    let table = rel.table(base);
                    for p in PERMS {
                        let t = [base[p[0]], base[p[1]], base[p[2]]];
                        let class = (relation(g, t[0], t[1]), relation(g, t[1], t[2]), relation(g, t[0], t[2]));
                        record(&mut seen, class, t, permute(&table, p));
                    }
                }
            }
            seen
        })
        .collect();
    let mut global = Seen::new();
    let mut violation = None;
    for seen in per_alpha {
        for (class, list) in seen {
            for (triple, table) in list {
                let entry = global.entry(class).or_default();
                if violation.is_none() {
                    if let Some(first) = entry.first() {
                        if first.1 != table {
                            violation = Some(TripleViolation { class, first: *first, second: (triple, table) });
                        }
                    }
                }
                record(&mut global, class, triple, table);
            }
        }
    }
    let tables = global.iter().map(|(&(a, b, c), list)| (format!("{a}{b}{c}"), list[0].1)).collect();
    Ok(TripleWitness { constant: violation.is_none(), tables, violation })
}
