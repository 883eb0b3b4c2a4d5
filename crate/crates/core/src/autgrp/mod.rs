//! Automorphism groups by equitable refinement and individualization.
//!
//! The search follows the first path of the refinement tree, then works
//! bottom-up: at each level it looks for automorphisms sending the chosen
//! vertex to every other vertex of the target cell, skipping vertices already
//! known to be in the same (or a rejected) orbit.

mod partition;
mod search;

pub use partition::{refine, ColoredPartition, Refiner};
pub use search::SearchOutcome;

use std::path::Path;
use std::time::Duration;

use crate::error::{Error, Result};
use crate::graphcore::Graph;
use crate::permgroup::{read_generators, write_generators, GroupBsgs, Permutation};
use crate::size_guard;

/// Default vertex limit for the search.
pub const AUT_SIZE_GUARD: u64 = 2500;
/// Default time budget per graph.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Clone, Copy, Debug)]
pub struct AutOptions {
    pub timeout: Duration,
    pub size_limit: u64,
    /// Return the partial group instead of `Timeout` when time runs out.
    pub allow_partial: bool,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions { timeout: DEFAULT_TIMEOUT, size_limit: size_guard(AUT_SIZE_GUARD), allow_partial: false }
    }
}

/// How the generators were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSource {
    Search,
    Import,
}

/// A verified generating set with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub generators: Vec<Permutation>,
    pub bsgs: GroupBsgs,
    pub source: GroupSource,
    /// Set when the search stopped early; the group may be a proper subgroup.
    pub lower_bound: bool,
}

impl AutomorphismGroup {
    pub fn from_generators(
        n: usize,
        generators: Vec<Permutation>,
        source: GroupSource,
        lower_bound: bool,
    ) -> Result<Self> {
        let bsgs = GroupBsgs::schreier_sims(&generators, n)?;
        Ok(AutomorphismGroup { generators, bsgs, source, lower_bound })
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.degree() == g.order() && g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

fn check_size(g: &Graph, limit: u64) -> Result<()> {
    if g.order() as u64 > limit {
        return Err(Error::SizeGuardExceeded { what: "automorphism search".into(), size: g.order() as u64, limit });
    }
    Ok(())
}

/// Generators of `Aut(g)`.
pub fn automorphism_group(g: &Graph, opts: &AutOptions) -> Result<AutomorphismGroup> {
    automorphism_group_colored(g, None, opts)
}

/// Generators of the colour-preserving automorphisms of `g`.
pub fn automorphism_group_colored(g: &Graph, colors: Option<&[usize]>, opts: &AutOptions) -> Result<AutomorphismGroup> {
    check_size(g, opts.size_limit)?;
    let deadline = search::Deadline::new(opts.timeout);
    let out = search::search(g, colors, &deadline);
    if !out.complete && !opts.allow_partial {
        return Err(Error::Timeout(opts.timeout.as_secs()));
    }
    debug_assert!(out.generators.iter().all(|p| is_automorphism(g, p)));
    AutomorphismGroup::from_generators(g.order(), out.generators, GroupSource::Search, !out.complete)
}

/// Reads generators from a file and checks each one against `g`.
pub fn import_generators(path: &Path, g: &Graph) -> Result<AutomorphismGroup> {
    let (n, gens) = read_generators(path)?;
    if n != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), found: n });
    }
    for (line, p) in &gens {
        if !is_automorphism(g, p) {
            return Err(Error::NotAnAutomorphism { line: *line });
        }
    }
    AutomorphismGroup::from_generators(n, gens.into_iter().map(|(_, p)| p).collect(), GroupSource::Import, false)
}

pub fn export_generators(path: &Path, group: &AutomorphismGroup) -> Result<()> {
    write_generators(path, group.bsgs.degree(), &group.generators)
}

/// An isomorphism from `g` to `h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph, opts: &AutOptions) -> Result<Option<Permutation>> {
    check_size(g, opts.size_limit)?;
    search::isomorphism(g, h, &search::Deadline::new(opts.timeout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num_bigint::BigUint;

    fn order(g: &Graph) -> BigUint {
        automorphism_group(g, &AutOptions::default()).unwrap().bsgs.order().clone()
    }

    fn factorial(n: u64) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    /// Counts automorphisms by extending partial maps vertex by vertex.
    fn brute_force_count(g: &Graph) -> u64 {
        fn go(g: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
            let i = map.len();
            if i == g.order() {
                return 1;
            }
            let mut total = 0;
            for v in 0..g.order() {
                if used[v] || g.degree(v) != g.degree(i) {
                    continue;
                }
                if (0..i).all(|j| g.has_edge(i, j) == g.has_edge(v, map[j])) {
                    used[v] = true;
                    map.push(v);
                    total += go(g, map, used);
                    map.pop();
                    used[v] = false;
                }
            }
            total
        }
        go(g, &mut Vec::new(), &mut vec![false; g.order()])
    }

    #[test]
    fn small_graphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut corpus = vec![
            families::johnson(5).unwrap().complement(),
            families::cycle(5).unwrap(),
            families::cycle(8).unwrap(),
            families::grid(3).unwrap(),
            families::complete_multipartite(3, 3).unwrap(),
            families::complete_multipartite(2, 4).unwrap(),
            families::johnson(4).unwrap(),
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::empty(6),
        ];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(2..=9);
            corpus.push(Graph::from_fn(n, |_, _| rng.gen_bool(0.4)));
        }
        for g in &corpus {
            let grp = automorphism_group(g, &AutOptions::default()).unwrap();
            for p in &grp.generators {
                assert!(is_automorphism(g, p));
            }
            assert_eq!(*grp.bsgs.order(), BigUint::from(brute_force_count(g)), "{g:?}");
        }
    }

    #[test]
    fn closed_form_orders() {
        assert_eq!(order(&families::johnson(5).unwrap().complement()), BigUint::from(120u32));
        assert_eq!(order(&families::paley(13).unwrap()), BigUint::from(78u32));
        assert_eq!(order(&families::paley(17).unwrap()), BigUint::from(136u32));
        for n in 2..=6u64 {
            let f = factorial(n);
            assert_eq!(order(&families::grid(n as usize).unwrap()), BigUint::from(2u32) * &f * &f);
        }
        for (parts, size) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
            let expected = factorial(size).pow(parts as u32) * factorial(parts);
            assert_eq!(order(&families::complete_multipartite(parts as usize, size as usize).unwrap()), expected);
        }
    }

    #[test]
    fn peisert_49() {
        assert_eq!(order(&families::peisert(7, 1).unwrap()), BigUint::from(3528u32));
    }

    #[test]
    fn complement_has_same_group() {
        for g in [families::paley(13).unwrap(), families::johnson(6).unwrap(), families::cycle(7).unwrap()] {
            let a = automorphism_group(&g, &AutOptions::default()).unwrap();
            let b = automorphism_group(&g.complement(), &AutOptions::default()).unwrap();
            assert_eq!(a.bsgs.order(), b.bsgs.order());
            assert!(a.generators.iter().all(|p| b.bsgs.contains(p)));
            assert!(b.generators.iter().all(|p| a.bsgs.contains(p)));
        }
    }

    #[test]
    fn isomorphisms() {
        let opts = AutOptions::default();
        let g3 = families::grid(3).unwrap();
        for h in [families::paley(9).unwrap(), families::peisert(3, 1).unwrap()] {
            let p = find_isomorphism(&g3, &h, &opts).unwrap().expect("isomorphic");
            assert_eq!(g3.relabel(&p.images().collect::<Vec<_>>()), h);
        }
        let c5 = families::cycle(5).unwrap();
        assert!(find_isomorphism(&c5, &families::paley(5).unwrap(), &opts).unwrap().is_some());
        let c6 = families::cycle(6).unwrap();
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(find_isomorphism(&c6, &two_triangles, &opts).unwrap().is_none());
    }

    #[test]
    fn import_checks_generators() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gens.txt");
        let c5 = families::cycle(5).unwrap();
        std::fs::write(&path, "5 1\n0 1 2 3 4\n").unwrap();
        assert_eq!(*import_generators(&path, &c5).unwrap().bsgs.order(), BigUint::from(1u32));
        std::fs::write(&path, "5 1\n1 2 3 4 0\n").unwrap();
        assert_eq!(*import_generators(&path, &c5).unwrap().bsgs.order(), BigUint::from(5u32));
        let petersen = families::johnson(5).unwrap().complement();
        std::fs::write(&path, "# swap\n10 1\n1 0 2 3 4 5 6 7 8 9\n").unwrap();
        let adjacent_pair_breaks = (0..10).any(|w| w > 1 && petersen.has_edge(0, w) != petersen.has_edge(1, w));
        assert!(adjacent_pair_breaks);
        assert!(matches!(import_generators(&path, &petersen), Err(Error::NotAnAutomorphism { line: 3 })));
        std::fs::write(&path, "4 1\n0 1 2 3\n").unwrap();
        assert!(matches!(import_generators(&path, &c5), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn export_round_trip() {
        let g = families::paley(13).unwrap();
        let grp = automorphism_group(&g, &AutOptions::default()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p13.gens");
        export_generators(&path, &grp).unwrap();
        let back = import_generators(&path, &g).unwrap();
        assert_eq!(back.bsgs.order(), grp.bsgs.order());
    }

    #[test]
    fn size_guard_and_timeout() {
        let g = families::cycle(30).unwrap();
        let opts = AutOptions { size_limit: 10, ..AutOptions::default() };
        assert!(matches!(automorphism_group(&g, &opts), Err(Error::SizeGuardExceeded { .. })));
        let opts = AutOptions { timeout: Duration::ZERO, ..AutOptions::default() };
        let g = families::paley(29).unwrap();
        assert!(matches!(automorphism_group(&g, &opts), Err(Error::Timeout(0))));
        let partial = automorphism_group(&g, &AutOptions { allow_partial: true, ..opts }).unwrap();
        assert!(partial.lower_bound);
    }
}
