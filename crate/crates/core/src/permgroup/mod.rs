//! Permutation groups: orbits, stabilizer chains and orbital counts.

mod bsgs;
mod io;
mod perm;

pub use bsgs::GroupBsgs;
pub use io::{parse_generators, read_generators, render_generators, write_generators};
pub use perm::{check_degree, Permutation};

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// The orbit of `point` under `⟨gens⟩`, sorted.
pub fn orbit(gens: &[Permutation], point: usize) -> Result<Vec<usize>> {
    let n = gens.first().map_or(point + 1, Permutation::degree);
    check_degree(gens, n)?;
    if point >= n {
        return Err(Error::VertexOutOfRange { vertex: point, n });
    }
    let mut seen = vec![false; n];
    seen[point] = true;
    let mut queue = vec![point];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Ok(queue)
}

/// Orbit label (least point of the orbit) for every point of `0..n`.
pub fn orbit_labels(gens: &[Permutation], n: usize) -> Result<Vec<usize>> {
    check_degree(gens, n)?;
    let mut uf = UnionFind::<usize>::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    let mut least = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find_mut(x);
        least[r] = least[r].min(x);
    }
    Ok((0..n).map(|x| least[uf.find_mut(x)]).collect())
}

/// Number of orbits of `⟨gens⟩` on `0..n`.
pub fn orbit_count(gens: &[Permutation], n: usize) -> Result<usize> {
    let labels = orbit_labels(gens, n)?;
    Ok(labels.iter().enumerate().filter(|&(x, &l)| x == l).count())
}

/// Orbits of `⟨gens⟩` acting diagonally on `Δᵢ × Δⱼ`. Every generator must
/// map each cell onto itself.
pub fn orbital_count_block(gens: &[Permutation], di: &[usize], dj: &[usize]) -> Result<usize> {
    let n = gens.first().map_or(0, Permutation::degree);
    check_degree(gens, n)?;
    let mut pos_i = vec![usize::MAX; n.max(di.iter().chain(dj).map(|&x| x + 1).max().unwrap_or(0))];
    let mut pos_j = pos_i.clone();
    for (k, &x) in di.iter().enumerate() {
        pos_i[x] = k;
    }
    for (k, &x) in dj.iter().enumerate() {
        pos_j[x] = k;
    }
    for g in gens {
        if di.iter().any(|&x| pos_i[g.apply(x)] == usize::MAX) || dj.iter().any(|&x| pos_j[g.apply(x)] == usize::MAX) {
            return Err(Error::CellNotInvariant);
        }
    }
    let (a, b) = (di.len(), dj.len());
    let mut uf = UnionFind::<usize>::new(a * b);
    for g in gens {
        for (p, &x) in di.iter().enumerate() {
            let gx = pos_i[g.apply(x)];
            for (q, &y) in dj.iter().enumerate() {
                uf.union(p * b + q, gx * b + pos_j[g.apply(y)]);
            }
        }
    }
    Ok((0..a * b).filter(|&z| uf.find_mut(z) == z).count())
}

/// Generators of the symmetric group on `0..n`: a transposition and an n-cycle.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let cycle: Vec<usize> = (0..n).collect();
    vec![
        Permutation::from_cycles(n, &[&[0, 1]]).expect("n ≥ 2"),
        Permutation::from_cycles(n, &[&cycle]).expect("valid cycle"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit(&[cyc(4, &[&[0, 1, 2]])], 0).unwrap(), vec![0, 1, 2]);
        assert_eq!(orbit(&[], 3).unwrap(), vec![3]);
        assert_eq!(orbit_count(&[], 7).unwrap(), 7);
        assert_eq!(orbit_count(&[cyc(5, &[&[0, 1, 2, 3, 4]])], 5).unwrap(), 1);
        assert_eq!(orbit_count(&[cyc(5, &[&[1, 4], &[2, 3]])], 5).unwrap(), 3);
        assert_eq!(orbit_labels(&[cyc(5, &[&[1, 4], &[2, 3]])], 5).unwrap(), vec![0, 1, 2, 2, 1]);
        assert!(matches!(
            orbit(&[Permutation::identity(3), Permutation::identity(4)], 0),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orbital_blocks_on_pentagon() {
        // G₀ of the dihedral group of order 10 is generated by the reflection fixing 0
        let r = cyc(5, &[&[1, 4], &[2, 3]]);
        let (d1, d2) = (vec![1, 4], vec![2, 3]);
        assert_eq!(orbital_count_block(std::slice::from_ref(&r), &[0], &d1).unwrap(), 1);
        assert_eq!(orbital_count_block(std::slice::from_ref(&r), &d1, &d1).unwrap(), 2);
        assert_eq!(orbital_count_block(std::slice::from_ref(&r), &d1, &d2).unwrap(), 2);
        assert_eq!(orbital_count_block(std::slice::from_ref(&r), &d2, &d1).unwrap(), 2);
        assert!(matches!(orbital_count_block(&[r], &[1, 2], &d2), Err(Error::CellNotInvariant)));
    }
}
