use num_bigint::BigUint;
use num_traits::One;

use super::perm::{check_degree, Permutation};
use crate::error::{Error, Result};

/// One level of the stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Fundamental orbit of the base point, in discovery order.
    orbit: Vec<usize>,
    /// `u[β]` maps the base point to `β`; `u_inv[β]` is its inverse.
    u: Vec<Option<Permutation>>,
    u_inv: Vec<Option<Permutation>>,
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct GroupBsgs {
    degree: usize,
    generators: Vec<Permutation>,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
    order: BigUint,
}

impl GroupBsgs {
    /// Deterministic Schreier–Sims; the base is extended by the least point
    /// moved by each new strong generator.
    pub fn schreier_sims(gens: &[Permutation], n: usize) -> Result<Self> {
        Self::with_initial_base(gens, n, &[])
    }

    /// Schreier–Sims with a prescribed base prefix.
    pub fn with_initial_base(gens: &[Permutation], n: usize, prefix: &[usize]) -> Result<Self> {
        check_degree(gens, n)?;
        if let Some(&b) = prefix.iter().find(|&&b| b >= n) {
            return Err(Error::VertexOutOfRange { vertex: b, n });
        }
        let mut base: Vec<usize> = Vec::new();
        for &b in prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut bsgs =
            GroupBsgs { degree: n, generators: gens.to_vec(), base, strong, levels: Vec::new(), order: BigUint::one() };
        bsgs.levels = (0..bsgs.base.len()).map(|i| bsgs.build_level(i)).collect();
        bsgs.complete();
        bsgs.order = bsgs.levels.iter().map(|l| BigUint::from(l.orbit.len())).product();
        Ok(bsgs)
    }

    fn build_level(&self, i: usize) -> Level {
        let fixes_prefix = |g: &Permutation| self.base[..i].iter().all(|&b| g.apply(b) == b);
        let gens: Vec<Permutation> = self.strong.iter().filter(|g| fixes_prefix(g)).cloned().collect();
        let b = self.base[i];
        let mut u: Vec<Option<Permutation>> = vec![None; self.degree];
        u[b] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![b];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for g in &gens {
                let y = g.apply(x);
                if u[y].is_none() {
                    u[y] = Some(u[x].as_ref().unwrap().then(g));
                    orbit.push(y);
                }
            }
        }
        let u_inv = u.iter().map(|p| p.as_ref().map(Permutation::inverse)).collect();
        Level { gens, orbit, u, u_inv }
    }

    /// Sifts `g` from level `start`; returns the residue and the level at
    /// which sifting stopped (`base.len()` if it passed every level).
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for l in start..self.base.len() {
            let beta = g.apply(self.base[l]);
            match &self.levels[l].u_inv[beta] {
                Some(inv) => g = g.then(inv),
                None => return (g, l),
            }
        }
        (g, self.base.len())
    }

    fn complete(&mut self) {
        let mut i = self.base.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let level = self.levels[iu].clone();
            for &beta in &level.orbit {
                let ub = level.u[beta].as_ref().unwrap();
                for s in &level.gens {
                    let img = s.apply(beta);
                    let ubs = ub.then(s);
                    if level.u[img].as_ref() == Some(&ubs) {
                        continue;
                    }
                    let schreier = ubs.then(level.u_inv[img].as_ref().unwrap());
                    let (h, j) = self.strip_from(schreier, iu + 1);
                    if j < self.base.len() || !h.is_identity() {
                        if j == self.base.len() {
                            self.base.push(h.first_moved().expect("non-identity residue"));
                            self.levels.push(Level { gens: vec![], orbit: vec![], u: vec![], u_inv: vec![] });
                        }
                        self.strong.push(h);
                        for l in iu + 1..=j {
                            self.levels[l] = self.build_level(l);
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// The generators the group was built from.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Fundamental orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators fixing the first `i` base points.
    pub fn level_generators(&self, i: usize) -> &[Permutation] {
        &self.levels[i].gens
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g.clone(), 0);
        j == self.base.len() && h.is_identity()
    }

    /// Recomputes the chain with `prefix` at the front of the base.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> Result<Self> {
        let mut g = Self::with_initial_base(&self.strong, self.degree, prefix)?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    /// Drops the first `depth` levels of a chain whose base starts with the
    /// fixed points, giving the pointwise stabilizer.
    fn tail(&self, depth: usize) -> GroupBsgs {
        let gens = if depth < self.levels.len() { self.levels[depth].gens.clone() } else { Vec::new() };
        let levels: Vec<Level> = self.levels[depth.min(self.levels.len())..].to_vec();
        let order = levels.iter().map(|l| BigUint::from(l.orbit.len())).product();
        GroupBsgs {
            degree: self.degree,
            generators: gens.clone(),
            base: self.base[depth.min(self.base.len())..].to_vec(),
            strong: gens,
            levels,
            order,
        }
    }

    /// `G_ω` as its own chain.
    pub fn point_stabilizer(&self, omega: usize) -> Result<GroupBsgs> {
        self.pointwise_stabilizer(&[omega])
    }

    /// `G_ω ∩ G_ω'`.
    pub fn two_point_stabilizer(&self, omega: usize, other: usize) -> Result<GroupBsgs> {
        if omega == other {
            return Err(Error::ParamRange("two-point stabilizer needs distinct points".into()));
        }
        self.pointwise_stabilizer(&[omega, other])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<GroupBsgs> {
        if let Some(&p) = points.iter().find(|&&p| p >= self.degree) {
            return Err(Error::VertexOutOfRange { vertex: p, n: self.degree });
        }
        let chain = self.with_base_prefix(points)?;
        let mut distinct = points.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        Ok(chain.tail(distinct.len()))
    }

    /// `(transitive, rank)`; the rank is reported only for transitive groups.
    pub fn transitivity_rank(&self) -> (bool, Option<usize>) {
        if self.degree == 0 {
            return (false, None);
        }
        let orb = super::orbit(&self.strong, 0).expect("degrees agree");
        if orb.len() != self.degree {
            return (false, None);
        }
        let stab = self.point_stabilizer(0).expect("0 < degree");
        (true, Some(super::orbit_count(stab.strong_generators(), self.degree).expect("degrees agree")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{orbit_count, symmetric_group};
    use proptest::prelude::*;

    fn cyc(n: usize, c: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        let g = GroupBsgs::schreier_sims(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], 4).unwrap();
        assert_eq!(*g.order(), BigUint::from(24u32));
        assert_eq!(*g.point_stabilizer(0).unwrap().order(), BigUint::from(6u32));
        assert_eq!(*g.two_point_stabilizer(0, 1).unwrap().order(), BigUint::from(2u32));
        for n in 1..9usize {
            let order: u64 = (1..=n as u64).product();
            assert_eq!(*GroupBsgs::schreier_sims(&symmetric_group(n), n).unwrap().order(), BigUint::from(order));
        }
    }

    #[test]
    fn trivial_and_cyclic() {
        let g = GroupBsgs::schreier_sims(&[], 7).unwrap();
        assert_eq!(*g.order(), BigUint::one());
        assert_eq!(g.transitivity_rank(), (false, None));
        let c = GroupBsgs::schreier_sims(&[cyc(6, &[&[0, 1, 2, 3, 4, 5]])], 6).unwrap();
        assert_eq!(*c.order(), BigUint::from(6u32));
        assert_eq!(c.transitivity_rank(), (true, Some(6)));
    }

    #[test]
    fn dihedral_pentagon() {
        let gens = [cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])];
        let g = GroupBsgs::schreier_sims(&gens, 5).unwrap();
        assert_eq!(*g.order(), BigUint::from(10u32));
        let s = g.point_stabilizer(0).unwrap();
        assert_eq!(orbit_count(s.strong_generators(), 5).unwrap(), 3);
        assert_eq!(*g.two_point_stabilizer(0, 1).unwrap().order(), BigUint::one());
        assert_eq!(g.transitivity_rank(), (true, Some(3)));
    }

    #[test]
    fn membership() {
        let gens = [cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[1, 4], &[2, 3]])];
        let g = GroupBsgs::schreier_sims(&gens, 5).unwrap();
        assert!(g.contains(&cyc(5, &[&[0, 4], &[1, 3]])));
        assert!(!g.contains(&cyc(5, &[&[0, 1]])));
        for s in g.strong_generators() {
            assert!(g.contains(s));
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            GroupBsgs::schreier_sims(&[Permutation::identity(3)], 4),
            Err(Error::DegreeMismatch { expected: 4, found: 3 })
        ));
        let g = GroupBsgs::schreier_sims(&symmetric_group(4), 4).unwrap();
        assert!(matches!(g.point_stabilizer(9), Err(Error::VertexOutOfRange { .. })));
    }

    /// Group order by closing the generator set under multiplication.
    fn brute_order(gens: &[Permutation], n: usize) -> usize {
        let mut elems = std::collections::HashSet::new();
        let mut queue = vec![Permutation::identity(n)];
        elems.insert(queue[0].clone());
        while let Some(x) = queue.pop() {
            for g in gens {
                let y = x.then(g);
                if elems.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        elems.len()
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn order_matches_closure(gens in prop::collection::vec(arb_perm(6), 0..3)) {
            let g = GroupBsgs::schreier_sims(&gens, 6).unwrap();
            prop_assert_eq!(g.order().clone(), BigUint::from(brute_order(&gens, 6)));
        }

        #[test]
        fn orbit_stabilizer(gens in prop::collection::vec(arb_perm(7), 1..3), w in 0usize..7) {
            let g = GroupBsgs::schreier_sims(&gens, 7).unwrap();
            let orb = crate::permgroup::orbit(&gens, w).unwrap().len();
            let s = g.point_stabilizer(w).unwrap();
            prop_assert_eq!(s.order() * BigUint::from(orb), g.order().clone());
            for h in s.strong_generators() {
                prop_assert_eq!(h.apply(w), w);
                prop_assert!(g.contains(h));
            }
        }
    }
}
