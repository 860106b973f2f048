//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_DEGREE_CAP: usize = 100_000;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    orbit: Vec<usize>,
    // position[p] indexes `orbit`/`transversal`, or NOT_IN_ORBIT
    position: Vec<u32>,
    // transversal[k] maps base_point to orbit[k]
    transversal: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base_point: usize, gens: &[&Permutation]) -> Level {
        let mut position = vec![NOT_IN_ORBIT; degree];
        let mut orbit = vec![base_point];
        let mut transversal = vec![Permutation::identity(degree)];
        position[base_point] = 0;
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            for g in gens {
                let q = g.img(p);
                if position[q] == NOT_IN_ORBIT {
                    position[q] = orbit.len() as u32;
                    orbit.push(q);
                    transversal.push(transversal[k].mul_unchecked(g));
                }
            }
            k += 1;
        }
        Level {
            base_point,
            orbit,
            position,
            transversal,
        }
    }

    fn rep(&self, point: usize) -> Option<&Permutation> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            k => Some(&self.transversal[k as usize]),
        }
    }
}

/// A finitely generated permutation group with an eagerly built stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong_generators: Vec<Permutation>,
    levels: Vec<Level>,
    order: u128,
}

impl PermGroup {
    /// `group_from_generators`: the group generated by a nonempty list of
    /// permutations of one common degree.
    pub fn new(generators: Vec<Permutation>) -> Result<PermGroup> {
        Self::with_degree_cap(generators, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(generators: Vec<Permutation>, cap: usize) -> Result<PermGroup> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        if degree > cap {
            return Err(Error::DegreeTooLarge { degree, cap });
        }
        Self::build(degree, generators, &[])
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::build(degree, Vec::new(), &[]).expect("trivial group")
    }

    /// Builds the chain with `prefix` (0-based points) as the leading base points.
    pub(crate) fn build(
        degree: usize,
        generators: Vec<Permutation>,
        prefix: &[usize],
    ) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let (strong_generators, levels) = schreier_sims(degree, &generators, prefix);
        let mut order: u128 = 1;
        for level in &levels {
            order = order
                .checked_mul(level.orbit.len() as u128)
                .ok_or(Error::TooLarge {
                    what: "group order",
                    size: u128::MAX,
                    cap: u128::MAX,
                })?;
        }
        Ok(PermGroup {
            degree,
            generators,
            strong_generators,
            levels,
            order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong_generators
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    pub(crate) fn base0(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.sifts(p))
    }

    pub(crate) fn sifts(&self, p: &Permutation) -> bool {
        let (residue, level) = strip(&self.levels, p, 0);
        level == self.levels.len() && residue.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.sifts(g))
    }

    /// True when every generator conjugate of `self`'s generators stays in `self`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && self.generators.iter().all(|n| {
                other
                    .generators
                    .iter()
                    .all(|s| self.sifts(&n.conjugate_by(s)))
            })
    }

    /// Smallest subgroup containing `seeds` and closed under conjugation by
    /// this group's generators.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::ElementNotInGroup);
            }
        }
        let mut gens: Vec<Permutation> =
            seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut closure = PermGroup::build(self.degree, gens.clone(), &[])?;
        let mut next = 0;
        while next < gens.len() {
            let n = gens[next].clone();
            for s in &self.generators {
                let c = n.conjugate_by(s);
                if !closure.sifts(&c) {
                    gens.push(c);
                    closure = PermGroup::build(self.degree, gens.clone(), &[])?;
                }
            }
            next += 1;
        }
        Ok(closure)
    }

    /// Subgroup fixing every listed (1-based) point.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let mut prefix = Vec::with_capacity(points.len());
        for &p in points {
            if p == 0 || p > self.degree {
                return Err(Error::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
            if !prefix.contains(&(p - 1)) {
                prefix.push(p - 1);
            }
        }
        let rebased = PermGroup::build(self.degree, self.strong_generators.clone(), &prefix)?;
        let gens = rebased.stabilizer_generators(prefix.len());
        PermGroup::build(self.degree, gens, &[])
    }

    /// Strong generators fixing the first `depth` base points; they generate
    /// that pointwise stabilizer.
    pub(crate) fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        let fixed: Vec<usize> = self
            .levels
            .iter()
            .take(depth)
            .map(|l| l.base_point)
            .collect();
        self.strong_generators
            .iter()
            .filter(|g| fixed.iter().all(|&b| g.img(b) == b))
            .cloned()
            .collect()
    }

    /// Every element, by running through the transversals. Fails above `cap`.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        if self.order > cap {
            return Err(Error::TooLarge {
                what: "group order",
                size: self.order,
                cap,
            });
        }
        let mut elements = vec![self.identity()];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elements.len() * level.orbit.len());
            for e in &elements {
                for t in &level.transversal {
                    next.push(e.mul_unchecked(t));
                }
            }
            elements = next;
        }
        Ok(elements)
    }

    /// Right cosets `Hg` of `sub`, with canonical representatives.
    pub fn cosets(&self, sub: &PermGroup) -> Result<CosetSpace> {
        if sub.degree != self.degree || !sub.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        let mut space = CosetSpace {
            sub: sub.clone(),
            representatives: Vec::new(),
            lookup: HashMap::new(),
        };
        let start = space.canonical(&self.identity());
        space.lookup.insert(start.clone(), 0);
        space.representatives.push(start);
        let mut k = 0;
        while k < space.representatives.len() {
            for s in &self.generators {
                let c = space.canonical(&space.representatives[k].mul_unchecked(s));
                if !space.lookup.contains_key(&c) {
                    space.lookup.insert(c.clone(), space.representatives.len());
                    space.representatives.push(c);
                }
            }
            k += 1;
        }
        Ok(space)
    }

    /// Action of this group's generators on the right cosets of `sub`, numbered
    /// breadth-first from the trivial coset.
    pub fn coset_action(&self, sub: &PermGroup) -> Result<(Vec<Permutation>, usize)> {
        let space = self.cosets(sub)?;
        let images = self.generators.iter().map(|g| space.act(g)).collect();
        Ok((images, space.index()))
    }
}

/// The right cosets of a subgroup, numbered from 1 in breadth-first order.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    sub: PermGroup,
    representatives: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
}

impl CosetSpace {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// The element of `Hg` with lexicographically least images of the
    /// subgroup's base.
    fn canonical(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in &self.sub.levels {
            let best = level
                .orbit
                .iter()
                .enumerate()
                .min_by_key(|(_, &o)| h.img(o))
                .map(|(k, _)| k)
                .expect("orbit is nonempty");
            if best != 0 {
                h = level.transversal[best].mul_unchecked(&h);
            }
        }
        h
    }

    /// 0-based number of the coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.lookup.get(&self.canonical(g)).copied()
    }

    /// Permutation induced on the cosets by an element of the ambient group.
    pub fn act(&self, g: &Permutation) -> Permutation {
        let images: Vec<usize> = self
            .representatives
            .iter()
            .map(|r| {
                self.coset_of(&r.mul_unchecked(g))
                    .expect("element lies in the ambient group")
                    + 1
            })
            .collect();
        Permutation::from_images(&images).expect("coset action is a bijection")
    }
}

fn strip(levels: &[Level], g: &Permutation, start: usize) -> (Permutation, usize) {
    let mut h = g.clone();
    for (l, level) in levels.iter().enumerate().skip(start) {
        let beta = h.img(level.base_point);
        match level.rep(beta) {
            None => return (h, l),
            Some(u) => {
                if beta != level.base_point {
                    h = h.mul_unchecked(&u.inverse());
                }
            }
        }
    }
    (h, levels.len())
}

fn level_for(degree: usize, strong: &[Permutation], base: &[usize], depth: usize) -> Level {
    let gens: Vec<&Permutation> = strong
        .iter()
        .filter(|g| base[..depth].iter().all(|&b| g.img(b) == b))
        .collect();
    Level::new(degree, base[depth], &gens)
}

/// Deterministic Schreier–Sims. New base points are the smallest point moved
/// by the generator that needs them.
fn schreier_sims(
    degree: usize,
    generators: &[Permutation],
    prefix: &[usize],
) -> (Vec<Permutation>, Vec<Level>) {
    let mut base: Vec<usize> = prefix.to_vec();
    let mut strong: Vec<Permutation> = Vec::new();
    for g in generators {
        if g.is_identity() || strong.contains(g) {
            continue;
        }
        if base.iter().all(|&b| g.img(b) == b) {
            base.push(g.first_moved().expect("non-identity"));
        }
        strong.push(g.clone());
    }
    let mut levels: Vec<Level> = (0..base.len())
        .map(|d| level_for(degree, &strong, &base, d))
        .collect();

    let mut i = levels.len() as isize - 1;
    while i >= 0 {
        let li = i as usize;
        let mut restart = None;
        let level_gens: Vec<Permutation> = strong
            .iter()
            .filter(|g| base[..li].iter().all(|&b| g.img(b) == b))
            .cloned()
            .collect();
        'scan: for k in 0..levels[li].orbit.len() {
            let beta = levels[li].orbit[k];
            for s in &level_gens {
                let gamma = s.img(beta);
                let u_beta_s = levels[li].transversal[k].mul_unchecked(s);
                let u_gamma = levels[li].rep(gamma).expect("orbit is closed");
                if &u_beta_s == u_gamma {
                    continue;
                }
                let schreier = u_beta_s.mul_unchecked(&u_gamma.inverse());
                let (residue, j) = strip(&levels, &schreier, li + 1);
                let j = if j < levels.len() {
                    j
                } else if !residue.is_identity() {
                    base.push(residue.first_moved().expect("non-identity"));
                    levels.push(Level::new(degree, *base.last().unwrap(), &[]));
                    levels.len() - 1
                } else {
                    continue;
                };
                strong.push(residue);
                for (l, level) in levels.iter_mut().enumerate().take(j + 1).skip(li + 1) {
                    *level = level_for(degree, &strong, &base, l);
                }
                restart = Some(j);
                break 'scan;
            }
        }
        match restart {
            Some(j) => i = j as isize,
            None => i -= 1,
        }
    }
    (strong, levels)
}
