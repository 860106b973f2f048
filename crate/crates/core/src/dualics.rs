//! Duality and chirality groups.
//!
//! For an operation sending the marks `(x, y)` to words `(u, v)`, the
//! parallel product `K = ⟨(x, u), (y, v)⟩ ≤ G × G` projects onto both
//! factors; the kernel of the first projection, read in the second factor,
//! is the smallest normal subgroup `D` such that `x ↦ u, y ↦ v` induces an
//! automorphism of `G/D`. Its order is the operation's index and `|G/D|` the
//! coindex. The augmented-presentation route and a brute-force search over
//! normal subgroups are kept as independent checks.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::{todd_coxeter, Presentation, Word};
use crate::group::PermGroup;
use crate::hypermap::{
    covers, direct_product, EulerCharacteristic, HypermapType, OrientedHypermap,
};
use crate::perm::Permutation;
use crate::structure::{describe, StructureDescription};

/// Largest group handled by [`bruteforce_minimal_normal`].
pub const BRUTE_FORCE_LIMIT: u128 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperationKind {
    Alpha,
    Beta,
    Mirror,
    Custom,
}

impl OperationKind {
    pub const NAMED: [OperationKind; 3] = [
        OperationKind::Alpha,
        OperationKind::Beta,
        OperationKind::Mirror,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperationKind::Alpha => "alpha",
            OperationKind::Beta => "beta",
            OperationKind::Mirror => "mirror",
            OperationKind::Custom => "custom",
        }
    }

    pub fn spec(self) -> Option<OperationSpec> {
        match self {
            OperationKind::Alpha => Some(OperationSpec::alpha()),
            OperationKind::Beta => Some(OperationSpec::beta()),
            OperationKind::Mirror => Some(OperationSpec::mirror()),
            OperationKind::Custom => None,
        }
    }
}

impl fmt::Display for OperationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(OperationKind::Alpha),
            "beta" => Ok(OperationKind::Beta),
            "mirror" => Ok(OperationKind::Mirror),
            other => Err(Error::BadParameter(format!("unknown operation `{other}`"))),
        }
    }
}

/// An assignment `x ↦ u, y ↦ v` with `u, v` words in `x` (generator 0) and
/// `y` (generator 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationSpec {
    pub kind: OperationKind,
    pub images: (Word, Word),
}

impl OperationSpec {
    pub fn alpha() -> OperationSpec {
        OperationSpec {
            kind: OperationKind::Alpha,
            images: (Word::generator(1), Word::generator(0)),
        }
    }

    pub fn beta() -> OperationSpec {
        OperationSpec {
            kind: OperationKind::Beta,
            images: (Word::power(1, -1), Word::power(0, -1)),
        }
    }

    pub fn mirror() -> OperationSpec {
        OperationSpec {
            kind: OperationKind::Mirror,
            images: (Word::power(0, -1), Word::power(1, -1)),
        }
    }

    pub fn custom(u: Word, v: Word) -> OperationSpec {
        OperationSpec {
            kind: OperationKind::Custom,
            images: (u, v),
        }
    }

    /// Applying the assignment twice gives back `(x, y)` in the free group.
    pub fn is_involutory(&self) -> bool {
        let images = [self.images.0.clone(), self.images.1.clone()];
        self.images.0.substitute(&images) == Word::generator(0)
            && self.images.1.substitute(&images) == Word::generator(1)
    }

    /// The image marks `(u, v)` evaluated in `h`.
    pub fn evaluate(&self, h: &OrientedHypermap) -> (Permutation, Permutation) {
        let marks = h.marks();
        (
            self.images.0.evaluate(&marks),
            self.images.1.evaluate(&marks),
        )
    }
}

#[derive(Clone, Debug)]
pub struct OperationKernel {
    /// The kernel as a subgroup of `G`, in `G`'s own action.
    pub kernel: PermGroup,
    pub index: u128,
    pub coindex: u128,
    /// Order of the parallel product `K = ⟨(x, u), (y, v)⟩`.
    pub parallel_order: u128,
}

pub fn operation_kernel(h: &OrientedHypermap, op: &OperationSpec) -> Result<OperationKernel> {
    let (u, v) = op.evaluate(h);
    let g = h.group();
    if PermGroup::new(vec![u.clone(), v.clone()])?.order() != g.order() {
        return Err(Error::ImagesDoNotGenerate);
    }
    let n = h.degree();
    // a base of G on the first copy: fixing it pointwise fixes the whole copy
    let prefix = g.base0();
    let parallel = PermGroup::build(
        2 * n,
        vec![h.x().disjoint_union(&u), h.y().disjoint_union(&v)],
        &prefix,
    )?;
    let kernel_gens: Vec<Permutation> = parallel
        .stabilizer_generators(prefix.len())
        .iter()
        .map(|k| k.restrict(n, n))
        .collect();
    let kernel = PermGroup::build(n, kernel_gens, &[])?;
    let index = parallel.order() / g.order();
    if parallel.order() % g.order() != 0 || kernel.order() != index {
        return Err(Error::InternalInconsistency(format!(
            "parallel product of order {} does not split over |G| = {} with kernel of order {}",
            parallel.order(),
            g.order(),
            kernel.order()
        )));
    }
    Ok(OperationKernel {
        kernel,
        index,
        coindex: g.order() / index,
        parallel_order: parallel.order(),
    })
}

pub fn duality_index(h: &OrientedHypermap) -> Result<u128> {
    Ok(operation_kernel(h, &OperationSpec::alpha())?.index)
}

pub fn duality_coindex(h: &OrientedHypermap) -> Result<u128> {
    Ok(operation_kernel(h, &OperationSpec::alpha())?.coindex)
}

pub fn is_self_dual(h: &OrientedHypermap) -> Result<bool> {
    Ok(duality_index(h)? == 1)
}

pub fn is_extreme(h: &OrientedHypermap) -> Result<bool> {
    Ok(duality_index(h)? == h.order())
}

/// The quotient hypermap `(G/D, xD, yD)` acting on the cosets of `D`. A
/// trivial kernel returns the hypermap unchanged.
pub fn duality_quotient(h: &OrientedHypermap, op: &OperationSpec) -> Result<OrientedHypermap> {
    let kernel = operation_kernel(h, op)?.kernel;
    if kernel.is_trivial() {
        return Ok(h.clone());
    }
    let space = h.group().cosets(&kernel)?;
    OrientedHypermap::from_marks(space.act(h.x()), space.act(h.y()))
}

/// Coindex obtained by enumerating the presentation augmented with the
/// substituted relators.
pub fn index_via_presentation(
    presentation: &Presentation,
    op: &OperationSpec,
    max_cosets: usize,
) -> Result<u128> {
    let augmented = presentation.augment_with_assignment((&op.images.0, &op.images.1))?;
    Ok(todd_coxeter(&augmented, &[], max_cosets)?.index as u128)
}

/// Exhaustive search over the normal subgroups of a group of order at most
/// [`BRUTE_FORCE_LIMIT`] for the smallest `N` such that `x ↦ u, y ↦ v`
/// induces an automorphism of `G/N`. Returns `|N|`.
///
/// Works on the multiplication table of the element set only. Subgroups are
/// reached by adjoining one element at a time to already-found normal
/// subgroups and taking normal closures, which visits every normal subgroup.
pub fn bruteforce_minimal_normal(h: &OrientedHypermap, op: &OperationSpec) -> Result<u128> {
    let (u, v) = op.evaluate(h);
    let table = CayleyTable::new(&h.marks())?;
    let ix = table.index[h.x()];
    let iy = table.index[h.y()];
    let iu = table.index[&u];
    let iv = table.index[&v];

    let mut good: Vec<u32> = Vec::new();
    for n in table.normal_subgroups() {
        if table.quotient_assignment_is_automorphism(n, (ix, iy), (iu, iv)) {
            good.push(n);
        }
    }
    let min =
        good.iter().map(|n| n.count_ones()).min().ok_or_else(|| {
            Error::InternalInconsistency("the whole group always qualifies".into())
        })?;
    if good.iter().filter(|n| n.count_ones() == min).count() != 1 {
        return Err(Error::NonUniqueMinimum);
    }
    Ok(min as u128)
}

/// Multiplication table of a group of order at most 32, elements as bit positions.
struct CayleyTable {
    index: HashMap<Permutation, usize>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl CayleyTable {
    fn new(gens: &[Permutation]) -> Result<CayleyTable> {
        let identity = Permutation::identity(gens[0].degree());
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
        let mut k = 0;
        while k < elements.len() {
            for g in gens {
                let next = &elements[k] * g;
                if !index.contains_key(&next) {
                    if elements.len() as u128 >= BRUTE_FORCE_LIMIT {
                        return Err(Error::TooLarge {
                            what: "brute-force group order",
                            size: elements.len() as u128 + 1,
                            cap: BRUTE_FORCE_LIMIT,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            k += 1;
        }
        let mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&(a * b)]).collect())
            .collect();
        let inv = (0..elements.len())
            .map(|a| (0..elements.len()).find(|&b| mul[a][b] == 0).unwrap())
            .collect();
        Ok(CayleyTable { index, mul, inv })
    }

    fn size(&self) -> usize {
        self.mul.len()
    }

    fn members(&self, set: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&i| set >> i & 1 == 1)
    }

    /// Closure of `set` under products and conjugation by every element.
    fn normal_closure(&self, mut set: u32) -> u32 {
        set |= 1;
        loop {
            let mut next = set;
            for a in self.members(set) {
                for b in self.members(set) {
                    next |= 1 << self.mul[a][b];
                }
                for g in 0..self.size() {
                    next |= 1 << self.mul[self.mul[self.inv[g]][a]][g];
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    fn normal_subgroups(&self) -> Vec<u32> {
        let trivial = self.normal_closure(1);
        let mut seen: HashSet<u32> = HashSet::from([trivial]);
        let mut found = vec![trivial];
        let mut k = 0;
        while k < found.len() {
            let n = found[k];
            for g in 0..self.size() {
                if n >> g & 1 == 0 {
                    let m = self.normal_closure(n | 1 << g);
                    if seen.insert(m) {
                        found.push(m);
                    }
                }
            }
            k += 1;
        }
        found
    }

    /// Whether `a ↦ c, b ↦ d` extends to an automorphism of `G/N`, by walking
    /// the Cayley graph of the quotient.
    fn quotient_assignment_is_automorphism(
        &self,
        n: u32,
        (a, b): (usize, usize),
        (c, d): (usize, usize),
    ) -> bool {
        // coset label: smallest element of Ng
        let coset: Vec<usize> = (0..self.size())
            .map(|g| self.members(n).map(|m| self.mul[m][g]).min().unwrap())
            .collect();
        let mut image: HashMap<usize, usize> = HashMap::from([(coset[0], coset[0])]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            let fg = image[&coset[g]];
            for (s, t) in [(a, c), (b, d)] {
                let target = coset[self.mul[g][s]];
                let mapped = coset[self.mul[fg][t]];
                match image.get(&target) {
                    Some(&m) if m != mapped => return false,
                    Some(_) => {}
                    None => {
                        image.insert(target, mapped);
                        queue.push_back(self.mul[g][s]);
                    }
                }
            }
        }
        let distinct: HashSet<usize> = image.values().copied().collect();
        distinct.len() == image.len()
    }
}

/// Builds `L = K × H^α` for `k` with extreme duality index covering `h`, and
/// returns `L` with `|D(L)|`, which must equal `|Mon(k)| / |Mon(h)|`.
pub fn product_duality_check(
    k: &OrientedHypermap,
    h: &OrientedHypermap,
) -> Result<(OrientedHypermap, u128)> {
    if !is_extreme(k)? {
        return Err(Error::PreconditionFailed(
            "the covering hypermap does not have extreme duality index".into(),
        ));
    }
    if !covers(k, h)? {
        return Err(Error::PreconditionFailed(
            "the first hypermap does not cover the second".into(),
        ));
    }
    let product = direct_product(k, &h.alpha_dual())?;
    let d = duality_index(&product)?;
    let expected = k.order() / h.order();
    if d != expected {
        return Err(Error::InternalInconsistency(format!(
            "product duality group has order {d}, expected {expected}"
        )));
    }
    Ok((product, d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperationSummary {
    pub index: u128,
    pub coindex: u128,
    pub kernel: StructureDescription,
    pub self_dual: bool,
    pub extreme: bool,
    /// False for custom assignments of order other than 2; their kernel is
    /// reported as an assignment kernel only.
    pub involutory: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub group_order: u128,
    pub hypermap_type: HypermapType,
    pub euler: EulerCharacteristic,
    pub operations: Vec<(OperationKind, OperationSummary)>,
}

impl DualityReport {
    pub fn operation(&self, kind: OperationKind) -> Option<&OperationSummary> {
        self.operations
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, s)| s)
    }
}

pub fn summarize(h: &OrientedHypermap, op: &OperationSpec) -> Result<OperationSummary> {
    let k = operation_kernel(h, op)?;
    Ok(OperationSummary {
        index: k.index,
        coindex: k.coindex,
        kernel: describe(&k.kernel)?,
        self_dual: k.index == 1,
        extreme: k.index == h.order(),
        involutory: op.is_involutory(),
    })
}

/// Report for alpha, beta and mirror.
pub fn analyze(h: &OrientedHypermap) -> Result<DualityReport> {
    let ops: Vec<OperationSpec> = OperationKind::NAMED
        .iter()
        .filter_map(|k| k.spec())
        .collect();
    analyze_ops(h, &ops)
}

pub fn analyze_ops(h: &OrientedHypermap, ops: &[OperationSpec]) -> Result<DualityReport> {
    let operations = ops
        .iter()
        .map(|op| Ok((op.kind, summarize(h, op)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DualityReport {
        group_order: h.order(),
        hypermap_type: h.hypermap_type(),
        euler: h.euler_characteristic()?,
        operations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermap::marked_iso;

    fn cycle(n: usize) -> Permutation {
        Permutation::from_cycles(&[(1..=n).collect()], n).unwrap()
    }

    fn cyclic(k: usize, a: i64, b: i64) -> OrientedHypermap {
        let g = cycle(k);
        OrientedHypermap::from_marks(g.pow(a), g.pow(b)).unwrap()
    }

    fn a5() -> OrientedHypermap {
        OrientedHypermap::from_marks(
            Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
            Permutation::parse_cycles("(1 2 3)", 5).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn named_operations_are_involutory() {
        for kind in OperationKind::NAMED {
            assert!(kind.spec().unwrap().is_involutory(), "{kind}");
        }
        let twist = OperationSpec::custom(Word::generator(1), Word::power(0, -1));
        assert!(!twist.is_involutory());
    }

    #[test]
    fn c6_kernel() {
        let h = cyclic(6, 1, 4);
        let k = operation_kernel(&h, &OperationSpec::alpha()).unwrap();
        assert_eq!((k.index, k.coindex), (2, 3));
        assert_eq!(k.parallel_order, 12);
        assert!(k.kernel.is_normal_in(h.group()));
        let q = duality_quotient(&h, &OperationSpec::alpha()).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.x(), q.y());
        assert_eq!(
            bruteforce_minimal_normal(&h, &OperationSpec::alpha()).unwrap(),
            2
        );
    }

    #[test]
    fn self_dual_and_extreme_cyclic() {
        assert_eq!(duality_index(&cyclic(5, 1, 1)).unwrap(), 1);
        let h = cyclic(7, 1, 0);
        assert_eq!(duality_index(&h).unwrap(), 7);
        assert!(is_extreme(&h).unwrap());
        assert!(!is_self_dual(&h).unwrap());
    }

    #[test]
    fn a5_is_extreme_for_both_dualities() {
        let r = analyze(&a5()).unwrap();
        let alpha = r.operation(OperationKind::Alpha).unwrap();
        let beta = r.operation(OperationKind::Beta).unwrap();
        assert_eq!((alpha.index, beta.index), (60, 60));
        assert!(alpha.extreme && beta.extreme);
        assert_eq!(alpha.kernel.order, 60);
        assert!(!alpha.kernel.is_abelian);
    }

    #[test]
    fn images_must_generate() {
        let h = cyclic(6, 1, 1);
        let op = OperationSpec::custom(Word::power(0, 2), Word::power(1, 2));
        assert_eq!(
            operation_kernel(&h, &op).unwrap_err(),
            Error::ImagesDoNotGenerate
        );
    }

    #[test]
    fn presentation_route_matches() {
        let p = Presentation::parse(&["x", "y"], &["x^6", "x^4*y^-1"]).unwrap();
        assert_eq!(
            index_via_presentation(&p, &OperationSpec::alpha(), 1000).unwrap(),
            3
        );
    }

    #[test]
    fn product_duality_small_cases() {
        let k = cyclic(4, 1, 0);
        let h = cyclic(2, 1, 0);
        let (l, d) = product_duality_check(&k, &h).unwrap();
        assert_eq!((l.order(), d), (8, 2));
        let (_, d) = product_duality_check(&cyclic(2, 1, 0), &cyclic(2, 1, 0)).unwrap();
        assert_eq!(d, 1);
        let (l, d) = product_duality_check(&cyclic(6, 1, 0), &cyclic(2, 1, 0)).unwrap();
        assert_eq!((l.order(), d), (12, 3));
        assert!(!is_extreme(&l).unwrap());
        assert!(matches!(
            product_duality_check(&cyclic(3, 1, 1), &cyclic(3, 1, 1)),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            product_duality_check(&cyclic(3, 1, 0), &cyclic(2, 1, 0)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn self_duality_matches_marked_iso() {
        for h in [cyclic(6, 1, 4), cyclic(5, 1, 1), cyclic(4, 1, 0), a5()] {
            assert_eq!(
                is_self_dual(&h).unwrap(),
                marked_iso(&h, &h.alpha_dual()).unwrap()
            );
        }
    }

    #[test]
    fn brute_force_rejects_large_groups() {
        assert!(matches!(
            bruteforce_minimal_normal(&a5(), &OperationSpec::alpha()),
            Err(Error::TooLarge { .. })
        ));
    }
}
