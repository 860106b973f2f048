//! Oriented regular hypermaps as marked groups `(G, x, y)` with `G = ⟨x, y⟩`.
//!
//! Comparisons between two hypermaps go through the parallel product
//! `⟨(x₁, x₂), (y₁, y₂)⟩ ≤ G₁ × G₂`, realized on the disjoint union of the
//! two point sets (first factor on `1..=n₁`, second on `n₁+1..=n₁+n₂`).

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_DEGREE_CAP};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct OrientedHypermap {
    group: PermGroup,
    x: Permutation,
    y: Permutation,
}

/// Orders of `x`, `y` and `xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HypermapType {
    pub l: u64,
    pub m: u64,
    pub n: u64,
    pub is_map: bool,
}

impl fmt::Display for HypermapType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerCharacteristic {
    pub characteristic: i128,
    pub genus: i128,
}

impl OrientedHypermap {
    /// `hypermap_from_marks`: the marked group `(⟨x, y⟩, x, y)` in the given action.
    pub fn from_marks(x: Permutation, y: Permutation) -> Result<OrientedHypermap> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch(x.degree(), y.degree()));
        }
        let group = PermGroup::new(vec![x.clone(), y.clone()])?;
        Ok(OrientedHypermap { group, x, y })
    }

    /// The hypermap with a single dart.
    pub fn one_dart() -> OrientedHypermap {
        let e = Permutation::identity(1);
        OrientedHypermap::from_marks(e.clone(), e).expect("trivial hypermap")
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn marks(&self) -> [Permutation; 2] {
        [self.x.clone(), self.y.clone()]
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    /// The same marked group acting regularly on `|G|` points (right cosets of
    /// the trivial subgroup).
    pub fn regular_form(&self) -> Result<OrientedHypermap> {
        if self.order() > DEFAULT_DEGREE_CAP as u128 {
            return Err(Error::TooLarge {
                what: "regular degree",
                size: self.order(),
                cap: DEFAULT_DEGREE_CAP as u128,
            });
        }
        let space = self.group.cosets(&PermGroup::trivial(self.degree()))?;
        OrientedHypermap::from_marks(space.act(&self.x), space.act(&self.y))
    }

    /// `x ↦ y, y ↦ x`.
    pub fn alpha_dual(&self) -> OrientedHypermap {
        OrientedHypermap {
            group: self.group.clone(),
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// `x ↦ y⁻¹, y ↦ x⁻¹`.
    pub fn beta_dual(&self) -> OrientedHypermap {
        OrientedHypermap {
            group: self.group.clone(),
            x: self.y.inverse(),
            y: self.x.inverse(),
        }
    }

    /// `x ↦ x⁻¹, y ↦ y⁻¹`.
    pub fn mirror(&self) -> OrientedHypermap {
        OrientedHypermap {
            group: self.group.clone(),
            x: self.x.inverse(),
            y: self.y.inverse(),
        }
    }

    pub fn hypermap_type(&self) -> HypermapType {
        let n = self.x.mul_unchecked(&self.y).order();
        HypermapType {
            l: self.x.order(),
            m: self.y.order(),
            n,
            is_map: n <= 2,
        }
    }

    /// `|G|/l + |G|/m + |G|/n − |G|` and the genus of the underlying surface.
    pub fn euler_characteristic(&self) -> Result<EulerCharacteristic> {
        let t = self.hypermap_type();
        let darts = self.order() as i128;
        let chi = darts / t.l as i128 + darts / t.m as i128 + darts / t.n as i128 - darts;
        if chi % 2 != 0 {
            return Err(Error::InternalInconsistency(format!(
                "odd Euler characteristic {chi} for type {t}"
            )));
        }
        Ok(EulerCharacteristic {
            characteristic: chi,
            genus: (2 - chi) / 2,
        })
    }
}

/// `⟨(x₁, x₂), (y₁, y₂)⟩` on the disjoint union of the two point sets.
pub fn parallel_product(h1: &OrientedHypermap, h2: &OrientedHypermap) -> Result<PermGroup> {
    PermGroup::new(vec![h1.x.disjoint_union(&h2.x), h1.y.disjoint_union(&h2.y)])
}

/// `x₁ ↦ x₂, y₁ ↦ y₂` extends to an isomorphism.
pub fn marked_iso(h1: &OrientedHypermap, h2: &OrientedHypermap) -> Result<bool> {
    if h1.order() != h2.order() {
        return Ok(false);
    }
    Ok(parallel_product(h1, h2)?.order() == h1.order())
}

/// `x₁ ↦ x₂, y₁ ↦ y₂` extends to an epimorphism `G₁ → G₂`.
pub fn covers(h1: &OrientedHypermap, h2: &OrientedHypermap) -> Result<bool> {
    if !h1.order().is_multiple_of(h2.order()) {
        return Ok(false);
    }
    Ok(parallel_product(h1, h2)?.order() == h1.order())
}

/// The greatest common quotient has one dart.
pub fn orthogonal(h1: &OrientedHypermap, h2: &OrientedHypermap) -> Result<bool> {
    Ok(parallel_product(h1, h2)?.order() == h1.order() * h2.order())
}

pub fn direct_product(h1: &OrientedHypermap, h2: &OrientedHypermap) -> Result<OrientedHypermap> {
    if !orthogonal(h1, h2)? {
        return Err(Error::NotOrthogonal);
    }
    OrientedHypermap::from_marks(h1.x.disjoint_union(&h2.x), h1.y.disjoint_union(&h2.y))
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn construction() {
        let h = cyclic(3, 1, 1);
        assert_eq!(h.order(), 3);
        assert_eq!(a5().order(), 60);
        let h = OrientedHypermap::from_marks(cycle(2), Permutation::identity(2)).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(
            OrientedHypermap::from_marks(cycle(2), cycle(3)).unwrap_err(),
            Error::DegreeMismatch(2, 3)
        );
    }

    #[test]
    fn duals_and_mirror() {
        let h = a5();
        let a = h.alpha_dual();
        assert_eq!(a.x().to_string(), "(1 2 3)");
        assert_eq!(a.y().to_string(), "(1 2 3 4 5)");
        let b = h.beta_dual();
        assert_eq!(b.x().to_string(), "(1 3 2)");
        assert_eq!(b.y().to_string(), "(1 5 4 3 2)");
        let bb = b.beta_dual();
        assert_eq!(bb.marks(), h.marks());
        let m = cyclic(3, 1, 1).mirror();
        assert_eq!(m.marks(), cyclic(3, 2, 2).marks());
        let c2 = OrientedHypermap::from_marks(cycle(2), Permutation::identity(2)).unwrap();
        assert_eq!(c2.mirror().marks(), c2.marks());
        let d = c2.alpha_dual();
        assert!(d.x().is_identity());
        assert_eq!(d.y(), &cycle(2));
    }

    #[test]
    fn isomorphism() {
        assert!(marked_iso(&cyclic(3, 1, 1), &cyclic(3, 2, 2)).unwrap());
        assert!(!marked_iso(&a5(), &a5().alpha_dual()).unwrap());
        assert!(marked_iso(&a5(), &a5()).unwrap());
        assert!(!marked_iso(&cyclic(6, 1, 4), &cyclic(6, 4, 1)).unwrap());
    }

    #[test]
    fn covering() {
        assert!(covers(&cyclic(6, 1, 1), &cyclic(3, 1, 1)).unwrap());
        assert!(!covers(&cyclic(3, 1, 1), &cyclic(6, 1, 1)).unwrap());
        assert!(covers(&a5(), &OrientedHypermap::one_dart()).unwrap());
        assert!(!covers(&cyclic(6, 1, 1), &cyclic(3, 1, 2)).unwrap());
    }

    #[test]
    fn orthogonality_and_products() {
        assert!(orthogonal(&cyclic(2, 1, 1), &cyclic(3, 1, 1)).unwrap());
        assert!(!orthogonal(&cyclic(3, 1, 1), &cyclic(3, 1, 1)).unwrap());
        let k = cyclic(2, 1, 0);
        let h = cyclic(2, 0, 1);
        assert!(orthogonal(&k, &h).unwrap());
        let p = direct_product(&cyclic(2, 1, 1), &cyclic(3, 1, 1)).unwrap();
        assert_eq!(p.order(), 6);
        let l = direct_product(&cyclic(4, 1, 0), &cyclic(2, 0, 1)).unwrap();
        assert_eq!(l.order(), 8);
        assert_eq!(
            direct_product(&cyclic(3, 1, 1), &cyclic(3, 1, 1)).unwrap_err(),
            Error::NotOrthogonal
        );
    }

    #[test]
    fn types_and_euler() {
        let t = cyclic(3, 1, 1).hypermap_type();
        assert_eq!((t.l, t.m, t.n, t.is_map), (3, 3, 3, false));
        let e = cyclic(3, 1, 1).euler_characteristic().unwrap();
        assert_eq!((e.characteristic, e.genus), (0, 1));
        let e = OrientedHypermap::one_dart().euler_characteristic().unwrap();
        assert_eq!((e.characteristic, e.genus), (2, 0));
        let t = a5().hypermap_type();
        assert_eq!((t.l, t.m, t.n), (5, 3, 5));
        let e = a5().euler_characteristic().unwrap();
        assert_eq!((e.characteristic, e.genus), (12 + 20 + 12 - 60, 9));
    }

    #[test]
    fn regular_forms() {
        let h = cyclic(3, 1, 1).regular_form().unwrap();
        assert_eq!(h.degree(), 3);
        assert_eq!(h.hypermap_type(), cyclic(3, 1, 1).hypermap_type());
        let v4 = OrientedHypermap::from_marks(
            Permutation::parse_cycles("(1 2)", 4).unwrap(),
            Permutation::parse_cycles("(3 4)", 4).unwrap(),
        )
        .unwrap();
        let r = v4.regular_form().unwrap();
        assert_eq!(r.degree(), 4);
        assert!(marked_iso(&r, &v4).unwrap());
        let r = a5().regular_form().unwrap();
        assert_eq!(r.degree(), 60);
        assert!(marked_iso(&r, &a5()).unwrap());
    }
}
