//! Constructors for the hypermap families and worked examples.
//!
//! Permutation-built families use small natural actions; the quaternion and
//! order-20 groups come from coset enumeration of their presentations and act
//! regularly. Every family that has a short presentation in the marks also
//! exposes it, so the augmented-presentation route can cross-check it.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::{todd_coxeter, Presentation, Word, DEFAULT_MAX_COSETS};
use crate::hypermap::{direct_product, OrientedHypermap};
use crate::perm::Permutation;

/// A family name with its integer parameters, as given on the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: String,
    pub parameters: BTreeMap<String, i64>,
}

impl FamilySpec {
    /// Parses `key=value` arguments.
    pub fn parse<S: AsRef<str>>(name: &str, args: &[S]) -> Result<FamilySpec> {
        let mut parameters = BTreeMap::new();
        for arg in args {
            let arg = arg.as_ref();
            let (key, value) = arg
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("expected key=value, found `{arg}`")))?;
            let value: i64 = value
                .trim()
                .parse()
                .map_err(|_| Error::BadParameter(format!("`{value}` is not an integer")))?;
            if parameters.insert(key.trim().to_string(), value).is_some() {
                return Err(Error::BadParameter(format!(
                    "parameter `{key}` given twice"
                )));
            }
        }
        Ok(FamilySpec {
            name: name.to_string(),
            parameters,
        })
    }

    pub fn family(&self) -> Result<Family> {
        let expect = |keys: &[&str]| -> Result<()> {
            for k in self.parameters.keys() {
                if !keys.contains(&k.as_str()) {
                    return Err(Error::BadParameter(format!(
                        "family `{}` takes no parameter `{k}`",
                        self.name
                    )));
                }
            }
            Ok(())
        };
        let get = |key: &str| -> Result<u64> {
            let v = *self.parameters.get(key).ok_or_else(|| {
                Error::BadParameter(format!("family `{}` needs parameter `{key}`", self.name))
            })?;
            u64::try_from(v).map_err(|_| Error::BadParameter(format!("{key}={v} must be positive")))
        };
        let family = match self.name.as_str() {
            "cyclic_selfdual" => {
                expect(&["k"])?;
                Family::CyclicSelfDual { k: get("k")? }
            }
            "cyclic_extreme" => {
                expect(&["d"])?;
                Family::CyclicExtreme { d: get("d")? }
            }
            "metacyclic" => {
                expect(&["k"])?;
                Family::Metacyclic { k: get("k")? }
            }
            "c6" => {
                expect(&[])?;
                Family::C6
            }
            "dihedral_map" => {
                expect(&["d"])?;
                Family::DihedralMap { d: get("d")? }
            }
            "quaternion" => {
                expect(&["n"])?;
                Family::Quaternion { n: get("n")? }
            }
            "a5" => {
                expect(&[])?;
                Family::A5
            }
            "order20" => {
                expect(&[])?;
                Family::Order20
            }
            "theorem9" => {
                expect(&["d"])?;
                Family::NonExtremeProduct { d: get("d")? }
            }
            other => return Err(Error::BadParameter(format!("unknown family `{other}`"))),
        };
        family.validate()?;
        Ok(family)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    CyclicSelfDual { k: u64 },
    CyclicExtreme { d: u64 },
    Metacyclic { k: u64 },
    C6,
    DihedralMap { d: u64 },
    Quaternion { n: u64 },
    A5,
    Order20,
    NonExtremeProduct { d: u64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CyclicSelfDual { k } => write!(f, "cyclic_selfdual k={k}"),
            Family::CyclicExtreme { d } => write!(f, "cyclic_extreme d={d}"),
            Family::Metacyclic { k } => write!(f, "metacyclic k={k}"),
            Family::C6 => write!(f, "c6"),
            Family::DihedralMap { d } => write!(f, "dihedral_map d={d}"),
            Family::Quaternion { n } => write!(f, "quaternion n={n}"),
            Family::A5 => write!(f, "a5"),
            Family::Order20 => write!(f, "order20"),
            Family::NonExtremeProduct { d } => write!(f, "theorem9 d={d}"),
        }
    }
}

impl Family {
    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::BadParameter(msg.to_string()));
        match *self {
            Family::CyclicSelfDual { k: 0 } => bad("k must be at least 1"),
            Family::CyclicExtreme { d: 0 }
            | Family::DihedralMap { d: 0 }
            | Family::NonExtremeProduct { d: 0 } => bad("d must be at least 1"),
            Family::Metacyclic { k } if k < 3 => bad("k must be at least 3 (use c6 for k=2)"),
            Family::Quaternion { n } if n < 2 => bad("n must be at least 2"),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<OrientedHypermap> {
        self.build_with_cap(DEFAULT_MAX_COSETS)
    }

    pub fn build_with_cap(&self, max_cosets: usize) -> Result<OrientedHypermap> {
        self.validate()?;
        match *self {
            Family::CyclicSelfDual { k } => cyclic_selfdual(k),
            Family::CyclicExtreme { d } => cyclic_extreme(d),
            Family::Metacyclic { k } => metacyclic(k),
            Family::C6 => c6_example(),
            Family::DihedralMap { d } => dihedral_map(d),
            Family::Quaternion { n } => from_presentation(&quaternion_presentation(n)?, max_cosets),
            Family::A5 => a5_example(),
            Family::Order20 => from_presentation(&order20_presentation(), max_cosets),
            Family::NonExtremeProduct { d } => non_extreme_product(d),
        }
    }

    /// A presentation on generators `x, y` whose generators correspond to the
    /// marks, when the family has a short one.
    pub fn presentation(&self) -> Option<Presentation> {
        let x = Word::generator(0);
        let y = Word::generator(1);
        let relators = match *self {
            Family::CyclicSelfDual { k } => vec![x.pow(k as i64), x.concat(&y.inverse())],
            Family::CyclicExtreme { d } => vec![x.pow(d as i64), y],
            Family::Metacyclic { k } => {
                let (q, u) = metacyclic_parameters(k);
                let h = x.concat(&y);
                vec![
                    h.pow(q as i64),
                    x.pow(k as i64),
                    x.inverse()
                        .concat(&h)
                        .concat(&x)
                        .concat(&h.pow(-(u as i64))),
                ]
            }
            Family::C6 => vec![x.pow(6), x.pow(4).concat(&y.inverse())],
            Family::DihedralMap { d } => vec![x.pow(2 * d as i64), y.pow(2), x.concat(&y).pow(2)],
            Family::Quaternion { n } => return quaternion_presentation(n).ok(),
            Family::A5 => return None,
            Family::Order20 => return Some(order20_presentation()),
            Family::NonExtremeProduct { d } => vec![
                x.pow(2 * d as i64),
                y.pow(2),
                x.concat(&y).concat(&x.inverse()).concat(&y.inverse()),
            ],
        };
        Some(Presentation::new(vec!["x".into(), "y".into()], relators).expect("two generators"))
    }
}

fn cycle(n: usize) -> Permutation {
    Permutation::from_cycles(&[(1..=n).collect()], n).expect("valid cycle")
}

/// `(C_k, g, g)`.
pub fn cyclic_selfdual(k: u64) -> Result<OrientedHypermap> {
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let g = cycle(k as usize);
    OrientedHypermap::from_marks(g.clone(), g)
}

/// `(C_d, g, 1)`.
pub fn cyclic_extreme(d: u64) -> Result<OrientedHypermap> {
    if d == 0 {
        return Err(Error::BadParameter("d must be at least 1".into()));
    }
    let g = cycle(d as usize);
    let e = Permutation::identity(d as usize);
    OrientedHypermap::from_marks(g, e)
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p))
}

fn multiplicative_order(u: u64, q: u64) -> u64 {
    let mut acc = u % q;
    let mut order = 1;
    while acc != 1 {
        acc = acc * u % q;
        order += 1;
    }
    order
}

/// Smallest prime `q ≡ 1 (mod k)` and smallest `u` in `2..q` of multiplicative
/// order exactly `k` modulo `q`.
pub fn metacyclic_parameters(k: u64) -> (u64, u64) {
    let q = (1..)
        .map(|t| t * k + 1)
        .find(|&q| is_prime(q))
        .expect("Dirichlet");
    let u = (2..q)
        .find(|&u| multiplicative_order(u, q) == k)
        .expect("cyclic unit group has elements of every order dividing q - 1");
    (q, u)
}

/// `C_q ⋊ C_k` on `q` points with `h: i ↦ i + 1`, `g: i ↦ u·i`, marked by
/// `a = g`, `b = g⁻¹h`, so that `ab = h`.
pub fn metacyclic(k: u64) -> Result<OrientedHypermap> {
    if k < 3 {
        return Err(Error::BadParameter(
            "k must be at least 3 (use c6 for k=2)".into(),
        ));
    }
    let (q, u) = metacyclic_parameters(k);
    let q = q as usize;
    let shift: Vec<usize> = (0..q).map(|i| (i + 1) % q + 1).collect();
    let scale: Vec<usize> = (0..q).map(|i| (i * u as usize) % q + 1).collect();
    let h = Permutation::from_images(&shift)?;
    let g = Permutation::from_images(&scale)?;
    let b = g.inverse().compose(&h)?;
    OrientedHypermap::from_marks(g, b)
}

/// `(C₆, g, g⁴)`.
pub fn c6_example() -> Result<OrientedHypermap> {
    let g = cycle(6);
    OrientedHypermap::from_marks(g.clone(), g.pow(4))
}

/// The dihedral group of order `4d`: rotation and reflection of a `2d`-gon.
/// For `d = 1` the 2-gon action is not faithful, so the Klein four-group acts
/// regularly on 4 points instead.
pub fn dihedral_map(d: u64) -> Result<OrientedHypermap> {
    if d == 0 {
        return Err(Error::BadParameter("d must be at least 1".into()));
    }
    if d == 1 {
        return OrientedHypermap::from_marks(
            Permutation::parse_cycles("(1 2)(3 4)", 4)?,
            Permutation::parse_cycles("(1 3)(2 4)", 4)?,
        );
    }
    let m = 2 * d as usize;
    let rotation: Vec<usize> = (0..m).map(|i| (i + 1) % m + 1).collect();
    let reflection: Vec<usize> = (0..m).map(|i| (m - i) % m + 1).collect();
    OrientedHypermap::from_marks(
        Permutation::from_images(&rotation)?,
        Permutation::from_images(&reflection)?,
    )
}

pub fn quaternion_presentation(n: u64) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::BadParameter("n must be at least 2".into()));
    }
    Presentation::parse(
        &["x", "y"],
        &[
            format!("x^{n} = y^2"),
            format!("x^{}", 2 * n),
            "y^-1*x*y = x^-1".to_string(),
        ],
    )
}

/// The generalized quaternion group of order `4n`, acting regularly.
pub fn generalized_quaternion(n: u64) -> Result<OrientedHypermap> {
    from_presentation(&quaternion_presentation(n)?, DEFAULT_MAX_COSETS)
}

/// `(A₅, (1 2 3 4 5), (1 2 3))`.
pub fn a5_example() -> Result<OrientedHypermap> {
    OrientedHypermap::from_marks(
        Permutation::parse_cycles("(1 2 3 4 5)", 5)?,
        Permutation::parse_cycles("(1 2 3)", 5)?,
    )
}

pub fn order20_presentation() -> Presentation {
    Presentation::parse(&["x", "y"], &["x^4", "y^4", "x*y = y^2*x^2"]).expect("fixed presentation")
}

pub fn order20_example() -> Result<OrientedHypermap> {
    from_presentation(&order20_presentation(), DEFAULT_MAX_COSETS)
}

/// `K × H^α` with `K = (C_2d, g, 1)` and `H = (C₂, ḡ, 1)`.
pub fn non_extreme_product(d: u64) -> Result<OrientedHypermap> {
    if d == 0 {
        return Err(Error::BadParameter("d must be at least 1".into()));
    }
    let k = cyclic_extreme(2 * d)?;
    let h = cyclic_extreme(2)?;
    direct_product(&k, &h.alpha_dual())
}

/// The regular representation of a two-generator presentation, marked by
/// its generators.
pub fn from_presentation(
    presentation: &Presentation,
    max_cosets: usize,
) -> Result<OrientedHypermap> {
    if presentation.generator_count() != 2 {
        return Err(Error::NotTwoGenerator(presentation.generator_count()));
    }
    let enumeration = todd_coxeter(presentation, &[], max_cosets)?;
    let [x, y]: [Permutation; 2] = enumeration
        .generator_images
        .try_into()
        .expect("two generators");
    OrientedHypermap::from_marks(x, y)
}
