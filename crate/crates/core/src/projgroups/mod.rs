//! PGL_2(q), PΓL_2(q) and AGL(1, q) as permutation groups.
//!
//! Points of the projective line are numbered `[∞, 0, 1, λ, λ², …]` for the
//! field's primitive element λ, so scaling by λ is the cycle
//! `(2 3 … q)`. Affine points use the same order without `∞`.

mod field;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

pub use field::{is_prime, prime_power, FiniteField, MAX_CHARACTERISTIC, MAX_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectiveLinePoint {
    Infinity,
    Affine(usize),
}

impl ProjectiveLinePoint {
    /// Position in the canonical point order.
    pub fn index(self, field: &FiniteField) -> usize {
        match self {
            ProjectiveLinePoint::Infinity => 0,
            ProjectiveLinePoint::Affine(x) => 1 + affine_index(field, x),
        }
    }

    pub fn from_index(field: &FiniteField, i: usize) -> Self {
        if i == 0 {
            ProjectiveLinePoint::Infinity
        } else {
            ProjectiveLinePoint::Affine(affine_point(field, i - 1))
        }
    }
}

/// Points of P¹(F_q) in canonical order.
pub fn projective_line(field: &FiniteField) -> Vec<ProjectiveLinePoint> {
    (0..=field.order())
        .map(|i| ProjectiveLinePoint::from_index(field, i))
        .collect()
}

/// Position of a field element in the affine order `[0, 1, λ, λ², …]`.
fn affine_index(field: &FiniteField, x: usize) -> usize {
    match field.log(x) {
        None => 0,
        Some(j) => 1 + j,
    }
}

fn affine_point(field: &FiniteField, i: usize) -> usize {
    if i == 0 {
        0
    } else {
        field.primitive_power(i - 1)
    }
}

/// The Möbius map `x -> (a x + b) / (c x + d)` on P¹(F_q).
pub fn mobius(field: &FiniteField, a: usize, b: usize, c: usize, d: usize) -> Permutation {
    let det = field.sub(field.mul(a, d), field.mul(b, c));
    assert_ne!(det, 0, "singular matrix");
    let images = projective_line(field)
        .into_iter()
        .map(|pt| {
            let image = match pt {
                ProjectiveLinePoint::Infinity if c == 0 => ProjectiveLinePoint::Infinity,
                ProjectiveLinePoint::Infinity => {
                    ProjectiveLinePoint::Affine(field.div(a, c).unwrap())
                }
                ProjectiveLinePoint::Affine(x) => {
                    let num = field.add(field.mul(a, x), b);
                    let den = field.add(field.mul(c, x), d);
                    match field.div(num, den) {
                        Some(y) => ProjectiveLinePoint::Affine(y),
                        None => ProjectiveLinePoint::Infinity,
                    }
                }
            };
            image.index(field)
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// Coordinatewise Frobenius on P¹(F_q).
pub fn projective_frobenius(field: &FiniteField) -> Permutation {
    let images = projective_line(field)
        .into_iter()
        .map(|pt| match pt {
            ProjectiveLinePoint::Infinity => 0,
            ProjectiveLinePoint::Affine(x) => {
                ProjectiveLinePoint::Affine(field.frobenius(x)).index(field)
            }
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

/// The affine map `x -> a x + b` on F_q.
pub fn affine_map(field: &FiniteField, a: usize, b: usize) -> Permutation {
    assert_ne!(a, 0, "singular affine map");
    let images = (0..field.order())
        .map(|i| {
            let x = affine_point(field, i);
            affine_index(field, field.add(field.mul(a, x), b))
        })
        .collect();
    Permutation::from_images(images).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProjectiveKind {
    #[serde(rename = "PGL2")]
    Pgl2,
    #[serde(rename = "PGammaL2")]
    PGammaL2,
    #[serde(rename = "AGL1")]
    Agl1,
}

impl ProjectiveKind {
    pub fn name(self) -> &'static str {
        match self {
            ProjectiveKind::Pgl2 => "PGL2",
            ProjectiveKind::PGammaL2 => "PGammaL2",
            ProjectiveKind::Agl1 => "AGL1",
        }
    }

    /// Number of points acted on.
    pub fn degree(self, q: usize) -> usize {
        match self {
            ProjectiveKind::Pgl2 | ProjectiveKind::PGammaL2 => q + 1,
            ProjectiveKind::Agl1 => q,
        }
    }

    /// Group order from the standard formulas.
    pub fn expected_order(self, p: u32, e: u32) -> usize {
        let q = p.pow(e) as usize;
        match self {
            ProjectiveKind::Pgl2 => q * (q * q - 1),
            ProjectiveKind::PGammaL2 => e as usize * q * (q * q - 1),
            ProjectiveKind::Agl1 => q * (q - 1),
        }
    }
}

impl fmt::Display for ProjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProjectiveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "PGL2" => Ok(ProjectiveKind::Pgl2),
            "PGammaL2" => Ok(ProjectiveKind::PGammaL2),
            "AGL1" => Ok(ProjectiveKind::Agl1),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

/// The permutation group of the given kind over F_q.
///
/// PGL2 is generated by `x -> x+1`, `x -> λx` and `x -> 1/x`; PΓL2 adds the
/// Frobenius `x -> x^p`; AGL1 is generated by `x -> x+1` and `x -> λx`.
pub fn projective_group_generators(kind: ProjectiveKind, q: u32) -> Result<PermutationGroup> {
    let field = FiniteField::with_order(q)?;
    let lambda = field.primitive_element();
    let gens = match kind {
        ProjectiveKind::Pgl2 | ProjectiveKind::PGammaL2 => {
            let mut gens = vec![
                mobius(&field, 1, 1, 0, 1),
                mobius(&field, lambda, 0, 0, 1),
                mobius(&field, 0, 1, 1, 0),
            ];
            if kind == ProjectiveKind::PGammaL2 {
                gens.push(projective_frobenius(&field));
            }
            gens
        }
        ProjectiveKind::Agl1 => vec![affine_map(&field, 1, 1), affine_map(&field, lambda, 0)],
    };
    PermutationGroup::from_generators(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_ELEMENT_CAP;

    #[test]
    fn point_order() {
        let f = FiniteField::with_order(5).unwrap();
        let pts = projective_line(&f);
        assert_eq!(pts.len(), 6);
        // [∞, 0, 1, 2, 4, 3] for λ = 2
        assert_eq!(
            pts,
            vec![
                ProjectiveLinePoint::Infinity,
                ProjectiveLinePoint::Affine(0),
                ProjectiveLinePoint::Affine(1),
                ProjectiveLinePoint::Affine(2),
                ProjectiveLinePoint::Affine(4),
                ProjectiveLinePoint::Affine(3),
            ]
        );
        for (i, pt) in pts.iter().enumerate() {
            assert_eq!(pt.index(&f), i);
        }
    }

    #[test]
    fn scaling_is_a_visible_cycle() {
        let f = FiniteField::with_order(8).unwrap();
        let scale = mobius(&f, f.primitive_element(), 0, 0, 1);
        assert_eq!(scale.to_string(), "(2 3 4 5 6 7 8)");
        let inversion = mobius(&f, 0, 1, 1, 0);
        assert_eq!(inversion.apply(0), 1);
        assert_eq!(inversion.apply(2), 2);
    }

    #[test]
    fn orders_and_degrees() {
        let cap = DEFAULT_ELEMENT_CAP;
        let pgl5 = projective_group_generators(ProjectiveKind::Pgl2, 5).unwrap();
        assert_eq!((pgl5.degree(), pgl5.order(cap).unwrap()), (6, 120));
        let pgaml8 = projective_group_generators(ProjectiveKind::PGammaL2, 8).unwrap();
        assert_eq!((pgaml8.degree(), pgaml8.order(cap).unwrap()), (9, 1512));
        let agl5 = projective_group_generators(ProjectiveKind::Agl1, 5).unwrap();
        assert_eq!((agl5.degree(), agl5.order(cap).unwrap()), (5, 20));
    }

    #[test]
    fn order_formulas() {
        let cap = DEFAULT_ELEMENT_CAP;
        for q in [4u32, 5, 7, 8, 9] {
            let (p, e) = prime_power(q).unwrap();
            for kind in [
                ProjectiveKind::Pgl2,
                ProjectiveKind::PGammaL2,
                ProjectiveKind::Agl1,
            ] {
                let g = projective_group_generators(kind, q).unwrap();
                assert_eq!(g.degree(), kind.degree(q as usize));
                assert_eq!(
                    g.order(cap).unwrap(),
                    kind.expected_order(p, e),
                    "{kind}({q})"
                );
            }
        }
    }

    #[test]
    fn frobenius_normalizes_pgl2() {
        let cap = DEFAULT_ELEMENT_CAP;
        for q in [4u32, 8, 9] {
            let f = FiniteField::with_order(q).unwrap();
            let frob = projective_frobenius(&f);
            assert_eq!(frob.order(), f.extension_degree() as usize);
            let pgl = projective_group_generators(ProjectiveKind::Pgl2, q).unwrap();
            for g in pgl.generators() {
                assert!(pgl.contains(&frob.conjugate(g), cap).unwrap());
            }
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!(
            "PGammaL2".parse::<ProjectiveKind>().unwrap(),
            ProjectiveKind::PGammaL2
        );
        assert_eq!(
            "PSL2".parse::<ProjectiveKind>().unwrap_err(),
            Error::UnsupportedKind("PSL2".into())
        );
    }

    #[test]
    fn non_prime_power_is_rejected() {
        assert_eq!(
            projective_group_generators(ProjectiveKind::Pgl2, 10).unwrap_err(),
            Error::NotPrimePower(10)
        );
        assert!(matches!(
            projective_group_generators(ProjectiveKind::Agl1, 81),
            Err(Error::FieldTooLarge { .. })
        ));
    }
}
