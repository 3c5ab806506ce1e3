//! Graded dimensions and invariant dimensions of permutation actions on
//! `H^•(O_S)^{⊗n}` for a K3 surface S.
//!
//! `H^•(O_S)` has a basis `1` (degree 0) and `σ` (degree 2), so
//! `H^{2k}(O_{S^n})` has a basis of monomials indexed by k-subsets of
//! `{0, .., n-1}` and a permutation group acts on it by permuting subsets.
//! The invariant dimension in degree `2k` is therefore the number of orbits
//! on k-subsets. No vectors are ever built.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

/// Finite-support map from degree to dimension. Zero entries are not stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    dims: BTreeMap<u32, u64>,
}

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    /// The one-dimensional space in degree 0, the unit for [`kunneth_tensor`].
    pub fn unit() -> Self {
        Self::from_pairs([(0, 1)])
    }

    /// `H^•(O_S)` for a K3 surface: `{0 ↦ 1, 2 ↦ 1}`.
    pub fn k3() -> Self {
        Self::from_pairs([(0, 1), (2, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut g = Self::new();
        for (d, v) in pairs {
            g.add(d, v);
        }
        g
    }

    pub fn get(&self, degree: u32) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: u32, dim: u64) {
        if dim > 0 {
            *self.dims.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    /// Degrees with nonzero dimension, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.dims.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.dims.iter().map(|(&d, &v)| (d, v))
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn tensor_power(&self, n: usize) -> Self {
        (0..n).fold(Self::unit(), |acc, _| kunneth_tensor(&acc, self))
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (d, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}: {v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for GradedDims {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.dims.len()))?;
        for (d, v) in &self.dims {
            map.serialize_entry(&d.to_string(), v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for GradedDims {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct DimsVisitor;

        impl<'de> Visitor<'de> for DimsVisitor {
            type Value = GradedDims;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from decimal degree strings to dimensions")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<GradedDims, A::Error> {
                let mut g = GradedDims::new();
                while let Some((key, value)) = access.next_entry::<String, u64>()? {
                    let degree: u32 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad degree {key:?}")))?;
                    g.add(degree, value);
                }
                Ok(g)
            }
        }

        deserializer.deserialize_map(DimsVisitor)
    }
}

/// Künneth product: the degree-d dimension is `Σ_{i+j=d} a(i)·b(j)`.
pub fn kunneth_tensor(a: &GradedDims, b: &GradedDims) -> GradedDims {
    let mut out = GradedDims::new();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add(i + j, x * y);
        }
    }
    out
}

/// Invariant dimensions of `G ⊂ S_n` on `H^•(O_S)^{⊗n}`: degree `2k` gets
/// the number of orbits of G on k-subsets.
pub fn invariant_dims_subset_model(g: &PermutationGroup, budget: usize) -> Result<GradedDims> {
    let profile = g.homogeneity_profile(budget)?;
    Ok(GradedDims::from_pairs(
        profile
            .orbit_counts
            .iter()
            .map(|&(k, c)| (2 * k as u32, c as u64)),
    ))
}

/// Number of k-subsets fixed setwise by `p`, for each k in `0..=n`.
///
/// A subset is fixed iff it is a union of cycles, so this is the
/// coefficient list of `Π_cycles (1 + x^len)`.
pub fn fixed_subset_counts(p: &Permutation) -> Vec<u128> {
    let mut poly = vec![0u128; p.degree() + 1];
    poly[0] = 1;
    let mut top = 0;
    for len in p.cycle_type() {
        for i in (0..=top).rev() {
            poly[i + len] += poly[i];
        }
        top += len;
    }
    poly
}

/// Invariant dimensions by averaging fixed-subset counts over the group.
pub fn burnside_invariant_dims(g: &PermutationGroup, cap: usize) -> Result<GradedDims> {
    let elements = g.enumerate_elements(cap)?;
    let mut sums = vec![0u128; g.degree() + 1];
    for p in elements {
        for (k, c) in fixed_subset_counts(p).into_iter().enumerate() {
            sums[k] += c;
        }
    }
    let order = elements.len() as u128;
    let mut out = GradedDims::new();
    for (k, s) in sums.into_iter().enumerate() {
        if s % order != 0 {
            return Err(Error::NonIntegralResult {
                order: elements.len(),
            });
        }
        out.add(2 * k as u32, (s / order) as u64);
    }
    Ok(out)
}

/// Outcome of the homological-unit test for `D^b(Coh^G(S^n))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitVerdict {
    pub is_hyper_kahler: bool,
    pub invariant_dims: GradedDims,
    /// Degrees whose invariant dimension differs from 1.
    pub offending_degrees: Vec<(u32, u64)>,
}

/// The invariants always contain `C[t]/t^{n+1}` generated by the sum of the
/// degree-2 monomials; the category is hyper-Kähler exactly when the
/// invariants are no bigger, i.e. every degree `2k` with `0 <= k <= n` has
/// dimension 1.
pub fn hyperkahler_unit_verdict(g: &PermutationGroup, budget: usize) -> Result<UnitVerdict> {
    let dims = invariant_dims_subset_model(g, budget)?;
    let n = g.degree() as u32;
    let offending_degrees: Vec<(u32, u64)> = (0..=n)
        .map(|k| (2 * k, dims.get(2 * k)))
        .filter(|&(_, v)| v != 1)
        .chain(dims.iter().filter(|&(d, _)| d % 2 == 1 || d > 2 * n))
        .collect();
    Ok(UnitVerdict {
        is_hyper_kahler: offending_degrees.is_empty(),
        invariant_dims: dims,
        offending_degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::{binomial, DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_BUDGET};
    use crate::projgroups::{projective_group_generators, ProjectiveKind};

    const BUDGET: usize = DEFAULT_SUBSET_BUDGET;

    #[test]
    fn kunneth_examples() {
        let k3 = GradedDims::k3();
        assert_eq!(
            kunneth_tensor(&k3, &k3),
            GradedDims::from_pairs([(0, 1), (2, 2), (4, 1)])
        );
        assert_eq!(kunneth_tensor(&k3, &GradedDims::unit()), k3);
        for n in 0..8 {
            let power = k3.tensor_power(n);
            for k in 0..=n {
                assert_eq!(power.get(2 * k as u32) as u128, binomial(n, k));
            }
            assert_eq!(power.total(), 1 << n);
        }
    }

    #[test]
    fn subset_model_examples() {
        let trivial = PermutationGroup::trivial(2);
        let k3 = GradedDims::k3();
        assert_eq!(
            invariant_dims_subset_model(&trivial, BUDGET).unwrap(),
            kunneth_tensor(&k3, &k3)
        );
        assert_eq!(
            invariant_dims_subset_model(&PermutationGroup::symmetric(2), BUDGET).unwrap(),
            GradedDims::from_pairs([(0, 1), (2, 1), (4, 1)])
        );
        assert_eq!(
            invariant_dims_subset_model(&PermutationGroup::cyclic(4), BUDGET)
                .unwrap()
                .get(4),
            2
        );
    }

    #[test]
    fn burnside_examples() {
        let cap = DEFAULT_ELEMENT_CAP;
        assert_eq!(
            burnside_invariant_dims(&PermutationGroup::symmetric(3), cap).unwrap(),
            GradedDims::from_pairs([(0, 1), (2, 1), (4, 1), (6, 1)])
        );
        assert_eq!(
            burnside_invariant_dims(&PermutationGroup::cyclic(4), cap)
                .unwrap()
                .get(4),
            2
        );
        assert_eq!(
            burnside_invariant_dims(&PermutationGroup::trivial(3), cap)
                .unwrap()
                .get(2),
            3
        );
    }

    #[test]
    fn fixed_subsets_of_a_four_cycle() {
        let p = Permutation::parse_cycles("(0 1 2 3)", None).unwrap();
        assert_eq!(fixed_subset_counts(&p), vec![1, 0, 0, 0, 1]);
        let q = Permutation::parse_cycles("(0 2)(1 3)", None).unwrap();
        assert_eq!(fixed_subset_counts(&q), vec![1, 0, 2, 0, 1]);
    }

    #[test]
    fn verdict_examples() {
        assert!(
            hyperkahler_unit_verdict(&PermutationGroup::alternating(6), BUDGET)
                .unwrap()
                .is_hyper_kahler
        );
        let pgl8 = projective_group_generators(ProjectiveKind::Pgl2, 8).unwrap();
        assert!(
            hyperkahler_unit_verdict(&pgl8, BUDGET)
                .unwrap()
                .is_hyper_kahler
        );
        let d5 = hyperkahler_unit_verdict(&PermutationGroup::dihedral(5), BUDGET).unwrap();
        assert!(!d5.is_hyper_kahler);
        assert_eq!(d5.offending_degrees, vec![(4, 2), (6, 2)]);
    }

    #[test]
    fn symmetric_group_has_total_n_plus_one() {
        for n in 1..=9 {
            let dims =
                invariant_dims_subset_model(&PermutationGroup::symmetric(n), BUDGET).unwrap();
            assert_eq!(dims.total(), n as u64 + 1);
        }
    }

    #[test]
    fn degree_two_always_has_an_invariant() {
        for g in [
            PermutationGroup::trivial(6),
            PermutationGroup::cyclic(7),
            PermutationGroup::dihedral(8),
        ] {
            assert!(invariant_dims_subset_model(&g, BUDGET).unwrap().get(2) >= 1);
        }
    }

    #[test]
    fn json_keys_are_numeric_order() {
        let g = GradedDims::from_pairs([(10, 3), (2, 1), (0, 1)]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"0":1,"2":1,"10":3}"#);
        let back: GradedDims = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
