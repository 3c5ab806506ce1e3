//! Orbifold Euler characteristics of `(S^n, G)` for a permutation group
//! `G ⊂ S_n` and a surface S of Euler number `e_base`.
//!
//! `e(S^n, G) = (1/|G|) Σ_{gh = hg} e((S^n)^{⟨g,h⟩})`, and the fixed locus of
//! `⟨g,h⟩` is a product of diagonals, one copy of S per orbit on points, so
//! each commuting pair contributes `e_base^{#orbits}`. Permutation actions
//! of a symplectic surface's product have integral age shifts, so no sign
//! corrections enter.
//!
//! For `e_base = 24` these numbers are identified with the alternating sums
//! of Hochschild numbers of `D^b(Coh^G(S^n))` via the orbifold HKR
//! isomorphism; that identification is conditional and reports say so.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permgroup::PermutationGroup;
use crate::projgroups::{projective_group_generators, ProjectiveKind};

/// Euler number of a K3 surface.
pub const K3_EULER: i64 = 24;

/// Orbifold Euler characteristic, summed over conjugacy classes and
/// centralizers.
pub fn orbifold_euler(g: &PermutationGroup, e_base: i64, cap: usize) -> Result<BigInt> {
    let histogram = g.commuting_pair_orbit_histogram(cap)?;
    let base = BigInt::from(e_base);
    let total: BigInt = histogram
        .iter()
        .map(|(&orbits, &pairs)| BigInt::from(pairs) * Pow::pow(&base, orbits))
        .sum();
    let order = g.order(cap)?;
    let (quotient, remainder) = total.div_rem(&BigInt::from(order));
    if !remainder.is_zero() {
        return Err(Error::NonIntegralResult { order });
    }
    Ok(quotient)
}

/// Coefficients of `z^0..=z^{n_max}` in `Π_{m≥1} (1 - z^m)^{-e_base}`.
///
/// Each factor is applied to the truncated series one power at a time:
/// dividing by `1 - z^m` is a running sum with stride m, multiplying by it
/// a running difference.
pub fn goettsche_coefficients(n_max: usize, e_base: i64) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); n_max + 1];
    series[0] = BigInt::one();
    for m in 1..=n_max {
        for _ in 0..e_base.unsigned_abs() {
            if e_base > 0 {
                for i in m..=n_max {
                    let prev = series[i - m].clone();
                    series[i] += prev;
                }
            } else {
                for i in (m..=n_max).rev() {
                    let prev = series[i - m].clone();
                    series[i] -= prev;
                }
            }
        }
    }
    series
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EulerFamily {
    Sn,
    An,
    /// The exceptional k-homogeneous groups AGL(1,5), PGL_2(5), PGL_2(8)
    /// and PΓL_2(8).
    #[serde(rename = "sporadic")]
    Sporadic,
}

impl fmt::Display for EulerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerFamily::Sn => "Sn",
            EulerFamily::An => "An",
            EulerFamily::Sporadic => "sporadic",
        })
    }
}

impl FromStr for EulerFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Sn" => Ok(EulerFamily::Sn),
            "An" => Ok(EulerFamily::An),
            "sporadic" => Ok(EulerFamily::Sporadic),
            other => Err(Error::UnsupportedKind(other.to_string())),
        }
    }
}

fn as_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerEntry {
    pub n: usize,
    pub label: String,
    #[serde(serialize_with = "as_decimal")]
    pub euler: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerSeries {
    pub family: EulerFamily,
    pub e_base: i64,
    pub entries: Vec<EulerEntry>,
}

impl EulerSeries {
    pub fn values(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.euler.clone()).collect()
    }
}

/// Groups of the family with degree at most `n_max`, as `(n, label, group)`.
/// Degree 0 has no group; its entry is the empty product.
fn family_members(
    family: EulerFamily,
    n_max: usize,
) -> Vec<(usize, String, Option<PermutationGroup>)> {
    match family {
        EulerFamily::Sn => (0..=n_max)
            .map(|n| {
                (
                    n,
                    format!("S_{n}"),
                    (n > 0).then(|| PermutationGroup::symmetric(n)),
                )
            })
            .collect(),
        EulerFamily::An => (0..=n_max)
            .map(|n| {
                (
                    n,
                    format!("A_{n}"),
                    (n > 0).then(|| PermutationGroup::alternating(n)),
                )
            })
            .collect(),
        EulerFamily::Sporadic => [
            (ProjectiveKind::Agl1, 5, "AGL(1,5)"),
            (ProjectiveKind::Pgl2, 5, "PGL_2(5)"),
            (ProjectiveKind::Pgl2, 8, "PGL_2(8)"),
            (ProjectiveKind::PGammaL2, 8, "PΓL_2(8)"),
        ]
        .into_iter()
        .map(|(kind, q, label)| {
            let g = projective_group_generators(kind, q).expect("fixed sporadic groups");
            (g.degree(), label.to_string(), Some(g))
        })
        .filter(|(n, _, _)| *n <= n_max)
        .collect(),
    }
}

/// Orbifold Euler characteristics along a family of groups.
pub fn category_euler_series(
    family: EulerFamily,
    n_max: usize,
    e_base: i64,
    cap: usize,
) -> Result<EulerSeries> {
    let mut entries: Vec<EulerEntry> = Vec::new();
    for (n, label, group) in family_members(family, n_max) {
        let euler = match group {
            None => BigInt::one(),
            Some(g) => orbifold_euler(&g, e_base, cap).map_err(|e| match e {
                Error::OrderExceedsCap { cap } => Error::SeriesCapExceeded {
                    largest_completed: entries.last().map(|e| e.n),
                    cap,
                },
                other => other,
            })?,
        };
        entries.push(EulerEntry { n, label, euler });
    }
    Ok(EulerSeries {
        family,
        e_base,
        entries,
    })
}
