use serde::Serialize;

use super::HodgeDiamond;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HochschildVariant {
    /// `hh_k` for `k` in `[-d, d]`.
    Homology,
    /// `hh^k` for `k` in `[0, 2d]`.
    Cohomology,
}

/// Hochschild homology or cohomology dimensions of a category of
/// dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HochschildNumbers {
    variant: HochschildVariant,
    dim: usize,
    /// Dimensions for consecutive degrees starting at `-d` (homology) or
    /// `0` (cohomology); always `2d + 1` entries.
    dims: Vec<u64>,
}

impl HochschildNumbers {
    pub fn homology(dim: usize, dims: Vec<u64>) -> Result<Self> {
        Self::with_variant(HochschildVariant::Homology, dim, dims)
    }

    pub fn cohomology(dim: usize, dims: Vec<u64>) -> Result<Self> {
        Self::with_variant(HochschildVariant::Cohomology, dim, dims)
    }

    /// Cohomology numbers `hh^0, …, hh^{2d}` with `d` read off the length.
    pub fn cohomology_from_list(dims: Vec<u64>) -> Result<Self> {
        if dims.len().is_multiple_of(2) {
            return Err(Error::LengthMismatch {
                expected: dims.len() + 1,
                found: dims.len(),
            });
        }
        Self::cohomology(dims.len() / 2, dims)
    }

    fn with_variant(variant: HochschildVariant, dim: usize, dims: Vec<u64>) -> Result<Self> {
        if dims.len() != 2 * dim + 1 {
            return Err(Error::LengthMismatch {
                expected: 2 * dim + 1,
                found: dims.len(),
            });
        }
        Ok(HochschildNumbers { variant, dim, dims })
    }

    pub fn variant(&self) -> HochschildVariant {
        self.variant
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn min_degree(&self) -> i64 {
        match self.variant {
            HochschildVariant::Homology => -(self.dim as i64),
            HochschildVariant::Cohomology => 0,
        }
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree() + 2 * self.dim as i64
    }

    /// Dimension in degree `k`; zero outside the stored range.
    pub fn get(&self, k: i64) -> u64 {
        let i = k - self.min_degree();
        if i < 0 {
            return 0;
        }
        self.dims.get(i as usize).copied().unwrap_or(0)
    }

    /// The stored dimensions, lowest degree first.
    pub fn values(&self) -> &[u64] {
        &self.dims
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        let lo = self.min_degree();
        self.dims
            .iter()
            .enumerate()
            .map(move |(i, &v)| (lo + i as i64, v))
    }

    /// `Σ_k (-1)^k hh_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(k, v)| {
                if k.rem_euclid(2) == 0 {
                    v as i64
                } else {
                    -(v as i64)
                }
            })
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }

    fn require(&self, variant: HochschildVariant) -> Result<()> {
        if self.variant != variant {
            return Err(Error::WrongVariant {
                expected: match variant {
                    HochschildVariant::Homology => "homology",
                    HochschildVariant::Cohomology => "cohomology",
                },
            });
        }
        Ok(())
    }

    pub(crate) fn require_cohomology(&self) -> Result<()> {
        self.require(HochschildVariant::Cohomology)
    }
}

/// Hochschild homology from the HKR decomposition:
/// `hh_k = Σ_{q-p=k} h(p,q)` for `k` in `[-d, d]`.
pub fn hkr_homology(diamond: &HodgeDiamond) -> HochschildNumbers {
    let d = diamond.dim();
    let mut dims = vec![0u64; 2 * d + 1];
    for p in 0..=d {
        for q in 0..=d {
            dims[q + d - p] += diamond.h(p, q);
        }
    }
    HochschildNumbers::homology(d, dims).unwrap()
}

/// Removes `count` exceptional objects from a semiorthogonal decomposition;
/// each one carries exactly one dimension of `HH_0`.
pub fn sod_subtract_exceptional(hh: &HochschildNumbers, count: u64) -> Result<HochschildNumbers> {
    hh.require(HochschildVariant::Homology)?;
    let available = hh.get(0);
    let remaining = available
        .checked_sub(count)
        .ok_or(Error::NegativeDimension {
            available,
            requested: count,
        })?;
    let mut dims = hh.dims.clone();
    dims[hh.dim] = remaining;
    HochschildNumbers::homology(hh.dim, dims)
}

/// For a Calabi–Yau category of dimension `d` the Serre functor is `[d]`,
/// giving `hh^k = hh_{k-d}` for `k` in `[0, 2d]`.
pub fn serre_shift_cohomology(hh: &HochschildNumbers, d: usize) -> Result<HochschildNumbers> {
    hh.require(HochschildVariant::Homology)?;
    let bound = d as i64;
    if let Some((k, _)) = hh.iter().find(|&(k, v)| v != 0 && k.abs() > bound) {
        return Err(Error::SupportOutOfRange {
            degree: k,
            min: -bound,
            max: bound,
        });
    }
    let dims = (0..=2 * bound).map(|k| hh.get(k - bound)).collect();
    HochschildNumbers::cohomology(d, dims)
}
