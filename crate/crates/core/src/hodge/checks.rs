use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::HochschildNumbers;
use crate::error::{Error, Result};

/// Both sides of `Σ_{j=1}^{2r} (-1)^j (3j² - r) hh^{2r-j} = (r/2) hh^{2r}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SalamonCheck {
    pub r: u32,
    pub lhs: i128,
    /// `r/2 · hh^{2r}`, printed as `"a"` or `"a/2"`.
    #[serde(serialize_with = "ratio_as_string")]
    pub rhs: Ratio<i128>,
    pub holds: bool,
}

fn ratio_as_string<S: Serializer>(r: &Ratio<i128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Evaluates the Salamon-type relation on cohomology numbers
/// `hh^0, hh^1, …`. Missing degrees count as zero.
pub fn salamon_check(hh: &[u64], r: u32) -> SalamonCheck {
    let at = |k: i64| -> i128 {
        if k < 0 {
            0
        } else {
            hh.get(k as usize).copied().unwrap_or(0) as i128
        }
    };
    let top = 2 * r as i64;
    let lhs: i128 = (1..=top)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let j = j as i128;
            sign * (3 * j * j - r as i128) * at(top - j as i64)
        })
        .sum();
    let rhs = Ratio::new(r as i128 * at(top), 2);
    SalamonCheck {
        r,
        lhs,
        rhs,
        holds: Ratio::from_integer(lhs) == rhs,
    }
}

impl HochschildNumbers {
    pub fn salamon_check(&self, r: u32) -> Result<SalamonCheck> {
        self.require_cohomology()?;
        Ok(salamon_check(self.values(), r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GuanMode {
    /// `b_2 < 8` or `b_2 = 23`.
    #[default]
    Strict,
    /// `b_2 <= 8` or `b_2 = 23`.
    Inclusive,
}

/// Second Betti numbers allowed by the bound for hyper-Kähler fourfolds.
pub fn guan_b2_admissible(b2: u64, mode: GuanMode) -> bool {
    match mode {
        GuanMode::Strict => b2 < 8 || b2 == 23,
        GuanMode::Inclusive => b2 <= 8 || b2 == 23,
    }
}

/// Betti numbers `b_0..b_8` of a hyper-Kähler fourfold whose Hochschild
/// cohomology numbers are `hh`: `b_0 = b_8 = hh^0`, `b_2 = b_6 = hh^2`,
/// `b_4 = hh^4`, odd Betti numbers zero.
pub fn hk4_betti_from_hochschild(hh: &HochschildNumbers) -> Result<[u64; 9]> {
    hh.require_cohomology()?;
    if hh.dim() != 4 {
        return Err(Error::WrongDimension {
            expected: 4,
            found: hh.dim(),
        });
    }
    if !hh.is_palindromic() {
        return Err(Error::NotPalindromic);
    }
    if let Some(k) = (1..9).step_by(2).find(|&k| hh.get(k) != 0) {
        return Err(Error::OddDegreePresent(k as usize));
    }
    let (b0, b2, b4) = (hh.get(0), hh.get(2), hh.get(4));
    Ok([b0, 0, b2, 0, b4, 0, b2, 0, b0])
}
