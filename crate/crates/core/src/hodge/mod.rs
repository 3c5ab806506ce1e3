//! Hodge diamonds and the Hochschild bookkeeping built on them.
//!
//! Convention: `h(p, q) = dim H^q(X, Ω^p)`.

mod checks;
mod hochschild;
mod prymian;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use checks::{
    guan_b2_admissible, hk4_betti_from_hochschild, salamon_check, GuanMode, SalamonCheck,
};
pub use hochschild::{
    hkr_homology, serre_shift_cohomology, sod_subtract_exceptional, HochschildNumbers,
    HochschildVariant,
};
pub use prymian::{
    prymian_pipeline, GuanCheck, PrymianReport, EXCEPTIONAL_OBJECTS, SINGULAR_POINTS,
};

/// Hodge numbers of a smooth projective variety of complex dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiamondJson", into = "DiamondJson")]
pub struct HodgeDiamond {
    dim: usize,
    h: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct DiamondJson {
    d: usize,
    h: Vec<Vec<u64>>,
}

impl TryFrom<DiamondJson> for HodgeDiamond {
    type Error = Error;

    fn try_from(j: DiamondJson) -> Result<Self> {
        HodgeDiamond::new(j.d, j.h)
    }
}

impl From<HodgeDiamond> for DiamondJson {
    fn from(d: HodgeDiamond) -> Self {
        DiamondJson { d: d.dim, h: d.h }
    }
}

impl HodgeDiamond {
    /// Takes the full table `h[p][q]`, checking shape and both symmetries.
    pub fn new(dim: usize, h: Vec<Vec<u64>>) -> Result<Self> {
        if h.len() != dim + 1 || h.iter().any(|row| row.len() != dim + 1) {
            return Err(Error::InvalidDiamond(format!(
                "table must be {0}x{0} for dimension {dim}",
                dim + 1
            )));
        }
        for p in 0..=dim {
            for q in 0..=dim {
                if h[p][q] != h[q][p] {
                    return Err(Error::InvalidDiamond(format!(
                        "h({p},{q}) = {} but h({q},{p}) = {}",
                        h[p][q], h[q][p]
                    )));
                }
                if h[p][q] != h[dim - p][dim - q] {
                    return Err(Error::InvalidDiamond(format!(
                        "h({p},{q}) = {} but h({},{}) = {}",
                        h[p][q],
                        dim - p,
                        dim - q,
                        h[dim - p][dim - q]
                    )));
                }
            }
        }
        Ok(HodgeDiamond { dim, h })
    }

    /// Builds a diamond from its upper half: row `k` lists the entries with
    /// `p + q = k` as `h(k,0), h(k-1,1), …, h(0,k)`. The lower half is filled
    /// in by Serre symmetry.
    pub fn from_upper_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let dim = rows
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::InvalidDiamond("no rows".into()))?;
        let mut h = vec![vec![0u64; dim + 1]; dim + 1];
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(Error::InvalidDiamond(format!(
                    "row {k} has {} entries, expected {}",
                    row.len(),
                    k + 1
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                h[k - j][j] = v;
            }
        }
        for p in 0..=dim {
            for q in 0..=dim {
                if p + q > dim {
                    h[p][q] = h[dim - p][dim - q];
                }
            }
        }
        Self::new(dim, h)
    }

    /// Parses the pyramid text layout: either the `d+1` rows of the upper
    /// half or all `2d+1` rows. Whitespace is free; a trailing `.` on a row
    /// is ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows: Vec<Vec<u64>> = text
            .lines()
            .map(|line| line.trim().trim_end_matches('.'))
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.trim_end_matches('.')
                            .parse::<u64>()
                            .map_err(|_| Error::InvalidDiamond(format!("bad entry {tok:?}")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let widening = rows.iter().enumerate().all(|(k, r)| r.len() == k + 1);
        if widening {
            return Self::from_upper_rows(&rows);
        }
        if rows.len() % 2 == 1 {
            let dim = rows.len() / 2;
            let upper = &rows[..=dim];
            let diamond = Self::from_upper_rows(upper)?;
            for (offset, row) in rows[dim + 1..].iter().enumerate() {
                let k = dim + 1 + offset;
                let expected: Vec<u64> =
                    (k - dim..=dim).rev().map(|p| diamond.h(p, k - p)).collect();
                if *row != expected {
                    return Err(Error::InvalidDiamond(format!(
                        "row {k} violates Serre symmetry"
                    )));
                }
            }
            return Ok(diamond);
        }
        Err(Error::InvalidDiamond(
            "rows must widen by one entry each".into(),
        ))
    }

    /// Upper half in pyramid layout, one row per line.
    pub fn to_text(&self) -> String {
        let width = self
            .h
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let slot = (width + 2) / 2 * 2;
        let mut out = String::new();
        for k in 0..=self.dim {
            let mut line = " ".repeat((self.dim - k) * slot / 2);
            for j in 0..=k {
                line.push_str(&format!("{:>w$}", self.h(k - j, j), w = slot));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h(&self, p: usize, q: usize) -> u64 {
        self.h[p][q]
    }

    pub fn table(&self) -> &[Vec<u64>] {
        &self.h
    }

    /// `b_k = Σ_{p+q=k} h(p,q)` for `k` in `0..=2d`.
    pub fn betti(&self) -> Vec<u64> {
        let mut b = vec![0; 2 * self.dim + 1];
        for p in 0..=self.dim {
            for q in 0..=self.dim {
                b[p + q] += self.h[p][q];
            }
        }
        b
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn point() -> Self {
        HodgeDiamond {
            dim: 0,
            h: vec![vec![1]],
        }
    }

    /// Blow-up of `count` isolated singular points of analytic type
    /// `C⁴/±1` on a fourfold.
    ///
    /// Each exceptional divisor is a P³; via the Thom isomorphism and the
    /// long exact sequence of the pair, its classes in degrees 0 and 2
    /// contribute one class each to `h(1,1)` and `h(2,2)`, and `h(3,3)`
    /// follows by symmetry. No other entry changes.
    pub fn blow_up_opc4_points(&self, count: u64) -> Result<Self> {
        if self.dim != 4 {
            return Err(Error::WrongDimension {
                expected: 4,
                found: self.dim,
            });
        }
        let mut h = self.h.clone();
        for j in 1..=3 {
            h[j][j] += count;
        }
        Self::new(4, h)
    }

    /// Built-in diamonds by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "prymian_P0" => Some(Self::prymian_p0()),
            "prymian_P0_resolved" => Some(Self::prymian_p0_resolved()),
            _ => None,
        }
    }

    pub const BUILTIN_NAMES: [&'static str; 2] = ["prymian_P0", "prymian_P0_resolved"];

    /// The singular Prymian V-manifold: `h(1,1) = 14`, `h(2,2) = 148`,
    /// `b_3 = 0`, `h(2,0) = h(4,0) = 1`.
    pub fn prymian_p0() -> Self {
        Self::from_upper_rows(&[
            vec![1],
            vec![0, 0],
            vec![1, 14, 1],
            vec![0, 0, 0, 0],
            vec![1, 14, 148, 14, 1],
        ])
        .unwrap()
    }

    /// Its resolution after blowing up the 28 singular points.
    pub fn prymian_p0_resolved() -> Self {
        Self::from_upper_rows(&[
            vec![1],
            vec![0, 0],
            vec![1, 42, 1],
            vec![0, 0, 0, 0],
            vec![1, 14, 176, 14, 1],
        ])
        .unwrap()
    }
}

impl fmt::Display for HodgeDiamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
