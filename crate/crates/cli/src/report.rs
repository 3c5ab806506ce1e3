//! Report structures. Each one serializes to the JSON shape in
//! `schema/reports.schema.json` and renders a plain-text form.

use std::fmt::Write as _;

use hkcat::graded::{GradedDims, UnitVerdict};
use hkcat::hodge::{
    guan_b2_admissible, GuanCheck, GuanMode, HochschildNumbers, HodgeDiamond, PrymianReport,
    SalamonCheck,
};
use hkcat::orbifold::EulerFamily;
use hkcat::permgroup::ScanEntry;
use hkcat::PermutationGroup;
use serde::Serialize;

use crate::spec::GroupSpec;

pub trait Report: Serialize {
    fn text(&self) -> String;
}

/// The group a report was computed for.
#[derive(Debug, Clone, Serialize)]
pub struct GroupEcho {
    pub spec: String,
    pub degree: usize,
    /// Present when the computation enumerated the elements.
    pub order: Option<usize>,
    pub generators: Vec<String>,
}

impl GroupEcho {
    pub fn new(spec: &GroupSpec, g: &PermutationGroup) -> Self {
        GroupEcho {
            spec: spec.to_string(),
            degree: g.degree(),
            order: g.cached_order(),
            generators: g.generators().iter().map(|p| p.to_string()).collect(),
        }
    }

    fn write_to(&self, out: &mut String) {
        let order = match self.order {
            Some(o) => o.to_string(),
            None => "not enumerated".to_string(),
        };
        let _ = writeln!(out, "group       {}", self.spec);
        let _ = writeln!(out, "degree      {}", self.degree);
        let _ = writeln!(out, "order       {order}");
        let _ = writeln!(out, "generators  {}", self.generators.join(" "));
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Debug, Clone, Serialize)]
pub struct HomogReport {
    pub group: GroupEcho,
    /// `[k, orbits on k-subsets]` for k = 0..=n.
    pub orbit_counts: Vec<(usize, usize)>,
    pub failing_k: Vec<usize>,
    pub is_homogeneous: bool,
}

impl Report for HomogReport {
    fn text(&self) -> String {
        let mut out = String::new();
        self.group.write_to(&mut out);
        let width = self.group.degree.to_string().len().max(
            self.orbit_counts
                .iter()
                .map(|(_, c)| c.to_string().len())
                .max()
                .unwrap_or(1),
        );
        let row = |f: &dyn Fn(&(usize, usize)) -> usize| {
            join(
                self.orbit_counts
                    .iter()
                    .map(|e| format!("{:>width$}", f(e))),
                " ",
            )
        };
        let _ = writeln!(out, "k           {}", row(&|e| e.0));
        let _ = writeln!(out, "orbits      {}", row(&|e| e.1));
        let _ = writeln!(out, "homogeneous {}", yes_no(self.is_homogeneous));
        if !self.failing_k.is_empty() {
            let _ = writeln!(out, "failing k   {}", join(&self.failing_k, " "));
        }
        out
    }
}

fn graded_text(dims: &GradedDims) -> String {
    join(dims.iter().map(|(d, v)| format!("{d}:{v}")), " ")
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitReport {
    pub is_hyper_kahler: bool,
    pub invariant_dims: GradedDims,
    pub offending_degrees: Vec<(u32, u64)>,
    pub group: GroupEcho,
}

impl UnitReport {
    pub fn new(group: GroupEcho, verdict: UnitVerdict) -> Self {
        UnitReport {
            is_hyper_kahler: verdict.is_hyper_kahler,
            invariant_dims: verdict.invariant_dims,
            offending_degrees: verdict.offending_degrees,
            group,
        }
    }
}

impl Report for UnitReport {
    fn text(&self) -> String {
        let mut out = String::new();
        self.group.write_to(&mut out);
        let _ = writeln!(out, "invariants  {}", graded_text(&self.invariant_dims));
        let offending = if self.offending_degrees.is_empty() {
            "none".to_string()
        } else {
            join(
                self.offending_degrees
                    .iter()
                    .map(|(d, v)| format!("{d}:{v}")),
                " ",
            )
        };
        let _ = writeln!(out, "offending   {offending}");
        let _ = writeln!(out, "hyper-Kähler unit {}", yes_no(self.is_hyper_kahler));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub order: usize,
    pub conjugates: usize,
    pub label: Option<String>,
    pub generators: Vec<String>,
    /// Orbit counts on k-subsets for k = 0..=n.
    pub orbit_counts: Vec<usize>,
    pub passes: bool,
    pub note: Option<String>,
}

impl From<&ScanEntry> for ScanRow {
    fn from(e: &ScanEntry) -> Self {
        ScanRow {
            order: e.order,
            conjugates: e.conjugates,
            label: e.label.clone(),
            generators: e.generators.iter().map(|p| p.to_string()).collect(),
            orbit_counts: e.profile.orbit_counts.iter().map(|&(_, c)| c).collect(),
            passes: e.passes(),
            note: e.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub classes: usize,
    pub passing: usize,
    pub entries: Vec<ScanRow>,
}

impl Report for ScanReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "subgroups of S_{} up to conjugacy: {} classes, {} homogeneous",
            self.n, self.classes, self.passing
        );
        let _ = writeln!(
            out,
            "{:>5} {:>5} {:>5}  {:<9} generators",
            "order", "conj", "homog", "label"
        );
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:>5} {:>5} {:>5}  {:<9} {}",
                e.order,
                e.conjugates,
                yes_no(e.passes),
                e.label.as_deref().unwrap_or(""),
                e.generators.join(" ")
            );
        }
        for e in &self.entries {
            if let Some(note) = &e.note {
                let _ = writeln!(out, "note (order {}): {note}", e.order);
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PrymianOutput {
    pub singular: HodgeDiamond,
    pub resolved: HodgeDiamond,
    pub resolved_matches_builtin: bool,
    pub hh_resolved: HochschildNumbers,
    pub hh_component: HochschildNumbers,
    pub salamon_check: SalamonCheck,
    pub betti: [u64; 9],
    pub guan: Vec<GuanCheck>,
    pub excludes_commutative_model: bool,
    pub hh: Vec<u64>,
    pub salamon: bool,
    pub guan_b2_16: bool,
}

impl From<PrymianReport> for PrymianOutput {
    fn from(r: PrymianReport) -> Self {
        let guan_b2_16 = guan_b2_admissible(16, GuanMode::Strict);
        PrymianOutput {
            excludes_commutative_model: r.excludes_commutative_model(),
            hh: r.hh_cohomology.values().to_vec(),
            salamon: r.salamon.holds,
            guan_b2_16,
            singular: r.singular,
            resolved: r.resolved,
            resolved_matches_builtin: r.resolved_matches_builtin,
            hh_resolved: r.hh_resolved,
            hh_component: r.hh_component,
            salamon_check: r.salamon,
            betti: r.betti,
            guan: r.guan,
        }
    }
}

fn hochschild_text(hh: &HochschildNumbers) -> String {
    join(hh.iter().map(|(k, v)| format!("{k}:{v}")), " ")
}

impl Report for PrymianOutput {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "singular diamond");
        out.push_str(&self.singular.to_text());
        let _ = writeln!(
            out,
            "resolved diamond ({} points blown up, matches built-in: {})",
            hkcat::hodge::SINGULAR_POINTS,
            yes_no(self.resolved_matches_builtin)
        );
        out.push_str(&self.resolved.to_text());
        let _ = writeln!(
            out,
            "hh_* resolution  {}",
            hochschild_text(&self.hh_resolved)
        );
        let _ = writeln!(
            out,
            "hh_* component   {}  ({} exceptional objects removed)",
            hochschild_text(&self.hh_component),
            hkcat::hodge::EXCEPTIONAL_OBJECTS
        );
        let _ = writeln!(out, "hh^* component   {}", join(&self.hh, " "));
        let s = &self.salamon_check;
        let _ = writeln!(
            out,
            "salamon r={}      lhs {} rhs {} holds {}",
            s.r,
            s.lhs,
            s.rhs,
            yes_no(s.holds)
        );
        let _ = writeln!(out, "betti            {}", join(self.betti, " "));
        for g in &self.guan {
            let _ = writeln!(
                out,
                "guan b2={:<8} admissible {} (b2 <= 8 variant: {})",
                g.b2,
                yes_no(g.strict),
                yes_no(g.inclusive)
            );
        }
        let _ = writeln!(
            out,
            "commutative hyper-Kähler model excluded: {}",
            yes_no(self.excludes_commutative_model)
        );
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SalamonReport {
    pub hh: Vec<u64>,
    #[serde(flatten)]
    pub check: SalamonCheck,
}

impl Report for SalamonReport {
    fn text(&self) -> String {
        format!(
            "hh^*   {}\nr      {}\nlhs    {}\nrhs    {}\nholds  {}\n",
            join(&self.hh, " "),
            self.check.r,
            self.check.lhs,
            self.check.rhs,
            yes_no(self.check.holds)
        )
    }
}

/// Shared caveat for orbifold Euler numbers read as categorical invariants.
pub const HKR_NOTE: &str = "orbifold Euler characteristic from commuting pairs; reading it as the \
Hochschild Euler characteristic of the equivariant category assumes the orbifold HKR isomorphism";

#[derive(Debug, Clone, Serialize)]
pub struct OrbifoldReport {
    pub group: GroupEcho,
    pub e_base: i64,
    pub euler: String,
    pub note: &'static str,
}

impl Report for OrbifoldReport {
    fn text(&self) -> String {
        let mut out = String::new();
        self.group.write_to(&mut out);
        let _ = writeln!(out, "e_base      {}", self.e_base);
        let _ = writeln!(out, "euler       {}", self.euler);
        let _ = writeln!(out, "note: {}", self.note);
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleCell {
    /// `None` when the group is too large for the direct pair count.
    pub oracle: Option<String>,
    pub oracle_match: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesRow {
    pub n: usize,
    pub label: String,
    pub euler: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub check: Option<OracleCell>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub family: EulerFamily,
    pub e_base: i64,
    /// Which independent computation the oracle column uses, if requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<&'static str>,
    pub entries: Vec<SeriesRow>,
    pub note: &'static str,
}

impl SeriesReport {
    pub fn csv(&self) -> Result<Vec<u8>, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["n", "label", "euler"];
        if self.oracle.is_some() {
            header.extend(["oracle", "oracle_match"]);
        }
        w.write_record(&header)?;
        for e in &self.entries {
            let mut record = vec![e.n.to_string(), e.label.clone(), e.euler.clone()];
            if let Some(c) = &e.check {
                record.push(c.oracle.clone().unwrap_or_default());
                record.push(c.oracle_match.map(|b| b.to_string()).unwrap_or_default());
            }
            w.write_record(&record)?;
        }
        w.into_inner().map_err(|e| e.into_error().into())
    }
}

impl Report for SeriesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family {}  e_base {}", self.family, self.e_base);
        if let Some(o) = self.oracle {
            let _ = writeln!(out, "oracle: {o}");
        }
        for e in &self.entries {
            let _ = write!(out, "{:>3}  {:<10} {}", e.n, e.label, e.euler);
            if let Some(c) = &e.check {
                let verdict = match c.oracle_match {
                    Some(true) => "oracle match",
                    Some(false) => "ORACLE MISMATCH",
                    None => "oracle skipped",
                };
                let _ = write!(out, "  {verdict}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "note: {}", self.note);
        out
    }
}
