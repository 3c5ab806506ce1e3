//! Group specifications such as `PGL2(8)` or `gens:(0 1 2),(0 1)`.
//!
//! ```text
//! spec     := NAME '(' INT ')' | 'gens' [ '(' INT ')' ] ':' cycles { ',' cycles }
//! NAME     := Sn | An | Cn | Dn | PGL2 | PGammaL2 | AGL1
//! ```
//!
//! Whitespace may appear between tokens. Commas inside a cycle are
//! separators between points, commas between cycles separate generators.
//! Without an explicit degree, `gens:` uses one more than the largest point.

use std::fmt;
use std::str::FromStr;

use hkcat::perm::parse_cycle_list;
use hkcat::projgroups::{prime_power, projective_group_generators, ProjectiveKind};
use hkcat::{Permutation, PermutationGroup};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sn,
    An,
    Cn,
    Dn,
    Pgl2,
    PGammaL2,
    Agl1,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Sn,
        Family::An,
        Family::Cn,
        Family::Dn,
        Family::Pgl2,
        Family::PGammaL2,
        Family::Agl1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sn => "Sn",
            Family::An => "An",
            Family::Cn => "Cn",
            Family::Dn => "Dn",
            Family::Pgl2 => "PGL2",
            Family::PGammaL2 => "PGammaL2",
            Family::Agl1 => "AGL1",
        }
    }

    fn projective(self) -> Option<ProjectiveKind> {
        match self {
            Family::Pgl2 => Some(ProjectiveKind::Pgl2),
            Family::PGammaL2 => Some(ProjectiveKind::PGammaL2),
            Family::Agl1 => Some(ProjectiveKind::Agl1),
            _ => None,
        }
    }

    /// Number of points the group with this parameter acts on.
    pub fn degree(self, param: usize) -> usize {
        match self.projective() {
            Some(kind) => kind.degree(param),
            None => param,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Named {
        family: Family,
        param: usize,
    },
    Explicit {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("unknown group family '{name}' at byte {offset}")]
    UnknownFamily { name: String, offset: usize },
    #[error("bad parameter {value} for {family}: {reason}")]
    BadParameter {
        family: &'static str,
        value: String,
        reason: String,
    },
}

impl SpecError {
    pub fn code(&self) -> &'static str {
        match self {
            SpecError::Parse { .. } => "ParseError",
            SpecError::UnknownFamily { .. } => "UnknownFamily",
            SpecError::BadParameter { .. } => "BadParameter",
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn fail(&self, expected: &[&'static str]) -> SpecError {
        SpecError::Parse {
            offset: self.pos,
            expected: expected.to_vec(),
            found: self.found(),
        }
    }

    fn expect(&mut self, c: char, token: &'static str) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.fail(&[token]))
        }
    }

    fn ident(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.text.len() - start);
        self.pos += len;
        (start, &self.text[start..start + len])
    }

    /// Returns the offset and digits of an unsigned integer.
    fn integer(&mut self) -> Result<(usize, &'a str), SpecError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.text.len() - start);
        if len == 0 {
            return Err(self.fail(&["integer"]));
        }
        self.pos += len;
        Ok((start, &self.text[start..start + len]))
    }

    fn end(&mut self) -> Result<(), SpecError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.fail(&["end of input"]))
        }
    }
}

fn bad(family: &'static str, value: impl fmt::Display, reason: &str) -> SpecError {
    SpecError::BadParameter {
        family,
        value: value.to_string(),
        reason: reason.to_string(),
    }
}

fn check_param(family: Family, digits: &str) -> Result<usize, SpecError> {
    let name = family.name();
    let value: usize = digits
        .parse()
        .map_err(|_| bad(name, digits, "integer is too large"))?;
    match family.projective() {
        Some(_) => {
            let q = u32::try_from(value).map_err(|_| bad(name, value, "integer is too large"))?;
            if prime_power(q).is_none() {
                return Err(bad(name, value, "not a prime power"));
            }
        }
        None => {
            if value == 0 {
                return Err(bad(name, value, "degree must be positive"));
            }
            if value > hkcat::perm::MAX_DEGREE {
                return Err(bad(name, value, "degree is too large"));
            }
        }
    }
    Ok(value)
}

/// Splits the generator list at commas that are outside parentheses,
/// returning each piece with its byte offset.
fn split_generators(text: &str, base: usize) -> Vec<(usize, &str)> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push((base + start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((base + start, &text[start..]));
    pieces
}

fn parse_explicit(cur: &mut Cursor<'_>) -> Result<GroupSpec, SpecError> {
    cur.skip_ws();
    let degree = if cur.peek() == Some('(') {
        cur.pos += 1;
        let (_, digits) = cur.integer()?;
        cur.expect(')', "')'")?;
        let d: usize = digits
            .parse()
            .map_err(|_| bad("gens", digits, "integer is too large"))?;
        if d == 0 || d > hkcat::perm::MAX_DEGREE {
            return Err(bad("gens", d, "degree must be between 1 and 65535"));
        }
        Some(d)
    } else {
        None
    };
    cur.expect(':', "':'")?;
    let body_start = cur.pos;
    let mut cycle_lists = Vec::new();
    for (offset, piece) in split_generators(&cur.text[body_start..], body_start) {
        let cycles = parse_cycle_list(piece, offset).map_err(|e| match e {
            hkcat::Error::CycleSyntax { offset, .. } => Cursor {
                text: cur.text,
                pos: offset,
            }
            .fail(&["cycle"]),
            other => SpecError::Parse {
                offset,
                expected: vec!["cycle"],
                found: other.to_string(),
            },
        })?;
        cycle_lists.push((offset, cycles));
    }
    cur.pos = cur.text.len();
    let needed = cycle_lists
        .iter()
        .flat_map(|(_, c)| c.iter().flatten())
        .map(|&x| x + 1)
        .max()
        .unwrap_or(1);
    let degree = match degree {
        Some(d) if d < needed => {
            return Err(bad(
                "gens",
                d,
                &format!("point {} is out of range", needed - 1),
            ))
        }
        Some(d) => d,
        None => needed,
    };
    let generators = cycle_lists
        .into_iter()
        .map(|(offset, cycles)| {
            Permutation::from_cycles(degree, &cycles).map_err(|e| SpecError::Parse {
                offset,
                expected: vec!["cycle"],
                found: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupSpec::Explicit { degree, generators })
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut cur = Cursor { text, pos: 0 };
    let (offset, name) = cur.ident();
    if name.is_empty() {
        return Err(cur.fail(&["group family", "'gens'"]));
    }
    let spec = if name == "gens" {
        parse_explicit(&mut cur)?
    } else {
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| SpecError::UnknownFamily {
                name: name.to_string(),
                offset,
            })?;
        cur.expect('(', "'('")?;
        let (_, digits) = cur.integer()?;
        cur.expect(')', "')'")?;
        GroupSpec::Named {
            family,
            param: check_param(family, digits)?,
        }
    };
    cur.end()?;
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        parse_group_spec(s)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named { family, param } => write!(f, "{}({param})", family.name()),
            GroupSpec::Explicit { degree, generators } => {
                let implied = generators
                    .iter()
                    .flat_map(|g| g.cycles().into_iter().flatten())
                    .map(|x| x + 1)
                    .max()
                    .unwrap_or(1);
                if implied == *degree {
                    f.write_str("gens:")?;
                } else {
                    write!(f, "gens({degree}):")?;
                }
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

impl GroupSpec {
    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Named { family, param } => family.degree(*param),
            GroupSpec::Explicit { degree, .. } => *degree,
        }
    }

    /// Builds the permutation group. Field construction can still fail for
    /// prime powers outside the supported range.
    pub fn resolve(&self) -> hkcat::Result<PermutationGroup> {
        match self {
            GroupSpec::Named { family, param } => match family {
                Family::Sn => Ok(PermutationGroup::symmetric(*param)),
                Family::An => Ok(PermutationGroup::alternating(*param)),
                Family::Cn => Ok(PermutationGroup::cyclic(*param)),
                Family::Dn => Ok(PermutationGroup::dihedral(*param)),
                projective => projective_group_generators(
                    projective.projective().expect("projective family"),
                    *param as u32,
                ),
            },
            GroupSpec::Explicit { generators, .. } => {
                PermutationGroup::from_generators(generators.clone())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_specs() {
        let s = parse_group_spec("PGammaL2(8)").unwrap();
        assert_eq!(
            s,
            GroupSpec::Named {
                family: Family::PGammaL2,
                param: 8
            }
        );
        assert_eq!(s.degree(), 9);
        assert_eq!(s.resolve().unwrap().degree(), 9);
        assert_eq!(
            parse_group_spec("  An ( 6 ) ").unwrap().to_string(),
            "An(6)"
        );
        assert_eq!(parse_group_spec("PGL2(7)").unwrap().degree(), 8);
        assert_eq!(parse_group_spec("AGL1(5)").unwrap().degree(), 5);
    }

    #[test]
    fn explicit_specs() {
        let s = parse_group_spec("gens:(0 1)(2 3),(0 2)").unwrap();
        assert_eq!(s.degree(), 4);
        assert_eq!(s.to_string(), "gens:(0 1)(2 3),(0 2)");
        let padded = parse_group_spec("gens(6): (0,1,2), (3 4)").unwrap();
        assert_eq!(padded.degree(), 6);
        assert_eq!(padded.to_string(), "gens(6):(0 1 2),(3 4)");
        assert_eq!(parse_group_spec(&padded.to_string()).unwrap(), padded);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_group_spec("PGL2(six)").unwrap_err() {
            SpecError::Parse {
                offset, expected, ..
            } => {
                assert_eq!(offset, 5);
                assert_eq!(expected, vec!["integer"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group_spec("Sn(5"),
            Err(SpecError::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            parse_group_spec("gens:(0 1),(0 x)"),
            Err(SpecError::Parse { offset: 14, .. })
        ));
        assert!(matches!(
            parse_group_spec("Sn(5) extra"),
            Err(SpecError::Parse { offset: 6, .. })
        ));
    }

    #[test]
    fn family_and_parameter_errors() {
        assert!(matches!(
            parse_group_spec("sn(5)"),
            Err(SpecError::UnknownFamily { offset: 0, .. })
        ));
        assert!(matches!(
            parse_group_spec("AGL1(6)"),
            Err(SpecError::BadParameter { family: "AGL1", .. })
        ));
        assert!(matches!(
            parse_group_spec("Cn(0)"),
            Err(SpecError::BadParameter { .. })
        ));
        assert!(matches!(
            parse_group_spec("gens(2):(0 1 2)"),
            Err(SpecError::BadParameter { .. })
        ));
    }

    #[test]
    fn small_alternating_keeps_its_degree() {
        for n in 1..=3 {
            let g = parse_group_spec(&format!("An({n})"))
                .unwrap()
                .resolve()
                .unwrap();
            assert_eq!(g.degree(), n);
        }
    }
}
