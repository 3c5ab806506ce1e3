//! Permutations of `{0, .., n-1}` and their cycle notation.
//!
//! Permutations act on the left: `p.compose(&q)` is the map `i -> p(q(i))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported degree; images are stored as `u16`.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection of `{0, .., n-1}` stored as its image sequence.
///
/// The derived ordering is lexicographic on image sequences, which is the
/// canonical element order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} of {i} is out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{x} is hit twice")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint or overlapping
    /// cycles. Overlapping cycles are multiplied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut result = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = std::collections::HashSet::new();
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} is out of range for degree {degree}"
                    )));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} repeated within a cycle"
                    )));
                }
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
            result = result.compose(&Permutation::from_images(images)?);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        let mut images = vec![0u16; self.degree()];
        for (i, &x) in other.images.iter().enumerate() {
            images[self.images[i] as usize] = self.images[x as usize];
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Lengths of all cycles including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.extend(std::iter::repeat_n(1, self.degree() - moved));
        lengths.sort_unstable();
        lengths
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_integer::lcm)
    }

    /// Parses cycle notation such as `"(0 1)(2 3 4)"`.
    ///
    /// With `degree = None` the degree is one more than the largest point
    /// mentioned (and 1 for `"()"`).
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycle_list(text, 0)?;
        let needed = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(1);
        let degree = match degree {
            Some(d) if d < needed => {
                return Err(Error::InvalidPermutation(format!(
                    "point {} is out of range for degree {d}",
                    needed - 1
                )))
            }
            Some(d) => d,
            None => needed,
        };
        Permutation::from_cycles(degree, &cycles)
    }
}

/// Parses a sequence of parenthesised cycles. `base` is added to every
/// reported byte offset so callers embedding cycle notation in a larger
/// grammar get offsets into their own input.
pub fn parse_cycle_list(text: &str, base: usize) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let err = |offset: usize, message: &str| Error::CycleSyntax {
        offset: base + offset,
        message: message.to_string(),
    };
    let mut cycles = Vec::new();
    let mut i = 0;
    let mut any = false;
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'(' {
            return Err(err(i, "expected '('"));
        }
        any = true;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            match bytes.get(i) {
                None => return Err(err(i, "unterminated cycle, expected ')'")),
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(b) if b.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let value: usize = text[start..i]
                        .parse()
                        .map_err(|_| err(start, "point index too large"))?;
                    if value >= MAX_DEGREE {
                        return Err(err(start, "point index too large"));
                    }
                    cycle.push(value);
                }
                Some(_) => return Err(err(i, "expected a point index or ')'")),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    if !any {
        return Err(err(0, "expected '('"));
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (j, x) in cycle.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn composition_acts_on_the_left() {
        let a = p("(0 1)", 3);
        let b = p("(1 2)", 3);
        // (a ∘ b)(1) = a(b(1)) = a(2) = 2
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.to_string(), "(0 1 2)");
    }

    #[test]
    fn overlapping_cycles_multiply_left_to_right() {
        assert_eq!(p("(0 1)(1 2)", 3), p("(0 1)", 3).compose(&p("(1 2)", 3)));
    }

    #[test]
    fn printing() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p("( 2 4 3 )( 1 0 )", 5).to_string(), "(0 1)(2 4 3)");
        assert_eq!(p("(3 1 2)", 4).to_string(), "(1 2 3)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(0 1", None),
            Err(Error::CycleSyntax { offset: 4, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("0 1)", None),
            Err(Error::CycleSyntax { offset: 0, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 x)", None),
            Err(Error::CycleSyntax { offset: 3, .. })
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 1 0)", None),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(0 5)", Some(3)),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 0]).is_ok());
    }

    #[test]
    fn cycle_type_and_order() {
        let x = p("(0 1)(2 3 4)", 7);
        assert_eq!(x.cycle_type(), vec![1, 1, 2, 3]);
        assert_eq!(x.order(), 6);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..10)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(x in arb_perm()) {
            prop_assert!(x.compose(&x.inverse()).is_identity());
            prop_assert!(x.inverse().compose(&x).is_identity());
        }

        #[test]
        fn cycle_notation_round_trips(x in arb_perm()) {
            let back = Permutation::parse_cycles(&x.to_string(), Some(x.degree())).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn conjugate_matches_composition(x in arb_perm(), seed in any::<u64>()) {
            let n = x.degree();
            let mut v: Vec<usize> = (0..n).collect();
            v.rotate_left((seed as usize) % n);
            let s = Permutation::from_images(v).unwrap();
            prop_assert_eq!(s.conjugate(&x), s.compose(&x).compose(&s.inverse()));
        }
    }
}
