//! Finite permutation groups given by generators.
//!
//! Orbits on points and on k-subsets are computed by breadth-first search
//! under the generators, so they never require enumerating the group.
//! Element lists, conjugacy classes and commuting-pair statistics do
//! enumerate, and are bounded by an element cap.

mod classes;
mod scan;
mod subsets;

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use classes::ConjugacyClass;
pub use scan::{subgroup_scan, ScanEntry, MAX_SCAN_DEGREE};
pub use subsets::{binomial, HomogeneityProfile, KSubsetOrbitReport, MAX_SUBSET_DEGREE};

/// Default bound on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;
/// Default bound on the number of k-subsets visited by an orbit search.
pub const DEFAULT_SUBSET_BUDGET: usize = 1_000_000;

#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(cached) = self.elements.get() {
            let _ = elements.set(cached.clone());
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements,
        }
    }
}

impl PermutationGroup {
    /// Wraps a generator list. Nothing is enumerated.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGeneratorList)?;
        let degree = first.degree();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some((index, g)) = generators
            .iter()
            .enumerate()
            .find(|(_, g)| g.degree() != degree)
        {
            return Err(Error::DegreeMismatch {
                index,
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(PermutationGroup {
            degree,
            generators,
            elements: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(vec![Permutation::identity(degree.max(1))]).unwrap()
    }

    /// S_n from a transposition and an n-cycle.
    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial(1);
        }
        let transposition = Permutation::from_cycles(n, &[vec![0, 1]]).unwrap();
        let long = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        Self::from_generators(vec![transposition, long]).unwrap()
    }

    /// A_n from the 3-cycles (0 1 i), 2 <= i < n.
    pub fn alternating(n: usize) -> Self {
        if n <= 2 {
            return Self::trivial(n);
        }
        let gens = (2..n)
            .map(|i| Permutation::from_cycles(n, &[vec![0, 1, i]]).unwrap())
            .collect();
        Self::from_generators(gens).unwrap()
    }

    pub fn cyclic(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial(1);
        }
        Self::from_generators(vec![
            Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()
        ])
        .unwrap()
    }

    /// Symmetries of the n-gon: rotation i -> i+1 and reflection i -> -i.
    pub fn dihedral(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial(1);
        }
        let rotation = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
        let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        Self::from_generators(vec![rotation, reflection]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order if the elements have already been enumerated.
    pub fn cached_order(&self) -> Option<usize> {
        self.elements.get().map(Vec::len)
    }

    /// All group elements in lexicographic order of their image sequences.
    ///
    /// The closure is computed breadth-first from the identity by left
    /// multiplication with generators and cached on success.
    pub fn enumerate_elements(&self, cap: usize) -> Result<&[Permutation]> {
        if let Some(cached) = self.elements.get() {
            return if cached.len() > cap {
                Err(Error::OrderExceedsCap { cap })
            } else {
                Ok(cached)
            };
        }
        let identity = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderExceedsCap { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(self.elements.get_or_init(|| elements))
    }

    pub fn order(&self, cap: usize) -> Result<usize> {
        self.enumerate_elements(cap).map(<[_]>::len)
    }

    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerate_elements(cap)?.binary_search(p).is_ok())
    }

    /// Orbits of the group on `{0, .., n-1}`, each sorted, ordered by least point.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let refs: Vec<&Permutation> = self.generators.iter().collect();
        point_orbits(&refs, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().len() == 1
    }
}

/// Orbits on points of the subgroup generated by `perms`.
pub fn point_orbits(perms: &[&Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in perms {
        for i in 0..degree {
            let a = find(&mut parent, i);
            let b = find(&mut parent, p.apply(i));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; degree];
    for i in 0..degree {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[root]].push(i);
    }
    orbits
}

/// Number of orbits on points of the subgroup generated by `perms`.
pub fn count_point_orbits(perms: &[&Permutation], degree: usize) -> usize {
    point_orbits(perms, degree).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, Some(n)).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PermutationGroup::from_generators(vec![]).unwrap_err(),
            Error::EmptyGeneratorList
        );
        let err = PermutationGroup::from_generators(vec![perm("(0 1)", 2), perm("(0 1 2)", 3)])
            .unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                index: 1,
                expected: 2,
                found: 3
            }
        );
    }

    #[test]
    fn construction_does_not_enumerate() {
        let g =
            PermutationGroup::from_generators(vec![perm("(0 1)", 3), perm("(0 1 2)", 3)]).unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.cached_order(), None);
        assert_eq!(g.order(10).unwrap(), 6);
        assert_eq!(g.cached_order(), Some(6));
    }

    #[test]
    fn small_orders() {
        assert_eq!(PermutationGroup::trivial(4).order(10).unwrap(), 1);
        assert_eq!(PermutationGroup::trivial(4).degree(), 4);
        assert_eq!(PermutationGroup::cyclic(5).order(100).unwrap(), 5);
        let a4 = PermutationGroup::from_generators(vec![perm("(0 1 2)", 4), perm("(1 2 3)", 4)])
            .unwrap();
        assert_eq!(a4.order(100).unwrap(), 12);
        assert_eq!(PermutationGroup::alternating(6).order(1000).unwrap(), 360);
        assert_eq!(PermutationGroup::symmetric(5).order(1000).unwrap(), 120);
        assert_eq!(PermutationGroup::dihedral(5).order(1000).unwrap(), 10);
        assert_eq!(PermutationGroup::dihedral(6).order(1000).unwrap(), 12);
    }

    #[test]
    fn cap_is_enforced() {
        let a9 = PermutationGroup::alternating(9);
        assert_eq!(
            a9.order(1000).unwrap_err(),
            Error::OrderExceedsCap { cap: 1000 }
        );
        assert_eq!(a9.cached_order(), None);
        let s3 = PermutationGroup::symmetric(3);
        assert!(s3.order(6).is_ok());
        assert_eq!(s3.order(5).unwrap_err(), Error::OrderExceedsCap { cap: 5 });
    }

    #[test]
    fn elements_are_sorted_and_closed() {
        let g = PermutationGroup::dihedral(4);
        let elems = g.enumerate_elements(100).unwrap();
        assert!(elems.windows(2).all(|w| w[0] < w[1]));
        assert!(elems[0].is_identity());
        for a in elems {
            assert!(elems.binary_search(&a.inverse()).is_ok());
            for b in elems {
                assert!(elems.binary_search(&a.compose(b)).is_ok());
            }
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let a =
            PermutationGroup::from_generators(vec![perm("(0 1 2 3 4)", 5), perm("(1 4)(2 3)", 5)])
                .unwrap();
        let b =
            PermutationGroup::from_generators(vec![perm("(1 4)(2 3)", 5), perm("(0 1 2 3 4)", 5)])
                .unwrap();
        assert_eq!(
            a.enumerate_elements(100).unwrap(),
            b.enumerate_elements(100).unwrap()
        );
    }

    #[test]
    fn point_orbits_of_young_subgroup() {
        let g = PermutationGroup::from_generators(vec![
            perm("(0 1 2)", 5),
            perm("(0 1)", 5),
            perm("(3 4)", 5),
        ])
        .unwrap();
        assert_eq!(g.point_orbits(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_transitive());
        assert!(PermutationGroup::cyclic(7).is_transitive());
    }
}
