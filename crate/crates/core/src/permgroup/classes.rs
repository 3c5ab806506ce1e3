use std::collections::{BTreeMap, HashMap};

use super::{count_point_orbits, PermutationGroup};
use crate::error::Result;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least element of the class.
    pub representative: Permutation,
    pub size: usize,
    /// Centralizer of the representative, sorted.
    pub centralizer: Vec<Permutation>,
}

impl PermutationGroup {
    /// Conjugacy classes ordered by representative.
    ///
    /// Each class is found by closing its least element under conjugation by
    /// the generators.
    pub fn conjugacy_classes(&self, cap: usize) -> Result<Vec<ConjugacyClass>> {
        let elements = self.enumerate_elements(cap)?;
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut assigned = vec![false; elements.len()];
        let mut classes = Vec::new();
        let mut stack = Vec::new();
        for (i, rep) in elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            assigned[i] = true;
            stack.push(i);
            let mut size = 0;
            while let Some(j) = stack.pop() {
                size += 1;
                for g in self.generators() {
                    let c = g.conjugate(&elements[j]);
                    let ci = index[&c];
                    if !assigned[ci] {
                        assigned[ci] = true;
                        stack.push(ci);
                    }
                }
            }
            let centralizer: Vec<Permutation> = elements
                .iter()
                .filter(|h| rep.commutes_with(h))
                .cloned()
                .collect();
            debug_assert_eq!(size * centralizer.len(), elements.len());
            classes.push(ConjugacyClass {
                representative: rep.clone(),
                size,
                centralizer,
            });
        }
        Ok(classes)
    }

    /// Maps m to the number of commuting ordered pairs (a, b) for which
    /// ⟨a, b⟩ has exactly m orbits on points.
    ///
    /// Pairs with `a` conjugate to a class representative `r` are counted as
    /// `|class(r)|` copies of the pairs `(r, h)` with `h` in the centralizer
    /// of `r`; conjugation preserves orbit counts.
    pub fn commuting_pair_orbit_histogram(&self, cap: usize) -> Result<BTreeMap<usize, u64>> {
        let mut histogram = BTreeMap::new();
        for class in self.conjugacy_classes(cap)? {
            for h in &class.centralizer {
                let m = count_point_orbits(&[&class.representative, h], self.degree());
                *histogram.entry(m).or_insert(0) += class.size as u64;
            }
        }
        Ok(histogram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_ELEMENT_CAP;

    /// Direct double loop over all ordered pairs.
    fn brute_histogram(g: &PermutationGroup) -> BTreeMap<usize, u64> {
        let elems = g.enumerate_elements(DEFAULT_ELEMENT_CAP).unwrap();
        let mut h = BTreeMap::new();
        for a in elems {
            for b in elems {
                if a.compose(b) == b.compose(a) {
                    *h.entry(count_point_orbits(&[a, b], g.degree()))
                        .or_insert(0) += 1;
                }
            }
        }
        h
    }

    #[test]
    fn class_counts() {
        let cap = DEFAULT_ELEMENT_CAP;
        assert_eq!(
            PermutationGroup::symmetric(4)
                .conjugacy_classes(cap)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            PermutationGroup::symmetric(5)
                .conjugacy_classes(cap)
                .unwrap()
                .len(),
            7
        );
        assert_eq!(
            PermutationGroup::alternating(5)
                .conjugacy_classes(cap)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            PermutationGroup::dihedral(5)
                .conjugacy_classes(cap)
                .unwrap()
                .len(),
            4
        );
        let sizes: Vec<usize> = PermutationGroup::symmetric(4)
            .conjugacy_classes(cap)
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        assert_eq!(sizes.iter().sum::<usize>(), 24);
    }

    #[test]
    fn histogram_examples() {
        let cap = DEFAULT_ELEMENT_CAP;
        assert_eq!(
            PermutationGroup::trivial(1)
                .commuting_pair_orbit_histogram(cap)
                .unwrap(),
            BTreeMap::from([(1, 1)])
        );
        assert_eq!(
            PermutationGroup::symmetric(2)
                .commuting_pair_orbit_histogram(cap)
                .unwrap(),
            BTreeMap::from([(1, 3), (2, 1)])
        );
        assert_eq!(
            PermutationGroup::cyclic(3)
                .commuting_pair_orbit_histogram(cap)
                .unwrap(),
            BTreeMap::from([(1, 8), (3, 1)])
        );
    }

    #[test]
    fn histogram_matches_double_loop() {
        for g in [
            PermutationGroup::symmetric(4),
            PermutationGroup::alternating(5),
            PermutationGroup::dihedral(6),
            PermutationGroup::cyclic(6),
            PermutationGroup::from_generators(vec![
                Permutation::parse_cycles("(0 1 2)", Some(6)).unwrap(),
                Permutation::parse_cycles("(3 4)", Some(6)).unwrap(),
            ])
            .unwrap(),
        ] {
            let fast = g
                .commuting_pair_orbit_histogram(DEFAULT_ELEMENT_CAP)
                .unwrap();
            assert_eq!(fast, brute_histogram(&g));
            let classes = g.conjugacy_classes(DEFAULT_ELEMENT_CAP).unwrap().len() as u64;
            let order = g.order(DEFAULT_ELEMENT_CAP).unwrap() as u64;
            assert_eq!(fast.values().sum::<u64>(), order * classes);
        }
    }
}
