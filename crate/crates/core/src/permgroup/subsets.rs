use serde::Serialize;

use super::PermutationGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Subsets are packed into `u128` bitmasks.
pub const MAX_SUBSET_DEGREE: usize = 128;

/// Orbits of a group on the k-element subsets of its points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KSubsetOrbitReport {
    pub k: usize,
    pub orbit_count: usize,
    /// Lexicographically least subset of each orbit, in lexicographic order.
    pub representatives: Vec<Vec<usize>>,
    /// Orbit sizes, aligned with `representatives`.
    pub orbit_sizes: Vec<u128>,
}

impl KSubsetOrbitReport {
    pub fn is_transitive(&self) -> bool {
        self.orbit_count == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogeneityProfile {
    pub degree: usize,
    /// `(k, orbit count on k-subsets)` for k = 0..=n.
    pub orbit_counts: Vec<(usize, usize)>,
    pub all_transitive: bool,
}

impl HomogeneityProfile {
    /// Values of k at which the action on k-subsets is not transitive.
    pub fn failing_k(&self) -> Vec<usize> {
        self.orbit_counts
            .iter()
            .filter(|(_, c)| *c != 1)
            .map(|(k, _)| *k)
            .collect()
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * num / den is integral; after removing gcd(acc, den) the
        // remaining denominator divides num.
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = num_integer::gcd(acc, den);
        match (acc / g).checked_mul(num / (den / g)) {
            Some(v) => acc = v,
            None => return u128::MAX,
        }
    }
    acc
}

/// Colex ranking of k-subsets of {0..n-1}.
struct SubsetRanker {
    table: Vec<Vec<u128>>,
}

impl SubsetRanker {
    fn new(n: usize, k: usize) -> Self {
        let table = (0..=n)
            .map(|m| (0..=k).map(|j| binomial(m, j)).collect())
            .collect();
        SubsetRanker { table }
    }

    fn rank(&self, mut mask: u128) -> usize {
        let mut r = 0u128;
        let mut i = 1;
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            r += self.table[c][i];
            i += 1;
            mask &= mask - 1;
        }
        r as usize
    }
}

#[inline]
fn apply_to_mask(p: &Permutation, mut mask: u128) -> u128 {
    let mut out = 0u128;
    while mask != 0 {
        let b = mask.trailing_zeros() as usize;
        out |= 1u128 << p.apply(b);
        mask &= mask - 1;
    }
    out
}

fn mask_to_vec(mut mask: u128) -> Vec<usize> {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        v.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    v
}

/// k-subsets of {0..n-1} in lexicographic order of their sorted index lists.
struct LexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl LexSubsets {
    fn new(n: usize, k: usize) -> Self {
        LexSubsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for LexSubsets {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        let cur = self.current.as_mut()?;
        let mask = cur.iter().fold(0u128, |m, &i| m | (1u128 << i));
        let k = cur.len();
        match (0..k).rev().find(|&i| cur[i] < self.n - k + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(mask)
    }
}

impl PermutationGroup {
    fn check_subset_budget(&self, k: usize, budget: usize) -> Result<u128> {
        let n = self.degree();
        if k > n {
            return Err(Error::SubsetSizeOutOfRange { n, k });
        }
        if n > MAX_SUBSET_DEGREE {
            return Err(Error::DegreeTooLarge {
                n,
                max: MAX_SUBSET_DEGREE,
            });
        }
        let count = binomial(n, k);
        if count > budget as u128 {
            return Err(Error::SubsetBudgetExceeded {
                n,
                k,
                count,
                budget,
            });
        }
        Ok(count)
    }

    /// Partitions the k-subsets into orbits by breadth-first search under
    /// the generators.
    pub fn orbits_on_k_subsets(&self, k: usize, budget: usize) -> Result<KSubsetOrbitReport> {
        let total = self.check_subset_budget(k, budget)? as usize;
        let ranker = SubsetRanker::new(self.degree(), k);
        let mut visited = vec![false; total];
        let mut representatives = Vec::new();
        let mut orbit_sizes = Vec::new();
        let mut stack = Vec::new();
        for start in LexSubsets::new(self.degree(), k) {
            let r = ranker.rank(start);
            if visited[r] {
                continue;
            }
            visited[r] = true;
            stack.push(start);
            let mut size = 0u128;
            while let Some(mask) = stack.pop() {
                size += 1;
                for g in self.generators() {
                    let image = apply_to_mask(g, mask);
                    let ri = ranker.rank(image);
                    if !visited[ri] {
                        visited[ri] = true;
                        stack.push(image);
                    }
                }
            }
            representatives.push(mask_to_vec(start));
            orbit_sizes.push(size);
        }
        Ok(KSubsetOrbitReport {
            k,
            orbit_count: representatives.len(),
            representatives,
            orbit_sizes,
        })
    }

    /// Orbit counts on k-subsets for every k, computed for k <= n/2 and
    /// mirrored through complementation.
    pub fn homogeneity_profile(&self, budget: usize) -> Result<HomogeneityProfile> {
        let n = self.degree();
        self.check_subset_budget(n / 2, budget)?;
        let mut counts = vec![0usize; n + 1];
        for k in 0..=n / 2 {
            let c = self.orbits_on_k_subsets(k, budget)?.orbit_count;
            counts[k] = c;
            counts[n - k] = c;
        }
        let orbit_counts: Vec<(usize, usize)> = counts.into_iter().enumerate().collect();
        let all_transitive = orbit_counts.iter().all(|(_, c)| *c == 1);
        Ok(HomogeneityProfile {
            degree: n,
            orbit_counts,
            all_transitive,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_SUBSET_BUDGET;

    fn group(gens: &[&str], n: usize) -> PermutationGroup {
        PermutationGroup::from_generators(
            gens.iter()
                .map(|s| Permutation::parse_cycles(s, Some(n)).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(
            binomial(128, 64),
            23_951_146_041_928_082_866_135_587_776_380_551_750
        );
    }

    #[test]
    fn lex_order_and_ranks_are_bijective() {
        let all: Vec<u128> = LexSubsets::new(6, 3).collect();
        assert_eq!(all.len(), 20);
        let lists: Vec<Vec<usize>> = all.iter().map(|&m| mask_to_vec(m)).collect();
        assert!(lists.windows(2).all(|w| w[0] < w[1]));
        let ranker = SubsetRanker::new(6, 3);
        let mut ranks: Vec<usize> = all.iter().map(|&m| ranker.rank(m)).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..20).collect::<Vec<_>>());
        assert_eq!(LexSubsets::new(4, 0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn s3_two_subsets() {
        let s3 = PermutationGroup::symmetric(3);
        assert_eq!(s3.orbits_on_k_subsets(2, 100).unwrap().orbit_count, 1);
    }

    #[test]
    fn square_has_edge_and_diagonal_orbits() {
        let c4 = PermutationGroup::cyclic(4);
        let r = c4.orbits_on_k_subsets(2, 100).unwrap();
        assert_eq!(r.orbit_count, 2);
        assert_eq!(r.representatives, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(r.orbit_sizes, vec![4, 2]);
    }

    #[test]
    fn pentagon_edges_and_diagonals() {
        let d5 = group(&["(0 1 2 3 4)", "(1 4)(2 3)"], 5);
        let r = d5.orbits_on_k_subsets(2, 100).unwrap();
        assert_eq!(r.orbit_count, 2);
        assert_eq!(r.orbit_sizes, vec![5, 5]);
    }

    #[test]
    fn extreme_k_have_one_orbit() {
        let g = PermutationGroup::trivial(5);
        assert_eq!(g.orbits_on_k_subsets(0, 10).unwrap().orbit_count, 1);
        assert_eq!(g.orbits_on_k_subsets(5, 10).unwrap().orbit_count, 1);
        assert_eq!(g.orbits_on_k_subsets(2, 10).unwrap().orbit_count, 10);
    }

    #[test]
    fn budget_and_range_errors() {
        let g = PermutationGroup::alternating(12);
        assert!(matches!(
            g.orbits_on_k_subsets(6, 900),
            Err(Error::SubsetBudgetExceeded { count: 924, .. })
        ));
        assert_eq!(g.orbits_on_k_subsets(6, 924).unwrap().orbit_count, 1);
        assert_eq!(
            g.orbits_on_k_subsets(13, 924).unwrap_err(),
            Error::SubsetSizeOutOfRange { n: 12, k: 13 }
        );
    }

    #[test]
    fn homogeneity_examples() {
        let a5 = PermutationGroup::alternating(5);
        assert!(
            a5.homogeneity_profile(DEFAULT_SUBSET_BUDGET)
                .unwrap()
                .all_transitive
        );
        let c6 = PermutationGroup::cyclic(6);
        let profile = c6.homogeneity_profile(DEFAULT_SUBSET_BUDGET).unwrap();
        assert!(!profile.all_transitive);
        assert_eq!(profile.orbit_counts[2], (2, 3));
        assert_eq!(profile.failing_k(), vec![2, 3, 4]);
    }

    #[test]
    fn alternating_twelve_is_homogeneous_without_enumeration() {
        let a12 = PermutationGroup::alternating(12);
        assert!(
            a12.homogeneity_profile(DEFAULT_SUBSET_BUDGET)
                .unwrap()
                .all_transitive
        );
        assert_eq!(a12.cached_order(), None);
    }

    #[test]
    fn complement_duality_direct() {
        for g in [
            PermutationGroup::cyclic(8),
            PermutationGroup::dihedral(7),
            group(&["(0 1 2)", "(3 4)(5 6)"], 7),
        ] {
            let n = g.degree();
            for k in 0..=n {
                assert_eq!(
                    g.orbits_on_k_subsets(k, 1000).unwrap().orbit_count,
                    g.orbits_on_k_subsets(n - k, 1000).unwrap().orbit_count
                );
            }
        }
    }
}
