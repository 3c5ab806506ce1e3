//! Exhaustive enumeration of the subgroups of S_n for n <= 5, up to
//! conjugacy, with a homogeneity verdict for each class.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{HomogeneityProfile, PermutationGroup, DEFAULT_SUBSET_BUDGET};
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const MAX_SCAN_DEGREE: usize = 5;

/// Note attached to the order-20 class of S_5.
pub const AGL15_NOTE: &str =
    "AGL(1,5) = F_5 ⋊ F_5^* (order 20). This is the 5-point entry that is \
sometimes written as F_5^*; the multiplicative group F_5^* alone has order 4, fixes 0 and is \
not transitive on the 5 points.";

/// One conjugacy class of subgroups of S_n.
#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub order: usize,
    /// Lexicographically greedy generating set of the chosen representative.
    pub generators: Vec<Permutation>,
    /// Number of subgroups in the conjugacy class.
    pub conjugates: usize,
    pub label: Option<String>,
    pub note: Option<String>,
    pub profile: HomogeneityProfile,
}

impl ScanEntry {
    pub fn passes(&self) -> bool {
        self.profile.all_transitive
    }

    pub fn group(&self) -> PermutationGroup {
        PermutationGroup::from_generators(self.generators.clone()).unwrap()
    }
}

type Bits = u128;

struct SymmetricTables {
    elements: Vec<Permutation>,
    mul: Vec<Vec<usize>>,
    identity: usize,
}

impl SymmetricTables {
    fn new(n: usize) -> Self {
        let elements = PermutationGroup::symmetric(n)
            .enumerate_elements(usize::MAX)
            .unwrap()
            .to_vec();
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        SymmetricTables {
            identity: index[&Permutation::identity(n)],
            elements,
            mul,
        }
    }

    fn closure(&self, gens: &[usize]) -> Bits {
        let mut set: Bits = 1 << self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul[g][x];
                if set & (1 << y) == 0 {
                    set |= 1 << y;
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Generators chosen greedily in element order: each element not yet in
    /// the span of the previous ones is added.
    fn greedy_generators(&self, subgroup: Bits) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: Bits = 1 << self.identity;
        for i in 0..self.elements.len() {
            if subgroup & (1 << i) != 0 && span & (1 << i) == 0 {
                gens.push(i);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn conjugate(&self, s: usize, subgroup: Bits, inverse: &[usize]) -> Bits {
        let mut out = 0;
        let mut bits = subgroup;
        while bits != 0 {
            let g = bits.trailing_zeros() as usize;
            out |= 1 << self.mul[self.mul[s][g]][inverse[s]];
            bits &= bits - 1;
        }
        out
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn label_for(n: usize, order: usize) -> Option<String> {
    if order == factorial(n) {
        Some(format!("S_{n}"))
    } else if n >= 3 && order * 2 == factorial(n) {
        Some(format!("A_{n}"))
    } else if n == 5 && order == 20 {
        Some("AGL(1,5)".to_string())
    } else if order == 1 {
        Some("1".to_string())
    } else {
        None
    }
}

/// All subgroups of S_n up to conjugacy, sorted by order and then by
/// generator list.
pub fn subgroup_scan(n: usize) -> Result<Vec<ScanEntry>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > MAX_SCAN_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: MAX_SCAN_DEGREE,
        });
    }
    let tables = SymmetricTables::new(n);
    let size = tables.elements.len();
    let inverse: Vec<usize> = (0..size)
        .map(|a| {
            (0..size)
                .find(|&b| tables.mul[a][b] == tables.identity)
                .unwrap()
        })
        .collect();

    // Every subgroup is reached by adjoining one element at a time.
    let trivial: Bits = 1 << tables.identity;
    let mut subgroups: Vec<(Bits, Vec<usize>)> = vec![(trivial, Vec::new())];
    let mut seen: HashSet<Bits> = HashSet::from([trivial]);
    let mut next = 0;
    while next < subgroups.len() {
        let (bits, gens) = subgroups[next].clone();
        next += 1;
        for x in 0..size {
            if bits & (1 << x) != 0 {
                continue;
            }
            let mut extended = gens.clone();
            extended.push(x);
            let larger = tables.closure(&extended);
            if seen.insert(larger) {
                subgroups.push((larger, extended));
            }
        }
    }

    let mut entries = Vec::new();
    let mut classified: HashSet<Bits> = HashSet::new();
    for (bits, _) in &subgroups {
        if classified.contains(bits) {
            continue;
        }
        let class: HashSet<Bits> = (0..size)
            .map(|s| tables.conjugate(s, *bits, &inverse))
            .collect();
        classified.extend(class.iter().copied());
        let generators = class
            .iter()
            .map(|&c| {
                tables
                    .greedy_generators(c)
                    .into_iter()
                    .map(|i| tables.elements[i].clone())
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap();
        let order = bits.count_ones() as usize;
        let group = if generators.is_empty() {
            PermutationGroup::trivial(n)
        } else {
            PermutationGroup::from_generators(generators.clone())?
        };
        let profile = group.homogeneity_profile(DEFAULT_SUBSET_BUDGET)?;
        let note = (n == 5 && order == 20).then(|| AGL15_NOTE.to_string());
        entries.push(ScanEntry {
            order,
            generators: if generators.is_empty() {
                vec![Permutation::identity(n)]
            } else {
                generators
            },
            conjugates: class.len(),
            label: label_for(n, order),
            note,
            profile,
        });
    }
    entries.sort_by(|a, b| (a.order, &a.generators).cmp(&(b.order, &b.generators)));
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn passing_orders(n: usize) -> Vec<usize> {
        subgroup_scan(n)
            .unwrap()
            .iter()
            .filter(|e| e.passes())
            .map(|e| e.order)
            .collect()
    }

    #[test]
    fn class_counts_match_known_tables() {
        // Conjugacy classes of subgroups of S_1..S_5.
        let counts: Vec<usize> = (1..=5).map(|n| subgroup_scan(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 19]);
        let total: usize = subgroup_scan(5).unwrap().iter().map(|e| e.conjugates).sum();
        assert_eq!(total, 156);
        let total4: usize = subgroup_scan(4).unwrap().iter().map(|e| e.conjugates).sum();
        assert_eq!(total4, 30);
    }

    #[test]
    fn passing_groups() {
        assert_eq!(passing_orders(3), vec![3, 6]);
        assert_eq!(passing_orders(4), vec![12, 24]);
        assert_eq!(passing_orders(5), vec![20, 60, 120]);
    }

    #[test]
    fn order_twenty_is_flagged() {
        let scan = subgroup_scan(5).unwrap();
        let agl = scan.iter().find(|e| e.order == 20).unwrap();
        assert_eq!(agl.label.as_deref(), Some("AGL(1,5)"));
        assert!(agl.note.as_deref().unwrap().contains("F_5^*"));
        assert_eq!(agl.conjugates, 6);
        assert!(scan
            .iter()
            .filter(|e| e.order != 20)
            .all(|e| e.note.is_none()));
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let a = subgroup_scan(4).unwrap();
        let b = subgroup_scan(4).unwrap();
        let key = |e: &ScanEntry| (e.order, e.generators.clone());
        assert!(a.windows(2).all(|w| key(&w[0]) <= key(&w[1])));
        assert_eq!(
            a.iter().map(key).collect::<Vec<_>>(),
            b.iter().map(key).collect::<Vec<_>>()
        );
    }

    #[test]
    fn degree_guard() {
        assert_eq!(
            subgroup_scan(6).unwrap_err(),
            Error::DegreeTooLarge { n: 6, max: 5 }
        );
    }
}
