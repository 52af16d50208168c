//! Internal and external activity of hypertrees under a total order of `E`.
//!
//! The fast path decides activity by membership probes against an
//! enumerated [`HypertreeSet`]. The tight-set characterisations are kept
//! alongside for verification only; they scan all subsets of `E`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result, Values};
use crate::graph::{BipGraph, Side};
use crate::hypertree::{Hypertree, HypertreeSet, TightSets};

/// A total order on `E`. `ranked()[0]` is the smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeOrder {
    ranked: Vec<usize>,
    rank: Vec<usize>,
}

impl EdgeOrder {
    pub fn identity(n: usize) -> Self {
        EdgeOrder {
            ranked: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    /// `ranked[i]` is the index of the `i`-th smallest element.
    pub fn from_ranking(ranked: Vec<usize>) -> Result<Self> {
        let n = ranked.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &e) in ranked.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(Error::InvalidOrder(format!("{ranked:?} is not a permutation")));
            }
            rank[e] = pos;
        }
        Ok(EdgeOrder { ranked, rank })
    }

    /// An order of the `side` class given by its labels, smallest first.
    pub fn from_labels<S: AsRef<str>>(g: &BipGraph, side: Side, labels: &[S]) -> Result<Self> {
        let n = g.class_size(side);
        if labels.len() != n {
            return Err(Error::InvalidOrder(format!(
                "{} labels given for a class of size {n}",
                labels.len()
            )));
        }
        let ranked = labels
            .iter()
            .map(|l| {
                g.find(side, l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        EdgeOrder::from_ranking(ranked)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut ranked: Vec<usize> = (0..n).collect();
        ranked.shuffle(rng);
        EdgeOrder::from_ranking(ranked).expect("a shuffle is a permutation")
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranked.is_empty()
    }

    pub fn ranked(&self) -> &[usize] {
        &self.ranked
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// Elements strictly below `e`.
    pub fn below(&self, e: usize) -> &[usize] {
        &self.ranked[..self.rank[e]]
    }

    pub fn labels<'g>(&self, names: &'g [String]) -> Vec<&'g str> {
        self.ranked.iter().map(|&e| names[e].as_str()).collect()
    }
}

/// Per-hyperedge activity flags of one hypertree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivityProfile {
    pub hypertree: Hypertree,
    pub internally_inactive: Vec<bool>,
    pub externally_inactive: Vec<bool>,
}

impl ActivityProfile {
    /// `ῑ(f)`.
    pub fn internal_inactivity(&self) -> usize {
        self.internally_inactive.iter().filter(|&&b| b).count()
    }

    /// `ι(f)`.
    pub fn internal_activity(&self) -> usize {
        self.internally_inactive.len() - self.internal_inactivity()
    }

    /// `ε̄(f)`.
    pub fn external_inactivity(&self) -> usize {
        self.externally_inactive.iter().filter(|&&b| b).count()
    }

    /// `ε(f)`.
    pub fn external_activity(&self) -> usize {
        self.externally_inactive.len() - self.external_inactivity()
    }
}

fn check_member(b: &HypertreeSet, f: &[u32], order: &EdgeOrder) -> Result<()> {
    if !b.contains(f) {
        return Err(Error::NotAHypertree(Values(f.to_vec())));
    }
    if order.len() != f.len() {
        return Err(Error::InvalidOrder(format!(
            "order covers {} elements, hypertree has {}",
            order.len(),
            f.len()
        )));
    }
    Ok(())
}

/// `e` is internally inactive iff some `e' < e` admits `f - χ_e + χ_{e'} ∈ B`.
pub fn internal_inactivity(b: &HypertreeSet, f: &[u32], order: &EdgeOrder) -> Result<Vec<bool>> {
    check_member(b, f, order)?;
    let mut probe = f.to_vec();
    Ok((0..f.len())
        .map(|e| {
            f[e] > 0
                && order.below(e).iter().any(|&lower| {
                    probe[e] -= 1;
                    probe[lower] += 1;
                    let hit = b.contains(&probe);
                    probe[e] += 1;
                    probe[lower] -= 1;
                    hit
                })
        })
        .collect())
}

/// `e` is externally inactive iff some `e' < e` admits `f + χ_e - χ_{e'} ∈ B`.
pub fn external_inactivity(b: &HypertreeSet, f: &[u32], order: &EdgeOrder) -> Result<Vec<bool>> {
    check_member(b, f, order)?;
    let mut probe = f.to_vec();
    Ok((0..f.len())
        .map(|e| {
            order.below(e).iter().any(|&lower| {
                if probe[lower] == 0 {
                    return false;
                }
                probe[lower] -= 1;
                probe[e] += 1;
                let hit = b.contains(&probe);
                probe[lower] += 1;
                probe[e] -= 1;
                hit
            })
        })
        .collect())
}

pub fn activity_profile(b: &HypertreeSet, f: &[u32], order: &EdgeOrder) -> Result<ActivityProfile> {
    Ok(ActivityProfile {
        hypertree: Hypertree::new(f.to_vec()),
        internally_inactive: internal_inactivity(b, f, order)?,
        externally_inactive: external_inactivity(b, f, order)?,
    })
}

/// Profiles of every member of `b`, in the set's order.
pub fn profiles(b: &HypertreeSet, order: &EdgeOrder) -> Result<Vec<ActivityProfile>> {
    b.iter().map(|f| activity_profile(b, f.values(), order)).collect()
}

/// Internal inactivity of `e` through tight sets: `f(e) ≠ 0` and some
/// `e' < e` is such that no set containing `e'` and avoiding `e` is tight.
pub fn internal_inactive_by_tight_sets(g: &BipGraph, f: &[u32], order: &EdgeOrder, e: usize) -> Result<bool> {
    let tight = TightSets::compute(g, f)?;
    Ok(internal_inactive_in(&tight, f, order, e))
}

/// External inactivity of `e` through tight sets: some `e' < e` with
/// `f(e') ≠ 0` is such that no set containing `e` and avoiding `e'` is tight.
pub fn external_inactive_by_tight_sets(g: &BipGraph, f: &[u32], order: &EdgeOrder, e: usize) -> Result<bool> {
    let tight = TightSets::compute(g, f)?;
    Ok(external_inactive_in(&tight, f, order, e))
}

pub fn internal_inactive_in(tight: &TightSets, f: &[u32], order: &EdgeOrder, e: usize) -> bool {
    f[e] != 0 && order.below(e).iter().any(|&lower| !tight.separates(lower, e))
}

pub fn external_inactive_in(tight: &TightSets, f: &[u32], order: &EdgeOrder, e: usize) -> bool {
    order
        .below(e)
        .iter()
        .any(|&lower| f[lower] != 0 && !tight.separates(e, lower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::hypertree::{enumerate_hypertrees, greedy_exterior_hypertree};

    fn setup(spec: FamilySpec) -> (BipGraph, HypertreeSet) {
        let g = spec.generate().unwrap();
        let b = enumerate_hypertrees(&g).unwrap();
        (g, b)
    }

    fn count(flags: &[bool]) -> usize {
        flags.iter().filter(|&&x| x).count()
    }

    #[test]
    fn order_validation() {
        assert!(EdgeOrder::from_ranking(vec![0, 0, 1]).is_err());
        assert!(EdgeOrder::from_ranking(vec![0, 3, 1]).is_err());
        let o = EdgeOrder::from_ranking(vec![2, 0, 1]).unwrap();
        assert_eq!(o.rank(2), 0);
        assert!(o.less(2, 1));
        assert_eq!(o.below(1), &[2, 0]);
    }

    #[test]
    fn order_from_labels() {
        let g = FamilySpec::cycle(3).generate().unwrap();
        let names = g.e_names().to_vec();
        let o = EdgeOrder::from_labels(&g, Side::E, &[&names[2], &names[0], &names[1]]).unwrap();
        assert_eq!(o.ranked(), &[2, 0, 1]);
        assert!(matches!(
            EdgeOrder::from_labels(&g, Side::E, &["nope", "x", "y"]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(EdgeOrder::from_labels(&g, Side::E, &[&names[0]]).is_err());
    }

    #[test]
    fn hexagon_internal() {
        let (_, b) = setup(FamilySpec::cycle(3));
        let o = EdgeOrder::identity(3);
        assert_eq!(count(&internal_inactivity(&b, &[0, 1, 1], &o).unwrap()), 2);
        assert_eq!(count(&internal_inactivity(&b, &[1, 0, 1], &o).unwrap()), 1);
        assert_eq!(count(&internal_inactivity(&b, &[1, 1, 0], &o).unwrap()), 0);
    }

    #[test]
    fn hexagon_external() {
        let (_, b) = setup(FamilySpec::cycle(3));
        let o = EdgeOrder::identity(3);
        assert_eq!(count(&external_inactivity(&b, &[0, 1, 1], &o).unwrap()), 0);
        assert_eq!(count(&external_inactivity(&b, &[1, 0, 1], &o).unwrap()), 1);
        assert_eq!(count(&external_inactivity(&b, &[1, 1, 0], &o).unwrap()), 1);
    }

    #[test]
    fn tree_is_fully_active() {
        let (g, b) = setup(FamilySpec::tree(4, 3, 5));
        assert_eq!(b.len(), 1);
        let f = b.as_slice()[0].values().to_vec();
        let p = activity_profile(&b, &f, &EdgeOrder::identity(g.e_count())).unwrap();
        assert_eq!(p.internal_inactivity(), 0);
        assert_eq!(p.external_inactivity(), 0);
        assert_eq!(p.internal_activity(), g.e_count());
    }

    #[test]
    fn k33_internal() {
        let (_, b) = setup(FamilySpec::complete_bipartite(3, 3));
        let flags = internal_inactivity(&b, &[0, 1, 1], &EdgeOrder::identity(3)).unwrap();
        assert_eq!(count(&flags), 2);
    }

    #[test]
    fn greedy_is_externally_active() {
        let (g, b) = setup(FamilySpec::complete_bipartite(3, 4));
        let o = EdgeOrder::from_ranking(vec![3, 1, 0, 2]).unwrap();
        let gp = greedy_exterior_hypertree(&g, &o).unwrap();
        assert_eq!(count(&external_inactivity(&b, gp.values(), &o).unwrap()), 0);
        for e in 0..4 {
            assert!(!external_inactive_by_tight_sets(&g, gp.values(), &o, e).unwrap());
        }
    }

    #[test]
    fn not_a_member_is_an_error() {
        let (_, b) = setup(FamilySpec::cycle(3));
        assert!(matches!(
            internal_inactivity(&b, &[2, 0, 0], &EdgeOrder::identity(3)),
            Err(Error::NotAHypertree(_))
        ));
        assert!(matches!(
            external_inactivity(&b, &[0, 0, 2], &EdgeOrder::identity(3)),
            Err(Error::NotAHypertree(_))
        ));
    }

    #[test]
    fn tight_set_characterisation_examples() {
        let (g, _) = setup(FamilySpec::cycle(3));
        let o = EdgeOrder::identity(3);
        assert!(internal_inactive_by_tight_sets(&g, &[1, 0, 1], &o, 2).unwrap());
        assert!(!internal_inactive_by_tight_sets(&g, &[0, 1, 1], &o, 0).unwrap());
        assert!(!internal_inactive_by_tight_sets(&g, &[1, 1, 0], &o, 0).unwrap());
        assert!(external_inactive_by_tight_sets(&g, &[1, 0, 1], &o, 1).unwrap());
        assert!(!external_inactive_by_tight_sets(&g, &[1, 0, 1], &o, 0).unwrap());
    }

    #[test]
    fn activity_sums_to_edge_count() {
        let (g, b) = setup(FamilySpec::complete_bipartite(3, 4));
        for p in profiles(&b, &EdgeOrder::identity(g.e_count())).unwrap() {
            assert_eq!(p.internal_activity() + p.internal_inactivity(), g.e_count());
            assert_eq!(p.external_activity() + p.external_inactivity(), g.e_count());
        }
    }
}
