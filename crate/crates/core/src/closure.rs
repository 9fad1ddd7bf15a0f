//! Upward closures under the two natural orders, unitary subsets and
//! E-dense subsemigroups.

use crate::error::{Error, Result};
use crate::semigroup::{ElementSet, FiniteSemigroup};

/// Largest order accepted by the power-set scans.
pub const SUBSET_SCAN_LIMIT: usize = 16;

/// `{s : a <=_m s for some a in A}`.
pub fn omega_m(s: &FiniteSemigroup, a: &ElementSet) -> ElementSet {
    s.elements().filter(|&t| a.iter().any(|x| s.mitsch_leq(x, t))).collect()
}

/// `{s : a <=_h s for some a in A}`.
pub fn omega_h(s: &FiniteSemigroup, a: &ElementSet) -> ElementSet {
    s.elements().filter(|&t| a.iter().any(|x| s.h_leq(x, t))).collect()
}

pub fn is_closed(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    omega_h(s, a) == *a
}

pub(crate) fn is_left_unitary(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    s.elements().all(|x| a.contains(x) || a.iter().all(|y| !a.contains(s.mul(x, y))))
}

pub(crate) fn is_right_unitary(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    s.elements().all(|x| a.contains(x) || a.iter().all(|y| !a.contains(s.mul(y, x))))
}

/// Both one-sided conditions: `sa` or `as` in `A` forces `s` into `A`.
pub fn is_unitary(s: &FiniteSemigroup, a: &ElementSet) -> bool {
    is_left_unitary(s, a) && is_right_unitary(s, a)
}

pub fn is_subsemigroup(s: &FiniteSemigroup, h: &ElementSet) -> bool {
    !h.is_empty() && h.iter().all(|a| h.iter().all(|b| h.contains(s.mul(a, b))))
}

/// Non-empty, closed under products, and each member has a weak inverse
/// inside the subset.
pub fn is_e_dense_subsemigroup(s: &FiniteSemigroup, h: &ElementSet) -> bool {
    is_subsemigroup(s, h) && h.iter().all(|x| s.weak_inverses(x).intersects(h))
}

/// Checks that `h` is a closed E-dense subsemigroup, naming the first
/// property that fails.
pub fn require_closed_e_dense(s: &FiniteSemigroup, h: &ElementSet) -> Result<()> {
    s.check_set(h)?;
    let bad = |reason: &str| Error::BadSubsemigroup { subset: h.to_string(), reason: reason.into() };
    if !is_subsemigroup(s, h) {
        return Err(bad("not a subsemigroup"));
    }
    if !is_e_dense_subsemigroup(s, h) {
        return Err(bad("some member has no weak inverse inside it"));
    }
    if !is_closed(s, h) {
        return Err(bad("not closed under the idempotent-witnessed order"));
    }
    Ok(())
}

/// All closed E-dense subsemigroups, by power-set scan.
///
/// For each E-dense subsemigroup the three closedness notions (under
/// `<=_h`, unitary, under `<=_m`) are evaluated and must agree.
pub fn closed_e_dense_subsemigroups(s: &FiniteSemigroup) -> Result<Vec<ElementSet>> {
    s.require_semilattice()?;
    let n = s.order();
    if n > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLargeForSubsetScan { order: n, limit: SUBSET_SCAN_LIMIT });
    }
    let mut found = Vec::new();
    for mask in 1u64..(1 << n) {
        let h = ElementSet::from_mask(mask, n);
        if !is_e_dense_subsemigroup(s, &h) {
            continue;
        }
        let by_h = is_closed(s, &h);
        let unitary = is_unitary(s, &h);
        let by_m = omega_m(s, &h) == h;
        if by_h != unitary || unitary != by_m {
            return Err(Error::Inconsistent(format!(
                "closure notions disagree on {h}: omega_h={by_h} unitary={unitary} omega_m={by_m}"
            )));
        }
        if by_h {
            found.push(h);
        }
    }
    found.sort_by_key(|h| (h.len(), h.to_vec()));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::fixtures::{fixture, Fixture};

    #[test]
    fn omega_m_examples() {
        let chain = fixture(Fixture::Chain3);
        assert_eq!(omega_m(&chain, &ElementSet::from([0])), ElementSet::from([0, 1, 2]));
        assert!(omega_m(&chain, &ElementSet::new()).is_empty());
        assert_eq!(omega_m(&fixture(Fixture::Z6), &ElementSet::from([2])), ElementSet::from([2]));
    }

    #[test]
    fn omega_h_examples() {
        let z3e = fixture(Fixture::Z3e);
        assert_eq!(omega_h(&z3e, &ElementSet::from([0, 3])), ElementSet::from([0, 3]));
        assert_eq!(omega_h(&fixture(Fixture::B2), &ElementSet::from([3])), ElementSet::from([3]));
        for f in Fixture::ALL {
            let s = fixture(f);
            for mask in 0u64..(1 << s.order().min(6)) {
                let a = ElementSet::from_mask(mask, s.order());
                let h = omega_h(&s, &a);
                assert!(a.is_subset(&h) && h.is_subset(&omega_m(&s, &a)), "{f:?} {a}");
            }
        }
    }

    #[test]
    fn unitary_examples() {
        let z3e = fixture(Fixture::Z3e);
        assert!(is_unitary(&z3e, &ElementSet::from([0, 3])));
        let b2 = fixture(Fixture::B2);
        assert!(!is_unitary(&b2, &b2.idempotents()));
        for f in Fixture::ALL {
            let s = fixture(f);
            assert!(is_unitary(&s, &s.elements().collect()));
        }
    }

    #[test]
    fn e_dense_subsemigroup_examples() {
        for f in Fixture::ALL {
            let s = fixture(f);
            if s.classify_idempotents().is_band {
                assert!(is_e_dense_subsemigroup(&s, &s.idempotents()), "{f:?}");
            }
        }
        let z3e = fixture(Fixture::Z3e);
        assert!(is_e_dense_subsemigroup(&z3e, &ElementSet::from([0, 1, 2])));
        assert!(!is_e_dense_subsemigroup(&fixture(Fixture::N2), &ElementSet::from([1])));
    }

    #[test]
    fn closed_subsemigroups_of_z3e() {
        let found = closed_e_dense_subsemigroups(&fixture(Fixture::Z3e)).unwrap();
        assert!(found.contains(&ElementSet::from([0, 3])));
        assert!(found.contains(&(0..6).collect()));
    }

    #[test]
    fn closed_subsemigroups_of_z6_are_subgroups() {
        let found = closed_e_dense_subsemigroups(&fixture(Fixture::Z6)).unwrap();
        let expected: Vec<ElementSet> = vec![
            ElementSet::from([0]),
            ElementSet::from([0, 3]),
            ElementSet::from([0, 2, 4]),
            (0..6).collect(),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn closed_subsemigroups_of_chain3() {
        let found = closed_e_dense_subsemigroups(&fixture(Fixture::Chain3)).unwrap();
        for h in [ElementSet::from([2]), ElementSet::from([1, 2]), ElementSet::from([0, 1, 2])] {
            assert!(found.contains(&h), "{h}");
        }
        assert!(!found.contains(&ElementSet::from([0])));
    }

    #[test]
    fn closed_subsemigroups_need_semilattice() {
        assert_eq!(
            closed_e_dense_subsemigroups(&fixture(Fixture::T2)),
            Err(Error::NotSemilattice)
        );
    }

    #[test]
    fn require_closed_names_failure() {
        let z3e = fixture(Fixture::Z3e);
        let err = require_closed_e_dense(&z3e, &ElementSet::from([3])).unwrap_err();
        match err {
            Error::BadSubsemigroup { reason, .. } => assert!(reason.contains("closed"), "{reason}"),
            other => panic!("{other:?}"),
        }
    }
}
