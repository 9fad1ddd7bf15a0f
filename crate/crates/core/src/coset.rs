//! Left cosets `(sH)ω̂` of a closed E-dense subsemigroup `H`, the coset
//! act `S/H`, conjugacy and the quotient group of a self-conjugate `H`.

use std::fmt;

use crate::act::{find_act_isomorphism_within, PartialAct};
use crate::closure::{omega_h, require_closed_e_dense};
use crate::error::{Error, PointId, Result};
use crate::semigroup::{ElementId, ElementSet, FiniteSemigroup};

fn check(s: &FiniteSemigroup, h: &ElementSet) -> Result<()> {
    s.require_semilattice()?;
    require_closed_e_dense(s, h)
}

fn related(s: &FiniteSemigroup, h: &ElementSet, a: ElementId, b: ElementId) -> bool {
    s.weak_inverses(a).iter().any(|w| h.contains(s.mul(w, b)))
}

fn in_domain(s: &FiniteSemigroup, h: &ElementSet, a: ElementId) -> bool {
    related(s, h, a, a)
}

/// `a π_H b` iff `a'b ∈ H` for some `a' ∈ W(a)`.
pub fn pi_h_related(s: &FiniteSemigroup, h: &ElementSet, a: ElementId, b: ElementId) -> Result<bool> {
    check(s, h)?;
    s.check_element(a)?;
    s.check_element(b)?;
    Ok(related(s, h, a, b))
}

/// All pairs of `π_H`.
pub fn pi_h_pairs(s: &FiniteSemigroup, h: &ElementSet) -> Result<Vec<(ElementId, ElementId)>> {
    check(s, h)?;
    Ok(s.elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| related(s, h, a, b))
        .collect())
}

/// `D_H = {s : s's ∈ H for some s' ∈ W(s)}`.
pub fn coset_domain(s: &FiniteSemigroup, h: &ElementSet) -> Result<ElementSet> {
    check(s, h)?;
    Ok(s.elements().filter(|&a| in_domain(s, h, a)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaCoset {
    representative: ElementId,
    members: ElementSet,
}

impl OmegaCoset {
    pub fn representative(&self) -> ElementId {
        self.representative
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }
}

impl fmt::Display for OmegaCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

fn raw_coset(s: &FiniteSemigroup, h: &ElementSet, a: ElementId) -> OmegaCoset {
    OmegaCoset { representative: a, members: omega_h(s, &s.left_translate(a, h)) }
}

/// `(aH)ω̂`, absent when `a ∉ D_H`.
pub fn coset(s: &FiniteSemigroup, h: &ElementSet, a: ElementId) -> Result<Option<OmegaCoset>> {
    check(s, h)?;
    s.check_element(a)?;
    Ok(in_domain(s, h, a).then(|| raw_coset(s, h, a)))
}

/// The cosets of `H` together with the act `s·X = (sX)ω̂`.
#[derive(Debug, Clone)]
pub struct CosetSpace<'a> {
    semigroup: &'a FiniteSemigroup,
    base: ElementSet,
    domain: ElementSet,
    cosets: Vec<OmegaCoset>,
    act: PartialAct<'a>,
}

impl<'a> CosetSpace<'a> {
    pub fn new(s: &'a FiniteSemigroup, h: &ElementSet) -> Result<Self> {
        check(s, h)?;
        let domain: ElementSet = s.elements().filter(|&a| in_domain(s, h, a)).collect();
        let mut cosets: Vec<OmegaCoset> = Vec::new();
        for a in &domain {
            let c = raw_coset(s, h, a);
            if !cosets.iter().any(|d| d.members == c.members) {
                cosets.push(c);
            }
        }
        cosets.sort_by_key(|c| c.members.first());

        let covered = cosets.iter().fold(ElementSet::new(), |acc, c| acc.union(&c.members));
        if covered != domain {
            return Err(Error::Inconsistent("cosets do not partition D_H".into()));
        }
        let meeting_e = cosets.iter().filter(|c| c.members.intersects(&s.idempotents())).count();
        if meeting_e != 1 {
            return Err(Error::Inconsistent(format!("{meeting_e} cosets contain idempotents")));
        }

        let index = |set: &ElementSet| cosets.iter().position(|c| &c.members == set);
        let m = cosets.len();
        let mut table = Vec::with_capacity(s.order() * m);
        for a in s.elements() {
            for c in &cosets {
                let image = omega_h(s, &s.left_translate(a, &c.members));
                let target = index(&image);
                for t in &c.members {
                    let via_rep = in_domain(s, h, s.mul(a, t)).then(|| raw_coset(s, h, s.mul(a, t)).members);
                    if via_rep.as_ref() != target.map(|j| &cosets[j].members) {
                        return Err(Error::Inconsistent(format!(
                            "{a}·{c} disagrees with the coset of {a}{t}"
                        )));
                    }
                }
                table.push(target);
            }
        }
        let labels = cosets.iter().map(ToString::to_string).collect();
        let act = PartialAct::from_parts(s, m, table, labels, None)?;
        let space = Self { semigroup: s, base: h.clone(), domain, cosets, act };
        let base_point = space.base_index();
        if space.act.stabilizer(base_point) != *h {
            return Err(Error::Inconsistent("stabilizer of H differs from H".into()));
        }
        Ok(space)
    }

    pub fn semigroup(&self) -> &'a FiniteSemigroup {
        self.semigroup
    }

    pub fn base(&self) -> &ElementSet {
        &self.base
    }

    /// `D_H`.
    pub fn domain(&self) -> &ElementSet {
        &self.domain
    }

    /// Ordered by least member.
    pub fn cosets(&self) -> &[OmegaCoset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// The coset act; point `i` is `cosets()[i]`.
    pub fn act(&self) -> &PartialAct<'a> {
        &self.act
    }

    pub fn base_index(&self) -> PointId {
        self.index_of(&self.base).expect("H is a coset of itself")
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<PointId> {
        self.cosets.iter().position(|c| &c.members == members)
    }

    /// Index of the coset containing `a`, if `a ∈ D_H`.
    pub fn coset_of(&self, a: ElementId) -> Option<PointId> {
        self.cosets.iter().position(|c| c.members.contains(a))
    }

    /// One coset per line, members as sorted ids.
    pub fn to_text(&self) -> String {
        self.cosets.iter().map(|c| c.members.to_text() + "\n").collect()
    }
}

/// Searches for `s` and `s' ∈ W(s)` with `s'Hs ⊆ K` and `sKs' ⊆ H`.
///
/// The answer is cross-checked against an act isomorphism `S/H ≅ S/K`.
pub fn are_conjugate(
    s: &FiniteSemigroup,
    h: &ElementSet,
    k: &ElementSet,
) -> Result<Option<(ElementId, ElementId)>> {
    check(s, h)?;
    check(s, k)?;
    let sandwich = |a, set: &ElementSet, b| -> ElementSet { set.iter().map(|x| s.product(&[a, x, b])).collect() };
    let witness = s.elements().find_map(|a| {
        s.weak_inverses(a)
            .iter()
            .find(|&w| sandwich(w, h, a).is_subset(k) && sandwich(a, k, w).is_subset(h))
            .map(|w| (a, w))
    });
    if let Some((a, w)) = witness {
        if omega_h(s, &sandwich(w, h, a)) != *k || omega_h(s, &sandwich(a, k, w)) != *h {
            return Err(Error::Inconsistent(format!("witness ({a}, {w}) does not close up to H and K")));
        }
        if !h.contains(s.mul(a, w)) || !k.contains(s.mul(w, a)) {
            return Err(Error::Inconsistent(format!("witness ({a}, {w}) misses the side conditions")));
        }
    }
    let (sh, sk) = (CosetSpace::new(s, h)?, CosetSpace::new(s, k)?);
    let iso = find_act_isomorphism_within(sh.act(), sk.act(), sh.len().max(sk.len()))?;
    if iso.is_some() != witness.is_some() {
        return Err(Error::Inconsistent("conjugacy witness and coset act isomorphism disagree".into()));
    }
    Ok(witness)
}

/// `st ∈ H` implies `ts ∈ H`; cross-checked against
/// `s's ∈ H ⇒ sHs' ⊆ H` for `s' ∈ W(s)`.
pub fn is_self_conjugate(s: &FiniteSemigroup, h: &ElementSet) -> Result<bool> {
    check(s, h)?;
    let swap = s
        .elements()
        .all(|a| s.elements().all(|b| !h.contains(s.mul(a, b)) || h.contains(s.mul(b, a))));
    let sandwich = s.elements().all(|a| {
        s.weak_inverses(a)
            .iter()
            .filter(|&w| h.contains(s.mul(w, a)))
            .all(|w| h.iter().all(|x| h.contains(s.product(&[a, x, w]))))
    });
    if swap != sandwich {
        return Err(Error::Inconsistent("self-conjugacy criteria disagree".into()));
    }
    Ok(swap)
}

/// The group of cosets under `(sH)ω̂ (tH)ω̂ = (stH)ω̂`; element `i` is
/// coset `i` of [`CosetSpace::new`].
pub fn quotient_group(s: &FiniteSemigroup, h: &ElementSet) -> Result<FiniteSemigroup> {
    if !is_self_conjugate(s, h)? {
        return Err(Error::NotSelfConjugate);
    }
    let space = CosetSpace::new(s, h)?;
    let mut table = vec![vec![0; space.len()]; space.len()];
    for (i, x) in space.cosets().iter().enumerate() {
        for (j, y) in space.cosets().iter().enumerate() {
            let products: ElementSet = x
                .members()
                .iter()
                .flat_map(|a| y.members().iter().map(move |b| s.mul(a, b)))
                .collect();
            let classes: std::collections::BTreeSet<Option<PointId>> =
                products.iter().map(|p| space.coset_of(p)).collect();
            match classes.into_iter().collect::<Vec<_>>()[..] {
                [Some(k)] => table[i][j] = k,
                _ => return Err(Error::Inconsistent(format!("coset product {x}{y} is not well defined"))),
            }
        }
    }
    let group = FiniteSemigroup::new(table, Some(space.base_index()))?
        .with_labels(space.cosets().iter().map(ToString::to_string).collect());
    if !group.is_group() {
        return Err(Error::Inconsistent("coset quotient is not a group".into()));
    }
    Ok(group)
}

/// `ρ : D_H → Sym(S/H)`, `ρ_s(X) = (sX)ω̂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rho {
    domain: ElementSet,
    permutations: Vec<Option<Vec<PointId>>>,
}

impl Rho {
    pub fn domain(&self) -> &ElementSet {
        &self.domain
    }

    /// `ρ_s` as an image vector over coset indices.
    pub fn permutation(&self, a: ElementId) -> Option<&[PointId]> {
        self.permutations.get(a)?.as_deref()
    }

    /// Pairs `(s, t)` of `D_H` with `ρ_s = ρ_t`.
    pub fn kernel_pairs(&self) -> Vec<(ElementId, ElementId)> {
        self.domain
            .iter()
            .flat_map(|a| self.domain.iter().map(move |b| (a, b)))
            .filter(|&(a, b)| self.permutations[a] == self.permutations[b])
            .collect()
    }
}

pub fn rho_representation(s: &FiniteSemigroup, h: &ElementSet) -> Result<Rho> {
    if !is_self_conjugate(s, h)? {
        return Err(Error::NotSelfConjugate);
    }
    let space = CosetSpace::new(s, h)?;
    let m = space.len();
    let mut permutations = vec![None; s.order()];
    for a in space.domain() {
        let perm: Option<Vec<PointId>> = (0..m).map(|x| space.act().act(a, x)).collect();
        let perm = perm.ok_or_else(|| Error::Inconsistent(format!("ρ_{a} is not total")))?;
        let mut seen = vec![false; m];
        for &y in &perm {
            seen[y] = true;
        }
        if seen.contains(&false) {
            return Err(Error::Inconsistent(format!("ρ_{a} is not a bijection")));
        }
        permutations[a] = Some(perm);
    }
    let rho = Rho { domain: space.domain().clone(), permutations };
    for a in space.domain() {
        for b in space.domain() {
            let (pa, pb) = (rho.permutation(a).unwrap(), rho.permutation(b).unwrap());
            let composed: Vec<PointId> = pb.iter().map(|&y| pa[y]).collect();
            if rho.permutation(s.mul(a, b)) != Some(&composed[..]) {
                return Err(Error::Inconsistent(format!("ρ_{a}{b} != ρ_{a} ρ_{b}")));
            }
        }
    }
    let pi: Vec<_> = pi_h_pairs(s, h)?
        .into_iter()
        .filter(|&(a, b)| space.domain().contains(a) && space.domain().contains(b))
        .collect();
    if rho.kernel_pairs() != pi {
        return Err(Error::Inconsistent("ker ρ differs from π_H on D_H".into()));
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::closed_e_dense_subsemigroups;
    use crate::construction::fixtures::{fixture, Fixture};
    use crate::semigroup::find_isomorphism;

    fn h03() -> ElementSet {
        ElementSet::from([0, 3])
    }

    #[test]
    fn pi_h_examples() {
        let z3e = fixture(Fixture::Z3e);
        assert!(pi_h_related(&z3e, &h03(), 1, 4).unwrap());
        assert!(!pi_h_related(&z3e, &h03(), 1, 2).unwrap());
        for a in h03() {
            for b in h03() {
                assert!(pi_h_related(&z3e, &h03(), a, b).unwrap());
            }
        }
        let err = pi_h_related(&z3e, &ElementSet::from([3]), 0, 0).unwrap_err();
        assert!(matches!(err, Error::BadSubsemigroup { .. }));
        assert_eq!(pi_h_related(&fixture(Fixture::T2), &ElementSet::from([0]), 0, 0), Err(Error::NotSemilattice));
    }

    #[test]
    fn coset_examples() {
        let z3e = fixture(Fixture::Z3e);
        assert_eq!(coset(&z3e, &h03(), 1).unwrap().unwrap().members(), &ElementSet::from([1, 4]));
        assert_eq!(coset(&z3e, &h03(), 0).unwrap().unwrap().members(), &h03());
        assert_eq!(coset(&z3e, &h03(), 3).unwrap().unwrap().members(), &h03());
        let chain = fixture(Fixture::Chain3);
        assert_eq!(coset(&chain, &ElementSet::from([2]), 1).unwrap(), None);
    }

    #[test]
    fn coset_space_examples() {
        let z3e = fixture(Fixture::Z3e);
        let space = CosetSpace::new(&z3e, &h03()).unwrap();
        let members: Vec<_> = space.cosets().iter().map(|c| c.members().clone()).collect();
        assert_eq!(members, vec![h03(), ElementSet::from([1, 4]), ElementSet::from([2, 5])]);
        assert_eq!(space.to_text(), "0 3\n1 4\n2 5\n");
        assert!(space.act().properties().transitive);

        let z6 = fixture(Fixture::Z6);
        assert_eq!(CosetSpace::new(&z6, &ElementSet::from([0, 2, 4])).unwrap().len(), 2);

        let chain = fixture(Fixture::Chain3);
        let space = CosetSpace::new(&chain, &ElementSet::from([2])).unwrap();
        assert_eq!(space.domain(), &ElementSet::from([2]));
        assert_eq!(space.len(), 1);
    }

    #[test]
    fn conjugacy_examples() {
        let z6 = fixture(Fixture::Z6);
        let (a, w) = are_conjugate(&z6, &ElementSet::from([0, 2, 4]), &ElementSet::from([0, 2, 4]))
            .unwrap()
            .unwrap();
        assert!(z6.weak_inverses(a).contains(w));
        assert_eq!(are_conjugate(&z6, &ElementSet::from([0, 2, 4]), &ElementSet::from([0, 3])).unwrap(), None);
    }

    #[test]
    fn self_conjugacy_examples() {
        let z3e = fixture(Fixture::Z3e);
        assert!(is_self_conjugate(&z3e, &h03()).unwrap());
        let z6 = fixture(Fixture::Z6);
        for h in closed_e_dense_subsemigroups(&z6).unwrap() {
            assert!(is_self_conjugate(&z6, &h).unwrap());
        }
    }

    #[test]
    fn self_conjugate_means_conjugate_only_to_itself() {
        for f in Fixture::ALL {
            let s = fixture(f);
            let Ok(closed) = closed_e_dense_subsemigroups(&s) else { continue };
            for h in &closed {
                let only_itself = closed
                    .iter()
                    .all(|k| k == h || are_conjugate(&s, h, k).unwrap().is_none());
                assert_eq!(is_self_conjugate(&s, h).unwrap(), only_itself, "{f:?} {h}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let z3e = fixture(Fixture::Z3e);
        let q = quotient_group(&z3e, &h03()).unwrap();
        assert!(find_isomorphism(&q, &fixture(Fixture::Z3)).is_some());

        let z6 = fixture(Fixture::Z6);
        let q = quotient_group(&z6, &ElementSet::from([0, 3])).unwrap();
        assert!(find_isomorphism(&q, &fixture(Fixture::Z3)).is_some());

        let q = quotient_group(&z6, &(0..6).collect()).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn rho_examples() {
        let z3e = fixture(Fixture::Z3e);
        let rho = rho_representation(&z3e, &h03()).unwrap();
        assert_eq!(rho.permutation(1), Some(&[1, 2, 0][..]));
        for h in h03() {
            assert_eq!(rho.permutation(h), Some(&[0, 1, 2][..]));
        }
        assert_eq!(rho.domain().len(), 6);
        assert_eq!(rho.kernel_pairs().len(), 12);
    }
}
