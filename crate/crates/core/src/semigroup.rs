//! Finite semigroups given by Cayley tables, and the element-level
//! invariants built on idempotents and weak inverses.
//!
//! Every predicate here is an exhaustive scan of the table. Orders stay
//! small (a few dozen elements at most), so the scans double as oracles
//! for the rest of the crate.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense index of an element of a [`FiniteSemigroup`].
pub type ElementId = usize;

/// A finite set of element ids, iterated in increasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementSet(BTreeSet<ElementId>);

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(id: ElementId) -> Self {
        Self(BTreeSet::from([id]))
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        self.0.insert(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<ElementId> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        self.0.intersection(&other.0).next().is_some()
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.0.iter().copied().collect()
    }

    /// Members of the set whose bit is set in `mask`, for power-set scans
    /// over `0..n`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        (0..n).filter(|i| mask >> i & 1 == 1).collect()
    }

    /// Space separated base-10 ids, the subset text format.
    pub fn to_text(&self) -> String {
        self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[ElementId; N]> for ElementSet {
    fn from(ids: [ElementId; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl IntoIterator for ElementSet {
    type Item = ElementId;
    type IntoIter = std::collections::btree_set::IntoIter<ElementId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, ElementId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for ElementSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<ElementId>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("bad element id {tok:?}"),
                })
            })
            .collect()
    }
}

/// Weak inverses, inverses and left pre-inverses of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSets {
    /// `{s' : s' s s' = s'}`
    pub weak: ElementSet,
    /// `{s' in W(s) : s in W(s')}`
    pub inverse: ElementSet,
    /// `{s' : s' s idempotent}`
    pub left: ElementSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdempotentClass {
    pub is_band: bool,
    pub is_semilattice: bool,
}

/// A semigroup on `0..n` given by its validated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<ElementId>,
    identity: Option<ElementId>,
    labels: Option<Vec<String>>,
}

impl FiniteSemigroup {
    /// Validates `table` (row `i` holds `i*0 .. i*(n-1)`) and checks
    /// associativity over all `n^3` triples.
    ///
    /// Without a hint the identity is detected from the table.
    pub fn new(table: Vec<Vec<ElementId>>, identity_hint: Option<ElementId>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::EmptySemigroup);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NotSquare { row, len: entries.len(), expected: order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(Error::OutOfRangeEntry { row, col, value, order });
                }
                flat.push(value);
            }
        }
        Self::from_flat(order, flat, identity_hint)
    }

    pub(crate) fn from_flat(
        order: usize,
        table: Vec<ElementId>,
        identity_hint: Option<ElementId>,
    ) -> Result<Self> {
        debug_assert_eq!(table.len(), order * order);
        let mut s = Self { order, table, identity: None, labels: None };
        if let Some((i, j, k)) = s.associativity_witness() {
            return Err(Error::NonAssociative(i, j, k));
        }
        s.identity = match identity_hint {
            Some(e) if e >= order => return Err(Error::ElementOutOfRange { id: e, order }),
            Some(e) if !s.is_identity(e) => return Err(Error::BadIdentityHint(e)),
            Some(e) => Some(e),
            None => (0..order).find(|&e| s.is_identity(e)),
        };
        Ok(s)
    }

    /// Attaches display names; they play no part in any computation.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    fn associativity_witness(&self) -> Option<(ElementId, ElementId, ElementId)> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn is_identity(&self, e: ElementId) -> bool {
        (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    /// Product of a non-empty word, left to right.
    pub fn product(&self, word: &[ElementId]) -> ElementId {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    pub fn label(&self, id: ElementId) -> String {
        match &self.labels {
            Some(labels) => labels[id].clone(),
            None => id.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn check_element(&self, id: ElementId) -> Result<()> {
        if id < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { id, order: self.order })
        }
    }

    pub fn check_set(&self, set: &ElementSet) -> Result<()> {
        set.iter().try_for_each(|id| self.check_element(id))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `AB = {ab : a in A, b in B}`.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        a.iter().flat_map(|x| b.iter().map(move |y| self.mul(x, y))).collect()
    }

    /// Left translate `sA`.
    pub fn left_translate(&self, s: ElementId, a: &ElementSet) -> ElementSet {
        a.iter().map(|x| self.mul(s, x)).collect()
    }

    pub fn is_idempotent(&self, e: ElementId) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> ElementSet {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn classify_idempotents(&self) -> IdempotentClass {
        let e = self.idempotents();
        let is_band = e.iter().all(|a| e.iter().all(|b| self.is_idempotent(self.mul(a, b))));
        let is_semilattice =
            is_band && e.iter().all(|a| e.iter().all(|b| self.mul(a, b) == self.mul(b, a)));
        IdempotentClass { is_band, is_semilattice }
    }

    pub fn has_semilattice_idempotents(&self) -> bool {
        self.classify_idempotents().is_semilattice
    }

    pub fn require_semilattice(&self) -> Result<()> {
        if self.has_semilattice_idempotents() {
            Ok(())
        } else {
            Err(Error::NotSemilattice)
        }
    }

    pub fn weak_inverses(&self, s: ElementId) -> ElementSet {
        self.elements().filter(|&t| self.product(&[t, s, t]) == t).collect()
    }

    pub fn inverses(&self, s: ElementId) -> ElementSet {
        self.weak_inverses(s)
            .into_iter()
            .filter(|&t| self.product(&[s, t, s]) == s)
            .collect()
    }

    pub fn left_pre_inverses(&self, s: ElementId) -> ElementSet {
        self.elements().filter(|&t| self.is_idempotent(self.mul(t, s))).collect()
    }

    pub fn inverse_sets(&self, s: ElementId) -> InverseSets {
        InverseSets {
            weak: self.weak_inverses(s),
            inverse: self.inverses(s),
            left: self.left_pre_inverses(s),
        }
    }

    /// `W(A)`, the union of the weak-inverse sets of the members of `A`.
    pub fn weak_inverses_of_set(&self, a: &ElementSet) -> ElementSet {
        a.iter().flat_map(|s| self.weak_inverses(s)).collect()
    }

    /// Natural partial order: `a = xb = by` and `xa = ay = a` for some
    /// `x, y` in `S^1`. An adjoined identity only ever witnesses `a = b`.
    pub fn mitsch_leq(&self, a: ElementId, b: ElementId) -> bool {
        if a == b {
            return true;
        }
        let left = self.elements().any(|x| self.mul(x, b) == a && self.mul(x, a) == a);
        let right = self.elements().any(|y| self.mul(b, y) == a && self.mul(a, y) == a);
        left && right
    }

    /// `a = b`, or `a = be` and `a = fb` for idempotents `e, f`.
    pub fn h_leq(&self, a: ElementId, b: ElementId) -> bool {
        if a == b {
            return true;
        }
        let e = self.idempotents();
        e.iter().any(|x| self.mul(b, x) == a) && e.iter().any(|f| self.mul(f, b) == a)
    }

    /// `S^1 a = {a} u Sa`.
    pub fn principal_left_ideal(&self, a: ElementId) -> ElementSet {
        let mut ideal: ElementSet = self.elements().map(|x| self.mul(x, a)).collect();
        ideal.insert(a);
        ideal
    }

    pub fn green_l_class(&self, a: ElementId) -> ElementSet {
        let target = self.principal_left_ideal(a);
        self.elements().filter(|&b| self.principal_left_ideal(b) == target).collect()
    }

    /// Every element has idempotents `s's` and `ss''` for some `s', s''`.
    /// Always true for a finite semigroup; kept as a sanity check.
    pub fn is_e_dense(&self) -> bool {
        self.elements().all(|s| {
            self.elements().any(|t| self.is_idempotent(self.mul(t, s)))
                && self.elements().any(|t| self.is_idempotent(self.mul(s, t)))
        })
    }

    /// Group test through `|L(s)| = 1` for every `s`.
    pub fn is_group(&self) -> bool {
        self.elements().all(|s| self.left_pre_inverses(s).len() == 1)
    }

    /// Group test from the definition: an identity and two-sided inverses.
    pub fn is_group_direct(&self) -> bool {
        match self.identity {
            None => false,
            Some(one) => self.elements().all(|s| {
                self.elements().any(|t| self.mul(s, t) == one && self.mul(t, s) == one)
            }),
        }
    }

    /// `E` is a unitary subset: `sa` or `as` in `E` with `a` in `E`
    /// forces `s` into `E`.
    pub fn is_e_unitary(&self) -> bool {
        let e = self.idempotents();
        self.elements().all(|s| {
            e.contains(s)
                || e.iter().all(|a| {
                    !e.contains(self.mul(s, a)) && !e.contains(self.mul(a, s))
                })
        })
    }

    pub fn is_regular(&self, x: ElementId) -> bool {
        self.elements().any(|y| self.product(&[x, y, x]) == x)
    }

    pub fn regular_elements(&self) -> ElementSet {
        self.elements().filter(|&x| self.is_regular(x)).collect()
    }

    /// Inverse semigroup: every element has exactly one inverse.
    pub fn is_inverse_semigroup(&self) -> bool {
        self.elements().all(|s| self.inverses(s).len() == 1)
    }

    /// `S^1` with the fresh identity as the last element; `self` is
    /// returned unchanged when it already has an identity.
    pub fn with_adjoined_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.order;
        let one = n;
        let rows: Vec<Vec<ElementId>> = (0..=n)
            .map(|a| {
                (0..=n)
                    .map(|b| match (a == one, b == one) {
                        (true, _) => b,
                        (_, true) => a,
                        _ => self.mul(a, b),
                    })
                    .collect()
            })
            .collect();
        let s = FiniteSemigroup::new(rows, Some(one)).expect("adjoining an identity preserves associativity");
        match &self.labels {
            Some(labels) => {
                let mut labels = labels.clone();
                labels.push("1".into());
                s.with_labels(labels)
            }
            None => s,
        }
    }

    /// Parses the Cayley table text format: the order on the first line,
    /// then one row per line, then an optional `identity <id>` line.
    /// `#` starts a comment.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line, message: String| Error::Parse { line, message };
        let (line_no, first) = lines.next().ok_or_else(|| parse_err(1, "missing order".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| parse_err(line_no, format!("bad order {first:?}")))?;
        if n == 0 {
            return Err(parse_err(line_no, "order must be positive".into()));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line_no, l) = lines
                .next()
                .ok_or_else(|| parse_err(line_no + rows.len() + 1, "missing table row".into()))?;
            let row = l
                .split_whitespace()
                .map(|tok| tok.parse::<ElementId>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| parse_err(line_no, format!("bad row {l:?}")))?;
            if row.len() != n {
                return Err(parse_err(line_no, format!("row has {} entries, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(parse_err(line_no, format!("entry {v} out of range")));
            }
            rows.push(row);
        }
        let mut hint = None;
        if let Some((line_no, l)) = lines.next() {
            let mut toks = l.split_whitespace();
            match (toks.next(), toks.next(), toks.next()) {
                (Some("identity"), Some(id), None) => {
                    hint = Some(
                        id.parse()
                            .map_err(|_| parse_err(line_no, format!("bad identity {id:?}")))?,
                    );
                }
                _ => return Err(parse_err(line_no, format!("unexpected line {l:?}"))),
            }
            if let Some((line_no, l)) = lines.next() {
                return Err(parse_err(line_no, format!("trailing content {l:?}")));
            }
        }
        Self::new(rows, hint)
    }

    /// Writes the Cayley table text format. The identity line is emitted
    /// whenever the semigroup has an identity.
    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(e) = self.identity {
            out.push_str(&format!("identity {e}\n"));
        }
        out
    }
}

/// Searches for an isomorphism `S -> T` by backtracking, pruning on
/// idempotency and the index/period of each element's powers. Returns the
/// image of each element of `S`.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<ElementId>> {
    if s.order() != t.order() {
        return None;
    }
    let n = s.order();
    let sig_s: Vec<_> = s.elements().map(|x| power_signature(s, x)).collect();
    let sig_t: Vec<_> = t.elements().map(|x| power_signature(t, x)).collect();
    let mut a = sig_s.clone();
    let mut b = sig_t.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        x: usize,
        s: &FiniteSemigroup,
        t: &FiniteSemigroup,
        sig_s: &[(usize, usize, bool)],
        sig_t: &[(usize, usize, bool)],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = s.order();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || sig_s[x] != sig_t[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            let consistent = (0..=x).all(|a| {
                [(a, x), (x, a)].iter().all(|&(p, q)| {
                    let r = s.mul(p, q);
                    r > x || map[r] == t.mul(map[p], map[q])
                })
            });
            if consistent && extend(x + 1, s, t, sig_s, sig_t, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
    if extend(0, s, t, &sig_s, &sig_t, &mut map, &mut used) {
        debug_assert!(is_homomorphism(s, t, &map));
        Some(map)
    } else {
        None
    }
}

/// `f(ab) = f(a) f(b)` for all `a, b`.
pub fn is_homomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, f: &[ElementId]) -> bool {
    f.len() == s.order()
        && s.elements()
            .all(|a| s.elements().all(|b| f[s.mul(a, b)] == t.mul(f[a], f[b])))
}

/// (index, period, idempotent) of the monogenic subsemigroup of `x`.
fn power_signature(s: &FiniteSemigroup, x: ElementId) -> (usize, usize, bool) {
    let mut seen = vec![usize::MAX; s.order()];
    let mut cur = x;
    let mut k = 1;
    while seen[cur] == usize::MAX {
        seen[cur] = k;
        cur = s.mul(cur, x);
        k += 1;
    }
    (seen[cur], k - seen[cur], s.is_idempotent(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::fixtures::{fixture, Fixture};

    fn fx(f: Fixture) -> FiniteSemigroup {
        fixture(f)
    }

    #[test]
    fn chain3_builds_with_detected_identity() {
        let s = FiniteSemigroup::new(vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]], None).unwrap();
        assert_eq!(s.identity(), Some(2));
    }

    #[test]
    fn z2_table_is_valid() {
        let s = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(s.identity(), Some(0));
        assert!(s.is_group());
    }

    #[test]
    fn non_associative_table_reports_witness() {
        // Oracle: the first triple in lexicographic order that fails.
        let rows = vec![vec![1, 1], vec![1, 0]];
        let mul = |a: usize, b: usize| rows[a][b];
        let expected = (0..2)
            .flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| mul(mul(i, j), k) != mul(i, mul(j, k)))
            .unwrap();
        assert_eq!(expected, (0, 0, 1));
        let err = FiniteSemigroup::new(rows.clone(), None).unwrap_err();
        assert_eq!(err, Error::NonAssociative(expected.0, expected.1, expected.2));
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 2], vec![0, 0]], None),
            Err(Error::OutOfRangeEntry { row: 0, col: 1, value: 2, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 0], vec![0]], None),
            Err(Error::NotSquare { row: 1, .. })
        ));
        assert_eq!(
            FiniteSemigroup::new(vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]], Some(1)),
            Err(Error::BadIdentityHint(1))
        );
    }

    #[test]
    fn idempotent_scans() {
        assert_eq!(fx(Fixture::Chain3).idempotents(), ElementSet::from([0, 1, 2]));
        assert_eq!(fx(Fixture::Z3e).idempotents(), ElementSet::from([0, 3]));
        assert_eq!(fx(Fixture::Z6).idempotents(), ElementSet::from([0]));
    }

    #[test]
    fn idempotent_classification() {
        let t2 = fx(Fixture::T2).classify_idempotents();
        assert!(t2.is_band && !t2.is_semilattice);
        let z3e = fx(Fixture::Z3e).classify_idempotents();
        assert!(z3e.is_band && z3e.is_semilattice);
        let b2 = fx(Fixture::B2).classify_idempotents();
        assert!(b2.is_band && b2.is_semilattice);
        let lz2 = fx(Fixture::Lz2).classify_idempotents();
        assert!(lz2.is_band && !lz2.is_semilattice);
    }

    #[test]
    fn inverse_sets_examples() {
        let z6 = fx(Fixture::Z6);
        let sets = z6.inverse_sets(2);
        assert_eq!(sets.weak, ElementSet::from([4]));
        assert_eq!(sets.inverse, ElementSet::from([4]));
        assert_eq!(sets.left, ElementSet::from([4]));

        let lz2 = fx(Fixture::Lz2);
        for s in lz2.elements() {
            assert_eq!(lz2.weak_inverses(s), ElementSet::from([0, 1]));
            assert_eq!(lz2.inverses(s), ElementSet::from([0, 1]));
        }

        assert_eq!(fx(Fixture::Z3e).weak_inverses(1), ElementSet::from([2, 5]));
    }

    #[test]
    fn mitsch_order_examples() {
        for f in Fixture::ALL {
            let s = fx(f);
            assert!(s.elements().all(|a| s.mitsch_leq(a, a)), "{f:?}");
        }
        assert!(fx(Fixture::Chain3).mitsch_leq(0, 2));
        assert!(!fx(Fixture::Z6).mitsch_leq(1, 2));
    }

    #[test]
    fn mitsch_reflexive_on_non_regular_element() {
        // In N2 no x in S has x*a = a, so reflexivity needs the S^1 witness.
        let n2 = fx(Fixture::N2);
        assert!(n2.elements().all(|x| n2.mul(x, 1) != 1));
        assert!(n2.mitsch_leq(1, 1));
    }

    #[test]
    fn h_order_examples() {
        assert!(fx(Fixture::Z3e).h_leq(3, 0));
        assert!(fx(Fixture::Chain3).h_leq(0, 2));
        assert!(!fx(Fixture::Z6).h_leq(1, 2));
    }

    #[test]
    fn l_classes() {
        // B2 ids: 0 = zero, 1 = a, 2 = a', 3 = aa', 4 = a'a
        assert_eq!(fx(Fixture::B2).green_l_class(3), ElementSet::from([2, 3]));
        let z6 = fx(Fixture::Z6);
        assert!(z6.elements().all(|a| z6.green_l_class(a).len() == 6));
        assert_eq!(fx(Fixture::Chain3).green_l_class(1), ElementSet::from([1]));
    }

    #[test]
    fn e_density_and_group_predicates() {
        for f in Fixture::ALL {
            assert!(fx(f).is_e_dense(), "{f:?}");
        }
        let trivial = FiniteSemigroup::new(vec![vec![0]], None).unwrap();
        assert!(trivial.is_e_dense());

        let z6 = fx(Fixture::Z6);
        assert!(z6.is_group() && z6.is_e_unitary());
        let z3e = fx(Fixture::Z3e);
        assert!(!z3e.is_group() && z3e.is_e_unitary());
        let b2 = fx(Fixture::B2);
        assert!(!b2.is_group() && !b2.is_e_unitary());
        for f in Fixture::ALL {
            let s = fx(f);
            assert_eq!(s.is_group(), s.is_group_direct(), "{f:?}");
        }
    }

    #[test]
    fn regular_elements_examples() {
        assert_eq!(fx(Fixture::B2).regular_elements().len(), 5);
        assert_eq!(fx(Fixture::Z6).regular_elements().len(), 6);
        assert_eq!(fx(Fixture::N2).regular_elements(), ElementSet::from([0]));
    }

    #[test]
    fn adjoined_identity_only_when_missing() {
        let z3 = fx(Fixture::Z3);
        assert_eq!(z3.with_adjoined_identity(), z3);
        let n2 = fx(Fixture::N2).with_adjoined_identity();
        assert_eq!(n2.order(), 3);
        assert_eq!(n2.identity(), Some(2));
    }

    #[test]
    fn table_text_parses_comments_and_identity() {
        let text = "# chain\n3\n0 0 0\n0 1 1 # row 1\n0 1 2\nidentity 2\n";
        let s = FiniteSemigroup::parse_table(text).unwrap();
        assert_eq!(s, fx(Fixture::Chain3));
        assert_eq!(s.to_table_text(), "3\n0 0 0\n0 1 1\n0 1 2\nidentity 2\n");
    }

    #[test]
    fn table_text_reports_line_numbers() {
        let err = FiniteSemigroup::parse_table("2\n0 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = FiniteSemigroup::parse_table("2\n0 1\n1 0\nidentity x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err:?}");
        let err = FiniteSemigroup::parse_table("2\n1 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)), "{err:?}");
    }

    #[test]
    fn isomorphism_search_matches_relabelled_group() {
        let z3 = fx(Fixture::Z3);
        // relabel 0 -> 2, 1 -> 0, 2 -> 1
        let perm = [2, 0, 1];
        let mut rows = vec![vec![0; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                rows[perm[a]][perm[b]] = perm[z3.mul(a, b)];
            }
        }
        let relabelled = FiniteSemigroup::new(rows, None).unwrap();
        let f = find_isomorphism(&z3, &relabelled).unwrap();
        assert!(is_homomorphism(&z3, &relabelled, &f));
        assert!(find_isomorphism(&z3, &fx(Fixture::Chain3)).is_none());
        assert!(find_isomorphism(&fx(Fixture::Z6), &fx(Fixture::Z6e)).is_none());
    }

    #[test]
    fn subset_text_round_trip() {
        let set: ElementSet = "0 3  5".parse().unwrap();
        assert_eq!(set, ElementSet::from([0, 3, 5]));
        assert_eq!(set.to_text(), "0 3 5");
        assert!("0 x".parse::<ElementSet>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn semigroup_strategy() -> impl Strategy<Value = FiniteSemigroup> {
            prop::sample::select(Fixture::ALL.to_vec()).prop_map(fixture)
        }

        proptest! {
            #[test]
            fn table_text_round_trips(s in semigroup_strategy()) {
                let back = FiniteSemigroup::parse_table(&s.to_table_text()).unwrap();
                prop_assert_eq!(back.rows(), s.rows());
                prop_assert_eq!(back.identity(), s.identity());
            }

            #[test]
            fn relabelling_is_an_isomorphism(
                s in semigroup_strategy(),
                seed in any::<u64>(),
            ) {
                use rand::seq::SliceRandom;
                use rand::SeedableRng;
                let n = s.order();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
                let mut rows = vec![vec![0; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        rows[perm[a]][perm[b]] = perm[s.mul(a, b)];
                    }
                }
                let t = FiniteSemigroup::new(rows, None).unwrap();
                prop_assert!(is_homomorphism(&s, &t, &perm));
                prop_assert!(find_isomorphism(&s, &t).is_some());
            }
        }
    }
}
