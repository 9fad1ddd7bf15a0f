//! Total and partial (E-dense) acts of a finite semigroup on a finite set.
//!
//! A [`PartialAct`] stores every `(s, x)` cell explicitly, defined or not,
//! and can only be obtained through validation of the composition law,
//! cancellativity and reflexivity.

use std::collections::{BTreeSet, VecDeque};

use crate::closure::omega_h;
use crate::error::{Error, PointId, Result};
use crate::semigroup::{ElementId, ElementSet, FiniteSemigroup};

/// Carrier bound for [`find_act_isomorphism`].
pub const ISOMORPHISM_BOUND: usize = 12;

/// A total left action `S x X -> X` with `(st)x = s(tx)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalAct {
    order: usize,
    points: usize,
    table: Vec<PointId>,
    labels: Vec<String>,
    embedding: Option<Vec<ElementId>>,
}

impl TotalAct {
    /// Row `s` of `table` lists `s*0 .. s*(m-1)`.
    pub fn new(s: &FiniteSemigroup, table: Vec<Vec<PointId>>) -> Result<Self> {
        if table.len() != s.order() {
            return Err(Error::ActionShape { rows: table.len(), order: s.order() });
        }
        let points = table.first().map_or(0, Vec::len);
        if points == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut flat = Vec::with_capacity(s.order() * points);
        for row in &table {
            if row.len() != points {
                return Err(Error::ActionShape { rows: row.len(), order: points });
            }
            for &y in row {
                if y >= points {
                    return Err(Error::PointOutOfRange { point: y, size: points });
                }
                flat.push(y);
            }
        }
        let act = Self {
            order: s.order(),
            points,
            table: flat,
            labels: (0..points).map(|x| x.to_string()).collect(),
            embedding: None,
        };
        act.check_associative(s)?;
        Ok(act)
    }

    fn check_associative(&self, s: &FiniteSemigroup) -> Result<()> {
        for a in s.elements() {
            for b in s.elements() {
                for x in 0..self.points {
                    if self.act(s.mul(a, b), x) != self.act(a, self.act(b, x)) {
                        return Err(Error::NotAssociativeAction(a, b, x));
                    }
                }
            }
        }
        Ok(())
    }

    /// `S` acting on itself by left multiplication.
    pub fn left_regular(s: &FiniteSemigroup) -> Self {
        Self::on_left_ideal(s, &s.elements().collect()).expect("S is a left ideal of itself")
    }

    /// Left multiplication on a left ideal `I` (`SI` contained in `I`).
    /// Point `i` stands for the `i`-th smallest member of `I`.
    pub fn on_left_ideal(s: &FiniteSemigroup, ideal: &ElementSet) -> Result<Self> {
        s.check_set(ideal)?;
        if ideal.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let members = ideal.to_vec();
        let index = |e: ElementId| members.iter().position(|&m| m == e);
        let mut table = Vec::with_capacity(s.order() * members.len());
        for a in s.elements() {
            for &x in &members {
                table.push(index(s.mul(a, x)).ok_or_else(|| Error::NotLeftIdeal(ideal.to_string()))?);
            }
        }
        Ok(Self {
            order: s.order(),
            points: members.len(),
            table,
            labels: members.iter().map(|&e| s.label(e)).collect(),
            embedding: Some(members),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.points);
        self.labels = labels;
        self
    }

    #[inline]
    pub fn act(&self, s: ElementId, x: PointId) -> PointId {
        self.table[s * self.points + x]
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn label(&self, x: PointId) -> &str {
        &self.labels[x]
    }

    pub fn point_of_element(&self, e: ElementId) -> Option<PointId> {
        self.embedding.as_ref()?.iter().position(|&m| m == e)
    }

    pub fn element_of_point(&self, x: PointId) -> Option<ElementId> {
        self.embedding.as_ref().map(|m| m[x])
    }

    pub fn stabilizer(&self, x: PointId) -> ElementSet {
        (0..self.order).filter(|&s| self.act(s, x) == x).collect()
    }

    /// First `(s, x, y)` with `x != y` and `sx = sy`.
    pub fn cancellative_witness(&self) -> Option<(ElementId, PointId, PointId)> {
        for s in 0..self.order {
            for x in 0..self.points {
                for y in x + 1..self.points {
                    if self.act(s, x) == self.act(s, y) {
                        return Some((s, x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellative_witness().is_none()
    }

    /// The same action viewed as a partial act, validated.
    pub fn to_partial<'a>(&self, s: &'a FiniteSemigroup) -> Result<PartialAct<'a>> {
        PartialAct::from_parts(
            s,
            self.points,
            self.table.iter().map(|&y| Some(y)).collect(),
            self.labels.clone(),
            self.embedding.clone(),
        )
    }

    /// `self ∪̇ other`; points of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &TotalAct) -> Result<TotalAct> {
        if self.order != other.order {
            return Err(Error::SemigroupMismatch);
        }
        let points = self.points + other.points;
        let mut table = Vec::with_capacity(self.order * points);
        for s in 0..self.order {
            table.extend((0..self.points).map(|x| self.act(s, x)));
            table.extend((0..other.points).map(|x| self.points + other.act(s, x)));
        }
        Ok(TotalAct {
            order: self.order,
            points,
            table,
            labels: self.labels.iter().chain(&other.labels).cloned().collect(),
            embedding: None,
        })
    }

    /// Rows of the action table.
    pub fn rows(&self) -> Vec<Vec<PointId>> {
        self.table.chunks(self.points).map(<[_]>::to_vec).collect()
    }
}

/// A validated E-dense partial act.
#[derive(Debug, Clone)]
pub struct PartialAct<'a> {
    semigroup: &'a FiniteSemigroup,
    points: usize,
    table: Vec<Option<PointId>>,
    labels: Vec<String>,
    embedding: Option<Vec<ElementId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActProperties {
    pub effective: bool,
    pub transitive: bool,
    pub indecomposable: bool,
    pub locally_free: bool,
}

/// `p : X -> E` with `D_e = p^{-1}([e])` for every idempotent `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<ElementId>,
}

impl Grading {
    pub fn degree(&self, x: PointId) -> ElementId {
        self.degrees[x]
    }

    pub fn degrees(&self) -> &[ElementId] {
        &self.degrees
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingOutcome {
    Graded(Grading),
    /// The point lies in no domain.
    NonEffective(PointId),
    /// The idempotents stabilizing the point have no least element.
    NoMinimumIdempotent(PointId),
}

impl GradingOutcome {
    pub fn grading(&self) -> Option<&Grading> {
        match self {
            GradingOutcome::Graded(g) => Some(g),
            _ => None,
        }
    }
}

impl<'a> PartialAct<'a> {
    /// Validates a raw table; row `s` lists `s*x` for every point `x`,
    /// `None` where undefined.
    pub fn validate(s: &'a FiniteSemigroup, table: Vec<Vec<Option<PointId>>>) -> Result<Self> {
        if table.len() != s.order() {
            return Err(Error::ActionShape { rows: table.len(), order: s.order() });
        }
        let points = table.first().map_or(0, Vec::len);
        if table.iter().any(|r| r.len() != points) {
            return Err(Error::ActionShape { rows: table.len(), order: s.order() });
        }
        let flat = table.into_iter().flatten().collect();
        Self::from_parts(s, points, flat, (0..points).map(|x| x.to_string()).collect(), None)
    }

    pub(crate) fn from_parts(
        s: &'a FiniteSemigroup,
        points: usize,
        table: Vec<Option<PointId>>,
        labels: Vec<String>,
        embedding: Option<Vec<ElementId>>,
    ) -> Result<Self> {
        if points == 0 {
            return Err(Error::EmptyCarrier);
        }
        debug_assert_eq!(table.len(), s.order() * points);
        if let Some(&y) = table.iter().flatten().find(|&&y| y >= points) {
            return Err(Error::PointOutOfRange { point: y, size: points });
        }
        let act = Self { semigroup: s, points, table, labels, embedding };
        act.check_axioms()?;
        Ok(act)
    }

    fn check_axioms(&self) -> Result<()> {
        let s = self.semigroup;
        for a in s.elements() {
            for b in s.elements() {
                let ab = s.mul(a, b);
                for x in 0..self.points {
                    let direct = self.act(ab, x);
                    let stepwise = self.act(b, x).and_then(|y| self.act(a, y));
                    if direct != stepwise {
                        return Err(Error::CompositionViolation(a, b, x));
                    }
                }
            }
        }
        for a in s.elements() {
            let mut seen: Vec<Option<PointId>> = vec![None; self.points];
            for x in 0..self.points {
                if let Some(y) = self.act(a, x) {
                    if let Some(prev) = seen[y] {
                        return Err(Error::NotCancellative(a, prev, x));
                    }
                    seen[y] = Some(x);
                }
            }
        }
        for a in s.elements() {
            let weak = s.weak_inverses(a);
            for x in 0..self.points {
                if let Some(y) = self.act(a, x) {
                    if !weak.iter().any(|w| self.act(w, y).is_some()) {
                        return Err(Error::NotReflexive(a, x));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn act(&self, s: ElementId, x: PointId) -> Option<PointId> {
        self.table[s * self.points + x]
    }

    pub fn semigroup(&self) -> &'a FiniteSemigroup {
        self.semigroup
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn label(&self, x: PointId) -> &str {
        &self.labels[x]
    }

    pub fn point_of_element(&self, e: ElementId) -> Option<PointId> {
        self.embedding.as_ref()?.iter().position(|&m| m == e)
    }

    pub fn element_of_point(&self, x: PointId) -> Option<ElementId> {
        self.embedding.as_ref().map(|m| m[x])
    }

    /// `D_s`, the points on which `s` acts.
    pub fn domain_of(&self, s: ElementId) -> Vec<PointId> {
        (0..self.points).filter(|&x| self.act(s, x).is_some()).collect()
    }

    /// `D^x`, the elements acting on `x`.
    pub fn acting_on(&self, x: PointId) -> ElementSet {
        self.semigroup.elements().filter(|&s| self.act(s, x).is_some()).collect()
    }

    pub fn stabilizer(&self, x: PointId) -> ElementSet {
        self.semigroup.elements().filter(|&s| self.act(s, x) == Some(x)).collect()
    }

    /// `Sx = {sx : s in D^x} u {x}`.
    pub fn orbit(&self, x: PointId) -> Vec<PointId> {
        let mut orbit: BTreeSet<PointId> =
            self.semigroup.elements().filter_map(|s| self.act(s, x)).collect();
        orbit.insert(x);
        orbit.into_iter().collect()
    }

    /// Distinct orbits, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<PointId>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for x in 0..self.points {
            if seen[x] {
                continue;
            }
            let orbit = self.orbit(x);
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_effective_point(&self, x: PointId) -> bool {
        self.semigroup.elements().any(|s| self.act(s, x).is_some())
    }

    /// `E^x = E n D^x`.
    pub fn idempotents_acting_on(&self, x: PointId) -> ElementSet {
        self.semigroup.idempotents().intersection(&self.acting_on(x))
    }

    pub fn is_locally_free(&self) -> bool {
        (0..self.points).all(|x| {
            self.stabilizer(x) == omega_h(self.semigroup, &self.idempotents_acting_on(x))
        })
    }

    pub fn properties(&self) -> ActProperties {
        let effective = (0..self.points).all(|x| self.is_effective_point(x));
        let transitive = (0..self.points).all(|x| {
            let reach: BTreeSet<PointId> =
                self.semigroup.elements().filter_map(|s| self.act(s, x)).collect();
            reach.len() == self.points
        });
        ActProperties {
            effective,
            transitive,
            indecomposable: self.components() == 1,
            locally_free: self.is_locally_free(),
        }
    }

    /// Number of connected components of the graph with edges `x -- sx`;
    /// a disjoint union of two subacts is exactly a split of this graph.
    fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.points).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for s in self.semigroup.elements() {
            for x in 0..self.points {
                if let Some(y) = self.act(s, x) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    parent[a] = b;
                }
            }
        }
        (0..self.points).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// The subact on `points` (which must be closed under the action),
    /// re-indexed in the given order.
    pub fn restrict(&self, points: &[PointId]) -> Result<PartialAct<'a>> {
        let index = |y: PointId| points.iter().position(|&p| p == y);
        let mut table = Vec::with_capacity(self.semigroup.order() * points.len());
        for s in self.semigroup.elements() {
            for &x in points {
                if x >= self.points {
                    return Err(Error::PointOutOfRange { point: x, size: self.points });
                }
                table.push(match self.act(s, x) {
                    Some(y) => Some(index(y).ok_or_else(|| Error::NotSubact(format!("{points:?}")))?),
                    None => None,
                });
            }
        }
        PartialAct::from_parts(
            self.semigroup,
            points.len(),
            table,
            points.iter().map(|&x| self.labels[x].clone()).collect(),
            self.embedding.as_ref().map(|m| points.iter().map(|&x| m[x]).collect()),
        )
    }

    /// Grading by the least idempotent of each stabilizer. Absent when a
    /// point is not effective or when no least idempotent exists.
    pub fn grading(&self) -> Result<GradingOutcome> {
        let s = self.semigroup;
        s.require_semilattice()?;
        let mut degrees = Vec::with_capacity(self.points);
        for x in 0..self.points {
            if !self.is_effective_point(x) {
                return Ok(GradingOutcome::NonEffective(x));
            }
            let fixing = self.stabilizer(x).intersection(&s.idempotents());
            let least = fixing.iter().find(|&m| fixing.iter().all(|e| s.h_leq(m, e)));
            match least {
                Some(m) => degrees.push(m),
                None => return Ok(GradingOutcome::NoMinimumIdempotent(x)),
            }
        }
        for e in s.idempotents() {
            let ideal = order_ideal(s, e)?;
            let preimage: Vec<PointId> =
                (0..self.points).filter(|&x| ideal.contains(degrees[x])).collect();
            if preimage != self.domain_of(e) {
                return Err(Error::Inconsistent(format!("D_{e} differs from the preimage of [{e}]")));
            }
        }
        Ok(GradingOutcome::Graded(Grading { degrees }))
    }

    /// Partial act text format: `n m`, then `n` rows of `m` entries, `-`
    /// for undefined.
    pub fn parse(s: &'a FiniteSemigroup, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line, message: String| Error::Parse { line, message };
        let (line_no, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(line_no, format!("bad header {header:?}")))?;
        let [n, m] = dims[..] else {
            return Err(err(line_no, "header must be `n m`".into()));
        };
        if n != s.order() {
            return Err(err(line_no, format!("act is for order {n}, semigroup has order {}", s.order())));
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (line_no, l) = lines.next().ok_or_else(|| err(line_no + rows.len() + 1, "missing row".into()))?;
            let row = l
                .split_whitespace()
                .map(|tok| match tok {
                    "-" => Ok(None),
                    t => t.parse().map(Some),
                })
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err(line_no, format!("bad row {l:?}")))?;
            if row.len() != m {
                return Err(err(line_no, format!("row has {} entries, expected {m}", row.len())));
            }
            rows.push(row);
        }
        if let Some((line_no, l)) = lines.next() {
            return Err(err(line_no, format!("trailing content {l:?}")));
        }
        Self::validate(s, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.semigroup.order(), self.points);
        for row in self.table.chunks(self.points) {
            let row: Vec<String> = row
                .iter()
                .map(|c| c.map_or_else(|| "-".to_string(), |y| y.to_string()))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Restriction of a total action (default: `S` on itself) to the domains
/// `D_s = {x : x = s'sx for some s' in W(s)}`.
pub fn wagner_preston<'a>(s: &'a FiniteSemigroup, total: Option<&TotalAct>) -> Result<PartialAct<'a>> {
    s.require_semilattice()?;
    let regular;
    let total = match total {
        Some(t) => t,
        None => {
            regular = TotalAct::left_regular(s);
            &regular
        }
    };
    let m = total.points();
    let mut table = Vec::with_capacity(s.order() * m);
    for a in s.elements() {
        let weak = s.weak_inverses(a);
        for x in 0..m {
            let ax = total.act(a, x);
            let in_domain = weak.iter().any(|w| total.act(w, ax) == x);
            table.push(in_domain.then_some(ax));
        }
    }
    PartialAct::from_parts(s, m, table, total.labels.clone(), total.embedding.clone())
}

/// `[e] = eE`, checked against `W(e)` and `{s : s <=_h e}`.
pub fn order_ideal(s: &FiniteSemigroup, e: ElementId) -> Result<ElementSet> {
    s.check_element(e)?;
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    s.require_semilattice()?;
    let ideal: ElementSet = s.idempotents().iter().map(|f| s.mul(e, f)).collect();
    if ideal != s.weak_inverses(e) {
        return Err(Error::Inconsistent(format!("[{e}] differs from W({e})")));
    }
    let below: ElementSet = s.elements().filter(|&t| s.h_leq(t, e)).collect();
    if ideal != below {
        return Err(Error::Inconsistent(format!("eE differs from the down-set of {e}")));
    }
    Ok(ideal)
}

/// The action of `S` on its semilattice of idempotents: `s * x = sxs'`
/// for `x` in `[s's]`, `s'` in `W(s)`. Point `i` is the `i`-th smallest
/// idempotent.
pub fn munn_act(s: &FiniteSemigroup) -> Result<PartialAct<'_>> {
    s.require_semilattice()?;
    let idempotents = s.idempotents().to_vec();
    let m = idempotents.len();
    let point = |e: ElementId| idempotents.iter().position(|&f| f == e);
    let mut table = vec![None; s.order() * m];
    for a in s.elements() {
        for w in s.weak_inverses(a) {
            let ideal = order_ideal(s, s.mul(w, a))?;
            for x in ideal {
                let image = s.product(&[a, x, w]);
                let y = point(image).ok_or_else(|| {
                    Error::Inconsistent(format!("{a}*{x}*{w} = {image} is not idempotent"))
                })?;
                let cell = &mut table[a * m + point(x).expect("x is idempotent")];
                match *cell {
                    Some(prev) if prev != y => {
                        return Err(Error::WellDefinednessViolation { s: a, x });
                    }
                    _ => *cell = Some(y),
                }
            }
        }
    }
    let labels = idempotents.iter().map(|&e| s.label(e)).collect();
    PartialAct::from_parts(s, m, table, labels, Some(idempotents))
}

/// `f : X -> Y` with `x in D_s <=> f(x) in D_s` and `f(sx) = s f(x)`.
pub fn is_s_map(from: &PartialAct<'_>, to: &PartialAct<'_>, f: &[PointId]) -> bool {
    f.len() == from.points()
        && f.iter().all(|&y| y < to.points())
        && from.semigroup().elements().all(|s| {
            (0..from.points()).all(|x| match (from.act(s, x), to.act(s, f[x])) {
                (Some(sx), Some(sfx)) => f[sx] == sfx,
                (None, None) => true,
                _ => false,
            })
        })
}

/// Exhaustive search over all `|Y|^|X|` maps; for small acts only.
pub fn find_s_map_brute_force(from: &PartialAct<'_>, to: &PartialAct<'_>) -> Option<Vec<PointId>> {
    let (m, k) = (from.points(), to.points());
    assert!((k as f64).powi(m as i32) <= 1e7, "search space too large");
    let mut f = vec![0; m];
    loop {
        if is_s_map(from, to, &f) {
            return Some(f);
        }
        let mut i = 0;
        loop {
            if i == m {
                return None;
            }
            f[i] += 1;
            if f[i] < k {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Searches for an isomorphism of acts with carriers up to
/// [`ISOMORPHISM_BOUND`] points.
pub fn find_act_isomorphism(a: &PartialAct<'_>, b: &PartialAct<'_>) -> Result<Option<Vec<PointId>>> {
    find_act_isomorphism_within(a, b, ISOMORPHISM_BOUND)
}

/// Backtracking over orbit representatives: candidates must share the
/// domain `D^x` and stabilizer `S_x`, and each choice is propagated along
/// the action before branching again.
pub fn find_act_isomorphism_within(
    a: &PartialAct<'_>,
    b: &PartialAct<'_>,
    bound: usize,
) -> Result<Option<Vec<PointId>>> {
    if a.semigroup() != b.semigroup() {
        return Err(Error::SemigroupMismatch);
    }
    if a.points() != b.points() {
        return Ok(None);
    }
    if a.points() > bound {
        return Err(Error::CarrierTooLarge { size: a.points(), bound });
    }
    let signature = |act: &PartialAct<'_>, x| (act.acting_on(x), act.stabilizer(x), act.orbit(x).len());
    let sig_a: Vec<_> = (0..a.points()).map(|x| signature(a, x)).collect();
    let sig_b: Vec<_> = (0..b.points()).map(|y| signature(b, y)).collect();

    fn assign(
        a: &PartialAct<'_>,
        b: &PartialAct<'_>,
        map: &mut [Option<PointId>],
        used: &mut [bool],
        x: PointId,
        y: PointId,
    ) -> bool {
        let mut queue = VecDeque::from([(x, y)]);
        while let Some((x, y)) = queue.pop_front() {
            match map[x] {
                Some(prev) if prev == y => continue,
                Some(_) => return false,
                None if used[y] => return false,
                None => {
                    map[x] = Some(y);
                    used[y] = true;
                }
            }
            for s in a.semigroup().elements() {
                match (a.act(s, x), b.act(s, y)) {
                    (Some(sx), Some(sy)) => queue.push_back((sx, sy)),
                    (None, None) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    fn search(
        a: &PartialAct<'_>,
        b: &PartialAct<'_>,
        sig_a: &[(ElementSet, ElementSet, usize)],
        sig_b: &[(ElementSet, ElementSet, usize)],
        map: Vec<Option<PointId>>,
        used: Vec<bool>,
    ) -> Option<Vec<PointId>> {
        let Some(x) = map.iter().position(Option::is_none) else {
            return Some(map.into_iter().map(Option::unwrap).collect());
        };
        for y in (0..b.points()).filter(|&y| !used[y] && sig_a[x] == sig_b[y]) {
            let (mut map, mut used) = (map.clone(), used.clone());
            if assign(a, b, &mut map, &mut used, x, y) {
                if let Some(found) = search(a, b, sig_a, sig_b, map, used) {
                    return Some(found);
                }
            }
        }
        None
    }

    let found = search(a, b, &sig_a, &sig_b, vec![None; a.points()], vec![false; b.points()]);
    if let Some(f) = &found {
        if !is_s_map(a, b, f) {
            return Err(Error::Inconsistent("isomorphism search produced a non S-map".into()));
        }
    }
    Ok(found)
}

/// A locally free graded act `Y` with a surjective S-map onto `X`.
#[derive(Debug, Clone)]
pub struct Cover<'a> {
    pub act: PartialAct<'a>,
    /// Image in `X` of each point of `Y`.
    pub map: Vec<PointId>,
}

/// `Y` is the disjoint union over `x` of the Wagner-Preston orbits
/// `Sp(x)`, mapped onto `X` by `tp(x) ↦ tx`.
pub fn locally_free_cover<'a>(x_act: &PartialAct<'a>) -> Result<Cover<'a>> {
    let s = x_act.semigroup();
    let p = match x_act.grading()? {
        GradingOutcome::Graded(p) => p,
        _ => return Err(Error::PreconditionFailed("act is not graded".into())),
    };
    let wp = wagner_preston(s, None)?;
    let mut offsets = Vec::with_capacity(x_act.points());
    let mut blocks = Vec::with_capacity(x_act.points());
    let mut total = 0;
    for x in 0..x_act.points() {
        let orbit = wp.orbit(p.degree(x));
        offsets.push(total);
        total += orbit.len();
        blocks.push(orbit);
    }
    let mut table = vec![None; s.order() * total];
    let mut map = vec![None; total];
    let mut labels = vec![String::new(); total];
    for (x, orbit) in blocks.iter().enumerate() {
        let local = |y: PointId| orbit.iter().position(|&z| z == y).map(|i| offsets[x] + i);
        for (i, &y) in orbit.iter().enumerate() {
            labels[offsets[x] + i] = format!("{}@{}", wp.label(y), x_act.label(x));
            for a in s.elements() {
                if let Some(ay) = wp.act(a, y) {
                    table[a * total + offsets[x] + i] = local(ay);
                }
            }
        }
        for a in s.elements() {
            let Some(y) = wp.act(a, p.degree(x)) else { continue };
            let image = x_act.act(a, x).ok_or_else(|| {
                Error::Inconsistent(format!("{a} acts on p({x}) but not on {x}"))
            })?;
            let slot = &mut map[local(y).expect("orbit is closed")];
            match *slot {
                Some(prev) if prev != image => {
                    return Err(Error::WellDefinednessViolation { s: a, x });
                }
                _ => *slot = Some(image),
            }
        }
    }
    let map: Vec<PointId> = map
        .into_iter()
        .map(|m| m.ok_or_else(|| Error::Inconsistent("cover point with no image".into())))
        .collect::<Result<_>>()?;
    let act = PartialAct::from_parts(s, total, table, labels, None)?;
    if !is_s_map(&act, x_act, &map) {
        return Err(Error::Inconsistent("cover map is not an S-map".into()));
    }
    if (0..x_act.points()).any(|x| !map.contains(&x)) {
        return Err(Error::Inconsistent("cover map is not onto".into()));
    }
    Ok(Cover { act, map })
}
