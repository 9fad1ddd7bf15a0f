//! Small categories as composition tables, and group actions on them.

use std::fmt::Write as _;

use crate::construction::fixtures::fixture_by_name;
use crate::error::{Error, Result};
use crate::semigroup::{ElementId, FiniteSemigroup};

pub type ObjectId = usize;
pub type MorphismId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: ObjectId,
    pub target: ObjectId,
    pub label: String,
}

/// A finite category; `p + q` is defined iff `target(p) = source(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: usize,
    morphisms: Vec<Morphism>,
    compose: Vec<Option<MorphismId>>,
    identities: Vec<MorphismId>,
    locally_idempotent: bool,
    strongly_connected: bool,
}

impl FiniteCategory {
    /// `composition` lists every composable pair as `(p, q, p + q)`.
    pub fn build(
        objects: usize,
        morphisms: Vec<Morphism>,
        composition: &[(MorphismId, MorphismId, MorphismId)],
    ) -> Result<Self> {
        let m = morphisms.len();
        let bad = |msg: String| Error::BadComposability(msg);
        if let Some((i, p)) = morphisms.iter().enumerate().find(|(_, p)| p.source >= objects || p.target >= objects) {
            return Err(bad(format!("morphism {i} has endpoints {} -> {} outside {objects} objects", p.source, p.target)));
        }
        let mut compose = vec![None; m * m];
        for &(p, q, r) in composition {
            if p >= m || q >= m || r >= m {
                return Err(bad(format!("{p} + {q} = {r} names an unknown morphism")));
            }
            if morphisms[p].target != morphisms[q].source {
                return Err(bad(format!("{p} + {q} given but {p} does not end where {q} starts")));
            }
            if morphisms[r].source != morphisms[p].source || morphisms[r].target != morphisms[q].target {
                return Err(bad(format!("{p} + {q} = {r} has the wrong endpoints")));
            }
            match compose[p * m + q] {
                Some(prev) if prev != r => return Err(bad(format!("{p} + {q} given twice"))),
                _ => compose[p * m + q] = Some(r),
            }
        }
        for p in 0..m {
            for q in 0..m {
                if morphisms[p].target == morphisms[q].source && compose[p * m + q].is_none() {
                    return Err(bad(format!("{p} + {q} is composable but missing")));
                }
            }
        }
        let c = |p: usize, q: usize| compose[p * m + q];
        for p in 0..m {
            for q in 0..m {
                let Some(pq) = c(p, q) else { continue };
                for r in 0..m {
                    let Some(qr) = c(q, r) else { continue };
                    if c(pq, r) != c(p, qr) {
                        return Err(Error::NotAssociative(p, q, r));
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(objects);
        for u in 0..objects {
            let id = (0..m).find(|&i| {
                morphisms[i].source == u
                    && morphisms[i].target == u
                    && (0..m).all(|p| {
                        (morphisms[p].source != u || c(i, p) == Some(p))
                            && (morphisms[p].target != u || c(p, i) == Some(p))
                    })
            });
            identities.push(id.ok_or(Error::MissingIdentity(u))?);
        }
        let locally_idempotent = (0..m).all(|p| morphisms[p].source != morphisms[p].target || c(p, p) == Some(p));
        let strongly_connected = (0..objects)
            .all(|u| (0..objects).all(|v| morphisms.iter().any(|p| p.source == u && p.target == v)));
        Ok(Self { objects, morphisms, compose, identities, locally_idempotent, strongly_connected })
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, p: MorphismId) -> &Morphism {
        &self.morphisms[p]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    /// `p + q`, defined iff `target(p) = source(q)`.
    pub fn compose(&self, p: MorphismId, q: MorphismId) -> Option<MorphismId> {
        self.compose[p * self.morphisms.len() + q]
    }

    /// `0_u`.
    pub fn identity(&self, u: ObjectId) -> MorphismId {
        self.identities[u]
    }

    /// `mor(u, v)` in id order.
    pub fn hom(&self, u: ObjectId, v: ObjectId) -> Vec<MorphismId> {
        (0..self.morphisms.len())
            .filter(|&p| self.morphisms[p].source == u && self.morphisms[p].target == v)
            .collect()
    }

    /// Every local monoid `mor(u, u)` is a band.
    pub fn is_locally_idempotent(&self) -> bool {
        self.locally_idempotent
    }

    /// Every `mor(u, v)` is non-empty.
    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected
    }

    /// The `(p, q, p + q)` triples, in id order.
    pub fn composition_triples(&self) -> Vec<(MorphismId, MorphismId, MorphismId)> {
        let m = self.morphisms.len();
        (0..m)
            .flat_map(|p| (0..m).map(move |q| (p, q)))
            .filter_map(|(p, q)| self.compose(p, q).map(|r| (p, q, r)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ActionProperties {
    pub transitive: bool,
    pub free: bool,
}

/// A group acting on the objects and morphisms of a category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCategoryAction {
    group: FiniteSemigroup,
    objects: usize,
    morphisms: usize,
    on_objects: Vec<ObjectId>,
    on_morphisms: Vec<MorphismId>,
    properties: ActionProperties,
}

impl GroupCategoryAction {
    /// Row `g` of `on_objects` (resp. `on_morphisms`) lists the images
    /// of every object (resp. morphism) under `g`.
    pub fn new(
        category: &FiniteCategory,
        group: FiniteSemigroup,
        on_objects: Vec<Vec<ObjectId>>,
        on_morphisms: Vec<Vec<MorphismId>>,
    ) -> Result<Self> {
        if !group.is_group() {
            return Err(Error::NotGroup);
        }
        let (n, m) = (category.objects(), category.morphism_count());
        let shape = |rows: &[Vec<usize>], width: usize| {
            rows.len() == group.order() && rows.iter().all(|r| r.len() == width && r.iter().all(|&x| x < width))
        };
        if !shape(&on_objects, n) || !shape(&on_morphisms, m) {
            return Err(Error::ActionAxiomViolation("action tables have the wrong shape".into()));
        }
        let action = Self {
            objects: n,
            morphisms: m,
            on_objects: on_objects.concat(),
            on_morphisms: on_morphisms.concat(),
            properties: ActionProperties { transitive: false, free: false },
            group,
        };
        let properties = validate_group_action(category, &action)?;
        Ok(Self { properties, ..action })
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn act_object(&self, g: ElementId, u: ObjectId) -> ObjectId {
        self.on_objects[g * self.objects + u]
    }

    pub fn act_morphism(&self, g: ElementId, p: MorphismId) -> MorphismId {
        self.on_morphisms[g * self.morphisms + p]
    }

    pub fn properties(&self) -> ActionProperties {
        self.properties
    }

    fn identity(&self) -> ElementId {
        self.group.identity().expect("groups are monoids")
    }
}

/// Checks the group-action laws on objects and morphisms and the three
/// compatibility laws with the category, then reports transitivity and
/// freeness on objects.
pub fn validate_group_action(category: &FiniteCategory, action: &GroupCategoryAction) -> Result<ActionProperties> {
    let g = &action.group;
    let violation = |msg: String| Err(Error::ActionAxiomViolation(msg));
    let one = action.identity();
    let (n, m) = (category.objects(), category.morphism_count());
    for u in 0..n {
        if action.act_object(one, u) != u {
            return violation(format!("1 moves object {u}"));
        }
    }
    for p in 0..m {
        if action.act_morphism(one, p) != p {
            return violation(format!("1 moves morphism {p}"));
        }
    }
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for u in 0..n {
                if action.act_object(ab, u) != action.act_object(a, action.act_object(b, u)) {
                    return violation(format!("({a}{b}){u} != {a}({b}{u}) on objects"));
                }
            }
            for p in 0..m {
                if action.act_morphism(ab, p) != action.act_morphism(a, action.act_morphism(b, p)) {
                    return violation(format!("({a}{b}){p} != {a}({b}{p}) on morphisms"));
                }
            }
        }
    }
    for a in g.elements() {
        for p in 0..m {
            let (mp, gp) = (category.morphism(p), category.morphism(action.act_morphism(a, p)));
            if gp.source != action.act_object(a, mp.source) || gp.target != action.act_object(a, mp.target) {
                return violation(format!("{a}·{p} is not in mor({a}u, {a}v)"));
            }
        }
        for (p, q, r) in category.composition_triples() {
            let lhs = action.act_morphism(a, r);
            let rhs = category.compose(action.act_morphism(a, p), action.act_morphism(a, q));
            if rhs != Some(lhs) {
                return violation(format!("{a}({p}+{q}) != {a}{p}+{a}{q}"));
            }
        }
        for u in 0..n {
            if action.act_morphism(a, category.identity(u)) != category.identity(action.act_object(a, u)) {
                return violation(format!("{a}·0_{u} is not 0_{a}{u}"));
            }
        }
    }
    let transitive = (0..n).all(|u| (0..n).all(|v| g.elements().any(|a| action.act_object(a, u) == v)));
    let free = (0..n).all(|u| g.elements().all(|a| a == one || action.act_object(a, u) != u));
    Ok(ActionProperties { transitive, free })
}

/// A category with a group action and chosen base object, as read from
/// the text format.
#[derive(Debug, Clone)]
pub struct CategoryWithAction {
    pub group_name: String,
    pub category: FiniteCategory,
    pub action: GroupCategoryAction,
    pub base: ObjectId,
}

/// Parses the category text format:
///
/// ```text
/// group: Z2
/// objects: 2
/// morphisms:
/// 0 0 0 id0
/// compose:
/// 0 0 0
/// action:
/// 1 obj 0 -> 1
/// 1 mor 0 -> 3
/// base: 0
/// ```
///
/// Unlisted action entries default to fixed points; `→` may replace `->`.
pub fn parse_category_text(text: &str) -> Result<CategoryWithAction> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Morphisms,
        Compose,
        Action,
    }
    let err = |line: usize, message: String| Error::Parse { line, message };
    let num = |line: usize, tok: &str| tok.parse::<usize>().map_err(|_| err(line, format!("expected a number, got {tok:?}")));

    let mut group_name = None;
    let mut objects = None;
    let mut base = 0;
    let mut morphisms: Vec<Morphism> = Vec::new();
    let mut compose = Vec::new();
    let mut obj_moves = Vec::new();
    let mut mor_moves = Vec::new();
    let mut section = Section::None;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim().replace('→', " -> ");
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            section = Section::None;
            match key.trim() {
                "group" => group_name = Some(value.to_string()),
                "objects" => objects = Some(num(line_no, value)?),
                "base" => base = num(line_no, value)?,
                "morphisms" => section = Section::Morphisms,
                "compose" => section = Section::Compose,
                "action" => section = Section::Action,
                other => return Err(err(line_no, format!("unknown section {other:?}"))),
            }
            if !value.is_empty() && section != Section::None {
                return Err(err(line_no, "section header takes no value".into()));
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match section {
            Section::Morphisms => {
                if toks.len() < 3 {
                    return Err(err(line_no, "expected `id src dst [label]`".into()));
                }
                let id = num(line_no, toks[0])?;
                if id != morphisms.len() {
                    return Err(err(line_no, format!("morphism ids must be consecutive, expected {}", morphisms.len())));
                }
                let (source, target) = (num(line_no, toks[1])?, num(line_no, toks[2])?);
                let label = if toks.len() > 3 { toks[3..].join(" ") } else { id.to_string() };
                morphisms.push(Morphism { source, target, label });
            }
            Section::Compose => {
                let [p, q, r] = toks[..] else {
                    return Err(err(line_no, "expected `p q r`".into()));
                };
                compose.push((num(line_no, p)?, num(line_no, q)?, num(line_no, r)?));
            }
            Section::Action => {
                let [g, kind, x, "->", y] = toks[..] else {
                    return Err(err(line_no, "expected `g obj|mor x -> y`".into()));
                };
                let entry = (line_no, num(line_no, g)?, num(line_no, x)?, num(line_no, y)?);
                match kind {
                    "obj" => obj_moves.push(entry),
                    "mor" => mor_moves.push(entry),
                    other => return Err(err(line_no, format!("expected obj or mor, got {other:?}"))),
                }
            }
            Section::None => return Err(err(line_no, format!("content outside a section: {line:?}"))),
        }
    }
    let group_name = group_name.ok_or_else(|| err(1, "missing `group:`".into()))?;
    let objects = objects.ok_or_else(|| err(1, "missing `objects:`".into()))?;
    let group = fixture_by_name(&group_name)?;
    let category = FiniteCategory::build(objects, morphisms, &compose)?;
    if base >= objects {
        return Err(Error::PreconditionFailed(format!("base object {base} does not exist")));
    }
    let mut on_objects: Vec<Vec<usize>> = vec![(0..objects).collect(); group.order()];
    let mut on_morphisms: Vec<Vec<usize>> = vec![(0..category.morphism_count()).collect(); group.order()];
    for (rows, moves, width) in [
        (&mut on_objects, &obj_moves, objects),
        (&mut on_morphisms, &mor_moves, category.morphism_count()),
    ] {
        for &(line_no, g, x, y) in moves {
            if g >= group.order() || x >= width || y >= width {
                return Err(err(line_no, "action entry out of range".into()));
            }
            rows[g][x] = y;
        }
    }
    let action = GroupCategoryAction::new(&category, group, on_objects, on_morphisms)?;
    Ok(CategoryWithAction { group_name, category, action, base })
}

/// Writes the format read by [`parse_category_text`], listing only
/// action entries that move something.
pub fn to_category_text(group_name: &str, category: &FiniteCategory, action: &GroupCategoryAction, base: ObjectId) -> String {
    let mut out = String::new();
    writeln!(out, "group: {group_name}").unwrap();
    writeln!(out, "objects: {}", category.objects()).unwrap();
    out.push_str("morphisms:\n");
    for (i, p) in category.morphisms().iter().enumerate() {
        writeln!(out, "{i} {} {} {}", p.source, p.target, p.label).unwrap();
    }
    out.push_str("compose:\n");
    for (p, q, r) in category.composition_triples() {
        writeln!(out, "{p} {q} {r}").unwrap();
    }
    out.push_str("action:\n");
    for g in action.group().elements() {
        for u in 0..category.objects() {
            let v = action.act_object(g, u);
            if v != u {
                writeln!(out, "{g} obj {u} -> {v}").unwrap();
            }
        }
        for p in 0..category.morphism_count() {
            let q = action.act_morphism(g, p);
            if q != p {
                writeln!(out, "{g} mor {p} -> {q}").unwrap();
            }
        }
    }
    writeln!(out, "base: {base}").unwrap();
    out
}
