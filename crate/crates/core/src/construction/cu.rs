//! The monoid `C_u` of a group acting on a category, and the categories it
//! is usually built from.

use crate::construction::category::{FiniteCategory, GroupCategoryAction, Morphism, MorphismId, ObjectId};
use crate::error::{Error, Result};
use crate::semigroup::{find_isomorphism, is_homomorphism, ElementId, FiniteSemigroup};

/// Largest local band size accepted by [`adjoin_band_category`].
pub const MAX_BAND: usize = 8;

/// `C_u = {(p, g) : p ∈ mor(u, gu)}` with `(p,g)(q,h) = (p + gq, gh)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuMonoid {
    base: ObjectId,
    pairs: Vec<(MorphismId, ElementId)>,
    semigroup: FiniteSemigroup,
}

impl CuMonoid {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn into_semigroup(self) -> FiniteSemigroup {
        self.semigroup
    }

    pub fn base(&self) -> ObjectId {
        self.base
    }

    /// Element `i` is the pair `pairs()[i]`.
    pub fn pairs(&self) -> &[(MorphismId, ElementId)] {
        &self.pairs
    }

    pub fn index_of(&self, p: MorphismId, g: ElementId) -> Option<ElementId> {
        self.pairs.iter().position(|&pair| pair == (p, g))
    }
}

pub fn c_u_monoid(category: &FiniteCategory, action: &GroupCategoryAction, u: ObjectId) -> Result<CuMonoid> {
    let failed = |what: &str| Err(Error::PreconditionFailed(what.into()));
    if u >= category.objects() {
        return failed("base object does not exist");
    }
    if !category.is_strongly_connected() {
        return failed("category is not strongly connected");
    }
    if !category.is_locally_idempotent() {
        return failed("category is not locally idempotent");
    }
    let props = action.properties();
    if !props.transitive {
        return failed("group action is not transitive");
    }
    if !props.free {
        return failed("group action is not free");
    }
    let group = action.group();
    let one = group.identity().ok_or(Error::NotGroup)?;
    let pairs: Vec<(MorphismId, ElementId)> = group
        .elements()
        .flat_map(|g| category.hom(u, action.act_object(g, u)).into_iter().map(move |p| (p, g)))
        .collect();
    let index = |pair: (MorphismId, ElementId)| pairs.iter().position(|&x| x == pair);
    let mut table = vec![vec![0; pairs.len()]; pairs.len()];
    for (i, &(p, g)) in pairs.iter().enumerate() {
        for (j, &(q, h)) in pairs.iter().enumerate() {
            let sum = category
                .compose(p, action.act_morphism(g, q))
                .ok_or_else(|| Error::Inconsistent(format!("{p} + {g}·{q} is not composable")))?;
            table[i][j] = index((sum, group.mul(g, h)))
                .ok_or_else(|| Error::Inconsistent(format!("({sum}, {g}{h}) is not in C_u")))?;
        }
    }
    let identity = index((category.identity(u), one)).expect("(0_u, 1) is in C_u");
    let labels = pairs
        .iter()
        .map(|&(p, g)| format!("({},{})", category.morphism(p).label, group.label(g)))
        .collect();
    let semigroup = FiniteSemigroup::new(table, Some(identity))?.with_labels(labels);

    if !semigroup.is_e_unitary() || !semigroup.is_e_dense() {
        return Err(Error::Inconsistent("C_u is not E-unitary dense".into()));
    }
    let expected_e: crate::semigroup::ElementSet =
        pairs.iter().enumerate().filter(|(_, &(_, g))| g == one).map(|(i, _)| i).collect();
    if semigroup.idempotents() != expected_e {
        return Err(Error::Inconsistent("idempotents of C_u are not the pairs (p, 1)".into()));
    }
    let thin = group.elements().all(|g| category.hom(u, action.act_object(g, u)).len() == 1);
    if semigroup.is_group() != thin {
        return Err(Error::Inconsistent("C_u is a group but some mor(u, gu) is not a singleton".into()));
    }
    Ok(CuMonoid { base: u, pairs, semigroup })
}

fn require_group(g: &FiniteSemigroup) -> Result<ElementId> {
    if !g.is_group() {
        return Err(Error::NotGroup);
    }
    g.identity().ok_or(Error::NotGroup)
}

fn inverse(g: &FiniteSemigroup, one: ElementId, a: ElementId) -> ElementId {
    g.elements().find(|&b| g.mul(a, b) == one).expect("group elements are invertible")
}

/// Local band `{0, 1, .., k-1}` composed in diagrammatic order: `0` is the
/// identity and the rest is right-zero.
fn band(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        b
    }
}

/// Objects are `G`; morphisms `e^b + (u, s, su)` indexed by `(u, s, b)`;
/// `b = 0` is the plain morphism. `k = 1` is the derived category.
fn banded_category(g: &FiniteSemigroup, k: usize) -> Result<(FiniteCategory, GroupCategoryAction)> {
    let one = require_group(g)?;
    let n = g.order();
    let id = |u: usize, s: usize, b: usize| (u * n + s) * k + b;
    let mut morphisms = Vec::with_capacity(n * n * k);
    for u in 0..n {
        for s in 0..n {
            let v = g.mul(s, u);
            let plain = format!("({},{},{})", g.label(u), g.label(s), g.label(v));
            for b in 0..k {
                let label = match (b, k) {
                    (0, _) => plain.clone(),
                    (_, 2) => format!("e_{}+{plain}", g.label(u)),
                    _ => format!("e{b}_{}+{plain}", g.label(u)),
                };
                morphisms.push(Morphism { source: u, target: v, label });
            }
        }
    }
    let mut composition = Vec::new();
    for u in 0..n {
        for s in 0..n {
            let v = g.mul(s, u);
            for t in 0..n {
                for a in 0..k {
                    for b in 0..k {
                        composition.push((id(u, s, a), id(v, t, b), id(u, g.mul(t, s), band(a, b))));
                    }
                }
            }
        }
    }
    let category = FiniteCategory::build(n, morphisms, &composition)?;
    let on_objects: Vec<Vec<usize>> = g.elements().map(|a| (0..n).map(|u| g.mul(a, u)).collect()).collect();
    let on_morphisms: Vec<Vec<usize>> = g
        .elements()
        .map(|a| {
            let a_inv = inverse(g, one, a);
            (0..n)
                .flat_map(|u| (0..n).flat_map(move |s| (0..k).map(move |b| (u, s, b))))
                .map(|(u, s, b)| id(g.mul(a, u), g.product(&[a, s, a_inv]), b))
                .collect()
        })
        .collect();
    let action = GroupCategoryAction::new(&category, g.clone(), on_objects, on_morphisms)?;
    Ok((category, action))
}

/// `mor(u, v) = {(u, s, v) : v = su}` with `(u,s,v) + (v,t,w) = (u,ts,w)`
/// and `g(u,s,v) = (gu, gsg⁻¹, gv)`.
pub fn derived_category(g: &FiniteSemigroup) -> Result<(FiniteCategory, GroupCategoryAction)> {
    let (category, action) = banded_category(g, 1)?;
    for p in 0..category.morphism_count() {
        let m = category.morphism(p);
        let back = category.hom(m.target, m.source);
        let invertible = back.iter().any(|&q| {
            category.compose(p, q) == Some(category.identity(m.source))
                && category.compose(q, p) == Some(category.identity(m.target))
        });
        if !invertible {
            return Err(Error::Inconsistent(format!("morphism {p} of the derived category is not invertible")));
        }
    }
    Ok((category, action))
}

/// The derived category with each `mor(u, u)` enlarged to a band of size
/// `k`, subject to `(u,g,gu) + e_{gu} = e_u + (u,g,gu)` and `g e_u = e_{gu}`.
///
/// For `k = 2` the band is `{0_u, e_u}`; larger `k` uses
/// `{0_u, e_u^1, .., e_u^(k-1)}` with `e^i + e^j = e^j`.
pub fn adjoin_band_category(g: &FiniteSemigroup, k: usize) -> Result<(FiniteCategory, GroupCategoryAction)> {
    if !(2..=MAX_BAND).contains(&k) {
        return Err(Error::UnsupportedBand(k));
    }
    let one = require_group(g)?;
    let (category, action) = banded_category(g, k)?;
    let n = g.order();
    let id = |u: usize, s: usize, b: usize| (u * n + s) * k + b;
    for u in 0..n {
        for s in 0..n {
            let v = g.mul(s, u);
            let (plain, s_inv) = (id(u, s, 0), inverse(g, one, s));
            if category.hom(u, v).len() != k {
                return Err(Error::Inconsistent(format!("|mor({u},{v})| != {k}")));
            }
            for b in 1..k {
                let (e_u, e_v) = (id(u, one, b), id(v, one, b));
                if category.compose(plain, e_v) != category.compose(e_u, plain) {
                    return Err(Error::Inconsistent(format!("translation by {s} does not commute with e_{u}")));
                }
                let round_trip = category
                    .compose(plain, e_v)
                    .and_then(|p| category.compose(p, id(v, s_inv, 0)));
                if round_trip == Some(category.identity(u)) {
                    return Err(Error::Inconsistent(format!("conjugate of e_{v} collapses to 0_{u}")));
                }
            }
        }
    }
    Ok((category, action))
}

/// `G ∪̇ eG` with `e² = e` and `eg = ge`; ids `0..n` are `G`, `n..2n` are
/// `eG`.
///
/// Verified isomorphic to `C_1` of [`adjoin_band_category`] with `k = 2`
/// through [`adjoined_band_map`].
pub fn adjoined_band_semigroup(g: &FiniteSemigroup) -> Result<FiniteSemigroup> {
    let one = require_group(g)?;
    let n = g.order();
    let table: Vec<Vec<ElementId>> = (0..2 * n)
        .map(|a| (0..2 * n).map(|b| g.mul(a % n, b % n) + if a >= n || b >= n { n } else { 0 }).collect())
        .collect();
    let labels = (0..n)
        .map(|a| g.label(a))
        .chain((0..n).map(|a| if a == one { "e".to_string() } else { format!("e{}", g.label(a)) }))
        .collect();
    let s = FiniteSemigroup::new(table, Some(one))?.with_labels(labels);

    let (category, action) = adjoin_band_category(g, 2)?;
    let cu = c_u_monoid(&category, &action, one)?;
    let map = adjoined_band_map(g, &cu)?;
    if !is_homomorphism(&s, cu.semigroup(), &map) || find_isomorphism(&s, cu.semigroup()).is_none() {
        return Err(Error::Inconsistent("G ∪ eG is not isomorphic to C_1 under the standard map".into()));
    }
    Ok(s)
}

/// `g ↦ ((1,g,g), g)` and `eg ↦ (e_1 + (1,g,g), g)` into `C_1` of the
/// two-element band category.
pub fn adjoined_band_map(g: &FiniteSemigroup, cu: &CuMonoid) -> Result<Vec<ElementId>> {
    let one = require_group(g)?;
    let n = g.order();
    let id = |u: usize, s: usize, b: usize| (u * n + s) * 2 + b;
    (0..2 * n)
        .map(|a| {
            let (s, b) = (a % n, usize::from(a >= n));
            cu.index_of(id(one, s, b), s)
                .ok_or_else(|| Error::Inconsistent(format!("({one},{s},{s}) with band {b} is not in C_1")))
        })
        .collect()
}
