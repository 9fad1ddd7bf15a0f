//! Cryptosystems from cancellative total acts: decrypt key spaces, the
//! Massey-Omura and ElGamal protocols, modular exponentiation and the
//! classification of locally free systems.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::act::{find_act_isomorphism_within, PartialAct, TotalAct};
use crate::closure::{omega_h, omega_m};
use crate::coset::CosetSpace;
use crate::error::{Error, PointId, Result};
use crate::semigroup::{ElementId, ElementSet, FiniteSemigroup};

/// Largest carrier for which the locally-cyclic subact scan runs.
pub const SUBACT_SCAN_LIMIT: usize = 16;

/// Largest prime accepted by [`modexp_system`].
pub const MAX_PRIME: u64 = 257;

/// `K(s, x) = {t : (ts)x = x}`.
pub fn key_space(s: &FiniteSemigroup, act: &TotalAct, key: ElementId, x: PointId) -> ElementSet {
    s.elements().filter(|&t| act.act(s.mul(t, key), x) == x).collect()
}

/// Keys that decrypt `key` at every point: the intersection of all `K(key, x)`.
pub fn uniform_decrypt_keys(s: &FiniteSemigroup, act: &TotalAct, key: ElementId) -> ElementSet {
    s.elements()
        .filter(|&t| (0..act.points()).all(|x| act.act(s.mul(t, key), x) == x))
        .collect()
}

/// Least uniform decrypt key.
pub fn decrypt_key(s: &FiniteSemigroup, act: &TotalAct, key: ElementId) -> Result<ElementId> {
    uniform_decrypt_keys(s, act, key).first().ok_or(Error::NoDecryptKey(key))
}

/// A cancellative total act `X` with cipher key `s`; encryption is `x ↦ sx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cryptosystem {
    semigroup: FiniteSemigroup,
    act: TotalAct,
    key: ElementId,
}

impl Cryptosystem {
    pub fn new(semigroup: FiniteSemigroup, act: TotalAct, key: ElementId) -> Result<Self> {
        semigroup.check_element(key)?;
        let cancellative = act.cancellative_witness();
        let e_dense = act.to_partial(&semigroup);
        if cancellative.is_none() != e_dense.is_ok() {
            return Err(Error::Inconsistent(
                "cancellativity disagrees with being an E-dense act with full domains".into(),
            ));
        }
        if let Some((s, x, y)) = cancellative {
            return Err(Error::NotCancellative(s, x, y));
        }
        Ok(Self { semigroup, act, key })
    }

    /// Builds and validates the total act from its table, then the system.
    pub fn build(semigroup: FiniteSemigroup, table: Vec<Vec<PointId>>, key: ElementId) -> Result<Self> {
        let act = TotalAct::new(&semigroup, table)?;
        Self::new(semigroup, act, key)
    }

    pub fn with_key(&self, key: ElementId) -> Result<Self> {
        self.semigroup.check_element(key)?;
        Ok(Self { key, ..self.clone() })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn act(&self) -> &TotalAct {
        &self.act
    }

    pub fn key(&self) -> ElementId {
        self.key
    }

    pub fn points(&self) -> usize {
        self.act.points()
    }

    pub fn encrypt(&self, x: PointId) -> PointId {
        self.act.act(self.key, x)
    }

    /// `K(s, x)` for the cipher key `s`.
    pub fn decrypt_key_space(&self, x: PointId) -> Result<ElementSet> {
        self.check_point(x)?;
        Ok(key_space(&self.semigroup, &self.act, self.key, x))
    }

    pub fn decrypt_key(&self) -> Result<ElementId> {
        decrypt_key(&self.semigroup, &self.act, self.key)
    }

    /// The same act viewed as an E-dense partial act with full domains.
    pub fn partial(&self) -> PartialAct<'_> {
        self.act.to_partial(&self.semigroup).expect("validated at construction")
    }

    fn check_point(&self, x: PointId) -> Result<()> {
        if x >= self.points() {
            return Err(Error::PointOutOfRange { point: x, size: self.points() });
        }
        Ok(())
    }
}

/// The four characterisations of a cancellative act over an E-dense `S`:
/// cancellative, `E ⊆ S_x`, `Eω̂ ⊆ S_x`, `s's ∈ S_x` for `s' ∈ L(s)`.
pub fn cancellative_characterisations(s: &FiniteSemigroup, act: &TotalAct) -> [bool; 4] {
    let e = s.idempotents();
    let e_hat = omega_h(s, &e);
    let points = 0..act.points();
    [
        act.is_cancellative(),
        points.clone().all(|x| e.is_subset(&act.stabilizer(x))),
        points.clone().all(|x| e_hat.is_subset(&act.stabilizer(x))),
        points.clone().all(|x| {
            let stab = act.stabilizer(x);
            s.elements().all(|a| s.left_pre_inverses(a).iter().all(|l| stab.contains(s.mul(l, a))))
        }),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub name: String,
    pub applicable: bool,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeySpaceReport {
    pub key: ElementId,
    pub point: PointId,
    pub key_space: ElementSet,
    pub checks: Vec<TheoremCheck>,
}

impl KeySpaceReport {
    /// Every applicable check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.applicable || c.pass)
    }
}

/// Evaluates the structure theorem for `K(s, x)`: `ωₘ`-closed, contains
/// `(S_x W(s) S_sx)ωₘ`, equals `(S_x W(s) S_sx)ω̂` for band `E`, equals
/// `(S_x s⁻¹)ω̂` for inverse `S`, and equals `S_x s⁻¹` for groups.
pub fn verify_key_space_theorem(sys: &Cryptosystem, x: PointId) -> Result<KeySpaceReport> {
    let (s, act, key) = (sys.semigroup(), sys.act(), sys.key());
    let k = sys.decrypt_key_space(x)?;
    let (stab_x, stab_sx) = (act.stabilizer(x), act.stabilizer(act.act(key, x)));
    let core = s.product_set(&s.product_set(&stab_x, &s.weak_inverses(key)), &stab_sx);
    let check = |name: &str, applicable: bool, pass: bool, detail: String| TheoremCheck {
        name: name.into(),
        applicable,
        pass: applicable && pass,
        detail,
    };
    let mut checks = Vec::new();
    let closed_m = omega_m(s, &k);
    checks.push(check("omega_m-closed", true, closed_m == k, format!("K={k} Kωₘ={closed_m}")));
    let lower = omega_m(s, &core);
    checks.push(check("contains closure of S_x W(s) S_sx", true, lower.is_subset(&k), format!("{lower} ⊆ {k}")));
    let band = s.classify_idempotents().is_band;
    let hat = omega_h(s, &core);
    checks.push(check("band: equals omega_h closure", band, hat == k, format!("{hat} = {k}")));
    let inverse = s.is_inverse_semigroup();
    let detail = if inverse {
        let inv = s.inverses(key).first().expect("inverse semigroups have inverses");
        let via = omega_h(s, &s.product_set(&stab_x, &ElementSet::singleton(inv)));
        (via == k, format!("(S_x {inv})ω̂ = {via}"))
    } else {
        (false, "not an inverse semigroup".into())
    };
    checks.push(check("inverse: equals (S_x s^-1) omega_h", inverse, detail.0, detail.1));
    let group = s.is_group();
    let detail = if group {
        let inv = s.inverses(key).first().expect("groups have inverses");
        let coset = s.product_set(&stab_x, &ElementSet::singleton(inv));
        (coset == k && k.len() == stab_x.len(), format!("S_x {inv} = {coset}, |S_x| = {}", stab_x.len()))
    } else {
        (false, "not a group".into())
    };
    checks.push(check("group: equals S_x s^-1 with |K| = |S_x|", group, detail.0, detail.1));
    Ok(KeySpaceReport { key, point: x, key_space: k, checks })
}

/// `K(s, x)` for a locally free act over an E-unitary dense `S` with
/// semilattice `E`, checked against `W(s)ω̂` and `L(s)`.
pub fn locally_free_key_space(sys: &Cryptosystem, x: PointId) -> Result<ElementSet> {
    let s = sys.semigroup();
    let failed = |what: &str| Err(Error::PreconditionFailed(what.into()));
    if !s.has_semilattice_idempotents() {
        return failed("idempotents do not form a semilattice");
    }
    if !s.is_e_unitary() {
        return failed("semigroup is not E-unitary");
    }
    if !sys.partial().is_locally_free() {
        return failed("act is not locally free");
    }
    let k = sys.decrypt_key_space(x)?;
    let hat = omega_h(s, &s.weak_inverses(sys.key()));
    if k != hat || k != s.left_pre_inverses(sys.key()) {
        return Err(Error::Inconsistent(format!("K = {k} but W(s)ω̂ = {hat}")));
    }
    Ok(k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Alice,
    Bob,
}

impl std::fmt::Display for Party {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Party::Alice => "alice",
            Party::Bob => "bob",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueKind {
    Element,
    Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub party: Party,
    pub kind: String,
    pub value: usize,
    pub value_kind: ValueKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolTranscript {
    pub protocol: String,
    pub plaintext: PointId,
    pub messages: Vec<Message>,
    pub recovered: PointId,
}

impl ProtocolTranscript {
    pub fn succeeded(&self) -> bool {
        self.recovered == self.plaintext
    }

    /// Values of the point-valued messages, in order.
    pub fn point_values(&self) -> Vec<PointId> {
        self.messages.iter().filter(|m| m.value_kind == ValueKind::Point).map(|m| m.value).collect()
    }

    /// One `party: kind = value` line per message, values as ids.
    pub fn render(&self) -> String {
        self.render_with(|e| e.to_string(), |x| x.to_string())
    }

    /// As [`render`](Self::render) with custom value names.
    pub fn render_with(&self, element: impl Fn(ElementId) -> String, point: impl Fn(PointId) -> String) -> String {
        let mut out = String::new();
        for m in &self.messages {
            let value = match m.value_kind {
                ValueKind::Element => element(m.value),
                ValueKind::Point => point(m.value),
            };
            writeln!(out, "{}: {} = {value}", m.party, m.kind).unwrap();
        }
        out
    }
}

fn message(party: Party, kind: &str, value: usize, value_kind: ValueKind) -> Message {
    Message { party, kind: kind.into(), value, value_kind }
}

fn check_inputs(s: &FiniteSemigroup, points: usize, x: PointId, keys: &[ElementId]) -> Result<()> {
    if x >= points {
        return Err(Error::PointOutOfRange { point: x, size: points });
    }
    keys.iter().try_for_each(|&k| s.check_element(k))
}

/// Massey-Omura over a commutative `S`: Alice sends `sx`, Bob returns
/// `t(sx)`, Alice strips `s` to send `tx`, Bob strips `t`.
pub fn massey_omura(
    s: &FiniteSemigroup,
    act: &TotalAct,
    x: PointId,
    alice: ElementId,
    bob: ElementId,
) -> Result<ProtocolTranscript> {
    check_inputs(s, act.points(), x, &[alice, bob])?;
    if !s.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let (alice_inv, bob_inv) = (decrypt_key(s, act, alice)?, decrypt_key(s, act, bob)?);
    let sx = act.act(alice, x);
    let tsx = act.act(bob, sx);
    let tx = act.act(alice_inv, tsx);
    let recovered = act.act(bob_inv, tx);
    Ok(ProtocolTranscript {
        protocol: "massey-omura".into(),
        plaintext: x,
        messages: vec![
            message(Party::Alice, "sx", sx, ValueKind::Point),
            message(Party::Bob, "t(sx)", tsx, ValueKind::Point),
            message(Party::Alice, "tx", tx, ValueKind::Point),
            message(Party::Bob, "x", recovered, ValueKind::Point),
        ],
        recovered,
    })
}

/// An `(S, S)`-biact: a left and a right action with `(sx)t = s(xt)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiactTable {
    left: TotalAct,
    right: Vec<PointId>,
    order: usize,
}

impl BiactTable {
    /// Row `x` of `right` lists `x·0 .. x·(n-1)`.
    pub fn new(s: &FiniteSemigroup, left: TotalAct, right: Vec<Vec<PointId>>) -> Result<Self> {
        let m = left.points();
        if right.len() != m || right.iter().any(|r| r.len() != s.order()) {
            return Err(Error::ActionShape { rows: right.len(), order: m });
        }
        if let Some(&y) = right.iter().flatten().find(|&&y| y >= m) {
            return Err(Error::PointOutOfRange { point: y, size: m });
        }
        let biact = Self { left, right: right.concat(), order: s.order() };
        for x in 0..m {
            for a in s.elements() {
                for b in s.elements() {
                    if biact.act_right(biact.act_right(x, a), b) != biact.act_right(x, s.mul(a, b)) {
                        return Err(Error::NotAssociativeAction(a, b, x));
                    }
                    if biact.act_right(biact.left.act(a, x), b) != biact.left.act(a, biact.act_right(x, b)) {
                        return Err(Error::PreconditionFailed(format!("({a}x)·{b} != {a}(x·{b}) at x = {x}")));
                    }
                }
            }
        }
        if let Some((a, x, y)) = biact.left.cancellative_witness() {
            return Err(Error::NotCancellative(a, x, y));
        }
        for a in s.elements() {
            for x in 0..m {
                for y in x + 1..m {
                    if biact.act_right(x, a) == biact.act_right(y, a) {
                        return Err(Error::NotCancellative(a, x, y));
                    }
                }
            }
        }
        Ok(biact)
    }

    /// `S` on itself by left and right multiplication.
    pub fn regular(s: &FiniteSemigroup) -> Result<Self> {
        Self::new(s, TotalAct::left_regular(s), s.rows())
    }

    pub fn left(&self) -> &TotalAct {
        &self.left
    }

    pub fn act_right(&self, x: PointId, a: ElementId) -> PointId {
        self.right[x * self.order + a]
    }

    /// Least `u` with `x(tu) = x` for every `x`.
    pub fn right_decrypt_key(&self, s: &FiniteSemigroup, t: ElementId) -> Result<ElementId> {
        s.elements()
            .find(|&u| (0..self.left.points()).all(|x| self.act_right(x, s.mul(t, u)) == x))
            .ok_or(Error::NoDecryptKey(t))
    }
}

/// Massey-Omura without commutativity: Alice sends `sx`, Bob returns
/// `(sx)t`, Alice strips `s` on the left, Bob strips `t` on the right.
pub fn massey_omura_biact(
    s: &FiniteSemigroup,
    biact: &BiactTable,
    x: PointId,
    alice: ElementId,
    bob: ElementId,
) -> Result<ProtocolTranscript> {
    let left = biact.left();
    check_inputs(s, left.points(), x, &[alice, bob])?;
    let alice_inv = decrypt_key(s, left, alice)?;
    let bob_inv = biact.right_decrypt_key(s, bob)?;
    let sx = left.act(alice, x);
    let sxt = biact.act_right(sx, bob);
    let xt = left.act(alice_inv, sxt);
    let recovered = biact.act_right(xt, bob_inv);
    Ok(ProtocolTranscript {
        protocol: "massey-omura-biact".into(),
        plaintext: x,
        messages: vec![
            message(Party::Alice, "sx", sx, ValueKind::Point),
            message(Party::Bob, "(sx)t", sxt, ValueKind::Point),
            message(Party::Alice, "xt", xt, ValueKind::Point),
            message(Party::Bob, "x", recovered, ValueKind::Point),
        ],
        recovered,
    })
}

/// ElGamal with shared key `s`: Bob publishes `sd`, Alice sends
/// `(c(sd))x` and `cs`, Bob forms `(cs)d` and decrypts.
pub fn elgamal(
    s: &FiniteSemigroup,
    act: &TotalAct,
    x: PointId,
    shared: ElementId,
    alice: ElementId,
    bob: ElementId,
) -> Result<ProtocolTranscript> {
    check_inputs(s, act.points(), x, &[shared, alice, bob])?;
    let sd = s.mul(shared, bob);
    let csd = s.mul(alice, sd);
    let cipher = act.act(csd, x);
    let cs = s.mul(alice, shared);
    let csd_bob = s.mul(cs, bob);
    let recovered = act.act(decrypt_key(s, act, csd_bob)?, cipher);
    Ok(ProtocolTranscript {
        protocol: "elgamal".into(),
        plaintext: x,
        messages: vec![
            message(Party::Bob, "sd", sd, ValueKind::Element),
            message(Party::Alice, "(c(sd))x", cipher, ValueKind::Point),
            message(Party::Alice, "cs", cs, ValueKind::Element),
            message(Party::Bob, "(cs)d", csd_bob, ValueKind::Element),
            message(Party::Bob, "x", recovered, ValueKind::Point),
        ],
        recovered,
    })
}

/// `count` keys drawn uniformly, with replacement, from the elements that
/// have a uniform decrypt key.
pub fn seeded_keys(s: &FiniteSemigroup, act: &TotalAct, seed: u64, count: usize) -> Result<Vec<ElementId>> {
    let usable: Vec<ElementId> = s.elements().filter(|&k| decrypt_key(s, act, k).is_ok()).collect();
    if usable.is_empty() {
        return Err(Error::NoDecryptKey(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| *usable.choose(&mut rng).expect("non-empty")).collect())
}

/// [`massey_omura`] with keys from [`seeded_keys`].
pub fn massey_omura_seeded(s: &FiniteSemigroup, act: &TotalAct, x: PointId, seed: u64) -> Result<ProtocolTranscript> {
    let keys = seeded_keys(s, act, seed, 2)?;
    massey_omura(s, act, x, keys[0], keys[1])
}

/// [`elgamal`] with keys from [`seeded_keys`].
pub fn elgamal_seeded(s: &FiniteSemigroup, act: &TotalAct, x: PointId, seed: u64) -> Result<ProtocolTranscript> {
    let keys = seeded_keys(s, act, seed, 3)?;
    elgamal(s, act, x, keys[0], keys[1], keys[2])
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn units(m: u64) -> Vec<u64> {
    (1..=m).filter(|&a| gcd(a, m) == 1).collect()
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `U_{p-1}` acting on `U_p` by `n·x = xⁿ mod p`. Element `i` is the
/// `i`-th smallest unit mod `p-1`; point `j` is the residue `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModExp {
    p: u64,
    keys: Vec<u64>,
    system: Cryptosystem,
}

pub fn modexp_system(p: u64) -> Result<ModExp> {
    if p > MAX_PRIME {
        return Err(Error::PrimeTooLarge(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let m = p - 1;
    let keys = units(m);
    let key_index = |v: u64| keys.iter().position(|&k| k == v).expect("units are closed under products");
    let table: Vec<Vec<ElementId>> = keys
        .iter()
        .map(|&a| {
            keys.iter()
                .map(|&b| {
                    let r = a * b % m;
                    key_index(if r == 0 { m } else { r })
                })
                .collect()
        })
        .collect();
    let semigroup = FiniteSemigroup::new(table, None)?.with_labels(keys.iter().map(u64::to_string).collect());
    let act_table: Vec<Vec<PointId>> =
        keys.iter().map(|&n| (1..p).map(|x| (pow_mod(x, n, p) - 1) as usize).collect()).collect();
    let act = TotalAct::new(&semigroup, act_table)?.with_labels((1..p).map(|x| x.to_string()).collect());
    let system = Cryptosystem::new(semigroup, act, 0)?;
    Ok(ModExp { p, keys, system })
}

impl ModExp {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn system(&self) -> &Cryptosystem {
        &self.system
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        self.system.semigroup()
    }

    pub fn act(&self) -> &TotalAct {
        self.system.act()
    }

    /// The units mod `p-1`, in element order.
    pub fn key_values(&self) -> &[u64] {
        &self.keys
    }

    pub fn key_of(&self, n: u64) -> Option<ElementId> {
        self.keys.iter().position(|&k| k == n)
    }

    pub fn key_value(&self, id: ElementId) -> u64 {
        self.keys[id]
    }

    pub fn point_of(&self, residue: u64) -> Option<PointId> {
        (1..self.p).contains(&residue).then(|| (residue - 1) as usize)
    }

    pub fn point_value(&self, x: PointId) -> u64 {
        x as u64 + 1
    }

    /// Every stabilizer is trivial.
    pub fn is_free(&self) -> bool {
        let one = self.semigroup().identity().expect("units form a group");
        (0..self.act().points()).all(|x| self.act().stabilizer(x) == ElementSet::singleton(one))
    }

    /// Points fixed by every key.
    pub fn fixed_points(&self) -> Vec<u64> {
        (0..self.act().points())
            .filter(|&x| self.act().stabilizer(x).len() == self.semigroup().order())
            .map(|x| self.point_value(x))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftDense {
    pub holds: bool,
    /// A point `x` and key `s` with no `t` such that `(ts)x = x`.
    pub witness: Option<(PointId, ElementId)>,
}

/// Whether every stabilizer is left dense (`∀x ∀s ∃t (ts)x = x`),
/// cross-checked against "every `Sx` is transitive and contains `x`" and,
/// for carriers up to [`SUBACT_SCAN_LIMIT`] points, against "every
/// locally cyclic subact is transitive and `x ∈ Sx`".
pub fn stabilizers_left_dense(s: &FiniteSemigroup, act: &TotalAct) -> Result<LeftDense> {
    let m = act.points();
    let witness = (0..m)
        .flat_map(|x| s.elements().map(move |a| (x, a)))
        .find(|&(x, a)| !s.elements().any(|t| act.act(s.mul(t, a), x) == x));
    let cyclic = |x: PointId| -> ElementSet { s.elements().map(|a| act.act(a, x)).collect() };
    let transitive_on = |y: &ElementSet| y.iter().all(|u| y.iter().all(|v| s.elements().any(|a| act.act(a, u) == v)));
    let contains_self = (0..m).all(|x| cyclic(x).contains(x));
    let second = contains_self && (0..m).all(|x| transitive_on(&cyclic(x)));
    if second != witness.is_none() {
        return Err(Error::Inconsistent("left density disagrees with transitivity of each Sx".into()));
    }
    if m <= SUBACT_SCAN_LIMIT {
        let third = contains_self
            && (1u64..(1 << m)).all(|mask| {
                let y = ElementSet::from_mask(mask, m);
                let subact = y.iter().all(|u| s.elements().all(|a| y.contains(act.act(a, u))));
                let locally_cyclic = y.iter().all(|u| {
                    y.iter().all(|v| y.iter().any(|z| {
                        let orbit = cyclic(z);
                        orbit.contains(u) && orbit.contains(v)
                    }))
                });
                !(subact && locally_cyclic) || transitive_on(&y)
            });
        if third != second {
            return Err(Error::Inconsistent("locally cyclic subact criterion disagrees".into()));
        }
    }
    Ok(LeftDense { holds: witness.is_none(), witness })
}

/// `≤ₕ`-least idempotent.
pub fn minimum_idempotent(s: &FiniteSemigroup) -> Result<ElementId> {
    s.require_semilattice()?;
    let e = s.idempotents();
    let least = e.iter().find(|&f| e.iter().all(|g| s.h_leq(f, g)));
    least.ok_or(Error::NoMinimumIdempotent)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// The minimum idempotent.
    pub f: ElementId,
    /// `|Sf|`.
    pub copy_size: usize,
    pub orbits: Vec<Vec<PointId>>,
    /// How many orbits are isomorphic to `Sf`.
    pub copies: usize,
    /// Orbits not isomorphic to `Sf`.
    pub other_orbits: Vec<Vec<PointId>>,
    pub locally_free: bool,
}

impl Classification {
    /// `X` is a disjoint union of copies of `Sf`.
    pub fn decomposes(&self) -> bool {
        self.other_orbits.is_empty()
    }
}

/// Splits the act into orbits and matches each against `Sf` for the
/// minimum idempotent `f`; a cancellative act decomposes exactly when it
/// is locally free.
pub fn classify_locally_free_cryptosystem(sys: &Cryptosystem) -> Result<Classification> {
    let s = sys.semigroup();
    let f = minimum_idempotent(s)?;
    let sf = TotalAct::on_left_ideal(s, &s.principal_left_ideal(f))?;
    let sf_partial = sf.to_partial(s)?;
    let quotient = CosetSpace::new(s, &omega_h(s, &ElementSet::singleton(f)))?;
    if find_act_isomorphism_within(&sf_partial, quotient.act(), sf.points())?.is_none() {
        return Err(Error::Inconsistent("Sf is not isomorphic to S/fω̂".into()));
    }
    let partial = sys.partial();
    let orbits = partial.orbits();
    let mut copies = 0;
    let mut other_orbits = Vec::new();
    for orbit in &orbits {
        let sub = partial.restrict(orbit)?;
        if find_act_isomorphism_within(&sub, &sf_partial, orbit.len())?.is_some() {
            copies += 1;
        } else {
            other_orbits.push(orbit.clone());
        }
    }
    let locally_free = partial.is_locally_free();
    if locally_free != other_orbits.is_empty() {
        return Err(Error::Inconsistent("local freeness disagrees with the decomposition into copies of Sf".into()));
    }
    if locally_free && s.is_e_unitary() {
        for a in s.elements() {
            let expected = omega_h(s, &s.weak_inverses(a)).len();
            if (0..sys.points()).any(|x| key_space(s, sys.act(), a, x).len() != expected) {
                return Err(Error::Inconsistent(format!("|K({a}, x)| differs from |W({a})ω̂|")));
            }
        }
    }
    Ok(Classification { f, copy_size: sf.points(), orbits, copies, other_orbits, locally_free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::fixtures::{fixture, Fixture};

    fn z3e_system(key: ElementId) -> Cryptosystem {
        let z3e = fixture(Fixture::Z3e);
        let act = TotalAct::on_left_ideal(&z3e, &ElementSet::from([3, 4, 5])).unwrap();
        Cryptosystem::new(z3e, act, key).unwrap()
    }

    #[test]
    fn build_examples() {
        z3e_system(1);
        let sys = modexp_system(7).unwrap();
        assert!(sys.system().with_key(sys.key_of(5).unwrap()).is_ok());
        let n2 = fixture(Fixture::N2);
        let act = TotalAct::left_regular(&n2);
        assert!(matches!(Cryptosystem::new(n2, act, 1), Err(Error::NotCancellative(..))));
    }

    #[test]
    fn decrypt_key_space_examples() {
        let sys = z3e_system(1);
        assert_eq!(sys.decrypt_key_space(0).unwrap(), ElementSet::from([2, 5]));

        let z6 = fixture(Fixture::Z6);
        let sys = Cryptosystem::new(z6.clone(), TotalAct::left_regular(&z6), 2).unwrap();
        assert_eq!(sys.decrypt_key_space(3).unwrap(), ElementSet::from([4]));
    }

    #[test]
    fn modexp_seven_has_fixed_points() {
        // Every unit mod 6 is odd, so 1 and -1 are fixed by every key.
        let m = modexp_system(7).unwrap();
        assert_eq!(m.key_values(), &[1, 5]);
        assert_eq!(m.act().points(), 6);
        assert_eq!(m.fixed_points(), vec![1, 6]);
        assert!(!m.is_free());
        let sys = m.system().with_key(m.key_of(5).unwrap()).unwrap();
        assert_eq!(sys.decrypt_key_space(m.point_of(3).unwrap()).unwrap(), ElementSet::from([1]));
        assert_eq!(sys.decrypt_key_space(m.point_of(1).unwrap()).unwrap(), ElementSet::from([0, 1]));
    }

    #[test]
    fn modexp_shapes() {
        assert_eq!(modexp_system(11).unwrap().key_values(), &[1, 3, 7, 9]);
        assert_eq!(modexp_system(3).unwrap().semigroup().order(), 1);
        assert_eq!(modexp_system(2).unwrap().semigroup().order(), 1);
        assert_eq!(modexp_system(9).unwrap_err(), Error::NotPrime(9));
        assert_eq!(modexp_system(263).unwrap_err(), Error::PrimeTooLarge(263));
    }

    #[test]
    fn massey_omura_modexp_eleven() {
        let m = modexp_system(11).unwrap();
        let (s, t) = (m.key_of(3).unwrap(), m.key_of(9).unwrap());
        let run = massey_omura(m.semigroup(), m.act(), m.point_of(2).unwrap(), s, t).unwrap();
        let values: Vec<u64> = run.point_values().into_iter().map(|x| m.point_value(x)).collect();
        assert_eq!(values, vec![8, 7, 6, 2]);
        assert!(run.succeeded());
        assert_eq!(run.render().lines().count(), 4);
        assert!(run.render().starts_with("alice: sx = 7\n"));
    }

    #[test]
    fn massey_omura_identity_keys_echo() {
        let m = modexp_system(13).unwrap();
        let x = m.point_of(5).unwrap();
        let run = massey_omura(m.semigroup(), m.act(), x, 0, 0).unwrap();
        assert_eq!(run.point_values(), vec![x; 4]);
    }

    #[test]
    fn massey_omura_on_z3e() {
        let sys = z3e_system(1);
        let run = massey_omura(sys.semigroup(), sys.act(), sys.act().point_of_element(4).unwrap(), 1, 2).unwrap();
        assert!(run.succeeded());
    }

    #[test]
    fn elgamal_examples() {
        let m = modexp_system(11).unwrap();
        let k = |n| m.key_of(n).unwrap();
        let run = elgamal(m.semigroup(), m.act(), m.point_of(2).unwrap(), k(3), k(7), k(9)).unwrap();
        assert!(run.succeeded());
        let rendered = run.render_with(|e| m.key_value(e).to_string(), |x| m.point_value(x).to_string());
        assert_eq!(rendered, "bob: sd = 7\nalice: (c(sd))x = 6\nalice: cs = 1\nbob: (cs)d = 9\nbob: x = 2\n");

        let run = elgamal(m.semigroup(), m.act(), 4, 0, 0, 0).unwrap();
        assert_eq!(run.messages[1].value, 4);

        let sys = z3e_system(1);
        for x in 0..3 {
            assert!(elgamal(sys.semigroup(), sys.act(), x, 1, 4, 5).unwrap().succeeded());
        }
    }

    #[test]
    fn non_commutative_massey_omura_needs_a_biact() {
        // S3 as permutations of {0,1,2}, composed right to left.
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let s3 = FiniteSemigroup::new(table, None).unwrap();
        assert!(!s3.is_commutative());
        let biact = BiactTable::regular(&s3).unwrap();
        assert_eq!(massey_omura(&s3, biact.left(), 0, 1, 3).unwrap_err(), Error::NotCommutative);
        for x in 0..6 {
            for a in 0..6 {
                for b in 0..6 {
                    assert!(massey_omura_biact(&s3, &biact, x, a, b).unwrap().succeeded());
                }
            }
        }
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let m = modexp_system(23).unwrap();
        let a = massey_omura_seeded(m.semigroup(), m.act(), 4, 42).unwrap();
        let b = massey_omura_seeded(m.semigroup(), m.act(), 4, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.succeeded());
        assert!(elgamal_seeded(m.semigroup(), m.act(), 4, 7).unwrap().succeeded());
    }

    #[test]
    fn key_space_theorem_examples() {
        let sys = z3e_system(1);
        for x in 0..3 {
            let report = verify_key_space_theorem(&sys, x).unwrap();
            assert!(report.passed());
            assert!(report.checks[..3].iter().all(|c| c.applicable && c.pass));
        }
        let z6 = fixture(Fixture::Z6);
        let sys = Cryptosystem::new(z6.clone(), TotalAct::left_regular(&z6), 5).unwrap();
        let report = verify_key_space_theorem(&sys, 0).unwrap();
        assert!(report.passed() && report.checks[4].applicable);
    }

    #[test]
    fn locally_free_key_space_examples() {
        let sys = z3e_system(1);
        assert_eq!(locally_free_key_space(&sys, 0).unwrap(), ElementSet::from([2, 5]));
        let z6e = fixture(Fixture::Z6e);
        let act = TotalAct::on_left_ideal(&z6e, &(6..12).collect()).unwrap();
        let sys = Cryptosystem::new(z6e, act, 0).unwrap();
        for a in 0..12 {
            assert_eq!(locally_free_key_space(&sys.with_key(a).unwrap(), 0).unwrap().len(), 2);
        }
        let z6 = fixture(Fixture::Z6);
        let sys = Cryptosystem::new(z6.clone(), TotalAct::left_regular(&z6), 1).unwrap();
        assert_eq!(locally_free_key_space(&sys, 0).unwrap(), ElementSet::from([5]));
    }

    #[test]
    fn left_density_examples() {
        let m = modexp_system(7).unwrap();
        assert!(stabilizers_left_dense(m.semigroup(), m.act()).unwrap().holds);
        let sys = z3e_system(1);
        assert!(stabilizers_left_dense(sys.semigroup(), sys.act()).unwrap().holds);
        let n2 = fixture(Fixture::N2);
        let dense = stabilizers_left_dense(&n2, &TotalAct::left_regular(&n2)).unwrap();
        assert_eq!(dense, LeftDense { holds: false, witness: Some((1, 0)) });
    }

    #[test]
    fn classification_examples() {
        let sys = z3e_system(1);
        let c = classify_locally_free_cryptosystem(&sys).unwrap();
        assert_eq!((c.f, c.copies, c.decomposes()), (3, 1, true));

        let doubled = sys.act().disjoint_union(sys.act()).unwrap();
        let two = Cryptosystem::new(sys.semigroup().clone(), doubled, 1).unwrap();
        let c = classify_locally_free_cryptosystem(&two).unwrap();
        assert_eq!((c.copies, c.decomposes()), (2, true));

        let m = modexp_system(7).unwrap();
        let c = classify_locally_free_cryptosystem(m.system()).unwrap();
        assert_eq!(c.f, 0);
        assert_eq!((c.copies, c.other_orbits.len(), c.locally_free), (2, 2, false));

        let lz2 = fixture(Fixture::Lz2);
        let sys = Cryptosystem::new(lz2.clone(), TotalAct::new(&lz2, vec![vec![0], vec![0]]).unwrap(), 0).unwrap();
        assert_eq!(classify_locally_free_cryptosystem(&sys).unwrap_err(), Error::NotSemilattice);
    }
}
