use std::collections::BTreeMap;

use proptest::prelude::*;

use crate::act::{wagner_preston, PartialAct, TotalAct};
use crate::closure::{omega_h, omega_m};
use crate::crypto::{cancellative_characterisations, verify_key_space_theorem, Cryptosystem};
use crate::semigroup::{ElementSet, FiniteSemigroup};
use crate::verify::{run_suite, Corpus, Subject, Suite};

const POINTS: u8 = 3;
const MAX_ORDER: usize = 12;

/// Laws refuted by CHAIN3; every other finding must pass.
const KNOWN_FALSE: [&str; 2] = ["weak-inverses: W(s') = sW(s)s", "weak-inverses: W(s') = W(s*)"];

type Map = Vec<Option<u8>>;

fn compose(a: &Map, b: &Map) -> Map {
    b.iter().map(|x| x.and_then(|x| a[x as usize])).collect()
}

/// The subsemigroup generated by `gens` under `(ab)(x) = a(b(x))`, or
/// `None` once it outgrows `MAX_ORDER`.
fn generated(gens: &[Map]) -> Option<FiniteSemigroup> {
    let mut elements: Vec<Map> = Vec::new();
    let mut index = BTreeMap::new();
    for g in gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            for c in [compose(&elements[i], g), compose(g, &elements[i])] {
                if !index.contains_key(&c) {
                    index.insert(c.clone(), elements.len());
                    elements.push(c);
                    if elements.len() > MAX_ORDER {
                        return None;
                    }
                }
            }
        }
        i += 1;
    }
    let table = elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    Some(FiniteSemigroup::new(table, None).expect("composition is associative"))
}

fn transformation() -> impl Strategy<Value = Map> {
    prop::collection::vec((0..POINTS).prop_map(Some), POINTS as usize)
}

fn partial_bijection() -> impl Strategy<Value = Map> {
    (Just((0..POINTS).collect::<Vec<u8>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), POINTS as usize))
        .prop_map(|(perm, keep)| perm.into_iter().zip(keep).map(|(y, k)| k.then_some(y)).collect())
}

fn transformation_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop::collection::vec(transformation(), 1..=3).prop_filter_map("too large", |g| generated(&g))
}

/// Inverse semigroups of partial bijections, closed under inversion.
fn inverse_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop::collection::vec(partial_bijection(), 1..=2).prop_filter_map("too large", |gens| {
        let mut all = gens.clone();
        for g in &gens {
            let mut inv = vec![None; POINTS as usize];
            for (x, y) in g.iter().enumerate() {
                if let Some(y) = y {
                    inv[*y as usize] = Some(x as u8);
                }
            }
            all.push(inv);
        }
        generated(&all)
    })
}

fn assert_suite(suite: Suite, s: &FiniteSemigroup) -> std::result::Result<(), TestCaseError> {
    let corpus = Corpus::single(Subject::new("generated", s.clone()));
    for f in run_suite(suite, &corpus) {
        if !KNOWN_FALSE.contains(&f.name.as_str()) {
            prop_assert!(f.pass, "{} failed: {:?}\n{}", f.name, f.witness, s.to_table_text());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn semigroup_laws_hold(s in transformation_semigroup()) {
        assert_suite(Suite::Semigroup, &s)?;
    }

    #[test]
    fn closure_laws_hold(s in transformation_semigroup()) {
        assert_suite(Suite::Closures, &s)?;
    }

    #[test]
    fn closures_are_idempotent_on_random_subsets(s in transformation_semigroup(), mask in any::<u64>()) {
        let a = ElementSet::from_mask(mask & ((1 << s.order()) - 1), s.order());
        let (m, h) = (omega_m(&s, &a), omega_h(&s, &a));
        prop_assert_eq!(omega_m(&s, &m), m.clone());
        prop_assert_eq!(omega_h(&s, &h), h.clone());
        prop_assert!(a.is_subset(&h) && h.is_subset(&m));
    }

    #[test]
    fn inverse_semigroups_have_semilattice_idempotents(s in inverse_semigroup()) {
        prop_assert!(s.is_inverse_semigroup() && s.has_semilattice_idempotents());
    }

    #[test]
    fn weak_inverse_laws_hold(s in inverse_semigroup()) {
        assert_suite(Suite::WeakInverses, &s)?;
    }

    #[test]
    fn act_laws_hold(s in inverse_semigroup()) {
        assert_suite(Suite::Acts, &s)?;
    }

    #[test]
    fn coset_laws_hold(s in inverse_semigroup()) {
        assert_suite(Suite::Cosets, &s)?;
    }

    #[test]
    fn crypto_laws_hold(s in transformation_semigroup()) {
        assert_suite(Suite::Crypto, &s)?;
    }

    #[test]
    fn cancellative_characterisations_agree(s in transformation_semigroup(), a in 0usize..MAX_ORDER) {
        let ideal = s.principal_left_ideal(a % s.order());
        let act = TotalAct::on_left_ideal(&s, &ideal).unwrap();
        let c = cancellative_characterisations(&s, &act);
        prop_assert!(c.iter().all(|&x| x == c[0]), "{:?}", c);
        if c[0] {
            let sys = Cryptosystem::new(s.clone(), act, 0).unwrap();
            for key in s.elements() {
                let keyed = sys.with_key(key).unwrap();
                for x in 0..keyed.points() {
                    prop_assert!(verify_key_space_theorem(&keyed, x).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn table_text_round_trips(s in transformation_semigroup()) {
        let back = FiniteSemigroup::parse_table(&s.to_table_text()).unwrap();
        prop_assert_eq!(back.rows(), s.rows());
        prop_assert_eq!(back.identity(), s.identity());
    }

    #[test]
    fn act_text_round_trips(s in inverse_semigroup()) {
        let wp = wagner_preston(&s, None).unwrap();
        let back = PartialAct::parse(&s, &wp.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), wp.to_text());
    }

    #[test]
    fn element_set_text_round_trips(ids in prop::collection::btree_set(0usize..64, 0..10)) {
        let set: ElementSet = ids.into_iter().collect();
        prop_assert_eq!(set.to_text().parse::<ElementSet>().unwrap(), set);
    }
}
