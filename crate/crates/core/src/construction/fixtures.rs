//! The frozen fixture corpus.
//!
//! | name   | order | description                                             |
//! |--------|-------|---------------------------------------------------------|
//! | CHAIN3 | 3     | `min` on the chain `0 < 1 < 2`                          |
//! | LZ2    | 2     | left-zero band, `i*j = i`                               |
//! | N2     | 2     | null semigroup `{0, a}`, every product is `0`           |
//! | Z2     | 2     | cyclic group, addition mod 2                            |
//! | Z3     | 3     | cyclic group, addition mod 3                            |
//! | Z6     | 6     | cyclic group, addition mod 6                            |
//! | T2     | 4     | full transformations of `{0,1}`: id, swap, const0, const1; `s*t` applies `t` first |
//! | B2     | 5     | Brandt semigroup: 0, a, a', aa', a'a                    |
//! | Z3E    | 6     | `Z3 u eZ3`: ids 0..2 are the group, 3..5 are e0, e1, e2 |
//! | Z6E    | 12    | `Z6 u eZ6`: ids 0..5 are the group, 6..11 are e0..e5    |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    Chain3,
    Lz2,
    N2,
    Z2,
    Z3,
    Z6,
    T2,
    B2,
    Z3e,
    Z6e,
}

impl Fixture {
    pub const ALL: [Fixture; 10] = [
        Fixture::Chain3,
        Fixture::Lz2,
        Fixture::N2,
        Fixture::Z2,
        Fixture::Z3,
        Fixture::Z6,
        Fixture::T2,
        Fixture::B2,
        Fixture::Z3e,
        Fixture::Z6e,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Chain3 => "CHAIN3",
            Fixture::Lz2 => "LZ2",
            Fixture::N2 => "N2",
            Fixture::Z2 => "Z2",
            Fixture::Z3 => "Z3",
            Fixture::Z6 => "Z6",
            Fixture::T2 => "T2",
            Fixture::B2 => "B2",
            Fixture::Z3e => "Z3E",
            Fixture::Z6e => "Z6E",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

pub fn fixture_by_name(name: &str) -> Result<FiniteSemigroup> {
    Ok(fixture(name.parse()?))
}

pub fn fixture(f: Fixture) -> FiniteSemigroup {
    let (rows, labels): (Vec<Vec<usize>>, Option<Vec<String>>) = match f {
        Fixture::Chain3 => (vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]], None),
        Fixture::Lz2 => (vec![vec![0, 0], vec![1, 1]], None),
        Fixture::N2 => (vec![vec![0, 0], vec![0, 0]], Some(strs(&["0", "a"]))),
        Fixture::Z2 => (cyclic(2), None),
        Fixture::Z3 => (cyclic(3), None),
        Fixture::Z6 => (cyclic(6), None),
        Fixture::T2 => {
            let maps = [[0, 1], [1, 0], [0, 0], [1, 1]];
            let rows = maps
                .iter()
                .map(|s| {
                    maps.iter()
                        .map(|t| {
                            let composed = [s[t[0]], s[t[1]]];
                            maps.iter().position(|m| *m == composed).unwrap()
                        })
                        .collect()
                })
                .collect();
            (rows, Some(strs(&["id", "swap", "const0", "const1"])))
        }
        Fixture::B2 => {
            // matrix units: 1 = E12, 2 = E21, 3 = E11, 4 = E22
            let unit = [None, Some((1, 2)), Some((2, 1)), Some((1, 1)), Some((2, 2))];
            let rows = unit
                .iter()
                .map(|a| {
                    unit.iter()
                        .map(|b| match (a, b) {
                            (Some((i, j)), Some((k, l))) if j == k => {
                                unit.iter().position(|u| *u == Some((*i, *l))).unwrap()
                            }
                            _ => 0,
                        })
                        .collect()
                })
                .collect();
            (rows, Some(strs(&["0", "a", "a'", "aa'", "a'a"])))
        }
        Fixture::Z3e => (
            vec![
                vec![0, 1, 2, 3, 4, 5],
                vec![1, 2, 0, 4, 5, 3],
                vec![2, 0, 1, 5, 3, 4],
                vec![3, 4, 5, 3, 4, 5],
                vec![4, 5, 3, 4, 5, 3],
                vec![5, 3, 4, 5, 3, 4],
            ],
            Some(strs(&["0", "1", "2", "e0", "e1", "e2"])),
        ),
        Fixture::Z6e => {
            let rows = (0..12)
                .map(|a: usize| {
                    (0..12)
                        .map(|b: usize| (a % 6 + b % 6) % 6 + if a >= 6 || b >= 6 { 6 } else { 0 })
                        .collect()
                })
                .collect();
            let labels = (0..6).map(|g| g.to_string()).chain((0..6).map(|g| format!("e{g}"))).collect();
            (rows, Some(labels))
        }
    };
    let s = FiniteSemigroup::new(rows, None).expect("fixture tables are associative");
    match labels {
        Some(labels) => s.with_labels(labels),
        None => s,
    }
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

fn strs(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_has_five_elements_and_three_idempotents() {
        let b2 = fixture(Fixture::B2);
        assert_eq!(b2.order(), 5);
        assert_eq!(b2.idempotents().len(), 3);
        // a * a' = aa', a' * a = a'a, a * a = 0
        assert_eq!(b2.mul(1, 2), 3);
        assert_eq!(b2.mul(2, 1), 4);
        assert_eq!(b2.mul(1, 1), 0);
    }

    #[test]
    fn t2_constants_do_not_commute() {
        let t2 = fixture(Fixture::T2);
        assert_ne!(t2.mul(2, 3), t2.mul(3, 2));
        assert_eq!(t2.identity(), Some(0));
    }

    #[test]
    fn names_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert_eq!("z3e".parse::<Fixture>().unwrap(), Fixture::Z3e);
        assert_eq!(fixture_by_name("Q8"), Err(Error::UnknownFixture("Q8".into())));
    }

    #[test]
    fn chain3_is_min() {
        let s = fixture(Fixture::Chain3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(s.mul(a, b), a.min(b));
            }
        }
    }

    #[test]
    fn z6e_has_two_idempotents() {
        let s = fixture(Fixture::Z6e);
        assert_eq!(s.order(), 12);
        assert_eq!(s.idempotents().to_vec(), vec![0, 6]);
    }
}
