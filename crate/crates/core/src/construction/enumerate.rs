//! Brute-force enumeration of all associative tables of a small order.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Largest order accepted by [`enumerate_semigroups`].
pub const MAX_ENUMERATION_ORDER: usize = 3;

/// Every associative `n x n` table, without isomorphism reduction, in
/// lexicographic order of the flattened table.
pub fn enumerate_semigroups(n: usize) -> Result<impl Iterator<Item = FiniteSemigroup>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let cells = n * n;
    let total = n.pow(cells as u32);
    Ok((0..total).filter_map(move |code| {
        let mut flat = vec![0; cells];
        let mut rest = code;
        for cell in flat.iter_mut().rev() {
            *cell = rest % n;
            rest /= n;
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        let associative = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| mul(mul(a, b), c) == mul(a, mul(b, c)))));
        associative.then(|| {
            FiniteSemigroup::new(flat.chunks(n).map(<[_]>::to_vec).collect(), None)
                .expect("table checked associative")
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_semigroups(1).unwrap().count(), 1);
        assert_eq!(enumerate_semigroups(2).unwrap().count(), 8);
        assert_eq!(enumerate_semigroups(3).unwrap().count(), 113);
        assert_eq!(enumerate_semigroups(4).err(), Some(Error::OrderTooLarge(4)));
        assert_eq!(enumerate_semigroups(0).err(), Some(Error::OrderTooLarge(0)));
    }
}
