//! The boundary growth recurrence
//!
//! ```text
//! a' = 6a + 2b,   b' = 3a + 4b,   f' = 18a + 15b
//! ```
//!
//! and the exponent form `f_k < 3 a_k + 4 b_k` of `2^f < 8^a 16^b`.

use num_traits::{FromPrimitive, Num};

/// Counts of order-3 boundary vertices (`a`), order-4 boundary vertices (`b`)
/// and faces added by the last step (`f`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrowthState<T> {
    pub a: T,
    pub b: T,
    pub f: T,
}

fn c<T: FromPrimitive>(n: u8) -> T {
    T::from_u8(n).expect("small constants are representable")
}

impl<T: Clone + Num + FromPrimitive + PartialOrd> GrowthState<T> {
    /// A starting state with no faces counted yet.
    pub fn seed(a: T, b: T) -> Self {
        GrowthState { a, b, f: T::zero() }
    }

    pub fn step(&self) -> Self {
        let (a, b) = (self.a.clone(), self.b.clone());
        GrowthState {
            a: c::<T>(6) * a.clone() + c::<T>(2) * b.clone(),
            b: c::<T>(3) * a.clone() + c::<T>(4) * b.clone(),
            f: c::<T>(18) * a + c::<T>(15) * b,
        }
    }

    /// `3a + 4b`, the base-2 exponent of `8^a 16^b`.
    pub fn capacity(&self) -> T {
        c::<T>(3) * self.a.clone() + c::<T>(4) * self.b.clone()
    }

    /// Whether `f < 3a + 4b`.
    pub fn satisfies_inequality(&self) -> bool {
        self.f < self.capacity()
    }

    /// `3a + 4b - f`, or `None` when it would be negative.
    pub fn margin(&self) -> Option<T> {
        let cap = self.capacity();
        if cap >= self.f {
            Some(cap - self.f.clone())
        } else {
            None
        }
    }
}

/// States `s_1 = seed, s_2, ..., s_n`.
pub fn sequence<T: Clone + Num + FromPrimitive + PartialOrd>(seed: &GrowthState<T>, n: usize) -> Vec<GrowthState<T>> {
    let mut out = Vec::with_capacity(n);
    let mut s = seed.clone();
    for _ in 0..n {
        let next = s.step();
        out.push(s);
        s = next;
    }
    out
}

/// True iff `f_k < 3 a_k + 4 b_k` for every `2 <= k <= n`.
pub fn check_inequality<T: Clone + Num + FromPrimitive + PartialOrd>(seed: &GrowthState<T>, n: usize) -> bool {
    sequence(seed, n).iter().skip(1).all(GrowthState::satisfies_inequality)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steps() {
        let s = GrowthState::seed(1u64, 0).step();
        assert_eq!(s, GrowthState { a: 6, b: 3, f: 18 });
        assert_eq!(GrowthState::seed(0u64, 1).step(), GrowthState { a: 2, b: 4, f: 15 });
        assert_eq!(GrowthState::seed(0u64, 0).step(), GrowthState { a: 0, b: 0, f: 0 });
    }

    #[test]
    fn margin_after_one_step() {
        let s = GrowthState::seed(1u64, 0).step();
        assert_eq!(s.margin(), Some(12));
        assert_eq!(GrowthState { a: 0u64, b: 0, f: 1 }.margin(), None);
    }

    #[test]
    fn inequality_small() {
        assert!(check_inequality(&GrowthState::seed(1u64, 0), 10));
        assert!(check_inequality(&GrowthState::seed(0u64, 1), 10));
        assert!(!check_inequality(&GrowthState::seed(0u64, 0), 3));
        assert!(check_inequality(&GrowthState::seed(0u64, 0), 1));
    }
}
