//! Exact arithmetic in finitely generated abelian groups.
//!
//! A group is presented as a list of cyclic orders: `0` encodes an infinite
//! cyclic factor `Z`, `n >= 2` encodes `Z/n`. Order-1 factors must be
//! normalized away before construction. Presentations are deliberately not
//! reduced to Smith normal form — every query asked here (element order,
//! "does t kill the class", membership in a gcd image) is invariant under
//! the presentation, so the factors can mirror whatever the literature lists.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Three-valued truth. `Unknown` is a first-class answer and is never
/// collapsed into `False`: "we cannot tell" and "provably not" lead to
/// different verdicts downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriBool {
    True,
    False,
    Unknown,
}

impl fmt::Display for TriBool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriBool::True => "true",
            TriBool::False => "false",
            TriBool::Unknown => "unknown",
        })
    }
}

impl From<bool> for TriBool {
    fn from(b: bool) -> Self {
        if b {
            TriBool::True
        } else {
            TriBool::False
        }
    }
}

/// The order of a group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Finite(BigUint),
    Infinite,
}

impl Order {
    pub fn finite(n: u64) -> Self {
        Order::Finite(BigUint::from(n))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// Partial knowledge about the order of a class: either the order is known
/// exactly, or only a multiple of it is known. `Exact(1)` is the zero class.
/// The recorded integer is always >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKnowledge {
    Exact(#[serde(with = "crate::serde_big::uint")] BigUint),
    Divides(#[serde(with = "crate::serde_big::uint")] BigUint),
}

impl OrderKnowledge {
    pub fn exact(n: u64) -> Self {
        assert!(n >= 1, "orders are positive");
        OrderKnowledge::Exact(BigUint::from(n))
    }

    pub fn divides(n: u64) -> Self {
        assert!(n >= 1, "order bounds are positive");
        OrderKnowledge::Divides(BigUint::from(n))
    }
}

impl fmt::Display for OrderKnowledge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKnowledge::Exact(n) => write!(f, "exactly {n}"),
            OrderKnowledge::Divides(n) => write!(f, "divides {n}"),
        }
    }
}

/// Finitely generated abelian group, presented by its cyclic orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    orders: Vec<BigUint>,
}

impl FgAbGroup {
    /// Build a group from cyclic orders (`0` = `Z`, `n >= 2` = `Z/n`).
    /// Order-1 entries are rejected: trivial factors carry no information and
    /// would make coordinate positions ambiguous.
    pub fn new(orders: Vec<BigUint>) -> Result<Self> {
        if orders.iter().any(|n| n.is_one()) {
            return Err(Error::Group(
                "order-1 factors must be normalized away before constructing a group".into(),
            ));
        }
        Ok(FgAbGroup { orders })
    }

    pub fn from_orders(orders: &[u64]) -> Result<Self> {
        Self::new(orders.iter().map(|&n| BigUint::from(n)).collect())
    }

    pub fn trivial() -> Self {
        FgAbGroup { orders: Vec::new() }
    }

    pub fn orders(&self) -> &[BigUint] {
        &self.orders
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { group: self.clone(), coords: vec![BigInt::zero(); self.orders.len()] }
    }

    /// Build an element; each finite-order coordinate is stored reduced into
    /// `[0, order)`.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement> {
        if coords.len() != self.orders.len() {
            return Err(Error::Group(format!(
                "element has {} coordinate(s) but the group has {} factor(s)",
                coords.len(),
                self.orders.len()
            )));
        }
        let coords = self
            .orders
            .iter()
            .zip(coords)
            .map(|(n, c)| if n.is_zero() { c } else { c.mod_floor(&BigInt::from(n.clone())) })
            .collect();
        Ok(GroupElement { group: self.clone(), coords })
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Least common multiple of the factor orders; `Infinite` if any factor
    /// is free.
    pub fn exponent(&self) -> Order {
        let mut e = BigUint::one();
        for n in &self.orders {
            if n.is_zero() {
                return Order::Infinite;
            }
            e = e.lcm(n);
        }
        Order::Finite(e)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .orders
            .iter()
            .map(|n| if n.is_zero() { "Z".to_string() } else { format!("Z/{n}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of an [`FgAbGroup`], one coordinate per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    group: FgAbGroup,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::Group("cannot add elements of different groups".into()));
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.element(coords)
    }

    /// `t`-fold multiple of the element (any integer `t`).
    pub fn scale(&self, t: &BigInt) -> GroupElement {
        let coords = self.coords.iter().map(|c| c * t).collect();
        self.group.element(coords).expect("coordinate count is preserved")
    }

    pub fn order(&self) -> Order {
        element_order(self)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({}) in {}", parts.join(", "), self.group)
    }
}

/// Exact order of an element: lcm over the factors of `order_i / gcd(order_i,
/// coord_i)`, `Infinite` as soon as a free coordinate is nonzero. The zero
/// element has order 1 in any group.
pub fn element_order(g: &GroupElement) -> Order {
    let mut acc = BigUint::one();
    for (n, c) in g.group.orders().iter().zip(g.coords()) {
        if n.is_zero() {
            if !c.is_zero() {
                return Order::Infinite;
            }
            continue;
        }
        let c = c.magnitude(); // already reduced into [0, n)
        let factor_order = n / n.gcd(c);
        acc = acc.lcm(&factor_order);
    }
    Order::Finite(acc)
}

/// Does `t * x = 0` hold for a class `x` whose order is known as `knowledge`?
///
/// With an exact order `n` the answer is decided by `n | t` in both
/// directions. With only `Divides(n)`, `n | t` still forces vanishing, but
/// failure of `n | t` decides nothing — the true order might be a proper
/// divisor — so the answer degrades to `Unknown`, never to `False`.
pub fn is_zero_multiple(knowledge: &OrderKnowledge, t: &BigInt) -> TriBool {
    match knowledge {
        OrderKnowledge::Exact(n) => divides(n, t).into(),
        OrderKnowledge::Divides(n) => {
            if divides(n, t) {
                TriBool::True
            } else {
                TriBool::Unknown
            }
        }
    }
}

fn divides(n: &BigUint, t: &BigInt) -> bool {
    if n.is_zero() {
        return t.is_zero();
    }
    (t % BigInt::from(n.clone())).is_zero()
}

/// Is `c` an integer combination of `evals`? The subgroup of `Z` generated by
/// the evaluations is `gcd(evals) * Z`; the empty list generates `{0}`.
pub fn in_gcd_image(evals: &[BigInt], c: &BigInt) -> bool {
    let g = evals.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if g.is_zero() {
        c.is_zero()
    } else {
        (c % g).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn group(orders: &[u64]) -> FgAbGroup {
        FgAbGroup::from_orders(orders).unwrap()
    }

    fn elt(orders: &[u64], coords: &[i64]) -> GroupElement {
        group(orders).element_from_i64(coords).unwrap()
    }

    /// Independent order oracle: add the element to itself until the sum is
    /// zero, counting steps. Only usable for finite groups.
    fn brute_order(g: &GroupElement) -> u64 {
        let zero = g.group().zero();
        let mut acc = g.clone();
        let mut n = 1u64;
        while acc != zero {
            acc = acc.add(g).unwrap();
            n += 1;
            assert!(n <= 100_000, "runaway order search");
        }
        n
    }

    /// Independent membership oracle: recursive bounded enumeration. Zero
    /// evaluations generate nothing and are dropped; for a single evaluation
    /// membership is exact division; otherwise coefficients for the head
    /// evaluation are searched in a window wide enough to contain a solution
    /// whenever one exists (the solution set for the head coefficient is a
    /// residue class modulo at most max|eval| <= 10 in the tested ranges).
    fn brute_in_image(evals: &[i64], c: i64) -> bool {
        let nz: Vec<i64> = evals.iter().copied().filter(|&e| e != 0).collect();
        fn go(evals: &[i64], c: i64) -> bool {
            match evals {
                [] => c == 0,
                [e] => c % e == 0,
                [e, rest @ ..] => (-20..=20).any(|a| go(rest, c - a * e)),
            }
        }
        go(&nz, c)
    }

    #[test]
    fn order_of_twelve_in_z24_is_two() {
        assert_eq!(elt(&[24], &[12]).order(), Order::finite(2));
    }

    #[test]
    fn order_of_zero_is_one_everywhere() {
        assert_eq!(group(&[24]).zero().order(), Order::finite(1));
        assert_eq!(FgAbGroup::trivial().zero().order(), Order::finite(1));
        assert_eq!(group(&[0, 7]).zero().order(), Order::finite(1));
    }

    #[test]
    fn order_of_diagonal_in_z2_plus_z3() {
        let g = elt(&[2, 3], &[1, 1]);
        assert_eq!(brute_order(&g), 6);
        assert_eq!(g.order(), Order::finite(6));
    }

    #[test]
    fn free_coordinate_forces_infinite_order() {
        assert_eq!(elt(&[0], &[1]).order(), Order::Infinite);
        assert_eq!(elt(&[0, 10], &[0, 5]).order(), Order::finite(2));
    }

    #[test]
    fn coordinates_are_stored_reduced() {
        assert_eq!(elt(&[5], &[7]).coords(), &[BigInt::from(2)]);
        assert_eq!(elt(&[5], &[-1]).coords(), &[BigInt::from(4)]);
        // free factors keep their coordinate as given
        assert_eq!(elt(&[0], &[-3]).coords(), &[BigInt::from(-3)]);
    }

    #[test]
    fn order_one_factors_are_rejected() {
        assert!(FgAbGroup::from_orders(&[1]).is_err());
        assert!(FgAbGroup::from_orders(&[2, 1, 3]).is_err());
    }

    #[test]
    fn element_coordinate_count_must_match() {
        assert!(group(&[2, 3]).element_from_i64(&[1]).is_err());
    }

    #[test]
    fn adding_across_groups_fails() {
        let a = elt(&[2], &[1]);
        let b = elt(&[3], &[1]);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn zero_multiple_examples() {
        // order exactly 12: 8 is decisively not a killing multiple
        assert_eq!(is_zero_multiple(&OrderKnowledge::exact(12), &BigInt::from(8)), TriBool::False);
        assert_eq!(is_zero_multiple(&OrderKnowledge::exact(12), &BigInt::from(24)), TriBool::True);
        // order only known to divide 24: 36 is killed if the order is 12 but
        // not if it is 24, so the answer stays open
        assert_eq!(
            is_zero_multiple(&OrderKnowledge::divides(24), &BigInt::from(36)),
            TriBool::Unknown
        );
        assert_eq!(
            is_zero_multiple(&OrderKnowledge::divides(24), &BigInt::from(48)),
            TriBool::True
        );
        // the zero class is killed by everything, including 0
        assert_eq!(is_zero_multiple(&OrderKnowledge::exact(1), &BigInt::from(17)), TriBool::True);
        assert_eq!(is_zero_multiple(&OrderKnowledge::exact(5), &BigInt::zero()), TriBool::True);
        assert_eq!(is_zero_multiple(&OrderKnowledge::exact(5), &BigInt::from(-10)), TriBool::True);
    }

    #[test]
    fn exact_zero_multiple_matches_generator_arithmetic() {
        // against a generator x = 1 of Z/n: t*x = 0 iff t mod n == 0
        for n in 1u64..=100 {
            let zn = group(&[n.max(2)]);
            for t in -100i64..=100 {
                let know = OrderKnowledge::exact(n);
                let expect = if n == 1 {
                    true
                } else {
                    zn.element_from_i64(&[1]).unwrap().scale(&BigInt::from(t)).is_zero()
                };
                assert_eq!(
                    is_zero_multiple(&know, &BigInt::from(t)),
                    TriBool::from(expect),
                    "n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn divides_knowledge_never_answers_false() {
        for n in 1u64..=60 {
            for t in -100i64..=100 {
                let got = is_zero_multiple(&OrderKnowledge::divides(n), &BigInt::from(t));
                assert_ne!(got, TriBool::False, "n={n} t={t}");
                // and True propagates to every exact divisor of n
                if got == TriBool::True {
                    for m in 1..=n {
                        if n % m == 0 {
                            assert_eq!(
                                is_zero_multiple(&OrderKnowledge::exact(m), &BigInt::from(t)),
                                TriBool::True,
                                "n={n} m={m} t={t}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gcd_image_examples() {
        let b = BigInt::from;
        assert!(in_gcd_image(&[b(3)], &b(12)));
        assert!(!in_gcd_image(&[b(3)], &b(10)));
        assert!(in_gcd_image(&[b(4), b(6)], &b(2)));
        assert!(!in_gcd_image(&[b(4), b(6)], &b(3)));
        // empty list generates {0}
        assert!(in_gcd_image(&[], &b(0)));
        assert!(!in_gcd_image(&[], &b(5)));
        // all-zero evaluations behave like the empty list
        assert!(!in_gcd_image(&[b(0), b(0)], &b(5)));
        assert!(in_gcd_image(&[b(0), b(0)], &b(0)));
    }

    proptest! {
        #[test]
        fn finite_orders_match_brute_force(
            orders in proptest::collection::vec(2u64..=12, 0..=3),
            seeds in proptest::collection::vec(-30i64..=30, 3),
        ) {
            let g = group(&orders);
            let coords: Vec<i64> = seeds.into_iter().take(orders.len()).collect();
            let x = g.element_from_i64(&coords).unwrap();
            let n = brute_order(&x);
            prop_assert_eq!(x.order(), Order::finite(n));
            // n*x = 0 and no smaller positive multiple vanishes, checked both
            // through `scale` and through the repeated-addition loop above
            prop_assert!(x.scale(&BigInt::from(n)).is_zero());
        }

        #[test]
        fn gcd_image_matches_bounded_enumeration(
            evals in proptest::collection::vec(-10i64..=10, 0..=3),
            c in -50i64..=50,
        ) {
            let big: Vec<BigInt> = evals.iter().map(|&e| BigInt::from(e)).collect();
            prop_assert_eq!(in_gcd_image(&big, &BigInt::from(c)), brute_in_image(&evals, c));
        }

        #[test]
        fn scaling_is_additive_in_the_class(
            orders in proptest::collection::vec(2u64..=24, 1..=3),
            a in proptest::collection::vec(-50i64..=50, 3),
            b in proptest::collection::vec(-50i64..=50, 3),
            t in -60i64..=60,
        ) {
            let g = group(&orders);
            let x = g.element_from_i64(&a[..orders.len()]).unwrap();
            let y = g.element_from_i64(&b[..orders.len()]).unwrap();
            let t = BigInt::from(t);
            let lhs = x.add(&y).unwrap().scale(&t);
            let rhs = x.scale(&t).add(&y.scale(&t)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
