//! Basis labels of the 11-dimensional field space and the permutation symbols.

use std::fmt;

use serde::{Serialize, Serializer};

use super::scalar::ComplexRational;

/// Dimension of the full field space: one scalar, four vector and six
/// antisymmetric-tensor slots.
pub const DIM: usize = 11;

/// One basis slot of `Ψ = (ψ₀, ψ_μ, ψ_[μν])`.
///
/// Vector and tensor labels are 1-based (`μ ∈ 1..=4`), with `4` the
/// imaginary-time direction. `T(μ, ν)` always has `μ < ν`; construct it
/// through [`ComponentIndex::tensor`] or [`pair_slot`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentIndex {
    S,
    V(u8),
    T(u8, u8),
}

/// Canonical order `[S, V1..V4, T12, T13, T14, T23, T24, T34]`.
pub const CANONICAL: [ComponentIndex; DIM] = [
    ComponentIndex::S,
    ComponentIndex::V(1),
    ComponentIndex::V(2),
    ComponentIndex::V(3),
    ComponentIndex::V(4),
    ComponentIndex::T(1, 2),
    ComponentIndex::T(1, 3),
    ComponentIndex::T(1, 4),
    ComponentIndex::T(2, 3),
    ComponentIndex::T(2, 4),
    ComponentIndex::T(3, 4),
];

/// Ordered pairs `μ < ν` in canonical tensor order.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

impl ComponentIndex {
    pub fn vector(mu: usize) -> ComponentIndex {
        assert!(
            (1..=4).contains(&mu),
            "vector index {mu} out of range 1..=4"
        );
        ComponentIndex::V(mu as u8)
    }

    /// `T(μ, ν)` if `μ < ν`, `None` otherwise.
    pub fn tensor(mu: usize, nu: usize) -> Option<ComponentIndex> {
        ((1..=4).contains(&mu) && (1..=4).contains(&nu) && mu < nu)
            .then_some(ComponentIndex::T(mu as u8, nu as u8))
    }

    /// Position in [`CANONICAL`].
    pub fn position(self) -> usize {
        match self {
            ComponentIndex::S => 0,
            ComponentIndex::V(m) => m as usize,
            ComponentIndex::T(m, n) => {
                4 + PAIRS
                    .iter()
                    .position(|&p| p == (m as usize, n as usize))
                    .expect("invalid tensor slot")
                    + 1
            }
        }
    }

    pub fn from_position(pos: usize) -> ComponentIndex {
        CANONICAL[pos]
    }

    pub fn all() -> impl Iterator<Item = ComponentIndex> {
        CANONICAL.into_iter()
    }
}

impl fmt::Display for ComponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentIndex::S => write!(f, "S"),
            ComponentIndex::V(m) => write!(f, "V{m}"),
            ComponentIndex::T(m, n) => write!(f, "T{m}{n}"),
        }
    }
}

impl fmt::Debug for ComponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ComponentIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl std::str::FromStr for ComponentIndex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CANONICAL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| format!("unknown component label `{s}`"))
    }
}

/// Resolves the antisymmetric double index `[μν]` onto ordered storage.
///
/// Returns `(T(μ,ν), +1)` for `μ < ν`, `(T(ν,μ), -1)` for `μ > ν` and
/// `(None, 0)` on the diagonal, where the component vanishes identically.
pub fn pair_slot(mu: usize, nu: usize) -> (Option<ComponentIndex>, i8) {
    assert!(
        (1..=4).contains(&mu) && (1..=4).contains(&nu),
        "pair ({mu},{nu}) out of range"
    );
    match mu.cmp(&nu) {
        std::cmp::Ordering::Less => (ComponentIndex::tensor(mu, nu), 1),
        std::cmp::Ordering::Greater => (ComponentIndex::tensor(nu, mu), -1),
        std::cmp::Ordering::Equal => (None, 0),
    }
}

/// Sign of the permutation taking `idx` to sorted order, 0 on repeats.
fn permutation_sign(idx: &[usize]) -> i8 {
    let mut sign = 1;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            match idx[a].cmp(&idx[b]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Four-dimensional Levi-Civita symbol in the imaginary-time convention,
/// normalized to `ε₁₂₃₄ = -i`.
pub fn levi_civita4(mu: usize, nu: usize, rho: usize, sigma: usize) -> ComplexRational {
    ComplexRational::gauss(0, -(permutation_sign(&[mu, nu, rho, sigma]) as i64))
}

/// Spatial Levi-Civita symbol, `ε₁₂₃ = +1`.
pub fn levi_civita3(a: usize, b: usize, c: usize) -> i8 {
    permutation_sign(&[a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn canonical_order_round_trips() {
        assert_eq!(CANONICAL.len(), 11);
        for (p, c) in CANONICAL.iter().enumerate() {
            assert_eq!(c.position(), p);
            assert_eq!(ComponentIndex::from_position(p), *c);
            assert_eq!(c.to_string().parse::<ComponentIndex>().unwrap(), *c);
        }
        let labels: Vec<String> = CANONICAL.iter().map(|c| c.to_string()).collect();
        assert_eq!(
            labels,
            ["S", "V1", "V2", "V3", "V4", "T12", "T13", "T14", "T23", "T24", "T34"]
        );
    }

    #[test]
    fn tensor_requires_strict_order() {
        assert!(ComponentIndex::tensor(2, 1).is_none());
        assert!(ComponentIndex::tensor(3, 3).is_none());
        assert!(ComponentIndex::tensor(0, 1).is_none());
        assert_eq!(ComponentIndex::tensor(2, 4), Some(ComponentIndex::T(2, 4)));
    }

    #[test]
    fn pair_slot_examples() {
        assert_eq!(pair_slot(1, 2), (Some(ComponentIndex::T(1, 2)), 1));
        assert_eq!(pair_slot(4, 1), (Some(ComponentIndex::T(1, 4)), -1));
        assert_eq!(pair_slot(3, 3), (None, 0));
    }

    #[test]
    fn pair_slot_sign_flips_under_swap() {
        for mu in 1..=4 {
            for nu in 1..=4 {
                let (a, sa) = pair_slot(mu, nu);
                let (b, sb) = pair_slot(nu, mu);
                assert_eq!(a, b);
                assert_eq!(sa, -sb);
            }
        }
    }

    #[test]
    fn levi_civita4_examples() {
        assert_eq!(levi_civita4(1, 2, 3, 4), ComplexRational::gauss(0, -1));
        assert_eq!(levi_civita4(2, 1, 3, 4), ComplexRational::gauss(0, 1));
        assert!(levi_civita4(1, 1, 3, 4).is_zero());
    }

    #[test]
    fn levi_civita4_antisymmetric_under_adjacent_swaps() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let e = levi_civita4(a, b, c, d);
                        assert_eq!(levi_civita4(b, a, c, d), -&e);
                        assert_eq!(levi_civita4(a, c, b, d), -&e);
                        assert_eq!(levi_civita4(a, b, d, c), -&e);
                    }
                }
            }
        }
    }

    #[test]
    fn levi_civita3_examples() {
        assert_eq!(levi_civita3(1, 2, 3), 1);
        assert_eq!(levi_civita3(2, 1, 3), -1);
        assert_eq!(levi_civita3(3, 1, 2), 1);
        assert_eq!(levi_civita3(1, 1, 2), 0);
    }
}
