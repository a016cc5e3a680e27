//! The named matrices of the first-order equation `(α_μ ∂_μ + κP)Ψ = 0`.
//!
//! Everything is assembled from elementary matrices `ε^{A,B}` with the
//! antisymmetric pair `[μν]` resolved through [`pair_slot`]. `β⁽¹⁾` and
//! `β⁽⁰⁾` live zero-padded in the full 11-dimensional space so that
//! `α_μ = β⁽¹⁾_μ + β⁽⁰⁾_μ` is a plain matrix sum.

use num_traits::One;

use crate::kernel::matrix::add_signed_unit;
use crate::kernel::{pair_slot, ComplexRational, ComponentIndex, RepMatrix, PAIRS};

fn check_mu(mu: usize) {
    assert!(
        (1..=4).contains(&mu),
        "Lorentz index {mu} out of range 1..=4"
    );
}

/// `β⁽¹⁾_ν = ε^{μ,[μν]} + ε^{[μν],μ}`, summed over `μ`.
pub fn build_beta1(nu: usize) -> RepMatrix {
    check_mu(nu);
    let mut m = RepMatrix::zero();
    for mu in 1..=4 {
        if let (Some(slot), sign) = pair_slot(mu, nu) {
            let v = ComponentIndex::vector(mu);
            add_signed_unit(&mut m, v, slot, sign);
            add_signed_unit(&mut m, slot, v, sign);
        }
    }
    m
}

/// `β⁽⁰⁾_ν = ε^{ν,0} + ε^{0,ν}`.
pub fn build_beta0(nu: usize) -> RepMatrix {
    check_mu(nu);
    let mut m = RepMatrix::zero();
    let v = ComponentIndex::vector(nu);
    add_signed_unit(&mut m, v, ComponentIndex::S, 1);
    add_signed_unit(&mut m, ComponentIndex::S, v, 1);
    m
}

/// `α_ν = ε^{μ,[μν]} + ε^{[μν],μ} + ε^{ν,0} + ε^{0,ν}`.
pub fn build_alpha(nu: usize) -> RepMatrix {
    check_mu(nu);
    let mut m = RepMatrix::zero();
    for mu in 1..=4 {
        if let (Some(slot), sign) = pair_slot(mu, nu) {
            let v = ComponentIndex::vector(mu);
            add_signed_unit(&mut m, v, slot, sign);
            add_signed_unit(&mut m, slot, v, sign);
        }
    }
    let v = ComponentIndex::vector(nu);
    add_signed_unit(&mut m, v, ComponentIndex::S, 1);
    add_signed_unit(&mut m, ComponentIndex::S, v, 1);
    m
}

/// Sum of `½ ε^{[μν],[μν]}` over all ordered `(μ, ν)`: each unordered pair
/// appears twice with sign², so the half cancels exactly.
fn tensor_identity() -> RepMatrix {
    let mut m = RepMatrix::zero();
    let half = crate::kernel::ratio(1, 2);
    for mu in 1..=4 {
        for nu in 1..=4 {
            if let (Some(slot), sign) = pair_slot(mu, nu) {
                let p = slot.position();
                m[(p, p)] +=
                    &ComplexRational::real(half.clone() * crate::kernel::int((sign * sign) as i64));
            }
        }
    }
    m
}

/// `P = ε^{0,0} + ½ ε^{[μν],[μν]}`.
pub fn build_p() -> RepMatrix {
    let mut m = tensor_identity();
    m.set(ComponentIndex::S, ComponentIndex::S, ComplexRational::one());
    m
}

/// `P̄ = ε^{μ,μ}`.
pub fn build_pbar() -> RepMatrix {
    let mut m = RepMatrix::zero();
    for mu in 1..=4 {
        let v = ComponentIndex::vector(mu);
        m.set(v, v, ComplexRational::one());
    }
    m
}

/// `I₁₀ = ε^{μ,μ} + ½ ε^{[μν],[μν]}`, the identity on the vector and tensor
/// slots.
pub fn build_i10() -> RepMatrix {
    &build_pbar() + &tensor_identity()
}

/// Hermitianizing matrix `η = -ε^{0,0} + 2β⁽¹⁾₄² - I₁₀`.
pub fn build_eta() -> RepMatrix {
    let b4 = build_beta1(4);
    let mut eta = &(&b4 * &b4).scale_int(2) - &build_i10();
    eta.set(
        ComponentIndex::S,
        ComponentIndex::S,
        ComplexRational::from_int(-1),
    );
    eta
}

/// Lorentz generator `J_μν = β⁽¹⁾_μ β⁽¹⁾_ν - β⁽¹⁾_ν β⁽¹⁾_μ`.
pub fn build_j(mu: usize, nu: usize) -> RepMatrix {
    build_beta1(mu).commutator(&build_beta1(nu))
}

/// Which `β` family to use where both make sense.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BetaFamily {
    Beta1,
    Beta0,
}

/// Every named matrix of the representation, built once and shared.
///
/// Fields are public so tests can feed deliberately mutated copies to the
/// identity suites.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentationSet {
    pub alpha: [RepMatrix; 4],
    pub beta1: [RepMatrix; 4],
    pub beta0: [RepMatrix; 4],
    pub p: RepMatrix,
    pub pbar: RepMatrix,
    pub eta: RepMatrix,
    /// `j[μ-1][ν-1] = J_μν`.
    pub j: [[RepMatrix; 4]; 4],
    pub i11: RepMatrix,
    pub i10: RepMatrix,
}

impl RepresentationSet {
    pub fn standard() -> RepresentationSet {
        let beta1: [RepMatrix; 4] = std::array::from_fn(|m| build_beta1(m + 1));
        let j = std::array::from_fn(|m| std::array::from_fn(|n| beta1[m].commutator(&beta1[n])));
        RepresentationSet {
            alpha: std::array::from_fn(|m| build_alpha(m + 1)),
            beta0: std::array::from_fn(|m| build_beta0(m + 1)),
            beta1,
            p: build_p(),
            pbar: build_pbar(),
            eta: build_eta(),
            j,
            i11: RepMatrix::identity(),
            i10: build_i10(),
        }
    }

    /// `α_μ`, 1-based.
    pub fn alpha(&self, mu: usize) -> &RepMatrix {
        check_mu(mu);
        &self.alpha[mu - 1]
    }

    pub fn beta(&self, family: BetaFamily, mu: usize) -> &RepMatrix {
        check_mu(mu);
        match family {
            BetaFamily::Beta1 => &self.beta1[mu - 1],
            BetaFamily::Beta0 => &self.beta0[mu - 1],
        }
    }

    /// `J_μν`, 1-based.
    pub fn j(&self, mu: usize, nu: usize) -> &RepMatrix {
        check_mu(mu);
        check_mu(nu);
        &self.j[mu - 1][nu - 1]
    }

    /// Looks up a momentum-independent matrix by its report name
    /// (`alpha1`, `beta1_2`, `beta0_3`, `P`, `Pbar`, `eta`, `J12`, `I11`, `I10`).
    pub fn by_name(&self, name: &str) -> Option<&RepMatrix> {
        let digit = |s: &str| s.parse::<usize>().ok().filter(|d| (1..=4).contains(d));
        match name {
            "P" => Some(&self.p),
            "Pbar" => Some(&self.pbar),
            "eta" => Some(&self.eta),
            "I11" => Some(&self.i11),
            "I10" => Some(&self.i10),
            _ => {
                if let Some(d) = name.strip_prefix("alpha").and_then(digit) {
                    Some(self.alpha(d))
                } else if let Some(d) = name.strip_prefix("beta1_").and_then(digit) {
                    Some(self.beta(BetaFamily::Beta1, d))
                } else if let Some(d) = name.strip_prefix("beta0_").and_then(digit) {
                    Some(self.beta(BetaFamily::Beta0, d))
                } else if let Some(rest) = name.strip_prefix('J').filter(|r| r.len() == 2) {
                    let (a, b) = rest.split_at(1);
                    Some(self.j(digit(a)?, digit(b)?))
                } else {
                    None
                }
            }
        }
    }

    /// All names accepted by [`RepresentationSet::by_name`].
    pub fn names() -> Vec<String> {
        let mut v: Vec<String> = ["P", "Pbar", "eta", "I11", "I10"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        for m in 1..=4 {
            v.push(format!("alpha{m}"));
            v.push(format!("beta1_{m}"));
            v.push(format!("beta0_{m}"));
        }
        for (a, b) in PAIRS {
            v.push(format!("J{a}{b}"));
        }
        v
    }
}

impl Default for RepresentationSet {
    fn default() -> Self {
        RepresentationSet::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ratio, CANONICAL};
    use num_traits::Zero;
    use ComponentIndex::*;

    fn c(n: i64) -> ComplexRational {
        ComplexRational::from_int(n)
    }

    #[test]
    fn alpha4_couples_scalar_and_time_vector() {
        let a4 = build_alpha(4);
        assert_eq!(*a4.get(S, V(4)), c(1));
        assert_eq!(*a4.get(V(4), S), c(1));
    }

    #[test]
    fn alpha1_reverse_pair_sign() {
        assert_eq!(*build_alpha(1).get(V(2), T(1, 2)), c(-1));
    }

    #[test]
    fn alpha_has_eight_unit_entries() {
        for nu in 1..=4 {
            let a = build_alpha(nu);
            assert_eq!(a.nonzero_count(), 8, "alpha{nu}");
            assert!(a
                .nonzero_entries()
                .all(|(_, _, e)| *e == c(1) || *e == c(-1)));
            assert_eq!(a, a.transpose());
        }
    }

    #[test]
    fn beta_split_matches_alpha() {
        for nu in 1..=4 {
            assert!((&(&build_beta1(nu) + &build_beta0(nu)) - &build_alpha(nu)).is_zero());
            assert!(build_beta1(nu).row(0).iter().all(Zero::is_zero));
        }
        let b02 = build_beta0(2);
        assert_eq!(b02.nonzero_count(), 2);
        assert_eq!(*b02.get(S, V(2)), c(1));
        assert_eq!(*b02.get(V(2), S), c(1));
    }

    #[test]
    fn projector_traces() {
        assert_eq!(build_p().trace(), c(7));
        assert_eq!(build_pbar().trace(), c(4));
        assert_eq!(&build_p() + &build_pbar(), RepMatrix::identity());
        assert!((&build_p() * &build_pbar()).is_zero());
    }

    #[test]
    fn eta_diagonal() {
        let eta = build_eta();
        let expected = [-1, 1, 1, 1, -1, -1, -1, 1, -1, 1, 1];
        assert_eq!(eta, RepMatrix::diagonal(expected.map(c)));
        assert_eq!(&eta * &eta, RepMatrix::identity());
        let a4 = build_alpha(4);
        assert!(eta.commutator(&a4).is_zero());
    }

    #[test]
    fn j_antisymmetric_and_blind_to_scalar() {
        for mu in 1..=4 {
            assert!(build_j(mu, mu).is_zero());
            for nu in 1..=4 {
                assert!((&build_j(mu, nu) + &build_j(nu, mu)).is_zero());
            }
        }
        let j12 = build_j(1, 2);
        for k in 0..11 {
            assert!(j12[(0, k)].is_zero() && j12[(k, 0)].is_zero());
        }
    }

    #[test]
    fn entries_are_small_rationals() {
        let rep = RepresentationSet::standard();
        let allowed = [
            c(0),
            c(1),
            c(-1),
            c(2),
            c(-2),
            ComplexRational::real(ratio(1, 2)),
            ComplexRational::real(ratio(-1, 2)),
        ];
        for name in RepresentationSet::names() {
            let m = rep.by_name(&name).unwrap();
            for r in CANONICAL {
                for col in CANONICAL {
                    assert!(
                        allowed.contains(m.get(r, col)),
                        "{name} ({r},{col}) = {}",
                        m.get(r, col)
                    );
                }
            }
        }
    }

    #[test]
    fn sector_structure() {
        let rep = RepresentationSet::standard();
        for a in &rep.alpha {
            assert!((&(&rep.pbar * a) * &rep.pbar).is_zero());
        }
    }

    #[test]
    fn lookup_by_name() {
        let rep = RepresentationSet::standard();
        assert_eq!(rep.by_name("J34"), Some(rep.j(3, 4)));
        assert_eq!(rep.by_name("alpha2"), Some(rep.alpha(2)));
        assert!(rep.by_name("alpha5").is_none());
        assert!(rep.by_name("J55").is_none());
        assert!(rep.by_name("gamma").is_none());
    }
}
