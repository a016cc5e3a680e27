//! Named field components, electric and magnetic fields, and the
//! component-form field equations.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::identities::{CheckResult, Residual};
use crate::kernel::{
    levi_civita3, pair_slot, ComplexRational, ComponentIndex, Rational, WaveState, PAIRS,
};
use crate::momentum::{FourMomentum, LightlikeMomentum};

/// `(ψ₀, ψ_μ, ψ_[μν])` with the tensor stored on ordered pairs `μ < ν`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldComponents {
    pub psi0: ComplexRational,
    pub psi: [ComplexRational; 4],
    /// `ψ_[μν]` for the pairs in [`PAIRS`] order.
    pub f: [ComplexRational; 6],
}

impl FieldComponents {
    /// Signed access `ψ_[μν]`, with `ψ_[νμ] = -ψ_[μν]` and zero on the diagonal.
    pub fn tensor(&self, mu: usize, nu: usize) -> ComplexRational {
        match pair_slot(mu, nu) {
            (Some(ComponentIndex::T(a, b)), sign) => {
                let idx = PAIRS
                    .iter()
                    .position(|&p| p == (a as usize, b as usize))
                    .expect("ordered pair");
                if sign < 0 {
                    -&self.f[idx]
                } else {
                    self.f[idx].clone()
                }
            }
            _ => ComplexRational::zero(),
        }
    }
}

pub fn pack(fc: &FieldComponents) -> WaveState {
    let mut v = Vec::with_capacity(11);
    v.push(fc.psi0.clone());
    v.extend(fc.psi.iter().cloned());
    v.extend(fc.f.iter().cloned());
    WaveState(v)
}

pub fn unpack(state: &WaveState) -> FieldComponents {
    let s = &state.0;
    FieldComponents {
        psi0: s[0].clone(),
        psi: std::array::from_fn(|i| s[1 + i].clone()),
        f: std::array::from_fn(|i| s[5 + i].clone()),
    }
}

/// Electric and magnetic fields, `E_m = iψ_[m4]` and `H_m = ½ε_mnk ψ_[nk]`.
///
/// In the imaginary-time convention `E` comes out imaginary for real tensor
/// slots; it is reported as is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EMFields {
    #[serde(rename = "E")]
    pub e: [ComplexRational; 3],
    #[serde(rename = "H")]
    pub h: [ComplexRational; 3],
}

pub fn em_fields(state: &WaveState) -> EMFields {
    let e = std::array::from_fn(|m| state.tensor(m + 1, 4).mul_i());
    let h = std::array::from_fn(|m| {
        let mut acc = ComplexRational::zero();
        for n in 1..=3 {
            for k in 1..=3 {
                match levi_civita3(m + 1, n, k) {
                    1 => acc += &state.tensor(n, k),
                    -1 => acc -= &state.tensor(n, k),
                    _ => {}
                }
            }
        }
        acc.scale(&crate::kernel::ratio(1, 2))
    });
    EMFields { e, h }
}

fn dot3(k: &[Rational; 3], v: &[ComplexRational; 3]) -> ComplexRational {
    k.iter()
        .zip(v)
        .fold(ComplexRational::zero(), |acc, (a, b)| acc + b.scale(a))
}

/// `(**k**·**E**, **k**·**H**)`.
pub fn transversality(
    k: &LightlikeMomentum,
    fields: &EMFields,
) -> (ComplexRational, ComplexRational) {
    (dot3(k.spatial(), &fields.e), dot3(k.spatial(), &fields.h))
}

/// The eleven component equations with `∂_μ → ik_μ`, in canonical slot
/// order: the scalar equation, four vector equations, six tensor equations.
pub fn component_residual(
    fc: &FieldComponents,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> [ComplexRational; 11] {
    let kc = k.components();
    let ik: [ComplexRational; 4] = std::array::from_fn(|m| kc[m].mul_i());
    let kap = ComplexRational::real(kappa.clone());
    let mut out: [ComplexRational; 11] = Default::default();

    // ik_μψ_μ + κψ₀
    let mut s = &kap * &fc.psi0;
    for (a, b) in ik.iter().zip(&fc.psi) {
        s += &(a * b);
    }
    out[0] = s;

    // ik_νψ_[μν] + ik_μψ₀
    for mu in 1..=4 {
        let mut v = &ik[mu - 1] * &fc.psi0;
        for nu in 1..=4 {
            v += &(&ik[nu - 1] * &fc.tensor(mu, nu));
        }
        out[mu] = v;
    }

    // ik_νψ_μ - ik_μψ_ν + κψ_[μν]
    for (p, &(mu, nu)) in PAIRS.iter().enumerate() {
        let a = &ik[nu - 1] * &fc.psi[mu - 1];
        let b = &ik[mu - 1] * &fc.psi[nu - 1];
        out[5 + p] = &(&a - &b) + &(&kap * &fc.f[p]);
    }
    out
}

/// Passes iff `ψ₀ = 0` and the remaining component equations, now the
/// source-free Maxwell equations, hold exactly.
pub fn maxwell_limit_check(
    state: &WaveState,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> CheckResult {
    let name = format!("maxwell_limit @ k={k} kappa={kappa}");
    if !state.psi0().is_zero() {
        return CheckResult::fail(
            name,
            format!("scalar present: ψ₀ = {}", state.psi0()),
            Residual::MaxAbs(state.psi0().max_abs()),
        );
    }
    let residual = component_residual(&unpack(state), k, kappa);
    match residual.iter().enumerate().find(|(_, r)| !r.is_zero()) {
        None => CheckResult::pass(name),
        Some((slot, r)) => {
            let max = residual
                .iter()
                .map(|r| r.max_abs())
                .max()
                .unwrap_or_default();
            CheckResult::fail(
                name,
                format!(
                    "{} equation residual {r}",
                    ComponentIndex::from_position(slot)
                ),
                Residual::MaxAbs(max),
            )
        }
    }
}

/// Field-state JSON: `{"psi0", "psi", "F": {"12": …}, "E", "H"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldReport {
    pub psi0: ComplexRational,
    pub psi: [ComplexRational; 4],
    #[serde(rename = "F")]
    pub f: BTreeMap<String, ComplexRational>,
    #[serde(rename = "E")]
    pub e: [ComplexRational; 3],
    #[serde(rename = "H")]
    pub h: [ComplexRational; 3],
}

impl FieldReport {
    pub fn new(state: &WaveState) -> FieldReport {
        let fc = unpack(state);
        let EMFields { e, h } = em_fields(state);
        let f = PAIRS
            .iter()
            .zip(fc.f.iter())
            .map(|(&(m, n), c)| (format!("{m}{n}"), c.clone()))
            .collect();
        FieldReport {
            psi0: fc.psi0,
            psi: fc.psi,
            f,
            e,
            h,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};
    use crate::momentum::{solution_basis, solution_for_vector, wave_operator};
    use crate::representation::RepresentationSet;
    use proptest::prelude::*;
    use ComponentIndex::*;

    fn c(a: i64, b: i64) -> ComplexRational {
        ComplexRational::gauss(a, b)
    }

    fn k(a: i64, b: i64, cc: i64, k0: i64) -> LightlikeMomentum {
        LightlikeMomentum::from_ints(a, b, cc, k0).unwrap()
    }

    #[test]
    fn pack_places_scalar_first() {
        let fc = FieldComponents {
            psi0: c(1, 0),
            ..Default::default()
        };
        assert_eq!(pack(&fc), WaveState::basis(S));
    }

    #[test]
    fn signed_tensor_access() {
        let mut fc = FieldComponents::default();
        fc.f[0] = c(2, 1);
        assert_eq!(fc.tensor(1, 2), c(2, 1));
        assert_eq!(fc.tensor(2, 1), c(-2, -1));
        assert!(fc.tensor(2, 2).is_zero());
    }

    #[test]
    fn em_field_examples() {
        let f = em_fields(&WaveState::basis(T(1, 4)));
        assert_eq!(f.e, [c(0, 1), c(0, 0), c(0, 0)]);
        let f = em_fields(&WaveState::basis(T(1, 2)));
        assert_eq!(f.h, [c(0, 0), c(0, 0), c(1, 0)]);
        assert_eq!(f.e, [c(0, 0), c(0, 0), c(0, 0)]);
    }

    #[test]
    fn transverse_mode_fields() {
        let kk = k(0, 0, 1, 1);
        let state = &solution_basis(&kk, &int(1)).unwrap()[0];
        let f = em_fields(state);
        assert_eq!(f.e, [c(0, 1), c(0, 0), c(0, 0)]);
        assert_eq!(f.h, [c(0, 0), c(0, 1), c(0, 0)]);
        assert_eq!(transversality(&kk, &f), (c(0, 0), c(0, 0)));
        assert!(maxwell_limit_check(state, &kk, &int(1)).passed());
    }

    #[test]
    fn scalar_substitution_residuals() {
        let fc = FieldComponents {
            psi0: c(1, 0),
            ..Default::default()
        };
        let r = component_residual(&fc, &k(0, 0, 1, 1), &int(1));
        assert_eq!(r[0], c(1, 0));
        // ik_μ with k = (0, 0, 1, i)
        assert_eq!(&r[1..5], &[c(0, 0), c(0, 0), c(0, 1), c(-1, 0)]);
        assert!(r[5..].iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solutions_have_zero_component_residual() {
        for kk in [k(3, 4, 0, 5), k(0, 0, 1, -1)] {
            for kappa in [int(1), int(2), ratio(1, 3)] {
                for s in solution_basis(&kk, &kappa).unwrap() {
                    assert!(component_residual(&unpack(&s), &kk, &kappa)
                        .iter()
                        .all(|r| r.is_zero()));
                }
            }
        }
    }

    #[test]
    fn maxwell_limit_cases() {
        let kk = k(3, 4, 0, 5);
        let one = int(1);
        let kc = kk.components();
        let gauge = solution_for_vector(&kk, &one, &kc).unwrap();
        assert!(maxwell_limit_check(&gauge, &kk, &one).passed());
        let f = em_fields(&gauge);
        assert!(f.e.iter().chain(&f.h).all(|x| x.is_zero()));

        let time = &solution_basis(&kk, &one).unwrap()[3];
        let r = maxwell_limit_check(time, &kk, &one);
        assert!(!r.passed());
        assert!(r.witness.unwrap().contains("scalar present"));
    }

    #[test]
    fn field_report_json_shape() {
        let v = serde_json::to_value(FieldReport::new(&WaveState::basis(T(1, 4)))).unwrap();
        assert_eq!(v["F"]["14"]["re"], "1");
        assert_eq!(v["E"][0]["im"], "1");
        assert_eq!(v["psi"].as_array().unwrap().len(), 4);
    }

    fn small() -> impl Strategy<Value = ComplexRational> {
        (-5i64..6, -5i64..6, 1i64..4)
            .prop_map(|(a, b, d)| ComplexRational::new(ratio(a, d), ratio(b, d)))
    }

    fn state() -> impl Strategy<Value = WaveState> {
        proptest::collection::vec(small(), 11).prop_map(WaveState)
    }

    proptest! {
        #[test]
        fn pack_unpack_round_trip(s in state()) {
            prop_assert_eq!(pack(&unpack(&s)), s);
        }

        #[test]
        fn em_fields_linear(a in small(), b in small(), s1 in state(), s2 in state()) {
            let lhs = em_fields(&s1.scale(&a).add(&s2.scale(&b)));
            let (f1, f2) = (em_fields(&s1), em_fields(&s2));
            for m in 0..3 {
                prop_assert_eq!(&lhs.e[m], &(&(&a * &f1.e[m]) + &(&b * &f2.e[m])));
                prop_assert_eq!(&lhs.h[m], &(&(&a * &f1.h[m]) + &(&b * &f2.h[m])));
            }
        }

        #[test]
        fn component_form_matches_matrix_form(s in state(), which in 0usize..4, kappa in prop_oneof![Just(int(1)), Just(int(2)), Just(ratio(1, 3))]) {
            let kk = [k(3, 4, 0, 5), k(0, 0, 1, 1), k(1, 2, 2, -3), k(0, -5, 12, 13)][which].clone();
            let rep = RepresentationSet::standard();
            let matrix = wave_operator(&rep, &kk, &kappa).unwrap().apply(&s);
            prop_assert_eq!(component_residual(&unpack(&s), &kk, &kappa).to_vec(), matrix.0);
        }
    }
}
