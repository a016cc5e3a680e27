//! Per-momentum verification: constructive identities, oracle agreement,
//! dyad extraction and the Maxwell limit, all at one `(k, κ)`.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::fields::{em_fields, maxwell_limit_check, transversality};
use crate::identities::{CheckResult, Checker};
use crate::kernel::{ComplexRational, Rational, WaveState, DIM};
use crate::momentum::{
    dyad_decompose, momentum_checks, solution_basis, LightlikeMomentum, ProjectorSet, StateLabel,
};
use crate::oracle;
use crate::representation::RepresentationSet;

fn c(n: i64) -> ComplexRational {
    ComplexRational::from_int(n)
}

fn tagged(base: &str, set: &ProjectorSet) -> String {
    format!("{base} @ k={} kappa={}", set.k, set.kappa)
}

/// Expected minimal polynomials, coefficients from degree 0 upward.
pub fn expected_minimal_polynomials(kappa: &Rational) -> [(&'static str, Vec<ComplexRational>); 3] {
    let k = ComplexRational::real(kappa.clone());
    // x(x-κ)² = x³ - 2κx² + κ²x
    let d = vec![
        ComplexRational::zero(),
        &k * &k,
        k.scale(&crate::kernel::int(-2)),
        c(1),
    ];
    [
        ("D", d),
        ("spin_sq", vec![c(0), c(-2), c(1)]),
        ("helicity", vec![c(0), c(-1), c(0), c(1)]),
    ]
}

/// Ranks, kernels and minimal polynomials recomputed by elimination.
pub fn oracle_checks(set: &ProjectorSet) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let mut ck = Checker::new(tagged("oracle_kernel", set));
    let r = oracle::rank(&set.gamma);
    ck.require(r == 4, || format!("rank γ = {r}, expected 4"));
    let ns = oracle::null_space(&set.d);
    ck.require(ns.dimension() == 4, || {
        format!("dim ker D = {}, expected 4", ns.dimension())
    });
    ck.require(
        oracle::same_span(&ns.vectors, &oracle::columns(&set.gamma)),
        || "ker D ≠ range γ".into(),
    );
    match solution_basis(&set.k, &set.kappa) {
        Ok(basis) => {
            ck.require(oracle::same_span(&ns.vectors, &basis), || {
                "ker D ≠ span of solution basis".into()
            });
        }
        Err(e) => {
            ck.require(false, || e.to_string());
        }
    }
    out.push(ck.finish());

    for (name, expected) in expected_minimal_polynomials(&set.kappa) {
        let m = match name {
            "D" => &set.d,
            "spin_sq" => &set.spin_sq,
            _ => &set.helicity,
        };
        let mut ck = Checker::new(tagged(&format!("oracle_minimal_polynomial_{name}"), set));
        match oracle::minimal_polynomial(m, DIM) {
            Ok(p) => {
                ck.require(p == expected, || {
                    format!(
                        "minimal polynomial {}, expected {}",
                        oracle::format_polynomial(&p),
                        oracle::format_polynomial(&expected)
                    )
                });
            }
            Err(e) => {
                ck.require(false, || e.to_string());
            }
        }
        out.push(ck.finish());
    }
    out
}

/// A representative state for a label.
///
/// For the helicity labels this is the column of `Π` at its first nonzero
/// diagonal entry, which is the dyad `Ψ` when `Π` has rank one. For the
/// spin-0 label it is the first column of `Π₍₀₎` with a nonzero scalar slot,
/// falling back to the diagonal rule.
pub fn representative_state(set: &ProjectorSet, label: StateLabel) -> Option<WaveState> {
    let pi = set.state_projector(label);
    let scalar_col = (label == StateLabel::Spin0)
        .then(|| (0..DIM).find(|&j| !pi[(0, j)].is_zero()))
        .flatten();
    scalar_col
        .or_else(|| (0..DIM).find(|&j| !pi[(j, j)].is_zero()))
        .map(|j| pi.column(j))
}

/// Rank one, reconstruction, normalization and eigenvalue checks for each
/// state projector.
pub fn dyad_checks(rep: &RepresentationSet, set: &ProjectorSet) -> Vec<CheckResult> {
    StateLabel::ALL
        .iter()
        .map(|&label| {
            let pi = set.state_projector(label);
            let mut ck = Checker::new(tagged(&format!("dyad_{label}"), set));
            if let Err(e) = oracle::rank_one_check(pi) {
                ck.require(false, || format!("Π: {e}"));
            }
            match dyad_decompose(pi, &rep.eta, label) {
                Ok(dy) => {
                    ck.equal(|| "ΨΨ̄ = Π".into(), &dy.reconstruct(), pi);
                    ck.scalar_zero(|| "Ψ̄Ψ - 1".into(), &(&dy.norm() - &ComplexRational::one()));
                    let psi = &dy.psi;
                    ck.require(set.d.apply(psi).is_zero(), || "DΨ ≠ 0".into());
                    let spin_sq = set.spin_sq.apply(psi);
                    let hel = set.helicity.apply(psi);
                    match label {
                        StateLabel::Spin0 => {
                            ck.require(spin_sq.is_zero(), || "σ²Ψ₍₀₎ ≠ 0".into());
                        }
                        StateLabel::HelicityPlus | StateLabel::HelicityMinus => {
                            let sign = if label == StateLabel::HelicityPlus {
                                1
                            } else {
                                -1
                            };
                            ck.require(hel == psi.scale(&c(sign)), || format!("σ_kΨ ≠ {sign:+}Ψ"));
                            ck.require(spin_sq == psi.scale(&c(2)), || "σ²Ψ ≠ 2Ψ".into());
                        }
                    }
                }
                Err(e) => {
                    ck.require(false, || format!("dyad extraction: {e}"));
                }
            }
            ck.finish()
        })
        .collect()
}

/// Helicity states reduce to transverse Maxwell fields; the spin-0 state
/// carries a nonzero scalar.
pub fn maxwell_checks(set: &ProjectorSet) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for label in [StateLabel::HelicityPlus, StateLabel::HelicityMinus] {
        let mut ck = Checker::new(tagged(&format!("maxwell_limit_{label}"), set));
        match representative_state(set, label) {
            Some(psi) => {
                let m = maxwell_limit_check(&psi, &set.k, &set.kappa);
                if let Some(w) = &m.witness {
                    ck.require(false, || w.clone());
                }
                let (ke, kh) = transversality(&set.k, &em_fields(&psi));
                ck.scalar_zero(|| "k·E".into(), &ke);
                ck.scalar_zero(|| "k·H".into(), &kh);
            }
            None => {
                ck.require(false, || "projector has zero diagonal".into());
            }
        }
        out.push(ck.finish());
    }
    let mut ck = Checker::new(tagged("scalar_carried_by_spin-0", set));
    let ok = representative_state(set, StateLabel::Spin0).is_some_and(|psi| !psi.psi0().is_zero());
    ck.require(ok, || "spin-0 state has ψ₀ = 0".into());
    out.push(ck.finish());
    out
}

/// All per-momentum checks, in report order.
pub fn momentum_suite(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> Result<Vec<CheckResult>> {
    let set = ProjectorSet::compute(rep, k, kappa)?;
    let mut out = momentum_checks(&set);
    out.extend(oracle_checks(&set));
    out.extend(dyad_checks(rep, &set));
    out.extend(maxwell_checks(&set));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

    #[test]
    fn suite_at_axis_momentum() {
        let rep = RepresentationSet::standard();
        let k = LightlikeMomentum::from_ints(0, 0, 1, 1).unwrap();
        let checks = momentum_suite(&rep, &k, &int(1)).unwrap();
        let get = |p: &str| checks.iter().find(|c| c.name.starts_with(p)).unwrap();
        assert!(get("oracle_kernel").passed());
        assert!(get("oracle_minimal_polynomial_D").passed());
        assert!(get("oracle_minimal_polynomial_helicity").passed());
        assert!(get("maxwell_limit_helicity+1").passed());
        assert!(get("maxwell_limit_helicity-1").passed());
        assert!(get("scalar_carried_by_spin-0").passed());
        // σ² is nilpotent on the light cone.
        let w = get("oracle_minimal_polynomial_spin_sq")
            .witness
            .clone()
            .unwrap();
        assert!(w.contains("x^2,"), "{w}");
        assert!(!get("dyad_spin-0").passed());
        let plus = get("dyad_helicity+1");
        assert!(plus.witness.as_deref().unwrap().contains("σ²Ψ ≠ 2Ψ"));
    }
}

/// Properties across the built-in momenta and random points on the light cone.
#[cfg(test)]
mod cross_module {
    use crate::fields::{component_residual, em_fields, transversality, unpack};
    use crate::fixtures::{builtin_momenta, kappa_sweep};
    use crate::kernel::{int, ratio, ComplexRational};
    use crate::momentum::{helicity_operator, spin_squared_eps_form, Orientation};
    use crate::suite::representative_state;
    use crate::{
        oracle, solution_basis, LightlikeMomentum, ProjectorSet, RepresentationSet, StateLabel,
        Zero,
    };
    use proptest::prelude::*;

    #[test]
    fn kernel_of_wave_operator_is_the_solution_basis() {
        let rep = RepresentationSet::standard();
        for k in builtin_momenta().iter().step_by(4) {
            for kappa in kappa_sweep() {
                let set = ProjectorSet::compute(&rep, k, &kappa).unwrap();
                let basis = solution_basis(k, &kappa).unwrap();
                assert!(oracle::same_span(
                    &oracle::null_space(&set.d).vectors,
                    &basis
                ));
                for s in &basis {
                    assert!(component_residual(&unpack(s), k, &kappa)
                        .iter()
                        .all(|r| r.is_zero()));
                }
            }
        }
    }

    #[test]
    fn helicity_states_are_transverse_and_scalar_free() {
        let rep = RepresentationSet::standard();
        for k in builtin_momenta() {
            let set = ProjectorSet::compute(&rep, &k, &int(1)).unwrap();
            for label in [StateLabel::HelicityPlus, StateLabel::HelicityMinus] {
                let psi = representative_state(&set, label).unwrap();
                assert!(psi.psi0().is_zero());
                let (ke, kh) = transversality(&k, &em_fields(&psi));
                assert!(ke.is_zero() && kh.is_zero(), "{k}");
            }
        }
    }

    #[test]
    fn spin_squared_is_nilpotent_on_the_light_cone() {
        let rep = RepresentationSet::standard();
        for k in builtin_momenta() {
            let s = spin_squared_eps_form(&rep, &k);
            assert!(!s.is_zero());
            assert!((&s * &s).is_zero(), "{k}");
            assert_eq!(oracle::rank(&s), 1);
        }
    }

    #[test]
    fn reversing_orientation_negates_helicity() {
        let rep = RepresentationSet::standard();
        for k in builtin_momenta().iter().take(6) {
            let a = ProjectorSet::compute(&rep, k, &int(1)).unwrap();
            let b =
                ProjectorSet::compute_oriented(&rep, k, &int(1), Orientation::Reversed).unwrap();
            assert_eq!(b.helicity, -&a.helicity);
        }
    }

    fn momentum() -> impl Strategy<Value = LightlikeMomentum> {
        // Rational points on the light cone from Pythagorean quadruples
        // (m²+n²-p²-q², 2(mq+np), 2(nq-mp); m²+n²+p²+q²).
        (-4i64..5, -4i64..5, -4i64..5, -4i64..5, 1i64..4)
            .prop_filter("nonzero", |(m, n, p, q, _)| {
                m * m + n * n + p * p + q * q != 0
            })
            .prop_map(|(m, n, p, q, d)| {
                let k1 = m * m + n * n - p * p - q * q;
                let k2 = 2 * (m * q + n * p);
                let k3 = 2 * (n * q - m * p);
                let k0 = m * m + n * n + p * p + q * q;
                LightlikeMomentum::new(ratio(k1, d), ratio(k2, d), ratio(k3, d), ratio(k0, d))
                    .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn helicity_minimal_equation_holds(k in momentum()) {
            let rep = RepresentationSet::standard();
            let h = helicity_operator(&rep, &k);
            let one = ComplexRational::from_int(1);
            prop_assert!((&(&h * &h.shift(&-&one)) * &h.shift(&one)).is_zero());
        }

        #[test]
        fn gamma_has_rank_four(k in momentum(), kappa in prop_oneof![Just(int(1)), Just(int(2)), Just(ratio(1, 3))]) {
            let rep = RepresentationSet::standard();
            let set = ProjectorSet::compute(&rep, &k, &kappa).unwrap();
            prop_assert_eq!(&set.gamma * &set.gamma, set.gamma.clone());
            prop_assert_eq!(oracle::rank(&set.gamma), 4);
            prop_assert!((&set.d * &set.gamma).is_zero());
        }

        #[test]
        fn helicity_projectors_are_rank_one(k in momentum()) {
            let rep = RepresentationSet::standard();
            let set = ProjectorSet::compute(&rep, &k, &int(1)).unwrap();
            prop_assert!(oracle::rank_one_check(&set.pi_plus).is_ok());
            prop_assert!(oracle::rank_one_check(&set.pi_minus).is_ok());
            prop_assert_eq!(set.pi_plus.trace(), ComplexRational::from_int(1));
        }
    }
}
