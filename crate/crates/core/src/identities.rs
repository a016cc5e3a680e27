//! Exact verification of the momentum-independent algebra.
//!
//! Each suite expands both sides of an identity into 11×11 matrices and
//! compares their difference to the exact zero matrix. Index ranges are
//! enumerated exhaustively.

use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::kernel::{ComplexRational, Rational, RepMatrix};
use crate::representation::{BetaFamily, RepresentationSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How far a check is from holding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    ExactZero,
    /// Largest `max(|re|, |im|)` entry of the first nonzero residual.
    MaxAbs(Rational),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::ExactZero => write!(f, "0"),
            Residual::MaxAbs(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Residual {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Outcome of one named identity suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
    pub residual: Residual,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn pass(name: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            residual: Residual::ExactZero,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        witness: impl Into<String>,
        residual: Residual,
    ) -> CheckResult {
        CheckResult {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
            residual,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "[{tag}] {}", self.name)?;
        if let Some(w) = &self.witness {
            write!(f, " (first failure: {w}; residual {})", self.residual)?;
        }
        Ok(())
    }
}

/// Accumulates exact-zero expectations, keeping the first failure.
#[derive(Debug)]
pub struct Checker {
    name: String,
    failure: Option<(String, Residual)>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Checker {
        Checker {
            name: name.into(),
            failure: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    /// Records a failure unless `residual` is the zero matrix.
    pub fn zero(&mut self, what: impl FnOnce() -> String, residual: &RepMatrix) -> bool {
        if residual.is_zero() {
            return true;
        }
        if self.failure.is_none() {
            let (r, c, e) = residual.first_nonzero().expect("nonzero matrix");
            self.failure = Some((
                format!("{} [entry ({r},{c}) = {e}]", what()),
                Residual::MaxAbs(residual.max_abs()),
            ));
        }
        false
    }

    pub fn equal(
        &mut self,
        what: impl FnOnce() -> String,
        lhs: &RepMatrix,
        rhs: &RepMatrix,
    ) -> bool {
        self.zero(what, &(lhs - rhs))
    }

    pub fn scalar_zero(
        &mut self,
        what: impl FnOnce() -> String,
        residual: &ComplexRational,
    ) -> bool {
        if residual.is_zero() {
            return true;
        }
        if self.failure.is_none() {
            self.failure = Some((
                format!("{} [value {residual}]", what()),
                Residual::MaxAbs(residual.max_abs()),
            ));
        }
        false
    }

    /// Records a failure when `ok` is false.
    pub fn require(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok && self.failure.is_none() {
            self.failure = Some((what(), Residual::MaxAbs(crate::kernel::int(1))));
        }
        ok
    }

    pub fn finish(self) -> CheckResult {
        match self.failure {
            None => CheckResult::pass(self.name),
            Some((w, r)) => CheckResult::fail(self.name, w, r),
        }
    }
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// `M·δ` for a Kronecker delta without allocating when it vanishes.
fn times_delta(m: &RepMatrix, d: i64) -> RepMatrix {
    if d == 0 {
        RepMatrix::zero()
    } else {
        m.scale_int(d)
    }
}

/// `P² = P`, `P̄² = P̄`, `P + P̄ = I₁₁`, `α_μP̄ + P̄α_μ = α_μ`, `α_μP + Pα_μ = α_μ`.
pub fn check_projector_relations(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("projector_relations");
    ck.equal(|| "P² = P".into(), &(&rep.p * &rep.p), &rep.p);
    ck.equal(|| "P̄² = P̄".into(), &(&rep.pbar * &rep.pbar), &rep.pbar);
    ck.equal(|| "P + P̄ = I₁₁".into(), &(&rep.p + &rep.pbar), &rep.i11);
    for mu in 1..=4 {
        let a = rep.alpha(mu);
        ck.equal(
            || format!("α{mu}P̄ + P̄α{mu} = α{mu}"),
            &a.anticommutator(&rep.pbar),
            a,
        );
    }
    for mu in 1..=4 {
        let a = rep.alpha(mu);
        ck.equal(
            || format!("α{mu}P + Pα{mu} = α{mu}"),
            &a.anticommutator(&rep.p),
            a,
        );
    }
    ck.finish()
}

/// `α_μ = β⁽¹⁾_μ + β⁽⁰⁾_μ` for every `μ`.
pub fn check_alpha_decomposition(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("alpha_decomposition");
    for mu in 1..=4 {
        let sum = rep.beta(BetaFamily::Beta1, mu) + rep.beta(BetaFamily::Beta0, mu);
        ck.equal(
            || format!("α{mu} = β⁽¹⁾{mu} + β⁽⁰⁾{mu}"),
            rep.alpha(mu),
            &sum,
        );
    }
    ck.finish()
}

/// Trilinear Duffin–Kemmer–Petiau relation
/// `β_μβ_νβ_α + β_αβ_νβ_μ = δ_μν β_α + δ_αν β_μ` over all 64 triples.
// Tensor indices read more clearly than iterator chains here.
#[allow(clippy::needless_range_loop)]
pub fn pdk_relation(name: impl Into<String>, family: &[RepMatrix; 4]) -> CheckResult {
    let mut ck = Checker::new(name);
    let pairs: Vec<Vec<RepMatrix>> = (0..4)
        .map(|m| (0..4).map(|n| &family[m] * &family[n]).collect())
        .collect();
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                let lhs = &(&pairs[mu][nu] * &family[al]) + &(&pairs[al][nu] * &family[mu]);
                let rhs = &times_delta(&family[al], delta(mu, nu))
                    + &times_delta(&family[mu], delta(al, nu));
                if !ck.equal(
                    || format!("(μ,ν,α) = ({},{},{})", mu + 1, nu + 1, al + 1),
                    &lhs,
                    &rhs,
                ) {
                    return ck.finish();
                }
            }
        }
    }
    ck.finish()
}

pub fn check_pdk_algebra(rep: &RepresentationSet, family: BetaFamily) -> CheckResult {
    match family {
        BetaFamily::Beta1 => pdk_relation("pdk_algebra_beta1", &rep.beta1),
        BetaFamily::Beta0 => pdk_relation("pdk_algebra_beta0", &rep.beta0),
    }
}

/// The `α_μ` must *not* satisfy the DKP relation; passes iff some triple
/// violates it.
pub fn check_alpha_violates_pdk(rep: &RepresentationSet) -> CheckResult {
    let probe = pdk_relation("alpha_under_pdk", &rep.alpha);
    match probe.status {
        Status::Fail => CheckResult::pass("alpha_violates_pdk"),
        Status::Pass => CheckResult::fail(
            "alpha_violates_pdk",
            "α family satisfies the trilinear DKP relation",
            Residual::MaxAbs(crate::kernel::int(1)),
        ),
    }
}

/// Symmetrized cubic relation: the six orderings of `α_μα_να_α` sum to
/// `2(δ_μν α_α + δ_αν α_μ + δ_μα α_ν)`.
pub fn check_alpha_algebra(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("alpha_algebra");
    let a = &rep.alpha;
    let pairs: Vec<Vec<RepMatrix>> = (0..4)
        .map(|m| (0..4).map(|n| &a[m] * &a[n]).collect())
        .collect();
    for mu in 0..4 {
        for nu in 0..4 {
            for al in 0..4 {
                let lhs: RepMatrix = [
                    &pairs[mu][nu] * &a[al],
                    &pairs[al][nu] * &a[mu],
                    &pairs[mu][al] * &a[nu],
                    &pairs[nu][al] * &a[mu],
                    &pairs[nu][mu] * &a[al],
                    &pairs[al][mu] * &a[nu],
                ]
                .into_iter()
                .sum();
                let rhs: RepMatrix = [
                    times_delta(&a[al], delta(mu, nu)),
                    times_delta(&a[mu], delta(al, nu)),
                    times_delta(&a[nu], delta(mu, al)),
                ]
                .into_iter()
                .sum();
                let rhs = rhs.scale_int(2);
                if !ck.equal(
                    || format!("(μ,ν,α) = ({},{},{})", mu + 1, nu + 1, al + 1),
                    &lhs,
                    &rhs,
                ) {
                    return ck.finish();
                }
            }
        }
    }
    ck.finish()
}

/// Sample four-vectors (generic complex, not necessarily lightlike) used to
/// probe contracted identities.
pub fn probe_vectors() -> Vec<[ComplexRational; 4]> {
    use crate::kernel::ratio;
    let c = |a: i64, b: i64| ComplexRational::gauss(a, b);
    vec![
        [c(3, 0), c(4, 0), c(0, 0), c(0, 5)],
        [c(1, 0), c(2, 0), c(-2, 0), c(0, 1)],
        [c(0, 0), c(0, 0), c(0, 0), c(0, 2)],
        [c(1, 1), c(-2, 0), c(0, 3), c(5, -1)],
        [
            ComplexRational::real(ratio(1, 2)),
            c(0, 0),
            ComplexRational::real(ratio(-2, 3)),
            ComplexRational::imag(ratio(7, 5)),
        ],
    ]
}

/// Contracting the cubic relation with `k_μk_νk_α` gives `k̂³ = k²k̂`.
pub fn check_khat_cubic(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("khat_cubic_contraction");
    for (n, k) in probe_vectors().iter().enumerate() {
        let kh: RepMatrix = (0..4).map(|m| rep.alpha[m].scale(&k[m])).sum();
        let k_sq = k
            .iter()
            .fold(ComplexRational::zero(), |acc, x| &acc + &(x * x));
        let lhs = &(&kh * &kh) * &kh;
        ck.equal(|| format!("probe vector #{n}"), &lhs, &kh.scale(&k_sq));
    }
    ck.finish()
}

/// `[J_ρσ, J_μν] = δ_σμ J_ρν + δ_ρν J_σμ - δ_ρμ J_σν - δ_σν J_ρμ`.
pub fn check_lorentz_algebra(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("lorentz_algebra");
    for r in 1..=4 {
        for s in 1..=4 {
            for m in 1..=4 {
                for n in 1..=4 {
                    let lhs = rep.j(r, s).commutator(rep.j(m, n));
                    let rhs: RepMatrix = [
                        times_delta(rep.j(r, n), delta(s, m)),
                        times_delta(rep.j(s, m), delta(r, n)),
                        times_delta(rep.j(s, n), -delta(r, m)),
                        times_delta(rep.j(r, m), -delta(s, n)),
                    ]
                    .into_iter()
                    .sum();
                    if !ck.equal(|| format!("(ρ,σ,μ,ν) = ({r},{s},{m},{n})"), &lhs, &rhs) {
                        return ck.finish();
                    }
                }
            }
        }
    }
    ck.finish()
}

/// `[α_λ, J_μν] = δ_λμ α_ν - δ_λν α_μ`.
pub fn check_alpha_lorentz_covariance(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("alpha_lorentz_covariance");
    for l in 1..=4 {
        for m in 1..=4 {
            for n in 1..=4 {
                let lhs = rep.alpha(l).commutator(rep.j(m, n));
                let rhs = &times_delta(rep.alpha(n), delta(l, m))
                    - &times_delta(rep.alpha(m), delta(l, n));
                if !ck.equal(|| format!("(λ,μ,ν) = ({l},{m},{n})"), &lhs, &rhs) {
                    return ck.finish();
                }
            }
        }
    }
    ck.finish()
}

pub fn check_lorentz_commutators(rep: &RepresentationSet) -> Vec<CheckResult> {
    vec![
        check_lorentz_algebra(rep),
        check_alpha_lorentz_covariance(rep),
    ]
}

/// `ηα_i = -α_iη` (i = 1,2,3) and `ηα₄ = α₄η`.
pub fn check_eta_relations(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("eta_relations");
    for i in 1..=3 {
        ck.zero(
            || format!("ηα{i} + α{i}η = 0"),
            &rep.eta.anticommutator(rep.alpha(i)),
        );
    }
    ck.zero(|| "ηα4 - α4η = 0".into(), &rep.eta.commutator(rep.alpha(4)));
    ck.finish()
}

/// `η·(i k̂)` is self-adjoint for real spatial `k` and `k₄ = i k₀`.
pub fn check_eta_hermiticity(rep: &RepresentationSet) -> CheckResult {
    use crate::kernel::ratio;
    let mut ck = Checker::new("eta_hermitian_wave_operator");
    let samples = [
        (3, 4, 0, 5),
        (0, 0, 1, 1),
        (1, 2, 2, 3),
        (-2, 1, 7, 4),
        (0, 0, 0, 1),
    ];
    for (n, (k1, k2, k3, k0)) in samples.into_iter().enumerate() {
        let k = [
            ComplexRational::from_int(k1),
            ComplexRational::from_int(k2),
            ComplexRational::real(ratio(k3, 2)),
            ComplexRational::gauss(0, k0),
        ];
        let kh: RepMatrix = (0..4).map(|m| rep.alpha[m].scale(&k[m])).sum();
        let op = &rep.eta * &kh.scale(&ComplexRational::i());
        ck.equal(|| format!("sample #{n}"), &op, &op.conj_transpose());
    }
    ck.finish()
}

/// Structural properties of the constructed matrices: `J` antisymmetry and
/// scalar-blindness, `α` symmetry, `PP̄ = 0`, `P̄α_μP̄ = 0`, `η² = I`.
pub fn check_representation_invariants(rep: &RepresentationSet) -> CheckResult {
    let mut ck = Checker::new("representation_invariants");
    for m in 1..=4 {
        ck.equal(
            || format!("α{m} symmetric"),
            rep.alpha(m),
            &rep.alpha(m).transpose(),
        );
        ck.zero(
            || format!("P̄α{m}P̄ = 0"),
            &(&(&rep.pbar * rep.alpha(m)) * &rep.pbar),
        );
        for n in 1..=4 {
            ck.zero(
                || format!("J{m}{n} + J{n}{m} = 0"),
                &(rep.j(m, n) + rep.j(n, m)),
            );
            let j = rep.j(m, n);
            let scalar_line =
                (0..crate::kernel::DIM).all(|k| j[(0, k)].is_zero() && j[(k, 0)].is_zero());
            ck.require(scalar_line, || format!("J{m}{n} touches the scalar slot"));
        }
    }
    ck.zero(|| "PP̄ = 0".into(), &(&rep.p * &rep.pbar));
    ck.equal(|| "η² = I".into(), &(&rep.eta * &rep.eta), &rep.i11);
    ck.finish()
}

/// Every momentum-independent suite, in a fixed order.
pub fn run_all(rep: &RepresentationSet) -> Vec<CheckResult> {
    let mut out = vec![
        check_representation_invariants(rep),
        check_projector_relations(rep),
        check_alpha_decomposition(rep),
        check_pdk_algebra(rep, BetaFamily::Beta1),
        check_pdk_algebra(rep, BetaFamily::Beta0),
        check_alpha_violates_pdk(rep),
        check_alpha_algebra(rep),
        check_khat_cubic(rep),
    ];
    out.extend(check_lorentz_commutators(rep));
    out.push(check_eta_relations(rep));
    out.push(check_eta_hermiticity(rep));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::ComponentIndex::*;

    fn flip(m: &mut RepMatrix, r: crate::kernel::ComponentIndex, c: crate::kernel::ComponentIndex) {
        let v = -m.get(r, c);
        m.set(r, c, v);
    }

    #[test]
    fn standard_representation_passes_everything() {
        let rep = RepresentationSet::standard();
        for r in run_all(&rep) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn projector_mutation_is_caught() {
        let mut rep = RepresentationSet::standard();
        rep.p.set(T(2, 3), T(2, 3), ComplexRational::zero());
        let r = check_projector_relations(&rep);
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().starts_with("P + P̄ = I₁₁"));
    }

    #[test]
    fn pbar_square_residual_is_exact_zero() {
        let rep = RepresentationSet::standard();
        assert!((&(&rep.pbar * &rep.pbar) - &rep.pbar).is_zero());
    }

    #[test]
    fn alpha_fails_pdk_but_betas_pass() {
        let rep = RepresentationSet::standard();
        assert!(check_pdk_algebra(&rep, BetaFamily::Beta1).passed());
        assert!(check_pdk_algebra(&rep, BetaFamily::Beta0).passed());
        let a = pdk_relation("alpha", &rep.alpha);
        assert_eq!(a.status, Status::Fail);
        assert!(a.witness.is_some());
    }

    #[test]
    fn alpha_cubes_to_itself() {
        let rep = RepresentationSet::standard();
        for a in &rep.alpha {
            assert_eq!(a.pow(3), *a);
        }
    }

    #[test]
    fn disjoint_alpha_j_commute() {
        let rep = RepresentationSet::standard();
        assert!(rep.alpha(1).commutator(rep.j(2, 3)).is_zero());
    }

    #[test]
    fn alpha_sign_flip_breaks_the_cubic_relation() {
        let mut rep = RepresentationSet::standard();
        flip(&mut rep.alpha[0], V(2), T(1, 2));
        let r = check_alpha_algebra(&rep);
        assert_eq!(r.status, Status::Fail);
        assert!(!run_all(&rep).iter().all(CheckResult::passed));
    }

    #[test]
    fn each_suite_catches_its_mutation() {
        let base = RepresentationSet::standard();

        let mut rep = base.clone();
        flip(&mut rep.beta1[2], T(3, 4), V(4));
        assert!(!check_pdk_algebra(&rep, BetaFamily::Beta1).passed());

        let mut rep = base.clone();
        rep.beta0[1].set(S, V(2), ComplexRational::from_int(2));
        assert!(!check_pdk_algebra(&rep, BetaFamily::Beta0).passed());

        let mut rep = base.clone();
        flip(&mut rep.j[0][1], V(1), V(2));
        assert!(!check_lorentz_algebra(&rep).passed());

        let mut rep = base.clone();
        flip(&mut rep.alpha[3], S, V(4));
        assert!(!check_alpha_lorentz_covariance(&rep).passed());
        assert!(!check_alpha_decomposition(&rep).passed());

        let mut rep = base.clone();
        flip(&mut rep.eta, V(4), V(4));
        assert!(!check_eta_relations(&rep).passed());

        let mut rep = base;
        rep.alpha = rep.beta1.clone();
        assert!(!check_alpha_violates_pdk(&rep).passed());
    }

    #[test]
    fn report_serializes_one_entry_per_check() {
        let rep = RepresentationSet::standard();
        let results = run_all(&rep);
        let v = serde_json::to_value(&results).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), results.len());
        assert_eq!(arr[0]["status"], "pass");
        assert_eq!(arr[0]["residual"], "0");
        assert!(arr[0]["witness"].is_null());
        let names: std::collections::HashSet<_> =
            arr.iter().map(|e| e["name"].as_str().unwrap()).collect();
        assert_eq!(names.len(), arr.len());
    }
}
