//! Momentum-space wave operator, spin and helicity operators, their
//! projectors, and the dyad form of the polarization solutions.
//!
//! Conventions: `k₄ = i·k₀`, `ε₁₂₃₄ = -i`, `ε₁₂₃ = +1`, and plane waves
//! `Ψ ∝ exp(i k·x)` so that `∂_μ → i k_μ`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::identities::{CheckResult, Checker};
use crate::kernel::{
    levi_civita3, levi_civita4, mat_poly, parse_rational, AdjointState, ComplexRational,
    ComponentIndex, Rational, RepMatrix, WaveState, DIM,
};
use crate::representation::RepresentationSet;

/// A four-momentum in the imaginary-time convention.
pub trait FourMomentum {
    /// `(k₁, k₂, k₃, k₄)` with `k₄ = i·k₀`.
    fn components(&self) -> [ComplexRational; 4];

    /// `k_μ k_μ = **k**² - k₀²`.
    fn square(&self) -> Rational {
        self.components()
            .iter()
            .fold(Rational::zero(), |acc, c| acc + (c * c).re)
    }
}

fn spatial_sq(k: &[Rational; 3]) -> Rational {
    k.iter().map(|x| x * x).sum()
}

/// Massless momentum with `k₁² + k₂² + k₃² = k₀²` and `k₀ ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LightlikeMomentum {
    spatial: [Rational; 3],
    k0: Rational,
}

impl LightlikeMomentum {
    pub fn new(
        k1: Rational,
        k2: Rational,
        k3: Rational,
        k0: Rational,
    ) -> Result<LightlikeMomentum> {
        if k0.is_zero() {
            return Err(Error::ZeroFrequency);
        }
        let spatial = [k1, k2, k3];
        let s = spatial_sq(&spatial);
        let e = &k0 * &k0;
        if s != e {
            return Err(Error::NotLightlike {
                spatial: s.to_string(),
                energy: e.to_string(),
            });
        }
        Ok(LightlikeMomentum { spatial, k0 })
    }

    pub fn from_ints(k1: i64, k2: i64, k3: i64, k0: i64) -> Result<LightlikeMomentum> {
        use crate::kernel::int;
        Self::new(int(k1), int(k2), int(k3), int(k0))
    }

    /// Parses `"k1,k2,k3"` and `"k0"` written as exact rationals.
    pub fn parse(spatial: &str, k0: &str) -> Result<LightlikeMomentum> {
        let parts: Vec<&str> = spatial.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three spatial components k1,k2,k3, got `{spatial}`"
            )));
        }
        let [a, b, c] = [parts[0], parts[1], parts[2]].map(parse_rational);
        Self::new(a?, b?, c?, parse_rational(k0)?)
    }

    pub fn spatial(&self) -> &[Rational; 3] {
        &self.spatial
    }

    pub fn k0(&self) -> &Rational {
        &self.k0
    }

    /// `λk`; stays lightlike for any nonzero `λ`.
    pub fn scaled(&self, lambda: &Rational) -> Result<LightlikeMomentum> {
        let [a, b, c] = &self.spatial;
        Self::new(a * lambda, b * lambda, c * lambda, &self.k0 * lambda)
    }
}

impl FourMomentum for LightlikeMomentum {
    fn components(&self) -> [ComplexRational; 4] {
        let [a, b, c] = &self.spatial;
        [
            ComplexRational::real(a.clone()),
            ComplexRational::real(b.clone()),
            ComplexRational::real(c.clone()),
            ComplexRational::imag(self.k0.clone()),
        ]
    }
}

impl fmt::Display for LightlikeMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.spatial;
        write!(f, "({a},{b},{c};{})", self.k0)
    }
}

impl fmt::Debug for LightlikeMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k{self}")
    }
}

/// `{"k": ["k1","k2","k3"], "k0": "k0"}`.
impl Serialize for LightlikeMomentum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("LightlikeMomentum", 2)?;
        s.serialize_field(
            "k",
            &self
                .spatial
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
        )?;
        s.serialize_field("k0", &self.k0.to_string())?;
        s.end()
    }
}

/// On-shell massive momentum, `**k**² - k₀² = -m²`, `m > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassiveMomentum {
    spatial: [Rational; 3],
    k0: Rational,
    mass: Rational,
}

impl MassiveMomentum {
    pub fn new(
        k1: Rational,
        k2: Rational,
        k3: Rational,
        k0: Rational,
        mass: Rational,
    ) -> Result<MassiveMomentum> {
        if mass <= Rational::zero() {
            return Err(Error::NonPositiveMass(mass.to_string()));
        }
        let k = MassiveMomentum {
            spatial: [k1, k2, k3],
            k0,
            mass,
        };
        let expected = -(&k.mass * &k.mass);
        let k_sq = k.square();
        if k_sq != expected {
            return Err(Error::OffShell {
                k_sq: k_sq.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(k)
    }

    /// Skips the mass-shell check; used to probe the operator off shell.
    pub fn unchecked(
        k1: Rational,
        k2: Rational,
        k3: Rational,
        k0: Rational,
        mass: Rational,
    ) -> MassiveMomentum {
        MassiveMomentum {
            spatial: [k1, k2, k3],
            k0,
            mass,
        }
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    pub fn is_on_shell(&self) -> bool {
        self.square() == -(&self.mass * &self.mass)
    }
}

impl FourMomentum for MassiveMomentum {
    fn components(&self) -> [ComplexRational; 4] {
        let [a, b, c] = &self.spatial;
        [
            ComplexRational::real(a.clone()),
            ComplexRational::real(b.clone()),
            ComplexRational::real(c.clone()),
            ComplexRational::imag(self.k0.clone()),
        ]
    }
}

/// `k̂ = α_μ k_μ`.
pub fn k_slash<K: FourMomentum + ?Sized>(rep: &RepresentationSet, k: &K) -> RepMatrix {
    k.components()
        .iter()
        .zip(&rep.alpha)
        .map(|(c, a)| a.scale(c))
        .sum()
}

fn kappa_scalar(kappa: &Rational) -> Result<ComplexRational> {
    if kappa.is_zero() {
        Err(Error::ZeroKappa)
    } else {
        Ok(ComplexRational::real(kappa.clone()))
    }
}

/// `D = i k̂ + κP`.
pub fn wave_operator(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> Result<RepMatrix> {
    let kap = kappa_scalar(kappa)?;
    Ok(&k_slash(rep, k).scale(&ComplexRational::i()) + &rep.p.scale(&kap))
}

/// `i k̂ + m`, the momentum form of the massive first-order equation.
pub fn massive_operator(rep: &RepresentationSet, k: &MassiveMomentum) -> RepMatrix {
    k_slash(rep, k)
        .scale(&ComplexRational::i())
        .shift(&ComplexRational::real(k.mass.clone()))
}

/// Projector onto the null space of `D`: `γ = ((D - κ)/κ)²`.
pub fn gamma_projector(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> Result<RepMatrix> {
    let d = wave_operator(rep, k, kappa)?;
    Ok(gamma_from_operator(&d, kappa))
}

fn gamma_from_operator(d: &RepMatrix, kappa: &Rational) -> RepMatrix {
    let shifted = d
        .shift(&ComplexRational::real(-kappa.clone()))
        .scale_rational(&kappa.recip());
    &shifted * &shifted
}

/// `σ²` as the square of the scaled Pauli–Lubanski vector
/// `W_μ = (1/2k₀) ε_μναβ k_ν J_αβ`.
pub fn spin_squared_eps_form(rep: &RepresentationSet, k: &LightlikeMomentum) -> RepMatrix {
    let kc = k.components();
    let inv = ComplexRational::real((Rational::from_integer(2.into()) * k.k0()).recip());
    let mut total = RepMatrix::zero();
    for mu in 1..=4 {
        let mut w = RepMatrix::zero();
        for nu in 1..=4 {
            for a in 1..=4 {
                for b in 1..=4 {
                    let e = levi_civita4(mu, nu, a, b);
                    if e.is_zero() || kc[nu - 1].is_zero() {
                        continue;
                    }
                    w = &w + &rep.j(a, b).scale(&(&e * &kc[nu - 1]));
                }
            }
        }
        let w = w.scale(&inv);
        total = &total + &(&w * &w);
    }
    total
}

/// `σ²` through the contracted generators, `(1/k₀²) J_μσ J_νσ k_μ k_ν`.
pub fn spin_squared_contracted_form(rep: &RepresentationSet, k: &LightlikeMomentum) -> RepMatrix {
    let kc = k.components();
    let mut total = RepMatrix::zero();
    for sigma in 1..=4 {
        let ks: RepMatrix = (1..=4).map(|mu| rep.j(mu, sigma).scale(&kc[mu - 1])).sum();
        total = &total + &(&ks * &ks);
    }
    total.scale_rational(&(k.k0() * k.k0()).recip())
}

/// Squared spin operator. Both routes are evaluated; disagreement is an
/// error rather than a silent preference.
pub fn spin_squared(rep: &RepresentationSet, k: &LightlikeMomentum) -> Result<RepMatrix> {
    let eps = spin_squared_eps_form(rep, k);
    let contracted = spin_squared_contracted_form(rep, k);
    let diff = &eps - &contracted;
    if !diff.is_zero() {
        return Err(Error::SpinFormMismatch(diff.max_abs().to_string()));
    }
    Ok(eps)
}

/// Orientation of the spatial `ε_abc`; reversing it relabels helicity ±1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

/// Helicity `σ_k = -(i/k₀) ε_abc k_a β⁽¹⁾_b β⁽¹⁾_c`.
pub fn helicity_operator(rep: &RepresentationSet, k: &LightlikeMomentum) -> RepMatrix {
    helicity_operator_oriented(rep, k, Orientation::Standard)
}

pub fn helicity_operator_oriented(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
    orientation: Orientation,
) -> RepMatrix {
    let sign = match orientation {
        Orientation::Standard => 1,
        Orientation::Reversed => -1,
    };
    let mut total = RepMatrix::zero();
    for a in 1..=3 {
        let ka = &k.spatial()[a - 1];
        if ka.is_zero() {
            continue;
        }
        for b in 1..=3 {
            for c in 1..=3 {
                let e = levi_civita3(a, b, c) * sign;
                if e == 0 {
                    continue;
                }
                let bb = &rep.beta1[b - 1] * &rep.beta1[c - 1];
                total = &total + &bb.scale_rational(&(ka * crate::kernel::int(e as i64)));
            }
        }
    }
    // -(i/k₀)
    total.scale(&ComplexRational::imag(-k.k0().recip()))
}

/// `(S²₍₀₎, S²₍₁₎) = (1 - σ²/2, σ²/2)`.
pub fn spin_projectors_from(spin_sq: &RepMatrix) -> (RepMatrix, RepMatrix) {
    let half = spin_sq.scale_rational(&crate::kernel::ratio(1, 2));
    (&RepMatrix::identity() - &half, half)
}

pub fn spin_projectors(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
) -> Result<(RepMatrix, RepMatrix)> {
    Ok(spin_projectors_from(&spin_squared(rep, k)?))
}

/// `(Ŝ₍+1₎, Ŝ₍-1₎, Ŝ₍₀₎)` with `Ŝ₍±1₎ = ½σ_k(σ_k ± 1)`, `Ŝ₍₀₎ = 1 - σ_k²`.
pub fn helicity_projectors_from(helicity: &RepMatrix) -> (RepMatrix, RepMatrix, RepMatrix) {
    let half = ComplexRational::real(crate::kernel::ratio(1, 2));
    let sq = helicity * helicity;
    let plus = (&sq + helicity).scale(&half);
    let minus = (&sq - helicity).scale(&half);
    let zero = &RepMatrix::identity() - &sq;
    (plus, minus, zero)
}

pub fn helicity_projectors(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
) -> (RepMatrix, RepMatrix, RepMatrix) {
    helicity_projectors_from(&helicity_operator(rep, k))
}

/// `(Π₍₀₎, Π₍+1₎, Π₍-1₎) = ((1 - σ²/2)γ, Ŝ₍+1₎γ, Ŝ₍-1₎γ)`.
pub fn state_projectors(
    rep: &RepresentationSet,
    k: &LightlikeMomentum,
    kappa: &Rational,
) -> Result<(RepMatrix, RepMatrix, RepMatrix)> {
    let set = ProjectorSet::compute(rep, k, kappa)?;
    Ok((set.pi_0, set.pi_plus, set.pi_minus))
}

/// Everything derived from one `(k, κ)`.
#[derive(Clone, Debug)]
pub struct ProjectorSet {
    pub k: LightlikeMomentum,
    pub kappa: Rational,
    pub khat: RepMatrix,
    pub d: RepMatrix,
    pub gamma: RepMatrix,
    pub spin_sq: RepMatrix,
    pub helicity: RepMatrix,
    pub s2_0: RepMatrix,
    pub s2_1: RepMatrix,
    pub shat_plus: RepMatrix,
    pub shat_minus: RepMatrix,
    pub shat_0: RepMatrix,
    pub pi_0: RepMatrix,
    pub pi_plus: RepMatrix,
    pub pi_minus: RepMatrix,
}

/// Report names of the matrices in a [`ProjectorSet`], in output order.
pub const PROJECTOR_NAMES: [&str; 14] = [
    "khat",
    "D",
    "gamma",
    "spin_sq",
    "helicity",
    "S2_0",
    "S2_1",
    "Shat_plus",
    "Shat_minus",
    "Shat_0",
    "Pi_0",
    "Pi_plus",
    "Pi_minus",
    "Pi_sum",
];

impl ProjectorSet {
    pub fn compute(
        rep: &RepresentationSet,
        k: &LightlikeMomentum,
        kappa: &Rational,
    ) -> Result<ProjectorSet> {
        Self::compute_oriented(rep, k, kappa, Orientation::Standard)
    }

    pub fn compute_oriented(
        rep: &RepresentationSet,
        k: &LightlikeMomentum,
        kappa: &Rational,
        orientation: Orientation,
    ) -> Result<ProjectorSet> {
        let kap = kappa_scalar(kappa)?;
        let khat = k_slash(rep, k);
        let d = &khat.scale(&ComplexRational::i()) + &rep.p.scale(&kap);
        let gamma = gamma_from_operator(&d, kappa);
        let spin_sq = spin_squared(rep, k)?;
        let helicity = helicity_operator_oriented(rep, k, orientation);
        let (s2_0, s2_1) = spin_projectors_from(&spin_sq);
        let (shat_plus, shat_minus, shat_0) = helicity_projectors_from(&helicity);
        let pi_0 = &s2_0 * &gamma;
        let pi_plus = &shat_plus * &gamma;
        let pi_minus = &shat_minus * &gamma;
        Ok(ProjectorSet {
            k: k.clone(),
            kappa: kappa.clone(),
            khat,
            d,
            gamma,
            spin_sq,
            helicity,
            s2_0,
            s2_1,
            shat_plus,
            shat_minus,
            shat_0,
            pi_0,
            pi_plus,
            pi_minus,
        })
    }

    /// Looks up a matrix by report name; `Pi_sum` is `Π₍₀₎ + Π₍+1₎ + Π₍-1₎`.
    pub fn by_name(&self, name: &str) -> Option<RepMatrix> {
        Some(match name {
            "khat" => self.khat.clone(),
            "D" => self.d.clone(),
            "gamma" => self.gamma.clone(),
            "spin_sq" => self.spin_sq.clone(),
            "helicity" => self.helicity.clone(),
            "S2_0" => self.s2_0.clone(),
            "S2_1" => self.s2_1.clone(),
            "Shat_plus" => self.shat_plus.clone(),
            "Shat_minus" => self.shat_minus.clone(),
            "Shat_0" => self.shat_0.clone(),
            "Pi_0" => self.pi_0.clone(),
            "Pi_plus" => self.pi_plus.clone(),
            "Pi_minus" => self.pi_minus.clone(),
            "Pi_sum" => self.pi_sum(),
            _ => return None,
        })
    }

    pub fn pi_sum(&self) -> RepMatrix {
        &(&self.pi_0 + &self.pi_plus) + &self.pi_minus
    }

    pub fn state_projector(&self, label: StateLabel) -> &RepMatrix {
        match label {
            StateLabel::Spin0 => &self.pi_0,
            StateLabel::HelicityPlus => &self.pi_plus,
            StateLabel::HelicityMinus => &self.pi_minus,
        }
    }
}

/// Which pure state a projector or dyad describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateLabel {
    #[serde(rename = "spin-0")]
    Spin0,
    #[serde(rename = "helicity+1")]
    HelicityPlus,
    #[serde(rename = "helicity-1")]
    HelicityMinus,
}

impl StateLabel {
    pub const ALL: [StateLabel; 3] = [
        StateLabel::Spin0,
        StateLabel::HelicityPlus,
        StateLabel::HelicityMinus,
    ];
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StateLabel::Spin0 => "spin-0",
            StateLabel::HelicityPlus => "helicity+1",
            StateLabel::HelicityMinus => "helicity-1",
        })
    }
}

/// A rank-one projector written as `Π = Ψ·Ψ̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyadSolution {
    pub label: StateLabel,
    pub psi: WaveState,
    pub psi_bar: AdjointState,
    /// `c` with `Ψ̄ = c·Ψ⁺η`, if such a constant exists.
    pub eta_ratio: Option<ComplexRational>,
}

impl DyadSolution {
    /// `Ψ̄Ψ`.
    pub fn norm(&self) -> ComplexRational {
        self.psi_bar.contract(&self.psi)
    }

    pub fn reconstruct(&self) -> RepMatrix {
        self.psi.outer(&self.psi_bar)
    }
}

fn minor(m: &RepMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> ComplexRational {
    &(&m[(r0, c0)] * &m[(r1, c1)]) - &(&m[(r0, c1)] * &m[(r1, c0)])
}

fn not_rank_one(m: &RepMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> Error {
    let (a, b) = (r0.min(r1), r0.max(r1));
    let (c, d) = (c0.min(c1), c0.max(c1));
    Error::NotRankOne {
        r0: ComponentIndex::from_position(a).to_string(),
        r1: ComponentIndex::from_position(b).to_string(),
        c0: ComponentIndex::from_position(c).to_string(),
        c1: ComponentIndex::from_position(d).to_string(),
        value: minor(m, a, b, c, d).to_string(),
    }
}

/// Splits a rank-one projector into `Ψ·Ψ̄`.
///
/// The pivot `j*` is the first diagonal index with `Π_{j*j*} ≠ 0`;
/// `Ψ` is column `j*` of `Π` and `Ψ̄` is row `j*` divided by `Π_{j*j*}`,
/// so `Ψ̄Ψ = trace Π` (1 for an idempotent).
pub fn dyad_decompose(pi: &RepMatrix, eta: &RepMatrix, label: StateLabel) -> Result<DyadSolution> {
    let Some(pivot) = (0..DIM).find(|&j| !pi[(j, j)].is_zero()) else {
        let Some((r, c, _)) = pi.first_nonzero() else {
            return Err(Error::ZeroMatrix);
        };
        let (r, c) = (r.position(), c.position());
        for r1 in 0..DIM {
            for c1 in 0..DIM {
                if r1 != r && c1 != c && !minor(pi, r, r1, c, c1).is_zero() {
                    return Err(not_rank_one(pi, r, r1, c, c1));
                }
            }
        }
        return Err(Error::ZeroTrace);
    };
    let p = &pi[(pivot, pivot)];
    for r in 0..DIM {
        for c in 0..DIM {
            if r != pivot && c != pivot && !minor(pi, pivot, r, pivot, c).is_zero() {
                return Err(not_rank_one(pi, pivot, r, pivot, c));
            }
        }
    }
    let psi = pi.column(pivot);
    let inv = p.inv().expect("nonzero pivot");
    let psi_bar = AdjointState(pi.row(pivot).iter().map(|e| e * &inv).collect());

    let adj = psi.adjoint().times(eta);
    let eta_ratio = adj.0.iter().position(|e| !e.is_zero()).and_then(|i| {
        let c = &psi_bar.0[i] / &adj.0[i];
        (adj.scale(&c) == psi_bar).then_some(c)
    });
    Ok(DyadSolution {
        label,
        psi,
        psi_bar,
        eta_ratio,
    })
}

/// The exact solution of `DΨ = 0` with prescribed vector part `ψ_μ`:
/// `ψ₀ = -(i/κ) k_μψ_μ`, `ψ_[μν] = -(i/κ)(k_νψ_μ - k_μψ_ν)`.
pub fn solution_for_vector(
    k: &LightlikeMomentum,
    kappa: &Rational,
    psi: &[ComplexRational; 4],
) -> Result<WaveState> {
    kappa_scalar(kappa)?;
    let kc = k.components();
    let factor = ComplexRational::imag(-kappa.recip());
    let mut state = WaveState::zero();
    let mut dot = ComplexRational::zero();
    for mu in 0..4 {
        dot += &(&kc[mu] * &psi[mu]);
        state[ComponentIndex::vector(mu + 1)] = psi[mu].clone();
    }
    state[ComponentIndex::S] = &factor * &dot;
    for (mu, nu) in crate::kernel::PAIRS {
        let v = &(&kc[nu - 1] * &psi[mu - 1]) - &(&kc[mu - 1] * &psi[nu - 1]);
        state[ComponentIndex::T(mu as u8, nu as u8)] = &factor * &v;
    }
    Ok(state)
}

/// Four independent solutions, one per unit vector part `ψ_μ = e_μ`.
pub fn solution_basis(k: &LightlikeMomentum, kappa: &Rational) -> Result<[WaveState; 4]> {
    let mut out = Vec::with_capacity(4);
    for mu in 0..4 {
        let mut psi: [ComplexRational; 4] = std::array::from_fn(|_| ComplexRational::zero());
        psi[mu] = ComplexRational::one();
        out.push(solution_for_vector(k, kappa, &psi)?);
    }
    Ok(out.try_into().expect("four states"))
}

fn idempotent(ck: &mut Checker, name: &str, m: &RepMatrix) {
    ck.equal(|| format!("{name}² = {name}"), &(m * m), m);
}

/// The constructive momentum-space identities at one `(k, κ)`.
pub fn momentum_checks(set: &ProjectorSet) -> Vec<CheckResult> {
    let tag = format!("k={} kappa={}", set.k, set.kappa);
    let named = |base: &str| format!("{base} @ {tag}");
    let kap = ComplexRational::real(set.kappa.clone());
    let id = RepMatrix::identity();
    let mut out = Vec::new();

    let mut ck = Checker::new(named("wave_operator_minimal_equation"));
    let shifted = set.d.shift(&-&kap);
    ck.zero(|| "D(D-κ)²".into(), &(&set.d * &(&shifted * &shifted)));
    out.push(ck.finish());

    let mut ck = Checker::new(named("gamma_projector"));
    idempotent(&mut ck, "γ", &set.gamma);
    ck.zero(|| "Dγ".into(), &(&set.d * &set.gamma));
    out.push(ck.finish());

    let mut ck = Checker::new(named("spin_squared_minimal_equation"));
    let two = ComplexRational::from_int(2);
    ck.zero(
        || "σ²(σ²-2)".into(),
        &(&set.spin_sq * &set.spin_sq.shift(&-&two)),
    );
    out.push(ck.finish());

    let mut ck = Checker::new(named("helicity_minimal_equation"));
    let one = ComplexRational::one();
    let h = &set.helicity;
    ck.zero(
        || "σ_k(σ_k-1)(σ_k+1)".into(),
        &(&(h * &h.shift(&-&one)) * &h.shift(&one)),
    );
    out.push(ck.finish());

    let mut ck = Checker::new(named("spin_helicity_absorption"));
    let half_sq = set.spin_sq.scale_rational(&crate::kernel::ratio(1, 2));
    ck.equal(|| "(σ²/2)σ_k = σ_k".into(), &(&half_sq * h), h);
    out.push(ck.finish());

    let mut ck = Checker::new(named("spin_projectors"));
    idempotent(&mut ck, "S²₍₀₎", &set.s2_0);
    idempotent(&mut ck, "S²₍₁₎", &set.s2_1);
    ck.zero(|| "S²₍₀₎S²₍₁₎".into(), &(&set.s2_0 * &set.s2_1));
    ck.equal(|| "S²₍₀₎ + S²₍₁₎ = 1".into(), &(&set.s2_0 + &set.s2_1), &id);
    out.push(ck.finish());

    let mut ck = Checker::new(named("helicity_projectors"));
    let hp = [
        ("Ŝ₍+1₎", &set.shat_plus),
        ("Ŝ₍-1₎", &set.shat_minus),
        ("Ŝ₍₀₎", &set.shat_0),
    ];
    for (n, m) in hp {
        idempotent(&mut ck, n, m);
    }
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                ck.zero(|| format!("{}{}", hp[a].0, hp[b].0), &(hp[a].1 * hp[b].1));
            }
        }
    }
    ck.equal(
        || "Ŝ₍+1₎ + Ŝ₍-1₎ + Ŝ₍₀₎ = 1".into(),
        &(&(&set.shat_plus + &set.shat_minus) + &set.shat_0),
        &id,
    );
    ck.equal(
        || "σ_kŜ₍+1₎ = Ŝ₍+1₎".into(),
        &(h * &set.shat_plus),
        &set.shat_plus,
    );
    ck.equal(
        || "σ_kŜ₍-1₎ = -Ŝ₍-1₎".into(),
        &(h * &set.shat_minus),
        &-&set.shat_minus,
    );
    out.push(ck.finish());

    let mut ck = Checker::new(named("projector_commutators"));
    let pairs: [(&str, &RepMatrix, &str, &RepMatrix); 10] = [
        ("S²₍₀₎", &set.s2_0, "k̂", &set.khat),
        ("S²₍₁₎", &set.s2_1, "k̂", &set.khat),
        ("Ŝ₍+1₎", &set.shat_plus, "k̂", &set.khat),
        ("Ŝ₍-1₎", &set.shat_minus, "k̂", &set.khat),
        ("Ŝ₍₀₎", &set.shat_0, "k̂", &set.khat),
        ("S²₍₀₎", &set.s2_0, "Ŝ₍+1₎", &set.shat_plus),
        ("S²₍₀₎", &set.s2_0, "Ŝ₍-1₎", &set.shat_minus),
        ("S²₍₁₎", &set.s2_1, "Ŝ₍+1₎", &set.shat_plus),
        ("S²₍₁₎", &set.s2_1, "Ŝ₍-1₎", &set.shat_minus),
        ("S²₍₀₎", &set.s2_0, "Ŝ₍₀₎", &set.shat_0),
    ];
    for (an, a, bn, b) in pairs {
        ck.zero(|| format!("[{an}, {bn}]"), &a.commutator(b));
    }
    out.push(ck.finish());

    let mut ck = Checker::new(named("state_projectors"));
    let pis = [
        ("Π₍₀₎", &set.pi_0),
        ("Π₍+1₎", &set.pi_plus),
        ("Π₍-1₎", &set.pi_minus),
    ];
    for (n, m) in pis {
        idempotent(&mut ck, n, m);
        ck.zero(|| format!("D{n}"), &(&set.d * m));
        ck.scalar_zero(|| format!("trace {n} - 1"), &(&m.trace() - &one));
    }
    for a in 0..3 {
        for b in 0..3 {
            if a != b {
                ck.zero(
                    || format!("{}{}", pis[a].0, pis[b].0),
                    &(pis[a].1 * pis[b].1),
                );
            }
        }
    }
    out.push(ck.finish());

    out
}

/// Polynomial-identity check that `M = i k̂ + m` satisfies
/// `M(M - m)(M - 2m) = 0` on shell.
pub fn massive_polynomial_residual(rep: &RepresentationSet, k: &MassiveMomentum) -> RepMatrix {
    let m = ComplexRational::real(k.mass.clone());
    let op = massive_operator(rep, k);
    // x(x - m)(x - 2m) = x³ - 3m x² + 2m² x
    let coeffs = [
        ComplexRational::zero(),
        (&m * &m).scale(&crate::kernel::int(2)),
        m.scale(&crate::kernel::int(-3)),
        ComplexRational::one(),
    ];
    mat_poly(&op, &coeffs)
}
