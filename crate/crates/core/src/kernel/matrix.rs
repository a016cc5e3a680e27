//! Dense 11×11 matrices and state vectors over [`ComplexRational`].

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::index::{pair_slot, ComponentIndex, CANONICAL, DIM};
use super::scalar::{ComplexRational, Rational};

/// Square matrix on the field space, rows and columns in canonical
/// [`ComponentIndex`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepMatrix {
    entries: Vec<ComplexRational>,
}

impl RepMatrix {
    pub fn zero() -> RepMatrix {
        RepMatrix {
            entries: vec![ComplexRational::zero(); DIM * DIM],
        }
    }

    pub fn identity() -> RepMatrix {
        let mut m = RepMatrix::zero();
        for i in 0..DIM {
            m[(i, i)] = ComplexRational::one();
        }
        m
    }

    /// Diagonal matrix from canonical-order entries.
    pub fn diagonal<I: IntoIterator<Item = ComplexRational>>(diag: I) -> RepMatrix {
        let mut m = RepMatrix::zero();
        for (i, d) in diag.into_iter().enumerate().take(DIM) {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> ComplexRational) -> RepMatrix {
        let mut entries = Vec::with_capacity(DIM * DIM);
        for r in 0..DIM {
            for c in 0..DIM {
                entries.push(f(r, c));
            }
        }
        RepMatrix { entries }
    }

    pub fn get(&self, row: ComponentIndex, col: ComponentIndex) -> &ComplexRational {
        &self[(row.position(), col.position())]
    }

    pub fn set(&mut self, row: ComponentIndex, col: ComponentIndex, value: ComplexRational) {
        self[(row.position(), col.position())] = value;
    }

    pub fn row(&self, r: usize) -> &[ComplexRational] {
        &self.entries[r * DIM..(r + 1) * DIM]
    }

    pub fn column(&self, c: usize) -> WaveState {
        WaveState::from_fn(|r| self[(r, c)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(
        &self,
    ) -> impl Iterator<Item = (ComponentIndex, ComponentIndex, &ComplexRational)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(p, e)| (CANONICAL[p / DIM], CANONICAL[p % DIM], e))
    }

    pub fn trace(&self) -> ComplexRational {
        let mut t = ComplexRational::zero();
        for i in 0..DIM {
            t += &self[(i, i)];
        }
        t
    }

    pub fn transpose(&self) -> RepMatrix {
        RepMatrix::from_fn(|r, c| self[(c, r)].clone())
    }

    pub fn conj_transpose(&self) -> RepMatrix {
        RepMatrix::from_fn(|r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: &ComplexRational) -> RepMatrix {
        if s.is_zero() {
            return RepMatrix::zero();
        }
        RepMatrix {
            entries: self
                .entries
                .iter()
                .map(|e| if e.is_zero() { e.clone() } else { e * s })
                .collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> RepMatrix {
        RepMatrix {
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> RepMatrix {
        self.scale_rational(&super::scalar::int(n))
    }

    /// `self + s·I`.
    pub fn shift(&self, s: &ComplexRational) -> RepMatrix {
        let mut m = self.clone();
        for i in 0..DIM {
            m[(i, i)] += s;
        }
        m
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &RepMatrix) -> RepMatrix {
        &(self * other) - &(other * self)
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &RepMatrix) -> RepMatrix {
        &(self * other) + &(other * self)
    }

    pub fn pow(&self, n: u32) -> RepMatrix {
        let mut acc = RepMatrix::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Largest `max(|re|, |im|)` over all entries; zero for the zero matrix.
    pub fn max_abs(&self) -> Rational {
        self.entries
            .iter()
            .map(ComplexRational::max_abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(ComponentIndex, ComponentIndex, &ComplexRational)> {
        self.nonzero_entries().next()
    }

    pub fn apply(&self, v: &WaveState) -> WaveState {
        WaveState::from_fn(|r| {
            let mut acc = ComplexRational::zero();
            for (c, e) in self.row(r).iter().enumerate() {
                if !e.is_zero() && !v.0[c].is_zero() {
                    acc += &(e * &v.0[c]);
                }
            }
            acc
        })
    }
}

impl Index<(usize, usize)> for RepMatrix {
    type Output = ComplexRational;
    fn index(&self, (r, c): (usize, usize)) -> &ComplexRational {
        &self.entries[r * DIM + c]
    }
}

impl IndexMut<(usize, usize)> for RepMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut ComplexRational {
        &mut self.entries[r * DIM + c]
    }
}

impl<'a> Add<&'a RepMatrix> for &'a RepMatrix {
    type Output = RepMatrix;
    fn add(self, rhs: &RepMatrix) -> RepMatrix {
        RepMatrix {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a RepMatrix> for &'a RepMatrix {
    type Output = RepMatrix;
    fn sub(self, rhs: &RepMatrix) -> RepMatrix {
        RepMatrix {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a RepMatrix> for &'a RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        // Representation matrices are sparse; only touch nonzero pairs.
        let rhs_rows: Vec<Vec<usize>> = (0..DIM)
            .map(|k| (0..DIM).filter(|&j| !rhs[(k, j)].is_zero()).collect())
            .collect();
        let mut out = RepMatrix::zero();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for &j in &rhs_rows[k] {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += &p;
                }
            }
        }
        out
    }
}

impl Neg for &RepMatrix {
    type Output = RepMatrix;
    fn neg(self) -> RepMatrix {
        RepMatrix {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RepMatrix {
            type Output = RepMatrix;
            fn $m(self, rhs: RepMatrix) -> RepMatrix {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RepMatrix> for RepMatrix {
            type Output = RepMatrix;
            fn $m(self, rhs: &RepMatrix) -> RepMatrix {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<'a> std::iter::Sum<&'a RepMatrix> for RepMatrix {
    fn sum<I: Iterator<Item = &'a RepMatrix>>(iter: I) -> RepMatrix {
        iter.fold(RepMatrix::zero(), |acc, m| &acc + m)
    }
}

impl std::iter::Sum for RepMatrix {
    fn sum<I: Iterator<Item = RepMatrix>>(iter: I) -> RepMatrix {
        iter.fold(RepMatrix::zero(), |acc, m| &acc + &m)
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1).max(3);
        write!(f, "{:>5}", "")?;
        for c in CANONICAL {
            write!(f, " {:>width$}", c.to_string())?;
        }
        writeln!(f)?;
        for (r, label) in CANONICAL.iter().enumerate() {
            write!(f, "{:>5}", label.to_string())?;
            for cell in &cells[r * DIM..(r + 1) * DIM] {
                write!(f, " {cell:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMatrix {{ ")?;
        for (r, c, e) in self.nonzero_entries() {
            write!(f, "({r},{c})={e} ")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRecord {
    row: String,
    col: String,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixRecord {
    dim: usize,
    entries: Vec<EntryRecord>,
}

/// Row-major list of the nonzero entries, each labelled by component and
/// written as exact `p/q` strings. Absent entries are zero.
impl Serialize for RepMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRecord {
            dim: DIM,
            entries: self
                .nonzero_entries()
                .map(|(r, c, e)| EntryRecord {
                    row: r.to_string(),
                    col: c.to_string(),
                    re: e.re.to_string(),
                    im: e.im.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = MatrixRecord::deserialize(deserializer)?;
        if rec.dim != DIM {
            return Err(D::Error::custom(format!(
                "expected dim {DIM}, got {}",
                rec.dim
            )));
        }
        let mut m = RepMatrix::zero();
        for e in rec.entries {
            let row: ComponentIndex = e.row.parse().map_err(D::Error::custom)?;
            let col: ComponentIndex = e.col.parse().map_err(D::Error::custom)?;
            let re = super::scalar::parse_rational(&e.re).map_err(D::Error::custom)?;
            let im = super::scalar::parse_rational(&e.im).map_err(D::Error::custom)?;
            m.set(row, col, ComplexRational::new(re, im));
        }
        Ok(m)
    }
}

/// Elementary matrix `ε^{A,B}`: a single unit entry at row `A`, column `B`.
pub fn eps_matrix(a: ComponentIndex, b: ComponentIndex) -> RepMatrix {
    let mut m = RepMatrix::zero();
    m.set(a, b, ComplexRational::one());
    m
}

/// Adds `sign·ε^{A,B}` in place, resolving a signed pair slot.
pub(crate) fn add_signed_unit(m: &mut RepMatrix, a: ComponentIndex, b: ComponentIndex, sign: i8) {
    let p = (a.position(), b.position());
    m[p] += &ComplexRational::from_int(sign as i64);
}

/// Evaluates `Σ cᵢ Mⁱ` (with `M⁰ = I`) by Horner's rule.
pub fn mat_poly(m: &RepMatrix, coefficients: &[ComplexRational]) -> RepMatrix {
    let mut acc = RepMatrix::zero();
    for c in coefficients.iter().rev() {
        acc = (&acc * m).shift(c);
    }
    acc
}

/// Column state `Ψ` with 11 components in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WaveState(pub Vec<ComplexRational>);

impl WaveState {
    pub fn zero() -> WaveState {
        WaveState(vec![ComplexRational::zero(); DIM])
    }

    pub fn from_fn(f: impl FnMut(usize) -> ComplexRational) -> WaveState {
        WaveState((0..DIM).map(f).collect())
    }

    /// Unit vector on one slot.
    pub fn basis(slot: ComponentIndex) -> WaveState {
        let mut v = WaveState::zero();
        v[slot] = ComplexRational::one();
        v
    }

    pub fn psi0(&self) -> &ComplexRational {
        &self[ComponentIndex::S]
    }

    /// `ψ_μ`, `μ ∈ 1..=4`.
    pub fn psi(&self, mu: usize) -> &ComplexRational {
        &self[ComponentIndex::vector(mu)]
    }

    /// Signed `ψ_[μν]`: `ψ_[νμ] = -ψ_[μν]` and `ψ_[μμ] = 0`.
    pub fn tensor(&self, mu: usize, nu: usize) -> ComplexRational {
        match pair_slot(mu, nu) {
            (Some(slot), 1) => self[slot].clone(),
            (Some(slot), _) => -&self[slot],
            (None, _) => ComplexRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &ComplexRational) -> WaveState {
        WaveState(self.0.iter().map(|e| e * s).collect())
    }

    pub fn add(&self, other: &WaveState) -> WaveState {
        WaveState(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WaveState) -> WaveState {
        WaveState(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `Ψ⁺`: conjugate transpose as a row.
    pub fn adjoint(&self) -> AdjointState {
        AdjointState(self.0.iter().map(ComplexRational::conj).collect())
    }

    /// Outer product `Ψ·Φ̄`.
    pub fn outer(&self, row: &AdjointState) -> RepMatrix {
        RepMatrix::from_fn(|r, c| &self.0[r] * &row.0[c])
    }
}

impl Index<ComponentIndex> for WaveState {
    type Output = ComplexRational;
    fn index(&self, i: ComponentIndex) -> &ComplexRational {
        &self.0[i.position()]
    }
}

impl IndexMut<ComponentIndex> for WaveState {
    fn index_mut(&mut self, i: ComponentIndex) -> &mut ComplexRational {
        &mut self.0[i.position()]
    }
}

impl fmt::Debug for WaveState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

impl fmt::Display for WaveState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = CANONICAL
            .iter()
            .zip(&self.0)
            .map(|(c, e)| format!("{c}={e}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Row state `Ψ̄`, contracted on the left.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AdjointState(pub Vec<ComplexRational>);

impl AdjointState {
    /// `Φ̄Ψ`.
    pub fn contract(&self, v: &WaveState) -> ComplexRational {
        let mut acc = ComplexRational::zero();
        for (a, b) in self.0.iter().zip(&v.0) {
            acc += &(a * b);
        }
        acc
    }

    /// `Φ̄·M`.
    pub fn times(&self, m: &RepMatrix) -> AdjointState {
        AdjointState(
            (0..DIM)
                .map(|c| {
                    let mut acc = ComplexRational::zero();
                    for r in 0..DIM {
                        acc += &(&self.0[r] * &m[(r, c)]);
                    }
                    acc
                })
                .collect(),
        )
    }

    pub fn scale(&self, s: &ComplexRational) -> AdjointState {
        AdjointState(self.0.iter().map(|e| e * s).collect())
    }
}

impl fmt::Debug for AdjointState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}
