//! Independent linear-algebra oracle.
//!
//! Fraction-free (Bareiss) elimination with full pivoting over the Gaussian
//! integers. Rows are cleared of denominators before elimination, which
//! leaves rank and null space unchanged. Nothing here knows about the
//! representation matrices; callers hand in plain matrices and vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::{ComplexRational, ComponentIndex, Rational, RepMatrix, WaveState, DIM};

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn zero() -> GaussInt {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact quotient; Bareiss guarantees divisibility.
    fn div_exact(&self, d: &GaussInt) -> GaussInt {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!(
            (&re % &n).is_zero() && (&im % &n).is_zero(),
            "inexact Bareiss division"
        );
        GaussInt {
            re: re / &n,
            im: im / n,
        }
    }

    fn to_complex(&self) -> ComplexRational {
        ComplexRational::new(
            Rational::from_integer(self.re.clone()),
            Rational::from_integer(self.im.clone()),
        )
    }
}

/// Scales a row of Gaussian rationals by the lcm of its denominators.
fn integer_row(row: &[ComplexRational]) -> Vec<GaussInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.re.denom()).lcm(c.im.denom())
    });
    row.iter()
        .map(|c| GaussInt {
            re: c.re.numer() * (&l / c.re.denom()),
            im: c.im.numer() * (&l / c.im.denom()),
        })
        .collect()
}

/// Upper echelon form from fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<GaussInt>>,
    /// `perm[j]` is the original column now sitting at position `j`.
    perm: Vec<usize>,
    rank: usize,
    cols: usize,
}

fn eliminate(matrix: &[Vec<ComplexRational>], cols: usize) -> Echelon {
    let mut m: Vec<Vec<GaussInt>> = matrix.iter().map(|r| integer_row(r)).collect();
    let nrows = m.len();
    let mut perm: Vec<usize> = (0..cols).collect();
    let mut prev = GaussInt {
        re: BigInt::one(),
        im: BigInt::zero(),
    };
    let mut rank = 0;
    for k in 0..nrows.min(cols) {
        let pivot = (k..nrows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            perm.swap(k, pj);
        }
        for i in k + 1..nrows {
            for j in k + 1..cols {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev);
            }
            m[i][k] = GaussInt::zero();
        }
        prev = m[k][k].clone();
        rank += 1;
    }
    m.truncate(rank);
    Echelon {
        rows: m,
        perm,
        rank,
        cols,
    }
}

impl Echelon {
    /// One null vector per free column, in original column order.
    fn null_vectors(&self) -> Vec<Vec<ComplexRational>> {
        let r = self.rank;
        let u: Vec<Vec<ComplexRational>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(GaussInt::to_complex).collect())
            .collect();
        (r..self.cols)
            .map(|free| {
                let mut x = vec![ComplexRational::zero(); self.cols];
                x[free] = ComplexRational::one();
                for i in (0..r).rev() {
                    let mut acc = ComplexRational::zero();
                    for j in i + 1..self.cols {
                        if !x[j].is_zero() && !u[i][j].is_zero() {
                            acc += &(&u[i][j] * &x[j]);
                        }
                    }
                    x[i] = &(-&acc) / &u[i][i];
                }
                let mut out = vec![ComplexRational::zero(); self.cols];
                for (pos, v) in x.into_iter().enumerate() {
                    out[self.perm[pos]] = v;
                }
                out
            })
            .collect()
    }
}

fn rows_of(m: &RepMatrix) -> Vec<Vec<ComplexRational>> {
    (0..DIM).map(|r| m.row(r).to_vec()).collect()
}

/// Basis of `{v : Mv = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullspaceBasis {
    pub vectors: Vec<WaveState>,
}

impl NullspaceBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

pub fn null_space(m: &RepMatrix) -> NullspaceBasis {
    let e = eliminate(&rows_of(m), DIM);
    NullspaceBasis {
        vectors: e.null_vectors().into_iter().map(WaveState).collect(),
    }
}

pub fn rank(m: &RepMatrix) -> usize {
    eliminate(&rows_of(m), DIM).rank
}

/// Rank of the matrix whose columns are `vectors`.
pub fn rank_of_columns(vectors: &[WaveState]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].0.len();
    let rows: Vec<Vec<ComplexRational>> = (0..n)
        .map(|i| vectors.iter().map(|v| v.0[i].clone()).collect())
        .collect();
    eliminate(&rows, vectors.len()).rank
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[WaveState], b: &[WaveState]) -> bool {
    let ra = rank_of_columns(a);
    let rb = rank_of_columns(b);
    let both: Vec<WaveState> = a.iter().chain(b).cloned().collect();
    ra == rb && rank_of_columns(&both) == ra
}

/// Column space of `m` as a list of its columns.
pub fn columns(m: &RepMatrix) -> Vec<WaveState> {
    (0..DIM).map(|c| m.column(c)).collect()
}

/// Monic minimal polynomial, coefficients from degree 0 upward.
///
/// Found as the first linear dependence among `vec(M⁰), vec(M¹), …`.
pub fn minimal_polynomial(m: &RepMatrix, max_degree: usize) -> Result<Vec<ComplexRational>> {
    let mut powers = vec![RepMatrix::identity()];
    for d in 1..=max_degree {
        let next = powers.last().expect("nonempty") * m;
        powers.push(next);
        // 121 × (d+1) system in the unknown coefficients.
        let rows: Vec<Vec<ComplexRational>> = (0..DIM * DIM)
            .map(|idx| {
                powers
                    .iter()
                    .map(|p| p[(idx / DIM, idx % DIM)].clone())
                    .collect()
            })
            .filter(|row: &Vec<ComplexRational>| row.iter().any(|c| !c.is_zero()))
            .collect();
        let e = eliminate(&rows, d + 1);
        if let Some(v) = e.null_vectors().into_iter().next() {
            let lead = v[d].inv().ok_or(Error::NoMinimalPolynomial(max_degree))?;
            return Ok(v.iter().map(|c| c * &lead).collect());
        }
    }
    Err(Error::NoMinimalPolynomial(max_degree))
}

/// Renders coefficients as a polynomial in `x`, highest degree first.
pub fn format_polynomial(coefficients: &[ComplexRational]) -> String {
    let mut terms = Vec::new();
    for (d, c) in coefficients.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match d {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{d}"),
        };
        let coef = if c.is_one() && d > 0 {
            String::new()
        } else if c.im.is_zero() || c.re.is_zero() {
            c.to_string()
        } else {
            format!("({c})")
        };
        terms.push(format!("{coef}{mono}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// `Ok` iff `m ≠ 0` and every 2×2 minor vanishes; otherwise the first
/// nonzero minor in row-major order is the witness.
pub fn rank_one_check(m: &RepMatrix) -> Result<()> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    for r0 in 0..DIM {
        for r1 in r0 + 1..DIM {
            for c0 in 0..DIM {
                for c1 in c0 + 1..DIM {
                    let v = &(&m[(r0, c0)] * &m[(r1, c1)]) - &(&m[(r0, c1)] * &m[(r1, c0)]);
                    if !v.is_zero() {
                        let l = |p| ComponentIndex::from_position(p).to_string();
                        return Err(Error::NotRankOne {
                            r0: l(r0),
                            r1: l(r1),
                            c0: l(c0),
                            c1: l(c1),
                            value: v.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}
