//! JSON encodings of complex numbers, matrices, polynomials and rational matrix functions.

use serde::{Deserialize, Serialize};
use takagi_numeric::{CMatrix, Complex64, DomainKind};
use takagi_rational::{Poly, RationalError, RationalMVF};

/// A complex number as `[re, im]`.
pub type JComplex = [f64; 2];
/// A matrix as an array of rows.
pub type JMatrix = Vec<Vec<JComplex>>;
/// A polynomial as ascending coefficients.
pub type JPoly = Vec<JComplex>;

/// An input number: either `[re, im]` or a bare real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JNum {
    Complex(JComplex),
    Real(f64),
}

impl JNum {
    pub fn value(self) -> Complex64 {
        match self {
            JNum::Complex([re, im]) => Complex64::new(re, im),
            JNum::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

pub fn complex_to_json(z: Complex64) -> JComplex {
    [z.re, z.im]
}

pub fn matrix_to_json(m: &CMatrix) -> JMatrix {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| complex_to_json(m[(i, j)])).collect()).collect()
}

pub fn matrix_from_json(rows: &JMatrix) -> Result<CMatrix, String> {
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(k) = rows.iter().position(|r| r.len() != ncols) {
        return Err(format!("row {k} has {} entries, expected {ncols}", rows[k].len()));
    }
    Ok(CMatrix::from_fn(rows.len(), ncols, |i, j| Complex64::new(rows[i][j][0], rows[i][j][1])))
}

pub fn poly_to_json(p: &Poly) -> JPoly {
    p.coeffs().iter().map(|&z| complex_to_json(z)).collect()
}

/// A rational matrix function with a common denominator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JRational {
    pub rows: usize,
    pub cols: usize,
    /// Numerator polynomials, `rows` arrays of `cols` polynomials.
    pub num: Vec<Vec<JPoly>>,
    pub den: JPoly,
}

impl JRational {
    pub fn from_mvf(f: &RationalMVF) -> Self {
        Self {
            rows: f.rows(),
            cols: f.cols(),
            num: (0..f.rows()).map(|i| (0..f.cols()).map(|j| poly_to_json(f.num(i, j))).collect()).collect(),
            den: poly_to_json(f.den()),
        }
    }

    pub fn to_mvf(&self, domain: DomainKind) -> Result<RationalMVF, RationalError> {
        let poly = |p: &JPoly| Poly::new(p.iter().map(|c| Complex64::new(c[0], c[1])).collect());
        let num = self.num.iter().flatten().map(poly).collect();
        RationalMVF::new(self.rows, self.cols, num, poly(&self.den), domain)
    }
}

/// An input rational function: a constant matrix, or numerators over a common denominator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JRationalIn {
    Rational {
        #[serde(default)]
        rows: Option<usize>,
        #[serde(default)]
        cols: Option<usize>,
        num: Vec<Vec<Vec<JNum>>>,
        den: Vec<JNum>,
    },
    Constant(Vec<Vec<JNum>>),
}

fn to_poly(c: &[JNum]) -> Poly {
    Poly::new(c.iter().map(|z| z.value()).collect())
}

impl JRationalIn {
    /// Converts to a rational function, checking that all rows have the same length.
    pub fn to_mvf(&self, domain: DomainKind) -> Result<RationalMVF, String> {
        match self {
            JRationalIn::Constant(rows) => {
                let m = matrix_from_json(
                    &rows.iter().map(|r| r.iter().map(|z| complex_to_json(z.value())).collect()).collect(),
                )?;
                Ok(RationalMVF::constant(&m, domain))
            }
            JRationalIn::Rational { rows, cols, num, den } => {
                let r = rows.unwrap_or(num.len());
                let c = cols.unwrap_or_else(|| num.first().map_or(0, Vec::len));
                if num.len() != r {
                    return Err(format!("num has {} rows, expected {r}", num.len()));
                }
                if let Some(k) = num.iter().position(|row| row.len() != c) {
                    return Err(format!("num row {k} has {} entries, expected {c}", num[k].len()));
                }
                let entries = num.iter().flatten().map(|p| to_poly(p)).collect();
                RationalMVF::new(r, c, entries, to_poly(den), domain).map_err(|e| e.to_string())
            }
        }
    }
}

/// Converts an input matrix, reporting ragged rows.
pub fn input_matrix(rows: &[Vec<JNum>]) -> Result<CMatrix, String> {
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(k) = rows.iter().position(|r| r.len() != ncols) {
        return Err(format!("row {k} has {} entries, expected {ncols}", rows[k].len()));
    }
    Ok(CMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j].value()))
}

/// Finite values only; JSON has no encoding for infinities or NaN.
pub fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}
