use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{C64, CPoint};

/// One term `coeff · w^powers` of a polynomial on `C^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub coeff: C64,
    pub powers: Vec<u32>,
}

/// Holomorphic polynomial on the ball, stored as a sparse list of monomials.
///
/// JSON form: `{"dimension": 2, "terms": [{"coeff": [1, 0], "powers": [1, 0]}]}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BallPolynomial {
    dimension: usize,
    terms: Vec<Monomial>,
}

#[derive(Deserialize)]
struct RawPolynomial {
    dimension: usize,
    terms: Vec<Monomial>,
}

impl<'de> Deserialize<'de> for BallPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(d)?;
        BallPolynomial::new(raw.dimension, raw.terms).map_err(serde::de::Error::custom)
    }
}

impl BallPolynomial {
    pub fn new(dimension: usize, terms: Vec<Monomial>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Shape("polynomial dimension must be positive".into()));
        }
        for t in &terms {
            if t.powers.len() != dimension {
                return Err(Error::Shape(format!(
                    "monomial has {} exponents, dimension is {dimension}",
                    t.powers.len()
                )));
            }
            if !t.coeff.re.is_finite() || !t.coeff.im.is_finite() {
                return Err(Error::Shape("non-finite coefficient".into()));
            }
        }
        Ok(Self { dimension, terms })
    }

    pub fn constant(dimension: usize, c: C64) -> Self {
        Self {
            dimension,
            terms: vec![Monomial {
                coeff: c,
                powers: vec![0; dimension],
            }],
        }
    }

    /// `w^powers` with unit coefficient.
    pub fn monomial(powers: &[u32]) -> Self {
        Self {
            dimension: powers.len(),
            terms: vec![Monomial {
                coeff: C64::new(1.0, 0.0),
                powers: powers.to_vec(),
            }],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn eval(&self, w: &[C64]) -> C64 {
        self.terms
            .iter()
            .map(|t| {
                t.powers
                    .iter()
                    .zip(w)
                    .fold(t.coeff, |acc, (&k, &x)| acc * x.powu(k))
            })
            .sum()
    }

    pub fn eval_point(&self, w: &CPoint) -> Result<C64> {
        if w.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: w.dim(),
            });
        }
        Ok(self.eval(w.coords()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.norm() == 0.0)
    }
}
