//! Dense embedding vectors and the cosine primitive every other module builds on.

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// Two vectors (or a vector and a graph) disagree on dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("dimension mismatch: expected {expected}, found {found}")]
pub struct DimensionMismatch {
    pub expected: usize,
    pub found: usize,
}

/// Reasons a list of components is not a valid [`EmbeddingVector`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VectorError {
    #[error("embedding vector has no components")]
    Empty,
    #[error("component {index} is not finite")]
    NonFiniteComponent { index: usize },
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("squared norm overflows f64")]
    NormOverflow,
}

/// A non-empty, finite, nonzero vector of `f64` components.
///
/// Equality and hashing are bitwise over the components, so `0.0` and `-0.0`
/// are different vectors. Storage deduplication relies on this.
#[derive(Clone)]
pub struct EmbeddingVector {
    components: Box<[f64]>,
}

impl EmbeddingVector {
    pub fn new(components: Vec<f64>) -> Result<Self, VectorError> {
        if components.is_empty() {
            return Err(VectorError::Empty);
        }
        if let Some(index) = components.iter().position(|c| !c.is_finite()) {
            return Err(VectorError::NonFiniteComponent { index });
        }
        let squared: f64 = components.iter().map(|c| c * c).sum();
        if squared == 0.0 {
            return Err(VectorError::ZeroVector);
        }
        if !squared.is_finite() {
            return Err(VectorError::NormOverflow);
        }
        Ok(Self {
            components: components.into_boxed_slice(),
        })
    }

    /// Widen single-precision components, as stored by word-vector models.
    pub fn from_f32(components: &[f32]) -> Result<Self, VectorError> {
        Self::new(components.iter().map(|&c| f64::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Multiply every component by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, VectorError> {
        Self::new(self.components.iter().map(|c| c * factor).collect())
    }

    pub fn check_dim(&self, expected: usize) -> Result<(), DimensionMismatch> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }
}

impl PartialEq for EmbeddingVector {
    fn eq(&self, other: &Self) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(other.components.iter())
                .all(|(a, b)| a.to_bits() == b.to_bits())
    }
}

impl Eq for EmbeddingVector {}

impl Hash for EmbeddingVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.components.len().hash(state);
        for c in self.components.iter() {
            c.to_bits().hash(state);
        }
    }
}

impl fmt::Debug for EmbeddingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.components.iter()).finish()
    }
}

impl TryFrom<Vec<f64>> for EmbeddingVector {
    type Error = VectorError;

    fn try_from(components: Vec<f64>) -> Result<Self, Self::Error> {
        Self::new(components)
    }
}

/// Inner product of two equal-length vectors.
pub fn dot(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64, DimensionMismatch> {
    b.check_dim(a.dim())?;
    Ok(a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| x * y)
        .sum())
}

/// Cosine of the angle between `a` and `b`, clamped to `[-1, 1]`.
///
/// The computation is symmetric in its arguments: the product `x * y` and the
/// product of the two norms are both commutative, so swapping `a` and `b`
/// yields the identical float.
pub fn cosine(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64, DimensionMismatch> {
    let numerator = dot(a, b)?;
    Ok((numerator / (a.norm() * b.norm())).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(c: &[f64]) -> EmbeddingVector {
        EmbeddingVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn rejects_invalid_components() {
        assert_eq!(EmbeddingVector::new(vec![]), Err(VectorError::Empty));
        assert_eq!(
            EmbeddingVector::new(vec![1.0, f64::NAN]),
            Err(VectorError::NonFiniteComponent { index: 1 })
        );
        assert_eq!(
            EmbeddingVector::new(vec![f64::INFINITY]),
            Err(VectorError::NonFiniteComponent { index: 0 })
        );
        assert_eq!(
            EmbeddingVector::new(vec![0.0, -0.0]),
            Err(VectorError::ZeroVector)
        );
    }

    #[test]
    fn cosine_identity_and_orthogonality() {
        let x = v(&[0.3, -1.2, 4.0]);
        assert!((cosine(&x, &x).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(
            cosine(&v(&[1.0, 0.0, 0.0]), &v(&[0.0, 1.0, 0.0])).unwrap(),
            0.0
        );
        assert_eq!(cosine(&v(&[1.0, 0.0]), &v(&[-1.0, 0.0])).unwrap(), -1.0);
    }

    #[test]
    fn cosine_dimension_mismatch() {
        assert_eq!(
            cosine(&v(&[1.0, 0.0]), &v(&[1.0, 0.0, 0.0])),
            Err(DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn equality_is_bitwise() {
        assert_ne!(v(&[1.0, 0.0]), v(&[1.0, -0.0]));
        assert_eq!(v(&[1.0, 0.5]), v(&[1.0, 0.5]));
    }

    fn vec_pair(dim: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
        (
            proptest::collection::vec(-10.0f64..10.0, dim),
            proptest::collection::vec(-10.0f64..10.0, dim),
        )
    }

    proptest! {
        #[test]
        fn cosine_is_symmetric((a, b) in (1usize..32).prop_flat_map(vec_pair)) {
            prop_assume!(a.iter().any(|&c| c != 0.0) && b.iter().any(|&c| c != 0.0));
            let (a, b) = (v(&a), v(&b));
            prop_assert_eq!(cosine(&a, &b).unwrap().to_bits(), cosine(&b, &a).unwrap().to_bits());
        }

        #[test]
        fn cosine_stays_in_range((a, b) in (1usize..32).prop_flat_map(vec_pair)) {
            prop_assume!(a.iter().any(|&c| c != 0.0) && b.iter().any(|&c| c != 0.0));
            let c = cosine(&v(&a), &v(&b)).unwrap();
            prop_assert!((-1.0..=1.0).contains(&c));
        }
    }
}
